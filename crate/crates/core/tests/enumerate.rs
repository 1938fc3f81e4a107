mod common;

use std::sync::Arc;

use common::{oracle_counts, oracle_isomorphic};
use ebr_core::constructions::construction3;
use ebr_core::enumerate::{
    catalog_group, catalog_names, classify_report, dedupe, dihedral_table_rows, enumerate_ebr, is_dihedral,
    pairwise_class_count, valid_quadruples, EnumerateOptions, Quadruple,
};
use ebr_core::families::dihedral_map;
use ebr_core::{EdgeBiregularMap, Error, FiniteGroup, RegularMap};

fn group(name: &str) -> Arc<FiniteGroup> {
    Arc::new(catalog_group(name).unwrap())
}

fn negative_proper() -> EnumerateOptions {
    EnumerateOptions {
        require_proper: true,
        require_distinct: true,
        chi_max: Some(-1),
        ..EnumerateOptions::default()
    }
}

/// Class count by pairwise tests against the permutation-level oracle.
fn oracle_class_count(g: &FiniteGroup, quadruples: &[Quadruple]) -> usize {
    let mut reps: Vec<Quadruple> = Vec::new();
    for q in quadruples {
        if !reps.iter().any(|r| oracle_isomorphic(g, g, r, q)) {
            reps.push(*q);
        }
    }
    reps.len()
}

#[test]
fn klein_four_has_no_distinct_proper_maps() {
    let g = group("C2^2");
    assert_eq!(g.order(), 4);
    let options = EnumerateOptions { require_proper: true, require_distinct: true, ..EnumerateOptions::default() };
    assert!(enumerate_ebr(g, &options).unwrap().is_empty());
}

#[test]
fn catalog_orders() {
    for (name, order) in [("Dih(8)", 8), ("dih(12) x C2", 24), ("Dih(6)×C2", 12), ("C2", 2), ("C2^3", 8)] {
        let g = catalog_group(name).unwrap();
        assert_eq!(g.order(), order, "{name}");
    }
    assert_eq!(catalog_names().len(), 51);
    for bad in ["Dih(7)", "Dih(50)", "C2^4", "Sym(3)", "Dih(8)xC3"] {
        assert!(matches!(catalog_group(bad), Err(Error::InvalidParameter(_))), "{bad}");
    }
}

#[test]
fn dih8_classes() {
    let maps = enumerate_ebr(group("Dih(8)"), &negative_proper()).unwrap();
    let report = classify_report(&maps).unwrap();
    let mut found: Vec<((usize, usize), Option<u32>, usize)> =
        report.classes.iter().map(|c| (c.map_type, c.table_row, c.class_size)).collect();
    found.sort();
    assert_eq!(found.len(), 2);
    assert_eq!(found[0].1, Some(3));
    assert!(found[0].0 == (8, 4) || found[0].0 == (4, 8));
    assert_eq!(found[1], ((8, 8), Some(1), 1));
    assert_eq!(report.discrepancies().count(), 0);
    // each class contains its dual and twin and nothing else
    let total: usize = report.classes.iter().map(|c| c.class_size).sum();
    assert_eq!(total, maps.len());
}

#[test]
fn dihedral_families_match_their_rows() {
    for (m, rows) in [(4usize, vec![1, 3]), (6, vec![1, 2, 3, 4]), (10, vec![1, 2, 3, 4]), (8, vec![1, 3])] {
        let table = dihedral_table_rows(m);
        assert_eq!(table.iter().map(|r| r.0).collect::<Vec<_>>(), rows);
        for row in rows {
            let map = dihedral_map(m as u32, row).unwrap();
            let report = classify_report(&[map]).unwrap();
            assert_eq!(report.classes[0].table_row, Some(row), "m={m} row={row}");
        }
    }
}

#[test]
fn dih12_has_all_four_rows() {
    let maps = enumerate_ebr(group("Dih(12)"), &negative_proper()).unwrap();
    let report = classify_report(&maps).unwrap();
    let mut rows: Vec<u32> = report.classes.iter().map(|c| c.table_row.unwrap()).collect();
    rows.sort();
    assert_eq!(rows, vec![1, 2, 3, 4]);
}

#[test]
fn enumerated_quadruples_are_valid() {
    for name in ["Dih(8)", "Dih(6)xC2", "C2^3", "Dih(12)"] {
        let g = group(name);
        for q in valid_quadruples(&g, &EnumerateOptions::default()).unwrap() {
            let slots = q.map(Some);
            EdgeBiregularMap::new(Arc::clone(&g), slots).unwrap();
        }
    }
}

#[test]
fn filters_are_honoured() {
    let g = group("Dih(8)xC2");
    let options = EnumerateOptions { require_proper: true, chi_max: Some(0), ..EnumerateOptions::default() };
    for m in enumerate_ebr(Arc::clone(&g), &options).unwrap() {
        let inv = m.invariants().unwrap();
        assert!(inv.proper);
        assert!(inv.chi <= 0);
        assert_eq!(oracle_counts(&m).chi, inv.chi);
    }
}

#[test]
fn dedupe_matches_pairwise_oracle() {
    for name in catalog_names() {
        let g = catalog_group(&name).unwrap();
        if g.order() > 12 {
            continue;
        }
        let all = valid_quadruples(&g, &EnumerateOptions::default()).unwrap();
        let reps = dedupe(&g, &all, 1).unwrap();
        assert_eq!(reps.len(), oracle_class_count(&g, &all), "{name}");
        assert_eq!(reps.len(), pairwise_class_count(&g, &all).unwrap(), "{name}");
        // representatives are the least members of their classes
        for r in &reps {
            let least = all.iter().find(|q| oracle_isomorphic(&g, &g, r, *q)).unwrap();
            assert_eq!(least, r, "{name}");
        }
    }
}

#[test]
fn threads_do_not_change_the_result() {
    let g = group("Dih(16)xC2");
    let options = EnumerateOptions { require_proper: true, ..EnumerateOptions::default() };
    let one: Vec<_> = enumerate_ebr(Arc::clone(&g), &options).unwrap().iter().map(|m| m.slots()).collect();
    let four: Vec<_> = enumerate_ebr(g, &EnumerateOptions { threads: 4, ..options })
        .unwrap()
        .iter()
        .map(|m| m.slots())
        .collect();
    assert_eq!(one, four);
}

#[test]
fn budget_is_enforced() {
    let options = EnumerateOptions { budget: 10, ..EnumerateOptions::default() };
    let err = enumerate_ebr(group("Dih(8)"), &options).unwrap_err();
    assert!(matches!(err, Error::EnumerationBudget { budget: 10, .. }));
    assert!(err.is_resource_bound());
}

#[test]
fn twin_pairs_form_one_class() {
    let m = dihedral_map(4, 3).unwrap();
    assert!(!m.is_fully_regular().unwrap());
    let report = classify_report(&[m.clone(), m.twin()]).unwrap();
    assert_eq!(report.classes.len(), 1);
    assert_eq!(report.classes[0].class_size, 2);
}

/// A regular map of type `(8, 8)` on `Dih(16)`.
fn regular_on_dih16() -> RegularMap {
    let g = group("Dih(16)");
    let inv = g.involutions();
    for &r0 in &inv {
        for &r1 in &inv {
            for &r2 in inv.iter().filter(|&&r2| r2 != r0) {
                if let Ok(r) = RegularMap::new(Arc::clone(&g), r0, r1, r2) {
                    if r.map_type() == (8, 8) {
                        return r;
                    }
                }
            }
        }
    }
    panic!("no regular map of type (8, 8)");
}

#[test]
fn off_table_maps_are_flagged() {
    let bad = construction3(&regular_on_dih16()).unwrap();
    let inv = bad.invariants().unwrap();
    assert_eq!((inv.chi, inv.map_type()), (-2, (16, 16)));
    assert!(is_dihedral(bad.group()));
    let report = classify_report(&[bad]).unwrap();
    assert_eq!(report.discrepancies().count(), 1);
    assert_eq!(report.classes[0].table_row, None);
}

#[test]
fn report_json_shape() {
    let maps = enumerate_ebr(group("Dih(8)"), &negative_proper()).unwrap();
    let json = serde_json::to_value(classify_report(&maps).unwrap()).unwrap();
    let first = &json.as_array().unwrap()[0];
    let keys: Vec<&str> = first.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["class_size", "type", "chi", "V", "F", "orientable", "fully_regular", "table_row"]);
    assert!(first["type"].as_array().unwrap().len() == 2);
}
