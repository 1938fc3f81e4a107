//! Graphviz output for edge-biregular maps.

use std::fmt::Write;

use crate::ebr::{EdgeBiregularMap, Slot};
use crate::error::{Error, Result};

fn colour(slot: Slot) -> &'static str {
    match slot {
        Slot::R0 => "red",
        Slot::R2 => "green",
        Slot::Rho0 => "blue",
        Slot::Rho2 => "yellow",
    }
}

/// The Cayley graph on corners, one edge colour per present slot.
pub fn corners_dot(m: &EdgeBiregularMap) -> String {
    let g = m.group();
    let mut out = String::from("graph corners {\n  node [shape=point];\n");
    for h in 0..g.order() {
        writeln!(out, "  c{h};").unwrap();
    }
    for slot in Slot::ALL {
        let Some(x) = m.slot(slot) else { continue };
        for h in 0..g.order() {
            let hx = g.mul(h, x);
            if h < hx {
                writeln!(out, "  c{h} -- c{hx} [color={}, label=\"{}\"];", colour(slot), slot.name()).unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Vertices and edges of the map. Shaded edges are solid, unshaded dashed;
/// semi-edges end in a point.
pub fn underlying_dot(m: &EdgeBiregularMap) -> Result<String> {
    let [r0, r2, rho0, rho2] = m.slots().map(|s| s.ok_or(Error::BoundaryMap));
    let (r0, r2, rho0, rho2) = (r0?, r2?, rho0?, rho2?);
    let g = m.group();
    let n = g.order();
    let mut vertex = vec![usize::MAX; n];
    let mut count = 0;
    for h in 0..n {
        if vertex[h] == usize::MAX {
            for c in g.subgroup(&[r2, rho2]) {
                vertex[g.mul(h, c)] = count;
            }
            count += 1;
        }
    }
    let mut out = String::from("graph map {\n");
    for v in 0..count {
        writeln!(out, "  v{v};").unwrap();
    }
    let mut seen = vec![false; n];
    let mut semi = 0;
    for (along, across, style) in [(r0, r2, "solid"), (rho0, rho2, "dashed")] {
        seen.iter_mut().for_each(|s| *s = false);
        for h in 0..n {
            if seen[h] {
                continue;
            }
            for c in g.subgroup(&[along, across]) {
                seen[g.mul(h, c)] = true;
            }
            let a = vertex[h];
            if along == across {
                writeln!(out, "  s{semi} [shape=point];\n  v{a} -- s{semi} [style={style}];").unwrap();
                semi += 1;
            } else {
                let b = vertex[g.mul(h, along)];
                writeln!(out, "  v{a} -- v{b} [style={style}];").unwrap();
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}
