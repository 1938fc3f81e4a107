//! Constructors for the classified families of edge-biregular maps.
//!
//! Toroidal and Klein bottle maps come from presentations via coset
//! enumeration. Dihedral and spherical maps are built from explicit
//! permutations.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::ebr::EdgeBiregularMap;
use crate::error::{Error, Result};
use crate::perm_group::{FiniteGroup, Permutation};
use crate::presentation::{coset_enumerate, square_grid_group};

/// A family member with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    TorusRect { a: u32, c: u32 },
    TorusRhombic { b: u32, c: u32 },
    Klein { a: u32, b: u32 },
    Dihedral { m: u32, row: u32 },
    Cycle { m: u32 },
    Dipole { m: u32, rpp: bool },
    Semistar { m: u32 },
}

impl FamilySpec {
    pub const NAMES: [&'static str; 7] = ["torus-rect", "torus-rhombic", "klein", "dihedral", "cycle", "dipole", "semistar"];

    /// Parses a family name and `key=value` parameters, e.g. `torus-rect` with `a=4,c=3`.
    pub fn parse(name: &str, params: &str) -> Result<FamilySpec> {
        let mut values = BTreeMap::new();
        for item in params.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameter(format!("expected key=value, found `{item}`")))?;
            let value: u32 = value
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("`{}` is not a non-negative integer", value.trim())))?;
            values.insert(key.trim().to_string(), value);
        }
        let mut take = |key: &str| {
            values
                .remove(key)
                .ok_or_else(|| Error::InvalidParameter(format!("family `{name}` needs parameter `{key}`")))
        };
        let spec = match name.replace('_', "-").as_str() {
            "torus-rect" => FamilySpec::TorusRect { a: take("a")?, c: take("c")? },
            "torus-rhombic" => FamilySpec::TorusRhombic { b: take("b")?, c: take("c")? },
            "klein" => FamilySpec::Klein { a: take("a")?, b: take("b")? },
            "dihedral" => FamilySpec::Dihedral { m: take("m")?, row: take("row")? },
            "cycle" => FamilySpec::Cycle { m: take("m")? },
            "dipole" => {
                let m = take("m")?;
                let rpp = take("rpp").unwrap_or(0);
                if rpp > 1 {
                    return Err(Error::InvalidParameter("rpp must be 0 or 1".into()));
                }
                FamilySpec::Dipole { m, rpp: rpp == 1 }
            }
            "semistar" => FamilySpec::Semistar { m: take("m")? },
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "unknown family `{name}`; expected one of {}",
                    FamilySpec::NAMES.join(", ")
                )))
            }
        };
        if let Some(key) = values.keys().next() {
            return Err(Error::InvalidParameter(format!("unexpected parameter `{key}` for family `{name}`")));
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<EdgeBiregularMap> {
        match *self {
            FamilySpec::TorusRect { a, c } => torus_rect(a, c),
            FamilySpec::TorusRhombic { b, c } => torus_rhombic(b, c),
            FamilySpec::Klein { a, b } => klein(a, b),
            FamilySpec::Dihedral { m, row } => dihedral_map(m, row),
            FamilySpec::Cycle { m } => sphere_family(SphereKind::Cycle, m),
            FamilySpec::Dipole { m, rpp: false } => sphere_family(SphereKind::Dipole, m),
            FamilySpec::Dipole { m, rpp: true } => projective_dipole(m),
            FamilySpec::Semistar { m } => sphere_family(SphereKind::Semistar, m),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::TorusRect { a, c } => write!(f, "torus-rect a={a},c={c}"),
            FamilySpec::TorusRhombic { b, c } => write!(f, "torus-rhombic b={b},c={c}"),
            FamilySpec::Klein { a, b } => write!(f, "klein a={a},b={b}"),
            FamilySpec::Dihedral { m, row } => write!(f, "dihedral m={m},row={row}"),
            FamilySpec::Cycle { m } => write!(f, "cycle m={m}"),
            FamilySpec::Dipole { m, rpp } => write!(f, "dipole m={m},rpp={}", u8::from(*rpp)),
            FamilySpec::Semistar { m } => write!(f, "semistar m={m}"),
        }
    }
}

fn require(cond: bool, message: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(message()))
    }
}

/// Enumerates the square-grid group with extra relators and checks the order.
fn grid_quotient(extra: &[String], expected: usize) -> Result<EdgeBiregularMap> {
    let extra: Vec<&str> = extra.iter().map(String::as_str).collect();
    let presentation = square_grid_group().with_relators(&extra)?;
    let group = coset_enumerate(&presentation, 16 * expected)?;
    if group.order() != expected {
        return Err(Error::InvalidMap(format!(
            "enumerated order {} differs from the expected {expected}",
            group.order()
        )));
    }
    let slot = |name: &str| group.generator(name).expect("square grid generators");
    let slots = [slot("r0"), slot("r2"), slot("p0"), slot("p2")];
    EdgeBiregularMap::closed(Arc::new(group), slots[0], slots[1], slots[2], slots[3])
}

/// Proper toroidal map on a rectangular lattice, `|H| = 4ac`.
pub fn torus_rect(a: u32, c: u32) -> Result<EdgeBiregularMap> {
    require(a >= 1 && c >= 1, || format!("torus-rect needs a, c >= 1, got a={a}, c={c}"))?;
    grid_quotient(&[format!("(r0 p2)^{a}"), format!("(r2 p0)^{c}")], 4 * a as usize * c as usize)
}

/// Proper toroidal map on a rhombic lattice, `|H| = 8bc`.
pub fn torus_rhombic(b: u32, c: u32) -> Result<EdgeBiregularMap> {
    require(b >= 1 && c >= 1, || format!("torus-rhombic needs b, c >= 1, got b={b}, c={c}"))?;
    grid_quotient(
        &[format!("(r0 p2)^{}", 2 * b), format!("(r0 p2)^{b} (r2 p0)^{c}")],
        8 * b as usize * c as usize,
    )
}

/// Map on the Klein bottle, `|H| = 4ab` with `b ∈ {1, 2}`.
pub fn klein(a: u32, b: u32) -> Result<EdgeBiregularMap> {
    require(a >= 1, || format!("klein needs a >= 1, got a={a}"))?;
    require(b == 1 || b == 2, || format!("klein needs b in {{1, 2}}, got b={b}"))?;
    grid_quotient(&[format!("(r2 p0)^{a} r0"), format!("(r0 p2)^{b}")], 4 * a as usize * b as usize)
}

/// The two generating reflections `s: x ↦ −x` and `t: x ↦ 1 − x` of the
/// dihedral group of order `2n`, acting regularly on `Z_n × {0, 1}` as
/// `(x, e) ↦ (a − x, 1 − e)`, plus `extra` fixed points.
pub(crate) fn regular_dihedral(n: u32, extra: u32) -> (Permutation, Permutation) {
    let point = |x: u32, e: u32| 2 * x + e;
    let reflection = |a: u32| {
        let mut images: Vec<u32> = (0..2 * n + extra).collect();
        for x in 0..n {
            for e in 0..2 {
                images[point(x, e) as usize] = point((a + n - x) % n, 1 - e);
            }
        }
        Permutation::from_images(images).expect("reflection is a bijection")
    };
    (reflection(0), reflection(1 % n))
}

/// Swaps the two points after `degree - 2`.
fn extra_swap(degree: u32) -> Permutation {
    Permutation::from_cycles(degree as usize, &[&[degree - 2, degree - 1]]).expect("valid transposition")
}

/// Generates `H` from `(s, t, z)` and maps slot words over them to elements.
fn from_words(gens: Vec<(&str, Permutation)>, slots: [&[&str]; 4]) -> Result<EdgeBiregularMap> {
    let group = FiniteGroup::closure_named(
        gens.into_iter().map(|(n, p)| (n.to_string(), p)).collect(),
        crate::perm_group::DEFAULT_ELEMENT_BOUND,
    )?;
    let element = |word: &[&str]| {
        let factors: Vec<usize> = word.iter().map(|n| group.generator(n).expect("declared generator")).collect();
        group.product(&factors)
    };
    let s = slots.map(element);
    EdgeBiregularMap::closed(Arc::new(group), s[0], s[1], s[2], s[3])
}

/// The four dihedral rows of hyperbolic maps with `|H| = 2m`.
///
/// Rows 1 and 3 use the dihedral group of order `2m`; rows 2 and 4 use the
/// dihedral group of order `m` times `C2`, which is isomorphic to it when
/// `m/2` is odd.
pub fn dihedral_map(m: u32, row: u32) -> Result<EdgeBiregularMap> {
    require(m >= 4 && m.is_multiple_of(2), || format!("dihedral rows need m even and m >= 4, got m={m}"))?;
    require((1..=4).contains(&row), || format!("row must be 1..=4, got {row}"))?;
    if row == 2 || row == 4 {
        require((m / 2) % 2 == 1, || format!("row {row} needs m/2 odd, got m={m}"))?;
    }
    match row {
        1 | 3 => {
            let (s, t) = regular_dihedral(m, 0);
            // z = (s t)^{m/2} is the central involution
            let z = s.then(&t).pow(i64::from(m / 2));
            let gens = vec![("s", s), ("t", t), ("z", z)];
            if row == 1 {
                from_words(gens, [&["s"], &["s", "z"], &["t"], &["t", "z"]])
            } else {
                from_words(gens, [&["z", "s"], &["s"], &["z"], &["t"]])
            }
        }
        _ => {
            let (s, t) = regular_dihedral(m / 2, 2);
            let z = extra_swap(m + 2);
            let gens = vec![("s", s), ("t", t), ("z", z)];
            if row == 2 {
                from_words(gens, [&["s"], &["s", "z"], &["t"], &["t", "z"]])
            } else {
                from_words(gens, [&["z", "s"], &["s"], &["z"], &["t"]])
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SphereKind {
    /// A `2m`-cycle, type `(2, 2m)`.
    Cycle,
    /// Two vertices joined by `2m` edges, type `(2m, 2)`.
    Dipole,
    /// One vertex with `2m` semi-edges.
    Semistar,
}

/// Spherical maps with parameter `m >= 1`.
pub fn sphere_family(kind: SphereKind, m: u32) -> Result<EdgeBiregularMap> {
    require(m >= 1, || format!("sphere families need m >= 1, got m={m}"))?;
    match kind {
        SphereKind::Cycle | SphereKind::Dipole => {
            let (s, t) = regular_dihedral(m, 2);
            let z = extra_swap(2 * m + 2);
            let gens = vec![("s", s), ("t", t), ("z", z)];
            if kind == SphereKind::Cycle {
                from_words(gens, [&["s"], &["z"], &["t"], &["z"]])
            } else {
                from_words(gens, [&["z"], &["s"], &["z"], &["t"]])
            }
        }
        SphereKind::Semistar => {
            let (s, t) = regular_dihedral(m, 0);
            from_words(vec![("s", s), ("t", t)], [&["s"], &["s"], &["t"], &["t"]])
        }
    }
}

/// One vertex of valency `2m` with `m` digonal faces on the projective
/// plane; `m` must be even.
pub fn projective_dipole(m: u32) -> Result<EdgeBiregularMap> {
    require(m >= 2 && m.is_multiple_of(2), || format!("the projective dipole needs m even and m >= 2, got m={m}"))?;
    let (s, t) = regular_dihedral(m, 0);
    let z = s.then(&t).pow(i64::from(m / 2));
    from_words(vec![("s", s), ("t", t), ("z", z)], [&["z"], &["s"], &["z"], &["t"]])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_dihedral_orders() {
        for n in 1..10 {
            let (s, t) = regular_dihedral(n, 0);
            let g = FiniteGroup::closure(vec![s, t]).unwrap();
            assert_eq!(g.order(), 2 * n as usize);
        }
    }

    #[test]
    fn parse_specs() {
        assert_eq!(FamilySpec::parse("torus-rect", "a=4, c=3").unwrap(), FamilySpec::TorusRect { a: 4, c: 3 });
        assert_eq!(FamilySpec::parse("dipole", "m=2,rpp=1").unwrap(), FamilySpec::Dipole { m: 2, rpp: true });
        assert!(FamilySpec::parse("torus-rect", "a=4").is_err());
        assert!(FamilySpec::parse("torus-rect", "a=4,c=3,d=1").is_err());
        assert!(FamilySpec::parse("moebius", "").is_err());
        assert!(FamilySpec::parse("klein", "a=x,b=1").is_err());
        let spec = FamilySpec::Klein { a: 5, b: 2 };
        let text = spec.to_string();
        let (name, params) = text.split_once(' ').unwrap();
        assert_eq!(FamilySpec::parse(name, params).unwrap(), spec);
    }

    #[test]
    fn parameter_domains() {
        assert!(torus_rect(0, 1).is_err());
        assert!(klein(3, 3).is_err());
        assert!(dihedral_map(6, 1).is_ok());
        assert!(dihedral_map(8, 2).is_err());
        assert!(dihedral_map(5, 1).is_err());
        assert!(dihedral_map(2, 1).is_err());
        assert!(dihedral_map(6, 5).is_err());
        assert!(projective_dipole(3).is_err());
        assert!(sphere_family(SphereKind::Cycle, 0).is_err());
    }

    #[test]
    fn smallest_torus_is_degenerate() {
        let m = torus_rect(1, 1).unwrap();
        let inv = m.invariants().unwrap();
        assert_eq!((inv.order, inv.chi), (4, 0));
        assert!(inv.proper && !inv.distinct_generators);
    }
}
