//! Fully regular maps `(G; r0, r2, r1)` and the four generator-level
//! constructions that turn them into edge-biregular maps.

use std::sync::Arc;

use crate::ebr::EdgeBiregularMap;
use crate::error::{Error, Result};
use crate::perm_group::{extend_between, Element, FiniteGroup};
use crate::presentation::{coset_enumerate, triangle_group};

/// A fully regular map: `G = ⟨r0, r1, r2⟩` with `r0 r2` an involution.
#[derive(Clone, Debug)]
pub struct RegularMap {
    group: Arc<FiniteGroup>,
    r0: Element,
    r1: Element,
    r2: Element,
}

impl RegularMap {
    pub fn new(group: Arc<FiniteGroup>, r0: Element, r1: Element, r2: Element) -> Result<Self> {
        if [r0, r1, r2].iter().any(|&e| e >= group.order()) {
            return Err(Error::NotInGroup);
        }
        for (name, e) in [("r0", r0), ("r1", r1), ("r2", r2)] {
            if !group.is_involution(e) {
                return Err(Error::InvalidMap(format!("{name} is not an involution")));
            }
        }
        if !group.commute(r0, r2) {
            return Err(Error::InvalidMap("(r0 r2)^2 is not the identity".into()));
        }
        if !group.generates(&[r0, r1, r2]) {
            return Err(Error::InvalidMap("r0, r1, r2 do not generate the group".into()));
        }
        Ok(RegularMap { group, r0, r1, r2 })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn r0(&self) -> Element {
        self.r0
    }

    pub fn r1(&self) -> Element {
        self.r1
    }

    pub fn r2(&self) -> Element {
        self.r2
    }

    /// `(k, l)`: the orders of `r1 r2` and `r0 r1`.
    pub fn map_type(&self) -> (u64, u64) {
        let g = &self.group;
        (
            g.element_order(g.mul(self.r1, self.r2)),
            g.element_order(g.mul(self.r0, self.r1)),
        )
    }

    /// `V − E + F` with `V = |G|/2k`, `E = |G|/4`, `F = |G|/2l`; semi-edges
    /// (`r0 = r2`) are not counted.
    pub fn euler_characteristic(&self) -> i64 {
        let (k, l) = self.map_type();
        let n = self.order() as i64;
        let edges = if self.r0 == self.r2 { 0 } else { n / 4 };
        n / (2 * k as i64) - edges + n / (2 * l as i64)
    }

    /// Whether `r0 ↦ r0', r1 ↦ r1', r2 ↦ r2'` extends to an isomorphism.
    pub fn is_isomorphic(&self, other: &RegularMap) -> Result<bool> {
        if self.order() != other.order() {
            return Ok(false);
        }
        Ok(extend_between(
            &self.group,
            &other.group,
            &[self.r0, self.r1, self.r2],
            &[other.r0, other.r1, other.r2],
        )?
        .is_some())
    }
}

/// Names accepted by [`regular_catalog`].
pub const CATALOG_NAMES: [&str; 9] = [
    "tetrahedron",
    "cube",
    "octahedron",
    "dodecahedron",
    "icosahedron",
    "hosohedron:m",
    "dihedron:m",
    "projective-hosohedron:m",
    "torus44:a:b-rect",
];

fn parse_param(name: &str, text: &str) -> Result<u32> {
    text.parse()
        .map_err(|_| Error::InvalidParameter(format!("bad parameter `{text}` in catalog name `{name}`")))
}

/// Builds a regular map from the full triangle group `T_{k,l}` plus extra relators.
fn triangle_quotient(k: u32, l: u32, extra: &[String], expected: usize) -> Result<RegularMap> {
    let mut presentation = triangle_group(k, l)?;
    if !extra.is_empty() {
        let extra: Vec<&str> = extra.iter().map(String::as_str).collect();
        presentation = presentation.with_relators(&extra)?;
    }
    let group = coset_enumerate(&presentation, 16 * expected)?;
    let slot = |name: &str| group.generator(name).expect("triangle group generators");
    let (r0, r1, r2) = (slot("R0"), slot("R1"), slot("R2"));
    RegularMap::new(Arc::new(group), r0, r1, r2)
}

/// Looks up a regular map by name; see [`CATALOG_NAMES`].
///
/// `torus44:a:b-rect` is the regular `{4,4}` map on the torus whose
/// translation lattice is the rectangular `a × b` lattice; it is fully
/// regular only for `a = b`, so other values are rejected. The order is `8b²`.
/// `projective-hosohedron:m` (m even) is the antipodal quotient of the
/// `2m`-valent hosohedron: one vertex of valency `m` with digonal faces.
pub fn regular_catalog(name: &str) -> Result<RegularMap> {
    let parts: Vec<&str> = name.split(':').collect();
    match parts.as_slice() {
        ["tetrahedron"] => triangle_quotient(3, 3, &[], 24),
        ["cube"] => triangle_quotient(3, 4, &[], 48),
        ["octahedron"] => triangle_quotient(4, 3, &[], 48),
        ["dodecahedron"] => triangle_quotient(3, 5, &[], 120),
        ["icosahedron"] => triangle_quotient(5, 3, &[], 120),
        ["hosohedron", m] => {
            let m = parse_param(name, m)?;
            require_at_least(name, m, 2)?;
            triangle_quotient(m, 2, &[], 4 * m as usize)
        }
        ["dihedron", m] => {
            let m = parse_param(name, m)?;
            require_at_least(name, m, 2)?;
            triangle_quotient(2, m, &[], 4 * m as usize)
        }
        ["projective-hosohedron", m] => {
            let m = parse_param(name, m)?;
            if m < 2 || m % 2 == 1 {
                return Err(Error::InvalidParameter(format!("`{name}` needs an even valency >= 2")));
            }
            triangle_quotient(m, 2, &[format!("(R1 R2)^{} R0", m / 2)], 2 * m as usize)
        }
        ["torus44", a, b] => {
            let b = b.strip_suffix("-rect").ok_or_else(|| unknown(name))?;
            let (a, b) = (parse_param(name, a)?, parse_param(name, b)?);
            if a != b || a == 0 {
                return Err(Error::InvalidParameter(format!(
                    "`{name}`: a rectangular {{4,4}} torus map is fully regular only on a square lattice (a = b >= 1)"
                )));
            }
            triangle_quotient(4, 4, &[format!("(R0 R1 R2 R1)^{b}")], 8 * (b * b) as usize)
        }
        _ => Err(unknown(name)),
    }
}

fn require_at_least(name: &str, value: u32, min: u32) -> Result<()> {
    if value < min {
        return Err(Error::InvalidParameter(format!("`{name}` needs a parameter >= {min}")));
    }
    Ok(())
}

fn unknown(name: &str) -> Error {
    Error::InvalidParameter(format!("unknown catalog map `{name}`; expected one of {}", CATALOG_NAMES.join(", ")))
}

fn ebr(r: &RegularMap, slots: [Option<Element>; 4]) -> Result<EdgeBiregularMap> {
    EdgeBiregularMap::new(Arc::clone(&r.group), slots)
}

/// Removes a disc around each vertex: `(G; r0, r2, r1, -)`.
pub fn construction1(r: &RegularMap) -> Result<EdgeBiregularMap> {
    ebr(r, [Some(r.r0), Some(r.r2), Some(r.r1), None])
}

/// Removes a disc from each face: `(G; r0, r2, -, r1)`.
pub fn construction2(r: &RegularMap) -> Result<EdgeBiregularMap> {
    ebr(r, [Some(r.r0), Some(r.r2), None, Some(r.r1)])
}

/// A semi-edge in every corner: `(G; r0, r2, r1, r1)`, type `(2k, 2l)`.
pub fn construction3(r: &RegularMap) -> Result<EdgeBiregularMap> {
    ebr(r, [Some(r.r0), Some(r.r2), Some(r.r1), Some(r.r1)])
}

/// Splits each digonal face into two digons: `(G; r0, r2, r0, r1)`.
pub fn construction4(r: &RegularMap) -> Result<EdgeBiregularMap> {
    let (_, l) = r.map_type();
    if l != 2 {
        return Err(Error::InvalidParameter(format!("faces must be digons, found face length {l}")));
    }
    ebr(r, [Some(r.r0), Some(r.r2), Some(r.r0), Some(r.r1)])
}

/// Recovers `(G; r0, r2, r1)` from a map in one of the construction shapes.
pub fn underlying_regular(m: &EdgeBiregularMap) -> Result<RegularMap> {
    let [r0, r2, rho0, rho2] = m.slots();
    let (Some(r0), Some(r2)) = (r0, r2) else {
        return Err(Error::NotAConstructionShape);
    };
    let r1 = match (rho0, rho2) {
        (Some(a), Some(b)) if a == b => a,
        (Some(a), None) | (None, Some(a)) => a,
        (Some(a), Some(b)) if a == r0 => b,
        _ => return Err(Error::NotAConstructionShape),
    };
    RegularMap::new(Arc::clone(m.group()), r0, r1, r2)
}
