//! Edge-biregular maps `(H; r0, r2, ρ0, ρ2)`.
//!
//! `H` is the colour-preserving automorphism group, acting regularly on the
//! corners of the map, so its elements are identified with corners. A slot
//! may be absent, which places part of the map on a surface boundary.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm_group::{extend_between, Element, FiniteGroup, Permutation};

/// The four generator slots, in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    R0,
    R2,
    Rho0,
    Rho2,
}

impl Slot {
    pub const ALL: [Slot; 4] = [Slot::R0, Slot::R2, Slot::Rho0, Slot::Rho2];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Slot::R0 => "r0",
            Slot::R2 => "r2",
            Slot::Rho0 => "rho0",
            Slot::Rho2 => "rho2",
        }
    }
}

/// How the corner regions meet the surface boundary, named by the absent slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryType {
    /// `ρ2` absent: unshaded edges lie along the boundary.
    A,
    /// `r2` absent: the twin of type (a).
    B,
    /// `r0` absent: the twin of type (d).
    C,
    /// `ρ0` absent: unshaded semi-edges run to the boundary.
    D,
    /// Two slots absent.
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegeneracyClass {
    Proper,
    ShadedSemiEdges,
    UnshadedSemiEdges,
    Semistar,
    Boundary(BoundaryType),
}

impl DegeneracyClass {
    pub fn as_str(self) -> &'static str {
        match self {
            DegeneracyClass::Proper => "proper",
            DegeneracyClass::ShadedSemiEdges => "shaded-semi-edges",
            DegeneracyClass::UnshadedSemiEdges => "unshaded-semi-edges",
            DegeneracyClass::Semistar => "semistar",
            DegeneracyClass::Boundary(BoundaryType::A) => "boundary-a",
            DegeneracyClass::Boundary(BoundaryType::B) => "boundary-b",
            DegeneracyClass::Boundary(BoundaryType::C) => "boundary-c",
            DegeneracyClass::Boundary(BoundaryType::D) => "boundary-d",
            DegeneracyClass::Boundary(BoundaryType::Mixed) => "boundary-mixed",
        }
    }
}

impl fmt::Display for DegeneracyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for DegeneracyClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Proper,
    Semi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeClass {
    pub count: usize,
    pub kind: EdgeKind,
}

/// Closed-surface invariants. Serializes with a fixed key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapInvariants {
    pub order: usize,
    pub k: usize,
    pub l: usize,
    #[serde(rename = "V")]
    pub vertices: usize,
    #[serde(rename = "F")]
    pub faces: usize,
    pub edges_shaded: EdgeClass,
    pub edges_unshaded: EdgeClass,
    pub chi: i64,
    pub orientable: bool,
    pub genus: i64,
    pub fully_regular: bool,
    pub proper: bool,
    pub distinct_generators: bool,
    pub degeneracy_class: DegeneracyClass,
}

impl MapInvariants {
    pub fn map_type(&self) -> (usize, usize) {
        (self.k, self.l)
    }

    /// `|H| (1/k − 1/2 + 1/l)` as an exact rational `(numerator, denominator)`, reduced.
    pub fn euler_poincare(&self) -> (i64, i64) {
        let (n, k, l) = (self.order as i64, self.k as i64, self.l as i64);
        let num = n * (2 * l - k * l + 2 * k);
        let den = 2 * k * l;
        let g = gcd(num.abs(), den);
        (num / g, den / g)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Group-level data for a map with at least one absent slot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryReport {
    pub order: usize,
    pub boundary_type: DegeneracyClass,
    pub absent: Vec<&'static str>,
    /// `|⟨r0, ρ0⟩|` when both are present.
    pub face_stabilizer_order: Option<usize>,
    /// `|⟨r2, ρ2⟩|` when both are present.
    pub vertex_stabilizer_order: Option<usize>,
    /// `(3, |⟨r0, ρ0⟩|)` for types (a) and (b) when the present colour has proper edges.
    #[serde(rename = "type")]
    pub map_type: Option<(usize, usize)>,
}

/// An edge-biregular map: a group plus four slots, each present or absent.
#[derive(Clone)]
pub struct EdgeBiregularMap {
    group: Arc<FiniteGroup>,
    slots: [Option<Element>; 4],
}

impl EdgeBiregularMap {
    /// Validates slots against the group.
    pub fn new(group: Arc<FiniteGroup>, slots: [Option<Element>; 4]) -> Result<Self> {
        let present: Vec<Element> = slots.iter().flatten().copied().collect();
        if present.iter().any(|&e| e >= group.order()) {
            return Err(Error::NotInGroup);
        }
        if present.len() < 2 {
            return Err(Error::InvalidMap("at least two slots must be present".into()));
        }
        for slot in Slot::ALL {
            if let Some(e) = slots[slot.index()] {
                if !group.is_involution(e) {
                    return Err(Error::InvalidMap(format!("{} is not an involution", slot.name())));
                }
            }
        }
        for (a, b, what) in [(0, 1, "(r0 r2)^2"), (2, 3, "(rho0 rho2)^2")] {
            if let (Some(x), Some(y)) = (slots[a], slots[b]) {
                if !group.commute(x, y) {
                    return Err(Error::InvalidMap(format!("{what} is not the identity")));
                }
            }
        }
        if !group.generates(&present) {
            return Err(Error::InvalidMap("present slots do not generate the group".into()));
        }
        Ok(EdgeBiregularMap { group, slots })
    }

    /// Builds a closed-surface map from four present slots.
    pub fn closed(group: Arc<FiniteGroup>, r0: Element, r2: Element, rho0: Element, rho2: Element) -> Result<Self> {
        EdgeBiregularMap::new(group, [Some(r0), Some(r2), Some(rho0), Some(rho2)])
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn slots(&self) -> [Option<Element>; 4] {
        self.slots
    }

    pub fn slot(&self, slot: Slot) -> Option<Element> {
        self.slots[slot.index()]
    }

    pub fn is_closed(&self) -> bool {
        self.slots.iter().all(Option::is_some)
    }

    fn closed_slots(&self) -> Result<[Element; 4]> {
        match self.slots {
            [Some(a), Some(b), Some(c), Some(d)] => Ok([a, b, c, d]),
            _ => Err(Error::BoundaryMap),
        }
    }

    pub fn degeneracy_class(&self) -> DegeneracyClass {
        let absent: Vec<Slot> = Slot::ALL.into_iter().filter(|s| self.slot(*s).is_none()).collect();
        match absent.as_slice() {
            [] => {}
            [Slot::Rho2] => return DegeneracyClass::Boundary(BoundaryType::A),
            [Slot::R2] => return DegeneracyClass::Boundary(BoundaryType::B),
            [Slot::R0] => return DegeneracyClass::Boundary(BoundaryType::C),
            [Slot::Rho0] => return DegeneracyClass::Boundary(BoundaryType::D),
            _ => return DegeneracyClass::Boundary(BoundaryType::Mixed),
        }
        let [r0, r2, rho0, rho2] = self.slots.map(Option::unwrap);
        match (r0 == r2, rho0 == rho2) {
            (true, true) => DegeneracyClass::Semistar,
            (true, false) => DegeneracyClass::ShadedSemiEdges,
            (false, true) => DegeneracyClass::UnshadedSemiEdges,
            (false, false) => DegeneracyClass::Proper,
        }
    }

    pub fn is_proper(&self) -> bool {
        self.degeneracy_class() == DegeneracyClass::Proper
    }

    /// Whether the four slot elements are pairwise distinct.
    pub fn has_distinct_generators(&self) -> bool {
        match self.closed_slots() {
            Ok(s) => (0..4).all(|i| (i + 1..4).all(|j| s[i] != s[j])),
            Err(_) => false,
        }
    }

    /// Valency `|⟨r2, ρ2⟩|`.
    pub fn valency(&self) -> Result<usize> {
        let s = self.closed_slots()?;
        Ok(self.group.subgroup_order(&[s[1], s[3]]))
    }

    /// Face length `|⟨r0, ρ0⟩|`.
    pub fn face_length(&self) -> Result<usize> {
        let s = self.closed_slots()?;
        Ok(self.group.subgroup_order(&[s[0], s[2]]))
    }

    pub fn invariants(&self) -> Result<MapInvariants> {
        let [r0, r2, rho0, rho2] = self.closed_slots()?;
        let n = self.order();
        let k = self.group.subgroup_order(&[r2, rho2]);
        let l = self.group.subgroup_order(&[r0, rho0]);
        let edge_class = |a: Element, b: Element| {
            if a == b {
                EdgeClass {
                    count: n / 2,
                    kind: EdgeKind::Semi,
                }
            } else {
                EdgeClass {
                    count: n / 4,
                    kind: EdgeKind::Proper,
                }
            }
        };
        let edges_shaded = edge_class(r0, r2);
        let edges_unshaded = edge_class(rho0, rho2);
        let proper_edges: usize = [edges_shaded, edges_unshaded]
            .iter()
            .filter(|e| e.kind == EdgeKind::Proper)
            .map(|e| e.count)
            .sum();
        let (vertices, faces) = (n / k, n / l);
        let chi = vertices as i64 - proper_edges as i64 + faces as i64;
        let orientable = self.is_orientable()?;
        let genus = if orientable { (2 - chi) / 2 } else { 2 - chi };
        Ok(MapInvariants {
            order: n,
            k,
            l,
            vertices,
            faces,
            edges_shaded,
            edges_unshaded,
            chi,
            orientable,
            genus,
            fully_regular: self.is_fully_regular()?,
            proper: r0 != r2 && rho0 != rho2,
            distinct_generators: self.has_distinct_generators(),
            degeneracy_class: self.degeneracy_class(),
        })
    }

    /// Two-colours the Cayley graph of `H` on the distinct slot elements.
    pub fn is_orientable(&self) -> Result<bool> {
        let mut gens: Vec<Element> = self.closed_slots()?.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let n = self.order();
        let mut colour = vec![u8::MAX; n];
        colour[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(g) = queue.pop_front() {
            for &s in &gens {
                let h = self.group.mul(g, s);
                if colour[h] == u8::MAX {
                    colour[h] = 1 - colour[g];
                    queue.push_back(h);
                } else if colour[h] == colour[g] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Group-level summary for maps with absent slots.
    pub fn boundary_report(&self) -> Result<BoundaryReport> {
        let class = self.degeneracy_class();
        let DegeneracyClass::Boundary(kind) = class else {
            return Err(Error::InvalidMap("map has no absent slot".into()));
        };
        let pair = |a: Slot, b: Slot| match (self.slot(a), self.slot(b)) {
            (Some(x), Some(y)) => Some(self.group.subgroup_order(&[x, y])),
            _ => None,
        };
        let face = pair(Slot::R0, Slot::Rho0);
        let map_type = match kind {
            BoundaryType::A if self.slot(Slot::R0) != self.slot(Slot::R2) => face.map(|l| (3, l)),
            BoundaryType::B if self.slot(Slot::Rho0) != self.slot(Slot::Rho2) => face.map(|l| (3, l)),
            _ => None,
        };
        Ok(BoundaryReport {
            order: self.order(),
            boundary_type: class,
            absent: Slot::ALL
                .into_iter()
                .filter(|s| self.slot(*s).is_none())
                .map(Slot::name)
                .collect(),
            face_stabilizer_order: face,
            vertex_stabilizer_order: pair(Slot::R2, Slot::Rho2),
            map_type,
        })
    }

    /// The same map with the edge colours exchanged: `(ρ0, ρ2, r0, r2)`.
    pub fn twin(&self) -> EdgeBiregularMap {
        let [a, b, c, d] = self.slots;
        EdgeBiregularMap {
            group: Arc::clone(&self.group),
            slots: [c, d, a, b],
        }
    }

    /// Vertex and face roles exchanged: `(r2, r0, ρ2, ρ0)`.
    pub fn dual(&self) -> EdgeBiregularMap {
        let [a, b, c, d] = self.slots;
        EdgeBiregularMap {
            group: Arc::clone(&self.group),
            slots: [b, a, d, c],
        }
    }

    /// Whether `rᵢ ↔ ρᵢ` extends to an automorphism of `H`.
    pub fn is_fully_regular(&self) -> Result<bool> {
        let [r0, r2, rho0, rho2] = self.closed_slots()?;
        Ok(self
            .group
            .extend_generator_map(&[r0, r2, rho0, rho2], &[rho0, rho2, r0, r2])?
            .is_some())
    }

    /// Right-regular actions `ℛ0, ℛ2, 𝒫0, 𝒫2` of the slot elements on the corners.
    pub fn monodromy(&self) -> Result<[Permutation; 4]> {
        let s = self.closed_slots()?;
        Ok(s.map(|x| self.group.right_multiplication(x)))
    }

    /// The automorphism action of `x ∈ H` on the corners.
    pub fn automorphism_action(&self, x: Element) -> Permutation {
        self.group.left_multiplication(x)
    }

    /// Present slot elements in slot order.
    pub fn present_slots(&self) -> Vec<Element> {
        self.slots.iter().flatten().copied().collect()
    }

    fn presence(&self) -> [bool; 4] {
        self.slots.map(|s| s.is_some())
    }
}

/// Whether the slot-wise correspondence extends to a group isomorphism.
pub fn are_isomorphic(m1: &EdgeBiregularMap, m2: &EdgeBiregularMap) -> Result<bool> {
    if m1.presence() != m2.presence() {
        return Err(Error::SlotPatternMismatch);
    }
    if m1.order() != m2.order() {
        return Ok(false);
    }
    Ok(extend_between(&m1.group, &m2.group, &m1.present_slots(), &m2.present_slots())?.is_some())
}

impl fmt::Debug for EdgeBiregularMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EdgeBiregularMap")
            .field("order", &self.order())
            .field("slots", &self.slots)
            .finish()
    }
}

impl PartialEq for EdgeBiregularMap {
    /// Slot-for-slot equality over the same group instance.
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.slots == other.slots
    }
}
