//! Arbitrary closed maps as flag systems, and alternate-edge-colourability.
//!
//! `s0` changes the vertex of a flag, `s1` the edge and `s2` the face. Edges
//! are orbits of `⟨s0, s2⟩`, vertices of `⟨s1, s2⟩` and faces of `⟨s0, s1⟩`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::ebr::{DegeneracyClass, EdgeBiregularMap};
use crate::error::{Error, Result};
use crate::perm_group::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFlagMap", into = "RawFlagMap")]
pub struct FlagMap {
    s0: Permutation,
    s1: Permutation,
    s2: Permutation,
}

#[derive(Serialize, Deserialize)]
struct RawFlagMap {
    flag_count: usize,
    s0: Permutation,
    s1: Permutation,
    s2: Permutation,
}

impl TryFrom<RawFlagMap> for FlagMap {
    type Error = Error;

    fn try_from(raw: RawFlagMap) -> Result<Self> {
        for s in [&raw.s0, &raw.s1, &raw.s2] {
            if s.degree() != raw.flag_count {
                return Err(Error::DegreeMismatch {
                    expected: raw.flag_count,
                    found: s.degree(),
                });
            }
        }
        FlagMap::new(raw.s0, raw.s1, raw.s2)
    }
}

impl From<FlagMap> for RawFlagMap {
    fn from(m: FlagMap) -> Self {
        RawFlagMap {
            flag_count: m.flag_count(),
            s0: m.s0,
            s1: m.s1,
            s2: m.s2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeColour {
    Shaded,
    Unshaded,
}

impl EdgeColour {
    fn other(self) -> EdgeColour {
        match self {
            EdgeColour::Shaded => EdgeColour::Unshaded,
            EdgeColour::Unshaded => EdgeColour::Shaded,
        }
    }
}

/// An alternate-edge-colouring. Edges are numbered in order of their smallest flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColouring {
    pub edge_of_flag: Vec<usize>,
    pub colours: Vec<EdgeColour>,
}

impl EdgeColouring {
    pub fn count(&self, colour: EdgeColour) -> usize {
        self.colours.iter().filter(|&&c| c == colour).count()
    }

    pub fn colour_of_flag(&self, flag: usize) -> EdgeColour {
        self.colours[self.edge_of_flag[flag]]
    }
}

/// Labels each point by its orbit under `gens`, numbering orbits by smallest point.
fn orbits(n: usize, gens: &[&Permutation]) -> (Vec<usize>, usize) {
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = count;
        let mut stack = vec![start as u32];
        while let Some(p) = stack.pop() {
            for g in gens {
                let q = g.apply(p);
                if label[q as usize] == usize::MAX {
                    label[q as usize] = count;
                    stack.push(q);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

impl FlagMap {
    /// Checks that the three permutations describe a closed map without semi-edges.
    pub fn new(s0: Permutation, s1: Permutation, s2: Permutation) -> Result<Self> {
        let n = s0.degree();
        if n == 0 {
            return Err(Error::InvalidFlagMap("no flags".into()));
        }
        for (name, s) in [("s0", &s0), ("s1", &s1), ("s2", &s2)] {
            if s.degree() != n {
                return Err(Error::DegreeMismatch {
                    expected: n,
                    found: s.degree(),
                });
            }
            if !s.then(s).is_identity() {
                return Err(Error::InvalidFlagMap(format!("{name} is not an involution")));
            }
        }
        let s02 = s0.then(&s2);
        if !s02.then(&s02).is_identity() || (0..n as u32).any(|f| s02.apply(f) == f) {
            return Err(Error::InvalidFlagMap("s0 s2 is not a fixed-point-free involution".into()));
        }
        Ok(FlagMap { s0, s1, s2 })
    }

    /// Builds the flag system of an oriented map.
    ///
    /// Darts are `0..2e`, dart `2i` and `2i + 1` being the two ends of edge `i`.
    /// `next[d]` is the dart following `d` counter-clockwise around its vertex.
    /// Flag `2d` lies on the side of `d` towards `next[d]`, flag `2d + 1` on the
    /// other side.
    pub fn from_rotation_system(next: &[usize]) -> Result<Self> {
        let darts = next.len();
        if darts == 0 || darts % 2 == 1 {
            return Err(Error::InvalidFlagMap("dart count must be even and positive".into()));
        }
        let rotation = Permutation::from_images(next.iter().map(|&d| d as u32).collect())
            .map_err(|_| Error::InvalidFlagMap("rotation is not a permutation of the darts".into()))?;
        let plus = |d: usize| 2 * d as u32;
        let minus = |d: usize| 2 * d as u32 + 1;
        let mut s0 = vec![0; 2 * darts];
        let mut s1 = vec![0; 2 * darts];
        let mut s2 = vec![0; 2 * darts];
        for d in 0..darts {
            let opposite = d ^ 1;
            s2[plus(d) as usize] = minus(d);
            s2[minus(d) as usize] = plus(d);
            s0[plus(d) as usize] = minus(opposite);
            s0[minus(opposite) as usize] = plus(d);
            let r = rotation.apply(d as u32) as usize;
            s1[plus(d) as usize] = minus(r);
            s1[minus(r) as usize] = plus(d);
        }
        FlagMap::new(
            Permutation::from_images(s0)?,
            Permutation::from_images(s1)?,
            Permutation::from_images(s2)?,
        )
    }

    pub fn flag_count(&self) -> usize {
        self.s0.degree()
    }

    pub fn s0(&self) -> &Permutation {
        &self.s0
    }

    pub fn s1(&self) -> &Permutation {
        &self.s1
    }

    pub fn s2(&self) -> &Permutation {
        &self.s2
    }

    pub fn is_connected(&self) -> bool {
        orbits(self.flag_count(), &[&self.s0, &self.s1, &self.s2]).1 == 1
    }

    fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Flag-to-edge labelling and the number of edges.
    pub fn edges(&self) -> (Vec<usize>, usize) {
        orbits(self.flag_count(), &[&self.s0, &self.s2])
    }

    pub fn vertex_count(&self) -> usize {
        orbits(self.flag_count(), &[&self.s1, &self.s2]).1
    }

    pub fn edge_count(&self) -> usize {
        self.flag_count() / 4
    }

    pub fn face_count(&self) -> usize {
        orbits(self.flag_count(), &[&self.s0, &self.s1]).1
    }

    pub fn euler_characteristic(&self) -> Result<i64> {
        self.require_connected()?;
        Ok(self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64)
    }

    /// Whether the flags split into two classes exchanged by each `sᵢ`.
    pub fn is_orientable(&self) -> Result<bool> {
        self.require_connected()?;
        let n = self.flag_count();
        let mut side = vec![u8::MAX; n];
        side[0] = 0;
        let mut queue = VecDeque::from([0u32]);
        while let Some(f) = queue.pop_front() {
            for s in [&self.s0, &self.s1, &self.s2] {
                let g = s.apply(f) as usize;
                if side[g] == u8::MAX {
                    side[g] = 1 - side[f as usize];
                    queue.push_back(g as u32);
                } else if side[g] == side[f as usize] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Two-colours the medial adjacency: the edges of `f` and `s1 f` are
    /// consecutive around both a vertex and a face. The edge through flag 0
    /// is shaded.
    pub fn alternate_edge_colouring(&self) -> Result<Option<EdgeColouring>> {
        self.require_connected()?;
        let n = self.flag_count();
        let (edge_of_flag, edge_count) = self.edges();
        let mut neighbours = vec![Vec::new(); edge_count];
        for f in 0..n {
            let (a, b) = (edge_of_flag[f], edge_of_flag[self.s1.apply(f as u32) as usize]);
            if a == b {
                return Ok(None);
            }
            neighbours[a].push(b);
        }
        let mut colours: Vec<Option<EdgeColour>> = vec![None; edge_count];
        colours[0] = Some(EdgeColour::Shaded);
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            let c = colours[e].expect("queued edges are coloured");
            for &x in &neighbours[e] {
                match colours[x] {
                    None => {
                        colours[x] = Some(c.other());
                        queue.push_back(x);
                    }
                    Some(d) if d == c => return Ok(None),
                    Some(_) => {}
                }
            }
        }
        Ok(Some(EdgeColouring {
            edge_of_flag,
            colours: colours.into_iter().map(|c| c.expect("flag system is connected")).collect(),
        }))
    }
}

/// The flag system of a proper closed map: flags `2h` (shaded) and `2h + 1`
/// (unshaded) form the corner `h`.
pub fn ebr_to_flagmap(m: &EdgeBiregularMap) -> Result<FlagMap> {
    match m.degeneracy_class() {
        DegeneracyClass::Proper => {}
        DegeneracyClass::Boundary(_) => return Err(Error::BoundaryMap),
        _ => return Err(Error::SemiEdges),
    }
    let [r0, r2, rho0, rho2] = m.slots().map(|s| s.expect("closed map"));
    let group = m.group();
    let n = group.order();
    let mut s0 = vec![0u32; 2 * n];
    let mut s1 = vec![0u32; 2 * n];
    let mut s2 = vec![0u32; 2 * n];
    for h in 0..n {
        let (shaded, unshaded) = (2 * h, 2 * h + 1);
        s1[shaded] = unshaded as u32;
        s1[unshaded] = shaded as u32;
        s0[shaded] = 2 * group.mul(h, r0) as u32;
        s2[shaded] = 2 * group.mul(h, r2) as u32;
        s0[unshaded] = 2 * group.mul(h, rho0) as u32 + 1;
        s2[unshaded] = 2 * group.mul(h, rho2) as u32 + 1;
    }
    FlagMap::new(
        Permutation::from_images(s0)?,
        Permutation::from_images(s1)?,
        Permutation::from_images(s2)?,
    )
}
