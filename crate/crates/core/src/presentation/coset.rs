//! Felsch-style coset enumeration over the trivial subgroup.
//!
//! Every definition is followed by immediate deduction processing: each new
//! table entry triggers a scan of every relator rotation passing through it.
//! Gaps are filled in the lowest live coset first, lowest column first.
//! Coincidences are merged with union-find, always keeping the smaller coset.

use std::collections::VecDeque;

use super::GroupPresentation;
use crate::error::{Error, Result};
use crate::perm_group::{FiniteGroup, Permutation};

pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

const NONE: u32 = u32::MAX;

/// Enumerates the cosets of the trivial subgroup, returning the presented
/// group in its regular permutation representation.
///
/// Fails with [`Error::CosetLimit`] if more than `max_cosets` cosets are live
/// at once, which means the group is infinite or the bound is too small.
pub fn coset_enumerate(p: &GroupPresentation, max_cosets: usize) -> Result<FiniteGroup> {
    if p.generator_names().is_empty() {
        return Err(Error::NoGenerators);
    }
    if max_cosets == 0 {
        return Err(Error::InvalidParameter("max_cosets must be at least 1".into()));
    }
    let mut table = CosetTable::new(p, max_cosets);
    table.run()?;
    let columns = table.compact_columns();
    let named = p
        .generator_names()
        .iter()
        .enumerate()
        .map(|(g, name)| {
            (
                name.clone(),
                Permutation::from_images_unchecked(columns[table.gen_col[g]].clone()),
            )
        })
        .collect();
    FiniteGroup::closure_named(named, max_cosets.max(1))
}

struct CosetTable {
    ncols: usize,
    inv: Vec<usize>,
    gen_col: Vec<usize>,
    /// Full relators as column words, used for the final verification sweep.
    relators: Vec<Vec<usize>>,
    /// Relator rotations indexed by their first column.
    rotations: Vec<Vec<Vec<usize>>>,
    rows: Vec<u32>,
    parent: Vec<u32>,
    live_count: usize,
    max_cosets: usize,
    deductions: Vec<(u32, usize)>,
    dead_queue: VecDeque<u32>,
    cursor: usize,
}

impl CosetTable {
    fn new(p: &GroupPresentation, max_cosets: usize) -> Self {
        let involutory = p.involutory_generators();
        let mut inv = Vec::new();
        let mut gen_col = Vec::new();
        for &self_inverse in &involutory {
            let c = inv.len();
            gen_col.push(c);
            if self_inverse {
                inv.push(c);
            } else {
                inv.push(c + 1);
                inv.push(c);
            }
        }
        let ncols = inv.len();

        let mut relators = Vec::new();
        for w in p.relators() {
            let mut cols = Vec::new();
            for &(g, e) in w {
                let col = if e > 0 { gen_col[g] } else { inv[gen_col[g]] };
                // Involutory generators reduce mod 2; the shared column encodes g^2 = 1.
                let reps = if involutory[g] { e.rem_euclid(2) as usize } else { e.unsigned_abs() as usize };
                for _ in 0..reps {
                    cols.push(col);
                }
            }
            let cols = cyclically_reduce(cols, &inv);
            if !cols.is_empty() && !relators.contains(&cols) {
                relators.push(cols);
            }
        }

        let mut rotations = vec![Vec::new(); ncols];
        for r in &relators {
            for i in 0..r.len() {
                let rot: Vec<usize> = r[i..].iter().chain(&r[..i]).copied().collect();
                if !rotations[rot[0]].contains(&rot) {
                    rotations[rot[0]].push(rot);
                }
            }
        }

        let mut t = CosetTable {
            ncols,
            inv,
            gen_col,
            relators,
            rotations,
            rows: Vec::new(),
            parent: Vec::new(),
            live_count: 0,
            max_cosets,
            deductions: Vec::new(),
            dead_queue: VecDeque::new(),
            cursor: 0,
        };
        t.new_coset();
        t
    }

    fn new_coset(&mut self) -> u32 {
        let c = self.parent.len() as u32;
        self.parent.push(c);
        self.rows.extend(std::iter::repeat_n(NONE, self.ncols));
        self.live_count += 1;
        c
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.rows[c as usize * self.ncols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.rows[c as usize * self.ncols + x] = d;
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut k = c;
        while self.parent[k as usize] != root {
            let next = self.parent[k as usize];
            self.parent[k as usize] = root;
            k = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.parent[kill as usize] = keep;
        self.live_count -= 1;
        self.dead_queue.push_back(kill);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some(dead) = self.dead_queue.pop_front() {
            for x in 0..self.ncols {
                let d = self.get(dead, x);
                if d == NONE {
                    continue;
                }
                let xi = self.inv[x];
                if self.get(d, xi) == dead {
                    self.set(d, xi, NONE);
                }
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mux = self.get(mu, x);
                if mux != NONE {
                    self.merge(nu, mux);
                } else {
                    let nuxi = self.get(nu, xi);
                    if nuxi != NONE {
                        self.merge(mu, nuxi);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, xi, mu);
                        self.deductions.push((mu, x));
                    }
                }
            }
        }
        self.cursor = 0;
    }

    /// Scans `word` from coset `c`, deducing a single missing entry or
    /// recording a coincidence. Returns false if a coincidence occurred.
    fn scan_and_deduce(&mut self, c: u32, word: &[usize]) -> bool {
        let len = word.len();
        let mut f = c;
        let mut i = 0;
        while i < len {
            let n = self.get(f, word[i]);
            if n == NONE {
                break;
            }
            f = n;
            i += 1;
        }
        if i == len {
            if f != c {
                self.coincidence(f, c);
                return false;
            }
            return true;
        }
        let mut b = c;
        let mut j = len;
        while j > i {
            let n = self.get(b, self.inv[word[j - 1]]);
            if n == NONE {
                break;
            }
            b = n;
            j -= 1;
        }
        if j == i {
            if f != b {
                self.coincidence(f, b);
                return false;
            }
        } else if j == i + 1 {
            let x = word[i];
            self.set(f, x, b);
            self.set(b, self.inv[x], f);
            self.deductions.push((f, x));
        }
        true
    }

    fn process_deductions(&mut self) {
        while let Some((c, x)) = self.deductions.pop() {
            if !self.is_live(c) {
                continue;
            }
            let d = self.get(c, x);
            if d == NONE {
                continue;
            }
            for k in 0..self.rotations[x].len() {
                if !self.is_live(c) {
                    break;
                }
                let rot = std::mem::take(&mut self.rotations[x][k]);
                self.scan_and_deduce(c, &rot);
                self.rotations[x][k] = rot;
            }
            let xi = self.inv[x];
            let d = self.get(c, x);
            if d == NONE || !self.is_live(d) {
                continue;
            }
            for k in 0..self.rotations[xi].len() {
                if !self.is_live(d) {
                    break;
                }
                let rot = std::mem::take(&mut self.rotations[xi][k]);
                self.scan_and_deduce(d, &rot);
                self.rotations[xi][k] = rot;
            }
        }
    }

    fn first_gap(&mut self) -> Option<(u32, usize)> {
        while self.cursor < self.parent.len() {
            let c = self.cursor as u32;
            if self.is_live(c) {
                if let Some(x) = (0..self.ncols).find(|&x| self.get(c, x) == NONE) {
                    return Some((c, x));
                }
            }
            self.cursor += 1;
        }
        None
    }

    /// Scans every relator at every live coset; returns true if the table is consistent.
    fn verify(&mut self) -> bool {
        let relators = std::mem::take(&mut self.relators);
        let mut clean = true;
        for c in 0..self.parent.len() as u32 {
            for r in &relators {
                if !self.is_live(c) {
                    break;
                }
                let pending = self.deductions.len();
                if !self.scan_and_deduce(c, r) || self.deductions.len() != pending {
                    clean = false;
                }
            }
        }
        self.relators = relators;
        clean
    }

    fn run(&mut self) -> Result<()> {
        loop {
            self.process_deductions();
            if self.parent.len() > 2 * self.live_count + 1024 {
                self.compact();
            }
            match self.first_gap() {
                Some((c, x)) => {
                    if self.live_count >= self.max_cosets {
                        return Err(Error::CosetLimit {
                            max_cosets: self.max_cosets,
                        });
                    }
                    let d = self.new_coset();
                    self.set(c, x, d);
                    self.set(d, self.inv[x], c);
                    self.deductions.push((c, x));
                }
                None => {
                    if self.verify() {
                        return Ok(());
                    }
                }
            }
        }
    }

    /// Renumbers live cosets consecutively, preserving their order.
    fn compact(&mut self) {
        debug_assert!(self.deductions.is_empty() && self.dead_queue.is_empty());
        let mut map = vec![NONE; self.parent.len()];
        let mut next = 0u32;
        for (c, slot) in map.iter_mut().enumerate() {
            if self.parent[c] == c as u32 {
                *slot = next;
                next += 1;
            }
        }
        let mut rows = Vec::with_capacity(next as usize * self.ncols);
        for c in 0..self.parent.len() {
            if map[c] != NONE {
                for x in 0..self.ncols {
                    let d = self.rows[c * self.ncols + x];
                    rows.push(if d == NONE { NONE } else { map[d as usize] });
                }
            }
        }
        self.rows = rows;
        self.parent = (0..next).collect();
        self.cursor = 0;
    }

    /// Image arrays of each column over the compacted, complete table.
    fn compact_columns(&mut self) -> Vec<Vec<u32>> {
        self.compact();
        let n = self.parent.len();
        (0..self.ncols)
            .map(|x| (0..n as u32).map(|c| self.get(c, x)).collect())
            .collect()
    }
}

fn cyclically_reduce(mut word: Vec<usize>, inv: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(word.len());
    for x in word.drain(..) {
        if out.last().is_some_and(|&y| inv[y] == x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    let (mut lo, mut hi) = (0, out.len());
    while hi - lo >= 2 && inv[out[lo]] == out[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    out[lo..hi].to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{evaluate_word, triangle_group};

    fn order_of(text: &str) -> Result<usize> {
        let p = GroupPresentation::parse(text)?;
        coset_enumerate(&p, 100_000).map(|g| g.order())
    }

    #[test]
    fn small_groups() {
        assert_eq!(order_of("< a | a^2 >").unwrap(), 2);
        assert_eq!(order_of("< a, b | a^2, b^2, (a b)^3 >").unwrap(), 6);
        assert_eq!(order_of("< a | a^5 >").unwrap(), 5);
        assert_eq!(order_of("< a, b | a^3, b^2, a b a b >").unwrap(), 6);
        // quaternion group
        assert_eq!(order_of("< a, b | a^4, a^2 b^-2, b^-1 a b a >").unwrap(), 8);
        assert_eq!(order_of("< a, b | a, b^3 >").unwrap(), 3);
        assert_eq!(order_of("< a, b | a b^-1, a^7 >").unwrap(), 7);
    }

    #[test]
    fn triangle_groups() {
        let order = |k, l| coset_enumerate(&triangle_group(k, l).unwrap(), 100_000).map(|g| g.order());
        assert_eq!(order(3, 3).unwrap(), 24);
        assert_eq!(order(3, 4).unwrap(), 48);
        assert_eq!(order(4, 3).unwrap(), 48);
        assert_eq!(order(3, 5).unwrap(), 120);
        assert_eq!(order(5, 3).unwrap(), 120);
        assert_eq!(order(3, 2).unwrap(), 12);
        assert!(matches!(order(4, 4), Err(Error::CosetLimit { .. })));
    }

    #[test]
    fn infinite_free_product_hits_the_bound() {
        let p = crate::presentation::corner_monodromy_group();
        assert_eq!(coset_enumerate(&p, 10_000).unwrap_err(), Error::CosetLimit { max_cosets: 10_000 });
    }

    #[test]
    fn relators_hold_and_representation_is_regular() {
        let p = triangle_group(3, 5).unwrap();
        let g = coset_enumerate(&p, 10_000).unwrap();
        assert_eq!(g.degree(), g.order());
        let gens: Vec<_> = g.generators().iter().map(|&(_, e)| e).collect();
        for r in p.relators() {
            assert_eq!(evaluate_word(&g, &gens, r), g.identity());
        }
    }

    #[test]
    fn dihedral_orders() {
        for m in 2..=32 {
            assert_eq!(order_of(&format!("< a, b | a^2, b^2, (ab)^{m} >")).unwrap(), 2 * m);
        }
    }

    #[test]
    fn deterministic() {
        let p = triangle_group(3, 4).unwrap();
        let a = coset_enumerate(&p, 10_000).unwrap();
        let b = coset_enumerate(&p, 10_000).unwrap();
        assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn empty_generator_list_and_zero_bound() {
        let p = GroupPresentation::new(vec![], vec![]).unwrap();
        assert_eq!(coset_enumerate(&p, 10).unwrap_err(), Error::NoGenerators);
        let q = GroupPresentation::parse("< a | a^2 >").unwrap();
        assert!(coset_enumerate(&q, 0).is_err());
        assert_eq!(coset_enumerate(&q, 1).unwrap_err(), Error::CosetLimit { max_cosets: 1 });
    }
}
