//! Brute-force oracles shared by the integration tests. They work on the
//! permutations themselves rather than on element indices and tables.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use ebr_core::{EdgeBiregularMap, Element, FiniteGroup, Permutation};

pub fn perm(g: &FiniteGroup, e: Element) -> Permutation {
    g.element(e).clone()
}

/// Whether `src[i] ↦ dst[i]` extends to an isomorphism `a → b`: the subgroup
/// of `a × b` generated by the pairs is the graph of a bijection.
pub fn oracle_isomorphic(a: &FiniteGroup, b: &FiniteGroup, src: &[Element], dst: &[Element]) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let gens: Vec<(Permutation, Permutation)> = src.iter().zip(dst).map(|(&x, &y)| (perm(a, x), perm(b, y))).collect();
    let start = (Permutation::identity(a.degree()), Permutation::identity(b.degree()));
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some((x, y)) = queue.pop_front() {
        for (s, t) in &gens {
            let next = (x.then(s), y.then(t));
            if seen.insert(next.clone()) {
                if seen.len() > a.order() {
                    return false;
                }
                queue.push_back(next);
            }
        }
    }
    let firsts: HashSet<&Permutation> = seen.iter().map(|(x, _)| x).collect();
    let seconds: HashSet<&Permutation> = seen.iter().map(|(_, y)| y).collect();
    firsts.len() == a.order() && seconds.len() == b.order() && seen.len() == a.order()
}

/// Orbits of the corners under right multiplication by `gens`, by flood fill
/// on permutations.
pub fn orbit_sizes(g: &FiniteGroup, gens: &[Element]) -> Vec<usize> {
    let index: HashMap<Permutation, usize> = g.elements().iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let gens: Vec<Permutation> = gens.iter().map(|&e| perm(g, e)).collect();
    let mut seen = vec![false; g.order()];
    let mut sizes = Vec::new();
    for start in 0..g.order() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut size = 0;
        while let Some(h) = stack.pop() {
            size += 1;
            for s in &gens {
                let next = index[&g.element(h).then(s)];
                if !seen[next] {
                    seen[next] = true;
                    stack.push(next);
                }
            }
        }
        sizes.push(size);
    }
    sizes
}

#[derive(Debug, PartialEq, Eq)]
pub struct Counts {
    pub vertices: usize,
    pub proper_edges: usize,
    pub semi_edges: usize,
    pub faces: usize,
    pub chi: i64,
    pub orientable: bool,
}

/// Counts cells of a closed map directly from corner orbits.
pub fn oracle_counts(m: &EdgeBiregularMap) -> Counts {
    let [r0, r2, p0, p2] = m.slots().map(Option::unwrap);
    let g = m.group();
    let vertices = orbit_sizes(g, &[r2, p2]).len();
    let faces = orbit_sizes(g, &[r0, p0]).len();
    let mut proper_edges = 0;
    let mut semi_edges = 0;
    for pair in [[r0, r2], [p0, p2]] {
        for size in orbit_sizes(g, &pair) {
            match size {
                4 => proper_edges += 1,
                2 => semi_edges += 1,
                other => panic!("edge orbit of size {other}"),
            }
        }
    }
    // orientable iff words of even length form a subgroup of index 2
    let slots = [r0, r2, p0, p2];
    let even: Vec<Element> = slots
        .iter()
        .flat_map(|&a| slots.iter().map(move |&b| (a, b)))
        .map(|(a, b)| g.index_of(&perm(g, a).then(&perm(g, b))).unwrap())
        .collect();
    let even_order = orbit_sizes(g, &even)[0];
    Counts {
        vertices,
        proper_edges,
        semi_edges,
        faces,
        chi: vertices as i64 - proper_edges as i64 + faces as i64,
        orientable: 2 * even_order == g.order(),
    }
}

/// Whether the slot swap `rᵢ ↔ ρᵢ` extends to an automorphism.
pub fn oracle_fully_regular(m: &EdgeBiregularMap) -> bool {
    let [a, b, c, d] = m.slots().map(Option::unwrap);
    oracle_isomorphic(m.group(), m.group(), &[a, b, c, d], &[c, d, a, b])
}
