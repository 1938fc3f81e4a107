use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use super::permutation::{lcm, Permutation};
use crate::error::{Error, Result};

/// Index of an element in a [`FiniteGroup`]'s element sequence. The identity is always `0`.
pub type Element = usize;

/// Default bound on the number of elements a closure may produce.
pub const DEFAULT_ELEMENT_BOUND: usize = 1_000_000;

/// Groups up to this order get a cached multiplication table on first use.
const TABLE_THRESHOLD: usize = 2048;

/// A finite permutation group with a reproducible element ordering.
///
/// Elements are listed in breadth-first order from the identity, expanding
/// generators in their declared order. Every query identifies elements by
/// their index in that list.
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<(String, Element)>,
    elements: Vec<Permutation>,
    /// Points whose images separate all elements.
    base: Vec<u32>,
    lookup: Lookup,
    table: OnceLock<Vec<u32>>,
}

enum Lookup {
    /// The base is a single point; `image -> element`, `u32::MAX` when absent.
    Single(Vec<u32>),
    Multi(HashMap<Box<[u32]>, Element>),
}

impl FiniteGroup {
    /// Closure of unnamed generators; they are named `g0`, `g1`, ...
    pub fn closure(generators: Vec<Permutation>) -> Result<FiniteGroup> {
        let named = generators
            .into_iter()
            .enumerate()
            .map(|(i, p)| (format!("g{i}"), p))
            .collect();
        FiniteGroup::closure_named(named, DEFAULT_ELEMENT_BOUND)
    }

    /// Closure of named generators, failing once more than `bound` elements appear.
    ///
    /// An empty generator list needs a degree, so it yields the trivial group on zero points.
    pub fn closure_named(generators: Vec<(String, Permutation)>, bound: usize) -> Result<FiniteGroup> {
        let degree = generators.first().map_or(0, |(_, p)| p.degree());
        for (_, p) in &generators {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: p.degree(),
                });
            }
        }

        let mut elements = vec![Permutation::identity(degree)];
        let mut seen: HashMap<Permutation, Element> = HashMap::new();
        seen.insert(elements[0].clone(), 0);
        let mut next = 0;
        while next < elements.len() {
            for (_, g) in &generators {
                let product = elements[next].then(g);
                if !seen.contains_key(&product) {
                    if elements.len() >= bound {
                        return Err(Error::GroupTooLarge { bound });
                    }
                    seen.insert(product.clone(), elements.len());
                    elements.push(product);
                }
            }
            next += 1;
        }

        let named = generators
            .iter()
            .map(|(name, p)| (name.clone(), seen[p]))
            .collect();
        drop(seen);
        Ok(FiniteGroup::from_elements(degree, named, elements))
    }

    fn from_elements(degree: usize, generators: Vec<(String, Element)>, elements: Vec<Permutation>) -> FiniteGroup {
        let base = separating_base(degree, &elements);
        let lookup = if base.len() == 1 {
            let mut single = vec![u32::MAX; degree];
            for (i, e) in elements.iter().enumerate() {
                single[e.apply(base[0]) as usize] = i as u32;
            }
            Lookup::Single(single)
        } else {
            Lookup::Multi(
                elements
                    .iter()
                    .enumerate()
                    .map(|(i, e)| (base.iter().map(|&b| e.apply(b)).collect(), i))
                    .collect(),
            )
        };
        FiniteGroup {
            degree,
            generators,
            elements,
            base,
            lookup,
            table: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, e: Element) -> &Permutation {
        &self.elements[e]
    }

    pub fn identity(&self) -> Element {
        0
    }

    pub fn generators(&self) -> &[(String, Element)] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<Element> {
        self.generators.iter().find(|(n, _)| n == name).map(|&(_, e)| e)
    }

    /// Index of `p` in the element sequence, if `p` belongs to the group.
    pub fn index_of(&self, p: &Permutation) -> Option<Element> {
        if p.degree() != self.degree {
            return None;
        }
        let candidate = self.lookup_by(|b| p.apply(b))?;
        (self.elements[candidate] == *p).then_some(candidate)
    }

    fn lookup_by(&self, image: impl Fn(u32) -> u32) -> Option<Element> {
        match &self.lookup {
            Lookup::Single(single) => {
                if self.base.is_empty() {
                    return Some(0);
                }
                let e = single[image(self.base[0]) as usize];
                (e != u32::MAX).then_some(e as usize)
            }
            Lookup::Multi(map) => {
                let key: Vec<u32> = self.base.iter().map(|&b| image(b)).collect();
                map.get(key.as_slice()).copied()
            }
        }
    }

    fn mul_uncached(&self, a: Element, b: Element) -> Element {
        let (pa, pb) = (&self.elements[a], &self.elements[b]);
        self.lookup_by(|x| pb.apply(pa.apply(x)))
            .expect("group is closed under products")
    }

    /// The product "a, then b".
    pub fn mul(&self, a: Element, b: Element) -> Element {
        let n = self.order();
        if n <= TABLE_THRESHOLD {
            let table = self.table.get_or_init(|| {
                let mut t = Vec::with_capacity(n * n);
                for a in 0..n {
                    for b in 0..n {
                        t.push(self.mul_uncached(a, b) as u32);
                    }
                }
                t
            });
            table[a * n + b] as usize
        } else {
            self.mul_uncached(a, b)
        }
    }

    /// Left-to-right product of a sequence of elements.
    pub fn product(&self, factors: &[Element]) -> Element {
        factors.iter().fold(0, |acc, &f| self.mul(acc, f))
    }

    pub fn inv(&self, a: Element) -> Element {
        self.index_of(&self.elements[a].inverse())
            .expect("group is closed under inverses")
    }

    pub fn pow(&self, a: Element, exponent: i64) -> Element {
        let base = if exponent < 0 { self.inv(a) } else { a };
        (0..exponent.unsigned_abs()).fold(0, |acc, _| self.mul(acc, base))
    }

    pub fn element_order(&self, a: Element) -> u64 {
        self.elements[a]
            .cycles()
            .iter()
            .fold(1, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn is_involution(&self, a: Element) -> bool {
        a != 0 && self.mul(a, a) == 0
    }

    pub fn commute(&self, a: Element, b: Element) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// All elements of order exactly 2, in element order.
    pub fn involutions(&self) -> Vec<Element> {
        (1..self.order()).filter(|&e| self.is_involution(e)).collect()
    }

    /// Elements of the subgroup generated by `gens`, in breadth-first order from the identity.
    pub fn subgroup(&self, gens: &[Element]) -> Vec<Element> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0];
        let mut next = 0;
        while next < out.len() {
            let g = out[next];
            for &s in gens {
                let h = self.mul(g, s);
                if !seen[h] {
                    seen[h] = true;
                    out.push(h);
                }
            }
            next += 1;
        }
        out
    }

    pub fn subgroup_order(&self, gens: &[Element]) -> usize {
        self.subgroup(gens).len()
    }

    pub fn generates(&self, gens: &[Element]) -> bool {
        self.subgroup_order(gens) == self.order()
    }

    /// The permutation of element indices induced by `h ↦ h·x`.
    pub fn right_multiplication(&self, x: Element) -> Permutation {
        Permutation::from_images_unchecked((0..self.order()).map(|h| self.mul(h, x) as u32).collect())
    }

    /// The permutation of element indices induced by `h ↦ x⁻¹·h`, a right action
    /// that commutes with every right multiplication.
    pub fn left_multiplication(&self, x: Element) -> Permutation {
        let xi = self.inv(x);
        Permutation::from_images_unchecked((0..self.order()).map(|h| self.mul(xi, h) as u32).collect())
    }

    fn check_members(&self, elems: &[Element]) -> Result<()> {
        if elems.iter().any(|&e| e >= self.order()) {
            return Err(Error::NotInGroup);
        }
        Ok(())
    }

    /// The automorphism sending `src[i] ↦ dst[i]`, if one exists.
    ///
    /// `src` must generate the group. Images are assigned by translating words
    /// along a breadth-first traversal of the Cayley graph on `src`.
    pub fn extend_generator_map(&self, src: &[Element], dst: &[Element]) -> Result<Option<GroupIsomorphism>> {
        extend_between(self, self, src, dst)
    }
}

/// The isomorphism `source → target` sending `src[i] ↦ dst[i]`, if one exists.
pub fn extend_between(
    source: &FiniteGroup,
    target: &FiniteGroup,
    src: &[Element],
    dst: &[Element],
) -> Result<Option<GroupIsomorphism>> {
    if src.len() != dst.len() {
        return Err(Error::LengthMismatch(src.len(), dst.len()));
    }
    source.check_members(src)?;
    target.check_members(dst)?;

    const UNSET: usize = usize::MAX;
    let mut images = vec![UNSET; source.order()];
    images[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    let mut visited = 1;
    while let Some(g) = queue.pop_front() {
        for (&s, &d) in src.iter().zip(dst) {
            let h = source.mul(g, s);
            let image = target.mul(images[g], d);
            if images[h] == UNSET {
                images[h] = image;
                visited += 1;
                queue.push_back(h);
            } else if images[h] != image {
                // Checked after the traversal so that a non-generating `src`
                // is reported as an error rather than a failed extension.
                if source.subgroup_order(src) != source.order() {
                    return Err(Error::DoesNotGenerate);
                }
                return Ok(None);
            }
        }
    }
    if visited != source.order() {
        return Err(Error::DoesNotGenerate);
    }
    if source.order() != target.order() {
        return Ok(None);
    }
    let mut hit = vec![false; target.order()];
    for &i in &images {
        if std::mem::replace(&mut hit[i], true) {
            return Ok(None);
        }
    }
    Ok(Some(GroupIsomorphism { images }))
}

/// A group isomorphism given by the image of every element index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupIsomorphism {
    images: Vec<Element>,
}

impl GroupIsomorphism {
    pub fn apply(&self, e: Element) -> Element {
        self.images[e]
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn inverse(&self) -> GroupIsomorphism {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        GroupIsomorphism { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }
}

/// Greedy base: keep adding points while they split classes of elements with equal images.
fn separating_base(degree: usize, elements: &[Permutation]) -> Vec<u32> {
    if elements.len() <= 1 {
        return Vec::new();
    }
    let mut base = Vec::new();
    let mut keys: Vec<Vec<u32>> = vec![Vec::new(); elements.len()];
    let mut distinct = 1;
    for point in 0..degree as u32 {
        let count = keys
            .iter()
            .zip(elements)
            .map(|(k, e)| (k.as_slice(), e.apply(point)))
            .collect::<HashSet<_>>()
            .len();
        if count > distinct {
            distinct = count;
            base.push(point);
            for (k, e) in keys.iter_mut().zip(elements) {
                k.push(e.apply(point));
            }
            if distinct == elements.len() {
                break;
            }
        }
    }
    base
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}
