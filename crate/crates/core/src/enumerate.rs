//! Exhaustive enumeration of edge-biregular maps over a finite group,
//! deduplicated up to automorphisms of the group.

use std::path::Path;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::ebr::{are_isomorphic, EdgeBiregularMap};
use crate::error::{Error, Result};
use crate::perm_group::{Element, FiniteGroup, Permutation};
use crate::presentation::{coset_enumerate, GroupPresentation, DEFAULT_MAX_COSETS};

pub const DEFAULT_CANDIDATE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub require_proper: bool,
    pub require_distinct: bool,
    pub chi_max: Option<i64>,
    /// Upper bound on candidate quadruples `|pairs|²`.
    pub budget: u64,
    pub threads: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            require_proper: false,
            require_distinct: false,
            chi_max: None,
            budget: DEFAULT_CANDIDATE_BUDGET,
            threads: 1,
        }
    }
}

pub type Quadruple = [Element; 4];

/// `|⟨a, b⟩|` for involutions `a`, `b`.
fn dihedral_order(g: &FiniteGroup, a: Element, b: Element) -> usize {
    if a == b {
        2
    } else {
        2 * g.element_order(g.mul(a, b)) as usize
    }
}

/// Euler characteristic of a closed quadruple, from stabilizer orders alone.
pub fn quadruple_chi(g: &FiniteGroup, q: Quadruple) -> i64 {
    let n = g.order() as i64;
    let k = dihedral_order(g, q[1], q[3]) as i64;
    let l = dihedral_order(g, q[0], q[2]) as i64;
    let edges = [(q[0], q[1]), (q[2], q[3])].iter().filter(|(a, b)| a != b).count() as i64 * n / 4;
    n / k - edges + n / l
}

fn distinct(q: &Quadruple) -> bool {
    (0..4).all(|i| (i + 1..4).all(|j| q[i] != q[j]))
}

fn thread_pool(threads: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start {threads} threads: {e}")))
}

/// All quadruples passing the slot conditions and filters, in lexicographic order.
pub fn valid_quadruples(g: &FiniteGroup, options: &EnumerateOptions) -> Result<Vec<Quadruple>> {
    let involutions = g.involutions();
    let pairs: Vec<(Element, Element)> = involutions
        .iter()
        .flat_map(|&a| involutions.iter().map(move |&b| (a, b)))
        .filter(|&(a, b)| (a != b || !options.require_proper) && g.commute(a, b))
        .collect();
    let candidates = (pairs.len() as u64).saturating_mul(pairs.len() as u64);
    if candidates > options.budget {
        return Err(Error::EnumerationBudget {
            candidates,
            budget: options.budget,
        });
    }
    let scan = |&(r0, r2): &(Element, Element)| -> Vec<Quadruple> {
        pairs
            .iter()
            .map(|&(rho0, rho2)| [r0, r2, rho0, rho2])
            .filter(|q| !options.require_distinct || distinct(q))
            .filter(|q| options.chi_max.is_none_or(|c| quadruple_chi(g, *q) <= c))
            .filter(|q| g.generates(q))
            .collect()
    };
    if options.threads <= 1 {
        return Ok(pairs.iter().flat_map(scan).collect());
    }
    Ok(thread_pool(options.threads)?.install(|| pairs.par_iter().flat_map_iter(scan).collect()))
}

/// Orders of all pairwise products, preserved by automorphisms.
fn signature(g: &FiniteGroup, q: &Quadruple) -> [u64; 6] {
    let mut s = [0; 6];
    let mut i = 0;
    for a in 0..4 {
        for b in a + 1..4 {
            s[i] = g.element_order(g.mul(q[a], q[b]));
            i += 1;
        }
    }
    s
}

/// Lexicographically least representatives of the automorphism classes of `quadruples`.
///
/// `quadruples` must be sorted and closed under automorphisms of `g`.
pub fn dedupe(g: &FiniteGroup, quadruples: &[Quadruple], threads: usize) -> Result<Vec<Quadruple>> {
    let signatures: Vec<[u64; 6]> = quadruples.iter().map(|q| signature(g, q)).collect();
    let mut covered = vec![false; quadruples.len()];
    let mut reps = Vec::new();
    let pool = if threads > 1 { Some(thread_pool(threads)?) } else { None };
    for i in 0..quadruples.len() {
        if covered[i] {
            continue;
        }
        let q = quadruples[i];
        reps.push(q);
        let open: Vec<usize> = (i + 1..quadruples.len())
            .filter(|&j| !covered[j] && signatures[j] == signatures[i])
            .collect();
        let images = |j: &usize| -> Result<Option<usize>> {
            Ok(g.extend_generator_map(&q, &quadruples[*j])?.map(|_| *j))
        };
        let hits: Vec<Option<usize>> = match &pool {
            Some(pool) => pool.install(|| open.par_iter().map(images).collect::<Result<_>>())?,
            None => open.iter().map(images).collect::<Result<_>>()?,
        };
        for j in hits.into_iter().flatten() {
            covered[j] = true;
        }
    }
    Ok(reps)
}

/// Enumerates edge-biregular maps over `g`, one per automorphism class.
pub fn enumerate_ebr(g: Arc<FiniteGroup>, options: &EnumerateOptions) -> Result<Vec<EdgeBiregularMap>> {
    let quadruples = valid_quadruples(&g, options)?;
    dedupe(&g, &quadruples, options.threads)?
        .into_iter()
        .map(|[a, b, c, d]| EdgeBiregularMap::closed(Arc::clone(&g), a, b, c, d))
        .collect()
}

/// One class of maps under `{identity, twin, dual, twin∘dual}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapClass {
    pub class_size: usize,
    #[serde(rename = "type")]
    pub map_type: (usize, usize),
    pub chi: i64,
    #[serde(rename = "V")]
    pub vertices: usize,
    #[serde(rename = "F")]
    pub faces: usize,
    pub orientable: bool,
    pub fully_regular: bool,
    pub table_row: Option<u32>,
    #[serde(skip)]
    pub discrepancy: bool,
    #[serde(skip)]
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ClassReport {
    pub classes: Vec<MapClass>,
}

impl ClassReport {
    /// Classes with `χ < 0` over a dihedral group that match no table row.
    pub fn discrepancies(&self) -> impl Iterator<Item = &MapClass> {
        self.classes.iter().filter(|c| c.discrepancy)
    }
}

/// `(row, type, V, F, χ, fully regular)`.
pub type TableRow = (u32, (usize, usize), usize, usize, i64, bool);

/// Rows of the dihedral classification for `|H| = 2m`.
pub fn dihedral_table_rows(m: usize) -> Vec<TableRow> {
    if m < 4 || m % 2 == 1 {
        return Vec::new();
    }
    let mi = m as i64;
    let mut rows = vec![(1, (2 * m, 2 * m), 1, 1, 2 - mi, true)];
    if (m / 2) % 2 == 1 {
        rows.push((2, (m, m), 2, 2, 4 - mi, true));
    }
    rows.push((3, (2 * m, 4), 1, m / 2, (2 - mi) / 2, false));
    if (m / 2) % 2 == 1 {
        rows.push((4, (m, 4), 2, m / 2, (4 - mi) / 2, false));
    }
    rows
}

/// Whether `g` is generated by two involutions.
pub fn is_dihedral(g: &FiniteGroup) -> bool {
    let inv = g.involutions();
    inv.iter()
        .enumerate()
        .any(|(i, &a)| inv[i..].iter().any(|&b| g.generates(&[a, b])))
}

/// Groups maps over one group into twin/dual classes and matches negative
/// Euler characteristic classes over a dihedral group to the table rows.
pub fn classify_report(maps: &[EdgeBiregularMap]) -> Result<ClassReport> {
    let dihedral = maps.first().is_some_and(|m| is_dihedral(m.group()));
    let mut assigned = vec![false; maps.len()];
    let mut classes = Vec::new();
    for i in 0..maps.len() {
        if assigned[i] {
            continue;
        }
        let m = &maps[i];
        let variants = [m.twin(), m.dual(), m.twin().dual()];
        let mut members = vec![i];
        assigned[i] = true;
        for j in i + 1..maps.len() {
            if assigned[j] {
                continue;
            }
            for v in &variants {
                if are_isomorphic(v, &maps[j])? {
                    members.push(j);
                    assigned[j] = true;
                    break;
                }
            }
        }
        let inv = m.invariants()?;
        let (k, l, v, f) = (inv.k, inv.l, inv.vertices, inv.faces);
        let mut table_row = None;
        let mut discrepancy = false;
        if dihedral && inv.chi < 0 {
            table_row = dihedral_table_rows(inv.order / 2)
                .into_iter()
                .find(|&(_, ty, rv, rf, chi, regular)| {
                    chi == inv.chi
                        && regular == inv.fully_regular
                        && ((ty, rv, rf) == ((k, l), v, f) || (ty, rv, rf) == ((l, k), f, v))
                })
                .map(|row| row.0);
            discrepancy = table_row.is_none();
        }
        classes.push(MapClass {
            class_size: members.len(),
            map_type: (k, l),
            chi: inv.chi,
            vertices: v,
            faces: f,
            orientable: inv.orientable,
            fully_regular: inv.fully_regular,
            table_row,
            discrepancy,
            members,
        });
    }
    Ok(ClassReport { classes })
}

fn regular_dihedral(order: usize) -> Vec<Permutation> {
    let (s, t) = crate::families::regular_dihedral((order / 2) as u32, 0);
    vec![s, t]
}

fn with_c2(gens: Vec<Permutation>) -> Vec<Permutation> {
    let d = gens[0].degree() as u32;
    let mut out: Vec<Permutation> = gens
        .into_iter()
        .map(|p| {
            let mut images = p.images().to_vec();
            images.extend([d, d + 1]);
            Permutation::from_images(images).expect("extension is a bijection")
        })
        .collect();
    out.push(Permutation::from_cycles(d as usize + 2, &[&[d, d + 1]]).expect("transposition"));
    out
}

fn elementary_abelian(k: u32) -> Vec<Permutation> {
    (0..k)
        .map(|i| Permutation::from_cycles(2 * k as usize, &[&[2 * i, 2 * i + 1]]).expect("transposition"))
        .collect()
}

/// Names of the built-in groups: `Dih(n)` and `Dih(n)xC2` for even `n <= 48`, and `C2^k` for `k <= 3`.
pub fn catalog_names() -> Vec<String> {
    let mut names: Vec<String> = (1..=24).map(|h| format!("Dih({})", 2 * h)).collect();
    names.extend((1..=24).map(|h| format!("Dih({})xC2", 2 * h)));
    names.extend((1..=3).map(|k| format!("C2^{k}")));
    names
}

/// A built-in group by name (case-insensitive, spaces ignored).
pub fn catalog_group(name: &str) -> Result<FiniteGroup> {
    let key: String = name.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase().replace('×', "x");
    let bad = || Error::InvalidParameter(format!("unknown group `{name}`; expected Dih(n), Dih(n)xC2 or C2^k"));
    let gens = if let Some(rest) = key.strip_prefix("dih(") {
        let (n, tail) = rest.split_once(')').ok_or_else(bad)?;
        let n: usize = n.parse().map_err(|_| bad())?;
        if n < 2 || n % 2 == 1 || n > 48 {
            return Err(Error::InvalidParameter(format!("Dih(n) needs n even with 2 <= n <= 48, got {n}")));
        }
        match tail {
            "" => regular_dihedral(n),
            "xc2" => with_c2(regular_dihedral(n)),
            _ => return Err(bad()),
        }
    } else if let Some(k) = key.strip_prefix("c2^") {
        let k: u32 = k.parse().map_err(|_| bad())?;
        if !(1..=3).contains(&k) {
            return Err(Error::InvalidParameter(format!("C2^k needs 1 <= k <= 3, got {k}")));
        }
        elementary_abelian(k)
    } else if key == "c2" {
        elementary_abelian(1)
    } else {
        return Err(bad());
    };
    FiniteGroup::closure(gens)
}

/// A catalog group, or a group read from a presentation file.
pub fn load_group(spec: &str, max_cosets: usize) -> Result<FiniteGroup> {
    if Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).map_err(|e| Error::Io(format!("{spec}: {e}")))?;
        return coset_enumerate(&GroupPresentation::parse(&text)?, max_cosets);
    }
    catalog_group(spec)
}

/// [`load_group`] with the default coset bound.
pub fn load_group_default(spec: &str) -> Result<FiniteGroup> {
    load_group(spec, DEFAULT_MAX_COSETS)
}

/// Number of automorphism classes among `quadruples`, by pairwise isomorphism tests.
pub fn pairwise_class_count(g: &FiniteGroup, quadruples: &[Quadruple]) -> Result<usize> {
    let mut reps: Vec<Quadruple> = Vec::new();
    'outer: for q in quadruples {
        for r in &reps {
            if g.extend_generator_map(r, q)?.is_some() {
                continue 'outer;
            }
        }
        reps.push(*q);
    }
    Ok(reps.len())
}
