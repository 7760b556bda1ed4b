//! Maximal clique enumeration and the clique structure of NU(3, q²).

use std::collections::{BTreeMap, HashSet};

use thiserror::Error;

use crate::bitset::Bitset;
use crate::graph::{Graph, TangentGraph, TangentGraphKind};

pub const DEFAULT_CLIQUE_CAP: usize = 600;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliqueError {
    #[error("graph has {actual} vertices, above the cap of {cap}")]
    TooLarge { actual: usize, cap: usize },
    #[error("clique classification needs NU(3, q^2) built from the plane")]
    NotPlanarNu,
    #[error("vertex set {0:?} is not the vertex set of a tangent line")]
    NotTangent(Vec<usize>),
}

/// All maximal cliques, each sorted ascending, the list sorted.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<Vec<usize>>, CliqueError> {
    maximal_cliques_capped(g, DEFAULT_CLIQUE_CAP)
}

pub fn maximal_cliques_capped(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>, CliqueError> {
    let n = g.order();
    if n > cap {
        return Err(CliqueError::TooLarge { actual: n, cap });
    }
    let mut out = Vec::new();
    let mut rank = vec![0usize; n];
    for (i, &v) in degeneracy_order(g).iter().enumerate() {
        rank[v] = i;
    }
    let mut r = Vec::new();
    for v in 0..n {
        let mut p = Bitset::new(n);
        let mut x = Bitset::new(n);
        for u in g.neighbors(v) {
            if rank[u] > rank[v] {
                p.insert(u);
            } else {
                x.insert(u);
            }
        }
        r.push(v);
        expand(g, &mut r, p, x, &mut out);
        r.pop();
    }
    for c in out.iter_mut() {
        c.sort_unstable();
    }
    out.sort();
    Ok(out)
}

/// Repeatedly removes a vertex of minimum remaining degree.
fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("vertices remain");
        removed[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !removed[u] {
                degree[u] -= 1;
            }
        }
    }
    order
}

/// Bron–Kerbosch with Tomita pivoting.
fn expand(g: &Graph, r: &mut Vec<usize>, mut p: Bitset, mut x: Bitset, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| (p.intersection_count(g.row(u)), std::cmp::Reverse(u)))
        .expect("p is non-empty");
    let mut candidates = p.clone();
    candidates.difference_with(g.row(pivot));
    for v in candidates.iter() {
        r.push(v);
        expand(g, r, p.intersection(g.row(v)), x.intersection(g.row(v)), out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// Maximal cliques of NU(3, q²) sorted by type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCensus {
    /// Clique size to number of maximal cliques of that size.
    pub by_size: BTreeMap<usize, usize>,
    /// Cliques equal to the non-isotropic points of a tangent line.
    pub tangent_type: usize,
    /// All other maximal cliques.
    pub two_line_type: usize,
}

impl CliqueCensus {
    pub fn total(&self) -> usize {
        self.tangent_type + self.two_line_type
    }
}

/// Census of the maximal cliques of a planar NU graph. Tangent-type cliques
/// are recognised from the geometry, not by size, so q = 2 (where q² = q+2)
/// is handled too.
pub fn classify_cliques(tg: &TangentGraph) -> Result<CliqueCensus, CliqueError> {
    let cliques = maximal_cliques(&tg.graph)?;
    census(tg, &cliques)
}

pub fn census(tg: &TangentGraph, cliques: &[Vec<usize>]) -> Result<CliqueCensus, CliqueError> {
    if tg.kind != TangentGraphKind::Nu || tg.n() != 2 {
        return Err(CliqueError::NotPlanarNu);
    }
    let tangents: HashSet<Vec<usize>> = tg.tangent_cliques().into_iter().collect();
    let mut by_size = BTreeMap::new();
    let mut tangent_type = 0;
    for c in cliques {
        *by_size.entry(c.len()).or_insert(0) += 1;
        if tangents.contains(c) {
            tangent_type += 1;
        }
    }
    Ok(CliqueCensus {
        by_size,
        tangent_type,
        two_line_type: cliques.len() - tangent_type,
    })
}

/// How three tangent cliques meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TripleType {
    /// All three share one vertex.
    Concurrent,
    /// Pairwise intersections are three distinct single vertices.
    Triangle,
    /// Some pairwise intersection is empty or larger than one vertex.
    Other,
}

fn meet(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

/// Classifies three sorted vertex sets by their pairwise intersections.
pub fn tangent_triple_type(c1: &[usize], c2: &[usize], c3: &[usize]) -> TripleType {
    let (a, b, c) = (meet(c1, c2), meet(c1, c3), meet(c2, c3));
    if a.len() != 1 || b.len() != 1 || c.len() != 1 {
        return TripleType::Other;
    }
    if a[0] == b[0] && b[0] == c[0] {
        TripleType::Concurrent
    } else if a[0] != b[0] && a[0] != c[0] && b[0] != c[0] {
        TripleType::Triangle
    } else {
        TripleType::Other
    }
}

/// [`tangent_triple_type`] after checking that each set is a tangent clique of `tg`.
pub fn tangent_triple_type_checked(
    tg: &TangentGraph,
    c1: &[usize],
    c2: &[usize],
    c3: &[usize],
) -> Result<TripleType, CliqueError> {
    let tangents: HashSet<Vec<usize>> = tg.tangent_cliques().into_iter().collect();
    for c in [c1, c2, c3] {
        let mut sorted = c.to_vec();
        sorted.sort_unstable();
        if !tangents.contains(&sorted) {
            return Err(CliqueError::NotTangent(c.to_vec()));
        }
    }
    let sort = |c: &[usize]| {
        let mut s = c.to_vec();
        s.sort_unstable();
        s
    };
    Ok(tangent_triple_type(&sort(c1), &sort(c2), &sort(c3)))
}
