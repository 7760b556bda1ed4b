//! Slow, independent reference implementations used to cross-check the
//! fast paths: backtracking automorphism counts, schoolbook polynomial
//! arithmetic for the field tables, and the SRG matrix identity computed
//! with plain integer matrices.

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::aut::{automorphism_group, canonical_form};
use crate::field::{Field, FieldElement};
use crate::graph::{build_nu, Graph};
use crate::perm::Permutation;
use crate::srg::{expected_params, verify_srg_identity, SrgParams};

/// Counts automorphisms by extending partial maps vertex by vertex,
/// checking adjacency against every vertex already placed.
pub fn count_automorphisms(g: &Graph) -> u64 {
    let n = g.order();
    let adj: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| g.has_edge(a, b)).collect()).collect();
    let degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        v: usize,
        adj: &[Vec<bool>],
        degree: &[usize],
        image: &mut [usize],
        used: &mut [bool],
    ) -> u64 {
        let n = adj.len();
        if v == n {
            return 1;
        }
        let mut total = 0;
        for w in 0..n {
            if used[w] || degree[w] != degree[v] {
                continue;
            }
            if (0..v).all(|u| adj[u][v] == adj[image[u]][w]) {
                image[v] = w;
                used[w] = true;
                total += go(v + 1, adj, degree, image, used);
                used[w] = false;
            }
        }
        total
    }
    go(0, &adj, &degree, &mut image, &mut used)
}

/// Whether two graphs are isomorphic, by the same backtracking search.
pub fn brute_force_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(v: usize, a: &Graph, b: &Graph, image: &mut [usize], used: &mut [bool]) -> bool {
        let n = a.order();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            if (0..v).all(|u| a.has_edge(u, v) == b.has_edge(image[u], w)) {
                image[v] = w;
                used[w] = true;
                if go(v + 1, a, b, image, used) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }
    go(0, a, b, &mut image, &mut used)
}

fn to_poly(code: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    let mut c = code;
    for slot in out.iter_mut() {
        *slot = c % p;
        c /= p;
    }
    out
}

fn from_poly(poly: &[u32], p: u32) -> u32 {
    poly.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Product of two elements by polynomial multiplication and long division
/// by the defining polynomial, bypassing the log tables.
pub fn schoolbook_mul(f: &Field, a: FieldElement, b: FieldElement) -> FieldElement {
    let p = f.characteristic();
    let m = f.modulus();
    let d = m.len() - 1;
    let (x, y) = (to_poly(a.0, p, d), to_poly(b.0, p, d));
    let mut prod = vec![0u32; 2 * d];
    for (i, &xi) in x.iter().enumerate() {
        for (j, &yj) in y.iter().enumerate() {
            prod[i + j] = (prod[i + j] + xi * yj) % p;
        }
    }
    for top in (d..2 * d).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        for (k, &mk) in m.iter().enumerate() {
            let slot = top - d + k;
            prod[slot] = (prod[slot] + p - (c * mk) % p) % p;
        }
    }
    FieldElement(from_poly(&prod[..d], p))
}

pub fn schoolbook_add(f: &Field, a: FieldElement, b: FieldElement) -> FieldElement {
    let p = f.characteristic();
    let d = f.modulus().len() - 1;
    let (x, y) = (to_poly(a.0, p, d), to_poly(b.0, p, d));
    let sum: Vec<u32> = x.iter().zip(&y).map(|(&s, &t)| (s + t) % p).collect();
    FieldElement(from_poly(&sum, p))
}

/// Exhaustive check of the field axioms and of the table arithmetic
/// against schoolbook arithmetic. Returns the first failure.
pub fn check_field(f: &Field) -> Result<(), String> {
    let els: Vec<FieldElement> = f.elements().collect();
    for &a in &els {
        if f.add(a, FieldElement::ZERO) != a || f.mul(a, FieldElement::ONE) != a {
            return Err(format!("identity fails at {a}"));
        }
        if f.add(a, f.neg(a)) != FieldElement::ZERO {
            return Err(format!("additive inverse fails at {a}"));
        }
        match f.inv(a) {
            Some(i) if f.mul(a, i) != FieldElement::ONE => return Err(format!("inverse fails at {a}")),
            None if !a.is_zero() => return Err(format!("{a} has no inverse")),
            _ => {}
        }
        if f.norm(a) != f.mul(a, f.conj(a)) || !f.in_subfield(f.norm(a)) {
            return Err(format!("norm fails at {a}"));
        }
        for &b in &els {
            if f.mul(a, b) != schoolbook_mul(f, a, b) {
                return Err(format!("{a}·{b} disagrees with schoolbook product"));
            }
            if f.add(a, b) != schoolbook_add(f, a, b) {
                return Err(format!("{a}+{b} disagrees with schoolbook sum"));
            }
            if f.mul(a, b) != f.mul(b, a) || f.add(a, b) != f.add(b, a) {
                return Err(format!("commutativity fails at {a}, {b}"));
            }
            // Frobenius is additive and multiplicative.
            let fr = |x| f.frobenius(x, 1);
            if fr(f.add(a, b)) != f.add(fr(a), fr(b)) || fr(f.mul(a, b)) != f.mul(fr(a), fr(b)) {
                return Err(format!("frobenius is not a field map at {a}, {b}"));
            }
        }
    }
    // Associativity and distributivity on a stride through the triples keeps
    // this cubic check affordable for the larger fields.
    let stride = (els.len() / 24).max(1);
    for &a in els.iter().step_by(stride) {
        for &b in &els {
            for &c in els.iter().step_by(stride) {
                if f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c)) {
                    return Err(format!("multiplication not associative at {a}, {b}, {c}"));
                }
                if f.add(f.add(a, b), c) != f.add(a, f.add(b, c)) {
                    return Err(format!("addition not associative at {a}, {b}, {c}"));
                }
                if f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c)) {
                    return Err(format!("distributivity fails at {a}, {b}, {c}"));
                }
            }
        }
    }
    Ok(())
}

/// A² = kI + λA + μ(J − I − A), with A expanded to an integer matrix and
/// squared the slow way.
pub fn srg_identity_dense(g: &Graph, p: &SrgParams) -> bool {
    let n = g.order();
    if n as u64 != p.v {
        return false;
    }
    let a: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| g.has_edge(i, j) as i64).collect())
        .collect();
    let (k, l, m) = (p.k as i64, p.lambda as i64, p.mu as i64);
    for i in 0..n {
        for j in 0..n {
            let sq: i64 = (0..n).map(|t| a[i][t] * a[t][j]).sum();
            let rhs = if i == j {
                k
            } else if a[i][j] == 1 {
                l
            } else {
                m
            };
            if sq != rhs {
                return false;
            }
        }
    }
    true
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut StdRng) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("edges are in range")
}

/// A random graph on at most `max_n` vertices, drawn so that symmetric
/// graphs are common: either sparse/dense random, or a disjoint union of
/// small cliques and cycles, possibly complemented.
pub fn random_test_graph(max_n: usize, rng: &mut StdRng) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let g = if rng.gen_bool(0.5) {
        let p = [0.15, 0.3, 0.5, 0.7][rng.gen_range(0..4)];
        random_graph(n, p, rng)
    } else {
        let mut g = Graph::empty(0);
        while g.order() < n {
            let m = rng.gen_range(1..=(n - g.order()).min(5));
            let part = if m >= 3 && rng.gen_bool(0.5) { Graph::cycle(m) } else { Graph::complete(m) };
            g = g.disjoint_union(&part);
        }
        g
    };
    if rng.gen_bool(0.3) {
        g.complement()
    } else {
        g
    }
}

pub fn random_permutation(n: usize, rng: &mut StdRng) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).expect("shuffle is a bijection")
}

/// One oracle comparison and its outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Automorphism orders against [`count_automorphisms`], and canonical forms
/// under `relabelings` random relabelings, on `graphs` random graphs.
pub fn aut_oracle_check(graphs: usize, max_n: usize, relabelings: usize, seed: u64) -> OracleCheck {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut order_mismatches = 0;
    let mut canon_mismatches = 0;
    for _ in 0..graphs {
        let g = random_test_graph(max_n, &mut rng);
        let engine = automorphism_group(&g).expect("small graph").order();
        if engine != BigUint::from(count_automorphisms(&g)) {
            order_mismatches += 1;
        }
        let canon = canonical_form(&g).expect("small graph");
        for _ in 0..relabelings {
            let p = random_permutation(g.order(), &mut rng);
            if canonical_form(&g.relabel(&p)).expect("small graph") != canon {
                canon_mismatches += 1;
            }
        }
    }
    OracleCheck {
        name: "automorphism engine vs brute force".into(),
        passed: order_mismatches == 0 && canon_mismatches == 0,
        detail: format!(
            "{graphs} graphs (seed {seed}): {order_mismatches} order mismatches, \
             {canon_mismatches} canonical-form mismatches over {relabelings} relabelings each"
        ),
    }
}

/// Every oracle suite: field axioms, automorphism counts, SRG identity.
pub fn selftest(seed: u64) -> Vec<OracleCheck> {
    let mut checks = Vec::new();
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let f = Field::for_q(q).expect("prime power");
        let result = check_field(&f);
        checks.push(OracleCheck {
            name: format!("field axioms GF({})", q * q),
            passed: result.is_ok(),
            detail: result.err().unwrap_or_else(|| format!("modulus {}", f.modulus_string())),
        });
    }
    checks.push(aut_oracle_check(200, 10, 5, seed));
    for (n, q) in [(2usize, 2u64), (2, 3), (3, 2)] {
        let g = build_nu(n, q).expect("small geometry").graph;
        let p = expected_params(n as u32, q);
        let dense = srg_identity_dense(&g, &p);
        let fast = verify_srg_identity(&g, &p).unwrap_or(false);
        checks.push(OracleCheck {
            name: format!("SRG identity NU({}, {}²)", n + 1, q),
            passed: dense && fast,
            detail: format!("{p}: dense {dense}, bitset {fast}"),
        });
    }
    checks
}
