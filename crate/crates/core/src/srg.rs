//! Strongly regular parameters: closed forms for NU(n+1, q²), exact
//! measurement on a graph, and the spectrum they force.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SrgParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    pub const fn new(v: u64, k: u64, lambda: u64, mu: u64) -> SrgParams {
        SrgParams { v, k, lambda, mu }
    }

    /// `k(k − λ − 1) = (v − k − 1)μ`.
    pub fn is_feasible(&self) -> bool {
        let (v, k, l, m) = (self.v as i128, self.k as i128, self.lambda as i128, self.mu as i128);
        k * (k - l - 1) == (v - k - 1) * m
    }

    /// Parameters of the complementary graph.
    pub fn complement(&self) -> SrgParams {
        let SrgParams { v, k, lambda, mu } = *self;
        SrgParams {
            v,
            k: v - k - 1,
            lambda: v + mu - 2 * k - 2,
            mu: v + lambda - 2 * k,
        }
    }
}

impl std::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {}, {})", self.v, self.k, self.lambda, self.mu)
    }
}

/// Why a graph failed to be strongly regular.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotSrg {
    #[error("vertices {0} and {1} have different degrees")]
    Irregular(usize, usize),
    #[error("adjacent pairs {first:?} and {second:?} have different common-neighbour counts")]
    Lambda {
        first: (usize, usize),
        second: (usize, usize),
    },
    #[error("non-adjacent pairs {first:?} and {second:?} have different common-neighbour counts")]
    Mu {
        first: (usize, usize),
        second: (usize, usize),
    },
    /// Complete or edgeless: one of λ, μ has no pair to be measured on.
    #[error("degenerate graph: {0}")]
    Degenerate(Degenerate),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degenerate {
    Complete,
    Edgeless,
    Empty,
}

impl std::fmt::Display for Degenerate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Degenerate::Complete => "complete (no non-adjacent pairs)",
            Degenerate::Edgeless => "edgeless (no adjacent pairs)",
            Degenerate::Empty => "no vertices",
        };
        f.write_str(s)
    }
}

fn eps(n: u32) -> i128 {
    if (n + 1).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn exact_div(num: i128, den: i128) -> i128 {
    assert_eq!(num % den, 0, "{num} is not divisible by {den}");
    num / den
}

fn to_u64(x: i128) -> u64 {
    u64::try_from(x).expect("parameter is a nonnegative 64-bit integer")
}

/// Closed-form parameters of NU(n+1, q²) with ε = (−1)^{n+1}.
pub fn expected_params(n: u32, q: u64) -> SrgParams {
    assert!(n >= 2);
    let e = eps(n);
    let q = q as i128;
    let v = exact_div(q.pow(n) * (q.pow(n + 1) - e), q + 1);
    let k = (q.pow(n) + e) * (q.pow(n - 1) - e);
    let lambda = q.pow(2 * n - 3) * (q + 1) - e * q.pow(n - 1) * (q - 1) - 2;
    let mu = q.pow(n - 2) * (q + 1) * (q.pow(n - 1) - e);
    SrgParams::new(to_u64(v), to_u64(k), to_u64(lambda), to_u64(mu))
}

/// Closed-form parameters of the complement of NU(n+1, q²), with r = q² − q − 1.
pub fn expected_complement_params(n: u32, q: u64) -> SrgParams {
    assert!(n >= 2);
    let e = eps(n);
    let q = q as i128;
    let r = q * q - q - 1;
    let v = exact_div(q.pow(n) * (q.pow(n + 1) - e), q + 1);
    let k = exact_div(q.pow(n - 1) * r * (q.pow(n) + e), q + 1);
    let mu = exact_div(q.pow(n - 1) * r * (q.pow(n - 2) * r + e), q + 1);
    let lambda = mu + e * q.pow(n - 2) * r - e * q.pow(n - 1);
    SrgParams::new(to_u64(v), to_u64(k), to_u64(lambda), to_u64(mu))
}

/// Measures (v, k, λ, μ) exactly over every vertex pair.
pub fn measure_srg(g: &Graph) -> Result<SrgParams, NotSrg> {
    let v = g.order();
    if v == 0 {
        return Err(NotSrg::Degenerate(Degenerate::Empty));
    }
    let k = g.degree(0);
    if let Some(w) = (1..v).find(|&w| g.degree(w) != k) {
        return Err(NotSrg::Irregular(0, w));
    }
    if k == 0 {
        return Err(NotSrg::Degenerate(Degenerate::Edgeless));
    }
    if k == v - 1 {
        return Err(NotSrg::Degenerate(Degenerate::Complete));
    }

    // Per row: the first adjacent / non-adjacent pair and its count, plus the
    // first pair that disagrees with it.
    #[derive(Clone, Copy)]
    struct RowSummary {
        adj: Option<((usize, usize), usize)>,
        non: Option<((usize, usize), usize)>,
        bad_adj: Option<(usize, usize)>,
        bad_non: Option<(usize, usize)>,
    }
    let rows: Vec<RowSummary> = (0..v)
        .into_par_iter()
        .map(|a| {
            let mut s = RowSummary {
                adj: None,
                non: None,
                bad_adj: None,
                bad_non: None,
            };
            for b in a + 1..v {
                let c = g.common_neighbors(a, b);
                let (slot, bad) = if g.has_edge(a, b) {
                    (&mut s.adj, &mut s.bad_adj)
                } else {
                    (&mut s.non, &mut s.bad_non)
                };
                match slot {
                    None => *slot = Some(((a, b), c)),
                    Some((_, c0)) if *c0 != c && bad.is_none() => *bad = Some((a, b)),
                    _ => {}
                }
            }
            s
        })
        .collect();

    let mut lambda: Option<((usize, usize), usize)> = None;
    let mut mu: Option<((usize, usize), usize)> = None;
    for s in &rows {
        if let (Some((p0, _)), Some(bad)) = (s.adj, s.bad_adj) {
            return Err(NotSrg::Lambda { first: p0, second: bad });
        }
        if let (Some((p0, _)), Some(bad)) = (s.non, s.bad_non) {
            return Err(NotSrg::Mu { first: p0, second: bad });
        }
        if let Some((pair, c)) = s.adj {
            match lambda {
                None => lambda = Some((pair, c)),
                Some((p0, c0)) if c0 != c => return Err(NotSrg::Lambda { first: p0, second: pair }),
                _ => {}
            }
        }
        if let Some((pair, c)) = s.non {
            match mu {
                None => mu = Some((pair, c)),
                Some((p0, c0)) if c0 != c => return Err(NotSrg::Mu { first: p0, second: pair }),
                _ => {}
            }
        }
    }
    let lambda = lambda.map(|(_, c)| c).expect("regular graph of positive degree has an edge");
    let mu = mu.map(|(_, c)| c).expect("non-complete graph has a non-edge");
    Ok(SrgParams::new(v as u64, k as u64, lambda as u64, mu as u64))
}

/// Checks `A² = kI + λA + μ(J − I − A)` entry by entry.
pub fn verify_srg_identity(g: &Graph, p: &SrgParams) -> Result<bool, GraphError> {
    let v = g.order();
    if v as u64 != p.v {
        return Err(GraphError::DimensionMismatch {
            expected: p.v as usize,
            actual: v,
        });
    }
    let ok = (0..v).into_par_iter().all(|a| {
        (0..v).all(|b| {
            let entry = g.common_neighbors(a, b) as u64;
            let expected = if a == b {
                p.k
            } else if g.has_edge(a, b) {
                p.lambda
            } else {
                p.mu
            };
            entry == expected
        })
    });
    Ok(ok)
}

/// Eigenvalues k, θ₁ > θ₂ of a strongly regular graph with their multiplicities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Spectrum {
    pub k: i64,
    pub theta1: i64,
    pub m1: u64,
    pub theta2: i64,
    pub m2: u64,
}

impl std::fmt::Display for Spectrum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}^1, {}^{}, {}^{}", self.k, self.theta1, self.m1, self.theta2, self.m2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("discriminant {0} is not a perfect square")]
    IrrationalEigenvalues(i128),
    #[error("eigenvalues are not integers")]
    HalfIntegralEigenvalues,
    #[error("multiplicity {0} is not a positive integer")]
    BadMultiplicity(String),
    #[error("parameters are degenerate (k = 0 or k = v − 1)")]
    Degenerate,
}

fn isqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let mut r = (n as f64).sqrt() as i128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    (r * r == n).then_some(r)
}

/// Spectrum forced by the parameters.
///
/// θ₁,₂ = ½[(λ − μ) ± √((λ − μ)² + 4(k − μ))]. The multiplicities solve
/// `m₁ + m₂ = v − 1` and `k + m₁θ₁ + m₂θ₂ = 0`. The often-quoted closed
/// form `m₁,₂ = ½[(v − 1) ∓ (2k + (v − 1)(λ − μ))/√Δ]` is equivalent; with
/// the sign inside the fraction flipped it gives m₁ = −3 on (12, 9, 6, 9),
/// so the linear system is used instead.
pub fn spectrum_from_params(p: &SrgParams) -> Result<Spectrum, SpectrumError> {
    if p.k == 0 || p.k + 1 >= p.v {
        return Err(SpectrumError::Degenerate);
    }
    let (v, k, l, m) = (p.v as i128, p.k as i128, p.lambda as i128, p.mu as i128);
    let disc = (l - m) * (l - m) + 4 * (k - m);
    let s = isqrt(disc).ok_or(SpectrumError::IrrationalEigenvalues(disc))?;
    if (l - m + s) % 2 != 0 {
        return Err(SpectrumError::HalfIntegralEigenvalues);
    }
    let theta1 = (l - m + s) / 2;
    let theta2 = (l - m - s) / 2;
    if s == 0 {
        return Err(SpectrumError::BadMultiplicity("θ₁ = θ₂".into()));
    }
    let num1 = -k - (v - 1) * theta2;
    let den = theta1 - theta2;
    if num1 % den != 0 {
        return Err(SpectrumError::BadMultiplicity(format!("{num1}/{den}")));
    }
    let m1 = num1 / den;
    let m2 = v - 1 - m1;
    if m1 <= 0 || m2 <= 0 {
        return Err(SpectrumError::BadMultiplicity(format!("m1 = {m1}, m2 = {m2}")));
    }
    Ok(Spectrum {
        k: k as i64,
        theta1: theta1 as i64,
        m1: m1 as u64,
        theta2: theta2 as i64,
        m2: m2 as u64,
    })
}

/// Rank of an integer matrix over the rationals (fraction-free elimination).
pub fn integer_rank(matrix: &[Vec<i64>]) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let t = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                a[r][c] = t / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Multiplicity of the integer `theta` as an eigenvalue of the adjacency
/// matrix, `v − rank(A − θI)`. Exact for symmetric matrices.
pub fn eigenvalue_multiplicity(g: &Graph, theta: i64) -> usize {
    let v = g.order();
    let m: Vec<Vec<i64>> = (0..v)
        .map(|a| {
            (0..v)
                .map(|b| {
                    let adj = g.has_edge(a, b) as i64;
                    if a == b {
                        adj - theta
                    } else {
                        adj
                    }
                })
                .collect()
        })
        .collect();
    v - integer_rank(&m)
}
