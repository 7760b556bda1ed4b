//! Unitary and semi-unitary groups acting on PG(n, q²).
//!
//! Matrices act on column vectors, after the field automorphism:
//! `x ↦ M·σ(x)`. A matrix is unitary up to scalars when `M^H M = cI`
//! with `c` in GF(q)*, where `M^H` is the conjugate transpose.

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use thiserror::Error;

use crate::field::{prime_power, Field, FieldElement};
use crate::geometry::{HermitianGeometry, ProjectiveSpace};
use crate::graph::TangentGraph;
use crate::perm::{PermError, PermGroup, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnitaryError {
    #[error("matrix is not square or empty")]
    BadShape,
    #[error("matrix is singular")]
    Singular,
    #[error("field automorphism exponent {auto} out of range 0..{degree}")]
    AutoOutOfRange { auto: u32, degree: u32 },
    #[error("map of dimension {map} applied to a space of dimension {space}")]
    DimensionMismatch { map: usize, space: usize },
    #[error("map does not preserve the Hermitian form")]
    NotUnitary,
    #[error("vertex {0} is sent to a point outside the vertex set")]
    LeavesVertexSet(usize),
    #[error("generators give a group of order {actual}, expected {expected}")]
    Certification { expected: BigUint, actual: BigUint },
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// `x ↦ M·x^{p^i}` on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemilinearMap {
    pub matrix: Vec<Vec<FieldElement>>,
    pub field_auto: u32,
}

impl SemilinearMap {
    pub fn new(matrix: Vec<Vec<FieldElement>>, field_auto: u32) -> Result<SemilinearMap, UnitaryError> {
        let d = matrix.len();
        if d == 0 || matrix.iter().any(|row| row.len() != d) {
            return Err(UnitaryError::BadShape);
        }
        Ok(SemilinearMap { matrix, field_auto })
    }

    pub fn identity(dim: usize) -> SemilinearMap {
        SemilinearMap::frobenius(dim, 0)
    }

    /// Identity matrix composed with x ↦ x^{p^i}.
    pub fn frobenius(dim: usize, i: u32) -> SemilinearMap {
        let matrix = (0..dim)
            .map(|r| {
                (0..dim)
                    .map(|c| if r == c { FieldElement::ONE } else { FieldElement::ZERO })
                    .collect()
            })
            .collect();
        SemilinearMap { matrix, field_auto: i }
    }

    /// The matrix moving coordinate `c` to position `perm[c]`.
    pub fn permutation(perm: &[usize]) -> SemilinearMap {
        let d = perm.len();
        let mut m = SemilinearMap::identity(d);
        for row in m.matrix.iter_mut() {
            row.fill(FieldElement::ZERO);
        }
        for (c, &r) in perm.iter().enumerate() {
            m.matrix[r][c] = FieldElement::ONE;
        }
        m
    }

    pub fn diagonal(entries: &[FieldElement]) -> SemilinearMap {
        let mut m = SemilinearMap::identity(entries.len());
        for (i, &x) in entries.iter().enumerate() {
            m.matrix[i][i] = x;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    fn check_auto(&self, f: &Field) -> Result<(), UnitaryError> {
        if self.field_auto >= f.degree() {
            return Err(UnitaryError::AutoOutOfRange {
                auto: self.field_auto,
                degree: f.degree(),
            });
        }
        Ok(())
    }

    pub fn apply(&self, f: &Field, x: &[FieldElement]) -> Vec<FieldElement> {
        let sx: Vec<FieldElement> = x.iter().map(|&c| f.frobenius(c, self.field_auto)).collect();
        self.matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&sx)
                    .fold(FieldElement::ZERO, |acc, (&m, &c)| f.add(acc, f.mul(m, c)))
            })
            .collect()
    }

    /// The induced permutation of the points of `space`.
    pub fn point_permutation(&self, space: &ProjectiveSpace) -> Result<Permutation, UnitaryError> {
        if self.dim() != space.dimension() + 1 {
            return Err(UnitaryError::DimensionMismatch {
                map: self.dim(),
                space: space.dimension() + 1,
            });
        }
        let f = space.field();
        self.check_auto(f)?;
        if determinant(f, &self.matrix).is_zero() {
            return Err(UnitaryError::Singular);
        }
        let images = space
            .points()
            .iter()
            .map(|p| {
                space
                    .index_of(&self.apply(f, &p.coords))
                    .expect("a nonsingular map sends points to points")
            })
            .collect();
        Ok(Permutation::from_images(images)?)
    }
}

/// Determinant by Gaussian elimination.
pub fn determinant(f: &Field, m: &[Vec<FieldElement>]) -> FieldElement {
    let n = m.len();
    let mut a: Vec<Vec<FieldElement>> = m.to_vec();
    let mut det = FieldElement::ONE;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return FieldElement::ZERO;
        };
        if pivot != col {
            a.swap(pivot, col);
            det = f.neg(det);
        }
        det = f.mul(det, a[col][col]);
        let inv = f.inv(a[col][col]).expect("pivot is nonzero");
        let (top, bottom) = a.split_at_mut(col + 1);
        let pivot = &top[col];
        for row in bottom {
            let factor = f.mul(row[col], inv);
            if factor.is_zero() {
                continue;
            }
            for c in col..n {
                row[c] = f.sub(row[c], f.mul(factor, pivot[c]));
            }
        }
    }
    det
}

/// Whether `m` preserves the form `Σ X_i^{q+1}` up to a scalar, i.e.
/// `M^H M = cI` with `c ≠ 0`. The field automorphism never matters.
pub fn unitary_check(f: &Field, m: &SemilinearMap) -> Result<bool, UnitaryError> {
    m.check_auto(f)?;
    if determinant(f, &m.matrix).is_zero() {
        return Err(UnitaryError::Singular);
    }
    let d = m.dim();
    let entry = |i: usize, j: usize| {
        (0..d).fold(FieldElement::ZERO, |acc, k| {
            f.add(acc, f.mul(f.conj(m.matrix[k][i]), m.matrix[k][j]))
        })
    };
    let c = entry(0, 0);
    if c.is_zero() || !f.in_subfield(c) {
        return Ok(false);
    }
    for i in 0..d {
        for j in 0..d {
            let expected = if i == j { c } else { FieldElement::ZERO };
            if entry(i, j) != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every 2×2 matrix with `M^H M = I`, in lexicographic order of entries.
pub fn gu2_elements(f: &Field) -> Vec<[[FieldElement; 2]; 2]> {
    let els: Vec<FieldElement> = f.elements().collect();
    let firsts: Vec<(FieldElement, FieldElement)> = els
        .iter()
        .flat_map(|&a| els.iter().map(move |&c| (a, c)))
        .filter(|&(a, c)| f.add(f.norm(a), f.norm(c)) == FieldElement::ONE)
        .collect();
    firsts
        .par_iter()
        .flat_map_iter(|&(a, c)| {
            let els = &els;
            els.iter().flat_map(move |&b| {
                els.iter().filter_map(move |&d| {
                    let unit = f.add(f.norm(b), f.norm(d)) == FieldElement::ONE;
                    let orth = f.add(f.mul(f.conj(a), b), f.mul(f.conj(c), d)).is_zero();
                    (unit && orth).then_some([[a, b], [c, d]])
                })
            })
        })
        .collect()
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// |PGU(n+1, q)| = q^{m(m-1)/2} Π_{i=2}^{m} (q^i − (−1)^i) with m = n+1.
pub fn pgu_order(n: usize, q: u64) -> BigUint {
    let m = n as u32 + 1;
    let qb = BigUint::from(q);
    let mut order = qb.pow(m * (m - 1) / 2);
    for i in 2..=m {
        let qi = qb.pow(i);
        order *= if i % 2 == 0 { qi - 1u32 } else { qi + 1u32 };
    }
    order
}

/// |PΓU(n+1, q)| = 2e·|PGU(n+1, q)| for q = p^e.
pub fn pgammau_order(n: usize, q: u64) -> Result<BigUint, crate::Error> {
    let (_, e) = prime_power(q)?;
    Ok(pgu_order(n, q) * BigUint::from(2 * e))
}

/// A group of semilinear maps and its faithful action on the points.
#[derive(Debug, Clone)]
pub struct UnitaryGroup {
    pub geometry: HermitianGeometry,
    /// One map per generator of `group`, in the same order.
    pub maps: Vec<SemilinearMap>,
    pub group: PermGroup,
    /// Random unitary matrices that had to be drawn to reach the full order.
    pub random_draws: usize,
}

impl UnitaryGroup {
    fn empty(geometry: HermitianGeometry) -> UnitaryGroup {
        let degree = geometry.space().len();
        UnitaryGroup {
            geometry,
            maps: Vec::new(),
            group: PermGroup::trivial(degree),
            random_draws: 0,
        }
    }

    /// Adds `m` if it enlarges the group.
    fn offer(&mut self, m: SemilinearMap) -> Result<(), UnitaryError> {
        let perm = m.point_permutation(self.geometry.space())?;
        if self.group.add_generator(&perm)? {
            self.maps.push(m);
        }
        Ok(())
    }

    pub fn order(&self) -> BigUint {
        self.group.order()
    }

    /// Generators restricted to the vertices of `tg`.
    pub fn vertex_generators(&self, tg: &TangentGraph) -> Result<Vec<Permutation>, UnitaryError> {
        self.group
            .generators()
            .iter()
            .map(|g| restrict(g, tg))
            .collect()
    }

    pub fn on_vertices(&self, tg: &TangentGraph) -> Result<PermGroup, UnitaryError> {
        Ok(PermGroup::new(tg.graph.order(), &self.vertex_generators(tg)?)?)
    }

    /// The action on the isotropic points, indexed in point order.
    pub fn on_isotropic(&self) -> Result<PermGroup, UnitaryError> {
        let iso = self.geometry.isotropic_points();
        let mut index = vec![usize::MAX; self.geometry.space().len()];
        for (i, &p) in iso.iter().enumerate() {
            index[p] = i;
        }
        let gens = self
            .group
            .generators()
            .iter()
            .map(|g| {
                let images = iso.iter().map(|&p| index[g.apply(p)]).collect::<Vec<_>>();
                if images.contains(&usize::MAX) {
                    return Err(UnitaryError::NotUnitary);
                }
                Ok(Permutation::from_images(images)?)
            })
            .collect::<Result<Vec<_>, UnitaryError>>()?;
        Ok(PermGroup::new(iso.len(), &gens)?)
    }
}

fn restrict(point_perm: &Permutation, tg: &TangentGraph) -> Result<Permutation, UnitaryError> {
    let images = tg
        .vertex_point
        .iter()
        .enumerate()
        .map(|(v, &p)| tg.point_vertex[point_perm.apply(p)].ok_or(UnitaryError::LeavesVertexSet(v)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Permutation::from_images(images)?)
}

/// Orthonormal frame built column by column from random vectors.
fn random_unitary(f: &Field, dim: usize, rng: &mut StdRng) -> SemilinearMap {
    let inner = |u: &[FieldElement], v: &[FieldElement]| {
        u.iter()
            .zip(v)
            .fold(FieldElement::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(f.conj(a), b)))
    };
    let mut cols: Vec<Vec<FieldElement>> = Vec::with_capacity(dim);
    while cols.len() < dim {
        let mut v: Vec<FieldElement> = (0..dim).map(|_| f.element(rng.gen_range(0..f.order()))).collect();
        for u in &cols {
            let c = inner(u, &v);
            for (x, &y) in v.iter_mut().zip(u) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
        let h = inner(&v, &v);
        let Some(h_inv) = f.inv(h) else { continue };
        let s = f.elements().find(|&s| f.norm(s) == h_inv).expect("the norm map is onto GF(q)*");
        cols.push(v.iter().map(|&x| f.mul(x, s)).collect());
    }
    let matrix = (0..dim).map(|r| (0..dim).map(|c| cols[c][r]).collect()).collect();
    SemilinearMap { matrix, field_auto: 0 }
}

/// PGU(n+1, q) on the points of PG(n, q²), generated by permutation
/// matrices, diag(α, 1, …) with norm(α) = 1, and GU(2, q) on the first two
/// coordinates. Random unitary matrices are added if these fall short.
pub fn pgu_for_geometry(geometry: &HermitianGeometry) -> Result<UnitaryGroup, UnitaryError> {
    let f = geometry.field().clone();
    let dim = geometry.dimension() + 1;
    let q = geometry.q();
    let expected = pgu_order(geometry.dimension(), q);
    let mut g = UnitaryGroup::empty(geometry.clone());

    for p in all_permutations(dim) {
        g.offer(SemilinearMap::permutation(&p))?;
    }
    for alpha in f.elements().filter(|&a| f.norm(a) == FieldElement::ONE) {
        let mut d = vec![FieldElement::ONE; dim];
        d[0] = alpha;
        g.offer(SemilinearMap::diagonal(&d))?;
    }
    for block in gu2_elements(&f) {
        if g.order() == expected {
            break;
        }
        let mut m = SemilinearMap::identity(dim);
        for (row, b) in m.matrix.iter_mut().zip(block) {
            row[..2].copy_from_slice(&b);
        }
        g.offer(m)?;
    }
    let mut rng = StdRng::seed_from_u64(q);
    while g.order() < expected && g.random_draws < 256 {
        g.offer(random_unitary(&f, dim, &mut rng))?;
        g.random_draws += 1;
    }
    if g.order() != expected {
        return Err(UnitaryError::Certification {
            expected,
            actual: g.order(),
        });
    }
    Ok(g)
}

/// PΓU(n+1, q): PGU(n+1, q) together with x ↦ x^p.
pub fn pgammau_for_geometry(geometry: &HermitianGeometry) -> Result<UnitaryGroup, UnitaryError> {
    let mut g = pgu_for_geometry(geometry)?;
    let dim = geometry.dimension() + 1;
    if geometry.field().degree() > 1 {
        g.offer(SemilinearMap::frobenius(dim, 1))?;
    }
    let (_, e) = prime_power(geometry.q()).expect("geometry was built from a prime power");
    let expected = pgu_order(geometry.dimension(), geometry.q()) * BigUint::from(2 * e);
    if g.order() != expected {
        return Err(UnitaryError::Certification {
            expected,
            actual: g.order(),
        });
    }
    Ok(g)
}

pub fn pgu_group(n: usize, q: u64) -> Result<UnitaryGroup, crate::Error> {
    Ok(pgu_for_geometry(&HermitianGeometry::for_q(n, q)?)?)
}

pub fn pgammau_group(n: usize, q: u64) -> Result<UnitaryGroup, crate::Error> {
    Ok(pgammau_for_geometry(&HermitianGeometry::for_q(n, q)?)?)
}

/// Certified generators of PGU(3, q).
pub fn pgu3_generators(q: u64) -> Result<Vec<SemilinearMap>, crate::Error> {
    Ok(pgu_group(2, q)?.maps)
}

/// PΓU(3, q) as a permutation group on the points of PG(2, q²).
pub fn pgammau3(q: u64) -> Result<PermGroup, crate::Error> {
    Ok(pgammau_group(2, q)?.group)
}

/// The permutation of the vertices of `tg` induced by a unitary map.
pub fn induced_vertex_permutation(m: &SemilinearMap, tg: &TangentGraph) -> Result<Permutation, UnitaryError> {
    let space = tg.geometry.space();
    if m.dim() != space.dimension() + 1 {
        return Err(UnitaryError::DimensionMismatch {
            map: m.dim(),
            space: space.dimension() + 1,
        });
    }
    if !unitary_check(space.field(), m)? {
        return Err(UnitaryError::NotUnitary);
    }
    restrict(&m.point_permutation(space)?, tg)
}
