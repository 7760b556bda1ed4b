//! Points and lines of PG(n, q²) and the Hermitian variety
//! `X_0^{q+1} + ... + X_n^{q+1} = 0`.

use std::collections::HashMap;

use thiserror::Error;

use crate::bitset::Bitset;
use crate::field::{Field, FieldElement};

/// Largest projective space that will be enumerated (points).
pub const MAX_POINTS: usize = 1 << 15;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("projective dimension must be at least {min}, got {n}")]
    Dimension { n: usize, min: usize },
    #[error("PG({n}, {order}) has {points} points, above the cap of {cap}")]
    TooLarge {
        n: usize,
        order: u32,
        points: u128,
        cap: usize,
    },
    #[error("a line needs two distinct points")]
    SamePoint,
    #[error("point {0} is isotropic")]
    Isotropic(usize),
    #[error("operation is only defined in the plane (n = 2)")]
    NotPlanar,
}

/// A point of PG(n, q²) with its first nonzero coordinate scaled to 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    pub coords: Vec<FieldElement>,
    /// Position in the enumeration of [`ProjectiveSpace::points`].
    pub index: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineClass {
    /// Meets the variety in exactly one point.
    Tangent,
    /// Meets the variety in q+1 points.
    Secant,
    /// Lies entirely on the variety (n ≥ 3 only).
    Generator,
}

/// A line, stored as the sorted indices of its q²+1 points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line {
    pub base: usize,
    pub direction: usize,
    pub points: Vec<usize>,
}

impl Line {
    pub fn contains(&self, point: usize) -> bool {
        self.points.binary_search(&point).is_ok()
    }
}

/// The points of PG(n, q²) in a fixed order.
///
/// Points are listed by the position of their leading 1 (leftmost first),
/// then lexicographically by the codes of the trailing coordinates.
#[derive(Debug, Clone)]
pub struct ProjectiveSpace {
    field: Field,
    n: usize,
    points: Vec<ProjectivePoint>,
    lookup: HashMap<u64, usize>,
}

fn point_count(n: usize, order: u32) -> u128 {
    let order = order as u128;
    (order.pow(n as u32 + 1) - 1) / (order - 1)
}

impl ProjectiveSpace {
    pub fn new(n: usize, field: Field) -> Result<ProjectiveSpace, GeometryError> {
        if n < 1 {
            return Err(GeometryError::Dimension { n, min: 1 });
        }
        let order = field.order();
        let total = point_count(n, order);
        if total > MAX_POINTS as u128 {
            return Err(GeometryError::TooLarge {
                n,
                order,
                points: total,
                cap: MAX_POINTS,
            });
        }
        let mut points = Vec::with_capacity(total as usize);
        let mut lookup = HashMap::with_capacity(total as usize);
        for lead in 0..=n {
            let free = n - lead;
            let combos = (order as u64).pow(free as u32);
            for mut code in 0..combos {
                let mut coords = vec![FieldElement::ZERO; n + 1];
                coords[lead] = FieldElement::ONE;
                for slot in (lead + 1..=n).rev() {
                    coords[slot] = FieldElement((code % order as u64) as u32);
                    code /= order as u64;
                }
                let index = points.len();
                lookup.insert(Self::key_of(order, &coords), index);
                points.push(ProjectivePoint { coords, index });
            }
        }
        debug_assert_eq!(points.len() as u128, total);
        Ok(ProjectiveSpace {
            field,
            n,
            points,
            lookup,
        })
    }

    fn key_of(order: u32, coords: &[FieldElement]) -> u64 {
        coords
            .iter()
            .fold(0u64, |acc, c| acc * order as u64 + c.0 as u64)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, index: usize) -> &ProjectivePoint {
        &self.points[index]
    }

    /// Scales a nonzero vector so its first nonzero coordinate is 1.
    pub fn normalize(&self, coords: &[FieldElement]) -> Option<Vec<FieldElement>> {
        let lead = coords.iter().find(|c| !c.is_zero())?;
        let inv = self.field.inv(*lead).expect("nonzero lead");
        Some(coords.iter().map(|&c| self.field.mul(c, inv)).collect())
    }

    /// Index of the point spanned by a nonzero vector.
    pub fn index_of(&self, coords: &[FieldElement]) -> Option<usize> {
        assert_eq!(coords.len(), self.n + 1, "coordinate vector has the wrong length");
        let normalized = self.normalize(coords)?;
        self.lookup
            .get(&Self::key_of(self.field.order(), &normalized))
            .copied()
    }

    /// The q²+1 points on the line through `a` and `b`: `b` together with
    /// `a + t·b` for every t.
    pub fn line_through(&self, a: usize, b: usize) -> Result<Line, GeometryError> {
        if a == b {
            return Err(GeometryError::SamePoint);
        }
        let f = &self.field;
        let pa = &self.points[a].coords;
        let pb = &self.points[b].coords;
        let mut points = Vec::with_capacity(f.order() as usize + 1);
        points.push(b);
        let mut buf = vec![FieldElement::ZERO; self.n + 1];
        for t in f.elements() {
            for (slot, (&x, &y)) in buf.iter_mut().zip(pa.iter().zip(pb)) {
                *slot = f.add(x, f.mul(t, y));
            }
            points.push(self.index_of(&buf).expect("a + t·b is nonzero for independent a, b"));
        }
        points.sort_unstable();
        Ok(Line {
            base: a,
            direction: b,
            points,
        })
    }

    /// Every line of the space, each once, in order of its two smallest points.
    pub fn lines(&self) -> Vec<Line> {
        let v = self.points.len();
        let mut covered: Vec<Bitset> = (0..v).map(|_| Bitset::new(v)).collect();
        let mut lines = Vec::new();
        for a in 0..v {
            for b in a + 1..v {
                if covered[a].contains(b) {
                    continue;
                }
                let line = self.line_through(a, b).expect("distinct points");
                for &x in &line.points {
                    for &y in &line.points {
                        covered[x].insert(y);
                    }
                }
                lines.push(line);
            }
        }
        lines
    }
}

/// The Hermitian variety H(n, q²) inside PG(n, q²), with the full line set
/// classified by how each line meets the variety.
#[derive(Debug, Clone)]
pub struct HermitianGeometry {
    space: ProjectiveSpace,
    isotropic: Vec<bool>,
    lines: Vec<Line>,
    classes: Vec<LineClass>,
    lines_through: Vec<Vec<usize>>,
}

impl HermitianGeometry {
    pub fn new(n: usize, field: Field) -> Result<HermitianGeometry, GeometryError> {
        if n < 2 {
            return Err(GeometryError::Dimension { n, min: 2 });
        }
        let space = ProjectiveSpace::new(n, field)?;
        let isotropic: Vec<bool> = space
            .points()
            .iter()
            .map(|p| hermitian_value(&space, p).is_zero())
            .collect();
        let lines = space.lines();
        let mut lines_through = vec![Vec::new(); space.len()];
        for (i, line) in lines.iter().enumerate() {
            for &p in &line.points {
                lines_through[p].push(i);
            }
        }
        let mut geometry = HermitianGeometry {
            space,
            isotropic,
            lines,
            classes: Vec::new(),
            lines_through,
        };
        geometry.classes = geometry.lines.iter().map(|l| geometry.classify_line(l)).collect();
        Ok(geometry)
    }

    pub fn for_q(n: usize, q: u64) -> Result<HermitianGeometry, crate::Error> {
        let field = Field::for_q(q)?;
        Ok(HermitianGeometry::new(n, field)?)
    }

    pub fn space(&self) -> &ProjectiveSpace {
        &self.space
    }

    pub fn field(&self) -> &Field {
        self.space.field()
    }

    pub fn dimension(&self) -> usize {
        self.space.dimension()
    }

    pub fn q(&self) -> u64 {
        self.field().q() as u64
    }

    pub fn is_isotropic(&self, point: usize) -> bool {
        self.isotropic[point]
    }

    pub fn isotropic_points(&self) -> Vec<usize> {
        (0..self.space.len()).filter(|&p| self.isotropic[p]).collect()
    }

    pub fn non_isotropic_points(&self) -> Vec<usize> {
        (0..self.space.len()).filter(|&p| !self.isotropic[p]).collect()
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn line_class(&self, line: usize) -> LineClass {
        self.classes[line]
    }

    /// Indices (into [`HermitianGeometry::lines`]) of the lines through a point.
    pub fn lines_through(&self, point: usize) -> &[usize] {
        &self.lines_through[point]
    }

    /// Index of the line through two distinct points.
    pub fn line_index(&self, a: usize, b: usize) -> Result<usize, GeometryError> {
        if a == b {
            return Err(GeometryError::SamePoint);
        }
        self.lines_through[a]
            .iter()
            .copied()
            .find(|&l| self.lines[l].contains(b))
            .ok_or(GeometryError::SamePoint)
    }

    pub fn line_through(&self, a: usize, b: usize) -> Result<Line, GeometryError> {
        self.space.line_through(a, b)
    }

    /// Classifies a line by its number of isotropic points.
    ///
    /// # Panics
    /// If the count is not 1, q+1 or q²+1, which no line over GF(q²) can have.
    pub fn classify_line(&self, line: &Line) -> LineClass {
        let q = self.q() as usize;
        let hits = line.points.iter().filter(|&&p| self.isotropic[p]).count();
        match hits {
            1 => LineClass::Tangent,
            h if h == q + 1 => LineClass::Secant,
            h if h == q * q + 1 => LineClass::Generator,
            h => panic!("line meets the Hermitian variety in {h} points; geometry is corrupt"),
        }
    }

    /// The number of lines of each class, as (tangent, secant, generator).
    pub fn line_census(&self) -> (usize, usize, usize) {
        let mut census = (0, 0, 0);
        for c in &self.classes {
            match c {
                LineClass::Tangent => census.0 += 1,
                LineClass::Secant => census.1 += 1,
                LineClass::Generator => census.2 += 1,
            }
        }
        census
    }

    /// Tangent lines through a point of the plane (q+1 for a non-isotropic point).
    pub fn tangent_lines_through(&self, point: usize) -> Result<Vec<&Line>, GeometryError> {
        if self.dimension() != 2 {
            return Err(GeometryError::NotPlanar);
        }
        if self.isotropic[point] {
            return Err(GeometryError::Isotropic(point));
        }
        Ok(self.tangents_at(point))
    }

    fn tangents_at(&self, point: usize) -> Vec<&Line> {
        self.lines_through[point]
            .iter()
            .filter(|&&l| self.classes[l] == LineClass::Tangent)
            .map(|&l| &self.lines[l])
            .collect()
    }

    /// For an isotropic point of the plane, the unique tangent touching there.
    pub fn tangent_at_isotropic(&self, point: usize) -> Result<&Line, GeometryError> {
        if self.dimension() != 2 {
            return Err(GeometryError::NotPlanar);
        }
        let tangents = self.tangents_at(point);
        debug_assert_eq!(tangents.len(), 1);
        Ok(tangents[0])
    }

    /// The isotropic point of a tangent line.
    pub fn tangency_point(&self, line: &Line) -> Option<usize> {
        let mut hits = line.points.iter().copied().filter(|&p| self.isotropic[p]);
        let first = hits.next()?;
        hits.next().is_none().then_some(first)
    }
}

/// `Σ_i X_i^{q+1}` evaluated on the point's normalized coordinates. The value
/// lies in GF(q); rescaling multiplies it by a nonzero norm, so being zero
/// is a property of the point.
pub fn hermitian_value(space: &ProjectiveSpace, point: &ProjectivePoint) -> FieldElement {
    let f = space.field();
    point
        .coords
        .iter()
        .fold(FieldElement::ZERO, |acc, &x| f.add(acc, f.norm(x)))
}

/// Closed form for |H(n, q²)|: `(q^{n+1} + (-1)^n)(q^n - (-1)^n) / (q² - 1)`.
pub fn hermitian_count_expected(n: u32, q: u64) -> u128 {
    let q = q as i128;
    let sign: i128 = if n.is_multiple_of(2) { 1 } else { -1 };
    let num = (q.pow(n + 1) + sign) * (q.pow(n) - sign);
    let den = q * q - 1;
    assert_eq!(num % den, 0, "point count formula is integral");
    (num / den) as u128
}

/// Number of points of PG(n, q²).
pub fn projective_point_count(n: u32, q: u64) -> u128 {
    point_count(n as usize, (q * q) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geom(n: usize, q: u64) -> HermitianGeometry {
        HermitianGeometry::for_q(n, q).unwrap()
    }

    #[test]
    fn point_counts() {
        for (n, q, expected) in [(2, 2, 21), (2, 3, 91), (3, 2, 85)] {
            let space = ProjectiveSpace::new(n, Field::for_q(q).unwrap()).unwrap();
            assert_eq!(space.len(), expected);
            assert_eq!(projective_point_count(n as u32, q), expected as u128);
        }
    }

    #[test]
    fn normalization_is_canonical() {
        let space = ProjectiveSpace::new(2, Field::for_q(3).unwrap()).unwrap();
        let f = space.field().clone();
        for p in space.points() {
            assert_eq!(space.index_of(&p.coords), Some(p.index));
            for c in f.elements().skip(1) {
                let scaled: Vec<_> = p.coords.iter().map(|&x| f.mul(c, x)).collect();
                assert_eq!(space.index_of(&scaled), Some(p.index));
            }
        }
        assert_eq!(space.index_of(&[FieldElement::ZERO; 3]), None);
    }

    #[test]
    fn hermitian_values() {
        let g = geom(2, 2);
        let space = g.space();
        let e0 = space.index_of(&[FieldElement::ONE, FieldElement::ZERO, FieldElement::ZERO]).unwrap();
        assert_eq!(hermitian_value(space, space.point(e0)), FieldElement::ONE);
        assert!(!g.is_isotropic(e0));
        assert_eq!(g.isotropic_points().len(), 9);
        assert_eq!(geom(3, 2).isotropic_points().len(), 45);
    }

    #[test]
    fn closed_form_counts() {
        assert_eq!(hermitian_count_expected(2, 2), 9);
        assert_eq!(hermitian_count_expected(2, 3), 28);
        assert_eq!(hermitian_count_expected(3, 2), 45);
        for q in [2, 3, 4, 5, 7, 8] {
            assert_eq!(hermitian_count_expected(2, q), (q * q * q + 1) as u128);
        }
    }

    #[test]
    fn line_through_rejects_equal_points() {
        let g = geom(2, 2);
        assert_eq!(g.line_through(3, 3), Err(GeometryError::SamePoint));
    }

    #[test]
    fn lines_of_pg2_4() {
        let g = geom(2, 2);
        assert_eq!(g.lines().len(), 21);
        for line in g.lines() {
            assert_eq!(line.points.len(), 5);
        }
        let line = g.line_through(0, 7).unwrap();
        assert!(line.contains(0) && line.contains(7));
        assert_eq!(line.points, g.line_through(7, 0).unwrap().points);
        assert_eq!(g.line_census(), (9, 12, 0));
    }

    #[test]
    fn plane_tangents_through_points() {
        for q in [2u64, 3] {
            let g = geom(2, q);
            for p in 0..g.space().len() {
                if g.is_isotropic(p) {
                    assert_eq!(g.tangent_lines_through(p), Err(GeometryError::Isotropic(p)));
                    let t = g.tangent_at_isotropic(p).unwrap();
                    assert_eq!(g.tangency_point(t), Some(p));
                } else {
                    assert_eq!(g.tangent_lines_through(p).unwrap().len() as u64, q + 1);
                }
            }
        }
    }

    #[test]
    fn tangents_need_the_plane() {
        let g = geom(3, 2);
        assert_eq!(g.tangent_lines_through(0).unwrap_err(), GeometryError::NotPlanar);
    }

    #[test]
    fn hermitian_surface_has_generators() {
        let g = geom(3, 2);
        let (_, _, generators) = g.line_census();
        assert_eq!(generators, 27);
    }
}
