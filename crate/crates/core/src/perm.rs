//! Permutations and permutation groups held as a base and strong
//! generating set (deterministic Schreier–Sims).

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("image list is not a bijection on 0..{0}")]
    NotBijection(usize),
    #[error("generators have mixed degrees ({0} and {1})")]
    DegreeMismatch(usize, usize),
    #[error("a generator maps clique {clique} onto a set that is not in the clique list")]
    NotInvariant { clique: usize },
    #[error("base point {point} is outside the degree {degree}")]
    BasePoint { point: usize, degree: usize },
    #[error("wreath product blocks must all have the same size")]
    UnequalBlocks,
}

/// A bijection of `{0, .., d-1}`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Permutation, PermError> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            if x >= d || std::mem::replace(&mut seen[x], true) {
                return Err(PermError::NotBijection(d));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Permutation, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(PermError::NotBijection(degree));
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`: `x ↦ other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.then(&base);
            }
            base = base.then(&base);
            k >>= 1;
        }
        result
    }

    pub fn fixes(&self, x: usize) -> bool {
        self.apply(x) == x
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &x)| *i as u32 != x).map(|(i, _)| i)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for s in 0..self.degree() {
            if seen[s] || self.fixes(s) {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Disjoint-cycle notation, e.g. `(0 1)(2 3 4)`; `()` for the identity.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", inner.join(" "))
            })
            .collect()
    }

    pub fn order(&self) -> BigUint {
        use num_integer::Integer;
        self.cycles()
            .iter()
            .fold(BigUint::one(), |acc, c| acc.lcm(&BigUint::from(c.len())))
    }
}

/// Orbits of the group generated by `gens` on `0..degree`, each sorted,
/// ordered by smallest point.
pub fn orbits(degree: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for s in 0..degree {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut orbit = vec![s];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            i += 1;
            for g in gens {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

#[derive(Debug, Clone)]
struct Level {
    base_point: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[p]` maps the base point to `p`.
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Level {
        let mut transversal = vec![None; degree];
        transversal[base_point] = Some(Permutation::identity(degree));
        Level {
            base_point,
            gens: Vec::new(),
            orbit: vec![base_point],
            transversal,
        }
    }
}

/// A permutation group with a stabilizer chain.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl PermGroup {
    /// Schreier–Sims on the given generators.
    pub fn new(degree: usize, gens: &[Permutation]) -> Result<PermGroup, PermError> {
        PermGroup::with_base(degree, gens, &[])
    }

    /// Schreier–Sims with a prescribed base prefix. Further base points are
    /// chosen as needed, each from the longest cycle of the generator that
    /// forces it.
    pub fn with_base(degree: usize, gens: &[Permutation], base: &[usize]) -> Result<PermGroup, PermError> {
        for g in gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch(degree, g.degree()));
            }
        }
        let mut levels = Vec::new();
        for &b in base {
            if b >= degree {
                return Err(PermError::BasePoint { point: b, degree });
            }
            levels.push(Level::new(b, degree));
        }
        let mut group = PermGroup {
            degree,
            generators: gens.iter().filter(|g| !g.is_identity()).cloned().collect(),
            levels,
        };
        for g in group.generators.clone() {
            group.extend(0, g);
        }
        Ok(group)
    }

    /// Adds a generator; returns whether the group grew.
    pub fn add_generator(&mut self, g: &Permutation) -> Result<bool, PermError> {
        if g.degree() != self.degree {
            return Err(PermError::DegreeMismatch(self.degree, g.degree()));
        }
        if self.contains(g) {
            return Ok(false);
        }
        self.generators.push(g.clone());
        self.extend(0, g.clone());
        Ok(true)
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    /// Sizes of the fundamental orbits along the base.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Strong generators, deduplicated, level by level.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Sifts `g` through levels `from..`; returns the residue and the level it stopped at.
    fn sift(&self, from: usize, g: &Permutation) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let image = h.apply(level.base_point);
            match &level.transversal[image] {
                Some(u) => h = h.then(&u.inverse()),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, _) = self.sift(0, g);
        h.is_identity()
    }

    fn new_base_point(g: &Permutation) -> usize {
        let cycles = g.cycles();
        cycles
            .iter()
            .max_by(|a, b| a.len().cmp(&b.len()).then(b[0].cmp(&a[0])))
            .map(|c| *c.iter().min().unwrap())
            .expect("non-identity permutation has a cycle")
    }

    /// Adds `g` (which fixes the base points of levels `< i`) to the
    /// generators of level `i` unless it is already a member there, then
    /// closes the level under Schreier generators.
    fn extend(&mut self, i: usize, g: Permutation) {
        let (residue, _) = self.sift(i, &g);
        if residue.is_identity() {
            return;
        }
        // The residue is still in G^(i) and fixes every base point it got past.
        let g = residue;
        if i == self.levels.len() {
            self.levels.push(Level::new(Self::new_base_point(&g), self.degree));
        }
        self.levels[i].gens.push(g.clone());

        let old_orbit = self.levels[i].orbit.clone();
        for &p in &old_orbit {
            self.schreier_step(i, p, &g);
        }
        let mut idx = old_orbit.len();
        while idx < self.levels[i].orbit.len() {
            let p = self.levels[i].orbit[idx];
            idx += 1;
            let gens = self.levels[i].gens.clone();
            for s in &gens {
                self.schreier_step(i, p, s);
            }
        }
    }

    fn schreier_step(&mut self, i: usize, p: usize, s: &Permutation) {
        let level = &self.levels[i];
        let u_p = level.transversal[p].as_ref().expect("p in orbit");
        let q = s.apply(p);
        let ups = u_p.then(s);
        match &level.transversal[q] {
            None => {
                let level = &mut self.levels[i];
                level.transversal[q] = Some(ups);
                level.orbit.push(q);
            }
            Some(u_q) => {
                let h = ups.then(&u_q.inverse());
                if !h.is_identity() {
                    self.extend(i + 1, h);
                }
            }
        }
    }

    /// Orbits of the group on its points.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits(self.degree, &self.generators)
    }

    /// Whether the group is transitive on ordered k-tuples of distinct
    /// points, via the orbits of successive point stabilizers.
    pub fn is_k_transitive(&self, k: usize) -> bool {
        let d = self.degree;
        if k == 0 {
            return true;
        }
        if d < k {
            return false;
        }
        let base: Vec<usize> = (0..k).collect();
        let chain = PermGroup::with_base(d, &self.generators, &base).expect("valid generators");
        chain
            .orbit_sizes()
            .iter()
            .take(k)
            .enumerate()
            .all(|(i, &size)| size == d - i)
    }

    /// Image of the group acting on a family of sets, one generator per
    /// generator of `self`.
    pub fn induced_action_on_sets(&self, sets: &[Vec<usize>]) -> Result<PermGroup, PermError> {
        let normalized: Vec<Vec<usize>> = sets
            .iter()
            .map(|s| {
                let mut s = s.clone();
                s.sort_unstable();
                s
            })
            .collect();
        let index: HashMap<&[usize], usize> =
            normalized.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
        let mut gens = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let mut images = Vec::with_capacity(sets.len());
            for (i, s) in normalized.iter().enumerate() {
                let mut image: Vec<usize> = s.iter().map(|&x| g.apply(x)).collect();
                image.sort_unstable();
                let j = index
                    .get(image.as_slice())
                    .copied()
                    .ok_or(PermError::NotInvariant { clique: i })?;
                images.push(j);
            }
            gens.push(Permutation::from_images(images).map_err(|_| PermError::NotInvariant { clique: 0 })?);
        }
        PermGroup::new(sets.len(), &gens)
    }
}

/// Generators of S_m ≀ S_k acting on `blocks` (k blocks of m points each):
/// a transposition and an m-cycle inside the first block, and a
/// transposition and a k-cycle of whole blocks, matching points by position.
pub fn wreath_generators(degree: usize, blocks: &[Vec<usize>]) -> Result<Vec<Permutation>, PermError> {
    let mut gens = Vec::new();
    let Some(first) = blocks.first() else {
        return Ok(gens);
    };
    let m = first.len();
    if blocks.iter().any(|b| b.len() != m) {
        return Err(PermError::UnequalBlocks);
    }
    if m >= 2 {
        gens.push(Permutation::from_cycles(degree, &[&first[..2]])?);
        gens.push(Permutation::from_cycles(degree, &[first.as_slice()])?);
    }
    let k = blocks.len();
    if k >= 2 {
        let column = |i: usize, order: &[usize]| -> Vec<usize> { order.iter().map(|&b| blocks[b][i]).collect() };
        let swap: Vec<Vec<usize>> = (0..m).map(|i| column(i, &[0, 1])).collect();
        let rotate: Vec<Vec<usize>> = (0..m).map(|i| column(i, &(0..k).collect::<Vec<_>>())).collect();
        for cycles in [swap, rotate] {
            let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
            gens.push(Permutation::from_cycles(degree, &refs)?);
        }
    }
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(d: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(d, cycles).unwrap()
    }

    #[test]
    fn permutation_basics() {
        let a = perm(4, &[&[0, 1]]);
        let b = perm(4, &[&[0, 1, 2, 3]]);
        assert_eq!(a.then(&a), Permutation::identity(4));
        assert_eq!(b.then(&b.inverse()), Permutation::identity(4));
        assert_eq!(b.pow(4), Permutation::identity(4));
        assert_eq!(b.order(), BigUint::from(4u32));
        assert_eq!(a.then(&b).apply(0), b.apply(a.apply(0)));
        assert_eq!(b.cycle_string(), "(0 1 2 3)");
        assert_eq!(Permutation::identity(3).cycle_string(), "()");
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn symmetric_group_order() {
        let g = PermGroup::new(4, &[perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2, 3]])]).unwrap();
        assert_eq!(g.order(), BigUint::from(24u32));
        assert!(g.is_k_transitive(3));
        assert!(g.is_k_transitive(4));
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::new(5, &[]).unwrap();
        assert_eq!(g.order(), BigUint::one());
        assert_eq!(g.orbits().len(), 5);
        assert!(g.contains(&Permutation::identity(5)));
        assert!(!g.contains(&perm(5, &[&[0, 1]])));
        assert!(!g.is_k_transitive(1));
    }

    #[test]
    fn degree_mismatch() {
        let err = PermGroup::new(4, &[Permutation::identity(3)]).unwrap_err();
        assert_eq!(err, PermError::DegreeMismatch(4, 3));
    }

    #[test]
    fn alternating_group() {
        let g = PermGroup::new(5, &[perm(5, &[&[0, 1, 2]]), perm(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        assert_eq!(g.order(), BigUint::from(60u32));
        assert!(g.is_k_transitive(3));
        assert!(!g.is_k_transitive(4));
        assert!(!g.contains(&perm(5, &[&[0, 1]])));
        assert!(g.contains(&perm(5, &[&[0, 1], &[2, 3]])));
    }

    #[test]
    fn dihedral_not_2_transitive() {
        let g = PermGroup::new(5, &[perm(5, &[&[0, 1, 2, 3, 4]]), perm(5, &[&[1, 4], &[2, 3]])]).unwrap();
        assert_eq!(g.order(), BigUint::from(10u32));
        assert!(g.is_k_transitive(1));
        assert!(!g.is_k_transitive(2));
    }

    #[test]
    fn wreath_product_order() {
        let blocks: Vec<Vec<usize>> = (0..4).map(|b| (3 * b..3 * b + 3).collect()).collect();
        let g = PermGroup::new(12, &wreath_generators(12, &blocks).unwrap()).unwrap();
        assert_eq!(g.order(), BigUint::from(31104u32));
        assert_eq!(g.orbits().len(), 1);
    }

    #[test]
    fn induced_action() {
        // S4 on the 6 two-subsets
        let g = PermGroup::new(4, &[perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2, 3]])]).unwrap();
        let pairs: Vec<Vec<usize>> = (0..4)
            .flat_map(|a| (a + 1..4).map(move |b| vec![a, b]))
            .collect();
        let h = g.induced_action_on_sets(&pairs).unwrap();
        assert_eq!(h.order(), BigUint::from(24u32));
        assert!(h.is_k_transitive(1));
        assert!(!h.is_k_transitive(2));
        let bad = vec![vec![0, 1], vec![2, 3]];
        assert!(matches!(g.induced_action_on_sets(&bad), Err(PermError::NotInvariant { .. })));
    }
}
