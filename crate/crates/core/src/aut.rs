//! Automorphism groups and canonical forms by individualization and
//! refinement.
//!
//! The search tree has equitable ordered partitions as nodes. A node's
//! children individualize, one at a time, the vertices of its target cell
//! (the first largest non-singleton cell) and refine again; leaves are
//! discrete partitions, i.e. vertex orderings. Every node carries a hash of
//! its refinement trace. Two leaves with the same trace sequence and the
//! same relabeled graph differ by an automorphism.
//!
//! Pruning:
//! * children in the same orbit of the automorphisms found so far that fix
//!   the current path are explored once;
//! * once a leaf is matched to the first leaf or to the current best leaf,
//!   the search jumps back to where the two paths diverge, since the rest of
//!   that subtree is the image of one already explored;
//! * nodes whose trace prefix is neither the first leaf's nor at least the
//!   best leaf's are cut.
//!
//! The canonical leaf is the maximum over all leaves of (trace sequence,
//! relabeled adjacency rows).

use std::cmp::Ordering;
use std::collections::VecDeque;

use num_bigint::BigUint;
use thiserror::Error;

use crate::bitset::Bitset;
use crate::graph::Graph;
use crate::perm::{orbits, PermError, PermGroup, Permutation};

/// Default vertex cap for automorphism and canonical-form computations.
pub const DEFAULT_VERTEX_CAP: usize = 600;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("graph has {actual} vertices, above the cap of {cap}")]
    TooLarge { actual: usize, cap: usize },
    #[error("partition does not cover the {0} vertices exactly once")]
    BadPartition(usize),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// An ordered partition of `0..n` into disjoint non-empty cells.
#[derive(Clone, PartialEq, Eq)]
pub struct OrderedPartition {
    /// Vertices in cell order.
    lab: Vec<u32>,
    /// Position of each vertex in `lab`.
    pos: Vec<u32>,
    /// Start position of the cell containing each vertex.
    cell_of: Vec<u32>,
    /// Length of the cell starting at each position (only meaningful at starts).
    cell_len: Vec<u32>,
    cells: usize,
}

impl std::fmt::Debug for OrderedPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.cells()).finish()
    }
}

impl OrderedPartition {
    pub fn unit(n: usize) -> OrderedPartition {
        let mut cell_len = vec![0; n];
        if n > 0 {
            cell_len[0] = n as u32;
        }
        OrderedPartition {
            lab: (0..n as u32).collect(),
            pos: (0..n as u32).collect(),
            cell_of: vec![0; n],
            cell_len,
            cells: usize::from(n > 0),
        }
    }

    pub fn from_cells(n: usize, cells: &[Vec<usize>]) -> Result<OrderedPartition, AutError> {
        let mut seen = vec![false; n];
        let mut lab = Vec::with_capacity(n);
        let mut cell_of = vec![0u32; n];
        let mut cell_len = vec![0u32; n];
        for cell in cells {
            if cell.is_empty() {
                return Err(AutError::BadPartition(n));
            }
            let start = lab.len() as u32;
            cell_len[start as usize] = cell.len() as u32;
            for &v in cell {
                if v >= n || std::mem::replace(&mut seen[v], true) {
                    return Err(AutError::BadPartition(n));
                }
                cell_of[v] = start;
                lab.push(v as u32);
            }
        }
        if lab.len() != n {
            return Err(AutError::BadPartition(n));
        }
        let mut pos = vec![0u32; n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v as usize] = i as u32;
        }
        Ok(OrderedPartition {
            lab,
            pos,
            cell_of,
            cell_len,
            cells: cells.len(),
        })
    }

    /// Partition by vertex colour, cells in increasing colour order.
    pub fn from_colors(colors: &[u64]) -> OrderedPartition {
        let mut distinct: Vec<u64> = colors.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let cells: Vec<Vec<usize>> = distinct
            .iter()
            .map(|&c| (0..colors.len()).filter(|&v| colors[v] == c).collect())
            .collect();
        OrderedPartition::from_cells(colors.len(), &cells).expect("colour classes partition the vertices")
    }

    pub fn len(&self) -> usize {
        self.lab.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lab.is_empty()
    }

    pub fn cell_count(&self) -> usize {
        self.cells
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    fn starts(&self) -> impl Iterator<Item = usize> + '_ {
        let mut s = 0;
        std::iter::from_fn(move || {
            if s >= self.lab.len() {
                return None;
            }
            let cur = s;
            s += self.cell_len[s] as usize;
            Some(cur)
        })
    }

    fn cell_at(&self, start: usize) -> &[u32] {
        &self.lab[start..start + self.cell_len[start] as usize]
    }

    pub fn cells(&self) -> Vec<Vec<usize>> {
        self.starts()
            .map(|s| self.cell_at(s).iter().map(|&v| v as usize).collect())
            .collect()
    }

    /// Index of the cell containing `v`, counting cells from the left.
    pub fn cell_index(&self, v: usize) -> usize {
        let start = self.cell_of[v] as usize;
        self.starts().take_while(|&s| s < start).count()
    }

    /// Vertices in cell order; a vertex ordering once the partition is discrete.
    pub fn order(&self) -> Vec<usize> {
        self.lab.iter().map(|&v| v as usize).collect()
    }

    /// First largest non-singleton cell.
    fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(usize, u32)> = None;
        for s in self.starts() {
            let len = self.cell_len[s];
            if len > 1 && best.is_none_or(|(_, l)| len > l) {
                best = Some((s, len));
            }
        }
        best.map(|(s, _)| s)
    }

    /// Every vertex in a cell has the same number of neighbours in each cell.
    pub fn is_equitable(&self, g: &Graph) -> bool {
        let cells = self.cells();
        let sets: Vec<Bitset> = cells
            .iter()
            .map(|c| Bitset::from_indices(self.len(), c.iter().copied()))
            .collect();
        cells.iter().all(|cell| {
            sets.iter().all(|target| {
                let first = g.row(cell[0]).intersection_count(target);
                cell.iter().all(|&v| g.row(v).intersection_count(target) == first)
            })
        })
    }
}

fn mix(h: u64, x: u64) -> u64 {
    // splitmix64 finalizer over a rotated accumulator
    let mut z = h.rotate_left(23) ^ x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Equitable refinement machinery bound to one graph.
struct Refiner {
    adj: Vec<Vec<u32>>,
    count: Vec<u32>,
    touched: Vec<u32>,
    in_queue: Vec<bool>,
}

impl Refiner {
    fn new(g: &Graph) -> Refiner {
        let n = g.order();
        Refiner {
            adj: (0..n).map(|v| g.neighbors(v).map(|u| u as u32).collect()).collect(),
            count: vec![0; n],
            touched: Vec::new(),
            in_queue: vec![false; n],
        }
    }

    /// Refines `p` to the coarsest equitable partition finer than it, using
    /// the cells starting at `splitters` as the initial splitter queue.
    /// Returns a hash of the refinement trace.
    fn refine(&mut self, p: &mut OrderedPartition, splitters: &[usize]) -> u64 {
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in splitters {
            if !self.in_queue[s] {
                self.in_queue[s] = true;
                queue.push_back(s);
            }
        }
        let mut trace = mix(0, p.cells as u64);
        let mut splitter = Vec::new();
        let mut touched_cells: Vec<usize> = Vec::new();
        let mut members: Vec<u32> = Vec::new();
        while let Some(s) = queue.pop_front() {
            self.in_queue[s] = false;
            if p.is_discrete() {
                continue;
            }
            splitter.clear();
            splitter.extend_from_slice(p.cell_at(s));
            for &w in &splitter {
                for &u in &self.adj[w as usize] {
                    if self.count[u as usize] == 0 {
                        self.touched.push(u);
                    }
                    self.count[u as usize] += 1;
                }
            }
            touched_cells.clear();
            for &u in &self.touched {
                let c = p.cell_of[u as usize] as usize;
                if p.cell_len[c] > 1 {
                    touched_cells.push(c);
                }
            }
            touched_cells.sort_unstable();
            touched_cells.dedup();
            trace = mix(trace, s as u64);
            trace = mix(trace, splitter.len() as u64);
            for &c in &touched_cells {
                let len = p.cell_len[c] as usize;
                members.clear();
                members.extend_from_slice(&p.lab[c..c + len]);
                let count = &self.count;
                members.sort_by_key(|&v| count[v as usize]);
                let lo = count[members[0] as usize];
                let hi = count[members[len - 1] as usize];
                if lo == hi {
                    trace = mix(trace, (c as u64) << 32 | lo as u64);
                    continue;
                }
                // Write fragments back in ascending count order.
                let was_queued = self.in_queue[c];
                let mut fragments: Vec<(usize, usize)> = Vec::new();
                let mut start = 0;
                for i in 1..=len {
                    if i == len || count[members[i] as usize] != count[members[start] as usize] {
                        fragments.push((c + start, i - start));
                        trace = mix(trace, (count[members[start] as usize] as u64) << 32 | (i - start) as u64);
                        start = i;
                    }
                }
                for (i, &v) in members.iter().enumerate() {
                    p.lab[c + i] = v;
                    p.pos[v as usize] = (c + i) as u32;
                }
                for &(fs, fl) in &fragments {
                    p.cell_len[fs] = fl as u32;
                    for &v in &p.lab[fs..fs + fl] {
                        p.cell_of[v as usize] = fs as u32;
                    }
                }
                p.cells += fragments.len() - 1;
                trace = mix(trace, c as u64);
                if was_queued {
                    for &(fs, _) in &fragments[1..] {
                        self.in_queue[fs] = true;
                        queue.push_back(fs);
                    }
                } else {
                    let largest = fragments
                        .iter()
                        .enumerate()
                        .max_by(|a, b| a.1 .1.cmp(&b.1 .1).then(b.0.cmp(&a.0)))
                        .map(|(i, _)| i)
                        .unwrap();
                    for (i, &(fs, _)) in fragments.iter().enumerate() {
                        if i != largest {
                            self.in_queue[fs] = true;
                            queue.push_back(fs);
                        }
                    }
                }
            }
            for &u in &self.touched {
                self.count[u as usize] = 0;
            }
            self.touched.clear();
        }
        for s in queue {
            self.in_queue[s] = false;
        }
        mix(trace, p.cells as u64)
    }

    fn refine_all(&mut self, p: &mut OrderedPartition) -> u64 {
        let starts: Vec<usize> = p.starts().collect();
        self.refine(p, &starts)
    }

    /// Splits `v` off the front of its cell and refines.
    fn individualize(&mut self, p: &mut OrderedPartition, v: usize) -> u64 {
        let c = p.cell_of[v] as usize;
        let len = p.cell_len[c] as usize;
        debug_assert!(len > 1);
        let at = p.pos[v] as usize;
        let other = p.lab[c];
        p.lab.swap(c, at);
        p.pos[v] = c as u32;
        p.pos[other as usize] = at as u32;
        p.cell_len[c] = 1;
        p.cell_len[c + 1] = (len - 1) as u32;
        for &u in &p.lab[c + 1..c + len] {
            p.cell_of[u as usize] = (c + 1) as u32;
        }
        p.cells += 1;
        let h = self.refine(p, &[c]);
        mix(h, c as u64)
    }
}

/// Coarsest equitable partition finer than `p`.
pub fn refine(g: &Graph, p: &OrderedPartition) -> OrderedPartition {
    assert_eq!(g.order(), p.len());
    let mut out = p.clone();
    Refiner::new(g).refine_all(&mut out);
    out
}

#[derive(Clone)]
struct Leaf {
    lab: Vec<u32>,
    rows: Vec<Bitset>,
    trace: Vec<u64>,
    path: Vec<usize>,
}

fn cmp_rows(a: &[Bitset], b: &[Bitset]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp_membership(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// Counters from one search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub leaves: u64,
    pub generators: usize,
}

struct Search<'g> {
    g: &'g Graph,
    refiner: Refiner,
    first: Option<Leaf>,
    best: Option<Leaf>,
    path: Vec<usize>,
    trace: Vec<u64>,
    generators: Vec<Permutation>,
    stats: SearchStats,
}

/// Union-find over vertices, used for orbit pruning.
struct Orbits {
    parent: Vec<u32>,
}

impl Orbits {
    fn new(n: usize) -> Orbits {
        Orbits {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] as usize != r {
            r = self.parent[r] as usize;
        }
        let mut c = x;
        while self.parent[c] as usize != r {
            let next = self.parent[c] as usize;
            self.parent[c] = r as u32;
            c = next;
        }
        r
    }

    fn join(&mut self, g: &Permutation) {
        for x in 0..self.parent.len() {
            let (a, b) = (self.find(x), self.find(g.apply(x)));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                self.parent[hi] = lo as u32;
            }
        }
    }
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Search<'g> {
        Search {
            g,
            refiner: Refiner::new(g),
            first: None,
            best: None,
            path: Vec::new(),
            trace: Vec::new(),
            generators: Vec::new(),
            stats: SearchStats::default(),
        }
    }

    fn leaf_rows(&self, p: &OrderedPartition) -> Vec<Bitset> {
        let n = p.len();
        (0..n)
            .map(|i| {
                let v = p.lab[i] as usize;
                let mut row = Bitset::new(n);
                for &u in &self.refiner.adj[v] {
                    row.insert(p.pos[u as usize] as usize);
                }
                row
            })
            .collect()
    }

    /// Depth at which `path` leaves `other`, provided `gamma` maps
    /// `other[..=d]` onto `path[..=d]`.
    fn jump_depth(&self, other: &[usize], gamma: &Permutation) -> Option<usize> {
        let d = self.path.iter().zip(other).position(|(a, b)| a != b)?;
        (0..=d)
            .all(|i| gamma.apply(other[i]) == self.path[i])
            .then_some(d)
    }

    fn record(&mut self, gamma: Permutation) {
        if !gamma.is_identity() && !self.generators.contains(&gamma) {
            debug_assert!(self.g.is_automorphism(&gamma));
            self.generators.push(gamma);
        }
    }

    fn automorphism_between(from: &[u32], to: &[u32]) -> Permutation {
        let mut images = vec![0usize; from.len()];
        for (&a, &b) in from.iter().zip(to) {
            images[a as usize] = b as usize;
        }
        Permutation::from_images(images).expect("two orderings of the same vertices")
    }

    /// Returns `Some(d)` to unwind to the node at depth `d`.
    fn explore(&mut self, p: &OrderedPartition, depth: usize) -> Option<usize> {
        self.stats.nodes += 1;
        let prefix = &self.trace[..=depth];
        let eq_first = match &self.first {
            None => true,
            Some(f) => f.trace.len() > depth && f.trace[..=depth] == *prefix,
        };
        let vs_best = match &self.best {
            None => Ordering::Greater,
            Some(b) => {
                let k = b.trace.len().min(depth + 1);
                prefix[..k].cmp(&b.trace[..k]).then(if k < depth + 1 {
                    Ordering::Greater
                } else {
                    Ordering::Equal
                })
            }
        };
        if !eq_first && vs_best == Ordering::Less {
            return None;
        }

        if p.is_discrete() {
            return self.visit_leaf(p, eq_first, vs_best);
        }

        let target = p.target_cell().expect("non-discrete partition has a non-singleton cell");
        let cell: Vec<usize> = p.cell_at(target).iter().map(|&v| v as usize).collect();
        let mut explored: Vec<usize> = Vec::new();
        let mut seen_gens = usize::MAX;
        let mut orbits = Orbits::new(p.len());
        for w in cell {
            if seen_gens != self.generators.len() {
                orbits = Orbits::new(p.len());
                for gamma in &self.generators {
                    if self.path.iter().all(|&x| gamma.fixes(x)) {
                        orbits.join(gamma);
                    }
                }
                seen_gens = self.generators.len();
            }
            let root = orbits.find(w);
            if explored.iter().any(|&x| orbits.find(x) == root) {
                continue;
            }
            let mut child = p.clone();
            let h = self.refiner.individualize(&mut child, w);
            self.path.push(w);
            self.trace.push(h);
            let r = self.explore(&child, depth + 1);
            self.path.pop();
            self.trace.pop();
            explored.push(w);
            if let Some(d) = r {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    fn visit_leaf(&mut self, p: &OrderedPartition, eq_first: bool, vs_best: Ordering) -> Option<usize> {
        self.stats.leaves += 1;
        let rows = self.leaf_rows(p);
        if self.first.is_none() {
            let leaf = Leaf {
                lab: p.lab.clone(),
                rows,
                trace: self.trace.clone(),
                path: self.path.clone(),
            };
            self.best = Some(leaf.clone());
            self.first = Some(leaf);
            return None;
        }
        let first = self.first.as_ref().expect("checked above");
        if eq_first && cmp_rows(&rows, &first.rows) == Ordering::Equal {
            let gamma = Self::automorphism_between(&first.lab, &p.lab);
            let jump = self.jump_depth(&first.path, &gamma);
            self.record(gamma);
            return jump;
        }
        let best = self.best.as_ref().expect("best leaf set with first");
        let vs_best = match vs_best {
            Ordering::Equal => cmp_rows(&rows, &best.rows),
            o => o,
        };
        match vs_best {
            Ordering::Equal => {
                let gamma = Self::automorphism_between(&best.lab, &p.lab);
                let jump = self.jump_depth(&best.path, &gamma);
                self.record(gamma);
                jump
            }
            Ordering::Greater => {
                self.best = Some(Leaf {
                    lab: p.lab.clone(),
                    rows,
                    trace: self.trace.clone(),
                    path: self.path.clone(),
                });
                None
            }
            Ordering::Less => None,
        }
    }

    fn run(&mut self, start: &OrderedPartition) {
        let mut root = start.clone();
        let h = self.refiner.refine_all(&mut root);
        self.trace.push(h);
        self.explore(&root, 0);
        self.stats.generators = self.generators.len();
    }
}

/// Output of [`automorphism_group`].
#[derive(Debug, Clone)]
pub struct AutResult {
    pub generators: Vec<Permutation>,
    pub group: PermGroup,
    /// Maps each vertex to its position in the canonical ordering.
    pub canonical_labeling: Permutation,
    pub orbit_partition: Vec<Vec<usize>>,
    pub stats: SearchStats,
}

impl AutResult {
    pub fn order(&self) -> BigUint {
        self.group.order()
    }
}

fn check_cap(g: &Graph, cap: usize) -> Result<(), AutError> {
    if g.order() > cap {
        return Err(AutError::TooLarge {
            actual: g.order(),
            cap,
        });
    }
    Ok(())
}

/// Full automorphism group of `g`, with the default vertex cap.
pub fn automorphism_group(g: &Graph) -> Result<AutResult, AutError> {
    automorphism_group_with(g, &OrderedPartition::unit(g.order()), DEFAULT_VERTEX_CAP)
}

/// Automorphisms preserving the cells of `colors` (as an ordered partition).
pub fn automorphism_group_with(
    g: &Graph,
    colors: &OrderedPartition,
    cap: usize,
) -> Result<AutResult, AutError> {
    check_cap(g, cap)?;
    if colors.len() != g.order() {
        return Err(AutError::BadPartition(g.order()));
    }
    let n = g.order();
    if n == 0 {
        return Ok(AutResult {
            generators: Vec::new(),
            group: PermGroup::trivial(0),
            canonical_labeling: Permutation::identity(0),
            orbit_partition: Vec::new(),
            stats: SearchStats::default(),
        });
    }
    let mut search = Search::new(g);
    search.run(colors);
    let best = search.best.as_ref().expect("search reaches at least one leaf");
    let mut images = vec![0usize; n];
    for (i, &v) in best.lab.iter().enumerate() {
        images[v as usize] = i;
    }
    let canonical_labeling = Permutation::from_images(images).expect("leaf is an ordering");
    let group = PermGroup::new(n, &search.generators)?;
    Ok(AutResult {
        orbit_partition: orbits(n, &search.generators),
        generators: search.generators,
        group,
        canonical_labeling,
        stats: search.stats,
    })
}

/// The canonically relabeled graph.
pub fn canonical_form(g: &Graph) -> Result<Graph, AutError> {
    canonical_form_capped(g, DEFAULT_VERTEX_CAP)
}

pub fn canonical_form_capped(g: &Graph, cap: usize) -> Result<Graph, AutError> {
    let result = automorphism_group_with(g, &OrderedPartition::unit(g.order()), cap)?;
    Ok(g.relabel(&result.canonical_labeling))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, AutError> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refine_regular_stays_unit() {
        let g = Graph::cycle(7);
        let p = refine(&g, &OrderedPartition::unit(7));
        assert_eq!(p.cell_count(), 1);
    }

    #[test]
    fn refine_path() {
        let g = Graph::path(3);
        let p = refine(&g, &OrderedPartition::unit(3));
        assert_eq!(p.cells(), vec![vec![0, 2], vec![1]]);
        assert!(p.is_equitable(&g));
    }

    #[test]
    fn refine_is_idempotent_and_equitable() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)]).unwrap();
        let p = refine(&g, &OrderedPartition::unit(6));
        assert!(p.is_equitable(&g));
        assert_eq!(refine(&g, &p), p);
    }

    #[test]
    fn partition_validation() {
        assert!(OrderedPartition::from_cells(3, &[vec![0, 1]]).is_err());
        assert!(OrderedPartition::from_cells(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(OrderedPartition::from_cells(3, &[vec![0, 1], vec![], vec![2]]).is_err());
        let p = OrderedPartition::from_cells(3, &[vec![2], vec![0, 1]]).unwrap();
        assert_eq!(p.cell_index(2), 0);
        assert_eq!(p.cell_index(1), 1);
        assert!(!p.is_discrete());
    }

    #[test]
    fn small_groups() {
        let order = |g: &Graph| automorphism_group(g).unwrap().order();
        assert_eq!(order(&Graph::complete(5)), BigUint::from(120u32));
        assert_eq!(order(&Graph::cycle(6)), BigUint::from(12u32));
        assert_eq!(order(&Graph::path(4)), BigUint::from(2u32));
        assert_eq!(order(&Graph::empty(4)), BigUint::from(24u32));
        assert_eq!(order(&Graph::empty(1)), BigUint::from(1u32));
    }

    #[test]
    fn petersen() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let g = Graph::from_edges(10, &edges).unwrap();
        let r = automorphism_group(&g).unwrap();
        assert_eq!(r.order(), BigUint::from(120u32));
        assert!(r.generators.iter().all(|p| g.is_automorphism(p)));
        assert_eq!(r.orbit_partition.len(), 1);
    }

    #[test]
    fn colours_restrict_the_group() {
        let g = Graph::complete(4);
        let colors = OrderedPartition::from_colors(&[0, 0, 1, 1]);
        let r = automorphism_group_with(&g, &colors, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(r.order(), BigUint::from(4u32));
    }

    #[test]
    fn isomorphism() {
        assert!(!is_isomorphic(&Graph::complete(4), &Graph::cycle(4)).unwrap());
        assert!(!is_isomorphic(&Graph::complete(3), &Graph::path(3)).unwrap());
        let p = Permutation::from_cycles(6, &[&[0, 3, 5], &[1, 4]]).unwrap();
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5)]).unwrap();
        assert!(is_isomorphic(&g, &g.relabel(&p)).unwrap());
    }

    #[test]
    fn cap() {
        let g = Graph::empty(20);
        let err = automorphism_group_with(&g, &OrderedPartition::unit(20), 10).unwrap_err();
        assert_eq!(err, AutError::TooLarge { actual: 20, cap: 10 });
    }
}
