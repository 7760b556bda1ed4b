//! Undirected simple graphs with bitset adjacency rows, and the tangent
//! graphs NU(n+1, q²) and Γ_n built from Hermitian geometry.

use thiserror::Error;

use crate::bitset::Bitset;
use crate::geometry::{HermitianGeometry, LineClass, ProjectivePoint};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("construction needs {actual} points, above the cap of {cap}")]
    TooLarge { actual: usize, cap: usize },
    #[error("expected {expected} vertices, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
}

/// An undirected loop-free graph on vertices `0..v`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<Bitset>,
    labels: Option<Vec<ProjectivePoint>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("v", &self.order())
            .field("edges", &self.edge_count())
            .finish()
    }
}

impl Graph {
    pub fn empty(v: usize) -> Graph {
        Graph {
            rows: (0..v).map(|_| Bitset::new(v)).collect(),
            labels: None,
        }
    }

    pub fn complete(v: usize) -> Graph {
        let mut g = Graph::empty(v);
        for a in 0..v {
            for b in a + 1..v {
                g.link(a, b);
            }
        }
        g
    }

    pub fn cycle(v: usize) -> Graph {
        let mut g = Graph::empty(v);
        for a in 0..v {
            g.link(a, (a + 1) % v);
        }
        g
    }

    pub fn path(v: usize) -> Graph {
        let mut g = Graph::empty(v);
        for a in 1..v {
            g.link(a - 1, a);
        }
        g
    }

    /// Complete multipartite graph with the given part sizes, parts laid out consecutively.
    pub fn complete_multipartite(parts: &[usize]) -> Graph {
        let v = parts.iter().sum();
        let mut part_of = Vec::with_capacity(v);
        for (i, &s) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, s));
        }
        let mut g = Graph::empty(v);
        for a in 0..v {
            for b in a + 1..v {
                if part_of[a] != part_of[b] {
                    g.link(a, b);
                }
            }
        }
        g
    }

    /// Disjoint union, with the vertices of `other` shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let (n, m) = (self.order(), other.order());
        let mut g = Graph::empty(n + m);
        for (a, b) in self.edges() {
            g.link(a, b);
        }
        for (a, b) in other.edges() {
            g.link(a + n, b + n);
        }
        g
    }

    pub fn from_edges(v: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(v);
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= v {
                    return Err(GraphError::VertexOutOfRange { vertex: x, order: v });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            g.link(a, b);
        }
        Ok(g)
    }

    pub(crate) fn link(&mut self, a: usize, b: usize) {
        debug_assert_ne!(a, b);
        self.rows[a].insert(b);
        self.rows[b].insert(a);
    }

    pub fn with_labels(mut self, labels: Vec<ProjectivePoint>) -> Graph {
        assert_eq!(labels.len(), self.order());
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[ProjectivePoint]> {
        self.labels.as_deref()
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, v: usize) -> &Bitset {
        &self.rows[v]
    }

    pub fn rows(&self) -> &[Bitset] {
        &self.rows
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].iter()
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        self.rows.iter().map(|r| r.iter().collect()).collect()
    }

    pub fn common_neighbors(&self, a: usize, b: usize) -> usize {
        self.rows[a].intersection_count(&self.rows[b])
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(Bitset::count).sum::<usize>() / 2
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.iter().filter(move |&b| b > a).map(move |b| (a, b)))
    }

    pub fn complement(&self) -> Graph {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(a, row)| {
                let mut c = row.complement();
                c.remove(a);
                c
            })
            .collect();
        Graph {
            rows,
            labels: self.labels.clone(),
        }
    }

    /// The graph with vertex `x` renamed to `perm(x)`. Labels are dropped.
    pub fn relabel(&self, perm: &Permutation) -> Graph {
        assert_eq!(perm.degree(), self.order());
        let mut g = Graph::empty(self.order());
        for (a, b) in self.edges() {
            g.link(perm.apply(a), perm.apply(b));
        }
        g
    }

    pub fn is_automorphism(&self, perm: &Permutation) -> bool {
        if perm.degree() != self.order() {
            return false;
        }
        self.edges()
            .all(|(a, b)| self.has_edge(perm.apply(a), perm.apply(b)))
    }

    /// Induced subgraph on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.link(i, j);
                }
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let v = self.order();
        let mut seen = vec![false; v];
        let mut comps = Vec::new();
        for s in 0..v {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TangentGraphKind {
    /// NU(n+1, q²): non-isotropic points only.
    Nu,
    /// Γ_n: every point of PG(n, q²).
    Gamma,
}

/// A tangent graph together with the geometry it was built from.
#[derive(Debug, Clone)]
pub struct TangentGraph {
    pub kind: TangentGraphKind,
    pub geometry: HermitianGeometry,
    pub graph: Graph,
    /// Point index of each vertex.
    pub vertex_point: Vec<usize>,
    /// Vertex of each point, if the point is a vertex.
    pub point_vertex: Vec<Option<usize>>,
}

impl TangentGraph {
    pub fn build(geometry: HermitianGeometry, kind: TangentGraphKind) -> TangentGraph {
        let vertex_point = match kind {
            TangentGraphKind::Nu => geometry.non_isotropic_points(),
            TangentGraphKind::Gamma => (0..geometry.space().len()).collect(),
        };
        let mut point_vertex = vec![None; geometry.space().len()];
        for (v, &p) in vertex_point.iter().enumerate() {
            point_vertex[p] = Some(v);
        }
        let mut graph = Graph::empty(vertex_point.len());
        for (i, line) in geometry.lines().iter().enumerate() {
            if geometry.line_class(i) != LineClass::Tangent {
                continue;
            }
            let members: Vec<usize> = line.points.iter().filter_map(|&p| point_vertex[p]).collect();
            for (k, &a) in members.iter().enumerate() {
                for &b in &members[k + 1..] {
                    graph.link(a, b);
                }
            }
        }
        let labels = vertex_point
            .iter()
            .map(|&p| geometry.space().point(p).clone())
            .collect();
        TangentGraph {
            kind,
            geometry,
            graph: graph.with_labels(labels),
            vertex_point,
            point_vertex,
        }
    }

    pub fn q(&self) -> u64 {
        self.geometry.q()
    }

    pub fn n(&self) -> usize {
        self.geometry.dimension()
    }

    /// Vertex sets of the tangent lines: the non-isotropic points of each
    /// tangent for NU, the whole line for Γ. Sorted, in line order.
    pub fn tangent_cliques(&self) -> Vec<Vec<usize>> {
        let geometry = &self.geometry;
        geometry
            .lines()
            .iter()
            .enumerate()
            .filter(|(i, _)| geometry.line_class(*i) == LineClass::Tangent)
            .map(|(_, line)| {
                let mut c: Vec<usize> = line.points.iter().filter_map(|&p| self.point_vertex[p]).collect();
                c.sort_unstable();
                c
            })
            .collect()
    }
}

/// Upper bound on |PG(n, q²)| accepted by the builders.
pub const DEFAULT_BUILD_CAP: usize = 8192;

fn check_build(n: usize, q: u64, cap: usize) -> Result<(), crate::Error> {
    if n < 2 {
        return Err(crate::geometry::GeometryError::Dimension { n, min: 2 }.into());
    }
    crate::field::prime_power(q)?;
    let points = crate::geometry::projective_point_count(n as u32, q);
    if points > cap as u128 {
        return Err(GraphError::TooLarge {
            actual: points.min(usize::MAX as u128) as usize,
            cap,
        }
        .into());
    }
    Ok(())
}

/// Builds NU(n+1, q²) with vertices in point-enumeration order.
pub fn build_nu(n: usize, q: u64) -> Result<TangentGraph, crate::Error> {
    build_nu_capped(n, q, DEFAULT_BUILD_CAP)
}

pub fn build_nu_capped(n: usize, q: u64, cap: usize) -> Result<TangentGraph, crate::Error> {
    check_build(n, q, cap)?;
    let geometry = HermitianGeometry::for_q(n, q)?;
    Ok(TangentGraph::build(geometry, TangentGraphKind::Nu))
}

/// Builds Γ_n: the tangent graph on all points of PG(n, q²).
pub fn build_gamma(n: usize, q: u64) -> Result<TangentGraph, crate::Error> {
    build_gamma_capped(n, q, DEFAULT_BUILD_CAP)
}

pub fn build_gamma_capped(n: usize, q: u64, cap: usize) -> Result<TangentGraph, crate::Error> {
    check_build(n, q, cap)?;
    let geometry = HermitianGeometry::for_q(n, q)?;
    Ok(TangentGraph::build(geometry, TangentGraphKind::Gamma))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nu_sizes() {
        let g = build_nu(2, 2).unwrap();
        assert_eq!(g.graph.order(), 12);
        assert!((0..12).all(|v| g.graph.degree(v) == 9));
        assert_eq!(build_nu(2, 3).unwrap().graph.order(), 63);
        assert_eq!(build_nu(3, 2).unwrap().graph.order(), 40);
    }

    #[test]
    fn gamma_structure() {
        let g = build_gamma(2, 2).unwrap();
        assert_eq!(g.graph.order(), 21);
        let iso = g.geometry.isotropic_points();
        assert_eq!(iso.len(), 9);
        for &a in &iso {
            assert_eq!(g.graph.degree(a), 4);
            for &b in &iso {
                assert!(!g.graph.has_edge(a, b));
            }
        }
        assert_eq!(build_gamma(2, 3).unwrap().graph.order(), 91);
    }

    #[test]
    fn gamma_tangent_cliques_extend_nu() {
        let nu = build_nu(2, 2).unwrap();
        let gamma = build_gamma(2, 2).unwrap();
        let small = nu.tangent_cliques();
        let big = gamma.tangent_cliques();
        assert_eq!(small.len(), big.len());
        for (s, b) in small.iter().zip(&big) {
            assert_eq!(b.len(), s.len() + 1);
            let lifted: Vec<usize> = s.iter().map(|&v| nu.vertex_point[v]).collect();
            let extra: Vec<usize> = b
                .iter()
                .map(|&v| gamma.vertex_point[v])
                .filter(|p| !lifted.contains(p))
                .collect();
            assert_eq!(extra.len(), 1);
            assert!(gamma.geometry.is_isotropic(extra[0]));
        }
    }

    #[test]
    fn complement_is_involution() {
        let g = build_nu(2, 3).unwrap().graph;
        assert_eq!(g.complement().complement(), g);
        let k3 = Graph::complete(3);
        assert_eq!(k3.complement().edge_count(), 0);
    }

    #[test]
    fn nu_complement_at_q2_is_four_triangles() {
        let c = build_nu(2, 2).unwrap().graph.complement();
        assert!((0..12).all(|v| c.degree(v) == 2));
        let comps = c.connected_components();
        assert_eq!(comps.len(), 4);
        for comp in comps {
            assert_eq!(comp.len(), 3);
            assert_eq!(c.induced(&comp).edge_count(), 3);
        }
    }

    #[test]
    fn rejects_bad_builds() {
        assert!(build_nu(1, 2).is_err());
        assert!(build_nu(2, 6).is_err());
        assert!(matches!(
            build_nu(2, 11),
            Err(crate::Error::Graph(GraphError::TooLarge { .. }))
        ));
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
    }
}
