//! End-to-end checks on the planar graphs NU(3, q²): the automorphism group
//! against PΓU(3, q), the wreath product at q = 2, and the action on
//! tangent cliques.

use num_bigint::BigUint;
use num_traits::One;

use crate::aut::{automorphism_group_with, AutResult, OrderedPartition};
use crate::clique::{tangent_triple_type, TripleType};
use crate::graph::{build_nu, Graph, TangentGraph};
use crate::perm::{wreath_generators, PermGroup, Permutation};
use crate::unitary::{pgammau_for_geometry, pgammau_order, pgu_order};
use crate::Error;

/// Extra checks run when the complement of NU(3, q²) is disconnected (q = 2).
#[derive(Debug, Clone)]
pub struct WreathReport {
    pub component_sizes: Vec<usize>,
    /// Every component is a complete graph.
    pub components_complete: bool,
    pub wreath_order: BigUint,
    /// Every wreath generator lies in the computed automorphism group.
    pub wreath_in_aut: bool,
}

#[derive(Debug, Clone)]
pub struct Theorem1Report {
    pub q: u64,
    pub vertices: usize,
    pub aut: AutResult,
    pub pgu_order: BigUint,
    pub pgammau_order: BigUint,
    /// 2e·q³(q²−1)(q³+1).
    pub pgammau_expected: BigUint,
    /// Every PΓU generator, restricted to the vertices, preserves adjacency.
    pub unitary_generators_are_automorphisms: bool,
    /// Every PΓU generator lies in the automorphism group.
    pub contained_in_aut: bool,
    pub orders_equal: bool,
    pub wreath: Option<WreathReport>,
    pub confirmed: bool,
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

fn wreath_report(g: &Graph, aut: &PermGroup) -> Result<Option<WreathReport>, Error> {
    let complement = g.complement();
    let comps = complement.connected_components();
    if comps.len() < 2 {
        return Ok(None);
    }
    let component_sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
    let components_complete = comps.iter().all(|c| {
        let m = c.len();
        complement.induced(c).edge_count() == m * (m - 1) / 2
    });
    let equal = component_sizes.iter().all(|&s| s == component_sizes[0]);
    if !equal {
        return Ok(Some(WreathReport {
            component_sizes,
            components_complete,
            wreath_order: BigUint::one(),
            wreath_in_aut: false,
        }));
    }
    let gens = wreath_generators(g.order(), &comps)?;
    let wreath = PermGroup::new(g.order(), &gens)?;
    let wreath_in_aut = gens.iter().all(|p| aut.contains(p));
    Ok(Some(WreathReport {
        component_sizes,
        components_complete,
        wreath_order: wreath.order(),
        wreath_in_aut,
    }))
}

/// Builds NU(3, q²), computes its automorphism group and compares it with
/// PΓU(3, q). For q = 2 the group is instead compared with the wreath
/// product S_m ≀ S_k read off the complement's k complete components of
/// size m; PΓU(3, 2) must then be a proper subgroup.
pub fn theorem1(q: u64, cap: usize) -> Result<Theorem1Report, Error> {
    let tg = build_nu(2, q)?;
    let g = &tg.graph;
    let aut = automorphism_group_with(g, &OrderedPartition::unit(g.order()), cap)?;
    let unitary = pgammau_for_geometry(&tg.geometry)?;
    let vertex_gens = unitary.vertex_generators(&tg)?;
    let unitary_generators_are_automorphisms = vertex_gens.iter().all(|p| g.is_automorphism(p));
    let contained_in_aut = vertex_gens.iter().all(|p| aut.group.contains(p));
    let pgammau = unitary.order();
    let aut_order = aut.order();
    let orders_equal = aut_order == pgammau;
    let pgammau_expected = pgammau_order(2, q)?;
    let wreath = wreath_report(g, &aut.group)?;

    let base = unitary_generators_are_automorphisms && contained_in_aut && pgammau == pgammau_expected;
    let confirmed = base
        && match &wreath {
            None => orders_equal,
            Some(w) => {
                let k = w.component_sizes.len();
                let m = w.component_sizes[0];
                let expected = factorial(m).pow(k as u32) * factorial(k);
                w.components_complete
                    && w.wreath_in_aut
                    && w.wreath_order == expected
                    && aut_order == expected
                    && pgammau < aut_order
            }
        };
    Ok(Theorem1Report {
        q,
        vertices: g.order(),
        aut,
        pgu_order: pgu_order(2, q),
        pgammau_order: pgammau,
        pgammau_expected,
        unitary_generators_are_automorphisms,
        contained_in_aut,
        orders_equal,
        wreath,
        confirmed,
    })
}

/// How the automorphism group acts on the tangent cliques.
#[derive(Debug, Clone)]
pub struct TangentAction {
    pub cliques: usize,
    pub group: PermGroup,
    pub transitive: bool,
    pub two_transitive: bool,
    pub three_transitive: bool,
    pub concurrent_triples: usize,
    pub triangle_triples: usize,
    pub other_triples: usize,
    /// No generator maps a triple to a triple of another type.
    pub types_invariant: bool,
}

/// Induced action of `aut` on the tangent cliques of a planar NU graph,
/// with the census of unordered clique triples by type.
pub fn tangent_action(tg: &TangentGraph, aut: &AutResult) -> Result<TangentAction, Error> {
    let cliques = tg.tangent_cliques();
    let group = aut.group.induced_action_on_sets(&cliques)?;
    let t = cliques.len();

    let mut types = vec![TripleType::Other; t * t * t];
    let idx = |a: usize, b: usize, c: usize| (a * t + b) * t + c;
    let (mut concurrent, mut triangle, mut other) = (0, 0, 0);
    for a in 0..t {
        for b in a + 1..t {
            for c in b + 1..t {
                let ty = tangent_triple_type(&cliques[a], &cliques[b], &cliques[c]);
                match ty {
                    TripleType::Concurrent => concurrent += 1,
                    TripleType::Triangle => triangle += 1,
                    TripleType::Other => other += 1,
                }
                types[idx(a, b, c)] = ty;
            }
        }
    }
    let type_of = |mut tr: [usize; 3]| {
        tr.sort_unstable();
        types[idx(tr[0], tr[1], tr[2])]
    };
    let types_invariant = group.generators().iter().all(|g: &Permutation| {
        (0..t).all(|a| {
            (a + 1..t).all(|b| {
                (b + 1..t).all(|c| type_of([a, b, c]) == type_of([g.apply(a), g.apply(b), g.apply(c)]))
            })
        })
    });
    Ok(TangentAction {
        cliques: t,
        transitive: group.is_k_transitive(1),
        two_transitive: group.is_k_transitive(2),
        three_transitive: group.is_k_transitive(3),
        group,
        concurrent_triples: concurrent,
        triangle_triples: triangle,
        other_triples: other,
        types_invariant,
    })
}
