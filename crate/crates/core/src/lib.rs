//! Tangent graphs of Hermitian varieties.
//!
//! Builds NU(n+1, q²), whose vertices are the non-isotropic points of
//! PG(n, q²) with adjacency "the joining line is tangent to the Hermitian
//! variety", checks its strongly regular parameters and spectrum exactly,
//! enumerates its maximal cliques, and computes full automorphism groups by
//! individualization-refinement. The unitary groups PGU(3, q) and PΓU(3, q)
//! are built as explicit permutation groups for comparison.

pub mod aut;
pub mod bitset;
pub mod clique;
pub mod field;
pub mod formats;
pub mod geometry;
pub mod graph;
pub mod oracle;
pub mod perm;
pub mod srg;
pub mod unitary;
pub mod verify;

pub use aut::{automorphism_group, canonical_form, is_isomorphic, refine, AutError, AutResult, OrderedPartition};
pub use bitset::Bitset;
pub use clique::{classify_cliques, maximal_cliques, tangent_triple_type, CliqueCensus, TripleType};
pub use field::{Field, FieldElement, FieldError};
pub use formats::{from_dimacs, from_graph6, to_dimacs, to_graph6};
pub use geometry::{HermitianGeometry, Line, LineClass, ProjectivePoint, ProjectiveSpace};
pub use graph::{build_gamma, build_nu, Graph, GraphError, TangentGraph, TangentGraphKind};
pub use perm::{PermError, PermGroup, Permutation};
pub use srg::{
    expected_complement_params, expected_params, measure_srg, spectrum_from_params, verify_srg_identity, SrgParams,
    Spectrum,
};
pub use unitary::{induced_vertex_permutation, pgammau3, pgu3_generators, unitary_check, SemilinearMap};

use thiserror::Error;

/// Any error raised by this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Geometry(#[from] geometry::GeometryError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Aut(#[from] AutError),
    #[error(transparent)]
    Clique(#[from] clique::CliqueError),
    #[error(transparent)]
    Unitary(#[from] unitary::UnitaryError),
    #[error(transparent)]
    Format(#[from] formats::FormatError),
}

impl Error {
    /// Whether the error is a size cap rather than bad input.
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            Error::Field(FieldError::TooLarge { .. })
                | Error::Geometry(geometry::GeometryError::TooLarge { .. })
                | Error::Graph(GraphError::TooLarge { .. })
                | Error::Aut(AutError::TooLarge { .. })
                | Error::Clique(clique::CliqueError::TooLarge { .. })
        )
    }
}
