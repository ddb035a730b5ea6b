//! Schubert cell chain complexes of the real Grassmannians `Gr_k(n)`.
//!
//! The crate builds the cellular (co)chain complex of the Schubert CW structure
//! directly from its closed differential formula, evaluates the closed formula
//! for `H^*(Gr_k(n); R)` over `Z`, `Q` and `Z/m`, and ships an independent
//! Smith-normal-form oracle used to cross-check every result.
//!
//! ```
//! use schubert_core::{cohomology_closed, CoefficientRing};
//!
//! // RP^2 = Gr_1(3): H^* = (Z, 0, Z/2)
//! let h = cohomology_closed(3, 1, CoefficientRing::Integers).unwrap();
//! assert_eq!(h.group(0).unwrap().free_rank, 1);
//! assert_eq!(h.group(2).unwrap().torsion, vec![2]);
//! ```
//!
//! All arithmetic is exact. Cell bases are always listed in lexicographic order
//! of the sorted element tuple, degree by degree.

pub mod closed_form;
pub mod combinatorics;
pub mod complex;
pub mod decomposition;
mod error;
pub mod module;
pub mod oracle;
pub mod ring;
pub mod snf;
pub mod verify;

pub use closed_form::{
    cohomology_closed, kind_counts, poincare_mod2, v_module, KindCounts, VModule,
};
pub use combinatorics::{
    admissible_leq, cell_count, cell_counts, classify, dim, enumerate_subsets, leq, partial_dim,
    subsets, z_index_set, CellClassification, CellKind, IndexSet, SchubertSet, Subsets, ZIndexPair,
    MAX_N,
};
pub use complex::{
    boundary, build_complex, diff_coefficient, euler_characteristic, sigma_signs, CoverCoefficient,
    Direction, GradedComplex, SparseMatrix,
};
pub use decomposition::{
    admissible_down_set, cone_decomposition, cone_model_module, cone_power_multiplicities,
    out_representative, verify_decomposition, ConeSummand, DecompositionReport,
};
pub use error::{Error, Result};
pub use module::{describe_group, DegreeGroup, GradedModule};
pub use oracle::{
    cohomology_oracle, homology_integral, homology_with_coefficients, ORACLE_MAX_DEGREE_SIZE,
};
pub use ring::{CoefficientRing, CyclicPiece};
pub use snf::{smith_normal_form, IntMatrix, SnfResult};
pub use verify::{verify_instance, verify_range, InstanceReport};
