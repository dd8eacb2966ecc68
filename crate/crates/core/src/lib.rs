//! Exact computations in degenerate affine Hecke-Clifford algebras of types A, B and D.

pub mod center;
pub mod cohomology;
pub mod dirac;
pub mod engine;
pub mod error;
pub mod linalg;
pub mod modules;
pub mod partition;
pub mod report;
pub mod scalar;
pub mod weyl;

pub use center::{
    jucys_murphy, seg_even_center, verify_zeta_surjective, zeta_of_d, zeta_on_power_sums,
};
pub use cohomology::{
    central_character, dirac_cohomology, verify_vogan, CentralCharacter, CohomologyReport,
};
pub use dirac::{verify_identities, DiracBundle};
pub use engine::{linear_combine, AlgElem, Algebra, AlgebraParams, Generator, Parity, PbwMonomial};
pub use error::{Error, Result};
pub use linalg::{Matrix, Subspace};
pub use modules::{clifford_supermodule, induced_module, steinberg_module, ModuleRep};
pub use partition::{distinct_partitions, partitions, phi_maps, Partition};
pub use report::{report_schema_version, Check, Report, Status};
pub use scalar::Scalar;
pub use weyl::{CartanType, Root, RootKind, RootSystemCtx, SignedPerm};
