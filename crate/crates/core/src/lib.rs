//! Exact dimension data of closed subgroups of compact Lie groups.
//!
//! Given a group presented as a product of classical simple factors and tori,
//! and a subgroup presented by its conjugacy-class measure (or a branching
//! map for connected subgroups), the engine computes dim V^H for every
//! irreducible V — the subgroup's dimension datum — entirely in exact
//! arithmetic. On top of that sit convergence experiments for subgroup
//! families, separating-representation searches, distinctness audits, and
//! Laplace spectra of the homogeneous spaces G/H.
//!
//! No floating point anywhere: scalars are big rationals and character
//! values live in cyclotomic fields.

pub mod cyclotomic;
pub mod datum;
pub mod error;
pub mod irreps;
pub mod lie;
mod linalg;
pub mod rational;
pub mod spectral;
pub mod subgroups;
pub mod weyl;

pub use cyclotomic::CyclotomicNumber;
pub use datum::{
    compare_data, dimension_datum, family_limit, find_separating_irrep, DatumComparison,
    DatumEntry, DatumVector, SeparationWitness, StabilizationReport, WeightStabilization,
};
pub use error::{Error, Result};
pub use irreps::{
    character_value, enumerate_irreps, freudenthal_multiplicities, weyl_dimension, DominantWeight,
    WeightMultiset,
};
pub use lie::{
    build_root_datum, cyclotomic_eval, Factor, FactorDescriptor, FactorKind, GroupSpec, RootDatum,
    TorusElement,
};
pub use rational::Rational;
pub use spectral::{
    casimir_value, homogeneous_spectrum, isospectral_compare, spectrum_from_datum,
    SpectrumComparison, SpectrumEntry, SpectrumMultiset, SPECTRUM_NORMALIZATION,
};
pub use subgroups::{
    catalog_lookup, catalog_names, invariant_dim, kernel_character_lattice, AtomSpec,
    CharacterLattice, ClassMeasure, DescriptorBody, MeasurePiece, SubgroupDescriptor, SubgroupSpec,
};
pub use weyl::{weyl_group, WeylElement, WeylGroup};
