//! Coset semigroups of finite groups: the subgroup lattice, the inverse
//! semigroup of right cosets, its completion and unit group, and the
//! minimal-subgroup graph driving the unit-count formula.

pub mod completion;
pub mod dsl;
pub mod elemset;
pub mod error;
pub mod group;
pub mod iso;
pub mod lattice;
pub mod mingraph;
pub mod poset;
pub mod semigroup;
pub mod semiso;

pub use completion::{
    eta, eta_kernel_by_fibre, eta_kernel_by_intersection, full_completion, unit_tuple_group,
    units_bruteforce, Completion, TupleMethod, UnitTuples, DEFAULT_BRUTE_BUDGET,
    DEFAULT_COMPLETION_CAP, DEFAULT_TUPLE_BUDGET,
};
pub use elemset::ElemSet;
pub use error::{AxiomFailure, Error, Result};
pub use group::{Elem, FiniteGroup};
pub use iso::{group_isomorphic, DEFAULT_ISO_CAP};
pub use lattice::{generated_subgroup, SubId, SubgroupLattice, DEFAULT_ORDER_CAP};
pub use mingraph::{
    build_minimal_graph, minimal_pair_checks, minimal_pairs_permute, permutability_three_ways,
    predicted_components, sigma_order_formula, MinimalGraph, MinimalPairCheck,
    ThreeWayPermutability,
};
pub use poset::{chain_product, divisor_lattice, factorize, poset_isomorphic, Poset};
pub use semigroup::{Coset, CosetSemigroup, ElemId, Variant};
pub use semiso::{
    fingerprint, fingerprint_mismatch, semigroup_isomorphic, Fingerprint, IsoOutcome,
    DEFAULT_ISO_TIMEOUT, DEFAULT_SEMIGROUP_CAP,
};
