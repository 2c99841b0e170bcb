//! Finite groups as Cayley tables, their structure, homomorphisms,
//! isomorphism search and product constructions.

pub mod concrete;
pub mod hom;
pub mod iso;
pub mod products;
pub mod structure;
pub mod zoo;

pub use concrete::{close_under_product, Closure, ConcreteGroup, GroupDocument, Subgroup};
pub use hom::{evaluate_word, hom_from_generator_images, GroupHom, PresentationImage};
pub use iso::{
    find_isomorphism, greedy_generators, invariants, is_isomorphic, verify_isomorphism, Invariants,
};
pub use products::{
    central_product_quotient, direct_product, fiber_product, involutions, is_central_product,
    quaternion_central_cyclic, CentralProduct, CentralProductCheck, FiberChecks, FiberProduct,
};
pub use structure::{
    abelianization_invariants, center, commutator_subgroup, element_orders, is_central, is_normal,
    quotient, OrderProfile, Quotient,
};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("closure exceeded {0} elements")]
    BoundExceeded(usize),
    #[error("no generators given")]
    NoGenerators,
    #[error("table is not a Latin square")]
    NotLatinSquare,
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("associativity fails at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("label count does not match group order")]
    LabelCount,
    #[error("element index out of range")]
    InvalidElement,
    #[error("no element labelled {0:?}")]
    UnknownLabel(String),
    #[error("subset is not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("element is not central")]
    NotCentral,
    #[error("identified elements have different orders ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("homomorphism is not surjective")]
    NotSurjective,
    #[error("map is not a homomorphism")]
    NotHomomorphism,
    #[error("homomorphisms have different targets")]
    TargetMismatch,
    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("relator #{index} ({relator}) does not evaluate to the identity")]
    RelatorFails { index: usize, relator: String },
    #[error("coset table is incomplete")]
    Incomplete,
}
