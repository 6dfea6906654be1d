//! Finite groups, character tables over cyclotomic fields, the `p`-adic
//! Galois action on characters and central idempotents of `Q_p H`.

pub mod algebra;
pub mod bundled;
mod finite;
pub mod galois;
pub mod invariants;
pub mod oracle;
pub mod table;

use thiserror::Error;

use crate::cyclotomic::CycloError;

pub use algebra::{epsilon_idempotent, primitive_idempotent, GroupAlgebraElement};
pub use bundled::{bundled, BUNDLED_NAMES};
pub use finite::{Automorphism, FiniteGroup};
pub use galois::{decomposition_group, p_adic_orbits, rational_orbits, DecompositionGroup};
pub use invariants::{chi_invariants, ChiInvariants};
pub use oracle::{bruteforce_conductor, jacobinski_valuations, OrbitConductor};
pub use table::{Character, CharacterTable, CycloMatrix, Representation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid character table: {0}")]
    InvalidTable(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("{0} is not an odd prime")]
    InvalidPrime(u64),
    #[error("invalid cyclotomic level {0}")]
    InvalidLevel(u32),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
    #[error("characters {0} and {1} violate orthogonality")]
    Orthogonality(usize, usize),
    #[error("no character with index {0}")]
    UnknownCharacter(usize),
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("automorphism order {0} is not a power of {1}")]
    NotPPower(u32, u64),
    #[error("the Galois twist at v = {0} is not unique")]
    NotUnique(u32),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("p-adic precision exhausted; raise the precision")]
    PrecisionExhausted,
    #[error("group too large for the brute-force conductor (order {0}, limit {1})")]
    TooLarge(usize, usize),
    #[error("unknown bundled group {0:?}")]
    UnknownBundled(String),
}
