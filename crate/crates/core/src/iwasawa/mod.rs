//! Central conductor of the maximal order over an equivariant Iwasawa
//! algebra, driven by per-character ramification profiles.

pub mod different;
pub mod profile;

use thiserror::Error;

use crate::group::GroupError;

pub use different::{
    cyclotomic_field, local_field, phi_prime_different, relative_different, tower_additivity_check, LocalField,
    TowerCheck,
};
pub use profile::{central_conductor_component, profile_from_group, r_chi, s_chi, ChiProfile, ConductorRow};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IwasawaError {
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
    #[error("v_chi = {v} does not divide w_chi = {w}")]
    Divisibility { w: u32, v: u32 },
    #[error("ramification index e(F(eta)/F_chi) must be positive")]
    ZeroRamification,
    #[error("inconsistent degrees: {0}")]
    InconsistentDegrees(String),
    #[error("not a subgroup of the unit group: {0}")]
    NotASubgroup(String),
    #[error("not a tower: {0}")]
    NotATower(String),
    #[error("inconsistent ramification data: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}
