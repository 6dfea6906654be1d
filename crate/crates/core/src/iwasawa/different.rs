//! Ramification data of abelian extensions of `Q_p` inside `Q_p(ζ_N)`.
//!
//! A subfield `L ⊆ Q(ζ_N)` is given by its fixing subgroup `S ⊆ (Z/N)^×`;
//! its completion at `p` is fixed by `S ∩ D` with `D` the decomposition
//! group. The different exponent comes from the conductor-discriminant
//! formula: with `G = D / (S ∩ D)` and `A_c` the image of the `c`-th unit
//! group `U^c` in `G`,
//!
//! `disc = Σ_ψ f(ψ) = Σ_{c ≥ 0} (|G| - |G| / |A_c|)`, and `d = disc / f`.

use serde::{Deserialize, Serialize};

use super::IwasawaError;
use crate::cyclotomic::{euler_phi, units_mod, vp_rational, Cyclo};
use crate::group::galois::decomposition_group;
use crate::group::GroupError;

/// Local invariants of the completion of a subfield of `Q(ζ_N)` at `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalField {
    pub level: u32,
    pub prime: u64,
    /// Fixing subgroup inside `(Z/N)^×`.
    pub fixing: Vec<u32>,
    pub degree: u32,
    pub ramification: u32,
    pub residue_degree: u32,
    pub discriminant_exponent: u64,
    pub different_exponent: u64,
}

fn check_subgroup(level: u32, s: &[u32]) -> Result<Vec<u32>, IwasawaError> {
    let units = units_mod(level);
    let mut s: Vec<u32> = s.iter().map(|a| a % level.max(1)).collect();
    s.sort_unstable();
    s.dedup();
    if s.is_empty() || !s.contains(&(1 % level.max(1))) {
        return Err(IwasawaError::NotASubgroup("must contain 1".into()));
    }
    for &a in &s {
        if !units.contains(&a) {
            return Err(IwasawaError::NotASubgroup(format!("{a} is not a unit mod {level}")));
        }
        for &b in &s {
            let c = ((a as u64 * b as u64) % level.max(1) as u64) as u32;
            if !s.contains(&c) {
                return Err(IwasawaError::NotASubgroup(format!("not closed: {a} * {b}")));
            }
        }
    }
    Ok(s)
}

/// Local field fixed by `fixing` (a subgroup of `(Z/N)^×`) completed at `p`.
pub fn local_field(level: u32, p: u64, fixing: &[u32]) -> Result<LocalField, IwasawaError> {
    let fixing = check_subgroup(level, fixing)?;
    let dg = decomposition_group(level, p)?;
    let sd: Vec<u32> = dg.elements.iter().copied().filter(|a| fixing.contains(a)).collect();
    let g = (dg.order() / sd.len()) as u64;
    let count_in = |set: &[u32]| set.iter().filter(|a| sd.contains(a)).count();
    let e = (dg.inertia.len() / count_in(&dg.inertia)) as u64;
    let f = g / e;
    let mut disc = 0u64;
    for c in 0..=dg.p_exponent {
        let uc = dg.ramification_subgroup(c);
        let image = (uc.len() / count_in(&uc)) as u64;
        disc += g - g / image;
    }
    if disc % f != 0 {
        return Err(IwasawaError::Inconsistent(format!(
            "discriminant exponent {disc} is not divisible by the residue degree {f}"
        )));
    }
    Ok(LocalField {
        level,
        prime: p,
        fixing,
        degree: g as u32,
        ramification: e as u32,
        residue_degree: f as u32,
        discriminant_exponent: disc,
        different_exponent: disc / f,
    })
}

/// The completion of `Q(ζ_N)` itself.
pub fn cyclotomic_field(level: u32, p: u64) -> Result<LocalField, IwasawaError> {
    local_field(level, p, &[1 % level.max(1)])
}

/// Different exponent of `upper / lower` in the valuation of `upper`;
/// `lower ⊆ upper` is required (both at the same level).
pub fn relative_different(upper: &LocalField, lower: &LocalField) -> Result<(u32, i64), IwasawaError> {
    if upper.level != lower.level || upper.prime != lower.prime {
        return Err(IwasawaError::NotATower("fields live at different levels".into()));
    }
    if !upper.fixing.iter().all(|a| lower.fixing.contains(a)) {
        return Err(IwasawaError::NotATower("lower field is not contained in the upper one".into()));
    }
    if upper.ramification % lower.ramification != 0 {
        return Err(IwasawaError::NotATower("ramification indices do not divide".into()));
    }
    let e = upper.ramification / lower.ramification;
    let d = upper.different_exponent as i64 - e as i64 * lower.different_exponent as i64;
    Ok((e, d))
}

/// The subgroup `{a ≡ 1 (mod n)}` of `(Z/N)^×` fixing `Q(ζ_n)` for `n | N`.
pub fn fixing_of_subfield(level: u32, n: u32) -> Result<Vec<u32>, IwasawaError> {
    if n == 0 || level % n != 0 {
        return Err(IwasawaError::NotATower(format!("{n} does not divide {level}")));
    }
    Ok(units_mod(level).into_iter().filter(|a| a % n == 1 % n).collect())
}

/// Different exponent of `Q_p(ζ_{n2}) / Q_p(ζ_{n1})` for `n1 | n2` computed
/// from the derivative of the minimal polynomial of `ζ = ζ_{n2}`:
/// `Π_{a ≠ 1} (ζ - ζ^a)` over the local relative Galois group. Its
/// valuation is read off from the rational norm, which is legitimate since
/// every factor has a Galois-stable valuation.
pub fn phi_prime_different(n1: u32, n2: u32, p: u64) -> Result<i64, IwasawaError> {
    if n1 == 0 || n2 % n1 != 0 {
        return Err(IwasawaError::NotATower(format!("{n1} does not divide {n2}")));
    }
    let dg = decomposition_group(n2, p)?;
    let zeta = Cyclo::zeta_pow(n2, 1);
    let mut prod = Cyclo::one(n2);
    for &a in &dg.elements {
        if a % n1 == 1 % n1 && a != 1 % n2 {
            let factor = zeta.sub(&Cyclo::zeta_pow(n2, a as i64)).map_err(GroupError::from)?;
            prod = prod.mul(&factor).map_err(GroupError::from)?;
        }
    }
    let vp_norm = vp_rational(p, &prod.norm()).ok_or_else(|| IwasawaError::Inconsistent("zero derivative".into()))?;
    let e = cyclotomic_field(n2, p)?.ramification as i64;
    let phi = euler_phi(n2) as i64;
    let scaled = vp_norm * e;
    if scaled % phi != 0 {
        return Err(IwasawaError::Inconsistent(format!(
            "norm valuation {vp_norm} is not uniform over the primes above {p}"
        )));
    }
    Ok(scaled / phi)
}

/// Both sides of `d(3/1) = e(3/2) d(2/1) + d(3/2)` for the cyclotomic tower
/// `Q_p(ζ_{n1}) ⊆ Q_p(ζ_{n2}) ⊆ Q_p(ζ_{n3})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerCheck {
    pub levels: [u32; 3],
    pub prime: u64,
    pub d_upper_lower: i64,
    pub d_middle_lower: i64,
    pub d_upper_middle: i64,
    pub e_upper_middle: u32,
    /// Absolute different exponents from the conductor-discriminant formula
    /// agree with the derivative oracle at every level.
    pub absolute_agree: bool,
    pub holds: bool,
}

pub fn tower_additivity_check(n1: u32, n2: u32, n3: u32, p: u64) -> Result<TowerCheck, IwasawaError> {
    if n1 == 0 || n2 % n1 != 0 || n3 % n2 != 0 {
        return Err(IwasawaError::NotATower(format!("{n1} | {n2} | {n3} fails")));
    }
    let d31 = phi_prime_different(n1, n3, p)?;
    let d21 = phi_prime_different(n1, n2, p)?;
    let d32 = phi_prime_different(n2, n3, p)?;
    let e3 = cyclotomic_field(n3, p)?.ramification;
    let e2 = cyclotomic_field(n2, p)?.ramification;
    let e32 = e3 / e2;
    let mut absolute_agree = true;
    for n in [n1, n2, n3] {
        let formula = cyclotomic_field(n, p)?.different_exponent as i64;
        absolute_agree &= formula == phi_prime_different(1, n, p)?;
    }
    Ok(TowerCheck {
        levels: [n1, n2, n3],
        prime: p,
        d_upper_lower: d31,
        d_middle_lower: d21,
        d_upper_middle: d32,
        e_upper_middle: e32,
        absolute_agree,
        holds: d31 == e32 as i64 * d21 + d32,
    })
}
