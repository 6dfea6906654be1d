//! Per-character ramification profiles and the numbers `r_χ`, `s_χ` and
//! the `π_χ`-exponent of the central conductor component.

use serde::{Deserialize, Serialize};

use super::different::local_field;
use super::IwasawaError;
use crate::cyclotomic::{units_mod, vp_u64, Cyclo};
use crate::group::galois::{is_prime, stabilizer};
use crate::group::{chi_invariants, Automorphism, CharacterTable};

/// Field-theoretic data attached to one `χ ∈ Irr(G)` with `η | χ|_H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChiProfile {
    #[serde(default)]
    pub name: String,
    pub prime: u64,
    pub eta_degree: u32,
    #[serde(default = "one")]
    pub s_eta: u32,
    pub w_chi: u32,
    pub v_chi: u32,
    /// `e(F(η)/F_χ)`.
    pub e_eta_chi: u32,
    /// Different exponent of `F(η)/F_χ` in the valuation of `F(η)`.
    pub d_eta_chi: u64,
    /// Different exponent of `F_χ/F`.
    #[serde(rename = "d_chi_F")]
    pub d_chi_f: u64,
    /// `e(F_χ/Q_p)`.
    #[serde(rename = "ram_F_chi")]
    pub ram_f_chi: u32,
    #[serde(rename = "order_H")]
    pub order_h: u64,
    #[serde(default)]
    pub is_direct_product: bool,
}

fn one() -> u32 {
    1
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n > 1 && n % p == 0 {
        n /= p;
    }
    n == 1
}

impl ChiProfile {
    pub fn validate(&self) -> Result<(), IwasawaError> {
        let bad = |m: &str| Err(IwasawaError::InvalidProfile(format!("{}: {m}", self.label())));
        if !is_prime(self.prime) || self.prime == 2 {
            return bad("prime must be odd");
        }
        if self.eta_degree == 0 || self.s_eta == 0 || self.order_h == 0 || self.ram_f_chi == 0 {
            return bad("degrees, Schur index, group order and ramification must be positive");
        }
        if self.w_chi == 0 || self.v_chi == 0 {
            return bad("w_chi and v_chi must be positive");
        }
        if self.w_chi % self.v_chi != 0 {
            return Err(IwasawaError::Divisibility {
                w: self.w_chi,
                v: self.v_chi,
            });
        }
        if self.e_eta_chi == 0 {
            return Err(IwasawaError::ZeroRamification);
        }
        if self.order_h % self.eta_degree as u64 != 0 {
            return Err(IwasawaError::InconsistentDegrees(format!(
                "eta(1) = {} does not divide #H = {}",
                self.eta_degree, self.order_h
            )));
        }
        if !is_power_of(self.w_chi as u64, self.prime) {
            return bad("w_chi must be a power of p");
        }
        if self.e_eta_chi == 1 && self.d_eta_chi != 0 {
            return bad("an unramified extension has different exponent 0");
        }
        if (self.w_chi / self.v_chi) % self.e_eta_chi != 0 {
            return bad("e(F(eta)/F_chi) must divide w_chi / v_chi");
        }
        if self.is_direct_product && (self.w_chi != 1 || self.v_chi != 1 || self.e_eta_chi != 1) {
            return bad("a direct product has w_chi = v_chi = e = 1");
        }
        Ok(())
    }

    pub fn chi_degree(&self) -> u64 {
        self.w_chi as u64 * self.eta_degree as u64
    }

    fn label(&self) -> &str {
        if self.name.is_empty() {
            "profile"
        } else {
            &self.name
        }
    }
}

/// `r_χ = −⌊d(F(η)/F_χ) / e(F(η)/F_χ)⌋`. The different of `W/F_χ` can be
/// replaced by that of `F(η)/F_χ` because `W/F(η)` is unramified, so the
/// tower formula adds nothing on top.
pub fn r_chi(profile: &ChiProfile) -> Result<i64, IwasawaError> {
    profile.validate()?;
    Ok(-((profile.d_eta_chi / profile.e_eta_chi as u64) as i64))
}

/// `s_χ = s_η w_χ / v_χ`.
pub fn s_chi(profile: &ChiProfile) -> Result<u64, IwasawaError> {
    if profile.v_chi == 0 || profile.w_chi % profile.v_chi != 0 {
        return Err(IwasawaError::Divisibility {
            w: profile.w_chi,
            v: profile.v_chi,
        });
    }
    Ok(profile.s_eta as u64 * (profile.w_chi / profile.v_chi) as u64)
}

/// One row of the conductor report: the component is
/// `π_χ^{pi_exponent} (𝔭'_χ)^{r_χ}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConductorRow {
    pub name: String,
    pub chi_degree: u64,
    pub r_chi: i64,
    pub s_chi: u64,
    /// `v_{F_χ}(#H w_χ / χ(1))`.
    pub coefficient_valuation: i64,
    #[serde(rename = "d_chi_F")]
    pub d_chi_f: u64,
    /// Coefficient valuation plus the valuation of the inverse different of
    /// `F_χ/F`.
    pub pi_exponent: i64,
    pub prime_exponent: i64,
    /// Matrix size of the Wedderburn component; known for direct products.
    pub n_chi: Option<u32>,
}

pub fn central_conductor_component(profile: &ChiProfile) -> Result<ConductorRow, IwasawaError> {
    let r = r_chi(profile)?;
    let s = s_chi(profile)?;
    let index = profile.order_h * profile.w_chi as u64;
    if index % profile.chi_degree() != 0 {
        return Err(IwasawaError::InconsistentDegrees(format!(
            "chi(1) = {} does not divide #H w_chi = {index}",
            profile.chi_degree()
        )));
    }
    let coefficient = profile.ram_f_chi as i64 * vp_u64(profile.prime, index / profile.chi_degree()) as i64;
    let n_chi = if profile.is_direct_product && profile.eta_degree % profile.s_eta == 0 {
        Some(profile.eta_degree / profile.s_eta)
    } else {
        None
    };
    Ok(ConductorRow {
        name: profile.name.clone(),
        chi_degree: profile.chi_degree(),
        r_chi: r,
        s_chi: s,
        coefficient_valuation: coefficient,
        d_chi_f: profile.d_chi_f,
        pi_exponent: coefficient - profile.d_chi_f as i64,
        prime_exponent: r,
        n_chi,
    })
}

/// Profile of `χ` induced from `η` under the twist `α` for a bundled table,
/// with `F = Q_p`.
pub fn profile_from_group(
    table: &CharacterTable,
    alpha: &Automorphism,
    eta: usize,
    p: u64,
) -> Result<ChiProfile, IwasawaError> {
    let inv = chi_invariants(table, alpha, eta, p)?;
    let level = table.level();
    let units = units_mod(level);
    let mut restriction = vec![Cyclo::zero(level); table.group().order()];
    for &j in &inv.twist_orbit {
        for (acc, x) in restriction.iter_mut().zip(table.element_values(j)) {
            *acc = acc.add(&x).map_err(crate::group::GroupError::from)?;
        }
    }
    let f_eta = local_field(level, p, &stabilizer(&table.element_values(eta), &units))?;
    let f_chi = local_field(level, p, &stabilizer(&restriction, &units))?;
    if f_eta.ramification % f_chi.ramification != 0 {
        return Err(IwasawaError::Inconsistent("F_chi is not contained in F(eta)".into()));
    }
    let e = f_eta.ramification / f_chi.ramification;
    let d = f_eta.different_exponent as i64 - e as i64 * f_chi.different_exponent as i64;
    let ch = &table.characters()[eta];
    Ok(ChiProfile {
        name: format!("{}/{}", table.name(), ch.name),
        prime: p,
        eta_degree: table.degree(eta).expect("validated table"),
        s_eta: ch.schur_index,
        w_chi: inv.w_chi,
        v_chi: inv.v_chi,
        e_eta_chi: e,
        d_eta_chi: u64::try_from(d).map_err(|_| IwasawaError::Inconsistent("negative relative different".into()))?,
        d_chi_f: f_chi.different_exponent,
        ram_f_chi: f_chi.ramification,
        order_h: table.group().order() as u64,
        is_direct_product: alpha.is_identity(),
    })
}
