//! Brute-force central conductor of `Z_p[H]` in its maximal order.
//!
//! For a rational orbit with character field `K = Q(ζ_d)` and a
//! realisation `ρ` over `K`, the Wedderburn component is `M_n(O_K)`. A
//! central `c = Σ c_i ω_i` (with `ω_i = ζ_d^i`, `i < φ(d)`) lies in the
//! conductor iff `c ω_a E_kl ∈ Z_p[H]` for every basis element `ω_a E_kl`;
//! the coefficient of `h` in that element is
//! `(n/#H) Tr_{K/Q}(c ω_a ρ(h^{-1})_lk)`. This gives a rational matrix whose
//! integral solutions are the conductor; its index in `O_K ⊗ Z_p` comes from
//! a local Smith form modulo `p^precision`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::galois::{p_adic_orbits, rational_orbits, stabilizer};
use super::{CharacterTable, CycloMatrix, GroupError};
use crate::cyclotomic::{euler_phi, units_mod, vp_int, vp_rational, Cyclo};
use crate::iwasawa::different::{local_field, LocalField};

/// Largest group order the oracle accepts.
pub const MAX_ORDER: usize = 24;
/// Least accepted working precision.
pub const MIN_PRECISION: u32 = 6;

/// Conductor data for one `p`-adic orbit of characters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitConductor {
    pub orbit: Vec<usize>,
    pub degree: u32,
    /// Local degree `[Q_p(η) : Q_p]` (the orbit length).
    pub field_degree: u32,
    pub ramification: u32,
    pub different: u64,
    /// Conductor valuation in the normalised valuation of `Q_p(η)` found by
    /// the lattice computation.
    pub valuation: i64,
    /// `e · v_p(#H/η(1)) − d(Q_p(η)/Q_p)`.
    pub formula: i64,
}

impl OrbitConductor {
    pub fn agrees(&self) -> bool {
        self.valuation == self.formula
    }
}

/// Formula side of the comparison, one entry per `p`-adic orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaValuation {
    pub orbit: Vec<usize>,
    pub degree: u32,
    pub field: LocalField,
    pub valuation: i64,
}

fn field_of(table: &CharacterTable, eta: usize, p: u64) -> Result<LocalField, GroupError> {
    let n = table.level();
    let fixing = stabilizer(&table.element_values(eta), &units_mod(n));
    local_field(n, p, &fixing).map_err(|e| GroupError::Unsupported(e.to_string()))
}

/// Jacobinski valuations of the central conductor, per `p`-adic orbit.
pub fn jacobinski_valuations(table: &CharacterTable, p: u64) -> Result<Vec<FormulaValuation>, GroupError> {
    let order = table.group().order() as u64;
    p_adic_orbits(table, p)?
        .into_iter()
        .map(|orbit| {
            let eta = orbit[0];
            let degree = table.degree(eta).ok_or(GroupError::UnknownCharacter(eta))?;
            let field = field_of(table, eta, p)?;
            let index = vp_rational(p, &BigRational::new(order.into(), degree.into())).expect("nonzero");
            let valuation = field.ramification as i64 * index - field.different_exponent as i64;
            Ok(FormulaValuation {
                orbit,
                degree,
                field,
                valuation,
            })
        })
        .collect()
}

/// Residue of `p^shift · r` modulo `p^precision`; `p^shift r` must be
/// `p`-integral.
fn residue(r: &BigRational, shift: u32, p: &BigInt, modulus: &BigInt) -> BigInt {
    if r.is_zero() {
        return BigInt::zero();
    }
    let pu = p.to_u64().expect("small prime");
    let (mut num, mut den) = (r.numer().clone(), r.denom().clone());
    let vn = vp_int(pu, &num);
    let vd = vp_int(pu, &den);
    num /= p.pow(vn as u32);
    den /= p.pow(vd as u32);
    let exp = vn - vd + shift as i64;
    assert!(exp >= 0, "scaled entry is not p-integral");
    let inv = mod_inverse(&den, modulus);
    (num * inv * p.pow(exp as u32)).mod_floor(modulus)
}

fn mod_inverse(u: &BigInt, modulus: &BigInt) -> BigInt {
    let g = u.mod_floor(modulus).extended_gcd(modulus);
    debug_assert!(g.gcd.is_one());
    g.x.mod_floor(modulus)
}

fn valuation_mod(x: &BigInt, p: u64, precision: u32) -> u32 {
    if x.is_zero() {
        precision
    } else {
        (vp_int(p, x) as u32).min(precision)
    }
}

/// Exponents `a_i` of the local Smith form of `rows` over `Z/p^precision`,
/// one per column; `precision` stands for "zero at this precision".
fn local_smith(mut rows: Vec<Vec<BigInt>>, cols: usize, p: u64, precision: u32) -> Vec<u32> {
    let pb = BigInt::from(p);
    let modulus = pb.pow(precision);
    let mut row_alive = vec![true; rows.len()];
    let mut col_alive = vec![true; cols];
    let mut exps = Vec::with_capacity(cols);
    loop {
        let mut best: Option<(u32, usize, usize)> = None;
        for (r, row) in rows.iter().enumerate().filter(|(r, _)| row_alive[*r]) {
            for c in (0..cols).filter(|&c| col_alive[c]) {
                let v = valuation_mod(&row[c], p, precision);
                if v < precision && best.is_none_or(|(bv, _, _)| v < bv) {
                    best = Some((v, r, c));
                }
            }
        }
        let Some((v, pr, pc)) = best else { break };
        exps.push(v);
        let unit = &rows[pr][pc] / pb.pow(v);
        let inv = mod_inverse(&unit, &modulus);
        let pivot_row = rows[pr].clone();
        for r in 0..rows.len() {
            if r == pr || !row_alive[r] || rows[r][pc].is_zero() {
                continue;
            }
            let factor = (&rows[r][pc] / pb.pow(v) * &inv).mod_floor(&modulus);
            for c in 0..cols {
                if col_alive[c] {
                    rows[r][c] = (&rows[r][c] - &factor * &pivot_row[c]).mod_floor(&modulus);
                }
            }
        }
        row_alive[pr] = false;
        col_alive[pc] = false;
    }
    exps.resize(cols, precision);
    exps
}

/// The least `d | N` with `Q(η) = Q(ζ_d)`, if any.
fn cyclotomic_character_field(level: u32, fixing: &[u32]) -> Option<u32> {
    crate::cyclotomic::divisors(level).into_iter().find(|&d| {
        let s: Vec<u32> = units_mod(level).into_iter().filter(|a| a % d == 1 % d).collect();
        s == fixing
    })
}

fn realisation(table: &CharacterTable, eta: usize) -> Result<Vec<CycloMatrix>, GroupError> {
    let n = table.level();
    let group = table.group();
    let ch = &table.characters()[eta];
    match &ch.representation {
        Some(rep) => (0..group.order())
            .map(|h| {
                rep.image(h)
                    .iter()
                    .map(|row| row.iter().map(|x| x.to_level(n).map_err(GroupError::from)).collect())
                    .collect()
            })
            .collect(),
        None if table.degree(eta) == Some(1) => {
            Ok((0..group.order()).map(|h| vec![vec![table.value(eta, h).clone()]]).collect())
        }
        None => Err(GroupError::Unsupported(format!(
            "character {} has no realisation",
            ch.name
        ))),
    }
}

/// Conductor valuation of the rational orbit containing `eta`, in the
/// normalised valuation of any completion of `Q(η)`.
fn component_valuation(table: &CharacterTable, eta: usize, p: u64, precision: u32) -> Result<i64, GroupError> {
    let n = table.level();
    let group = table.group();
    let order = group.order();
    let vals = table.element_values(eta);
    let fixing = stabilizer(&vals, &units_mod(n));
    let d = cyclotomic_character_field(n, &fixing).ok_or_else(|| {
        GroupError::Unsupported(format!("character field of {} is not cyclotomic", table.characters()[eta].name))
    })?;
    if table.schur_index(eta) != 1 {
        return Err(GroupError::Unsupported("nontrivial Schur index".into()));
    }
    let rho = realisation(table, eta)?;
    for m in &rho {
        for x in m.iter().flatten() {
            if fixing.iter().any(|&a| x.galois(a as i64).as_ref() != Ok(x)) {
                return Err(GroupError::Unsupported(format!(
                    "{} is not realised over its character field",
                    table.characters()[eta].name
                )));
            }
        }
    }
    let deg = rho[0].len();
    let phi_d = euler_phi(d) as usize;
    let relative = BigRational::from_integer((euler_phi(n) / euler_phi(d)).into());
    let omega: Vec<Cyclo> = (0..phi_d).map(|i| Cyclo::zeta_pow(n, ((n / d) as usize * i) as i64)).collect();
    let scale = BigRational::new(deg.into(), order.into());
    let mut matrix: Vec<Vec<BigRational>> = Vec::new();
    for h in 0..order {
        let img = &rho[group.inv(h)];
        for k in 0..deg {
            for l in 0..deg {
                let entry = &img[l][k];
                if entry.is_zero() {
                    continue;
                }
                for wa in &omega {
                    let base = wa.mul(entry)?;
                    let row = omega
                        .iter()
                        .map(|wi| Ok(wi.mul(&base)?.trace() / &relative * &scale))
                        .collect::<Result<Vec<_>, GroupError>>()?;
                    matrix.push(row);
                }
            }
        }
    }
    let s = matrix
        .iter()
        .flatten()
        .filter_map(|x| vp_rational(p, x))
        .map(|v| (-v).max(0))
        .max()
        .unwrap_or(0) as u32;
    if s + 1 >= precision {
        return Err(GroupError::PrecisionExhausted);
    }
    let pb = BigInt::from(p);
    let modulus = pb.pow(precision);
    let rows: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|x| residue(x, s, &pb, &modulus)).collect())
        .collect();
    let exps = local_smith(rows, phi_d, p, precision);
    let index: u32 = exps.iter().map(|&a| s - a.min(s)).sum();
    let e = local_field(n, p, &fixing)
        .map_err(|err| GroupError::Unsupported(err.to_string()))?
        .ramification;
    let scaled = index as i64 * e as i64;
    if scaled % phi_d as i64 != 0 {
        return Err(GroupError::Unsupported(
            "conductor valuation differs between primes above p".into(),
        ));
    }
    let valuation = scaled / phi_d as i64;
    if valuation + 1 >= precision as i64 {
        return Err(GroupError::PrecisionExhausted);
    }
    Ok(valuation)
}

/// Per-orbit conductor valuations of `Z_p[H]`, computed by lattice
/// arithmetic modulo `p^precision` and paired with the formula values.
pub fn bruteforce_conductor(table: &CharacterTable, p: u64, precision: u32) -> Result<Vec<OrbitConductor>, GroupError> {
    let order = table.group().order();
    if order > MAX_ORDER {
        return Err(GroupError::TooLarge(order, MAX_ORDER));
    }
    if precision < MIN_PRECISION {
        return Err(GroupError::Unsupported(format!("precision must be at least {MIN_PRECISION}")));
    }
    let formula = jacobinski_valuations(table, p)?;
    let rational = rational_orbits(table)?;
    let mut cache: Vec<Option<i64>> = vec![None; rational.len()];
    let mut out = Vec::with_capacity(formula.len());
    for f in formula {
        let eta = f.orbit[0];
        let q = rational.iter().position(|o| o.contains(&eta)).expect("orbits partition");
        let valuation = match cache[q] {
            Some(v) => v,
            None => {
                let v = component_valuation(table, eta, p, precision)?;
                cache[q] = Some(v);
                v
            }
        };
        out.push(OrbitConductor {
            orbit: f.orbit,
            degree: f.degree,
            field_degree: f.field.degree,
            ramification: f.field.ramification,
            different: f.field.different_exponent,
            valuation,
            formula: f.valuation,
        });
    }
    Ok(out)
}
