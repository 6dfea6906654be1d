//! The orbit length `w_χ` of `η` under an automorphism and the least power
//! `v_χ` acting on `η` through the Galois group.

use serde::{Deserialize, Serialize};

use super::galois::{decomposition_group, galois_conjugate, stabilizer};
use super::{Automorphism, CharacterTable, GroupError};
use crate::cyclotomic::Cyclo;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiInvariants {
    pub w_chi: u32,
    pub v_chi: u32,
    /// Residue `a` with `η ∘ α^v = σ_a ∘ η` (least such representative).
    pub tau: u32,
    /// Characters `η ∘ α^j` for `j < w`, as table indices.
    pub twist_orbit: Vec<usize>,
}

fn is_power_of(n: u32, p: u64) -> bool {
    let mut n = n as u64;
    while n > 1 && n % p == 0 {
        n /= p;
    }
    n == 1
}

fn twist(vals: &[Cyclo], alpha: &Automorphism, times: u32) -> Vec<Cyclo> {
    (0..vals.len())
        .map(|h| {
            let mut x = h;
            for _ in 0..times {
                x = alpha.apply(x);
            }
            vals[x].clone()
        })
        .collect()
}

/// Computes `(w_χ, v_χ)` for the character `eta` twisted by `alpha`.
pub fn chi_invariants(
    table: &CharacterTable,
    alpha: &Automorphism,
    eta: usize,
    p: u64,
) -> Result<ChiInvariants, GroupError> {
    if eta >= table.len() {
        return Err(GroupError::UnknownCharacter(eta));
    }
    let order = alpha.order();
    if !is_power_of(order, p) {
        return Err(GroupError::NotPPower(order, p));
    }
    let vals = table.element_values(eta);
    let w = (1..=order)
        .find(|&w| twist(&vals, alpha, w) == vals)
        .expect("α^order is the identity");
    let mut twist_orbit = Vec::with_capacity(w as usize);
    let mut restriction = vec![Cyclo::zero(table.level()); vals.len()];
    for j in 0..w {
        let tv = twist(&vals, alpha, j);
        twist_orbit.push(table.find(&tv).ok_or_else(|| {
            GroupError::InvalidTable(format!("twist of character {eta} is not in the table"))
        })?);
        for (acc, x) in restriction.iter_mut().zip(&tv) {
            *acc = acc.add(x)?;
        }
    }
    let decomposition = decomposition_group(table.level(), p)?;
    let fixing = stabilizer(&restriction, &decomposition.elements);
    for v in 1..=w {
        let target = twist(&vals, alpha, v);
        let matches: Vec<u32> = fixing
            .iter()
            .copied()
            .filter(|&a| galois_conjugate(&vals, a) == target)
            .collect();
        if let Some(&tau) = matches.first() {
            // all matches act identically on the values of η, i.e. define
            // the same automorphism of the character field
            if matches.iter().any(|&a| galois_conjugate(&vals, a) != galois_conjugate(&vals, tau)) {
                return Err(GroupError::NotUnique(v));
            }
            if w % v != 0 {
                return Err(GroupError::InvalidTable(format!("v = {v} does not divide w = {w}")));
            }
            return Ok(ChiInvariants {
                w_chi: w,
                v_chi: v,
                tau,
                twist_orbit,
            });
        }
    }
    unreachable!("v = w always matches with a = 1")
}

#[cfg(test)]
mod tests {
    use super::super::bundled::bundled;
    use super::*;

    fn power_map(table: &CharacterTable, k: usize) -> Automorphism {
        let g = table.group();
        Automorphism::new(g, (0..g.order()).map(|h| g.pow(h, k as u32)).collect()).unwrap()
    }

    #[test]
    fn c7_squaring() {
        let t = bundled("C7").unwrap();
        let alpha = power_map(&t, 2);
        let inv = chi_invariants(&t, &alpha, 1, 3).unwrap();
        assert_eq!((inv.w_chi, inv.v_chi), (3, 1));
        assert_eq!(inv.tau, 2);
        assert_eq!(inv.twist_orbit, vec![1, 2, 4]);
    }

    #[test]
    fn identity_gives_ones() {
        let t = bundled("S3").unwrap();
        let id = Automorphism::identity(t.group());
        for eta in 0..t.len() {
            let inv = chi_invariants(&t, &id, eta, 5).unwrap();
            assert_eq!((inv.w_chi, inv.v_chi), (1, 1));
        }
    }

    #[test]
    fn c9_fourth_power() {
        let t = bundled("C9").unwrap();
        let alpha = power_map(&t, 4);
        let inv = chi_invariants(&t, &alpha, 1, 3).unwrap();
        // η ∘ α = η^4 = σ_4 η and σ_4 fixes η + η^4 + η^7
        assert_eq!((inv.w_chi, inv.v_chi), (3, 1));
        assert_eq!(inv.w_chi % inv.v_chi, 0);
    }

    #[test]
    fn order_must_be_a_p_power() {
        let t = bundled("C7").unwrap();
        let alpha = power_map(&t, 3);
        // x ↦ x^3 has order 6 on C7
        assert_eq!(chi_invariants(&t, &alpha, 1, 3).unwrap_err(), GroupError::NotPPower(6, 3));
    }
}
