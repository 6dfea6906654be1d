//! Group-algebra elements and the central idempotents `e(η)`, `ε(η)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{CharacterTable, FiniteGroup, GroupError};
use crate::cyclotomic::Cyclo;

/// `Σ_h c_h h` with coefficients in `Q(ζ_N)`, stored densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    coeffs: Vec<Cyclo>,
}

impl GroupAlgebraElement {
    pub fn zero(order: usize, level: u32) -> Self {
        GroupAlgebraElement {
            coeffs: vec![Cyclo::zero(level); order],
        }
    }

    pub fn one(order: usize, level: u32) -> Self {
        Self::basis(order, level, 0)
    }

    /// The group element `h`.
    pub fn basis(order: usize, level: u32, h: usize) -> Self {
        let mut e = Self::zero(order, level);
        e.coeffs[h] = Cyclo::one(level);
        e
    }

    pub fn from_coeffs(coeffs: Vec<Cyclo>) -> Self {
        GroupAlgebraElement { coeffs }
    }

    pub fn coeffs(&self) -> &[Cyclo] {
        &self.coeffs
    }

    pub fn coeff(&self, h: usize) -> &Cyclo {
        &self.coeffs[h]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Cyclo::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self, GroupError> {
        Ok(GroupAlgebraElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect::<Result<_, _>>()?,
        })
    }

    pub fn mul(&self, other: &Self, group: &FiniteGroup) -> Result<Self, GroupError> {
        let level = self.coeffs[0].level();
        let mut out = Self::zero(group.order(), level);
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in other.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = group.mul(a, b);
                out.coeffs[c] = out.coeffs[c].add(&x.mul(y)?)?;
            }
        }
        Ok(out)
    }

    /// `self · g` by reindexing.
    pub fn mul_element_right(&self, g: usize, group: &FiniteGroup) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (a, x) in self.coeffs.iter().enumerate() {
            coeffs[group.mul(a, g)] = x.clone();
        }
        GroupAlgebraElement { coeffs }
    }

    /// `g · self` by reindexing.
    pub fn mul_element_left(&self, g: usize, group: &FiniteGroup) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (a, x) in self.coeffs.iter().enumerate() {
            coeffs[group.mul(g, a)] = x.clone();
        }
        GroupAlgebraElement { coeffs }
    }

    pub fn is_central(&self, group: &FiniteGroup) -> bool {
        (0..group.order()).all(|g| self.mul_element_left(g, group) == self.mul_element_right(g, group))
    }

    pub fn galois(&self, a: u32) -> Result<Self, GroupError> {
        Ok(GroupAlgebraElement {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.galois(a as i64))
                .collect::<Result<_, _>>()?,
        })
    }

    /// Every coefficient is rational.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(|c| c.as_rational().is_some())
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(h, c)| format!("({c})*g{h}"))
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// `e(η) = η(1)/#H · Σ_h η(h^{-1}) h`.
pub fn primitive_idempotent(table: &CharacterTable, eta: usize) -> Result<GroupAlgebraElement, GroupError> {
    if eta >= table.len() {
        return Err(GroupError::UnknownCharacter(eta));
    }
    let group = table.group();
    let deg = table.degree(eta).ok_or(GroupError::UnknownCharacter(eta))?;
    let scale = BigRational::new(BigInt::from(deg), BigInt::from(group.order() as u64));
    let coeffs = (0..group.order())
        .map(|h| table.value(eta, group.inv(h)).scale(&scale))
        .collect();
    Ok(GroupAlgebraElement { coeffs })
}

/// `ε = Σ e(η')` over an orbit of characters.
pub fn epsilon_idempotent(table: &CharacterTable, orbit: &[usize]) -> Result<GroupAlgebraElement, GroupError> {
    let mut acc = GroupAlgebraElement::zero(table.group().order(), table.level());
    for &eta in orbit {
        acc = acc.add(&primitive_idempotent(table, eta)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::super::bundled::bundled;
    use super::super::galois::p_adic_orbits;
    use num_traits::Signed;
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn trivial_idempotent_of_c2() {
        let t = bundled("C2").unwrap();
        let e = primitive_idempotent(&t, 0).unwrap();
        for h in 0..2 {
            assert_eq!(e.coeff(h).as_rational(), Some(rat(1, 2)));
        }
    }

    #[test]
    fn faithful_idempotent_of_c3() {
        let t = bundled("C3").unwrap();
        let e = primitive_idempotent(&t, 1).unwrap();
        let third = rat(1, 3);
        assert_eq!(e.coeff(0), &Cyclo::one(3).scale(&third));
        assert_eq!(e.coeff(1), &Cyclo::zeta_pow(3, 2).scale(&third));
        assert_eq!(e.coeff(2), &Cyclo::zeta_pow(3, 1).scale(&third));
        assert_eq!(e.mul(&e, t.group()).unwrap(), e);
        assert!(e.is_central(t.group()));
    }

    #[test]
    fn c3_epsilon_is_rational() {
        let t = bundled("C3").unwrap();
        let eps = epsilon_idempotent(&t, &[1, 2]).unwrap();
        let vals: Vec<_> = (0..3).map(|h| eps.coeff(h).as_rational().unwrap()).collect();
        assert_eq!(vals, vec![rat(2, 3), rat(-1, 3), rat(-1, 3)]);
    }

    #[test]
    fn sign_idempotent_of_s3() {
        let t = bundled("S3").unwrap();
        let e = primitive_idempotent(&t, 1).unwrap();
        for h in 0..6 {
            let v = e.coeff(h).as_rational().unwrap();
            assert_eq!(v.abs(), rat(1, 6));
        }
        assert_eq!(e.mul(&e, t.group()).unwrap(), e);
    }

    #[test]
    fn c7_big_orbit_complements_trivial() {
        let t = bundled("C7").unwrap();
        let orbits = p_adic_orbits(&t, 3).unwrap();
        let eps = epsilon_idempotent(&t, &orbits[1]).unwrap();
        assert_eq!(eps.coeff(0).as_rational(), Some(rat(6, 7)));
        for h in 1..7 {
            assert_eq!(eps.coeff(h).as_rational(), Some(rat(-1, 7)));
        }
    }

    #[test]
    fn unknown_character() {
        let t = bundled("C2").unwrap();
        assert_eq!(primitive_idempotent(&t, 5).unwrap_err(), GroupError::UnknownCharacter(5));
    }
}
