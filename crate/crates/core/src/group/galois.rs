//! The `p`-adic Galois action on characters.

use serde::Serialize;

use super::{CharacterTable, GroupError};
use crate::cyclotomic::{units_mod, Cyclo};

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Image of `Gal(Q_p(ζ_N)/Q_p)` in `(Z/N)^×`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionGroup {
    pub level: u32,
    pub prime: u64,
    /// `N = p^k m` with `p ∤ m`.
    pub p_exponent: u32,
    pub prime_to_p: u32,
    /// All elements, increasing.
    pub elements: Vec<u32>,
    /// Residues `≡ 1 (mod m)`.
    pub inertia: Vec<u32>,
    /// The residue `≡ p (mod m)` and `≡ 1 (mod p^k)`.
    pub frobenius: u32,
}

impl DecompositionGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: u32) -> bool {
        self.elements.binary_search(&(a % self.level.max(1))).is_ok()
    }

    /// Inertia residues `a ≡ 1 (mod m)` with `a ≡ 1 (mod p^c)` as well.
    pub fn ramification_subgroup(&self, c: u32) -> Vec<u32> {
        let pc = (self.prime as u32).pow(c.min(self.p_exponent));
        self.inertia
            .iter()
            .copied()
            .filter(|&a| a % pc == 1 % pc)
            .collect()
    }
}

/// Decomposition group of the odd prime `p` in `Q(ζ_N)`.
pub fn decomposition_group(level: u32, p: u64) -> Result<DecompositionGroup, GroupError> {
    if level == 0 {
        return Err(GroupError::InvalidLevel(level));
    }
    if !is_prime(p) || p == 2 {
        return Err(GroupError::InvalidPrime(p));
    }
    let mut m = level;
    let mut k = 0;
    while m as u64 % p == 0 {
        m /= p as u32;
        k += 1;
    }
    let pm = p % m as u64;
    let mut frob_powers = vec![1 % m];
    let mut x = pm as u32;
    while x != 1 % m {
        frob_powers.push(x);
        x = ((x as u64 * pm) % m as u64) as u32;
    }
    let units = units_mod(level);
    let elements: Vec<u32> = units
        .iter()
        .copied()
        .filter(|a| frob_powers.contains(&(a % m)))
        .collect();
    let inertia: Vec<u32> = elements.iter().copied().filter(|a| a % m == 1 % m).collect();
    let pk = (p as u32).pow(k);
    let frobenius = elements
        .iter()
        .copied()
        .find(|a| a % m == pm as u32 && a % pk == 1 % pk)
        .unwrap_or(1 % level);
    Ok(DecompositionGroup {
        level,
        prime: p,
        p_exponent: k,
        prime_to_p: m,
        elements,
        inertia,
        frobenius,
    })
}

/// `σ_a ∘ η` as element values.
pub fn galois_conjugate(vals: &[Cyclo], a: u32) -> Vec<Cyclo> {
    vals.iter()
        .map(|v| v.galois(a as i64).expect("a is a unit"))
        .collect()
}

/// Residues in `group` whose `σ_a` fixes every value.
pub fn stabilizer(vals: &[Cyclo], group: &[u32]) -> Vec<u32> {
    group
        .iter()
        .copied()
        .filter(|&a| galois_conjugate(vals, a) == vals)
        .collect()
}

/// Orbits of the irreducible characters under the decomposition group,
/// each sorted, ordered by their least member.
pub fn p_adic_orbits(table: &CharacterTable, p: u64) -> Result<Vec<Vec<usize>>, GroupError> {
    let d = decomposition_group(table.level(), p)?;
    orbits_under(table, &d.elements)
}

/// Orbits under the full Galois group `(Z/N)^×`.
pub fn rational_orbits(table: &CharacterTable) -> Result<Vec<Vec<usize>>, GroupError> {
    orbits_under(table, &units_mod(table.level()))
}

fn orbits_under(table: &CharacterTable, group: &[u32]) -> Result<Vec<Vec<usize>>, GroupError> {
    let mut seen = vec![false; table.len()];
    let mut orbits = Vec::new();
    for i in 0..table.len() {
        if seen[i] {
            continue;
        }
        let vals = table.element_values(i);
        let mut orbit = Vec::new();
        for &a in group {
            let j = table
                .find(&galois_conjugate(&vals, a))
                .ok_or_else(|| GroupError::InvalidTable(format!("Galois conjugate of character {i} is missing")))?;
            if !orbit.contains(&j) {
                orbit.push(j);
                seen[j] = true;
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::super::bundled;
    use super::*;

    #[test]
    fn decomposition_examples() {
        let d = decomposition_group(7, 3).unwrap();
        assert_eq!(d.elements, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(d.inertia, vec![1]);
        assert_eq!(d.frobenius, 3);
        let d = decomposition_group(3, 3).unwrap();
        assert_eq!(d.elements, vec![1, 2]);
        assert_eq!(d.inertia, vec![1, 2]);
        let d = decomposition_group(8, 3).unwrap();
        assert_eq!(d.elements, vec![1, 3]);
        let d = decomposition_group(9, 3).unwrap();
        assert_eq!(d.order(), 6);
        assert_eq!(d.ramification_subgroup(1), vec![1, 4, 7]);
        assert_eq!(d.ramification_subgroup(2), vec![1]);
        assert!(decomposition_group(0, 3).is_err());
        assert!(decomposition_group(5, 4).is_err());
        assert!(decomposition_group(5, 2).is_err());
    }

    #[test]
    fn mixed_level_decomposition() {
        // N = 21 = 3 * 7 at p = 7: Frobenius 7 = 1 mod 3
        let d = decomposition_group(21, 7).unwrap();
        assert_eq!(d.prime_to_p, 3);
        assert_eq!(d.inertia.len(), 6);
        assert_eq!(d.order(), 6);
    }

    #[test]
    fn orbit_examples() {
        let c3 = bundled::bundled("C3").unwrap();
        assert_eq!(p_adic_orbits(&c3, 3).unwrap(), vec![vec![0], vec![1, 2]]);
        let s3 = bundled::bundled("S3").unwrap();
        assert_eq!(p_adic_orbits(&s3, 7).unwrap(), vec![vec![0], vec![1], vec![2]]);
        let c7 = bundled::bundled("C7").unwrap();
        assert_eq!(p_adic_orbits(&c7, 3).unwrap(), vec![vec![0], vec![1, 2, 3, 4, 5, 6]]);
        // ord_7(11) = 3 splits the faithful characters into two orbits
        let orbits = p_adic_orbits(&c7, 11).unwrap();
        assert_eq!(orbits, vec![vec![0], vec![1, 2, 4], vec![3, 5, 6]]);
    }
}
