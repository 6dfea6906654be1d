//! Diagonal determinant witness `diag(det a, 1, ..., 1)`.
//!
//! Ring elements are finite sums `Σ c · p^a T^b` with integer coefficients.
//! The symbols `p` and `T` are kept formal, so an element lies in a monomial
//! ideal exactly when each of its terms does.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{GraduatedOrder, OrderError};
use crate::ideal::{Backend, Monomial};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::monomial(BigInt::one(), Monomial::ONE)
    }

    pub fn monomial(c: BigInt, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let e = terms.entry(*m).or_insert_with(BigInt::zero);
            *e += c;
            if e.is_zero() {
                terms.remove(m);
            }
        }
        Poly { terms }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out = out.add(&Poly::monomial(x * y, a.mul(*b)));
            }
        }
        out
    }

    /// Every term has nonnegative exponents.
    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(|m| m.p >= 0 && m.t >= 0)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("{c}*{m}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Output of [`epac_witness`]: the diagonal of `diag(det a, 1, ..., 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpacWitness {
    pub determinant: Poly,
    pub diagonal: Vec<Poly>,
}

fn determinant(a: &[Vec<Poly>]) -> Poly {
    let n = a.len();
    if n == 0 {
        return Poly::one();
    }
    if n == 1 {
        return a[0][0].clone();
    }
    // Laplace expansion along the first row
    let mut det = Poly::zero();
    for (c, lead) in a[0].iter().enumerate() {
        if lead.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = lead.mul(&determinant(&minor));
        det = if c % 2 == 0 { det.add(&term) } else { det.add(&term.neg()) };
    }
    det
}

/// Checks that `a` lies in the order, computes its determinant and returns
/// the witness `diag(det a, 1, ..., 1)`.
pub fn epac_witness(order: &GraduatedOrder, a: &[Vec<Poly>]) -> Result<EpacWitness, OrderError> {
    let n = order.total_size();
    if a.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(OrderError::Shape(format!("expected a {n}x{n} matrix")));
    }
    let rb = order.blocks().row_blocks();
    for (r, row) in a.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            if order.backend() == Backend::Dvr && e.terms().any(|(m, _)| m.t != 0) {
                return Err(OrderError::Witness(format!("entry ({r}, {c}) uses T in the dvr backend")));
            }
            let ideal = order.entry(rb[r], rb[c]);
            if let Some((m, _)) = e.terms().find(|(m, _)| !ideal.contains_monomial(**m)) {
                return Err(OrderError::Witness(format!(
                    "entry ({r}, {c}) has term {m} outside {ideal}"
                )));
            }
        }
    }
    let det = determinant(a);
    if det.is_zero() {
        return Err(OrderError::Singular);
    }
    if !det.is_integral() {
        return Err(OrderError::Witness(format!("determinant {det} is not integral")));
    }
    let mut diagonal = vec![Poly::one(); n];
    diagonal[0] = det.clone();
    Ok(EpacWitness {
        determinant: det,
        diagonal,
    })
}

#[cfg(test)]
mod tests {
    use super::super::tests::dvr_order;
    use super::super::{BlockSizes, GraduatedOrder};
    use super::*;
    use crate::ideal::FracIdeal;

    fn mono(c: i64, p: i64, t: i64) -> Poly {
        Poly::monomial(BigInt::from(c), Monomial::new(p, t))
    }

    #[test]
    fn identity_witness() {
        let o = dvr_order(&[&[0, 1], &[0, 0]]);
        let id = vec![vec![Poly::one(), Poly::zero()], vec![Poly::zero(), Poly::one()]];
        let w = epac_witness(&o, &id).unwrap();
        assert_eq!(w.diagonal, vec![Poly::one(), Poly::one()]);
    }

    #[test]
    fn diagonal_matrix_over_full_ring() {
        let o = GraduatedOrder::maximal(2, Backend::Monomial2D, FracIdeal::unit(Backend::Monomial2D)).unwrap();
        let a = vec![vec![mono(1, 1, 0), Poly::zero()], vec![Poly::zero(), mono(1, 0, 1)]];
        let w = epac_witness(&o, &a).unwrap();
        assert_eq!(w.determinant, mono(1, 1, 1));
        assert_eq!(w.diagonal[1], Poly::one());
    }

    #[test]
    fn staircase_determinant_expands() {
        let o = GraduatedOrder::staircase(BlockSizes::ones(2), Backend::Monomial2D, FracIdeal::unit(Backend::Monomial2D))
            .unwrap();
        // [[1 + T, p], [T, 2]] has det 2 + 2T - pT
        let a = vec![
            vec![Poly::one().add(&mono(1, 0, 1)), mono(1, 1, 0)],
            vec![mono(1, 0, 1), mono(2, 0, 0)],
        ];
        let w = epac_witness(&o, &a).unwrap();
        let expected = mono(2, 0, 0).add(&mono(2, 0, 1)).add(&mono(-1, 1, 1));
        assert_eq!(w.determinant, expected);
    }

    #[test]
    fn errors() {
        let o = dvr_order(&[&[0, 1], &[0, 0]]);
        let singular = vec![vec![Poly::one(), mono(1, 1, 0)], vec![Poly::one(), mono(1, 1, 0)]];
        assert_eq!(epac_witness(&o, &singular).unwrap_err(), OrderError::Singular);
        let outside = vec![vec![Poly::one(), Poly::one()], vec![Poly::zero(), Poly::one()]];
        assert!(matches!(epac_witness(&o, &outside), Err(OrderError::Witness(_))));
    }
}
