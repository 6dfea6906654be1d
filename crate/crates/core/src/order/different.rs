//! Inverse different and conductor into a self-dual suborder.

use super::{GraduatedOrder, IdealMatrix, OrderError};
use crate::ideal::{Backend, FracIdeal};

impl GraduatedOrder {
    /// Entry `(i, j)` is `𝔇(Ω/R) · I_ji^{-1}`; every `I_ij` must be invertible.
    pub fn inverse_different(&self) -> Result<IdealMatrix, OrderError> {
        let t = self.block_count();
        let mut rows = Vec::with_capacity(t);
        for i in 0..t {
            let mut row = Vec::with_capacity(t);
            for j in 0..t {
                let inv = self
                    .entry(j, i)
                    .inverse()
                    .map_err(|_| OrderError::NonInvertible(j, i))?;
                row.push(self.d_omega().product(&inv)?);
            }
            rows.push(row);
        }
        IdealMatrix::new(rows)
    }

    /// Conductor `(Γ : Λ)` of this order `Γ` into any self-dual `Λ ⊆ Γ`.
    /// Left and right conductors agree and equal the inverse different of
    /// `Γ`, so no suborder needs to be supplied.
    pub fn conductor_into_selfdual(&self) -> Result<IdealMatrix, OrderError> {
        self.inverse_different()
    }
}

/// Trace-dual of the order computed directly from the trace pairing
/// (DVR backend only).
///
/// For every scalar position `(k, l)` this finds the least exponent `e` with
/// `tr(π^e E_kl · Y) ∈ 𝔇(Ω/R)` for each single-entry generator `Y` of the
/// order, searching `e ∈ [-bound, bound]`. The corresponding ideal `m^e` is
/// the largest one allowed at that position.
pub fn trace_dual_oracle(order: &GraduatedOrder, bound: i64) -> Result<IdealMatrix, OrderError> {
    if order.backend() != Backend::Dvr {
        return Err(OrderError::RequiresDvr);
    }
    let d = order.d_omega().dvr_exponent().ok_or(OrderError::RequiresDvr)?;
    let n = order.total_size();
    let rb = order.blocks().row_blocks();
    // generators π^{I_ab} E_rs of the order as (row, col, exponent)
    let gens: Vec<(usize, usize, i64)> = (0..n)
        .flat_map(|r| (0..n).map(move |s| (r, s)))
        .map(|(r, s)| {
            let k = order.entry(rb[r], rb[s]).dvr_exponent().unwrap_or(0);
            (r, s, k)
        })
        .collect();

    // tr(π^e E_kl · π^f E_rs) = π^{e+f} if l = r and s = k, else 0
    let passes = |k: usize, l: usize, e: i64| {
        gens.iter()
            .filter(|&&(r, s, _)| r == l && s == k)
            .all(|&(_, _, f)| e + f >= d)
    };

    let t = order.block_count();
    let mut exps: Vec<Vec<Option<i64>>> = vec![vec![None; t]; t];
    for k in 0..n {
        for l in 0..n {
            let e = (-bound..=bound)
                .find(|&e| passes(k, l, e))
                .ok_or(OrderError::BoundTooSmall(bound))?;
            if e == -bound {
                return Err(OrderError::BoundTooSmall(bound));
            }
            let slot = &mut exps[rb[k]][rb[l]];
            match slot {
                None => *slot = Some(e),
                Some(prev) if *prev != e => {
                    return Err(OrderError::Witness(format!(
                        "dual is not block-constant in block ({}, {})",
                        rb[k], rb[l]
                    )))
                }
                _ => {}
            }
        }
    }
    Ok(IdealMatrix::from_fn(t, |i, j| {
        FracIdeal::dvr(exps[i][j].unwrap_or_default())
    }))
}

#[cfg(test)]
mod tests {
    use super::super::tests::{dvr, dvr_order};
    use super::super::{BlockSizes, GraduatedOrder, IdealMatrix};
    use super::*;

    #[test]
    fn staircase_inverse_different() {
        let o = dvr_order(&[&[0, 1], &[0, 0]]);
        let expected = dvr(&[&[0, 0], &[-1, 0]]);
        assert_eq!(o.inverse_different().unwrap(), expected);
        assert_eq!(trace_dual_oracle(&o, 6).unwrap(), expected);
        assert_eq!(o.conductor_into_selfdual().unwrap(), expected);
    }

    #[test]
    fn maximal_order_dual_is_scalar() {
        let o = GraduatedOrder::maximal(3, Backend::Dvr, FracIdeal::dvr(2)).unwrap();
        assert_eq!(o.inverse_different().unwrap(), dvr(&[&[2]]));
        assert_eq!(trace_dual_oracle(&o, 5).unwrap(), dvr(&[&[2]]));
    }

    #[test]
    fn monomial_inverse_different() {
        let u = FracIdeal::unit(Backend::Monomial2D);
        let pt = FracIdeal::monomial(&[(1, 1)]).unwrap();
        let ideals = IdealMatrix::new(vec![vec![u.clone(), pt], vec![u.clone(), u.clone()]]).unwrap();
        let o = GraduatedOrder::new(BlockSizes::ones(2), ideals, u.clone()).unwrap();
        let expected = IdealMatrix::new(vec![
            vec![u.clone(), u.clone()],
            vec![FracIdeal::monomial(&[(-1, -1)]).unwrap(), u],
        ])
        .unwrap();
        assert_eq!(o.inverse_different().unwrap(), expected);
    }

    #[test]
    fn non_invertible_entry_is_reported() {
        let u = FracIdeal::unit(Backend::Monomial2D);
        let m = FracIdeal::maximal(Backend::Monomial2D);
        let ideals = IdealMatrix::new(vec![vec![u.clone(), m], vec![u.clone(), u.clone()]]).unwrap();
        let o = GraduatedOrder::new(BlockSizes::ones(2), ideals, u).unwrap();
        assert_eq!(o.inverse_different().unwrap_err(), OrderError::NonInvertible(0, 1));
    }

    #[test]
    fn small_bound_is_detected() {
        let o = dvr_order(&[&[0, 3], &[0, 0]]);
        assert_eq!(trace_dual_oracle(&o, 2).unwrap_err(), OrderError::BoundTooSmall(2));
        assert!(trace_dual_oracle(&o, 5).is_ok());
    }
}
