//! Replacing every off-diagonal ideal by one principal ideal.

use super::{GraduatedOrder, IdealMatrix, OrderError};
use crate::ideal::{FracIdeal, Monomial};

impl GraduatedOrder {
    /// Monomial generator of least total degree in `⋂_{i,j} I_ij`
    /// (ties broken by the smaller `p`-exponent).
    pub fn principal_element(&self) -> Result<Monomial, OrderError> {
        let t = self.block_count();
        let mut meet = FracIdeal::unit(self.backend());
        for i in 0..t {
            for j in 0..t {
                meet = meet.intersect(self.entry(i, j))?;
            }
        }
        let best = meet
            .generators()
            .into_iter()
            .min_by_key(|m| (m.p + m.t, m.p))
            .expect("ideals are nonzero");
        Ok(best)
    }

    /// Order with all off-diagonal entries equal to `(x)` for a chosen
    /// `x ∈ ⋂ I_ij`; it is contained in `self` and in standard form.
    pub fn principalize(&self) -> Result<GraduatedOrder, OrderError> {
        let x = FracIdeal::principal(self.backend(), self.principal_element()?);
        let unit = FracIdeal::unit(self.backend());
        let ideals = IdealMatrix::from_fn(self.block_count(), |i, j| {
            if i == j {
                unit.clone()
            } else {
                x.clone()
            }
        });
        GraduatedOrder::new(self.blocks().clone(), ideals, self.d_omega().clone())
    }
}
