//! Left lattices of the shape `𝕃(m)`: column vectors whose `i`-th block of
//! entries lies in `m_i`.

use serde::{Deserialize, Serialize};

use super::{GraduatedOrder, OrderError};
use crate::ideal::{FracIdeal, Monomial};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeShape(pub Vec<FracIdeal>);

impl LatticeShape {
    /// The `j`-th block column of the order.
    pub fn column(order: &GraduatedOrder, j: usize) -> Self {
        LatticeShape(
            (0..order.block_count())
                .map(|i| order.entry(i, j).clone())
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl GraduatedOrder {
    fn check_shape_len(&self, m: &LatticeShape) -> Result<(), OrderError> {
        if m.len() != self.block_count() {
            return Err(OrderError::Shape(format!(
                "lattice shape has {} entries, order has {} blocks",
                m.len(),
                self.block_count()
            )));
        }
        Ok(())
    }

    /// `I_ij m_j ⊆ m_i` for all `i, j`.
    pub fn is_lattice_shape(&self, m: &LatticeShape) -> Result<bool, OrderError> {
        self.check_shape_len(m)?;
        let t = self.block_count();
        for i in 0..t {
            for j in 0..t {
                if !m.0[i].contains(&self.entry(i, j).product(&m.0[j])?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Returns the generator `α` with `m = α m'` if the two lattices are
    /// isomorphic.
    pub fn lattices_isomorphic(
        &self,
        m: &LatticeShape,
        m2: &LatticeShape,
    ) -> Result<Option<Monomial>, OrderError> {
        self.check_shape_len(m)?;
        self.check_shape_len(m2)?;
        let mut witness = None;
        for (a, b) in m.0.iter().zip(&m2.0) {
            match (a.shift_between(b)?, witness) {
                (None, _) => return Ok(None),
                (Some(x), None) => witness = Some(x),
                (Some(x), Some(w)) if x != w => return Ok(None),
                _ => {}
            }
        }
        Ok(witness)
    }
}
