//! Jacobson radical, its quotient, and two-sided ideal matrices.

use serde::{Deserialize, Serialize};

use super::{GraduatedOrder, IdealMatrix, OrderError};
use crate::ideal::FracIdeal;

/// One simple factor `M_n(Ω/m_Ω)` of `Λ / Jac(Λ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientBlock {
    pub size: usize,
    /// Length of the residue ring `Ω/m_Ω` over itself (always 1).
    pub residue_length: u64,
}

impl GraduatedOrder {
    /// `Λ(n, I * E_m)`: diagonal entries multiplied by the maximal ideal.
    pub fn jacobson_radical(&self) -> IdealMatrix {
        let m = FracIdeal::maximal(self.backend());
        IdealMatrix::from_fn(self.block_count(), |i, j| {
            if i == j {
                m.clone()
            } else {
                self.entry(i, j).clone()
            }
        })
    }

    /// Simple factors of `Λ / Jac(Λ)`, one per block.
    pub fn radical_quotient(&self) -> Vec<QuotientBlock> {
        let unit = FracIdeal::unit(self.backend());
        let residue_length = unit
            .colength(&FracIdeal::maximal(self.backend()))
            .ok()
            .flatten()
            .unwrap_or(1);
        self.blocks
            .as_slice()
            .iter()
            .map(|&size| QuotientBlock {
                size,
                residue_length,
            })
            .collect()
    }

    /// Length of `Λ / Jac(Λ)` counted entry by entry: every scalar position
    /// contributes the colength of its radical entry inside its order entry.
    pub fn radical_colength(&self) -> Result<Option<u64>, OrderError> {
        let jac = self.jacobson_radical();
        let sizes = self.blocks.as_slice();
        let mut total = 0u64;
        for i in 0..self.block_count() {
            for j in 0..self.block_count() {
                match self.entry(i, j).colength(jac.get(i, j))? {
                    Some(c) => total += c * (sizes[i] * sizes[j]) as u64,
                    None => return Ok(None),
                }
            }
        }
        Ok(Some(total))
    }

    /// `I_ij J_jk ⊆ J_ik` and `J_ij I_jk ⊆ J_ik` for all `i, j, k`.
    pub fn is_fractional_ideal_matrix(&self, j: &IdealMatrix) -> Result<bool, OrderError> {
        Ok(self.ideal_matrix_violation(j)?.is_none())
    }

    /// First triple `(i, j, k)` breaking two-sidedness, if any.
    pub fn ideal_matrix_violation(
        &self,
        jm: &IdealMatrix,
    ) -> Result<Option<(usize, usize, usize)>, OrderError> {
        let t = self.block_count();
        if jm.size() != t {
            return Err(OrderError::Shape(format!(
                "expected a {t}x{t} ideal matrix, got {}x{}",
                jm.size(),
                jm.size()
            )));
        }
        for i in 0..t {
            for j in 0..t {
                for k in 0..t {
                    let left = self.entry(i, j).product(jm.get(j, k))?;
                    let right = jm.get(i, j).product(self.entry(j, k))?;
                    if !jm.get(i, k).contains(&left)? || !jm.get(i, k).contains(&right)? {
                        return Ok(Some((i, j, k)));
                    }
                }
            }
        }
        Ok(None)
    }
}
