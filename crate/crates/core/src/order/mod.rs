//! Graduated orders `Λ(n, I)` in standard form.
//!
//! An order is stored on a fixed idempotent frame: block sizes `n_1..n_t`
//! together with a `t × t` matrix of fractional ideals of `Ω`. The
//! `(i, j)` block of the order consists of all `n_i × n_j` matrices with
//! entries in `I_ij`.

mod different;
mod epac;
mod extremal;
mod intersect;
mod lattice;
mod principalize;
mod radical;
pub mod sample;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ideal::{Backend, FracIdeal, IdealError, Monomial};

pub use different::trace_dual_oracle;
pub use epac::{epac_witness, EpacWitness, Poly};
pub use extremal::{extremal_covers, graduated_hull, is_extremal, MAX_HULL_BLOCKS};
pub use intersect::{intersect_orders, radically_covers};
pub use lattice::LatticeShape;
pub use radical::QuotientBlock;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("ideals use mixed backends ({0} and {1})")]
    MixedBackends(Backend, Backend),
    #[error("not in standard form: {0}")]
    Violation(Violation),
    #[error("entry ({0}, {1}) is not invertible")]
    NonInvertible(usize, usize),
    #[error("total sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("operation requires the dvr backend")]
    RequiresDvr,
    #[error("exponent bound {0} too small")]
    BoundTooSmall(i64),
    #[error("{0} blocks exceed the enumeration limit of {1}")]
    TooManyBlocks(usize, usize),
    #[error("no extremal order radically covers the input")]
    NoCover,
    #[error("singular matrix")]
    Singular,
    #[error("{0}")]
    Witness(String),
}

/// First violated standard-form condition, with 0-based block indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum Violation {
    /// `I_ij I_jk ⊄ I_ik`.
    Multiplicativity { i: usize, j: usize, k: usize },
    /// `I_ii ≠ Ω`.
    Diagonal { i: usize },
    /// `I_ij I_ji = Ω` for `i ≠ j`.
    Properness { i: usize, j: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Multiplicativity { i, j, k } => {
                write!(f, "(i) I[{i}][{j}]*I[{j}][{k}] not contained in I[{i}][{k}]")
            }
            Violation::Diagonal { i } => write!(f, "(ii) I[{i}][{i}] is not the unit ideal"),
            Violation::Properness { i, j } => {
                write!(f, "(iii) I[{i}][{j}]*I[{j}][{i}] is the unit ideal")
            }
        }
    }
}

/// Block sizes `(n_1, ..., n_t)`; nonempty with positive entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct BlockSizes(Vec<usize>);

impl BlockSizes {
    pub fn new(sizes: Vec<usize>) -> Result<Self, OrderError> {
        if sizes.is_empty() {
            return Err(OrderError::Shape("at least one block is required".into()));
        }
        if sizes.contains(&0) {
            return Err(OrderError::Shape("block sizes must be positive".into()));
        }
        Ok(BlockSizes(sizes))
    }

    pub fn ones(t: usize) -> Self {
        BlockSizes(vec![1; t.max(1)])
    }

    pub fn count(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Block index of every scalar row.
    pub fn row_blocks(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &n)| std::iter::repeat(i).take(n))
            .collect()
    }

    /// Cut points `0 < c_1 < ... < total` of the segment subdivision.
    pub fn cuts(&self) -> Vec<usize> {
        let mut acc = 0;
        self.0
            .iter()
            .map(|n| {
                acc += n;
                acc
            })
            .collect()
    }

    fn from_cuts(cuts: &[usize]) -> Self {
        let mut prev = 0;
        BlockSizes(
            cuts.iter()
                .map(|&c| {
                    let n = c - prev;
                    prev = c;
                    n
                })
                .collect(),
        )
    }

    /// Common refinement of two subdivisions of the same total size.
    pub fn join(&self, other: &BlockSizes) -> Result<BlockSizes, OrderError> {
        if self.total() != other.total() {
            return Err(OrderError::SizeMismatch(self.total(), other.total()));
        }
        let mut cuts = self.cuts();
        cuts.extend(other.cuts());
        cuts.sort_unstable();
        cuts.dedup();
        Ok(BlockSizes::from_cuts(&cuts))
    }

    /// For a refinement `fine` of `self`, the coarse block of each fine block.
    pub fn coarse_index(&self, fine: &BlockSizes) -> Vec<usize> {
        let rows = self.row_blocks();
        let mut start = 0;
        fine.0
            .iter()
            .map(|n| {
                let b = rows[start];
                start += n;
                b
            })
            .collect()
    }
}

impl TryFrom<Vec<usize>> for BlockSizes {
    type Error = OrderError;

    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        BlockSizes::new(v)
    }
}

impl From<BlockSizes> for Vec<usize> {
    fn from(b: BlockSizes) -> Self {
        b.0
    }
}

/// Square matrix of fractional ideals sharing one backend.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealMatrix {
    rows: Vec<Vec<FracIdeal>>,
}

impl IdealMatrix {
    pub fn new(rows: Vec<Vec<FracIdeal>>) -> Result<Self, OrderError> {
        let t = rows.len();
        if t == 0 {
            return Err(OrderError::Shape("empty ideal matrix".into()));
        }
        if let Some(r) = rows.iter().position(|r| r.len() != t) {
            return Err(OrderError::Shape(format!(
                "row {r} has {} entries, expected {t}",
                rows[r].len()
            )));
        }
        let backend = rows[0][0].backend();
        for e in rows.iter().flatten() {
            if e.backend() != backend {
                return Err(OrderError::MixedBackends(backend, e.backend()));
            }
        }
        Ok(IdealMatrix { rows })
    }

    /// Matrix with entry `(i, j)` given by `f(i, j)`.
    pub fn from_fn(t: usize, mut f: impl FnMut(usize, usize) -> FracIdeal) -> Self {
        IdealMatrix {
            rows: (0..t).map(|i| (0..t).map(|j| f(i, j)).collect()).collect(),
        }
    }

    /// Parse a matrix of ideal strings.
    pub fn parse(rows: &[Vec<String>]) -> Result<Self, OrderError> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse()).collect::<Result<Vec<FracIdeal>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        IdealMatrix::new(parsed)
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn backend(&self) -> Backend {
        self.rows[0][0].backend()
    }

    pub fn get(&self, i: usize, j: usize) -> &FracIdeal {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<FracIdeal>] {
        &self.rows
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect()
    }

    /// Entrywise containment `self ⊇ other`.
    pub fn contains(&self, other: &IdealMatrix) -> Result<bool, OrderError> {
        self.check_same_size(other)?;
        for (a, b) in self.rows.iter().flatten().zip(other.rows.iter().flatten()) {
            if !a.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn intersect(&self, other: &IdealMatrix) -> Result<IdealMatrix, OrderError> {
        self.check_same_size(other)?;
        let t = self.size();
        let mut rows = Vec::with_capacity(t);
        for i in 0..t {
            let row = (0..t)
                .map(|j| self.rows[i][j].intersect(&other.rows[i][j]))
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        Ok(IdealMatrix { rows })
    }

    /// Product in the sense of block matrices: `(AB)_ik = Σ_j A_ij B_jk`.
    pub fn product(&self, other: &IdealMatrix) -> Result<IdealMatrix, OrderError> {
        self.check_same_size(other)?;
        let t = self.size();
        let mut rows = Vec::with_capacity(t);
        for i in 0..t {
            let mut row = Vec::with_capacity(t);
            for k in 0..t {
                let mut acc = self.rows[i][0].product(&other.rows[0][k])?;
                for j in 1..t {
                    acc = acc.sum(&self.rows[i][j].product(&other.rows[j][k])?)?;
                }
                row.push(acc);
            }
            rows.push(row);
        }
        Ok(IdealMatrix { rows })
    }

    /// Subdivide along a refinement, given the coarse block of each fine block.
    pub fn subdivide(&self, coarse: &[usize]) -> IdealMatrix {
        IdealMatrix::from_fn(coarse.len(), |a, b| self.rows[coarse[a]][coarse[b]].clone())
    }

    fn check_same_size(&self, other: &IdealMatrix) -> Result<(), OrderError> {
        if self.size() != other.size() {
            return Err(OrderError::Shape(format!(
                "{}x{} vs {}x{} ideal matrices",
                self.size(),
                self.size(),
                other.size(),
                other.size()
            )));
        }
        if self.backend() != other.backend() {
            return Err(OrderError::MixedBackends(self.backend(), other.backend()));
        }
        Ok(())
    }
}

impl fmt::Display for IdealMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|e| format!("[{e}]")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// A graduated order `Λ(n, I)` in standard form together with the inverse
/// different `𝔇(Ω/R)` of the coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraduatedOrder {
    blocks: BlockSizes,
    ideals: IdealMatrix,
    d_omega: FracIdeal,
}

/// Checks conditions (i), (ii), (iii) of the standard form in that order.
pub fn first_violation(ideals: &IdealMatrix) -> Result<Option<Violation>, OrderError> {
    let t = ideals.size();
    for i in 0..t {
        for j in 0..t {
            for k in 0..t {
                let prod = ideals.get(i, j).product(ideals.get(j, k))?;
                if !ideals.get(i, k).contains(&prod)? {
                    return Ok(Some(Violation::Multiplicativity { i, j, k }));
                }
            }
        }
    }
    for i in 0..t {
        if !ideals.get(i, i).is_unit() {
            return Ok(Some(Violation::Diagonal { i }));
        }
    }
    for i in 0..t {
        for j in 0..t {
            if i != j && !ideals.get(i, j).product(ideals.get(j, i))?.is_proper() {
                return Ok(Some(Violation::Properness { i, j }));
            }
        }
    }
    Ok(None)
}

impl GraduatedOrder {
    /// Validates the standard-form conditions and builds the order.
    pub fn new(
        blocks: BlockSizes,
        ideals: IdealMatrix,
        d_omega: FracIdeal,
    ) -> Result<Self, OrderError> {
        if blocks.count() != ideals.size() {
            return Err(OrderError::Shape(format!(
                "{} blocks but a {}x{} ideal matrix",
                blocks.count(),
                ideals.size(),
                ideals.size()
            )));
        }
        if d_omega.backend() != ideals.backend() {
            return Err(OrderError::MixedBackends(ideals.backend(), d_omega.backend()));
        }
        if let Some(v) = first_violation(&ideals)? {
            return Err(OrderError::Violation(v));
        }
        Ok(GraduatedOrder {
            blocks,
            ideals,
            d_omega,
        })
    }

    /// The maximal order `M_n(Ω)` as a single block.
    pub fn maximal(n: usize, backend: Backend, d_omega: FracIdeal) -> Result<Self, OrderError> {
        GraduatedOrder::new(
            BlockSizes::new(vec![n])?,
            IdealMatrix::new(vec![vec![FracIdeal::unit(backend)]])?,
            d_omega,
        )
    }

    /// The staircase: `m_Ω` strictly above the diagonal, `Ω` on and below.
    pub fn staircase(blocks: BlockSizes, backend: Backend, d_omega: FracIdeal) -> Result<Self, OrderError> {
        let t = blocks.count();
        let ideals = IdealMatrix::from_fn(t, |i, j| {
            if i < j {
                FracIdeal::maximal(backend)
            } else {
                FracIdeal::unit(backend)
            }
        });
        GraduatedOrder::new(blocks, ideals, d_omega)
    }

    pub fn blocks(&self) -> &BlockSizes {
        &self.blocks
    }

    pub fn ideals(&self) -> &IdealMatrix {
        &self.ideals
    }

    pub fn d_omega(&self) -> &FracIdeal {
        &self.d_omega
    }

    pub fn backend(&self) -> Backend {
        self.ideals.backend()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.count()
    }

    pub fn total_size(&self) -> usize {
        self.blocks.total()
    }

    pub fn entry(&self, i: usize, j: usize) -> &FracIdeal {
        self.ideals.get(i, j)
    }

    /// The same order described on a finer frame (not in standard form when
    /// a diagonal block is split).
    pub fn refined_ideals(&self, fine: &BlockSizes) -> IdealMatrix {
        self.ideals.subdivide(&self.blocks.coarse_index(fine))
    }

    /// Membership of a full `n × n` matrix whose entries are monomials
    /// (`None` for zero).
    pub fn contains_matrix(&self, x: &[Vec<Option<Monomial>>]) -> Result<bool, OrderError> {
        let n = self.total_size();
        if x.len() != n || x.iter().any(|r| r.len() != n) {
            return Err(OrderError::Shape(format!("expected a {n}x{n} matrix")));
        }
        let rb = self.blocks.row_blocks();
        for (r, row) in x.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                if let Some(m) = e {
                    if !self.ideals.get(rb[r], rb[c]).contains_monomial(*m) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Merges blocks `i ≠ j` with `I_ij = I_ji = Ω` so that condition (iii)
    /// holds again. Classes are ordered by their first block, so adjacent
    /// merges keep the frame order.
    pub fn normalize_blocks(
        blocks: BlockSizes,
        ideals: IdealMatrix,
        d_omega: FracIdeal,
    ) -> Result<Self, OrderError> {
        let t = ideals.size();
        let mut class: Vec<usize> = (0..t).collect();
        for i in 0..t {
            for j in (i + 1)..t {
                if ideals.get(i, j).is_unit() && ideals.get(j, i).is_unit() {
                    let (a, b) = (class[i], class[j]);
                    let (lo, hi) = (a.min(b), a.max(b));
                    for c in class.iter_mut() {
                        if *c == hi {
                            *c = lo;
                        }
                    }
                }
            }
        }
        let mut reps: Vec<usize> = class.clone();
        reps.sort_unstable();
        reps.dedup();
        let sizes = reps
            .iter()
            .map(|&r| {
                (0..t)
                    .filter(|&i| class[i] == r)
                    .map(|i| blocks.as_slice()[i])
                    .sum()
            })
            .collect();
        let merged = IdealMatrix::from_fn(reps.len(), |a, b| ideals.get(reps[a], reps[b]).clone());
        for i in 0..t {
            for j in 0..t {
                let a = reps.iter().position(|&r| r == class[i]).unwrap_or(0);
                let b = reps.iter().position(|&r| r == class[j]).unwrap_or(0);
                if merged.get(a, b) != ideals.get(i, j) {
                    return Err(OrderError::Witness(format!(
                        "blocks {i} and {j} cannot be merged consistently"
                    )));
                }
            }
        }
        GraduatedOrder::new(BlockSizes::new(sizes)?, merged, d_omega)
    }
}

impl fmt::Display for GraduatedOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "blocks: {:?}", self.blocks.as_slice())?;
        writeln!(f, "d_omega: {}", self.d_omega)?;
        write!(f, "{}", self.ideals)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn dvr(rows: &[&[i64]]) -> IdealMatrix {
        IdealMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&k| FracIdeal::dvr(k)).collect())
                .collect(),
        )
        .unwrap()
    }

    pub fn dvr_order(rows: &[&[i64]]) -> GraduatedOrder {
        let m = dvr(rows);
        GraduatedOrder::new(BlockSizes::ones(m.size()), m, FracIdeal::dvr(0)).unwrap()
    }

    #[test]
    fn staircase_is_valid() {
        let o = dvr_order(&[&[0, 1], &[0, 0]]);
        assert_eq!(o.block_count(), 2);
    }

    #[test]
    fn all_unit_violates_properness() {
        let err = GraduatedOrder::new(BlockSizes::ones(2), dvr(&[&[0, 0], &[0, 0]]), FracIdeal::dvr(0))
            .unwrap_err();
        assert_eq!(err, OrderError::Violation(Violation::Properness { i: 0, j: 1 }));
    }

    #[test]
    fn negative_entry_violates_multiplicativity() {
        let err = GraduatedOrder::new(BlockSizes::ones(2), dvr(&[&[0, 1], &[-2, 0]]), FracIdeal::dvr(0))
            .unwrap_err();
        assert!(matches!(
            err,
            OrderError::Violation(Violation::Multiplicativity { .. })
        ));
    }

    #[test]
    fn diagonal_must_be_unit() {
        let v = first_violation(&dvr(&[&[1]])).unwrap();
        assert_eq!(v, Some(Violation::Diagonal { i: 0 }));
    }

    #[test]
    fn shape_errors() {
        assert!(BlockSizes::new(vec![]).is_err());
        assert!(BlockSizes::new(vec![1, 0]).is_err());
        let err = GraduatedOrder::new(BlockSizes::ones(3), dvr(&[&[0, 1], &[0, 0]]), FracIdeal::dvr(0));
        assert!(matches!(err, Err(OrderError::Shape(_))));
        let mixed = IdealMatrix::new(vec![vec![
            FracIdeal::dvr(0),
            FracIdeal::maximal(Backend::Monomial2D),
        ], vec![FracIdeal::dvr(0), FracIdeal::dvr(0)]]);
        assert!(matches!(mixed, Err(OrderError::MixedBackends(..))));
    }

    #[test]
    fn join_of_subdivisions() {
        let a = BlockSizes::new(vec![2, 3]).unwrap();
        let b = BlockSizes::new(vec![1, 4]).unwrap();
        let j = a.join(&b).unwrap();
        assert_eq!(j.as_slice(), &[1, 1, 3]);
        assert_eq!(a.coarse_index(&j), vec![0, 0, 1]);
        assert_eq!(b.coarse_index(&j), vec![0, 1, 1]);
        assert!(a.join(&BlockSizes::ones(4)).is_err());
    }

    #[test]
    fn matrix_membership() {
        let o = dvr_order(&[&[0, 1], &[0, 0]]);
        let ok = vec![vec![Some(Monomial::new(0, 0)), Some(Monomial::new(1, 0))], vec![None, None]];
        let bad = vec![vec![None, Some(Monomial::new(0, 0))], vec![None, None]];
        assert!(o.contains_matrix(&ok).unwrap());
        assert!(!o.contains_matrix(&bad).unwrap());
    }

    #[test]
    fn normalize_merges_unit_pairs() {
        // blocks 0 and 1 share a block in disguise
        let m = dvr(&[&[0, 0, 1], &[0, 0, 1], &[0, 0, 0]]);
        let o = GraduatedOrder::normalize_blocks(BlockSizes::new(vec![1, 2, 1]).unwrap(), m, FracIdeal::dvr(0))
            .unwrap();
        assert_eq!(o.blocks().as_slice(), &[3, 1]);
        assert_eq!(o.ideals(), &dvr(&[&[0, 1], &[0, 0]]));
    }
}
