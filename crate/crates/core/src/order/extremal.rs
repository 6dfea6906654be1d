//! Extremal orders, graduated hulls and the hereditary obstruction.

use super::{radically_covers, BlockSizes, GraduatedOrder, IdealMatrix, OrderError};
use crate::ideal::{Backend, FracIdeal};

/// Largest block count accepted by [`graduated_hull`].
pub const MAX_HULL_BLOCKS: usize = 6;

/// True iff some permutation of the blocks turns the ideal matrix into the
/// staircase (`m_Ω` above the diagonal, `Ω` on and below it).
pub fn is_extremal(order: &GraduatedOrder) -> bool {
    let t = order.block_count();
    let unit = FracIdeal::unit(order.backend());
    let max = FracIdeal::maximal(order.backend());
    // in a staircase the number of unit entries in a row is its position
    let mut rank = vec![0usize; t];
    for (i, r) in rank.iter_mut().enumerate() {
        for j in 0..t {
            let e = order.entry(i, j);
            if *e == unit {
                *r += 1;
            } else if *e != max {
                return false;
            }
        }
    }
    let mut sorted = rank.clone();
    sorted.sort_unstable();
    if sorted != (1..=t).collect::<Vec<_>>() {
        return false;
    }
    (0..t).all(|i| {
        (0..t).all(|j| {
            let want_unit = rank[i] >= rank[j];
            (*order.entry(i, j) == unit) == want_unit
        })
    })
}

/// All surjective maps `{0..t} → {0..s}` for some `s`, i.e. ordered set
/// partitions of the blocks.
fn rank_maps(t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; t];
    fn rec(i: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == t {
            let mut used = cur.clone();
            used.sort_unstable();
            used.dedup();
            if used.len() == used.last().map_or(0, |m| m + 1) {
                out.push(cur.clone());
            }
            return;
        }
        for r in 0..t {
            cur[i] = r;
            rec(i + 1, t, cur, out);
        }
    }
    rec(0, t, &mut cur, &mut out);
    out
}

/// Equal ranks occupy contiguous runs of blocks, so fusing them keeps the
/// frame's coordinate order.
fn fuses_contiguously(rank: &[usize]) -> bool {
    (0..rank.len()).all(|i| (i + 2..rank.len()).all(|k| rank[i] != rank[k] || rank[i + 1] == rank[i]))
}

/// Rank maps whose extremal orders are standard forms on the input frame.
fn frame_rank_maps(t: usize) -> impl Iterator<Item = Vec<usize>> {
    rank_maps(t).into_iter().filter(|r| fuses_contiguously(r))
}

/// Extremal order on the input frame in which block `i` sits at level
/// `rank[i]`; blocks of equal rank are fused.
fn extremal_cover(order: &GraduatedOrder, rank: &[usize]) -> Result<GraduatedOrder, OrderError> {
    let t = order.block_count();
    let ideals = IdealMatrix::from_fn(t, |i, j| {
        if rank[i] >= rank[j] {
            FracIdeal::unit(Backend::Dvr)
        } else {
            FracIdeal::maximal(Backend::Dvr)
        }
    });
    GraduatedOrder::normalize_blocks(order.blocks().clone(), ideals, order.d_omega().clone())
}

/// Intersection of every extremal order on the same frame that radically
/// covers `order` (DVR backend, at most [`MAX_HULL_BLOCKS`] blocks).
pub fn graduated_hull(order: &GraduatedOrder) -> Result<GraduatedOrder, OrderError> {
    if order.backend() != Backend::Dvr {
        return Err(OrderError::RequiresDvr);
    }
    let t = order.block_count();
    if t > MAX_HULL_BLOCKS {
        return Err(OrderError::TooManyBlocks(t, MAX_HULL_BLOCKS));
    }
    let mut hull: Option<IdealMatrix> = None;
    for rank in frame_rank_maps(t) {
        let cover = extremal_cover(order, &rank)?;
        if !radically_covers(&cover, order)? {
            continue;
        }
        let fine = cover.refined_ideals(order.blocks());
        hull = Some(match hull {
            None => fine,
            Some(h) => h.intersect(&fine)?,
        });
    }
    let hull = hull.ok_or(OrderError::NoCover)?;
    GraduatedOrder::normalize_blocks(order.blocks().clone(), hull, order.d_omega().clone())
}

/// Every radically covering extremal order of the frame, for inspection.
pub fn extremal_covers(order: &GraduatedOrder) -> Result<Vec<GraduatedOrder>, OrderError> {
    if order.backend() != Backend::Dvr {
        return Err(OrderError::RequiresDvr);
    }
    let mut out = Vec::new();
    for rank in frame_rank_maps(order.block_count()) {
        let cover = extremal_cover(order, &rank)?;
        if radically_covers(&cover, order)? {
            out.push(cover);
        }
    }
    Ok(out)
}

impl GraduatedOrder {
    /// True when the order cannot be hereditary: it is not extremal, or its
    /// radical is not invertible because `m_Ω` is not principal.
    pub fn hereditary_obstruction(&self) -> bool {
        !is_extremal(self) || !FracIdeal::maximal(self.backend()).is_invertible()
    }

    /// Staircase over `t` blocks with the blocks permuted by `perm`
    /// (block `i` of the result plays the role of staircase row `perm[i]`).
    pub fn permuted_staircase(
        perm: &[usize],
        backend: Backend,
        d_omega: FracIdeal,
    ) -> Result<GraduatedOrder, OrderError> {
        let t = perm.len();
        let ideals = IdealMatrix::from_fn(t, |i, j| {
            if perm[i] < perm[j] {
                FracIdeal::maximal(backend)
            } else {
                FracIdeal::unit(backend)
            }
        });
        GraduatedOrder::new(BlockSizes::ones(t), ideals, d_omega)
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{dvr, dvr_order};
    use super::*;

    #[test]
    fn staircase_is_extremal() {
        assert!(is_extremal(&dvr_order(&[&[0, 1], &[0, 0]])));
        assert!(!is_extremal(&dvr_order(&[&[0, 2], &[0, 0]])));
        let max = GraduatedOrder::maximal(1, Backend::Dvr, FracIdeal::dvr(0)).unwrap();
        assert!(is_extremal(&max));
        let p = GraduatedOrder::permuted_staircase(&[2, 0, 1], Backend::Dvr, FracIdeal::dvr(0)).unwrap();
        assert!(is_extremal(&p));
        assert!(!is_extremal(&dvr_order(&[&[0, 1], &[1, 0]])));
    }

    #[test]
    fn rank_map_count_is_fubini() {
        // ordered set partitions: 1, 3, 13, 75
        let counts: Vec<usize> = (1..=4).map(|t| rank_maps(t).len()).collect();
        assert_eq!(counts, vec![1, 3, 13, 75]);
        assert!(fuses_contiguously(&[1, 0, 0, 2]));
        assert!(!fuses_contiguously(&[0, 1, 0]));
    }

    #[test]
    fn hull_examples() {
        let st = dvr_order(&[&[0, 1], &[0, 0]]);
        assert_eq!(graduated_hull(&st).unwrap(), st);
        let deep = dvr_order(&[&[0, 2], &[0, 0]]);
        assert_eq!(graduated_hull(&deep).unwrap(), st);
    }

    #[test]
    fn hull_of_symmetric_order() {
        let o = dvr_order(&[&[0, 1], &[1, 0]]);
        let h = graduated_hull(&o).unwrap();
        assert!(radically_covers(&h, &o).unwrap());
        for c in extremal_covers(&o).unwrap() {
            assert!(c.refined_ideals(h.blocks()).contains(h.ideals()).unwrap());
        }
        assert_eq!(h.ideals(), &dvr(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn hull_limits() {
        let o = GraduatedOrder::staircase(BlockSizes::ones(7), Backend::Dvr, FracIdeal::dvr(0)).unwrap();
        assert_eq!(graduated_hull(&o).unwrap_err(), OrderError::TooManyBlocks(7, 6));
        let m = GraduatedOrder::staircase(BlockSizes::ones(2), Backend::Monomial2D, FracIdeal::unit(Backend::Monomial2D))
            .unwrap();
        assert_eq!(graduated_hull(&m).unwrap_err(), OrderError::RequiresDvr);
    }

    #[test]
    fn hereditary() {
        for t in 1..=4 {
            let d = GraduatedOrder::staircase(BlockSizes::ones(t), Backend::Dvr, FracIdeal::dvr(0)).unwrap();
            assert!(!d.hereditary_obstruction());
            let m = GraduatedOrder::staircase(
                BlockSizes::ones(t),
                Backend::Monomial2D,
                FracIdeal::unit(Backend::Monomial2D),
            )
            .unwrap();
            assert!(m.hereditary_obstruction());
        }
        assert!(dvr_order(&[&[0, 2], &[0, 0]]).hereditary_obstruction());
    }
}
