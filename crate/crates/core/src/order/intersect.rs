//! Intersections and radical covering on a common refinement.

use super::{GraduatedOrder, IdealMatrix, OrderError};

fn check_compatible(a: &GraduatedOrder, b: &GraduatedOrder) -> Result<(), OrderError> {
    if a.total_size() != b.total_size() {
        return Err(OrderError::SizeMismatch(a.total_size(), b.total_size()));
    }
    if a.backend() != b.backend() {
        return Err(OrderError::MixedBackends(a.backend(), b.backend()));
    }
    Ok(())
}

/// Refines both orders to the join of their block subdivisions and
/// intersects entrywise. Blocks that end up with unit ideals in both
/// directions are merged again.
pub fn intersect_orders(a: &GraduatedOrder, b: &GraduatedOrder) -> Result<GraduatedOrder, OrderError> {
    check_compatible(a, b)?;
    let fine = a.blocks().join(b.blocks())?;
    let meet = a.refined_ideals(&fine).intersect(&b.refined_ideals(&fine))?;
    let d_omega = a.d_omega().intersect(b.d_omega())?;
    GraduatedOrder::normalize_blocks(fine, meet, d_omega)
}

/// `g ⊇ l` and `Jac(g) ⊇ Jac(l)`, compared on the common refinement.
pub fn radically_covers(g: &GraduatedOrder, l: &GraduatedOrder) -> Result<bool, OrderError> {
    check_compatible(g, l)?;
    let fine = g.blocks().join(l.blocks())?;
    let gi = g.blocks().coarse_index(&fine);
    let li = l.blocks().coarse_index(&fine);
    if !g.ideals().subdivide(&gi).contains(&l.ideals().subdivide(&li))? {
        return Ok(false);
    }
    let gj: IdealMatrix = g.jacobson_radical().subdivide(&gi);
    let lj: IdealMatrix = l.jacobson_radical().subdivide(&li);
    gj.contains(&lj)
}
