//! Random standard-form orders for fuzzing and benchmarks.

use rand::Rng;

use super::{BlockSizes, GraduatedOrder, IdealMatrix};
use crate::ideal::{Backend, FracIdeal, Monomial};

/// Parameters for [`random_dvr_order`].
#[derive(Debug, Clone, Copy)]
pub struct DvrParams {
    pub max_blocks: usize,
    pub max_block_size: usize,
    pub max_exponent: i64,
    pub max_d_omega: i64,
    /// Conjugate by a random diagonal matrix, producing negative exponents.
    pub conjugate: bool,
}

impl Default for DvrParams {
    fn default() -> Self {
        DvrParams {
            max_blocks: 4,
            max_block_size: 2,
            max_exponent: 3,
            max_d_omega: 2,
            conjugate: false,
        }
    }
}

fn random_blocks<R: Rng>(rng: &mut R, t: usize, max_size: usize) -> BlockSizes {
    BlockSizes::new((0..t).map(|_| rng.gen_range(1..=max_size.max(1))).collect())
        .expect("sizes are positive")
}

/// Random exponent matrix closed under `e_ik ≤ e_ij + e_jk`.
pub fn random_dvr_exponents<R: Rng>(rng: &mut R, t: usize, max_exponent: i64) -> Vec<Vec<i64>> {
    loop {
        let mut e = vec![vec![0i64; t]; t];
        for (i, row) in e.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                if i != j {
                    *x = rng.gen_range(0..=max_exponent);
                }
            }
        }
        for j in 0..t {
            for i in 0..t {
                for k in 0..t {
                    let via = e[i][j] + e[j][k];
                    if via < e[i][k] {
                        e[i][k] = via;
                    }
                }
            }
        }
        let proper = (0..t).all(|i| (0..t).all(|j| i == j || e[i][j] + e[j][i] > 0));
        if proper {
            return e;
        }
    }
}

pub fn random_dvr_order<R: Rng>(rng: &mut R, params: DvrParams) -> GraduatedOrder {
    let t = rng.gen_range(1..=params.max_blocks.max(1));
    let mut e = random_dvr_exponents(rng, t, params.max_exponent);
    if params.conjugate {
        let shift: Vec<i64> = (0..t).map(|_| rng.gen_range(-2..=2)).collect();
        for (i, row) in e.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x += shift[i] - shift[j];
            }
        }
    }
    let ideals = IdealMatrix::from_fn(t, |i, j| FracIdeal::dvr(e[i][j]));
    let d = FracIdeal::dvr(rng.gen_range(0..=params.max_d_omega));
    GraduatedOrder::new(random_blocks(rng, t, params.max_block_size), ideals, d)
        .expect("closure yields a standard form")
}

fn random_integral_monomial_ideal<R: Rng>(rng: &mut R, max_exponent: i64) -> FracIdeal {
    let count = rng.gen_range(1..=3);
    let gens: Vec<(i64, i64)> = (0..count)
        .map(|_| (rng.gen_range(0..=max_exponent), rng.gen_range(0..=max_exponent)))
        .collect();
    FracIdeal::monomial(&gens).expect("nonempty generator list")
}

/// Random monomial-backend order: integral off-diagonal ideals closed under
/// `I_ik ⊇ I_ij I_jk`, optionally conjugated by a diagonal monomial matrix.
pub fn random_monomial_order<R: Rng>(
    rng: &mut R,
    max_blocks: usize,
    max_exponent: i64,
    conjugate: bool,
) -> GraduatedOrder {
    let t = rng.gen_range(1..=max_blocks.max(1));
    let blocks = random_blocks(rng, t, 2);
    random_monomial_order_on(rng, blocks, max_exponent, conjugate)
}

/// Random monomial-backend order on fixed blocks.
pub fn random_monomial_order_on<R: Rng>(
    rng: &mut R,
    blocks: BlockSizes,
    max_exponent: i64,
    conjugate: bool,
) -> GraduatedOrder {
    let unit = FracIdeal::unit(Backend::Monomial2D);
    let t = blocks.count();
    loop {
        let mut rows: Vec<Vec<FracIdeal>> = (0..t)
            .map(|i| {
                (0..t)
                    .map(|j| {
                        if i == j {
                            unit.clone()
                        } else {
                            random_integral_monomial_ideal(rng, max_exponent)
                        }
                    })
                    .collect()
            })
            .collect();
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..t {
                for j in 0..t {
                    for k in 0..t {
                        let prod = rows[i][j].product(&rows[j][k]).expect("single backend");
                        let grown = rows[i][k].sum(&prod).expect("single backend");
                        if grown != rows[i][k] {
                            rows[i][k] = grown;
                            changed = true;
                        }
                    }
                }
            }
        }
        if conjugate {
            let shift: Vec<Monomial> = (0..t)
                .map(|_| Monomial::new(rng.gen_range(-2..=2), rng.gen_range(-2..=2)))
                .collect();
            for (i, row) in rows.iter_mut().enumerate() {
                for (j, x) in row.iter_mut().enumerate() {
                    *x = x.shift(shift[i].mul(shift[j].inv()));
                }
            }
        }
        let ideals = IdealMatrix::new(rows).expect("square single-backend matrix");
        if let Ok(o) = GraduatedOrder::new(blocks.clone(), ideals, unit.clone()) {
            return o;
        }
    }
}

/// Random DVR order on fixed blocks with `dΩ = m^d_omega`.
pub fn random_dvr_order_on<R: Rng>(rng: &mut R, blocks: BlockSizes, max_exponent: i64, d_omega: i64) -> GraduatedOrder {
    let e = random_dvr_exponents(rng, blocks.count(), max_exponent);
    let ideals = IdealMatrix::from_fn(blocks.count(), |i, j| FracIdeal::dvr(e[i][j]));
    GraduatedOrder::new(blocks, ideals, FracIdeal::dvr(d_omega)).expect("closure yields a standard form")
}

/// Random composition of `n` into positive block sizes.
pub fn random_composition<R: Rng>(rng: &mut R, n: usize) -> BlockSizes {
    let mut sizes = Vec::new();
    let mut left = n.max(1);
    while left > 0 {
        let s = rng.gen_range(1..=left);
        sizes.push(s);
        left -= s;
    }
    BlockSizes::new(sizes).expect("sizes are positive")
}

/// Random full matrix with monomial entries `p^a T^b` (zero with
/// probability 1/4); `t`-exponents are zero in the DVR backend.
pub fn random_monomial_matrix<R: Rng>(
    rng: &mut R,
    n: usize,
    backend: Backend,
    range: i64,
) -> Vec<Vec<Option<Monomial>>> {
    (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    if rng.gen_range(0..4) == 0 {
                        None
                    } else {
                        let t = match backend {
                            Backend::Dvr => 0,
                            Backend::Monomial2D => rng.gen_range(-range..=range),
                        };
                        Some(Monomial::new(rng.gen_range(-range..=range), t))
                    }
                })
                .collect()
        })
        .collect()
}
