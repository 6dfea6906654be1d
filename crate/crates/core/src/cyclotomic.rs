//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! An element is a rational vector of length `φ(N)` holding the coefficients
//! of its reduction modulo the `N`-th cyclotomic polynomial `Φ_N` in the
//! power basis `1, ζ, ..., ζ^{φ(N)-1}`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("level must be positive")]
    ZeroLevel,
    #[error("levels {0} and {1} differ")]
    LevelMismatch(u32, u32),
    #[error("level {0} does not divide {1}")]
    NotDividing(u32, u32),
    #[error("{0} is not a unit modulo {1}")]
    NotAUnit(i64, u32),
    #[error("cannot parse cyclotomic literal {0:?}: {1}")]
    Parse(String, String),
}

pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            while n % q == 0 {
                n /= q;
            }
            result -= result / q;
        }
        q += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Units of `Z/N`, in increasing order.
pub fn units_mod(n: u32) -> Vec<u32> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|a| a.gcd(&n) == 1).collect()
}

type IntPoly = Vec<BigInt>;

fn poly_div_exact(num: &IntPoly, den: &IntPoly) -> IntPoly {
    // den is monic
    let mut rem = num.clone();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Integer coefficients of `Φ_N`, lowest degree first (cached).
pub fn cyclotomic_poly(n: u32) -> Arc<IntPoly> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<IntPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cache lock").get(&n) {
        return p.clone();
    }
    let mut num: IntPoly = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d < n {
            num = poly_div_exact(&num, &cyclotomic_poly(d));
        }
    }
    let arc = Arc::new(num);
    cache.lock().expect("cache lock").insert(n, arc.clone());
    arc
}

/// An element of `Q(ζ_N)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cyclo {
    level: u32,
    coeffs: Vec<BigRational>,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Cyclo {
    pub fn zero(level: u32) -> Self {
        Cyclo {
            level,
            coeffs: vec![BigRational::zero(); euler_phi(level) as usize],
        }
    }

    pub fn from_rational(level: u32, r: BigRational) -> Self {
        let mut z = Cyclo::zero(level);
        z.coeffs[0] = r;
        z
    }

    pub fn from_int(level: u32, n: i64) -> Self {
        Cyclo::from_rational(level, q(n))
    }

    pub fn one(level: u32) -> Self {
        Cyclo::from_int(level, 1)
    }

    /// `ζ_N^k`.
    pub fn zeta_pow(level: u32, k: i64) -> Self {
        let e = k.rem_euclid(level as i64) as usize;
        let mut v = vec![BigRational::zero(); level as usize];
        v[e] = BigRational::one();
        Cyclo::reduce(level, v)
    }

    /// Element with the given power-basis coefficients (any length).
    pub fn from_coeffs(level: u32, coeffs: Vec<BigRational>) -> Result<Self, CycloError> {
        if level == 0 {
            return Err(CycloError::ZeroLevel);
        }
        let mut wide = vec![BigRational::zero(); level as usize];
        for (i, c) in coeffs.into_iter().enumerate() {
            wide[i % level as usize] += c;
        }
        Ok(Cyclo::reduce(level, wide))
    }

    /// Reduce a vector of coefficients of `1, ζ, ..., ζ^{N-1}` modulo `Φ_N`.
    fn reduce(level: u32, mut v: Vec<BigRational>) -> Self {
        let phi = cyclotomic_poly(level);
        let deg = phi.len() - 1;
        for k in (deg..v.len()).rev() {
            if v[k].is_zero() {
                continue;
            }
            let c = v[k].clone();
            for (i, pc) in phi.iter().enumerate() {
                if !pc.is_zero() {
                    v[k - deg + i] -= &c * BigRational::from_integer(pc.clone());
                }
            }
        }
        v.truncate(deg);
        Cyclo { level, coeffs: v }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    fn check(&self, other: &Cyclo) -> Result<(), CycloError> {
        if self.level == other.level {
            Ok(())
        } else {
            Err(CycloError::LevelMismatch(self.level, other.level))
        }
    }

    pub fn add(&self, other: &Cyclo) -> Result<Cyclo, CycloError> {
        self.check(other)?;
        Ok(Cyclo {
            level: self.level,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Cyclo) -> Result<Cyclo, CycloError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cyclo {
        Cyclo {
            level: self.level,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, r: &BigRational) -> Cyclo {
        Cyclo {
            level: self.level,
            coeffs: self.coeffs.iter().map(|a| a * r).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclo) -> Result<Cyclo, CycloError> {
        self.check(other)?;
        let n = self.level as usize;
        let mut wide = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    wide[(i + j) % n] += a * b;
                }
            }
        }
        Ok(Cyclo::reduce(self.level, wide))
    }

    /// `σ_a : ζ ↦ ζ^a` for `a` a unit modulo the level.
    pub fn galois(&self, a: i64) -> Result<Cyclo, CycloError> {
        let n = self.level as i64;
        let a = a.rem_euclid(n.max(1));
        if n > 1 && a.gcd(&n) != 1 {
            return Err(CycloError::NotAUnit(a, self.level));
        }
        let mut wide = vec![BigRational::zero(); self.level as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                wide[((i as i64 * a).rem_euclid(n.max(1))) as usize] += c;
            }
        }
        Ok(Cyclo::reduce(self.level, wide))
    }

    /// Complex conjugate `σ_{-1}`.
    pub fn conj(&self) -> Cyclo {
        self.galois(-1).expect("-1 is a unit")
    }

    /// The same number viewed in `Q(ζ_M)` for a multiple `M` of the level.
    pub fn to_level(&self, m: u32) -> Result<Cyclo, CycloError> {
        if m == 0 || m % self.level != 0 {
            return Err(CycloError::NotDividing(self.level, m));
        }
        let step = (m / self.level) as usize;
        let mut wide = vec![BigRational::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            wide[(i * step) % m as usize] += c;
        }
        Ok(Cyclo::reduce(m, wide))
    }

    /// Trace from `Q(ζ_N)` to `Q`.
    pub fn trace(&self) -> BigRational {
        let mut acc = Cyclo::zero(self.level);
        for a in units_mod(self.level) {
            acc = acc
                .add(&self.galois(a as i64).expect("unit"))
                .expect("same level");
        }
        acc.as_rational().expect("traces are rational")
    }

    /// Norm from `Q(ζ_N)` to `Q`.
    pub fn norm(&self) -> BigRational {
        let mut acc = Cyclo::one(self.level);
        for a in units_mod(self.level) {
            acc = acc
                .mul(&self.galois(a as i64).expect("unit"))
                .expect("same level");
        }
        acc.as_rational().expect("norms are rational")
    }

    /// Every coefficient is an integer.
    pub fn is_integral_vector(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.level)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Cyclo {
    type Err = CycloError;

    /// Parses `level:c0,c1,...` with rational coefficients `a` or `a/b`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |why: &str| CycloError::Parse(s.to_string(), why.to_string());
        let (lvl, rest) = s.split_once(':').ok_or_else(|| err("expected `level:coeffs`"))?;
        let level: u32 = lvl.trim().parse().map_err(|_| err("bad level"))?;
        if level == 0 {
            return Err(CycloError::ZeroLevel);
        }
        let mut coeffs = Vec::new();
        for c in rest.split(',') {
            let c = c.trim();
            if c.is_empty() {
                continue;
            }
            let r = match c.split_once('/') {
                Some((a, b)) => {
                    let a: BigInt = a.trim().parse().map_err(|_| err("bad numerator"))?;
                    let b: BigInt = b.trim().parse().map_err(|_| err("bad denominator"))?;
                    if b.is_zero() {
                        return Err(err("zero denominator"));
                    }
                    BigRational::new(a, b)
                }
                None => BigRational::from_integer(c.parse().map_err(|_| err("bad coefficient"))?),
            };
            coeffs.push(r);
        }
        Cyclo::from_coeffs(level, coeffs)
    }
}

/// `p`-adic valuation of a nonzero rational.
pub fn vp_rational(p: u64, r: &BigRational) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    Some(vp_int(p, r.numer()) - vp_int(p, r.denom()))
}

pub fn vp_int(p: u64, n: &BigInt) -> i64 {
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    while !n.is_zero() && (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}

pub fn vp_u64(p: u64, mut n: u64) -> u32 {
    let mut v = 0;
    while n > 0 && n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn element(level: u32) -> impl Strategy<Value = Cyclo> {
        prop::collection::vec(-5i64..=5, level as usize)
            .prop_map(move |v| Cyclo::from_coeffs(level, v.into_iter().map(q).collect()).unwrap())
    }

    proptest! {
        #[test]
        fn ring_laws(a in element(12), b in element(12), c in element(12)) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
            let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn galois_is_a_ring_map(a in element(9), b in element(9), k in prop::sample::select(vec![1i64, 2, 4, 5, 7, 8])) {
            let lhs = a.mul(&b).unwrap().galois(k).unwrap();
            let rhs = a.galois(k).unwrap().mul(&b.galois(k).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn norm_is_multiplicative(a in element(5), b in element(5)) {
            prop_assert_eq!(a.mul(&b).unwrap().norm(), a.norm() * b.norm());
        }
    }
}
