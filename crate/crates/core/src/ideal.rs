//! Two-sided fractional ideals of the coefficient maximal order `Ω`.
//!
//! Two backends are supported:
//!
//! * [`Backend::Dvr`]: `Ω` is a (complete) discrete valuation ring, so every
//!   nonzero fractional ideal is `m^k` for a unique integer `k`.
//! * [`Backend::Monomial2D`]: `Ω = O[[T]]` with uniformiser `p`, restricted to
//!   fractional *monomial* ideals. Such an ideal is the upward-closed staircase
//!   spanned by a finite antichain of exponent pairs `(a, b)` standing for
//!   `p^a T^b`; negative exponents encode a monomial shift of an integral ideal.
//!
//! Values are always kept in canonical form (reduced antichain, sorted by the
//! `p`-exponent), so structural equality is ideal equality.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("backend mismatch: {0} vs {1}")]
    BackendMismatch(Backend, Backend),
    #[error("ideal {0} is not invertible")]
    NotInvertible(String),
    #[error("the zero ideal is not representable")]
    Zero,
    #[error("cannot parse ideal {0:?}: {1}")]
    Parse(String, String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    /// One-dimensional case: integer exponents of the maximal ideal.
    Dvr,
    /// Two-dimensional case: monomial staircase ideals of `O[[T]]`.
    #[serde(rename = "monomial2d")]
    Monomial2D,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Dvr => f.write_str("dvr"),
            Backend::Monomial2D => f.write_str("monomial2d"),
        }
    }
}

impl FromStr for Backend {
    type Err = IdealError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "dvr" | "dvrexp" => Ok(Backend::Dvr),
            "monomial2d" | "monomial" => Ok(Backend::Monomial2D),
            other => Err(IdealError::Parse(other.to_string(), "unknown backend".into())),
        }
    }
}

/// A monomial `p^p T^t`. In the DVR backend only the `p` exponent is used and
/// it stands for a power of the uniformiser.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub p: i64,
    pub t: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { p: 0, t: 0 };

    pub fn new(p: i64, t: i64) -> Self {
        Monomial { p, t }
    }

    pub fn mul(self, other: Monomial) -> Monomial {
        Monomial::new(self.p + other.p, self.t + other.t)
    }

    pub fn inv(self) -> Monomial {
        Monomial::new(-self.p, -self.t)
    }

    /// `self | other` in the monoid of monomials, i.e. componentwise `≤`.
    pub fn divides(self, other: Monomial) -> bool {
        self.p <= other.p && self.t <= other.t
    }

    fn lcm(self, other: Monomial) -> Monomial {
        Monomial::new(self.p.max(other.p), self.t.max(other.t))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p^{}*T^{}", self.p, self.t)
    }
}

/// Reduced antichain of monomial generators, sorted by increasing `p`-exponent
/// (hence strictly decreasing `T`-exponent).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Staircase {
    gens: Vec<Monomial>,
}

impl Staircase {
    pub fn new(gens: impl IntoIterator<Item = Monomial>) -> Result<Self, IdealError> {
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        if gens.is_empty() {
            return Err(IdealError::Zero);
        }
        gens.sort();
        let mut reduced: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            // sorted by (p, t): g is redundant iff some earlier kept generator has t <= g.t
            match reduced.last() {
                Some(last) if last.t <= g.t => {}
                _ => reduced.push(g),
            }
        }
        Ok(Staircase { gens: reduced })
    }

    pub fn principal(m: Monomial) -> Self {
        Staircase { gens: vec![m] }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains_monomial(&self, m: Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    fn min_p(&self) -> i64 {
        self.gens[0].p
    }

    fn min_t(&self) -> i64 {
        self.gens[self.gens.len() - 1].t
    }

    fn max_p(&self) -> i64 {
        self.gens[self.gens.len() - 1].p
    }

    fn max_t(&self) -> i64 {
        self.gens[0].t
    }
}

/// A nonzero two-sided fractional ideal of `Ω`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FracIdeal {
    /// `m^k`.
    Dvr(i64),
    /// Fractional monomial ideal.
    Monomial(Staircase),
}

impl FracIdeal {
    /// The unit ideal `Ω`.
    pub fn unit(backend: Backend) -> Self {
        match backend {
            Backend::Dvr => FracIdeal::Dvr(0),
            Backend::Monomial2D => FracIdeal::Monomial(Staircase::principal(Monomial::ONE)),
        }
    }

    /// The unique maximal ideal `m_Ω`: `m^1`, resp. `(p, T)`.
    pub fn maximal(backend: Backend) -> Self {
        match backend {
            Backend::Dvr => FracIdeal::Dvr(1),
            Backend::Monomial2D => FracIdeal::Monomial(Staircase {
                gens: vec![Monomial::new(0, 1), Monomial::new(1, 0)],
            }),
        }
    }

    pub fn dvr(k: i64) -> Self {
        FracIdeal::Dvr(k)
    }

    /// Monomial ideal generated by the listed `(a, b)` pairs (`p^a T^b`).
    pub fn monomial(gens: &[(i64, i64)]) -> Result<Self, IdealError> {
        Staircase::new(gens.iter().map(|&(a, b)| Monomial::new(a, b))).map(FracIdeal::Monomial)
    }

    /// Principal ideal generated by a monomial in the given backend.
    pub fn principal(backend: Backend, m: Monomial) -> Self {
        match backend {
            Backend::Dvr => FracIdeal::Dvr(m.p),
            Backend::Monomial2D => FracIdeal::Monomial(Staircase::principal(m)),
        }
    }

    pub fn backend(&self) -> Backend {
        match self {
            FracIdeal::Dvr(_) => Backend::Dvr,
            FracIdeal::Monomial(_) => Backend::Monomial2D,
        }
    }

    fn check_backend(&self, other: &FracIdeal) -> Result<(), IdealError> {
        if self.backend() == other.backend() {
            Ok(())
        } else {
            Err(IdealError::BackendMismatch(self.backend(), other.backend()))
        }
    }

    pub fn product(&self, other: &FracIdeal) -> Result<FracIdeal, IdealError> {
        self.check_backend(other)?;
        Ok(match (self, other) {
            (FracIdeal::Dvr(a), FracIdeal::Dvr(b)) => FracIdeal::Dvr(a + b),
            (FracIdeal::Monomial(a), FracIdeal::Monomial(b)) => {
                let gens = a
                    .gens
                    .iter()
                    .flat_map(|x| b.gens.iter().map(move |y| x.mul(*y)));
                FracIdeal::Monomial(Staircase::new(gens)?)
            }
            _ => unreachable!(),
        })
    }

    pub fn sum(&self, other: &FracIdeal) -> Result<FracIdeal, IdealError> {
        self.check_backend(other)?;
        Ok(match (self, other) {
            (FracIdeal::Dvr(a), FracIdeal::Dvr(b)) => FracIdeal::Dvr(*a.min(b)),
            (FracIdeal::Monomial(a), FracIdeal::Monomial(b)) => {
                FracIdeal::Monomial(Staircase::new(a.gens.iter().chain(&b.gens).copied())?)
            }
            _ => unreachable!(),
        })
    }

    pub fn intersect(&self, other: &FracIdeal) -> Result<FracIdeal, IdealError> {
        self.check_backend(other)?;
        Ok(match (self, other) {
            (FracIdeal::Dvr(a), FracIdeal::Dvr(b)) => FracIdeal::Dvr(*a.max(b)),
            (FracIdeal::Monomial(a), FracIdeal::Monomial(b)) => {
                let gens = a
                    .gens
                    .iter()
                    .flat_map(|x| b.gens.iter().map(move |y| x.lcm(*y)));
                FracIdeal::Monomial(Staircase::new(gens)?)
            }
            _ => unreachable!(),
        })
    }

    /// `self ⊇ other`.
    pub fn contains(&self, other: &FracIdeal) -> Result<bool, IdealError> {
        self.check_backend(other)?;
        Ok(match (self, other) {
            (FracIdeal::Dvr(a), FracIdeal::Dvr(b)) => a <= b,
            (FracIdeal::Monomial(a), FracIdeal::Monomial(b)) => {
                b.gens.iter().all(|g| a.contains_monomial(*g))
            }
            _ => unreachable!(),
        })
    }

    /// Membership of the monomial element `m`. In the DVR backend the
    /// `t`-exponent must be zero.
    pub fn contains_monomial(&self, m: Monomial) -> bool {
        match self {
            FracIdeal::Dvr(k) => m.t == 0 && m.p >= *k,
            FracIdeal::Monomial(s) => s.contains_monomial(m),
        }
    }

    /// A fractional ideal of a local ring is invertible iff it is principal.
    pub fn is_invertible(&self) -> bool {
        match self {
            FracIdeal::Dvr(_) => true,
            FracIdeal::Monomial(s) => s.gens.len() == 1,
        }
    }

    pub fn inverse(&self) -> Result<FracIdeal, IdealError> {
        match self {
            FracIdeal::Dvr(k) => Ok(FracIdeal::Dvr(-k)),
            FracIdeal::Monomial(s) if s.gens.len() == 1 => {
                Ok(FracIdeal::Monomial(Staircase::principal(s.gens[0].inv())))
            }
            FracIdeal::Monomial(_) => Err(IdealError::NotInvertible(self.to_string())),
        }
    }

    /// Generator of a principal ideal.
    pub fn generator(&self) -> Option<Monomial> {
        match self {
            FracIdeal::Dvr(k) => Some(Monomial::new(*k, 0)),
            FracIdeal::Monomial(s) if s.gens.len() == 1 => Some(s.gens[0]),
            FracIdeal::Monomial(_) => None,
        }
    }

    /// Minimal monomial generators (a single one in the DVR backend).
    pub fn generators(&self) -> Vec<Monomial> {
        match self {
            FracIdeal::Dvr(k) => vec![Monomial::new(*k, 0)],
            FracIdeal::Monomial(s) => s.gens.clone(),
        }
    }

    pub fn is_unit(&self) -> bool {
        *self == FracIdeal::unit(self.backend())
    }

    /// Contained in `Ω`.
    pub fn is_integral(&self) -> bool {
        match self {
            FracIdeal::Dvr(k) => *k >= 0,
            FracIdeal::Monomial(s) => s.gens.iter().all(|g| g.p >= 0 && g.t >= 0),
        }
    }

    /// Integral and different from `Ω`.
    pub fn is_proper(&self) -> bool {
        self.is_integral() && !self.is_unit()
    }

    /// Multiplication by the monomial `m`.
    pub fn shift(&self, m: Monomial) -> FracIdeal {
        match self {
            FracIdeal::Dvr(k) => FracIdeal::Dvr(k + m.p),
            FracIdeal::Monomial(s) => FracIdeal::Monomial(Staircase {
                gens: s.gens.iter().map(|g| g.mul(m)).collect(),
            }),
        }
    }

    /// The monomial `x` with `self = x · other`, if one exists.
    pub fn shift_between(&self, other: &FracIdeal) -> Result<Option<Monomial>, IdealError> {
        self.check_backend(other)?;
        Ok(match (self, other) {
            (FracIdeal::Dvr(a), FracIdeal::Dvr(b)) => Some(Monomial::new(a - b, 0)),
            (FracIdeal::Monomial(a), FracIdeal::Monomial(b)) => {
                if a.gens.len() != b.gens.len() {
                    None
                } else {
                    let x = Monomial::new(a.gens[0].p - b.gens[0].p, a.gens[0].t - b.gens[0].t);
                    a.gens
                        .iter()
                        .zip(&b.gens)
                        .all(|(g, h)| *g == h.mul(x))
                        .then_some(x)
                }
            }
            _ => unreachable!(),
        })
    }

    /// Number of monomials in `self` that are not in `sub`, i.e. the length of
    /// `self / sub` as a module over the residue field when `sub ⊆ self`.
    /// `None` when `sub ⊄ self` or the quotient is infinite.
    pub fn colength(&self, sub: &FracIdeal) -> Result<Option<u64>, IdealError> {
        if !self.contains(sub)? {
            return Ok(None);
        }
        Ok(match (self, sub) {
            (FracIdeal::Dvr(a), FracIdeal::Dvr(b)) => Some((b - a) as u64),
            (FracIdeal::Monomial(big), FracIdeal::Monomial(small)) => {
                if big.min_p() != small.min_p() || big.min_t() != small.min_t() {
                    return Ok(None);
                }
                let mut count = 0u64;
                for a in big.min_p()..small.max_p() {
                    for b in big.min_t()..small.max_t() {
                        let m = Monomial::new(a, b);
                        if big.contains_monomial(m) && !small.contains_monomial(m) {
                            count += 1;
                        }
                    }
                }
                Some(count)
            }
            _ => unreachable!(),
        })
    }

    /// Exponent `k` of `m^k` in the DVR backend.
    pub fn dvr_exponent(&self) -> Option<i64> {
        match self {
            FracIdeal::Dvr(k) => Some(*k),
            FracIdeal::Monomial(_) => None,
        }
    }

    /// Total order used for deterministic output: backend first, then the
    /// generator list.
    pub fn canonical_cmp(&self, other: &FracIdeal) -> Ordering {
        match (self, other) {
            (FracIdeal::Dvr(a), FracIdeal::Dvr(b)) => a.cmp(b),
            (FracIdeal::Monomial(a), FracIdeal::Monomial(b)) => a.gens.cmp(&b.gens),
            (FracIdeal::Dvr(_), _) => Ordering::Less,
            _ => Ordering::Greater,
        }
    }
}

impl fmt::Display for FracIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FracIdeal::Dvr(k) => write!(f, "m^{k}"),
            FracIdeal::Monomial(s) => {
                for (i, g) in s.gens.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
        }
    }
}

fn parse_exponent(s: &str, base: char, whole: &str) -> Result<i64, IdealError> {
    let err = |why: &str| IdealError::Parse(whole.to_string(), why.to_string());
    let s = s.trim();
    let rest = s
        .strip_prefix(base)
        .ok_or_else(|| err(&format!("expected `{base}^k`")))?;
    let rest = rest.trim_start();
    if rest.is_empty() {
        return Ok(1);
    }
    let rest = rest.strip_prefix('^').ok_or_else(|| err("expected `^`"))?;
    rest.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .parse::<i64>()
        .map_err(|e| err(&e.to_string()))
}

impl FromStr for FracIdeal {
    type Err = IdealError;

    /// Accepts `m^k` for the DVR backend and a comma separated list of
    /// `p^a*T^b` for the monomial backend.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.starts_with('m') {
            return parse_exponent(trimmed, 'm', s).map(FracIdeal::Dvr);
        }
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(trimmed);
        let mut gens = Vec::new();
        for term in inner.split(',') {
            let term = term.trim();
            let (pp, tt) = term
                .split_once('*')
                .ok_or_else(|| IdealError::Parse(s.to_string(), "expected `p^a*T^b`".into()))?;
            gens.push(Monomial::new(
                parse_exponent(pp, 'p', s)?,
                parse_exponent(tt, 'T', s)?,
            ));
        }
        Staircase::new(gens).map(FracIdeal::Monomial)
    }
}

impl Serialize for FracIdeal {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FracIdeal {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn antichain() -> impl Strategy<Value = Vec<(i64, i64)>> {
        prop::collection::vec((-4i64..=4, -4i64..=4), 1..=6)
    }

    fn ideal() -> impl Strategy<Value = FracIdeal> {
        antichain().prop_map(|g| FracIdeal::monomial(&g).unwrap())
    }

    fn integral() -> impl Strategy<Value = FracIdeal> {
        prop::collection::vec((0i64..=4, 0i64..=4), 1..=4)
            .prop_map(|g| FracIdeal::monomial(&g).unwrap())
    }

    proptest! {
        #[test]
        fn canonical_form_ignores_generator_order(g in antichain(), h in antichain()) {
            let a = FracIdeal::monomial(&g).unwrap();
            let b = FracIdeal::monomial(&h).unwrap();
            let mut g2 = g.clone();
            g2.reverse();
            let a2 = FracIdeal::monomial(&g2).unwrap();
            prop_assert_eq!(a.product(&b).unwrap(), a2.product(&b).unwrap());
            prop_assert_eq!(a.product(&b).unwrap(), b.product(&a2).unwrap());
        }

        #[test]
        fn absorption(a in ideal(), b in ideal()) {
            prop_assert_eq!(a.sum(&a.intersect(&b).unwrap()).unwrap(), a.clone());
            prop_assert_eq!(a.intersect(&a.sum(&b).unwrap()).unwrap(), a);
        }

        #[test]
        fn distributivity(a in ideal(), b in ideal(), c in ideal()) {
            let lhs = a.intersect(&b.sum(&c).unwrap()).unwrap();
            let rhs = a.intersect(&b).unwrap().sum(&a.intersect(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn products_shrink_by_integral_factors(a in ideal(), p in integral()) {
            prop_assert!(a.contains(&a.product(&p).unwrap()).unwrap());
        }

        #[test]
        fn inverse_is_two_sided(a in -4i64..=4, b in -4i64..=4, k in -20i64..=20) {
            let x = FracIdeal::monomial(&[(a, b)]).unwrap();
            prop_assert!(x.product(&x.inverse().unwrap()).unwrap().is_unit());
            let d = FracIdeal::dvr(k);
            prop_assert!(d.product(&d.inverse().unwrap()).unwrap().is_unit());
        }

        #[test]
        fn text_round_trip(a in ideal(), k in -50i64..=50) {
            let s = a.to_string();
            prop_assert_eq!(s.parse::<FracIdeal>().unwrap().to_string(), s);
            let d = FracIdeal::dvr(k);
            prop_assert_eq!(d.to_string().parse::<FracIdeal>().unwrap(), d);
        }

        #[test]
        fn membership_matches_generators(a in ideal(), x in -6i64..=6, y in -6i64..=6) {
            let m = Monomial::new(x, y);
            let brute = a.generators().iter().any(|g| g.p <= x && g.t <= y);
            prop_assert_eq!(a.contains_monomial(m), brute);
        }
    }
}
