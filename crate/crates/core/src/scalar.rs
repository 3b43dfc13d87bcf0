//! Exact scalars of the form `q * pi^k` and finite sums of square roots of
//! rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `coef * pi^pi_power` with `coef` an exact rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiScalar {
    pub coef: BigRational,
    pub pi_power: i32,
}

impl PiScalar {
    pub fn new(coef: BigRational, pi_power: i32) -> Self {
        if coef.is_zero() {
            return Self::zero();
        }
        PiScalar { coef, pi_power }
    }

    pub fn zero() -> Self {
        PiScalar { coef: BigRational::zero(), pi_power: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.coef.is_zero()
    }

    pub fn mul(&self, other: &PiScalar) -> PiScalar {
        PiScalar::new(&self.coef * &other.coef, self.pi_power + other.pi_power)
    }

    pub fn to_f64(&self) -> f64 {
        self.coef.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI.powi(self.pi_power)
    }
}

impl fmt::Display for PiScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_power {
            _ if self.coef.is_zero() => write!(f, "0"),
            0 => write!(f, "{}", self.coef),
            1 => write!(f, "{}π", self.coef),
            k => write!(f, "{}π^{}", self.coef, k),
        }
    }
}

pub(crate) fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Square root of a non-negative rational if it is itself rational.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

/// Exact value `sum_i q_i * sqrt(r_i)` with rational `q_i` and positive rational
/// `r_i`. Radicands are kept in classes whose pairwise ratios are not rational
/// squares; such square roots are linearly independent over the rationals, so
/// the sum is zero iff every class coefficient is zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SurdSum {
    terms: Vec<(BigRational, BigRational)>,
}

impl SurdSum {
    pub fn zero() -> Self {
        SurdSum::default()
    }

    pub fn rational(q: BigRational) -> Self {
        let mut s = SurdSum::zero();
        s.add_term(q, BigRational::one());
        s
    }

    /// `sign * sqrt(r)`.
    pub fn signed_sqrt(sign: i8, r: &BigRational) -> Self {
        let mut s = SurdSum::zero();
        s.add_term(BigRational::from_integer(BigInt::from(sign)), r.clone());
        s
    }

    /// Adds `q * sqrt(r)`.
    pub fn add_term(&mut self, q: BigRational, r: BigRational) {
        assert!(!r.is_negative(), "negative radicand");
        if q.is_zero() || r.is_zero() {
            return;
        }
        let (q, r) = match rational_sqrt(&r) {
            Some(root) => (q * root, BigRational::one()),
            None => (q, r),
        };
        for (cq, cr) in self.terms.iter_mut() {
            if let Some(root) = rational_sqrt(&(&r / &*cr)) {
                *cq += q * root;
                self.terms.retain(|(c, _)| !c.is_zero());
                return;
            }
        }
        self.terms.push((q, r));
    }

    pub fn add(&mut self, other: &SurdSum) {
        for (q, r) in &other.terms {
            self.add_term(q.clone(), r.clone());
        }
    }

    pub fn scale(&self, q: &BigRational) -> SurdSum {
        let mut out = SurdSum::zero();
        for (c, r) in &self.terms {
            out.add_term(c * q, r.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value as a rational, if it has no irrational part.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(q, r)] if r.is_one() => Some(q.clone()),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(q, r)| q.to_f64().unwrap_or(f64::NAN) * r.to_f64().unwrap_or(f64::NAN).sqrt())
            .sum()
    }
}

impl fmt::Display for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(q, r)| if r.is_one() { q.to_string() } else { format!("{q}·√({r})") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_squares_fold_into_rationals() {
        let s = SurdSum::signed_sqrt(1, &ratio(9, 4));
        assert_eq!(s.as_rational(), Some(ratio(3, 2)));
        assert_eq!(rational_sqrt(&ratio(2, 1)), None);
    }

    #[test]
    fn commensurate_surds_cancel_exactly() {
        // sqrt(8) - 2 sqrt(2) = 0
        let mut s = SurdSum::signed_sqrt(1, &ratio(8, 1));
        s.add_term(ratio(-2, 1), ratio(2, 1));
        assert!(s.is_zero());
    }

    #[test]
    fn independent_surds_do_not_cancel() {
        let mut s = SurdSum::signed_sqrt(1, &ratio(2, 1));
        s.add_term(ratio(-1, 1), ratio(3, 1));
        assert!(!s.is_zero());
        assert!((s.to_f64() - (2f64.sqrt() - 3f64.sqrt())).abs() < 1e-15);
    }

    #[test]
    fn pi_scalar_display() {
        assert_eq!(PiScalar::new(ratio(-162, 1), 2).to_string(), "-162π^2");
        assert_eq!(PiScalar::new(ratio(3, 1), 1).to_string(), "3π");
        assert!(PiScalar::new(ratio(0, 1), 3).is_zero());
    }
}
