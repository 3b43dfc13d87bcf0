//! Exact multivariate polynomials in the electron coordinates `z_1..z_N`.
//!
//! Only holomorphic parts are represented; the Gaussian factor common to every
//! lowest-Landau-level wavefunction is implicit. Coefficients are big integers
//! so that every downstream probability is an exact rational.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpandError {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },
    #[error("polynomial is not antisymmetric under z_{} <-> z_{}", .i + 1, .j + 1)]
    NotAntisymmetric { i: usize, j: usize },
    #[error("elementary symmetric degree {k} out of range for {n} variables")]
    DegreeOutOfRange { n: usize, k: usize },
}

/// Exponents of `z_1^{a_1} ... z_N^{a_N}`, one entry per electron.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentTuple(Vec<u32>);

impl ExponentTuple {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentTuple(exponents)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentTuple(vec![0; n])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    fn swapped(&self, i: usize, j: usize) -> Self {
        let mut e = self.0.clone();
        e.swap(i, j);
        ExponentTuple(e)
    }

    fn add(&self, other: &Self) -> Self {
        ExponentTuple(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl From<Vec<u32>> for ExponentTuple {
    fn from(v: Vec<u32>) -> Self {
        ExponentTuple(v)
    }
}

impl fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// Sparse polynomial with integer coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<ExponentTuple, BigInt>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        Self::monomial(ExponentTuple::zeros(nvars), c)
    }

    /// `z_{i+1}` (zero-based variable index).
    pub fn variable(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(ExponentTuple(e), BigInt::one())
    }

    pub fn monomial(exponents: ExponentTuple, c: BigInt) -> Self {
        let nvars = exponents.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        MultiPoly { nvars, terms }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing duplicates.
    ///
    /// Panics if an exponent tuple does not have `nvars` entries.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        let mut acc: HashMap<ExponentTuple, BigInt> = HashMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent tuple length must equal nvars");
            *acc.entry(ExponentTuple(e)).or_default() += c;
        }
        Self::from_map(nvars, acc)
    }

    fn from_map(nvars: usize, acc: HashMap<ExponentTuple, BigInt>) -> Self {
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        MultiPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (lexicographically descending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentTuple, &BigInt)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms
            .get(&ExponentTuple(exponents.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    /// Leading term in canonical order.
    pub fn leading(&self) -> Option<(&ExponentTuple, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentTuple::degree).max()
    }

    /// Common total degree of every term, or `None` if the polynomial is zero
    /// or inhomogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(ExponentTuple::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn multiply(&self, other: &MultiPoly) -> Result<MultiPoly, ExpandError> {
        if self.nvars != other.nvars {
            return Err(ExpandError::VariableMismatch { left: self.nvars, right: other.nvars });
        }
        let mut acc: HashMap<ExponentTuple, BigInt> =
            HashMap::with_capacity(self.len().saturating_mul(other.len()).min(1 << 20));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                *acc.entry(ea.add(eb)).or_default() += ca * cb;
            }
        }
        Ok(Self::from_map(self.nvars, acc))
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut result = MultiPoly::one(self.nvars);
        for _ in 0..k {
            result = result.multiply(self).expect("same nvars");
        }
        result
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Exact division of every coefficient by `c`. Panics if `c` does not divide.
    pub fn div_exact(&self, c: &BigInt) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| {
                    let (q, r) = v.div_rem(c);
                    assert!(r.is_zero(), "inexact division");
                    (e.clone(), q)
                })
                .collect(),
        }
    }

    /// Non-negative gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Exchanges `z_i` and `z_j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.swapped(i, j), c.clone())).collect(),
        }
    }

    /// Substitutes `z_k -> z_{perm[k]}`.
    pub fn permute_vars(&self, perm: &[usize]) -> MultiPoly {
        assert_eq!(perm.len(), self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut out = vec![0; self.nvars];
                for (k, &p) in perm.iter().enumerate() {
                    out[p] = e.0[k];
                }
                (ExponentTuple(out), c.clone())
            })
            .collect();
        MultiPoly { nvars: self.nvars, terms }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| self.swap_vars(i, i + 1) == *self)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(e.clone()).or_default();
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        MultiPoly { nvars: self.nvars, terms }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms().enumerate() {
            let mono: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| if a == 1 { format!("z{}", i + 1) } else { format!("z{}^{}", i + 1, a) })
                .collect();
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else if n > 0 { "+" } else { "" };
            let sep = if n > 0 { " " } else { "" };
            let body = match (mono.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => mono.join("*"),
                (false, false) => format!("{}*{}", mag, mono.join("*")),
            };
            if n > 0 {
                write!(f, "{sep}{sign} {body}")?;
            } else {
                write!(f, "{sign}{body}")?;
            }
        }
        Ok(())
    }
}

/// Binomial coefficient `C(n, k)` as a big integer.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `(z_i - z_j)^m` expanded by the binomial theorem.
fn pair_factor(nvars: usize, i: usize, j: usize, m: u32) -> MultiPoly {
    MultiPoly::from_terms(
        nvars,
        (0..=m).map(|k| {
            let mut e = vec![0; nvars];
            e[i] = m - k;
            e[j] = k;
            let c = binomial(m, k);
            (e, if k % 2 == 1 { -c } else { c })
        }),
    )
}

/// Expansion of `prod_{j<k} (z_j - z_k)^m`. For `n <= 1` the product is empty.
pub fn vandermonde_power(n: usize, m: u32) -> MultiPoly {
    let mut acc = MultiPoly::one(n);
    for (i, j) in (0..n).tuple_combinations() {
        acc = acc.multiply(&pair_factor(n, i, j, m)).expect("same nvars");
    }
    acc
}

/// `e_k(z_1, ..., z_n)`.
pub fn elementary_symmetric(n: usize, k: usize) -> Result<MultiPoly, ExpandError> {
    if k > n {
        return Err(ExpandError::DegreeOutOfRange { n, k });
    }
    Ok(MultiPoly::from_terms(
        n,
        (0..n).combinations(k).map(|subset| {
            let mut e = vec![0; n];
            for i in subset {
                e[i] = 1;
            }
            (e, BigInt::one())
        }),
    ))
}

/// Checks that every adjacent transposition negates `p`. Adjacent transpositions
/// generate the symmetric group, so this covers every pair swap.
pub fn is_antisymmetric(p: &MultiPoly) -> bool {
    first_symmetric_swap(p).is_none()
}

fn first_symmetric_swap(p: &MultiPoly) -> Option<(usize, usize)> {
    (0..p.nvars.saturating_sub(1)).find_map(|i| {
        let ok = p
            .terms
            .iter()
            .all(|(e, c)| p.terms.get(&e.swapped(i, i + 1)).is_some_and(|d| *d == -c));
        (!ok).then_some((i, i + 1))
    })
}

/// Antisymmetric polynomial written as `sum_lambda c_lambda det(z_i^{lambda_j})`
/// over strictly decreasing exponent tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlaterExpansion {
    nvars: usize,
    terms: BTreeMap<ExponentTuple, BigInt>,
}

impl SlaterExpansion {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (lexicographically descending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentTuple, &BigInt)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, lambda: &[u32]) -> BigInt {
        self.terms
            .get(&ExponentTuple(lambda.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    /// Largest total degree among the determinants.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentTuple::degree).max()
    }

    /// Expands every determinant back into monomials.
    pub fn to_poly(&self) -> MultiPoly {
        let n = self.nvars;
        let perms: Vec<(Vec<usize>, bool)> =
            (0..n).permutations(n).map(|p| { let odd = is_odd(&p); (p, odd) }).collect();
        let mut acc: HashMap<ExponentTuple, BigInt> = HashMap::new();
        for (lambda, c) in &self.terms {
            for (perm, odd) in &perms {
                let e = ExponentTuple(perm.iter().map(|&s| lambda.0[s]).collect());
                let entry = acc.entry(e).or_default();
                if *odd {
                    *entry -= c;
                } else {
                    *entry += c;
                }
            }
        }
        MultiPoly::from_map(n, acc)
    }
}

/// Parity of a permutation given in one-line notation.
pub(crate) fn is_odd(perm: &[usize]) -> bool {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// Reads the determinant coefficients off an antisymmetric polynomial: `c_lambda`
/// is the coefficient of the monomial whose exponents are strictly decreasing.
pub fn slater_project(p: &MultiPoly) -> Result<SlaterExpansion, ExpandError> {
    if let Some((i, j)) = first_symmetric_swap(p) {
        return Err(ExpandError::NotAntisymmetric { i, j });
    }
    let terms = p
        .terms
        .iter()
        .filter(|(e, _)| e.is_strictly_decreasing())
        .map(|(e, c)| (e.clone(), c.clone()))
        .collect();
    Ok(SlaterExpansion { nvars: p.nvars, terms })
}
