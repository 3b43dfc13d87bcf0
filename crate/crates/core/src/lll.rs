//! Lowest-Landau-level orbitals and second-quantized Fock vectors.
//!
//! Orbital `i` is `f_i(z) = A_i z^i e^{-|z|²/4}` with `A_i^{-2} = π 2^{i+1} i!`.
//! A determinant `det(z_k^{λ_j})` therefore maps to the Fock configuration
//! `{λ_j}` with amplitude `Π_j A_{λ_j}^{-1}`. Every norm carries exactly one
//! factor of π, which cancels on normalization and is dropped.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::expand::SlaterExpansion;
use crate::scalar::PiScalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FockError {
    #[error("state has no terms")]
    ZeroState,
    #[error("squared amplitudes sum to {0}, not 1")]
    NotNormalized(BigRational),
    #[error("configuration {config} is not a strictly increasing list of {n} orbitals below {dim}")]
    InvalidConfig { config: FockConfig, n: usize, dim: usize },
    #[error("configuration {0} appears twice")]
    DuplicateConfig(FockConfig),
}

/// `A_i^{-2} = π·2^{i+1}·i!`.
pub fn orbital_norm_sq(i: u32) -> PiScalar {
    PiScalar::new(BigRational::from_integer(norm_sq_without_pi(i)), 1)
}

fn norm_sq_without_pi(i: u32) -> BigInt {
    let fact: BigInt = (1..=i).map(BigInt::from).product();
    (BigInt::one() << (i + 1)) * fact
}

/// Occupied orbitals, strictly increasing. Represents
/// `a†_{μ_1} ... a†_{μ_N} |0⟩` with `μ_1 < ... < μ_N`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FockConfig(Vec<usize>);

impl FockConfig {
    /// Returns `None` unless the orbitals are strictly increasing.
    pub fn new(orbitals: Vec<usize>) -> Option<Self> {
        orbitals.windows(2).all(|w| w[0] < w[1]).then_some(FockConfig(orbitals))
    }

    pub fn orbitals(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, mode: usize) -> bool {
        self.0.binary_search(&mode).is_ok()
    }

    /// Total angular momentum `Σ μ`.
    pub fn angular_momentum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Applies `a_mode`, returning the fermionic sign and the remaining
    /// configuration, or `None` if the mode is empty.
    pub(crate) fn annihilate(&self, mode: usize) -> Option<(i8, FockConfig)> {
        let pos = self.0.binary_search(&mode).ok()?;
        let mut rest = self.0.clone();
        rest.remove(pos);
        Some((if pos % 2 == 0 { 1 } else { -1 }, FockConfig(rest)))
    }

    /// Applies `a†_mode`, returning the fermionic sign and the new
    /// configuration, or `None` if the mode is already occupied.
    pub(crate) fn create(&self, mode: usize) -> Option<(i8, FockConfig)> {
        let pos = self.0.binary_search(&mode).err()?;
        let mut out = self.0.clone();
        out.insert(pos, mode);
        Some((if pos % 2 == 0 { 1 } else { -1 }, FockConfig(out)))
    }
}

impl fmt::Display for FockConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

/// Real amplitude `sign · sqrt(magnitude_sq)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Amplitude {
    pub sign: i8,
    pub magnitude_sq: BigRational,
}

impl Amplitude {
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        f64::from(self.sign) * self.magnitude_sq.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

/// Normalized N-fermion state over `dim` orbitals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockVector {
    n: usize,
    dim: usize,
    terms: BTreeMap<FockConfig, Amplitude>,
}

impl FockVector {
    /// Builds a state from amplitudes that must already be normalized.
    pub fn new(
        n: usize,
        dim: usize,
        terms: impl IntoIterator<Item = (FockConfig, Amplitude)>,
    ) -> Result<Self, FockError> {
        let mut map = BTreeMap::new();
        for (config, amp) in terms {
            if config.len() != n || config.0.last().is_some_and(|&m| m >= dim) {
                return Err(FockError::InvalidConfig { config, n, dim });
            }
            if amp.magnitude_sq.is_zero() {
                continue;
            }
            if map.contains_key(&config) {
                return Err(FockError::DuplicateConfig(config));
            }
            map.insert(config, amp);
        }
        if map.is_empty() {
            return Err(FockError::ZeroState);
        }
        let total: BigRational = map.values().map(|a| a.magnitude_sq.clone()).sum();
        if !total.is_one() {
            return Err(FockError::NotNormalized(total));
        }
        Ok(FockVector { n, dim, terms: map })
    }

    /// Builds a state from signed squared weights, normalizing them exactly.
    pub fn from_weights(
        n: usize,
        dim: usize,
        terms: impl IntoIterator<Item = (FockConfig, i8, BigRational)>,
    ) -> Result<Self, FockError> {
        let terms: Vec<_> = terms.into_iter().filter(|(_, _, w)| !w.is_zero()).collect();
        let total: BigRational = terms.iter().map(|(_, _, w)| w.clone()).sum();
        if total.is_zero() {
            return Err(FockError::ZeroState);
        }
        Self::new(
            n,
            dim,
            terms.into_iter().map(|(c, sign, w)| {
                (c, Amplitude { sign, magnitude_sq: w / &total })
            }),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (ascending configuration) order.
    pub fn terms(&self) -> impl Iterator<Item = (&FockConfig, &Amplitude)> + '_ {
        self.terms.iter()
    }

    pub fn amplitude(&self, config: &FockConfig) -> Option<&Amplitude> {
        self.terms.get(config)
    }

    pub fn is_single_config(&self) -> bool {
        self.terms.len() == 1
    }

    /// Shared `Σ μ` of every configuration, if there is one.
    pub fn angular_momentum(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(FockConfig::angular_momentum);
        let first = it.next()?;
        it.all(|l| l == first).then_some(first)
    }
}

/// Maps a Slater expansion to its normalized Fock vector. The single-particle
/// dimension is `D + 1` with `D` the total degree of the expansion.
pub fn to_fock(s: &SlaterExpansion) -> Result<FockVector, FockError> {
    let n = s.nvars();
    let degree = s.degree().ok_or(FockError::ZeroState)? as usize;
    // Sorting a strictly decreasing tuple reverses it.
    let reversal_sign: i8 = if (n * n.saturating_sub(1) / 2) % 2 == 1 { -1 } else { 1 };
    let weights = s.terms().map(|(lambda, c)| {
        let norm: BigInt = lambda.as_slice().iter().map(|&l| norm_sq_without_pi(l)).product();
        let orbitals: Vec<usize> = lambda.as_slice().iter().rev().map(|&l| l as usize).collect();
        let sign = if c.is_negative() { -reversal_sign } else { reversal_sign };
        let weight = BigRational::from_integer(c * c * norm);
        (FockConfig(orbitals), sign, weight)
    });
    FockVector::from_weights(n, degree + 1, weights)
}

/// Squared-amplitude ratios cleared to the smallest integers, in canonical
/// configuration order.
pub fn amplitude_pattern(v: &FockVector) -> Vec<(FockConfig, BigInt)> {
    let lcm = v.terms.values().fold(BigInt::one(), |l, a| l.lcm(a.magnitude_sq.denom()));
    let scaled: Vec<(FockConfig, BigInt)> = v
        .terms
        .iter()
        .map(|(c, a)| (c.clone(), (&a.magnitude_sq * BigRational::from_integer(lcm.clone())).to_integer()))
        .collect();
    let g = scaled.iter().fold(BigInt::zero(), |g, (_, x)| g.gcd(x));
    scaled.into_iter().map(|(c, x)| (c, x / &g)).collect()
}
