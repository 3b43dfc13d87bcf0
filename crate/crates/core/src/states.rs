//! Constructors for the three wavefunction families.
//!
//! * `laughlin`: `Π_{j<k} (z_j − z_k)^m`
//! * `hierarchical_phi`: Laughlin factor times the `p = 2` two-quasihole
//!   condensate, from `K = (m 1; 1 −2)`
//! * `chi`: `ν = 1` determinant times the `p = m − 1` condensate, from
//!   `K = (1 1; 1 −(m−1))`
//!
//! Condensate prefactors are discarded; every measure downstream is invariant
//! under global scaling.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::expand::{slater_project, vandermonde_power, MultiPoly};
use crate::lll::{to_fock, FockVector};
use crate::quasihole::{condense, CondensateKernel};

/// Largest electron count accepted unless a caller raises it.
pub const DEFAULT_MAX_ELECTRONS: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StateError {
    #[error("m must be a positive odd integer, got {0}")]
    InvalidM(u32),
    #[error("at least two electrons are required, got {0}")]
    TooFewElectrons(usize),
    #[error("{n} electrons exceeds the configured limit of {limit}")]
    TooManyElectrons { n: usize, limit: usize },
    #[error("zero wavefunction: m > 2N+1 (N={n}, m={m})")]
    ZeroWavefunction { n: usize, m: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Laughlin,
    HierarchicalPhi,
    Chi,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Laughlin, Family::HierarchicalPhi, Family::Chi];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Laughlin => "laughlin",
            Family::HierarchicalPhi => "hierarchical_phi",
            Family::Chi => "chi",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "laughlin" => Ok(Family::Laughlin),
            "hierarchical_phi" | "phi" => Ok(Family::HierarchicalPhi),
            "chi" => Ok(Family::Chi),
            other => Err(format!("unknown family '{other}' (expected laughlin, hierarchical_phi or chi)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub m: u32,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize, m: u32) -> Self {
        FamilySpec { family, n, m }
    }

    /// Plot coordinate `t = (m − 1)/2`.
    pub fn t(&self) -> u32 {
        self.m.saturating_sub(1) / 2
    }

    pub fn validate(&self, max_electrons: usize) -> Result<(), StateError> {
        if self.m == 0 || self.m % 2 == 0 {
            return Err(StateError::InvalidM(self.m));
        }
        if self.n < 2 {
            return Err(StateError::TooFewElectrons(self.n));
        }
        if self.n > max_electrons {
            return Err(StateError::TooManyElectrons { n: self.n, limit: max_electrons });
        }
        Ok(())
    }

    /// Holomorphic polynomial part of the wavefunction.
    pub fn polynomial(&self) -> Result<MultiPoly, StateError> {
        self.polynomial_with_limit(DEFAULT_MAX_ELECTRONS)
    }

    pub fn polynomial_with_limit(&self, max_electrons: usize) -> Result<MultiPoly, StateError> {
        self.validate(max_electrons)?;
        let FamilySpec { family, n, m } = *self;
        let poly = match family {
            Family::Laughlin => vandermonde_power(n, m),
            Family::HierarchicalPhi => {
                let condensate = condense(&CondensateKernel::new(n, 2));
                vandermonde_power(n, m).multiply(&condensate.poly).expect("same nvars")
            }
            Family::Chi => {
                let condensate = condense(&CondensateKernel::new(n, m - 1));
                if condensate.is_zero() {
                    return Err(StateError::ZeroWavefunction { n, m });
                }
                vandermonde_power(n, 1).multiply(&condensate.poly).expect("same nvars")
            }
        };
        Ok(poly)
    }

    pub fn build(&self) -> Result<FockVector, StateError> {
        self.build_with_limit(DEFAULT_MAX_ELECTRONS)
    }

    pub fn build_with_limit(&self, max_electrons: usize) -> Result<FockVector, StateError> {
        let poly = self.polynomial_with_limit(max_electrons)?;
        let slater = slater_project(&poly).expect("family polynomials are antisymmetric");
        Ok(to_fock(&slater).expect("family polynomials are nonzero"))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(N={}, m={})", self.family, self.n, self.m)
    }
}

pub fn laughlin(n: usize, m: u32) -> Result<FockVector, StateError> {
    FamilySpec::new(Family::Laughlin, n, m).build()
}

pub fn hierarchical_phi(n: usize, m: u32) -> Result<FockVector, StateError> {
    FamilySpec::new(Family::HierarchicalPhi, n, m).build()
}

pub fn chi(n: usize, m: u32) -> Result<FockVector, StateError> {
    FamilySpec::new(Family::Chi, n, m).build()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("K-matrix is singular")]
pub struct SingularKMatrix;

/// Symmetric 2×2 K-matrix with charge vector `(1, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KMatrix {
    pub entries: [[i64; 2]; 2],
    pub charge: [i64; 2],
}

impl KMatrix {
    /// Panics if the entries are not symmetric.
    pub fn new(entries: [[i64; 2]; 2]) -> Self {
        assert_eq!(entries[0][1], entries[1][0], "K-matrix must be symmetric");
        KMatrix { entries, charge: [1, 0] }
    }

    /// `(m 1; 1 −2)`.
    pub fn hierarchical(m: u32) -> Self {
        Self::new([[i64::from(m), 1], [1, -2]])
    }

    /// `(1 1; 1 −(m−1))`.
    pub fn chi(m: u32) -> Self {
        Self::new([[1, 1], [1, -(i64::from(m) - 1)]])
    }

    pub fn determinant(&self) -> i64 {
        let k = self.entries;
        k[0][0] * k[1][1] - k[0][1] * k[1][0]
    }

    /// `ν = tᵀ K⁻¹ t`.
    pub fn filling_fraction(&self) -> Result<BigRational, SingularKMatrix> {
        let det = self.determinant();
        if det == 0 {
            return Err(SingularKMatrix);
        }
        let k = self.entries;
        let [t0, t1] = self.charge;
        // adj(K) = (k11 −k01; −k10 k00)
        let quad = t0 * t0 * k[1][1] - 2 * t0 * t1 * k[0][1] + t1 * t1 * k[0][0];
        Ok(BigRational::new(BigInt::from(quad), BigInt::from(det)))
    }
}

/// The χ-family filling fraction in the form `1/(1 − 1/(m−1))`, which differs
/// from `tᵀ K⁻¹ t`. Undefined at `m ∈ {1, 2}`.
pub fn quoted_chi_filling(m: u32) -> Option<BigRational> {
    let one = BigRational::from_integer(1.into());
    let inner = BigInt::from(m) - BigInt::one();
    if inner.is_zero() {
        return None;
    }
    let denom = &one - BigRational::new(1.into(), inner);
    (!denom.is_zero()).then(|| one / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn probs(v: &FockVector) -> Vec<(Vec<usize>, BigRational)> {
        v.terms().map(|(c, a)| (c.orbitals().to_vec(), a.magnitude_sq.clone())).collect()
    }

    #[test]
    fn laughlin_examples() {
        assert!(laughlin(2, 1).unwrap().is_single_config());
        assert_eq!(
            probs(&laughlin(2, 3).unwrap()),
            vec![(vec![0, 3], ratio(1, 4)), (vec![1, 2], ratio(3, 4))]
        );
        assert_eq!(laughlin(3, 3).unwrap().len(), 5);
    }

    #[test]
    fn hierarchical_examples() {
        assert_eq!(
            probs(&hierarchical_phi(2, 1).unwrap()),
            vec![(vec![0, 3], ratio(3, 4)), (vec![1, 2], ratio(1, 4))]
        );
        let sq = MultiPoly::from_terms(2, vec![(vec![2, 0], 1.into()), (vec![0, 2], 1.into())]);
        let expected = vandermonde_power(2, 3).multiply(&sq).unwrap();
        let got = FamilySpec::new(Family::HierarchicalPhi, 2, 3).polynomial().unwrap();
        assert_eq!(got, expected);

        let sq3 = MultiPoly::from_terms(
            3,
            vec![(vec![2, 2, 0], 1.into()), (vec![2, 0, 2], 1.into()), (vec![0, 2, 2], 1.into())],
        );
        for m in [1, 3, 5] {
            let got = FamilySpec::new(Family::HierarchicalPhi, 3, m).polynomial().unwrap();
            assert_eq!(got, vandermonde_power(3, m).multiply(&sq3).unwrap());
        }
    }

    #[test]
    fn chi_examples() {
        let v = chi(4, 1).unwrap();
        assert!(v.is_single_config());
        assert_eq!(v.terms().next().unwrap().0.orbitals(), &[2, 3, 4, 5]);
        assert_eq!(chi(2, 7), Err(StateError::ZeroWavefunction { n: 2, m: 7 }));
        assert!(chi(4, 3).unwrap().len() > 1);
    }

    #[test]
    fn parameter_validation() {
        assert_eq!(laughlin(2, 2), Err(StateError::InvalidM(2)));
        assert_eq!(laughlin(2, 0), Err(StateError::InvalidM(0)));
        assert_eq!(laughlin(1, 3), Err(StateError::TooFewElectrons(1)));
        assert_eq!(laughlin(6, 1), Err(StateError::TooManyElectrons { n: 6, limit: 5 }));
        assert!(FamilySpec::new(Family::Laughlin, 6, 1).build_with_limit(6).is_ok());
    }

    #[test]
    fn config_counts_for_two_electrons() {
        for m in (1..=13).step_by(2) {
            assert_eq!(laughlin(2, m).unwrap().len(), (m as usize + 1) / 2);
            assert_eq!(hierarchical_phi(2, m).unwrap().len(), (m as usize + 3) / 2);
        }
    }

    #[test]
    fn filling_fractions() {
        assert_eq!(KMatrix::hierarchical(3).filling_fraction().unwrap(), ratio(2, 7));
        assert_eq!(KMatrix::new([[1, 0], [0, 1]]).filling_fraction().unwrap(), ratio(1, 1));
        assert_eq!(KMatrix::chi(3).filling_fraction().unwrap(), ratio(2, 3));
        assert_eq!(KMatrix::new([[2, 2], [2, 2]]).filling_fraction(), Err(SingularKMatrix));
        for m in (1..=13).step_by(2) {
            let nu = KMatrix::hierarchical(m).filling_fraction().unwrap();
            assert_eq!(nu, ratio(2, 2 * i64::from(m) + 1));
        }
        assert_eq!(quoted_chi_filling(3), Some(ratio(2, 1)));
        assert_eq!(quoted_chi_filling(1), None);
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.as_str().parse::<Family>().unwrap(), f);
        }
        assert!("bogus".parse::<Family>().is_err());
    }
}
