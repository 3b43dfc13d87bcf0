//! Single-particle entanglement of fermionic Fock states.
//!
//! The one-body density matrix `ρ_{μν} = ⟨a†_μ a_ν⟩ / N` is built exactly:
//! diagonal entries are rationals and off-diagonal entries are finite sums of
//! square roots of rationals, so "no off-diagonal elements" is an exact
//! statement. The entropy is evaluated in `f64` only at the final logarithm.
//!
//! Measures are reported in nats; `S_f = S(ρ) − ln N` vanishes on single
//! Slater determinants.

use std::collections::BTreeMap;
use std::f64::consts::LN_2;

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::lll::{Amplitude, FockConfig, FockVector};
use crate::scalar::SurdSum;
use crate::states::{Family, FamilySpec};
use crate::expand::binomial;

/// Measures below this are reported as exactly zero.
pub const MEASURE_FLOOR: f64 = 1e-12;
const EIGEN_TOLERANCE: f64 = 1e-12;
const EIGEN_MAX_ITERATIONS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EntangleError {
    #[error("operation requires exactly two fermions, state has {0}")]
    NotTwoFermion(usize),
    #[error("dual-state measure is defined on four modes, state has {0}")]
    DimensionNotFour(usize),
    #[error("m must be a positive odd integer, got {0}")]
    InvalidM(u32),
    #[error("squared amplitude {0} outside [0, 1]")]
    OutOfRange(BigRational),
}

/// Trace-one one-body density matrix. Only nonzero off-diagonal entries with
/// `μ < ν` are stored; the matrix is real symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct OneBodyDensityMatrix {
    dim: usize,
    diagonal: Vec<BigRational>,
    off_diagonal: BTreeMap<(usize, usize), SurdSum>,
}

impl OneBodyDensityMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn diagonal(&self) -> &[BigRational] {
        &self.diagonal
    }

    pub fn entry(&self, mu: usize, nu: usize) -> SurdSum {
        if mu == nu {
            return SurdSum::rational(self.diagonal[mu].clone());
        }
        let key = (mu.min(nu), mu.max(nu));
        self.off_diagonal.get(&key).cloned().unwrap_or_default()
    }

    /// Nonzero off-diagonal entries, upper triangle.
    pub fn off_diagonal(&self) -> impl Iterator<Item = (&(usize, usize), &SurdSum)> + '_ {
        self.off_diagonal.iter()
    }

    /// True iff every off-diagonal entry is exactly zero.
    pub fn is_diagonal(&self) -> bool {
        self.off_diagonal.is_empty()
    }

    pub fn trace(&self) -> BigRational {
        self.diagonal.iter().sum()
    }

    pub fn to_matrix(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.dim, self.dim);
        for (i, d) in self.diagonal.iter().enumerate() {
            m[(i, i)] = to_f64(d);
        }
        for (&(i, j), v) in &self.off_diagonal {
            let x = v.to_f64();
            m[(i, j)] = x;
            m[(j, i)] = x;
        }
        m
    }

    /// Eigenvalues, exact rationals converted to `f64` when the matrix is
    /// diagonal, otherwise from a symmetric eigensolver. Tiny negative roundoff
    /// is clamped to zero.
    pub fn eigenvalues(&self) -> Vec<f64> {
        if self.is_diagonal() {
            return self.diagonal.iter().map(to_f64).collect();
        }
        let eig = SymmetricEigen::try_new(self.to_matrix(), EIGEN_TOLERANCE, EIGEN_MAX_ITERATIONS)
            .expect("symmetric eigensolver converges on a real symmetric matrix");
        eig.eigenvalues.iter().map(|&x| x.max(0.0)).collect()
    }
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Product of two real amplitudes as an exact surd.
fn amplitude_product(a: &Amplitude, b: &Amplitude) -> SurdSum {
    SurdSum::signed_sqrt(a.sign * b.sign, &(&a.magnitude_sq * &b.magnitude_sq))
}

/// `ρ_{μν} = ⟨a†_μ a_ν⟩ / N` with fermionic operator signs.
pub fn one_body_density(v: &FockVector) -> OneBodyDensityMatrix {
    let dim = v.dim();
    let inv_n = BigRational::new(BigInt::one(), BigInt::from(v.n()));
    let mut diagonal = vec![BigRational::zero(); dim];
    let mut off: BTreeMap<(usize, usize), SurdSum> = BTreeMap::new();

    for (config, amp) in v.terms() {
        for &nu in config.orbitals() {
            diagonal[nu] += &amp.magnitude_sq * &inv_n;
            let (s_out, rest) = config.annihilate(nu).expect("occupied");
            for mu in (nu + 1)..dim {
                let Some((s_in, target)) = rest.create(mu) else { continue };
                let Some(other) = v.amplitude(&target) else { continue };
                // ⟨target| a†_μ a_ν |config⟩ contributes to ρ_{μν}; store as (ν, μ).
                let mut term = amplitude_product(other, amp);
                if s_in * s_out < 0 {
                    term = term.scale(&-BigRational::one());
                }
                off.entry((nu, mu)).or_default().add(&term.scale(&inv_n));
            }
        }
    }
    off.retain(|_, s| !s.is_zero());
    OneBodyDensityMatrix { dim, diagonal, off_diagonal: off }
}

/// Shannon/von Neumann entropy `−Σ p ln p` in nats with `0 ln 0 = 0`.
pub fn shannon_entropy(probabilities: impl IntoIterator<Item = f64>) -> f64 {
    probabilities.into_iter().filter(|&p| p > 0.0).map(|p| -p * p.ln()).sum()
}

pub fn von_neumann(rho: &OneBodyDensityMatrix) -> f64 {
    shannon_entropy(rho.eigenvalues())
}

fn floor_measure(x: f64) -> f64 {
    if x < MEASURE_FLOOR {
        0.0
    } else {
        x
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntanglementReport {
    pub family: Option<Family>,
    #[serde(rename = "N")]
    pub n: usize,
    pub m: Option<u32>,
    pub t: Option<u32>,
    pub s_nats: f64,
    pub measure_nats: f64,
    pub measure_bits: f64,
}

impl EntanglementReport {
    pub fn with_family(mut self, spec: &FamilySpec) -> Self {
        self.family = Some(spec.family);
        self.m = Some(spec.m);
        self.t = Some(spec.t());
        self
    }
}

/// `S_f = S(ρ) − ln N`, clamped to zero below [`MEASURE_FLOOR`].
pub fn modified_measure(v: &FockVector) -> EntanglementReport {
    let s_nats = von_neumann(&one_body_density(v));
    let measure_nats = floor_measure(s_nats - (v.n() as f64).ln());
    EntanglementReport {
        family: None,
        n: v.n(),
        m: None,
        t: None,
        s_nats,
        measure_nats,
        measure_bits: measure_nats / LN_2,
    }
}

/// Closed form of `S_f` for the two-electron Laughlin state:
/// `(m−1) ln 2 − 2^{−(m−1)} Σ_{k=0}^{(m−1)/2} C(m,k) ln C(m,k)`.
pub fn closed_form_sf_laughlin2(m: u32) -> Result<f64, EntangleError> {
    if m == 0 || m % 2 == 0 {
        return Err(EntangleError::InvalidM(m));
    }
    let weighted: f64 = (0..=(m - 1) / 2)
        .map(|k| {
            let c = binomial(m, k).to_f64().expect("finite");
            c * c.ln()
        })
        .sum();
    Ok(f64::from(m - 1) * LN_2 - weighted / 2f64.powi(m as i32 - 1))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SlaterPair {
    pub a: usize,
    pub b: usize,
    /// `|z_k|`.
    pub weight: f64,
}

/// Two-fermion standard form `Σ_k z_k f†_{a_k} f†_{b_k} |0⟩`.
///
/// When `rotated` is `None` the mode indices are the original orbitals.
/// Otherwise they index the columns of `rotated`, an orthonormal basis of new
/// single-particle modes expressed in the original orbitals.
#[derive(Debug, Clone, PartialEq)]
pub struct SlaterPairing {
    pub pairs: Vec<SlaterPair>,
    pub residual: usize,
    pub rotated: Option<DMatrix<f64>>,
}

impl SlaterPairing {
    /// `S_f` computed from the pair weights, `−Σ |z_k|² ln |z_k|²`.
    pub fn measure_nats(&self) -> f64 {
        floor_measure(shannon_entropy(self.pairs.iter().map(|p| p.weight * p.weight)))
    }
}

/// Antisymmetric coefficient matrix `w_{ab} = −w_{ba}` = amplitude of `{a, b}`.
fn coefficient_matrix(v: &FockVector) -> DMatrix<f64> {
    let mut w = DMatrix::zeros(v.dim(), v.dim());
    for (c, amp) in v.terms() {
        let (a, b) = (c.orbitals()[0], c.orbitals()[1]);
        w[(a, b)] = amp.to_f64();
        w[(b, a)] = -amp.to_f64();
    }
    w
}

pub fn slater_pairing(v: &FockVector) -> Result<SlaterPairing, EntangleError> {
    if v.n() != 2 {
        return Err(EntangleError::NotTwoFermion(v.n()));
    }
    let mut seen = vec![false; v.dim()];
    let disjoint = v.terms().all(|(c, _)| {
        c.orbitals().iter().all(|&mode| !std::mem::replace(&mut seen[mode], true))
    });
    if disjoint {
        let pairs: Vec<SlaterPair> = v
            .terms()
            .map(|(c, amp)| SlaterPair {
                a: c.orbitals()[0],
                b: c.orbitals()[1],
                weight: to_f64(&amp.magnitude_sq).sqrt(),
            })
            .collect();
        let residual = v.dim() - 2 * pairs.len();
        return Ok(SlaterPairing { pairs, residual, rotated: None });
    }
    Ok(spectral_pairing(&coefficient_matrix(v)))
}

/// Pairs modes through the eigenvectors of `w wᵀ`: for an eigenvector `u`
/// with eigenvalue `s²`, `wᵀ u / s` is its partner.
fn spectral_pairing(w: &DMatrix<f64>) -> SlaterPairing {
    let dim = w.nrows();
    let wwt = w * w.transpose();
    let eig = SymmetricEigen::try_new(wwt, EIGEN_TOLERANCE, EIGEN_MAX_ITERATIONS)
        .expect("symmetric eigensolver converges");
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].total_cmp(&eig.eigenvalues[i]));

    let mut basis: Vec<nalgebra::DVector<f64>> = Vec::new();
    let mut pairs = Vec::new();
    let orthogonalize = |mut x: nalgebra::DVector<f64>, basis: &[nalgebra::DVector<f64>]| {
        for b in basis {
            let d = b.dot(&x);
            x -= b * d;
        }
        x
    };
    for &i in &order {
        let s2 = eig.eigenvalues[i];
        if s2 <= 1e-14 {
            break;
        }
        let u = orthogonalize(eig.eigenvectors.column(i).into_owned(), &basis);
        if u.norm() < 1e-8 {
            continue;
        }
        let u = u.normalize();
        let s = s2.sqrt();
        let partner = orthogonalize(w.transpose() * &u / s, &basis).normalize();
        let (a, b) = (basis.len(), basis.len() + 1);
        basis.push(u);
        basis.push(partner);
        pairs.push(SlaterPair { a, b, weight: s });
    }
    // Complete the basis so the rotation is square.
    for k in 0..dim {
        if basis.len() == dim {
            break;
        }
        let mut e = nalgebra::DVector::zeros(dim);
        e[k] = 1.0;
        let x = orthogonalize(e, &basis);
        if x.norm() > 1e-8 {
            basis.push(x.normalize());
        }
    }
    let residual = dim - 2 * pairs.len();
    SlaterPairing { pairs, residual, rotated: Some(DMatrix::from_columns(&basis)) }
}

/// Dual-state overlap `η = |⟨Ψ̄|Ψ⟩|` of a four-mode two-fermion state, equal to
/// `2 |c01 c23 − c02 c13 + c03 c12|` in terms of normalized configuration
/// amplitudes (eight times the Pfaffian of `w = c/2`).
#[derive(Debug, Clone, PartialEq)]
pub struct SchliemannEta {
    /// `2 Pf(c)` before taking the modulus, exact.
    pub signed: SurdSum,
}

impl SchliemannEta {
    pub fn value(&self) -> f64 {
        self.signed.to_f64().abs()
    }

    pub fn is_zero(&self) -> bool {
        self.signed.is_zero()
    }

    /// The exact modulus if it is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.signed.as_rational().map(|r| r.abs())
    }
}

pub fn schliemann_eta(v: &FockVector) -> Result<SchliemannEta, EntangleError> {
    if v.n() != 2 {
        return Err(EntangleError::NotTwoFermion(v.n()));
    }
    if v.dim() != 4 {
        return Err(EntangleError::DimensionNotFour(v.dim()));
    }
    let amp = |a: usize, b: usize| v.amplitude(&FockConfig::new(vec![a, b]).expect("a < b"));
    let two = BigRational::from_integer(BigInt::from(2));
    let mut pf = SurdSum::zero();
    for (sign, (p, q)) in [(1, ((0, 1), (2, 3))), (-1, ((0, 2), (1, 3))), (1, ((0, 3), (1, 2)))] {
        if let (Some(x), Some(y)) = (amp(p.0, p.1), amp(q.0, q.1)) {
            pf.add(&amplitude_product(x, y).scale(&BigRational::from_integer(BigInt::from(sign))));
        }
    }
    Ok(SchliemannEta { signed: pf.scale(&two) })
}

/// `α a†b† + β c†d†` on four modes.
pub fn two_qubit_state(alpha_sq: &BigRational) -> Result<FockVector, EntangleError> {
    if alpha_sq.is_negative() || *alpha_sq > BigRational::one() {
        return Err(EntangleError::OutOfRange(alpha_sq.clone()));
    }
    let beta_sq = BigRational::one() - alpha_sq;
    let terms = [(vec![0, 1], alpha_sq.clone()), (vec![2, 3], beta_sq)]
        .into_iter()
        .map(|(c, w)| (FockConfig::new(c).expect("sorted"), Amplitude { sign: 1, magnitude_sq: w }));
    Ok(FockVector::new(2, 4, terms).expect("normalized by construction"))
}

/// `S_f` of the second-quantized two-qubit state; equals the Schmidt entropy
/// `−α² ln α² − β² ln β²`.
pub fn two_qubit_consistency(alpha_sq: &BigRational) -> Result<f64, EntangleError> {
    Ok(modified_measure(&two_qubit_state(alpha_sq)?).measure_nats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use crate::states::{hierarchical_phi, laughlin};

    fn fock(n: usize, dim: usize, terms: &[(&[usize], i8, (i64, i64))]) -> FockVector {
        FockVector::from_weights(
            n,
            dim,
            terms.iter().map(|(c, s, (p, q))| (FockConfig::new(c.to_vec()).unwrap(), *s, ratio(*p, *q))),
        )
        .unwrap()
    }

    #[test]
    fn density_of_laughlin_two_three() {
        let rho = one_body_density(&laughlin(2, 3).unwrap());
        assert!(rho.is_diagonal());
        assert_eq!(rho.diagonal(), &[ratio(1, 8), ratio(3, 8), ratio(3, 8), ratio(1, 8)]);
        assert_eq!(rho.trace(), BigRational::one());
    }

    #[test]
    fn density_of_single_determinant() {
        let rho = one_body_density(&laughlin(2, 1).unwrap());
        assert_eq!(rho.diagonal(), &[ratio(1, 2), ratio(1, 2)]);
    }

    #[test]
    fn off_diagonal_entries_with_fermionic_signs() {
        // (a0† + a1†) a2† / √2: ρ_{01} = 1/4.
        let v = fock(2, 3, &[(&[0, 2], 1, (1, 2)), (&[1, 2], 1, (1, 2))]);
        let rho = one_body_density(&v);
        assert_eq!(rho.entry(0, 1).as_rational(), Some(ratio(1, 4)));
        assert_eq!(rho.entry(1, 0).as_rational(), Some(ratio(1, 4)));
        // a0†(a1† + a2†)/√2 → a1† and a2† both sit after mode 0, no extra sign.
        let v = fock(2, 3, &[(&[0, 1], 1, (1, 2)), (&[0, 2], 1, (1, 2))]);
        assert_eq!(one_body_density(&v).entry(1, 2).as_rational(), Some(ratio(1, 4)));
        // (a0† + a2†) a1† = a0†a1† − a1†a2†: the sign flip must cancel the minus.
        let v = fock(2, 3, &[(&[0, 1], 1, (1, 2)), (&[1, 2], -1, (1, 2))]);
        let rho = one_body_density(&v);
        assert_eq!(rho.entry(0, 2).as_rational(), Some(ratio(1, 4)));
        assert!(modified_measure(&v).measure_nats == 0.0);
    }

    #[test]
    fn entropy_values() {
        let ln2 = LN_2;
        let rho = one_body_density(&laughlin(2, 1).unwrap());
        assert!((von_neumann(&rho) - ln2).abs() < 1e-15);
        assert_eq!(shannon_entropy([1.0]), 0.0);
        let rho = one_body_density(&laughlin(2, 3).unwrap());
        let expected = 3.0 * ln2 - 0.75 * 3f64.ln();
        assert!((von_neumann(&rho) - expected).abs() < 1e-14);
        assert!((von_neumann(&rho) - 1.255482).abs() < 1e-6);
    }

    #[test]
    fn modified_measure_examples() {
        assert_eq!(modified_measure(&laughlin(2, 1).unwrap()).measure_nats, 0.0);
        let r = modified_measure(&laughlin(2, 3).unwrap());
        let expected = 2.0 * LN_2 - 0.75 * 3f64.ln();
        assert!((r.measure_nats - expected).abs() < 1e-14);
        assert!((r.measure_bits - 0.81128).abs() < 1e-5);
        let phi = modified_measure(&hierarchical_phi(2, 1).unwrap());
        assert!((phi.measure_nats - r.measure_nats).abs() < 1e-12);
        let r5 = modified_measure(&laughlin(2, 5).unwrap());
        let expected5 = 4.0 * LN_2 - (5.0 * 5f64.ln() + 10.0 * 10f64.ln()) / 16.0;
        assert!((r5.measure_nats - expected5).abs() < 1e-14);
        assert!((r5.measure_nats - 0.830524).abs() < 1e-6);
    }

    #[test]
    fn closed_form() {
        assert_eq!(closed_form_sf_laughlin2(1).unwrap(), 0.0);
        let m3 = closed_form_sf_laughlin2(3).unwrap();
        assert!((m3 - (2.0 * LN_2 - 0.75 * 3f64.ln())).abs() < 1e-15);
        assert!((closed_form_sf_laughlin2(5).unwrap() - 0.830524).abs() < 1e-6);
        assert_eq!(closed_form_sf_laughlin2(4), Err(EntangleError::InvalidM(4)));
    }

    #[test]
    fn pairing_read_off_configs() {
        let p = slater_pairing(&laughlin(2, 3).unwrap()).unwrap();
        assert!(p.rotated.is_none());
        assert_eq!((p.pairs[0].a, p.pairs[0].b), (0, 3));
        assert!((p.pairs[0].weight - 0.5).abs() < 1e-15);
        assert_eq!((p.pairs[1].a, p.pairs[1].b), (1, 2));
        assert!((p.pairs[1].weight - 3f64.sqrt() / 2.0).abs() < 1e-15);

        let p = slater_pairing(&laughlin(2, 1).unwrap()).unwrap();
        assert_eq!(p.pairs, vec![SlaterPair { a: 0, b: 1, weight: 1.0 }]);
        assert_eq!(p.residual, 0);

        let p = slater_pairing(&hierarchical_phi(2, 1).unwrap()).unwrap();
        assert!((p.pairs[0].weight - 3f64.sqrt() / 2.0).abs() < 1e-15);
        assert!((p.pairs[1].weight - 0.5).abs() < 1e-15);
    }

    #[test]
    fn spectral_pairing_of_overlapping_configs() {
        // (a0† + a1†)(a2† + a3†)/2 is a single determinant in rotated modes.
        let v = fock(2, 4, &[(&[0, 2], 1, (1, 4)), (&[0, 3], 1, (1, 4)), (&[1, 2], 1, (1, 4)), (&[1, 3], 1, (1, 4))]);
        let p = slater_pairing(&v).unwrap();
        assert!(p.rotated.is_some());
        assert_eq!(p.pairs.len(), 1);
        assert!((p.pairs[0].weight - 1.0).abs() < 1e-12);
        assert_eq!(p.measure_nats(), 0.0);
        assert_eq!(p.residual, 2);
    }

    #[test]
    fn pairing_requires_two_fermions() {
        assert_eq!(
            slater_pairing(&laughlin(3, 1).unwrap()),
            Err(EntangleError::NotTwoFermion(3))
        );
    }

    #[test]
    fn eta_examples() {
        let det = fock(2, 4, &[(&[0, 1], 1, (1, 1))]);
        assert!(schliemann_eta(&det).unwrap().is_zero());
        let bell = fock(2, 4, &[(&[0, 1], 1, (1, 2)), (&[2, 3], 1, (1, 2))]);
        assert_eq!(schliemann_eta(&bell).unwrap().as_rational(), Some(ratio(1, 1)));
        let skew = fock(2, 4, &[(&[0, 1], 1, (1, 4)), (&[2, 3], 1, (3, 4))]);
        assert!((schliemann_eta(&skew).unwrap().value() - 3f64.sqrt() / 2.0).abs() < 1e-15);
        assert_eq!(
            schliemann_eta(&laughlin(2, 5).unwrap()),
            Err(EntangleError::DimensionNotFour(6))
        );
    }

    #[test]
    fn two_qubit_examples() {
        assert_eq!(two_qubit_consistency(&ratio(1, 1)).unwrap(), 0.0);
        assert!((two_qubit_consistency(&ratio(1, 2)).unwrap() - LN_2).abs() < 1e-15);
        let q = two_qubit_consistency(&ratio(1, 4)).unwrap();
        assert!((q - (2.0 * LN_2 - 0.75 * 3f64.ln())).abs() < 1e-15);
        assert!(two_qubit_consistency(&ratio(5, 4)).is_err());
    }
}
