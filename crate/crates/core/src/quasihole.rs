//! Two-quasihole condensate integrals.
//!
//! The condensate
//!
//! ```text
//! ∫∫ d²ξ₁ d²ξ₂ Π_i (ξ₁ − z_i)(ξ₂ − z_i) · (ξ₁* − ξ₂*)^p · exp(−α(|ξ₁|² + |ξ₂|²))
//! ```
//!
//! is evaluated exactly by expanding the integrand in ξ-monomials and applying
//! the Gaussian moment identity term by term. The result is a symmetric
//! polynomial in the electron coordinates times a scalar `q·π²`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed};

use crate::expand::{binomial, elementary_symmetric, MultiPoly};
use crate::scalar::{ratio, PiScalar};

/// Gaussian width `1/3` shared by every condensate in the studied families.
pub fn default_alpha() -> BigRational {
    ratio(1, 3)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CondensateKernel {
    pub n: usize,
    /// Power of `(ξ₁* − ξ₂*)`.
    pub p: u32,
    pub alpha: BigRational,
}

impl CondensateKernel {
    pub fn new(n: usize, p: u32) -> Self {
        CondensateKernel { n, p, alpha: default_alpha() }
    }

    /// Panics unless `alpha > 0`.
    pub fn with_alpha(n: usize, p: u32, alpha: BigRational) -> Self {
        assert!(alpha.is_positive(), "Gaussian width must be positive");
        CondensateKernel { n, p, alpha }
    }
}

/// Polynomial with an exact prefactor. `poly` is primitive with a positive
/// leading coefficient; the zero polynomial carries a zero scale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledPoly {
    pub poly: MultiPoly,
    pub scale: PiScalar,
}

impl ScaledPoly {
    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

/// `∫ d²ξ ξ^a (ξ*)^b e^{−α|ξ|²}`, which is `π·a!·α^{−(a+1)}` if `a == b` and zero
/// otherwise.
pub fn gaussian_moment(a: u32, b: u32, alpha: &BigRational) -> PiScalar {
    assert!(alpha.is_positive(), "Gaussian width must be positive");
    if a != b {
        return PiScalar::zero();
    }
    let fact: BigInt = (1..=a).map(BigInt::from).product();
    let inv = alpha.recip();
    PiScalar::new(BigRational::from_integer(fact) * Pow::pow(inv, a + 1), 1)
}

/// Coefficient polynomials of `Π_i (ξ − z_i) = Σ_a ξ^a · c_a(z)`, indexed by `a`.
fn linear_factor_coefficients(n: usize) -> Vec<MultiPoly> {
    (0..=n)
        .map(|a| {
            let e = elementary_symmetric(n, n - a).expect("degree in range");
            if (n - a) % 2 == 1 {
                -&e
            } else {
                e
            }
        })
        .collect()
}

pub fn condense(kernel: &CondensateKernel) -> ScaledPoly {
    let n = kernel.n;
    let p = kernel.p;
    let coeffs = linear_factor_coefficients(n);

    // Σ_j C(p,j) (ξ₁*)^j (−ξ₂*)^{p−j}, paired against every ξ₁^{a1} ξ₂^{a2}.
    let mut parts: Vec<(BigRational, MultiPoly)> = Vec::new();
    for (a1, c1) in coeffs.iter().enumerate() {
        for (a2, c2) in coeffs.iter().enumerate() {
            for j in 0..=p {
                let moment = gaussian_moment(a1 as u32, j, &kernel.alpha)
                    .mul(&gaussian_moment(a2 as u32, p - j, &kernel.alpha));
                if moment.is_zero() {
                    continue;
                }
                let mut weight = moment.coef * BigRational::from_integer(binomial(p, j));
                if (p - j) % 2 == 1 {
                    weight = -weight;
                }
                parts.push((weight, c1.multiply(c2).expect("same nvars")));
            }
        }
    }

    let lcm = parts.iter().fold(BigInt::one(), |l, (w, _)| l.lcm(w.denom()));
    let mut total = MultiPoly::zero(n);
    for (w, poly) in &parts {
        let factor = (w * BigRational::from_integer(lcm.clone())).to_integer();
        total = &total + &poly.scale(&factor);
    }
    primitive_with_scale(total, BigRational::from_integer(lcm).recip(), 2)
}

/// Splits `q·poly·π^k` into a primitive polynomial with positive leading
/// coefficient and the remaining scalar.
fn primitive_with_scale(poly: MultiPoly, q: BigRational, pi_power: i32) -> ScaledPoly {
    if poly.is_zero() {
        return ScaledPoly { poly, scale: PiScalar::zero() };
    }
    let mut content = poly.content();
    if poly.leading().is_some_and(|(_, c)| c.is_negative()) {
        content = -content;
    }
    let prim = poly.div_exact(&content);
    ScaledPoly { poly: prim, scale: PiScalar::new(q * BigRational::from_integer(content), pi_power) }
}

/// Whether the condensate vanishes identically: each ξ carries holomorphic
/// degree at most `n`, so the antiholomorphic power `p` must split into two
/// parts no larger than `n`. For odd `p` the kernel is odd under ξ1 ↔ ξ2
/// while the rest of the integrand is even.
pub fn vanishes(n: usize, p: u32) -> bool {
    p % 2 == 1 || p as usize > 2 * n
}
