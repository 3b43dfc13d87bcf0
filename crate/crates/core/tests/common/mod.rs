//! Independent oracles shared by the integration suites. Nothing here goes
//! through `MultiPoly` arithmetic, `condense` or `to_fock`.

#![allow(dead_code)]

use std::collections::HashMap;

use fqh_core::lll::{FockConfig, FockVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

pub type Terms = HashMap<Vec<u32>, BigInt>;

fn prune(mut t: Terms) -> Terms {
    t.retain(|_, c| !c.is_zero());
    t
}

/// `Π_{j<k} (z_j − z_k)^m` by multiplying one linear factor at a time,
/// walking the pairs in reverse order.
pub fn brute_vandermonde(n: usize, m: u32) -> Terms {
    let mut acc: Terms = HashMap::from([(vec![0; n], BigInt::one())]);
    let mut pairs = Vec::new();
    for j in 0..n {
        for k in j + 1..n {
            pairs.push((j, k));
        }
    }
    for &(j, k) in pairs.iter().rev() {
        for _ in 0..m {
            let mut next: Terms = HashMap::new();
            for (e, c) in &acc {
                let mut ej = e.clone();
                ej[j] += 1;
                *next.entry(ej).or_default() += c;
                let mut ek = e.clone();
                ek[k] += 1;
                *next.entry(ek).or_default() -= c;
            }
            acc = prune(next);
        }
    }
    acc
}

/// Coefficient of `z^target` in `Π_{j<k} (z_j − z_k)^m`, found by enumerating
/// every binomial choice `k_{jk}` for each pair.
pub fn brute_coefficient(target: &[u32], m: u32) -> BigInt {
    let n = target.len();
    let mut pairs = Vec::new();
    for j in 0..n {
        for k in j + 1..n {
            pairs.push((j, k));
        }
    }
    let mut total = BigInt::zero();
    let mut choice = vec![0u32; pairs.len()];
    loop {
        let mut e = vec![0u32; n];
        let mut coef = BigInt::one();
        for (&(j, k), &c) in pairs.iter().zip(&choice) {
            e[j] += m - c;
            e[k] += c;
            coef *= binom(m, c);
            if c % 2 == 1 {
                coef = -coef;
            }
        }
        if e == target {
            total += coef;
        }
        // odometer
        let mut idx = 0;
        loop {
            if idx == choice.len() {
                return total;
            }
            choice[idx] += 1;
            if choice[idx] <= m {
                break;
            }
            choice[idx] = 0;
            idx += 1;
        }
    }
}

pub fn binom(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// The two-quasihole condensate integrated directly: the full integrand is
/// expanded in the variables `(z_1..z_N, ξ₁, ξ₂, ξ₁*, ξ₂*)` and each monomial is
/// integrated against `exp(−|ξ|²/3)`. Returns coefficients of `π²`.
pub fn brute_condensate(n: usize, p: u32) -> HashMap<Vec<u32>, BigRational> {
    let nv = n + 4;
    let (x1, x2, y1, y2) = (n, n + 1, n + 2, n + 3);
    let mut acc: Terms = HashMap::from([(vec![0; nv], BigInt::one())]);
    let mul_linear = |acc: &mut Terms, plus: usize, minus: usize| {
        let mut next: Terms = HashMap::new();
        for (e, c) in acc.iter() {
            let mut a = e.clone();
            a[plus] += 1;
            *next.entry(a).or_default() += c;
            let mut b = e.clone();
            b[minus] += 1;
            *next.entry(b).or_default() -= c;
        }
        *acc = prune(next);
    };
    for i in 0..n {
        mul_linear(&mut acc, x1, i);
        mul_linear(&mut acc, x2, i);
    }
    for _ in 0..p {
        mul_linear(&mut acc, y1, y2);
    }
    let mut out: HashMap<Vec<u32>, BigRational> = HashMap::new();
    for (e, c) in acc {
        if e[x1] != e[y1] || e[x2] != e[y2] {
            continue;
        }
        let (a, b) = (e[x1], e[x2]);
        let moment = factorial(a) * BigInt::from(3).pow(a + 1) * factorial(b) * BigInt::from(3).pow(b + 1);
        *out.entry(e[..n].to_vec()).or_insert_with(BigRational::zero) +=
            BigRational::from_integer(c * moment);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn rand_rational<R: Rng>(rng: &mut R) -> BigRational {
    let num: i64 = rng.gen_range(1..=9);
    let den: i64 = rng.gen_range(1..=5);
    BigRational::new(num.into(), den.into())
}

/// `(α a0† + β a1†)(γ a2† + δ a3†)|0⟩` with random rational coefficients, a
/// single determinant in rotated modes.
pub fn random_product_state<R: Rng>(rng: &mut R) -> FockVector {
    let coeffs: Vec<(i8, BigRational)> = (0..4)
        .map(|_| (if rng.gen_bool(0.5) { 1 } else { -1 }, rand_rational(rng)))
        .collect();
    let mut terms = Vec::new();
    for (a, b) in [(0, 2), (0, 3), (1, 2), (1, 3)] {
        let (sa, ca) = &coeffs[a];
        let (sb, cb) = &coeffs[b];
        let amp = ca * cb;
        terms.push((FockConfig::new(vec![a, b]).unwrap(), sa * sb, &amp * &amp));
    }
    FockVector::from_weights(2, 4, terms).unwrap()
}

/// Random superposition over a random nonempty subset of the six four-mode
/// configurations.
pub fn random_generic_state<R: Rng>(rng: &mut R) -> FockVector {
    let all = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];
    loop {
        let mut terms = Vec::new();
        for c in &all {
            if rng.gen_bool(0.6) {
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                terms.push((FockConfig::new(c.to_vec()).unwrap(), sign, rand_rational(rng)));
            }
        }
        if !terms.is_empty() {
            return FockVector::from_weights(2, 4, terms).unwrap();
        }
    }
}
