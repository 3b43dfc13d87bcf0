//! Self-check suite behind `fqh verify`. Each check compares a computed value
//! with an expected one; `Report` lines carry values for claims that are
//! printed for inspection but not asserted.

use std::f64::consts::LN_2;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::entangle::{closed_form_sf_laughlin2, modified_measure, one_body_density, slater_pairing};
use crate::expand::{binomial, slater_project, vandermonde_power, MultiPoly};
use crate::lll::FockConfig;
use crate::quasihole::{condense, vanishes, CondensateKernel};
use crate::states::{quoted_chi_filling, Family, FamilySpec, KMatrix, StateError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Fast,
    Full,
}

impl Level {
    fn m_max(self) -> u32 {
        match self {
            Level::Fast => 7,
            Level::Full => 13,
        }
    }

    fn n_max(self) -> usize {
        match self {
            Level::Fast => 3,
            Level::Full => 4,
        }
    }
}

impl std::str::FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fast" => Ok(Level::Fast),
            "full" => Ok(Level::Full),
            other => Err(format!("unknown level '{other}' (expected fast or full)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Report,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Report => "INFO",
        };
        write!(f, "[{tag}] {}: {}", self.name, self.detail)
    }
}

fn check(name: &str, ok: bool, detail: String) -> Check {
    Check { name: name.to_string(), status: if ok { Status::Pass } else { Status::Fail }, detail }
}

fn report(name: &str, detail: String) -> Check {
    Check { name: name.to_string(), status: Status::Report, detail }
}

fn odd(max: u32) -> impl Iterator<Item = u32> {
    (1..=max).step_by(2)
}

fn measure(spec: FamilySpec) -> Result<f64, StateError> {
    Ok(modified_measure(&spec.build()?).measure_nats)
}

pub fn run(level: Level) -> Vec<Check> {
    let m_max = level.m_max();
    let n_max = level.n_max();
    let mut out = Vec::new();

    // Two-electron Laughlin amplitudes C(m,k)/2^(m-1).
    let mut bad = Vec::new();
    for m in odd(m_max) {
        let v = FamilySpec::new(Family::Laughlin, 2, m).build().expect("valid");
        let denom = BigInt::one() << (m - 1);
        for k in 0..=(m - 1) / 2 {
            let c = FockConfig::new(vec![k as usize, (m - k) as usize]).expect("sorted");
            let want = BigRational::new(binomial(m, k), denom.clone());
            if v.amplitude(&c).map(|a| &a.magnitude_sq) != Some(&want) {
                bad.push(format!("m={m},k={k}"));
            }
        }
    }
    out.push(check(
        "two-electron Laughlin amplitudes",
        bad.is_empty(),
        if bad.is_empty() {
            format!("|amp|² = C(m,k)/2^(m-1) exactly for odd m ≤ {m_max}")
        } else {
            format!("mismatch at {}", bad.join(" "))
        },
    ));

    // Three-electron Laughlin, m = 3.
    let s = slater_project(&vandermonde_power(3, 3)).expect("antisymmetric");
    let lambdas: [[u32; 3]; 5] = [[6, 3, 0], [5, 4, 0], [5, 3, 1], [6, 2, 1], [4, 3, 2]];
    let mags: Vec<BigInt> = lambdas.iter().map(|l| s.coefficient(l).abs()).collect();
    let signed: Vec<String> = lambdas
        .iter()
        .map(|l| format!("{{{},{},{}}}:{}", l[2], l[1], l[0], s.coefficient(l)))
        .collect();
    let want: Vec<BigInt> = [1, 3, 6, 3, 15].into_iter().map(BigInt::from).collect();
    out.push(check(
        "three-electron Laughlin m=3 coefficients",
        mags == want && s.len() == 5,
        format!(
            "magnitudes {{{}}} (expected {{1,3,6,3,15}}); signed {}; a uniform-sign listing differs only in signs",
            mags.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
            signed.join(" ")
        ),
    ));

    // Pair condensates.
    let two = condense(&CondensateKernel::new(2, 2));
    let sum_sq = MultiPoly::from_terms(2, vec![(vec![2, 0], 1.into()), (vec![0, 2], 1.into())]);
    out.push(check(
        "condensate N=2, p=2",
        two.poly == sum_sq,
        format!("polynomial {} (expected z1^2 + z2^2); derived scale {}, quoted constant -162π", two.poly, two.scale),
    ));
    let three = condense(&CondensateKernel::new(3, 2));
    let e22 = MultiPoly::from_terms(
        3,
        vec![(vec![2, 2, 0], 1.into()), (vec![2, 0, 2], 1.into()), (vec![0, 2, 2], 1.into())],
    );
    out.push(check(
        "condensate N=3, p=2",
        three.poly == e22,
        format!("polynomial {} (expected z1^2*z2^2 + z1^2*z3^2 + z2^2*z3^2); derived scale {}", three.poly, three.scale),
    ));
    out.push(report(
        "condensate constant",
        format!(
            "term-wise Gaussian moments give {} (≈ {:.4}); the quoted -162π (≈ {:.4}) differs by a factor of π; entanglement is unaffected",
            two.scale,
            two.scale.to_f64(),
            -162.0 * std::f64::consts::PI
        ),
    ));

    // Vanishing boundary.
    let mut mismatches = Vec::new();
    for n in 2..=n_max {
        for m in odd(m_max) {
            let zero = matches!(FamilySpec::new(Family::Chi, n, m).build(), Err(StateError::ZeroWavefunction { .. }));
            let poly_zero = condense(&CondensateKernel::new(n, m - 1)).is_zero();
            if zero != (m as usize > 2 * n + 1) || zero != vanishes(n, m - 1) || zero != poly_zero {
                mismatches.push(format!("N={n},m={m}"));
            }
        }
    }
    out.push(check(
        "chi vanishing criterion m > 2N+1",
        mismatches.is_empty(),
        if mismatches.is_empty() {
            format!("zero exactly when m > 2N+1 for N ≤ {n_max}, odd m ≤ {m_max}")
        } else {
            format!("mismatch at {}", mismatches.join(" "))
        },
    ));

    // Route equivalence for N = 2.
    let mut worst = 0f64;
    let mut count = 0;
    for family in Family::ALL {
        for m in odd(m_max) {
            let Ok(v) = FamilySpec::new(family, 2, m).build() else { continue };
            let rho_route = modified_measure(&v).measure_nats;
            let pair_route = slater_pairing(&v).expect("two fermions").measure_nats();
            worst = worst.max((rho_route - pair_route).abs());
            if family == Family::Laughlin {
                let closed = closed_form_sf_laughlin2(m).expect("odd m");
                worst = worst.max((rho_route - closed).abs());
            }
            count += 1;
        }
    }
    out.push(check(
        "N=2 route equivalence",
        worst <= 1e-10,
        format!("pairing / density matrix / closed form agree on {count} states, max deviation {worst:.1e} (tolerance 1e-10)"),
    ));

    // Equality anchor.
    let psi3 = measure(FamilySpec::new(Family::Laughlin, 2, 3)).expect("valid");
    let phi1 = measure(FamilySpec::new(Family::HierarchicalPhi, 2, 1)).expect("valid");
    let exact = 2.0 * LN_2 - 0.75 * 3f64.ln();
    out.push(check(
        "S_f(psi_3) = S_f(phi_1) at N=2",
        (psi3 - phi1).abs() <= 1e-12 && (psi3 - exact).abs() <= 1e-10,
        format!("{psi3:.12} vs {phi1:.12} nats (2 ln 2 - 3/4 ln 3 = {exact:.12})"),
    ));
    let psi3_3 = measure(FamilySpec::new(Family::Laughlin, 3, 3)).expect("valid");
    let phi1_3 = measure(FamilySpec::new(Family::HierarchicalPhi, 3, 1)).expect("valid");
    out.push(check(
        "S_f(psi'_3) != S_f(phi'_1) at N=3",
        (psi3_3 - phi1_3).abs() > 1e-6,
        format!("{psi3_3:.12} vs {phi1_3:.12} nats"),
    ));

    // Separability and diagonality.
    let sep: Vec<f64> = (2..=n_max)
        .map(|n| measure(FamilySpec::new(Family::Laughlin, n, 1)).expect("valid"))
        .collect();
    out.push(check(
        "nu=1 Laughlin separable",
        sep.iter().all(|&s| s == 0.0),
        format!("S_f(laughlin(N,1)) for N = 2..{n_max}: {sep:?}"),
    ));
    let mut offdiag = Vec::new();
    let mut checked = 0;
    for family in Family::ALL {
        for n in 2..=n_max {
            for m in odd(m_max) {
                if n == 4 && family != Family::Chi && m > 5 {
                    continue;
                }
                let Ok(v) = FamilySpec::new(family, n, m).build() else { continue };
                let rho = one_body_density(&v);
                if !rho.is_diagonal() || !rho.trace().is_one() {
                    offdiag.push(format!("{family}/N={n}/m={m}"));
                }
                checked += 1;
            }
        }
    }
    out.push(check(
        "one-body density exactly diagonal",
        offdiag.is_empty(),
        format!("{checked} family states checked; failures: {}", if offdiag.is_empty() { "none".into() } else { offdiag.join(" ") }),
    ));

    // Curves and orderings that are reported only.
    for n in [2, 3] {
        let rows: Vec<String> = odd(m_max)
            .map(|m| {
                let psi = measure(FamilySpec::new(Family::Laughlin, n, m)).expect("valid");
                let phi = measure(FamilySpec::new(Family::HierarchicalPhi, n, m)).expect("valid");
                let rel = if psi > phi { ">" } else if psi < phi { "<" } else { "=" };
                format!("m={m}: {:.6} {rel} {:.6}", psi / LN_2, phi / LN_2)
            })
            .collect();
        out.push(report(
            &format!("psi_m vs phi_m at N={n} (claimed psi > phi)"),
            format!("bits: {}", rows.join("; ")),
        ));
    }
    let rows: Vec<String> = odd(m_max)
        .map(|m| {
            let a = measure(FamilySpec::new(Family::HierarchicalPhi, 2, m)).expect("valid");
            let b = measure(FamilySpec::new(Family::HierarchicalPhi, 3, m)).expect("valid");
            let rel = if b > a { ">" } else { "<=" };
            format!("m={m}: N=3 {rel} N=2 ({:.6} vs {:.6})", b / LN_2, a / LN_2)
        })
        .collect();
    out.push(report("phi family N-ordering (claimed N=3 > N=2 except m=3)", rows.join("; ")));

    let fillings: Vec<String> = odd(m_max)
        .map(|m| {
            let k = KMatrix::hierarchical(m).filling_fraction().map(|r| r.to_string()).unwrap_or_else(|e| e.to_string());
            format!("m={m}: {k}")
        })
        .collect();
    out.push(report("phi filling fraction t^T K^-1 t, K=(m 1; 1 -2)", fillings.join("; ")));
    let fillings: Vec<String> = odd(m_max)
        .map(|m| {
            let k = KMatrix::chi(m).filling_fraction().map(|r| r.to_string()).unwrap_or_else(|e| e.to_string());
            let q = quoted_chi_filling(m).map(|r| r.to_string()).unwrap_or_else(|| "undefined".into());
            format!("m={m}: {k} (1/(1-1/(m-1)) = {q})")
        })
        .collect();
    out.push(report("chi filling fraction t^T K^-1 t, K=(1 1; 1 -(m-1))", fillings.join("; ")));
    out
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.status != Status::Fail)
}
