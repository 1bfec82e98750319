//! X states extracted from symmetric multi-qubit states.
//!
//! Every permutation-symmetric N-qubit state has a two-qubit reduction fixed by
//! the collective moments `<Jz>`, `<Jz²>` and `<J+²>`. The families below give
//! those moments in closed form; [`expectation_oracle`] computes them from an
//! explicit Dicke-basis coefficient vector instead.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::xstate::{XState, STATE_TOL};

/// Below this `eta` an odd spin coherent state is replaced by its `eta → 0` limit.
pub const ODD_SCS_LIMIT_ETA: f64 = 1e-8;

/// Collective-spin moments of a symmetric N-qubit state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollectiveExpectations {
    n_qubits: usize,
    jz: f64,
    jz2: f64,
    jplus2: Complex64,
}

impl CollectiveExpectations {
    pub fn new(n_qubits: usize, jz: f64, jz2: f64, jplus2: Complex64) -> Result<Self> {
        if n_qubits < 2 {
            return Err(out_of_range("N", n_qubits as f64, "N >= 2"));
        }
        let half = n_qubits as f64 / 2.0;
        let tol = STATE_TOL * half * half.max(1.0);
        if jz.is_nan() || jz.abs() > half + tol {
            return Err(out_of_range("<Jz>", jz, "|<Jz>| <= N/2"));
        }
        if !(jz2 >= jz * jz - tol && jz2 <= half * half + tol) {
            return Err(out_of_range("<Jz^2>", jz2, "<Jz>^2 <= <Jz^2> <= N^2/4"));
        }
        Ok(Self {
            n_qubits,
            jz,
            jz2,
            jplus2,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn jz(&self) -> f64 {
        self.jz
    }

    pub fn jz2(&self) -> f64 {
        self.jz2
    }

    pub fn jplus2(&self) -> Complex64 {
        self.jplus2
    }

    /// Largest absolute difference between two moment sets.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.jz - other.jz)
            .abs()
            .max((self.jz2 - other.jz2).abs())
            .max((self.jplus2 - other.jplus2).norm())
    }
}

fn out_of_range(name: &'static str, value: f64, range: &str) -> Error {
    Error::OutOfRange {
        name,
        value,
        range: range.to_string(),
    }
}

/// Two-qubit reduced state from collective moments.
pub fn expectations_to_xstate(e: &CollectiveExpectations) -> Result<XState> {
    let n = e.n_qubits as f64;
    let pairs = n * (n - 1.0);
    let denom = 4.0 * pairs;
    let base = n * n - 2.0 * n + 4.0 * e.jz2;
    let shift = 4.0 * e.jz * (n - 1.0);
    let v_plus = (base + shift) / denom;
    let v_minus = (base - shift) / denom;
    let y = (n * n - 4.0 * e.jz2) / denom;
    XState::new(v_plus, v_minus, y, e.jplus2 / pairs)
}

fn check_qubits(n_qubits: usize) -> Result<()> {
    if n_qubits < 2 {
        Err(out_of_range("N", n_qubits as f64, "N >= 2"))
    } else {
        Ok(())
    }
}

fn check_excitation(n_qubits: usize, excitation: usize, max: usize) -> Result<()> {
    check_qubits(n_qubits)?;
    if excitation > max {
        Err(out_of_range("n", excitation as f64, &format!("0 <= n <= {max}")))
    } else {
        Ok(())
    }
}

/// Moments of the Dicke state `|n>_N`.
pub fn dicke_expectations(n_qubits: usize, excitation: usize) -> Result<CollectiveExpectations> {
    check_excitation(n_qubits, excitation, n_qubits)?;
    let m = excitation as f64 - n_qubits as f64 / 2.0;
    CollectiveExpectations::new(n_qubits, m, m * m, Complex64::new(0.0, 0.0))
}

/// Reduced state of `|n>_N`, written directly in terms of `n` and `N`.
pub fn dicke_xstate(n_qubits: usize, excitation: usize) -> Result<XState> {
    check_excitation(n_qubits, excitation, n_qubits)?;
    let (big, n) = (n_qubits as f64, excitation as f64);
    let pairs = big * (big - 1.0);
    XState::real(
        n * (n - 1.0) / pairs,
        (big - n) * (big - n - 1.0) / pairs,
        n * (big - n) / pairs,
        0.0,
    )
}

fn check_superposition_angles(alpha: f64, delta: f64) -> Result<()> {
    if !(0.0..PI).contains(&alpha) {
        return Err(out_of_range("alpha", alpha, "[0, pi)"));
    }
    if !(0.0..TAU).contains(&delta) {
        return Err(out_of_range("delta", delta, "[0, 2pi)"));
    }
    Ok(())
}

/// Moments of `cos α |n>_N + e^{iδ} sin α |n+2>_N`.
///
/// `<J+²>` carries the phase `e^{-iδ}`: `J+` raises `|n>` to `|n+2>`, so the
/// expectation picks up the conjugate of the upper amplitude's phase.
pub fn superposition_expectations(
    n_qubits: usize,
    excitation: usize,
    alpha: f64,
    delta: f64,
) -> Result<CollectiveExpectations> {
    check_excitation(n_qubits, excitation, n_qubits.saturating_sub(2))?;
    check_superposition_angles(alpha, delta)?;
    let (big, n) = (n_qubits as f64, excitation as f64);
    let (sin_a, cos_a) = alpha.sin_cos();
    let (c2, s2) = (cos_a * cos_a, sin_a * sin_a);
    let low = n - big / 2.0;
    let high = low + 2.0;
    let mu = (n + 1.0) * (n + 2.0) * (big - n) * (big - n - 1.0);
    let jplus2 = Complex64::from_polar(0.5 * (2.0 * alpha).sin() * mu.sqrt(), -delta);
    CollectiveExpectations::new(
        n_qubits,
        low * c2 + high * s2,
        low * low * c2 + high * high * s2,
        jplus2,
    )
}

/// Even (`|η> + |-η>`) or odd (`|η> - |-η>`) spin coherent superposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn sign(self) -> f64 {
        match self {
            Parity::Even => 1.0,
            Parity::Odd => -1.0,
        }
    }

    /// Whether Dicke level `n` survives the parity projection.
    pub fn keeps(self, n: usize) -> bool {
        match self {
            Parity::Even => n.is_multiple_of(2),
            Parity::Odd => !n.is_multiple_of(2),
        }
    }
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

impl std::str::FromStr for Parity {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            other => Err(format!("unknown parity `{other}` (expected even or odd)")),
        }
    }
}

fn check_eta(n_qubits: usize, eta: f64) -> Result<()> {
    check_qubits(n_qubits)?;
    if !(0.0..=1.0).contains(&eta) {
        return Err(out_of_range("eta", eta, "[0, 1]"));
    }
    Ok(())
}

/// `γ^k - 1` for `γ = (1 - η²)/(1 + η²)` without cancellation near `η = 0`.
fn gamma_pow_m1(eta: f64, k: usize) -> f64 {
    if k == 0 {
        return 0.0;
    }
    let e2 = eta * eta;
    if e2 >= 1.0 {
        return -1.0;
    }
    let ln_gamma = (-e2).ln_1p() - e2.ln_1p();
    (k as f64 * ln_gamma).exp_m1()
}

/// Moments of the even/odd spin coherent states.
///
/// The odd state at `eta < ODD_SCS_LIMIT_ETA` is its limit `|1>_N`.
pub fn scs_expectations(n_qubits: usize, eta: f64, parity: Parity) -> Result<CollectiveExpectations> {
    check_eta(n_qubits, eta)?;
    if parity == Parity::Odd && eta < ODD_SCS_LIMIT_ETA {
        return dicke_expectations(n_qubits, 1);
    }
    let big = n_qubits as f64;
    let sign = parity.sign();
    let e2 = eta * eta;
    let gamma = (1.0 - e2) / (1.0 + e2);
    let gm1_n = gamma_pow_m1(eta, n_qubits);
    let gm1_n2 = gamma_pow_m1(eta, n_qubits - 2);
    // 1 ± γ^N
    let norm = match parity {
        Parity::Even => 2.0 + gm1_n,
        Parity::Odd => -gm1_n,
    };
    // γ ± γ^{N-1} = γ (1 ± γ^{N-2})
    let jz_num = match parity {
        Parity::Even => gamma * (2.0 + gm1_n2),
        Parity::Odd => -gamma * gm1_n2,
    };
    let w = (1.0 + e2) * (1.0 + e2);
    // υ± = (γ^{N-2} ± 1)/(1 + η²)²
    let upsilon_plus = (2.0 + gm1_n2) / w;
    let upsilon_minus = gm1_n2 / w;
    let (same, opposite) = match parity {
        Parity::Even => (upsilon_plus, upsilon_minus),
        Parity::Odd => (upsilon_minus, upsilon_plus),
    };
    let pairs = big * (big - 1.0);
    let jz = -0.5 * big * jz_num / norm;
    let jz2 = 0.25 * big * big + sign * pairs * e2 * opposite / norm;
    let jplus2 = sign * pairs * e2 * same / norm;
    CollectiveExpectations::new(n_qubits, jz, jz2, Complex64::new(jplus2, 0.0))
}

/// A permutation-symmetric state written in the Dicke basis `|0>_N .. |N>_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricState {
    coeffs: Vec<Complex64>,
}

impl SymmetricState {
    /// `coeffs[n]` is the amplitude of `|n>_N`; there must be `N + 1 >= 3` of them.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() < 3 {
            return Err(out_of_range("N", coeffs.len() as f64 - 1.0, "N >= 2"));
        }
        let norm_sq: f64 = coeffs.iter().map(|c| c.norm_sqr()).sum();
        if norm_sq.is_nan() || (norm_sq - 1.0).abs() > STATE_TOL {
            return Err(Error::Unnormalized { norm_sq });
        }
        Ok(Self { coeffs })
    }

    /// Normalizes an arbitrary nonzero amplitude vector.
    pub fn normalized(mut coeffs: Vec<Complex64>) -> Result<Self> {
        let norm = coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::Unnormalized { norm_sq: norm * norm });
        }
        coeffs.iter_mut().for_each(|c| *c /= norm);
        Self::new(coeffs)
    }

    /// Single Dicke level `|n>_N`.
    pub fn dicke(n_qubits: usize, excitation: usize) -> Result<Self> {
        check_excitation(n_qubits, excitation, n_qubits)?;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n_qubits + 1];
        coeffs[excitation] = Complex64::new(1.0, 0.0);
        Self::new(coeffs)
    }

    /// `cos α |n>_N + e^{iδ} sin α |n+2>_N`.
    pub fn superposition(n_qubits: usize, excitation: usize, alpha: f64, delta: f64) -> Result<Self> {
        check_excitation(n_qubits, excitation, n_qubits.saturating_sub(2))?;
        check_superposition_angles(alpha, delta)?;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n_qubits + 1];
        coeffs[excitation] = Complex64::new(alpha.cos(), 0.0);
        coeffs[excitation + 2] = Complex64::from_polar(alpha.sin(), delta);
        Self::new(coeffs)
    }

    pub fn n_qubits(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Reduced two-qubit state via [`expectation_oracle`].
    pub fn xstate(&self) -> Result<XState> {
        expectations_to_xstate(&expectation_oracle(self)?)
    }
}

/// `ln C(N, n)` for `n = 0..=N`.
fn ln_binomials(n_qubits: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n_qubits + 1);
    let mut acc = 0.0;
    out.push(acc);
    for k in 0..n_qubits {
        acc += ((n_qubits - k) as f64).ln() - ((k + 1) as f64).ln();
        out.push(acc);
    }
    out
}

/// Dicke-basis amplitudes of the even/odd spin coherent state.
///
/// Amplitudes are built in log-space relative to the largest term, so neither
/// `C(N, n)` nor `η^n` over- or underflows for N in the hundreds.
pub fn scs_coefficients(n_qubits: usize, eta: f64, parity: Parity) -> Result<SymmetricState> {
    check_eta(n_qubits, eta)?;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n_qubits + 1];
    if eta == 0.0 {
        match parity {
            Parity::Even => coeffs[0] = Complex64::new(1.0, 0.0),
            Parity::Odd => return Err(Error::LimitOnly),
        }
        return SymmetricState::new(coeffs);
    }
    let ln_eta = eta.ln();
    let ln_binom = ln_binomials(n_qubits);
    let ln_amp: Vec<Option<f64>> = (0..=n_qubits)
        .map(|n| parity.keeps(n).then(|| 0.5 * ln_binom[n] + n as f64 * ln_eta))
        .collect();
    let peak = ln_amp.iter().flatten().copied().fold(f64::NEG_INFINITY, f64::max);
    for (c, a) in coeffs.iter_mut().zip(&ln_amp) {
        if let Some(a) = a {
            *c = Complex64::new((a - peak).exp(), 0.0);
        }
    }
    SymmetricState::normalized(coeffs)
}

/// Collective moments computed by summing over the coefficient vector.
pub fn expectation_oracle(s: &SymmetricState) -> Result<CollectiveExpectations> {
    let n_qubits = s.n_qubits();
    let big = n_qubits as f64;
    let c = s.coeffs();
    let mut jz = 0.0;
    let mut jz2 = 0.0;
    let mut jplus2 = Complex64::new(0.0, 0.0);
    for (n, amp) in c.iter().enumerate() {
        let m = n as f64 - big / 2.0;
        let w = amp.norm_sqr();
        jz += w * m;
        jz2 += w * m * m;
        if n + 2 <= n_qubits {
            let nf = n as f64;
            let ladder = ((nf + 1.0) * (nf + 2.0) * (big - nf) * (big - nf - 1.0)).sqrt();
            jplus2 += c[n + 2].conj() * amp * ladder;
        }
    }
    CollectiveExpectations::new(n_qubits, jz, jz2, jplus2)
}

/// One member of a state family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilyPoint {
    Dicke {
        n_qubits: usize,
        excitation: usize,
    },
    Superposition {
        n_qubits: usize,
        excitation: usize,
        alpha: f64,
        delta: f64,
    },
    Scs {
        n_qubits: usize,
        eta: f64,
        parity: Parity,
    },
}

impl FamilyPoint {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilyPoint::Dicke { n_qubits, excitation } => check_excitation(n_qubits, excitation, n_qubits),
            FamilyPoint::Superposition {
                n_qubits,
                excitation,
                alpha,
                delta,
            } => {
                check_excitation(n_qubits, excitation, n_qubits.saturating_sub(2))?;
                check_superposition_angles(alpha, delta)
            }
            FamilyPoint::Scs { n_qubits, eta, .. } => check_eta(n_qubits, eta),
        }
    }

    /// Closed-form moments for this point.
    pub fn expectations(&self) -> Result<CollectiveExpectations> {
        match *self {
            FamilyPoint::Dicke { n_qubits, excitation } => dicke_expectations(n_qubits, excitation),
            FamilyPoint::Superposition {
                n_qubits,
                excitation,
                alpha,
                delta,
            } => superposition_expectations(n_qubits, excitation, alpha, delta),
            FamilyPoint::Scs { n_qubits, eta, parity } => scs_expectations(n_qubits, eta, parity),
        }
    }

    /// Explicit Dicke-basis state, for the coefficient oracle.
    ///
    /// The odd coherent state at `eta = 0` maps to its limit `|1>_N`.
    pub fn symmetric_state(&self) -> Result<SymmetricState> {
        match *self {
            FamilyPoint::Dicke { n_qubits, excitation } => SymmetricState::dicke(n_qubits, excitation),
            FamilyPoint::Superposition {
                n_qubits,
                excitation,
                alpha,
                delta,
            } => SymmetricState::superposition(n_qubits, excitation, alpha, delta),
            FamilyPoint::Scs { n_qubits, eta, parity } => {
                if parity == Parity::Odd && eta == 0.0 {
                    check_eta(n_qubits, eta)?;
                    SymmetricState::dicke(n_qubits, 1)
                } else {
                    scs_coefficients(n_qubits, eta, parity)
                }
            }
        }
    }
}

/// Reduced two-qubit X state of a family point.
pub fn family_xstate(p: &FamilyPoint) -> Result<XState> {
    expectations_to_xstate(&p.expectations()?)
}
