//! Projective measurements on qubit B and the resulting conditional entropy of A.
//!
//! Qubit B is measured with `Π± = (I ± n·σ)/2`, `n = (sinθ cosφ, sinθ sinφ, cosθ)`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::entropy::{binary_entropy_clamped, bloch_entropy};
use crate::error::{Error, Result};
use crate::xstate::XState;

/// Branches with probability below this contribute nothing to the entropy.
pub const DEGENERATE_BRANCH: f64 = 1e-15;

/// Bloch angles of the measurement axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementAngles {
    theta: f64,
    phi: f64,
}

impl MeasurementAngles {
    /// `theta` must lie in `[0, π]`; `phi` is reduced modulo `2π`.
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::OutOfRange {
                name: "theta",
                value: theta,
                range: "[0, pi]".into(),
            });
        }
        if !phi.is_finite() {
            return Err(Error::OutOfRange {
                name: "phi",
                value: phi,
                range: "[0, 2pi)".into(),
            });
        }
        Ok(Self {
            theta,
            phi: wrap_angle(phi),
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// The axis reflected through the equator, `θ → π - θ`.
    pub fn reflected(&self) -> Self {
        Self {
            theta: PI - self.theta,
            phi: self.phi,
        }
    }
}

pub(crate) fn wrap_angle(phi: f64) -> f64 {
    let w = phi.rem_euclid(TAU);
    if w >= TAU {
        0.0
    } else {
        w
    }
}

/// Outcome label of the two-element projective measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

/// Post-measurement state of qubit A for one outcome on B.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionalOutcome {
    pub probability: f64,
    /// Normalized 2×2 conditional state of A (zero matrix for a degenerate branch).
    pub state: [[Complex64; 2]; 2],
    /// Bloch-vector length; the eigenvalues of `state` are `(1 ± kappa)/2`.
    pub kappa: f64,
}

impl ConditionalOutcome {
    /// `probability * S(state)`, the branch's share of the conditional entropy.
    pub fn weighted_entropy(&self) -> f64 {
        if self.probability < DEGENERATE_BRANCH {
            0.0
        } else {
            self.probability * bloch_entropy(self.kappa)
        }
    }
}

/// Unnormalized diagonal `(a, d)` of a branch; the conditional state is
/// `[[a, b*], [b, d]] / (2p)`.
#[inline]
fn branch_entries(s: &XState, cos_t: f64, sign: f64) -> (f64, f64) {
    let (vp, vm, y) = (s.v_plus(), s.v_minus(), s.y());
    let a = (vp + y) + sign * (vp - y) * cos_t;
    let d = (vm + y) - sign * (vm - y) * cos_t;
    (a, d)
}

#[inline]
fn off_diagonal(s: &XState, sin_t: f64, phi: f64) -> Complex64 {
    // lower-left entry before the branch sign: (y e^{iφ} + u e^{-iφ}) sinθ
    let e = Complex64::from_polar(1.0, phi);
    (s.y() * e + s.u() * e.conj()) * sin_t
}

/// Conditional state of A and its probability after outcome `branch` on B.
pub fn conditional_outcome(s: &XState, angles: MeasurementAngles, branch: Branch) -> ConditionalOutcome {
    let sign = branch.sign();
    let (sin_t, cos_t) = angles.theta.sin_cos();
    let probability = 0.5 * (1.0 + sign * (s.v_plus() - s.v_minus()) * cos_t);
    let zero = Complex64::new(0.0, 0.0);
    if probability < DEGENERATE_BRANCH {
        return ConditionalOutcome {
            probability: 0.0,
            state: [[zero; 2]; 2],
            kappa: 0.0,
        };
    }
    let (a, d) = branch_entries(s, cos_t, sign);
    let b = off_diagonal(s, sin_t, angles.phi) * sign;
    let norm = 2.0 * probability;
    let state = [
        [Complex64::new(a / norm, 0.0), b.conj() / norm],
        [b / norm, Complex64::new(d / norm, 0.0)],
    ];
    ConditionalOutcome {
        probability,
        state,
        kappa: two_by_two_gap(&state),
    }
}

/// Eigenvalue gap of a unit-trace Hermitian 2×2 matrix, i.e. its Bloch length.
fn two_by_two_gap(m: &[[Complex64; 2]; 2]) -> f64 {
    let diff = m[0][0].re - m[1][1].re;
    diff.hypot(2.0 * m[1][0].norm())
}

/// `S_{A|B}(θ, φ) = p+ S(ρ+) + p- S(ρ-)`.
pub fn conditional_entropy(s: &XState, angles: MeasurementAngles) -> f64 {
    conditional_entropy_raw(s, angles.theta, angles.phi)
}

/// Conditional entropy without angle validation; the hot loop of the oracle.
#[inline]
pub(crate) fn conditional_entropy_raw(s: &XState, theta: f64, phi: f64) -> f64 {
    let (sin_t, cos_t) = theta.sin_cos();
    let b_sq = off_diagonal(s, sin_t, phi).norm_sqr();
    let delta = s.v_plus() - s.v_minus();
    let mut total = 0.0;
    for sign in [1.0, -1.0] {
        let p = 0.5 * (1.0 + sign * delta * cos_t);
        if p < DEGENERATE_BRANCH {
            continue;
        }
        let (a, d) = branch_entries(s, cos_t, sign);
        let kappa = ((a - d) * (a - d) + 4.0 * b_sq).sqrt() / (2.0 * p);
        total += p * bloch_entropy(kappa);
    }
    total
}

/// Azimuth minimizing the conditional entropy for every θ: `arg(u)/2`.
///
/// `arg(u)` is taken in `[0, 2π)`; returns 0 when `|u| < 1e-15`.
pub fn optimal_phi(s: &XState) -> f64 {
    let u = s.u();
    if u.norm() < 1e-15 {
        return 0.0;
    }
    0.5 * wrap_angle(u.arg())
}

/// `κ̃(θ)`, the Bloch length of the `+` branch once φ sits at [`optimal_phi`].
pub fn kappa_tilde(s: &XState, theta: f64) -> f64 {
    let (sin_t, cos_t) = theta.sin_cos();
    let p = 0.5 * (1.0 + (s.v_plus() - s.v_minus()) * cos_t);
    if p < DEGENERATE_BRANCH {
        return 0.0;
    }
    let diag = (s.v_plus() - s.v_minus()) + (1.0 - 4.0 * s.y()) * cos_t;
    let u = s.u().norm();
    let y = s.y();
    let k2 = (0.25 * diag * diag + (u * u + y * y + 2.0 * y * u) * sin_t * sin_t) / (p * p);
    k2.sqrt()
}

/// Conditional entropies at the two symmetric extremes `θ = 0` and `θ = π/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarExtremes {
    pub s0: f64,
    pub s1: f64,
}

/// Closed forms for `S0 = S(θ=0)` and `S1 = S(θ=π/2)` at the optimal azimuth.
pub fn s0_s1(s: &XState) -> PolarExtremes {
    let (vp, vm, y) = (s.v_plus(), s.v_minus(), s.y());
    let term = |v: f64| {
        let w = v + y;
        if w < DEGENERATE_BRANCH {
            0.0
        } else {
            let kappa = (v - y).abs() / w;
            w * binary_entropy_clamped(0.5 * (1.0 + kappa))
        }
    };
    let s0 = term(vp) + term(vm);
    let kappa1 = (vp - vm).hypot(2.0 * (y + s.u().norm())).clamp(0.0, 1.0);
    PolarExtremes {
        s0,
        s1: bloch_entropy(kappa1),
    }
}
