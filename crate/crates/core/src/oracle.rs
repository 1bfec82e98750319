//! Brute-force checks that do not rely on the closed forms.
//!
//! [`discord_numeric`] minimizes the conditional entropy over every projective
//! measurement axis on a dense `(θ, φ)` grid and polishes the best cell with
//! golden-section search. [`concurrence_rmatrix`] builds the spin-flipped
//! product `R = ρ (σy⊗σy) ρ* (σy⊗σy)` explicitly.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;

use crate::entropy::bloch_entropy;
use crate::error::{Error, Result};
use crate::measurement::{conditional_entropy_raw, s0_s1, MeasurementAngles, DEGENERATE_BRANCH};
use crate::optimize::golden_section;
use crate::xstate::XState;

/// Resolution of the measurement-angle grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Grid {
    /// Points on `[0, π]`, both ends included.
    pub n_theta: usize,
    /// Points on `[0, 2π)`.
    pub n_phi: usize,
}

impl Grid {
    pub const DEFAULT: Grid = Grid {
        n_theta: 721,
        n_phi: 1440,
    };
    pub const COARSEST: Grid = Grid {
        n_theta: 181,
        n_phi: 360,
    };

    pub fn new(n_theta: usize, n_phi: usize) -> Result<Self> {
        if n_theta < Self::COARSEST.n_theta {
            return Err(Error::OutOfRange {
                name: "grid-theta",
                value: n_theta as f64,
                range: format!(">= {}", Self::COARSEST.n_theta),
            });
        }
        if n_phi < Self::COARSEST.n_phi {
            return Err(Error::OutOfRange {
                name: "grid-phi",
                value: n_phi as f64,
                range: format!(">= {}", Self::COARSEST.n_phi),
            });
        }
        Ok(Self { n_theta, n_phi })
    }

    pub fn theta_step(&self) -> f64 {
        PI / (self.n_theta - 1) as f64
    }

    pub fn phi_step(&self) -> f64 {
        TAU / self.n_phi as f64
    }

    pub fn theta(&self, i: usize) -> f64 {
        if i + 1 == self.n_theta {
            PI
        } else {
            i as f64 * self.theta_step()
        }
    }

    pub fn phi(&self, j: usize) -> f64 {
        j as f64 * self.phi_step()
    }
}

impl Default for Grid {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Grid plus refinement tolerance for [`discord_numeric`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleSettings {
    pub grid: Grid,
    pub refine_tol: f64,
}

impl Default for OracleSettings {
    fn default() -> Self {
        Self {
            grid: Grid::DEFAULT,
            refine_tol: 1e-10,
        }
    }
}

/// Result of the exhaustive measurement search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericDiscord {
    /// `S(B) - S(AB) + min S_{A|B}`.
    pub discord: f64,
    pub min_conditional_entropy: f64,
    /// Smallest value seen on the raw grid, before refinement.
    pub grid_minimum: f64,
    pub argmin: MeasurementAngles,
}

/// Conditional entropy along one fixed-θ row, with φ-independent pieces hoisted.
struct Row<'a> {
    s: &'a XState,
    sin_t: f64,
    branches: [(f64, f64); 2],
}

impl<'a> Row<'a> {
    fn new(s: &'a XState, theta: f64) -> Self {
        let (sin_t, cos_t) = theta.sin_cos();
        let (vp, vm, y) = (s.v_plus(), s.v_minus(), s.y());
        let branch = |sign: f64| {
            let p = 0.5 * (1.0 + sign * (vp - vm) * cos_t);
            let a = (vp + y) + sign * (vp - y) * cos_t;
            let d = (vm + y) - sign * (vm - y) * cos_t;
            (p, a - d)
        };
        Self {
            s,
            sin_t,
            branches: [branch(1.0), branch(-1.0)],
        }
    }

    #[inline]
    fn eval(&self, e: Complex64) -> f64 {
        let b = (self.s.y() * e + self.s.u() * e.conj()) * self.sin_t;
        let b_sq = b.norm_sqr();
        let mut total = 0.0;
        for &(p, diff) in &self.branches {
            if p < DEGENERATE_BRANCH {
                continue;
            }
            let kappa = (diff * diff + 4.0 * b_sq).sqrt() / (2.0 * p);
            total += p * bloch_entropy(kappa);
        }
        total
    }
}

fn phases(grid: &Grid) -> Vec<Complex64> {
    (0..grid.n_phi)
        .map(|j| Complex64::from_polar(1.0, grid.phi(j)))
        .collect()
}

/// Minimum over the φ grid at fixed θ: `(value, column index)`.
fn row_minimum(s: &XState, theta: f64, phases: &[Complex64]) -> (f64, usize) {
    let row = Row::new(s, theta);
    let mut best = (f64::INFINITY, 0);
    for (j, e) in phases.iter().enumerate() {
        let v = row.eval(*e);
        if v < best.0 {
            best = (v, j);
        }
    }
    best
}

/// Exhaustive minimization of `S_{A|B}(θ, φ)`.
///
/// Evaluates the whole grid, then refines the best cell coordinate-wise (θ then
/// φ, two passes) with golden-section search down to `refine_tol`.
pub fn minimize_conditional_entropy(s: &XState, settings: &OracleSettings) -> Result<(f64, f64, MeasurementAngles)> {
    let grid = Grid::new(settings.grid.n_theta, settings.grid.n_phi)?;
    if settings.refine_tol.is_nan() || settings.refine_tol <= 0.0 {
        return Err(Error::OutOfRange {
            name: "refine_tol",
            value: settings.refine_tol,
            range: "> 0".into(),
        });
    }
    let phases = phases(&grid);
    let (grid_min, i_best, j_best) = (0..grid.n_theta)
        .into_par_iter()
        .map(|i| {
            let (v, j) = row_minimum(s, grid.theta(i), &phases);
            (v, i, j)
        })
        .reduce(
            || (f64::INFINITY, usize::MAX, 0),
            |a, b| {
                // lowest value, ties broken by index so the result is deterministic
                if b.0 < a.0 || (b.0 == a.0 && (b.1, b.2) < (a.1, a.2)) {
                    b
                } else {
                    a
                }
            },
        );

    let (dt, dp) = (grid.theta_step(), grid.phi_step());
    let mut best = (grid_min, grid.theta(i_best), grid.phi(j_best));
    for _ in 0..2 {
        let (_, t0, p0) = best;
        let (t, v) = golden_section(
            |t| conditional_entropy_raw(s, t, p0),
            (t0 - dt).max(0.0),
            (t0 + dt).min(PI),
            settings.refine_tol,
        );
        if v < best.0 {
            best = (v, t, p0);
        }
        let (_, t1, p1) = best;
        let (p, v) = golden_section(
            |p| conditional_entropy_raw(s, t1, p),
            p1 - dp,
            p1 + dp,
            settings.refine_tol,
        );
        if v < best.0 {
            best = (v, t1, p);
        }
    }
    let argmin = MeasurementAngles::new(best.1.clamp(0.0, PI), best.2)?;
    Ok((best.0, grid_min, argmin))
}

/// Discord from the exhaustive minimizer; an upper bound on the true value.
pub fn discord_numeric(s: &XState, settings: &OracleSettings) -> Result<NumericDiscord> {
    let (min_ce, grid_minimum, argmin) = minimize_conditional_entropy(s, settings)?;
    Ok(NumericDiscord {
        discord: s.reduced_entropy() - s.joint_entropy() + min_ce,
        min_conditional_entropy: min_ce,
        grid_minimum,
        argmin,
    })
}

/// `min_φ S_{A|B}(θ, φ)` from an `n_phi` grid followed by golden-section polish.
pub fn min_over_phi(s: &XState, theta: f64, n_phi: usize, refine_tol: f64) -> f64 {
    let n_phi = n_phi.max(1);
    let step = TAU / n_phi as f64;
    let phases: Vec<Complex64> = (0..n_phi)
        .map(|j| Complex64::from_polar(1.0, j as f64 * step))
        .collect();
    let (v, j) = row_minimum(s, theta, &phases);
    let p0 = j as f64 * step;
    let (_, refined) = golden_section(
        |p| conditional_entropy_raw(s, theta, p),
        p0 - step,
        p0 + step,
        refine_tol,
    );
    v.min(refined)
}

type Mat4 = [[Complex64; 4]; 4];

fn matmul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = [[Complex64::new(0.0, 0.0); 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

/// `σy ⊗ σy` in the computational basis.
fn sigma_yy() -> Mat4 {
    let z = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    [[z, z, z, -one], [z, z, one, z], [z, one, z, z], [-one, z, z, z]]
}

fn block(m: &Mat4, (i, j): (usize, usize)) -> [[Complex64; 2]; 2] {
    [[m[i][i], m[i][j]], [m[j][i], m[j][j]]]
}

fn det2(m: &[[Complex64; 2]; 2]) -> Complex64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

/// Wootters concurrence from the eigenvalues of the spin-flipped product.
///
/// `R` inherits the X pattern, so it splits into the `{|00>,|11>}` and
/// `{|01>,|10>}` blocks. For each 2×2 block with eigenvalues `μ1 >= μ2 >= 0`,
/// `√μ1 ± √μ2 = √(tr ± 2√det)`, and `det R_b = det ρ_b · det ρ̃_b`, which keeps
/// tiny eigenvalues accurate before the square root.
pub fn concurrence_rmatrix(s: &XState) -> f64 {
    let rho = s.matrix();
    let flip = sigma_yy();
    let rho_conj = rho.map(|r| r.map(|c| c.conj()));
    let rho_tilde = matmul(&matmul(&flip, &rho_conj), &flip);
    let r = matmul(&rho, &rho_tilde);

    let mut roots = Vec::with_capacity(4);
    for idx in [(0, 3), (1, 2)] {
        let trace = (r[idx.0][idx.0] + r[idx.1][idx.1]).re.max(0.0);
        let det = (det2(&block(&rho, idx)) * det2(&block(&rho_tilde, idx))).re.abs();
        let root_det = det.sqrt();
        let sum = (trace + 2.0 * root_det).sqrt();
        let diff = (trace - 2.0 * root_det).max(0.0).sqrt();
        roots.push(0.5 * (sum + diff));
        roots.push(0.5 * (sum - diff).max(0.0));
    }
    roots.sort_by(|a, b| b.total_cmp(a));
    (roots[0] - roots[1] - roots[2] - roots[3]).max(0.0)
}

/// How the closed-form surrogate failed to reach the numeric minimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TightnessFailure {
    /// `min{S0, S1}` sits above the numeric minimum.
    BoundNotTight,
    /// `min{S0, S1}` is tight but attained at `θ = 0`, so `S1` alone is not.
    EquatorNotMinimal,
}

/// A state on which the closed-form surrogate is not the global minimum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TightnessViolation {
    pub index: usize,
    pub state: XState,
    pub s0: f64,
    pub s1: f64,
    pub numeric_minimum: f64,
    pub argmin: MeasurementAngles,
    pub kind: TightnessFailure,
}

impl TightnessViolation {
    /// Excess of `S1` over the numeric minimum.
    pub fn gap(&self) -> f64 {
        self.s1 - self.numeric_minimum
    }
}

/// Checks every state and reports each one where `S1` (or `min{S0, S1}`) exceeds
/// the exhaustive minimum by more than `tol`. Nothing is filtered out.
pub fn tightness_scan(states: &[XState], settings: &OracleSettings, tol: f64) -> Result<Vec<TightnessViolation>> {
    let mut out = Vec::new();
    for (index, s) in states.iter().enumerate() {
        let (numeric_minimum, _, argmin) = minimize_conditional_entropy(s, settings)?;
        let e = s0_s1(s);
        let kind = if e.s0.min(e.s1) - numeric_minimum > tol {
            Some(TightnessFailure::BoundNotTight)
        } else if e.s1 - numeric_minimum > tol {
            Some(TightnessFailure::EquatorNotMinimal)
        } else {
            None
        };
        if let Some(kind) = kind {
            out.push(TightnessViolation {
                index,
                state: *s,
                s0: e.s0,
                s1: e.s1,
                numeric_minimum,
                argmin,
                kind,
            });
        }
    }
    Ok(out)
}

/// Random valid X state: `(v+, v-, 2y)` uniform on the simplex, `|u|` uniform
/// in `[0, √(v+ v-)]`, phase uniform.
pub fn random_xstate<R: Rng + ?Sized>(rng: &mut R) -> XState {
    // sorted uniforms give a flat Dirichlet(1, 1, 1) sample
    let (mut a, mut b): (f64, f64) = (rng.gen(), rng.gen());
    if a > b {
        std::mem::swap(&mut a, &mut b);
    }
    let (v_plus, v_minus, two_y) = (a, b - a, 1.0 - b);
    let modulus = rng.gen::<f64>() * (v_plus * v_minus).sqrt();
    let phase = rng.gen::<f64>() * TAU;
    XState::new(v_plus, v_minus, 0.5 * two_y, Complex64::from_polar(modulus, phase))
        .expect("simplex sample is a valid X state")
}
