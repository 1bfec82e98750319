//! Symmetric two-qubit X states.
//!
//! In the computational basis `{|00>, |01>, |10>, |11>}` the density matrix is
//!
//! ```text
//! | v+  0  0  u* |
//! | 0   y  y  0  |
//! | 0   y  y  0  |
//! | u   0  0  v- |
//! ```
//!
//! Exchange symmetry forces the equal middle block, parity symmetry forces the
//! X shape. Everything downstream depends on `u` only through `|u|` once the
//! measurement azimuth has been optimized.

use num_complex::Complex64;

use crate::entropy::{binary_entropy_clamped, h};
use crate::error::{Error, Result};

/// Absolute slack used when validating the X-state invariants.
pub const STATE_TOL: f64 = 1e-12;

/// A symmetric two-qubit X density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XState {
    v_plus: f64,
    v_minus: f64,
    y: f64,
    u: Complex64,
}

/// Eigenvalues of an [`XState`]: `2y` (twice degenerate block) and `λ±`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spectrum {
    pub lambda0: f64,
    pub lambda_plus: f64,
    pub lambda_minus: f64,
}

impl XState {
    /// Builds a state, checking non-negativity, unit trace and positivity.
    ///
    /// Tiny negative weights within [`STATE_TOL`] are snapped to zero.
    pub fn new(v_plus: f64, v_minus: f64, y: f64, u: Complex64) -> Result<Self> {
        let finite = v_plus.is_finite() && v_minus.is_finite() && y.is_finite() && u.re.is_finite() && u.im.is_finite();
        if !finite {
            return Err(Error::InvalidState("non-finite matrix element".into()));
        }
        for (name, w) in [("v_plus", v_plus), ("v_minus", v_minus), ("y", y)] {
            if w < -STATE_TOL {
                return Err(Error::InvalidState(format!("{name} = {w} is negative")));
            }
        }
        let (v_plus, v_minus, y) = (v_plus.max(0.0), v_minus.max(0.0), y.max(0.0));
        let trace = v_plus + v_minus + 2.0 * y;
        if (trace - 1.0).abs() > STATE_TOL {
            return Err(Error::InvalidState(format!("trace v+ + v- + 2y = {trace} != 1")));
        }
        let excess = u.norm_sqr() - v_plus * v_minus;
        if excess > STATE_TOL {
            return Err(Error::InvalidState(format!(
                "|u|^2 exceeds v+ v- by {excess:e}; matrix is not positive"
            )));
        }
        Ok(Self { v_plus, v_minus, y, u })
    }

    /// Real corner coherence shorthand.
    pub fn real(v_plus: f64, v_minus: f64, y: f64, u: f64) -> Result<Self> {
        Self::new(v_plus, v_minus, y, Complex64::new(u, 0.0))
    }

    pub fn v_plus(&self) -> f64 {
        self.v_plus
    }

    pub fn v_minus(&self) -> f64 {
        self.v_minus
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn u(&self) -> Complex64 {
        self.u
    }

    /// Same state with `u` replaced by `u e^{iχ}`.
    pub fn with_phase(&self, chi: f64) -> Self {
        Self {
            u: self.u * Complex64::from_polar(1.0, chi),
            ..*self
        }
    }

    /// Dense 4×4 density matrix, row-major in the computational basis.
    pub fn matrix(&self) -> [[Complex64; 4]; 4] {
        let z = Complex64::new(0.0, 0.0);
        let r = |x: f64| Complex64::new(x, 0.0);
        [
            [r(self.v_plus), z, z, self.u.conj()],
            [z, r(self.y), r(self.y), z],
            [z, r(self.y), r(self.y), z],
            [self.u, z, z, r(self.v_minus)],
        ]
    }

    /// Eigenvalues `λ0 = 2y`, `λ± = (v+ + v- ± √((v+ - v-)² + 4|u|²))/2`, clamped at 0.
    pub fn spectrum(&self) -> Spectrum {
        let sum = self.v_plus + self.v_minus;
        let root = (self.v_plus - self.v_minus).hypot(2.0 * self.u.norm());
        let lambda_plus = 0.5 * (sum + root);
        // λ- = (v+ v- - |u|²)/λ+ avoids cancellation near the positivity boundary.
        let lambda_minus = if lambda_plus > 0.0 {
            (self.v_plus * self.v_minus - self.u.norm_sqr()) / lambda_plus
        } else {
            0.0
        };
        Spectrum {
            lambda0: 2.0 * self.y,
            lambda_plus,
            lambda_minus: lambda_minus.max(0.0),
        }
    }

    /// Von Neumann entropy of the two-qubit state.
    pub fn joint_entropy(&self) -> f64 {
        let s = self.spectrum();
        h(s.lambda0) + h(s.lambda_plus) + h(s.lambda_minus)
    }

    /// Entropy of either single-qubit marginal, `H(v+ + y)`.
    pub fn reduced_entropy(&self) -> f64 {
        binary_entropy_clamped(self.v_plus + self.y)
    }

    /// Quantum mutual information `S(A) + S(B) - S(AB)`, never negative.
    pub fn mutual_information(&self) -> f64 {
        (2.0 * self.reduced_entropy() - self.joint_entropy()).max(0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn rejects_bad_trace_and_positivity() {
        assert!(XState::real(0.5, 0.5, 0.1, 0.0).is_err());
        assert!(XState::real(0.25, 0.25, 0.25, 0.3).is_err());
        assert!(XState::real(-0.1, 0.6, 0.25, 0.0).is_err());
        assert!(XState::real(f64::NAN, 0.5, 0.25, 0.0).is_err());
    }

    #[test]
    fn snaps_rounding_noise() {
        let s = XState::real(-1e-14, 1.0, 0.0, 0.0).unwrap();
        assert_eq!(s.v_plus(), 0.0);
    }

    #[test]
    fn spectrum_examples() {
        let s = XState::real(0.25, 0.25, 0.25, 0.0).unwrap().spectrum();
        assert!(
            close(s.lambda0, 0.5, 1e-15) && close(s.lambda_plus, 0.25, 1e-15) && close(s.lambda_minus, 0.25, 1e-15)
        );

        let s = XState::real(0.5, 0.5, 0.0, 0.5).unwrap().spectrum();
        assert!(close(s.lambda0, 0.0, 1e-15) && close(s.lambda_plus, 1.0, 1e-15) && close(s.lambda_minus, 0.0, 1e-15));

        let s = XState::real(1.0 / 6.0, 1.0 / 6.0, 1.0 / 3.0, 0.0).unwrap().spectrum();
        assert!(close(s.lambda0, 2.0 / 3.0, 1e-15) && close(s.lambda_plus, 1.0 / 6.0, 1e-15));
        assert!(close(s.lambda_minus, 1.0 / 6.0, 1e-15));
    }

    #[test]
    fn entropy_examples() {
        let bell = XState::real(0.5, 0.5, 0.0, 0.5).unwrap();
        assert!(bell.joint_entropy().abs() < 1e-15);
        assert!(close(bell.mutual_information(), 2.0, 1e-15));

        let mixed = XState::real(0.25, 0.25, 0.25, 0.0).unwrap();
        assert!(close(mixed.joint_entropy(), 1.5, 1e-15));

        let d42 = XState::real(1.0 / 6.0, 1.0 / 6.0, 1.0 / 3.0, 0.0).unwrap();
        let expect = h(2.0 / 3.0) + 2.0 * h(1.0 / 6.0);
        assert!(close(d42.joint_entropy(), expect, 1e-15));
        assert!(close(d42.joint_entropy(), 1.2516, 1e-4));
        assert!(close(d42.reduced_entropy(), 1.0, 1e-15));

        let product = XState::real(1.0, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(product.reduced_entropy(), 0.0);
        assert_eq!(product.mutual_information(), 0.0);

        let w3 = XState::real(0.0, 1.0 / 3.0, 1.0 / 3.0, 0.0).unwrap();
        assert!(close(w3.reduced_entropy(), 0.918296, 1e-6));
        // joint entropy is H(1/3) too, so I = H(1/3)
        assert!(close(w3.mutual_information(), 0.918296, 1e-6));
    }

    #[test]
    fn matrix_is_unit_trace_hermitian() {
        let s = XState::new(0.3, 0.2, 0.25, Complex64::new(0.1, -0.15)).unwrap();
        let m = s.matrix();
        let tr: f64 = (0..4).map(|i| m[i][i].re).sum();
        assert!(close(tr, 1.0, 1e-15));
        for (i, row) in m.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(*x, m[j][i].conj());
            }
        }
    }
}
