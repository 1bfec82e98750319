//! Shannon entropies in bits.

use crate::error::{Error, Result};

/// Slack allowed when clamping probabilities back into `[0, 1]`.
pub const PROB_SLACK: f64 = 1e-12;

/// `-x log2 x` with `0 log 0 = 0`.
#[inline]
pub fn h(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        -x * x.log2()
    }
}

/// Binary entropy `H(x) = h(x) + h(1 - x)`.
///
/// Inputs within [`PROB_SLACK`] of the unit interval are clamped; anything
/// further out is a domain error.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(-PROB_SLACK..=1.0 + PROB_SLACK).contains(&x) {
        return Err(Error::Domain {
            what: "binary entropy argument",
            value: x,
        });
    }
    Ok(binary_entropy_clamped(x))
}

/// Binary entropy for arguments known to be probabilities up to rounding.
#[inline]
pub(crate) fn binary_entropy_clamped(x: f64) -> f64 {
    let x = x.clamp(0.0, 1.0);
    h(x) + h(1.0 - x)
}

/// Entropy of a qubit whose eigenvalues are `(1 ± kappa) / 2`.
#[inline]
pub(crate) fn bloch_entropy(kappa: f64) -> f64 {
    let k = kappa.clamp(0.0, 1.0);
    // (1 - k)/2 computed directly keeps the small eigenvalue accurate.
    let small = 0.5 * (1.0 - k);
    h(small) + h(1.0 - small)
}
