//! Discord, concurrence and entanglement of formation of symmetric X states.

use std::f64::consts::FRAC_PI_2;

use crate::entropy::{binary_entropy_clamped, PROB_SLACK};
use crate::error::{Error, Result};
use crate::measurement::{optimal_phi, s0_s1};
use crate::oracle::{discord_numeric, NumericDiscord, OracleSettings};
use crate::xstate::XState;

/// `|min{S0, S1} - numeric minimum|` at or below this marks the bound as tight.
pub const TIGHTNESS_TOL: f64 = 1e-6;

/// Closed-form discord with the two polar extremes it was built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompactDiscord {
    /// `S(B) - S(AB) + min{S0, S1}`.
    pub discord: f64,
    pub s0: f64,
    pub s1: f64,
}

impl CompactDiscord {
    /// The conditional entropy used for `discord`.
    pub fn conditional_entropy(&self) -> f64 {
        self.s0.min(self.s1)
    }

    /// Polar angle of the measurement attaining [`Self::conditional_entropy`].
    pub fn theta(&self) -> f64 {
        if self.s1 <= self.s0 {
            FRAC_PI_2
        } else {
            0.0
        }
    }

    /// `S(B) - S(AB) + S1`, the discord if the equator is the global minimum.
    pub fn equator_discord(&self, s: &XState) -> f64 {
        (s.reduced_entropy() - s.joint_entropy() + self.s1).max(0.0)
    }
}

/// Discord from the better of the two symmetric measurement axes.
///
/// For the Dicke, Dicke-superposition and coherent-state families the equator
/// `θ = π/2` wins and this is `S(B) - S(AB) + S1`. Classically correlated
/// states such as GHZ reductions are minimized at `θ = 0` instead. For
/// arbitrary X states the value is only an upper bound; compare against
/// [`discord_numeric`] when certainty is needed.
pub fn discord_compact(s: &XState) -> CompactDiscord {
    let e = s0_s1(s);
    CompactDiscord {
        discord: (s.reduced_entropy() - s.joint_entropy() + e.s0.min(e.s1)).max(0.0),
        s0: e.s0,
        s1: e.s1,
    }
}

/// `C = 2 max{0, |u| - y, y - √(v+ v-)}`.
pub fn concurrence_closed(s: &XState) -> f64 {
    let coherence = s.u().norm() - s.y();
    let block = s.y() - (s.v_plus() * s.v_minus()).sqrt();
    (2.0 * coherence.max(block)).clamp(0.0, 1.0)
}

/// Entanglement of formation `H((1 + √(1 - C²))/2)` of a two-qubit state with concurrence `c`.
pub fn eof_from_concurrence(c: f64) -> Result<f64> {
    if !(-PROB_SLACK..=1.0 + PROB_SLACK).contains(&c) {
        return Err(Error::Domain {
            what: "concurrence",
            value: c,
        });
    }
    let c = c.clamp(0.0, 1.0);
    Ok(binary_entropy_clamped(0.5 * (1.0 + (1.0 - c * c).sqrt())))
}

/// Entanglement of formation from the closed-form concurrence.
pub fn eof(s: &XState) -> f64 {
    eof_from_concurrence(concurrence_closed(s)).expect("closed-form concurrence lies in [0, 1]")
}

/// Every correlation measure of one state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationReport {
    pub discord: f64,
    pub eof: f64,
    pub concurrence: f64,
    pub mutual_information: f64,
    pub classical_correlation: f64,
    pub joint_entropy: f64,
    pub reduced_entropy: f64,
    pub s0: f64,
    pub s1: f64,
    pub optimal_theta: f64,
    pub optimal_phi: f64,
    /// Whether `min{S0, S1}` matched the exhaustive minimum; `None` until the
    /// numeric oracle has been run.
    pub upper_bound_tight: Option<bool>,
    pub numeric: Option<NumericDiscord>,
}

/// Assembles all measures. With `oracle` set, also runs the exhaustive
/// minimizer and records whether `min{S0, S1}` is the global minimum.
///
/// The classical correlation uses the same conditional entropy as the
/// discord, so `discord + classical_correlation = mutual_information`.
pub fn full_report(s: &XState, oracle: Option<&OracleSettings>) -> Result<CorrelationReport> {
    let compact = discord_compact(s);
    let reduced = s.reduced_entropy();
    let joint = s.joint_entropy();
    let concurrence = concurrence_closed(s);
    let numeric = oracle.map(|o| discord_numeric(s, o)).transpose()?;
    let upper_bound_tight =
        numeric.map(|n| (compact.conditional_entropy() - n.min_conditional_entropy).abs() <= TIGHTNESS_TOL);
    Ok(CorrelationReport {
        discord: compact.discord,
        eof: eof_from_concurrence(concurrence)?,
        concurrence,
        mutual_information: 2.0 * reduced - joint,
        classical_correlation: reduced - compact.conditional_entropy(),
        joint_entropy: joint,
        reduced_entropy: reduced,
        s0: compact.s0,
        s1: compact.s1,
        optimal_theta: compact.theta(),
        optimal_phi: optimal_phi(s),
        upper_bound_tight,
        numeric,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{concurrence_rmatrix, Grid};
    use num_complex::Complex64;

    fn h2(x: f64) -> f64 {
        binary_entropy_clamped(x)
    }

    #[test]
    fn w_state_compact_discord() {
        let w = XState::real(0.0, 1.0 / 3.0, 1.0 / 3.0, 0.0).unwrap();
        let d = discord_compact(&w);
        let expect = h2(1.0 / 3.0) - h2(2.0 / 3.0) + h2((3.0 + 5f64.sqrt()) / 6.0);
        assert!((d.discord - expect).abs() < 1e-14);
        assert!((d.discord - 0.5500).abs() < 1e-4);
    }

    #[test]
    fn classical_states_have_no_discord() {
        let ghz = XState::real(0.5, 0.5, 0.0, 0.0).unwrap();
        let d = discord_compact(&ghz);
        assert!(d.discord.abs() < 1e-15);
        assert_eq!(d.theta(), 0.0);
        // the equator alone would report a full bit here
        assert!((d.equator_discord(&ghz) - 1.0).abs() < 1e-15);
        assert_eq!(concurrence_closed(&ghz), 0.0);
        let product = XState::real(1.0, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(discord_compact(&product).discord, 0.0);
    }

    #[test]
    fn concurrence_examples() {
        let s = XState::real(0.4, 0.4, 0.1, 0.25).unwrap();
        assert!((concurrence_closed(&s) - 0.3).abs() < 1e-15);
        assert!((concurrence_rmatrix(&s) - 0.3).abs() < 1e-12);
        let w = XState::real(0.0, 1.0 / 3.0, 1.0 / 3.0, 0.0).unwrap();
        assert!((concurrence_closed(&w) - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn eof_examples() {
        assert_eq!(eof_from_concurrence(0.0).unwrap(), 0.0);
        assert!((eof_from_concurrence(1.0).unwrap() - 1.0).abs() < 1e-15);
        let expect = h2((3.0 + 5f64.sqrt()) / 6.0);
        assert!((eof_from_concurrence(2.0 / 3.0).unwrap() - expect).abs() < 1e-15);
        assert!(eof_from_concurrence(1.01).is_err());
        assert!(eof_from_concurrence(-0.01).is_err());
    }

    #[test]
    fn report_without_oracle() {
        let w = XState::real(0.0, 1.0 / 3.0, 1.0 / 3.0, 0.0).unwrap();
        let r = full_report(&w, None).unwrap();
        assert!(r.upper_bound_tight.is_none() && r.numeric.is_none());
        assert!((r.discord - r.eof).abs() < 1e-12);
        assert!((r.concurrence - 2.0 / 3.0).abs() < 1e-15);
        assert!((r.mutual_information - r.classical_correlation - r.discord).abs() < 1e-12);
    }

    #[test]
    fn report_with_oracle() {
        let s = XState::new(0.3, 0.3, 0.2, Complex64::from_polar(0.15, 0.4)).unwrap();
        let settings = OracleSettings {
            grid: Grid::COARSEST,
            refine_tol: 1e-10,
        };
        let r = full_report(&s, Some(&settings)).unwrap();
        let n = r.numeric.unwrap();
        assert_eq!(r.upper_bound_tight, Some(true));
        assert!((n.discord - r.discord).abs() < 1e-8);
    }
}
