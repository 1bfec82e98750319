//! Pairwise quantum discord and entanglement of formation for symmetric
//! two-qubit X states, and the multi-qubit families that produce them.
//!
//! ```
//! use xdiscord::{discord_compact, eof, families::dicke_xstate};
//!
//! let w = dicke_xstate(3, 1).unwrap();
//! let d = discord_compact(&w).discord;
//! assert!((d - eof(&w)).abs() < 1e-12);
//! ```

pub mod discord;
pub mod entropy;
pub mod error;
pub mod families;
pub mod measurement;
pub mod optimize;
pub mod oracle;
pub mod xstate;

pub use discord::{
    concurrence_closed, discord_compact, eof, eof_from_concurrence, full_report, CompactDiscord, CorrelationReport,
};
pub use entropy::binary_entropy;
pub use error::{Error, Result};
pub use families::{family_xstate, FamilyPoint, Parity};
pub use measurement::{conditional_entropy, conditional_outcome, optimal_phi, s0_s1, MeasurementAngles};
pub use oracle::{concurrence_rmatrix, discord_numeric, Grid, OracleSettings};
pub use xstate::XState;
