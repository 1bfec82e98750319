//! Subcommand implementations.

use std::f64::consts::{PI, TAU};
use std::io::Write;

use rayon::prelude::*;
use xdiscord::oracle::{min_over_phi, tightness_scan};
use xdiscord::{family_xstate, full_report, FamilyPoint, Grid, OracleSettings, Parity};

use crate::args::{Family, FamilyArgs, LandscapeArgs, Param, RangeArgs, ReportArgs, SweepArgs, VerifyArgs};
use crate::error::{CliError, Result};
use crate::output::{sig12, write_csv, Table};

/// Angular tolerance for golden-section polishing in φ and η.
pub const REFINE_TOL: f64 = 1e-10;

pub const SWEEP_COLUMNS: [&str; 5] = [
    "discord",
    "eof",
    "concurrence",
    "mutual_information",
    "classical_correlation",
];

fn missing(family: Family, flag: &str) -> CliError {
    CliError::Usage(format!("{} requires --{flag}", family_name(family)))
}

pub fn family_name(family: Family) -> &'static str {
    match family {
        Family::Dicke => "dicke",
        Family::Superposition => "superposition",
        Family::Scs => "scs",
    }
}

fn applies(family: Family, param: Param) -> bool {
    match family {
        Family::Dicke => matches!(param, Param::Qubits | Param::Excitation),
        Family::Superposition => param != Param::Eta,
        Family::Scs => matches!(param, Param::Qubits | Param::Eta),
    }
}

impl FamilyArgs {
    /// The point named by the flags; every flag the family needs must be set.
    pub fn point(&self) -> Result<FamilyPoint> {
        let n_qubits = self.qubits.ok_or_else(|| missing(self.family, "N"))?;
        let p = match self.family {
            Family::Dicke => FamilyPoint::Dicke {
                n_qubits,
                excitation: self.excitation.ok_or_else(|| missing(self.family, "n"))?,
            },
            Family::Superposition => FamilyPoint::Superposition {
                n_qubits,
                excitation: self.excitation.ok_or_else(|| missing(self.family, "n"))?,
                alpha: self.alpha.ok_or_else(|| missing(self.family, "alpha"))?,
                delta: self.delta.unwrap_or(0.0),
            },
            Family::Scs => FamilyPoint::Scs {
                n_qubits,
                eta: self.eta.ok_or_else(|| missing(self.family, "eta"))?,
                parity: self.parity.unwrap_or(Parity::Even),
            },
        };
        p.validate()?;
        Ok(p)
    }

    /// The point with `param` overridden by `value`.
    pub fn point_at(&self, param: Param, value: f64) -> Result<FamilyPoint> {
        let mut a = self.clone();
        match param {
            Param::Qubits => a.qubits = Some(value as usize),
            Param::Excitation => a.excitation = Some(value as usize),
            Param::Alpha => a.alpha = Some(value),
            Param::Delta => a.delta = Some(value),
            Param::Eta => a.eta = Some(value),
        }
        a.point()
    }
}

fn linspace(lo: f64, hi: f64, count: usize, include_end: bool) -> Vec<f64> {
    if count == 1 {
        return vec![lo];
    }
    let div = if include_end { count - 1 } else { count } as f64;
    (0..count).map(|k| lo + (hi - lo) * k as f64 / div).collect()
}

fn whole(value: f64, flag: &str) -> Result<usize> {
    if value >= 0.0 && value.fract() == 0.0 {
        Ok(value as usize)
    } else {
        Err(CliError::Usage(format!(
            "--{flag} must be a non-negative integer for this parameter, got {value}"
        )))
    }
}

/// Values visited by a sweep or landscape, in ascending order.
///
/// Real parameters default to α over [0, π) in 181 points, δ over [0, 2π) in
/// 16 points and η over [0, 1] in 101 points. An explicit `--from`/`--to`
/// range is inclusive at both ends.
pub fn range_values(family: &FamilyArgs, range: &RangeArgs) -> Result<Vec<f64>> {
    let param = range.over;
    if !applies(family.family, param) {
        return Err(CliError::Usage(format!(
            "{} has no parameter {}",
            family_name(family.family),
            param.name()
        )));
    }
    if range.steps == Some(0) {
        return Err(CliError::Usage("--steps must be positive".to_string()));
    }
    let values = if param.is_integer() {
        if range.steps.is_some() {
            return Err(CliError::Usage(format!(
                "--steps does not apply to integer parameter {}",
                param.name()
            )));
        }
        let (lo, hi) = match param {
            Param::Excitation => {
                let n_qubits = family.qubits.ok_or_else(|| missing(family.family, "N"))?;
                let top = match family.family {
                    Family::Superposition => n_qubits.saturating_sub(2),
                    _ => n_qubits,
                };
                (0, top)
            }
            _ => {
                let n = family.excitation.unwrap_or(0);
                let floor = match family.family {
                    Family::Superposition => n + 2,
                    _ => n,
                };
                (floor.max(2), 50)
            }
        };
        let lo = range.from.map(|v| whole(v, "from")).transpose()?.unwrap_or(lo);
        let hi = range.to.map(|v| whole(v, "to")).transpose()?.unwrap_or(hi);
        (lo..=hi).map(|v| v as f64).collect()
    } else {
        match (range.from, range.to) {
            (None, None) => {
                let (hi, default_count, include_end) = match param {
                    Param::Alpha => (PI, 181, false),
                    Param::Delta => (TAU, 16, false),
                    _ => (1.0, 101, true),
                };
                let count = range.steps.unwrap_or(default_count);
                linspace(0.0, hi, count, include_end)
            }
            (Some(lo), Some(hi)) => {
                if lo.is_nan() || hi.is_nan() || lo > hi {
                    return Err(CliError::Usage(format!("empty range: --from {lo} exceeds --to {hi}")));
                }
                linspace(lo, hi, range.steps.unwrap_or(101), true)
            }
            _ => return Err(CliError::Usage("give both --from and --to, or neither".to_string())),
        }
    };
    if values.is_empty() {
        return Err(CliError::Usage(format!("empty range for {}", param.name())));
    }
    Ok(values)
}

/// Points of a sweep, validated before any work starts.
pub fn range_points(family: &FamilyArgs, range: &RangeArgs) -> Result<Vec<(f64, FamilyPoint)>> {
    range_values(family, range)?
        .into_iter()
        .map(|v| Ok((v, family.point_at(range.over, v)?)))
        .collect()
}

/// One row per point: the parameter followed by [`SWEEP_COLUMNS`].
pub fn sweep_rows(points: &[(f64, FamilyPoint)]) -> Result<Vec<Vec<f64>>> {
    points
        .par_iter()
        .map(|&(value, p)| {
            let r = full_report(&family_xstate(&p)?, None)?;
            Ok(vec![
                value,
                r.discord,
                r.eof,
                r.concurrence,
                r.mutual_information,
                r.classical_correlation,
            ])
        })
        .collect()
}

/// Long-format `(parameter, θ, min_φ S_{A|B})` rows with θ on an inclusive
/// `[0, π]` grid.
pub fn landscape_rows(points: &[(f64, FamilyPoint)], n_theta: usize, n_phi: usize) -> Result<Vec<Vec<f64>>> {
    if n_theta < 2 || n_phi == 0 {
        return Err(CliError::Usage(format!(
            "landscape grid needs at least 2 θ points and 1 φ point, got {n_theta}×{n_phi}"
        )));
    }
    let states = points
        .iter()
        .map(|&(v, p)| Ok((v, family_xstate(&p)?)))
        .collect::<Result<Vec<_>>>()?;
    let cells: Vec<(usize, usize)> = (0..states.len())
        .flat_map(|a| (0..n_theta).map(move |i| (a, i)))
        .collect();
    Ok(cells
        .par_iter()
        .map(|&(a, i)| {
            let (value, s) = &states[a];
            let theta = if i == n_theta - 1 {
                PI
            } else {
                PI * i as f64 / (n_theta - 1) as f64
            };
            vec![*value, theta, min_over_phi(s, theta, n_phi, REFINE_TOL)]
        })
        .collect())
}

fn header_with(first: &str, rest: &[&str]) -> Vec<String> {
    std::iter::once(first)
        .chain(rest.iter().copied())
        .map(str::to_string)
        .collect()
}

pub fn sweep(args: &SweepArgs, invocation: &str) -> Result<()> {
    let points = range_points(&args.family, &args.range)?;
    let table = Table {
        header: header_with(args.range.over.name(), &SWEEP_COLUMNS),
        key_columns: 1,
        rows: sweep_rows(&points)?,
    };
    write_csv(&args.out.out, args.out.force, invocation, &table)
}

pub fn landscape(args: &LandscapeArgs, invocation: &str) -> Result<()> {
    let points = range_points(&args.family, &args.range)?;
    let table = Table {
        header: header_with(args.range.over.name(), &["theta", "conditional_entropy"]),
        key_columns: 2,
        rows: landscape_rows(&points, args.grid_theta, args.grid_phi)?,
    };
    write_csv(&args.out.out, args.out.force, invocation, &table)
}

fn io_stdout(e: std::io::Error) -> CliError {
    CliError::io("<stdout>", e)
}

fn describe(p: &FamilyPoint) -> Vec<(&'static str, String)> {
    match *p {
        FamilyPoint::Dicke { n_qubits, excitation } => vec![
            ("family", "dicke".into()),
            ("N", n_qubits.to_string()),
            ("n", excitation.to_string()),
        ],
        FamilyPoint::Superposition {
            n_qubits,
            excitation,
            alpha,
            delta,
        } => vec![
            ("family", "superposition".into()),
            ("N", n_qubits.to_string()),
            ("n", excitation.to_string()),
            ("alpha", sig12(alpha)),
            ("delta", sig12(delta)),
        ],
        FamilyPoint::Scs { n_qubits, eta, parity } => vec![
            ("family", "scs".into()),
            ("N", n_qubits.to_string()),
            ("eta", sig12(eta)),
            ("parity", parity.to_string()),
        ],
    }
}

/// Prints `key=value` lines. With `--verify`, a bound that is not tight is
/// reported and then turned into a verification failure.
pub fn report(args: &ReportArgs, out: &mut dyn Write) -> Result<()> {
    let p = args.family.point()?;
    let s = family_xstate(&p)?;
    let settings = OracleSettings {
        grid: Grid::new(args.grid_theta, args.grid_phi)?,
        refine_tol: REFINE_TOL,
    };
    let r = full_report(&s, args.verify.then_some(&settings))?;
    let mut lines = describe(&p);
    let fields = [
        ("v_plus", s.v_plus()),
        ("v_minus", s.v_minus()),
        ("y", s.y()),
        ("u_abs", s.u().norm()),
        ("discord", r.discord),
        ("eof", r.eof),
        ("concurrence", r.concurrence),
        ("mutual_information", r.mutual_information),
        ("classical_correlation", r.classical_correlation),
        ("joint_entropy", r.joint_entropy),
        ("reduced_entropy", r.reduced_entropy),
        ("s0", r.s0),
        ("s1", r.s1),
        ("optimal_theta", r.optimal_theta),
        ("optimal_phi", r.optimal_phi),
    ];
    lines.extend(fields.iter().map(|&(k, v)| (k, sig12(v))));
    if let Some(n) = r.numeric {
        lines.push(("numeric_discord", sig12(n.discord)));
        lines.push(("argmin_theta", sig12(n.argmin.theta())));
        lines.push(("argmin_phi", sig12(n.argmin.phi())));
    }
    if let Some(tight) = r.upper_bound_tight {
        lines.push(("tight", tight.to_string()));
    }
    for (k, v) in &lines {
        writeln!(out, "{k}={v}").map_err(io_stdout)?;
    }
    if r.upper_bound_tight == Some(false) {
        return Err(CliError::Verification(
            "closed-form conditional entropy exceeds the exhaustive minimum".to_string(),
        ));
    }
    Ok(())
}

fn given_or<T: Copy>(given: Option<T>, default: impl IntoIterator<Item = T>) -> Vec<T> {
    match given {
        Some(v) => vec![v],
        None => default.into_iter().collect(),
    }
}

/// Family grid for `verify`; each flag that is set pins its parameter.
pub fn verification_points(f: &FamilyArgs) -> Result<Vec<FamilyPoint>> {
    let mut points = Vec::new();
    match f.family {
        Family::Dicke => {
            for n_qubits in given_or(f.qubits, 2..=30) {
                for excitation in given_or(f.excitation, 0..=n_qubits) {
                    points.push(FamilyPoint::Dicke { n_qubits, excitation });
                }
            }
        }
        Family::Superposition => {
            let alphas = given_or(f.alpha, (0..17).map(|k| PI * k as f64 / 17.0));
            for n_qubits in given_or(f.qubits, 3..=12) {
                for excitation in given_or(f.excitation, 0..=n_qubits.saturating_sub(2)) {
                    for &alpha in &alphas {
                        points.push(FamilyPoint::Superposition {
                            n_qubits,
                            excitation,
                            alpha,
                            delta: f.delta.unwrap_or(0.0),
                        });
                    }
                }
            }
        }
        Family::Scs => {
            let etas = given_or(f.eta, (0..21).map(|k| k as f64 / 20.0));
            for n_qubits in given_or(f.qubits, 3..=30) {
                for &eta in &etas {
                    for parity in given_or(f.parity, [Parity::Even, Parity::Odd]) {
                        points.push(FamilyPoint::Scs { n_qubits, eta, parity });
                    }
                }
            }
        }
    }
    for p in &points {
        p.validate()?;
    }
    Ok(points)
}

pub fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<()> {
    let points = verification_points(&args.family)?;
    let states = points.iter().map(family_xstate).collect::<xdiscord::Result<Vec<_>>>()?;
    let settings = OracleSettings {
        grid: Grid::new(args.grid_theta, args.grid_phi)?,
        refine_tol: REFINE_TOL,
    };
    let violations = tightness_scan(&states, &settings, args.tol)?;
    writeln!(out, "checked={} violations={}", states.len(), violations.len()).map_err(io_stdout)?;
    for v in &violations {
        writeln!(
            out,
            "{:?} kind={:?} s0={} s1={} numeric_minimum={} argmin_theta={} argmin_phi={}",
            points[v.index],
            v.kind,
            sig12(v.s0),
            sig12(v.s1),
            sig12(v.numeric_minimum),
            sig12(v.argmin.theta()),
            sig12(v.argmin.phi()),
        )
        .map_err(io_stdout)?;
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(format!(
            "{} tightness violations",
            violations.len()
        )))
    }
}
