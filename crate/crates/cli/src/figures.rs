//! Data behind figures 2 to 8: one CSV per panel, named `fig<k>_<panel>.csv`.

use std::f64::consts::PI;
use std::path::PathBuf;

use rayon::prelude::*;
use xdiscord::optimize::golden_section_max;
use xdiscord::{discord_compact, family_xstate, FamilyPoint, Parity};

use crate::commands::{landscape_rows, sweep_rows, SWEEP_COLUMNS};
use crate::error::{CliError, Result};
use crate::output::{write_csv, Table};

/// η resolution of the search for the maximum discord.
pub const ETA_TOL: f64 = 1e-9;

const LANDSCAPE_THETA: usize = 181;
const LANDSCAPE_PHI: usize = 360;
const ALPHA_STEPS: usize = 181;
const ETA_STEPS: usize = 101;

#[derive(Debug, Clone, PartialEq)]
pub struct Panel {
    pub name: String,
    /// Generating parameters, recorded in the file's metadata line.
    pub description: String,
    pub table: Table,
}

impl Panel {
    pub fn file_name(&self, id: u8) -> String {
        format!("fig{id}_{}.csv", self.name)
    }
}

fn columns(first: &str, rest: &[&str]) -> Vec<String> {
    std::iter::once(first)
        .chain(rest.iter().copied())
        .map(str::to_string)
        .collect()
}

fn alpha_grid() -> impl Iterator<Item = f64> {
    (0..ALPHA_STEPS).map(|k| PI * k as f64 / ALPHA_STEPS as f64)
}

fn eta_grid() -> impl Iterator<Item = f64> {
    (0..ETA_STEPS).map(|k| k as f64 / (ETA_STEPS - 1) as f64)
}

fn dicke_over_n(n_qubits: usize) -> Result<Panel> {
    let points: Vec<_> = (1..n_qubits)
        .map(|excitation| (excitation as f64, FamilyPoint::Dicke { n_qubits, excitation }))
        .collect();
    Ok(Panel {
        name: format!("N{n_qubits}"),
        description: format!("dicke N={n_qubits} n=1..{}", n_qubits - 1),
        table: Table {
            header: columns("n", &SWEEP_COLUMNS),
            key_columns: 1,
            rows: sweep_rows(&points)?,
        },
    })
}

fn dicke_over_big_n(excitation: usize) -> Result<Panel> {
    let points: Vec<_> = (3..=50)
        .map(|n_qubits| (n_qubits as f64, FamilyPoint::Dicke { n_qubits, excitation }))
        .collect();
    Ok(Panel {
        name: format!("n{excitation}"),
        description: format!("dicke n={excitation} N=3..50"),
        table: Table {
            header: columns("N", &SWEEP_COLUMNS),
            key_columns: 1,
            rows: sweep_rows(&points)?,
        },
    })
}

fn superposition_over_alpha(n_qubits: usize, excitation: usize) -> Result<Panel> {
    let points: Vec<_> = alpha_grid()
        .map(|alpha| {
            let p = FamilyPoint::Superposition {
                n_qubits,
                excitation,
                alpha,
                delta: 0.0,
            };
            (alpha, p)
        })
        .collect();
    Ok(Panel {
        name: format!("N{n_qubits}_n{excitation}"),
        description: format!("superposition N={n_qubits} n={excitation} delta=0 alpha={ALPHA_STEPS} points in [0,pi)"),
        table: Table {
            header: columns("alpha", &SWEEP_COLUMNS),
            key_columns: 1,
            rows: sweep_rows(&points)?,
        },
    })
}

fn scs_over_eta(n_qubits: usize, parity: Parity) -> Result<Panel> {
    let points: Vec<_> = eta_grid()
        .map(|eta| (eta, FamilyPoint::Scs { n_qubits, eta, parity }))
        .collect();
    Ok(Panel {
        name: format!("N{n_qubits}_{parity}"),
        description: format!("scs N={n_qubits} parity={parity} eta={ETA_STEPS} points in [0,1]"),
        table: Table {
            header: columns("eta", &SWEEP_COLUMNS),
            key_columns: 1,
            rows: sweep_rows(&points)?,
        },
    })
}

/// Largest discord over η ∈ [0, 1] and where it occurs: a 101-point scan,
/// then golden-section refinement between the neighbours of the best point.
pub fn max_discord_over_eta(n_qubits: usize, parity: Parity) -> Result<(f64, f64)> {
    let discord = |eta: f64| -> Result<f64> {
        Ok(discord_compact(&family_xstate(&FamilyPoint::Scs { n_qubits, eta, parity })?).discord)
    };
    let grid: Vec<f64> = eta_grid().collect();
    let values = grid.iter().map(|&e| discord(e)).collect::<Result<Vec<_>>>()?;
    let best = (0..values.len()).fold(0, |b, k| if values[k] > values[b] { k } else { b });
    let lo = grid[best.saturating_sub(1)];
    let hi = grid[(best + 1).min(grid.len() - 1)];
    // family_xstate only fails outside [0, 1], which the bracket never leaves
    let (eta, d) = golden_section_max(|e| discord(e).unwrap_or(f64::NEG_INFINITY), lo, hi, ETA_TOL);
    Ok(if d >= values[best] {
        (d, eta)
    } else {
        (values[best], grid[best])
    })
}

fn scs_maxima() -> Result<Panel> {
    let rows = (3..=50usize)
        .into_par_iter()
        .map(|n_qubits| {
            let (even, even_eta) = max_discord_over_eta(n_qubits, Parity::Even)?;
            let (odd, odd_eta) = max_discord_over_eta(n_qubits, Parity::Odd)?;
            Ok(vec![n_qubits as f64, even, even_eta, odd, odd_eta])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Panel {
        name: "max".to_string(),
        description: format!("scs max discord over eta in [0,1] N=3..50 eta tol {ETA_TOL:e}"),
        table: Table::new(
            &[
                "N",
                "even_max_discord",
                "even_argmax_eta",
                "odd_max_discord",
                "odd_argmax_eta",
            ],
            1,
            rows,
        ),
    })
}

fn landscape_panel(name: &str, description: String, param: &str, points: Vec<(f64, FamilyPoint)>) -> Result<Panel> {
    Ok(Panel {
        name: name.to_string(),
        description: format!("{description} theta={LANDSCAPE_THETA} points phi={LANDSCAPE_PHI} points"),
        table: Table {
            header: columns(param, &["theta", "conditional_entropy"]),
            key_columns: 2,
            rows: landscape_rows(&points, LANDSCAPE_THETA, LANDSCAPE_PHI)?,
        },
    })
}

/// Every panel of figure `id`.
pub fn figure(id: u8) -> Result<Vec<Panel>> {
    match id {
        2 => {
            let points = (0..=100)
                .map(|excitation| {
                    let p = FamilyPoint::Dicke {
                        n_qubits: 100,
                        excitation,
                    };
                    (excitation as f64, p)
                })
                .collect();
            Ok(vec![landscape_panel(
                "N100",
                "dicke N=100 n=0..100".into(),
                "n",
                points,
            )?])
        }
        3 => Ok(vec![dicke_over_n(9)?, dicke_over_n(12)?]),
        4 => Ok(vec![dicke_over_big_n(1)?, dicke_over_big_n(3)?]),
        5 => {
            let points = alpha_grid()
                .map(|alpha| {
                    let p = FamilyPoint::Superposition {
                        n_qubits: 50,
                        excitation: 30,
                        alpha,
                        delta: 0.0,
                    };
                    (alpha, p)
                })
                .collect();
            let description = format!("superposition N=50 n=30 delta=0 alpha={ALPHA_STEPS} points in [0,pi)");
            Ok(vec![landscape_panel("N50_n30", description, "alpha", points)?])
        }
        6 => [(4, 1), (6, 2), (20, 9), (50, 24)]
            .into_iter()
            .map(|(n_qubits, excitation)| superposition_over_alpha(n_qubits, excitation))
            .collect(),
        7 => [3, 5, 10, 50]
            .into_iter()
            .flat_map(|n| [Parity::Even, Parity::Odd].map(|parity| scs_over_eta(n, parity)))
            .collect(),
        8 => Ok(vec![scs_maxima()?]),
        other => Err(CliError::Usage(format!("unknown figure {other}; expected 2 to 8"))),
    }
}

/// Writes every panel of figure `id` into `dir` and returns the paths.
pub fn write_figure(id: u8, dir: &std::path::Path, force: bool, invocation: &str) -> Result<Vec<PathBuf>> {
    let panels = figure(id)?;
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let mut paths = Vec::with_capacity(panels.len());
    for panel in &panels {
        let path = dir.join(panel.file_name(id));
        write_csv(
            &path,
            force,
            &format!("{invocation} | {}", panel.description),
            &panel.table,
        )?;
        paths.push(path);
    }
    Ok(paths)
}
