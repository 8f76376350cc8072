//! Subcommand implementations.
//!
//! Every command validates its flag combination before touching the
//! filesystem or drawing randomness, writes files only under the paths named
//! by flags (plus the documented `_plot.py` / `_boundary.csv` siblings), and
//! reports rows through [`Record`] so CSV and JSON stay field-identical.

use std::collections::HashMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use croissant_core::analyze_epochs_with;

use crate::emit::{
    boundary_csv_path, boundary_plot_script, plot_script_path, read_file, sweep_plot_script,
    write_atomic,
};
use crate::record::{render, Format, Record};
use crate::{CliError, GenerateArgs, ModelKind, SweepArgs, SweepModelKind};

pub fn analyze(input: &Path, format: Format) -> Result<(), CliError> {
    let text = read_file(input)?;
    let g = croissant_core::Graph::parse_edge_list(&text)?;
    let spectrum = croissant_core::Spectrum::of(&g)?;
    let point = croissant_core::locate(&g)?;
    let record = Record::new()
        .int("n", g.node_count() as u64)
        .int("m", g.edge_count() as u64)
        .float("rho", point.rho)
        .floats("spectrum", spectrum.eigenvalues().to_vec())
        .float("c_raw", point.c_raw)
        .float("c_norm", point.c_norm);
    print_records(&[record], format, None)
}

pub fn generate(args: &GenerateArgs, format: Format) -> Result<(), CliError> {
    validate_generate_flags(args)?;
    let n = args.n;
    let (graph, descriptor, seed_used) = match args.model {
        ModelKind::Er => {
            let p = args.p.unwrap();
            let seed = args.seed.unwrap_or_else(drawn_seed);
            let params = croissant_core::ModelParams::ErdosRenyi { n, p };
            (params.generate(seed)?, params.describe(), Some(seed))
        }
        ModelKind::Ws => {
            let (k, beta) = (args.k.unwrap(), args.beta.unwrap());
            let seed = args.seed.unwrap_or_else(drawn_seed);
            let params = croissant_core::ModelParams::WattsStrogatz { n, k, beta };
            (params.generate(seed)?, params.describe(), Some(seed))
        }
        ModelKind::Ba => {
            let ell = args.ell.unwrap();
            let seed = args.seed.unwrap_or_else(drawn_seed);
            let params = croissant_core::ModelParams::BarabasiAlbert { n, ell };
            (params.generate(seed)?, params.describe(), Some(seed))
        }
        ModelKind::Multistar => {
            let k = args.k.unwrap();
            let g = croissant_core::multi_star(n, k)?;
            (g, format!("multistar(n={n}, k={k})"), None)
        }
        ModelKind::Circulant => {
            let k = args.k.unwrap();
            let g = croissant_core::circulant(n, k)?;
            (g, format!("circulant(n={n}, k={k})"), None)
        }
    };
    let point = croissant_core::locate(&graph)?;
    write_atomic(&args.output, graph.to_edge_list().as_bytes())?;
    let mut record = Record::new()
        .text("model", descriptor)
        .int("n", graph.node_count() as u64)
        .int("m", graph.edge_count() as u64);
    if let Some(seed) = seed_used {
        record = record.int("seed", seed);
    }
    let record = record
        .float("rho", point.rho)
        .float("c_raw", point.c_raw)
        .float("c_norm", point.c_norm);
    print_records(&[record], format, None)
}

fn validate_generate_flags(args: &GenerateArgs) -> Result<(), CliError> {
    let model = args.model;
    let want = |name: &str, present: bool| -> Result<(), CliError> {
        if present {
            Ok(())
        } else {
            Err(CliError::Usage(format!(
                "model {} requires {name}",
                model.as_str()
            )))
        }
    };
    let reject = |name: &str, present: bool| -> Result<(), CliError> {
        if present {
            Err(CliError::Usage(format!(
                "model {} does not take {name}",
                model.as_str()
            )))
        } else {
            Ok(())
        }
    };
    match model {
        ModelKind::Er => {
            want("--p", args.p.is_some())?;
            reject("--k", args.k.is_some())?;
            reject("--beta", args.beta.is_some())?;
            reject("--ell", args.ell.is_some())?;
        }
        ModelKind::Ws => {
            want("--k", args.k.is_some())?;
            want("--beta", args.beta.is_some())?;
            reject("--p", args.p.is_some())?;
            reject("--ell", args.ell.is_some())?;
        }
        ModelKind::Ba => {
            want("--ell", args.ell.is_some())?;
            reject("--p", args.p.is_some())?;
            reject("--k", args.k.is_some())?;
            reject("--beta", args.beta.is_some())?;
        }
        ModelKind::Multistar | ModelKind::Circulant => {
            want("--k", args.k.is_some())?;
            reject("--p", args.p.is_some())?;
            reject("--beta", args.beta.is_some())?;
            reject("--ell", args.ell.is_some())?;
            reject("--seed (the model is deterministic)", args.seed.is_some())?;
        }
    }
    Ok(())
}

/// Seed for runs that did not pass `--seed`, reported in the output so the
/// run can be repeated exactly.
fn drawn_seed() -> u64 {
    let nanos = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .expect("system clock before 1970")
        .subsec_nanos() as u64;
    let secs = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .expect("system clock before 1970")
        .as_secs();
    (secs << 30) ^ (nanos << 16) ^ u64::from(std::process::id())
}

fn boundary_records(n: usize) -> Result<Vec<Record>, CliError> {
    let upper = croissant_core::upper_boundary(n)?;
    let lower = croissant_core::lower_boundary(n)?;
    let mut records = Vec::new();
    for polyline in [upper, lower] {
        let kind = polyline.kind.as_str();
        for pt in &polyline.points {
            records.push(
                Record::new()
                    .text("boundary", kind)
                    .float("rho", pt.rho)
                    .float("c_raw", pt.c_raw)
                    .float("c_norm", pt.c_norm),
            );
        }
    }
    Ok(records)
}

pub fn boundary(n: usize, output: &Path, emit_plot: bool, format: Format) -> Result<(), CliError> {
    let records = boundary_records(n)?;
    let bytes = render(&records, format, None)?;
    write_atomic(output, &bytes)?;
    if emit_plot {
        require_csv_for_plots(format)?;
        let script = boundary_plot_script(output, n)?;
        write_atomic(&plot_script_path(output)?, script.as_bytes())?;
    }
    Ok(())
}

pub fn sweep(args: &SweepArgs, format: Format) -> Result<(), CliError> {
    let grid = build_grid(args)?;
    if args.emit_plot {
        require_csv_for_plots(format)?;
    }
    let base_seed = args.seed.unwrap_or_else(drawn_seed);
    let spec = croissant_core::SweepSpec {
        grid,
        replicates: args.replicates,
        base_seed,
    };
    let results = croissant_core::run_sweep(&spec)?;
    let rows: Vec<Record> = results
        .iter()
        .map(|r| sweep_row(r, base_seed))
        .collect();
    let comment = format!(
        "croissant {} sweep model={} n={} replicates={} base_seed={}",
        env!("CARGO_PKG_VERSION"),
        args.model.as_str(),
        args.n,
        args.replicates,
        base_seed
    );
    let bytes = render(&rows, format, Some(&comment))?;
    write_atomic(&args.output, &bytes)?;
    if args.emit_plot {
        let bnd_path = boundary_csv_path(&args.output)?;
        let bnd_bytes = render(&boundary_records(args.n)?, Format::Csv, None)?;
        write_atomic(&bnd_path, &bnd_bytes)?;
        let script = sweep_plot_script(&args.output, &bnd_path, args.model.as_str(), args.n)?;
        write_atomic(&plot_script_path(&args.output)?, script.as_bytes())?;
    }
    Ok(())
}

fn require_csv_for_plots(format: Format) -> Result<(), CliError> {
    if format == Format::Csv {
        Ok(())
    } else {
        Err(CliError::Usage(
            "--emit-plot requires --format csv (the script reads the CSV back)".into(),
        ))
    }
}

fn sweep_row(record: &croissant_core::SweepRecord, base_seed: u64) -> Record {
    use croissant_core::ModelParams::*;
    let mut row = Record::new()
        .text("model", record.params.model_name())
        .int("n", record.params.node_count() as u64);
    match record.params {
        ErdosRenyi { p, .. } => row = row.float("p", p),
        WattsStrogatz { k, beta, .. } => row = row.int("k", k as u64).float("beta", beta),
        BarabasiAlbert { ell, .. } => row = row.int("ell", ell as u64),
    }
    let s = &record.stats;
    row.int("replicates", record.replicates as u64)
        .int("base_seed", base_seed)
        .float("rho_mean", s.rho_mean)
        .float("rho_std", s.rho_std)
        .float("c_mean", s.c_mean)
        .float("c_std", s.c_std)
        .float("c_norm_mean", s.c_norm_mean)
        .float("c_norm_std", s.c_norm_std)
}

/// Grid points from 0 to 1 inclusive in steps of `step`; the final point is
/// pinned to exactly 1 so the endpoint never drifts with rounding.
fn unit_grid(step: f64, flag: &str) -> Result<Vec<f64>, CliError> {
    if !step.is_finite() || step <= 0.0 || step > 1.0 {
        return Err(CliError::Usage(format!(
            "{flag} must lie in (0, 1], got {step}"
        )));
    }
    let mut values = Vec::new();
    let mut i = 0u32;
    loop {
        let v = f64::from(i) * step;
        if v >= 1.0 - 1e-12 {
            values.push(1.0);
            break;
        }
        values.push(v);
        i += 1;
    }
    Ok(values)
}

fn default_ws_ks(n: usize) -> Vec<usize> {
    let cap = (n - 1) / 2;
    [1, 2, 5, 10, 25, 49]
        .into_iter()
        .filter(|&k| k <= cap)
        .collect()
}

/// Attachment counts concentrated where the complexity curve bends: every
/// value up to 20, even values to 40, then fives to 95, clipped to n-1.
/// Always ends at n-1 itself, where the family meets the upper boundary.
fn default_ba_ells(n: usize) -> Vec<usize> {
    let mut ells: Vec<usize> = (1..=20)
        .chain((22..=40).step_by(2))
        .chain((45..=95).step_by(5))
        .filter(|&e| e <= n - 1)
        .collect();
    if ells.last() != Some(&(n - 1)) {
        ells.push(n - 1);
    }
    ells
}

fn build_grid(args: &SweepArgs) -> Result<Vec<croissant_core::ModelParams>, CliError> {
    use croissant_core::ModelParams::*;
    let n = args.n;
    if n < 3 {
        return Err(CliError::Usage(format!(
            "--n must be at least 3 to place graphs in the plane, got {n}"
        )));
    }
    if args.replicates == 0 {
        return Err(CliError::Usage("--replicates must be at least 1".into()));
    }
    let reject = |name: &str, given: bool| -> Result<(), CliError> {
        if given {
            Err(CliError::Usage(format!(
                "model {} does not take {name}",
                args.model.as_str()
            )))
        } else {
            Ok(())
        }
    };
    let grid = match args.model {
        SweepModelKind::Er => {
            reject("--k", !args.k.is_empty())?;
            reject("--ell", !args.ell.is_empty())?;
            unit_grid(args.p_step, "--p-step")?
                .into_iter()
                .map(|p| ErdosRenyi { n, p })
                .collect()
        }
        SweepModelKind::Ws => {
            reject("--ell", !args.ell.is_empty())?;
            let cap = (n - 1) / 2;
            let ks = if args.k.is_empty() {
                default_ws_ks(n)
            } else {
                args.k.clone()
            };
            if ks.is_empty() {
                return Err(CliError::Usage(format!(
                    "no ring half-widths fit n={n}; pass --k explicitly"
                )));
            }
            for &k in &ks {
                if k == 0 || k > cap {
                    return Err(CliError::Usage(format!(
                        "--k {k} outside 1..={cap} for n={n}"
                    )));
                }
            }
            let betas = unit_grid(args.beta_step, "--beta-step")?;
            let mut grid = Vec::with_capacity(ks.len() * betas.len());
            for &k in &ks {
                for &beta in &betas {
                    grid.push(WattsStrogatz { n, k, beta });
                }
            }
            grid
        }
        SweepModelKind::Ba => {
            reject("--k", !args.k.is_empty())?;
            let ells = if args.ell.is_empty() {
                default_ba_ells(n)
            } else {
                args.ell.clone()
            };
            for &ell in &ells {
                if ell == 0 || ell > n - 1 {
                    return Err(CliError::Usage(format!(
                        "--ell {ell} outside 1..={} for n={n}",
                        n - 1
                    )));
                }
            }
            ells.into_iter().map(|ell| BarabasiAlbert { n, ell }).collect()
        }
    };
    Ok(grid)
}

pub fn ingest(
    manifest: &Path,
    threshold: f64,
    output: Option<&Path>,
    format: Format,
) -> Result<(), CliError> {
    if !(0.0..=1.0).contains(&threshold) {
        return Err(CliError::Usage(format!(
            "--threshold must lie in [0, 1], got {threshold}"
        )));
    }
    let entries = croissant_core::parse_manifest(&read_file(manifest)?)?;
    let mut order: Vec<&str> = Vec::new();
    let mut groups: HashMap<&str, Vec<&croissant_core::ManifestEntry>> = HashMap::new();
    for entry in &entries {
        let slot = groups.entry(&entry.label).or_default();
        if slot.is_empty() {
            order.push(&entry.label);
        }
        slot.push(entry);
    }
    let mut rows = Vec::new();
    for label in order {
        let group = &groups[label];
        let mut matrices = Vec::with_capacity(group.len());
        for entry in group {
            let text = read_file(Path::new(&entry.path))?;
            let matrix = croissant_core::ConnectivityMatrix::parse(&text).map_err(|source| {
                CliError::InFile {
                    path: entry.path.clone(),
                    source,
                }
            })?;
            matrices.push(matrix);
        }
        let set = croissant_core::EpochSet::new(label, matrices)?;
        let thresholds: Vec<f64> = group
            .iter()
            .map(|e| e.threshold.unwrap_or(threshold))
            .collect();
        let summary = analyze_epochs_with(&set, &thresholds)?;
        let s = &summary.stats;
        rows.push(
            Record::new()
                .text("label", summary.label)
                .int("n", summary.n as u64)
                .int("epochs", summary.epochs as u64)
                .float("threshold", summary.threshold)
                .float("rho_mean", s.rho_mean)
                .float("rho_std", s.rho_std)
                .float("c_mean", s.c_mean)
                .float("c_std", s.c_std)
                .float("c_norm_mean", s.c_norm_mean)
                .float("c_norm_std", s.c_norm_std),
        );
    }
    let bytes = render(&rows, format, None)?;
    match output {
        Some(path) => write_atomic(path, &bytes),
        None => print_bytes(&bytes),
    }
}

fn print_records(records: &[Record], format: Format, comment: Option<&str>) -> Result<(), CliError> {
    print_bytes(&render(records, format, comment)?)
}

fn print_bytes(bytes: &[u8]) -> Result<(), CliError> {
    std::io::stdout()
        .write_all(bytes)
        .map_err(|source| CliError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        })
}
