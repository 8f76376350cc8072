//! File output helpers: atomic writes and plot-script generation.

use std::fs;
use std::path::{Path, PathBuf};

use crate::CliError;

fn io_err(path: &Path, source: std::io::Error) -> CliError {
    CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Writes bytes through a sibling temporary file and renames it into place,
/// so an interrupted run never leaves a partial file under the final name.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let name = path
        .file_name()
        .ok_or_else(|| CliError::Usage(format!("`{}` is not a file path", path.display())))?;
    let mut tmp_name = name.to_os_string();
    tmp_name.push(format!(".tmp-{}", std::process::id()));
    let tmp = path.with_file_name(tmp_name);
    if let Err(e) = fs::write(&tmp, bytes) {
        let _ = fs::remove_file(&tmp);
        return Err(io_err(&tmp, e));
    }
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        io_err(path, e)
    })
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| io_err(path, e))
}

/// `data.csv` -> `data_plot.py`, next to the data file.
pub fn plot_script_path(output: &Path) -> Result<PathBuf, CliError> {
    let stem = output
        .file_stem()
        .ok_or_else(|| CliError::Usage(format!("`{}` is not a file path", output.display())))?;
    let mut name = stem.to_os_string();
    name.push("_plot.py");
    Ok(output.with_file_name(name))
}

/// `data.csv` -> `data_boundary.csv`, next to the data file.
pub fn boundary_csv_path(output: &Path) -> Result<PathBuf, CliError> {
    let stem = output
        .file_stem()
        .ok_or_else(|| CliError::Usage(format!("`{}` is not a file path", output.display())))?;
    let mut name = stem.to_os_string();
    name.push("_boundary.csv");
    Ok(output.with_file_name(name))
}

fn file_name_str(path: &Path) -> Result<String, CliError> {
    path.file_name()
        .and_then(|n| n.to_str())
        .map(str::to_string)
        .ok_or_else(|| CliError::Usage(format!("`{}` is not a UTF-8 file name", path.display())))
}

const READ_ROWS: &str = r##"def read_rows(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(line for line in fh if not line.startswith("#")))
"##;

/// A matplotlib script that draws both boundary polylines from a CSV with
/// columns boundary,rho,c_raw,c_norm.
pub fn boundary_plot_script(csv_path: &Path, n: usize) -> Result<String, CliError> {
    let csv_name = file_name_str(csv_path)?;
    let png_name = format!("{}.png", csv_path.file_stem().unwrap().to_string_lossy());
    Ok(format!(
        r#"#!/usr/bin/env python3
"""Draw the admissible-region boundaries written by `croissant boundary`."""

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

HERE = Path(__file__).resolve().parent
SOURCE = HERE / "{csv_name}"

{READ_ROWS}

rows = read_rows(SOURCE)
for kind, style in (("upper", "o-"), ("lower", "s-")):
    pts = [(float(r["rho"]), float(r["c_norm"])) for r in rows if r["boundary"] == kind]
    xs, ys = zip(*pts)
    plt.plot(xs, ys, style, markersize=3, label=f"{{kind}} boundary")
plt.xlabel("link density")
plt.ylabel("normalized complexity")
plt.title("admissible region, n={n}")
plt.legend()
out = HERE / "{png_name}"
plt.savefig(out, dpi=150, bbox_inches="tight")
print(f"wrote {{out}}")
"#
    ))
}

/// A matplotlib script that draws a sweep's aggregated points with error
/// bars on top of the boundary polylines for the same node count.
pub fn sweep_plot_script(
    sweep_csv: &Path,
    boundary_csv: &Path,
    model: &str,
    n: usize,
) -> Result<String, CliError> {
    let sweep_name = file_name_str(sweep_csv)?;
    let boundary_name = file_name_str(boundary_csv)?;
    let png_name = format!("{}.png", sweep_csv.file_stem().unwrap().to_string_lossy());
    Ok(format!(
        r#"#!/usr/bin/env python3
"""Draw a `croissant sweep` ensemble over the region boundaries."""

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

HERE = Path(__file__).resolve().parent
SWEEP = HERE / "{sweep_name}"
BOUNDARY = HERE / "{boundary_name}"

{READ_ROWS}

for kind, style in (("upper", "-"), ("lower", "-")):
    pts = [(float(r["rho"]), float(r["c_norm"])) for r in read_rows(BOUNDARY) if r["boundary"] == kind]
    xs, ys = zip(*pts)
    plt.plot(xs, ys, style, color="gray", linewidth=1, label=f"{{kind}} boundary")

rows = read_rows(SWEEP)
xs = [float(r["rho_mean"]) for r in rows]
ys = [float(r["c_norm_mean"]) for r in rows]
yerr = [float(r["c_norm_std"]) for r in rows]
plt.errorbar(xs, ys, yerr=yerr, fmt=".", capsize=2, label="{model} sweep")
plt.xlabel("link density")
plt.ylabel("normalized complexity")
plt.title("{model} sweep, n={n}")
plt.legend()
out = HERE / "{png_name}"
plt.savefig(out, dpi=150, bbox_inches="tight")
print(f"wrote {{out}}")
"#
    ))
}
