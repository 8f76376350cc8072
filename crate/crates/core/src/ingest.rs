//! Ingestion of real-valued connectivity matrices.
//!
//! A connectivity matrix holds pairwise coupling strengths in [0, 1]
//! (symmetric within 1e-9, diagonal ignored). Thresholding it produces a
//! simple graph, and an ordered set of such matrices (epochs of a recording)
//! aggregates to the same plane statistics a sweep produces, carrying a
//! free-text label through to the output.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::region::locate;
use crate::sweep::{aggregate, PlaneStats};

/// Symmetry tolerance accepted at parse time.
const SYMMETRY_TOL: f64 = 1e-9;

/// A validated n-by-n matrix of coupling values in [0, 1].
///
/// The diagonal is stored as parsed but never interpreted: thresholding
/// cannot produce self-loops and validation does not range-check it.
#[derive(Debug, Clone, PartialEq)]
pub struct ConnectivityMatrix {
    n: usize,
    values: Vec<f64>,
}

impl ConnectivityMatrix {
    /// Parses `n` rows of `n` whitespace- or comma-separated reals.
    /// Rejects ragged rows, non-numeric tokens, non-finite values,
    /// asymmetry beyond 1e-9, and off-diagonal values outside [0, 1],
    /// each with row/column diagnostics.
    pub fn parse(text: &str) -> Result<ConnectivityMatrix> {
        let mut rows: Vec<(usize, Vec<f64>)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let mut row = Vec::new();
            for tok in body.split(|ch: char| ch == ',' || ch.is_whitespace()) {
                if tok.is_empty() {
                    continue;
                }
                let v: f64 = tok.parse().map_err(|_| Error::MatrixParse {
                    line,
                    message: format!("bad number `{tok}`"),
                })?;
                row.push(v);
            }
            rows.push((line, row));
        }
        if rows.is_empty() {
            return Err(Error::Empty {
                what: "matrix text",
            });
        }
        let n = rows.len();
        for (line, row) in &rows {
            if row.len() != n {
                return Err(Error::MatrixParse {
                    line: *line,
                    message: format!("expected {n} entries to match {n} rows, found {}", row.len()),
                });
            }
        }
        let values: Vec<f64> = rows.into_iter().flat_map(|(_, row)| row).collect();
        let matrix = ConnectivityMatrix { n, values };
        matrix.validate()?;
        Ok(matrix)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                let v = self.value(i, j);
                if !v.is_finite() {
                    return Err(Error::NonFiniteEntry { row: i, col: j });
                }
                if i != j && !(0.0..=1.0).contains(&v) {
                    return Err(Error::WeightOutOfRange { row: i, col: j, value: v });
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (self.value(i, j), self.value(j, i));
                if (a - b).abs() > SYMMETRY_TOL {
                    return Err(Error::Asymmetric { row: i, col: j, a, b });
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.n + j]
    }

    /// The graph whose edges are the strictly-above-threshold pairs.
    /// The upper-triangle entry decides for pairs that differ within the
    /// symmetry tolerance. Raising the threshold never adds edges.
    pub fn binarize(&self, threshold: f64) -> Result<Graph> {
        if !(0.0..=1.0).contains(&threshold) {
            return Err(Error::ParamOutOfRange {
                name: "threshold",
                value: threshold.to_string(),
                range: "[0, 1]".into(),
            });
        }
        let mut g = Graph::new(self.n)?;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.value(i, j) > threshold {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Renders rows of space-separated values, one line per row, in a form
    /// `parse` accepts back.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.value(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// An ordered, equally-sized batch of connectivity matrices under one label.
#[derive(Debug, Clone)]
pub struct EpochSet {
    pub label: String,
    pub matrices: Vec<ConnectivityMatrix>,
}

impl EpochSet {
    pub fn new(label: impl Into<String>, matrices: Vec<ConnectivityMatrix>) -> Result<EpochSet> {
        if matrices.is_empty() {
            return Err(Error::Empty { what: "epoch set" });
        }
        let n = matrices[0].dim();
        for (i, m) in matrices.iter().enumerate() {
            if m.dim() != n {
                return Err(Error::Epoch {
                    index: i,
                    source: Box::new(Error::SizeMismatch { left: n, right: m.dim() }),
                });
            }
        }
        Ok(EpochSet {
            label: label.into(),
            matrices,
        })
    }
}

/// Aggregated plane statistics of one epoch set.
#[derive(Debug, Clone)]
pub struct EpochSummary {
    pub label: String,
    pub n: usize,
    pub epochs: usize,
    pub threshold: f64,
    pub stats: PlaneStats,
}

/// Thresholds every epoch at the same value, locates the resulting graphs,
/// and aggregates. Failures carry the epoch index.
pub fn analyze_epochs(set: &EpochSet, threshold: f64) -> Result<EpochSummary> {
    let thresholds = vec![threshold; set.matrices.len()];
    analyze_epochs_with(set, &thresholds).map(|mut s| {
        s.threshold = threshold;
        s
    })
}

/// Same as [`analyze_epochs`] but with one threshold per epoch, for callers
/// who computed per-epoch thresholds elsewhere. The reported `threshold`
/// field is the first entry (all entries, in the uniform case).
pub fn analyze_epochs_with(set: &EpochSet, thresholds: &[f64]) -> Result<EpochSummary> {
    if thresholds.len() != set.matrices.len() {
        return Err(Error::SizeMismatch {
            left: set.matrices.len(),
            right: thresholds.len(),
        });
    }
    let points = set
        .matrices
        .iter()
        .zip(thresholds)
        .enumerate()
        .map(|(index, (m, &t))| {
            m.binarize(t)
                .and_then(|g| locate(&g))
                .map_err(|e| Error::Epoch {
                    index,
                    source: Box::new(e),
                })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EpochSummary {
        label: set.label.clone(),
        n: set.matrices[0].dim(),
        epochs: set.matrices.len(),
        threshold: thresholds[0],
        stats: aggregate(&points)?,
    })
}

/// One line of an ingest manifest: a label, a matrix file path, and an
/// optional per-epoch threshold overriding the command-level one.
#[derive(Debug, Clone, PartialEq)]
pub struct ManifestEntry {
    pub label: String,
    pub path: String,
    pub threshold: Option<f64>,
}

/// Parses a manifest: one `label,path[,threshold]` record per line,
/// comma-separated, `#` comments and blank lines ignored. Labels may carry
/// spaces but not commas. Epochs sharing a label form one epoch set, in
/// file order.
pub fn parse_manifest(text: &str) -> Result<Vec<ManifestEntry>> {
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split(',').map(str::trim).collect();
        if fields.len() < 2 || fields.len() > 3 {
            return Err(Error::ManifestParse {
                line,
                message: format!(
                    "expected `label,path[,threshold]`, found {} fields",
                    fields.len()
                ),
            });
        }
        if fields[0].is_empty() || fields[1].is_empty() {
            return Err(Error::ManifestParse {
                line,
                message: "label and path must be non-empty".into(),
            });
        }
        let threshold = match fields.get(2) {
            None => None,
            Some(tok) => Some(tok.parse::<f64>().map_err(|_| Error::ManifestParse {
                line,
                message: format!("bad threshold `{tok}`"),
            })?),
        };
        entries.push(ManifestEntry {
            label: fields[0].to_string(),
            path: fields[1].to_string(),
            threshold,
        });
    }
    if entries.is_empty() {
        return Err(Error::Empty { what: "manifest" });
    }
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_both_separators() {
        let a = ConnectivityMatrix::parse("0 0.7\n0.7 0\n").unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.value(0, 1), 0.7);
        let b = ConnectivityMatrix::parse("0, 0.7\n0.7, 0\n").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            ConnectivityMatrix::parse("0 0.7\n0.6 0\n"),
            Err(Error::Asymmetric { row: 0, col: 1, .. })
        ));
        assert!(matches!(
            ConnectivityMatrix::parse("0 1.2\n1.2 0\n"),
            Err(Error::WeightOutOfRange { row: 0, col: 1, .. })
        ));
        assert!(matches!(
            ConnectivityMatrix::parse("0 0.5 0.5\n0.5 0 0.5\n"),
            Err(Error::MatrixParse { line: 1, .. })
        ));
        assert!(matches!(
            ConnectivityMatrix::parse("0 x\n0.5 0\n"),
            Err(Error::MatrixParse { line: 1, .. })
        ));
        assert!(matches!(
            ConnectivityMatrix::parse("0 nan\nnan 0\n"),
            Err(Error::NonFiniteEntry { .. })
        ));
        assert!(matches!(
            ConnectivityMatrix::parse("  \n# empty\n"),
            Err(Error::Empty { .. })
        ));
    }

    #[test]
    fn diagonal_values_are_not_range_checked() {
        let m = ConnectivityMatrix::parse("5 0.5\n0.5 -3\n").unwrap();
        assert_eq!(m.value(0, 0), 5.0);
        assert_eq!(m.binarize(0.4).unwrap().edge_count(), 1);
    }

    #[test]
    fn binarize_reference_case() {
        let m = ConnectivityMatrix::parse("0 0.8 0.4\n0.8 0 0.6\n0.4 0.6 0\n").unwrap();
        let g = m.binarize(0.5).unwrap();
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
        assert!((g.link_density().unwrap() - 2.0 / 3.0).abs() < 1e-15);
        // Strictness: threshold exactly at a value drops that edge.
        let g = m.binarize(0.8).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(m.binarize(1.0).unwrap().edge_count(), 0);
        assert!(m.binarize(1.5).is_err());
    }

    #[test]
    fn threshold_monotonicity() {
        let m = ConnectivityMatrix::parse("0 0.2 0.9\n0.2 0 0.55\n0.9 0.55 0\n").unwrap();
        let mut last = m.binarize(0.0).unwrap().edge_count();
        for t in [0.1, 0.3, 0.5, 0.7, 0.95, 1.0] {
            let g = m.binarize(t).unwrap();
            assert!(g.edge_count() <= last);
            last = g.edge_count();
        }
    }

    #[test]
    fn text_round_trip_preserves_binarization() {
        let m = ConnectivityMatrix::parse("0 0.25 0.75\n0.25 0 0.5\n0.75 0.5 0\n").unwrap();
        let back = ConnectivityMatrix::parse(&m.to_text()).unwrap();
        assert_eq!(m, back);
        for t in [0.0, 0.3, 0.5, 0.9] {
            assert_eq!(m.binarize(t).unwrap(), back.binarize(t).unwrap());
        }
    }

    #[test]
    fn epoch_sets_validate_shape() {
        let a = ConnectivityMatrix::parse("0 1\n1 0\n").unwrap();
        let b = ConnectivityMatrix::parse("0 1 0\n1 0 0\n0 0 0\n").unwrap();
        assert!(matches!(
            EpochSet::new("x", vec![]),
            Err(Error::Empty { .. })
        ));
        let err = EpochSet::new("x", vec![a.clone(), b]).unwrap_err();
        assert!(matches!(err, Error::Epoch { index: 1, .. }), "{err}");
        assert!(EpochSet::new("x", vec![a.clone(), a]).is_ok());
    }

    #[test]
    fn identical_epochs_aggregate_with_zero_std() {
        let m = ConnectivityMatrix::parse(
            "0 0.9 0.1 0.9\n0.9 0 0.9 0.1\n0.1 0.9 0 0.9\n0.9 0.1 0.9 0\n",
        )
        .unwrap();
        let single = analyze_epochs(&EpochSet::new("one", vec![m.clone()]).unwrap(), 0.5).unwrap();
        assert_eq!(single.stats.rho_std, 0.0);
        let five = analyze_epochs(
            &EpochSet::new("five", vec![m.clone(), m.clone(), m.clone(), m.clone(), m]).unwrap(),
            0.5,
        )
        .unwrap();
        assert_eq!(five.epochs, 5);
        assert_eq!(five.stats.rho_mean, single.stats.rho_mean);
        assert_eq!(five.stats.c_mean, single.stats.c_mean);
        assert_eq!((five.stats.rho_std, five.stats.c_std, five.stats.c_norm_std), (0.0, 0.0, 0.0));
        assert_eq!(five.label, "five");
    }

    #[test]
    fn epoch_errors_carry_indices() {
        // Second epoch is 2x2 and locate needs n >= 3.
        let big = ConnectivityMatrix::parse("0 1 1\n1 0 1\n1 1 0\n").unwrap();
        let small = ConnectivityMatrix::parse("0 1\n1 0\n").unwrap();
        let err = analyze_epochs(&EpochSet::new("x", vec![small]).unwrap(), 0.5).unwrap_err();
        assert!(matches!(err, Error::Epoch { index: 0, .. }), "{err}");
        let set = EpochSet::new("y", vec![big.clone(), big]).unwrap();
        assert!(analyze_epochs_with(&set, &[0.5]).is_err());
    }

    #[test]
    fn manifest_parsing() {
        let text = "# epochs\nrest 3Hz, data/rest1.txt\nrest 3Hz, data/rest2.txt, 0.61\n\ntask, data/t.txt\n";
        let entries = parse_manifest(text).unwrap();
        assert_eq!(entries.len(), 3);
        assert_eq!(entries[0].label, "rest 3Hz");
        assert_eq!(entries[0].path, "data/rest1.txt");
        assert_eq!(entries[0].threshold, None);
        assert_eq!(entries[1].threshold, Some(0.61));
        assert_eq!(entries[2].label, "task");
        assert!(matches!(
            parse_manifest("just-a-path\n"),
            Err(Error::ManifestParse { line: 1, .. })
        ));
        assert!(matches!(
            parse_manifest("a,b,c,d\n"),
            Err(Error::ManifestParse { .. })
        ));
        assert!(matches!(
            parse_manifest("a,b,zz\n"),
            Err(Error::ManifestParse { .. })
        ));
        assert!(matches!(parse_manifest("# nothing\n"), Err(Error::Empty { .. })));
    }
}
