//! Graph generators: the two deterministic boundary families (multi-star
//! and circulant lattice) and three random models (Erdos-Renyi,
//! Watts-Strogatz, Barabasi-Albert).
//!
//! Random generators take an explicit 64-bit seed and are pure functions of
//! (parameters, seed): the same call reproduces the same adjacency on every
//! platform. See [`crate::rng`] for the pinned generator.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::SplitMix64;

/// Multi-star (complete split) graph: nodes 0..k-1 are hubs adjacent to all
/// other nodes, the remaining n-k nodes carry no further edges.
///
/// k = 0 gives the edgeless graph, k = 1 the star, k = n-1 the complete
/// graph; m = k*n - k(k+1)/2.
pub fn multi_star(n: usize, k: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::TooFewNodes { n, min: 1 });
    }
    if k >= n {
        return Err(Error::ParamOutOfRange {
            name: "hubs",
            value: k.to_string(),
            range: format!("0..={}", n - 1),
        });
    }
    let mut g = Graph::new(n)?;
    for i in 0..k {
        for j in i + 1..n {
            g.add_edge(i, j)?;
        }
    }
    Ok(g)
}

/// Circulant lattice: i ~ j iff the circular distance min(|i-j|, n-|i-j|)
/// is between 1 and k.
///
/// k = 0 gives the edgeless graph and k = floor(n/2) the complete graph;
/// for k < n/2 each ring contributes n edges (m = n*k), while for even n
/// the last ring is the antipodal diagonal and contributes only n/2.
pub fn circulant(n: usize, k: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::TooFewNodes { n, min: 1 });
    }
    if k > n / 2 {
        return Err(Error::ParamOutOfRange {
            name: "rings",
            value: k.to_string(),
            range: format!("0..={}", n / 2),
        });
    }
    let mut g = Graph::new(n)?;
    for i in 0..n {
        for d in 1..=k {
            g.add_edge(i, (i + d) % n)?;
        }
    }
    Ok(g)
}

/// Erdos-Renyi G(n, p): every unordered pair is an edge independently with
/// probability p.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::TooFewNodes { n, min: 1 });
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ParamOutOfRange {
            name: "p",
            value: p.to_string(),
            range: "[0, 1]".into(),
        });
    }
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::new(n)?;
    for i in 0..n {
        for j in i + 1..n {
            if rng.next_f64() < p {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// Watts-Strogatz small world: start from circulant(n, k), then visit each
/// original ring edge (i, i+d mod n) for i in node order and d = 1..=k, and
/// with probability beta replace it by an edge from i to a target drawn
/// uniformly from the nodes currently not adjacent to i.
///
/// Only the original ring edges are candidates for rewiring, and a rewiring
/// step with no available target (node adjacent to everything) is skipped,
/// so the edge count stays exactly n*k. beta = 0 returns the circulant
/// lattice unchanged.
pub fn watts_strogatz(n: usize, k: usize, beta: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::TooFewNodes { n, min: 1 });
    }
    if k == 0 || k > n.saturating_sub(1) / 2 {
        return Err(Error::ParamOutOfRange {
            name: "k",
            value: k.to_string(),
            range: format!("1..={}", n.saturating_sub(1) / 2),
        });
    }
    if !(0.0..=1.0).contains(&beta) {
        return Err(Error::ParamOutOfRange {
            name: "beta",
            value: beta.to_string(),
            range: "[0, 1]".into(),
        });
    }
    let mut rng = SplitMix64::new(seed);
    let mut g = circulant(n, k)?;
    for i in 0..n {
        for d in 1..=k {
            if rng.next_f64() >= beta {
                continue;
            }
            let j = (i + d) % n;
            let candidates: Vec<usize> =
                (0..n).filter(|&v| v != i && !g.has_edge(i, v)).collect();
            if candidates.is_empty() {
                continue;
            }
            let target = candidates[rng.next_below(candidates.len() as u64) as usize];
            g.remove_edge(i, j)?;
            g.add_edge(i, target)?;
        }
    }
    Ok(g)
}

/// Barabasi-Albert preferential attachment: start from ell isolated nodes,
/// then add the remaining n-ell nodes one at a time, each attaching to ell
/// distinct existing nodes drawn without replacement with probability
/// proportional to degree.
///
/// Degrees are frozen at the start of each stage. When the candidates'
/// degrees sum to zero (always true at the first stage, possibly later in a
/// draw after all positive-degree nodes are taken), the draw falls back to
/// uniform. Edge count is exactly ell*(n-ell) for every seed, and
/// ell = n-1 yields the star deterministically.
pub fn barabasi_albert(n: usize, ell: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::TooFewNodes { n, min: 1 });
    }
    if ell == 0 || ell >= n {
        return Err(Error::ParamOutOfRange {
            name: "ell",
            value: ell.to_string(),
            range: format!("1..={}", n - 1),
        });
    }
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::new(n)?;
    let mut degree = vec![0u64; n];
    let mut chosen = vec![false; n];

    for v in ell..n {
        let frozen = &degree[..v];
        let mut weight_left: u64 = frozen.iter().sum();
        let mut uniform_left = v as u64;
        for slot in chosen.iter_mut().take(v) {
            *slot = false;
        }
        let mut targets = Vec::with_capacity(ell);
        for _ in 0..ell {
            let pick = if weight_left == 0 {
                // Uniform over the still-unchosen candidates.
                let mut r = rng.next_below(uniform_left);
                let mut idx = 0;
                loop {
                    if !chosen[idx] {
                        if r == 0 {
                            break idx;
                        }
                        r -= 1;
                    }
                    idx += 1;
                }
            } else {
                // Weighted by frozen degree over the still-unchosen.
                let t = rng.next_below(weight_left);
                let mut cum = 0u64;
                let mut idx = 0;
                loop {
                    if !chosen[idx] {
                        cum += frozen[idx];
                        if t < cum {
                            break idx;
                        }
                    }
                    idx += 1;
                }
            };
            chosen[pick] = true;
            weight_left -= frozen[pick];
            uniform_left -= 1;
            targets.push(pick);
        }
        for t in targets {
            g.add_edge(v, t)?;
            degree[t] += 1;
            degree[v] += 1;
        }
    }
    Ok(g)
}

/// A generator selection with its parameters, as used by sweeps and the CLI.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelParams {
    ErdosRenyi { n: usize, p: f64 },
    WattsStrogatz { n: usize, k: usize, beta: f64 },
    BarabasiAlbert { n: usize, ell: usize },
}

impl ModelParams {
    pub fn node_count(&self) -> usize {
        match *self {
            ModelParams::ErdosRenyi { n, .. }
            | ModelParams::WattsStrogatz { n, .. }
            | ModelParams::BarabasiAlbert { n, .. } => n,
        }
    }

    /// Short lowercase name of the model family.
    pub fn model_name(&self) -> &'static str {
        match self {
            ModelParams::ErdosRenyi { .. } => "er",
            ModelParams::WattsStrogatz { .. } => "ws",
            ModelParams::BarabasiAlbert { .. } => "ba",
        }
    }

    /// Tag word separating the seed streams of different model families.
    pub fn seed_tag(&self) -> u64 {
        match self {
            ModelParams::ErdosRenyi { .. } => 0x4552,
            ModelParams::WattsStrogatz { .. } => 0x5753,
            ModelParams::BarabasiAlbert { .. } => 0x4241,
        }
    }

    /// Runs the selected generator.
    pub fn generate(&self, seed: u64) -> Result<Graph> {
        match *self {
            ModelParams::ErdosRenyi { n, p } => erdos_renyi(n, p, seed),
            ModelParams::WattsStrogatz { n, k, beta } => watts_strogatz(n, k, beta, seed),
            ModelParams::BarabasiAlbert { n, ell } => barabasi_albert(n, ell, seed),
        }
    }

    /// One-line human-readable form, used in error context and logs.
    pub fn describe(&self) -> String {
        match *self {
            ModelParams::ErdosRenyi { n, p } => format!("er(n={n}, p={p})"),
            ModelParams::WattsStrogatz { n, k, beta } => {
                format!("ws(n={n}, k={k}, beta={beta})")
            }
            ModelParams::BarabasiAlbert { n, ell } => format!("ba(n={n}, ell={ell})"),
        }
    }
}
