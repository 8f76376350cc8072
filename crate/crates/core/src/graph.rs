//! Simple undirected graphs on 0-indexed nodes.

use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph: no self-loops, no multi-edges, no weights.
///
/// Adjacency is a packed bitset over the upper triangle keyed by unordered
/// pair, so a graph on n nodes costs n(n-1)/16 bytes. Values are immutable
/// through the public API once built (generators mutate privately during
/// construction) and safe to share across threads.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    bits: Vec<u64>,
}

#[inline]
fn pair_slot(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl Graph {
    /// The edgeless graph on `n` nodes. `n` must be at least 1.
    pub fn new(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::TooFewNodes { n, min: 1 });
        }
        let pairs = n * (n - 1) / 2;
        Ok(Graph {
            n,
            bits: vec![0; pairs.div_ceil(64)],
        })
    }

    /// Builds a graph from an edge list. Duplicate pairs and either pair
    /// orientation are fine; out-of-range endpoints and self-loops are not.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    /// The complete graph on `n` nodes.
    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        let pairs = n * (n - 1) / 2;
        for s in 0..pairs {
            g.bits[s / 64] |= 1 << (s % 64);
        }
        Ok(g)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<(usize, usize)> {
        if i >= self.n {
            return Err(Error::NodeOutOfRange { index: i, n: self.n });
        }
        if j >= self.n {
            return Err(Error::NodeOutOfRange { index: j, n: self.n });
        }
        if i == j {
            return Err(Error::SelfLoop { node: i });
        }
        Ok(if i < j { (i, j) } else { (j, i) })
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        let (i, j) = self.check_pair(i, j)?;
        let s = pair_slot(self.n, i, j);
        self.bits[s / 64] |= 1 << (s % 64);
        Ok(())
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) -> Result<()> {
        let (i, j) = self.check_pair(i, j)?;
        let s = pair_slot(self.n, i, j);
        self.bits[s / 64] &= !(1 << (s % 64));
        Ok(())
    }

    /// True when `i` and `j` are adjacent. The diagonal is always false.
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        assert!(i < self.n && j < self.n, "node index out of range");
        if i == j {
            return false;
        }
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        let s = pair_slot(self.n, i, j);
        self.bits[s / 64] >> (s % 64) & 1 == 1
    }

    /// The graph with exactly the opposite adjacency off the diagonal.
    pub fn complement(&self) -> Graph {
        let pairs = self.n * (self.n - 1) / 2;
        let mut bits: Vec<u64> = self.bits.iter().map(|w| !w).collect();
        // Clear the padding beyond the last real pair slot.
        if pairs % 64 != 0 {
            if let Some(last) = bits.last_mut() {
                *last &= (1u64 << (pairs % 64)) - 1;
            }
        }
        Graph { n: self.n, bits }
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for (i, j) in self.edges() {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    /// Fraction of possible edges present: 2m / (n(n-1)).
    ///
    /// Both this and the complement's density are exact rationals over the
    /// same denominator, so the two values sum to exactly 1.0 in floating
    /// point as well.
    pub fn link_density(&self) -> Result<f64> {
        if self.n < 2 {
            return Err(Error::TooFewNodes { n: self.n, min: 2 });
        }
        Ok(2.0 * self.edge_count() as f64 / (self.n * (self.n - 1)) as f64)
    }

    /// Iterates the edges as (i, j) with i < j, ordered lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .filter(move |&(i, j)| self.has_edge(i, j))
    }

    /// Parses the edge-list text format: a header line `n <count>`, then one
    /// `i j` pair per line, whitespace separated and 0-indexed. Blank lines
    /// are skipped and `#` starts a comment.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut graph: Option<Graph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let mut tokens = body.split_whitespace();
            match graph {
                None => {
                    if tokens.next() != Some("n") {
                        return Err(Error::EdgeListParse {
                            line,
                            message: "expected header line `n <count>`".into(),
                        });
                    }
                    let count = tokens.next().ok_or_else(|| Error::EdgeListParse {
                        line,
                        message: "header is missing the node count".into(),
                    })?;
                    let n: usize = count.parse().map_err(|_| Error::EdgeListParse {
                        line,
                        message: format!("bad node count `{count}`"),
                    })?;
                    if tokens.next().is_some() {
                        return Err(Error::EdgeListParse {
                            line,
                            message: "trailing tokens after the node count".into(),
                        });
                    }
                    graph = Some(Graph::new(n).map_err(|e| Error::EdgeListParse {
                        line,
                        message: e.to_string(),
                    })?);
                }
                Some(ref mut g) => {
                    let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next())
                    else {
                        return Err(Error::EdgeListParse {
                            line,
                            message: "expected exactly two node indices".into(),
                        });
                    };
                    let parse = |tok: &str| -> Result<usize> {
                        tok.parse().map_err(|_| Error::EdgeListParse {
                            line,
                            message: format!("bad node index `{tok}`"),
                        })
                    };
                    g.add_edge(parse(a)?, parse(b)?)
                        .map_err(|e| Error::EdgeListParse {
                            line,
                            message: e.to_string(),
                        })?;
                }
            }
        }
        graph.ok_or(Error::Empty {
            what: "edge list (no header line)",
        })
    }

    /// Renders the graph in the same text format `parse_edge_list` reads.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (i, j) in self.edges() {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}
