//! Test oracles for the croissant workspace.
//!
//! Everything in this crate is deliberately independent of `croissant-core`:
//! spectra come from textbook closed forms or from the characteristic
//! polynomial, not from the library's own eigensolver, so the two routes can
//! disagree when one of them is wrong.

pub mod charpoly;
pub mod closed_form;

/// Breadth-first connectivity check on an edge list.
pub fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for &(i, j) in edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::from([0usize]);
    seen[0] = true;
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    reached == n
}

/// Sorts a spectrum the way the library reports them: non-increasing.
pub fn sort_desc(mut values: Vec<f64>) -> Vec<f64> {
    values.sort_by(|a, b| b.total_cmp(a));
    values
}
