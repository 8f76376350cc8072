//! The admissible region in the (link density, complexity) plane.
//!
//! For a fixed node count n, multi-star graphs of density at most 0.5 and
//! their complements trace the upper boundary of the region occupied by
//! graphs on n nodes, and circulant lattices trace the lower boundary. Both
//! are exported as polylines, and complexity values are normalized by N(n),
//! the maximum complexity over the multi-star family, so that the region
//! fits the unit square.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::generators::{circulant, multi_star};
use crate::graph::Graph;
use crate::spectral::Spectrum;

/// A graph's image in the density/complexity plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanePoint {
    /// Link density in [0, 1].
    pub rho: f64,
    /// Raw spectral complexity.
    pub c_raw: f64,
    /// Complexity normalized by the per-n constant N(n).
    pub c_norm: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryKind {
    Upper,
    Lower,
}

impl BoundaryKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundaryKind::Upper => "upper",
            BoundaryKind::Lower => "lower",
        }
    }
}

/// A boundary polyline from density 0 to density 1. Both ends sit at zero
/// complexity (the edgeless and complete graphs) and densities increase
/// strictly along the vertex list.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryPolyline {
    pub kind: BoundaryKind,
    pub points: Vec<PlanePoint>,
}

impl BoundaryPolyline {
    /// Raw complexity of the polyline at density `rho`, linearly
    /// interpolated between vertices. `rho` must lie in [0, 1].
    pub fn interpolate(&self, rho: f64) -> f64 {
        assert!(
            (0.0..=1.0).contains(&rho),
            "density {rho} outside the unit interval"
        );
        let pts = &self.points;
        let hi = match pts.iter().position(|p| p.rho >= rho) {
            Some(0) => return pts[0].c_raw,
            Some(hi) => hi,
            None => return pts.last().expect("polyline is never empty").c_raw,
        };
        let (a, b) = (&pts[hi - 1], &pts[hi]);
        let t = (rho - a.rho) / (b.rho - a.rho);
        a.c_raw + t * (b.c_raw - a.c_raw)
    }
}

fn require_at_least_three(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::TooFewNodes { n, min: 3 });
    }
    Ok(())
}

static NORM_CACHE: RwLock<Option<HashMap<usize, f64>>> = RwLock::new(None);

/// The normalization constant N(n): the maximum complexity over multi-star
/// graphs with 1..n-1 hubs. Complements attain the same values, so this is
/// also the maximum over the whole upper-boundary family.
///
/// Values are memoized per n; the cache is read-concurrent after first
/// computation.
pub fn normalization_constant(n: usize) -> Result<f64> {
    require_at_least_three(n)?;
    if let Some(cache) = NORM_CACHE.read().expect("cache lock poisoned").as_ref() {
        if let Some(&v) = cache.get(&n) {
            return Ok(v);
        }
    }
    let mut best = 0.0f64;
    for k in 1..n {
        let c = Spectrum::of(&multi_star(n, k)?)?.complexity();
        best = best.max(c);
    }
    NORM_CACHE
        .write()
        .expect("cache lock poisoned")
        .get_or_insert_with(HashMap::new)
        .insert(n, best);
    Ok(best)
}

/// Maps a graph to its plane coordinates (density, raw complexity,
/// normalized complexity). Needs n >= 3 for the normalization constant.
pub fn locate(g: &Graph) -> Result<PlanePoint> {
    let norm = normalization_constant(g.node_count())?;
    let c_raw = Spectrum::of(g)?.complexity();
    Ok(PlanePoint {
        rho: g.link_density()?,
        c_raw,
        c_norm: c_raw / norm,
    })
}

fn plane_point(g: &Graph, norm: f64) -> Result<PlanePoint> {
    let c_raw = Spectrum::of(g)?.complexity();
    Ok(PlanePoint {
        rho: g.link_density()?,
        c_raw,
        c_norm: c_raw / norm,
    })
}

/// The upper boundary polyline: multi-stars with density at most 0.5, then
/// their complements mirrored to 1 - rho at equal complexity. When a star
/// and a mirrored complement share a density, the higher complexity wins.
pub fn upper_boundary(n: usize) -> Result<BoundaryPolyline> {
    require_at_least_three(n)?;
    let norm = normalization_constant(n)?;
    let mut points: Vec<PlanePoint> = Vec::new();
    for k in 0..n {
        let g = multi_star(n, k)?;
        let p = plane_point(&g, norm)?;
        if p.rho > 0.5 {
            break; // multi-star densities increase with k
        }
        points.push(p);
    }
    let mirrored: Vec<PlanePoint> = points
        .iter()
        .map(|p| PlanePoint {
            rho: 1.0 - p.rho,
            ..*p
        })
        .collect();
    points.extend(mirrored);
    points.sort_by(|a, b| a.rho.total_cmp(&b.rho).then(b.c_raw.total_cmp(&a.c_raw)));
    points.dedup_by(|next, kept| next.rho == kept.rho);
    Ok(BoundaryPolyline {
        kind: BoundaryKind::Upper,
        points,
    })
}

/// The lower boundary polyline: circulant lattices for 0..floor(n/2) rings.
pub fn lower_boundary(n: usize) -> Result<BoundaryPolyline> {
    require_at_least_three(n)?;
    let norm = normalization_constant(n)?;
    let points = (0..=n / 2)
        .map(|k| plane_point(&circulant(n, k)?, norm))
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundaryPolyline {
        kind: BoundaryKind::Lower,
        points,
    })
}
