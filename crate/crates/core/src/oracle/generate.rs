//! Seeded generators for every input class the algorithms talk about.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, MAX_VERTICES};
use crate::oracle::SeededRng;
use crate::properties::{is_c4_free, is_k14_free, is_triangle_free};

/// Points are snapped to integer coordinates in `0..GRID`.
pub const GRID: u64 = 1 << 20;

const REJECTION_BUDGET: usize = 100_000;
const REJECTION_MAX_N: usize = 12;
const TRIANGLE_FREE_REJECTION_MAX_N: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphClass {
    Random,
    Bipartite,
    CoBipartite,
    TriangleFree,
    Planar,
    UnitDisk,
    C4Free,
    K14Free,
}

impl GraphClass {
    pub const ALL: [GraphClass; 8] = [
        GraphClass::Random,
        GraphClass::Bipartite,
        GraphClass::CoBipartite,
        GraphClass::TriangleFree,
        GraphClass::Planar,
        GraphClass::UnitDisk,
        GraphClass::C4Free,
        GraphClass::K14Free,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Random => "random",
            GraphClass::Bipartite => "bipartite",
            GraphClass::CoBipartite => "co-bipartite",
            GraphClass::TriangleFree => "triangle-free",
            GraphClass::Planar => "planar",
            GraphClass::UnitDisk => "unit-disk",
            GraphClass::C4Free => "c4-free",
            GraphClass::K14Free => "k14-free",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown generator class `{s}`")))
    }
}

/// What to generate. `param` is the edge density for every class except
/// unit-disk, where it is the radius (unit square coordinates).
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSpec {
    pub class: GraphClass,
    pub n: usize,
    pub param: f64,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratedGraph {
    pub graph: Graph,
    /// Grid points for unit-disk output, one per vertex.
    pub points: Option<Vec<(u64, u64)>>,
}

/// Deterministic for a fixed spec.
///
/// - random: each pair independently with probability `density`;
/// - bipartite: shuffled balanced bipartition, cross pairs with `density`;
/// - co-bipartite: complement of the bipartite output;
/// - triangle-free: rejection sampling of random graphs for `n ≤ 10`, the
///   bipartite generator (a subclass) above that;
/// - planar: incremental triangulation of random grid points, each edge kept
///   with `density`;
/// - unit-disk: random grid points, edge iff squared distance ≤ radius²;
/// - c4-free / k14-free: rejection sampling of random graphs, `n ≤ 12`.
pub fn generate(spec: &GeneratorSpec) -> Result<GeneratedGraph> {
    validate(spec)?;
    let mut rng = SeededRng::new(spec.seed);
    let (n, p) = (spec.n, spec.param);
    let plain = |graph| Ok(GeneratedGraph { graph, points: None });
    match spec.class {
        GraphClass::Random => plain(random_graph(&mut rng, n, p)),
        GraphClass::Bipartite => plain(bipartite_graph(&mut rng, n, p)),
        GraphClass::CoBipartite => plain(bipartite_graph(&mut rng, n, p).complement()),
        GraphClass::TriangleFree if n <= TRIANGLE_FREE_REJECTION_MAX_N => {
            plain(rejection(&mut rng, n, p, is_triangle_free, spec.class)?)
        }
        GraphClass::TriangleFree => plain(bipartite_graph(&mut rng, n, p)),
        GraphClass::Planar => plain(planar_graph(&mut rng, n, p)),
        GraphClass::UnitDisk => {
            let points = distinct_points(&mut rng, n);
            let graph = unit_disk_graph(&points, p);
            Ok(GeneratedGraph { graph, points: Some(points) })
        }
        GraphClass::C4Free => plain(rejection(&mut rng, n, p, is_c4_free, spec.class)?),
        GraphClass::K14Free => plain(rejection(&mut rng, n, p, is_k14_free, spec.class)?),
    }
}

fn validate(spec: &GeneratorSpec) -> Result<()> {
    if spec.n > MAX_VERTICES {
        return Err(Error::InvalidArgument(format!("n = {} is too large", spec.n)));
    }
    if !spec.param.is_finite() || spec.param < 0.0 {
        return Err(Error::InvalidArgument(format!("parameter {} must be finite and ≥ 0", spec.param)));
    }
    if spec.class != GraphClass::UnitDisk && spec.param > 1.0 {
        return Err(Error::InvalidArgument(format!("density {} must lie in [0, 1]", spec.param)));
    }
    if matches!(spec.class, GraphClass::C4Free | GraphClass::K14Free) && spec.n > REJECTION_MAX_N {
        return Err(Error::InvalidArgument(format!(
            "{} generation is rejection-based and needs n ≤ {REJECTION_MAX_N}",
            spec.class
        )));
    }
    Ok(())
}

fn random_graph(rng: &mut SeededRng, n: usize, density: f64) -> Graph {
    let mut b = GraphBuilder::new(n);
    for j in 1..n {
        for i in 0..j {
            if rng.bernoulli(density) {
                b.set_edge_unchecked(i, j);
            }
        }
    }
    b.build()
}

fn bipartite_graph(rng: &mut SeededRng, n: usize, density: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut order);
    let (left, right) = order.split_at(n / 2);
    let mut b = GraphBuilder::new(n);
    for &u in left {
        for &v in right {
            if rng.bernoulli(density) {
                b.set_edge_unchecked(u, v);
            }
        }
    }
    b.build()
}

fn rejection(
    rng: &mut SeededRng,
    n: usize,
    density: f64,
    accept: fn(&Graph) -> bool,
    class: GraphClass,
) -> Result<Graph> {
    for _ in 0..REJECTION_BUDGET {
        let g = random_graph(rng, n, density);
        if accept(&g) {
            return Ok(g);
        }
    }
    Err(Error::GenerationFailed(format!(
        "no {class} graph with n = {n}, density = {density} after {REJECTION_BUDGET} draws"
    )))
}

fn distinct_points(rng: &mut SeededRng, n: usize) -> Vec<(u64, u64)> {
    let mut seen = std::collections::HashSet::with_capacity(n);
    let mut points = Vec::with_capacity(n);
    while points.len() < n {
        let p = (rng.below(GRID), rng.below(GRID));
        if seen.insert(p) {
            points.push(p);
        }
    }
    points
}

/// Edge iff `dx² + dy² ≤ R²` with `R = round(radius · GRID)`, all exact.
pub fn unit_disk_graph(points: &[(u64, u64)], radius: f64) -> Graph {
    let r = (radius * GRID as f64).round() as u128;
    let r2 = r * r;
    let mut b = GraphBuilder::new(points.len());
    for j in 1..points.len() {
        for i in 0..j {
            let dx = points[i].0.abs_diff(points[j].0) as u128;
            let dy = points[i].1.abs_diff(points[j].1) as u128;
            if dx * dx + dy * dy <= r2 {
                b.set_edge_unchecked(i, j);
            }
        }
    }
    b.build()
}

fn orient(a: (u64, u64), b: (u64, u64), c: (u64, u64)) -> i128 {
    let (ax, ay) = (a.0 as i128, a.1 as i128);
    (b.0 as i128 - ax) * (c.1 as i128 - ay) - (b.1 as i128 - ay) * (c.0 as i128 - ax)
}

/// Random subgraph of a triangulation of seeded grid points.
///
/// Points are inserted in `(x, y)` order; each new point is joined to every
/// hull vertex it sees strictly, walking the upper and lower chains as in
/// the monotone-chain hull. Collinear hull points are kept so no drawn edge
/// passes through another point.
fn planar_graph(rng: &mut SeededRng, n: usize, density: f64) -> Graph {
    let points = distinct_points(rng, n);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| points[i]);

    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut upper: Vec<usize> = Vec::new();
    let mut lower: Vec<usize> = Vec::new();
    for &p in &order {
        if let Some(&last) = upper.last() {
            edges.push((last, p));
        }
        // upper chain turns clockwise; p strictly sees `a` past `b` when
        // (a, b, p) is a counter-clockwise turn
        while upper.len() >= 2 {
            let (a, b) = (upper[upper.len() - 2], upper[upper.len() - 1]);
            if orient(points[a], points[b], points[p]) > 0 {
                edges.push((a, p));
                upper.pop();
            } else {
                break;
            }
        }
        upper.push(p);
        while lower.len() >= 2 {
            let (a, b) = (lower[lower.len() - 2], lower[lower.len() - 1]);
            if orient(points[a], points[b], points[p]) < 0 {
                edges.push((a, p));
                lower.pop();
            } else {
                break;
            }
        }
        lower.push(p);
    }

    edges.sort_unstable_by_key(|&(u, v)| (u.min(v), u.max(v)));
    edges.dedup_by_key(|e| (e.0.min(e.1), e.0.max(e.1)));
    let mut b = GraphBuilder::new(n);
    for (u, v) in edges {
        if rng.bernoulli(density) {
            b.set_edge_unchecked(u, v);
        }
    }
    b.build()
}
