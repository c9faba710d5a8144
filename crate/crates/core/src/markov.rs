//! Random walks on connected regular graphs.
//!
//! A connected `d`-regular graph carries the walk `P(x, y) = 1/d` for
//! `x ~ y`, whose unique stationary law is uniform. Bipartite graphs make
//! that walk periodic, so [`WalkConfig`] adds an optional holding
//! probability.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::distributions::{Event, FiniteDistribution};
use crate::error::{Error, Result};
use crate::ext_real::{ExtReal, LogBase};
use crate::measures::cai_nats;
use crate::regimes::{classify_regime, Regime};

pub const VERTEX_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq)]
pub struct RegularGraph {
    n: usize,
    degree: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    bipartite: bool,
}

impl RegularGraph {
    /// Validates an undirected edge list on vertices `0..n`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewVertices(n));
        }
        if n > VERTEX_CAP {
            return Err(Error::TooManyVertices { n, cap: VERTEX_CAP });
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(u, v));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let degree = adjacency[0].len();
        if let Some((vertex, adj)) = adjacency.iter().enumerate().find(|(_, a)| a.len() != degree) {
            return Err(Error::NotRegular { expected: degree, vertex, found: adj.len() });
        }

        // BFS 2-coloring doubles as the connectivity check.
        let mut color = vec![u8::MAX; n];
        let mut bipartite = true;
        let mut queue = VecDeque::from([0]);
        color[0] = 0;
        while let Some(x) = queue.pop_front() {
            for &y in &adjacency[x] {
                if color[y] == u8::MAX {
                    color[y] = 1 - color[x];
                    queue.push_back(y);
                } else if color[y] == color[x] {
                    bipartite = false;
                }
            }
        }
        if let Some(v) = color.iter().position(|&c| c == u8::MAX) {
            return Err(Error::NotConnected(v));
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
        }
        Ok(RegularGraph { n, degree, edges: edges.to_vec(), adjacency, bipartite })
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Self::new(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartite
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WalkConfig {
    laziness: f64,
    steps: usize,
}

impl WalkConfig {
    pub fn new(laziness: f64, steps: usize) -> Result<Self> {
        if !(0.0..1.0).contains(&laziness) {
            return Err(Error::InvalidLaziness(laziness));
        }
        Ok(WalkConfig { laziness, steps })
    }

    /// Holding probability 0.5 on bipartite graphs, 0 otherwise.
    pub fn for_graph(graph: &RegularGraph, steps: usize) -> Self {
        let laziness = if graph.is_bipartite() { 0.5 } else { 0.0 };
        WalkConfig { laziness, steps }
    }

    pub fn laziness(&self) -> f64 {
        self.laziness
    }

    pub fn steps(&self) -> usize {
        self.steps
    }
}

fn check_laziness(laziness: f64) -> Result<()> {
    if (0.0..1.0).contains(&laziness) {
        Ok(())
    } else {
        Err(Error::InvalidLaziness(laziness))
    }
}

fn push_forward(probs: &[f64], graph: &RegularGraph, laziness: f64, out: &mut [f64]) {
    let move_share = (1.0 - laziness) / graph.degree as f64;
    for (y, slot) in out.iter_mut().enumerate() {
        let inflow: f64 = graph.adjacency[y].iter().map(|&x| probs[x]).sum();
        *slot = laziness * probs[y] + move_share * inflow;
    }
}

/// One step of the (lazy) walk:
/// `P'(y) = λ·P(y) + (1 − λ)·Σ_{x~y} P(x)/d`.
pub fn step(p: &FiniteDistribution, graph: &RegularGraph, laziness: f64) -> Result<FiniteDistribution> {
    check_laziness(laziness)?;
    if p.len() != graph.n {
        return Err(Error::SpaceMismatch);
    }
    let mut next = vec![0.0; graph.n];
    push_forward(p.probs(), graph, laziness, &mut next);
    Ok(FiniteDistribution::from_parts_unchecked(p.labels().to_vec(), next))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrajectoryPoint {
    pub t: usize,
    /// `P_t(T)`
    pub q_t: f64,
    /// `I⁺` of `P_t` against the starting law.
    pub active_info: ExtReal,
    /// Binary `I⊕(P_1, P_t)` on `{T, Tᶜ}`.
    pub cai_coarsened: ExtReal,
    /// Present when `0 < P_1(T) < 1/2`.
    pub regime: Option<Regime>,
}

/// Iterates the walk from `p1` for `cfg.steps()` steps and records the target
/// probability and both measures against the fixed starting law.
pub fn trajectory(
    p1: &FiniteDistribution,
    graph: &RegularGraph,
    target: &Event,
    cfg: &WalkConfig,
    base: LogBase,
) -> Result<Vec<TrajectoryPoint>> {
    if p1.len() != graph.n {
        return Err(Error::SpaceMismatch);
    }
    let (p, p_rest) = p1.split_masses(target)?;
    let point = |t: usize, probs: &[f64]| {
        let current = FiniteDistribution::from_parts_unchecked(p1.labels().to_vec(), probs.to_vec());
        let (q, q_rest) = current.split_masses(target).expect("target checked against the space");
        TrajectoryPoint {
            t,
            q_t: q,
            active_info: base.from_nats(ExtReal::log_ratio(q, p)),
            cai_coarsened: base.from_nats(cai_nats(&[p, p_rest], &[q, q_rest])),
            regime: classify_regime(p, q).ok(),
        }
    };

    let mut points = Vec::with_capacity(cfg.steps + 1);
    let mut current = p1.probs().to_vec();
    let mut next = vec![0.0; graph.n];
    points.push(point(0, &current));
    for t in 1..=cfg.steps {
        push_forward(&current, graph, cfg.laziness, &mut next);
        std::mem::swap(&mut current, &mut next);
        points.push(point(t, &current));
    }
    Ok(points)
}
