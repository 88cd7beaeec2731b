//! Finite simple graphs with positional edge labels, and uni-cyclic graphs.
//!
//! Vertices are numbered `1..=n`. The k-th entry of the edge list carries
//! label `k` (1-based); every complex in this crate is built on these labels.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is not uni-cyclic: {0}")]
    NotUnicyclic(String),
    #[error("cycle length {m} must satisfy 3 <= m <= n = {n}")]
    BadCycleLength { n: usize, m: usize },
    #[error("attachment entry {index} is {parent}, allowed 1..={max}")]
    BadAttachment {
        index: usize,
        parent: usize,
        max: usize,
    },
    #[error("expected {expected} attachment entries, got {got}")]
    AttachmentLength { expected: usize, got: usize },
}

/// A finite simple graph on vertices `1..=n` with labeled edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from vertex pairs; pair `k` (0-based) gets label `k + 1`.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut seen = BTreeSet::new();
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            edges.push(e);
        }
        Ok(Graph {
            vertex_count: n,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in label order, each stored as `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of the edge with 1-based `label`.
    pub fn edge(&self, label: usize) -> (usize, usize) {
        self.edges[label - 1]
    }

    /// For each vertex (index 0 unused), the incident `(neighbor, label)` pairs.
    pub(crate) fn incidence(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count + 1];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, i + 1));
            adj[v].push((u, i + 1));
        }
        adj
    }

    /// True iff every vertex is reachable from vertex 1.
    pub fn is_connected(&self) -> bool {
        let adj = self.incidence();
        let mut seen = vec![false; self.vertex_count + 1];
        let mut stack = vec![1];
        seen[1] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.vertex_count
    }

    /// Labels of the unique cycle of a connected graph with `|E| = n`.
    ///
    /// Leaves are pruned repeatedly; the edges that survive form the cycle.
    pub fn find_unique_cycle(&self) -> Result<BTreeSet<usize>, GraphError> {
        if self.edges.len() != self.vertex_count {
            return Err(GraphError::NotUnicyclic(format!(
                "{} edges on {} vertices",
                self.edges.len(),
                self.vertex_count
            )));
        }
        if !self.is_connected() {
            return Err(GraphError::NotUnicyclic("graph is disconnected".into()));
        }
        let adj = self.incidence();
        let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
        let mut removed_edge = vec![false; self.edges.len() + 1];
        let mut leaves: Vec<usize> = (1..=self.vertex_count)
            .filter(|&v| degree[v] == 1)
            .collect();
        while let Some(v) = leaves.pop() {
            if degree[v] != 1 {
                continue;
            }
            let (w, label) = adj[v]
                .iter()
                .copied()
                .find(|&(_, l)| !removed_edge[l])
                .expect("degree-one vertex has a live edge");
            removed_edge[label] = true;
            degree[v] = 0;
            degree[w] -= 1;
            if degree[w] == 1 {
                leaves.push(w);
            }
        }
        Ok((1..=self.edges.len()).filter(|&l| !removed_edge[l]).collect())
    }

    /// Returns a graph with the same vertices whose edge with new label `k`
    /// is the edge with old label `order[k - 1]`.
    pub fn permute_edges(&self, order: &[usize]) -> Graph {
        Graph {
            vertex_count: self.vertex_count,
            edges: order.iter().map(|&l| self.edge(l)).collect(),
        }
    }
}

/// How the `n - m` pendant vertices of a generated `U_{n,m}` are attached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AttachmentShape {
    /// A path hanging off vertex 1.
    Chain,
    /// Every extra vertex adjacent to vertex 1.
    Star,
    /// Parents drawn from a ChaCha8 stream seeded with the given value.
    Seeded(u64),
}

impl AttachmentShape {
    /// Parent list for [`UnicyclicGraph::generate`].
    pub fn parents(self, n: usize, m: usize) -> Vec<usize> {
        let extra = n.saturating_sub(m);
        match self {
            AttachmentShape::Chain => (0..extra)
                .map(|k| if k == 0 { 1 } else { m + k })
                .collect(),
            AttachmentShape::Star => vec![1; extra],
            AttachmentShape::Seeded(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..extra).map(|k| rng.gen_range(1..=m + k)).collect()
            }
        }
    }

    pub fn name(self) -> String {
        match self {
            AttachmentShape::Chain => "chain".into(),
            AttachmentShape::Star => "star".into(),
            AttachmentShape::Seeded(k) => format!("seed:{k}"),
        }
    }
}

impl std::str::FromStr for AttachmentShape {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "chain" => Ok(AttachmentShape::Chain),
            "star" => Ok(AttachmentShape::Star),
            _ => s
                .strip_prefix("seed:")
                .and_then(|k| k.parse().ok())
                .map(AttachmentShape::Seeded)
                .ok_or_else(|| format!("unknown attachment `{s}` (chain, star, seed:K)")),
        }
    }
}

/// A connected graph with exactly one cycle, together with that cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnicyclicGraph {
    base: Graph,
    cycle: BTreeSet<usize>,
    canonical: bool,
}

impl UnicyclicGraph {
    /// Wraps an arbitrary uni-cyclic graph without relabeling it.
    pub fn from_graph(g: Graph) -> Result<Self, GraphError> {
        let cycle = g.find_unique_cycle()?;
        if cycle.len() < 3 {
            return Err(GraphError::NotUnicyclic(format!(
                "cycle of length {}",
                cycle.len()
            )));
        }
        let canonical = cycle.iter().copied().eq(1..=cycle.len());
        Ok(UnicyclicGraph {
            base: g,
            cycle,
            canonical,
        })
    }

    /// Builds `U_{n,m}`: the cycle `1-2-...-m-1` carries labels `1..=m`, and
    /// edge `m + k` joins vertex `m + k` to `attachment[k - 1]`.
    pub fn generate(n: usize, m: usize, attachment: &[usize]) -> Result<Self, GraphError> {
        if m < 3 || m > n {
            return Err(GraphError::BadCycleLength { n, m });
        }
        if attachment.len() != n - m {
            return Err(GraphError::AttachmentLength {
                expected: n - m,
                got: attachment.len(),
            });
        }
        let mut pairs: Vec<(usize, usize)> = (1..=m).map(|i| (i, i % m + 1)).collect();
        for (k, &parent) in attachment.iter().enumerate() {
            let child = m + k + 1;
            if parent == 0 || parent >= child {
                return Err(GraphError::BadAttachment {
                    index: k + 1,
                    parent,
                    max: child - 1,
                });
            }
            pairs.push((parent, child));
        }
        let base = Graph::new(n, &pairs)?;
        Ok(UnicyclicGraph {
            base,
            cycle: (1..=m).collect(),
            canonical: true,
        })
    }

    pub fn with_shape(n: usize, m: usize, shape: AttachmentShape) -> Result<Self, GraphError> {
        if m < 3 || m > n {
            return Err(GraphError::BadCycleLength { n, m });
        }
        Self::generate(n, m, &shape.parents(n, m))
    }

    /// Relabels edges so the cycle occupies labels `1..=m`.
    ///
    /// The cycle is walked from its smallest label, stepping at each vertex to
    /// the smaller-labeled of the two candidate cycle edges on the first step.
    /// Non-cycle edges keep their relative order. The returned permutation
    /// maps new label `k` to old label `perm[k - 1]`.
    pub fn canonical_relabel(g: &Graph) -> Result<(UnicyclicGraph, Vec<usize>), GraphError> {
        let u = UnicyclicGraph::from_graph(g.clone())?;
        let order = u.cycle_walk();
        let mut perm = order.clone();
        perm.extend((1..=g.edge_count()).filter(|l| !u.cycle.contains(l)));
        let base = g.permute_edges(&perm);
        let m = order.len();
        Ok((
            UnicyclicGraph {
                base,
                cycle: (1..=m).collect(),
                canonical: true,
            },
            perm,
        ))
    }

    /// Cycle labels in traversal order starting from the smallest.
    fn cycle_walk(&self) -> Vec<usize> {
        let start = *self.cycle.iter().next().expect("cycle is nonempty");
        let (a, b) = self.base.edge(start);
        let adj = self.base.incidence();
        let on_cycle = |v: usize, skip: usize| -> usize {
            adj[v]
                .iter()
                .map(|&(_, l)| l)
                .find(|&l| l != skip && self.cycle.contains(&l))
                .expect("cycle vertex has two cycle edges")
        };
        // Direction: leave through whichever endpoint offers the smaller label.
        let via_a = on_cycle(a, start);
        let via_b = on_cycle(b, start);
        let (mut at, mut prev) = if via_b <= via_a { (b, start) } else { (a, start) };
        let mut walk = vec![start];
        while walk.len() < self.cycle.len() {
            let next = on_cycle(at, prev);
            walk.push(next);
            let (x, y) = self.base.edge(next);
            at = if x == at { y } else { x };
            prev = next;
        }
        walk
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn into_base(self) -> Graph {
        self.base
    }

    pub fn n(&self) -> usize {
        self.base.vertex_count()
    }

    pub fn cycle_length(&self) -> usize {
        self.cycle.len()
    }

    pub fn cycle_edge_labels(&self) -> &BTreeSet<usize> {
        &self.cycle
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }
}
