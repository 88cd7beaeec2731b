//! Spanning trees: exhaustive enumeration, matrix-tree counting, and the
//! closed-form tree sets of uni-cyclic graphs.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::{Graph, UnicyclicGraph};
use crate::{Exec, ENUMERATION_GUARD};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{edges} edges exceeds the enumeration limit of {limit}")]
    TooLarge { edges: usize, limit: usize },
    #[error("uni-cyclic graph is not canonically labeled; relabel it first")]
    NotCanonical,
}

/// The edge sets of all spanning trees of a graph, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTreeSet {
    ground_size: usize,
    trees: Vec<Vec<usize>>,
}

impl SpanningTreeSet {
    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn trees(&self) -> &[Vec<usize>] {
        &self.trees
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn into_trees(self) -> Vec<Vec<usize>> {
        self.trees
    }
}

/// Union-find with undo, for backtracking. No path compression so that
/// every union can be reverted in O(1).
struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<Option<usize>>,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Joins the classes of `a` and `b`; false (and nothing recorded) if
    /// they were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.history.push(Some(rb));
        true
    }

    fn undo(&mut self) {
        if let Some(Some(rb)) = self.history.pop() {
            let ra = self.parent[rb];
            self.size[ra] -= self.size[rb];
            self.parent[rb] = rb;
        }
    }
}

struct Search<'a> {
    edges: &'a [(usize, usize)],
    target: usize,
    dsu: RollbackDsu,
    chosen: Vec<usize>,
    out: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Include-first DFS over edges `next..`, so trees come out in
    /// lexicographic order.
    fn run(&mut self, next: usize) {
        if self.chosen.len() == self.target {
            self.out.push(self.chosen.iter().map(|&i| i + 1).collect());
            return;
        }
        if self.edges.len() - next < self.target - self.chosen.len() {
            return;
        }
        let (u, v) = self.edges[next];
        if self.dsu.union(u - 1, v - 1) {
            self.chosen.push(next);
            self.run(next + 1);
            self.chosen.pop();
            self.dsu.undo();
        }
        self.run(next + 1);
    }
}

fn check_enumerable(g: &Graph) -> Result<(), TreeError> {
    if g.edge_count() > ENUMERATION_GUARD {
        return Err(TreeError::TooLarge {
            edges: g.edge_count(),
            limit: ENUMERATION_GUARD,
        });
    }
    if !g.is_connected() {
        return Err(TreeError::Disconnected);
    }
    Ok(())
}

/// All spanning trees of `g`, using the default execution strategy.
pub fn enumerate_spanning_trees(g: &Graph) -> Result<SpanningTreeSet, TreeError> {
    enumerate_spanning_trees_with(g, Exec::default())
}

/// All spanning trees of `g`. The search is split by the smallest label in
/// the tree; each branch is an independent backtracking run.
pub fn enumerate_spanning_trees_with(g: &Graph, exec: Exec) -> Result<SpanningTreeSet, TreeError> {
    check_enumerable(g)?;
    let n = g.vertex_count();
    let target = n - 1;
    let edges = g.edges();
    let trees = if target == 0 {
        vec![Vec::new()]
    } else {
        let firsts: Vec<usize> = (0..=edges.len().saturating_sub(target)).collect();
        let mut trees = exec.flat_map(firsts, |first| {
            let mut s = Search {
                edges,
                target,
                dsu: RollbackDsu::new(n),
                chosen: vec![first],
                out: Vec::new(),
            };
            let (u, v) = edges[first];
            s.dsu.union(u - 1, v - 1);
            s.run(first + 1);
            s.out
        });
        trees.sort();
        trees
    };
    debug_assert!(trees.iter().all(|t| is_spanning_tree(g, t)));
    Ok(SpanningTreeSet {
        ground_size: g.edge_count(),
        trees,
    })
}

/// True iff the labels in `tree` form a spanning tree of `g`.
pub fn is_spanning_tree(g: &Graph, tree: &[usize]) -> bool {
    if tree.len() + 1 != g.vertex_count() {
        return false;
    }
    let mut dsu = RollbackDsu::new(g.vertex_count());
    tree.iter().all(|&l| {
        let (u, v) = g.edge(l);
        dsu.union(u - 1, v - 1)
    })
}

/// Number of spanning trees by the matrix-tree theorem: the determinant of
/// the Laplacian with vertex 1's row and column removed, computed with
/// fraction-free (Bareiss) elimination.
pub fn count_spanning_trees_kirchhoff(g: &Graph) -> Result<BigInt, TreeError> {
    if !g.is_connected() {
        return Err(TreeError::Disconnected);
    }
    let n = g.vertex_count();
    let size = n - 1;
    let mut lap = vec![vec![BigInt::zero(); size]; size];
    for &(u, v) in g.edges() {
        let (a, b) = (u as isize - 2, v as isize - 2);
        for x in [a, b] {
            if x >= 0 {
                lap[x as usize][x as usize] += 1;
            }
        }
        if a >= 0 && b >= 0 {
            lap[a as usize][b as usize] -= 1;
            lap[b as usize][a as usize] -= 1;
        }
    }
    Ok(bareiss_determinant(lap))
}

/// Exact determinant of a square integer matrix.
pub fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let size = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size {
        if a[k][k].is_zero() {
            match (k + 1..size).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    match size {
        0 => BigInt::one(),
        _ => sign * &a[size - 1][size - 1],
    }
}

/// The `m` trees `E \ {e_i}`, `i = 1..=m`, of a canonically labeled `U_{n,m}`.
pub fn unicyclic_spanning_trees(u: &UnicyclicGraph) -> Result<SpanningTreeSet, TreeError> {
    if !u.is_canonical() {
        return Err(TreeError::NotCanonical);
    }
    let n = u.base().edge_count();
    let trees = (1..=u.cycle_length())
        .map(|i| (1..=n).filter(|&l| l != i).collect())
        .collect::<Vec<Vec<usize>>>();
    Ok(SpanningTreeSet {
        ground_size: n,
        trees,
    })
}
