//! Unlabeled tree representation and the constructions built on it.

mod canon;
mod enumerate;
mod generate;
mod io;

pub use canon::{automorphism_count, canonicalize, CanonicalCode};
pub use enumerate::{enumerate_trees, enumerate_trees_with_limit, ENUM_LIMIT};
pub use generate::{caterpillar, cut, glue, millipede, random_tree, MillipedeSpec};
pub use io::{read_tree, read_tree_file, write_tree, write_tree_file};

use crate::error::{Error, Result};

/// An immutable tree on `n ≥ 1` vertices, indexed `0..n`.
///
/// Adjacency lists are kept sorted; construction validates connectivity,
/// the edge count, and the absence of loops and parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    adj: Vec<Vec<u32>>,
}

impl Tree {
    /// Builds a tree from an explicit edge list, validating all invariants.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Tree> {
        if n == 0 {
            return Err(Error::InvalidParameter("tree must have at least one vertex".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::EdgeCountMismatch { n, expected: n - 1, got: edges.len() });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            let (u, v) = (u as usize, v as usize);
            if u >= n {
                return Err(Error::VertexOutOfRange { index: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { index: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                let v = list.windows(2).find(|w| w[0] == w[1]).unwrap()[0];
                return Err(Error::DuplicateEdge { u, v: v as usize });
            }
        }
        let tree = Tree { adj };
        if !tree.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(tree)
    }

    /// Internal constructor for edge lists known to form a tree.
    pub(crate) fn from_edges_unchecked(n: usize, edges: &[(u32, u32)]) -> Tree {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Tree { adj }
    }

    /// The single-vertex tree.
    pub fn singleton() -> Tree {
        Tree { adj: vec![Vec::new()] }
    }

    /// The path on `n` vertices, `0 - 1 - … - (n-1)`.
    pub fn path(n: usize) -> Tree {
        assert!(n >= 1);
        let edges: Vec<_> = (1..n as u32).map(|v| (v - 1, v)).collect();
        Tree::from_edges_unchecked(n, &edges)
    }

    /// The star `K_{1,leaves}`: vertex 0 joined to `leaves` pendant vertices.
    pub fn star(leaves: usize) -> Tree {
        let edges: Vec<_> = (1..=leaves as u32).map(|v| (0, v)).collect();
        Tree::from_edges_unchecked(leaves + 1, &edges)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Sorted neighbor list of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    /// Degree of vertex `v`, with an explicit range check.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.adj
            .get(v)
            .map(Vec::len)
            .ok_or(Error::VertexOutOfRange { index: v, n: self.n() })
    }

    pub(crate) fn deg(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Largest degree over all vertices (0 for the single-vertex tree).
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.adj[v].len() == 1 || self.n() == 1
    }

    /// Vertices of degree 1 (plus vertex 0 when the tree is a single vertex).
    pub fn leaves(&self) -> Vec<usize> {
        if self.n() == 1 {
            return vec![0];
        }
        (0..self.n()).filter(|&v| self.adj[v].len() == 1).collect()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in sorted order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.n().saturating_sub(1));
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if (u as u32) < v {
                    out.push((u as u32, v));
                }
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// BFS distance between two vertices.
    pub fn distance(&self, a: usize, b: usize) -> Result<usize> {
        let n = self.n();
        if a >= n {
            return Err(Error::VertexOutOfRange { index: a, n });
        }
        if b >= n {
            return Err(Error::VertexOutOfRange { index: b, n });
        }
        if a == b {
            return Ok(0);
        }
        let mut dist = vec![usize::MAX; n];
        dist[a] = 0;
        let mut queue = std::collections::VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[v] {
                let u = u as usize;
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    if u == b {
                        return Ok(dist[u]);
                    }
                    queue.push_back(u);
                }
            }
        }
        unreachable!("tree is connected");
    }

    /// Sorted `(degree, multiplicity)` pairs.
    pub fn degree_histogram(&self) -> Vec<(usize, usize)> {
        let mut map = std::collections::BTreeMap::new();
        for list in &self.adj {
            *map.entry(list.len()).or_insert(0usize) += 1;
        }
        map.into_iter().collect()
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`. `perm` must be a permutation.
    pub fn relabel(&self, perm: &[u32]) -> Tree {
        assert_eq!(perm.len(), self.n());
        let edges: Vec<_> = self
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u as usize], perm[v as usize]))
            .collect();
        Tree::from_edges_unchecked(self.n(), &edges)
    }

    fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0usize];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.adj[v] {
                let u = u as usize;
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == n
    }
}
