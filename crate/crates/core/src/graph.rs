//! Immutable simple undirected graphs and edge-induced subgraphs.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};

/// An unordered vertex pair stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes the pair. Panics on a loop; use [`Edge::try_new`] for input data.
    pub fn new(a: usize, b: usize) -> Edge {
        Edge::try_new(a, b).expect("edge endpoints must differ")
    }

    pub fn try_new(a: usize, b: usize) -> Result<Edge> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(GraphError::SelfLoop(a)),
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    /// The endpoint that is not `x`.
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list, collapsing duplicate pairs.
    ///
    /// Returns the graph together with the number of duplicate pairs dropped.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<(Graph, usize)> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            let e = Edge::try_new(a, b)?;
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        let mut raw = 0;
        for list in &mut adj {
            raw += list.len();
            list.sort_unstable();
            list.dedup();
        }
        let graph = Graph::from_sorted_adjacency(adj);
        let duplicates = (raw / 2) - graph.m;
        Ok((graph, duplicates))
    }

    /// Like [`Graph::from_edge_list`] but discards the duplicate count.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Graph::from_edge_list(n, edges).map(|(g, _)| g)
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(n: usize, edges: I) -> Result<Graph> {
        let pairs: Vec<_> = edges.into_iter().map(|e| e.endpoints()).collect();
        Graph::new(n, &pairs)
    }

    /// The graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Graph {
        Graph::from_sorted_adjacency(vec![Vec::new(); n])
    }

    // Caller guarantees sorted, deduplicated, symmetric, loop-free lists.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Graph {
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let g = Graph {
            n: adj.len(),
            adj,
            m,
        };
        debug_assert!(g.check_invariants());
        g
    }

    fn check_invariants(&self) -> bool {
        self.adj.iter().enumerate().all(|(v, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && list
                    .iter()
                    .all(|&u| u < self.n && u != v && self.adj[u].binary_search(&v).is_ok())
        })
    }

    pub fn complete(n: usize) -> Graph {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("cycle edges are valid")
    }

    /// The star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &edges).expect("star edges are valid")
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, &edges).expect("petersen edges are valid")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    /// All edges in normalized lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list.iter().filter(|&&v| v > u) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Open neighborhood as a bitmask. Requires `n <= 64`.
    pub(crate) fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v].iter().fold(0u64, |acc, &u| acc | (1u64 << u))
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    queue.push_back(u);
                }
            }
        }
        reached == self.n
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        DegreeProfile {
            max: degrees.iter().copied().max().unwrap_or(0),
            min: degrees.iter().copied().min().unwrap_or(0),
            degrees,
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut adj = vec![Vec::new(); self.n];
        for (v, list) in self.adj.iter().enumerate() {
            let mut mapped: Vec<usize> = list.iter().map(|&u| perm[u]).collect();
            mapped.sort_unstable();
            adj[perm[v]] = mapped;
        }
        Graph::from_sorted_adjacency(adj)
    }

    /// The subgraph whose edge set is exactly `edges` and whose vertices are their endpoints.
    pub fn edge_subgraph(&self, edges: &[Edge]) -> Result<EdgeSubgraph<'_>> {
        EdgeSubgraph::new(self, edges)
    }

    /// True when `self` is a star `K_{1,k}` with `k >= 1`.
    pub fn is_star(&self) -> bool {
        self.n >= 2 && self.m == self.n - 1 && self.adj.iter().any(|list| list.len() == self.n - 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub max: usize,
    pub min: usize,
    pub degrees: Vec<usize>,
}

/// Shape of one connected component of an [`EdgeSubgraph`]; lengths count edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ComponentKind {
    Path(usize),
    Cycle(usize),
    Other,
}

/// `G[R]` for an edge set `R`: edges exactly `R`, vertices the endpoints of `R`.
#[derive(Debug, Clone)]
pub struct EdgeSubgraph<'g> {
    parent: &'g Graph,
    edges: Vec<Edge>,
    vertices: Vec<usize>,
}

impl<'g> EdgeSubgraph<'g> {
    pub fn new(parent: &'g Graph, edges: &[Edge]) -> Result<EdgeSubgraph<'g>> {
        let mut edges = edges.to_vec();
        edges.sort_unstable();
        edges.dedup();
        if let Some(&e) = edges.iter().find(|e| !parent.contains_edge(**e)) {
            return Err(GraphError::ForeignEdge(e));
        }
        let mut vertices: Vec<usize> = edges.iter().flat_map(|e| [e.u, e.v]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        Ok(EdgeSubgraph {
            parent,
            edges,
            vertices,
        })
    }

    pub fn parent(&self) -> &'g Graph {
        self.parent
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// `deg_H(v)`.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.u == v || e.v == v).count()
    }

    /// `N_H(v)` in increasing order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter(|e| e.u == v || e.v == v)
            .map(|e| e.other(v))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn max_degree(&self) -> usize {
        self.vertices
            .iter()
            .map(|&v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    /// Connected components as (vertices, edges), ordered by smallest vertex.
    pub fn components(&self) -> Vec<(Vec<usize>, Vec<Edge>)> {
        let n = self.parent.order();
        let mut root: Vec<usize> = (0..n).collect();
        fn find(root: &mut [usize], mut x: usize) -> usize {
            while root[x] != x {
                root[x] = root[root[x]];
                x = root[x];
            }
            x
        }
        for e in &self.edges {
            let (a, b) = (find(&mut root, e.u), find(&mut root, e.v));
            if a != b {
                root[a.max(b)] = a.min(b);
            }
        }
        let mut groups: Vec<(usize, Vec<usize>, Vec<Edge>)> = Vec::new();
        for &v in &self.vertices {
            let r = find(&mut root, v);
            match groups.iter_mut().find(|(gr, _, _)| *gr == r) {
                Some((_, vs, _)) => vs.push(v),
                None => groups.push((r, vec![v], Vec::new())),
            }
        }
        for e in &self.edges {
            let r = find(&mut root, e.u);
            if let Some((_, _, es)) = groups.iter_mut().find(|(gr, _, _)| *gr == r) {
                es.push(*e);
            }
        }
        groups.into_iter().map(|(_, vs, es)| (vs, es)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn classify_components(&self) -> Vec<ComponentKind> {
        self.components()
            .into_iter()
            .map(|(vs, es)| {
                let max_deg = vs
                    .iter()
                    .map(|&v| es.iter().filter(|e| e.u == v || e.v == v).count())
                    .max()
                    .unwrap_or(0);
                if max_deg > 2 {
                    ComponentKind::Other
                } else if es.len() + 1 == vs.len() {
                    ComponentKind::Path(es.len())
                } else {
                    ComponentKind::Cycle(es.len())
                }
            })
            .collect()
    }

    pub fn is_forest(&self) -> bool {
        self.components()
            .iter()
            .all(|(vs, es)| es.len() + 1 == vs.len())
    }
}
