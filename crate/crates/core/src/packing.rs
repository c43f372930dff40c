//! Edge 2-packings: edge sets in which no vertex meets three edges, i.e.
//! subgraphs of maximum degree at most two.
//!
//! The default solver reduces the problem to maximum matching. Every vertex
//! gets as many copies as its remaining capacity (at most 2); every edge
//! `uv` becomes a pair of gadget nodes `e_u`, `e_v` joined to each other,
//! with `e_u` adjacent to the copies of `u` and `e_v` to those of `v`. A
//! maximum matching of that auxiliary graph has size `|E| + ν₂`, and the
//! edges whose two gadget nodes are both matched to copies form an optimal
//! packing.

use crate::bounds::{self, SolverBounds};
use crate::error::{GraphError, Result};
use crate::graph::{Edge, EdgeSubgraph, Graph};
use crate::matching;

/// A validated edge set with at most two edges at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoPacking<'g> {
    parent: &'g Graph,
    edges: Vec<Edge>,
}

impl<'g> TwoPacking<'g> {
    pub fn new(parent: &'g Graph, edges: &[Edge]) -> Result<TwoPacking<'g>> {
        let mut edges = edges.to_vec();
        edges.sort_unstable();
        edges.dedup();
        if !is_2packing(parent, &edges)? {
            return Err(GraphError::InvalidParams(
                "edge set has a vertex of degree 3 or more".into(),
            ));
        }
        Ok(TwoPacking { parent, edges })
    }

    pub fn parent(&self) -> &'g Graph {
        self.parent
    }

    /// Edges in normalized lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `G[R]`.
    pub fn subgraph(&self) -> EdgeSubgraph<'g> {
        EdgeSubgraph::new(self.parent, &self.edges).expect("packing edges belong to the parent")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PackingMethod {
    Oracle,
    Matching,
}

#[derive(Debug, Clone)]
pub struct PackingResult<'g> {
    pub nu2: usize,
    pub witness: TwoPacking<'g>,
    pub method: PackingMethod,
}

/// True iff every vertex meets at most two edges of the set (duplicates
/// count once).
pub fn is_2packing(g: &Graph, edges: &[Edge]) -> Result<bool> {
    let mut load = vec![0u8; g.order()];
    let mut sorted = edges.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for e in &sorted {
        if !g.contains_edge(*e) {
            return Err(GraphError::ForeignEdge(*e));
        }
        for x in [e.u(), e.v()] {
            load[x] += 1;
            if load[x] > 2 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// ν₂ by exhaustive search over edges (include-first, degree pruning). The
/// first optimum found is the lexicographically smallest one.
pub fn nu2_bruteforce(g: &Graph) -> Result<PackingResult<'_>> {
    let edges = g.edges();
    bounds::check(
        "2-packing oracle edge",
        edges.len(),
        SolverBounds::global().packing_edges,
    )?;

    struct Dfs<'a> {
        edges: &'a [Edge],
        load: Vec<u8>,
        current: Vec<Edge>,
        best: Vec<Edge>,
    }
    impl Dfs<'_> {
        fn go(&mut self, i: usize) {
            if self.current.len() + (self.edges.len() - i) <= self.best.len() {
                return;
            }
            if i == self.edges.len() {
                self.best = self.current.clone();
                return;
            }
            let e = self.edges[i];
            let (u, v) = e.endpoints();
            if self.load[u] < 2 && self.load[v] < 2 {
                self.load[u] += 1;
                self.load[v] += 1;
                self.current.push(e);
                self.go(i + 1);
                self.current.pop();
                self.load[u] -= 1;
                self.load[v] -= 1;
            }
            self.go(i + 1);
        }
    }
    let mut dfs = Dfs {
        edges: &edges,
        load: vec![0; g.order()],
        current: Vec::new(),
        best: Vec::new(),
    };
    dfs.go(0);
    Ok(PackingResult {
        nu2: dfs.best.len(),
        witness: TwoPacking {
            parent: g,
            edges: dfs.best,
        },
        method: PackingMethod::Oracle,
    })
}

/// ν₂ via the matching reduction, with the lexicographically smallest
/// optimal packing as witness.
pub fn nu2_matching(g: &Graph) -> PackingResult<'_> {
    let edges = g.edges();
    let mut caps = vec![2u8; g.order()];
    let nu2 = max_degree_two_subgraph(g.order(), &edges, &caps).len();

    // Fix edges greedily in order, keeping one whenever the rest can still
    // complete an optimum.
    let mut chosen = Vec::with_capacity(nu2);
    for (i, &e) in edges.iter().enumerate() {
        if chosen.len() == nu2 {
            break;
        }
        let (u, v) = e.endpoints();
        if caps[u] == 0 || caps[v] == 0 {
            continue;
        }
        caps[u] -= 1;
        caps[v] -= 1;
        let rest = max_degree_two_subgraph(g.order(), &edges[i + 1..], &caps).len();
        if chosen.len() + 1 + rest == nu2 {
            chosen.push(e);
        } else {
            caps[u] += 1;
            caps[v] += 1;
        }
    }
    debug_assert_eq!(chosen.len(), nu2);
    PackingResult {
        nu2,
        witness: TwoPacking {
            parent: g,
            edges: chosen,
        },
        method: PackingMethod::Matching,
    }
}

/// ν₂ only, one matching computation.
pub fn nu2(g: &Graph) -> usize {
    max_degree_two_subgraph(g.order(), &g.edges(), &vec![2; g.order()]).len()
}

/// A maximum subset of `edges` in which vertex `v` has degree at most `caps[v]`.
pub(crate) fn max_degree_two_subgraph(n: usize, edges: &[Edge], caps: &[u8]) -> Vec<Edge> {
    let mut copies: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut next = 0;
    for &c in caps.iter().take(n) {
        copies.push((next..next + c as usize).collect());
        next += c as usize;
    }
    let gadget_base = next;
    let total = gadget_base + 2 * edges.len();
    let mut adj = vec![Vec::new(); total];
    for (i, e) in edges.iter().enumerate() {
        let (eu, ev) = (gadget_base + 2 * i, gadget_base + 2 * i + 1);
        adj[eu].push(ev);
        adj[ev].push(eu);
        for (node, x) in [(eu, e.u()), (ev, e.v())] {
            for &c in &copies[x] {
                adj[node].push(c);
                adj[c].push(node);
            }
        }
    }
    let mate = matching::match_adjacency(&adj);
    edges
        .iter()
        .enumerate()
        .filter(|&(i, _)| {
            let (eu, ev) = (gadget_base + 2 * i, gadget_base + 2 * i + 1);
            mate[eu] < gadget_base && mate[ev] < gadget_base
        })
        .map(|(_, &e)| e)
        .collect()
}

/// Every maximum 2-packing of `g`, in lexicographic order.
pub fn enumerate_max_2packings(g: &Graph) -> Result<Vec<TwoPacking<'_>>> {
    let edges = g.edges();
    bounds::check(
        "2-packing enumeration edge",
        edges.len(),
        SolverBounds::global().packing_edges,
    )?;
    let target = nu2(g);
    let mut remaining = vec![0u8; g.order()];
    for e in &edges {
        remaining[e.u()] += 1;
        remaining[e.v()] += 1;
    }

    struct Dfs<'a> {
        edges: &'a [Edge],
        target: usize,
        load: Vec<u8>,
        remaining: Vec<u8>,
        current: Vec<Edge>,
        found: Vec<Vec<Edge>>,
    }
    impl Dfs<'_> {
        // Each vertex can still absorb min(free capacity, unseen incident edges).
        fn upper_bound(&self, i: usize) -> usize {
            let slack: usize = self
                .load
                .iter()
                .zip(&self.remaining)
                .map(|(&l, &r)| (2 - l).min(r) as usize)
                .sum();
            self.current.len() + (slack / 2).min(self.edges.len() - i)
        }

        fn go(&mut self, i: usize) {
            if self.current.len() == self.target {
                self.found.push(self.current.clone());
                return;
            }
            if i == self.edges.len() || self.upper_bound(i) < self.target {
                return;
            }
            let e = self.edges[i];
            let (u, v) = e.endpoints();
            self.remaining[u] -= 1;
            self.remaining[v] -= 1;
            if self.load[u] < 2 && self.load[v] < 2 {
                self.load[u] += 1;
                self.load[v] += 1;
                self.current.push(e);
                self.go(i + 1);
                self.current.pop();
                self.load[u] -= 1;
                self.load[v] -= 1;
            }
            self.go(i + 1);
            self.remaining[u] += 1;
            self.remaining[v] += 1;
        }
    }

    let mut dfs = Dfs {
        edges: &edges,
        target,
        load: vec![0; g.order()],
        remaining,
        current: Vec::new(),
        found: Vec::new(),
    };
    dfs.go(0);
    Ok(dfs
        .found
        .into_iter()
        .map(|edges| TwoPacking { parent: g, edges })
        .collect())
}
