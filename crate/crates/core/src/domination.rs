//! Exact domination, vertex cover and independence numbers.
//!
//! All solvers work on 64-bit vertex masks and therefore accept graphs with
//! at most 64 vertices. Isolated vertices are allowed.

use crate::bounds::{self, SolverBounds, EXACT_MAX_N};
use crate::error::{GraphError, Result};
use crate::graph::Graph;

macro_rules! vertex_set {
    ($(#[$meta:meta])* $name:ident, $check:ident, $what:literal) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq)]
        pub struct $name<'g> {
            parent: &'g Graph,
            vertices: Vec<usize>,
        }

        impl<'g> $name<'g> {
            /// Validates the set against the parent graph.
            pub fn new(parent: &'g Graph, vertices: &[usize]) -> Result<$name<'g>> {
                let mut vertices = vertices.to_vec();
                vertices.sort_unstable();
                vertices.dedup();
                if !$check(parent, &vertices)? {
                    return Err(GraphError::InvalidParams(format!(
                        "{:?} is not {}",
                        vertices, $what
                    )));
                }
                Ok($name { parent, vertices })
            }

            pub fn parent(&self) -> &'g Graph {
                self.parent
            }

            /// Members in increasing order.
            pub fn vertices(&self) -> &[usize] {
                &self.vertices
            }

            pub fn len(&self) -> usize {
                self.vertices.len()
            }

            pub fn is_empty(&self) -> bool {
                self.vertices.is_empty()
            }
        }
    };
}

vertex_set!(
    /// A vertex set whose closed neighborhoods cover the graph.
    DominatingSet,
    is_dominating_set,
    "a dominating set"
);
vertex_set!(
    /// A vertex set touching every edge.
    VertexCover,
    is_vertex_cover,
    "a vertex cover"
);
vertex_set!(
    /// Pairwise non-adjacent vertices.
    IndependentSet,
    is_independent_set,
    "an independent set"
);

fn check_members(g: &Graph, s: &[usize]) -> Result<Vec<bool>> {
    let mut member = vec![false; g.order()];
    for &v in s {
        if v >= g.order() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: g.order(),
            });
        }
        member[v] = true;
    }
    Ok(member)
}

pub fn is_dominating_set(g: &Graph, s: &[usize]) -> Result<bool> {
    let member = check_members(g, s)?;
    Ok((0..g.order()).all(|v| member[v] || g.neighbors(v).iter().any(|&u| member[u])))
}

pub fn is_vertex_cover(g: &Graph, s: &[usize]) -> Result<bool> {
    let member = check_members(g, s)?;
    Ok(g.edges().iter().all(|e| member[e.u()] || member[e.v()]))
}

pub fn is_independent_set(g: &Graph, s: &[usize]) -> Result<bool> {
    let member = check_members(g, s)?;
    Ok(g.edges().iter().all(|e| !(member[e.u()] && member[e.v()])))
}

fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// γ(G) with a minimum dominating set, by branch-and-bound set cover over
/// closed neighborhoods.
pub fn gamma_exact(g: &Graph) -> Result<DominatingSet<'_>> {
    let n = g.order();
    bounds::check("exact solver vertex", n, EXACT_MAX_N)?;
    let closed: Vec<u64> = (0..n).map(|v| g.neighbor_mask(v) | 1 << v).collect();
    let all = full_mask(n);

    let greedy = greedy_dominating(&closed, all);
    let mut search = SetCover {
        closed: &closed,
        all,
        best: greedy,
        best_size: greedy.count_ones(),
    };
    search.branch(0, 0);
    Ok(DominatingSet {
        parent: g,
        vertices: mask_to_vec(search.best),
    })
}

fn greedy_dominating(closed: &[u64], all: u64) -> u64 {
    let mut covered = 0u64;
    let mut chosen = 0u64;
    while covered != all {
        let best = (0..closed.len())
            .max_by_key(|&v| ((closed[v] & !covered).count_ones(), std::cmp::Reverse(v)))
            .expect("uncovered vertices imply n > 0");
        chosen |= 1 << best;
        covered |= closed[best];
    }
    chosen
}

struct SetCover<'a> {
    closed: &'a [u64],
    all: u64,
    best: u64,
    best_size: u32,
}

impl SetCover<'_> {
    fn lower_bound(&self, covered: u64) -> u32 {
        let uncovered = self.all & !covered;
        // Uncovered vertices with pairwise disjoint closed neighborhoods need
        // distinct dominators.
        let mut packed = 0u64;
        let mut disjoint = 0;
        let mut rest = uncovered;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.closed[v] & packed == 0 {
                packed |= self.closed[v];
                disjoint += 1;
            }
        }
        let max_gain = self
            .closed
            .iter()
            .map(|c| (c & uncovered).count_ones())
            .max()
            .unwrap_or(1)
            .max(1);
        disjoint.max(uncovered.count_ones().div_ceil(max_gain))
    }

    fn branch(&mut self, covered: u64, chosen: u64) {
        if covered == self.all {
            let size = chosen.count_ones();
            if size < self.best_size {
                self.best_size = size;
                self.best = chosen;
            }
            return;
        }
        if chosen.count_ones() + self.lower_bound(covered) >= self.best_size {
            return;
        }
        // Uncovered vertex with the fewest dominators; lowest index on ties.
        let uncovered = self.all & !covered;
        let mut target = usize::MAX;
        let mut options = u32::MAX;
        let mut rest = uncovered;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let count = self.closed[v].count_ones();
            if count < options {
                options = count;
                target = v;
            }
        }
        let mut candidates = mask_to_vec(self.closed[target]);
        candidates.sort_by_key(|&u| std::cmp::Reverse((self.closed[u] & uncovered).count_ones()));
        for u in candidates {
            self.branch(covered | self.closed[u], chosen | 1 << u);
        }
    }
}

/// β(G) with a minimum vertex cover.
pub fn beta_exact(g: &Graph) -> Result<VertexCover<'_>> {
    let n = g.order();
    bounds::check("exact solver vertex", n, EXACT_MAX_N)?;
    let adj: Vec<u64> = (0..n).map(|v| g.neighbor_mask(v)).collect();
    let mut search = CoverSearch {
        adj: &adj,
        best: full_mask(n),
        best_size: n as u32,
    };
    search.branch(full_mask(n), 0);
    let cover = mask_to_vec(search.best);
    debug_assert!(is_independent_set(
        g,
        &(0..n).filter(|v| !cover.contains(v)).collect::<Vec<_>>()
    )
    .unwrap_or(false));
    Ok(VertexCover {
        parent: g,
        vertices: cover,
    })
}

/// α(G), as the complement of a minimum vertex cover.
pub fn alpha_exact(g: &Graph) -> Result<IndependentSet<'_>> {
    let cover = beta_exact(g)?;
    let vertices: Vec<usize> = (0..g.order())
        .filter(|v| cover.vertices.binary_search(v).is_err())
        .collect();
    Ok(IndependentSet {
        parent: g,
        vertices,
    })
}

struct CoverSearch<'a> {
    adj: &'a [u64],
    best: u64,
    best_size: u32,
}

impl CoverSearch<'_> {
    fn degree(&self, alive: u64, v: usize) -> u32 {
        (self.adj[v] & alive).count_ones()
    }

    /// Greedy maximal matching size on the live subgraph.
    fn matching_bound(&self, alive: u64) -> u32 {
        let mut free = alive;
        let mut size = 0;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if free >> v & 1 == 0 {
                continue;
            }
            let nb = self.adj[v] & free;
            if nb != 0 {
                let u = nb.trailing_zeros();
                free &= !(1 << v | 1 << u);
                size += 1;
            }
        }
        size
    }

    fn branch(&mut self, mut alive: u64, mut chosen: u64) {
        // Reductions: drop isolated vertices, take the neighbor of a pendant
        // vertex, take both neighbors of a degree-2 vertex inside a triangle.
        loop {
            let mut changed = false;
            let mut rest = alive;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if alive >> v & 1 == 0 {
                    continue;
                }
                let nb = self.adj[v] & alive;
                match nb.count_ones() {
                    0 => {
                        alive &= !(1 << v);
                        changed = true;
                    }
                    1 => {
                        chosen |= nb;
                        alive &= !(nb | 1 << v);
                        changed = true;
                    }
                    2 => {
                        let a = nb.trailing_zeros() as usize;
                        let b = (nb & (nb - 1)).trailing_zeros() as usize;
                        if self.adj[a] >> b & 1 == 1 {
                            chosen |= nb;
                            alive &= !(nb | 1 << v);
                            changed = true;
                        }
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }
        if alive == 0 {
            let size = chosen.count_ones();
            if size < self.best_size {
                self.best_size = size;
                self.best = chosen;
            }
            return;
        }
        if chosen.count_ones() + self.matching_bound(alive) >= self.best_size {
            return;
        }
        let mut pivot = usize::MAX;
        let mut pivot_degree = 0;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = self.degree(alive, v);
            if d > pivot_degree {
                pivot_degree = d;
                pivot = v;
            }
        }
        let nb = self.adj[pivot] & alive;
        self.branch(alive & !(1 << pivot), chosen | 1 << pivot);
        self.branch(alive & !(nb | 1 << pivot), chosen | nb);
    }
}

/// γ(G) by enumerating vertex subsets in increasing size (reference oracle).
pub fn gamma_bruteforce(g: &Graph) -> Result<usize> {
    let n = g.order();
    bounds::check(
        "domination oracle vertex",
        n,
        SolverBounds::global().gamma_oracle_n.min(EXACT_MAX_N - 1),
    )?;
    let closed: Vec<u64> = (0..n).map(|v| g.neighbor_mask(v) | 1 << v).collect();
    let all = full_mask(n);
    for k in 0..=n {
        if k == 0 {
            if n == 0 {
                return Ok(0);
            }
            continue;
        }
        // Gosper's hack over k-subsets of n.
        let mut subset: u64 = (1u64 << k) - 1;
        while subset <= all {
            let mut covered = 0u64;
            let mut rest = subset;
            while rest != 0 {
                covered |= closed[rest.trailing_zeros() as usize];
                rest &= rest - 1;
            }
            if covered == all {
                return Ok(k);
            }
            let c = subset & subset.wrapping_neg();
            let r = subset.wrapping_add(c);
            if r == 0 {
                break;
            }
            subset = (((r ^ subset) >> 2) / c) | r;
        }
    }
    unreachable!("the whole vertex set dominates")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Minimum over all vertex subsets satisfying `ok`, by increasing size.
    fn min_subset(n: usize, ok: impl Fn(&[usize]) -> bool) -> usize {
        (0u32..1 << n)
            .filter(|&m| ok(&mask_to_vec(m as u64)))
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn dominating_predicate() {
        let k5 = Graph::complete(5);
        assert!((0..5).all(|v| is_dominating_set(&k5, &[v]).unwrap()));
        let p3 = Graph::path(3);
        assert!(is_dominating_set(&p3, &[1]).unwrap());
        assert!(!is_dominating_set(&p3, &[0]).unwrap());
        assert!(is_dominating_set(&p3, &[0, 1, 2]).unwrap());
        assert!(is_dominating_set(&p3, &[5]).is_err());
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma_exact(&Graph::complete(6)).unwrap().len(), 1);
        assert_eq!(gamma_exact(&Graph::path(7)).unwrap().len(), 3);
        assert_eq!(gamma_bruteforce(&Graph::path(7)).unwrap(), 3);
        assert_eq!(gamma_bruteforce(&Graph::star(5)).unwrap(), 1);
        assert_eq!(gamma_bruteforce(&Graph::cycle(9)).unwrap(), 3);
        assert_eq!(gamma_exact(&Graph::petersen()).unwrap().len(), 3);
        assert_eq!(gamma_exact(&Graph::empty(3)).unwrap().len(), 3);
        assert_eq!(gamma_exact(&Graph::empty(0)).unwrap().len(), 0);
        assert_eq!(gamma_bruteforce(&Graph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn gamma_against_subset_oracle() {
        for g in [Graph::path(7), Graph::cycle(9), Graph::petersen()] {
            let n = g.order();
            let expect = min_subset(n, |s| is_dominating_set(&g, s).unwrap());
            assert_eq!(gamma_exact(&g).unwrap().len(), expect);
            assert_eq!(gamma_bruteforce(&g).unwrap(), expect);
        }
    }

    #[test]
    fn cover_and_independence() {
        assert_eq!(beta_exact(&Graph::star(6)).unwrap().vertices(), &[0]);
        assert_eq!(beta_exact(&Graph::cycle(5)).unwrap().len(), 3);
        assert_eq!(beta_exact(&Graph::complete(4)).unwrap().len(), 3);
        assert_eq!(alpha_exact(&Graph::complete(4)).unwrap().len(), 1);
        assert_eq!(alpha_exact(&Graph::cycle(5)).unwrap().len(), 2);
        assert_eq!(alpha_exact(&Graph::empty(5)).unwrap().len(), 5);
        for g in [Graph::cycle(5), Graph::complete(4), Graph::petersen()] {
            let expect = min_subset(g.order(), |s| is_vertex_cover(&g, s).unwrap());
            assert_eq!(beta_exact(&g).unwrap().len(), expect);
        }
    }

    #[test]
    fn witnesses_validate() {
        let g = Graph::petersen();
        let d = gamma_exact(&g).unwrap();
        assert!(DominatingSet::new(&g, d.vertices()).is_ok());
        let c = beta_exact(&g).unwrap();
        assert!(VertexCover::new(&g, c.vertices()).is_ok());
        let i = alpha_exact(&g).unwrap();
        assert!(IndependentSet::new(&g, i.vertices()).is_ok());
        assert_eq!(c.len() + i.len(), g.order());
        assert!(DominatingSet::new(&g, &[0]).is_err());
    }

    #[test]
    fn bounds() {
        assert!(gamma_bruteforce(&Graph::empty(21)).unwrap_err().is_bound());
        assert!(gamma_exact(&Graph::empty(65)).unwrap_err().is_bound());
    }
}
