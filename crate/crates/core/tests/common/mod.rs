//! Test-side oracles, written independently of the library solvers.

#![allow(dead_code)]

use pack2dom::Graph;
use rand::Rng;

fn subsets_of_size(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        n: usize,
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return visit(cur);
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            if rec(n, k, v + 1, cur, visit) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(n, k, 0, &mut Vec::new(), &mut visit)
}

pub fn dominates(g: &Graph, set: &[usize]) -> bool {
    (0..g.order()).all(|v| set.contains(&v) || g.neighbors(v).iter().any(|u| set.contains(u)))
}

pub fn covers(g: &Graph, set: &[usize]) -> bool {
    g.edges()
        .iter()
        .all(|e| set.contains(&e.u()) || set.contains(&e.v()))
}

/// Smallest k admitting a dominating k-set.
pub fn gamma_oracle(g: &Graph) -> usize {
    (0..=g.order())
        .find(|&k| subsets_of_size(g.order(), k, |s| dominates(g, s)))
        .unwrap()
}

/// Smallest k admitting a vertex cover of size k.
pub fn beta_oracle(g: &Graph) -> usize {
    (0..=g.order())
        .find(|&k| subsets_of_size(g.order(), k, |s| covers(g, s)))
        .unwrap()
}

/// Largest edge set with every vertex degree at most 2, by exhaustive search.
pub fn nu2_oracle(g: &Graph) -> usize {
    let edges = g.edges();
    let mut deg = vec![0u8; g.order()];
    fn rec(i: usize, taken: usize, edges: &[pack2dom::Edge], deg: &mut [u8], best: &mut usize) {
        if taken + (edges.len() - i) <= *best {
            return;
        }
        if i == edges.len() {
            *best = taken;
            return;
        }
        let (u, v) = edges[i].endpoints();
        if deg[u] < 2 && deg[v] < 2 {
            deg[u] += 1;
            deg[v] += 1;
            rec(i + 1, taken + 1, edges, deg, best);
            deg[u] -= 1;
            deg[v] -= 1;
        }
        rec(i + 1, taken, edges, deg, best);
    }
    let mut best = 0;
    rec(0, 0, &edges, &mut deg, &mut best);
    best
}

/// A connected graph on `n` vertices with at most `max_edges` edges
/// (but at least a spanning tree): a random tree plus random extra edges.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, max_edges: usize) -> Graph {
    let tree = n.saturating_sub(1);
    let cap = max_edges.max(tree).min(n * n.saturating_sub(1) / 2);
    let target = rng.gen_range(tree..=cap);
    let mut edges: std::collections::BTreeSet<(usize, usize)> =
        (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    while edges.len() < target {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            edges.insert((u.min(v), u.max(v)));
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::new(n, &edges).unwrap()
}

pub fn permuted<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    use rand::seq::SliceRandom;
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.permute(&perm)
}
