//! Canonical labeling for small graphs.
//!
//! Colors start from vertex degrees and are refined until stable; the search
//! then individualizes vertices of the first non-singleton cell and recurses.
//! Every leaf is a vertex ordering, and the canonical form is the graph6
//! string of the ordering whose adjacency bit string is lexicographically
//! smallest. Subtrees related by a known automorphism (twin transpositions,
//! or automorphisms discovered at equal leaves) are skipped.

use std::fmt;

use crate::bounds::{self, SolverBounds};
use crate::error::Result;
use crate::graph::Graph;
use crate::graph6;

/// The graph6 string of the canonical relabeling. Equal forms mean isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    pub fn into_string(self) -> String {
        self.0
    }

    /// Decodes the canonical representative.
    pub fn graph(&self) -> Graph {
        graph6::parse_graph6(&self.0).expect("canonical forms are valid graph6")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    bounds::check(
        "canonical form vertex",
        g.order(),
        SolverBounds::global().canon_n,
    )?;
    Ok(canonical_form_unbounded(g))
}

/// `order[i]` is the vertex placed at position `i` of the canonical labeling.
pub fn canonical_order(g: &Graph) -> Result<Vec<usize>> {
    bounds::check(
        "canonical form vertex",
        g.order(),
        SolverBounds::global().canon_n,
    )?;
    Ok(search(g))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    let mut da = a.degree_profile().degrees;
    let mut db = b.degree_profile().degrees;
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

pub(crate) fn canonical_form_unbounded(g: &Graph) -> CanonicalForm {
    let order = search(g);
    CanonicalForm(graph6::encode_ordered(g, &order))
}

/// The canonically relabeled graph itself.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let order = canonical_order(g)?;
    let mut perm = vec![0; g.order()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(g.permute(&perm))
}

fn search(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let mut colors: Vec<u32> = g
        .degree_profile()
        .degrees
        .iter()
        .map(|&d| d as u32)
        .collect();
    normalize(&mut colors);
    refine(g, &mut colors);
    let mut state = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
        prefix: Vec::new(),
    };
    state.descend(colors);
    state.best.expect("search visits at least one leaf").1
}

struct Search<'g> {
    g: &'g Graph,
    best: Option<(Vec<u8>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
    prefix: Vec<usize>,
}

impl Search<'_> {
    fn descend(&mut self, colors: Vec<u32>) {
        let n = colors.len();
        let cells = cell_sizes(&colors);
        let Some(target) = cells.iter().position(|&size| size > 1) else {
            self.leaf(&colors);
            return;
        };
        let candidates: Vec<usize> = (0..n).filter(|&v| colors[v] as usize == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &candidates {
            if explored.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            if !explored.is_empty() {
                let orbits = self.stabilizer_orbits();
                if explored.iter().any(|&u| orbits[u] == orbits[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = individualize(&colors, v);
            refine(self.g, &mut child);
            self.prefix.push(v);
            self.descend(child);
            self.prefix.pop();
        }
    }

    fn leaf(&mut self, colors: &[u32]) {
        let mut order = vec![0; colors.len()];
        for (v, &c) in colors.iter().enumerate() {
            order[c as usize] = v;
        }
        let cert = graph6::pack_bits(self.g, &order);
        match &self.best {
            Some((best_cert, _)) if cert > *best_cert => {}
            Some((best_cert, best_order)) if cert == *best_cert => {
                let mut auto = vec![0; order.len()];
                for (i, &v) in best_order.iter().enumerate() {
                    auto[v] = order[i];
                }
                if auto.iter().enumerate().any(|(v, &w)| v != w) {
                    self.automorphisms.push(auto);
                }
            }
            _ => self.best = Some((cert, order)),
        }
    }

    /// Swapping `u` and `v` is an automorphism when their neighborhoods agree
    /// outside `{u, v}`.
    fn twins(&self, u: usize, v: usize) -> bool {
        let strip = |x: usize, other: usize| {
            self.g
                .neighbors(x)
                .iter()
                .copied()
                .filter(move |&w| w != other)
        };
        strip(u, v).eq(strip(v, u))
    }

    /// Orbit representatives under the stored automorphisms that fix the
    /// current prefix pointwise.
    fn stabilizer_orbits(&self) -> Vec<usize> {
        let n = self.g.order();
        let mut root: Vec<usize> = (0..n).collect();
        fn find(root: &mut [usize], mut x: usize) -> usize {
            while root[x] != x {
                root[x] = root[root[x]];
                x = root[x];
            }
            x
        }
        for auto in &self.automorphisms {
            if self.prefix.iter().any(|&p| auto[p] != p) {
                continue;
            }
            for (v, &w) in auto.iter().enumerate() {
                let (a, b) = (find(&mut root, v), find(&mut root, w));
                if a != b {
                    root[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut root, v)).collect()
    }
}

fn cell_sizes(colors: &[u32]) -> Vec<usize> {
    let mut sizes = vec![0; colors.len()];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    sizes
}

/// Replaces each color by the number of vertices with a strictly smaller
/// color, i.e. the first position of its cell. A discrete coloring is then
/// exactly a permutation of `0..n`.
fn normalize(colors: &mut [u32]) {
    let mut sorted: Vec<u32> = colors.to_vec();
    sorted.sort_unstable();
    for c in colors.iter_mut() {
        *c = sorted.partition_point(|&x| x < *c) as u32;
    }
}

fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let mut keyed: Vec<u32> = colors
        .iter()
        .enumerate()
        .map(|(w, &c)| 2 * c + u32::from(w != v))
        .collect();
    normalize(&mut keyed);
    keyed
}

/// Iterated neighbor-color refinement. A vertex's new color is determined by
/// its old color and the sorted multiset of its neighbors' colors, so the
/// result is label-invariant and never merges cells.
fn refine(g: &Graph, colors: &mut Vec<u32>) {
    let n = colors.len();
    let mut distinct = count_distinct(colors);
    loop {
        if distinct == n {
            return;
        }
        let signatures: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted: Vec<&(u32, Vec<u32>)> = signatures.iter().collect();
        sorted.sort();
        let mut next = vec![0u32; n];
        for (v, sig) in signatures.iter().enumerate() {
            next[v] = sorted.partition_point(|s| *s < sig) as u32;
        }
        let next_distinct = count_distinct(&next);
        *colors = next;
        if next_distinct == distinct {
            return;
        }
        distinct = next_distinct;
    }
}

fn count_distinct(colors: &[u32]) -> usize {
    cell_sizes(colors).iter().filter(|&&s| s > 0).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(rng);
        p
    }

    #[test]
    fn cycle_relabelings_agree() {
        let c5 = Graph::cycle(5);
        let other = Graph::new(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(
            canonical_form(&c5).unwrap(),
            canonical_form(&other).unwrap()
        );
        assert_ne!(
            canonical_form(&c5).unwrap(),
            canonical_form(&Graph::path(5)).unwrap()
        );
    }

    #[test]
    fn invariant_under_random_permutations() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let graphs = [
            Graph::petersen(),
            Graph::complete(7),
            Graph::empty(6),
            Graph::star(8),
            Graph::cycle(12),
            Graph::new(
                9,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 0),
                    (4, 5),
                    (5, 6),
                    (6, 4),
                    (7, 8),
                ],
            )
            .unwrap(),
        ];
        for g in &graphs {
            let cf = canonical_form(g).unwrap();
            for _ in 0..100 {
                let h = g.permute(&random_perm(g.order(), &mut rng));
                assert_eq!(canonical_form(&h).unwrap(), cf);
            }
        }
    }

    #[test]
    fn canonical_graph_matches_form() {
        let g = Graph::petersen();
        let cg = canonical_graph(&g).unwrap();
        assert_eq!(
            graph6::to_graph6(&cg).unwrap(),
            canonical_form(&g).unwrap().as_str()
        );
        assert_eq!(canonical_form(&cg).unwrap(), canonical_form(&g).unwrap());
    }

    #[test]
    fn isomorphism_checks() {
        assert!(!are_isomorphic(&Graph::complete(4), &Graph::cycle(4)).unwrap());
        let g = Graph::petersen();
        let h = g.permute(&[3, 7, 1, 9, 0, 2, 8, 4, 6, 5]);
        assert!(are_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn regular_non_isomorphic_pair() {
        // Two 3-regular graphs on 6 vertices: K_{3,3} and the prism.
        let k33 = Graph::new(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let prism = Graph::new(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert!(!are_isomorphic(&k33, &prism).unwrap());
    }

    #[test]
    fn bound_is_enforced() {
        assert!(canonical_form(&Graph::path(13)).unwrap_err().is_bound());
    }
}
