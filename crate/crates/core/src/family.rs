//! The extremal trees `T(s, t)`: a center `v2` carrying the two legs of the
//! 5-vertex path `v0 v1 v2 v3 v4`, `s` further pendant 2-vertex legs
//! `v2 p_i q_i`, and `t` pendant leaves `v2 w_i`. With `r = s + 4`, such a
//! tree has domination number `r - 1` and 2-packing number `r`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyParams {
    pub s: usize,
    pub t: usize,
    pub r: usize,
}

impl FamilyParams {
    pub fn new(s: usize, t: usize) -> Result<FamilyParams> {
        if s < 1 || t < 1 {
            return Err(GraphError::InvalidParams(format!(
                "need s >= 1 and t >= 1, got s={s}, t={t}"
            )));
        }
        Ok(FamilyParams { s, t, r: s + 4 })
    }

    pub fn order(&self) -> usize {
        5 + 2 * self.s + self.t
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{},{})", self.s, self.t, self.r)
    }
}

/// Which vertex plays which role in a generated tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoleMap {
    pub v: [usize; 5],
    pub p: Vec<usize>,
    pub q: Vec<usize>,
    pub w: Vec<usize>,
}

/// Builds `T(s, t)` with vertices `v0..v4 = 0..4`, then `p_1..p_s`, `q_1..q_s`, `w_1..w_t`.
pub fn generate_family(s: usize, t: usize) -> Result<(Graph, RoleMap)> {
    let params = FamilyParams::new(s, t)?;
    let v = [0, 1, 2, 3, 4];
    let p: Vec<usize> = (5..5 + s).collect();
    let q: Vec<usize> = (5 + s..5 + 2 * s).collect();
    let w: Vec<usize> = (5 + 2 * s..5 + 2 * s + t).collect();

    let mut edges: Vec<(usize, usize)> = v.windows(2).map(|pair| (pair[0], pair[1])).collect();
    edges.extend(p.iter().zip(&q).map(|(&pi, &qi)| (pi, qi)));
    edges.extend(w.iter().map(|&wi| (v[2], wi)));
    edges.extend(p.iter().map(|&pi| (v[2], pi)));

    let g = Graph::new(params.order(), &edges)?;
    Ok((g, RoleMap { v, p, q, w }))
}

/// Closed-form `(γ, ν₂) = (r - 1, r)`.
pub fn family_invariants(p: FamilyParams) -> (usize, usize) {
    (p.r - 1, p.r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RejectReason {
    NotATree,
    NoCenter,
    BadLeg,
    #[serde(rename = "too-few-2-legs")]
    TooFew2Legs,
    NoLeafLeg,
}

impl RejectReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            RejectReason::NotATree => "not-a-tree",
            RejectReason::NoCenter => "no-center",
            RejectReason::BadLeg => "bad-leg",
            RejectReason::TooFew2Legs => "too-few-2-legs",
            RejectReason::NoLeafLeg => "no-leaf-leg",
        }
    }
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    Member(FamilyParams, RoleMap),
    Rejected(RejectReason),
}

impl Recognition {
    pub fn params(&self) -> Option<FamilyParams> {
        match self {
            Recognition::Member(p, _) => Some(*p),
            Recognition::Rejected(_) => None,
        }
    }

    pub fn is_member(&self) -> bool {
        matches!(self, Recognition::Member(..))
    }
}

impl fmt::Display for Recognition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recognition::Member(p, _) => write!(f, "{p}"),
            Recognition::Rejected(reason) => write!(f, "reject: {reason}"),
        }
    }
}

/// Decides whether `g` is isomorphic to some `T(s, t)` with `s, t >= 1`,
/// structurally and in linear time.
pub fn recognize(g: &Graph) -> Recognition {
    let n = g.order();
    if n == 0 || g.size() + 1 != n || !g.is_connected() {
        return Recognition::Rejected(RejectReason::NotATree);
    }
    let candidates: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    if candidates.is_empty() {
        return Recognition::Rejected(RejectReason::NoCenter);
    }
    let mut first_reason = None;
    for &c in &candidates {
        match legs_around(g, c) {
            Ok(found) => return found,
            Err(reason) => {
                first_reason.get_or_insert(reason);
            }
        }
    }
    Recognition::Rejected(first_reason.expect("at least one candidate was tried"))
}

fn legs_around(g: &Graph, c: usize) -> std::result::Result<Recognition, RejectReason> {
    let mut two_legs = Vec::new();
    let mut leaves = Vec::new();
    for &x in g.neighbors(c) {
        match g.degree(x) {
            1 => leaves.push(x),
            2 => {
                let y = g
                    .neighbors(x)
                    .iter()
                    .copied()
                    .find(|&y| y != c)
                    .expect("degree 2");
                if g.degree(y) != 1 {
                    return Err(RejectReason::BadLeg);
                }
                two_legs.push((x, y));
            }
            _ => return Err(RejectReason::BadLeg),
        }
    }
    if two_legs.len() < 3 {
        return Err(RejectReason::TooFew2Legs);
    }
    if leaves.is_empty() {
        return Err(RejectReason::NoLeafLeg);
    }
    let params = FamilyParams::new(two_legs.len() - 2, leaves.len())
        .expect("leg counts satisfy the parameter bounds");
    let (a, b) = (two_legs[0], two_legs[1]);
    let roles = RoleMap {
        v: [a.1, a.0, c, b.0, b.1],
        p: two_legs[2..].iter().map(|l| l.0).collect(),
        q: two_legs[2..].iter().map(|l| l.1).collect(),
        w: leaves,
    };
    Ok(Recognition::Member(params, roles))
}
