//! Size limits for the exhaustive oracles and the canonical labeler.
//!
//! Defaults can be overridden through `PACK2DOM_SOLVER_BOUND`, either as a
//! bare integer (the edge limit for 2-packing enumeration and brute force) or
//! as a comma-separated `key=value` list:
//!
//! ```text
//! PACK2DOM_SOLVER_BOUND=packing_edges=20,gamma_oracle_n=16,canon_n=10
//! ```

use std::sync::OnceLock;

use crate::error::{GraphError, Result};

pub const ENV_VAR: &str = "PACK2DOM_SOLVER_BOUND";

/// Largest vertex count the bitset-based exact solvers accept.
pub const EXACT_MAX_N: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverBounds {
    /// Edge limit for `nu2_bruteforce` and `enumerate_max_2packings`.
    pub packing_edges: usize,
    /// Vertex limit for `gamma_bruteforce`.
    pub gamma_oracle_n: usize,
    /// Vertex limit for canonical labeling.
    pub canon_n: usize,
    /// Vertex limit for builtin enumeration.
    pub enumerate_n: usize,
}

impl Default for SolverBounds {
    fn default() -> Self {
        SolverBounds {
            packing_edges: 24,
            gamma_oracle_n: 20,
            canon_n: 12,
            enumerate_n: 8,
        }
    }
}

impl SolverBounds {
    /// Parses an override string on top of the defaults.
    pub fn parse(text: &str) -> std::result::Result<SolverBounds, String> {
        let mut bounds = SolverBounds::default();
        let text = text.trim();
        if text.is_empty() {
            return Ok(bounds);
        }
        if let Ok(edges) = text.parse::<usize>() {
            bounds.packing_edges = edges;
            return Ok(bounds);
        }
        for part in text.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got {part:?}"))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| format!("bad value in {part:?}"))?;
            match key.trim() {
                "packing_edges" => bounds.packing_edges = value,
                "gamma_oracle_n" => bounds.gamma_oracle_n = value,
                "canon_n" => bounds.canon_n = value,
                "enumerate_n" => bounds.enumerate_n = value,
                other => return Err(format!("unknown bound {other:?}")),
            }
        }
        Ok(bounds)
    }

    /// Process-wide bounds, read once from the environment.
    pub fn global() -> SolverBounds {
        static BOUNDS: OnceLock<SolverBounds> = OnceLock::new();
        *BOUNDS.get_or_init(|| match std::env::var(ENV_VAR) {
            Ok(text) => SolverBounds::parse(&text).unwrap_or_else(|e| {
                log::warn!("ignoring {ENV_VAR}: {e}");
                SolverBounds::default()
            }),
            Err(_) => SolverBounds::default(),
        })
    }
}

pub(crate) fn check(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(GraphError::BoundExceeded {
            what,
            actual,
            limit,
        })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_overrides() {
        assert_eq!(SolverBounds::parse("").unwrap(), SolverBounds::default());
        assert_eq!(SolverBounds::parse("18").unwrap().packing_edges, 18);
        let b = SolverBounds::parse("canon_n=9, gamma_oracle_n=14").unwrap();
        assert_eq!(b.canon_n, 9);
        assert_eq!(b.gamma_oracle_n, 14);
        assert_eq!(b.packing_edges, 24);
        assert!(SolverBounds::parse("bogus=1").is_err());
        assert!(SolverBounds::parse("canon_n").is_err());
    }
}
