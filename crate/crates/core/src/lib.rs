//! Exact domination (γ), edge 2-packing (ν₂), covering (β) and independence
//! (α) numbers for small simple graphs, the extremal trees `T(s, t)` with
//! γ = ν₂ − 1, and an exhaustive verifier for the characterization of the
//! graphs attaining that bound.

pub mod bounds;
pub mod canon;
pub mod cli;
pub mod domination;
pub mod edgelist;
pub mod enumeration;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod packing;
pub mod verification;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use domination::{alpha_exact, beta_exact, gamma_bruteforce, gamma_exact};
pub use enumeration::{enumerate_connected, ingest_graph6, GraphStream};
pub use error::{GraphError, Result};
pub use family::{family_invariants, generate_family, recognize, FamilyParams, Recognition};
pub use graph::{ComponentKind, Edge, EdgeSubgraph, Graph};
pub use graph6::{parse_graph6, to_graph6};
pub use packing::{enumerate_max_2packings, is_2packing, nu2_bruteforce, nu2_matching, TwoPacking};
pub use verification::{run_survey, Claim, Flag, GraphReport, SurveyOptions, SurveyReport};
