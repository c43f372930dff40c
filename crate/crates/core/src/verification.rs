//! Claim checks over graph corpora and the survey driver.
//!
//! Each graph gets its invariants computed once; every claim then reports
//! `pass`, `fail`, or `na` when the graph lies outside the claim's
//! hypotheses. The characterization and the connected-packing lemma assume
//! a connected graph with more edges than ν₂ and ν₂ ≥ 5; the forest lemma
//! needs only the first two.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::{BufRead, BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bounds::SolverBounds;
use crate::canon::canonical_form;
use crate::domination::{beta_exact, gamma_exact};
use crate::enumeration::GraphStream;
use crate::error::{GraphError, Result};
use crate::family::recognize;
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6};
use crate::packing::{enumerate_max_2packings, nu2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    /// γ ≤ β, for graphs without isolated vertices.
    Eq1,
    /// ⌈ν₂/2⌉ ≤ β.
    Eq2Lo,
    /// β ≤ ν₂ − 1.
    Eq2Hi,
    /// γ ≤ ν₂ − 1.
    Eq3,
    /// γ = ν₂ − 1 iff the graph is a `T(s, t)`.
    ThmMain,
    /// A maximum 2-packing inducing a connected subgraph forces γ ≤ ν₂ − 2.
    LemConnected,
    /// γ = ν₂ − 1 forces every maximum 2-packing to induce a forest.
    LemForest,
    /// ν₂ = 2 iff β = 1.
    PropNu2Is2,
    /// ν₂ = 3 implies β = 2.
    PropNu2Is3,
    /// ν₂ = 4 implies β ≤ 3.
    PropNu2Is4,
}

impl Claim {
    pub const ALL: [Claim; 10] = [
        Claim::Eq1,
        Claim::Eq2Lo,
        Claim::Eq2Hi,
        Claim::Eq3,
        Claim::ThmMain,
        Claim::LemConnected,
        Claim::LemForest,
        Claim::PropNu2Is2,
        Claim::PropNu2Is3,
        Claim::PropNu2Is4,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Claim::Eq1 => "eq1",
            Claim::Eq2Lo => "eq2lo",
            Claim::Eq2Hi => "eq2hi",
            Claim::Eq3 => "eq3",
            Claim::ThmMain => "thm-main",
            Claim::LemConnected => "lem-connected",
            Claim::LemForest => "lem-forest",
            Claim::PropNu2Is2 => "prop-nu2-2",
            Claim::PropNu2Is3 => "prop-nu2-3",
            Claim::PropNu2Is4 => "prop-nu2-4",
        }
    }

    pub fn from_id(id: &str) -> Option<Claim> {
        Claim::ALL.into_iter().find(|c| c.id() == id)
    }

    fn index(&self) -> usize {
        *self as usize
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flag {
    Pass,
    Fail,
    #[default]
    Na,
}

impl Flag {
    fn from_bool(ok: bool) -> Flag {
        if ok {
            Flag::Pass
        } else {
            Flag::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Flag::Pass => "pass",
            Flag::Fail => "fail",
            Flag::Na => "na",
        }
    }
}

/// One value per claim, serialized as a map in claim order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PerClaim<T>(pub [T; 10]);

impl<T> PerClaim<T> {
    pub fn get(&self, claim: Claim) -> &T {
        &self.0[claim.index()]
    }

    pub fn set(&mut self, claim: Claim, value: T) {
        self.0[claim.index()] = value;
    }

    pub fn iter(&self) -> impl Iterator<Item = (Claim, &T)> {
        Claim::ALL.into_iter().zip(self.0.iter())
    }
}

impl<T: Serialize> Serialize for PerClaim<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(10))?;
        for (claim, value) in self.iter() {
            map.serialize_entry(claim.id(), value)?;
        }
        map.end()
    }
}

impl<'de, T: Deserialize<'de> + Default + Copy> Deserialize<'de> for PerClaim<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct PerClaimVisitor<T>(std::marker::PhantomData<T>);
        impl<'de, T: Deserialize<'de> + Default + Copy> Visitor<'de> for PerClaimVisitor<T> {
            type Value = PerClaim<T>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map keyed by claim id")
            }
            fn visit_map<A: MapAccess<'de>>(
                self,
                mut access: A,
            ) -> std::result::Result<Self::Value, A::Error> {
                let mut out = PerClaim([T::default(); 10]);
                while let Some((key, value)) = access.next_entry::<String, T>()? {
                    let claim = Claim::from_id(&key)
                        .ok_or_else(|| de::Error::custom(format!("unknown claim {key:?}")))?;
                    out.set(claim, value);
                }
                Ok(out)
            }
        }
        deserializer.deserialize_map(PerClaimVisitor(std::marker::PhantomData))
    }
}

pub type Flags = PerClaim<Flag>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Invariants {
    pub n: usize,
    pub m: usize,
    pub gamma: usize,
    pub beta: usize,
    pub alpha: usize,
    pub nu2: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub connected: bool,
}

impl Invariants {
    pub fn compute(g: &Graph) -> Result<Invariants> {
        let gamma = gamma_exact(g)?.len();
        let beta = beta_exact(g)?.len();
        let profile = g.degree_profile();
        Ok(Invariants {
            n: g.order(),
            m: g.size(),
            gamma,
            beta,
            alpha: g.order() - beta,
            nu2: nu2(g),
            max_degree: profile.max,
            min_degree: profile.min,
            connected: g.is_connected(),
        })
    }

    /// Connected with more edges than ν₂ (equivalently, maximum degree ≥ 3).
    pub fn in_section_scope(&self) -> bool {
        self.connected && self.m > self.nu2
    }

    /// The full standing hypotheses of the characterization.
    pub fn in_theorem_scope(&self) -> bool {
        self.in_section_scope() && self.nu2 >= 5
    }

    fn is_equality_case(&self) -> bool {
        self.nu2 >= 1 && self.gamma == self.nu2 - 1
    }
}

/// γ ≤ β, ⌈ν₂/2⌉ ≤ β ≤ ν₂ − 1, and γ ≤ ν₂ − 1.
pub fn check_inequalities(g: &Graph, inv: &Invariants) -> [(Claim, Flag); 4] {
    let has_edges = inv.connected && inv.m >= 1;
    let eq1 = if has_edges && !g.has_isolated_vertex() {
        Flag::from_bool(inv.gamma <= inv.beta)
    } else {
        Flag::Na
    };
    let eq2lo = if has_edges {
        Flag::from_bool(inv.nu2.div_ceil(2) <= inv.beta)
    } else {
        Flag::Na
    };
    // The upper bounds fail on K2 (β = γ = ν₂ = 1); they are checked under
    // |E| > ν₂ like the rest of the section.
    let (eq2hi, eq3) = if inv.in_section_scope() {
        (
            Flag::from_bool(inv.beta < inv.nu2),
            Flag::from_bool(inv.gamma < inv.nu2),
        )
    } else {
        (Flag::Na, Flag::Na)
    };
    [
        (Claim::Eq1, eq1),
        (Claim::Eq2Lo, eq2lo),
        (Claim::Eq2Hi, eq2hi),
        (Claim::Eq3, eq3),
    ]
}

pub fn check_theorem_equality(g: &Graph, inv: &Invariants) -> Flag {
    if !inv.in_theorem_scope() {
        return Flag::Na;
    }
    Flag::from_bool(inv.is_equality_case() == recognize(g).is_member())
}

/// How the packing lemmas treat graphs whose conclusion already holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LemmaMode {
    /// Enumerate every maximum 2-packing of every graph in scope.
    #[default]
    Exhaustive,
    /// Skip enumeration when γ ≤ ν₂ − 2, since the implication then holds
    /// for every packing.
    ShortCircuit,
}

/// Applies under the full standing hypotheses (ν₂ ≥ 5); the claw
/// K_{1,3} has a connected maximum packing and γ = ν₂ − 1.
pub fn check_lemma_connected_packing(g: &Graph, inv: &Invariants, mode: LemmaMode) -> Flag {
    if !inv.in_theorem_scope() || inv.m > SolverBounds::global().packing_edges {
        return Flag::Na;
    }
    let conclusion = inv.gamma + 2 <= inv.nu2;
    if conclusion && mode == LemmaMode::ShortCircuit {
        return Flag::Pass;
    }
    let Ok(packings) = enumerate_max_2packings(g) else {
        return Flag::Na;
    };
    let violated = packings
        .iter()
        .any(|r| r.subgraph().is_connected() && !conclusion);
    Flag::from_bool(!violated)
}

/// Applies to connected equality cases with |E| > ν₂ of any ν₂.
pub fn check_lemma_forest(g: &Graph, inv: &Invariants) -> Flag {
    if !inv.in_section_scope()
        || !inv.is_equality_case()
        || inv.m > SolverBounds::global().packing_edges
    {
        return Flag::Na;
    }
    let Ok(packings) = enumerate_max_2packings(g) else {
        return Flag::Na;
    };
    Flag::from_bool(packings.iter().all(|r| r.subgraph().is_forest()))
}

pub fn check_small_nu2(inv: &Invariants) -> [(Claim, Flag); 3] {
    if !inv.in_section_scope() {
        return [
            (Claim::PropNu2Is2, Flag::Na),
            (Claim::PropNu2Is3, Flag::Na),
            (Claim::PropNu2Is4, Flag::Na),
        ];
    }
    let two = Flag::from_bool((inv.nu2 == 2) == (inv.beta == 1));
    let three = if inv.nu2 == 3 {
        Flag::from_bool(inv.beta == 2)
    } else {
        Flag::Na
    };
    let four = if inv.nu2 == 4 {
        Flag::from_bool(inv.beta <= 3)
    } else {
        Flag::Na
    };
    [
        (Claim::PropNu2Is2, two),
        (Claim::PropNu2Is3, three),
        (Claim::PropNu2Is4, four),
    ]
}

pub fn check_all(g: &Graph, inv: &Invariants, mode: LemmaMode) -> Flags {
    let mut flags = Flags::default();
    for (claim, flag) in check_inequalities(g, inv) {
        flags.set(claim, flag);
    }
    flags.set(Claim::ThmMain, check_theorem_equality(g, inv));
    flags.set(
        Claim::LemConnected,
        check_lemma_connected_packing(g, inv, mode),
    );
    flags.set(Claim::LemForest, check_lemma_forest(g, inv));
    for (claim, flag) in check_small_nu2(inv) {
        flags.set(claim, flag);
    }
    flags
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyTag {
    pub s: usize,
    pub t: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    /// Canonical graph6 form (the input graph6 if canonical labeling was out of bounds).
    pub g6: String,
    pub n: usize,
    pub m: usize,
    pub gamma: usize,
    pub beta: usize,
    pub alpha: usize,
    pub nu2: usize,
    pub family: Option<FamilyTag>,
    pub flags: Flags,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl GraphReport {
    pub fn evaluate(g: &Graph, mode: LemmaMode) -> Result<GraphReport> {
        let (g6, note) = match canonical_form(g) {
            Ok(form) => (form.into_string(), None),
            Err(e) if e.is_bound() => (to_graph6(g)?, Some(format!("not canonical: {e}"))),
            Err(e) => return Err(e),
        };
        let inv = Invariants::compute(g)?;
        let family = recognize(g).params().map(|p| FamilyTag { s: p.s, t: p.t });
        Ok(GraphReport {
            g6,
            n: inv.n,
            m: inv.m,
            gamma: inv.gamma,
            beta: inv.beta,
            alpha: inv.alpha,
            nu2: inv.nu2,
            family,
            flags: check_all(g, &inv, mode),
            note,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub na: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub claim: String,
    pub g6: String,
}

/// Inventory names used in [`SurveyReport::equality`].
pub mod inventory {
    /// γ = β among graphs checked for γ ≤ β.
    pub const EQ1: &str = "eq1";
    /// ⌈ν₂/2⌉ = β.
    pub const EQ2_LO: &str = "eq2lo";
    /// β = ν₂ − 1.
    pub const EQ2_HI: &str = "eq2hi";
    /// γ = ν₂ − 1 within |E| > ν₂.
    pub const EQ3: &str = "eq3";
    /// γ = ν₂ − 1 on connected graphs with |E| = ν₂ (paths and cycles).
    pub const EQ3_OUTSIDE: &str = "eq3-outside-scope";
    /// Equality cases of the characterization (ν₂ ≥ 5).
    pub const THM_MAIN: &str = "thm-main";
    /// Equality cases with ν₂ ≤ 4 inside |E| > ν₂.
    pub const SMALL_NU2: &str = "small-nu2";
    pub const NU2_2_GAMMA_1: &str = "nu2-2-gamma-1";
    pub const NU2_3_GAMMA_2: &str = "nu2-3-gamma-2";
    pub const NU2_4_GAMMA_3: &str = "nu2-4-gamma-3";
    pub const NU2_3_BETA_2: &str = "nu2-3-beta-2";
    pub const NU2_4_BETA_3: &str = "nu2-4-beta-3";
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub corpus: String,
    pub graphs: usize,
    pub skipped_disconnected: usize,
    pub totals: PerClaim<Totals>,
    pub counterexamples: Vec<Counterexample>,
    pub equality: BTreeMap<String, Vec<String>>,
    /// Whether every graph with ν₂ = 2 and γ = 1 (inside |E| > ν₂) is a star.
    pub stars_only: bool,
    /// Graphs whose report carries a note (e.g. canonical labeling skipped).
    pub noted: usize,
}

impl SurveyReport {
    pub fn from_reports(
        corpus: &str,
        skipped_disconnected: usize,
        reports: &[GraphReport],
    ) -> SurveyReport {
        use inventory::*;
        let mut totals = PerClaim([Totals::default(); 10]);
        let mut counterexamples = Vec::new();
        let mut equality: BTreeMap<String, Vec<String>> = [
            EQ1,
            EQ2_LO,
            EQ2_HI,
            EQ3,
            EQ3_OUTSIDE,
            THM_MAIN,
            SMALL_NU2,
            NU2_2_GAMMA_1,
            NU2_3_GAMMA_2,
            NU2_4_GAMMA_3,
            NU2_3_BETA_2,
            NU2_4_BETA_3,
        ]
        .iter()
        .map(|k| (k.to_string(), Vec::new()))
        .collect();
        let mut push = |key: &str, g6: &str| {
            equality
                .get_mut(key)
                .expect("inventory key")
                .push(g6.to_string());
        };

        for r in reports {
            for (claim, flag) in r.flags.iter() {
                let t = &mut totals.0[claim.index()];
                match flag {
                    Flag::Pass => t.pass += 1,
                    Flag::Fail => {
                        t.fail += 1;
                        counterexamples.push(Counterexample {
                            claim: claim.id().to_string(),
                            g6: r.g6.clone(),
                        });
                    }
                    Flag::Na => t.na += 1,
                }
            }
            let applies = |c: Claim| *r.flags.get(c) != Flag::Na;
            let equal3 = r.nu2 >= 1 && r.gamma + 1 == r.nu2;
            if applies(Claim::Eq1) && r.gamma == r.beta {
                push(EQ1, &r.g6);
            }
            if applies(Claim::Eq2Lo) && r.nu2.div_ceil(2) == r.beta {
                push(EQ2_LO, &r.g6);
            }
            if applies(Claim::Eq2Hi) && r.beta + 1 == r.nu2 {
                push(EQ2_HI, &r.g6);
            }
            if applies(Claim::Eq3) && equal3 {
                push(EQ3, &r.g6);
            }
            if applies(Claim::Eq2Lo) && !applies(Claim::Eq3) && equal3 {
                push(EQ3_OUTSIDE, &r.g6);
            }
            if applies(Claim::ThmMain) && equal3 {
                push(THM_MAIN, &r.g6);
            }
            if applies(Claim::PropNu2Is2) {
                if r.nu2 < 5 && equal3 {
                    push(SMALL_NU2, &r.g6);
                }
                match (r.nu2, r.gamma, r.beta) {
                    (2, 1, _) => push(NU2_2_GAMMA_1, &r.g6),
                    (3, 2, _) => push(NU2_3_GAMMA_2, &r.g6),
                    (4, 3, _) => push(NU2_4_GAMMA_3, &r.g6),
                    _ => {}
                }
                match (r.nu2, r.beta) {
                    (3, 2) => push(NU2_3_BETA_2, &r.g6),
                    (4, 3) => push(NU2_4_BETA_3, &r.g6),
                    _ => {}
                }
            }
        }
        counterexamples.sort_by(|a, b| {
            let key = |c: &Counterexample| Claim::from_id(&c.claim).map(|c| c.index());
            key(a).cmp(&key(b)).then_with(|| a.g6.cmp(&b.g6))
        });
        for list in equality.values_mut() {
            list.sort();
        }
        let stars_only = equality[NU2_2_GAMMA_1]
            .iter()
            .all(|g6| parse_graph6(g6).is_ok_and(|g| g.is_star()));
        SurveyReport {
            corpus: corpus.to_string(),
            graphs: reports.len(),
            skipped_disconnected,
            totals,
            counterexamples,
            equality,
            stars_only,
            noted: reports.iter().filter(|r| r.note.is_some()).count(),
        }
    }

    pub fn failures(&self) -> usize {
        self.counterexamples.len()
    }
}

#[derive(Debug, Clone, Default)]
pub struct SurveyOptions {
    /// Worker threads; `None` uses the rayon default.
    pub workers: Option<usize>,
    pub lemma_mode: LemmaMode,
    /// JSON-lines destination for per-graph reports.
    pub reports_path: Option<PathBuf>,
    /// Progress file enabling resumption; requires `reports_path`.
    pub checkpoint: Option<PathBuf>,
    /// Graphs evaluated between checkpoint writes.
    pub chunk_size: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct SurveyOutcome {
    pub reports: Vec<GraphReport>,
    pub summary: SurveyReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct Checkpoint {
    processed: usize,
    last: String,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> GraphError + '_ {
    move |source| GraphError::Io {
        path: path.to_path_buf(),
        source,
    }
}

pub fn read_reports(path: &Path) -> Result<Vec<GraphReport>> {
    let file = fs::File::open(path).map_err(io_err(path))?;
    let mut out = Vec::new();
    for (i, line) in std::io::BufReader::new(file).lines().enumerate() {
        let line = line.map_err(io_err(path))?;
        if line.trim().is_empty() {
            continue;
        }
        let report = serde_json::from_str(&line).map_err(|e| GraphError::AtLine {
            path: path.display().to_string(),
            line: i + 1,
            source: Box::new(GraphError::MalformedEdgeList(format!("bad report: {e}"))),
        })?;
        out.push(report);
    }
    Ok(out)
}

pub fn write_reports<W: Write>(mut out: W, reports: &[GraphReport]) -> std::io::Result<()> {
    for r in reports {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

/// Evaluates every graph of the stream and aggregates the verdicts. Output
/// is sorted by `g6` (stable), so it does not depend on scheduling.
pub fn run_survey(stream: GraphStream, options: &SurveyOptions) -> Result<SurveyOutcome> {
    let corpus = stream.source().to_string();
    let skipped = stream.skipped_disconnected();
    let pool = {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(w) = options.workers {
            builder = builder.num_threads(w.max(1));
        }
        builder
            .build()
            .map_err(|e| GraphError::InvalidParams(format!("worker pool: {e}")))?
    };
    let chunk_size = options.chunk_size.unwrap_or(1024).max(1);

    let mut reports: Vec<GraphReport> = Vec::new();
    let mut resume_from = 0;
    if let (Some(cp), Some(rp)) = (&options.checkpoint, &options.reports_path) {
        if cp.exists() && rp.exists() {
            let text = fs::read_to_string(cp).map_err(io_err(cp))?;
            let checkpoint: Checkpoint = serde_json::from_str(&text).map_err(|e| {
                GraphError::InvalidParams(format!("unreadable checkpoint {}: {e}", cp.display()))
            })?;
            reports = read_reports(rp)?;
            reports.truncate(checkpoint.processed);
            let consistent = reports.len() == checkpoint.processed
                && reports.last().map_or(String::new(), |r| r.g6.clone()) == checkpoint.last;
            if !consistent {
                return Err(GraphError::InvalidParams(format!(
                    "checkpoint {} does not match reports {}",
                    cp.display(),
                    rp.display()
                )));
            }
            resume_from = checkpoint.processed;
            log::info!(
                "resuming after {} graphs (last {})",
                checkpoint.processed,
                checkpoint.last
            );
        }
    }
    let mut sink = match &options.reports_path {
        Some(rp) => {
            let file = fs::File::create(rp).map_err(io_err(rp))?;
            let mut w = BufWriter::new(file);
            write_reports(&mut w, &reports).map_err(io_err(rp))?;
            Some(w)
        }
        None => None,
    };

    let graphs: Vec<Graph> = stream.collect();
    if resume_from > 0 {
        let expected = reports.last().map(|r| r.g6.as_str());
        let actual = graphs.get(resume_from - 1).map(|g| {
            canonical_form(g)
                .map(|f| f.into_string())
                .or_else(|_| to_graph6(g))
                .unwrap_or_default()
        });
        if expected != actual.as_deref() {
            return Err(GraphError::InvalidParams(
                "checkpoint does not match this corpus".into(),
            ));
        }
    }
    for (chunk_index, chunk) in graphs[resume_from.min(graphs.len())..]
        .chunks(chunk_size)
        .enumerate()
    {
        let evaluated: Vec<GraphReport> = pool.install(|| {
            chunk
                .par_iter()
                .map(|g| GraphReport::evaluate(g, options.lemma_mode))
                .collect::<Result<Vec<_>>>()
        })?;
        if let (Some(w), Some(rp)) = (sink.as_mut(), &options.reports_path) {
            write_reports(&mut *w, &evaluated).map_err(io_err(rp))?;
        }
        reports.extend(evaluated);
        if let Some(cp) = &options.checkpoint {
            let processed = resume_from + (chunk_index * chunk_size) + chunk.len();
            let checkpoint = Checkpoint {
                processed,
                last: reports.last().map(|r| r.g6.clone()).unwrap_or_default(),
            };
            let text = serde_json::to_string(&checkpoint).expect("checkpoint serializes");
            fs::write(cp, text).map_err(io_err(cp))?;
        }
    }
    drop(sink);

    reports.sort_by(|a, b| a.g6.cmp(&b.g6));
    if let Some(rp) = &options.reports_path {
        let file = fs::File::create(rp).map_err(io_err(rp))?;
        write_reports(BufWriter::new(file), &reports).map_err(io_err(rp))?;
    }
    // A finished survey has nothing to resume; the sorted rewrite above
    // would not line up with the checkpoint for unsorted corpora anyway.
    if let Some(cp) = &options.checkpoint {
        if cp.exists() {
            fs::remove_file(cp).map_err(io_err(cp))?;
        }
    }
    let summary = SurveyReport::from_reports(&corpus, skipped, &reports);
    Ok(SurveyOutcome { reports, summary })
}
