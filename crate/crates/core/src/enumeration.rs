//! Isomorphism-free generation of small graphs and graph6 corpus ingestion.
//!
//! Graphs on `k` vertices are obtained from every graph on `k - 1` vertices
//! by adding one vertex with every possible neighborhood; each result is
//! reduced to its canonical form and deduplicated. Every graph on `k`
//! vertices arises this way (delete any vertex), so the output is complete.

use std::collections::BTreeSet;
use std::fmt;
use std::io::BufRead;
use std::path::{Path, PathBuf};

use crate::bounds::{self, SolverBounds};
use crate::canon::{canonical_form_unbounded, CanonicalForm};
use crate::error::{GraphError, Result};
use crate::graph::Graph;
use crate::graph6::parse_graph6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StreamSource {
    Builtin(usize),
    File(PathBuf),
    Named(String),
}

impl fmt::Display for StreamSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StreamSource::Builtin(n) => write!(f, "builtin:{n}"),
            StreamSource::File(p) => write!(f, "file:{}", p.display()),
            StreamSource::Named(name) => write!(f, "{name}"),
        }
    }
}

/// A finite, single-consumer stream of graphs.
#[derive(Debug)]
pub struct GraphStream {
    source: StreamSource,
    graphs: std::vec::IntoIter<Graph>,
    total: usize,
    emitted: usize,
    skipped_disconnected: usize,
}

impl GraphStream {
    pub fn from_graphs(source: StreamSource, graphs: Vec<Graph>) -> GraphStream {
        GraphStream {
            source,
            total: graphs.len(),
            graphs: graphs.into_iter(),
            emitted: 0,
            skipped_disconnected: 0,
        }
    }

    pub fn source(&self) -> &StreamSource {
        &self.source
    }

    /// Graphs emitted so far.
    pub fn emitted(&self) -> usize {
        self.emitted
    }

    /// Graphs the stream will emit in total.
    pub fn total(&self) -> usize {
        self.total
    }

    /// Disconnected inputs dropped during ingestion.
    pub fn skipped_disconnected(&self) -> usize {
        self.skipped_disconnected
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let g = self.graphs.next()?;
        self.emitted += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.graphs.size_hint()
    }
}

/// Canonical forms of all graphs (connected or not) on exactly `n` vertices.
pub(crate) fn all_graphs(n: usize) -> BTreeSet<CanonicalForm> {
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::new();
    level.insert(canonical_form_unbounded(&Graph::empty(n.min(1))));
    for k in 2..=n {
        let mut next = BTreeSet::new();
        for form in &level {
            let base = form.graph();
            let base_edges: Vec<(usize, usize)> =
                base.edges().iter().map(|e| e.endpoints()).collect();
            for nbhd in 0u64..1 << (k - 1) {
                let mut edges = base_edges.clone();
                edges.extend(
                    (0..k - 1)
                        .filter(|&v| nbhd >> v & 1 == 1)
                        .map(|v| (v, k - 1)),
                );
                let g = Graph::new(k, &edges).expect("extension edges are valid");
                next.insert(canonical_form_unbounded(&g));
            }
        }
        level = next;
    }
    level
}

/// Every connected graph on exactly `n` vertices, once per isomorphism
/// class, as canonical representatives in lexicographic order of their
/// canonical forms.
pub fn enumerate_connected(n: usize) -> Result<GraphStream> {
    if n == 0 {
        return Err(GraphError::InvalidParams("enumeration needs n >= 1".into()));
    }
    bounds::check(
        "builtin enumeration vertex",
        n,
        SolverBounds::global().enumerate_n,
    )?;
    let graphs = all_graphs(n)
        .into_iter()
        .map(|form| form.graph())
        .filter(Graph::is_connected)
        .collect();
    Ok(GraphStream::from_graphs(StreamSource::Builtin(n), graphs))
}

/// Reads one graph6 string per line. Blank lines are ignored; a malformed
/// line aborts with its 1-based line number.
pub fn ingest_graph6(path: &Path, expect_connected: bool) -> Result<GraphStream> {
    let file = std::fs::File::open(path).map_err(|source| GraphError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let reader = std::io::BufReader::new(file);
    ingest_graph6_reader(
        reader,
        StreamSource::File(path.to_path_buf()),
        expect_connected,
    )
}

pub fn ingest_graph6_reader<R: BufRead>(
    reader: R,
    source: StreamSource,
    expect_connected: bool,
) -> Result<GraphStream> {
    let label = match &source {
        StreamSource::File(p) => p.display().to_string(),
        other => other.to_string(),
    };
    let mut graphs = Vec::new();
    let mut skipped = 0;
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|source| GraphError::Io {
            path: PathBuf::from(&label),
            source,
        })?;
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| GraphError::AtLine {
            path: label.clone(),
            line: i + 1,
            source: Box::new(e),
        })?;
        if expect_connected && !g.is_connected() {
            log::warn!("{label}:{}: skipping disconnected graph {line}", i + 1);
            skipped += 1;
            continue;
        }
        graphs.push(g);
    }
    let mut stream = GraphStream::from_graphs(source, graphs);
    stream.skipped_disconnected = skipped;
    Ok(stream)
}
