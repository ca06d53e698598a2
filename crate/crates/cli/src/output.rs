use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;

use mis_lab::{graph6, Graph, Hypergraph};

/// Why a command stopped; each kind maps to its own exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Violation(String),
    Mismatch(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Violation(_) => 3,
            Failure::Mismatch(_) => 4,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "error: {m}"),
            Failure::Violation(m) => write!(f, "violation: {m}"),
            Failure::Mismatch(m) => write!(f, "mismatch: {m}"),
        }
    }
}

macro_rules! usage_from {
    ($($t:ty),*) => {
        $(impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::Usage(e.to_string())
            }
        })*
    };
}

usage_from!(mis_lab::Error, std::io::Error, serde_json::Error, csv::Error);

/// Envelope written around every JSON result.
#[derive(Serialize)]
pub struct Report<'a, C: Serialize, R: Serialize> {
    pub version: &'static str,
    pub command: &'static str,
    pub seed: u64,
    pub threads: usize,
    pub config: &'a C,
    pub result: R,
}

pub struct Ctx {
    pub seed: u64,
    pub threads: usize,
}

impl Ctx {
    pub fn report<'a, C: Serialize, R: Serialize>(&self, command: &'static str, config: &'a C, result: R) -> Report<'a, C, R> {
        Report { version: mis_lab::VERSION, command, seed: self.seed, threads: self.threads, config, result }
    }
}

pub fn json<T: Serialize>(value: &T) -> Result<String, Failure> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

pub fn csv_rows<T: Serialize>(rows: &[T]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::Usage(e.to_string()))
}

/// Writes to `path`, or to stdout when absent.
pub fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

pub fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

pub enum Input {
    Graph(Graph),
    Hyper(Hypergraph),
}

/// A hypergraph when the text is a JSON object, otherwise the first
/// non-empty line as graph6.
pub fn parse_input(text: &str) -> Result<Input, Failure> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        return Ok(Input::Hyper(Hypergraph::parse_json(trimmed)?));
    }
    let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    Ok(Input::Graph(graph6::decode_str(line)?))
}

pub fn read_graph(path: &Path) -> Result<Graph, Failure> {
    match parse_input(&read(path)?)? {
        Input::Graph(g) => Ok(g),
        Input::Hyper(_) => Err(Failure::Usage(format!("{}: expected a graph6 graph", path.display()))),
    }
}
