//! JSON input files.
//!
//! ```text
//! distribution  {"labels": [0, 1, "x", ...], "probs": [0.5, 0.5, ...]}
//! event         {"indices": [0, 3, ...]}
//! graph         {"n": 5, "edges": [[0, 1], [1, 2], ...]}
//! family        {"kind": "truncated_normal" | "uniform_window",
//!                "domain": [0, L], "h": 0.01, "grid": [[5.0, 1.0], ...]}
//! ```
//!
//! Parse failures report the JSON path of the offending value; validation
//! failures report the field they concern.

use std::fmt;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::distributions::{Event, FiniteDistribution, Label};
use crate::error::Error;
use crate::finetune::{FamilyKind, ParamFamily};
use crate::markov::RegularGraph;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistributionFile {
    pub labels: Vec<Label>,
    pub probs: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EventFile {
    pub indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyFile {
    pub kind: FamilyKind,
    pub domain: [f64; 2],
    pub h: f64,
    pub grid: Vec<[f64; 2]>,
}

#[derive(Debug)]
pub enum FileError {
    Read { path: PathBuf, source: std::io::Error },
    Parse { path: PathBuf, field: String, message: String },
    Invalid { path: PathBuf, field: &'static str, source: Error },
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FileError::Read { path, source } => write!(f, "{}: {source}", path.display()),
            FileError::Parse { path, field, message } => {
                write!(f, "{}: field `{field}`: {message}", path.display())
            }
            FileError::Invalid { path, field, source } => {
                write!(f, "{}: field `{field}`: {source}", path.display())
            }
        }
    }
}

impl std::error::Error for FileError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            FileError::Read { source, .. } => Some(source),
            FileError::Parse { .. } => None,
            FileError::Invalid { source, .. } => Some(source),
        }
    }
}

/// Parses JSON text, naming the path to whatever value failed.
pub fn parse_json<T: DeserializeOwned>(text: &str, path: &Path) -> Result<T, FileError> {
    let mut de = serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(&mut de).map_err(|err| {
        let field = err.path().to_string();
        let inner = err.into_inner();
        // Missing fields surface at the root; pull the name out of the message.
        let field = if field == "." { missing_field_name(&inner.to_string()).unwrap_or(field) } else { field };
        FileError::Parse { path: path.to_owned(), field, message: inner.to_string() }
    })
}

fn missing_field_name(message: &str) -> Option<String> {
    let rest = message.strip_prefix("missing field `")?;
    Some(rest[..rest.find('`')?].to_owned())
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, FileError> {
    let text = std::fs::read_to_string(path).map_err(|source| FileError::Read { path: path.to_owned(), source })?;
    parse_json(&text, path)
}

fn invalid<'a>(path: &'a Path, field: &'static str) -> impl FnOnce(Error) -> FileError + 'a {
    move |source| FileError::Invalid { path: path.to_owned(), field, source }
}

impl DistributionFile {
    pub fn into_distribution(self, path: &Path) -> Result<FiniteDistribution, FileError> {
        let field = |e: &Error| match e {
            Error::DuplicateLabel(_) | Error::EmptySpace => "labels",
            _ => "probs",
        };
        FiniteDistribution::new(self.labels, self.probs).map_err(|e| {
            let f = field(&e);
            invalid(path, f)(e)
        })
    }
}

impl EventFile {
    /// Checks the indices against a space of `len` outcomes.
    pub fn into_event(self, len: usize, path: &Path) -> Result<Event, FileError> {
        Event::within(self.indices, len).map_err(invalid(path, "indices"))
    }
}

impl GraphFile {
    pub fn into_graph(self, path: &Path) -> Result<RegularGraph, FileError> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        RegularGraph::new(self.n, &edges).map_err(|e| {
            let f = match e {
                Error::TooFewVertices(_) | Error::TooManyVertices { .. } => "n",
                _ => "edges",
            };
            invalid(path, f)(e)
        })
    }
}

impl FamilyFile {
    pub fn into_family(self, path: &Path) -> Result<ParamFamily, FileError> {
        let [start, end] = self.domain;
        if start != 0.0 {
            return Err(invalid(path, "domain")(Error::InvalidGrid(format!(
                "domain must start at 0, got [{start}, {end}]"
            ))));
        }
        ParamFamily::new(self.kind, end, self.h, self.grid).map_err(|e| {
            let f = match &e {
                Error::EmptyGrid => "grid",
                Error::InvalidGrid(msg) if msg.starts_with("domain") => "domain",
                _ => "h",
            };
            invalid(path, f)(e)
        })
    }
}

pub fn read_distribution(path: &Path) -> Result<FiniteDistribution, FileError> {
    read_json::<DistributionFile>(path)?.into_distribution(path)
}

pub fn read_event(path: &Path, len: usize) -> Result<Event, FileError> {
    read_json::<EventFile>(path)?.into_event(len, path)
}

pub fn read_graph(path: &Path) -> Result<RegularGraph, FileError> {
    read_json::<GraphFile>(path)?.into_graph(path)
}

pub fn read_family(path: &Path) -> Result<ParamFamily, FileError> {
    read_json::<FamilyFile>(path)?.into_family(path)
}
