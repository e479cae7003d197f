use std::io::Read;

use leibniz_kit::cohomology::{adjoint_rep, trivial_rep};
use leibniz_kit::{io, Algebra, Error, Graph, Rep, Result};
use sha2::{Digest, Sha256};

use crate::run_report::{InputDigest, RunReport};

/// Reads a file, or standard input for `-`, and records its digest.
pub fn read(path: &str, report: &mut RunReport) -> Result<String> {
    let bytes = if path == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| Error::Input(format!("reading standard input: {e}")))?;
        buf
    } else {
        std::fs::read(path).map_err(|e| Error::Input(format!("{path}: {e}")))?
    };
    report.inputs.push(InputDigest {
        name: if path == "-" { "<stdin>".into() } else { path.to_string() },
        bytes: bytes.len(),
        sha256: hex::encode(Sha256::digest(&bytes)),
    });
    String::from_utf8(bytes).map_err(|_| Error::Input(format!("{path}: not valid UTF-8")))
}

fn located(path: &str, err: Error) -> Error {
    match err {
        Error::Input(msg) => Error::Input(format!("{path}: {msg}")),
        other => other,
    }
}

pub fn algebra(path: &str, report: &mut RunReport) -> Result<Algebra> {
    let text = read(path, report)?;
    io::algebra_from_json(&text).map_err(|e| located(path, e))
}

pub fn graph_map(path: &str, report: &mut RunReport) -> Result<Graph> {
    let text = read(path, report)?;
    io::graph_map_from_json(&text).map_err(|e| located(path, e))
}

/// Which representation a `--rep` argument names.
pub enum RepChoice {
    Trivial,
    Adjoint,
    File(String),
}

impl RepChoice {
    pub fn parse(arg: &str) -> Self {
        match arg {
            "trivial" => RepChoice::Trivial,
            "adjoint" => RepChoice::Adjoint,
            path => RepChoice::File(path.to_string()),
        }
    }

    pub fn label(&self) -> &str {
        match self {
            RepChoice::Trivial => "trivial",
            RepChoice::Adjoint => "adjoint",
            RepChoice::File(p) => p,
        }
    }

    pub fn build(&self, g: &Algebra, report: &mut RunReport) -> Result<Rep> {
        match self {
            RepChoice::Trivial => Ok(trivial_rep(g)),
            RepChoice::Adjoint => Ok(adjoint_rep(g)),
            RepChoice::File(path) => {
                let text = read(path, report)?;
                io::representation_from_json(g, &text).map_err(|e| located(path, e))
            }
        }
    }
}
