use std::fmt;

use monideal::generic::is_order_generic;
use monideal::reconstruct::{classify_type, socle_to_generators, zero_dim_ideal_from_socle, TypeReport};
use monideal::{Antichain, LatticePoint, UpSet};
use thiserror::Error;

use crate::format::{AntichainDocument, ParseError, Role};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Parse(_) | CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Invalid(_) => 3,
        }
    }
}

impl From<monideal::Error> for CliError {
    fn from(e: monideal::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

/// Validation failure, pointing at source lines where possible.
fn invalid(doc: &AntichainDocument, e: monideal::Error) -> CliError {
    let at = |p: &LatticePoint| match doc.line_of(p) {
        Some(l) => format!("{p} (line {l})"),
        None => p.to_string(),
    };
    let msg = match &e {
        monideal::Error::NotAntichain(a, b) => format!("not an antichain: {} and {} are comparable", at(a), at(b)),
        monideal::Error::NegativeCoordinate(p) => format!("negative coordinate in {}", at(p)),
        _ => e.to_string(),
    };
    CliError::Invalid(msg)
}

fn antichain_of(doc: &AntichainDocument) -> Result<Antichain, CliError> {
    let a = doc.to_antichain().map_err(|e| invalid(doc, e))?;
    if a.is_empty() {
        return Err(CliError::Invalid("document has no vectors".into()));
    }
    Ok(a)
}

/// Maximal points outside the upset of the given generators.
pub fn socle(doc: &AntichainDocument) -> Result<AntichainDocument, CliError> {
    let gens = antichain_of(doc)?;
    let s = UpSet::from_antichain(gens).socle().map_err(|e| invalid(doc, e))?;
    Ok(AntichainDocument::from_antichain(&s, Role::Socle))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum ReconstructMode {
    ZeroDim,
    #[default]
    Default,
    Bounds { a: Option<LatticePoint>, b: Option<LatticePoint> },
}

/// Generators whose socle is the given antichain.
pub fn reconstruct(doc: &AntichainDocument, mode: &ReconstructMode) -> Result<AntichainDocument, CliError> {
    let q = antichain_of(doc)?;
    let gens = match mode {
        ReconstructMode::ZeroDim => zero_dim_ideal_from_socle(&q),
        ReconstructMode::Default => socle_to_generators(&q, None, None),
        ReconstructMode::Bounds { a, b } => socle_to_generators(&q, a.as_ref(), b.as_ref()),
    }
    .map_err(|e| invalid(doc, e))?;
    Ok(AntichainDocument::from_antichain(&gens, Role::Generators))
}

/// Report printed by `classify`: one `key: value` pair per line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub dimension: usize,
    pub generators: usize,
    pub report: TypeReport,
    pub order_generic_socle: Option<bool>,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |o: Option<String>| o.unwrap_or_else(|| "none".into());
        writeln!(f, "dimension: {}", self.dimension)?;
        writeln!(f, "generators: {}", self.generators)?;
        writeln!(f, "zero_dimensional: {}", self.report.is_zero_dimensional)?;
        writeln!(f, "type: {}", opt(self.report.type_k.map(|k| k.to_string())))?;
        writeln!(f, "gorenstein: {}", self.report.is_gorenstein)?;
        writeln!(f, "order_generic_socle: {}", opt(self.order_generic_socle.map(|b| b.to_string())))
    }
}

pub fn classify(doc: &AntichainDocument) -> Result<Classification, CliError> {
    let gens = antichain_of(doc)?;
    let report = classify_type(&gens).map_err(|e| invalid(doc, e))?;
    let order_generic_socle = if report.is_zero_dimensional {
        let s = UpSet::from_antichain(gens.clone()).socle().map_err(|e| invalid(doc, e))?;
        Some(is_order_generic(&s))
    } else {
        None
    };
    Ok(Classification { dimension: gens.dim(), generators: gens.len(), report, order_generic_socle })
}

pub fn bell(k: usize) -> Result<u64, CliError> {
    Ok(monideal::generic::ordered_bell(k)?)
}
