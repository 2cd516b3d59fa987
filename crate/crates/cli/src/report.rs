//! Reports: one entry per check, each with a verdict and an optional witness.

use std::fmt::Write as _;

use frobsep_core::frobsep::NonFrobeniusProof;
use frobsep_core::symbolic::{SingularPencilProof, SingularityMethod};
use serde::{Deserialize, Serialize};

use crate::rational::{from_q, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// A law or agreement holds.
    Pass,
    Fail,
    /// A decision came out positive.
    Yes,
    No,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn decision(yes: bool) -> Self {
        if yes {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Yes => "yes",
            Verdict::No => "no",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum PencilMethod {
    NoParameters,
    DeterminantExpansion,
    ShrunkSubspace { subspace: Vec<Vec<Q>>, image_dim: usize },
}

/// Matrices are written as lists of rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    FrobeniusPair { functional: Vec<Q>, casimir: Vec<Q>, nakayama: Vec<Vec<Q>> },
    SeparabilityIdempotent { idempotent: Vec<Q> },
    AlphaElement { alpha: Vec<Q>, idempotent: Vec<Q> },
    NakayamaAutomorphism { functional: Vec<Q>, matrix: Vec<Vec<Q>> },
    SingularPencil { size: usize, params: usize, #[serde(flatten)] method: PencilMethod },
    HomDimensionMismatch { source_dim: usize, hom_dim: usize },
    ExtensionSeparability { e: Vec<Q> },
    ExtensionFrobenius { functional: Vec<Vec<Q>>, e: Vec<Q> },
    BimoduleAlgebra { #[serde(skip_serializing_if = "Option::is_none", default)] functional: Option<Vec<Vec<Q>>>, unit_map: Vec<Vec<Q>> },
    Alpha0 { alpha0: Vec<Q>, e: Vec<Q> },
    WreathSeparability { e: Vec<Q> },
    WreathFrobenius { varsigma: Vec<Vec<Q>>, kappa: Vec<Q> },
}

impl Witness {
    pub fn from_proof(p: &NonFrobeniusProof) -> Self {
        match p {
            NonFrobeniusProof::HomDimensionMismatch { source_dim, hom_dim } => {
                Witness::HomDimensionMismatch { source_dim: *source_dim, hom_dim: *hom_dim }
            }
            NonFrobeniusProof::SingularPairing(sp) => Witness::SingularPencil {
                size: sp.size,
                params: sp.params,
                method: match &sp.method {
                    SingularityMethod::NoParameters => PencilMethod::NoParameters,
                    SingularityMethod::DeterminantExpansion => PencilMethod::DeterminantExpansion,
                    SingularityMethod::ShrunkSubspace { subspace, image_dim } => PencilMethod::ShrunkSubspace {
                        subspace: subspace.iter().map(|v| crate::rational::to_q(v)).collect(),
                        image_dim: *image_dim,
                    },
                },
            },
        }
    }

    /// The negative certificate carried by this witness, if it is one.
    pub fn to_proof(&self) -> Option<NonFrobeniusProof> {
        match self {
            Witness::HomDimensionMismatch { source_dim, hom_dim } => {
                Some(NonFrobeniusProof::HomDimensionMismatch { source_dim: *source_dim, hom_dim: *hom_dim })
            }
            Witness::SingularPencil { size, params, method } => Some(NonFrobeniusProof::SingularPairing(SingularPencilProof {
                size: *size,
                params: *params,
                method: match method {
                    PencilMethod::NoParameters => SingularityMethod::NoParameters,
                    PencilMethod::DeterminantExpansion => SingularityMethod::DeterminantExpansion,
                    PencilMethod::ShrunkSubspace { subspace, image_dim } => SingularityMethod::ShrunkSubspace {
                        subspace: subspace.iter().map(|v| from_q(v)).collect(),
                        image_dim: *image_dim,
                    },
                },
            })),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub verdict: Verdict,
    /// What the check establishes, in words.
    pub statement: String,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub command: String,
    pub seed: u64,
    pub trials: usize,
    pub symbolic_cap: usize,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// No law or agreement check failed.
    pub fn consistent(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "subject: {}", self.subject);
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "seed: {}  trials: {}  symbolic-cap: {}", self.seed, self.trials, self.symbolic_cap);
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.checks {
            let _ = writeln!(out, "[{:>4}] {:<width$}  {}", c.verdict.label(), c.id, c.statement);
            if !c.detail.is_empty() {
                let _ = writeln!(out, "       {:<width$}  {}", "", c.detail);
            }
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "       {:<width$}  witness: {}", "", serde_json::to_string(w).expect("witnesses serialize"));
            }
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed: {ms} ms");
        }
        out
    }
}
