//! TOML spec files: algebras, extensions and wreaths.

use std::path::Path;

use frobsep_core::algebra::{builtin, validate_algebra, validate_morphism, Algebra, AlgebraMorphism};
use frobsep_core::exactlin::{RatMatrix, Rational};
use frobsep_core::extension::AlgebraExtension;
use frobsep_core::report::ValidationReport;
use frobsep_core::wreath::{smash_wreath, trivial_wreath, validate_wreath, WreathData, WreathError};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::rational::{from_q, matrix_to_rows, rows_to_matrix, to_q, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Algebra,
    Extension,
    Wreath,
}

/// An algebra given by a builtin name or by an explicit table.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawAlgebra {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<Q>>,
    /// `table[i][j]` holds the coordinates of `e_i · e_j`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<Vec<Q>>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    Trivial,
    Smash,
    Explicit,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawWreath {
    pub construction: Construction,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<RawAlgebra>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<Vec<Vec<Q>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psi: Option<Vec<Vec<Q>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zeta: Option<Vec<Vec<Q>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<Q>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawSpec {
    pub kind: Kind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub functional: Option<Vec<Q>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<Vec<Q>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<RawAlgebra>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<RawAlgebra>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<RawAlgebra>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wreath: Option<RawWreath>,
}

#[derive(Clone, Debug)]
pub enum SpecBody {
    Algebra { algebra: Algebra, functional: Option<Vec<Rational>> },
    Extension(AlgebraExtension),
    Wreath(WreathData),
}

#[derive(Clone, Debug)]
pub struct SpecFile {
    pub name: String,
    pub description: Option<String>,
    pub seed: Option<u64>,
    pub body: SpecBody,
}

impl SpecFile {
    pub fn kind(&self) -> Kind {
        match self.body {
            SpecBody::Algebra { .. } => Kind::Algebra,
            SpecBody::Extension(_) => Kind::Extension,
            SpecBody::Wreath(_) => Kind::Wreath,
        }
    }
}

pub fn load_spec(path: &Path) -> Result<SpecFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let default_name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    parse_spec(&text, &default_name).map_err(|e| match e {
        CliError::Parse(m) => CliError::Parse(format!("{}: {m}", path.display())),
        CliError::Validation(m) => CliError::Validation(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn parse_spec(text: &str, default_name: &str) -> Result<SpecFile, CliError> {
    let raw: RawSpec = toml::from_str(text).map_err(|e| CliError::Parse(e.to_string().trim_end().to_string()))?;
    let parse = CliError::Parse;
    let body = match raw.kind {
        Kind::Algebra => {
            let algebra = build_algebra(raw.algebra.as_ref().ok_or_else(|| parse(missing("algebra", "algebra")))?, "algebra")?;
            let functional = raw.functional.as_deref().map(from_q);
            if let Some(f) = &functional {
                if f.len() != algebra.dim() {
                    return Err(CliError::Validation(format!(
                        "`functional` has {} entries but the algebra has dimension {}",
                        f.len(),
                        algebra.dim()
                    )));
                }
            }
            SpecBody::Algebra { algebra, functional }
        }
        Kind::Extension => {
            let source = build_algebra(raw.source.as_ref().ok_or_else(|| parse(missing("source", "extension")))?, "source")?;
            let target = build_algebra(raw.target.as_ref().ok_or_else(|| parse(missing("target", "extension")))?, "target")?;
            let map = match &raw.map {
                Some(rows) => rows_to_matrix(rows, "map").map_err(parse)?,
                None if source.dim() == 1 => RatMatrix::column_vector(target.unit()),
                None => return Err(parse(missing("map", "extension"))),
            };
            let morph = AlgebraMorphism::new(source, target, map).map_err(|e| CliError::Validation(format!("`map`: {e}")))?;
            invalid("map", validate_morphism(&morph))?;
            SpecBody::Extension(AlgebraExtension::new(morph).map_err(|e| CliError::Validation(e.to_string()))?)
        }
        Kind::Wreath => {
            let a = build_algebra(raw.algebra.as_ref().ok_or_else(|| parse(missing("algebra", "wreath")))?, "algebra")?;
            let w = raw.wreath.as_ref().ok_or_else(|| parse(missing("wreath", "wreath")))?;
            SpecBody::Wreath(build_wreath(a, w)?)
        }
    };
    Ok(SpecFile {
        name: raw.name.clone().unwrap_or_else(|| default_name.to_string()),
        description: raw.description.clone(),
        seed: raw.seed,
        body,
    })
}

fn missing(field: &str, kind: &str) -> String {
    format!("a spec of kind `{kind}` needs a `{field}` table or field")
}

fn invalid(what: &str, report: ValidationReport) -> Result<(), CliError> {
    if report.is_empty() {
        return Ok(());
    }
    let list: Vec<String> = report.violations.iter().take(8).map(|v| v.to_string()).collect();
    let more = report.violations.len().saturating_sub(list.len());
    let tail = if more > 0 { format!(" and {more} more") } else { String::new() };
    Err(CliError::Validation(format!("`{what}` fails {}{tail}", list.join("; "))))
}

pub fn build_algebra(raw: &RawAlgebra, what: &str) -> Result<Algebra, CliError> {
    if let Some(name) = &raw.builtin {
        if raw.dim.is_some() || raw.table.is_some() || raw.unit.is_some() {
            return Err(CliError::Parse(format!("`{what}`: give either `builtin` or an explicit table, not both")));
        }
        return builtin(name).map_err(|e| CliError::Parse(format!("`{what}.builtin`: {e}")));
    }
    let field = |f: &str| CliError::Parse(format!("`{what}` needs `{f}` (or `builtin`)"));
    let dim = raw.dim.ok_or_else(|| field("dim"))?;
    let table = raw.table.as_ref().ok_or_else(|| field("table"))?;
    let unit = raw.unit.as_ref().ok_or_else(|| field("unit"))?;
    let shape = |m: String| CliError::Validation(format!("`{what}.{m}"));
    if table.len() != dim {
        return Err(shape(format!("table` has {} rows, expected {dim}", table.len())));
    }
    let mut mult = Vec::with_capacity(dim * dim * dim);
    for (i, row) in table.iter().enumerate() {
        if row.len() != dim {
            return Err(shape(format!("table[{i}]` has {} entries, expected {dim}", row.len())));
        }
        for (j, v) in row.iter().enumerate() {
            if v.len() != dim {
                return Err(shape(format!("table[{i}][{j}]` has {} coordinates, expected {dim}", v.len())));
            }
            mult.extend(from_q(v));
        }
    }
    if unit.len() != dim {
        return Err(shape(format!("unit` has {} coordinates, expected {dim}", unit.len())));
    }
    let mut a = Algebra::new(dim, mult, from_q(unit)).map_err(|e| CliError::Validation(format!("`{what}`: {e}")))?;
    if let Some(labels) = &raw.labels {
        if labels.len() != dim {
            return Err(shape(format!("labels` has {} entries, expected {dim}", labels.len())));
        }
        a = a.with_labels(labels.clone());
    }
    invalid(what, validate_algebra(&a))?;
    Ok(a)
}

fn build_wreath(a: Algebra, w: &RawWreath) -> Result<WreathData, CliError> {
    let parse = CliError::Parse;
    let need = |f: &str| CliError::Parse(format!("a `{:?}` wreath needs `wreath.{f}`", w.construction).to_lowercase());
    let wreath_err = |e: WreathError| match e {
        WreathError::Invalid(r) => invalid("wreath", r).unwrap_err(),
        other => CliError::Validation(format!("`wreath`: {other}")),
    };
    let data = match w.construction {
        Construction::Trivial => {
            let x = build_algebra(w.x.as_ref().ok_or_else(|| need("x"))?, "wreath.x")?;
            trivial_wreath(&a, &x)
        }
        Construction::Smash => {
            let order = w.order.ok_or_else(|| need("order"))?;
            let g = rows_to_matrix(w.generator.as_ref().ok_or_else(|| need("generator"))?, "wreath.generator").map_err(parse)?;
            smash_wreath(&a, order, &g).map_err(wreath_err)?
        }
        Construction::Explicit => {
            let n = w.x_dim.ok_or_else(|| need("x_dim"))?;
            let psi = rows_to_matrix(w.psi.as_ref().ok_or_else(|| need("psi"))?, "wreath.psi").map_err(parse)?;
            let zeta = rows_to_matrix(w.zeta.as_ref().ok_or_else(|| need("zeta"))?, "wreath.zeta").map_err(parse)?;
            let sigma = from_q(w.sigma.as_ref().ok_or_else(|| need("sigma"))?);
            WreathData::new(a, n, psi, zeta, sigma).map_err(wreath_err)?
        }
    };
    invalid("wreath", validate_wreath(&data))?;
    Ok(data)
}

/// The explicit table form of an algebra.
pub fn raw_algebra(a: &Algebra) -> RawAlgebra {
    let d = a.dim();
    RawAlgebra {
        builtin: None,
        dim: Some(d),
        labels: Some(a.labels().to_vec()),
        unit: Some(to_q(a.unit())),
        table: Some((0..d).map(|i| (0..d).map(|j| to_q(a.basis_product(i, j))).collect()).collect()),
    }
}

/// A self-contained spec for a builtin algebra, with its table spelled out.
pub fn export_builtin(name: &str) -> Result<String, CliError> {
    let a = builtin(name).map_err(|e| CliError::Parse(e.to_string()))?;
    let raw = RawSpec {
        kind: Kind::Algebra,
        name: Some(name.to_string()),
        description: Some(format!("builtin algebra {name}, dimension {}", a.dim())),
        seed: None,
        functional: None,
        map: None,
        algebra: Some(raw_algebra(&a)),
        source: None,
        target: None,
        wreath: None,
    };
    toml::to_string(&raw).map_err(|e| CliError::Internal(e.to_string()))
}

/// Explicit spec for a wreath, used to export suite instances.
pub fn export_wreath(name: &str, w: &WreathData) -> Result<String, CliError> {
    let raw = RawSpec {
        kind: Kind::Wreath,
        name: Some(name.to_string()),
        description: None,
        seed: None,
        functional: None,
        map: None,
        algebra: Some(raw_algebra(&w.a)),
        source: None,
        target: None,
        wreath: Some(RawWreath {
            construction: Construction::Explicit,
            x: None,
            order: None,
            generator: None,
            x_dim: Some(w.x_dim),
            psi: Some(matrix_to_rows(&w.psi)),
            zeta: Some(matrix_to_rows(&w.zeta)),
            sigma: Some(to_q(&w.sigma)),
        }),
    };
    toml::to_string(&raw).map_err(|e| CliError::Internal(e.to_string()))
}
