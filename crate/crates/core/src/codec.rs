//! JSON files for algebras, representations and cochains.
//!
//! Rationals are written as canonical strings (`"p"` or `"p/q"` in lowest
//! terms with positive denominator); matrices are lists of rows under the
//! column-image convention. Serializing a parsed file reproduces it byte for
//! byte once it has been written by this module.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::algebra::{
    AlgebraError, BasisVector, ColorHomAlgebra, GradedSpace, Kind, StructureConstants,
};
use crate::checks::check_graded;
use crate::cohomology::{canonical_tuples, Cochain, CohomologyError};
use crate::grading::{Bicharacter, GradingGroup, GroupElement};
use crate::linalg::RatMatrix;
use crate::rational::{format_rational, parse_rational, Q};
use crate::representations::{Representation, RepresentationError};

pub const VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid `{field}`: {message}")]
    Field { field: String, message: String },
    #[error("grading violation: {0}")]
    GradingViolation(String),
}

impl From<serde_json::Error> for CodecError {
    fn from(e: serde_json::Error) -> Self {
        CodecError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

fn field(name: impl Into<String>, message: impl ToString) -> CodecError {
    CodecError::Field {
        field: name.into(),
        message: message.to_string(),
    }
}

fn algebra_error(e: AlgebraError) -> CodecError {
    match e {
        AlgebraError::NotHomogeneous { .. } | AlgebraError::BadDegree(_) | AlgebraError::Grading(_) => {
            CodecError::GradingViolation(e.to_string())
        }
        other => field("algebra", other),
    }
}

type Matrix = Vec<Vec<String>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisEntry {
    pub name: String,
    pub degree: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub k: usize,
    pub c: String,
}

/// Bracket entries keyed `"i,j"`, written in numeric order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Deserialize)]
#[serde(transparent)]
pub struct BracketTable(pub BTreeMap<String, Vec<Term>>);

impl BracketTable {
    fn ordered(&self) -> Vec<(&String, &Vec<Term>)> {
        let mut v: Vec<_> = self.0.iter().collect();
        v.sort_by_key(|(k, _)| parse_pair(k).unwrap_or((usize::MAX, usize::MAX)));
        v
    }
}

impl Serialize for BracketTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.ordered() {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

fn parse_pair(key: &str) -> Option<(usize, usize)> {
    let (a, b) = key.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

fn parse_tuple(key: &str) -> Option<Vec<usize>> {
    key.split(',').map(|p| p.trim().parse().ok()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub version: u32,
    pub group: GradingGroup,
    pub bicharacter: Matrix,
    pub basis: Vec<BasisEntry>,
    pub kind: Kind,
    pub bracket: BracketTable,
    pub alpha: Matrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Matrix>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationFile {
    pub version: u32,
    pub algebra: AlgebraFile,
    pub module_basis: Vec<BasisEntry>,
    pub beta: Matrix,
    pub rho: Vec<Matrix>,
}

/// Values keyed by comma-separated canonical tuples; tuples with zero value
/// are omitted. `module_basis` names the value space when it is not implied
/// by the command that reads the file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainFile {
    pub version: u32,
    pub n: usize,
    pub degree: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module_basis: Option<Vec<BasisEntry>>,
    pub values: BTreeMap<String, Vec<String>>,
}

fn matrix_out(m: &RatMatrix) -> Matrix {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(format_rational).collect())
        .collect()
}

fn rational_in(name: &str, s: &str) -> Result<Q, CodecError> {
    parse_rational(s).map_err(|e| field(name, e))
}

fn matrix_in(name: &str, m: &Matrix, rows: usize, cols: usize) -> Result<RatMatrix, CodecError> {
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        return Err(field(name, format!("expected a {rows}x{cols} matrix")));
    }
    let mut out = RatMatrix::zeros(rows, cols);
    for (i, r) in m.iter().enumerate() {
        for (j, s) in r.iter().enumerate() {
            out.set(i, j, rational_in(&format!("{name}[{i}][{j}]"), s)?);
        }
    }
    Ok(out)
}

fn basis_out(space: &GradedSpace) -> Vec<BasisEntry> {
    space
        .basis()
        .iter()
        .map(|b| BasisEntry {
            name: b.name.clone(),
            degree: b.degree.0.clone(),
        })
        .collect()
}

fn basis_in(bc: &Bicharacter, entries: &[BasisEntry]) -> Result<GradedSpace, CodecError> {
    let arity = bc.group().arity();
    let basis = entries
        .iter()
        .map(|e| {
            if e.degree.len() != arity {
                return Err(CodecError::GradingViolation(format!(
                    "degree of `{}` has {} coordinates, expected {arity}",
                    e.name,
                    e.degree.len()
                )));
            }
            Ok(BasisVector {
                name: e.name.clone(),
                degree: GroupElement(e.degree.clone()),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    GradedSpace::new(bc.clone(), basis).map_err(algebra_error)
}

pub fn algebra_file(a: &ColorHomAlgebra) -> AlgebraFile {
    let mut bracket = BTreeMap::new();
    for ((i, j), terms) in a.bracket().entries() {
        bracket.insert(
            format!("{i},{j}"),
            terms
                .iter()
                .map(|(k, c)| Term {
                    k: *k,
                    c: format_rational(c),
                })
                .collect(),
        );
    }
    AlgebraFile {
        version: VERSION,
        group: a.bc().group().clone(),
        bicharacter: a.bc().table_strings(),
        basis: basis_out(a.space()),
        kind: a.kind(),
        bracket: BracketTable(bracket),
        alpha: matrix_out(a.alpha()),
        form: a.form().map(matrix_out),
    }
}

pub fn algebra_from_file(f: &AlgebraFile) -> Result<ColorHomAlgebra, CodecError> {
    if f.version != VERSION {
        return Err(field("version", format!("unsupported version {}", f.version)));
    }
    let group = GradingGroup::new(f.group.free_rank, f.group.torsion_orders.clone())
        .map_err(|e| field("group", e))?;
    let arity = group.arity();
    let table = matrix_in("bicharacter", &f.bicharacter, arity, arity)?
        .to_rows();
    let bc = Bicharacter::new(group, table).map_err(|e| CodecError::GradingViolation(e.to_string()))?;
    let space = basis_in(&bc, &f.basis)?;
    let n = space.dim();
    let mut bracket = StructureConstants::zero(n);
    for (key, terms) in &f.bracket.0 {
        let (i, j) = parse_pair(key)
            .filter(|&(i, j)| i < n && j < n)
            .ok_or_else(|| field(format!("bracket.{key}"), "expected \"i,j\" with indices in range"))?;
        let mut parsed = Vec::with_capacity(terms.len());
        for t in terms {
            if t.k >= n {
                return Err(field(format!("bracket.{key}"), format!("index {} out of range", t.k)));
            }
            parsed.push((t.k, rational_in(&format!("bracket.{key}"), &t.c)?));
        }
        bracket.set(i, j, parsed).map_err(algebra_error)?;
    }
    let graded = check_graded(&space, &bracket);
    if let Some(w) = &graded.witness {
        return Err(CodecError::GradingViolation(format!(
            "bracket of ({}) has a component on {} of the wrong degree",
            w.basis[..2].join(", "),
            w.basis[2]
        )));
    }
    let alpha = matrix_in("alpha", &f.alpha, n, n)?;
    let form = f
        .form
        .as_ref()
        .map(|g| matrix_in("form", g, n, n))
        .transpose()?;
    ColorHomAlgebra::new(space, bracket, alpha, form, f.kind).map_err(algebra_error)
}

fn to_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn algebra_to_json(a: &ColorHomAlgebra) -> String {
    to_text(&algebra_file(a))
}

pub fn parse_algebra(s: &str) -> Result<ColorHomAlgebra, CodecError> {
    let f: AlgebraFile = serde_json::from_str(s)?;
    algebra_from_file(&f)
}

pub fn representation_file(r: &Representation) -> RepresentationFile {
    RepresentationFile {
        version: VERSION,
        algebra: algebra_file(r.algebra()),
        module_basis: basis_out(r.module()),
        beta: matrix_out(r.beta()),
        rho: r.rho().iter().map(matrix_out).collect(),
    }
}

pub fn representation_from_file(f: &RepresentationFile) -> Result<Representation, CodecError> {
    if f.version != VERSION {
        return Err(field("version", format!("unsupported version {}", f.version)));
    }
    let a = algebra_from_file(&f.algebra)?;
    let module = basis_in(a.bc(), &f.module_basis)?;
    let m = module.dim();
    let beta = matrix_in("beta", &f.beta, m, m)?;
    let rho = f
        .rho
        .iter()
        .enumerate()
        .map(|(i, r)| matrix_in(&format!("rho[{i}]"), r, m, m))
        .collect::<Result<Vec<_>, _>>()?;
    Representation::new(a, module, beta, rho).map_err(|e| match e {
        RepresentationError::NotHomogeneous { .. } | RepresentationError::BadTwist => {
            CodecError::GradingViolation(e.to_string())
        }
        other => field("representation", other),
    })
}

pub fn representation_to_json(r: &Representation) -> String {
    to_text(&representation_file(r))
}

pub fn parse_representation(s: &str) -> Result<Representation, CodecError> {
    let f: RepresentationFile = serde_json::from_str(s)?;
    representation_from_file(&f)
}

pub fn cochain_file(c: &Cochain, with_module_basis: bool) -> CochainFile {
    let mut values = BTreeMap::new();
    for (t, v) in c.tuples().iter().zip(c.values()) {
        if v.iter().all(Zero::is_zero) {
            continue;
        }
        let key = t.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        values.insert(key, v.iter().map(format_rational).collect());
    }
    CochainFile {
        version: VERSION,
        n: c.n(),
        degree: c.degree().0.clone(),
        module_basis: with_module_basis.then(|| basis_out(c.module().module())),
        values,
    }
}

pub fn cochain_to_json(c: &Cochain, with_module_basis: bool) -> String {
    to_text(&cochain_file(c, with_module_basis))
}

pub fn parse_cochain_file(s: &str) -> Result<CochainFile, CodecError> {
    Ok(serde_json::from_str(s)?)
}

impl CochainFile {
    /// The value space named in the file, graded like `a`.
    pub fn module_space(&self, a: &ColorHomAlgebra) -> Result<Option<GradedSpace>, CodecError> {
        self.module_basis
            .as_ref()
            .map(|b| basis_in(a.bc(), b))
            .transpose()
    }

    pub fn into_cochain(&self, module: &Representation) -> Result<Cochain, CodecError> {
        if self.version != VERSION {
            return Err(field("version", format!("unsupported version {}", self.version)));
        }
        let a = module.algebra();
        let group = a.bc().group();
        let degree = GroupElement(self.degree.clone());
        if self.degree.len() != group.arity() || !group.is_canonical(&degree) {
            return Err(CodecError::GradingViolation(format!("bad cochain degree {degree}")));
        }
        let tuples = canonical_tuples(a.space(), self.n).map_err(|e| field("n", e))?;
        let mut entries = Vec::with_capacity(self.values.len());
        for (key, v) in &self.values {
            let t = parse_tuple(key)
                .filter(|t| tuples.contains(t))
                .ok_or_else(|| field(format!("values.{key}"), "not a canonical tuple"))?;
            if v.len() != module.dim() {
                return Err(field(
                    format!("values.{key}"),
                    format!("expected {} components", module.dim()),
                ));
            }
            let vals = v
                .iter()
                .map(|s| rational_in(&format!("values.{key}"), s))
                .collect::<Result<Vec<_>, _>>()?;
            entries.push((t, vals));
        }
        Cochain::from_entries(module.clone(), self.n, degree, &entries).map_err(|e| match e {
            CohomologyError::NotHomogeneous { .. } => CodecError::GradingViolation(e.to_string()),
            other => field("values", other),
        })
    }
}
