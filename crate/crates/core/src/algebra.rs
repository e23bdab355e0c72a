//! Graded spaces, homogeneous maps, structure constants and the
//! [`ColorHomAlgebra`] presentation shared by every check and construction.
//!
//! Matrices of linear maps follow the column-image convention: column `j`
//! holds the coordinates of the image of basis vector `j`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grading::{Bicharacter, EpsTable, GradingError, GroupElement};
use crate::linalg::RatMatrix;
use crate::rational::Q;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error("duplicate basis name `{0}`")]
    DuplicateName(String),
    #[error("degree of basis vector `{0}` is not a canonical group element")]
    BadDegree(String),
    #[error("{what}: expected {expected_rows}x{expected_cols}, got {rows}x{cols}")]
    Shape {
        what: String,
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },
    #[error("{what} is not homogeneous of the required degree: entry ({row},{col})")]
    NotHomogeneous { what: String, row: usize, col: usize },
    #[error("no bilinear form attached")]
    NoForm,
    #[error("graded spaces do not match: {0}")]
    SpaceMismatch(String),
    #[error("bracket index ({0},{1}) -> {2} out of range")]
    IndexOutOfRange(usize, usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisVector {
    pub name: String,
    pub degree: GroupElement,
}

/// A graded vector space given by a homogeneous basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    bc: Bicharacter,
    basis: Vec<BasisVector>,
}

impl GradedSpace {
    pub fn new(bc: Bicharacter, basis: Vec<BasisVector>) -> Result<Self, AlgebraError> {
        let mut seen = BTreeSet::new();
        for b in &basis {
            if !seen.insert(b.name.as_str()) {
                return Err(AlgebraError::DuplicateName(b.name.clone()));
            }
            if !bc.group().is_canonical(&b.degree) {
                return Err(AlgebraError::BadDegree(b.name.clone()));
            }
        }
        Ok(GradedSpace { bc, basis })
    }

    /// Convenience constructor from `(name, degree coordinates)` pairs.
    pub fn from_pairs(bc: &Bicharacter, pairs: &[(&str, &[i64])]) -> Result<Self, AlgebraError> {
        let basis = pairs
            .iter()
            .map(|(n, d)| {
                Ok(BasisVector {
                    name: n.to_string(),
                    degree: bc.group().element(d.to_vec())?,
                })
            })
            .collect::<Result<Vec<_>, AlgebraError>>()?;
        Self::new(bc.clone(), basis)
    }

    /// All basis vectors in degree zero.
    pub fn even(bc: &Bicharacter, names: &[&str]) -> Self {
        let zero = bc.group().zero();
        GradedSpace {
            bc: bc.clone(),
            basis: names
                .iter()
                .map(|n| BasisVector {
                    name: n.to_string(),
                    degree: zero.clone(),
                })
                .collect(),
        }
    }

    pub fn bc(&self) -> &Bicharacter {
        &self.bc
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn degree(&self, i: usize) -> &GroupElement {
        &self.basis[i].degree
    }

    pub fn degrees(&self) -> Vec<GroupElement> {
        self.basis.iter().map(|b| b.degree.clone()).collect()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis[i].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    pub fn eps(&self, a: &GroupElement, b: &GroupElement) -> Q {
        self.bc.eps_unchecked(a, b)
    }

    pub fn eps_table(&self) -> EpsTable {
        let d = self.degrees();
        EpsTable::new(&self.bc, &d, &d)
    }

    pub fn add_degrees(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.bc.group().add(a, b).expect("degrees from the same group")
    }

    pub fn neg_degree(&self, a: &GroupElement) -> GroupElement {
        self.bc.group().neg(a).expect("degree from the same group")
    }

    pub fn same_grading(&self, other: &GradedSpace) -> bool {
        self.bc == other.bc
    }

    /// `self ⊕ other`, basis of `self` first. Names must stay unique.
    pub fn direct_sum(&self, other: &GradedSpace) -> Result<GradedSpace, AlgebraError> {
        if !self.same_grading(other) {
            return Err(AlgebraError::SpaceMismatch("different gradings".into()));
        }
        let mut basis = self.basis.clone();
        basis.extend(other.basis.iter().cloned());
        GradedSpace::new(self.bc.clone(), basis)
    }

    /// `self ⊗ other` with basis `xᵢ⊗aⱼ` in lexicographic order.
    pub fn tensor(&self, other: &GradedSpace) -> Result<GradedSpace, AlgebraError> {
        if !self.same_grading(other) {
            return Err(AlgebraError::SpaceMismatch("different gradings".into()));
        }
        let mut basis = Vec::with_capacity(self.dim() * other.dim());
        for x in &self.basis {
            for a in &other.basis {
                basis.push(BasisVector {
                    name: format!("{}⊗{}", x.name, a.name),
                    degree: self.add_degrees(&x.degree, &a.degree),
                });
            }
        }
        GradedSpace::new(self.bc.clone(), basis)
    }

    /// Dual space; the functional dual to `vᵢ` is named `vᵢ*` and sits in
    /// degree `−deg(vᵢ)` so the pairing is even.
    pub fn dual(&self) -> GradedSpace {
        GradedSpace {
            bc: self.bc.clone(),
            basis: self
                .basis
                .iter()
                .map(|b| BasisVector {
                    name: format!("{}*", b.name),
                    degree: self.neg_degree(&b.degree),
                })
                .collect(),
        }
    }

    /// The same basis re-graded with every degree set to zero in `bc`'s group.
    pub fn regrade_even(&self, bc: &Bicharacter) -> Result<GradedSpace, AlgebraError> {
        let zero = self.bc.group().zero();
        if let Some(b) = self.basis.iter().find(|b| b.degree != zero) {
            return Err(AlgebraError::BadDegree(b.name.clone()));
        }
        let names: Vec<&str> = self.basis.iter().map(|b| b.name.as_str()).collect();
        Ok(GradedSpace::even(bc, &names))
    }
}

/// Checks that `m` maps degree `d` into degree `d + shift`.
pub fn homogeneity_violation(
    source: &GradedSpace,
    target: &GradedSpace,
    shift: &GroupElement,
    m: &RatMatrix,
) -> Option<(usize, usize)> {
    for j in 0..source.dim() {
        let want = source.add_degrees(source.degree(j), shift);
        for i in 0..target.dim() {
            if !m.get(i, j).is_zero() && target.degree(i) != &want {
                return Some((i, j));
            }
        }
    }
    None
}

fn check_shape(what: &str, m: &RatMatrix, rows: usize, cols: usize) -> Result<(), AlgebraError> {
    if m.rows() != rows || m.cols() != cols {
        return Err(AlgebraError::Shape {
            what: what.to_string(),
            expected_rows: rows,
            expected_cols: cols,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(())
}

/// Homogeneous linear map between graded spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedLinearMap {
    pub source: GradedSpace,
    pub target: GradedSpace,
    pub degree: GroupElement,
    pub matrix: RatMatrix,
}

impl GradedLinearMap {
    pub fn new(
        source: GradedSpace,
        target: GradedSpace,
        degree: GroupElement,
        matrix: RatMatrix,
    ) -> Result<Self, AlgebraError> {
        check_shape("linear map", &matrix, target.dim(), source.dim())?;
        if let Some((row, col)) = homogeneity_violation(&source, &target, &degree, &matrix) {
            return Err(AlgebraError::NotHomogeneous {
                what: "linear map".into(),
                row,
                col,
            });
        }
        Ok(GradedLinearMap {
            source,
            target,
            degree,
            matrix,
        })
    }

    /// Even endomorphism of `space`.
    pub fn endo(space: &GradedSpace, matrix: RatMatrix) -> Result<Self, AlgebraError> {
        let zero = space.bc().group().zero();
        Self::new(space.clone(), space.clone(), zero, matrix)
    }

    pub fn identity(space: &GradedSpace) -> Self {
        GradedLinearMap {
            source: space.clone(),
            target: space.clone(),
            degree: space.bc().group().zero(),
            matrix: RatMatrix::identity(space.dim()),
        }
    }

    pub fn is_even(&self) -> bool {
        self.degree == self.source.bc().group().zero()
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        self.matrix.mul_vec(v)
    }
}

/// Sparse table `(i,j) ↦ Σ c_k e_k` for a bilinear product on a basis.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StructureConstants {
    dim: usize,
    table: BTreeMap<(usize, usize), Vec<(usize, Q)>>,
}

impl StructureConstants {
    pub fn zero(dim: usize) -> Self {
        StructureConstants {
            dim,
            table: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sets `[eᵢ,eⱼ]`; zero coefficients are dropped and indices sorted.
    pub fn set(&mut self, i: usize, j: usize, terms: Vec<(usize, Q)>) -> Result<(), AlgebraError> {
        let mut merged: BTreeMap<usize, Q> = BTreeMap::new();
        for (k, c) in terms {
            if i >= self.dim || j >= self.dim || k >= self.dim {
                return Err(AlgebraError::IndexOutOfRange(i, j, k));
            }
            *merged.entry(k).or_insert_with(Q::zero) += c;
        }
        let terms: Vec<(usize, Q)> = merged.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if terms.is_empty() {
            self.table.remove(&(i, j));
        } else {
            self.table.insert((i, j), terms);
        }
        Ok(())
    }

    pub fn set_vec(&mut self, i: usize, j: usize, v: &[Q]) {
        let terms = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .collect();
        self.set(i, j, terms).expect("vector length matches dimension");
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vec<Q>) -> Self {
        let mut sc = Self::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                sc.set_vec(i, j, &v);
            }
        }
        sc
    }

    pub fn get(&self, i: usize, j: usize) -> &[(usize, Q)] {
        self.table.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    pub fn get_vec(&self, i: usize, j: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim];
        for (k, c) in self.get(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Vec<(usize, Q)>)> {
        self.table.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    /// Bilinear extension to arbitrary coordinate vectors.
    pub fn product(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim];
        for ((i, j), terms) in &self.table {
            let (a, b) = (&x[*i], &y[*j]);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let ab = a * b;
            for (k, c) in terms {
                out[*k] += &ab * c;
            }
        }
        out
    }

    /// Matrix of left multiplication by `eᵢ`.
    pub fn left_mul(&self, i: usize) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.get(i, j) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    /// `f ∘ [·,·]` for a linear map `f` (column-image convention).
    pub fn compose_left(&self, f: &RatMatrix) -> Self {
        let mut out = Self::zero(self.dim);
        for ((i, j), _) in &self.table {
            let v = f.mul_vec(&self.get_vec(*i, *j));
            out.set_vec(*i, *j, &v);
        }
        out
    }
}

/// Bilinear form `B(eᵢ,eⱼ) = matrix[i][j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    pub space: GradedSpace,
    pub matrix: RatMatrix,
}

impl BilinearForm {
    /// Rejects forms that pair degrees not summing to zero.
    pub fn new(space: GradedSpace, matrix: RatMatrix) -> Result<Self, AlgebraError> {
        let n = space.dim();
        check_shape("bilinear form", &matrix, n, n)?;
        if let Some((row, col)) = form_evenness_violation(&space, &matrix) {
            return Err(AlgebraError::NotHomogeneous {
                what: "bilinear form".into(),
                row,
                col,
            });
        }
        Ok(BilinearForm { space, matrix })
    }

    pub fn eval(&self, x: &[Q], y: &[Q]) -> Q {
        eval_form(&self.matrix, x, y)
    }
}

pub fn eval_form(g: &RatMatrix, x: &[Q], y: &[Q]) -> Q {
    let mut acc = Q::zero();
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let gij = g.get(i, j);
            if !gij.is_zero() {
                acc += a * b * gij;
            }
        }
    }
    acc
}

fn form_evenness_violation(space: &GradedSpace, m: &RatMatrix) -> Option<(usize, usize)> {
    let zero = space.bc().group().zero();
    for i in 0..space.dim() {
        for j in 0..space.dim() {
            if !m.get(i, j).is_zero() && space.add_degrees(space.degree(i), space.degree(j)) != zero
            {
                return Some((i, j));
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Lie,
    Associative,
    Leibniz,
}

impl std::str::FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lie" => Ok(Kind::Lie),
            "associative" => Ok(Kind::Associative),
            "leibniz" => Ok(Kind::Leibniz),
            other => Err(format!("unknown kind `{other}`")),
        }
    }
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Kind::Lie => "lie",
            Kind::Associative => "associative",
            Kind::Leibniz => "leibniz",
        })
    }
}

/// A graded algebra with product, even twist map `alpha` and optional even
/// bilinear form. `kind` declares which axioms the product is meant to
/// satisfy; the checks in [`crate::checks`] decide whether it does.
#[derive(Debug, Clone)]
pub struct ColorHomAlgebra {
    space: GradedSpace,
    bracket: StructureConstants,
    alpha: RatMatrix,
    form: Option<RatMatrix>,
    kind: Kind,
    /// Outcome of each axiom check run through [`ColorHomAlgebra::record`].
    pub verified: BTreeMap<String, bool>,
}

impl PartialEq for ColorHomAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space
            && self.bracket == other.bracket
            && self.alpha == other.alpha
            && self.form == other.form
            && self.kind == other.kind
    }
}

impl Eq for ColorHomAlgebra {}

impl ColorHomAlgebra {
    /// Validates shapes, evenness of `alpha` and of the form. The grading of
    /// the product itself is left to [`crate::checks::check_graded`].
    pub fn new(
        space: GradedSpace,
        bracket: StructureConstants,
        alpha: RatMatrix,
        form: Option<RatMatrix>,
        kind: Kind,
    ) -> Result<Self, AlgebraError> {
        let n = space.dim();
        if bracket.dim() != n {
            return Err(AlgebraError::Shape {
                what: "structure constants".into(),
                expected_rows: n,
                expected_cols: n,
                rows: bracket.dim(),
                cols: bracket.dim(),
            });
        }
        check_shape("alpha", &alpha, n, n)?;
        let zero = space.bc().group().zero();
        if let Some((row, col)) = homogeneity_violation(&space, &space, &zero, &alpha) {
            return Err(AlgebraError::NotHomogeneous {
                what: "alpha".into(),
                row,
                col,
            });
        }
        if let Some(g) = &form {
            check_shape("form", g, n, n)?;
            if let Some((row, col)) = form_evenness_violation(&space, g) {
                return Err(AlgebraError::NotHomogeneous {
                    what: "bilinear form".into(),
                    row,
                    col,
                });
            }
        }
        Ok(ColorHomAlgebra {
            space,
            bracket,
            alpha,
            form,
            kind,
            verified: BTreeMap::new(),
        })
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn bc(&self) -> &Bicharacter {
        self.space.bc()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn bracket(&self) -> &StructureConstants {
        &self.bracket
    }

    pub fn alpha(&self) -> &RatMatrix {
        &self.alpha
    }

    pub fn alpha_map(&self) -> GradedLinearMap {
        GradedLinearMap {
            source: self.space.clone(),
            target: self.space.clone(),
            degree: self.space.bc().group().zero(),
            matrix: self.alpha.clone(),
        }
    }

    pub fn form(&self) -> Option<&RatMatrix> {
        self.form.as_ref()
    }

    pub fn form_or_err(&self) -> Result<&RatMatrix, AlgebraError> {
        self.form.as_ref().ok_or(AlgebraError::NoForm)
    }

    pub fn bilinear_form(&self) -> Option<BilinearForm> {
        self.form.as_ref().map(|g| BilinearForm {
            space: self.space.clone(),
            matrix: g.clone(),
        })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn with_kind(mut self, kind: Kind) -> Self {
        self.kind = kind;
        self.verified.clear();
        self
    }

    pub fn with_form(mut self, form: Option<RatMatrix>) -> Result<Self, AlgebraError> {
        let (space, bracket, alpha, kind) = (self.space, self.bracket, self.alpha, self.kind);
        self = Self::new(space, bracket, alpha, form, kind)?;
        Ok(self)
    }

    pub fn with_alpha(self, alpha: RatMatrix) -> Result<Self, AlgebraError> {
        Self::new(self.space, self.bracket, alpha, self.form, self.kind)
    }

    pub fn with_bracket(self, bracket: StructureConstants) -> Result<Self, AlgebraError> {
        Self::new(self.space, bracket, self.alpha, self.form, self.kind)
    }

    /// Same data over a different (but degree-compatible) graded space.
    pub fn with_space(self, space: GradedSpace) -> Result<Self, AlgebraError> {
        Self::new(space, self.bracket, self.alpha, self.form, self.kind)
    }

    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        self.bracket.product(x, y)
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Q> {
        crate::rational::unit(self.dim(), i)
    }

    /// `ad(eᵢ) = [eᵢ, ·]`.
    pub fn ad(&self, i: usize) -> RatMatrix {
        self.bracket.left_mul(i)
    }

    /// `ad(x)` for an arbitrary vector.
    pub fn ad_vec(&self, x: &[Q]) -> RatMatrix {
        let n = self.dim();
        let mut m = RatMatrix::zeros(n, n);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.ad(i).scale(c));
            }
        }
        m
    }

    /// Records every check in `report` under its axiom name.
    pub fn record(&mut self, report: &crate::checks::Report) {
        for c in &report.checks {
            self.verified.insert(c.axiom.clone(), c.passed);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn space_rejects_duplicates() {
        let bc = Bicharacter::trivial();
        let basis = vec![
            BasisVector {
                name: "x".into(),
                degree: GroupElement(vec![]),
            },
            BasisVector {
                name: "x".into(),
                degree: GroupElement(vec![]),
            },
        ];
        assert_eq!(
            GradedSpace::new(bc, basis),
            Err(AlgebraError::DuplicateName("x".into()))
        );
    }

    #[test]
    fn odd_alpha_rejected() {
        let bc = Bicharacter::super_sign();
        let space = GradedSpace::from_pairs(&bc, &[("a", &[0]), ("b", &[1])]).unwrap();
        let alpha = RatMatrix::from_rows(vec![vec![q(0), q(1)], vec![q(0), q(0)]]);
        let err = ColorHomAlgebra::new(space, StructureConstants::zero(2), alpha, None, Kind::Lie);
        assert!(matches!(err, Err(AlgebraError::NotHomogeneous { .. })));
    }

    #[test]
    fn structure_constants_merge_and_drop_zero() {
        let mut sc = StructureConstants::zero(3);
        sc.set(0, 1, vec![(2, q(1)), (2, q(-1))]).unwrap();
        assert!(sc.is_zero());
        sc.set(0, 1, vec![(2, q(2)), (1, q(1))]).unwrap();
        assert_eq!(sc.get(0, 1), &[(1, q(1)), (2, q(2))]);
        assert!(sc.set(0, 3, vec![]).is_err() || sc.set(0, 3, vec![(0, q(1))]).is_err());
    }

    #[test]
    fn tensor_and_dual_degrees() {
        let bc = Bicharacter::super_sign();
        let v = GradedSpace::from_pairs(&bc, &[("a", &[0]), ("b", &[1])]).unwrap();
        let t = v.tensor(&v).unwrap();
        let degs: Vec<i64> = t.basis().iter().map(|b| b.degree.0[0]).collect();
        assert_eq!(degs, vec![0, 1, 1, 0]);
        assert_eq!(v.dual().degree(1), &GroupElement(vec![1]));
    }
}
