//! Exact axiom verifiers. Every check quantifies over basis tuples in
//! lexicographic order and reports the first failing tuple.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{
    AlgebraError, ColorHomAlgebra, GradedLinearMap, GradedSpace, Kind, StructureConstants,
};
use crate::linalg::RatMatrix;
use crate::rational::{format_rational, Q};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub basis: Vec<String>,
    /// Nonzero residual of the failing identity, in basis coordinates.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub residual: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub axiom: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass(axiom: &str) -> Self {
        Check {
            axiom: axiom.to_string(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(axiom: &str, witness: Witness) -> Self {
        Check {
            axiom: axiom.to_string(),
            passed: false,
            witness: Some(witness),
        }
    }

    pub fn from_bool(axiom: &str, ok: bool, note: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(axiom)
        } else {
            Self::fail(
                axiom,
                Witness {
                    indices: vec![],
                    basis: vec![],
                    residual: vec![],
                    note: Some(note()),
                },
            )
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn single(check: Check) -> Self {
        Report {
            checks: vec![check],
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, axiom: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            write!(f, "{}: {}", c.axiom, if c.passed { "pass" } else { "FAIL" })?;
            if let Some(w) = &c.witness {
                if !w.basis.is_empty() {
                    write!(f, " at ({})", w.basis.join(", "))?;
                }
                if !w.residual.is_empty() {
                    write!(f, " residual [{}]", w.residual.join(", "))?;
                }
                if let Some(n) = &w.note {
                    write!(f, " ({n})")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub(crate) type Sparse = Vec<(usize, Q)>;

pub(crate) fn sparse(v: &[Q]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// Dense lookup tables for fast repeated evaluation on basis tuples.
pub(crate) struct Ops {
    pub n: usize,
    eps: Vec<Q>,
    br: Vec<Sparse>,
    alpha: Vec<Sparse>,
}

impl Ops {
    pub fn new(space: &GradedSpace, bracket: &StructureConstants, alpha: &RatMatrix) -> Self {
        let n = space.dim();
        let t = space.eps_table();
        let mut eps = Vec::with_capacity(n * n);
        let mut br = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                eps.push(t.get(i, j).clone());
                br.push(bracket.get(i, j).to_vec());
            }
        }
        let alpha = (0..n).map(|j| sparse(&alpha.column(j))).collect();
        Ops { n, eps, br, alpha }
    }

    pub fn of(a: &ColorHomAlgebra) -> Self {
        Self::new(a.space(), a.bracket(), a.alpha())
    }

    pub fn eps(&self, i: usize, j: usize) -> &Q {
        &self.eps[i * self.n + j]
    }

    pub fn br(&self, i: usize, j: usize) -> &Sparse {
        &self.br[i * self.n + j]
    }

    pub fn alpha(&self, i: usize) -> &Sparse {
        &self.alpha[i]
    }

    /// `out += c·[x, y]`.
    pub fn add_product(&self, out: &mut [Q], c: &Q, x: &Sparse, y: &Sparse) {
        if c.is_zero() {
            return;
        }
        for (a, xa) in x {
            let cx = c * xa;
            for (b, yb) in y {
                let cxy = &cx * yb;
                for (k, s) in self.br(*a, *b) {
                    out[*k] += &cxy * s;
                }
            }
        }
    }
}

fn witness(space: &GradedSpace, idx: &[usize], residual: &[Q]) -> Witness {
    Witness {
        indices: idx.to_vec(),
        basis: idx.iter().map(|&i| space.name(i).to_string()).collect(),
        residual: residual.iter().map(format_rational).collect(),
        note: None,
    }
}

fn nonzero(v: &[Q]) -> bool {
    v.iter().any(|c| !c.is_zero())
}

/// Degree additivity of every nonzero structure constant.
pub fn check_graded(space: &GradedSpace, bracket: &StructureConstants) -> Check {
    const AXIOM: &str = "graded";
    for ((i, j), terms) in bracket.entries() {
        let want = space.add_degrees(space.degree(*i), space.degree(*j));
        for (k, _) in terms {
            if space.degree(*k) != &want {
                return Check::fail(AXIOM, witness(space, &[*i, *j, *k], &[]));
            }
        }
    }
    Check::pass(AXIOM)
}

/// `[eᵢ,eⱼ] = −ε(i,j)[eⱼ,eᵢ]` on all pairs, the diagonal included.
pub fn check_skew(a: &ColorHomAlgebra) -> Check {
    const AXIOM: &str = "eps-skew";
    let ops = Ops::of(a);
    for i in 0..ops.n {
        for j in i..ops.n {
            let mut r = a.bracket().get_vec(i, j);
            for (k, c) in ops.br(j, i) {
                r[*k] += ops.eps(i, j) * c;
            }
            if nonzero(&r) {
                return Check::fail(AXIOM, witness(a.space(), &[i, j], &r));
            }
        }
    }
    Check::pass(AXIOM)
}

/// `μ(x,y) = ε(x,y)μ(y,x)` on all pairs.
pub fn check_eps_commutative(a: &ColorHomAlgebra) -> Check {
    const AXIOM: &str = "eps-commutative";
    let ops = Ops::of(a);
    for i in 0..ops.n {
        for j in i..ops.n {
            let mut r = a.bracket().get_vec(i, j);
            for (k, c) in ops.br(j, i) {
                r[*k] -= ops.eps(i, j) * c;
            }
            if nonzero(&r) {
                return Check::fail(AXIOM, witness(a.space(), &[i, j], &r));
            }
        }
    }
    Check::pass(AXIOM)
}

/// Cyclic sum `ε(z,x)[αx,[y,z]] + ε(x,y)[αy,[z,x]] + ε(y,z)[αz,[x,y]]`.
pub(crate) fn cyclic_sum(ops: &Ops, i: usize, j: usize, k: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); ops.n];
    ops.add_product(&mut out, ops.eps(k, i), ops.alpha(i), ops.br(j, k));
    ops.add_product(&mut out, ops.eps(i, j), ops.alpha(j), ops.br(k, i));
    ops.add_product(&mut out, ops.eps(j, k), ops.alpha(k), ops.br(i, j));
    out
}

/// `[αx,[y,z]] − ε(x,y)[αy,[x,z]] − [[x,y],αz]`.
pub(crate) fn leibniz_residual(ops: &Ops, i: usize, j: usize, k: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); ops.n];
    ops.add_product(&mut out, &Q::one(), ops.alpha(i), ops.br(j, k));
    ops.add_product(&mut out, &-ops.eps(i, j), ops.alpha(j), ops.br(i, k));
    ops.add_product(&mut out, &-Q::one(), ops.br(i, j), ops.alpha(k));
    out
}

fn cyclic_check(axiom: &str, a: &ColorHomAlgebra) -> Check {
    let ops = Ops::of(a);
    // The cyclic sum is invariant under rotating (x,y,z), so the
    // lexicographically first failing triple has its smallest index first.
    for i in 0..ops.n {
        for j in i..ops.n {
            for k in i..ops.n {
                let r = cyclic_sum(&ops, i, j, k);
                if nonzero(&r) {
                    return Check::fail(axiom, witness(a.space(), &[i, j, k], &r));
                }
            }
        }
    }
    Check::pass(axiom)
}

fn triple_check(
    axiom: &str,
    a: &ColorHomAlgebra,
    residual: impl Fn(&Ops, usize, usize, usize) -> Vec<Q>,
) -> Check {
    let ops = Ops::of(a);
    for i in 0..ops.n {
        for j in 0..ops.n {
            for k in 0..ops.n {
                let r = residual(&ops, i, j, k);
                if nonzero(&r) {
                    return Check::fail(axiom, witness(a.space(), &[i, j, k], &r));
                }
            }
        }
    }
    Check::pass(axiom)
}

/// The ε-Hom-Jacobi identity in cyclic form.
pub fn check_hom_jacobi(a: &ColorHomAlgebra) -> Check {
    cyclic_check("hom-jacobi", a)
}

/// The reformulated Hom-Jacobi identity
/// `[αx,[y,z]] − ε(x,y)[αy,[x,z]] = [[x,y],αz]`.
pub fn check_jacobi_equivalent_form(a: &ColorHomAlgebra) -> Check {
    triple_check("hom-jacobi-derivation-form", a, leibniz_residual)
}

/// Cyclic Hom-Leibniz identity, the same cyclic sum as Hom-Jacobi without
/// requiring skew symmetry.
pub fn check_hom_leibniz(a: &ColorHomAlgebra) -> Check {
    cyclic_check("hom-leibniz", a)
}

/// Left Hom-Leibniz identity `[αx,[y,z]] = [[x,y],αz] + ε(x,y)[αy,[x,z]]`.
pub fn check_hom_leibniz_left(a: &ColorHomAlgebra) -> Check {
    triple_check("hom-leibniz-left", a, leibniz_residual)
}

/// `α[eᵢ,eⱼ] = [αeᵢ,αeⱼ]`.
pub fn check_multiplicative(a: &ColorHomAlgebra) -> Check {
    const AXIOM: &str = "multiplicative";
    let ops = Ops::of(a);
    for i in 0..ops.n {
        for j in 0..ops.n {
            let mut r = a.alpha().mul_vec(&a.bracket().get_vec(i, j));
            ops.add_product(&mut r, &-Q::one(), ops.alpha(i), ops.alpha(j));
            if nonzero(&r) {
                return Check::fail(AXIOM, witness(a.space(), &[i, j], &r));
            }
        }
    }
    Check::pass(AXIOM)
}

/// `μ(αx,μ(y,z)) = μ(μ(x,y),αz)`, plus ε-commutativity when requested.
pub fn check_hom_associative(a: &ColorHomAlgebra, commutative: bool) -> Report {
    let mut report = Report::single(triple_check("hom-associative", a, |ops, i, j, k| {
        let mut out = vec![Q::zero(); ops.n];
        ops.add_product(&mut out, &Q::one(), ops.alpha(i), ops.br(j, k));
        ops.add_product(&mut out, &-Q::one(), ops.br(i, j), ops.alpha(k));
        out
    }));
    if commutative {
        report.push(check_eps_commutative(a));
    }
    report
}

/// Invariance `B(μ(x,y),z) = B(x,μ(y,z))` of a form under a product.
pub(crate) fn form_invariance(axiom: &str, a: &ColorHomAlgebra, g: &RatMatrix) -> Check {
    let ops = Ops::of(a);
    let n = ops.n;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut lhs = Q::zero();
                for (m, c) in ops.br(i, j) {
                    lhs += c * g.get(*m, k);
                }
                let mut rhs = Q::zero();
                for (m, c) in ops.br(j, k) {
                    rhs += c * g.get(i, *m);
                }
                if lhs != rhs {
                    return Check::fail(axiom, witness(a.space(), &[i, j, k], &[lhs - rhs]));
                }
            }
        }
    }
    Check::pass(axiom)
}

pub(crate) fn form_eps_symmetry(axiom: &str, space: &GradedSpace, g: &RatMatrix) -> Check {
    let t = space.eps_table();
    for i in 0..space.dim() {
        for j in i..space.dim() {
            let r = g.get(i, j) - t.get(i, j) * g.get(j, i);
            if !r.is_zero() {
                return Check::fail(axiom, witness(space, &[i, j], &[r]));
            }
        }
    }
    Check::pass(axiom)
}

/// `B(f x, y) = B(x, f y)` on basis pairs.
pub(crate) fn form_symmetric_map(
    axiom: &str,
    space: &GradedSpace,
    g: &RatMatrix,
    f: &RatMatrix,
) -> Check {
    let lhs = f.transpose().mul(g);
    let rhs = g.mul(f);
    for i in 0..space.dim() {
        for j in 0..space.dim() {
            let r = lhs.get(i, j) - rhs.get(i, j);
            if !r.is_zero() {
                return Check::fail(axiom, witness(space, &[i, j], &[r]));
            }
        }
    }
    Check::pass(axiom)
}

pub(crate) fn form_nondegenerate(axiom: &str, g: &RatMatrix) -> Check {
    let rank = g.rank();
    Check::from_bool(axiom, rank == g.rows(), || {
        format!("rank {rank} < {}", g.rows())
    })
}

/// The four quadratic sub-checks: ε-symmetry, invariance, nondegeneracy and
/// B-symmetry of α.
pub fn check_quadratic(a: &ColorHomAlgebra) -> Result<Report, AlgebraError> {
    let g = a.form_or_err()?;
    let mut report = Report::new();
    report.push(form_eps_symmetry("form-eps-symmetric", a.space(), g));
    report.push(form_invariance("form-invariant", a, g));
    report.push(form_nondegenerate("form-nondegenerate", g));
    report.push(form_symmetric_map("alpha-form-symmetric", a.space(), g, a.alpha()));
    Ok(report)
}

/// `B(βx,[y,z]) = B([x,y],βz)` on all triples.
pub fn check_beta_invariance(
    a: &ColorHomAlgebra,
    beta: &GradedLinearMap,
) -> Result<Check, AlgebraError> {
    const AXIOM: &str = "form-beta-invariant";
    let g = a.form_or_err()?;
    ensure_even_endo(a.space(), beta)?;
    let ops = Ops::of(a);
    let n = ops.n;
    // gb[i][m] = B(β eᵢ, e_m),  bg[m][k] = B(e_m, β e_k)
    let gb = beta.matrix.transpose().mul(g);
    let bg = g.mul(&beta.matrix);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut lhs = Q::zero();
                for (m, c) in ops.br(j, k) {
                    lhs += c * gb.get(i, *m);
                }
                let mut rhs = Q::zero();
                for (m, c) in ops.br(i, j) {
                    rhs += c * bg.get(*m, k);
                }
                if lhs != rhs {
                    return Ok(Check::fail(
                        AXIOM,
                        witness(a.space(), &[i, j, k], &[lhs - rhs]),
                    ));
                }
            }
        }
    }
    Ok(Check::pass(AXIOM))
}

pub(crate) fn ensure_even_endo(space: &GradedSpace, f: &GradedLinearMap) -> Result<(), AlgebraError> {
    if &f.source != space || &f.target != space {
        return Err(AlgebraError::SpaceMismatch(
            "map is not an endomorphism of the algebra's space".into(),
        ));
    }
    if !f.is_even() {
        return Err(AlgebraError::SpaceMismatch("map is not even".into()));
    }
    Ok(())
}

/// Weak morphism: `f[x,y] = [fx,fy]'`; strong additionally `f∘α = α'∘f`.
pub fn check_morphism(
    f: &GradedLinearMap,
    a: &ColorHomAlgebra,
    b: &ColorHomAlgebra,
    weak: bool,
) -> Result<Report, AlgebraError> {
    if &f.source != a.space() {
        return Err(AlgebraError::SpaceMismatch("source space".into()));
    }
    if &f.target != b.space() {
        return Err(AlgebraError::SpaceMismatch("target space".into()));
    }
    if !f.is_even() {
        return Err(AlgebraError::SpaceMismatch("map is not even".into()));
    }
    let ops_b = Ops::of(b);
    let cols: Vec<Sparse> = (0..a.dim()).map(|j| sparse(&f.matrix.column(j))).collect();
    let mut report = Report::new();
    let mut bracket_check = Check::pass("morphism-bracket");
    'outer: for i in 0..a.dim() {
        for j in 0..a.dim() {
            let mut r = f.apply(&a.bracket().get_vec(i, j));
            ops_b.add_product(&mut r, &-Q::one(), &cols[i], &cols[j]);
            if nonzero(&r) {
                bracket_check = Check::fail("morphism-bracket", witness(a.space(), &[i, j], &r));
                break 'outer;
            }
        }
    }
    report.push(bracket_check);
    if !weak {
        let lhs = f.matrix.mul(a.alpha());
        let rhs = b.alpha().mul(&f.matrix);
        let mut c = Check::pass("morphism-twist");
        'twist: for j in 0..a.dim() {
            for i in 0..b.dim() {
                if lhs.get(i, j) != rhs.get(i, j) {
                    let r = lhs.column(j)
                        .iter()
                        .zip(rhs.column(j))
                        .map(|(x, y)| x - y)
                        .collect::<Vec<_>>();
                    c = Check::fail("morphism-twist", witness(a.space(), &[j], &r));
                    break 'twist;
                }
            }
        }
        report.push(c);
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub quadratic: bool,
    pub multiplicative: bool,
    pub commutative: bool,
}

/// Runs the axioms that go with the declared kind, plus optional extras.
pub fn verify(a: &ColorHomAlgebra, opts: VerifyOptions) -> Result<Report, AlgebraError> {
    let mut report = Report::single(check_graded(a.space(), a.bracket()));
    match a.kind() {
        Kind::Lie => {
            report.push(check_skew(a));
            report.push(check_hom_jacobi(a));
        }
        Kind::Associative => report.extend(check_hom_associative(a, opts.commutative)),
        Kind::Leibniz => {
            report.push(check_hom_leibniz(a));
            report.push(check_hom_leibniz_left(a));
        }
    }
    if opts.multiplicative {
        report.push(check_multiplicative(a));
    }
    if opts.quadratic {
        report.extend(check_quadratic(a)?);
    }
    Ok(report)
}
