//! Representations `ρ: 𝔤 → End(M)` twisted by an even map `β` of `M`,
//! their duals, adjoint and coadjoint instances, and tensor products.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{homogeneity_violation, AlgebraError, ColorHomAlgebra, GradedSpace};
use crate::checks::{check_multiplicative, Check, Report, Witness};
use crate::linalg::RatMatrix;
use crate::rational::{format_rational, Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepresentationError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("expected {expected} action matrices, got {got}")]
    ActionCount { expected: usize, got: usize },
    #[error("action of basis vector {0} has the wrong shape")]
    ActionShape(usize),
    #[error("action of basis vector {index} is not homogeneous: entry ({row},{col})")]
    NotHomogeneous { index: usize, row: usize, col: usize },
    #[error("module twist is not an even endomorphism")]
    BadTwist,
    #[error("module grading differs from the algebra's")]
    GradingMismatch,
    #[error("representations are over different algebras")]
    AlgebraMismatch,
    #[error("not a representation:\n{0}")]
    NotRepresentation(Report),
    #[error("algebra is not multiplicative:\n{0}")]
    NotMultiplicative(Report),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: ColorHomAlgebra,
    module: GradedSpace,
    beta: RatMatrix,
    rho: Vec<RatMatrix>,
}

impl Representation {
    pub fn new(
        algebra: ColorHomAlgebra,
        module: GradedSpace,
        beta: RatMatrix,
        rho: Vec<RatMatrix>,
    ) -> Result<Self, RepresentationError> {
        if !module.same_grading(algebra.space()) {
            return Err(RepresentationError::GradingMismatch);
        }
        let m = module.dim();
        let zero = module.bc().group().zero();
        if beta.rows() != m
            || beta.cols() != m
            || homogeneity_violation(&module, &module, &zero, &beta).is_some()
        {
            return Err(RepresentationError::BadTwist);
        }
        if rho.len() != algebra.dim() {
            return Err(RepresentationError::ActionCount {
                expected: algebra.dim(),
                got: rho.len(),
            });
        }
        for (i, r) in rho.iter().enumerate() {
            if r.rows() != m || r.cols() != m {
                return Err(RepresentationError::ActionShape(i));
            }
            if let Some((row, col)) =
                homogeneity_violation(&module, &module, algebra.space().degree(i), r)
            {
                return Err(RepresentationError::NotHomogeneous { index: i, row, col });
            }
        }
        Ok(Representation {
            algebra,
            module,
            beta,
            rho,
        })
    }

    /// `ρ = 0` on `M` with twist `β`.
    pub fn trivial(
        algebra: ColorHomAlgebra,
        module: GradedSpace,
        beta: RatMatrix,
    ) -> Result<Self, RepresentationError> {
        let m = module.dim();
        let rho = vec![RatMatrix::zeros(m, m); algebra.dim()];
        Self::new(algebra, module, beta, rho)
    }

    /// The trivial representation on the ground field placed in degree zero.
    pub fn scalar(algebra: &ColorHomAlgebra) -> Self {
        let k = GradedSpace::even(algebra.bc(), &["1"]);
        Self::trivial(algebra.clone(), k, RatMatrix::identity(1)).expect("valid trivial module")
    }

    pub fn algebra(&self) -> &ColorHomAlgebra {
        &self.algebra
    }

    pub fn module(&self) -> &GradedSpace {
        &self.module
    }

    pub fn beta(&self) -> &RatMatrix {
        &self.beta
    }

    pub fn rho(&self) -> &[RatMatrix] {
        &self.rho
    }

    pub fn rho_basis(&self, i: usize) -> &RatMatrix {
        &self.rho[i]
    }

    /// `ρ(x)` for an arbitrary coordinate vector.
    pub fn rho_vec(&self, x: &[Q]) -> RatMatrix {
        let m = self.module.dim();
        let mut out = RatMatrix::zeros(m, m);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.rho[i].scale(c));
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn with_algebra(self, algebra: ColorHomAlgebra) -> Result<Self, RepresentationError> {
        Self::new(algebra, self.module, self.beta, self.rho)
    }
}

fn matrix_witness(r: &Representation, idx: &[usize], residual: &RatMatrix) -> Witness {
    let mut note = None;
    'find: for i in 0..residual.rows() {
        for j in 0..residual.cols() {
            let v = residual.get(i, j);
            if !v.is_zero() {
                note = Some(format!(
                    "entry ({}, {}) = {}",
                    r.module.name(i),
                    r.module.name(j),
                    format_rational(v)
                ));
                break 'find;
            }
        }
    }
    Witness {
        indices: idx.to_vec(),
        basis: idx
            .iter()
            .map(|&i| r.algebra.space().name(i).to_string())
            .collect(),
        residual: vec![],
        note,
    }
}

/// `ρ([x,y])∘β = ρ(αx)∘ρ(y) − ε(x,y)ρ(αy)∘ρ(x)`, and with `multiplicative`
/// also `β∘ρ(x) = ρ(αx)∘β`.
pub fn check_representation(r: &Representation, multiplicative: bool) -> Report {
    let a = &r.algebra;
    let n = a.dim();
    let eps = a.space().eps_table();
    let rho_alpha: Vec<RatMatrix> = (0..n).map(|i| r.rho_vec(&a.alpha().column(i))).collect();
    let mut report = Report::new();
    let mut c = Check::pass("rep-bracket");
    'outer: for i in 0..n {
        for j in 0..n {
            let lhs = r.rho_vec(&a.bracket().get_vec(i, j)).mul(&r.beta);
            let rhs = rho_alpha[i]
                .mul(&r.rho[j])
                .sub(&rho_alpha[j].mul(&r.rho[i]).scale(eps.get(i, j)));
            let res = lhs.sub(&rhs);
            if !res.is_zero() {
                c = Check::fail("rep-bracket", matrix_witness(r, &[i, j], &res));
                break 'outer;
            }
        }
    }
    report.push(c);
    if multiplicative {
        let mut c = Check::pass("rep-multiplicative");
        for i in 0..n {
            let res = r.beta.mul(&r.rho[i]).sub(&rho_alpha[i].mul(&r.beta));
            if !res.is_zero() {
                c = Check::fail("rep-multiplicative", matrix_witness(r, &[i], &res));
                break;
            }
        }
        report.push(c);
    }
    report
}

/// Which sign pattern of the Hom-module identity to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomModuleForm {
    /// `ε(m,x)[αx,[y,m]] + ε(x,y)[αy,[m,x]] + ε(y,m)[βm,[x,y]] = 0`.
    Cyclic,
    /// The same sum with `ε(m,x)` as the coefficient of the second term.
    Literal,
}

/// Hom-module identity for the action `[x,m] = ρ(x)m`, `[m,x] = −ε(m,x)[x,m]`.
pub fn check_hom_module(r: &Representation, form: HomModuleForm) -> Check {
    let axiom = match form {
        HomModuleForm::Cyclic => "hom-module",
        HomModuleForm::Literal => "hom-module-literal",
    };
    let a = &r.algebra;
    let n = a.dim();
    let md = r.module.dim();
    let alg_deg = a.space().degrees();
    let mod_deg = r.module.degrees();
    let eps = |g: &crate::grading::GroupElement, h: &crate::grading::GroupElement| {
        a.space().eps(g, h)
    };
    let rho_alpha: Vec<RatMatrix> = (0..n).map(|i| r.rho_vec(&a.alpha().column(i))).collect();
    for i in 0..n {
        for j in 0..n {
            let rho_br = r.rho_vec(&a.bracket().get_vec(i, j));
            for m in 0..md {
                let (x, y, mm) = (&alg_deg[i], &alg_deg[j], &mod_deg[m]);
                // [αx,[y,m]] = ρ(αx)ρ(y)m
                let t1 = rho_alpha[i].mul_vec(&r.rho[j].column(m));
                // [αy,[m,x]] = −ε(m,x)ρ(αy)ρ(x)m
                let t2: Vec<Q> = rho_alpha[j]
                    .mul_vec(&r.rho[i].column(m))
                    .iter()
                    .map(|v| -(eps(mm, x) * v))
                    .collect();
                // [βm,[x,y]] = −ε(m, x+y)ρ([x,y])βm
                let xy = a.space().add_degrees(x, y);
                let t3: Vec<Q> = rho_br
                    .mul_vec(&r.beta.column(m))
                    .iter()
                    .map(|v| -(eps(mm, &xy) * v))
                    .collect();
                let c2 = match form {
                    HomModuleForm::Cyclic => eps(x, y),
                    HomModuleForm::Literal => eps(mm, x),
                };
                let (c1, c3) = (eps(mm, x), eps(y, mm));
                let res: Vec<Q> = (0..md)
                    .map(|k| &c1 * &t1[k] + &c2 * &t2[k] + &c3 * &t3[k])
                    .collect();
                if res.iter().any(|v| !v.is_zero()) {
                    return Check::fail(
                        axiom,
                        Witness {
                            indices: vec![i, j, m],
                            basis: vec![
                                a.space().name(i).to_string(),
                                a.space().name(j).to_string(),
                                r.module.name(m).to_string(),
                            ],
                            residual: res.iter().map(format_rational).collect(),
                            note: None,
                        },
                    );
                }
            }
        }
    }
    Check::pass(axiom)
}

/// `ad(x) = [x,·]` on `(𝔤, α)`.
pub fn adjoint_rep(a: &ColorHomAlgebra) -> Representation {
    let rho = (0..a.dim()).map(|i| a.ad(i)).collect();
    Representation::new(a.clone(), a.space().clone(), a.alpha().clone(), rho)
        .expect("adjoint action is homogeneous")
}

/// Matrix of `ρ̃(eₐ)` on the dual basis: `ρ̃(eₐ)(fᵢ) = −ε(eₐ,fᵢ) fᵢ∘ρ(eₐ)`.
fn dual_action(r: &Representation, dual: &GradedSpace, a: usize) -> RatMatrix {
    let m = r.dim();
    let deg_a = r.algebra.space().degree(a);
    let rho = &r.rho[a];
    RatMatrix::from_fn(m, m, |j, i| {
        let v = rho.get(i, j);
        if v.is_zero() {
            Q::zero()
        } else {
            -(r.algebra.space().eps(deg_a, dual.degree(i)) * v)
        }
    })
}

/// `ρ(x)∘ρ(αy) − ε(x,y)ρ(y)∘ρ(αx) = β∘ρ([x,y])` on basis pairs.
pub fn check_dual_condition(r: &Representation) -> Check {
    let a = &r.algebra;
    let n = a.dim();
    let eps = a.space().eps_table();
    let rho_alpha: Vec<RatMatrix> = (0..n).map(|i| r.rho_vec(&a.alpha().column(i))).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = r.rho[i]
                .mul(&rho_alpha[j])
                .sub(&r.rho[j].mul(&rho_alpha[i]).scale(eps.get(i, j)));
            let rhs = r.beta.mul(&r.rho_vec(&a.bracket().get_vec(i, j)));
            let res = lhs.sub(&rhs);
            if !res.is_zero() {
                return Check::fail("dual-condition", matrix_witness(r, &[i, j], &res));
            }
        }
    }
    Check::pass("dual-condition")
}

/// Candidate dual representation on `M*` with `β̃ = βᵀ`, together with the
/// side condition that decides whether it is a representation and a direct
/// check of the representation identity on the candidate.
pub fn dual_rep(r: &Representation) -> (Representation, Report) {
    let dual = r.module.dual();
    let rho = (0..r.algebra.dim())
        .map(|a| dual_action(r, &dual, a))
        .collect();
    let d = Representation::new(r.algebra.clone(), dual, r.beta.transpose(), rho)
        .expect("dual action is homogeneous");
    let mut report = Report::single(check_dual_condition(r));
    report.extend(check_representation(&d, false));
    (d, report)
}

/// Coadjoint candidate `π` on `(𝔤*, α̃)`.
pub fn coadjoint_rep(a: &ColorHomAlgebra) -> (Representation, Report) {
    let (r, mut report) = dual_rep(&adjoint_rep(a));
    for c in &mut report.checks {
        if c.axiom == "dual-condition" {
            c.axiom = "coadjoint-condition".into();
        }
    }
    (r, report)
}

/// `(ρ₁⊗ρ₂)(x)(m₁⊗m₂) = ρ₁(x)m₁⊗β₂m₂ + ε(x,m₁)β₁m₁⊗ρ₂(x)m₂` on
/// `(M₁⊗M₂, β₁⊗β₂)`.
pub fn tensor_rep(
    r1: &Representation,
    r2: &Representation,
) -> Result<Representation, RepresentationError> {
    if r1.algebra != r2.algebra {
        return Err(RepresentationError::AlgebraMismatch);
    }
    let a = &r1.algebra;
    let mult = Report::single(check_multiplicative(a));
    if !mult.passed() {
        return Err(RepresentationError::NotMultiplicative(mult));
    }
    for r in [r1, r2] {
        let rep = check_representation(r, true);
        if !rep.passed() {
            return Err(RepresentationError::NotRepresentation(rep));
        }
    }
    Ok(tensor_rep_unchecked(r1, r2))
}

pub(crate) fn tensor_rep_unchecked(r1: &Representation, r2: &Representation) -> Representation {
    let a = &r1.algebra;
    let space = r1.module.tensor(&r2.module).expect("same grading");
    let (d1, d2) = (r1.dim(), r2.dim());
    let rho = (0..a.dim())
        .map(|x| {
            let first = r1.rho[x].kron(&r2.beta);
            let mut second = r1.beta.kron(&r2.rho[x]);
            for col in 0..d1 * d2 {
                let s = a.space().eps(a.space().degree(x), r1.module.degree(col / d2));
                if s.is_one() {
                    continue;
                }
                for row in 0..d1 * d2 {
                    let v = second.get(row, col).clone();
                    if !v.is_zero() {
                        second.set(row, col, &s * v);
                    }
                }
            }
            first.add(&second)
        })
        .collect();
    Representation::new(a.clone(), space, r1.beta.kron(&r2.beta), rho)
        .expect("tensor action is homogeneous")
}

/// `f∘β = β'∘f` and `f∘ρ(x) = ρ'(x)∘f` with `f` invertible.
pub fn check_equivalence(r1: &Representation, r2: &Representation, f: &RatMatrix) -> Report {
    let mut report = Report::new();
    report.push(Check::from_bool(
        "equivalence-invertible",
        f.is_square() && f.rows() == r1.dim() && f.inverse().is_some(),
        || "map is not an isomorphism".into(),
    ));
    report.push(Check::from_bool(
        "equivalence-twist",
        f.mul(&r1.beta) == r2.beta.mul(f),
        || "f∘β ≠ β'∘f".into(),
    ));
    let bad = (0..r1.algebra.dim()).find(|&i| f.mul(&r1.rho[i]) != r2.rho[i].mul(f));
    report.push(Check::from_bool("equivalence-action", bad.is_none(), || {
        format!("fails for basis vector {}", bad.unwrap_or(0))
    }));
    report
}
