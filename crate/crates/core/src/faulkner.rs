//! The map `𝒟: M⊗M* → 𝔤` defined through an invariant form, the Leibniz
//! bracket it induces on `M⊗M*`, and the pulled-back form.

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{AlgebraError, ColorHomAlgebra, GradedLinearMap, GradedSpace, Kind, StructureConstants};
use crate::checks::{
    check_multiplicative, check_quadratic, form_eps_symmetry, form_invariance, form_nondegenerate,
    form_symmetric_map, Check, Report, Witness,
};
use crate::linalg::RatMatrix;
use crate::rational::{format_rational, Q};
use crate::representations::{
    check_representation, dual_rep, tensor_rep_unchecked, Representation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FaulknerError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("representation is over a different algebra")]
    AlgebraMismatch,
    #[error("{0} is not an involution")]
    NotInvolutive(&'static str),
    #[error("algebra is not quadratic:\n{0}")]
    NotQuadratic(Report),
    #[error("algebra is not multiplicative:\n{0}")]
    NotMultiplicative(Report),
    #[error("not a representation:\n{0}")]
    NotRepresentation(Report),
    #[error("representation is not faithful")]
    NotFaithful,
    #[error("𝒟 is not bijective (rank {rank}, dimensions {source_dim} → {target_dim})")]
    DNotBijective {
        rank: usize,
        source_dim: usize,
        target_dim: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaulknerData {
    pub algebra: ColorHomAlgebra,
    pub rep: Representation,
    /// `(M*, ρ̃, β̃)`.
    pub dual: Representation,
    /// `𝒟` on the basis `mₐ⊗f_b`, index `a·dim M + b`.
    pub dmap: GradedLinearMap,
    pub faithful: bool,
    pub surjective: bool,
    /// The defining pairing identity, re-checked on all basis triples.
    pub report: Report,
}

impl FaulknerData {
    pub fn space(&self) -> &GradedSpace {
        &self.dmap.source
    }
}

fn residual_witness(names: Vec<String>, idx: &[usize], r: &[Q]) -> Witness {
    Witness {
        indices: idx.to_vec(),
        basis: names,
        residual: r.iter().map(format_rational).collect(),
        note: None,
    }
}

/// Solves `B(x, 𝒟(m⊗f)) = ε(x+m,f)·f(ρ(αx)m)` for every basis pair.
pub fn faulkner_map(a: &ColorHomAlgebra, r: &Representation) -> Result<FaulknerData, FaulknerError> {
    if r.algebra() != a {
        return Err(FaulknerError::AlgebraMismatch);
    }
    let n = a.dim();
    let m = r.dim();
    if a.alpha().mul(a.alpha()) != RatMatrix::identity(n) {
        return Err(FaulknerError::NotInvolutive("α"));
    }
    if r.beta().mul(r.beta()) != RatMatrix::identity(m) {
        return Err(FaulknerError::NotInvolutive("β"));
    }
    let quad = check_quadratic(a)?;
    if !quad.passed() {
        return Err(FaulknerError::NotQuadratic(quad));
    }
    let mult = check_multiplicative(a);
    if !mult.passed {
        return Err(FaulknerError::NotMultiplicative(Report::single(mult)));
    }
    let rep_report = check_representation(r, true);
    if !rep_report.passed() {
        return Err(FaulknerError::NotRepresentation(rep_report));
    }
    let (dual, dual_report) = dual_rep(r);
    if !dual_report.passed() {
        return Err(FaulknerError::NotRepresentation(dual_report));
    }
    let g = a.form_or_err()?;
    let g_inv = g.inverse().expect("nondegenerate form");
    let space = a.space();
    let module = r.module();
    let dual_space = dual.module();
    let source = module.tensor(dual_space)?;
    let rho_alpha: Vec<RatMatrix> = (0..n).map(|i| r.rho_vec(&a.alpha().column(i))).collect();

    // rhs[i] = ε(eᵢ+mₐ, f_b)·(ρ(αeᵢ)mₐ)_b
    let pairing = |i: usize, ai: usize, b: usize| -> Q {
        let v = rho_alpha[i].get(b, ai);
        if v.is_zero() {
            return Q::zero();
        }
        let deg = space.add_degrees(space.degree(i), module.degree(ai));
        space.eps(&deg, dual_space.degree(b)) * v
    };
    let mut columns = Vec::with_capacity(m * m);
    for ai in 0..m {
        for b in 0..m {
            let rhs: Vec<Q> = (0..n).map(|i| pairing(i, ai, b)).collect();
            columns.push(g_inv.mul_vec(&rhs));
        }
    }
    let matrix = RatMatrix::from_columns(n, &columns);
    let zero = space.bc().group().zero();
    let dmap = GradedLinearMap::new(source.clone(), space.clone(), zero, matrix)?;

    let mut check = Check::pass("faulkner-pairing");
    'outer: for i in 0..n {
        for ai in 0..m {
            for b in 0..m {
                let lhs: Q = (0..n)
                    .map(|j| g.get(i, j) * dmap.matrix.get(j, ai * m + b))
                    .sum();
                let r = lhs - pairing(i, ai, b);
                if !r.is_zero() {
                    check = Check::fail(
                        "faulkner-pairing",
                        residual_witness(
                            vec![
                                space.name(i).to_string(),
                                module.name(ai).to_string(),
                                dual_space.name(b).to_string(),
                            ],
                            &[i, ai, b],
                            &[r],
                        ),
                    );
                    break 'outer;
                }
            }
        }
    }

    let stacked = RatMatrix::from_columns(
        m * m,
        &r.rho().iter().map(|x| x.to_rows().concat()).collect::<Vec<_>>(),
    );
    let faithful = stacked.rank() == n;
    let surjective = dmap.matrix.rank() == n;
    Ok(FaulknerData {
        algebra: a.clone(),
        rep: r.clone(),
        dual,
        dmap,
        faithful,
        surjective,
        report: Report::single(check),
    })
}

/// `[x, 𝒟(m⊗f)] = 𝒟(ρ(x)m⊗β̃f + ε(x,m)βm⊗ρ̃(x)f)` on all basis
/// combinations, and `[𝒟X, 𝒟Y] = 𝒟[X,Y]` for the induced bracket.
pub fn check_dmap_morphism(fd: &FaulknerData) -> Report {
    let a = &fd.algebra;
    let d = &fd.dmap.matrix;
    let tensor = tensor_rep_unchecked(&fd.rep, &fd.dual);
    let names = |i: usize| fd.space().name(i).to_string();
    let mut report = Report::new();
    let mut module_check = Check::pass("dmap-module-morphism");
    'outer: for i in 0..a.dim() {
        let lhs = a.ad(i).mul(d);
        let rhs = d.mul(tensor.rho_basis(i));
        for c in 0..d.cols() {
            let r: Vec<Q> = lhs.column(c).iter().zip(rhs.column(c)).map(|(x, y)| x - y).collect();
            if r.iter().any(|x| !x.is_zero()) {
                module_check = Check::fail(
                    "dmap-module-morphism",
                    residual_witness(vec![a.space().name(i).to_string(), names(c)], &[i, c], &r),
                );
                break 'outer;
            }
        }
    }
    report.push(module_check);

    let bracket = leibniz_bracket(fd);
    let cols: Vec<Vec<Q>> = d.columns();
    let mut bracket_check = Check::pass("dmap-bracket");
    'br: for x in 0..d.cols() {
        for y in 0..d.cols() {
            let lhs = a.mul(&cols[x], &cols[y]);
            let rhs = d.mul_vec(&bracket.get_vec(x, y));
            let r: Vec<Q> = lhs.iter().zip(&rhs).map(|(p, q)| p - q).collect();
            if r.iter().any(|v| !v.is_zero()) {
                bracket_check = Check::fail(
                    "dmap-bracket",
                    residual_witness(vec![names(x), names(y)], &[x, y], &r),
                );
                break 'br;
            }
        }
    }
    report.push(bracket_check);
    report
}

fn leibniz_bracket(fd: &FaulknerData) -> StructureConstants {
    let m = fd.rep.dim();
    let module = fd.rep.module();
    let dual_space = fd.dual.module();
    let d = &fd.dmap.matrix;
    let beta = fd.rep.beta();
    let beta_t = fd.dual.beta();
    let mut bracket = StructureConstants::zero(m * m);
    for a in 0..m {
        for b in 0..m {
            let x = a * m + b;
            let v = d.column(x);
            let rho_v = fd.rep.rho_vec(&v);
            let rho_t_v = fd.dual.rho_vec(&v);
            let deg = module.add_degrees(module.degree(a), dual_space.degree(b));
            for c in 0..m {
                let e = module.eps(&deg, module.degree(c));
                for f in 0..m {
                    let mut out = vec![Q::zero(); m * m];
                    for k in 0..m {
                        let rk = rho_v.get(k, c);
                        let bk = beta.get(k, c);
                        for l in 0..m {
                            if !rk.is_zero() {
                                out[k * m + l] += rk * beta_t.get(l, f);
                            }
                            if !bk.is_zero() {
                                out[k * m + l] += &e * bk * rho_t_v.get(l, f);
                            }
                        }
                    }
                    bracket.set_vec(x, c * m + f, &out);
                }
            }
        }
    }
    bracket
}

/// `[m⊗f, m'⊗f'] = ρ(𝒟(m⊗f))m'⊗β̃f' + ε(m+f,m')βm'⊗ρ̃(𝒟(m⊗f))f'` on
/// `M⊗M*` with twist `β⊗β̃`.
pub fn faulkner_leibniz(fd: &FaulknerData) -> Result<ColorHomAlgebra, FaulknerError> {
    if !fd.faithful {
        return Err(FaulknerError::NotFaithful);
    }
    let alpha = fd.rep.beta().kron(fd.dual.beta());
    Ok(ColorHomAlgebra::new(
        fd.space().clone(),
        leibniz_bracket(fd),
        alpha,
        None,
        Kind::Leibniz,
    )?)
}

/// The form `B(X,Y) = B_𝔤(𝒟X,𝒟Y)` on the Leibniz algebra, with its checks.
pub fn faulkner_quadratic(
    fd: &FaulknerData,
    leibniz: &ColorHomAlgebra,
) -> Result<(RatMatrix, Report), FaulknerError> {
    let d = &fd.dmap.matrix;
    let rank = d.rank();
    if rank != d.rows() || rank != d.cols() {
        return Err(FaulknerError::DNotBijective {
            rank,
            source_dim: d.cols(),
            target_dim: d.rows(),
        });
    }
    let g = fd.algebra.form_or_err()?;
    let form = d.transpose().mul(g).mul(d);
    let mut report = Report::new();
    report.push(form_eps_symmetry("form-eps-symmetric", leibniz.space(), &form));
    report.push(form_invariance("form-invariant", leibniz, &form));
    report.push(form_nondegenerate("form-nondegenerate", &form));
    report.push(form_symmetric_map(
        "alpha-form-symmetric",
        leibniz.space(),
        &form,
        leibniz.alpha(),
    ));
    Ok((form, report))
}

/// First basis pair `i ≤ j` with `[eᵢ,eⱼ] + ε(i,j)[eⱼ,eᵢ] ≠ 0`, and that
/// residual.
pub fn skew_defect(a: &ColorHomAlgebra) -> Option<(usize, usize, Vec<Q>)> {
    let n = a.dim();
    for i in 0..n {
        for j in i..n {
            let mut r = a.bracket().get_vec(i, j);
            let e = a.space().eps(a.space().degree(i), a.space().degree(j));
            for (k, c) in a.bracket().get(j, i) {
                r[*k] += &e * c;
            }
            if r.iter().any(|x| !x.is_zero()) {
                return Some((i, j, r));
            }
        }
    }
    None
}
