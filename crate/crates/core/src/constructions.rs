//! Algebra-producing constructions: twists by weak morphisms and symmetric
//! automorphisms, centroid brackets, commutator algebras, tensor products
//! and semidirect products.

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{
    AlgebraError, BasisVector, ColorHomAlgebra, GradedLinearMap, GradedSpace, Kind,
    StructureConstants,
};
use crate::checks::{
    check_hom_associative, check_morphism, check_multiplicative, ensure_even_endo,
    form_symmetric_map, verify, Check, Ops, Report, VerifyOptions, Witness,
};
use crate::grading::GroupElement;
use crate::linalg::RatMatrix;
use crate::rational::{format_rational, Q};
use crate::representations::{check_representation, Representation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("map is not a weak morphism:\n{0}")]
    NotWeakMorphism(Report),
    #[error("map is not a symmetric automorphism:\n{0}")]
    NotSymmetricAutomorphism(Report),
    #[error("algebra is not quadratic:\n{0}")]
    NotQuadratic(Report),
    #[error("algebra is not multiplicative:\n{0}")]
    NotMultiplicative(Report),
    #[error("map is not in the centroid:\n{0}")]
    NotCentroid(Report),
    #[error("map is not invertible")]
    NotInvertible,
    #[error("map is not symmetric with respect to the form:\n{0}")]
    NotBSymmetric(Report),
    #[error("not a Hom-associative algebra:\n{0}")]
    NotHomAssociative(Report),
    #[error("algebras are graded by different groups or bicharacters")]
    GroupMismatch,
    #[error("{0}")]
    KindMismatch(String),
    #[error("not a representation:\n{0}")]
    NotRepresentation(Report),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("constructed algebra fails verification:\n{0}")]
    Verification(Report),
}

/// Runs `verify` on a freshly built algebra when eager verification is on.
pub(crate) fn finish(
    mut a: ColorHomAlgebra,
    opts: VerifyOptions,
) -> Result<ColorHomAlgebra, ConstructionError> {
    if crate::eager_verification() {
        let report = verify(&a, opts)?;
        if !report.passed() {
            return Err(ConstructionError::Verification(report));
        }
        a.record(&report);
    }
    Ok(a)
}

fn lie_opts(quadratic: bool) -> VerifyOptions {
    VerifyOptions {
        quadratic,
        ..VerifyOptions::default()
    }
}

/// `(𝔤, β∘[·,·], β∘α)` for a weak self-morphism `β`; the form is kept.
pub fn twist_by_weak_morphism(
    a: &ColorHomAlgebra,
    beta: &GradedLinearMap,
) -> Result<ColorHomAlgebra, ConstructionError> {
    ensure_even_endo(a.space(), beta)?;
    let report = check_morphism(beta, a, a, true)?;
    if !report.passed() {
        return Err(ConstructionError::NotWeakMorphism(report));
    }
    let out = a
        .clone()
        .with_kind(Kind::Lie)
        .with_bracket(a.bracket().compose_left(&beta.matrix))?
        .with_alpha(beta.matrix.mul(a.alpha()))?;
    finish(out, lie_opts(false))
}

/// Sub-conditions for `β` to be a symmetric automorphism commuting with `α`.
pub fn symmetric_automorphism_report(
    a: &ColorHomAlgebra,
    beta: &GradedLinearMap,
) -> Result<Report, ConstructionError> {
    ensure_even_endo(a.space(), beta)?;
    let g = a.form_or_err()?;
    let mut report = Report::new();
    let mut weak = check_morphism(beta, a, a, true)?.checks.remove(0);
    weak.axiom = "automorphism-bracket".into();
    report.push(weak);
    report.push(Check::from_bool(
        "automorphism-invertible",
        beta.matrix.inverse().is_some(),
        || "map is singular".into(),
    ));
    report.push(form_symmetric_map(
        "automorphism-form-symmetric",
        a.space(),
        g,
        &beta.matrix,
    ));
    report.push(Check::from_bool(
        "automorphism-commutes-alpha",
        beta.matrix.mul(a.alpha()) == a.alpha().mul(&beta.matrix),
        || "β∘α ≠ α∘β".into(),
    ));
    Ok(report)
}

/// `(𝔤, β∘[·,·], β∘α, B_β)` with `B_β(x,y) = B(βx,y)`.
pub fn twist_quadratic(
    a: &ColorHomAlgebra,
    beta: &GradedLinearMap,
) -> Result<ColorHomAlgebra, ConstructionError> {
    let q = crate::checks::check_quadratic(a)?;
    if !q.passed() {
        return Err(ConstructionError::NotQuadratic(q));
    }
    let report = symmetric_automorphism_report(a, beta)?;
    if !report.passed() {
        return Err(ConstructionError::NotSymmetricAutomorphism(report));
    }
    let g = a.form_or_err()?;
    let out = ColorHomAlgebra::new(
        a.space().clone(),
        a.bracket().compose_left(&beta.matrix),
        beta.matrix.mul(a.alpha()),
        Some(beta.matrix.transpose().mul(g)),
        Kind::Lie,
    )?;
    finish(out, lie_opts(true))
}

/// `(𝔤, αⁿ∘[·,·], α^{n+1})` for multiplicative `a`. When `a` carries a form
/// and `α` is invertible the form `B(αⁿ·,·)` is attached and checked.
pub fn power_twist(a: &ColorHomAlgebra, n: u32) -> Result<ColorHomAlgebra, ConstructionError> {
    let m = Report::single(check_multiplicative(a));
    if !m.passed() {
        return Err(ConstructionError::NotMultiplicative(m));
    }
    let an = a.alpha().pow(n);
    let quadratic = a.form().is_some() && a.alpha().inverse().is_some();
    let form = if quadratic {
        Some(an.transpose().mul(a.form_or_err()?))
    } else {
        None
    };
    let out = ColorHomAlgebra::new(
        a.space().clone(),
        a.bracket().compose_left(&an),
        a.alpha().pow(n + 1),
        form,
        Kind::Lie,
    )?;
    finish(
        out,
        VerifyOptions {
            quadratic,
            multiplicative: true,
            commutative: false,
        },
    )
}

/// An even map certified (or not) to satisfy the centroid identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentroidElement {
    pub map: GradedLinearMap,
    pub certified: bool,
}

/// Residual of `θ[x,y] = [θx,y] = ε(θ,x)[x,θy]` on all basis pairs.
fn centroid_residual(a: &ColorHomAlgebra, ops: &Ops, theta: &RatMatrix, deg: &GroupElement) -> Vec<Q> {
    let n = a.dim();
    let cols: Vec<_> = (0..n).map(|j| crate::checks::sparse(&theta.column(j))).collect();
    let mut out = Vec::with_capacity(2 * n * n * n);
    for i in 0..n {
        let e = a.space().eps(deg, a.space().degree(i));
        for j in 0..n {
            let ei = vec![(i, Q::from_integer(1.into()))];
            let ej = vec![(j, Q::from_integer(1.into()))];
            let lhs = theta.mul_vec(&a.bracket().get_vec(i, j));
            let mut mid = vec![Q::zero(); n];
            ops.add_product(&mut mid, &Q::from_integer(1.into()), &cols[i], &ej);
            let mut right = vec![Q::zero(); n];
            ops.add_product(&mut right, &e, &ei, &cols[j]);
            out.extend(lhs.iter().zip(&mid).map(|(l, m)| l - m));
            out.extend(mid.iter().zip(&right).map(|(m, r)| m - r));
        }
    }
    out
}

pub fn check_centroid(a: &ColorHomAlgebra, theta: &GradedLinearMap) -> Result<Check, AlgebraError> {
    if &theta.source != a.space() || &theta.target != a.space() {
        return Err(AlgebraError::SpaceMismatch("centroid candidate".into()));
    }
    let ops = Ops::of(a);
    let n = a.dim();
    let res = centroid_residual(a, &ops, &theta.matrix, &theta.degree);
    match res.iter().position(|v| !v.is_zero()) {
        None => Ok(Check::pass("centroid")),
        Some(p) => {
            let pair = p / (2 * n);
            let (i, j) = (pair / n, pair % n);
            Ok(Check::fail(
                "centroid",
                Witness {
                    indices: vec![i, j],
                    basis: vec![a.space().name(i).into(), a.space().name(j).into()],
                    residual: vec![format_rational(&res[p])],
                    note: None,
                },
            ))
        }
    }
}

/// Entries `(r,c)` a homogeneous map of degree `deg` may occupy.
pub(crate) fn homogeneous_slots(
    source: &GradedSpace,
    target: &GradedSpace,
    deg: &GroupElement,
) -> Vec<(usize, usize)> {
    let mut slots = Vec::new();
    for r in 0..target.dim() {
        for c in 0..source.dim() {
            if target.degree(r) == &source.add_degrees(source.degree(c), deg) {
                slots.push((r, c));
            }
        }
    }
    slots
}

/// Basis of the maps supported on `slots` that make the linear `residual`
/// vanish.
pub(crate) fn solve_for_maps(
    rows: usize,
    cols: usize,
    slots: &[(usize, usize)],
    residual: impl Fn(&RatMatrix) -> Vec<Q>,
) -> Vec<RatMatrix> {
    if slots.is_empty() {
        return vec![];
    }
    let columns: Vec<Vec<Q>> = slots
        .iter()
        .map(|&(r, c)| {
            let mut e = RatMatrix::zeros(rows, cols);
            e.set(r, c, Q::from_integer(1.into()));
            residual(&e)
        })
        .collect();
    let height = columns[0].len();
    let system = if height == 0 {
        RatMatrix::zeros(0, slots.len())
    } else {
        RatMatrix::from_columns(height, &columns)
    };
    let kernel = if height == 0 {
        RatMatrix::identity(slots.len())
    } else {
        system.kernel_basis()
    };
    kernel
        .columns()
        .into_iter()
        .map(|v| {
            let mut m = RatMatrix::zeros(rows, cols);
            for (&(r, c), x) in slots.iter().zip(v) {
                m.set(r, c, x);
            }
            m
        })
        .collect()
}

/// Basis of the centroid in the given degree.
pub fn centroid_basis(a: &ColorHomAlgebra, degree: &GroupElement) -> Vec<CentroidElement> {
    let n = a.dim();
    let ops = Ops::of(a);
    let slots = homogeneous_slots(a.space(), a.space(), degree);
    solve_for_maps(n, n, &slots, |t| centroid_residual(a, &ops, t, degree))
        .into_iter()
        .map(|m| CentroidElement {
            map: GradedLinearMap::new(a.space().clone(), a.space().clone(), degree.clone(), m)
                .expect("solution supported on homogeneous slots"),
            certified: true,
        })
        .collect()
}

/// Certifies a candidate map as a centroid element.
pub fn certify_centroid(
    a: &ColorHomAlgebra,
    map: GradedLinearMap,
) -> Result<CentroidElement, ConstructionError> {
    let c = check_centroid(a, &map)?;
    if !c.passed {
        return Err(ConstructionError::NotCentroid(Report::single(c)));
    }
    Ok(CentroidElement {
        map,
        certified: true,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentroidBracket {
    /// `[x,y]`
    Original,
    /// `[θx,y]`
    First,
    /// `[θx,θy]`
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistOrder {
    /// `θ∘α`
    ThetaAfterAlpha,
    /// `α∘θ`
    AlphaAfterTheta,
}

fn centroid_bracket(a: &ColorHomAlgebra, theta: &RatMatrix, variant: CentroidBracket) -> StructureConstants {
    let n = a.dim();
    let ops = Ops::of(a);
    let cols: Vec<_> = (0..n).map(|j| crate::checks::sparse(&theta.column(j))).collect();
    let one = Q::from_integer(1.into());
    match variant {
        CentroidBracket::Original => a.bracket().clone(),
        CentroidBracket::First => StructureConstants::from_fn(n, |i, j| {
            let mut v = vec![Q::zero(); n];
            ops.add_product(&mut v, &one, &cols[i], &vec![(j, one.clone())]);
            v
        }),
        CentroidBracket::Second => StructureConstants::from_fn(n, |i, j| {
            let mut v = vec![Q::zero(); n];
            ops.add_product(&mut v, &one, &cols[i], &cols[j]);
            v
        }),
    }
}

fn require_certified_even(
    a: &ColorHomAlgebra,
    theta: &CentroidElement,
) -> Result<(), ConstructionError> {
    ensure_even_endo(a.space(), &theta.map)?;
    let c = check_centroid(a, &theta.map)?;
    if !c.passed {
        return Err(ConstructionError::NotCentroid(Report::single(c)));
    }
    Ok(())
}

/// One of the six algebras built from an even centroid element.
pub fn centroid_twist(
    a: &ColorHomAlgebra,
    theta: &CentroidElement,
    bracket: CentroidBracket,
    order: TwistOrder,
) -> Result<ColorHomAlgebra, ConstructionError> {
    require_certified_even(a, theta)?;
    let t = &theta.map.matrix;
    let alpha = match order {
        TwistOrder::ThetaAfterAlpha => t.mul(a.alpha()),
        TwistOrder::AlphaAfterTheta => a.alpha().mul(t),
    };
    let out = ColorHomAlgebra::new(
        a.space().clone(),
        centroid_bracket(a, t, bracket),
        alpha,
        None,
        Kind::Lie,
    )?;
    finish(out, lie_opts(false))
}

/// `(𝔤, [·,·]ᵢ^θ, θ, B_θ)` for a quadratic color Lie algebra (`α = id`) and
/// an invertible `B`-symmetric centroid element.
pub fn centroid_quadratic(
    a: &ColorHomAlgebra,
    theta: &CentroidElement,
    bracket: CentroidBracket,
) -> Result<ColorHomAlgebra, ConstructionError> {
    if a.alpha() != &RatMatrix::identity(a.dim()) {
        return Err(ConstructionError::Precondition(
            "the twist map of the input must be the identity".into(),
        ));
    }
    if bracket == CentroidBracket::Original {
        return Err(ConstructionError::Precondition(
            "choose the first or second centroid bracket".into(),
        ));
    }
    let q = crate::checks::check_quadratic(a)?;
    if !q.passed() {
        return Err(ConstructionError::NotQuadratic(q));
    }
    let t = &theta.map.matrix;
    ensure_even_endo(a.space(), &theta.map)?;
    if t.inverse().is_none() {
        return Err(ConstructionError::NotInvertible);
    }
    let g = a.form_or_err()?;
    let sym = form_symmetric_map("centroid-form-symmetric", a.space(), g, t);
    if !sym.passed {
        return Err(ConstructionError::NotBSymmetric(Report::single(sym)));
    }
    require_certified_even(a, theta)?;
    let out = ColorHomAlgebra::new(
        a.space().clone(),
        centroid_bracket(a, t, bracket),
        t.clone(),
        Some(t.transpose().mul(g)),
        Kind::Lie,
    )?;
    finish(out, lie_opts(true))
}

/// `[x,y] = μ(x,y) − ε(x,y)μ(y,x)` on a (quadratic) Hom-associative algebra.
pub fn commutator_algebra(a: &ColorHomAlgebra) -> Result<ColorHomAlgebra, ConstructionError> {
    let mut pre = check_hom_associative(a, false);
    if a.form().is_some() {
        pre.extend(crate::checks::check_quadratic(a)?);
    }
    if !pre.passed() {
        return Err(ConstructionError::NotHomAssociative(pre));
    }
    let n = a.dim();
    let eps = a.space().eps_table();
    let bracket = StructureConstants::from_fn(n, |i, j| {
        let mut v = a.bracket().get_vec(i, j);
        for (k, c) in a.bracket().get(j, i) {
            v[*k] -= eps.get(i, j) * c;
        }
        v
    });
    let out = ColorHomAlgebra::new(
        a.space().clone(),
        bracket,
        a.alpha().clone(),
        a.form().cloned(),
        Kind::Lie,
    )?;
    finish(out, lie_opts(a.form().is_some()))
}

/// `𝔤 ⊗ A` with `[x⊗a, y⊗b] = ε(a,y)[x,y]⊗μ(a,b)`, twist `α_𝔤⊗α_A` and, when
/// both inputs carry forms, `B(x⊗a,y⊗b) = ε(a,y)B_𝔤(x,y)B_A(a,b)`.
pub fn tensor_product_algebra(
    g: &ColorHomAlgebra,
    a: &ColorHomAlgebra,
) -> Result<ColorHomAlgebra, ConstructionError> {
    if g.bc() != a.bc() {
        return Err(ConstructionError::GroupMismatch);
    }
    if g.kind() != Kind::Lie {
        return Err(ConstructionError::KindMismatch(
            "first factor must be a Lie-type algebra".into(),
        ));
    }
    if a.kind() != Kind::Associative {
        return Err(ConstructionError::KindMismatch(
            "second factor must be an associative-type algebra".into(),
        ));
    }
    let pre = check_hom_associative(a, true);
    if !pre.passed() {
        return Err(ConstructionError::NotHomAssociative(pre));
    }
    let space = g.space().tensor(a.space())?;
    let (dg, da) = (g.dim(), a.dim());
    let eps = |s: usize, j: usize| g.space().eps(a.space().degree(s), g.space().degree(j));
    let mut bracket = StructureConstants::zero(dg * da);
    let mut acc: std::collections::BTreeMap<(usize, usize), Vec<(usize, Q)>> = Default::default();
    for ((i, j), gt) in g.bracket().entries() {
        for ((s, t), at) in a.bracket().entries() {
            let e = eps(*s, *j);
            let entry = acc.entry((i * da + s, j * da + t)).or_default();
            for (k, c) in gt {
                for (u, d) in at {
                    entry.push((k * da + u, &e * c * d));
                }
            }
        }
    }
    for ((p, r), terms) in acc {
        bracket.set(p, r, terms)?;
    }
    let form = match (g.form(), a.form()) {
        (Some(bg), Some(ba)) => Some(RatMatrix::from_fn(dg * da, dg * da, |p, r| {
            let (i, s, j, t) = (p / da, p % da, r / da, r % da);
            let (x, y) = (bg.get(i, j), ba.get(s, t));
            if x.is_zero() || y.is_zero() {
                Q::zero()
            } else {
                eps(s, j) * x * y
            }
        })),
        _ => None,
    };
    let quadratic = form.is_some();
    let out = ColorHomAlgebra::new(space, bracket, g.alpha().kron(a.alpha()), form, Kind::Lie)?;
    finish(out, lie_opts(quadratic))
}

/// Appends primes to module basis names that collide with algebra names.
pub(crate) fn disjoint_names(first: &GradedSpace, second: &GradedSpace) -> GradedSpace {
    let mut taken: std::collections::BTreeSet<String> =
        first.basis().iter().map(|b| b.name.clone()).collect();
    let basis = second
        .basis()
        .iter()
        .map(|b| {
            let mut name = b.name.clone();
            while taken.contains(&name) {
                name.push('\'');
            }
            taken.insert(name.clone());
            BasisVector {
                name,
                degree: b.degree.clone(),
            }
        })
        .collect();
    GradedSpace::new(second.bc().clone(), basis).expect("names made unique")
}

/// `𝔤 ⋉ M` with `[x+u,y+v] = [x,y] + ρ(x)v − ε(x,y)ρ(y)u` and twist `α⊕β`.
pub fn semidirect_product(
    g: &ColorHomAlgebra,
    rep: &Representation,
) -> Result<ColorHomAlgebra, ConstructionError> {
    if rep.algebra() != g {
        return Err(ConstructionError::Precondition(
            "representation is over a different algebra".into(),
        ));
    }
    let pre = check_representation(rep, false);
    if !pre.passed() {
        return Err(ConstructionError::NotRepresentation(pre));
    }
    let module = disjoint_names(g.space(), rep.module());
    let space = g.space().direct_sum(&module)?;
    let (n, m) = (g.dim(), rep.dim());
    let mut bracket = StructureConstants::zero(n + m);
    for ((i, j), terms) in g.bracket().entries() {
        bracket.set(*i, *j, terms.clone())?;
    }
    for i in 0..n {
        let rho = rep.rho_basis(i);
        for b in 0..m {
            let col: Vec<(usize, Q)> = (0..m)
                .filter(|&k| !rho.get(k, b).is_zero())
                .map(|k| (n + k, rho.get(k, b).clone()))
                .collect();
            if col.is_empty() {
                continue;
            }
            let e = g.space().eps(module.degree(b), g.space().degree(i));
            bracket.set(i, n + b, col.clone())?;
            bracket.set(n + b, i, col.into_iter().map(|(k, c)| (k, -(&e * c))).collect())?;
        }
    }
    let mut alpha = RatMatrix::zeros(n + m, n + m);
    for r in 0..n {
        for c in 0..n {
            alpha.set(r, c, g.alpha().get(r, c).clone());
        }
    }
    for r in 0..m {
        for c in 0..m {
            alpha.set(n + r, n + c, rep.beta().get(r, c).clone());
        }
    }
    let out = ColorHomAlgebra::new(space, bracket, alpha, None, Kind::Lie)?;
    finish(out, lie_opts(false))
}

/// Block-diagonal `a ⊕ b`.
pub(crate) fn block_diag(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let (n, m) = (a.rows(), b.rows());
    RatMatrix::from_fn(n + m, a.cols() + b.cols(), |r, c| {
        if r < n && c < a.cols() {
            a.get(r, c).clone()
        } else if r >= n && c >= a.cols() {
            b.get(r - n, c - a.cols()).clone()
        } else {
            Q::zero()
        }
    })
}
