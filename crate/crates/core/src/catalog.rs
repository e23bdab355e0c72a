//! Built-in parameterized example algebras.
//!
//! | id | algebra |
//! |----|---------|
//! | `sl2_hom` | `sl₂` with the twist family `(a,d,c; 2c,b,f; 2d,e,b)` and Killing form |
//! | `nilpotent_L` | 4-dim 2-nilpotent Lie superalgebra with forms `B_{p,q}` |
//! | `super_A2` | 2-dim odd superalgebra with zero product |
//! | `super_A4` | 4-dim super-commutative superalgebra with `f₀·f₀ = a e₀` |
//! | `tensor` | `g ⊗ A` for one Lie entry and one associative entry |

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{AlgebraError, ColorHomAlgebra, GradedSpace, Kind, StructureConstants};
use crate::checks::{verify, Report, VerifyOptions};
use crate::constructions::{tensor_product_algebra, ConstructionError};
use crate::grading::Bicharacter;
use crate::linalg::RatMatrix;
use crate::rational::{format_rational, parse_rational, q, Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("catalog instance fails its advertised checks:\n{0}")]
    Verification(Report),
}

pub struct EntryInfo {
    pub id: &'static str,
    pub description: &'static str,
    pub params: &'static [(&'static str, &'static str)],
}

pub const ENTRIES: &[EntryInfo] = &[
    EntryInfo {
        id: "sl2_hom",
        description: "sl2 with a twist from the (a,d,c;2c,b,f;2d,e,b) family and Killing form",
        params: &[("a", "1"), ("b", "1"), ("c", "0"), ("d", "0"), ("e", "0"), ("f", "0")],
    },
    EntryInfo {
        id: "nilpotent_L",
        description: "2-nilpotent Lie superalgebra [l0,l1]=k1, [l1,l1]=k0 with form B_{p,q}",
        params: &[("p", "1"), ("q", "1"), ("a", "1"), ("b", "1"), ("c", "0"), ("d", "-1")],
    },
    EntryInfo {
        id: "super_A2",
        description: "2-dim odd superalgebra, zero product, skew form",
        params: &[],
    },
    EntryInfo {
        id: "super_A4",
        description: "4-dim super-commutative superalgebra with f0*f0 = a e0",
        params: &[("a", "1"), ("alpha", "1"), ("beta", "0"), ("gamma", "1")],
    },
    EntryInfo {
        id: "tensor",
        description: "g (x) A; parameters g=<lie entry>, a=<associative entry>, g.<k>, a.<k>",
        params: &[("g", "nilpotent_L"), ("a", "super_A4")],
    },
];

pub fn entry(id: &str) -> Option<&'static EntryInfo> {
    ENTRIES.iter().find(|e| e.id == id)
}

/// Named parameters given as strings; rational-valued ones are parsed on use.
pub type Params = BTreeMap<String, String>;

fn rational_params(info: &EntryInfo, params: &Params) -> Result<BTreeMap<String, Q>, CatalogError> {
    let mut out = BTreeMap::new();
    for (k, default) in info.params {
        let raw = params.get(*k).map_or(*default, String::as_str);
        let v = parse_rational(raw)
            .map_err(|e| CatalogError::BadParams(format!("parameter `{k}`: {e}")))?;
        out.insert(k.to_string(), v);
    }
    if let Some(k) = params.keys().find(|k| !info.params.iter().any(|(p, _)| p == k)) {
        return Err(CatalogError::BadParams(format!(
            "`{}` has no parameter `{k}`",
            info.id
        )));
    }
    Ok(out)
}

/// `sl₂` on `x₁,x₂,x₃` with `[x₁,x₂]=2x₂`, `[x₁,x₃]=−2x₃`, `[x₂,x₃]=x₁`,
/// twist with rows `(a,d,c; 2c,b,f; 2d,e,b)` and the Killing form.
pub fn sl2_hom(a: &Q, b: &Q, c: &Q, d: &Q, e: &Q, f: &Q) -> ColorHomAlgebra {
    sl2_over(&Bicharacter::trivial(), a, b, c, d, e, f)
}

pub(crate) fn sl2_over(
    bc: &Bicharacter,
    a: &Q,
    b: &Q,
    c: &Q,
    d: &Q,
    e: &Q,
    f: &Q,
) -> ColorHomAlgebra {
    let space = GradedSpace::even(bc, &["x1", "x2", "x3"]);
    let mut br = StructureConstants::zero(3);
    let table = [
        (0, 1, 1, 2),
        (1, 0, 1, -2),
        (0, 2, 2, -2),
        (2, 0, 2, 2),
        (1, 2, 0, 1),
        (2, 1, 0, -1),
    ];
    for (i, j, k, coef) in table {
        br.set(i, j, vec![(k, q(coef))]).expect("indices in range");
    }
    let two = q(2);
    let alpha = RatMatrix::from_rows(vec![
        vec![a.clone(), d.clone(), c.clone()],
        vec![&two * c, b.clone(), f.clone()],
        vec![&two * d, e.clone(), b.clone()],
    ]);
    let killing = RatMatrix::from_rows(vec![
        vec![q(8), q(0), q(0)],
        vec![q(0), q(0), q(4)],
        vec![q(0), q(4), q(0)],
    ]);
    ColorHomAlgebra::new(space, br, alpha, Some(killing), Kind::Lie).expect("valid sl2 data")
}

/// `L = ⟨l₀,k₀⟩ ⊕ ⟨l₁,k₁⟩` with `[l₀,l₁]=k₁`, `[l₁,l₁]=k₀`, form `B_{p,q}` and
/// twist `α(l₀)=a l₀+b k₀`, `α(k₀)=c l₀+(a+pc/q)k₀`, `α(l₁)=d l₁`, `α(k₁)=d k₁`.
pub fn nilpotent_l(p: &Q, q_: &Q, a: &Q, b: &Q, c: &Q, d: &Q) -> Result<ColorHomAlgebra, CatalogError> {
    if q_.is_zero() {
        return Err(CatalogError::BadParams("q must be nonzero".into()));
    }
    let bc = Bicharacter::super_sign();
    let space = GradedSpace::from_pairs(
        &bc,
        &[("l0", &[0]), ("k0", &[0]), ("l1", &[1]), ("k1", &[1])],
    )?;
    let mut br = StructureConstants::zero(4);
    br.set(0, 2, vec![(3, q(1))])?;
    br.set(2, 0, vec![(3, q(-1))])?;
    br.set(2, 2, vec![(1, q(1))])?;
    let z = Q::zero;
    let form = RatMatrix::from_rows(vec![
        vec![p.clone(), -q_.clone(), z(), z()],
        vec![-q_.clone(), z(), z(), z()],
        vec![z(), z(), z(), q_.clone()],
        vec![z(), z(), -q_.clone(), z()],
    ]);
    let alpha = RatMatrix::from_rows(vec![
        vec![a.clone(), c.clone(), z(), z()],
        vec![b.clone(), a + p * c / q_, z(), z()],
        vec![z(), z(), d.clone(), z()],
        vec![z(), z(), z(), d.clone()],
    ]);
    Ok(ColorHomAlgebra::new(space, br, alpha, Some(form), Kind::Lie)?)
}

/// Odd 2-dim superalgebra `⟨u,v⟩` with zero product, identity twist and
/// form `B(u,v) = 1 = −B(v,u)`.
pub fn super_a2() -> ColorHomAlgebra {
    let bc = Bicharacter::super_sign();
    let space = GradedSpace::from_pairs(&bc, &[("u", &[1]), ("v", &[1])]).expect("valid basis");
    let form = RatMatrix::from_rows(vec![vec![q(0), q(1)], vec![q(-1), q(0)]]);
    ColorHomAlgebra::new(
        space,
        StructureConstants::zero(2),
        RatMatrix::identity(2),
        Some(form),
        Kind::Associative,
    )
    .expect("valid A2 data")
}

/// `A = ⟨e₀,f₀⟩ ⊕ ⟨e₁,f₁⟩` with only `f₀·f₀ = a e₀`, identity twist and form
/// rows `(0,α,0,0; α,β,0,0; 0,0,0,γ; 0,0,−γ,0)`.
pub fn super_a4(a: &Q, alpha: &Q, beta: &Q, gamma: &Q) -> Result<ColorHomAlgebra, CatalogError> {
    if a.is_zero() || alpha.is_zero() || gamma.is_zero() {
        return Err(CatalogError::BadParams("a, alpha and gamma must be nonzero".into()));
    }
    let bc = Bicharacter::super_sign();
    let space = GradedSpace::from_pairs(
        &bc,
        &[("e0", &[0]), ("f0", &[0]), ("e1", &[1]), ("f1", &[1])],
    )?;
    let mut mu = StructureConstants::zero(4);
    mu.set(1, 1, vec![(0, a.clone())])?;
    let z = Q::zero;
    let form = RatMatrix::from_rows(vec![
        vec![z(), alpha.clone(), z(), z()],
        vec![alpha.clone(), beta.clone(), z(), z()],
        vec![z(), z(), z(), gamma.clone()],
        vec![z(), z(), -gamma.clone(), z()],
    ]);
    Ok(ColorHomAlgebra::new(
        space,
        mu,
        RatMatrix::identity(4),
        Some(form),
        Kind::Associative,
    )?)
}

fn sub_params(params: &Params, prefix: &str) -> Params {
    params
        .iter()
        .filter_map(|(k, v)| {
            k.strip_prefix(prefix)
                .and_then(|rest| rest.strip_prefix('.'))
                .map(|rest| (rest.to_string(), v.clone()))
        })
        .collect()
}

fn build_unverified(id: &str, params: &Params) -> Result<ColorHomAlgebra, CatalogError> {
    let info = entry(id).ok_or_else(|| CatalogError::UnknownEntry(id.to_string()))?;
    if id == "tensor" {
        let g_id = params.get("g").map_or("nilpotent_L", String::as_str);
        let a_id = params.get("a").map_or("super_A4", String::as_str);
        if let Some(k) = params
            .keys()
            .find(|k| *k != "g" && *k != "a" && !k.starts_with("g.") && !k.starts_with("a."))
        {
            return Err(CatalogError::BadParams(format!("`tensor` has no parameter `{k}`")));
        }
        let g = build(g_id, &sub_params(params, "g"))?;
        let a = build(a_id, &sub_params(params, "a"))?;
        if g.kind() != Kind::Lie || a.kind() != Kind::Associative {
            return Err(CatalogError::BadParams(
                "tensor needs a Lie entry for g and an associative entry for a".into(),
            ));
        }
        let g = regrade_into(g, a.bc())?;
        return Ok(tensor_product_algebra(&g, &a)?);
    }
    let p = rational_params(info, params)?;
    let v = |k: &str| &p[k];
    match id {
        "sl2_hom" => Ok(sl2_hom(v("a"), v("b"), v("c"), v("d"), v("e"), v("f"))),
        "nilpotent_L" => nilpotent_l(v("p"), v("q"), v("a"), v("b"), v("c"), v("d")),
        "super_A2" => Ok(super_a2()),
        "super_A4" => super_a4(v("a"), v("alpha"), v("beta"), v("gamma")),
        _ => Err(CatalogError::UnknownEntry(id.to_string())),
    }
}

/// An algebra graded by the trivial group, viewed as concentrated in degree
/// zero of `bc`'s group. Algebras already graded by `bc` pass through.
pub fn regrade_into(a: ColorHomAlgebra, bc: &Bicharacter) -> Result<ColorHomAlgebra, AlgebraError> {
    if a.bc() == bc {
        return Ok(a);
    }
    let space = a.space().regrade_even(bc)?;
    a.with_space(space)
}

/// Options the catalog verifies for an entry.
pub fn advertised_checks(a: &ColorHomAlgebra) -> VerifyOptions {
    VerifyOptions {
        quadratic: a.form().is_some(),
        multiplicative: false,
        commutative: a.kind() == Kind::Associative,
    }
}

/// Builds a catalog entry and, unless eager verification is disabled,
/// verifies its advertised checks.
pub fn build(id: &str, params: &Params) -> Result<ColorHomAlgebra, CatalogError> {
    let mut a = build_unverified(id, params)?;
    if crate::eager_verification() {
        let report = verify(&a, advertised_checks(&a))?;
        if !report.passed() {
            return Err(CatalogError::Verification(report));
        }
        a.record(&report);
    }
    Ok(a)
}

pub fn build_default(id: &str) -> Result<ColorHomAlgebra, CatalogError> {
    build(id, &Params::new())
}

/// Human-readable listing of the entries and their default parameters.
pub fn listing() -> String {
    let mut s = String::new();
    for e in ENTRIES {
        let params: Vec<String> = e.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        s.push_str(&format!("{}\t{}\t[{}]\n", e.id, e.description, params.join(", ")));
    }
    s
}

pub fn format_params(p: &BTreeMap<String, Q>) -> String {
    p.iter()
        .map(|(k, v)| format!("{k}={}", format_rational(v)))
        .collect::<Vec<_>>()
        .join(",")
}
