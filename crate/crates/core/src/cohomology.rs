//! Low-degree cohomology with coefficients in a representation, central
//! extensions, `αᵏ`-derivations and their scalar cocycles, and
//! `T*`-extensions.
//!
//! A 2-cochain is stored on the canonical pairs `i < j` together with the
//! diagonal pairs `(i,i)` where `ε(eᵢ,eᵢ) = −1`; the remaining values follow
//! from `φ(eⱼ,eᵢ) = −ε(eⱼ,eᵢ)φ(eᵢ,eⱼ)`.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraError, ColorHomAlgebra, GradedLinearMap, GradedSpace, Kind};
use crate::checks::{
    check_multiplicative, check_quadratic, verify, Check, Ops, Report, VerifyOptions, Witness,
};
use crate::constructions::{block_diag, disjoint_names, finish, ConstructionError};
use crate::grading::{EpsTable, GroupElement};
use crate::linalg::{column_space_intersection, independent_columns, RatMatrix, RowEchelon};
use crate::rational::{format_rational, Q};
use crate::representations::{coadjoint_rep, Representation, RepresentationError};
use crate::constructions::homogeneous_slots;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Representation(#[from] RepresentationError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("only 1- and 2-cochains are supported, got {0}")]
    Arity(usize),
    #[error("cochain values have the wrong shape: {0}")]
    ValueShape(String),
    #[error("tuple {0:?} is not canonical")]
    NonCanonicalTuple(Vec<usize>),
    #[error("value on {tuple:?} has a component outside the required degree at module index {index}")]
    NotHomogeneous { tuple: Vec<usize>, index: usize },
    #[error("{0}")]
    ModuleMismatch(String),
    #[error("cochain is not even")]
    NotEven,
    #[error("cocycle condition fails:\n{0}")]
    CocycleConditionFailed(Report),
    #[error("not a cocycle:\n{0}")]
    NotCocycle(Report),
    #[error("not a skew-symmetric derivation:\n{0}")]
    NotSkewDerivation(Report),
    #[error("algebra is not quadratic:\n{0}")]
    NotQuadratic(Report),
    #[error("algebra is not multiplicative:\n{0}")]
    NotMultiplicative(Report),
    #[error("coadjoint representation is not defined:\n{0}")]
    CoadjointUndefined(Report),
}

/// Canonical storage tuples of `n`-cochains, in lexicographic order.
pub fn canonical_tuples(space: &GradedSpace, n: usize) -> Result<Vec<Vec<usize>>, CohomologyError> {
    let dim = space.dim();
    match n {
        1 => Ok((0..dim).map(|i| vec![i]).collect()),
        2 => {
            let t = space.eps_table();
            let mut out = Vec::new();
            for i in 0..dim {
                for j in i..dim {
                    if i < j || t.get(i, i) == &-Q::one() {
                        out.push(vec![i, j]);
                    }
                }
            }
            Ok(out)
        }
        _ => Err(CohomologyError::Arity(n)),
    }
}

struct Layout {
    dim: usize,
    n: usize,
    tuples: Vec<Vec<usize>>,
    index: Vec<Option<usize>>,
    eps: EpsTable,
}

impl Layout {
    fn new(space: &GradedSpace, n: usize) -> Result<Self, CohomologyError> {
        let tuples = canonical_tuples(space, n)?;
        let dim = space.dim();
        let mut index = vec![None; dim.pow(n as u32)];
        for (p, t) in tuples.iter().enumerate() {
            index[flat(dim, t)] = Some(p);
        }
        Ok(Layout {
            dim,
            n,
            tuples,
            index,
            eps: space.eps_table(),
        })
    }

    /// `φ(e_k,e_l) = c·φ(tuples[p])` as `Some((p, c))`, or `None` if the
    /// value is forced to vanish.
    fn pair(&self, k: usize, l: usize) -> Option<(usize, Q)> {
        if let Some(p) = self.index[k * self.dim + l] {
            return Some((p, Q::one()));
        }
        self.index[l * self.dim + k].map(|p| (p, -self.eps.get(k, l).clone()))
    }

    /// Expansion of the ordered basis tuple `idx` in canonical coordinates.
    fn expand(&self, idx: &[usize]) -> Option<(usize, Q)> {
        match self.n {
            1 => Some((idx[0], Q::one())),
            _ => self.pair(idx[0], idx[1]),
        }
    }

    fn ordered_count(&self) -> usize {
        self.dim.pow(self.n as u32)
    }

    fn ordered(&self, pos: usize) -> Vec<usize> {
        match self.n {
            1 => vec![pos],
            _ => vec![pos / self.dim, pos % self.dim],
        }
    }
}

fn flat(dim: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |acc, &i| acc * dim + i)
}

fn required_degree(module: &Representation, degree: &GroupElement, t: &[usize]) -> GroupElement {
    let space = module.algebra().space();
    t.iter()
        .fold(degree.clone(), |acc, &i| space.add_degrees(&acc, space.degree(i)))
}

/// A homogeneous ε-alternating `n`-linear map `𝔤ⁿ → M` of a given degree,
/// stored on canonical tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    n: usize,
    degree: GroupElement,
    module: Representation,
    tuples: Vec<Vec<usize>>,
    values: Vec<Vec<Q>>,
}

impl Cochain {
    /// `values[p]` is the value on the `p`-th canonical tuple.
    pub fn new(
        module: Representation,
        n: usize,
        degree: GroupElement,
        values: Vec<Vec<Q>>,
    ) -> Result<Self, CohomologyError> {
        let tuples = canonical_tuples(module.algebra().space(), n)?;
        if !module.module().bc().group().is_canonical(&degree)
            || degree.0.len() != module.module().bc().group().arity()
        {
            return Err(CohomologyError::ValueShape(format!("bad degree {degree}")));
        }
        if values.len() != tuples.len() {
            return Err(CohomologyError::ValueShape(format!(
                "expected {} tuples, got {}",
                tuples.len(),
                values.len()
            )));
        }
        for (t, v) in tuples.iter().zip(&values) {
            if v.len() != module.dim() {
                return Err(CohomologyError::ValueShape(format!(
                    "value on {t:?} has length {}, expected {}",
                    v.len(),
                    module.dim()
                )));
            }
            let want = required_degree(&module, &degree, t);
            for (m, c) in v.iter().enumerate() {
                if !c.is_zero() && module.module().degree(m) != &want {
                    return Err(CohomologyError::NotHomogeneous {
                        tuple: t.clone(),
                        index: m,
                    });
                }
            }
        }
        Ok(Cochain {
            n,
            degree,
            module,
            tuples,
            values,
        })
    }

    pub fn zero(module: Representation, n: usize, degree: GroupElement) -> Result<Self, CohomologyError> {
        let count = canonical_tuples(module.algebra().space(), n)?.len();
        let values = vec![vec![Q::zero(); module.dim()]; count];
        Self::new(module, n, degree, values)
    }

    /// From the flat coordinate vector, tuple-major.
    pub fn from_coords(
        module: Representation,
        n: usize,
        degree: GroupElement,
        coords: &[Q],
    ) -> Result<Self, CohomologyError> {
        let m = module.dim();
        let count = canonical_tuples(module.algebra().space(), n)?.len();
        if coords.len() != count * m {
            return Err(CohomologyError::ValueShape(format!(
                "expected {} coordinates, got {}",
                count * m,
                coords.len()
            )));
        }
        let values = (0..count).map(|p| coords[p * m..(p + 1) * m].to_vec()).collect();
        Self::new(module, n, degree, values)
    }

    /// From explicitly listed canonical tuples; unlisted tuples are zero.
    pub fn from_entries(
        module: Representation,
        n: usize,
        degree: GroupElement,
        entries: &[(Vec<usize>, Vec<Q>)],
    ) -> Result<Self, CohomologyError> {
        let tuples = canonical_tuples(module.algebra().space(), n)?;
        let mut values = vec![vec![Q::zero(); module.dim()]; tuples.len()];
        for (t, v) in entries {
            let p = tuples
                .iter()
                .position(|c| c == t)
                .ok_or_else(|| CohomologyError::NonCanonicalTuple(t.clone()))?;
            values[p] = v.clone();
        }
        Self::new(module, n, degree, values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> &GroupElement {
        &self.degree
    }

    pub fn module(&self) -> &Representation {
        &self.module
    }

    pub fn algebra(&self) -> &ColorHomAlgebra {
        self.module.algebra()
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn values(&self) -> &[Vec<Q>] {
        &self.values
    }

    pub fn coords(&self) -> Vec<Q> {
        self.values.iter().flatten().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().flatten().all(Zero::is_zero)
    }

    /// Value on an arbitrary ordered basis tuple.
    pub fn value(&self, idx: &[usize]) -> Vec<Q> {
        assert_eq!(idx.len(), self.n, "tuple length");
        let layout = Layout::new(self.algebra().space(), self.n).expect("arity checked");
        match layout.expand(idx) {
            Some((p, c)) => self.values[p].iter().map(|v| v * &c).collect(),
            None => vec![Q::zero(); self.module.dim()],
        }
    }

    /// Values on all ordered basis tuples, indexed lexicographically.
    pub fn table(&self) -> Vec<Vec<Q>> {
        let layout = Layout::new(self.algebra().space(), self.n).expect("arity checked");
        (0..layout.ordered_count())
            .map(|pos| match layout.expand(&layout.ordered(pos)) {
                Some((p, c)) => self.values[p].iter().map(|v| v * &c).collect(),
                None => vec![Q::zero(); self.module.dim()],
            })
            .collect()
    }
}

fn table_witness(space: &GradedSpace, idx: &[usize], residual: &[Q]) -> Witness {
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

/// Kernel of the linear map whose columns are given, as coefficient vectors.
pub(crate) fn kernel_of_columns(width: usize, columns: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let height = columns.first().map_or(0, Vec::len);
    let mut e = RowEchelon::new(width);
    for r in 0..height {
        if e.rank() == width {
            break;
        }
        if columns.iter().all(|c| c[r].is_zero()) {
            continue;
        }
        e.insert(columns.iter().map(|c| c[r].clone()).collect());
    }
    e.kernel_basis().columns()
}

fn combine(basis: &[Vec<Q>], coeffs: &[Q]) -> Vec<Q> {
    let len = basis.first().map_or(0, Vec::len);
    let mut out = vec![Q::zero(); len];
    for (b, c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            if !x.is_zero() {
                *o += c * x;
            }
        }
    }
    out
}

fn ensure_module_over(a: &ColorHomAlgebra, module: &Representation) -> Result<(), CohomologyError> {
    if module.algebra() != a {
        return Err(CohomologyError::ModuleMismatch(
            "representation is over a different algebra".into(),
        ));
    }
    Ok(())
}

/// Basis of the `n`-cochains of the given degree: homogeneous, stored on
/// canonical tuples, and satisfying `φ∘α^{⊗n} = β∘φ`.
pub fn cochain_space_basis(
    a: &ColorHomAlgebra,
    module: &Representation,
    n: usize,
    degree: &GroupElement,
) -> Result<Vec<Cochain>, CohomologyError> {
    ensure_module_over(a, module)?;
    let layout = Layout::new(a.space(), n)?;
    let m = module.dim();
    let mut slot_of = vec![None; layout.tuples.len() * m];
    let mut slots = Vec::new();
    for (p, t) in layout.tuples.iter().enumerate() {
        let want = required_degree(module, degree, t);
        for r in 0..m {
            if module.module().degree(r) == &want {
                slot_of[p * m + r] = Some(slots.len());
                slots.push((p, r));
            }
        }
    }
    let width = slots.len();
    let alpha = a.alpha();
    let beta = module.beta();
    let mut echelon = RowEchelon::new(width);
    for (p, t) in layout.tuples.iter().enumerate() {
        // φ(α e_t) in canonical coordinates
        let mut expansion: Vec<(usize, Q)> = Vec::new();
        match n {
            1 => {
                for k in 0..layout.dim {
                    let c = alpha.get(k, t[0]);
                    if !c.is_zero() {
                        expansion.push((k, c.clone()));
                    }
                }
            }
            _ => {
                for k in 0..layout.dim {
                    let ck = alpha.get(k, t[0]);
                    if ck.is_zero() {
                        continue;
                    }
                    for l in 0..layout.dim {
                        let cl = alpha.get(l, t[1]);
                        if cl.is_zero() {
                            continue;
                        }
                        if let Some((q, s)) = layout.pair(k, l) {
                            expansion.push((q, ck * cl * s));
                        }
                    }
                }
            }
        }
        for r in 0..m {
            let mut row = vec![Q::zero(); width];
            for (q, c) in &expansion {
                if let Some(s) = slot_of[q * m + r] {
                    row[s] += c;
                }
            }
            for mm in 0..m {
                let b = beta.get(r, mm);
                if b.is_zero() {
                    continue;
                }
                if let Some(s) = slot_of[p * m + mm] {
                    row[s] -= b;
                }
            }
            echelon.insert(row);
        }
    }
    echelon
        .kernel_basis()
        .columns()
        .into_iter()
        .map(|v| {
            let mut coords = vec![Q::zero(); layout.tuples.len() * m];
            for (&(p, r), x) in slots.iter().zip(v) {
                coords[p * m + r] = x;
            }
            Cochain::from_coords(module.clone(), n, degree.clone(), &coords)
        })
        .collect()
}

/// Checks that a table of values on all ordered tuples is a cochain:
/// ε-alternating, homogeneous and compatible with the twists.
pub fn check_cochain_table(
    module: &Representation,
    n: usize,
    degree: &GroupElement,
    table: &[Vec<Q>],
) -> Result<Report, CohomologyError> {
    let a = module.algebra();
    let space = a.space();
    let layout = Layout::new(space, n)?;
    let m = module.dim();
    let mut report = Report::new();

    let mut alternating = Check::pass("cochain-alternating");
    if n == 2 {
        'alt: for i in 0..layout.dim {
            for j in i..layout.dim {
                let e = layout.eps.get(j, i);
                let r: Vec<Q> = (0..m)
                    .map(|k| &table[j * layout.dim + i][k] + e * &table[i * layout.dim + j][k])
                    .collect();
                if nonzero(&r) {
                    alternating = Check::fail("cochain-alternating", table_witness(space, &[j, i], &r));
                    break 'alt;
                }
            }
        }
    }
    report.push(alternating);

    let mut homogeneous = Check::pass("cochain-homogeneous");
    'hom: for pos in 0..layout.ordered_count() {
        let t = layout.ordered(pos);
        let want = required_degree(module, degree, &t);
        for (k, c) in table[pos].iter().enumerate() {
            if !c.is_zero() && module.module().degree(k) != &want {
                homogeneous = Check::fail("cochain-homogeneous", table_witness(space, &t, &table[pos]));
                break 'hom;
            }
        }
    }
    report.push(homogeneous);

    let ops = Ops::of(a);
    let mut compatible = Check::pass("cochain-compatible");
    'compat: for pos in 0..layout.ordered_count() {
        let t = layout.ordered(pos);
        let mut r = module.beta().mul_vec(&table[pos]);
        for v in r.iter_mut() {
            *v = -v.clone();
        }
        match n {
            1 => {
                for (k, c) in ops.alpha(t[0]) {
                    for (x, y) in r.iter_mut().zip(&table[*k]) {
                        *x += c * y;
                    }
                }
            }
            _ => {
                for (k, ck) in ops.alpha(t[0]) {
                    for (l, cl) in ops.alpha(t[1]) {
                        let c = ck * cl;
                        for (x, y) in r.iter_mut().zip(&table[k * layout.dim + l]) {
                            *x += &c * y;
                        }
                    }
                }
            }
        }
        if nonzero(&r) {
            compatible = Check::fail("cochain-compatible", table_witness(space, &t, &r));
            break 'compat;
        }
    }
    report.push(compatible);
    Ok(report)
}

/// `δ¹φ(x₀,x₁) = ε(φ,x₀)ρ(x₀)φ(x₁) − ε(φ+x₀,x₁)ρ(x₁)φ(x₀) − φ([x₀,x₁])` on
/// all ordered pairs.
pub fn delta1_table(phi: &Cochain) -> Result<Vec<Vec<Q>>, CohomologyError> {
    if phi.n != 1 {
        return Err(CohomologyError::Arity(phi.n));
    }
    let a = phi.algebra();
    let space = a.space();
    let rep = &phi.module;
    let d = &phi.degree;
    let dim = a.dim();
    let vals = &phi.values;
    let mut out = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            let mut v = vec![Q::zero(); rep.dim()];
            let e0 = space.eps(d, space.degree(i));
            let e1 = space.eps(&space.add_degrees(d, space.degree(i)), space.degree(j));
            add_scaled(&mut v, &e0, &rep.rho_basis(i).mul_vec(&vals[j]));
            add_scaled(&mut v, &-e1, &rep.rho_basis(j).mul_vec(&vals[i]));
            for (k, c) in a.bracket().get(i, j) {
                add_scaled(&mut v, &-c.clone(), &vals[*k]);
            }
            out.push(v);
        }
    }
    Ok(out)
}

fn add_scaled(acc: &mut [Q], c: &Q, v: &[Q]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in acc.iter_mut().zip(v) {
        if !y.is_zero() {
            *x += c * y;
        }
    }
}

/// `δ¹φ` read off on canonical pairs.
pub fn apply_delta1(phi: &Cochain) -> Result<Cochain, CohomologyError> {
    let table = delta1_table(phi)?;
    let dim = phi.algebra().dim();
    let tuples = canonical_tuples(phi.algebra().space(), 2)?;
    let values = tuples.iter().map(|t| table[t[0] * dim + t[1]].clone()).collect();
    Cochain::new(phi.module.clone(), 2, phi.degree.clone(), values)
}

/// Raw values of `δ²φ` on all ordered basis triples, indexed
/// `(i·n + j)·n + k`.
pub fn apply_delta2(phi: &Cochain) -> Result<Vec<Vec<Q>>, CohomologyError> {
    if phi.n != 2 {
        return Err(CohomologyError::Arity(phi.n));
    }
    let a = phi.algebra();
    let space = a.space();
    let rep = &phi.module;
    let d = &phi.degree;
    let dim = a.dim();
    let m = rep.dim();
    let ops = Ops::of(a);
    let t = phi.table();
    let rho_alpha: Vec<RatMatrix> = (0..dim).map(|i| rep.rho_vec(&a.alpha().column(i))).collect();
    let zero_rho = rho_alpha.iter().all(RatMatrix::is_zero);
    let eval = |v: &mut Vec<Q>, c: &Q, x: &[(usize, Q)], y: &[(usize, Q)]| {
        for (p, xp) in x {
            let cx = c * xp;
            for (q, yq) in y {
                add_scaled(v, &(&cx * yq), &t[p * dim + q]);
            }
        }
    };
    let mut out = Vec::with_capacity(dim * dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let mut v = vec![Q::zero(); m];
                if !zero_rho {
                    let di = space.add_degrees(d, space.degree(i));
                    let dij = space.add_degrees(&di, space.degree(j));
                    let e0 = space.eps(d, space.degree(i));
                    let e1 = space.eps(&di, space.degree(j));
                    let e2 = space.eps(&dij, space.degree(k));
                    add_scaled(&mut v, &e0, &rho_alpha[i].mul_vec(&t[j * dim + k]));
                    add_scaled(&mut v, &-e1, &rho_alpha[j].mul_vec(&t[i * dim + k]));
                    add_scaled(&mut v, &e2, &rho_alpha[k].mul_vec(&t[i * dim + j]));
                }
                eval(&mut v, &-Q::one(), ops.br(i, j), ops.alpha(k));
                eval(&mut v, ops.eps(j, k), ops.br(i, k), ops.alpha(j));
                eval(&mut v, &Q::one(), ops.alpha(i), ops.br(j, k));
                out.push(v);
            }
        }
    }
    Ok(out)
}

/// `δ²φ = 0`, with the first nonzero triple as witness.
pub fn check_delta2_zero(phi: &Cochain) -> Result<Check, CohomologyError> {
    const AXIOM: &str = "cocycle";
    let dim = phi.algebra().dim();
    for (pos, v) in apply_delta2(phi)?.iter().enumerate() {
        if nonzero(v) {
            let idx = [pos / (dim * dim), (pos / dim) % dim, pos % dim];
            return Ok(Check::fail(AXIOM, table_witness(phi.algebra().space(), &idx, v)));
        }
    }
    Ok(Check::pass(AXIOM))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstCohomology {
    pub dim_z1: usize,
    pub dim_b1: usize,
    pub dim_h1: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyResult {
    pub dim_c1: usize,
    pub dim_c2: usize,
    pub dim_z2: usize,
    pub dim_b2: usize,
    pub dim_h2: usize,
    /// Whether every `δ¹` image of a 1-cochain is itself a 2-cochain.
    pub coboundaries_are_cochains: bool,
    /// Whether the computed coboundaries are all cocycles.
    pub coboundaries_closed: bool,
    pub representatives: Vec<Cochain>,
    pub h1: Option<FirstCohomology>,
}

fn columns_matrix(len: usize, cols: &[Vec<Q>]) -> RatMatrix {
    RatMatrix::from_columns(len, cols)
}

/// `B ∩ Z` where both are given by independent columns.
fn intersect(len: usize, b: &[Vec<Q>], z: &[Vec<Q>]) -> Vec<Vec<Q>> {
    if b.is_empty() || z.is_empty() {
        return vec![];
    }
    column_space_intersection(&columns_matrix(len, b), &columns_matrix(len, z)).columns()
}

fn span_basis(len: usize, vs: &[Vec<Q>]) -> Vec<Vec<Q>> {
    if vs.is_empty() {
        return vec![];
    }
    independent_columns(&columns_matrix(len, vs)).columns()
}

fn flatten_table(table: &[Vec<Q>]) -> Vec<Q> {
    table.iter().flatten().cloned().collect()
}

/// Cocycles, coboundaries and second cohomology in the given degree, plus
/// first cohomology on request.
pub fn cohomology(
    a: &ColorHomAlgebra,
    module: &Representation,
    degree: &GroupElement,
    with_h1: bool,
) -> Result<CohomologyResult, CohomologyError> {
    ensure_module_over(a, module)?;
    let m = module.dim();
    let c2 = cochain_space_basis(a, module, 2, degree)?;
    let c1 = cochain_space_basis(a, module, 1, degree)?;
    let len2 = canonical_tuples(a.space(), 2)?.len() * m;
    let len1 = a.dim() * m;
    let c2_coords: Vec<Vec<Q>> = c2.iter().map(Cochain::coords).collect();

    let d2_cols: Vec<Vec<Q>> = c2
        .iter()
        .map(|c| apply_delta2(c).map(|t| flatten_table(&t)))
        .collect::<Result<_, _>>()?;
    let z2: Vec<Vec<Q>> = kernel_of_columns(c2.len(), &d2_cols)
        .iter()
        .map(|k| combine(&c2_coords, k))
        .collect();

    let tuples2 = canonical_tuples(a.space(), 2)?;
    let dim = a.dim();
    let canonical_part = |table: &[Vec<Q>]| -> Vec<Q> {
        tuples2
            .iter()
            .flat_map(|t| table[t[0] * dim + t[1]].clone())
            .collect()
    };
    let mut images = Vec::with_capacity(c1.len());
    let mut all_members = true;
    for phi in &c1 {
        let table = delta1_table(phi)?;
        if !check_cochain_table(module, 2, degree, &table)?.passed() {
            all_members = false;
        }
        images.push(table);
    }
    let b2: Vec<Vec<Q>> = if all_members {
        let canon: Vec<Vec<Q>> = images.iter().map(|t| canonical_part(t)).collect();
        span_basis(len2, &canon)
    } else {
        let full_len = dim * dim * m;
        let u: Vec<Vec<Q>> = images.iter().map(|t| flatten_table(t)).collect();
        let w: Vec<Vec<Q>> = c2.iter().map(|c| flatten_table(&c.table())).collect();
        let u = span_basis(full_len, &u);
        intersect(full_len, &u, &w)
            .into_iter()
            .map(|v| {
                let table: Vec<Vec<Q>> = v.chunks(m.max(1)).map(<[Q]>::to_vec).collect();
                canonical_part(&table)
            })
            .collect()
    };

    let combined_rank = span_basis(len2, &[z2.clone(), b2.clone()].concat()).len();
    let closed = combined_rank == z2.len();
    let bz = if closed { b2.clone() } else { intersect(len2, &b2, &z2) };
    let dim_h2 = z2.len() - bz.len();

    let mut representatives = Vec::new();
    if dim_h2 > 0 {
        let stacked = columns_matrix(len2, &[bz.clone(), z2.clone()].concat());
        for p in stacked.rref().pivot_cols {
            if p >= bz.len() {
                representatives.push(Cochain::from_coords(
                    module.clone(),
                    2,
                    degree.clone(),
                    &z2[p - bz.len()],
                )?);
            }
        }
    }

    let h1 = if with_h1 {
        let c1_coords: Vec<Vec<Q>> = c1.iter().map(Cochain::coords).collect();
        let d1_cols: Vec<Vec<Q>> = images.iter().map(|t| flatten_table(t)).collect();
        let z1: Vec<Vec<Q>> = kernel_of_columns(c1.len(), &d1_cols)
            .iter()
            .map(|k| combine(&c1_coords, k))
            .collect();
        let space = a.space();
        let mut d0 = Vec::new();
        for mm in 0..m {
            if module.module().degree(mm) != degree {
                continue;
            }
            let mut v = vec![Q::zero(); len1];
            for i in 0..dim {
                let e = space.eps(module.module().degree(mm), space.degree(i));
                let col = module.rho_basis(i).column(mm);
                for (r, c) in col.iter().enumerate() {
                    if !c.is_zero() {
                        v[i * m + r] = -(&e * c);
                    }
                }
            }
            d0.push(v);
        }
        let b1 = intersect(len1, &span_basis(len1, &d0), &c1_coords);
        let b1z = intersect(len1, &b1, &z1);
        Some(FirstCohomology {
            dim_z1: z1.len(),
            dim_b1: b1.len(),
            dim_h1: z1.len() - b1z.len(),
        })
    } else {
        None
    };

    Ok(CohomologyResult {
        dim_c1: c1.len(),
        dim_c2: c2.len(),
        dim_z2: z2.len(),
        dim_b2: b2.len(),
        dim_h2,
        coboundaries_are_cochains: all_members,
        coboundaries_closed: closed,
        representatives,
        h1,
    })
}

/// `↺ ε(z,x)Ψ(αx,[y,z])` for a 2-linear map given on all ordered pairs.
fn cyclic_residual(ops: &Ops, table: &[Vec<Q>], m: usize, i: usize, j: usize, k: usize) -> Vec<Q> {
    let n = ops.n;
    let mut out = vec![Q::zero(); m];
    let mut term = |c: &Q, x: usize, y: usize, z: usize| {
        for (p, cp) in ops.alpha(x) {
            for (q, cq) in ops.br(y, z) {
                add_scaled(&mut out, &(c * cp * cq), &table[p * n + q]);
            }
        }
    };
    term(ops.eps(k, i), i, j, k);
    term(ops.eps(i, j), j, k, i);
    term(ops.eps(j, k), k, i, j);
    out
}

fn check_cyclic_table(axiom: &str, a: &ColorHomAlgebra, table: &[Vec<Q>], m: usize) -> Check {
    let ops = Ops::of(a);
    for i in 0..ops.n {
        for j in i..ops.n {
            for k in i..ops.n {
                let r = cyclic_residual(&ops, table, m, i, j, k);
                if nonzero(&r) {
                    return Check::fail(axiom, table_witness(a.space(), &[i, j, k], &r));
                }
            }
        }
    }
    Check::pass(axiom)
}

/// `↺ ε(z,x)Ψ(αx,[y,z]) = 0` on all basis triples.
pub fn check_cyclic_cocycle(psi: &Cochain) -> Result<Check, CohomologyError> {
    if psi.n != 2 {
        return Err(CohomologyError::Arity(psi.n));
    }
    Ok(check_cyclic_table("cocycle-cyclic", psi.algebra(), &psi.table(), psi.module.dim()))
}

fn alpha_symmetry_residual(a: &ColorHomAlgebra, table: &[Vec<Q>], m: usize) -> Vec<(usize, usize, Vec<Q>)> {
    let n = a.dim();
    let alpha = a.alpha();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut r = vec![Q::zero(); m];
            for k in 0..n {
                add_scaled(&mut r, alpha.get(k, i), &table[k * n + j]);
                add_scaled(&mut r, &-alpha.get(k, j).clone(), &table[i * n + k]);
            }
            out.push((i, j, r));
        }
    }
    out
}

/// Scalar cocycle conditions matching skew `α`-derivations: the cyclic
/// condition and `ω(αx,y) = ω(x,αy)`.
pub fn check_scalar_cocycle(omega: &Cochain) -> Result<Report, CohomologyError> {
    let mut report = Report::single(check_cyclic_cocycle(omega)?);
    let a = omega.algebra();
    let table = omega.table();
    let mut c = Check::pass("cocycle-alpha-symmetric");
    for (i, j, r) in alpha_symmetry_residual(a, &table, omega.module.dim()) {
        if nonzero(&r) {
            c = Check::fail("cocycle-alpha-symmetric", table_witness(a.space(), &[i, j], &r));
            break;
        }
    }
    report.push(c);
    Ok(report)
}

/// Basis of the scalar 2-cochains of the given degree that satisfy
/// [`check_scalar_cocycle`].
pub fn scalar_cocycle_space(
    a: &ColorHomAlgebra,
    degree: &GroupElement,
) -> Result<Vec<Cochain>, CohomologyError> {
    let scalar = Representation::scalar(a);
    let layout = Layout::new(a.space(), 2)?;
    let zero = a.bc().group().zero();
    let slots: Vec<usize> = (0..layout.tuples.len())
        .filter(|&p| required_degree(&scalar, degree, &layout.tuples[p]) == zero)
        .collect();
    let ops = Ops::of(a);
    let n = a.dim();
    let columns: Vec<Vec<Q>> = slots
        .iter()
        .map(|&p| {
            let mut coords = vec![Q::zero(); layout.tuples.len()];
            coords[p] = Q::one();
            let c = Cochain::from_coords(scalar.clone(), 2, degree.clone(), &coords)
                .expect("homogeneous slot");
            let table = c.table();
            let mut col = Vec::new();
            for i in 0..n {
                for j in i..n {
                    for k in i..n {
                        col.extend(cyclic_residual(&ops, &table, 1, i, j, k));
                    }
                }
            }
            for (_, _, r) in alpha_symmetry_residual(a, &table, 1) {
                col.extend(r);
            }
            col
        })
        .collect();
    kernel_of_columns(slots.len(), &columns)
        .into_iter()
        .map(|v| {
            let mut coords = vec![Q::zero(); layout.tuples.len()];
            for (&p, x) in slots.iter().zip(v) {
                coords[p] = x;
            }
            Cochain::from_coords(scalar.clone(), 2, degree.clone(), &coords)
        })
        .collect()
}

fn ensure_trivial_module(psi: &Cochain, m_space: &GradedSpace) -> Result<(), CohomologyError> {
    if psi.module.module() != m_space {
        return Err(CohomologyError::ModuleMismatch(
            "cochain values do not lie in the given space".into(),
        ));
    }
    if psi.module.rho().iter().any(|r| !r.is_zero()) {
        return Err(CohomologyError::ModuleMismatch(
            "central extensions need the trivial action".into(),
        ));
    }
    Ok(())
}

/// `𝔤 ⊕ M` with `[x+m,y+n] = [x,y] + Ψ(x,y)` and twist `α ⊕ id`.
pub fn central_extension(
    a: &ColorHomAlgebra,
    m_space: &GradedSpace,
    psi: &Cochain,
) -> Result<ColorHomAlgebra, CohomologyError> {
    if psi.n != 2 {
        return Err(CohomologyError::Arity(psi.n));
    }
    ensure_module_over(a, &psi.module)?;
    ensure_trivial_module(psi, m_space)?;
    if psi.degree != a.bc().group().zero() {
        return Err(CohomologyError::NotEven);
    }
    let check = check_cyclic_cocycle(psi)?;
    if !check.passed {
        return Err(CohomologyError::CocycleConditionFailed(Report::single(check)));
    }
    let names = disjoint_names(a.space(), m_space);
    let space = a.space().direct_sum(&names)?;
    let (n, m) = (a.dim(), m_space.dim());
    let table = psi.table();
    let mut bracket = crate::algebra::StructureConstants::zero(n + m);
    for i in 0..n {
        for j in 0..n {
            let mut terms: Vec<(usize, Q)> = a.bracket().get(i, j).to_vec();
            for (r, c) in table[i * n + j].iter().enumerate() {
                if !c.is_zero() {
                    terms.push((n + r, c.clone()));
                }
            }
            bracket.set(i, j, terms)?;
        }
    }
    let alpha = block_diag(a.alpha(), &RatMatrix::identity(m));
    let out = ColorHomAlgebra::new(space, bracket, alpha, None, Kind::Lie)?;
    let multiplicative = check_multiplicative(a).passed
        && alpha_invariant(a, &table);
    Ok(finish(
        out,
        VerifyOptions {
            multiplicative,
            ..VerifyOptions::default()
        },
    )?)
}

/// `Ψ(αx,αy) = Ψ(x,y)` on all pairs.
fn alpha_invariant(a: &ColorHomAlgebra, table: &[Vec<Q>]) -> bool {
    let ops = Ops::of(a);
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let mut r: Vec<Q> = table[i * n + j].iter().map(|c| -c.clone()).collect();
            for (p, cp) in ops.alpha(i) {
                for (q, cq) in ops.alpha(j) {
                    add_scaled(&mut r, &(cp * cq), &table[p * n + q]);
                }
            }
            if nonzero(&r) {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationElement {
    pub map: GradedLinearMap,
    pub k: u32,
    pub skew_certified: bool,
}

/// Residual of the `αᵏ`-derivation conditions, with the `B`-skew condition
/// appended when `form` is given.
fn derivation_residual(
    a: &ColorHomAlgebra,
    ops: &Ops,
    alpha_k: &RatMatrix,
    degree: &GroupElement,
    d: &RatMatrix,
    form: Option<&RatMatrix>,
) -> Vec<Q> {
    let n = a.dim();
    let space = a.space();
    let mut out = d.mul(a.alpha()).sub(&a.alpha().mul(d)).to_rows().concat();
    let dcols: Vec<Vec<(usize, Q)>> = (0..n).map(|j| crate::checks::sparse(&d.column(j))).collect();
    let acols: Vec<Vec<(usize, Q)>> =
        (0..n).map(|j| crate::checks::sparse(&alpha_k.column(j))).collect();
    for i in 0..n {
        let e = space.eps(degree, space.degree(i));
        for j in 0..n {
            let mut r = d.mul_vec(&a.bracket().get_vec(i, j));
            ops.add_product(&mut r, &-Q::one(), &dcols[i], &acols[j]);
            ops.add_product(&mut r, &-e.clone(), &acols[i], &dcols[j]);
            out.extend(r);
        }
    }
    if let Some(g) = form {
        let lhs = d.transpose().mul(g);
        let rhs = g.mul(d);
        for i in 0..n {
            let e = space.eps(degree, space.degree(i));
            for j in 0..n {
                out.push(lhs.get(i, j) + &e * rhs.get(i, j));
            }
        }
    }
    out
}

/// `D∘α = α∘D`, `D[x,y] = [Dx,αᵏy] + ε(d,x)[αᵏx,Dy]`, and when `skew`
/// also `B(Dx,y) = −ε(d,x)B(x,Dy)`.
pub fn check_derivation(
    a: &ColorHomAlgebra,
    d: &GradedLinearMap,
    k: u32,
    skew: bool,
) -> Result<Report, CohomologyError> {
    if &d.source != a.space() || &d.target != a.space() {
        return Err(CohomologyError::ModuleMismatch(
            "map is not an endomorphism of the algebra's space".into(),
        ));
    }
    let n = a.dim();
    let space = a.space();
    let ops = Ops::of(a);
    let alpha_k = a.alpha().pow(k);
    let mut report = Report::new();
    let commute = d.matrix.mul(a.alpha()).sub(&a.alpha().mul(&d.matrix));
    report.push(Check::from_bool("derivation-commutes-alpha", commute.is_zero(), || {
        "D∘α ≠ α∘D".into()
    }));
    let dcols: Vec<Vec<(usize, Q)>> =
        (0..n).map(|j| crate::checks::sparse(&d.matrix.column(j))).collect();
    let acols: Vec<Vec<(usize, Q)>> =
        (0..n).map(|j| crate::checks::sparse(&alpha_k.column(j))).collect();
    let mut rule = Check::pass("derivation-rule");
    'rule: for i in 0..n {
        let e = space.eps(&d.degree, space.degree(i));
        for j in 0..n {
            let mut r = d.matrix.mul_vec(&a.bracket().get_vec(i, j));
            ops.add_product(&mut r, &-Q::one(), &dcols[i], &acols[j]);
            ops.add_product(&mut r, &-e.clone(), &acols[i], &dcols[j]);
            if nonzero(&r) {
                rule = Check::fail("derivation-rule", table_witness(space, &[i, j], &r));
                break 'rule;
            }
        }
    }
    report.push(rule);
    if skew {
        let g = a.form_or_err()?;
        let lhs = d.matrix.transpose().mul(g);
        let rhs = g.mul(&d.matrix);
        let mut c = Check::pass("derivation-form-skew");
        'skew: for i in 0..n {
            let e = space.eps(&d.degree, space.degree(i));
            for j in 0..n {
                let r = lhs.get(i, j) + &e * rhs.get(i, j);
                if !r.is_zero() {
                    c = Check::fail("derivation-form-skew", table_witness(space, &[i, j], &[r]));
                    break 'skew;
                }
            }
        }
        report.push(c);
    }
    Ok(report)
}

/// Basis of the `αᵏ`-derivations of the given degree, optionally restricted
/// to the `B`-skew ones.
pub fn derivation_space(
    a: &ColorHomAlgebra,
    k: u32,
    degree: &GroupElement,
    skew: bool,
) -> Result<Vec<DerivationElement>, CohomologyError> {
    let form = if skew { Some(a.form_or_err()?) } else { None };
    let n = a.dim();
    let ops = Ops::of(a);
    let alpha_k = a.alpha().pow(k);
    let slots = homogeneous_slots(a.space(), a.space(), degree);
    let columns: Vec<Vec<Q>> = slots
        .iter()
        .map(|&(r, c)| {
            let mut e = RatMatrix::zeros(n, n);
            e.set(r, c, Q::one());
            derivation_residual(a, &ops, &alpha_k, degree, &e, form)
        })
        .collect();
    Ok(kernel_of_columns(slots.len(), &columns)
        .into_iter()
        .map(|v| {
            let mut m = RatMatrix::zeros(n, n);
            for (&(r, c), x) in slots.iter().zip(v) {
                m.set(r, c, x);
            }
            DerivationElement {
                map: GradedLinearMap::new(a.space().clone(), a.space().clone(), degree.clone(), m)
                    .expect("solution supported on homogeneous slots"),
                k,
                skew_certified: skew,
            }
        })
        .collect())
}

fn require_quadratic_multiplicative(a: &ColorHomAlgebra) -> Result<(), CohomologyError> {
    let q = check_quadratic(a)?;
    if !q.passed() {
        return Err(CohomologyError::NotQuadratic(q));
    }
    let m = check_multiplicative(a);
    if !m.passed {
        return Err(CohomologyError::NotMultiplicative(Report::single(m)));
    }
    Ok(())
}

fn form_cochain(a: &ColorHomAlgebra, d: &GradedLinearMap) -> Result<Cochain, CohomologyError> {
    let g = a.form_or_err()?;
    let omega = d.matrix.transpose().mul(g);
    let scalar = Representation::scalar(a);
    let values = canonical_tuples(a.space(), 2)?
        .iter()
        .map(|t| vec![omega.get(t[0], t[1]).clone()])
        .collect();
    Cochain::new(scalar, 2, d.degree.clone(), values)
}

/// `ω(x,y) = B(Dx,y)` for a `B`-skew `α`-derivation `D`.
pub fn derivation_to_cocycle(
    a: &ColorHomAlgebra,
    d: &DerivationElement,
) -> Result<Cochain, CohomologyError> {
    require_quadratic_multiplicative(a)?;
    let report = check_derivation(a, &d.map, 1, true)?;
    if !report.passed() {
        return Err(CohomologyError::NotSkewDerivation(report));
    }
    let omega = form_cochain(a, &d.map)?;
    let post = check_scalar_cocycle(&omega)?;
    if !post.passed() {
        return Err(CohomologyError::NotCocycle(post));
    }
    Ok(omega)
}

/// The unique `D` with `B(Dx,y) = ω(x,y)`, certified as a `B`-skew
/// `α`-derivation.
pub fn cocycle_to_derivation(
    a: &ColorHomAlgebra,
    omega: &Cochain,
) -> Result<DerivationElement, CohomologyError> {
    if omega.n != 2 {
        return Err(CohomologyError::Arity(omega.n));
    }
    ensure_module_over(a, &omega.module)?;
    if omega.module.dim() != 1 || omega.module.rho().iter().any(|r| !r.is_zero()) {
        return Err(CohomologyError::ModuleMismatch("expected a scalar cochain".into()));
    }
    require_quadratic_multiplicative(a)?;
    let pre = check_scalar_cocycle(omega)?;
    if !pre.passed() {
        return Err(CohomologyError::NotCocycle(pre));
    }
    let g = a.form_or_err()?;
    let n = a.dim();
    let table = omega.table();
    let big_omega = RatMatrix::from_fn(n, n, |i, j| table[i * n + j][0].clone());
    let g_inv = g.inverse().expect("nondegenerate form");
    let d = big_omega.mul(&g_inv).transpose();
    let map = GradedLinearMap::new(a.space().clone(), a.space().clone(), omega.degree.clone(), d)?;
    let report = check_derivation(a, &map, 1, true)?;
    if !report.passed() {
        return Err(CohomologyError::NotSkewDerivation(report));
    }
    Ok(DerivationElement {
        map,
        k: 1,
        skew_certified: true,
    })
}

/// `𝔤 ⊕ 𝕂` with `[x+λ,y+η] = [x,y] + B(Dx,y)` and twist `α ⊕ id`, for an
/// even `B`-skew `α`-derivation `D`.
pub fn derivation_central_extension(
    a: &ColorHomAlgebra,
    d: &DerivationElement,
) -> Result<ColorHomAlgebra, CohomologyError> {
    if !d.map.is_even() {
        return Err(CohomologyError::NotEven);
    }
    let report = check_derivation(a, &d.map, 1, true)?;
    if !report.passed() {
        return Err(CohomologyError::NotSkewDerivation(report));
    }
    let omega = form_cochain(a, &d.map)?;
    let k = omega.module.module().clone();
    central_extension(a, &k, &omega)
}

/// `𝔤 ⊕ 𝔤*` with `[x+f,y+g] = [x,y] + ω(x,y) + π(x)g − ε(x,y)π(y)f`,
/// twist `α ⊕ αᵀ`, and the hyperbolic form when `𝔤` carries one.
///
/// The returned report holds the Hom-Lie checks, the cocycle check on `ω`
/// and, when a form is attached, the quadratic checks.
pub fn tstar_extension(
    a: &ColorHomAlgebra,
    omega: &Cochain,
) -> Result<(ColorHomAlgebra, Report), CohomologyError> {
    let (pi, coreport) = coadjoint_rep(a);
    if !coreport.passed() {
        return Err(CohomologyError::CoadjointUndefined(coreport));
    }
    if omega.n != 2 {
        return Err(CohomologyError::Arity(omega.n));
    }
    if omega.module != pi {
        return Err(CohomologyError::ModuleMismatch(
            "cochain must take values in the coadjoint module".into(),
        ));
    }
    if omega.degree != a.bc().group().zero() {
        return Err(CohomologyError::NotEven);
    }
    let n = a.dim();
    let dual = disjoint_names(a.space(), pi.module());
    let space = a.space().direct_sum(&dual)?;
    let table = omega.table();
    let mut bracket = crate::algebra::StructureConstants::zero(2 * n);
    for i in 0..n {
        for j in 0..n {
            let mut terms: Vec<(usize, Q)> = a.bracket().get(i, j).to_vec();
            for (r, c) in table[i * n + j].iter().enumerate() {
                if !c.is_zero() {
                    terms.push((n + r, c.clone()));
                }
            }
            bracket.set(i, j, terms)?;
        }
    }
    for i in 0..n {
        let rho = pi.rho_basis(i);
        for b in 0..n {
            let col: Vec<(usize, Q)> = (0..n)
                .filter(|&k| !rho.get(k, b).is_zero())
                .map(|k| (n + k, rho.get(k, b).clone()))
                .collect();
            if col.is_empty() {
                continue;
            }
            let e = space.eps(dual.degree(b), a.space().degree(i));
            bracket.set(i, n + b, col.clone())?;
            bracket.set(n + b, i, col.into_iter().map(|(k, c)| (k, -(&e * c))).collect())?;
        }
    }
    let alpha = block_diag(a.alpha(), pi.beta());
    let form = a.form().map(|g| {
        RatMatrix::from_fn(2 * n, 2 * n, |r, c| match (r < n, c < n) {
            (true, true) => g.get(r, c).clone(),
            (false, true) if r - n == c => Q::one(),
            (true, false) if c - n == r => space.eps(space.degree(r), space.degree(c)),
            _ => Q::zero(),
        })
    });
    let mut out = ColorHomAlgebra::new(space, bracket, alpha, form, Kind::Lie)?;
    let mut report = verify(
        &out,
        VerifyOptions {
            quadratic: out.form().is_some(),
            ..VerifyOptions::default()
        },
    )?;
    report.push(check_delta2_zero(omega)?);
    out.record(&report);
    Ok((out, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::grading::Bicharacter;
    use crate::rational::q;

    fn abelian(n: usize) -> ColorHomAlgebra {
        let names: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let space = GradedSpace::even(&Bicharacter::trivial(), &refs);
        ColorHomAlgebra::new(
            space,
            crate::algebra::StructureConstants::zero(n),
            RatMatrix::identity(n),
            Some(RatMatrix::identity(n)),
            Kind::Lie,
        )
        .unwrap()
    }

    #[test]
    fn canonical_tuples_include_odd_diagonal() {
        let bc = Bicharacter::super_sign();
        let space = GradedSpace::from_pairs(&bc, &[("a", &[0]), ("u", &[1])]).unwrap();
        assert_eq!(
            canonical_tuples(&space, 2).unwrap(),
            vec![vec![0, 1], vec![1, 1]]
        );
    }

    #[test]
    fn abelian_plane_has_one_class() {
        let a = abelian(2);
        let zero = a.bc().group().zero();
        let r = cohomology(&a, &Representation::scalar(&a), &zero, true).unwrap();
        assert_eq!((r.dim_z2, r.dim_b2, r.dim_h2), (1, 0, 1));
        assert_eq!(r.h1.unwrap().dim_h1, 2);
    }

    #[test]
    fn sl2_has_no_second_cohomology() {
        let a = catalog::sl2_hom(&q(1), &q(1), &q(0), &q(0), &q(0), &q(0));
        let zero = a.bc().group().zero();
        let r = cohomology(&a, &Representation::scalar(&a), &zero, false).unwrap();
        assert_eq!(r.dim_h2, 0);
        assert!(r.coboundaries_closed);
    }

    #[test]
    fn heisenberg_from_abelian_plane() {
        let a = abelian(2);
        let scalar = Representation::scalar(&a);
        let psi = Cochain::from_entries(
            scalar.clone(),
            2,
            a.bc().group().zero(),
            &[(vec![0, 1], vec![q(1)])],
        )
        .unwrap();
        let h = central_extension(&a, scalar.module(), &psi).unwrap();
        assert_eq!(h.dim(), 3);
        assert_eq!(h.bracket().get_vec(0, 1), vec![q(0), q(0), q(1)]);
    }

    #[test]
    fn rotation_round_trip() {
        let a = abelian(2);
        let zero = a.bc().group().zero();
        let rot = RatMatrix::from_rows(vec![vec![q(0), q(-1)], vec![q(1), q(0)]]);
        let d = DerivationElement {
            map: GradedLinearMap::endo(a.space(), rot.clone()).unwrap(),
            k: 1,
            skew_certified: true,
        };
        let omega = derivation_to_cocycle(&a, &d).unwrap();
        assert_eq!(omega.value(&[0, 1]), vec![q(1)]);
        let back = cocycle_to_derivation(&a, &omega).unwrap();
        assert_eq!(back.map.matrix, rot);
        assert_eq!(scalar_cocycle_space(&a, &zero).unwrap().len(), 1);
    }
}
