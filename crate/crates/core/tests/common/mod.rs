//! Fixtures and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use num_traits::{One, Zero};
use qchl::algebra::{ColorHomAlgebra, GradedSpace, Kind, StructureConstants};
use qchl::catalog;
use qchl::constructions::commutator_algebra;
use qchl::grading::{Bicharacter, GroupElement};
use qchl::linalg::RatMatrix;
use qchl::rational::{q, Q};
use qchl::representations::Representation;

pub fn trivial_space(names: &[&str]) -> GradedSpace {
    GradedSpace::even(&Bicharacter::trivial(), names)
}

fn lie(names: &[&str], brackets: &[(usize, usize, usize, i64)]) -> ColorHomAlgebra {
    let n = names.len();
    let mut br = StructureConstants::zero(n);
    for &(i, j, k, c) in brackets {
        br.set(i, j, vec![(k, q(c))]).unwrap();
        br.set(j, i, vec![(k, q(-c))]).unwrap();
    }
    ColorHomAlgebra::new(trivial_space(names), br, RatMatrix::identity(n), None, Kind::Lie).unwrap()
}

/// Abelian Lie algebra `ℚⁿ` with identity twist.
pub fn abelian(n: usize) -> ColorHomAlgebra {
    let names: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    lie(&refs, &[])
}

/// `[e1,e2] = e3`.
pub fn heisenberg() -> ColorHomAlgebra {
    lie(&["e1", "e2", "e3"], &[(0, 1, 2, 1)])
}

/// `[e1,e2] = e2`, `[e1,e3] = e3`; not unimodular, so it has non-cocycles.
pub fn book() -> ColorHomAlgebra {
    let mut br = StructureConstants::zero(3);
    br.set(0, 1, vec![(1, q(1))]).unwrap();
    br.set(1, 0, vec![(1, q(-1))]).unwrap();
    br.set(0, 2, vec![(2, q(1))]).unwrap();
    br.set(2, 0, vec![(2, q(-1))]).unwrap();
    ColorHomAlgebra::new(
        trivial_space(&["e1", "e2", "e3"]),
        br,
        RatMatrix::identity(3),
        None,
        Kind::Lie,
    )
    .unwrap()
}

/// One-dimensional Lie algebra `𝕂`.
pub fn line() -> ColorHomAlgebra {
    lie(&["t"], &[])
}

/// `M₂(ℚ)` on `E11,E12,E21,E22` with identity twist and trace form.
pub fn m2() -> ColorHomAlgebra {
    let mut mu = StructureConstants::zero(4);
    let idx = |r: usize, c: usize| 2 * r + c;
    for a in 0..2 {
        for b in 0..2 {
            for d in 0..2 {
                mu.set(idx(a, b), idx(b, d), vec![(idx(a, d), q(1))]).unwrap();
            }
        }
    }
    let mut g = RatMatrix::zeros(4, 4);
    for a in 0..2 {
        for b in 0..2 {
            g.set(idx(a, b), idx(b, a), q(1));
        }
    }
    ColorHomAlgebra::new(
        trivial_space(&["E11", "E12", "E21", "E22"]),
        mu,
        RatMatrix::identity(4),
        Some(g),
        Kind::Associative,
    )
    .unwrap()
}

/// Lie-type algebras from the catalog at defaults, plus commutator algebras
/// of the associative entries, labelled.
pub fn catalog_lie_algebras() -> Vec<(String, ColorHomAlgebra)> {
    let mut out = Vec::new();
    for e in catalog::ENTRIES {
        let a = catalog::build_default(e.id).unwrap();
        if a.kind() == Kind::Lie {
            out.push((e.id.to_string(), a));
        } else {
            out.push((format!("commutator({})", e.id), commutator_algebra(&a).unwrap()));
        }
    }
    out
}

/// Catalog Lie-type algebras of dimension at most six, with a few extra
/// parameter choices.
pub fn small_catalog_algebras() -> Vec<(String, ColorHomAlgebra)> {
    let mut out: Vec<_> = catalog_lie_algebras()
        .into_iter()
        .filter(|(_, a)| a.dim() <= 6)
        .collect();
    out.push((
        "sl2_hom(2,3,0,0,0,0)".into(),
        catalog::sl2_hom(&q(2), &q(3), &q(0), &q(0), &q(0), &q(0)),
    ));
    out.push((
        "sl2_hom(1,1,1,1,1,1)".into(),
        catalog::sl2_hom(&q(1), &q(1), &q(1), &q(1), &q(1), &q(1)),
    ));
    out.push((
        "nilpotent_L(1,1,1,0,0,1)".into(),
        catalog::nilpotent_l(&q(1), &q(1), &q(1), &q(0), &q(0), &q(1)).unwrap(),
    ));
    out.push((
        "nilpotent_L(0,2,2,1,1,3)".into(),
        catalog::nilpotent_l(&q(0), &q(2), &q(2), &q(1), &q(1), &q(3)).unwrap(),
    ));
    out
}

pub fn degrees(a: &ColorHomAlgebra) -> Vec<GroupElement> {
    a.bc().group().elements().expect("finite grading group")
}

// ---------------------------------------------------------------------------
// Dense linear algebra, kept separate from the library's elimination code.

/// Rank of a matrix given as rows.
pub fn dense_rank(rows: &[Vec<Q>]) -> usize {
    rref(rows.to_vec()).1.len()
}

fn rref(mut m: Vec<Vec<Q>>) -> (Vec<Vec<Q>>, Vec<usize>) {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Q::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let s = &f * &m[r][j];
                    m[i][j] -= s;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

/// Basis of `{x : Ax = 0}` for `A` given as rows of length `width`.
pub fn dense_kernel(rows: &[Vec<Q>], width: usize) -> Vec<Vec<Q>> {
    let (m, pivots) = rref(rows.to_vec());
    let free: Vec<usize> = (0..width).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); width];
            v[f] = Q::one();
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// `M·v` for `M` given by rows.
fn apply_rows(rows: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    rows.iter()
        .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

fn transpose(cols: &[Vec<Q>], len: usize) -> Vec<Vec<Q>> {
    (0..len).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
}

fn rank_of_columns(cols: &[Vec<Q>], len: usize) -> usize {
    if cols.is_empty() {
        return 0;
    }
    dense_rank(&transpose(cols, len))
}

/// Basis of `span(u) ∩ span(w)` for independent column families.
fn intersection(u: &[Vec<Q>], w: &[Vec<Q>], len: usize) -> Vec<Vec<Q>> {
    if u.is_empty() || w.is_empty() {
        return vec![];
    }
    let mut cols = u.to_vec();
    cols.extend(w.iter().map(|c| c.iter().map(|x| -x).collect::<Vec<_>>()));
    dense_kernel(&transpose(&cols, len), cols.len())
        .iter()
        .map(|k| {
            let mut v = vec![Q::zero(); len];
            for (c, coef) in u.iter().zip(k) {
                for (x, y) in v.iter_mut().zip(c) {
                    *x += coef * y;
                }
            }
            v
        })
        .collect()
}

fn independent(cols: &[Vec<Q>], len: usize) -> Vec<Vec<Q>> {
    let mut out: Vec<Vec<Q>> = Vec::new();
    for c in cols {
        let mut trial = out.clone();
        trial.push(c.clone());
        if rank_of_columns(&trial, len) > out.len() {
            out.push(c.clone());
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Oracles.

/// `K(x,y) = tr(ad x ∘ ad y)` from the structure constants.
pub fn killing_trace(a: &ColorHomAlgebra) -> Vec<Vec<Q>> {
    let n = a.dim();
    // ad[i][k][j] = coefficient of e_k in [e_i, e_j]
    let ad: Vec<Vec<Vec<Q>>> = (0..n)
        .map(|i| {
            let mut m = vec![vec![Q::zero(); n]; n];
            for j in 0..n {
                for (k, c) in a.bracket().get(i, j) {
                    m[*k][j] = c.clone();
                }
            }
            m
        })
        .collect();
    let mut k = vec![vec![Q::zero(); n]; n];
    for x in 0..n {
        for y in 0..n {
            let mut t = Q::zero();
            for r in 0..n {
                for s in 0..n {
                    t += &ad[x][r][s] * &ad[y][s][r];
                }
            }
            k[x][y] = t;
        }
    }
    k
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DenseCohomology {
    pub dim_c2: usize,
    pub dim_z2: usize,
    pub dim_b2: usize,
    pub dim_h2: usize,
}

/// Second cohomology by dense matrices on all ordered tuples, with the
/// cochain conditions imposed as explicit linear constraints.
pub fn dense_cohomology(a: &ColorHomAlgebra, rep: &Representation, d: &GroupElement) -> DenseCohomology {
    let n = a.dim();
    let m = rep.dim();
    let sp = a.space();
    let msp = rep.module();
    let alpha = a.alpha();
    let beta = rep.beta();
    let eps = |x: &GroupElement, y: &GroupElement| sp.eps(x, y);
    let deg = |i: usize| sp.degree(i).clone();
    let add = |x: &GroupElement, y: &GroupElement| sp.add_degrees(x, y);
    let len1 = n * m;
    let len2 = n * n * m;
    let len3 = n * n * n * m;
    let i1 = |i: usize, r: usize| i * m + r;
    let i2 = |i: usize, j: usize, r: usize| (i * n + j) * m + r;
    let rho = |i: usize, r: usize, s: usize| rep.rho_basis(i).get(r, s).clone();
    // ρ(α e_i)
    let rho_a: Vec<Vec<Vec<Q>>> = (0..n)
        .map(|i| {
            (0..m)
                .map(|r| {
                    (0..m)
                        .map(|s| (0..n).map(|p| alpha.get(p, i) * rho(p, r, s)).sum())
                        .collect()
                })
                .collect()
        })
        .collect();
    let br = |i: usize, j: usize| a.bracket().get_vec(i, j);

    // C¹ constraints
    let mut cons1 = Vec::new();
    for i in 0..n {
        let want = add(d, &deg(i));
        for r in 0..m {
            if msp.degree(r) != &want {
                let mut row = vec![Q::zero(); len1];
                row[i1(i, r)] = Q::one();
                cons1.push(row);
            }
            let mut row = vec![Q::zero(); len1];
            for p in 0..n {
                row[i1(p, r)] += alpha.get(p, i);
            }
            for s in 0..m {
                row[i1(i, s)] -= beta.get(r, s);
            }
            cons1.push(row);
        }
    }
    let c1 = dense_kernel(&cons1, len1);

    // C² constraints
    let mut cons2 = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let want = add(&add(d, &deg(i)), &deg(j));
            let e = eps(&deg(j), &deg(i));
            for r in 0..m {
                if msp.degree(r) != &want {
                    let mut row = vec![Q::zero(); len2];
                    row[i2(i, j, r)] = Q::one();
                    cons2.push(row);
                }
                let mut row = vec![Q::zero(); len2];
                row[i2(j, i, r)] += Q::one();
                row[i2(i, j, r)] += &e;
                cons2.push(row);
                let mut row = vec![Q::zero(); len2];
                for p in 0..n {
                    for qq in 0..n {
                        row[i2(p, qq, r)] += alpha.get(p, i) * alpha.get(qq, j);
                    }
                }
                for s in 0..m {
                    row[i2(i, j, s)] -= beta.get(r, s);
                }
                cons2.push(row);
            }
        }
    }
    let c2 = dense_kernel(&cons2, len2);

    // δ¹ as rows over V1
    let mut d1 = vec![vec![Q::zero(); len1]; len2];
    for i in 0..n {
        for j in 0..n {
            let e0 = eps(d, &deg(i));
            let e1 = eps(&add(d, &deg(i)), &deg(j));
            let bij = br(i, j);
            for r in 0..m {
                let row = &mut d1[i2(i, j, r)];
                for s in 0..m {
                    row[i1(j, s)] += &e0 * rho(i, r, s);
                    row[i1(i, s)] -= &e1 * rho(j, r, s);
                }
                for (k, c) in bij.iter().enumerate() {
                    row[i1(k, r)] -= c;
                }
            }
        }
    }

    // δ² as rows over V2
    let mut d2 = vec![vec![Q::zero(); len2]; len3];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let di = add(d, &deg(i));
                let dij = add(&di, &deg(j));
                let e0 = eps(d, &deg(i));
                let e1 = eps(&di, &deg(j));
                let e2 = eps(&dij, &deg(k));
                let ejk = eps(&deg(j), &deg(k));
                let (bij, bik, bjk) = (br(i, j), br(i, k), br(j, k));
                for r in 0..m {
                    let row = &mut d2[((i * n + j) * n + k) * m + r];
                    for s in 0..m {
                        row[i2(j, k, s)] += &e0 * &rho_a[i][r][s];
                        row[i2(i, k, s)] -= &e1 * &rho_a[j][r][s];
                        row[i2(i, j, s)] += &e2 * &rho_a[k][r][s];
                    }
                    for p in 0..n {
                        for qq in 0..n {
                            row[i2(p, qq, r)] -= &bij[p] * alpha.get(qq, k);
                            row[i2(p, qq, r)] += &ejk * &bik[p] * alpha.get(qq, j);
                            row[i2(p, qq, r)] += alpha.get(p, i) * &bjk[qq];
                        }
                    }
                }
            }
        }
    }

    let d2_on_c2: Vec<Vec<Q>> = c2.iter().map(|c| apply_rows(&d2, c)).collect();
    let coeffs = dense_kernel(&transpose(&d2_on_c2, len3), c2.len());
    let z2: Vec<Vec<Q>> = coeffs
        .iter()
        .map(|k| {
            let mut v = vec![Q::zero(); len2];
            for (c, coef) in c2.iter().zip(k) {
                for (x, y) in v.iter_mut().zip(c) {
                    *x += coef * y;
                }
            }
            v
        })
        .collect();
    let images: Vec<Vec<Q>> = c1.iter().map(|c| apply_rows(&d1, c)).collect();
    let images = independent(&images, len2);
    let b2 = intersection(&images, &c2, len2);
    let bz = intersection(&independent(&b2, len2), &z2, len2);
    DenseCohomology {
        dim_c2: c2.len(),
        dim_z2: z2.len(),
        dim_b2: b2.len(),
        dim_h2: z2.len() - bz.len(),
    }
}

/// `∏ λᵢⱼ^{aᵢbⱼ}` straight from a generator table.
pub fn eps_from_table(table: &[Vec<Q>], a: &[i64], b: &[i64]) -> Q {
    let mut acc = Q::one();
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            acc *= table[i][j].pow((ai * bj) as i32);
        }
    }
    acc
}

/// Which of `ε(a,b)ε(b,a)=1`, `ε(a,b+c)=ε(a,b)ε(a,c)`, `ε(a+b,c)=ε(a,c)ε(b,c)`
/// fail for `ε` given on the listed elements; `add` reduces sums.
pub fn violated_identities(
    elems: &[Vec<i64>],
    eps: &dyn Fn(&[i64], &[i64]) -> Q,
    add: &dyn Fn(&[i64], &[i64]) -> Vec<i64>,
) -> [bool; 3] {
    let mut memo = std::collections::HashMap::new();
    let mut eps = |a: &[i64], b: &[i64]| -> Q {
        memo.entry((a.to_vec(), b.to_vec())).or_insert_with(|| eps(a, b)).clone()
    };
    let mut bad = [false; 3];
    for a in elems {
        for b in elems {
            if eps(a, b) * eps(b, a) != Q::one() {
                bad[0] = true;
            }
            for c in elems {
                let bc = add(b, c);
                if eps(a, &bc) != eps(a, b) * eps(a, c) {
                    bad[1] = true;
                }
                let ab = add(a, b);
                if eps(&ab, c) != eps(a, c) * eps(b, c) {
                    bad[2] = true;
                }
            }
        }
    }
    bad
}
