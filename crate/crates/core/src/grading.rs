//! Finitely generated abelian grading groups and commutation factors.
//!
//! A group is presented as `ℤ^r × ℤ_{n₁} × … × ℤ_{n_t}`; its elements are
//! integer coordinate vectors with torsion coordinates kept in `[0, nᵢ)`.
//! A [`Bicharacter`] is determined by its values on pairs of generators and
//! extended multiplicatively.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{format_rational, pow, Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("torsion order {0} is smaller than 2")]
    BadOrder(i64),
    #[error("expected {expected} coordinates, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("bicharacter table must be {expected}x{expected}")]
    BadShape { expected: usize },
    #[error("bicharacter entry ({0},{1}) is zero")]
    ZeroEntry(usize, usize),
    #[error("not a bicharacter: identity ({identity}) fails on generators ({a},{b})")]
    NotBicharacter {
        identity: u8,
        a: usize,
        b: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradingGroup {
    pub free_rank: usize,
    #[serde(rename = "torsion")]
    pub torsion_orders: Vec<i64>,
}

/// Degree vector. Only meaningful together with the group it came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(pub Vec<i64>);

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl GradingGroup {
    pub fn new(free_rank: usize, torsion_orders: Vec<i64>) -> Result<Self, GradingError> {
        if let Some(&bad) = torsion_orders.iter().find(|&&n| n < 2) {
            return Err(GradingError::BadOrder(bad));
        }
        Ok(GradingGroup {
            free_rank,
            torsion_orders,
        })
    }

    pub fn trivial() -> Self {
        GradingGroup {
            free_rank: 0,
            torsion_orders: Vec::new(),
        }
    }

    pub fn z2() -> Self {
        GradingGroup {
            free_rank: 0,
            torsion_orders: vec![2],
        }
    }

    /// Number of coordinates (and of generators).
    pub fn arity(&self) -> usize {
        self.free_rank + self.torsion_orders.len()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of generator `i`, `None` for a free generator.
    pub fn generator_order(&self, i: usize) -> Option<i64> {
        i.checked_sub(self.free_rank)
            .map(|t| self.torsion_orders[t])
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.arity()])
    }

    pub fn generator(&self, i: usize) -> GroupElement {
        let mut v = vec![0; self.arity()];
        v[i] = 1;
        GroupElement(v)
    }

    fn check_arity(&self, g: &GroupElement) -> Result<(), GradingError> {
        if g.0.len() != self.arity() {
            return Err(GradingError::ArityMismatch {
                expected: self.arity(),
                got: g.0.len(),
            });
        }
        Ok(())
    }

    /// Reduces torsion coordinates into their canonical residues.
    pub fn element(&self, coords: Vec<i64>) -> Result<GroupElement, GradingError> {
        let mut g = GroupElement(coords);
        self.check_arity(&g)?;
        for (t, n) in self.torsion_orders.iter().enumerate() {
            let c = &mut g.0[self.free_rank + t];
            *c = c.rem_euclid(*n);
        }
        Ok(g)
    }

    pub fn is_canonical(&self, g: &GroupElement) -> bool {
        g.0.len() == self.arity()
            && self
                .torsion_orders
                .iter()
                .enumerate()
                .all(|(t, n)| (0..*n).contains(&g.0[self.free_rank + t]))
    }

    pub fn add(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement, GradingError> {
        self.check_arity(g)?;
        self.check_arity(h)?;
        self.element(g.0.iter().zip(&h.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self, g: &GroupElement) -> Result<GroupElement, GradingError> {
        self.check_arity(g)?;
        self.element(g.0.iter().map(|a| -a).collect())
    }

    pub fn sub(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement, GradingError> {
        self.add(g, &self.neg(h)?)
    }

    /// All elements of a finite group in lexicographic order.
    pub fn elements(&self) -> Option<Vec<GroupElement>> {
        if !self.is_finite() {
            return None;
        }
        let mut out = vec![Vec::new()];
        for &n in &self.torsion_orders {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<i64>| {
                    (0..n).map(move |c| {
                        let mut p = prefix.clone();
                        p.push(c);
                        p
                    })
                })
                .collect();
        }
        Some(out.into_iter().map(GroupElement).collect())
    }
}

/// Commutation factor ε on a grading group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bicharacter {
    group: GradingGroup,
    gen_table: Vec<Vec<Q>>,
}

impl Bicharacter {
    /// Validates a generator table.
    ///
    /// Checks are ordered: shape, nonzero entries, the torsion constraints
    /// coming from additivity in the second slot (2) and first slot (3), and
    /// finally `ε(a,b)ε(b,a) = 1` (1).
    pub fn new(group: GradingGroup, gen_table: Vec<Vec<Q>>) -> Result<Self, GradingError> {
        let k = group.arity();
        if gen_table.len() != k || gen_table.iter().any(|r| r.len() != k) {
            return Err(GradingError::BadShape { expected: k });
        }
        for (i, row) in gen_table.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if v.is_zero() {
                    return Err(GradingError::ZeroEntry(i, j));
                }
            }
        }
        // n·g_j = 0 forces ε(g_i, g_j)^n = ε(g_i, 0) = 1.
        for j in 0..k {
            if let Some(n) = group.generator_order(j) {
                for (i, row) in gen_table.iter().enumerate() {
                    if !pow(&row[j], n).is_one() {
                        return Err(GradingError::NotBicharacter { identity: 2, a: i, b: j });
                    }
                }
            }
        }
        for i in 0..k {
            if let Some(n) = group.generator_order(i) {
                for j in 0..k {
                    if !pow(&gen_table[i][j], n).is_one() {
                        return Err(GradingError::NotBicharacter { identity: 3, a: i, b: j });
                    }
                }
            }
        }
        for i in 0..k {
            for j in i..k {
                if !(&gen_table[i][j] * &gen_table[j][i]).is_one() {
                    return Err(GradingError::NotBicharacter { identity: 1, a: i, b: j });
                }
            }
        }
        Ok(Bicharacter { group, gen_table })
    }

    /// The trivial factor `ε ≡ 1` on the trivial group.
    pub fn trivial() -> Self {
        Bicharacter {
            group: GradingGroup::trivial(),
            gen_table: Vec::new(),
        }
    }

    /// `ℤ₂` with `ε(1̄,1̄) = −1`.
    pub fn super_sign() -> Self {
        Bicharacter {
            group: GradingGroup::z2(),
            gen_table: vec![vec![-Q::one()]],
        }
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn gen_table(&self) -> &[Vec<Q>] {
        &self.gen_table
    }

    pub fn eps(&self, a: &GroupElement, b: &GroupElement) -> Result<Q, GradingError> {
        self.group.check_arity(a)?;
        self.group.check_arity(b)?;
        Ok(self.eps_unchecked(a, b))
    }

    /// `ε(a,b)` without arity checks; callers guarantee degrees come from
    /// this group.
    pub(crate) fn eps_unchecked(&self, a: &GroupElement, b: &GroupElement) -> Q {
        let mut acc = Q::one();
        for (i, &ai) in a.0.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.0.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let v = &self.gen_table[i][j];
                if v.is_one() {
                    continue;
                }
                acc *= pow(v, ai * bj);
            }
        }
        acc
    }

    /// Generator table in canonical text form.
    pub fn table_strings(&self) -> Vec<Vec<String>> {
        self.gen_table
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect()
    }
}

/// Precomputed `ε(left_i, right_j)` for two lists of degrees.
#[derive(Debug, Clone)]
pub struct EpsTable {
    cols: usize,
    values: Vec<Q>,
}

impl EpsTable {
    pub fn new(bc: &Bicharacter, left: &[GroupElement], right: &[GroupElement]) -> Self {
        let mut values = Vec::with_capacity(left.len() * right.len());
        for a in left {
            for b in right {
                values.push(bc.eps_unchecked(a, b));
            }
        }
        EpsTable {
            cols: right.len(),
            values,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.values[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    #[test]
    fn make_group_examples() {
        let z2 = GradingGroup::new(0, vec![2]).unwrap();
        assert_eq!(z2.arity(), 1);
        let triv = GradingGroup::new(0, vec![]).unwrap();
        assert_eq!(triv.arity(), 0);
        assert_eq!(triv.elements().unwrap().len(), 1);
        let klein = GradingGroup::new(0, vec![2, 2]).unwrap();
        assert_eq!(klein.elements().unwrap().len(), 4);
        assert_eq!(GradingGroup::new(1, vec![1]), Err(GradingError::BadOrder(1)));
    }

    #[test]
    fn add_examples() {
        let z2 = GradingGroup::z2();
        let one = GroupElement(vec![1]);
        assert_eq!(z2.add(&one, &one).unwrap(), GroupElement(vec![0]));
        let klein = GradingGroup::new(0, vec![2, 2]).unwrap();
        assert_eq!(
            klein.add(&GroupElement(vec![1, 0]), &GroupElement(vec![0, 1])).unwrap(),
            GroupElement(vec![1, 1])
        );
        let z = GradingGroup::new(1, vec![]).unwrap();
        assert_eq!(
            z.add(&GroupElement(vec![2]), &GroupElement(vec![-2])).unwrap(),
            GroupElement(vec![0])
        );
        assert!(matches!(
            z.add(&GroupElement(vec![1, 0]), &GroupElement(vec![1])),
            Err(GradingError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn bicharacter_examples() {
        let sup = Bicharacter::new(GradingGroup::z2(), vec![vec![q(-1)]]).unwrap();
        let one = GroupElement(vec![1]);
        let zero = GroupElement(vec![0]);
        assert_eq!(sup.eps(&one, &one).unwrap(), q(-1));
        assert_eq!(sup.eps(&one, &zero).unwrap(), q(1));

        assert_eq!(
            Bicharacter::new(GradingGroup::z2(), vec![vec![q(2)]]),
            Err(GradingError::NotBicharacter { identity: 2, a: 0, b: 0 })
        );

        let z = GradingGroup::new(1, vec![]).unwrap();
        let bc = Bicharacter::new(z, vec![vec![qf(1, 2)]]);
        // (1/2)·(1/2) ≠ 1
        assert_eq!(bc, Err(GradingError::NotBicharacter { identity: 1, a: 0, b: 0 }));
    }

    #[test]
    fn free_factor_with_inverse_pair() {
        let z2 = GradingGroup::new(2, vec![]).unwrap();
        let bc = Bicharacter::new(z2, vec![vec![q(1), qf(1, 2)], vec![q(2), q(1)]]).unwrap();
        let a = GroupElement(vec![2, 0]);
        let b = GroupElement(vec![0, 3]);
        assert_eq!(bc.eps(&a, &b).unwrap(), qf(1, 64));
        assert_eq!(bc.eps(&b, &a).unwrap(), q(64));
    }

    #[test]
    fn rejects_shape_and_zero() {
        assert_eq!(
            Bicharacter::new(GradingGroup::z2(), vec![]),
            Err(GradingError::BadShape { expected: 1 })
        );
        assert_eq!(
            Bicharacter::new(GradingGroup::z2(), vec![vec![q(0)]]),
            Err(GradingError::ZeroEntry(0, 0))
        );
    }
}
