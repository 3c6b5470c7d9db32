//! Reduced row echelon subspaces of `GF(q)^n`.
//!
//! Pivots are the lowest nonzero positions, normalized to 1, and rows are
//! kept sorted by pivot with every pivot column cleared in the other rows.
//! The basis is therefore a canonical function of the subspace.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    len: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(len: usize) -> Self {
        Subspace { len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(len: usize) -> Self {
        let rows = (0..len)
            .map(|i| {
                let mut v = vec![Scalar::ZERO; len];
                v[i] = Scalar::ONE;
                v
            })
            .collect();
        Subspace { len, rows, pivots: (0..len).collect() }
    }

    pub fn from_vectors<I, V>(f: &FieldSpec, len: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[Scalar]>,
    {
        let mut s = Subspace::zero(len);
        for v in vectors {
            s.insert(f, v.as_ref());
        }
        s
    }

    /// Ambient dimension.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Positions that are not pivots, ascending; the unit vectors there span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.len];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.len).filter(|&i| !is_pivot[i]).collect()
    }

    /// Reduces `v` in place modulo the subspace; the result is zero on every pivot column.
    pub fn reduce_in_place(&self, f: &FieldSpec, v: &mut [Scalar]) {
        debug_assert_eq!(v.len(), self.len);
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if !c.is_zero() {
                f.axpy(&mut v[pc..], f.neg(c), &row[pc..]);
            }
        }
    }

    pub fn reduce(&self, f: &FieldSpec, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        self.reduce_in_place(f, &mut w);
        w
    }

    pub fn contains(&self, f: &FieldSpec, v: &[Scalar]) -> bool {
        self.reduce(f, v).iter().all(|c| c.is_zero())
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, f: &FieldSpec, v: &[Scalar]) -> bool {
        let mut w = self.reduce(f, v);
        self.insert_reduced(f, &mut w)
    }

    /// Like [`insert`](Self::insert) for a vector that is already reduced.
    fn insert_reduced(&mut self, f: &FieldSpec, w: &mut Vec<Scalar>) -> bool {
        let Some(pc) = w.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = f.inv(w[pc]).expect("pivot is nonzero");
        f.scale(&mut w[pc..], inv);
        for row in &mut self.rows {
            let c = row[pc];
            if !c.is_zero() {
                f.axpy(&mut row[pc..], f.neg(c), &w[pc..]);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, core::mem::take(w));
        true
    }

    /// Coordinates of a member with respect to [`rows`](Self::rows).
    pub fn coordinates(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.pivots.iter().map(|&p| v[p]).collect()
    }

    pub fn sum(&self, f: &FieldSpec, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(f, r);
        }
        s
    }

    /// `U ∩ V` by Zassenhaus: echelonize `(u | u)` and `(v | 0)`, keep the
    /// right halves of rows whose left half vanished.
    pub fn intersect(&self, f: &FieldSpec, other: &Subspace) -> Subspace {
        let n = self.len;
        let mut big = Subspace::zero(2 * n);
        for u in &self.rows {
            let mut row = u.clone();
            row.extend_from_slice(u);
            big.insert(f, &row);
        }
        for v in &other.rows {
            let mut row = v.clone();
            row.resize(2 * n, Scalar::ZERO);
            big.insert(f, &row);
        }
        Subspace::from_vectors(
            f,
            n,
            big.rows
                .iter()
                .zip(&big.pivots)
                .filter(|(_, &p)| p >= n)
                .map(|(r, _)| r[n..].to_vec()),
        )
    }

    /// Whether `self ⊆ other`.
    pub fn is_subspace_of(&self, f: &FieldSpec, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(f, r))
    }
}

/// All `c` with `Σ c_i rows[i] = 0`, as a subspace of `GF(q)^{rows.len()}`.
pub fn left_kernel(f: &FieldSpec, rows: &[Vec<Scalar>]) -> Subspace {
    let k = rows.len();
    // Echelon basis of the row space, each row carrying the combination that produced it.
    let mut basis: Vec<(usize, Vec<Scalar>, Vec<Scalar>)> = Vec::new();
    let mut kernel = Subspace::zero(k);
    for (i, row) in rows.iter().enumerate() {
        let mut v = row.clone();
        let mut comb = vec![Scalar::ZERO; k];
        comb[i] = Scalar::ONE;
        for (pc, brow, bcomb) in &basis {
            let c = v[*pc];
            if !c.is_zero() {
                let nc = f.neg(c);
                f.axpy(&mut v[*pc..], nc, &brow[*pc..]);
                f.axpy(&mut comb, nc, bcomb);
            }
        }
        match v.iter().position(|c| !c.is_zero()) {
            None => {
                kernel.insert(f, &comb);
            }
            Some(pc) => {
                let inv = f.inv(v[pc]).expect("pivot is nonzero");
                f.scale(&mut v, inv);
                f.scale(&mut comb, inv);
                basis.push((pc, v, comb));
            }
        }
    }
    kernel
}

/// Rank of a list of vectors.
pub fn rank(f: &FieldSpec, len: usize, vectors: &[Vec<Scalar>]) -> usize {
    Subspace::from_vectors(f, len, vectors).dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn field(p: u32, m: u32) -> FieldSpec {
        FieldSpec::new(p, m).unwrap()
    }

    fn vectors(q: u32, len: usize, count: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
        proptest::collection::vec(proptest::collection::vec((0..q).prop_map(Scalar), len), 0..count)
    }

    #[test]
    fn duplicates_and_identity() {
        let f = field(3, 1);
        let x = vec![Scalar(1), Scalar(2), Scalar(0)];
        let s = Subspace::from_vectors(&f, 3, [&x, &x]);
        assert_eq!(s.dim(), 1);
        let one = vec![Scalar(1), Scalar(0), Scalar(0)];
        assert!(Subspace::from_vectors(&f, 3, [&one]).contains(&f, &one));
        assert_eq!(s.non_pivots(), vec![1, 2]);
    }

    #[test]
    fn kernel_of_dependent_rows() {
        let f = field(2, 2);
        let a = vec![Scalar(1), Scalar(2), Scalar(3)];
        let b = vec![Scalar(0), Scalar(1), Scalar(1)];
        let mut c = a.clone();
        f.axpy(&mut c, Scalar(3), &b);
        let k = left_kernel(&f, &[a.clone(), b.clone(), c.clone()]);
        assert_eq!(k.dim(), 1);
        let comb = &k.rows()[0];
        let mut total = vec![Scalar::ZERO; 3];
        for (coef, row) in comb.iter().zip([&a, &b, &c]) {
            f.axpy(&mut total, *coef, row);
        }
        assert!(total.iter().all(|x| x.is_zero()));
    }

    proptest! {
        #[test]
        fn dimension_formula(u in vectors(4, 6, 5), v in vectors(4, 6, 5)) {
            let f = field(2, 2);
            let su = Subspace::from_vectors(&f, 6, &u);
            let sv = Subspace::from_vectors(&f, 6, &v);
            let sum = su.sum(&f, &sv);
            let meet = su.intersect(&f, &sv);
            prop_assert_eq!(sum.dim() + meet.dim(), su.dim() + sv.dim());
            prop_assert!(meet.is_subspace_of(&f, &su) && meet.is_subspace_of(&f, &sv));
        }

        #[test]
        fn echelon_form_is_canonical(u in vectors(3, 5, 6), seed in 0u64..1000) {
            let f = field(3, 1);
            let s = Subspace::from_vectors(&f, 5, &u);
            let mut shuffled = u.clone();
            let n = shuffled.len();
            if n > 1 {
                shuffled.rotate_left(seed as usize % n);
                shuffled.reverse();
            }
            prop_assert_eq!(&Subspace::from_vectors(&f, 5, &shuffled), &s);
            prop_assert_eq!(&Subspace::from_vectors(&f, 5, s.rows()), &s);
            for r in s.rows() {
                prop_assert_eq!(s.reduce(&f, r), vec![Scalar::ZERO; 5]);
            }
        }

        #[test]
        fn kernel_dimension(rows in vectors(5, 4, 7)) {
            let f = field(5, 1);
            let k = left_kernel(&f, &rows);
            prop_assert_eq!(k.dim() + rank(&f, 4, &rows), rows.len());
        }
    }
}
