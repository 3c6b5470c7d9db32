//! The group algebra `kG` with elements as dense coefficient vectors.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::field::{FieldSpec, Scalar};
use crate::group::FiniteGroup;
use crate::linalg::Subspace;

/// Coefficients indexed by element position in the group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgElement(pub Vec<Scalar>);

impl AlgElement {
    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Positions with a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i)
    }
}

impl AsRef<[Scalar]> for AlgElement {
    fn as_ref(&self) -> &[Scalar] {
        &self.0
    }
}

#[derive(Clone, Debug)]
pub struct AlgebraContext {
    group: Arc<FiniteGroup>,
    field: Arc<FieldSpec>,
    class_sums: Vec<AlgElement>,
}

impl AlgebraContext {
    pub fn new(group: Arc<FiniteGroup>, field: Arc<FieldSpec>) -> Self {
        let n = group.order();
        let class_sums = group
            .classes()
            .iter()
            .map(|class| {
                let mut v = vec![Scalar::ZERO; n];
                for &g in class {
                    v[g as usize] = Scalar::ONE;
                }
                AlgElement(v)
            })
            .collect();
        AlgebraContext { group, field, class_sums }
    }

    /// The same group over another field.
    pub fn with_field(&self, field: Arc<FieldSpec>) -> Self {
        AlgebraContext { group: self.group.clone(), field, class_sums: self.class_sums.clone() }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    pub fn zero(&self) -> AlgElement {
        AlgElement(vec![Scalar::ZERO; self.dim()])
    }

    pub fn one(&self) -> AlgElement {
        self.basis(0)
    }

    /// The group element at position `g` as an algebra element.
    pub fn basis(&self, g: u32) -> AlgElement {
        let mut x = self.zero();
        x.0[g as usize] = Scalar::ONE;
        x
    }

    pub fn add(&self, x: &AlgElement, y: &AlgElement) -> AlgElement {
        let mut out = x.clone();
        self.field.axpy(&mut out.0, Scalar::ONE, &y.0);
        out
    }

    pub fn sub(&self, x: &AlgElement, y: &AlgElement) -> AlgElement {
        let mut out = x.clone();
        self.field.axpy(&mut out.0, self.field.neg(Scalar::ONE), &y.0);
        out
    }

    pub fn scale(&self, x: &AlgElement, c: Scalar) -> AlgElement {
        let mut out = x.clone();
        self.field.scale(&mut out.0, c);
        out
    }

    /// Sum of the coefficients.
    pub fn augmentation(&self, x: &AlgElement) -> Scalar {
        x.0.iter().fold(Scalar::ZERO, |acc, &c| self.field.add(acc, c))
    }

    /// Convolution product: the coefficient of `g` in `xy` is `Σ_{uv=g} x_u y_v`.
    pub fn mul(&self, x: &AlgElement, y: &AlgElement) -> AlgElement {
        AlgElement(self.mul_slices(&x.0, &y.0))
    }

    pub fn mul_slices(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let f = &*self.field;
        let mut out = vec![Scalar::ZERO; n];
        let mut scratch = vec![Scalar::ZERO; n];
        for (u, &xu) in x.iter().enumerate() {
            if xu.is_zero() {
                continue;
            }
            // scratch = u * y, permuted into place, then accumulated.
            let row = self.group.row(u as u32);
            for (v, &yv) in y.iter().enumerate() {
                scratch[row[v] as usize] = yv;
            }
            f.axpy(&mut out, xu, &scratch);
        }
        out
    }

    /// `x * g` for a group element `g`.
    pub fn mul_group_right(&self, x: &[Scalar], g: u32) -> Vec<Scalar> {
        let mut out = vec![Scalar::ZERO; x.len()];
        for (u, &c) in x.iter().enumerate() {
            if !c.is_zero() {
                out[self.group.mul(u as u32, g) as usize] = c;
            }
        }
        out
    }

    /// `g * x` for a group element `g`.
    pub fn mul_group_left(&self, g: u32, x: &[Scalar]) -> Vec<Scalar> {
        let row = self.group.row(g);
        let mut out = vec![Scalar::ZERO; x.len()];
        for (u, &c) in x.iter().enumerate() {
            if !c.is_zero() {
                out[row[u] as usize] = c;
            }
        }
        out
    }

    pub fn class_sums(&self) -> &[AlgElement] {
        &self.class_sums
    }

    /// `Z(kG)`, spanned by the class sums.
    pub fn center_basis(&self) -> Subspace {
        Subspace::from_vectors(&self.field, self.dim(), &self.class_sums)
    }

    /// Whether `x` commutes with every generator, hence with all of `kG`.
    pub fn is_central(&self, x: &AlgElement) -> bool {
        self.group
            .generator_positions()
            .iter()
            .all(|&g| self.mul_group_left(g, &x.0) == self.mul_group_right(&x.0, g))
    }

    /// Span of all products `l * r` with `l` in `left` and `r` a basis row of `right`.
    pub fn product_span(&self, left: &[AlgElement], right: &Subspace) -> Subspace {
        let mut out = Subspace::zero(self.dim());
        for l in left {
            for r in right.rows() {
                out.insert(&self.field, &self.mul_slices(&l.0, r));
            }
        }
        out
    }

    /// Smallest subspace containing `seed` and closed under right
    /// multiplication by the group, i.e. the right ideal `seed * kG`.
    pub fn right_ideal(&self, seed: &[Vec<Scalar>]) -> Subspace {
        self.closure(seed, |v, g| self.mul_group_right(v, g))
    }

    /// The left ideal `kG * seed`.
    pub fn left_ideal(&self, seed: &[Vec<Scalar>]) -> Subspace {
        self.closure(seed, |v, g| self.mul_group_left(g, v))
    }

    fn closure(&self, seed: &[Vec<Scalar>], act: impl Fn(&[Scalar], u32) -> Vec<Scalar>) -> Subspace {
        let mut span = Subspace::zero(self.dim());
        self.extend_closure(&mut span, seed, act);
        span
    }

    fn extend_closure(
        &self,
        span: &mut Subspace,
        seed: &[Vec<Scalar>],
        act: impl Fn(&[Scalar], u32) -> Vec<Scalar>,
    ) {
        let f = &*self.field;
        let mut queue: Vec<Vec<Scalar>> = Vec::new();
        for v in seed {
            if span.insert(f, v) {
                queue.push(v.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for &g in self.group.generator_positions() {
                let w = act(&v, g);
                if span.insert(f, &w) {
                    queue.push(w);
                }
            }
        }
    }

    /// Grows the left ideal `span` by `kG * extra`.
    pub fn extend_left_ideal(&self, span: &mut Subspace, extra: &[Vec<Scalar>]) {
        self.extend_closure(span, extra, |v, g| self.mul_group_left(g, v));
    }
}
