//! Univariate polynomials over `GF(p^m)` and root finding.
//!
//! Roots are found by isolating the linear part with `gcd(f, x^q - x)` and
//! then splitting it by equal-degree factorization with a deterministic
//! sequence of splitting elements, so the same input always yields the same
//! roots in the same order.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::{FieldSpec, Scalar};

/// Coefficients, constant term first, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(pub Vec<Scalar>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: Scalar) -> Self {
        Poly(vec![c]).trimmed()
    }

    /// `x - root`.
    pub fn linear(f: &FieldSpec, root: Scalar) -> Self {
        Poly(vec![f.neg(root), Scalar::ONE])
    }

    pub fn x() -> Self {
        Poly(vec![Scalar::ZERO, Scalar::ONE])
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.0.last().copied().unwrap_or(Scalar::ZERO)
    }

    pub fn eval(&self, f: &FieldSpec, x: Scalar) -> Scalar {
        self.0
            .iter()
            .rev()
            .fold(Scalar::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn add(&self, f: &FieldSpec, other: &Poly) -> Poly {
        let mut out = vec![Scalar::ZERO; self.0.len().max(other.0.len())];
        for (i, &c) in self.0.iter().enumerate() {
            out[i] = c;
        }
        for (i, &c) in other.0.iter().enumerate() {
            out[i] = f.add(out[i], c);
        }
        Poly(out).trimmed()
    }

    pub fn sub(&self, f: &FieldSpec, other: &Poly) -> Poly {
        let neg = Poly(other.0.iter().map(|&c| f.neg(c)).collect());
        self.add(f, &neg)
    }

    pub fn mul(&self, f: &FieldSpec, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::ZERO; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            f.axpy(&mut out[i..i + other.0.len()], a, &other.0);
        }
        Poly(out).trimmed()
    }

    pub fn scale(&self, f: &FieldSpec, c: Scalar) -> Poly {
        Poly(self.0.iter().map(|&a| f.mul(a, c)).collect()).trimmed()
    }

    pub fn monic(&self, f: &FieldSpec) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = f.inv(self.lead()).expect("nonzero leading coefficient");
        self.scale(f, inv)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, f: &FieldSpec, divisor: &Poly) -> (Poly, Poly) {
        let db = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = f.inv(divisor.lead()).expect("nonzero leading coefficient");
        let mut rem = self.0.clone();
        if rem.len() <= db {
            return (Poly::zero(), Poly(rem).trimmed());
        }
        let mut quot = vec![Scalar::ZERO; rem.len() - db];
        for shift in (0..quot.len()).rev() {
            let top = rem[shift + db];
            if top.is_zero() {
                continue;
            }
            let c = f.mul(top, lead_inv);
            quot[shift] = c;
            f.axpy(&mut rem[shift..=shift + db], f.neg(c), &divisor.0);
        }
        rem.truncate(db);
        (Poly(quot).trimmed(), Poly(rem).trimmed())
    }

    pub fn rem(&self, f: &FieldSpec, divisor: &Poly) -> Poly {
        self.div_rem(f, divisor).1
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, f: &FieldSpec, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, f: &FieldSpec, mut e: u64, modulus: &Poly) -> Poly {
        let mut result = Poly::constant(Scalar::ONE).rem(f, modulus);
        let mut base = self.rem(f, modulus);
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(f, &base).rem(f, modulus);
            }
            base = base.mul(f, &base).rem(f, modulus);
            e >>= 1;
        }
        result
    }

    /// Distinct roots in the field, sorted by code.
    pub fn roots(&self, f: &FieldSpec) -> Vec<Scalar> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        let g = self.monic(f);
        let xq = Poly::x().pow_mod(f, f.order() as u64, &g);
        let linear_part = g.gcd(f, &xq.sub(f, &Poly::x()));
        let mut roots = Vec::new();
        split_linear(f, linear_part, &mut roots);
        roots.sort();
        roots
    }
}

/// Splits a monic product of distinct linear factors into its roots.
fn split_linear(f: &FieldSpec, g: Poly, out: &mut Vec<Scalar>) {
    match g.degree() {
        None | Some(0) => return,
        Some(1) => {
            out.push(f.neg(g.0[0]));
            return;
        }
        _ => {}
    }
    let deg = g.degree().unwrap();
    for a in f.elements() {
        let probe = splitting_probe(f, a, &g);
        let h = g.gcd(f, &probe);
        if let Some(dh) = h.degree() {
            if dh > 0 && dh < deg {
                let (other, _) = g.div_rem(f, &h);
                split_linear(f, h, out);
                split_linear(f, other.monic(f), out);
                return;
            }
        }
    }
    unreachable!("no splitting element for a product of distinct linear factors")
}

/// Odd `q`: `(x + a)^((q-1)/2) - 1`. Even `q`: the absolute trace of `a x`.
fn splitting_probe(f: &FieldSpec, a: Scalar, g: &Poly) -> Poly {
    if f.characteristic() == 2 {
        let base = Poly(vec![Scalar::ZERO, a]).rem(f, g);
        let mut term = base.clone();
        let mut acc = base;
        for _ in 1..f.degree() {
            term = term.mul(f, &term).rem(f, g);
            acc = acc.add(f, &term);
        }
        acc
    } else {
        let shifted = Poly(vec![a, Scalar::ONE]);
        shifted
            .pow_mod(f, (f.order() as u64 - 1) / 2, g)
            .sub(f, &Poly::constant(Scalar::ONE))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_roots(f: &FieldSpec, roots: &[Scalar]) -> Poly {
        roots
            .iter()
            .fold(Poly::constant(Scalar::ONE), |acc, &r| acc.mul(f, &Poly::linear(f, r)))
    }

    #[test]
    fn div_rem_reconstructs() {
        let f = FieldSpec::new(3, 2).unwrap();
        let a = Poly(vec![Scalar(1), Scalar(5), Scalar(7), Scalar(2), Scalar(4)]);
        let b = Poly(vec![Scalar(2), Scalar(0), Scalar(1)]);
        let (q, r) = a.div_rem(&f, &b);
        assert_eq!(q.mul(&f, &b).add(&f, &r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn roots_of_split_polynomials() {
        for (p, m) in [(2, 1), (2, 4), (2, 6), (3, 1), (3, 4), (5, 1)] {
            let f = FieldSpec::new(p, m).unwrap();
            let q = f.order();
            let chosen: Vec<Scalar> = (0..q).step_by((q as usize / 5).max(1)).map(Scalar).collect();
            let poly = from_roots(&f, &chosen);
            assert_eq!(poly.roots(&f), chosen, "GF({p}^{m})");
        }
    }

    #[test]
    fn repeated_and_irreducible_factors_are_ignored() {
        let f = FieldSpec::new(2, 1).unwrap();
        // x^2 (x^2 + x + 1): only the root 0.
        let poly = Poly(vec![Scalar(0), Scalar(0), Scalar(1), Scalar(1), Scalar(1)]);
        assert_eq!(poly.roots(&f), vec![Scalar(0)]);
        // Over GF(4) the quadratic splits.
        let f4 = FieldSpec::new(2, 2).unwrap();
        let quad = Poly(vec![Scalar(1), Scalar(1), Scalar(1)]);
        let roots = quad.roots(&f4);
        assert_eq!(roots.len(), 2);
        for r in roots {
            assert!(quad.eval(&f4, r).is_zero());
        }
    }
}
