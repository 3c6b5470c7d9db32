//! The Jacobson radical in characteristic `p`.
//!
//! Layered trace method: with `n` the dimension of the regular
//! representation and `l = ⌊log_p n⌋`, start from `I = A` and for
//! `i = 0..=l` replace `I` by the `x ∈ I` with `g_i(xy) = 0` for all `y`,
//! where `g_i(x) = (Tr(X^{p^i}) mod p^{i+1}) / p^i` for an integer lift `X`
//! of the regular matrix of `x`. Each `g_i` is linear on the previous `I`,
//! so every layer is one kernel computation, and the last `I` is `J(A)`.
//!
//! Everything runs over `GF(p)`; the radical over `GF(p^m)` is spanned by
//! the same vectors.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{internal, Result};
use crate::field::{FieldSpec, Scalar};
use crate::group::FiniteGroup;
use crate::linalg::{left_kernel, Subspace};

/// `⌊log_p n⌋`.
fn floor_log(n: usize, p: u32) -> u32 {
    let mut k = 0;
    let mut pk = p as u64;
    while pk <= n as u64 {
        pk *= p as u64;
        k += 1;
    }
    k
}

fn p_adic_valuation(mut n: u64, p: u32) -> u32 {
    let mut v = 0;
    while n > 0 && n % p as u64 == 0 {
        n /= p as u64;
        v += 1;
    }
    v
}

/// One refinement step shared by both variants: given the values `phi` of
/// `g_i` on the basis of `I`, returns the new `I`. `apply_w(b)` must return
/// the vector `(w(b a_k))_k` where `w` is `phi` placed on the pivot columns.
fn refine(
    fp: &FieldSpec,
    current: &Subspace,
    phi: &[u32],
    apply_w: impl Fn(&[Scalar], &[u32]) -> Vec<Scalar>,
) -> Subspace {
    if phi.iter().all(|&v| v == 0) {
        return current.clone();
    }
    let mut w = vec![0u32; current.len()];
    for (&pc, &v) in current.pivots().iter().zip(phi) {
        w[pc] = v;
    }
    let rows: Vec<Vec<Scalar>> = current.rows().iter().map(|b| apply_w(b, &w)).collect();
    let kernel = left_kernel(fp, &rows);
    let mut next = Subspace::zero(current.len());
    for comb in kernel.rows() {
        let mut v = vec![Scalar::ZERO; current.len()];
        for (c, b) in comb.iter().zip(current.rows()) {
            fp.axpy(&mut v, *c, b);
        }
        next.insert(fp, &v);
    }
    next
}

/// Turns `Tr(X^{p^i}) mod p^{i+1}` into `g_i`.
fn layer_value(trace: u64, i: u32, p: u32) -> Result<u32> {
    let pi = (p as u64).pow(i);
    if trace % pi != 0 {
        return Err(internal!("trace {trace} not divisible by {p}^{i} on the previous layer"));
    }
    Ok(((trace / pi) % p as u64) as u32)
}

/// Integer group-algebra product modulo `modulus`.
fn mul_mod(group: &FiniteGroup, a: &[u64], b: &[u64], modulus: u64) -> Vec<u64> {
    let n = a.len();
    let mut out = vec![0u64; n];
    for (u, &au) in a.iter().enumerate() {
        if au == 0 {
            continue;
        }
        let row = group.row(u as u32);
        for (v, &bv) in b.iter().enumerate() {
            out[row[v] as usize] += au * bv;
        }
        // Keep the accumulators bounded for large groups and moduli.
        if u % 1024 == 1023 {
            out.iter_mut().for_each(|x| *x %= modulus);
        }
    }
    out.iter_mut().for_each(|x| *x %= modulus);
    out
}

/// Identity coefficient of `a * b` modulo `modulus`.
fn identity_coefficient(group: &FiniteGroup, a: &[u64], b: &[u64], modulus: u64) -> u64 {
    a.iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .fold(0u64, |acc, (u, &x)| (acc + x * b[group.inverse(u as u32) as usize]) % modulus)
}

/// `J(GF(p)G)` as a subspace of `GF(p)^{|G|}`.
pub fn radical(group: &FiniteGroup, p: u32) -> Result<Subspace> {
    let fp = FieldSpec::new(p, 1)?;
    let n = group.order();
    if n % p as usize != 0 {
        return Ok(Subspace::zero(n));
    }
    let v = p_adic_valuation(n as u64, p);
    let mut current = Subspace::full(n);
    for i in 0..=floor_log(n, p) {
        // Tr(X) = n * (identity coefficient), so only the coefficient modulo
        // p^{i+1} / gcd(n, p^{i+1}) matters; when that is 1 the layer is trivial.
        if i + 1 <= v {
            continue;
        }
        let full_mod = (p as u64).pow(i + 1);
        let modulus = (p as u64).pow(i + 1 - v);
        let mut phi = Vec::with_capacity(current.dim());
        for b in current.rows() {
            let lifted: Vec<u64> = b.iter().map(|c| c.0 as u64).collect();
            let coeff = if i == 0 {
                lifted[0] % modulus
            } else {
                let mut y = lifted;
                for _ in 1..i {
                    y = pow_mod(group, &y, p, modulus);
                }
                let head = pow_mod(group, &y, p - 1, modulus);
                identity_coefficient(group, &head, &y, modulus)
            };
            let trace = (n as u64 % full_mod) * coeff % full_mod;
            phi.push(layer_value(trace, i, p)?);
        }
        current = refine(&fp, &current, &phi, |b, w| {
            let mut row = vec![Scalar::ZERO; n];
            for (u, &bu) in b.iter().enumerate() {
                if bu.is_zero() {
                    continue;
                }
                let prod = group.row(u as u32);
                for (g, r) in row.iter_mut().enumerate() {
                    let wv = w[prod[g] as usize];
                    if wv != 0 {
                        *r = Scalar((r.0 + bu.0 * wv) % p);
                    }
                }
            }
            row
        });
        if current.is_zero() {
            break;
        }
    }
    Ok(current)
}

fn pow_mod(group: &FiniteGroup, x: &[u64], e: u32, modulus: u64) -> Vec<u64> {
    let mut acc = x.to_vec();
    for _ in 1..e {
        acc = mul_mod(group, &acc, x, modulus);
    }
    acc
}

/// A finite-dimensional `GF(p)`-algebra given by structure constants:
/// `products[i * dim + j]` holds the coordinates of `a_i a_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    pub p: u32,
    pub dim: usize,
    pub products: Vec<Vec<u32>>,
}

impl StructureConstants {
    /// The group algebra `GF(p)G` in the group-element basis.
    pub fn group_algebra(group: &FiniteGroup, p: u32) -> Self {
        let n = group.order();
        let mut products = Vec::with_capacity(n * n);
        for a in 0..n as u32 {
            for b in 0..n as u32 {
                let mut v = vec![0u32; n];
                v[group.mul(a, b) as usize] = 1;
                products.push(v);
            }
        }
        StructureConstants { p, dim: n, products }
    }

    /// `GF(p)G / I` for a two-sided ideal `I`, in the basis of unit vectors
    /// at the non-pivot positions of `I`.
    pub fn quotient(group: &FiniteGroup, p: u32, ideal: &Subspace) -> Result<Self> {
        let fp = FieldSpec::new(p, 1)?;
        let n = group.order();
        let basis = ideal.non_pivots();
        let mut index = vec![usize::MAX; n];
        for (k, &g) in basis.iter().enumerate() {
            index[g] = k;
        }
        let mut products = Vec::with_capacity(basis.len() * basis.len());
        for &a in &basis {
            for &b in &basis {
                let mut v = vec![Scalar::ZERO; n];
                v[group.mul(a as u32, b as u32) as usize] = Scalar::ONE;
                ideal.reduce_in_place(&fp, &mut v);
                let mut coords = vec![0u32; basis.len()];
                for (g, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        coords[index[g]] = c.0;
                    }
                }
                products.push(coords);
            }
        }
        Ok(StructureConstants { p, dim: basis.len(), products })
    }

    /// Coordinates of `x * y`.
    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut out = vec![0u32; self.dim];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = xi * yj % p;
                for (o, &s) in out.iter_mut().zip(&self.products[i * self.dim + j]) {
                    *o = (*o + c * s) % p;
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `x` (column `j` is `x a_j`).
    fn left_matrix(&self, x: &[u32]) -> Vec<Vec<u64>> {
        let d = self.dim;
        let mut m = vec![vec![0u64; d]; d];
        for j in 0..d {
            let mut unit = vec![0u32; d];
            unit[j] = 1;
            for (k, v) in self.mul(x, &unit).into_iter().enumerate() {
                m[k][j] = v as u64;
            }
        }
        m
    }
}

fn mat_mul_mod(a: &[Vec<u64>], b: &[Vec<u64>], modulus: u64) -> Vec<Vec<u64>> {
    let d = a.len();
    let mut out = vec![vec![0u64; d]; d];
    for i in 0..d {
        for k in 0..d {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..d {
                out[i][j] = (out[i][j] + aik * b[k][j]) % modulus;
            }
        }
    }
    out
}

/// `J(A)` for an algebra given by structure constants.
pub fn radical_of(alg: &StructureConstants) -> Result<Subspace> {
    let p = alg.p;
    let fp = FieldSpec::new(p, 1)?;
    let d = alg.dim;
    let mut current = Subspace::full(d);
    if d == 0 {
        return Ok(current);
    }
    for i in 0..=floor_log(d, p) {
        let modulus = (p as u64).pow(i + 1);
        let mut phi = Vec::with_capacity(current.dim());
        for b in current.rows() {
            let x: Vec<u32> = b.iter().map(|c| c.0).collect();
            let mut m = alg.left_matrix(&x);
            for _ in 0..i {
                let base = m.clone();
                for _ in 1..p {
                    m = mat_mul_mod(&m, &base, modulus);
                }
            }
            let trace = (0..d).fold(0u64, |acc, k| (acc + m[k][k]) % modulus);
            phi.push(layer_value(trace, i, p)?);
        }
        current = refine(&fp, &current, &phi, |b, w| {
            let x: Vec<u32> = b.iter().map(|c| c.0).collect();
            (0..d)
                .map(|k| {
                    let mut unit = vec![0u32; d];
                    unit[k] = 1;
                    let prod = alg.mul(&x, &unit);
                    let v = prod.iter().zip(w).fold(0u32, |acc, (&a, &b)| (acc + a * b) % p);
                    Scalar(v)
                })
                .collect()
        });
        if current.is_zero() {
            break;
        }
    }
    Ok(current)
}

/// Checks that `j` is a two-sided ideal of `GF(p)G` whose quotient has
/// zero radical. Together with nilpotency of `j` this proves `j = J(GF(p)G)`.
pub fn certify_quotient(group: &FiniteGroup, p: u32, j: &Subspace) -> Result<bool> {
    let fp = FieldSpec::new(p, 1)?;
    for row in j.rows() {
        for &g in group.generator_positions() {
            let mut left = vec![Scalar::ZERO; row.len()];
            let mut right = vec![Scalar::ZERO; row.len()];
            for (u, &c) in row.iter().enumerate() {
                left[group.mul(g, u as u32) as usize] = c;
                right[group.mul(u as u32, g) as usize] = c;
            }
            if !j.contains(&fp, &left) || !j.contains(&fp, &right) {
                return Ok(false);
            }
        }
    }
    let quotient = StructureConstants::quotient(group, p, j)?;
    Ok(radical_of(&quotient)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::perm::{parse_cycles, Perm};
    use rand::{Rng, SeedableRng};

    fn group_from(degree: usize, gens: &[&str]) -> FiniteGroup {
        let perms: Vec<Perm> = gens
            .iter()
            .map(|g| Perm::from_cycles(degree, &parse_cycles(g).unwrap()).unwrap())
            .collect();
        FiniteGroup::close(degree, &perms).unwrap()
    }

    /// Every group of order at most 12 up to isomorphism, plus a few repeats.
    fn small_groups() -> Vec<(&'static str, FiniteGroup)> {
        let mut out: Vec<(&'static str, FiniteGroup)> = [
            "C1", "C2", "C3", "C4", "V4", "C5", "C6", "S3", "C7", "C8", "C4xC2", "E2^3", "D8",
            "Q8", "C9", "C3xC3", "C10", "D10", "C11", "C12", "C6xC2", "A4", "D12",
        ]
        .into_iter()
        .map(|name| (name, catalog::builtin(name).unwrap()))
        .collect();
        out.push(("Dic3", group_from(7, &["(1 2 3)", "(1 2)(4 5 6 7)"])));
        out
    }

    fn mul_fp(group: &FiniteGroup, p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; a.len()];
        for (u, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (v, &y) in b.iter().enumerate() {
                let g = group.mul(u as u32, v as u32) as usize;
                out[g] = (out[g] + x * y) % p;
            }
        }
        out
    }

    fn is_nilpotent(group: &FiniteGroup, p: u32, x: &[u32]) -> bool {
        let mut y = x.to_vec();
        let mut k = 1;
        while k < x.len() {
            y = mul_fp(group, p, &y, &y);
            k *= 2;
        }
        y.iter().all(|&c| c == 0)
    }

    /// All vectors `Σ c_i basis_i`.
    fn span_elements(p: u32, basis: &[Vec<u32>], len: usize) -> Vec<Vec<u32>> {
        let mut out = vec![vec![0u32; len]];
        for b in basis {
            let mut next = Vec::with_capacity(out.len() * p as usize);
            for v in &out {
                for c in 0..p {
                    next.push(v.iter().zip(b).map(|(&x, &y)| (x + c * y) % p).collect());
                }
            }
            out = next;
        }
        out
    }

    fn codes(v: &[Scalar]) -> Vec<u32> {
        v.iter().map(|c| c.0).collect()
    }

    /// `x ∈ J(A)` iff every element of `xA` is nilpotent. Checks that the
    /// computed `J` is an ideal of nilpotent elements and that every nonzero
    /// element of the complement has a non-nilpotent multiple.
    fn brute_force_agrees(group: &FiniteGroup, p: u32, j: &Subspace) {
        let n = group.order();
        let basis: Vec<Vec<u32>> = j.rows().iter().map(|r| codes(r)).collect();
        let fp = FieldSpec::new(p, 1).unwrap();
        for b in &basis {
            for g in 0..n as u32 {
                let mut unit = vec![0u32; n];
                unit[g as usize] = 1;
                for prod in [mul_fp(group, p, b, &unit), mul_fp(group, p, &unit, b)] {
                    let v: Vec<Scalar> = prod.into_iter().map(Scalar).collect();
                    assert!(j.contains(&fp, &v), "not an ideal");
                }
            }
        }
        for x in span_elements(p, &basis, n) {
            assert!(is_nilpotent(group, p, &x), "radical element {x:?} is not nilpotent");
        }
        let complement: Vec<Vec<u32>> = j
            .non_pivots()
            .into_iter()
            .map(|g| {
                let mut v = vec![0u32; n];
                v[g] = 1;
                v
            })
            .collect();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for x in span_elements(p, &complement, n).into_iter().skip(1) {
            let mut found = (0..n).any(|g| {
                let mut unit = vec![0u32; n];
                unit[g] = 1;
                !is_nilpotent(group, p, &mul_fp(group, p, &x, &unit))
            });
            for _ in 0..500 {
                if found {
                    break;
                }
                let y: Vec<u32> = (0..n).map(|_| rng.gen_range(0..p)).collect();
                found = !is_nilpotent(group, p, &mul_fp(group, p, &x, &y));
            }
            assert!(found, "{x:?} outside J but every multiple looked nilpotent");
        }
    }

    #[test]
    fn trivial_cases() {
        let c3 = catalog::builtin("C3").unwrap();
        assert_eq!(radical(&c3, 2).unwrap().dim(), 0);
        let c2 = catalog::builtin("C2").unwrap();
        let j = radical(&c2, 2).unwrap();
        assert_eq!(j.dim(), 1);
        assert_eq!(j.rows()[0], vec![Scalar(1), Scalar(1)]);
        let a4 = catalog::builtin("A4").unwrap();
        assert_eq!(radical(&a4, 2).unwrap().dim(), 9);
    }

    #[test]
    fn agrees_with_brute_force_on_small_groups() {
        for (name, g) in small_groups() {
            for p in [2, 3] {
                let j = radical(&g, p).unwrap();
                brute_force_agrees(&g, p, &j);
                let generic = radical_of(&StructureConstants::group_algebra(&g, p)).unwrap();
                assert_eq!(generic, j, "{name} at p={p}: structure-constant variant differs");
                assert!(certify_quotient(&g, p, &j).unwrap(), "{name} at p={p}");
            }
        }
    }

    #[test]
    fn a5_certificate() {
        let a5 = catalog::builtin("A5").unwrap();
        let j = radical(&a5, 2).unwrap();
        // A/J over a splitting field is M1 + M2 + M2 + M4: 1 + 4 + 4 + 16.
        assert_eq!(60 - j.dim(), 25);
        assert!(certify_quotient(&a5, 2, &j).unwrap());
        let j3 = radical(&a5, 3).unwrap();
        assert!(certify_quotient(&a5, 3, &j3).unwrap());
    }

    #[test]
    fn non_ideal_fails_certificate() {
        let s3 = catalog::builtin("S3").unwrap();
        let fp = FieldSpec::new(2, 1).unwrap();
        let mut v = vec![Scalar::ZERO; 6];
        v[1] = Scalar::ONE;
        v[0] = Scalar::ONE;
        let bogus = Subspace::from_vectors(&fp, 6, [v]);
        assert!(!certify_quotient(&s3, 2, &bogus).unwrap());
    }
}
