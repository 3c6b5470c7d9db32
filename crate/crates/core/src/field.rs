//! Finite fields GF(p^m) in polynomial basis.
//!
//! An element is stored as the integer whose base-`p` digits are its
//! coefficients over `GF(p)` (constant term least significant). Prime-field
//! elements therefore have the same code in every extension, which lets
//! subspaces computed over `GF(p)` be reused verbatim over `GF(p^m)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{invalid, Error, Result};

/// A field element in packed polynomial-basis form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct Scalar(pub u32);

impl Scalar {
    pub const ZERO: Scalar = Scalar(0);
    pub const ONE: Scalar = Scalar(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

pub const MAX_EXTENSION_DEGREE: u32 = 12;

/// Fields up to this size get log/exp tables.
const TABLE_LIMIT: u64 = 1 << 20;
/// Fields up to this size (odd characteristic) get a full addition table.
const ADD_TABLE_LIMIT: u64 = 1024;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Multiplicative order of `p` modulo `e`: the degree of the smallest field
/// `GF(p^m)` containing all `e`-th roots of unity.
pub fn splitting_degree(p: u32, e: u64) -> Result<u32> {
    if e == 0 {
        return Err(invalid!("exponent must be positive"));
    }
    if gcd(p as u64, e) != 1 {
        return Err(invalid!("gcd({p}, {e}) != 1"));
    }
    if e == 1 {
        return Ok(1);
    }
    let mut acc = p as u64 % e;
    let mut k = 1;
    while acc != 1 {
        acc = acc * p as u64 % e;
        k += 1;
    }
    Ok(k)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Dense polynomials over GF(p), low degree first. Only used for modulus
// selection and for the slow arithmetic path.

fn poly_rem_fp(a: &mut Vec<u32>, b: &[u32], p: u32) {
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while a.len() > db {
        let top = *a.last().unwrap();
        if top != 0 {
            let c = top * lead_inv % p;
            let shift = a.len() - 1 - db;
            for (i, &bi) in b.iter().enumerate() {
                a[shift + i] = (a[shift + i] + p * p - c * bi % p) % p;
            }
        }
        a.pop();
    }
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    r as u32
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible_fp(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for k in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut rest = k;
            for _ in 0..d {
                divisor.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            divisor.push(1);
            let mut r = poly.to_vec();
            poly_rem_fp(&mut r, &divisor, p);
            if r.is_empty() {
                return false;
            }
        }
    }
    true
}

/// A finite field `GF(p^m)` with a fixed irreducible modulus.
#[derive(Clone, Debug)]
pub struct FieldSpec {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    log: Vec<u32>,
    exp: Vec<u32>,
    add_table: Vec<u32>,
    neg_table: Vec<u32>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl FieldSpec {
    /// Builds `GF(p^m)` using the lexicographically smallest monic irreducible
    /// modulus (coefficient tuples compared constant term first).
    pub fn new(p: u32, m: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(invalid!("{p} is not prime"));
        }
        if m == 0 || m > MAX_EXTENSION_DEGREE {
            return Err(invalid!("extension degree {m} outside 1..={MAX_EXTENSION_DEGREE}"));
        }
        let q = (p as u64)
            .checked_pow(m)
            .filter(|&q| q < u32::MAX as u64)
            .ok_or_else(|| invalid!("GF({p}^{m}) is too large"))?;
        let modulus = Self::select_modulus(p, m);
        let mut field = FieldSpec {
            p,
            m,
            q: q as u32,
            modulus,
            log: Vec::new(),
            exp: Vec::new(),
            add_table: Vec::new(),
            neg_table: Vec::new(),
        };
        field.build_tables();
        Ok(field)
    }

    fn select_modulus(p: u32, m: u32) -> Vec<u32> {
        let count = (p as u64).pow(m);
        for k in 0..count {
            // c_0 is the most significant digit of k.
            let mut coeffs = vec![0u32; m as usize + 1];
            let mut rest = k;
            for j in (0..m as usize).rev() {
                coeffs[j] = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            coeffs[m as usize] = 1;
            if is_irreducible_fp(&coeffs, p) {
                return coeffs;
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    fn build_tables(&mut self) {
        let q = self.q as u64;
        if self.p != 2 && q <= ADD_TABLE_LIMIT {
            let n = self.q as usize;
            let mut table = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    table[a * n + b] = self.add_digits(a as u32, b as u32);
                }
            }
            self.add_table = table;
        }
        if q > TABLE_LIMIT {
            return;
        }
        let n = self.q as usize;
        self.neg_table = (0..n as u32).map(|a| self.neg_digits(a)).collect();
        let order = q - 1;
        let factors = prime_factors(order);
        let generator = (1..self.q)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| self.pow_slow(g, order / r) != 1)
            })
            .expect("multiplicative group is cyclic");
        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![0u32; n];
        let mut x = 1u32;
        for i in 0..order as usize {
            exp[i] = x;
            exp[i + order as usize] = x;
            log[x as usize] = i as u32;
            x = self.mul_slow(x, generator);
        }
        self.exp = exp;
        self.log = log;
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients of the modulus, constant term first (monic, length `m + 1`).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Coefficients of `a` over `GF(p)`, constant term first.
    pub fn coefficients(&self, a: Scalar) -> Vec<u32> {
        self.digits(a.0)
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Scalar {
        debug_assert!(coeffs.len() <= self.m as usize);
        Scalar(self.undigits(coeffs.iter().map(|c| c % self.p)))
    }

    pub fn elements(&self) -> impl Iterator<Item = Scalar> {
        (0..self.q).map(Scalar)
    }

    /// Image of an integer under `Z -> GF(p)`.
    pub fn from_int(&self, k: i64) -> Scalar {
        Scalar(k.rem_euclid(self.p as i64) as u32)
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut out = vec![0u32; self.m as usize];
        for d in out.iter_mut() {
            *d = a % self.p;
            a /= self.p;
        }
        out
    }

    fn undigits(&self, digits: impl DoubleEndedIterator<Item = u32>) -> u32 {
        digits.rev().fold(0u32, |acc, d| acc * self.p + d)
    }

    fn add_digits(&self, mut a: u32, mut b: u32) -> u32 {
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.m {
            out += (a % self.p + b % self.p) % self.p * place;
            a /= self.p;
            b /= self.p;
            place = place.wrapping_mul(self.p);
        }
        out
    }

    fn neg_digits(&self, mut a: u32) -> u32 {
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.m {
            out += (self.p - a % self.p) % self.p * place;
            a /= self.p;
            place = place.wrapping_mul(self.p);
        }
        out
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let p = self.p as u64;
        let mut prod = vec![0u32; 2 * self.m as usize - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p) as u32;
            }
        }
        poly_rem_fp(&mut prod, &self.modulus, self.p);
        prod.resize(self.m as usize, 0);
        self.undigits(prod.into_iter())
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut result = 1u32;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul_slow(result, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        result
    }

    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        if self.p == 2 {
            Scalar(a.0 ^ b.0)
        } else if !self.add_table.is_empty() {
            Scalar(self.add_table[(a.0 * self.q + b.0) as usize])
        } else {
            Scalar(self.add_digits(a.0, b.0))
        }
    }

    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        if self.p == 2 {
            a
        } else if !self.neg_table.is_empty() {
            Scalar(self.neg_table[a.0 as usize])
        } else {
            Scalar(self.neg_digits(a.0))
        }
    }

    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        if a.0 == 0 || b.0 == 0 {
            return Scalar::ZERO;
        }
        if self.exp.is_empty() {
            return Scalar(self.mul_slow(a.0, b.0));
        }
        Scalar(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Scalar) -> Result<Scalar> {
        if a.is_zero() {
            return Err(Error::InvalidInput("inverse of zero".into()));
        }
        if self.exp.is_empty() {
            return Ok(Scalar(self.pow_slow(a.0, self.q as u64 - 2)));
        }
        let order = self.q - 1;
        Ok(Scalar(self.exp[((order - self.log[a.0 as usize]) % order) as usize]))
    }

    pub fn div(&self, a: Scalar, b: Scalar) -> Result<Scalar> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Scalar, mut e: u64) -> Scalar {
        let mut result = Scalar::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn frobenius(&self, a: Scalar) -> Scalar {
        self.pow(a, self.p as u64)
    }

    /// `dst += c * src`.
    #[inline]
    pub fn axpy(&self, dst: &mut [Scalar], c: Scalar, src: &[Scalar]) {
        if c.is_zero() {
            return;
        }
        if self.p == 2 && c == Scalar::ONE {
            for (d, s) in dst.iter_mut().zip(src) {
                d.0 ^= s.0;
            }
            return;
        }
        if self.exp.is_empty() {
            for (d, s) in dst.iter_mut().zip(src) {
                *d = self.add(*d, self.mul(c, *s));
            }
            return;
        }
        let lc = self.log[c.0 as usize] as usize;
        let (exp, log) = (&self.exp[..], &self.log[..]);
        if self.p == 2 {
            for (d, s) in dst.iter_mut().zip(src) {
                if s.0 != 0 {
                    d.0 ^= exp[lc + log[s.0 as usize] as usize];
                }
            }
        } else if !self.add_table.is_empty() {
            let q = self.q as usize;
            let add = &self.add_table[..];
            for (d, s) in dst.iter_mut().zip(src) {
                if s.0 != 0 {
                    let t = exp[lc + log[s.0 as usize] as usize];
                    d.0 = add[d.0 as usize * q + t as usize];
                }
            }
        } else {
            for (d, s) in dst.iter_mut().zip(src) {
                if s.0 != 0 {
                    *d = self.add(*d, Scalar(exp[lc + log[s.0 as usize] as usize]));
                }
            }
        }
    }

    pub fn scale(&self, v: &mut [Scalar], c: Scalar) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    /// Whether `a` lies in the prime subfield.
    pub fn in_prime_field(&self, a: Scalar) -> bool {
        a.0 < self.p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prime_field_uses_modulus_x() {
        let f = FieldSpec::new(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.inv(Scalar::ONE).unwrap(), Scalar::ONE);
        assert_eq!(f.frobenius(Scalar::ONE), Scalar::ONE);
        assert_eq!(f.frobenius(Scalar::ZERO), Scalar::ZERO);
    }

    #[test]
    fn smallest_moduli() {
        assert_eq!(FieldSpec::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        // x^4 + x^3 + 1: (1,0,0,0) = x^4 + 1 is reducible.
        assert_eq!(FieldSpec::new(2, 4).unwrap().modulus(), &[1, 0, 0, 1, 1]);
        assert_eq!(FieldSpec::new(2, 3).unwrap().modulus(), &[1, 0, 1, 1]);
        let f81 = FieldSpec::new(3, 4).unwrap();
        assert_eq!(f81.order(), 81);
        assert!(is_irreducible_fp(f81.modulus(), 3));
        assert_eq!(FieldSpec::new(2, 4).unwrap().order(), 16);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(FieldSpec::new(4, 1).is_err());
        assert!(FieldSpec::new(2, 0).is_err());
        assert!(FieldSpec::new(2, 13).is_err());
    }

    fn scan_order(p: u32, e: u64) -> u32 {
        (1..).find(|&k| (p as u64).pow(k) % e == 1).unwrap()
    }

    #[test]
    fn splitting_degrees() {
        assert_eq!(splitting_degree(2, 15).unwrap(), scan_order(2, 15));
        assert_eq!(splitting_degree(2, 15).unwrap(), 4);
        assert_eq!(splitting_degree(2, 1).unwrap(), 1);
        assert_eq!(splitting_degree(2, 63).unwrap(), 6);
        assert_eq!(splitting_degree(3, 20).unwrap(), 4);
        assert!(splitting_degree(3, 6).is_err());
        for e in (1..200u64).filter(|e| e % 3 != 0) {
            let m = splitting_degree(3, e).unwrap();
            let pow = |k: u32| (0..k).fold(1 % e, |acc, _| acc * 3 % e);
            assert_eq!(pow(m), 1 % e);
            assert!((1..m).all(|k| pow(k) != 1));
        }
    }

    #[test]
    fn unit_group_order() {
        for (p, m) in [(2, 1), (2, 4), (2, 6), (3, 1), (3, 2), (3, 4), (5, 2)] {
            let f = FieldSpec::new(p, m).unwrap();
            for x in f.elements().skip(1) {
                assert_eq!(f.pow(x, f.order() as u64 - 1), Scalar::ONE);
                assert_eq!(f.mul(x, f.inv(x).unwrap()), Scalar::ONE);
            }
        }
    }

    #[test]
    fn slow_path_matches_tables() {
        let f = FieldSpec::new(3, 3).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.mul(a, b).0, f.mul_slow(a.0, b.0));
            }
        }
        // GF(3^13) does not exist here but GF(5^9) exceeds the table limit.
        let big = FieldSpec::new(5, 9).unwrap();
        assert!(big.exp.is_empty());
        let x = Scalar(123_456);
        assert_eq!(big.mul(x, big.inv(x).unwrap()), Scalar::ONE);
    }

    proptest! {
        #[test]
        fn field_axioms(a in 0u32..81, b in 0u32..81, c in 0u32..81) {
            let f = FieldSpec::new(3, 4).unwrap();
            let (a, b, c) = (Scalar(a), Scalar(b), Scalar(c));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.add(a, f.neg(a)), Scalar::ZERO);
            prop_assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
            prop_assert_eq!(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
            prop_assert_eq!(f.pow(a, 81), a);
        }

        #[test]
        fn binary_field_axioms(a in 0u32..64, b in 0u32..64) {
            let f = FieldSpec::new(2, 6).unwrap();
            let (a, b) = (Scalar(a), Scalar(b));
            prop_assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
            prop_assert_eq!(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
            prop_assert_eq!(f.pow(a, 64), a);
            if !b.is_zero() {
                prop_assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
            }
        }
    }
}
