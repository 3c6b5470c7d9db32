//! Named groups and `x`-product expressions such as `C4 x A5`.
//!
//! Recognised names: `C<n>`, `E<p>^<k>`, `S<n>`, `A<n>`, `D<n>` (dihedral
//! of order `n`), `V4`, `Q8`, `PSL28` (acting on the projective line over
//! `GF(8)`).

use alloc::vec;
use alloc::vec::Vec;

use crate::abelian::AbelianShape;
use crate::error::{invalid, Result};
use crate::field::{is_prime, FieldSpec, Scalar};
use crate::group::FiniteGroup;
use crate::perm::{parse_cycles, Perm};

/// Parses a product expression and builds the group.
pub fn builtin(expr: &str) -> Result<FiniteGroup> {
    let compact: alloc::string::String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(invalid!("empty group expression"));
    }
    let mut factors = compact.split('x');
    let first = factors.next().unwrap_or_default();
    let mut group = factor(first)?;
    for name in factors {
        group = group.direct_product(&factor(name)?)?;
    }
    Ok(group)
}

/// A single named group (no products).
pub fn factor(name: &str) -> Result<FiniteGroup> {
    let bad = || invalid!("unknown group {name:?}");
    match name {
        "V4" => return elementary_abelian(2, 2),
        "Q8" => return from_strings(8, &["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"]),
        "PSL28" => return psl28(),
        "" => return Err(invalid!("empty factor in group expression")),
        _ => {}
    }
    let (kind, rest) = name.split_at(1);
    match kind {
        "C" => cyclic(rest.parse().map_err(|_| bad())?),
        "S" => symmetric(rest.parse().map_err(|_| bad())?),
        "A" => alternating(rest.parse().map_err(|_| bad())?),
        "D" => dihedral(rest.parse().map_err(|_| bad())?),
        "E" => {
            let (p, k) = rest.split_once('^').ok_or_else(bad)?;
            elementary_abelian(p.parse().map_err(|_| bad())?, k.parse().map_err(|_| bad())?)
        }
        _ => Err(bad()),
    }
}

fn from_strings(degree: usize, gens: &[&str]) -> Result<FiniteGroup> {
    let perms = gens
        .iter()
        .map(|g| Perm::from_cycles(degree, &parse_cycles(g)?))
        .collect::<Result<Vec<Perm>>>()?;
    FiniteGroup::close(degree, &perms)
}

fn cycle(degree: usize, points: impl Iterator<Item = u32>) -> Result<Perm> {
    Perm::from_cycles(degree, &[points.collect()])
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(invalid!("C0 is not a group"));
    }
    if n == 1 {
        return FiniteGroup::close(1, &[]);
    }
    FiniteGroup::close(n, &[cycle(n, 1..=n as u32)?])
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    match n {
        0 => Err(invalid!("S0 is not supported")),
        1 => FiniteGroup::close(1, &[]),
        2 => cyclic(2),
        _ => FiniteGroup::close(n, &[cycle(n, 1..=n as u32)?, cycle(n, 1..=2)?]),
    }
}

pub fn alternating(n: usize) -> Result<FiniteGroup> {
    match n {
        0 => Err(invalid!("A0 is not supported")),
        1 | 2 => FiniteGroup::close(1, &[]),
        3 => cyclic(3),
        5 => from_strings(5, &["(1 2 3 4 5)", "(3 4 5)"]),
        _ => {
            let long = if n % 2 == 1 { cycle(n, 1..=n as u32)? } else { cycle(n, 2..=n as u32)? };
            FiniteGroup::close(n, &[cycle(n, 1..=3)?, long])
        }
    }
}

/// Dihedral group of order `n` acting on `n/2` points.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 6 || n % 2 == 1 {
        return Err(invalid!("D{n}: dihedral groups need even order at least 6"));
    }
    let k = n / 2;
    let reflection: Vec<u32> = (0..k as u32).map(|i| (k as u32 - i) % k as u32).collect();
    FiniteGroup::close(k, &[cycle(k, 1..=k as u32)?, Perm::from_images(reflection)?])
}

pub fn elementary_abelian(p: u32, k: u32) -> Result<FiniteGroup> {
    if !is_prime(p as u64) {
        return Err(invalid!("E{p}^{k}: {p} is not prime"));
    }
    abelian_group(&AbelianShape::new(p, Vec::new(), k)?)
}

/// The abelian group with the given cyclic decomposition, one cycle per factor.
pub fn abelian_group(shape: &AbelianShape) -> Result<FiniteGroup> {
    let sizes: Vec<u32> = shape.factor_exponents().iter().map(|&a| shape.p.pow(a)).collect();
    let degree = sizes.iter().sum::<u32>().max(1) as usize;
    let mut gens = Vec::new();
    let mut start = 1;
    for size in sizes {
        gens.push(cycle(degree, start..start + size)?);
        start += size;
    }
    FiniteGroup::close(degree, &gens)
}

/// `PSL(2,8)` generated by `z -> z+1`, `z -> a z` and `z -> 1/z` on
/// `GF(8) ∪ {∞}`; point `i < 8` is the field element with code `i`, point 8 is `∞`.
pub fn psl28() -> Result<FiniteGroup> {
    let f = FieldSpec::new(2, 3)?;
    let inf = 8u32;
    let map = |g: &dyn Fn(Scalar) -> u32| -> Vec<u32> {
        let mut images: Vec<u32> = (0..8).map(|i| g(Scalar(i))).collect();
        images.push(inf);
        images
    };
    let translate = map(&|z| f.add(z, Scalar::ONE).0);
    let scale = map(&|z| f.mul(z, Scalar(2)).0);
    let mut invert: Vec<u32> = vec![inf];
    invert.extend((1..8).map(|i| f.inv(Scalar(i)).expect("nonzero").0));
    invert.push(0);
    let gens = [translate, scale, invert]
        .into_iter()
        .map(Perm::from_images)
        .collect::<Result<Vec<Perm>>>()?;
    FiniteGroup::close(9, &gens)
}
