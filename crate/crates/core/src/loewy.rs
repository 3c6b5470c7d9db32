//! Radical powers, Loewy layers and simple counts of blocks.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{AlgElement, AlgebraContext};
use crate::error::{internal, Result};
use crate::field::{FieldSpec, Scalar};
use crate::group::FiniteGroup;
use crate::linalg::{left_kernel, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoewyProfile {
    pub ll: usize,
    /// `dim J^i / J^{i+1}` for `i = 0..ll`.
    pub layers: Vec<usize>,
    /// Number of simple modules of the block.
    pub simple_count: usize,
}

/// `e J`, the radical of the block with idempotent `e`.
pub fn block_radical(ctx: &AlgebraContext, e: &AlgElement, j: &Subspace) -> Subspace {
    if *e == ctx.one() {
        return j.clone();
    }
    let f = ctx.field();
    let mut out = Subspace::zero(ctx.dim());
    for row in j.rows() {
        out.insert(f, &ctx.mul_slices(&e.0, row));
    }
    out
}

/// Elements generating `ideal` as a left ideal, chosen greedily from its basis.
fn left_generators(ctx: &AlgebraContext, ideal: &Subspace) -> Vec<Vec<Scalar>> {
    let mut generated = Subspace::zero(ctx.dim());
    let mut gens = Vec::new();
    for row in ideal.rows() {
        if generated.dim() == ideal.dim() {
            break;
        }
        if !generated.contains(ctx.field(), row) {
            gens.push(row.clone());
            ctx.extend_left_ideal(&mut generated, core::slice::from_ref(row));
        }
    }
    gens
}

/// `[J, J^2, ..., J^{n-1}]` for a nilpotent two-sided ideal `J` with
/// `J^n = 0`, using `J^{k+1} = Σ_x J^k x` over left generators `x` of `J`.
pub fn radical_powers(ctx: &AlgebraContext, radical: &Subspace) -> Result<Vec<Subspace>> {
    let f = ctx.field();
    let gens = left_generators(ctx, radical);
    let mut powers = Vec::new();
    let mut current = radical.clone();
    while !current.is_zero() {
        let mut next = Subspace::zero(ctx.dim());
        for x in &gens {
            for row in current.rows() {
                next.insert(f, &ctx.mul_slices(row, x));
            }
        }
        if next.dim() >= current.dim() {
            return Err(internal!("radical powers stopped descending at dimension {}", current.dim()));
        }
        powers.push(core::mem::replace(&mut current, next));
    }
    Ok(powers)
}

/// Loewy length and layer dimensions of a block of dimension `block_dim`
/// with radical `radical`.
pub fn loewy_layers(ctx: &AlgebraContext, block_dim: usize, radical: &Subspace) -> Result<(usize, Vec<usize>)> {
    let powers = radical_powers(ctx, radical)?;
    let mut dims = vec![block_dim];
    dims.extend(powers.iter().map(Subspace::dim));
    dims.push(0);
    let layers: Vec<usize> = dims.windows(2).map(|w| w[0] - w[1]).collect();
    Ok((layers.len(), layers))
}

/// Coset representatives of `Z(A/J)` for `A = GF(p)G`: the `x` supported on
/// non-pivot positions of `J` with `xg - gx ∈ J` for every generator `g`.
pub fn quotient_center(group: &FiniteGroup, p: u32, j: &Subspace) -> Result<Subspace> {
    let fp = FieldSpec::new(p, 1)?;
    let n = group.order();
    let free = j.non_pivots();
    let gens = group.generator_positions();
    let rows: Vec<Vec<Scalar>> = free
        .iter()
        .map(|&h| {
            let mut row = Vec::with_capacity(n * gens.len());
            for &g in gens {
                let mut v = vec![Scalar::ZERO; n];
                let hg = group.mul(h as u32, g) as usize;
                let gh = group.mul(g, h as u32) as usize;
                v[hg] = fp.add(v[hg], Scalar::ONE);
                v[gh] = fp.sub(v[gh], Scalar::ONE);
                j.reduce_in_place(&fp, &mut v);
                row.extend(v);
            }
            row
        })
        .collect();
    let kernel = left_kernel(&fp, &rows);
    let mut out = Subspace::zero(n);
    for comb in kernel.rows() {
        let mut v = vec![Scalar::ZERO; n];
        for (&c, &h) in comb.iter().zip(&free) {
            v[h] = c;
        }
        out.insert(&fp, &v);
    }
    Ok(out)
}

/// `dim Z(B / J(B))` for the block with idempotent `e`, given the whole
/// radical `j` and [`quotient_center`]. Over a splitting field this is the
/// number of simple modules in the block.
pub fn simple_count(ctx: &AlgebraContext, e: &AlgElement, center: &Subspace, j: &Subspace) -> usize {
    let f = ctx.field();
    let mut span = Subspace::zero(ctx.dim());
    for x in center.rows() {
        let mut v = ctx.mul_slices(&e.0, x);
        j.reduce_in_place(f, &mut v);
        span.insert(f, &v);
    }
    span.dim()
}

/// The field to run block-local linear algebra in: the prime field when
/// the idempotent has prime-field coefficients, else the context field.
pub fn working_context(ctx: &AlgebraContext, e: &AlgElement) -> Result<AlgebraContext> {
    let f = ctx.field();
    if f.degree() > 1 && e.0.iter().all(|&c| f.in_prime_field(c)) {
        let prime = FieldSpec::new(f.characteristic(), 1)?;
        return Ok(ctx.with_field(alloc::sync::Arc::new(prime)));
    }
    Ok(ctx.clone())
}

/// Loewy profile of the block with idempotent `e` and dimension `block_dim`.
pub fn loewy_profile(
    ctx: &AlgebraContext,
    e: &AlgElement,
    block_dim: usize,
    j: &Subspace,
    center: &Subspace,
) -> Result<(LoewyProfile, usize)> {
    let work = working_context(ctx, e)?;
    let radical = block_radical(&work, e, j);
    let (ll, layers) = loewy_layers(&work, block_dim, &radical)?;
    let simple_count = simple_count(&work, e, center, j);
    Ok((LoewyProfile { ll, layers, simple_count }, radical.dim()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::decompose;
    use crate::catalog;
    use crate::radical::radical;
    use alloc::sync::Arc;

    fn profiles(name: &str, p: u32, m: u32) -> Vec<(bool, usize, LoewyProfile)> {
        let g = Arc::new(catalog::builtin(name).unwrap());
        let ctx = AlgebraContext::new(g.clone(), Arc::new(FieldSpec::new(p, m).unwrap()));
        let j = radical(&g, p).unwrap();
        let center = quotient_center(&g, p, &j).unwrap();
        decompose(&ctx)
            .unwrap()
            .into_iter()
            .map(|b| {
                let (profile, rad) = loewy_profile(&ctx, &b.idempotent, b.dim, &j, &center).unwrap();
                assert_eq!(profile.layers.iter().sum::<usize>(), b.dim);
                assert!(profile.layers.iter().all(|&l| l > 0));
                assert_eq!(b.dim - profile.layers[0], rad);
                (b.principal, rad, profile)
            })
            .collect()
    }

    #[test]
    fn cyclic_and_abelian() {
        let c4 = profiles("C4", 2, 1);
        assert_eq!(c4[0].2, LoewyProfile { ll: 4, layers: vec![1, 1, 1, 1], simple_count: 1 });
        assert_eq!(profiles("C4xC2", 2, 1)[0].2.ll, 5);
        assert_eq!(profiles("V4", 2, 1)[0].2.layers, vec![1, 2, 1]);
        let c3 = profiles("C3", 2, 2);
        assert_eq!(c3.len(), 3);
        assert!(c3.iter().all(|(_, _, pr)| pr.ll == 1 && pr.simple_count == 1));
    }

    #[test]
    fn s3_blocks() {
        for (principal, rad, profile) in profiles("S3", 2, 2) {
            if principal {
                assert_eq!((rad, profile.ll, profile.simple_count), (1, 2, 1));
            } else {
                assert_eq!((rad, profile.ll, profile.simple_count), (0, 1, 1));
            }
        }
    }

    #[test]
    fn a5_principal_block() {
        let all = profiles("A5", 2, 4);
        let (_, _, b0) = all.iter().find(|(p, _, _)| *p).unwrap();
        assert_eq!(b0.ll, 5);
        assert_eq!(b0.simple_count, 3);
        let total: usize = all.iter().map(|(_, _, pr)| pr.simple_count).sum();
        // Number of 2-regular classes of A5: 1, (123), (12345), (13524).
        assert_eq!(total, 4);
    }

    #[test]
    fn simple_counts_match_regular_classes() {
        for (name, p, m) in [("A4", 2, 2), ("A4", 3, 1), ("S4", 2, 2), ("S4", 3, 2), ("D10", 2, 4)] {
            let g = catalog::builtin(name).unwrap();
            let regular = g
                .classes()
                .iter()
                .filter(|c| g.element_order(c[0]) % p != 0)
                .count();
            let total: usize = profiles(name, p, m).iter().map(|(_, _, pr)| pr.simple_count).sum();
            assert_eq!(total, regular, "{name} p={p}");
        }
    }

    #[test]
    fn field_extension_invariance() {
        for (name, p, m) in [("C4", 2, 1), ("V4", 2, 1), ("S3", 2, 2), ("A4", 2, 2), ("A5", 2, 4)] {
            let small: Vec<usize> = profiles(name, p, m).iter().map(|(_, _, pr)| pr.ll).collect();
            let big: Vec<usize> = profiles(name, p, 2 * m).iter().map(|(_, _, pr)| pr.ll).collect();
            assert_eq!(small, big, "{name}");
        }
    }
}
