//! Block idempotents, the Brauer map and defect groups.
//!
//! Idempotents are found inside `Z(kG)` in class-sum coordinates. Over a
//! splitting field the Frobenius-fixed subalgebra `S = {z : z^q = z}` is a
//! product of copies of `GF(q)` whose primitive idempotents are exactly the
//! block idempotents, so `1` is split by one basis element of `S` at a time
//! using Lagrange interpolation at the roots of its minimal polynomial.

use alloc::vec;
use alloc::vec::Vec;

use crate::abelian::{abelian_invariants, AbelianShape};
use crate::algebra::{AlgElement, AlgebraContext};
use crate::error::{internal, invalid, Error, Result};
use crate::field::{splitting_degree, FieldSpec, Scalar};
use crate::group::{is_power_of, log_p, FiniteGroup, Subgroup};
use crate::linalg::{left_kernel, Subspace};
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub index: usize,
    pub idempotent: AlgElement,
    /// `dim(e kG)`.
    pub dim: usize,
    pub defect_group: Subgroup,
    pub defect: u32,
    /// Set when the defect group is abelian.
    pub shape: Option<AbelianShape>,
    pub principal: bool,
}

/// Fails unless `GF(p^m)` contains the splitting field of `G`.
pub fn require_splitting_field(group: &FiniteGroup, field: &FieldSpec) -> Result<()> {
    let p = field.characteristic();
    let required = splitting_degree(p, group.p_prime_exponent(p))?;
    if field.degree() % required != 0 {
        return Err(Error::FieldTooSmall { degree: field.degree(), required });
    }
    Ok(())
}

/// Multiplication in `Z(kG)` in the basis of class sums.
#[derive(Clone, Debug)]
pub struct CenterAlgebra {
    /// `constants[i][j]` is the vector of `C_i C_j`.
    constants: Vec<Vec<Vec<Scalar>>>,
    identity: usize,
}

impl CenterAlgebra {
    pub fn new(group: &FiniteGroup, field: &FieldSpec) -> Self {
        let classes = group.classes();
        let c = classes.len();
        let mut constants = vec![vec![vec![Scalar::ZERO; c]; c]; c];
        for (k, class_k) in classes.iter().enumerate() {
            let r = class_k[0];
            for (i, class_i) in classes.iter().enumerate() {
                let mut counts = vec![0i64; c];
                for &x in class_i {
                    let y = group.mul(group.inverse(x), r);
                    counts[group.class_of(y)] += 1;
                }
                for (j, &n) in counts.iter().enumerate() {
                    constants[i][j][k] = field.from_int(n);
                }
            }
        }
        CenterAlgebra { constants, identity: group.class_of(0) }
    }

    pub fn dim(&self) -> usize {
        self.constants.len()
    }

    pub fn one(&self) -> Vec<Scalar> {
        let mut v = vec![Scalar::ZERO; self.dim()];
        v[self.identity] = Scalar::ONE;
        v
    }

    pub fn mul(&self, f: &FieldSpec, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::ZERO; self.dim()];
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    f.axpy(&mut out, f.mul(xi, yj), &self.constants[i][j]);
                }
            }
        }
        out
    }

    pub fn pow(&self, f: &FieldSpec, x: &[Scalar], mut e: u64) -> Vec<Scalar> {
        let mut result = self.one();
        let mut base = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(f, &result, &base);
            }
            base = self.mul(f, &base, &base);
            e >>= 1;
        }
        result
    }

    /// `{z : z^q = z}`.
    pub fn frobenius_fixed(&self, f: &FieldSpec) -> Subspace {
        let c = self.dim();
        let q = f.order() as u64;
        let rows: Vec<Vec<Scalar>> = (0..c)
            .map(|i| {
                let mut unit = vec![Scalar::ZERO; c];
                unit[i] = Scalar::ONE;
                let mut image = self.pow(f, &unit, q);
                image[i] = f.sub(image[i], Scalar::ONE);
                image
            })
            .collect();
        left_kernel(f, &rows)
    }

    /// Expands class-sum coordinates into a group-algebra element.
    pub fn to_element(&self, group: &FiniteGroup, z: &[Scalar]) -> AlgElement {
        let mut v = vec![Scalar::ZERO; group.order()];
        for (class, &c) in group.classes().iter().zip(z) {
            for &g in class {
                v[g as usize] = c;
            }
        }
        AlgElement(v)
    }
}

/// Minimal polynomial of `x` inside the unital algebra `eZ`, monic,
/// constant term first.
fn minimal_polynomial(f: &FieldSpec, z: &CenterAlgebra, e: &[Scalar], x: &[Scalar]) -> Poly {
    let mut powers = vec![e.to_vec()];
    loop {
        let next = z.mul(f, powers.last().unwrap(), x);
        powers.push(next);
        let kernel = left_kernel(f, &powers);
        if let Some(rel) = kernel.rows().first() {
            // The newest power is the first to become dependent, so the
            // relation has a nonzero top coefficient; Poly::monic normalizes it.
            return Poly(rel.clone()).monic(f);
        }
    }
}

/// Primitive central idempotents in class-sum coordinates, sorted later by the caller.
fn central_idempotent_coordinates(group: &FiniteGroup, f: &FieldSpec) -> Result<Vec<Vec<Scalar>>> {
    let z = CenterAlgebra::new(group, f);
    let s = z.frobenius_fixed(f);
    let mut idempotents = vec![z.one()];
    for b in s.rows() {
        let mut next = Vec::with_capacity(idempotents.len());
        for e in &idempotents {
            let x = z.mul(f, e, b);
            let minpoly = minimal_polynomial(f, &z, e, &x);
            let roots = minpoly.roots(f);
            let degree = minpoly.degree().unwrap_or(0);
            if roots.len() != degree {
                return Err(internal!("minimal polynomial of degree {degree} has {} roots", roots.len()));
            }
            if degree == 1 {
                next.push(e.clone());
                continue;
            }
            for (j, &lj) in roots.iter().enumerate() {
                let mut piece = e.clone();
                for (l, &ll) in roots.iter().enumerate() {
                    if l == j {
                        continue;
                    }
                    let mut factor = x.clone();
                    f.axpy(&mut factor, f.neg(ll), e);
                    f.scale(&mut factor, f.inv(f.sub(lj, ll))?);
                    piece = z.mul(f, &piece, &factor);
                }
                next.push(piece);
            }
        }
        idempotents = next;
    }
    if idempotents.len() != s.dim() {
        return Err(internal!(
            "{} idempotents for a Frobenius-fixed algebra of dimension {}",
            idempotents.len(),
            s.dim()
        ));
    }
    Ok(idempotents)
}

/// Primitive central idempotents of `kG`, ordered by their first nonzero
/// position and then by coefficients.
pub fn central_idempotents(ctx: &AlgebraContext) -> Result<Vec<AlgElement>> {
    require_splitting_field(ctx.group(), ctx.field())?;
    let z = CenterAlgebra::new(ctx.group(), ctx.field());
    let mut out: Vec<AlgElement> = central_idempotent_coordinates(ctx.group(), ctx.field())?
        .iter()
        .map(|c| z.to_element(ctx.group(), c))
        .collect();
    out.sort_by(|a, b| {
        let pa = a.support().next();
        let pb = b.support().next();
        pa.cmp(&pb).then_with(|| a.0.cmp(&b.0))
    });
    Ok(out)
}

/// Index of the idempotent with augmentation 1.
pub fn principal_index(ctx: &AlgebraContext, idempotents: &[AlgElement]) -> Result<usize> {
    let mut found = idempotents
        .iter()
        .enumerate()
        .filter(|(_, e)| ctx.augmentation(e) == Scalar::ONE)
        .map(|(i, _)| i);
    match (found.next(), found.next()) {
        (Some(i), None) => Ok(i),
        _ => Err(internal!("principal block is not unique")),
    }
}

/// `Br_Q(z)`: the coefficients of `z` on `C_G(Q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerImage {
    pub subgroup: Subgroup,
    pub centralizer: Subgroup,
    pub image: AlgElement,
}

pub fn brauer_map(ctx: &AlgebraContext, z: &AlgElement, q: &Subgroup) -> Result<BrauerImage> {
    let p = ctx.field().characteristic();
    if !is_power_of(q.order(), p) {
        return Err(invalid!("Brauer map needs a {p}-subgroup, got order {}", q.order()));
    }
    let centralizer = ctx.group().centralizer(q);
    let mut image = ctx.zero();
    for &g in centralizer.elements() {
        image.0[g as usize] = z.0[g as usize];
    }
    Ok(BrauerImage { subgroup: q.clone(), centralizer, image })
}

fn brauer_nonzero(group: &FiniteGroup, e: &AlgElement, q: &Subgroup) -> bool {
    group
        .centralizer(q)
        .elements()
        .iter()
        .any(|&g| !e.0[g as usize].is_zero())
}

/// A defect group of the block with idempotent `e`: a subgroup of maximal
/// order of the canonical Sylow subgroup with nonzero Brauer image.
pub fn defect_group(ctx: &AlgebraContext, e: &AlgElement) -> Result<(Subgroup, u32)> {
    let group = ctx.group();
    let p = ctx.field().characteristic();
    let sylow = group.sylow(p);
    let defect = |s: &Subgroup| log_p(s.order(), p).expect("p-subgroup");
    if brauer_nonzero(group, e, &sylow) {
        let d = defect(&sylow);
        return Ok((sylow, d));
    }
    let mut subgroups = group.subgroups_of_pgroup(&sylow, p)?;
    subgroups.sort_by(|a, b| b.order().cmp(&a.order()).then_with(|| a.cmp(b)));
    let found = subgroups
        .into_iter()
        .find(|q| brauer_nonzero(group, e, q))
        .ok_or_else(|| internal!("Brauer image vanishes on the trivial subgroup"))?;
    let d = defect(&found);
    Ok((found, d))
}

/// `dim(e kG)`.
pub fn block_dimension(ctx: &AlgebraContext, e: &AlgElement) -> usize {
    ctx.right_ideal(&[e.0.clone()]).dim()
}

/// Pushes an element of `kH` into `kG` along a position map `H -> G`.
pub fn embed(ctx: &AlgebraContext, map: &[u32], x: &AlgElement) -> AlgElement {
    let mut out = ctx.zero();
    for (h, &c) in x.0.iter().enumerate() {
        out.0[map[h] as usize] = c;
    }
    out
}

/// Whether the block of `G` with idempotent `e_big` covers the block of the
/// normal subgroup with idempotent `e_small` (given in `kN`, embedded by `map`).
pub fn covers(ctx: &AlgebraContext, e_big: &AlgElement, map: &[u32], e_small: &AlgElement) -> bool {
    !ctx.mul(e_big, &embed(ctx, map, e_small)).is_zero()
}

/// Full block decomposition with dimensions, defect groups and shapes.
pub fn decompose(ctx: &AlgebraContext) -> Result<Vec<Block>> {
    let idempotents = central_idempotents(ctx)?;
    let principal = principal_index(ctx, &idempotents)?;
    let p = ctx.field().characteristic();
    let mut blocks = Vec::with_capacity(idempotents.len());
    let mut total = 0;
    for (index, e) in idempotents.into_iter().enumerate() {
        let dim = block_dimension(ctx, &e);
        total += dim;
        let (defect_group, defect) = defect_group(ctx, &e)?;
        let shape = if ctx.group().is_subgroup_abelian(&defect_group) {
            Some(abelian_invariants(ctx.group(), &defect_group, p)?)
        } else {
            None
        };
        blocks.push(Block {
            index,
            idempotent: e,
            dim,
            defect_group,
            defect,
            shape,
            principal: index == principal,
        });
    }
    if total != ctx.dim() {
        return Err(internal!("block dimensions sum to {total}, not {}", ctx.dim()));
    }
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use alloc::sync::Arc;
    use alloc::string::ToString;
    use rand::{Rng, SeedableRng};

    fn ctx(name: &str, p: u32, m: u32) -> AlgebraContext {
        AlgebraContext::new(
            Arc::new(catalog::builtin(name).unwrap()),
            Arc::new(FieldSpec::new(p, m).unwrap()),
        )
    }

    fn check_decomposition(c: &AlgebraContext, idems: &[AlgElement]) {
        let mut sum = c.zero();
        for (i, e) in idems.iter().enumerate() {
            assert!(c.is_central(e));
            assert_eq!(&c.mul(e, e), e);
            for (j, e2) in idems.iter().enumerate() {
                if i != j {
                    assert!(c.mul(e, e2).is_zero());
                }
            }
            sum = c.add(&sum, e);
        }
        assert_eq!(sum, c.one());
    }

    #[test]
    fn block_counts() {
        for (name, p, m, count) in [
            ("C2", 2, 1, 1),
            ("S3", 2, 2, 2),
            ("A5", 2, 4, 2),
            ("A4", 3, 1, 2),
            ("C3", 2, 2, 3),
            ("A4", 2, 2, 1),
            ("S3", 3, 1, 1),
        ] {
            let c = ctx(name, p, m);
            let idems = central_idempotents(&c).unwrap();
            assert_eq!(idems.len(), count, "{name} p={p}");
            check_decomposition(&c, &idems);
        }
    }

    /// `kS3` at `p = 2` by hand: classes `1`, transpositions `T`, 3-cycles `R`.
    /// `R^2 = 2 + R = R` and `TR = 2T = 0`, so `R` and `1 + R` are the
    /// block idempotents, with `1 + R` of augmentation 1.
    #[test]
    fn s3_by_hand() {
        let c = ctx("S3", 2, 2);
        let g = c.group();
        let mut r = c.zero();
        for x in 0..6u32 {
            if g.element_order(x) == 3 {
                r.0[x as usize] = Scalar::ONE;
            }
        }
        let one_plus_r = c.add(&c.one(), &r);
        let idems = central_idempotents(&c).unwrap();
        assert!(idems.contains(&r) && idems.contains(&one_plus_r));
        let principal = principal_index(&c, &idems).unwrap();
        assert_eq!(idems[principal], one_plus_r);
        let blocks = decompose(&c).unwrap();
        let dims: Vec<usize> = blocks.iter().map(|b| b.dim).collect();
        assert_eq!(dims.iter().sum::<usize>(), 6);
        let b0 = blocks.iter().find(|b| b.principal).unwrap();
        assert_eq!((b0.dim, b0.defect), (2, 1));
        let other = blocks.iter().find(|b| !b.principal).unwrap();
        assert_eq!((other.dim, other.defect), (4, 0));
    }

    #[test]
    fn refuses_small_fields() {
        let c = ctx("A5", 2, 1);
        assert!(matches!(central_idempotents(&c), Err(Error::FieldTooSmall { required: 4, .. })));
        let c = ctx("A5", 2, 6);
        assert!(matches!(central_idempotents(&c), Err(Error::FieldTooSmall { .. })));
        assert_eq!(central_idempotents(&ctx("A5", 2, 8)).unwrap().len(), 2);
    }

    #[test]
    fn defect_groups_of_catalog_blocks() {
        let c = ctx("A5", 2, 4);
        let blocks = decompose(&c).unwrap();
        let b0 = blocks.iter().find(|b| b.principal).unwrap();
        assert_eq!(b0.defect, 2);
        assert!(b0.shape.as_ref().unwrap().is_klein_four());
        let other = blocks.iter().find(|b| !b.principal).unwrap();
        assert_eq!((other.defect, other.dim), (0, 16));
        for name in ["C4", "V4", "C4xC2", "C3xC3", "C9"] {
            let p = if name.contains('3') || name == "C9" { 3 } else { 2 };
            let c = ctx(name, p, 1);
            let blocks = decompose(&c).unwrap();
            assert_eq!(blocks.len(), 1);
            assert_eq!(blocks[0].defect_group, c.group().sylow(p));
        }
        let c = ctx("C6", 2, 2);
        for b in decompose(&c).unwrap() {
            assert_eq!(b.defect_group, c.group().sylow(2));
            assert_eq!(b.shape.unwrap().to_string(), "2");
        }
    }

    #[test]
    fn covering() {
        let g = Arc::new(catalog::builtin("S3").unwrap());
        let field = Arc::new(FieldSpec::new(2, 2).unwrap());
        let c = AlgebraContext::new(g.clone(), field.clone());
        let n = g.normal_subgroups().into_iter().find(|s| s.order() == 3).unwrap();
        let (ng, map) = g.subgroup_group(&n).unwrap();
        let cn = AlgebraContext::new(Arc::new(ng), field);
        let big = decompose(&c).unwrap();
        let small = decompose(&cn).unwrap();
        let b0 = big.iter().find(|b| b.principal).unwrap();
        let b1 = big.iter().find(|b| !b.principal).unwrap();
        for b in &small {
            assert_eq!(covers(&c, &b0.idempotent, &map, &b.idempotent), b.principal);
            assert_eq!(covers(&c, &b1.idempotent, &map, &b.idempotent), !b.principal);
        }
    }

    #[test]
    fn brauer_map_is_multiplicative_and_monotone() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for (name, p, m) in [("A4", 2, 2), ("S3", 3, 1), ("A5", 2, 4), ("D8", 2, 1)] {
            let c = ctx(name, p, m);
            let g = c.group();
            let q = c.field().order();
            let sylow = g.sylow(p);
            let subgroups = g.subgroups_of_pgroup(&sylow, p).unwrap();
            for _ in 0..20 {
                let mut random_central = || {
                    let mut z = c.zero();
                    for s in c.class_sums() {
                        z = c.add(&z, &c.scale(s, Scalar(rng.gen_range(0..q))));
                    }
                    z
                };
                let (z1, z2) = (random_central(), random_central());
                for sub in &subgroups {
                    let prod = brauer_map(&c, &c.mul(&z1, &z2), sub).unwrap();
                    let a = brauer_map(&c, &z1, sub).unwrap();
                    let b = brauer_map(&c, &z2, sub).unwrap();
                    assert_eq!(c.mul(&a.image, &b.image), prod.image, "{name}");
                }
            }
            for b in decompose(&c).unwrap() {
                for big in &subgroups {
                    if !brauer_nonzero(g, &b.idempotent, big) {
                        continue;
                    }
                    for small in subgroups.iter().filter(|s| s.is_subgroup_of(big)) {
                        assert!(brauer_nonzero(g, &b.idempotent, small));
                    }
                }
            }
        }
        let c = ctx("S3", 2, 2);
        assert!(brauer_map(&c, &c.one(), &c.group().whole()).is_err());
    }
}
