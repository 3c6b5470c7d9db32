//! The full pipeline for one group and prime.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::AlgebraContext;
use crate::blocks::{decompose, require_splitting_field, Block};
use crate::error::Result;
use crate::field::{splitting_degree, FieldSpec};
use crate::group::{check_prime, FiniteGroup};
use crate::linalg::Subspace;
use crate::loewy::{loewy_profile, quotient_center, LoewyProfile};
use crate::radical::radical;

#[derive(Clone, Debug)]
pub struct BlockReport {
    pub block: Block,
    pub radical_dim: usize,
    pub profile: LoewyProfile,
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub ctx: AlgebraContext,
    pub p: u32,
    /// `J(GF(p)G)`.
    pub radical: Subspace,
    pub blocks: Vec<BlockReport>,
}

impl Analysis {
    pub fn group(&self) -> &FiniteGroup {
        self.ctx.group()
    }

    pub fn field(&self) -> &FieldSpec {
        self.ctx.field()
    }

    pub fn principal(&self) -> &BlockReport {
        self.blocks
            .iter()
            .find(|b| b.block.principal)
            .expect("exactly one principal block")
    }
}

/// The smallest field degree over which blocks of `G` split.
pub fn default_degree(group: &FiniteGroup, p: u32) -> Result<u32> {
    check_prime(p)?;
    splitting_degree(p, group.p_prime_exponent(p))
}

/// Blocks, defect groups, radicals and Loewy profiles of `kG` over
/// `GF(p^m)`; `m` defaults to the splitting degree.
pub fn analyze(group: Arc<FiniteGroup>, p: u32, m: Option<u32>) -> Result<Analysis> {
    let m = match m {
        Some(m) => m,
        None => default_degree(&group, p)?,
    };
    let field = Arc::new(FieldSpec::new(p, m)?);
    require_splitting_field(&group, &field)?;
    let ctx = AlgebraContext::new(group.clone(), field);
    let j = radical(&group, p)?;
    let center = quotient_center(&group, p, &j)?;
    let blocks = decompose(&ctx)?
        .into_iter()
        .map(|block| {
            let (profile, radical_dim) = loewy_profile(&ctx, &block.idempotent, block.dim, &j, &center)?;
            Ok(BlockReport { block, radical_dim, profile })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Analysis { ctx, p, radical: j, blocks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::error::Error;

    #[test]
    fn a4_at_both_primes() {
        let g = Arc::new(catalog::builtin("A4").unwrap());
        let a = analyze(g.clone(), 2, None).unwrap();
        assert_eq!(a.field().order(), 4);
        assert_eq!(a.radical.dim(), 9);
        assert_eq!(a.blocks.len(), 1);
        assert_eq!(a.principal().profile.ll, 3);
        let b = analyze(g, 3, None).unwrap();
        assert_eq!(b.blocks.len(), 2);
        assert_eq!(b.principal().profile.ll, 3);
        assert_eq!(b.principal().block.defect, 1);
    }

    #[test]
    fn degree_override_must_contain_splitting_field() {
        let g = Arc::new(catalog::builtin("S3").unwrap());
        assert!(matches!(analyze(g.clone(), 2, Some(1)), Err(Error::FieldTooSmall { .. })));
        assert_eq!(analyze(g.clone(), 2, Some(4)).unwrap().blocks.len(), 2);
        assert!(matches!(analyze(g, 4, None), Err(Error::InvalidInput(_))));
    }
}
