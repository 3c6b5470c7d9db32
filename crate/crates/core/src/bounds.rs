//! Closed-form Loewy length bounds for blocks with abelian defect groups
//! and the checkers that turn computed blocks into verdicts.
//!
//! Verdicts never abort: a failed hypothesis gives [`Status::NotApplicable`],
//! a violated inequality gives [`Status::Fail`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::abelian::{abelian_invariants, cyclic_decomposition, AbelianShape};
use crate::algebra::AlgElement;
use crate::analysis::{Analysis, BlockReport};
use crate::blocks::{covers, embed};
use crate::error::{invalid, Result};
use crate::group::FiniteGroup;

/// `LL(kD) = Σ p^{a_i} + p s - (r + s) + 1`.
pub fn ll_abelian(shape: &AbelianShape) -> u64 {
    let p = shape.p as u64;
    let cyclic: u64 = shape.exponents.iter().map(|&a| p.pow(a)).sum();
    cyclic + p * shape.s as u64 + 1 - (shape.r() + shape.s) as u64
}

/// `Σ 2^{a_i} + 2s - r + 1`, or `Σ 2^{a_i} + 2 - r` when `s = 1`.
pub fn upper_bound_p2(shape: &AbelianShape) -> Result<u64> {
    if shape.p != 2 {
        return Err(invalid!("this bound is stated for p = 2, not p = {}", shape.p));
    }
    let cyclic: u64 = shape.exponents.iter().map(|&a| 1u64 << a).sum();
    let r = shape.r() as u64;
    Ok(if shape.s == 1 { cyclic + 2 - r } else { cyclic + 2 * shape.s as u64 + 1 - r })
}

/// `Σ p^{a_i} + p s - r + δ`, `δ = 1` for even `s` and `0` for odd `s`.
///
/// For `p = 2` and odd `s >= 3` this is one below [`upper_bound_p2`], which
/// is attained (`PSL(2,8)` has `LL = 7` with `D = (C_2)^3`), so the bound is
/// only checked at odd primes.
pub fn conjecture_bound(shape: &AbelianShape) -> u64 {
    let p = shape.p as u64;
    let cyclic: u64 = shape.exponents.iter().map(|&a| p.pow(a)).sum();
    let delta = u64::from(shape.s % 2 == 0);
    cyclic + p * shape.s as u64 + delta - shape.r() as u64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    /// `d < LL(B)` for 2-blocks with abelian defect.
    DefectLower,
    /// `LL(B) <= Σ 2^{a_i} + 2s - r + 1`.
    Abelian2Upper,
    /// The sharper bound when `s = 1`.
    Abelian2UpperS1,
    /// `LL(B) <= |D|` for abelian 2-groups other than the Klein four group.
    OrderBound,
    /// `d < LL(B) <= Σ p^{a_i} + p s - r + δ`, conjectural, odd `p` only.
    ConjecturalBound,
    /// `(|D| - 1)/e(B) + 1 <= LL(B)` for cyclic `D`.
    CyclicLower,
    /// `LL(B) <= |D|` for cyclic `D`.
    CyclicUpper,
    /// `LL(B) ∈ {3, 5}` for Klein four defect groups.
    KleinFour,
    /// `e_B = e_b` for a normal subgroup of index `p`.
    IndexPIdempotent,
    /// `dim B = p dim(kN e_b)` for a normal subgroup of index `p`.
    IndexPDimension,
    /// `LL(b) < LL(B) <= LL(b) + |D_r| - |D_r|/p`.
    IndexPLoewy,
    /// `LL(B) = LL(b)` when the defect group lies in the normal subgroup.
    NormalDefect,
    /// `LL(B1 ⊗ B2) = LL(B1) + LL(B2) - 1`.
    DirectProduct,
    /// `LL(B) = LL(kD)` for `p`-solvable groups.
    PSolvable,
    /// `LL(kD)` for an abelian `p`-group equals the closed form.
    AbelianGroup,
    /// Loewy length matches a recorded expectation.
    ExpectedLoewy,
    /// Defect group shape matches a recorded expectation.
    ExpectedDefect,
}

impl Claim {
    pub const ALL: [Claim; 17] = [
        Claim::DefectLower,
        Claim::Abelian2Upper,
        Claim::Abelian2UpperS1,
        Claim::OrderBound,
        Claim::ConjecturalBound,
        Claim::CyclicLower,
        Claim::CyclicUpper,
        Claim::KleinFour,
        Claim::IndexPIdempotent,
        Claim::IndexPDimension,
        Claim::IndexPLoewy,
        Claim::NormalDefect,
        Claim::DirectProduct,
        Claim::PSolvable,
        Claim::AbelianGroup,
        Claim::ExpectedLoewy,
        Claim::ExpectedDefect,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Claim::DefectLower => "defect-lower",
            Claim::Abelian2Upper => "abelian2-upper",
            Claim::Abelian2UpperS1 => "abelian2-upper-s1",
            Claim::OrderBound => "order-bound",
            Claim::ConjecturalBound => "conjectural-bound",
            Claim::CyclicLower => "cyclic-lower",
            Claim::CyclicUpper => "cyclic-upper",
            Claim::KleinFour => "klein-four-ll",
            Claim::IndexPIdempotent => "index-p-idempotent",
            Claim::IndexPDimension => "index-p-dim",
            Claim::IndexPLoewy => "index-p-ll",
            Claim::NormalDefect => "normal-defect-ll",
            Claim::DirectProduct => "direct-product-ll",
            Claim::PSolvable => "p-solvable-ll",
            Claim::AbelianGroup => "abelian-ll",
            Claim::ExpectedLoewy => "expected-ll",
            Claim::ExpectedDefect => "expected-defect",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Claim> {
        Claim::ALL.into_iter().find(|c| c.tag() == tag)
    }

    /// Conjectural claims are reported apart from proven ones.
    pub fn is_conjectural(self) -> bool {
        self == Claim::ConjecturalBound
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "na",
        }
    }

    pub fn parse(s: &str) -> Option<Status> {
        match s {
            "pass" => Some(Status::Pass),
            "fail" => Some(Status::Fail),
            "na" => Some(Status::NotApplicable),
            _ => None,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Lower bound on the Loewy length; `strict` means `value < LL`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LowerBound {
    pub value: u64,
    pub strict: bool,
}

impl LowerBound {
    pub fn holds(&self, ll: u64) -> bool {
        if self.strict {
            self.value < ll
        } else {
            self.value <= ll
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Verdict {
    pub claim: Claim,
    pub instance: String,
    pub p: u32,
    pub ll: u64,
    pub lower: Option<LowerBound>,
    pub upper: Option<u64>,
    /// Allowed values, for membership claims.
    pub allowed: Vec<u64>,
    pub status: Status,
    pub tight: bool,
    pub note: String,
    /// Index of the block of the analysed group the verdict is about.
    pub block: Option<usize>,
}

impl Verdict {
    fn base(claim: Claim, instance: &str, p: u32, ll: u64) -> Self {
        Verdict {
            claim,
            instance: instance.into(),
            p,
            ll,
            lower: None,
            upper: None,
            allowed: Vec::new(),
            status: Status::NotApplicable,
            tight: false,
            note: String::new(),
            block: None,
        }
    }

    /// An inequality `lower (<|<=) LL <= upper`; status and tightness follow from the numbers.
    pub fn bounds(
        claim: Claim,
        instance: &str,
        p: u32,
        ll: u64,
        lower: Option<LowerBound>,
        upper: Option<u64>,
    ) -> Self {
        let mut v = Verdict::base(claim, instance, p, ll);
        v.lower = lower;
        v.upper = upper;
        let ok = lower.map_or(true, |b| b.holds(ll)) && upper.map_or(true, |u| ll <= u);
        v.status = if ok { Status::Pass } else { Status::Fail };
        v.tight = upper == Some(ll);
        v
    }

    pub fn equality(claim: Claim, instance: &str, p: u32, ll: u64, expected: u64) -> Self {
        Verdict::bounds(claim, instance, p, ll, Some(LowerBound { value: expected, strict: false }), Some(expected))
    }

    pub fn membership(claim: Claim, instance: &str, p: u32, ll: u64, allowed: &[u64]) -> Self {
        let mut v = Verdict::base(claim, instance, p, ll);
        v.allowed = allowed.to_vec();
        v.status = if allowed.contains(&ll) { Status::Pass } else { Status::Fail };
        v.tight = allowed.iter().max() == Some(&ll);
        v
    }

    /// A yes/no check with no numeric bound.
    pub fn predicate(claim: Claim, instance: &str, p: u32, ll: u64, ok: bool, note: String) -> Self {
        let mut v = Verdict::base(claim, instance, p, ll);
        v.status = if ok { Status::Pass } else { Status::Fail };
        v.note = note;
        v
    }

    pub fn not_applicable(claim: Claim, instance: &str, p: u32, ll: u64, note: String) -> Self {
        let mut v = Verdict::base(claim, instance, p, ll);
        v.note = note;
        v
    }

    pub fn with_note(mut self, note: String) -> Self {
        self.note = note;
        self
    }

    pub fn on_block(mut self, index: usize) -> Self {
        self.block = Some(index);
        self
    }

    pub fn lower_ok(&self) -> Option<bool> {
        self.lower.map(|b| b.holds(self.ll))
    }

    pub fn upper_ok(&self) -> Option<bool> {
        self.upper.map(|u| self.ll <= u)
    }

    /// Compact rendering such as `2<LL<=5`, `LL=8` or `LL in {5,7}`.
    pub fn bound_string(&self) -> String {
        if !self.allowed.is_empty() {
            let values: Vec<String> = self.allowed.iter().map(|v| format!("{v}")).collect();
            return format!("LL in {{{}}}", values.join(","));
        }
        match (self.lower, self.upper) {
            (Some(lo), Some(up)) if !lo.strict && lo.value == up => format!("LL={up}"),
            (Some(lo), up) => {
                let op = if lo.strict { "<" } else { "<=" };
                match up {
                    Some(up) => format!("{}{op}LL<={up}", lo.value),
                    None => format!("{}{op}LL", lo.value),
                }
            }
            (None, Some(up)) => format!("LL<={up}"),
            (None, None) => String::new(),
        }
    }
}

fn block_instance(name: &str, report: &BlockReport) -> String {
    format!("{name}#{}", report.block.index)
}

/// All single-block verdicts for a block with abelian defect group; the
/// instance is `name#index`.
pub fn check_block(name: &str, p: u32, report: &BlockReport) -> Vec<Verdict> {
    let instance = &block_instance(name, report);
    let index = report.block.index;
    block_verdicts(instance, p, report).into_iter().map(|v| v.on_block(index)).collect()
}

fn block_verdicts(instance: &str, p: u32, report: &BlockReport) -> Vec<Verdict> {
    let ll = report.profile.ll as u64;
    let Some(shape) = &report.block.shape else {
        let note = String::from("defect group is not abelian");
        let mut claims = Vec::from([Claim::ConjecturalBound]);
        if p == 2 {
            claims.extend([Claim::DefectLower, Claim::Abelian2Upper, Claim::OrderBound]);
        }
        return claims
            .into_iter()
            .map(|c| Verdict::not_applicable(c, instance, p, ll, note.clone()))
            .collect();
    };
    let d = shape.d() as u64;
    let order = shape.order();
    let strict_d = Some(LowerBound { value: d, strict: true });
    let mut out = Vec::new();
    if p == 2 {
        out.push(Verdict::bounds(Claim::DefectLower, instance, p, ll, strict_d, None));
        let claim = if shape.s == 1 { Claim::Abelian2UpperS1 } else { Claim::Abelian2Upper };
        let upper = upper_bound_p2(shape).expect("p = 2");
        out.push(Verdict::bounds(claim, instance, p, ll, strict_d, Some(upper)));
        if shape.is_klein_four() {
            out.push(Verdict::not_applicable(
                Claim::OrderBound,
                instance,
                p,
                ll,
                format!("Klein four exemption (LL={ll}, |D|={order})"),
            ));
            out.push(Verdict::membership(Claim::KleinFour, instance, p, ll, &[3, 5]));
        } else {
            out.push(Verdict::bounds(Claim::OrderBound, instance, p, ll, None, Some(order)));
        }
    }
    if p == 2 {
        out.push(Verdict::not_applicable(
            Claim::ConjecturalBound,
            instance,
            p,
            ll,
            format!("posed for odd p; the p = 2 bound is {}", upper_bound_p2(shape).expect("p = 2")),
        ));
    } else {
        out.push(Verdict::bounds(
            Claim::ConjecturalBound,
            instance,
            p,
            ll,
            strict_d,
            Some(conjecture_bound(shape)),
        ));
    }
    if shape.is_cyclic() {
        let e = report.profile.simple_count as u64;
        let quotient = (order - 1).div_ceil(e);
        let mut lower = Verdict::bounds(
            Claim::CyclicLower,
            instance,
            p,
            ll,
            Some(LowerBound { value: quotient + 1, strict: false }),
            None,
        );
        let mut notes = Vec::new();
        if (order - 1) % e != 0 {
            notes.push(format!("e(B)={e} does not divide |D|-1={}", order - 1));
        }
        if quotient + 1 <= d {
            lower.status = Status::Fail;
            notes.push(format!("(|D|-1)/e(B)+1={} is not above d={d}", quotient + 1));
        }
        lower.note = notes.join("; ");
        out.push(lower.with_note_if_empty(format!("e(B)={e}")));
        out.push(Verdict::bounds(Claim::CyclicUpper, instance, p, ll, None, Some(order)));
    }
    out
}

impl Verdict {
    fn with_note_if_empty(mut self, note: String) -> Self {
        if self.note.is_empty() {
            self.note = note;
        }
        self
    }
}

/// Checks a normal subgroup candidate and returns it as a group with its position map.
pub fn normal_subgroup_group(
    group: &FiniteGroup,
    normal: &crate::group::Subgroup,
) -> Result<(FiniteGroup, Vec<u32>)> {
    if !group.is_normal(normal) {
        return Err(invalid!("subgroup of order {} is not normal", normal.order()));
    }
    group.subgroup_group(normal)
}

/// First block of the normal subgroup covered by `e`.
fn covered_block<'a>(g: &Analysis, n: &'a Analysis, map: &[u32], e: &AlgElement) -> Option<&'a BlockReport> {
    n.blocks.iter().find(|b| covers(&g.ctx, e, map, &b.block.idempotent))
}

/// Verdicts for a normal subgroup `N` of index `p` (idempotent equality,
/// dimension, and the Loewy length inequality), one set per block of `G`.
/// `map` sends positions of `N` to positions of `G`.
pub fn check_extension(instance: &str, g: &Analysis, n: &Analysis, map: &[u32]) -> Result<Vec<Verdict>> {
    let group = g.group();
    let sub = group.generate(map);
    if !group.is_normal(&sub) {
        return Err(invalid!("{instance}: subgroup is not normal"));
    }
    let mut out = Vec::new();
    for report in &g.blocks {
        let verdicts = extension_block(&block_instance(instance, report), g, n, map, &sub, report)?;
        out.extend(verdicts.into_iter().map(|v| v.on_block(report.block.index)));
    }
    Ok(out)
}

fn extension_block(
    name: &str,
    g: &Analysis,
    n: &Analysis,
    map: &[u32],
    sub: &crate::group::Subgroup,
    report: &BlockReport,
) -> Result<Vec<Verdict>> {
    let p = g.p;
    let group = g.group();
    let ll = report.profile.ll as u64;
    let na = |note: String| {
        Ok([Claim::IndexPIdempotent, Claim::IndexPDimension, Claim::IndexPLoewy]
            .into_iter()
            .map(|c| Verdict::not_applicable(c, name, p, ll, note.clone()))
            .collect())
    };
    if group.order() != sub.order() * p as usize {
        return na(format!("index {} is not p", group.order() / sub.order()));
    }
    let d = &report.block.defect_group;
    if !group.is_subgroup_abelian(d) {
        return na("defect group is not abelian".into());
    }
    let factors = abelian_invariants(group, d, p)?.factor_exponents().len();
    let outside = |c: &[u32]| c.iter().filter(|&&x| !sub.contains(x)).count();
    let decomposition = cyclic_decomposition(group, d, p, &|c| {
        let k = outside(c);
        k <= 1 && (c.len() < factors || k == 1)
    })?;
    let Some(x) = decomposition.and_then(|gens| gens.into_iter().find(|&x| !sub.contains(x))) else {
        return na("no cyclic factor D_r with G = N D_r and the rest inside N".into());
    };
    let dr = group.element_order(x) as u64;
    let Some(b) = covered_block(g, n, map, &report.block.idempotent) else {
        return Err(crate::error::internal!("{name}: block covers no block of N"));
    };
    let eb = embed(&g.ctx, map, &b.block.idempotent);
    let expected_dim = p as usize * b.block.dim;
    let llb = b.profile.ll as u64;
    Ok(Vec::from([
        Verdict::predicate(
            Claim::IndexPIdempotent,
            name,
            p,
            ll,
            eb == report.block.idempotent,
            format!("covered block N#{}", b.block.index),
        ),
        Verdict::predicate(
            Claim::IndexPDimension,
            name,
            p,
            ll,
            report.block.dim == expected_dim,
            format!("dim B={} p*dim b={expected_dim}", report.block.dim),
        ),
        Verdict::bounds(
            Claim::IndexPLoewy,
            name,
            p,
            ll,
            Some(LowerBound { value: llb, strict: true }),
            Some(llb + dr - dr / p as u64),
        )
        .with_note(format!("LL(b)={llb} |D_r|={dr}")),
    ]))
}

/// `LL(B) = LL(b)` for every block `B` whose defect group lies in `N` and
/// every block `b` of `N` it covers.
pub fn check_normal_defect(instance: &str, g: &Analysis, n: &Analysis, map: &[u32]) -> Result<Vec<Verdict>> {
    let p = g.p;
    let group = g.group();
    let sub = group.generate(map);
    if !group.is_normal(&sub) {
        return Err(invalid!("{instance}: subgroup is not normal"));
    }
    let mut out = Vec::new();
    for report in &g.blocks {
        let name = block_instance(instance, report);
        let ll = report.profile.ll as u64;
        if !report.block.defect_group.is_subgroup_of(&sub) {
            out.push(Verdict::not_applicable(
                Claim::NormalDefect,
                &name,
                p,
                ll,
                "defect group is not contained in N".into(),
            ).on_block(report.block.index));
            continue;
        }
        for b in n.blocks.iter().filter(|b| covers(&g.ctx, &report.block.idempotent, map, &b.block.idempotent)) {
            out.push(
                Verdict::equality(Claim::NormalDefect, &name, p, ll, b.profile.ll as u64)
                    .with_note(format!("covered block N#{}", b.block.index))
                    .on_block(report.block.index),
            );
        }
    }
    Ok(out)
}

/// `LL(B1 ⊗ B2) = LL(B1) + LL(B2) - 1` for every pair of blocks, where the
/// product block is identified by its idempotent `e_{B1} e_{B2}`.
pub fn check_product(instance: &str, g1: &Analysis, g2: &Analysis, product: &Analysis) -> Vec<Verdict> {
    let p = product.p;
    let (a, b, prod) = (g1.group(), g2.group(), product.group());
    let left: Vec<u32> = (0..a.order() as u32).map(|x| a.embed_left(prod, b, x)).collect();
    let right: Vec<u32> = (0..b.order() as u32).map(|y| b.embed_right(prod, a, y)).collect();
    let ctx = &product.ctx;
    let mut out = Vec::new();
    for b1 in &g1.blocks {
        for b2 in &g2.blocks {
            let e = ctx.mul(&embed(ctx, &left, &b1.block.idempotent), &embed(ctx, &right, &b2.block.idempotent));
            let name = format!("{instance}#{}.{}", b1.block.index, b2.block.index);
            let expected = (b1.profile.ll + b2.profile.ll - 1) as u64;
            match product.blocks.iter().find(|r| r.block.idempotent == e) {
                Some(r) => out.push(
                    Verdict::equality(Claim::DirectProduct, &name, p, r.profile.ll as u64, expected)
                        .with_note(format!("product block #{}", r.block.index))
                        .on_block(r.block.index),
                ),
                None => out.push(Verdict::predicate(
                    Claim::DirectProduct,
                    &name,
                    p,
                    0,
                    false,
                    "product of idempotents is not a block idempotent".into(),
                )),
            }
        }
    }
    out
}

/// `LL(B) = LL(kD)` for blocks with abelian defect group of a `p`-solvable group.
pub fn check_psolvable(instance: &str, g: &Analysis) -> Vec<Verdict> {
    let p = g.p;
    let solvable = g.group().is_p_solvable(p);
    g.blocks
        .iter()
        .map(|report| {
            let name = block_instance(instance, report);
            let ll = report.profile.ll as u64;
            match (&report.block.shape, solvable) {
                (_, false) => Verdict::not_applicable(Claim::PSolvable, &name, p, ll, "group is not p-solvable".into()),
                (None, true) => {
                    Verdict::not_applicable(Claim::PSolvable, &name, p, ll, "defect group is not abelian".into())
                }
                (Some(shape), true) => Verdict::equality(Claim::PSolvable, &name, p, ll, ll_abelian(shape))
                    .with_note(format!("D={shape}")),
            }
            .on_block(report.block.index)
        })
        .collect()
}

/// For an abelian `p`-group `G`: `LL(kG)` equals the closed form.
pub fn check_abelian_group(instance: &str, g: &Analysis) -> Result<Verdict> {
    let group = g.group();
    let shape = abelian_invariants(group, &group.whole(), g.p)?;
    let principal = g.principal();
    let ll = principal.profile.ll as u64;
    Ok(Verdict::equality(Claim::AbelianGroup, instance, g.p, ll, ll_abelian(&shape))
        .with_note(format!("D={shape}"))
        .on_block(principal.block.index))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use alloc::sync::Arc;
    use alloc::vec;

    fn shape(p: u32, exps: &[u32], s: u32) -> AbelianShape {
        AbelianShape::new(p, exps.to_vec(), s).unwrap()
    }

    #[test]
    fn closed_forms() {
        assert_eq!(ll_abelian(&shape(2, &[], 2)), 3);
        assert_eq!(ll_abelian(&shape(2, &[2], 0)), 4);
        assert_eq!(ll_abelian(&shape(2, &[2], 1)), 5);
        assert_eq!(upper_bound_p2(&shape(2, &[], 2)).unwrap(), 5);
        assert_eq!(upper_bound_p2(&shape(2, &[], 3)).unwrap(), 7);
        assert_eq!(upper_bound_p2(&shape(2, &[2], 1)).unwrap(), 5);
        assert_eq!(upper_bound_p2(&shape(2, &[2], 2)).unwrap(), 8);
        assert!(upper_bound_p2(&shape(3, &[], 2)).is_err());
        assert_eq!(conjecture_bound(&shape(3, &[], 2)), 7);
        assert_eq!(conjecture_bound(&shape(3, &[2], 0)), 9);
        assert_eq!(conjecture_bound(&shape(2, &[2], 1)), 5);
        assert_eq!((conjecture_bound(&shape(2, &[], 3)), upper_bound_p2(&shape(2, &[], 3)).unwrap()), (6, 7));
    }

    /// All shapes `(a_1 >= ... >= a_r >= 2, s)` with `d <= max_d`.
    fn shapes(p: u32, max_d: u32) -> Vec<AbelianShape> {
        fn parts(max_part: u32, budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            out.push(prefix.clone());
            for a in (2..=max_part.min(budget)).rev() {
                prefix.push(a);
                parts(a, budget - a, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        for s in 0..=max_d {
            let mut lists = Vec::new();
            parts(max_d - s, max_d - s, &mut Vec::new(), &mut lists);
            for exps in lists {
                out.push(AbelianShape::new(p, exps, s).unwrap());
            }
        }
        out
    }

    #[test]
    fn formula_consistency() {
        for p in [2, 3, 5] {
            for sh in shapes(p, 10).into_iter().filter(|s| s.s == 0) {
                assert_eq!(conjecture_bound(&sh), ll_abelian(&sh));
                if p == 2 {
                    assert_eq!(upper_bound_p2(&sh).unwrap(), ll_abelian(&sh));
                }
            }
        }
        let all = shapes(2, 10);
        assert!(all.len() > 100);
        for sh in all {
            let (c, u) = (conjecture_bound(&sh), upper_bound_p2(&sh).unwrap());
            assert!(c <= u, "{sh}");
            assert_eq!(c == u, sh.s == 1 || sh.s % 2 == 0, "{sh}");
            assert!(ll_abelian(&sh) <= u);
        }
    }

    #[test]
    fn verdict_rendering() {
        let v = Verdict::bounds(Claim::Abelian2Upper, "A5#0", 2, 5, Some(LowerBound { value: 2, strict: true }), Some(5));
        assert_eq!((v.status, v.tight, v.bound_string()), (Status::Pass, true, "2<LL<=5".into()));
        let v = Verdict::equality(Claim::DirectProduct, "x", 2, 8, 8);
        assert_eq!(v.bound_string(), "LL=8");
        let v = Verdict::membership(Claim::ExpectedLoewy, "A6#0", 3, 6, &[5, 7]);
        assert_eq!((v.status, v.bound_string()), (Status::Fail, "LL in {5,7}".into()));
        let v = Verdict::bounds(Claim::OrderBound, "x", 2, 5, None, Some(4));
        assert_eq!((v.status, v.upper_ok(), v.lower_ok()), (Status::Fail, Some(false), None));
        for c in Claim::ALL {
            assert_eq!(Claim::from_tag(c.tag()), Some(c));
        }
        assert_eq!(vec![Status::Pass, Status::Fail, Status::NotApplicable].iter().map(|s| Status::parse(s.as_str()).unwrap()).count(), 3);
    }

    fn run(name: &str, p: u32, m: Option<u32>) -> Analysis {
        crate::analysis::analyze(Arc::new(catalog::builtin(name).unwrap()), p, m).unwrap()
    }

    /// `N` as a group over the field of `g`, with its position map into `G`.
    fn normal(g: &Analysis, order: usize) -> (Analysis, Vec<u32>) {
        let group = g.group();
        let sub = group.normal_subgroups().into_iter().find(|s| s.order() == order).unwrap();
        let (n, map) = normal_subgroup_group(group, &sub).unwrap();
        let m = g.field().degree();
        (crate::analysis::analyze(Arc::new(n), g.p, Some(m)).unwrap(), map)
    }

    #[test]
    fn single_block_verdicts() {
        let c4 = run("C4", 2, None);
        let v = check_block("C4", 2, &c4.blocks[0]);
        let expected = |c: Claim| if c == Claim::ConjecturalBound { Status::NotApplicable } else { Status::Pass };
        assert_eq!(v.len(), 6);
        assert!(v.iter().all(|v| v.status == expected(v.claim)), "{v:?}");
        let lower = v.iter().find(|v| v.claim == Claim::CyclicLower).unwrap();
        assert_eq!(lower.lower, Some(LowerBound { value: 4, strict: false }));
        let a5 = run("A5", 2, None);
        let v = check_block("A5", 2, a5.principal());
        let find = |c| v.iter().find(|v| v.claim == c).unwrap();
        assert!(find(Claim::Abelian2Upper).tight);
        assert_eq!(find(Claim::OrderBound).status, Status::NotApplicable);
        assert_eq!(find(Claim::KleinFour).status, Status::Pass);
        assert_eq!(find(Claim::ConjecturalBound).status, Status::NotApplicable);
        let c9 = run("C9", 3, None);
        let conj = check_block("C9", 3, &c9.blocks[0]).into_iter().find(|v| v.claim == Claim::ConjecturalBound).unwrap();
        assert_eq!((conj.status, conj.upper, conj.tight), (Status::Pass, Some(9), true));
    }

    #[test]
    fn extension_and_normal_defect() {
        let c4 = run("C4", 2, None);
        let (c2, map) = normal(&c4, 2);
        let v = check_extension("C4>C2", &c4, &c2, &map).unwrap();
        assert_eq!(v.len(), 3);
        assert!(v.iter().all(|v| v.status == Status::Pass), "{v:?}");
        assert!(v.iter().any(|v| v.claim == Claim::IndexPLoewy && v.tight));

        let s3 = run("S3", 3, None);
        let (a3, map) = normal(&s3, 3);
        let v = check_normal_defect("S3>A3", &s3, &a3, &map).unwrap();
        assert!(v.iter().all(|v| v.status == Status::Pass), "{v:?}");
        assert_eq!(v.iter().find(|v| v.status == Status::Pass).unwrap().ll, 3);
        let v = check_extension("S3>A3", &s3, &a3, &map).unwrap();
        assert!(v.iter().all(|v| v.status == Status::NotApplicable));
    }

    #[test]
    fn products_and_psolvable() {
        let c2 = run("C2", 2, None);
        let prod = run("C2xC2", 2, None);
        let v = check_product("C2xC2", &c2, &c2, &prod);
        assert_eq!(v.len(), 1);
        assert_eq!((v[0].status, v[0].ll), (Status::Pass, 3));
        let s3 = run("S3", 2, Some(2));
        let c3 = run("C3", 2, Some(2));
        let prod = run("S3xC3", 2, Some(2));
        let v = check_product("S3xC3", &s3, &c3, &prod);
        assert_eq!(v.len(), 6);
        assert!(v.iter().all(|v| v.status == Status::Pass), "{v:?}");
        let a4 = run("A4", 3, None);
        let v = check_psolvable("A4", &a4);
        assert!(v.iter().all(|v| v.status == Status::Pass), "{v:?}");
        let a5 = run("A5", 2, None);
        assert!(check_psolvable("A5", &a5).iter().all(|v| v.status == Status::NotApplicable));
        assert_eq!(check_abelian_group("C4xC2", &run("C4xC2", 2, None)).unwrap().status, Status::Pass);
    }

    #[test]
    fn index_p_bound_exceeds_lower() {
        for p in [2u64, 3, 5] {
            for k in 1..6 {
                let dr = p.pow(k);
                for llb in 1..10 {
                    assert!(llb + dr - dr / p >= llb + p - 1);
                    assert!(llb + p - 1 > llb);
                }
            }
        }
    }
}
