//! Abelian `p`-groups in the form `C_{p^a_1} x ... x C_{p^a_r} x (C_p)^s`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{invalid, Result};
use crate::group::{is_power_of, FiniteGroup, Subgroup};

/// Cyclic decomposition of an abelian `p`-group with the order-`p` factors
/// counted separately: `exponents` holds the `a_i >= 2` (descending), `s`
/// the number of `C_p` factors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbelianShape {
    pub p: u32,
    pub exponents: Vec<u32>,
    pub s: u32,
}

impl AbelianShape {
    pub fn new(p: u32, mut exponents: Vec<u32>, s: u32) -> Result<Self> {
        if exponents.iter().any(|&a| a < 2) {
            return Err(invalid!("exponents of non-elementary factors must be at least 2"));
        }
        exponents.sort_unstable_by(|a, b| b.cmp(a));
        Ok(AbelianShape { p, exponents, s })
    }

    /// From the full list of cyclic-factor exponents (1s included).
    pub fn from_factor_exponents(p: u32, factors: &[u32]) -> Self {
        let s = factors.iter().filter(|&&a| a == 1).count() as u32;
        let mut exponents: Vec<u32> = factors.iter().copied().filter(|&a| a >= 2).collect();
        exponents.sort_unstable_by(|a, b| b.cmp(a));
        AbelianShape { p, exponents, s }
    }

    pub fn trivial(p: u32) -> Self {
        AbelianShape { p, exponents: Vec::new(), s: 0 }
    }

    pub fn r(&self) -> u32 {
        self.exponents.len() as u32
    }

    /// The defect `d` with `|D| = p^d`.
    pub fn d(&self) -> u32 {
        self.exponents.iter().sum::<u32>() + self.s
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.d())
    }

    /// All cyclic factor exponents, descending, order-`p` factors last.
    pub fn factor_exponents(&self) -> Vec<u32> {
        let mut v = self.exponents.clone();
        v.extend(core::iter::repeat(1).take(self.s as usize));
        v
    }

    pub fn is_trivial(&self) -> bool {
        self.d() == 0
    }

    pub fn is_cyclic(&self) -> bool {
        self.r() + self.s == 1
    }

    pub fn is_klein_four(&self) -> bool {
        self.p == 2 && self.exponents.is_empty() && self.s == 2
    }

    /// Parses `a1,a2,...:s`, e.g. `:2` for the Klein four group or `2:1` for `C4 x C2`.
    pub fn parse(text: &str, p: u32) -> Result<Self> {
        let (head, tail) = text
            .split_once(':')
            .ok_or_else(|| invalid!("shape {text:?} must look like a1,a2,...:s"))?;
        let exponents = head
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| invalid!("bad exponent {t:?} in shape {text:?}")))
            .collect::<Result<Vec<u32>>>()?;
        let tail = tail.trim();
        let s = if tail.is_empty() {
            0
        } else {
            tail.parse::<u32>().map_err(|_| invalid!("bad multiplicity {tail:?} in shape {text:?}"))?
        };
        AbelianShape::new(p, exponents, s)
    }
}

/// `2^2x2` for `C4 x C2`, `3x3` for `C3 x C3`, `1` for the trivial group.
impl fmt::Display for AbelianShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("1");
        }
        let mut parts: Vec<String> = self
            .exponents
            .iter()
            .map(|a| alloc::format!("{}^{}", self.p, a))
            .collect();
        parts.extend(core::iter::repeat(alloc::format!("{}", self.p)).take(self.s as usize));
        f.write_str(&parts.join("x"))
    }
}

fn check_abelian_pgroup(group: &FiniteGroup, a: &Subgroup, p: u32) -> Result<()> {
    if !is_power_of(a.order(), p) {
        return Err(invalid!("subgroup of order {} is not a {p}-group", a.order()));
    }
    if !group.is_subgroup_abelian(a) {
        return Err(invalid!("subgroup of order {} is not abelian", a.order()));
    }
    Ok(())
}

/// Cyclic-factor exponents of `a`, descending, read off from the sizes of
/// the layers `{x : x^{p^k} = 1}`.
fn factor_exponents(group: &FiniteGroup, a: &Subgroup, p: u32) -> Vec<u32> {
    let mut omega = Vec::new();
    let mut k = 0u32;
    loop {
        let bound = (p as u64).pow(k);
        let count = a
            .elements()
            .iter()
            .filter(|&&g| bound % group.element_order(g) as u64 == 0)
            .count();
        omega.push(count);
        if count == a.order() {
            break;
        }
        k += 1;
    }
    // Number of factors of order >= p^k is log_p(|Omega_k| / |Omega_{k-1}|).
    let mut at_least = Vec::new();
    for k in 1..omega.len() {
        let ratio = omega[k] / omega[k - 1];
        at_least.push(crate::group::log_p(ratio, p).unwrap_or(0));
    }
    let mut exps = Vec::new();
    for (k, &n) in at_least.iter().enumerate() {
        let next = at_least.get(k + 1).copied().unwrap_or(0);
        for _ in 0..n - next {
            exps.push(k as u32 + 1);
        }
    }
    exps.sort_unstable_by(|x, y| y.cmp(x));
    exps
}

pub fn abelian_invariants(group: &FiniteGroup, a: &Subgroup, p: u32) -> Result<AbelianShape> {
    check_abelian_pgroup(group, a, p)?;
    Ok(AbelianShape::from_factor_exponents(p, &factor_exponents(group, a, p)))
}

/// Generators `x_1, ..., x_t` with `a = <x_1> x ... x <x_t>` and orders
/// matching the invariants (descending). `accept` can veto partial choices;
/// the search backtracks, so a decomposition is found whenever one
/// satisfying `accept` exists.
pub fn cyclic_decomposition(
    group: &FiniteGroup,
    a: &Subgroup,
    p: u32,
    accept: &dyn Fn(&[u32]) -> bool,
) -> Result<Option<Vec<u32>>> {
    check_abelian_pgroup(group, a, p)?;
    let exps = factor_exponents(group, a, p);
    let mut chosen = Vec::new();
    Ok(search(group, a, p, &exps, &mut chosen, accept).then_some(chosen))
}

fn search(
    group: &FiniteGroup,
    a: &Subgroup,
    p: u32,
    exps: &[u32],
    chosen: &mut Vec<u32>,
    accept: &dyn Fn(&[u32]) -> bool,
) -> bool {
    let k = chosen.len();
    if k == exps.len() {
        return true;
    }
    let target = (p as usize).pow(exps[k]);
    let expected = (p as usize).pow(exps[..=k].iter().sum());
    for &x in a.elements() {
        if group.element_order(x) as usize != target {
            continue;
        }
        chosen.push(x);
        if accept(chosen) && group.generate(chosen).order() == expected && search(group, a, p, exps, chosen, accept) {
            return true;
        }
        chosen.pop();
    }
    false
}
