//! A run of one or more commands sharing analyses.
//!
//! Each `(group, p, m)` is analysed once. Verdicts are attached to the
//! block they concern, and records come out in the order groups were first
//! requested.

use std::collections::HashMap;
use std::sync::Arc;
use std::time::Instant;

use loewy_core::analysis::default_degree;
use loewy_core::bounds::{
    check_abelian_group, check_block, check_extension, check_normal_defect, check_product, check_psolvable,
    normal_subgroup_group,
};
use loewy_core::{analyze, catalog, AbelianShape, Analysis, Claim, FiniteGroup, Status, Verdict};

use crate::error::{CliError, CliResult};
use crate::groupdef::{resolve_group, resolve_normal};
use crate::record::ResultRecord;

type Key = (String, u32, u32);

struct Entry {
    analysis: Arc<Analysis>,
    ms: u64,
    /// Verdicts per block index.
    verdicts: Vec<Vec<Verdict>>,
    emit: bool,
}

/// Expected values for the principal block.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expectation {
    pub ll: Vec<u64>,
    pub defect: Option<String>,
}

#[derive(Default)]
pub struct Session {
    groups: HashMap<String, FiniteGroup>,
    entries: HashMap<Key, Entry>,
    order: Vec<Key>,
    verdicts: Vec<Verdict>,
}

impl Session {
    pub fn new() -> Self {
        Self::default()
    }

    /// Resolves a group spec once and remembers it by display name.
    pub fn group(&mut self, spec: &str) -> CliResult<(String, FiniteGroup)> {
        let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(g) = self.groups.get(&compact).filter(|_| !spec.starts_with('@')) {
            return Ok((compact, g.clone()));
        }
        let (name, group) = resolve_group(spec)?;
        let group = self.groups.entry(name.clone()).or_insert(group).clone();
        Ok((name, group))
    }

    fn register(&mut self, name: &str, group: FiniteGroup) -> FiniteGroup {
        self.groups.entry(name.to_string()).or_insert(group).clone()
    }

    /// The analysis of `name` at `p` over `GF(p^m)`, computing it if needed.
    pub fn analysis(&mut self, name: &str, p: u32, m: Option<u32>) -> CliResult<(Key, Arc<Analysis>)> {
        let group = match self.groups.get(name) {
            Some(g) => g.clone(),
            None => self.group(name)?.1,
        };
        let m = match m {
            Some(m) => m,
            None => default_degree(&group, p)?,
        };
        let key = (name.to_string(), p, m);
        if let Some(e) = self.entries.get(&key) {
            return Ok((key, e.analysis.clone()));
        }
        let start = Instant::now();
        let analysis = Arc::new(analyze(Arc::new(group), p, Some(m))?);
        let ms = start.elapsed().as_millis() as u64;
        let blocks = analysis.blocks.len();
        self.entries.insert(
            key.clone(),
            Entry { analysis: analysis.clone(), ms, verdicts: vec![Vec::new(); blocks], emit: false },
        );
        self.order.push(key.clone());
        Ok((key, analysis))
    }

    fn record(&mut self, key: &Key, verdicts: Vec<Verdict>) -> CliResult<()> {
        let entry = self.entries.get_mut(key).expect("analysed before recording");
        entry.emit = true;
        for v in verdicts {
            let slot = v
                .block
                .and_then(|b| entry.verdicts.get_mut(b))
                .ok_or_else(|| CliError::Internal(format!("verdict {} names no block", v.instance)))?;
            slot.push(v.clone());
            self.verdicts.push(v);
        }
        Ok(())
    }

    /// Every verdict so far, in the order produced.
    pub fn verdicts(&self) -> &[Verdict] {
        &self.verdicts
    }

    pub fn failures(&self) -> usize {
        self.verdicts.iter().filter(|v| v.status == Status::Fail).count()
    }

    /// Block records of every group that was reported on.
    pub fn records(&self) -> Vec<ResultRecord> {
        let mut out = Vec::new();
        for key in &self.order {
            let e = &self.entries[key];
            if !e.emit {
                continue;
            }
            for (report, verdicts) in e.analysis.blocks.iter().zip(&e.verdicts) {
                out.push(ResultRecord::new(&key.0, &e.analysis, report, verdicts, e.ms));
            }
        }
        out
    }

    /// Block records of one analysis.
    pub fn records_for(&self, key: &Key) -> Vec<ResultRecord> {
        let e = &self.entries[key];
        e.analysis
            .blocks
            .iter()
            .zip(&e.verdicts)
            .map(|(report, verdicts)| ResultRecord::new(&key.0, &e.analysis, report, verdicts, e.ms))
            .collect()
    }

    /// All single-block verdicts, plus expectations on the principal block.
    pub fn run_block(&mut self, spec: &str, p: u32, m: Option<u32>, expect: &Expectation) -> CliResult<Key> {
        let (name, _) = self.group(spec)?;
        let (key, a) = self.analysis(&name, p, m)?;
        let mut verdicts = Vec::new();
        for report in &a.blocks {
            verdicts.extend(check_block(&name, p, report));
        }
        let b0 = a.principal();
        let ll = b0.profile.ll as u64;
        let instance = format!("{name}#{}", b0.block.index);
        if !expect.ll.is_empty() {
            verdicts.push(Verdict::membership(Claim::ExpectedLoewy, &instance, p, ll, &expect.ll).on_block(b0.block.index));
        }
        if let Some(shape) = &expect.defect {
            let got = crate::record::shape_string(b0);
            verdicts.push(
                Verdict::predicate(Claim::ExpectedDefect, &instance, p, ll, &got == shape, format!("D={got} expected {shape}"))
                    .on_block(b0.block.index),
            );
        }
        self.record(&key, verdicts)?;
        Ok(key)
    }

    fn normal_pair(&mut self, g: &str, n: &str, p: u32) -> CliResult<(String, Key, Arc<Analysis>, Analysis, Vec<u32>)> {
        let (name, group) = self.group(g)?;
        let sub = resolve_normal(&group, n)?;
        let (key, big) = self.analysis(&name, p, None)?;
        let (ngroup, map) = normal_subgroup_group(&group, &sub)?;
        let small = analyze(Arc::new(ngroup), p, Some(big.field().degree()))?;
        let label: String = n.chars().filter(|c| !c.is_whitespace()).collect();
        Ok((format!("{name}>{label}"), key, big, small, map))
    }

    pub fn run_extension(&mut self, g: &str, n: &str, p: u32) -> CliResult<Key> {
        let (instance, key, big, small, map) = self.normal_pair(g, n, p)?;
        let verdicts = check_extension(&instance, &big, &small, &map)?;
        self.record(&key, verdicts)?;
        Ok(key)
    }

    pub fn run_full_defect(&mut self, g: &str, n: &str, p: u32) -> CliResult<Key> {
        let (instance, key, big, small, map) = self.normal_pair(g, n, p)?;
        let verdicts = check_normal_defect(&instance, &big, &small, &map)?;
        self.record(&key, verdicts)?;
        Ok(key)
    }

    pub fn run_product(&mut self, g1: &str, g2: &str, p: u32) -> CliResult<Key> {
        let (n1, a) = self.group(g1)?;
        let (n2, b) = self.group(g2)?;
        let name = format!("{n1}x{n2}");
        let prod = a.direct_product(&b)?;
        self.register(&name, prod);
        let (key, pa) = self.analysis(&name, p, None)?;
        let m = Some(pa.field().degree());
        let (_, a1) = self.analysis(&n1, p, m)?;
        let (_, a2) = self.analysis(&n2, p, m)?;
        let verdicts = check_product(&name, &a1, &a2, &pa);
        self.record(&key, verdicts)?;
        Ok(key)
    }

    pub fn run_psolvable(&mut self, spec: &str, p: u32) -> CliResult<Key> {
        let (name, _) = self.group(spec)?;
        let (key, a) = self.analysis(&name, p, None)?;
        let verdicts = check_psolvable(&name, &a);
        self.record(&key, verdicts)?;
        Ok(key)
    }

    pub fn run_abelian(&mut self, spec: &str, p: u32) -> CliResult<Key> {
        let (name, _) = self.group(spec)?;
        let (key, a) = self.analysis(&name, p, None)?;
        let verdict = check_abelian_group(&name, &a)?;
        self.record(&key, vec![verdict])?;
        Ok(key)
    }

    /// Every abelian `p`-group of order at most `max_order`.
    pub fn run_abelian_scan(&mut self, p: u32, max_order: usize) -> CliResult<Vec<Key>> {
        loewy_core::group::check_prime(p)?;
        let mut keys = Vec::new();
        let mut k = 1;
        while (p as usize).pow(k) <= max_order {
            for factors in partitions(k, k) {
                let shape = AbelianShape::from_factor_exponents(p, &factors);
                let name = format!("Ab({shape})");
                self.register(&name, catalog::abelian_group(&shape)?);
                keys.push(self.run_abelian(&name, p)?);
            }
            k += 1;
        }
        Ok(keys)
    }
}

/// Partitions of `k` into parts at most `max`, parts descending.
fn partitions(k: u32, max: u32) -> Vec<Vec<u32>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=k.min(max)).rev() {
        for mut rest in partitions(k - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..7).map(|k| partitions(k, k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11]);
    }

    #[test]
    fn shared_analyses() {
        let mut s = Session::new();
        s.run_block("A4", 2, None, &Expectation { ll: vec![3], defect: Some("2x2".into()) }).unwrap();
        s.run_psolvable("A4", 2).unwrap();
        s.run_full_defect("A4", "V4", 2).unwrap();
        let records = s.records();
        assert_eq!(records.len(), 1);
        let kinds: Vec<&str> = records[0].verdicts.iter().map(|v| v.claim.as_str()).collect();
        for tag in ["expected-ll", "expected-defect", "p-solvable-ll", "normal-defect-ll", "abelian2-upper"] {
            assert!(kinds.contains(&tag), "{tag} missing from {kinds:?}");
        }
        assert_eq!(s.failures(), 0);
    }

    #[test]
    fn products_register_their_factors() {
        let mut s = Session::new();
        s.run_product("C2", "C2", 2).unwrap();
        let records = s.records();
        assert_eq!(records.len(), 1);
        assert_eq!((records[0].group.as_str(), records[0].ll), ("C2xC2", 3));
        assert_eq!(records[0].verdicts[0].claim, "direct-product-ll");
    }

    #[test]
    fn scan_sizes() {
        let mut s = Session::new();
        assert_eq!(s.run_abelian_scan(2, 16).unwrap().len(), 1 + 2 + 3 + 5);
        assert_eq!(s.failures(), 0);
        assert!(s.run_abelian_scan(4, 16).is_err());
    }
}
