//! Finite permutation groups with full element enumeration.
//!
//! Every group keeps its elements sorted by image sequence, so element
//! positions, class order, Sylow choice and subgroup order are all canonical.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{cap, invalid, Result};
use crate::field::{is_prime, lcm};
use crate::perm::Perm;

pub const MAX_GROUP_ORDER: usize = 5000;
pub const MAX_PGROUP_ENUMERATION: usize = 64;

/// A set of element positions of some parent group, closed under its product.
///
/// Equality and ordering look at the element set only.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elements: Vec<u32>,
    generators: Vec<u32>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.elements.cmp(&other.elements)
    }
}

impl core::hash::Hash for Subgroup {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn contains(&self, g: u32) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    table: Vec<u32>,
    inverses: Vec<u32>,
    orders: Vec<u32>,
    classes: Vec<Vec<u32>>,
    class_of: Vec<u32>,
    generator_positions: Vec<u32>,
}

impl FiniteGroup {
    /// Enumerates `<generators>` and builds the Cayley table and classes.
    pub fn close(degree: usize, generators: &[Perm]) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(invalid!("generator {g} has degree {} not {degree}", g.degree()));
            }
        }
        let generators: Vec<Perm> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();

        let identity = Perm::identity(degree);
        let mut seen = BTreeSet::new();
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.then(g);
                if !seen.contains(&y) {
                    if seen.len() >= MAX_GROUP_ORDER {
                        return Err(cap!("group order exceeds {MAX_GROUP_ORDER}"));
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let elements: Vec<Perm> = seen.into_iter().collect();
        let n = elements.len();
        let position = |p: &Perm| elements.binary_search(p).expect("closed set") as u32;

        let generator_positions: Vec<u32> = generators.iter().map(position).collect();
        // right[k][i] = position of elements[k] * generators[i]
        let right: Vec<Vec<u32>> = elements
            .iter()
            .map(|x| generators.iter().map(|g| position(&x.then(g))).collect())
            .collect();

        // Spanning tree: every element is parent * generator.
        let mut parent = vec![(u32::MAX, 0usize); n];
        let mut bfs_order = Vec::with_capacity(n);
        let mut visited = vec![false; n];
        visited[0] = true;
        let mut queue = VecDeque::from([0u32]);
        while let Some(x) = queue.pop_front() {
            bfs_order.push(x);
            for (gi, &y) in right[x as usize].iter().enumerate() {
                if !visited[y as usize] {
                    visited[y as usize] = true;
                    parent[y as usize] = (x, gi);
                    queue.push_back(y);
                }
            }
        }

        let mut table = vec![0u32; n * n];
        for i in 0..n {
            let row = &mut table[i * n..(i + 1) * n];
            row[0] = i as u32;
            for &j in &bfs_order[1..] {
                let (par, gi) = parent[j as usize];
                row[j as usize] = right[row[par as usize] as usize][gi];
            }
        }

        let mut inverses = vec![0u32; n];
        for i in 0..n {
            let row = &table[i * n..(i + 1) * n];
            let j = row.iter().position(|&k| k == 0).expect("group element has an inverse");
            inverses[i] = j as u32;
        }

        let mut orders = vec![0u32; n];
        for i in 0..n {
            let mut x = i;
            let mut k = 1;
            while x != 0 {
                x = table[x * n + i] as usize;
                k += 1;
            }
            orders[i] = k;
        }

        let mut group = FiniteGroup {
            degree,
            generators,
            elements,
            table,
            inverses,
            orders,
            classes: Vec::new(),
            class_of: Vec::new(),
            generator_positions,
        };
        group.compute_classes();
        Ok(group)
    }

    fn compute_classes(&mut self) {
        let n = self.order();
        let mut class_of = vec![u32::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            class_of[start] = id;
            let mut class = vec![start as u32];
            let mut frontier = vec![start as u32];
            while let Some(x) = frontier.pop() {
                for &g in &self.generator_positions {
                    let y = self.conjugate(x, g);
                    if class_of[y as usize] == u32::MAX {
                        class_of[y as usize] = id;
                        class.push(y);
                        frontier.push(y);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn generator_positions(&self) -> &[u32] {
        &self.generator_positions
    }

    pub fn element(&self, i: u32) -> &Perm {
        &self.elements[i as usize]
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn position(&self, p: &Perm) -> Option<u32> {
        self.elements.binary_search(p).ok().map(|i| i as u32)
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.elements.len() + b as usize]
    }

    /// Row `a` of the Cayley table: `row[b] = a * b`.
    #[inline]
    pub fn row(&self, a: u32) -> &[u32] {
        let n = self.elements.len();
        &self.table[a as usize * n..(a as usize + 1) * n]
    }

    #[inline]
    pub fn inverse(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conjugate(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inverse(g), x), g)
    }

    pub fn element_order(&self, a: u32) -> u32 {
        self.orders[a as usize]
    }

    pub fn power(&self, a: u32, k: u64) -> u32 {
        let k = k % self.orders[a as usize] as u64;
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn classes(&self) -> &[Vec<u32>] {
        &self.classes
    }

    pub fn class_of(&self, a: u32) -> usize {
        self.class_of[a as usize] as usize
    }

    pub fn commute(&self, a: u32, b: u32) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order()
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            elements: (0..self.order() as u32).collect(),
            generators: self.generator_positions.clone(),
        }
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup { elements: vec![0], generators: Vec::new() }
    }

    /// The subgroup generated by the given element positions.
    pub fn generate(&self, generators: &[u32]) -> Subgroup {
        let mut gens: Vec<u32> = generators.iter().copied().filter(|&g| g != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut elements = vec![0u32];
        let mut i = 0;
        while i < elements.len() {
            let x = elements[i];
            for &g in &gens {
                let y = self.mul(x, g);
                if !member[y as usize] {
                    member[y as usize] = true;
                    elements.push(y);
                }
            }
            i += 1;
        }
        elements.sort_unstable();
        Subgroup { elements, generators: gens }
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        if b.is_subgroup_of(a) {
            return a.clone();
        }
        if a.is_subgroup_of(b) {
            return b.clone();
        }
        let gens: Vec<u32> = a.generators.iter().chain(&b.generators).copied().collect();
        self.generate(&gens)
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let common: Vec<u32> = a.elements.iter().copied().filter(|&g| b.contains(g)).collect();
        self.generate(&common)
    }

    pub fn is_subgroup_abelian(&self, s: &Subgroup) -> bool {
        let gens = &s.generators;
        gens.iter().all(|&a| gens.iter().all(|&b| self.commute(a, b)))
    }

    pub fn is_normal(&self, s: &Subgroup) -> bool {
        self.generator_positions
            .iter()
            .all(|&g| s.generators.iter().all(|&x| s.contains(self.conjugate(x, g))))
    }

    /// `C_G(S)` by scanning all elements.
    pub fn centralizer(&self, s: &Subgroup) -> Subgroup {
        let elems: Vec<u32> = (0..self.order() as u32)
            .filter(|&g| s.generators.iter().all(|&x| self.commute(g, x)))
            .collect();
        self.subgroup_from_elements(elems)
    }

    /// `N_G(S)` by scanning all elements.
    pub fn normalizer(&self, s: &Subgroup) -> Subgroup {
        let elems: Vec<u32> = (0..self.order() as u32)
            .filter(|&g| s.generators.iter().all(|&x| s.contains(self.conjugate(x, g))))
            .collect();
        self.subgroup_from_elements(elems)
    }

    /// Wraps a set already known to be a subgroup; generators are picked greedily.
    fn subgroup_from_elements(&self, elements: Vec<u32>) -> Subgroup {
        let mut current = self.trivial();
        let mut gens = Vec::new();
        for &g in &elements {
            if !current.contains(g) {
                gens.push(g);
                current = self.generate(&gens);
            }
        }
        debug_assert_eq!(current.elements, elements);
        current
    }

    /// Largest power of `p` dividing `|G|`.
    pub fn p_part(&self, p: u32) -> usize {
        let mut n = self.order();
        let mut part = 1;
        while n % p as usize == 0 {
            n /= p as usize;
            part *= p as usize;
        }
        part
    }

    pub fn is_p_element(&self, g: u32, p: u32) -> bool {
        is_power_of(self.orders[g as usize] as usize, p)
    }

    /// A Sylow `p`-subgroup, grown by normalizer ascent from a cyclic
    /// subgroup of maximal `p`-power order.
    pub fn sylow(&self, p: u32) -> Subgroup {
        let target = self.p_part(p);
        if target == 1 {
            return self.trivial();
        }
        let start = (0..self.order() as u32)
            .filter(|&g| self.is_p_element(g, p))
            .max_by_key(|&g| (self.orders[g as usize], core::cmp::Reverse(g)))
            .expect("identity is a p-element");
        let mut q = self.generate(&[start]);
        while q.order() < target {
            let norm = self.normalizer(&q);
            let y = norm
                .elements
                .iter()
                .copied()
                .find(|&y| !q.contains(y) && self.is_p_element(y, p))
                .expect("a non-Sylow p-subgroup has a p-element in its normalizer outside it");
            let mut gens = q.generators.clone();
            gens.push(y);
            q = self.generate(&gens);
        }
        q
    }

    /// Every subgroup of the `p`-group `s`, each once, sorted by (order, elements).
    pub fn subgroups_of_pgroup(&self, s: &Subgroup, p: u32) -> Result<Vec<Subgroup>> {
        if s.order() > MAX_PGROUP_ENUMERATION {
            return Err(cap!(
                "subgroup enumeration limited to p-groups of order <= {MAX_PGROUP_ENUMERATION}, got {}",
                s.order()
            ));
        }
        if !is_power_of(s.order(), p) {
            return Err(invalid!("subgroup of order {} is not a {p}-group", s.order()));
        }
        let mut cyclic: BTreeMap<Vec<u32>, Subgroup> = BTreeMap::new();
        for &g in &s.elements {
            let c = self.generate(&[g]);
            cyclic.entry(c.elements.clone()).or_insert(c);
        }
        let cyclic: Vec<Subgroup> = cyclic.into_values().collect();
        let mut all: BTreeMap<Vec<u32>, Subgroup> =
            cyclic.iter().map(|c| (c.elements.clone(), c.clone())).collect();
        let mut frontier: Vec<Subgroup> = cyclic.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for h in &frontier {
                for c in &cyclic {
                    if c.is_subgroup_of(h) {
                        continue;
                    }
                    let j = self.join(h, c);
                    if !all.contains_key(&j.elements) {
                        all.insert(j.elements.clone(), j.clone());
                        next.push(j);
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<Subgroup> = all.into_values().collect();
        out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
        Ok(out)
    }

    /// Every normal subgroup, sorted by (order, elements).
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        let closures: Vec<Subgroup> = self
            .classes
            .iter()
            .map(|class| self.generate(class))
            .collect();
        let mut all: BTreeMap<Vec<u32>, Subgroup> =
            closures.iter().map(|c| (c.elements.clone(), c.clone())).collect();
        let mut frontier: Vec<Subgroup> = all.values().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for h in &frontier {
                for c in &closures {
                    let j = self.join(h, c);
                    if !all.contains_key(&j.elements) {
                        all.insert(j.elements.clone(), j.clone());
                        next.push(j);
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<Subgroup> = all.into_values().collect();
        out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
        out
    }

    /// Whether every chief factor is a `p`-group or a `p'`-group.
    ///
    /// Walks the upper `p`-series through the lattice of normal subgroups:
    /// from `N`, jump to the largest normal `K >= N` with `K/N` a `p'`-group,
    /// else a `p`-group. A `p`-solvable quotient always admits one of the two.
    pub fn is_p_solvable(&self, p: u32) -> bool {
        let normals = self.normal_subgroups();
        let mut current = self.trivial();
        while current.order() < self.order() {
            let containing = normals
                .iter()
                .filter(|k| k.order() > current.order() && current.is_subgroup_of(k));
            let index = |k: &Subgroup| k.order() / current.order();
            let p_prime = containing
                .clone()
                .filter(|k| index(k) % p as usize != 0)
                .max_by_key(|k| k.order());
            let p_power = containing
                .filter(|k| is_power_of(index(k), p))
                .max_by_key(|k| k.order());
            match p_prime.or(p_power) {
                Some(k) => current = k.clone(),
                None => return false,
            }
        }
        true
    }

    /// `p'`-part of the exponent of the group.
    pub fn p_prime_exponent(&self, p: u32) -> u64 {
        self.orders.iter().fold(1u64, |acc, &o| {
            let mut o = o as u64;
            while o % p as u64 == 0 {
                o /= p as u64;
            }
            lcm(acc, o)
        })
    }

    /// `G x H` acting on the disjoint union of the two point sets.
    pub fn direct_product(&self, other: &FiniteGroup) -> Result<FiniteGroup> {
        if self.order() * other.order() > MAX_GROUP_ORDER {
            return Err(cap!(
                "direct product order {} exceeds {MAX_GROUP_ORDER}",
                self.order() * other.order()
            ));
        }
        let left_id = Perm::identity(self.degree);
        let right_id = Perm::identity(other.degree);
        let gens: Vec<Perm> = self
            .generators
            .iter()
            .map(|g| g.disjoint_union(&right_id))
            .chain(other.generators.iter().map(|h| left_id.disjoint_union(h)))
            .collect();
        FiniteGroup::close(self.degree + other.degree, &gens)
    }

    /// Position of `(g, 1)` in `self x other`.
    pub fn embed_left(&self, product: &FiniteGroup, other: &FiniteGroup, g: u32) -> u32 {
        let perm = self.elements[g as usize].disjoint_union(&Perm::identity(other.degree));
        product.position(&perm).expect("factor embeds in the product")
    }

    /// Position of `(1, h)` in `first x self`.
    pub fn embed_right(&self, product: &FiniteGroup, first: &FiniteGroup, h: u32) -> u32 {
        let perm = Perm::identity(first.degree).disjoint_union(&self.elements[h as usize]);
        product.position(&perm).expect("factor embeds in the product")
    }

    /// The subgroup as a group in its own right, with the map from its
    /// element positions to positions in `self`.
    pub fn subgroup_group(&self, s: &Subgroup) -> Result<(FiniteGroup, Vec<u32>)> {
        let gens: Vec<Perm> = s.generators.iter().map(|&g| self.elements[g as usize].clone()).collect();
        let sub = FiniteGroup::close(self.degree, &gens)?;
        let map = sub
            .elements
            .iter()
            .map(|perm| self.position(perm).expect("subgroup element lies in the group"))
            .collect();
        Ok((sub, map))
    }

    /// Sorted element orders of `s`, a cheap isomorphism invariant.
    pub fn order_profile(&self, s: &Subgroup) -> Vec<u32> {
        let mut v: Vec<u32> = s.elements.iter().map(|&g| self.orders[g as usize]).collect();
        v.sort_unstable();
        v
    }
}

pub fn is_power_of(mut n: usize, p: u32) -> bool {
    if n == 0 {
        return false;
    }
    while n % p as usize == 0 {
        n /= p as usize;
    }
    n == 1
}

/// Exponent `k` with `p^k = n`, when `n` is a power of `p`.
pub fn log_p(n: usize, p: u32) -> Option<u32> {
    if !is_power_of(n, p) {
        return None;
    }
    let mut k = 0;
    let mut m = n;
    while m > 1 {
        m /= p as usize;
        k += 1;
    }
    Some(k)
}

pub fn check_prime(p: u32) -> Result<()> {
    if is_prime(p as u64) {
        Ok(())
    } else {
        Err(invalid!("{p} is not prime"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn group(degree: usize, gens: &[&str]) -> FiniteGroup {
        let perms: Vec<Perm> = gens
            .iter()
            .map(|g| Perm::from_cycles(degree, &parse_cycles(g).unwrap()).unwrap())
            .collect();
        FiniteGroup::close(degree, &perms).unwrap()
    }

    /// Closure oracle: repeated products until nothing new appears.
    fn naive_closure(gens: &[Perm], degree: usize) -> usize {
        let mut set: BTreeSet<Perm> = BTreeSet::new();
        set.insert(Perm::identity(degree));
        loop {
            let snapshot: Vec<Perm> = set.iter().cloned().collect();
            let before = set.len();
            for a in &snapshot {
                for b in gens {
                    set.insert(a.then(b));
                }
            }
            if set.len() == before {
                return set.len();
            }
        }
    }

    /// Conjugacy-class oracle over all group elements, not just generators.
    fn naive_class_sizes(g: &FiniteGroup) -> Vec<usize> {
        let n = g.order() as u32;
        let mut seen = vec![false; n as usize];
        let mut sizes = Vec::new();
        for x in 0..n {
            if seen[x as usize] {
                continue;
            }
            let class: BTreeSet<u32> = (0..n).map(|h| g.conjugate(x, h)).collect();
            for &y in &class {
                seen[y as usize] = true;
            }
            sizes.push(class.len());
        }
        sizes
    }

    #[test]
    fn closure_orders() {
        let c4 = group(4, &["(1 2 3 4)"]);
        assert_eq!(c4.order(), 4);
        let a5 = group(5, &["(1 2 3 4 5)", "(3 4 5)"]);
        assert_eq!(a5.order(), 60);
        assert_eq!(naive_closure(a5.generators(), 5), 60);
        let trivial = FiniteGroup::close(1, &[]).unwrap();
        assert_eq!(trivial.order(), 1);
        assert!(trivial.element(0).is_identity());
    }

    #[test]
    fn cayley_table_is_consistent() {
        let a5 = group(5, &["(1 2 3 4 5)", "(3 4 5)"]);
        for a in 0..60u32 {
            for b in (0..60u32).step_by(7) {
                let p = a5.element(a).then(a5.element(b));
                assert_eq!(a5.position(&p), Some(a5.mul(a, b)));
            }
            assert_eq!(a5.mul(a, a5.inverse(a)), 0);
        }
    }

    #[test]
    fn class_sizes() {
        let a5 = group(5, &["(1 2 3 4 5)", "(3 4 5)"]);
        let mut sizes: Vec<usize> = a5.classes().iter().map(|c| c.len()).collect();
        let mut oracle = naive_class_sizes(&a5);
        sizes.sort_unstable();
        oracle.sort_unstable();
        assert_eq!(sizes, oracle);
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);

        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        let mut sizes: Vec<usize> = s3.classes().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);

        let c4 = group(4, &["(1 2 3 4)"]);
        assert!(c4.classes().iter().all(|c| c.len() == 1));
    }

    #[test]
    fn sylow_and_centralizer() {
        let a5 = group(5, &["(1 2 3 4 5)", "(3 4 5)"]);
        let p = a5.sylow(2);
        assert_eq!(p.order(), 4);
        assert!(a5.is_subgroup_abelian(&p));
        assert!(p.elements().iter().all(|&g| a5.element_order(g) <= 2));
        assert_eq!(a5.centralizer(&p), p);
        assert_eq!(a5.sylow(7).order(), 1);
        let c12 = group(12, &["(1 2 3 4 5 6 7 8 9 10 11 12)"]);
        let s = c12.sylow(2);
        assert_eq!(s.order(), 4);
        assert!(s.elements().iter().any(|&g| c12.element_order(g) == 4));
    }

    #[test]
    fn pgroup_subgroup_counts() {
        let v4 = group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert_eq!(v4.subgroups_of_pgroup(&v4.whole(), 2).unwrap().len(), 5);
        let c4 = group(4, &["(1 2 3 4)"]);
        assert_eq!(c4.subgroups_of_pgroup(&c4.whole(), 2).unwrap().len(), 3);
        let e8 = group(6, &["(1 2)", "(3 4)", "(5 6)"]);
        let subs = e8.subgroups_of_pgroup(&e8.whole(), 2).unwrap();
        assert_eq!(subs.len(), 16);
        for a in &subs {
            for b in &subs {
                let i = e8.intersection(a, b);
                assert!(subs.contains(&i));
            }
        }
        assert!(e8.subgroups_of_pgroup(&e8.whole(), 3).is_err());
    }

    #[test]
    fn direct_products_and_exponents() {
        let c4 = group(4, &["(1 2 3 4)"]);
        let a5 = group(5, &["(1 2 3 4 5)", "(3 4 5)"]);
        let prod = c4.direct_product(&a5).unwrap();
        assert_eq!(prod.order(), 240);
        assert_eq!(prod.degree(), 9);
        assert_eq!(prod.classes().len(), c4.classes().len() * a5.classes().len());
        assert_eq!(a5.p_prime_exponent(2), 15);
        assert!(prod.direct_product(&a5).is_err());
        let g = c4.embed_left(&prod, &a5, 1);
        assert_eq!(prod.element_order(g), c4.element_order(1));
    }

    #[test]
    fn normal_subgroups_and_solvability() {
        let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
        let orders: Vec<usize> = s4.normal_subgroups().iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        assert!(s4.is_p_solvable(2));
        assert!(s4.is_p_solvable(3));
        let a5 = group(5, &["(1 2 3 4 5)", "(3 4 5)"]);
        assert!(!a5.is_p_solvable(2));
        assert!(!a5.is_p_solvable(5));
        assert!(a5.is_p_solvable(7));
    }
}
