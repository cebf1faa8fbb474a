//! Fully enumerated finite groups and their subgroups.
//!
//! A [`FiniteGroup`] is realized once by breadth-first closure of its
//! generators and is immutable afterwards. Elements are addressed by their
//! position in the enumeration (an element id); id 0 is always the identity.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::element::{CayleyTable, Encoding, GroupElement, MulRule};
use crate::error::{Error, Result};
use crate::numtheory::{gcd, is_prime, p_part, prime_divisors};

pub const DEFAULT_ORDER_CAP: usize = 50_000;

/// Environment variable overriding [`DEFAULT_ORDER_CAP`].
pub const CAP_ENV: &str = "RATGK_ORDER_CAP";

pub fn default_cap() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_ORDER_CAP)
}

#[derive(Debug)]
pub struct FiniteGroup {
    rule: MulRule,
    generators: Vec<usize>,
    elements: Vec<GroupElement>,
    index: HashMap<Encoding, usize>,
    inverses: OnceLock<Vec<usize>>,
    orders: OnceLock<Vec<u64>>,
    classes: OnceLock<ConjugacyClasses>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClasses {
    /// Classes ordered by their smallest element id; members ascending.
    pub classes: Vec<Vec<usize>>,
    /// Class index of every element.
    pub class_of: Vec<usize>,
    /// Representative of each class: the member with least encoding.
    pub representatives: Vec<usize>,
}

/// A subgroup stored as a membership mask over the parent's element ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    parent_order: usize,
    members: Vec<bool>,
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, id: usize) -> bool {
        self.members.get(id).copied().unwrap_or(false)
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn same_elements(&self, other: &Subgroup) -> bool {
        self.members == other.members
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }
}

/// Quotient group realized over a Cayley table of cosets.
#[derive(Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// Parent element id -> quotient element id.
    pub projection: Vec<usize>,
    /// Coset index (table index) -> parent id of its lexicographically least member.
    pub representatives: Vec<usize>,
}

impl FiniteGroup {
    pub fn generate(generators: Vec<GroupElement>, rule: MulRule) -> Result<FiniteGroup> {
        FiniteGroup::generate_with_cap(generators, rule, default_cap())
    }

    pub fn generate_with_cap(
        generators: Vec<GroupElement>,
        rule: MulRule,
        cap: usize,
    ) -> Result<FiniteGroup> {
        let first = generators.first().ok_or(Error::EmptyGenerators)?;
        let identity = first.identity_like();
        FiniteGroup::generate_from(identity, generators, rule, cap)
    }

    /// Closure of `generators` starting from an explicit identity; allows an empty list.
    pub fn generate_from(
        identity: GroupElement,
        generators: Vec<GroupElement>,
        rule: MulRule,
        cap: usize,
    ) -> Result<FiniteGroup> {
        let shape = identity.shape();
        if !rule.accepts(&shape) {
            return Err(Error::InconsistentShapes(
                "multiplication rule does not fit the element shape".into(),
            ));
        }
        for g in &generators {
            if g.shape() != shape {
                return Err(Error::InconsistentShapes(format!(
                    "generator {g} differs in shape from the first generator"
                )));
            }
            g.validate()?;
        }
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity.encode(), 0usize);
        let mut head = 0;
        while head < elements.len() {
            for g in &generators {
                let y = rule.mul(&elements[head], g);
                let enc = y.encode();
                if !index.contains_key(&enc) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    index.insert(enc, elements.len());
                    elements.push(y);
                }
            }
            head += 1;
        }
        let gen_ids = generators.iter().map(|g| index[&g.encode()]).collect();
        Ok(FiniteGroup {
            rule,
            generators: gen_ids,
            elements,
            index,
            inverses: OnceLock::new(),
            orders: OnceLock::new(),
            classes: OnceLock::new(),
        })
    }

    /// Abstract group from a Cayley table whose index 0 is the identity.
    pub fn from_table(table: CayleyTable) -> Result<FiniteGroup> {
        let n = table.size();
        let gens = (1..n as u32).map(GroupElement::Table).collect();
        FiniteGroup::generate_from(
            GroupElement::Table(0),
            gens,
            MulRule::Table(Arc::new(table)),
            n.max(1),
        )
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn rule(&self) -> &MulRule {
        &self.rule
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &GroupElement {
        &self.elements[id]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_elements(&self) -> Vec<GroupElement> {
        self.generators.iter().map(|&g| self.elements[g].clone()).collect()
    }

    pub fn id_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(&g.encode()).copied()
    }

    pub fn require(&self, g: &GroupElement) -> Result<usize> {
        self.id_of(g).ok_or(Error::NotMember)
    }

    pub fn ids_of(&self, gs: &[GroupElement]) -> Result<Vec<usize>> {
        gs.iter().map(|g| self.require(g)).collect()
    }

    pub fn encoding(&self, id: usize) -> Encoding {
        self.elements[id].encode()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let y = self.rule.mul(&self.elements[a], &self.elements[b]);
        self.index[&y.encode()]
    }

    pub fn mul_elements(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.rule.mul(a, b)
    }

    /// Product of a word of element ids, left to right.
    pub fn product(&self, word: &[usize]) -> usize {
        word.iter().fold(self.identity(), |acc, &x| self.mul(acc, x))
    }

    pub fn inverses(&self) -> &[usize] {
        self.inverses.get_or_init(|| {
            let orders = self.orders();
            (0..self.order())
                .into_par_iter()
                .map(|x| self.pow_unsigned(x, orders[x] - 1))
                .collect()
        })
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses()[a]
    }

    fn pow_unsigned(&self, a: usize, mut e: u64) -> usize {
        let mut acc = self.identity();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let ord = self.element_order(a) as i64;
        self.pow_unsigned(a, e.rem_euclid(ord) as u64)
    }

    /// `x^g = g^{-1} x g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[a, b] = a^{-1} b^{-1} a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn orders(&self) -> &[u64] {
        self.orders.get_or_init(|| {
            (0..self.order())
                .into_par_iter()
                .map(|x| {
                    let mut k = 1u64;
                    let mut y = x;
                    while y != 0 {
                        y = self.mul(y, x);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    pub fn element_order(&self, id: usize) -> u64 {
        self.orders()[id]
    }

    /// Order of an element given concretely; errors if it is not in the group.
    pub fn order_of(&self, g: &GroupElement) -> Result<u64> {
        Ok(self.element_order(self.require(g)?))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| {
            self.generators
                .iter()
                .all(|&b| self.mul(a, b) == self.mul(b, a))
        })
    }

    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| {
            let n = self.order();
            let mut class_of = vec![usize::MAX; n];
            let mut classes = Vec::new();
            for start in 0..n {
                if class_of[start] != usize::MAX {
                    continue;
                }
                let c = classes.len();
                let mut members = vec![start];
                class_of[start] = c;
                let mut head = 0;
                while head < members.len() {
                    let x = members[head];
                    for &g in &self.generators {
                        let y = self.conj(x, g);
                        if class_of[y] == usize::MAX {
                            class_of[y] = c;
                            members.push(y);
                        }
                    }
                    head += 1;
                }
                members.sort_unstable();
                classes.push(members);
            }
            let representatives = classes
                .iter()
                .map(|cl| {
                    *cl.iter()
                        .min_by_key(|&&x| self.encoding(x))
                        .expect("nonempty class")
                })
                .collect();
            ConjugacyClasses {
                classes,
                class_of,
                representatives,
            }
        })
    }

    // ---- subgroups ----

    fn subgroup_from_members(&self, members: Vec<bool>, generators: Vec<usize>) -> Subgroup {
        let elements = members
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        Subgroup {
            parent_order: self.order(),
            members,
            elements,
            generators,
        }
    }

    fn closure_members(&self, gens: &[usize]) -> Vec<bool> {
        let mut members = vec![false; self.order()];
        members[0] = true;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            for &g in gens {
                let y = self.mul(x, g);
                if !members[y] {
                    members[y] = true;
                    queue.push(y);
                }
            }
            head += 1;
        }
        members
    }

    /// Subgroup generated by the given element ids.
    ///
    /// The stored generating set drops ids already in the span of earlier ones.
    pub fn subgroup(&self, gens: &[usize]) -> Subgroup {
        let mut kept: Vec<usize> = Vec::new();
        let mut members = self.closure_members(&[]);
        for &g in gens {
            if members[g] {
                continue;
            }
            kept.push(g);
            members = self.closure_members(&kept);
        }
        self.subgroup_from_members(members, kept)
    }

    /// Subgroup from a set of ids already known to be closed; verifies closure.
    pub fn subgroup_from_set(&self, ids: &[usize]) -> Result<Subgroup> {
        let mut members = vec![false; self.order()];
        for &x in ids {
            if x >= self.order() {
                return Err(Error::NotMember);
            }
            members[x] = true;
        }
        let sub = self.subgroup(ids);
        if sub.members != members {
            return Err(Error::NotSubgroup);
        }
        Ok(sub)
    }

    pub fn whole(&self) -> Subgroup {
        self.subgroup_from_members(vec![true; self.order()], self.generators.clone())
    }

    pub fn trivial(&self) -> Subgroup {
        self.subgroup(&[])
    }

    fn check_sub(&self, h: &Subgroup) -> Result<()> {
        if h.parent_order != self.order() || h.members.len() != self.order() {
            return Err(Error::NotSubgroup);
        }
        Ok(())
    }

    pub fn centralizer(&self, xs: &[usize]) -> Result<Subgroup> {
        if xs.iter().any(|&x| x >= self.order()) {
            return Err(Error::NotMember);
        }
        let members: Vec<bool> = (0..self.order())
            .into_par_iter()
            .map(|g| xs.iter().all(|&x| self.mul(g, x) == self.mul(x, g)))
            .collect();
        let ids: Vec<usize> = (0..self.order()).filter(|&g| members[g]).collect();
        Ok(self.subgroup(&ids))
    }

    pub fn centralizer_of_elements(&self, xs: &[GroupElement]) -> Result<Subgroup> {
        let ids = self.ids_of(xs)?;
        self.centralizer(&ids)
    }

    pub fn normalizes(&self, g: usize, h: &Subgroup) -> bool {
        h.generators.iter().all(|&x| h.contains(self.conj(x, g)))
    }

    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup> {
        self.check_sub(h)?;
        let ids: Vec<usize> = (0..self.order())
            .into_par_iter()
            .filter(|&g| self.normalizes(g, h))
            .collect();
        Ok(self.subgroup(&ids))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.generators.iter().all(|&g| self.normalizes(g, h))
    }

    /// Smallest normal subgroup containing the given ids.
    pub fn normal_closure(&self, ids: &[usize]) -> Subgroup {
        let mut sub = self.subgroup(ids);
        loop {
            let extra: Vec<usize> = sub
                .generators
                .iter()
                .flat_map(|&x| self.generators.iter().map(move |&g| (x, g)))
                .map(|(x, g)| self.conj(x, g))
                .filter(|&y| !sub.contains(y))
                .collect();
            if extra.is_empty() {
                return sub;
            }
            let mut gens = sub.generators.clone();
            gens.extend(extra);
            sub = self.subgroup(&gens);
        }
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(&self.generators.clone())
            .expect("generators are members")
    }

    /// Commutator subgroup of `h`, computed inside this group.
    pub fn derived_subgroup(&self, h: &Subgroup) -> Subgroup {
        let gens = &h.generators;
        let mut comms: Vec<usize> = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                comms.push(self.commutator(a, b));
            }
        }
        // normal closure inside h
        let mut sub = self.subgroup(&comms);
        loop {
            let extra: Vec<usize> = sub
                .generators
                .iter()
                .flat_map(|&x| gens.iter().map(move |&g| (x, g)))
                .map(|(x, g)| self.conj(x, g))
                .filter(|&y| !sub.contains(y))
                .collect();
            if extra.is_empty() {
                return sub;
            }
            let mut all = sub.generators.clone();
            all.extend(extra);
            sub = self.subgroup(&all);
        }
    }

    /// `G = G^(0) ≥ G^(1) ≥ ...` until it stabilizes.
    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.derived_subgroup(last);
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series()
            .last()
            .map(|s| s.is_trivial())
            .unwrap_or(true)
    }

    /// Sylow `p`-subgroup by normalizer growth.
    ///
    /// Starts from the trivial subgroup and repeatedly adjoins the first
    /// `p`-element (in id order) of `N_G(P) \ P` until `|P|` is the full
    /// `p`-part of `|G|`.
    pub fn sylow_subgroup(&self, p: u64) -> Result<Subgroup> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let target = p_part(self.order() as u64, p) as usize;
        let orders = self.orders();
        let is_p_elt = |x: usize| p_part(orders[x], p) == orders[x];
        let mut sylow = self.trivial();
        while sylow.order() < target {
            let norm = if sylow.is_trivial() {
                self.whole()
            } else {
                self.normalizer(&sylow)?
            };
            let x = norm
                .elements
                .iter()
                .copied()
                .find(|&x| !sylow.contains(x) && is_p_elt(x))
                .expect("a p-subgroup below the p-part has a p-element in its normalizer outside it");
            let mut gens = sylow.generators.clone();
            gens.push(x);
            sylow = self.subgroup(&gens);
        }
        Ok(sylow)
    }

    /// Realizes `h` as a standalone group with the same elements and rule.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> Result<FiniteGroup> {
        self.check_sub(h)?;
        let gens = h.generators.iter().map(|&g| self.elements[g].clone()).collect();
        FiniteGroup::generate_from(
            self.elements[0].clone(),
            gens,
            self.rule.clone(),
            h.order().max(1),
        )
    }

    /// Whether `x` lies in the product set `A * B`.
    pub fn in_product_set(&self, x: usize, a: &Subgroup, b: &Subgroup) -> bool {
        a.elements.iter().any(|&y| b.contains(self.mul(self.inv(y), x)))
    }

    pub fn quotient(&self, n: &Subgroup) -> Result<Quotient> {
        self.check_sub(n)?;
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let order = self.order();
        let mut coset_of = vec![usize::MAX; order];
        let mut cosets: Vec<(Encoding, usize, Vec<usize>)> = Vec::new();
        for g in 0..order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let members: Vec<usize> = n.elements.iter().map(|&x| self.mul(x, g)).collect();
            let rep = *members
                .iter()
                .min_by_key(|&&x| self.encoding(x))
                .expect("nonempty coset");
            for &m in &members {
                coset_of[m] = cosets.len();
            }
            cosets.push((self.encoding(rep), rep, members));
        }
        // N itself first, remaining cosets by representative encoding
        let mut idx: Vec<usize> = (1..cosets.len()).collect();
        idx.sort_by(|&a, &b| cosets[a].0.cmp(&cosets[b].0));
        idx.insert(0, 0);
        let mut renumber = vec![0usize; cosets.len()];
        for (new, &old) in idx.iter().enumerate() {
            renumber[old] = new;
        }
        let k = cosets.len();
        let reps: Vec<usize> = idx.iter().map(|&old| cosets[old].1).collect();
        let table: Vec<u32> = (0..k * k)
            .into_par_iter()
            .map(|ij| {
                let (i, j) = (ij / k, ij % k);
                renumber[coset_of[self.mul(reps[i], reps[j])]] as u32
            })
            .collect();
        let table = Arc::new(CayleyTable::new(k, table)?);
        let gens: Vec<GroupElement> = self
            .generators
            .iter()
            .map(|&g| GroupElement::Table(renumber[coset_of[g]] as u32))
            .collect();
        let group = FiniteGroup::generate_from(GroupElement::Table(0), gens, MulRule::Table(table), k)?;
        let projection = (0..order)
            .map(|g| {
                group
                    .id_of(&GroupElement::Table(renumber[coset_of[g]] as u32))
                    .expect("quotient generated by generator images")
            })
            .collect();
        Ok(Quotient {
            group,
            projection,
            representatives: reps,
        })
    }

    /// Primes dividing the group order.
    pub fn prime_divisors(&self) -> Vec<u64> {
        prime_divisors(self.order() as u64)
    }

    /// Census of element orders: order -> count.
    pub fn order_census(&self) -> Vec<(u64, usize)> {
        let mut census: HashMap<u64, usize> = HashMap::new();
        for &o in self.orders() {
            *census.entry(o).or_default() += 1;
        }
        let mut out: Vec<_> = census.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// Generators of `<x>`: the powers `x^m` with `gcd(m, |x|) = 1`, by increasing `m`.
    pub fn generators_of_cyclic(&self, x: usize) -> Vec<usize> {
        let k = self.element_order(x);
        let mut out = Vec::new();
        let mut y = x;
        for m in 1..=k {
            if gcd(m, k) == 1 {
                out.push(y);
            }
            y = self.mul(y, x);
        }
        out
    }

    /// Cyclic subgroup `<x>` as a sorted id list.
    pub fn cyclic(&self, x: usize) -> Vec<usize> {
        let mut out = vec![0usize];
        let mut y = x;
        while y != 0 {
            out.push(y);
            y = self.mul(y, x);
        }
        out.sort_unstable();
        out
    }

    /// Breadth-first search over words in the generators; returns, for every
    /// element, the parent id and generator slot that first reached it.
    pub(crate) fn spanning_tree(&self) -> Vec<Option<(usize, usize)>> {
        let mut parent = vec![None; self.order()];
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (slot, &g) in self.generators.iter().enumerate() {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, slot));
                    queue.push_back(y);
                }
            }
        }
        parent
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::Convention;
    use crate::perm::Perm;

    fn perm(n: usize, cycles: &[&[u32]]) -> GroupElement {
        GroupElement::Perm(Perm::from_cycles(n, cycles).unwrap())
    }

    fn s3() -> FiniteGroup {
        FiniteGroup::generate(
            vec![perm(3, &[&[0, 1]]), perm(3, &[&[0, 1, 2]])],
            MulRule::Perm(Convention::RightAction),
        )
        .unwrap()
    }

    /// Closure by brute force: multiply everything by everything until stable.
    fn brute_closure(gens: &[Perm]) -> Vec<Perm> {
        let mut set: Vec<Perm> = vec![Perm::identity(gens[0].degree())];
        loop {
            let mut grew = false;
            let snapshot = set.clone();
            for a in &snapshot {
                for b in &snapshot {
                    let c = a.then(b);
                    if !set.contains(&c) {
                        set.push(c);
                        grew = true;
                    }
                }
                for g in gens {
                    let c = a.then(g);
                    if !set.contains(&c) {
                        set.push(c);
                        grew = true;
                    }
                }
            }
            if !grew {
                return set;
            }
        }
    }

    #[test]
    fn closure_orders() {
        let c2 = FiniteGroup::generate(vec![perm(2, &[&[0, 1]])], MulRule::Perm(Convention::RightAction)).unwrap();
        assert_eq!(c2.order(), 2);
        let g = s3();
        let oracle = brute_closure(&[
            Perm::from_cycles(3, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
        ]);
        assert_eq!(g.order(), oracle.len());
        assert_eq!(g.order(), 6);
        // breadth-first from identity
        assert_eq!(g.identity(), 0);
        assert!(g.element(0).as_perm().unwrap().is_identity());
    }

    #[test]
    fn cap_and_shape_errors() {
        let gens = vec![perm(5, &[&[0, 1, 2, 3, 4]]), perm(5, &[&[0, 1]])];
        let err = FiniteGroup::generate_with_cap(gens, MulRule::Perm(Convention::RightAction), 100).unwrap_err();
        assert_eq!(err, Error::CapExceeded { cap: 100 });
        let mixed = vec![perm(3, &[&[0, 1]]), perm(4, &[&[0, 1]])];
        assert!(matches!(
            FiniteGroup::generate(mixed, MulRule::Perm(Convention::RightAction)),
            Err(Error::InconsistentShapes(_))
        ));
        let sing = crate::fp::FpMatrix::from_array(5, [[1, 2], [2, 4]]);
        assert_eq!(
            FiniteGroup::generate(vec![GroupElement::Matrix(sing)], MulRule::Matrix).unwrap_err(),
            Error::NotInvertible { p: 5 }
        );
        assert_eq!(
            FiniteGroup::generate(vec![], MulRule::Matrix).unwrap_err(),
            Error::EmptyGenerators
        );
    }

    #[test]
    fn s3_classes_and_orders() {
        let g = s3();
        let three = g.require(&perm(3, &[&[0, 1, 2]])).unwrap();
        assert_eq!(g.element_order(0), 1);
        assert_eq!(g.element_order(three), 3);
        let mut sizes: Vec<usize> = g.conjugacy_classes().classes.iter().map(|c| c.len()).collect();
        assert_eq!(sizes[0], 1);
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(g.centralizer(&[three]).unwrap().order(), 3);
        assert_eq!(g.centralizer(&[0]).unwrap().order(), 6);
        let c3 = g.subgroup(&[three]);
        assert_eq!(g.normalizer(&c3).unwrap().order(), 6);
        assert!(g.is_normal(&c3));
        assert_eq!(g.normalizer(&g.whole()).unwrap().order(), 6);
        assert!(g.is_solvable());
        assert_eq!(g.sylow_subgroup(2).unwrap().order(), 2);
        assert_eq!(g.sylow_subgroup(5).unwrap().order(), 1);
        assert!(g.center().is_trivial());
    }

    #[test]
    fn quotients() {
        let g = s3();
        let three = g.require(&perm(3, &[&[0, 1, 2]])).unwrap();
        let q = g.quotient(&g.subgroup(&[three])).unwrap();
        assert_eq!(q.group.order(), 2);
        let qq = g.quotient(&g.whole()).unwrap();
        assert_eq!(qq.group.order(), 1);
        let two = g.require(&perm(3, &[&[0, 1]])).unwrap();
        assert_eq!(g.quotient(&g.subgroup(&[two])).unwrap_err(), Error::NotNormal);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(
                    q.projection[g.mul(a, b)],
                    q.group.mul(q.projection[a], q.projection[b])
                );
            }
        }
    }

    #[test]
    fn a5_not_solvable() {
        let a5 = FiniteGroup::generate(
            vec![perm(5, &[&[0, 1, 2]]), perm(5, &[&[0, 1, 2, 3, 4]])],
            MulRule::Perm(Convention::RightAction),
        )
        .unwrap();
        assert_eq!(a5.order(), 60);
        assert!(!a5.is_solvable());
        assert_eq!(a5.derived_series().len(), 1);
        assert_eq!(a5.conjugacy_classes().classes.len(), 5);
    }

    #[test]
    fn foreign_subgroup_rejected() {
        let g = s3();
        let other = FiniteGroup::generate(vec![perm(2, &[&[0, 1]])], MulRule::Perm(Convention::RightAction)).unwrap();
        assert_eq!(g.normalizer(&other.whole()).unwrap_err(), Error::NotSubgroup);
        assert_eq!(g.centralizer(&[17]).unwrap_err(), Error::NotMember);
        let two = g.require(&perm(3, &[&[0, 1]])).unwrap();
        assert!(g.subgroup_from_set(&[0, two]).is_ok());
        let three = g.require(&perm(3, &[&[0, 1, 2]])).unwrap();
        assert_eq!(g.subgroup_from_set(&[0, three]).unwrap_err(), Error::NotSubgroup);
    }
}
