//! Bounded searches for solvable rational groups with a prescribed prime graph.
//!
//! Two candidate spaces are supported:
//!
//! * `Semidirect { max_dim }`: `GF(5)^n ⋊ S` for `n = 1..=max_dim` (at most 2)
//!   and `S` running over one representative of every conjugacy class of
//!   solvable subgroups of `GL(n,5)`. Candidates are ordered by `n`, then
//!   `|S|`, then the sorted element indices of the representative in the
//!   breadth-first enumeration of `GL(n,5)`; the representative of a class is
//!   its least member in that order.
//! * `DirectProducts { factors, max_factors }`: products of 1 to
//!   `max_factors` groups from the named list, taken as multisets and ordered
//!   by length and then by the non-decreasing index tuple.
//!
//! The first candidate (in that order) that is solvable, rational and has the
//! target graph is returned.

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use rayon::prelude::*;

use crate::construct::{direct_product_with_cap, general_linear, named_group, semidirect_product_with_cap};
use crate::element::{GroupElement, MulRule};
use crate::error::{Error, Result};
use crate::fp::FpMatrix;
use crate::graph::PrimeGraph;
use crate::group::{default_cap, FiniteGroup, Subgroup};
use crate::module::ModuleAction;
use crate::numtheory::prime_divisors;
use crate::rationality::{gk_graph, is_rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchSpace {
    Semidirect { max_dim: usize },
    DirectProducts { factors: Vec<String>, max_factors: usize },
}

impl SearchSpace {
    /// `GF(5)^n ⋊ S` for `n ≤ 2`.
    pub fn default_semidirect() -> SearchSpace {
        SearchSpace::Semidirect { max_dim: 2 }
    }
}

#[derive(Debug)]
pub struct SearchHit {
    pub description: String,
    pub group: FiniteGroup,
    /// Position of the hit in the candidate order.
    pub index: usize,
}

#[derive(Debug)]
pub struct SearchOutcome {
    pub space_size: usize,
    pub examined: usize,
    pub hit: Option<SearchHit>,
}

pub fn search_witness(target: &PrimeGraph, space: &SearchSpace) -> Result<SearchOutcome> {
    search_witness_with_cap(target, space, default_cap())
}

enum Candidate {
    Semidirect { dim: usize, sub: Arc<FiniteGroup> },
    Direct(Vec<usize>),
}

pub fn search_witness_with_cap(target: &PrimeGraph, space: &SearchSpace, cap: usize) -> Result<SearchOutcome> {
    let (candidates, factors) = match space {
        SearchSpace::Semidirect { max_dim } => {
            if *max_dim > 2 {
                return Err(Error::SearchSpaceTooLarge {
                    reason: format!("subgroup classes of GL({max_dim},5) are not enumerated (dimension at most 2)"),
                    examined: 0,
                });
            }
            let mut c = Vec::new();
            for dim in 1..=*max_dim {
                for sub in solvable_subgroup_classes(dim)? {
                    c.push(Candidate::Semidirect { dim, sub: Arc::new(sub) });
                }
            }
            (c, Vec::new())
        }
        SearchSpace::DirectProducts { factors, max_factors } => {
            let groups = factors
                .iter()
                .map(|n| Ok((n.clone(), named_group(n)?)))
                .collect::<Result<Vec<_>>>()?;
            let mut c = Vec::new();
            for len in 1..=*max_factors {
                multisets(factors.len(), len, &mut Vec::new(), &mut c);
            }
            (c.into_iter().map(Candidate::Direct).collect(), groups)
        }
    };
    let order_of = |c: &Candidate| -> usize {
        match c {
            Candidate::Semidirect { dim, sub } => 5usize.pow(*dim as u32).saturating_mul(sub.order()),
            Candidate::Direct(ix) => ix.iter().fold(1usize, |acc, &i| acc.saturating_mul(factors[i].1.order())),
        }
    };
    let limit = candidates
        .iter()
        .position(|c| order_of(c) > cap)
        .unwrap_or(candidates.len());
    let found = candidates[..limit]
        .par_iter()
        .enumerate()
        .map(|(i, c)| {
            if prime_divisors(order_of(c) as u64) != target.vertices.iter().copied().collect::<Vec<_>>() {
                return Ok(None);
            }
            let (description, group) = realize(c, &factors, cap)?;
            let hit = gk_graph(&group) == *target && group.is_solvable() && is_rational(&group);
            Ok(hit.then_some(SearchHit { description, group, index: i }))
        })
        .find_map_first(|r: Result<Option<SearchHit>>| match r {
            Ok(None) => None,
            other => Some(other),
        })
        .transpose()?
        .flatten();
    if let Some(hit) = found {
        return Ok(SearchOutcome {
            space_size: candidates.len(),
            examined: hit.index + 1,
            hit: Some(hit),
        });
    }
    if limit < candidates.len() {
        return Err(Error::SearchSpaceTooLarge {
            reason: format!("candidate {} has order {} above the cap {cap}", limit, order_of(&candidates[limit])),
            examined: limit,
        });
    }
    Ok(SearchOutcome {
        space_size: candidates.len(),
        examined: candidates.len(),
        hit: None,
    })
}

fn multisets(n: usize, len: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == len {
        out.push(prefix.clone());
        return;
    }
    let start = prefix.last().copied().unwrap_or(0);
    for i in start..n {
        prefix.push(i);
        multisets(n, len, prefix, out);
        prefix.pop();
    }
}

fn realize(c: &Candidate, factors: &[(String, FiniteGroup)], cap: usize) -> Result<(String, FiniteGroup)> {
    match c {
        Candidate::Semidirect { dim, sub } => {
            let action = Arc::new(ModuleAction::natural(sub.clone())?);
            let gens: Vec<String> = sub.generator_elements().iter().map(|g| g.to_string()).collect();
            let desc = format!("GF(5)^{dim} x| <{}>", gens.join(", "));
            Ok((desc, semidirect_product_with_cap(action, cap)?))
        }
        Candidate::Direct(ix) => {
            let mut g = factors[ix[0]].1.clone_group();
            for &i in &ix[1..] {
                g = direct_product_with_cap(&g, &factors[i].1, cap)?;
            }
            let names: Vec<&str> = ix.iter().map(|&i| factors[i].0.as_str()).collect();
            Ok((names.join(" x "), g))
        }
    }
}

/// A subgroup of a table group: sorted element indices and a generating set.
#[derive(Clone, Debug)]
struct TableSub {
    elements: Vec<u16>,
    gens: Vec<u16>,
}

struct Table {
    n: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

impl Table {
    fn of(g: &FiniteGroup) -> Table {
        let n = g.order();
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = g.mul(a, b) as u16;
            }
        }
        let inv = g.inverses().iter().map(|&x| x as u16).collect();
        Table { n, mul, inv }
    }

    fn m(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.n + b as usize]
    }

    fn conj(&self, x: u16, g: u16) -> u16 {
        self.m(self.m(self.inv[g as usize], x), g)
    }

    fn closure(&self, gens: &[u16]) -> Vec<u16> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut out = vec![0u16];
        let mut head = 0;
        while head < out.len() {
            for &g in gens {
                let y = self.m(out[head], g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                }
            }
            head += 1;
        }
        out.sort_unstable();
        out
    }

    fn bits(&self, elements: &[u16]) -> Vec<u64> {
        let mut b = vec![0u64; self.n.div_ceil(64)];
        for &x in elements {
            b[x as usize / 64] |= 1 << (x % 64);
        }
        b
    }

    /// Derived subgroup as the normal closure of generator commutators.
    fn derived(&self, h: &TableSub) -> TableSub {
        let mut dgens = Vec::new();
        for &a in &h.gens {
            for &b in &h.gens {
                let c = self.m(self.m(self.inv[a as usize], self.inv[b as usize]), self.m(a, b));
                if c != 0 && !dgens.contains(&c) {
                    dgens.push(c);
                }
            }
        }
        loop {
            let elements = self.closure(&dgens);
            let mut grew = false;
            for &d in &dgens.clone() {
                for &k in &h.gens {
                    let c = self.conj(d, k);
                    if elements.binary_search(&c).is_err() && !dgens.contains(&c) {
                        dgens.push(c);
                        grew = true;
                    }
                }
            }
            if !grew {
                return TableSub { elements, gens: dgens };
            }
        }
    }

    fn is_solvable(&self, h: &TableSub) -> bool {
        let mut cur = h.clone();
        while cur.elements.len() > 1 {
            let next = self.derived(&cur);
            if next.elements.len() == cur.elements.len() {
                return false;
            }
            cur = next;
        }
        true
    }
}

/// One representative per conjugacy class of subgroups of `g` (only the
/// solvable classes when `solvable_only`), ordered by order and then by sorted
/// element ids; each representative is the least member of its class.
///
/// Classes are grown from the trivial subgroup by adjoining one element at a
/// time to a representative. Intended for groups of a few hundred elements.
pub fn subgroup_classes(g: &FiniteGroup, solvable_only: bool) -> Vec<Subgroup> {
    assert!(g.order() <= u16::MAX as usize, "subgroup lattice needs a small group");
    let t = Table::of(g);
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut reps: Vec<TableSub> = Vec::new();
    let trivial = TableSub { elements: vec![0], gens: vec![] };
    seen.insert(t.bits(&trivial.elements));
    reps.push(trivial.clone());
    let mut queue = VecDeque::from([trivial]);
    while let Some(h) = queue.pop_front() {
        for x in 0..t.n as u16 {
            if h.elements.binary_search(&x).is_ok() {
                continue;
            }
            let mut gens = h.gens.clone();
            gens.push(x);
            let elements = t.closure(&gens);
            if seen.contains(&t.bits(&elements)) {
                continue;
            }
            // a new class: record every conjugate and keep the least one
            let mut best: Option<(Vec<u16>, u16)> = None;
            for c in 0..t.n as u16 {
                let mut conj: Vec<u16> = elements.iter().map(|&y| t.conj(y, c)).collect();
                conj.sort_unstable();
                seen.insert(t.bits(&conj));
                if best.as_ref().map_or(true, |(b, _)| conj < *b) {
                    best = Some((conj, c));
                }
            }
            let (elements, c) = best.expect("non-empty group");
            let rep = TableSub {
                elements,
                gens: gens.iter().map(|&y| t.conj(y, c)).collect(),
            };
            if !solvable_only || t.is_solvable(&rep) {
                reps.push(rep.clone());
                queue.push_back(rep);
            }
        }
    }
    reps.sort_by(|a, b| (a.elements.len(), &a.elements).cmp(&(b.elements.len(), &b.elements)));
    reps.iter()
        .map(|r| g.subgroup(&r.gens.iter().map(|&x| x as usize).collect::<Vec<_>>()))
        .collect()
}

/// One matrix group per conjugacy class of solvable subgroups of `GL(dim, 5)`,
/// in the documented candidate order.
pub fn solvable_subgroup_classes(dim: usize) -> Result<Vec<FiniteGroup>> {
    if dim == 0 || dim > 2 {
        return Err(Error::SearchSpaceTooLarge {
            reason: format!("subgroup classes of GL({dim},5) are not enumerated"),
            examined: 0,
        });
    }
    let gl = general_linear(dim, 5)?;
    subgroup_classes(&gl, true)
        .iter()
        .map(|h| {
            if h.is_trivial() {
                FiniteGroup::generate_from(
                    GroupElement::Matrix(FpMatrix::identity(5, dim)),
                    vec![],
                    MulRule::Matrix,
                    1,
                )
            } else {
                gl.subgroup_as_group(h)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class_count(name: &str, solvable_only: bool) -> usize {
        subgroup_classes(&named_group(name).unwrap(), solvable_only).len()
    }

    #[test]
    fn known_subgroup_class_counts() {
        assert_eq!(class_count("S3", false), 4);
        assert_eq!(class_count("Q8", false), 6);
        assert_eq!(class_count("S4", false), 11);
        assert_eq!(class_count("A5", false), 9);
        assert_eq!(class_count("A5", true), 8);
        assert_eq!(class_count("GL(2,3)", false), 16);
    }

    #[test]
    fn gl15_has_three_subgroups() {
        let s = solvable_subgroup_classes(1).unwrap();
        let orders: Vec<usize> = s.iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![1, 2, 4]);
    }

    #[test]
    fn dimension_three_refused() {
        let err = search_witness(&"2,5".parse().unwrap(), &SearchSpace::Semidirect { max_dim: 3 }).unwrap_err();
        assert!(matches!(err, Error::SearchSpaceTooLarge { .. }));
    }

    #[test]
    fn direct_product_search_finds_s3_squared() {
        let space = SearchSpace::DirectProducts {
            factors: vec!["C2".into(), "S3".into()],
            max_factors: 2,
        };
        let out = search_witness(&"2,3:2-3".parse().unwrap(), &space).unwrap();
        let hit = out.hit.unwrap();
        // C2, S3, C2xC2, C2xS3 come first; C2 x S3 already has an element of order 6
        assert_eq!(hit.group.order(), 12);
        assert_eq!(hit.description, "C2 x S3");
        assert_eq!(out.examined, 4);
    }

    #[test]
    fn cap_reports_partial_progress() {
        let space = SearchSpace::DirectProducts {
            factors: vec!["C2".into(), "S4".into()],
            max_factors: 2,
        };
        let err = search_witness_with_cap(&"2,3:2-3".parse().unwrap(), &space, 30).unwrap_err();
        assert_eq!(
            err,
            Error::SearchSpaceTooLarge {
                reason: "candidate 3 has order 48 above the cap 30".into(),
                examined: 3
            }
        );
    }
}
