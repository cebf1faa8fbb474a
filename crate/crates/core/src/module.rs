//! Groups acting linearly on `GF(p)^n` by right multiplication.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use rayon::prelude::*;

use crate::element::{GroupElement, MulRule};
use crate::error::{Error, Result};
use crate::fp::{EchelonBasis, FpMatrix, FpVector};
use crate::group::{FiniteGroup, Subgroup};
use crate::numtheory::units_mod;

/// A representation `S -> GL(n, p)`, stored for every element of `S`.
#[derive(Debug)]
pub struct ModuleAction {
    group: Arc<FiniteGroup>,
    prime: u32,
    dim: usize,
    rep: Vec<FpMatrix>,
}

/// Outcome of the eigenvalue-2 test over GF(5).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenvectorProperty {
    pub holds: bool,
    /// For each vector with a witness, the first element id `g` (in id order) with `v * g = 2v`.
    pub witnesses: Vec<(FpVector, usize)>,
    pub failures: Vec<FpVector>,
}

#[derive(Debug)]
pub struct InducedModule {
    pub action: ModuleAction,
    /// Right transversal of `H` in `S`; the first entry is the identity.
    pub transversal: Vec<usize>,
    pub block_dim: usize,
}

impl ModuleAction {
    /// Extends images of the generators of `group` to a representation and
    /// verifies the homomorphism law on every (element, generator) pair.
    pub fn from_generator_images(group: Arc<FiniteGroup>, images: &[FpMatrix]) -> Result<ModuleAction> {
        let gens = group.generators();
        if images.len() != gens.len() {
            return Err(Error::DimensionMismatch {
                expected: gens.len(),
                got: images.len(),
            });
        }
        let (prime, dim) = match images.first() {
            Some(m) => (m.prime(), m.dim()),
            None => {
                return Err(Error::NotHomomorphism(
                    "no generator images to infer the module from; use ModuleAction::trivial".into(),
                ))
            }
        };
        for m in images {
            if m.prime() != prime || m.dim() != dim {
                return Err(Error::InconsistentShapes("generator images differ in shape".into()));
            }
            if !m.is_invertible() {
                return Err(Error::NotInvertible { p: prime });
            }
        }
        let tree = group.spanning_tree();
        let mut rep: Vec<Option<FpMatrix>> = vec![None; group.order()];
        rep[0] = Some(FpMatrix::identity(prime, dim));
        // spanning-tree parents precede children in breadth-first order
        let mut order: Vec<usize> = (1..group.order()).collect();
        let mut depth = vec![0usize; group.order()];
        for &x in &order {
            let mut d = 0;
            let mut y = x;
            while let Some((parent, _)) = tree[y] {
                d += 1;
                y = parent;
            }
            depth[x] = d;
        }
        order.sort_by_key(|&x| depth[x]);
        for x in order {
            let (parent, slot) = tree[x].expect("every element is reachable");
            let m = rep[parent].as_ref().expect("parent first").mul(&images[slot]);
            rep[x] = Some(m);
        }
        let rep: Vec<FpMatrix> = rep.into_iter().map(|m| m.expect("filled")).collect();
        ModuleAction::from_reps(group, rep)
    }

    /// Wraps a full table of matrices, checking `rep(x g) = rep(x) rep(g)`
    /// for every element `x` and generator `g`, and `rep(1) = I`.
    pub fn from_reps(group: Arc<FiniteGroup>, rep: Vec<FpMatrix>) -> Result<ModuleAction> {
        if rep.len() != group.order() {
            return Err(Error::DimensionMismatch {
                expected: group.order(),
                got: rep.len(),
            });
        }
        let prime = rep[0].prime();
        let dim = rep[0].dim();
        if !rep[0].is_identity() {
            return Err(Error::NotHomomorphism("identity does not act trivially".into()));
        }
        let bad = (0..group.order()).into_par_iter().find_first(|&x| {
            group
                .generators()
                .iter()
                .any(|&g| rep[group.mul(x, g)] != rep[x].mul(&rep[g]))
        });
        if let Some(x) = bad {
            return Err(Error::NotHomomorphism(format!(
                "law fails at element {}",
                group.element(x)
            )));
        }
        Ok(ModuleAction {
            group,
            prime,
            dim,
            rep,
        })
    }

    /// A matrix group acting on its natural module.
    pub fn natural(group: Arc<FiniteGroup>) -> Result<ModuleAction> {
        let rep: Vec<FpMatrix> = group
            .elements()
            .iter()
            .map(|e| {
                e.as_matrix()
                    .cloned()
                    .ok_or_else(|| Error::InconsistentShapes("natural module needs a matrix group".into()))
            })
            .collect::<Result<_>>()?;
        let prime = rep[0].prime();
        let dim = rep[0].dim();
        Ok(ModuleAction {
            group,
            prime,
            dim,
            rep,
        })
    }

    pub fn trivial(group: Arc<FiniteGroup>, prime: u32, dim: usize) -> ModuleAction {
        let rep = vec![FpMatrix::identity(prime, dim); group.order()];
        ModuleAction {
            group,
            prime,
            dim,
            rep,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rep(&self, g: usize) -> &FpMatrix {
        &self.rep[g]
    }

    pub fn reps(&self) -> &[FpMatrix] {
        &self.rep
    }

    pub fn act(&self, v: &FpVector, g: usize) -> FpVector {
        v.mul_mat(&self.rep[g])
    }

    fn check_vector(&self, v: &FpVector) -> Result<()> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.dim(),
            });
        }
        if v.prime() != self.prime {
            return Err(Error::WrongPrime {
                expected: self.prime,
                got: v.prime(),
            });
        }
        Ok(())
    }

    /// Kernel of the representation.
    pub fn kernel(&self) -> Subgroup {
        let ids: Vec<usize> = (0..self.group.order())
            .filter(|&g| self.rep[g].is_identity())
            .collect();
        self.group.subgroup(&ids)
    }

    /// The matrix group generated by the images of the generators of `S`.
    pub fn image_group(&self) -> Result<FiniteGroup> {
        let identity = GroupElement::Matrix(FpMatrix::identity(self.prime, self.dim));
        let gens = self
            .group
            .generators()
            .iter()
            .map(|&g| GroupElement::Matrix(self.rep[g].clone()))
            .collect();
        FiniteGroup::generate_from(identity, gens, MulRule::Matrix, self.group.order().max(1))
    }

    /// Orbit of `v` in breadth-first order from `v`.
    pub fn orbit(&self, v: &FpVector) -> Result<Vec<FpVector>> {
        self.check_vector(v)?;
        let gens: Vec<&FpMatrix> = self.group.generators().iter().map(|&g| &self.rep[g]).collect();
        let mut seen = HashSet::from([v.clone()]);
        let mut out = vec![v.clone()];
        let mut head = 0;
        while head < out.len() {
            for m in &gens {
                let w = out[head].mul_mat(m);
                if seen.insert(w.clone()) {
                    out.push(w);
                }
            }
            head += 1;
        }
        Ok(out)
    }

    pub fn stabilizer(&self, v: &FpVector) -> Result<Subgroup> {
        self.check_vector(v)?;
        let ids: Vec<usize> = (0..self.group.order())
            .filter(|&g| self.act(v, g) == *v)
            .collect();
        Ok(self.group.subgroup(&ids))
    }

    /// All orbits on `GF(p)^n`, each headed by its least vector; orbits ordered by head.
    pub fn orbits(&self) -> Vec<Vec<FpVector>> {
        let all = FpVector::all(self.prime, self.dim);
        let mut done = vec![false; all.len()];
        let mut out = Vec::new();
        for v in &all {
            if done[v.rank_index()] {
                continue;
            }
            let orbit = self.orbit(v).expect("matching dimension");
            for w in &orbit {
                done[w.rank_index()] = true;
            }
            out.push(orbit);
        }
        out
    }

    /// True iff the orbit of every nonzero vector spans the whole space.
    pub fn is_simple(&self) -> bool {
        if self.dim == 0 {
            return false;
        }
        self.orbits().iter().all(|orbit| {
            if orbit[0].is_zero() {
                return true;
            }
            let mut basis = EchelonBasis::new();
            for w in orbit {
                basis.insert(w);
                if basis.rank() == self.dim {
                    return true;
                }
            }
            false
        })
    }

    fn distinct_images(&self) -> Vec<(usize, &FpMatrix)> {
        let mut seen: HashSet<&FpMatrix> = HashSet::new();
        self.rep
            .iter()
            .enumerate()
            .filter(|(_, m)| seen.insert(*m))
            .collect()
    }

    /// Brauer-character rationality via Galois closure of eigenvalues: for
    /// every image `M` of order `k` and every `m` prime to `k`, `M` and `M^m`
    /// share a characteristic polynomial.
    pub fn brauer_character_is_rational(&self) -> Result<bool> {
        let images = self.distinct_images();
        let orders: Vec<u64> = images.iter().map(|(_, m)| matrix_order(m)).collect();
        if orders.iter().any(|&k| k % self.prime as u64 == 0) {
            return Err(Error::PrimeDividesOrder { p: self.prime });
        }
        Ok(images.par_iter().zip(orders.par_iter()).all(|((_, m), &k)| {
            let cp = m.charpoly();
            units_mod(k).all(|e| m.pow(e).charpoly() == cp)
        }))
    }

    /// Whether every `v` satisfies `v * rep(g) = 2v` for some `g` (GF(5) only).
    pub fn eigenvector_property(&self) -> Result<EigenvectorProperty> {
        if self.prime != 5 {
            return Err(Error::WrongPrime {
                expected: 5,
                got: self.prime,
            });
        }
        let images = self.distinct_images();
        let all = FpVector::all(self.prime, self.dim);
        let found: Vec<(FpVector, Option<usize>)> = all
            .into_par_iter()
            .map(|v| {
                let target = v.scale(2);
                let w = images
                    .iter()
                    .find(|(_, m)| v.mul_mat(m) == target)
                    .map(|(g, _)| *g);
                (v, w)
            })
            .collect();
        let mut witnesses = Vec::new();
        let mut failures = Vec::new();
        for (v, w) in found {
            match w {
                Some(g) => witnesses.push((v, g)),
                None => failures.push(v),
            }
        }
        Ok(EigenvectorProperty {
            holds: failures.is_empty(),
            witnesses,
            failures,
        })
    }

    /// Block-diagonal sum of two modules for the same group.
    pub fn direct_sum(&self, other: &ModuleAction) -> Result<ModuleAction> {
        if !Arc::ptr_eq(&self.group, &other.group) {
            return Err(Error::NotSubgroup);
        }
        if self.prime != other.prime {
            return Err(Error::WrongPrime {
                expected: self.prime,
                got: other.prime,
            });
        }
        let rep = self
            .rep
            .iter()
            .zip(&other.rep)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        Ok(ModuleAction {
            group: self.group.clone(),
            prime: self.prime,
            dim: self.dim + other.dim,
            rep,
        })
    }

    /// Same module in another basis: `g -> Q^{-1} rep(g) Q`.
    pub fn change_basis(&self, q: &FpMatrix) -> Result<ModuleAction> {
        let qi = q.inverse()?;
        let rep = self.rep.iter().map(|m| qi.mul(m).mul(q)).collect();
        Ok(ModuleAction {
            group: self.group.clone(),
            prime: self.prime,
            dim: self.dim,
            rep,
        })
    }

    /// Restriction to a subgroup realized as its own group (elements matched by value).
    pub fn restrict(&self, sub: Arc<FiniteGroup>) -> Result<ModuleAction> {
        let rep = sub
            .elements()
            .iter()
            .map(|e| self.group.require(e).map(|g| self.rep[g].clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleAction {
            group: sub,
            prime: self.prime,
            dim: self.dim,
            rep,
        })
    }
}

/// Multiplicative order of an invertible matrix.
pub fn matrix_order(m: &FpMatrix) -> u64 {
    let mut k = 1;
    let mut x = m.clone();
    while !x.is_identity() {
        x = x.mul(m);
        k += 1;
    }
    k
}

/// Right transversal of `h` in `s`: identity first, then the
/// lexicographically least member of each remaining right coset `H t`,
/// ordered by encoding. Returns (transversal, coset index of every element).
pub fn right_transversal(s: &FiniteGroup, h: &Subgroup) -> (Vec<usize>, Vec<usize>) {
    let n = s.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut cosets: Vec<(usize, Vec<usize>)> = Vec::new();
    for g in 0..n {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = h.elements().iter().map(|&x| s.mul(x, g)).collect();
        let rep = if g == s.identity() {
            g
        } else {
            *members.iter().min_by_key(|&&x| s.encoding(x)).expect("nonempty")
        };
        for &m in &members {
            coset_of[m] = cosets.len();
        }
        cosets.push((rep, members));
    }
    let mut idx: Vec<usize> = (1..cosets.len()).collect();
    idx.sort_by_key(|&c| s.encoding(cosets[c].0));
    idx.insert(0, 0);
    let mut renumber = vec![0; cosets.len()];
    for (new, &old) in idx.iter().enumerate() {
        renumber[old] = new;
    }
    let transversal = idx.iter().map(|&c| cosets[c].0).collect();
    let coset_of = coset_of.into_iter().map(|c| renumber[c]).collect();
    (transversal, coset_of)
}

/// Induced module `W^S = ⊕_{t ∈ T} W^t` for `H ≤ S`, where `inner` is a
/// module for a group whose elements are exactly those of `H`.
///
/// For `t_i g = h t_j` the block `(i, j)` of `rep(g)` is `inner(h)`.
pub fn induce_module(inner: &ModuleAction, overgroup: Arc<FiniteGroup>, h: &Subgroup) -> Result<InducedModule> {
    if h.parent_order() != overgroup.order() {
        return Err(Error::NotSubgroup);
    }
    let inner_id: HashMap<usize, usize> = h
        .elements()
        .iter()
        .map(|&x| {
            inner
                .group()
                .id_of(overgroup.element(x))
                .map(|y| (x, y))
                .ok_or(Error::NotSubgroup)
        })
        .collect::<Result<_>>()?;
    if inner_id.len() != inner.group().order() {
        return Err(Error::NotSubgroup);
    }
    let (transversal, coset_of) = right_transversal(&overgroup, h);
    let k = transversal.len();
    let d = inner.dim();
    let p = inner.prime();
    let inv_t: Vec<usize> = transversal.iter().map(|&t| overgroup.inv(t)).collect();
    let rep: Vec<FpMatrix> = (0..overgroup.order())
        .into_par_iter()
        .map(|g| {
            let mut m = FpMatrix::identity(p, k * d);
            for i in 0..k * d {
                m.set(i, i, 0);
            }
            for (i, &t) in transversal.iter().enumerate() {
                let tg = overgroup.mul(t, g);
                let j = coset_of[tg];
                let hh = overgroup.mul(tg, inv_t[j]);
                let block = inner.rep(inner_id[&hh]);
                for r in 0..d {
                    for c in 0..d {
                        m.set(i * d + r, j * d + c, block.get(r, c));
                    }
                }
            }
            m
        })
        .collect();
    let action = ModuleAction::from_reps(overgroup, rep)?;
    Ok(InducedModule {
        action,
        transversal,
        block_dim: d,
    })
}

impl InducedModule {
    /// Embeds `w` into the block `W^{t_i}`.
    pub fn embed(&self, block: usize, w: &FpVector) -> FpVector {
        let k = self.transversal.len();
        let mut entries = vec![0u32; k * self.block_dim];
        entries[block * self.block_dim..(block + 1) * self.block_dim].copy_from_slice(w.entries());
        FpVector::new(w.prime(), entries)
    }

    /// Blocks in which `v` has nonzero coordinates.
    pub fn support(&self, v: &FpVector) -> Vec<usize> {
        let d = self.block_dim;
        (0..self.transversal.len())
            .filter(|&i| v.entries()[i * d..(i + 1) * d].iter().any(|&x| x != 0))
            .collect()
    }
}
