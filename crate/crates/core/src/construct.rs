//! Products and the catalogue of named groups.

use std::sync::Arc;

use crate::element::{Convention, GroupElement, MulRule};
use crate::error::{Error, Result};
use crate::facts::cases::{build_case, CaseTag};
use crate::fp::{FpMatrix, FpVector};
use crate::group::{default_cap, FiniteGroup};
use crate::module::ModuleAction;
use crate::numtheory::is_prime;
use crate::perm::Perm;

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    direct_product_with_cap(g, h, default_cap())
}

pub fn direct_product_with_cap(g: &FiniteGroup, h: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
    if g.order().saturating_mul(h.order()) > cap {
        return Err(Error::CapExceeded { cap });
    }
    let one_g = g.element(g.identity()).clone();
    let one_h = h.element(h.identity()).clone();
    let mut gens = Vec::new();
    for x in g.generator_elements() {
        gens.push(GroupElement::product(x, one_h.clone()));
    }
    for y in h.generator_elements() {
        gens.push(GroupElement::product(one_g.clone(), y));
    }
    let rule = MulRule::Direct(Box::new(g.rule().clone()), Box::new(h.rule().clone()));
    FiniteGroup::generate_from(GroupElement::product(one_g, one_h), gens, rule, cap)
}

/// `V ⋊ S` with `V = GF(p)^n` and `S` acting on the right through `action`.
///
/// Elements are pairs `s * v`; conjugating the pure translation `v` by the
/// pure group element `s` yields `v * rep(s)`.
pub fn semidirect_product(action: Arc<ModuleAction>) -> Result<FiniteGroup> {
    semidirect_product_with_cap(action, default_cap())
}

pub fn semidirect_product_with_cap(action: Arc<ModuleAction>, cap: usize) -> Result<FiniteGroup> {
    let p = action.prime();
    let n = action.dim();
    let s = action.group();
    let size = (p as usize).saturating_pow(n as u32).saturating_mul(s.order());
    if size > cap {
        return Err(Error::CapExceeded { cap });
    }
    let one_s = s.element(s.identity()).clone();
    let zero = FpVector::zero(p, n);
    let mut gens: Vec<GroupElement> = (0..n)
        .map(|k| GroupElement::pair(FpVector::unit(p, n, k), one_s.clone()))
        .collect();
    for x in s.generator_elements() {
        gens.push(GroupElement::pair(zero.clone(), x));
    }
    let identity = GroupElement::pair(zero, one_s);
    FiniteGroup::generate_from(identity, gens, MulRule::Semidirect(action), cap)
}

fn perm(n: usize, cycles: &[&[u32]]) -> GroupElement {
    GroupElement::Perm(Perm::from_cycles(n, cycles).expect("catalogue permutation"))
}

fn perm_group(degree: usize, gens: Vec<GroupElement>) -> Result<FiniteGroup> {
    FiniteGroup::generate_from(
        GroupElement::Perm(Perm::identity(degree)),
        gens,
        MulRule::Perm(Convention::RightAction),
        default_cap(),
    )
}

pub fn matrix_group(gens: Vec<FpMatrix>) -> Result<FiniteGroup> {
    FiniteGroup::generate(gens.into_iter().map(GroupElement::Matrix).collect(), MulRule::Matrix)
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::UnknownName("C0".into()));
    }
    let cycle: Vec<u32> = (0..n as u32).collect();
    let gens = if n == 1 { vec![] } else { vec![perm(n, &[&cycle])] };
    perm_group(n, gens)
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::UnknownName("S0".into()));
    }
    let cycle: Vec<u32> = (0..n as u32).collect();
    let gens = match n {
        1 => vec![],
        2 => vec![perm(2, &[&[0, 1]])],
        _ => vec![perm(n, &[&[0, 1]]), perm(n, &[&cycle])],
    };
    perm_group(n, gens)
}

pub fn alternating(n: usize) -> Result<FiniteGroup> {
    if n < 3 {
        return perm_group(n.max(1), vec![]);
    }
    // 3-cycles (0 1 k) generate A_n
    let gens = (2..n as u32).map(|k| perm(n, &[&[0, 1, k]])).collect();
    perm_group(n, gens)
}

/// Dihedral group of order `order` acting on `order / 2` points.
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    if order < 4 || order % 2 != 0 {
        return Err(Error::UnknownName(format!("D{order}")));
    }
    let n = order / 2;
    let rotation: Vec<u32> = (0..n as u32).collect();
    let reflection = Perm::new((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect())?;
    perm_group(
        n,
        vec![perm(n, &[&rotation]), GroupElement::Perm(reflection)],
    )
}

/// `Q8` as the matrices `[[0,2],[1,0]]` and `[[1,1],[1,2]]` over GF(3).
pub fn quaternion8() -> Result<FiniteGroup> {
    matrix_group(vec![
        FpMatrix::from_array(3, [[0, 2], [1, 0]]),
        FpMatrix::from_array(3, [[1, 1], [1, 2]]),
    ])
}

/// `C3 ⋊ C4` on 7 points: `a = (0 1 2)`, `b = (1 2)(3 4 5 6)`, with `a^b = a^2`.
pub fn c3_rtimes_c4() -> Result<FiniteGroup> {
    perm_group(
        7,
        vec![perm(7, &[&[0, 1, 2]]), perm(7, &[&[1, 2], &[3, 4, 5, 6]])],
    )
}

/// `SL(2,3)` as `[[1,1],[0,1]]` and `[[0,2],[1,0]]` over GF(3).
pub fn sl23() -> Result<FiniteGroup> {
    matrix_group(vec![
        FpMatrix::from_array(3, [[1, 1], [0, 1]]),
        FpMatrix::from_array(3, [[0, 2], [1, 0]]),
    ])
}

fn transvections(p: u32, n: usize) -> Vec<FpMatrix> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut m = FpMatrix::identity(p, n);
                m.set(i, j, 1);
                out.push(m);
            }
        }
    }
    out
}

fn primitive_root(p: u32) -> u32 {
    (1..p)
        .find(|&g| {
            let mut x = 1u32;
            (1..p - 1).all(|_| {
                x = x * g % p;
                x != 1
            })
        })
        .unwrap_or(1)
}

pub fn special_linear(n: usize, p: u32) -> Result<FiniteGroup> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if n == 1 {
        return FiniteGroup::generate_from(
            GroupElement::Matrix(FpMatrix::identity(p, 1)),
            vec![],
            MulRule::Matrix,
            1,
        );
    }
    matrix_group(transvections(p, n))
}

pub fn general_linear(n: usize, p: u32) -> Result<FiniteGroup> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let mut diag = vec![1u32; n];
    diag[0] = primitive_root(p);
    let mut gens = vec![FpMatrix::diagonal(p, &diag)];
    gens.extend(transvections(p, n));
    matrix_group(gens)
}

/// Looks up a group by name.
///
/// Recognized: `C<n>`, `S<n>` (n ≤ 5), `A<n>` (n ≤ 5), `D<order>`, `Q8`,
/// `C3:C4`, `SL(2,3)`, `GL(n,p)`, `SL(n,p)`, and the matrix realizations
/// over GF(5) `Q8<GL(2,5)`, `C3:C4<GL(2,5)`, `SL(2,3)<GL(2,5)`,
/// `ABG<GL(4,5)` and `ABG2<GL(4,5)`.
pub fn named_group(name: &str) -> Result<FiniteGroup> {
    let unknown = || Error::UnknownName(name.to_string());
    let trimmed = name.trim();
    match trimmed {
        "Q8" => return quaternion8(),
        "C3:C4" | "C3xC4" | "Dic3" => return c3_rtimes_c4(),
        "SL(2,3)" => return sl23(),
        "Q8<GL(2,5)" => return Ok(build_case(CaseTag::A)?.group().as_ref().clone_group()),
        "C3:C4<GL(2,5)" => return Ok(build_case(CaseTag::B)?.image_group()?),
        "SL(2,3)<GL(2,5)" => return Ok(build_case(CaseTag::C)?.group().as_ref().clone_group()),
        "ABG<GL(4,5)" => return Ok(build_case(CaseTag::D)?.group().as_ref().clone_group()),
        "ABG2<GL(4,5)" => return Ok(build_case(CaseTag::E)?.group().as_ref().clone_group()),
        _ => {}
    }
    if let Some(args) = trimmed
        .strip_prefix("GL(")
        .or_else(|| trimmed.strip_prefix("SL("))
        .and_then(|r| r.strip_suffix(')'))
    {
        let (n, p) = args.split_once(',').ok_or_else(unknown)?;
        let n: usize = n.trim().parse().map_err(|_| unknown())?;
        let p: u32 = p.trim().parse().map_err(|_| unknown())?;
        if n == 0 || n > 4 {
            return Err(unknown());
        }
        return if trimmed.starts_with("GL") {
            general_linear(n, p)
        } else {
            special_linear(n, p)
        };
    }
    let (head, tail) = trimmed.split_at(1.min(trimmed.len()));
    let k: usize = tail.parse().map_err(|_| unknown())?;
    match head {
        "C" if k >= 1 => cyclic(k),
        "S" if (1..=5).contains(&k) => symmetric(k),
        "A" if (1..=5).contains(&k) => alternating(k),
        "D" => dihedral(k).map_err(|_| unknown()),
        _ => Err(unknown()),
    }
}

impl FiniteGroup {
    /// Re-realizes the group from its generators (same enumeration order).
    pub fn clone_group(&self) -> FiniteGroup {
        FiniteGroup::generate_from(
            self.element(self.identity()).clone(),
            self.generator_elements(),
            self.rule().clone(),
            self.order().max(1),
        )
        .expect("re-realizing an existing group")
    }
}
