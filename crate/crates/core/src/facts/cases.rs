//! The five GF(5) modules behind the structural facts, built once and cached.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::construct::{c3_rtimes_c4, general_linear, matrix_group, special_linear};
use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::fp::{FpMatrix, FpVector};
use crate::group::FiniteGroup;
use crate::module::ModuleAction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    /// `Q8` in `SL(2,5)` on `GF(5)^2`.
    A,
    /// `C3 ⋊ C4` on `GF(5)^2` through `a ↦ [[0,1],[4,4]]`, `b ↦ [[2,0],[3,3]]`.
    B,
    /// `SL(2,3)` in `GL(2,5)` on `GF(5)^2`.
    C,
    /// `<α, β, γ>` in `GL(4,5)`.
    D,
    /// `<α, β, γ^2>` in `GL(4,5)`.
    E,
}

impl CaseTag {
    pub const ALL: [CaseTag; 5] = [CaseTag::A, CaseTag::B, CaseTag::C, CaseTag::D, CaseTag::E];

    pub fn letter(self) -> char {
        match self {
            CaseTag::A => 'a',
            CaseTag::B => 'b',
            CaseTag::C => 'c',
            CaseTag::D => 'd',
            CaseTag::E => 'e',
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A module together with its named elements and vectors.
#[derive(Debug)]
pub struct CaseAction {
    pub tag: CaseTag,
    pub action: Arc<ModuleAction>,
    /// Named element ids of the acting group.
    pub elements: Vec<(String, usize)>,
    /// Named vectors of the module.
    pub vectors: Vec<(String, FpVector)>,
}

impl CaseAction {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.action.group()
    }

    pub fn action(&self) -> &Arc<ModuleAction> {
        &self.action
    }

    /// The acting group as a subgroup of `GL(n, 5)`.
    pub fn image_group(&self) -> Result<FiniteGroup> {
        self.action.image_group()
    }

    pub fn element(&self, name: &str) -> usize {
        self.elements
            .iter()
            .find(|(n, _)| n == name)
            .unwrap_or_else(|| panic!("case {} has no element `{name}`", self.tag))
            .1
    }

    pub fn vector(&self, name: &str) -> &FpVector {
        &self
            .vectors
            .iter()
            .find(|(n, _)| n == name)
            .unwrap_or_else(|| panic!("case {} has no vector `{name}`", self.tag))
            .1
    }
}

pub fn alpha() -> FpMatrix {
    FpMatrix::from_array(5, [[3, 3, 0, 0], [4, 1, 0, 0], [0, 0, 1, 1], [0, 0, 2, 3]])
}

pub fn beta() -> FpMatrix {
    FpMatrix::from_array(5, [[0, 0, 2, 3], [0, 0, 3, 3], [1, 4, 0, 0], [4, 4, 0, 0]])
}

pub fn gamma() -> FpMatrix {
    FpMatrix::diagonal(5, &[1, 3, 1, 2])
}

/// The element of `<α, β, γ>` sending `(0,1,1,1)` to twice itself.
pub fn mu_u() -> FpMatrix {
    FpMatrix::from_array(5, [[0, 0, 3, 2], [0, 0, 2, 2], [4, 1, 0, 0], [1, 1, 0, 0]])
}

/// The element of `<α, β, γ>` sending `(0,1,1,2)` to twice itself.
pub fn mu_v() -> FpMatrix {
    FpMatrix::from_array(5, [[0, 0, 4, 2], [0, 0, 2, 4], [3, 1, 0, 0], [1, 3, 0, 0]])
}

/// Expected value of `μ_u^{-1} μ_v`.
pub fn mu_quotient() -> FpMatrix {
    FpMatrix::from_array(5, [[4, 1, 0, 0], [2, 2, 0, 0], [0, 0, 2, 3], [0, 0, 4, 4]])
}

pub fn case_b_a() -> FpMatrix {
    FpMatrix::from_array(5, [[0, 1], [4, 4]])
}

pub fn case_b_b() -> FpMatrix {
    FpMatrix::from_array(5, [[2, 0], [3, 3]])
}

fn matrix(g: &FiniteGroup, id: usize) -> &FpMatrix {
    g.element(id).as_matrix().expect("matrix group")
}

fn natural(gens: Vec<FpMatrix>) -> Result<Arc<ModuleAction>> {
    let g = Arc::new(matrix_group(gens)?);
    Ok(Arc::new(ModuleAction::natural(g)?))
}

/// First pair (in element order of `SL(2,5)`) of order-4 elements generating
/// a group of order 8 with a single involution.
fn quaternion_pair() -> Result<(FpMatrix, FpMatrix)> {
    let sl = special_linear(2, 5)?;
    let fours: Vec<usize> = (0..sl.order()).filter(|&x| sl.element_order(x) == 4).collect();
    for (k, &x) in fours.iter().enumerate() {
        for &y in &fours[k + 1..] {
            let h = sl.subgroup(&[x, y]);
            if h.order() != 8 {
                continue;
            }
            let involutions = h.elements().iter().filter(|&&z| sl.element_order(z) == 2).count();
            if involutions == 1 {
                return Ok((matrix(&sl, x).clone(), matrix(&sl, y).clone()));
            }
        }
    }
    Err(Error::CaseConstruction("no quaternion subgroup in SL(2,5)".into()))
}

fn build_a() -> Result<CaseAction> {
    let (i, j) = quaternion_pair()?;
    let action = natural(vec![i.clone(), j.clone()])?;
    let g = action.group().clone();
    let i = g.require(&GroupElement::Matrix(i))?;
    let j = g.require(&GroupElement::Matrix(j))?;
    Ok(CaseAction {
        tag: CaseTag::A,
        elements: vec![("i".into(), i), ("j".into(), j), ("k".into(), g.mul(i, j))],
        vectors: vec![],
        action,
    })
}

fn build_b() -> Result<CaseAction> {
    let g = Arc::new(c3_rtimes_c4()?);
    let action = Arc::new(ModuleAction::from_generator_images(g.clone(), &[case_b_a(), case_b_b()])?);
    let (a, b) = (g.generators()[0], g.generators()[1]);
    Ok(CaseAction {
        tag: CaseTag::B,
        elements: vec![("a".into(), a), ("b".into(), b)],
        vectors: vec![
            ("u".into(), FpVector::new(5, vec![1, 0])),
            ("v".into(), FpVector::new(5, vec![0, 1])),
        ],
        action,
    })
}

fn build_c() -> Result<CaseAction> {
    let q8 = build_case(CaseTag::A)?;
    let qg = q8.group();
    let (i0, j0) = (matrix(qg, q8.element("i")).clone(), matrix(qg, q8.element("j")).clone());
    let gl = general_linear(2, 5)?;
    let normalizes = |m: &FpMatrix| {
        let inv = m.inverse().expect("invertible");
        [&i0, &j0]
            .iter()
            .all(|x| qg.id_of(&GroupElement::Matrix(inv.mul(x).mul(m))).is_some())
    };
    let a = (0..gl.order())
        .filter(|&x| gl.element_order(x) == 3)
        .map(|x| matrix(&gl, x).clone())
        .find(|m| normalizes(m))
        .ok_or_else(|| Error::CaseConstruction("no order-3 element normalizes Q8".into()))?;
    let action = natural(vec![i0, j0, a.clone()])?;
    let g = action.group().clone();
    if g.order() != 24 {
        return Err(Error::CaseConstruction(format!("expected order 24, got {}", g.order())));
    }
    let a = g.require(&GroupElement::Matrix(a))?;
    let a2 = g.mul(a, a);
    // i with i^{a^2} i^a i = 1
    let i = (0..g.order())
        .filter(|&x| g.element_order(x) == 4)
        .find(|&x| g.product(&[g.conj(x, a2), g.conj(x, a), x]) == g.identity())
        .ok_or_else(|| Error::CaseConstruction("no element i with i^(a^2) i^a i = 1".into()))?;
    let j = g.conj(i, a);
    let k = g.conj(j, a);
    let u_i = FpVector::all(5, 2)
        .into_iter()
        .find(|w| !w.is_zero() && action.act(w, i) == w.scale(2))
        .ok_or_else(|| Error::CaseConstruction("i has no eigenvalue 2".into()))?;
    let u_i_inv = action.act(&u_i, j);
    let u_j = action.act(&u_i, a);
    let u_j_inv = action.act(&u_i_inv, a);
    let u_k = action.act(&u_j, a);
    let u_k_inv = action.act(&u_j_inv, a);
    Ok(CaseAction {
        tag: CaseTag::C,
        elements: vec![
            ("a".into(), a),
            ("i".into(), i),
            ("j".into(), j),
            ("k".into(), k),
            ("z".into(), g.mul(i, i)),
        ],
        vectors: vec![
            ("u_i".into(), u_i),
            ("u_i^-1".into(), u_i_inv),
            ("u_j".into(), u_j),
            ("u_j^-1".into(), u_j_inv),
            ("u_k".into(), u_k),
            ("u_k^-1".into(), u_k_inv),
        ],
        action,
    })
}

fn build_de(tag: CaseTag) -> Result<CaseAction> {
    let third = match tag {
        CaseTag::D => gamma(),
        _ => gamma().mul(&gamma()),
    };
    let action = natural(vec![alpha(), beta(), third.clone()])?;
    let g = action.group().clone();
    let id = |m: FpMatrix| g.require(&GroupElement::Matrix(m));
    let third_name = if tag == CaseTag::D { "gamma" } else { "gamma^2" };
    Ok(CaseAction {
        tag,
        elements: vec![
            ("alpha".into(), id(alpha())?),
            ("beta".into(), id(beta())?),
            (third_name.into(), id(third)?),
            ("mu_u".into(), id(mu_u())?),
            ("mu_v".into(), id(mu_v())?),
        ],
        vectors: vec![
            ("u".into(), FpVector::new(5, vec![0, 1, 1, 1])),
            ("v".into(), FpVector::new(5, vec![0, 1, 1, 2])),
        ],
        action,
    })
}

type Slot = OnceLock<std::result::Result<Arc<CaseAction>, String>>;
static CACHE: [Slot; 5] = [
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
];

pub fn build_case(tag: CaseTag) -> Result<Arc<CaseAction>> {
    let slot = &CACHE[tag as usize];
    slot.get_or_init(|| {
        let built = match tag {
            CaseTag::A => build_a(),
            CaseTag::B => build_b(),
            CaseTag::C => build_c(),
            CaseTag::D | CaseTag::E => build_de(tag),
        };
        built.map(Arc::new).map_err(|e| e.to_string())
    })
    .clone()
    .map_err(Error::CaseConstruction)
}
