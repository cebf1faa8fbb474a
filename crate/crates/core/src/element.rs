//! Group elements, their canonical encodings, and multiplication rules.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp::{FpMatrix, FpVector};
use crate::module::ModuleAction;
use crate::perm::Perm;

/// Canonical encoding of an element; injective within one realized group.
pub type Encoding = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupElement {
    Perm(Perm),
    Matrix(FpMatrix),
    /// Element `s * v` of a semidirect product `V ⋊ S`, with `v` written additively.
    Pair {
        vector: FpVector,
        group: Box<GroupElement>,
    },
    /// Element of a direct product.
    Product(Box<GroupElement>, Box<GroupElement>),
    /// Index into a Cayley table; index 0 is always the identity.
    Table(u32),
}

/// The shape shared by all elements of one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    Perm(usize),
    Matrix { p: u32, n: usize },
    Pair { p: u32, n: usize, group: Box<Shape> },
    Product(Box<Shape>, Box<Shape>),
    Table,
}

impl GroupElement {
    pub fn pair(vector: FpVector, group: GroupElement) -> GroupElement {
        GroupElement::Pair {
            vector,
            group: Box::new(group),
        }
    }

    pub fn product(a: GroupElement, b: GroupElement) -> GroupElement {
        GroupElement::Product(Box::new(a), Box::new(b))
    }

    pub fn encode(&self) -> Encoding {
        let mut out = Vec::new();
        self.encode_into(&mut out);
        out
    }

    fn encode_into(&self, out: &mut Vec<u32>) {
        match self {
            GroupElement::Perm(p) => out.extend_from_slice(p.images()),
            GroupElement::Matrix(m) => out.extend_from_slice(m.entries()),
            GroupElement::Pair { vector, group } => {
                out.extend_from_slice(vector.entries());
                group.encode_into(out);
            }
            GroupElement::Product(a, b) => {
                a.encode_into(out);
                b.encode_into(out);
            }
            GroupElement::Table(k) => out.push(*k),
        }
    }

    pub fn shape(&self) -> Shape {
        match self {
            GroupElement::Perm(p) => Shape::Perm(p.degree()),
            GroupElement::Matrix(m) => Shape::Matrix {
                p: m.prime(),
                n: m.dim(),
            },
            GroupElement::Pair { vector, group } => Shape::Pair {
                p: vector.prime(),
                n: vector.dim(),
                group: Box::new(group.shape()),
            },
            GroupElement::Product(a, b) => Shape::Product(Box::new(a.shape()), Box::new(b.shape())),
            GroupElement::Table(_) => Shape::Table,
        }
    }

    /// The identity element of the same shape.
    pub fn identity_like(&self) -> GroupElement {
        match self {
            GroupElement::Perm(p) => GroupElement::Perm(Perm::identity(p.degree())),
            GroupElement::Matrix(m) => GroupElement::Matrix(FpMatrix::identity(m.prime(), m.dim())),
            GroupElement::Pair { vector, group } => GroupElement::Pair {
                vector: FpVector::zero(vector.prime(), vector.dim()),
                group: Box::new(group.identity_like()),
            },
            GroupElement::Product(a, b) => {
                GroupElement::product(a.identity_like(), b.identity_like())
            }
            GroupElement::Table(_) => GroupElement::Table(0),
        }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        match self {
            GroupElement::Matrix(m) if !m.is_invertible() => Err(Error::NotInvertible { p: m.prime() }),
            GroupElement::Pair { group, .. } => group.validate(),
            GroupElement::Product(a, b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    pub fn as_matrix(&self) -> Option<&FpMatrix> {
        match self {
            GroupElement::Matrix(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_perm(&self) -> Option<&Perm> {
        match self {
            GroupElement::Perm(p) => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Perm(p) => write!(f, "{p}"),
            GroupElement::Matrix(m) => write!(f, "{m}"),
            GroupElement::Pair { vector, group } => write!(f, "<{group} | {vector}>"),
            GroupElement::Product(a, b) => write!(f, "({a}, {b})"),
            GroupElement::Table(k) => write!(f, "#{k}"),
        }
    }
}

/// How permutations compose.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    /// `x^(gh) = (x^g)^h`: the left factor acts first.
    #[default]
    RightAction,
    /// `(gh)(x) = g(h(x))`: the right factor acts first.
    LeftAction,
}

/// Multiplication table of a group given abstractly; identity is index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    n: usize,
    data: Vec<u32>,
}

impl CayleyTable {
    pub fn new(n: usize, data: Vec<u32>) -> Result<CayleyTable> {
        if data.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: data.len(),
            });
        }
        if data.iter().any(|&x| x as usize >= n) {
            return Err(Error::InconsistentShapes("table entry out of range".into()));
        }
        if (0..n).any(|i| data[i] != i as u32 || data[i * n] != i as u32) {
            return Err(Error::InconsistentShapes("index 0 is not the identity".into()));
        }
        Ok(CayleyTable { n, data })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.data[a as usize * self.n + b as usize]
    }
}

#[derive(Clone, Debug)]
pub enum MulRule {
    Perm(Convention),
    Matrix,
    Semidirect(Arc<ModuleAction>),
    Direct(Box<MulRule>, Box<MulRule>),
    Table(Arc<CayleyTable>),
}

impl MulRule {
    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        match (self, a, b) {
            (MulRule::Perm(conv), GroupElement::Perm(x), GroupElement::Perm(y)) => match conv {
                Convention::RightAction => GroupElement::Perm(x.then(y)),
                Convention::LeftAction => GroupElement::Perm(y.then(x)),
            },
            (MulRule::Matrix, GroupElement::Matrix(x), GroupElement::Matrix(y)) => {
                GroupElement::Matrix(x.mul(y))
            }
            (
                MulRule::Semidirect(action),
                GroupElement::Pair { vector: v1, group: s1 },
                GroupElement::Pair { vector: v2, group: s2 },
            ) => {
                // (s1 v1)(s2 v2) = s1 s2 (v1^{s2} + v2)
                let s2_id = action
                    .group()
                    .id_of(s2)
                    .expect("semidirect group part outside the acting group");
                let vector = v1.mul_mat(action.rep(s2_id)).add(v2);
                let group = action.group().rule().mul(s1, s2);
                GroupElement::pair(vector, group)
            }
            (MulRule::Direct(ra, rb), GroupElement::Product(a1, b1), GroupElement::Product(a2, b2)) => {
                GroupElement::product(ra.mul(a1, a2), rb.mul(b1, b2))
            }
            (MulRule::Table(t), GroupElement::Table(x), GroupElement::Table(y)) => {
                GroupElement::Table(t.mul(*x, *y))
            }
            _ => panic!("multiplication rule does not match element variant"),
        }
    }

    pub(crate) fn accepts(&self, shape: &Shape) -> bool {
        match (self, shape) {
            (MulRule::Perm(_), Shape::Perm(_)) | (MulRule::Matrix, Shape::Matrix { .. }) => true,
            (MulRule::Semidirect(a), Shape::Pair { p, n, .. }) => a.prime() == *p && a.dim() == *n,
            (MulRule::Direct(ra, rb), Shape::Product(sa, sb)) => ra.accepts(sa) && rb.accepts(sb),
            (MulRule::Table(_), Shape::Table) => true,
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encoding_is_concatenation() {
        let m = FpMatrix::from_array(5, [[1, 2], [3, 4]]);
        let v = FpVector::new(5, vec![4, 0]);
        let e = GroupElement::pair(v, GroupElement::Matrix(m));
        assert_eq!(e.encode(), vec![4, 0, 1, 2, 3, 4]);
        assert_eq!(e.identity_like().encode(), vec![0, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn perm_conventions() {
        let a = GroupElement::Perm(Perm::from_cycles(3, &[&[0, 1]]).unwrap());
        let b = GroupElement::Perm(Perm::from_cycles(3, &[&[1, 2]]).unwrap());
        let right = MulRule::Perm(Convention::RightAction).mul(&a, &b);
        let left = MulRule::Perm(Convention::LeftAction).mul(&a, &b);
        // 0 -> 1 -> 2 under right action
        assert_eq!(right.as_perm().unwrap().apply(0), 2);
        assert_eq!(left.as_perm().unwrap().apply(0), 1);
        assert_ne!(right, left);
    }

    #[test]
    fn table_rejects_bad_identity() {
        assert!(CayleyTable::new(2, vec![0, 1, 1, 0]).is_ok());
        assert!(CayleyTable::new(2, vec![1, 0, 0, 1]).is_err());
    }
}
