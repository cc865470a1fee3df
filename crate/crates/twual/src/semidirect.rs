//! Vectors of edge operations and their semidirect extension by edge
//! permutations.
//!
//! A `RibbonElement` assigns one [`EdgeOp`] to each of the `n` edge
//! positions. Pairing it with a `Permutation` gives a `GroupElement`,
//! multiplied by `(a, p) * (b, q) = (a . phi_p(b), p q)` where `phi_p`
//! permutes the positions of its argument.

use std::fmt;

use thiserror::Error;

use crate::edgeop::{EdgeOp, OpParseError};
use crate::perm::Permutation;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RibbonElement {
    ops: Vec<EdgeOp>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ElementError {
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error(transparent)]
    BadOp(#[from] OpParseError),
}

impl RibbonElement {
    pub fn new(ops: Vec<EdgeOp>) -> Self {
        RibbonElement { ops }
    }

    pub fn identity(n: usize) -> Self {
        RibbonElement { ops: vec![EdgeOp::Identity; n] }
    }

    pub fn uniform(g: EdgeOp, n: usize) -> Self {
        RibbonElement { ops: vec![g; n] }
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Operation at 0-based position `i`.
    #[inline]
    pub fn get(&self, i: usize) -> EdgeOp {
        self.ops[i]
    }

    pub fn ops(&self) -> &[EdgeOp] {
        &self.ops
    }

    pub fn is_identity(&self) -> bool {
        self.ops.iter().all(|g| g.is_identity())
    }

    /// Componentwise product; `other` acts on the graph first.
    pub fn mul(&self, other: &RibbonElement) -> Result<RibbonElement, ElementError> {
        if self.len() != other.len() {
            return Err(ElementError::LengthMismatch(self.len(), other.len()));
        }
        Ok(RibbonElement {
            ops: self.ops.iter().zip(&other.ops).map(|(a, b)| a.mul(*b)).collect(),
        })
    }

    pub fn inv(&self) -> RibbonElement {
        RibbonElement { ops: self.ops.iter().map(|g| g.inv()).collect() }
    }

    /// The index-permuting automorphism: position `i` of the result holds the
    /// operation at position `pi^-1(i)` of `self`.
    pub fn permuted(&self, pi: &Permutation) -> Result<RibbonElement, ElementError> {
        if self.len() != pi.degree() {
            return Err(ElementError::LengthMismatch(self.len(), pi.degree()));
        }
        let inv = pi.inverse();
        Ok(RibbonElement { ops: (0..self.len()).map(|i| self.ops[inv.apply(i)]).collect() })
    }

    /// Right composition with a permutation: position `i` of the result holds
    /// the operation at position `pi(i)` of `self`.
    pub fn compose_perm(&self, pi: &Permutation) -> Result<RibbonElement, ElementError> {
        if self.len() != pi.degree() {
            return Err(ElementError::LengthMismatch(self.len(), pi.degree()));
        }
        Ok(RibbonElement { ops: (0..self.len()).map(|i| self.ops[pi.apply(i)]).collect() })
    }

    /// Parse a comma-separated list like `tdt,td,d`.
    pub fn parse(text: &str) -> Result<RibbonElement, ElementError> {
        let ops = text
            .split(',')
            .map(|s| EdgeOp::parse(s.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RibbonElement { ops })
    }
}

impl fmt::Display for RibbonElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, op) in self.ops.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{op}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RibbonElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RibbonElement{self}")
    }
}

/// An element of the full acting group: edge operations plus an edge
/// permutation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    pub gamma: RibbonElement,
    pub pi: Permutation,
}

impl GroupElement {
    pub fn new(gamma: RibbonElement, pi: Permutation) -> Result<Self, ElementError> {
        if gamma.len() != pi.degree() {
            return Err(ElementError::LengthMismatch(gamma.len(), pi.degree()));
        }
        Ok(GroupElement { gamma, pi })
    }

    pub fn identity(n: usize) -> Self {
        GroupElement { gamma: RibbonElement::identity(n), pi: Permutation::identity(n) }
    }

    pub fn degree(&self) -> usize {
        self.pi.degree()
    }

    pub fn is_identity(&self) -> bool {
        self.gamma.is_identity() && self.pi.is_identity()
    }

    /// `(a, p)(b, q) = (a . phi_p(b), p q)`.
    pub fn mul(&self, other: &GroupElement) -> Result<GroupElement, ElementError> {
        if self.degree() != other.degree() {
            return Err(ElementError::LengthMismatch(self.degree(), other.degree()));
        }
        let gamma = self.gamma.mul(&other.gamma.permuted(&self.pi)?)?;
        Ok(GroupElement { gamma, pi: self.pi.compose(&other.pi) })
    }

    /// `(g, p)^-1 = (g^-1 o p, p^-1)`.
    pub fn inverse(&self) -> GroupElement {
        let gamma = self.gamma.inv().compose_perm(&self.pi).expect("degrees agree");
        GroupElement { gamma, pi: self.pi.inverse() }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.gamma, self.pi)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement{self}")
    }
}
