use std::fmt;

use super::{CResult, Crystal};
use crate::cartan::{CartanDatum, Node};

/// `b ⊗ b'`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair<A, B>(pub A, pub B);

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Pair<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {}", self.0, self.1)
    }
}

#[derive(Clone, Debug)]
pub struct Tensor<L, R> {
    pub left: L,
    pub right: R,
}

impl<L: Crystal, R: Crystal> Tensor<L, R> {
    pub fn new(left: L, right: R) -> Self {
        assert_eq!(left.cartan(), right.cartan(), "tensor factors of different types");
        Tensor { left, right }
    }
}

impl<L: Crystal, R: Crystal> Crystal for Tensor<L, R> {
    type Elem = Pair<L::Elem, R::Elem>;

    fn cartan(&self) -> &CartanDatum {
        self.left.cartan()
    }

    fn f(&self, i: Node, b: &Self::Elem) -> CResult<Option<Self::Elem>> {
        let eps = self.left.epsilon(i, &b.0)?;
        let phi = self.right.phi(i, &b.1)?;
        if eps >= phi {
            Ok(self.left.f(i, &b.0)?.map(|x| Pair(x, b.1.clone())))
        } else {
            Ok(self.right.f(i, &b.1)?.map(|y| Pair(b.0.clone(), y)))
        }
    }

    fn e(&self, i: Node, b: &Self::Elem) -> CResult<Option<Self::Elem>> {
        let eps = self.left.epsilon(i, &b.0)?;
        let phi = self.right.phi(i, &b.1)?;
        if eps > phi {
            Ok(self.left.e(i, &b.0)?.map(|x| Pair(x, b.1.clone())))
        } else {
            Ok(self.right.e(i, &b.1)?.map(|y| Pair(b.0.clone(), y)))
        }
    }

    fn epsilon(&self, i: Node, b: &Self::Elem) -> CResult<i64> {
        let el = self.left.epsilon(i, &b.0)?;
        let (er, pr) = (self.right.epsilon(i, &b.1)?, self.right.phi(i, &b.1)?);
        Ok(er.max(el + er - pr))
    }

    fn phi(&self, i: Node, b: &Self::Elem) -> CResult<i64> {
        let (el, pl) = (self.left.epsilon(i, &b.0)?, self.left.phi(i, &b.0)?);
        let pr = self.right.phi(i, &b.1)?;
        Ok(pl.max(pl + pr - el))
    }

    fn weight(&self, b: &Self::Elem) -> CResult<crate::cartan::AffineWeight> {
        Ok(self.left.weight(&b.0)? + self.right.weight(&b.1)?)
    }
}
