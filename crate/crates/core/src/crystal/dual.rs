use std::fmt;

use super::{CResult, Crystal};
use crate::cartan::{AffineWeight, CartanDatum, Node};

/// Element `b^vee` of the dual crystal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualElem<E>(pub E);

impl<E: fmt::Display> fmt::Display for DualElem<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})^v", self.0)
    }
}

/// `B^vee`: `f_i b^vee = (e_i b)^vee`, `epsilon_i(b^vee) = phi_i(b)`, `wt = -wt`.
#[derive(Clone, Debug)]
pub struct Dual<C>(pub C);

impl<C: Crystal> Crystal for Dual<C> {
    type Elem = DualElem<C::Elem>;

    fn cartan(&self) -> &CartanDatum {
        self.0.cartan()
    }

    fn f(&self, i: Node, b: &Self::Elem) -> CResult<Option<Self::Elem>> {
        Ok(self.0.e(i, &b.0)?.map(DualElem))
    }

    fn e(&self, i: Node, b: &Self::Elem) -> CResult<Option<Self::Elem>> {
        Ok(self.0.f(i, &b.0)?.map(DualElem))
    }

    fn epsilon(&self, i: Node, b: &Self::Elem) -> CResult<i64> {
        self.0.phi(i, &b.0)
    }

    fn phi(&self, i: Node, b: &Self::Elem) -> CResult<i64> {
        self.0.epsilon(i, &b.0)
    }

    fn weight(&self, b: &Self::Elem) -> CResult<AffineWeight> {
        Ok(-self.0.weight(&b.0)?)
    }
}

/// `B^sigma` for a diagram automorphism `sigma`:
/// `f_j(b^sigma) = (f_{sigma^{-1}(j)} b)^sigma`, `wt(b^sigma) = sigma(wt b)`.
#[derive(Clone, Debug)]
pub struct Twisted<C> {
    pub inner: C,
    /// `sigma[i]` is the image of node `i`.
    pub sigma: Vec<Node>,
    inverse: Vec<Node>,
}

impl<C: Crystal> Twisted<C> {
    pub fn new(inner: C, sigma: Vec<Node>) -> Self {
        let mut inverse = vec![0; sigma.len()];
        for (i, &s) in sigma.iter().enumerate() {
            inverse[s] = i;
        }
        Twisted { inner, sigma, inverse }
    }
}

impl<C: Crystal> Crystal for Twisted<C> {
    type Elem = C::Elem;

    fn cartan(&self) -> &CartanDatum {
        self.inner.cartan()
    }

    fn f(&self, j: Node, b: &Self::Elem) -> CResult<Option<Self::Elem>> {
        self.inner.f(self.inverse[j], b)
    }

    fn e(&self, j: Node, b: &Self::Elem) -> CResult<Option<Self::Elem>> {
        self.inner.e(self.inverse[j], b)
    }

    fn epsilon(&self, j: Node, b: &Self::Elem) -> CResult<i64> {
        self.inner.epsilon(self.inverse[j], b)
    }

    fn phi(&self, j: Node, b: &Self::Elem) -> CResult<i64> {
        self.inner.phi(self.inverse[j], b)
    }

    fn weight(&self, b: &Self::Elem) -> CResult<AffineWeight> {
        let w = self.inner.weight(b)?;
        let mut out = w.clone();
        for (i, x) in w.lambda.iter().enumerate() {
            out.lambda[self.sigma[i]] = *x;
        }
        Ok(out)
    }
}
