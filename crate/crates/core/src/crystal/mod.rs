//! Abstract crystals and the generic constructions built on top of them.
//!
//! Tensor products use the anti-Kashiwara convention: `f_i` acts on the left
//! factor of `b ⊗ b'` iff `epsilon_i(b) >= phi_i(b')`.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use thiserror::Error;

use crate::cartan::{AffineWeight, CartanDatum, Node};
use crate::rational::q;

mod dual;
mod formal;
pub mod graph;
pub mod rank2;
mod tensor;

pub use dual::{Dual, DualElem, Twisted};
pub use formal::{FormalElem, FormalHighest};
pub use graph::CrystalGraph;
pub use tensor::{Pair, Tensor};

/// Longest `i`-string explored by the default `epsilon`/`phi`.
pub const STRING_CAP: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrystalError {
    #[error("f_{node} on a formal highest weight element with phi_{node} = {phi} is undetermined")]
    FormalTrap { node: Node, phi: i64 },
    #[error("virtual operator f_{node} left the aligned subcrystal")]
    Alignment { node: Node },
    #[error("{node}-string longer than {cap}")]
    StringTooLong { node: Node, cap: usize },
    #[error("invalid element: {0}")]
    Invalid(String),
}

pub type CResult<T> = Result<T, CrystalError>;

pub trait Crystal {
    type Elem: Clone + Eq + Hash + Ord + Debug + Display;

    fn cartan(&self) -> &CartanDatum;

    fn f(&self, i: Node, b: &Self::Elem) -> CResult<Option<Self::Elem>>;

    fn e(&self, i: Node, b: &Self::Elem) -> CResult<Option<Self::Elem>>;

    fn epsilon(&self, i: Node, b: &Self::Elem) -> CResult<i64> {
        let mut cur = b.clone();
        for k in 0..STRING_CAP {
            match self.e(i, &cur)? {
                Some(next) => cur = next,
                None => return Ok(k as i64),
            }
        }
        Err(CrystalError::StringTooLong { node: i, cap: STRING_CAP })
    }

    fn phi(&self, i: Node, b: &Self::Elem) -> CResult<i64> {
        let mut cur = b.clone();
        for k in 0..STRING_CAP {
            match self.f(i, &cur)? {
                Some(next) => cur = next,
                None => return Ok(k as i64),
            }
        }
        Err(CrystalError::StringTooLong { node: i, cap: STRING_CAP })
    }

    /// `sum_i (phi_i - epsilon_i) Lambda_i`, i.e. the weight modulo `delta`.
    fn weight(&self, b: &Self::Elem) -> CResult<AffineWeight> {
        let d = self.cartan();
        let mut w = d.zero_weight();
        for i in d.nodes() {
            w.lambda[i] = q(self.phi(i, b)? - self.epsilon(i, b)?);
        }
        Ok(w)
    }

    fn epsilon_vector(&self, b: &Self::Elem) -> CResult<Vec<i64>> {
        self.cartan().nodes().map(|i| self.epsilon(i, b)).collect()
    }

    fn phi_vector(&self, b: &Self::Elem) -> CResult<Vec<i64>> {
        self.cartan().nodes().map(|i| self.phi(i, b)).collect()
    }

    /// `f_i^k b`, `None` if the string ends first.
    fn f_power(&self, i: Node, k: usize, b: &Self::Elem) -> CResult<Option<Self::Elem>> {
        let mut cur = b.clone();
        for _ in 0..k {
            match self.f(i, &cur)? {
                Some(next) => cur = next,
                None => return Ok(None),
            }
        }
        Ok(Some(cur))
    }

    fn e_power(&self, i: Node, k: usize, b: &Self::Elem) -> CResult<Option<Self::Elem>> {
        let mut cur = b.clone();
        for _ in 0..k {
            match self.e(i, &cur)? {
                Some(next) => cur = next,
                None => return Ok(None),
            }
        }
        Ok(Some(cur))
    }

    /// Applies `f_{i_1} ... f_{i_k}` (rightmost letter first).
    fn f_word(&self, word: &[Node], b: &Self::Elem) -> CResult<Option<Self::Elem>> {
        let mut cur = b.clone();
        for &i in word.iter().rev() {
            match self.f(i, &cur)? {
                Some(next) => cur = next,
                None => return Ok(None),
            }
        }
        Ok(Some(cur))
    }

    fn e_word(&self, word: &[Node], b: &Self::Elem) -> CResult<Option<Self::Elem>> {
        let mut cur = b.clone();
        for &i in word.iter().rev() {
            match self.e(i, &cur)? {
                Some(next) => cur = next,
                None => return Ok(None),
            }
        }
        Ok(Some(cur))
    }

    /// `S_i b`: the reflection of `b` in its `i`-string.
    fn reflect(&self, i: Node, b: &Self::Elem) -> CResult<Self::Elem> {
        let k = self.phi(i, b)? - self.epsilon(i, b)?;
        let out = if k >= 0 {
            self.f_power(i, k as usize, b)?
        } else {
            self.e_power(i, (-k) as usize, b)?
        };
        out.ok_or(CrystalError::Invalid(format!("{i}-string of {b} shorter than its weight")))
    }

    /// `true` iff `e_i b = 0` for every `i` in `nodes`.
    fn is_highest(&self, b: &Self::Elem, nodes: &[Node]) -> CResult<bool> {
        for &i in nodes {
            if self.e(i, b)?.is_some() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Checks the crystal axioms at the given nodes on every element of a finite
/// graph: `e_i f_i b = b`, the string lengths shift by one along each edge and
/// `phi_i - epsilon_i = <alpha_i^vee, wt b>`.
pub fn check_axioms<C: Crystal>(c: &C, elems: &[C::Elem], nodes: &[Node]) -> Result<(), String> {
    let d = c.cartan();
    let err = |e: CrystalError| e.to_string();
    for b in elems {
        let wt = c.weight(b).map_err(err)?;
        for &i in nodes {
            let eps = c.epsilon(i, b).map_err(err)?;
            let phi = c.phi(i, b).map_err(err)?;
            if wt.lambda[i] != q(phi - eps) {
                return Err(format!("weight mismatch at {b}, node {i}"));
            }
            if let Some(fb) = c.f(i, b).map_err(err)? {
                if c.e(i, &fb).map_err(err)?.as_ref() != Some(b) {
                    return Err(format!("e_{i} f_{i} {b} != {b}"));
                }
                if c.epsilon(i, &fb).map_err(err)? != eps + 1
                    || c.phi(i, &fb).map_err(err)? != phi - 1
                {
                    return Err(format!("string lengths wrong along f_{i} at {b}"));
                }
                let wf = c.weight(&fb).map_err(err)?;
                let expected = wt.clone() - d.simple_root(i).without_delta();
                if nodes.iter().any(|&j| wf.lambda[j] != expected.lambda[j]) {
                    return Err(format!("wt(f_{i} {b}) != wt({b}) - alpha_{i}"));
                }
            }
            if let Some(eb) = c.e(i, b).map_err(err)? {
                if c.f(i, &eb).map_err(err)?.as_ref() != Some(b) {
                    return Err(format!("f_{i} e_{i} {b} != {b}"));
                }
            }
        }
    }
    Ok(())
}
