use std::fmt;

use super::{CResult, Crystal, CrystalError};
use crate::cartan::{AffineWeight, CartanDatum, Node};
use crate::rational::q;

/// The single element `u_Lambda` of a formal highest weight crystal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormalElem(pub Vec<i64>);

impl fmt::Display for FormalElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| if c == 1 { format!("L{i}") } else { format!("{c}L{i}") })
            .collect();
        if terms.is_empty() {
            write!(f, "u(0)")
        } else {
            write!(f, "u({})", terms.join("+"))
        }
    }
}

/// `{u_Lambda}` with `epsilon = 0`, `phi = Lambda`, `e_i = 0`.
///
/// `f_i u_Lambda` is only defined (as 0) when `phi_i = 0`; asking for it
/// otherwise is reported as [`CrystalError::FormalTrap`].
#[derive(Clone, Debug)]
pub struct FormalHighest {
    cartan: CartanDatum,
    pub lambda: Vec<i64>,
}

impl FormalHighest {
    pub fn new(cartan: CartanDatum, lambda: Vec<i64>) -> Self {
        assert_eq!(lambda.len(), cartan.rank() + 1);
        assert!(lambda.iter().all(|&x| x >= 0), "formal highest weight must be dominant");
        FormalHighest { cartan, lambda }
    }

    /// `s Lambda_j`.
    pub fn multiple(cartan: CartanDatum, j: Node, s: i64) -> Self {
        let mut lambda = vec![0; cartan.rank() + 1];
        lambda[j] = s;
        Self::new(cartan, lambda)
    }

    pub fn element(&self) -> FormalElem {
        FormalElem(self.lambda.clone())
    }
}

impl Crystal for FormalHighest {
    type Elem = FormalElem;

    fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    fn f(&self, i: Node, _b: &FormalElem) -> CResult<Option<FormalElem>> {
        if self.lambda[i] == 0 {
            Ok(None)
        } else {
            Err(CrystalError::FormalTrap { node: i, phi: self.lambda[i] })
        }
    }

    fn e(&self, _i: Node, _b: &FormalElem) -> CResult<Option<FormalElem>> {
        Ok(None)
    }

    fn epsilon(&self, _i: Node, _b: &FormalElem) -> CResult<i64> {
        Ok(0)
    }

    fn phi(&self, i: Node, _b: &FormalElem) -> CResult<i64> {
        Ok(self.lambda[i])
    }

    fn weight(&self, _b: &FormalElem) -> CResult<AffineWeight> {
        let mut w = self.cartan.zero_weight();
        for (i, &x) in self.lambda.iter().enumerate() {
            w.lambda[i] = q(x);
        }
        Ok(w)
    }
}
