//! KR crystals `B^{r,s}` of type `A_n^(1)` on `r x s` rectangular tableaux,
//! with 0-arrows `f_0 = pr^{-1} f_1 pr`.

use crate::cartan::{AffineType, CartanDatum, Family, Node};
use crate::crystal::{CResult, Crystal};
use crate::error::{KrError, Result};
use crate::tableau::{enumerate_ssyt, Tableau};

#[derive(Clone, Debug)]
pub struct KrA {
    cartan: CartanDatum,
    pub n: usize,
    pub r: usize,
    pub s: usize,
}

impl KrA {
    pub fn new(n: usize, r: usize, s: usize) -> Result<Self> {
        let cartan = CartanDatum::new(AffineType::new(Family::A1, n)?)?;
        if r == 0 || r > n {
            return Err(KrError::BadNode { node: r, max: n });
        }
        if s == 0 {
            return Err(KrError::Parse("s must be positive".into()));
        }
        Ok(KrA { cartan, n, r, s })
    }

    fn max(&self) -> u8 {
        self.n as u8 + 1
    }

    /// The classical highest weight element `u_{s omega_r}`.
    pub fn highest(&self) -> Tableau {
        Tableau::rectangle_highest(self.r, self.s)
    }

    pub fn promotion(&self, t: &Tableau) -> Tableau {
        t.promotion(self.max())
    }

    pub fn promotion_inverse(&self, t: &Tableau) -> Tableau {
        t.promotion_inverse(self.max())
    }

    /// Every element, by direct enumeration of rectangular tableaux.
    pub fn elements(&self) -> Vec<Tableau> {
        enumerate_ssyt(&vec![self.s; self.r], self.max())
    }

    pub fn contains(&self, t: &Tableau) -> bool {
        t.shape() == vec![self.s; self.r] && t.is_semistandard(self.max())
    }
}

impl Crystal for KrA {
    type Elem = Tableau;

    fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    fn f(&self, i: Node, b: &Tableau) -> CResult<Option<Tableau>> {
        Ok(if i == 0 {
            self.promotion(b).f(1).map(|t| self.promotion_inverse(&t))
        } else {
            b.f(i as u8)
        })
    }

    fn e(&self, i: Node, b: &Tableau) -> CResult<Option<Tableau>> {
        Ok(if i == 0 {
            self.promotion(b).e(1).map(|t| self.promotion_inverse(&t))
        } else {
            b.e(i as u8)
        })
    }

    fn epsilon(&self, i: Node, b: &Tableau) -> CResult<i64> {
        Ok(if i == 0 { self.promotion(b).epsilon(1) } else { b.epsilon(i as u8) })
    }

    fn phi(&self, i: Node, b: &Tableau) -> CResult<i64> {
        Ok(if i == 0 { self.promotion(b).phi(1) } else { b.phi(i as u8) })
    }
}
