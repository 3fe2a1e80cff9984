//! KR crystals `B^{r,s}` of type `A_{2n}^(2)` as virtual crystals inside
//! `B^{2n-r,s} ⊗ B^{r,s}` of type `A_{2n-1}^(1)`.
//!
//! Virtual operators: `f^_i = f_i f_{2n-i}` for `1 <= i < n`, `f^_n = f_n^2`
//! and `f^_0 = f_0^m` where `m` is the zero-node multiplicity (1 by default).

use crate::cartan::{AffineType, CartanDatum, Family, Node};
use crate::crystal::{CResult, Crystal, CrystalError, Pair, Tensor};
use crate::error::{KrError, Result};
use crate::kr_a::KrA;
use crate::tableau::Tableau;

pub type VirtualElem = Pair<Tableau, Tableau>;

#[derive(Clone, Debug)]
pub struct VirtualA2 {
    cartan: CartanDatum,
    pub ambient: Tensor<KrA, KrA>,
    pub n: usize,
    pub r: usize,
    pub s: usize,
    zero_multiplicity: usize,
}

impl VirtualA2 {
    pub fn new(n: usize, r: usize, s: usize) -> Result<Self> {
        Self::with_zero_multiplicity(n, r, s, 1)
    }

    /// Same construction with `f^_0 = f_0^m`.
    pub fn with_zero_multiplicity(n: usize, r: usize, s: usize, m: usize) -> Result<Self> {
        let cartan = CartanDatum::new(AffineType::new(Family::A2Even, n)?)?;
        if r == 0 || r > n {
            return Err(KrError::BadNode { node: r, max: n });
        }
        let ambient = Tensor::new(KrA::new(2 * n - 1, 2 * n - r, s)?, KrA::new(2 * n - 1, r, s)?);
        Ok(VirtualA2 { cartan, ambient, n, r, s, zero_multiplicity: m })
    }

    /// Ambient nodes making up the virtual node `i`, in application order,
    /// with repetition.
    pub fn ambient_word(&self, i: Node) -> Vec<Node> {
        let n = self.n;
        if i == 0 {
            vec![0; self.zero_multiplicity]
        } else if i == n {
            vec![n, n]
        } else {
            vec![2 * n - i, i]
        }
    }

    /// `u_{s omega_{2n-r}} ⊗ u_{s omega_r}`.
    pub fn generator(&self) -> VirtualElem {
        Pair(self.ambient.left.highest(), self.ambient.right.highest())
    }

    /// `v(b)` for the classical highest weight element of weight `s omega_k`:
    /// `(2n-k)^s ... (r+1)^s k^s ... 1^s ⊗ r^s ... 1^s`.
    pub fn classical_highest(&self, k: usize) -> VirtualElem {
        let left: Vec<Vec<u8>> = (1..=k as u8)
            .chain(self.r as u8 + 1..=(2 * self.n - k) as u8)
            .map(|v| vec![v; self.s])
            .collect();
        Pair(Tableau::new(left), self.ambient.right.highest())
    }

    fn apply_word(
        &self,
        i: Node,
        b: &VirtualElem,
        step: impl Fn(Node, &VirtualElem) -> CResult<Option<VirtualElem>>,
    ) -> CResult<Option<VirtualElem>> {
        let word = self.ambient_word(i);
        let mut cur = b.clone();
        for (k, &j) in word.iter().enumerate() {
            match step(j, &cur)? {
                Some(next) => cur = next,
                None if k == 0 => return Ok(None),
                None => return Err(CrystalError::Alignment { node: i }),
            }
        }
        Ok(Some(cur))
    }

    fn check_first_step_aligned(
        &self,
        i: Node,
        b: &VirtualElem,
        step: impl Fn(Node, &VirtualElem) -> CResult<Option<VirtualElem>>,
    ) -> CResult<()> {
        let word = self.ambient_word(i);
        if word.len() == 2 && word[0] != word[1] {
            let a = step(word[0], b)?.is_some();
            let c = step(word[1], b)?.is_some();
            if a != c {
                return Err(CrystalError::Alignment { node: i });
            }
        }
        Ok(())
    }

    /// Ambient `(epsilon, phi)` of node `i` divided by the multiplicity, for
    /// cross-checking the virtual string lengths.
    pub fn ambient_string_data(&self, i: Node, b: &VirtualElem) -> CResult<(i64, i64)> {
        let word = self.ambient_word(i);
        let j = word[0];
        let (e, p) = (self.ambient.epsilon(j, b)?, self.ambient.phi(j, b)?);
        let m = if word.iter().all(|&x| x == j) { word.len() as i64 } else { 1 };
        if e % m != 0 || p % m != 0 {
            return Err(CrystalError::Alignment { node: i });
        }
        Ok((e / m, p / m))
    }
}

/// Elements showing that `f_0^s` links the classical components
/// `B(s omega_k)` and `B(s omega_{k+1})`.
#[derive(Clone, Debug)]
pub struct YWitness {
    pub k: usize,
    pub b: VirtualElem,
    /// `S_1 ... S_k (b)`.
    pub y: VirtualElem,
    pub epsilon_y: Vec<i64>,
    pub phi_y: Vec<i64>,
    /// `f_0^s y`, `None` if the 0-string is too short.
    pub f0s_y: Option<VirtualElem>,
    pub target: VirtualElem,
}

impl VirtualA2 {
    /// `k < r`.
    pub fn y_witness(&self, k: usize) -> CResult<YWitness> {
        let b = self.classical_highest(k);
        let mut y = b.clone();
        for i in (1..=k).rev() {
            y = self.reflect(i, &y)?;
        }
        Ok(YWitness {
            k,
            epsilon_y: self.epsilon_vector(&y)?,
            phi_y: self.phi_vector(&y)?,
            f0s_y: self.f_power(0, self.s, &y)?,
            target: self.classical_highest(k + 1),
            b,
            y,
        })
    }
}

impl Crystal for VirtualA2 {
    type Elem = VirtualElem;

    fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    fn f(&self, i: Node, b: &VirtualElem) -> CResult<Option<VirtualElem>> {
        self.check_first_step_aligned(i, b, |j, x| self.ambient.f(j, x))?;
        self.apply_word(i, b, |j, x| self.ambient.f(j, x))
    }

    fn e(&self, i: Node, b: &VirtualElem) -> CResult<Option<VirtualElem>> {
        self.check_first_step_aligned(i, b, |j, x| self.ambient.e(j, x))?;
        self.apply_word(i, b, |j, x| self.ambient.e(j, x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::rank2::check_regular;
    use crate::crystal::{check_axioms, CrystalGraph};

    fn build(n: usize, r: usize, s: usize) -> (VirtualA2, CrystalGraph<VirtualElem>) {
        let v = VirtualA2::new(n, r, s).unwrap();
        let nodes: Vec<Node> = (0..=n).collect();
        let g = CrystalGraph::generate(&v, &[v.generator()], &nodes, 200_000).unwrap();
        (v, g)
    }

    #[test]
    fn small_cardinalities() {
        // B^{1,1} = B(omega_1) + B(0) classically: 2n + 1 elements.
        assert_eq!(build(1, 1, 1).1.len(), 3);
        assert_eq!(build(2, 1, 1).1.len(), 5);
        assert_eq!(build(3, 1, 1).1.len(), 7);
    }

    #[test]
    fn axioms_regularity_and_string_lengths() {
        for (n, r, s) in [(1, 1, 1), (1, 1, 2), (2, 1, 1), (2, 2, 1), (2, 1, 2), (2, 2, 2), (3, 2, 1), (3, 3, 1)] {
            let (v, g) = build(n, r, s);
            let nodes: Vec<Node> = (0..=n).collect();
            check_axioms(&v, &g.nodes, &nodes).unwrap_or_else(|e| panic!("A{}~2 B^{{{r},{s}}}: {e}", 2 * n));
            check_regular(&v, &g, &nodes).unwrap_or_else(|e| panic!("A{}~2 B^{{{r},{s}}}: {e}", 2 * n));
            for b in &g.nodes {
                for i in 0..=n {
                    let (e, p) = v.ambient_string_data(i, b).unwrap();
                    assert_eq!(e, v.epsilon(i, b).unwrap(), "{b} eps_{i}");
                    assert_eq!(p, v.phi(i, b).unwrap(), "{b} phi_{i}");
                }
            }
        }
    }

    #[test]
    fn generator_and_classical_highest_display() {
        let v = VirtualA2::new(3, 2, 2).unwrap();
        assert_eq!(v.generator().to_string(), "4^2 3^2 2^2 1^2 ⊗ 2^2 1^2");
        assert_eq!(v.classical_highest(0).to_string(), "6^2 5^2 4^2 3^2 ⊗ 2^2 1^2");
        assert_eq!(v.classical_highest(1).to_string(), "5^2 4^2 3^2 1^2 ⊗ 2^2 1^2");
        assert_eq!(v.classical_highest(2), v.generator());
    }

    #[test]
    fn squared_zero_operator_breaks_the_weight_axiom() {
        for (n, r) in [(1, 1), (2, 1), (2, 2)] {
            let v = VirtualA2::with_zero_multiplicity(n, r, 1, 2).unwrap();
            let nodes: Vec<Node> = (0..=n).collect();
            let g = CrystalGraph::generate(&v, &[v.generator()], &nodes, 1000).unwrap();
            let err = check_axioms(&v, &g.nodes, &nodes).unwrap_err();
            assert!(err.contains("alpha_1"), "{err}");
        }
    }

    fn runs(vals: impl IntoIterator<Item = usize>, s: usize) -> String {
        vals.into_iter().map(|v| format!("{v}^{s}")).collect::<Vec<_>>().join(" ")
    }

    #[test]
    fn y_rows() {
        for (n, s) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
            for r in 1..=n {
                let v = VirtualA2::new(n, r, s).unwrap();
                let right = runs((1..=r).rev(), s);
                for k in 0..r {
                    let ly = v.y_witness(k).unwrap();
                    let b = format!("{} ⊗ {right}", runs(((r + 1)..=(2 * n - k)).rev().chain((1..=k).rev()), s));
                    let y = format!(
                        "{} ⊗ {right}",
                        runs(
                            std::iter::once(2 * n)
                                .filter(|_| k > 0)
                                .chain(((r + 1)..=(2 * n - k - 1 + usize::from(k == 0))).rev())
                                .chain((2..=k + 1).rev()),
                            s
                        )
                    );
                    let target = format!("{} ⊗ {right}", runs(((r + 1)..=(2 * n - k - 1)).rev().chain((1..=k + 1).rev()), s));
                    assert_eq!(ly.b.to_string(), b);
                    assert_eq!(ly.y.to_string(), y, "n={n} r={r} s={s} k={k}");
                    assert_eq!(ly.f0s_y.as_ref().map(|x| x.to_string()), Some(target.clone()));
                    assert_eq!(ly.target.to_string(), target);
                    let mut eps = vec![0; n + 1];
                    let mut phi = vec![0; n + 1];
                    eps[0] += s as i64;
                    phi[0] += s as i64;
                    if k > 0 {
                        eps[1] += s as i64;
                        phi[k + 1] += s as i64;
                    }
                    assert_eq!((ly.epsilon_y, ly.phi_y), (eps, phi), "n={n} r={r} s={s} k={k}");
                }
            }
        }
    }
}
