//! The affine Weyl group `W`, the extended affine Weyl group
//! `W~ = W_0 x| T(M~) = W x| Sigma`, and the finite Weyl group `W_0`.
//!
//! Elements of `W~` are exact rational matrices acting on `P` in the basis
//! `Lambda_0..Lambda_n, delta/a_0`; words never serve as identity.

use std::fmt;
use std::ops::Mul;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cartan::{AffineWeight, CartanDatum, ClassicalWeight, Family, Node};
use crate::error::{KrError, Result};
use crate::rational::{invert, q, to_wire, Q};

/// Longest word produced by the descent loops before giving up.
const DESCENT_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    /// `w(v) = matrix * v` on coordinate columns.
    pub matrix: Vec<Vec<Q>>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let d = rank + 2;
        WeylElement {
            matrix: (0..d)
                .map(|i| (0..d).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.matrix.len() - 2)
    }

    fn coords(w: &AffineWeight) -> Vec<Q> {
        let mut v = w.lambda.clone();
        v.push(w.delta);
        v
    }

    fn from_coords(mut v: Vec<Q>) -> AffineWeight {
        let delta = v.pop().unwrap();
        AffineWeight { lambda: v, delta }
    }

    pub fn apply(&self, w: &AffineWeight) -> AffineWeight {
        let v = Self::coords(w);
        Self::from_coords(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement { matrix: invert(&self.matrix).expect("Weyl group elements are invertible") }
    }

    pub fn pow(&self, k: usize) -> WeylElement {
        (0..k).fold(Self::identity(self.matrix.len() - 2), |acc, _| &acc * self)
    }
}

impl Mul for &WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: &WeylElement) -> WeylElement {
        let d = self.matrix.len();
        WeylElement {
            matrix: (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| (0..d).map(|k| self.matrix[i][k] * rhs.matrix[k][j]).sum())
                        .collect()
                })
                .collect(),
        }
    }
}

impl Mul for WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: WeylElement) -> WeylElement {
        &self * &rhs
    }
}

impl Serialize for WeylElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m: Vec<Vec<String>> =
            self.matrix.iter().map(|row| row.iter().map(to_wire).collect()).collect();
        m.serialize(s)
    }
}

/// `w~ = z tau` with `z in W` and `tau in Sigma`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    /// Reduced word for `z`: `z = s_{z[0]} s_{z[1]} ...`.
    pub z_word: Vec<Node>,
    /// Permutation of `I` underlying `tau`.
    pub tau: Vec<Node>,
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z: Vec<String> = self.z_word.iter().map(|i| format!("s{i}")).collect();
        write!(f, "z = {} ; tau = {:?}", if z.is_empty() { "1".into() } else { z.join(" ") }, self.tau)
    }
}

/// Affine and finite Weyl group computations for one Cartan datum.
#[derive(Clone, Debug)]
pub struct Weyl {
    pub cartan: CartanDatum,
}

impl Weyl {
    pub fn new(cartan: CartanDatum) -> Self {
        Weyl { cartan }
    }

    fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank())
    }

    /// `s_i(lambda) = lambda - <alpha_i^vee, lambda> alpha_i`.
    pub fn simple_reflection(&self, i: Node) -> WeylElement {
        let d = self.rank() + 2;
        let alpha = WeylElement::coords(&self.cartan.simple_root(i));
        let mut m = self.identity().matrix;
        // Column j is s_i(e_j); only Lambda_i pairs nontrivially with alpha_i^vee.
        for (r, row) in m.iter_mut().enumerate().take(d) {
            row[i] -= alpha[r];
        }
        WeylElement { matrix: m }
    }

    /// `s_{w[0]} s_{w[1]} ... s_{w[k-1]}`.
    pub fn word(&self, w: &[Node]) -> WeylElement {
        w.iter()
            .fold(self.identity(), |acc, &i| &acc * &self.simple_reflection(i))
    }

    /// `t_alpha(lambda) = lambda + <c,lambda> alpha - ((lambda|alpha) + (alpha|alpha)<c,lambda>/2) delta`.
    pub fn translation(&self, alpha: &ClassicalWeight) -> Result<WeylElement> {
        let d = &self.cartan;
        if !d.in_extended_lattice(alpha) {
            return Err(KrError::NotInExtendedLattice(alpha.to_string()));
        }
        let norm = d.classical_form(alpha, alpha);
        let sec = WeylElement::coords(&d.section(alpha));
        let mut m = self.identity().matrix;
        let a0 = q(d.a0());
        for j in d.nodes() {
            let lam = d.fundamental(j);
            let level = d.level(&lam);
            for (r, row) in m.iter_mut().enumerate() {
                row[j] += level * sec[r];
            }
            let shift = d.pair_with_classical(&lam, alpha) + norm * level / q(2);
            m[self.rank() + 1][j] -= shift * a0;
        }
        Ok(WeylElement { matrix: m })
    }

    /// Reflection in the classical root with simple-root coordinates `beta`.
    pub fn classical_root_reflection(&self, beta: &ClassicalWeight) -> WeylElement {
        let d = &self.cartan;
        let coords = d.root_coordinates(beta);
        let mut root = d.zero_weight();
        for i in d.classical_nodes() {
            root = root + d.simple_root(i).scale(coords[i - 1]);
        }
        let norm = d.classical_form(beta, beta);
        let mut m = self.identity().matrix;
        let rc = WeylElement::coords(&root);
        for j in d.nodes() {
            let pairing = q(2) * d.pair_with_classical(&d.fundamental(j), beta) / norm;
            for (r, row) in m.iter_mut().enumerate() {
                row[j] -= pairing * rc[r];
            }
        }
        WeylElement { matrix: m }
    }

    /// The regular dominant test point `x = sum_i Lambda_i`.
    pub fn test_point(&self) -> AffineWeight {
        let mut x = self.cartan.zero_weight();
        for v in x.lambda.iter_mut() {
            *v = Q::one();
        }
        x
    }

    /// Greedy left descents at the smallest index among `allowed`:
    /// returns `(word, residual)` with `w = s_{word[0]} ... s_{word[k-1]} residual`.
    fn strip_left_descents(
        &self,
        w: &WeylElement,
        allowed: impl Fn(Node) -> bool,
    ) -> Result<(Vec<Node>, WeylElement)> {
        let x = self.test_point();
        let mut cur = w.clone();
        let mut word = Vec::new();
        for _ in 0..DESCENT_CAP {
            let wx = cur.apply(&x);
            match self.cartan.nodes().find(|&i| allowed(i) && wx.lambda[i].is_negative()) {
                Some(i) => {
                    cur = &self.simple_reflection(i) * &cur;
                    word.push(i);
                }
                None => return Ok((word, cur)),
            }
        }
        Err(KrError::NotInExtendedWeyl("descent did not terminate".into()))
    }

    /// Reads the permutation of a length-zero element:
    /// `tau(Lambda_j) = Lambda_{tau(j)} mod delta`.
    fn length_zero_permutation(&self, w: &WeylElement) -> Result<Vec<Node>> {
        let d = &self.cartan;
        let mut perm = Vec::with_capacity(d.rank() + 1);
        for j in d.nodes() {
            let img = w.apply(&d.fundamental(j));
            let hits: Vec<Node> = d.nodes().filter(|&k| !img.lambda[k].is_zero()).collect();
            match hits.as_slice() {
                [k] if img.lambda[*k].is_one() => perm.push(*k),
                _ => return Err(KrError::NotInExtendedWeyl(format!("Lambda_{j} -> {img}"))),
            }
        }
        let mut seen = perm.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != perm.len() {
            return Err(KrError::NotInExtendedWeyl("length-zero part is not a permutation".into()));
        }
        Ok(perm)
    }

    /// `w~ = z tau`, `z` given by a reduced word.
    pub fn factor_w_sigma(&self, w: &WeylElement) -> Result<Factorization> {
        let (z_word, tau_elem) = self.strip_left_descents(w, |_| true)?;
        let tau = self.length_zero_permutation(&tau_elem)?;
        Ok(Factorization { z_word, tau })
    }

    /// The element `tau in W~` of length zero with permutation `tau`, recovered
    /// as `z^{-1} w~` from a factorization.
    pub fn sigma_element(&self, w: &WeylElement, f: &Factorization) -> WeylElement {
        &self.word(&f.z_word).inverse() * w
    }

    /// Reduced word of `w in W`; rejects elements with nontrivial `Sigma`-part.
    pub fn reduced_word(&self, w: &WeylElement) -> Result<Vec<Node>> {
        let (word, residual) = self.strip_left_descents(w, |_| true)?;
        if !residual.is_identity() {
            return Err(KrError::NontrivialSigma);
        }
        Ok(word)
    }

    /// Length; for `w~ = z tau` this is `l(z)`.
    pub fn length(&self, w: &WeylElement) -> Result<usize> {
        Ok(self.strip_left_descents(w, |_| true)?.0.len())
    }

    /// Minimum length representative of `W_0 w`, as a reduced word.
    pub fn min_coset_rep_left_w0(&self, w: &WeylElement) -> Result<Vec<Node>> {
        let (_, residual) = self.strip_left_descents(w, |i| i != 0)?;
        self.reduced_word(&residual)
    }

    /// `i in I^0` with `mu + omega_i in M`, where `mu` is the translation part
    /// of `w~` (`omega_0 = 0`).
    pub fn coset_index(&self, w: &WeylElement) -> Option<Node> {
        let d = &self.cartan;
        let l0 = d.fundamental(0);
        let moved = w.apply(&l0) - l0;
        let mu = d.classical_projection(&moved);
        d.special_nodes
            .iter()
            .copied()
            .find(|&i| d.in_translation_lattice(&(mu.clone() + d.classical_fundamental(i))))
    }

    // ---- finite Weyl group W_0 on classical weights ----

    pub fn reflect_classical(&self, i: Node, mu: &ClassicalWeight) -> ClassicalWeight {
        let k = mu.pairing(i);
        mu.clone() - self.cartan.classical_simple_root(i).scale(k)
    }

    /// Applies `s_{w[0]} ... s_{w[k-1]}` (rightmost first).
    pub fn apply_classical_word(&self, w: &[Node], mu: &ClassicalWeight) -> ClassicalWeight {
        w.iter().rev().fold(mu.clone(), |acc, &i| self.reflect_classical(i, &acc))
    }

    /// Shortest `w in W_0` with `w(lambda)` antidominant, as a word
    /// `s_{w[0]} ... s_{w[k-1]}`.
    pub fn shortest_to_antidominant(&self, lambda: &ClassicalWeight) -> Result<Vec<Node>> {
        if !self.cartan.is_classically_dominant(lambda) {
            return Err(KrError::NotDominant(lambda.to_string()));
        }
        let mut cur = lambda.clone();
        let mut applied = Vec::new();
        while let Some(i) = self.cartan.classical_nodes().find(|&i| cur.pairing(i).is_positive()) {
            cur = self.reflect_classical(i, &cur);
            applied.push(i);
        }
        applied.reverse();
        Ok(applied)
    }

    /// Dominant element of `W_0 mu`.
    pub fn dominant_representative(&self, mu: &ClassicalWeight) -> ClassicalWeight {
        let mut cur = mu.clone();
        while let Some(i) = self.cartan.classical_nodes().find(|&i| cur.pairing(i).is_negative()) {
            cur = self.reflect_classical(i, &cur);
        }
        cur
    }

    /// Reduced word of the longest element `w_0`.
    pub fn longest_word(&self) -> Vec<Node> {
        let rho = ClassicalWeight::from_ints(&vec![1; self.rank()]);
        self.shortest_to_antidominant(&rho).expect("rho is dominant")
    }

    /// `lambda* = -w_0(lambda)`.
    pub fn lambda_star(&self, lambda: &ClassicalWeight) -> ClassicalWeight {
        -self.apply_classical_word(&self.longest_word(), lambda)
    }

    /// The node `r*` with `omega_r* = omega_{r*}`.
    pub fn star_node(&self, r: Node) -> Node {
        if r == 0 {
            return 0;
        }
        let s = self.lambda_star(&self.cartan.classical_fundamental(r));
        self.cartan
            .classical_nodes()
            .find(|&j| s == self.cartan.classical_fundamental(j))
            .expect("lambda* permutes fundamental weights")
    }

    /// `t_{-c_r omega_r}`.
    pub fn kr_translation(&self, r: Node) -> Result<WeylElement> {
        let d = &self.cartan;
        self.translation(&d.classical_fundamental(r).scale(-q(d.c[r])))
    }

    /// `t_{-c_r omega_r*}`.
    pub fn kr_translation_star(&self, r: Node) -> Result<WeylElement> {
        let d = &self.cartan;
        let rs = self.star_node(r);
        self.translation(&d.classical_fundamental(rs).scale(-q(d.c[r])))
    }

    /// Explicit reduced word for the minimum length coset representative of
    /// `W_0 z` where `t_{-c_r omega_r} = z tau`, for nonspecial `r`.
    pub fn wtilde_word(&self, r: Node) -> Result<Vec<Node>> {
        let d = &self.cartan;
        d.check_node(r)?;
        if d.is_special(r) {
            return Err(KrError::SpecialNode(r));
        }
        let mut w = Vec::new();
        let fam = d.affine_type.family;
        if fam.is_bd_family() {
            let i = r / 2;
            let odd = r % 2 == 1;
            for k in (1..=i).rev() {
                w.push(0);
                let top2 = if odd { 2 * k } else { 2 * k - 1 };
                w.extend(2..=top2);
                w.extend(1..top2);
            }
        } else if fam.is_c_family() {
            for k in (1..=r).rev() {
                w.push(0);
                w.extend(1..k);
            }
        } else {
            debug_assert_eq!(fam, Family::A1);
            return Err(KrError::SpecialNode(r));
        }
        Ok(w)
    }
}
