//! Demazure crystals `f_w(b)`, Demazure characters by divided differences,
//! and the comparison of `D(lambda, s)` with `B^{r,c_r s} ⊗ u_{s Lambda_0}`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cartan::{AffineWeight, CartanDatum, ClassicalWeight, Node};
use crate::crystal::{Crystal, CrystalGraph, FormalHighest, Pair, Tensor};
use crate::error::{KrError, Result};
use crate::kr::{KrCrystal, KrElem};
use crate::rational::as_integer;
use crate::report::{Status, VerificationReport};
use crate::weyl::Weyl;

/// `(i, m)` pairs, applied in order.
pub type Monomial = Vec<(Node, usize)>;

#[derive(Clone, Debug)]
pub struct DemazureSet<E> {
    pub word: Vec<Node>,
    /// Each reached element with one monomial producing it from the generator.
    pub reached: BTreeMap<E, Monomial>,
}

impl<E: Ord> DemazureSet<E> {
    pub fn len(&self) -> usize {
        self.reached.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reached.is_empty()
    }

    pub fn contains(&self, b: &E) -> bool {
        self.reached.contains_key(b)
    }
}

/// `{f_{i_1}^{m_1} ... f_{i_N}^{m_N} b}` for the word `i_1 ... i_N`
/// (rightmost letter first).
pub fn f_w_closure<C: Crystal>(c: &C, b: &C::Elem, word: &[Node], cap: usize) -> Result<DemazureSet<C::Elem>> {
    let mut reached: BTreeMap<C::Elem, Monomial> = BTreeMap::from([(b.clone(), Vec::new())]);
    for &i in word.iter().rev() {
        let mut next = reached.clone();
        for (x, mono) in &reached {
            let mut cur = x.clone();
            let mut m = 0;
            while let Some(y) = c.f(i, &cur)? {
                m += 1;
                if !next.contains_key(&y) {
                    let mut w = mono.clone();
                    w.push((i, m));
                    next.insert(y.clone(), w);
                }
                cur = y;
            }
            if next.len() > cap {
                return Err(KrError::CapExceeded(cap));
            }
        }
        reached = next;
    }
    Ok(DemazureSet { word: word.to_vec(), reached })
}

/// Finite linear combination of `e^lambda`, `lambda in P`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CharacterPolynomial {
    pub terms: BTreeMap<AffineWeight, i64>,
}

impl CharacterPolynomial {
    pub fn monomial(w: AffineWeight) -> Self {
        CharacterPolynomial { terms: BTreeMap::from([(w, 1)]) }
    }

    pub fn add_term(&mut self, w: AffineWeight, c: i64) {
        let e = self.terms.entry(w).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn add(&mut self, other: &CharacterPolynomial) {
        for (w, &c) in &other.terms {
            self.add_term(w.clone(), c);
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Sum of coefficients.
    pub fn dimension(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Drops `Lambda_0` and `delta`.
    pub fn classical(&self, d: &CartanDatum) -> BTreeMap<ClassicalWeight, i64> {
        let mut out: BTreeMap<ClassicalWeight, i64> = BTreeMap::new();
        for (w, &c) in &self.terms {
            *out.entry(d.classical_projection(w)).or_insert(0) += c;
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Sorted `[weight, coefficient]` pairs.
    pub fn to_wire(&self) -> Vec<(AffineWeight, i64)> {
        self.terms.iter().map(|(w, &c)| (w.clone(), c)).collect()
    }
}

impl Serialize for CharacterPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_wire().serialize(s)
    }
}

/// `D_i`, extended linearly from
/// `e^lambda -> (e^lambda - e^{s_i lambda - alpha_i}) / (1 - e^{-alpha_i})`.
pub fn demazure_operator(d: &CartanDatum, i: Node, f: &CharacterPolynomial) -> CharacterPolynomial {
    let alpha = d.simple_root(i);
    let mut out = CharacterPolynomial::default();
    for (lam, &c) in &f.terms {
        let m = as_integer(&lam.pairing(i)).expect("integral weight");
        if m >= 0 {
            for k in 0..=m {
                out.add_term(lam.clone() - alpha.scale(k.into()), c);
            }
        } else {
            for k in 1..=(-m - 1) {
                out.add_term(lam.clone() + alpha.scale(k.into()), -c);
            }
        }
    }
    out
}

/// `D_{i_1} ... D_{i_N} e^Lambda`.
pub fn demazure_character(d: &CartanDatum, word: &[Node], lambda: &AffineWeight) -> CharacterPolynomial {
    word.iter()
        .rev()
        .fold(CharacterPolynomial::monomial(lambda.clone()), |acc, &i| demazure_operator(d, i, &acc))
}

/// `t_{-lambda*} = z tau`: reduced word of `z` and the permutation `tau`.
pub fn build_d(w: &Weyl, lambda: &ClassicalWeight) -> Result<(Vec<Node>, Vec<Node>)> {
    if !w.cartan.is_classically_dominant(lambda) {
        return Err(KrError::NotDominant(lambda.to_string()));
    }
    let t = w.translation(&-w.lambda_star(lambda))?;
    let f = w.factor_w_sigma(&t)?;
    Ok((f.z_word, f.tau))
}

/// The data of `D(c_r omega_r, s)` for a KR crystal: `w = w_1 w_2` with `w_2`
/// the minimal representative of `W_0 w`, and the top weight
/// `s Lambda_{tau(0)}`.
#[derive(Clone, Debug)]
pub struct DemazureData {
    pub w1: Vec<Node>,
    pub w2: Vec<Node>,
    pub tau0: Node,
    pub top: AffineWeight,
}

impl DemazureData {
    pub fn word(&self) -> Vec<Node> {
        self.w1.iter().chain(&self.w2).copied().collect()
    }
}

pub fn demazure_data(kr: &KrCrystal) -> Result<DemazureData> {
    let d = kr.cartan();
    let w = Weyl::new(d.clone());
    let r = kr.r();
    let lambda = d.classical_fundamental(r).scale(d.c[r].into());
    let (z, tau) = build_d(&w, &lambda)?;
    let z_elem = w.word(&z);
    let w2 = w.min_coset_rep_left_w0(&z_elem)?;
    let w1 = w.reduced_word(&(&z_elem * &w.word(&w2).inverse()))?;
    if w1.len() + w2.len() != z.len() || w1.contains(&0) {
        return Err(KrError::Integrity(format!("w = w1 w2 is not length additive: {z:?} = {w1:?} . {w2:?}")));
    }
    let tau0 = tau[0];
    let mut top = d.zero_weight();
    top.lambda[tau0] = (kr.s() as i64).into();
    Ok(DemazureData { w1, w2, tau0, top })
}

type Augmented = Tensor<KrCrystal, FormalHighest>;

/// `B^{r,c_r s} ⊗ B(s Lambda_0)` with `u' = u ⊗ u_{s Lambda_0}`.
fn augmented(kr: &KrCrystal, u: KrElem) -> (Augmented, Pair<KrElem, crate::crystal::FormalElem>) {
    let h = FormalHighest::multiple(kr.cartan().clone(), 0, kr.s() as i64);
    let u_prime = Pair(u, h.element());
    (Tensor::new(kr.clone(), h), u_prime)
}

fn weight_multiset<C: Crystal>(c: &C, elems: impl Iterator<Item = C::Elem>) -> Result<BTreeMap<ClassicalWeight, i64>> {
    let d = c.cartan();
    let mut out: BTreeMap<ClassicalWeight, i64> = BTreeMap::new();
    for b in elems {
        *out.entry(d.classical_projection(&c.weight(&b)?)).or_insert(0) += 1;
    }
    Ok(out)
}

fn first_difference(a: &BTreeMap<ClassicalWeight, i64>, b: &BTreeMap<ClassicalWeight, i64>) -> Option<String> {
    let keys: std::collections::BTreeSet<&ClassicalWeight> = a.keys().chain(b.keys()).collect();
    keys.into_iter().find_map(|k| {
        let (x, y) = (a.get(k).copied().unwrap_or(0), b.get(k).copied().unwrap_or(0));
        (x != y).then(|| format!("weight {k}: {x} vs {y}"))
    })
}

/// Checks that `f_w2` stays on the left factor, that its weights match the
/// Demazure character, and the classical closure, for one KR crystal.
pub fn verify_closure(kr: &KrCrystal, cap: usize) -> Result<VerificationReport> {
    let label = kr.label();
    let mut rep = VerificationReport::new("demazure");
    let g = kr.graph(cap)?;
    let u = kr.find_u(&g.nodes)?;
    let data = demazure_data(kr)?;
    let (aug, u_prime) = augmented(kr, u);

    let closure = f_w_closure(&aug, &u_prime, &data.w2, cap);
    let b_prime = match closure {
        Ok(set) => {
            rep.push(format!("{label}: f_w2 never acts on the right factor"), "demazure::left_factor", Status::Pass, "");
            set
        }
        Err(e) => {
            rep.push(format!("{label}: f_w2 never acts on the right factor"), "demazure::left_factor", Status::Fail, e.to_string());
            return Ok(rep.finish());
        }
    };

    let d = kr.cartan();
    let expected = demazure_character(d, &data.w2, &data.top);
    let expected_cl = expected.classical(d);
    let got = weight_multiset(&aug, b_prime.reached.keys().cloned())?;
    let a1 = match first_difference(&got, &expected_cl) {
        None => Ok(()),
        Some(diff) => Err(format!("|B'| = {}, Demazure dimension {}; {diff}", b_prime.len(), expected.dimension())),
    };
    rep.check(format!("{label}: B' matches B_w2(s Lambda_{})", data.tau0), "demazure::weights", a1);

    let classical: Vec<Node> = d.classical_nodes().collect();
    let seeds: Vec<_> = b_prime.reached.keys().cloned().collect();
    let closed = CrystalGraph::generate(&aug, &seeds, &classical, cap)?;
    let all_right = closed.nodes.iter().all(|p| p.1 == u_prime.1);
    let lefts: Vec<KrElem> = closed.nodes.iter().map(|p| p.0.clone()).collect();
    let full = all_right && lefts == g.nodes;
    rep.check(
        format!("{label}: classical closure of B' is B ⊗ u_(s Lambda_0)"),
        "demazure::closure",
        if full { Ok(()) } else { Err(format!("closure has {} of {} elements", closed.len(), g.len())) },
    );
    Ok(rep.finish())
}

/// Classically projected Demazure character of `D(c_r omega_r, s)` against
/// the weight multiset of the KR crystal.
pub fn compare_characters(kr: &KrCrystal, cap: usize) -> Result<std::result::Result<usize, String>> {
    let d = kr.cartan();
    let data = demazure_data(kr)?;
    let chi = demazure_character(d, &data.word(), &data.top).classical(d);
    let g = kr.graph(cap)?;
    let wts = weight_multiset(kr, g.nodes.iter().cloned())?;
    Ok(match first_difference(&chi, &wts) {
        None => Ok(chi.len()),
        Some(diff) => Err(format!("{}: {diff}", kr.label())),
    })
}
