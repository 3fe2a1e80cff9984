//! Twofold tensor products of KR crystals: connectedness, the raising
//! sequence to `u_1 ⊗ u_2`, and the combinatorial R-matrix with an
//! independent propagation oracle.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::cartan::Node;
use crate::crystal::{CResult, Crystal, CrystalGraph, Dual, DualElem, FormalHighest, Pair, Tensor};
use crate::error::{KrError, Result};
use crate::kr::{KrCrystal, KrElem};

pub type TwoElem = Pair<KrElem, KrElem>;

/// Longest raising or lowering sequence tried before giving up.
const MAX_STEPS: usize = 1_000_000;

/// Applies the smallest applicable `e_i` (or `f_i`) until none applies.
/// Returns the indices in application order and the endpoint.
fn greedy<C: Crystal>(c: &C, start: &C::Elem, raise: bool) -> CResult<(Vec<Node>, C::Elem)> {
    let nodes: Vec<Node> = c.cartan().nodes().collect();
    let mut cur = start.clone();
    let mut word = Vec::new();
    'outer: for _ in 0..MAX_STEPS {
        for &i in &nodes {
            let next = if raise { c.e(i, &cur)? } else { c.f(i, &cur)? };
            if let Some(x) = next {
                cur = x;
                word.push(i);
                continue 'outer;
            }
        }
        return Ok((word, cur));
    }
    Err(crate::crystal::CrystalError::StringTooLong { node: 0, cap: MAX_STEPS })
}

/// Raises until the right factor is highest (`raise`) or lowers until the
/// left factor is lowest. For the smallest `i` with `epsilon_i` of the right
/// factor positive, `e_i` is applied until it acts on that factor; the
/// intermediate steps shorten a finite `i`-string of the left factor.
fn settle<A: Crystal, B: Crystal>(
    t: &Tensor<A, B>,
    start: Pair<A::Elem, B::Elem>,
    raise: bool,
) -> CResult<(Vec<Node>, Pair<A::Elem, B::Elem>)> {
    let nodes: Vec<Node> = t.cartan().nodes().collect();
    let mut cur = start;
    let mut word = Vec::new();
    loop {
        let mut pick = None;
        for &i in &nodes {
            let room = if raise { t.right.epsilon(i, &cur.1)? } else { t.left.phi(i, &cur.0)? };
            if room > 0 {
                pick = Some(i);
                break;
            }
        }
        let Some(i) = pick else { return Ok((word, cur)) };
        loop {
            let next = if raise { t.e(i, &cur)? } else { t.f(i, &cur)? };
            let next = next.ok_or(crate::crystal::CrystalError::Invalid(format!("operator {i} undefined while settling")))?;
            let target_moved = if raise { next.1 != cur.1 } else { next.0 != cur.0 };
            word.push(i);
            cur = next;
            if target_moved {
                break;
            }
        }
    }
}

/// A word of raising (`lowering = false`) or lowering operators, in
/// application order, reaching `endpoint`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OperatorPath {
    pub word: Vec<Node>,
    pub lowering: bool,
    #[serde(skip)]
    pub endpoint: TwoElem,
}

impl OperatorPath {
    /// Applies the word to `b` in `c`.
    pub fn replay<C: Crystal<Elem = TwoElem>>(&self, c: &C, b: &TwoElem) -> CResult<Option<TwoElem>> {
        replay(c, &self.word, self.lowering, b)
    }

    pub fn describe(&self) -> String {
        let op = if self.lowering { "f" } else { "e" };
        if self.word.is_empty() {
            return "1".into();
        }
        self.word.iter().rev().map(|i| format!("{op}{i}")).collect::<Vec<_>>().join(" ")
    }
}

fn replay<C: Crystal>(c: &C, word: &[Node], lowering: bool, b: &C::Elem) -> CResult<Option<C::Elem>> {
    let mut cur = b.clone();
    for &i in word {
        let next = if lowering { c.f(i, &cur)? } else { c.e(i, &cur)? };
        match next {
            Some(x) => cur = x,
            None => return Ok(None),
        }
    }
    Ok(Some(cur))
}

/// `R: B_1 ⊗ B_2 -> B_2 ⊗ B_1` as a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMap {
    pub map: BTreeMap<TwoElem, TwoElem>,
}

impl Serialize for RMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[String; 2]> = self
            .map
            .iter()
            .map(|(a, b)| [pair_input(a), pair_input(b)])
            .collect();
        pairs.serialize(s)
    }
}

pub fn pair_input(p: &TwoElem) -> String {
    format!("{} * {}", p.0.to_input_string(), p.1.to_input_string())
}

/// `B_1 ⊗ B_2` together with `B_2 ⊗ B_1`.
#[derive(Clone, Debug)]
pub struct TwoFold {
    pub b1: KrCrystal,
    pub b2: KrCrystal,
    pub prod: Tensor<KrCrystal, KrCrystal>,
    pub swapped: Tensor<KrCrystal, KrCrystal>,
    pub elems1: Vec<KrElem>,
    pub elems2: Vec<KrElem>,
}

impl TwoFold {
    pub fn new(b1: KrCrystal, b2: KrCrystal, cap: usize) -> Result<Self> {
        if b1.cartan() != b2.cartan() {
            return Err(KrError::Parse(format!("{} and {} have different types", b1.label(), b2.label())));
        }
        let elems1 = b1.graph(cap)?.nodes;
        let elems2 = b2.graph(cap)?.nodes;
        if elems1.len().saturating_mul(elems2.len()) > cap {
            return Err(KrError::CapExceeded(cap));
        }
        Ok(TwoFold {
            prod: Tensor::new(b1.clone(), b2.clone()),
            swapped: Tensor::new(b2.clone(), b1.clone()),
            b1,
            b2,
            elems1,
            elems2,
        })
    }

    pub fn label(&self) -> String {
        format!("{} ⊗ {}", self.b1.label(), self.b2.label())
    }

    pub fn elements(&self) -> Vec<TwoElem> {
        let mut out = Vec::with_capacity(self.elems1.len() * self.elems2.len());
        for a in &self.elems1 {
            for b in &self.elems2 {
                out.push(Pair(a.clone(), b.clone()));
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.elems1.len() * self.elems2.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Parses `b1 * b2` (or `b1 ⊗ b2`).
    pub fn parse(&self, text: &str) -> Result<TwoElem> {
        let (l, r) = text
            .split_once('*')
            .or_else(|| text.split_once('⊗'))
            .ok_or_else(|| KrError::Parse(format!("expected two factors separated by '*', got {text:?}")))?;
        Ok(Pair(self.b1.parse_elem(l.trim())?, self.b2.parse_elem(r.trim())?))
    }

    /// Single component under all `e_i`, `f_i`.
    pub fn check_connected(&self) -> Result<bool> {
        let nodes: Vec<Node> = self.prod.cartan().nodes().collect();
        let g = CrystalGraph::generate(&self.prod, &[self.anchor()], &nodes, self.len())?;
        Ok(g.len() == self.len())
    }

    /// `u_{c_{r_1} s_1 omega_{r_1}} ⊗ u_{c_{r_2} s_2 omega_{r_2}}`.
    pub fn anchor(&self) -> TwoElem {
        Pair(self.b1.generator(), self.b2.generator())
    }

    pub fn swapped_anchor(&self) -> TwoElem {
        Pair(self.b2.generator(), self.b1.generator())
    }

    /// `u_1` with `epsilon = s_1 Lambda_0`, `phi = s_1 Lambda_{tau_1(0)}`
    /// and `u_2` with `epsilon = s_2 Lambda_{tau_2^{-1}(0)}`, `phi = s_2 Lambda_0`.
    pub fn u_pair(&self) -> Result<(KrElem, KrElem)> {
        let u1 = self.b1.find_u(&self.elems1)?;
        let rank = self.b2.cartan().rank();
        let s2 = self.b2.s() as i64;
        let mut eps = vec![0; rank + 1];
        eps[self.b2.tau_inv0()?] = s2;
        let mut phi = vec![0; rank + 1];
        phi[0] = s2;
        let mut found = Vec::new();
        for b in &self.elems2 {
            if self.b2.epsilon_vector(b)? == eps && self.b2.phi_vector(b)? == phi {
                found.push(b.clone());
            }
        }
        if found.len() != 1 {
            return Err(KrError::AssumptionViolated(format!(
                "{}: {} elements with epsilon = sL_tau^-1(0), phi = sL0",
                self.b2.label(),
                found.len()
            )));
        }
        Ok((u1, found.remove(0)))
    }

    /// Raising word (`s_1 >= s_2`) or lowering word (`s_1 < s_2`) from `b`
    /// to the common endpoint, computed in the crystal augmented by formal
    /// highest (resp. lowest) weight factors.
    pub fn to_u_sequence(&self, b: &TwoElem) -> Result<OperatorPath> {
        let d = self.prod.cartan().clone();
        let (s1, s2) = (self.b1.s() as i64, self.b2.s() as i64);
        if s1 >= s2 {
            // bring b2 ⊗ u to the top of B2 ⊗ B(s2 L_{tau2^-1(0)}), then raise
            // b1 against B((s1-s2) L0) appended on the right
            let h1 = FormalHighest::multiple(d.clone(), self.b2.tau_inv0()?, s2);
            let aug1 = Tensor::new(self.b1.clone(), Tensor::new(self.b2.clone(), h1.clone()));
            let start = Pair(b.0.clone(), Pair(b.1.clone(), h1.element()));
            let (mut word, Pair(c1, rest)) = settle(&aug1, start, true)?;
            let h2 = FormalHighest::multiple(d, 0, s1 - s2);
            let aug2 = Tensor::new(aug1, h2.clone());
            let (tail, end) = greedy(&aug2, &Pair(Pair(c1, rest), h2.element()), true)?;
            word.extend(tail);
            let Pair(Pair(e1, Pair(e2, _)), _) = end;
            Ok(OperatorPath { word, lowering: false, endpoint: Pair(e1, e2) })
        } else {
            // bring u^v ⊗ b1 to the bottom of B^v(s1 L_{tau1(0)}) ⊗ B1, then
            // lower b2 against B^v((s2-s1) L0) prepended on the left
            let l1 = Dual(FormalHighest::multiple(d.clone(), self.b1.tau0()?, s1));
            let aug1 = Tensor::new(Tensor::new(l1.clone(), self.b1.clone()), self.b2.clone());
            let start = Pair(Pair(DualElem(l1.0.element()), b.0.clone()), b.1.clone());
            let (mut word, mid) = settle(&aug1, start, false)?;
            let l2 = Dual(FormalHighest::multiple(d, 0, s2 - s1));
            let aug2 = Tensor::new(l2.clone(), aug1);
            let (tail, end) = greedy(&aug2, &Pair(DualElem(l2.0.element()), mid), false)?;
            word.extend(tail);
            let Pair(_, Pair(Pair(_, e1), e2)) = end;
            Ok(OperatorPath { word, lowering: true, endpoint: Pair(e1, e2) })
        }
    }

    /// `R(b_1 ⊗ b_2) = f_{<-i} e_{j} (u_2 ⊗ u_1)` with `e_i`, `e_j` the
    /// sequences for `b_1 ⊗ b_2` and the anchor (`e`, `f` exchanged when
    /// `s_1 < s_2`).
    pub fn combinatorial_r(&self, b: &TwoElem) -> Result<(TwoElem, OperatorPath, OperatorPath)> {
        let pi = self.to_u_sequence(b)?;
        let pj = self.to_u_sequence(&self.anchor())?;
        if pi.endpoint != pj.endpoint {
            return Err(KrError::Integrity(format!(
                "{} and the anchor reach different endpoints {} and {}",
                b, pi.endpoint, pj.endpoint
            )));
        }
        let integrity = |what: &str| KrError::Integrity(format!("{what} undefined while computing R({b})"));
        let mid = replay(&self.swapped, &pj.word, pj.lowering, &self.swapped_anchor())?
            .ok_or_else(|| integrity("anchor sequence on the swapped anchor"))?;
        let back: Vec<Node> = pi.word.iter().rev().copied().collect();
        let out = replay(&self.swapped, &back, !pi.lowering, &mid)?.ok_or_else(|| integrity("reversed sequence"))?;
        Ok((out, pi, pj))
    }

    /// The R-matrix obtained by propagating `anchor -> swapped anchor` along
    /// all edges.
    pub fn oracle_r(&self) -> Result<RMap> {
        propagate(&self.prod, &self.swapped, self.anchor(), self.swapped_anchor(), self.len())
    }
}

/// The unique morphism of connected crystals `c -> d` sending `x0` to `y0`,
/// built by walking edges from `x0`; any color mismatch is an error.
pub fn propagate<C, D, E>(c: &C, d: &D, x0: E, y0: E, expected: usize) -> Result<RMap>
where
    C: Crystal<Elem = TwoElem>,
    D: Crystal<Elem = TwoElem>,
    E: Into<TwoElem>,
{
    let nodes: Vec<Node> = c.cartan().nodes().collect();
    let (x0, y0) = (x0.into(), y0.into());
    if c.weight(&x0)? != d.weight(&y0)? {
        return Err(KrError::Integrity(format!("{x0} and {y0} have different weights")));
    }
    let mut map: BTreeMap<TwoElem, TwoElem> = BTreeMap::from([(x0.clone(), y0)]);
    let mut queue = VecDeque::from([x0]);
    while let Some(x) = queue.pop_front() {
        let y = map[&x].clone();
        for &i in &nodes {
            for lower in [true, false] {
                let (xi, yi) = if lower { (c.f(i, &x)?, d.f(i, &y)?) } else { (c.e(i, &x)?, d.e(i, &y)?) };
                match (xi, yi) {
                    (None, None) => {}
                    (Some(a), Some(b)) => match map.get(&a) {
                        Some(prev) if *prev != b => {
                            return Err(KrError::Integrity(format!("{a} maps to both {prev} and {b}")));
                        }
                        Some(_) => {}
                        None => {
                            map.insert(a.clone(), b);
                            queue.push_back(a);
                        }
                    },
                    _ => {
                        let op = if lower { "f" } else { "e" };
                        return Err(KrError::Integrity(format!("{op}_{i} defined on only one of {x} and {y}")));
                    }
                }
            }
        }
    }
    if map.len() != expected {
        return Err(KrError::Integrity(format!("propagation reached {} of {expected} elements", map.len())));
    }
    let mut image: Vec<&TwoElem> = map.values().collect();
    image.sort();
    image.dedup();
    if image.len() != map.len() {
        return Err(KrError::Integrity("propagated map is not injective".into()));
    }
    Ok(RMap { map })
}
