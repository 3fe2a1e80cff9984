//! The implemented KR crystals behind one interface: type `A_n^(1)` on
//! rectangular tableaux and type `A_{2n}^(2)` as a virtual crystal.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;
use serde::Serialize;

use crate::cartan::{AffineType, CartanDatum, ClassicalWeight, Family, Node};
use crate::crystal::{CResult, Crystal, CrystalGraph, Pair};
use crate::error::{KrError, Result};
use crate::kr_a::KrA;
use crate::rational::q;
use crate::tableau::Tableau;
use crate::virtual_a2::VirtualA2;
use crate::weyl::Weyl;

#[derive(Clone, Debug)]
pub enum KrCrystal {
    A(KrA),
    Virtual(VirtualA2),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KrElem {
    A(Tableau),
    Virtual(Pair<Tableau, Tableau>),
}

impl fmt::Display for KrElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KrElem::A(t) => write!(f, "{t}"),
            KrElem::Virtual(p) => write!(f, "{p}"),
        }
    }
}

impl KrElem {
    /// Inverse of [`KrCrystal::parse_elem`].
    pub fn to_input_string(&self) -> String {
        match self {
            KrElem::A(t) => t.to_input_string(),
            KrElem::Virtual(Pair(l, r)) => format!("{}|{}", l.to_input_string(), r.to_input_string()),
        }
    }
}

impl Serialize for KrElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_input_string())
    }
}

/// Node cap for generating a single KR crystal.
pub const DEFAULT_CAP: usize = 1_000_000;

impl KrCrystal {
    pub fn new(t: AffineType, r: usize, s: usize) -> Result<Self> {
        if s == 0 {
            return Err(KrError::Parse("s must be positive".into()));
        }
        match t.family {
            Family::A1 => Ok(KrCrystal::A(KrA::new(t.rank, r, s)?)),
            Family::A2Even => Ok(KrCrystal::Virtual(VirtualA2::new(t.rank, r, s)?)),
            _ => {
                let letter = t.to_string().chars().next().unwrap_or('?');
                Err(KrError::OutOfScope(format!(
                    "native {letter}-type KR model out of scope ({t}); implemented: A_n^(1), A_2n^(2)"
                )))
            }
        }
    }

    pub fn affine_type(&self) -> AffineType {
        self.cartan().affine_type
    }

    pub fn r(&self) -> usize {
        match self {
            KrCrystal::A(k) => k.r,
            KrCrystal::Virtual(v) => v.r,
        }
    }

    pub fn s(&self) -> usize {
        match self {
            KrCrystal::A(k) => k.s,
            KrCrystal::Virtual(v) => v.s,
        }
    }

    pub fn label(&self) -> String {
        format!("{} B^{{{},{}}}", self.affine_type(), self.r(), self.s())
    }

    /// The classical highest weight element `u_{s omega_r}`.
    pub fn generator(&self) -> KrElem {
        match self {
            KrCrystal::A(k) => KrElem::A(k.highest()),
            KrCrystal::Virtual(v) => KrElem::Virtual(v.generator()),
        }
    }

    pub fn graph(&self, cap: usize) -> Result<CrystalGraph<KrElem>> {
        let nodes: Vec<Node> = self.cartan().nodes().collect();
        CrystalGraph::generate(self, &[self.generator()], &nodes, cap)
    }

    /// Tableau syntax `1,1/2,3`; virtual elements as `left|right`.
    pub fn parse_elem(&self, text: &str) -> Result<KrElem> {
        let elem = match self {
            KrCrystal::A(k) => {
                let t: Tableau = text.parse()?;
                if !k.contains(&t) {
                    return Err(KrError::Parse(format!("{text:?} is not an element of {}", self.label())));
                }
                KrElem::A(t)
            }
            KrCrystal::Virtual(v) => {
                let (l, r) = text
                    .split_once('|')
                    .ok_or_else(|| KrError::Parse(format!("expected left|right, got {text:?}")))?;
                let p = Pair(l.parse()?, r.parse()?);
                if !v.ambient.left.contains(&p.0) || !v.ambient.right.contains(&p.1) {
                    return Err(KrError::Parse(format!("{text:?} is not in the ambient crystal")));
                }
                KrElem::Virtual(p)
            }
        };
        Ok(elem)
    }

    /// `tau` where `t_{-c_r omega_r*} = z tau`.
    pub fn tau(&self) -> Result<Vec<Node>> {
        let w = Weyl::new(self.cartan().clone());
        Ok(w.factor_w_sigma(&w.kr_translation_star(self.r())?)?.tau)
    }

    pub fn tau0(&self) -> Result<Node> {
        Ok(self.tau()?[0])
    }

    /// `tau^{-1}(0)`.
    pub fn tau_inv0(&self) -> Result<Node> {
        let t = self.tau()?;
        Ok(t.iter().position(|&x| x == 0).expect("tau is a permutation"))
    }

    /// All elements with `epsilon = s Lambda_0` and `phi = s Lambda_{tau(0)}`.
    pub fn find_u_candidates(&self, elems: &[KrElem]) -> Result<Vec<KrElem>> {
        let rank = self.cartan().rank();
        let s = self.s() as i64;
        let mut eps = vec![0; rank + 1];
        eps[0] = s;
        let mut phi = vec![0; rank + 1];
        phi[self.tau0()?] = s;
        let mut out = Vec::new();
        for b in elems {
            if self.epsilon_vector(b)? == eps && self.phi_vector(b)? == phi {
                out.push(b.clone());
            }
        }
        Ok(out)
    }

    /// The unique `u`; more or fewer candidates violate the assumption.
    pub fn find_u(&self, elems: &[KrElem]) -> Result<KrElem> {
        let mut c = self.find_u_candidates(elems)?;
        if c.len() != 1 {
            return Err(KrError::AssumptionViolated(format!(
                "{}: {} elements with epsilon = sL0, phi = sL_tau(0)",
                self.label(),
                c.len()
            )));
        }
        Ok(c.remove(0))
    }

    pub fn classical_weight(&self, b: &KrElem) -> CResult<ClassicalWeight> {
        let d = self.cartan();
        Ok(d.classical_projection(&self.weight(b)?))
    }

    /// `c_r s omega_r`.
    pub fn top_weight(&self) -> ClassicalWeight {
        let d = self.cartan();
        let r = self.r();
        d.classical_fundamental(r).scale(q(d.c[r] * self.s() as i64))
    }

    /// Every weight lies in the convex hull of `W_0 c_r s omega_r` and each
    /// extremal weight is carried by exactly one element.
    pub fn check_convex_hull(&self, elems: &[KrElem]) -> Result<()> {
        let d = self.cartan();
        let w = Weyl::new(d.clone());
        let top = self.top_weight();
        let mut extremal: BTreeMap<String, usize> = BTreeMap::new();
        for b in elems {
            let mu = self.classical_weight(b)?;
            let dom = w.dominant_representative(&mu);
            let diff = d.root_coordinates(&(top.clone() - dom.clone()));
            if diff.iter().any(|x| x.is_negative()) {
                return Err(KrError::Integrity(format!("weight {mu} of {b} is outside the convex hull of W_0({top})")));
            }
            if dom == top {
                *extremal.entry(mu.to_string()).or_insert(0) += 1;
            }
        }
        if let Some((mu, k)) = extremal.iter().find(|(_, &k)| k != 1) {
            return Err(KrError::Integrity(format!("extremal weight {mu} carried by {k} elements")));
        }
        let orbit = orbit_size(&w, &top);
        if extremal.len() != orbit {
            return Err(KrError::Integrity(format!(
                "{} of {orbit} extremal weights occur",
                extremal.len()
            )));
        }
        Ok(())
    }

    /// Classical highest weight elements with their classical weights.
    pub fn classical_highest(&self, g: &CrystalGraph<KrElem>) -> Result<Vec<(KrElem, ClassicalWeight)>> {
        let classical: Vec<Node> = self.cartan().classical_nodes().collect();
        g.highest_weight_vertices(&classical)
            .into_iter()
            .map(|k| {
                let b = g.nodes[k].clone();
                let wt = self.classical_weight(&b)?;
                Ok((b, wt))
            })
            .collect()
    }
}

fn orbit_size(w: &Weyl, lambda: &ClassicalWeight) -> usize {
    let mut seen = vec![lambda.clone()];
    let mut k = 0;
    while k < seen.len() {
        for i in w.cartan.classical_nodes() {
            let m = w.reflect_classical(i, &seen[k]);
            if !seen.contains(&m) {
                seen.push(m);
            }
        }
        k += 1;
    }
    seen.len()
}

impl Crystal for KrCrystal {
    type Elem = KrElem;

    fn cartan(&self) -> &CartanDatum {
        match self {
            KrCrystal::A(k) => k.cartan(),
            KrCrystal::Virtual(v) => v.cartan(),
        }
    }

    fn f(&self, i: Node, b: &KrElem) -> CResult<Option<KrElem>> {
        match (self, b) {
            (KrCrystal::A(k), KrElem::A(t)) => Ok(k.f(i, t)?.map(KrElem::A)),
            (KrCrystal::Virtual(v), KrElem::Virtual(p)) => Ok(v.f(i, p)?.map(KrElem::Virtual)),
            _ => Err(mismatch(b)),
        }
    }

    fn e(&self, i: Node, b: &KrElem) -> CResult<Option<KrElem>> {
        match (self, b) {
            (KrCrystal::A(k), KrElem::A(t)) => Ok(k.e(i, t)?.map(KrElem::A)),
            (KrCrystal::Virtual(v), KrElem::Virtual(p)) => Ok(v.e(i, p)?.map(KrElem::Virtual)),
            _ => Err(mismatch(b)),
        }
    }

    fn epsilon(&self, i: Node, b: &KrElem) -> CResult<i64> {
        match (self, b) {
            (KrCrystal::A(k), KrElem::A(t)) => k.epsilon(i, t),
            (KrCrystal::Virtual(v), KrElem::Virtual(p)) => v.epsilon(i, p),
            _ => Err(mismatch(b)),
        }
    }

    fn phi(&self, i: Node, b: &KrElem) -> CResult<i64> {
        match (self, b) {
            (KrCrystal::A(k), KrElem::A(t)) => k.phi(i, t),
            (KrCrystal::Virtual(v), KrElem::Virtual(p)) => v.phi(i, p),
            _ => Err(mismatch(b)),
        }
    }
}

fn mismatch(b: &KrElem) -> crate::crystal::CrystalError {
    crate::crystal::CrystalError::Invalid(format!("{b} does not belong to this crystal"))
}

/// Instances `(type, r, s)` used by the exhaustive scans: `A_n^(1)` with
/// `n <= max_a`, `s <= max_sa`; `A_{2n}^(2)` with `n <= max_v`, `s <= max_sv`.
pub fn scan_instances(max_a: usize, max_sa: usize, max_v: usize, max_sv: usize) -> Vec<(AffineType, usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_a {
        let t = AffineType::new(Family::A1, n).expect("rank >= 1");
        for r in 1..=n {
            for s in 1..=max_sa {
                out.push((t, r, s));
            }
        }
    }
    for n in 1..=max_v {
        let t = AffineType::new(Family::A2Even, n).expect("rank >= 1");
        for r in 1..=n {
            for s in 1..=max_sv {
                out.push((t, r, s));
            }
        }
    }
    out
}
