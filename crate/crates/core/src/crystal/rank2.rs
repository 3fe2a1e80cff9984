//! Regularity: every rank-2 Levi component of a crystal graph must be the
//! crystal graph of an irreducible highest weight module.
//!
//! The reference crystals are built here from scratch as words in a small
//! letter crystal, tensored with the signature rule, so that the check does not
//! depend on [`super::Tensor`].

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use super::graph::CrystalGraph;
use super::Crystal;
use crate::cartan::Node;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Rank2Kind {
    A1xA1,
    A2,
    /// `B_2 = C_2`, first node short.
    B2,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", s.join(" ⊗ "))
    }
}

/// Letter crystal: `arrows[k]` lists `(from, to)` for color `k` (0 or 1).
struct Letters {
    arrows: [Vec<(u8, u8)>; 2],
}

impl Letters {
    fn for_kind(kind: Rank2Kind) -> Self {
        match kind {
            // 1 -> 2 (color 0), 2 -> 3 (color 1)
            Rank2Kind::A2 => Letters { arrows: [vec![(1, 2)], vec![(2, 3)]] },
            // 1 -> 2 -> 2bar -> 1bar, encoded 1, 2, 3, 4
            Rank2Kind::B2 => Letters { arrows: [vec![(1, 2), (3, 4)], vec![(2, 3)]] },
            Rank2Kind::A1xA1 => unreachable!(),
        }
    }

    fn f(&self, k: usize, l: u8) -> Option<u8> {
        self.arrows[k].iter().find(|(a, _)| *a == l).map(|&(_, b)| b)
    }

    fn e(&self, k: usize, l: u8) -> Option<u8> {
        self.arrows[k].iter().find(|(_, b)| *b == l).map(|&(a, _)| a)
    }

    /// Signature rule: each letter contributes `+` if it has an outgoing
    /// arrow and `-` if it has an incoming one; adjacent `-+` cancel; `f`
    /// acts on the rightmost surviving `+`.
    fn f_word(&self, k: usize, w: &[u8]) -> Option<Vec<u8>> {
        let pos = self.reduced(k, w).0.last().copied()?;
        let mut out = w.to_vec();
        out[pos] = self.f(k, w[pos])?;
        Some(out)
    }

    /// `(positions of unmatched +, positions of unmatched -)`.
    fn reduced(&self, k: usize, w: &[u8]) -> (Vec<usize>, Vec<usize>) {
        let mut minus_stack: Vec<usize> = Vec::new();
        let mut plus: Vec<usize> = Vec::new();
        for (p, &l) in w.iter().enumerate() {
            if self.f(k, l).is_some() {
                if minus_stack.pop().is_none() {
                    plus.push(p);
                }
            }
            if self.e(k, l).is_some() {
                minus_stack.push(p);
            }
        }
        (plus, minus_stack)
    }
}

fn classify(a: [[i64; 2]; 2]) -> Option<(Rank2Kind, bool)> {
    match (a[0][1], a[1][0]) {
        (0, 0) => Some((Rank2Kind::A1xA1, false)),
        (-1, -1) => Some((Rank2Kind::A2, false)),
        (-2, -1) => Some((Rank2Kind::B2, false)),
        (-1, -2) => Some((Rank2Kind::B2, true)),
        _ => None,
    }
}

/// Reference crystal graph of `B(l0 w_a + l1 w_b)` with colors `a`, `b`.
fn reference(kind: Rank2Kind, swapped: bool, lam: [i64; 2]) -> CrystalGraph<Word> {
    // Internal color 0 is the node whose fundamental crystal is the single
    // letter 1; `swapped` says it is the second external node.
    let (l_first, l_second) = if swapped { (lam[1], lam[0]) } else { (lam[0], lam[1]) };
    let ext = |k: usize| if swapped { 1 - k } else { k };
    let mut nodes: BTreeSet<Word> = BTreeSet::new();
    let mut edges_raw: Vec<(Word, Word, Node)> = Vec::new();
    match kind {
        Rank2Kind::A1xA1 => {
            for x in 0..=l_first {
                for y in 0..=l_second {
                    nodes.insert(Word(vec![x as u8, y as u8]));
                    if x < l_first {
                        edges_raw.push((Word(vec![x as u8, y as u8]), Word(vec![x as u8 + 1, y as u8]), ext(0)));
                    }
                    if y < l_second {
                        edges_raw.push((Word(vec![x as u8, y as u8]), Word(vec![x as u8, y as u8 + 1]), ext(1)));
                    }
                }
            }
        }
        _ => {
            let letters = Letters::for_kind(kind);
            let mut start = vec![1u8; l_first as usize];
            for _ in 0..l_second {
                start.extend([2u8, 1u8]);
            }
            let start = Word(start);
            nodes.insert(start.clone());
            let mut queue = VecDeque::from([start]);
            while let Some(w) = queue.pop_front() {
                for k in 0..2 {
                    if let Some(fw) = letters.f_word(k, &w.0) {
                        let fw = Word(fw);
                        edges_raw.push((w.clone(), fw.clone(), ext(k)));
                        if nodes.insert(fw.clone()) {
                            queue.push_back(fw);
                        }
                    }
                }
            }
        }
    }
    let nodes: Vec<Word> = nodes.into_iter().collect();
    let index: HashMap<Word, usize> = nodes.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
    let mut edges: Vec<(usize, usize, Node)> =
        edges_raw.iter().map(|(a, b, i)| (index[a], index[b], *i)).collect();
    edges.sort();
    CrystalGraph { nodes, index, edges, colors: vec![0, 1] }
}

/// Checks that every `{i, j}`-component of `g`, for `i, j` in `nodes`, is
/// isomorphic to the matching irreducible rank-2 crystal. Pairs forming an
/// affine rank-2 diagram are skipped. On failure every violating component
/// is listed, one per line.
pub fn check_regular<C: Crystal>(c: &C, g: &CrystalGraph<C::Elem>, nodes: &[Node]) -> Result<(), String> {
    let d = c.cartan();
    let mut cache: HashMap<(Rank2Kind, bool, [i64; 2]), CrystalGraph<Word>> = HashMap::new();
    let mut failures: Vec<String> = Vec::new();
    for (x, &i) in nodes.iter().enumerate() {
        for &j in &nodes[x + 1..] {
            let sub = [[2, d.matrix[i][j]], [d.matrix[j][i], 2]];
            let Some((kind, swapped)) = classify(sub) else { continue };
            let colors = [i, j];
            for comp in g.components(&colors) {
                let sg = g.subgraph(&comp, &colors);
                let hw = sg.highest_weight_vertices(&colors);
                if hw.len() != 1 {
                    failures.push(format!(
                        "{{{i},{j}}}-component of {} has {} highest weight elements",
                        sg.nodes[0],
                        hw.len()
                    ));
                    continue;
                }
                let top = &sg.nodes[hw[0]];
                let lam = [
                    c.phi(i, top).map_err(|e| e.to_string())?,
                    c.phi(j, top).map_err(|e| e.to_string())?,
                ];
                let reference = cache
                    .entry((kind, swapped, lam))
                    .or_insert_with(|| reference(kind, swapped, lam));
                // Relabel reference colors 0/1 to i/j.
                let relabeled = CrystalGraph {
                    nodes: reference.nodes.clone(),
                    index: reference.index.clone(),
                    edges: reference
                        .edges
                        .iter()
                        .map(|&(a, b, k)| (a, b, colors[k]))
                        .collect(),
                    colors: colors.to_vec(),
                };
                let ref_top = relabeled.highest_weight_vertices(&colors);
                if sg.isomorphism_from(hw[0], &relabeled, ref_top[0]).is_none() {
                    failures.push(format!(
                        "{{{i},{j}}}-component of {top} is not B({}w{i} + {}w{j})",
                        lam[0], lam[1]
                    ));
                }
            }
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures.join("\n"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_dimensions() {
        // Weyl dimension formula values.
        assert_eq!(reference(Rank2Kind::A2, false, [1, 0]).len(), 3);
        assert_eq!(reference(Rank2Kind::A2, false, [0, 1]).len(), 3);
        assert_eq!(reference(Rank2Kind::A2, false, [1, 1]).len(), 8);
        assert_eq!(reference(Rank2Kind::A2, false, [2, 1]).len(), 15);
        assert_eq!(reference(Rank2Kind::B2, false, [1, 0]).len(), 4);
        assert_eq!(reference(Rank2Kind::B2, false, [0, 1]).len(), 5);
        assert_eq!(reference(Rank2Kind::B2, false, [1, 1]).len(), 16);
        assert_eq!(reference(Rank2Kind::B2, false, [0, 2]).len(), 14);
        assert_eq!(reference(Rank2Kind::B2, false, [2, 0]).len(), 10);
        assert_eq!(reference(Rank2Kind::A1xA1, false, [2, 3]).len(), 12);
    }

    #[test]
    fn signature_rule_small_cases() {
        let l = Letters::for_kind(Rank2Kind::A2);
        assert_eq!(l.f_word(0, &[2, 1]), None);
        assert_eq!(l.f_word(0, &[1, 2]), Some(vec![2, 2]));
        assert_eq!(l.f_word(0, &[1, 1]), Some(vec![1, 2]));
    }
}
