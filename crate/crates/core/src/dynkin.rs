//! Dynkin diagram automorphisms: `Aut(X)`, the special automorphisms `Sigma`,
//! the level zero action and the restriction `Aut(X) -> Aut(X_0)`.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cartan::{CartanDatum, ClassicalWeight, Node};
use crate::error::{KrError, Result};
use crate::rational::q;
use crate::weyl::Weyl;

/// A permutation of `I` preserving the Cartan matrix. `perm[i]` is the image
/// of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DynkinAut {
    pub perm: Vec<Node>,
}

impl DynkinAut {
    pub fn identity(rank: usize) -> Self {
        DynkinAut { perm: (0..=rank).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn apply(&self, i: Node) -> Node {
        self.perm[i]
    }

    /// `self o other`.
    pub fn compose(&self, other: &DynkinAut) -> DynkinAut {
        DynkinAut { perm: other.perm.iter().map(|&j| self.perm[j]).collect() }
    }

    pub fn inverse(&self) -> DynkinAut {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        DynkinAut { perm: inv }
    }

    /// Checks `a_{sigma(i) sigma(j)} = a_ij`.
    pub fn preserves(&self, d: &CartanDatum) -> bool {
        d.nodes().all(|i| d.nodes().all(|j| d.matrix[self.perm[i]][self.perm[j]] == d.matrix[i][j]))
    }

    /// Permutation built from disjoint cycles on `0..=rank`.
    pub fn from_cycles(rank: usize, cycles: &[&[Node]]) -> Self {
        let mut perm: Vec<Node> = (0..=rank).collect();
        for c in cycles {
            for k in 0..c.len() {
                perm[c[k]] = c[(k + 1) % c.len()];
            }
        }
        DynkinAut { perm }
    }
}

impl fmt::Display for DynkinAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.perm[start] == start {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut j = self.perm[start];
            while j != start {
                seen[j] = true;
                cyc.push(j);
                j = self.perm[j];
            }
            let s: Vec<String> = cyc.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("({})", s.join(",")));
        }
        if out.is_empty() {
            out.push_str("id");
        }
        write!(f, "{out}")
    }
}

/// All automorphisms of the affine diagram, by backtracking over
/// Cartan-preserving partial permutations. Sorted.
pub fn automorphism_group(d: &CartanDatum) -> Vec<DynkinAut> {
    let n = d.rank() + 1;
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        d: &CartanDatum,
        k: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<DynkinAut>,
    ) {
        let n = perm.len();
        if k == n {
            out.push(DynkinAut { perm: perm.clone() });
            return;
        }
        for img in 0..n {
            if used[img] {
                continue;
            }
            let ok = (0..k).all(|j| {
                d.matrix[img][perm[j]] == d.matrix[k][j] && d.matrix[perm[j]][img] == d.matrix[j][k]
            });
            if ok {
                perm[k] = img;
                used[img] = true;
                rec(d, k + 1, perm, used, out);
                used[img] = false;
            }
        }
        perm[k] = usize::MAX;
    }
    rec(d, 0, &mut perm, &mut used, &mut out);
    out.sort();
    out
}

/// `tau_i`, read off the factorization `t_{-omega_i} = z tau_i`.
pub fn special_automorphism(w: &Weyl, i: Node) -> Result<DynkinAut> {
    let d = &w.cartan;
    d.check_node(i)?;
    if !d.is_special(i) {
        return Err(KrError::NotSpecial(i));
    }
    if i == 0 {
        return Ok(DynkinAut::identity(d.rank()));
    }
    let t = w.translation(&-d.classical_fundamental(i))?;
    let tau = DynkinAut { perm: w.factor_w_sigma(&t)?.tau };
    if tau.apply(i) != 0 || !tau.preserves(d) {
        return Err(KrError::Integrity(format!("tau_{i} = {tau} is not special")));
    }
    Ok(tau)
}

/// `Sigma = {tau_i : i in I^0}`, indexed like `special_nodes`.
pub fn sigma_group(w: &Weyl) -> Result<Vec<DynkinAut>> {
    w.cartan.special_nodes.iter().map(|&i| special_automorphism(w, i)).collect()
}

/// Level zero action on `P_0`: `sigma(omega_r) = omega_{sigma(r)} - a_r^vee omega_{sigma(0)}`.
pub fn level_zero_action(d: &CartanDatum, sigma: &DynkinAut, mu: &ClassicalWeight) -> ClassicalWeight {
    let omega = |i: Node| d.classical_fundamental(i);
    let mut out = ClassicalWeight::zero(d.rank());
    for r in d.classical_nodes() {
        let c = mu.pairing(r);
        if c.is_zero() {
            continue;
        }
        let img = omega(sigma.apply(r)) - omega(sigma.apply(0)).scale(q(d.comarks[r]));
        out = out + img.scale(c);
    }
    out
}

/// `sigma'` on `I \ {0}`: `sigma'(i) = j` iff `sigma(omega_i) in W_0 omega_j`.
/// Entry 0 of the result is 0.
pub fn classical_restriction(w: &Weyl, sigma: &DynkinAut) -> Result<DynkinAut> {
    let d = &w.cartan;
    let mut perm = vec![0; d.rank() + 1];
    for i in d.classical_nodes() {
        let dom = w.dominant_representative(&level_zero_action(d, sigma, &d.classical_fundamental(i)));
        perm[i] = d
            .classical_nodes()
            .find(|&j| dom == d.classical_fundamental(j))
            .ok_or_else(|| KrError::Integrity(format!("{sigma}(omega_{i}) is not a fundamental orbit")))?;
    }
    Ok(DynkinAut { perm })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{AffineType, Family};

    fn weyl(s: &str) -> Weyl {
        Weyl::new(CartanDatum::new(s.parse().unwrap()).unwrap())
    }

    fn expected_aut_order(t: AffineType) -> usize {
        let n = t.rank;
        match t.family {
            Family::A1 if n == 1 => 2,
            Family::A1 => 2 * (n + 1),
            Family::D1 if n == 4 => 24,
            Family::D1 => 8,
            Family::A2Even => 1,
            _ => 2,
        }
    }

    #[test]
    fn automorphism_group_orders() {
        for t in AffineType::all_up_to(6) {
            let d = CartanDatum::new(t).unwrap();
            let g = automorphism_group(&d);
            assert_eq!(g.len(), expected_aut_order(t), "{t}");
            assert!(g.iter().all(|s| s.preserves(&d)));
            for s in &g {
                for i in d.nodes() {
                    assert_eq!(d.marks[s.apply(i)], d.marks[i]);
                    assert_eq!(d.comarks[s.apply(i)], d.comarks[i]);
                }
            }
        }
    }

    #[test]
    fn special_automorphisms_type_a() {
        for n in 1..=6 {
            let w = weyl(&format!("A{n}~1"));
            for i in 0..=n {
                let tau = special_automorphism(&w, i).unwrap();
                let expected: Vec<Node> = (0..=n).map(|j| (j + n + 1 - i) % (n + 1)).collect();
                assert_eq!(tau.perm, expected, "A{n} tau_{i}");
            }
        }
    }

    #[test]
    fn special_automorphisms_type_d() {
        for n in 4..=7 {
            let w = weyl(&format!("D{n}~1"));
            let tau = |i| special_automorphism(&w, i).unwrap();
            let cyc = |c: &[&[Node]]| {
                let mut p = DynkinAut::from_cycles(n, c);
                // Extend to the middle nodes as the unique diagram automorphism.
                let full = automorphism_group(&w.cartan)
                    .into_iter()
                    .find(|s| [0, 1, n - 1, n].iter().all(|&k| s.apply(k) == p.apply(k)))
                    .unwrap();
                p.perm = full.perm;
                p
            };
            assert_eq!(tau(1), cyc(&[&[0, 1], &[n - 1, n]]), "D{n} tau_1");
            if n % 2 == 0 {
                assert_eq!(tau(n - 1), cyc(&[&[0, n - 1], &[1, n]]));
                assert_eq!(tau(n), cyc(&[&[0, n], &[1, n - 1]]));
            } else {
                assert_eq!(tau(n - 1), cyc(&[&[0, n, 1, n - 1]]));
                assert_eq!(tau(n), cyc(&[&[0, n - 1, 1, n]]));
            }
        }
    }

    #[test]
    fn special_automorphisms_other_types() {
        for n in 3..=6 {
            for s in [format!("B{n}~1"), format!("A{}~2", 2 * n - 1)] {
                let w = weyl(&s);
                let t1 = special_automorphism(&w, 1).unwrap();
                assert_eq!((t1.apply(0), t1.apply(1)), (1, 0), "{s}");
                assert!((2..=n).all(|j| t1.apply(j) == j));
            }
        }
        for n in 2..=6 {
            for s in [format!("C{n}~1"), format!("D{}~2", n + 1)] {
                let w = weyl(&s);
                let tn = special_automorphism(&w, n).unwrap();
                assert_eq!(tn.perm, (0..=n).rev().collect::<Vec<_>>(), "{s}");
            }
        }
        let w = weyl("A4~2");
        assert_eq!(sigma_group(&w).unwrap(), vec![DynkinAut::identity(2)]);
        assert!(matches!(special_automorphism(&w, 1), Err(KrError::NotSpecial(1))));
    }

    #[test]
    fn sigma_is_a_group_isomorphic_to_lattice_quotient() {
        for t in AffineType::all_up_to(6) {
            let w = Weyl::new(CartanDatum::new(t).unwrap());
            let d = &w.cartan;
            let sig = sigma_group(&w).unwrap();
            let idx = |s: &DynkinAut| sig.iter().position(|x| x == s);
            for (a, ta) in sig.iter().enumerate() {
                for (b, tb) in sig.iter().enumerate() {
                    let prod = ta.compose(tb);
                    let c = idx(&prod).unwrap_or_else(|| panic!("{t}: Sigma not closed"));
                    // omega_i + omega_j - omega_k in M
                    let (i, j, k) = (d.special_nodes[a], d.special_nodes[b], d.special_nodes[c]);
                    let diff = d.classical_fundamental(i) + d.classical_fundamental(j)
                        - d.classical_fundamental(k);
                    assert!(d.in_translation_lattice(&diff), "{t}: tau_{i} tau_{j} = tau_{k}");
                }
            }
        }
    }

    #[test]
    fn level_zero_action_examples() {
        let w = weyl("A2~1");
        let d = &w.cartan;
        let t1 = special_automorphism(&w, 1).unwrap();
        let img = level_zero_action(d, &t1, &d.classical_fundamental(1));
        assert_eq!(img, ClassicalWeight::from_ints(&[0, -1]));
        let id = DynkinAut::identity(2);
        let mu = ClassicalWeight::from_ints(&[3, -2]);
        assert_eq!(level_zero_action(d, &id, &mu), mu);
    }

    #[test]
    fn level_zero_action_is_a_group_action() {
        for t in AffineType::all_up_to(5) {
            let w = Weyl::new(CartanDatum::new(t).unwrap());
            let d = &w.cartan;
            let g = automorphism_group(d);
            let mu = ClassicalWeight::from_ints(&(1..=d.rank() as i64).collect::<Vec<_>>());
            for a in &g {
                for b in &g {
                    let lhs = level_zero_action(d, &a.compose(b), &mu);
                    let rhs = level_zero_action(d, a, &level_zero_action(d, b, &mu));
                    assert_eq!(lhs, rhs, "{t} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn classical_restriction_examples() {
        for t in AffineType::all_up_to(6) {
            let w = Weyl::new(CartanDatum::new(t).unwrap());
            for tau in sigma_group(&w).unwrap() {
                assert!(classical_restriction(&w, &tau).unwrap().is_identity(), "{t} {tau}");
            }
            let g = automorphism_group(&w.cartan);
            for a in &g {
                for b in &g {
                    let lhs = classical_restriction(&w, &a.compose(b)).unwrap();
                    let rhs = classical_restriction(&w, a)
                        .unwrap()
                        .compose(&classical_restriction(&w, b).unwrap());
                    assert_eq!(lhs, rhs, "{t}");
                }
            }
        }
        for n in 4..=7 {
            let w = weyl(&format!("D{n}~1"));
            let g = automorphism_group(&w.cartan);
            let find = |pairs: &[(Node, Node)]| {
                g.iter().find(|s| pairs.iter().all(|&(a, b)| s.apply(a) == b)).unwrap().clone()
            };
            let flip_ends = DynkinAut::from_cycles(n, &[&[n - 1, n]]);
            let s01 = find(&[(0, 1), (1, 0), (n - 1, n - 1), (n, n)]);
            assert_eq!(classical_restriction(&w, &s01).unwrap(), flip_ends, "D{n}");
            if n > 4 {
                let s = find(&[(0, 0), (1, 1), (n - 1, n), (n, n - 1)]);
                assert_eq!(classical_restriction(&w, &s).unwrap(), flip_ends);
                let flip = find(&[(0, n), (n, 0), (1, n - 1), (n - 1, 1)]);
                let r = classical_restriction(&w, &flip).unwrap();
                if n % 2 == 0 {
                    assert!(r.is_identity());
                } else {
                    assert_eq!(r, flip_ends);
                }
            }
        }
        let w = weyl("D4~1");
        let g = automorphism_group(&w.cartan);
        for (i, j, k) in [(1, 3, 4), (3, 1, 4), (4, 1, 3)] {
            let s = g
                .iter()
                .find(|s| s.apply(0) == i && s.apply(i) == 0 && s.apply(j) == j && s.apply(k) == k)
                .unwrap();
            assert_eq!(classical_restriction(&w, s).unwrap(), DynkinAut::from_cycles(4, &[&[j, k]]));
        }
        let w = weyl("A3~1");
        for s in automorphism_group(&w.cartan) {
            // orientation reversing iff s(1) = s(0) - 1 mod 4
            let reverses = (s.apply(0) + 3) % 4 == s.apply(1);
            let r = classical_restriction(&w, &s).unwrap();
            assert_eq!(!r.is_identity(), reverses, "{s}");
        }
    }

    #[test]
    fn display_cycles() {
        assert_eq!(DynkinAut::from_cycles(4, &[&[0, 1], &[3, 4]]).to_string(), "(0,1)(3,4)");
        assert_eq!(DynkinAut::identity(3).to_string(), "id");
    }
}
