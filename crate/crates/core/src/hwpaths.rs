//! Lowering-operator monomials from `u` to the classical highest weight
//! vectors of `B^{r,c_r s}`, and their execution on implemented crystals.

use std::fmt;

use serde::Serialize;

use crate::cartan::{AffineType, ClassicalWeight, Node};
use crate::crystal::Crystal;
use crate::error::{KrError, Result};
use crate::kr::{KrCrystal, KrElem};
use crate::report::VerificationReport;

/// Groups of `f_i^m`, displayed left to right; the rightmost factor acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OperatorMonomial {
    pub groups: Vec<Vec<(Node, usize)>>,
}

impl OperatorMonomial {
    pub fn is_empty(&self) -> bool {
        self.groups.iter().all(|g| g.is_empty())
    }

    /// All factors in display order.
    pub fn flat(&self) -> Vec<(Node, usize)> {
        self.groups.iter().flatten().copied().collect()
    }

    pub fn apply<C: Crystal>(&self, c: &C, b: &C::Elem) -> Result<Option<C::Elem>> {
        let mut cur = b.clone();
        for &(i, m) in self.flat().iter().rev() {
            match c.f_power(i, m, &cur)? {
                Some(x) => cur = x,
                None => return Ok(None),
            }
        }
        Ok(Some(cur))
    }

    fn push_group(&mut self, g: Vec<(Node, usize)>) {
        let g: Vec<(Node, usize)> = g.into_iter().filter(|&(_, m)| m > 0).collect();
        if !g.is_empty() {
            self.groups.push(g);
        }
    }
}

fn subscript(n: usize) -> String {
    n.to_string().chars().map(|c| char::from_u32(0x2080 + c.to_digit(10).unwrap()).unwrap()).collect()
}

fn superscript(n: usize) -> String {
    const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| SUP[c.to_digit(10).unwrap() as usize]).collect()
}

impl fmt::Display for OperatorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for g in &self.groups {
            write!(f, "(")?;
            for &(i, m) in g {
                write!(f, "f{}", subscript(i))?;
                if m > 1 {
                    write!(f, "{}", superscript(m))?;
                }
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl Serialize for OperatorMonomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.flat().serialize(s)
    }
}

fn part(lambda: &[usize], i: usize) -> usize {
    lambda.get(i - 1).copied().unwrap_or(0)
}

fn check_in_rectangle(r: usize, s: usize, lambda: &[usize]) -> Result<()> {
    let bad = |reason: String| Err(KrError::Inadmissible { partition: lambda.to_vec(), reason });
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return bad("not weakly decreasing".into());
    }
    let len = lambda.iter().filter(|&&x| x > 0).count();
    if len > r || part(lambda, 1) > s {
        return bad(format!("not contained in the {r}x{s} rectangle"));
    }
    Ok(())
}

/// `lambda` arises from the `r x s` rectangle by removing vertical dominoes.
pub fn check_bd_admissible(r: usize, s: usize, lambda: &[usize]) -> Result<()> {
    check_in_rectangle(r, s, lambda)?;
    let t = r % 2;
    let ok = if t == 1 {
        part(lambda, 1) == s && (1..=r / 2).all(|i| part(lambda, 2 * i) == part(lambda, 2 * i + 1))
    } else {
        (1..=r / 2).all(|i| part(lambda, 2 * i - 1) == part(lambda, 2 * i))
    };
    if ok {
        Ok(())
    } else {
        Err(KrError::Inadmissible {
            partition: lambda.to_vec(),
            reason: format!("not obtained from the {r}x{s} rectangle by removing vertical dominoes"),
        })
    }
}

/// Monomial for types `B_n^(1)`, `D_n^(1)`, `A_{2n-1}^(2)`.
pub fn path_bd_family(r: usize, s: usize, lambda: &[usize]) -> Result<OperatorMonomial> {
    check_bd_admissible(r, s, lambda)?;
    let t = r % 2;
    let mut out = OperatorMonomial::default();
    for i in (1..=(r - t) / 2).rev() {
        let m = part(lambda, 2 * i);
        let mut g = vec![(0, m)];
        g.extend((2..=2 * i - 1 + t).map(|j| (j, m)));
        g.extend((1..=2 * i - 2 + t).map(|j| (j, m)));
        out.push_group(g);
    }
    Ok(out)
}

/// Monomial for types `C_n^(1)`, `A_{2n}^(2)`, `D_{n+1}^(2)`, reaching
/// `u_{c_r lambda}`.
pub fn path_c_family(r: usize, s: usize, lambda: &[usize], c_r: usize) -> Result<OperatorMonomial> {
    check_in_rectangle(r, s, lambda)?;
    let mut out = OperatorMonomial::default();
    for i in (1..=r).rev() {
        let m = c_r * part(lambda, i);
        out.push_group((0..i).map(|j| (j, m)).collect());
    }
    Ok(out)
}

/// The same factors with the product taken as `i` increases and `f_0` acting
/// first inside each factor.
pub fn path_c_family_mirrored(r: usize, s: usize, lambda: &[usize], c_r: usize) -> Result<OperatorMonomial> {
    check_in_rectangle(r, s, lambda)?;
    let mut out = OperatorMonomial::default();
    for i in 1..=r {
        let m = c_r * part(lambda, i);
        out.push_group((0..i).rev().map(|j| (j, m)).collect());
    }
    Ok(out)
}

/// Partitions in the `r x s` rectangle, largest first.
pub fn partitions_in_rectangle(r: usize, s: usize) -> Vec<Vec<usize>> {
    fn rec(r: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            let mut p = cur.clone();
            while p.last() == Some(&0) {
                p.pop();
            }
            out.push(p);
            return;
        }
        for x in (0..=max).rev() {
            cur.push(x);
            rec(r, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, s, &mut Vec::new(), &mut out);
    out
}

/// Classical highest weights of `B^{r,c_r s}` (as partitions, before scaling
/// by `c_r`) together with their monomials.
pub fn all_paths(t: AffineType, r: usize, s: usize) -> Result<Vec<(Vec<usize>, OperatorMonomial)>> {
    let d = crate::cartan::CartanDatum::new(t)?;
    d.check_node(r)?;
    if r == 0 {
        return Err(KrError::BadNode { node: 0, max: d.rank() });
    }
    if d.is_special(r) {
        return Ok(vec![(vec![s; r], OperatorMonomial::default())]);
    }
    let fam = t.family;
    let mut out = Vec::new();
    for lambda in partitions_in_rectangle(r, s) {
        if fam.is_bd_family() {
            if let Ok(m) = path_bd_family(r, s, &lambda) {
                out.push((lambda, m));
            }
        } else if fam.is_c_family() {
            let m = path_c_family(r, s, &lambda, d.c[r] as usize)?;
            out.push((lambda, m));
        }
    }
    Ok(out)
}

/// `sum lambda_i epsilon_i` in the basis of fundamental weights.
pub fn partition_weight(rank: usize, lambda: &[usize]) -> ClassicalWeight {
    let c: Vec<i64> = (1..=rank).map(|i| part(lambda, i) as i64 - part(lambda, i + 1) as i64).collect();
    ClassicalWeight::from_ints(&c)
}

fn run_paths(
    kr: &KrCrystal,
    u: &KrElem,
    paths: &[(Vec<usize>, OperatorMonomial)],
    hw: &[(KrElem, ClassicalWeight)],
) -> (Vec<(String, std::result::Result<(), String>)>, std::result::Result<(), String>) {
    let d = kr.cartan();
    let classical: Vec<Node> = d.classical_nodes().collect();
    let c_r = d.c[kr.r()] as usize;
    let mut endpoints: Vec<KrElem> = Vec::new();
    let mut results = Vec::new();
    for (lambda, mono) in paths {
        let res = (|| -> std::result::Result<KrElem, String> {
            let b = mono.apply(kr, u).map_err(|e| e.to_string())?.ok_or("an operator in the path is undefined")?;
            if !kr.is_highest(&b, &classical).map_err(|e| e.to_string())? {
                return Err(format!("endpoint {b} is not classically highest"));
            }
            let wt = kr.classical_weight(&b).map_err(|e| e.to_string())?;
            let want = if d.is_special(kr.r()) {
                kr.top_weight()
            } else {
                let scaled: Vec<usize> = lambda.iter().map(|x| c_r * x).collect();
                partition_weight(d.rank(), &scaled)
            };
            if wt != want {
                return Err(format!("endpoint {b} has weight {wt}, expected {want}"));
            }
            Ok(b)
        })();
        results.push((format!("path {mono} to lambda = {lambda:?}"), res.as_ref().map(|_| ()).map_err(|e| e.clone())));
        if let Ok(b) = res {
            endpoints.push(b);
        }
    }
    endpoints.sort();
    endpoints.dedup();
    let exhaust = if endpoints.len() == hw.len() && endpoints.len() == paths.len() {
        Ok(())
    } else {
        Err(format!("{} distinct endpoints, {} classical components", endpoints.len(), hw.len()))
    };
    (results, exhaust)
}

/// Executes every path on an implemented crystal. For the `C_n^(1)`-like
/// families the mirrored product order is run as well and reported under
/// its own invariant.
pub fn verify_paths(kr: &KrCrystal, cap: usize) -> Result<VerificationReport> {
    let label = kr.label();
    let mut rep = VerificationReport::new("paths");
    let d = kr.cartan();
    let g = kr.graph(cap)?;
    let u = kr.find_u(&g.nodes)?;
    let hw = kr.classical_highest(&g)?;
    let paths = all_paths(kr.affine_type(), kr.r(), kr.s())?;
    let (results, exhaust) = run_paths(kr, &u, &paths, &hw);
    for (name, res) in results {
        rep.check(format!("{label}: {name}"), "hwpaths::endpoint", res);
    }
    rep.check(format!("{label}: paths exhaust the classical components"), "hwpaths::exhaustive", exhaust);
    if !d.is_special(kr.r()) && kr.affine_type().family.is_c_family() {
        let c_r = d.c[kr.r()] as usize;
        let mirrored = partitions_in_rectangle(kr.r(), kr.s())
            .into_iter()
            .map(|l| {
                let m = path_c_family_mirrored(kr.r(), kr.s(), &l, c_r)?;
                Ok((l, m))
            })
            .collect::<Result<Vec<_>>>()?;
        let (results, exhaust) = run_paths(kr, &u, &mirrored, &hw);
        let bad: Vec<String> = results.into_iter().filter_map(|(n, r)| r.err().map(|e| format!("{n}: {e}"))).collect();
        let res = if bad.is_empty() { exhaust } else { Err(bad.join("; ")) };
        rep.check(format!("{label}: mirrored order reaches every classical highest weight vector"), "hwpaths::mirrored", res);
    }
    Ok(rep.finish())
}
