//! Verification suites: each returns a [`VerificationReport`] and is shared by
//! the `verify` command and the acceptance test.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::cartan::{AffineType, CartanDatum, Family, Node};
use crate::crystal::rank2::check_regular;
use crate::crystal::{check_axioms, Crystal};
use crate::demazure::{compare_characters, verify_closure};
use crate::dynkin::{automorphism_group, classical_restriction, sigma_group, special_automorphism, DynkinAut};
use crate::error::{KrError, Result};
use crate::hwpaths::verify_paths;
use crate::kr::{KrCrystal, KrElem};
use crate::report::{Status, VerificationReport};
use crate::rmatrix::TwoFold;
use crate::virtual_a2::VirtualA2;
use crate::weyl::Weyl;

pub const SUITES: [&str; 7] = ["wtilde", "sigma", "demazure", "characters", "paths", "rmatrix", "axioms"];

/// Explicit coset words against the computed minimal coset representative of
/// the `W` part of `t_{-c_r omega_r}`, every nonspecial `r`.
pub fn verify_wtilde(max_rank: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("wtilde");
    for t in AffineType::all_up_to(max_rank) {
        let w = Weyl::new(CartanDatum::new(t)?);
        for r in w.cartan.classical_nodes() {
            if w.cartan.is_special(r) {
                continue;
            }
            let word = w.wtilde_word(r)?;
            let f = w.factor_w_sigma(&w.kr_translation(r)?)?;
            let rep_word = w.min_coset_rep_left_w0(&w.word(&f.z_word))?;
            let check = if w.word(&word) != w.word(&rep_word) {
                Err(format!("{word:?} differs from {rep_word:?}"))
            } else if word.len() != rep_word.len() {
                Err(format!("{word:?} is not reduced ({} vs {})", word.len(), rep_word.len()))
            } else {
                Ok(())
            };
            rep.check(format!("{t} r={r}"), "weyl::wtilde", check);
        }
    }
    Ok(rep.finish())
}

fn full_aut(d: &CartanDatum, pairs: &[(Node, Node)]) -> Option<DynkinAut> {
    automorphism_group(d).into_iter().find(|s| pairs.iter().all(|&(a, b)| s.apply(a) == b))
}

fn order(s: &DynkinAut) -> usize {
    let mut k = 1;
    let mut p = s.clone();
    while !p.is_identity() {
        p = p.compose(s);
        k += 1;
    }
    k
}

fn expected_special(t: AffineType) -> Vec<Node> {
    let n = t.rank;
    match t.family {
        Family::A1 => (0..=n).collect(),
        Family::B1 | Family::A2Odd => vec![0, 1],
        Family::C1 | Family::D2 => vec![0, n],
        Family::D1 => vec![0, 1, n - 1, n],
        Family::A2Even => vec![0],
    }
}

/// Expected `tau_i` as a list of node images on the special nodes and the
/// end nodes (the rest follows).
fn expected_tau(t: AffineType, i: Node) -> Vec<(Node, Node)> {
    let n = t.rank;
    match t.family {
        Family::A1 => (0..=n).map(|j| (j, (j + n + 1 - i) % (n + 1))).collect(),
        Family::B1 | Family::A2Odd => vec![(0, 1), (1, 0)],
        Family::C1 | Family::D2 => (0..=n).map(|j| (j, n - j)).collect(),
        Family::D1 => {
            let cyc: Vec<Vec<Node>> = if i == 1 {
                vec![vec![0, 1], vec![n - 1, n]]
            } else if n % 2 == 0 {
                if i == n - 1 { vec![vec![0, n - 1], vec![1, n]] } else { vec![vec![0, n], vec![1, n - 1]] }
            } else if i == n - 1 {
                vec![vec![0, n, 1, n - 1]]
            } else {
                vec![vec![0, n - 1, 1, n]]
            };
            let mut out = Vec::new();
            for c in &cyc {
                for k in 0..c.len() {
                    out.push((c[k], c[(k + 1) % c.len()]));
                }
            }
            out
        }
        Family::A2Even => vec![],
    }
}

/// `I^0`, the automorphisms `tau_i`, the structure of `Sigma`, and the
/// classical restriction `Aut(X) -> Aut(X_0)`.
pub fn verify_sigma(max_rank: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("sigma");
    for t in AffineType::all_up_to(max_rank) {
        let d = CartanDatum::new(t)?;
        let w = Weyl::new(d.clone());
        let n = t.rank;
        let special = expected_special(t);
        rep.check(
            format!("{t} I0"),
            "cartan::special_nodes",
            if d.special_nodes == special { Ok(()) } else { Err(format!("{:?} vs {special:?}", d.special_nodes)) },
        );
        for &i in &special {
            let tau = special_automorphism(&w, i)?;
            let pairs = if i == 0 { vec![] } else { expected_tau(t, i) };
            let bad: Vec<_> = pairs.iter().filter(|&&(a, b)| tau.apply(a) != b).collect();
            rep.check(
                format!("{t} tau_{i}"),
                "dynkin::special_automorphism",
                if bad.is_empty() { Ok(()) } else { Err(format!("{tau} disagrees at {bad:?}")) },
            );
        }
        let sig = sigma_group(&w)?;
        let orders: Vec<usize> = sig.iter().map(order).collect();
        let structure = match t.family {
            Family::A1 => orders.contains(&(n + 1)),
            Family::D1 if n % 2 == 0 => orders.iter().all(|&k| k <= 2),
            Family::D1 => orders.contains(&4),
            _ => true,
        };
        rep.check(
            format!("{t} Sigma"),
            "dynkin::sigma_group",
            if sig.len() == special.len() && structure {
                Ok(())
            } else {
                Err(format!("order {} with element orders {orders:?}", sig.len()))
            },
        );
        let trivial = sig.iter().map(|s| classical_restriction(&w, s)).collect::<Result<Vec<_>>>()?;
        rep.check(
            format!("{t} Sigma -> Aut(X0) trivial"),
            "dynkin::classical_restriction",
            if trivial.iter().all(DynkinAut::is_identity) { Ok(()) } else { Err("nontrivial image".to_string()) },
        );
        autcl_cases(&mut rep, t, &w)?;
    }
    Ok(rep.finish())
}

fn autcl_cases(rep: &mut VerificationReport, t: AffineType, w: &Weyl) -> Result<()> {
    let d = &w.cartan;
    let n = t.rank;
    let inv = "dynkin::classical_restriction";
    let mut expect = |name: String, s: Option<DynkinAut>, want: DynkinAut| -> Result<()> {
        let s = s.ok_or_else(|| KrError::Integrity(format!("{name}: automorphism missing")))?;
        let got = classical_restriction(w, &s)?;
        rep.check(name, inv, if got == want { Ok(()) } else { Err(format!("{got} vs {want}")) });
        Ok(())
    };
    match t.family {
        Family::A1 => {
            for s in automorphism_group(d) {
                let reverses = n >= 2 && (s.apply(0) + n) % (n + 1) == s.apply(1);
                let want = if reverses { DynkinAut { perm: (0..=n).map(|j| (n + 1 - j) % (n + 1)).collect() } } else { DynkinAut::identity(n) };
                expect(format!("{t} {s}'"), Some(s), want)?;
            }
        }
        Family::D1 if n > 4 => {
            let flip = DynkinAut::from_cycles(n, &[&[n - 1, n]]);
            expect(format!("{t} (0,1)'"), full_aut(d, &[(0, 1), (1, 0), (n - 1, n - 1), (n, n)]), flip.clone())?;
            expect(format!("{t} ({},{})'", n - 1, n), full_aut(d, &[(0, 0), (1, 1), (n - 1, n), (n, n - 1)]), flip.clone())?;
            let want = if n % 2 == 0 { DynkinAut::identity(n) } else { flip };
            expect(format!("{t} (0,{n})(1,{})'", n - 1), full_aut(d, &[(0, n), (n, 0), (1, n - 1), (n - 1, 1)]), want)?;
        }
        Family::D1 => {
            for (i, j, k) in [(1, 3, 4), (3, 1, 4), (4, 1, 3)] {
                let s = full_aut(d, &[(0, i), (i, 0), (j, j), (k, k)]);
                expect(format!("{t} (0,{i})'"), s, DynkinAut::from_cycles(4, &[&[j, k]]))?;
            }
        }
        _ => {}
    }
    Ok(())
}

/// Uniqueness of `u` with `epsilon = s Lambda_0`, `phi = s Lambda_{tau(0)}`.
pub fn check_u(kr: &KrCrystal, elems: &[KrElem]) -> Result<std::result::Result<(), String>> {
    let found = kr.find_u_candidates(elems)?;
    Ok(if found.len() == 1 {
        Ok(())
    } else {
        Err(format!("{} candidates: {}", found.len(), found.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(", ")))
    })
}

/// Uniqueness of `u`, the Demazure closure checks and the classical closure.
pub fn verify_demazure(kr: &KrCrystal, cap: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("demazure");
    let g = kr.graph(cap)?;
    rep.check(format!("{}: u unique", kr.label()), "kr::find_u", check_u(kr, &g.nodes)?);
    rep.merge(verify_closure(kr, cap)?);
    Ok(rep.finish())
}

fn runs(vals: impl IntoIterator<Item = usize>, s: usize) -> String {
    vals.into_iter().map(|v| format!("{v}^{s}")).collect::<Vec<_>>().join(" ")
}

/// Row words of `b`, `y` and `u_{s omega_{k+1}}` as displayed for
/// `A_{2n}^(2)` `B^{r,s}`.
pub fn y_rows(n: usize, r: usize, s: usize, k: usize) -> [String; 3] {
    let right = runs((1..=r).rev(), s);
    let b = runs(((r + 1)..=(2 * n - k)).rev().chain((1..=k).rev()), s);
    let y = runs(
        std::iter::once(2 * n)
            .filter(|_| k > 0)
            .chain(((r + 1)..=(2 * n - k - 1 + usize::from(k == 0))).rev())
            .chain((2..=k + 1).rev()),
        s,
    );
    let target = runs(((r + 1)..=(2 * n - k - 1)).rev().chain((1..=k + 1).rev()), s);
    [b, y, target].map(|x| format!("{x} ⊗ {right}"))
}

/// The three tableau identities for every admissible `k`.
pub fn verify_y_rows(n: usize, r: usize, s: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("demazure");
    let v = VirtualA2::new(n, r, s)?;
    for k in 0..r {
        let ly = v.y_witness(k)?;
        let [b, y, target] = y_rows(n, r, s, k);
        let got_f0 = ly.f0s_y.as_ref().map(|x| x.to_string()).unwrap_or_else(|| "undefined".into());
        let name = |what: &str| format!("A{}~2 B^{{{r},{s}}} k={k}: {what}", 2 * n);
        let inv = "virtual_a2::y_witness";
        let same = |got: String, want: &str| if got == want { Ok(()) } else { Err(format!("{got} vs {want}")) };
        rep.check(name("v(b)"), inv, same(ly.b.to_string(), &b));
        rep.check(name("v(y)"), inv, same(ly.y.to_string(), &y));
        rep.check(name("v(f0^s y)"), inv, same(got_f0, &target));
    }
    Ok(rep.finish())
}

/// Classical projection of the Demazure character against the weight multiset.
pub fn verify_characters(kr: &KrCrystal, cap: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("characters");
    let r = compare_characters(kr, cap)?.map(|_| ());
    rep.check(format!("{}: character", kr.label()), "demazure::character", r);
    Ok(rep.finish())
}

/// Axioms, regularity and the convex hull property.
pub fn verify_axioms(kr: &KrCrystal, cap: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("axioms");
    let g = kr.graph(cap)?;
    let nodes: Vec<Node> = kr.cartan().nodes().collect();
    rep.check(format!("{}: axioms", kr.label()), "crystal::axioms", check_axioms(kr, &g.nodes, &nodes));
    rep.check(format!("{}: regular", kr.label()), "crystal::regular", check_regular(kr, &g, &nodes));
    rep.check(format!("{}: convex hull", kr.label()), "kr::convex_hull", kr.check_convex_hull(&g.nodes));
    let conn = g.components(&nodes).len();
    rep.check(
        format!("{}: connected", kr.label()),
        "kr::connected",
        if conn == 1 { Ok(()) } else { Err(format!("{conn} components")) },
    );
    Ok(rep.finish())
}

pub fn verify_paths_suite(kr: &KrCrystal, cap: usize) -> Result<VerificationReport> {
    verify_paths(kr, cap)
}

/// Connectedness of `B_1 ⊗ B_2`, recipe against oracle, and `R_21 R_12 = id`.
/// With `sample = Some((n, seed))` the recipe is run on `n` elements drawn
/// with the given seed instead of on all of them.
pub fn verify_rmatrix(b1: &KrCrystal, b2: &KrCrystal, cap: usize, sample: Option<(usize, u64)>) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("rmatrix");
    let t12 = TwoFold::new(b1.clone(), b2.clone(), cap)?;
    let t21 = TwoFold::new(b2.clone(), b1.clone(), cap)?;
    let label = t12.label();
    rep.check(
        format!("{label}: connected"),
        "rmatrix::connected",
        if t12.check_connected()? { Ok(()) } else { Err("more than one component".to_string()) },
    );
    let oracle = match t12.oracle_r() {
        Ok(o) => o,
        Err(e) => {
            rep.push(format!("{label}: oracle"), "rmatrix::oracle", Status::Fail, e.to_string());
            return Ok(rep.finish());
        }
    };
    let mut elems = t12.elements();
    if let Some((n, seed)) = sample {
        let mut rng = StdRng::seed_from_u64(seed);
        elems = elems.choose_multiple(&mut rng, n).cloned().collect();
    }
    let mut mismatch = Vec::new();
    for b in &elems {
        match t12.combinatorial_r(b) {
            Ok((r, _, _)) if r == oracle.map[b] => {}
            Ok((r, _, _)) => mismatch.push(format!("R({b}) = {r}, oracle {}", oracle.map[b])),
            Err(e) => mismatch.push(format!("R({b}): {e}")),
        }
    }
    rep.check(
        format!("{label}: recipe = oracle on {} of {} elements", elems.len(), t12.len()),
        "rmatrix::recipe",
        if mismatch.is_empty() { Ok(()) } else { Err(mismatch.into_iter().take(5).collect::<Vec<_>>().join("; ")) },
    );
    let back = t21.oracle_r()?;
    let bad = oracle.map.iter().filter(|(x, y)| back.map.get(*y) != Some(*x)).count();
    rep.check(
        format!("{label}: R21 R12 = id"),
        "rmatrix::involution",
        if bad == 0 { Ok(()) } else { Err(format!("{bad} elements not fixed")) },
    );
    Ok(rep.finish())
}

/// The twofold products in scope: type A with `n <= max_a`, `s_i <= max_sa`,
/// and `A_{2n}^(2)` with `n <= max_v`, `s_i <= max_sv`.
pub fn rmatrix_instances(max_a: usize, max_sa: usize, max_v: usize, max_sv: usize) -> Vec<(AffineType, (usize, usize), (usize, usize))> {
    let singles = crate::kr::scan_instances(max_a, max_sa, max_v, max_sv);
    let mut out = Vec::new();
    for &(t1, r1, s1) in &singles {
        for &(t2, r2, s2) in &singles {
            if t1 == t2 {
                out.push((t1, (r1, s1), (r2, s2)));
            }
        }
    }
    out
}
