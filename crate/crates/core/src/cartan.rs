//! Affine Cartan data in the Kac labeling and exact arithmetic on the affine
//! weight lattice `P = sum Z Lambda_i + Z delta/a_0`.
//!
//! Weights are stored in the basis `Lambda_0, ..., Lambda_n, delta/a_0`, so the
//! null root `delta` has last coordinate `a_0`. Node 0 is always the affine
//! node.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{KrError, Result};
use crate::rational::{from_wire, invert, mat_vec, q, to_wire, Q};

pub type Node = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `A_n^(1)`
    A1,
    /// `B_n^(1)`
    B1,
    /// `C_n^(1)`
    C1,
    /// `D_n^(1)`
    D1,
    /// `A_{2n-1}^(2)`
    A2Odd,
    /// `A_{2n}^(2)`
    A2Even,
    /// `D_{n+1}^(2)`
    D2,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A1,
        Family::B1,
        Family::C1,
        Family::D1,
        Family::A2Odd,
        Family::A2Even,
        Family::D2,
    ];

    pub fn min_rank(self) -> usize {
        match self {
            Family::A1 | Family::A2Even => 1,
            Family::C1 | Family::D2 => 2,
            Family::B1 | Family::A2Odd => 3,
            Family::D1 => 4,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Family::A1 => "A_n^(1)",
            Family::B1 => "B_n^(1)",
            Family::C1 => "C_n^(1)",
            Family::D1 => "D_n^(1)",
            Family::A2Odd => "A_{2n-1}^(2)",
            Family::A2Even => "A_{2n}^(2)",
            Family::D2 => "D_{n+1}^(2)",
        }
    }

    /// Families whose nonspecial KR crystals follow the "vertical domino"
    /// branching (`B_n^(1)`, `D_n^(1)`, `A_{2n-1}^(2)`).
    pub fn is_bd_family(self) -> bool {
        matches!(self, Family::B1 | Family::D1 | Family::A2Odd)
    }

    /// Families following the "c_r lambda, lambda in r x s" branching
    /// (`C_n^(1)`, `A_{2n}^(2)`, `D_{n+1}^(2)`).
    pub fn is_c_family(self) -> bool {
        matches!(self, Family::C1 | Family::A2Even | Family::D2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineType {
    pub family: Family,
    pub rank: usize,
}

impl AffineType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank < family.min_rank() {
            return Err(KrError::RankOutOfRange {
                family: family.name(),
                rank,
                min: family.min_rank(),
            });
        }
        Ok(AffineType { family, rank })
    }

    /// Every supported type with `min_rank <= n <= max_rank`.
    pub fn all_up_to(max_rank: usize) -> Vec<AffineType> {
        Family::ALL
            .iter()
            .flat_map(|&f| (f.min_rank()..=max_rank).map(move |n| AffineType { family: f, rank: n }))
            .collect()
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.rank;
        match self.family {
            Family::A1 => write!(f, "A{n}~1"),
            Family::B1 => write!(f, "B{n}~1"),
            Family::C1 => write!(f, "C{n}~1"),
            Family::D1 => write!(f, "D{n}~1"),
            Family::A2Odd => write!(f, "A{}~2", 2 * n - 1),
            Family::A2Even => write!(f, "A{}~2", 2 * n),
            Family::D2 => write!(f, "D{}~2", n + 1),
        }
    }
}

impl FromStr for AffineType {
    type Err = KrError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || KrError::ParseType(s.to_string());
        let (head, twist) = s.trim().split_once('~').ok_or_else(bad)?;
        let mut chars = head.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let sub: usize = chars.as_str().parse().map_err(|_| bad())?;
        let twist: u32 = twist.parse().map_err(|_| bad())?;
        let (family, rank) = match (letter, twist) {
            ('A', 1) => (Family::A1, sub),
            ('B', 1) => (Family::B1, sub),
            ('C', 1) => (Family::C1, sub),
            ('D', 1) => (Family::D1, sub),
            ('A', 2) if sub % 2 == 1 => (Family::A2Odd, (sub + 1) / 2),
            ('A', 2) => (Family::A2Even, sub / 2),
            ('D', 2) if sub >= 1 => (Family::D2, sub - 1),
            _ => return Err(bad()),
        };
        AffineType::new(family, rank)
    }
}

/// Complete Cartan data for one affine type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    pub affine_type: AffineType,
    /// `a[i][j] = <alpha_i^vee, alpha_j>`.
    pub matrix: Vec<Vec<i64>>,
    pub marks: Vec<i64>,
    pub comarks: Vec<i64>,
    /// `c_i = max(1, a_i / a_i^vee)`; entry 0 is unused and set to 1.
    pub c: Vec<i64>,
    pub special_nodes: Vec<Node>,
    /// Inverse of the classical Cartan matrix `(a_ij)_{i,j >= 1}`.
    pub classical_cartan_inverse: Vec<Vec<Q>>,
}

fn chain(n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n + 1]; n + 1];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    a
}

fn bond(a: &mut [Vec<i64>], i: usize, j: usize) {
    a[i][j] = -1;
    a[j][i] = -1;
}

/// A double bond with `a[i][j] = -2`, i.e. `alpha_j` is the longer root.
fn double_bond(a: &mut [Vec<i64>], i: usize, j: usize) {
    a[i][j] = -2;
    a[j][i] = -1;
}

impl CartanDatum {
    pub fn new(t: AffineType) -> Result<Self> {
        let t = AffineType::new(t.family, t.rank)?;
        let n = t.rank;
        let mut a = chain(n);
        let (marks, comarks, special): (Vec<i64>, Vec<i64>, Vec<Node>) = match t.family {
            Family::A1 => {
                if n == 1 {
                    a[0][1] = -2;
                    a[1][0] = -2;
                } else {
                    for i in 0..=n {
                        bond(&mut a, i, (i + 1) % (n + 1));
                    }
                }
                (vec![1; n + 1], vec![1; n + 1], (0..=n).collect())
            }
            Family::B1 => {
                bond(&mut a, 0, 2);
                for i in 1..n - 1 {
                    bond(&mut a, i, i + 1);
                }
                double_bond(&mut a, n, n - 1);
                let mut marks = vec![2; n + 1];
                marks[0] = 1;
                marks[1] = 1;
                let mut comarks = marks.clone();
                comarks[n] = 1;
                (marks, comarks, vec![0, 1])
            }
            Family::C1 => {
                double_bond(&mut a, 1, 0);
                for i in 1..n - 1 {
                    bond(&mut a, i, i + 1);
                }
                double_bond(&mut a, n - 1, n);
                let mut marks = vec![2; n + 1];
                marks[0] = 1;
                marks[n] = 1;
                (marks, vec![1; n + 1], vec![0, n])
            }
            Family::D1 => {
                bond(&mut a, 0, 2);
                for i in 1..n - 2 {
                    bond(&mut a, i, i + 1);
                }
                bond(&mut a, n - 2, n - 1);
                bond(&mut a, n - 2, n);
                let mut marks = vec![2; n + 1];
                for i in [0, 1, n - 1, n] {
                    marks[i] = 1;
                }
                (marks.clone(), marks, vec![0, 1, n - 1, n])
            }
            Family::A2Odd => {
                bond(&mut a, 0, 2);
                for i in 1..n - 1 {
                    bond(&mut a, i, i + 1);
                }
                double_bond(&mut a, n - 1, n);
                let mut marks = vec![2; n + 1];
                marks[0] = 1;
                marks[1] = 1;
                marks[n] = 1;
                let mut comarks = vec![2; n + 1];
                comarks[0] = 1;
                comarks[1] = 1;
                (marks, comarks, vec![0, 1])
            }
            Family::A2Even => {
                if n == 1 {
                    a[0][1] = -4;
                    a[1][0] = -1;
                } else {
                    double_bond(&mut a, 0, 1);
                    for i in 1..n - 1 {
                        bond(&mut a, i, i + 1);
                    }
                    double_bond(&mut a, n - 1, n);
                }
                let mut marks = vec![2; n + 1];
                marks[n] = 1;
                let mut comarks = vec![2; n + 1];
                comarks[0] = 1;
                (marks, comarks, vec![0])
            }
            Family::D2 => {
                double_bond(&mut a, 0, 1);
                for i in 1..n - 1 {
                    bond(&mut a, i, i + 1);
                }
                double_bond(&mut a, n, n - 1);
                let mut comarks = vec![2; n + 1];
                comarks[0] = 1;
                comarks[n] = 1;
                (vec![1; n + 1], comarks, vec![0, n])
            }
        };
        let c = (0..=n)
            .map(|i| if i == 0 { 1 } else { (marks[i] / comarks[i]).max(1) })
            .collect();
        let classical: Vec<Vec<Q>> = (1..=n)
            .map(|i| (1..=n).map(|j| q(a[i][j])).collect())
            .collect();
        let classical_cartan_inverse =
            invert(&classical).expect("classical Cartan matrices are invertible");
        Ok(CartanDatum {
            affine_type: t,
            matrix: a,
            marks,
            comarks,
            c,
            special_nodes: special,
            classical_cartan_inverse,
        })
    }

    pub fn rank(&self) -> usize {
        self.affine_type.rank
    }

    pub fn nodes(&self) -> std::ops::RangeInclusive<Node> {
        0..=self.rank()
    }

    pub fn classical_nodes(&self) -> std::ops::RangeInclusive<Node> {
        1..=self.rank()
    }

    pub fn a0(&self) -> i64 {
        self.marks[0]
    }

    pub fn is_special(&self, i: Node) -> bool {
        self.special_nodes.contains(&i)
    }

    pub fn check_node(&self, i: Node) -> Result<()> {
        if i > self.rank() {
            Err(KrError::BadNode { node: i, max: self.rank() })
        } else {
            Ok(())
        }
    }

    pub fn zero_weight(&self) -> AffineWeight {
        AffineWeight::zero(self.rank())
    }

    /// `Lambda_i`.
    pub fn fundamental(&self, i: Node) -> AffineWeight {
        let mut w = self.zero_weight();
        w.lambda[i] = Q::one();
        w
    }

    /// `delta = sum_i a_i alpha_i`, stored as `a_0 * (delta/a_0)`.
    pub fn null_root(&self) -> AffineWeight {
        let mut w = self.zero_weight();
        w.delta = q(self.a0());
        w
    }

    /// `alpha_j = sum_i a_ij Lambda_i + [j = 0] delta/a_0`.
    pub fn simple_root(&self, j: Node) -> AffineWeight {
        let mut w = self.zero_weight();
        for i in self.nodes() {
            w.lambda[i] = q(self.matrix[i][j]);
        }
        if j == 0 {
            w.delta = Q::one();
        }
        w
    }

    /// `<c, lambda> = sum_i a_i^vee lambda_i`.
    pub fn level(&self, w: &AffineWeight) -> Q {
        w.lambda
            .iter()
            .zip(&self.comarks)
            .map(|(x, &c)| x * q(c))
            .sum()
    }

    /// Classical simple root `alpha_j` (`j >= 1`) in the fundamental-weight basis.
    pub fn classical_simple_root(&self, j: Node) -> ClassicalWeight {
        ClassicalWeight {
            omega: self.classical_nodes().map(|i| q(self.matrix[i][j])).collect(),
        }
    }

    pub fn classical_fundamental(&self, i: Node) -> ClassicalWeight {
        let mut w = ClassicalWeight::zero(self.rank());
        if i > 0 {
            w.omega[i - 1] = Q::one();
        }
        w
    }

    /// Coordinates of a classical weight in the basis of classical simple roots.
    pub fn root_coordinates(&self, mu: &ClassicalWeight) -> Vec<Q> {
        mat_vec(&self.classical_cartan_inverse, &mu.omega)
    }

    /// `theta = sum_{i != 0} a_i alpha_i` as a classical weight.
    pub fn theta(&self) -> ClassicalWeight {
        let mut t = ClassicalWeight::zero(self.rank());
        for j in self.classical_nodes() {
            t = t + self.classical_simple_root(j).scale(q(self.marks[j]));
        }
        t
    }

    /// `(lambda | alpha)` for `lambda in P` and a classical `alpha`, using
    /// `(alpha_i | lambda) = (a_i^vee / a_i) <alpha_i^vee, lambda>`.
    pub fn pair_with_classical(&self, lambda: &AffineWeight, alpha: &ClassicalWeight) -> Q {
        self.root_coordinates(alpha)
            .iter()
            .zip(self.classical_nodes())
            .map(|(qi, i)| qi * Q::new(self.comarks[i], self.marks[i]) * lambda.lambda[i])
            .sum()
    }

    /// The invariant form restricted to classical weights.
    pub fn classical_form(&self, a: &ClassicalWeight, b: &ClassicalWeight) -> Q {
        self.pair_with_classical(&self.section(a), b)
    }

    /// `omega_i -> Lambda_i - a_i^vee Lambda_0`.
    pub fn section(&self, mu: &ClassicalWeight) -> AffineWeight {
        let mut w = self.zero_weight();
        for i in self.classical_nodes() {
            let x = mu.omega[i - 1];
            w.lambda[i] += x;
            w.lambda[0] -= x * q(self.comarks[i]);
        }
        w
    }

    /// Drops `Lambda_0` and `delta`: `Lambda_i -> omega_i`.
    pub fn classical_projection(&self, w: &AffineWeight) -> ClassicalWeight {
        ClassicalWeight { omega: w.lambda[1..].to_vec() }
    }

    pub fn is_classically_dominant(&self, mu: &ClassicalWeight) -> bool {
        mu.omega.iter().all(|x| !x.is_negative())
    }

    /// Membership in `M~ = sum Z c_i omega_i`.
    pub fn in_extended_lattice(&self, mu: &ClassicalWeight) -> bool {
        self.classical_nodes()
            .all(|i| (mu.omega[i - 1] / q(self.c[i])).is_integer())
    }

    /// Membership in the translation lattice `M` of `W = W_0 x| T(M)`.
    ///
    /// `M = Z W_0 theta/a_0`. This is `sum Z c_i alpha_i` for every family
    /// except `A_{2n}^(2)`, where `theta/a_0 = omega_1` generates all of `P_0`.
    pub fn in_translation_lattice(&self, mu: &ClassicalWeight) -> bool {
        if self.affine_type.family == Family::A2Even {
            return mu.omega.iter().all(|x| x.is_integer());
        }
        let coords = self.root_coordinates(mu);
        self.classical_nodes()
            .all(|i| (coords[i - 1] / q(self.c[i])).is_integer())
    }

    /// `(theta | theta)`.
    pub fn theta_length(&self) -> Q {
        let t = self.theta();
        self.classical_form(&t, &t)
    }

    /// Checks `A a = 0`, `a^vee A = 0`, coprimality and `a_ii = 2`.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let n = self.rank();
        for i in 0..=n {
            if self.matrix[i][i] != 2 {
                return Err(format!("a_{i}{i} != 2"));
            }
            let row: i64 = (0..=n).map(|j| self.matrix[i][j] * self.marks[j]).sum();
            if row != 0 {
                return Err(format!("(A a)_{i} = {row}"));
            }
            let col: i64 = (0..=n).map(|j| self.comarks[j] * self.matrix[j][i]).sum();
            if col != 0 {
                return Err(format!("(a^vee A)_{i} = {col}"));
            }
        }
        let g = self.marks.iter().fold(0i64, |g, &m| g.gcd(&m));
        let gv = self.comarks.iter().fold(0i64, |g, &m| g.gcd(&m));
        if g != 1 || gv != 1 {
            return Err("marks or comarks not coprime".into());
        }
        if self.marks.iter().chain(&self.comarks).any(|&m| m <= 0) {
            return Err("nonpositive mark".into());
        }
        Ok(())
    }
}

/// Element of `P` in the basis `Lambda_0..Lambda_n, delta/a_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeight {
    pub lambda: Vec<Q>,
    /// Coefficient of `delta/a_0`.
    pub delta: Q,
}

impl AffineWeight {
    pub fn zero(rank: usize) -> Self {
        AffineWeight { lambda: vec![Q::zero(); rank + 1], delta: Q::zero() }
    }

    pub fn from_ints(lambda: &[i64], delta: i64) -> Self {
        AffineWeight { lambda: lambda.iter().map(|&x| q(x)).collect(), delta: q(delta) }
    }

    pub fn scale(&self, k: Q) -> Self {
        AffineWeight {
            lambda: self.lambda.iter().map(|x| x * k).collect(),
            delta: self.delta * k,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.delta.is_zero() && self.lambda.iter().all(Zero::is_zero)
    }

    /// `<alpha_i^vee, self>`.
    pub fn pairing(&self, i: Node) -> Q {
        self.lambda[i]
    }

    /// The weight modulo `delta`.
    pub fn without_delta(&self) -> Self {
        AffineWeight { lambda: self.lambda.clone(), delta: Q::zero() }
    }
}

impl Add for AffineWeight {
    type Output = AffineWeight;
    fn add(mut self, rhs: AffineWeight) -> AffineWeight {
        self += &rhs;
        self
    }
}

impl AddAssign<&AffineWeight> for AffineWeight {
    fn add_assign(&mut self, rhs: &AffineWeight) {
        for (a, b) in self.lambda.iter_mut().zip(&rhs.lambda) {
            *a += b;
        }
        self.delta += rhs.delta;
    }
}

impl Sub for AffineWeight {
    type Output = AffineWeight;
    fn sub(self, rhs: AffineWeight) -> AffineWeight {
        self + (-rhs)
    }
}

impl Neg for AffineWeight {
    type Output = AffineWeight;
    fn neg(self) -> AffineWeight {
        self.scale(-Q::one())
    }
}

impl Mul<AffineWeight> for Q {
    type Output = AffineWeight;
    fn mul(self, rhs: AffineWeight) -> AffineWeight {
        rhs.scale(self)
    }
}

fn fmt_terms(f: &mut fmt::Formatter<'_>, terms: &[(Q, String)]) -> fmt::Result {
    let mut first = true;
    for (c, name) in terms.iter().filter(|(c, _)| !c.is_zero()) {
        let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
        let abs = c.abs();
        if !first {
            write!(f, " ")?;
        }
        if abs.is_one() {
            write!(f, "{sign}{name}")?;
        } else {
            write!(f, "{sign}{abs}{name}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(Q, String)> = self
            .lambda
            .iter()
            .enumerate()
            .map(|(i, c)| (*c, format!("L{i}")))
            .collect();
        terms.push((self.delta, "d".into()));
        fmt_terms(f, &terms)
    }
}

#[derive(Serialize, Deserialize)]
struct WeightWire {
    lambda: Vec<String>,
    delta: String,
}

impl Serialize for AffineWeight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WeightWire {
            lambda: self.lambda.iter().map(to_wire).collect(),
            delta: to_wire(&self.delta),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AffineWeight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = WeightWire::deserialize(d)?;
        let parse = |s: &str| {
            from_wire(s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
        };
        Ok(AffineWeight {
            lambda: w.lambda.iter().map(|s| parse(s)).collect::<std::result::Result<_, _>>()?,
            delta: parse(&w.delta)?,
        })
    }
}

/// Element of `P_0` in the basis of fundamental weights `omega_1..omega_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassicalWeight {
    pub omega: Vec<Q>,
}

impl ClassicalWeight {
    pub fn zero(rank: usize) -> Self {
        ClassicalWeight { omega: vec![Q::zero(); rank] }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        ClassicalWeight { omega: c.iter().map(|&x| q(x)).collect() }
    }

    pub fn scale(&self, k: Q) -> Self {
        ClassicalWeight { omega: self.omega.iter().map(|x| x * k).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.omega.iter().all(Zero::is_zero)
    }

    /// `<alpha_i^vee, self>` for `i >= 1`.
    pub fn pairing(&self, i: Node) -> Q {
        self.omega[i - 1]
    }
}

impl Add for ClassicalWeight {
    type Output = ClassicalWeight;
    fn add(self, rhs: ClassicalWeight) -> ClassicalWeight {
        ClassicalWeight { omega: self.omega.iter().zip(&rhs.omega).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for ClassicalWeight {
    type Output = ClassicalWeight;
    fn sub(self, rhs: ClassicalWeight) -> ClassicalWeight {
        self + (-rhs)
    }
}

impl Neg for ClassicalWeight {
    type Output = ClassicalWeight;
    fn neg(self) -> ClassicalWeight {
        self.scale(-Q::one())
    }
}

impl fmt::Display for ClassicalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(Q, String)> = self
            .omega
            .iter()
            .enumerate()
            .map(|(i, c)| (*c, format!("w{}", i + 1)))
            .collect();
        fmt_terms(f, &terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use proptest::prelude::*;

    fn datum(s: &str) -> CartanDatum {
        CartanDatum::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn parses_type_strings() {
        let t: AffineType = "A4~2".parse().unwrap();
        assert_eq!(t, AffineType { family: Family::A2Even, rank: 2 });
        let t: AffineType = "D5~2".parse().unwrap();
        assert_eq!(t, AffineType { family: Family::D2, rank: 4 });
        let t: AffineType = "A5~2".parse().unwrap();
        assert_eq!(t, AffineType { family: Family::A2Odd, rank: 3 });
        for s in ["A2~1", "A4~2", "D5~2", "C3~1", "B4~1", "A7~2", "D4~1"] {
            assert_eq!(s.parse::<AffineType>().unwrap().to_string(), s);
        }
        assert!("X3~1".parse::<AffineType>().is_err());
        assert!("A3".parse::<AffineType>().is_err());
    }

    #[test]
    fn rank_bounds() {
        assert!(matches!("D3~1".parse::<AffineType>(), Err(KrError::RankOutOfRange { .. })));
        assert!(matches!("B2~1".parse::<AffineType>(), Err(KrError::RankOutOfRange { .. })));
        assert!(AffineType::new(Family::A2Odd, 2).is_err());
        assert!(AffineType::new(Family::A2Even, 1).is_ok());
    }

    #[test]
    fn kernel_and_theta_length_for_all_types() {
        for t in AffineType::all_up_to(8) {
            let d = CartanDatum::new(t).unwrap();
            d.check_invariants().unwrap_or_else(|e| panic!("{t}: {e}"));
            assert_eq!(d.theta_length(), q(2 * d.a0()), "{t}");
            for j in d.nodes() {
                assert!(d.level(&d.simple_root(j)).is_zero(), "{t} alpha_{j}");
            }
            for i in d.classical_nodes() {
                assert_eq!(d.c[i], (d.marks[i] / d.comarks[i]).max(1));
            }
        }
    }

    #[test]
    fn datum_examples() {
        let d = datum("A4~2");
        assert_eq!(d.a0(), 2);
        assert_eq!(d.theta_length(), q(4));
        let d = datum("C3~1");
        assert_eq!(&d.c[1..], &[2, 2, 1]);
        let d = datum("A2~1");
        assert_eq!(&d.c[1..], &[1, 1]);
        assert_eq!(d.special_nodes, vec![0, 1, 2]);
    }

    #[test]
    fn simple_roots_a2() {
        let d = datum("A2~1");
        assert_eq!(d.simple_root(0), AffineWeight::from_ints(&[2, -1, -1], 1));
        assert_eq!(d.simple_root(1), AffineWeight::from_ints(&[-1, 2, -1], 0));
        let delta = d
            .nodes()
            .fold(d.zero_weight(), |acc, i| acc + d.simple_root(i).scale(q(d.marks[i])));
        assert_eq!(delta, d.null_root());
        for k in d.nodes() {
            for j in d.nodes() {
                assert_eq!(d.simple_root(j).pairing(k), q(d.matrix[k][j]));
            }
        }
    }

    #[test]
    fn null_root_every_type() {
        for t in AffineType::all_up_to(6) {
            let d = CartanDatum::new(t).unwrap();
            let delta = d
                .nodes()
                .fold(d.zero_weight(), |acc, i| acc + d.simple_root(i).scale(q(d.marks[i])));
            assert_eq!(delta, d.null_root(), "{t}");
        }
    }

    #[test]
    fn pairing_examples() {
        let d = datum("A2~1");
        let w1 = d.classical_fundamental(1);
        assert_eq!(d.classical_form(&w1, &w1), frac(2, 3));
        let delta = d.null_root();
        assert_eq!(d.pair_with_classical(&delta, &w1), q(0));
    }

    #[test]
    fn section_and_projection() {
        let d = datum("C3~1");
        let w1 = d.classical_fundamental(1);
        assert_eq!(d.section(&w1), AffineWeight::from_ints(&[-1, 1, 0, 0], 0));
        assert!(d.classical_projection(&d.fundamental(0).scale(q(5))).is_zero());
        for t in AffineType::all_up_to(5) {
            let d = CartanDatum::new(t).unwrap();
            for i in d.classical_nodes() {
                let mu = d.classical_fundamental(i).scale(q(3));
                let s = d.section(&mu);
                assert!(d.level(&s).is_zero());
                assert!(s.delta.is_zero());
                assert_eq!(d.classical_projection(&(s + d.null_root().scale(q(7)))), mu);
            }
        }
    }

    #[test]
    fn weight_json_round_trip() {
        let w = AffineWeight { lambda: vec![frac(1, 2), q(-3)], delta: frac(5, 4) };
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"lambda":["1/2","-3/1"],"delta":"5/4"}"#);
        let back: AffineWeight = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
    }

    fn small_q() -> impl Strategy<Value = Q> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Q::new(n, d))
    }

    proptest! {
        #[test]
        fn classical_form_is_symmetric_and_bilinear(
            ti in 0usize..7, a in prop::collection::vec(small_q(), 4),
            b in prop::collection::vec(small_q(), 4), c in prop::collection::vec(small_q(), 4),
            k in small_q(),
        ) {
            let fam = Family::ALL[ti];
            let d = CartanDatum::new(AffineType { family: fam, rank: 4 }).unwrap();
            let a = ClassicalWeight { omega: a };
            let b = ClassicalWeight { omega: b };
            let c = ClassicalWeight { omega: c };
            prop_assert_eq!(d.classical_form(&a, &b), d.classical_form(&b, &a));
            let lhs = d.classical_form(&(a.clone() + b.scale(k)), &c);
            let rhs = d.classical_form(&a, &c) + k * d.classical_form(&b, &c);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
