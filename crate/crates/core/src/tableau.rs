//! Semistandard tableaux with the type `A_n` crystal structure, and
//! promotion on rectangles.
//!
//! Entries are 1-based. The reading word is the column reading word (columns
//! left to right, each read bottom to top); in it a letter `i+1` followed
//! later by a letter `i` are bracketed. `f_i` changes the rightmost unbracketed
//! `i`, `e_i` the leftmost unbracketed `i+1`. This is the tensor rule of
//! [`crate::crystal::Tensor`] applied to the reading word.

use std::fmt;
use std::str::FromStr;

use crate::cartan::{CartanDatum, Node};
use crate::crystal::{CResult, Crystal};
use crate::error::{KrError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    pub rows: Vec<Vec<u8>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u8>>) -> Self {
        Tableau { rows }
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn num_boxes(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Rows weakly increase, columns strictly increase, shape is a partition,
    /// entries lie in `1..=max`.
    pub fn is_semistandard(&self, max: u8) -> bool {
        let shape = self.shape();
        if shape.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.iter().any(|&x| x == 0 || x > max) || row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if r > 0 && row.iter().enumerate().any(|(c, &x)| self.rows[r - 1][c] >= x) {
                return false;
            }
        }
        true
    }

    /// Highest weight tableau of shape `lambda`: row `k` filled with `k`.
    pub fn yamanouchi(shape: &[usize]) -> Self {
        Tableau {
            rows: shape
                .iter()
                .enumerate()
                .map(|(k, &len)| vec![k as u8 + 1; len])
                .collect(),
        }
    }

    /// Rectangle `r x s`.
    pub fn rectangle_highest(r: usize, s: usize) -> Self {
        Self::yamanouchi(&vec![s; r])
    }

    /// Cells of the column reading word in order.
    pub fn reading_cells(&self) -> Vec<(usize, usize)> {
        let width = self.rows.first().map_or(0, Vec::len);
        let mut cells = Vec::with_capacity(self.num_boxes());
        for c in 0..width {
            for r in (0..self.rows.len()).rev() {
                if c < self.rows[r].len() {
                    cells.push((r, c));
                }
            }
        }
        cells
    }

    pub fn reading_word(&self) -> Vec<u8> {
        self.reading_cells().iter().map(|&(r, c)| self.rows[r][c]).collect()
    }

    /// Unbracketed `i` cells and unbracketed `i+1` cells, in reading order.
    fn signature(&self, i: u8) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
        let mut open: Vec<(usize, usize)> = Vec::new();
        let mut free_i: Vec<(usize, usize)> = Vec::new();
        for (r, c) in self.reading_cells() {
            let x = self.rows[r][c];
            if x == i + 1 {
                open.push((r, c));
            } else if x == i && open.pop().is_none() {
                free_i.push((r, c));
            }
        }
        (free_i, open)
    }

    pub fn f(&self, i: u8) -> Option<Tableau> {
        let (free_i, _) = self.signature(i);
        let &(r, c) = free_i.last()?;
        let mut t = self.clone();
        t.rows[r][c] = i + 1;
        Some(t)
    }

    pub fn e(&self, i: u8) -> Option<Tableau> {
        let (_, free_next) = self.signature(i);
        let &(r, c) = free_next.first()?;
        let mut t = self.clone();
        t.rows[r][c] = i;
        Some(t)
    }

    pub fn phi(&self, i: u8) -> i64 {
        self.signature(i).0.len() as i64
    }

    pub fn epsilon(&self, i: u8) -> i64 {
        self.signature(i).1.len() as i64
    }

    /// Number of entries equal to `k`, for `k = 1..=max`.
    pub fn content(&self, max: u8) -> Vec<i64> {
        let mut out = vec![0; max as usize];
        for &x in self.rows.iter().flatten() {
            out[x as usize - 1] += 1;
        }
        out
    }

    /// Promotion on a rectangle with entries in `1..=max`: remove the entries
    /// `max`, slide the holes to the top-left by reverse jeu de taquin, add 1
    /// to every entry and fill the holes with 1.
    pub fn promotion(&self, max: u8) -> Tableau {
        let mut grid: Vec<Vec<Option<u8>>> =
            self.rows.iter().map(|row| row.iter().map(|&x| Some(x)).collect()).collect();
        let mut holes: Vec<(usize, usize)> = Vec::new();
        for (r, row) in grid.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                if *cell == Some(max) {
                    *cell = None;
                    holes.push((r, c));
                }
            }
        }
        for (mut r, mut c) in holes {
            loop {
                let up = if r > 0 { grid[r - 1][c] } else { None };
                let left = if c > 0 { grid[r][c - 1] } else { None };
                match (up, left) {
                    (None, None) => break,
                    (Some(u), Some(l)) if l > u => {
                        grid[r][c] = Some(l);
                        grid[r][c - 1] = None;
                        c -= 1;
                    }
                    (Some(u), _) => {
                        grid[r][c] = Some(u);
                        grid[r - 1][c] = None;
                        r -= 1;
                    }
                    (None, Some(l)) => {
                        grid[r][c] = Some(l);
                        grid[r][c - 1] = None;
                        c -= 1;
                    }
                }
            }
        }
        Tableau {
            rows: grid
                .into_iter()
                .map(|row| row.into_iter().map(|x| x.map_or(1, |v| v + 1)).collect())
                .collect(),
        }
    }

    /// Inverse promotion: remove the entries 1, slide the holes to the
    /// bottom-right, subtract 1 and fill the holes with `max`.
    pub fn promotion_inverse(&self, max: u8) -> Tableau {
        let mut grid: Vec<Vec<Option<u8>>> =
            self.rows.iter().map(|row| row.iter().map(|&x| Some(x)).collect()).collect();
        let mut holes: Vec<(usize, usize)> = Vec::new();
        for (r, row) in grid.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                if *cell == Some(1) {
                    *cell = None;
                    holes.push((r, c));
                }
            }
        }
        let height = grid.len();
        for &(r0, c0) in holes.iter().rev() {
            let (mut r, mut c) = (r0, c0);
            loop {
                let down = if r + 1 < height && c < grid[r + 1].len() { grid[r + 1][c] } else { None };
                let right = if c + 1 < grid[r].len() { grid[r][c + 1] } else { None };
                match (down, right) {
                    (None, None) => break,
                    (Some(d), Some(rt)) if rt < d => {
                        grid[r][c] = Some(rt);
                        grid[r][c + 1] = None;
                        c += 1;
                    }
                    (Some(d), _) => {
                        grid[r][c] = Some(d);
                        grid[r + 1][c] = None;
                        r += 1;
                    }
                    (None, Some(rt)) => {
                        grid[r][c] = Some(rt);
                        grid[r][c + 1] = None;
                        c += 1;
                    }
                }
            }
        }
        Tableau {
            rows: grid
                .into_iter()
                .map(|row| row.into_iter().map(|x| x.map_or(max, |v| v - 1)).collect())
                .collect(),
        }
    }

    /// Display in multiplicative row-word notation: rows from bottom to top,
    /// each row as runs `v^m`, e.g. `"2^2 1^2"`.
    pub fn row_word(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        for row in self.rows.iter().rev() {
            let mut k = 0;
            while k < row.len() {
                let v = row[k];
                let m = row[k..].iter().take_while(|&&x| x == v).count();
                parts.push(format!("{v}^{m}"));
                k += m;
            }
        }
        if parts.is_empty() {
            "∅".into()
        } else {
            parts.join(" ")
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.row_word())
    }
}

impl FromStr for Tableau {
    type Err = KrError;

    /// Rows separated by `/`, entries by `,`, e.g. `"1,1/2,3"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Tableau { rows: vec![] });
        }
        let rows = s
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|x| x.trim().parse::<u8>().map_err(|_| KrError::Parse(format!("bad entry {x:?} in {s:?}"))))
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Tableau { rows })
    }
}

impl Tableau {
    /// Inverse of [`FromStr`].
    pub fn to_input_string(&self) -> String {
        self.rows
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("/")
    }
}

/// All semistandard tableaux of shape `shape` with entries `<= max`, sorted.
pub fn enumerate_ssyt(shape: &[usize], max: u8) -> Vec<Tableau> {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<u8>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::new();
    fn rec(k: usize, cells: &[(usize, usize)], rows: &mut Vec<Vec<u8>>, max: u8, out: &mut Vec<Tableau>) {
        if k == cells.len() {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { rows[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col).max(1)..=max {
            rows[r][c] = v;
            rec(k + 1, cells, rows, max, out);
        }
        rows[r][c] = 0;
    }
    rec(0, &cells, &mut rows, max, &mut out);
    out.sort();
    out
}

/// The classical type `A_n` crystal `B(lambda)` on tableaux with entries in
/// `1..=n+1`. It is attached to the datum `A_n^(1)`; node 0 is inert
/// (`e_0 = f_0 = 0`), so only nodes `1..=n` carry structure.
#[derive(Clone, Debug)]
pub struct ClassicalA {
    cartan: CartanDatum,
    pub shape: Vec<usize>,
}

impl ClassicalA {
    pub fn new(n: usize, shape: Vec<usize>) -> Result<Self> {
        if shape.len() > n + 1 {
            return Err(KrError::Inadmissible {
                partition: shape,
                reason: format!("more than {} rows", n + 1),
            });
        }
        if shape.windows(2).any(|w| w[0] < w[1]) {
            return Err(KrError::Inadmissible { partition: shape, reason: "not a partition".into() });
        }
        let cartan = CartanDatum::new(crate::cartan::AffineType::new(crate::cartan::Family::A1, n)?)?;
        Ok(ClassicalA { cartan, shape })
    }

    pub fn highest(&self) -> Tableau {
        Tableau::yamanouchi(&self.shape)
    }

    pub fn classical_nodes(&self) -> Vec<Node> {
        self.cartan.classical_nodes().collect()
    }
}

impl Crystal for ClassicalA {
    type Elem = Tableau;

    fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    fn f(&self, i: Node, b: &Tableau) -> CResult<Option<Tableau>> {
        Ok(if i == 0 { None } else { b.f(i as u8) })
    }

    fn e(&self, i: Node, b: &Tableau) -> CResult<Option<Tableau>> {
        Ok(if i == 0 { None } else { b.e(i as u8) })
    }

    fn epsilon(&self, i: Node, b: &Tableau) -> CResult<i64> {
        Ok(if i == 0 { 0 } else { b.epsilon(i as u8) })
    }

    fn phi(&self, i: Node, b: &Tableau) -> CResult<i64> {
        Ok(if i == 0 { 0 } else { b.phi(i as u8) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::rank2::check_regular;
    use crate::crystal::{check_axioms, CrystalGraph};
    use std::collections::HashMap;

    #[test]
    fn signature_examples() {
        let t: Tableau = "1,1".parse().unwrap();
        assert_eq!(t.f(1), Some("1,2".parse().unwrap()));
        let col: Tableau = "1/2".parse().unwrap();
        assert_eq!(col.f(1), None);
        assert_eq!(col.e(1), None);
        let u = Tableau::yamanouchi(&[3, 1]);
        for i in 1..=3 {
            assert_eq!(u.e(i), None);
        }
        assert_eq!(u.phi(1), 2);
        assert_eq!(u.phi(2), 1);
        assert_eq!(u.phi(3), 0);
    }

    #[test]
    fn row_word_display() {
        let t = Tableau::rectangle_highest(3, 2);
        assert_eq!(t.to_string(), "3^2 2^2 1^2");
        let t: Tableau = "1,1,2/2,3,3".parse().unwrap();
        assert_eq!(t.to_string(), "2^1 3^2 1^2 2^1");
        assert_eq!(t.to_input_string(), "1,1,2/2,3,3");
    }

    #[test]
    fn small_crystals() {
        let b = ClassicalA::new(2, vec![1]).unwrap();
        let g = CrystalGraph::generate(&b, &[b.highest()], &[1, 2], 1000).unwrap();
        assert_eq!(g.len(), 3);
        let one: Tableau = "1".parse().unwrap();
        let two: Tableau = "2".parse().unwrap();
        let three: Tableau = "3".parse().unwrap();
        assert_eq!(b.f(1, &one).unwrap(), Some(two.clone()));
        assert_eq!(b.f(2, &two).unwrap(), Some(three));
        let b = ClassicalA::new(3, vec![2, 2]).unwrap();
        let g = CrystalGraph::generate(&b, &[b.highest()], &[1, 2, 3], 1000).unwrap();
        assert_eq!(g.len(), 20);
        let b = ClassicalA::new(3, vec![]).unwrap();
        let g = CrystalGraph::generate(&b, &[b.highest()], &[1, 2, 3], 1000).unwrap();
        assert_eq!(g.len(), 1);
        assert!(ClassicalA::new(1, vec![1, 1, 1]).is_err());
    }

    /// Polynomials in `N` variables as exponent-vector maps.
    type Poly = HashMap<Vec<i64>, i64>;

    fn poly_mul(a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *out.entry(e).or_insert(0) += ca * cb;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Complete homogeneous symmetric polynomial `h_k` in `nvars` variables.
    fn h(k: i64, nvars: usize) -> Poly {
        let mut out = Poly::new();
        if k < 0 {
            return out;
        }
        fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Poly) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.insert(cur.clone(), 1);
                return;
            }
            for x in 0..=left {
                cur[i] = x;
                rec(i + 1, left - x, cur, out);
            }
        }
        rec(0, k, &mut vec![0; nvars], &mut out);
        out
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn sign(p: &[usize]) -> i64 {
        let mut s = 1;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    s = -s;
                }
            }
        }
        s
    }

    /// Jacobi-Trudi: `s_lambda = det(h_{lambda_i - i + j})`.
    fn schur(shape: &[usize], nvars: usize) -> Poly {
        let l = shape.len();
        let mut out = Poly::new();
        for p in permutations(l) {
            let mut term: Poly = HashMap::from([(vec![0; nvars], sign(&p))]);
            for (i, &j) in p.iter().enumerate() {
                term = poly_mul(&term, &h(shape[i] as i64 - i as i64 + j as i64, nvars));
            }
            for (e, c) in term {
                *out.entry(e).or_insert(0) += c;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    #[test]
    fn characters_match_schur_polynomials() {
        for n in 1..=3usize {
            for a in 0..=3usize {
                for b in 0..=a {
                    for c in 0..=b {
                        let shape: Vec<usize> = [a, b, c].into_iter().filter(|&x| x > 0).collect();
                        if shape.len() > n + 1 {
                            continue;
                        }
                        let cr = ClassicalA::new(n, shape.clone()).unwrap();
                        let g = CrystalGraph::generate(&cr, &[cr.highest()], &cr.classical_nodes(), 10_000).unwrap();
                        let mut ch = Poly::new();
                        for t in &g.nodes {
                            *ch.entry(t.content(n as u8 + 1)).or_insert(0) += 1;
                        }
                        assert_eq!(ch, schur(&shape, n + 1), "n={n} shape={shape:?}");
                        assert_eq!(g.nodes, enumerate_ssyt(&shape, n as u8 + 1));
                        assert_eq!(g.highest_weight_vertices(&cr.classical_nodes()).len(), 1);
                    }
                }
            }
        }
    }

    #[test]
    fn axioms_and_regularity() {
        for (n, shape) in [(2, vec![2, 1]), (3, vec![2, 1]), (3, vec![2, 2, 1]), (2, vec![3])] {
            let cr = ClassicalA::new(n, shape).unwrap();
            let nodes = cr.classical_nodes();
            let g = CrystalGraph::generate(&cr, &[cr.highest()], &nodes, 10_000).unwrap();
            check_axioms(&cr, &g.nodes, &nodes).unwrap();
            check_regular(&cr, &g, &nodes).unwrap();
            for t in &g.nodes {
                assert!(t.is_semistandard(n as u8 + 1));
            }
        }
    }

    #[test]
    fn promotion_examples() {
        let one: Tableau = "1".parse().unwrap();
        assert_eq!(one.promotion(3), "2".parse().unwrap());
        let three: Tableau = "3".parse().unwrap();
        assert_eq!(three.promotion(3), one);
        let t: Tableau = "1,3,3".parse().unwrap();
        assert_eq!(t.promotion(3), "1,1,2".parse().unwrap());
    }

    #[test]
    fn promotion_is_a_bijection_of_order_n_plus_one() {
        for (n, r, s) in [(2, 1, 2), (2, 2, 2), (3, 2, 2), (3, 1, 3), (4, 2, 2), (3, 3, 2), (4, 3, 1)] {
            let max = n as u8 + 1;
            let all = enumerate_ssyt(&vec![s; r], max);
            let mut images: Vec<Tableau> = all.iter().map(|t| t.promotion(max)).collect();
            for (t, p) in all.iter().zip(&images) {
                assert!(p.is_semistandard(max), "{t} -> {p}");
                assert_eq!(&p.promotion_inverse(max), t);
                let mut c = t.content(max);
                c.rotate_right(1);
                assert_eq!(p.content(max), c);
                let mut x = t.clone();
                for _ in 0..=n {
                    x = x.promotion(max);
                }
                assert_eq!(&x, t, "pr^{} != id", n + 1);
            }
            images.sort();
            assert_eq!(images, all);
        }
    }
}
