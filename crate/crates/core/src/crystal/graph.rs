//! Finite crystal graphs: generation by closure, components, isomorphism and
//! the JSON/DOT wire formats.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::Crystal;
use crate::cartan::Node;
use crate::error::{KrError, Result};

#[derive(Clone, Debug)]
pub struct CrystalGraph<E> {
    /// Sorted.
    pub nodes: Vec<E>,
    pub index: HashMap<E, usize>,
    /// `(from, to, i)` with `to = f_i from`; sorted.
    pub edges: Vec<(usize, usize, Node)>,
    pub colors: Vec<Node>,
}

impl<E: Clone + Eq + std::hash::Hash + Ord + std::fmt::Display> CrystalGraph<E> {
    /// Closure of `seeds` under `f_i`, `e_i` for `i` in `colors`.
    pub fn generate<C>(c: &C, seeds: &[E], colors: &[Node], cap: usize) -> Result<Self>
    where
        C: Crystal<Elem = E>,
    {
        let mut seen: BTreeSet<E> = BTreeSet::new();
        let mut queue: VecDeque<E> = VecDeque::new();
        let mut raw_edges: Vec<(E, E, Node)> = Vec::new();
        for s in seeds {
            if seen.insert(s.clone()) {
                queue.push_back(s.clone());
            }
        }
        while let Some(b) = queue.pop_front() {
            for &i in colors {
                if let Some(fb) = c.f(i, &b)? {
                    raw_edges.push((b.clone(), fb.clone(), i));
                    if seen.insert(fb.clone()) {
                        queue.push_back(fb);
                    }
                }
                if let Some(eb) = c.e(i, &b)? {
                    if seen.insert(eb.clone()) {
                        queue.push_back(eb);
                    }
                }
            }
            if seen.len() > cap {
                return Err(KrError::CapExceeded(cap));
            }
        }
        let nodes: Vec<E> = seen.into_iter().collect();
        let index: HashMap<E, usize> =
            nodes.iter().cloned().enumerate().map(|(k, b)| (b, k)).collect();
        let mut edges: Vec<(usize, usize, Node)> =
            raw_edges.into_iter().map(|(a, b, i)| (index[&a], index[&b], i)).collect();
        edges.sort();
        edges.dedup();
        Ok(CrystalGraph { nodes, index, edges, colors: colors.to_vec() })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `succ[v][i] = f_i v`, `pred[v][i] = e_i v` as index maps.
    fn adjacency(&self) -> (Vec<HashMap<Node, usize>>, Vec<HashMap<Node, usize>>) {
        let mut succ = vec![HashMap::new(); self.len()];
        let mut pred = vec![HashMap::new(); self.len()];
        for &(a, b, i) in &self.edges {
            succ[a].insert(i, b);
            pred[b].insert(i, a);
        }
        (succ, pred)
    }

    /// Connected components using only the given colors.
    pub fn components(&self, colors: &[Node]) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for &(a, b, i) in &self.edges {
            if colors.contains(&i) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for v in 0..self.len() {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort();
        out
    }

    /// Vertices with no incoming edge of any color in `colors`.
    pub fn highest_weight_vertices(&self, colors: &[Node]) -> Vec<usize> {
        let mut has_in = vec![false; self.len()];
        for &(_, b, i) in &self.edges {
            if colors.contains(&i) {
                has_in[b] = true;
            }
        }
        (0..self.len()).filter(|&v| !has_in[v]).collect()
    }

    /// Induced subgraph on `vertices`, keeping only `colors`.
    pub fn subgraph(&self, vertices: &[usize], colors: &[Node]) -> CrystalGraph<E> {
        let keep: HashMap<usize, usize> = {
            let mut sorted = vertices.to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            sorted.into_iter().enumerate().map(|(k, v)| (v, k)).collect()
        };
        let mut nodes = vec![None; keep.len()];
        for (&v, &k) in &keep {
            nodes[k] = Some(self.nodes[v].clone());
        }
        let nodes: Vec<E> = nodes.into_iter().map(Option::unwrap).collect();
        let mut edges: Vec<(usize, usize, Node)> = self
            .edges
            .iter()
            .filter(|(a, b, i)| colors.contains(i) && keep.contains_key(a) && keep.contains_key(b))
            .map(|&(a, b, i)| (keep[&a], keep[&b], i))
            .collect();
        edges.sort();
        let index = nodes.iter().cloned().enumerate().map(|(k, b)| (b, k)).collect();
        CrystalGraph { nodes, index, edges, colors: colors.to_vec() }
    }

    /// Colored-graph isomorphism sending `root` to `other_root`, found by
    /// propagating along `f`/`e` edges. Both graphs must be connected.
    pub fn isomorphism_from<F>(
        &self,
        root: usize,
        other: &CrystalGraph<F>,
        other_root: usize,
    ) -> Option<Vec<usize>>
    where
        F: Clone + Eq + std::hash::Hash + Ord + std::fmt::Display,
    {
        if self.len() != other.len() || self.edges.len() != other.edges.len() {
            return None;
        }
        let (s1, p1) = self.adjacency();
        let (s2, p2) = other.adjacency();
        let mut map = vec![usize::MAX; self.len()];
        let mut used = vec![false; other.len()];
        map[root] = other_root;
        used[other_root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let w = map[v];
            for (adj1, adj2) in [(&s1, &s2), (&p1, &p2)] {
                if adj1[v].len() != adj2[w].len() {
                    return None;
                }
                for (i, &x) in &adj1[v] {
                    let &y = adj2[w].get(i)?;
                    if map[x] == usize::MAX {
                        if used[y] {
                            return None;
                        }
                        map[x] = y;
                        used[y] = true;
                        queue.push_back(x);
                    } else if map[x] != y {
                        return None;
                    }
                }
            }
        }
        if map.iter().any(|&m| m == usize::MAX) {
            return None;
        }
        Some(map)
    }

    pub fn to_wire(&self) -> GraphWire {
        GraphWire {
            nodes: self.nodes.iter().map(|b| b.to_string()).collect(),
            edges: self
                .edges
                .iter()
                .map(|&(a, b, i)| EdgeWire {
                    from: self.nodes[a].to_string(),
                    to: self.nodes[b].to_string(),
                    color: i,
                })
                .collect(),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (k, b) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{k} [label=\"{}\"];", b.to_string().replace('"', "\\\""));
        }
        for &(a, b, i) in &self.edges {
            let _ = writeln!(out, "  n{a} -> n{b} [label=\"{i}\"];");
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeWire {
    pub from: String,
    pub to: String,
    pub color: Node,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphWire {
    pub nodes: Vec<String>,
    pub edges: Vec<EdgeWire>,
}

impl GraphWire {
    /// Sorts nodes and edges so that equal graphs have equal wire forms.
    pub fn normalized(mut self) -> Self {
        self.nodes.sort();
        self.edges
            .sort_by(|a, b| (&a.from, &a.to, a.color).cmp(&(&b.from, &b.to, b.color)));
        self
    }
}
