//! Finite simple graphs, their edge and cover ideals, and the structural
//! predicates (bipartiteness, induced odd cycles, almost-bipartiteness,
//! Hochster configurations) tied to the behavior of cover-ideal powers.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::{MonomialPrime, Ring};

/// Default cap on vertex count for subset-enumeration predicates.
pub const DEFAULT_ENUMERATION_BUDGET: usize = 16;

/// An undirected simple graph over named vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    vertices: Vec<String>,
    /// Normalized (a < b) vertex-index pairs.
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new<S: Into<String>>(vertices: Vec<S>, edge_names: &[(&str, &str)]) -> Result<Self> {
        let ring = Ring::new(vertices)?;
        let vertices: Vec<String> = ring.vars().to_vec();
        let mut edges = BTreeSet::new();
        for (a, b) in edge_names {
            let ia = ring
                .index_of(a)
                .ok_or_else(|| Error::UnknownVariable((*a).to_string()))?;
            let ib = ring
                .index_of(b)
                .ok_or_else(|| Error::UnknownVariable((*b).to_string()))?;
            if ia == ib {
                return Err(Error::Invalid(format!("loop at vertex {a}")));
            }
            edges.insert((ia.min(ib), ia.max(ib)));
        }
        Ok(SimpleGraph { vertices, edges })
    }

    pub fn from_indices(vertices: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = vertices.len();
        let mut edges = BTreeSet::new();
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::Invalid("edge endpoint out of range".into()));
            }
            if a == b {
                return Err(Error::Invalid(format!("loop at vertex {}", vertices[a])));
            }
            edges.insert((a.min(b), a.max(b)));
        }
        let _ = Ring::new(vertices.clone())?; // validates names
        Ok(SimpleGraph { vertices, edges })
    }

    /// The cycle graph on `x1..xn`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Invalid("a cycle needs at least 3 vertices".into()));
        }
        let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_indices((1..=n).map(|i| format!("x{i}")).collect(), &pairs)
    }

    /// The path graph on `x1..xn` (n-1 edges).
    pub fn path(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid("a path needs at least 2 vertices".into()));
        }
        let pairs: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Self::from_indices((1..=n).map(|i| format!("x{i}")).collect(), &pairs)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Ring with one variable per vertex, in vertex order.
    pub fn ring(&self) -> Ring {
        Ring::new(self.vertices.clone()).expect("vertex names are valid")
    }

    fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The edge ideal: one quadratic generator per edge.
    pub fn edge_ideal(&self) -> Result<MonomialIdeal> {
        if self.edges.is_empty() {
            return Err(Error::EmptyEdgeSet);
        }
        let ring = self.ring();
        let gens = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let mut exps = vec![0u64; ring.len()];
                exps[a] = 1;
                exps[b] = 1;
                ring.monomial(exps).unwrap()
            })
            .collect();
        MonomialIdeal::new(ring, gens)
    }

    /// The cover ideal: intersection of the edge primes `(x_a, x_b)`.
    pub fn cover_ideal(&self) -> Result<MonomialIdeal> {
        if self.edges.is_empty() {
            return Err(Error::EmptyEdgeSet);
        }
        let ring = self.ring();
        let primes: Vec<MonomialIdeal> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let p = MonomialPrime::from_indices(ring.clone(), vec![a, b]).unwrap();
                MonomialIdeal::from_prime(&p)
            })
            .collect();
        MonomialIdeal::intersect_many(ring, &primes)
    }

    /// Independent route to the cover ideal generators: inclusion-minimal
    /// vertex covers by subset enumeration. Used to cross-check
    /// [`Self::cover_ideal`].
    pub fn minimal_vertex_covers(&self, budget: usize) -> Result<Vec<Vec<usize>>> {
        let n = self.vertices.len();
        if n > budget.min(30) {
            return Err(Error::GraphTooLarge {
                vertices: n,
                budget: budget.min(30),
            });
        }
        let mut covers: Vec<u32> = Vec::new();
        'mask: for mask in 0u32..(1u32 << n) {
            for &(a, b) in &self.edges {
                if mask & (1 << a) == 0 && mask & (1 << b) == 0 {
                    continue 'mask;
                }
            }
            covers.push(mask);
        }
        let minimal: Vec<u32> = covers
            .iter()
            .copied()
            .filter(|&m| !covers.iter().any(|&c| c != m && c & m == c))
            .collect();
        let mut out: Vec<Vec<usize>> = minimal
            .into_iter()
            .map(|m| (0..n).filter(|&i| m & (1 << i) != 0).collect())
            .collect();
        out.sort_by_key(|c: &Vec<usize>| (c.len(), c.clone()));
        Ok(out)
    }

    /// Standard parity test, with either a two-coloring or an odd closed
    /// walk as witness.
    pub fn bipartition(&self) -> Bipartiteness {
        let n = self.vertices.len();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut parent: Vec<usize> = (0..n).collect();
        for root in 0..n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    match color[w] {
                        None => {
                            color[w] = Some(!color[v].unwrap());
                            parent[w] = v;
                            queue.push_back(w);
                        }
                        Some(c) if c == color[v].unwrap() => {
                            return Bipartiteness::OddCycle(self.extract_cycle(&parent, v, w));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let coloring = color
            .into_iter()
            .enumerate()
            .map(|(i, c)| (self.vertices[i].clone(), c.unwrap_or(false)))
            .collect();
        Bipartiteness::TwoColoring(coloring)
    }

    /// Reconstructs the odd cycle through the BFS-tree paths of a
    /// same-color edge `(u, v)`.
    fn extract_cycle(&self, parent: &[usize], u: usize, v: usize) -> Vec<String> {
        let path_to_root = |mut x: usize| {
            let mut p = vec![x];
            while parent[x] != x {
                x = parent[x];
                p.push(x);
            }
            p
        };
        let pu = path_to_root(u);
        let pv = path_to_root(v);
        // Trim the shared tail to the lowest common ancestor.
        let mut iu = pu.len();
        let mut iv = pv.len();
        while iu > 0 && iv > 0 && pu[iu - 1] == pv[iv - 1] {
            iu -= 1;
            iv -= 1;
        }
        let mut cycle: Vec<usize> = pu[..=iu.min(pu.len() - 1)].to_vec();
        for &x in pv[..iv.min(pv.len())].iter().rev() {
            cycle.push(x);
        }
        cycle.into_iter().map(|i| self.vertices[i].clone()).collect()
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartiteness::TwoColoring(_))
    }

    /// All vertex subsets of odd size >= 3 inducing a cycle, sorted by size
    /// then lexicographically. Errors when the graph exceeds the budget.
    pub fn induced_odd_cycles(&self, budget: usize) -> Result<Vec<Vec<usize>>> {
        let n = self.vertices.len();
        if n > budget.min(30) {
            return Err(Error::GraphTooLarge {
                vertices: n,
                budget: budget.min(30),
            });
        }
        let mut out: Vec<Vec<usize>> = Vec::new();
        for mask in 0u32..(1u32 << n) {
            let size = mask.count_ones() as usize;
            if size < 3 || size % 2 == 0 {
                continue;
            }
            let verts: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            if self.induces_cycle(&verts) {
                out.push(verts);
            }
        }
        out.sort_by_key(|c: &Vec<usize>| (c.len(), c.clone()));
        Ok(out)
    }

    fn induces_cycle(&self, verts: &[usize]) -> bool {
        // A set induces a cycle iff every member has induced degree exactly
        // two and the induced subgraph is connected.
        for &v in verts {
            let deg = verts.iter().filter(|&&w| w != v && self.has_edge(v, w)).count();
            if deg != 2 {
                return false;
            }
        }
        let mut seen = vec![false; verts.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for (j, &w) in verts.iter().enumerate() {
                if !seen[j] && self.has_edge(verts[i], w) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Connected with exactly one induced odd cycle.
    pub fn is_almost_bipartite(&self, budget: usize) -> Result<AlmostBipartite> {
        if !self.is_connected() {
            return Ok(AlmostBipartite {
                verdict: false,
                induced_odd_cycles: 0,
                note: Some("graph is disconnected; almost-bipartiteness is defined for connected graphs".into()),
            });
        }
        let cycles = self.induced_odd_cycles(budget)?;
        Ok(AlmostBipartite {
            verdict: cycles.len() == 1,
            induced_odd_cycles: cycles.len(),
            note: None,
        })
    }

    /// Hochster configurations of order `k`: unordered pairs of induced odd
    /// cycles `C_{2r+1}`, `C_{2s+1}` with `r + s + 1 = k` such that the
    /// first cycle avoids the closed neighborhood of the second. Such a
    /// configuration certifies that the k-th edge-ideal power is not
    /// integrally closed.
    pub fn hochster_configurations(
        &self,
        k: u64,
        budget: usize,
    ) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
        let cycles = self.induced_odd_cycles(budget)?;
        let mut out = Vec::new();
        for i in 0..cycles.len() {
            for j in i + 1..cycles.len() {
                let r = (cycles[i].len() as u64 - 1) / 2;
                let s = (cycles[j].len() as u64 - 1) / 2;
                if r + s + 1 != k {
                    continue;
                }
                let near: BTreeSet<usize> = cycles[j]
                    .iter()
                    .flat_map(|&v| self.neighbors(v))
                    .collect();
                let disjoint = cycles[i].iter().all(|v| !near.contains(v));
                if disjoint {
                    out.push((cycles[i].clone(), cycles[j].clone()));
                }
            }
        }
        Ok(out)
    }

    /// Induced subgraph on the given vertex indices (original order kept).
    pub fn induced_subgraph(&self, verts: &[usize]) -> Result<SimpleGraph> {
        let mut keep: Vec<usize> = verts.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let names: Vec<String> = keep.iter().map(|&i| self.vertices[i].clone()).collect();
        let mut pairs = Vec::new();
        for (ai, &a) in keep.iter().enumerate() {
            for (bi, &b) in keep.iter().enumerate().skip(ai + 1) {
                if self.has_edge(a, b) {
                    pairs.push((ai, bi));
                }
            }
        }
        SimpleGraph::from_indices(names, &pairs)
    }
}

/// Outcome of the parity test.
#[derive(Clone, Debug, Serialize)]
pub enum Bipartiteness {
    /// vertex -> side
    TwoColoring(Vec<(String, bool)>),
    /// vertices of an odd closed walk
    OddCycle(Vec<String>),
}

#[derive(Clone, Debug, Serialize)]
pub struct AlmostBipartite {
    pub verdict: bool,
    pub induced_odd_cycles: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_ideals() {
        let c3 = SimpleGraph::cycle(3).unwrap();
        assert_eq!(c3.edge_ideal().unwrap().render(), "(x1*x2, x1*x3, x2*x3)");
        assert_eq!(c3.cover_ideal().unwrap().render(), "(x1*x2, x1*x3, x2*x3)");
    }

    #[test]
    fn pentagon_cover_ideal_has_five_cubics() {
        let c5 = SimpleGraph::cycle(5).unwrap();
        let j = c5.cover_ideal().unwrap();
        assert_eq!(j.num_gens(), 5);
        assert!(j.gens().iter().all(|g| g.degree() == 3));
        // cross-check against enumeration of minimal covers
        let covers = c5.minimal_vertex_covers(DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert_eq!(covers.len(), 5);
        let ring = c5.ring();
        let from_covers: Vec<_> = covers
            .iter()
            .map(|c| {
                let mut exps = vec![0u64; 5];
                for &i in c {
                    exps[i] = 1;
                }
                ring.monomial(exps).unwrap()
            })
            .collect();
        let rebuilt = MonomialIdeal::new(ring, from_covers).unwrap();
        assert_eq!(rebuilt, j);
    }

    #[test]
    fn path_cover_ideal() {
        // P3: minimal covers {x2} and {x1, x3}.
        let p3 = SimpleGraph::path(3).unwrap();
        assert_eq!(p3.cover_ideal().unwrap().render(), "(x2, x1*x3)");
    }

    #[test]
    fn empty_edge_set_is_an_error() {
        let g = SimpleGraph::from_indices(vec!["a".into(), "b".into()], &[]).unwrap();
        assert_eq!(g.edge_ideal(), Err(Error::EmptyEdgeSet));
        assert_eq!(g.cover_ideal(), Err(Error::EmptyEdgeSet));
    }

    #[test]
    fn parity_tests() {
        assert!(SimpleGraph::cycle(4).unwrap().is_bipartite());
        assert!(SimpleGraph::path(4).unwrap().is_bipartite());
        let c5 = SimpleGraph::cycle(5).unwrap();
        match c5.bipartition() {
            Bipartiteness::OddCycle(cycle) => assert_eq!(cycle.len(), 5),
            Bipartiteness::TwoColoring(_) => panic!("C5 is not bipartite"),
        }
    }

    #[test]
    fn induced_cycles_in_chorded_pentagon() {
        // C5 plus the chord {x1, x4}: the only induced odd cycle is the
        // triangle {x1, x4, x5}; the square {x1..x4} is even.
        let g = SimpleGraph::new(
            vec!["x1", "x2", "x3", "x4", "x5"],
            &[
                ("x1", "x2"),
                ("x2", "x3"),
                ("x3", "x4"),
                ("x4", "x5"),
                ("x5", "x1"),
                ("x1", "x4"),
            ],
        )
        .unwrap();
        let cycles = g.induced_odd_cycles(DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert_eq!(cycles, vec![vec![0, 3, 4]]);
    }

    #[test]
    fn almost_bipartite_verdicts() {
        let budget = DEFAULT_ENUMERATION_BUDGET;
        assert!(SimpleGraph::cycle(3)
            .unwrap()
            .is_almost_bipartite(budget)
            .unwrap()
            .verdict);
        // bipartite: zero odd cycles
        assert!(!SimpleGraph::cycle(4)
            .unwrap()
            .is_almost_bipartite(budget)
            .unwrap()
            .verdict);
        // two triangles joined by a path: two induced odd cycles
        let g = two_triangles();
        let res = g.is_almost_bipartite(budget).unwrap();
        assert!(!res.verdict);
        assert_eq!(res.induced_odd_cycles, 2);
        // disconnected graph: flagged false
        let d = SimpleGraph::from_indices(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            &[(0, 1), (2, 3)],
        )
        .unwrap();
        let res = d.is_almost_bipartite(budget).unwrap();
        assert!(!res.verdict);
        assert!(res.note.unwrap().contains("disconnected"));
    }

    /// Two triangles {1,2,3} and {6,7,8} joined by the path 3-4-5-6.
    pub(super) fn two_triangles() -> SimpleGraph {
        SimpleGraph::new(
            vec!["x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"],
            &[
                ("x1", "x2"),
                ("x2", "x3"),
                ("x1", "x3"),
                ("x3", "x4"),
                ("x4", "x5"),
                ("x5", "x6"),
                ("x6", "x7"),
                ("x7", "x8"),
                ("x6", "x8"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn hochster_configuration_of_two_distant_triangles() {
        let g = two_triangles();
        let configs = g
            .hochster_configurations(3, DEFAULT_ENUMERATION_BUDGET)
            .unwrap();
        assert_eq!(configs.len(), 1);
        assert_eq!(configs[0].0, vec![0, 1, 2]);
        assert_eq!(configs[0].1, vec![5, 6, 7]);
        // a lone odd cycle cannot form a configuration
        let c5 = SimpleGraph::cycle(5).unwrap();
        for k in 1..5 {
            assert!(c5
                .hochster_configurations(k, DEFAULT_ENUMERATION_BUDGET)
                .unwrap()
                .is_empty());
        }
        // bipartite graphs have none at any order
        let c4 = SimpleGraph::cycle(4).unwrap();
        for k in 1..5 {
            assert!(c4
                .hochster_configurations(k, DEFAULT_ENUMERATION_BUDGET)
                .unwrap()
                .is_empty());
        }
    }

    #[test]
    fn induced_subgraph_keeps_names() {
        let g = two_triangles();
        let sub = g.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(sub.vertices(), &["x1", "x2", "x3"]);
        assert_eq!(sub.num_edges(), 3);
    }
}
