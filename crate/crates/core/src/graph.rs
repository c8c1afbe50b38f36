//! Simple graphs, their edge and cover ideals, and the graph-side recursions.

use std::collections::HashMap;

use crate::betti::{BettiTable, Subject};
use crate::complex::{SimplicialComplex, VertexSet, MAX_VERTICES};
use crate::corpus::variables_tree;
use crate::decompose::{is_shedding, Decomposer, DecompositionTree};
use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::monomial::{minimal_transversals, MonomialIdeal};
use crate::oracle::{betti_oracle, has_linear_resolution, is_cohen_macaulay};
use crate::split::{Splitter, SplitTree};

/// An undirected simple graph on a subset of `0..n`.
///
/// Removing vertices keeps `n`, so ideals of subgraphs stay in the same ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    present: VertexSet,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { requested: n, max: MAX_VERTICES });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v) });
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            adj[u] = adj[u].with(v);
            adj[v] = adj[v].with(u);
        }
        Ok(Self { n, present: VertexSet::full(n), adj })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// Size of the ambient vertex range `0..n`.
    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.present
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.present.iter().flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v))).collect()
    }

    pub fn num_edges(&self) -> usize {
        self.present.iter().map(|u| self.adj[u].len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.adj[v]))
    }

    /// `G ∖ S`.
    pub fn remove_vertices(&self, removed: VertexSet) -> Self {
        let present = self.present.difference(removed);
        let adj = (0..self.n)
            .map(|v| if present.contains(v) { self.adj[v].intersection(present) } else { VertexSet::EMPTY })
            .collect();
        Self { n: self.n, present, adj }
    }

    /// Complement on the same vertex set.
    pub fn complement(&self) -> Self {
        let adj = (0..self.n)
            .map(|v| if self.present.contains(v) { self.present.difference(self.adj[v]).without(v) } else { VertexSet::EMPTY })
            .collect();
        Self { n: self.n, present: self.present, adj }
    }

    /// `I(G) = (x_u x_v : uv ∈ E)`.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_supports(self.n, self.edges().into_iter().map(|(u, v)| 1u64 << u | 1u64 << v))
    }

    /// `I(G)^∨ = ∩ (x_u, x_v)`, generated by the minimal vertex covers; `(1)` when edgeless.
    pub fn cover_ideal(&self) -> MonomialIdeal {
        let edges: Vec<u64> = self.edges().into_iter().map(|(u, v)| 1u64 << u | 1u64 << v).collect();
        MonomialIdeal::from_supports(self.n, minimal_transversals(&edges))
    }

    /// Faces are the independent sets.
    pub fn independence_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_stanley_reisner_on(&self.edge_ideal(), self.present).expect("edge ideals are square-free")
    }

    /// Faces are the cliques.
    pub fn clique_complex(&self) -> SimplicialComplex {
        self.complement().independence_complex()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![None; self.n];
        for start in self.present.iter() {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                let s = side[u].unwrap();
                for v in self.adj[u].iter() {
                    match side[v] {
                        None => {
                            side[v] = Some(!s);
                            stack.push(v);
                        }
                        Some(t) if t == s => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// A perfect elimination order found by maximum cardinality search, or
    /// `None` when the graph is not chordal.
    pub fn perfect_elimination_order(&self) -> Option<Vec<usize>> {
        let mut weight = vec![0usize; self.n];
        let mut numbered = VertexSet::EMPTY;
        let mut visit = Vec::with_capacity(self.present.len());
        for _ in 0..self.present.len() {
            let v = self.present.difference(numbered).iter().max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))?;
            visit.push(v);
            numbered = numbered.with(v);
            for u in self.adj[v].difference(numbered).iter() {
                weight[u] += 1;
            }
        }
        visit.reverse();
        self.is_perfect_elimination_order(&visit).then_some(visit)
    }

    /// Each vertex's later neighbours form a clique.
    pub fn is_perfect_elimination_order(&self, order: &[usize]) -> bool {
        let mut later = self.present;
        if order.len() != later.len() || !order.iter().all(|&v| later.contains(v)) {
            return false;
        }
        order.iter().all(|&v| {
            later = later.without(v);
            self.is_clique(self.adj[v].intersection(later))
        })
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_order().is_some()
    }

    /// Lowest vertex whose neighbourhood is a clique.
    pub fn simplicial_vertex(&self) -> Option<usize> {
        self.present.iter().find(|&v| self.is_clique(self.adj[v]))
    }

    /// Every `y` with `N[x] ⊆ N[y]` for some `x ≠ y`.
    pub fn domination_shedding(&self) -> Vec<usize> {
        self.present
            .iter()
            .filter(|&y| {
                self.present.without(y).iter().any(|x| self.closed_neighborhood(x).is_subset(self.closed_neighborhood(y)))
            })
            .collect()
    }
}

/// Recursion certificate for sequential Cohen–Macaulayness of a bipartite graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ScmCertificate {
    Edgeless,
    /// `deg x = 1`, `y` its neighbour, with certificates for `G ∖ N[x]` and `G ∖ N[y]`.
    Step { x: usize, y: usize, without_x: Box<ScmCertificate>, without_y: Box<ScmCertificate> },
}

/// Recursive test for sequentially Cohen–Macaulay bipartite graphs.
pub fn is_scm_bipartite(graph: &Graph) -> Result<Option<ScmCertificate>> {
    if !graph.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    Ok(scm(graph, &mut HashMap::new()))
}

fn scm(graph: &Graph, memo: &mut HashMap<VertexSet, Option<ScmCertificate>>) -> Option<ScmCertificate> {
    if graph.num_edges() == 0 {
        return Some(ScmCertificate::Edgeless);
    }
    if let Some(hit) = memo.get(&graph.vertex_set()) {
        return hit.clone();
    }
    let mut found = None;
    for x in graph.vertex_set().iter().filter(|&x| graph.degree(x) == 1) {
        let y = graph.neighbors(x).iter().next().unwrap();
        let Some(left) = scm(&graph.remove_vertices(graph.closed_neighborhood(x)), memo) else { continue };
        let Some(right) = scm(&graph.remove_vertices(graph.closed_neighborhood(y)), memo) else { continue };
        found = Some(ScmCertificate::Step { x, y, without_x: Box::new(left), without_y: Box::new(right) });
        break;
    }
    memo.insert(graph.vertex_set(), found.clone());
    found
}

/// `β_{i,j}(I(G)^∨) = β_{i,j-1}(I(G')^∨) + β_{i,j-t}(I(G'')^∨) + β_{i-1,j-t-1}(I(G'')^∨)`
/// with `G' = G ∖ v`, `G'' = G ∖ N[v]` and `t = deg v`.
///
/// Sub-tables recurse while the subgraph has a usable shedding vertex and come
/// from the oracle otherwise.
pub fn cover_betti_recursive(graph: &Graph, v: usize, field: Field) -> Result<BettiTable> {
    if !graph.vertex_set().contains(v) {
        return Err(Error::VertexOutOfRange { vertex: v });
    }
    if !is_shedding(&graph.independence_complex(), v)? {
        return Err(Error::NotShedding { vertex: v });
    }
    let mut decomposer = Decomposer::new();
    cover_step(graph, v, field, &mut decomposer)
}

fn cover_step(graph: &Graph, v: usize, field: Field, decomposer: &mut Decomposer) -> Result<BettiTable> {
    let t = graph.degree(v);
    let deleted = cover_table(&graph.remove_vertices(VertexSet::singleton(v)), field, decomposer)?;
    let linked = cover_table(&graph.remove_vertices(graph.closed_neighborhood(v)), field, decomposer)?;
    let mut out = BettiTable::new(Subject::Ideal);
    for ((i, j), b) in deleted.entries() {
        out.add(i, j + 1, b);
    }
    for ((i, j), b) in linked.entries() {
        out.add(i, j + t, b);
        out.add(i + 1, j + t + 1, b);
    }
    Ok(out)
}

fn cover_table(graph: &Graph, field: Field, decomposer: &mut Decomposer) -> Result<BettiTable> {
    if graph.num_edges() == 0 {
        return Ok(BettiTable::from_entries(Subject::Ideal, [((0, 0), 1)]));
    }
    let complex = graph.independence_complex();
    // A vertex is usable when it sheds and both its deletion and link decompose.
    let usable = |y: usize, decomposer: &mut Decomposer| {
        matches!(is_shedding(&complex, y), Ok(true))
            && decomposer.decompose(&complex.deletion(y).expect("vertex")).is_some()
            && decomposer.decompose(&complex.link(y).expect("vertex")).is_some()
    };
    let preferred = graph.domination_shedding().into_iter().find(|&y| usable(y, decomposer));
    let chosen = preferred.or_else(|| match decomposer.decompose(&complex) {
        Some(DecompositionTree::Node { vertex, .. }) => Some(vertex),
        _ => None,
    });
    match chosen {
        Some(y) => cover_step(graph, y, field, decomposer),
        None => betti_oracle(&graph.cover_ideal(), field),
    }
}

/// Split tree for `I(G^c)` of a chordal graph: peel a simplicial vertex `x`,
/// with `I₁` the variables outside `N[x]` and `I₂ = I((G ∖ x)^c)`.
pub fn chordal_split(graph: &Graph) -> Result<SplitTree> {
    if !graph.is_chordal() {
        return Err(Error::NotChordal);
    }
    Ok(chordal_tree(graph))
}

fn chordal_tree(graph: &Graph) -> SplitTree {
    let ideal = graph.complement().edge_ideal();
    match ideal.generators() {
        [] => return SplitTree::Zero,
        [u] => return SplitTree::Leaf(u.clone()),
        _ => {}
    }
    let x = graph.simplicial_vertex().expect("chordal graphs have simplicial vertices");
    let rest = chordal_tree(&graph.remove_vertices(VertexSet::singleton(x)));
    let outside = graph.vertex_set().difference(graph.closed_neighborhood(x));
    if outside.is_empty() {
        return rest;
    }
    SplitTree::Node { var: x, left: Box::new(variables_tree(graph.n, outside)), right: Box::new(rest) }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FrobergReport {
    pub complement_chordal: bool,
    pub edge_ideal_linear_resolution: bool,
    pub edge_ideal_vertex_splittable: bool,
}

impl FrobergReport {
    pub fn all_agree(&self) -> bool {
        self.complement_chordal == self.edge_ideal_linear_resolution
            && self.complement_chordal == self.edge_ideal_vertex_splittable
    }
}

/// Chordality of `G^c`, linearity of the resolution of `I(G)`, and vertex
/// splittability of `I(G)`, each computed independently.
pub fn froberg_equivalence(graph: &Graph, field: Field) -> Result<FrobergReport> {
    froberg_with(graph, field, &mut Splitter::new())
}

pub fn froberg_with(graph: &Graph, field: Field, splitter: &mut Splitter) -> Result<FrobergReport> {
    if graph.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    let ideal = graph.edge_ideal();
    Ok(FrobergReport {
        complement_chordal: graph.complement().is_chordal(),
        edge_ideal_linear_resolution: has_linear_resolution(&ideal, field)?,
        edge_ideal_vertex_splittable: splitter.split(&ideal).is_some(),
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ChordalDualReport {
    pub complement_chordal: bool,
    pub dual_vertex_decomposable: bool,
    pub dual_cohen_macaulay: bool,
}

impl ChordalDualReport {
    pub fn all_agree(&self) -> bool {
        self.complement_chordal == self.dual_vertex_decomposable && self.complement_chordal == self.dual_cohen_macaulay
    }
}

/// Chordality of `G^c`, and vertex decomposability and Cohen–Macaulayness of
/// the Alexander dual of the independence complex.
pub fn corchor1_equivalence(graph: &Graph, field: Field) -> Result<ChordalDualReport> {
    corchor1_with(graph, field, &mut Decomposer::new())
}

pub fn corchor1_with(graph: &Graph, field: Field, decomposer: &mut Decomposer) -> Result<ChordalDualReport> {
    if graph.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    let dual = graph.independence_complex().alexander_dual()?;
    Ok(ChordalDualReport {
        complement_chordal: graph.complement().is_chordal(),
        dual_vertex_decomposable: decomposer.decompose(&dual).is_some(),
        dual_cohen_macaulay: is_cohen_macaulay(&dual, field)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn sf(n: usize, supports: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(n, supports.iter().map(|s| Monomial::from_support(n, s.iter().copied()).unwrap()))
            .unwrap()
    }

    fn table(entries: &[((usize, usize), u64)]) -> BettiTable {
        BettiTable::from_entries(Subject::Ideal, entries.iter().copied())
    }

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_indices(v.iter().copied()).unwrap()
    }

    fn two_k2() -> Graph {
        Graph::new(4, [(0, 1), (2, 3)]).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|l| (0, l))).unwrap()
    }

    #[test]
    fn edge_ideal_examples() {
        assert_eq!(Graph::path(3).unwrap().edge_ideal(), sf(3, &[&[0, 1], &[1, 2]]));
        assert!(Graph::empty(3).unwrap().edge_ideal().is_zero());
        assert_eq!(Graph::cycle(4).unwrap().edge_ideal(), sf(4, &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]]));
    }

    #[test]
    fn cover_ideal_examples() {
        assert_eq!(Graph::path(3).unwrap().cover_ideal(), sf(3, &[&[1], &[0, 2]]));
        assert_eq!(Graph::path(4).unwrap().cover_ideal(), sf(4, &[&[1, 2], &[1, 3], &[0, 2]]));
        assert_eq!(Graph::path(2).unwrap().cover_ideal(), sf(2, &[&[0], &[1]]));
        assert!(Graph::empty(2).unwrap().cover_ideal().is_unit());
        let g = Graph::cycle(5).unwrap();
        assert_eq!(g.cover_ideal(), g.edge_ideal().alexander_dual().unwrap());
        assert_eq!(g.independence_complex().dual_facet_ideal(), g.cover_ideal());
    }

    #[test]
    fn complexes_of_graphs() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.complement().edges(), vec![(0, 2)]);
        assert_eq!(p3.independence_complex(), SimplicialComplex::from_index_facets(3, &[&[0, 2], &[1]]).unwrap());
        assert!(Graph::complete(3).unwrap().clique_complex().is_simplex());
    }

    #[test]
    fn chordality() {
        let p4 = Graph::path(4).unwrap();
        let order = p4.perfect_elimination_order().unwrap();
        assert!(p4.is_perfect_elimination_order(&order));
        assert!(!Graph::cycle(4).unwrap().is_chordal());
        assert!(Graph::complete(4).unwrap().is_chordal());
        assert!(!Graph::cycle(5).unwrap().is_chordal());
        // C4 plus a chord
        assert!(Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap().is_chordal());
        assert!(!p4.is_perfect_elimination_order(&[1, 0, 2, 3]));
    }

    #[test]
    fn simplicial_vertices() {
        assert_eq!(Graph::path(4).unwrap().simplicial_vertex(), Some(0));
        assert_eq!(Graph::cycle(4).unwrap().simplicial_vertex(), None);
        assert_eq!(Graph::complete(3).unwrap().simplicial_vertex(), Some(0));
    }

    #[test]
    fn domination_examples() {
        assert_eq!(Graph::path(3).unwrap().domination_shedding(), vec![1]);
        assert!(Graph::cycle(4).unwrap().domination_shedding().is_empty());
        assert_eq!(star(3).domination_shedding(), vec![0]);
        let g = Graph::path(5).unwrap();
        for y in g.domination_shedding() {
            assert!(is_shedding(&g.independence_complex(), y).unwrap());
        }
    }

    #[test]
    fn scm_examples() {
        let cert = is_scm_bipartite(&Graph::path(4).unwrap()).unwrap().unwrap();
        assert!(matches!(cert, ScmCertificate::Step { x: 0, y: 1, .. }));
        assert!(is_scm_bipartite(&Graph::cycle(4).unwrap()).unwrap().is_none());
        assert_eq!(is_scm_bipartite(&Graph::empty(3).unwrap()).unwrap(), Some(ScmCertificate::Edgeless));
        assert_eq!(is_scm_bipartite(&Graph::cycle(3).unwrap()).unwrap_err(), Error::NotBipartite);
    }

    #[test]
    fn cover_recursion_examples() {
        let p4 = Graph::path(4).unwrap();
        let expected = table(&[((0, 2), 3), ((1, 3), 2)]);
        assert_eq!(cover_betti_recursive(&p4, 1, Field::Rational).unwrap(), expected);
        assert_eq!(betti_oracle(&p4.cover_ideal(), Field::Rational).unwrap(), expected);
        let p3 = Graph::path(3).unwrap();
        let expected = table(&[((0, 1), 1), ((0, 2), 1), ((1, 3), 1)]);
        assert_eq!(cover_betti_recursive(&p3, 1, Field::Rational).unwrap(), expected);
        let edge = Graph::path(2).unwrap();
        for v in 0..2 {
            assert_eq!(cover_betti_recursive(&edge, v, Field::Rational).unwrap(), table(&[((0, 1), 2), ((1, 2), 1)]));
        }
        assert_eq!(cover_betti_recursive(&p4, 0, Field::Rational).unwrap_err(), Error::NotShedding { vertex: 0 });
    }

    #[test]
    fn chordal_split_examples() {
        let p4 = Graph::path(4).unwrap();
        let tree = chordal_split(&p4).unwrap();
        let SplitTree::Node { var, left, right } = &tree else { panic!("expected a node") };
        assert_eq!(*var, 0);
        assert_eq!(left.ideal(4).unwrap(), sf(4, &[&[2], &[3]]));
        assert_eq!(**right, SplitTree::Leaf(Monomial::from_support(4, [1, 3]).unwrap()));
        assert_eq!(tree.ideal(4).unwrap(), sf(4, &[&[0, 2], &[0, 3], &[1, 3]]));
        assert_eq!(chordal_split(&Graph::path(3).unwrap()).unwrap(), SplitTree::Leaf(Monomial::from_support(3, [0, 2]).unwrap()));
        assert_eq!(chordal_split(&Graph::complete(4).unwrap()).unwrap(), SplitTree::Zero);
        assert_eq!(chordal_split(&Graph::cycle(4).unwrap()).unwrap_err(), Error::NotChordal);
    }

    #[test]
    fn froberg_examples() {
        let r = froberg_equivalence(&Graph::cycle(4).unwrap(), Field::Rational).unwrap();
        assert!(r.complement_chordal && r.edge_ideal_linear_resolution && r.edge_ideal_vertex_splittable);
        let r = froberg_equivalence(&two_k2(), Field::Rational).unwrap();
        assert!(!r.complement_chordal && !r.edge_ideal_linear_resolution && !r.edge_ideal_vertex_splittable);
        let r = froberg_equivalence(&Graph::complete(3).unwrap(), Field::Rational).unwrap();
        assert!(r.all_agree() && r.complement_chordal);
        assert_eq!(froberg_equivalence(&Graph::empty(3).unwrap(), Field::Rational).unwrap_err(), Error::NoEdges);
    }

    #[test]
    fn chordal_dual_examples() {
        let r = corchor1_equivalence(&Graph::path(3).unwrap(), Field::Rational).unwrap();
        assert!(r.complement_chordal && r.dual_vertex_decomposable && r.dual_cohen_macaulay);
        let r = corchor1_equivalence(&two_k2(), Field::Rational).unwrap();
        assert!(!r.complement_chordal && !r.dual_vertex_decomposable && !r.dual_cohen_macaulay);
        let r = corchor1_equivalence(&Graph::cycle(5).unwrap(), Field::Rational).unwrap();
        assert!(!r.complement_chordal && !r.dual_vertex_decomposable && !r.dual_cohen_macaulay);
    }

    #[test]
    fn removal_keeps_the_ring() {
        let g = Graph::path(4).unwrap().remove_vertices(set(&[1]));
        assert_eq!(g.num_vertices(), 4);
        assert_eq!(g.edges(), vec![(2, 3)]);
        assert_eq!(g.independence_complex().ground(), set(&[0, 2, 3]));
    }
}
