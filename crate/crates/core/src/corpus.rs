//! Exhaustive and seeded random families of complexes, graphs and ideals.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::split::SplitTree;

pub type CorpusRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every simplicial complex on ground set `0..n`, i.e. every non-empty
/// antichain of subsets, including `{∅}`.
pub fn all_complexes(n: usize) -> Result<Vec<SimplicialComplex>> {
    let mut out = Vec::new();
    for_each_complex(n, |c| out.push(c))?;
    Ok(out)
}

/// Streams the complexes of [`all_complexes`] without collecting them;
/// there are 7,828,353 on six vertices.
pub fn for_each_complex(n: usize, mut f: impl FnMut(SimplicialComplex)) -> Result<()> {
    if n == 0 || n > 6 {
        return Err(Error::InvalidParameter(format!("exhaustive enumeration needs 1 <= n <= 6, got {n}")));
    }
    let subsets: Vec<VertexSet> = VertexSet::full(n).subsets().collect();
    let mut chosen = Vec::new();
    extend_antichains(&subsets, 0, &mut chosen, &mut |facets| {
        f(SimplicialComplex::from_facets(n, facets.iter().copied()).expect("valid facets"));
    });
    Ok(())
}

fn extend_antichains(
    subsets: &[VertexSet],
    from: usize,
    chosen: &mut Vec<VertexSet>,
    emit: &mut impl FnMut(&[VertexSet]),
) {
    if !chosen.is_empty() {
        emit(chosen);
    }
    for k in from..subsets.len() {
        let s = subsets[k];
        if chosen.iter().all(|&c| !c.is_subset(s) && !s.is_subset(c)) {
            chosen.push(s);
            extend_antichains(subsets, k + 1, chosen, emit);
            chosen.pop();
        }
    }
}

/// Every labelled simple graph on `0..n`.
pub fn all_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > 8 {
        return Err(Error::InvalidParameter(format!("exhaustive enumeration needs n <= 8, got {n}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let count = 1u64 << pairs.len();
    Ok((0..count).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
        Graph::new(n, edges).expect("valid edges")
    }))
}

/// Up to `facets` random faces on `0..n`, each vertex kept with probability one half.
pub fn random_complex(rng: &mut CorpusRng, n: usize, facets: usize) -> Result<SimplicialComplex> {
    if facets == 0 {
        return Err(Error::InvalidParameter("facet count must be positive".into()));
    }
    let sets: Vec<VertexSet> =
        (0..facets).map(|_| VertexSet::from_bits(rng.gen::<u64>() & VertexSet::full(n).bits())).collect();
    SimplicialComplex::from_facets(n, sets)
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph(rng: &mut CorpusRng, n: usize, p: f64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} is not in [0, 1]")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let edges: Vec<(usize, usize)> = pairs.into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, edges)
}

/// Shape of random splittable ideals.
#[derive(Clone, Copy, Debug)]
pub struct SplittableParams {
    pub num_vars: usize,
    /// Each sample draws its tree depth uniformly from `1..=depth`.
    pub depth: usize,
    pub max_exponent: u32,
    pub min_gens: usize,
    pub max_gens: usize,
}

impl Default for SplittableParams {
    fn default() -> Self {
        Self { num_vars: 7, depth: 6, max_exponent: 2, min_gens: 2, max_gens: 12 }
    }
}

/// A vertex splittable ideal together with the tree it was built from.
#[derive(Clone, Debug)]
pub struct SplittableSample {
    pub ideal: MonomialIdeal,
    pub tree: SplitTree,
}

/// Samples a random split tree and returns it with its ideal; trees that
/// break the node conditions or the generator bounds are redrawn.
pub fn random_splittable(rng: &mut CorpusRng, params: SplittableParams) -> Result<SplittableSample> {
    let SplittableParams { num_vars, depth, max_exponent, min_gens, max_gens } = params;
    if num_vars == 0 || num_vars > 16 || max_exponent == 0 || min_gens > max_gens || max_gens == 0 {
        return Err(Error::InvalidParameter(format!("{params:?}")));
    }
    let vars: Vec<usize> = (0..num_vars).collect();
    let mut builder = TreeBuilder { rng, n: num_vars, max_exponent };
    for _ in 0..10_000 {
        let d = builder.rng.gen_range(1..=depth.max(1));
        let tree = builder.tree(&vars, d);
        if let Ok(ideal) = tree.ideal(num_vars) {
            if (min_gens..=max_gens).contains(&ideal.len()) {
                return Ok(SplittableSample { ideal, tree });
            }
        }
    }
    Err(Error::InvalidParameter(format!("no sample within the generator bounds for {params:?}")))
}

/// `count` samples from one seed.
pub fn splittable_corpus(seed: u64, count: usize, params: SplittableParams) -> Result<Vec<SplittableSample>> {
    let mut r = rng(seed);
    (0..count).map(|_| random_splittable(&mut r, params)).collect()
}

struct TreeBuilder<'a> {
    rng: &'a mut CorpusRng,
    n: usize,
    max_exponent: u32,
}

impl TreeBuilder<'_> {
    fn tree(&mut self, vars: &[usize], depth: usize) -> SplitTree {
        if depth == 0 || vars.is_empty() || self.rng.gen_bool(0.05) {
            return self.leaf(vars);
        }
        let x = *vars.choose(self.rng).unwrap();
        let rest: Vec<usize> = vars.iter().copied().filter(|&v| v != x).collect();
        let right = self.right_tree(&rest, depth - 1);
        let right_ideal = right.ideal(self.n).unwrap_or_else(|_| MonomialIdeal::zero(self.n));
        let shadow = self.shadow(&right_ideal);
        let left = self.superset(&shadow, &rest, depth - 1);
        SplitTree::Node { var: x, left: Box::new(left), right: Box::new(right) }
    }

    /// A tree for `I₂`; `(1)` is excluded since it would force `I₁ = (1)`
    /// and a shared generator.
    fn right_tree(&mut self, vars: &[usize], depth: usize) -> SplitTree {
        match self.tree(vars, depth) {
            SplitTree::Leaf(u) if u.is_one() => SplitTree::Zero,
            // A variable in I₂ would also force I₁ = (1); raise the degree.
            SplitTree::Leaf(u) if u.degree() == 1 => {
                let v = u.support().next().unwrap();
                let partners: Vec<usize> = vars.iter().copied().filter(|&w| w != v || self.max_exponent >= 2).collect();
                match partners.choose(self.rng) {
                    Some(&w) => SplitTree::Leaf(u.times_var(w).expect("small exponents")),
                    None => SplitTree::Zero,
                }
            }
            t => t,
        }
    }

    fn leaf(&mut self, vars: &[usize]) -> SplitTree {
        match self.rng.gen_range(0..20) {
            0 => SplitTree::Zero,
            1 => SplitTree::Leaf(Monomial::one(self.n)),
            _ => {
                let mut exps = vec![0u32; self.n];
                for &v in vars {
                    if self.rng.gen_bool(0.4) {
                        exps[v] = self.rng.gen_range(1..=self.max_exponent);
                    }
                }
                if exps.iter().all(|&e| e == 0) {
                    if let Some(&v) = vars.choose(self.rng) {
                        exps[v] = 1;
                    }
                }
                SplitTree::Leaf(Monomial::new(exps))
            }
        }
    }

    /// Each generator divided by one of its variables, so that any ideal
    /// containing the result has none of the original generators as minimal
    /// generators. Units are kept.
    fn shadow(&mut self, ideal: &MonomialIdeal) -> MonomialIdeal {
        let gens = ideal.generators().iter().map(|g| {
            let support: Vec<usize> = g.support().collect();
            match support.choose(self.rng) {
                Some(&v) => g.divide_by_var(v).expect("v divides g"),
                None => g.clone(),
            }
        });
        MonomialIdeal::minimalize(self.n, gens.collect::<Vec<_>>()).expect("same ring")
    }

    /// A non-zero splittable tree over `vars` whose ideal contains `target`.
    fn superset(&mut self, target: &MonomialIdeal, vars: &[usize], depth: usize) -> SplitTree {
        if target.is_zero() {
            return match self.tree(vars, depth) {
                SplitTree::Zero => SplitTree::Leaf(Monomial::one(self.n)),
                t => t,
            };
        }
        // Extra generators let I₁ grow beyond what I₂ forces.
        let mut target = target.clone();
        while self.rng.gen_bool(0.5) {
            if let SplitTree::Leaf(u) = self.leaf(vars) {
                target = target.sum(&MonomialIdeal::principal(u)).expect("same ring");
            }
        }
        let target = &target;
        let unit = SplitTree::Leaf(Monomial::one(self.n));
        let choice = if depth == 0 { self.rng.gen_range(0..5) } else { self.rng.gen_range(0..20) };
        match choice {
            0 => unit,
            1 => {
                let gcd = target.generators().iter().skip(1).fold(target.generators()[0].clone(), |acc, g| acc.gcd(g).unwrap());
                let exps = gcd.exponents().iter().map(|&e| if e == 0 { 0 } else { self.rng.gen_range(0..=e) }).collect();
                SplitTree::Leaf(Monomial::new(exps))
            }
            2..=4 => {
                if target.is_unit() {
                    return unit;
                }
                let cover = target.generators().iter().fold(VertexSet::EMPTY, |acc, g| {
                    let support: Vec<usize> = g.support().collect();
                    acc.with(*support.choose(self.rng).unwrap())
                });
                variables_tree(self.n, cover)
            }
            _ if depth > 0 => {
                let gens = target.generators();
                let candidates: Vec<usize> =
                    vars.iter().copied().filter(|&y| gens.iter().all(|g| g.exponent(y) <= 1)).collect();
                let Some(&y) = candidates.choose(self.rng) else { return unit };
                let rest: Vec<usize> = vars.iter().copied().filter(|&v| v != y).collect();
                let (with_y, without_y): (Vec<&Monomial>, Vec<&Monomial>) = gens.iter().partition(|g| g.exponent(y) == 1);
                let without = MonomialIdeal::minimalize(self.n, without_y.into_iter().cloned()).unwrap();
                let right =
                    if without.is_zero() { self.right_tree(&rest, depth - 1) } else { self.superset(&without, &rest, depth - 1) };
                if matches!(&right, SplitTree::Leaf(u) if u.is_one()) {
                    return unit;
                }
                let right_ideal = right.ideal(self.n).unwrap_or_else(|_| MonomialIdeal::zero(self.n));
                let quotients = with_y.into_iter().map(|g| g.divide_by_var(y).unwrap());
                let shadow = self.shadow(&right_ideal);
                let needed = MonomialIdeal::minimalize(self.n, shadow.generators().iter().cloned().chain(quotients)).unwrap();
                let left = self.superset(&needed, &rest, depth - 1);
                SplitTree::Node { var: y, left: Box::new(left), right: Box::new(right) }
            }
            _ => unit,
        }
    }
}

/// `(x_{v1}, …, x_{vk}) = x_{v1}·(1) + (x_{v2}, …, x_{vk})`.
pub fn variables_tree(n: usize, vars: VertexSet) -> SplitTree {
    let mut it = vars.iter();
    let Some(first) = it.next() else { return SplitTree::Zero };
    let rest = vars.without(first);
    if rest.is_empty() {
        return SplitTree::Leaf(Monomial::var(n, first).expect("in range"));
    }
    SplitTree::Node {
        var: first,
        left: Box::new(SplitTree::Leaf(Monomial::one(n))),
        right: Box::new(variables_tree(n, rest)),
    }
}
