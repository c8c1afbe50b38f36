//! Simplicial complexes on at most 64 vertices, stored by their facets.
//!
//! Every complex carries an ambient index space `0..n` and a ground set
//! `X ⊆ {0..n-1}`. Deletion and link shrink the ground set to `X ∖ {x}` while
//! keeping the ambient indices, so ideals built from subcomplexes live in the
//! same exponent space as the parent. Vertices of `X` that lie in no facet are
//! ghost vertices; each contributes a variable generator to `I_Δ`.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{minimal_transversals, MonomialIdeal};

pub const MAX_VERTICES: usize = 64;

/// A subset of `{0..63}` as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut bits = 0u64;
        for v in indices {
            if v >= MAX_VERTICES {
                return Err(Error::TooManyVertices { requested: v + 1, max: MAX_VERTICES });
            }
            bits |= 1u64 << v;
        }
        Ok(VertexSet(bits))
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    /// All subsets of `self`, in increasing bit order (starting with `∅`).
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some(cur.wrapping_sub(full) & full) };
            Some(VertexSet(cur))
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Inclusion-maximal members of a family, sorted.
pub(crate) fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| (std::cmp::Reverse(s.len()), *s));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialComplex {
    n: usize,
    ground: VertexSet,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// The complex generated by `facets` on the ground set `{0..n-1}`.
    pub fn from_facets(n: usize, facets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { requested: n, max: MAX_VERTICES });
        }
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        Self::on_ground(n, VertexSet::full(n), facets)
    }

    /// Convenience constructor from index lists.
    pub fn from_index_facets(n: usize, facets: &[&[usize]]) -> Result<Self> {
        let sets = facets.iter().map(|f| VertexSet::from_indices(f.iter().copied())).collect::<Result<Vec<_>>>()?;
        Self::from_facets(n, sets)
    }

    /// The complex generated by `facets` on an explicit ground set inside `0..n`.
    pub fn on_ground(n: usize, ground: VertexSet, facets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { requested: n, max: MAX_VERTICES });
        }
        if !ground.is_subset(VertexSet::full(n)) {
            return Err(Error::VertexOutOfRange { vertex: ground.difference(VertexSet::full(n)).iter().next().unwrap() });
        }
        let facets: Vec<VertexSet> = facets.into_iter().collect();
        if facets.is_empty() {
            return Err(Error::EmptyFacetList);
        }
        if let Some(bad) = facets.iter().find(|f| !f.is_subset(ground)) {
            return Err(Error::VertexOutOfRange { vertex: bad.difference(ground).iter().next().unwrap() });
        }
        Ok(Self { n, ground, facets: maximal_sets(facets) })
    }

    /// The simplex on `face`, inside ground set `{0..n-1}`.
    pub fn simplex(n: usize, face: VertexSet) -> Result<Self> {
        Self::from_facets(n, [face])
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Vertices lying in some facet.
    pub fn vertices(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn is_vertex(&self, v: usize) -> bool {
        self.vertices().contains(v)
    }

    /// Dimension of the largest facet; `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    pub fn contains_face(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Every face, sorted by size and then by bits.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut all: Vec<VertexSet> = self.facets.iter().flat_map(|f| f.subsets()).collect();
        all.sort_unstable_by_key(|s| (s.len(), *s));
        all.dedup();
        all
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// True when some vertex lies in every facet.
    pub fn is_cone(&self) -> bool {
        !self.facets.iter().fold(self.ground, |acc, f| acc.intersection(*f)).is_empty()
    }

    fn check_ground_vertex(&self, x: usize) -> Result<()> {
        if !self.ground.contains(x) {
            return Err(Error::VertexOutOfRange { vertex: x });
        }
        Ok(())
    }

    /// `del_Δ(x)`: faces avoiding `x`, on ground set `X ∖ {x}`.
    pub fn deletion(&self, x: usize) -> Result<Self> {
        self.check_ground_vertex(x)?;
        let facets = maximal_sets(self.facets.iter().map(|f| f.without(x)).collect());
        Ok(Self { n: self.n, ground: self.ground.without(x), facets })
    }

    /// `lk_Δ(x)`: `{F ∖ {x} : x ∈ F ∈ Δ}`, on ground set `X ∖ {x}`.
    pub fn link(&self, x: usize) -> Result<Self> {
        self.check_ground_vertex(x)?;
        let facets: Vec<VertexSet> = self.facets.iter().filter(|f| f.contains(x)).map(|f| f.without(x)).collect();
        if facets.is_empty() {
            return Err(Error::NotAVertex { vertex: x });
        }
        Ok(Self { n: self.n, ground: self.ground.without(x), facets: maximal_sets(facets) })
    }

    /// `Δ|_W`, a complex on ground set `W`.
    pub fn induced(&self, w: VertexSet) -> Result<Self> {
        if !w.is_subset(self.ground) {
            return Err(Error::VertexOutOfRange { vertex: w.difference(self.ground).iter().next().unwrap() });
        }
        let facets = maximal_sets(self.facets.iter().map(|f| f.intersection(w)).collect());
        Ok(Self { n: self.n, ground: w, facets })
    }

    /// `I_Δ = ∩ P_{F^c}` over facets `F`; its generators are the minimal non-faces.
    pub fn stanley_reisner_ideal(&self) -> MonomialIdeal {
        let complements: Vec<u64> = self.facets.iter().map(|f| self.ground.difference(*f).bits()).collect();
        MonomialIdeal::from_supports(self.n, minimal_transversals(&complements))
    }

    /// `I_Δ^∨ = (x^{F^c} : F a facet)`.
    pub fn dual_facet_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_supports(self.n, self.facets.iter().map(|f| self.ground.difference(*f).bits()))
    }

    /// Stanley–Reisner complex of a square-free ideal, on ground set `{0..n-1}`.
    pub fn from_stanley_reisner(ideal: &MonomialIdeal) -> Result<Self> {
        let n = ideal.num_vars();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { requested: n, max: MAX_VERTICES });
        }
        Self::from_stanley_reisner_on(ideal, VertexSet::full(n))
    }

    /// Stanley–Reisner complex of a square-free ideal supported in `ground`.
    pub fn from_stanley_reisner_on(ideal: &MonomialIdeal, ground: VertexSet) -> Result<Self> {
        if !ideal.is_squarefree() {
            return Err(Error::NotSquareFree);
        }
        if ideal.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let supports = ideal.supports();
        if let Some(s) = supports.iter().find(|&&s| !VertexSet::from_bits(s).is_subset(ground)) {
            let v = VertexSet::from_bits(*s).difference(ground).iter().next().unwrap();
            return Err(Error::VertexOutOfRange { vertex: v });
        }
        // Facets are complements of minimal covers of the generator supports.
        let facets = minimal_transversals(&supports).into_iter().map(|t| ground.difference(VertexSet::from_bits(t)));
        Self::on_ground(ideal.num_vars(), ground, facets)
    }

    /// `Δ^∨ = {X ∖ F : F ∉ Δ}`, whose facets are the complements of minimal non-faces.
    pub fn alexander_dual(&self) -> Result<Self> {
        let sr = self.stanley_reisner_ideal();
        if sr.is_zero() {
            return Err(Error::VoidDual);
        }
        let facets = sr.supports().into_iter().map(|s| self.ground.difference(VertexSet::from_bits(s)));
        Self::on_ground(self.n, self.ground, facets)
    }

    /// `max |F^c|` over facets.
    pub fn bight(&self) -> usize {
        self.facets.iter().map(|f| self.ground.difference(*f).len()).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_indices(v.iter().copied()).unwrap()
    }

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_index_facets(n, facets).unwrap()
    }

    const X: usize = 0;
    const Y: usize = 1;
    const Z: usize = 2;

    #[test]
    fn from_facets_keeps_antichain() {
        let d = cx(3, &[&[X, Z], &[Y], &[X]]);
        assert_eq!(d.facets(), &[set(&[Y]), set(&[X, Z])]);
        let empty = cx(2, &[&[]]);
        assert_eq!(empty.facets(), &[VertexSet::EMPTY]);
        assert!(cx(3, &[&[X, Y, Z]]).is_simplex());
        assert_eq!(SimplicialComplex::from_index_facets(2, &[&[2]]).unwrap_err(), Error::VertexOutOfRange { vertex: 2 });
        assert_eq!(SimplicialComplex::from_facets(2, vec![]).unwrap_err(), Error::EmptyFacetList);
    }

    #[test]
    fn order_independent_construction() {
        assert_eq!(cx(4, &[&[0, 1], &[2, 3], &[1]]), cx(4, &[&[1], &[2, 3], &[0, 1]]));
    }

    #[test]
    fn deletion_and_link() {
        let d = cx(3, &[&[X, Z], &[Y]]);
        let del = d.deletion(Y).unwrap();
        assert_eq!(del.facets(), &[set(&[X, Z])]);
        assert_eq!(del.ground(), set(&[X, Z]));
        assert_eq!(d.link(Y).unwrap().facets(), &[VertexSet::EMPTY]);

        let s = cx(2, &[&[X, Y]]);
        assert_eq!(s.deletion(X).unwrap().facets(), &[set(&[Y])]);
        assert_eq!(s.link(X).unwrap().facets(), &[set(&[Y])]);

        let (a, b, c, dd) = (0, 1, 2, 3);
        let d = cx(4, &[&[a, b], &[c, dd]]);
        assert_eq!(d.deletion(a).unwrap().facets(), &[set(&[b]), set(&[c, dd])]);
        assert_eq!(d.link(a).unwrap().facets(), &[set(&[b])]);
    }

    #[test]
    fn link_of_non_vertex_is_an_error() {
        let d = cx(3, &[&[X, Z]]);
        assert_eq!(d.link(Y).unwrap_err(), Error::NotAVertex { vertex: Y });
        let del = d.deletion(Y).unwrap();
        assert_eq!(del.facets(), d.facets());
        assert_eq!(del.ground(), set(&[X, Z]));
    }

    #[test]
    fn simplex_and_purity() {
        assert!(cx(3, &[&[X, Y, Z]]).is_simplex());
        assert!(cx(3, &[&[]]).is_simplex());
        assert!(!cx(2, &[&[X], &[Y]]).is_simplex());
        assert!(cx(4, &[&[0, 1], &[2, 3]]).is_pure());
        assert!(!cx(3, &[&[X, Z], &[Y]]).is_pure());
        assert!(cx(3, &[&[X, Y, Z]]).is_pure());
    }

    #[test]
    fn stanley_reisner_examples() {
        let d = cx(3, &[&[X, Z], &[Y]]);
        let expected = MonomialIdeal::from_supports(3, [set(&[X, Y]).bits(), set(&[Y, Z]).bits()]);
        assert_eq!(d.stanley_reisner_ideal(), expected);
        assert!(cx(3, &[&[X, Y, Z]]).stanley_reisner_ideal().is_zero());
        let expected = MonomialIdeal::variables(2, [X, Y]).unwrap();
        assert_eq!(cx(2, &[&[]]).stanley_reisner_ideal(), expected);
    }

    #[test]
    fn complex_of_ideal_examples() {
        let i = MonomialIdeal::from_supports(3, [set(&[X, Y]).bits(), set(&[Y, Z]).bits()]);
        assert_eq!(SimplicialComplex::from_stanley_reisner(&i).unwrap(), cx(3, &[&[X, Z], &[Y]]));
        assert_eq!(SimplicialComplex::from_stanley_reisner(&MonomialIdeal::zero(3)).unwrap(), cx(3, &[&[X, Y, Z]]));
        let vars = MonomialIdeal::variables(2, [X, Y]).unwrap();
        assert_eq!(SimplicialComplex::from_stanley_reisner(&vars).unwrap(), cx(2, &[&[]]));
        assert_eq!(SimplicialComplex::from_stanley_reisner(&MonomialIdeal::unit(2)).unwrap_err(), Error::UnitIdeal);
        let sq = MonomialIdeal::minimalize(1, [crate::Monomial::new(vec![2])]).unwrap();
        assert_eq!(SimplicialComplex::from_stanley_reisner(&sq).unwrap_err(), Error::NotSquareFree);
    }

    #[test]
    fn alexander_dual_examples() {
        assert_eq!(cx(2, &[&[X], &[Y]]).alexander_dual().unwrap(), cx(2, &[&[]]));
        let d = cx(3, &[&[X, Z], &[Y]]);
        assert_eq!(d.alexander_dual().unwrap(), cx(3, &[&[Z], &[X]]));
        assert_eq!(d.alexander_dual().unwrap().alexander_dual().unwrap(), d);
        assert_eq!(cx(3, &[&[X, Y, Z]]).alexander_dual().unwrap_err(), Error::VoidDual);
    }

    #[test]
    fn dual_facet_ideal_examples() {
        let d = cx(3, &[&[X, Z], &[Y]]);
        let expected = MonomialIdeal::from_supports(3, [set(&[Y]).bits(), set(&[X, Z]).bits()]);
        assert_eq!(d.dual_facet_ideal(), expected);
        assert_eq!(cx(2, &[&[X], &[Y]]).dual_facet_ideal(), MonomialIdeal::variables(2, [X, Y]).unwrap());
        assert!(cx(3, &[&[X, Y, Z]]).dual_facet_ideal().is_unit());
    }

    #[test]
    fn bight_examples() {
        assert_eq!(cx(3, &[&[X, Z], &[Y]]).bight(), 2);
        assert_eq!(cx(3, &[&[X, Y, Z]]).bight(), 0);
        assert_eq!(cx(4, &[&[]]).bight(), 4);
    }

    #[test]
    fn induced_subcomplex_examples() {
        let d = cx(3, &[&[X, Z], &[Y]]);
        assert_eq!(d.induced(set(&[X, Y])).unwrap().facets(), &[set(&[X]), set(&[Y])]);
        assert_eq!(d.induced(VertexSet::EMPTY).unwrap().facets(), &[VertexSet::EMPTY]);
        assert_eq!(d.induced(d.ground()).unwrap(), d);
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s = set(&[1, 3, 4]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
    }
}
