//! Monomials and monomial ideals over a fixed set of variables.
//!
//! A [`MonomialIdeal`] always stores its minimal generating set, sorted by
//! degree and then by descending exponent vector, so two ideals are equal
//! exactly when their generator lists are equal.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// A monomial `x_0^{e_0} ... x_{n-1}^{e_{n-1}}`, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    /// The unit monomial in `n` variables.
    pub fn one(n: usize) -> Self {
        Self { exps: vec![0; n] }
    }

    pub fn var(n: usize, index: usize) -> Result<Self> {
        if index >= n {
            return Err(Error::VariableOutOfRange { index, num_vars: n });
        }
        let mut exps = vec![0; n];
        exps[index] = 1;
        Ok(Self { exps })
    }

    /// Square-free monomial `x^S` for a set of variable indices.
    pub fn from_support(n: usize, support: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut exps = vec![0; n];
        for index in support {
            if index >= n {
                return Err(Error::VariableOutOfRange { index, num_vars: n });
            }
            exps[index] = 1;
        }
        Ok(Self { exps })
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of the variables that occur in the monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Support as a bit mask; only meaningful for at most 64 variables.
    pub(crate) fn support_mask(&self) -> u64 {
        self.support().fold(0u64, |m, i| m | (1u64 << i))
    }

    fn check_len(&self, other: &Monomial) -> Result<()> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::LengthMismatch { expected: self.exps.len(), found: other.exps.len() });
        }
        Ok(())
    }

    /// True iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_len(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect() }
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_len(other)?;
        Ok(Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect() })
    }

    /// `self / gcd(self, other)`.
    pub(crate) fn strip_common(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.saturating_sub(b)).collect(),
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn quotient(&self, other: &Monomial) -> Result<Option<Monomial>> {
        self.check_len(other)?;
        if !other.divides_unchecked(self) {
            return Ok(None);
        }
        Ok(Some(self.strip_common(other)))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_len(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    pub fn times_var(&self, index: usize) -> Result<Monomial> {
        if index >= self.exps.len() {
            return Err(Error::VariableOutOfRange { index, num_vars: self.exps.len() });
        }
        let mut exps = self.exps.clone();
        exps[index] = exps[index].checked_add(1).ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { exps })
    }

    /// Removes one factor of `x_index`; `None` if the variable does not occur.
    pub fn divide_by_var(&self, index: usize) -> Option<Monomial> {
        if self.exps.get(index).copied().unwrap_or(0) == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[index] -= 1;
        Some(Monomial { exps })
    }
}

/// Canonical generator order: by degree, then by descending exponent vector.
fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.exps.cmp(&a.exps))
}

/// A monomial ideal, represented by its minimal generating set `G(I)`.
///
/// The zero ideal has no generators; the unit ideal is generated by `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    num_vars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, keeping only minimal generators.
    pub fn minimalize(num_vars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut all: Vec<Monomial> = Vec::new();
        for g in gens {
            if g.num_vars() != num_vars {
                return Err(Error::LengthMismatch { expected: num_vars, found: g.num_vars() });
            }
            all.push(g);
        }
        Ok(Self::minimalize_unchecked(num_vars, all))
    }

    pub(crate) fn minimalize_unchecked(num_vars: usize, mut all: Vec<Monomial>) -> Self {
        all.sort_by(canonical_cmp);
        all.dedup();
        let mut gens: Vec<Monomial> = Vec::with_capacity(all.len());
        for g in all {
            // Candidates arrive by ascending degree, so only kept ones can divide g.
            if !gens.iter().any(|h| h.divides_unchecked(&g)) {
                gens.push(g);
            }
        }
        Self { num_vars, gens }
    }

    pub fn zero(num_vars: usize) -> Self {
        Self { num_vars, gens: Vec::new() }
    }

    pub fn unit(num_vars: usize) -> Self {
        Self { num_vars, gens: vec![Monomial::one(num_vars)] }
    }

    pub fn principal(m: Monomial) -> Self {
        Self { num_vars: m.num_vars(), gens: vec![m] }
    }

    /// The ideal generated by the listed variables.
    pub fn variables(num_vars: usize, vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        let gens = vars.into_iter().map(|v| Monomial::var(num_vars, v)).collect::<Result<Vec<_>>>()?;
        Ok(Self::minimalize_unchecked(num_vars, gens))
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// True iff every generator has the same degree (vacuously true for zero).
    pub fn is_equigenerated(&self) -> bool {
        self.gens.windows(2).all(|w| w[0].degree() == w[1].degree())
    }

    /// True iff some generator is divisible by `x_index`.
    pub fn involves(&self, index: usize) -> bool {
        self.gens.iter().any(|g| g.exps.get(index).copied().unwrap_or(0) > 0)
    }

    fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if m.num_vars() != self.num_vars {
            return Err(Error::LengthMismatch { expected: self.num_vars, found: m.num_vars() });
        }
        Ok(())
    }

    fn check_ideal(&self, other: &MonomialIdeal) -> Result<()> {
        if other.num_vars != self.num_vars {
            return Err(Error::LengthMismatch { expected: self.num_vars, found: other.num_vars });
        }
        Ok(())
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_monomial(m)?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(m))
    }

    /// The colon ideal `(I : m)`.
    pub fn colon(&self, m: &Monomial) -> Result<Self> {
        self.check_monomial(m)?;
        Ok(Self::minimalize_unchecked(self.num_vars, self.gens.iter().map(|g| g.strip_common(m)).collect()))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ideal(other)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm_unchecked(b));
            }
        }
        Ok(Self::minimalize_unchecked(self.num_vars, lcms))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ideal(other)?;
        Ok(Self::minimalize_unchecked(self.num_vars, self.gens.iter().chain(&other.gens).cloned().collect()))
    }

    /// `m * I`.
    pub fn mul_monomial(&self, m: &Monomial) -> Result<Self> {
        self.check_monomial(m)?;
        let gens = self.gens.iter().map(|g| g.mul(m)).collect::<Result<Vec<_>>>()?;
        // Multiplying by a monomial preserves minimality.
        let mut gens = gens;
        gens.sort_by(canonical_cmp);
        Ok(Self { num_vars: self.num_vars, gens })
    }

    /// `self ⊆ other`: every generator of `self` is divisible by a generator of `other`.
    pub fn is_subideal_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_ideal(other)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    /// Splits `G(I)` into the generators divisible by `x_index` and the rest.
    pub fn x_partition(&self, index: usize) -> Result<(Self, Self)> {
        if index >= self.num_vars {
            return Err(Error::VariableOutOfRange { index, num_vars: self.num_vars });
        }
        let (with, without): (Vec<_>, Vec<_>) = self.gens.iter().cloned().partition(|g| g.exps[index] > 0);
        Ok((Self { num_vars: self.num_vars, gens: with }, Self { num_vars: self.num_vars, gens: without }))
    }

    /// Componentwise maximum of all generator exponents.
    pub fn lcm_of_generators(&self) -> Monomial {
        self.gens.iter().fold(Monomial::one(self.num_vars), |acc, g| acc.lcm_unchecked(g))
    }

    /// Alexander dual of a square-free ideal, `∩_g (x_i : x_i | g)`.
    ///
    /// The dual of the zero ideal is the unit ideal and vice versa.
    pub fn alexander_dual(&self) -> Result<Self> {
        if !self.is_squarefree() {
            return Err(Error::NotSquareFree);
        }
        if self.num_vars > 64 {
            return Err(Error::TooManyVertices { requested: self.num_vars, max: 64 });
        }
        let supports: Vec<u64> = self.gens.iter().map(Monomial::support_mask).collect();
        Ok(Self::from_supports(self.num_vars, minimal_transversals(&supports)))
    }

    pub(crate) fn from_supports(num_vars: usize, supports: impl IntoIterator<Item = u64>) -> Self {
        let gens = supports
            .into_iter()
            .map(|s| Monomial { exps: (0..num_vars).map(|i| ((s >> i) & 1) as u32).collect() })
            .collect();
        Self::minimalize_unchecked(num_vars, gens)
    }

    pub(crate) fn supports(&self) -> Vec<u64> {
        self.gens.iter().map(Monomial::support_mask).collect()
    }
}

/// Minimal sets meeting every member of `family`; equivalently the supports of
/// the square-free ideal `∩_{S ∈ family} (x_i : i ∈ S)`.
///
/// An empty member makes the result empty (zero ideal); an empty family yields `{∅}`.
pub(crate) fn minimal_transversals(family: &[u64]) -> Vec<u64> {
    let mut acc: Vec<u64> = vec![0];
    for &set in family {
        let mut next: Vec<u64> = Vec::new();
        for &t in &acc {
            if t & set != 0 {
                next.push(t);
            } else {
                let mut rest = set;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    next.push(t | bit);
                    rest ^= bit;
                }
            }
        }
        acc = minimal_sets(next);
        if acc.is_empty() {
            break;
        }
    }
    acc
}

/// Inclusion-minimal members of a family of bit sets, sorted.
pub(crate) fn minimal_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & s == k) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}
