//! Graded exterior algebra on odd degree-one generators.
//!
//! A [`Monomial`] is a bitmask over the generators of a [`GeneratorSet`]; bit
//! order is the canonical sort order, so `ω̄ ∧ ρ̄ ∧ T ∧ W` is stored with its
//! generators ascending and every reordering carries a Koszul sign.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::DgaError;
use crate::scalar::Scalar;

pub const MAX_GENERATORS: usize = 16;

/// Bidegree `(p, q)`: `p` vector slots, `q` form slots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bidegree {
    pub p: u32,
    pub q: u32,
}

impl Bidegree {
    pub const VECTOR: Bidegree = Bidegree { p: 1, q: 0 };
    pub const FORM: Bidegree = Bidegree { p: 0, q: 1 };

    pub fn new(p: u32, q: u32) -> Self {
        Bidegree { p, q }
    }

    pub fn total(self) -> u32 {
        self.p + self.q
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub bidegree: Bidegree,
}

impl Generator {
    pub fn form(name: impl Into<String>) -> Self {
        Generator { name: name.into(), bidegree: Bidegree::FORM }
    }

    pub fn vector(name: impl Into<String>) -> Self {
        Generator { name: name.into(), bidegree: Bidegree::VECTOR }
    }
}

/// Ordered generators of an exterior algebra. Position is the sort key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    gens: Vec<Generator>,
}

impl GeneratorSet {
    pub fn new(gens: Vec<Generator>) -> Result<Self, DgaError> {
        if gens.len() > MAX_GENERATORS {
            return Err(DgaError::TooManyGenerators(gens.len()));
        }
        for (i, g) in gens.iter().enumerate() {
            if gens[..i].iter().any(|h| h.name == g.name) {
                return Err(DgaError::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(GeneratorSet { gens })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn get(&self, i: usize) -> &Generator {
        &self.gens[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Generator> {
        self.gens.iter()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn generator(&self, i: usize) -> Monomial {
        Monomial::generator(i)
    }

    /// Monomial from generator names, e.g. `["or", "T", "W"]`, with its sign.
    pub fn monomial(&self, names: &[&str]) -> Option<(Monomial, i32)> {
        let idx: Option<Vec<usize>> = names.iter().map(|n| self.index_of(n)).collect();
        normalize_monomial(&idx?)
    }

    /// Number of monomials, `2^len`.
    pub fn dimension(&self) -> usize {
        1 << self.gens.len()
    }

    pub fn all_monomials(&self) -> impl Iterator<Item = Monomial> {
        (0..self.dimension() as u32).map(Monomial)
    }

    pub fn bidegree(&self, m: Monomial) -> Bidegree {
        m.indices().fold(Bidegree::new(0, 0), |acc, i| {
            let b = self.gens[i].bidegree;
            Bidegree::new(acc.p + b.p, acc.q + b.q)
        })
    }

    /// Monomials of bidegree `(p, q)` in ascending mask order.
    pub fn monomials_of(&self, bd: Bidegree) -> Vec<Monomial> {
        self.all_monomials().filter(|&m| self.bidegree(m) == bd).collect()
    }

    pub fn max_bidegree(&self) -> Bidegree {
        self.bidegree(Monomial((self.dimension() - 1) as u32))
    }

    /// ASCII name, generators joined by `^`; the unit is `1`.
    pub fn name_of(&self, m: Monomial) -> String {
        if m.is_unit() {
            return "1".to_string();
        }
        m.indices().map(|i| self.gens[i].name.as_str()).collect::<Vec<_>>().join("^")
    }
}

/// A strictly ascending set of generators, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(pub u32);

impl Monomial {
    pub const UNIT: Monomial = Monomial(0);

    pub fn generator(i: usize) -> Self {
        Monomial(1 << i)
    }

    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_unit(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..32).filter(move |i| mask & (1 << i) != 0)
    }

    /// Lowest generator and the remaining factor: `self = g ∧ rest` with sign +1.
    pub fn split_first(self) -> Option<(usize, Monomial)> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            Some((i, Monomial(self.0 & !(1 << i))))
        }
    }

    /// `self ∧ other` as `(sign, product)`, `None` when a generator repeats.
    pub fn wedge(self, other: Monomial) -> Option<(i32, Monomial)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut swaps = 0u32;
        for j in other.indices() {
            swaps += (self.0 >> (j + 1)).count_ones();
        }
        let sign = if swaps % 2 == 0 { 1 } else { -1 };
        Some((sign, Monomial(self.0 | other.0)))
    }
}

/// Sorts a generator sequence; returns the sign of the permutation, or `None`
/// if a generator repeats (odd generators square to zero).
pub fn normalize_monomial(seq: &[usize]) -> Option<(Monomial, i32)> {
    let mut mask = 0u32;
    let mut inversions = 0usize;
    for (k, &i) in seq.iter().enumerate() {
        if mask & (1 << i) != 0 {
            return None;
        }
        mask |= 1 << i;
        inversions += seq[..k].iter().filter(|&&j| j > i).count();
    }
    Some((Monomial(mask), if inversions % 2 == 0 { 1 } else { -1 }))
}

/// Sparse element of the exterior algebra. Zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct Multivector<S> {
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Default for Multivector<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> Multivector<S> {
    pub fn zero() -> Self {
        Multivector { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::term(Monomial::UNIT, S::one())
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, S::one())
    }

    pub fn term(m: Monomial, c: S) -> Self {
        let mut v = Self::zero();
        v.add_term(m, c);
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, S)>) -> Self {
        let mut v = Self::zero();
        for (m, c) in terms {
            v.add_term(m, c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &S)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, m: Monomial) -> S {
        self.terms.get(&m).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, c: &S, other: &Multivector<S>) {
        if c.is_zero() {
            return;
        }
        for (m, x) in other.terms() {
            self.add_term(m, c.clone() * x.clone());
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Multivector { terms: self.terms.iter().map(|(m, x)| (*m, c.clone() * x.clone())).collect() }
    }

    /// Graded-commutative exterior product.
    pub fn wedge(&self, other: &Multivector<S>) -> Self {
        let mut out = Self::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                if let Some((sign, m)) = a.wedge(b) {
                    let c = x.clone() * y.clone();
                    out.add_term(m, if sign < 0 { -c } else { c });
                }
            }
        }
        out
    }

    /// Total degree when every term shares one; `None` for zero or mixed.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn degree_part(&self, d: u32) -> Self {
        Multivector {
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    /// The `(p, q)` component.
    pub fn component(&self, gens: &GeneratorSet, bd: Bidegree) -> Self {
        Multivector {
            terms: self.terms.iter().filter(|(m, _)| gens.bidegree(**m) == bd).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    /// Applies a linear map given on monomials.
    pub fn map_linear(&self, f: impl Fn(Monomial) -> Multivector<S>) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            out.add_scaled(c, &f(m));
        }
        out
    }

    /// Hermitian product with the monomial basis orthonormal.
    pub fn inner(&self, other: &Multivector<S>) -> S {
        let mut acc = S::zero();
        for (m, x) in self.terms() {
            if let Some(y) = other.terms.get(&m) {
                acc = acc + x.clone() * y.conj();
            }
        }
        acc
    }

    pub fn display(&self, gens: &GeneratorSet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|m| (m.degree(), m.0));
        keys.iter()
            .map(|m| {
                let c = &self.terms[m];
                if c.is_one() {
                    gens.name_of(*m)
                } else if m.is_unit() {
                    c.pretty()
                } else {
                    format!("{} {}", wrap_sum(c.pretty()), gens.name_of(*m))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn wrap_sum(s: String) -> String {
    if s[1..].contains(" + ") || s[1..].contains(" - ") {
        format!("[{s}]")
    } else {
        s
    }
}

impl<S: Scalar> fmt::Debug for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(m, c)| (m.0, c.pretty()))).finish()
    }
}

impl<S: Scalar> Add for &Multivector<S> {
    type Output = Multivector<S>;

    fn add(self, rhs: &Multivector<S>) -> Multivector<S> {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m, c.clone());
        }
        out
    }
}

impl<S: Scalar> Sub for &Multivector<S> {
    type Output = Multivector<S>;

    fn sub(self, rhs: &Multivector<S>) -> Multivector<S> {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m, -c.clone());
        }
        out
    }
}

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;

    fn neg(self) -> Multivector<S> {
        Multivector { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{GaussianRational as Q, Multivector as MV};
    use proptest::prelude::*;

    // ω̄ < ρ̄ < T < W
    fn kodaira_gens() -> GeneratorSet {
        GeneratorSet::new(vec![
            Generator::form("ow"),
            Generator::form("or"),
            Generator::vector("T"),
            Generator::vector("W"),
        ])
        .unwrap()
    }

    fn g(i: usize) -> MV {
        MV::monomial(Monomial::generator(i))
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_monomial(&[2]), Some((Monomial(0b100), 1)));
        assert_eq!(normalize_monomial(&[1, 0]), Some((Monomial(0b11), -1)));
        assert_eq!(normalize_monomial(&[2, 2]), None);
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(MV::one().wedge(&g(2)), g(2));
        assert_eq!(g(1).wedge(&g(0)), -&g(0).wedge(&g(1)));
        let gens = kodaira_gens();
        let (or_ow, s) = gens.monomial(&["ow", "or"]).unwrap();
        assert_eq!(s, 1);
        let (t_w, _) = gens.monomial(&["T", "W"]).unwrap();
        let prod = MV::monomial(or_ow).wedge(&MV::monomial(t_w));
        assert_eq!(gens.name_of(Monomial(0b1111)), "ow^or^T^W");
        assert_eq!(prod, MV::monomial(Monomial(0b1111)));
    }

    #[test]
    fn vector_space_examples() {
        assert!(g(2).scale(&Q::from_int(0)).is_zero());
        let v = g(0).scale(&Q::imag_ratio(-1, 2));
        assert_eq!(v.scale(&Q::imag_unit()), g(0).scale(&Q::from_ratio(1, 2)));
        assert!((&g(2) + &g(2).scale(&Q::from_int(-1))).is_empty());
    }

    #[test]
    fn bidegree_and_component() {
        let gens = kodaira_gens();
        assert_eq!(gens.bidegree(Monomial(0b1111)), Bidegree::new(2, 2));
        let v = &g(0) + &g(2);
        assert_eq!(v.component(&gens, Bidegree::VECTOR), g(2));
        assert!(MV::zero().component(&gens, Bidegree::VECTOR).is_zero());
        assert_eq!(v.homogeneous_degree(), Some(1));
        assert_eq!(MV::zero().homogeneous_degree(), None);
    }

    #[test]
    fn wedge_associative_on_all_monomial_triples() {
        let n = 6;
        for a in 0..1u32 << n {
            for b in 0..1u32 << n {
                let ab = MV::monomial(Monomial(a)).wedge(&MV::monomial(Monomial(b)));
                for c in (0..1u32 << n).step_by(3) {
                    let mc = MV::monomial(Monomial(c));
                    let lhs = ab.wedge(&mc);
                    let rhs = MV::monomial(Monomial(a)).wedge(&MV::monomial(Monomial(b)).wedge(&mc));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn graded_commutative(a in 0u32..256, b in 0u32..256) {
            let (ma, mb) = (MV::monomial(Monomial(a)), MV::monomial(Monomial(b)));
            let sign = if (a.count_ones() * b.count_ones()) % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(ma.wedge(&mb), mb.wedge(&ma).scale(&Q::from_int(sign)));
        }

        #[test]
        fn normalize_tracks_permutation_sign(perm in Just((0usize..6).collect::<Vec<_>>()).prop_shuffle()) {
            let mut inv = 0;
            for i in 0..perm.len() {
                for j in i + 1..perm.len() {
                    if perm[i] > perm[j] { inv += 1; }
                }
            }
            let (m, s) = normalize_monomial(&perm).unwrap();
            prop_assert_eq!(m, Monomial(0b111111));
            prop_assert_eq!(s, if inv % 2 == 0 { 1 } else { -1 });
        }
    }
}
