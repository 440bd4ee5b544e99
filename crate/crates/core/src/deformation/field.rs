//! Polyvector fields with coefficients in the truncated super ring.
//!
//! An element is `Σ c_a · a` with `c_a` a [`SuperScalar`] and `a` a basis
//! monomial of the algebra. Coefficients sit on the left, so moving a
//! coefficient of parity `|c|` past a multivector of degree `|a|` costs
//! `(−1)^{|c||a|}`.

use std::collections::BTreeMap;

use super::ring::SuperScalar;
use crate::algebra::{GeneratorSet, Monomial, Multivector};
use crate::dga::DgaPresentation;
use crate::hodge::Hodge;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq)]
pub struct SuperField<S> {
    trunc: u32,
    terms: BTreeMap<Monomial, SuperScalar<S>>,
}

fn signed<S: Scalar>(x: SuperScalar<S>, odd: bool) -> SuperScalar<S> {
    if odd {
        x.neg()
    } else {
        x
    }
}

impl<S: Scalar> SuperField<S> {
    pub fn zero(trunc: u32) -> Self {
        SuperField { trunc, terms: BTreeMap::new() }
    }

    pub fn truncation(&self) -> u32 {
        self.trunc
    }

    /// A constant field.
    pub fn from_multivector(v: &Multivector<S>, trunc: u32) -> Self {
        let mut f = Self::zero(trunc);
        for (m, c) in v.terms() {
            f.add_term(m, SuperScalar::constant(c.clone(), trunc));
        }
        f
    }

    /// `c · v` for a coefficient `c` and constant `v`.
    pub fn coefficient_times(c: &SuperScalar<S>, v: &Multivector<S>) -> Self {
        let mut f = Self::zero(c.truncation());
        for (m, x) in v.terms() {
            f.add_term(m, c.scale(x));
        }
        f
    }

    pub fn add_term(&mut self, m: Monomial, c: SuperScalar<S>) {
        if c.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&m) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !merged.is_zero() {
            self.terms.insert(m, merged);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &SuperScalar<S>)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, m: Monomial) -> SuperScalar<S> {
        self.terms.get(&m).cloned().unwrap_or_else(|| SuperScalar::zero(self.trunc))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.trunc = self.trunc.min(other.trunc);
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|_, c| c.neg())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, x: &S) -> Self {
        self.map_coeffs(|_, c| c.scale(x))
    }

    /// Left multiplication by a ring element: `r · (c a) = (r c) a`.
    pub fn left_mul(&self, r: &SuperScalar<S>) -> Self {
        self.map_coeffs(|_, c| r.mul(c))
    }

    pub fn map_coeffs(&self, f: impl Fn(Monomial, &SuperScalar<S>) -> SuperScalar<S>) -> Self {
        let mut out = Self::zero(self.trunc);
        for (m, c) in &self.terms {
            out.add_term(*m, f(*m, c));
        }
        out
    }

    /// Coordinate-degree `k` part of every coefficient.
    pub fn degree_part(&self, k: u32) -> Self {
        self.map_coeffs(|_, c| c.degree_part(k))
    }

    /// Sum of the coordinate-degree parts `0..=k`.
    pub fn up_to_degree(&self, k: u32) -> Self {
        self.map_coeffs(|_, c| c.filter(|m| m.degree() <= k))
    }

    pub fn derivative(&self, i: usize, odd: bool) -> Self {
        self.map_coeffs(|_, c| c.derivative(i, odd))
    }

    pub fn vanish(&self, coords: &[usize]) -> Self {
        self.map_coeffs(|_, c| c.vanish(coords))
    }

    /// Multivector degree part.
    pub fn multivector_degree_part(&self, d: u32) -> Self {
        let mut out = Self::zero(self.trunc);
        for (m, c) in &self.terms {
            if m.degree() == d {
                out.add_term(*m, c.clone());
            }
        }
        out
    }

    /// Coefficient of `m` viewed as a multivector for each ring monomial.
    pub fn coefficient_fields(&self) -> BTreeMap<super::ring::CoeffMonomial, Multivector<S>> {
        let mut out: BTreeMap<_, Multivector<S>> = BTreeMap::new();
        for (m, c) in &self.terms {
            for (cm, x) in c.terms() {
                out.entry(cm.clone()).or_default().add_term(*m, x.clone());
            }
        }
        out
    }

    fn parts(&self) -> Vec<(Monomial, [SuperScalar<S>; 2])> {
        self.terms.iter().map(|(m, c)| (*m, [c.parity_part(0), c.parity_part(1)])).collect()
    }

    /// `(c a) ∧ (d b) = (−1)^{|a||d|} c d (a ∧ b)`.
    pub fn wedge(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let mut out = Self::zero(trunc);
        let rhs = other.parts();
        for (a, c) in &self.terms {
            for (b, ds) in &rhs {
                let Some((sign, m)) = a.wedge(*b) else { continue };
                for (pd, d) in ds.iter().enumerate() {
                    if d.is_zero() {
                        continue;
                    }
                    let odd = (sign < 0) ^ (a.degree() % 2 == 1 && pd == 1);
                    out.add_term(m, signed(c.mul(d), odd));
                }
            }
        }
        out
    }

    /// `[c a, d b] = (−1)^{|d|(|a|+1)} c d [a, b]`.
    pub fn bracket(&self, pres: &DgaPresentation<S>, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let mut out = Self::zero(trunc);
        let rhs = other.parts();
        for (a, c) in &self.terms {
            for (b, ds) in &rhs {
                let br = pres.bracket_monomials(*a, *b);
                if br.is_zero() {
                    continue;
                }
                for (pd, d) in ds.iter().enumerate() {
                    if d.is_zero() {
                        continue;
                    }
                    let odd = pd == 1 && a.degree() % 2 == 0;
                    let cd = signed(c.mul(d), odd);
                    for (m, x) in br.terms() {
                        out.add_term(m, cd.scale(x));
                    }
                }
            }
        }
        out
    }

    /// Applies a multivector map of parity `odd` to every term, with
    /// `f(c a) = (−1)^{|c| odd} c f(a)`.
    pub fn apply(&self, odd: bool, f: impl Fn(&Multivector<S>) -> Multivector<S>) -> Self {
        let mut out = Self::zero(self.trunc);
        for (a, c) in &self.terms {
            let image = f(&Multivector::monomial(*a));
            if image.is_zero() {
                continue;
            }
            let coeff = if odd { c.parity_part(0).sub(&c.parity_part(1)) } else { c.clone() };
            for (m, x) in image.terms() {
                out.add_term(m, coeff.scale(x));
            }
        }
        out
    }

    pub fn dbar(&self, pres: &DgaPresentation<S>) -> Self {
        self.apply(true, |v| pres.differential(v))
    }

    pub fn adjoint(&self, hodge: &Hodge<S>) -> Self {
        self.apply(true, |v| hodge.adjoint(v))
    }

    pub fn green(&self, hodge: &Hodge<S>) -> Self {
        self.apply(false, |v| hodge.green(v))
    }

    pub fn harmonic_projection(&self, hodge: &Hodge<S>) -> Self {
        self.apply(false, |v| hodge.harmonic_projection(v))
    }

    /// `∂̄* G`.
    pub fn homotopy(&self, hodge: &Hodge<S>) -> Self {
        self.green(hodge).adjoint(hodge)
    }

    pub fn display(&self, gens: &GeneratorSet, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(m, c)| format!("[{}] {}", c.display(names), gens.name_of(*m)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<S: Scalar> std::fmt::Debug for SuperField<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
