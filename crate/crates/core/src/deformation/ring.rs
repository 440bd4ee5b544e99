//! Truncated supercommutative polynomials in even and odd coordinates.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// A coefficient monomial: a multiset of even coordinates (sorted indices,
/// repeated by exponent) times an ascending product of odd coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct CoeffMonomial {
    pub even: Vec<u8>,
    pub odd: u64,
}

impl CoeffMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn even_var(i: usize) -> Self {
        CoeffMonomial { even: vec![i as u8], odd: 0 }
    }

    pub fn odd_var(i: usize) -> Self {
        CoeffMonomial { even: Vec::new(), odd: 1 << i }
    }

    pub fn degree(&self) -> u32 {
        self.even.len() as u32 + self.odd.count_ones()
    }

    pub fn parity(&self) -> u32 {
        self.odd.count_ones() % 2
    }

    pub fn exponent(&self, i: usize) -> usize {
        self.even.iter().filter(|&&v| v as usize == i).count()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.odd & (1 << i) != 0 || self.exponent(i) > 0
    }

    /// Product with its reordering sign; `None` when an odd coordinate repeats.
    pub fn mul(&self, other: &CoeffMonomial) -> Option<(i32, CoeffMonomial)> {
        if self.odd & other.odd != 0 {
            return None;
        }
        let mut inversions = 0u32;
        let mut rest = self.odd;
        while rest != 0 {
            let i = rest.trailing_zeros();
            rest &= rest - 1;
            inversions += (other.odd & ((1u64 << i) - 1)).count_ones();
        }
        let mut even = Vec::with_capacity(self.even.len() + other.even.len());
        let (mut a, mut b) = (0, 0);
        while a < self.even.len() || b < other.even.len() {
            if b == other.even.len() || (a < self.even.len() && self.even[a] <= other.even[b]) {
                even.push(self.even[a]);
                a += 1;
            } else {
                even.push(other.even[b]);
                b += 1;
            }
        }
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        Some((sign, CoeffMonomial { even, odd: self.odd | other.odd }))
    }

    pub fn display(&self, names: &[String]) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.even.len() {
            let v = self.even[i];
            let e = self.even[i..].iter().take_while(|&&x| x == v).count();
            let name = &names[v as usize];
            parts.push(power(name, e, names));
            i += e;
        }
        let mut rest = self.odd;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            parts.push(names[j].clone());
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// `x^e`, bracketed when that text is itself a coordinate name or `x`
/// already contains `^`.
pub(crate) fn power(name: &str, e: usize, names: &[String]) -> String {
    if e == 1 {
        return name.to_string();
    }
    let plain = format!("{name}^{e}");
    if name.contains('^') || names.contains(&plain) {
        format!("({name})^{e}")
    } else {
        plain
    }
}

/// Element of the truncated ring `A ⊗ Λ(s)`; terms of total degree above
/// `trunc` are dropped.
#[derive(Clone, PartialEq)]
pub struct SuperScalar<S> {
    trunc: u32,
    terms: BTreeMap<CoeffMonomial, S>,
}

impl<S: Scalar> SuperScalar<S> {
    pub fn zero(trunc: u32) -> Self {
        SuperScalar { trunc, terms: BTreeMap::new() }
    }

    pub fn constant(c: S, trunc: u32) -> Self {
        Self::term(CoeffMonomial::one(), c, trunc)
    }

    pub fn one(trunc: u32) -> Self {
        Self::constant(S::one(), trunc)
    }

    pub fn term(m: CoeffMonomial, c: S, trunc: u32) -> Self {
        let mut s = Self::zero(trunc);
        s.add_term(m, c);
        s
    }

    pub fn even_var(i: usize, trunc: u32) -> Self {
        Self::term(CoeffMonomial::even_var(i), S::one(), trunc)
    }

    pub fn odd_var(i: usize, trunc: u32) -> Self {
        Self::term(CoeffMonomial::odd_var(i), S::one(), trunc)
    }

    pub fn truncation(&self) -> u32 {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CoeffMonomial, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &CoeffMonomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn constant_term(&self) -> S {
        self.coeff(&CoeffMonomial::one())
    }

    pub fn add_term(&mut self, m: CoeffMonomial, c: S) {
        if c.is_zero() || m.degree() > self.trunc {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let v = old.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = v;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.trunc = self.trunc.min(other.trunc);
        out.terms.retain(|m, _| m.degree() <= out.trunc);
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        SuperScalar { trunc: self.trunc, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.trunc);
        }
        SuperScalar {
            trunc: self.trunc,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x.clone() * c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let mut out = Self::zero(trunc);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if a.degree() + b.degree() > trunc {
                    continue;
                }
                if let Some((sign, m)) = a.mul(b) {
                    let v = x.clone() * y.clone();
                    out.add_term(m, if sign < 0 { -v } else { v });
                }
            }
        }
        out
    }

    /// `Some(p)` when every term has parity `p`; `Some(0)` for zero.
    pub fn parity(&self) -> Option<u32> {
        let mut ps = self.terms.keys().map(CoeffMonomial::parity);
        match ps.next() {
            None => Some(0),
            Some(p) => ps.all(|q| q == p).then_some(p),
        }
    }

    /// Part of parity `p`.
    pub fn parity_part(&self, p: u32) -> Self {
        self.filter(|m| m.parity() == p)
    }

    pub fn degree_part(&self, k: u32) -> Self {
        self.filter(|m| m.degree() == k)
    }

    pub fn filter(&self, keep: impl Fn(&CoeffMonomial) -> bool) -> Self {
        SuperScalar {
            trunc: self.trunc,
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Left derivative `∂/∂x_i`; an odd coordinate passes the odd coordinates
    /// in front of it with a sign.
    pub fn derivative(&self, i: usize, odd: bool) -> Self {
        let mut out = Self::zero(self.trunc);
        for (m, c) in &self.terms {
            if odd {
                if m.odd & (1 << i) == 0 {
                    continue;
                }
                let before = (m.odd & ((1u64 << i) - 1)).count_ones();
                let dm = CoeffMonomial { even: m.even.clone(), odd: m.odd & !(1 << i) };
                out.add_term(dm, if before % 2 == 0 { c.clone() } else { -c.clone() });
            } else {
                let e = m.exponent(i);
                if e == 0 {
                    continue;
                }
                let mut even = m.even.clone();
                let pos = even.iter().position(|&v| v as usize == i).unwrap();
                even.remove(pos);
                out.add_term(CoeffMonomial { even, odd: m.odd }, c.clone() * S::from_int(e as i64));
            }
        }
        out
    }

    /// Sets the listed coordinates to zero.
    pub fn vanish(&self, coords: &[usize]) -> Self {
        self.filter(|m| coords.iter().all(|&i| !m.contains(i)))
    }

    /// Inverse of a unit by geometric expansion around its constant term.
    pub fn inverse(&self) -> Option<Self> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return None;
        }
        let inv0 = S::one() / c0.clone();
        // x = 1 − self/c0 has no constant term, so Σ x^k terminates at trunc
        let x = Self::one(self.trunc).sub(&self.scale(&inv0));
        let mut acc = Self::one(self.trunc);
        let mut power = Self::one(self.trunc);
        for _ in 0..self.trunc {
            power = power.mul(&x);
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        Some(acc.scale(&inv0))
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&CoeffMonomial> = self.terms.keys().collect();
        keys.sort_by_key(|m| (m.degree(), (*m).clone()));
        keys.iter()
            .map(|m| {
                let c = &self.terms[*m];
                let mono = m.display(names);
                if m.degree() == 0 {
                    c.pretty()
                } else if c.is_one() {
                    mono
                } else if (-c.clone()).is_one() {
                    format!("-{mono}")
                } else {
                    format!("({})*{mono}", c.pretty())
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<S: Scalar> fmt::Debug for SuperScalar<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(m, c)| (m, c.pretty()))).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GaussianRational as Q;
    use proptest::prelude::*;

    type R = SuperScalar<Q>;

    #[test]
    fn odd_coordinates_anticommute() {
        let (a, b) = (R::odd_var(0, 4), R::odd_var(1, 4));
        assert_eq!(a.mul(&b), b.mul(&a).neg());
        assert!(a.mul(&a).is_zero());
    }

    #[test]
    fn geometric_inverse() {
        let t = R::even_var(2, 5);
        let one_minus = R::one(5).sub(&t);
        let inv = one_minus.inverse().unwrap();
        for k in 0..=5 {
            let m = CoeffMonomial { even: vec![2; k], odd: 0 };
            assert_eq!(inv.coeff(&m), Q::from_int(1));
        }
        assert_eq!(inv.mul(&one_minus), R::one(5));
        assert!(R::odd_var(0, 3).inverse().is_none());
    }

    #[test]
    fn left_derivative_sign() {
        // ∂/∂s_3 (s_0 s_3) = −s_0
        let p = R::odd_var(0, 4).mul(&R::odd_var(3, 4));
        assert_eq!(p.derivative(3, true), R::odd_var(0, 4).neg());
        assert_eq!(p.derivative(0, true), R::odd_var(3, 4));
        let t = R::even_var(1, 4);
        assert_eq!(t.mul(&t).derivative(1, false), t.scale(&Q::from_int(2)));
    }

    #[test]
    fn truncation_drops_high_degree() {
        let t = R::even_var(0, 2);
        assert!(t.mul(&t).mul(&t).is_zero());
    }

    fn small() -> impl Strategy<Value = R> {
        proptest::collection::vec((0u8..3, 0u64..8, -3i64..4), 0..5).prop_map(|ts| {
            let mut r = R::zero(4);
            for (e, o, c) in ts {
                let even = (0..e).map(|_| (e % 3) as u8 + 3).collect();
                r.add_term(CoeffMonomial { even, odd: o }, Q::from_int(c));
            }
            r
        })
    }

    proptest! {
        #[test]
        fn product_is_associative(a in small(), b in small(), c in small()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn product_is_supercommutative(a in small(), b in small()) {
            for pa in 0..2 {
                for pb in 0..2 {
                    let (x, y) = (a.parity_part(pa), b.parity_part(pb));
                    let rhs = y.mul(&x);
                    let rhs = if pa * pb == 1 { rhs.neg() } else { rhs };
                    prop_assert_eq!(x.mul(&y), rhs);
                }
            }
        }

        #[test]
        fn derivative_is_a_graded_derivation(a in small(), b in small(), i in 0usize..3) {
            for pa in 0..2 {
                let x = a.parity_part(pa);
                let lhs = x.mul(&b).derivative(i, true);
                let first = x.derivative(i, true).mul(&b);
                let second = x.mul(&b.derivative(i, true));
                let rhs = if pa == 1 { first.sub(&second) } else { first.add(&second) };
                // truncation can hide degree-trunc terms on the left only
                prop_assert_eq!(lhs.filter(|m| m.degree() < 3), rhs.filter(|m| m.degree() < 3));
            }
        }
    }
}
