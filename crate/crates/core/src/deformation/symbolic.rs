//! Rational expressions in surrogate coordinates on the Kodaira surface.
//!
//! Odd symbols are kept as ordered words and are never annihilated, so
//! products such as `s0·s0` survive. Their order only matters for the sign
//! of odd derivatives. Denominators are powers of `1 − t2`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::coords::CoordinateSystem;
use crate::error::DeformationError;
use crate::scalar::Scalar;

const T2: u8 = 2;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
struct Key {
    even: Vec<u8>,
    word: Vec<u8>,
    den: u32,
}

/// `Σ c · (even monomial)·(odd word) / (1 − t2)^k`.
#[derive(Clone, PartialEq)]
pub struct SymExpr<S> {
    terms: BTreeMap<Key, S>,
}

impl<S: Scalar> SymExpr<S> {
    pub fn zero() -> Self {
        SymExpr { terms: BTreeMap::new() }
    }

    pub fn constant(c: S) -> Self {
        let mut e = Self::zero();
        e.add_term(Key { even: vec![], word: vec![], den: 0 }, c);
        e
    }

    pub fn even(i: usize) -> Self {
        let mut e = Self::zero();
        e.add_term(Key { even: vec![i as u8], word: vec![], den: 0 }, S::one());
        e
    }

    pub fn odd(i: usize) -> Self {
        let mut e = Self::zero();
        e.add_term(Key { even: vec![], word: vec![i as u8], den: 0 }, S::one());
        e
    }

    /// `1/(1 − t2)`.
    pub fn inverse_one_minus_t2() -> Self {
        let mut e = Self::zero();
        e.add_term(Key { even: vec![], word: vec![], den: 1 }, S::one());
        e
    }

    fn add_term(&mut self, k: Key, c: S) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.remove(&k) {
            Some(old) => old + c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(k, v);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, x: &S) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.clone() * x.clone());
        }
        out
    }

    /// Words are concatenated in order; no sign and no annihilation.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut even = [a.even.clone(), b.even.clone()].concat();
                even.sort_unstable();
                let word = [a.word.clone(), b.word.clone()].concat();
                out.add_term(Key { even, word, den: a.den + b.den }, x.clone() * y.clone());
            }
        }
        out
    }

    /// Left derivative. An odd symbol at word position `p` contributes with
    /// sign `(−1)^p`.
    pub fn derivative(&self, i: usize, odd: bool) -> Self {
        let i = i as u8;
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            if odd {
                for (p, &w) in k.word.iter().enumerate() {
                    if w != i {
                        continue;
                    }
                    let mut word = k.word.clone();
                    word.remove(p);
                    let v = if p % 2 == 0 { c.clone() } else { -c.clone() };
                    out.add_term(Key { even: k.even.clone(), word, den: k.den }, v);
                }
                continue;
            }
            let e = k.even.iter().filter(|&&v| v == i).count();
            if e > 0 {
                let mut even = k.even.clone();
                let pos = even.iter().position(|&v| v == i).unwrap();
                even.remove(pos);
                let v = c.clone() * S::from_int(e as i64);
                out.add_term(Key { even, word: k.word.clone(), den: k.den }, v);
            }
            if i == T2 && k.den > 0 {
                let v = c.clone() * S::from_int(k.den as i64);
                out.add_term(Key { even: k.even.clone(), word: k.word.clone(), den: k.den + 1 }, v);
            }
        }
        out
    }

    /// Sets the listed symbols to zero.
    pub fn vanish(&self, symbols: &[usize]) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            let hit = symbols.iter().any(|&s| k.even.contains(&(s as u8)) || k.word.contains(&(s as u8)));
            if !hit {
                out.add_term(k.clone(), c.clone());
            }
        }
        out
    }

    /// Numerator over `(1 − t2)^K` for the largest `K` present, with words
    /// optionally sorted.
    fn numerator(&self, sort_words: bool) -> (u32, BTreeMap<(Vec<u8>, Vec<u8>), S>) {
        let top = self.terms.keys().map(|k| k.den).max().unwrap_or(0);
        let mut out: BTreeMap<(Vec<u8>, Vec<u8>), S> = BTreeMap::new();
        for (k, c) in &self.terms {
            let mut word = k.word.clone();
            if sort_words {
                word.sort_unstable();
            }
            // multiply by (1 − t2)^{top − den} = Σ_j C(m, j) (−t2)^j
            let m = top - k.den;
            let mut binom = S::one();
            for j in 0..=m {
                let mut even = k.even.clone();
                even.extend(std::iter::repeat(T2).take(j as usize));
                even.sort_unstable();
                let sign = if j % 2 == 0 { S::one() } else { -S::one() };
                let v = c.clone() * binom.clone() * sign;
                let entry = out.entry((even, word.clone())).or_insert_with(S::zero);
                *entry = entry.clone() + v;
                binom = binom * S::from_int((m - j) as i64) / S::from_int(j as i64 + 1);
            }
        }
        out.retain(|_, v| !v.is_zero());
        (top, out)
    }

    pub fn is_zero(&self) -> bool {
        self.numerator(false).1.is_empty()
    }

    /// Equality as rational functions in ordered words.
    pub fn same_as(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }

    /// Equality with all symbols treated as commuting.
    pub fn same_commutative(&self, other: &Self) -> bool {
        self.sub(other).numerator(true).1.is_empty()
    }

    /// Substitutes values for every symbol; `None` where `1 − t2 = 0`.
    pub fn evaluate(&self, values: &[S]) -> Option<S> {
        let d = S::one() - values[T2 as usize].clone();
        if d.is_zero() && self.terms.keys().any(|k| k.den > 0) {
            return None;
        }
        let mut total = S::zero();
        for (k, c) in &self.terms {
            let mut v = c.clone();
            for &e in k.even.iter().chain(&k.word) {
                v = v * values[e as usize].clone();
            }
            for _ in 0..k.den {
                v = v / d.clone();
            }
            total = total + v;
        }
        Some(total)
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(k, c)| {
                let mut parts: Vec<String> = Vec::new();
                let mut i = 0;
                while i < k.even.len() {
                    let v = k.even[i];
                    let e = k.even[i..].iter().take_while(|&&x| x == v).count();
                    let n = &names[v as usize];
                    parts.push(super::ring::power(n, e, names));
                    i += e;
                }
                parts.extend(k.word.iter().map(|&w| names[w as usize].clone()));
                let mono = if parts.is_empty() { "1".to_string() } else { parts.join("*") };
                let den = match k.den {
                    0 => String::new(),
                    1 => "/(1-t2)".to_string(),
                    d => format!("/(1-t2)^{d}"),
                };
                format!("({})*{mono}{den}", c.pretty())
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<S: Scalar> fmt::Debug for SymExpr<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = CoordinateSystem::<S>::kodaira_surface().names();
        f.write_str(&self.display(&names))
    }
}

/// The two components of the extended Kuranishi space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    /// `s0 = 0`
    K0,
    /// `t4 = 0, s3 = 0`
    K1,
}

impl Component {
    pub fn equations(self) -> &'static [&'static str] {
        match self {
            Component::K0 => &["s0"],
            Component::K1 => &["t4", "s3"],
        }
    }
}

impl FromStr for Component {
    type Err = DeformationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "K0" | "k0" => Ok(Component::K0),
            "K1" | "k1" => Ok(Component::K1),
            other => Err(DeformationError::UnknownComponent(other.to_string())),
        }
    }
}

/// Surrogate-symbol version of the Kodaira surface solution.
#[derive(Clone)]
pub struct SymbolicSurface<S> {
    coords: CoordinateSystem<S>,
}

impl<S: Scalar> Default for SymbolicSurface<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: Scalar> SymbolicSurface<S> {
    pub fn new() -> Self {
        SymbolicSurface { coords: CoordinateSystem::kodaira_surface() }
    }

    pub fn coords(&self) -> &CoordinateSystem<S> {
        &self.coords
    }

    pub fn var(&self, name: &str) -> SymExpr<S> {
        let i = self.coords.index_of(name).expect("surface coordinate");
        if self.coords.is_odd(i) {
            SymExpr::odd(i)
        } else {
            SymExpr::even(i)
        }
    }

    /// `μ1 = −s0 t4/(1−t2)`.
    pub fn mu1(&self) -> SymExpr<S> {
        self.var("s0").mul(&self.var("t4")).mul(&SymExpr::inverse_one_minus_t2()).neg()
    }

    /// `μ2 = −s0 s3/(1−t2)`.
    pub fn mu2(&self) -> SymExpr<S> {
        self.var("s0").mul(&self.var("s3")).mul(&SymExpr::inverse_one_minus_t2()).neg()
    }

    /// `μ2 t4 − μ1 s3`.
    pub fn mu_identity(&self) -> SymExpr<S> {
        self.mu2().mul(&self.var("t4")).sub(&self.mu1().mul(&self.var("s3")))
    }

    /// The nonzero Chen coefficients as `(coordinate, c)`, in the order
    /// `s1, t1, t3, t5`.
    pub fn chen(&self) -> Vec<(String, SymExpr<S>)> {
        let half_i = S::imag_ratio(1, 2);
        vec![
            ("s1".into(), self.mu1().mul(&self.var("s0")).scale(&half_i)),
            ("t1".into(), self.mu2().mul(&self.var("s0")).scale(&half_i)),
            ("t3".into(), self.mu1().mul(&self.mu2()).scale(&half_i)),
            ("t5".into(), self.mu2().mul(&self.var("s3")).scale(&S::imag_unit())),
        ]
    }

    /// Chen coefficients after imposing a component's equations.
    pub fn chen_on(&self, component: Component) -> Vec<(String, SymExpr<S>)> {
        let zero: Vec<usize> = component.equations().iter().map(|n| self.coords.index_of(n).unwrap()).collect();
        self.chen().into_iter().map(|(n, c)| (n, c.vanish(&zero))).collect()
    }

    /// `[∂⃗, ∂/∂x_β] = −(−1)^{|β|} Σ_α (∂_β c_α) ∂/∂x_α`, reduced on the
    /// component; zero coefficients are dropped.
    pub fn gauge_bracket(
        &self,
        beta: &str,
        component: Component,
    ) -> Result<Vec<(String, SymExpr<S>)>, DeformationError> {
        let b = self.coords.index_of(beta)?;
        let odd = self.coords.is_odd(b);
        let zero: Vec<usize> = component.equations().iter().map(|n| self.coords.index_of(n).unwrap()).collect();
        let mut out = Vec::new();
        for (name, c) in self.chen() {
            let d = c.derivative(b, odd).vanish(&zero);
            let d = if odd { d } else { d.neg() };
            if !d.is_zero() {
                out.push((name, d));
            }
        }
        Ok(out)
    }

    /// Every nonzero gauge bracket on the component, keyed by `β`.
    pub fn gauge_brackets(&self, component: Component) -> Vec<(String, Vec<(String, SymExpr<S>)>)> {
        self.coords
            .names()
            .into_iter()
            .filter_map(|beta| {
                let v = self.gauge_bracket(&beta, component).expect("known coordinate");
                (!v.is_empty()).then_some((beta, v))
            })
            .collect()
    }

    /// Values indexed like the coordinates; unspecified symbols are zero.
    pub fn point(&self, values: &[(&str, S)]) -> Vec<S> {
        let mut out = vec![S::zero(); self.coords.len()];
        for (n, v) in values {
            out[self.coords.index_of(n).expect("surface coordinate")] = v.clone();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GaussianRational as Q;

    #[test]
    fn geometric_normal_form() {
        // t2/(1−t2) + 1 = 1/(1−t2)
        let t2 = SymExpr::<Q>::even(2);
        let inv = SymExpr::inverse_one_minus_t2();
        assert!(t2.mul(&inv).add(&SymExpr::constant(Q::from_int(1))).same_as(&inv));
        let d = inv.derivative(2, false);
        assert!(d.same_as(&inv.mul(&inv)));
    }

    #[test]
    fn odd_words_keep_order_for_signs() {
        let (a, b) = (SymExpr::<Q>::odd(6), SymExpr::<Q>::odd(9));
        let ab = a.mul(&b);
        assert!(ab.derivative(9, true).same_as(&a.neg()));
        assert!(!ab.same_as(&b.mul(&a)));
        assert!(ab.same_commutative(&b.mul(&a)));
        assert!(!a.mul(&a).is_zero());
        assert!(a.mul(&a).derivative(6, true).is_zero());
    }
}
