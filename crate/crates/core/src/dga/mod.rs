//! Differential Gerstenhaber algebras given by generator-level data.
//!
//! A presentation stores the brackets of pairs of degree-one generators and the
//! differential of each generator. The Schouten bracket is extended to all of
//! the exterior algebra as a biderivation and the differential as an
//! anti-derivation; both extensions are tabulated once per presentation.

mod axioms;
mod direct;

use std::collections::BTreeMap;
use std::sync::OnceLock;

pub use axioms::{verify_axioms, Axiom, AxiomCheck, AxiomOptions, AxiomReport};
pub use direct::ComplexLieData;

use crate::algebra::{GeneratorSet, Monomial, Multivector};
use crate::error::DgaError;
use crate::scalar::Scalar;

#[derive(Clone)]
pub struct DgaPresentation<S> {
    gens: GeneratorSet,
    brackets: BTreeMap<(usize, usize), Multivector<S>>,
    differentials: Vec<Multivector<S>>,
    lie: Option<ComplexLieData<S>>,
    bracket_cache: OnceLock<Vec<Multivector<S>>>,
    dbar_cache: OnceLock<Vec<Multivector<S>>>,
}

impl<S: Scalar> std::fmt::Debug for DgaPresentation<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DgaPresentation")
            .field("gens", &self.gens)
            .field("brackets", &self.brackets)
            .field("differentials", &self.differentials)
            .finish_non_exhaustive()
    }
}

impl<S: Scalar> DgaPresentation<S> {
    /// Builds a presentation; pairs missing from `brackets` bracket to zero and
    /// the table is completed antisymmetrically.
    pub fn new(
        gens: GeneratorSet,
        brackets: Vec<((usize, usize), Multivector<S>)>,
        differentials: Vec<(usize, Multivector<S>)>,
    ) -> Result<Self, DgaError> {
        let name = |i: usize| gens.get(i).name.clone();
        let mut table: BTreeMap<(usize, usize), Multivector<S>> = BTreeMap::new();
        for ((i, j), v) in brackets {
            if v.is_zero() {
                continue;
            }
            if v.homogeneous_degree() != Some(1) {
                return Err(DgaError::BracketDegree(name(i), name(j)));
            }
            let neg = -&v;
            for (key, val) in [((i, j), v), ((j, i), neg)] {
                match table.get(&key) {
                    Some(old) if *old != val => return Err(DgaError::BracketNotAntisymmetric(name(i), name(j))),
                    _ => {
                        table.insert(key, val);
                    }
                }
            }
            if i == j {
                return Err(DgaError::BracketNotAntisymmetric(name(i), name(j)));
            }
        }
        let mut diffs = vec![Multivector::zero(); gens.len()];
        for (i, v) in differentials {
            if !v.is_zero() && v.homogeneous_degree() != Some(2) {
                return Err(DgaError::DifferentialDegree(name(i)));
            }
            diffs[i] = v;
        }
        Ok(DgaPresentation {
            gens,
            brackets: table,
            differentials: diffs,
            lie: None,
            bracket_cache: OnceLock::new(),
            dbar_cache: OnceLock::new(),
        })
    }

    pub fn with_lie_data(mut self, lie: ComplexLieData<S>) -> Self {
        self.lie = Some(lie);
        self
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn lie_data(&self) -> Option<&ComplexLieData<S>> {
        self.lie.as_ref()
    }

    pub fn generator_bracket(&self, i: usize, j: usize) -> Multivector<S> {
        self.brackets.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn generator_differential(&self, i: usize) -> &Multivector<S> {
        &self.differentials[i]
    }

    /// Nonzero generator-level brackets, `i < j`.
    pub fn bracket_entries(&self) -> impl Iterator<Item = ((usize, usize), &Multivector<S>)> {
        self.brackets.iter().filter(|((i, j), _)| i < j).map(|(k, v)| (*k, v))
    }

    pub fn generator(&self, name: &str) -> Option<Multivector<S>> {
        self.gens.index_of(name).map(|i| Multivector::monomial(Monomial::generator(i)))
    }

    /// Element from a monomial written by generator names, with its sign.
    pub fn element(&self, names: &[&str]) -> Option<Multivector<S>> {
        let (m, sign) = self.gens.monomial(names)?;
        Some(Multivector::term(m, S::from_int(sign as i64)))
    }

    fn bracket_table(&self) -> &[Multivector<S>] {
        self.bracket_cache.get_or_init(|| {
            let n = self.gens.dimension();
            let mut memo: Vec<Option<Multivector<S>>> = vec![None; n * n];
            for a in 0..n as u32 {
                for b in 0..n as u32 {
                    self.bracket_rec(Monomial(a), Monomial(b), &mut memo);
                }
            }
            memo.into_iter().map(Option::unwrap).collect()
        })
    }

    // Peels the leftmost generator of the left argument, then of the right one:
    //   [g∧r, c] = g∧[r, c] + (-1)^{|r|} r∧[g, c]
    //   [g, h∧r] = [g, h]∧r + h∧[g, r]
    fn bracket_rec(&self, a: Monomial, b: Monomial, memo: &mut Vec<Option<Multivector<S>>>) -> Multivector<S> {
        let n = self.gens.dimension();
        let key = a.0 as usize * n + b.0 as usize;
        if let Some(v) = &memo[key] {
            return v.clone();
        }
        let result = if a.is_unit() || b.is_unit() {
            Multivector::zero()
        } else if a.degree() > 1 {
            let (g, rest) = a.split_first().unwrap();
            let g_mv = Multivector::monomial(Monomial::generator(g));
            let rest_mv = Multivector::monomial(rest);
            let first = g_mv.wedge(&self.bracket_rec(rest, b, memo));
            let second = rest_mv.wedge(&self.bracket_rec(Monomial::generator(g), b, memo));
            if rest.degree() % 2 == 0 {
                &first + &second
            } else {
                &first - &second
            }
        } else if b.degree() > 1 {
            let (h, rest) = b.split_first().unwrap();
            let h_mv = Multivector::monomial(Monomial::generator(h));
            let rest_mv = Multivector::monomial(rest);
            let first = self.bracket_rec(a, Monomial::generator(h), memo).wedge(&rest_mv);
            let second = h_mv.wedge(&self.bracket_rec(a, rest, memo));
            &first + &second
        } else {
            let i = a.0.trailing_zeros() as usize;
            let j = b.0.trailing_zeros() as usize;
            self.generator_bracket(i, j)
        };
        memo[key] = Some(result.clone());
        result
    }

    pub fn bracket_monomials(&self, a: Monomial, b: Monomial) -> &Multivector<S> {
        &self.bracket_table()[a.0 as usize * self.gens.dimension() + b.0 as usize]
    }

    /// The Schouten bracket `[a, b]`.
    pub fn schouten(&self, a: &Multivector<S>, b: &Multivector<S>) -> Multivector<S> {
        let mut out = Multivector::zero();
        for (ma, x) in a.terms() {
            for (mb, y) in b.terms() {
                let br = self.bracket_monomials(ma, mb);
                if !br.is_zero() {
                    out.add_scaled(&(x.clone() * y.clone()), br);
                }
            }
        }
        out
    }

    fn dbar_table(&self) -> &[Multivector<S>] {
        self.dbar_cache.get_or_init(|| {
            let n = self.gens.dimension();
            let mut table: Vec<Multivector<S>> = Vec::with_capacity(n);
            for a in 0..n as u32 {
                let v = match Monomial(a).split_first() {
                    None => Multivector::zero(),
                    Some((g, rest)) => {
                        // d(g∧r) = dg∧r − g∧dr
                        let first = self.differentials[g].wedge(&Multivector::monomial(rest));
                        let second = Multivector::monomial(Monomial::generator(g)).wedge(&table[rest.0 as usize]);
                        &first - &second
                    }
                };
                table.push(v);
            }
            table
        })
    }

    pub fn differential_monomial(&self, m: Monomial) -> &Multivector<S> {
        &self.dbar_table()[m.0 as usize]
    }

    /// The differential, extended as an anti-derivation.
    pub fn differential(&self, a: &Multivector<S>) -> Multivector<S> {
        a.map_linear(|m| self.differential_monomial(m).clone())
    }

    /// The direct bracket formulas evaluated from Lie-algebra data.
    pub fn schouten_direct(&self, a: &Multivector<S>, b: &Multivector<S>) -> Result<Multivector<S>, DgaError> {
        let lie = self.lie.as_ref().ok_or(DgaError::NoLieData)?;
        let mut out = Multivector::zero();
        for (ma, x) in a.terms() {
            for (mb, y) in b.terms() {
                out.add_scaled(&(x.clone() * y.clone()), &lie.bracket(ma, mb));
            }
        }
        Ok(out)
    }
}
