//! Exhaustive verification of the Gerstenhaber and differential axioms over
//! basis monomials.

use std::fmt;

use rayon::prelude::*;

use super::DgaPresentation;
use crate::algebra::{Monomial, Multivector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    L1,
    L2,
    L3,
    JacobiCyclic,
    C1,
    C2,
    C3,
    Distributive1,
    Distributive2,
    WedgeAssociative,
    D1,
    D2,
    D3,
    D4,
}

impl Axiom {
    pub const ALL: [Axiom; 14] = [
        Axiom::L1,
        Axiom::L2,
        Axiom::L3,
        Axiom::JacobiCyclic,
        Axiom::C1,
        Axiom::C2,
        Axiom::C3,
        Axiom::Distributive1,
        Axiom::Distributive2,
        Axiom::WedgeAssociative,
        Axiom::D1,
        Axiom::D2,
        Axiom::D3,
        Axiom::D4,
    ];

    pub fn description(self) -> &'static str {
        match self {
            Axiom::L1 => "[f^i, f^j] in f^{i+j-1}",
            Axiom::L2 => "[a,b] = (-1)^{ab+a+b}[b,a]",
            Axiom::L3 => "[a,[b,c]] = [[a,b],c] - (-1)^{ab+a+b}[b,[a,c]]",
            Axiom::JacobiCyclic => "cyclic Jacobi with (-1)^{(a+1)(c+1)} weights",
            Axiom::C1 => "f^i ^ f^j in f^{i+j}",
            Axiom::C2 => "a^b = (-1)^{ab} b^a",
            Axiom::C3 => "[a^b,c] = a^[b,c] + (-1)^{ab} b^[a,c]",
            Axiom::Distributive1 => "[a,b^c] = [a,b]^c + (-1)^{bc}[a,c]^b = [a,b]^c + (-1)^{b+ab} b^[a,c]",
            Axiom::Distributive2 => "[a^b,c] = a^[b,c] + (-1)^{b+bc}[a,c]^b",
            Axiom::WedgeAssociative => "(a^b)^c = a^(b^c)",
            Axiom::D1 => "d f^j in f^{j+1}",
            Axiom::D2 => "d d = 0",
            Axiom::D3 => "d[a,b] = [da,b] - (-1)^a [a,db]",
            Axiom::D4 => "d(a^b) = da^b + (-1)^a a^db",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::L1 => "L1",
            Axiom::L2 => "L2",
            Axiom::L3 => "L3",
            Axiom::JacobiCyclic => "Jacobi-cyclic",
            Axiom::C1 => "C1",
            Axiom::C2 => "C2",
            Axiom::C3 => "C3",
            Axiom::Distributive1 => "distributive-1",
            Axiom::Distributive2 => "distributive-2",
            Axiom::WedgeAssociative => "wedge-associative",
            Axiom::D1 => "D1",
            Axiom::D2 => "D2",
            Axiom::D3 => "D3",
            Axiom::D4 => "D4",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AxiomOptions {
    /// Only monomials of total degree at most this enter triple checks.
    pub triple_degree_limit: Option<u32>,
    /// Further limit for the two Jacobi identities.
    pub jacobi_degree_limit: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    pub checked: usize,
    /// First failing monomial tuple in enumeration order.
    pub counterexample: Option<Vec<Monomial>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, axiom: Axiom) -> &AxiomCheck {
        self.checks.iter().find(|c| c.axiom == axiom).expect("every axiom is checked")
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn sgn<S: Scalar>(e: u32) -> S {
    if e % 2 == 0 {
        S::one()
    } else {
        -S::one()
    }
}

fn degree_ok<S: Scalar>(v: &Multivector<S>, d: i64) -> bool {
    v.is_zero() || (d >= 0 && v.homogeneous_degree() == Some(d as u32))
}

struct Ctx<'a, S> {
    pres: &'a DgaPresentation<S>,
}

impl<S: Scalar> Ctx<'_, S> {
    fn mv(&self, m: Monomial) -> Multivector<S> {
        Multivector::monomial(m)
    }

    fn br(&self, a: &Multivector<S>, b: &Multivector<S>) -> Multivector<S> {
        self.pres.schouten(a, b)
    }

    fn d(&self, a: &Multivector<S>) -> Multivector<S> {
        self.pres.differential(a)
    }

    fn pair(&self, axiom: Axiom, a: Monomial, b: Monomial) -> bool {
        let (x, y) = (self.mv(a), self.mv(b));
        let (da, db) = (a.degree(), b.degree());
        match axiom {
            Axiom::L1 => degree_ok(&self.br(&x, &y), da as i64 + db as i64 - 1),
            Axiom::L2 => self.br(&x, &y) == self.br(&y, &x).scale(&sgn::<S>(da * db + da + db)),
            Axiom::C1 => degree_ok(&x.wedge(&y), (da + db) as i64),
            Axiom::C2 => x.wedge(&y) == y.wedge(&x).scale(&sgn::<S>(da * db)),
            Axiom::D3 => {
                let lhs = self.d(&self.br(&x, &y));
                let rhs = &self.br(&self.d(&x), &y) - &self.br(&x, &self.d(&y)).scale(&sgn::<S>(da));
                lhs == rhs
            }
            Axiom::D4 => {
                let lhs = self.d(&x.wedge(&y));
                let rhs = &self.d(&x).wedge(&y) + &x.wedge(&self.d(&y)).scale(&sgn::<S>(da));
                lhs == rhs
            }
            _ => unreachable!("not a pair axiom"),
        }
    }

    fn triple(&self, axiom: Axiom, a: Monomial, b: Monomial, c: Monomial) -> bool {
        let (x, y, z) = (self.mv(a), self.mv(b), self.mv(c));
        let (da, db, dc) = (a.degree(), b.degree(), c.degree());
        match axiom {
            Axiom::L3 => {
                let lhs = self.br(&x, &self.br(&y, &z));
                let rhs =
                    &self.br(&self.br(&x, &y), &z) - &self.br(&y, &self.br(&x, &z)).scale(&sgn::<S>(da * db + da + db));
                lhs == rhs
            }
            Axiom::JacobiCyclic => {
                let t1 = self.br(&x, &self.br(&y, &z)).scale(&sgn::<S>((da + 1) * (dc + 1)));
                let t2 = self.br(&y, &self.br(&z, &x)).scale(&sgn::<S>((db + 1) * (da + 1)));
                let t3 = self.br(&z, &self.br(&x, &y)).scale(&sgn::<S>((dc + 1) * (db + 1)));
                (&(&t1 + &t2) + &t3).is_zero()
            }
            Axiom::C3 => {
                let lhs = self.br(&x.wedge(&y), &z);
                let rhs = &x.wedge(&self.br(&y, &z)) + &y.wedge(&self.br(&x, &z)).scale(&sgn::<S>(da * db));
                lhs == rhs
            }
            Axiom::Distributive1 => {
                let lhs = self.br(&x, &y.wedge(&z));
                let ab = self.br(&x, &y).wedge(&z);
                let first = &ab + &self.br(&x, &z).wedge(&y).scale(&sgn::<S>(db * dc));
                let second = &ab + &y.wedge(&self.br(&x, &z)).scale(&sgn::<S>(db + da * db));
                lhs == first && lhs == second
            }
            Axiom::Distributive2 => {
                let lhs = self.br(&x.wedge(&y), &z);
                let rhs = &x.wedge(&self.br(&y, &z)) + &self.br(&x, &z).wedge(&y).scale(&sgn::<S>(db + db * dc));
                lhs == rhs
            }
            Axiom::WedgeAssociative => x.wedge(&y).wedge(&z) == x.wedge(&y.wedge(&z)),
            _ => unreachable!("not a triple axiom"),
        }
    }

    fn single(&self, axiom: Axiom, a: Monomial) -> bool {
        let x = self.mv(a);
        match axiom {
            Axiom::D1 => degree_ok(&self.d(&x), a.degree() as i64 + 1),
            Axiom::D2 => self.d(&self.d(&x)).is_zero(),
            _ => unreachable!("not a single-argument axiom"),
        }
    }
}

/// Checks every axiom on all basis monomials (triples optionally restricted
/// by degree). Failures are reported with their first counterexample.
pub fn verify_axioms<S: Scalar>(pres: &DgaPresentation<S>, opts: AxiomOptions) -> AxiomReport {
    let ctx = Ctx { pres };
    // populate the caches before fanning out
    let _ = pres.bracket_monomials(Monomial::UNIT, Monomial::UNIT);
    let _ = pres.differential_monomial(Monomial::UNIT);

    let all: Vec<Monomial> = pres.generators().all_monomials().collect();
    let upto = |lim: Option<u32>| -> Vec<Monomial> {
        all.iter().copied().filter(|m| lim.map_or(true, |l| m.degree() <= l)).collect()
    };
    let limited = upto(opts.triple_degree_limit);
    let jacobi_limit = match (opts.triple_degree_limit, opts.jacobi_degree_limit) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    let jacobi = upto(jacobi_limit);

    let mut checks = Vec::new();
    for axiom in Axiom::ALL {
        let check = match axiom {
            Axiom::D1 | Axiom::D2 => {
                let bad = all.iter().find(|&&a| !ctx.single(axiom, a));
                AxiomCheck { axiom, passed: bad.is_none(), checked: all.len(), counterexample: bad.map(|a| vec![*a]) }
            }
            Axiom::L1 | Axiom::L2 | Axiom::C1 | Axiom::C2 | Axiom::D3 | Axiom::D4 => {
                let bad: Vec<Option<Vec<Monomial>>> = all
                    .par_iter()
                    .map(|&a| all.iter().find(|&&b| !ctx.pair(axiom, a, b)).map(|&b| vec![a, b]))
                    .collect();
                let first = bad.into_iter().flatten().next();
                AxiomCheck { axiom, passed: first.is_none(), checked: all.len() * all.len(), counterexample: first }
            }
            _ => {
                let limited = if matches!(axiom, Axiom::L3 | Axiom::JacobiCyclic) { &jacobi } else { &limited };
                let bad: Vec<Option<Vec<Monomial>>> = limited
                    .par_iter()
                    .map(|&a| {
                        for &b in limited {
                            for &c in limited {
                                if !ctx.triple(axiom, a, b, c) {
                                    return Some(vec![a, b, c]);
                                }
                            }
                        }
                        None
                    })
                    .collect();
                let first = bad.into_iter().flatten().next();
                AxiomCheck { axiom, passed: first.is_none(), checked: limited.len().pow(3), counterexample: first }
            }
        };
        checks.push(check);
    }
    AxiomReport { checks }
}
