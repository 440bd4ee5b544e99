//! Coordinates on cohomology: one coordinate per harmonic basis element.

use super::field::SuperField;
use super::ring::{CoeffMonomial, SuperScalar};
use crate::algebra::{GeneratorSet, Monomial, Multivector};
use crate::error::DeformationError;
use crate::hodge::Hodge;
use crate::linalg::Matrix;
use crate::nil::{complex_generators, ComplexLayout};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq)]
pub struct Coordinate<S> {
    pub name: String,
    pub odd: bool,
    pub theta: Multivector<S>,
}

#[derive(Clone)]
pub struct CoordinateSystem<S> {
    coords: Vec<Coordinate<S>>,
    dim: usize,
    solver: Matrix<S>,
}

fn element<S: Scalar>(gens: &GeneratorSet, names: &[&str]) -> Multivector<S> {
    let (m, sign) = gens.monomial(names).expect("known generator names");
    Multivector::term(m, S::from_int(sign as i64))
}

impl<S: Scalar> CoordinateSystem<S> {
    /// Builds a system from named classes; parity follows the multivector
    /// degree. Panics past 64 coordinates.
    pub fn new(dim: usize, coords: Vec<(String, Multivector<S>)>) -> Self {
        assert!(coords.len() <= 64, "at most 64 coordinates");
        let coords: Vec<Coordinate<S>> = coords
            .into_iter()
            .map(|(name, theta)| {
                let odd = theta.homogeneous_degree().expect("homogeneous class") % 2 == 1;
                Coordinate { name, odd, theta }
            })
            .collect();
        let columns: Vec<Vec<S>> = coords.iter().map(|c| dense(&c.theta, dim)).collect();
        let solver = Matrix::from_columns(&columns, dim);
        CoordinateSystem { coords, dim, solver }
    }

    /// The Kodaira surface: even `t0..t5` then odd `s0..s5`.
    pub fn kodaira_surface() -> Self {
        let g = complex_generators(1);
        let table: [(&str, &[&str]); 12] = [
            ("t0", &[]),
            ("t1", &["ow", "or"]),
            ("t2", &["or", "W"]),
            ("t3", &["ow", "T"]),
            ("t4", &["T", "W"]),
            ("t5", &["ow", "or", "T", "W"]),
            ("s0", &["or"]),
            ("s1", &["ow"]),
            ("s2", &["W"]),
            ("s3", &["or", "T", "W"]),
            ("s4", &["ow", "T", "W"]),
            ("s5", &["ow", "or", "T"]),
        ];
        let coords = table.iter().map(|(n, names)| (n.to_string(), element(&g, names))).collect();
        Self::new(g.dimension(), coords)
    }

    /// Degree-two classes of the Kodaira manifold of dimension `n + 1`:
    /// `a_j` on `ω̄^j∧ρ̄`, `a_ij` on `ω̄^i∧ω̄^j`, `a` on `ρ̄∧W`,
    /// `a^k_j` on `½(ω̄^j∧T_k + ω̄^k∧T_j)` and `a^j` on `T_j∧W`.
    pub fn kodaira_degree_two(n: usize) -> Self {
        let g = complex_generators(n);
        let l = ComplexLayout { n };
        let mono = |a: usize, b: usize| -> Multivector<S> {
            let (s, m) = Monomial::generator(a).wedge(Monomial::generator(b)).expect("distinct generators");
            Multivector::term(m, S::from_int(s as i64))
        };
        let mut coords = Vec::new();
        for j in 0..n {
            coords.push((format!("a_{}", j + 1), mono(l.ow(j), l.or())));
        }
        for i in 0..n {
            for j in i + 1..n {
                coords.push((format!("a_{}{}", i + 1, j + 1), mono(l.ow(i), l.ow(j))));
            }
        }
        coords.push(("a".to_string(), mono(l.or(), l.w())));
        let half = S::from_ratio(1, 2);
        for k in 0..n {
            for j in 0..=k {
                let phi = if j == k {
                    mono(l.ow(j), l.t(k))
                } else {
                    (&mono(l.ow(j), l.t(k)) + &mono(l.ow(k), l.t(j))).scale(&half)
                };
                coords.push((format!("a^{}_{}", k + 1, j + 1), phi));
            }
        }
        for j in 0..n {
            coords.push((format!("a^{}", j + 1), mono(l.t(j), l.w())));
        }
        Self::new(g.dimension(), coords)
    }

    /// Every harmonic basis vector, ordered by bidegree.
    pub fn from_harmonics(hodge: &Hodge<S>) -> Self {
        let gens = hodge.generators();
        let mut coords = Vec::new();
        for (bd, basis) in hodge.cohomology_basis().spaces {
            for (k, theta) in basis.into_iter().enumerate() {
                coords.push((format!("x{}{}_{}", bd.p, bd.q, k), theta));
            }
        }
        Self::new(gens.dimension(), coords)
    }

    /// Subsystem on the named coordinates, in the given order.
    pub fn restrict(&self, names: &[&str]) -> Result<Self, DeformationError> {
        let coords = names
            .iter()
            .map(|n| {
                let c = self.coords.iter().find(|c| c.name == *n);
                c.map(|c| (c.name.clone(), c.theta.clone()))
                    .ok_or_else(|| DeformationError::UnknownCoordinate(n.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(self.dim, coords))
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Coordinate<S>] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &Coordinate<S> {
        &self.coords[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize, DeformationError> {
        self.coords
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| DeformationError::UnknownCoordinate(name.to_string()))
    }

    pub fn names(&self) -> Vec<String> {
        self.coords.iter().map(|c| c.name.clone()).collect()
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.coords[i].odd
    }

    /// The coordinate `x_i` as a ring element.
    pub fn var(&self, i: usize, trunc: u32) -> SuperScalar<S> {
        if self.coords[i].odd {
            SuperScalar::odd_var(i, trunc)
        } else {
            SuperScalar::even_var(i, trunc)
        }
    }

    pub fn var_named(&self, name: &str, trunc: u32) -> Result<SuperScalar<S>, DeformationError> {
        Ok(self.var(self.index_of(name)?, trunc))
    }

    /// `Γ_1 = Σ x_α θ^α`.
    pub fn gamma1(&self, trunc: u32) -> SuperField<S> {
        let mut g = SuperField::zero(trunc);
        for (i, c) in self.coords.iter().enumerate() {
            g = g.add(&SuperField::coefficient_times(&self.var(i, trunc), &c.theta));
        }
        g
    }

    /// Coefficients of `v` along the `θ^α`, or `None` outside their span.
    pub fn decompose(&self, v: &Multivector<S>) -> Option<Vec<S>> {
        self.solver.solve(&dense(v, self.dim))
    }

    /// Writes `Σ_m r_m · v_m` as `Σ_α c_α θ^α`, returning the `c_α`.
    pub fn decompose_field(&self, f: &SuperField<S>) -> Result<Vec<SuperScalar<S>>, DeformationError> {
        let trunc = f.truncation();
        let mut out = vec![SuperScalar::zero(trunc); self.len()];
        for (cm, v) in f.coefficient_fields() {
            let xs = self.decompose(&v).ok_or(DeformationError::NotHarmonic)?;
            for (o, x) in out.iter_mut().zip(xs) {
                *o = o.add(&SuperScalar::term(cm.clone(), x, trunc));
            }
        }
        Ok(out)
    }

    pub fn monomial_name(&self, m: &CoeffMonomial) -> String {
        m.display(&self.names())
    }
}

impl<S: Scalar> std::fmt::Debug for CoordinateSystem<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.coords.iter().map(|c| (&c.name, &c.theta))).finish()
    }
}

fn dense<S: Scalar>(v: &Multivector<S>, dim: usize) -> Vec<S> {
    let mut out = vec![S::zero(); dim];
    for (m, c) in v.terms() {
        out[m.0 as usize] = c.clone();
    }
    out
}
