//! The product `∂_α ∘ ∂_β` on the generic stratum of the Kodaira surface
//! deformation space: `∂Γ/∂x_α ∧ ∂Γ/∂x_β` reduced modulo the image of
//! `∂̄_Γ = ∂̄ + [Γ, ·]` and the `t5` direction.

use std::collections::BTreeMap;

use super::coords::CoordinateSystem;
use super::field::SuperField;
use super::ring::SuperScalar;
use crate::dga::DgaPresentation;
use crate::error::DeformationError;
use crate::hodge::Hodge;
use crate::scalar::Scalar;

/// `∂̄_Γ v = ∂̄v + [Γ, v]`.
pub fn dbar_gamma<S: Scalar>(pres: &DgaPresentation<S>, gamma: &SuperField<S>, v: &SuperField<S>) -> SuperField<S> {
    v.dbar(pres).add(&gamma.bracket(pres, v))
}

/// Surface coordinates on `s0 = 0` with the `t5` direction quotiented.
pub const GENERIC_COORDINATES: [&str; 10] = ["t0", "t1", "t2", "t3", "t4", "s1", "s2", "s3", "s4", "s5"];

/// Structure constants `μ^{αβ}_γ`, indexed by positions in
/// [`FrobeniusTable::coordinates`].
#[derive(Clone, Debug)]
pub struct FrobeniusTable<S: Scalar> {
    coords: CoordinateSystem<S>,
    members: Vec<usize>,
    entries: BTreeMap<(usize, usize), Vec<SuperScalar<S>>>,
    trunc: u32,
}

impl<S: Scalar> FrobeniusTable<S> {
    /// Surface coordinate indices of the table rows, in order.
    pub fn coordinates(&self) -> &[usize] {
        &self.members
    }

    pub fn coordinate_system(&self) -> &CoordinateSystem<S> {
        &self.coords
    }

    pub fn names(&self) -> Vec<String> {
        self.members.iter().map(|&i| self.coords.get(i).name.clone()).collect()
    }

    pub fn truncation(&self) -> u32 {
        self.trunc
    }

    fn position(&self, name: &str) -> Result<usize, DeformationError> {
        let i = self.coords.index_of(name)?;
        self.members.iter().position(|&m| m == i).ok_or_else(|| DeformationError::UnknownCoordinate(name.into()))
    }

    /// `μ^{αβ}_γ` for every `γ`, by position.
    pub fn product(&self, a: usize, b: usize) -> &[SuperScalar<S>] {
        &self.entries[&(a, b)]
    }

    pub fn product_named(&self, a: &str, b: &str) -> Result<Vec<(String, SuperScalar<S>)>, DeformationError> {
        let (a, b) = (self.position(a)?, self.position(b)?);
        let names = self.names();
        Ok(self
            .product(a, b)
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, c)| (names[g].clone(), c.clone()))
            .collect())
    }

    fn is_odd(&self, pos: usize) -> bool {
        self.coords.is_odd(self.members[pos])
    }

    /// `μ^{αβ} = (−1)^{x̃_α x̃_β} μ^{βα}`.
    pub fn is_supercommutative(&self) -> bool {
        let n = self.members.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let flip = self.is_odd(a) && self.is_odd(b);
                self.product(a, b)
                    .iter()
                    .zip(self.product(b, a))
                    .all(|(x, y)| if flip { *x == y.neg() } else { x == y })
            })
        })
    }

    /// The coordinate `name` acts as a two-sided unit.
    pub fn is_unit(&self, name: &str) -> Result<bool, DeformationError> {
        let u = self.position(name)?;
        let n = self.members.len();
        let one = SuperScalar::one(self.trunc);
        Ok((0..n).all(|a| {
            [self.product(u, a), self.product(a, u)]
                .iter()
                .all(|row| row.iter().enumerate().all(|(g, c)| if g == a { *c == one } else { c.is_zero() }))
        }))
    }

    /// First triple `(α, β, γ)` where `(∂_α∘∂_β)∘∂_γ ≠ ∂_α∘(∂_β∘∂_γ)`.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.members.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut left = vec![SuperScalar::zero(self.trunc); n];
                    let mut right = vec![SuperScalar::zero(self.trunc); n];
                    for d in 0..n {
                        let ab = &self.product(a, b)[d];
                        if !ab.is_zero() {
                            for (e, x) in self.product(d, c).iter().enumerate() {
                                left[e] = left[e].add(&ab.mul(x));
                            }
                        }
                        let bc = &self.product(b, c)[d];
                        if !bc.is_zero() {
                            // moving ∂_α past the coefficient μ^{βγ}_δ
                            let odd = self.is_odd(a) && (self.is_odd(b) ^ self.is_odd(c) ^ self.is_odd(d));
                            let coeff = if odd { bc.neg() } else { bc.clone() };
                            for (e, x) in self.product(a, d).iter().enumerate() {
                                right[e] = right[e].add(&coeff.mul(x));
                            }
                        }
                    }
                    if left != right {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }
}

/// Builds the table on the generic stratum of `K0` (`s0 = 0`, `Γ = Γ_1`).
pub fn frobenius_products<S: Scalar>(
    pres: &DgaPresentation<S>,
    hodge: &Hodge<S>,
    trunc: u32,
) -> Result<FrobeniusTable<S>, DeformationError> {
    let coords = CoordinateSystem::<S>::kodaira_surface();
    let members: Vec<usize> = GENERIC_COORDINATES.iter().map(|n| coords.index_of(n)).collect::<Result<_, _>>()?;
    let t5 = coords.index_of("t5")?;
    let mut gamma = SuperField::zero(trunc);
    for &i in &members {
        gamma = gamma.add(&SuperField::coefficient_times(&coords.var(i, trunc), &coords.get(i).theta));
    }
    let tangent: Vec<SuperField<S>> = members.iter().map(|&i| gamma.derivative(i, coords.is_odd(i))).collect();

    let mut entries = BTreeMap::new();
    for (a, ta) in tangent.iter().enumerate() {
        for (b, tb) in tangent.iter().enumerate() {
            let mu = reduce(pres, hodge, &coords, &gamma, &ta.wedge(tb), trunc)?;
            let mut row = Vec::with_capacity(members.len());
            for (i, c) in mu.into_iter().enumerate() {
                if i == t5 {
                    continue;
                }
                if !members.contains(&i) {
                    if !c.is_zero() {
                        return Err(DeformationError::ReductionFailure { degree: 0 });
                    }
                    continue;
                }
                row.push((i, c));
            }
            row.sort_by_key(|(i, _)| members.iter().position(|m| m == i));
            entries.insert((a, b), row.into_iter().map(|(_, c)| c).collect());
        }
    }
    Ok(FrobeniusTable { coords, members, entries, trunc })
}

/// Solves `p = Σ μ_γ θ^γ + ∂̄_Γ v` order by order in the coordinates; the
/// correction at each order is `v^{(k)} = ∂̄*G(R_k − H R_k)`.
fn reduce<S: Scalar>(
    pres: &DgaPresentation<S>,
    hodge: &Hodge<S>,
    coords: &CoordinateSystem<S>,
    gamma: &SuperField<S>,
    p: &SuperField<S>,
    trunc: u32,
) -> Result<Vec<SuperScalar<S>>, DeformationError> {
    let mut mu = vec![SuperScalar::zero(trunc); coords.len()];
    let mut correction = SuperField::zero(trunc);
    for k in 0..=trunc {
        let r = p.sub(&gamma.bracket(pres, &correction)).degree_part(k);
        let h = r.harmonic_projection(hodge);
        let rest = r.sub(&h);
        let v = rest.homotopy(hodge);
        if v.dbar(pres) != rest {
            return Err(DeformationError::ReductionFailure { degree: k });
        }
        for (m, c) in mu.iter_mut().zip(coords.decompose_field(&h)?) {
            *m = m.add(&c);
        }
        correction = correction.add(&v);
    }
    Ok(mu)
}
