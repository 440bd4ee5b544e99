//! The extended Maurer–Cartan equation `∂̄Γ + ∂⃗Γ + ½[Γ,Γ] = 0`, its
//! recursive solution in harmonic gauge, and closed forms for comparison.

use super::coords::CoordinateSystem;
use super::field::SuperField;
use super::ring::SuperScalar;
use crate::algebra::{Monomial, Multivector};
use crate::dga::DgaPresentation;
use crate::error::DeformationError;
use crate::hodge::Hodge;
use crate::nil::ComplexLayout;
use crate::scalar::Scalar;

/// The Chen vector field `∂⃗ = Σ_α c_α ∂/∂x_α`.
#[derive(Clone, PartialEq, Debug)]
pub struct ChenField<S: Scalar> {
    pub coeffs: Vec<SuperScalar<S>>,
}

impl<S: Scalar> ChenField<S> {
    pub fn zero(len: usize, trunc: u32) -> Self {
        ChenField { coeffs: vec![SuperScalar::zero(trunc); len] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(SuperScalar::is_zero)
    }

    /// `∂⃗f` for a field `f`.
    pub fn apply(&self, coords: &CoordinateSystem<S>, f: &SuperField<S>) -> SuperField<S> {
        let mut out = SuperField::zero(f.truncation());
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = out.add(&f.derivative(i, coords.is_odd(i)).left_mul(c));
        }
        out
    }

    /// `∂⃗r` for a ring element.
    pub fn apply_scalar(&self, coords: &CoordinateSystem<S>, r: &SuperScalar<S>) -> SuperScalar<S> {
        let mut out = SuperScalar::zero(r.truncation());
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&c.mul(&r.derivative(i, coords.is_odd(i))));
            }
        }
        out
    }

    /// Each `c_α` has parity opposite to `x_α`.
    pub fn is_odd_field(&self, coords: &CoordinateSystem<S>) -> bool {
        self.coeffs.iter().enumerate().all(|(i, c)| {
            let want = if coords.is_odd(i) { 0 } else { 1 };
            c.is_zero() || c.parity() == Some(want)
        })
    }
}

/// A solution of the extended Maurer–Cartan equation.
#[derive(Clone, PartialEq, Debug)]
pub struct KuranishiSolution<S: Scalar> {
    pub gamma: SuperField<S>,
    pub chen: ChenField<S>,
}

/// `∂̄Γ + ∂⃗Γ + ½[Γ,Γ]`.
pub fn mc_residual<S: Scalar>(
    pres: &DgaPresentation<S>,
    coords: &CoordinateSystem<S>,
    gamma: &SuperField<S>,
    chen: &ChenField<S>,
) -> SuperField<S> {
    let half = S::from_ratio(1, 2);
    gamma.dbar(pres).add(&chen.apply(coords, gamma)).add(&gamma.bracket(pres, gamma).scale(&half))
}

/// Order-by-order solution with corrections `Γ^{(k)} = ∂̄*G(Q_k)` and
/// `∂⃗^{(k)}` read off from the harmonic part `H(Q_k)`.
pub fn kuranishi_solve<S: Scalar>(
    pres: &DgaPresentation<S>,
    hodge: &Hodge<S>,
    coords: &CoordinateSystem<S>,
    trunc: u32,
) -> Result<KuranishiSolution<S>, DeformationError> {
    if trunc < 2 {
        return Err(DeformationError::Truncation { min: 2, got: trunc });
    }
    let half = S::from_ratio(1, 2);
    // orders[k] is the coordinate-degree k part of Γ; chen_orders likewise
    let mut orders: Vec<SuperField<S>> = vec![SuperField::zero(trunc), coords.gamma1(trunc)];
    let mut chen_orders: Vec<ChenField<S>> = vec![ChenField::zero(coords.len(), trunc); 2];
    for k in 2..=trunc as usize {
        let mut r = SuperField::zero(trunc);
        for i in 1..k {
            r = r.add(&orders[i].bracket(pres, &orders[k - i]).scale(&half));
        }
        for (j, c) in chen_orders.iter().enumerate().take(k).skip(2) {
            // c^{(j)} · ∂Γ^{(m)} has degree j + m − 1
            r = r.add(&c.apply(coords, &orders[k + 1 - j]));
        }
        let q = r.degree_part(k as u32).neg();
        let chen = ChenField { coeffs: coords.decompose_field(&q.harmonic_projection(hodge))? };
        orders.push(q.homotopy(hodge));
        chen_orders.push(chen);
    }
    let mut gamma = SuperField::zero(trunc);
    for g in &orders {
        gamma = gamma.add(g);
    }
    let mut chen = ChenField::zero(coords.len(), trunc);
    for c in &chen_orders {
        for (a, b) in chen.coeffs.iter_mut().zip(&c.coeffs) {
            *a = a.add(b);
        }
    }
    Ok(KuranishiSolution { gamma, chen })
}

/// `1/(1 − x)` expanded to the truncation order.
pub fn geometric<S: Scalar>(x: &SuperScalar<S>) -> SuperScalar<S> {
    SuperScalar::one(x.truncation()).sub(x).inverse().expect("1 - x is a unit")
}

/// The closed-form solution on the Kodaira surface in the coordinates of
/// [`CoordinateSystem::kodaira_surface`]: `Γ = Γ_1 − s0 t4/(1−t2) T −
/// s0 s3/(1−t2) ρ̄∧T`, and the four Chen coefficients evaluated in the
/// strict ring.
pub fn closed_form_kodaira<S: Scalar>(trunc: u32) -> KuranishiSolution<S> {
    let cs = CoordinateSystem::<S>::kodaira_surface();
    let v = |n: &str| cs.var_named(n, trunc).expect("surface coordinate");
    let l = ComplexLayout { n: 1 };
    let t = Monomial::generator(l.t(0));
    let (_, rt) = Monomial::generator(l.or()).wedge(t).expect("distinct generators");
    let inv = geometric(&v("t2"));
    let mu1 = v("s0").mul(&v("t4")).mul(&inv).neg();
    let mu2 = v("s0").mul(&v("s3")).mul(&inv).neg();
    let gamma = cs
        .gamma1(trunc)
        .add(&SuperField::coefficient_times(&mu1, &Multivector::monomial(t)))
        .add(&SuperField::coefficient_times(&mu2, &Multivector::monomial(rt)));

    let i_half = S::imag_ratio(1, 2);
    let mut chen = ChenField::zero(cs.len(), trunc);
    let idx = |n: &str| cs.index_of(n).expect("surface coordinate");
    chen.coeffs[idx("s1")] = mu1.mul(&v("s0")).scale(&i_half);
    chen.coeffs[idx("t1")] = mu2.mul(&v("s0")).scale(&i_half);
    chen.coeffs[idx("t3")] = mu1.mul(&mu2).scale(&i_half);
    chen.coeffs[idx("t5")] = mu2.mul(&v("s3")).scale(&S::imag_unit());
    KuranishiSolution { gamma, chen }
}

/// `s^j_k = ½(ω̄^j∧T_k − ω̄^k∧T_j)` on the Kodaira manifold of dimension `n + 1`.
pub fn s_field<S: Scalar>(n: usize, j: usize, k: usize) -> Multivector<S> {
    let l = ComplexLayout { n };
    let mono = |a: usize, b: usize| {
        let (s, m) = Monomial::generator(a).wedge(Monomial::generator(b)).expect("distinct generators");
        Multivector::term(m, S::from_ratio(s as i64, 2))
    };
    &mono(l.ow(j), l.t(k)) - &mono(l.ow(k), l.t(j))
}

/// `Γ = Γ_1 − (1/(1−a)) Σ a^i a_j s^j_i` on the degree-two coordinates of
/// [`CoordinateSystem::kodaira_degree_two`], with vanishing Chen field.
pub fn generalized_closed_form<S: Scalar>(n: usize, trunc: u32) -> KuranishiSolution<S> {
    let cs = CoordinateSystem::<S>::kodaira_degree_two(n);
    let v = |name: String| cs.var_named(&name, trunc).expect("degree-two coordinate");
    let inv = geometric(&v("a".to_string()));
    let mut gamma = cs.gamma1(trunc);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let c = inv.mul(&v(format!("a^{}", i + 1))).mul(&v(format!("a_{}", j + 1))).neg();
            gamma = gamma.add(&SuperField::coefficient_times(&c, &s_field(n, j, i)));
        }
    }
    KuranishiSolution { gamma, chen: ChenField::zero(cs.len(), trunc) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nil::{build_kodaira, complex_dga};
    use crate::GaussianRational as Q;

    #[test]
    fn surface_recursion_matches_closed_form() {
        let p = complex_dga(&build_kodaira::<Q>(1).unwrap());
        let h = Hodge::new(&p);
        let cs = CoordinateSystem::kodaira_surface();
        let sol = kuranishi_solve(&p, &h, &cs, 5).unwrap();
        let closed = closed_form_kodaira::<Q>(5);
        assert_eq!(sol.gamma, closed.gamma);
        assert!(sol.chen.is_zero());
        assert!(closed.chen.is_zero());
        assert!(mc_residual(&p, &cs, &sol.gamma, &sol.chen).is_zero());
    }

    #[test]
    fn truncation_below_two_is_rejected() {
        let p = complex_dga(&build_kodaira::<Q>(1).unwrap());
        let h = Hodge::new(&p);
        let cs = CoordinateSystem::kodaira_surface();
        assert_eq!(kuranishi_solve(&p, &h, &cs, 1).unwrap_err(), DeformationError::Truncation { min: 2, got: 1 });
    }
}
