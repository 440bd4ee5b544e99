//! Presentations coming from geometry: 2-step nilpotent Lie algebras with an
//! abelian complex structure and a two-dimensional center, and invariant
//! symplectic forms on the Kodaira surface.

use std::collections::BTreeMap;

use crate::algebra::{Generator, GeneratorSet, Monomial, Multivector};
use crate::dga::{ComplexLieData, DgaPresentation};
use crate::error::SpecError;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Structure constants `[T̄_j, T_k] = E_{jk} W + F_{jk} W̄`.
#[derive(Debug, Clone, PartialEq)]
pub struct NilComplexSpec<S> {
    n: usize,
    e: Vec<Vec<S>>,
    f: Vec<Vec<S>>,
}

impl<S: Scalar> NilComplexSpec<S> {
    pub fn new(e: Vec<Vec<S>>, f: Vec<Vec<S>>) -> Result<Self, SpecError> {
        let n = e.len();
        if n == 0 {
            return Err(SpecError::ZeroDimension);
        }
        let square = |m: &Vec<Vec<S>>| m.len() == n && m.iter().all(|r| r.len() == n);
        if !square(&e) || !square(&f) {
            return Err(SpecError::Shape { n });
        }
        for j in 0..n {
            for k in 0..n {
                if f[k][j].conj() != -e[j][k].clone() {
                    return Err(SpecError::FConstraint(k, j));
                }
            }
        }
        // T-directions must not be central: rank [E; F] = rank [Eᵀ; Fᵀ] = n.
        let stacked =
            |a: &Vec<Vec<S>>, b: &Vec<Vec<S>>| Matrix::from_rows(a.iter().chain(b.iter()).cloned().collect()).rank();
        let transpose =
            |m: &Vec<Vec<S>>| -> Vec<Vec<S>> { (0..n).map(|c| (0..n).map(|r| m[r][c].clone()).collect()).collect() };
        if stacked(&e, &f) < n || stacked(&transpose(&e), &transpose(&f)) < n {
            return Err(SpecError::CenterTooLarge);
        }
        Ok(NilComplexSpec { n, e, f })
    }

    /// `F` completed from `conj(F_{kj}) = −E_{jk}`.
    pub fn from_e(e: Vec<Vec<S>>) -> Result<Self, SpecError> {
        let n = e.len();
        if e.iter().any(|r| r.len() != n) {
            return Err(SpecError::Shape { n });
        }
        let f = (0..n).map(|k| (0..n).map(|j| -e[j][k].conj()).collect()).collect();
        Self::new(e, f)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn e(&self) -> &[Vec<S>] {
        &self.e
    }

    pub fn f(&self) -> &[Vec<S>] {
        &self.f
    }
}

/// The Kodaira manifold of complex dimension `n + 1`: `E_{jj} = −i/2`.
pub fn build_kodaira<S: Scalar>(n: usize) -> Result<NilComplexSpec<S>, SpecError> {
    let e = (0..n).map(|j| (0..n).map(|k| if j == k { S::imag_ratio(-1, 2) } else { S::zero() }).collect()).collect();
    NilComplexSpec::from_e(e)
}

/// Generator names: `ow, or, T, W` for `n = 1`, else `ow1.., or, T1.., W`.
pub fn complex_generators(n: usize) -> GeneratorSet {
    let idx = |base: &str, j: usize| if n == 1 { base.to_string() } else { format!("{base}{}", j + 1) };
    let mut gens: Vec<Generator> = (0..n).map(|j| Generator::form(idx("ow", j))).collect();
    gens.push(Generator::form("or"));
    gens.extend((0..n).map(|j| Generator::vector(idx("T", j))));
    gens.push(Generator::vector("W"));
    GeneratorSet::new(gens).expect("at most 16 distinct generators for n <= 7")
}

/// Positions of `ω̄^j`, `ρ̄`, `T_j`, `W` in [`complex_generators`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplexLayout {
    pub n: usize,
}

impl ComplexLayout {
    pub fn ow(self, j: usize) -> usize {
        j
    }
    pub fn or(self) -> usize {
        self.n
    }
    pub fn t(self, j: usize) -> usize {
        self.n + 1 + j
    }
    pub fn w(self) -> usize {
        2 * self.n + 1
    }
}

/// Lie data on `g^{1,0}` and `g^{0,1}`: `g^{1,0}` is abelian and
/// `[T_j, T̄_k]^{0,1} = −F_{kj} W̄`.
pub fn complex_lie_data<S: Scalar>(spec: &NilComplexSpec<S>) -> ComplexLieData<S> {
    let n = spec.n;
    let l = ComplexLayout { n };
    let mut mixed = BTreeMap::new();
    for j in 0..n {
        for k in 0..n {
            let c = spec.f[k][j].clone();
            if !c.is_zero() {
                mixed.insert((j, k), vec![(n, -c)]);
            }
        }
    }
    ComplexLieData {
        forms: (0..n).map(|j| l.ow(j)).chain([l.or()]).collect(),
        vectors: (0..n).map(|j| l.t(j)).chain([l.w()]).collect(),
        vector_brackets: BTreeMap::new(),
        mixed_brackets: mixed,
    }
}

/// The differential Gerstenhaber algebra of a nilpotent complex spec.
///
/// `∂̄T_j = Σ_k E_{kj} ω̄^k∧W`; generator brackets are evaluated with the
/// direct Lie-derivative formulas.
pub fn complex_dga<S: Scalar>(spec: &NilComplexSpec<S>) -> DgaPresentation<S> {
    let n = spec.n;
    let l = ComplexLayout { n };
    let gens = complex_generators(n);
    let lie = complex_lie_data(spec);
    let mut brackets = Vec::new();
    for a in 0..gens.len() {
        for b in a + 1..gens.len() {
            let v = lie.bracket(Monomial::generator(a), Monomial::generator(b));
            if !v.is_zero() {
                brackets.push(((a, b), v));
            }
        }
    }
    let mut diffs = Vec::new();
    for j in 0..n {
        let mut d = Multivector::zero();
        for k in 0..n {
            let c = spec.e[k][j].clone();
            if !c.is_zero() {
                let (s, m) = Monomial::generator(l.ow(k)).wedge(Monomial::generator(l.w())).unwrap();
                d.add_term(m, if s < 0 { -c } else { c });
            }
        }
        diffs.push((l.t(j), d));
    }
    DgaPresentation::new(gens, brackets, diffs).expect("nilpotent specs give well-formed tables").with_lie_data(lie)
}

/// A real Lie algebra by structure constants `[e_i, e_j] = Σ c_k e_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct RealLieAlgebra<S> {
    pub dim: usize,
    pub brackets: BTreeMap<(usize, usize), Vec<S>>,
}

impl<S: Scalar> RealLieAlgebra<S> {
    pub fn bracket(&self, a: &[S], b: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim];
        for (&(i, j), c) in &self.brackets {
            let w = a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone();
            if w.is_zero() {
                continue;
            }
            for (o, ck) in out.iter_mut().zip(c) {
                *o = o.clone() + w.clone() * ck.clone();
            }
        }
        out
    }

    fn basis(&self, i: usize) -> Vec<S> {
        let mut v = vec![S::zero(); self.dim];
        v[i] = S::one();
        v
    }
}

/// Real frame `X_1..X_n, Y_1..Y_n, U, V` with `[X_j, Y_j] = U`.
pub fn kodaira_real<S: Scalar>(n: usize) -> RealLieAlgebra<S> {
    let dim = 2 * n + 2;
    let mut brackets = BTreeMap::new();
    for j in 0..n {
        let mut u = vec![S::zero(); dim];
        u[2 * n] = S::one();
        brackets.insert((j, n + j), u);
    }
    RealLieAlgebra { dim, brackets }
}

/// `JX_j = Y_j, JY_j = −X_j, JU = V, JV = −U`, acting on columns.
pub fn kodaira_j<S: Scalar>(n: usize) -> Matrix<S> {
    let dim = 2 * n + 2;
    let mut j = Matrix::zeros(dim, dim);
    for k in 0..=n {
        let (x, y) = if k < n { (k, n + k) } else { (2 * n, 2 * n + 1) };
        j.set(y, x, S::one());
        j.set(x, y, -S::one());
    }
    j
}

/// `[JA, JB] = [A, B]` on all basis pairs. Errors if `J² ≠ −1`.
pub fn check_abelian<S: Scalar>(alg: &RealLieAlgebra<S>, j: &Matrix<S>) -> Result<bool, SpecError> {
    let sq = j.mul(j);
    if sq.add(&Matrix::identity(alg.dim)) != Matrix::zeros(alg.dim, alg.dim) {
        return Err(SpecError::NotComplexStructure);
    }
    for a in 0..alg.dim {
        for b in a + 1..alg.dim {
            let (ea, eb) = (alg.basis(a), alg.basis(b));
            if alg.bracket(&j.apply(&ea), &j.apply(&eb)) != alg.bracket(&ea, &eb) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Structure constants read off a real algebra in the Kodaira frame layout
/// via `T_j = (X_j − iY_j)/2`, `W = (U − iV)/2`.
pub fn spec_from_real<S: Scalar>(alg: &RealLieAlgebra<S>, n: usize) -> Result<NilComplexSpec<S>, SpecError> {
    if alg.dim != 2 * n + 2 {
        return Err(SpecError::Shape { n });
    }
    let half = S::from_ratio(1, 2);
    let i = S::imag_unit();
    let t = |j: usize, conj: bool| {
        let mut v = vec![S::zero(); alg.dim];
        v[j] = half.clone();
        let y = half.clone() * i.clone();
        v[n + j] = if conj { y } else { -y };
        v
    };
    let mut e = vec![vec![S::zero(); n]; n];
    let mut f = vec![vec![S::zero(); n]; n];
    for j in 0..n {
        for k in 0..n {
            let br = alg.bracket(&t(j, true), &t(k, false));
            if br[..2 * n].iter().any(|c| !c.is_zero()) {
                return Err(SpecError::CenterTooLarge);
            }
            // aU + bV = (a + ib)W + (a − ib)W̄
            let (a, b) = (br[2 * n].clone(), br[2 * n + 1].clone());
            e[j][k] = a.clone() + i.clone() * b.clone();
            f[j][k] = a - i.clone() * b;
        }
    }
    NilComplexSpec::new(e, f)
}

/// `Ω = u1(αγ−βδ) + v1(αδ+βγ) + u2(αγ+βδ) + v2(αδ−βγ)` on the Kodaira surface.
#[derive(Debug, Clone, PartialEq)]
pub struct SymplecticSpec<S> {
    pub u1: S,
    pub v1: S,
    pub u2: S,
    pub v2: S,
}

impl<S: Scalar> SymplecticSpec<S> {
    pub fn new(u1: S, v1: S, u2: S, v2: S) -> Result<Self, SpecError> {
        let s = SymplecticSpec { u1, v1, u2, v2 };
        if s.delta().is_zero() {
            return Err(SpecError::Degenerate);
        }
        Ok(s)
    }

    /// `Δ = u1² + v1² − u2² − v2²`.
    pub fn delta(&self) -> S {
        let sq = |x: &S| x.clone() * x.clone();
        sq(&self.u1) + sq(&self.v1) - sq(&self.u2) - sq(&self.v2)
    }

    /// Antisymmetric matrix of `Ω` over `(α, β, γ, δ)`.
    pub fn omega_matrix(&self) -> [[S; 4]; 4] {
        let (u1, v1, u2, v2) = (self.u1.clone(), self.v1.clone(), self.u2.clone(), self.v2.clone());
        let z = S::zero;
        let mut m = [[z(), z(), z(), z()], [z(), z(), z(), z()], [z(), z(), z(), z()], [z(), z(), z(), z()]];
        let mut put = |i: usize, j: usize, c: S| {
            m[j][i] = -c.clone();
            m[i][j] = c;
        };
        put(0, 2, u1.clone() + u2.clone());
        put(1, 3, u2.clone() - u1.clone());
        put(0, 3, v1.clone() + v2.clone());
        put(1, 2, v1 - v2);
        m
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RealVector {
    X,
    Y,
    U,
    V,
}

impl RealVector {
    pub const ALL: [RealVector; 4] = [RealVector::X, RealVector::Y, RealVector::U, RealVector::V];

    fn index(self) -> usize {
        self as usize
    }
}

/// A real invariant 1-form `a α + b β + c γ + d δ`.
pub type OneForm<S> = [S; 4];

/// `ι_v Ω = Ω(v, ·)`.
pub fn contract<S: Scalar>(v: RealVector, s: &SymplecticSpec<S>) -> OneForm<S> {
    s.omega_matrix()[v.index()].clone()
}

/// `α′ = −ι(U)/Δ`.
pub fn alpha_prime<S: Scalar>(s: &SymplecticSpec<S>) -> OneForm<S> {
    let d = s.delta();
    contract(RealVector::U, s).map(|c| -c / d.clone())
}

/// `β′ = ι(V)/Δ`.
pub fn beta_prime<S: Scalar>(s: &SymplecticSpec<S>) -> OneForm<S> {
    let d = s.delta();
    contract(RealVector::V, s).map(|c| c / d.clone())
}

/// The invariant de Rham algebra on `α, β, γ, δ` with `dγ = −α∧β`.
pub fn derham_generators() -> GeneratorSet {
    GeneratorSet::new(["alpha", "beta", "gamma", "delta"].into_iter().map(Generator::form).collect())
        .expect("distinct names")
}

fn one_form_mv<S: Scalar>(f: &OneForm<S>) -> Multivector<S> {
    Multivector::from_terms(f.iter().enumerate().map(|(i, c)| (Monomial::generator(i), c.clone())))
}

/// `d` of a real 1-form from `[X, Y] = U`: only `γ` has `dγ = −α∧β`.
pub fn d_one_form<S: Scalar>(f: &OneForm<S>) -> Multivector<S> {
    let ab = Monomial::generator(0).wedge(Monomial::generator(1)).unwrap().1;
    Multivector::term(ab, -f[2].clone())
}

pub fn wedge_one_forms<S: Scalar>(a: &OneForm<S>, b: &OneForm<S>) -> Multivector<S> {
    one_form_mv(a).wedge(&one_form_mv(b))
}

/// `[θ₁, θ₂]_Ω = ι[ι⁻¹θ₁, ι⁻¹θ₂]` for invariant 1-forms.
pub fn induced_bracket<S: Scalar>(s: &SymplecticSpec<S>, a: &OneForm<S>, b: &OneForm<S>) -> OneForm<S> {
    let m = s.omega_matrix();
    // rows of `m` are ι(e_k); solve Σ_k x_k ι(e_k) = θ
    let mt = Matrix::from_rows((0..4).map(|j| (0..4).map(|k| m[k][j].clone()).collect()).collect());
    let va = mt.solve(a).expect("Ω is nondegenerate");
    let vb = mt.solve(b).expect("Ω is nondegenerate");
    let u = va[0].clone() * vb[1].clone() - va[1].clone() * vb[0].clone();
    contract(RealVector::U, s).map(|c| c * u.clone())
}

/// Names of the symplectic generators `α′, β′, γ, δ`.
pub const SYMPLECTIC_NAMES: [&str; 4] = ["alpha'", "beta'", "gamma", "delta"];

/// `[γ, δ]_Ω = α′` and `dγ = −Δ α′∧β′`.
pub fn symplectic_dga<S: Scalar>(s: &SymplecticSpec<S>) -> Result<DgaPresentation<S>, SpecError> {
    let delta = s.delta();
    if delta.is_zero() {
        return Err(SpecError::Degenerate);
    }
    let gens = GeneratorSet::new(SYMPLECTIC_NAMES.into_iter().map(Generator::form).collect()).expect("distinct names");
    let ab = Monomial::generator(0).wedge(Monomial::generator(1)).unwrap().1;
    let brackets = vec![((2, 3), Multivector::monomial(Monomial::generator(0)))];
    let diffs = vec![(2, Multivector::term(ab, -delta))];
    Ok(DgaPresentation::new(gens, brackets, diffs).expect("well-formed tables"))
}
