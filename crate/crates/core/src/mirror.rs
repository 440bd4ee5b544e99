//! Mirror correspondence on the Kodaira surface: deformed `(0,1)`
//! distributions, the special symplectic family, and the isomorphism `Υ`
//! from the complex to the symplectic algebra.

use crate::algebra::{Monomial, Multivector};
use crate::dga::DgaPresentation;
use crate::error::SpecError;
use crate::hodge::{dbar_matrix, Hodge};
use crate::linalg::Matrix;
use crate::nil::{build_kodaira, complex_dga, contract, symplectic_dga, RealVector, SymplecticSpec};
use crate::scalar::Scalar;

/// Column order of [`GraphFrame`].
pub const FRAME_BASIS: [&str; 8] = ["Tb", "Wb", "w", "r", "T", "W", "ow", "or"];

/// Rows `T̄+Γ(T̄), W̄+Γ(W̄), ω+Γ(ω), ρ+Γ(ρ)` over [`FRAME_BASIS`].
#[derive(Debug, Clone, PartialEq)]
pub struct GraphFrame<S> {
    pub rows: Vec<Vec<S>>,
}

/// `Γ = t1 ω̄∧ρ̄ + t2 ρ̄∧W + t3 ω̄∧T + t4 T∧W` acting as an endomorphism.
pub fn graph_frame<S: Scalar>(t1: S, t2: S, t3: S, t4: S) -> GraphFrame<S> {
    let (z, o) = (S::zero, S::one);
    let rows = vec![
        vec![o(), z(), z(), z(), t3.clone(), z(), z(), t1.clone()],
        vec![z(), o(), z(), z(), z(), t2.clone(), -t1, z()],
        vec![z(), z(), o(), z(), z(), t4.clone(), -t3, z()],
        vec![z(), z(), z(), o(), -t4, z(), z(), -t2],
    ];
    GraphFrame { rows }
}

impl<S: Scalar> GraphFrame<S> {
    /// The left 4×4 block is the identity.
    pub fn is_graph(&self) -> bool {
        (0..4).all(|r| (0..4).all(|c| self.rows[r][c] == if r == c { S::one() } else { S::zero() }))
    }

    pub fn matrix(&self) -> Matrix<S> {
        Matrix::from_rows(self.rows.clone())
    }

    /// Complex conjugate distribution: conjugate entries and swap barred and
    /// unbarred basis elements.
    pub fn conjugate(&self) -> GraphFrame<S> {
        let rows = self.rows.iter().map(|r| (0..8).map(|c| r[(c + 4) % 8].conj()).collect()).collect();
        GraphFrame { rows }
    }
}

/// The one-parameter family `t1 = t/2`, `t4 = −2/t̄`, `t2 = t3 = 0`.
pub fn special_family_frame<S: Scalar>(t: &S) -> Result<GraphFrame<S>, SpecError> {
    if t.is_zero() {
        return Err(SpecError::ZeroParameter);
    }
    let t1 = t.clone() * S::from_ratio(1, 2);
    let t4 = -S::from_int(2) / t.conj();
    Ok(graph_frame(t1, S::zero(), S::zero(), t4))
}

/// Real and imaginary parts of a Gaussian rational.
fn parts<S: Scalar>(t: &S) -> (S, S) {
    let two = S::from_int(2);
    let re = (t.clone() + t.conj()) / two.clone();
    let im = (t.clone() - t.conj()) / (two * S::imag_unit());
    (re, im)
}

/// `Ω = u(α∧γ − β∧δ) + v(α∧δ + β∧γ)` for `t = u + iv`.
pub fn family_form<S: Scalar>(t: &S) -> Result<SymplecticSpec<S>, SpecError> {
    let (u, v) = parts(t);
    SymplecticSpec::new(u, v, S::zero(), S::zero())
}

/// Rows `R + ι_R Ω` for `R = X, Y, U, V` over [`FRAME_BASIS`], using
/// `X = T + T̄`, `Y = i(T − T̄)`, `U = W + W̄`, `V = i(W − W̄)` and
/// `α = (ω+ω̄)/2`, `β = (ω−ω̄)/2i`, `γ = (ρ+ρ̄)/2`, `δ = (ρ−ρ̄)/2i`.
pub fn real_graph<S: Scalar>(s: &SymplecticSpec<S>) -> Matrix<S> {
    let i = S::imag_unit();
    let half = S::from_ratio(1, 2);
    let mhi = S::imag_ratio(-1, 2);
    // vector parts as (T̄, W̄, T, W) coefficients
    let vectors = [
        (S::one(), S::zero(), S::one(), S::zero()),
        (-i.clone(), S::zero(), i.clone(), S::zero()),
        (S::zero(), S::one(), S::zero(), S::one()),
        (S::zero(), -i.clone(), S::zero(), i),
    ];
    let mut rows = Vec::new();
    for (v, (tb, wb, t, w)) in RealVector::ALL.into_iter().zip(vectors) {
        let f = contract(v, s);
        let mut row = vec![S::zero(); 8];
        row[0] = tb;
        row[1] = wb;
        row[4] = t;
        row[5] = w;
        // ω, ρ, ω̄, ρ̄ coefficients of a α + b β + c γ + d δ
        row[2] = f[0].clone() * half.clone() + f[1].clone() * mhi.clone();
        row[6] = f[0].clone() * half.clone() - f[1].clone() * mhi.clone();
        row[3] = f[2].clone() * half.clone() + f[3].clone() * mhi.clone();
        row[7] = f[2].clone() * half.clone() - f[3].clone() * mhi.clone();
        rows.push(row);
    }
    Matrix::from_rows(rows)
}

fn same_row_space<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> bool {
    let ra = a.rank();
    ra == b.rank() && a.vstack(b).rank() == ra
}

/// Whether the complexified real graph of `Ω(t_form)` equals `L̄_Γ(t)`.
pub fn special_family_check_with<S: Scalar>(t: &S, t_form: &S) -> Result<bool, SpecError> {
    let frame = special_family_frame(t)?;
    let real = real_graph(&family_form(t_form)?);
    Ok(same_row_space(&real, &frame.matrix()))
}

pub fn special_family_check<S: Scalar>(t: &S) -> Result<bool, SpecError> {
    special_family_check_with(t, t)
}

/// `L_Γ = L̄_Γ` as subspaces.
pub fn is_self_conjugate<S: Scalar>(frame: &GraphFrame<S>) -> bool {
    same_row_space(&frame.matrix(), &frame.conjugate().matrix())
}

/// `Υ`: `ω̄ ↦ 2i α′`, `ρ̄ ↦ δ`, `T ↦ γ`, `W ↦ −Δ β′`, extended multiplicatively.
#[derive(Debug, Clone, PartialEq)]
pub struct MirrorMap<S: Scalar> {
    pub delta: S,
    images: Vec<Multivector<S>>,
}

impl<S: Scalar> MirrorMap<S> {
    pub fn new(delta: S) -> Result<Self, SpecError> {
        if delta.is_zero() {
            return Err(SpecError::Degenerate);
        }
        let g = |i| Monomial::generator(i);
        // symplectic generators: α′ = 0, β′ = 1, γ = 2, δ = 3
        let images = vec![
            Multivector::term(g(0), S::imag_ratio(2, 1)),
            Multivector::monomial(g(3)),
            Multivector::monomial(g(2)),
            Multivector::term(g(1), -delta.clone()),
        ];
        Ok(MirrorMap { delta, images })
    }

    pub fn apply_monomial(&self, m: Monomial) -> Multivector<S> {
        m.indices().fold(Multivector::one(), |acc, i| acc.wedge(&self.images[i]))
    }

    pub fn apply(&self, v: &Multivector<S>) -> Multivector<S> {
        v.map_linear(|m| self.apply_monomial(m))
    }
}

pub fn mirror_map<S: Scalar>(s: &SymplecticSpec<S>) -> Result<MirrorMap<S>, SpecError> {
    MirrorMap::new(s.delta())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirrorReport {
    pub wedge: bool,
    pub differential: bool,
    pub bracket: bool,
    pub bijective: bool,
    /// First failing pair `(a, b)`, as monomial names on the complex side.
    pub counterexample: Option<(String, String)>,
}

impl MirrorReport {
    pub fn passed(&self) -> bool {
        self.wedge && self.differential && self.bracket && self.bijective
    }
}

pub fn verify_mirror<S: Scalar>(
    complex: &DgaPresentation<S>,
    symplectic: &DgaPresentation<S>,
    map: &MirrorMap<S>,
) -> MirrorReport {
    let gens = complex.generators();
    let all: Vec<Monomial> = gens.all_monomials().collect();
    let mut report =
        MirrorReport { wedge: true, differential: true, bracket: true, bijective: true, counterexample: None };
    for &a in &all {
        let x = Multivector::monomial(a);
        let ux = map.apply(&x);
        if map.apply(&complex.differential(&x)) != symplectic.differential(&ux) {
            report.differential = false;
            report.counterexample.get_or_insert((gens.name_of(a), String::new()));
        }
        for &b in &all {
            let y = Multivector::monomial(b);
            let uy = map.apply(&y);
            let w = map.apply(&x.wedge(&y)) == ux.wedge(&uy);
            let br = map.apply(&complex.schouten(&x, &y)) == symplectic.schouten(&ux, &uy);
            report.wedge &= w;
            report.bracket &= br;
            if !(w && br) {
                report.counterexample.get_or_insert((gens.name_of(a), gens.name_of(b)));
            }
        }
    }
    let dim = symplectic.generators().dimension();
    let columns: Vec<Vec<S>> = all
        .iter()
        .map(|&m| {
            let mut col = vec![S::zero(); dim];
            for (k, c) in map.apply_monomial(m).terms() {
                col[k.0 as usize] = c.clone();
            }
            col
        })
        .collect();
    report.bijective = all.len() == dim && Matrix::from_columns(&columns, dim).rank() == dim;
    report
}

/// Invariant de Rham Betti numbers `b_0..b_4`.
pub fn derham_dims<S: Scalar>(symplectic: &DgaPresentation<S>) -> Vec<usize> {
    let top = symplectic.generators().len() as u32;
    (0..=top)
        .map(|k| {
            let d = dbar_matrix(symplectic, 0, k);
            let before = if k == 0 { 0 } else { dbar_matrix(symplectic, 0, k - 1).rank() };
            d.cols() - d.rank() - before
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyMatch {
    /// `Σ_{p+q=k} h^{p,q}` for `k = 0, 1, 2`.
    pub complex: Vec<usize>,
    /// `b_k` for `k = 0, 1, 2`.
    pub symplectic: Vec<usize>,
    /// `Υ` of the harmonic classes are closed and span `H^k`.
    pub classes_map: bool,
}

impl CohomologyMatch {
    pub fn passed(&self) -> bool {
        self.complex == self.symplectic && self.classes_map
    }
}

pub fn cohomology_match<S: Scalar>(s: &SymplecticSpec<S>) -> Result<CohomologyMatch, SpecError> {
    let complex = complex_dga(&build_kodaira::<S>(1)?);
    let symplectic = symplectic_dga(s)?;
    let map = mirror_map(s)?;
    let hodge = Hodge::new(&complex);
    let dims = derham_dims(&symplectic);
    let basis = hodge.cohomology_basis();
    let mut classes_map = true;
    let mut complex_dims = Vec::new();
    for k in 0..=2u32 {
        complex_dims.push(basis.total(k));
        let sdim = symplectic.generators().dimension();
        let dense = |v: &Multivector<S>| {
            let mut out = vec![S::zero(); sdim];
            for (m, c) in v.terms() {
                out[m.0 as usize] = c.clone();
            }
            out
        };
        let images: Vec<Multivector<S>> = basis
            .spaces
            .iter()
            .filter(|(bd, _)| bd.total() == k)
            .flat_map(|(_, vs)| vs.iter().map(|v| map.apply(v)))
            .collect();
        classes_map &= images.iter().all(|v| symplectic.differential(v).is_zero());
        // exact k-forms: d of every (k−1)-monomial
        let exact: Vec<Vec<S>> = if k == 0 {
            Vec::new()
        } else {
            symplectic
                .generators()
                .all_monomials()
                .filter(|m| m.degree() == k - 1)
                .map(|m| dense(symplectic.differential_monomial(m)))
                .collect()
        };
        let exact_rank = Matrix::from_columns(&exact, sdim).rank();
        let mut all = exact.clone();
        all.extend(images.iter().map(dense));
        let total_rank = Matrix::from_columns(&all, sdim).rank();
        classes_map &= total_rank - exact_rank == dims[k as usize] && images.len() == dims[k as usize];
    }
    Ok(CohomologyMatch { complex: complex_dims, symplectic: dims[..3].to_vec(), classes_map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GaussianRational as Q;

    #[test]
    fn frame_rows() {
        let f = graph_frame(Q::from_int(1), Q::from_int(2), Q::from_int(3), Q::from_int(4));
        assert!(f.is_graph());
        let want: Vec<Q> = [0, 0, 1, 0, 0, 4, -3, 0].iter().map(|&x| Q::from_int(x)).collect();
        assert_eq!(f.rows[2], want);
        let zero = graph_frame(Q::from_int(0), Q::from_int(0), Q::from_int(0), Q::from_int(0));
        assert_eq!(zero.matrix().rank(), 4);
        assert!((0..4).all(|r| (4..8).all(|c| zero.rows[r][c] == Q::from_int(0))));
    }

    #[test]
    fn mirror_generators() {
        let s = SymplecticSpec::new(Q::from_int(1), Q::from_int(0), Q::from_int(0), Q::from_int(0)).unwrap();
        let map = mirror_map(&s).unwrap();
        assert_eq!(map.apply(&Multivector::one()), Multivector::one());
        assert!(MirrorMap::new(Q::from_int(0)).is_err());
    }
}
