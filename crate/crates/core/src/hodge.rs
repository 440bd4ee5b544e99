//! Finite-dimensional Hodge theory for `∂̄` on each `(p, q)` block.
//!
//! Monomials form an orthonormal basis, so `∂̄*` is the conjugate transpose of
//! the `∂̄` matrix. Harmonic spaces are `ker ∂̄ ∩ ker ∂̄*`, the Green operator
//! inverts the Laplacian on the orthogonal complement of the harmonics.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{Bidegree, GeneratorSet, Monomial, Multivector};
use crate::dga::DgaPresentation;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Matrix of `∂̄ : (p, q) → (p, q + 1)` in the monomial bases.
pub fn dbar_matrix<S: Scalar>(pres: &DgaPresentation<S>, p: u32, q: u32) -> Matrix<S> {
    let gens = pres.generators();
    let src = gens.monomials_of(Bidegree::new(p, q));
    let dst = gens.monomials_of(Bidegree::new(p, q + 1));
    let mut m = Matrix::zeros(dst.len(), src.len());
    for (c, &a) in src.iter().enumerate() {
        let image = pres.differential_monomial(a);
        for (r, &b) in dst.iter().enumerate() {
            m.set(r, c, image.coeff(b));
        }
    }
    m
}

#[derive(Debug, Clone)]
struct Block<S> {
    basis: Vec<Monomial>,
    // ∂̄ out of this block and into it
    d_out: Matrix<S>,
    d_in: Matrix<S>,
    harmonic: Vec<Vec<S>>,
    projector: Matrix<S>,
    green: Matrix<S>,
}

/// Harmonic representatives per bidegree.
#[derive(Debug, Clone, PartialEq)]
pub struct CohomologyBasis<S: Scalar> {
    pub spaces: BTreeMap<Bidegree, Vec<Multivector<S>>>,
}

impl<S: Scalar> CohomologyBasis<S> {
    pub fn dimension(&self, p: u32, q: u32) -> usize {
        self.spaces.get(&Bidegree::new(p, q)).map_or(0, Vec::len)
    }

    /// `h^{p,q}` as rows `p = 0..=pmax`, columns `q = 0..=qmax`.
    pub fn table(&self) -> Vec<Vec<usize>> {
        let pmax = self.spaces.keys().map(|b| b.p).max().unwrap_or(0);
        let qmax = self.spaces.keys().map(|b| b.q).max().unwrap_or(0);
        (0..=pmax).map(|p| (0..=qmax).map(|q| self.dimension(p, q)).collect()).collect()
    }

    /// `Σ_{p+q=k} h^{p,q}`.
    pub fn total(&self, k: u32) -> usize {
        self.spaces.iter().filter(|(b, _)| b.total() == k).map(|(_, v)| v.len()).sum()
    }
}

/// Hodge data of a presentation, precomputed on every bidegree.
#[derive(Debug, Clone)]
pub struct Hodge<S> {
    gens: GeneratorSet,
    blocks: BTreeMap<Bidegree, Block<S>>,
    position: HashMap<Monomial, (Bidegree, usize)>,
}

impl<S: Scalar> Hodge<S> {
    pub fn new(pres: &DgaPresentation<S>) -> Self {
        let gens = pres.generators().clone();
        let top = gens.max_bidegree();
        let mut blocks = BTreeMap::new();
        let mut position = HashMap::new();
        for p in 0..=top.p {
            for q in 0..=top.q {
                let bd = Bidegree::new(p, q);
                let basis = gens.monomials_of(bd);
                for (i, &m) in basis.iter().enumerate() {
                    position.insert(m, (bd, i));
                }
                let d_out = dbar_matrix(pres, p, q);
                let d_in = if q == 0 { Matrix::zeros(basis.len(), 0) } else { dbar_matrix(pres, p, q - 1) };
                blocks.insert(bd, Self::block(basis, d_out, d_in));
            }
        }
        Hodge { gens, blocks, position }
    }

    fn block(basis: Vec<Monomial>, d_out: Matrix<S>, d_in: Matrix<S>) -> Block<S> {
        let dim = basis.len();
        let d_in_adj = d_in.conj_transpose();
        let harmonic = d_out.vstack(&d_in_adj).nullspace();
        let lap = d_in.mul(&d_in_adj).add(&d_out.conj_transpose().mul(&d_out));

        // orthogonal projector onto span(harmonic): P = H (H* H)^{-1} H*
        let mut projector = Matrix::zeros(dim, dim);
        if !harmonic.is_empty() {
            let h = Matrix::from_columns(&harmonic, dim);
            let hs = h.conj_transpose();
            let gram = hs.mul(&h);
            for c in 0..dim {
                let mut e = vec![S::zero(); dim];
                e[c] = S::one();
                let coeffs = gram.solve(&hs.apply(&e)).expect("Gram matrix is invertible");
                for (r, x) in h.apply(&coeffs).into_iter().enumerate() {
                    projector.set(r, c, x);
                }
            }
        }

        // G e_c: solve Δx = e_c − P e_c, then remove the harmonic part of x
        let mut green = Matrix::zeros(dim, dim);
        for c in 0..dim {
            let mut rhs = vec![S::zero(); dim];
            rhs[c] = S::one();
            let pe = projector.column(c);
            for (r, x) in rhs.iter_mut().zip(pe) {
                *r = r.clone() - x;
            }
            let x = lap.solve(&rhs).expect("Laplacian is onto the harmonic complement");
            let px = projector.apply(&x);
            for (r, (a, b)) in x.into_iter().zip(px).enumerate() {
                green.set(r, c, a - b);
            }
        }

        Block { basis, d_out, d_in, harmonic, projector, green }
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn basis(&self, p: u32, q: u32) -> &[Monomial] {
        self.blocks.get(&Bidegree::new(p, q)).map_or(&[], |b| &b.basis)
    }

    pub fn dbar_matrix(&self, p: u32, q: u32) -> &Matrix<S> {
        &self.blocks[&Bidegree::new(p, q)].d_out
    }

    fn to_vec(&self, bd: Bidegree, v: &Multivector<S>) -> Vec<S> {
        let block = &self.blocks[&bd];
        block.basis.iter().map(|&m| v.coeff(m)).collect()
    }

    fn from_vec(&self, bd: Bidegree, x: &[S]) -> Multivector<S> {
        let basis = self.blocks.get(&bd).map_or(&[][..], |b| &b.basis[..]);
        Multivector::from_terms(basis.iter().copied().zip(x.iter().cloned()))
    }

    fn components(&self, v: &Multivector<S>) -> BTreeMap<Bidegree, Multivector<S>> {
        let mut out: BTreeMap<Bidegree, Multivector<S>> = BTreeMap::new();
        for (m, c) in v.terms() {
            let (bd, _) = self.position[&m];
            out.entry(bd).or_default().add_term(m, c.clone());
        }
        out
    }

    fn blockwise(
        &self,
        v: &Multivector<S>,
        f: impl Fn(Bidegree, &Block<S>, Vec<S>) -> (Bidegree, Vec<S>),
    ) -> Multivector<S> {
        let mut out = Multivector::zero();
        for (bd, part) in self.components(v) {
            let (target, x) = f(bd, &self.blocks[&bd], self.to_vec(bd, &part));
            out = &out + &self.from_vec(target, &x);
        }
        out
    }

    pub fn dbar(&self, v: &Multivector<S>) -> Multivector<S> {
        self.blockwise(v, |bd, b, x| (Bidegree::new(bd.p, bd.q + 1), b.d_out.apply(&x)))
    }

    /// `∂̄*`, the conjugate transpose of `∂̄`.
    pub fn adjoint(&self, v: &Multivector<S>) -> Multivector<S> {
        self.blockwise(v, |bd, b, x| {
            if bd.q == 0 {
                (bd, vec![S::zero(); x.len()])
            } else {
                (Bidegree::new(bd.p, bd.q - 1), b.d_in.conj_transpose().apply(&x))
            }
        })
    }

    pub fn laplacian(&self, v: &Multivector<S>) -> Multivector<S> {
        &self.dbar(&self.adjoint(v)) + &self.adjoint(&self.dbar(v))
    }

    pub fn green(&self, v: &Multivector<S>) -> Multivector<S> {
        self.blockwise(v, |bd, b, x| (bd, b.green.apply(&x)))
    }

    pub fn harmonic_projection(&self, v: &Multivector<S>) -> Multivector<S> {
        self.blockwise(v, |bd, b, x| (bd, b.projector.apply(&x)))
    }

    /// `∂̄*G`, the homotopy used for gauge-fixed corrections.
    pub fn homotopy(&self, v: &Multivector<S>) -> Multivector<S> {
        self.adjoint(&self.green(v))
    }

    /// Some `x` with `∂̄x = v`, if `v` is exact.
    pub fn dbar_preimage(&self, v: &Multivector<S>) -> Option<Multivector<S>> {
        let mut out = Multivector::zero();
        for (bd, part) in self.components(v) {
            if bd.q == 0 {
                return None;
            }
            let src = Bidegree::new(bd.p, bd.q - 1);
            let x = self.blocks[&bd].d_in.solve(&self.to_vec(bd, &part))?;
            out = &out + &self.from_vec(src, &x);
        }
        Some(out)
    }

    pub fn is_exact(&self, v: &Multivector<S>) -> bool {
        self.dbar_preimage(v).is_some()
    }

    pub fn harmonic_basis(&self, p: u32, q: u32) -> Vec<Multivector<S>> {
        let bd = Bidegree::new(p, q);
        match self.blocks.get(&bd) {
            Some(b) => b.harmonic.iter().map(|x| self.from_vec(bd, x)).collect(),
            None => Vec::new(),
        }
    }

    /// Basis of the orthogonal complement of the harmonics in `(p, q)`.
    pub fn harmonic_complement(&self, p: u32, q: u32) -> Vec<Multivector<S>> {
        let bd = Bidegree::new(p, q);
        let Some(b) = self.blocks.get(&bd) else {
            return Vec::new();
        };
        let dim = b.basis.len();
        if b.harmonic.is_empty() {
            return (0..dim).map(|i| Multivector::monomial(b.basis[i])).collect();
        }
        let rows = b.harmonic.iter().map(|h| h.iter().map(S::conj).collect()).collect();
        Matrix::from_rows(rows).nullspace().iter().map(|x| self.from_vec(bd, x)).collect()
    }

    pub fn cohomology_basis(&self) -> CohomologyBasis<S> {
        CohomologyBasis { spaces: self.blocks.keys().map(|bd| (*bd, self.harmonic_basis(bd.p, bd.q))).collect() }
    }

    /// `dim ker ∂̄_q − rank ∂̄_{q−1}` on `(p, q)`.
    pub fn betti(&self, p: u32, q: u32) -> usize {
        let b = &self.blocks[&Bidegree::new(p, q)];
        b.basis.len() - b.d_out.rank() - b.d_in.rank()
    }

    pub fn is_harmonic(&self, v: &Multivector<S>) -> bool {
        self.dbar(v).is_zero() && self.adjoint(v).is_zero()
    }
}

/// `∂̄*(p,q)` as a matrix, for callers that need it explicitly.
pub fn adjoint_matrix<S: Scalar>(pres: &DgaPresentation<S>, p: u32, q: u32) -> Matrix<S> {
    dbar_matrix(pres, p, q).conj_transpose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nil::{build_kodaira, complex_dga};
    use crate::GaussianRational as Q;

    #[test]
    fn kodaira_surface_matrices() {
        let pres = complex_dga(&build_kodaira::<Q>(1).unwrap());
        let h = Hodge::new(&pres);
        assert_eq!(h.dbar_matrix(1, 1).rank(), 1);
        for q in 0..=2 {
            assert!(h.dbar_matrix(0, q).is_zero());
        }
        let d10 = h.dbar_matrix(1, 0);
        assert_eq!(d10.rank(), 1);
        let ow_w = pres.element(&["ow", "W"]).unwrap();
        assert_eq!(h.adjoint(&ow_w), pres.element(&["T"]).unwrap().scale(&Q::imag_ratio(1, 2)));
        assert_eq!(h.green(&ow_w), ow_w.scale(&Q::from_int(4)));
        assert!(h.harmonic_projection(&ow_w).is_zero());
        assert!(h.green(&pres.element(&["or", "W"]).unwrap()).is_zero());
    }
}
