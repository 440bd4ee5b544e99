//! Schouten bracket evaluated straight from Lie-algebra structure constants.
//!
//! This route never uses the generator bracket table: polyvector brackets come
//! from the Lie bracket on `g^{1,0}`, vector-form brackets from Lie derivatives
//! evaluated as multilinear maps on `(0,1)`-vectors, and mixed elements from the
//! three-term product formula. It serves as an oracle for the peeling extension.

use std::collections::BTreeMap;

use crate::algebra::{Monomial, Multivector};
use crate::scalar::Scalar;

/// Complexified Lie data behind a complex-side presentation.
///
/// `forms[a]` is the generator dual to the `a`-th `(0,1)`-vector `B̄_a`;
/// `vectors[v]` is the generator for the `v`-th `(1,0)`-vector.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexLieData<S> {
    pub forms: Vec<usize>,
    pub vectors: Vec<usize>,
    /// `[V_i, V_j]` as a combination of `(1,0)`-vectors.
    pub vector_brackets: BTreeMap<(usize, usize), Vec<(usize, S)>>,
    /// `[V_i, B̄_a]^{0,1}` as a combination of `(0,1)`-vectors.
    pub mixed_brackets: BTreeMap<(usize, usize), Vec<(usize, S)>>,
}

impl<S: Scalar> ComplexLieData<S> {
    fn form_pos(&self, g: usize) -> Option<usize> {
        self.forms.iter().position(|&f| f == g)
    }

    fn vector_pos(&self, g: usize) -> Option<usize> {
        self.vectors.iter().position(|&v| v == g)
    }

    fn split(&self, m: Monomial) -> (Monomial, Monomial, i32) {
        let mut phi = 0u32;
        let mut xi = 0u32;
        for i in m.indices() {
            if self.form_pos(i).is_some() {
                phi |= 1 << i;
            } else {
                xi |= 1 << i;
            }
        }
        let (sign, _) = Monomial(phi).wedge(Monomial(xi)).expect("disjoint");
        (Monomial(phi), Monomial(xi), sign)
    }

    /// `[a, b]` on basis monomials via the direct formulas.
    pub fn bracket(&self, a: Monomial, b: Monomial) -> Multivector<S> {
        let (phi, xi, sa) = self.split(a);
        let (psi, theta, sb) = self.split(b);
        let mv = Multivector::<S>::monomial;
        let (dp, dx, ds, dt) = (phi.degree(), xi.degree(), psi.degree(), theta.degree());

        let t1 = mv(phi).wedge(&self.polyvector_form(xi, psi)).wedge(&mv(theta));
        let t2 = mv(psi).wedge(&self.polyvector_form(theta, phi)).wedge(&mv(xi));
        let t3 = mv(phi).wedge(&mv(psi)).wedge(&self.polyvector_polyvector(xi, theta));

        let (l, r) = (dp + dx, ds + dt);
        let e2 = (l * r + l + r) % 2;
        let e3 = (ds * (dx + 1)) % 2;
        let mut out = t1;
        out = if e2 == 0 { &out + &t2 } else { &out - &t2 };
        out = if e3 == 0 { &out + &t3 } else { &out - &t3 };
        if sa * sb < 0 {
            -&out
        } else {
            out
        }
    }

    // [V_1∧…∧V_k, ψ] = Σ_j (−1)^{k−j} V_1∧…V̂_j…∧V_k ∧ L_{V_j}ψ
    fn polyvector_form(&self, xi: Monomial, psi: Monomial) -> Multivector<S> {
        let vs: Vec<usize> = xi.indices().collect();
        let k = vs.len();
        let mut out = Multivector::zero();
        if psi.is_unit() {
            return out;
        }
        for (j, &v) in vs.iter().enumerate() {
            let others = Monomial(xi.0 & !(1 << v));
            let lie = self.lie_derivative(v, psi);
            let term = Multivector::monomial(others).wedge(&lie);
            // 1-indexed position j+1
            if (k - (j + 1)) % 2 == 0 {
                out = &out + &term;
            } else {
                out = &out - &term;
            }
        }
        out
    }

    // [U_1∧…∧U_k, Θ] = Σ_j (−1)^{k−j} U_1∧…Û_j…∧U_k ∧ [U_j, Θ]
    fn polyvector_polyvector(&self, xi: Monomial, theta: Monomial) -> Multivector<S> {
        let us: Vec<usize> = xi.indices().collect();
        let k = us.len();
        let mut out = Multivector::zero();
        for (j, &u) in us.iter().enumerate() {
            let others = Monomial(xi.0 & !(1 << u));
            let term = Multivector::monomial(others).wedge(&self.vector_polyvector(u, theta));
            if (k - (j + 1)) % 2 == 0 {
                out = &out + &term;
            } else {
                out = &out - &term;
            }
        }
        out
    }

    // [U, V_1∧…∧V_p] = Σ_l V_1∧…∧[U, V_l]∧…∧V_p
    fn vector_polyvector(&self, u: usize, theta: Monomial) -> Multivector<S> {
        let vs: Vec<usize> = theta.indices().collect();
        let upos = self.vector_pos(u).expect("vector generator");
        let mut out = Multivector::zero();
        for (l, &v) in vs.iter().enumerate() {
            let vpos = self.vector_pos(v).expect("vector generator");
            let Some(comb) = self.vector_brackets.get(&(upos, vpos)) else {
                continue;
            };
            let mut lie = Multivector::zero();
            for (w, c) in comb {
                lie.add_term(Monomial::generator(self.vectors[*w]), c.clone());
            }
            let mut acc = Multivector::one();
            for (r, &x) in vs.iter().enumerate() {
                let factor = if r == l { lie.clone() } else { Multivector::monomial(Monomial::generator(x)) };
                acc = acc.wedge(&factor);
            }
            out = &out + &acc;
        }
        out
    }

    /// `L_V ψ` for an invariant `(0,q)`-form, evaluated on all sorted tuples of
    /// `(0,1)`-basis vectors: `(L_Vψ)(B̄…) = −Σ_j ψ(…, [V, B̄_j]^{0,1}, …)`.
    pub fn lie_derivative(&self, v: usize, psi: Monomial) -> Multivector<S> {
        let vpos = self.vector_pos(v).expect("vector generator");
        let slots: Vec<usize> = psi.indices().map(|g| self.form_pos(g).expect("form")).collect();
        let q = slots.len();
        let nf = self.forms.len();
        let mut out = Multivector::zero();
        for tuple in sorted_tuples(nf, q) {
            let mut value = S::zero();
            for j in 0..q {
                let Some(comb) = self.mixed_brackets.get(&(vpos, tuple[j])) else {
                    continue;
                };
                // arguments as coordinate vectors over the (0,1)-basis
                let args: Vec<Vec<S>> = (0..q)
                    .map(|s| {
                        let mut col = vec![S::zero(); nf];
                        if s == j {
                            for (a, c) in comb {
                                col[*a] = col[*a].clone() + c.clone();
                            }
                        } else {
                            col[tuple[s]] = S::one();
                        }
                        col
                    })
                    .collect();
                value = value - evaluate_form(&slots, &args);
            }
            if value.is_zero() {
                continue;
            }
            let gens: Vec<usize> = tuple.iter().map(|&a| self.forms[a]).collect();
            let (m, sign) = crate::algebra::normalize_monomial(&gens).expect("distinct");
            out.add_term(m, if sign < 0 { -value } else { value });
        }
        out
    }
}

// ψ = ω̄^{s_1}∧…∧ω̄^{s_q} on arguments: det[ω̄^{s_r}(C_c)].
fn evaluate_form<S: Scalar>(slots: &[usize], args: &[Vec<S>]) -> S {
    let q = slots.len();
    let mut total = S::zero();
    for perm in permutations(q) {
        let mut prod = S::one();
        for (r, &c) in perm.iter().enumerate() {
            prod = prod * args[c][slots[r]].clone();
            if prod.is_zero() {
                break;
            }
        }
        if !prod.is_zero() {
            total = if permutation_sign(&perm) > 0 { total + prod } else { total - prod };
        }
    }
    total
}

fn sorted_tuples(n: usize, q: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, q: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == q {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, q, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, q, &mut Vec::new(), &mut out);
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn permutation_sign(p: &[usize]) -> i32 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_helpers() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(sorted_tuples(4, 2).len(), 6);
        assert_eq!(sorted_tuples(3, 0), vec![Vec::<usize>::new()]);
    }
}
