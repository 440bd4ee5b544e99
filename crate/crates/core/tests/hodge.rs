use gerstenhaber::algebra::Bidegree;
use gerstenhaber::hodge::Hodge;
use gerstenhaber::linalg::same_span;
use gerstenhaber::nil::{build_kodaira, complex_dga};
use gerstenhaber::{DgaPresentation, GaussianRational as Q, Multivector, Scalar};

fn kodaira(n: usize) -> DgaPresentation {
    complex_dga(&build_kodaira(n).unwrap())
}

fn span_eq(h: &Hodge<Q>, bd: Bidegree, a: &[Multivector], b: &[Multivector]) -> bool {
    let basis = h.basis(bd.p, bd.q);
    let vecs = |xs: &[Multivector]| -> Vec<Vec<Q>> {
        xs.iter().map(|x| basis.iter().map(|&m| x.coeff(m)).collect()).collect()
    };
    same_span(&vecs(a), &vecs(b), basis.len())
}

fn els(p: &DgaPresentation, names: &[&[&str]]) -> Vec<Multivector> {
    names.iter().map(|n| p.element(n).unwrap()).collect()
}

#[test]
fn surface_table() {
    let p = kodaira(1);
    let h = Hodge::new(&p);
    let basis = h.cohomology_basis();
    assert_eq!(basis.table(), vec![vec![1, 2, 1]; 3]);
    let expected: [(u32, u32, &[&[&str]]); 9] = [
        (0, 0, &[&[]]),
        (0, 1, &[&["ow"], &["or"]]),
        (0, 2, &[&["ow", "or"]]),
        (1, 0, &[&["W"]]),
        (1, 1, &[&["ow", "T"], &["or", "W"]]),
        (1, 2, &[&["ow", "or", "T"]]),
        (2, 0, &[&["T", "W"]]),
        (2, 1, &[&["ow", "T", "W"], &["or", "T", "W"]]),
        (2, 2, &[&["ow", "or", "T", "W"]]),
    ];
    for (pp, q, names) in expected {
        let bd = Bidegree::new(pp, q);
        assert!(span_eq(&h, bd, &h.harmonic_basis(pp, q), &els(&p, names)), "({pp},{q})");
    }
}

#[test]
fn surface_complements() {
    let p = kodaira(1);
    let h = Hodge::new(&p);
    let bd = |a, b| Bidegree::new(a, b);
    assert!(span_eq(&h, bd(1, 0), &h.harmonic_complement(1, 0), &els(&p, &[&["T"]])));
    assert!(span_eq(&h, bd(1, 1), &h.harmonic_complement(1, 1), &els(&p, &[&["ow", "W"], &["or", "T"]])));
    assert!(span_eq(&h, bd(1, 2), &h.harmonic_complement(1, 2), &els(&p, &[&["ow", "or", "W"]])));
    for (a, b) in [(0, 0), (0, 1), (0, 2), (2, 0), (2, 1), (2, 2)] {
        assert!(h.harmonic_complement(a, b).is_empty());
    }
    let two_i = Q::imag_ratio(2, 1);
    let t = p.element(&["T"]).unwrap();
    assert_eq!(p.element(&["ow", "W"]).unwrap(), h.dbar(&t).scale(&two_i));
    let rt = p.element(&["or", "T"]).unwrap();
    assert_eq!(p.element(&["ow", "or", "W"]).unwrap(), h.dbar(&rt).scale(&two_i));
}

#[test]
fn degree_two_for_general_n() {
    for n in 2..=3 {
        let p = kodaira(n);
        let h = Hodge::new(&p);
        let name = |b: &str, j: usize| format!("{b}{j}");
        let el = |xs: &[String]| {
            let refs: Vec<&str> = xs.iter().map(String::as_str).collect();
            p.element(&refs).unwrap()
        };
        let mut h02 = Vec::new();
        let mut h20 = Vec::new();
        let mut h11 = vec![p.element(&["or", "W"]).unwrap()];
        for j in 1..=n {
            h02.push(el(&[name("ow", j), "or".into()]));
            h20.push(el(&[name("T", j), "W".into()]));
            for i in 1..j {
                h02.push(el(&[name("ow", i), name("ow", j)]));
            }
            for k in j..=n {
                let a = el(&[name("ow", j), name("T", k)]);
                let b = el(&[name("ow", k), name("T", j)]);
                h11.push((&a + &b).scale(&Q::from_ratio(1, 2)));
            }
        }
        assert!(span_eq(&h, Bidegree::new(0, 2), &h.harmonic_basis(0, 2), &h02));
        assert!(span_eq(&h, Bidegree::new(2, 0), &h.harmonic_basis(2, 0), &h20));
        assert!(span_eq(&h, Bidegree::new(1, 1), &h.harmonic_basis(1, 1), &h11));
        if n == 2 {
            assert_eq!(h.harmonic_basis(0, 1).len(), 3);
        }
    }
}

#[test]
fn hodge_decomposition_on_monomials() {
    for n in 1..=2 {
        let p = kodaira(n);
        let h = Hodge::new(&p);
        for m in p.generators().all_monomials() {
            let v = Multivector::monomial(m);
            let g = h.green(&v);
            let rebuilt = &(&h.harmonic_projection(&v) + &h.dbar(&h.adjoint(&g))) + &h.adjoint(&h.dbar(&g));
            assert_eq!(rebuilt, v);
            assert_eq!(&(&v - &h.harmonic_projection(&v)) - &h.laplacian(&g), Multivector::zero());
        }
    }
}

#[test]
fn harmonic_dimension_matches_cohomology() {
    for n in 1..=3 {
        let p = kodaira(n);
        let h = Hodge::new(&p);
        let top = p.generators().max_bidegree();
        for a in 0..=top.p {
            for b in 0..=top.q {
                assert_eq!(h.harmonic_basis(a, b).len(), h.betti(a, b), "n={n} ({a},{b})");
                for x in h.harmonic_basis(a, b) {
                    assert!(h.is_harmonic(&x));
                }
            }
        }
    }
}

#[test]
fn harmonic_brackets_are_exact() {
    let p = kodaira(1);
    let h = Hodge::new(&p);
    let basis: Vec<Multivector> = h.cohomology_basis().spaces.into_values().flatten().collect();
    for a in &basis {
        for b in &basis {
            let br = p.schouten(a, b);
            assert!(h.is_exact(&br));
            assert!(h.harmonic_projection(&br).is_zero());
        }
    }
    let or = p.element(&["or"]).unwrap();
    let t = p.element(&["T"]).unwrap();
    let tw = p.element(&["T", "W"]).unwrap();
    assert_eq!(p.schouten(&or, &tw), -&h.dbar(&t));
    let rtw = p.element(&["or", "T", "W"]).unwrap();
    let t_or = p.element(&["T", "or"]).unwrap();
    assert_eq!(p.schouten(&or, &rtw), -&h.dbar(&t_or));
}

#[test]
fn in_and_out_table() {
    let p = kodaira(1);
    let e = |n: &[&str]| p.element(n).unwrap();
    let i2 = Q::imag_ratio(1, 2);
    let rows: [(&[&str], &[&str], Multivector); 8] = [
        (&["or"], &["T"], e(&["ow"]).scale(&i2)),
        (&["or"], &["or", "T"], e(&["ow", "or"]).scale(&-i2.clone())),
        (&["or", "W"], &["T"], e(&["ow", "W"]).scale(&i2)),
        (&["or", "W"], &["or", "T"], e(&["ow", "or", "W"]).scale(&i2)),
        (&["T", "W"], &["T"], Multivector::zero()),
        (&["T", "W"], &["or", "T"], e(&["ow", "T", "W"]).scale(&i2)),
        (&["or", "T", "W"], &["T"], e(&["ow", "T", "W"]).scale(&i2)),
        (&["or", "T", "W"], &["or", "T"], e(&["ow", "or", "T", "W"]).scale(&-Q::imag_unit())),
    ];
    for (a, b, want) in rows {
        assert_eq!(p.schouten(&e(a), &e(b)), want, "[{a:?}, {b:?}]");
    }
}
