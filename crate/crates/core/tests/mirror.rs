use gerstenhaber::mirror::{
    cohomology_match, derham_dims, graph_frame, is_self_conjugate, mirror_map, special_family_check,
    special_family_check_with, special_family_frame, verify_mirror,
};
use gerstenhaber::nil::{build_kodaira, complex_dga, symplectic_dga, SymplecticSpec};
use gerstenhaber::{GaussianRational as Q, Multivector, Scalar};
use num_traits::Zero;

fn samples() -> Vec<SymplecticSpec<Q>> {
    [(1, 0, 0, 0), (0, 1, 0, 0), (2, 1, 1, 0), (0, 0, 1, 0)]
        .into_iter()
        .map(|(a, b, c, d)| {
            SymplecticSpec::new(Q::from_int(a), Q::from_int(b), Q::from_int(c), Q::from_int(d)).unwrap()
        })
        .collect()
}

fn t_values() -> Vec<Q> {
    vec![Q::from_int(1), Q::imag_unit(), Q::from_int(1) + Q::imag_unit(), Q::from_ratio(3, 2)]
}

#[test]
fn mirror_is_an_isomorphism() {
    let complex = complex_dga(&build_kodaira::<Q>(1).unwrap());
    for s in samples() {
        let report = verify_mirror(&complex, &symplectic_dga(&s).unwrap(), &mirror_map(&s).unwrap());
        assert!(report.passed(), "{s:?}: {report:?}");
    }
}

#[test]
fn mirror_generator_examples() {
    let s = &samples()[2];
    let complex = complex_dga(&build_kodaira::<Q>(1).unwrap());
    let symp = symplectic_dga(s).unwrap();
    let map = mirror_map(s).unwrap();
    let t = complex.element(&["T"]).unwrap();
    let or = complex.element(&["or"]).unwrap();
    let ab = symp.element(&["alpha'", "beta'"]).unwrap();
    assert_eq!(map.apply(&complex.differential(&t)), ab.scale(&-s.delta()));
    assert_eq!(map.apply(&complex.schouten(&t, &or)), symp.element(&["alpha'"]).unwrap());
    assert_eq!(map.apply(&Multivector::one()), Multivector::one());
}

#[test]
fn a_wrong_map_is_caught() {
    let s = &samples()[0];
    let complex = complex_dga(&build_kodaira::<Q>(1).unwrap());
    let other = SymplecticSpec::new(Q::from_int(2), Q::from_int(0), Q::from_int(0), Q::from_int(0)).unwrap();
    let report = verify_mirror(&complex, &symplectic_dga(s).unwrap(), &mirror_map(&other).unwrap());
    assert!(!report.differential);
    assert!(report.counterexample.is_some());
}

#[test]
fn betti_numbers() {
    for s in samples() {
        assert_eq!(derham_dims(&symplectic_dga(&s).unwrap()), vec![1, 3, 4, 3, 1]);
        let m = cohomology_match(&s).unwrap();
        assert_eq!(m.complex, vec![1, 3, 4]);
        assert!(m.passed(), "{m:?}");
    }
}

#[test]
fn special_family() {
    for t in t_values() {
        assert!(special_family_check(&t).unwrap(), "{t:?}");
        assert!(is_self_conjugate(&special_family_frame(&t).unwrap()));
    }
    assert!(!special_family_check_with(&Q::from_int(2), &Q::from_int(1)).unwrap());
    assert!(!special_family_check_with(&Q::imag_unit(), &Q::from_int(1)).unwrap());
    assert!(special_family_check(&Q::from_int(0)).is_err());
}

#[test]
fn classical_deformations_are_not_self_conjugate() {
    let z = Q::from_int(0);
    let f = graph_frame(z.clone(), Q::from_int(1), Q::from_int(2), z);
    assert!(f.is_graph());
    assert!(!is_self_conjugate(&f));
    // one deformed entry per row, in the T, W, ω̄, ρ̄ columns
    for (r, row) in f.rows.iter().enumerate() {
        for (c, x) in row.iter().enumerate().skip(4) {
            if !x.is_zero() {
                assert!(matches!((r, c), (0, 4) | (1, 5) | (2, 6) | (3, 7)), "{r},{c}");
            }
        }
    }
}
