use gerstenhaber::deformation::kuranishi::geometric;
use gerstenhaber::deformation::kuranishi::s_field;
use gerstenhaber::deformation::{
    closed_form_kodaira, dbar_gamma, frobenius_products, generalized_closed_form, kuranishi_solve, mc_residual,
    ChenField, CoeffMonomial, CoordinateSystem, SuperField, SuperScalar,
};
use gerstenhaber::hodge::Hodge;
use gerstenhaber::nil::{build_kodaira, complex_dga};
use gerstenhaber::{DgaPresentation, GaussianRational as Q, Multivector, Scalar};

fn kodaira(n: usize) -> DgaPresentation {
    complex_dga(&build_kodaira(n).unwrap())
}

#[test]
fn generalized_solution_solves_the_equation() {
    for n in 2..=3 {
        let p = kodaira(n);
        let cs = CoordinateSystem::kodaira_degree_two(n);
        let sol = generalized_closed_form::<Q>(n, 4);
        assert!(mc_residual(&p, &cs, &sol.gamma, &sol.chen).is_zero(), "n={n}");
    }
}

#[test]
fn recursion_on_degree_two_classes_is_unobstructed() {
    let p = kodaira(2);
    let h = Hodge::new(&p);
    let cs = CoordinateSystem::kodaira_degree_two(2);
    let sol = kuranishi_solve(&p, &h, &cs, 4).unwrap();
    assert!(sol.chen.is_zero());
    assert_eq!(sol.gamma, generalized_closed_form(2, 4).gamma);
}

#[test]
fn s_field_data() {
    let n = 2;
    let p = kodaira(n);
    let h = Hodge::new(&p);
    let e = |names: &[&str]| p.element(names).unwrap();
    let s = s_field::<Q>(n, 0, 1);
    assert_eq!(p.differential(&s), e(&["ow1", "ow2", "W"]).scale(&Q::imag_ratio(1, 2)));
    assert!(h.adjoint(&s).is_zero());
    assert!(h.harmonic_projection(&s).is_zero());
    // [B^j, B_k] = ∂̄ s^j_k
    assert_eq!(p.schouten(&e(&["ow1", "or"]), &e(&["T2", "W"])), p.differential(&s));
    assert_eq!(p.schouten(&s, &e(&["ow2", "or"])).is_zero(), true);
    let sl = s_field::<Q>(3, 0, 1);
    let p3 = kodaira(3);
    let e3 = |names: &[&str]| p3.element(names).unwrap();
    assert_eq!(p3.schouten(&sl, &e3(&["ow3", "or"])), e3(&["ow1", "ow2", "ow3"]).scale(&Q::imag_ratio(1, 2)));
    assert_eq!(p.schouten(&s, &e(&["or", "W"])), -&p.differential(&s));
}

mod symbolic {
    use gerstenhaber::deformation::{Component, SymExpr, SymbolicSurface};
    use gerstenhaber::{GaussianRational as Q, Scalar};

    fn displayed_chen(s: &SymbolicSurface<Q>) -> Vec<SymExpr<Q>> {
        let v = |n| s.var(n);
        let inv = SymExpr::inverse_one_minus_t2();
        let half_i = Q::imag_ratio(1, 2);
        // −(i/2) s0/(1−t2) · (t4 s0, s3 s0, −t4 s0 s3/(1−t2), 2 s3²)
        let pre = v("s0").mul(&inv).scale(&-half_i);
        vec![
            pre.mul(&v("t4")).mul(&v("s0")),
            pre.mul(&v("s3")).mul(&v("s0")),
            pre.mul(&v("t4").mul(&v("s0")).mul(&v("s3")).mul(&inv).neg()),
            pre.mul(&v("s3").mul(&v("s3")).scale(&Q::from_int(2))),
        ]
    }

    #[test]
    fn chen_agrees_with_both_displays() {
        let s = SymbolicSurface::<Q>::new();
        for ((name, c), p) in s.chen().iter().zip(displayed_chen(&s)) {
            assert!(c.same_as(&p), "{name}: {c:?} vs {p:?}");
        }
        assert!(s.mu_identity().is_zero());
    }

    #[test]
    fn chen_vanishes_on_both_components() {
        let s = SymbolicSurface::<Q>::new();
        for comp in [Component::K0, Component::K1] {
            for (name, c) in s.chen_on(comp) {
                assert!(c.is_zero(), "{comp:?} {name}");
            }
        }
        let one = Q::from_int(1);
        let pt = s.point(&[("s0", one.clone()), ("s3", one.clone()), ("t4", one), ("t2", Q::from_int(0))]);
        let vals: Vec<Q> = s.chen().iter().map(|(_, c)| c.evaluate(&pt).unwrap()).collect();
        let expect = [Q::imag_ratio(-1, 2), Q::imag_ratio(-1, 2), Q::imag_ratio(1, 2), Q::imag_ratio(-1, 1)];
        assert_eq!(vals, expect);
    }

    #[test]
    fn gauge_brackets_on_components() {
        let s = SymbolicSurface::<Q>::new();
        let inv = SymExpr::inverse_one_minus_t2();
        let s0s0 = s.var("s0").mul(&s.var("s0")).mul(&inv);

        let k0 = s.gauge_brackets(Component::K0);
        assert_eq!(k0.len(), 1);
        assert_eq!(k0[0].0, "s0");
        let want = s.var("s3").mul(&s.var("s3")).mul(&inv).scale(&Q::imag_ratio(-1, 1));
        assert_eq!(k0[0].1.len(), 1);
        assert_eq!(k0[0].1[0].0, "t5");
        assert!(k0[0].1[0].1.same_as(&want));

        let k1 = s.gauge_brackets(Component::K1);
        let names: Vec<&str> = k1.iter().map(|(b, _)| b.as_str()).collect();
        assert_eq!(names, ["t4", "s3"]);
        let two_i = Q::imag_ratio(2, 1);
        let (t4, s3) = (&k1[0].1, &k1[1].1);
        assert_eq!((t4[0].0.as_str(), s3[0].0.as_str()), ("s1", "t1"));
        assert!(s3[0].1.scale(&two_i).same_as(&s0s0.neg()));
        // the t4 bracket comes out as −s0²/(1−t2) ∂/∂s1 after scaling by 2i
        assert!(t4[0].1.scale(&two_i).same_as(&s0s0.neg()));

        assert!(s.gauge_bracket("t2", Component::K0).unwrap().is_empty());
        assert!(s.gauge_bracket("x9", Component::K0).is_err());
        assert!("K2".parse::<Component>().is_err());
    }
}

fn surface() -> (DgaPresentation, Hodge<Q>, CoordinateSystem<Q>) {
    let p = kodaira(1);
    let h = Hodge::new(&p);
    (p, h, CoordinateSystem::kodaira_surface())
}

fn field(p: &DgaPresentation, c: SuperScalar<Q>, names: &[&str]) -> SuperField<Q> {
    SuperField::coefficient_times(&c, &p.element(names).unwrap())
}

#[test]
fn surface_recursion_through_degree_eight() {
    let (p, h, cs) = surface();
    let sol = kuranishi_solve(&p, &h, &cs, 8).unwrap();
    assert!(mc_residual(&p, &cs, &sol.gamma, &sol.chen).is_zero());
    assert!(sol.chen.is_zero());
    assert!(sol.chen.is_odd_field(&cs));
    assert_eq!(sol.gamma, closed_form_kodaira(8).gamma);
}

#[test]
fn closed_form_coefficients() {
    let d = 6;
    let (p, _, cs) = surface();
    let sol = closed_form_kodaira::<Q>(d);
    let t = p.element(&["T"]).unwrap().terms().next().unwrap().0;
    let rt = p.element(&["or", "T"]).unwrap().terms().next().unwrap().0;
    let (s0, s3, t2, t4) = (6u8, 9u8, 2u8, 4u8);
    for k in 0..=4usize {
        let mut even = vec![t2; k];
        even.push(t4);
        even.sort();
        let m = CoeffMonomial { even: even.clone(), odd: 1 << s0 };
        assert_eq!(sol.gamma.coeff(t).coeff(&m), Q::from_int(-1));
        let m = CoeffMonomial { even: vec![t2; k], odd: (1 << s0) | (1 << s3) };
        assert_eq!(sol.gamma.coeff(rt).coeff(&m), Q::from_int(-1));
    }
    // strict nilpotency removes every Chen coefficient
    assert!(sol.chen.is_zero());
    assert!(mc_residual(&p, &cs, &sol.gamma, &sol.chen).is_zero());
}

#[test]
fn residual_examples() {
    let (p, _, cs) = surface();
    let v = |n: &str| cs.var_named(n, 4).unwrap();
    // s0 ρ̄ + t4 T∧W − s0 t4 T
    let g = field(&p, v("s0"), &["or"]).add(&field(&p, v("t4"), &["T", "W"])).sub(&field(
        &p,
        v("s0").mul(&v("t4")),
        &["T"],
    ));
    assert!(mc_residual(&p, &cs, &g, &ChenField::zero(cs.len(), 4)).is_zero());

    // Γ_1 alone is not a solution; in the strict ring its residual is exact
    let h = Hodge::new(&p);
    let g1 = cs.gamma1(4);
    let r = mc_residual(&p, &cs, &g1, &ChenField::zero(cs.len(), 4));
    assert!(!r.is_zero());
    assert!(r.harmonic_projection(&h).is_zero());

    // central classes only: nothing to correct
    let sub = cs.restrict(&["t0", "s1", "t1", "t5"]).unwrap();
    let sol = kuranishi_solve(&p, &h, &sub, 4).unwrap();
    assert_eq!(sol.gamma, sub.gamma1(4));
    assert!(sol.chen.is_zero());
}

#[test]
fn low_order_recursion() {
    let (p, h, cs) = surface();
    let sol = kuranishi_solve(&p, &h, &cs, 3).unwrap();
    let t = p.element(&["T"]).unwrap().terms().next().unwrap().0;
    let c = sol.gamma.coeff(t);
    let m = CoeffMonomial { even: vec![2, 4], odd: 1 << 6 };
    assert_eq!(c.coeff(&m), Q::from_int(-1));
}

fn generic_gamma(cs: &CoordinateSystem<Q>, d: u32) -> SuperField<Q> {
    cs.gamma1(d).vanish(&[cs.index_of("s0").unwrap()])
}

#[test]
fn twisted_differential_examples() {
    let d = 4;
    let (p, _, cs) = surface();
    let g = generic_gamma(&cs, d);
    let one = SuperScalar::one(d);
    let v = |n: &str| cs.var_named(n, d).unwrap();
    let hi = Q::imag_ratio(1, 2);

    let lhs = dbar_gamma(&p, &g, &field(&p, one.clone(), &["T"]));
    let rhs = field(&p, one.scale(&-hi.clone()), &["ow", "W"])
        .add(&field(&p, v("t2").scale(&hi), &["ow", "W"]))
        .add(&field(&p, v("s3").scale(&hi), &["ow", "T", "W"]));
    assert_eq!(lhs, rhs);

    let lhs = dbar_gamma(&p, &g, &field(&p, one.clone(), &["or", "T"]));
    let rhs = field(&p, one.scale(&-hi.clone()), &["ow", "or", "W"])
        .add(&field(&p, v("t2").scale(&hi), &["ow", "or", "W"]))
        .add(&field(&p, v("t4").scale(&hi), &["ow", "T", "W"]))
        .add(&field(&p, v("s3").scale(&Q::imag_ratio(-1, 1)), &["ow", "or", "T", "W"]));
    assert_eq!(lhs, rhs);

    for i in 0..cs.len() {
        if cs.get(i).name == "s0" {
            continue;
        }
        let tangent = g.derivative(i, cs.is_odd(i));
        assert!(dbar_gamma(&p, &g, &tangent).is_zero(), "{}", cs.get(i).name);
    }
    // ∂̄_Γ squares to zero on the stratum
    for m in p.generators().all_monomials() {
        let x = SuperField::from_multivector(&Multivector::monomial(m), d);
        assert!(dbar_gamma(&p, &g, &dbar_gamma(&p, &g, &x)).is_zero());
    }
}

#[test]
fn frobenius_table_matches() {
    let d = 6;
    let (p, h, _) = surface();
    let table = frobenius_products(&p, &h, d).unwrap();
    let cs = table.coordinate_system().clone();
    let v = |n: &str| cs.var_named(n, d).unwrap();
    let g = geometric(&v("t2"));
    let one = SuperScalar::one(d);
    let expected = [
        ("t1", "s2", v("t4").mul(&g)),
        ("t2", "s1", v("t4").mul(&g)),
        ("t3", "s2", one.clone()),
        ("t4", "s1", one.clone()),
        ("s1", "t2", v("t4").mul(&g)),
        ("s1", "t4", one.clone()),
        ("s1", "s2", v("s3").mul(&g)),
        ("s2", "t1", v("t4").mul(&g)),
        ("s2", "t3", one.clone()),
        ("s2", "s1", v("s3").mul(&g).neg()),
    ];
    let six = ["t1", "t2", "t3", "t4", "s1", "s2"];
    for a in six {
        for b in six {
            let got = table.product_named(a, b).unwrap();
            match expected.iter().find(|(x, y, _)| *x == a && *y == b) {
                Some((_, _, c)) => {
                    assert_eq!(got.len(), 1, "{a}∘{b}: {got:?}");
                    assert_eq!(got[0].0, "s4");
                    assert_eq!(&got[0].1, c, "{a}∘{b}");
                }
                None => assert!(got.is_empty(), "{a}∘{b}: {got:?}"),
            }
        }
    }
    for a in ["s3", "s4", "s5"] {
        for b in table.names() {
            if b != "t0" {
                assert!(table.product_named(a, &b).unwrap().is_empty(), "{a}∘{b}");
            }
        }
    }
    assert!(table.is_unit("t0").unwrap());
    assert!(table.is_supercommutative());
    assert_eq!(table.associativity_failure(), None);
}
