use std::fmt::Write;

use gerstenhaber::dga::{verify_axioms, AxiomOptions};
use gerstenhaber::hodge::Hodge;
use gerstenhaber::mirror::{cohomology_match, mirror_map, verify_mirror};
use gerstenhaber::nil::{build_kodaira, complex_dga};
use gerstenhaber::{GaussianRational as Q, Multivector};
use serde_json::{json, Map, Value};

use crate::input::{bad, Algebra};
use crate::Outcome;

fn mark(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn run(
    alg: &Algebra,
    axioms: bool,
    abelian_h: bool,
    mirror: bool,
    jacobi_degree: Option<u32>,
) -> anyhow::Result<Outcome> {
    let complex = matches!(alg, Algebra::Complex { .. });
    let (axioms, abelian_h, mirror) =
        if axioms || abelian_h || mirror { (axioms, abelian_h, mirror) } else { (true, complex, !complex) };
    if abelian_h && !complex {
        return Err(bad("--abelian-h needs a complex specification"));
    }
    if mirror && complex {
        return Err(bad("--mirror needs a symplectic specification"));
    }
    let pres = alg.presentation()?;
    let gens = pres.generators();
    let mut text = String::new();
    let mut results = Map::new();
    let mut passed = true;

    if axioms {
        let opts = AxiomOptions { triple_degree_limit: None, jacobi_degree_limit: jacobi_degree };
        let report = verify_axioms(&pres, opts);
        let mut rows = Vec::new();
        for c in &report.checks {
            let counter = c.counterexample.as_ref().map(|ms| ms.iter().map(|&m| gens.name_of(m)).collect::<Vec<_>>());
            write!(text, "{} {} ({} cases)", mark(c.passed), c.axiom, c.checked)?;
            if let Some(ms) = &counter {
                write!(text, " counterexample: {}", ms.join(", "))?;
            }
            writeln!(text)?;
            rows.push(json!({
                "axiom": c.axiom.to_string(),
                "passed": c.passed,
                "checked": c.checked,
                "counterexample": counter,
            }));
        }
        passed &= report.passed();
        results.insert("axioms".into(), Value::Array(rows));
    }

    if abelian_h {
        let hodge = Hodge::new(&pres);
        let basis: Vec<Multivector> = hodge.cohomology_basis().spaces.into_values().flatten().collect();
        let mut bad_pairs = Vec::new();
        let mut nonzero = 0usize;
        for a in &basis {
            for b in &basis {
                let br = pres.schouten(a, b);
                if !br.is_zero() {
                    nonzero += 1;
                }
                if !hodge.is_exact(&br) {
                    bad_pairs.push([a.display(gens), b.display(gens), br.display(gens)]);
                }
            }
        }
        let ok = bad_pairs.is_empty();
        writeln!(
            text,
            "{} harmonic brackets are exact ({} pairs, {} nonzero)",
            mark(ok),
            basis.len() * basis.len(),
            nonzero
        )?;
        for [a, b, br] in &bad_pairs {
            writeln!(text, "  not exact: [{a}, {b}] = {br}")?;
        }
        passed &= ok;
        results.insert(
            "abelian_h".into(),
            json!({ "passed": ok, "pairs": basis.len() * basis.len(), "nonzero": nonzero, "failures": bad_pairs }),
        );
    }

    if mirror {
        let Algebra::Symplectic(s) = alg else { unreachable!() };
        let surface = complex_dga(&build_kodaira::<Q>(1)?);
        let map = mirror_map(s).map_err(|e| bad(e.to_string()))?;
        let report = verify_mirror(&surface, &pres, &map);
        let counter = report.counterexample.as_ref().map(|(a, b)| format!("[{a}, {b}]"));
        for (name, ok) in [
            ("wedge", report.wedge),
            ("differential", report.differential),
            ("bracket", report.bracket),
            ("bijective", report.bijective),
        ] {
            writeln!(text, "{} mirror {name}", mark(ok))?;
        }
        if let Some(c) = &counter {
            writeln!(text, "  counterexample: {c}")?;
        }
        let coho = cohomology_match(s).map_err(|e| bad(e.to_string()))?;
        let fmt = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(", ");
        writeln!(
            text,
            "{} cohomology: complex ({}) symplectic ({})",
            mark(coho.passed()),
            fmt(&coho.complex),
            fmt(&coho.symplectic)
        )?;
        passed &= report.passed() && coho.passed();
        results.insert(
            "mirror".into(),
            json!({
                "wedge": report.wedge,
                "differential": report.differential,
                "bracket": report.bracket,
                "bijective": report.bijective,
                "counterexample": counter,
                "complex_dimensions": coho.complex,
                "symplectic_dimensions": coho.symplectic,
                "classes_map": coho.classes_map,
            }),
        );
    }

    Ok(Outcome { text, results: Value::Object(results), passed })
}
