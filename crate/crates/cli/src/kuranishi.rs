use std::fmt::Write;

use gerstenhaber::deformation::{
    closed_form_kodaira, generalized_closed_form, kuranishi_solve, mc_residual, Component, CoordinateSystem,
    KuranishiSolution, SymbolicSurface,
};
use gerstenhaber::hodge::Hodge;
use gerstenhaber::{DeformationError, GaussianRational as Q};
use serde_json::{json, Value};

use crate::input::{bad, Algebra};
use crate::{render, Mode, Outcome};

pub fn run(alg: &Algebra, trunc: u32, mode: Mode, components: bool, degree2: bool) -> anyhow::Result<Outcome> {
    let (spec, kodaira) = alg.complex()?;
    match mode {
        Mode::Strict => {
            if components {
                return Err(bad("--components needs --mode symbolic"));
            }
            strict(alg, spec.n(), kodaira, trunc, degree2)
        }
        Mode::Symbolic => {
            if !kodaira || spec.n() != 1 || degree2 {
                return Err(bad("symbolic mode is available for the Kodaira surface (--kodaira 1) only"));
            }
            symbolic(components)
        }
    }
}

fn strict(alg: &Algebra, n: usize, kodaira: bool, trunc: u32, degree2: bool) -> anyhow::Result<Outcome> {
    if trunc < 2 {
        return Err(bad(DeformationError::Truncation { min: 2, got: trunc }.to_string()));
    }
    if degree2 && !kodaira {
        return Err(bad("--degree2 is available for Kodaira specifications only"));
    }
    let pres = alg.presentation()?;
    let gens = pres.generators();
    let hodge = Hodge::new(&pres);
    let (coords, closed, series_var): (CoordinateSystem<Q>, Option<KuranishiSolution<Q>>, Option<&str>) = if degree2 {
        (CoordinateSystem::kodaira_degree_two(n), Some(generalized_closed_form(n, trunc)), Some("a"))
    } else if kodaira && n == 1 {
        (CoordinateSystem::kodaira_surface(), Some(closed_form_kodaira(trunc)), Some("t2"))
    } else {
        (CoordinateSystem::from_harmonics(&hodge), None, None)
    };
    let sol = kuranishi_solve(&pres, &hodge, &coords, trunc)?;
    let names = coords.names();
    let x = series_var.map(|v| coords.index_of(v)).transpose()?;
    let residual_zero = mc_residual(&pres, &coords, &sol.gamma, &sol.chen).is_zero();
    let matches = closed.as_ref().map(|c| c.gamma == sol.gamma && c.chen == sol.chen);

    let mut text = String::new();
    writeln!(text, "coordinates: {}", names.join(" "))?;
    writeln!(text, "truncation: {trunc}")?;
    writeln!(text, "gamma:")?;
    let mut gamma = Vec::new();
    for (m, c) in sol.gamma.terms() {
        let closed_form = x.and_then(|x| render::closed_form(c, x, &names));
        let shown = closed_form.clone().unwrap_or_else(|| c.display(&names));
        writeln!(text, "  {}: {shown}", gens.name_of(m))?;
        gamma.push(json!({
            "field": gens.name_of(m),
            "series": render::series(c, &names),
            "closed_form": closed_form,
        }));
    }
    writeln!(text, "chen:")?;
    let mut chen = Vec::new();
    for (i, c) in sol.chen.coeffs.iter().enumerate() {
        if !c.is_zero() {
            writeln!(text, "  {}: {}", names[i], c.display(&names))?;
            chen.push(json!({ "coordinate": names[i], "series": render::series(c, &names) }));
        }
    }
    if chen.is_empty() {
        writeln!(text, "  0")?;
    }
    writeln!(text, "residual: {}", if residual_zero { "0" } else { "nonzero" })?;
    if let Some(m) = matches {
        writeln!(text, "closed form: {}", if m { "matches" } else { "differs" })?;
    }
    let results = json!({
        "mode": "strict",
        "truncation": trunc,
        "coordinates": names,
        "gamma": gamma,
        "chen": chen,
        "residual_zero": residual_zero,
        "matches_closed_form": matches,
    });
    Ok(Outcome { text, results, passed: residual_zero && matches != Some(false) })
}

fn symbolic(components: bool) -> anyhow::Result<Outcome> {
    let s = SymbolicSurface::<Q>::new();
    let names = s.coords().names();
    let mut text = String::new();
    writeln!(text, "mu1: {}", s.mu1().display(&names))?;
    writeln!(text, "mu2: {}", s.mu2().display(&names))?;
    let identity = s.mu_identity().is_zero();
    writeln!(text, "mu2*t4 - mu1*s3: {}", if identity { "0" } else { "nonzero" })?;
    writeln!(text, "chen:")?;
    let mut chen = Vec::new();
    for (name, c) in s.chen() {
        writeln!(text, "  {name}: {}", c.display(&names))?;
        chen.push(json!({ "coordinate": name, "expression": c.display(&names) }));
    }
    let mut passed = identity;
    let mut comps = Vec::new();
    if components {
        for comp in [Component::K0, Component::K1] {
            let eqs = comp.equations();
            writeln!(text, "{comp:?} ({}):", eqs.iter().map(|e| format!("{e} = 0")).collect::<Vec<_>>().join(", "))?;
            let restricted = s.chen_on(comp);
            let vanish = restricted.iter().all(|(_, c)| c.is_zero());
            passed &= vanish;
            writeln!(text, "  chen: {}", if vanish { "0" } else { "nonzero" })?;
            let mut gauge = Vec::new();
            for (beta, terms) in s.gauge_brackets(comp) {
                let parts: Vec<String> = terms.iter().map(|(a, e)| format!("({}) d/d{a}", e.display(&names))).collect();
                writeln!(text, "  [chen, d/d{beta}] = {}", parts.join(" + "))?;
                gauge.push(json!({
                    "direction": beta,
                    "terms": terms.iter().map(|(a, e)| json!([a, e.display(&names)])).collect::<Vec<_>>(),
                }));
            }
            comps.push(json!({
                "component": format!("{comp:?}"),
                "equations": eqs,
                "chen_vanishes": vanish,
                "gauge_brackets": gauge,
            }));
        }
    }
    let results = json!({
        "mode": "symbolic",
        "mu1": s.mu1().display(&names),
        "mu2": s.mu2().display(&names),
        "mu_identity": identity,
        "chen": chen,
        "components": if components { Value::Array(comps) } else { Value::Null },
    });
    Ok(Outcome { text, results, passed })
}
