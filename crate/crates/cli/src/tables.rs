use std::fmt::Write;

use gerstenhaber::deformation::CoordinateSystem;
use gerstenhaber::hodge::Hodge;
use gerstenhaber::{Bidegree, GaussianRational as Q, Multivector};
use serde_json::{json, Value};

use crate::input::Algebra;
use crate::render;
use crate::Outcome;

pub fn run(alg: &Algebra, degree: Option<u32>, brackets: bool) -> anyhow::Result<Outcome> {
    let (spec, kodaira) = alg.complex()?;
    let pres = alg.presentation()?;
    let gens = pres.generators();
    let hodge = Hodge::new(&pres);
    let basis = hodge.cohomology_basis();
    let table = basis.table();
    let mut text = String::new();

    writeln!(text, "h^(p,q), rows p, columns q")?;
    for (p, row) in table.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        writeln!(text, "  p={p}: {}", cells.join(" "))?;
    }

    let top = gens.max_bidegree();
    let keep = |bd: Bidegree| degree.map_or(true, |d| bd.total() == d);
    let mut listed: Vec<(String, Multivector)> = Vec::new();
    let mut spaces = Vec::new();
    for p in 0..=top.p {
        for q in 0..=top.q {
            let bd = Bidegree::new(p, q);
            if !keep(bd) {
                continue;
            }
            let harmonic = hodge.harmonic_basis(p, q);
            let complement = hodge.harmonic_complement(p, q);
            let show = |xs: &[Multivector]| xs.iter().map(|x| x.display(gens)).collect::<Vec<_>>();
            writeln!(text, "({p},{q}) harmonic: {}", show(&harmonic).join(", "))?;
            if !complement.is_empty() {
                writeln!(text, "({p},{q}) complement: {}", show(&complement).join(", "))?;
            }
            spaces.push(json!({
                "p": p,
                "q": q,
                "harmonic": harmonic.iter().map(|x| render::multivector(x, gens)).collect::<Vec<_>>(),
                "complement": complement.iter().map(|x| render::multivector(x, gens)).collect::<Vec<_>>(),
            }));
            listed.extend(harmonic.into_iter().chain(complement).map(|x| (x.display(gens), x)));
        }
    }

    let mut results = json!({ "dimensions": table, "spaces": spaces });

    if degree == Some(2) && kodaira {
        let cs = CoordinateSystem::<Q>::kodaira_degree_two(spec.n());
        writeln!(text, "degree-two classes:")?;
        let mut named = Vec::new();
        for c in cs.coords() {
            writeln!(text, "  {} = {}", c.name, c.theta.display(gens))?;
            named.push(json!({ "name": c.name, "class": render::multivector(&c.theta, gens) }));
        }
        results["degree_two"] = Value::Array(named);
    }

    if brackets {
        writeln!(text, "brackets:")?;
        let mut rows = Vec::new();
        for (an, a) in &listed {
            for (bn, b) in &listed {
                let br = pres.schouten(a, b);
                writeln!(text, "  [{an}, {bn}] = {}", br.display(gens))?;
                rows.push(json!({ "left": an, "right": bn, "bracket": render::multivector(&br, gens) }));
            }
        }
        results["brackets"] = Value::Array(rows);
    }

    Ok(Outcome { text, results, passed: true })
}
