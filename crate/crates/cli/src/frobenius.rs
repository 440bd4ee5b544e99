use std::fmt::Write;

use gerstenhaber::deformation::frobenius_products;
use gerstenhaber::hodge::Hodge;
use gerstenhaber::DeformationError;
use serde_json::json;

use crate::input::{bad, Algebra};
use crate::{render, Outcome};

const SHOWN: [&str; 6] = ["t1", "t2", "t3", "t4", "s1", "s2"];

pub fn run(alg: &Algebra, trunc: u32) -> anyhow::Result<Outcome> {
    let (spec, kodaira) = alg.complex()?;
    if !kodaira || spec.n() != 1 {
        return Err(bad("the product table is available for the Kodaira surface (--kodaira 1) only"));
    }
    if trunc < 1 {
        return Err(bad(DeformationError::Truncation { min: 1, got: trunc }.to_string()));
    }
    let pres = alg.presentation()?;
    let hodge = Hodge::new(&pres);
    let table = frobenius_products(&pres, &hodge, trunc)?;
    let cs = table.coordinate_system();
    let names = cs.names();
    let t2 = cs.index_of("t2")?;

    let mut text = String::new();
    writeln!(text, "truncation: {trunc}")?;
    let mut entries = Vec::new();
    for a in SHOWN {
        for b in SHOWN {
            let prod = table.product_named(a, b)?;
            let mut parts = Vec::new();
            let mut terms = Vec::new();
            for (g, c) in &prod {
                let closed = render::closed_form(c, t2, &names);
                parts.push(format!("{} d/d{g}", closed.clone().unwrap_or_else(|| c.display(&names))));
                terms.push(json!({ "target": g, "series": render::series(c, &names), "closed_form": closed }));
            }
            if !prod.is_empty() {
                writeln!(text, "d/d{a} o d/d{b} = {}", parts.join(" + "))?;
            }
            entries.push(json!({ "left": a, "right": b, "terms": terms }));
        }
    }
    let unit = table.is_unit("t0")?;
    let supercommutative = table.is_supercommutative();
    let failure = table.associativity_failure();
    let row_names = table.names();
    let mut trivial = true;
    for a in ["s3", "s4", "s5"] {
        for b in row_names.iter().filter(|b| *b != "t0") {
            trivial &= table.product_named(a, b)?.is_empty();
        }
    }
    let yes = |b: bool| if b { "yes" } else { "no" };
    writeln!(text, "unit d/dt0: {}", yes(unit))?;
    writeln!(text, "d/ds3, d/ds4, d/ds5 products trivial: {}", yes(trivial))?;
    writeln!(text, "supercommutative: {}", yes(supercommutative))?;
    let assoc = failure.map(|(a, b, c)| [row_names[a].clone(), row_names[b].clone(), row_names[c].clone()]);
    match &assoc {
        None => writeln!(text, "associative: yes")?,
        Some([a, b, c]) => writeln!(text, "associative: no, fails at ({a}, {b}, {c})")?,
    }
    let results = json!({
        "truncation": trunc,
        "coordinates": row_names,
        "entries": entries,
        "unit": unit,
        "s3_s4_s5_trivial": trivial,
        "supercommutative": supercommutative,
        "associativity_failure": assoc,
    });
    Ok(Outcome { text, results, passed: unit && trivial && supercommutative && assoc.is_none() })
}
