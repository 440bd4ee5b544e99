//! Text and JSON forms of exact values. Monomials are `^`-joined generator
//! names and scalars are `["re","im"]` rational string pairs.

use gerstenhaber::deformation::SuperScalar;
use gerstenhaber::{GaussianRational as Q, GeneratorSet, Multivector, Scalar};
use serde_json::{json, Map, Value};

pub fn scalar(c: &Q) -> Value {
    json!(c.to_pair())
}

pub fn multivector(v: &Multivector, gens: &GeneratorSet) -> Value {
    let mut out = Map::new();
    for (m, c) in v.terms() {
        out.insert(gens.name_of(m), scalar(c));
    }
    Value::Object(out)
}

/// Series terms as `[coordinate monomial, coefficient]`, lowest degree first.
pub fn series(r: &SuperScalar<Q>, names: &[String]) -> Value {
    let mut terms: Vec<_> = r.terms().collect();
    terms.sort_by_key(|(m, _)| (m.degree(), (*m).clone()));
    Value::Array(terms.into_iter().map(|(m, c)| json!([m.display(names), c.to_pair()])).collect())
}

/// Rewrites a truncated series as `N/(1 − x)^k` with `k ≤ 3` when the
/// numerator is short enough to be pinned down by the known terms.
pub fn closed_form(r: &SuperScalar<Q>, x: usize, names: &[String]) -> Option<String> {
    let trunc = r.truncation();
    let one_minus = SuperScalar::one(trunc).sub(&SuperScalar::even_var(x, trunc));
    let mut num = r.clone();
    for k in 0..=3 {
        let top = num.terms().map(|(m, _)| m.degree()).max().unwrap_or(0);
        if 2 * top < trunc {
            let body = num.display(names);
            return Some(match k {
                0 => body,
                1 => format!("({body})/(1-{})", names[x]),
                _ => format!("({body})/(1-{})^{k}", names[x]),
            });
        }
        num = num.mul(&one_minus);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        ["a", "x"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn recognizes_geometric_denominators() {
        let d = 6;
        let x = SuperScalar::<Q>::even_var(1, d);
        let a = SuperScalar::<Q>::even_var(0, d);
        let inv = SuperScalar::one(d).sub(&x).inverse().unwrap();
        assert_eq!(closed_form(&a.mul(&inv), 1, &names()).unwrap(), "(a)/(1-x)");
        assert_eq!(closed_form(&a.mul(&inv).mul(&inv), 1, &names()).unwrap(), "(a)/(1-x)^2");
        assert_eq!(closed_form(&a, 1, &names()).unwrap(), "a");
    }

    #[test]
    fn long_series_stay_raw() {
        let d = 4;
        let a = SuperScalar::<Q>::even_var(0, d);
        let e = SuperScalar::one(d).add(&a).add(&a.mul(&a)).add(&a.mul(&a).mul(&a));
        assert_eq!(closed_form(&e, 1, &names()), None);
    }
}
