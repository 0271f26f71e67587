//! Text / LaTeX / JSON rendering of the core algebra types.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use zetaforge_core::poly::{BiPoly, IntPoly, LaurentSeries, RationalFn};

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

fn pow(var: &str, e: i64, latex: bool) -> String {
    match e {
        0 => "1".into(),
        1 => var.into(),
        _ if latex => format!("{var}^{{{e}}}"),
        _ => format!("{var}^{e}"),
    }
}

/// One `c * var^e` term appended to `out`, with sign handling.
fn push_term(out: &mut String, c: &BigRational, var: &str, e: i64, latex: bool) {
    let neg = c.is_negative();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let a = c.abs();
    let p = pow(var, e, latex);
    if a.is_one() && e != 0 {
        out.push_str(&p);
    } else if e == 0 {
        out.push_str(&rat_str(&a));
    } else {
        out.push_str(&rat_str(&a));
        if latex {
            out.push(' ');
        } else {
            out.push('*');
        }
        out.push_str(&p);
    }
}

pub fn rat_str(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn int_rat(c: &BigInt) -> BigRational {
    BigRational::from_integer(c.clone())
}

pub fn poly(p: &IntPoly, var: &str, latex: bool) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for e in 0..=p.degree().unwrap() {
        let c = p.coeff(e);
        if !c.is_zero() {
            push_term(&mut out, &int_rat(&c), var, e as i64, latex);
        }
    }
    out
}

pub fn ratfn(r: &RationalFn, var: &str, latex: bool) -> String {
    let num = poly(r.num(), var, latex);
    if r.den().is_one() {
        return num;
    }
    let den = poly(r.den(), var, latex);
    if latex {
        format!("\\frac{{{num}}}{{{den}}}")
    } else {
        format!("({num})/({den})")
    }
}

pub fn series(s: &LaurentSeries, var: &str, latex: bool) -> String {
    let mut out = String::new();
    for e in s.min_exp()..s.trunc_order() {
        if let Some(c) = s.coeff(e) {
            if !c.is_zero() {
                push_term(&mut out, &c, var, e, latex);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    let n = s.trunc_order();
    if latex {
        out.push_str(&format!(" + O({})", pow(var, n, true)));
    } else {
        out.push_str(&format!(" + O({})", pow(var, n, false)));
    }
    out
}

/// A two-variable numerator in `t` whose coefficients are polynomials in
/// the Lefschetz symbol.
pub fn bipoly(b: &BiPoly, lsym: &str, latex: bool) -> String {
    if b.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for te in 0..=b.t_degree().unwrap() {
        let c = b.coeff(te);
        if c.is_zero() {
            continue;
        }
        if c.degree() == Some(0) {
            push_term(&mut out, &int_rat(&c.coeff(0)), "t", te as i64, latex);
            continue;
        }
        let inner = poly(&c, lsym, latex);
        let piece = if te == 0 {
            format!("({inner})")
        } else if !inner.contains(['+', '-']) {
            format!("{inner}{}{}", if latex { " " } else { "*" }, pow("t", te as i64, latex))
        } else {
            format!("({inner}){}{}", if latex { " " } else { "*" }, pow("t", te as i64, latex))
        };
        if !out.is_empty() {
            out.push_str(" + ");
        }
        out.push_str(&piece);
    }
    out
}

// ---- JSON builders; all integers are decimal strings ----

pub fn poly_json(p: &IntPoly, var: &str) -> Value {
    let coeffs: Vec<String> = match p.degree() {
        None => vec!["0".into()],
        Some(d) => (0..=d).map(|e| p.coeff(e).to_string()).collect(),
    };
    json!({ "var": var, "coeffs": coeffs })
}

pub fn ratfn_json(r: &RationalFn, var: &str) -> Value {
    json!({ "num": poly_json(r.num(), var), "den": poly_json(r.den(), var) })
}

pub fn series_json(s: &LaurentSeries, var: &str) -> Value {
    let coeffs: Vec<String> = (s.min_exp()..s.trunc_order())
        .map(|e| rat_str(&s.coeff(e).unwrap()))
        .collect();
    json!({
        "var": var,
        "min_exp": s.min_exp(),
        "trunc_order": s.trunc_order(),
        "coeffs": coeffs,
    })
}

pub fn bipoly_json(b: &BiPoly) -> Value {
    let rows: Vec<Value> = match b.t_degree() {
        None => vec![json!(["0"])],
        Some(d) => (0..=d)
            .map(|te| {
                let c = b.coeff(te);
                match poly_json(&c, "L") {
                    Value::Object(m) => m["coeffs"].clone(),
                    _ => unreachable!(),
                }
            })
            .collect(),
    };
    json!({ "var": "t", "coeff_var": "L", "coeffs": rows })
}
