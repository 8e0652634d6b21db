//! Text, CSV and JSON rendering. Computed reals carry 17 significant digits;
//! λ is echoed in its shortest round-trip form.

use serde_json::{json, Map, Number, Value};

use markov_core::validate::LimitProbe;
use markov_core::{Bound, BoundSource, BoundsReport, MarkovResult};

/// `%.17g`: positional for decimal exponents in [-5, 17), scientific
/// otherwise, trailing zeros dropped.
pub fn fmt_real(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..17).contains(&exp) {
        trim_zeros(format!("{:.*}", (16 - exp) as usize, x))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

pub fn fmt_lambda(l: f64) -> String {
    l.to_string()
}

fn number(text: String) -> Value {
    serde_json::from_str::<Number>(&text).map(Value::Number).unwrap_or(Value::Null)
}

pub fn real(x: f64) -> Value {
    if x.is_finite() {
        number(fmt_real(x))
    } else {
        Value::Null
    }
}

fn opt_real(x: Option<f64>) -> Value {
    x.map_or(Value::Null, real)
}

fn source(s: Option<BoundSource>) -> Value {
    s.map_or(Value::Null, |s| Value::String(s.label().into()))
}

pub fn bound_json(b: &Bound) -> Value {
    json!({
        "source": b.source.label(),
        "lower_c2": opt_real(b.lower_c2),
        "upper_c2": opt_real(b.upper_c2),
        "applicable": b.applicable,
        "reason": if b.applicable { Value::Null } else { Value::String(b.reason.clone()) },
    })
}

pub fn result_json(r: &MarkovResult, bounds: &BoundsReport) -> Value {
    json!({
        "n": r.spec.n(),
        "lambda": number(fmt_lambda(r.spec.lambda())),
        "c": real(r.c),
        "c_squared": real(r.c_squared),
        "mu_1": real(r.mu1),
        "bracket": [real(r.bracket_used.0), real(r.bracket_used.1)],
        "backend": r.backend.name(),
        "iterations": r.iterations,
        "tolerance": real(r.tolerance),
        "bounds": bounds.bounds.iter().map(bound_json).collect::<Vec<_>>(),
    })
}

pub fn bounds_json(report: &BoundsReport) -> Value {
    let env = &report.envelope;
    json!({
        "n": report.spec.n(),
        "lambda": number(fmt_lambda(report.spec.lambda())),
        "envelope": {
            "lower_c2": opt_real(env.lower_c2),
            "upper_c2": opt_real(env.upper_c2),
            "lower_source": source(env.lower_source),
            "upper_source": source(env.upper_source),
            "consistent": env.is_consistent(),
        },
        "bounds": report.bounds.iter().map(bound_json).collect::<Vec<_>>(),
    })
}

pub fn result_text(r: &MarkovResult, bounds: &BoundsReport) -> String {
    let env = &bounds.envelope;
    let mut lines = vec![
        format!("n           {}", r.spec.n()),
        format!("lambda      {}", fmt_lambda(r.spec.lambda())),
        format!("branch      {}", r.spec.branch().name()),
        format!("c           {}", fmt_real(r.c)),
        format!("c_squared   {}", fmt_real(r.c_squared)),
        format!("mu_1        {}", fmt_real(r.mu1)),
        format!("nu          {}", fmt_real(r.nu)),
        format!(
            "bracket     [{}, {}] ({:?})",
            fmt_real(r.bracket_used.0),
            fmt_real(r.bracket_used.1),
            r.bracket_source
        ),
        format!("backend     {}", r.backend.name()),
        format!("precision   {}{}", r.precision.name(), if r.escalated { " (escalated)" } else { "" }),
        format!("iterations  {}", r.iterations),
        format!("tolerance   {}", fmt_real(r.tolerance)),
    ];
    if let (Some(lo), Some(hi)) = (env.lower_c2, env.upper_c2) {
        lines.push(format!("envelope    [{}, {}] on c^2", fmt_real(lo), fmt_real(hi)));
    }
    lines.join("\n") + "\n"
}

pub fn bounds_text(report: &BoundsReport) -> String {
    let opt = |x: Option<f64>| x.map_or("-".to_string(), fmt_real);
    let mut out = format!(
        "n = {}, lambda = {}  (bounds on c^2)\n{:<10} {:<24} {:<24} {}\n",
        report.spec.n(),
        fmt_lambda(report.spec.lambda()),
        "source",
        "lower",
        "upper",
        "status"
    );
    for b in &report.bounds {
        let status = if b.applicable {
            if b.source.in_envelope() { "applicable".to_string() } else { "applicable (reference only)".to_string() }
        } else {
            format!("inapplicable: {}", b.reason)
        };
        out += &format!("{:<10} {:<24} {:<24} {}\n", b.source.label(), opt(b.lower_c2), opt(b.upper_c2), status);
    }
    let env = &report.envelope;
    match (env.lower_c2, env.upper_c2) {
        (None, None) => out += "envelope   none: no general estimate applies\n",
        _ => {
            let src = |s: Option<BoundSource>| s.map_or("-", BoundSource::label);
            out += &format!(
                "envelope   [{}, {}]  sources ({}, {}){}\n",
                opt(env.lower_c2),
                opt(env.upper_c2),
                src(env.lower_source),
                src(env.upper_source),
                if env.is_consistent() { "" } else { "  INCONSISTENT" }
            );
        }
    }
    out
}

pub fn limit_text(p: &LimitProbe, inside: bool) -> String {
    format!(
        "n = {}, lambda = -1/2 + {}\n(2 lambda + 1) c_n^2 = {}\nlimit bracket       = [{}, {}]\n{}\n",
        p.n,
        fmt_real(p.eps),
        fmt_real(p.value),
        fmt_real(p.bracket.0),
        fmt_real(p.bracket.1),
        if inside { "inside (relative slack 1e-3)" } else { "OUTSIDE (relative slack 1e-3)" }
    )
}

pub fn limit_json(p: &LimitProbe, inside: bool) -> Value {
    let mut m = Map::new();
    m.insert("n".into(), json!(p.n));
    m.insert("eps".into(), real(p.eps));
    m.insert("lambda".into(), real(p.lambda));
    m.insert("value".into(), real(p.value));
    m.insert("bracket".into(), json!([real(p.bracket.0), real(p.bracket.1)]));
    m.insert("inside".into(), json!(inside));
    Value::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(fmt_real(16.0), "16");
        assert_eq!(fmt_real(0.5), "0.5");
        assert_eq!(fmt_real(0.1), "0.10000000000000001");
        assert_eq!(fmt_real(2.0 * (14.0 + 178f64.sqrt())), "54.683328128252668");
        assert_eq!(fmt_real(1.5e-7), "1.4999999999999999e-7");
        assert_eq!(fmt_real(-2.5e20), "-2.5e20");
        assert_eq!(fmt_real(0.0), "0");
    }

    #[test]
    fn round_trips() {
        for x in [1.0 / 3.0, 54.683_328_128_252_67, 1e-300, 6.02214076e23, -0.0731484, f64::MAX, f64::MIN_POSITIVE] {
            assert_eq!(fmt_real(x).parse::<f64>().unwrap().to_bits(), x.to_bits(), "{x}");
        }
        assert_eq!(real(f64::NAN), Value::Null);
    }
}
