//! The user-facing operations, each producing both a text rendering and a
//! JSON value.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::expr::{parse_polynomial, Evaluated};
use crate::geometry::{rulings_report, SpanKind};
use crate::json;
use crate::print::{format_factorization, format_qpoly, format_quat, format_ratpoly, format_star_one};
use crate::qpoly::{all_univariate_factorizations, QPoly, UnivariateFactorization};
use crate::starone::{
    all_factorizations, canonicalize, enumerate_classes, factorize, norm_split, normalize, Factorization,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Check,
    Factor,
    Classes,
    All,
    Rulings,
    Expand,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Factor => "factor",
            Command::Classes => "classes",
            Command::All => "all",
            Command::Rulings => "rulings",
            Command::Expand => "expand",
        }
    }
}

impl FromStr for Command {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "check" => Command::Check,
            "factor" => Command::Factor,
            "classes" => Command::Classes,
            "all" => Command::All,
            "rulings" => Command::Rulings,
            "expand" => Command::Expand,
            other => return Err(format!("unknown command '{other}'")),
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    /// Reorder linear factors so their norms appear in ascending order.
    pub canonical_order: bool,
    /// Print the class signature next to each factorization.
    pub show_signatures: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub result: Value,
}

/// Process exit code for an error: 2 when no factorization exists, 3 when the
/// norm does not split into rational quadratics, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotSeparable => 2,
        Error::NotQuadraticallySplit(_) => 3,
        _ => 1,
    }
}

/// Stable machine-readable name of an error.
pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::ModulusMismatch => "ModulusMismatch",
        Error::ReducibleModulus(_) => "ReducibleModulus",
        Error::ZeroNorm => "ZeroNorm",
        Error::NotDivisible => "NotDivisible",
        Error::NotQuadraticallySplit(_) => "NotQuadraticallySplit",
        Error::MDividesQ => "MDividesQ",
        Error::NoRightFactor => "NoRightFactor",
        Error::NotARightFactor(_) => "NotARightFactor",
        Error::NotRationallyEmbeddable(_) => "NotRationallyEmbeddable",
        Error::NotSeparable => "NotSeparable",
        Error::InternalInconsistency(_) => "InternalInconsistency",
        Error::DifferentPolynomials => "DifferentPolynomials",
        Error::NoCommutingFactor => "NoCommutingFactor",
        Error::MNotFactorOfP(_) => "MNotFactorOfP",
        Error::ZeroInput => "ZeroInput",
        Error::NotOnNullQuadric => "NotOnNullQuadric",
        Error::NotStarOne => "NotStarOne",
        Error::Syntax { .. } => "SyntaxError",
        Error::Degree(_) => "DegreeError",
    }
}

/// The full JSON document for a run: `{command, input, result}` or
/// `{command, input, error}`.
pub fn document(command: Command, input: &str, outcome: &Result<Outcome>) -> Value {
    match outcome {
        Ok(o) => json!({ "command": command.name(), "input": input, "result": o.result }),
        Err(e) => json!({
            "command": command.name(),
            "input": input,
            "error": { "kind": error_kind(e), "message": e.to_string() },
        }),
    }
}

pub fn execute(command: Command, input: &str, options: Options) -> Result<Outcome> {
    let poly = parse_polynomial(input)?;
    let q = match (command, poly) {
        (Command::Expand, p) => return Ok(expand(&p)),
        (Command::Factor | Command::All, Evaluated::Univariate(p)) => {
            return univariate(command, &p, options);
        }
        (_, Evaluated::Univariate(_)) => return Err(Error::NotStarOne),
        (_, Evaluated::StarOne(q)) => q,
    };
    match command {
        Command::Check => {
            let (_, _, qn) = normalize(&q);
            let split = norm_split(&qn)?;
            Ok(Outcome {
                text: format!("P = {}\nR = {}\n", format_ratpoly(&split.p), split.r.display_in("s")),
                result: json!({ "separable": true, "norm": json::norm_split(&split) }),
            })
        }
        Command::Factor => {
            let mut f = factorize(&q)?;
            if options.canonical_order {
                f = canonicalize(&f);
            }
            let mut out = factorizations(&[f], options);
            out.result = out.result[0].take();
            Ok(out)
        }
        Command::Classes => {
            let classes = enumerate_classes(&q)?;
            let mut text = String::new();
            for (n, (sig, f)) in classes.iter().enumerate() {
                let _ = writeln!(text, "class {}: {}\n  {}", n + 1, sig, format_factorization(f));
            }
            let result = classes
                .iter()
                .map(|(sig, f)| json!({ "signature": json::signature(sig), "representative": json::factorization(f) }))
                .collect();
            Ok(Outcome {
                text,
                result: Value::Array(result),
            })
        }
        Command::All => {
            let mut all = all_factorizations(&q)?;
            if options.canonical_order {
                all.sort_by_cached_key(|f| (f.signature(), f.clone()));
            }
            Ok(factorizations(&all, options))
        }
        Command::Rulings => {
            let report = rulings_report(&q)?;
            let mut text = format!(
                "{:<24} {:<6} {:<5} {:<5} {:>6} {:>4}\n",
                "quadratic", "kind", "left", "right", "lambda", "rho"
            );
            let yes_no = |b: bool| if b { "yes" } else { "no" };
            for (m, c) in &report.rows {
                let kind = match c.kind {
                    SpanKind::Line => "line",
                    SpanKind::Point => "point",
                };
                let _ = writeln!(
                    text,
                    "{:<24} {:<6} {:<5} {:<5} {:>6} {:>4}",
                    format_ratpoly(m),
                    kind,
                    yes_no(c.on_left_ruling),
                    yes_no(c.on_right_ruling),
                    c.lambda,
                    c.rho
                );
            }
            let _ = writeln!(
                text,
                "#A = {}, #B = {}, deg P = {}\n{}",
                report.a_count,
                report.b_count,
                report.p_degree,
                if report.is_unique() { "UNIQUE" } else { "NOT UNIQUE" }
            );
            Ok(Outcome {
                text,
                result: json::rulings(&report),
            })
        }
        Command::Expand => unreachable!("handled above"),
    }
}

fn factorizations(list: &[Factorization], options: Options) -> Outcome {
    let mut text = String::new();
    let mut result = Vec::new();
    for f in list {
        let mut v = json::factorization(f);
        if options.show_signatures {
            let sig = f.signature();
            let _ = write!(text, "{sig}  ");
            v["signature"] = json::signature(&sig);
        }
        let _ = writeln!(text, "{}", format_factorization(f));
        result.push(v);
    }
    Outcome {
        text,
        result: Value::Array(result),
    }
}

fn format_univariate(f: &UnivariateFactorization) -> String {
    let mut parts = Vec::new();
    if f.prefactor != crate::algebra::Quat::one() {
        parts.push(format!("({})", format_quat(&f.prefactor)));
    }
    if !f.real_content.is_one() {
        parts.push(format!("({})", format_ratpoly(&f.real_content)));
    }
    parts.extend(f.roots.iter().map(|h| format!("({})", format_qpoly(&QPoly::linear(h)))));
    if parts.is_empty() {
        parts.push("1".into());
    }
    parts.join("*")
}

fn univariate(command: Command, p: &QPoly, _options: Options) -> Result<Outcome> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let all = all_univariate_factorizations(p)?;
    let chosen: Vec<&UnivariateFactorization> = match command {
        Command::Factor => all.iter().take(1).collect(),
        _ => all.iter().collect(),
    };
    let text = chosen.iter().map(|f| format_univariate(f) + "\n").collect();
    let values: Vec<Value> = chosen.iter().map(|f| json::univariate_factorization(f)).collect();
    let result = match command {
        Command::Factor => values.into_iter().next().ok_or(Error::NoRightFactor)?,
        _ => Value::Array(values),
    };
    Ok(Outcome { text, result })
}

fn expand(p: &Evaluated) -> Outcome {
    match p {
        Evaluated::Univariate(p) => Outcome {
            text: format!("{}\n", format_qpoly(p)),
            result: json!({ "q": json::qpoly(p) }),
        },
        Evaluated::StarOne(q) => Outcome {
            text: format!("{}\n", format_star_one(q)),
            result: json::star_one(q),
        },
    }
}
