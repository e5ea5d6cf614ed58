//! Parameter sweeps: classification of samples `p(z, alpha_i)` and order
//! changes between consecutive samples.

use num::Zero;
use serde::Serialize;
use sipoly::classify::generalized_hurwitz_order;
use sipoly::rational::{format_rational, parse_rational};
use sipoly::{classify, ClassificationReport, Polynomial, Q};

use crate::error::{CliError, CliResult};

/// One sample of the path.
pub struct Sample {
    pub alpha: Q,
    pub p: Polynomial,
}

/// Parses `alpha;c0,c1,...,cn` lines; blank lines and `#` comments are
/// skipped. All samples must share one degree.
pub fn parse(text: &str) -> CliResult<Vec<Sample>> {
    let mut samples: Vec<Sample> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let at = |msg: String| format!("line {}: {msg}", i + 1);
        let (alpha, coeffs) = line
            .split_once(';')
            .ok_or_else(|| CliError::Input(at("expected 'alpha;c0,c1,...,cn'".into())))?;
        let alpha = parse_rational(alpha).map_err(|e| CliError::Input(at(e.to_string())))?;
        let p = Polynomial::parse(coeffs).map_err(|e| CliError::Input(at(e.to_string())))?;
        if p.is_zero() {
            return Err(CliError::Domain(at(
                "the zero polynomial has no degree".into()
            )));
        }
        if let Some(first) = samples.first() {
            if first.p.deg() != p.deg() {
                return Err(CliError::Domain(at(format!(
                    "degree {} differs from the first sample's degree {}",
                    p.deg(),
                    first.p.deg()
                ))));
            }
        }
        samples.push(Sample { alpha, p });
    }
    if samples.is_empty() {
        return Err(CliError::Input("the sweep file has no samples".into()));
    }
    Ok(samples)
}

/// Per-sample output.
#[derive(Serialize)]
pub struct SampleReport {
    alpha: String,
    coeffs: Polynomial,
    /// Generalized Hurwitz order of `p(z, alpha)` itself (`null` when the
    /// determinant gate fails).
    order_k: Option<usize>,
    constant_term_zero: bool,
    report: ClassificationReport,
}

/// An order change between consecutive samples.
#[derive(Serialize)]
pub struct Transition {
    from_alpha: String,
    to_alpha: String,
    from_k: Option<usize>,
    to_k: Option<usize>,
    /// Either endpoint has `p(0, alpha) = 0`, the expected way for a simple
    /// zero to cross the imaginary axis. Not asserted: sampling may skip
    /// the crossing.
    at_zero_constant: bool,
}

/// Output of `sweep`.
#[derive(Serialize)]
pub struct SweepReport {
    pub samples: Vec<SampleReport>,
    pub transitions: Vec<Transition>,
    /// Every sample passes the generalized Hurwitz gate.
    pub all_generalized: bool,
    /// Order never decreases along the path (`null` unless every sample is
    /// generalized Hurwitz).
    pub order_non_decreasing: Option<bool>,
}

/// Classifies every sample and flags order changes.
pub fn run(samples: &[Sample]) -> SweepReport {
    let reports: Vec<SampleReport> = samples
        .iter()
        .map(|s| SampleReport {
            alpha: format_rational(&s.alpha),
            coeffs: s.p.clone(),
            order_k: generalized_hurwitz_order(&s.p),
            constant_term_zero: s.p.constant_term().is_zero(),
            report: classify(&s.p),
        })
        .collect();
    let transitions = reports
        .windows(2)
        .filter(|w| w[0].order_k != w[1].order_k)
        .map(|w| Transition {
            from_alpha: w[0].alpha.clone(),
            to_alpha: w[1].alpha.clone(),
            from_k: w[0].order_k,
            to_k: w[1].order_k,
            at_zero_constant: w[0].constant_term_zero || w[1].constant_term_zero,
        })
        .collect();
    let all_generalized = reports.iter().all(|r| r.order_k.is_some());
    let order_non_decreasing =
        all_generalized.then(|| reports.windows(2).all(|w| w[0].order_k <= w[1].order_k));
    SweepReport {
        samples: reports,
        transitions,
        all_generalized,
        order_non_decreasing,
    }
}

/// Human-readable summary.
pub fn summary(r: &SweepReport) -> String {
    let mut lines: Vec<String> = r
        .samples
        .iter()
        .map(|s| {
            format!(
                "alpha = {}: {} ({}), k = {}",
                s.alpha,
                s.coeffs,
                s.report.label,
                s.order_k.map_or("-".into(), |k| k.to_string())
            )
        })
        .collect();
    for t in &r.transitions {
        let k = |k: Option<usize>| k.map_or("-".into(), |k| k.to_string());
        lines.push(format!(
            "order change {} -> {} between alpha = {} and {}{}",
            k(t.from_k),
            k(t.to_k),
            t.from_alpha,
            t.to_alpha,
            if t.at_zero_constant {
                " (p(0) = 0 at an endpoint)"
            } else {
                ""
            }
        ));
    }
    lines.push(match r.order_non_decreasing {
        Some(true) => "order is non-decreasing along the path".into(),
        Some(false) => "order decreases somewhere along the path".into(),
        None => "some samples are not generalized Hurwitz".into(),
    });
    lines.join("\n")
}
