//! Subcommand implementations. Each produces compact JSON and a
//! human-readable summary; `main` prints one of them.

use serde::Serialize;
use sipoly::classify::{classify, dual_transform, ClassificationReport};
use sipoly::minors::hankel_minors;
use sipoly::minors::{hurwitz_matrix, hurwitz_minors, total_nonnegativity_scan, TnVerdict};
use sipoly::oracle::{strange_experiment, StrangeCounts, StrangeReport};
use sipoly::polyalg::{associated_function, laurent_expand};
use sipoly::rational::format_rational;
use sipoly::simatrix::{
    anti_tridiagonal_conditions, char_poly, class_n_plus_check, flip, is_totally_nonnegative,
    satisfies_entries_condition, si_spectrum_form, signature_scan, AntiTridiagonalConditions,
    SignatureVerdict, SpectrumForm, MAX_SCAN_DIM,
};
use sipoly::stieltjes::{polynomial_cf, PolynomialCF, StieltjesCF};
use sipoly::{ExactMatrix, Polynomial, Q};

use crate::args::{Cli, Command, MatrixAction};
use crate::error::{CliError, CliResult};
use crate::{matrix_spec, sweep};

/// Rendered result of a command.
pub struct Output {
    pub json: String,
    pub summary: String,
}

fn output<T: Serialize>(value: &T, summary: String) -> CliResult<Output> {
    let json = serde_json::to_string(value)
        .map_err(|e| CliError::Domain(format!("cannot serialize the result: {e}")))?;
    Ok(Output { json, summary })
}

fn rationals(v: &[Q]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn joined(v: &[Q]) -> String {
    rationals(v).join(", ")
}

fn parse_poly(text: &str) -> CliResult<Polynomial> {
    let p = Polynomial::parse(text)?;
    if p.is_zero() {
        return Err(CliError::Domain(
            "the zero polynomial is not accepted".into(),
        ));
    }
    Ok(p)
}

/// Dispatches the parsed command line.
pub fn run(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Classify { coeffs } => run_classify(&parse_poly(coeffs)?),
        Command::Minors { coeffs } => run_minors(&parse_poly(coeffs)?, cli.max_order),
        Command::Cf { coeffs } => run_cf(&parse_poly(coeffs)?),
        Command::Dual { coeffs } => run_dual(&parse_poly(coeffs)?),
        Command::Matrix { action } => match action {
            MatrixAction::Build { spec } => run_matrix_build(spec, cli.seed),
            MatrixAction::Check { spec } => run_matrix_check(spec, cli.max_order),
        },
        Command::Strange { coeffs } => run_strange(&parse_poly(coeffs)?),
        Command::Sweep { file } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", file.display())))?;
            let report = sweep::run(&sweep::parse(&text)?);
            output(&report, sweep::summary(&report))
        }
    }
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

fn classify_summary(p: &Polynomial, r: &ClassificationReport) -> String {
    let mut head = format!("{p}: {}", r.label);
    if let Some(t) = r.si_type {
        head.push_str(&format!(" (type {t:?})"));
    }
    let mut lines = vec![head];
    if let Some(k) = r.order_k {
        lines.push(format!("order k = {k}"));
    }
    if let Some(m) = r.degeneracy_m {
        lines.push(format!("degeneracy index m = {m}"));
    }
    let c = &r.certificates;
    lines.push(format!("Hurwitz determinants: {}", joined(&c.delta)));
    lines.push(match &c.failed_gate {
        None => "generalized Hurwitz gate passed".into(),
        Some(g) => format!("generalized Hurwitz gate failed at {g}"),
    });
    lines.join("\n")
}

fn run_classify(p: &Polynomial) -> CliResult<Output> {
    let report = classify(p);
    output(&report, classify_summary(p, &report))
}

// ---------------------------------------------------------------------------
// minors
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct HankelTable {
    /// Order of the tables, `⌊n/2⌋`.
    r: usize,
    d: Vec<String>,
    dhat: Vec<String>,
}

#[derive(Serialize)]
struct TnScan {
    max_order: usize,
    totally_nonnegative: bool,
    /// First negative minor (0-based index sets) when the scan fails.
    violation: Option<TnViolation>,
}

#[derive(Serialize)]
struct TnViolation {
    rows: Vec<usize>,
    cols: Vec<usize>,
    value: String,
}

#[derive(Serialize)]
struct MinorsReport {
    degree: usize,
    delta: Vec<String>,
    eta: Vec<String>,
    /// Hankel minors of the associated function, `null` when it does not
    /// exist.
    hankel: Option<HankelTable>,
    hankel_error: Option<String>,
    hurwitz_matrix_scan: TnScan,
}

fn hankel_table(p: &Polynomial) -> Result<HankelTable, sipoly::Error> {
    let r = p.deg() / 2;
    let phi = associated_function(p)?;
    let series = laurent_expand(&phi, r)?;
    let m = hankel_minors(&series, r)?;
    Ok(HankelTable {
        r,
        d: rationals(&m.d),
        dhat: rationals(&m.dhat),
    })
}

fn run_minors(p: &Polynomial, max_order: Option<usize>) -> CliResult<Output> {
    let n = p.deg();
    let hm = hurwitz_minors(p)?;
    let (hankel, hankel_error) = match hankel_table(p) {
        Ok(t) => (Some(t), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let max_order = max_order.unwrap_or(n).min(n);
    let scan = match total_nonnegativity_scan(&hurwitz_matrix(p), max_order) {
        TnVerdict::TotallyNonnegative => TnScan {
            max_order,
            totally_nonnegative: true,
            violation: None,
        },
        TnVerdict::Violation { rows, cols, value } => TnScan {
            max_order,
            totally_nonnegative: false,
            violation: Some(TnViolation {
                rows,
                cols,
                value: format_rational(&value),
            }),
        },
    };
    let report = MinorsReport {
        degree: n,
        delta: rationals(&hm.delta),
        eta: rationals(&hm.eta),
        hankel,
        hankel_error,
        hurwitz_matrix_scan: scan,
    };
    let mut lines = vec![
        format!("{p} (degree {n})"),
        format!("Δ: {}", report.delta.join(", ")),
        format!("η: {}", report.eta.join(", ")),
    ];
    match (&report.hankel, &report.hankel_error) {
        (Some(h), _) => {
            lines.push(format!("D: {}", h.d.join(", ")));
            lines.push(format!("D̂: {}", h.dhat.join(", ")));
        }
        (None, Some(e)) => lines.push(format!("Hankel minors unavailable: {e}")),
        (None, None) => {}
    }
    lines.push(format!(
        "Hurwitz matrix minors up to order {max_order}: {}",
        if report.hurwitz_matrix_scan.totally_nonnegative {
            "all nonnegative"
        } else {
            "a negative minor exists"
        }
    ));
    output(&report, lines.join("\n"))
}

// ---------------------------------------------------------------------------
// cf, dual, strange
// ---------------------------------------------------------------------------

fn cf_summary(cf: &StieltjesCF) -> String {
    format!(
        "c0 = {}; c = [{}]; {} tail",
        format_rational(&cf.c0),
        joined(&cf.c),
        match cf.tail {
            sipoly::Tail::Even => "even",
            sipoly::Tail::Odd => "odd",
        }
    )
}

fn run_cf(p: &Polynomial) -> CliResult<Output> {
    let cf = polynomial_cf(p)?;
    let summary = match &cf {
        PolynomialCF::Plain(c) => cf_summary(c),
        PolynomialCF::Extended(e) => format!(
            "c_-1 = {}; {}",
            format_rational(&e.c_minus1),
            cf_summary(&e.inner)
        ),
    };
    output(&cf, summary)
}

fn run_dual(p: &Polynomial) -> CliResult<Output> {
    let d = dual_transform(p).to_string();
    output(&d, d.clone())
}

fn strange_line(name: &str, c: &StrangeCounts) -> String {
    format!(
        "{name}: {} right, {} left, {} on the axis; counts {}, interlacing {}",
        c.rhp,
        c.lhp,
        c.imaginary_axis,
        if c.counts_hold { "hold" } else { "fail" },
        if c.interlacing_holds {
            "holds"
        } else {
            "fails"
        }
    )
}

fn run_strange(p: &Polynomial) -> CliResult<Output> {
    let rep: StrangeReport = strange_experiment(p)?;
    let summary = [
        format!("degree {}", rep.degree),
        strange_line("p0(-z^2) + z p1(z^2)", &rep.q),
        strange_line("p0(z^2) + z p1(-z^2)", &rep.companion),
    ]
    .join("\n");
    output(&rep, summary)
}

// ---------------------------------------------------------------------------
// matrix
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct BuildReport {
    kind: &'static str,
    matrix: ExactMatrix,
    /// The matrix the result was flipped from, when there is one.
    source: Option<ExactMatrix>,
    char_poly: Polynomial,
}

fn rows_summary(m: &ExactMatrix) -> String {
    m.to_rows()
        .iter()
        .map(|r| format!("  [{}]", joined(r)))
        .collect::<Vec<_>>()
        .join("\n")
}

fn run_matrix_build(spec: &str, seed: u64) -> CliResult<Output> {
    let b = matrix_spec::build(spec, seed)?;
    let report = BuildReport {
        kind: b.kind,
        char_poly: char_poly(&b.matrix)?,
        matrix: b.matrix,
        source: b.source,
    };
    let summary = format!(
        "{}:\n{}\ncharacteristic polynomial: {}",
        report.kind,
        rows_summary(&report.matrix),
        report.char_poly
    );
    output(&report, summary)
}

#[derive(Serialize)]
struct CheckReport {
    dimension: usize,
    char_poly: Polynomial,
    /// Ordering of a self-interlacing spectrum, `null` when the spectrum is
    /// not self-interlacing.
    spectrum_form: Option<SpectrumForm>,
    self_interlacing_spectrum: bool,
    /// Minor signs per order (`null` beyond the scan limit).
    signature: Option<SignatureVerdict>,
    signature_max_order: Option<usize>,
    /// The signs are `(-1)^{k(k-1)/2}`: the matrix is `J A` for a
    /// nonsingular totally nonnegative `A`.
    flip_pattern: Option<bool>,
    /// Sign definite of class n⁺ (checked only for sign-definite input).
    class_n_plus: Option<bool>,
    totally_nonnegative: Option<bool>,
    /// For a flipped matrix `J A`: `A` satisfies the entry condition.
    entries_condition_of_flip: Option<bool>,
    /// Corner-minor and flipped leading-minor conditions, for
    /// anti-tridiagonal input with positive band entries.
    anti_tridiagonal: Option<AntiTridiagonalConditions>,
}

fn run_matrix_check(spec: &str, max_order: Option<usize>) -> CliResult<Output> {
    // A ragged or empty row list is malformed input, not a domain error.
    let m = ExactMatrix::parse(spec).map_err(|e| match e {
        sipoly::Error::InvalidMatrix(m) => CliError::Input(format!("malformed matrix: {m}")),
        e => e.into(),
    })?;
    if !m.is_square() {
        return Err(CliError::Domain(format!(
            "expected a square matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    let n = m.nrows();
    let form = si_spectrum_form(&m)?;
    let scannable = n <= MAX_SCAN_DIM;
    let order = max_order.unwrap_or(n).clamp(1, n);
    let signature = if scannable {
        Some(signature_scan(&m, order)?)
    } else {
        None
    };
    let flip_pattern = signature.as_ref().map(|s| {
        s.sequence()
            .is_some_and(|seq| seq.eps.len() == n && seq.matches_flip_pattern())
    });
    let sign_definite_full = signature
        .as_ref()
        .and_then(SignatureVerdict::sequence)
        .is_some_and(|seq| seq.eps.len() == n && seq.eps.iter().all(Option::is_some));
    let class_n_plus = if sign_definite_full {
        Some(class_n_plus_check(&m)?)
    } else {
        None
    };
    let flipped_back = flip(n).mul(&m);
    let entries_condition_of_flip = if flip_pattern == Some(true) {
        Some(satisfies_entries_condition(&flipped_back)?)
    } else {
        None
    };
    let report = CheckReport {
        dimension: n,
        char_poly: char_poly(&m)?,
        spectrum_form: form,
        self_interlacing_spectrum: form.is_some(),
        signature_max_order: scannable.then_some(order),
        signature,
        flip_pattern,
        class_n_plus,
        totally_nonnegative: if scannable {
            Some(is_totally_nonnegative(&m)?)
        } else {
            None
        },
        entries_condition_of_flip,
        anti_tridiagonal: anti_tridiagonal_conditions(&m).ok(),
    };
    let yes_no = |b: Option<bool>| match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "not checked",
    };
    let summary = [
        format!("{n}x{n} matrix:\n{}", rows_summary(&m)),
        format!("characteristic polynomial: {}", report.char_poly),
        format!(
            "self-interlacing spectrum: {}",
            match form {
                Some(SpectrumForm::PositiveLeading) => "yes, positive eigenvalue leading",
                Some(SpectrumForm::NegativeLeading) => "yes, negative eigenvalue leading",
                None => "no",
            }
        ),
        format!(
            "flipped totally nonnegative signs: {}",
            yes_no(flip_pattern)
        ),
        format!("class n⁺: {}", yes_no(class_n_plus)),
        format!(
            "totally nonnegative: {}",
            yes_no(report.totally_nonnegative)
        ),
    ]
    .join("\n");
    output(&report, summary)
}
