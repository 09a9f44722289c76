use serde_json::{json, Value};
use wmfock_core::algebra::{rational_string, serialize_rationals, BigRational, DensePolynomial};
use wmfock_core::moments::{moment_polynomial, moments_general, monotone_cumulants, MomentTable};
use wmfock_core::orthopoly::{jacobi_from_moments, monic_orthogonal_polys};
use wmfock_core::partitions::EnumerationBound;
use wmfock_core::transforms::{density_curve, endpoint_bounds_check, endpoint_f64, EndpointBoundsReport};
use wmfock_core::{DensityCurve, Error, VerificationReport};

use crate::cli::{Cli, Command, Format, VerifyTarget};
use crate::{svg, verify};

/// Relative accuracy of the floating-point endpoint approximations.
const ENDPOINT_TOLERANCE: f64 = 1e-12;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(msg) => f.write_str(msg),
            Failure::Library(e) => write!(f, "{e}"),
        }
    }
}

/// What a subcommand produced: the artifact, an optional diagnostic and
/// whether its checks passed.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: Option<String>,
    pub passed: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: None, passed: true }
    }
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn csv_table<I, R>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 input")
}

fn reject_svg(format: Format, what: &str) -> Result<(), Failure> {
    if format == Format::Svg {
        return Err(Failure::Usage(format!("{what} has no SVG rendering; use csv or json")));
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let f = cli.format;
    match &cli.command {
        Command::Moments { m, n } => {
            reject_svg(f, "moments")?;
            moments(*m as usize, *n, f)
        }
        Command::Cumulants { k } => {
            reject_svg(f, "cumulants")?;
            cumulants(*k, f)
        }
        Command::Poly { n } => {
            reject_svg(f, "poly")?;
            poly(*n, f)
        }
        Command::Density { m, x_min, x_max, samples } => {
            let m = *m as usize;
            let reach = endpoint_f64(m) + 0.5;
            let curve =
                sample_density(m, x_min.unwrap_or(-reach), x_max.unwrap_or(reach), *samples, cli.ladder_tolerance)?;
            Ok(density(&curve, cli.ladder_tolerance, f))
        }
        Command::Support { m_max } => {
            reject_svg(f, "support")?;
            let report = endpoint_bounds_check(*m_max as usize).map_err(Error::from)?;
            Ok(support(&report, f))
        }
        Command::Orthopoly { m, order } => {
            reject_svg(f, "orthopoly")?;
            orthopoly(*m as usize, *order, f)
        }
        Command::Verify { target, trials } => {
            reject_svg(f, "verify")?;
            let settings = verify::Settings {
                seed: cli.seed,
                trials: *trials,
                bound: EnumerationBound(cli.enum_bound),
                ladder_tolerance: cli.ladder_tolerance,
            };
            let report = verify::run(*target, &settings)?;
            Ok(verification(*target, cli.seed, &report, f))
        }
        Command::Plot { m, samples, .. } => {
            let m = *m as usize;
            let reach = endpoint_f64(m) + 0.25;
            let curve = sample_density(m, -reach, reach, *samples, cli.ladder_tolerance)?;
            Ok(Outcome::ok(svg::render(&curve)))
        }
    }
}

fn sample_density(m: usize, x_min: f64, x_max: f64, samples: usize, tolerance: f64) -> Result<DensityCurve, Failure> {
    let mut curve = density_curve(m, x_min, x_max, samples).map_err(Error::from)?;
    for s in &mut curve.samples {
        s.converged = s.residual <= tolerance;
    }
    Ok(curve)
}

fn moments(m: usize, n: usize, f: Format) -> Result<Outcome, Failure> {
    let row = moments_general(m, n).map_err(Error::from)?;
    let values: Vec<String> = row.iter().map(ToString::to_string).collect();
    Ok(Outcome::ok(match f {
        Format::Json => to_json(&json!({ "m": m, "n": n, "moments": values })),
        _ => format!("{}\n", values.join(",")),
    }))
}

fn cumulants(k: usize, f: Format) -> Result<Outcome, Failure> {
    let seq = monotone_cumulants(k).map_err(Error::from)?;
    Ok(Outcome::ok(match f {
        Format::Json => to_json(&json!({ "cumulants": seq.entries().collect::<Vec<_>>() })),
        _ => csv_table(&["k", "r_k"], seq.entries().map(|e| [e.k.to_string(), rational_string(&e.value)])),
    }))
}

fn coefficient_strings(p: &DensePolynomial) -> Vec<String> {
    p.coeffs().iter().map(rational_string).collect()
}

fn poly(n: usize, f: Format) -> Result<Outcome, Failure> {
    let p = moment_polynomial(n).map_err(Error::from)?;
    let coeffs = coefficient_strings(&p.poly);
    Ok(Outcome::ok(match f {
        Format::Json => to_json(&json!({
            "n": n,
            "coefficients": coeffs,
            "polynomial": p.poly.display_with("m"),
            "cumulant": rational_string(&p.linear_coefficient()),
        })),
        _ => csv_table(&["power", "coefficient"], coeffs.iter().enumerate().map(|(k, c)| [k.to_string(), c.clone()])),
    }))
}

fn density(curve: &DensityCurve, tolerance: f64, f: Format) -> Outcome {
    let flagged = curve.unconverged().count();
    let stderr = (flagged > 0).then(|| {
        format!("warning: {flagged} of {} samples did not converge (residual above {tolerance:e})", curve.samples.len())
    });
    let stdout = match f {
        Format::Svg => svg::render(curve),
        Format::Json => to_json(&json!({ "m": curve.m, "tolerance": tolerance, "samples": curve.samples })),
        Format::Csv => csv_table(
            &["x", "g", "residual", "converged"],
            curve
                .samples
                .iter()
                .map(|s| [s.x.to_string(), s.g.to_string(), format!("{:e}", s.residual), s.converged.to_string()]),
        ),
    };
    Outcome { stdout, stderr, passed: true }
}

fn support(report: &EndpointBoundsReport, f: Format) -> Outcome {
    let passed = report.all_passed();
    let stdout = match f {
        Format::Json => to_json(&json!({
            "approx_relative_tolerance": ENDPOINT_TOLERANCE,
            "limit_gap": report.limit_gap,
            "passed": passed,
            "rows": report.rows,
        })),
        _ => {
            let opt = |b: Option<bool>| b.map_or_else(String::new, |b| b.to_string());
            csv_table(
                &["m", "a_m", "approx", "lower_bound", "upper_bound", "ratio_bound", "increasing", "scaled_decreasing"],
                report.rows.iter().map(|r| {
                    [
                        r.m.to_string(),
                        r.exact.clone().unwrap_or_default(),
                        r.approx.to_string(),
                        opt(r.lower_bound),
                        opt(r.upper_bound),
                        r.ratio_bound.to_string(),
                        r.increasing.to_string(),
                        r.scaled_decreasing.to_string(),
                    ]
                }),
            )
        }
    };
    let stderr = (!passed).then(|| "endpoint bound check failed".to_string());
    Outcome { stdout, stderr, passed }
}

fn orthopoly(m: usize, order: usize, f: Format) -> Result<Outcome, Failure> {
    let mut table = MomentTable::new();
    let moments = table.raw_moments(m, 2 * order);
    let jc = jacobi_from_moments(&moments, order).map_err(Error::from)?;
    let polys = monic_orthogonal_polys(&jc, order).map_err(Error::from)?;
    Ok(Outcome::ok(match f {
        Format::Json => {
            #[derive(serde::Serialize)]
            struct Entry<'a> {
                n: usize,
                #[serde(serialize_with = "serialize_rationals")]
                coefficients: &'a [BigRational],
                polynomial: String,
            }
            let entries: Vec<Entry> = polys
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, p)| Entry { n, coefficients: p.coeffs(), polynomial: p.to_string() })
                .collect();
            let beta: Vec<String> = jc.beta.iter().map(rational_string).collect();
            to_json(&json!({ "m": m, "order": order, "beta": beta, "polynomials": entries }))
        }
        _ => csv_table(
            &["n", "beta_n", "p_n"],
            (1..=order).map(|n| [n.to_string(), rational_string(&jc.beta[n - 1]), polys[n].to_string()]),
        ),
    }))
}

fn verification(target: VerifyTarget, seed: u64, report: &VerificationReport, f: Format) -> Outcome {
    let passed = report.all_passed();
    let stdout = match f {
        Format::Json => to_json(&json!({ "target": target.name(), "seed": seed, "passed": passed, "checks": report })),
        _ => {
            let float = |v: Option<f64>| v.map_or_else(String::new, |v| format!("{v:e}"));
            csv_table(
                &["identity", "status", "cases", "max_residual", "tolerance", "witness"],
                report.checks.iter().map(|c| {
                    [
                        c.identity.clone(),
                        if c.passed() { "pass" } else { "fail" }.to_string(),
                        c.cases.to_string(),
                        float(c.max_residual),
                        float(c.tolerance),
                        c.witness.clone().unwrap_or_default(),
                    ]
                }),
            )
        }
    };
    let stderr = (!passed).then(|| {
        let failures: Vec<_> = report.failures().collect();
        to_json(&json!({ "target": target.name(), "seed": seed, "failures": failures }))
    });
    Outcome { stdout, stderr, passed }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn run_args(args: &[&str]) -> Outcome {
        let cli = Cli::try_parse_from(std::iter::once("wmfock").chain(args.iter().copied())).unwrap();
        run(&cli).unwrap()
    }

    #[test]
    fn moments_csv_row() {
        let out = run_args(&["moments", "--m", "2", "--n", "8"]);
        assert_eq!(out.stdout, "1,2,7,29,131,625,3099,15818,82595\n");
    }

    #[test]
    fn support_lists_exact_endpoints() {
        let out = run_args(&["support", "--m-max", "3"]);
        let lines: Vec<&str> = out.stdout.lines().collect();
        assert!(lines[1].starts_with("1,2,2,"));
        assert!(lines[2].starts_with("2,5/2,2.5,"));
        assert!(lines[3].starts_with("3,29/10,2.9,true,true,true,true,true"));
        assert!(out.passed);
    }

    #[test]
    fn cumulants_json_uses_rational_strings() {
        let out = run_args(&["cumulants", "--k", "4", "--format", "json"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["cumulants"][3]["value"], "1/2");
    }

    #[test]
    fn poly_reports_cumulant() {
        let out = run_args(&["poly", "--n", "4", "--format", "json"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["cumulant"], "7/12");
        assert_eq!(v["coefficients"][4], "35/8");
    }

    #[test]
    fn svg_rejected_for_tables() {
        let cli = Cli::try_parse_from(["wmfock", "moments", "--m", "2", "--n", "3", "--format", "svg"]).unwrap();
        assert!(matches!(run(&cli), Err(Failure::Usage(_))));
    }

    #[test]
    fn orthopoly_csv() {
        let out = run_args(&["orthopoly", "--m", "2", "--order", "3"]);
        let lines: Vec<&str> = out.stdout.lines().collect();
        assert_eq!(lines[1], "1,2,x");
        assert_eq!(lines[2], "2,3/2,x^2 - 2");
        assert_eq!(lines[3], "3,3/2,x^3 - 7/2 x");
    }
}
