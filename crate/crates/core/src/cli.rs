//! Command-line front end.
//!
//! Subcommands: `decompose`, `lens`, `reps`, `invariants`, `classify-conic`,
//! `assemble`, `validate-surface`, `torus-quotient`. Structured input is
//! JSON, given inline, via `--input <path>`, or on stdin with `--input -`.
//! Output is JSON by default (`--format text` mirrors the usual notation,
//! `L_{p,q}`, `R_{a,m}`). Exit codes: 0 success, 1 malformed input,
//! 2 validation violations.

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::json;

use crate::assembler::{assemble, validate_surface, FibrationDescriptor, SurfaceComponentDescriptor};
use crate::conics::{
    classify_conic, classify_family_over_point, discriminant_polynomial, ConicClass, ConicFamily,
    ConicForm,
};
use crate::invariant_rings::{cover_degree_tower, generator_xn, generator_yn, verify_relation};
use crate::lens::{canonicalize_lens, h1_order};
use crate::reps::{decompose_tensor, invariant_quadrics, RealIrrep, RepMultiset};
use crate::surgery::{decompose, h1_of_manifold_type, SurgeryProblem};
use crate::{catalog, Error};

const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(
    name = "conic-topology",
    about = "Exact surgery calculus, representation tables and conic classification",
    disable_help_subcommand = true
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Tolerance for numeric verification passes, in (0, 1e-3].
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Read the JSON document from this path ('-' for stdin).
    #[arg(long, global = true)]
    input: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Name the 3-manifold of a surgery problem.
    Decompose {
        /// Inline JSON surgery problem.
        json: Option<String>,
    },
    /// Canonicalize a lens space and report its homology order.
    #[command(allow_negative_numbers = true)]
    Lens { p: i64, q: i64 },
    /// Representation tables for the cyclic group of order m.
    #[command(allow_negative_numbers = true)]
    Reps {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
    },
    /// Rotation-invariant generators and their relation.
    Invariants { n: u32 },
    /// Classify a conic (nine rationals, row-major symmetric matrix) or a
    /// polynomial family (--family).
    #[command(allow_negative_numbers = true)]
    ClassifyConic {
        /// Nine rational entries, row-major.
        entries: Vec<String>,
        /// Nine comma-separated polynomials in s, t, row-major.
        #[arg(long, conflicts_with = "entries")]
        family: Option<String>,
        /// Evaluation point "s,t" for family classification.
        #[arg(long, requires = "family")]
        at: Option<String>,
    },
    /// Assemble a fibration descriptor into per-component manifold types.
    Assemble {
        /// Inline JSON fibration descriptor.
        json: Option<String>,
    },
    /// Validate a base-surface component against the singular-point rules.
    ValidateSurface {
        /// Inline JSON surface component descriptor.
        json: Option<String>,
    },
    /// Seifert data of a finite-order torus action (matrix row-major).
    #[command(allow_negative_numbers = true)]
    TorusQuotient { a: i64, b: i64, c: i64, d: i64 },
}

/// Outcome of a CLI invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn ok(stdout: String) -> RunOutcome {
    RunOutcome {
        exit_code: 0,
        stdout,
        stderr: String::new(),
    }
}

fn violations_outcome(stdout: String) -> RunOutcome {
    RunOutcome {
        exit_code: 2,
        stdout,
        stderr: String::new(),
    }
}

fn fail(message: String) -> RunOutcome {
    RunOutcome {
        exit_code: 1,
        stdout: String::new(),
        stderr: message,
    }
}

/// Run the CLI against the given argument list (`argv[0]` included).
pub fn run<I, S>(args: I) -> RunOutcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders both --help and usage errors; --help is success
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                fail(rendered)
            } else {
                ok(rendered)
            };
        }
    };

    let tolerance = cli.tolerance.unwrap_or(DEFAULT_TOLERANCE);
    if !(tolerance > 0.0 && tolerance <= 1e-3) {
        return fail(format!(
            "error: tolerance must lie in (0, 1e-3], got {tolerance}\n"
        ));
    }

    match dispatch(&cli, tolerance) {
        Ok(outcome) => outcome,
        Err(e) => fail(format!("error: {e}\n")),
    }
}

fn dispatch(cli: &Cli, tolerance: f64) -> crate::Result<RunOutcome> {
    match &cli.command {
        Command::Decompose { json } => {
            let document = read_document(json.as_deref(), cli.input.as_deref())?;
            let problem: SurgeryProblem = serde_json::from_str(&document)
                .map_err(|e| Error::invalid(format!("bad surgery problem: {e}")))?;
            let manifold = decompose(&problem);
            let h1 = h1_of_manifold_type(&manifold)?;
            let out = match cli.format {
                Format::Json => {
                    let doc = json!({
                        "manifold": manifold,
                        "h1": h1,
                    });
                    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
                }
                Format::Text => format!("{manifold}\nH_1 = {h1}\n"),
            };
            Ok(ok(out))
        }

        Command::Lens { p, q } => {
            let l = canonicalize_lens(*p, *q)?;
            let out = match cli.format {
                Format::Json => {
                    let doc = json!({
                        "input": [p, q],
                        "canonical": [l.p(), l.q()],
                        "h1_order": h1_order(&l),
                    });
                    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
                }
                Format::Text => format!(
                    "L_{{{p},{q}}} = {l}   (H_1 order {})\n",
                    h1_order(&l)
                ),
            };
            Ok(ok(out))
        }

        Command::Reps { m, a, b } => {
            let tensor = decompose_tensor(*a, *b, *m)?;
            let quadrics = invariant_quadrics(*a, *m)?;
            let gap = numeric_character_gap(*a, *b, *m, &tensor);
            let out = match cli.format {
                Format::Json => {
                    let doc = json!({
                        "modulus": m,
                        "a": a,
                        "b": b,
                        "tensor_decomposition": multiset_json(&tensor),
                        "total_dimension": tensor.total_dimension(),
                        "invariant_quadrics": quadrics.invariants,
                        "character_check": {
                            "max_gap": gap,
                            "tolerance": tolerance,
                            "ok": gap <= tolerance,
                        },
                    });
                    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
                }
                Format::Text => {
                    let mut s = String::new();
                    s.push_str(&format!(
                        "R_{{{b},{m}}} (x) S^2(1 + R_{{{a},{m}}}) = {tensor}\n"
                    ));
                    s.push_str(&format!("total dimension: {}\n", tensor.total_dimension()));
                    s.push_str(&format!(
                        "invariant quadrics: {}\n",
                        quadrics.invariants.join(", ")
                    ));
                    s.push_str(&format!(
                        "character check: max gap {gap:.3e} (tolerance {tolerance:.1e}) {}\n",
                        if gap <= tolerance { "ok" } else { "FAILED" }
                    ));
                    s
                }
            };
            Ok(ok(out))
        }

        Command::Invariants { n } => {
            if *n == 0 {
                return Err(Error::invalid("n must be at least 1"));
            }
            let x = generator_xn(*n);
            let y = generator_yn(*n);
            let relation = verify_relation(*n);
            let tower = cover_degree_tower(*n);
            let out = match cli.format {
                Format::Json => {
                    let doc = json!({
                        "n": n,
                        "x_n": x.to_string(),
                        "y_n": y.to_string(),
                        "z": "s^2 + t^2",
                        "relation_holds": relation,
                        "cover_tower": tower,
                    });
                    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
                }
                Format::Text => {
                    let mut s = String::new();
                    s.push_str(&format!("x_{n} = {x}\n"));
                    s.push_str(&format!("y_{n} = {y}\n"));
                    s.push_str("z   = s^2 + t^2\n");
                    s.push_str(&format!(
                        "x_{n}^2 + y_{n}^2 - z^{n} = 0: {relation}\n"
                    ));
                    s.push_str("cover tower:\n");
                    for level in tower {
                        s.push_str(&format!("  degree {:>2}  {:?}\n", level.degree, level.kind));
                    }
                    s
                }
            };
            Ok(ok(out))
        }

        Command::ClassifyConic { entries, family, at } => {
            if let Some(family_entries) = family {
                let parts: Vec<&str> = family_entries.split(',').map(str::trim).collect();
                if parts.len() != 9 {
                    return Err(Error::invalid(format!(
                        "expected nine comma-separated polynomials, got {}",
                        parts.len()
                    )));
                }
                let arr: [&str; 9] = parts.try_into().expect("nine entries");
                let fam = ConicFamily::parse(&arr)?;
                let disc = discriminant_polynomial(&fam);
                let at_class = at
                    .as_deref()
                    .map(|point| -> crate::Result<(String, ConicClass)> {
                        let coords: Vec<&str> = point.split(',').map(str::trim).collect();
                        if coords.len() != 2 {
                            return Err(Error::invalid("expected a point \"s,t\""));
                        }
                        let s0 = parse_rational(coords[0])?;
                        let t0 = parse_rational(coords[1])?;
                        let class = classify_family_over_point(&fam, &s0, &t0)?;
                        Ok((point.to_string(), class))
                    })
                    .transpose()?;
                let out = match cli.format {
                    Format::Json => {
                        let mut doc = json!({ "discriminant": disc.to_string() });
                        if let Some((point, class)) = &at_class {
                            doc["at"] = json!({
                                "point": point,
                                "class": class,
                                "local_model": crate::conics::FiberLocalModel::for_fiber_class(*class),
                            });
                        }
                        serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
                    }
                    Format::Text => {
                        let mut s = format!("discriminant = {disc}\n");
                        if let Some((point, class)) = &at_class {
                            s.push_str(&format!("fiber over ({point}): {}\n", class_name(*class)));
                        }
                        s
                    }
                };
                return Ok(ok(out));
            }

            if entries.len() != 9 {
                return Err(Error::invalid(format!(
                    "expected nine rational entries, got {}",
                    entries.len()
                )));
            }
            let values: Vec<BigRational> = entries
                .iter()
                .map(|e| parse_rational(e))
                .collect::<crate::Result<_>>()?;
            let rows = [
                [values[0].clone(), values[1].clone(), values[2].clone()],
                [values[3].clone(), values[4].clone(), values[5].clone()],
                [values[6].clone(), values[7].clone(), values[8].clone()],
            ];
            let form = ConicForm::new(rows)?;
            let class = classify_conic(&form);
            let (pos, neg) = form.signature();
            let out = match cli.format {
                Format::Json => {
                    let doc = json!({
                        "class": class,
                        "rank": pos + neg,
                        "signature": [pos, neg],
                    });
                    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
                }
                Format::Text => format!(
                    "{} (rank {}, signature ({pos},{neg}))\n",
                    class_name(class),
                    pos + neg
                ),
            };
            Ok(ok(out))
        }

        Command::Assemble { json } => {
            let document = read_document(json.as_deref(), cli.input.as_deref())?;
            let descriptor: FibrationDescriptor = serde_json::from_str(&document)
                .map_err(|e| Error::invalid(format!("bad fibration descriptor: {e}")))?;
            let report = assemble(&descriptor)?;
            let out = match cli.format {
                Format::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
                Format::Text => {
                    let mut s = String::new();
                    if report.rp3_prefix > 0 || report.s1xs2_prefix > 0 {
                        s.push_str(&format!(
                            "prefix: {} RP^3, {} S^1 x S^2\n",
                            report.rp3_prefix, report.s1xs2_prefix
                        ));
                    }
                    for (i, comp) in report.components.iter().enumerate() {
                        s.push_str(&format!("component {i}: {}\n", comp.manifold));
                        for v in &comp.violations {
                            s.push_str(&format!("  violation [{}]: {}\n", v.rule, v.message));
                        }
                    }
                    for note in &report.notes {
                        s.push_str(&format!("note: {note}\n"));
                    }
                    s
                }
            };
            Ok(if report.has_violations() {
                violations_outcome(out)
            } else {
                ok(out)
            })
        }

        Command::ValidateSurface { json } => {
            let document = read_document(json.as_deref(), cli.input.as_deref())?;
            let descriptor: SurfaceComponentDescriptor = serde_json::from_str(&document)
                .map_err(|e| Error::invalid(format!("bad surface descriptor: {e}")))?;
            let violations = validate_surface(&descriptor);
            let out = match cli.format {
                Format::Json => {
                    let doc = json!({ "violations": violations });
                    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
                }
                Format::Text => {
                    if violations.is_empty() {
                        "no violations\n".to_string()
                    } else {
                        violations
                            .iter()
                            .map(|v| format!("violation [{}]: {}\n", v.rule, v.message))
                            .collect()
                    }
                }
            };
            Ok(if violations.is_empty() {
                ok(out)
            } else {
                violations_outcome(out)
            })
        }

        Command::TorusQuotient { a, b, c, d } => {
            let action = catalog::TorusAction::new([[*a, *b], [*c, *d]])?;
            let mut multiplicities = catalog::torus_quotient_seifert_data(&action)?;
            multiplicities.sort_unstable();
            let chi = catalog::orbifold_euler_check(&multiplicities)?;
            let out = match cli.format {
                Format::Json => {
                    let doc = json!({
                        "order": action.order(),
                        "multiplicities": multiplicities,
                        "orbifold_euler": [*chi.numer(), *chi.denom()],
                    });
                    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
                }
                Format::Text => format!(
                    "order {}, multiplicities {:?}, orbifold euler characteristic {chi}\n",
                    action.order(),
                    multiplicities
                ),
            };
            Ok(ok(out))
        }
    }
}

fn read_document(inline: Option<&str>, input: Option<&str>) -> crate::Result<String> {
    match (inline, input) {
        (Some(doc), None) => Ok(doc.to_string()),
        (None, Some("-")) => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::invalid(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Error::invalid(format!("cannot read {path}: {e}"))),
        (Some(_), Some(_)) => Err(Error::invalid(
            "give the document inline or via --input, not both",
        )),
        (None, None) => Err(Error::invalid(
            "missing input document (inline JSON or --input <path>)",
        )),
    }
}

fn parse_rational(text: &str) -> crate::Result<BigRational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::invalid(format!("bad rational {text:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::invalid(format!("bad rational {text:?}")))?;
    if d.is_zero() {
        return Err(Error::invalid("zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

fn class_name(class: ConicClass) -> &'static str {
    match class {
        ConicClass::SmoothWithRealPoints => "smooth conic with real points",
        ConicClass::SmoothEmpty => "smooth conic with empty real locus",
        ConicClass::TwoRealLines => "pair of real lines",
        ConicClass::TwoConjugateLines => "pair of conjugate lines",
        ConicClass::DoubleLine => "double line",
    }
}

fn multiset_json(ms: &RepMultiset) -> serde_json::Value {
    let summands: Vec<serde_json::Value> = ms
        .summands()
        .map(|(irrep, count)| {
            let label = match irrep {
                RealIrrep::TrivialPlus => "1+".to_string(),
                RealIrrep::SignMinus => "1-".to_string(),
                RealIrrep::Rotation(a) => format!("R_{{{a},{}}}", ms.modulus()),
            };
            json!({ "irrep": label, "count": count })
        })
        .collect();
    json!(summands)
}

/// Numeric verification of the tensor decomposition: largest gap between
/// the trace of the honest 12×12 matrices and the symbolic character.
fn numeric_character_gap(a: i64, b: i64, m: u32, symbolic: &RepMultiset) -> f64 {
    let mut max_gap = 0.0f64;
    for k in 0..m {
        let numeric = trace_of_tensor(a, b, m, k);
        let gap = (numeric - symbolic.character(k)).abs();
        max_gap = max_gap.max(gap);
    }
    max_gap
}

fn rotation2(angle: f64) -> [[f64; 2]; 2] {
    [[angle.cos(), angle.sin()], [-angle.sin(), angle.cos()]]
}

/// Trace of the action of group element `k` on `R_b ⊗ S²(1 ⊕ R_a)`,
/// built as an explicit Kronecker product of a 2×2 rotation with the
/// symmetric square of a 3×3 block matrix.
fn trace_of_tensor(a: i64, b: i64, m: u32, k: u32) -> f64 {
    let tau = 2.0 * std::f64::consts::PI * (k as f64) / (m as f64);
    let rb = rotation2(b as f64 * tau);
    let ra = rotation2(a as f64 * tau);
    // 3×3 block matrix for 1(z) ⊕ R_a(x, y)
    let mut v = [[0.0f64; 3]; 3];
    v[0][0] = 1.0;
    for i in 0..2 {
        for j in 0..2 {
            v[i + 1][j + 1] = ra[i][j];
        }
    }
    // symmetric square on the basis e_p ⊙ e_q, p ≤ q
    let pairs = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];
    let mut s2 = [[0.0f64; 6]; 6];
    for (col, &(p, q)) in pairs.iter().enumerate() {
        for (row, &(u, w)) in pairs.iter().enumerate() {
            s2[row][col] = if u == w {
                v[u][p] * v[w][q]
            } else {
                v[u][p] * v[w][q] + v[w][p] * v[u][q]
            };
        }
    }
    // trace of kron(rb, s2)
    let mut trace = 0.0;
    for i in 0..2 {
        for r in 0..6 {
            trace += rb[i][i] * s2[r][r];
        }
    }
    trace
}
