//! `upsilon-lab`: Υ, −3∫Υ and ω for L-space knots from the command line.
//!
//! Exit status is 0 on success, 1 for bad input (including usage errors)
//! and 2 when an internal consistency check fails.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use upsilon_core::algebraic::{
    check_inequalities, multiplicity_sequence, singularity_report, torus_alexander, MultiplicitySequence,
    SingularityReport,
};
use upsilon_core::braid::{alexander_of_closure, positive_braid_genus, BraidWord};
use upsilon_core::census::{emit_table, run_census, CensusFormat, TableStyle};
use upsilon_core::family::{kn_alexander_closed, kn_alexander_torres};
use upsilon_core::signature::{greedy_sequence, locate_first_root, psi_at_zeta6};
use upsilon_core::upsilon::{formal_semigroup, report_unnormalized};
use upsilon_core::{Error, InvariantReport, LaurentPoly};

#[derive(Parser)]
#[command(name = "upsilon-lab", version, about = "Upsilon invariants of L-space knots, computed exactly")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one Alexander polynomial.
    Upsilon(PolySource),
    /// Formal semigroup of an Alexander polynomial.
    Semigroup {
        #[arg(long)]
        poly: String,
    },
    /// Report for the knot K_n.
    Family {
        #[arg(long)]
        n: i64,
        /// How to obtain the Alexander polynomial.
        #[arg(long, value_enum, default_value_t = Route::Closed)]
        route: Route,
    },
    /// Report for the torus knot T(p,q).
    Torus {
        #[arg(long, value_name = "P,Q")]
        pq: String,
    },
    /// Υ as a sum of blocks, and singularity invariants, from a multiplicity sequence.
    Algebraic(AlgebraicInput),
    /// Alexander polynomial of a braid closure.
    Braid {
        /// e.g. "strands:3 1 1 1"
        #[arg(long)]
        word: String,
    },
    /// Roots of Δ_{K_n} on the unit circle near 1.
    Signature(SignatureInput),
    /// Batch run over a census file.
    Census {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: InputFormat,
        #[arg(long, value_enum, default_value_t = Table::Markdown)]
        table: Table,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct PolySource {
    /// Polynomial such as "1 - t + t^2".
    #[arg(long)]
    poly: Option<String>,
    /// File containing the polynomial.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct AlgebraicInput {
    /// Comma-separated multiplicities, e.g. 3,2
    #[arg(long, value_delimiter = ',')]
    mults: Option<Vec<i64>>,
    /// Singularity x^p = y^q.
    #[arg(long, value_name = "P,Q")]
    pq: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SignatureInput {
    #[arg(long)]
    n: Option<i64>,
    /// Number of terms of the greedy subsequence.
    #[arg(long)]
    greedy: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Route {
    Closed,
    Torres,
    Braid,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    Csv,
    Markdown,
}

fn parse_pq(s: &str) -> Result<(i64, i64), Error> {
    let bad = || Error::Parse(format!("expected P,Q, got {s:?}"));
    let (p, q) = s.split_once(',').ok_or_else(bad)?;
    Ok((p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?))
}

fn report_text(r: &InvariantReport) -> String {
    let mut s = String::new();
    writeln!(s, "{}", r.name).unwrap();
    writeln!(s, "  genus     {}", r.genus).unwrap();
    writeln!(s, "  tau       {}", r.tau).unwrap();
    writeln!(s, "  upsilon   {}", r.upsilon).unwrap();
    writeln!(s, "  integral  {}", r.integral).unwrap();
    writeln!(s, "  -3I       {} ({})", r.minus_three_integral, if r.is_integral { "integral" } else { "not integral" })
        .unwrap();
    writeln!(s, "  omega     {}", r.omega).unwrap();
    match r.closure_witness {
        None => writeln!(s, "  semigroup closed under addition").unwrap(),
        Some((a, b)) => writeln!(s, "  semigroup not closed: {a} + {b} = {} is a gap", a + b).unwrap(),
    }
    s
}

fn singularity_text(r: &SingularityReport) -> String {
    let mut s = String::new();
    writeln!(s, "multiplicities {:?}", r.mults.as_slice()).unwrap();
    writeln!(s, "  milnor    {}", r.milnor).unwrap();
    writeln!(s, "  genus     {}", r.genus).unwrap();
    writeln!(s, "  omega     {}", r.omega).unwrap();
    writeln!(s, "  -3I       {}", r.minus_three_integral).unwrap();
    writeln!(s, "  upsilon   {}", r.upsilon).unwrap();
    s
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

/// Text and JSON renderings of one command's result.
struct Output {
    text: String,
    json: Value,
}

fn report_output(r: InvariantReport) -> Output {
    Output { text: report_text(&r), json: to_json(&r) }
}

fn run(command: Command) -> Result<Output, Error> {
    match command {
        Command::Upsilon(src) => {
            let (text, name) = match (src.poly, src.file) {
                (Some(p), _) => (p, "K".to_string()),
                (None, Some(f)) => {
                    let text = std::fs::read_to_string(&f).map_err(|e| match e.kind() {
                        std::io::ErrorKind::NotFound => Error::FileNotFound(f.display().to_string()),
                        _ => Error::Io(e.to_string()),
                    })?;
                    let name = f.file_stem().map_or("K".into(), |s| s.to_string_lossy().into_owned());
                    (text, name)
                }
                (None, None) => unreachable!("clap requires one source"),
            };
            let d: LaurentPoly = text.trim().parse()?;
            Ok(report_output(report_unnormalized(&d, &name)?))
        }
        Command::Semigroup { poly } => {
            let d = poly.parse::<LaurentPoly>()?.normalize_alexander()?;
            let s = formal_semigroup(&d)?;
            let (closed, witness) = s.closed_under_addition();
            let elements = s.elements_below(2 * s.genus());
            let mut text = format!("genus {}\ngaps {:?}\nelements below 2g {:?}\n", s.genus(), s.gaps(), elements);
            match witness {
                None => text.push_str("closed under addition\n"),
                Some((a, b)) => writeln!(text, "not closed: {a} + {b} = {} is a gap", a + b).unwrap(),
            }
            let json = json!({
                "genus": s.genus(),
                "gaps": s.gaps(),
                "elements": elements,
                "closed": closed,
                "witness": witness,
            });
            Ok(Output { text, json })
        }
        Command::Family { n, route } => {
            let d = match route {
                Route::Closed => kn_alexander_closed(n)?,
                Route::Torres => kn_alexander_torres(n)?,
                Route::Braid => alexander_of_closure(&upsilon_core::braid::kn_braid(n)?)?,
            };
            let mut out = report_output(report_unnormalized(&d, &format!("K_{n}"))?);
            out.text = format!("alexander {d}\n{}", out.text);
            out.json["alexander"] = to_json(&d);
            Ok(out)
        }
        Command::Torus { pq } => {
            let (p, q) = parse_pq(&pq)?;
            Ok(report_output(report_unnormalized(&torus_alexander(p, q)?, &format!("T({p},{q})"))?))
        }
        Command::Algebraic(input) => {
            let (ms, pq) = match (input.mults, input.pq) {
                (Some(m), _) => (MultiplicitySequence::new(m)?, None),
                (None, Some(pq)) => {
                    let (p, q) = parse_pq(&pq)?;
                    (multiplicity_sequence(p, q)?, Some((p, q)))
                }
                (None, None) => unreachable!("clap requires one input"),
            };
            let r = singularity_report(&ms);
            let mut out = Output { text: singularity_text(&r), json: to_json(&r) };
            if let Some((p, q)) = pq {
                let v = check_inequalities(p, q)?;
                writeln!(out.text, "  omega < p + q      {}", v.omega_below_p_plus_q).unwrap();
                writeln!(out.text, "  milnor <= m omega  {}", v.milnor_bounded).unwrap();
                out.json["inequalities"] = to_json(&v);
            }
            Ok(out)
        }
        Command::Braid { word } => {
            let w: BraidWord = word.parse()?;
            let components = w.closure_components();
            let d = alexander_of_closure(&w)?;
            let genus = positive_braid_genus(&w).ok();
            let report = report_unnormalized(&d, &w.to_string()).ok();
            let mut text = format!("{w}\n  components 1\n  alexander  {d}\n");
            if let Some(g) = genus {
                writeln!(text, "  genus      {g}").unwrap();
            }
            match &report {
                Some(r) => text.push_str(&report_text(r)),
                None => text.push_str("  not of L-space form\n"),
            }
            let json = json!({
                "word": w.to_string(),
                "components": components,
                "alexander": to_json(&d),
                "genus": genus,
                "report": report.as_ref().map(to_json),
            });
            Ok(Output { text, json })
        }
        Command::Signature(input) => match (input.n, input.greedy) {
            (Some(n), _) => {
                let r = locate_first_root(n)?;
                let z = psi_at_zeta6(n)?;
                let text = format!(
                    "n = {n}\n  first sign change in [{:.15}, {:.15}]\n  root {:.15}\n  residual {:.3e}\n  psi(zeta6) = {z}\n",
                    r.bracket.0, r.bracket.1, r.root, r.residual
                );
                let mut json = to_json(&r);
                json["psiAtZeta6"] = to_json(&z);
                Ok(Output { text, json })
            }
            (None, Some(count)) => {
                let g = greedy_sequence(count)?;
                let mut text = String::new();
                for (a, l) in g.terms.iter().zip(&g.radii) {
                    writeln!(text, "{a}\t{l:.12}").unwrap();
                }
                Ok(Output { text, json: to_json(&g) })
            }
            (None, None) => unreachable!("clap requires one input"),
        },
        Command::Census { input, format, table } => {
            let format = match format {
                InputFormat::Csv => CensusFormat::Csv,
                InputFormat::Jsonl => CensusFormat::Jsonl,
            };
            let style = match table {
                Table::Csv => TableStyle::Csv,
                Table::Markdown => TableStyle::Markdown,
            };
            let r = run_census(&input, format)?;
            for rej in &r.rejects {
                eprintln!("line {}: {} rejected: {}", rej.line, rej.name, rej.reason);
            }
            Ok(Output { text: emit_table(&r, style), json: to_json(&r) })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("json values print") + "\n"
            } else {
                out.text
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = std::io::stdout().write_all(body.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_contract_violation() { 2 } else { 1 })
        }
    }
}
