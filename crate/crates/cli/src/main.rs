use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use curvecodes::classnum::{class_number_row, kronecker_class_number};
use curvecodes::curves::{bch_family_census_with, melas_family_census_with, CensusReport};
use curvecodes::cyclic::{
    build_named_code, dual_basis, dual_trace_distribution_with, enumerate_weight_distribution_with,
    span_weight_distribution, CyclicCode, Family, DEFAULT_WORK_LIMIT,
};
use curvecodes::distributions::{
    bch_distribution, bch_dual_distribution, hamming_distribution, hamming_dual_distribution,
    melas_distribution_from_traces, melas_dual_distribution, parity_distribution, repetition_distribution,
};
use curvecodes::enumerator::{macwilliams_transform_with, WeightEnumerator};
use curvecodes::gf2m::make_field;
use curvecodes::hecke::{hecke_trace_table, DEFAULT_KMAX};
use curvecodes::report::{to_csv, to_table, CodeJson, DistributionJson, FieldJson, HeckeJson, Method};
use curvecodes::verify::verify_all;
use curvecodes::Execution;
use num_bigint::BigUint;

#[derive(Parser)]
#[command(name = "curvecodes", version, about = "Weight distributions of binary cyclic codes via curves and class numbers")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Run every computation on the current thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Args)]
struct FamilyArgs {
    /// hamming, bch2, melas, parity or repetition.
    #[arg(long)]
    family: Family,
    /// Field degree, for hamming/bch2/melas.
    #[arg(long)]
    m: Option<u32>,
    /// Code length, for parity/repetition.
    #[arg(long)]
    n: Option<u32>,
}

impl FamilyArgs {
    fn param(&self) -> anyhow::Result<u32> {
        let (wanted, other, flag) = if self.family.is_field_family() {
            (self.m, self.n, "--m")
        } else {
            (self.n, self.m, "--n")
        };
        match (wanted, other) {
            (Some(p), None) => Ok(p),
            _ => bail!("family {} takes {flag} (and only {flag})", self.family),
        }
    }

    fn m(&self) -> Option<u32> {
        if self.family.is_field_family() {
            self.m
        } else {
            None
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DualMethod {
    Trace,
    Nullspace,
    ClosedForm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DistMethod {
    ClosedForm,
    BruteForce,
    Macwilliams,
}

#[derive(Subcommand)]
enum Command {
    /// Field parameters: modulus and primitive element.
    Field {
        #[arg(long)]
        m: u32,
    },
    /// Generator polynomial and dimension of a named code.
    Code(FamilyArgs),
    /// Exhaustive weight distribution.
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = DEFAULT_WORK_LIMIT)]
        work_limit: u64,
    },
    /// Weight distribution of the dual code.
    Dual {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = DualMethod::Trace)]
        method: DualMethod,
        #[arg(long, default_value_t = DEFAULT_WORK_LIMIT)]
        work_limit: u64,
    },
    /// MacWilliams transform of a distribution read from a JSON file.
    Macwilliams {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Weight distribution by the chosen route.
    Dist {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = DistMethod::ClosedForm)]
        method: DistMethod,
        #[arg(long, default_value_t = DEFAULT_WORK_LIMIT)]
        work_limit: u64,
    },
    /// Kronecker class number H(d), or the row of H(t² − 4q).
    ClassNumber {
        #[arg(long, allow_hyphen_values = true, conflicts_with = "row_q", required_unless_present = "row_q")]
        d: Option<i64>,
        #[arg(long)]
        row_q: Option<u64>,
    },
    /// Hecke traces τ_k(2^m) for even k up to kmax.
    HeckeTrace {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = DEFAULT_KMAX)]
        kmax: u32,
    },
    /// Point-count census of a curve family, with its prediction.
    Census {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        m: u32,
    },
    /// Run the acceptance checks.
    VerifyAll {
        /// Cap on the field degree in every check.
        #[arg(long)]
        max_m: Option<u32>,
    },
}

struct Ctx {
    format: Format,
    exec: Execution,
}

impl Ctx {
    fn emit_json(&self, value: &impl serde::Serialize) -> anyhow::Result<()> {
        println!("{}", serde_json::to_string_pretty(value)?);
        Ok(())
    }

    fn emit_distribution(&self, json: &DistributionJson, w: &WeightEnumerator) -> anyhow::Result<()> {
        match self.format {
            Format::Json => self.emit_json(json),
            Format::Csv => {
                print!("{}", to_csv(w));
                Ok(())
            }
            Format::Table => {
                print!("{}", to_table(w));
                Ok(())
            }
        }
    }

    /// Key/value records for non-distribution outputs.
    fn emit_record(&self, value: &impl serde::Serialize, rows: &[(&str, String)]) -> anyhow::Result<()> {
        match self.format {
            Format::Json => self.emit_json(value),
            Format::Csv => {
                let mut out = String::from("key,value\n");
                for (k, v) in rows {
                    writeln!(out, "{k},{v}")?;
                }
                print!("{out}");
                Ok(())
            }
            Format::Table => {
                let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
                for (k, v) in rows {
                    println!("{k:<width$}  {v}");
                }
                Ok(())
            }
        }
    }
}

fn two_pow(e: usize) -> BigUint {
    BigUint::from(1u32) << e
}

fn closed_form_dual(code: &CyclicCode, param: u32) -> anyhow::Result<WeightEnumerator> {
    let n = code.n();
    Ok(match code.family() {
        Family::Parity => repetition_distribution(n),
        Family::Repetition => parity_distribution(n)?,
        Family::Hamming => hamming_dual_distribution(param)?,
        Family::Bch2 => bch_dual_distribution(param)?,
        Family::Melas => melas_dual_distribution(param)?,
        Family::Custom => bail!("no closed form for custom codes"),
    })
}

fn closed_form(code: &CyclicCode, param: u32, exec: Execution) -> anyhow::Result<(WeightEnumerator, Method)> {
    let n = code.n();
    Ok(match code.family() {
        Family::Parity => (parity_distribution(n)?, Method::ClosedForm),
        Family::Repetition => (repetition_distribution(n), Method::ClosedForm),
        Family::Hamming => (hamming_distribution(param)?, Method::ClosedForm),
        Family::Bch2 => (bch_distribution(param)?, Method::Macwilliams),
        Family::Melas => {
            let q = 1u32 << param;
            let traces = hecke_trace_table(param, q + 1)?;
            (melas_distribution_from_traces(param, &traces, exec)?, Method::ClosedForm)
        }
        Family::Custom => bail!("no closed form for custom codes"),
    })
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let ctx = Ctx {
        format: cli.format,
        exec: if cli.sequential { Execution::Sequential } else { Execution::default() },
    };
    match cli.command {
        Command::Field { m } => {
            let field = make_field(m)?;
            let json = FieldJson::from(&field);
            let rows = [
                ("m", json.m.to_string()),
                ("q", json.q.to_string()),
                ("modulus", json.modulus.clone()),
                ("modulus_poly", json.modulus_poly.clone()),
                ("alpha", json.alpha.clone()),
            ];
            ctx.emit_record(&json, &rows)?;
        }
        Command::Code(args) => {
            let code = build_named_code(args.family, args.param()?)?;
            let json = CodeJson::from(&code);
            let rows = [
                ("family", json.family.clone()),
                ("n", json.n.to_string()),
                ("k", json.k.to_string()),
                ("generator", json.generator.clone()),
                ("generator_poly", json.generator_poly.clone()),
            ];
            ctx.emit_record(&json, &rows)?;
        }
        Command::Enumerate { family, work_limit } => {
            let code = build_named_code(family.family, family.param()?)?;
            let w = enumerate_weight_distribution_with(&code, work_limit, ctx.exec)?;
            let json = DistributionJson::new(family.family.name(), family.m(), code.k(), Method::BruteForce, &w);
            ctx.emit_distribution(&json, &w)?;
        }
        Command::Dual { family, method, work_limit } => {
            let param = family.param()?;
            let code = build_named_code(family.family, param)?;
            let (w, tag) = match method {
                DualMethod::Trace => {
                    if !family.family.is_field_family() {
                        bail!("trace representation needs a field family");
                    }
                    (dual_trace_distribution_with(family.family, param, ctx.exec)?, Method::TraceEnumeration)
                }
                DualMethod::Nullspace => (
                    span_weight_distribution(&dual_basis(&code), code.n(), work_limit, ctx.exec)?,
                    Method::BruteForce,
                ),
                DualMethod::ClosedForm => (closed_form_dual(&code, param)?, Method::ClosedForm),
            };
            let name = format!("{}-dual", family.family.name());
            let json = DistributionJson::new(&name, family.m(), code.n() - code.k(), tag, &w);
            ctx.emit_distribution(&json, &w)?;
        }
        Command::Macwilliams { input } => {
            let text = std::fs::read_to_string(&input).with_context(|| format!("reading {}", input.display()))?;
            let parsed: DistributionJson = serde_json::from_str(&text).context("parsing distribution JSON")?;
            let w = parsed.enumerator()?;
            let total = w.total();
            let dual = macwilliams_transform_with(&w, &total, ctx.exec)?;
            let k = total.bits() as usize - 1;
            let family = match parsed.family.strip_suffix("-dual") {
                Some(base) => base.to_string(),
                None => format!("{}-dual", parsed.family),
            };
            let json = DistributionJson::new(&family, parsed.m, w.n() - k, Method::Macwilliams, &dual);
            ctx.emit_distribution(&json, &dual)?;
        }
        Command::Dist { family, method, work_limit } => {
            let param = family.param()?;
            let code = build_named_code(family.family, param)?;
            let (w, tag) = match method {
                DistMethod::ClosedForm => closed_form(&code, param, ctx.exec)?,
                DistMethod::BruteForce => (
                    enumerate_weight_distribution_with(&code, work_limit, ctx.exec)?,
                    Method::BruteForce,
                ),
                DistMethod::Macwilliams => {
                    let dual = closed_form_dual(&code, param)?;
                    let size = two_pow(code.n() - code.k());
                    (macwilliams_transform_with(&dual, &size, ctx.exec)?, Method::Macwilliams)
                }
            };
            let json = DistributionJson::new(family.family.name(), family.m(), code.k(), tag, &w);
            ctx.emit_distribution(&json, &w)?;
        }
        Command::ClassNumber { d, row_q } => {
            if let Some(d) = d {
                let h = kronecker_class_number(d)?;
                match ctx.format {
                    Format::Json => ctx.emit_json(&serde_json::json!({ "d": d, "h": h }))?,
                    Format::Csv => print!("d,h\n{d},{h}\n"),
                    Format::Table => println!("{h}"),
                }
            } else if let Some(q) = row_q {
                let row = class_number_row(q)?;
                match ctx.format {
                    Format::Json => ctx.emit_json(&row)?,
                    Format::Csv => {
                        println!("t,d,h");
                        for e in &row.entries {
                            println!("{},{},{}", e.t, e.d, e.h);
                        }
                    }
                    Format::Table => {
                        println!("{:>6}  {:>8}  {:>6}", "t", "d", "H");
                        for e in &row.entries {
                            println!("{:>6}  {:>8}  {:>6}", e.t, e.d, e.h);
                        }
                        println!("{:>6}  {:>8}  {:>6}", "Σ", "", row.sum_h());
                    }
                }
            }
        }
        Command::HeckeTrace { m, kmax } => {
            let table = hecke_trace_table(m, kmax)?;
            let json = HeckeJson::from(&table);
            match ctx.format {
                Format::Json => ctx.emit_json(&json)?,
                Format::Csv => {
                    println!("k,trace");
                    for t in &json.traces {
                        println!("{},{}", t.k, t.trace);
                    }
                }
                Format::Table => {
                    let w = json.traces.iter().map(|t| t.trace.len()).max().unwrap_or(0).max(5);
                    println!("{:>4}  {:>w$}", "k", "trace");
                    for t in &json.traces {
                        println!("{:>4}  {:>w$}", t.k, t.trace);
                    }
                }
            }
        }
        Command::Census { family, m } => {
            let field = make_field(m)?;
            let q = field.q() as u64;
            let report = match family {
                Family::Bch2 => {
                    let histogram = bch_family_census_with(&field, ctx.exec).into_iter().map(|(k, v)| (k as i64, v)).collect();
                    let predicted = curvecodes::curves::bch_census_prediction(m)?.into_iter().map(|(k, v)| (k as i64, v)).collect();
                    census_report(q, family, histogram, predicted)
                }
                Family::Melas => {
                    let histogram = melas_family_census_with(&field, ctx.exec);
                    let predicted = curvecodes::curves::melas_census_prediction(m)?;
                    census_report(q, family, histogram, predicted)
                }
                other => bail!("no curve census for family {other}; use bch2 or melas"),
            };
            let key = if family == Family::Bch2 { "points" } else { "trace" };
            match ctx.format {
                Format::Json => ctx.emit_json(&report)?,
                Format::Csv => {
                    println!("{key},count,predicted");
                    for k in report.histogram.keys().chain(report.predicted.keys()).collect::<std::collections::BTreeSet<_>>() {
                        let get = |m: &std::collections::BTreeMap<i64, u64>| m.get(k).copied().unwrap_or(0);
                        println!("{k},{},{}", get(&report.histogram), get(&report.predicted));
                    }
                }
                Format::Table => {
                    println!("{key:>6}  {:>10}  {:>10}", "count", "predicted");
                    for k in report.histogram.keys().chain(report.predicted.keys()).collect::<std::collections::BTreeSet<_>>() {
                        let get = |m: &std::collections::BTreeMap<i64, u64>| m.get(k).copied().unwrap_or(0);
                        println!("{k:>6}  {:>10}  {:>10}", get(&report.histogram), get(&report.predicted));
                    }
                    println!("match: {}", report.matches);
                }
            }
            if !report.matches {
                return Ok(ExitCode::from(1));
            }
        }
        Command::VerifyAll { max_m } => {
            let report = verify_all(max_m);
            match ctx.format {
                Format::Json => ctx.emit_json(&report)?,
                Format::Csv => {
                    println!("id,name,parameters,passed,elapsed_ms");
                    for c in &report.checks {
                        println!("{},{},\"{}\",{},{}", c.id, c.name, c.parameters, c.passed, c.elapsed_ms);
                    }
                }
                Format::Table => {
                    for c in &report.checks {
                        println!("{}", c.line());
                    }
                    println!("overall: {}", if report.overall { "PASS" } else { "FAIL" });
                }
            }
            if !report.overall {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn census_report(
    q: u64,
    family: Family,
    histogram: std::collections::BTreeMap<i64, u64>,
    predicted: std::collections::BTreeMap<i64, u64>,
) -> CensusReport {
    CensusReport {
        q,
        family: family.name().to_string(),
        matches: histogram == predicted,
        histogram,
        predicted,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
