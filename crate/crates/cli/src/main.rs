use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use numsg_core::analysis::{analyze, AnalysisReport, DEFAULT_MATRIX_CAP};
use numsg_core::census::{census, census_with_records, CensusQuery, ParityFilter};
use numsg_core::construct::{
    build_pseudo_sym3, build_symmetric_bresinsky, build_type3, family_sn, BuildOptions,
};
use numsg_core::structure::ClassLabel;
use numsg_core::verify::verify;
use numsg_core::NumericalSemigroup;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "numsg",
    version,
    about = "Numerical semigroup analysis and census"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Parity {
    Odd,
    Any,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, RF-matrices, structure parameters and defining ideal.
    Analyze {
        #[arg(required = true)]
        gens: Vec<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        /// RF-matrices listed per pseudo-Frobenius number.
        #[arg(long, default_value_t = DEFAULT_MATRIX_CAP)]
        max_matrices: usize,
    },
    /// Count almost symmetric semigroups by class.
    Census {
        #[arg(long)]
        max_gen: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        edim: Vec<usize>,
        #[arg(long, value_enum, default_value = "odd")]
        parity: Parity,
        #[arg(long, value_enum, default_value = "table")]
        format: TableFormat,
        #[arg(long, env = "NUMSG_WORKERS")]
        workers: Option<usize>,
        /// Count only these classes (comma separated labels).
        #[arg(long, value_delimiter = ',')]
        classes: Option<Vec<String>>,
        /// Write one JSON line per counted semigroup to this file.
        #[arg(long)]
        records: Option<PathBuf>,
    },
    /// Construct a semigroup from family parameters.
    Build {
        #[command(subcommand)]
        family: Family,
        #[arg(long, value_enum, default_value = "text", global = true)]
        format: ReportFormat,
    },
    /// Check the structure theorems on every semigroup up to a bound.
    Verify {
        #[arg(long)]
        max_gen: u64,
        #[arg(long, env = "NUMSG_WORKERS")]
        workers: Option<usize>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Almost symmetric of type three from four odd exponents.
    Type3 {
        #[arg(long, value_delimiter = ',', required = true)]
        alpha: Vec<u64>,
    },
    /// Symmetric, not a complete intersection.
    Bresinsky {
        #[arg(long, value_delimiter = ',', required = true)]
        a: Vec<u64>,
        #[arg(long, value_delimiter = ',', required = true)]
        b: Vec<u64>,
    },
    /// Three-generated pseudo-symmetric.
    Psym3 {
        #[arg(long, value_delimiter = ',', required = true)]
        abc: Vec<u64>,
    },
    /// The family S_n.
    Sn {
        #[arg(long)]
        n: u32,
    },
}

fn fixed<const N: usize>(name: &str, values: &[u64]) -> Result<[u64; N]> {
    match values.try_into() {
        Ok(arr) => Ok(arr),
        Err(_) => bail!(
            "--{name} takes {N} comma separated values, got {}",
            values.len()
        ),
    }
}

fn workers(flag: Option<usize>) -> usize {
    flag.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn list<T: std::fmt::Display>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn render_report(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "generators: {}", list(&r.gens, " ")).unwrap();
    writeln!(w, "multiplicity: {}", r.multiplicity).unwrap();
    writeln!(w, "embedding dimension: {}", r.embedding_dimension).unwrap();
    writeln!(w, "Frobenius number: {}", r.frobenius).unwrap();
    writeln!(w, "genus: {}", r.genus).unwrap();
    writeln!(w, "PF: {{{}}}", list(&r.pseudo_frobenius, ", ")).unwrap();
    writeln!(w, "type: {}", r.semigroup_type).unwrap();
    writeln!(w, "class: {}", r.class.label).unwrap();
    writeln!(w, "all generators odd: {}", r.class.all_generators_odd).unwrap();
    writeln!(w, "complete intersection: {}", r.complete_intersection).unwrap();
    if !r.alpha.is_empty() {
        writeln!(w, "alpha: ({})", list(&r.alpha, ",")).unwrap();
    }
    for rf in &r.rf {
        let note = if rf.unique {
            "unique".to_string()
        } else if rf.truncated {
            format!("{} total, first {} shown", rf.total, rf.matrices.len())
        } else {
            format!("{} total", rf.total)
        };
        writeln!(w, "RF({}): {note}", rf.f).unwrap();
        for (k, m) in rf.matrices.iter().enumerate() {
            if k > 0 {
                writeln!(w).unwrap();
            }
            for row in m {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
                writeln!(w, "  [{} ]", cells.join("")).unwrap();
            }
        }
    }
    if let Some(b) = &r.bresinsky {
        writeln!(
            w,
            "bresinsky: n=({}) alpha=({}) a=({}) b=({})",
            list(&b.gens, ","),
            list(&b.alpha, ","),
            list(&b.a, ","),
            list(&b.b, ",")
        )
        .unwrap();
    }
    if let Some(c) = r.parity_case {
        writeln!(w, "parity case: {c:?}").unwrap();
    }
    if let Some(p) = &r.pseudo_symmetric {
        writeln!(
            w,
            "pseudo-symmetric form: n=({}) alpha=({}) a={}",
            list(&p.gens, ","),
            list(&p.alpha, ","),
            p.a
        )
        .unwrap();
    }
    if let Some(ok) = r.pseudo_parity_check {
        writeln!(w, "row parity criterion holds: {ok}").unwrap();
    }
    if let Some(t) = &r.type3 {
        writeln!(
            w,
            "type-three form: n=({}) alpha=({}) f={}",
            list(&t.gens, ","),
            list(&t.alpha, ","),
            t.f
        )
        .unwrap();
    }
    if let Some(c) = r.uf_case {
        writeln!(w, "case: {c}").unwrap();
    }
    if let Some(ideal) = &r.ideal {
        writeln!(w, "defining ideal over n=({}):", list(&ideal.gens, ",")).unwrap();
        for rel in &ideal.relations {
            writeln!(w, "  {rel}").unwrap();
        }
    }
    out
}

fn emit_semigroup(s: &NumericalSemigroup, formula: &[u64], format: ReportFormat) -> Result<()> {
    match format {
        ReportFormat::Text => {
            println!("formula order: {}", list(formula, " "));
            print!("{}", render_report(&analyze(s, DEFAULT_MATRIX_CAP)));
        }
        ReportFormat::Json => {
            let v = json!({ "formula_order": formula, "analysis": analyze(s, DEFAULT_MATRIX_CAP) });
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze {
            gens,
            format,
            max_matrices,
        } => {
            let s = NumericalSemigroup::new(&gens)?;
            let report = analyze(&s, max_matrices);
            match format {
                ReportFormat::Text => print!("{}", render_report(&report)),
                ReportFormat::Json => println!("{}", serde_json::to_string_pretty(&report)?),
            }
        }
        Command::Census {
            max_gen,
            edim,
            parity,
            format,
            workers: w,
            classes,
            records,
        } => {
            let parity = match parity {
                Parity::Odd => ParityFilter::Odd,
                Parity::Any => ParityFilter::Any,
            };
            let mut q = CensusQuery::new(max_gen, edim, parity)?;
            if let Some(classes) = classes {
                let mut labels = Vec::new();
                for c in &classes {
                    let Some(label) = ClassLabel::parse(c) else {
                        bail!("unknown class label {c:?}");
                    };
                    labels.push(label);
                }
                q = q.with_classes(labels);
            }
            let table = match records {
                Some(path) => {
                    let (table, recs) = census_with_records(&q, workers(w));
                    let file = File::create(&path)
                        .with_context(|| format!("creating {}", path.display()))?;
                    let mut out = BufWriter::new(file);
                    for r in &recs {
                        serde_json::to_writer(&mut out, r)?;
                        out.write_all(b"\n")?;
                    }
                    out.flush()?;
                    table
                }
                None => census(&q, workers(w)),
            };
            match format {
                TableFormat::Table => print!("{}", table.to_table()),
                TableFormat::Csv => print!("{}", table.to_csv()),
                TableFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&table.keyed_counts())?)
                }
            }
        }
        Command::Build { family, format } => {
            let opts = BuildOptions::default();
            let (s, formula) = match family {
                Family::Type3 { alpha } => {
                    let b = build_type3(fixed("alpha", &alpha)?, opts)?;
                    (b.semigroup, b.formula_order)
                }
                Family::Bresinsky { a, b } => {
                    let built = build_symmetric_bresinsky(fixed("a", &a)?, fixed("b", &b)?, opts)?;
                    (built.semigroup, built.formula_order)
                }
                Family::Psym3 { abc } => {
                    let [x, y, z] = fixed("abc", &abc)?;
                    let b = build_pseudo_sym3(x, y, z, opts)?;
                    (b.semigroup, b.formula_order)
                }
                Family::Sn { n } => {
                    let b = family_sn(n, opts)?;
                    (b.semigroup, b.formula_order)
                }
            };
            emit_semigroup(&s, &formula, format)?;
        }
        Command::Verify {
            max_gen,
            workers: w,
        } => {
            let report = verify(max_gen, workers(w))?;
            for s in &report.suites {
                let status = if s.passed() { "PASS" } else { "FAIL" };
                print!(
                    "{status} {:<32} checked={:<8} failed={}",
                    s.suite.name(),
                    s.checked,
                    s.failed
                );
                if !s.counterexamples.is_empty() {
                    let shown: Vec<String> = s
                        .counterexamples
                        .iter()
                        .map(|g| format!("<{}>", list(g, ",")))
                        .collect();
                    print!(" e.g. {}", shown.join(" "));
                }
                println!();
            }
            println!(
                "passed: {} failed: {} elapsed: {:.2?}",
                report.passed_count(),
                report.failed_count(),
                report.elapsed
            );
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.render().to_string();
            eprintln!("{}", json!({ "error": msg.trim(), "kind": "usage" }));
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{}", json!({ "error": format!("{e:#}") }));
            ExitCode::FAILURE
        }
    }
}
