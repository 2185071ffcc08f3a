use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use linesurf::atlas::{self, DEFAULT_CAP};
use linesurf::audit::{audit_case, AuditCase, RowStatus};
use linesurf::cubic::{cubic_verdict, enumerate_tuples, tuple_criterion};
use linesurf::{classify, max_genus, Error};

const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;
const EXIT_CAP: u8 = 4;
const EXIT_AUDIT: u8 = 5;

#[derive(Parser)]
#[command(
    name = "linesurf",
    version,
    about = "Maximal families of space curves on surfaces containing a line"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
#[group(multiple = false)]
struct Format {
    /// Pretty-printed JSON
    #[arg(long)]
    json: bool,
    /// Human-readable key/value table (default)
    #[arg(long)]
    table: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the class a·f1 + b·f2 on a degree-s surface
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        s: i128,
        #[arg(long, allow_hyphen_values = true)]
        a: i128,
        #[arg(long, allow_hyphen_values = true)]
        b: i128,
        #[command(flatten)]
        format: Format,
    },
    /// Sweep a parameter grid and write newline-delimited JSON
    Atlas {
        /// Surface degrees, e.g. 4..6
        #[arg(long, conflicts_with = "d", required_unless_present = "d")]
        s: Option<String>,
        #[arg(long, default_value_t = 40)]
        a_max: i128,
        #[arg(long, default_value_t = 40)]
        b_max: i128,
        /// Curve degrees on a smooth cubic, e.g. 14..40 (sweeps the conjecture range)
        #[arg(long)]
        d: Option<String>,
        #[arg(long)]
        out: PathBuf,
        /// Maximum number of grid cells
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u128,
    },
    /// Verdict for (d, g) on a smooth cubic surface
    Cubic {
        #[arg(long, allow_hyphen_values = true)]
        d: i128,
        #[arg(long, allow_hyphen_values = true)]
        g: i128,
        /// Also search m6 = 1 tuples for a tuple-criterion certificate
        #[arg(long)]
        tuples: bool,
        #[command(flatten)]
        format: Format,
    },
    /// List 7-tuples realising (d, g) on a smooth cubic
    Tuples {
        #[arg(long, allow_hyphen_values = true)]
        d: i128,
        #[arg(long, allow_hyphen_values = true)]
        g: i128,
        /// Keep only tuples whose last multiplicity is in this list
        #[arg(long, value_delimiter = ',')]
        m6: Vec<i128>,
        #[command(flatten)]
        format: Format,
    },
    /// Maximum genus G(d, s)
    Maxgenus {
        #[arg(long, allow_hyphen_values = true)]
        d: i128,
        #[arg(long, allow_hyphen_values = true)]
        s: i128,
        #[command(flatten)]
        format: Format,
    },
    /// Replay the arithmetic of one component argument
    Audit {
        /// Q12_8, Q7_5, Q8_6_s5, Q10_8_s6 or CUBIC_57_315
        case: String,
        #[command(flatten)]
        format: Format,
    },
}

enum Failure {
    Input(Box<Error>),
    Io(io::Error),
    Cap { cells: u128, cap: u128 },
    Regression(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(Box::new(e))
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn print_rows(rows: &[(&str, String)]) -> Result<(), Failure> {
    let width = rows
        .iter()
        .map(|(k, _)| k.chars().count())
        .max()
        .unwrap_or(0);
    let mut out = io::stdout().lock();
    for (k, v) in rows {
        writeln!(out, "{k:<width$}  {v}")?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify { s, a, b, format } => {
            let r = classify(s, a, b)?;
            if format.json {
                return print_json(&r);
            }
            let family = r
                .critical_family
                .map_or("-".to_string(), |f| format!("{:?} n={}", f.kind, f.n));
            print_rows(&[
                ("s, a, b", format!("{}, {}, {}", r.s, r.a, r.b)),
                ("d", r.d.to_string()),
                ("g", r.g.to_string()),
                ("t", r.t.to_string()),
                ("dim W", r.dim_w.to_string()),
                ("h1(I_C(s))", r.h1_ideal_s.to_string()),
                ("case", r.case.to_string()),
                ("status", format!("{:?}", r.status)),
                ("critical family", family),
                ("notes", r.notes.join("; ")),
            ])
        }
        Command::Atlas {
            s,
            a_max,
            b_max,
            d,
            out,
            cap,
        } => {
            let buf = match (s, d) {
                (Some(s), _) => {
                    let range = atlas::parse_range(&s)?;
                    let cells = atlas::family_grid_cells(&range, a_max, b_max);
                    if cells > cap {
                        return Err(Failure::Cap { cells, cap });
                    }
                    let records = atlas::family_atlas(range, a_max, b_max)?;
                    let mut buf = Vec::new();
                    atlas::write_ndjson(&mut buf, &records)?;
                    buf
                }
                (None, Some(d)) => {
                    let range = atlas::parse_range(&d)?;
                    let cells = atlas::cubic_grid_cells(&range);
                    if cells > cap {
                        return Err(Failure::Cap { cells, cap });
                    }
                    let mut buf = Vec::new();
                    atlas::write_ndjson(&mut buf, &atlas::cubic_atlas(range))?;
                    buf
                }
                (None, None) => unreachable!("clap requires --s or --d"),
            };
            let mut file = BufWriter::new(File::create(&out)?);
            file.write_all(&buf)?;
            file.flush()?;
            Ok(())
        }
        Command::Cubic {
            d,
            g,
            tuples,
            format,
        } => {
            let v = cubic_verdict(d, g, tuples);
            if format.json {
                return print_json(&v);
            }
            let proven = v
                .proven_by
                .iter()
                .map(|c| format!("{c:?}"))
                .collect::<Vec<_>>()
                .join("; ");
            print_rows(&[
                ("d, g", format!("{}, {}", v.d, v.g)),
                ("in_conjecture_range", v.in_conjecture_range.to_string()),
                (
                    "proven_by",
                    if proven.is_empty() {
                        "-".into()
                    } else {
                        proven
                    },
                ),
                ("existence", format!("{:?}", v.existence)),
                ("dim W", v.dim_w3.to_string()),
                ("notes", v.notes.join("; ")),
            ])
        }
        Command::Tuples { d, g, m6, format } => {
            let filter = (!m6.is_empty()).then_some(m6.as_slice());
            let found = enumerate_tuples(d, g, filter);
            if format.json {
                return print_json(&found);
            }
            let mut out = io::stdout().lock();
            for t in &found {
                let criterion = match tuple_criterion(t) {
                    Ok(true) => "  criterion",
                    _ => "",
                };
                writeln!(out, "{t}{criterion}")?;
            }
            Ok(())
        }
        Command::Maxgenus { d, s, format } => {
            let answer = max_genus(d, s)?;
            if format.json {
                return print_json(&answer);
            }
            writeln!(io::stdout(), "{answer}")?;
            Ok(())
        }
        Command::Audit { case, format } => {
            let case: AuditCase = case.parse()?;
            let transcript = audit_case(case)?;
            if format.json {
                print_json(&transcript)?;
            } else {
                let mut out = io::stdout().lock();
                writeln!(out, "audit {case}")?;
                for row in &transcript.rows {
                    let expected = row.expected.map_or("-".to_string(), |e| e.to_string());
                    writeln!(
                        out,
                        "  {:<11} {:>6} {:>6}  {}",
                        format!("{:?}", row.status),
                        row.computed,
                        expected,
                        row.claim
                    )?;
                    if let Some(note) = &row.note {
                        writeln!(out, "              note: {note}")?;
                    }
                }
                for c in &transcript.conclusions {
                    writeln!(out, "  {c}")?;
                }
            }
            let regressions = transcript
                .rows
                .iter()
                .filter(|r| r.status == RowStatus::Mismatch)
                .count()
                + transcript.conclusions.iter().filter(|c| !c.holds).count();
            if regressions > 0 {
                return Err(Failure::Regression(regressions));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_IO)
        }
        Err(Failure::Cap { cells, cap }) => {
            eprintln!("error: grid has {cells} cells, above the cap of {cap}");
            ExitCode::from(EXIT_CAP)
        }
        Err(Failure::Regression(n)) => {
            eprintln!("error: {n} audit row(s) or conclusion(s) no longer match");
            ExitCode::from(EXIT_AUDIT)
        }
    }
}
