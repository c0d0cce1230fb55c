//! Command-line front end. Data goes to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 success, 1 `--check` failure, 2 usage or validation error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bb_core::{toric_cell_signs, toric_phi, vertex_id, LatticePolygon};
use crate::cover::{cover_relations, dot, dominance_hasse, xi_hasse};
use crate::cup::{check_upper_triangular, may_be_nonzero, pairing_mask, Triangularity};
use crate::error::{Error, Result};
use crate::es_weights::{phi, Weight3};
use crate::generic_ideals::{generic_punctual, generic_staircase, generic_staircase_explicit};
use crate::orders::{OrderResult, Weight2, XiKind};
use crate::triples::{basis, betti, enumerate_triples, triple_compare, Triple};

#[derive(Parser, Debug)]
#[command(name = "hilbert-cells", version, about = "Cells, orders and vanishing masks for Hilbert schemes of points in the plane")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the cell labels of total size N, optionally of degree K.
    Cells {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Betti numbers b_0..b_2N.
    Betti {
        #[arg(long)]
        n: usize,
    },
    /// Hasse diagram of staircases of size M.
    Hasse {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum)]
        order: OrderName,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<Weight2>,
        /// Print the base order's edges plus the labelled extra edges.
        #[arg(long, value_enum)]
        diff_against: Option<BaseOrder>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Hasse diagram of <_lambda on the cells of degree K.
    TripleHasse {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Weight2,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Pairing mask of degree K against its dual degree.
    Pairing {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Weight2,
        /// Verify upper triangularity; exit 1 on failure.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = MaskFormat::Ascii)]
        format: MaskFormat,
    },
    /// Whether the product of two cell classes is forced to vanish.
    Cup {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        t: Triple,
        #[arg(long, allow_hyphen_values = true)]
        t2: Triple,
    },
    /// Generic staircase for a weight u (u1, u2 < 0) or, with --punctual, v (v1, v2 > 0).
    GenericStaircase {
        #[arg(long, allow_hyphen_values = true, required_unless_present = "punctual", conflicts_with = "punctual")]
        u: Option<Weight2>,
        #[arg(long)]
        n: usize,
        /// Use the interleaved sequence instead of sorting by <u, .>.
        #[arg(long, conflicts_with = "punctual")]
        explicit: bool,
        #[arg(long, requires = "v")]
        punctual: bool,
        #[arg(long, allow_hyphen_values = true)]
        v: Option<Weight2>,
    },
    /// Line-bundle weight at a cell for the torus weight w.
    Phi {
        #[arg(long, allow_hyphen_values = true)]
        w: Weight3,
        #[arg(long)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        triple: Triple,
    },
    /// Vertex weights, intersection mask and cell signs of a lattice polygon.
    ToricBb {
        /// JSON list of [x, y] vertices, counterclockwise.
        #[arg(long)]
        polytope: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Weight2,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ListFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MaskFormat {
    Ascii,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderName {
    Dominance,
    Mu,
    Nu,
    Lambda,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BaseOrder {
    Dominance,
}

/// Parses `argv` (including the program name) and runs the subcommand
/// against the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Like [`run`] with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let rendered = e.to_string();
            let line = rendered.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
            let _ = writeln!(err, "{line}");
            return 2;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        // Reader went away (e.g. `| head`); nothing left to report.
        Err(Error::Output { kind: std::io::ErrorKind::BrokenPipe, .. }) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Output { kind: e.kind(), message: e.to_string() }
}

fn to_pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes")
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Cells { n, k, format } => {
            let cells = match k {
                Some(k) => basis(n, k)?,
                None => enumerate_triples(n)?,
            };
            match format {
                ListFormat::Text => {
                    for t in &cells {
                        writeln!(out, "{t}").map_err(io)?;
                    }
                }
                ListFormat::Csv => {
                    writeln!(out, "triple,degree").map_err(io)?;
                    for t in &cells {
                        writeln!(out, "\"{t}\",{}", t.degree()).map_err(io)?;
                    }
                }
                ListFormat::Json => {
                    let items: Vec<_> = cells
                        .iter()
                        .map(|t| json!({"label": t.to_string(), "degree": t.degree(), "d2": t.d2, "d1": t.d1, "d0": t.d0}))
                        .collect();
                    writeln!(out, "{}", to_pretty(&json!(items))).map_err(io)?;
                }
            }
        }
        Command::Betti { n } => {
            let b: Vec<String> = betti(n)?.iter().map(usize::to_string).collect();
            writeln!(out, "{}", b.join(",")).map_err(io)?;
        }
        Command::Hasse {
            m,
            order,
            lambda,
            diff_against,
            format,
        } => {
            let kind = match order {
                OrderName::Dominance => None,
                OrderName::Mu => Some(XiKind::Mu),
                OrderName::Nu => Some(XiKind::Nu),
                OrderName::Lambda => Some(XiKind::Lambda(
                    lambda.ok_or_else(|| Error::Parse("--order lambda needs --lambda l1,l2".into()))?,
                )),
            };
            let cover = match kind {
                None => dominance_hasse(m)?,
                Some(kind) => xi_hasse(m, kind)?,
            };
            let label = kind.map_or("dominance", |k| k.name());
            let text = match diff_against {
                None => match format {
                    GraphFormat::Dot => cover.to_dot(),
                    GraphFormat::Json => to_pretty(&cover.to_json()),
                },
                Some(BaseOrder::Dominance) => {
                    let base = dominance_hasse(m)?;
                    let extra = cover.difference(&base);
                    match format {
                        GraphFormat::Dot => dot(&base.nodes, &[(&base, None), (&extra, Some(label))]),
                        GraphFormat::Json => to_pretty(&json!({
                            "base": base.to_json(),
                            "order": label,
                            "extra": extra.to_json(),
                        })),
                    }
                }
            };
            write!(out, "{}", text.trim_end()).map_err(io)?;
            writeln!(out).map_err(io)?;
        }
        Command::TripleHasse { n, k, lambda, format } => {
            let cells = basis(n, k)?;
            let mut failure = None;
            let cover = cover_relations(&cells, |a, b| match triple_compare(lambda, a, b) {
                Ok(r) => r == OrderResult::Less,
                Err(e) => {
                    failure.get_or_insert(e);
                    false
                }
            });
            if let Some(e) = failure {
                return Err(e);
            }
            let cover = cover?;
            let text = match format {
                GraphFormat::Dot => cover.to_dot(),
                GraphFormat::Json => to_pretty(&cover.to_json()),
            };
            writeln!(out, "{}", text.trim_end()).map_err(io)?;
        }
        Command::Pairing {
            n,
            k,
            lambda,
            check,
            format,
        } => {
            let mask = pairing_mask(n, k, lambda)?;
            match format {
                MaskFormat::Ascii => write!(out, "{}", mask.to_ascii()),
                MaskFormat::Csv => write!(out, "{}", mask.to_csv()),
                MaskFormat::Json => writeln!(out, "{}", to_pretty(&mask.to_json())),
            }
            .map_err(io)?;
            if check {
                match check_upper_triangular(&mask) {
                    Triangularity::Pass { blocks } => {
                        let sizes: Vec<String> = blocks.iter().map(usize::to_string).collect();
                        writeln!(
                            out,
                            "check: upper triangular, {} diagonal blocks of sizes {}",
                            blocks.len(),
                            sizes.join(", ")
                        )
                        .map_err(io)?;
                    }
                    Triangularity::Fail { i, j, row, col, reason } => {
                        writeln!(out, "check: FAILED at ({}, {}) row {row} col {col}: {reason}", i + 1, j + 1)
                            .map_err(io)?;
                        return Ok(1);
                    }
                }
            }
        }
        Command::Cup { n, t, t2 } => {
            for x in [&t, &t2] {
                if x.total() != n {
                    return Err(Error::SizeMismatch { left: x.total(), right: n });
                }
            }
            let verdict = if may_be_nonzero(&t, &t2)? { "MAY_BE_NONZERO" } else { "MUST_VANISH" };
            writeln!(out, "{verdict}").map_err(io)?;
        }
        Command::GenericStaircase {
            u,
            n,
            explicit,
            punctual,
            v,
        } => {
            let gamma = if punctual {
                generic_punctual(v.expect("clap requires --v"), n)?
            } else {
                let u = u.expect("clap requires --u");
                if explicit {
                    generic_staircase_explicit(u, n)?
                } else {
                    generic_staircase(u, n)?
                }
            };
            writeln!(out, "{gamma}").map_err(io)?;
        }
        Command::Phi { w, d, triple } => {
            writeln!(out, "{}", phi(&w, d, &triple)?).map_err(io)?;
        }
        Command::ToricBb { polytope, lambda } => {
            let text = std::fs::read_to_string(&polytope)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", polytope.display())))?;
            let poly: LatticePolygon =
                serde_json::from_str(&text).map_err(|e| Error::InvalidPolygon(e.to_string()))?;
            let table = toric_phi(&poly, lambda)?;
            let signs = poly
                .vertices()
                .iter()
                .map(|&v| {
                    toric_cell_signs(&poly, v, lambda).map(|s| {
                        json!({
                            "vertex": vertex_id(v),
                            "up": s.up.iter().map(|&p| vertex_id(p)).collect::<Vec<_>>(),
                            "down": s.down.iter().map(|&p| vertex_id(p)).collect::<Vec<_>>(),
                        })
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let report = json!({
                "lambda": [lambda.xi1, lambda.xi2],
                "smooth": poly.is_smooth(),
                "table": table.entries(),
                "mask": table.allowed_mask(),
                "signs": signs,
            });
            writeln!(out, "{}", to_pretty(&report)).map_err(io)?;
        }
    }
    Ok(0)
}
