//! Command-line surface for the nsymkit library: basis conversion,
//! polynomial realization, transition-matrix export, duality pairing,
//! wall listings, and the verification suites.
//!
//! Exit codes: 0 when everything succeeded (and all selected checks
//! passed), 1 when a verification suite reports a failure, 2 for usage
//! or parse errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nsymkit::compositions::{Composition, Partition};
use nsymkit::notation::{collect_terms, parse_composition, parse_linear_combination};
use nsymkit::nsym::{NSymBasis, NSymElem};
use nsymkit::polyreal::{CAlgebra, CGenerator, CPoly, NcAlgebra, NcGenerator, NcPoly};
use nsymkit::qsym::{pair, QSymBasis, QSymElem};
use nsymkit::rational::format_rat;
use nsymkit::report::Report;
use nsymkit::transmat::{named_matrix, nsym_cob, qsym_cob, NamedMatrix, TransitionMatrix};
use nsymkit::verify::{run_suite, Suite};
use nsymkit::walls::{walls_of_shape, walls_of_type, Wall, WallStat};

mod render;

use render::{
    cpoly_json, element_json_nsym, element_json_qsym, matrix_json, ncpoly_json, report_json,
    wall_json,
};

const DEGREE_CAP_VAR: &str = "NSYMKIT_MAX_DEGREE";
const DEFAULT_DEGREE_CAP: u32 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "nsymkit",
    about = "Exact computer algebra for noncommutative symmetric and quasisymmetric functions",
    version
)]
struct Cli {
    /// Output format; csv only applies to matrices.
    #[arg(long, global = true, value_enum, default_value = "pretty")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand an element in another basis.
    Convert {
        /// Which space the expression lives in.
        #[arg(value_parser = ["nsym", "qsym"])]
        space: String,
        /// A linear combination such as `psi[3]` or `r[2,1] + 3/2 r[1,1,1]`.
        expr: String,
        /// Target basis tag (r, h, e, psi, phi or M, F, For, Psi, Phi).
        #[arg(long)]
        to: String,
    },
    /// Print a change-of-basis or named structural matrix.
    Matrix {
        #[command(subcommand)]
        which: MatrixCommand,
        /// Shorthand for --format csv.
        #[arg(long, global = true)]
        csv: bool,
    },
    /// Run a verification suite; exits 1 on any failed check.
    Verify {
        /// One of: all, series, matrices, walls, bricks, duality.
        suite: String,
        /// Maximum degree.
        #[arg(long, default_value_t = 6)]
        n: u32,
    },
    /// Realize a generator as a truncated polynomial.
    Realize {
        /// The generator, e.g. `psi 3`, `ribbon 2,1`, `h 2`.
        gen: String,
        /// Number of variables; defaults to the generator's degree.
        #[arg(long)]
        m: Option<usize>,
        /// Which family of generators: nsym (noncommuting), sym or qsym
        /// (commuting).
        #[arg(long, default_value = "nsym", value_parser = ["nsym", "sym", "qsym"])]
        space: String,
    },
    /// List walls of a shape or type, or show one wall with statistics.
    Walls(WallsArgs),
    /// Pair a quasisymmetric expression against a noncommutative one.
    Pair {
        /// Quasisymmetric linear combination, e.g. `F[2,1]`.
        qexpr: String,
        /// Noncommutative linear combination, e.g. `r[2,1]`.
        nexpr: String,
    },
}

#[derive(Debug, Subcommand)]
enum MatrixCommand {
    /// Change of basis on the noncommutative side.
    Nsym { from: String, to: String, n: u32 },
    /// Change of basis on the quasisymmetric side.
    Qsym { from: String, to: String, n: u32 },
    /// A named structural matrix: K, eps, z, J_psi, J_rho, J_omega,
    /// L_psi, L_phi.
    Named { name: String, n: u32 },
}

#[derive(Debug, Args)]
struct WallsArgs {
    /// Shape composition, e.g. 1,6,2,4.
    #[arg(long)]
    shape: Option<String>,
    /// Brick type composition, e.g. 1,1,3,2,2,3,1.
    #[arg(long = "type")]
    brick_type: Option<String>,
    /// Print the lp, fp, pb, and fb statistics with each wall.
    #[arg(long)]
    stats: bool,
}

fn main() -> ExitCode {
    // Die quietly when the output pipe closes (e.g. piping into head).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn degree_cap() -> Result<u32, String> {
    match std::env::var(DEGREE_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse::<u32>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| format!("{DEGREE_CAP_VAR} must be a positive integer, found {v:?}")),
        Err(_) => Ok(DEFAULT_DEGREE_CAP),
    }
}

fn check_cap(n: u32) -> Result<(), String> {
    let cap = degree_cap()?;
    if n > cap {
        return Err(format!(
            "degree {n} exceeds the cap {cap}; raise {DEGREE_CAP_VAR} to override"
        ));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let format = cli.format;
    match cli.command {
        Command::Convert { space, expr, to } => {
            let rendered = match space.as_str() {
                "nsym" => {
                    let elem = parse_nsym_expr(&expr)?;
                    let target = NSymBasis::from_tag(&to).map_err(|e| e.to_string())?;
                    let out = elem.convert(target);
                    match format {
                        Format::Pretty => out.to_string(),
                        Format::Json => element_json_nsym(&out).to_string(),
                        Format::Csv => return Err("csv output is only available for matrices".into()),
                    }
                }
                "qsym" => {
                    let elem = parse_qsym_expr(&expr)?;
                    let target = QSymBasis::from_tag(&to).map_err(|e| e.to_string())?;
                    let out = elem.convert(target);
                    match format {
                        Format::Pretty => out.to_string(),
                        Format::Json => element_json_qsym(&out).to_string(),
                        Format::Csv => return Err("csv output is only available for matrices".into()),
                    }
                }
                other => return Err(format!("unknown space {other:?}")),
            };
            println!("{rendered}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Matrix { which, csv } => {
            let format = if csv { Format::Csv } else { format };
            let (matrix, description) = build_matrix(which)?;
            match format {
                Format::Pretty => print!("{matrix}"),
                Format::Csv => print!("{}", matrix.to_csv()),
                Format::Json => println!("{}", matrix_json(&description, &matrix)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, n } => {
            check_cap(n)?;
            let suite_kind =
                Suite::from_name(&suite).ok_or_else(|| format!("unknown suite {suite:?}"))?;
            let report = run_suite(suite_kind, n);
            match format {
                Format::Pretty => {
                    print!("{report}");
                    println!(
                        "{}: {}",
                        if report.passed() { "ok" } else { "FAILED" },
                        summary_counts(&report)
                    );
                }
                Format::Json => println!("{}", report_json(&suite, n, &report)),
                Format::Csv => return Err("csv output is only available for matrices".into()),
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Realize { gen, m, space } => {
            let rendered = realize(&gen, m, &space, format)?;
            println!("{rendered}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Walls(args) => {
            let rendered = walls_command(args, format)?;
            print!("{rendered}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Pair { qexpr, nexpr } => {
            let q = parse_qsym_expr(&qexpr)?;
            let ns = parse_nsym_expr(&nexpr)?;
            let value = pair(&q, &ns);
            match format {
                Format::Pretty => println!("{}", format_rat(&value)),
                Format::Json => {
                    println!("{}", serde_json::json!({ "value": format_rat(&value) }))
                }
                Format::Csv => return Err("csv output is only available for matrices".into()),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn summary_counts(report: &Report) -> String {
    let failed = report.failures().count();
    if failed == 0 {
        format!("{} checks passed", report.len())
    } else {
        format!("{failed} of {} checks failed", report.len())
    }
}

fn parse_nsym_expr(expr: &str) -> Result<NSymElem, String> {
    let terms = parse_linear_combination(expr, &["r", "h", "e", "psi", "phi"])
        .map_err(|e| e.to_string())?;
    let (degree, terms) = collect_terms(terms).map_err(|e| e.to_string())?;
    // Mixed-basis input is allowed; every term converts to the basis of
    // the first one.
    let target = NSymBasis::from_tag(&terms.first().map(|t| t.tag.clone()).unwrap_or_default())
        .unwrap_or(NSymBasis::Ribbon);
    let mut acc = NSymElem::zero(degree, target);
    for t in terms {
        let basis = NSymBasis::from_tag(&t.tag).map_err(|e| e.to_string())?;
        acc = acc.add(&NSymElem::basis_vector(basis, t.index).scale(&t.coeff));
    }
    Ok(acc)
}

fn parse_qsym_expr(expr: &str) -> Result<QSymElem, String> {
    let terms = parse_linear_combination(expr, &["M", "F", "For", "Psi", "Phi"])
        .map_err(|e| e.to_string())?;
    let (degree, terms) = collect_terms(terms).map_err(|e| e.to_string())?;
    let target = QSymBasis::from_tag(&terms.first().map(|t| t.tag.clone()).unwrap_or_default())
        .unwrap_or(QSymBasis::Monomial);
    let mut acc = QSymElem::zero(degree, target);
    for t in terms {
        let basis = QSymBasis::from_tag(&t.tag).map_err(|e| e.to_string())?;
        acc = acc.add(&QSymElem::basis_vector(basis, t.index).scale(&t.coeff));
    }
    Ok(acc)
}

fn build_matrix(which: MatrixCommand) -> Result<(TransitionMatrix, String), String> {
    match which {
        MatrixCommand::Nsym { from, to, n } => {
            check_cap(n)?;
            let from_basis = NSymBasis::from_tag(&from).map_err(|e| e.to_string())?;
            let to_basis = NSymBasis::from_tag(&to).map_err(|e| e.to_string())?;
            Ok((
                nsym_cob(from_basis, to_basis, n),
                format!("nsym {from} to {to} at degree {n}"),
            ))
        }
        MatrixCommand::Qsym { from, to, n } => {
            check_cap(n)?;
            let from_basis = QSymBasis::from_tag(&from).map_err(|e| e.to_string())?;
            let to_basis = QSymBasis::from_tag(&to).map_err(|e| e.to_string())?;
            Ok((
                qsym_cob(from_basis, to_basis, n),
                format!("qsym {from} to {to} at degree {n}"),
            ))
        }
        MatrixCommand::Named { name, n } => {
            check_cap(n)?;
            let which = NamedMatrix::from_name(&name).map_err(|e| e.to_string())?;
            Ok((named_matrix(which, n), format!("{name} at degree {n}")))
        }
    }
}

fn realize(gen: &str, m: Option<usize>, space: &str, format: Format) -> Result<String, String> {
    let (name, arg) = gen
        .trim()
        .split_once(char::is_whitespace)
        .ok_or_else(|| format!("expected \"<name> <argument>\", found {gen:?}"))?;
    let arg = arg.trim();
    let int_arg = || -> Result<u32, String> {
        arg.parse::<u32>()
            .map_err(|_| format!("expected an integer argument, found {arg:?}"))
    };
    let comp_arg = || -> Result<Composition, String> {
        parse_composition(arg).map_err(|e| e.to_string())
    };

    match space {
        "nsym" => {
            let generator = match name {
                "ribbon" | "r" => NcGenerator::Ribbon(comp_arg()?),
                "h" => NcGenerator::Complete(int_arg()?),
                "e" => NcGenerator::Elementary(int_arg()?),
                "psi" => NcGenerator::PowerSumFirst(int_arg()?),
                "phi" => NcGenerator::PowerSumSecond(int_arg()?),
                other => return Err(format!("unknown noncommutative generator {other:?}")),
            };
            let degree = match &generator {
                NcGenerator::Ribbon(a) => a.size() as usize,
                NcGenerator::Complete(k)
                | NcGenerator::Elementary(k)
                | NcGenerator::PowerSumFirst(k)
                | NcGenerator::PowerSumSecond(k) => *k as usize,
            };
            check_cap(degree as u32)?;
            let vars = m.unwrap_or(degree.max(1));
            let algebra = NcAlgebra::with_cap(vars, degree.max(1)).map_err(|e| e.to_string())?;
            let poly = algebra.realize(&generator).map_err(|e| e.to_string())?;
            Ok(render_ncpoly(&poly, format)?)
        }
        "sym" | "qsym" => {
            let generator = match (space, name) {
                ("sym", "e") => CGenerator::Elementary(int_arg()?),
                ("sym", "h") => CGenerator::Complete(int_arg()?),
                ("sym", "p") => CGenerator::Power(int_arg()?),
                ("sym", "m") => {
                    let c = comp_arg()?;
                    CGenerator::MonomialSym(
                        Partition::new(c.parts().to_vec()).map_err(|e| e.to_string())?,
                    )
                }
                ("qsym", "M") => CGenerator::MonomialQsym(comp_arg()?),
                ("qsym", "F") => CGenerator::Fundamental(comp_arg()?),
                (_, other) => {
                    return Err(format!("unknown {space} generator {other:?}"))
                }
            };
            let degree = match &generator {
                CGenerator::Elementary(k) | CGenerator::Complete(k) | CGenerator::Power(k) => {
                    *k as usize
                }
                CGenerator::MonomialSym(p) => p.size() as usize,
                CGenerator::MonomialQsym(a) | CGenerator::Fundamental(a) => a.size() as usize,
            };
            check_cap(degree as u32)?;
            let vars = m.unwrap_or(degree.max(1));
            let algebra = CAlgebra::with_cap(vars, degree.max(1)).map_err(|e| e.to_string())?;
            let poly = algebra.realize(&generator).map_err(|e| e.to_string())?;
            Ok(render_cpoly(&poly, format)?)
        }
        other => Err(format!("unknown space {other:?}")),
    }
}

fn render_ncpoly(poly: &NcPoly, format: Format) -> Result<String, String> {
    match format {
        Format::Pretty => Ok(poly.to_string()),
        Format::Json => Ok(ncpoly_json(poly).to_string()),
        Format::Csv => Err("csv output is only available for matrices".into()),
    }
}

fn render_cpoly(poly: &CPoly, format: Format) -> Result<String, String> {
    match format {
        Format::Pretty => Ok(poly.to_string()),
        Format::Json => Ok(cpoly_json(poly).to_string()),
        Format::Csv => Err("csv output is only available for matrices".into()),
    }
}

fn walls_command(args: WallsArgs, format: Format) -> Result<String, String> {
    let shape = args
        .shape
        .as_deref()
        .map(parse_composition)
        .transpose()
        .map_err(|e| e.to_string())?;
    let brick_type = args
        .brick_type
        .as_deref()
        .map(parse_composition)
        .transpose()
        .map_err(|e| e.to_string())?;
    let walls: Vec<Wall> = match (&shape, &brick_type) {
        (Some(s), Some(t)) => vec![Wall::new(s, t).map_err(|e| e.to_string())?],
        (Some(s), None) => walls_of_shape(s),
        (None, Some(t)) => walls_of_type(t),
        (None, None) => return Err("pass --shape and/or --type".into()),
    };
    match format {
        Format::Csv => Err("csv output is only available for matrices".into()),
        Format::Json => {
            let items: Vec<serde_json::Value> =
                walls.iter().map(|w| wall_json(w, args.stats)).collect();
            Ok(format!("{}\n", serde_json::Value::Array(items)))
        }
        Format::Pretty => {
            let mut out = String::new();
            for (i, w) in walls.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                out.push_str(&format!("{w}\n"));
                out.push_str(&w.render());
                if args.stats {
                    out.push_str(&format!(
                        "lp={} fp={} pb={} fb={}\n",
                        format_rat(&w.stat(WallStat::LastParts)),
                        format_rat(&w.stat(WallStat::FirstParts)),
                        format_rat(&w.stat(WallStat::BrickCounts)),
                        format_rat(&w.stat(WallStat::BrickCountFactorials)),
                    ));
                }
            }
            Ok(out)
        }
    }
}
