//! Command-line front end. All logic lives in the library; the binary only
//! parses arguments, dispatches and formats.
//!
//! Exit codes: 0 on success or when every requested verification passed,
//! 1 when a verification failed, 2 on usage errors.

use std::io::Write;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::algebra::Int;
use crate::moves::{d_move_count, double_move_return_count, move_return_count};
use crate::rsk::{bijection_check, search_trajectory, search_trajectory_tree, ShapeTrajectory};
use crate::series::{
    all_identities, dobinski, egf_check, lambert_w, ogf_check, oeis_check, q_colourings,
    round_to_nearest, table, verify_identity, AsymptoticReport, DobinskiVariant, IdentityName,
    Method, Variant,
};
use crate::shuffles::{count_identity_sequences_with_cap, ShuffleFamily, DEFAULT_GROUP_CAP};
use crate::spectra::verify_spectrum;
use crate::structures::{GroupFamily, Permutation};

#[derive(Parser)]
#[command(
    name = "bellmoves",
    version,
    about = "Exact counts, identities and spectra for shuffles and partition moves in types A, B and D"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a single count.
    Count(CountArgs),
    /// Print a (t, n) table of a count family.
    Table(TableArgs),
    /// Check one identity, or the whole identity list.
    Verify(VerifyArgs),
    /// Verify the eigenvalue multiset of a shuffle chain.
    Spectrum(SpectrumArgs),
    /// Insertion shapes: trajectory search and the bijection comparison.
    #[command(subcommand)]
    Rsk(RskCommand),
    /// Generating functions, Dobinski sums, asymptotics, colourings, OEIS.
    #[command(subcommand)]
    Series(SeriesCommand),
    /// Run acceptance criteria and print one line per criterion.
    Suite(SuiteArgs),
}

#[derive(Args)]
struct CountArgs {
    /// One of B, Bprime, Bdagger, Bdaggerprime, S, Sprime, Sdagger,
    /// Sdaggerprime, Sddagger, Sddaggerprime, M, Mprime, Mdagger,
    /// Mdaggerprime, Mddagger, Mddaggerprime, stir, stirprime, stirdagger,
    /// stirdaggerprime, stirstar, stirdaggerstar, stirddagger,
    /// stirddaggerprime.
    #[arg(long)]
    variant: String,
    #[arg(long)]
    t: u64,
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
    max_group_order: u64,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    variant: String,
    #[arg(long, default_value_t = 10)]
    t_max: u64,
    #[arg(long, default_value_t = 6)]
    n_max: u32,
    /// enumeration | recurrence | closed-form | transfer-matrix | shuffle-dp
    #[arg(long, default_value = "recurrence")]
    method: String,
    #[arg(long, conflicts_with = "json")]
    csv: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity name; see `verify --all` for the list.
    #[arg(long, conflicts_with = "all")]
    identity: Option<String>,
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = 10)]
    t_max: u64,
    #[arg(long, default_value_t = 6)]
    n_max: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SpectrumArgs {
    /// A, B or D.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long)]
    exclude_identity: bool,
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
    max_group_order: u64,
}

#[derive(Subcommand)]
enum RskCommand {
    /// Find all shuffle sequences realizing a shape trajectory.
    Search {
        #[arg(long)]
        n: usize,
        /// Comma-separated partitions, e.g. "(5),(4,1),(3,2)".
        #[arg(long)]
        trajectory: String,
        /// List the realizing sequences.
        #[arg(long)]
        list: bool,
        /// Emit the full pruned search tree as JSON.
        #[arg(long)]
        tree_json: bool,
    },
    /// Compare sequence counts with move-path counts per trajectory.
    Check {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        json: bool,
    },
    /// Insertion shape of a permutation in one-line notation, e.g. "[2,1,3]".
    Shape {
        #[arg(long)]
        perm: String,
    },
}

#[derive(Subcommand)]
enum SeriesCommand {
    /// Exponential generating function check for a Bell-family diagonal.
    Egf {
        #[arg(long)]
        variant: String,
        #[arg(long, default_value_t = 12)]
        order: u64,
    },
    /// Ordinary generating function check for a Stirling-family column.
    Ogf {
        #[arg(long)]
        variant: String,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 12)]
        order: u64,
    },
    /// Dobinski-type partial sum with a rigorous error bound.
    Dobinski {
        #[arg(long)]
        variant: String,
        #[arg(long)]
        t: u64,
        #[arg(long, default_value_t = 60)]
        terms: u64,
    },
    /// Lambert W on the nonnegative reals.
    Lambertw {
        #[arg(long)]
        x: f64,
    },
    /// Deviation-from-leading-term trend tables.
    Asymptotics,
    /// Compare computed prefixes against the embedded OEIS constants.
    Oeis,
    /// Row colourings by unlabelled colour pairs.
    Qcolour {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        n: u32,
    },
}

#[derive(Args)]
struct SuiteArgs {
    /// Run everything (the default).
    #[arg(long)]
    all: bool,
    /// Run a single criterion by id (1..=12).
    #[arg(long, conflicts_with = "all")]
    only: Option<u32>,
    /// Worker threads; BELLMOVES_THREADS also caps this.
    #[arg(long)]
    threads: Option<usize>,
}

/// Entry point used by the binary: parses `std::env::args`, writes to
/// stdout, returns the process exit code.
pub fn run() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    let stdout = std::io::stdout();
    run_from(args, &mut stdout.lock())
}

/// Testable entry point: parse the given arguments and write all normal
/// output to `out`.
pub fn run_from<W: Write>(args: Vec<String>, out: &mut W) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own message; --help and --version exit 0
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(out, "{e}");
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            2
        }
    }
}

fn dispatch<W: Write>(command: Command, out: &mut W) -> crate::Result<i32> {
    match command {
        Command::Count(args) => {
            let value = compute_count(&args)?;
            w(out, format!("{value}"));
            Ok(0)
        }
        Command::Table(args) => {
            let variant = Variant::from_str(&args.variant)?;
            let method = Method::from_str(&args.method)?;
            let t = table(variant, args.t_max, args.n_max, method)?;
            if args.csv {
                w(out, t.to_csv().trim_end().to_string());
            } else if args.json {
                w(out, t.to_json());
            } else {
                render_table(out, &t);
            }
            Ok(0)
        }
        Command::Verify(args) => {
            let names: Vec<IdentityName> = match (&args.identity, args.all) {
                (Some(name), _) => vec![IdentityName::from_str(name)?],
                (None, _) => all_identities(),
            };
            let mut all_passed = true;
            for name in names {
                let report = verify_identity(name, args.t_max, args.n_max);
                all_passed &= report.passed();
                if args.json {
                    w(out, report.to_json());
                } else {
                    let status = if report.passed() { "pass" } else { "FAIL" };
                    w(out, format!("{status} {} over {}", report.name, report.range));
                    for f in &report.failures {
                        w(out, format!("  {f}"));
                    }
                }
            }
            Ok(if all_passed { 0 } else { 1 })
        }
        Command::Spectrum(args) => {
            let family = GroupFamily::from_str(&args.family)?;
            let chain = ShuffleFamily::new(family, args.n, args.k, args.exclude_identity)?;
            let report = verify_spectrum(&chain, args.max_group_order)?;
            if args.json {
                w(out, report.to_json());
            } else {
                let eigen: Vec<String> = report
                    .predicted
                    .iter()
                    .map(|(v, m)| format!("{}:{m}", crate::algebra::format_rat(v)))
                    .collect();
                w(
                    out,
                    format!(
                        "{} over {} moments: eigenvalues {}",
                        if report.verdict { "pass" } else { "FAIL" },
                        report.moments_checked,
                        eigen.join(" ")
                    ),
                );
            }
            Ok(if report.verdict { 0 } else { 1 })
        }
        Command::Rsk(command) => rsk_command(command, out),
        Command::Series(command) => series_command(command, out),
        Command::Suite(args) => {
            if let Some(id) = args.only {
                if !crate::suite::criterion_ids().contains(&id) {
                    return Err(crate::Error::invalid(
                        "criterion",
                        format!("no criterion {id}; ids run 1..=12"),
                    ));
                }
            }
            let results = crate::suite::run(args.only, args.threads);
            let mut all_passed = true;
            for r in &results {
                all_passed &= r.passed;
                w(out, r.line());
            }
            w(
                out,
                format!(
                    "{}/{} criteria passed",
                    results.iter().filter(|r| r.passed).count(),
                    results.len()
                ),
            );
            Ok(if all_passed { 0 } else { 1 })
        }
    }
}

fn compute_count(args: &CountArgs) -> crate::Result<Int> {
    let t = args.t;
    let n = args.n;
    let cap = args.max_group_order;
    let shuffle = |family: GroupFamily, exclude: bool| -> crate::Result<Int> {
        if n == 0 {
            return Ok(Int::from((t == 0) as u64));
        }
        let spec = ShuffleFamily::random_to_top(family, n as usize, exclude)?;
        count_identity_sequences_with_cap(&spec, t, cap)
    };
    let table_cell = |variant: Variant| -> crate::Result<Int> {
        Ok(table(variant, t, n, Method::Recurrence)?.get(t, n).clone())
    };
    match args.variant.as_str() {
        "B" => Ok(table(Variant::Bell, t, n, Method::Enumeration)?.get(t, n).clone()),
        "Bprime" => Ok(table(Variant::BellPrime, t, n, Method::Enumeration)?.get(t, n).clone()),
        "Bdagger" => Ok(table(Variant::BellB, t, n, Method::Enumeration)?.get(t, n).clone()),
        "Bdaggerprime" => {
            Ok(table(Variant::BellBPrime, t, n, Method::Enumeration)?.get(t, n).clone())
        }
        "S" => shuffle(GroupFamily::A, false),
        "Sprime" => shuffle(GroupFamily::A, true),
        "Sdagger" => shuffle(GroupFamily::B, false),
        "Sdaggerprime" => shuffle(GroupFamily::B, true),
        "Sddagger" => shuffle(GroupFamily::D, false),
        "Sddaggerprime" => shuffle(GroupFamily::D, true),
        "M" => Ok(move_return_count(n, t, false)),
        "Mprime" => Ok(move_return_count(n, t, true)),
        "Mdagger" => Ok(double_move_return_count(n, t, false)),
        "Mdaggerprime" => Ok(double_move_return_count(n, t, true)),
        "Mddagger" => d_move_count(n, t, false),
        "Mddaggerprime" => d_move_count(n, t, true),
        "stir" => table_cell(Variant::Stir),
        "stirprime" => table_cell(Variant::StirPrime),
        "stirdagger" => table_cell(Variant::StirB),
        "stirdaggerprime" => table_cell(Variant::StirBPrime),
        "stirstar" => table_cell(Variant::StirStar),
        "stirdaggerstar" => table_cell(Variant::StirBStar),
        "stirddagger" => Ok(table(Variant::StirD, t, n, Method::TransferMatrix)?.get(t, n).clone()),
        "stirddaggerprime" => {
            Ok(table(Variant::StirDPrime, t, n, Method::TransferMatrix)?.get(t, n).clone())
        }
        other => Err(crate::Error::invalid("variant", format!("unknown count variant {other:?}"))),
    }
}

fn rsk_command<W: Write>(command: RskCommand, out: &mut W) -> crate::Result<i32> {
    match command {
        RskCommand::Search { n, trajectory, list, tree_json } => {
            let trajectory: ShapeTrajectory = trajectory.parse()?;
            let sequences = search_trajectory(n, &trajectory)?;
            w(out, format!("{} sequences", sequences.len()));
            if list {
                for seq in &sequences {
                    let names: Vec<String> = seq.iter().map(|m| format!("s{m}")).collect();
                    w(out, format!("  [{}]", names.join(",")));
                }
            }
            if tree_json {
                w(out, search_trajectory_tree(n, &trajectory)?);
            }
            Ok(0)
        }
        RskCommand::Check { n, t, json } => {
            let report = bijection_check(n, t)?;
            if json {
                let mismatches: Vec<serde_json::Value> = report
                    .mismatches
                    .iter()
                    .map(|m| {
                        serde_json::json!({
                            "trajectory": m.trajectory.to_string(),
                            "sequences": m.sequences.to_string(),
                            "move_paths": m.move_paths.to_string(),
                        })
                    })
                    .collect();
                w(
                    out,
                    serde_json::json!({
                        "n": report.n,
                        "t": report.t,
                        "trajectories": report.trajectories,
                        "mismatches": mismatches,
                        "total_sequences": report.total_sequences.to_string(),
                        "total_move_paths": report.total_move_paths.to_string(),
                    })
                    .to_string(),
                );
            } else {
                w(
                    out,
                    format!(
                        "{} trajectories, {} mismatches, totals {} vs {}",
                        report.trajectories,
                        report.mismatches.len(),
                        report.total_sequences,
                        report.total_move_paths
                    ),
                );
                for m in &report.mismatches {
                    w(
                        out,
                        format!(
                            "  {}: {} sequences, {} move paths",
                            m.trajectory, m.sequences, m.move_paths
                        ),
                    );
                }
            }
            Ok(0)
        }
        RskCommand::Shape { perm } => {
            let images: Vec<u32> = perm
                .trim()
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| crate::Error::invalid("permutation", "expected [..] notation"))?
                .split(',')
                .map(|p| {
                    p.trim().parse::<u32>().map_err(|e| {
                        crate::Error::invalid("permutation", format!("image {p:?}: {e}"))
                    })
                })
                .collect::<crate::Result<_>>()?;
            let p = Permutation::new(images)?;
            w(out, crate::rsk::rsk_shape(&p).to_string());
            Ok(0)
        }
    }
}

fn series_command<W: Write>(command: SeriesCommand, out: &mut W) -> crate::Result<i32> {
    match command {
        SeriesCommand::Egf { variant, order } => {
            let report = egf_check(Variant::from_str(&variant)?, order)?;
            w(out, gf_line(&report));
            Ok(if report.passed() { 0 } else { 1 })
        }
        SeriesCommand::Ogf { variant, n, order } => {
            let report = ogf_check(Variant::from_str(&variant)?, n, order)?;
            w(out, gf_line(&report));
            Ok(if report.passed() { 0 } else { 1 })
        }
        SeriesCommand::Dobinski { variant, t, terms } => {
            let variant = match variant.as_str() {
                "B" => DobinskiVariant::Bell,
                "Bprime" => DobinskiVariant::BellPrime,
                "Bdagger" => DobinskiVariant::BellB,
                "Bdaggerprime" => DobinskiVariant::BellBPrime,
                other => {
                    return Err(crate::Error::invalid(
                        "variant",
                        format!("dobinski knows B, Bprime, Bdagger, Bdaggerprime, not {other:?}"),
                    ))
                }
            };
            let sum = dobinski(variant, t, terms)?;
            w(out, format!("value  {}", crate::algebra::format_rat(&sum.value)));
            w(out, format!("bound  {}", crate::algebra::format_rat(&sum.bound)));
            w(out, format!("rounds {}", round_to_nearest(&sum.value)));
            Ok(0)
        }
        SeriesCommand::Lambertw { x } => {
            w(out, format!("{:.15}", lambert_w(x)?));
            Ok(0)
        }
        SeriesCommand::Asymptotics => {
            let report = AsymptoticReport::standard()?;
            w(out, report.render().trim_end().to_string());
            Ok(if report.strictly_decreasing() { 0 } else { 1 })
        }
        SeriesCommand::Oeis => {
            let checks = oeis_check();
            let mut all_ok = true;
            for c in &checks {
                all_ok &= c.matches();
                w(
                    out,
                    format!(
                        "{} {}: {}",
                        if c.matches() { "pass" } else { "FAIL" },
                        c.sequence,
                        c.description
                    ),
                );
            }
            Ok(if all_ok { 0 } else { 1 })
        }
        SeriesCommand::Qcolour { t, n } => {
            if t == 0 || n == 0 {
                return Err(crate::Error::invalid("colouring", "needs t >= 1 and n >= 1"));
            }
            w(out, q_colourings(t, n).to_string());
            Ok(0)
        }
    }
}

fn gf_line(report: &crate::series::GfReport) -> String {
    if report.passed() {
        format!("pass {} to order {}", report.what, report.order)
    } else {
        format!("FAIL {}: {}", report.what, report.mismatches.join("; "))
    }
}

fn render_table<W: Write>(out: &mut W, t: &crate::series::CountTable) {
    let mut header = format!("{:>4}", "t\\n");
    for n in 0..=t.n_max() {
        header.push_str(&format!(" {n:>12}"));
    }
    w(out, format!("{} by {}", t.variant.name(), t.method.name()));
    w(out, header);
    for row in 0..=t.t_max() {
        let mut line = format!("{row:>4}");
        for n in 0..=t.n_max() {
            line.push_str(&format!(" {:>12}", t.get(row, n).to_string()));
        }
        w(out, line);
    }
}

fn w<W: Write>(out: &mut W, line: String) {
    writeln!(out, "{line}").expect("write to output");
}
