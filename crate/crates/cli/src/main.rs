//! `bei`: binomial edge ideals of graphs, their lex initial ideals, graded
//! Betti tables by two independent engines, and exhaustive verification
//! sweeps over small proper interval graphs.
//!
//! Exit codes: 0 success/clean, 1 input error, 2 negative domain answer
//! (not proper interval, failed verification), 3 inconclusive (truncated
//! table without --allow-truncated).

use bei_core::algebra::{buchberger, edge_binomials, GroebnerBasis, IdealBasis};
use bei_core::betti::{hochster_betti, koszul_betti, BettiBounds, BettiTable};
use bei_core::field::{PrimeField, DEFAULT_PRIME};
use bei_core::graphs::SimpleGraph;
use bei_core::pigraph::{
    classify_reg2, enumerate_pi_graphs, facet_intervals, find_closed_labeling, Reg2Class,
};
use bei_core::verify::{
    check_char_robustness, check_exact_sequence_sweep, check_prop_reg2, check_semicontinuity,
    check_theorem_main, check_theorem_main2, VerificationReport,
};
use bei_core::Error;
use clap::{Parser, Subcommand, ValueEnum};
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "bei",
    version,
    about = "Binomial edge ideals: recognition, ideals, Betti tables, verification sweeps"
)]
struct Cli {
    /// Worker threads for sweeps (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether a graph is proper interval; print a closed labeling
    /// and its facet intervals. Exit 2 when it is not.
    Recognize {
        /// Edge-list file (`n <count>` header then `u v` lines), or - for stdin.
        input: String,
    },
    /// Report the regularity-2 classification of a proper interval graph.
    /// Exit 2 when the graph is not proper interval or not regularity 2.
    ClassifyReg2 {
        /// Edge-list file, or - for stdin.
        input: String,
    },
    /// Print ideal generators, one per line, in `x1*y2 - x2*y1` form.
    Ideal {
        /// Edge-list file, or - for stdin.
        input: String,
        /// Which generating set to print.
        #[arg(long, value_enum, default_value_t = IdealKind::Binomial)]
        kind: IdealKind,
        /// Coefficient prime.
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        char: u32,
    },
    /// Graded Betti tables of S/J_G and/or S/ini(J_G).
    Betti {
        /// Edge-list file, or - for stdin.
        input: String,
        /// Which quotient(s) to resolve.
        #[arg(long, value_enum, default_value_t = WhichIdeal::Both)]
        ideal: WhichIdeal,
        /// Coefficient prime.
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        char: u32,
        /// Cap on the homological degree i.
        #[arg(long)]
        max_i: Option<usize>,
        /// Cap on the internal degree j.
        #[arg(long)]
        max_j: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Exit 0 even when a table is truncated by the caps above.
        #[arg(long)]
        allow_truncated: bool,
    },
    /// Run a verification sweep; print its summary and optionally write the
    /// structured report. Exit 2 when any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Largest vertex count (defaults: 6, or 5 for semicontinuity).
        #[arg(long)]
        max_n: Option<usize>,
        /// Coefficient prime.
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        char: u32,
        /// Second prime: also run the cross-characteristic comparison.
        #[arg(long)]
        char2: Option<u32>,
        /// Write the JSON report to this file (- for stdout).
        #[arg(long)]
        out: Option<String>,
    },
    /// Stream every proper interval graph on n vertices (one representative
    /// per isomorphism class) as edge-list blocks with closed labelings.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum IdealKind {
    /// The edge binomials x_i*y_j - x_j*y_i.
    Binomial,
    /// The reduced lex basis computed by Buchberger.
    Groebner,
    /// Minimal monomial generators of the lex initial ideal.
    Initial,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum WhichIdeal {
    Binomial,
    Initial,
    Both,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Suite {
    Main,
    Main2,
    Reg2,
    ExactSeq,
    Semicontinuity,
    All,
}

fn main() -> ExitCode {
    // Rust ignores SIGPIPE, so `bei ... | head` would otherwise die with a
    // broken-pipe panic; restore the conventional silent exit.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // ignore the error if a pool already exists (e.g. repeated in tests)
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_exit(&e))
        }
    }
}

fn error_exit(e: &Error) -> u8 {
    match e {
        Error::NotProperInterval => 2,
        Error::Inconclusive(_) => 3,
        _ => 1,
    }
}

fn read_graph(input: &str) -> Result<SimpleGraph, Error> {
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(input)?
    };
    SimpleGraph::from_edge_list(&text)
}

fn run(cmd: Cmd) -> Result<ExitCode, Error> {
    match cmd {
        Cmd::Recognize { input } => {
            let g = read_graph(&input)?;
            match find_closed_labeling(&g) {
                Some(lab) => {
                    let fi = facet_intervals(&g, &lab)?;
                    let perm: Vec<String> =
                        lab.perm().iter().map(|p| p.to_string()).collect();
                    let facets: Vec<String> = fi
                        .intervals
                        .iter()
                        .map(|(a, b)| format!("[{a},{b}]"))
                        .collect();
                    println!(
                        "PI; labeling {}; facets {}",
                        perm.join(" "),
                        facets.join(",")
                    );
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("not PI");
                    Ok(ExitCode::from(2))
                }
            }
        }
        Cmd::ClassifyReg2 { input } => {
            let g = read_graph(&input)?;
            match classify_reg2(&g) {
                Ok(Reg2Class::DisjointTwoCliques { m, p }) => {
                    println!("reg 2: disjoint complete graphs K_{m} and K_{p}");
                    Ok(ExitCode::SUCCESS)
                }
                Ok(Reg2Class::TwoOverlappingIntervalCliques { a, b }) => {
                    println!(
                        "reg 2: two overlapping interval cliques [1,{b}] and [{a},{}]",
                        g.n()
                    );
                    Ok(ExitCode::SUCCESS)
                }
                Ok(Reg2Class::NotRegTwo) => {
                    println!("not regularity 2");
                    Ok(ExitCode::from(2))
                }
                Err(Error::NotProperInterval) => {
                    println!("not PI");
                    Ok(ExitCode::from(2))
                }
                Err(e) => Err(e),
            }
        }
        Cmd::Ideal { input, kind, char } => {
            let g = read_graph(&input)?;
            let field = PrimeField::new(char)?;
            let basis = edge_binomials(&field, &g)?;
            let n = g.n();
            let printed: Vec<String> = match kind {
                IdealKind::Binomial => basis
                    .gens
                    .iter()
                    .map(|p| p.to_string_xy(&field, n))
                    .collect(),
                IdealKind::Groebner => buchberger(&field, &basis)
                    .gens
                    .iter()
                    .map(|p| p.to_string_xy(&field, n))
                    .collect(),
                IdealKind::Initial => buchberger(&field, &basis)
                    .initial_ideal(&field)
                    .gens
                    .iter()
                    .map(|p| p.to_string_xy(&field, n))
                    .collect(),
            };
            for line in printed {
                println!("{line}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Betti {
            input,
            ideal,
            char,
            max_i,
            max_j,
            format,
            allow_truncated,
        } => {
            let g = read_graph(&input)?;
            let field = PrimeField::new(char)?;
            let gb = buchberger(&field, &edge_binomials(&field, &g)?);
            cmd_betti(&field, &gb, ideal, max_i, max_j, format, allow_truncated)
        }
        Cmd::Verify {
            suite,
            max_n,
            char,
            char2,
            out,
        } => cmd_verify(suite, max_n, char, char2, out),
        Cmd::Enumerate { n } => {
            let graphs = enumerate_pi_graphs(n)?;
            for g in &graphs {
                print!("{}", g.to_edge_list());
                let lab = find_closed_labeling(g).expect("enumerated graphs are closed");
                let perm: Vec<String> = lab.perm().iter().map(|p| p.to_string()).collect();
                println!("labeling {}", perm.join(" "));
                println!();
            }
            println!("count {}", graphs.len());
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Applies the i/j caps, computes the requested table(s), prints them, and
/// picks the exit code: 3 for a truncated result unless --allow-truncated.
fn cmd_betti(
    field: &PrimeField,
    gb: &GroebnerBasis,
    ideal: WhichIdeal,
    max_i: Option<usize>,
    max_j: Option<usize>,
    format: Format,
    allow_truncated: bool,
) -> Result<ExitCode, Error> {
    let bounds = BettiBounds {
        max_i,
        // any entry with j <= max_j lives in row j - i <= max_j
        max_row: max_j,
        row_bound_certified: false,
    };
    let binomial = |gb: &GroebnerBasis| -> Result<BettiTable, Error> {
        let mut t = koszul_betti(field, gb, &bounds)?;
        clip_internal_degree(&mut t, max_j);
        Ok(t)
    };
    let initial = |ini: &IdealBasis| -> Result<BettiTable, Error> {
        let mut t = hochster_betti(field, ini, &bounds)?;
        clip_internal_degree(&mut t, max_j);
        Ok(t)
    };

    let (t_j, t_ini) = match ideal {
        WhichIdeal::Binomial => (Some(binomial(gb)?), None),
        WhichIdeal::Initial => (None, Some(initial(&gb.initial_ideal(field))?)),
        WhichIdeal::Both => (
            Some(binomial(gb)?),
            Some(initial(&gb.initial_ideal(field))?),
        ),
    };

    match format {
        Format::Text => {
            if let Some(t) = &t_j {
                println!("S/J_G over F_{}:", field.p());
                println!("{}", t.diagram());
            }
            if let Some(t) = &t_ini {
                println!("S/ini(J_G) over F_{}:", field.p());
                println!("{}", t.diagram());
            }
            if let (Some(a), Some(b)) = (&t_j, &t_ini) {
                println!("{}", gap_text(a, b));
            }
        }
        Format::Json => {
            let value = match (&t_j, &t_ini) {
                (Some(a), Some(b)) => serde_json::json!({
                    "binomial": a.to_json(),
                    "initial": b.to_json(),
                    "gap": gap_entries(a, b)
                        .into_iter()
                        .map(|(i, j, d)| serde_json::json!({"i": i, "j": j, "delta": d}))
                        .collect::<Vec<_>>(),
                }),
                (Some(a), None) => a.to_json(),
                (None, Some(b)) => b.to_json(),
                (None, None) => unreachable!("some table is always requested"),
            };
            println!("{}", serde_json::to_string_pretty(&value).expect("json"));
        }
    }

    let truncated =
        t_j.as_ref().is_some_and(|t| t.truncated) || t_ini.as_ref().is_some_and(|t| t.truncated);
    if truncated && !allow_truncated {
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

/// Drops entries with j > max_j; if any are dropped the table no longer
/// shows everything, so it is marked truncated.
fn clip_internal_degree(t: &mut BettiTable, max_j: Option<usize>) {
    let Some(mj) = max_j else { return };
    let before = t.entries.len();
    t.entries.retain(|&(_, j), _| j <= mj);
    if t.entries.len() < before {
        t.truncated = true;
    }
}

/// Entries where the initial-ideal table exceeds the binomial one (the
/// conjectured gap; zero on proper interval graphs).
fn gap_entries(t_j: &BettiTable, t_ini: &BettiTable) -> Vec<(usize, usize, i128)> {
    let mut keys: Vec<(usize, usize)> = t_j
        .entries
        .keys()
        .chain(t_ini.entries.keys())
        .copied()
        .collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter()
        .map(|(i, j)| (i, j, t_ini.get(i, j) as i128 - t_j.get(i, j) as i128))
        .filter(|&(_, _, d)| d != 0)
        .collect()
}

fn gap_text(t_j: &BettiTable, t_ini: &BettiTable) -> String {
    let gaps = gap_entries(t_j, t_ini);
    if gaps.is_empty() {
        "gap (initial - binomial): all entries zero".to_string()
    } else {
        let lines: Vec<String> = gaps
            .iter()
            .map(|(i, j, d)| format!("  ({i},{j}): {d:+}"))
            .collect();
        format!("gap (initial - binomial):\n{}", lines.join("\n"))
    }
}

fn cmd_verify(
    suite: Suite,
    max_n: Option<usize>,
    char: u32,
    char2: Option<u32>,
    out: Option<String>,
) -> Result<ExitCode, Error> {
    let field = PrimeField::new(char)?;
    // per-suite defaults and hard ranges; an explicit --max-n is clamped to
    // each suite's supported range when running `all`
    let pick = |default: usize, cap: usize| -> usize {
        max_n.map(|m| m.min(cap)).unwrap_or(default)
    };
    let mut reports: Vec<VerificationReport> = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Main {
        reports.push(check_theorem_main(pick(6, 7), &field)?);
    }
    if all || suite == Suite::Main2 {
        reports.push(check_theorem_main2(pick(6, 6), &field)?);
    }
    if all || suite == Suite::Reg2 {
        reports.push(check_prop_reg2(pick(6, 6), &field)?);
    }
    if all || suite == Suite::ExactSeq {
        reports.push(check_exact_sequence_sweep(pick(6, 6).max(3), &field)?);
    }
    if all || suite == Suite::Semicontinuity {
        reports.push(check_semicontinuity(pick(5, 5), &field)?);
    }
    if let Some(p2) = char2 {
        reports.push(check_char_robustness(pick(5, 5), char, p2)?);
    }

    let json = if reports.len() == 1 {
        reports[0].to_json()
    } else {
        let values: Vec<serde_json::Value> = reports
            .iter()
            .map(|r| serde_json::from_str(&r.to_json()).expect("roundtrip"))
            .collect();
        serde_json::to_string_pretty(&values).expect("json")
    };

    let json_to_stdout = out.as_deref() == Some("-");
    for r in &reports {
        if json_to_stdout {
            eprint!("{}", r.summary());
        } else {
            print!("{}", r.summary());
        }
    }
    match out.as_deref() {
        Some("-") => println!("{json}"),
        Some(path) => std::fs::write(path, json)?,
        None => {}
    }

    if reports.iter().all(|r| r.is_clean()) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(2))
    }
}
