use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use graham::asymptotics::{dominant_form, error_profile, AsymptoticJson};
use graham::automaton::{build_canonical, build_general, find_permutation, Automaton};
use graham::oracle::{
    count_report, delahaye_report, enumerate_canonical, enumerate_graham, regenerate_figures,
    SweepOptions, DEFAULT_BUDGET,
};
use graham::series::{recurrence_of, series_terms};
use graham::verify::{run_all, run_criterion, Expectations, CRITERIA};
use graham::{formats, generating_function, reference, Board, Mode};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(
    name = "graham",
    version,
    about = "Count and draw half-turn symmetric cuts of m x n grids"
)]
struct Cli {
    /// Rows of the grid.
    #[arg(long, global = true, default_value_t = 4)]
    m: usize,
    /// `canonical` (4 rows only) or `general`.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Canonical)]
    mode: ModeArg,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Maximum candidates an oracle sweep may visit.
    #[arg(long, global = true, env = "GRAHAM_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads for oracle sweeps.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count Graham matrices by exhaustive sweep.
    Count {
        /// A width `6` or an inclusive range `1..12`.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
    },
    /// List the matrices of one width.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Generating function from the automaton.
    Gf,
    /// Series coefficients c_1, c_2, ...
    Terms {
        #[arg(long, default_value_t = 30)]
        limit: usize,
    },
    /// Linear recurrence read off the denominator.
    Recurrence,
    /// The automaton and its transfer matrix.
    Automaton,
    /// Dominant-pole growth rate and amplitudes.
    Asymptotics {
        /// Largest n in the error table.
        #[arg(long, default_value_t = 30)]
        limit: usize,
    },
    /// The twelve displayed 3x6 and 4x6 cuts, checked against the sweep.
    Figures,
    /// The 3 x 2n closed form next to the sweep counts.
    Delahaye {
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
    },
    /// Run the acceptance checks.
    Verify {
        /// Only this criterion.
        #[arg(long)]
        criterion: Option<u8>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Canonical,
    General,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Ascii,
    Svg,
    Dot,
    Bfile,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty range {s}"));
            }
            Ok(a..=b)
        }
        None => num(s).map(|v| v..=v),
    }
}

impl Cli {
    fn format(&self, allowed: &[Format]) -> Result<Format> {
        let f = self.format.unwrap_or(allowed[0]);
        if !allowed.contains(&f) {
            let names: Vec<String> = allowed
                .iter()
                .map(|a| format!("{a:?}").to_lowercase())
                .collect();
            bail!(
                "--format {} is not available here (use {})",
                format!("{f:?}").to_lowercase(),
                names.join(", ")
            );
        }
        Ok(f)
    }

    fn mode(&self) -> Mode {
        match self.mode {
            ModeArg::Canonical => Mode::Canonical,
            ModeArg::General => Mode::General,
        }
    }

    fn check_mode(&self) -> Result<()> {
        if self.mode == ModeArg::Canonical && self.m != 4 {
            bail!("canonical mode needs --m 4; use --mode general");
        }
        Ok(())
    }

    fn sweep(&self) -> SweepOptions {
        SweepOptions {
            budget: self.budget,
            workers: self.workers,
        }
    }

    fn automaton(&self) -> Result<Automaton> {
        Ok(match self.mode() {
            Mode::Canonical => build_canonical(self.m)?,
            Mode::General => build_general(self.m)?,
        })
    }
}

fn pretty(v: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn count(cli: &Cli, ns: &RangeInclusive<usize>) -> Result<String> {
    cli.check_mode()?;
    let f = cli.format(&[Format::Text, Format::Json])?;
    let opts = cli.sweep();
    let mut rows = Vec::new();
    for n in ns.clone() {
        let (canonical, cuts, orbits) = if n == 0 {
            (0, 0, 0)
        } else {
            let r = count_report(cli.m, n, &opts)?;
            (r.canonical, r.cuts, r.orbits)
        };
        rows.push((n, canonical, cuts, orbits));
    }
    let headline = |&(_, canonical, cuts, _): &(usize, u64, u64, u64)| match cli.mode {
        ModeArg::Canonical => canonical,
        ModeArg::General => cuts,
    };
    Ok(match f {
        Format::Json => pretty(
            &rows
                .iter()
                .map(|r| {
                    let mut v = json!({
                        "m": cli.m, "n": r.0, "count": headline(r), "cuts": r.2, "orbits": r.3,
                    });
                    if cli.m == 4 {
                        v["canonical"] = json!(r.1);
                    }
                    v
                })
                .collect::<Vec<_>>(),
        )?,
        _ if rows.len() == 1 => format!("{}\n", headline(&rows[0])),
        _ => rows
            .iter()
            .map(|r| format!("{} {}\n", r.0, headline(r)))
            .collect(),
    })
}

fn enumerate(cli: &Cli, n: usize, limit: Option<usize>) -> Result<String> {
    cli.check_mode()?;
    let f = cli.format(&[Format::Ascii, Format::Text, Format::Svg, Format::Json])?;
    let mut boards: Vec<Board> = if n == 0 {
        Vec::new()
    } else if cli.mode == ModeArg::Canonical {
        enumerate_canonical(cli.m, n, &cli.sweep())?
    } else {
        enumerate_graham(cli.m, n, &cli.sweep())?
    };
    if let Some(l) = limit {
        boards.truncate(l);
    }
    Ok(match f {
        Format::Svg => formats::to_svg_list(&boards),
        Format::Json => pretty(&boards)?,
        _ => formats::to_ascii_list(&boards),
    })
}

fn gf(cli: &Cli) -> Result<String> {
    cli.check_mode()?;
    let f = cli.format(&[Format::Text, Format::Json])?;
    let g = generating_function(cli.mode(), cli.m)?;
    Ok(match f {
        Format::Json => pretty(&g.to_json()?)?,
        _ => format!("{g}\n"),
    })
}

fn terms(cli: &Cli, limit: usize) -> Result<String> {
    cli.check_mode()?;
    let f = cli.format(&[Format::Bfile, Format::Text, Format::Json])?;
    let g = generating_function(cli.mode(), cli.m)?;
    let t = series_terms(&g, limit)?;
    Ok(match f {
        Format::Json => pretty(&t.iter().map(|c| c.to_string()).collect::<Vec<_>>())?,
        _ => formats::to_bfile(&t),
    })
}

fn recurrence(cli: &Cli) -> Result<String> {
    cli.check_mode()?;
    let f = cli.format(&[Format::Text, Format::Json])?;
    let rec = recurrence_of(&generating_function(cli.mode(), cli.m)?)?;
    Ok(match f {
        Format::Json => pretty(&json!({
            "order": rec.order,
            "coefficients": rec.coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "initial": rec.initial.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        }))?,
        _ => format!("{rec}\n"),
    })
}

fn automaton(cli: &Cli) -> Result<String> {
    cli.check_mode()?;
    let f = cli.format(&[Format::Text, Format::Dot, Format::Json])?;
    let a = cli.automaton()?;
    let t = a.transfer_matrix();
    let witness = (cli.mode == ModeArg::Canonical)
        .then(|| find_permutation(&t.entries, &reference::TRANSFER_MATRIX));
    Ok(match f {
        Format::Dot => a.to_dot(),
        Format::Json => {
            let mut v = json!({
                "automaton": a.to_json(),
                "transfer_matrix": t,
            });
            if let Some(w) = &witness {
                v["similar_to_reference"] = json!(w.is_some());
                v["witness"] = json!(w);
            }
            pretty(&v)?
        }
        _ => {
            let mut out = String::new();
            writeln!(out, "{} states, {} start", a.state_count(), a.start.len())?;
            for (i, s) in a.states.iter().enumerate() {
                let (even, odd) = a.accepts(i);
                writeln!(
                    out,
                    "  {i}: {} {:?}{}{}{}",
                    s.column,
                    s.profile.ids(),
                    if a.start.contains(&i) { " start" } else { "" },
                    if even { " even" } else { "" },
                    if odd { " odd" } else { "" },
                )?;
            }
            writeln!(out, "transfer matrix:")?;
            for row in &t.entries {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                writeln!(out, "  {}", cells.join(" "))?;
            }
            if let Some(w) = witness {
                writeln!(out, "similar to reference matrix: {}", w.is_some())?;
                if let Some(p) = w {
                    writeln!(out, "witness: {p:?}")?;
                }
            }
            out
        }
    })
}

fn asymptotics(cli: &Cli, limit: usize) -> Result<String> {
    cli.check_mode()?;
    let f = cli.format(&[Format::Text, Format::Json])?;
    let g = generating_function(cli.mode(), cli.m)?;
    let est = dominant_form(&g)?;
    let errors = error_profile(&g, &est, limit)?;
    let exact_check = cli.mode == ModeArg::Canonical && est.matches_closed_form(1e-6);
    Ok(match f {
        Format::Json => pretty(&AsymptoticJson {
            z_inv: est.growth,
            a: est.a,
            b: est.b,
            exact_check,
            errors,
        })?,
        _ => {
            let mut out = format!(
                "1/z = {:.12}\nA = {:.9}\nB = {:.9}\nclosed form matches: {exact_check}\n",
                est.growth, est.a, est.b
            );
            for (n, e) in errors {
                writeln!(out, "{n} {e:.3e}")?;
            }
            out
        }
    })
}

fn figures(cli: &Cli) -> Result<String> {
    let f = cli.format(&[Format::Ascii, Format::Text, Format::Svg, Format::Json])?;
    let r = regenerate_figures(&cli.sweep())?;
    let all: Vec<Board> = r
        .three_by_six
        .iter()
        .chain(&r.four_by_six)
        .cloned()
        .collect();
    Ok(match f {
        Format::Svg => formats::to_svg_list(&all),
        Format::Json => pretty(&json!({
            "three_by_six": r.three_by_six,
            "four_by_six": r.four_by_six,
            "canonical_4x6": r.canonical_4x6,
            "three_by_six_not_shown": r.three_by_six_missing,
        }))?,
        _ => formats::to_ascii_list(&all),
    })
}

fn delahaye(cli: &Cli, ns: &RangeInclusive<usize>) -> Result<String> {
    let f = cli.format(&[Format::Text, Format::Json])?;
    let reports = ns
        .clone()
        .filter(|&n| n > 0)
        .map(|n| delahaye_report(n, &cli.sweep()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(match f {
        Format::Json => pretty(&reports)?,
        _ => {
            let mut out = String::from("n formula cuts orbits canonical\n");
            for r in &reports {
                writeln!(
                    out,
                    "{} {} {} {} {}",
                    r.n, r.formula, r.cuts, r.orbits, r.canonical
                )?;
            }
            out
        }
    })
}

fn verify(cli: &Cli, criterion: Option<u8>) -> Result<(String, bool)> {
    let f = cli.format(&[Format::Text, Format::Json])?;
    let exp = Expectations::published();
    let results = match criterion {
        Some(id) if CRITERIA.iter().any(|c| c.0 == id) => {
            vec![run_criterion(id, &exp, &cli.sweep())]
        }
        Some(id) => bail!("no criterion {id}"),
        None => run_all(&exp, &cli.sweep()),
    };
    let passed = results.iter().all(|r| r.passed);
    let text = match f {
        Format::Json => pretty(&json!({ "passed": passed, "criteria": results }))?,
        _ => {
            let mut out: String = results.iter().map(|r| format!("{r}\n")).collect();
            let ok = results.iter().filter(|r| r.passed).count();
            writeln!(out, "{ok}/{} passed", results.len())?;
            out
        }
    };
    Ok((text, passed))
}

fn run(cli: &Cli) -> Result<bool> {
    let (text, ok) = match &cli.command {
        Command::Count { n } => (count(cli, n)?, true),
        Command::Enumerate { n, limit } => (enumerate(cli, *n, *limit)?, true),
        Command::Gf => (gf(cli)?, true),
        Command::Terms { limit } => (terms(cli, *limit)?, true),
        Command::Recurrence => (recurrence(cli)?, true),
        Command::Automaton => (automaton(cli)?, true),
        Command::Asymptotics { limit } => (asymptotics(cli, *limit)?, true),
        Command::Figures => (figures(cli)?, true),
        Command::Delahaye { n } => (delahaye(cli, n)?, true),
        Command::Verify { criterion } => verify(cli, *criterion)?,
    };
    match &cli.out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        // Budget, size, and usage problems all share the resource code;
        // 1 is reserved for failed verification.
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
