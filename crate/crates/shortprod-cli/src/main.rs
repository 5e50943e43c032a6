//! Command-line front end for the validity-range library.
//!
//! `range` and `table` print validity intervals, `gaps` and `extrema` expose
//! the modular scan machinery, `check` runs the slow reference test on a
//! single multiplicand, and `pow5` builds and audits float-parsing multiplier
//! tables. `--json` switches output to one JSON object per row, with big
//! integers rendered as decimal strings.
//!
//! Exit codes: 0 success, 1 usage or domain error, 2 empty range, 3 audit
//! failure.

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use num_traits::One;
use serde_json::json;
use shortprod::range::{find_range, RangeQuery};
use shortprod::{extrema, multipliers, oracle, Error, ExtremumRun};
use std::collections::BTreeSet;

/// Extremum listings longer than this stay in run form.
const DECODE_CAP: u64 = 10_000;

#[derive(Parser)]
#[command(name = "shortprod", version, about = "Validity ranges of truncated multipliers")]
struct Cli {
    /// Emit one JSON object per row instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Interval of multiplicands with exact leading product digits.
    Range {
        /// Truncated multiplier.
        #[arg(long)]
        z: BigUint,
        /// Number of leading digits that must be exact.
        #[arg(long)]
        digits: u64,
        #[arg(long, default_value = "10")]
        base: BigUint,
    },
    /// Intervals for digit prefixes of an embedded constant.
    Table {
        #[arg(long, default_value = "pi")]
        constant: String,
        #[arg(long, default_value_t = 10)]
        digits: u64,
        #[arg(long, default_value = "10")]
        base: BigUint,
        /// Shortest prefix length.
        #[arg(long, default_value_t = 10)]
        from: u64,
        /// Longest prefix length.
        #[arg(long, default_value_t = 20)]
        to: u64,
    },
    /// Gap sequence of the scan w -> (w * z) mod m.
    Gaps {
        #[arg(long)]
        z: BigUint,
        #[arg(long)]
        m: BigUint,
    },
    /// Running extrema of (w * z) mod m over a window of w.
    Extrema {
        #[arg(long)]
        z: BigUint,
        #[arg(long)]
        m: BigUint,
        /// First multiplicand of the window.
        #[arg(long)]
        from: BigUint,
        /// Last multiplicand of the window.
        #[arg(long)]
        to: BigUint,
    },
    /// Reference exactness test for a single multiplicand.
    Check {
        #[arg(long)]
        w: BigUint,
        #[arg(long)]
        z: BigUint,
        #[arg(long)]
        digits: u64,
        #[arg(long, default_value = "10")]
        base: BigUint,
    },
    /// Audited intervals for truncated powers of five.
    Pow5 {
        /// Single exponent of five.
        #[arg(long, conflicts_with_all = ["q_min", "q_max"], allow_negative_numbers = true)]
        q: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        q_min: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        q_max: Option<i64>,
        /// Multiplier length in base digits.
        #[arg(long, default_value_t = 64)]
        bits: u64,
        /// Number of leading digits that must be exact.
        #[arg(long, default_value_t = 55)]
        digits: u64,
        #[arg(long, default_value = "2")]
        base: BigUint,
    },
}

fn main() {
    // The runtime ships with SIGPIPE ignored, which turns a closed reader
    // into a printing panic. Restore the default so `shortprod table | head`
    // dies quietly like any other filter.
    unsafe { libc::signal(libc::SIGPIPE, libc::SIG_DFL) };
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    std::process::exit(run(&cli));
}

fn run(cli: &Cli) -> i32 {
    let out = match &cli.command {
        Command::Range { z, digits, base } => cmd_range(z, *digits, base, cli.json),
        Command::Table {
            constant,
            digits,
            base,
            from,
            to,
        } => cmd_table(constant, *digits, base, *from, *to, cli.json),
        Command::Gaps { z, m } => cmd_gaps(z, m, cli.json),
        Command::Extrema { z, m, from, to } => cmd_extrema(z, m, from, to, cli.json),
        Command::Check { w, z, digits, base } => cmd_check(w, z, *digits, base, cli.json),
        Command::Pow5 {
            q,
            q_min,
            q_max,
            bits,
            digits,
            base,
        } => cmd_pow5(*q, *q_min, *q_max, *bits, *digits, base, cli.json),
    };
    match out {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn cmd_range(z: &BigUint, digits: u64, base: &BigUint, json: bool) -> Result<i32, Error> {
    let q = RangeQuery::new(z.clone(), digits, base.clone())?;
    match find_range(&q)? {
        Some(r) => {
            if json {
                println!(
                    "{}",
                    json!({
                        "z": z.to_string(),
                        "digits": digits,
                        "base": base.to_string(),
                        "lb": r.lb.to_string(),
                        "ub": r.ub.to_string(),
                    })
                );
            } else {
                println!("{r}");
            }
            Ok(0)
        }
        None => {
            if json {
                println!(
                    "{}",
                    json!({
                        "z": z.to_string(),
                        "digits": digits,
                        "base": base.to_string(),
                        "empty": true,
                    })
                );
            } else {
                println!("empty");
            }
            Ok(2)
        }
    }
}

fn cmd_table(
    constant: &str,
    digits: u64,
    base: &BigUint,
    from: u64,
    to: u64,
    json: bool,
) -> Result<i32, Error> {
    let table = match constant {
        "pi" => &multipliers::PI_DECIMAL,
        other => {
            eprintln!("error: unknown constant {other}");
            return Ok(1);
        }
    };
    if from == 0 {
        return Err(Error::ZeroArgument("prefix length"));
    }
    if from > to {
        eprintln!("error: empty prefix range {from}..={to}");
        return Ok(1);
    }
    for n in from..=to {
        let z = table.prefix(n)?;
        let q = RangeQuery::new(z.clone(), digits, base.clone())?;
        match find_range(&q)? {
            Some(r) => {
                if json {
                    println!(
                        "{}",
                        json!({
                            "n": n,
                            "z": z.to_string(),
                            "lb": r.lb.to_string(),
                            "ub": r.ub.to_string(),
                        })
                    );
                } else {
                    println!("{n}\t{r}");
                }
            }
            None => {
                if json {
                    println!("{}", json!({"n": n, "z": z.to_string(), "empty": true}));
                } else {
                    println!("{n}\tempty");
                }
            }
        }
    }
    Ok(0)
}

fn cmd_gaps(z: &BigUint, m: &BigUint, json: bool) -> Result<i32, Error> {
    let seq = extrema::gap_sequence(z, m)?;
    let entries: Vec<String> = seq.entries().iter().map(|g| g.to_string()).collect();
    if json {
        println!(
            "{}",
            json!({"z": z.to_string(), "m": m.to_string(), "entries": entries})
        );
    } else {
        println!("{}", entries.join(", "));
    }
    Ok(0)
}

fn run_list(runs: &[ExtremumRun]) -> String {
    let parts: Vec<String> = runs
        .iter()
        .map(|r| format!("({}, {}, {})", r.last_location, r.extra_count, r.gap))
        .collect();
    parts.join(", ")
}

fn cmd_extrema(
    z: &BigUint,
    m: &BigUint,
    from: &BigUint,
    to: &BigUint,
    json: bool,
) -> Result<i32, Error> {
    let runs = extrema::extrema_in_range(z, m, from, to)?;
    if json {
        for (kind, list) in [("minimum", &runs.minima), ("maximum", &runs.maxima)] {
            for run in list {
                println!(
                    "{}",
                    json!({
                        "kind": kind,
                        "last_location": run.last_location.to_string(),
                        "extra_count": run.extra_count.to_string(),
                        "gap": run.gap.to_string(),
                    })
                );
            }
        }
        return Ok(0);
    }
    println!("minima runs: {}", run_list(&runs.minima));
    println!("maxima runs: {}", run_list(&runs.maxima));
    let total: BigUint = runs.minima.iter().chain(&runs.maxima).map(|r| r.len()).sum();
    if total > BigUint::from(DECODE_CAP) {
        println!("rows suppressed: {total} extrema");
        return Ok(0);
    }
    let minima: BTreeSet<BigUint> = runs.minima.iter().flat_map(|r| r.locations()).collect();
    let maxima: BTreeSet<BigUint> = runs.maxima.iter().flat_map(|r| r.locations()).collect();
    for w in minima.union(&maxima) {
        let value = (w * z) % m;
        let kind = match (maxima.contains(w), minima.contains(w)) {
            (true, true) => "maximum/minimum",
            (true, false) => "maximum",
            _ => "minimum",
        };
        println!("w={w}\tvalue={value}\t{kind}");
    }
    Ok(0)
}

fn cmd_check(w: &BigUint, z: &BigUint, digits: u64, base: &BigUint, json: bool) -> Result<i32, Error> {
    let ok = oracle::exact(w, z, digits, base)?;
    if json {
        println!(
            "{}",
            json!({
                "w": w.to_string(),
                "z": z.to_string(),
                "digits": digits,
                "base": base.to_string(),
                "exact": ok,
            })
        );
    } else {
        println!("{ok}");
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_pow5(
    q: Option<i64>,
    q_min: Option<i64>,
    q_max: Option<i64>,
    bits: u64,
    digits: u64,
    base: &BigUint,
    json: bool,
) -> Result<i32, Error> {
    let (lo, hi) = match (q, q_min, q_max) {
        (Some(x), None, None) => (x, x),
        (None, Some(a), Some(b)) => (a, b),
        _ => {
            eprintln!("error: provide --q, or both --q-min and --q-max");
            return Ok(1);
        }
    };
    if lo > hi {
        eprintln!("error: empty exponent range {lo}..={hi}");
        return Ok(1);
    }
    if bits < digits {
        eprintln!("error: bits must be at least the digit count");
        return Ok(1);
    }
    let five = BigUint::from(5u32);
    for q in lo..=hi {
        let exp = match u32::try_from(q.unsigned_abs()) {
            Ok(e) => e,
            Err(_) => {
                eprintln!("error: exponent magnitude of {q} is too large");
                return Ok(1);
            }
        };
        let power = five.pow(exp);
        let (num, den) = if q >= 0 {
            (power, BigUint::one())
        } else {
            (BigUint::one(), power)
        };
        let (mult, scale) = multipliers::truncate_rational(&num, &den, bits, base)?;
        let rq = RangeQuery::new(mult.clone(), digits, base.clone())?;
        match find_range(&rq)? {
            Some(r) => {
                // Every printed row has survived the slow reference test at
                // both edges of its interval.
                let last = &r.ub - 1u32;
                let holds = oracle::exact(&last, &mult, digits, base)?;
                let breaks = !oracle::exact(&r.ub, &mult, digits, base)?;
                if !holds || !breaks {
                    eprintln!("error: audit failed at q = {q}, interval {r}");
                    return Ok(3);
                }
                if json {
                    println!(
                        "{}",
                        json!({
                            "q": q,
                            "multiplier": mult.to_string(),
                            "scale": scale,
                            "lb": r.lb.to_string(),
                            "ub": r.ub.to_string(),
                        })
                    );
                } else {
                    println!("{q}, {}, {}", r.lb, r.ub);
                }
            }
            None => {
                if json {
                    println!(
                        "{}",
                        json!({
                            "q": q,
                            "multiplier": mult.to_string(),
                            "scale": scale,
                            "empty": true,
                        })
                    );
                } else {
                    println!("{q}, empty");
                }
            }
        }
    }
    Ok(0)
}
