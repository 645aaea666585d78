//! `pgdesign` command-line tool.
//!
//! Exit codes: 0 for success or a true verdict, 1 for a false verdict,
//! 2 for usage and validation errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use pgdesign::catalog::{catalog_search, star_catalog_from_spreads, CatalogEntry, Rational};
use pgdesign::collineation::Collineation;
use pgdesign::geometry::{build_star, cyclic_spread, Design, PrimitivePoly};
use pgdesign::gf2::Point;
use pgdesign::isomorphism::{
    check_spread_isomorphism, check_star_isomorphism, star_to_spread, IsoResult, SearchOptions,
};
use pgdesign::signature::{check_spread_equivalence, check_star_equivalence};
use pgdesign::{fixtures, parse_design, render_design, RankedDesign};

#[derive(Parser)]
#[command(name = "pgdesign", version, about = "Spreads, stars and their isomorphisms over PG(n-1, 2)")]
struct Cli {
    /// Worker threads for parallel searches.
    #[arg(long, global = true, env = "PGDESIGN_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a design.
    #[command(subcommand)]
    Construct(Construct),
    /// Compare two designs.
    #[command(subcommand)]
    Check(Check),
    /// Split a covering star into its reduced spread and relabelling.
    StarToSpread {
        design: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the sorted bitstring signature.
    Bitstrings { design: String },
    /// Tabulate the V-criterion.
    Rank {
        #[arg(required = true)]
        designs: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Search random relabellings of a spread for non-isomorphic spreads.
    Catalog(CatalogArgs),
    /// Bundled example designs.
    #[command(subcommand)]
    Fixtures(Fixtures),
}

#[derive(Subcommand)]
enum Construct {
    /// Cyclic (t-1)-spread of P_n.
    Spread {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        /// Primitive polynomial coefficients, constant term first (`1,1,0,0,1`
        /// is w^4 + w + 1). Defaults to a built-in polynomial.
        #[arg(long, value_delimiter = ',')]
        poly: Option<Vec<u8>>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Join a spread with a nucleus.
    Star {
        #[arg(long)]
        spread: String,
        /// Nucleus basis effects, using letters past the spread's factors.
        #[arg(long, num_args = 1.., required = true)]
        nucleus: Vec<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Are the two designs the same sets of flats?
    Equiv { a: String, b: String },
    /// Is there a collineation taking one design onto the other?
    Iso(IsoArgs),
}

#[derive(Args)]
struct IsoArgs {
    a: String,
    b: String,
    /// Enumerate every IEC instead of stopping at the first.
    #[arg(long)]
    all_iecs: bool,
    /// Report search progress on stderr.
    #[arg(long)]
    progress: bool,
    #[arg(long)]
    parallel: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CatalogArgs {
    #[arg(long)]
    seed: String,
    #[arg(long)]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    rng_seed: u64,
    /// Also join every class with this nucleus basis.
    #[arg(long, num_args = 1..)]
    nucleus: Vec<String>,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Fixtures {
    List,
    Show { name: String },
}

/// Reads a design from a path, falling back to a fixture name.
fn load(arg: &str) -> Result<Design> {
    let path = Path::new(arg);
    if path.exists() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        return parse_design(&text).with_context(|| format!("parsing {arg}"));
    }
    fixtures::load(arg).map_err(|_| anyhow!("{arg}: no such file or fixture"))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn matrix_rows(c: &Collineation) -> Vec<Vec<u8>> {
    c.matrix().to_rows()
}

fn percent(p: f64) -> String {
    let s = format!("{p:.2}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

fn rational(r: Rational) -> String {
    r.to_string()
}

fn construct(cmd: Construct) -> Result<bool> {
    match cmd {
        Construct::Spread { n, t, poly, out } => {
            let poly = match poly {
                Some(c) => PrimitivePoly::from_coefficients(&c)?,
                None => PrimitivePoly::builtin(n)?,
            };
            let s = cyclic_spread(n, t, &poly)?;
            emit(&render_design(&s.into()), out.as_deref())?;
        }
        Construct::Star {
            spread,
            nucleus,
            out,
        } => {
            let d = load(&spread)?;
            let psi = d.as_spread().ok_or_else(|| anyhow!("{spread} is not a spread"))?;
            let n = psi.n() + nucleus.len();
            let basis = nucleus
                .iter()
                .map(|l| Point::parse(l, n))
                .collect::<pgdesign::Result<Vec<_>>>()?;
            let star = build_star(psi, &basis)?;
            if star.mu() == 1 {
                bail!("a single-ray star cannot be written as a design file");
            }
            emit(&render_design(&star.into()), out.as_deref())?;
        }
    }
    Ok(true)
}

fn iso_json(r: &IsoResult) -> Value {
    json!({
        "result": r.result,
        "mismatch": r.mismatch.map(|m| m.to_string()),
        "iecs": r.iecs.iter().map(matrix_rows).collect::<Vec<_>>(),
        "stats": {
            "subsets": r.stats.subsets,
            "candidates": r.stats.candidates,
            "equivalence_checks": r.stats.equivalence_checks,
            "raw_accepted": r.stats.raw_accepted,
        },
    })
}

fn check(cmd: Check) -> Result<bool> {
    match cmd {
        Check::Equiv { a, b } => {
            let verdict = match (load(&a)?, load(&b)?) {
                (Design::Spread(x), Design::Spread(y)) => check_spread_equivalence(&x, &y),
                (Design::Star(x), Design::Star(y)) => check_star_equivalence(&x, &y),
                _ => false,
            };
            println!("{verdict}");
            Ok(verdict)
        }
        Check::Iso(args) => {
            let mut opts = if args.all_iecs {
                SearchOptions::find_all()
            } else {
                SearchOptions::find_first()
            }
            .parallel(args.parallel);
            if args.progress {
                opts = opts.with_progress(|p| eprintln!("percent done: {}", percent(p)));
            }
            let r = match (load(&args.a)?, load(&args.b)?) {
                (Design::Spread(x), Design::Spread(y)) => check_spread_isomorphism(&x, &y, &opts)?,
                (Design::Star(x), Design::Star(y)) => check_star_isomorphism(&x, &y, &opts)?,
                _ => bail!("cannot compare a spread with a star"),
            };
            if let Some(m) = r.mismatch {
                eprintln!("{m}");
            }
            if args.json {
                println!("{}", iso_json(&r));
            } else {
                println!("{}", r.result);
                for c in &r.iecs {
                    println!();
                    println!("{c}");
                }
            }
            Ok(r.result)
        }
    }
}

fn star_to_spread_cmd(arg: &str, as_json: bool) -> Result<bool> {
    let d = load(arg)?;
    let star = d.as_star().ok_or_else(|| anyhow!("{arg} is not a star"))?;
    let dec = star_to_spread(star)?;
    let text = render_design(&dec.spread.clone().into());
    if as_json {
        println!(
            "{}",
            json!({
                "spread": text,
                "collineation": matrix_rows(&dec.collineation),
                "nucleus": dec.nucleus.points().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            })
        );
    } else {
        print!("{text}");
        println!("# collineation");
        for line in dec.collineation.to_string().lines() {
            println!("# {line}");
        }
    }
    Ok(true)
}

fn rank_cmd(args: &[String], as_json: bool) -> Result<bool> {
    let mut rows = Vec::new();
    for a in args {
        rows.push((a, RankedDesign::new(load(a)?)?));
    }
    if as_json {
        let v: Vec<Value> = rows
            .iter()
            .map(|(name, r)| {
                json!({
                    "design": name,
                    "v": rational(r.v_value),
                    "v_decimal": r.v_decimal(),
                    "p": r.p_values.iter().map(|&p| rational(p)).collect::<Vec<_>>(),
                })
            })
            .collect();
        println!("{}", Value::Array(v));
    } else {
        println!("design\tV\tV_decimal\tp");
        for (name, r) in rows {
            let p: Vec<String> = r.p_values.iter().map(|&p| rational(p)).collect();
            println!("{name}\t{}\t{}\t{}", r.v_value, r.v_decimal(), p.join(" "));
        }
    }
    Ok(true)
}

fn catalog_record(out: &mut String, index: usize, e: &CatalogEntry) {
    let r = &e.representative;
    let p: Vec<String> = r.p_values.iter().map(|&p| rational(p)).collect();
    let seen: Vec<String> = e.v_values.iter().map(|&v| rational(v)).collect();
    out.push_str(&format!("# entry {index}\n"));
    out.push_str(&format!("# found {}\n", e.found_count));
    out.push_str(&format!("# v {} {}\n", r.v_value, r.v_decimal()));
    out.push_str(&format!("# p {}\n", p.join(" ")));
    out.push_str(&format!("# v_seen {}\n", seen.join(" ")));
    out.push_str(&format!("# best_v {}\n", e.best.v_value));
    for b in e.signature.bitstrings() {
        out.push_str(&format!("# signature {b}\n"));
    }
    out.push_str(&render_design(&r.design));
}

fn catalog_cmd(args: CatalogArgs) -> Result<bool> {
    let d = load(&args.seed)?;
    let seed = d.as_spread().ok_or_else(|| anyhow!("{} is not a spread", args.seed))?;
    let cat = catalog_search(seed, args.budget, args.rng_seed)?;
    let entries = if args.nucleus.is_empty() {
        cat.entries.clone()
    } else {
        let n = seed.n() + args.nucleus.len();
        let basis = args
            .nucleus
            .iter()
            .map(|l| Point::parse(l, n))
            .collect::<pgdesign::Result<Vec<_>>>()?;
        star_catalog_from_spreads(&cat.entries, &basis)?
    };
    let mut text = String::new();
    for (i, e) in entries.iter().enumerate() {
        if i > 0 {
            text.push('\n');
        }
        catalog_record(&mut text, i + 1, e);
    }
    eprintln!(
        "classes: {} permutations: {} spread hits: {}",
        entries.len(),
        cat.permutations,
        cat.spread_hits
    );
    emit(&text, args.out.as_deref())?;
    Ok(true)
}

fn fixtures_cmd(cmd: Fixtures) -> Result<bool> {
    match cmd {
        Fixtures::List => {
            for name in fixtures::NAMES {
                println!("{name}");
            }
        }
        Fixtures::Show { name } => {
            let d = fixtures::load(&name)?;
            print!("{}", render_design(&d));
        }
    }
    Ok(true)
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring the thread pool")?;
    }
    match cli.command {
        Command::Construct(c) => construct(c),
        Command::Check(c) => check(c),
        Command::StarToSpread { design, json } => star_to_spread_cmd(&design, json),
        Command::Bitstrings { design } => {
            print!("{}", load(&design)?.signature());
            println!();
            Ok(true)
        }
        Command::Rank { designs, json } => rank_cmd(&designs, json),
        Command::Catalog(args) => catalog_cmd(args),
        Command::Fixtures(f) => fixtures_cmd(f),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
