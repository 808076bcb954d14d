mod catalog;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use qhorder_core::biset::{build_sq_mirrored, random_cocycle_check, verify_condensation_monotonic};
use qhorder_core::brauer;
use qhorder_core::oracle::run_small_suite;
use qhorder_core::perm::builtin_group;
use qhorder_core::{build_brauer_order, build_order, character_table, BigRational, ObjectList};

#[derive(Parser)]
#[command(name = "qhorder", version, about = "Label orders for biset categories and Brauer algebras")]
struct Cli {
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
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
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// ⊑, ⊴ and ≤ on a catalog of groups.
    BisetOrder {
        /// `builtin:s4family`, `builtin:1,C2,...` or a JSON file.
        #[arg(long, default_value = "builtin:s4family")]
        catalog: String,
        #[command(flatten)]
        output: Output,
        /// Run the consistency checks as well.
        #[arg(long)]
        verify: bool,
    },
    /// ⊑, ⊴ and ≤ for the Brauer algebra of degree `n`.
    BrauerOrder {
        #[arg(long)]
        n: usize,
        /// Nonzero parameter, integer or `P/Q`.
        #[arg(long, default_value = "1")]
        delta: String,
        #[command(flatten)]
        output: Output,
        #[arg(long)]
        verify: bool,
    },
    /// The ⊑ grid of the nine-group catalog, `*` marking surviving labels.
    Table1 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Brute-force cross-check of the criterion on small instances.
    OracleCheck {
        #[arg(long, default_value = "small")]
        suite: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Character table of a builtin group, or of its automorphism group.
    CharTable {
        #[arg(long)]
        group: String,
        #[arg(long)]
        aut: bool,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_delta(s: &str) -> Result<BigRational> {
    s.trim().parse::<BigRational>().map_err(|e| anyhow::anyhow!("invalid delta {s}: {e}"))
}

fn biset_order(catalog: &str, output: &Output, verify: bool) -> Result<()> {
    let objs = catalog::load(catalog)?;
    let rel = build_order(&objs)?;
    let report = verify_condensation_monotonic(&objs, &rel)?;
    if verify {
        rel.verify()?;
        if build_sq_mirrored(&objs)? != rel.sq {
            bail!("mirrored criterion disagrees");
        }
        random_cocycle_check(&objs, 1000, 1)?;
        eprintln!("verify: ok");
    }
    let text = match output.format {
        Format::Json => serde_json::to_string_pretty(&render::biset_out(&objs, &rel, report))? + "\n",
        Format::Csv => render::csv(&rel, |l| (l.i, l.r))?,
        Format::Table => render::grid(&rel, |l| objs.epsilon_survives(*l)),
    };
    emit(&text, output.out.as_ref())
}

fn brauer_order(n: usize, delta: &str, output: &Output, verify: bool) -> Result<()> {
    let delta = parse_delta(delta)?;
    let order = build_brauer_order(n, &delta)?;
    if verify {
        order.relation.verify()?;
        brauer::random_cocycle_check(n, 1000, 1)?;
        eprintln!("verify: ok");
    }
    let text = match output.format {
        Format::Json => serde_json::to_string_pretty(&render::brauer_out(&order))? + "\n",
        Format::Csv => render::csv(&order.relation, |l| (l.i, l.r))?,
        Format::Table => render::grid(&order.relation, |_| false),
    };
    emit(&text, output.out.as_ref())
}

fn table1(out: Option<&PathBuf>) -> Result<()> {
    let objs = ObjectList::s4_family();
    let rel = build_order(&objs)?;
    emit(&render::grid(&rel, |l| objs.epsilon_survives(*l)), out)
}

fn oracle_check(suite: &str, format: Format) -> Result<bool> {
    if suite != "small" {
        bail!("unknown suite {suite}");
    }
    let checks = run_small_suite()?;
    let passed = checks.iter().all(|c| c.passed);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&checks)?),
        Format::Csv | Format::Table => {
            for c in &checks {
                println!("{} {} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
        }
    }
    Ok(passed)
}

fn char_table(name: &str, aut: bool) -> Result<()> {
    let g = builtin_group(name)?;
    let g = if aut { qhorder_core::perm::automorphism_group(&g).group } else { g };
    let t = character_table(&g)?;
    t.verify()?;
    println!("order {}  classes {}", g.order(), t.len());
    let head: Vec<String> = (0..t.len())
        .map(|c| format!("{}/{}", t.classes.orders[c], t.classes.sizes[c]))
        .collect();
    println!("ord/size  {}", head.join("  "));
    for (r, row) in t.rows.iter().enumerate() {
        let vals: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        println!("χ{:<8} {}", r + 1, vals.join("  "));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match &cli.command {
        Command::BisetOrder { catalog, output, verify } => biset_order(catalog, output, *verify)?,
        Command::BrauerOrder { n, delta, output, verify } => brauer_order(*n, delta, output, *verify)?,
        Command::Table1 { out } => table1(out.as_ref())?,
        Command::OracleCheck { suite, format } => return oracle_check(suite, *format),
        Command::CharTable { group, aut } => char_table(group, *aut)?,
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.max(1)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };
    match pool.install(|| run(cli)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
