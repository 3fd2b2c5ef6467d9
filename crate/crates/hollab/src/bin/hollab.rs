//! Thin command-line front end over the hollab library: homology tables,
//! cohomology ranks, Dickson/transgression witnesses, congruence checks, and
//! the verification suites. Tables go to stdout, diagnostics to stderr.
//! Exit codes: 0 all checks pass, 1 some check failed, 2 usage error.

use clap::{Parser, Subcommand};
use hollab::cli::{
    cmd_cohomology_ranks, cmd_congruence, cmd_dickson, cmd_homology, cmd_verify, HomologyMode,
    OutputFormat, Table,
};

#[derive(Parser)]
#[command(name = "hollab", version, about = "exact holomorph algebra workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integer homology of Hol(Z_{p^r}) per degree
    Homology {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 8)]
        qmax: usize,
        /// computed | closed | both
        #[arg(long, default_value = "both")]
        mode: String,
        /// markdown | csv | json
        #[arg(long, default_value = "markdown")]
        format: String,
    },
    /// Mod-p cohomology ranks of Hol(Z_{p^r}) per degree
    CohomologyRanks {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 8)]
        qmax: usize,
        #[arg(long, default_value = "markdown")]
        format: String,
    },
    /// The Dickson coefficient and its degree-2 transgression image
    Dickson {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        /// r3 | rgt3 | odd
        #[arg(long)]
        mode: String,
    },
    /// Congruence-subgroup checks for Gamma_{n,k} at the prime p
    Congruence {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        p: u64,
        /// all | orders | omega1 | ppower | bracket | structure | bockstein | mike | powerful
        #[arg(long, default_value = "all")]
        check: String,
        #[arg(long, default_value = "markdown")]
        format: String,
    },
    /// Run a named verification suite (or "all")
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "markdown")]
        format: String,
    },
}

fn main() {
    if let Ok(threads) = std::env::var("HOLLAB_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build_global();
        }
    }
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(code) => code,
    }
}

fn parse_format(s: &str) -> Result<OutputFormat, i32> {
    s.parse::<OutputFormat>().map_err(|e| {
        eprintln!("error: {e}");
        2
    })
}

fn dispatch(cli: Cli) -> Result<i32, i32> {
    match cli.command {
        Command::Homology {
            p,
            r,
            qmax,
            mode,
            format,
        } => {
            let format = parse_format(&format)?;
            let mode = mode.parse::<HomologyMode>().map_err(usage)?;
            let (table, all_agree) = cmd_homology(p, r, qmax, mode).map_err(usage)?;
            print_table(&table, format);
            Ok(if all_agree { 0 } else { 1 })
        }
        Command::CohomologyRanks { p, r, qmax, format } => {
            let format = parse_format(&format)?;
            let table = cmd_cohomology_ranks(p, r, qmax).map_err(usage)?;
            print_table(&table, format);
            Ok(0)
        }
        Command::Dickson { n, p, mode } => {
            let out = cmd_dickson(n, p, &mode).map_err(usage)?;
            print!("{out}");
            Ok(0)
        }
        Command::Congruence {
            n,
            k,
            p,
            check,
            format,
        } => {
            let format = parse_format(&format)?;
            let (table, ok) = cmd_congruence(n, k, p, &check).map_err(usage)?;
            print_table(&table, format);
            Ok(if ok { 0 } else { 1 })
        }
        Command::Verify {
            suite,
            seed,
            format,
        } => {
            let format = parse_format(&format)?;
            let (rendered, all_pass) = cmd_verify(&suite, seed, format).map_err(usage)?;
            if rendered.ends_with('\n') {
                print!("{rendered}");
            } else {
                println!("{rendered}");
            }
            Ok(if all_pass { 0 } else { 1 })
        }
    }
}

fn usage(e: hollab::Error) -> i32 {
    eprintln!("error: {e}");
    2
}

fn print_table(table: &Table, format: OutputFormat) {
    print!("{}", table.render(format));
}
