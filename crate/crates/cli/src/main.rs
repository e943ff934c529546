use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sp4kl::config::{
    parse_modulus, parse_pair, parse_rational, parse_weyl_list, resolve_budget, CommandConfig,
    Format, NSpec, RunConfig, Suite,
};
use sp4kl::{exit_code, run, EXIT_USAGE};
use sp4kl_core::exact::Scalar;
use sp4kl_core::{LatticeDesc, WeylWord};

#[derive(Parser)]
#[command(
    name = "sp4kl",
    version,
    about = "Exact Kloosterman sums for Sp(4) lattices"
)]
struct Cli {
    /// Worker threads (0: one per core)
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Candidate budget per enumeration; overrides SP4KL_BUDGET
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    output: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Target {
    /// `full` or `pa:<q>`
    #[arg(long)]
    lattice: LatticeDesc,
    /// Weyl element, e.g. `1`, `s1s2s1`, `s1s2s1s2`
    #[arg(long)]
    w: WeylWord,
    /// Modulus `c1,c2`
    #[arg(long, value_parser = parse_modulus)]
    c: [u64; 2],
}

#[derive(Clone)]
struct WeylList(Vec<WeylWord>);

impl std::str::FromStr for WeylList {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        parse_weyl_list(s).map(WeylList)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one Kloosterman sum
    Kl {
        #[command(flatten)]
        target: Target,
        #[arg(long = "M", value_parser = parse_pair::<i64>, default_value = "1,1")]
        m: [i64; 2],
        /// `n1,n2` or `auto`
        #[arg(long = "N", default_value = "auto")]
        n: NSpec,
    },
    /// List the Kloosterman set
    Enumerate {
        #[command(flatten)]
        target: Target,
    },
    /// Tabulate sums over a box of moduli
    Scan {
        #[arg(long)]
        lattice: LatticeDesc,
        /// Comma list, `relevant` or `all`
        #[arg(long, default_value = "relevant")]
        w: WeylList,
        #[arg(long)]
        c1_max: u64,
        #[arg(long)]
        c2_max: u64,
        #[arg(long = "M", value_parser = parse_pair::<i64>, default_value = "1,1")]
        m: [i64; 2],
        #[arg(long = "N", default_value = "auto")]
        n: NSpec,
    },
    /// Truncated geometric-side sum
    Geo {
        #[arg(long)]
        lattice: LatticeDesc,
        #[arg(long)]
        w: WeylWord,
        /// Truncation, a positive rational
        #[arg(long = "Z", value_parser = parse_rational)]
        z: Scalar,
    },
    /// Counting function split by Arthur type
    Atlas {
        #[arg(long)]
        lattice: LatticeDesc,
        #[arg(long, value_parser = parse_rational)]
        sigma: Scalar,
        #[arg(long = "M", value_parser = parse_rational, default_value = "1")]
        m: Scalar,
        /// Count of general-type forms
        #[arg(long, default_value_t = 0)]
        general: u64,
        /// Count of Yoshida-type forms
        #[arg(long, default_value_t = 0)]
        yoshida: u64,
        /// GL(2) forms feeding type P
        #[arg(long, default_value_t = 0)]
        gl2: u64,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 5)]
        qmax: u64,
        #[arg(long, default_value_t = 4)]
        cmax: u64,
    },
}

fn command_config(c: Command) -> CommandConfig {
    match c {
        Command::Kl { target, m, n } => CommandConfig::Kl {
            lattice: target.lattice,
            w: target.w,
            c: target.c,
            m,
            n,
        },
        Command::Enumerate { target } => CommandConfig::Enumerate {
            lattice: target.lattice,
            w: target.w,
            c: target.c,
        },
        Command::Scan {
            lattice,
            w,
            c1_max,
            c2_max,
            m,
            n,
        } => CommandConfig::Scan {
            lattice,
            ws: w.0,
            c1_max,
            c2_max,
            m,
            n,
        },
        Command::Geo { lattice, w, z } => CommandConfig::Geo { lattice, w, z },
        Command::Atlas {
            lattice,
            sigma,
            m,
            general,
            yoshida,
            gl2,
        } => CommandConfig::Atlas {
            lattice,
            sigma,
            m,
            general,
            yoshida,
            gl2,
        },
        Command::Verify { suite, qmax, cmax } => CommandConfig::Verify { suite, qmax, cmax },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    let budget = match resolve_budget(cli.budget) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    let cfg = RunConfig {
        command: command_config(cli.command),
        budget,
        format: cli.format,
        output: cli.output,
        threads: cli.threads,
    };
    let out = match run(&cfg) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let written = match &cfg.output {
        Some(path) => std::fs::write(path, &out.text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(out.text.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    ExitCode::from(exit_code(&cfg, &out) as u8)
}
