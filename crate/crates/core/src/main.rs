use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use radial_core::report::{execute, Command, OracleCommand, RunConfig, UNITS_ENV};

/// Semiclassical radial spectra, wavefunctions and reference tables.
#[derive(Parser, Debug)]
#[command(name = "radial", version)]
struct Cli {
    /// Settings file of `key = value` lines; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Units preset: natural or ev-nm.
    #[arg(long, global = true)]
    units: Option<String>,
    /// Output format: text, csv or json.
    #[arg(long, global = true)]
    format: Option<String>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Reproduce a comparison table.
    Tables {
        /// part2_table1, part2_table2, part2_table3 or hydrogen.
        #[arg(long)]
        which: Option<String>,
    },
    /// Self-consistent energy levels.
    Spectrum {
        #[command(flatten)]
        potential: PotentialArgs,
        /// ground, symmetric, antisymmetric or general.
        #[arg(long)]
        branch: Option<String>,
        /// Branch index range, e.g. 1..3.
        #[arg(long)]
        n: Option<String>,
        /// Solve for negative (bound below zero) energies.
        #[arg(long, num_args = 0..=1, default_missing_value = "true")]
        signed: Option<String>,
    },
    /// Classical turning points at a given energy.
    TurningPoints {
        #[command(flatten)]
        potential: PotentialArgs,
        #[arg(long, allow_hyphen_values = true)]
        energy: Option<String>,
    },
    /// Samples of a normalized radial wavefunction.
    Wavefunction {
        #[command(flatten)]
        potential: PotentialArgs,
        #[arg(long)]
        n: Option<String>,
        /// symmetric or antisymmetric.
        #[arg(long)]
        parity: Option<String>,
        #[arg(long)]
        samples: Option<String>,
        /// Free particle: wave number K.
        #[arg(long)]
        k: Option<String>,
        /// Free particle: exp+, exp-, cos or sin.
        #[arg(long)]
        carrier: Option<String>,
        /// Free particle: outer sampling radius.
        #[arg(long)]
        rmax: Option<String>,
    },
    /// Reference results.
    #[command(subcommand)]
    Oracle(OracleVerb),
}

#[derive(Subcommand, Debug)]
enum OracleVerb {
    /// Zeros of the spherical Bessel functions.
    BesselZeros {
        #[arg(long)]
        l: Option<String>,
        #[arg(long)]
        n: Option<String>,
    },
    /// Numerov shooting for a bound state with a given node count.
    Numerov {
        #[command(flatten)]
        potential: PotentialArgs,
        #[arg(long)]
        nodes: Option<String>,
        /// Energy bracket `lo,hi`.
        #[arg(long, allow_hyphen_values = true)]
        bracket: Option<String>,
    },
    /// Oscillator levels (2n + l + 3/2) hbar omega.
    Ho {
        #[arg(long)]
        l: Option<String>,
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        omega: Option<String>,
        /// from-zero or from-one.
        #[arg(long)]
        indexing: Option<String>,
    },
    /// Infinite spherical well levels.
    Well {
        #[arg(long = "L", alias = "radius")]
        radius: Option<String>,
        #[arg(long)]
        l: Option<String>,
        #[arg(long)]
        n: Option<String>,
    },
}

#[derive(Args, Debug)]
struct PotentialArgs {
    /// Potential, e.g. ho:omega=1, well:L=1, hoso:omega=1,j=2.5,s=0.5,c0=0.015.
    #[arg(long)]
    potential: Option<String>,
    /// Angular momentum or range, e.g. 0..4.
    #[arg(long)]
    l: Option<String>,
}

fn flags(cli: &Cli) -> anyhow::Result<(Command, RunConfig)> {
    let mut c = RunConfig::new();
    let mut put = |key: &str, value: &Option<String>| -> anyhow::Result<()> {
        if let Some(v) = value {
            c.set(key, v.clone())?;
        }
        Ok(())
    };
    put("units", &cli.units)?;
    put("format", &cli.format)?;
    put("out", &cli.out.as_ref().map(|p| p.display().to_string()))?;
    let potential = |p: &PotentialArgs, put: &mut dyn FnMut(&str, &Option<String>) -> anyhow::Result<()>| {
        put("potential", &p.potential)?;
        put("l", &p.l)
    };
    let command = match &cli.command {
        Verb::Tables { which } => {
            put("which", which)?;
            Command::Tables
        }
        Verb::Spectrum {
            potential: p,
            branch,
            n,
            signed,
        } => {
            potential(p, &mut put)?;
            put("branch", branch)?;
            put("n", n)?;
            put("signed", signed)?;
            Command::Spectrum
        }
        Verb::TurningPoints { potential: p, energy } => {
            potential(p, &mut put)?;
            put("energy", energy)?;
            Command::TurningPoints
        }
        Verb::Wavefunction {
            potential: p,
            n,
            parity,
            samples,
            k,
            carrier,
            rmax,
        } => {
            potential(p, &mut put)?;
            put("n", n)?;
            put("parity", parity)?;
            put("samples", samples)?;
            put("k", k)?;
            put("carrier", carrier)?;
            put("rmax", rmax)?;
            Command::Wavefunction
        }
        Verb::Oracle(OracleVerb::BesselZeros { l, n }) => {
            put("l", l)?;
            put("n", n)?;
            Command::Oracle(OracleCommand::BesselZeros)
        }
        Verb::Oracle(OracleVerb::Numerov {
            potential: p,
            nodes,
            bracket,
        }) => {
            potential(p, &mut put)?;
            put("nodes", nodes)?;
            put("bracket", bracket)?;
            Command::Oracle(OracleCommand::Numerov)
        }
        Verb::Oracle(OracleVerb::Ho { l, n, omega, indexing }) => {
            put("l", l)?;
            put("n", n)?;
            put("omega", omega)?;
            put("indexing", indexing)?;
            Command::Oracle(OracleCommand::Ho)
        }
        Verb::Oracle(OracleVerb::Well { radius, l, n }) => {
            put("radius", radius)?;
            put("l", l)?;
            put("n", n)?;
            Command::Oracle(OracleCommand::Well)
        }
    };
    Ok((command, c))
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    let (command, from_flags) = flags(cli)?;
    let file = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::new(),
    };
    let config = file.overlay(&from_flags);
    let env_units = std::env::var(UNITS_ENV).ok();
    let report = execute(command, &config, env_units.as_deref())?;
    match config.get("out") {
        Some(path) => std::fs::write(path, &report).with_context(|| format!("cannot write {path}"))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(&report).context("cannot write to standard output")?;
            stdout.flush().context("cannot write to standard output")?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            let usage = err
                .downcast_ref::<radial_core::Error>()
                .is_some_and(radial_core::Error::is_usage);
            ExitCode::from(if usage { 2 } else { 1 })
        }
    }
}
