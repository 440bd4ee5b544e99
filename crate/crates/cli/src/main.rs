//! `gerst`: tables, verifications, Kuranishi recursion and Frobenius products
//! for nilmanifold Gerstenhaber algebras.

mod frobenius;
mod input;
mod kuranishi;
mod render;
mod tables;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use input::{bad, InputError, SpecFile};

#[derive(Parser)]
#[command(name = "gerst", version, about = "Exact computations on differential Gerstenhaber algebras")]
struct Cli {
    /// Also write the structured report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Input {
    /// Kodaira manifold of complex dimension N + 1.
    #[arg(long, value_name = "N", conflicts_with_all = ["symplectic", "spec"])]
    kodaira: Option<usize>,
    /// Invariant symplectic form with parameters u1,v1,u2,v2.
    #[arg(long, value_name = "U1,V1,U2,V2", allow_hyphen_values = true, conflicts_with = "spec")]
    symplectic: Option<String>,
    /// JSON specification file.
    #[arg(long, value_name = "PATH")]
    spec: Option<PathBuf>,
}

impl Input {
    fn resolve(&self, default: Option<SpecFile>) -> anyhow::Result<SpecFile> {
        if let Some(n) = self.kodaira {
            return Ok(SpecFile::Kodaira { n });
        }
        if let Some(s) = &self.symplectic {
            return SpecFile::symplectic_flag(s);
        }
        if let Some(p) = &self.spec {
            return SpecFile::read(p);
        }
        default.ok_or_else(|| bad("no input: pass --kodaira, --symplectic or --spec"))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Strict,
    Symbolic,
}

#[derive(Subcommand)]
enum Command {
    /// Cohomology dimensions, harmonic and complement bases, bracket tables.
    Tables {
        #[command(flatten)]
        input: Input,
        /// Restrict to total degree p + q.
        #[arg(long)]
        degree: Option<u32>,
        /// Print brackets among the listed elements.
        #[arg(long)]
        brackets: bool,
    },
    /// Check the algebra axioms, abelian cohomology or the mirror map.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        axioms: bool,
        #[arg(long = "abelian-h")]
        abelian_h: bool,
        #[arg(long)]
        mirror: bool,
        /// Degree bound on monomials entering the Jacobi identities.
        #[arg(long, value_name = "K")]
        jacobi_degree: Option<u32>,
    },
    /// Solve the extended Maurer-Cartan equation.
    Kuranishi {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'D', long, default_value_t = 6)]
        truncation: u32,
        #[arg(long, value_enum, default_value_t = Mode::Strict)]
        mode: Mode,
        /// Substitute the component equations and list gauge brackets.
        #[arg(long)]
        components: bool,
        /// Use only the degree-two cohomology classes as coordinates.
        #[arg(long)]
        degree2: bool,
    },
    /// Product table on the generic stratum of the surface deformation space.
    Frobenius {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'D', long, default_value_t = 6)]
        truncation: u32,
    },
}

/// What a command produced.
pub struct Outcome {
    pub text: String,
    pub results: Value,
    pub passed: bool,
}

fn run(cli: &Cli) -> anyhow::Result<(SpecFile, Outcome)> {
    match &cli.command {
        Command::Tables { input, degree, brackets } => {
            let spec = input.resolve(None)?;
            let out = tables::run(&spec.build()?, *degree, *brackets)?;
            Ok((spec, out))
        }
        Command::Verify { input, axioms, abelian_h, mirror, jacobi_degree } => {
            let spec = input.resolve(None)?;
            let out = verify::run(&spec.build()?, *axioms, *abelian_h, *mirror, *jacobi_degree)?;
            Ok((spec, out))
        }
        Command::Kuranishi { input, truncation, mode, components, degree2 } => {
            let spec = input.resolve(Some(SpecFile::Kodaira { n: 1 }))?;
            let out = kuranishi::run(&spec.build()?, *truncation, *mode, *components, *degree2)?;
            Ok((spec, out))
        }
        Command::Frobenius { input, truncation } => {
            let spec = input.resolve(Some(SpecFile::Kodaira { n: 1 }))?;
            let out = frobenius::run(&spec.build()?, *truncation)?;
            Ok((spec, out))
        }
    }
}

fn report(args: &[String], spec: &SpecFile, out: &Outcome) -> anyhow::Result<String> {
    let input = serde_json::to_value(spec)?;
    let digest = Sha256::digest(serde_json::to_string(&input)?.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    let doc = json!({
        "command": args,
        "input": input,
        "input_sha256": hex,
        "passed": out.passed,
        "results": out.results,
    });
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    let result = run(&cli).and_then(|(spec, out)| {
        if let Some(path) = &cli.json {
            let doc = report(&args, &spec, &out)?;
            std::fs::write(path, doc).map_err(|e| bad(format!("{}: {e}", path.display())))?;
        }
        Ok(out)
    });
    match result {
        Ok(out) => {
            print!("{}", out.text);
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) if e.is::<InputError>() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
