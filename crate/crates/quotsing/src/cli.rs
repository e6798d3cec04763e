//! Command-line front end. [`run`] does all the work and returns the exit
//! code: 0 when every asserted check passes, 1 on a failed check, 2 on a
//! usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use quotsing_core::cohomology::{line_twist_cohomology, ProjBundleData};
use quotsing_core::model::{
    build_model, check_names, verify_model, Components, VerifyOptions, MAX_N,
};
use quotsing_core::report::{CertificateReport, Status};
use quotsing_core::toric::{normal_fan_blowup, projbundle_fan, CechOracle, ProjBundleRays, TDivisor, CECH_MAX_RANK};
use quotsing_core::Error;

use crate::fanfile::write_fan;
use crate::output::{render, Format, RunConfig};
use crate::properties::{run_properties, SUITES};
use crate::{unsafe_caps, SystemClock, UNSAFE_CAPS_VAR};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Čech rank cap used when the override variable is set.
const UNSAFE_CECH_RANK: usize = 9;

#[derive(Debug, Parser)]
#[command(name = "quotsing", version, about = "Certificates for the 1/3(1,2,...,1,2) quotient singularity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run certificate checks and write a report.
    Verify {
        #[arg(long)]
        n: usize,
        /// Largest multiple i of the exceptional divisor in the E-level groups.
        #[arg(long, default_value_t = 5)]
        i_max: usize,
        /// Comma-separated: all, model, cohomology, properties, or check names.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        checks: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Seed of the randomized property suites.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Export the computed blow-up fan (or the star of one of its rays).
    Fan {
        #[arg(long)]
        n: usize,
        /// 1-based ray label: rays 1..2n are the coordinate axes, 2n+1 and 2n+2
        /// the exceptional rays.
        #[arg(long)]
        star: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// h^*(F_a, O_F(t) ⊗ p^*O(l)) over P^{n-1}.
    Cohomology {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        t: i64,
        #[arg(long, allow_negative_numbers = true)]
        l: i64,
        /// Cross-check against the toric Čech oracle.
        #[arg(long)]
        oracle_check: bool,
    },
}

/// A usage error: reported on stderr with exit code 2.
#[derive(Debug)]
pub struct Usage(pub String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    if unsafe_caps() {
        let _ = writeln!(err, "warning: {UNSAFE_CAPS_VAR} is set; desk-scale caps are lifted and results are unsupported");
    }
    let result = match cli.command {
        Command::Verify { n, i_max, checks, out: path, format, seed } => {
            let config = RunConfig { n, i_max, checks, out: path, format, seed };
            cmd_verify(&config, out)
        }
        Command::Fan { n, star, out: path } => cmd_fan(n, star, path.as_deref(), out),
        Command::Cohomology { n, a, t, l, oracle_check } => cmd_cohomology(n, a, t, l, oracle_check, out),
    };
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn check_n(n: usize) -> Result<(), Usage> {
    if !(1..=MAX_N).contains(&n) {
        return Err(Usage(format!("n must lie in 1..={MAX_N}, got {n}")));
    }
    Ok(())
}

/// Which parts of `verify` to run, resolved from the `--checks` list.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Selection {
    pub model: Vec<String>,
    pub all_model: bool,
    pub cohomology: bool,
    pub properties: Vec<String>,
    pub all_properties: bool,
}

pub fn parse_checks(items: &[String]) -> Result<Selection, String> {
    let mut s = Selection::default();
    for raw in items {
        let item = raw.trim();
        match item {
            "all" => {
                s.all_model = true;
                s.cohomology = true;
                s.all_properties = true;
            }
            "model" => s.all_model = true,
            "cohomology" => s.cohomology = true,
            "properties" => s.all_properties = true,
            _ if check_names().contains(&item) => s.model.push(item.to_string()),
            _ if SUITES.contains(&item) => s.properties.push(item.to_string()),
            _ => {
                return Err(format!(
                    "unknown check `{item}`; expected all, model, cohomology, properties, one of {} or one of {}",
                    check_names().join(", "),
                    SUITES.join(", ")
                ))
            }
        }
    }
    Ok(s)
}

pub fn cmd_verify(config: &RunConfig, stdout: &mut dyn Write) -> Result<i32, Usage> {
    check_n(config.n)?;
    if config.i_max == 0 {
        return Err(Usage("--i-max must be at least 1".into()));
    }
    let sel = parse_checks(&config.checks).map_err(Usage)?;
    let clock = SystemClock::new();
    let options = VerifyOptions {
        i_max: config.i_max,
        components: Components { model: sel.all_model || !sel.model.is_empty(), cohomology: sel.cohomology },
        only: (!sel.all_model).then(|| sel.model.clone()),
    };
    let mut report = CertificateReport::default();
    if options.components.model || options.components.cohomology {
        report = verify_model(config.n, &options, &clock)?;
    }
    if sel.all_properties || !sel.properties.is_empty() {
        let names: Vec<&str> = if sel.all_properties { Vec::new() } else { sel.properties.iter().map(|s| s.as_str()).collect() };
        report.extend(run_properties(&names, config.seed, &clock));
    }
    let text = render(&report, config);
    match &config.out {
        Some(path) => {
            write_file(path, &text)?;
            let failed = report.failures().count();
            let _ = writeln!(
                stdout,
                "{} checks, {} failed, {} skipped; report written to {}",
                report.checks.len(),
                failed,
                report.checks.iter().filter(|c| matches!(c.status, Status::Skipped(_))).count(),
                path.display()
            );
        }
        None => {
            let _ = stdout.write_all(text.as_bytes());
        }
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
}

fn write_file(path: &Path, text: &str) -> Result<(), Usage> {
    std::fs::write(path, text).map_err(|e| Usage(format!("cannot write {}: {e}", path.display())))
}

pub fn cmd_fan(n: usize, star: Option<usize>, path: Option<&Path>, stdout: &mut dyn Write) -> Result<i32, Usage> {
    check_n(n)?;
    let model = build_model(n)?;
    let fan = normal_fan_blowup(&model.ideal, &model.sigma)?;
    let fan = match star {
        None => fan,
        Some(k) if (1..=fan.num_rays()).contains(&k) => fan.star(k - 1)?,
        Some(k) => return Err(Usage(format!("--star {k} outside 1..={}", fan.num_rays()))),
    };
    let text = write_fan(&fan);
    match path {
        Some(p) => write_file(p, &text)?,
        None => {
            let _ = stdout.write_all(text.as_bytes());
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_cohomology(n: usize, a: i64, t: i64, l: i64, oracle: bool, stdout: &mut dyn Write) -> Result<i32, Usage> {
    let b = ProjBundleData::new(n, a)?;
    let h = line_twist_cohomology(&b, t, l)?;
    let _ = writeln!(stdout, "h^*(O_F({t}) ⊗ p*O({l})) on F_{a} over P^{} = {}", n - 1, h);
    if !oracle {
        return Ok(EXIT_OK);
    }
    let fan = projbundle_fan(a, n)?;
    let lay = ProjBundleRays { n };
    let d = &TDivisor::prime(&fan, lay.fiber(0)).scaled(t) + &TDivisor::prime(&fan, lay.base(1)).scaled(l);
    let cap = if unsafe_caps() { UNSAFE_CECH_RANK } else { CECH_MAX_RANK };
    let toric = CechOracle::with_cap(&fan, cap)?.cohomology(&d)?;
    let agree = toric == h;
    let _ = writeln!(stdout, "Čech oracle = {}: {}", toric, if agree { "agree" } else { "DISAGREE" });
    Ok(if agree { EXIT_OK } else { EXIT_FAILED })
}
