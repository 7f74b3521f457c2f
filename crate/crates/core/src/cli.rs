//! Command-line front end.
//!
//! Exit codes: 0 success, 1 at least one failing verdict, 2 usage error,
//! 3 internal error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::ffield::{Arith, Fe, FieldCtx};
use crate::polyfam::{self, Family};
use crate::report::{Format, Parity, Report, RunConfig};
use crate::subsets::{self, image_and_cycles, materialize, SubsetId};
use crate::verdict::Verdict;
use crate::verify::{KMode, KRange};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Environment variable naming the default report directory.
pub const OUT_DIR_ENV: &str = "DICKSON_OUT_DIR";

#[derive(Parser, Debug)]
#[command(name = "dickson", version, about = "Dickson polynomials over finite fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the theorem checks over a range of prime powers.
    Verify(VerifyArgs),
    /// Print a named subset of GF(q).
    Sets {
        #[arg(long)]
        q: u64,
        /// e.g. A2++, B2--, S, N, Z, T0, T1, T40--, MU8, DELTA*8
        #[arg(long)]
        set: String,
    },
    /// Evaluate a polynomial family at a field element.
    Eval {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value = "D")]
        family: String,
        #[arg(long)]
        k: u64,
        /// Element encoding in 0..q, or a negative integer of the prime field.
        #[arg(long, allow_hyphen_values = true)]
        x: i64,
    },
    /// Print integer coefficients, highest degree first.
    Poly {
        #[arg(long, default_value = "D")]
        family: String,
        #[arg(long)]
        k: usize,
        /// Reduce the coefficients into GF(q).
        #[arg(long)]
        q: Option<u64>,
    },
    /// Cycle decomposition of D_k on a subset, or its image.
    Cycles {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value = "F")]
        set: String,
    },
    /// Products and elementary symmetric functions over a subset.
    Products {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        set: String,
        /// Print prod (c - a) instead of prod a.
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<i64>,
        /// Print sigma_j of the set.
        #[arg(long)]
        sigma: Option<usize>,
    },
    /// Identities among the integer polynomial families.
    Identities {
        #[arg(long, default_value_t = 64)]
        k_max: usize,
        /// Range for the binomial closed forms.
        #[arg(long, default_value_t = 200)]
        closed_form_max: usize,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 3)]
    pub q_min: u64,
    #[arg(long, default_value_t = 101)]
    pub q_max: u64,
    #[arg(long, default_value = "both")]
    pub parity: Parity,
    #[arg(long, default_value = "sampled")]
    pub k_mode: KMode,
    /// Largest exponent k.
    #[arg(long, default_value_t = 1 << 40)]
    pub k_bound: u64,
    /// Random k per field above the exhaustive threshold.
    #[arg(long, default_value_t = 32)]
    pub k_samples: usize,
    /// Full period of k up to this q in sampled mode.
    #[arg(long, default_value_t = 64)]
    pub exhaustive_q_max: u64,
    /// Comma-separated check names.
    #[arg(long, value_delimiter = ',')]
    pub checks: Vec<String>,
    #[arg(long, default_value = "text")]
    pub format: Format,
    /// Report path; defaults to $DICKSON_OUT_DIR/report.<ext>, else stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Keep per-check timings in the report.
    #[arg(long)]
    pub timings: bool,
    /// List the check names and exit.
    #[arg(long)]
    pub list: bool,
}

impl VerifyArgs {
    pub fn config(&self) -> RunConfig {
        RunConfig {
            q_min: self.q_min,
            q_max: self.q_max,
            parity: self.parity,
            k_range: KRange {
                mode: self.k_mode,
                bound: self.k_bound,
                sample_count: self.k_samples,
                seed: self.seed,
                exhaustive_q_max: self.exhaustive_q_max,
            },
            checks: self.checks.clone(),
        }
    }
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure::Internal(e.to_string())
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Verify(args) => cmd_verify(&args, out, err),
        Command::Sets { q, set } => cmd_sets(q, &set, out),
        Command::Eval { q, family, k, x } => cmd_eval(q, &family, k, x, out),
        Command::Poly { family, k, q } => cmd_poly(&family, k, q, out),
        Command::Cycles { q, k, set } => cmd_cycles(q, k, &set, out),
        Command::Products { q, set, shift, sigma } => cmd_products(q, &set, shift, sigma, out),
        Command::Identities { k_max, closed_form_max } => cmd_identities(k_max, closed_form_max, out),
    }
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    if args.list {
        for name in crate::verify::check_names() {
            writeln!(out, "{name}").map_err(io)?;
        }
        return Ok(EXIT_OK);
    }
    let config = args.config();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| Failure::Internal(e.to_string()))?;
    let mut report = pool.install(|| Report::run(config))?;
    if !args.timings {
        report.strip_timings();
    }
    let text = report.render(args.format).map_err(|e| Failure::Internal(e.to_string()))?;
    let path = args.output.clone().or_else(|| {
        std::env::var_os(OUT_DIR_ENV)
            .filter(|d| !d.is_empty())
            .map(|d| PathBuf::from(d).join(format!("report.{}", args.format.extension())))
    });
    match path {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).map_err(io)?;
            }
            std::fs::write(&path, text).map_err(io)?;
            writeln!(err, "{} ({})", report.summary(), path.display()).map_err(io)?;
        }
        None => {
            out.write_all(text.as_bytes()).map_err(io)?;
            if args.format != Format::Text {
                writeln!(err, "{}", report.summary()).map_err(io)?;
            }
        }
    }
    Ok(if report.has_failures() { EXIT_FAIL } else { EXIT_OK })
}

fn field(q: u64) -> std::result::Result<FieldCtx, Failure> {
    Ok(FieldCtx::from_q(q)?)
}

fn element(f: &FieldCtx, x: i64) -> std::result::Result<Fe, Failure> {
    if x < 0 {
        Ok(f.from_int(x))
    } else {
        Ok(f.elem(x as u64)?)
    }
}

/// `F` names the whole field; anything else goes through the subset parser.
fn subset(f: &FieldCtx, spec: &str) -> std::result::Result<subsets::Subset, Failure> {
    if spec.eq_ignore_ascii_case("F") {
        return Ok(subsets::Subset { id: SubsetId::Z, elems: f.elements().collect() });
    }
    let id = SubsetId::parse(f, spec)?;
    Ok(materialize(f, id)?)
}

fn join(elems: &[Fe]) -> String {
    elems.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_sets(q: u64, spec: &str, out: &mut dyn Write) -> CmdResult {
    let f = field(q)?;
    let id = SubsetId::parse(&f, spec)?;
    let set = materialize(&f, id)?;
    writeln!(out, "{}", join(&set.elems)).map_err(io)?;
    match subsets::card_formula(&f, id) {
        Ok(n) if n as usize == set.len() => writeln!(out, "size {} (formula agrees)", set.len()),
        Ok(n) => writeln!(out, "size {} (formula gives {n})", set.len()),
        Err(_) => writeln!(out, "size {}", set.len()),
    }
    .map_err(io)?;
    Ok(EXIT_OK)
}

fn cmd_eval(q: u64, family: &str, k: u64, x: i64, out: &mut dyn Write) -> CmdResult {
    let f = field(q)?;
    let fam: Family = family.parse()?;
    let a = element(&f, x)?;
    writeln!(out, "{}", polyfam::eval_family(&f, fam, k, a)).map_err(io)?;
    Ok(EXIT_OK)
}

fn cmd_poly(family: &str, k: usize, q: Option<u64>, out: &mut dyn Write) -> CmdResult {
    let fam: Family = family.parse()?;
    let p = polyfam::family(fam, k);
    let line = match q {
        None => p.descending().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "),
        Some(q) => {
            let f = field(q)?;
            let r = p.reduce(&f);
            let deg = r.degree().unwrap_or(0);
            (0..=deg).rev().map(|i| r.coeff(i).to_string()).collect::<Vec<_>>().join(" ")
        }
    };
    writeln!(out, "{line}").map_err(io)?;
    Ok(EXIT_OK)
}

fn cmd_cycles(q: u64, k: u64, spec: &str, out: &mut dyn Write) -> CmdResult {
    let f = field(q)?;
    let set = subset(&f, spec)?;
    writeln!(out, "{}", image_and_cycles(&f, k, &set)).map_err(io)?;
    Ok(EXIT_OK)
}

fn cmd_products(
    q: u64,
    spec: &str,
    shift: Option<i64>,
    sigma: Option<usize>,
    out: &mut dyn Write,
) -> CmdResult {
    let f = field(q)?;
    let set = subset(&f, spec)?;
    let value = match (shift, sigma) {
        (Some(_), Some(_)) => {
            return Err(Failure::Usage("--shift and --sigma are exclusive".into()));
        }
        (None, Some(j)) => subsets::elem_sym(&f, &set.elems, j)?,
        (Some(c), None) => {
            let c = f.from_int(c);
            let shifted: Vec<Fe> = set.elems.iter().map(|&a| f.sub(c, a)).collect();
            subsets::set_product(&f, &shifted)
        }
        (None, None) => subsets::set_product(&f, &set.elems),
    };
    writeln!(out, "{value}").map_err(io)?;
    Ok(EXIT_OK)
}

fn cmd_identities(k_max: usize, closed_form_max: usize, out: &mut dyn Write) -> CmdResult {
    let verdicts: Vec<Verdict> = vec![
        polyfam::check_schur_identities(k_max),
        polyfam::check_t_recursion(k_max),
        polyfam::check_dkdl(k_max),
        polyfam::check_chebyshev_translation(k_max),
        polyfam::check_closed_forms(closed_form_max),
    ];
    let mut failed = false;
    for v in &verdicts {
        failed |= v.is_fail();
        write!(out, "{:<28} {:<8} {:>8}", v.check_name, v.status, v.instances_checked).map_err(io)?;
        if let Some(c) = &v.counterexample {
            write!(out, "  {}: expected {} got {}", c.clause, c.expected, c.actual).map_err(io)?;
        }
        writeln!(out).map_err(io)?;
    }
    Ok(if failed { EXIT_FAIL } else { EXIT_OK })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("dickson").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn sets_and_eval() {
        let (code, out, _) = call(&["sets", "--q", "29", "--set", "A2++"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().next(), Some("3 7 11 18 22 26"));
        assert_eq!(call(&["eval", "--q", "29", "--family", "D", "--k", "5", "--x", "10"]).1, "17\n");
        assert_eq!(call(&["eval", "--q", "7", "--k", "3", "--x", "2"]).1, "2\n");
        assert_eq!(call(&["eval", "--q", "7", "--k", "3", "--x", "-2"]).1, "5\n");
    }

    #[test]
    fn poly_and_cycles() {
        assert_eq!(call(&["poly", "--family", "D", "--k", "7"]).1, "1 0 -7 0 14 0 -7 0\n");
        assert_eq!(call(&["poly", "--k", "2", "--q", "7"]).1, "1 0 5\n");
        assert_eq!(
            call(&["cycles", "--q", "29", "--k", "5", "--set", "A2--"]).1,
            "(0)(10 17 13 19 12 16)\n"
        );
        assert_eq!(
            call(&["cycles", "--q", "29", "--k", "7", "--set", "A2--"]).1,
            "not a permutation; image={0}\n"
        );
        assert_eq!(call(&["cycles", "--q", "5", "--k", "1"]).1, "(0)(1)(2)(3)(4)\n");
    }

    #[test]
    fn products() {
        assert_eq!(call(&["products", "--q", "29", "--set", "B2++", "--sigma", "2"]).1, "24\n");
        assert_eq!(call(&["products", "--q", "7", "--set", "T40--"]).1, "2\n");
        assert_eq!(call(&["products", "--q", "3", "--set", "A2++"]).1, "1\n");
        assert_eq!(call(&["products", "--q", "7", "--set", "B2--", "--shift", "0"]).1, "5\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["verify", "--q-min", "10", "--q-max", "10"]).0, EXIT_OK);
        assert_eq!(call(&["verify", "--q-min", "9", "--q-max", "3"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--checks", "nope", "--q-max", "5"]).0, EXIT_USAGE);
        assert_eq!(call(&["sets", "--q", "6", "--set", "S"]).0, EXIT_USAGE);
        assert_eq!(call(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
        let (code, out, _) = call(&["verify", "--q-min", "3", "--q-max", "9", "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        let report = Report::from_json(&out).unwrap();
        assert!(report.verdicts.iter().all(|v| v.millis.is_none()));
    }
}
