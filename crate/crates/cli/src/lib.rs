//! `dtl`: solve, verify, evaluate.
//!
//! Results go to stdout as JSON, or to `--out`. Timings go to stderr, so
//! stdout depends only on the command, its flags and the seed.
//! Exit codes: 0 pass, 1 failed check, 2 usage error.

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dtl_diagram::weights::{x_of_zeta, zeta_of_x};
use dtl_field::Fe;
use dtl_patterns::Side;
use dtl_qkz::{partition_sum, solve_ground_state, GroundState};
use dtl_verify::*;
use serde_json::{json, Value};

/// Largest size the symbolic solver accepts.
pub const MAX_SOLVE: usize = 5;
/// Largest size for checks that build the transfer matrix.
pub const MAX_TRANSFER: usize = 4;

#[derive(Parser, Debug)]
#[command(name = "dtl", version, about = "Ground state of the dilute O(1) loop model on a strip, exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// seed for every random sample
    #[arg(long, default_value_t = 1, global = true)]
    pub seed: u64,
    /// write the JSON here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve for the ground state of size L and print it as JSON
    Solve {
        #[arg(short = 'L', default_value_t = 2)]
        l: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Run one exact check
    Verify {
        #[command(subcommand)]
        check: Check,
    },
    /// Evaluate all components at one point
    Eval {
        #[arg(short = 'L', default_value_t = 2)]
        l: usize,
        /// comma-separated `x_l, z_1.., x_r` (or `zeta_l, .., zeta_r`); random from the seed if absent
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
        #[arg(long, value_enum, default_value_t = Param::X)]
        param: Param,
        /// ground state JSON written by `solve`, instead of solving again
        #[arg(long = "in")]
        input: Option<std::path::PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Sum of all components, and whether it is a constant times the empty-pattern one
    Sum {
        #[arg(short = 'L', default_value_t = 2)]
        l: usize,
        #[arg(long = "in")]
        input: Option<std::path::PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand, Debug)]
pub enum Check {
    /// Yang-Baxter equation at generic q
    Ybe(Sampled),
    /// Boundary Yang-Baxter equation at both walls
    Byb(Sampled),
    /// Factorization of the R-matrix at the merge point
    Factor(Sampled),
    /// Merge identity, all port sectors
    Merge(Sampled),
    /// Recurrence between sizes L-1 and L at every site
    Recurrence(Sized),
    /// Every qKZ equation at size L
    Qkz(Sized),
    /// Eigenvector of the transfer matrix at random exact points
    Eigen(Sized),
    /// Sizes 1 and 2 against the embedded golden vectors
    Golden(Sampled),
}

#[derive(Args, Debug)]
pub struct Sampled {
    #[arg(long)]
    pub samples: Option<usize>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct Sized {
    #[arg(short = 'L', default_value_t = 3)]
    pub l: usize,
    #[arg(long)]
    pub samples: Option<usize>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Param {
    X,
    Zeta,
}

enum Fail {
    Usage(String),
    Run(String),
}

impl From<dtl_qkz::QkzError> for Fail {
    fn from(e: dtl_qkz::QkzError) -> Self {
        Fail::Run(e.to_string())
    }
}

/// Parse `argv` (program name first), run, and return the exit code.
pub fn run_cli(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = write!(err, "{}", e.render());
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
        }
    };
    let t = Instant::now();
    let res = dispatch(&cli.command);
    let elapsed = t.elapsed().as_secs_f64();
    match res {
        Ok((value, pass, common)) => {
            let text = serde_json::to_string_pretty(&value).expect("serializable") + "\n";
            let written = match &common.out {
                Some(p) => std::fs::write(p, &text).map_err(|e| format!("{}: {e}", p.display())),
                None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return 1;
            }
            let _ = writeln!(err, "{} in {elapsed:.2} s (seed {})", if pass { "pass" } else { "FAIL" }, common.seed);
            if pass {
                0
            } else {
                1
            }
        }
        Err(Fail::Usage(m)) => {
            let _ = writeln!(err, "usage error: {m}\nrun `dtl --help` for usage");
            2
        }
        Err(Fail::Run(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}

fn guard(l: usize, lo: usize, hi: usize) -> Result<(), Fail> {
    if l < lo || l > hi {
        return Err(Fail::Usage(format!("-L {l} outside {lo}..={hi}")));
    }
    Ok(())
}

fn load(l: usize, input: &Option<std::path::PathBuf>) -> Result<GroundState, Fail> {
    match input {
        Some(p) => {
            let s = std::fs::read_to_string(p).map_err(|e| Fail::Usage(format!("{}: {e}", p.display())))?;
            let g = GroundState::from_json_str(&s)?;
            if g.l != l {
                return Err(Fail::Usage(format!("{} holds L = {}, not {l}", p.display(), g.l)));
            }
            Ok(g)
        }
        None => {
            guard(l, 1, MAX_SOLVE)?;
            Ok(solve_ground_state(l)?)
        }
    }
}

fn reports(seed: u64, rs: Vec<Report>) -> (Value, bool) {
    let pass = rs.iter().all(|r| r.pass);
    (json!({ "seed": seed, "pass": pass, "reports": rs }), pass)
}

fn dispatch(cmd: &Command) -> Result<(Value, bool, Common), Fail> {
    match cmd {
        Command::Solve { l, common } => {
            guard(*l, 1, MAX_SOLVE)?;
            let g = solve_ground_state(*l)?;
            let v = serde_json::to_value(g.to_json()).expect("serializable");
            Ok((v, true, common.clone()))
        }
        Command::Verify { check } => verify(check),
        Command::Eval { l, at, param, input, common } => {
            guard(*l, 1, MAX_SOLVE)?;
            let point = match at {
                Some(s) => parse_point(*l, s, *param)?,
                None => {
                    let mut s = Sampler::new(common.seed);
                    (0..l + 2).map(|_| s.rat()).collect()
                }
            };
            let g = load(*l, input)?;
            let vals = g.eval(&point).map_err(|e| Fail::Run(e.to_string()))?;
            let names = g.vars.names().to_vec();
            let zeta = |x: &Fe| zeta_of_x(x).map(|z| z.to_string()).unwrap_or_else(|_| "pole".into());
            let v = json!({
                "L": l,
                "seed": common.seed,
                "point": names.iter().zip(&point).map(|(n, x)| (n.clone(), Value::String(x.to_string()))).collect::<serde_json::Map<_, _>>(),
                "zeta_l": zeta(&point[0]),
                "zeta_r": zeta(&point[l + 1]),
                "components": g.patterns().zip(vals).map(|((p, _), x)| (p.to_string(), Value::String(x.to_string()))).collect::<serde_json::Map<_, _>>(),
            });
            Ok((v, true, common.clone()))
        }
        Command::Sum { l, input, common } => {
            let g = load(*l, input)?;
            let (z, rep) = partition_sum(&g);
            let v = json!({ "L": l, "seed": common.seed, "report": rep, "sum": z.to_json() });
            Ok((v, rep.symmetric, common.clone()))
        }
    }
}

fn verify(check: &Check) -> Result<(Value, bool, Common), Fail> {
    let (v, pass, c) = match check {
        Check::Ybe(s) => {
            let o = YbeOptions::new(s.samples.unwrap_or(64), s.common.seed);
            let (v, p) = reports(s.common.seed, vec![verify_ybe(&o)]);
            (v, p, &s.common)
        }
        Check::Byb(s) => {
            let n = s.samples.unwrap_or(96);
            let rs = [Side::Left, Side::Right].map(|side| verify_byb(&BybOptions::new(side, n, s.common.seed)));
            let (v, p) = reports(s.common.seed, rs.to_vec());
            (v, p, &s.common)
        }
        Check::Factor(s) => {
            let (v, p) = reports(s.common.seed, vec![verify_factorization(s.samples.unwrap_or(20), s.common.seed, &Fe::one())]);
            (v, p, &s.common)
        }
        Check::Merge(s) => {
            let (v, p) = reports(s.common.seed, vec![verify_merge_identity(s.samples.unwrap_or(10), s.common.seed)]);
            (v, p, &s.common)
        }
        Check::Golden(s) => {
            let (v, p) = reports(s.common.seed, vec![verify_golden()]);
            (v, p, &s.common)
        }
        Check::Recurrence(s) => {
            guard(s.l, 2, MAX_SOLVE)?;
            let small = solve_ground_state(s.l - 1)?;
            let big = solve_ground_state(s.l)?;
            let rs = (1..s.l).map(|i| verify_recurrence(&big, &small, i)).collect();
            let (v, p) = reports(s.common.seed, rs);
            (v, p, &s.common)
        }
        Check::Qkz(s) => {
            guard(s.l, 1, MAX_SOLVE)?;
            let g = solve_ground_state(s.l)?;
            let (v, p) = reports(s.common.seed, vec![verify_qkz(&g)]);
            (v, p, &s.common)
        }
        Check::Eigen(s) => {
            guard(s.l, 1, MAX_TRANSFER)?;
            let g = solve_ground_state(s.l)?;
            let (v, p) = reports(s.common.seed, vec![verify_eigen(&g, s.samples.unwrap_or(5), 3, s.common.seed)]);
            (v, p, &s.common)
        }
    };
    Ok((v, pass, c.clone()))
}

/// `L + 2` comma-separated field elements; with `--param zeta` the two
/// boundary entries are converted to `x`.
pub fn parse_point_str(l: usize, s: &str, param: Param) -> Result<Vec<Fe>, String> {
    let mut v = s.split(',').map(|t| t.trim().parse::<Fe>().map_err(|e| e.to_string())).collect::<Result<Vec<_>, _>>()?;
    if v.len() != l + 2 {
        return Err(format!("expected {} values, got {}", l + 2, v.len()));
    }
    if param == Param::Zeta {
        for i in [0, l + 1] {
            v[i] = x_of_zeta(&v[i]).ok_or_else(|| format!("zeta = {} has no x in Q(w); pass x instead", v[i]))?;
        }
    }
    Ok(v)
}

fn parse_point(l: usize, s: &str, param: Param) -> Result<Vec<Fe>, Fail> {
    parse_point_str(l, s, param).map_err(Fail::Usage)
}
