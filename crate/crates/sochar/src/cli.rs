//! Command-line interface: `char`, `gt`, `straighten`, `interp`, `verify`.
//!
//! Output is deterministic; JSON mode emits the canonical polynomial schema
//! (and newline-delimited reports for `verify`). Exit codes: 0 on success or
//! suite pass, 1 on suite failure, 2 on usage or domain errors. Parameter
//! bounds are capped (N <= 4, degree <= 12, |lambda| <= 12) to keep every
//! invocation at desk scale.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::characters as ch;
use crate::fock::{straighten, FockElement, ModeMonomial, Side};
use crate::interp::{self, AlphaValue, InterpFamily};
use crate::partitions::GeneralizedPartition;
use crate::verify::{run_suite, Grid, ReducedKind, Suite};

pub const MAX_VARS: usize = 4;
pub const MAX_DEGREE: usize = 12;
pub const MAX_WEIGHT: i64 = 12;

/// Which subcommand exercises each library operation; the registry is
/// checked by a coverage test so that nothing is CLI-unreachable.
pub const OPERATION_COVERAGE: &[(&str, &str)] = &[
    ("ring_arith", "char"),
    ("exact_div", "char"),
    ("determinant", "char"),
    ("conjugate", "char"),
    ("interlacings", "char"),
    ("epsilon_subtractions", "interp"),
    ("gt_chains", "gt"),
    ("coeff", "char"),
    ("straighten", "straighten"),
    ("pair", "verify"),
    ("dual_conjugate_pair", "verify"),
    ("so_bialternant", "char"),
    ("so_jt", "char"),
    ("so_skew_jt", "char"),
    ("so_skew_dual_jt", "char"),
    ("so_skew_gt", "char"),
    ("schur", "char"),
    ("skew_schur", "char"),
    ("sp_char", "char"),
    ("o_char", "char"),
    ("dual_skew_fn", "verify"),
    ("s_bd", "interp"),
    ("s_bc", "interp"),
    ("s_cd", "interp"),
    ("bd_epsilon_expansion", "interp"),
    ("suite_cauchy_so", "verify"),
    ("suite_cauchy_reduced", "verify"),
    ("suite_skew_cauchy_so", "verify"),
    ("suite_toeplitz_hankel", "verify"),
    ("suite_littlewood", "verify"),
    ("suite_transitions", "verify"),
    ("suite_branching", "verify"),
    ("suite_vandermonde", "verify"),
];

pub const SUBCOMMANDS: &[&str] = &["char", "gt", "straighten", "interp", "verify"];

#[derive(Parser, Debug)]
#[command(
    name = "sochar",
    version,
    about = "Exact classical-group characters and identity verification"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Compute a character by a chosen method
    Char {
        /// so, sp, o, or schur
        #[arg(long)]
        family: String,
        /// bialternant, jt, skew_jt, dual_jt, gt, transition
        #[arg(long)]
        method: String,
        /// outer partition, comma separated (empty when omitted)
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// inner partition for skew methods; zeros are significant
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        /// number of variables
        #[arg(long)]
        n: usize,
        /// column bound for dual_jt (defaults to lambda_1)
        #[arg(long)]
        cols: Option<usize>,
        /// partition entries are given doubled (half-integers allowed)
        #[arg(long)]
        doubled: bool,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate odd orthogonal Gelfand-Tsetlin chains
    Gt {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long)]
        n: usize,
        /// print only the number of chains
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Straighten a mode monomial to a signed canonical label or zero
    Straighten {
        /// ket or bra
        #[arg(long)]
        side: String,
        /// mode list, comma separated
        #[arg(long, allow_hyphen_values = true)]
        modes: String,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate an interpolating Schur polynomial
    Interp {
        /// bd, bc, or cd
        #[arg(long)]
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long)]
        n: usize,
        /// "formal" or an integer specialization
        #[arg(long, default_value = "formal", allow_hyphen_values = true)]
        alpha: String,
        /// use the signed subtraction expansion instead of the determinant
        /// (bd only)
        #[arg(long)]
        expand_epsilon: bool,
        #[arg(long)]
        doubled: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run a named identity suite over a parameter grid
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        deg: Option<usize>,
        #[arg(long)]
        len: Option<usize>,
        /// sp, so, or o (cauchy_reduced only)
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        /// run the suite's documented broken-comparator variant
        #[arg(long)]
        mutate: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// newline-delimited JSON reports on stdout
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug)]
struct UsageError(String);

fn parse_int_list(s: &str) -> Result<Vec<i64>, UsageError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| UsageError(format!("cannot parse integer '{}'", t)))
        })
        .collect()
}

fn parse_partition(s: Option<&str>, doubled: bool) -> Result<GeneralizedPartition, UsageError> {
    let vals = match s {
        None => Vec::new(),
        Some(s) => parse_int_list(s)?,
    };
    let p = if doubled {
        let d: Vec<i32> = vals.iter().map(|&v| v as i32).collect();
        GeneralizedPartition::from_doubled(d)
            .map_err(|e| UsageError(format!("invalid partition: {}", e)))?
    } else {
        GeneralizedPartition::from_ints(&vals)
            .map_err(|e| UsageError(format!("invalid partition: {}", e)))?
    };
    if p.weight_doubled() > 2 * MAX_WEIGHT {
        return Err(UsageError(format!(
            "partition weight exceeds the bound |lambda| <= {}",
            MAX_WEIGHT
        )));
    }
    Ok(p)
}

fn check_vars(n: usize) -> Result<(), UsageError> {
    if n == 0 || n > MAX_VARS {
        return Err(UsageError(format!(
            "variable count must be in 1..={}",
            MAX_VARS
        )));
    }
    Ok(())
}

fn check_degree(d: usize) -> Result<(), UsageError> {
    if d > MAX_DEGREE {
        return Err(UsageError(format!(
            "degree cap must be at most {}",
            MAX_DEGREE
        )));
    }
    Ok(())
}

/// Parse and dispatch; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {}", msg);
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, UsageError> {
    match cli.cmd {
        Cmd::Char {
            family,
            method,
            lambda,
            mu,
            n,
            cols,
            doubled,
            json,
        } => {
            check_vars(n)?;
            let lam = parse_partition(lambda.as_deref(), doubled)?;
            let mu_given = mu.is_some();
            let mu = parse_partition(mu.as_deref(), doubled)?;
            let poly = char_command(&family, &method, &lam, &mu, mu_given, n, cols)?;
            if json {
                println!("{}", poly.to_json());
            } else {
                println!("{}", poly);
            }
            Ok(0)
        }
        Cmd::Gt {
            lambda,
            mu,
            n,
            count_only,
            json,
        } => {
            check_vars(n)?;
            let lam = parse_partition(lambda.as_deref(), false)?;
            let mu = parse_partition(mu.as_deref(), false)?;
            let chains = crate::partitions::gt_chains(&mu, &lam, n)
                .map_err(|e| UsageError(e.to_string()))?;
            if json {
                let value = serde_json::json!({
                    "count": chains.len(),
                    "chains": if count_only {
                        serde_json::Value::Null
                    } else {
                        serde_json::Value::Array(chains.iter().map(|c| c.to_json()).collect())
                    },
                });
                println!("{}", value);
            } else {
                println!("{} chains", chains.len());
                if !count_only {
                    for c in &chains {
                        let rows: Vec<String> = c.rows.iter().map(|r| r.to_string()).collect();
                        println!("{}", rows.join(" < "));
                    }
                }
            }
            Ok(0)
        }
        Cmd::Straighten { side, modes, json } => {
            let side = match side.as_str() {
                "ket" => Side::Ket,
                "bra" => Side::Bra,
                other => return Err(UsageError(format!("unknown side '{}'", other))),
            };
            let modes = parse_int_list(&modes)?;
            if modes.len() > 16 {
                return Err(UsageError("mode list too long".into()));
            }
            let result = straighten(&ModeMonomial { side, modes });
            if json {
                println!("{}", result.to_json());
            } else {
                match &result {
                    FockElement::Zero => println!("0"),
                    FockElement::Canonical { sign, side, label } => {
                        let s = if *sign < 0 { "-" } else { "+" };
                        match side {
                            Side::Ket => println!("{}|{}>", s, label),
                            Side::Bra => println!("{}<{}|", s, label),
                        }
                    }
                }
            }
            Ok(0)
        }
        Cmd::Interp {
            family,
            lambda,
            n,
            alpha,
            expand_epsilon,
            doubled,
            json,
        } => {
            check_vars(n)?;
            let lam = parse_partition(lambda.as_deref(), doubled)?;
            let fam = match family.as_str() {
                "bd" => InterpFamily::Bd,
                "bc" => InterpFamily::Bc,
                "cd" => InterpFamily::Cd,
                other => return Err(UsageError(format!("unknown family '{}'", other))),
            };
            let alpha = if alpha == "formal" {
                AlphaValue::Formal
            } else {
                AlphaValue::Int(
                    alpha
                        .parse::<i64>()
                        .map_err(|_| UsageError(format!("cannot parse alpha '{}'", alpha)))?,
                )
            };
            let poly = if expand_epsilon {
                if fam != InterpFamily::Bd {
                    return Err(UsageError(
                        "--expand-epsilon applies to the bd family".into(),
                    ));
                }
                let p =
                    interp::bd_epsilon_expansion(&lam, n).map_err(|e| UsageError(e.to_string()))?;
                match alpha {
                    AlphaValue::Formal => p,
                    AlphaValue::Int(v) => p.substitute_alpha(&num_bigint::BigInt::from(v)),
                }
            } else {
                interp::evaluate(fam, &lam, n, alpha).map_err(|e| UsageError(e.to_string()))?
            };
            if json {
                println!("{}", poly.to_json());
            } else {
                println!("{}", poly);
            }
            Ok(0)
        }
        Cmd::Verify {
            suite,
            n,
            k,
            deg,
            len,
            kind,
            lambda,
            mu,
            mutate,
            threads,
            json,
        } => {
            let suite = Suite::from_name(&suite)
                .ok_or_else(|| UsageError(format!("unknown suite '{}'", suite)))?;
            if let Some(n) = n {
                check_vars(n)?;
            }
            if let Some(k) = k {
                check_vars(k)?;
            }
            if let Some(d) = deg {
                check_degree(d)?;
            }
            if threads == 0 || threads > 16 {
                return Err(UsageError("threads must be in 1..=16".into()));
            }
            let kind = match kind {
                None => None,
                Some(s) => Some(
                    ReducedKind::from_name(&s)
                        .ok_or_else(|| UsageError(format!("unknown kind '{}'", s)))?,
                ),
            };
            let grid = Grid {
                n,
                k,
                deg,
                len,
                kind,
                lambda: match lambda {
                    None => None,
                    Some(s) => Some(parse_partition(Some(&s), false)?),
                },
                mu: match mu {
                    None => None,
                    Some(s) => Some(parse_partition(Some(&s), false)?),
                },
            };
            crate::verify::validate_grid(suite, &grid).map_err(UsageError)?;
            let reports = run_suite(suite, &grid, mutate, threads);
            let mut all_pass = true;
            for r in &reports {
                all_pass &= r.pass;
                if json {
                    println!("{}", r.to_json());
                } else {
                    let status = if r.pass { "pass" } else { "FAIL" };
                    println!("{:<16} {:<6} {}", r.suite, status, r.instance);
                    if let Some(d) = &r.detail {
                        println!("    {}", d);
                    }
                    eprintln!("    ({} ms)", r.wall.as_millis());
                }
            }
            Ok(if all_pass { 0 } else { 1 })
        }
    }
}

fn char_command(
    family: &str,
    method: &str,
    lam: &GeneralizedPartition,
    mu: &GeneralizedPartition,
    mu_given: bool,
    n: usize,
    cols: Option<usize>,
) -> Result<crate::ring::LaurentPoly, UsageError> {
    if mu_given && matches!(method, "bialternant" | "transition") {
        return Err(UsageError(format!("method '{}' does not take --mu", method)));
    }
    let out = match (family, method) {
        ("so", "bialternant") => ch::so_bialternant(lam, n),
        ("so", "jt" | "jacobi_trudi") => {
            if mu_given {
                ch::so_skew_jt(lam, mu, n)
            } else {
                ch::so_jt(lam, n)
            }
        }
        ("so", "skew_jt") => ch::so_skew_jt(lam, mu, n),
        ("so", "dual_jt") => {
            let s = cols.unwrap_or_else(|| ((lam.part_doubled(0) + 1) / 2).max(0) as usize);
            ch::so_skew_dual_jt(lam, mu, s, n)
        }
        ("so", "gt" | "gt_sum") => ch::so_skew_gt(lam, mu, n),
        ("so", "transition") => {
            // compose the interlacing sum over even orthogonal characters
            let padded = lam.padded(n);
            let mut acc = Ok(crate::ring::LaurentPoly::zero(n));
            for m in crate::partitions::interlacings_same_length(&padded) {
                acc = acc.and_then(|a| Ok(a.try_add(&ch::o_char(&m, n)?)?));
            }
            acc
        }
        ("schur", "bialternant") => ch::schur_bialternant(lam, n),
        ("schur", "jt" | "jacobi_trudi" | "skew_jt") => ch::skew_schur(lam, mu, n),
        ("sp", "transition") => ch::sp_char(lam, n),
        ("o", "transition") => ch::o_char(lam, n),
        _ => {
            return Err(UsageError(format!(
                "method '{}' is not defined for family '{}'",
                method, family
            )))
        }
    };
    out.map_err(|e| UsageError(e.to_string()))
}
