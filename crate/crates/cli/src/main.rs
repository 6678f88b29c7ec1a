//! `qtorus`: command-line front end to the `qtorus` library.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse error, 3 domain error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qtorus::expr::{eval_expr, eval_fo, parse_expr, ExprAst};
use qtorus::fo::{fo_normalize, FoWord, Strategy};
use qtorus::serialize::{fo_to_json, torus_to_json, torus_to_value};
use qtorus::verify::{reports_to_json, run_suite, SuiteConfig, SUITES};
use qtorus::{cert_monomial, Error, Monomial, TorusElem};

#[derive(Parser)]
#[command(name = "qtorus", version, about = "Exact computations in the quantum torus A_q and U_q'(so_3)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of EXPR in A_q
    Normalize {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the bracket [E1,E2]
    Bracket {
        e1: String,
        e2: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the decomposition of EXPR into total-degree components
    Grade {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the coefficient of z3^h z2^m z1^n in EXPR
    Zcomponent {
        expr: String,
        #[arg(allow_negative_numbers = true)]
        h: i64,
        #[arg(allow_negative_numbers = true)]
        m: i64,
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// Print the projection of EXPR onto the diagonal monomials
    Pi {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether EXPR lies in L_q
    Inlq { expr: String },
    /// Print a Lie certificate for z3^h z2^m z1^n and check its value
    Cert {
        #[arg(allow_negative_numbers = true)]
        h: i64,
        #[arg(allow_negative_numbers = true)]
        m: i64,
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// Print the PBW normal form of an expression in I1, I2, I3
    FoNormalize {
        word: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Leftmost)]
        strategy: StrategyArg,
        #[arg(long)]
        json: bool,
    },
    /// Run verification suites
    Verify {
        /// Suite to run (repeatable); all suites when omitted
        #[arg(long)]
        suite: Vec<String>,
        /// Exponent bound for presentations, closed-forms and certificates
        #[arg(long)]
        bound: Option<i64>,
        /// Largest Casimir power
        #[arg(long)]
        nmax: Option<u32>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Leftmost,
    Rightmost,
}

enum Failure {
    Verification,
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<qtorus::ParseError> for Failure {
    fn from(e: qtorus::ParseError) -> Self {
        Failure::Error(Error::Parse(e))
    }
}

fn evaluate(text: &str) -> Result<TorusElem, Failure> {
    let ast = parse_expr(text).inspect_err(|e| {
        eprintln!("{text}");
        eprintln!("{}^", " ".repeat(e.position.saturating_sub(1)));
    })?;
    Ok(eval_expr(&ast)?)
}

fn print_elem(x: &TorusElem, json: bool) {
    if json {
        println!("{}", torus_to_json(x));
    } else {
        println!("{x}");
    }
}

/// Letters of a plain product of `I` generators such as `I3*I2^2*I1`.
fn word_letters(ast: &ExprAst) -> Option<Vec<u8>> {
    match ast {
        ExprAst::FoGen(k) => Some(vec![*k]),
        ExprAst::Pow(base, e) if *e >= 0 => {
            let inner = word_letters(base)?;
            Some(inner.repeat(*e as usize))
        }
        ExprAst::Mul(a, b) => {
            let mut w = word_letters(a)?;
            w.extend(word_letters(b)?);
            Some(w)
        }
        _ => None,
    }
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Normalize { expr, json } => print_elem(&evaluate(&expr)?, json),
        Command::Bracket { e1, e2, json } => {
            let x = evaluate(&e1)?;
            let y = evaluate(&e2)?;
            print_elem(&x.bracket(&y), json);
        }
        Command::Grade { expr, json } => {
            let parts = evaluate(&expr)?.lambda_decompose();
            if json {
                let comps: Vec<_> = parts
                    .iter()
                    .rev()
                    .map(|(d, x)| json!({ "degree": d, "element": torus_to_value(x) }))
                    .collect();
                println!("{}", json!({ "components": comps }));
            } else if parts.is_empty() {
                println!("0");
            } else {
                for (d, x) in parts.iter().rev() {
                    println!("Lambda_{d}: {x}");
                }
            }
        }
        Command::Zcomponent { expr, h, m, n } => {
            let c = evaluate(&expr)?.component(Monomial::new(h, m, n));
            println!("{c}");
        }
        Command::Pi { expr, json } => print_elem(&evaluate(&expr)?.pi_project(), json),
        Command::Inlq { expr } => {
            let (inside, witness) = evaluate(&expr)?.in_lq();
            if inside {
                println!("in L_q");
            } else {
                let (m, c) = witness.terms_desc().next().expect("nonzero projection");
                println!("NOT in L_q; witness: {m} \u{21a6} {}", c.to_pretty_string());
            }
        }
        Command::Cert { h, m, n } => {
            let cert = cert_monomial(h, m, n)?;
            println!("{cert}");
            let value = cert.eval();
            let target = Monomial::new(h, m, n);
            if value == TorusElem::monomial(target) {
                println!("OK: evaluates to z3^{h} z2^{m} z1^{n}");
            } else {
                println!("MISMATCH: evaluates to {value}");
                return Err(Failure::Verification);
            }
        }
        Command::FoNormalize { word, strategy, json } => {
            let ast = parse_expr(&word)?;
            let nf = match word_letters(&ast) {
                Some(letters) => {
                    let strategy = match strategy {
                        StrategyArg::Leftmost => Strategy::Leftmost,
                        StrategyArg::Rightmost => Strategy::Rightmost,
                    };
                    fo_normalize([FoWord::new(letters)], strategy)
                }
                None => eval_fo(&ast)?,
            };
            if json {
                println!("{}", fo_to_json(&nf));
            } else {
                println!("{nf}");
            }
        }
        Command::Verify {
            suite,
            bound,
            nmax,
            seed,
            json,
        } => {
            let mut cfg = SuiteConfig::default();
            if let Some(b) = bound {
                if b < 1 {
                    return Err(Error::Domain("--bound must be at least 1".to_string()).into());
                }
                cfg.presentation_bound = b;
                cfg.closed_form_bound = b;
                cfg.certificate_bound = b;
            }
            if let Some(n) = nmax {
                if n < 1 {
                    return Err(Error::Domain("--nmax must be at least 1".to_string()).into());
                }
                cfg.casimir_n_max = n;
            }
            if let Some(s) = seed {
                cfg.seed = s;
            }
            let names: Vec<&str> = if suite.iter().any(|s| s == "all") || suite.is_empty() {
                SUITES.to_vec()
            } else {
                suite.iter().map(String::as_str).collect()
            };
            let reports = run_suite(Some(&names), &cfg)?;
            if json {
                println!("{}", reports_to_json(&reports));
            } else {
                for r in &reports {
                    println!("{}", r.to_text());
                }
            }
            if reports.iter().any(|r| !r.passed) {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
    }
}
