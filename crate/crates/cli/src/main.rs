mod session;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use zeckauto::automata::{load_dfa, load_dfao, save_dfa, save_dfao, DEFAULT_STATE_CAP};
use zeckauto::dekking::{self, ProofOptions};
use zeckauto::linrep::LinearRepresentation;
use zeckauto::logic::{compile, parse, Predicate};
use zeckauto::oracle::Oracle;
use zeckauto::Error;

use session::Session;

#[derive(Parser)]
#[command(
    name = "zeckauto",
    version,
    about = "Decide first-order statements about Fibonacci-automatic sequences"
)]
struct Cli {
    /// Directory holding stored automata.
    #[arg(long, global = true, default_value = "zeckauto-store")]
    store: PathBuf,
    /// Replace an existing automaton of the same name.
    #[arg(long, global = true)]
    overwrite: bool,
    /// Maximum number of states any single construction may create.
    #[arg(long, global = true, default_value_t = DEFAULT_STATE_CAP)]
    cap: usize,
    /// Factor lengths checked against the brute-force oracle (0 disables the oracle).
    #[arg(long, global = true, default_value_t = 300)]
    oracle_bound: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compile a formula and store it as a predicate.
    Def { name: String, formula: String },
    /// Store a regular expression over digits as a one-argument predicate:
    /// `reg NAME [msd_fib] PATTERN`.
    Reg {
        name: String,
        #[arg(num_args = 1..=2, required = true)]
        pattern: Vec<String>,
    },
    /// Decide a closed sentence (`eval [NAME] SENTENCE`), or extract a linear
    /// representation counting along an index variable (`eval NAME VAR FORMULA`).
    Eval {
        #[arg(num_args = 1..=3, required = true)]
        args: Vec<String>,
    },
    /// Import an automaton file into the store (a DFAO unless --predicate).
    Load {
        name: String,
        file: PathBuf,
        #[arg(long)]
        predicate: bool,
    },
    /// Export a stored automaton.
    Save { name: String, file: PathBuf },
    /// Print the output of a stored DFAO on n.
    Run { dfao: String, n: u64 },
    /// Print `n, rho(n), d(n)` for n < N from the brute-force oracle.
    Brute { n: usize },
    /// Derive the DFAO for d(n) and check the interval theorem and its corollaries.
    ProveDekking {
        /// DFAO file the derived machine must be isomorphic to.
        #[arg(long)]
        reference: Option<PathBuf>,
        /// Compare the DFAO with the product formula for n below this bound.
        #[arg(long, default_value_t = 10_000)]
        check_len: u64,
    },
}

enum Failure {
    Check(String),
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e.root() {
        Error::ResourceLimit { .. } | Error::FinitenessUndetermined(_) => 3,
        Error::Syntax { .. }
        | Error::Format { .. }
        | Error::Numeration(_)
        | Error::NonLinear(_)
        | Error::UnknownName(_)
        | Error::UnknownTrack(_)
        | Error::NameConflict(_)
        | Error::Arity { .. }
        | Error::FreeVariables(_) => 2,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let mut session = Session::open(&cli.store, cli.cap)?;
    match cli.command {
        Command::Def { name, formula } => {
            Session::check_name(&name)?;
            let a = session.store.def(&name, &formula, cli.overwrite)?;
            session.persist_predicate(&name)?;
            println!("{} states", a.live_state_count());
        }
        Command::Reg { name, pattern } => {
            let pattern = match pattern.as_slice() {
                [p] => p,
                [ns, p] if ns == "msd_fib" => p,
                [ns, _] => return Err(Error::Numeration(ns.clone()).into()),
                _ => unreachable!("clap enforces 1..=2 values"),
            };
            Session::check_name(&name)?;
            let a = session.store.reg(&name, pattern, cli.overwrite)?;
            session.persist_predicate(&name)?;
            println!("{} states", a.live_state_count());
        }
        Command::Eval { args } => match args.as_slice() {
            [sentence] | [_, sentence] => {
                println!("{}", session.store.eval(sentence)?);
            }
            [name, var, formula] => {
                Session::check_name(name)?;
                let a = compile(&parse(formula)?, &session.store)?;
                let lr = LinearRepresentation::extract(&a, var)?;
                let path = session.persist_matrix(name, &lr)?;
                println!("rank {} written to {}", lr.rank(), path.display());
            }
            _ => unreachable!("clap enforces 1..=3 values"),
        },
        Command::Load {
            name,
            file,
            predicate,
        } => {
            let text = fs::read_to_string(&file).map_err(Error::from)?;
            if predicate {
                let a = load_dfa(&text)?.minimize();
                let states = a.live_state_count();
                session.add_predicate(&name, Predicate::from_positional(a)?, cli.overwrite)?;
                println!("{states} states");
            } else {
                let m = load_dfao(&text)?;
                let states = m.canonical_state_count();
                session.add_word(&name, m, cli.overwrite)?;
                println!("{states} states");
            }
        }
        Command::Save { name, file } => {
            let text = match session.store.word(&name) {
                Ok(m) => save_dfao(m),
                Err(_) => save_dfa(&session.store.predicate(&name)?.automaton),
            };
            fs::write(&file, text).map_err(Error::from)?;
        }
        Command::Run { dfao, n } => {
            println!("{}", session.store.word(&dfao)?.run(n));
        }
        Command::Brute { n } => {
            let o = Oracle::new(n);
            print!("{}", o.table_text(n)?);
        }
        Command::ProveDekking {
            reference,
            check_len,
        } => {
            let mut opts = ProofOptions {
                cap: cli.cap,
                cross_check_len: check_len,
                oracle_bound: (cli.oracle_bound > 0).then_some(cli.oracle_bound),
                ..ProofOptions::default()
            };
            if let Some(path) = reference {
                opts.reference = fs::read_to_string(path).map_err(Error::from)?;
            }
            let t = dekking::prove(&opts)?;
            print!("{t}");
            if !t.passed() {
                return Err(Failure::Check(t.failures.join(", ")));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(what)) => {
            eprintln!("check failed: {what}");
            ExitCode::from(1)
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
