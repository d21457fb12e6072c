//! Command-line front end: evaluation, transduction, the program
//! transformations, bounded checks, and the verification suites. Every
//! subcommand is a thin shell over the library; no semantics lives here.
//!
//! Exit codes: 0 on success or pass, 1 on a counterexample or semantic
//! error, 2 on usage or parse errors.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bmrs::harness::{default_bound, run_suite, suite_names};
use bmrs::syntax::{self, SourceFile};
use bmrs::transduce::{check_strict, check_well_defined};
use bmrs::transforms::{
    blank_enrich, compose, destrictify, normalize, strictify, DEFAULT_CHECK_BOUND,
};
use bmrs::{eval, transduce, Error, Interpretation, StringStruct};

#[derive(Parser)]
#[command(name = "bmrs", version, about = "Boolean monadic recursive schemes over finite strings")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct FileArg {
    /// Program file in the .bmrs concrete syntax.
    file: PathBuf,
    /// Interpretation to use when the file declares several.
    #[arg(long)]
    interp: Option<String>,
}

#[derive(Args)]
struct InputArg {
    /// Input string; characters lex as in source files (bare codepoints,
    /// quoted tokens, `_` for the blank).
    #[arg(long)]
    input: Option<String>,
    /// Input as a comma-separated character list, for multi-codepoint
    /// characters.
    #[arg(long, value_delimiter = ',')]
    input_list: Option<Vec<String>>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Apply an interpretation's transduction to an input string.
    Run {
        #[command(flatten)]
        file: FileArg,
        #[command(flatten)]
        input: InputArg,
    },
    /// Evaluate a term at an index of an input string.
    Eval {
        #[command(flatten)]
        file: FileArg,
        #[command(flatten)]
        input: InputArg,
        /// Position to evaluate at.
        #[arg(long)]
        index: usize,
        /// The term, e.g. "if a(x) then tt else f(S(x))".
        #[arg(long)]
        term: String,
    },
    /// Pad skipped output positions with the blank character.
    Strictify {
        #[command(flatten)]
        file: FileArg,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Forget the blank heads.
    Destrictify {
        #[command(flatten)]
        file: FileArg,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Rewrite into normal form (bare primitive applications, calls at
    /// x, S(x), or P(x), heads as bare calls).
    Normalize {
        #[command(flatten)]
        file: FileArg,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Lift a strict interpretation to skip blanks in its input.
    BlankEnrich {
        #[command(flatten)]
        file: FileArg,
        #[arg(short, long)]
        output: PathBuf,
        /// Bound for the strictness evidence.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Compose two interpretations, outer first.
    Compose {
        /// File holding the outer interpretation.
        outer_file: PathBuf,
        /// File holding the inner interpretation.
        inner_file: PathBuf,
        #[arg(long)]
        outer: Option<String>,
        #[arg(long)]
        inner: Option<String>,
        #[arg(short, long)]
        output: PathBuf,
        /// Bound for the well-definedness evidence.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Check well-definedness and strictness up to a bound.
    Check {
        #[command(flatten)]
        file: FileArg,
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Run a named verification suite.
    Verify {
        /// Suite name; see --list.
        suite: Option<String>,
        #[arg(long)]
        max_len: Option<usize>,
        /// List the available suites.
        #[arg(long)]
        list: bool,
    },
    /// Parse a file and print it canonically.
    Print {
        file: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse { .. } | Error::UnknownSuite(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

/// Default bound: --max-len flag, else BMRS_MAX_LEN, else the built-in.
fn bound_or_default(flag: Option<usize>, fallback: usize) -> usize {
    flag.or_else(|| {
        std::env::var("BMRS_MAX_LEN")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(fallback)
}

fn load(path: &Path) -> Result<SourceFile, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?;
    syntax::parse(&text)
}

fn select<'a>(
    file: &'a SourceFile,
    name: &'a Option<String>,
) -> Result<(&'a str, &'a Interpretation), Error> {
    match name {
        Some(n) => file
            .interpretation(n)
            .map(|i| (n.as_str(), i))
            .ok_or_else(|| Error::Domain(format!("no interpretation named `{n}`"))),
        None => file.sole_interpretation(),
    }
}

fn input_string(
    interp: &Interpretation,
    input: &InputArg,
) -> Result<StringStruct, Error> {
    let chars = match (&input.input, &input.input_list) {
        (Some(text), None) => syntax::lex_input_string(text)?,
        (None, Some(list)) => list
            .iter()
            .filter(|t| !t.is_empty())
            .map(|t| bmrs::Character::new(t.clone()))
            .collect(),
        (None, None) => {
            return Err(Error::Domain(
                "an input is required: --input or --input-list".into(),
            ))
        }
        (Some(_), Some(_)) => {
            return Err(Error::Domain(
                "give either --input or --input-list, not both".into(),
            ))
        }
    };
    StringStruct::new(interp.input_alphabet().clone(), chars)
}

fn write_program(
    path: &Path,
    name: &str,
    interp: &Interpretation,
    provenance: &str,
    bound: Option<usize>,
) -> Result<(), Error> {
    let file = SourceFile::for_interpretation(name, interp);
    let mut text = String::new();
    text.push_str(&format!("# generated by: bmrs {provenance}\n"));
    if let Some(b) = bound {
        text.push_str(&format!("# bound: {b}\n"));
    }
    text.push_str(&syntax::print(&file));
    std::fs::write(path, &text)
        .map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display())))?;
    Ok(())
}

fn dispatch(cmd: Cmd) -> Result<ExitCode, Error> {
    match cmd {
        Cmd::Run { file, input } => {
            let parsed = load(&file.file)?;
            let (_, interp) = select(&parsed, &file.interp)?;
            let s = input_string(interp, &input)?;
            let out = transduce(interp, &s)?;
            println!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Eval {
            file,
            input,
            index,
            term,
        } => {
            let parsed = load(&file.file)?;
            let (_, interp) = select(&parsed, &file.interp)?;
            let s = input_string(interp, &input)?;
            let names: BTreeSet<_> = interp.body().names();
            let term = syntax::parse_term(
                &term,
                interp.input_alphabet(),
                &names,
                parsed.generated,
            )?;
            let value = eval(&s, index, interp.body(), &term)?;
            println!("{value}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Strictify { file, output } => {
            let parsed = load(&file.file)?;
            let (name, interp) = select(&parsed, &file.interp)?;
            let result = strictify(interp)?;
            write_program(&output, &format!("{name}$strict"), &result, "strictify", None)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Destrictify { file, output } => {
            let parsed = load(&file.file)?;
            let (name, interp) = select(&parsed, &file.interp)?;
            let result = destrictify(interp)?;
            write_program(&output, &format!("{name}$lean"), &result, "destrictify", None)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Normalize { file, output } => {
            let parsed = load(&file.file)?;
            let (name, interp) = select(&parsed, &file.interp)?;
            let cert = normalize(interp)?;
            for note in &cert.rewrites {
                eprintln!("note: {note}");
            }
            write_program(&output, &format!("{name}$nf"), &cert.interp, "normalize", None)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::BlankEnrich {
            file,
            output,
            max_len,
        } => {
            let parsed = load(&file.file)?;
            let (name, interp) = select(&parsed, &file.interp)?;
            let bound = bound_or_default(max_len, DEFAULT_CHECK_BOUND);
            let result = blank_enrich(interp, bound)?;
            write_program(
                &output,
                &format!("{name}$blanks"),
                &result,
                "blank-enrich",
                Some(bound),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Compose {
            outer_file,
            inner_file,
            outer,
            inner,
            output,
            max_len,
        } => {
            let outer_parsed = load(&outer_file)?;
            let inner_parsed = load(&inner_file)?;
            let (outer_name, rho) = select(&outer_parsed, &outer)?;
            let (inner_name, pi) = select(&inner_parsed, &inner)?;
            let bound = bound_or_default(max_len, DEFAULT_CHECK_BOUND);
            let result = compose(rho, pi, bound)?;
            write_program(
                &output,
                &format!("{outer_name}${inner_name}"),
                &result,
                "compose",
                Some(bound),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Check { file, max_len } => {
            let parsed = load(&file.file)?;
            let (_, interp) = select(&parsed, &file.interp)?;
            let bound = bound_or_default(max_len, DEFAULT_CHECK_BOUND);
            let wd = check_well_defined(interp, bound);
            let strict = check_strict(interp, bound);
            println!("well-defined: {wd}");
            println!("strict: {strict}");
            println!("bound={bound}");
            println!("well_defined={}", if wd.passed() { "pass" } else { "counterexample" });
            println!("strict={}", if strict.passed() { "pass" } else { "counterexample" });
            if wd.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Cmd::Verify {
            suite,
            max_len,
            list,
        } => {
            if list {
                for name in suite_names() {
                    println!("{name}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let Some(name) = suite else {
                return Err(Error::Domain("name a suite or pass --list".into()));
            };
            let fallback = default_bound(&name)
                .ok_or_else(|| Error::UnknownSuite(name.clone()))?;
            let bound = bound_or_default(max_len, fallback);
            let report = run_suite(&name, bound)?;
            println!("{report}");
            println!("suite={}", report.name);
            println!("bound={}", report.bound);
            println!("cases={}", report.cases);
            match &report.outcome {
                bmrs::harness::SuiteOutcome::Pass => {
                    println!("outcome=pass");
                    Ok(ExitCode::SUCCESS)
                }
                bmrs::harness::SuiteOutcome::Counterexample { witness } => {
                    println!("outcome=counterexample");
                    println!("witness={witness}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Cmd::Print { file } => {
            let parsed = load(&file)?;
            print!("{}", syntax::print(&parsed));
            Ok(ExitCode::SUCCESS)
        }
    }
}
