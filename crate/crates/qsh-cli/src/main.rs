//! `qsh` — command-line workbench for the quasi-shuffle algebra library.
//!
//! Exit codes: 0 success, 1 assertion failure, 2 usage/parse error,
//! 3 out-of-window / infeasible solve.

use qsh_cli::{charfile, parse, schemes, verify};

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qsh_core::characters::LinearMap;
use qsh_core::hopf::Antipode;
use qsh_core::{
    coideal, conv_exp, conv_log, convolution_product, coproduct, eulerian_pi1, fit_character,
    isomorphism, quasi_shuffle_elem, sample_transfer, transfer_between, Alphabet, Element, Error,
    MapKind, Rat, RatFun, SchemeName, TransferElement, Window, Word,
};

use charfile::{read_char_file, read_partial_file, write_char_file, CharData, PartialData};
use parse::{parse_element, parse_word, CliScalar};

#[derive(Parser)]
#[command(name = "qsh", version, about = "quasi-shuffle algebra workbench", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct WindowArgs {
    /// Letter range MIN..MAX
    #[arg(long, allow_hyphen_values = true)]
    letters: String,
    /// Maximum word length
    #[arg(long, default_value_t = 3)]
    max_len: usize,
    /// Alphabet restriction
    #[arg(long, default_value = "all")]
    alphabet: String,
}

impl WindowArgs {
    fn build(&self) -> Result<Window, CliError> {
        let (min, max) = self
            .letters
            .split_once("..")
            .ok_or_else(|| CliError::Usage("--letters must be MIN..MAX".into()))?;
        let min: i64 = min
            .parse()
            .map_err(|_| CliError::Usage("bad letter minimum".into()))?;
        let max: i64 = max
            .parse()
            .map_err(|_| CliError::Usage("bad letter maximum".into()))?;
        let alphabet = match self.alphabet.as_str() {
            "all" => Alphabet::All,
            "nonpositive" => Alphabet::Nonpositive,
            "negative" => Alphabet::Negative,
            _ => return Err(CliError::Usage("--alphabet must be all|nonpositive|negative".into())),
        };
        Window::new(min, max, self.max_len, alphabet).map_err(CliError::from)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Quasi-shuffle product of two elements
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Shuffle product of two elements
    ShuffleMul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Deconcatenation coproduct of a word (TSV: scalar, left, right)
    Coprod { word: String },
    /// Antipode of a word
    Antipode { word: String },
    /// Whether a word is singular (prints singular/non-singular)
    Singular { word: String },
    /// Contractions of a word; all one-block contractions, or one composition
    Contract {
        word: String,
        /// Comma-separated block sizes, e.g. 2,1
        #[arg(long)]
        composition: Option<String>,
    },
    /// Echelon basis of the non-singular span (one word per line)
    Nbasis {
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Assert the prefix and contraction closures of the non-singular span
    PrefixCheck {
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Hoffman logarithm of a word
    Hlog { word: String },
    /// Hoffman exponential of a word
    Hexp { word: String },
    /// Eulerian idempotent applied to an element
    Pi1 {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Dimension and basis of the depth-graded quotient W
    Wdim {
        #[arg(long)]
        depth: usize,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Character-table operations
    Char {
        #[command(subcommand)]
        cmd: CharCmd,
    },
    /// Published renormalization scheme data
    Scheme {
        #[command(subcommand)]
        cmd: SchemeCmd,
    },
    /// Run the property suite on a window
    Verify {
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CharCmd {
    /// Check the character law for a table (exit 1 on violation)
    Check {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Convolution product of two tables
    Conv {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "in2")]
        input2: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convolution inverse (composition with the antipode)
    Inv {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convolution exponential of an infinitesimal character
    Exp {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convolution logarithm of a character
    Log {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fit a character to prescribed non-singular values; the constraint
    /// file's header window is the fitting window
    Fit {
        /// Partial table of non-singular constraints (char-file format)
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded pseudo-random transfer element
    Sample {
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The transfer element carrying the second character to the first
    TransferBetween {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "in2")]
        input2: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Act by a transfer element (first input) on a character (second)
    Act {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "in2")]
        input2: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SchemeCmd {
    /// Reference values of a scheme (TSV: word, value, provenance)
    Show {
        name: String,
        /// Emit the full constructed character table instead
        #[arg(long = "char")]
        char_table: bool,
    },
    /// The partner value forced by the quasi-shuffle relation at (-1,-3)
    Partner {
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
}

enum CliError {
    Usage(String),
    Assertion(String),
    Domain(Error),
    Io(std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Assertion(_) => 1,
            CliError::Domain(e) => match e {
                Error::OutOfWindow { .. }
                | Error::InfeasibleWithinWindow { .. }
                | Error::DegenerateWindow => 3,
                Error::InvalidWindow(_) => 2,
                _ => 1,
            },
            CliError::Io(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) => format!("usage error: {m}"),
            CliError::Assertion(m) => m.clone(),
            CliError::Domain(e) => format!("error: {e}"),
            CliError::Io(e) => format!("io error: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<parse::ParseError> for CliError {
    fn from(e: parse::ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<charfile::FileError> for CliError {
    fn from(e: charfile::FileError) -> Self {
        match e {
            charfile::FileError::Table(inner) => CliError::Domain(inner),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn seed_or_env(seed: Option<u64>) -> Result<u64, CliError> {
    match seed {
        Some(s) => Ok(s),
        None => match std::env::var("QSH_SEED") {
            Ok(text) => text
                .parse()
                .map_err(|_| CliError::Usage("QSH_SEED must be an unsigned integer".into())),
            Err(_) => Ok(0),
        },
    }
}

fn load_char(path: &PathBuf) -> Result<CharData, CliError> {
    let text = std::fs::read_to_string(path)?;
    Ok(read_char_file(&text)?)
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn emit_char<S: CliScalar>(out: Option<&PathBuf>, map: &LinearMap<S>) -> Result<(), CliError> {
    emit(out, &write_char_file(map))
}

/// Re-tags a loaded map as a character after checking the character law.
fn require_character<S: CliScalar>(map: LinearMap<S>, what: &str) -> Result<LinearMap<S>, CliError> {
    let map = LinearMap::new(*map.window(), map.table().clone(), MapKind::Character)
        .map_err(CliError::from)?;
    if !qsh_core::check_character(&map) {
        return Err(CliError::Assertion(format!("{what} is not a character")));
    }
    Ok(map)
}

fn require_infinitesimal<S: CliScalar>(
    map: LinearMap<S>,
    what: &str,
) -> Result<LinearMap<S>, CliError> {
    let map = LinearMap::new(*map.window(), map.table().clone(), MapKind::Infinitesimal)
        .map_err(CliError::from)?;
    if !qsh_core::check_infinitesimal(&map) {
        return Err(CliError::Assertion(format!("{what} is not an infinitesimal character")));
    }
    Ok(map)
}

fn run() -> Result<(), CliError> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Mul { a, b } => {
            let x: Element<Rat> = parse_element(&a)?;
            let y: Element<Rat> = parse_element(&b)?;
            println!("{}", quasi_shuffle_elem(&x, &y));
        }
        Cmd::ShuffleMul { a, b } => {
            let x: Element<Rat> = parse_element(&a)?;
            let y: Element<Rat> = parse_element(&b)?;
            println!("{}", isomorphism::shuffle_elem(&x, &y));
        }
        Cmd::Coprod { word } => {
            let w = parse_word(&word)?;
            for ((u, v), c) in coproduct::<Rat>(&w).iter() {
                println!("{c}\t{u}\t{v}");
            }
        }
        Cmd::Antipode { word } => {
            let w = parse_word(&word)?;
            let mut antipode = Antipode::<Rat>::new();
            println!("{}", antipode.of(&w));
        }
        Cmd::Singular { word } => {
            let w = parse_word(&word)?;
            let ns = coideal::is_non_singular(&w)?;
            println!("{}", if ns { "non-singular" } else { "singular" });
        }
        Cmd::Contract { word, composition } => {
            let w = parse_word(&word)?;
            match composition {
                Some(text) => {
                    let parts: Result<Vec<usize>, _> =
                        text.split(',').map(|p| p.trim().parse::<usize>()).collect();
                    let parts = parts
                        .map_err(|_| CliError::Usage("--composition must be positive integers".into()))?;
                    println!("{}", coideal::contract_along(&w, &parts)?);
                }
                None => {
                    for c in coideal::contractions_one_block(&w)? {
                        println!("{c}");
                    }
                }
            }
        }
        Cmd::Nbasis { window } => {
            let win = window.build()?;
            for row in qsh_core::n_basis::<Rat>(&win).pivots() {
                println!("{row}");
            }
        }
        Cmd::PrefixCheck { window } => {
            let win = window.build()?;
            let prefix = coideal::prefix_closure_check(&win);
            let contraction = coideal::contraction_closure_check(&win);
            println!("prefix-closure: {}", if prefix { "PASS" } else { "FAIL" });
            println!("contraction-closure: {}", if contraction { "PASS" } else { "FAIL" });
            if !(prefix && contraction) {
                return Err(CliError::Assertion("closure check failed".into()));
            }
        }
        Cmd::Hlog { word } => {
            let w = parse_word(&word)?;
            println!("{}", isomorphism::hoffman_log::<Rat>(&w));
        }
        Cmd::Hexp { word } => {
            let w = parse_word(&word)?;
            println!("{}", isomorphism::hoffman_exp::<Rat>(&w));
        }
        Cmd::Pi1 { element } => {
            let x: Element<Rat> = parse_element(&element)?;
            println!("{}", eulerian_pi1(&x));
        }
        Cmd::Wdim { depth, window } => {
            let win = window.build()?;
            let (dim, basis) = isomorphism::w_dimension::<Rat>(depth, &win)?;
            println!("dimension: {dim}");
            match basis {
                isomorphism::WBasis::Depth1(letters) => {
                    for k in letters {
                        println!("basis\t[{k}]");
                    }
                }
                isomorphism::WBasis::Depth2(pairs) => {
                    for (k, l) in &pairs {
                        println!("basis\t[z_{k},z_{l}]");
                    }
                    let diff = isomorphism::w2_basis_diff::<Rat>(&win)?;
                    println!("paper-set comparison:");
                    println!("bracket\tcomputed\tpaper");
                    for (k, l) in &diff.in_both {
                        println!("[z_{k},z_{l}]\tyes\tyes");
                    }
                    for (k, l) in &diff.computed_only {
                        println!("[z_{k},z_{l}]\tyes\tno");
                    }
                    for (k, l) in &diff.paper_only {
                        println!("[z_{k},z_{l}]\tno\tyes");
                    }
                }
            }
        }
        Cmd::Char { cmd } => run_char(cmd)?,
        Cmd::Scheme { cmd } => run_scheme(cmd)?,
        Cmd::Verify { window, seed, json } => {
            let win = window.build()?;
            let seed = seed_or_env(seed)?;
            let report = verify::run(&win, seed)?;
            if json {
                print!("{}", report.render_json());
            } else {
                print!("{}", report.render_text());
            }
            if !report.all_pass() {
                return Err(CliError::Assertion("verification failed".into()));
            }
        }
    }
    Ok(())
}

fn run_char(cmd: CharCmd) -> Result<(), CliError> {
    match cmd {
        CharCmd::Check { input } => match load_char(&input)? {
            CharData::Q(map) => char_check(map),
            CharData::Qt(map) => char_check(map),
        },
        CharCmd::Conv { input, input2, out } => {
            match (load_char(&input)?, load_char(&input2)?) {
                (CharData::Q(a), CharData::Q(b)) => {
                    emit_char(out.as_ref(), &convolution_product(&a, &b)?)
                }
                (CharData::Qt(a), CharData::Qt(b)) => {
                    emit_char(out.as_ref(), &convolution_product(&a, &b)?)
                }
                _ => Err(CliError::Usage("inputs use different scalar fields".into())),
            }
        }
        CharCmd::Inv { input, out } => match load_char(&input)? {
            CharData::Q(map) => {
                emit_char(out.as_ref(), &qsh_core::char_inverse(&require_character(map, "input")?)?)
            }
            CharData::Qt(map) => {
                emit_char(out.as_ref(), &qsh_core::char_inverse(&require_character(map, "input")?)?)
            }
        },
        CharCmd::Exp { input, out } => match load_char(&input)? {
            CharData::Q(map) => {
                emit_char(out.as_ref(), &conv_exp(&require_infinitesimal(map, "input")?)?)
            }
            CharData::Qt(map) => {
                emit_char(out.as_ref(), &conv_exp(&require_infinitesimal(map, "input")?)?)
            }
        },
        CharCmd::Log { input, out } => match load_char(&input)? {
            CharData::Q(map) => {
                emit_char(out.as_ref(), &conv_log(&require_character(map, "input")?)?)
            }
            CharData::Qt(map) => {
                emit_char(out.as_ref(), &conv_log(&require_character(map, "input")?)?)
            }
        },
        CharCmd::Fit { input, out } => {
            let text = std::fs::read_to_string(&input)?;
            match read_partial_file(&text)? {
                PartialData::Q(win, table) => emit_char(out.as_ref(), &fit_character(&table, &win)?),
                PartialData::Qt(win, table) => emit_char(out.as_ref(), &fit_character(&table, &win)?),
            }
        }
        CharCmd::Sample { window, seed, out } => {
            let win = window.build()?;
            let seed = seed_or_env(seed)?;
            let phi = sample_transfer::<Rat>(&win, seed)?;
            emit_char(out.as_ref(), phi.as_map())
        }
        CharCmd::TransferBetween { input, input2, out } => {
            match (load_char(&input)?, load_char(&input2)?) {
                (CharData::Q(a), CharData::Q(b)) => {
                    let a = require_character(a, "first input")?;
                    let b = require_character(b, "second input")?;
                    emit_char(out.as_ref(), transfer_between(&a, &b)?.as_map())
                }
                (CharData::Qt(a), CharData::Qt(b)) => {
                    let a = require_character(a, "first input")?;
                    let b = require_character(b, "second input")?;
                    emit_char(out.as_ref(), transfer_between(&a, &b)?.as_map())
                }
                _ => Err(CliError::Usage("inputs use different scalar fields".into())),
            }
        }
        CharCmd::Act { input, input2, out } => {
            match (load_char(&input)?, load_char(&input2)?) {
                (CharData::Q(phi), CharData::Q(alpha)) => {
                    let phi = TransferElement::new(require_character(phi, "first input")?)?;
                    let alpha = require_character(alpha, "second input")?;
                    emit_char(out.as_ref(), &qsh_core::act(&phi, &alpha)?)
                }
                (CharData::Qt(phi), CharData::Qt(alpha)) => {
                    let phi = TransferElement::new(require_character(phi, "first input")?)?;
                    let alpha = require_character(alpha, "second input")?;
                    emit_char(out.as_ref(), &qsh_core::act(&phi, &alpha)?)
                }
                _ => Err(CliError::Usage("inputs use different scalar fields".into())),
            }
        }
    }
}

fn char_check<S: CliScalar>(map: LinearMap<S>) -> Result<(), CliError> {
    let as_char = LinearMap::new(*map.window(), map.table().clone(), MapKind::Character);
    let ok = matches!(&as_char, Ok(c) if qsh_core::check_character(c));
    println!("character-law: {}", if ok { "PASS" } else { "FAIL" });
    if let Ok(c) = &as_char {
        println!(
            "transfer: {}",
            if qsh_core::is_transfer(c) { "yes" } else { "no" }
        );
    }
    if ok {
        Ok(())
    } else {
        Err(CliError::Assertion("character law violated".into()))
    }
}

fn run_scheme(cmd: SchemeCmd) -> Result<(), CliError> {
    match cmd {
        SchemeCmd::Show { name, char_table } => {
            if name == "EMS_t" || name == "ems_t" {
                if char_table {
                    return emit_char::<RatFun>(None, &schemes::ems_t_character());
                }
                let w = Word::new(vec![-1, -3]);
                let v = qsh_core::ems_t_value(&w)?;
                println!("{w}\t{v}\tpublished");
                return Ok(());
            }
            let scheme = SchemeName::parse(&name)
                .ok_or_else(|| CliError::Usage("scheme must be GZ|EMS|MP|EMS_t".into()))?;
            if char_table {
                return emit_char::<Rat>(None, &schemes::scheme_character(scheme));
            }
            let table = qsh_core::scheme_table(scheme);
            for (w, (v, provenance)) in table.iter() {
                let tag = match provenance {
                    qsh_core::Provenance::Published => "published",
                    qsh_core::Provenance::Analytic => "analytic",
                    qsh_core::Provenance::Forced => "forced",
                };
                println!("{w}\t{v}\t{tag}");
            }
            Ok(())
        }
        SchemeCmd::Partner { value } => {
            let v: Rat = parse::parse_scalar(&value)?;
            println!("{}", qsh_core::forced_partner(&v));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
