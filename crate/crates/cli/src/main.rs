//! `bsgeo`: geodesics and normal forms in Baumslag–Solitar groups from the command line.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use bsgeo::{
    britton_reduce, canonical_form, classify, equal, parse_alt, t_sequence, AltWord, BallIndex,
    Error, Group, Letter, RawWord,
};
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "bsgeo",
    version,
    about = "Geodesics in BS(p,q) = <a, t | t a^p T = a^q>"
)]
struct Cli {
    /// Exponent p of the relation, 1 <= p < q.
    #[arg(long, global = true, default_value_t = 0)]
    p: u64,
    /// Exponent q of the relation.
    #[arg(long, global = true, default_value_t = 0)]
    q: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Print words as plain letters instead of compact notation.
    #[arg(long, global = true)]
    raw: bool,
    /// Longest word printed with --raw.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_expansion: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Britton reduction.
    Britton {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Irreducible form under the rewriting system.
    Canonical {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Stable-letter sequence of the Britton reduction.
    Tseq {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Structural class: horocyclic, hill, difficult, valley or general.
    Classify {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Length-lexicographical normal form of a horocyclic word.
    Llnf {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Peak normal form and a geodesic.
    Pnf {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Geodesic length.
    Geolen {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Brute-force ball enumeration.
    Oracle {
        #[command(subcommand)]
        action: OracleCmd,
    },
    /// Random words checked against invariants and the oracle.
    Fuzz {
        #[arg(long, default_value_t = 1000)]
        iterations: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        maxlen: usize,
        #[arg(long, default_value_t = 8)]
        radius: usize,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Write the ball as `canonical<TAB>length<TAB>llnf` lines.
    Ball {
        #[arg(long)]
        radius: usize,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<String>,
    },
    /// Compare all words up to a length against the ball.
    Check {
        #[arg(long)]
        wordlen: usize,
        #[arg(long)]
        radius: usize,
    },
}

#[derive(Serialize, Default)]
struct Report {
    p: u64,
    q: u64,
    input: String,
    britton: Option<String>,
    t_sequence: Option<String>,
    classification: Option<String>,
    pnf: Option<PnfReport>,
    llnf: Option<String>,
    geodesic_length: Option<u64>,
}

#[derive(Serialize)]
struct PnfReport {
    word: String,
    peak: usize,
    geodesic: String,
}

enum Failure {
    Error(String),
    Unsupported(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnsupportedCase { .. } => Failure::Unsupported(e.to_string()),
            other => Failure::Error(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Error(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Error(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Unsupported(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let g = Group::new(cli.p, cli.q)?;
    match &cli.command {
        Command::Britton { word }
        | Command::Canonical { word }
        | Command::Tseq { word }
        | Command::Classify { word }
        | Command::Llnf { word }
        | Command::Pnf { word }
        | Command::Geolen { word } => word_command(cli, &g, word),
        Command::Oracle { action } => match action {
            OracleCmd::Ball { radius, out } => oracle_ball(&g, *radius, out.as_deref()),
            OracleCmd::Check { wordlen, radius } => oracle_check(&g, *wordlen, *radius),
        },
        Command::Fuzz {
            iterations,
            seed,
            maxlen,
            radius,
        } => fuzz(&g, *iterations, *seed, *maxlen, *radius),
    }
}

fn show_alt(cli: &Cli, w: &AltWord) -> Result<String, Failure> {
    if cli.raw {
        Ok(w.to_raw(cli.max_expansion)?.to_string())
    } else {
        Ok(w.to_string())
    }
}

fn word_command(cli: &Cli, g: &Group, text: &str) -> Outcome {
    let params = g.params();
    let w = parse_alt(text)?;
    let reduced = britton_reduce(&w, params);
    let mut report = Report {
        p: params.p(),
        q: params.q(),
        input: text.to_string(),
        britton: Some(show_alt(cli, &reduced)?),
        t_sequence: Some(bsgeo::britton::render_t_sequence(reduced.theta())),
        classification: Some(classify(&reduced, params).to_string()),
        ..Report::default()
    };
    let mut lines: Vec<String> = Vec::new();
    match &cli.command {
        Command::Britton { .. } => lines.push(report.britton.clone().unwrap_or_default()),
        Command::Canonical { .. } => lines.push(show_alt(cli, canonical_form(&w, params).word())?),
        Command::Tseq { .. } => lines.push(report.t_sequence.clone().unwrap_or_default()),
        Command::Classify { .. } => lines.push(report.classification.clone().unwrap_or_default()),
        Command::Llnf { .. } => {
            let llnf = g.llnf_horocyclic(&w)?;
            if !cli.raw {
                lines.push(llnf.notation_folded());
            }
            lines.push(llnf.to_string());
            lines.push(llnf.len().to_string());
            report.llnf = Some(llnf.to_string());
            report.geodesic_length = Some(llnf.len() as u64);
        }
        Command::Pnf { .. } => {
            let full = g.full_pnf(&w)?;
            let word = show_alt(cli, full.britton.word())?;
            if !cli.raw {
                lines.push(word.clone());
            }
            lines.push(full.flat.to_string());
            lines.push(full.geodesic_length.to_string());
            if let Some(n) = reduced.as_integer() {
                report.llnf = Some(g.int_llnf(n).to_string());
            }
            report.pnf = Some(PnfReport {
                word,
                peak: full.britton.peak(),
                geodesic: full.flat.to_string(),
            });
            report.geodesic_length = Some(full.geodesic_length);
        }
        Command::Geolen { .. } => {
            let n = g.geodesic_length(&w)?;
            lines.push(n.to_string());
            report.geodesic_length = Some(n);
        }
        _ => unreachable!("word commands only"),
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.format {
        Format::Text => {
            for l in lines {
                writeln!(out, "{l}")?;
            }
        }
        Format::Json => {
            let json =
                serde_json::to_string_pretty(&report).map_err(|e| Failure::Error(e.to_string()))?;
            writeln!(out, "{json}")?;
        }
    }
    Ok(())
}

fn oracle_ball(g: &Group, radius: usize, out: Option<&str>) -> Outcome {
    let ball = BallIndex::build(g.params(), radius)?;
    match out {
        Some(path) => {
            ball.export(BufWriter::new(File::create(path)?))?;
            eprintln!("wrote {} elements to {path}", ball.len());
        }
        None => ball.export(BufWriter::new(io::stdout().lock()))?,
    }
    Ok(())
}

/// Every word over the four letters of length at most `n`, shortest first.
fn all_words(n: usize) -> impl Iterator<Item = RawWord> {
    (0..=n).flat_map(|len| {
        (0..4usize.pow(len as u32)).map(move |mut code| {
            let mut ls = vec![Letter::T; len];
            for slot in ls.iter_mut().rev() {
                *slot = Letter::ALL[code % 4];
                code /= 4;
            }
            RawWord::new(ls)
        })
    })
}

/// Why `w` violates an invariant, or `None` when it passes. Unsupported
/// inputs pass.
fn violation(g: &Group, ball: &BallIndex, w: &RawWord) -> Option<String> {
    let params = g.params();
    let u = w.to_alt();
    let full = match g.full_pnf(&u) {
        Ok(f) => f,
        Err(Error::UnsupportedCase { .. }) => return None,
        Err(e) => return Some(format!("error: {e}")),
    };
    if !equal(&u, &full.flat.to_alt(), params) {
        return Some(format!("geodesic {} is not equal to the input", full.flat));
    }
    if full.flat.len() as u64 != full.geodesic_length {
        return Some(format!(
            "geodesic {} does not have length {}",
            full.flat, full.geodesic_length
        ));
    }
    if t_sequence(&full.flat.to_alt(), params) != t_sequence(&u, params) {
        return Some("t-sequence changed".into());
    }
    match g.full_pnf(full.britton.word()) {
        Ok(again) if again.britton == full.britton => {}
        _ => return Some(format!("pnf of {} is not stable", full.britton.word())),
    }
    if let Ok(expected) = ball.geolen(&u) {
        if expected != full.geodesic_length {
            return Some(format!(
                "geodesic length {} but the oracle says {expected}",
                full.geodesic_length
            ));
        }
        if let Some(n) = britton_reduce(&u, params).as_integer() {
            let llnf = g.int_llnf(n);
            let oracle = ball.llnf(&u).expect("present");
            if &llnf != oracle {
                return Some(format!("llnf {llnf} but the oracle says {oracle}"));
            }
        }
    }
    None
}

fn oracle_check(g: &Group, wordlen: usize, radius: usize) -> Outcome {
    let ball = BallIndex::build(g.params(), radius)?;
    let mut n = 0u64;
    for w in all_words(wordlen) {
        if let Some(why) = violation(g, &ball, &w) {
            println!("MISMATCH on \"{w}\": {why}");
            return Err(Failure::Error(format!("oracle check failed on \"{w}\"")));
        }
        n += 1;
    }
    println!("OK (all {n} words)");
    Ok(())
}

/// Shrink a failing word by dropping letters while it keeps failing.
fn shrink(g: &Group, ball: &BallIndex, mut w: RawWord) -> RawWord {
    loop {
        let smaller = (0..w.len()).map(|i| {
            let mut ls = w.letters().to_vec();
            ls.remove(i);
            RawWord::new(ls)
        });
        match smaller
            .into_iter()
            .find(|c| violation(g, ball, c).is_some())
        {
            Some(c) => w = c,
            None => return w,
        }
    }
}

fn fuzz(g: &Group, iterations: u64, seed: u64, maxlen: usize, radius: usize) -> Outcome {
    let ball = BallIndex::build(g.params(), radius)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    eprintln!("fuzzing {} with seed {seed}", g.params());
    for i in 0..iterations {
        let len = rng.gen_range(0..=maxlen);
        let w = RawWord::new((0..len).map(|_| Letter::ALL[rng.gen_range(0..4)]).collect());
        if violation(g, &ball, &w).is_some() {
            let small = shrink(g, &ball, w.clone());
            let why = violation(g, &ball, &small).unwrap_or_default();
            println!("FAIL at iteration {i} on \"{w}\"");
            println!("reproducer: \"{small}\": {why}");
            return Err(Failure::Error(format!("fuzz failure with seed {seed}")));
        }
    }
    println!("OK ({iterations} words, seed {seed})");
    Ok(())
}
