//! `fo2hier`: command-line access to ranker evaluation, word equivalences, monoid identities and
//! the alternation-level analysis of regular languages.
//!
//! Exit codes: 0 success or true, 1 false, 2 usage or parse error, 3 inconclusive.

mod report;

use std::fs;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fo2hier::congruence::DEFAULT_LENGTH_CAP;
use fo2hier::rankers::DEFAULT_DEPTH_LIMIT;
use fo2hier::{
    agree_on_rankers, cong_equivalent, quotient_monoid, satisfies_identity, wi_equivalent, AgreementMode, Alphabet,
    CongruenceQuery, Error, FiniteMonoid, OmegaTerm, Ranker, RankerClassSpec, Side, WiMode, Word,
};
use serde_json::json;

use report::{analyze, envelope, AnalyzeInput};

#[derive(Parser)]
#[command(name = "fo2hier", version, about = "FO2 quantifier-alternation analysis of regular languages")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Syntactic monoid, variety flags and alternation level of a language.
    Analyze(AnalyzeArgs),
    /// Ranker evaluation and agreement.
    #[command(subcommand)]
    Ranker(RankerCommand),
    /// Decide an equivalence between two words; prints true or false.
    Equiv(EquivArgs),
    /// Identity checks and congruence quotients.
    #[command(subcommand)]
    Monoid(MonoidCommand),
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long, conflicts_with = "dfa", required_unless_present = "dfa")]
    regex: Option<String>,
    /// DFA file (`alphabet:`, `states:`, `initial:`, `final:`, `trans:` lines).
    #[arg(long)]
    dfa: Option<String>,
    /// Alphabet for --regex; defaults to the letters of the expression.
    #[arg(long, requires = "regex")]
    alphabet: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum RankerCommand {
    /// Plain and condensed evaluation of a ranker on a word.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        ranker: String,
        /// Defaults to the letters of the word and the ranker.
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Agreement of two words on a ranker class such as `uRX_mn:2,3`.
    Agree {
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        #[arg(long = "class")]
        class: String,
        #[arg(long, value_enum, default_value = "defined")]
        mode: AgreeMode,
        /// Defaults to the letters of both words.
        #[arg(long)]
        alphabet: Option<String>,
        /// Depth bound for the unbounded shapes.
        #[arg(long, default_value_t = DEFAULT_DEPTH_LIMIT)]
        cap: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AgreeMode {
    Defined,
    Condensed,
}

#[derive(Clone, Copy, ValueEnum)]
enum EquivMode {
    Plain,
    Condensed,
    CongRight,
    CongLeft,
}

#[derive(Args)]
struct EquivArgs {
    #[arg(long)]
    u: String,
    #[arg(long)]
    v: String,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "plain")]
    mode: EquivMode,
    /// Defaults to the letters of both words.
    #[arg(long)]
    alphabet: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum MonoidCommand {
    /// Check `lhs = rhs` under all assignments (at most 4 variables).
    Identity {
        #[arg(long)]
        table: String,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// The quotient of A* by a condensed-ranker congruence, in the table format.
    Quotient {
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "right")]
        side: String,
        #[arg(long, default_value_t = DEFAULT_LENGTH_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
}

/// Result of a command: exit status plus output.
struct Outcome {
    code: u8,
    stdout: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout }
    }

    fn verdict(holds: bool, stdout: String) -> Self {
        Outcome { code: if holds { 0 } else { 1 }, stdout }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = match e.downcast_ref::<Error>() {
                Some(Error::NotStabilized(_)) => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> anyhow::Result<Outcome> {
    match command {
        Command::Analyze(args) => run_analyze(args),
        Command::Ranker(cmd) => run_ranker(cmd),
        Command::Equiv(args) => run_equiv(args),
        Command::Monoid(cmd) => run_monoid(cmd),
    }
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("json values serialize") + "\n"
}

/// The given alphabet, or the letters of `texts`.
fn alphabet_or(given: &Option<String>, texts: &[&str]) -> anyhow::Result<Alphabet> {
    Ok(match given {
        Some(a) => Alphabet::parse(a)?,
        None => Alphabet::new(texts.iter().flat_map(|t| t.chars()))?,
    })
}

fn run_analyze(args: AnalyzeArgs) -> anyhow::Result<Outcome> {
    let input = match (&args.regex, &args.dfa) {
        (Some(pattern), None) => {
            let alphabet = args.alphabet.as_deref().map(Alphabet::parse).transpose()?;
            AnalyzeInput::Regex { pattern: pattern.clone(), alphabet }
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path).with_context(|| format!("cannot read {path}"))?;
            AnalyzeInput::Dfa { path: path.clone(), text }
        }
        _ => bail!("give exactly one of --regex and --dfa"),
    };
    let report = analyze(&input)?;
    let inconclusive = report.levels.inconclusive && report.levels.fo2_definable;
    let stdout = if args.json { pretty(&serde_json::to_value(&report)?) } else { report.to_text() };
    Ok(Outcome { code: if inconclusive { 3 } else { 0 }, stdout })
}

fn run_ranker(cmd: RankerCommand) -> anyhow::Result<Outcome> {
    match cmd {
        RankerCommand::Eval { word, ranker, alphabet } => {
            let ranker_letters: String = ranker.split(['.', ' ', '\t']).filter_map(|t| t.get(1..)).collect();
            let alphabet = alphabet_or(&alphabet, &[&word, &ranker_letters])?;
            let u = Word::parse(&word, &alphabet)?;
            let r = Ranker::parse(&ranker, &alphabet)?;
            let input = json!({ "word": word, "ranker": ranker, "alphabet": alphabet.to_string() });
            Ok(Outcome::ok(pretty(&envelope("ranker eval", input, serde_json::to_value(r.eval(&u))?))))
        }
        RankerCommand::Agree { u, v, class, mode, alphabet, cap } => {
            let alphabet = alphabet_or(&alphabet, &[&u, &v])?;
            let (uw, vw) = (Word::parse(&u, &alphabet)?, Word::parse(&v, &alphabet)?);
            let spec = RankerClassSpec::parse(&class, alphabet.clone(), cap)?;
            let mode_name = match mode {
                AgreeMode::Defined => "defined",
                AgreeMode::Condensed => "condensed",
            };
            let agree = agree_on_rankers(&uw, &vw, &spec, mode_name.parse::<AgreementMode>()?)?;
            let input = json!({ "u": u, "v": v, "class": class, "mode": mode_name, "alphabet": alphabet.to_string(), "cap": cap });
            Ok(Outcome::verdict(agree, pretty(&envelope("ranker agree", input, json!({ "agree": agree })))))
        }
    }
}

fn run_equiv(args: EquivArgs) -> anyhow::Result<Outcome> {
    let alphabet = alphabet_or(&args.alphabet, &[&args.u, &args.v])?;
    let (u, v) = (Word::parse(&args.u, &alphabet)?, Word::parse(&args.v, &alphabet)?);
    let (m, n) = (args.m, args.n);
    let (mode, holds) = match args.mode {
        EquivMode::Plain => ("plain", wi_equivalent(&u, &v, &alphabet, m, n, WiMode::Plain)?),
        EquivMode::Condensed => ("condensed", wi_equivalent(&u, &v, &alphabet, m, n, WiMode::Condensed)?),
        EquivMode::CongRight => ("cong-right", cong_equivalent(&u, &v, CongruenceQuery::right(m, n)?)),
        EquivMode::CongLeft => ("cong-left", cong_equivalent(&u, &v, CongruenceQuery::left(m, n)?)),
    };
    let stdout = if args.json {
        let input = json!({ "u": args.u, "v": args.v, "m": m, "n": n, "mode": mode, "alphabet": alphabet.to_string() });
        pretty(&envelope("equiv", input, json!({ "equivalent": holds })))
    } else {
        format!("{holds}\n")
    };
    Ok(Outcome::verdict(holds, stdout))
}

fn run_monoid(cmd: MonoidCommand) -> anyhow::Result<Outcome> {
    match cmd {
        MonoidCommand::Identity { table, lhs, rhs } => {
            let text = fs::read_to_string(&table).with_context(|| format!("cannot read {table}"))?;
            let monoid = FiniteMonoid::parse_table_text(&text)?;
            let l: OmegaTerm = lhs.parse()?;
            let r: OmegaTerm = rhs.parse()?;
            let check = satisfies_identity(&monoid, &l, &r)?;
            let input = json!({ "table": table, "lhs": l.to_string(), "rhs": r.to_string() });
            let result =
                json!({ "holds": check.holds, "counterexample": check.counterexample, "monoid_size": monoid.len() });
            Ok(Outcome::verdict(check.holds, pretty(&envelope("monoid identity", input, result))))
        }
        MonoidCommand::Quotient { alphabet, m, n, side, cap, json } => {
            let alph = Alphabet::parse(&alphabet)?;
            if alph.is_empty() {
                return Err(anyhow!(Error::InvalidAlphabet("the quotient alphabet is empty".into())));
            }
            let side: Side = side.parse()?;
            let q = quotient_monoid(&alph, CongruenceQuery::new(m, n, side)?, cap)?;
            let stdout = if json {
                let input = json!({ "alphabet": alph.to_string(), "m": m, "n": n, "side": side, "cap": cap });
                let reps: Vec<String> = q.representatives.iter().map(Word::to_string).collect();
                let result = json!({
                    "size": q.monoid.len(),
                    "identity": q.monoid.identity(),
                    "table": q.monoid.rows(),
                    "generators": q.monoid.generators(),
                    "representatives": reps,
                });
                pretty(&envelope("monoid quotient", input, result))
            } else {
                let reps: Vec<String> = q
                    .representatives
                    .iter()
                    .map(|w| if w.is_empty() { "1".to_string() } else { w.to_string() })
                    .collect();
                format!(
                    "# fo2hier {} quotient over {alph} by {} congruence (m={m}, n={n})\n# representatives: {}\n{}",
                    fo2hier::VERSION,
                    side,
                    reps.join(" "),
                    q.monoid.to_table_text()
                )
            };
            Ok(Outcome::ok(stdout))
        }
    }
}
