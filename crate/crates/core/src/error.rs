use thiserror::Error;

/// Errors raised by parsing, construction and bounded searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty ranker: a ranker is a non-empty sequence of steps")]
    EmptyRanker,
    #[error("unknown ranker direction in token `{0}` (expected X or Y)")]
    UnknownDirection(String),
    #[error("malformed ranker token `{0}`")]
    MalformedToken(String),
    #[error("letter `{0}` is not in the declared alphabet")]
    LetterOutsideAlphabet(char),
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error("table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} is not a two-sided identity")]
    WrongIdentity(usize),
    #[error("malformed monoid table: {0}")]
    MalformedTable(String),
    #[error("unassigned variable x{0}")]
    UnassignedVariable(usize),
    #[error("identity has {vars} variables, more than the configured bound {bound}")]
    TooManyVariables { vars: usize, bound: usize },
    #[error("term parse error at byte {pos}: {msg}")]
    TermParse { pos: usize, msg: String },
    #[error("regex parse error at byte {pos}: {msg}")]
    RegexParse { pos: usize, msg: String },
    #[error("malformed DFA file, line {line}: {msg}")]
    DfaFormat { line: usize, msg: String },
    #[error("incomplete transition function: no transition from state {state} on `{letter}`")]
    IncompleteDfa { state: usize, letter: char },
    #[error("quotient did not stabilize within word length {0}")]
    NotStabilized(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
