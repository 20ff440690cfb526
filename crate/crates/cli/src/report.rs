use std::fmt::Write;

use fo2hier::{
    compile_language, green_summary, join_diagnostic, min_joint_level, transition_monoid, variety_membership, Alphabet,
    GreenSummary, LanguageSource, LevelReport, VarietyFlags, VERSION,
};
use serde::Serialize;
use serde_json::{json, Value};

pub enum AnalyzeInput {
    Regex { pattern: String, alphabet: Option<Alphabet> },
    Dfa { path: String, text: String },
}

#[derive(Serialize)]
pub struct InputEcho {
    pub regex: Option<String>,
    pub dfa: Option<String>,
    pub alphabet: String,
}

#[derive(Serialize)]
pub struct AnalysisReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub input: InputEcho,
    pub minimal_dfa_size: usize,
    pub monoid_size: usize,
    pub idempotents: usize,
    pub green: GreenSummary,
    pub varieties: VarietyFlags,
    pub levels: LevelReport,
    pub join_diagnostic: bool,
}

pub fn analyze(input: &AnalyzeInput) -> fo2hier::Result<AnalysisReport> {
    let (dfa, regex, path) = match input {
        AnalyzeInput::Regex { pattern, alphabet } => (
            compile_language(LanguageSource::Regex { pattern, alphabet: alphabet.as_ref() })?,
            Some(pattern.clone()),
            None,
        ),
        AnalyzeInput::Dfa { path, text } => {
            (compile_language(LanguageSource::DfaText(text))?, None, Some(path.clone()))
        }
    };
    let monoid = transition_monoid(&dfa);
    Ok(AnalysisReport {
        tool: "fo2hier",
        version: VERSION,
        command: "analyze",
        input: InputEcho { regex, dfa: path, alphabet: dfa.alphabet().to_string() },
        minimal_dfa_size: dfa.num_states(),
        monoid_size: monoid.len(),
        idempotents: monoid.idempotents().len(),
        green: green_summary(&monoid),
        varieties: variety_membership(&monoid),
        levels: min_joint_level(&monoid),
        join_diagnostic: join_diagnostic(&monoid),
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl AnalysisReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let source = match (&self.input.regex, &self.input.dfa) {
            (Some(r), _) => format!("regex {r}"),
            (_, Some(p)) => format!("dfa {p}"),
            _ => unreachable!("one input source"),
        };
        let v = &self.varieties;
        let l = &self.levels;
        writeln!(out, "fo2hier {} analyze {source} over {{{}}}", self.version, self.input.alphabet).unwrap();
        writeln!(out, "minimal DFA: {} states", self.minimal_dfa_size).unwrap();
        writeln!(out, "syntactic monoid: {} elements, {} idempotents", self.monoid_size, self.idempotents).unwrap();
        writeln!(
            out,
            "varieties: aperiodic={} DA={} J1={} J={} R={} L={}",
            yes(v.aperiodic),
            yes(v.da),
            yes(v.j1),
            yes(v.j),
            yes(v.r),
            yes(v.l)
        )
        .unwrap();
        for row in &l.scan {
            writeln!(out, "level m={}: R_m={} L_m={}", row.m, yes(row.r), yes(row.l)).unwrap();
        }
        if !l.fo2_definable {
            writeln!(out, "FO2-definable: no").unwrap();
        } else if let (Some(m0), Some((lo, hi))) = (l.joint_level, l.alternation_interval) {
            writeln!(out, "FO2-definable: yes; joint level {m0}; alternation level in [{lo}, {hi}]").unwrap();
        } else {
            writeln!(out, "FO2-definable: yes; level scan inconclusive up to m={}", l.scan.len()).unwrap();
        }
        writeln!(out, "join diagnostic (R2 v L2 identity, advisory): {}", yes(self.join_diagnostic)).unwrap();
        out
    }
}

/// Common JSON wrapper: tool, version, command and input echo, then the result fields.
pub fn envelope(command: &str, input: Value, result: Value) -> Value {
    let mut obj = json!({ "tool": "fo2hier", "version": VERSION, "command": command, "input": input });
    if let (Some(o), Value::Object(fields)) = (obj.as_object_mut(), result) {
        o.extend(fields);
    }
    obj
}
