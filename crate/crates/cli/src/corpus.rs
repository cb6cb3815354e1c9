use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};

use sq_core::{Quiver, Word};

use crate::commands::{self, CmdResult, Engine, Failure};
use crate::outcome::{Outcome, Report, INPUT_ERROR, NEGATIVE, OK};

const BUNDLED: &str = include_str!("../corpus/paper.json");

#[derive(Deserialize)]
struct Corpus {
    /// Quivers in the text file format, by name.
    quivers: BTreeMap<String, String>,
    cases: Vec<Case>,
}

#[derive(Deserialize)]
struct Case {
    name: String,
    command: String,
    quiver: String,
    #[serde(default)]
    word: Option<String>,
    #[serde(default)]
    coxeter: Option<String>,
    #[serde(default)]
    bound: Option<usize>,
    /// For `recover`: the word whose tilting module is fed back in.
    #[serde(default)]
    tilting_word: Option<String>,
    #[serde(default)]
    exit_code: Option<i32>,
    /// JSON pointers into the command result and their expected values.
    expect: BTreeMap<String, Value>,
}

fn run_case(quivers: &BTreeMap<String, Quiver>, case: &Case) -> CmdResult {
    let q = quivers
        .get(&case.quiver)
        .ok_or_else(|| (INPUT_ERROR, format!("unknown quiver `{}`", case.quiver)))?;
    let word = || -> Result<Word, Failure> {
        let w = case.word.as_deref().ok_or((INPUT_ERROR, "missing `word`".to_string()))?;
        commands::parse_word(w, q)
    };
    let c = commands::coxeter_or_default(q, case.coxeter.as_deref())?;
    match case.command.as_str() {
        "check" => commands::check(q, &word()?, &c),
        "layers" => commands::layers(q, &word()?),
        "chain" => commands::chain(q, &c, &word()?, Engine::Both),
        "subcat" => commands::subcat(q, &c, &word()?, case.bound, None),
        "explore" => commands::explore(q, &word()?, None),
        "count" => commands::count(q, &c),
        "recover" => {
            let tw = case
                .tilting_word
                .as_deref()
                .ok_or((INPUT_ERROR, "missing `tilting_word`".to_string()))?;
            let (t, _, _) = commands::tilting_of(q, &c, &commands::parse_word(tw, q)?)?;
            commands::recover_modules(q, &c, &t, case.bound)
        }
        other => Err((INPUT_ERROR, format!("unknown command `{other}`"))),
    }
}

/// First mismatch between a case's expectations and the command result.
fn mismatch(case: &Case, out: &Outcome) -> Option<String> {
    let want_code = case.exit_code.unwrap_or(OK);
    if out.code != want_code {
        return Some(format!("exit code {} (expected {want_code})", out.code));
    }
    let result = &out.json["result"];
    for (pointer, want) in &case.expect {
        match result.pointer(pointer) {
            Some(got) if got == want => {}
            Some(got) => return Some(format!("{pointer}: got {got}, expected {want}")),
            None => return Some(format!("{pointer}: missing")),
        }
    }
    None
}

pub fn verify(path: Option<&Path>) -> CmdResult {
    let text = match path {
        Some(p) => fs::read_to_string(p).map_err(|e| (INPUT_ERROR, format!("cannot read {}: {e}", p.display())))?,
        None => BUNDLED.to_string(),
    };
    let corpus: Corpus = serde_json::from_str(&text).map_err(|e| (INPUT_ERROR, format!("bad corpus: {e}")))?;
    let mut quivers = BTreeMap::new();
    for (name, source) in &corpus.quivers {
        let q: Quiver = source
            .parse()
            .map_err(|e| (INPUT_ERROR, format!("quiver `{name}`: {e}")))?;
        quivers.insert(name.clone(), q);
    }
    let mut r = Report::new("verify-paper");
    let mut rows = Vec::new();
    let mut failed = Vec::new();
    for case in &corpus.cases {
        log::info!("running {}", case.name);
        let problem = match run_case(&quivers, case) {
            Ok(out) => mismatch(case, &out),
            Err((code, _)) if Some(code) == case.exit_code => None,
            Err((code, msg)) => Some(format!("exit code {code}: {msg}")),
        };
        match &problem {
            None => r.line(format!("PASS  {}", case.name)),
            Some(p) => r.line(format!("FAIL  {}: {p}", case.name)),
        };
        if problem.is_some() {
            failed.push(case.name.clone());
        }
        rows.push(json!({"name": case.name, "pass": problem.is_none(), "detail": problem}));
    }
    r.line(format!("{}/{} cases passed", corpus.cases.len() - failed.len(), corpus.cases.len()));
    r.field("cases", Value::Array(rows)).field("failed", json!(failed));
    Ok(r.finish(if failed.is_empty() { OK } else { NEGATIVE }))
}
