use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use sq_core::chains::{
    explore_word, recover_word, sub_enumerate, t_chain, t_w, u_chain, ChainError, ChainStatus, Classification,
    ExplorerReport,
};
use sq_core::coxeter::{is_admissible_coxeter, is_reduced, layer_roots, sorting_word};
use sq_core::rep::{is_isomorphic, parse_representations, tilting_defect, write_representation};
use sq_core::{Quiver, Representation, RootVector, Word};

use crate::outcome::{code_for, Outcome, Report, INPUT_ERROR, NEGATIVE, OK};

/// A failed command: exit code and message.
pub type Failure = (i32, String);
pub type CmdResult = Result<Outcome, Failure>;

fn input(e: impl std::fmt::Display) -> Failure {
    (INPUT_ERROR, e.to_string())
}

fn chain_err(e: ChainError) -> Failure {
    (code_for(&e), e.to_string())
}

pub fn load_quiver(path: &Path) -> Result<Quiver, Failure> {
    let text = fs::read_to_string(path).map_err(|e| input(format!("cannot read {}: {e}", path.display())))?;
    text.parse::<Quiver>()
        .map_err(|e| input(format!("{}: {e}", path.display())))
}

pub fn parse_word(s: &str, q: &Quiver) -> Result<Word, Failure> {
    let w: Word = s.parse().map_err(|e| input(format!("bad word `{s}`: {e}")))?;
    w.validate(q).map_err(input)?;
    Ok(w)
}

/// The given Coxeter element, or the admissible order of `q`.
pub fn coxeter_or_default(q: &Quiver, c: Option<&str>) -> Result<Word, Failure> {
    let c = match c {
        Some(s) => parse_word(s, q)?,
        None => Word::new(q.topological_order().expect("acyclic")),
    };
    if !is_admissible_coxeter(q, &c) {
        return Err(input(format!("`{c}` is not an admissible Coxeter element")));
    }
    Ok(c)
}

fn vector(v: &RootVector) -> Value {
    json!(v.coords())
}

fn dims_json(ms: &[Representation]) -> Value {
    Value::Array(ms.iter().map(|m| json!(m.dims())).collect())
}

fn dims_text(ms: &[Representation]) -> String {
    ms.iter()
        .map(|m| m.dim_vector().to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn check(q: &Quiver, w: &Word, c: &Word) -> CmdResult {
    let mut r = Report::new("check");
    let reduced = is_reduced(q, w);
    r.line(format!("word: {w}")).line(format!("coxeter element: {c}"));
    r.field("word", json!(w.letters())).field("coxeter", json!(c.letters()));
    r.line(format!("reduced: {}", yes(reduced))).field("reduced", reduced);
    if !reduced {
        r.field("sortable", Value::Null).field("blocks", Value::Null);
        return Ok(r.finish(NEGATIVE));
    }
    let d = sorting_word(q, c, w).map_err(input)?;
    let sortable = d.is_nested();
    r.line(format!("c-sortable: {}", yes(sortable)))
        .line(format!("c-sorting word blocks: {}", d.compact()))
        .field("sortable", sortable)
        .field("blocks", json!(d.blocks));
    Ok(r.finish(if sortable { OK } else { NEGATIVE }))
}

pub fn layers(q: &Quiver, w: &Word) -> CmdResult {
    let roots = match layer_roots(q, w) {
        Ok(r) => r,
        Err(e) => return Err((NEGATIVE, format!("{e}: `{w}`"))),
    };
    let mut r = Report::new("layers");
    r.field("word", json!(w.letters()))
        .field("dim_vectors", Value::Array(roots.iter().map(vector).collect()));
    for (j, v) in roots.iter().enumerate() {
        r.line(format!("L{}: {v}", j + 1));
    }
    Ok(r.finish(OK))
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Engine {
    U,
    T,
    Both,
}

pub fn chain(q: &Quiver, c: &Word, w: &Word, engine: Engine) -> CmdResult {
    let u = match engine {
        Engine::U | Engine::Both => Some(u_chain(q, c, w).map_err(chain_err)?),
        Engine::T => None,
    };
    let t = match engine {
        Engine::T | Engine::Both => Some(t_chain(q, c, w).map_err(chain_err)?),
        Engine::U => None,
    };
    let main = t.as_ref().or(u.as_ref()).expect("one engine ran");
    let mut r = Report::new("chain");
    r.line(format!("word: {w}   coxeter element: {c}"))
        .line(format!("status: {}", main.status.as_str()))
        .field("word", json!(w.letters()))
        .field("coxeter", json!(c.letters()))
        .field("status", main.status.as_str());
    let mut steps = Vec::new();
    for (j, (&letter, dims)) in w.letters().iter().zip(&main.dim_vectors).enumerate() {
        let mono = t.as_ref().and_then(|t| t.mono_flags[j]);
        let flag = match mono {
            Some(b) => format!("  f mono: {}", yes(b)),
            None => String::new(),
        };
        r.line(format!("{:>3}  s{letter}  {dims}{flag}", j + 1));
        steps.push(json!({"index": j + 1, "vertex": letter, "dims": vector(dims), "mono": mono}));
    }
    r.field("steps", Value::Array(steps));
    let zero: Vec<usize> = (0..main.len()).filter(|&j| main.modules[j].is_zero()).map(|j| j + 1).collect();
    for j in &zero {
        r.line(format!("warning: member {j} is zero (the word is not reduced at its last letter)"));
    }
    r.field("zero_members", json!(zero));
    let mut code = if main.status == ChainStatus::Failed { NEGATIVE } else { OK };
    if let (Some(u), Some(t)) = (&u, &t) {
        let mut same = u.dim_vectors == t.dim_vectors;
        for (a, b) in u.modules.iter().zip(&t.modules) {
            if !same {
                break;
            }
            same = is_isomorphic(a, b).map_err(input)?;
        }
        r.line(format!("U == T: {}", yes(same))).field("u_equals_t", same);
        if !same {
            code = NEGATIVE;
        }
    } else {
        r.field("u_equals_t", Value::Null);
    }
    Ok(r.finish(code))
}

/// The tilting module of a word: `T_w` for a reduced c-sortable word,
/// otherwise the result of the exchange procedure.
pub fn tilting_of(q: &Quiver, c: &Word, w: &Word) -> Result<(Vec<Representation>, Option<Vec<Representation>>, &'static str), Failure> {
    match t_w(q, c, w) {
        Ok(tw) => {
            let chain = t_chain(q, c, w).map_err(chain_err)?;
            Ok((tw, Some(chain.modules), "chain"))
        }
        Err(ChainError::NotAdmissible(_)) | Err(ChainError::NotReduced) => {
            let rep = explore_word(q, w).map_err(chain_err)?;
            match rep.final_tilting {
                Some(t) => Ok((t, None, "explorer")),
                None => Err((NEGATIVE, format!("`{w}` is neither c-sortable nor a tilting word"))),
            }
        }
        Err(e) => Err(chain_err(e)),
    }
}

fn save(path: Option<&Path>, t: &[Representation]) -> Result<(), Failure> {
    if let Some(p) = path {
        let text: String = t.iter().map(write_representation).collect();
        fs::write(p, text).map_err(|e| input(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(())
}

pub fn subcat(q: &Quiver, c: &Word, w: &Word, bound: Option<usize>, save_to: Option<&Path>) -> CmdResult {
    let (t, chain, source) = tilting_of(q, c, w)?;
    save(save_to, &t)?;
    let bound = bound.unwrap_or_else(|| {
        let chain_max = chain.iter().flatten().map(Representation::total_dim).max().unwrap_or(0);
        chain_max.max(t.iter().map(Representation::total_dim).max().unwrap_or(0))
    });
    let defect = tilting_defect(&t);
    let sub = sub_enumerate(q, &t, bound).map_err(chain_err)?;
    let mut r = Report::new("subcat");
    r.line(format!("T_w ({source}): {}", dims_text(&t)))
        .line(format!("tilting: {}", defect.as_deref().map_or("yes".to_string(), |d| format!("no ({d})"))))
        .line(format!("Sub T_w up to total dimension {bound}: {} modules", sub.modules.len()))
        .line(dims_text(&sub.modules))
        .line(format!("complete: {}", yes(sub.complete)))
        .line(format!("growing family: {}", yes(sub.growth_detected)));
    r.field("source", source)
        .field("tilting_summands", dims_json(&t))
        .field("tilting", defect.is_none())
        .field("bound", bound)
        .field("module_count", sub.modules.len())
        .field("modules", dims_json(&sub.modules))
        .field("complete", sub.complete)
        .field("growth_detected", sub.growth_detected)
        .field("certificate", sub.certificate.as_ref().map(|w| json!(w.letters())).unwrap_or(Value::Null));
    if let Some(cert) = &sub.certificate {
        r.line(format!("certificate word: {cert}"));
    }
    // an incomplete enumeration is reported through its flag, not the exit code
    let mut code = if defect.is_none() { OK } else { NEGATIVE };
    match &chain {
        Some(chain) if sub.complete => {
            let mut equal = chain.len() == sub.modules.len();
            for m in chain {
                if !equal {
                    break;
                }
                equal = sub
                    .modules
                    .iter()
                    .filter(|x| x.dims() == m.dims())
                    .any(|x| is_isomorphic(x, m).unwrap_or(false));
            }
            r.line(format!("Sub T_w equals the chain: {}", yes(equal)))
                .field("equals_chain", equal);
            if !equal {
                code = NEGATIVE;
            }
        }
        _ => {
            r.field("equals_chain", Value::Null);
        }
    }
    Ok(r.finish(code))
}

pub fn recover(q: &Quiver, c: &Word, modules: &Path, bound: Option<usize>) -> CmdResult {
    let text = fs::read_to_string(modules).map_err(|e| input(format!("cannot read {}: {e}", modules.display())))?;
    let t = parse_representations(&q.opposite(), &text).map_err(|e| input(format!("{}: {e}", modules.display())))?;
    recover_modules(q, c, &t, bound)
}

pub fn recover_modules(q: &Quiver, c: &Word, t: &[Representation], bound: Option<usize>) -> CmdResult {
    let bound = bound.unwrap_or_else(|| t.iter().map(Representation::total_dim).max().unwrap_or(0));
    let found = recover_word(q, c, t, bound).map_err(chain_err)?;
    let mut r = Report::new("recover");
    r.field("coxeter", json!(c.letters())).field("bound", bound);
    match found {
        Some(w) => {
            r.line(format!("{w}")).field("word", json!(w.letters()));
            Ok(r.finish(OK))
        }
        None => {
            r.line("no c-sortable word has this tilting module").field("word", Value::Null);
            Ok(r.finish(NEGATIVE))
        }
    }
}

fn explorer_json(rep: &ExplorerReport) -> Vec<Value> {
    rep.steps
        .iter()
        .map(|s| {
            json!({
                "position": s.position,
                "vertex": s.vertex,
                "side": s.side.as_str(),
                "mono_or_epi": s.mono_or_epi,
                "dims": s.new_summand.dims(),
            })
        })
        .collect()
}

pub fn explore(q: &Quiver, w: &Word, save_to: Option<&Path>) -> CmdResult {
    let rep = explore_word(q, w).map_err(chain_err)?;
    let mut r = Report::new("explore");
    r.line(format!("word: {w}")).field("word", json!(w.letters()));
    for s in &rep.steps {
        let kind = if s.side == sq_core::chains::Side::Left { "cokernel" } else { "kernel" };
        r.line(format!(
            "{:>3}  s{}  {} approximation, {kind} {}",
            s.position,
            s.vertex,
            s.side.as_str(),
            s.new_summand.dim_vector()
        ));
    }
    if let Some(p) = rep.failed_at {
        r.line(format!("no exchange possible at letter {p}"));
    }
    r.field("steps", Value::Array(explorer_json(&rep)))
        .field("failed_at", rep.failed_at.map(Value::from).unwrap_or(Value::Null))
        .field("classification", rep.classification.as_str());
    r.line(format!("classification: {}", rep.classification.as_str()));
    match &rep.final_tilting {
        Some(t) => {
            save(save_to, t)?;
            r.line(format!("T_w: {}", dims_text(t))).field("final_tilting", dims_json(t));
        }
        None => {
            r.field("final_tilting", Value::Null);
        }
    }
    let code = if rep.classification == Classification::NotTilting { NEGATIVE } else { OK };
    Ok(r.finish(code))
}

pub fn count(q: &Quiver, c: &Word) -> CmdResult {
    let b = sq_core::chains::count_bijection(q, c).map_err(|e| match e {
        ChainError::NotDynkin => input("counting needs a quiver of Dynkin type (finitely many indecomposables)"),
        e => chain_err(e),
    })?;
    let mut r = Report::new("count");
    r.line(format!("c-sortable elements: {}", b.sortable_count))
        .line(format!("torsionfree classes: {}", b.torsionfree_count))
        .line(format!("{} {} {}", b.sortable_count, if b.matches { "=" } else { "!=" }, b.torsionfree_count))
        .field("coxeter", json!(c.letters()))
        .field("sortable_count", b.sortable_count)
        .field("torsionfree_count", b.torsionfree_count)
        .field("matches", b.matches);
    Ok(r.finish(if b.matches { OK } else { NEGATIVE }))
}
