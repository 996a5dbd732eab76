//! Sentence in, readings out: sequents, focused proofs, compiled terms,
//! evaluated scalars and, for recognised shapes, the oracle's verdict.

use serde::Serialize;

use crate::cps::{
    build_sem_lexicon, compile, evaluate_reading, insert_lexical, standard_base_sets, BaseSets, EvalContext, SemError,
    SemExpr, SemValue,
};
use crate::focused::{
    prove_all, render, sentence_sequents, BracketError, Bracketing, CheckError, ProofTerm, ProverError, SentenceError,
    SentenceSequent,
};
use crate::oracle::{truth_single, truth_two, Model, OracleError, Quant};
use crate::types::{print_type, Lexicon, LexiconError};

/// The bundled lexicon covering the two-quantifier and single-quantifier examples.
pub const SCOPE_LEXICON: &str = include_str!("../data/scope.lex");

pub fn scope_lexicon() -> Lexicon {
    Lexicon::parse(SCOPE_LEXICON).expect("bundled lexicon parses")
}

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error(transparent)]
    Lexicon(#[from] LexiconError),
    #[error(transparent)]
    Sentence(#[from] SentenceError),
    #[error(transparent)]
    Brackets(#[from] BracketError),
    #[error(transparent)]
    Prover(#[from] ProverError),
    #[error("internal: prover output failed to re-check: {0}")]
    Check(#[from] CheckError),
    #[error(transparent)]
    Sem(#[from] SemError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// One derivation of one lexical choice.
#[derive(Debug, Clone)]
pub struct Reading {
    pub root: SentenceSequent,
    pub proof: ProofTerm,
    pub rendered: String,
    pub term: SemExpr,
}

impl Reading {
    /// `(variable, semantics key)` for each word.
    pub fn bindings(&self) -> Vec<(String, String)> {
        self.root.entries.iter().enumerate().map(|(i, e)| (format!("x{i}"), e.sem_key.clone())).collect()
    }

    pub fn keys(&self) -> Vec<&str> {
        self.root.entries.iter().map(|e| e.sem_key.as_str()).collect()
    }

    /// The term after lexical insertion.
    pub fn inserted(&self) -> SemExpr {
        insert_lexical(&self.term, &self.bindings())
    }
}

/// Every reading of `words`, in lexical-choice order then prover order.
pub fn readings<S: AsRef<str>>(
    lex: &Lexicon,
    words: &[S],
    brackets: Option<&Bracketing>,
    limit: usize,
) -> Result<Vec<Reading>, PipelineError> {
    readings_with(lex, &standard_base_sets(), words, brackets, limit)
}

pub fn readings_with<S: AsRef<str>>(
    lex: &Lexicon,
    base: &BaseSets,
    words: &[S],
    brackets: Option<&Bracketing>,
    limit: usize,
) -> Result<Vec<Reading>, PipelineError> {
    let default = Bracketing::default_for(words.len()).ok_or(SentenceError::Empty)?;
    let brackets = brackets.unwrap_or(&default);
    let mut out = Vec::new();
    for root in sentence_sequents(words, lex, brackets, limit)? {
        for proof in prove_all(&root.sequent, &lex.atoms, limit)? {
            let rendered = render(&proof, &root.sequent, &lex.atoms)?;
            let term = compile(&proof, &lex.atoms, base)?;
            out.push(Reading { root: root.clone(), proof, rendered, term });
        }
        if out.len() > limit {
            return Err(ProverError::LimitExceeded { limit }.into());
        }
    }
    Ok(out)
}

/// A sentence shape the oracle can judge, read off the semantics keys.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Frame {
    /// `Q noun tv Q noun`
    Two { q_subj: Quant, subj: String, rel: String, q_obj: Quant, obj: String },
    /// `Q noun iv`
    Single { q: Quant, noun: String, pred: String },
}

pub fn recognize_frame(keys: &[&str]) -> Option<Frame> {
    let quant = |k: &str| k.parse::<Quant>().ok();
    let field = |k: &str, prefix: &str| k.strip_prefix(prefix).map(str::to_string);
    match keys {
        [q1, n1, v, q2, n2] => Some(Frame::Two {
            q_subj: quant(q1)?,
            subj: field(n1, "noun:")?,
            rel: field(v, "tv:")?,
            q_obj: quant(q2)?,
            obj: field(n2, "noun:")?,
        }),
        [q, n, v] => Some(Frame::Single { q: quant(q)?, noun: field(n, "noun:")?, pred: field(v, "iv:")? }),
        _ => None,
    }
}

/// The variable applied at the top of a term, below any continuation binder.
pub fn head_var(e: &SemExpr) -> Option<&str> {
    match e {
        SemExpr::Lambda(_, body) => head_var(body),
        SemExpr::Apply(f, _) => match &**f {
            SemExpr::Var(x) => Some(x),
            _ => None,
        },
        _ => None,
    }
}

/// The oracle verdict for a reading, when its sentence fits a frame.
/// Scope order is taken from which determiner heads the compiled term.
pub fn oracle_verdict(reading: &Reading, model: &Model) -> Result<Option<bool>, OracleError> {
    match recognize_frame(&reading.keys()) {
        Some(Frame::Two { q_subj, subj, rel, q_obj, obj }) => {
            let subject_wide = match head_var(&reading.term) {
                Some("x0") => true,
                Some("x3") => false,
                _ => return Ok(None),
            };
            truth_two(model, q_subj, &subj, &rel, q_obj, &obj, subject_wide).map(Some)
        }
        Some(Frame::Single { q, noun, pred }) => truth_single(model, q, &noun, &pred).map(Some),
        None => Ok(None),
    }
}

pub fn evaluate_in(reading: &Reading, ctx: &EvalContext) -> Result<SemValue, crate::cps::EvalError> {
    evaluate_reading(&reading.inserted(), ctx)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofReport {
    pub index: usize,
    pub types: Vec<String>,
    pub derivation: String,
    pub term: String,
    pub value: Option<String>,
    pub nonzero: Option<bool>,
    pub error: Option<String>,
    pub oracle: Option<bool>,
    pub agree: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub tokens: Vec<String>,
    pub proofs: Vec<ProofReport>,
}

/// Evaluates every reading on `model`; binding and evaluation failures
/// are recorded per proof.
pub fn run_eval<S: AsRef<str>>(
    lex: &Lexicon,
    model: &Model,
    words: &[S],
    brackets: Option<&Bracketing>,
    limit: usize,
    with_oracle: bool,
) -> Result<RunReport, PipelineError> {
    let ctx = EvalContext::new(build_sem_lexicon(model)?);
    let mut proofs = Vec::new();
    for (index, r) in readings(lex, words, brackets, limit)?.into_iter().enumerate() {
        let (value, nonzero, error) = match evaluate_in(&r, &ctx) {
            Ok(v) => {
                let nz = v.is_nonzero().ok();
                let shown = v.as_scalar().map_or_else(|| v.to_string(), |c| c.to_string());
                (Some(shown), nz, None)
            }
            Err(e) => (None, None, Some(e.to_string())),
        };
        let (oracle, error) = match with_oracle.then(|| oracle_verdict(&r, model)) {
            Some(Ok(o)) => (o, error),
            Some(Err(e)) => (None, error.or_else(|| Some(format!("oracle: {e}")))),
            None => (None, error),
        };
        let agree = match (oracle, nonzero) {
            (Some(o), Some(nz)) => Some(o == nz),
            _ => None,
        };
        proofs.push(ProofReport {
            index,
            types: r.root.entries.iter().map(|e| print_type(&e.ty)).collect(),
            derivation: r.rendered.clone(),
            term: r.term.to_string(),
            value,
            nonzero,
            error,
            oracle,
            agree,
        });
    }
    Ok(RunReport { tokens: words.iter().map(|w| w.as_ref().to_string()).collect(), proofs })
}
