//! Brute-force set-theoretic truth conditions over finite models.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::scalar::Scalar;

/// Upper bound on the number of models a single enumeration may yield.
pub const MODEL_CAP: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("model line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown individual `{0}`")]
    UnknownIndividual(String),
    #[error("duplicate individual `{0}`")]
    DuplicateIndividual(String),
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("unknown relation `{0}`")]
    UnknownRelation(String),
    #[error("negative weight {0}")]
    NegativeWeight(String),
    #[error("empty universe")]
    EmptyUniverse,
    #[error("{count} models exceed the enumeration cap of {cap}")]
    Cap { count: String, cap: u64 },
    #[error("unknown quantifier `{0}`")]
    UnknownQuantifier(String),
}

/// A finite model: individuals, unary predicates, weighted binary relations.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Model {
    universe: Vec<String>,
    predicates: BTreeMap<String, BTreeSet<usize>>,
    relations: BTreeMap<String, BTreeMap<(usize, usize), Scalar>>,
}

impl Model {
    pub fn new<I, S>(universe: I) -> Result<Self, OracleError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut m = Model::default();
        for l in universe {
            let l = l.into();
            if m.universe.contains(&l) {
                return Err(OracleError::DuplicateIndividual(l));
            }
            m.universe.push(l);
        }
        if m.universe.is_empty() {
            return Err(OracleError::EmptyUniverse);
        }
        Ok(m)
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn index_of(&self, label: &str) -> Result<usize, OracleError> {
        self.universe.iter().position(|l| l == label).ok_or_else(|| OracleError::UnknownIndividual(label.to_string()))
    }

    /// Declares (or extends) a predicate.
    pub fn add_pred<S: AsRef<str>>(&mut self, name: &str, members: &[S]) -> Result<(), OracleError> {
        let idx = members.iter().map(|m| self.index_of(m.as_ref())).collect::<Result<Vec<_>, _>>()?;
        self.predicates.entry(name.to_string()).or_default().extend(idx);
        Ok(())
    }

    /// Declares a relation with no pairs, so that it counts as known.
    pub fn declare_rel(&mut self, name: &str) {
        self.relations.entry(name.to_string()).or_default();
    }

    /// Sets one weight; zero weights are not stored.
    pub fn set_rel(&mut self, name: &str, a: &str, b: &str, w: Scalar) -> Result<(), OracleError> {
        if w.is_negative() {
            return Err(OracleError::NegativeWeight(w.to_string()));
        }
        let key = (self.index_of(a)?, self.index_of(b)?);
        let rel = self.relations.entry(name.to_string()).or_default();
        if w.is_zero() {
            rel.remove(&key);
        } else {
            rel.insert(key, w);
        }
        Ok(())
    }

    pub fn pred(&self, name: &str) -> Result<&BTreeSet<usize>, OracleError> {
        self.predicates.get(name).ok_or_else(|| OracleError::UnknownPredicate(name.to_string()))
    }

    /// Member labels of a predicate, in universe order.
    pub fn pred_labels(&self, name: &str) -> Result<Vec<&str>, OracleError> {
        Ok(self.pred(name)?.iter().map(|&i| self.universe[i].as_str()).collect())
    }

    pub fn predicate_names(&self) -> impl Iterator<Item = &str> {
        self.predicates.keys().map(String::as_str)
    }

    pub fn relation_names(&self) -> impl Iterator<Item = &str> {
        self.relations.keys().map(String::as_str)
    }

    pub fn has_rel(&self, name: &str) -> bool {
        self.relations.contains_key(name)
    }

    /// `rel(a, b)` by universe index; absent pairs weigh 0.
    pub fn weight(&self, name: &str, a: usize, b: usize) -> Result<Scalar, OracleError> {
        let rel = self.relations.get(name).ok_or_else(|| OracleError::UnknownRelation(name.to_string()))?;
        Ok(rel.get(&(a, b)).cloned().unwrap_or_else(Scalar::zero))
    }

    /// Parses `universe: a b c`, `pred student: a b` and `rel likes: a c 1.0`.
    pub fn parse(src: &str) -> Result<Self, OracleError> {
        let mut model: Option<Model> = None;
        for (i, raw) in src.lines().enumerate() {
            let line = i + 1;
            let text = raw.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            let perr = |msg: String| OracleError::Parse { line, msg };
            let (head, rest) = text.split_once(':').ok_or_else(|| perr("expected `:`".into()))?;
            let head: Vec<&str> = head.split_whitespace().collect();
            let items: Vec<&str> = rest.split_whitespace().collect();
            match head.as_slice() {
                ["universe"] => {
                    if model.is_some() {
                        return Err(perr("universe declared twice".into()));
                    }
                    model = Some(Model::new(items.iter().copied()).map_err(|e| perr(e.to_string()))?);
                }
                ["pred", name] => {
                    let m = model.as_mut().ok_or_else(|| perr("`universe:` must come first".into()))?;
                    m.add_pred(name, &items).map_err(|e| perr(e.to_string()))?;
                }
                ["rel", name] => {
                    let m = model.as_mut().ok_or_else(|| perr("`universe:` must come first".into()))?;
                    match items.as_slice() {
                        [] => m.declare_rel(name),
                        [a, b] | [a, b, _] => {
                            let w = match items.get(2) {
                                Some(w) => Scalar::from_str(w).map_err(|e| perr(e.to_string()))?,
                                None => Scalar::one(),
                            };
                            m.declare_rel(name);
                            m.set_rel(name, a, b, w).map_err(|e| perr(e.to_string()))?;
                        }
                        _ => return Err(perr("expected `rel NAME: A B [WEIGHT]`".into())),
                    }
                }
                _ => return Err(perr(format!("unknown declaration `{}`", head.join(" ")))),
            }
        }
        model.ok_or(OracleError::Parse { line: 0, msg: "missing `universe:` line".into() })
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "universe: {}", self.universe.join(" "))?;
        for (name, members) in &self.predicates {
            let labels: Vec<&str> = members.iter().map(|&i| self.universe[i].as_str()).collect();
            writeln!(f, "pred {name}: {}", labels.join(" "))?;
        }
        for (name, pairs) in &self.relations {
            if pairs.is_empty() {
                writeln!(f, "rel {name}:")?;
            }
            for ((a, b), w) in pairs {
                writeln!(f, "rel {name}: {} {} {w}", self.universe[*a], self.universe[*b])?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quant {
    All,
    Some,
}

impl Quant {
    fn holds(
        self,
        set: &BTreeSet<usize>,
        mut body: impl FnMut(usize) -> Result<bool, OracleError>,
    ) -> Result<bool, OracleError> {
        for &x in set {
            let b = body(x)?;
            match self {
                Quant::All if !b => return Ok(false),
                Quant::Some if b => return Ok(true),
                _ => {}
            }
        }
        Ok(self == Quant::All)
    }
}

impl FromStr for Quant {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" | "every" => Ok(Quant::All),
            "some" => Ok(Quant::Some),
            _ => Err(OracleError::UnknownQuantifier(s.to_string())),
        }
    }
}

impl fmt::Display for Quant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quant::All => "all",
            Quant::Some => "some",
        })
    }
}

/// `all`: noun ⊆ pred. `some`: noun ∩ pred ≠ ∅.
pub fn truth_single(model: &Model, q: Quant, noun: &str, pred: &str) -> Result<bool, OracleError> {
    let (noun, pred) = (model.pred(noun)?, model.pred(pred)?);
    q.holds(noun, |a| Ok(pred.contains(&a)))
}

/// `q_subj a ∈ subj, q_obj b ∈ obj: rel(a, b) ≠ 0`, with the subject
/// quantifier outermost when `subject_wide`.
pub fn truth_two(
    model: &Model,
    q_subj: Quant,
    subj: &str,
    rel: &str,
    q_obj: Quant,
    obj: &str,
    subject_wide: bool,
) -> Result<bool, OracleError> {
    let (s, o) = (model.pred(subj)?, model.pred(obj)?);
    model.weight(rel, 0, 0)?;
    let holds = |a: usize, b: usize| Ok(!model.weight(rel, a, b)?.is_zero());
    if subject_wide {
        q_subj.holds(s, |a| q_obj.holds(o, |b| holds(a, b)))
    } else {
        q_obj.holds(o, |b| q_subj.holds(s, |a| holds(a, b)))
    }
}

/// Every subj-member bears `rel` to some obj-member.
pub fn truth_direct(model: &Model, subj: &str, rel: &str, obj: &str) -> Result<bool, OracleError> {
    truth_two(model, Quant::All, subj, rel, Quant::Some, obj, true)
}

/// Some obj-member is borne `rel` by every subj-member.
pub fn truth_inverse(model: &Model, subj: &str, rel: &str, obj: &str) -> Result<bool, OracleError> {
    truth_two(model, Quant::All, subj, rel, Quant::Some, obj, false)
}

/// Individual labels used by enumerated models: `a`, `b`, … then `u26`, ….
pub fn default_label(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("u{i}")
    }
}

/// Every model over `{a, b, …}` of exactly `size` individuals, with each
/// predicate ranging over all subsets and each relation over all 0/1
/// assignments.
pub fn models_of_size(size: usize, preds: &[&str], rels: &[&str]) -> Result<ModelIter, OracleError> {
    if size == 0 {
        return Err(OracleError::EmptyUniverse);
    }
    let bits = preds.len() * size + rels.len() * size * size;
    if bits >= 63 || (1u64 << bits) > MODEL_CAP {
        return Err(OracleError::Cap { count: format!("2^{bits}"), cap: MODEL_CAP });
    }
    Ok(ModelIter {
        size,
        preds: preds.iter().map(|s| s.to_string()).collect(),
        rels: rels.iter().map(|s| s.to_string()).collect(),
        next: 0,
        end: 1u64 << bits,
    })
}

/// All models with 1 to `max_universe` individuals, smallest first.
pub fn enumerate_models(
    max_universe: usize,
    preds: &[&str],
    rels: &[&str],
) -> Result<impl Iterator<Item = Model>, OracleError> {
    let iters = (1..=max_universe).map(|n| models_of_size(n, preds, rels)).collect::<Result<Vec<_>, _>>()?;
    let total: u64 = iters.iter().map(|it| it.end).sum();
    if total > MODEL_CAP {
        return Err(OracleError::Cap { count: total.to_string(), cap: MODEL_CAP });
    }
    Ok(iters.into_iter().flatten())
}

/// Iterator over the models of one universe size, in bitmask order.
#[derive(Debug, Clone)]
pub struct ModelIter {
    size: usize,
    preds: Vec<String>,
    rels: Vec<String>,
    next: u64,
    end: u64,
}

impl Iterator for ModelIter {
    type Item = Model;

    fn next(&mut self) -> Option<Model> {
        if self.next >= self.end {
            return None;
        }
        let mut code = self.next;
        self.next += 1;
        let n = self.size;
        let labels: Vec<String> = (0..n).map(default_label).collect();
        let mut m = Model::new(labels.iter().cloned()).expect("distinct labels");
        let mut take = || {
            let b = code & 1 == 1;
            code >>= 1;
            b
        };
        for p in &self.preds {
            let members: Vec<&str> = labels.iter().filter(|_| take()).map(String::as_str).collect();
            m.add_pred(p, &members).expect("labels in universe");
        }
        for r in &self.rels {
            m.declare_rel(r);
            for a in &labels {
                for b in &labels {
                    if take() {
                        m.set_rel(r, a, b, Scalar::one()).expect("labels in universe");
                    }
                }
            }
        }
        Some(m)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for ModelIter {}
