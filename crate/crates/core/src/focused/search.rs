use std::collections::HashSet;

use super::{alpha_eq, ProofTerm, ProverError, Sequent, Structure, Succedent};
use crate::types::{polarity, LambekType, PolarityAssignment};

/// Every focused derivation of `seq`, in search order, up to alpha-equivalence.
///
/// Invertible rules are applied eagerly (the leftmost `⊗L` first, then
/// `/R` or `\R`); focusing choices are tried with right focus before left
/// focus and left foci from left to right.
pub fn prove_all(seq: &Sequent, pa: &PolarityAssignment, limit: usize) -> Result<Vec<ProofTerm>, ProverError> {
    validate(seq, pa)?;
    let (vars, covars) = first_fresh(seq);
    let mut search = Search { pa, limit, vars, covars, failed: HashSet::new() };
    let found = search.prove(seq)?;
    let mut out: Vec<ProofTerm> = Vec::new();
    for p in found {
        if !out.iter().any(|q| alpha_eq(q, &p)) {
            out.push(p);
        }
    }
    Ok(out)
}

pub(crate) fn validate(seq: &Sequent, pa: &PolarityAssignment) -> Result<(), ProverError> {
    if seq.focus_count() > 1 {
        return Err(ProverError::IllFormed(format!("more than one focus in {seq}")));
    }
    let names = seq.names();
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(ProverError::IllFormed(format!("name `{n}` occurs twice in {seq}")));
        }
    }
    let mut types: Vec<&LambekType> = seq.ant.leaves().into_iter().map(|(_, _, t)| t).collect();
    if let Some((_, t)) = seq.ant.focus_path() {
        types.push(t);
    }
    types.push(seq.succ.ty());
    for t in types {
        for a in t.atoms() {
            if !pa.contains(a) {
                return Err(ProverError::UnknownAtom(a.to_string()));
            }
        }
    }
    Ok(())
}

/// Next free indices for `x<k>` and `α<k>` names.
fn first_fresh(seq: &Sequent) -> (usize, usize) {
    let next = |prefix: &str| {
        seq.names()
            .iter()
            .filter_map(|n| n.strip_prefix(prefix).and_then(|k| k.parse::<usize>().ok()))
            .map(|k| k + 1)
            .max()
            .unwrap_or(0)
    };
    (next("x"), next("α"))
}

struct Search<'a> {
    pa: &'a PolarityAssignment,
    limit: usize,
    vars: usize,
    covars: usize,
    failed: HashSet<String>,
}

impl Search<'_> {
    fn var(&mut self) -> String {
        self.vars += 1;
        format!("x{}", self.vars - 1)
    }

    fn covar(&mut self) -> String {
        self.covars += 1;
        format!("α{}", self.covars - 1)
    }

    fn positive(&self, t: &LambekType) -> bool {
        polarity(self.pa, t).expect("atoms validated").is_positive()
    }

    fn capped(&self, v: Vec<ProofTerm>) -> Result<Vec<ProofTerm>, ProverError> {
        if v.len() > self.limit {
            Err(ProverError::LimitExceeded { limit: self.limit })
        } else {
            Ok(v)
        }
    }

    fn prove(&mut self, seq: &Sequent) -> Result<Vec<ProofTerm>, ProverError> {
        let key = seq.shape();
        if self.failed.contains(&key) {
            return Ok(Vec::new());
        }
        let found = self.expand(seq)?;
        if found.is_empty() {
            self.failed.insert(key);
        }
        self.capped(found)
    }

    fn unary<F>(&mut self, premise: Sequent, wrap: F) -> Result<Vec<ProofTerm>, ProverError>
    where
        F: Fn(ProofTerm) -> ProofTerm,
    {
        Ok(self.prove(&premise)?.into_iter().map(wrap).collect())
    }

    fn binary<F>(&mut self, first: Sequent, second: Sequent, wrap: F) -> Result<Vec<ProofTerm>, ProverError>
    where
        F: Fn(ProofTerm, ProofTerm) -> ProofTerm,
    {
        let ms = self.prove(&first)?;
        if ms.is_empty() {
            return Ok(Vec::new());
        }
        let ns = self.prove(&second)?;
        if ms.len() * ns.len() > self.limit {
            return Err(ProverError::LimitExceeded { limit: self.limit });
        }
        let mut out = Vec::with_capacity(ms.len() * ns.len());
        for m in &ms {
            for n in &ns {
                out.push(wrap(m.clone(), n.clone()));
            }
        }
        Ok(out)
    }

    fn expand(&mut self, seq: &Sequent) -> Result<Vec<ProofTerm>, ProverError> {
        let focus = seq.ant.focus_path().map(|(p, t)| (p, t.clone()));
        if focus.is_none() {
            let tensor_leaf = seq.ant.leaves().into_iter().find_map(|(path, z, t)| match t {
                LambekType::Tensor(a, b) => Some((path, z.to_string(), (**a).clone(), (**b).clone())),
                _ => None,
            });
            if let Some((path, z, a, b)) = tensor_leaf {
                let (x, y) = (self.var(), self.var());
                let split = Structure::bullet(Structure::leaf(x.clone(), a), Structure::leaf(y.clone(), b));
                let premise = Sequent::new(seq.ant.replace(&path, split).expect("leaf path"), seq.succ.clone());
                return self.unary(premise, |m| ProofTerm::TensorL {
                    m: Box::new(m),
                    var1: x.clone(),
                    var2: y.clone(),
                    var_z: z.clone(),
                });
            }
        }
        match (focus, &seq.succ) {
            (Some(_), Succedent::Focus(_)) => Err(ProverError::IllFormed(format!("two foci in {seq}"))),
            (Some((path, a)), Succedent::CoVar(..)) => self.left_focus(seq, path, a),
            (None, Succedent::Focus(a)) => self.right_focus(seq, a.clone()),
            (None, Succedent::CoVar(beta, c)) => self.neutral(seq, beta.clone(), c.clone()),
        }
    }

    fn left_focus(&mut self, seq: &Sequent, path: Vec<bool>, a: LambekType) -> Result<Vec<ProofTerm>, ProverError> {
        if self.positive(&a) {
            let x = self.var();
            let ant = seq.ant.replace(&path, Structure::leaf(x.clone(), a.clone())).expect("focus path");
            return self.unary(Sequent::new(ant, seq.succ.clone()), |sub| ProofTerm::FocL {
                sub: Box::new(sub),
                var: x.clone(),
                ty: a.clone(),
            });
        }
        match &a {
            LambekType::Atom(_) => match (&seq.ant, &seq.succ) {
                (Structure::Focus(t), Succedent::CoVar(alpha, u)) if *t == a && *u == a => {
                    Ok(vec![ProofTerm::CoAx { ty: a.clone(), covar: alpha.clone() }])
                }
                _ => Ok(Vec::new()),
            },
            LambekType::Over(res, arg) => {
                let Some((false, parent)) = path.split_last().map(|(l, p)| (*l, p)) else {
                    return Ok(Vec::new());
                };
                let Some(Structure::Bullet(_, y)) = seq.ant.at(parent) else { unreachable!("parent of a focus") };
                let main = seq.ant.replace(parent, Structure::Focus((**res).clone())).expect("parent path");
                let first = Sequent::new(main, seq.succ.clone());
                let second = Sequent::new((**y).clone(), Succedent::Focus((**arg).clone()));
                self.binary(first, second, |m, n| ProofTerm::OverL { m: Box::new(m), n: Box::new(n) })
            }
            LambekType::Under(arg, res) => {
                let Some((true, parent)) = path.split_last().map(|(l, p)| (*l, p)) else {
                    return Ok(Vec::new());
                };
                let Some(Structure::Bullet(y, _)) = seq.ant.at(parent) else { unreachable!("parent of a focus") };
                let main = seq.ant.replace(parent, Structure::Focus((**res).clone())).expect("parent path");
                let first = Sequent::new((**y).clone(), Succedent::Focus((**arg).clone()));
                let second = Sequent::new(main, seq.succ.clone());
                self.binary(first, second, |m, n| ProofTerm::UnderL { m: Box::new(m), n: Box::new(n) })
            }
            LambekType::Tensor(..) => unreachable!("products are positive"),
        }
    }

    fn right_focus(&mut self, seq: &Sequent, a: LambekType) -> Result<Vec<ProofTerm>, ProverError> {
        if !self.positive(&a) {
            let alpha = self.covar();
            let premise = Sequent::new(seq.ant.clone(), Succedent::CoVar(alpha.clone(), a));
            return self.unary(premise, |sub| ProofTerm::FocR { sub: Box::new(sub), covar: alpha.clone() });
        }
        match (&a, &seq.ant) {
            (LambekType::Atom(_), Structure::Leaf(x, t)) if *t == a => {
                Ok(vec![ProofTerm::Ax { ty: a.clone(), var: x.clone() }])
            }
            (LambekType::Tensor(l, r), Structure::Bullet(x, y)) => {
                let first = Sequent::new((**x).clone(), Succedent::Focus((**l).clone()));
                let second = Sequent::new((**y).clone(), Succedent::Focus((**r).clone()));
                self.binary(first, second, |m, n| ProofTerm::TensorR { m: Box::new(m), n: Box::new(n) })
            }
            _ => Ok(Vec::new()),
        }
    }

    fn neutral(&mut self, seq: &Sequent, beta: String, c: LambekType) -> Result<Vec<ProofTerm>, ProverError> {
        match &c {
            LambekType::Over(res, arg) => {
                let (x, alpha) = (self.var(), self.covar());
                let ant = Structure::bullet(seq.ant.clone(), Structure::leaf(x.clone(), (**arg).clone()));
                let premise = Sequent::new(ant, Succedent::CoVar(alpha.clone(), (**res).clone()));
                return self.unary(premise, |m| ProofTerm::OverR {
                    m: Box::new(m),
                    var: x.clone(),
                    covar_in: alpha.clone(),
                    covar_out: beta.clone(),
                });
            }
            LambekType::Under(arg, res) => {
                let (x, alpha) = (self.var(), self.covar());
                let ant = Structure::bullet(Structure::leaf(x.clone(), (**arg).clone()), seq.ant.clone());
                let premise = Sequent::new(ant, Succedent::CoVar(alpha.clone(), (**res).clone()));
                return self.unary(premise, |m| ProofTerm::UnderR {
                    m: Box::new(m),
                    var: x.clone(),
                    covar_in: alpha.clone(),
                    covar_out: beta.clone(),
                });
            }
            _ => {}
        }
        let mut out = Vec::new();
        if self.positive(&c) {
            let premise = Sequent::new(seq.ant.clone(), Succedent::Focus(c.clone()));
            out.extend(self.unary(premise, |sub| ProofTerm::DefocR { sub: Box::new(sub), covar: beta.clone() })?);
        }
        let candidates: Vec<(Vec<bool>, String, LambekType)> = seq
            .ant
            .leaves()
            .into_iter()
            .filter(|(_, _, t)| !self.positive(t))
            .map(|(p, x, t)| (p, x.to_string(), t.clone()))
            .collect();
        for (path, x, t) in candidates {
            let ant = seq.ant.replace(&path, Structure::Focus(t)).expect("leaf path");
            let premise = Sequent::new(ant, seq.succ.clone());
            out.extend(self.unary(premise, |sub| ProofTerm::DefocL { sub: Box::new(sub), var: x.clone() })?);
            if out.len() > self.limit {
                return Err(ProverError::LimitExceeded { limit: self.limit });
            }
        }
        Ok(out)
    }
}
