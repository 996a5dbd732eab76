use std::collections::{BTreeSet, HashMap};
use std::fmt;

use super::{interpret_type, BaseSets, SemError, SemSpace};
use crate::focused::ProofTerm;
use crate::types::PolarityAssignment;

/// Semantic expressions produced from focused proof terms.
///
/// `Split` binds the two components of a pair: `let (l, r) = e in body`.
/// The three substitution clauses compile to it, so no renaming is ever
/// needed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SemExpr {
    Var(String),
    Prim(String),
    Tensor(Box<SemExpr>, Box<SemExpr>),
    Apply(Box<SemExpr>, Box<SemExpr>),
    Lambda(String, Box<SemExpr>),
    Comprehend { var: String, range: SemSpace, body: Box<SemExpr> },
    Split { scrutinee: Box<SemExpr>, left: String, right: String, body: Box<SemExpr> },
}

impl SemExpr {
    pub fn var(x: impl Into<String>) -> Self {
        SemExpr::Var(x.into())
    }

    pub fn tensor(a: SemExpr, b: SemExpr) -> Self {
        SemExpr::Tensor(Box::new(a), Box::new(b))
    }

    pub fn apply(f: SemExpr, a: SemExpr) -> Self {
        SemExpr::Apply(Box::new(f), Box::new(a))
    }

    pub fn lambda(x: impl Into<String>, body: SemExpr) -> Self {
        SemExpr::Lambda(x.into(), Box::new(body))
    }

    pub fn comprehend(var: impl Into<String>, range: SemSpace, body: SemExpr) -> Self {
        SemExpr::Comprehend { var: var.into(), range, body: Box::new(body) }
    }

    pub fn split(scrutinee: SemExpr, left: impl Into<String>, right: impl Into<String>, body: SemExpr) -> Self {
        SemExpr::Split { scrutinee: Box::new(scrutinee), left: left.into(), right: right.into(), body: Box::new(body) }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free<'a>(&'a self, bound: &mut Vec<&'a str>, out: &mut BTreeSet<String>) {
        match self {
            SemExpr::Var(x) => {
                if !bound.contains(&x.as_str()) {
                    out.insert(x.clone());
                }
            }
            SemExpr::Prim(_) => {}
            SemExpr::Tensor(a, b) | SemExpr::Apply(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            SemExpr::Lambda(x, body) | SemExpr::Comprehend { var: x, body, .. } => {
                bound.push(x);
                body.collect_free(bound, out);
                bound.pop();
            }
            SemExpr::Split { scrutinee, left, right, body } => {
                scrutinee.collect_free(bound, out);
                bound.push(left);
                bound.push(right);
                body.collect_free(bound, out);
                bound.truncate(bound.len() - 2);
            }
        }
    }

    /// Replaces free variables; `with` values must be closed.
    fn substitute(&self, with: &HashMap<&str, SemExpr>) -> SemExpr {
        let without = |names: &[&String]| -> HashMap<&str, SemExpr> {
            with.iter()
                .filter(|(k, _)| !names.iter().any(|n| n.as_str() == **k))
                .map(|(k, v)| (*k, v.clone()))
                .collect()
        };
        match self {
            SemExpr::Var(x) => with.get(x.as_str()).cloned().unwrap_or_else(|| self.clone()),
            SemExpr::Prim(_) => self.clone(),
            SemExpr::Tensor(a, b) => SemExpr::tensor(a.substitute(with), b.substitute(with)),
            SemExpr::Apply(a, b) => SemExpr::apply(a.substitute(with), b.substitute(with)),
            SemExpr::Lambda(x, body) => SemExpr::lambda(x.clone(), body.substitute(&without(&[x]))),
            SemExpr::Comprehend { var, range, body } => {
                SemExpr::comprehend(var.clone(), range.clone(), body.substitute(&without(&[var])))
            }
            SemExpr::Split { scrutinee, left, right, body } => SemExpr::split(
                scrutinee.substitute(with),
                left.clone(),
                right.clone(),
                body.substitute(&without(&[left, right])),
            ),
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, bare_tensor: bool) -> fmt::Result {
        match self {
            SemExpr::Var(x) => f.write_str(x),
            SemExpr::Prim(k) => write!(f, "⌈{k}⌉"),
            SemExpr::Tensor(a, b) => {
                if !bare_tensor {
                    f.write_str("(")?;
                }
                a.write(f, false)?;
                f.write_str(" ⊗ ")?;
                b.write(f, false)?;
                if !bare_tensor {
                    f.write_str(")")?;
                }
                Ok(())
            }
            SemExpr::Apply(fun, arg) => {
                fun.write(f, false)?;
                f.write_str("(")?;
                arg.write(f, true)?;
                f.write_str(")")
            }
            SemExpr::Lambda(x, body) => {
                write!(f, "(λ{x}. ")?;
                body.write(f, true)?;
                f.write_str(")")
            }
            SemExpr::Comprehend { var, range, body } => {
                write!(f, "|{{{var} ∈ {} | ", range.set)?;
                body.write(f, true)?;
                f.write_str(" ≠ 0}⟩")
            }
            SemExpr::Split { scrutinee, left, right, body } => {
                write!(f, "(let ({left} ⊗ {right}) = ")?;
                scrutinee.write(f, true)?;
                f.write_str(" in ")?;
                body.write(f, true)?;
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for SemExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, true)
    }
}

/// Translates a focused proof term clause by clause.
pub fn compile(p: &ProofTerm, pa: &PolarityAssignment, i0: &BaseSets) -> Result<SemExpr, SemError> {
    let c = |q: &ProofTerm| compile(q, pa, i0);
    Ok(match p {
        ProofTerm::Ax { var, .. } => SemExpr::var(var),
        ProofTerm::CoAx { covar, .. } => SemExpr::var(covar),
        ProofTerm::FocL { sub, var, ty } => SemExpr::comprehend(var, interpret_type(ty, pa, i0)?, c(sub)?),
        ProofTerm::DefocL { sub, var } => SemExpr::apply(SemExpr::var(var), c(sub)?),
        ProofTerm::DefocR { sub, covar } => SemExpr::apply(SemExpr::var(covar), c(sub)?),
        ProofTerm::FocR { sub, covar } => SemExpr::lambda(covar, c(sub)?),
        ProofTerm::OverL { m, n } | ProofTerm::TensorR { m, n } | ProofTerm::UnderL { m, n } => {
            SemExpr::tensor(c(m)?, c(n)?)
        }
        ProofTerm::OverR { m, var, covar_in, covar_out } => {
            SemExpr::split(SemExpr::var(covar_out), covar_in, var, c(m)?)
        }
        ProofTerm::UnderR { m, var, covar_in, covar_out } => {
            SemExpr::split(SemExpr::var(covar_out), var, covar_in, c(m)?)
        }
        ProofTerm::TensorL { m, var1, var2, var_z } => SemExpr::split(SemExpr::var(var_z), var1, var2, c(m)?),
    })
}

/// Replaces free variables by the named lexical primitives.
pub fn insert_lexical<S: AsRef<str>, K: AsRef<str>>(e: &SemExpr, words: &[(S, K)]) -> SemExpr {
    let with: HashMap<&str, SemExpr> =
        words.iter().map(|(v, k)| (v.as_ref(), SemExpr::Prim(k.as_ref().to_string()))).collect();
    e.substitute(&with)
}

/// Equality up to renaming of bound names; free names must agree.
pub fn sem_alpha_eq(a: &SemExpr, b: &SemExpr) -> bool {
    alpha(a, b, &mut Vec::new())
}

fn alpha<'a>(a: &'a SemExpr, b: &'a SemExpr, scope: &mut Vec<(&'a str, &'a str)>) -> bool {
    let under = |pairs: &[(&'a str, &'a str)], x: &'a SemExpr, y: &'a SemExpr, scope: &mut Vec<(&'a str, &'a str)>| {
        scope.extend_from_slice(pairs);
        let ok = alpha(x, y, scope);
        scope.truncate(scope.len() - pairs.len());
        ok
    };
    match (a, b) {
        (SemExpr::Var(x), SemExpr::Var(y)) => {
            let bx = scope.iter().rev().find(|(l, _)| *l == x).map(|p| p.1);
            let by = scope.iter().rev().find(|(_, r)| *r == y).map(|p| p.0);
            match (bx, by) {
                (Some(y2), Some(x2)) => y2 == y && x2 == x,
                (None, None) => x == y,
                _ => false,
            }
        }
        (SemExpr::Prim(x), SemExpr::Prim(y)) => x == y,
        (SemExpr::Tensor(a1, a2), SemExpr::Tensor(b1, b2)) | (SemExpr::Apply(a1, a2), SemExpr::Apply(b1, b2)) => {
            alpha(a1, b1, scope) && alpha(a2, b2, scope)
        }
        (SemExpr::Lambda(x, ba), SemExpr::Lambda(y, bb)) => under(&[(x, y)], ba, bb, scope),
        (SemExpr::Comprehend { var: x, range: ra, body: ba }, SemExpr::Comprehend { var: y, range: rb, body: bb }) => {
            ra.set == rb.set && under(&[(x, y)], ba, bb, scope)
        }
        (
            SemExpr::Split { scrutinee: sa, left: la, right: ra, body: ba },
            SemExpr::Split { scrutinee: sb, left: lb, right: rb, body: bb },
        ) => alpha(sa, sb, scope) && under(&[(la, lb), (ra, rb)], ba, bb, scope),
        _ => false,
    }
}
