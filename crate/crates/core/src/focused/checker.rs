//! Replays a proof term against the rule schemas, one node at a time.
//!
//! This shares only the sequent data types with the search; every rule is
//! re-derived from its schema here.

use super::{ProofTerm, Sequent, Structure, Succedent};
use crate::types::{polarity, LambekType, Polarity, PolarityAssignment};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{rule} at node {}: {msg}", show(.node))]
pub struct CheckError {
    /// Child indices from the root.
    pub node: Vec<usize>,
    pub rule: &'static str,
    pub msg: String,
}

fn show(node: &[usize]) -> String {
    if node.is_empty() {
        "root".into()
    } else {
        node.iter().map(ToString::to_string).collect::<Vec<_>>().join(".")
    }
}

/// Validates `p` as a derivation of `conclusion`.
pub fn check_proof(p: &ProofTerm, conclusion: &Sequent, pa: &PolarityAssignment) -> Result<(), CheckError> {
    let mut node = Vec::new();
    walk(p, conclusion, pa, &mut node, &mut |_, _, _| {})
}

/// Visits every node with its conclusion sequent and depth, premises before conclusions.
pub(crate) fn walk(
    p: &ProofTerm,
    conclusion: &Sequent,
    pa: &PolarityAssignment,
    node: &mut Vec<usize>,
    visit: &mut dyn FnMut(&ProofTerm, &Sequent, usize),
) -> Result<(), CheckError> {
    let premises =
        premises(p, conclusion, pa).map_err(|msg| CheckError { node: node.clone(), rule: p.rule_name(), msg })?;
    let children = p.children();
    for (i, (child, prem)) in children.into_iter().zip(&premises).enumerate() {
        node.push(i);
        walk(child, prem, pa, node, visit)?;
        node.pop();
    }
    visit(p, conclusion, node.len());
    Ok(())
}

fn pol(pa: &PolarityAssignment, t: &LambekType) -> Result<Polarity, String> {
    polarity(pa, t).map_err(|e| e.to_string())
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fresh(conclusion: &Sequent, names: &[&str]) -> Result<(), String> {
    let used = conclusion.names();
    for (i, n) in names.iter().enumerate() {
        require(!used.contains(n), || format!("bound name `{n}` already occurs in the conclusion"))?;
        require(!names[..i].contains(n), || format!("name `{n}` bound twice"))?;
    }
    Ok(())
}

fn find_leaf(s: &Structure, var: &str) -> Option<(Vec<bool>, LambekType)> {
    s.leaves().into_iter().find(|(_, x, _)| *x == var).map(|(p, _, t)| (p, t.clone()))
}

/// The premises the rule at `p` requires for `conclusion`, in term order.
pub fn premises(p: &ProofTerm, conclusion: &Sequent, pa: &PolarityAssignment) -> Result<Vec<Sequent>, String> {
    let focus_count = conclusion.focus_count();
    require(focus_count <= 1, || format!("{focus_count} foci in {conclusion}"))?;
    let names = conclusion.names();
    for (i, n) in names.iter().enumerate() {
        require(!names[..i].contains(n), || format!("name `{n}` occurs twice in {conclusion}"))?;
    }
    let ant = &conclusion.ant;
    let succ = &conclusion.succ;
    let unfocused = focus_count == 0;
    match p {
        ProofTerm::Ax { ty, var } => {
            require(ty.is_atom() && pol(pa, ty)? == Polarity::Positive, || {
                format!("Ax on non-atomic or negative {ty}")
            })?;
            require(*ant == Structure::Leaf(var.clone(), ty.clone()) && *succ == Succedent::Focus(ty.clone()), || {
                format!("expected {var}:{ty} ⊢ [{ty}], found {conclusion}")
            })?;
            Ok(vec![])
        }
        ProofTerm::CoAx { ty, covar } => {
            require(ty.is_atom() && pol(pa, ty)? == Polarity::Negative, || {
                format!("CoAx on non-atomic or positive {ty}")
            })?;
            require(
                *ant == Structure::Focus(ty.clone()) && *succ == Succedent::CoVar(covar.clone(), ty.clone()),
                || format!("expected [{ty}] ⊢ {covar}:{ty}, found {conclusion}"),
            )?;
            Ok(vec![])
        }
        ProofTerm::FocL { var, ty, .. } => {
            require(pol(pa, ty)? == Polarity::Positive, || format!("↽ on negative {ty}"))?;
            let (path, t) = ant.focus_path().ok_or_else(|| format!("no left focus in {conclusion}"))?;
            require(t == ty, || format!("focused {t}, label says {ty}"))?;
            fresh(conclusion, &[var])?;
            let ant = ant.replace(&path, Structure::leaf(var.clone(), ty.clone())).expect("focus path");
            Ok(vec![Sequent::new(ant, succ.clone())])
        }
        ProofTerm::DefocL { var, .. } => {
            require(unfocused, || format!("↼ needs an unfocused conclusion, found {conclusion}"))?;
            let (path, t) = find_leaf(ant, var).ok_or_else(|| format!("no hypothesis `{var}`"))?;
            require(pol(pa, &t)? == Polarity::Negative, || format!("↼ on positive {t}"))?;
            let ant = ant.replace(&path, Structure::Focus(t)).expect("leaf path");
            Ok(vec![Sequent::new(ant, succ.clone())])
        }
        ProofTerm::DefocR { covar, .. } => {
            require(unfocused, || format!("⇀ needs an unfocused conclusion, found {conclusion}"))?;
            let Succedent::CoVar(c, t) = succ else { unreachable!("unfocused") };
            require(c == covar, || format!("label names `{covar}`, conclusion has `{c}`"))?;
            require(pol(pa, t)? == Polarity::Positive, || format!("⇀ on negative {t}"))?;
            Ok(vec![Sequent::new(ant.clone(), Succedent::Focus(t.clone()))])
        }
        ProofTerm::FocR { covar, .. } => {
            let Succedent::Focus(t) = succ else { return Err(format!("⇁ needs a right focus, found {conclusion}")) };
            require(pol(pa, t)? == Polarity::Negative, || format!("⇁ on positive {t}"))?;
            fresh(conclusion, &[covar])?;
            Ok(vec![Sequent::new(ant.clone(), Succedent::CoVar(covar.clone(), t.clone()))])
        }
        ProofTerm::OverL { .. } | ProofTerm::UnderL { .. } => {
            let over = matches!(p, ProofTerm::OverL { .. });
            require(!succ.is_focus(), || format!("left rule with a right focus in {conclusion}"))?;
            let (path, t) = ant.focus_path().ok_or_else(|| format!("no left focus in {conclusion}"))?;
            let (parent, last) = match path.split_last() {
                Some((last, parent)) => (parent, *last),
                None => return Err(format!("focused {t} has no sibling")),
            };
            let Some(Structure::Bullet(l, r)) = ant.at(parent) else { unreachable!("parent of a focus") };
            match (over, t) {
                (true, LambekType::Over(a, b)) => {
                    require(!last, || format!("A/B must be the left component, found {conclusion}"))?;
                    let main = ant.replace(parent, Structure::Focus((**a).clone())).expect("parent path");
                    Ok(vec![
                        Sequent::new(main, succ.clone()),
                        Sequent::new((**r).clone(), Succedent::Focus((**b).clone())),
                    ])
                }
                (false, LambekType::Under(b, a)) => {
                    require(last, || format!("B\\A must be the right component, found {conclusion}"))?;
                    let main = ant.replace(parent, Structure::Focus((**a).clone())).expect("parent path");
                    Ok(vec![
                        Sequent::new((**l).clone(), Succedent::Focus((**b).clone())),
                        Sequent::new(main, succ.clone()),
                    ])
                }
                _ => Err(format!("focused formula {t} does not match the rule")),
            }
        }
        ProofTerm::OverR { var, covar_in, covar_out, .. } | ProofTerm::UnderR { var, covar_in, covar_out, .. } => {
            let Succedent::CoVar(beta, t) = succ else {
                return Err(format!("right rule with a right focus in {conclusion}"));
            };
            require(unfocused, || format!("right rule with a left focus in {conclusion}"))?;
            require(beta == covar_out, || format!("label names `{covar_out}`, conclusion has `{beta}`"))?;
            fresh(conclusion, &[var, covar_in])?;
            match (p, t) {
                (ProofTerm::OverR { .. }, LambekType::Over(a, b)) => Ok(vec![Sequent::new(
                    Structure::bullet(ant.clone(), Structure::leaf(var.clone(), (**b).clone())),
                    Succedent::CoVar(covar_in.clone(), (**a).clone()),
                )]),
                (ProofTerm::UnderR { .. }, LambekType::Under(b, a)) => Ok(vec![Sequent::new(
                    Structure::bullet(Structure::leaf(var.clone(), (**b).clone()), ant.clone()),
                    Succedent::CoVar(covar_in.clone(), (**a).clone()),
                )]),
                _ => Err(format!("succedent {t} does not match the rule")),
            }
        }
        ProofTerm::TensorL { var1, var2, var_z, .. } => {
            require(ant.focus_path().is_none(), || format!("⊗L with a left focus in {conclusion}"))?;
            let (path, t) = find_leaf(ant, var_z).ok_or_else(|| format!("no hypothesis `{var_z}`"))?;
            let LambekType::Tensor(a, b) = t else { return Err(format!("⊗L on {t}")) };
            fresh(conclusion, &[var1, var2])?;
            let split = Structure::bullet(Structure::leaf(var1.clone(), *a), Structure::leaf(var2.clone(), *b));
            Ok(vec![Sequent::new(ant.replace(&path, split).expect("leaf path"), succ.clone())])
        }
        ProofTerm::TensorR { .. } => {
            let (Structure::Bullet(x, y), Succedent::Focus(LambekType::Tensor(a, b))) = (ant, succ) else {
                return Err(format!("expected X • Y ⊢ [A⊗B], found {conclusion}"));
            };
            Ok(vec![
                Sequent::new((**x).clone(), Succedent::Focus((**a).clone())),
                Sequent::new((**y).clone(), Succedent::Focus((**b).clone())),
            ])
        }
    }
}

/// Inference tree text: premises above their conclusion and indented
/// one level deeper, so the root is the last line.
pub fn render(p: &ProofTerm, root: &Sequent, pa: &PolarityAssignment) -> Result<String, CheckError> {
    let mut lines = Vec::new();
    walk(p, root, pa, &mut Vec::new(), &mut |node, seq, depth| {
        lines.push(format!("{}{}: {}", "  ".repeat(depth), node.rule_name(), seq));
    })?;
    Ok(lines.join("\n"))
}
