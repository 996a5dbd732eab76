use std::collections::HashMap;

use crate::types::LambekType;

/// A labelled derivation in the focused calculus.
///
/// The four harpoon rules are named after their conclusions: `FocL` (↽)
/// has a left focus on a positive formula in its conclusion, `DefocL` (↼)
/// a negative hypothesis, `DefocR` (⇀) a positive conclusion variable and
/// `FocR` (⇁) a negative formula under right focus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ProofTerm {
    Ax {
        ty: LambekType,
        var: String,
    },
    CoAx {
        ty: LambekType,
        covar: String,
    },
    FocL {
        sub: Box<ProofTerm>,
        var: String,
        ty: LambekType,
    },
    DefocL {
        sub: Box<ProofTerm>,
        var: String,
    },
    DefocR {
        sub: Box<ProofTerm>,
        covar: String,
    },
    FocR {
        sub: Box<ProofTerm>,
        covar: String,
    },
    /// Premises `X[[A]] ⊢ Z` and `Y ⊢ [B]`.
    OverL {
        m: Box<ProofTerm>,
        n: Box<ProofTerm>,
    },
    OverR {
        m: Box<ProofTerm>,
        var: String,
        covar_in: String,
        covar_out: String,
    },
    TensorL {
        m: Box<ProofTerm>,
        var1: String,
        var2: String,
        var_z: String,
    },
    TensorR {
        m: Box<ProofTerm>,
        n: Box<ProofTerm>,
    },
    /// Premises `Y ⊢ [B]` and `X[[A]] ⊢ Z`.
    UnderL {
        m: Box<ProofTerm>,
        n: Box<ProofTerm>,
    },
    UnderR {
        m: Box<ProofTerm>,
        var: String,
        covar_in: String,
        covar_out: String,
    },
}

impl ProofTerm {
    pub fn rule_name(&self) -> &'static str {
        match self {
            ProofTerm::Ax { .. } => "Ax",
            ProofTerm::CoAx { .. } => "CoAx",
            ProofTerm::FocL { .. } => "↽",
            ProofTerm::DefocL { .. } => "↼",
            ProofTerm::DefocR { .. } => "⇀",
            ProofTerm::FocR { .. } => "⇁",
            ProofTerm::OverL { .. } => "/L",
            ProofTerm::OverR { .. } => "/R",
            ProofTerm::TensorL { .. } => "⊗L",
            ProofTerm::TensorR { .. } => "⊗R",
            ProofTerm::UnderL { .. } => "\\L",
            ProofTerm::UnderR { .. } => "\\R",
        }
    }

    pub fn children(&self) -> Vec<&ProofTerm> {
        match self {
            ProofTerm::Ax { .. } | ProofTerm::CoAx { .. } => vec![],
            ProofTerm::FocL { sub, .. }
            | ProofTerm::DefocL { sub, .. }
            | ProofTerm::DefocR { sub, .. }
            | ProofTerm::FocR { sub, .. } => vec![sub],
            ProofTerm::OverR { m, .. } | ProofTerm::TensorL { m, .. } | ProofTerm::UnderR { m, .. } => vec![m],
            ProofTerm::OverL { m, n } | ProofTerm::TensorR { m, n } | ProofTerm::UnderL { m, n } => vec![m, n],
        }
    }

    /// Number of rule applications.
    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    /// Names bound at this node.
    fn binders(&self) -> Vec<&str> {
        match self {
            ProofTerm::FocL { var, .. } => vec![var],
            ProofTerm::FocR { covar, .. } => vec![covar],
            ProofTerm::OverR { var, covar_in, .. } | ProofTerm::UnderR { var, covar_in, .. } => vec![var, covar_in],
            ProofTerm::TensorL { var1, var2, .. } => vec![var1, var2],
            _ => vec![],
        }
    }

    /// Names used but not bound at this node.
    fn uses(&self) -> Vec<&str> {
        match self {
            ProofTerm::Ax { var, .. } => vec![var],
            ProofTerm::CoAx { covar, .. } => vec![covar],
            ProofTerm::DefocL { var, .. } => vec![var],
            ProofTerm::DefocR { covar, .. } => vec![covar],
            ProofTerm::OverR { covar_out, .. } | ProofTerm::UnderR { covar_out, .. } => vec![covar_out],
            ProofTerm::TensorL { var_z, .. } => vec![var_z],
            _ => vec![],
        }
    }

    /// Structure and types, ignoring names.
    fn same_shape(&self, other: &ProofTerm) -> bool {
        use ProofTerm::*;
        let children_match = || {
            let (a, b) = (self.children(), other.children());
            a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| x.same_shape(y))
        };
        let head = match (self, other) {
            (Ax { ty: a, .. }, Ax { ty: b, .. }) | (CoAx { ty: a, .. }, CoAx { ty: b, .. }) => a == b,
            (FocL { ty: a, .. }, FocL { ty: b, .. }) => a == b,
            (DefocL { .. }, DefocL { .. })
            | (DefocR { .. }, DefocR { .. })
            | (FocR { .. }, FocR { .. })
            | (OverL { .. }, OverL { .. })
            | (OverR { .. }, OverR { .. })
            | (TensorL { .. }, TensorL { .. })
            | (TensorR { .. }, TensorR { .. })
            | (UnderL { .. }, UnderL { .. })
            | (UnderR { .. }, UnderR { .. }) => true,
            _ => false,
        };
        head && children_match()
    }
}

/// Equality up to renaming of bound names. Free names must agree exactly.
pub fn alpha_eq(a: &ProofTerm, b: &ProofTerm) -> bool {
    a.same_shape(b) && names_match(a, b, &mut HashMap::new(), &mut HashMap::new())
}

fn names_match<'a>(
    a: &'a ProofTerm,
    b: &'a ProofTerm,
    fwd: &mut HashMap<&'a str, &'a str>,
    back: &mut HashMap<&'a str, &'a str>,
) -> bool {
    for (x, y) in a.uses().into_iter().zip(b.uses()) {
        let ok = match (fwd.get(x), back.get(y)) {
            (Some(&y2), Some(&x2)) => y2 == y && x2 == x,
            (None, None) => x == y,
            _ => false,
        };
        if !ok {
            return false;
        }
    }
    let saved: Vec<_> =
        a.binders().into_iter().zip(b.binders()).map(|(x, y)| (x, y, fwd.insert(x, y), back.insert(y, x))).collect();
    let ok = a.children().into_iter().zip(b.children()).all(|(ca, cb)| names_match(ca, cb, fwd, back));
    for (x, y, old_f, old_b) in saved.into_iter().rev() {
        match old_f {
            Some(v) => fwd.insert(x, v),
            None => fwd.remove(x),
        };
        match old_b {
            Some(v) => back.insert(y, v),
            None => back.remove(y),
        };
    }
    ok
}
