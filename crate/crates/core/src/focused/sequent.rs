use std::fmt;

use crate::types::LambekType;

/// Antecedent structure; `Focus` marks the formula under left focus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Structure {
    Leaf(String, LambekType),
    Focus(LambekType),
    Bullet(Box<Structure>, Box<Structure>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Succedent {
    CoVar(String, LambekType),
    Focus(LambekType),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sequent {
    pub ant: Structure,
    pub succ: Succedent,
}

impl Structure {
    pub fn leaf(var: impl Into<String>, ty: LambekType) -> Self {
        Structure::Leaf(var.into(), ty)
    }

    pub fn bullet(left: Structure, right: Structure) -> Self {
        Structure::Bullet(Box::new(left), Box::new(right))
    }

    pub fn focus_count(&self) -> usize {
        match self {
            Structure::Leaf(..) => 0,
            Structure::Focus(_) => 1,
            Structure::Bullet(l, r) => l.focus_count() + r.focus_count(),
        }
    }

    /// Variable names in left-to-right order.
    pub fn vars(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Structure::Leaf(x, _) => out.push(x),
            Structure::Focus(_) => {}
            Structure::Bullet(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    /// Leaves as `(path, var, type)`, left to right. A path lists the
    /// branch taken at each bullet, `false` for left.
    pub fn leaves(&self) -> Vec<(Vec<bool>, &str, &LambekType)> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        self.collect_leaves(&mut path, &mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, path: &mut Vec<bool>, out: &mut Vec<(Vec<bool>, &'a str, &'a LambekType)>) {
        match self {
            Structure::Leaf(x, t) => out.push((path.clone(), x, t)),
            Structure::Focus(_) => {}
            Structure::Bullet(l, r) => {
                path.push(false);
                l.collect_leaves(path, out);
                path.pop();
                path.push(true);
                r.collect_leaves(path, out);
                path.pop();
            }
        }
    }

    /// Path to the focused formula, if any.
    pub fn focus_path(&self) -> Option<(Vec<bool>, &LambekType)> {
        match self {
            Structure::Leaf(..) => None,
            Structure::Focus(t) => Some((Vec::new(), t)),
            Structure::Bullet(l, r) => {
                if let Some((mut p, t)) = l.focus_path() {
                    p.insert(0, false);
                    Some((p, t))
                } else if let Some((mut p, t)) = r.focus_path() {
                    p.insert(0, true);
                    Some((p, t))
                } else {
                    None
                }
            }
        }
    }

    pub fn at(&self, path: &[bool]) -> Option<&Structure> {
        match (path.split_first(), self) {
            (None, s) => Some(s),
            (Some((false, rest)), Structure::Bullet(l, _)) => l.at(rest),
            (Some((true, rest)), Structure::Bullet(_, r)) => r.at(rest),
            _ => None,
        }
    }

    /// Copy with the substructure at `path` replaced.
    pub fn replace(&self, path: &[bool], with: Structure) -> Option<Structure> {
        match (path.split_first(), self) {
            (None, _) => Some(with),
            (Some((false, rest)), Structure::Bullet(l, r)) => {
                Some(Structure::Bullet(Box::new(l.replace(rest, with)?), r.clone()))
            }
            (Some((true, rest)), Structure::Bullet(l, r)) => {
                Some(Structure::Bullet(l.clone(), Box::new(r.replace(rest, with)?)))
            }
            _ => None,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, top: bool, named: bool) -> fmt::Result {
        match self {
            Structure::Leaf(x, t) if named => write!(f, "{x}:{t}"),
            Structure::Leaf(_, t) => write!(f, "{t}"),
            Structure::Focus(t) => write!(f, "[{t}]"),
            Structure::Bullet(l, r) => {
                if !top {
                    f.write_str("(")?;
                }
                l.write(f, false, named)?;
                f.write_str(" • ")?;
                r.write(f, false, named)?;
                if !top {
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

impl Succedent {
    pub fn ty(&self) -> &LambekType {
        match self {
            Succedent::CoVar(_, t) | Succedent::Focus(t) => t,
        }
    }

    pub fn is_focus(&self) -> bool {
        matches!(self, Succedent::Focus(_))
    }
}

impl Sequent {
    pub fn new(ant: Structure, succ: Succedent) -> Self {
        Sequent { ant, succ }
    }

    pub fn focus_count(&self) -> usize {
        self.ant.focus_count() + usize::from(self.succ.is_focus())
    }

    /// Every variable and covariable name occurring in the sequent.
    pub fn names(&self) -> Vec<&str> {
        let mut out = self.ant.vars();
        if let Succedent::CoVar(a, _) = &self.succ {
            out.push(a);
        }
        out
    }

    /// The sequent with every name erased, as a lookup key.
    pub fn shape(&self) -> String {
        struct Shape<'a>(&'a Sequent);
        impl fmt::Display for Shape<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.ant.write(f, true, false)?;
                match &self.0.succ {
                    Succedent::CoVar(_, t) => write!(f, " ⊢ {t}"),
                    Succedent::Focus(t) => write!(f, " ⊢ [{t}]"),
                }
            }
        }
        Shape(self).to_string()
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, true, true)
    }
}

impl fmt::Display for Succedent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Succedent::CoVar(a, t) => write!(f, "{a}:{t}"),
            Succedent::Focus(t) => write!(f, "[{t}]"),
        }
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊢ {}", self.ant, self.succ)
    }
}
