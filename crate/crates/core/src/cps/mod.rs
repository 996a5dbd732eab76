//! Polarity-driven type interpretation, compilation of focused proof terms
//! into semantic expressions, and their evaluation against a model.

mod eval;
mod expr;
mod lexicon;

use std::collections::BTreeMap;
use std::fmt;

pub use eval::{evaluate, evaluate_reading, Env, EvalContext, EvalError, SemFn, SemValue, DEFAULT_COMPREHENSION_CAP};
pub use expr::{compile, insert_lexical, sem_alpha_eq, SemExpr};
pub use lexicon::{build_sem_lexicon, eval_single_quantified, quantifier_map, SemLexicon};

use crate::fvect::{FvectError, Space, Universe};
use crate::types::{polarity, LambekType, Polarity, PolarityAssignment, TypeError};

/// A set built from the individuals and the reals by powerset and product.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SemSet {
    Universe,
    Reals,
    Power(Box<SemSet>),
    Product(Box<SemSet>, Box<SemSet>),
}

impl SemSet {
    pub fn power(s: SemSet) -> Self {
        SemSet::Power(Box::new(s))
    }

    pub fn product(a: SemSet, b: SemSet) -> Self {
        SemSet::Product(Box::new(a), Box::new(b))
    }

    /// The vector space spanned by the set, over the given individuals.
    pub fn space(&self, universe: &Universe) -> Result<Space, SemError> {
        Ok(match self {
            SemSet::Universe => Space::atoms(universe.clone()),
            SemSet::Reals => return Err(SemError::NotEnumerable(self.to_string())),
            SemSet::Power(s) => Space::power(s.space(universe)?),
            SemSet::Product(a, b) => Space::tensor(a.space(universe)?, b.space(universe)?),
        })
    }
}

impl fmt::Display for SemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemSet::Universe => f.write_str("U"),
            SemSet::Reals => f.write_str("ℝ"),
            SemSet::Power(s) => write!(f, "P({s})"),
            SemSet::Product(a, b) => write!(f, "({a} × {b})"),
        }
    }
}

/// The interpretation of a syntactic type, remembering where it came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemSpace {
    pub set: SemSet,
    pub ty: LambekType,
    pub polarity: Polarity,
}

/// Carrier sets of the atomic types.
pub type BaseSets = BTreeMap<String, SemSet>;

/// `np ↦ U`, `n ↦ P(U)`, `s ↦ ℝ`.
pub fn standard_base_sets() -> BaseSets {
    [
        ("np".to_string(), SemSet::Universe),
        ("n".to_string(), SemSet::power(SemSet::Universe)),
        ("s".to_string(), SemSet::Reals),
    ]
    .into_iter()
    .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SemError {
    #[error("atom `{0}` has no carrier set")]
    UnknownAtom(String),
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error("{0} has no finite basis")]
    NotEnumerable(String),
    #[error("unknown semantics key `{0}`")]
    UnknownKey(String),
    #[error("no semantics for key `{key}`: {msg}")]
    Unresolved { key: String, msg: String },
    #[error(transparent)]
    Fvect(#[from] FvectError),
}

fn set_of(t: &LambekType, pa: &PolarityAssignment, i0: &BaseSets) -> Result<SemSet, SemError> {
    let p = |t: &LambekType| polarity(pa, t).map(Polarity::is_positive);
    let lift = |t: &LambekType, keep: bool| -> Result<SemSet, SemError> {
        let s = set_of(t, pa, i0)?;
        Ok(if keep { s } else { SemSet::power(s) })
    };
    match t {
        LambekType::Atom(name) => {
            let base = i0.get(name).cloned().ok_or_else(|| SemError::UnknownAtom(name.clone()))?;
            Ok(if p(t)? { base } else { SemSet::power(base) })
        }
        LambekType::Tensor(a, b) => Ok(SemSet::product(lift(a, p(a)?)?, lift(b, p(b)?)?)),
        LambekType::Under(a, b) => Ok(SemSet::product(lift(a, p(a)?)?, lift(b, !p(b)?)?)),
        LambekType::Over(b, a) => Ok(SemSet::product(lift(b, !p(b)?)?, lift(a, p(a)?)?)),
    }
}

/// The set, and hence the space, interpreting `t`.
pub fn interpret_type(t: &LambekType, pa: &PolarityAssignment, i0: &BaseSets) -> Result<SemSpace, SemError> {
    Ok(SemSpace { set: set_of(t, pa, i0)?, ty: t.clone(), polarity: polarity(pa, t)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::parse_type_unchecked as ty;

    fn set(src: &str) -> SemSet {
        interpret_type(&ty(src).unwrap(), &PolarityAssignment::standard(), &standard_base_sets()).unwrap().set
    }

    #[test]
    fn atoms() {
        assert_eq!(set("np"), SemSet::Universe);
        assert_eq!(set("n"), SemSet::power(SemSet::Universe));
        assert_eq!(set("s"), SemSet::power(SemSet::Reals));
    }

    #[test]
    fn connective_table() {
        use SemSet::*;
        let pu = SemSet::power(Universe);
        let pr = SemSet::power(Reals);
        // A\B, (+,−): I1(A) × I1(B)
        assert_eq!(set("np\\s"), SemSet::product(Universe, pr.clone()));
        // A\B, (+,+): I1(A) × P(I1(B))
        assert_eq!(set("np\\n"), SemSet::product(Universe, SemSet::power(pu.clone())));
        // A⊗B, (+,+): I1(A) × I1(B)
        assert_eq!(set("np*n"), SemSet::product(Universe, pu.clone()));
        // A⊗B, (−,−): P(I1(A)) × P(I1(B))
        assert_eq!(set("s*s"), SemSet::product(SemSet::power(pr.clone()), SemSet::power(pr.clone())));
        // B/A, (+,+): P(I1(B)) × I1(A)
        assert_eq!(set("np/n"), SemSet::product(SemSet::power(Universe), pu.clone()));
        // B/A, (A −, B +): P(I1(B)) × P(I1(A))
        assert_eq!(set("np/s"), SemSet::product(SemSet::power(Universe), SemSet::power(pr.clone())));
        // B/A, (A +, B −): I1(B) × I1(A)
        assert_eq!(set("s/np"), SemSet::product(pr.clone(), Universe));
        // B/A, (−,−): I1(B) × P(I1(A))
        assert_eq!(set("s/s"), SemSet::product(pr.clone(), SemSet::power(pr)));
    }

    #[test]
    fn polarity_is_recorded() {
        let sp = interpret_type(&ty("np\\s").unwrap(), &PolarityAssignment::standard(), &standard_base_sets()).unwrap();
        assert_eq!(sp.polarity, Polarity::Negative);
        assert!(interpret_type(&ty("pp").unwrap(), &PolarityAssignment::standard(), &standard_base_sets()).is_err());
    }

    #[test]
    fn spaces() {
        let u = Universe::new(["a", "b"]).unwrap();
        assert_eq!(set("np").space(&u).unwrap().dim().unwrap(), 2);
        assert_eq!(set("n").space(&u).unwrap().dim().unwrap(), 4);
        assert!(matches!(set("s").space(&u), Err(SemError::NotEnumerable(_))));
    }
}
