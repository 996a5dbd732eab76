use std::collections::BTreeMap;
use std::sync::Arc;

use super::{EvalError, SemError, SemFn, SemValue};
use crate::fvect::{self, map_tensor, pipeline, LinearMap, Space, Universe, Vector};
use crate::oracle::{Model, Quant};
use crate::scalar::Scalar;
use crate::types::Lexicon;

/// Semantic values of lexical keys, built from one model.
#[derive(Debug, Clone)]
pub struct SemLexicon {
    universe: Universe,
    prims: BTreeMap<String, SemValue>,
}

impl SemLexicon {
    pub fn new(universe: Universe) -> Self {
        SemLexicon { universe, prims: BTreeMap::new() }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn insert(&mut self, key: impl Into<String>, value: SemValue) {
        self.prims.insert(key.into(), value);
    }

    pub fn get(&self, key: &str) -> Option<&SemValue> {
        self.prims.get(key)
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.prims.keys().map(String::as_str)
    }

    /// Checks that every semantics key of `lex` has a value.
    pub fn covers(&self, lex: &Lexicon) -> Result<(), SemError> {
        for e in lex.entries() {
            if !self.prims.contains_key(&e.sem_key) {
                return Err(SemError::Unresolved { key: e.sem_key.clone(), msg: "not provided by the model".into() });
            }
        }
        Ok(())
    }
}

fn powerset_of(universe: &Universe) -> Space {
    Space::powerset(universe.clone())
}

/// `ε ∘ (q ⊗ μ) ∘ (δ ⊗ id) ∘ σ` on `P ⊗ P`, with the associator made explicit.
pub fn quantifier_map(q: Quant, p: &Space) -> Result<LinearMap, SemError> {
    let q_map = match q {
        Quant::All => fvect::quant_all(p)?,
        Quant::Some => fvect::quant_some(p)?,
    };
    Ok(pipeline(&[
        fvect::swap(p, p),
        map_tensor(&fvect::delta(p)?, &fvect::identity(p)),
        fvect::assoc(p, p, p),
        map_tensor(&q_map, &fvect::mu(p)?),
        fvect::epsilon(p),
    ])?)
}

/// `ε ∘ (q ⊗ μ) ∘ (δ ⊗ id)` applied to `|noun⟩ ⊗ |pred⟩`.
pub fn eval_single_quantified<S: AsRef<str>>(
    model: &Model,
    q: Quant,
    noun: &[S],
    pred: &[S],
) -> Result<Scalar, SemError> {
    let universe = Universe::new(model.universe().iter().cloned())?;
    let p = powerset_of(&universe);
    let q_map = match q {
        Quant::All => fvect::quant_all(&p)?,
        Quant::Some => fvect::quant_some(&p)?,
    };
    let f = pipeline(&[
        map_tensor(&fvect::delta(&p)?, &fvect::identity(&p)),
        fvect::assoc(&p, &p, &p),
        map_tensor(&q_map, &fvect::mu(&p)?),
        fvect::epsilon(&p),
    ])?;
    let input = fvect::tensor(&Vector::subset(&p, noun)?, &Vector::subset(&p, pred)?);
    Ok(f.apply(&input)?.as_scalar()?)
}

fn bad(prim: &str, msg: impl Into<String>) -> EvalError {
    EvalError::BadArgument { prim: prim.to_string(), msg: msg.into() }
}

fn vector_in<'a>(prim: &str, v: &'a SemValue, space: &Space) -> Result<&'a Vector, EvalError> {
    match v {
        SemValue::Vector(x) if x.space() == space => Ok(x),
        other => Err(bad(prim, format!("expected a vector of {space}, found {other}"))),
    }
}

fn func<'a>(prim: &str, v: &'a SemValue) -> Result<&'a SemFn, EvalError> {
    match v {
        SemValue::Func(f) => Ok(f),
        other => Err(bad(prim, format!("expected a continuation, found {other}"))),
    }
}

fn index(e: &fvect::BasisElem) -> usize {
    match e {
        fvect::BasisElem::Atom(i) => *i,
        other => unreachable!("atom space element {other:?}"),
    }
}

fn quantifier(name: &str, q: Quant, p: &Space) -> Result<SemValue, SemError> {
    let map = Arc::new(quantifier_map(q, p)?);
    let (p, prim) = (p.clone(), name.to_string());
    Ok(SemValue::Func(SemFn::new(name, move |arg| {
        let parts = arg.flatten();
        let [scope, noun] = parts.as_slice() else {
            return Err(bad(&prim, format!("expected 2 arguments, found {}", parts.len())));
        };
        let input = fvect::tensor(vector_in(&prim, scope, &p)?, vector_in(&prim, noun, &p)?);
        let out = map.apply(&input).and_then(|v| v.as_scalar()).map_err(|e| bad(&prim, e.to_string()))?;
        Ok(SemValue::Scalar(out))
    })))
}

/// Registers `every`, `all`, `some`, and for the model's names
/// `noun:P`, `iv:P`, `tv:R` and `name:a`.
pub fn build_sem_lexicon(model: &Model) -> Result<SemLexicon, SemError> {
    let universe = Universe::new(model.universe().iter().cloned())?;
    let atoms = Space::atoms(universe.clone());
    let p = powerset_of(&universe);
    p.dim()?;
    let model = Arc::new(model.clone());
    let mut lex = SemLexicon::new(universe);
    lex.insert("every", quantifier("every", Quant::All, &p)?);
    lex.insert("all", quantifier("all", Quant::All, &p)?);
    lex.insert("some", quantifier("some", Quant::Some, &p)?);
    for label in model.universe() {
        lex.insert(format!("name:{label}"), SemValue::Vector(Vector::atom(&atoms, label)?));
    }
    for name in model.predicate_names() {
        let members = model.pred_labels(name).expect("listed predicate");
        lex.insert(format!("noun:{name}"), SemValue::Vector(Vector::subset(&p, &members)?));
        let (key, set, atoms) =
            (format!("iv:{name}"), model.pred(name).expect("listed predicate").clone(), atoms.clone());
        let prim = key.clone();
        lex.insert(
            key.clone(),
            SemValue::Func(SemFn::new(&key, move |arg| {
                let parts = arg.flatten();
                let [subj, k] = parts.as_slice() else {
                    return Err(bad(&prim, format!("expected 2 arguments, found {}", parts.len())));
                };
                let subj = vector_in(&prim, subj, &atoms)?;
                let w: Scalar = subj.terms().filter(|(e, _)| set.contains(&index(e))).map(|(_, c)| c.clone()).sum();
                func(&prim, k)?.call(SemValue::Scalar(w))
            })),
        );
    }
    for name in model.relation_names() {
        let (key, rel, model, atoms) = (format!("tv:{name}"), name.to_string(), model.clone(), atoms.clone());
        let prim = key.clone();
        lex.insert(
            key.clone(),
            SemValue::Func(SemFn::new(&key, move |arg| {
                let parts = arg.flatten();
                let [subj, k, obj] = parts.as_slice() else {
                    return Err(bad(&prim, format!("expected 3 arguments, found {}", parts.len())));
                };
                let (subj, obj) = (vector_in(&prim, subj, &atoms)?, vector_in(&prim, obj, &atoms)?);
                let mut w = Scalar::zero();
                for (a, ca) in subj.terms() {
                    for (b, cb) in obj.terms() {
                        let c = model.weight(&rel, index(a), index(b)).map_err(|e| bad(&prim, e.to_string()))?;
                        w += &(ca * cb) * &c;
                    }
                }
                func(&prim, k)?.call(SemValue::Scalar(w))
            })),
        );
    }
    Ok(lex)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model() -> Model {
        let mut m = Model::new(["a", "b", "c"]).unwrap();
        m.add_pred("student", &["a", "b"]).unwrap();
        m.declare_rel("likes");
        m.set_rel("likes", "a", "c", Scalar::ratio(3, 4)).unwrap();
        m
    }

    #[test]
    fn nouns_are_subset_vectors() {
        let lex = build_sem_lexicon(&model()).unwrap();
        let SemValue::Vector(v) = lex.get("noun:student").unwrap() else { panic!() };
        let p = Space::powerset(lex.universe().clone());
        assert_eq!(*v, Vector::subset(&p, &["a", "b"]).unwrap());
    }

    #[test]
    fn verb_feeds_its_weight_to_the_continuation() {
        let lex = build_sem_lexicon(&model()).unwrap();
        let atoms = Space::atoms(lex.universe().clone());
        let SemValue::Func(likes) = lex.get("tv:likes").unwrap() else { panic!() };
        let arg = |x: &str, y: &str| {
            SemValue::Tuple(vec![
                SemValue::Tuple(vec![SemValue::Vector(Vector::atom(&atoms, x).unwrap()), SemValue::identity()]),
                SemValue::Vector(Vector::atom(&atoms, y).unwrap()),
            ])
        };
        assert_eq!(likes.call(arg("a", "c")).unwrap().as_scalar(), Some(Scalar::ratio(3, 4)));
        assert_eq!(likes.call(arg("c", "a")).unwrap().as_scalar(), Some(Scalar::zero()));
        assert!(likes.call(SemValue::Scalar(Scalar::one())).is_err());
    }

    #[test]
    fn single_quantifier_examples() {
        let m = Model::new(["a", "b", "c"]).unwrap();
        let one = eval_single_quantified(&m, Quant::All, &["a", "b"], &["a", "b", "c"]).unwrap();
        assert_eq!(one, Scalar::one());
        assert_eq!(eval_single_quantified(&m, Quant::All, &["a", "b"], &["a"]).unwrap(), Scalar::zero());
        assert_eq!(eval_single_quantified::<&str>(&m, Quant::All, &[], &["b"]).unwrap(), Scalar::one());
    }

    #[test]
    fn quantifier_primitive_applies_sigma_first() {
        let m = model();
        let lex = build_sem_lexicon(&m).unwrap();
        let p = Space::powerset(lex.universe().clone());
        let SemValue::Func(every) = lex.get("every").unwrap() else { panic!() };
        let call = |scope: &[&str], noun: &[&str]| {
            let arg = SemValue::Tuple(vec![
                SemValue::Vector(Vector::subset(&p, scope).unwrap()),
                SemValue::Vector(Vector::subset(&p, noun).unwrap()),
            ]);
            every.call(arg).unwrap().as_scalar().unwrap()
        };
        assert_eq!(call(&["a", "b", "c"], &["a", "b"]), Scalar::one());
        assert_eq!(call(&["a", "b"], &["a", "b", "c"]), Scalar::zero());
    }
}
