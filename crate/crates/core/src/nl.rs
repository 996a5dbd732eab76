//! The axiomatic non-associative Lambek calculus: proof terms, a checker,
//! the derived monotonicity rules, and the interpretation of proofs as
//! linear maps built from `ε` and `η`.

use std::collections::BTreeMap;
use std::fmt;

use crate::fvect::{
    assoc, assoc_inv, epsilon, eta, identity, map_tensor, pipeline, tensor, unit_left, unit_left_inv, unit_right,
    unit_right_inv, FvectError, LinearMap, Space, Vector,
};
use crate::types::LambekType;

/// A proof in the axiomatic calculus.
///
/// `R1` sends `A⊗B → C` to `A → C/B`; `R2` sends it to `B → A\C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NLProof {
    Id(LambekType),
    /// `g ∘ f`
    Comp(Box<NLProof>, Box<NLProof>),
    R1(Box<NLProof>),
    R2(Box<NLProof>),
    R1Inv(Box<NLProof>),
    R2Inv(Box<NLProof>),
}

impl NLProof {
    pub fn id(t: LambekType) -> Self {
        NLProof::Id(t)
    }

    /// `g ∘ f`
    pub fn comp(g: NLProof, f: NLProof) -> Self {
        NLProof::Comp(Box::new(g), Box::new(f))
    }

    pub fn r1(f: NLProof) -> Self {
        NLProof::R1(Box::new(f))
    }

    pub fn r2(f: NLProof) -> Self {
        NLProof::R2(Box::new(f))
    }

    pub fn r1_inv(g: NLProof) -> Self {
        NLProof::R1Inv(Box::new(g))
    }

    pub fn r2_inv(g: NLProof) -> Self {
        NLProof::R2Inv(Box::new(g))
    }

    /// Number of rule applications.
    pub fn size(&self) -> usize {
        match self {
            NLProof::Id(_) => 1,
            NLProof::Comp(g, f) => 1 + g.size() + f.size(),
            NLProof::R1(p) | NLProof::R2(p) | NLProof::R1Inv(p) | NLProof::R2Inv(p) => 1 + p.size(),
        }
    }
}

impl fmt::Display for NLProof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NLProof::Id(t) => write!(f, "1_{{{t}}}"),
            NLProof::Comp(g, h) => write!(f, "({g} ∘ {h})"),
            NLProof::R1(p) => write!(f, "▷({p})"),
            NLProof::R2(p) => write!(f, "◁({p})"),
            NLProof::R1Inv(p) => write!(f, "▷⁻¹({p})"),
            NLProof::R2Inv(p) => write!(f, "◁⁻¹({p})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NLError {
    #[error("ill-typed proof at {}: {msg}", show_path(.path))]
    IllTyped { path: Vec<&'static str>, msg: String },
    #[error("no space given for atom `{0}`")]
    UnknownAtom(String),
    #[error("expected {expected} word vectors, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("word vector {index} lives in {found}, expected {expected}")]
    WordSpace { index: usize, expected: String, found: String },
    #[error(transparent)]
    Fvect(#[from] FvectError),
}

fn show_path(path: &[&str]) -> String {
    if path.is_empty() {
        "root".to_string()
    } else {
        path.join(".")
    }
}

/// Endpoints `(source, target)` of a well-formed proof.
pub fn check(p: &NLProof) -> Result<(LambekType, LambekType), NLError> {
    let mut path = Vec::new();
    check_at(p, &mut path)
}

fn ill(path: &[&'static str], msg: String) -> NLError {
    NLError::IllTyped { path: path.to_vec(), msg }
}

fn check_at(p: &NLProof, path: &mut Vec<&'static str>) -> Result<(LambekType, LambekType), NLError> {
    let sub = |p: &NLProof, step: &'static str, path: &mut Vec<&'static str>| {
        path.push(step);
        let r = check_at(p, path);
        path.pop();
        r
    };
    match p {
        NLProof::Id(t) => Ok((t.clone(), t.clone())),
        NLProof::Comp(g, f) => {
            let (a, b) = sub(f, "f", path)?;
            let (b2, c) = sub(g, "g", path)?;
            if b != b2 {
                return Err(ill(path, format!("composition of {a} → {b} with {b2} → {c}")));
            }
            Ok((a, c))
        }
        NLProof::R1(f) | NLProof::R2(f) => {
            let (src, c) = sub(f, "sub", path)?;
            let LambekType::Tensor(a, b) = src else {
                return Err(ill(path, format!("residuation needs a product source, found {src}")));
            };
            if matches!(p, NLProof::R1(_)) {
                Ok((*a, LambekType::Over(Box::new(c), b)))
            } else {
                Ok((*b, LambekType::Under(a, Box::new(c))))
            }
        }
        NLProof::R1Inv(g) => match sub(g, "sub", path)? {
            (a, LambekType::Over(c, b)) => Ok((LambekType::Tensor(Box::new(a), b), *c)),
            (_, t) => Err(ill(path, format!("▷⁻¹ needs a target of the form C/B, found {t}"))),
        },
        NLProof::R2Inv(g) => match sub(g, "sub", path)? {
            (b, LambekType::Under(a, c)) => Ok((LambekType::Tensor(a, Box::new(b)), *c)),
            (_, t) => Err(ill(path, format!("◁⁻¹ needs a target of the form A\\C, found {t}"))),
        },
    }
}

fn expect_endpoints(p: &NLProof, name: &'static str) -> Result<(LambekType, LambekType), NLError> {
    check(p).map_err(|e| match e {
        NLError::IllTyped { mut path, msg } => {
            path.insert(0, name);
            NLError::IllTyped { path, msg }
        }
        other => other,
    })
}

/// `f ⊗ g : A⊗B → C⊗D` for `f: A → C`, `g: B → D`.
pub fn mono_tensor(f: &NLProof, g: &NLProof) -> Result<NLProof, NLError> {
    let (_, c) = expect_endpoints(f, "f")?;
    let (_, d) = expect_endpoints(g, "g")?;
    let unit = NLProof::id(LambekType::tensor(c, d));
    let inner = NLProof::r2_inv(NLProof::comp(NLProof::r2(unit), g.clone()));
    Ok(NLProof::r1_inv(NLProof::comp(NLProof::r1(inner), f.clone())))
}

/// `g / f : B/C → D/A` for `f: A → C`, `g: B → D`.
pub fn mono_over(g: &NLProof, f: &NLProof) -> Result<NLProof, NLError> {
    let (_, c) = expect_endpoints(f, "f")?;
    let (b, _) = expect_endpoints(g, "g")?;
    let unit = NLProof::id(LambekType::over(b, c));
    let inner = NLProof::r2_inv(NLProof::comp(NLProof::r2(NLProof::r1_inv(unit)), f.clone()));
    Ok(NLProof::r1(NLProof::comp(g.clone(), inner)))
}

/// `f \ g : C\B → A\D` for `f: A → C`, `g: B → D`.
pub fn mono_under(f: &NLProof, g: &NLProof) -> Result<NLProof, NLError> {
    let (_, c) = expect_endpoints(f, "f")?;
    let (b, _) = expect_endpoints(g, "g")?;
    let unit = NLProof::id(LambekType::under(c, b));
    let inner = NLProof::r1_inv(NLProof::comp(NLProof::r1(NLProof::r2_inv(unit)), f.clone()));
    Ok(NLProof::r2(NLProof::comp(g.clone(), inner)))
}

/// Assignment of a vector space to each atom.
pub type AtomSpaces = BTreeMap<String, Space>;

/// Homomorphic image of a type: every connective becomes `⊗`, in written order.
pub fn type_space(t: &LambekType, i0: &AtomSpaces) -> Result<Space, NLError> {
    match t {
        LambekType::Atom(a) => i0.get(a).cloned().ok_or_else(|| NLError::UnknownAtom(a.clone())),
        LambekType::Tensor(a, b) | LambekType::Under(a, b) | LambekType::Over(a, b) => {
            Ok(Space::tensor(type_space(a, i0)?, type_space(b, i0)?))
        }
    }
}

/// The linear map denoted by a proof.
pub fn interpret(p: &NLProof, i0: &AtomSpaces) -> Result<LinearMap, NLError> {
    check(p)?;
    interpret_checked(p, i0)
}

fn interpret_checked(p: &NLProof, i0: &AtomSpaces) -> Result<LinearMap, NLError> {
    let sp = |t: &LambekType| type_space(t, i0);
    Ok(match p {
        NLProof::Id(t) => identity(&sp(t)?),
        NLProof::Comp(g, f) => crate::fvect::compose(&interpret_checked(g, i0)?, &interpret_checked(f, i0)?)?,
        NLProof::R1(f) => {
            // A → A⊗I → A⊗(B⊗B) → (A⊗B)⊗B → C⊗B
            let (src, _) = check(f)?;
            let LambekType::Tensor(a, b) = src else { unreachable!("checked") };
            let (a, b) = (sp(&a)?, sp(&b)?);
            pipeline(&[
                unit_right_inv(&a),
                map_tensor(&identity(&a), &eta(&b)?),
                assoc_inv(&a, &b, &b),
                map_tensor(&interpret_checked(f, i0)?, &identity(&b)),
            ])?
            .to_matrix()?
        }
        NLProof::R2(f) => {
            // B → I⊗B → (A⊗A)⊗B → A⊗(A⊗B) → A⊗C
            let (src, _) = check(f)?;
            let LambekType::Tensor(a, b) = src else { unreachable!("checked") };
            let (a, b) = (sp(&a)?, sp(&b)?);
            pipeline(&[
                unit_left_inv(&b),
                map_tensor(&eta(&a)?, &identity(&b)),
                assoc(&a, &a, &b),
                map_tensor(&identity(&a), &interpret_checked(f, i0)?),
            ])?
            .to_matrix()?
        }
        NLProof::R1Inv(g) => {
            // A⊗B → (C⊗B)⊗B → C⊗(B⊗B) → C⊗I → C
            let (_, tgt) = check(g)?;
            let LambekType::Over(c, b) = tgt else { unreachable!("checked") };
            let (c, b) = (sp(&c)?, sp(&b)?);
            pipeline(&[
                map_tensor(&interpret_checked(g, i0)?, &identity(&b)),
                assoc(&c, &b, &b),
                map_tensor(&identity(&c), &epsilon(&b)),
                unit_right(&c),
            ])?
            .to_matrix()?
        }
        NLProof::R2Inv(g) => {
            // A⊗B → A⊗(A⊗C) → (A⊗A)⊗C → I⊗C → C
            let (_, tgt) = check(g)?;
            let LambekType::Under(a, c) = tgt else { unreachable!("checked") };
            let (a, c) = (sp(&a)?, sp(&c)?);
            pipeline(&[
                map_tensor(&identity(&a), &interpret_checked(g, i0)?),
                assoc_inv(&a, &a, &c),
                map_tensor(&epsilon(&a), &identity(&c)),
                unit_left(&c),
            ])?
            .to_matrix()?
        }
    })
}

/// Applies the interpretation of `p` to the word vectors, combined
/// according to the product structure of the proof's source type.
pub fn sentence_value(p: &NLProof, i0: &AtomSpaces, words: &[Vector]) -> Result<Vector, NLError> {
    let (src, _) = check(p)?;
    let expected = count_leaves(&src);
    if expected != words.len() {
        return Err(NLError::Arity { expected, found: words.len() });
    }
    let mut next = 0;
    let input = assemble(&src, i0, words, &mut next)?;
    Ok(interpret_checked(p, i0)?.apply(&input)?)
}

fn count_leaves(t: &LambekType) -> usize {
    match t {
        LambekType::Tensor(a, b) => count_leaves(a) + count_leaves(b),
        _ => 1,
    }
}

fn assemble(t: &LambekType, i0: &AtomSpaces, words: &[Vector], next: &mut usize) -> Result<Vector, NLError> {
    if let LambekType::Tensor(a, b) = t {
        let l = assemble(a, i0, words, next)?;
        let r = assemble(b, i0, words, next)?;
        return Ok(tensor(&l, &r));
    }
    let index = *next;
    *next += 1;
    let expected = type_space(t, i0)?;
    let v = &words[index];
    if *v.space() != expected {
        return Err(NLError::WordSpace { index, expected: expected.to_string(), found: v.space().to_string() });
    }
    Ok(v.clone())
}
