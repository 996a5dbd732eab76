use std::fmt;
use std::sync::Arc;

use super::{SemError, SemExpr, SemLexicon};
use crate::fvect::{BasisElem, Space, Universe, Vector};
use crate::scalar::Scalar;

/// Largest comprehension range, in basis elements, evaluated by default.
pub const DEFAULT_COMPREHENSION_CAP: usize = 16;

type HostFn = dyn Fn(SemValue) -> Result<SemValue, EvalError> + Send + Sync;

/// A host closure with a name for display.
#[derive(Clone)]
pub struct SemFn {
    name: Arc<str>,
    f: Arc<HostFn>,
}

impl SemFn {
    pub fn new<F>(name: &str, f: F) -> Self
    where
        F: Fn(SemValue) -> Result<SemValue, EvalError> + Send + Sync + 'static,
    {
        SemFn { name: name.into(), f: Arc::new(f) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn call(&self, arg: SemValue) -> Result<SemValue, EvalError> {
        (self.f)(arg)
    }
}

impl fmt::Debug for SemFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.name)
    }
}

#[derive(Debug, Clone)]
pub enum SemValue {
    Scalar(Scalar),
    Vector(Vector),
    Tuple(Vec<SemValue>),
    Func(SemFn),
}

impl SemValue {
    /// The identity continuation.
    pub fn identity() -> Self {
        SemValue::Func(SemFn::new("id", Ok))
    }

    /// A tuple is zero as soon as one component is.
    pub fn is_nonzero(&self) -> Result<bool, EvalError> {
        match self {
            SemValue::Scalar(c) => Ok(!c.is_zero()),
            SemValue::Vector(v) => Ok(!v.is_zero()),
            SemValue::Tuple(items) => {
                for i in items {
                    if !i.is_nonzero()? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            SemValue::Func(f) => Err(EvalError::ZeroTest(f.name().to_string())),
        }
    }

    /// Components of nested tuples, left to right.
    pub fn flatten(self) -> Vec<SemValue> {
        match self {
            SemValue::Tuple(items) => items.into_iter().flat_map(SemValue::flatten).collect(),
            v => vec![v],
        }
    }

    /// A scalar, or a vector of the one-dimensional unit space.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self {
            SemValue::Scalar(c) => Some(c.clone()),
            SemValue::Vector(v) if v.space().is_unit() => v.as_scalar().ok(),
            _ => None,
        }
    }
}

impl fmt::Display for SemValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemValue::Scalar(c) => write!(f, "{c}"),
            SemValue::Vector(v) => write!(f, "{v}"),
            SemValue::Tuple(items) => {
                f.write_str("(")?;
                for (i, v) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ⊗ ")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str(")")
            }
            SemValue::Func(g) => write!(f, "<{}>", g.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("unbound variable `{0}`")]
    Unbound(String),
    #[error("unknown primitive `{0}`")]
    UnknownPrimitive(String),
    #[error("cannot apply {0}")]
    NotAFunction(String),
    #[error("cannot split {0} into a pair")]
    NotAPair(String),
    #[error("cannot compare the function <{0}> with zero")]
    ZeroTest(String),
    #[error("comprehension over {dim} basis elements exceeds the cap of {cap}")]
    Cap { dim: usize, cap: usize },
    #[error("<{prim}>: {msg}")]
    BadArgument { prim: String, msg: String },
    #[error(transparent)]
    Sem(#[from] SemError),
}

struct Frame {
    name: String,
    value: SemValue,
    rest: Env,
}

/// A persistent variable environment.
#[derive(Clone, Default)]
pub struct Env(Option<Arc<Frame>>);

impl Env {
    pub fn empty() -> Self {
        Env(None)
    }

    pub fn bind(&self, name: impl Into<String>, value: SemValue) -> Env {
        Env(Some(Arc::new(Frame { name: name.into(), value, rest: self.clone() })))
    }

    pub fn get(&self, name: &str) -> Option<&SemValue> {
        let mut cur = &self.0;
        while let Some(frame) = cur {
            if frame.name == name {
                return Some(&frame.value);
            }
            cur = &frame.rest.0;
        }
        None
    }
}

impl fmt::Debug for Env {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        let mut cur = &self.0;
        while let Some(frame) = cur {
            list.entry(&frame.name);
            cur = &frame.rest.0;
        }
        list.finish()
    }
}

/// Primitives and limits shared by an evaluation.
#[derive(Debug, Clone)]
pub struct EvalContext {
    lexicon: Arc<SemLexicon>,
    cap: usize,
}

impl EvalContext {
    pub fn new(lexicon: SemLexicon) -> Self {
        EvalContext { lexicon: Arc::new(lexicon), cap: DEFAULT_COMPREHENSION_CAP }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn lexicon(&self) -> &SemLexicon {
        &self.lexicon
    }

    pub fn universe(&self) -> &Universe {
        self.lexicon.universe()
    }
}

pub fn evaluate(e: &SemExpr, env: &Env, ctx: &EvalContext) -> Result<SemValue, EvalError> {
    match e {
        SemExpr::Var(x) => env.get(x).cloned().ok_or_else(|| EvalError::Unbound(x.clone())),
        SemExpr::Prim(k) => ctx.lexicon.get(k).cloned().ok_or_else(|| EvalError::UnknownPrimitive(k.clone())),
        SemExpr::Tensor(a, b) => Ok(SemValue::Tuple(vec![evaluate(a, env, ctx)?, evaluate(b, env, ctx)?])),
        SemExpr::Apply(fun, arg) => match evaluate(fun, env, ctx)? {
            SemValue::Func(f) => f.call(evaluate(arg, env, ctx)?),
            other => Err(EvalError::NotAFunction(other.to_string())),
        },
        SemExpr::Lambda(x, body) => {
            let (x, body, env, ctx) = (x.clone(), Arc::new((**body).clone()), env.clone(), ctx.clone());
            let name = format!("λ{x}");
            Ok(SemValue::Func(SemFn::new(&name, move |v| evaluate(&body, &env.bind(x.clone(), v), &ctx))))
        }
        SemExpr::Comprehend { var, range, body } => {
            let space = range.set.space(ctx.universe())?;
            let basis = space.basis().map_err(SemError::from)?;
            if basis.len() > ctx.cap {
                return Err(EvalError::Cap { dim: basis.len(), cap: ctx.cap });
            }
            let mut mask = 0u32;
            for (i, elem) in basis.into_iter().enumerate() {
                let point = Vector::basis(space.clone(), elem).map_err(SemError::from)?;
                if evaluate(body, &env.bind(var.clone(), SemValue::Vector(point)), ctx)?.is_nonzero()? {
                    mask |= 1 << i;
                }
            }
            let power = Space::power(space);
            Ok(SemValue::Vector(Vector::basis(power, BasisElem::Subset(mask)).map_err(SemError::from)?))
        }
        SemExpr::Split { scrutinee, left, right, body } => match evaluate(scrutinee, env, ctx)? {
            SemValue::Tuple(items) if items.len() == 2 => {
                let mut it = items.into_iter();
                let (l, r) = (it.next().expect("two items"), it.next().expect("two items"));
                evaluate(body, &env.bind(left.clone(), l).bind(right.clone(), r), ctx)
            }
            other => Err(EvalError::NotAPair(other.to_string())),
        },
    }
}

/// Evaluates a closed expression, feeding the identity continuation to a
/// resulting function.
pub fn evaluate_reading(e: &SemExpr, ctx: &EvalContext) -> Result<SemValue, EvalError> {
    match evaluate(e, &Env::empty(), ctx)? {
        SemValue::Func(f) => f.call(SemValue::identity()),
        v => Ok(v),
    }
}
