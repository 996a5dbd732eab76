use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{tensor, BasisElem, FvectError, Space, Vector};
use crate::scalar::Scalar;

type BasisFn = dyn Fn(&BasisElem) -> Vector + Send + Sync;

enum Op {
    Identity,
    Matrix(BTreeMap<BasisElem, Vector>),
    Basis(Arc<BasisFn>),
    /// `outer ∘ inner`
    Compose(LinearMap, LinearMap),
    Tensor(LinearMap, LinearMap),
}

/// A linear map given by its action on basis vectors.
///
/// Compositions and tensor products are kept as pipelines; nothing is
/// materialised until [`LinearMap::to_matrix`] is called.
#[derive(Clone)]
pub struct LinearMap {
    domain: Space,
    codomain: Space,
    op: Arc<Op>,
}

impl LinearMap {
    pub fn domain(&self) -> &Space {
        &self.domain
    }

    pub fn codomain(&self) -> &Space {
        &self.codomain
    }

    /// Builds a map from its images of basis vectors. `action` must return
    /// vectors of `codomain`.
    pub fn from_basis_fn<F>(domain: Space, codomain: Space, action: F) -> Self
    where
        F: Fn(&BasisElem) -> Vector + Send + Sync + 'static,
    {
        LinearMap { domain, codomain, op: Arc::new(Op::Basis(Arc::new(action))) }
    }

    /// Builds a map from an explicit matrix, which must cover every domain
    /// basis element.
    pub fn from_matrix(
        domain: Space,
        codomain: Space,
        columns: BTreeMap<BasisElem, Vector>,
    ) -> Result<Self, FvectError> {
        for e in domain.basis()? {
            let col = columns.get(&e).ok_or_else(|| FvectError::IncompleteMatrix(domain.show_elem(&e)))?;
            if *col.space() != codomain {
                return Err(FvectError::SpaceMismatch {
                    expected: codomain.to_string(),
                    found: col.space().to_string(),
                });
            }
        }
        if let Some(extra) = columns.keys().find(|e| !domain.contains(e)) {
            return Err(FvectError::NotInSpace { elem: format!("{extra:?}"), space: domain.to_string() });
        }
        Ok(LinearMap { domain, codomain, op: Arc::new(Op::Matrix(columns)) })
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector, FvectError> {
        if *v.space() != self.domain {
            return Err(FvectError::SpaceMismatch { expected: self.domain.to_string(), found: v.space().to_string() });
        }
        Ok(self.apply_unchecked(v))
    }

    fn apply_unchecked(&self, v: &Vector) -> Vector {
        match &*self.op {
            Op::Identity => v.clone(),
            Op::Compose(outer, inner) => outer.apply_unchecked(&inner.apply_unchecked(v)),
            _ => {
                let mut out = Vector::zero(self.codomain.clone());
                for (e, c) in v.terms() {
                    out.add_scaled_unchecked(c, &self.image(e));
                }
                out
            }
        }
    }

    /// Image of a single basis vector.
    pub fn apply_basis(&self, e: &BasisElem) -> Result<Vector, FvectError> {
        if !self.domain.contains(e) {
            return Err(FvectError::NotInSpace { elem: format!("{e:?}"), space: self.domain.to_string() });
        }
        Ok(self.image(e))
    }

    fn image(&self, e: &BasisElem) -> Vector {
        match &*self.op {
            Op::Identity => Vector::from_terms_unchecked(self.domain.clone(), [(e.clone(), Scalar::one())]),
            Op::Matrix(m) => m.get(e).cloned().unwrap_or_else(|| Vector::zero(self.codomain.clone())),
            Op::Basis(f) => f(e),
            Op::Compose(outer, inner) => outer.apply_unchecked(&inner.image(e)),
            Op::Tensor(f, g) => match e {
                BasisElem::Pair(l, r) => tensor(&f.image(l), &g.image(r)),
                _ => Vector::zero(self.codomain.clone()),
            },
        }
    }

    /// Forces the pipeline into an explicit matrix.
    pub fn to_matrix(&self) -> Result<LinearMap, FvectError> {
        let mut columns = BTreeMap::new();
        for e in self.domain.basis()? {
            let col = self.image(&e);
            columns.insert(e, col);
        }
        Ok(LinearMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            op: Arc::new(Op::Matrix(columns)),
        })
    }

    /// Equality as matrices. Maps with different domain or codomain are unequal.
    pub fn equals(&self, other: &LinearMap) -> Result<bool, FvectError> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Ok(false);
        }
        for e in self.domain.basis()? {
            if !self.image(&e).approx_eq(&other.image(&e)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearMap({} -> {})", self.domain, self.codomain)
    }
}

pub fn identity(s: &Space) -> LinearMap {
    LinearMap { domain: s.clone(), codomain: s.clone(), op: Arc::new(Op::Identity) }
}

/// `g ∘ f`
pub fn compose(g: &LinearMap, f: &LinearMap) -> Result<LinearMap, FvectError> {
    if f.codomain != g.domain {
        return Err(FvectError::SpaceMismatch { expected: g.domain.to_string(), found: f.codomain.to_string() });
    }
    Ok(LinearMap {
        domain: f.domain.clone(),
        codomain: g.codomain.clone(),
        op: Arc::new(Op::Compose(g.clone(), f.clone())),
    })
}

/// Composes a pipeline given in application order (first map first).
pub fn pipeline(maps: &[LinearMap]) -> Result<LinearMap, FvectError> {
    let (first, rest) = maps.split_first().ok_or(FvectError::EmptyPipeline)?;
    rest.iter().try_fold(first.clone(), |acc, m| compose(m, &acc))
}

/// `f ⊗ g`
pub fn map_tensor(f: &LinearMap, g: &LinearMap) -> LinearMap {
    LinearMap {
        domain: Space::tensor(f.domain.clone(), g.domain.clone()),
        codomain: Space::tensor(f.codomain.clone(), g.codomain.clone()),
        op: Arc::new(Op::Tensor(f.clone(), g.clone())),
    }
}

fn tensor_parts(s: &Space) -> Result<(Space, Space), FvectError> {
    s.tensor_factors()
        .map(|(a, b)| (a.clone(), b.clone()))
        .ok_or_else(|| FvectError::WrongKind { expected: "tensor space", found: s.to_string() })
}

fn pair_parts(e: &BasisElem) -> (&BasisElem, &BasisElem) {
    match e {
        BasisElem::Pair(l, r) => (l, r),
        other => panic!("expected a pair basis element, found {other:?}"),
    }
}

/// `ε: s ⊗ s → I`, `|b⟩⊗|b'⟩ ↦ δ_{bb'}`.
pub fn epsilon(s: &Space) -> LinearMap {
    let domain = Space::tensor(s.clone(), s.clone());
    LinearMap::from_basis_fn(domain, Space::unit(), |e| {
        let (l, r) = pair_parts(e);
        if l == r {
            Vector::scalar(Scalar::one())
        } else {
            Vector::zero(Space::unit())
        }
    })
}

/// `η: I → s ⊗ s`, `1 ↦ Σ_b |b⟩⊗|b⟩`.
pub fn eta(s: &Space) -> Result<LinearMap, FvectError> {
    let codomain = Space::tensor(s.clone(), s.clone());
    let diag = Vector::from_terms_unchecked(
        codomain.clone(),
        s.basis()?.into_iter().map(|b| (BasisElem::pair(b.clone(), b), Scalar::one())),
    );
    Ok(LinearMap::from_basis_fn(Space::unit(), codomain, move |_| diag.clone()))
}

/// `σ: a ⊗ b → b ⊗ a`
pub fn swap(a: &Space, b: &Space) -> LinearMap {
    let codomain = Space::tensor(b.clone(), a.clone());
    let cod = codomain.clone();
    LinearMap::from_basis_fn(Space::tensor(a.clone(), b.clone()), codomain, move |e| {
        let (l, r) = pair_parts(e);
        Vector::from_terms_unchecked(cod.clone(), [(BasisElem::pair(r.clone(), l.clone()), Scalar::one())])
    })
}

/// `(a ⊗ b) ⊗ c → a ⊗ (b ⊗ c)`
pub fn assoc(a: &Space, b: &Space, c: &Space) -> LinearMap {
    let domain = Space::tensor(Space::tensor(a.clone(), b.clone()), c.clone());
    let codomain = Space::tensor(a.clone(), Space::tensor(b.clone(), c.clone()));
    let cod = codomain.clone();
    LinearMap::from_basis_fn(domain, codomain, move |e| {
        let (ab, z) = pair_parts(e);
        let (x, y) = pair_parts(ab);
        let out = BasisElem::pair(x.clone(), BasisElem::pair(y.clone(), z.clone()));
        Vector::from_terms_unchecked(cod.clone(), [(out, Scalar::one())])
    })
}

/// `a ⊗ (b ⊗ c) → (a ⊗ b) ⊗ c`
pub fn assoc_inv(a: &Space, b: &Space, c: &Space) -> LinearMap {
    let domain = Space::tensor(a.clone(), Space::tensor(b.clone(), c.clone()));
    let codomain = Space::tensor(Space::tensor(a.clone(), b.clone()), c.clone());
    let cod = codomain.clone();
    LinearMap::from_basis_fn(domain, codomain, move |e| {
        let (x, yz) = pair_parts(e);
        let (y, z) = pair_parts(yz);
        let out = BasisElem::pair(BasisElem::pair(x.clone(), y.clone()), z.clone());
        Vector::from_terms_unchecked(cod.clone(), [(out, Scalar::one())])
    })
}

/// `I ⊗ a → a`
pub fn unit_left(a: &Space) -> LinearMap {
    let cod = a.clone();
    LinearMap::from_basis_fn(Space::tensor(Space::unit(), a.clone()), a.clone(), move |e| {
        let (_, r) = pair_parts(e);
        Vector::from_terms_unchecked(cod.clone(), [(r.clone(), Scalar::one())])
    })
}

/// `a → I ⊗ a`
pub fn unit_left_inv(a: &Space) -> LinearMap {
    let codomain = Space::tensor(Space::unit(), a.clone());
    let cod = codomain.clone();
    LinearMap::from_basis_fn(a.clone(), codomain, move |e| {
        Vector::from_terms_unchecked(cod.clone(), [(BasisElem::pair(BasisElem::Unit, e.clone()), Scalar::one())])
    })
}

/// `a ⊗ I → a`
pub fn unit_right(a: &Space) -> LinearMap {
    let cod = a.clone();
    LinearMap::from_basis_fn(Space::tensor(a.clone(), Space::unit()), a.clone(), move |e| {
        let (l, _) = pair_parts(e);
        Vector::from_terms_unchecked(cod.clone(), [(l.clone(), Scalar::one())])
    })
}

/// `a → a ⊗ I`
pub fn unit_right_inv(a: &Space) -> LinearMap {
    let codomain = Space::tensor(a.clone(), Space::unit());
    let cod = codomain.clone();
    LinearMap::from_basis_fn(a.clone(), codomain, move |e| {
        Vector::from_terms_unchecked(cod.clone(), [(BasisElem::pair(e.clone(), BasisElem::Unit), Scalar::one())])
    })
}

/// Splits a tensor space into its two factors.
pub fn factors(s: &Space) -> Result<(Space, Space), FvectError> {
    tensor_parts(s)
}
