//! The bialgebra carried by every powerset space, and the two quantifier
//! maps defined on it.
//!
//! | map | action |
//! |-----|--------|
//! | δ | `|A⟩ ↦ |A⟩ ⊗ |A⟩` |
//! | μ | `|A⟩ ⊗ |B⟩ ↦ |A ∩ B⟩` |
//! | ι | `|A⟩ ↦ 1` |
//! | ζ | `1 ↦ |U⟩` |

use super::{BasisElem, FvectError, LinearMap, Space, Vector};
use crate::scalar::Scalar;

fn mask_of(e: &BasisElem) -> u32 {
    match e {
        BasisElem::Subset(m) => *m,
        other => panic!("expected a subset basis element, found {other:?}"),
    }
}

/// Checks that `p` is a powerset space and returns the full-set mask.
fn full_mask(p: &Space) -> Result<u32, FvectError> {
    let base =
        p.power_base().ok_or_else(|| FvectError::WrongKind { expected: "powerset space", found: p.to_string() })?;
    p.dim()?;
    let k = base.dim()?;
    Ok(if k == 0 { 0 } else { u32::MAX >> (32 - k) })
}

fn subset_vec(p: &Space, masks: impl IntoIterator<Item = u32>) -> Vector {
    Vector::from_terms_unchecked(p.clone(), masks.into_iter().map(|m| (BasisElem::Subset(m), Scalar::one())))
}

/// Copying, `δ: P → P ⊗ P`.
pub fn delta(p: &Space) -> Result<LinearMap, FvectError> {
    full_mask(p)?;
    let cod = Space::tensor(p.clone(), p.clone());
    let c = cod.clone();
    Ok(LinearMap::from_basis_fn(p.clone(), cod, move |e| {
        Vector::from_terms_unchecked(c.clone(), [(BasisElem::pair(e.clone(), e.clone()), Scalar::one())])
    }))
}

/// Merging by intersection, `μ: P ⊗ P → P`.
pub fn mu(p: &Space) -> Result<LinearMap, FvectError> {
    merge_with(p, |a, b| a & b)
}

/// A merge map `|A⟩ ⊗ |B⟩ ↦ |op(A, B)⟩` for an arbitrary mask operation.
pub fn merge_with<F>(p: &Space, op: F) -> Result<LinearMap, FvectError>
where
    F: Fn(u32, u32) -> u32 + Send + Sync + 'static,
{
    full_mask(p)?;
    let out = p.clone();
    Ok(LinearMap::from_basis_fn(Space::tensor(p.clone(), p.clone()), p.clone(), move |e| match e {
        BasisElem::Pair(l, r) => subset_vec(&out, [op(mask_of(l), mask_of(r))]),
        _ => Vector::zero(out.clone()),
    }))
}

/// Deleting, `ι: P → I`.
pub fn iota(p: &Space) -> Result<LinearMap, FvectError> {
    full_mask(p)?;
    Ok(LinearMap::from_basis_fn(p.clone(), Space::unit(), |_| Vector::scalar(Scalar::one())))
}

/// The whole set, `ζ: I → P`.
pub fn zeta(p: &Space) -> Result<LinearMap, FvectError> {
    let full = full_mask(p)?;
    let out = p.clone();
    Ok(LinearMap::from_basis_fn(Space::unit(), p.clone(), move |_| subset_vec(&out, [full])))
}

/// Universal determiner, `|A⟩ ↦ Σ_{A ⊆ B ⊆ U} |B⟩`.
pub fn quant_all(p: &Space) -> Result<LinearMap, FvectError> {
    let full = full_mask(p)?;
    let out = p.clone();
    Ok(LinearMap::from_basis_fn(p.clone(), p.clone(), move |e| {
        let a = mask_of(e);
        let free = full & !a;
        // Enumerate every subset of the complement and add it to A.
        let mut masks = Vec::new();
        let mut sub = free;
        loop {
            masks.push(a | sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
        subset_vec(&out, masks)
    }))
}

/// Existential determiner, `|A⟩ ↦ Σ_{B : A ∩ B ≠ ∅} |B⟩`.
pub fn quant_some(p: &Space) -> Result<LinearMap, FvectError> {
    let full = full_mask(p)?;
    let out = p.clone();
    Ok(LinearMap::from_basis_fn(p.clone(), p.clone(), move |e| {
        let a = mask_of(e);
        subset_vec(&out, (0..=full).filter(|b| a & b != 0))
    }))
}
