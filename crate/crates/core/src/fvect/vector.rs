use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::{BasisElem, FvectError, Space};
use crate::scalar::Scalar;

/// A sparse vector; zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct Vector {
    space: Space,
    coeffs: BTreeMap<BasisElem, Scalar>,
}

impl Vector {
    pub fn zero(space: Space) -> Self {
        Vector { space, coeffs: BTreeMap::new() }
    }

    pub fn basis(space: Space, e: BasisElem) -> Result<Self, FvectError> {
        Vector::from_terms(space, [(e, Scalar::one())])
    }

    /// Sums the given terms; repeated basis elements accumulate.
    pub fn from_terms(space: Space, terms: impl IntoIterator<Item = (BasisElem, Scalar)>) -> Result<Self, FvectError> {
        let mut v = Vector::zero(space);
        for (e, c) in terms {
            if !v.space.contains(&e) {
                return Err(FvectError::NotInSpace { elem: format!("{e:?}"), space: v.space.to_string() });
            }
            v.add_term(e, c);
        }
        Ok(v)
    }

    /// Caller guarantees that every element belongs to `space`.
    pub(crate) fn from_terms_unchecked(space: Space, terms: impl IntoIterator<Item = (BasisElem, Scalar)>) -> Self {
        let mut v = Vector::zero(space);
        for (e, c) in terms {
            v.add_term(e, c);
        }
        v
    }

    /// The scalar `c` as a vector of the unit space.
    pub fn scalar(c: Scalar) -> Self {
        Vector::from_terms_unchecked(Space::unit(), [(BasisElem::Unit, c)])
    }

    /// `|label⟩` in an atom space.
    pub fn atom(space: &Space, label: &str) -> Result<Self, FvectError> {
        let e = space.atom_elem(label)?;
        Vector::basis(space.clone(), e)
    }

    /// `|{labels}⟩` in a powerset space.
    pub fn subset<S: AsRef<str>>(space: &Space, labels: &[S]) -> Result<Self, FvectError> {
        let e = space.subset_elem(labels)?;
        Vector::basis(space.clone(), e)
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: &BasisElem) -> Scalar {
        self.coeffs.get(e).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisElem, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of the single unit-space basis vector.
    pub fn as_scalar(&self) -> Result<Scalar, FvectError> {
        if !self.space.is_unit() {
            return Err(FvectError::WrongKind { expected: "unit space", found: self.space.to_string() });
        }
        Ok(self.coeff(&BasisElem::Unit))
    }

    fn add_term(&mut self, e: BasisElem, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `self += c * other`; spaces must agree.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Vector) -> Result<(), FvectError> {
        self.check_same_space(other)?;
        self.add_scaled_unchecked(c, other);
        Ok(())
    }

    pub(crate) fn add_scaled_unchecked(&mut self, c: &Scalar, other: &Vector) {
        if c.is_zero() {
            return;
        }
        for (e, x) in &other.coeffs {
            self.add_term(e.clone(), c * x);
        }
    }

    pub fn add(&self, other: &Vector) -> Result<Vector, FvectError> {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), other)?;
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector::from_terms_unchecked(self.space.clone(), self.coeffs.iter().map(|(e, x)| (e.clone(), c * x)))
    }

    fn check_same_space(&self, other: &Vector) -> Result<(), FvectError> {
        if self.space != other.space {
            return Err(FvectError::SpaceMismatch { expected: self.space.to_string(), found: other.space.to_string() });
        }
        Ok(())
    }

    /// Equality up to the scalar comparison rule of the build.
    pub fn approx_eq(&self, other: &Vector) -> bool {
        if self.space != other.space {
            return false;
        }
        let keys: std::collections::BTreeSet<&BasisElem> = self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.into_iter().all(|k| self.coeff(k).approx_eq(&other.coeff(k)))
    }
}

/// `v ⊗ w`: the coefficient of `(b1, b2)` is `v[b1] · w[b2]`.
pub fn tensor(v: &Vector, w: &Vector) -> Vector {
    let space = Space::tensor(v.space.clone(), w.space.clone());
    let mut coeffs = BTreeMap::new();
    for (b1, c1) in &v.coeffs {
        for (b2, c2) in &w.coeffs {
            let c = c1 * c2;
            if !c.is_zero() {
                coeffs.insert(BasisElem::pair(b1.clone(), b2.clone()), c);
            }
        }
    }
    Vector { space, coeffs }
}

/// `⟨v|w⟩` in the orthonormal basis.
pub fn inner(v: &Vector, w: &Vector) -> Result<Scalar, FvectError> {
    v.check_same_space(w)?;
    let (small, large) = if v.coeffs.len() <= w.coeffs.len() { (v, w) } else { (w, v) };
    Ok(small.coeffs.iter().filter_map(|(e, c)| large.coeffs.get(e).map(|d| c * d)).sum())
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let one = Scalar::one();
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *c != one {
                write!(f, "{c}")?;
            }
            write!(f, "|{}⟩", self.space.show_elem(e))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.space)
    }
}
