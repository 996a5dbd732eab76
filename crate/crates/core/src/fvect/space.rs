use std::fmt;
use std::sync::Arc;

use super::FvectError;

/// Largest base dimension whose powerset basis may be enumerated.
pub const POWER_CAP: usize = 16;

/// An ordered list of distinct individual labels.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Universe(Arc<Vec<String>>);

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self, FvectError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(FvectError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Universe(Arc::new(labels)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.iter().position(|l| l == label)
    }

    pub fn label(&self, i: usize) -> Option<&str> {
        self.0.get(i).map(String::as_str)
    }
}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.join(","))
    }
}

/// A basis element of some [`Space`].
///
/// `Subset` is a bitmask over the basis of the underlying space of a
/// powerset space: bit `i` set means the `i`-th base element is a member.
/// The mask is the canonical sorted, duplicate-free listing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisElem {
    Atom(usize),
    Subset(u32),
    Pair(Box<BasisElem>, Box<BasisElem>),
    Unit,
}

impl BasisElem {
    pub fn pair(left: BasisElem, right: BasisElem) -> Self {
        BasisElem::Pair(Box::new(left), Box::new(right))
    }
}

#[derive(PartialEq, Eq, Hash)]
pub enum SpaceKind {
    Atom(Universe),
    Power(Space),
    Tensor(Space, Space),
    /// The monoidal unit, a one-dimensional space identified with the scalars.
    Unit,
}

/// A finite-dimensional vector space with a fixed orthonormal basis.
#[derive(Clone)]
pub struct Space(Arc<SpaceKind>);

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Space {}

impl std::hash::Hash for Space {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl Space {
    pub fn atoms(universe: Universe) -> Self {
        Space(Arc::new(SpaceKind::Atom(universe)))
    }

    /// Vector space over the subsets of the basis of `base`.
    pub fn power(base: Space) -> Self {
        Space(Arc::new(SpaceKind::Power(base)))
    }

    /// `V_{P(U)}`
    pub fn powerset(universe: Universe) -> Self {
        Space::power(Space::atoms(universe))
    }

    pub fn tensor(left: Space, right: Space) -> Self {
        Space(Arc::new(SpaceKind::Tensor(left, right)))
    }

    pub fn unit() -> Self {
        Space(Arc::new(SpaceKind::Unit))
    }

    /// The scalar field viewed as a space; the same object as [`Space::unit`].
    pub fn scalar() -> Self {
        Space::unit()
    }

    pub fn tensor_all(spaces: impl IntoIterator<Item = Space>) -> Option<Self> {
        spaces.into_iter().reduce(Space::tensor)
    }

    pub fn kind(&self) -> &SpaceKind {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        matches!(*self.0, SpaceKind::Unit)
    }

    /// The underlying space when `self` is a powerset space.
    pub fn power_base(&self) -> Option<&Space> {
        match &*self.0 {
            SpaceKind::Power(base) => Some(base),
            _ => None,
        }
    }

    pub fn tensor_factors(&self) -> Option<(&Space, &Space)> {
        match &*self.0 {
            SpaceKind::Tensor(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn universe(&self) -> Option<&Universe> {
        match &*self.0 {
            SpaceKind::Atom(u) => Some(u),
            _ => None,
        }
    }

    pub fn dim(&self) -> Result<usize, FvectError> {
        match &*self.0 {
            SpaceKind::Atom(u) => Ok(u.len()),
            SpaceKind::Power(base) => {
                let k = base.dim()?;
                if k > POWER_CAP {
                    return Err(FvectError::TooLarge { base_dim: k, cap: POWER_CAP });
                }
                Ok(1usize << k)
            }
            SpaceKind::Tensor(a, b) => Ok(a.dim()? * b.dim()?),
            SpaceKind::Unit => Ok(1),
        }
    }

    /// Basis in canonical order: universe order for atoms, mask order
    /// for subsets, lexicographic for pairs.
    pub fn basis(&self) -> Result<Vec<BasisElem>, FvectError> {
        match &*self.0 {
            SpaceKind::Atom(u) => Ok((0..u.len()).map(BasisElem::Atom).collect()),
            SpaceKind::Power(_) => {
                let n = self.dim()?;
                Ok((0..n as u32).map(BasisElem::Subset).collect())
            }
            SpaceKind::Tensor(a, b) => {
                let left = a.basis()?;
                let right = b.basis()?;
                let mut out = Vec::with_capacity(left.len() * right.len());
                for l in &left {
                    for r in &right {
                        out.push(BasisElem::pair(l.clone(), r.clone()));
                    }
                }
                Ok(out)
            }
            SpaceKind::Unit => Ok(vec![BasisElem::Unit]),
        }
    }

    pub fn contains(&self, e: &BasisElem) -> bool {
        match (&*self.0, e) {
            (SpaceKind::Atom(u), BasisElem::Atom(i)) => *i < u.len(),
            (SpaceKind::Power(base), BasisElem::Subset(mask)) => match base.dim() {
                Ok(k) if k <= POWER_CAP => (*mask >> k) == 0,
                _ => false,
            },
            (SpaceKind::Tensor(a, b), BasisElem::Pair(l, r)) => a.contains(l) && b.contains(r),
            (SpaceKind::Unit, BasisElem::Unit) => true,
            _ => false,
        }
    }

    /// Position of `e` in [`Space::basis`].
    pub fn index_of(&self, e: &BasisElem) -> Option<usize> {
        if !self.contains(e) {
            return None;
        }
        match (&*self.0, e) {
            (SpaceKind::Atom(_), BasisElem::Atom(i)) => Some(*i),
            (SpaceKind::Power(_), BasisElem::Subset(mask)) => Some(*mask as usize),
            (SpaceKind::Tensor(a, b), BasisElem::Pair(l, r)) => Some(a.index_of(l)? * b.dim().ok()? + b.index_of(r)?),
            (SpaceKind::Unit, BasisElem::Unit) => Some(0),
            _ => None,
        }
    }

    /// Basis element for an individual label of an atom space.
    pub fn atom_elem(&self, label: &str) -> Result<BasisElem, FvectError> {
        let u =
            self.universe().ok_or_else(|| FvectError::WrongKind { expected: "atom space", found: self.to_string() })?;
        u.index_of(label).map(BasisElem::Atom).ok_or_else(|| FvectError::UnknownLabel(label.to_string()))
    }

    /// Basis element `|{labels}⟩` of a powerset space over an atom space.
    pub fn subset_elem<S: AsRef<str>>(&self, labels: &[S]) -> Result<BasisElem, FvectError> {
        let base = self
            .power_base()
            .ok_or_else(|| FvectError::WrongKind { expected: "powerset space", found: self.to_string() })?;
        let mut mask = 0u32;
        for l in labels {
            match base.atom_elem(l.as_ref())? {
                BasisElem::Atom(i) => mask |= 1 << i,
                _ => unreachable!("atom_elem returns atoms"),
            }
        }
        Ok(BasisElem::Subset(mask))
    }

    /// Human-readable rendering of a basis element of this space.
    pub fn show_elem(&self, e: &BasisElem) -> String {
        match (&*self.0, e) {
            (SpaceKind::Atom(u), BasisElem::Atom(i)) => u.label(*i).map_or_else(|| format!("#{i}"), str::to_string),
            (SpaceKind::Power(base), BasisElem::Subset(mask)) => {
                let members: Vec<String> = base
                    .basis()
                    .unwrap_or_default()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i < 32 && mask & (1 << i) != 0)
                    .map(|(_, b)| base.show_elem(b))
                    .collect();
                format!("{{{}}}", members.join(","))
            }
            (SpaceKind::Tensor(a, b), BasisElem::Pair(l, r)) => {
                format!("{}⊗{}", a.show_elem(l), b.show_elem(r))
            }
            (SpaceKind::Unit, BasisElem::Unit) => "1".to_string(),
            _ => format!("{e:?}"),
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            SpaceKind::Atom(u) => write!(f, "V{u:?}"),
            SpaceKind::Power(base) => write!(f, "P({base})"),
            SpaceKind::Tensor(a, b) => write!(f, "({a} ⊗ {b})"),
            SpaceKind::Unit => f.write_str("I"),
        }
    }
}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
