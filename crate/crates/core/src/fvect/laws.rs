//! Map equalities for compact closure and the powerset bialgebra, stated
//! with explicit associators and unitors.

use super::*;

/// `(id ⊗ ε) ∘ α ∘ (η ⊗ id)`, bracketed as `A → I⊗A → (A⊗A)⊗A → A⊗(A⊗A) → A⊗I → A`.
pub fn snake_left(a: &Space) -> Result<LinearMap, FvectError> {
    pipeline(&[
        unit_left_inv(a),
        map_tensor(&eta(a)?, &identity(a)),
        assoc(a, a, a),
        map_tensor(&identity(a), &epsilon(a)),
        unit_right(a),
    ])
}

/// `(ε ⊗ id) ∘ α⁻¹ ∘ (id ⊗ η)`, bracketed as `A → A⊗I → A⊗(A⊗A) → (A⊗A)⊗A → I⊗A → A`.
pub fn snake_right(a: &Space) -> Result<LinearMap, FvectError> {
    pipeline(&[
        unit_right_inv(a),
        map_tensor(&identity(a), &eta(a)?),
        assoc_inv(a, a, a),
        map_tensor(&epsilon(a), &identity(a)),
        unit_left(a),
    ])
}

/// Named yanking equations. With a fixed basis both duals of `A` are `A`
/// itself, so the left- and right-dual equations are instances of the two
/// snakes on `A`.
pub fn yanking(a: &Space) -> Result<Vec<(&'static str, bool)>, FvectError> {
    let id = identity(a);
    let left = snake_left(a)?.equals(&id)?;
    let right = snake_right(a)?.equals(&id)?;
    Ok(vec![
        ("(id_A ⊗ ε^l) ∘ (η^l ⊗ id_A) = id_A", left),
        ("(ε^l ⊗ id_A^l) ∘ (id_A^l ⊗ η^l) = id_A^l", right),
        ("(ε^r ⊗ id_A) ∘ (id_A ⊗ η^r) = id_A", right),
        ("(id_A^r ⊗ ε^r) ∘ (η^r ⊗ id_A^r) = id_A^r", left),
    ])
}

/// The four structure maps of a bialgebra on a powerset space.
#[derive(Clone, Debug)]
pub struct BialgebraMaps {
    pub space: Space,
    pub delta: LinearMap,
    pub mu: LinearMap,
    pub iota: LinearMap,
    pub zeta: LinearMap,
}

impl BialgebraMaps {
    pub fn powerset(p: &Space) -> Result<Self, FvectError> {
        Ok(BialgebraMaps { space: p.clone(), delta: delta(p)?, mu: mu(p)?, iota: iota(p)?, zeta: zeta(p)? })
    }

    /// Same maps with the merge replaced.
    pub fn with_mu(mut self, mu: LinearMap) -> Self {
        self.mu = mu;
        self
    }
}

/// Associativity and both unit laws for `(P, μ, ζ)`.
pub fn monoid_laws(m: &BialgebraMaps) -> Result<Vec<(&'static str, bool)>, FvectError> {
    let p = &m.space;
    let id = identity(p);
    let assoc_l = compose(&m.mu, &map_tensor(&m.mu, &id))?;
    let assoc_r = pipeline(&[assoc(p, p, p), map_tensor(&id, &m.mu), m.mu.clone()])?;
    let unit_l = compose(&m.mu, &map_tensor(&m.zeta, &id))?;
    let unit_r = compose(&m.mu, &map_tensor(&id, &m.zeta))?;
    Ok(vec![
        ("μ ∘ (μ ⊗ id) = μ ∘ (id ⊗ μ) ∘ α", assoc_l.equals(&assoc_r)?),
        ("μ ∘ (ζ ⊗ id) = λ", unit_l.equals(&unit_left(p))?),
        ("μ ∘ (id ⊗ ζ) = ρ", unit_r.equals(&unit_right(p))?),
    ])
}

/// Coassociativity and both counit laws for `(P, δ, ι)`.
pub fn comonoid_laws(m: &BialgebraMaps) -> Result<Vec<(&'static str, bool)>, FvectError> {
    let p = &m.space;
    let id = identity(p);
    let coassoc_l = compose(&map_tensor(&m.delta, &id), &m.delta)?;
    let coassoc_r = pipeline(&[m.delta.clone(), map_tensor(&id, &m.delta), assoc_inv(p, p, p)])?;
    let counit_l = compose(&map_tensor(&m.iota, &id), &m.delta)?;
    let counit_r = compose(&map_tensor(&id, &m.iota), &m.delta)?;
    Ok(vec![
        ("(δ ⊗ id) ∘ δ = α⁻¹ ∘ (id ⊗ δ) ∘ δ", coassoc_l.equals(&coassoc_r)?),
        ("(ι ⊗ id) ∘ δ = λ⁻¹", counit_l.equals(&unit_left_inv(p))?),
        ("(id ⊗ ι) ∘ δ = ρ⁻¹", counit_r.equals(&unit_right_inv(p))?),
    ])
}

/// `(a⊗b)⊗(c⊗d) → (a⊗c)⊗(b⊗d)`, i.e. `id ⊗ σ ⊗ id` with the bracketing
/// made explicit.
pub fn middle_swap(p: &Space) -> Result<LinearMap, FvectError> {
    let id = identity(p);
    let pp = Space::tensor(p.clone(), p.clone());
    pipeline(&[
        assoc(p, p, &pp),
        map_tensor(&id, &assoc_inv(p, p, p)),
        map_tensor(&id, &map_tensor(&swap(p, p), &id)),
        map_tensor(&id, &assoc(p, p, p)),
        assoc_inv(p, p, &pp),
    ])
}

/// The four compatibility axioms of a bialgebra.
pub fn bialgebra_axioms(m: &BialgebraMaps) -> Result<Vec<(&'static str, bool)>, FvectError> {
    let p = &m.space;
    let i = Space::unit();
    let a1_l = compose(&m.iota, &m.mu)?;
    let a1_r = compose(&unit_left(&i), &map_tensor(&m.iota, &m.iota))?;
    let a2_l = compose(&m.delta, &m.zeta)?;
    let a2_r = compose(&map_tensor(&m.zeta, &m.zeta), &unit_left_inv(&i))?;
    let a3_l = compose(&m.iota, &m.zeta)?;
    let a4_l = compose(&m.delta, &m.mu)?;
    let a4_r = pipeline(&[map_tensor(&m.delta, &m.delta), middle_swap(p)?, map_tensor(&m.mu, &m.mu)])?;
    Ok(vec![
        ("ι ∘ μ = ι ⊗ ι", a1_l.equals(&a1_r)?),
        ("δ ∘ ζ = ζ ⊗ ζ", a2_l.equals(&a2_r)?),
        ("ι ∘ ζ = id_I", a3_l.equals(&identity(&i))?),
        ("δ ∘ μ = (μ ⊗ μ) ∘ (id ⊗ σ ⊗ id) ∘ (δ ⊗ δ)", a4_l.equals(&a4_r)?),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn universes() -> Vec<Universe> {
        vec![Universe::new(["a"]).unwrap(), Universe::new(["a", "b"]).unwrap(), Universe::new(["a", "b", "c"]).unwrap()]
    }

    #[test]
    fn yanking_on_atom_and_power_spaces() {
        for u in universes() {
            for s in [Space::atoms(u.clone()), Space::powerset(u)] {
                for (name, ok) in yanking(&s).unwrap() {
                    assert!(ok, "{name} fails on {s}");
                }
            }
        }
    }

    #[test]
    fn powerset_bialgebra_laws() {
        for u in universes() {
            let m = BialgebraMaps::powerset(&Space::powerset(u)).unwrap();
            let all = [monoid_laws(&m).unwrap(), comonoid_laws(&m).unwrap(), bialgebra_axioms(&m).unwrap()];
            for (name, ok) in all.iter().flatten() {
                assert!(ok, "{name}");
            }
        }
    }

    #[test]
    fn union_merge_breaks_the_bialgebra() {
        let p = Space::powerset(Universe::new(["a", "b"]).unwrap());
        let m = BialgebraMaps::powerset(&p).unwrap();
        let broken = m.clone().with_mu(merge_with(&p, |a, b| a | b).unwrap());
        // Union still satisfies the four compatibility axioms; it is the
        // unit law for ζ = |U⟩ that breaks.
        assert!(bialgebra_axioms(&broken).unwrap().iter().all(|(_, ok)| *ok));
        let monoid = monoid_laws(&broken).unwrap();
        assert!(monoid[0].1);
        assert!(!monoid[1].1 && !monoid[2].1);
    }
}
