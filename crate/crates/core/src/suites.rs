//! Invariant suites run by `scopegram check`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cps::{build_sem_lexicon, EvalContext, SemError};
use crate::fvect::laws::{bialgebra_axioms, comonoid_laws, monoid_laws, yanking, BialgebraMaps};
use crate::fvect::{merge_with, FvectError, Space, Universe};
use crate::nl::{check, interpret, mono_tensor, AtomSpaces, NLError, NLProof};
use crate::oracle::{default_label, models_of_size, truth_direct, truth_inverse, truth_single, OracleError, Quant};
use crate::pipeline::{evaluate_in, head_var, readings, scope_lexicon, PipelineError, Reading};
use crate::types::LambekType;

pub const SUITE_NAMES: [&str; 4] = ["yanking", "bialgebra", "residuation", "oracle"];

/// A deliberately broken component, for checking that suites can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Merge subsets by union instead of intersection.
    MuUnion,
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Largest universe size; suites run every size from 1 up.
    pub universe: usize,
    pub seed: u64,
    /// Random proofs drawn by the residuation suite.
    pub proofs: usize,
    pub fault: Option<Fault>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { universe: 3, seed: 0, proofs: 50, fault: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteCheck {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
}

impl fmt::Display for SuiteCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.suite, self.name)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}` (expected one of yanking, bialgebra, residuation, oracle)")]
    UnknownSuite(String),
    #[error("universe size must be between 1 and 3 for exhaustive suites, got {0}")]
    Universe(usize),
    #[error(transparent)]
    Fvect(#[from] FvectError),
    #[error(transparent)]
    NL(#[from] NLError),
    #[error(transparent)]
    Pipeline(#[from] PipelineError),
    #[error(transparent)]
    Sem(#[from] SemError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Vec<SuiteCheck>, SuiteError> {
    match name {
        "yanking" => yanking_suite(cfg),
        "bialgebra" => bialgebra_suite(cfg),
        "residuation" => residuation_suite(cfg),
        "oracle" => oracle_suite(cfg),
        _ => Err(SuiteError::UnknownSuite(name.to_string())),
    }
}

pub fn run_all(cfg: &SuiteConfig) -> Result<Vec<SuiteCheck>, SuiteError> {
    let mut out = Vec::new();
    for s in SUITE_NAMES {
        out.extend(run_suite(s, cfg)?);
    }
    Ok(out)
}

fn universe(n: usize) -> Universe {
    Universe::new((0..n).map(default_label)).expect("distinct labels")
}

fn sizes(cfg: &SuiteConfig) -> Result<std::ops::RangeInclusive<usize>, SuiteError> {
    if cfg.universe == 0 || cfg.universe > 3 {
        return Err(SuiteError::Universe(cfg.universe));
    }
    Ok(1..=cfg.universe)
}

fn yanking_suite(cfg: &SuiteConfig) -> Result<Vec<SuiteCheck>, SuiteError> {
    let mut out = Vec::new();
    for n in sizes(cfg)? {
        let u = universe(n);
        for (label, space) in [("V_U", Space::atoms(u.clone())), ("V_P(U)", Space::powerset(u))] {
            for (eq, ok) in yanking(&space)? {
                out.push(SuiteCheck { suite: "yanking", name: format!("{eq} on {label}, |U|={n}"), passed: ok });
            }
        }
    }
    Ok(out)
}

/// Powerset bialgebra maps, with the configured fault applied.
pub fn bialgebra_maps(p: &Space, fault: Option<Fault>) -> Result<BialgebraMaps, FvectError> {
    let maps = BialgebraMaps::powerset(p)?;
    Ok(match fault {
        Some(Fault::MuUnion) => maps.with_mu(merge_with(p, |a, b| a | b)?),
        None => maps,
    })
}

fn bialgebra_suite(cfg: &SuiteConfig) -> Result<Vec<SuiteCheck>, SuiteError> {
    let mut out = Vec::new();
    for n in sizes(cfg)? {
        let p = Space::powerset(universe(n));
        let maps = bialgebra_maps(&p, cfg.fault)?;
        let groups = [
            ("monoid", monoid_laws(&maps)?),
            ("comonoid", comonoid_laws(&maps)?),
            ("bialgebra", bialgebra_axioms(&maps)?),
        ];
        for (group, checks) in groups {
            for (law, ok) in checks {
                out.push(SuiteCheck {
                    suite: "bialgebra",
                    name: format!("{group} {law} on {}-dim V_P(U)", 1usize << n),
                    passed: ok,
                });
            }
        }
    }
    Ok(out)
}

/// Atom spaces for residuation checks: `np` two-dimensional, `n` a
/// two-element powerset, `s` the scalars.
pub fn residuation_spaces() -> AtomSpaces {
    let mut m = AtomSpaces::new();
    m.insert("np".into(), Space::atoms(Universe::new(["n1", "n2"]).expect("distinct")));
    m.insert("n".into(), Space::powerset(Universe::new(["a"]).expect("distinct")));
    m.insert("s".into(), Space::scalar());
    m
}

fn random_type<R: Rng>(rng: &mut R, depth: usize) -> LambekType {
    let atom = |rng: &mut R| LambekType::atom(["np", "n", "s"][rng.gen_range(0..3)]);
    if depth == 0 || rng.gen_bool(0.6) {
        return atom(rng);
    }
    let (a, b) = (random_type(rng, depth - 1), random_type(rng, depth - 1));
    match rng.gen_range(0..3) {
        0 => LambekType::tensor(a, b),
        1 => LambekType::under(a, b),
        _ => LambekType::over(a, b),
    }
}

/// A random checked NL proof whose source is a product.
pub fn random_nl_proof<R: Rng>(rng: &mut R) -> NLProof {
    let (b, c) = (random_type(rng, 1), random_type(rng, 1));
    let mut f = if rng.gen_bool(0.5) {
        NLProof::r1_inv(NLProof::id(LambekType::over(c, b)))
    } else {
        NLProof::r2_inv(NLProof::id(LambekType::under(b, c)))
    };
    for _ in 0..rng.gen_range(0..4) {
        let (src, tgt) = check(&f).expect("generated proofs check");
        f = match rng.gen_range(0..4) {
            0 if matches!(src, LambekType::Tensor(..)) => {
                if rng.gen_bool(0.5) {
                    NLProof::r1(f)
                } else {
                    NLProof::r2(f)
                }
            }
            1 if matches!(tgt, LambekType::Over(..)) => NLProof::r1_inv(f),
            1 if matches!(tgt, LambekType::Under(..)) => NLProof::r2_inv(f),
            2 => NLProof::comp(NLProof::id(tgt), NLProof::comp(f, NLProof::id(src))),
            3 => mono_tensor(&f, &NLProof::id(LambekType::atom("np"))).expect("checked premises"),
            _ => f,
        };
    }
    let (src, tgt) = check(&f).expect("generated proofs check");
    if matches!(src, LambekType::Tensor(..)) {
        f
    } else if matches!(tgt, LambekType::Over(..)) {
        NLProof::r1_inv(f)
    } else {
        NLProof::r2_inv(f)
    }
}

/// The four round trips on a proof `f` with a product source.
pub fn residuation_checks(f: &NLProof, i0: &AtomSpaces) -> Result<[(&'static str, bool); 4], NLError> {
    let m = interpret(f, i0)?;
    let eq = |p: NLProof, target: &crate::fvect::LinearMap| -> Result<bool, NLError> {
        interpret(&p, i0)?.equals(target).map_err(NLError::from)
    };
    let r1 = NLProof::r1(f.clone());
    let r2 = NLProof::r2(f.clone());
    let (m1, m2) = (interpret(&r1, i0)?, interpret(&r2, i0)?);
    Ok([
        ("R1⁻¹(R1 f) = f", eq(NLProof::r1_inv(r1.clone()), &m)?),
        ("R2⁻¹(R2 f) = f", eq(NLProof::r2_inv(r2.clone()), &m)?),
        ("R1(R1⁻¹ g) = g", eq(NLProof::r1(NLProof::r1_inv(r1)), &m1)?),
        ("R2(R2⁻¹ g) = g", eq(NLProof::r2(NLProof::r2_inv(r2)), &m2)?),
    ])
}

fn residuation_suite(cfg: &SuiteConfig) -> Result<Vec<SuiteCheck>, SuiteError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let i0 = residuation_spaces();
    let mut out = Vec::new();
    for k in 0..cfg.proofs {
        let f = random_nl_proof(&mut rng);
        let (src, tgt) = check(&f)?;
        let checks = residuation_checks(&f, &i0)?;
        out.push(SuiteCheck {
            suite: "residuation",
            name: format!("proof {k} ({src} → {tgt}, seed {})", cfg.seed),
            passed: checks.iter().all(|c| c.1),
        });
    }
    Ok(out)
}

/// The two readings of the two-quantifier sentence, subject-wide first.
pub fn scope_readings() -> Result<(Reading, Reading), PipelineError> {
    let words = ["every", "student", "likes", "some", "teacher"];
    let mut rs = readings(&scope_lexicon(), &words, None, 64)?;
    rs.sort_by_key(|r| head_var(&r.term) != Some("x0"));
    let second = rs.pop().expect("two readings");
    let first = rs.pop().expect("two readings");
    Ok((first, second))
}

fn nonzero(r: &Reading, ctx: &EvalContext) -> Result<bool, SuiteError> {
    let v = evaluate_in(r, ctx)
        .map_err(|e| SuiteError::Sem(SemError::Unresolved { key: "reading".into(), msg: e.to_string() }))?;
    Ok(v.is_nonzero().unwrap_or(false))
}

fn oracle_suite(cfg: &SuiteConfig) -> Result<Vec<SuiteCheck>, SuiteError> {
    let range = sizes(cfg)?;
    let (direct, inverse) = scope_readings()?;
    let single = readings(&scope_lexicon(), &["all", "men", "sleep"], None, 64)?;
    let mut out = Vec::new();
    for n in range {
        let (mut total, mut bad_direct, mut bad_inverse, mut bad_entail) = (0usize, 0usize, 0usize, 0usize);
        for m in models_of_size(n, &["student", "teacher"], &["likes"])? {
            let ctx = EvalContext::new(build_sem_lexicon(&m)?);
            total += 1;
            let (d, i) =
                (truth_direct(&m, "student", "likes", "teacher")?, truth_inverse(&m, "student", "likes", "teacher")?);
            bad_direct += usize::from(nonzero(&direct, &ctx)? != d);
            bad_inverse += usize::from(nonzero(&inverse, &ctx)? != i);
            let nonempty = !m.pred("student")?.is_empty() && !m.pred("teacher")?.is_empty();
            bad_entail += usize::from(nonempty && i && !d);
        }
        let mut push = |name: String, bad: usize| {
            out.push(SuiteCheck {
                suite: "oracle",
                name: format!("{name}, |U|={n}, {bad}/{total} mismatches"),
                passed: bad == 0,
            })
        };
        push("subject-wide reading ⇔ ∀∃".into(), bad_direct);
        push("object-wide reading ⇔ ∃∀".into(), bad_inverse);
        push("∃∀ implies ∀∃".into(), bad_entail);
        let (mut count, mut bad) = (0usize, 0usize);
        for m in models_of_size(n, &["men", "sleep"], &[])? {
            let ctx = EvalContext::new(build_sem_lexicon(&m)?);
            count += 1;
            bad += usize::from(nonzero(&single[0], &ctx)? != truth_single(&m, Quant::All, "men", "sleep")?);
        }
        out.push(SuiteCheck {
            suite: "oracle",
            name: format!("all men sleep ⇔ men ⊆ sleep, |U|={n}, {bad}/{count} mismatches"),
            passed: bad == 0,
        });
    }
    Ok(out)
}
