//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scopegram::cps::{build_sem_lexicon, eval_single_quantified, sem_alpha_eq, EvalContext};
use scopegram::focused::{alpha_eq, check_proof, parse_brackets, prove_all, sentence_sequents, Bracketing};
use scopegram::fvect::laws::{bialgebra_axioms, comonoid_laws, monoid_laws, yanking, BialgebraMaps};
use scopegram::fvect::{inner, BasisElem, Space, Universe, Vector};
use scopegram::nl::{check, sentence_value, AtomSpaces, NLProof};
use scopegram::oracle::{models_of_size, truth_direct, truth_inverse, Model, Quant};
use scopegram::pipeline::{evaluate_in, readings, run_eval, scope_lexicon};
use scopegram::scalar::Scalar;
use scopegram::suites::{random_nl_proof, residuation_checks, residuation_spaces, scope_readings};
use scopegram::types::Lexicon;

const PROOF_BUDGET: Duration = Duration::from_secs(1);
const TERM_BUDGET: Duration = Duration::from_secs(1);
const ORACLE_BUDGET: Duration = Duration::from_secs(60);
const WITNESS_BUDGET: Duration = Duration::from_secs(1);
const LAWS_BUDGET: Duration = Duration::from_secs(30);
const MATRICES: usize = 20;
const RESIDUATION_PROOFS: usize = 50;
const MAX_UNIVERSE: usize = 3;
const SEED: u64 = 0x5c0fe;

type Outcome = Result<String, String>;
type Job<'a> = (&'a Lexicon, &'a str, Vec<Bracketing>);
type Criterion = (&'static str, fn() -> Outcome);

fn within(start: Instant, budget: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    if t < budget {
        Ok(t)
    } else {
        Err(format!("took {t:.2?}, budget {budget:?}"))
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn proof_count() -> Outcome {
    let start = Instant::now();
    let lex = scope_lexicon();
    let ws = words(SCOPE_SENTENCE);
    let roots = sentence_sequents(&ws, &lex, &Bracketing::default_for(5).unwrap(), 64).map_err(|e| e.to_string())?;
    ensure(roots.len() == 1, || format!("{} root sequents", roots.len()))?;
    let proofs = prove_all(&roots[0].sequent, &lex.atoms, 64).map_err(|e| e.to_string())?;
    ensure(proofs.len() == 2, || format!("{} proofs", proofs.len()))?;
    ensure(alpha_eq(&proofs[0], &reference_subject_wide()), || {
        "first proof differs from the subject-wide reference".into()
    })?;
    ensure(alpha_eq(&proofs[1], &reference_object_wide()), || {
        "second proof differs from the object-wide reference".into()
    })?;
    let t = within(start, PROOF_BUDGET)?;
    Ok(format!("2 proofs, alpha-equal to both references, {t:.2?}"))
}

fn cps_terms() -> Outcome {
    let start = Instant::now();
    let rs = readings(&scope_lexicon(), &words(SCOPE_SENTENCE), None, 64).map_err(|e| e.to_string())?;
    ensure(rs.len() == 2, || format!("{} readings", rs.len()))?;
    ensure(sem_alpha_eq(&rs[0].term, &term_subject_wide()), || format!("reading 1 is {}", rs[0].term))?;
    ensure(sem_alpha_eq(&rs[1].term, &term_object_wide()), || format!("reading 2 is {}", rs[1].term))?;
    ensure(!sem_alpha_eq(&rs[0].term, &term_object_wide()), || "references do not separate the readings".into())?;
    let t = within(start, TERM_BUDGET)?;
    Ok(format!("both compiled terms match, {t:.2?}"))
}

fn members(m: &Model, p: &str) -> Vec<usize> {
    m.pred(p).unwrap().iter().copied().collect()
}

fn likes(m: &Model, a: usize, b: usize) -> bool {
    !m.weight("likes", a, b).unwrap().is_zero()
}

/// ∀x∈student ∃y∈teacher likes(x,y), computed directly.
fn forall_exists(m: &Model) -> bool {
    members(m, "student").iter().all(|&a| members(m, "teacher").iter().any(|&b| likes(m, a, b)))
}

/// ∃y∈teacher ∀x∈student likes(x,y), computed directly.
fn exists_forall(m: &Model) -> bool {
    members(m, "teacher").iter().any(|&b| members(m, "student").iter().all(|&a| likes(m, a, b)))
}

fn scope_oracle() -> Outcome {
    let start = Instant::now();
    let (direct, inverse) = scope_readings().map_err(|e| e.to_string())?;
    let (mut total, mut bad) = (0usize, 0usize);
    for n in 1..=MAX_UNIVERSE {
        for m in models_of_size(n, &["student", "teacher"], &["likes"]).map_err(|e| e.to_string())? {
            let ctx = EvalContext::new(build_sem_lexicon(&m).map_err(|e| e.to_string())?);
            let d = evaluate_in(&direct, &ctx).map_err(|e| e.to_string())?.is_nonzero().map_err(|e| e.to_string())?;
            let i = evaluate_in(&inverse, &ctx).map_err(|e| e.to_string())?.is_nonzero().map_err(|e| e.to_string())?;
            let td = truth_direct(&m, "student", "likes", "teacher").map_err(|e| e.to_string())?;
            let ti = truth_inverse(&m, "student", "likes", "teacher").map_err(|e| e.to_string())?;
            let ok = d == td && i == ti && td == forall_exists(&m) && ti == exists_forall(&m);
            bad += usize::from(!ok);
            total += 1;
        }
    }
    ensure(bad == 0, || format!("{bad}/{total} models disagree"))?;
    let t = within(start, ORACLE_BUDGET)?;
    Ok(format!("0/{total} mismatches over |U| ≤ {MAX_UNIVERSE}, {t:.2?}"))
}

fn witness() -> Outcome {
    let start = Instant::now();
    let mut m = Model::new(["a", "b", "c", "d"]).map_err(|e| e.to_string())?;
    m.add_pred("student", &["a", "b"]).map_err(|e| e.to_string())?;
    m.add_pred("teacher", &["c", "d"]).map_err(|e| e.to_string())?;
    m.set_rel("likes", "a", "c", Scalar::one()).map_err(|e| e.to_string())?;
    m.set_rel("likes", "b", "d", Scalar::one()).map_err(|e| e.to_string())?;
    let report = run_eval(&scope_lexicon(), &m, &words(SCOPE_SENTENCE), None, 64, true).map_err(|e| e.to_string())?;
    let values: Vec<_> = report.proofs.iter().map(|p| p.value.clone()).collect();
    ensure(values.len() == 2, || format!("{} readings", values.len()))?;
    let first = values[0].as_deref().unwrap_or("error");
    let second = values[1].as_deref().unwrap_or("error");
    ensure(first != "0" && first != "error", || format!("reading 1 evaluated to {first}"))?;
    ensure(second == "0", || format!("reading 2 evaluated to {second}"))?;
    let t = within(start, WITNESS_BUDGET)?;
    Ok(format!("reading 1 = {first}, reading 2 = 0, {t:.2?}"))
}

fn illustration() -> Outcome {
    let mut i0 = AtomSpaces::new();
    let n = Space::atoms(Universe::new(["n1", "n2", "n3", "n4"]).unwrap());
    i0.insert("np".into(), n.clone());
    i0.insert("s".into(), Space::scalar());
    let tv = scopegram::types::parse_type_unchecked("(np\\s)/np").unwrap();
    let p = NLProof::r2_inv(NLProof::r1_inv(NLProof::id(tv)));
    check(&p).map_err(|e| e.to_string())?;
    let verb_space = Space::tensor(Space::tensor(n.clone(), Space::scalar()), n.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for k in 0..MATRICES {
        let c: Vec<Vec<Scalar>> = (0..4)
            .map(|_| (0..4).map(|_| Scalar::ratio(rng.gen_range(-50..=50), rng.gen_range(1..=12))).collect())
            .collect();
        let terms = (0..4).flat_map(|i| {
            let row = c[i].clone();
            (0..4).map(move |j| {
                (
                    BasisElem::pair(BasisElem::pair(BasisElem::Atom(i), BasisElem::Unit), BasisElem::Atom(j)),
                    row[j].clone(),
                )
            })
        });
        let verb = Vector::from_terms(verb_space.clone(), terms).map_err(|e| e.to_string())?;
        let subject = Vector::atom(&n, "n1").unwrap();
        let object = Vector::atom(&n, "n3").unwrap();
        let out = sentence_value(&p, &i0, &[subject, verb, object]).map_err(|e| e.to_string())?;
        let got = out.as_scalar().map_err(|e| e.to_string())?;
        ensure(got == c[0][2], || format!("matrix {k}: got {got}, expected {}", c[0][2]))?;
    }
    Ok(format!("c₁₃ recovered exactly for {MATRICES} random rational matrices"))
}

fn subsets(labels: &[String]) -> Vec<Vec<String>> {
    (0..1u32 << labels.len())
        .map(|mask| labels.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, l)| l.clone()).collect())
        .collect()
}

fn single_quantifier() -> Outcome {
    let mut pairs = 0;
    for n in 1..=MAX_UNIVERSE {
        let labels: Vec<String> = (0..n).map(scopegram::oracle::default_label).collect();
        let m = Model::new(labels.clone()).map_err(|e| e.to_string())?;
        let p = Space::powerset(Universe::new(labels.clone()).unwrap());
        for men in subsets(&labels) {
            for sleep in subsets(&labels) {
                let got = eval_single_quantified(&m, Quant::All, &men, &sleep).map_err(|e| e.to_string())?;
                let both: Vec<&String> = men.iter().filter(|x| sleep.contains(x)).collect();
                let expected = inner(&Vector::subset(&p, &men).unwrap(), &Vector::subset(&p, &both).unwrap())
                    .map_err(|e| e.to_string())?;
                ensure(got == expected, || format!("men={men:?} sleep={sleep:?}: {got} vs {expected}"))?;
                let subset = men.iter().all(|x| sleep.contains(x));
                ensure(!got.is_zero() == subset, || {
                    format!("men={men:?} sleep={sleep:?}: nonzero is {}", !got.is_zero())
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} subset pairs agree with the inner product"))
}

fn laws() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in 1..=MAX_UNIVERSE {
        let labels: Vec<String> = (0..n).map(scopegram::oracle::default_label).collect();
        let p = Space::powerset(Universe::new(labels).unwrap());
        let maps = BialgebraMaps::powerset(&p).map_err(|e| e.to_string())?;
        let mut all = yanking(&p).map_err(|e| e.to_string())?;
        all.extend(monoid_laws(&maps).map_err(|e| e.to_string())?);
        all.extend(comonoid_laws(&maps).map_err(|e| e.to_string())?);
        let axioms = bialgebra_axioms(&maps).map_err(|e| e.to_string())?;
        ensure(axioms.len() == 4, || format!("{} bialgebra axioms", axioms.len()))?;
        all.extend(axioms);
        for (name, ok) in all {
            ensure(ok, || format!("{name} fails at |U|={n}"))?;
            count += 1;
        }
    }
    let i0 = residuation_spaces();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for k in 0..RESIDUATION_PROOFS {
        let f = random_nl_proof(&mut rng);
        check(&f).map_err(|e| e.to_string())?;
        for (name, ok) in residuation_checks(&f, &i0).map_err(|e| e.to_string())? {
            ensure(ok, || format!("proof {k}: {name} fails"))?;
            count += 1;
        }
    }
    let t = within(start, LAWS_BUDGET)?;
    Ok(format!("{count} equalities hold, {t:.2?}"))
}

fn all_bracketings(lo: usize, hi: usize) -> Vec<Bracketing> {
    if hi - lo == 1 {
        return vec![Bracketing::Word(lo)];
    }
    let mut out = Vec::new();
    for mid in lo + 1..hi {
        for l in all_bracketings(lo, mid) {
            for r in all_bracketings(mid, hi) {
                out.push(Bracketing::Pair(Box::new(l.clone()), Box::new(r)));
            }
        }
    }
    out
}

fn soundness() -> Outcome {
    let scope = scope_lexicon();
    let corpus = corpus_lexicon();
    let extra = ["all men sleep", "alice sleep", "every teacher likes some student", "some men likes all teacher"];
    let mut jobs: Vec<Job> = Vec::new();
    for (s, b) in CORPUS {
        let n = words(s).len();
        let mut bs = all_bracketings(0, n);
        if let Some(b) = b {
            bs.push(parse_brackets(b).unwrap());
        }
        jobs.push((&corpus, s, bs));
    }
    for s in extra {
        jobs.push((&scope, s, all_bracketings(0, words(s).len())));
    }
    let (mut proofs, mut failures) = (0usize, 0usize);
    for (lex, s, bs) in jobs {
        for b in bs {
            for root in sentence_sequents(&words(s), lex, &b, 64).map_err(|e| e.to_string())? {
                for p in prove_all(&root.sequent, &lex.atoms, 64).map_err(|e| e.to_string())? {
                    proofs += 1;
                    failures += usize::from(check_proof(&p, &root.sequent, &lex.atoms).is_err());
                }
            }
        }
    }
    ensure(failures == 0, || format!("{failures}/{proofs} proofs rejected"))?;
    ensure(proofs > 0, || "corpus produced no proofs".into())?;
    Ok(format!("{proofs}/{proofs} proofs re-validate"))
}

fn entailment() -> Outcome {
    let (mut checked, mut bad) = (0usize, 0usize);
    for n in 1..=MAX_UNIVERSE {
        for m in models_of_size(n, &["student", "teacher"], &["likes"]).map_err(|e| e.to_string())? {
            if members(&m, "student").is_empty() || members(&m, "teacher").is_empty() {
                continue;
            }
            checked += 1;
            let ti = truth_inverse(&m, "student", "likes", "teacher").map_err(|e| e.to_string())?;
            let td = truth_direct(&m, "student", "likes", "teacher").map_err(|e| e.to_string())?;
            bad += usize::from(ti && !td);
        }
    }
    ensure(bad == 0, || format!("{bad}/{checked} counterexamples"))?;
    Ok(format!("no counterexample among {checked} models"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("proof count", proof_count),
        ("CPS terms", cps_terms),
        ("scope semantics vs oracle", scope_oracle),
        ("divergence witness", witness),
        ("transitive sentence illustration", illustration),
        ("single quantifier", single_quantifier),
        ("categorical laws", laws),
        ("prover soundness", soundness),
        ("∃∀ → ∀∃ entailment", entailment),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why}", i + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
