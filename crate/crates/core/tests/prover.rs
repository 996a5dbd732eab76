mod common;

use common::*;
use proptest::prelude::*;
use scopegram::focused::{
    alpha_eq, check_proof, parse_brackets, premises, prove_all, render, sentence_sequents, Bracketing, ProofTerm,
    Sequent, Structure, Succedent,
};
use scopegram::pipeline::scope_lexicon;
use scopegram::types::{polarity, Lexicon, Polarity, PolarityAssignment};

fn roots(lex: &Lexicon, sentence: &str, brackets: Option<&str>) -> Vec<Sequent> {
    let ws = words(sentence);
    let b = match brackets {
        Some(s) => parse_brackets(s).unwrap(),
        None => Bracketing::default_for(ws.len()).unwrap(),
    };
    sentence_sequents(&ws, lex, &b, 64).unwrap().into_iter().map(|r| r.sequent).collect()
}

#[test]
fn scope_sentence_matches_both_references() {
    let lex = scope_lexicon();
    let [root] = roots(&lex, SCOPE_SENTENCE, None).try_into().unwrap();
    let proofs = prove_all(&root, &lex.atoms, 64).unwrap();
    assert_eq!(proofs.len(), 2);
    assert!(alpha_eq(&proofs[0], &reference_subject_wide()));
    assert!(alpha_eq(&proofs[1], &reference_object_wide()));
    assert!(!alpha_eq(&proofs[0], &proofs[1]));
    check_proof(&reference_subject_wide(), &root, &lex.atoms).unwrap();
    check_proof(&reference_object_wide(), &root, &lex.atoms).unwrap();
}

#[test]
fn naive_enumeration_agrees_on_counts() {
    let lex = corpus_lexicon();
    for (sentence, brackets) in CORPUS {
        for root in roots(&lex, sentence, *brackets) {
            let found = prove_all(&root, &lex.atoms, 64).unwrap();
            let naive = naive_proofs(&root, &lex.atoms, 14);
            let deeper = naive_proofs(&root, &lex.atoms, 18);
            assert_eq!(naive.len(), deeper.len(), "{sentence}: depth bound too small");
            let canonical: Vec<_> = naive.iter().filter(|p| eagerly_inverted(p, &root, &lex.atoms)).cloned().collect();
            assert_eq!(found.len(), canonical.len(), "{sentence}: {root}");
            for p in &found {
                assert!(canonical.iter().any(|q| alpha_eq(p, q)), "{sentence}: prover proof missing from naive set");
            }
        }
    }
}

#[test]
fn known_counts() {
    let lex = corpus_lexicon();
    let count = |s: &str, b: Option<&str>| -> usize {
        roots(&lex, s, b).iter().map(|r| prove_all(r, &lex.atoms, 64).unwrap().len()).sum()
    };
    assert_eq!(count("every student sleeps", None), 1);
    assert_eq!(count("john likes mary", None), 0);
    assert_eq!(count("john likes mary", Some("(1 (2 3))")), 1);
    assert_eq!(count("everyone likes mary", Some("(1 (2 3))")), 1);
    assert_eq!(count("some teacher likes every student", None), 2);
    assert_eq!(count("both meet", None), 1);
    assert_eq!(count("student likes", None), 0);
    let lex = scope_lexicon();
    let all: usize =
        roots(&lex, "all men sleep", None).iter().map(|r| prove_all(r, &lex.atoms, 64).unwrap().len()).sum();
    assert_eq!(all, 1);
}

fn is_pos(pa: &PolarityAssignment, t: &scopegram::types::LambekType) -> bool {
    polarity(pa, t).unwrap() == Polarity::Positive
}

fn focus_of(s: &Structure) -> Option<&scopegram::types::LambekType> {
    match s {
        Structure::Leaf(..) => None,
        Structure::Focus(t) => Some(t),
        Structure::Bullet(l, r) => focus_of(l).or_else(|| focus_of(r)),
    }
}

fn hyp_type<'a>(s: &'a Structure, x: &str) -> Option<&'a scopegram::types::LambekType> {
    match s {
        Structure::Leaf(y, t) => (y == x).then_some(t),
        Structure::Focus(_) => None,
        Structure::Bullet(l, r) => hyp_type(l, x).or_else(|| hyp_type(r, x)),
    }
}

/// Walks a derivation top-down, asserting the focusing discipline
/// directly on every conclusion.
fn audit(p: &ProofTerm, seq: &Sequent, pa: &PolarityAssignment) {
    assert!(seq.focus_count() <= 1, "two foci in {seq}");
    match p {
        ProofTerm::Ax { ty, .. } => assert!(ty.is_atom() && is_pos(pa, ty)),
        ProofTerm::CoAx { ty, .. } => assert!(ty.is_atom() && !is_pos(pa, ty)),
        ProofTerm::FocL { ty, .. } => {
            assert!(is_pos(pa, ty));
            assert_eq!(focus_of(&seq.ant), Some(ty));
        }
        ProofTerm::DefocL { var, .. } => {
            assert_eq!(seq.focus_count(), 0);
            assert!(!is_pos(pa, hyp_type(&seq.ant, var).unwrap()));
        }
        ProofTerm::DefocR { .. } => {
            assert_eq!(seq.focus_count(), 0);
            assert!(is_pos(pa, seq.succ.ty()));
        }
        ProofTerm::FocR { .. } => {
            assert!(seq.succ.is_focus());
            assert!(!is_pos(pa, seq.succ.ty()));
        }
        ProofTerm::OverL { .. } | ProofTerm::UnderL { .. } => {
            assert!(matches!(seq.succ, Succedent::CoVar(..)));
            assert!(focus_of(&seq.ant).is_some());
        }
        _ => {}
    }
    let prems = premises(p, seq, pa).unwrap();
    for (child, prem) in p.children().into_iter().zip(&prems) {
        audit(child, prem, pa);
    }
}

#[test]
fn every_corpus_proof_is_sound_and_distinct() {
    let lex = corpus_lexicon();
    let mut total = 0;
    for (sentence, brackets) in CORPUS {
        for root in roots(&lex, sentence, *brackets) {
            let proofs = prove_all(&root, &lex.atoms, 64).unwrap();
            for (i, p) in proofs.iter().enumerate() {
                check_proof(p, &root, &lex.atoms).unwrap();
                audit(p, &root, &lex.atoms);
                assert!(eagerly_inverted(p, &root, &lex.atoms));
                for q in &proofs[..i] {
                    assert!(!alpha_eq(p, q), "{sentence}: duplicate proofs");
                }
                total += 1;
            }
        }
    }
    assert!(total >= 10, "corpus produced only {total} proofs");
}

#[test]
fn rendering_ends_with_the_root() {
    let lex = scope_lexicon();
    let [root] = roots(&lex, SCOPE_SENTENCE, None).try_into().unwrap();
    for p in prove_all(&root, &lex.atoms, 64).unwrap() {
        let text = render(&p, &root, &lex.atoms).unwrap();
        let last = text.lines().last().unwrap();
        assert!(last.contains("⇁"), "{last}");
        assert!(last.contains(&root.to_string()));
        assert_eq!(text.lines().count(), p.size());
    }
}

#[test]
fn tampered_references_fail() {
    let lex = scope_lexicon();
    let [root] = roots(&lex, SCOPE_SENTENCE, None).try_into().unwrap();
    let ProofTerm::FocR { sub, .. } = reference_subject_wide() else { unreachable!() };
    let renamed = ProofTerm::FocR { sub, covar: "x0".into() };
    assert!(check_proof(&renamed, &root, &lex.atoms).is_err());
    assert!(check_proof(
        &reference_subject_wide(),
        &roots(&lex, "every student likes some student", None)[0],
        &lex.atoms
    )
    .is_ok());
    assert!(check_proof(&reference_subject_wide(), &roots(&lex, "alice sleep", None)[0], &lex.atoms).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn proofs_survive_any_bracketing(idx in 0usize..14) {
        let lex = corpus_lexicon();
        let (sentence, _) = CORPUS[idx];
        let n = words(sentence).len();
        for b in all_bracketings(0, n) {
            for root in roots(&lex, sentence, Some(&b.to_string())) {
                for p in prove_all(&root, &lex.atoms, 64).unwrap() {
                    prop_assert!(check_proof(&p, &root, &lex.atoms).is_ok());
                }
            }
        }
    }
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

#[test]
fn inversion_permutations_are_collapsed() {
    let lex = corpus_lexicon();
    let [root] = roots(&lex, "both meet", None).try_into().unwrap();
    let naive = naive_proofs(&root, &lex.atoms, 14);
    let canonical = naive.iter().filter(|p| eagerly_inverted(p, &root, &lex.atoms)).count();
    assert!(naive.len() > canonical, "{} schema derivations", naive.len());
    assert_eq!(canonical, 1);
}

#[test]
fn right_rules_need_a_focus_free_antecedent() {
    let pa = scope_lexicon().atoms;
    let seq = Sequent::new(Structure::Focus(ty("np\\s")), Succedent::CoVar("k".into(), ty("np\\s")));
    let hole = Box::new(ProofTerm::Ax { ty: ty("np"), var: "h".into() });
    let node = ProofTerm::UnderR { m: hole, var: "y".into(), covar_in: "j".into(), covar_out: "k".into() };
    assert!(premises(&node, &seq, &pa).unwrap_err().contains("left focus"));
}
