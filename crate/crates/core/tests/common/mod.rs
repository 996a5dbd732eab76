#![allow(dead_code)]

use scopegram::cps::{SemExpr, SemSet, SemSpace};
use scopegram::focused::{premises, ProofTerm, Sequent, Structure, Succedent};
use scopegram::types::{parse_type_unchecked, LambekType, Lexicon, Polarity, PolarityAssignment};

pub const SCOPE_SENTENCE: &str = "every student likes some teacher";

pub fn words(s: &str) -> Vec<&str> {
    s.split_whitespace().collect()
}

pub fn ty(s: &str) -> LambekType {
    parse_type_unchecked(s).unwrap()
}

pub fn corpus_lexicon() -> Lexicon {
    Lexicon::parse(include_str!("../data/corpus.lex")).unwrap()
}

/// Sentences over the corpus lexicon, with an explicit bracketing where
/// the default one is not the intended structure.
pub const CORPUS: &[(&str, Option<&str>)] = &[
    ("every student likes some teacher", None),
    ("some teacher likes every student", None),
    ("john sleeps", None),
    ("john likes mary", Some("(1 (2 3))")),
    ("every student sleeps", None),
    ("everyone sleeps", None),
    ("john likes someone", Some("(1 (2 3))")),
    ("everyone likes mary", Some("(1 (2 3))")),
    ("both meet", None),
    ("mary herself likes", Some("(1 (2 3))")),
    ("mary likes herself", Some("(1 (2 3))")),
    ("john gives mary some student", Some("(1 ((2 3) (4 5)))")),
    ("every student who sleeps likes john", Some("((1 (2 (3 4))) (5 6))")),
    ("student likes", None),
    ("likes john", None),
];

fn np() -> LambekType {
    ty("np")
}

fn ax(v: &str) -> ProofTerm {
    ProofTerm::Ax { ty: np(), var: v.into() }
}

fn ax_n(v: &str) -> ProofTerm {
    ProofTerm::Ax { ty: ty("n"), var: v.into() }
}

fn b(p: ProofTerm) -> Box<ProofTerm> {
    Box::new(p)
}

fn foc_l(var: &str, sub: ProofTerm) -> ProofTerm {
    ProofTerm::FocL { sub: b(sub), var: var.into(), ty: np() }
}

fn defoc_l(var: &str, sub: ProofTerm) -> ProofTerm {
    ProofTerm::DefocL { sub: b(sub), var: var.into() }
}

fn over_l(m: ProofTerm, n: ProofTerm) -> ProofTerm {
    ProofTerm::OverL { m: b(m), n: b(n) }
}

/// The verb's part of both derivations: `x2` applied to `first ⊗ α ⊗ second`.
fn verb(first: &str, second: &str) -> ProofTerm {
    defoc_l(
        "x2",
        over_l(
            ProofTerm::UnderL { m: b(ax(first)), n: b(ProofTerm::CoAx { ty: ty("s"), covar: "k".into() }) },
            ax(second),
        ),
    )
}

/// Subject-wide derivation, encoded by hand. Words are
/// `x0 … x4`; bound names are arbitrary.
pub fn reference_subject_wide() -> ProofTerm {
    ProofTerm::FocR {
        covar: "k".into(),
        sub: b(defoc_l(
            "x0",
            over_l(foc_l("a", defoc_l("x3", over_l(foc_l("b", verb("a", "b")), ax_n("x4")))), ax_n("x1")),
        )),
    }
}

/// Object-wide derivation, encoded by hand.
pub fn reference_object_wide() -> ProofTerm {
    ProofTerm::FocR {
        covar: "k".into(),
        sub: b(defoc_l(
            "x3",
            over_l(foc_l("a", defoc_l("x0", over_l(foc_l("b", verb("b", "a")), ax_n("x1")))), ax_n("x4")),
        )),
    }
}

fn universe() -> SemSpace {
    SemSpace { set: SemSet::Universe, ty: np(), polarity: Polarity::Positive }
}

fn v(x: &str) -> SemExpr {
    SemExpr::var(x)
}

/// `α ↦ q1(|{a ∈ U | q2(|{b ∈ U | x2(first ⊗ α ⊗ second) ≠ 0}⟩ ⊗ n2) ≠ 0}⟩ ⊗ n1)`
fn scope_term(q1: &str, n1: &str, q2: &str, n2: &str, first: &str, second: &str) -> SemExpr {
    let verb = SemExpr::apply(v("x2"), SemExpr::tensor(SemExpr::tensor(v(first), v("α")), v(second)));
    let inner = SemExpr::apply(v(q2), SemExpr::tensor(SemExpr::comprehend("b", universe(), verb), v(n2)));
    let outer = SemExpr::apply(v(q1), SemExpr::tensor(SemExpr::comprehend("a", universe(), inner), v(n1)));
    SemExpr::lambda("α", outer)
}

/// The subject-wide term over the word variables `x0 … x4`.
pub fn term_subject_wide() -> SemExpr {
    scope_term("x0", "x1", "x3", "x4", "a", "b")
}

pub fn term_object_wide() -> SemExpr {
    scope_term("x3", "x4", "x0", "x1", "b", "a")
}

/// Every derivation of `seq` of height at most `depth`, found by trying
/// each rule at each node and letting the checker's schemas decide which
/// applications are legal. Shares nothing with the prover's search order.
pub fn naive_proofs(seq: &Sequent, pa: &PolarityAssignment, depth: usize) -> Vec<ProofTerm> {
    let mut counter = 0;
    naive(seq, pa, depth, &mut counter)
}

fn leaf_vars(s: &Structure, out: &mut Vec<String>) {
    match s {
        Structure::Leaf(x, _) => out.push(x.clone()),
        Structure::Focus(_) => {}
        Structure::Bullet(l, r) => {
            leaf_vars(l, out);
            leaf_vars(r, out);
        }
    }
}

fn focused_type(s: &Structure) -> Option<&LambekType> {
    match s {
        Structure::Leaf(..) => None,
        Structure::Focus(t) => Some(t),
        Structure::Bullet(l, r) => focused_type(l).or_else(|| focused_type(r)),
    }
}

fn candidates(seq: &Sequent, counter: &mut usize) -> Vec<ProofTerm> {
    let mut fresh = || {
        *counter += 1;
        format!("v{counter}")
    };
    let hole = || Box::new(ProofTerm::Ax { ty: LambekType::atom("hole"), var: "hole".into() });
    let mut vars = Vec::new();
    leaf_vars(&seq.ant, &mut vars);
    let mut out = Vec::new();
    let succ_ty = seq.succ.ty().clone();
    for x in &vars {
        out.push(ProofTerm::Ax { ty: succ_ty.clone(), var: x.clone() });
        out.push(ProofTerm::DefocL { sub: hole(), var: x.clone() });
        out.push(ProofTerm::TensorL { m: hole(), var1: fresh(), var2: fresh(), var_z: x.clone() });
    }
    if let Some(t) = focused_type(&seq.ant) {
        out.push(ProofTerm::FocL { sub: hole(), var: fresh(), ty: t.clone() });
    }
    match &seq.succ {
        Succedent::CoVar(a, t) => {
            out.push(ProofTerm::CoAx { ty: t.clone(), covar: a.clone() });
            out.push(ProofTerm::DefocR { sub: hole(), covar: a.clone() });
            out.push(ProofTerm::OverR { m: hole(), var: fresh(), covar_in: fresh(), covar_out: a.clone() });
            out.push(ProofTerm::UnderR { m: hole(), var: fresh(), covar_in: fresh(), covar_out: a.clone() });
        }
        Succedent::Focus(_) => out.push(ProofTerm::FocR { sub: hole(), covar: fresh() }),
    }
    out.push(ProofTerm::OverL { m: hole(), n: hole() });
    out.push(ProofTerm::UnderL { m: hole(), n: hole() });
    out.push(ProofTerm::TensorR { m: hole(), n: hole() });
    out
}

fn with_children(node: &ProofTerm, kids: &[ProofTerm]) -> ProofTerm {
    let mut node = node.clone();
    let k = |i: usize| Box::new(kids[i].clone());
    match &mut node {
        ProofTerm::Ax { .. } | ProofTerm::CoAx { .. } => {}
        ProofTerm::FocL { sub, .. }
        | ProofTerm::DefocL { sub, .. }
        | ProofTerm::DefocR { sub, .. }
        | ProofTerm::FocR { sub, .. } => *sub = k(0),
        ProofTerm::OverR { m, .. } | ProofTerm::UnderR { m, .. } | ProofTerm::TensorL { m, .. } => *m = k(0),
        ProofTerm::OverL { m, n } | ProofTerm::UnderL { m, n } | ProofTerm::TensorR { m, n } => {
            *m = k(0);
            *n = k(1);
        }
    }
    node
}

fn naive(seq: &Sequent, pa: &PolarityAssignment, depth: usize, counter: &mut usize) -> Vec<ProofTerm> {
    if depth == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    for node in candidates(seq, counter) {
        let Ok(prems) = premises(&node, seq, pa) else { continue };
        let mut partial: Vec<Vec<ProofTerm>> = vec![vec![]];
        for prem in &prems {
            let subs = naive(prem, pa, depth - 1, counter);
            partial = partial
                .into_iter()
                .flat_map(|done| {
                    subs.iter().map(move |s| {
                        let mut d = done.clone();
                        d.push(s.clone());
                        d
                    })
                })
                .collect();
        }
        out.extend(partial.iter().map(|kids| with_children(&node, kids)));
    }
    out
}

/// True when invertible rules are applied as soon as they apply: the
/// leftmost `⊗L` first, then `/R` or `\R`. Derivations differing only in
/// where those rules sit collapse to one canonical representative.
pub fn eagerly_inverted(p: &ProofTerm, seq: &Sequent, pa: &PolarityAssignment) -> bool {
    let left_focus = focused_type(&seq.ant).is_some();
    let tensor_leaf =
        seq.ant.leaves().into_iter().find_map(|(_, z, t)| matches!(t, LambekType::Tensor(..)).then_some(z));
    let ok_here = match (tensor_leaf, &seq.succ) {
        (Some(z), _) if !left_focus => matches!(p, ProofTerm::TensorL { var_z, .. } if var_z == z),
        (_, Succedent::CoVar(_, LambekType::Over(..))) if !left_focus => matches!(p, ProofTerm::OverR { .. }),
        (_, Succedent::CoVar(_, LambekType::Under(..))) if !left_focus => matches!(p, ProofTerm::UnderR { .. }),
        _ => true,
    };
    ok_here && {
        let prems = premises(p, seq, pa).unwrap();
        p.children().into_iter().zip(&prems).all(|(c, s)| eagerly_inverted(c, s, pa))
    }
}
