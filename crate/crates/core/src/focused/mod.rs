//! Backward proof search in the polarised, focused sequent calculus for NL.

mod checker;
mod search;
mod sequent;
mod term;

use std::fmt;

pub use checker::{check_proof, premises, render, CheckError};
pub use search::prove_all;
pub use sequent::{Sequent, Structure, Succedent};
pub use term::{alpha_eq, ProofTerm};

use crate::types::{LexEntry, Lexicon};

pub const DEFAULT_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProverError {
    #[error("more than {limit} proofs")]
    LimitExceeded { limit: usize },
    #[error("ill-formed sequent: {0}")]
    IllFormed(String),
    #[error("atom `{0}` has no polarity")]
    UnknownAtom(String),
}

/// A binary bracketing of word positions (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bracketing {
    Word(usize),
    Pair(Box<Bracketing>, Box<Bracketing>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BracketError {
    #[error("bracket syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("bracketing must list words 1..{expected} in order, found {found}")]
    Order { expected: usize, found: String },
}

impl Bracketing {
    fn pair(l: Bracketing, r: Bracketing) -> Self {
        Bracketing::Pair(Box::new(l), Box::new(r))
    }

    /// The first two words grouped, the rest right-branching:
    /// `((1 2) (3 (4 5)))` for five words.
    pub fn default_for(n: usize) -> Option<Self> {
        fn right(from: usize, n: usize) -> Bracketing {
            if from + 1 == n {
                Bracketing::Word(from)
            } else {
                Bracketing::pair(Bracketing::Word(from), right(from + 1, n))
            }
        }
        match n {
            0 => None,
            1 => Some(Bracketing::Word(0)),
            2 => Some(Bracketing::pair(Bracketing::Word(0), Bracketing::Word(1))),
            _ => Some(Bracketing::pair(Bracketing::pair(Bracketing::Word(0), Bracketing::Word(1)), right(2, n))),
        }
    }

    /// Word positions left to right.
    pub fn positions(&self) -> Vec<usize> {
        match self {
            Bracketing::Word(i) => vec![*i],
            Bracketing::Pair(l, r) => {
                let mut v = l.positions();
                v.extend(r.positions());
                v
            }
        }
    }

    /// Checks that the leaves are exactly `0..n` in order.
    pub fn validate(&self, n: usize) -> Result<(), BracketError> {
        let pos = self.positions();
        if pos != (0..n).collect::<Vec<_>>() {
            return Err(BracketError::Order { expected: n, found: self.to_string() });
        }
        Ok(())
    }
}

impl fmt::Display for Bracketing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracketing::Word(i) => write!(f, "{}", i + 1),
            Bracketing::Pair(l, r) => write!(f, "({l} {r})"),
        }
    }
}

/// Parses `((1 2)(3 (4 5)))`; word numbers are 1-based.
pub fn parse_brackets(src: &str) -> Result<Bracketing, BracketError> {
    struct P<'a> {
        s: &'a [u8],
        pos: usize,
    }
    impl P<'_> {
        fn ws(&mut self) {
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
        }
        fn err(&self, msg: &str) -> BracketError {
            BracketError::Syntax { pos: self.pos, msg: msg.to_string() }
        }
        fn node(&mut self, depth: usize) -> Result<Bracketing, BracketError> {
            if depth > 256 {
                return Err(self.err("nesting too deep"));
            }
            self.ws();
            match self.s.get(self.pos) {
                Some(b'(') => {
                    self.pos += 1;
                    let l = self.node(depth + 1)?;
                    let r = self.node(depth + 1)?;
                    self.ws();
                    if self.s.get(self.pos) != Some(&b')') {
                        return Err(self.err("expected `)`"));
                    }
                    self.pos += 1;
                    Ok(Bracketing::pair(l, r))
                }
                Some(c) if c.is_ascii_digit() => {
                    let start = self.pos;
                    while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
                    match text.parse::<usize>() {
                        Ok(k) if k >= 1 => Ok(Bracketing::Word(k - 1)),
                        _ => Err(BracketError::Syntax { pos: start, msg: format!("bad word number `{text}`") }),
                    }
                }
                Some(_) => Err(self.err("expected `(` or a word number")),
                None => Err(self.err("unexpected end of input")),
            }
        }
    }
    let mut p = P { s: src.as_bytes(), pos: 0 };
    let b = p.node(0)?;
    p.ws();
    if p.pos < p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(b)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SentenceError {
    #[error("unknown word `{0}`")]
    UnknownWord(String),
    #[error("empty sentence")]
    Empty,
    #[error(transparent)]
    Brackets(#[from] BracketError),
    #[error("{0} lexical type combinations exceed the limit")]
    TooManyCombinations(usize),
}

/// A root sequent together with the lexical entry chosen for each word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SentenceSequent {
    pub sequent: Sequent,
    pub entries: Vec<LexEntry>,
}

/// One root sequent per combination of lexical entries, in lexicon order.
/// Word `i` is bound to the variable `x<i>`; the goal is under right focus.
pub fn sentence_sequents<S: AsRef<str>>(
    words: &[S],
    lex: &Lexicon,
    brackets: &Bracketing,
    limit: usize,
) -> Result<Vec<SentenceSequent>, SentenceError> {
    if words.is_empty() {
        return Err(SentenceError::Empty);
    }
    brackets.validate(words.len())?;
    let mut choices: Vec<Vec<&LexEntry>> = Vec::new();
    for w in words {
        let es: Vec<&LexEntry> = lex.entries_for(w.as_ref()).collect();
        if es.is_empty() {
            return Err(SentenceError::UnknownWord(w.as_ref().to_string()));
        }
        choices.push(es);
    }
    let total = choices.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()));
    match total {
        Some(t) if t <= limit => {}
        Some(t) => return Err(SentenceError::TooManyCombinations(t)),
        None => return Err(SentenceError::TooManyCombinations(usize::MAX)),
    }
    let mut combos: Vec<Vec<&LexEntry>> = vec![vec![]];
    for c in &choices {
        combos = combos
            .into_iter()
            .flat_map(|prefix| {
                c.iter().map(move |e| {
                    let mut v = prefix.clone();
                    v.push(*e);
                    v
                })
            })
            .collect();
    }
    Ok(combos
        .into_iter()
        .map(|entries| {
            let ant = build(brackets, &entries);
            SentenceSequent {
                sequent: Sequent::new(ant, Succedent::Focus(lex.goal.clone())),
                entries: entries.into_iter().cloned().collect(),
            }
        })
        .collect())
}

fn build(b: &Bracketing, entries: &[&LexEntry]) -> Structure {
    match b {
        Bracketing::Word(i) => Structure::leaf(format!("x{i}"), entries[*i].ty.clone()),
        Bracketing::Pair(l, r) => Structure::bullet(build(l, entries), build(r, entries)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{parse_type_unchecked as ty, PolarityAssignment};

    fn lexicon() -> Lexicon {
        Lexicon::parse(
            "goal\ts\nevery\tnp/n\tevery\nstudent\tn\tnoun:student\nlikes\t(np\\s)/np\ttv:likes\n\
             some\tnp/n\tsome\nteacher\tn\tnoun:teacher\nbank\tn\tnoun:bank\nbank\tnp\tname:b\n",
        )
        .unwrap()
    }

    #[test]
    fn default_bracketing_shapes() {
        assert_eq!(Bracketing::default_for(5).unwrap().to_string(), "((1 2) (3 (4 5)))");
        assert_eq!(Bracketing::default_for(3).unwrap().to_string(), "((1 2) 3)");
        assert_eq!(Bracketing::default_for(1).unwrap().to_string(), "1");
        assert!(Bracketing::default_for(0).is_none());
    }

    #[test]
    fn bracket_parsing() {
        let b = parse_brackets("((1 2)(3 (4 5)))").unwrap();
        assert_eq!(b, Bracketing::default_for(5).unwrap());
        assert_eq!(parse_brackets(&b.to_string()).unwrap(), b);
        assert!(matches!(parse_brackets("((1 2)"), Err(BracketError::Syntax { .. })));
        assert!(matches!(parse_brackets("(0 1)"), Err(BracketError::Syntax { .. })));
        assert!(parse_brackets("(1 2) 3").is_err());
        assert!(parse_brackets("(2 1)").unwrap().validate(2).is_err());
    }

    #[test]
    fn scope_root_sequent() {
        let words = ["every", "student", "likes", "some", "teacher"];
        let seqs = sentence_sequents(&words, &lexicon(), &Bracketing::default_for(5).unwrap(), 64).unwrap();
        assert_eq!(seqs.len(), 1);
        assert_eq!(seqs[0].sequent.to_string(), "(x0:np/n • x1:n) • (x2:(np\\s)/np • (x3:np/n • x4:n)) ⊢ [s]");
    }

    #[test]
    fn single_word_and_ambiguous_word() {
        let mut lex = lexicon();
        lex.goal = ty("n").unwrap();
        let seqs = sentence_sequents(&["student"], &lex, &Bracketing::Word(0), 64).unwrap();
        assert_eq!(seqs[0].sequent.to_string(), "x0:n ⊢ [n]");
        assert_eq!(sentence_sequents(&["bank"], &lex, &Bracketing::Word(0), 64).unwrap().len(), 2);
        assert_eq!(
            sentence_sequents(&["zzz"], &lex, &Bracketing::Word(0), 64),
            Err(SentenceError::UnknownWord("zzz".into()))
        );
    }

    #[test]
    fn axiom_sequent_has_one_proof() {
        let seq = Sequent::new(Structure::leaf("x", ty("np").unwrap()), Succedent::Focus(ty("np").unwrap()));
        let pa = PolarityAssignment::standard();
        let proofs = prove_all(&seq, &pa, DEFAULT_LIMIT).unwrap();
        assert_eq!(proofs, vec![ProofTerm::Ax { ty: ty("np").unwrap(), var: "x".into() }]);
        assert_eq!(render(&proofs[0], &seq, &pa).unwrap(), "Ax: x:np ⊢ [np]");
    }

    #[test]
    fn ill_formed_sequents_rejected() {
        let pa = PolarityAssignment::standard();
        let two_foci = Sequent::new(Structure::Focus(ty("np").unwrap()), Succedent::Focus(ty("np").unwrap()));
        assert!(matches!(prove_all(&two_foci, &pa, 8), Err(ProverError::IllFormed(_))));
        let dup = Sequent::new(
            Structure::bullet(Structure::leaf("x", ty("np").unwrap()), Structure::leaf("x", ty("n").unwrap())),
            Succedent::Focus(ty("s").unwrap()),
        );
        assert!(matches!(prove_all(&dup, &pa, 8), Err(ProverError::IllFormed(_))));
        let unknown = Sequent::new(Structure::leaf("x", ty("pp").unwrap()), Succedent::Focus(ty("pp").unwrap()));
        assert_eq!(prove_all(&unknown, &pa, 8), Err(ProverError::UnknownAtom("pp".into())));
    }

    #[test]
    fn invertible_rules_and_products() {
        let pa = PolarityAssignment::standard();
        // z: np*n ⊢ [np*n] needs ⊗L before ⊗R.
        let seq = Sequent::new(Structure::leaf("z", ty("np*n").unwrap()), Succedent::Focus(ty("np*n").unwrap()));
        let proofs = prove_all(&seq, &pa, 8).unwrap();
        assert_eq!(proofs.len(), 1);
        check_proof(&proofs[0], &seq, &pa).unwrap();
        // Type raising: x:np ⊢ [s/(np\s)].
        let seq = Sequent::new(Structure::leaf("x", ty("np").unwrap()), Succedent::Focus(ty("s/(np\\s)").unwrap()));
        let proofs = prove_all(&seq, &pa, 8).unwrap();
        assert_eq!(proofs.len(), 1);
        check_proof(&proofs[0], &seq, &pa).unwrap();
        assert!(matches!(proofs[0], ProofTerm::FocR { .. }));
    }

    #[test]
    fn limit_is_enforced() {
        let words = ["every", "student", "likes", "some", "teacher"];
        let seqs = sentence_sequents(&words, &lexicon(), &Bracketing::default_for(5).unwrap(), 64).unwrap();
        let pa = PolarityAssignment::standard();
        assert_eq!(prove_all(&seqs[0].sequent, &pa, 1), Err(ProverError::LimitExceeded { limit: 1 }));
        assert_eq!(prove_all(&seqs[0].sequent, &pa, 2).unwrap().len(), 2);
    }

    #[test]
    fn checker_rejects_tampered_proofs() {
        let pa = PolarityAssignment::standard();
        let seq = Sequent::new(Structure::leaf("x", ty("np").unwrap()), Succedent::Focus(ty("np").unwrap()));
        let wrong_var = ProofTerm::Ax { ty: ty("np").unwrap(), var: "y".into() };
        assert!(check_proof(&wrong_var, &seq, &pa).is_err());
        let neg_seq = Sequent::new(Structure::leaf("x", ty("s").unwrap()), Succedent::Focus(ty("s").unwrap()));
        let bad_pol = ProofTerm::Ax { ty: ty("s").unwrap(), var: "x".into() };
        let err = check_proof(&bad_pol, &neg_seq, &pa).unwrap_err();
        assert_eq!(err.rule, "Ax");
    }
}
