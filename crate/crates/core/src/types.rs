//! Lambek type formulas, polarity, and lexicons.
//!
//! Surface syntax for types: atoms are identifiers, `*` is the product,
//! `A\B` takes an `A` on the left to give `B`, `B/A` takes an `A` on the
//! right to give `B`. Slashes bind tighter than `*`, and neither operator
//! may be chained without parentheses (`np\s/np` and `a*b*c` are rejected).

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LambekType {
    Atom(String),
    /// `left * right`
    Tensor(Box<LambekType>, Box<LambekType>),
    /// `left \ right`: argument on the left, result on the right.
    Under(Box<LambekType>, Box<LambekType>),
    /// `left / right`: result on the left, argument on the right.
    Over(Box<LambekType>, Box<LambekType>),
}

impl LambekType {
    pub fn atom(name: impl Into<String>) -> Self {
        LambekType::Atom(name.into())
    }

    pub fn tensor(left: LambekType, right: LambekType) -> Self {
        LambekType::Tensor(Box::new(left), Box::new(right))
    }

    /// `arg \ result`
    pub fn under(arg: LambekType, result: LambekType) -> Self {
        LambekType::Under(Box::new(arg), Box::new(result))
    }

    /// `result / arg`
    pub fn over(result: LambekType, arg: LambekType) -> Self {
        LambekType::Over(Box::new(result), Box::new(arg))
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, LambekType::Atom(_))
    }

    /// Number of binary connectives in the formula.
    pub fn connectives(&self) -> usize {
        match self {
            LambekType::Atom(_) => 0,
            LambekType::Tensor(a, b) | LambekType::Under(a, b) | LambekType::Over(a, b) => {
                1 + a.connectives() + b.connectives()
            }
        }
    }

    /// Atom names in left-to-right order, with repetitions.
    pub fn atoms(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            LambekType::Atom(name) => out.push(name),
            LambekType::Tensor(a, b) | LambekType::Under(a, b) | LambekType::Over(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }
}

impl fmt::Display for LambekType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_type(self))
    }
}

/// Prints with the minimal parentheses accepted by [`parse_type`].
pub fn print_type(t: &LambekType) -> String {
    fn operand(t: &LambekType, parent_is_slash: bool) -> String {
        let needs_parens = match t {
            LambekType::Atom(_) => false,
            LambekType::Tensor(..) => true,
            LambekType::Under(..) | LambekType::Over(..) => parent_is_slash,
        };
        if needs_parens {
            format!("({})", print_type(t))
        } else {
            print_type(t)
        }
    }
    match t {
        LambekType::Atom(name) => name.clone(),
        LambekType::Tensor(a, b) => format!("{}*{}", operand(a, false), operand(b, false)),
        LambekType::Under(a, b) => format!("{}\\{}", operand(a, true), operand(b, true)),
        LambekType::Over(a, b) => format!("{}/{}", operand(a, true), operand(b, true)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TypeError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Polarity {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Polarity {
    pub fn is_positive(self) -> bool {
        self == Polarity::Positive
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Polarity::Positive => "+",
            Polarity::Negative => "-",
        })
    }
}

/// Declared atom set together with the polarity bias of each atom.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PolarityAssignment {
    atoms: BTreeMap<String, Polarity>,
}

impl PolarityAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// `np:+ n:+ s:-`, the bias used for quantified sentences.
    pub fn standard() -> Self {
        let mut pa = Self::new();
        pa.set("np", Polarity::Positive);
        pa.set("n", Polarity::Positive);
        pa.set("s", Polarity::Negative);
        pa
    }

    pub fn set(&mut self, atom: impl Into<String>, pol: Polarity) -> &mut Self {
        self.atoms.insert(atom.into(), pol);
        self
    }

    pub fn get(&self, atom: &str) -> Option<Polarity> {
        self.atoms.get(atom).copied()
    }

    pub fn contains(&self, atom: &str) -> bool {
        self.atoms.contains_key(atom)
    }

    pub fn atoms(&self) -> impl Iterator<Item = (&str, Polarity)> {
        self.atoms.iter().map(|(k, v)| (k.as_str(), *v))
    }

    /// Parses `np:+ n:+ s:-`.
    pub fn parse(src: &str) -> Result<Self, TypeError> {
        let mut pa = Self::new();
        let mut offset = 0;
        for tok in src.split_whitespace() {
            let pos = src[offset..].find(tok).map_or(offset, |p| p + offset);
            offset = pos + tok.len();
            let (name, pol) = tok.split_once(':').ok_or_else(|| TypeError::Syntax {
                pos,
                msg: format!("expected `atom:+` or `atom:-`, found `{tok}`"),
            })?;
            if !is_ident(name) {
                return Err(TypeError::Syntax { pos, msg: format!("bad atom name `{name}`") });
            }
            let pol = match pol {
                "+" => Polarity::Positive,
                "-" => Polarity::Negative,
                other => {
                    return Err(TypeError::Syntax {
                        pos: pos + name.len() + 1,
                        msg: format!("polarity must be `+` or `-`, found `{other}`"),
                    })
                }
            };
            pa.set(name, pol);
        }
        Ok(pa)
    }
}

impl fmt::Display for PolarityAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.atoms.iter().map(|(a, p)| format!("{a}:{p}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Product types are positive, implications negative, atoms follow `pa`.
pub fn polarity(pa: &PolarityAssignment, t: &LambekType) -> Result<Polarity, TypeError> {
    match t {
        LambekType::Atom(name) => pa.get(name).ok_or_else(|| TypeError::UnknownAtom(name.clone())),
        LambekType::Tensor(..) => Ok(Polarity::Positive),
        LambekType::Under(..) | LambekType::Over(..) => Ok(Polarity::Negative),
    }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses a type and checks every atom against `atoms`.
pub fn parse_type(src: &str, atoms: &PolarityAssignment) -> Result<LambekType, TypeError> {
    let t = parse_type_unchecked(src)?;
    if let Some(bad) = t.atoms().into_iter().find(|a| !atoms.contains(a)) {
        return Err(TypeError::UnknownAtom(bad.to_string()));
    }
    Ok(t)
}

/// Parses a type without an atom whitelist.
pub fn parse_type_unchecked(src: &str) -> Result<LambekType, TypeError> {
    let mut p = TypeParser { src: src.as_bytes(), pos: 0 };
    let t = p.product()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(t)
}

struct TypeParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl TypeParser<'_> {
    fn error(&self, msg: impl Into<String>) -> TypeError {
        TypeError::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn product(&mut self) -> Result<LambekType, TypeError> {
        let left = self.slashed()?;
        if self.peek() != Some(b'*') {
            return Ok(left);
        }
        self.pos += 1;
        let right = self.slashed()?;
        if self.peek() == Some(b'*') {
            return Err(self.error("ambiguous `*` chain; add parentheses"));
        }
        Ok(LambekType::tensor(left, right))
    }

    fn slashed(&mut self) -> Result<LambekType, TypeError> {
        let left = self.primary()?;
        let op = match self.peek() {
            Some(c @ (b'/' | b'\\')) => c,
            _ => return Ok(left),
        };
        self.pos += 1;
        let right = self.primary()?;
        if matches!(self.peek(), Some(b'/' | b'\\')) {
            return Err(self.error("ambiguous slash chain; add parentheses"));
        }
        Ok(if op == b'/' { LambekType::over(left, right) } else { LambekType::under(left, right) })
    }

    fn primary(&mut self) -> Result<LambekType, TypeError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let t = self.product()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(t)
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                // The slice is ASCII by construction.
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or_default();
                Ok(LambekType::atom(name))
            }
            Some(c) => Err(self.error(format!("expected atom or `(`, found `{}`", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexEntry {
    pub word: String,
    pub ty: LambekType,
    pub sem_key: String,
}

/// A relation between words and types, with a distinguished goal type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexicon {
    pub atoms: PolarityAssignment,
    pub goal: LambekType,
    entries: Vec<LexEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LexiconError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Type { line: usize, source: TypeError },
    #[error("missing `goal` header line")]
    MissingGoal,
    #[error("lexicon has no entries")]
    Empty,
}

impl Lexicon {
    pub fn new(atoms: PolarityAssignment, goal: LambekType) -> Self {
        Lexicon { atoms, goal, entries: Vec::new() }
    }

    pub fn add(&mut self, word: impl Into<String>, ty: LambekType, sem_key: impl Into<String>) {
        let entry = LexEntry { word: word.into(), ty, sem_key: sem_key.into() };
        if !self.entries.contains(&entry) {
            self.entries.push(entry);
        }
    }

    pub fn entries(&self) -> &[LexEntry] {
        &self.entries
    }

    /// Entries for `word` in file order.
    pub fn entries_for<'a>(&'a self, word: &'a str) -> impl Iterator<Item = &'a LexEntry> + 'a {
        self.entries.iter().filter(move |e| e.word == word)
    }

    /// All types related to `word`; empty when the word is absent.
    pub fn lookup(&self, word: &str) -> Vec<LambekType> {
        let mut out: Vec<LambekType> = Vec::new();
        for e in self.entries_for(word) {
            if !out.contains(&e.ty) {
                out.push(e.ty.clone());
            }
        }
        out
    }

    /// Parses the lexicon format: one record per line, fields separated
    /// by tabs (shown here as `|`).
    ///
    /// ```text
    /// # comment
    /// atoms | np:+ n:+ s:-
    /// goal  | s
    /// every | np/n | every
    /// ```
    ///
    /// The `atoms` header is optional and defaults to
    /// [`PolarityAssignment::standard`].
    pub fn parse(src: &str) -> Result<Self, LexiconError> {
        let lines: Vec<(usize, Vec<&str>)> = src
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .map(|(i, l)| (i, l.split('\t').map(str::trim).collect()))
            .collect();

        let mut atoms = None;
        for (line, fields) in &lines {
            if fields.len() == 2 && fields[0] == "atoms" {
                if atoms.is_some() {
                    return Err(LexiconError::Line { line: *line, msg: "duplicate `atoms` header".into() });
                }
                atoms = Some(
                    PolarityAssignment::parse(fields[1])
                        .map_err(|source| LexiconError::Type { line: *line, source })?,
                );
            }
        }
        let atoms = atoms.unwrap_or_else(PolarityAssignment::standard);

        let mut goal = None;
        let mut entries = Vec::new();
        for (line, fields) in lines {
            match fields.as_slice() {
                ["atoms", _] => {}
                ["goal", ty] => {
                    if goal.is_some() {
                        return Err(LexiconError::Line { line, msg: "duplicate `goal` header".into() });
                    }
                    goal = Some(parse_type(ty, &atoms).map_err(|source| LexiconError::Type { line, source })?);
                }
                [word, ty, key] => {
                    if word.is_empty() || word.contains(char::is_whitespace) {
                        return Err(LexiconError::Line { line, msg: format!("invalid word `{word}`") });
                    }
                    if key.is_empty() {
                        return Err(LexiconError::Line { line, msg: "empty semantics key".into() });
                    }
                    let ty = parse_type(ty, &atoms).map_err(|source| LexiconError::Type { line, source })?;
                    entries.push(LexEntry { word: word.to_string(), ty, sem_key: key.to_string() });
                }
                _ => {
                    return Err(LexiconError::Line {
                        line,
                        msg: format!(
                            "expected `word<TAB>type<TAB>key` or a header line, found {} field(s)",
                            fields.len()
                        ),
                    })
                }
            }
        }
        let goal = goal.ok_or(LexiconError::MissingGoal)?;
        if entries.is_empty() {
            return Err(LexiconError::Empty);
        }
        let mut lex = Lexicon::new(atoms, goal);
        for e in entries {
            lex.add(e.word, e.ty, e.sem_key);
        }
        Ok(lex)
    }
}
