//! Oriented atoms and multiplicative formulas in De Morgan normal form.
//!
//! Formulas are trees whose leaves are [`OrientedAtom`]s and whose internal
//! nodes are `⊗` or `⅋`. Negation is not a constructor: `negate` rewrites a
//! formula to the canonical representative of its dual, so equality of
//! formulas is structural equality.
//!
//! Text syntax: atoms are identifiers, `~` is negation, `*` is `⊗`, `|` is
//! `⅋`, with `*` binding tighter than `|` and both left-associative. The
//! Unicode connectives `¬`, `⊗`, `⅋` are accepted on input.

use std::fmt;

use thiserror::Error;

/// Polarity of an atom occurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// An atomic proposition: an unoriented atom name together with a sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedAtom {
    pub name: String,
    pub sign: Sign,
}

impl OrientedAtom {
    pub fn pos(name: impl Into<String>) -> Self {
        OrientedAtom { name: name.into(), sign: Sign::Pos }
    }

    pub fn neg(name: impl Into<String>) -> Self {
        OrientedAtom { name: name.into(), sign: Sign::Neg }
    }

    pub fn dual(&self) -> OrientedAtom {
        OrientedAtom { name: self.name.clone(), sign: self.sign.flipped() }
    }
}

impl fmt::Display for OrientedAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "{}", self.name),
            Sign::Neg => write!(f, "~{}", self.name),
        }
    }
}

/// A multiplicative formula in negation normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(OrientedAtom),
    Tensor(Box<Formula>, Box<Formula>),
    Par(Box<Formula>, Box<Formula>),
}

/// Sequence of oriented atoms, as produced by [`atom_sequence`].
pub type AtomSeq = Vec<OrientedAtom>;

impl Formula {
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(OrientedAtom::pos(name))
    }

    pub fn natom(name: impl Into<String>) -> Formula {
        Formula::Atom(OrientedAtom::neg(name))
    }

    pub fn tensor(a: Formula, b: Formula) -> Formula {
        Formula::Tensor(Box::new(a), Box::new(b))
    }

    pub fn par(a: Formula, b: Formula) -> Formula {
        Formula::Par(Box::new(a), Box::new(b))
    }

    /// Number of atom leaves.
    pub fn atom_len(&self) -> usize {
        match self {
            Formula::Atom(_) => 1,
            Formula::Tensor(a, b) | Formula::Par(a, b) => a.atom_len() + b.atom_len(),
        }
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self, Formula::Atom(_))
    }

    /// Connective count plus atom count; strictly decreases under cut-elimination.
    pub fn weight(&self) -> usize {
        match self {
            Formula::Atom(_) => 1,
            Formula::Tensor(a, b) | Formula::Par(a, b) => a.weight() + b.weight() + 1,
        }
    }
}

/// Canonical negation: `¬(A ⊗ B) = ¬B ⅋ ¬A`, `¬(A ⅋ B) = ¬B ⊗ ¬A`, and sign
/// flip on atoms. Involutive.
pub fn negate(f: &Formula) -> Formula {
    match f {
        Formula::Atom(a) => Formula::Atom(a.dual()),
        Formula::Tensor(a, b) => Formula::par(negate(b), negate(a)),
        Formula::Par(a, b) => Formula::tensor(negate(b), negate(a)),
    }
}

/// The map `a(-)`: leaves of the formula tree, left to right.
pub fn atom_sequence(f: &Formula) -> AtomSeq {
    fn walk(f: &Formula, out: &mut AtomSeq) {
        match f {
            Formula::Atom(a) => out.push(a.clone()),
            Formula::Tensor(a, b) | Formula::Par(a, b) => {
                walk(a, out);
                walk(b, out);
            }
        }
    }
    let mut out = Vec::with_capacity(f.atom_len());
    walk(f, &mut out);
    out
}

/// The involution `r`: reverse the sequence and flip every sign.
pub fn reverse_dual(s: &[OrientedAtom]) -> AtomSeq {
    s.iter().rev().map(|a| a.dual()).collect()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected end of input in formula")]
    UnexpectedEnd,
    #[error("unexpected character {0:?} at byte {1}")]
    UnexpectedChar(char, usize),
    #[error("trailing input after formula at byte {0}")]
    Trailing(usize),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.src[self.pos..].chars().next()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn parse_par(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.parse_tensor()?;
        while let Some(c) = self.peek() {
            if c == '|' || c == '⅋' {
                self.bump();
                let rhs = self.parse_tensor()?;
                lhs = Formula::par(lhs, rhs);
            } else {
                break;
            }
        }
        Ok(lhs)
    }

    fn parse_tensor(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.parse_unary()?;
        while let Some(c) = self.peek() {
            if c == '*' || c == '⊗' {
                self.bump();
                let rhs = self.parse_unary()?;
                lhs = Formula::tensor(lhs, rhs);
            } else {
                break;
            }
        }
        Ok(lhs)
    }

    fn parse_unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            None => Err(ParseError::UnexpectedEnd),
            Some('~') | Some('¬') => {
                self.bump();
                let inner = self.parse_unary()?;
                Ok(negate(&inner))
            }
            Some('(') => {
                self.bump();
                let inner = self.parse_par()?;
                match self.peek() {
                    Some(')') => {
                        self.bump();
                        Ok(inner)
                    }
                    Some(c) => Err(ParseError::UnexpectedChar(c, self.pos)),
                    None => Err(ParseError::UnexpectedEnd),
                }
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while let Some(c) = self.src[self.pos..].chars().next() {
                    if c.is_alphanumeric() || c == '_' || c == '\'' {
                        self.pos += c.len_utf8();
                    } else {
                        break;
                    }
                }
                Ok(Formula::atom(&self.src[start..self.pos]))
            }
            Some(c) => Err(ParseError::UnexpectedChar(c, self.pos)),
        }
    }
}

/// Parse the text syntax. Negation is pushed to the leaves during parsing, so
/// the result is always canonical.
pub fn parse(src: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(src);
    let f = p.parse_par()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(ParseError::Trailing(p.pos));
    }
    Ok(f)
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // levels: par 1, tensor 2, atom 3; right child of an equal-level
        // connective needs parens since both are left-associative
        fn level(f: &Formula) -> u8 {
            match f {
                Formula::Atom(_) => 3,
                Formula::Tensor(_, _) => 2,
                Formula::Par(_, _) => 1,
            }
        }
        fn go(f: &Formula, out: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
            let lv = level(f);
            let parens = lv < min;
            if parens {
                write!(out, "(")?;
            }
            match f {
                Formula::Atom(a) => write!(out, "{a}")?,
                Formula::Tensor(a, b) => {
                    go(a, out, lv)?;
                    write!(out, "*")?;
                    go(b, out, lv + 1)?;
                }
                Formula::Par(a, b) => {
                    go(a, out, lv)?;
                    write!(out, "|")?;
                    go(b, out, lv + 1)?;
                }
            }
            if parens {
                write!(out, ")")?;
            }
            Ok(())
        }
        go(self, f, 0)
    }
}
