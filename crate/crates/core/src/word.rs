//! Words in the dualization generators `X`, `Y`, `Z`.
//!
//! A [`Word`] is a plain letter sequence; all group semantics live in
//! [`crate::symbolic`]. The textual grammar is
//!
//! ```text
//! word := '1' | term+
//! term := atom ('^' uint)?
//! atom := 'X' | 'Y' | 'Z' | '(' word ')'
//! ```
//!
//! Whitespace is ignored. `1` denotes the empty word.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 10_000;

/// Largest number of letters a parsed word may expand to.
pub const MAX_EXPANDED_LEN: usize = 1_000_000;

/// One of the three dualization operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    X,
    Y,
    Z,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::X, Generator::Y, Generator::Z];

    pub fn letter(self) -> char {
        match self {
            Generator::X => 'X',
            Generator::Y => 'Y',
            Generator::Z => 'Z',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'X' => Some(Generator::X),
            'Y' => Some(Generator::Y),
            'Z' => Some(Generator::Z),
            _ => None,
        }
    }

    /// The side index (1, 2 or 3) this generator swaps with the ultracore dual.
    pub fn axis(self) -> usize {
        match self {
            Generator::X => 1,
            Generator::Y => 2,
            Generator::Z => 3,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A finite sequence of generators, applied leftmost first.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Generator>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Formal inverse: every generator is an involution, so this is reversal.
    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn pow(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }

    pub fn push(&mut self, g: Generator) {
        self.0.push(g);
    }
}

impl From<Generator> for Word {
    fn from(g: Generator) -> Self {
        Word(vec![g])
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for g in &self.0 {
            write!(f, "{}", g.letter())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_word(&s).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    UnexpectedChar(char),
    UnexpectedEnd,
    UnbalancedParen,
    MissingExponent,
    ExponentTooLarge,
    TooLong,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Empty => write!(f, "empty input (use `1` for the identity)"),
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input"),
            ParseErrorKind::UnbalancedParen => write!(f, "unbalanced parenthesis"),
            ParseErrorKind::MissingExponent => write!(f, "expected digits after '^'"),
            ParseErrorKind::ExponentTooLarge => {
                write!(f, "exponent exceeds {MAX_EXPONENT}")
            }
            ParseErrorKind::TooLong => {
                write!(f, "word expands to more than {MAX_EXPANDED_LEN} letters")
            }
        }
    }
}

/// Syntax error with the byte offset where it was detected.
#[derive(Error, Clone, Debug, PartialEq, Eq)]
#[error("parse error at offset {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

/// Parses a word, expanding all exponents.
pub fn parse_word(text: &str) -> Result<Word, ParseError> {
    let mut parser = Parser {
        tokens: text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect(),
        pos: 0,
        end: text.len(),
    };
    if parser.tokens.is_empty() {
        return Err(ParseError {
            offset: 0,
            kind: ParseErrorKind::Empty,
        });
    }
    let word = parser.word()?;
    match parser.peek() {
        None => Ok(word),
        Some((offset, ')')) => Err(ParseError {
            offset,
            kind: ParseErrorKind::UnbalancedParen,
        }),
        Some((offset, c)) => Err(ParseError {
            offset,
            kind: ParseErrorKind::UnexpectedChar(c),
        }),
    }
}

/// Formats a word; the empty word is `1`.
pub fn format_word(w: &Word) -> String {
    w.to_string()
}

struct Parser {
    tokens: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<(usize, char)> {
        self.tokens.get(self.pos).copied()
    }

    fn offset(&self) -> usize {
        self.peek().map_or(self.end, |(o, _)| o)
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            offset: self.offset(),
            kind,
        }
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        if let Some((_, '1')) = self.peek() {
            self.pos += 1;
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        let mut terms = 0;
        loop {
            match self.peek() {
                Some((_, 'X' | 'Y' | 'Z' | '(')) => {
                    let start = self.offset();
                    let term = self.term()?;
                    if letters.len() + term.len() > MAX_EXPANDED_LEN {
                        return Err(ParseError {
                            offset: start,
                            kind: ParseErrorKind::TooLong,
                        });
                    }
                    letters.extend(term);
                    terms += 1;
                }
                _ if terms == 0 => {
                    return Err(match self.peek() {
                        None => self.err(ParseErrorKind::UnexpectedEnd),
                        Some((_, ')')) => self.err(ParseErrorKind::UnbalancedParen),
                        Some((_, c)) => self.err(ParseErrorKind::UnexpectedChar(c)),
                    });
                }
                _ => return Ok(Word(letters)),
            }
        }
    }

    fn term(&mut self) -> Result<Vec<Generator>, ParseError> {
        let start = self.offset();
        let atom = self.atom()?;
        if let Some((_, '^')) = self.peek() {
            self.pos += 1;
            let n = self.uint()?;
            if atom.len().saturating_mul(n as usize) > MAX_EXPANDED_LEN {
                return Err(ParseError {
                    offset: start,
                    kind: ParseErrorKind::TooLong,
                });
            }
            return Ok(atom.repeat(n as usize));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Vec<Generator>, ParseError> {
        match self.peek() {
            Some((_, '(')) => {
                let open = self.offset();
                self.pos += 1;
                let inner = self.word()?;
                match self.peek() {
                    Some((_, ')')) => {
                        self.pos += 1;
                        Ok(inner.0)
                    }
                    None => Err(ParseError {
                        offset: open,
                        kind: ParseErrorKind::UnbalancedParen,
                    }),
                    Some((_, c)) => Err(self.err(ParseErrorKind::UnexpectedChar(c))),
                }
            }
            Some((_, c)) => match Generator::from_letter(c) {
                Some(g) => {
                    self.pos += 1;
                    Ok(vec![g])
                }
                None => Err(self.err(ParseErrorKind::UnexpectedChar(c))),
            },
            None => Err(self.err(ParseErrorKind::UnexpectedEnd)),
        }
    }

    fn uint(&mut self) -> Result<u32, ParseError> {
        let start = self.offset();
        let mut value: u64 = 0;
        let mut digits = 0;
        while let Some((_, c)) = self.peek() {
            let Some(d) = c.to_digit(10) else { break };
            value = value * 10 + u64::from(d);
            digits += 1;
            self.pos += 1;
            if value > u64::from(MAX_EXPONENT) {
                return Err(ParseError {
                    offset: start,
                    kind: ParseErrorKind::ExponentTooLarge,
                });
            }
        }
        if digits == 0 {
            return Err(ParseError {
                offset: start,
                kind: ParseErrorKind::MissingExponent,
            });
        }
        Ok(value as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn w(letters: &[Generator]) -> Word {
        Word::new(letters.to_vec())
    }

    #[test]
    fn plain_letters() {
        assert_eq!(parse_word("XYXZ").unwrap(), w(&[X, Y, X, Z]));
    }

    #[test]
    fn exponent_expansion() {
        assert_eq!(parse_word("(XY)^3").unwrap(), w(&[X, Y, X, Y, X, Y]));
        assert_eq!(parse_word("X^2Y").unwrap(), w(&[X, X, Y]));
        assert_eq!(parse_word("((XY)^2Z)^2").unwrap().len(), 10);
        assert_eq!(parse_word("X^0").unwrap(), Word::empty());
    }

    #[test]
    fn identity_literal() {
        assert_eq!(parse_word("1").unwrap(), Word::empty());
        assert_eq!(parse_word(" 1 ").unwrap(), Word::empty());
        assert_eq!(parse_word("(1)^3").unwrap(), Word::empty());
    }

    #[test]
    fn whitespace_is_ignored() {
        assert_eq!(parse_word(" ( X Y ) ^ 2 ").unwrap(), w(&[X, Y, X, Y]));
    }

    #[test]
    fn alphabet_violation_reports_offset() {
        let err = parse_word("XW").unwrap_err();
        assert_eq!(err.offset, 1);
        assert_eq!(err.kind, ParseErrorKind::UnexpectedChar('W'));
        assert_eq!(parse_word("xy").unwrap_err().offset, 0);
    }

    #[test]
    fn syntax_errors() {
        assert_eq!(parse_word("").unwrap_err().kind, ParseErrorKind::Empty);
        assert_eq!(parse_word("   ").unwrap_err().kind, ParseErrorKind::Empty);
        assert_eq!(
            parse_word("(XY").unwrap_err(),
            ParseError {
                offset: 0,
                kind: ParseErrorKind::UnbalancedParen
            }
        );
        assert_eq!(parse_word("XY)").unwrap_err().offset, 2);
        assert_eq!(
            parse_word("X^").unwrap_err().kind,
            ParseErrorKind::MissingExponent
        );
        assert_eq!(
            parse_word("X^Y").unwrap_err(),
            ParseError {
                offset: 2,
                kind: ParseErrorKind::MissingExponent
            }
        );
        assert_eq!(parse_word("()").unwrap_err().offset, 1);
        assert_eq!(parse_word("1X").unwrap_err().offset, 1);
        assert_eq!(parse_word("X1").unwrap_err().offset, 1);
        assert!(parse_word("^2").is_err());
    }

    #[test]
    fn exponent_bound() {
        assert_eq!(parse_word("X^10000").unwrap().len(), 10_000);
        assert_eq!(
            parse_word("X^10001").unwrap_err().kind,
            ParseErrorKind::ExponentTooLarge
        );
        assert_eq!(
            parse_word("(X^10000)^10000").unwrap_err().kind,
            ParseErrorKind::TooLong
        );
    }

    #[test]
    fn formatting() {
        assert_eq!(format_word(&w(&[X, Y, X, Z])), "XYXZ");
        assert_eq!(format_word(&Word::empty()), "1");
    }

    #[test]
    fn format_of_parse_is_idempotent() {
        for text in ["(XYXZ)^2", "1", "X (YZ)^3 X", "((XY)^2Z)^2"] {
            let once = format_word(&parse_word(text).unwrap());
            let twice = format_word(&parse_word(&once).unwrap());
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn serde_uses_grammar() {
        let word = parse_word("(XY)^2").unwrap();
        let json = serde_json::to_string(&word).unwrap();
        assert_eq!(json, "\"XYXY\"");
        let back: Word = serde_json::from_str("\"(XY)^2\"").unwrap();
        assert_eq!(back, word);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn any_word(max: usize) -> impl Strategy<Value = Word> {
            prop::collection::vec(prop::sample::select(Generator::ALL.to_vec()), 0..=max)
                .prop_map(Word::new)
        }

        proptest! {
            #[test]
            fn parse_inverts_format(word in any_word(20)) {
                prop_assert_eq!(parse_word(&format_word(&word)).unwrap(), word);
            }

            #[test]
            fn reversal_is_involutive(word in any_word(12)) {
                prop_assert_eq!(word.reversed().reversed(), word);
            }
        }
    }
}
