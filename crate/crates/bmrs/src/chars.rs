//! Alphabets and strings viewed as finite structures.
//!
//! A string of length n is the structure whose domain is {0, …, n−1},
//! with one unary predicate per character and clamped successor and
//! predecessor on indices. The clamping lives in the evaluator; here we
//! keep the data.

use std::fmt;

use crate::error::{Error, Result};

/// The reserved blank token. It may not appear in user-declared
/// alphabets; it enters programs only through blank extension.
pub const BLANK: &str = "_";

/// A character: a single printable codepoint or a quoted multi-codepoint
/// token. The blank `_` is reserved and distinguishable from all user
/// characters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character(String);

impl Character {
    pub fn new(symbol: impl Into<String>) -> Self {
        Character(symbol.into())
    }

    pub fn blank() -> Self {
        Character(BLANK.to_string())
    }

    pub fn is_blank(&self) -> bool {
        self.0 == BLANK
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// True when the symbol prints without quotes: one codepoint that is
    /// alphanumeric and not a keyword single-letter (`x`, `S`, `P`).
    pub fn is_bare_printable(&self) -> bool {
        let mut cp = self.0.chars();
        match (cp.next(), cp.next()) {
            (Some(c), None) => c.is_alphanumeric() && !matches!(c, 'x' | 'S' | 'P'),
            _ => false,
        }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_blank() {
            write!(f, "_")
        } else if self.is_bare_printable() {
            write!(f, "{}", self.0)
        } else {
            write!(f, "'{}'", self.0)
        }
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite ordered set of characters. The declared order is part of the
/// value: it fixes canonical printing and the branch order of generated
/// conditional chains.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    chars: Vec<Character>,
}

impl Alphabet {
    pub fn new(chars: Vec<Character>) -> Result<Self> {
        if chars.is_empty() {
            return Err(Error::Domain("alphabet must be non-empty".into()));
        }
        for (i, c) in chars.iter().enumerate() {
            if chars[..i].contains(c) {
                return Err(Error::Domain(format!("duplicate character `{c}` in alphabet")));
            }
        }
        Ok(Alphabet { chars })
    }

    /// Convenience constructor from single-codepoint symbols.
    pub fn from_symbols(symbols: &str) -> Result<Self> {
        Alphabet::new(symbols.chars().map(|c| Character::new(c.to_string())).collect())
    }

    pub fn chars(&self) -> &[Character] {
        &self.chars
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn contains(&self, c: &Character) -> bool {
        self.chars.contains(c)
    }

    pub fn contains_blank(&self) -> bool {
        self.chars.iter().any(Character::is_blank)
    }

    /// The alphabet with the blank character appended.
    pub fn blank_extend(&self) -> Result<Alphabet> {
        if self.contains_blank() {
            return Err(Error::Domain("alphabet already contains the blank character".into()));
        }
        let mut chars = self.chars.clone();
        chars.push(Character::blank());
        Ok(Alphabet { chars })
    }

    /// The alphabet with the blank character removed.
    pub fn without_blank(&self) -> Result<Alphabet> {
        let chars: Vec<_> = self.chars.iter().filter(|c| !c.is_blank()).cloned().collect();
        Alphabet::new(chars)
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.chars.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// A finite string over an alphabet. Indices run from 0 to length − 1;
/// the empty string is permitted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StringStruct {
    alphabet: Alphabet,
    contents: Vec<Character>,
}

impl StringStruct {
    pub fn new(alphabet: Alphabet, contents: Vec<Character>) -> Result<Self> {
        for c in &contents {
            if !alphabet.contains(c) {
                return Err(Error::Domain(format!(
                    "character `{c}` is not in the alphabet {alphabet:?}"
                )));
            }
        }
        Ok(StringStruct { alphabet, contents })
    }

    /// Build from single-codepoint symbols, e.g. `over(&ab, "aba")`.
    pub fn over(alphabet: &Alphabet, symbols: &str) -> Result<Self> {
        let contents = symbols.chars().map(|c| Character::new(c.to_string())).collect();
        StringStruct::new(alphabet.clone(), contents)
    }

    pub fn empty(alphabet: &Alphabet) -> Self {
        StringStruct {
            alphabet: alphabet.clone(),
            contents: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.contents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.contents.is_empty()
    }

    pub fn char_at(&self, index: usize) -> &Character {
        &self.contents[index]
    }

    pub fn chars(&self) -> &[Character] {
        &self.contents
    }

    /// The same contents read over a different alphabet.
    pub fn recast(&self, alphabet: &Alphabet) -> Result<StringStruct> {
        StringStruct::new(alphabet.clone(), self.contents.clone())
    }
}

impl fmt::Display for StringStruct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.contents {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for StringStruct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}
