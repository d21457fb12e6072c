//! Tokenizer for the `.bmrs` concrete syntax.

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Tok {
    /// Letter-initial identifier; may contain the `$` marker, which only
    /// generated files are allowed to use.
    Ident(String),
    /// Digit run.
    Digits(String),
    /// Single-quoted character token.
    Quoted(String),
    /// Double-quoted character sequence.
    Str(String),
    /// The reserved blank `_`.
    Blank,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Eq,
    Comma,
    At,
    Arrow,
}

impl std::fmt::Display for Tok {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Digits(s) => write!(f, "`{s}`"),
            Tok::Quoted(s) => write!(f, "`'{s}'`"),
            Tok::Str(s) => write!(f, "\"{s}\""),
            Tok::Blank => write!(f, "`_`"),
            Tok::LBrace => write!(f, "`{{`"),
            Tok::RBrace => write!(f, "`}}`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::Eq => write!(f, "`=`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::At => write!(f, "`@`"),
            Tok::Arrow => write!(f, "`->`"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

pub struct LexOutput {
    pub tokens: Vec<Spanned>,
    /// True when a `# bmrs:generated` marker comment was seen.
    pub generated: bool,
}

/// The comment line that flags a generated file; such files may use
/// reserved name markers and blank-extended alphabets.
pub const GENERATED_MARKER: &str = "bmrs:generated";

pub fn lex(text: &str) -> Result<LexOutput> {
    let mut tokens = Vec::new();
    let mut generated = false;
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut line = 1;
    let mut col = 1;

    macro_rules! bump {
        () => {{
            if chars[i] == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            i += 1;
        }};
    }

    while i < chars.len() {
        let c = chars[i];
        let (tline, tcol) = (line, col);
        match c {
            ' ' | '\t' | '\r' | '\n' => bump!(),
            '#' => {
                let mut comment = String::new();
                while i < chars.len() && chars[i] != '\n' {
                    comment.push(chars[i]);
                    bump!();
                }
                if comment.contains(GENERATED_MARKER) {
                    generated = true;
                }
            }
            '{' => {
                tokens.push(Spanned { tok: Tok::LBrace, line: tline, col: tcol });
                bump!();
            }
            '}' => {
                tokens.push(Spanned { tok: Tok::RBrace, line: tline, col: tcol });
                bump!();
            }
            '(' => {
                tokens.push(Spanned { tok: Tok::LParen, line: tline, col: tcol });
                bump!();
            }
            ')' => {
                tokens.push(Spanned { tok: Tok::RParen, line: tline, col: tcol });
                bump!();
            }
            '=' => {
                tokens.push(Spanned { tok: Tok::Eq, line: tline, col: tcol });
                bump!();
            }
            ',' => {
                tokens.push(Spanned { tok: Tok::Comma, line: tline, col: tcol });
                bump!();
            }
            '@' => {
                tokens.push(Spanned { tok: Tok::At, line: tline, col: tcol });
                bump!();
            }
            '-' => {
                bump!();
                if i < chars.len() && chars[i] == '>' {
                    bump!();
                    tokens.push(Spanned { tok: Tok::Arrow, line: tline, col: tcol });
                } else {
                    return Err(Error::parse(tline, tcol, "expected `->`"));
                }
            }
            '_' => {
                bump!();
                if i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    return Err(Error::parse(
                        tline,
                        tcol,
                        "names may not start with `_`; it is the reserved blank",
                    ));
                }
                tokens.push(Spanned { tok: Tok::Blank, line: tline, col: tcol });
            }
            '\'' => {
                bump!();
                let mut token = String::new();
                loop {
                    if i >= chars.len() || chars[i] == '\n' {
                        return Err(Error::parse(tline, tcol, "unterminated character token"));
                    }
                    if chars[i] == '\'' {
                        bump!();
                        break;
                    }
                    token.push(chars[i]);
                    bump!();
                }
                if token.is_empty() {
                    return Err(Error::parse(tline, tcol, "empty character token"));
                }
                tokens.push(Spanned { tok: Tok::Quoted(token), line: tline, col: tcol });
            }
            '"' => {
                bump!();
                let mut s = String::new();
                loop {
                    if i >= chars.len() || chars[i] == '\n' {
                        return Err(Error::parse(tline, tcol, "unterminated string"));
                    }
                    if chars[i] == '"' {
                        bump!();
                        break;
                    }
                    s.push(chars[i]);
                    bump!();
                }
                tokens.push(Spanned { tok: Tok::Str(s), line: tline, col: tcol });
            }
            c if c.is_alphabetic() => {
                let mut name = String::new();
                while i < chars.len()
                    && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '$')
                {
                    name.push(chars[i]);
                    bump!();
                }
                tokens.push(Spanned { tok: Tok::Ident(name), line: tline, col: tcol });
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while i < chars.len() && chars[i].is_ascii_digit() {
                    digits.push(chars[i]);
                    bump!();
                }
                tokens.push(Spanned { tok: Tok::Digits(digits), line: tline, col: tcol });
            }
            other => {
                return Err(Error::parse(tline, tcol, format!("unexpected character `{other}`")));
            }
        }
    }

    Ok(LexOutput { tokens, generated })
}
