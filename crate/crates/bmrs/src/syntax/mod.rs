//! Concrete textual syntax: parser and canonical pretty-printer.
//!
//! `parse(print(v)) = v` for every in-memory value. Files use `#`
//! comments and are whitespace-insensitive. Generated files carry a
//! `# bmrs:generated` marker; only they may use `$`-marked names and
//! blank-extended alphabet declarations.

mod lexer;
mod printer;

use std::collections::{BTreeMap, BTreeSet};

use crate::chars::{Alphabet, Character};
use crate::error::{Error, Result};
use crate::harness::transducer::{MachineDirection, SubseqTransducer};
use crate::scheme::{Interpretation, Scheme};
use crate::term::{BoolTerm, FnName, IndexTerm, Term};

use lexer::{lex, Spanned, Tok};
pub use lexer::GENERATED_MARKER;
pub use printer::{print, print_bool_term, print_term};

/// A parsed file: alphabet, interpretation, and transducer declarations
/// in source order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SourceFile {
    pub generated: bool,
    pub decls: Vec<Decl>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Decl {
    Alphabet {
        name: String,
        value: Alphabet,
    },
    Interp {
        name: String,
        output_alphabet_name: String,
        input_alphabet_name: String,
        value: Interpretation,
    },
    Transducer {
        name: String,
        input_alphabet_name: String,
        output_alphabet_name: String,
        value: SubseqTransducer,
    },
}

impl SourceFile {
    pub fn interpretation(&self, name: &str) -> Option<&Interpretation> {
        self.decls.iter().find_map(|d| match d {
            Decl::Interp { name: n, value, .. } if n == name => Some(value),
            _ => None,
        })
    }

    pub fn sole_interpretation(&self) -> Result<(&str, &Interpretation)> {
        let mut found = None;
        for d in &self.decls {
            if let Decl::Interp { name, value, .. } = d {
                if found.is_some() {
                    return Err(Error::Domain(
                        "file declares several interpretations; name one explicitly".into(),
                    ));
                }
                found = Some((name.as_str(), value));
            }
        }
        found.ok_or_else(|| Error::Domain("file declares no interpretation".into()))
    }

    pub fn transducer(&self, name: &str) -> Option<&SubseqTransducer> {
        self.decls.iter().find_map(|d| match d {
            Decl::Transducer { name: n, value, .. } if n == name => Some(value),
            _ => None,
        })
    }

    /// Wrap one interpretation as a file, declaring its two alphabets
    /// under the fixed names `out` and `inp`.
    pub fn for_interpretation(name: &str, value: &Interpretation) -> SourceFile {
        let generated = name.contains('$')
            || value.output_alphabet().contains_blank()
            || value.input_alphabet().contains_blank()
            || value.body().names().iter().any(FnName::is_generated);
        SourceFile {
            generated,
            decls: vec![
                Decl::Alphabet {
                    name: "out".to_string(),
                    value: value.output_alphabet().clone(),
                },
                Decl::Alphabet {
                    name: "inp".to_string(),
                    value: value.input_alphabet().clone(),
                },
                Decl::Interp {
                    name: name.to_string(),
                    output_alphabet_name: "out".to_string(),
                    input_alphabet_name: "inp".to_string(),
                    value: value.clone(),
                },
            ],
        }
    }
}

/// Parse a source file.
pub fn parse(text: &str) -> Result<SourceFile> {
    let lexed = lex(text)?;
    let mut p = Parser {
        toks: lexed.tokens,
        pos: 0,
        generated: lexed.generated,
    };
    let mut decls = Vec::new();
    let mut alphabets: BTreeMap<String, Alphabet> = BTreeMap::new();
    while !p.at_end() {
        let decl = p.decl(&alphabets)?;
        if let Decl::Alphabet { name, value } = &decl {
            alphabets.insert(name.clone(), value.clone());
        }
        decls.push(decl);
    }
    Ok(SourceFile {
        generated: p.generated,
        decls,
    })
}

/// Parse a standalone term against a signature and a set of defined
/// function names, e.g. for command-line evaluation.
pub fn parse_term(
    text: &str,
    alphabet: &Alphabet,
    names: &BTreeSet<FnName>,
    generated: bool,
) -> Result<Term> {
    let lexed = lex(text)?;
    let mut p = Parser {
        toks: lexed.tokens,
        pos: 0,
        generated: generated || lexed.generated,
    };
    let raw = p.raw_term()?;
    if !p.at_end() {
        let s = p.peek_span();
        return Err(Error::parse(s.0, s.1, "trailing input after term"));
    }
    let fns: BTreeSet<String> = names.iter().map(|f| f.as_str().to_string()).collect();
    let cx = LowerCx {
        alphabet,
        fns: &fns,
    };
    match lower_bool(&raw, &cx) {
        Ok(b) => Ok(Term::Bool(b)),
        Err(bool_err) => match lower_index(&raw, &cx) {
            Ok(Dist::Leaf(it)) => Ok(Term::Index(it)),
            _ => Err(bool_err),
        },
    }
}

// ---------------------------------------------------------------------
// Raw (untyped) term trees

#[derive(Clone, Debug)]
enum Raw {
    True,
    False,
    Var,
    If(Box<Raw>, Box<Raw>, Box<Raw>),
    Max(Box<Raw>),
    Min(Box<Raw>),
    Succ(Box<Raw>),
    Pred(Box<Raw>),
    /// `name(arg)`: a character test or a recursive call, resolved
    /// during lowering. `quoted` forces a character reading.
    Apply {
        name: String,
        quoted: bool,
        arg: Box<Raw>,
    },
}

/// An index term with the conditionals not yet distributed away.
enum Dist {
    Leaf(IndexTerm),
    Branch(BoolTerm, Box<Dist>, Box<Dist>),
}

impl Dist {
    fn map(self, f: &impl Fn(IndexTerm) -> IndexTerm) -> Dist {
        match self {
            Dist::Leaf(it) => Dist::Leaf(f(it)),
            Dist::Branch(c, t, e) => Dist::Branch(c, Box::new(t.map(f)), Box::new(e.map(f))),
        }
    }

    /// Distribute the conditional structure into a boolean context.
    fn fold(self, f: &impl Fn(IndexTerm) -> BoolTerm) -> BoolTerm {
        match self {
            Dist::Leaf(it) => f(it),
            Dist::Branch(c, t, e) => BoolTerm::ite(c, t.fold(f), e.fold(f)),
        }
    }
}

struct LowerCx<'a> {
    alphabet: &'a Alphabet,
    fns: &'a BTreeSet<String>,
}

const TERM_KEYWORDS: [&str; 10] = ["tt", "ff", "x", "if", "then", "else", "max", "min", "S", "P"];

fn is_single_codepoint(s: &str) -> bool {
    let mut cp = s.chars();
    cp.next().is_some() && cp.next().is_none()
}

fn lower_bool(raw: &Raw, cx: &LowerCx) -> Result<BoolTerm> {
    match raw {
        Raw::True => Ok(BoolTerm::True),
        Raw::False => Ok(BoolTerm::False),
        Raw::Var => Err(Error::Type("`x` is an index term where a boolean is expected".into())),
        Raw::Succ(_) | Raw::Pred(_) => {
            Err(Error::Type("index term where a boolean is expected".into()))
        }
        Raw::If(c, t, e) => Ok(BoolTerm::ite(
            lower_bool(c, cx)?,
            lower_bool(t, cx)?,
            lower_bool(e, cx)?,
        )),
        Raw::Max(t) => Ok(lower_index(t, cx)?.fold(&BoolTerm::Max)),
        Raw::Min(t) => Ok(lower_index(t, cx)?.fold(&BoolTerm::Min)),
        Raw::Apply { name, quoted, arg } => {
            let dist = lower_index(arg, cx)?;
            let as_char = *quoted
                || name == crate::chars::BLANK
                || (is_single_codepoint(name)
                    && (cx.alphabet.contains(&Character::new(name.clone()))
                        || !cx.fns.contains(name)));
            if as_char {
                let c = Character::new(name.clone());
                Ok(dist.fold(&|it| BoolTerm::CharAt(c.clone(), it)))
            } else {
                let f = FnName::new(name.clone());
                Ok(dist.fold(&|it| BoolTerm::Call(f.clone(), it)))
            }
        }
    }
}

fn lower_index(raw: &Raw, cx: &LowerCx) -> Result<Dist> {
    match raw {
        Raw::Var => Ok(Dist::Leaf(IndexTerm::Var)),
        Raw::Succ(t) => Ok(lower_index(t, cx)?.map(&IndexTerm::succ)),
        Raw::Pred(t) => Ok(lower_index(t, cx)?.map(&IndexTerm::pred)),
        Raw::If(c, t, e) => Ok(Dist::Branch(
            lower_bool(c, cx)?,
            Box::new(lower_index(t, cx)?),
            Box::new(lower_index(e, cx)?),
        )),
        Raw::True | Raw::False | Raw::Max(_) | Raw::Min(_) | Raw::Apply { .. } => {
            Err(Error::Type("boolean term where an index is expected".into()))
        }
    }
}

// ---------------------------------------------------------------------
// Parser

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    generated: bool,
}

impl Parser {
    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn peek_span(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map(|s| (s.line, s.col))
            .unwrap_or((1, 1))
    }

    fn err(&self, message: impl Into<String>) -> Error {
        let (line, col) = self.peek_span();
        Error::parse(line, col, message)
    }

    fn next(&mut self) -> Result<Spanned> {
        let s = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| self.err("unexpected end of input"))?;
        self.pos += 1;
        Ok(s)
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        let got = self.next()?;
        if got.tok == tok {
            Ok(())
        } else {
            Err(Error::parse(got.line, got.col, format!("expected {tok}, found {}", got.tok)))
        }
    }

    fn expect_keyword(&mut self, word: &str) -> Result<()> {
        let got = self.next()?;
        match &got.tok {
            Tok::Ident(s) if s == word => Ok(()),
            other => Err(Error::parse(got.line, got.col, format!("expected `{word}`, found {other}"))),
        }
    }

    fn at_keyword(&self, word: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(s)) if s == word)
    }

    fn name(&mut self, what: &str) -> Result<String> {
        let got = self.next()?;
        match got.tok {
            Tok::Ident(s) => {
                if s.contains('$') && !self.generated {
                    Err(Error::parse(
                        got.line,
                        got.col,
                        format!("`{s}`: the `$` marker is reserved for generated names"),
                    ))
                } else {
                    Ok(s)
                }
            }
            other => Err(Error::parse(got.line, got.col, format!("expected {what}, found {other}"))),
        }
    }

    fn int(&mut self) -> Result<usize> {
        let got = self.next()?;
        match got.tok {
            Tok::Digits(d) => d
                .parse::<usize>()
                .map_err(|_| Error::parse(got.line, got.col, "integer out of range")),
            other => Err(Error::parse(got.line, got.col, format!("expected an integer, found {other}"))),
        }
    }

    /// A character token: bare single codepoint, quoted token, or blank.
    fn character(&mut self) -> Result<Character> {
        let got = self.next()?;
        match got.tok {
            Tok::Quoted(s) => Ok(Character::new(s)),
            Tok::Blank => Ok(Character::blank()),
            Tok::Ident(s) | Tok::Digits(s) if is_single_codepoint(&s) => Ok(Character::new(s)),
            other => Err(Error::parse(
                got.line,
                got.col,
                format!("expected a character (single codepoint or quoted token), found {other}"),
            )),
        }
    }

    fn decl(&mut self, alphabets: &BTreeMap<String, Alphabet>) -> Result<Decl> {
        if self.at_keyword("alphabet") {
            self.alphabet_decl()
        } else if self.at_keyword("interpretation") {
            self.interp_decl(alphabets)
        } else if self.at_keyword("transducer") {
            self.transducer_decl(alphabets)
        } else {
            Err(self.err("expected `alphabet`, `interpretation`, or `transducer`"))
        }
    }

    fn alphabet_decl(&mut self) -> Result<Decl> {
        self.expect_keyword("alphabet")?;
        let name = self.name("an alphabet name")?;
        self.expect(Tok::Eq)?;
        self.expect(Tok::LBrace)?;
        let mut chars = Vec::new();
        loop {
            let span = self.peek_span();
            let c = self.character()?;
            if c.is_blank() && !self.generated {
                return Err(Error::parse(
                    span.0,
                    span.1,
                    "the blank `_` may not be declared in a user alphabet",
                ));
            }
            chars.push(c);
            match self.next()? {
                Spanned { tok: Tok::Comma, .. } => continue,
                Spanned { tok: Tok::RBrace, .. } => break,
                Spanned { tok, line, col } => {
                    return Err(Error::parse(line, col, format!("expected `,` or `}}`, found {tok}")))
                }
            }
        }
        let value = Alphabet::new(chars)?;
        Ok(Decl::Alphabet { name, value })
    }

    fn lookup_alphabet(
        &self,
        alphabets: &BTreeMap<String, Alphabet>,
        name: &str,
    ) -> Result<Alphabet> {
        alphabets
            .get(name)
            .cloned()
            .ok_or_else(|| self.err(format!("alphabet `{name}` is not declared")))
    }

    fn interp_decl(&mut self, alphabets: &BTreeMap<String, Alphabet>) -> Result<Decl> {
        self.expect_keyword("interpretation")?;
        let name = self.name("an interpretation name")?;
        self.expect(Tok::LParen)?;
        let output_alphabet_name = self.name("an alphabet name")?;
        self.expect(Tok::Comma)?;
        let copies = self.int()?;
        self.expect(Tok::RParen)?;
        self.expect_keyword("from")?;
        let input_alphabet_name = self.name("an alphabet name")?;
        let output_alphabet = self.lookup_alphabet(alphabets, &output_alphabet_name)?;
        let input_alphabet = self.lookup_alphabet(alphabets, &input_alphabet_name)?;
        self.expect(Tok::LBrace)?;

        // First pass: raw heads and funs, collecting function names so
        // single-letter calls resolve against them during lowering.
        let mut raw_heads: Vec<(Character, usize, Raw, (usize, usize))> = Vec::new();
        while self.at_keyword("head") {
            self.expect_keyword("head")?;
            let span = self.peek_span();
            let c = self.character()?;
            self.expect(Tok::At)?;
            let copy = self.int()?;
            self.expect(Tok::Eq)?;
            let raw = self.raw_term()?;
            raw_heads.push((c, copy, raw, span));
        }
        let mut raw_funs: Vec<(String, Raw, (usize, usize))> = Vec::new();
        while self.at_keyword("fun") {
            self.expect_keyword("fun")?;
            let span = self.peek_span();
            let fname = self.name("a function name")?;
            if TERM_KEYWORDS.contains(&fname.as_str()) {
                return Err(Error::parse(
                    span.0,
                    span.1,
                    format!("`{fname}` is a keyword and may not name a function"),
                ));
            }
            if is_single_codepoint(&fname) && input_alphabet.contains(&Character::new(fname.clone())) {
                return Err(Error::parse(
                    span.0,
                    span.1,
                    format!("function name `{fname}` collides with an alphabet character"),
                ));
            }
            self.expect(Tok::LParen)?;
            self.expect_keyword("x")?;
            self.expect(Tok::RParen)?;
            self.expect(Tok::Eq)?;
            let raw = self.raw_term()?;
            raw_funs.push((fname, raw, span));
        }
        self.expect(Tok::RBrace)?;

        let fns: BTreeSet<String> = raw_funs.iter().map(|(n, _, _)| n.clone()).collect();
        if fns.len() != raw_funs.len() {
            return Err(self.err("duplicate function definition"));
        }
        let cx = LowerCx {
            alphabet: &input_alphabet,
            fns: &fns,
        };

        let mut heads: Vec<((Character, usize), BoolTerm)> = Vec::new();
        let mut seen: BTreeSet<(Character, usize)> = BTreeSet::new();
        for (c, copy, raw, span) in raw_heads {
            if !seen.insert((c.clone(), copy)) {
                return Err(Error::parse(
                    span.0,
                    span.1,
                    format!("duplicate head for `{c}` at copy {copy}"),
                ));
            }
            heads.push(((c, copy), lower_bool(&raw, &cx)?));
        }
        let mut defs: Vec<(FnName, BoolTerm)> = Vec::new();
        for (fname, raw, _) in raw_funs {
            defs.push((FnName::new(fname), lower_bool(&raw, &cx)?));
        }

        let body = Scheme::new(input_alphabet.clone(), defs);
        let value = Interpretation::new(input_alphabet, output_alphabet, copies, body, heads)?;
        Ok(Decl::Interp {
            name,
            output_alphabet_name,
            input_alphabet_name,
            value,
        })
    }

    fn char_sequence(&mut self, s: &str) -> Vec<Character> {
        s.chars().map(|c| Character::new(c.to_string())).collect()
    }

    fn opt_str(&mut self) -> Result<Vec<Character>> {
        if let Some(Tok::Str(_)) = self.peek() {
            match self.next()?.tok {
                Tok::Str(s) => Ok(self.char_sequence(&s)),
                _ => unreachable!(),
            }
        } else {
            Ok(Vec::new())
        }
    }

    fn transducer_decl(&mut self, alphabets: &BTreeMap<String, Alphabet>) -> Result<Decl> {
        self.expect_keyword("transducer")?;
        let name = self.name("a transducer name")?;
        self.expect(Tok::LParen)?;
        let direction = if self.at_keyword("left") {
            self.expect_keyword("left")?;
            MachineDirection::Left
        } else if self.at_keyword("right") {
            self.expect_keyword("right")?;
            MachineDirection::Right
        } else {
            return Err(self.err("expected `left` or `right`"));
        };
        self.expect(Tok::RParen)?;
        self.expect_keyword("from")?;
        let input_alphabet_name = self.name("an alphabet name")?;
        self.expect_keyword("to")?;
        let output_alphabet_name = self.name("an alphabet name")?;
        let input_alphabet = self.lookup_alphabet(alphabets, &input_alphabet_name)?;
        let output_alphabet = self.lookup_alphabet(alphabets, &output_alphabet_name)?;
        self.expect(Tok::LBrace)?;

        let mut start: Option<(String, Vec<Character>)> = None;
        let mut states: BTreeSet<String> = BTreeSet::new();
        let mut edges: BTreeMap<(String, Character), (String, Vec<Character>)> = BTreeMap::new();
        let mut final_output: BTreeMap<String, Vec<Character>> = BTreeMap::new();
        loop {
            if self.at_keyword("start") {
                self.expect_keyword("start")?;
                let state = self.name("a state name")?;
                let out = if matches!(self.peek(), Some(Tok::Eq)) {
                    self.expect(Tok::Eq)?;
                    self.opt_str()?
                } else {
                    Vec::new()
                };
                if start.is_some() {
                    return Err(self.err("duplicate `start` line"));
                }
                states.insert(state.clone());
                start = Some((state, out));
            } else if self.at_keyword("edge") {
                self.expect_keyword("edge")?;
                let from = self.name("a state name")?;
                let c = self.character()?;
                self.expect(Tok::Arrow)?;
                let to = self.name("a state name")?;
                let out = self.opt_str()?;
                states.insert(from.clone());
                states.insert(to.clone());
                if edges.insert((from, c), (to, out)).is_some() {
                    return Err(self.err("duplicate edge"));
                }
            } else if self.at_keyword("final") {
                self.expect_keyword("final")?;
                let state = self.name("a state name")?;
                let out = if matches!(self.peek(), Some(Tok::Eq)) {
                    self.expect(Tok::Eq)?;
                    self.opt_str()?
                } else {
                    Vec::new()
                };
                states.insert(state.clone());
                if final_output.insert(state, out).is_some() {
                    return Err(self.err("duplicate `final` line"));
                }
            } else if matches!(self.peek(), Some(Tok::RBrace)) {
                self.expect(Tok::RBrace)?;
                break;
            } else {
                return Err(self.err("expected `start`, `edge`, `final`, or `}`"));
            }
        }
        let (start, init_output) = start.ok_or_else(|| self.err("transducer has no `start` line"))?;
        let value = SubseqTransducer {
            direction,
            input_alphabet,
            output_alphabet,
            states,
            start,
            init_output,
            edges,
            final_output,
        };
        value.validate()?;
        Ok(Decl::Transducer {
            name,
            input_alphabet_name,
            output_alphabet_name,
            value,
        })
    }

    fn raw_term(&mut self) -> Result<Raw> {
        if self.at_keyword("if") {
            self.expect_keyword("if")?;
            let c = self.raw_term()?;
            self.expect_keyword("then")?;
            let t = self.raw_term()?;
            self.expect_keyword("else")?;
            let e = self.raw_term()?;
            return Ok(Raw::If(Box::new(c), Box::new(t), Box::new(e)));
        }
        let got = self.next()?;
        let unary = |p: &mut Parser| -> Result<Raw> {
            p.expect(Tok::LParen)?;
            let inner = p.raw_term()?;
            p.expect(Tok::RParen)?;
            Ok(inner)
        };
        match got.tok {
            Tok::Ident(s) => match s.as_str() {
                "tt" => Ok(Raw::True),
                "ff" => Ok(Raw::False),
                "x" => Ok(Raw::Var),
                "max" => Ok(Raw::Max(Box::new(unary(self)?))),
                "min" => Ok(Raw::Min(Box::new(unary(self)?))),
                "S" => Ok(Raw::Succ(Box::new(unary(self)?))),
                "P" => Ok(Raw::Pred(Box::new(unary(self)?))),
                "then" | "else" => {
                    Err(Error::parse(got.line, got.col, format!("unexpected keyword `{s}`")))
                }
                _ => {
                    if s.contains('$') && !self.generated {
                        return Err(Error::parse(
                            got.line,
                            got.col,
                            format!("`{s}`: the `$` marker is reserved for generated names"),
                        ));
                    }
                    Ok(Raw::Apply {
                        name: s,
                        quoted: false,
                        arg: Box::new(unary(self)?),
                    })
                }
            },
            Tok::Digits(s) => {
                if !is_single_codepoint(&s) {
                    return Err(Error::parse(
                        got.line,
                        got.col,
                        "multi-codepoint characters must be quoted",
                    ));
                }
                Ok(Raw::Apply {
                    name: s,
                    quoted: false,
                    arg: Box::new(unary(self)?),
                })
            }
            Tok::Quoted(s) => Ok(Raw::Apply {
                name: s,
                quoted: true,
                arg: Box::new(unary(self)?),
            }),
            Tok::Blank => Ok(Raw::Apply {
                name: crate::chars::BLANK.to_string(),
                quoted: false,
                arg: Box::new(unary(self)?),
            }),
            other => Err(Error::parse(got.line, got.col, format!("unexpected {other} in term"))),
        }
    }
}

/// Lex a command-line input string into characters, using the same
/// character tokens as source files: bare codepoints, quoted tokens, and
/// the blank `_`.
pub fn lex_input_string(text: &str) -> Result<Vec<Character>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if c == '\'' {
            let mut token = String::new();
            loop {
                match chars.next() {
                    Some('\'') => break,
                    Some(other) => token.push(other),
                    None => return Err(Error::parse(1, 1, "unterminated character token")),
                }
            }
            if token.is_empty() {
                return Err(Error::parse(1, 1, "empty character token"));
            }
            out.push(Character::new(token));
        } else if c.is_whitespace() {
            continue;
        } else {
            out.push(Character::new(c.to_string()));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::TypeTag;

    const SEC4_789: &str = "
        alphabet digits = {7, 8, 9}
        alphabet unary = {a}
        interpretation triple(digits, 3) from unary {
            head 7 @ 0 = a(x)
            head 8 @ 1 = a(x)
            head 9 @ 2 = a(x)
        }
    ";

    #[test]
    fn parses_the_789_interpretation() {
        let file = parse(SEC4_789).unwrap();
        let (name, interp) = file.sole_interpretation().unwrap();
        assert_eq!(name, "triple");
        assert_eq!(interp.copies(), 3);
        assert_eq!(interp.output_alphabet().len(), 3);
        // Omitted heads default to ff.
        assert_eq!(*interp.head(&Character::new("8"), 0), BoolTerm::False);
    }

    #[test]
    fn fun_line_round_trips() {
        let src = "
            alphabet ab = {a, b}
            interpretation probe(ab, 1) from ab {
                head a @ 0 = f(x)
                fun f(x) = if a(x) then tt else f(S(x))
            }
        ";
        let file = parse(src).unwrap();
        let printed = print(&file);
        let reparsed = parse(&printed).unwrap();
        assert_eq!(file, reparsed);
    }

    #[test]
    fn boolean_argument_to_character_test_is_a_type_error() {
        let src = "
            alphabet ab = {a, b}
            interpretation bad(ab, 1) from ab {
                head a @ 0 = a(g(x))
                fun g(x) = tt
            }
        ";
        let err = parse(src).unwrap_err();
        assert!(matches!(err, Error::Type(_)), "{err}");
    }

    #[test]
    fn index_conditionals_distribute_into_boolean_context() {
        let ab = Alphabet::from_symbols("ab").unwrap();
        let t = parse_term("a(if b(x) then S(x) else x)", &ab, &BTreeSet::new(), false).unwrap();
        let Term::Bool(b) = t else { panic!("expected a boolean term") };
        assert_eq!(
            b,
            BoolTerm::ite(
                BoolTerm::CharAt(Character::new("b"), IndexTerm::Var),
                BoolTerm::CharAt(Character::new("a"), IndexTerm::Var.succ()),
                BoolTerm::CharAt(Character::new("a"), IndexTerm::Var),
            )
        );
    }

    #[test]
    fn nested_index_conditional_under_chain() {
        let ab = Alphabet::from_symbols("ab").unwrap();
        let t = parse_term(
            "a(S(if min(x) then x else P(x)))",
            &ab,
            &BTreeSet::new(),
            false,
        )
        .unwrap();
        let Term::Bool(b) = t else { panic!() };
        assert_eq!(
            b,
            BoolTerm::ite(
                BoolTerm::Min(IndexTerm::Var),
                BoolTerm::CharAt(Character::new("a"), IndexTerm::Var.succ()),
                BoolTerm::CharAt(Character::new("a"), IndexTerm::Var.pred().succ()),
            )
        );
    }

    #[test]
    fn user_files_reject_marked_names_and_blank_alphabets() {
        let marked = "
            alphabet ab = {a, b}
            interpretation bad(ab, 1) from ab {
                fun f$c0(x) = tt
            }
        ";
        assert!(matches!(parse(marked).unwrap_err(), Error::Parse { .. }));

        let blank = "alphabet bad = {a, _}";
        assert!(matches!(parse(blank).unwrap_err(), Error::Parse { .. }));

        let generated = "# bmrs:generated\nalphabet ok = {a, _}";
        assert!(parse(generated).is_ok());
    }

    #[test]
    fn undefined_function_is_a_closure_error() {
        let src = "
            alphabet ab = {a, b}
            interpretation bad(ab, 1) from ab {
                fun f(x) = scan(x)
            }
        ";
        assert!(matches!(parse(src).unwrap_err(), Error::Closure(_)));
    }

    #[test]
    fn undefined_single_letter_resolves_to_a_character_test() {
        // `g` is a single codepoint outside the alphabet and not a
        // defined function, so it reads as a character test and fails
        // typing, mirroring `a(x)` over the alphabet {b}.
        let src = "
            alphabet ab = {a, b}
            interpretation bad(ab, 1) from ab {
                fun f(x) = g(x)
            }
        ";
        assert!(matches!(parse(src).unwrap_err(), Error::Type(_)));
    }

    #[test]
    fn parse_error_carries_position() {
        let err = parse("alphabet = {a}").unwrap_err();
        match err {
            Error::Parse { line, col, .. } => {
                assert_eq!(line, 1);
                assert!(col > 1);
            }
            other => panic!("expected a parse error, got {other}"),
        }
    }

    #[test]
    fn standalone_index_term_parses() {
        let ab = Alphabet::from_symbols("ab").unwrap();
        let t = parse_term("S(P(x))", &ab, &BTreeSet::new(), false).unwrap();
        assert_eq!(t, Term::Index(IndexTerm::Var.pred().succ()));
        assert_eq!(
            crate::term::typecheck(&t, &ab, &BTreeSet::new()).unwrap(),
            TypeTag::Ind
        );
    }

    #[test]
    fn transducer_round_trips() {
        let src = "
            alphabet ab = {a, b}
            alphabet abx = {a, b, 'ex'}
            transducer score(right) from ab to abx {
                start n
                edge n a -> n \"a\"
                edge n b -> s \"b\"
                edge s a -> s \"a\"
                edge s b -> s \"b\"
                final n
                final s = \"a\"
            }
        ";
        let file = parse(src).unwrap();
        let printed = print(&file);
        assert_eq!(parse(&printed).unwrap(), file);
    }

    #[test]
    fn input_string_lexing() {
        let chars = lex_input_string("ab'tok'_c").unwrap();
        let names: Vec<&str> = chars.iter().map(|c| c.as_str()).collect();
        assert_eq!(names, vec!["a", "b", "tok", "_", "c"]);
    }
}
