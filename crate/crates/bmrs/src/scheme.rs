//! Headless schemes and order-preserving interpretations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::chars::{Alphabet, Character};
use crate::error::{Error, Result};
use crate::term::{typecheck_bool, BoolTerm, FnName};

/// A headless scheme: a finite mapping from function names to their
/// boolean-valued defining terms, over a signature alphabet. The mapping
/// is a set of lines; order never matters, so we keep them sorted.
#[derive(Clone, PartialEq, Eq)]
pub struct Scheme {
    signature: Alphabet,
    defs: BTreeMap<FnName, BoolTerm>,
}

impl Scheme {
    pub fn new(signature: Alphabet, defs: impl IntoIterator<Item = (FnName, BoolTerm)>) -> Self {
        Scheme {
            signature,
            defs: defs.into_iter().collect(),
        }
    }

    pub fn empty(signature: Alphabet) -> Self {
        Scheme {
            signature,
            defs: BTreeMap::new(),
        }
    }

    pub fn signature(&self) -> &Alphabet {
        &self.signature
    }

    pub fn defs(&self) -> &BTreeMap<FnName, BoolTerm> {
        &self.defs
    }

    pub fn names(&self) -> BTreeSet<FnName> {
        self.defs.keys().cloned().collect()
    }

    pub fn body_of(&self, f: &FnName) -> Option<&BoolTerm> {
        self.defs.get(f)
    }

    pub fn len(&self) -> usize {
        self.defs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.defs.is_empty()
    }

    /// Check closure (every called name is defined) and that every
    /// defining term typechecks as boolean over the signature.
    pub fn validate(&self) -> Result<()> {
        let names = self.names();
        for body in self.defs.values() {
            for called in body.called_names() {
                if !names.contains(&called) {
                    return Err(Error::Closure(called));
                }
            }
            typecheck_bool(body, &self.signature, &names)?;
        }
        Ok(())
    }

    /// Is `term` a term of this scheme: calls only defined names, tests
    /// only signature characters?
    pub fn admits(&self, term: &BoolTerm) -> Result<()> {
        typecheck_bool(term, &self.signature, &self.names())
    }

    pub fn uses_succ(&self) -> bool {
        self.defs.values().any(BoolTerm::uses_succ)
    }

    pub fn uses_pred(&self) -> bool {
        self.defs.values().any(BoolTerm::uses_pred)
    }
}

impl fmt::Debug for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "scheme over {:?} {{", self.signature)?;
        for (name, body) in &self.defs {
            writeln!(f, "  {name}(x) = {body}")?;
        }
        write!(f, "}}")
    }
}

/// Which index primitives a program uses. Predecessor-only and
/// successor-only programs are the one-way subclasses; a program using
/// neither primitive belongs to both, one using both to neither.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Direction {
    POnly,
    SOnly,
    Both,
    Neither,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::POnly => write!(f, "P-only"),
            Direction::SOnly => write!(f, "S-only"),
            Direction::Both => write!(f, "both"),
            Direction::Neither => write!(f, "neither"),
        }
    }
}

fn direction_of(uses_succ: bool, uses_pred: bool) -> Direction {
    match (uses_succ, uses_pred) {
        (false, false) => Direction::Both,
        (false, true) => Direction::POnly,
        (true, false) => Direction::SOnly,
        (true, true) => Direction::Neither,
    }
}

/// An m-fold interpretation: a body scheme over the input alphabet plus
/// one head term per (output character, copy index) pair. Heads omitted
/// at construction default to `ff`.
#[derive(Clone, PartialEq, Eq)]
pub struct Interpretation {
    body: Scheme,
    /// Total map keyed by (copy index, character); every pair is present.
    heads: BTreeMap<(usize, Character), BoolTerm>,
    copies: usize,
    input_alphabet: Alphabet,
    output_alphabet: Alphabet,
}

impl Interpretation {
    pub fn new(
        input_alphabet: Alphabet,
        output_alphabet: Alphabet,
        copies: usize,
        body: Scheme,
        heads: impl IntoIterator<Item = ((Character, usize), BoolTerm)>,
    ) -> Result<Self> {
        if copies == 0 {
            return Err(Error::Domain("copy count m must be at least 1".into()));
        }
        if body.signature() != &input_alphabet {
            return Err(Error::AlphabetMismatch(format!(
                "body signature {:?} differs from input alphabet {:?}",
                body.signature(),
                input_alphabet
            )));
        }
        let mut total: BTreeMap<(usize, Character), BoolTerm> = BTreeMap::new();
        for i in 0..copies {
            for c in output_alphabet.chars() {
                total.insert((i, c.clone()), BoolTerm::False);
            }
        }
        for ((c, i), term) in heads {
            if !output_alphabet.contains(&c) {
                return Err(Error::Type(format!(
                    "head character `{c}` is not in the output alphabet {output_alphabet:?}"
                )));
            }
            if i >= copies {
                return Err(Error::Domain(format!(
                    "head copy index {i} out of range (m = {copies})"
                )));
            }
            total.insert((i, c), term);
        }
        let interp = Interpretation {
            body,
            heads: total,
            copies,
            input_alphabet,
            output_alphabet,
        };
        interp.validate()?;
        Ok(interp)
    }

    pub fn body(&self) -> &Scheme {
        &self.body
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    pub fn input_alphabet(&self) -> &Alphabet {
        &self.input_alphabet
    }

    pub fn output_alphabet(&self) -> &Alphabet {
        &self.output_alphabet
    }

    pub fn head(&self, c: &Character, copy: usize) -> &BoolTerm {
        &self.heads[&(copy, c.clone())]
    }

    /// Heads in canonical order: copy-major, then output-alphabet order.
    pub fn heads(&self) -> impl Iterator<Item = (usize, &Character, &BoolTerm)> {
        (0..self.copies).flat_map(move |i| {
            self.output_alphabet
                .chars()
                .iter()
                .map(move |c| (i, c, &self.heads[&(i, c.clone())]))
        })
    }

    /// Validate the body and check that every head is a body-term.
    pub fn validate(&self) -> Result<()> {
        self.body.validate()?;
        for (_, _, term) in self.heads() {
            self.body.admits(term)?;
        }
        Ok(())
    }

    pub fn classify_direction(&self) -> Direction {
        let succ = self.body.uses_succ() || self.heads().any(|(_, _, t)| t.uses_succ());
        let pred = self.body.uses_pred() || self.heads().any(|(_, _, t)| t.uses_pred());
        direction_of(succ, pred)
    }
}

impl Scheme {
    pub fn classify_direction(&self) -> Direction {
        direction_of(self.uses_succ(), self.uses_pred())
    }
}

impl fmt::Debug for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "interpretation {:?} x {} from {:?} {{",
            self.output_alphabet, self.copies, self.input_alphabet
        )?;
        for (i, c, t) in self.heads() {
            writeln!(f, "  head {c} @ {i} = {t}")?;
        }
        for (name, body) in self.body.defs() {
            writeln!(f, "  fun {name}(x) = {body}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::IndexTerm;

    fn ab() -> Alphabet {
        Alphabet::from_symbols("ab").unwrap()
    }

    fn a_test(sym: &str, t: IndexTerm) -> BoolTerm {
        BoolTerm::CharAt(Character::new(sym), t)
    }

    #[test]
    fn valid_scheme_passes() {
        let p = Scheme::new(
            ab(),
            [(FnName::new("f"), a_test("a", IndexTerm::Var))],
        );
        p.validate().unwrap();
    }

    #[test]
    fn open_scheme_reports_first_undefined_name() {
        let p = Scheme::new(
            ab(),
            [(FnName::new("f"), BoolTerm::call("g", IndexTerm::Var))],
        );
        assert_eq!(p.validate().unwrap_err(), Error::Closure(FnName::new("g")));
    }

    #[test]
    fn self_recursion_is_legal() {
        let body = BoolTerm::ite(
            a_test("a", IndexTerm::Var),
            BoolTerm::call("f", IndexTerm::Var.succ()),
            BoolTerm::False,
        );
        let p = Scheme::new(ab(), [(FnName::new("f"), body)]);
        p.validate().unwrap();
    }

    #[test]
    fn scheme_equality_ignores_line_order() {
        let f = (FnName::new("f"), BoolTerm::True);
        let g = (FnName::new("g"), BoolTerm::False);
        let p = Scheme::new(ab(), [f.clone(), g.clone()]);
        let q = Scheme::new(ab(), [g, f]);
        assert_eq!(p, q);
    }

    #[test]
    fn classify_examples() {
        let p_only = Scheme::new(ab(), [(FnName::new("f"), a_test("a", IndexTerm::Var.pred()))]);
        assert_eq!(p_only.classify_direction(), Direction::POnly);

        let both = Scheme::new(ab(), [(FnName::new("f"), a_test("a", IndexTerm::Var))]);
        assert_eq!(both.classify_direction(), Direction::Both);

        let neither = Scheme::new(
            ab(),
            [(
                FnName::new("f"),
                BoolTerm::ite(
                    a_test("a", IndexTerm::Var.succ()),
                    BoolTerm::call("f", IndexTerm::Var.pred()),
                    BoolTerm::False,
                ),
            )],
        );
        assert_eq!(neither.classify_direction(), Direction::Neither);
    }

    #[test]
    fn missing_heads_default_to_ff() {
        let out = Alphabet::from_symbols("cd").unwrap();
        let interp = Interpretation::new(
            ab(),
            out,
            2,
            Scheme::empty(ab()),
            [((Character::new("c"), 0), BoolTerm::True)],
        )
        .unwrap();
        assert_eq!(*interp.head(&Character::new("d"), 1), BoolTerm::False);
        assert_eq!(*interp.head(&Character::new("c"), 0), BoolTerm::True);
    }

    #[test]
    fn head_must_be_a_body_term() {
        let out = Alphabet::from_symbols("c").unwrap();
        let err = Interpretation::new(
            ab(),
            out,
            1,
            Scheme::empty(ab()),
            [((Character::new("c"), 0), BoolTerm::call("g", IndexTerm::Var))],
        )
        .unwrap_err();
        assert_eq!(err, Error::Closure(FnName::new("g")));
    }
}
