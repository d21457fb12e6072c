//! Terms of the scheme language and their type checker.
//!
//! Index terms are finite chains of successor/predecessor applied to the
//! single variable `x`. Boolean terms are built from literals, character
//! tests, `max`/`min`, recursive calls, and conditionals. Index-valued
//! conditionals are not represented: the parser distributes them into the
//! enclosing boolean context, so every index term here is a pure chain.

use std::collections::BTreeSet;
use std::fmt;

use crate::chars::{Alphabet, Character};
use crate::error::{Error, Result};

/// A recursive function name.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FnName(String);

impl FnName {
    pub fn new(name: impl Into<String>) -> Self {
        FnName(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// True when the name carries a generated-name marker. User files may
    /// not declare such names; transforms mint them freely.
    pub fn is_generated(&self) -> bool {
        self.0.contains('$')
    }
}

impl fmt::Display for FnName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for FnName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An index-typed term: `x`, `S(t)`, or `P(t)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum IndexTerm {
    Var,
    Succ(Box<IndexTerm>),
    Pred(Box<IndexTerm>),
}

impl IndexTerm {
    pub fn succ(self) -> IndexTerm {
        IndexTerm::Succ(Box::new(self))
    }

    pub fn pred(self) -> IndexTerm {
        IndexTerm::Pred(Box::new(self))
    }

    /// Chain length: number of S/P applications above `x`.
    pub fn depth(&self) -> usize {
        match self {
            IndexTerm::Var => 0,
            IndexTerm::Succ(t) | IndexTerm::Pred(t) => 1 + t.depth(),
        }
    }
}

impl fmt::Display for IndexTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexTerm::Var => write!(f, "x"),
            IndexTerm::Succ(t) => write!(f, "S({t})"),
            IndexTerm::Pred(t) => write!(f, "P({t})"),
        }
    }
}

impl fmt::Debug for IndexTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A boolean-typed term.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum BoolTerm {
    True,
    False,
    /// Character test σ(t).
    CharAt(Character, IndexTerm),
    Max(IndexTerm),
    Min(IndexTerm),
    /// Recursive call f(t).
    Call(FnName, IndexTerm),
    Ite(Box<BoolTerm>, Box<BoolTerm>, Box<BoolTerm>),
}

impl BoolTerm {
    pub fn ite(cond: BoolTerm, then: BoolTerm, els: BoolTerm) -> BoolTerm {
        BoolTerm::Ite(Box::new(cond), Box::new(then), Box::new(els))
    }

    pub fn call(name: impl Into<String>, arg: IndexTerm) -> BoolTerm {
        BoolTerm::Call(FnName::new(name), arg)
    }

    /// All function names called anywhere in the term.
    pub fn called_names(&self) -> BTreeSet<FnName> {
        let mut out = BTreeSet::new();
        self.visit(&mut |t| {
            if let BoolTerm::Call(f, _) = t {
                out.insert(f.clone());
            }
        });
        out
    }

    pub fn visit(&self, f: &mut impl FnMut(&BoolTerm)) {
        f(self);
        if let BoolTerm::Ite(c, t, e) = self {
            c.visit(f);
            t.visit(f);
            e.visit(f);
        }
    }

    /// Does S (resp. P) occur anywhere, including inside index chains?
    pub fn uses_succ(&self) -> bool {
        self.any_index(&|t| matches!(t, IndexTerm::Succ(_)))
    }

    pub fn uses_pred(&self) -> bool {
        self.any_index(&|t| matches!(t, IndexTerm::Pred(_)))
    }

    fn any_index(&self, pred: &impl Fn(&IndexTerm) -> bool) -> bool {
        fn index_any(t: &IndexTerm, pred: &impl Fn(&IndexTerm) -> bool) -> bool {
            pred(t)
                || match t {
                    IndexTerm::Var => false,
                    IndexTerm::Succ(u) | IndexTerm::Pred(u) => index_any(u, pred),
                }
        }
        match self {
            BoolTerm::True | BoolTerm::False => false,
            BoolTerm::CharAt(_, t) | BoolTerm::Max(t) | BoolTerm::Min(t) | BoolTerm::Call(_, t) => {
                index_any(t, pred)
            }
            BoolTerm::Ite(c, t, e) => c.any_index(pred) || t.any_index(pred) || e.any_index(pred),
        }
    }
}

impl fmt::Display for BoolTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoolTerm::True => write!(f, "tt"),
            BoolTerm::False => write!(f, "ff"),
            BoolTerm::CharAt(c, t) => write!(f, "{c}({t})"),
            BoolTerm::Max(t) => write!(f, "max({t})"),
            BoolTerm::Min(t) => write!(f, "min({t})"),
            BoolTerm::Call(name, t) => write!(f, "{name}({t})"),
            BoolTerm::Ite(c, t, e) => write!(f, "if {c} then {t} else {e}"),
        }
    }
}

impl fmt::Debug for BoolTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Either kind of term, for operations that accept both.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Term {
    Bool(BoolTerm),
    Index(IndexTerm),
}

/// The two term types.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum TypeTag {
    Ind,
    Bool,
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeTag::Ind => write!(f, "ind"),
            TypeTag::Bool => write!(f, "bool"),
        }
    }
}

/// Derive the type of a term against a signature alphabet and a set of
/// defined function names. The derivation is unique, so this either
/// fails or returns exactly one tag.
pub fn typecheck(term: &Term, alphabet: &Alphabet, names: &BTreeSet<FnName>) -> Result<TypeTag> {
    match term {
        Term::Index(_) => Ok(TypeTag::Ind),
        Term::Bool(b) => {
            typecheck_bool(b, alphabet, names)?;
            Ok(TypeTag::Bool)
        }
    }
}

pub fn typecheck_bool(
    term: &BoolTerm,
    alphabet: &Alphabet,
    names: &BTreeSet<FnName>,
) -> Result<()> {
    match term {
        BoolTerm::True | BoolTerm::False | BoolTerm::Max(_) | BoolTerm::Min(_) => Ok(()),
        BoolTerm::CharAt(c, _) => {
            if alphabet.contains(c) {
                Ok(())
            } else {
                Err(Error::Type(format!(
                    "character test `{c}` is not in the signature {alphabet:?}"
                )))
            }
        }
        BoolTerm::Call(f, _) => {
            if names.contains(f) {
                Ok(())
            } else {
                Err(Error::Closure(f.clone()))
            }
        }
        BoolTerm::Ite(c, t, e) => {
            typecheck_bool(c, alphabet, names)?;
            typecheck_bool(t, alphabet, names)?;
            typecheck_bool(e, alphabet, names)
        }
    }
}
