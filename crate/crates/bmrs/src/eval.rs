//! Big-step evaluation of terms against a string and a scheme.
//!
//! Implements the five-place relation s, x ⊢_p T → v. Successor clamps at
//! the last index and predecessor at 0. Since the value of a call depends
//! only on the (function, index) pair, re-entering a pair that is still
//! being expanded proves that no finite derivation exists; we detect that
//! through the call stack and report it as divergence. Results per pair
//! are memoized within one evaluator, which cannot change outcomes.

use std::collections::HashMap;
use std::fmt;

use crate::chars::{Character, StringStruct};
use crate::error::{Error, Result};
use crate::scheme::{Interpretation, Scheme};
use crate::term::{BoolTerm, FnName, IndexTerm, Term};

/// A boolean or an index within the string's domain.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Value {
    Bool(bool),
    Index(usize),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bool(true) => write!(f, "tt"),
            Value::Bool(false) => write!(f, "ff"),
            Value::Index(i) => write!(f, "{i}"),
        }
    }
}

/// Evaluation context for one string and one scheme. Reusable across
/// indices and terms; memoized call results persist for its lifetime.
pub struct Evaluator<'a> {
    string: &'a StringStruct,
    scheme: &'a Scheme,
    memo: HashMap<(FnName, usize), bool>,
    in_progress: Vec<(FnName, usize)>,
}

impl<'a> Evaluator<'a> {
    pub fn new(string: &'a StringStruct, scheme: &'a Scheme) -> Evaluator<'a> {
        Evaluator {
            string,
            scheme,
            memo: HashMap::new(),
            in_progress: Vec::new(),
        }
    }

    fn check_index(&self, x: usize) -> Result<()> {
        if self.string.is_empty() {
            return Err(Error::Domain(
                "cannot evaluate on the empty string: no index exists".into(),
            ));
        }
        if x >= self.string.len() {
            return Err(Error::Domain(format!(
                "index {x} out of range for a string of length {}",
                self.string.len()
            )));
        }
        Ok(())
    }

    pub fn eval_index(&self, x: usize, term: &IndexTerm) -> Result<usize> {
        self.check_index(x)?;
        Ok(self.eval_index_unchecked(x, term))
    }

    fn eval_index_unchecked(&self, x: usize, term: &IndexTerm) -> usize {
        match term {
            IndexTerm::Var => x,
            IndexTerm::Succ(t) => {
                let v = self.eval_index_unchecked(x, t);
                if v < self.string.len() - 1 {
                    v + 1
                } else {
                    v
                }
            }
            IndexTerm::Pred(t) => {
                let v = self.eval_index_unchecked(x, t);
                v.saturating_sub(1)
            }
        }
    }

    pub fn eval_bool(&mut self, x: usize, term: &BoolTerm) -> Result<bool> {
        self.check_index(x)?;
        self.eval_bool_unchecked(x, term)
    }

    fn eval_bool_unchecked(&mut self, x: usize, term: &BoolTerm) -> Result<bool> {
        match term {
            BoolTerm::True => Ok(true),
            BoolTerm::False => Ok(false),
            BoolTerm::CharAt(c, t) => {
                let v = self.eval_index_unchecked(x, t);
                Ok(self.string.char_at(v) == c)
            }
            BoolTerm::Max(t) => {
                let v = self.eval_index_unchecked(x, t);
                Ok(v == self.string.len() - 1)
            }
            BoolTerm::Min(t) => {
                let v = self.eval_index_unchecked(x, t);
                Ok(v == 0)
            }
            BoolTerm::Call(f, t) => {
                let v = self.eval_index_unchecked(x, t);
                self.eval_fn(f, v)
            }
            BoolTerm::Ite(c, t, e) => {
                if self.eval_bool_unchecked(x, c)? {
                    self.eval_bool_unchecked(x, t)
                } else {
                    self.eval_bool_unchecked(x, e)
                }
            }
        }
    }

    pub fn eval_fn(&mut self, f: &FnName, v: usize) -> Result<bool> {
        let key = (f.clone(), v);
        if let Some(&b) = self.memo.get(&key) {
            return Ok(b);
        }
        if self.in_progress.contains(&key) {
            return Err(Error::Divergence {
                function: f.clone(),
                index: v,
            });
        }
        let body = self.scheme.body_of(f).ok_or_else(|| Error::Closure(f.clone()))?;
        let body = body.clone();
        self.in_progress.push(key.clone());
        let result = self.eval_bool_unchecked(v, &body);
        self.in_progress.pop();
        if let Ok(b) = result {
            self.memo.insert(key, b);
        }
        result
    }
}

/// One-shot evaluation of a term at an index.
pub fn eval(s: &StringStruct, x: usize, p: &Scheme, term: &Term) -> Result<Value> {
    let mut ev = Evaluator::new(s, p);
    match term {
        Term::Bool(t) => ev.eval_bool(x, t).map(Value::Bool),
        Term::Index(t) => ev.eval_index(x, t).map(Value::Index),
    }
}

/// Evaluate one head of an interpretation at an index.
pub fn eval_head(
    s: &StringStruct,
    x: usize,
    interp: &Interpretation,
    c: &Character,
    copy: usize,
) -> Result<bool> {
    if copy >= interp.copies() {
        return Err(Error::Domain(format!(
            "copy index {copy} out of range (m = {})",
            interp.copies()
        )));
    }
    if !interp.output_alphabet().contains(c) {
        return Err(Error::Domain(format!("`{c}` is not an output character")));
    }
    let mut ev = Evaluator::new(s, interp.body());
    ev.eval_bool(x, interp.head(c, copy))
}
