//! Normal form: every `max`, `min`, and character test applied to the
//! bare variable, every recursive call of shape f(x), f(S(x)), or
//! f(P(x)), and every head a bare call or a literal. Wrapper functions
//! absorb non-bare primitive applications; chain helpers flatten deep
//! index terms one step at a time.

use std::collections::BTreeMap;

use crate::chars::Character;
use crate::error::Result;
use crate::scheme::{Interpretation, Scheme};
use crate::term::{BoolTerm, FnName, IndexTerm};

use super::names::{enc_char, NamePool};

/// A normalized program together with the rewrites that produced it.
#[derive(Clone, Debug)]
pub struct NormalFormCertificate {
    pub interp: Interpretation,
    pub rewrites: Vec<String>,
}

pub fn is_normal_term(t: &BoolTerm) -> bool {
    match t {
        BoolTerm::True | BoolTerm::False => true,
        BoolTerm::CharAt(_, it) | BoolTerm::Max(it) | BoolTerm::Min(it) => {
            matches!(it, IndexTerm::Var)
        }
        BoolTerm::Call(_, it) => match it {
            IndexTerm::Var => true,
            IndexTerm::Succ(inner) | IndexTerm::Pred(inner) => matches!(**inner, IndexTerm::Var),
        },
        BoolTerm::Ite(c, t, e) => is_normal_term(c) && is_normal_term(t) && is_normal_term(e),
    }
}

pub fn is_normal_scheme(p: &Scheme) -> bool {
    p.defs().values().all(is_normal_term)
}

/// A head in normal position: a literal or a bare call.
pub fn is_normal_head(t: &BoolTerm) -> bool {
    matches!(t, BoolTerm::True | BoolTerm::False)
        || matches!(t, BoolTerm::Call(_, IndexTerm::Var))
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
enum Op {
    S,
    P,
}

impl Op {
    fn letter(self) -> char {
        match self {
            Op::S => 'S',
            Op::P => 'P',
        }
    }

    fn apply(self, it: IndexTerm) -> IndexTerm {
        match self {
            Op::S => it.succ(),
            Op::P => it.pred(),
        }
    }
}

/// The chain in application order: innermost operation first.
fn chain_ops(it: &IndexTerm) -> Vec<Op> {
    let mut outer_first = Vec::new();
    let mut cur = it;
    loop {
        match cur {
            IndexTerm::Var => break,
            IndexTerm::Succ(t) => {
                outer_first.push(Op::S);
                cur = t;
            }
            IndexTerm::Pred(t) => {
                outer_first.push(Op::P);
                cur = t;
            }
        }
    }
    outer_first.reverse();
    outer_first
}

struct Normalizer {
    pool: NamePool,
    /// Wrapper and helper lines added so far, in creation order.
    new_lines: Vec<(FnName, BoolTerm)>,
    /// Existing definitions, to reuse identical generated lines.
    existing: BTreeMap<FnName, BoolTerm>,
    rewrites: Vec<String>,
}

impl Normalizer {
    fn define(&mut self, preferred: FnName, body: BoolTerm, note: &str) -> FnName {
        if let Some(found) = self.existing.get(&preferred) {
            if *found == body {
                return preferred;
            }
        }
        if self.pool.contains(&preferred) {
            // Taken with a different body; fall through to a fresh name.
        } else {
            self.pool.insert(preferred.clone());
            self.existing.insert(preferred.clone(), body.clone());
            self.new_lines.push((preferred.clone(), body));
            self.rewrites.push(format!("{note} `{preferred}`"));
            return preferred;
        }
        let name = self.pool.claim(preferred);
        self.existing.insert(name.clone(), body.clone());
        self.new_lines.push((name.clone(), body));
        self.rewrites.push(format!("{note} `{name}`"));
        name
    }

    fn wrapper_max(&mut self) -> FnName {
        self.define(
            FnName::new("prim$max"),
            BoolTerm::Max(IndexTerm::Var),
            "introduced max wrapper",
        )
    }

    fn wrapper_min(&mut self) -> FnName {
        self.define(
            FnName::new("prim$min"),
            BoolTerm::Min(IndexTerm::Var),
            "introduced min wrapper",
        )
    }

    fn wrapper_char(&mut self, c: &Character) -> FnName {
        self.define(
            FnName::new(format!("prim$ch{}", enc_char(c))),
            BoolTerm::CharAt(c.clone(), IndexTerm::Var),
            "introduced character wrapper",
        )
    }

    /// Flatten a call so its argument chain has depth at most one.
    fn norm_call(&mut self, f: FnName, arg: &IndexTerm) -> BoolTerm {
        let ops = chain_ops(arg);
        if ops.len() <= 1 {
            return BoolTerm::Call(f, arg.clone());
        }
        // Peel the innermost operation; a helper performs the rest.
        let first = ops[0];
        let rest = &ops[1..];
        let helper = self.chain_helper(&f, rest);
        BoolTerm::Call(helper, first.apply(IndexTerm::Var))
    }

    /// Helper computing `f` after the remaining chain (application
    /// order), itself defined with calls of depth one.
    fn chain_helper(&mut self, f: &FnName, rest: &[Op]) -> FnName {
        debug_assert!(!rest.is_empty());
        let name = FnName::new(format!(
            "{f}$a{}",
            rest.iter().map(|o| o.letter()).collect::<String>()
        ));
        let body = if rest.len() == 1 {
            BoolTerm::Call(f.clone(), rest[0].apply(IndexTerm::Var))
        } else {
            let inner = self.chain_helper(f, &rest[1..]);
            BoolTerm::Call(inner, rest[0].apply(IndexTerm::Var))
        };
        self.define(name, body, "introduced chain helper")
    }

    fn norm_term(&mut self, t: &BoolTerm) -> BoolTerm {
        match t {
            BoolTerm::True | BoolTerm::False => t.clone(),
            BoolTerm::Max(IndexTerm::Var) | BoolTerm::Min(IndexTerm::Var) => t.clone(),
            BoolTerm::CharAt(_, IndexTerm::Var) => t.clone(),
            BoolTerm::Max(it) => {
                let w = self.wrapper_max();
                self.norm_call(w, it)
            }
            BoolTerm::Min(it) => {
                let w = self.wrapper_min();
                self.norm_call(w, it)
            }
            BoolTerm::CharAt(c, it) => {
                let w = self.wrapper_char(c);
                self.norm_call(w, it)
            }
            BoolTerm::Call(f, it) => self.norm_call(f.clone(), it),
            BoolTerm::Ite(c, t, e) => BoolTerm::ite(
                self.norm_term(c),
                self.norm_term(t),
                self.norm_term(e),
            ),
        }
    }
}

/// Normalize a scheme: original lines keep their names, wrappers and
/// helpers are appended. Semantics is unchanged.
pub fn normalize_scheme(p: &Scheme) -> (Scheme, Vec<String>) {
    let mut n = Normalizer {
        pool: NamePool::with(p.names()),
        new_lines: Vec::new(),
        existing: p.defs().clone(),
        rewrites: Vec::new(),
    };
    let mut lines: Vec<(FnName, BoolTerm)> = Vec::new();
    for (f, body) in p.defs() {
        lines.push((f.clone(), n.norm_term(body)));
    }
    lines.extend(n.new_lines);
    (Scheme::new(p.signature().clone(), lines), n.rewrites)
}

/// Normalize an interpretation: rewrite each head to a literal or a
/// single bare call to a wrapper holding the old head term, then
/// normalize all bodies.
pub fn normalize(interp: &Interpretation) -> Result<NormalFormCertificate> {
    let mut rewrites = Vec::new();
    let mut lines: Vec<(FnName, BoolTerm)> = interp
        .body()
        .defs()
        .iter()
        .map(|(f, b)| (f.clone(), b.clone()))
        .collect();
    let mut pool = NamePool::with(interp.body().names());
    let mut heads: Vec<((Character, usize), BoolTerm)> = Vec::new();
    for (copy, c, term) in interp.heads() {
        if is_normal_head(term) {
            heads.push(((c.clone(), copy), term.clone()));
            continue;
        }
        let name = pool.claim(FnName::new(format!("head${}${copy}", enc_char(c))));
        lines.push((name.clone(), term.clone()));
        heads.push(((c.clone(), copy), BoolTerm::Call(name.clone(), IndexTerm::Var)));
        rewrites.push(format!("wrapped head {c} @ {copy} as `{name}`"));
    }
    let with_heads = Scheme::new(interp.body().signature().clone(), lines);
    let (body, mut scheme_rewrites) = normalize_scheme(&with_heads);
    rewrites.append(&mut scheme_rewrites);
    let interp = Interpretation::new(
        interp.input_alphabet().clone(),
        interp.output_alphabet().clone(),
        interp.copies(),
        body,
        heads,
    )?;
    Ok(NormalFormCertificate { interp, rewrites })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::Alphabet;
    use crate::eval::{eval, Value};
    use crate::harness::enumerate_strings;
    use crate::term::Term;

    fn ab() -> Alphabet {
        Alphabet::from_symbols("ab").unwrap()
    }

    fn a_at(it: IndexTerm) -> BoolTerm {
        BoolTerm::CharAt(Character::new("a"), it)
    }

    #[test]
    fn shifted_character_test_gets_a_wrapper() {
        let p = Scheme::new(ab(), [(FnName::new("f"), a_at(IndexTerm::Var.succ()))]);
        let (nf, rewrites) = normalize_scheme(&p);
        assert!(is_normal_scheme(&nf));
        assert!(!rewrites.is_empty());
        // f(x) now calls the wrapper at S(x); the wrapper tests at x.
        let body = nf.body_of(&FnName::new("f")).unwrap();
        assert_eq!(
            *body,
            BoolTerm::call("prim$cha", IndexTerm::Var.succ())
        );
        assert_eq!(
            *nf.body_of(&FnName::new("prim$cha")).unwrap(),
            a_at(IndexTerm::Var)
        );
    }

    #[test]
    fn deep_call_chains_flatten_to_three_forms() {
        let deep = BoolTerm::call("f", IndexTerm::Var.succ().succ());
        let p = Scheme::new(
            ab(),
            [
                (FnName::new("f"), BoolTerm::True),
                (FnName::new("g"), deep),
            ],
        );
        let (nf, _) = normalize_scheme(&p);
        assert!(is_normal_scheme(&nf));
        assert_eq!(
            *nf.body_of(&FnName::new("g")).unwrap(),
            BoolTerm::call("f$aS", IndexTerm::Var.succ())
        );
        assert_eq!(
            *nf.body_of(&FnName::new("f$aS")).unwrap(),
            BoolTerm::call("f", IndexTerm::Var.succ())
        );
    }

    #[test]
    fn normalization_preserves_evaluation() {
        let bodies = [
            a_at(IndexTerm::Var.succ().succ()),
            BoolTerm::Max(IndexTerm::Var.pred()),
            BoolTerm::ite(
                BoolTerm::Min(IndexTerm::Var.succ()),
                BoolTerm::call("f", IndexTerm::Var.pred().succ().succ()),
                a_at(IndexTerm::Var.pred().pred()),
            ),
        ];
        for body in bodies {
            let p = Scheme::new(ab(), [(FnName::new("f"), body)]);
            let (nf, _) = normalize_scheme(&p);
            assert!(is_normal_scheme(&nf));
            for s in enumerate_strings(&ab(), 4) {
                for x in 0..s.len() {
                    let t = Term::Bool(BoolTerm::call("f", IndexTerm::Var));
                    let before = eval(&s, x, &p, &t);
                    let after = eval(&s, x, &nf, &t);
                    match (before, after) {
                        (Ok(Value::Bool(b)), Ok(Value::Bool(a))) => assert_eq!(a, b),
                        (
                            Err(crate::error::Error::Divergence { .. }),
                            Err(crate::error::Error::Divergence { .. }),
                        ) => {}
                        (b, a) => panic!("outcome changed on {s} at {x}: {b:?} vs {a:?}"),
                    }
                }
            }
        }
    }

    #[test]
    fn already_normal_scheme_is_untouched() {
        let p = Scheme::new(
            ab(),
            [(
                FnName::new("f"),
                BoolTerm::ite(
                    a_at(IndexTerm::Var),
                    BoolTerm::call("f", IndexTerm::Var.succ()),
                    BoolTerm::Min(IndexTerm::Var),
                ),
            )],
        );
        let (nf, rewrites) = normalize_scheme(&p);
        assert_eq!(nf, p);
        assert!(rewrites.is_empty());
    }

    #[test]
    fn normalize_is_stable_on_its_own_output() {
        let out = Alphabet::from_symbols("c").unwrap();
        let interp = Interpretation::new(
            ab(),
            out,
            1,
            Scheme::empty(ab()),
            [((Character::new("c"), 0), a_at(IndexTerm::Var.succ()))],
        )
        .unwrap();
        let once = normalize(&interp).unwrap().interp;
        let twice = normalize(&once).unwrap().interp;
        assert_eq!(once, twice);
    }
}
