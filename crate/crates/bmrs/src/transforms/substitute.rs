//! Substitution of an interpretation into a scheme, and strict
//! composition built on it.
//!
//! Substituting π : Σ×m → Γ into a Σ-scheme p yields a Γ-scheme that
//! evaluates p-terms as they would evaluate on the transduced string.
//! For a strict π the transduced string has length m·|s| and its index
//! (m·j + q) corresponds to position j of the input seen at copy q, so
//! the rewrite tracks the copy alongside the term: character tests
//! become the copy's head, min/max hold only at the extremal copy, and
//! a call at S(x) or P(x) moves to the neighbouring copy, crossing to
//! the next input position (with a clamp guard) only at the copy
//! boundary. Landing the program on p's own text with only character
//! tests replaced — with no copy tracking — would misread min, max, S,
//! and P whenever m > 1, since those primitives act on the transduced
//! string's indices, not the input's.

use std::collections::BTreeMap;

use crate::chars::Character;
use crate::error::{Error, Result};
use crate::scheme::{Interpretation, Scheme};
use crate::term::{BoolTerm, FnName, IndexTerm};

use super::names::{rename_in_term, NamePool};
use super::normalize::{is_normal_scheme, normalize, normalize_scheme};

/// The result of substituting an interpretation into a scheme: the
/// substituted scheme plus the term rewrite at the entry copy, so that
/// terms of the normalized source can be carried across.
pub struct Substitution {
    normalized_source: Scheme,
    result: Scheme,
    engine: SubstEngine,
    entry: usize,
}

impl Substitution {
    pub fn scheme(&self) -> &Scheme {
        &self.result
    }

    pub fn into_scheme(self) -> Scheme {
        self.result
    }

    /// The normalized source scheme the rewrite applies to.
    pub fn normalized_source(&self) -> &Scheme {
        &self.normalized_source
    }

    /// Rewrite a normalized term of the source scheme to a term of the
    /// substituted scheme, at the entry copy.
    pub fn term(&self, t: &BoolTerm) -> Result<BoolTerm> {
        self.engine.translate(t, self.entry)
    }
}

struct SubstEngine {
    copies: usize,
    rename: BTreeMap<(FnName, usize), FnName>,
    /// π's heads with π's body functions renamed for the union.
    heads: BTreeMap<(usize, Character), BoolTerm>,
    /// π's body lines after the same renaming.
    body_lines: Vec<(FnName, BoolTerm)>,
}

impl SubstEngine {
    fn target(&self, f: &FnName, copy: usize) -> Result<FnName> {
        self.rename
            .get(&(f.clone(), copy))
            .cloned()
            .ok_or_else(|| Error::Closure(f.clone()))
    }

    fn translate(&self, t: &BoolTerm, copy: usize) -> Result<BoolTerm> {
        let m = self.copies;
        Ok(match t {
            BoolTerm::True | BoolTerm::False => t.clone(),
            BoolTerm::Min(IndexTerm::Var) => {
                if copy == 0 {
                    BoolTerm::Min(IndexTerm::Var)
                } else {
                    BoolTerm::False
                }
            }
            BoolTerm::Max(IndexTerm::Var) => {
                if copy == m - 1 {
                    BoolTerm::Max(IndexTerm::Var)
                } else {
                    BoolTerm::False
                }
            }
            BoolTerm::CharAt(c, IndexTerm::Var) => self
                .heads
                .get(&(copy, c.clone()))
                .ok_or_else(|| {
                    Error::Type(format!("`{c}` has no head to substitute at copy {copy}"))
                })?
                .clone(),
            BoolTerm::Call(f, IndexTerm::Var) => {
                BoolTerm::Call(self.target(f, copy)?, IndexTerm::Var)
            }
            BoolTerm::Call(f, IndexTerm::Succ(v)) if **v == IndexTerm::Var => {
                if m == 1 {
                    BoolTerm::Call(self.target(f, 0)?, IndexTerm::Var.succ())
                } else if copy < m - 1 {
                    BoolTerm::Call(self.target(f, copy + 1)?, IndexTerm::Var)
                } else {
                    BoolTerm::ite(
                        BoolTerm::Max(IndexTerm::Var),
                        BoolTerm::Call(self.target(f, m - 1)?, IndexTerm::Var),
                        BoolTerm::Call(self.target(f, 0)?, IndexTerm::Var.succ()),
                    )
                }
            }
            BoolTerm::Call(f, IndexTerm::Pred(v)) if **v == IndexTerm::Var => {
                if m == 1 {
                    BoolTerm::Call(self.target(f, 0)?, IndexTerm::Var.pred())
                } else if copy > 0 {
                    BoolTerm::Call(self.target(f, copy - 1)?, IndexTerm::Var)
                } else {
                    BoolTerm::ite(
                        BoolTerm::Min(IndexTerm::Var),
                        BoolTerm::Call(self.target(f, 0)?, IndexTerm::Var),
                        BoolTerm::Call(self.target(f, m - 1)?, IndexTerm::Var.pred()),
                    )
                }
            }
            BoolTerm::Ite(c, t, e) => BoolTerm::ite(
                self.translate(c, copy)?,
                self.translate(t, copy)?,
                self.translate(e, copy)?,
            ),
            other => {
                return Err(Error::NormalForm(format!(
                    "substitution requires a normalized term, found `{other}`"
                )))
            }
        })
    }
}

/// Build the substituted scheme. The source is normalized first; its
/// entry copy keeps the original function names, other copies get
/// `$c<copy>` clones; the interpretation's body is unioned underneath,
/// renamed if it collides.
pub fn substitution(p: &Scheme, interp: &Interpretation, copy: usize) -> Result<Substitution> {
    if p.signature() != interp.output_alphabet() {
        return Err(Error::AlphabetMismatch(format!(
            "scheme signature {:?} does not match the interpretation's output alphabet {:?}",
            p.signature(),
            interp.output_alphabet()
        )));
    }
    if copy >= interp.copies() {
        return Err(Error::Domain(format!(
            "copy index {copy} out of range (m = {})",
            interp.copies()
        )));
    }
    p.validate()?;
    let (pn, _) = normalize_scheme(p);
    let engine = build_engine(&pn, interp, Some(copy))?;
    let result = assemble(&pn, interp, &engine)?;
    Ok(Substitution {
        normalized_source: pn,
        result,
        engine,
        entry: copy,
    })
}

pub fn substitute(p: &Scheme, interp: &Interpretation, copy: usize) -> Result<Scheme> {
    Ok(substitution(p, interp, copy)?.into_scheme())
}

/// Allocate the copy-clone name map and the renamed heads.
fn build_engine(
    pn: &Scheme,
    interp: &Interpretation,
    entry: Option<usize>,
) -> Result<SubstEngine> {
    debug_assert!(is_normal_scheme(pn));
    let m = interp.copies();
    let mut pool = NamePool::new();
    let mut rename: BTreeMap<(FnName, usize), FnName> = BTreeMap::new();
    if let Some(i) = entry {
        for f in pn.defs().keys() {
            rename.insert((f.clone(), i), pool.claim(f.clone()));
        }
    }
    for q in 0..m {
        if entry == Some(q) {
            continue;
        }
        for f in pn.defs().keys() {
            let preferred = if m == 1 {
                f.clone()
            } else {
                FnName::new(format!("{f}$c{q}"))
            };
            rename.insert((f.clone(), q), pool.claim(preferred));
        }
    }
    let mut body_rename: BTreeMap<FnName, FnName> = BTreeMap::new();
    for g in interp.body().defs().keys() {
        let target = pool.claim(g.clone());
        if target != *g {
            body_rename.insert(g.clone(), target);
        }
    }
    let mut heads = BTreeMap::new();
    for (q, c, t) in interp.heads() {
        heads.insert((q, c.clone()), rename_in_term(t, &body_rename));
    }
    let body_lines = interp
        .body()
        .defs()
        .iter()
        .map(|(g, b)| {
            let name = body_rename.get(g).cloned().unwrap_or_else(|| g.clone());
            (name, rename_in_term(b, &body_rename))
        })
        .collect();
    Ok(SubstEngine {
        copies: m,
        rename,
        heads,
        body_lines,
    })
}

fn assemble(pn: &Scheme, interp: &Interpretation, engine: &SubstEngine) -> Result<Scheme> {
    let mut lines: Vec<(FnName, BoolTerm)> = Vec::new();
    for q in 0..engine.copies {
        for (f, body) in pn.defs() {
            let name = engine.target(f, q)?;
            lines.push((name, engine.translate(body, q)?));
        }
    }
    lines.extend(engine.body_lines.iter().cloned());
    let result = Scheme::new(interp.input_alphabet().clone(), lines);
    result.validate()?;
    Ok(result)
}

/// Strict composition: compose ρ : Δ×n → Σ with π : Σ×m → Γ into an
/// interpretation Δ×(m·n) → Γ. Copy i of the result reads ρ's copy
/// (i mod n) through π's copy (i div n).
pub fn strict_compose(rho: &Interpretation, pi: &Interpretation) -> Result<Interpretation> {
    if rho.input_alphabet() != pi.output_alphabet() {
        return Err(Error::AlphabetMismatch(format!(
            "middle alphabets differ: {:?} vs {:?}",
            rho.input_alphabet(),
            pi.output_alphabet()
        )));
    }
    let rho_n = normalize(rho)?.interp;
    let engine = build_engine(rho_n.body(), pi, None)?;
    let body = assemble(rho_n.body(), pi, &engine)?;
    let m = pi.copies();
    let n = rho.copies();
    let mut heads: Vec<((Character, usize), BoolTerm)> = Vec::new();
    for i in 0..m * n {
        let q = i / n;
        let r = i % n;
        for delta in rho.output_alphabet().chars() {
            heads.push((
                (delta.clone(), i),
                engine.translate(rho_n.head(delta, r), q)?,
            ));
        }
    }
    Interpretation::new(
        pi.input_alphabet().clone(),
        rho.output_alphabet().clone(),
        m * n,
        body,
        heads,
    )
}
