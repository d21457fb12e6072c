//! The star transformation: rewrite a scheme over Γ into one over the
//! blank-extended Γ that behaves on any padding of t the way the
//! original behaves on t. `max`/`min` become non-blank scanners, and
//! calls moving by S or P skip blank indices via tail recursion. Blank
//! enrichment applies this to an interpretation's body and guards its
//! heads on blankness.

use crate::chars::{Alphabet, Character};
use crate::error::{Error, Result};
use crate::scheme::{Interpretation, Scheme};
use crate::term::{BoolTerm, FnName, IndexTerm};
use crate::transduce::check_strict;

use super::names::{rename_scheme, NamePool};
use super::normalize::{is_normal_scheme, normalize};

pub const SCAN_MAX: &str = "scan$max";
pub const SCAN_MAX_HELPER: &str = "scan$maxh";
pub const SCAN_MIN: &str = "scan$min";
pub const SCAN_MIN_HELPER: &str = "scan$minh";

fn blank_at(it: IndexTerm) -> BoolTerm {
    BoolTerm::CharAt(Character::blank(), it)
}

/// The maxc/minc scanner fragment over a blank-extended alphabet:
/// scan$max holds exactly at the maximum non-blank index, scan$min at
/// the minimum. A non-blank index scans outward through blanks and
/// answers false as soon as a non-blank neighbour in that direction
/// exists.
pub fn build_skip_scanners(alphabet: &Alphabet) -> Result<Scheme> {
    if !alphabet.contains_blank() {
        return Err(Error::Domain(
            "skip scanners require a blank-extended alphabet".into(),
        ));
    }
    let lines = [
        (
            FnName::new(SCAN_MAX),
            BoolTerm::ite(
                blank_at(IndexTerm::Var),
                BoolTerm::False,
                BoolTerm::call(SCAN_MAX_HELPER, IndexTerm::Var),
            ),
        ),
        (
            FnName::new(SCAN_MAX_HELPER),
            BoolTerm::ite(
                BoolTerm::Max(IndexTerm::Var),
                BoolTerm::True,
                BoolTerm::ite(
                    blank_at(IndexTerm::Var.succ()),
                    BoolTerm::call(SCAN_MAX_HELPER, IndexTerm::Var.succ()),
                    BoolTerm::False,
                ),
            ),
        ),
        (
            FnName::new(SCAN_MIN),
            BoolTerm::ite(
                blank_at(IndexTerm::Var),
                BoolTerm::False,
                BoolTerm::call(SCAN_MIN_HELPER, IndexTerm::Var),
            ),
        ),
        (
            FnName::new(SCAN_MIN_HELPER),
            BoolTerm::ite(
                BoolTerm::Min(IndexTerm::Var),
                BoolTerm::True,
                BoolTerm::ite(
                    blank_at(IndexTerm::Var.pred()),
                    BoolTerm::call(SCAN_MIN_HELPER, IndexTerm::Var.pred()),
                    BoolTerm::False,
                ),
            ),
        ),
    ];
    Ok(Scheme::new(alphabet.clone(), lines))
}

fn star_name(f: &FnName) -> FnName {
    FnName::new(format!("{f}$star"))
}

fn skip_succ_name(f: &FnName) -> FnName {
    FnName::new(format!("{f}$S"))
}

fn skip_pred_name(f: &FnName) -> FnName {
    FnName::new(format!("{f}$P"))
}

/// The term half of the star transformation. Requires normal form.
pub fn star_term(t: &BoolTerm) -> Result<BoolTerm> {
    Ok(match t {
        BoolTerm::True | BoolTerm::False => t.clone(),
        BoolTerm::CharAt(c, IndexTerm::Var) => BoolTerm::CharAt(c.clone(), IndexTerm::Var),
        BoolTerm::Max(IndexTerm::Var) => BoolTerm::call(SCAN_MAX, IndexTerm::Var),
        BoolTerm::Min(IndexTerm::Var) => BoolTerm::call(SCAN_MIN, IndexTerm::Var),
        BoolTerm::Call(f, IndexTerm::Var) => BoolTerm::Call(star_name(f), IndexTerm::Var),
        BoolTerm::Call(f, IndexTerm::Succ(v)) if **v == IndexTerm::Var => {
            BoolTerm::Call(skip_succ_name(f), IndexTerm::Var.succ())
        }
        BoolTerm::Call(f, IndexTerm::Pred(v)) if **v == IndexTerm::Var => {
            BoolTerm::Call(skip_pred_name(f), IndexTerm::Var.pred())
        }
        BoolTerm::Ite(c, t, e) => BoolTerm::ite(star_term(c)?, star_term(t)?, star_term(e)?),
        other => {
            return Err(Error::NormalForm(format!(
                "the star transformation requires a normalized term, found `{other}`"
            )))
        }
    })
}

/// The scheme half: f$star evaluates the starred body here, f$S and f$P
/// first skip blanks rightward/leftward. Emits the scanner fragment
/// alongside.
pub fn star_scheme(p: &Scheme) -> Result<Scheme> {
    if !is_normal_scheme(p) {
        return Err(Error::NormalForm(
            "the star transformation requires a normalized scheme".into(),
        ));
    }
    if p.signature().contains_blank() {
        return Err(Error::Domain(
            "the star transformation starts from a blankless signature".into(),
        ));
    }
    let extended = p.signature().blank_extend()?;
    // A previously composed program can carry definitions under the
    // scanner names; move them aside so the fresh scanners stand alone.
    let reserved = [SCAN_MAX, SCAN_MAX_HELPER, SCAN_MIN, SCAN_MIN_HELPER];
    let conflicts: Vec<FnName> = reserved
        .iter()
        .map(|r| FnName::new(*r))
        .filter(|r| p.defs().contains_key(r))
        .collect();
    let moved;
    let p = if conflicts.is_empty() {
        p
    } else {
        let mut pool = NamePool::with(p.names());
        for r in reserved {
            pool.insert(FnName::new(r));
        }
        let mut map = std::collections::BTreeMap::new();
        for c in conflicts {
            let target = pool.claim(FnName::new(format!("{c}$r")));
            map.insert(c, target);
        }
        moved = rename_scheme(p, &map);
        &moved
    };
    let mut lines: Vec<(FnName, BoolTerm)> = Vec::new();
    for (f, body) in p.defs() {
        let starred = star_term(body)?;
        lines.push((star_name(f), starred.clone()));
        lines.push((
            skip_succ_name(f),
            BoolTerm::ite(
                blank_at(IndexTerm::Var),
                BoolTerm::Call(skip_succ_name(f), IndexTerm::Var.succ()),
                starred.clone(),
            ),
        ));
        lines.push((
            skip_pred_name(f),
            BoolTerm::ite(
                blank_at(IndexTerm::Var),
                BoolTerm::Call(skip_pred_name(f), IndexTerm::Var.pred()),
                starred,
            ),
        ));
    }
    let scanners = build_skip_scanners(&extended)?;
    lines.extend(scanners.defs().iter().map(|(f, b)| (f.clone(), b.clone())));
    let result = Scheme::new(extended, lines);
    result.validate()?;
    Ok(result)
}

/// Blank enrichment: lift a strict interpretation Σ_□×m → Γ to
/// Σ_□×m → Γ_□ that reproduces blanks where its input has them and
/// otherwise behaves as the original does on the blank-deleted input.
/// Strictness is established by a bounded check first.
pub fn blank_enrich(interp: &Interpretation, bound: usize) -> Result<Interpretation> {
    if !interp.output_alphabet().contains_blank() {
        return Err(Error::Domain(
            "blank enrichment expects a blank-extended output alphabet".into(),
        ));
    }
    if interp.input_alphabet().contains_blank() {
        return Err(Error::Domain(
            "blank enrichment expects a blankless input alphabet".into(),
        ));
    }
    let report = check_strict(interp, bound);
    if !report.passed() {
        return Err(Error::NotStrict(report.to_string()));
    }
    let ni = normalize(interp)?.interp;
    let body = star_scheme(ni.body())?;
    let mut heads: Vec<((Character, usize), BoolTerm)> = Vec::new();
    for (copy, c, term) in ni.heads() {
        let starred = star_term(term)?;
        let guarded = if c.is_blank() {
            BoolTerm::ite(blank_at(IndexTerm::Var), BoolTerm::True, starred)
        } else {
            BoolTerm::ite(blank_at(IndexTerm::Var), BoolTerm::False, starred)
        };
        heads.push(((c.clone(), copy), guarded));
    }
    Interpretation::new(
        interp.input_alphabet().blank_extend()?,
        interp.output_alphabet().clone(),
        interp.copies(),
        body,
        heads,
    )
}
