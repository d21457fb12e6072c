//! One named suite per correctness result, each exhaustive within its
//! bound: every enumerated instance is checked, the exact case count is
//! reported, and the first counterexample (in enumeration order) is
//! returned with a replayable witness.

use std::fmt;

use crate::chars::{Alphabet, Character, StringStruct};
use crate::error::{Error, Result};
use crate::eval::{eval, Evaluator};
use crate::scheme::{Interpretation, Scheme};
use crate::term::{BoolTerm, FnName, IndexTerm, Term};
use crate::transduce::{check_strict, delete_blanks, index_maps, transduce};
use crate::transforms::{
    blank_enrich, build_skip_scanners, compose, destrictify, star_scheme, star_term,
    strict_compose, strictify, substitution, SCAN_MAX, SCAN_MIN,
};

use super::enumerate::enumerate_strings;
use super::fixtures::{composable_pairs, fixture, machine, registry};
use super::transducer::SubseqTransducer;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub bound: usize,
    pub cases: u64,
    pub outcome: SuiteOutcome,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SuiteOutcome {
    Pass,
    Counterexample { witness: String },
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, SuiteOutcome::Pass)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            SuiteOutcome::Pass => write!(
                f,
                "suite {}: pass ({} cases at bound {})",
                self.name, self.cases, self.bound
            ),
            SuiteOutcome::Counterexample { witness } => write!(
                f,
                "suite {}: counterexample after {} cases at bound {}: {witness}",
                self.name, self.cases, self.bound
            ),
        }
    }
}

/// Suite names with their default bounds.
pub const SUITES: &[(&str, usize)] = &[
    ("lemma-substitution", 4),
    ("lemma-strictification", 5),
    ("lemma-destrictification", 5),
    ("lemma-strict-compose", 5),
    ("remark-index-maps", 5),
    ("theorem-star-transform", 4),
    ("lemma-blank-strict", 5),
    ("theorem-blank-enrich", 5),
    ("theorem-compose", 5),
    ("theorem-rational", 6),
    ("scanner-oracle", 5),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

pub fn default_bound(name: &str) -> Option<usize> {
    SUITES.iter().find(|(n, _)| *n == name).map(|(_, b)| *b)
}

/// Run a named suite at the given bound.
pub fn run_suite(name: &str, max_len: usize) -> Result<SuiteReport> {
    let outcome = match name {
        "lemma-substitution" => lemma_substitution(max_len),
        "lemma-strictification" => lemma_strictification(max_len),
        "lemma-destrictification" => lemma_destrictification(max_len),
        "lemma-strict-compose" => lemma_strict_compose(max_len),
        "remark-index-maps" => remark_index_maps(max_len),
        "theorem-star-transform" => theorem_star_transform(max_len),
        "lemma-blank-strict" => lemma_blank_strict(max_len),
        "theorem-blank-enrich" => theorem_blank_enrich(max_len),
        "theorem-compose" => theorem_compose_with(&|r, p| compose(r, p, max_len), max_len),
        "theorem-rational" => theorem_rational(max_len),
        "scanner-oracle" => scanner_oracle(max_len),
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    let (cases, outcome) = outcome?;
    Ok(SuiteReport {
        name: name.to_string(),
        bound: max_len,
        cases,
        outcome,
    })
}

type SuiteBody = Result<(u64, SuiteOutcome)>;

fn fail(cases: u64, witness: String) -> SuiteBody {
    Ok((cases, SuiteOutcome::Counterexample { witness }))
}

fn pass(cases: u64) -> SuiteBody {
    Ok((cases, SuiteOutcome::Pass))
}

// ---------------------------------------------------------------------
// A string function given by an interpretation, a machine, blank
// deletion, or a chain of those applied in sequence.

pub enum StringFn<'a> {
    Interp(&'a Interpretation),
    Machine(&'a SubseqTransducer),
    DeleteBlanks,
    Chain(Vec<StringFn<'a>>),
}

impl StringFn<'_> {
    pub fn apply(&self, s: &StringStruct) -> Result<StringStruct> {
        match self {
            StringFn::Interp(i) => {
                let s = s.recast(i.input_alphabet())?;
                transduce(i, &s)
            }
            StringFn::Machine(m) => {
                let s = s.recast(&m.input_alphabet)?;
                m.run(&s)
            }
            StringFn::DeleteBlanks => Ok(delete_blanks(s)),
            StringFn::Chain(stages) => {
                let mut cur = s.clone();
                for stage in stages {
                    cur = stage.apply(&cur)?;
                }
                Ok(cur)
            }
        }
    }
}

/// Compare two string functions on every string over the alphabet up to
/// the bound; the first mismatch (in enumeration order) is the
/// counterexample.
pub fn check_equal_transductions(
    f: &StringFn,
    g: &StringFn,
    alphabet: &Alphabet,
    max_len: usize,
    name: &str,
) -> SuiteReport {
    let mut cases = 0;
    for s in enumerate_strings(alphabet, max_len) {
        cases += 1;
        let lhs = f.apply(&s);
        let rhs = g.apply(&s);
        let agree = match (&lhs, &rhs) {
            (Ok(a), Ok(b)) => a.to_string() == b.to_string(),
            _ => false,
        };
        if !agree {
            return SuiteReport {
                name: name.to_string(),
                bound: max_len,
                cases,
                outcome: SuiteOutcome::Counterexample {
                    witness: format!("on \"{s}\": {} vs {}", render(&lhs), render(&rhs)),
                },
            };
        }
    }
    SuiteReport {
        name: name.to_string(),
        bound: max_len,
        cases,
        outcome: SuiteOutcome::Pass,
    }
}

fn render(r: &Result<StringStruct>) -> String {
    match r {
        Ok(s) => format!("\"{s}\""),
        Err(e) => format!("error: {e}"),
    }
}

// ---------------------------------------------------------------------
// Lemma: substitution adjunction.
//
// For a strict well-defined interpretation, evaluating a scheme term on
// the transduced string at x agrees with evaluating its substituted
// rewrite on the input at position x div m, copy x mod m.

/// Probe schemes over the fixture's output alphabet, exercising
/// character tests, min/max, and both recursion directions.
fn probe_schemes(alphabet: &Alphabet) -> Vec<Scheme> {
    let first = alphabet.chars().first().unwrap().clone();
    let last = alphabet.chars().last().unwrap().clone();
    let walk = Scheme::new(
        alphabet.clone(),
        [(
            FnName::new("walk"),
            BoolTerm::ite(
                BoolTerm::CharAt(first.clone(), IndexTerm::Var),
                BoolTerm::ite(
                    BoolTerm::Max(IndexTerm::Var),
                    BoolTerm::True,
                    BoolTerm::call("walk", IndexTerm::Var.succ()),
                ),
                BoolTerm::Min(IndexTerm::Var.pred()),
            ),
        )],
    );
    let back = Scheme::new(
        alphabet.clone(),
        [(
            FnName::new("back"),
            BoolTerm::ite(
                BoolTerm::Min(IndexTerm::Var),
                BoolTerm::CharAt(last, IndexTerm::Var),
                BoolTerm::ite(
                    BoolTerm::CharAt(first, IndexTerm::Var.pred()),
                    BoolTerm::call("back", IndexTerm::Var.pred()),
                    BoolTerm::Max(IndexTerm::Var.succ()),
                ),
            ),
        )],
    );
    vec![walk, back]
}

/// Atomic probe terms over a scheme's signature and names.
fn probe_terms(p: &Scheme) -> Vec<BoolTerm> {
    let mut terms: Vec<BoolTerm> = p.defs().values().cloned().collect();
    terms.push(BoolTerm::True);
    terms.push(BoolTerm::Max(IndexTerm::Var));
    terms.push(BoolTerm::Min(IndexTerm::Var));
    for c in p.signature().chars() {
        terms.push(BoolTerm::CharAt(c.clone(), IndexTerm::Var));
    }
    for f in p.defs().keys() {
        terms.push(BoolTerm::Call(f.clone(), IndexTerm::Var));
    }
    terms
}

fn lemma_substitution(max_len: usize) -> SuiteBody {
    let mut cases = 0;
    for fx in registry().fixtures.iter().filter(|f| f.strict) {
        let pi = &fx.interp;
        let m = pi.copies();
        for probe in probe_schemes(pi.output_alphabet()) {
            let subs: Vec<_> = (0..m)
                .map(|r| substitution(&probe, pi, r))
                .collect::<Result<_>>()?;
            let terms = probe_terms(subs[0].normalized_source());
            for s in enumerate_strings(pi.input_alphabet(), max_len) {
                let out = transduce(pi, &s)?;
                for x in 0..out.len() {
                    let (q, r) = (x / m, x % m);
                    for t in &terms {
                        cases += 1;
                        let lhs = eval(
                            &out,
                            x,
                            subs[r].normalized_source(),
                            &Term::Bool(t.clone()),
                        )?;
                        let rewritten = subs[r].term(t)?;
                        let rhs = eval(&s, q, subs[r].scheme(), &Term::Bool(rewritten))?;
                        if lhs != rhs {
                            return fail(
                                cases,
                                format!(
                                    "fixture {}, s=\"{s}\", x={x}: `{t}` gives {lhs} on the \
                                     output but {rhs} under substitution",
                                    fx.name
                                ),
                            );
                        }
                    }
                }
            }
        }
    }
    pass(cases)
}

// ---------------------------------------------------------------------
// Lemma: strictification is strict and blank-deletes to the original.

fn lemma_strictification(max_len: usize) -> SuiteBody {
    let mut cases = 0;
    for fx in registry().fixtures.iter().filter(|f| f.blankless_output()) {
        let pi = &fx.interp;
        let strict = strictify(pi)?;
        for s in enumerate_strings(pi.input_alphabet(), max_len) {
            cases += 1;
            let padded = transduce(&strict, &s)?;
            if padded.len() != strict.copies() * s.len() {
                return fail(
                    cases,
                    format!(
                        "fixture {}: strictified output on \"{s}\" has length {}, not {}",
                        fx.name,
                        padded.len(),
                        strict.copies() * s.len()
                    ),
                );
            }
            let direct = transduce(pi, &s)?;
            if delete_blanks(&padded).to_string() != direct.to_string() {
                return fail(
                    cases,
                    format!(
                        "fixture {}: d(strictified(\"{s}\")) = \"{}\" but the original gives \"{direct}\"",
                        fx.name,
                        delete_blanks(&padded)
                    ),
                );
            }
        }
    }
    pass(cases)
}

// ---------------------------------------------------------------------
// Lemma: de-strictification composes deletion with the original.

fn lemma_destrictification(max_len: usize) -> SuiteBody {
    let mut cases = 0;
    let mut subjects: Vec<(String, Interpretation)> = Vec::new();
    for fx in &registry().fixtures {
        if fx.pad_style() {
            subjects.push((fx.name.to_string(), fx.interp.clone()));
        }
        if fx.strict && fx.blankless_output() {
            subjects.push((format!("strictify({})", fx.name), strictify(&fx.interp)?));
        }
    }
    for (name, pi) in &subjects {
        let forgotten = destrictify(pi)?;
        for s in enumerate_strings(pi.input_alphabet(), max_len) {
            cases += 1;
            let lhs = transduce(&forgotten, &s)?;
            let rhs = delete_blanks(&transduce(pi, &s)?);
            if lhs.to_string() != rhs.to_string() {
                return fail(
                    cases,
                    format!("{name} on \"{s}\": forgot-blanks gives \"{lhs}\", d of output gives \"{rhs}\""),
                );
            }
        }
    }
    pass(cases)
}

// ---------------------------------------------------------------------
// Lemma: strict composition computes the composition.

fn lemma_strict_compose(max_len: usize) -> SuiteBody {
    let mut cases = 0;
    for (outer, inner) in composable_pairs(true) {
        let composed = strict_compose(&outer.interp, &inner.interp)?;
        for s in enumerate_strings(inner.interp.input_alphabet(), max_len) {
            cases += 1;
            let direct = transduce(&composed, &s)?;
            let mid = transduce(&inner.interp, &s)?;
            let piped = transduce(&outer.interp, &mid)?;
            if direct.to_string() != piped.to_string() {
                return fail(
                    cases,
                    format!(
                        "({} over {}) on \"{s}\": composed gives \"{direct}\", pipeline gives \"{piped}\"",
                        outer.name, inner.name
                    ),
                );
            }
        }
    }
    pass(cases)
}

// ---------------------------------------------------------------------
// Remark: properties of blank index maps and scanners.

fn clamp_succ(x: usize, len: usize) -> usize {
    if x + 1 < len {
        x + 1
    } else {
        x
    }
}

fn remark_index_maps(max_len: usize) -> SuiteBody {
    let gamma = Alphabet::from_symbols("ab").unwrap();
    let ext = gamma.blank_extend()?;
    let scanners = build_skip_scanners(&ext)?;
    let mut cases = 0;
    for s in enumerate_strings(&ext, max_len) {
        let d = delete_blanks(&s);
        let maps = index_maps(&s);
        let mut ev = Evaluator::new(&s, &scanners);
        // Naive recount of the star map as an oracle.
        for x in 0..s.len() {
            cases += 1;
            let blanks_before = (0..x).filter(|&y| s.char_at(y).is_blank()).count();
            let expected_star = if s.char_at(x).is_blank() {
                None
            } else {
                Some(x - blanks_before)
            };
            if maps.star[x] != expected_star {
                return fail(cases, format!("star map wrong on \"{s}\" at {x}"));
            }
            let non_blank = !s.char_at(x).is_blank();
            if non_blank {
                let star_x = maps.star[x].unwrap();
                // Item 1: characters carry over to the deleted string.
                if d.char_at(star_x) != s.char_at(x) {
                    return fail(cases, format!("character mismatch on \"{s}\" at {x}"));
                }
                // Items 2-5: scanners decide max/min of the deleted string.
                let maxc = ev.eval_bool(x, &BoolTerm::call(SCAN_MAX, IndexTerm::Var))?;
                let minc = ev.eval_bool(x, &BoolTerm::call(SCAN_MIN, IndexTerm::Var))?;
                if maxc != (star_x == d.len() - 1) {
                    return fail(cases, format!("maxc wrong on \"{s}\" at {x}"));
                }
                if minc != (star_x == 0) {
                    return fail(cases, format!("minc wrong on \"{s}\" at {x}"));
                }
                // Item 6: the three maps agree on non-blank indices.
                if maps.succ_map[x] != Some(star_x) || maps.pred_map[x] != Some(star_x) {
                    return fail(cases, format!("map agreement fails on \"{s}\" at {x}"));
                }
                // Item 7 at index level. The nearest-non-blank maps are
                // partial: stepping left from the least non-blank index
                // (or right from the greatest) leaves their domain, and
                // exactly there the equation has no right-hand side.
                let lhs_pred = star_x.saturating_sub(1);
                match maps.pred_map[x.saturating_sub(1)] {
                    Some(v) => {
                        if v != lhs_pred {
                            return fail(cases, format!("pred transport fails on \"{s}\" at {x}"));
                        }
                    }
                    None => {
                        let least_non_blank = (0..s.len()).find(|&y| !s.char_at(y).is_blank());
                        if least_non_blank != Some(x) || x == 0 {
                            return fail(
                                cases,
                                format!("pred transport undefined unexpectedly on \"{s}\" at {x}"),
                            );
                        }
                    }
                }
                let lhs_succ = clamp_succ(star_x, d.len());
                match maps.succ_map[clamp_succ(x, s.len())] {
                    Some(v) => {
                        if v != lhs_succ {
                            return fail(cases, format!("succ transport fails on \"{s}\" at {x}"));
                        }
                    }
                    None => {
                        let greatest_non_blank = (0..s.len()).rev().find(|&y| !s.char_at(y).is_blank());
                        if greatest_non_blank != Some(x) || x == s.len() - 1 {
                            return fail(
                                cases,
                                format!("succ transport undefined unexpectedly on \"{s}\" at {x}"),
                            );
                        }
                    }
                }
            } else {
                // Final clause: blank indices inherit their neighbours'
                // nearest-non-blank images.
                if x + 1 < s.len() && maps.succ_map[x] != maps.succ_map[x + 1] {
                    return fail(cases, format!("blank succ clause fails on \"{s}\" at {x}"));
                }
                if x > 0 && maps.pred_map[x] != maps.pred_map[x - 1] {
                    return fail(cases, format!("blank pred clause fails on \"{s}\" at {x}"));
                }
            }
        }
    }
    pass(cases)
}

// ---------------------------------------------------------------------
// Theorem: the star transformation simulates the blank-deleted string.

/// Guarded scheme fixtures over {a, b}: every move through S or P is
/// fenced by a max/min (or scanner-translated) test, so the starred
/// program never walks off the non-blank region.
fn star_fixture_schemes(gamma: &Alphabet) -> Vec<(String, Scheme)> {
    let a = Character::new("a");
    let b = Character::new("b");
    let mut out: Vec<(String, Scheme)> = Vec::new();
    out.push((
        "no-b-right".into(),
        Scheme::new(
            gamma.clone(),
            [
                (
                    FnName::new("no_b_after"),
                    BoolTerm::ite(
                        BoolTerm::Max(IndexTerm::Var),
                        BoolTerm::True,
                        BoolTerm::call("no_b_from", IndexTerm::Var.succ()),
                    ),
                ),
                (
                    FnName::new("no_b_from"),
                    BoolTerm::ite(
                        BoolTerm::CharAt(b.clone(), IndexTerm::Var),
                        BoolTerm::False,
                        BoolTerm::ite(
                            BoolTerm::Max(IndexTerm::Var),
                            BoolTerm::True,
                            BoolTerm::call("no_b_from", IndexTerm::Var.succ()),
                        ),
                    ),
                ),
            ],
        ),
    ));
    out.push((
        "seen-a-left".into(),
        Scheme::new(
            gamma.clone(),
            [(
                FnName::new("seen_a"),
                BoolTerm::ite(
                    BoolTerm::CharAt(a.clone(), IndexTerm::Var),
                    BoolTerm::True,
                    BoolTerm::ite(
                        BoolTerm::Min(IndexTerm::Var),
                        BoolTerm::False,
                        BoolTerm::call("seen_a", IndexTerm::Var.pred()),
                    ),
                ),
            )],
        ),
    ));
    // Exercises wrapper introduction: a character test at P(x).
    out.push((
        "prev-is-a".into(),
        Scheme::new(
            gamma.clone(),
            [(
                FnName::new("alt"),
                BoolTerm::ite(
                    BoolTerm::Min(IndexTerm::Var),
                    BoolTerm::CharAt(a.clone(), IndexTerm::Var),
                    BoolTerm::ite(
                        BoolTerm::CharAt(a, IndexTerm::Var.pred()),
                        BoolTerm::CharAt(b, IndexTerm::Var),
                        BoolTerm::call("alt", IndexTerm::Var.pred()),
                    ),
                ),
            )],
        ),
    ));
    out
}

fn theorem_star_transform(max_len: usize) -> SuiteBody {
    let gamma = Alphabet::from_symbols("ab").unwrap();
    let ext = gamma.blank_extend()?;
    let mut cases = 0;
    for (name, p) in star_fixture_schemes(&gamma) {
        let (pn, _) = crate::transforms::normalize_scheme(&p);
        let starred = star_scheme(&pn)?;
        let terms = probe_terms(&pn);
        for s in enumerate_strings(&ext, max_len) {
            let d = delete_blanks(&s).recast(&gamma)?;
            let maps = index_maps(&s);
            for x in 0..s.len() {
                let Some(star_x) = maps.star[x] else { continue };
                for t in &terms {
                    cases += 1;
                    let lhs = eval(&d, star_x, &pn, &Term::Bool(t.clone()))?;
                    let starred_term = star_term(t)?;
                    let rhs = eval(&s, x, &starred, &Term::Bool(starred_term))?;
                    if lhs != rhs {
                        return fail(
                            cases,
                            format!(
                                "scheme {name}, s=\"{s}\", x={x}: `{t}` gives {lhs} on d(s) \
                                 but its star gives {rhs}"
                            ),
                        );
                    }
                }
            }
        }
    }
    pass(cases)
}

// ---------------------------------------------------------------------
// Blank enrichment: strictness and correctness.

fn enrichable_fixtures() -> Result<Vec<(String, Interpretation)>> {
    let mut out: Vec<(String, Interpretation)> = Vec::new();
    for fx in &registry().fixtures {
        if fx.pad_style() {
            out.push((fx.name.to_string(), fx.interp.clone()));
        }
        if fx.blankless_output() {
            out.push((format!("strictify({})", fx.name), strictify(&fx.interp)?));
        }
    }
    Ok(out)
}

fn lemma_blank_strict(max_len: usize) -> SuiteBody {
    let mut cases = 0;
    for (name, pi) in enrichable_fixtures()? {
        let enriched = blank_enrich(&pi, max_len)?;
        let report = check_strict(&enriched, max_len);
        cases += report.cases;
        if !report.passed() {
            return fail(cases, format!("blank enrichment of {name}: {report}"));
        }
    }
    pass(cases)
}

fn theorem_blank_enrich(max_len: usize) -> SuiteBody {
    let mut cases = 0;
    for (name, pi) in enrichable_fixtures()? {
        let enriched = blank_enrich(&pi, max_len)?;
        for s in enumerate_strings(enriched.input_alphabet(), max_len) {
            cases += 1;
            let inner = delete_blanks(&s).recast(pi.input_alphabet())?;
            let lhs = delete_blanks(&transduce(&enriched, &s)?);
            let rhs = delete_blanks(&transduce(&pi, &inner)?);
            if lhs.to_string() != rhs.to_string() {
                return fail(
                    cases,
                    format!("{name} on \"{s}\": enriched gives \"{lhs}\" after deletion, base gives \"{rhs}\""),
                );
            }
        }
    }
    pass(cases)
}

// ---------------------------------------------------------------------
// Theorem: general composition computes the composition.

/// Parameterized over the composer so a deliberately broken pipeline
/// can be shown to produce a counterexample.
pub fn theorem_compose_with(
    composer: &dyn Fn(&Interpretation, &Interpretation) -> Result<Interpretation>,
    max_len: usize,
) -> SuiteBody {
    let mut cases = 0;
    for (outer, inner) in composable_pairs(false) {
        let composed = composer(&outer.interp, &inner.interp)?;
        for s in enumerate_strings(inner.interp.input_alphabet(), max_len) {
            cases += 1;
            let direct = transduce(&composed, &s);
            let piped = transduce(&inner.interp, &s)
                .and_then(|mid| transduce(&outer.interp, &mid));
            let agree = match (&direct, &piped) {
                (Ok(a), Ok(b)) => a.to_string() == b.to_string(),
                _ => false,
            };
            if !agree {
                return fail(
                    cases,
                    format!(
                        "({} over {}) on \"{s}\": composed gives {}, pipeline gives {}",
                        outer.name,
                        inner.name,
                        render(&direct),
                        render(&piped)
                    ),
                );
            }
        }
    }
    pass(cases)
}

// ---------------------------------------------------------------------
// Theorem: the one-way fixture pair composes to its machine pipeline.

fn theorem_rational(max_len: usize) -> SuiteBody {
    let g = fixture("swap_after_x");
    let h = fixture("mark_tail");
    let composed = compose(&g.interp, &h.interp, 5)?;
    let left_machine = machine("swap_after_x_oracle");
    let right_machine = machine("mark_tail_oracle");
    let f = StringFn::Interp(&composed);
    let oracle = StringFn::Chain(vec![
        StringFn::Machine(right_machine),
        StringFn::Machine(left_machine),
    ]);
    let report = check_equal_transductions(
        &f,
        &oracle,
        h.interp.input_alphabet(),
        max_len,
        "theorem-rational",
    );
    Ok((report.cases, report.outcome))
}

// ---------------------------------------------------------------------
// The corrected scanners against a linear-scan oracle.

fn scanner_oracle(max_len: usize) -> SuiteBody {
    let ext = Alphabet::from_symbols("ab").unwrap().blank_extend()?;
    let scanners = build_skip_scanners(&ext)?;
    let mut cases = 0;
    for s in enumerate_strings(&ext, max_len) {
        let max_non_blank = (0..s.len()).rev().find(|&y| !s.char_at(y).is_blank());
        let min_non_blank = (0..s.len()).find(|&y| !s.char_at(y).is_blank());
        let mut ev = Evaluator::new(&s, &scanners);
        for x in 0..s.len() {
            cases += 1;
            let maxc = ev.eval_bool(x, &BoolTerm::call(SCAN_MAX, IndexTerm::Var))?;
            let minc = ev.eval_bool(x, &BoolTerm::call(SCAN_MIN, IndexTerm::Var))?;
            if maxc != (Some(x) == max_non_blank) {
                return fail(cases, format!("maxc disagrees with the scan on \"{s}\" at {x}"));
            }
            if minc != (Some(x) == min_non_blank) {
                return fail(cases, format!("minc disagrees with the scan on \"{s}\" at {x}"));
            }
        }
    }
    pass(cases)
}
