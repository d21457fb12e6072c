//! The transduction an interpretation induces, the blank-deletion map,
//! the blank index maps, and bounded well-definedness/strictness checks.

use std::fmt;

use crate::chars::{Alphabet, Character, StringStruct};
use crate::error::{Error, Result};
use crate::eval::Evaluator;
use crate::harness::enumerate::enumerate_strings;
use crate::scheme::Interpretation;

/// The ordered set J realized by an interpretation on an input: the
/// (input index, copy) pairs at which some head holds, in lexicographic
/// order with the input index more significant, together with the unique
/// character each pair carries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OutputLayout {
    pub entries: Vec<LayoutEntry>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LayoutEntry {
    pub input_index: usize,
    pub copy: usize,
    pub character: Character,
}

/// Compute the layout by evaluating every head at every (index, copy)
/// pair in lexicographic order.
pub fn layout(interp: &Interpretation, s: &StringStruct) -> Result<OutputLayout> {
    if s.alphabet() != interp.input_alphabet() {
        return Err(Error::AlphabetMismatch(format!(
            "input {:?} is not over the interpretation's input alphabet {:?}",
            s.alphabet(),
            interp.input_alphabet()
        )));
    }
    let mut entries = Vec::new();
    let mut ev = Evaluator::new(s, interp.body());
    for q in 0..s.len() {
        for r in 0..interp.copies() {
            let mut carried: Option<&Character> = None;
            for c in interp.output_alphabet().chars() {
                let holds = ev.eval_bool(q, interp.head(c, r))?;
                if holds {
                    if let Some(first) = carried {
                        return Err(Error::WellDefinedness {
                            input: s.to_string(),
                            index: q,
                            copy: r,
                            first: first.clone(),
                            second: c.clone(),
                        });
                    }
                    carried = Some(c);
                }
            }
            if let Some(c) = carried {
                entries.push(LayoutEntry {
                    input_index: q,
                    copy: r,
                    character: c.clone(),
                });
            }
        }
    }
    Ok(OutputLayout { entries })
}

/// The transduction induced by the interpretation: the characters of the
/// layout read in order, over the output alphabet.
pub fn transduce(interp: &Interpretation, s: &StringStruct) -> Result<StringStruct> {
    let layout = layout(interp, s)?;
    let contents = layout.entries.into_iter().map(|e| e.character).collect();
    StringStruct::new(interp.output_alphabet().clone(), contents)
}

/// Delete all blank characters; the result is over the blankless
/// alphabet.
pub fn delete_blanks(s: &StringStruct) -> StringStruct {
    let alphabet = s
        .alphabet()
        .without_blank()
        .unwrap_or_else(|_| s.alphabet().clone());
    let contents: Vec<Character> = s.chars().iter().filter(|c| !c.is_blank()).cloned().collect();
    StringStruct::new(alphabet, contents).expect("non-blank characters survive blank removal")
}

/// The three index maps of a blank-padded string: star sends a non-blank
/// index to its position in the blank-deleted string; the successor and
/// predecessor maps send any index to the star of the nearest non-blank
/// index at or after (resp. at or before) it, where one exists.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexMaps {
    pub star: Vec<Option<usize>>,
    pub succ_map: Vec<Option<usize>>,
    pub pred_map: Vec<Option<usize>>,
}

pub fn index_maps(s: &StringStruct) -> IndexMaps {
    let n = s.len();
    let mut star = vec![None; n];
    let mut blanks_before = 0;
    for x in 0..n {
        if s.char_at(x).is_blank() {
            blanks_before += 1;
        } else {
            star[x] = Some(x - blanks_before);
        }
    }
    let mut succ_map = vec![None; n];
    let mut next: Option<usize> = None;
    for x in (0..n).rev() {
        if star[x].is_some() {
            next = star[x];
        }
        succ_map[x] = next;
    }
    let mut pred_map = vec![None; n];
    let mut prev: Option<usize> = None;
    for x in 0..n {
        if star[x].is_some() {
            prev = star[x];
        }
        pred_map[x] = prev;
    }
    IndexMaps {
        star,
        succ_map,
        pred_map,
    }
}

/// Outcome of a bounded head check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CheckOutcome {
    Pass,
    Counterexample {
        input: String,
        index: usize,
        copy: usize,
        detail: CheckFailure,
    },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CheckFailure {
    /// Two distinct characters' heads both held.
    TwoTrue(Character, Character),
    /// No head held (strictness only).
    NoneTrue,
    /// A head diverged.
    Diverged(Character),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckReport {
    pub bound: usize,
    pub cases: u64,
    pub outcome: CheckOutcome,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            CheckOutcome::Pass => {
                write!(f, "pass (bound {}, {} cases)", self.bound, self.cases)
            }
            CheckOutcome::Counterexample {
                input,
                index,
                copy,
                detail,
            } => {
                write!(
                    f,
                    "counterexample on \"{input}\" at index {index}, copy {copy}: "
                )?;
                match detail {
                    CheckFailure::TwoTrue(a, b) => write!(f, "heads `{a}` and `{b}` both true"),
                    CheckFailure::NoneTrue => write!(f, "no head true"),
                    CheckFailure::Diverged(c) => write!(f, "head `{c}` diverged"),
                }
            }
        }
    }
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, CheckOutcome::Pass)
    }
}

fn check_heads(interp: &Interpretation, max_len: usize, require_one: bool) -> CheckReport {
    let mut cases: u64 = 0;
    for s in enumerate_strings(interp.input_alphabet(), max_len) {
        let mut ev = Evaluator::new(&s, interp.body());
        for x in 0..s.len() {
            for i in 0..interp.copies() {
                cases += 1;
                let mut holding: Option<&Character> = None;
                for c in interp.output_alphabet().chars() {
                    match ev.eval_bool(x, interp.head(c, i)) {
                        Ok(true) => {
                            if let Some(first) = holding {
                                return CheckReport {
                                    bound: max_len,
                                    cases,
                                    outcome: CheckOutcome::Counterexample {
                                        input: s.to_string(),
                                        index: x,
                                        copy: i,
                                        detail: CheckFailure::TwoTrue(first.clone(), c.clone()),
                                    },
                                };
                            }
                            holding = Some(c);
                        }
                        Ok(false) => {}
                        Err(_) => {
                            return CheckReport {
                                bound: max_len,
                                cases,
                                outcome: CheckOutcome::Counterexample {
                                    input: s.to_string(),
                                    index: x,
                                    copy: i,
                                    detail: CheckFailure::Diverged(c.clone()),
                                },
                            };
                        }
                    }
                }
                if require_one && holding.is_none() {
                    return CheckReport {
                        bound: max_len,
                        cases,
                        outcome: CheckOutcome::Counterexample {
                            input: s.to_string(),
                            index: x,
                            copy: i,
                            detail: CheckFailure::NoneTrue,
                        },
                    };
                }
            }
        }
    }
    CheckReport {
        bound: max_len,
        cases,
        outcome: CheckOutcome::Pass,
    }
}

/// Exhaustively test that at most one head holds per (index, copy) on
/// every input up to the bound.
pub fn check_well_defined(interp: &Interpretation, max_len: usize) -> CheckReport {
    check_heads(interp, max_len, false)
}

/// As `check_well_defined`, but require exactly one head per pair.
pub fn check_strict(interp: &Interpretation, max_len: usize) -> CheckReport {
    check_heads(interp, max_len, true)
}

/// Number of (string, index, copy) cases a bounded check visits when it
/// passes.
pub fn check_case_count(alphabet: &Alphabet, copies: usize, max_len: usize) -> u64 {
    (1..=max_len as u32)
        .map(|k| (alphabet.len() as u64).pow(k) * (k as u64) * (copies as u64))
        .sum()
}
