//! Boolean monadic recursive schemes over finite strings.
//!
//! A scheme is a finite set of mutually recursive boolean-valued,
//! single-index-argument function definitions over string primitives. An
//! interpretation equips a scheme with one head per (output character,
//! copy index) pair and induces a string function whose output order is
//! the lexicographic order on (input index, copy index). This crate
//! provides the typing rules and big-step semantics, the transduction
//! semantics, the full syntactic composition pipeline (strictify,
//! de-strictify, strict compose, blank-enrich, general compose), a
//! concrete textual syntax, and an exhaustive small-instance
//! verification harness.

pub mod chars;
pub mod error;
pub mod eval;
pub mod harness;
pub mod scheme;
pub mod syntax;
pub mod term;
pub mod transduce;
pub mod transforms;

pub use chars::{Alphabet, Character, StringStruct, BLANK};
pub use error::{Error, Result};
pub use eval::{eval, eval_head, Evaluator, Value};
pub use scheme::{Direction, Interpretation, Scheme};
pub use term::{typecheck, BoolTerm, FnName, IndexTerm, Term, TypeTag};
pub use transduce::{
    check_strict, check_well_defined, delete_blanks, index_maps, layout, transduce, CheckOutcome,
    CheckReport, IndexMaps, OutputLayout,
};
