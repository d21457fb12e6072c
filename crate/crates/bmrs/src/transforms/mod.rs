//! Syntactic program transformations: substitution, strictification,
//! de-strictification, strict composition, normal form, the star
//! transformation, blank enrichment, and general composition.

mod names;
mod normalize;
mod star;
mod substitute;

pub use normalize::{
    is_normal_head, is_normal_scheme, is_normal_term, normalize, normalize_scheme,
    NormalFormCertificate,
};
pub use star::{blank_enrich, build_skip_scanners, star_scheme, star_term, SCAN_MAX, SCAN_MIN};
pub use substitute::{strict_compose, substitute, substitution, Substitution};

use crate::chars::Character;
use crate::error::{Error, Result};
use crate::scheme::Interpretation;
use crate::term::BoolTerm;
use crate::transduce::{check_well_defined, CheckOutcome};

/// Default bound for the well-definedness and strictness evidence the
/// composition pipeline collects. Overridable per call and via the CLI.
pub const DEFAULT_CHECK_BOUND: usize = 5;

/// Strictification: extend the output alphabet with the blank and let
/// the blank head hold exactly when no character head does, as a nested
/// conditional chain in the alphabet's declared order.
pub fn strictify(interp: &Interpretation) -> Result<Interpretation> {
    if interp.output_alphabet().contains_blank() {
        return Err(Error::Domain(
            "strictification expects a blankless output alphabet".into(),
        ));
    }
    let extended = interp.output_alphabet().blank_extend()?;
    let mut heads: Vec<((Character, usize), BoolTerm)> = Vec::new();
    for i in 0..interp.copies() {
        for c in interp.output_alphabet().chars() {
            heads.push(((c.clone(), i), interp.head(c, i).clone()));
        }
        let mut chain = BoolTerm::True;
        for c in interp.output_alphabet().chars().iter().rev() {
            chain = BoolTerm::ite(interp.head(c, i).clone(), BoolTerm::False, chain);
        }
        heads.push(((Character::blank(), i), chain));
    }
    Interpretation::new(
        interp.input_alphabet().clone(),
        extended,
        interp.copies(),
        interp.body().clone(),
        heads,
    )
}

/// De-strictification: forget the blank heads.
pub fn destrictify(interp: &Interpretation) -> Result<Interpretation> {
    if !interp.output_alphabet().contains_blank() {
        return Err(Error::Domain(
            "de-strictification expects a blank-extended output alphabet".into(),
        ));
    }
    let reduced = interp.output_alphabet().without_blank()?;
    let mut heads: Vec<((Character, usize), BoolTerm)> = Vec::new();
    for i in 0..interp.copies() {
        for c in reduced.chars() {
            heads.push(((c.clone(), i), interp.head(c, i).clone()));
        }
    }
    Interpretation::new(
        interp.input_alphabet().clone(),
        reduced,
        interp.copies(),
        interp.body().clone(),
        heads,
    )
}

/// General composition of well-defined interpretations:
/// de-strictify(strict-compose(blank-enrich(strictify(outer)),
/// strictify(inner))). Well-definedness of both inputs is checked
/// exhaustively up to `bound` first.
pub fn compose(
    rho: &Interpretation,
    pi: &Interpretation,
    bound: usize,
) -> Result<Interpretation> {
    if rho.input_alphabet() != pi.output_alphabet() {
        return Err(Error::AlphabetMismatch(format!(
            "middle alphabets differ: {:?} vs {:?}",
            rho.input_alphabet(),
            pi.output_alphabet()
        )));
    }
    for (name, interp) in [("outer", rho), ("inner", pi)] {
        let report = check_well_defined(interp, bound);
        if let CheckOutcome::Counterexample { .. } = report.outcome {
            return Err(Error::Domain(format!(
                "{name} interpretation is not well-defined within bound: {report}"
            )));
        }
    }
    let rho_strict = strictify(rho)?;
    let pi_strict = strictify(pi)?;
    let rho_enriched = blank_enrich(&rho_strict, bound)?;
    let composed = strict_compose(&rho_enriched, &pi_strict)?;
    destrictify(&composed)
}

#[cfg(test)]
mod tests;
