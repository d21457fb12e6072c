use super::*;
use crate::chars::{Alphabet, StringStruct};
use crate::error::Error;
use crate::eval::{eval, Value};
use crate::harness::enumerate_strings;
use crate::scheme::Scheme;
use crate::term::{BoolTerm, FnName, IndexTerm, Term};
use crate::transduce::{check_strict, delete_blanks, transduce};

fn sym(s: &str) -> Character {
    Character::new(s)
}

fn char_at(s: &str, it: IndexTerm) -> BoolTerm {
    BoolTerm::CharAt(sym(s), it)
}

fn interp_789() -> Interpretation {
    let a = Alphabet::from_symbols("a").unwrap();
    let out = Alphabet::from_symbols("789").unwrap();
    Interpretation::new(
        a.clone(),
        out,
        3,
        Scheme::empty(a),
        [
            ((sym("7"), 0), char_at("a", IndexTerm::Var)),
            ((sym("8"), 1), char_at("a", IndexTerm::Var)),
            ((sym("9"), 2), char_at("a", IndexTerm::Var)),
        ],
    )
    .unwrap()
}

/// Non-strict: output position carries `a` iff the input carries `b`.
fn erase_interp() -> Interpretation {
    let ab = Alphabet::from_symbols("ab").unwrap();
    let out = Alphabet::from_symbols("a").unwrap();
    Interpretation::new(
        ab.clone(),
        out,
        1,
        Scheme::empty(ab),
        [((sym("a"), 0), char_at("b", IndexTerm::Var))],
    )
    .unwrap()
}

fn identity_interp(symbols: &str) -> Interpretation {
    let alpha = Alphabet::from_symbols(symbols).unwrap();
    let heads: Vec<_> = alpha
        .chars()
        .iter()
        .map(|c| ((c.clone(), 0), BoolTerm::CharAt(c.clone(), IndexTerm::Var)))
        .collect();
    Interpretation::new(alpha.clone(), alpha.clone(), 1, Scheme::empty(alpha), heads).unwrap()
}

#[test]
fn substitute_inlines_heads_at_bare_x() {
    // p = {f(x) = a(x)}, head (a,0) = b(x): f's body becomes b(x).
    let ab = Alphabet::from_symbols("ab").unwrap();
    let sigma = Alphabet::from_symbols("a").unwrap();
    let pi = Interpretation::new(
        ab.clone(),
        sigma.clone(),
        1,
        Scheme::empty(ab),
        [((sym("a"), 0), char_at("b", IndexTerm::Var))],
    )
    .unwrap();
    let p = Scheme::new(sigma, [(FnName::new("f"), char_at("a", IndexTerm::Var))]);
    let result = substitute(&p, &pi, 0).unwrap();
    assert_eq!(
        *result.body_of(&FnName::new("f")).unwrap(),
        char_at("b", IndexTerm::Var)
    );
}

#[test]
fn substitute_into_character_free_scheme_keeps_it_callable() {
    let pi = interp_789();
    let p = Scheme::new(
        pi.output_alphabet().clone(),
        [(
            FnName::new("f"),
            BoolTerm::ite(BoolTerm::Min(IndexTerm::Var), BoolTerm::True, BoolTerm::False),
        )],
    );
    for copy in 0..3 {
        let result = substitute(&p, &pi, copy).unwrap();
        assert!(result.body_of(&FnName::new("f")).is_some());
        result.validate().unwrap();
    }
}

/// The substitution adjunction on the worked 3-fold example: evaluating
/// a p-term on the transduced string agrees with evaluating its rewrite
/// on the input at the quotient position and remainder copy.
#[test]
fn adjunction_on_the_789_interpretation() {
    let pi = interp_789();
    let p = Scheme::new(
        pi.output_alphabet().clone(),
        [(
            FnName::new("f"),
            BoolTerm::ite(char_at("7", IndexTerm::Var), BoolTerm::True, BoolTerm::False),
        )],
    );
    let s = StringStruct::over(pi.input_alphabet(), "aa").unwrap();
    let out = transduce(&pi, &s).unwrap();
    let call = BoolTerm::call("f", IndexTerm::Var);
    for x in 0..6 {
        let lhs = eval(&out, x, &p, &Term::Bool(call.clone())).unwrap();
        let subst = substitution(&p, &pi, x % 3).unwrap();
        let rhs_term = subst.term(&call).unwrap();
        let rhs = eval(&s, x / 3, subst.scheme(), &Term::Bool(rhs_term)).unwrap();
        assert_eq!(lhs, rhs, "at output index {x}");
        assert_eq!(lhs, Value::Bool(x % 3 == 0));
    }
}

#[test]
fn strictify_pads_skipped_positions() {
    let pi = erase_interp();
    let strict = strictify(&pi).unwrap();
    let s = StringStruct::over(pi.input_alphabet(), "ab").unwrap();
    assert_eq!(transduce(&strict, &s).unwrap().to_string(), "_a");
    assert!(check_strict(&strict, 4).passed());
}

#[test]
fn strictify_then_delete_blanks_recovers_the_original() {
    let pi = erase_interp();
    let strict = strictify(&pi).unwrap();
    for s in enumerate_strings(pi.input_alphabet(), 5) {
        let direct = transduce(&pi, &s).unwrap();
        let padded = transduce(&strict, &s).unwrap();
        assert_eq!(delete_blanks(&padded).to_string(), direct.to_string());
        assert_eq!(padded.len(), s.len());
    }
}

#[test]
fn strictify_of_a_strict_interpretation_adds_false_blanks() {
    let pi = interp_789();
    let strict = strictify(&pi).unwrap();
    for s in enumerate_strings(pi.input_alphabet(), 4) {
        let direct = transduce(&pi, &s).unwrap();
        let padded = transduce(&strict, &s).unwrap();
        assert_eq!(direct.to_string(), delete_blanks(&padded).to_string());
        assert_eq!(direct.len(), padded.len());
    }
}

#[test]
fn destrictify_undoes_strictify_semantically() {
    for pi in [erase_interp(), interp_789(), identity_interp("ab")] {
        let round = destrictify(&strictify(&pi).unwrap()).unwrap();
        for s in enumerate_strings(pi.input_alphabet(), 5) {
            assert_eq!(
                transduce(&pi, &s).unwrap().to_string(),
                transduce(&round, &s).unwrap().to_string()
            );
        }
    }
}

#[test]
fn strict_compose_of_identities_is_identity() {
    let id = identity_interp("ab");
    let composed = strict_compose(&id, &id).unwrap();
    assert_eq!(composed.copies(), 1);
    for s in enumerate_strings(id.input_alphabet(), 5) {
        assert_eq!(transduce(&composed, &s).unwrap().to_string(), s.to_string());
    }
}

#[test]
fn strict_compose_checks_the_middle_alphabet() {
    let id_ab = identity_interp("ab");
    let id_cd = identity_interp("cd");
    assert!(matches!(
        strict_compose(&id_ab, &id_cd).unwrap_err(),
        Error::AlphabetMismatch(_)
    ));
}

#[test]
fn star_term_clauses() {
    // Characters stay put.
    let t = char_at("a", IndexTerm::Var);
    assert_eq!(star_term(&t).unwrap(), t);
    // Calls through P move to the skip variant.
    let t = BoolTerm::call("f", IndexTerm::Var.pred());
    assert_eq!(
        star_term(&t).unwrap(),
        BoolTerm::call("f$P", IndexTerm::Var.pred())
    );
    // Conditionals map clause by clause.
    let t = BoolTerm::ite(
        BoolTerm::Max(IndexTerm::Var),
        BoolTerm::True,
        BoolTerm::call("f", IndexTerm::Var.succ()),
    );
    assert_eq!(
        star_term(&t).unwrap(),
        BoolTerm::ite(
            BoolTerm::call(SCAN_MAX, IndexTerm::Var),
            BoolTerm::True,
            BoolTerm::call("f$S", IndexTerm::Var.succ()),
        )
    );
    // Non-normal input is rejected.
    let t = BoolTerm::Max(IndexTerm::Var.succ());
    assert!(matches!(star_term(&t).unwrap_err(), Error::NormalForm(_)));
}

#[test]
fn scanners_find_extremal_non_blank_indices() {
    let ext = Alphabet::from_symbols("ab").unwrap().blank_extend().unwrap();
    let scanners = build_skip_scanners(&ext).unwrap();
    let cases = [
        ("a__b_a", Some(5), Some(0)),
        ("_a_", Some(1), Some(1)),
        ("___", None, None),
    ];
    for (text, max_at, min_at) in cases {
        let s = StringStruct::over(&ext, text).unwrap();
        for x in 0..s.len() {
            let maxc = eval(
                &s,
                x,
                &scanners,
                &Term::Bool(BoolTerm::call(SCAN_MAX, IndexTerm::Var)),
            )
            .unwrap();
            let minc = eval(
                &s,
                x,
                &scanners,
                &Term::Bool(BoolTerm::call(SCAN_MIN, IndexTerm::Var)),
            )
            .unwrap();
            assert_eq!(maxc, Value::Bool(Some(x) == max_at), "maxc on {text} at {x}");
            assert_eq!(minc, Value::Bool(Some(x) == min_at), "minc on {text} at {x}");
        }
    }
}

#[test]
fn empty_scheme_stars_to_the_scanner_fragment() {
    let ab = Alphabet::from_symbols("ab").unwrap();
    let starred = star_scheme(&Scheme::empty(ab.clone())).unwrap();
    assert_eq!(starred.len(), 4);
    assert!(starred.defs().contains_key(&FnName::new(SCAN_MAX)));
    assert!(starred.defs().contains_key(&FnName::new(SCAN_MIN)));
    assert_eq!(*starred.signature(), ab.blank_extend().unwrap());
}

/// A skip call with no non-blank index in its direction has no value to
/// take; it must diverge rather than answer, mirroring the partiality of
/// the underlying index map.
#[test]
fn skip_call_diverges_on_an_all_blank_suffix() {
    let ab = Alphabet::from_symbols("ab").unwrap();
    let p = Scheme::new(ab, [(FnName::new("f"), BoolTerm::True)]);
    let starred = star_scheme(&p).unwrap();
    let ext = starred.signature().clone();
    let s = StringStruct::over(&ext, "a_").unwrap();
    let err = eval(
        &s,
        1,
        &starred,
        &Term::Bool(BoolTerm::call("f$S", IndexTerm::Var)),
    )
    .unwrap_err();
    assert_eq!(
        err,
        Error::Divergence {
            function: FnName::new("f$S"),
            index: 1
        }
    );
}

/// Theorem-style spot check of the star transformation: evaluating a
/// defining term on the blank-deleted string at star(x) implies the
/// starred term on the padded string at x, for every non-blank x.
#[test]
fn star_transform_agrees_with_the_deleted_string() {
    let ab = Alphabet::from_symbols("ab").unwrap();
    let p = Scheme::new(
        ab.clone(),
        [
            (
                FnName::new("after_a"),
                BoolTerm::ite(
                    BoolTerm::Min(IndexTerm::Var),
                    BoolTerm::False,
                    BoolTerm::call("is_a", IndexTerm::Var.pred()),
                ),
            ),
            (FnName::new("is_a"), char_at("a", IndexTerm::Var)),
        ],
    );
    let starred = star_scheme(&p).unwrap();
    let ext = starred.signature().clone();
    for s in enumerate_strings(&ext, 4) {
        let d = delete_blanks(&s).recast(&ab).unwrap();
        let maps = crate::transduce::index_maps(&s);
        for x in 0..s.len() {
            let Some(star_x) = maps.star[x] else { continue };
            for term in p.defs().values() {
                let lhs = eval(&d, star_x, &p, &Term::Bool(term.clone())).unwrap();
                let rhs = eval(&s, x, &starred, &Term::Bool(star_term(term).unwrap())).unwrap();
                assert_eq!(lhs, rhs, "on {s} at {x} for {term}");
            }
        }
    }
}

#[test]
fn blank_enrich_requires_strictness() {
    // Forgetting the blank head of a strictified program leaves it
    // non-strict; enrichment must refuse it.
    let strict = strictify(&erase_interp()).unwrap();
    let broken = Interpretation::new(
        strict.input_alphabet().clone(),
        strict.output_alphabet().clone(),
        1,
        strict.body().clone(),
        [((sym("a"), 0), strict.head(&sym("a"), 0).clone())],
    )
    .unwrap();
    assert!(matches!(
        blank_enrich(&broken, 4).unwrap_err(),
        Error::NotStrict(_)
    ));
}

#[test]
fn blank_enrich_reproduces_blanks_and_skips_them() {
    let pi = strictify(&erase_interp()).unwrap();
    let enriched = blank_enrich(&pi, 4).unwrap();
    assert!(check_strict(&enriched, 4).passed());
    let ext_in = enriched.input_alphabet().clone();
    for s in enumerate_strings(&ext_in, 5) {
        let inner = delete_blanks(&s).recast(pi.input_alphabet()).unwrap();
        let expected = transduce(&pi, &inner).unwrap();
        let got = transduce(&enriched, &s).unwrap();
        assert_eq!(
            delete_blanks(&got).to_string(),
            delete_blanks(&expected).to_string(),
            "on {s}"
        );
        assert_eq!(got.len(), s.len());
    }
}

#[test]
fn compose_identities_is_identity() {
    let id = identity_interp("ab");
    let composed = compose(&id, &id, 5).unwrap();
    for s in enumerate_strings(id.input_alphabet(), 5) {
        assert_eq!(transduce(&composed, &s).unwrap().to_string(), s.to_string());
    }
}

#[test]
fn normalization_preserves_transduction() {
    for pi in [interp_789(), erase_interp(), identity_interp("ab")] {
        let normal = normalize(&pi).unwrap().interp;
        for s in enumerate_strings(pi.input_alphabet(), 5) {
            assert_eq!(
                transduce(&pi, &s).unwrap().to_string(),
                transduce(&normal, &s).unwrap().to_string()
            );
        }
    }
}

#[test]
fn generated_names_never_collide() {
    // Compose twice so generated names flow through a second round of
    // generation; every definition must remain single.
    let id = identity_interp("ab");
    let once = compose(&id, &id, 4).unwrap();
    let twice = compose(&once, &id, 4).unwrap();
    twice.validate().unwrap();
    for s in enumerate_strings(id.input_alphabet(), 4) {
        assert_eq!(transduce(&twice, &s).unwrap().to_string(), s.to_string());
    }
}
