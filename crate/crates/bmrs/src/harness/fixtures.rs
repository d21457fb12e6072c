//! The fixture registry: program files in the concrete syntax plus
//! transducer oracles, embedded from the `fixtures/` directory and
//! parsed once.

use std::sync::OnceLock;

use crate::error::Result;
use crate::scheme::Interpretation;
use crate::syntax::{parse, SourceFile};

use super::transducer::SubseqTransducer;

pub struct Fixture {
    pub name: &'static str,
    pub source: &'static str,
    pub file: SourceFile,
    pub interp: Interpretation,
    /// Exactly one head holds per (index, copy); asserted by the
    /// registry self-checks up to the default bound.
    pub strict: bool,
}

impl Fixture {
    /// Eligible for strictification: blankless output alphabet.
    pub fn blankless_output(&self) -> bool {
        !self.interp.output_alphabet().contains_blank()
    }

    /// Eligible for blank enrichment directly: strict, blank-extended
    /// output, blankless input.
    pub fn pad_style(&self) -> bool {
        self.strict
            && self.interp.output_alphabet().contains_blank()
            && !self.interp.input_alphabet().contains_blank()
    }
}

pub struct Machine {
    pub name: &'static str,
    pub source: &'static str,
    pub machine: SubseqTransducer,
}

pub struct Registry {
    /// Transduction fixtures, all well-defined.
    pub fixtures: Vec<Fixture>,
    /// Independent transducer oracles.
    pub machines: Vec<Machine>,
}

macro_rules! embed {
    ($file:literal) => {
        ($file, include_str!(concat!("../../fixtures/", $file, ".bmrs")))
    };
}

const FIXTURE_SOURCES: &[(&str, &str, bool)] = &[
    // (file stem, interpretation name, strict)
    ("sec4_789", "triple", true),
    ("sec53_pi", "pi53", true),
    ("sec53_rho", "rho53", true),
    ("sec6_pad_a", "pad_swap", true),
    ("sec6_pad_b", "pad_mark", true),
    ("sec6_pad_c", "pad_rise", true),
    ("sec6_pad_m2", "pad_pair", true),
    ("elgot_left", "swap_after_x", true),
    ("elgot_right", "mark_tail", true),
    ("identity", "copy", true),
    ("double", "stretch", true),
    ("nonstrict_erase", "count_b", false),
];

fn fixture_text(stem: &str) -> &'static str {
    let table: &[(&str, &str)] = &[
        embed!("sec4_789"),
        embed!("sec53_pi"),
        embed!("sec53_rho"),
        embed!("sec6_pad_a"),
        embed!("sec6_pad_b"),
        embed!("sec6_pad_c"),
        embed!("sec6_pad_m2"),
        embed!("elgot_left"),
        embed!("elgot_right"),
        embed!("elgot_left_oracle"),
        embed!("elgot_right_oracle"),
        embed!("identity"),
        embed!("double"),
        embed!("nonstrict_erase"),
        embed!("diverge"),
    ];
    table
        .iter()
        .find(|(name, _)| *name == stem)
        .map(|(_, text)| *text)
        .expect("fixture stem is registered")
}

fn build() -> Result<Registry> {
    let mut fixtures = Vec::new();
    for (stem, interp_name, strict) in FIXTURE_SOURCES {
        let source = fixture_text(stem);
        let file = parse(source)?;
        let interp = file
            .interpretation(interp_name)
            .unwrap_or_else(|| panic!("fixture {stem} declares {interp_name}"))
            .clone();
        fixtures.push(Fixture {
            name: interp_name,
            source,
            file,
            interp,
            strict: *strict,
        });
    }
    let mut machines = Vec::new();
    for (stem, name) in [
        ("elgot_left_oracle", "swap_after_x_oracle"),
        ("elgot_right_oracle", "mark_tail_oracle"),
    ] {
        let source = fixture_text(stem);
        let file = parse(source)?;
        let machine = file
            .transducer(name)
            .unwrap_or_else(|| panic!("fixture {stem} declares {name}"))
            .clone();
        machines.push(Machine {
            name,
            source,
            machine,
        });
    }
    Ok(Registry { fixtures, machines })
}

/// The shared registry. Fixtures are parsed and validated on first use.
pub fn registry() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(|| build().expect("fixture registry parses and validates"))
}

pub fn fixture(name: &str) -> &'static Fixture {
    registry()
        .fixtures
        .iter()
        .find(|f| f.name == name)
        .unwrap_or_else(|| panic!("unknown fixture `{name}`"))
}

pub fn machine(name: &str) -> &'static SubseqTransducer {
    &registry()
        .machines
        .iter()
        .find(|m| m.name == name)
        .unwrap_or_else(|| panic!("unknown machine `{name}`"))
        .machine
}

/// The divergent program, kept out of the transduction registry.
pub fn diverge_source() -> &'static str {
    fixture_text("diverge")
}

/// Composable pairs (outer, inner) whose middle alphabets agree, in
/// registry order. With `strict_only`, both members must be strict.
pub fn composable_pairs(strict_only: bool) -> Vec<(&'static Fixture, &'static Fixture)> {
    let reg = registry();
    let mut pairs = Vec::new();
    for outer in &reg.fixtures {
        for inner in &reg.fixtures {
            if outer.interp.input_alphabet() != inner.interp.output_alphabet() {
                continue;
            }
            // The general composition pipeline strictifies both sides,
            // so their output alphabets must be blankless.
            if !outer.blankless_output() || !inner.blankless_output() {
                continue;
            }
            if strict_only && !(outer.strict && inner.strict) {
                continue;
            }
            pairs.push((outer, inner));
        }
    }
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::StringStruct;
    use crate::transduce::{check_strict, check_well_defined, transduce};

    #[test]
    fn registry_parses_and_validates() {
        let reg = registry();
        assert_eq!(reg.fixtures.len(), 12);
        assert_eq!(reg.machines.len(), 2);
        for f in &reg.fixtures {
            f.interp.validate().unwrap();
        }
        for m in &reg.machines {
            m.machine.validate().unwrap();
        }
    }

    #[test]
    fn declared_strictness_tags_hold_at_bound_four() {
        for f in &registry().fixtures {
            assert!(
                check_well_defined(&f.interp, 4).passed(),
                "{} must be well-defined",
                f.name
            );
            assert_eq!(
                check_strict(&f.interp, 4).passed(),
                f.strict,
                "strictness tag of {} is wrong",
                f.name
            );
        }
    }

    #[test]
    fn pad_fixtures_reproduce_their_declared_base_behavior() {
        for (name, input, expected) in [
            ("pad_swap", "00", "ab"),
            ("pad_mark", "01", "b_"),
            ("pad_rise", "010011", "aabbab"),
            ("pad_pair", "010", "aa_bab"),
        ] {
            let f = fixture(name);
            let s = StringStruct::over(f.interp.input_alphabet(), input).unwrap();
            assert_eq!(
                transduce(&f.interp, &s).unwrap().to_string(),
                expected,
                "{name} on {input}"
            );
        }
    }

    /// The two halves of the worked composition example, checked cell
    /// by cell against their published per-copy tables.
    #[test]
    fn sec53_fixtures_match_the_worked_tables() {
        use crate::eval::eval_head;
        use crate::chars::Character;

        let pi = &fixture("pi53").interp;
        let s = StringStruct::over(pi.input_alphabet(), "010").unwrap();
        let pi_table = [["a", "b"], ["b", "c"], ["a", "a"]];
        for (q, row) in pi_table.iter().enumerate() {
            for (r, expected) in row.iter().enumerate() {
                for c in pi.output_alphabet().chars() {
                    let holds = eval_head(&s, q, pi, c, r).unwrap();
                    assert_eq!(
                        holds,
                        c == &Character::new(*expected),
                        "pi53 at position {q}, copy {r}, character {c}"
                    );
                }
            }
        }
        assert_eq!(transduce(pi, &s).unwrap().to_string(), "abbcaa");

        let rho = &fixture("rho53").interp;
        let t = StringStruct::over(rho.input_alphabet(), "abbcaa").unwrap();
        let rho_table = [
            ["9", "8", "8"],
            ["9", "8", "9"],
            ["9", "9", "8"],
            ["9", "9", "8"],
            ["9", "9", "8"],
            ["8", "9", "9"],
        ];
        for (q, row) in rho_table.iter().enumerate() {
            for (r, expected) in row.iter().enumerate() {
                for c in rho.output_alphabet().chars() {
                    let holds = eval_head(&t, q, rho, c, r).unwrap();
                    assert_eq!(
                        holds,
                        c == &Character::new(*expected),
                        "rho53 at position {q}, copy {r}, character {c}"
                    );
                }
            }
        }
        assert_eq!(
            transduce(rho, &t).unwrap().to_string(),
            "988989998998998899"
        );
    }

    #[test]
    fn composable_pair_enumeration_is_nonempty_and_typed() {
        let pairs = composable_pairs(false);
        assert!(pairs.len() >= 5);
        for (outer, inner) in &pairs {
            assert_eq!(
                outer.interp.input_alphabet(),
                inner.interp.output_alphabet()
            );
        }
        let strict_pairs = composable_pairs(true);
        assert!(strict_pairs.len() >= 3);
        assert!(strict_pairs.len() <= pairs.len());
        // The worked-example pair is present.
        assert!(strict_pairs
            .iter()
            .any(|(o, i)| o.name == "rho53" && i.name == "pi53"));
        // At least one pair has a non-strict member.
        assert!(pairs
            .iter()
            .any(|(o, i)| !o.strict || !i.strict));
    }

    #[test]
    fn one_way_fixtures_have_the_advertised_directions() {
        use crate::scheme::Direction;
        assert_eq!(
            fixture("swap_after_x").interp.classify_direction(),
            Direction::POnly
        );
        assert_eq!(
            fixture("mark_tail").interp.classify_direction(),
            Direction::SOnly
        );
        assert_eq!(fixture("copy").interp.classify_direction(), Direction::Both);
    }
}
