//! Canonical pretty-printer. Identical values print byte-identically:
//! heads are ordered copy-major then by output-alphabet order with `ff`
//! heads omitted, functions by name, transducer lines by key.

use std::fmt::Write;

use crate::scheme::Interpretation;
use crate::term::{BoolTerm, IndexTerm, Term};

use super::lexer::GENERATED_MARKER;
use super::{Decl, SourceFile};
use crate::harness::transducer::{MachineDirection, SubseqTransducer};

pub fn print(file: &SourceFile) -> String {
    let mut out = String::new();
    if file.generated {
        let _ = writeln!(out, "# {GENERATED_MARKER}");
    }
    for decl in &file.decls {
        match decl {
            Decl::Alphabet { name, value } => {
                let chars: Vec<String> = value.chars().iter().map(|c| c.to_string()).collect();
                let _ = writeln!(out, "alphabet {name} = {{{}}}", chars.join(", "));
            }
            Decl::Interp {
                name,
                output_alphabet_name,
                input_alphabet_name,
                value,
            } => {
                let _ = writeln!(
                    out,
                    "interpretation {name}({output_alphabet_name}, {}) from {input_alphabet_name} {{",
                    value.copies()
                );
                print_interp_block(&mut out, value);
                let _ = writeln!(out, "}}");
            }
            Decl::Transducer {
                name,
                input_alphabet_name,
                output_alphabet_name,
                value,
            } => {
                let dir = match value.direction {
                    MachineDirection::Left => "left",
                    MachineDirection::Right => "right",
                };
                let _ = writeln!(
                    out,
                    "transducer {name}({dir}) from {input_alphabet_name} to {output_alphabet_name} {{"
                );
                print_transducer_block(&mut out, value);
                let _ = writeln!(out, "}}");
            }
        }
    }
    out
}

fn print_interp_block(out: &mut String, interp: &Interpretation) {
    for (copy, c, term) in interp.heads() {
        if *term == BoolTerm::False {
            continue;
        }
        let _ = writeln!(out, "    head {c} @ {copy} = {}", print_bool_term(term));
    }
    for (name, body) in interp.body().defs() {
        let _ = writeln!(out, "    fun {name}(x) = {}", print_bool_term(body));
    }
}

fn print_transducer_block(out: &mut String, m: &SubseqTransducer) {
    let render = |chars: &[crate::chars::Character]| -> String {
        let mut s = String::new();
        for c in chars {
            s.push_str(c.as_str());
        }
        s
    };
    if m.init_output.is_empty() {
        let _ = writeln!(out, "    start {}", m.start);
    } else {
        let _ = writeln!(out, "    start {} = \"{}\"", m.start, render(&m.init_output));
    }
    for ((from, c), (to, emitted)) in &m.edges {
        if emitted.is_empty() {
            let _ = writeln!(out, "    edge {from} {c} -> {to}");
        } else {
            let _ = writeln!(out, "    edge {from} {c} -> {to} \"{}\"", render(emitted));
        }
    }
    for (state, emitted) in &m.final_output {
        if emitted.is_empty() {
            let _ = writeln!(out, "    final {state}");
        } else {
            let _ = writeln!(out, "    final {state} = \"{}\"", render(emitted));
        }
    }
}

pub fn print_bool_term(t: &BoolTerm) -> String {
    t.to_string()
}

pub fn print_term(t: &Term) -> String {
    match t {
        Term::Bool(b) => b.to_string(),
        Term::Index(i) => print_index_term(i),
    }
}

fn print_index_term(t: &IndexTerm) -> String {
    t.to_string()
}
