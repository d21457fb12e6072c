//! Deterministic subsequential transducers, used as independent oracles
//! for end-to-end fixtures. They are specified without reference to any
//! scheme machinery.

use std::collections::{BTreeMap, BTreeSet};

use crate::chars::{Alphabet, Character, StringStruct};
use crate::error::{Error, Result};

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum MachineDirection {
    Left,
    Right,
}

/// A deterministic transducer, total on its input alphabet. A right
/// machine reads the reversed input and its output is reversed at the
/// end. The final-output map may be partial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubseqTransducer {
    pub direction: MachineDirection,
    pub input_alphabet: Alphabet,
    pub output_alphabet: Alphabet,
    pub states: BTreeSet<String>,
    pub start: String,
    pub init_output: Vec<Character>,
    pub edges: BTreeMap<(String, Character), (String, Vec<Character>)>,
    pub final_output: BTreeMap<String, Vec<Character>>,
}

impl SubseqTransducer {
    pub fn validate(&self) -> Result<()> {
        if !self.states.contains(&self.start) {
            return Err(Error::Domain(format!(
                "start state `{}` is not declared",
                self.start
            )));
        }
        for state in &self.states {
            for c in self.input_alphabet.chars() {
                let key = (state.clone(), c.clone());
                match self.edges.get(&key) {
                    None => {
                        return Err(Error::Domain(format!(
                            "transducer is not total: no edge from `{state}` on `{c}`"
                        )))
                    }
                    Some((target, output)) => {
                        if !self.states.contains(target) {
                            return Err(Error::Domain(format!(
                                "edge target `{target}` is not declared"
                            )));
                        }
                        for o in output {
                            if !self.output_alphabet.contains(o) {
                                return Err(Error::Domain(format!(
                                    "edge output `{o}` is not in the output alphabet"
                                )));
                            }
                        }
                    }
                }
            }
        }
        for (state, output) in &self.final_output {
            if !self.states.contains(state) {
                return Err(Error::Domain(format!(
                    "final output declared for unknown state `{state}`"
                )));
            }
            for o in output {
                if !self.output_alphabet.contains(o) {
                    return Err(Error::Domain(format!(
                        "final output `{o}` is not in the output alphabet"
                    )));
                }
            }
        }
        for ((state, c), _) in &self.edges {
            if !self.states.contains(state) {
                return Err(Error::Domain(format!("edge from unknown state `{state}`")));
            }
            if !self.input_alphabet.contains(c) {
                return Err(Error::Domain(format!(
                    "edge on `{c}`, which is not in the input alphabet"
                )));
            }
        }
        Ok(())
    }

    /// Run the machine: initial output, then transition outputs in
    /// reading order, then the final output of the reached state.
    pub fn run(&self, s: &StringStruct) -> Result<StringStruct> {
        if s.alphabet() != &self.input_alphabet {
            return Err(Error::AlphabetMismatch(format!(
                "input {:?} is not over the machine's input alphabet {:?}",
                s.alphabet(),
                self.input_alphabet
            )));
        }
        let mut reading: Vec<&Character> = s.chars().iter().collect();
        if self.direction == MachineDirection::Right {
            reading.reverse();
        }
        let mut out: Vec<Character> = self.init_output.clone();
        let mut state = self.start.clone();
        for c in reading {
            let (next, emitted) = self
                .edges
                .get(&(state.clone(), c.clone()))
                .expect("validated machines are total");
            out.extend(emitted.iter().cloned());
            state = next.clone();
        }
        let tail = self
            .final_output
            .get(&state)
            .ok_or_else(|| Error::UndefinedFinal(state.clone()))?;
        out.extend(tail.iter().cloned());
        if self.direction == MachineDirection::Right {
            out.reverse();
        }
        StringStruct::new(self.output_alphabet.clone(), out)
    }
}
