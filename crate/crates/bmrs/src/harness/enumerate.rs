//! Exhaustive string enumeration in length-then-lexicographic order.
//! Lexicographic means the alphabet's declared order, index 0 most
//! significant.

use crate::chars::{Alphabet, StringStruct};

pub struct StringEnumerator {
    alphabet: Alphabet,
    max_len: usize,
    len: usize,
    digits: Vec<usize>,
    done: bool,
}

impl Iterator for StringEnumerator {
    type Item = StringStruct;

    fn next(&mut self) -> Option<StringStruct> {
        if self.done {
            return None;
        }
        let contents = self
            .digits
            .iter()
            .map(|&d| self.alphabet.chars()[d].clone())
            .collect();
        let current = StringStruct::new(self.alphabet.clone(), contents)
            .expect("enumerated characters are alphabet members");

        // Advance: increment the digit vector, carrying leftward; on
        // overflow move to the next length.
        let base = self.alphabet.len();
        let mut pos = self.len;
        loop {
            if pos == 0 {
                self.len += 1;
                if self.len > self.max_len {
                    self.done = true;
                } else {
                    self.digits = vec![0; self.len];
                }
                break;
            }
            pos -= 1;
            self.digits[pos] += 1;
            if self.digits[pos] < base {
                break;
            }
            self.digits[pos] = 0;
        }
        Some(current)
    }
}

/// All strings over `alphabet` of length 0..=max_len.
pub fn enumerate_strings(alphabet: &Alphabet, max_len: usize) -> StringEnumerator {
    StringEnumerator {
        alphabet: alphabet.clone(),
        max_len,
        len: 0,
        digits: Vec::new(),
        done: false,
    }
}

/// The number of strings the enumerator yields.
pub fn string_count(alphabet_size: usize, max_len: usize) -> u64 {
    (0..=max_len as u32).map(|k| (alphabet_size as u64).pow(k)).sum()
}
