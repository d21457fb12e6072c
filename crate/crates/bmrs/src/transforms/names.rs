//! Deterministic generated-name allocation. All generated names carry
//! the `$` marker, which user programs may not contain, so unions of
//! user code with generated code are collision-free; collisions among
//! generated names fall back to a `$r` suffix.

use std::collections::BTreeSet;

use crate::term::FnName;

pub struct NamePool {
    taken: BTreeSet<FnName>,
}

impl NamePool {
    pub fn new() -> Self {
        NamePool {
            taken: BTreeSet::new(),
        }
    }

    pub fn with(names: impl IntoIterator<Item = FnName>) -> Self {
        NamePool {
            taken: names.into_iter().collect(),
        }
    }

    pub fn contains(&self, name: &FnName) -> bool {
        self.taken.contains(name)
    }

    pub fn insert(&mut self, name: FnName) -> bool {
        self.taken.insert(name)
    }

    /// Claim the preferred name, appending `$r` until it is free.
    pub fn claim(&mut self, preferred: FnName) -> FnName {
        let mut candidate = preferred;
        while self.taken.contains(&candidate) {
            candidate = FnName::new(format!("{candidate}$r"));
        }
        self.taken.insert(candidate.clone());
        candidate
    }
}

/// Rename call targets in a term.
pub fn rename_in_term(
    t: &crate::term::BoolTerm,
    map: &std::collections::BTreeMap<FnName, FnName>,
) -> crate::term::BoolTerm {
    use crate::term::BoolTerm;
    match t {
        BoolTerm::Call(f, it) => {
            let f = map.get(f).cloned().unwrap_or_else(|| f.clone());
            BoolTerm::Call(f, it.clone())
        }
        BoolTerm::Ite(c, t, e) => BoolTerm::ite(
            rename_in_term(c, map),
            rename_in_term(t, map),
            rename_in_term(e, map),
        ),
        other => other.clone(),
    }
}

/// Apply a closed rename to a scheme: definition names and call sites.
pub fn rename_scheme(
    p: &crate::scheme::Scheme,
    map: &std::collections::BTreeMap<FnName, FnName>,
) -> crate::scheme::Scheme {
    let lines = p.defs().iter().map(|(f, body)| {
        let name = map.get(f).cloned().unwrap_or_else(|| f.clone());
        (name, rename_in_term(body, map))
    });
    crate::scheme::Scheme::new(p.signature().clone(), lines)
}

/// Encoding of a character for use inside generated function names.
pub fn enc_char(c: &crate::chars::Character) -> String {
    if c.is_blank() {
        "blank".to_string()
    } else if c.as_str().chars().all(|ch| ch.is_ascii_alphanumeric()) {
        c.as_str().to_string()
    } else {
        c.as_str().chars().map(|ch| format!("u{:x}", ch as u32)).collect()
    }
}
