use std::collections::BTreeMap;

use crate::automata::{Dfao, MultiTrackDfa, DEFAULT_STATE_CAP};
use crate::error::{Error, Result};

/// A compiled predicate. Its automaton's tracks are positional (`_00`, `_01`, ...) and
/// correspond to `params` in order.
#[derive(Debug, Clone)]
pub struct Predicate {
    pub params: Vec<String>,
    pub automaton: MultiTrackDfa,
}

impl Predicate {
    /// Wraps an automaton whose tracks are sorted variable names.
    pub fn from_named(automaton: &MultiTrackDfa) -> Result<Self> {
        let params = automaton.tracks().to_vec();
        let map: Vec<(String, String)> = params
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), positional(i)))
            .collect();
        Ok(Predicate {
            automaton: automaton.rename(&map)?,
            params,
        })
    }

    /// Wraps a loaded automaton that already carries positional tracks.
    pub fn from_positional(automaton: MultiTrackDfa) -> Result<Self> {
        let params: Vec<String> = (0..automaton.track_count()).map(positional).collect();
        if automaton.tracks() != params.as_slice() {
            return Err(Error::SignatureMismatch {
                left: automaton.tracks().to_vec(),
                right: params,
            });
        }
        Ok(Predicate { params, automaton })
    }

    pub fn arity(&self) -> usize {
        self.params.len()
    }
}

pub(crate) fn positional(i: usize) -> String {
    format!("_{i:02}")
}

/// Named predicates plus the word automata library of named DFAOs.
#[derive(Debug, Clone)]
pub struct PredicateStore {
    predicates: BTreeMap<String, Predicate>,
    words: BTreeMap<String, Dfao>,
    cap: usize,
}

impl Default for PredicateStore {
    fn default() -> Self {
        PredicateStore {
            predicates: BTreeMap::new(),
            words: BTreeMap::new(),
            cap: DEFAULT_STATE_CAP,
        }
    }
}

impl PredicateStore {
    pub fn new() -> Self {
        Self::default()
    }

    /// State cap applied to every construction when compiling against this store.
    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn set_cap(&mut self, cap: usize) {
        self.cap = cap;
    }

    /// A store whose word library holds `FTM`, the Fibonacci-Thue-Morse DFAO.
    pub fn with_builtins() -> Self {
        let mut s = Self::new();
        s.words
            .insert("FTM".to_string(), Dfao::fibonacci_thue_morse());
        s
    }

    pub fn predicate(&self, name: &str) -> Result<&Predicate> {
        self.predicates
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn word(&self, name: &str) -> Result<&Dfao> {
        self.words
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn insert_predicate(&mut self, name: &str, p: Predicate, overwrite: bool) -> Result<()> {
        if !overwrite && self.predicates.contains_key(name) {
            return Err(Error::NameConflict(name.to_string()));
        }
        self.predicates.insert(name.to_string(), p);
        Ok(())
    }

    pub fn insert_word(&mut self, name: &str, m: Dfao, overwrite: bool) -> Result<()> {
        if !overwrite && self.words.contains_key(name) {
            return Err(Error::NameConflict(name.to_string()));
        }
        self.words.insert(name.to_string(), m);
        Ok(())
    }

    pub fn predicates(&self) -> impl Iterator<Item = (&String, &Predicate)> {
        self.predicates.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = (&String, &Dfao)> {
        self.words.iter()
    }
}
