//! The predicate language: parsing, regex predicates, and compilation to automata.

mod ast;
mod base;
mod compile;
mod parser;
mod regex;
mod store;

pub use ast::{Formula, Rel, SeqRef, Term};
pub use base::{adder, constant, dfao_value, equal, less, verify_adder};
pub use compile::{compile, decide, Compiler};
pub use parser::parse;
pub use regex::{compile_regex, regex_nfa};
pub use store::{Predicate, PredicateStore};

use crate::automata::MultiTrackDfa;
use crate::error::Result;

impl PredicateStore {
    /// `def name "formula"`: compiles and stores a predicate, returning its automaton.
    pub fn def(&mut self, name: &str, text: &str, overwrite: bool) -> Result<MultiTrackDfa> {
        let f = parse(text)?;
        let a = compile(&f, self)?;
        self.insert_predicate(name, Predicate::from_named(&a)?, overwrite)?;
        Ok(a)
    }

    /// `reg name "pattern"`: stores a one-argument regex predicate.
    pub fn reg(&mut self, name: &str, pattern: &str, overwrite: bool) -> Result<MultiTrackDfa> {
        let a = compile_regex(pattern, "x")?;
        self.insert_predicate(name, Predicate::from_named(&a)?, overwrite)?;
        Ok(a)
    }

    /// `eval "sentence"`: decides a closed formula against this store.
    pub fn eval(&self, text: &str) -> Result<bool> {
        decide(&parse(text)?, self)
    }
}
