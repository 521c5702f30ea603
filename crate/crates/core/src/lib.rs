//! Decision procedure for first-order statements about Fibonacci-automatic
//! sequences, together with the tooling that derives the subword-complexity
//! automaton of the Fibonacci-Thue-Morse sequence and checks it against brute force.

pub mod automata;
pub mod dekking;
pub mod error;
pub mod linrep;
pub mod logic;
pub mod numeration;
pub mod oracle;

pub use error::{Error, Result};
