//! Automaton engine: multi-track DFAs, NFAs, DFAOs and their text format.

mod dfa;
mod dfao;
mod format;
mod nfa;
mod partition;

pub use dfa::{BoolOp, MultiTrackDfa, DEFAULT_STATE_CAP, MAX_TRACKS};
pub use dfao::{iso_check, Dfao};
pub use format::{load_dfa, load_dfao, save_dfa, save_dfao, NUMERATION_TAG};
pub use nfa::Nfa;
