//! Digit regular expressions (`0`, `1`, concatenation, `|`, `*`, `+`, `?`, grouping),
//! compiled by Thompson's construction.

use crate::automata::{BoolOp, MultiTrackDfa, Nfa, DEFAULT_STATE_CAP};
use crate::error::{Error, Result};

enum Re {
    Empty,
    Digit(u32),
    Concat(Box<Re>, Box<Re>),
    Alt(Box<Re>, Box<Re>),
    Star(Box<Re>),
    Plus(Box<Re>),
    Optional(Box<Re>),
}

struct ReParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl ReParser<'_> {
    fn err(&self, message: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            message: format!("regex: {message}"),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn alt(&mut self) -> Result<Re> {
        let mut lhs = self.concat()?;
        while self.peek() == Some(b'|') {
            self.pos += 1;
            lhs = Re::Alt(Box::new(lhs), Box::new(self.concat()?));
        }
        Ok(lhs)
    }

    fn concat(&mut self) -> Result<Re> {
        let mut acc = Re::Empty;
        while let Some(c) = self.peek() {
            if c == b'|' || c == b')' {
                break;
            }
            let next = self.repeat()?;
            acc = match acc {
                Re::Empty => next,
                other => Re::Concat(Box::new(other), Box::new(next)),
            };
        }
        Ok(acc)
    }

    fn repeat(&mut self) -> Result<Re> {
        let mut r = self.atom()?;
        loop {
            r = match self.peek() {
                Some(b'*') => Re::Star(Box::new(r)),
                Some(b'+') => Re::Plus(Box::new(r)),
                Some(b'?') => Re::Optional(Box::new(r)),
                _ => return Ok(r),
            };
            self.pos += 1;
        }
    }

    fn atom(&mut self) -> Result<Re> {
        match self.peek() {
            Some(b'0') => {
                self.pos += 1;
                Ok(Re::Digit(0))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Re::Digit(1))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.alt()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("unbalanced parenthesis"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => Err(self.err("expected 0, 1 or `(`")),
            None => Err(self.err("unexpected end of pattern")),
        }
    }
}

/// Adds the fragment for `re` and returns its (entry, exit) states.
fn thompson(re: &Re, nfa: &mut Nfa) -> (u32, u32) {
    match re {
        Re::Empty => {
            let s = nfa.add_state(false);
            (s, s)
        }
        Re::Digit(d) => {
            let (s, t) = (nfa.add_state(false), nfa.add_state(false));
            nfa.add_edge(s, *d, t);
            (s, t)
        }
        Re::Concat(a, b) => {
            let (s1, t1) = thompson(a, nfa);
            let (s2, t2) = thompson(b, nfa);
            nfa.add_epsilon(t1, s2);
            (s1, t2)
        }
        Re::Alt(a, b) => {
            let (s, t) = (nfa.add_state(false), nfa.add_state(false));
            for r in [a, b] {
                let (si, ti) = thompson(r, nfa);
                nfa.add_epsilon(s, si);
                nfa.add_epsilon(ti, t);
            }
            (s, t)
        }
        Re::Star(a) | Re::Plus(a) | Re::Optional(a) => {
            let (s, t) = (nfa.add_state(false), nfa.add_state(false));
            let (si, ti) = thompson(a, nfa);
            nfa.add_epsilon(s, si);
            nfa.add_epsilon(ti, t);
            if !matches!(re, Re::Plus(_)) {
                nfa.add_epsilon(s, t);
            }
            if !matches!(re, Re::Optional(_)) {
                nfa.add_epsilon(ti, si);
            }
            (s, t)
        }
    }
}

/// Thompson NFA for `pattern` on a single track.
pub fn regex_nfa(pattern: &str, track: &str) -> Result<Nfa> {
    let mut p = ReParser {
        src: pattern.as_bytes(),
        pos: 0,
    };
    let re = p.alt()?;
    if p.peek().is_some() {
        return Err(p.err("unbalanced parenthesis"));
    }
    let mut nfa = Nfa::new(vec![track.to_string()]);
    let (s, t) = thompson(&re, &mut nfa);
    nfa.add_initial(s);
    nfa.set_accepting(t, true);
    Ok(nfa)
}

/// One-track automaton for the pattern's language restricted to valid (no `11`) words.
pub fn compile_regex(pattern: &str, track: &str) -> Result<MultiTrackDfa> {
    let dfa = regex_nfa(pattern, track)?.determinize(DEFAULT_STATE_CAP)?;
    dfa.product(
        &MultiTrackDfa::valid_universe(vec![track.to_string()])?,
        BoolOp::And,
    )
}
