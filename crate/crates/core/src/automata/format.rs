//! Plain-text automaton files.
//!
//! ```text
//! msd_fib
//! 0 1
//! 0 -> 0
//! 1 -> 1
//! 1 2
//! 0 -> 0
//! ```
//!
//! The header names the numeration system once per track. Each state is a line
//! `<id> <output>` followed by its transitions `<digits> -> <target>`; ids run from 0
//! and state 0 is initial. Omitted transitions lead to an implicit sink (output 0, or
//! rejecting for DFAs). Multi-track DFAs repeat `msd_fib` per track, list one digit per
//! track before `->`, and use output 1/0 for accepting/rejecting.

use std::collections::VecDeque;
use std::fmt::Write;

use super::dfa::MultiTrackDfa;
use super::dfao::Dfao;
use crate::error::{Error, Result};

pub const NUMERATION_TAG: &str = "msd_fib";

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        message: message.into(),
    }
}

struct Parsed {
    outputs: Vec<u64>,
    /// (state, letter, target, line)
    transitions: Vec<(usize, u32, usize, usize)>,
}

fn parse_body<'a>(lines: impl Iterator<Item = (usize, &'a str)>, tracks: usize) -> Result<Parsed> {
    let mut outputs = Vec::new();
    let mut transitions = Vec::new();
    for (no, raw) in lines {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some((lhs, rhs)) = line.split_once("->") {
            let state = outputs
                .len()
                .checked_sub(1)
                .ok_or_else(|| err(no, "transition before any state"))?;
            let digits: Vec<&str> = lhs.split_whitespace().collect();
            if digits.len() != tracks {
                return Err(err(
                    no,
                    format!("expected {tracks} digit(s), found {}", digits.len()),
                ));
            }
            let mut letter = 0u32;
            for (t, d) in digits.iter().enumerate() {
                match *d {
                    "0" => {}
                    "1" => letter |= 1 << t,
                    other => return Err(err(no, format!("`{other}` is not a digit"))),
                }
            }
            let target: usize = rhs
                .trim()
                .parse()
                .map_err(|_| err(no, format!("bad target `{}`", rhs.trim())))?;
            if transitions
                .iter()
                .any(|&(s, l, _, _)| s == state && l == letter)
            {
                return Err(err(no, "duplicate transition"));
            }
            transitions.push((state, letter, target, no));
        } else {
            let mut parts = line.split_whitespace();
            let (Some(id), Some(out), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(err(no, format!("malformed line `{line}`")));
            };
            let id: usize = id
                .parse()
                .map_err(|_| err(no, format!("bad state id `{id}`")))?;
            if id != outputs.len() {
                return Err(err(
                    no,
                    format!("state ids must be consecutive; expected {}", outputs.len()),
                ));
            }
            let out: u64 = out
                .parse()
                .map_err(|_| err(no, format!("bad output `{out}`")))?;
            outputs.push(out);
        }
    }
    if outputs.is_empty() {
        return Err(err(0, "no states"));
    }
    if let Some(&(_, _, target, no)) = transitions.iter().find(|t| t.2 >= outputs.len()) {
        return Err(err(no, format!("transition to undeclared state {target}")));
    }
    Ok(Parsed {
        outputs,
        transitions,
    })
}

/// Fills the transition table; undefined entries go to a fresh sink when needed.
fn complete(parsed: &Parsed, alphabet: usize) -> (Vec<u32>, bool) {
    let n = parsed.outputs.len();
    let sink = n as u32;
    let mut delta = vec![sink; n * alphabet];
    for &(s, l, t, _) in &parsed.transitions {
        delta[s * alphabet + l as usize] = t as u32;
    }
    let needs_sink = parsed.transitions.len() < n * alphabet;
    if needs_sink {
        delta.extend(std::iter::repeat_n(sink, alphabet));
    }
    (delta, needs_sink)
}

pub fn load_dfao(text: &str) -> Result<Dfao> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (no, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| err(1, "empty file"))?;
    if header.trim() != NUMERATION_TAG {
        return Err(err(
            no,
            format!(
                "expected header `{NUMERATION_TAG}`, found `{}`",
                header.trim()
            ),
        ));
    }
    let parsed = parse_body(lines, 1)?;
    let (flat, needs_sink) = complete(&parsed, 2);
    let mut outputs = parsed.outputs;
    if needs_sink {
        outputs.push(0);
    }
    let delta = flat.chunks(2).map(|c| [c[0], c[1]]).collect();
    Dfao::from_parts(0, delta, outputs)
}

/// Writes the machine in breadth-first order, leaving out the junk-only sink and the
/// transitions into it.
pub fn save_dfao(m: &Dfao) -> String {
    let c = m.canonical();
    let sink = c.sink_states();
    let mut id = vec![usize::MAX; c.state_count()];
    let mut next = 0;
    for q in 0..c.state_count() {
        if !sink[q] {
            id[q] = next;
            next += 1;
        }
    }
    let mut out = String::new();
    writeln!(out, "{NUMERATION_TAG}").unwrap();
    for q in 0..c.state_count() as u32 {
        if id[q as usize] == usize::MAX {
            continue;
        }
        writeln!(out, "{} {}", id[q as usize], c.output(q)).unwrap();
        for d in 0..2 {
            let t = c.next(q, d) as usize;
            if !sink[t] {
                writeln!(out, "{d} -> {}", id[t]).unwrap();
            }
        }
    }
    out
}

/// Loads a multi-track DFA. Tracks are named `_00`, `_01`, ... in file order.
pub fn load_dfa(text: &str) -> Result<MultiTrackDfa> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (no, header) = lines.next().ok_or_else(|| err(1, "empty file"))?;
    let tags: Vec<&str> = header.split_whitespace().collect();
    if let Some(bad) = tags.iter().find(|&&t| t != NUMERATION_TAG) {
        return Err(Error::Numeration(format!("{bad} (line {no})")));
    }
    let k = tags.len();
    let parsed = parse_body(lines, k)?;
    if let Some(&o) = parsed.outputs.iter().find(|&&o| o > 1) {
        return Err(err(0, format!("acceptance flag must be 0 or 1, found {o}")));
    }
    let (delta, needs_sink) = complete(&parsed, 1 << k);
    let mut accepting: Vec<bool> = parsed.outputs.iter().map(|&o| o == 1).collect();
    if needs_sink {
        accepting.push(false);
    }
    let tracks = (0..k).map(|i| format!("_{i:02}")).collect();
    MultiTrackDfa::from_parts(tracks, 0, accepting, delta)
}

/// Writes a DFA breadth-first from its initial state, without its dead states.
pub fn save_dfa(a: &MultiTrackDfa) -> String {
    let dead = a.dead_states();
    let alpha = a.alphabet_size() as u32;
    let mut id = vec![usize::MAX; a.state_count()];
    let mut order = vec![a.initial()];
    id[a.initial() as usize] = 0;
    let mut queue = VecDeque::from([a.initial()]);
    while let Some(q) = queue.pop_front() {
        for l in 0..alpha {
            let s = a.next(q, l);
            if !dead[s as usize] && id[s as usize] == usize::MAX {
                id[s as usize] = order.len();
                order.push(s);
                queue.push_back(s);
            }
        }
    }
    let k = a.track_count();
    let mut out = String::new();
    writeln!(out, "{}", vec![NUMERATION_TAG; k].join(" ")).unwrap();
    for &q in &order {
        writeln!(out, "{} {}", id[q as usize], a.is_accepting(q) as u8).unwrap();
        for l in 0..alpha {
            let s = a.next(q, l);
            if dead[s as usize] && s != a.initial() {
                continue;
            }
            let digits: Vec<String> = (0..k).map(|t| ((l >> t) & 1).to_string()).collect();
            let mut line = digits.join(" ");
            if !line.is_empty() {
                line.push(' ');
            }
            writeln!(out, "{line}-> {}", id[s as usize]).unwrap();
        }
    }
    out
}
