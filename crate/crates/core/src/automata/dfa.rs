//! Multi-track DFAs over the column alphabet `{0,1}^k`.
//!
//! A letter is a `u32` whose bit `i` is the digit read on track `i`. Tracks are
//! identified by variable name; every track is read synchronously, so shorter
//! representations are left-padded with zeros. All automata built here are total
//! and accept only words whose every track is a valid Zeckendorf word (leading zeros
//! allowed).

use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use super::nfa::Nfa;
use super::partition;
use crate::error::{Error, Result};
use crate::numeration::zeck_encode;

/// Default bound on the number of states any single construction may create.
pub const DEFAULT_STATE_CAP: usize = 1_000_000;

/// Most tracks a single automaton may carry.
pub const MAX_TRACKS: usize = 16;

/// Binary connectives for [`MultiTrackDfa::product`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoolOp {
    And,
    Or,
    Implies,
    Iff,
    Xor,
}

impl BoolOp {
    pub fn apply(self, a: bool, b: bool) -> bool {
        match self {
            BoolOp::And => a && b,
            BoolOp::Or => a || b,
            BoolOp::Implies => !a || b,
            BoolOp::Iff => a == b,
            BoolOp::Xor => a != b,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiTrackDfa {
    tracks: Vec<String>,
    initial: u32,
    accepting: Vec<bool>,
    delta: Vec<u32>,
}

impl MultiTrackDfa {
    /// Builds an automaton from raw parts; `delta[q * 2^k + letter]` is the successor.
    pub fn from_parts(
        tracks: Vec<String>,
        initial: u32,
        accepting: Vec<bool>,
        delta: Vec<u32>,
    ) -> Result<Self> {
        if tracks.len() > MAX_TRACKS {
            return Err(Error::ResourceLimit {
                what: "tracks per automaton".into(),
                cap: MAX_TRACKS,
            });
        }
        for (i, t) in tracks.iter().enumerate() {
            if tracks[..i].contains(t) {
                return Err(Error::SignatureMismatch {
                    left: tracks.clone(),
                    right: vec![t.clone()],
                });
            }
        }
        let n = accepting.len();
        let alphabet = 1usize << tracks.len();
        if n == 0 || delta.len() != n * alphabet || initial as usize >= n {
            return Err(Error::Format {
                line: 0,
                message: "inconsistent automaton dimensions".into(),
            });
        }
        if delta.iter().any(|&t| t as usize >= n) {
            return Err(Error::Format {
                line: 0,
                message: "transition to a nonexistent state".into(),
            });
        }
        Ok(MultiTrackDfa {
            tracks,
            initial,
            accepting,
            delta,
        })
    }

    pub fn tracks(&self) -> &[String] {
        &self.tracks
    }

    pub fn track_count(&self) -> usize {
        self.tracks.len()
    }

    pub fn alphabet_size(&self) -> usize {
        1 << self.tracks.len()
    }

    pub fn initial(&self) -> u32 {
        self.initial
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn is_accepting(&self, q: u32) -> bool {
        self.accepting[q as usize]
    }

    #[inline]
    pub fn next(&self, q: u32, letter: u32) -> u32 {
        self.delta[q as usize * self.alphabet_size() + letter as usize]
    }

    /// States from which no accepting state is reachable.
    pub fn dead_states(&self) -> Vec<bool> {
        let n = self.state_count();
        let a = self.alphabet_size();
        let mut rev: Vec<Vec<u32>> = vec![Vec::new(); n];
        for q in 0..n {
            for l in 0..a {
                rev[self.delta[q * a + l] as usize].push(q as u32);
            }
        }
        let mut live = self.accepting.clone();
        let mut stack: Vec<u32> = (0..n as u32).filter(|&q| live[q as usize]).collect();
        while let Some(q) = stack.pop() {
            for &p in &rev[q as usize] {
                if !live[p as usize] {
                    live[p as usize] = true;
                    stack.push(p);
                }
            }
        }
        live.into_iter().map(|l| !l).collect()
    }

    /// Number of states excluding the dead state. On a minimal automaton at most one
    /// state is dead, so this is `state_count()` or `state_count() - 1`.
    pub fn live_state_count(&self) -> usize {
        self.dead_states().iter().filter(|&&d| !d).count()
    }

    pub fn track_index(&self, name: &str) -> Result<usize> {
        self.tracks
            .iter()
            .position(|t| t == name)
            .ok_or_else(|| Error::UnknownTrack(name.to_string()))
    }

    /// Runs the automaton over a word of letters.
    pub fn accepts_letters(&self, word: &[u32]) -> bool {
        let q = word.iter().fold(self.initial, |q, &l| self.next(q, l));
        self.is_accepting(q)
    }

    /// Runs on a word given as one digit row per track (all rows of equal length).
    pub fn accepts_rows(&self, rows: &[Vec<u8>]) -> Result<bool> {
        if rows.len() != self.track_count() {
            return Err(Error::Arity {
                name: "rows".into(),
                expected: self.track_count(),
                got: rows.len(),
            });
        }
        let len = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != len) {
            return Err(Error::InvalidRepresentation(
                "tracks must have equal length".into(),
            ));
        }
        let word: Vec<u32> = (0..len)
            .map(|pos| {
                rows.iter()
                    .enumerate()
                    .fold(0u32, |l, (t, r)| l | ((r[pos] as u32 & 1) << t))
            })
            .collect();
        Ok(self.accepts_letters(&word))
    }

    /// Accepts the tuple of naturals (in track order), encoded canonically and padded to
    /// the longest representation.
    pub fn accepts_values(&self, values: &[u64]) -> Result<bool> {
        let reprs: Vec<_> = values.iter().map(|&v| zeck_encode(v)).collect();
        let len = reprs.iter().map(|r| r.len()).max().unwrap_or(0);
        let rows: Vec<Vec<u8>> = reprs.iter().map(|r| r.padded(len)).collect();
        self.accepts_rows(&rows)
    }

    /// Accepts nothing.
    pub fn empty(tracks: Vec<String>) -> Result<Self> {
        let a = 1usize << tracks.len();
        Self::from_parts(tracks, 0, vec![false], vec![0; a])
    }

    /// Accepts exactly the words in which no track contains `11`.
    pub fn valid_universe(tracks: Vec<String>) -> Result<Self> {
        let k = tracks.len();
        if k > MAX_TRACKS {
            return Err(Error::ResourceLimit {
                what: "tracks per automaton".into(),
                cap: MAX_TRACKS,
            });
        }
        // state m < 2^k: tracks in m just read a 1; state 2^k: dead.
        let a = 1usize << k;
        let dead = a as u32;
        let mut delta = Vec::with_capacity((a + 1) * a);
        for m in 0..a as u32 {
            for l in 0..a as u32 {
                delta.push(if l & m == 0 { l } else { dead });
            }
        }
        delta.extend(std::iter::repeat_n(dead, a));
        let mut accepting = vec![true; a];
        accepting.push(false);
        Self::from_parts(tracks, 0, accepting, delta)
    }

    /// Accepts valid words whose tracks satisfy `pred` column by column, given as a
    /// small per-letter state machine. Used for the simple base automata.
    pub(crate) fn from_fn(
        tracks: Vec<String>,
        states: usize,
        initial: u32,
        accept: impl Fn(u32) -> bool,
        step: impl Fn(u32, u32) -> Option<u32>,
    ) -> Result<Self> {
        let a = 1usize << tracks.len();
        let dead = states as u32;
        let mut delta = Vec::with_capacity((states + 1) * a);
        let mut accepting = Vec::with_capacity(states + 1);
        for q in 0..states as u32 {
            for l in 0..a as u32 {
                delta.push(step(q, l).unwrap_or(dead));
            }
            accepting.push(accept(q));
        }
        delta.extend(std::iter::repeat_n(dead, a));
        accepting.push(false);
        let raw = Self::from_parts(tracks.clone(), initial, accepting, delta)?;
        raw.product(&Self::valid_universe(tracks)?, BoolOp::And)
    }

    fn check_same_tracks(&self, other: &Self) -> Result<()> {
        if self.tracks != other.tracks {
            return Err(Error::SignatureMismatch {
                left: self.tracks.clone(),
                right: other.tracks.clone(),
            });
        }
        Ok(())
    }

    /// Boolean combination of two automata over the same tracks, minimized.
    pub fn product(&self, other: &Self, op: BoolOp) -> Result<Self> {
        self.product_capped(other, op, DEFAULT_STATE_CAP)
    }

    pub fn product_capped(&self, other: &Self, op: BoolOp, cap: usize) -> Result<Self> {
        self.check_same_tracks(other)?;
        let raw = self.raw_product(other, op, cap)?;
        let result = if op.apply(false, false) {
            // both sides reject junk words, so the result would accept them
            raw.raw_product(
                &Self::valid_universe(self.tracks.clone())?,
                BoolOp::And,
                cap,
            )?
        } else {
            raw
        };
        Ok(result.minimize())
    }

    fn raw_product(&self, other: &Self, op: BoolOp, cap: usize) -> Result<Self> {
        let a = self.alphabet_size();
        let mut index: FxHashMap<(u32, u32), u32> = FxHashMap::default();
        let mut pairs = vec![(self.initial, other.initial)];
        index.insert(pairs[0], 0);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            for l in 0..a as u32 {
                let key = (self.next(p, l), other.next(q, l));
                let id = match index.get(&key) {
                    Some(&id) => id,
                    None => {
                        let id = pairs.len() as u32;
                        if pairs.len() >= cap {
                            return Err(Error::ResourceLimit {
                                what: "product states".into(),
                                cap,
                            });
                        }
                        index.insert(key, id);
                        pairs.push(key);
                        id
                    }
                };
                delta.push(id);
            }
            i += 1;
        }
        let accepting = pairs
            .iter()
            .map(|&(p, q)| op.apply(self.is_accepting(p), other.is_accepting(q)))
            .collect();
        Ok(MultiTrackDfa {
            tracks: self.tracks.clone(),
            initial: 0,
            accepting,
            delta,
        })
    }

    /// Complement relative to the valid universe over the same tracks.
    pub fn complement(&self) -> Result<Self> {
        let flipped = MultiTrackDfa {
            tracks: self.tracks.clone(),
            initial: self.initial,
            accepting: self.accepting.iter().map(|&b| !b).collect(),
            delta: self.delta.clone(),
        };
        flipped.product(&Self::valid_universe(self.tracks.clone())?, BoolOp::And)
    }

    /// Existentially quantifies `track` away.
    ///
    /// The result is closed under leading zero columns: a word is accepted iff some
    /// zero-padded extension of it has a witness. Without this, witnesses needing more
    /// digits than the remaining tracks would be lost.
    pub fn project(&self, track: &str) -> Result<Self> {
        self.project_capped(track, DEFAULT_STATE_CAP)
    }

    pub fn project_capped(&self, track: &str, cap: usize) -> Result<Self> {
        let t = self.track_index(track)?;
        let nfa = Nfa::from_projection(self, t);
        nfa.determinize_minimal(cap)
    }

    /// Reorders and/or extends the tracks to `target`, which must contain every current
    /// track. New tracks are unconstrained apart from validity.
    pub fn align(&self, target: &[String]) -> Result<Self> {
        if target == self.tracks.as_slice() {
            return Ok(self.clone());
        }
        let positions: Vec<usize> = self
            .tracks
            .iter()
            .map(|t| {
                target
                    .iter()
                    .position(|x| x == t)
                    .ok_or_else(|| Error::SignatureMismatch {
                        left: self.tracks.clone(),
                        right: target.to_vec(),
                    })
            })
            .collect::<Result<_>>()?;
        let widened = positions.len() < target.len();
        let new_a = 1usize << target.len();
        if target.len() > MAX_TRACKS {
            return Err(Error::ResourceLimit {
                what: "tracks per automaton".into(),
                cap: MAX_TRACKS,
            });
        }
        let old_of: Vec<u32> = (0..new_a as u32)
            .map(|l| {
                positions
                    .iter()
                    .enumerate()
                    .fold(0u32, |acc, (old, &new)| acc | (((l >> new) & 1) << old))
            })
            .collect();
        let n = self.state_count();
        let mut delta = Vec::with_capacity(n * new_a);
        for q in 0..n as u32 {
            for &ol in &old_of {
                delta.push(self.next(q, ol));
            }
        }
        let moved = MultiTrackDfa {
            tracks: target.to_vec(),
            initial: self.initial,
            accepting: self.accepting.clone(),
            delta,
        };
        if widened {
            moved.product(&Self::valid_universe(target.to_vec())?, BoolOp::And)
        } else {
            Ok(moved)
        }
    }

    /// Renames tracks (names absent from `map` are kept) and re-sorts them into the
    /// canonical alphabetical order. Fails if two tracks would share a name.
    pub fn rename(&self, map: &[(String, String)]) -> Result<Self> {
        let renamed: Vec<String> = self
            .tracks
            .iter()
            .map(|t| {
                map.iter()
                    .find(|(from, _)| from == t)
                    .map_or_else(|| t.clone(), |(_, to)| to.clone())
            })
            .collect();
        for (i, t) in renamed.iter().enumerate() {
            if renamed[..i].contains(t) {
                return Err(Error::SignatureMismatch {
                    left: self.tracks.clone(),
                    right: renamed.clone(),
                });
            }
        }
        let with_names = MultiTrackDfa {
            tracks: renamed.clone(),
            ..self.clone()
        };
        let mut sorted = renamed;
        sorted.sort();
        with_names.align(&sorted)
    }

    /// Minimal complete automaton, states numbered breadth-first from the initial state.
    pub fn minimize(&self) -> Self {
        let a = self.alphabet_size();
        let reach = self.reachable_order();
        let mut local = vec![u32::MAX; self.state_count()];
        for (i, &q) in reach.iter().enumerate() {
            local[q as usize] = i as u32;
        }
        let mut delta = Vec::with_capacity(reach.len() * a);
        for &q in &reach {
            for l in 0..a as u32 {
                delta.push(local[self.next(q, l) as usize]);
            }
        }
        let seed: Vec<u64> = reach
            .iter()
            .map(|&q| self.accepting[q as usize] as u64)
            .collect();
        let (class, count) = partition::refine(a, &delta, &seed);

        // renumber classes breadth-first from the initial class
        let mut order = vec![u32::MAX; count];
        let mut repr = Vec::with_capacity(count);
        let mut queue = VecDeque::new();
        order[class[0] as usize] = 0;
        repr.push(0usize);
        queue.push_back(0usize);
        while let Some(q) = queue.pop_front() {
            for l in 0..a {
                let s = delta[q * a + l] as usize;
                let c = class[s] as usize;
                if order[c] == u32::MAX {
                    order[c] = repr.len() as u32;
                    repr.push(s);
                    queue.push_back(s);
                }
            }
        }
        let mut new_delta = Vec::with_capacity(count * a);
        let mut accepting = Vec::with_capacity(count);
        for &q in &repr {
            for l in 0..a {
                new_delta.push(order[class[delta[q * a + l] as usize] as usize]);
            }
            accepting.push(seed[q] == 1);
        }
        MultiTrackDfa {
            tracks: self.tracks.clone(),
            initial: 0,
            accepting,
            delta: new_delta,
        }
    }

    fn reachable_order(&self) -> Vec<u32> {
        let a = self.alphabet_size() as u32;
        let mut seen = vec![false; self.state_count()];
        let mut order = vec![self.initial];
        seen[self.initial as usize] = true;
        let mut i = 0;
        while i < order.len() {
            let q = order[i];
            for l in 0..a {
                let s = self.next(q, l);
                if !seen[s as usize] {
                    seen[s as usize] = true;
                    order.push(s);
                }
            }
            i += 1;
        }
        order
    }

    /// True when no accepting state is reachable.
    pub fn is_empty(&self) -> bool {
        !self.reachable_order().iter().any(|&q| self.is_accepting(q))
    }

    /// Language equality, via emptiness of the symmetric difference.
    pub fn equivalent(&self, other: &Self) -> Result<bool> {
        Ok(self
            .raw_product(other, BoolOp::Xor, DEFAULT_STATE_CAP)?
            .is_empty())
    }

    /// Enumerates every accepted word of exactly `len` letters.
    pub fn accepted_words(&self, len: usize) -> Vec<Vec<u32>> {
        let dead = self.dead_states();
        let mut out = Vec::new();
        let mut word = Vec::with_capacity(len);
        self.collect_words(self.initial, len, &dead, &mut word, &mut out);
        out
    }

    fn collect_words(
        &self,
        q: u32,
        left: usize,
        dead: &[bool],
        word: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if dead[q as usize] {
            return;
        }
        if left == 0 {
            if self.is_accepting(q) {
                out.push(word.clone());
            }
            return;
        }
        for l in 0..self.alphabet_size() as u32 {
            word.push(l);
            self.collect_words(self.next(q, l), left - 1, dead, word, out);
            word.pop();
        }
    }

    /// Splits a letter word into one digit row per track.
    pub fn letters_to_rows(&self, word: &[u32]) -> Vec<Vec<u8>> {
        (0..self.track_count())
            .map(|t| word.iter().map(|&l| ((l >> t) & 1) as u8).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeration::{parse_digits, zeck_decode};

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    /// One-track automaton recognising padded representations of `c`.
    fn constant(track: &str, c: u64) -> MultiTrackDfa {
        let digits = zeck_encode(c).digits().to_vec();
        let len = digits.len() as u32;
        MultiTrackDfa::from_fn(
            names(&[track]),
            digits.len() + 1,
            0,
            |q| q == len,
            |q, l| {
                if q == 0 && l == 0 {
                    Some(0)
                } else if q < len && l == digits[q as usize] as u32 {
                    Some(q + 1)
                } else {
                    None
                }
            },
        )
        .unwrap()
    }

    fn contains_11() -> MultiTrackDfa {
        // 0: no 1 yet / last 0, 1: last 1, 2: seen 11
        MultiTrackDfa::from_parts(
            names(&["x"]),
            0,
            vec![false, false, true],
            vec![0, 1, 0, 2, 2, 2],
        )
        .unwrap()
    }

    fn all_words(k: usize, len: usize) -> Vec<Vec<u32>> {
        let a = 1u32 << k;
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..a).map(move |l| {
                        let mut w = w.clone();
                        w.push(l);
                        w
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn valid_universe_examples() {
        let u1 = MultiTrackDfa::valid_universe(names(&["x"])).unwrap();
        assert!(u1.accepts_rows(&[parse_digits("1010").unwrap()]).unwrap());
        assert!(!u1.accepts_rows(&[parse_digits("0110").unwrap()]).unwrap());
        let u2 = MultiTrackDfa::valid_universe(names(&["x", "y"])).unwrap();
        assert!(u2.accepts_rows(&[vec![1, 0], vec![0, 1]]).unwrap());
        assert_eq!(u2.state_count(), 5);
    }

    #[test]
    fn product_idempotent_and_contradiction() {
        let a = constant("x", 4);
        assert!(a.product(&a, BoolOp::And).unwrap().equivalent(&a).unwrap());
        let contra = a.product(&a.complement().unwrap(), BoolOp::And).unwrap();
        assert!(contra.is_empty());
    }

    #[test]
    fn valid_and_contains_11_is_empty() {
        let valid = MultiTrackDfa::valid_universe(names(&["x"])).unwrap();
        let raw = contains_11();
        for len in 0..=8 {
            for w in all_words(1, len) {
                assert!(!(valid.accepts_letters(&w) && raw.accepts_letters(&w)));
            }
        }
        assert!(valid.product(&raw, BoolOp::And).unwrap().is_empty());
    }

    #[test]
    fn product_truth_tables() {
        let a = constant("x", 4);
        let b =
            MultiTrackDfa::from_fn(names(&["x"]), 2, 0, |q| q == 0, |q, l| Some(q ^ l)).unwrap();
        let u = MultiTrackDfa::valid_universe(names(&["x"])).unwrap();
        for op in [
            BoolOp::And,
            BoolOp::Or,
            BoolOp::Implies,
            BoolOp::Iff,
            BoolOp::Xor,
        ] {
            let p = a.product(&b, op).unwrap();
            for len in 0..=10 {
                for w in all_words(1, len) {
                    let expect = u.accepts_letters(&w)
                        && op.apply(a.accepts_letters(&w), b.accepts_letters(&w));
                    assert_eq!(p.accepts_letters(&w), expect, "{op:?} {w:?}");
                }
            }
        }
    }

    #[test]
    fn signature_mismatch() {
        let a = constant("x", 1);
        let b = constant("y", 1);
        assert!(matches!(
            a.product(&b, BoolOp::And),
            Err(Error::SignatureMismatch { .. })
        ));
    }

    #[test]
    fn complement_examples() {
        let u = MultiTrackDfa::valid_universe(names(&["x"])).unwrap();
        assert!(u.complement().unwrap().is_empty());
        let four = constant("x", 4);
        let c = four.complement().unwrap();
        assert!(c.complement().unwrap().equivalent(&four).unwrap());
        assert!(!c.accepts_rows(&[parse_digits("101").unwrap()]).unwrap());
        assert!(c.accepts_rows(&[parse_digits("1001").unwrap()]).unwrap());
        assert!(!c.accepts_rows(&[parse_digits("11").unwrap()]).unwrap());
        let union = c.product(&four, BoolOp::Or).unwrap();
        assert!(union.equivalent(&u).unwrap());
        assert!(c.product(&four, BoolOp::And).unwrap().is_empty());
    }

    #[test]
    fn project_needs_leading_zero_closure() {
        // x = 4, y = 1 with y unconstrained otherwise: projecting x must keep y = 1
        // even though y's representation is shorter than x's.
        let four = constant("x", 4).align(&names(&["x", "y"])).unwrap();
        let one = constant("y", 1).align(&names(&["x", "y"])).unwrap();
        let both = four.product(&one, BoolOp::And).unwrap();
        let p = both.project("x").unwrap();
        assert_eq!(p.tracks(), &names(&["y"]));
        assert!(p.accepts_values(&[1]).unwrap());
        assert!(p.accepts_rows(&[vec![0, 0, 0, 1]]).unwrap());
        assert!(!p.accepts_values(&[2]).unwrap());
        assert!(matches!(p.project("x"), Err(Error::UnknownTrack(_))));
    }

    #[test]
    fn project_to_sentence() {
        let four = constant("x", 4);
        let s = four.project("x").unwrap();
        assert_eq!(s.track_count(), 0);
        assert!(s.accepts_letters(&[]));
        let none = MultiTrackDfa::empty(names(&["x"]))
            .unwrap()
            .project("x")
            .unwrap();
        assert!(!none.accepts_letters(&[]));
    }

    #[test]
    fn align_and_rename() {
        let four = constant("x", 4);
        let wide = four.align(&names(&["a", "x"])).unwrap();
        assert!(wide.accepts_values(&[7, 4]).unwrap());
        assert!(!wide.accepts_values(&[7, 5]).unwrap());
        let renamed = wide.rename(&[("a".into(), "z".into())]).unwrap();
        assert_eq!(renamed.tracks(), &names(&["x", "z"]));
        assert!(renamed.accepts_values(&[4, 7]).unwrap());
        assert!(wide.rename(&[("a".into(), "x".into())]).is_err());
    }

    #[test]
    fn minimize_idempotent_and_dead_state() {
        let four = constant("x", 4);
        let m = four.minimize();
        assert_eq!(m, m.minimize());
        // "0*101" plus dead state
        assert_eq!(m.state_count(), 5);
        assert_eq!(m.live_state_count(), 4);
        for len in 0..8 {
            for w in m.accepted_words(len) {
                let rows = m.letters_to_rows(&w);
                assert_eq!(zeck_decode(&rows[0]).unwrap(), 4);
            }
        }
    }

    #[test]
    fn zero_padding_invariance() {
        let four = constant("x", 4).align(&names(&["x", "y"])).unwrap();
        for len in 0..7 {
            for w in four.accepted_words(len) {
                let mut padded = vec![0u32];
                padded.extend(&w);
                assert!(four.accepts_letters(&padded));
            }
        }
    }
}
