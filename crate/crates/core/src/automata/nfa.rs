//! Nondeterministic automata, used as the intermediate form for projection and regex
//! compilation, and the subset construction that turns them back into DFAs.

use rustc_hash::FxHashMap;

use super::dfa::MultiTrackDfa;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Nfa {
    tracks: Vec<String>,
    initial: Vec<u32>,
    accepting: Vec<bool>,
    /// `edges[q]`: (letter, target) pairs.
    edges: Vec<Vec<(u32, u32)>>,
    epsilon: Vec<Vec<u32>>,
}

impl Nfa {
    pub fn new(tracks: Vec<String>) -> Self {
        Nfa {
            tracks,
            initial: Vec::new(),
            accepting: Vec::new(),
            edges: Vec::new(),
            epsilon: Vec::new(),
        }
    }

    pub fn tracks(&self) -> &[String] {
        &self.tracks
    }

    pub fn add_state(&mut self, accepting: bool) -> u32 {
        self.accepting.push(accepting);
        self.edges.push(Vec::new());
        self.epsilon.push(Vec::new());
        (self.accepting.len() - 1) as u32
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn set_accepting(&mut self, q: u32, accepting: bool) {
        self.accepting[q as usize] = accepting;
    }

    pub fn add_initial(&mut self, q: u32) {
        if !self.initial.contains(&q) {
            self.initial.push(q);
        }
    }

    pub fn add_edge(&mut self, from: u32, letter: u32, to: u32) {
        self.edges[from as usize].push((letter, to));
    }

    pub fn add_epsilon(&mut self, from: u32, to: u32) {
        self.epsilon[from as usize].push(to);
    }

    /// Views a DFA as an NFA (same states and transitions, single initial state).
    pub fn from_dfa(dfa: &MultiTrackDfa) -> Self {
        let mut nfa = Nfa::new(dfa.tracks().to_vec());
        for q in 0..dfa.state_count() as u32 {
            nfa.add_state(dfa.is_accepting(q));
        }
        for q in 0..dfa.state_count() as u32 {
            for l in 0..dfa.alphabet_size() as u32 {
                nfa.add_edge(q, l, dfa.next(q, l));
            }
        }
        nfa.add_initial(dfa.initial());
        nfa
    }

    /// Minimal DFA for the language, by double reversal (Brzozowski). Quantified
    /// automata tend to have far fewer reachable subsets when read backwards, which
    /// keeps this cheap where a forward subset construction explodes; if the reversed
    /// pass exceeds `cap` the forward construction is tried instead.
    pub fn determinize_minimal(&self, cap: usize) -> Result<MultiTrackDfa> {
        let backward = self
            .reversed()
            .determinize(cap)
            .and_then(|r| Nfa::from_dfa(&r).reversed().determinize(cap));
        match backward {
            Ok(d) => Ok(d.minimize()),
            Err(Error::ResourceLimit { .. }) => Ok(self.determinize(cap)?.minimize()),
            Err(e) => Err(e),
        }
    }

    /// The automaton of the reversed language.
    pub fn reversed(&self) -> Self {
        let n = self.state_count();
        let mut rev = Nfa::new(self.tracks.clone());
        let mut is_initial = vec![false; n];
        for &q in &self.initial {
            is_initial[q as usize] = true;
        }
        for &init in &is_initial {
            rev.add_state(init);
        }
        for q in 0..n {
            for &(l, s) in &self.edges[q] {
                rev.add_edge(s, l, q as u32);
            }
            for &s in &self.epsilon[q] {
                rev.add_epsilon(s, q as u32);
            }
            if self.accepting[q] {
                rev.add_initial(q as u32);
            }
        }
        rev
    }

    /// Drops track `t` from `dfa`: each remaining letter may be read with either digit
    /// on the dropped track. The initial set is closed under zero columns on the
    /// remaining tracks, which gives the leading-zero closure.
    pub(crate) fn from_projection(dfa: &MultiTrackDfa, t: usize) -> Self {
        let dead = dfa.dead_states();
        let mut tracks = dfa.tracks().to_vec();
        tracks.remove(t);
        let mut nfa = Nfa::new(tracks);
        for q in 0..dfa.state_count() as u32 {
            nfa.add_state(dfa.is_accepting(q));
        }
        let low = (1u32 << t) - 1;
        let reduced = 1u32 << (dfa.track_count() - 1);
        for q in 0..dfa.state_count() as u32 {
            if dead[q as usize] {
                continue;
            }
            for l in 0..reduced {
                let base = (l & low) | ((l & !low) << 1);
                for bit in [0, 1u32 << t] {
                    let s = dfa.next(q, base | bit);
                    if !dead[s as usize] {
                        nfa.add_edge(q, l, s);
                    }
                }
            }
        }
        // zero-column closure of the initial state
        let mut init = vec![dfa.initial()];
        let mut seen = vec![false; dfa.state_count()];
        seen[dfa.initial() as usize] = true;
        let mut i = 0;
        while i < init.len() {
            let q = init[i];
            for &(l, s) in &nfa.edges[q as usize] {
                if l == 0 && !seen[s as usize] {
                    seen[s as usize] = true;
                    init.push(s);
                }
            }
            i += 1;
        }
        for q in init {
            if !dead[q as usize] {
                nfa.add_initial(q);
            }
        }
        nfa
    }

    fn close(&self, set: &mut Vec<u32>, mark: &mut [bool]) {
        let mut i = 0;
        while i < set.len() {
            let q = set[i];
            for &s in &self.epsilon[q as usize] {
                if !mark[s as usize] {
                    mark[s as usize] = true;
                    set.push(s);
                }
            }
            i += 1;
        }
        for &q in set.iter() {
            mark[q as usize] = false;
        }
        set.sort_unstable();
    }

    /// Subset construction restricted to reachable subsets. The result is complete; the
    /// empty subset plays the dead state.
    #[allow(clippy::needless_range_loop)] // `l` is a letter, not just an index
    pub fn determinize(&self, cap: usize) -> Result<MultiTrackDfa> {
        let a = 1usize << self.tracks.len();
        let n = self.state_count();
        let mut mark = vec![false; n];
        // group each state's edges by letter once
        let mut by_letter: Vec<Vec<Vec<u32>>> = Vec::with_capacity(n);
        for q in 0..n {
            let mut table = vec![Vec::new(); a];
            for &(l, s) in &self.edges[q] {
                table[l as usize].push(s);
            }
            by_letter.push(table);
        }

        let mut start = Vec::new();
        for &q in &self.initial {
            if !mark[q as usize] {
                mark[q as usize] = true;
                start.push(q);
            }
        }
        self.close(&mut start, &mut mark);

        let mut index: FxHashMap<Vec<u32>, u32> = FxHashMap::default();
        let mut subsets = vec![start.clone()];
        index.insert(start, 0);
        let mut delta: Vec<u32> = Vec::new();
        let mut i = 0;
        while i < subsets.len() {
            for l in 0..a {
                let mut next = Vec::new();
                for &q in &subsets[i] {
                    for &s in &by_letter[q as usize][l] {
                        if !mark[s as usize] {
                            mark[s as usize] = true;
                            next.push(s);
                        }
                    }
                }
                self.close(&mut next, &mut mark);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        if subsets.len() >= cap {
                            return Err(Error::ResourceLimit {
                                what: "subset construction states".into(),
                                cap,
                            });
                        }
                        let id = subsets.len() as u32;
                        index.insert(next.clone(), id);
                        subsets.push(next);
                        id
                    }
                };
                delta.push(id);
            }
            i += 1;
        }
        let accepting = subsets
            .iter()
            .map(|s| s.iter().any(|&q| self.accepting[q as usize]))
            .collect();
        MultiTrackDfa::from_parts(self.tracks.clone(), 0, accepting, delta)
    }
}
