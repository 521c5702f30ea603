//! Deterministic finite automata with output over the digits `{0,1}`.

use std::collections::VecDeque;

use super::partition;
use crate::error::{Error, Result};
use crate::numeration::zeck_encode;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfao {
    initial: u32,
    delta: Vec<[u32; 2]>,
    outputs: Vec<u64>,
}

impl Dfao {
    pub fn from_parts(initial: u32, delta: Vec<[u32; 2]>, outputs: Vec<u64>) -> Result<Self> {
        let n = outputs.len();
        if n == 0 || delta.len() != n || initial as usize >= n {
            return Err(Error::Format {
                line: 0,
                message: "inconsistent DFAO dimensions".into(),
            });
        }
        if delta.iter().flatten().any(|&t| t as usize >= n) {
            return Err(Error::Format {
                line: 0,
                message: "transition to a nonexistent state".into(),
            });
        }
        Ok(Dfao {
            initial,
            delta,
            outputs,
        })
    }

    /// The Fibonacci-Thue-Morse DFAO: state tracks (digit-sum parity, last digit).
    /// State 4 is the sink for words containing `11`.
    pub fn fibonacci_thue_morse() -> Self {
        Dfao {
            initial: 0,
            delta: vec![[0, 1], [2, 4], [2, 3], [0, 4], [4, 4]],
            outputs: vec![0, 1, 1, 0, 0],
        }
    }

    pub fn initial(&self) -> u32 {
        self.initial
    }

    pub fn state_count(&self) -> usize {
        self.outputs.len()
    }

    pub fn output(&self, q: u32) -> u64 {
        self.outputs[q as usize]
    }

    pub fn outputs(&self) -> &[u64] {
        &self.outputs
    }

    #[inline]
    pub fn next(&self, q: u32, digit: u8) -> u32 {
        self.delta[q as usize][digit as usize & 1]
    }

    /// Distinct output values, ascending.
    pub fn output_alphabet(&self) -> Vec<u64> {
        let mut v = self.outputs.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn run_word(&self, word: &[u8]) -> u64 {
        let q = word.iter().fold(self.initial, |q, &d| self.next(q, d));
        self.output(q)
    }

    /// Output on the canonical representation of `n`.
    pub fn run(&self, n: u64) -> u64 {
        self.run_word(zeck_encode(n).digits())
    }

    /// States reachable from the initial state by words without `11`.
    pub fn valid_reachable(&self) -> Vec<bool> {
        let n = self.state_count();
        // seen[q][last digit]
        let mut seen = vec![[false; 2]; n];
        let mut stack = vec![(self.initial, 0u8)];
        seen[self.initial as usize][0] = true;
        while let Some((q, last)) = stack.pop() {
            let digits: &[u8] = if last == 1 { &[0] } else { &[0, 1] };
            for &d in digits {
                let s = self.next(q, d);
                if !seen[s as usize][d as usize] {
                    seen[s as usize][d as usize] = true;
                    stack.push((s, d));
                }
            }
        }
        seen.into_iter().map(|[a, b]| a || b).collect()
    }

    /// Number of states reached by canonical inputs; the sink that only junk words reach
    /// is not counted.
    pub fn canonical_state_count(&self) -> usize {
        self.valid_reachable().into_iter().filter(|&r| r).count()
    }

    /// Absorbing output-0 states no valid word reaches. Such a state stands for the
    /// transitions a partial machine leaves undefined.
    pub fn sink_states(&self) -> Vec<bool> {
        let reach = self.valid_reachable();
        (0..self.state_count())
            .map(|q| !reach[q] && self.outputs[q] == 0 && self.delta[q] == [q as u32, q as u32])
            .collect()
    }

    fn reachable_bfs(&self) -> Vec<u32> {
        let mut seen = vec![false; self.state_count()];
        let mut order = vec![self.initial];
        seen[self.initial as usize] = true;
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            for d in 0..2 {
                let s = self.next(q, d);
                if !seen[s as usize] {
                    seen[s as usize] = true;
                    order.push(s);
                    queue.push_back(s);
                }
            }
        }
        order
    }

    /// Reachable part renumbered breadth-first (digit 0 before digit 1), initial state 0.
    pub fn canonical(&self) -> Self {
        let order = self.reachable_bfs();
        let mut id = vec![u32::MAX; self.state_count()];
        for (i, &q) in order.iter().enumerate() {
            id[q as usize] = i as u32;
        }
        Dfao {
            initial: 0,
            delta: order
                .iter()
                .map(|&q| {
                    let [a, b] = self.delta[q as usize];
                    [id[a as usize], id[b as usize]]
                })
                .collect(),
            outputs: order.iter().map(|&q| self.outputs[q as usize]).collect(),
        }
    }

    /// Minimal DFAO with the same output on every word, by Moore refinement seeded
    /// with the output values. Canonically numbered.
    pub fn minimize(&self) -> Self {
        let c = self.canonical();
        let flat: Vec<u32> = c.delta.iter().flatten().copied().collect();
        let (class, count) = partition::refine(2, &flat, &c.outputs);
        let mut delta = vec![[0u32; 2]; count];
        let mut outputs = vec![0u64; count];
        for q in 0..c.state_count() {
            let k = class[q] as usize;
            delta[k] = [class[flat[2 * q] as usize], class[flat[2 * q + 1] as usize]];
            outputs[k] = c.outputs[q];
        }
        Dfao {
            initial: class[0],
            delta,
            outputs,
        }
        .canonical()
    }
}

/// Isomorphism of two DFAOs, by comparing breadth-first canonical numberings of their
/// reachable parts. Both inputs should be minimal for this to decide equivalence.
pub fn iso_check(a: &Dfao, b: &Dfao) -> bool {
    a.canonical() == b.canonical()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ftm_dfao_matches_definition() {
        let m = Dfao::fibonacci_thue_morse();
        for n in 0..2000 {
            assert_eq!(m.run(n) as u8, crate::numeration::ftm_value(n));
        }
        assert_eq!(m.canonical_state_count(), 4);
        assert_eq!(m.minimize().state_count(), 5);
    }

    #[test]
    fn identical_states_collapse() {
        let m = Dfao::from_parts(0, vec![[1, 1], [0, 0]], vec![3, 3]).unwrap();
        assert_eq!(m.minimize().state_count(), 1);
    }

    #[test]
    fn iso_under_relabeling() {
        let m = Dfao::fibonacci_thue_morse();
        assert!(iso_check(&m, &m));
        // reverse the state numbering
        let n = m.state_count() as u32;
        let flip = |q: u32| n - 1 - q;
        let mut delta = vec![[0; 2]; n as usize];
        let mut outputs = vec![0; n as usize];
        for q in 0..n {
            let [a, b] = m.delta[q as usize];
            delta[flip(q) as usize] = [flip(a), flip(b)];
            outputs[flip(q) as usize] = m.outputs[q as usize];
        }
        let permuted = Dfao::from_parts(flip(m.initial), delta, outputs).unwrap();
        assert_ne!(permuted, m);
        assert!(iso_check(&permuted, &m));
        let other = Dfao::from_parts(0, vec![[0, 0]], vec![0]).unwrap();
        assert!(!iso_check(&other, &m));
    }

    #[test]
    fn sink_detection() {
        let m = Dfao::fibonacci_thue_morse();
        assert_eq!(m.sink_states(), vec![false, false, false, false, true]);
    }
}
