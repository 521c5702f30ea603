//! Linear representations `n -> v * gamma((n)_F) * w` read off two-track automata,
//! and the semigroup trick that turns a finite one into a DFAO.

use std::fmt::Write;

use rustc_hash::FxHashMap;

use crate::automata::{Dfao, MultiTrackDfa};
use crate::error::{Error, Result};
use crate::numeration::zeck_encode;

/// Default bound on distinct vectors explored by [`LinearRepresentation::semigroup_trick`].
pub const DEFAULT_VECTOR_CAP: usize = 100_000;

/// Row vector `v`, digit matrices `gamma[0]`, `gamma[1]` (row-major, `rank x rank`)
/// and column vector `w`, all with natural entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRepresentation {
    rank: usize,
    v: Vec<u64>,
    gamma: [Vec<u64>; 2],
    w: Vec<u64>,
}

fn overflow() -> Error {
    Error::Overflow("linear representation arithmetic".into())
}

fn dot(a: &[u64], b: &[u64]) -> Result<u64> {
    a.iter().zip(b).try_fold(0u64, |acc, (&x, &y)| {
        x.checked_mul(y)
            .and_then(|p| acc.checked_add(p))
            .ok_or_else(overflow)
    })
}

impl LinearRepresentation {
    pub fn new(v: Vec<u64>, gamma0: Vec<u64>, gamma1: Vec<u64>, w: Vec<u64>) -> Result<Self> {
        let rank = v.len();
        if w.len() != rank || gamma0.len() != rank * rank || gamma1.len() != rank * rank {
            return Err(Error::Format {
                line: 0,
                message: format!("dimensions disagree for rank {rank}"),
            });
        }
        Ok(LinearRepresentation {
            rank,
            v,
            gamma: [gamma0, gamma1],
            w,
        })
    }

    /// Counts, for each `n`, the words `i` of the same padded length with `(i, n)`
    /// accepted. States of `a` that cannot reach acceptance are dropped, so the rank is
    /// the number of live states.
    pub fn extract(a: &MultiTrackDfa, index_track: &str) -> Result<Self> {
        if a.track_count() != 2 {
            return Err(Error::Arity {
                name: "linear representation source".into(),
                expected: 2,
                got: a.track_count(),
            });
        }
        let t = a.track_index(index_track)?;
        let dead = a.dead_states();
        let mut id = vec![usize::MAX; a.state_count()];
        let mut rank = 0;
        for q in 0..a.state_count() {
            if !dead[q] {
                id[q] = rank;
                rank += 1;
            }
        }
        let mut v = vec![0u64; rank];
        let mut w = vec![0u64; rank];
        let mut gamma = [vec![0u64; rank * rank], vec![0u64; rank * rank]];
        for q in 0..a.state_count() {
            if dead[q] {
                continue;
            }
            let p = id[q];
            if q as u32 == a.initial() {
                v[p] = 1;
            }
            if a.is_accepting(q as u32) {
                w[p] = 1;
            }
            for letter in 0..4u32 {
                let s = a.next(q as u32, letter) as usize;
                if dead[s] {
                    continue;
                }
                let digit = ((letter >> t) & 1) as usize;
                gamma[digit][p * rank + id[s]] += 1;
            }
        }
        Ok(LinearRepresentation { rank, v, gamma, w })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn v(&self) -> &[u64] {
        &self.v
    }

    pub fn w(&self) -> &[u64] {
        &self.w
    }

    pub fn gamma(&self, digit: u8) -> &[u64] {
        &self.gamma[digit as usize & 1]
    }

    /// `u * gamma(digit)`.
    pub fn step(&self, u: &[u64], digit: u8) -> Result<Vec<u64>> {
        let m = &self.gamma[digit as usize & 1];
        let r = self.rank;
        let mut out = vec![0u64; r];
        for (i, &ui) in u.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            let row = &m[i * r..(i + 1) * r];
            for (o, &mij) in out.iter_mut().zip(row) {
                if mij != 0 {
                    *o = ui
                        .checked_mul(mij)
                        .and_then(|p| o.checked_add(p))
                        .ok_or_else(overflow)?;
                }
            }
        }
        Ok(out)
    }

    /// Replaces `v` by `v * gamma(0)^pad`, letting the counted variable use `pad` more
    /// digits than the index.
    pub fn adjust_leading_zeros(&self, pad: usize) -> Result<Self> {
        let mut v = self.v.clone();
        for _ in 0..pad {
            v = self.step(&v, 0)?;
        }
        Ok(LinearRepresentation { v, ..self.clone() })
    }

    pub fn evaluate_word(&self, word: &[u8]) -> Result<u64> {
        let u = word
            .iter()
            .try_fold(self.v.clone(), |u, &d| self.step(&u, d))?;
        dot(&u, &self.w)
    }

    pub fn evaluate(&self, n: u64) -> Result<u64> {
        self.evaluate_word(zeck_encode(n).digits())
    }

    /// Breadth-first closure of `{ v * gamma(x) }` over digit words `x`, read as a DFAO
    /// whose output at `u` is `u * w`. Words containing `11` land on whatever vector
    /// the matrices give them (the zero vector for representations read off automata
    /// over valid words), which then serves as the junk sink.
    pub fn semigroup_trick(&self, cap: usize) -> Result<Dfao> {
        self.semigroup_trick_from(&[], cap)
    }

    /// Like [`semigroup_trick`](Self::semigroup_trick), but the closure is explored from
    /// the unadjusted `v` and the resulting DFAO starts at the state of `v * gamma(lead)`.
    /// Its language equals that of the closure of the representation adjusted by
    /// `lead`, while its state set also covers vectors reachable only without the prefix.
    pub fn semigroup_trick_from(&self, lead: &[u8], cap: usize) -> Result<Dfao> {
        let mut index: FxHashMap<Vec<u64>, u32> = FxHashMap::default();
        let mut vectors = vec![self.v.clone()];
        index.insert(self.v.clone(), 0);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < vectors.len() {
            let mut row = [0u32; 2];
            for d in 0..2u8 {
                let next = self.step(&vectors[i], d)?;
                row[d as usize] = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        if vectors.len() >= cap {
                            return Err(Error::FinitenessUndetermined(cap));
                        }
                        let id = vectors.len() as u32;
                        index.insert(next.clone(), id);
                        vectors.push(next);
                        id
                    }
                };
            }
            delta.push(row);
            i += 1;
        }
        let initial = lead
            .iter()
            .fold(0u32, |q, &d| delta[q as usize][d as usize & 1]);
        let outputs = vectors
            .iter()
            .map(|u| dot(u, &self.w))
            .collect::<Result<_>>()?;
        Dfao::from_parts(initial, delta, outputs)
    }

    /// Plain text: the rank, then `v`, `gamma(0)` rows, `gamma(1)` rows and `w`, one
    /// row of space-separated integers per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let row = |xs: &[u64]| xs.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
        writeln!(out, "{}", self.rank).unwrap();
        writeln!(out, "{}", row(&self.v)).unwrap();
        for m in &self.gamma {
            for r in 0..self.rank {
                writeln!(out, "{}", row(&m[r * self.rank..(r + 1) * self.rank])).unwrap();
            }
        }
        writeln!(out, "{}", row(&self.w)).unwrap();
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let mut next_row = |want: usize| -> Result<Vec<u64>> {
            let (no, line) = lines.next().ok_or_else(|| Error::Format {
                line: 0,
                message: "unexpected end of file".into(),
            })?;
            let row: Vec<u64> = line
                .split_whitespace()
                .map(|t| t.parse())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Format {
                    line: no + 1,
                    message: "expected integers".into(),
                })?;
            if want != usize::MAX && row.len() != want {
                return Err(Error::Format {
                    line: no + 1,
                    message: format!("expected {want} entries, found {}", row.len()),
                });
            }
            Ok(row)
        };
        let rank = next_row(1)?[0] as usize;
        let v = next_row(rank)?;
        let mut gamma = [Vec::new(), Vec::new()];
        for m in &mut gamma {
            for _ in 0..rank {
                m.extend(next_row(rank)?);
            }
        }
        let w = next_row(rank)?;
        let [g0, g1] = gamma;
        Self::new(v, g0, g1, w)
    }
}
