//! Base automata for atoms: addition, order, equality, constants and DFAO values.

use rustc_hash::FxHashMap;

use crate::automata::{BoolOp, Dfao, MultiTrackDfa};
use crate::error::Result;
use crate::numeration::zeck_encode;

/// Coordinates beyond this bound are provably dead for the adder (live states satisfy
/// `|p|, |q| <= 5`); anything outside is sent to the sink.
const ADDER_BOUND: i64 = 16;

/// `x + y = z` over the tracks `[x, y, z]` (distinct names).
///
/// Reading msd-first, the state is the pair `(E0, E1)` of the digit-difference word
/// `D = x + y - z` evaluated with weights shifted down by one (`E0`) and unshifted
/// (`E1`). Appending a column with difference `d` maps `(p, q)` to `(q + d, p + q + d)`
/// because `F(k+2) = F(k+1) + F(k)`. The word denotes a true sum iff `E1 = 0`.
pub fn adder(x: &str, y: &str, z: &str) -> Result<MultiTrackDfa> {
    adder_with_bound(x, y, z, ADDER_BOUND)
}

pub(crate) fn adder_with_bound(x: &str, y: &str, z: &str, bound: i64) -> Result<MultiTrackDfa> {
    let tracks = vec![x.to_string(), y.to_string(), z.to_string()];
    let mut index: FxHashMap<(i64, i64), u32> = FxHashMap::default();
    // state 0 is the sink
    let mut states: Vec<(i64, i64)> = vec![(i64::MAX, i64::MAX), (0, 0)];
    index.insert((0, 0), 1);
    let mut delta = vec![0u32; 8];
    let mut i = 1;
    while i < states.len() {
        let (p, q) = states[i];
        for letter in 0..8u32 {
            let d = (letter & 1) as i64 + ((letter >> 1) & 1) as i64 - ((letter >> 2) & 1) as i64;
            let next = (q + d, p + q + d);
            let id = if next.0.abs() > bound || next.1.abs() > bound {
                0
            } else {
                *index.entry(next).or_insert_with(|| {
                    states.push(next);
                    (states.len() - 1) as u32
                })
            };
            delta.push(id);
        }
        i += 1;
    }
    let accepting = states.iter().map(|&(_, q)| q == 0).collect();
    let raw = MultiTrackDfa::from_parts(tracks.clone(), 1, accepting, delta)?;
    raw.product(&MultiTrackDfa::valid_universe(tracks)?, BoolOp::And)
}

/// Checks the adder against integer addition for all `x, y <= bound`: `(x, y, x + y)`
/// must be accepted and nearby wrong sums rejected. Returns the first failing triple.
pub fn verify_adder(bound: u64) -> Result<Option<(u64, u64, u64)>> {
    let a = adder("x", "y", "z")?;
    for x in 0..=bound {
        for y in 0..=bound {
            let s = x + y;
            if !a.accepts_values(&[x, y, s])? {
                return Ok(Some((x, y, s)));
            }
            let wrong = [s.wrapping_sub(1), s + 1, s + 2, x.max(y)];
            for z in wrong.into_iter().filter(|&z| z != s && z <= 2 * bound + 2) {
                if a.accepts_values(&[x, y, z])? {
                    return Ok(Some((x, y, z)));
                }
            }
        }
    }
    Ok(None)
}

/// `x < y` (strict when `strict`, otherwise `x <= y`). Equal-length valid words compare
/// lexicographically exactly as their values do.
pub fn less(x: &str, y: &str, strict: bool) -> Result<MultiTrackDfa> {
    // 0: equal so far, 1: already smaller
    MultiTrackDfa::from_fn(
        vec![x.to_string(), y.to_string()],
        2,
        0,
        |q| q == 1 || !strict,
        |q, l| {
            let (dx, dy) = (l & 1, (l >> 1) & 1);
            match q {
                0 if dx == dy => Some(0),
                0 if dx < dy => Some(1),
                0 => None,
                _ => Some(1),
            }
        },
    )
}

/// `x = y`.
pub fn equal(x: &str, y: &str) -> Result<MultiTrackDfa> {
    MultiTrackDfa::from_fn(
        vec![x.to_string(), y.to_string()],
        1,
        0,
        |_| true,
        |_, l| (l == 0 || l == 3).then_some(0),
    )
}

/// `x = c`: the word `0* (c)_F`.
pub fn constant(x: &str, c: u64) -> Result<MultiTrackDfa> {
    let digits = zeck_encode(c).digits().to_vec();
    let len = digits.len() as u32;
    MultiTrackDfa::from_fn(
        vec![x.to_string()],
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
}

/// `S[x] = value` for the DFAO `S`. Leading zeros are skipped in a separate state so
/// the atom depends only on the value of `x`, even for machines whose initial state
/// has no zero self-loop.
pub fn dfao_value(m: &Dfao, x: &str, value: u64) -> Result<MultiTrackDfa> {
    let n = m.state_count() as u32;
    let lead = n;
    MultiTrackDfa::from_fn(
        vec![x.to_string()],
        n as usize + 1,
        lead,
        |q| {
            let state = if q == lead { m.initial() } else { q };
            m.output(state) == value
        },
        |q, l| {
            Some(match (q == lead, l) {
                (true, 0) => lead,
                (true, _) => m.next(m.initial(), 1),
                (false, d) => m.next(q, d as u8),
            })
        },
    )
}
