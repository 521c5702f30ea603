//! Zeckendorf (Fibonacci) numeration.
//!
//! A word `w` of length `t` denotes `sum w[i] * F(t + 2 - i)` (1-based `i`), so the
//! last digit weighs `F(2) = 1`, the one before it `F(3) = 2`, and so on. Canonical
//! words start with `1` and never contain `11`; zero is the empty word.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest index whose Fibonacci number fits in a `u64`.
pub const MAX_FIB_INDEX: u32 = 93;

/// Returns `F(k)` with `F(0) = 0` and `F(1) = 1`.
pub fn fib(k: u32) -> Result<u64> {
    if k == 0 {
        return Ok(0);
    }
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 1..k {
        let next = a
            .checked_add(b)
            .ok_or_else(|| Error::Overflow(format!("F({k}) does not fit in 64 bits")))?;
        a = b;
        b = next;
    }
    Ok(b)
}

/// `F(2), F(3), ...` up to the largest value that fits in a `u64`.
fn weights() -> &'static [u64] {
    use std::sync::OnceLock;
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = vec![1u64, 2];
        while let Some(next) = t[t.len() - 1].checked_add(t[t.len() - 2]) {
            t.push(next);
        }
        t
    })
}

/// A Zeckendorf digit word, most significant digit first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ZeckRepr(Vec<u8>);

impl ZeckRepr {
    /// Wraps an arbitrary digit word after checking it contains only `0`/`1` and no `11`.
    /// Leading zeros are kept.
    pub fn from_digits(digits: Vec<u8>) -> Result<Self> {
        check_digits(&digits)?;
        Ok(ZeckRepr(digits))
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when the word has no leading zero.
    pub fn is_canonical(&self) -> bool {
        self.0.first().is_none_or(|&d| d == 1)
    }

    /// The word left-padded with zeros to `len` digits (never truncates).
    pub fn padded(&self, len: usize) -> Vec<u8> {
        let mut out = vec![0u8; len.saturating_sub(self.0.len())];
        out.extend_from_slice(&self.0);
        out
    }

    pub fn value(&self) -> Result<u64> {
        zeck_decode(&self.0)
    }
}

impl fmt::Display for ZeckRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ZeckRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZeckRepr(\"{self}\")")
    }
}

/// Radix order: shorter words first, then lexicographic. On canonical words this
/// coincides with numeric order.
impl Ord for ZeckRepr {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ZeckRepr {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn check_digits(w: &[u8]) -> Result<()> {
    if let Some(pos) = w.iter().position(|&d| d > 1) {
        return Err(Error::InvalidRepresentation(format!(
            "digit {} at position {pos} is not binary",
            w[pos]
        )));
    }
    if let Some(pos) = w.windows(2).position(|p| p == [1, 1]) {
        return Err(Error::InvalidRepresentation(format!(
            "consecutive 1 digits at position {pos}"
        )));
    }
    Ok(())
}

/// Greedy Zeckendorf encoding: repeatedly take the largest Fibonacci number not
/// exceeding the remainder.
pub fn zeck_encode(n: u64) -> ZeckRepr {
    if n == 0 {
        return ZeckRepr(Vec::new());
    }
    let w = weights();
    let top = w.iter().rposition(|&f| f <= n).expect("F(2) = 1 <= n");
    let mut digits = Vec::with_capacity(top + 1);
    let mut rest = n;
    for &f in w[..=top].iter().rev() {
        if f <= rest {
            digits.push(1);
            rest -= f;
        } else {
            digits.push(0);
        }
    }
    debug_assert_eq!(rest, 0);
    ZeckRepr(digits)
}

/// Decodes a digit word; leading zeros are ignored, `11` is rejected.
pub fn zeck_decode(w: &[u8]) -> Result<u64> {
    check_digits(w)?;
    let start = w.iter().position(|&d| d == 1).unwrap_or(w.len());
    let w = &w[start..];
    let table = weights();
    if w.len() > table.len() {
        return Err(Error::Overflow(format!(
            "a {}-digit word does not fit in 64 bits",
            w.len()
        )));
    }
    w.iter()
        .rev()
        .zip(table)
        .filter(|(&d, _)| d == 1)
        .try_fold(0u64, |acc, (_, &f)| {
            acc.checked_add(f)
                .ok_or_else(|| Error::Overflow("decoded value does not fit in 64 bits".into()))
        })
}

/// Parses a word written as a string of `0`/`1` characters.
pub fn parse_digits(s: &str) -> Result<Vec<u8>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(Error::InvalidRepresentation(format!(
                "unexpected character `{other}`"
            ))),
        })
        .collect()
}

/// The Fibonacci-Thue-Morse bit: parity of the number of 1 digits of `(n)_F`.
pub fn ftm_value(n: u64) -> u8 {
    (zeck_encode(n).digits().iter().filter(|&&d| d == 1).count() % 2) as u8
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fib_values() {
        assert_eq!(fib(0).unwrap(), 0);
        assert_eq!(fib(1).unwrap(), 1);
        assert_eq!(fib(7).unwrap(), 13);
        assert_eq!(fib(MAX_FIB_INDEX).unwrap(), 12_200_160_415_121_876_738);
        assert!(matches!(fib(MAX_FIB_INDEX + 1), Err(Error::Overflow(_))));
    }

    #[test]
    fn encode_examples() {
        assert_eq!(zeck_encode(0).to_string(), "");
        assert_eq!(zeck_encode(4).to_string(), "101");
        assert_eq!(zeck_encode(19).to_string(), "101001");
        assert_eq!(zeck_encode(u64::MAX).value().unwrap(), u64::MAX);
    }

    #[test]
    fn decode_examples() {
        assert_eq!(zeck_decode(&[]).unwrap(), 0);
        assert_eq!(zeck_decode(&parse_digits("00101").unwrap()).unwrap(), 4);
        assert!(matches!(
            zeck_decode(&[1, 1]),
            Err(Error::InvalidRepresentation(_))
        ));
        assert!(zeck_decode(&[2]).is_err());
        // 94 digits "1010...": exceeds 64 bits
        let long: Vec<u8> = (0..94).map(|i| (i % 2 == 0) as u8).collect();
        assert!(matches!(zeck_decode(&long), Err(Error::Overflow(_))));
    }

    #[test]
    fn ftm_table() {
        let expected = [0, 1, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 1];
        let got: Vec<u8> = (0..20).map(ftm_value).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn repr_helpers() {
        let r = ZeckRepr::from_digits(vec![0, 1, 0]).unwrap();
        assert!(!r.is_canonical());
        assert_eq!(r.value().unwrap(), 2);
        assert_eq!(zeck_encode(4).padded(5), vec![0, 0, 1, 0, 1]);
        assert!(ZeckRepr::from_digits(vec![1, 1]).is_err());
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn round_trip(n in any::<u64>()) {
                let r = zeck_encode(n);
                prop_assert!(r.is_canonical());
                prop_assert!(!r.digits().windows(2).any(|p| p == [1, 1]));
                prop_assert_eq!(r.value().unwrap(), n);
            }

            #[test]
            fn order_isomorphism(a in any::<u64>(), b in any::<u64>()) {
                prop_assert_eq!(a.cmp(&b), zeck_encode(a).cmp(&zeck_encode(b)));
            }
        }
    }
}
