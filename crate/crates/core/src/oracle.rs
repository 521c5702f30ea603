//! Brute-force factor statistics of the Fibonacci-Thue-Morse word, computed from a
//! finite prefix and independent of the automata code.
//!
//! Windows of length `n` are named exactly, not hashed: the name of the window at `i`
//! of length `n + 1` is the dense renumbering of the pair (name of length-`n` window at
//! `i`, letter at `i + n`). One level therefore costs `O(L)` and no two distinct factors
//! can ever share a name.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::numeration::ftm_value;

/// Default prefix length used by [`Oracle::new`].
pub const DEFAULT_PREFIX_LEN: usize = 1 << 20;

/// `ftm[0..L)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequencePrefix {
    bits: Vec<u8>,
}

impl SequencePrefix {
    pub fn generate(len: usize) -> Self {
        SequencePrefix {
            bits: (0..len as u64).map(ftm_value).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }
}

/// `rho(n)` and the right-special count `d(n)` for `n <= max_len`, as seen in a prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorTable {
    rho: Vec<u64>,
    special: Vec<u64>,
}

impl FactorTable {
    /// Counts factors of the prefix. `rho` is filled up to `max_len + 1` so the
    /// difference identity can be checked at every reported length.
    pub fn build(prefix: &SequencePrefix, max_len: usize) -> Self {
        let bits = prefix.bits();
        let l = bits.len();
        let mut rho = vec![1u64];
        let mut special = Vec::new();
        // names of the windows of the current length, one per start position
        let mut ids = vec![0u32; l + 1];
        let mut count = 1usize;
        let mut table: Vec<u32> = Vec::new();
        for n in 0..=max_len {
            if n >= l {
                rho.push(0);
                special.push(0);
                continue;
            }
            table.clear();
            table.resize(2 * count, u32::MAX);
            let mut next = 0u32;
            for i in 0..l - n {
                let key = ids[i] as usize * 2 + bits[i + n] as usize;
                if table[key] == u32::MAX {
                    table[key] = next;
                    next += 1;
                }
                ids[i] = table[key];
            }
            ids.truncate(l - n);
            let rs = (0..count)
                .filter(|&x| table[2 * x] != u32::MAX && table[2 * x + 1] != u32::MAX)
                .count();
            special.push(rs as u64);
            count = next as usize;
            rho.push(count as u64);
        }
        FactorTable { rho, special }
    }

    pub fn max_len(&self) -> usize {
        self.special.len() - 1
    }

    pub fn complexity(&self, n: usize) -> u64 {
        self.rho[n]
    }

    pub fn right_special_count(&self, n: usize) -> u64 {
        self.special[n]
    }
}

/// Factor statistics certified by agreement between prefixes of length `L` and `2L`.
#[derive(Debug, Clone)]
pub struct Oracle {
    prefix: SequencePrefix,
    table: FactorTable,
    /// Every length `< bound` agrees between the two prefixes.
    bound: usize,
}

impl Oracle {
    /// Oracle over the default prefix for factor lengths up to `max_len`.
    pub fn new(max_len: usize) -> Self {
        Self::with_prefix_len(DEFAULT_PREFIX_LEN, max_len)
    }

    pub fn with_prefix_len(len: usize, max_len: usize) -> Self {
        let long = SequencePrefix::generate(2 * len);
        let prefix = SequencePrefix {
            bits: long.bits[..len].to_vec(),
        };
        let table = FactorTable::build(&prefix, max_len);
        let doubled = FactorTable::build(&long, max_len);
        let agrees = |n: usize| {
            table.complexity(n) == doubled.complexity(n)
                && table.complexity(n + 1) == doubled.complexity(n + 1)
                && table.right_special_count(n) == doubled.right_special_count(n)
        };
        let bound = (0..=max_len).take_while(|&n| agrees(n)).count();
        Oracle {
            prefix,
            table,
            bound,
        }
    }

    pub fn prefix(&self) -> &SequencePrefix {
        &self.prefix
    }

    /// Statistics are reported exactly for the factor lengths below this bound.
    pub fn stability_bound(&self) -> usize {
        self.bound
    }

    fn check(&self, n: usize) -> Result<()> {
        if n >= self.bound {
            return Err(Error::Unstable {
                n,
                bound: self.bound,
            });
        }
        Ok(())
    }

    /// `rho(n)`, the number of distinct factors of length `n`. Certified up to and
    /// including the bound, since agreement at `n - 1` covers `rho(n)`.
    pub fn complexity(&self, n: usize) -> Result<u64> {
        if n > 0 {
            self.check(n - 1)?;
        }
        Ok(self.table.complexity(n))
    }

    /// Number of length-`n` factors `x` with both `x0` and `x1` factors.
    pub fn right_special_count(&self, n: usize) -> Result<u64> {
        self.check(n)?;
        Ok(self.table.right_special_count(n))
    }

    /// `d(0), ..., d(count - 1)`.
    pub fn first_difference_sequence(&self, count: usize) -> Result<Vec<u64>> {
        if count > 0 {
            self.check(count - 1)?;
        }
        Ok((0..count)
            .map(|n| self.table.right_special_count(n))
            .collect())
    }

    /// Lines `n<TAB>rho(n)<TAB>d(n)` for `n < count`.
    pub fn table_text(&self, count: usize) -> Result<String> {
        let d = self.first_difference_sequence(count)?;
        let mut out = String::new();
        for (n, dn) in d.iter().enumerate() {
            writeln!(out, "{n}\t{}\t{dn}", self.table.complexity(n)).unwrap();
        }
        Ok(out)
    }
}
