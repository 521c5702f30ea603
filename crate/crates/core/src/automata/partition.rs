//! Moore-style partition refinement shared by DFA and DFAO minimization.

use rustc_hash::FxHashMap;

/// Refines `seed` (one class label per state) until it is stable under every letter.
///
/// `delta[q * alphabet + a]` is the successor of `q` on letter `a`. Returns the class of
/// each state, renumbered densely from 0, together with the number of classes.
pub(crate) fn refine(alphabet: usize, delta: &[u32], seed: &[u64]) -> (Vec<u32>, usize) {
    let n = seed.len();
    let mut class = vec![0u32; n];
    let mut count = {
        let mut ids: FxHashMap<u64, u32> = FxHashMap::default();
        for (q, &s) in seed.iter().enumerate() {
            let next = ids.len() as u32;
            class[q] = *ids.entry(s).or_insert(next);
        }
        ids.len()
    };
    let mut ids: FxHashMap<u64, u32> = FxHashMap::default();
    let mut next_class = vec![0u32; n];
    loop {
        let before = count;
        for a in 0..alphabet {
            ids.clear();
            for q in 0..n {
                let succ = delta[q * alphabet + a] as usize;
                let key = ((class[q] as u64) << 32) | class[succ] as u64;
                let fresh = ids.len() as u32;
                next_class[q] = *ids.entry(key).or_insert(fresh);
            }
            std::mem::swap(&mut class, &mut next_class);
            count = ids.len();
        }
        if count == before || count == n {
            return (class, count);
        }
    }
}
