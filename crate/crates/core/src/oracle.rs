//! Exhaustive ground truth at small sizes.
//!
//! Every pair `(x, y)` in `Σ^m × Σ^n` is visited in odometer order: `x`
//! outer, `y` inner, most significant symbol first. That order is the
//! lexicographic order on `x·y`, so the first pair seen for each distance
//! is the lexicographically smallest witness for it.
//!
//! Enumeration is split into contiguous `x` ranges that run in parallel.
//! Ranges are merged in index order, so the result never depends on which
//! range finishes first.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::witness::Witness;
use crate::word::{rotation_mismatch, Alphabet, Word};

/// Default cap on the number of candidates an oracle call may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

const CHUNKS: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest number of candidates (pairs, or `y` words) one call may enumerate.
    pub budget: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            budget: DEFAULT_BUDGET,
        }
    }
}

impl OracleConfig {
    pub fn with_budget(budget: u64) -> Self {
        OracleConfig { budget }
    }

    /// Number of words of length `len`, or an error if it exceeds the budget.
    fn admit(&self, alphabet: Alphabet, len: usize) -> Result<u64> {
        let sigma = alphabet.size();
        u32::try_from(len)
            .ok()
            .and_then(|exp| u64::from(sigma).checked_pow(exp))
            .filter(|&count| count <= self.budget)
            .ok_or(Error::BudgetExceeded {
                sigma: u32::from(sigma),
                exponent: len,
                budget: self.budget,
            })
    }
}

/// All achievable distances for `(m, n, sigma)`, each with its lexmin witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AchievabilityRecord {
    pub m: usize,
    pub n: usize,
    pub alphabet: Alphabet,
    pub witness_per_k: BTreeMap<usize, Witness>,
}

impl AchievabilityRecord {
    pub fn achievable(&self) -> BTreeSet<usize> {
        self.witness_per_k.keys().copied().collect()
    }

    pub fn max_k(&self) -> Option<usize> {
        self.witness_per_k.keys().next_back().copied()
    }
}

/// Writes the base-`sigma` digits of `index` into `out`, most significant first.
fn decode(mut index: u64, sigma: u8, out: &mut [u8]) {
    for slot in out.iter_mut().rev() {
        *slot = (index % u64::from(sigma)) as u8;
        index /= u64::from(sigma);
    }
}

/// Advances `digits` to the next word in odometer order; false on wrap-around.
fn increment(digits: &mut [u8], sigma: u8) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < sigma {
            return true;
        }
        *d = 0;
    }
    false
}

fn words_of(index: u64, len: usize, sigma: u8) -> Word {
    let mut symbols = vec![0; len];
    decode(index, sigma, &mut symbols);
    Word::from_symbols(symbols).expect("decoded symbols lie in the alphabet")
}

/// First `(x index, y index)` seen for each distance within `x_range`.
fn scan_range(
    m: usize,
    n: usize,
    sigma: u8,
    x_range: std::ops::Range<u64>,
) -> Vec<Option<(u64, u64)>> {
    let mut first = vec![None; m + n + 1];
    let mut z = vec![0u8; m + n];
    for ix in x_range {
        decode(ix, sigma, &mut z[..m]);
        z[m..].fill(0);
        let mut iy = 0u64;
        loop {
            let k = rotation_mismatch(&z, m);
            if first[k].is_none() {
                first[k] = Some((ix, iy));
            }
            if !increment(&mut z[m..], sigma) {
                break;
            }
            iy += 1;
        }
    }
    first
}

/// Enumerates every pair and records the distances that occur.
pub fn achievable_set(
    m: usize,
    n: usize,
    alphabet: Alphabet,
    config: &OracleConfig,
) -> Result<AchievabilityRecord> {
    if m == 0 || n == 0 {
        return Err(Error::ZeroLength { m, n });
    }
    config.admit(alphabet, m + n)?;
    let sigma = alphabet.size();
    let x_count = u64::from(sigma).pow(m as u32);
    let chunk = x_count.div_ceil(CHUNKS).max(1);
    let partials: Vec<_> = (0..x_count.div_ceil(chunk))
        .into_par_iter()
        .map(|c| scan_range(m, n, sigma, c * chunk..((c + 1) * chunk).min(x_count)))
        .collect();

    let mut first: Vec<Option<(u64, u64)>> = vec![None; m + n + 1];
    for partial in partials {
        for (slot, found) in first.iter_mut().zip(partial) {
            if slot.is_none() {
                *slot = found;
            }
        }
    }

    let mut witness_per_k = BTreeMap::new();
    for (k, hit) in first.into_iter().enumerate() {
        if let Some((ix, iy)) = hit {
            let witness = Witness::verify(words_of(ix, m, sigma), words_of(iy, n, sigma), k)?;
            witness_per_k.insert(k, witness);
        }
    }
    Ok(AchievabilityRecord {
        m,
        n,
        alphabet,
        witness_per_k,
    })
}

/// Lexicographically smallest `x·y` with `h(xy, yx) = k`, if any.
pub fn lexmin_witness(
    m: usize,
    n: usize,
    k: usize,
    alphabet: Alphabet,
    config: &OracleConfig,
) -> Result<Option<Witness>> {
    if m == 0 || n == 0 {
        return Err(Error::ZeroLength { m, n });
    }
    config.admit(alphabet, m + n)?;
    if k > m + n {
        return Ok(None);
    }
    let sigma = alphabet.size();
    let mut z = vec![0u8; m + n];
    loop {
        if rotation_mismatch(&z, m) == k {
            let (x, y) = z.split_at(m);
            let x = Word::from_symbols(x.to_vec())?;
            let y = Word::from_symbols(y.to_vec())?;
            return Witness::verify(x, y, k).map(Some);
        }
        if !increment(&mut z, sigma) {
            return Ok(None);
        }
    }
}

/// Distances reachable with `x = 0^m`.
pub fn x_zero_achievable(
    m: usize,
    n: usize,
    alphabet: Alphabet,
    config: &OracleConfig,
) -> Result<BTreeSet<usize>> {
    if m == 0 || n == 0 {
        return Err(Error::ZeroLength { m, n });
    }
    config.admit(alphabet, n)?;
    let sigma = alphabet.size();
    let mut z = vec![0u8; m + n];
    let mut seen = BTreeSet::new();
    loop {
        seen.insert(rotation_mismatch(&z, m));
        if !increment(&mut z[m..], sigma) {
            return Ok(seen);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::conjugate_mismatch;

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    #[test]
    fn one_one_binary() {
        let rec = achievable_set(1, 1, Alphabet::Binary, &cfg()).unwrap();
        assert_eq!(rec.achievable(), BTreeSet::from([0, 2]));
        assert_eq!(rec.witness_per_k[&2].x().to_string(), "0");
        assert_eq!(rec.witness_per_k[&2].y().to_string(), "1");
    }

    #[test]
    fn three_five_binary_reaches_eight() {
        let rec = achievable_set(3, 5, Alphabet::Binary, &cfg()).unwrap();
        assert!(rec.achievable().contains(&8));
    }

    #[test]
    fn six_nine_binary_max() {
        let rec = achievable_set(6, 9, Alphabet::Binary, &cfg()).unwrap();
        assert_eq!(rec.max_k(), Some(12));
    }

    #[test]
    fn lexmin_examples() {
        let w = lexmin_witness(3, 5, 8, Alphabet::Binary, &cfg()).unwrap().unwrap();
        assert_eq!((w.x().to_string(), w.y().to_string()), ("010".into(), "10101".into()));

        let w = lexmin_witness(4, 6, 0, Alphabet::Ternary, &cfg()).unwrap().unwrap();
        assert!(w.x().is_constant(0) && w.y().is_constant(0));

        assert_eq!(lexmin_witness(4, 6, 1, Alphabet::Ternary, &cfg()).unwrap(), None);
        assert_eq!(lexmin_witness(4, 6, 11, Alphabet::Ternary, &cfg()).unwrap(), None);
    }

    #[test]
    fn lexmin_two_two_ternary_by_sorting() {
        let mut pairs = Vec::new();
        for ix in 0..9 {
            for iy in 0..9 {
                let x = words_of(ix, 2, 3);
                let y = words_of(iy, 2, 3);
                if conjugate_mismatch(&x, &y) == 2 {
                    pairs.push(x.concat(&y));
                }
            }
        }
        pairs.sort();
        let w = lexmin_witness(2, 2, 2, Alphabet::Ternary, &cfg()).unwrap().unwrap();
        assert_eq!(w.concat(), pairs[0]);
        assert_eq!(w.concat().to_string(), "0001");
    }

    #[test]
    fn lexmin_agrees_with_record() {
        for (m, n) in [(2, 3), (3, 3), (2, 5)] {
            for alphabet in [Alphabet::Binary, Alphabet::Ternary] {
                let rec = achievable_set(m, n, alphabet, &cfg()).unwrap();
                for (&k, w) in &rec.witness_per_k {
                    let lex = lexmin_witness(m, n, k, alphabet, &cfg()).unwrap().unwrap();
                    assert_eq!(&lex, w);
                }
            }
        }
    }

    #[test]
    fn x_zero_examples() {
        assert_eq!(
            x_zero_achievable(1, 1, Alphabet::Binary, &cfg()).unwrap(),
            BTreeSet::from([0, 2])
        );
        assert!(!x_zero_achievable(3, 5, Alphabet::Binary, &cfg())
            .unwrap()
            .contains(&8));
        for (m, n) in [(2, 5), (3, 3), (4, 6)] {
            assert_eq!(
                x_zero_achievable(m, n, Alphabet::Ternary, &cfg()).unwrap(),
                achievable_set(m, n, Alphabet::Ternary, &cfg()).unwrap().achievable()
            );
        }
    }

    #[test]
    fn budget_is_enforced() {
        let small = OracleConfig::with_budget(1000);
        assert_eq!(
            achievable_set(5, 6, Alphabet::Binary, &small),
            Err(Error::BudgetExceeded {
                sigma: 2,
                exponent: 11,
                budget: 1000
            })
        );
        assert!(lexmin_witness(5, 6, 2, Alphabet::Binary, &small).is_err());
        assert!(x_zero_achievable(1, 7, Alphabet::Ternary, &small).is_err());
        assert!(x_zero_achievable(30, 6, Alphabet::Ternary, &small).is_ok());
        assert!(achievable_set(40, 40, Alphabet::Ternary, &cfg()).is_err());
    }

    #[test]
    fn parallel_matches_sequential() {
        let (m, n, sigma) = (5, 4, 3);
        let x_count = 3u64.pow(5);
        let seq = scan_range(m, n, sigma, 0..x_count);
        let rec = achievable_set(m, n, Alphabet::Ternary, &cfg()).unwrap();
        for (k, hit) in seq.into_iter().enumerate() {
            match hit {
                Some((ix, iy)) => {
                    let w = &rec.witness_per_k[&k];
                    assert_eq!(w.x(), &words_of(ix, m, sigma));
                    assert_eq!(w.y(), &words_of(iy, n, sigma));
                }
                None => assert!(!rec.witness_per_k.contains_key(&k)),
            }
        }
    }
}
