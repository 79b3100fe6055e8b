//! Explicit witnesses for every feasible instance.
//!
//! Ternary instances use `x = 0^m` and a `y` built by a four-way recursion
//! on `(m, n, k)`. Binary instances fill the position cycles of `z = x·y`
//! with alternating runs, one cycle at a time, until `k` mismatches are
//! placed.

use num_integer::{gcd, Integer};

use crate::cycles::CycleDecomposition;
use crate::error::{Error, Result};
use crate::feasibility::{feasible, ProblemInstance};
use crate::witness::Witness;
use crate::word::{Alphabet, Word};

/// Which rule of the ternary recursion produces `y` for a given `(m, n, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TernaryRule {
    /// `k = 2t <= 2m`: `y = 0^(n-t) 1^t`.
    Even,
    /// `k = 2t + 1 <= 2m + 1`: `y = 0^(n-m-1) 1 0^(m-t) 1^(t-1) 2`.
    Odd,
    /// `2m + 1 < k < m + n`: `y = 0^(m+n-k) s(m, k-m, k)`.
    Padded,
    /// `k = m + n`: alternating `1^m 2^m` blocks.
    Full,
}

/// Rule chosen for a feasible ternary instance. Overlaps resolve in
/// declaration order, so `k = 2m` is `Even` and `k = 2m + 1 = m + n` is `Odd`.
pub fn ternary_rule(m: usize, n: usize, k: usize) -> TernaryRule {
    if k.is_multiple_of(2) && k <= 2 * m {
        TernaryRule::Even
    } else if k % 2 == 1 && k <= 2 * m + 1 {
        TernaryRule::Odd
    } else if k < m + n {
        TernaryRule::Padded
    } else {
        TernaryRule::Full
    }
}

/// `y` of length `n` with `h(0^m y, y 0^m) = k` over `{0, 1, 2}`.
pub fn ternary_word(m: usize, n: usize, k: usize) -> Result<Word> {
    let inst = ProblemInstance::new(m, n, k as i64, Alphabet::Ternary)?;
    if m > n {
        return Err(Error::ConstructionBug(format!(
            "ternary word needs m <= n, got m = {m}, n = {n}"
        )));
    }
    let verdict = feasible(&inst);
    if !verdict.feasible() {
        return Err(Error::Infeasible(verdict));
    }
    Ok(ternary_rec(m, n, k, 0).0)
}

/// Returns the word and the recursion depth at which it was produced.
fn ternary_rec(m: usize, n: usize, k: usize, depth: usize) -> (Word, usize) {
    match ternary_rule(m, n, k) {
        TernaryRule::Even => {
            let t = k / 2;
            (Word::from_runs(&[(0, n - t), (1, t)]), depth)
        }
        TernaryRule::Odd => {
            let t = (k - 1) / 2;
            let word = Word::from_runs(&[(0, n - m - 1), (1, 1), (0, m - t), (1, t - 1), (2, 1)]);
            (word, depth)
        }
        TernaryRule::Padded => {
            let (tail, depth) = ternary_rec(m, k - m, k, depth + 1);
            (Word::constant(0, m + n - k).concat(&tail), depth)
        }
        TernaryRule::Full => {
            let (blocks, rem) = n.div_rem(&(2 * m));
            let mut runs = Vec::with_capacity(2 * blocks + 2);
            for _ in 0..blocks {
                runs.push((1, m));
                runs.push((2, m));
            }
            if rem <= m {
                runs.push((1, rem));
            } else {
                runs.push((1, m));
                runs.push((2, rem - m));
            }
            (Word::from_runs(&runs), depth)
        }
    }
}

/// `z = x·y` for a feasible binary instance.
///
/// Each cycle contributes `g` mismatches when filled `0, 1, 0, 1, ...`,
/// where `g` is the cycle length rounded down to even. The first `k div g`
/// cycles are filled completely, the next gets an alternating prefix of
/// length `k mod g`, and everything else stays `0`.
fn binary_fill(m: usize, n: usize, k: usize) -> Result<Word> {
    let decomposition = CycleDecomposition::new(m, n)?;
    let length = decomposition.cycle_len();
    let per_cycle = length - length % 2;
    let (full, rem) = k.div_rem(&per_cycle);
    let mut z = vec![0u8; m + n];
    for (c, cycle) in decomposition.cycles().iter().enumerate() {
        let prefix = match c.cmp(&full) {
            std::cmp::Ordering::Less => length,
            std::cmp::Ordering::Equal => rem,
            std::cmp::Ordering::Greater => break,
        };
        for (i, &p) in cycle.iter().take(prefix).enumerate() {
            z[p] = (i % 2) as u8;
        }
    }
    debug_assert_eq!(gcd(m, n), decomposition.cycle_count());
    Word::from_symbols(z)
}

/// A verified witness for a feasible instance.
///
/// Ternary witnesses always have `x = 0^m`.
pub fn construct(inst: &ProblemInstance) -> Result<Witness> {
    let verdict = feasible(inst);
    let Some(k) = inst.k_in_range().filter(|_| verdict.feasible()) else {
        return Err(Error::Infeasible(verdict));
    };
    let (m, n) = (inst.m(), inst.n());
    let (x, y) = match inst.alphabet() {
        Alphabet::Ternary => (Word::constant(0, m), ternary_rec(m, n, k, 0).0),
        Alphabet::Binary => binary_fill(m, n, k)?.split_at(m),
    };
    if !x.fits(inst.alphabet()) || !y.fits(inst.alphabet()) {
        return Err(Error::ConstructionBug(format!(
            "witness for {m}, {n}, {k} leaves the alphabet: {x} / {y}"
        )));
    }
    Witness::verify(x, y, k).map_err(|e| {
        Error::ConstructionBug(format!("witness for m = {m}, n = {n}, k = {k} failed: {e}"))
    })
}
