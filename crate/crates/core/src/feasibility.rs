//! Which distances `k = h(xy, yx)` are reachable for given lengths.
//!
//! Over three or more letters every `k` in `0..=m+n` except `1` is
//! reachable, except that equal lengths force `k` even. Over two letters
//! `k` must be even, and when the cycle length `(m+n)/gcd(m,n)` is odd each
//! of the `gcd(m,n)` cycles loses one mismatch, capping `k` at
//! `m + n - gcd(m, n)`.

use std::fmt;

use num_integer::gcd;

use crate::error::{Error, Result};
use crate::word::Alphabet;

/// A query `(m, n, k, sigma)`, normalized so that `1 <= m <= n`.
///
/// `k` is signed so that out-of-range requests can still be answered with
/// a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProblemInstance {
    m: usize,
    n: usize,
    k: i64,
    alphabet: Alphabet,
}

impl ProblemInstance {
    /// Swaps `m` and `n` when needed; `f(x, y) = f(y, x)` makes this lossless.
    pub fn new(m: usize, n: usize, k: i64, alphabet: Alphabet) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::ZeroLength { m, n });
        }
        let (m, n) = if m <= n { (m, n) } else { (n, m) };
        Ok(ProblemInstance { m, n, k, alphabet })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// `k` as an index into `0..=m+n`, if it lies in that range.
    pub fn k_in_range(&self) -> Option<usize> {
        usize::try_from(self.k)
            .ok()
            .filter(|&k| k <= self.m + self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    Ok,
    KEqualsOne,
    KOddEqualLengths,
    KOddBinary,
    KOutOfRange,
    KExceedsBinaryCapacity,
}

impl Reason {
    pub fn code(self) -> &'static str {
        match self {
            Reason::Ok => "OK",
            Reason::KEqualsOne => "K_EQUALS_ONE",
            Reason::KOddEqualLengths => "K_ODD_EQUAL_LENGTHS",
            Reason::KOddBinary => "K_ODD_BINARY",
            Reason::KOutOfRange => "K_OUT_OF_RANGE",
            Reason::KExceedsBinaryCapacity => "K_EXCEEDS_BINARY_CAPACITY",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Reason::Ok => "a witness exists",
            Reason::KEqualsOne => "xy and yx can never differ in exactly one position",
            Reason::KOddEqualLengths => "for |x| = |y| the distance is 2 h(x, y), hence even",
            Reason::KOddBinary => "over a binary alphabet the distance is always even",
            Reason::KOutOfRange => "k must lie in 0..=m+n",
            Reason::KExceedsBinaryCapacity => {
                "odd cycle length: each cycle loses one mismatch, so k <= m + n - gcd(m, n)"
            }
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Verdict {
    pub reason: Reason,
    /// Largest achievable distance for the instance's `(m, n, sigma)`.
    pub capacity: usize,
}

impl Verdict {
    pub fn feasible(&self) -> bool {
        self.reason == Reason::Ok
    }
}

/// Largest achievable `h(xy, yx)` with `|x| = m`, `|y| = n`.
pub fn capacity(m: usize, n: usize, alphabet: Alphabet) -> usize {
    let total = m + n;
    match alphabet {
        Alphabet::Ternary => total,
        Alphabet::Binary => {
            let d = gcd(m, n);
            if (total / d) % 2 == 1 {
                total - d
            } else {
                total
            }
        }
    }
}

/// Decides whether the instance has a witness.
///
/// Checks run in a fixed order: range, `k = 1`, parity, binary capacity.
pub fn feasible(inst: &ProblemInstance) -> Verdict {
    let capacity = capacity(inst.m, inst.n, inst.alphabet);
    let reason = match inst.k_in_range() {
        None => Reason::KOutOfRange,
        Some(1) => Reason::KEqualsOne,
        Some(k) => match inst.alphabet {
            Alphabet::Ternary if inst.m == inst.n && k % 2 == 1 => Reason::KOddEqualLengths,
            Alphabet::Ternary => Reason::Ok,
            Alphabet::Binary if k % 2 == 1 => Reason::KOddBinary,
            Alphabet::Binary if k > capacity => Reason::KExceedsBinaryCapacity,
            Alphabet::Binary => Reason::Ok,
        },
    };
    Verdict { reason, capacity }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdict(m: usize, n: usize, k: i64, sigma: u32) -> Verdict {
        let inst = ProblemInstance::new(m, n, k, Alphabet::from_size(sigma).unwrap()).unwrap();
        feasible(&inst)
    }

    #[test]
    fn examples() {
        assert!(verdict(3, 5, 8, 2).feasible());
        assert!(verdict(6, 9, 12, 2).feasible());
        assert_eq!(verdict(6, 9, 14, 2).reason, Reason::KExceedsBinaryCapacity);
        assert_eq!(verdict(4, 7, 1, 3).reason, Reason::KEqualsOne);
    }

    #[test]
    fn reasons() {
        assert_eq!(verdict(4, 7, 12, 3).reason, Reason::KOutOfRange);
        assert_eq!(verdict(4, 7, -1, 3).reason, Reason::KOutOfRange);
        assert_eq!(verdict(5, 5, 7, 3).reason, Reason::KOddEqualLengths);
        assert_eq!(verdict(4, 7, 7, 3).reason, Reason::Ok);
        assert_eq!(verdict(4, 7, 7, 2).reason, Reason::KOddBinary);
        assert_eq!(verdict(4, 7, 1, 2).reason, Reason::KEqualsOne);
        assert_eq!(verdict(4, 7, 11, 5).reason, Reason::Ok);
    }

    #[test]
    fn capacities() {
        assert_eq!(capacity(6, 9, Alphabet::Binary), 12);
        assert_eq!(capacity(10, 45, Alphabet::Ternary), 55);
        assert_eq!(capacity(1, 1, Alphabet::Binary), 2);
        assert_eq!(capacity(3, 5, Alphabet::Binary), 8);
        assert_eq!(capacity(1, 2, Alphabet::Binary), 2);
        assert_eq!(verdict(6, 9, 0, 2).capacity, 12);
    }

    #[test]
    fn zero_always_feasible_one_never() {
        for m in 1..=20 {
            for n in m..=20 {
                for sigma in [2, 3] {
                    assert!(verdict(m, n, 0, sigma).feasible());
                    assert!(!verdict(m, n, 1, sigma).feasible());
                }
            }
        }
    }

    #[test]
    fn normalizes_order() {
        let inst = ProblemInstance::new(9, 6, 10, Alphabet::Binary).unwrap();
        assert_eq!((inst.m(), inst.n()), (6, 9));
        assert!(ProblemInstance::new(0, 6, 0, Alphabet::Binary).is_err());
    }

    #[test]
    fn codes() {
        assert_eq!(Reason::KExceedsBinaryCapacity.to_string(), "K_EXCEEDS_BINARY_CAPACITY");
        assert_eq!(Reason::Ok.code(), "OK");
    }
}
