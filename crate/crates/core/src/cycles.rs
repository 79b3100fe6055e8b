//! Position cycles linking `x·y` to `y·x`.
//!
//! Writing `z = x·y` with `|x| = m` and `|y| = n`, position `p` of `y·x`
//! holds `z[(p + m) mod (m + n)]`. Following `p -> p + m` therefore splits
//! the positions of `z` into `gcd(m, n)` cycles, each of length
//! `(m + n) / gcd(m, n)`, and consecutive cycle members are exactly the
//! symbol pairs compared by `h(xy, yx)`.

use num_integer::gcd;

use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    m: usize,
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    /// Cycle `c` starts at position `c` and steps by `+m`, for
    /// `c = 0 .. gcd(m, n)`.
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::ZeroLength { m, n });
        }
        let total = m + n;
        let count = gcd(m, n);
        let length = total / count;
        let cycles = (0..count)
            .map(|start| (0..length).map(|i| (start + i * m) % total).collect())
            .collect();
        Ok(CycleDecomposition { m, n, cycles })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn total_len(&self) -> usize {
        self.m + self.n
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn cycle_len(&self) -> usize {
        self.total_len() / self.cycle_count()
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn successor(&self, position: usize) -> usize {
        (position + self.m) % self.total_len()
    }
}

/// Per-cycle count of positions `p` with `z[p] != z[p + m]`.
///
/// The counts sum to `conjugate_mismatch(z[..m], z[m..])`.
pub fn cycle_disagreements(z: &Word, decomposition: &CycleDecomposition) -> Result<Vec<usize>> {
    if z.len() != decomposition.total_len() {
        return Err(Error::LengthMismatch {
            left: z.len(),
            right: decomposition.total_len(),
        });
    }
    let symbols = z.symbols();
    Ok(decomposition
        .cycles
        .iter()
        .map(|cycle| {
            cycle
                .iter()
                .filter(|&&p| symbols[p] != symbols[decomposition.successor(p)])
                .count()
        })
        .collect())
}
