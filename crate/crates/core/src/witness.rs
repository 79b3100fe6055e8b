use crate::error::{Error, Result};
use crate::word::{conjugate_mismatch, Word};

/// A pair `(x, y)` whose conjugate mismatch has been checked to equal `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Witness {
    x: Word,
    y: Word,
    k: usize,
}

impl Witness {
    /// Computes `h(xy, yx)` and accepts the pair only if it equals `expected`.
    pub fn verify(x: Word, y: Word, expected: usize) -> Result<Self> {
        let actual = conjugate_mismatch(&x, &y);
        if actual != expected {
            return Err(Error::WitnessMismatch { expected, actual });
        }
        Ok(Witness { x, y, k: actual })
    }

    pub fn x(&self) -> &Word {
        &self.x
    }

    pub fn y(&self) -> &Word {
        &self.y
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.x.len()
    }

    pub fn n(&self) -> usize {
        self.y.len()
    }

    pub fn concat(&self) -> Word {
        self.x.concat(&self.y)
    }

    pub fn into_parts(self) -> (Word, Word) {
        (self.x, self.y)
    }
}
