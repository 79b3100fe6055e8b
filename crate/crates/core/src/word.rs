//! Words over the alphabet `{0, 1, 2}` and the distance primitives built on
//! them.
//!
//! The central quantity is the conjugate mismatch `f(x, y) = h(xy, yx)`:
//! the Hamming distance between the two concatenation orders of a pair of
//! words. It is computed by walking `x·y` and `y·x` side by side without
//! building either concatenation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest symbol value a [`Word`] may hold.
pub const MAX_SYMBOL: u8 = 2;

/// Alphabet in use for a problem instance.
///
/// Every alphabet with three or more letters behaves like the ternary one,
/// so larger sizes collapse onto [`Alphabet::Ternary`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Alphabet {
    Binary,
    Ternary,
}

impl Alphabet {
    /// Maps a requested alphabet size onto a supported alphabet.
    pub fn from_size(size: u32) -> Result<Self> {
        match size {
            2 => Ok(Alphabet::Binary),
            s if s >= 3 => Ok(Alphabet::Ternary),
            s => Err(Error::UnsupportedAlphabet(s)),
        }
    }

    pub fn size(self) -> u8 {
        match self {
            Alphabet::Binary => 2,
            Alphabet::Ternary => 3,
        }
    }

    pub fn contains(self, symbol: u8) -> bool {
        symbol < self.size()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.size())
    }
}

/// A finite word over `{0, 1, 2}`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_symbols(symbols: Vec<u8>) -> Result<Self> {
        if let Some(position) = symbols.iter().position(|&s| s > MAX_SYMBOL) {
            return Err(Error::InvalidSymbol {
                symbol: char::from_digit(u32::from(symbols[position]), 36).unwrap_or('?'),
                position,
            });
        }
        Ok(Word(symbols))
    }

    /// `symbol` repeated `len` times.
    ///
    /// Panics if `symbol` is outside the alphabet.
    pub fn constant(symbol: u8, len: usize) -> Self {
        assert!(symbol <= MAX_SYMBOL, "symbol {symbol} out of range");
        Word(vec![symbol; len])
    }

    /// Builds a word from run-length pairs `(symbol, count)`.
    ///
    /// Panics if a symbol is outside the alphabet.
    pub fn from_runs(runs: &[(u8, usize)]) -> Self {
        let mut symbols = Vec::with_capacity(runs.iter().map(|&(_, c)| c).sum());
        for &(symbol, count) in runs {
            assert!(symbol <= MAX_SYMBOL, "symbol {symbol} out of range");
            symbols.extend(std::iter::repeat_n(symbol, count));
        }
        Word(symbols)
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.0);
        symbols.extend_from_slice(&other.0);
        Word(symbols)
    }

    /// Splits into the prefix of length `mid` and the remaining suffix.
    pub fn split_at(&self, mid: usize) -> (Word, Word) {
        let (head, tail) = self.0.split_at(mid);
        (Word(head.to_vec()), Word(tail.to_vec()))
    }

    /// True when every symbol belongs to `alphabet`.
    pub fn fits(&self, alphabet: Alphabet) -> bool {
        self.0.iter().all(|&s| alphabet.contains(s))
    }

    pub fn is_constant(&self, symbol: u8) -> bool {
        self.0.iter().all(|&s| s == symbol)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(position, c)| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                '2' => Ok(2),
                symbol => Err(Error::InvalidSymbol { symbol, position }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: String = self.0.iter().map(|&s| char::from(b'0' + s)).collect();
        f.write_str(&text)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}

/// Number of positions at which two equal-length sequences differ.
pub fn hamming<T: PartialEq>(a: &[T], b: &[T]) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.iter().zip(b).filter(|(p, q)| p != q).count())
}

/// `h(xy, yx)`, symmetric in its arguments.
pub fn conjugate_mismatch(x: &Word, y: &Word) -> usize {
    let xy = x.0.iter().chain(&y.0);
    let yx = y.0.iter().chain(&x.0);
    xy.zip(yx).filter(|(p, q)| p != q).count()
}

/// Distance between `z` and its left rotation by `shift`.
///
/// With `z = x·y` and `shift = |x|` this equals `conjugate_mismatch(x, y)`.
pub fn rotation_mismatch(z: &[u8], shift: usize) -> usize {
    if z.is_empty() {
        return 0;
    }
    let shift = shift % z.len();
    let rotated = z[shift..].iter().chain(&z[..shift]);
    z.iter().zip(rotated).filter(|(p, q)| p != q).count()
}

/// Shortest prefix `r` of `s` with `s = r^i`.
pub fn primitive_root<T: PartialEq>(s: &[T]) -> &[T] {
    if s.is_empty() {
        return s;
    }
    // KMP failure function: border[i] is the longest proper border of s[..=i].
    let mut border = vec![0usize; s.len()];
    let mut k = 0;
    for i in 1..s.len() {
        while k > 0 && s[i] != s[k] {
            k = border[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        border[i] = k;
    }
    let period = s.len() - border[s.len() - 1];
    if s.len().is_multiple_of(period) {
        &s[..period]
    } else {
        s
    }
}

/// True iff `x` and `y` are both powers of one word, i.e. `xy = yx`.
pub fn have_common_power(x: &Word, y: &Word) -> bool {
    if x.is_empty() || y.is_empty() {
        return true;
    }
    primitive_root(x.symbols()) == primitive_root(y.symbols())
}
