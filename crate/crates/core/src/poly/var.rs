use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const MAX_LETTERS: usize = 8;
const INDEX_BITS: u32 = 23;
const LETTER_BITS: u32 = 5;
const PLAIN_CLASS: u64 = 1 << 63;

/// A named indeterminate.
///
/// Names are a lowercase prefix of at most eight letters, optionally followed
/// by a decimal index without leading zeros (`x`, `lam`, `a0`, `s12`). The
/// name is packed into a single integer whose ordering is the canonical
/// ordering of the indeterminate universe:
///
/// * indexed names (`a0 < a1 < … < a10 < s1 < …`) come first, ordered by
///   prefix and then numerically by index;
/// * plain names (`k < lam < t < x < y`) come last, alphabetically.
///
/// The main variables of every computation (`x`, `y`, `t`) therefore sort
/// after the parameters `a_i` and `s_i`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u64);

impl Var {
    pub fn new(name: &str) -> Result<Self> {
        let bad = || Error::UnknownVariable(name.to_string());
        let split = name
            .find(|c: char| c.is_ascii_digit())
            .unwrap_or(name.len());
        let (prefix, digits) = name.split_at(split);
        if prefix.is_empty()
            || prefix.len() > MAX_LETTERS
            || !prefix.bytes().all(|b| b.is_ascii_lowercase())
        {
            return Err(bad());
        }
        let mut key: u64 = 0;
        for i in 0..MAX_LETTERS {
            let letter = prefix
                .as_bytes()
                .get(i)
                .map_or(0, |b| u64::from(b - b'a' + 1));
            key = (key << LETTER_BITS) | letter;
        }
        key <<= INDEX_BITS;
        if digits.is_empty() {
            key |= PLAIN_CLASS;
        } else {
            if !digits.bytes().all(|b| b.is_ascii_digit())
                || (digits.len() > 1 && digits.starts_with('0'))
            {
                return Err(bad());
            }
            let index: u64 = digits.parse().map_err(|_| bad())?;
            if index >= (1 << INDEX_BITS) {
                return Err(bad());
            }
            key |= index;
        }
        Ok(Var(key))
    }

    /// `prefix{index}`, e.g. `Var::indexed("a", 3)` is `a3`.
    pub fn indexed(prefix: &str, index: usize) -> Self {
        Var::new(&format!("{prefix}{index}")).expect("valid indexed variable name")
    }

    /// Variable from a name known at compile time to be valid.
    pub fn named(name: &str) -> Self {
        Var::new(name).expect("valid variable name")
    }

    pub fn name(&self) -> String {
        let mut letters = self.0 >> INDEX_BITS;
        let mut prefix = Vec::with_capacity(MAX_LETTERS);
        for _ in 0..MAX_LETTERS {
            let l = (letters & ((1 << LETTER_BITS) - 1)) as u8;
            if l != 0 {
                prefix.push(b'a' + l - 1);
            }
            letters >>= LETTER_BITS;
        }
        prefix.reverse();
        let mut out = String::from_utf8(prefix).expect("ascii");
        if self.0 & PLAIN_CLASS == 0 {
            out.push_str(&(self.0 & ((1 << INDEX_BITS) - 1)).to_string());
        }
        out
    }
}

impl FromStr for Var {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Var::new(s)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Var({})", self.name())
    }
}
