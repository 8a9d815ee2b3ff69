//! Strictly increasing finite sequences of naturals and their coding.
//!
//! Elements of `[ω]^n` are identified with strictly increasing sequences.
//! The code pairs the length with the colexicographic rank of the sequence
//! among those of equal length, so every natural decodes to exactly one
//! tuple and the empty tuple gets code 0.

use crate::pairing::binomial;
use std::fmt;
use thiserror::Error;

/// A strictly increasing finite sequence of naturals.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tuple(Vec<u64>);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TupleError {
    #[error("sequence is not strictly increasing at position {0}")]
    NotIncreasing(usize),
}

impl Tuple {
    pub fn new(elements: Vec<u64>) -> Result<Self, TupleError> {
        for i in 1..elements.len() {
            if elements[i - 1] >= elements[i] {
                return Err(TupleError::NotIncreasing(i));
            }
        }
        Ok(Tuple(elements))
    }

    pub fn empty() -> Self {
        Tuple(Vec::new())
    }

    pub fn singleton(x: u64) -> Self {
        Tuple(vec![x])
    }

    /// Builds from a slice, panicking if it is not strictly increasing.
    /// Convenience for literals in tests and internal call sites.
    pub fn from_slice(elements: &[u64]) -> Self {
        Tuple::new(elements.to_vec()).expect("tuple literal must be strictly increasing")
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min_elem(&self) -> Option<u64> {
        self.0.first().copied()
    }

    pub fn max_elem(&self) -> Option<u64> {
        self.0.last().copied()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// Concatenation `σξ`, defined when `max σ < min ξ`.
    pub fn concat(&self, other: &Tuple) -> Result<Tuple, TupleError> {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Tuple::new(v)
    }

    /// `σ⟨x⟩`, defined when `x > max σ`.
    pub fn push(&self, x: u64) -> Result<Tuple, TupleError> {
        let mut v = self.0.clone();
        v.push(x);
        Tuple::new(v)
    }

    /// `⟨x⟩ξ`, defined when `x < min ξ`.
    pub fn prepend(&self, x: u64) -> Result<Tuple, TupleError> {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(x);
        v.extend_from_slice(&self.0);
        Tuple::new(v)
    }

    /// First `k` elements.
    pub fn prefix(&self, k: usize) -> Tuple {
        Tuple(self.0[..k].to_vec())
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (idx, x) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ">")
    }
}

/// Colexicographic rank of `t` among increasing sequences of its length.
fn colex_rank(t: &Tuple) -> u64 {
    t.elements()
        .iter()
        .enumerate()
        .map(|(idx, &x)| binomial(x, idx as u64 + 1))
        .sum()
}

/// `⌜t⌝`: the empty tuple gets 0; a tuple of length k gets
/// `2^(k−1) · (2·colex + 1)`, reading length and rank off the dyadic
/// factorization. Linear in the rank, so desk-scale tuples stay in `u64`.
pub fn encode_tuple(t: &Tuple) -> u64 {
    if t.is_empty() {
        return 0;
    }
    let k = t.len() as u32 - 1;
    let r = colex_rank(t);
    let odd = r
        .checked_mul(2)
        .and_then(|v| v.checked_add(1))
        .expect("tuple code overflow");
    odd.checked_shl(k)
        .filter(|v| v >> k == odd)
        .expect("tuple code overflow")
}

/// Inverse of [`encode_tuple`].
pub fn decode_tuple(code: u64) -> Tuple {
    if code == 0 {
        return Tuple::empty();
    }
    let k = code.trailing_zeros() as u64;
    let len = k + 1;
    let mut rank = (code >> k) / 2;
    let mut elems = vec![0u64; len as usize];
    for slot in (1..=len).rev() {
        // largest c with C(c, slot) <= rank
        let mut c = slot - 1;
        while binomial(c + 1, slot) <= rank {
            c += 1;
        }
        rank -= binomial(c, slot);
        elems[slot as usize - 1] = c;
    }
    Tuple(elems)
}
