//! Packed GF(2) row vectors.

use std::fmt;
use std::ops::{BitXor, BitXorAssign};

/// A fixed-length binary vector packed into 64-bit words.
///
/// Bits beyond `len` in the last word are always zero, so word-wise
/// operations (XOR, popcount) are valid without masking.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    /// All-zero vector of the given length.
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    /// Vector of length `len` with ones at `indices`.
    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {} out of range {}", i, self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {} out of range {}", i, self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    /// Flips bit `i`.
    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {} out of range {}", i, self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    /// Hamming weight (number of ones).
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Iterator over all bits, in index order.
    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Positions of the one bits, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }
}

impl BitXorAssign<&BitVector> for BitVector {
    fn bitxor_assign(&mut self, rhs: &BitVector) {
        assert_eq!(self.len, rhs.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl BitXor for &BitVector {
    type Output = BitVector;

    fn bitxor(self, rhs: &BitVector) -> BitVector {
        let mut out = self.clone();
        out ^= rhs;
        out
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len <= 64 {
            let bits: String = self.iter().map(|b| if b { '1' } else { '0' }).collect();
            write!(f, "BitVector({})", bits)
        } else {
            write!(f, "BitVector(len={}, weight={})", self.len, self.weight())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeros_have_weight_zero() {
        assert_eq!(BitVector::zeros(1000).weight(), 0);
    }

    #[test]
    fn all_ones_weight() {
        let mut v = BitVector::zeros(7);
        for i in 0..7 {
            v.set(i, true);
        }
        assert_eq!(v.weight(), 7);
    }

    #[test]
    fn weight_matches_bit_loop() {
        // Naive per-bit count as the oracle.
        let mut v = BitVector::zeros(131);
        for i in (0..131).step_by(3) {
            v.set(i, true);
        }
        let naive = (0..131).filter(|&i| v.get(i)).count();
        assert_eq!(v.weight(), naive);
    }

    #[test]
    fn xor_is_bitwise() {
        let a = BitVector::from_indices(70, &[0, 3, 69]);
        let b = BitVector::from_indices(70, &[3, 5]);
        let c = &a ^ &b;
        assert_eq!(c.support(), vec![0, 5, 69]);
    }

    #[test]
    fn set_and_clear() {
        let mut v = BitVector::zeros(10);
        v.set(9, true);
        assert!(v.get(9));
        v.set(9, false);
        assert!(!v.get(9));
        assert_eq!(v.weight(), 0);
    }
}
