//! Packed bit strings.
//!
//! Payloads and erasure masks are plain bit strings with value semantics.
//! Bits beyond `len` in the last word are kept zero so equality and hashing
//! work structurally.

use std::fmt;

use rand::Rng;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitString {
    len: usize,
    words: Vec<u64>,
}

impl BitString {
    pub fn new() -> Self {
        BitString::default()
    }

    pub fn zeros(len: usize) -> Self {
        BitString {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut s = BitString::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            s.set(i, b);
        }
        s
    }

    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut s = BitString::zeros(len);
        for i in 0..len {
            s.set(i, f(i));
        }
        s
    }

    /// Uniform random bits drawn from `rng`, one word draw per 64 bits.
    pub fn random(rng: &mut impl Rng, len: usize) -> Self {
        let mut s = BitString {
            len,
            words: (0..len.div_ceil(64)).map(|_| rng.random::<u64>()).collect(),
        };
        s.mask_tail();
        s
    }

    /// Packs bytes MSB-first, so byte 0xA0 yields bits 1,0,1,0,0,0,0,0.
    pub fn from_bytes(bytes: &[u8]) -> Self {
        BitString::from_fn(bytes.len() * 8, |i| bytes[i / 8] >> (7 - i % 8) & 1 == 1)
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = vec![0u8; self.len.div_ceil(8)];
        for i in 0..self.len {
            if self.get(i) {
                out[i / 8] |= 1 << (7 - i % 8);
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        let v = self.get(i);
        self.set(i, !v);
    }

    pub fn push(&mut self, value: bool) {
        if self.len % 64 == 0 {
            self.words.push(0);
        }
        self.len += 1;
        self.set(self.len - 1, value);
    }

    pub fn extend_from(&mut self, other: &BitString) {
        for b in other.iter() {
            self.push(b);
        }
    }

    pub fn slice(&self, start: usize, len: usize) -> BitString {
        assert!(start + len <= self.len);
        BitString::from_fn(len, |i| self.get(start + i))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn any(&self) -> bool {
        self.words.iter().any(|&w| w != 0)
    }

    /// Number of positions where the two strings differ.
    pub fn diff_count(&self, other: &BitString) -> usize {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(|i| self.get(i))
    }

    fn mask_tail(&mut self) {
        let tail = self.len % 64;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString[{}](", self.len)?;
        for b in self.iter().take(64) {
            write!(f, "{}", b as u8)?;
        }
        if self.len > 64 {
            write!(f, "…")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn push_get_set() {
        let mut s = BitString::new();
        for i in 0..130 {
            s.push(i % 3 == 0);
        }
        assert_eq!(s.len(), 130);
        for i in 0..130 {
            assert_eq!(s.get(i), i % 3 == 0);
        }
        s.set(129, true);
        assert!(s.get(129));
    }

    #[test]
    fn equality_ignores_tail_garbage() {
        let mut a = BitString::zeros(65);
        let b = BitString::zeros(65);
        a.set(64, true);
        a.set(64, false);
        assert_eq!(a, b);
        assert_eq!(a.count_ones(), 0);
    }

    #[test]
    fn slice_and_concat_round_trip() {
        let s = BitString::from_fn(200, |i| i % 7 < 3);
        let mut rebuilt = BitString::new();
        rebuilt.extend_from(&s.slice(0, 77));
        rebuilt.extend_from(&s.slice(77, 123));
        assert_eq!(rebuilt, s);
    }

    #[test]
    fn byte_round_trip() {
        let bytes = [0xA0u8, 0xFF, 0x01, 0x00];
        let s = BitString::from_bytes(&bytes);
        assert!(s.get(0));
        assert!(!s.get(1));
        assert_eq!(s.to_bytes(), bytes);
    }

    #[test]
    fn diff_count_counts_flips() {
        let a = BitString::from_fn(100, |i| i % 2 == 0);
        let mut b = a.clone();
        b.flip(3);
        b.flip(97);
        assert_eq!(a.diff_count(&b), 2);
    }
}
