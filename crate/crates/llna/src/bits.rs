//! Fixed-length binary sequences packed into 64-bit words.
//!
//! The automaton state, the rows and columns of the spatio-temporal matrix
//! and every binary sequence fed to the feature measurements use this
//! representation.

/// A packed bit sequence of known length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    /// All-zero sequence of length `len`.
    pub fn zeros(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut b = Bits::zeros(bits.len());
        for (i, &v) in bits.iter().enumerate() {
            if v {
                b.set(i, true);
            }
        }
        b
    }

    /// Parse a string of '0'/'1' characters.
    pub fn from_str01(s: &str) -> Self {
        let bools: Vec<bool> = s
            .chars()
            .filter(|c| *c == '0' || *c == '1')
            .map(|c| c == '1')
            .collect();
        Bits::from_bools(&bools)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i & 63);
        if v {
            self.words[i >> 6] |= mask;
        } else {
            self.words[i >> 6] &= !mask;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Bitwise complement (within the sequence length).
    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        out.mask_tail();
        out
    }

    /// Fill from a raw RNG word stream; trailing bits beyond `len` are cleared.
    pub fn fill_from_words(&mut self, mut next: impl FnMut() -> u64) {
        for w in &mut self.words {
            *w = next();
        }
        self.mask_tail();
    }

    fn mask_tail(&mut self) {
        let tail = self.len & 63;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Positionwise agreement counts against another sequence of equal
    /// length: (a, b, c, d) = (#11, #01, #10, #00).
    pub fn pair_counts(&self, other: &Bits) -> (usize, usize, usize, usize) {
        assert_eq!(self.len, other.len);
        let mut a = 0usize;
        let mut b = 0usize;
        let mut c = 0usize;
        for (p, q) in self.words.iter().zip(&other.words) {
            a += (p & q).count_ones() as usize;
            b += (!p & q).count_ones() as usize;
            c += (p & !q).count_ones() as usize;
        }
        // b and c counted over whole words; tail bits are zero in both, so
        // only the d count needs the length correction.
        let d = self.len - a - b - c;
        (a, b, c, d)
    }
}

impl std::fmt::Display for Bits {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_counts() {
        let b = Bits::from_str01("110100111");
        assert_eq!(b.len(), 9);
        assert_eq!(b.count_ones(), 6);
        assert_eq!(b.to_string(), "110100111");
    }

    #[test]
    fn complement_masks_tail() {
        let b = Bits::from_str01("101");
        let c = b.complement();
        assert_eq!(c.to_string(), "010");
        assert_eq!(c.count_ones(), 1);
    }

    #[test]
    fn pair_counts_match_naive() {
        let p = Bits::from_str01("1100");
        let q = Bits::from_str01("1010");
        assert_eq!(p.pair_counts(&q), (1, 1, 1, 1));
    }

    #[test]
    fn pair_counts_long() {
        let p = Bits::from_bools(&(0..200).map(|i| i % 3 == 0).collect::<Vec<_>>());
        let q = Bits::from_bools(&(0..200).map(|i| i % 7 == 0).collect::<Vec<_>>());
        let (a, b, c, d) = p.pair_counts(&q);
        let mut n = [0usize; 4];
        for i in 0..200 {
            let (x, y) = (i % 3 == 0, i % 7 == 0);
            n[match (x, y) {
                (true, true) => 0,
                (false, true) => 1,
                (true, false) => 2,
                (false, false) => 3,
            }] += 1;
        }
        assert_eq!((a, b, c, d), (n[0], n[1], n[2], n[3]));
    }
}
