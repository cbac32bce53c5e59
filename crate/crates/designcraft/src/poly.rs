//! Polynomials over GF(2), bit-packed.
//!
//! Coefficients are stored lowest degree first: bit `j` of word `i` is the
//! coefficient of `x^(64*i + j)`. The zero polynomial has no degree and is
//! kept as an empty word vector.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BinaryPoly {
    words: Vec<u64>,
}

impl BinaryPoly {
    pub fn zero() -> Self {
        BinaryPoly { words: Vec::new() }
    }

    pub fn one() -> Self {
        BinaryPoly { words: vec![1] }
    }

    /// The monomial `x^d`.
    pub fn monomial(d: usize) -> Self {
        let mut p = BinaryPoly { words: vec![0; d / 64 + 1] };
        p.words[d / 64] |= 1u64 << (d % 64);
        p
    }

    /// `x^n + 1`.
    pub fn x_pow_plus_one(n: usize) -> Self {
        let mut p = Self::monomial(n);
        p.words[0] ^= 1;
        p
    }

    /// Builds a polynomial from its low coefficient bits packed into a `u64`
    /// (bit `j` = coefficient of `x^j`).
    pub fn from_encoding(bits: u64) -> Self {
        let mut p = BinaryPoly { words: vec![bits] };
        p.trim();
        p
    }

    /// The packed encoding, when the degree fits in one word.
    pub fn encoding(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn from_coeff_indices(indices: &[usize]) -> Self {
        let mut p = BinaryPoly::zero();
        for &d in indices {
            p.flip_coeff(d);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + (63 - last.leading_zeros() as usize))
    }

    pub fn coeff(&self, j: usize) -> bool {
        self.words.get(j / 64).is_some_and(|w| w >> (j % 64) & 1 == 1)
    }

    fn flip_coeff(&mut self, j: usize) {
        if self.words.len() <= j / 64 {
            self.words.resize(j / 64 + 1, 0);
        }
        self.words[j / 64] ^= 1u64 << (j % 64);
        self.trim();
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w ^= s;
        }
        let mut p = BinaryPoly { words };
        p.trim();
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let deg = self.degree().unwrap() + other.degree().unwrap();
        let mut words = vec![0u64; deg / 64 + 1];
        for (i, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let shift = i * 64 + j;
                let (wi, bi) = (shift / 64, shift % 64);
                for (t, &o) in other.words.iter().enumerate() {
                    words[wi + t] ^= o << bi;
                    if bi != 0 && wi + t + 1 < words.len() {
                        words[wi + t + 1] ^= o >> (64 - bi);
                    }
                }
            }
        }
        let mut p = BinaryPoly { words };
        p.trim();
        p
    }

    /// Quotient and remainder of `self / divisor`.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = BinaryPoly::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            quot.flip_coeff(shift);
            rem = rem.add(&divisor.shifted(shift));
        }
        (quot, rem)
    }

    /// `self * x^shift`.
    fn shifted(&self, shift: usize) -> Self {
        if self.is_zero() || shift == 0 {
            return self.clone();
        }
        let (wi, bi) = (shift / 64, shift % 64);
        let mut words = vec![0u64; self.words.len() + wi + 1];
        for (t, &w) in self.words.iter().enumerate() {
            words[wi + t] ^= w << bi;
            if bi != 0 {
                words[wi + t + 1] ^= w >> (64 - bi);
            }
        }
        let mut p = BinaryPoly { words };
        p.trim();
        p
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.divrem(self).1.is_zero()
    }

    /// Coefficient indices with a set bit, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                out.push(i * 64 + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }
}

impl fmt::Display for BinaryPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for d in self.support().into_iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "1")?,
                1 => write!(f, "x")?,
                _ => write!(f, "x^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Schoolbook reference ops on coefficient vectors, independent of the
    /// packed representation.
    fn naive_mul(a: &[u8], b: &[u8]) -> Vec<u8> {
        let mut out = vec![0u8; a.len() + b.len()];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] ^= x & y;
            }
        }
        out
    }

    fn naive_rem(a: &[u8], b: &[u8]) -> Vec<u8> {
        let mut r: Vec<u8> = a.to_vec();
        let db = b.iter().rposition(|&c| c == 1).unwrap();
        loop {
            let da = match r.iter().rposition(|&c| c == 1) {
                Some(d) if d >= db => d,
                _ => break,
            };
            for j in 0..=db {
                r[da - db + j] ^= b[j];
            }
        }
        r
    }

    fn to_bits(p: &BinaryPoly, len: usize) -> Vec<u8> {
        (0..len).map(|j| p.coeff(j) as u8).collect()
    }

    fn from_bits(bits: &[u8]) -> BinaryPoly {
        BinaryPoly::from_coeff_indices(
            &bits.iter().enumerate().filter(|(_, &b)| b == 1).map(|(i, _)| i).collect::<Vec<_>>(),
        )
    }

    #[test]
    fn degree_and_zero() {
        assert_eq!(BinaryPoly::zero().degree(), None);
        assert_eq!(BinaryPoly::one().degree(), Some(0));
        assert_eq!(BinaryPoly::monomial(64).degree(), Some(64));
        assert_eq!(BinaryPoly::x_pow_plus_one(127).degree(), Some(127));
        assert!(BinaryPoly::x_pow_plus_one(127).coeff(0));
    }

    #[test]
    fn mul_matches_schoolbook() {
        // deterministic pseudo-random coefficient patterns across word
        // boundaries
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for len in [3usize, 17, 63, 64, 65, 130] {
            let a: Vec<u8> = (0..len).map(|_| (next() & 1) as u8).collect();
            let b: Vec<u8> = (0..len).map(|_| (next() & 1) as u8).collect();
            let prod = from_bits(&a).mul(&from_bits(&b));
            assert_eq!(to_bits(&prod, 2 * len), naive_mul(&a, &b));
        }
    }

    #[test]
    fn divrem_matches_schoolbook() {
        let a = BinaryPoly::from_coeff_indices(&[0, 2, 5, 8, 67, 100]);
        let b = BinaryPoly::from_coeff_indices(&[0, 1, 3]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 3);
        let expect_r = naive_rem(&to_bits(&a, 101), &to_bits(&b, 4));
        assert_eq!(to_bits(&r, 101), expect_r[..101]);
    }

    #[test]
    fn x8_mod_modulus_of_degree_5() {
        // x^8 mod (x^5 + x^2 + 1) = x^3 + x^2 + 1
        let m = BinaryPoly::from_encoding(0b100101);
        let (_, r) = BinaryPoly::monomial(8).divrem(&m);
        assert_eq!(r, BinaryPoly::from_encoding(0b1101));
    }

    #[test]
    fn display_readable() {
        assert_eq!(BinaryPoly::from_encoding(0b100101).to_string(), "x^5 + x^2 + 1");
        assert_eq!(BinaryPoly::from_encoding(0b11).to_string(), "x + 1");
        assert_eq!(BinaryPoly::zero().to_string(), "0");
    }
}
