//! Polynomials over F2, bit-packed with bit i holding the coefficient of t^i.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct F2Poly {
    words: Vec<u64>,
}

impl F2Poly {
    fn trim(mut self) -> Self {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
        self
    }

    pub fn zero() -> Self {
        F2Poly::default()
    }

    pub fn monomial(k: usize) -> Self {
        let mut words = vec![0u64; k / 64 + 1];
        words[k / 64] = 1 << (k % 64);
        F2Poly { words }
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        for (i, b) in bits.into_iter().enumerate() {
            if i / 64 >= words.len() {
                words.push(0);
            }
            if b {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        F2Poly { words }.trim()
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn degree(&self) -> Option<usize> {
        let last = self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    /// `Some(k)` when the polynomial is exactly t^k.
    pub fn as_monomial(&self) -> Option<usize> {
        let ones: u32 = self.words.iter().map(|w| w.count_ones()).sum();
        if ones == 1 {
            self.degree()
        } else {
            None
        }
    }

    pub fn add(&self, other: &F2Poly) -> F2Poly {
        let n = self.words.len().max(other.words.len());
        let words = (0..n)
            .map(|i| self.words.get(i).copied().unwrap_or(0) ^ other.words.get(i).copied().unwrap_or(0))
            .collect();
        F2Poly { words }.trim()
    }

    pub fn mul(&self, other: &F2Poly) -> F2Poly {
        let (Some(da), Some(db)) = (self.degree(), other.degree()) else {
            return F2Poly::zero();
        };
        let mut bits = vec![false; da + db + 1];
        for i in (0..=da).filter(|&i| self.coeff(i)) {
            for j in (0..=db).filter(|&j| other.coeff(j)) {
                bits[i + j] ^= true;
            }
        }
        F2Poly::from_bits(bits)
    }
}

impl fmt::Display for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(deg) = self.degree() else {
            return write!(f, "0");
        };
        let terms: Vec<String> = (0..=deg)
            .rev()
            .filter(|&i| self.coeff(i))
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "t".to_string(),
                i => format!("t^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_square_in_characteristic_two() {
        let p = F2Poly::from_bits([true, true]);
        assert_eq!(p.mul(&p), F2Poly::from_bits([true, false, true]));
        assert_eq!(F2Poly::monomial(70).as_monomial(), Some(70));
        assert_eq!(F2Poly::monomial(3).to_string(), "t^3");
    }
}
