//! Truncated Witt vectors of F2: integers modulo 2^m, and polynomials over them.

use std::fmt;

use crate::arith::f2poly::F2Poly;
use crate::error::{Error, Result};

pub const MAX_PRECISION: u32 = 64;

#[inline]
pub(crate) fn mask(m: u32) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

fn check_precision(m: u32) -> Result<()> {
    if (1..=MAX_PRECISION).contains(&m) {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("precision 2^{m} outside 1..={MAX_PRECISION}")))
    }
}

/// An element of Z/2^m.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct WittScalar {
    value: u64,
    precision: u32,
}

impl WittScalar {
    pub fn new(value: i64, precision: u32) -> Result<Self> {
        check_precision(precision)?;
        Ok(Self::from_raw(value as u64, precision))
    }

    pub(crate) fn from_raw(value: u64, precision: u32) -> Self {
        WittScalar { value: value & mask(precision), precision }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// Representative in the symmetric range (-2^(m-1), 2^(m-1)].
    pub fn signed(&self) -> i128 {
        let modulus = 1i128 << self.precision;
        let v = self.value as i128;
        if v > modulus / 2 {
            v - modulus
        } else {
            v
        }
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// 2-adic valuation, or `None` for zero.
    pub fn valuation(&self) -> Option<u32> {
        (self.value != 0).then(|| self.value.trailing_zeros())
    }

    fn same(&self, other: &Self) -> Result<()> {
        if self.precision == other.precision {
            Ok(())
        } else {
            Err(Error::PrecisionMismatch(self.precision, other.precision))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(Self::from_raw(self.value.wrapping_add(other.value), self.precision))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(Self::from_raw(self.value.wrapping_sub(other.value), self.precision))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(Self::from_raw(self.value.wrapping_mul(other.value), self.precision))
    }

    pub fn neg(&self) -> Self {
        Self::from_raw(self.value.wrapping_neg(), self.precision)
    }

    /// Reduction to a smaller precision.
    pub fn truncate(&self, precision: u32) -> Result<Self> {
        check_precision(precision)?;
        if precision > self.precision {
            return Err(Error::PrecisionMismatch(self.precision, precision));
        }
        Ok(Self::from_raw(self.value, precision))
    }
}

impl fmt::Debug for WittScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod 2^{}", self.value, self.precision)
    }
}

impl fmt::Display for WittScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signed())
    }
}

/// A polynomial over Z/2^m with coefficients in ascending degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WittPoly {
    coeffs: Vec<u64>,
    precision: u32,
}

impl WittPoly {
    fn normalized(mut coeffs: Vec<u64>, precision: u32) -> Self {
        let mk = mask(precision);
        for c in coeffs.iter_mut() {
            *c &= mk;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        WittPoly { coeffs, precision }
    }

    /// Builds a polynomial from signed integer coefficients, lowest degree first.
    pub fn from_coeffs(coeffs: &[i64], precision: u32) -> Result<Self> {
        check_precision(precision)?;
        Ok(Self::normalized(coeffs.iter().map(|&c| c as u64).collect(), precision))
    }

    pub fn from_scalars(coeffs: &[WittScalar], precision: u32) -> Result<Self> {
        check_precision(precision)?;
        if let Some(c) = coeffs.iter().find(|c| c.precision != precision) {
            return Err(Error::PrecisionMismatch(c.precision, precision));
        }
        Ok(Self::normalized(coeffs.iter().map(|c| c.value).collect(), precision))
    }

    pub fn zero(precision: u32) -> Result<Self> {
        Self::from_coeffs(&[], precision)
    }

    pub fn one(precision: u32) -> Result<Self> {
        Self::from_coeffs(&[1], precision)
    }

    /// The indeterminate t.
    pub fn t(precision: u32) -> Result<Self> {
        Self::from_coeffs(&[0, 1], precision)
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> WittScalar {
        WittScalar::from_raw(self.coeffs.get(i).copied().unwrap_or(0), self.precision)
    }

    pub fn coefficients(&self) -> Vec<WittScalar> {
        (0..self.coeffs.len()).map(|i| self.coeff(i)).collect()
    }

    /// Raw residues in [0, 2^m), ascending degree.
    pub fn raw_coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    /// Symmetric representatives, ascending degree.
    pub fn signed_coefficients(&self) -> Vec<i128> {
        self.coefficients().iter().map(|c| c.signed()).collect()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn same(&self, other: &Self) -> Result<()> {
        if self.precision == other.precision {
            Ok(())
        } else {
            Err(Error::PrecisionMismatch(self.precision, other.precision))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                a.wrapping_add(b)
            })
            .collect();
        Ok(Self::normalized(c, self.precision))
    }

    pub fn neg(&self) -> Self {
        Self::normalized(self.coeffs.iter().map(|c| c.wrapping_neg()).collect(), self.precision)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        witt_poly_mul(self, other)
    }

    pub fn scale(&self, s: &WittScalar) -> Result<Self> {
        if s.precision != self.precision {
            return Err(Error::PrecisionMismatch(self.precision, s.precision));
        }
        Ok(Self::normalized(self.coeffs.iter().map(|c| c.wrapping_mul(s.value)).collect(), self.precision))
    }

    /// Coefficientwise reduction modulo 2.
    pub fn mod2(&self) -> F2Poly {
        F2Poly::from_bits(self.coeffs.iter().map(|c| c & 1 == 1))
    }

    /// Reduction to a smaller precision.
    pub fn truncate(&self, precision: u32) -> Result<Self> {
        check_precision(precision)?;
        if precision > self.precision {
            return Err(Error::PrecisionMismatch(self.precision, precision));
        }
        Ok(Self::normalized(self.coeffs.clone(), precision))
    }
}

/// Product of two polynomials over Z/2^m.
pub fn witt_poly_mul(a: &WittPoly, b: &WittPoly) -> Result<WittPoly> {
    a.same(b)?;
    if a.is_zero() || b.is_zero() {
        return Ok(WittPoly { coeffs: Vec::new(), precision: a.precision });
    }
    let mut c = vec![0u64; a.coeffs.len() + b.coeffs.len() - 1];
    for (i, &x) in a.coeffs.iter().enumerate() {
        for (j, &y) in b.coeffs.iter().enumerate() {
            c[i + j] = c[i + j].wrapping_add(x.wrapping_mul(y));
        }
    }
    Ok(WittPoly::normalized(c, a.precision))
}

impl fmt::Debug for WittPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (mod 2^{})", self.precision)
    }
}

impl fmt::Display for WittPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.signed_coefficients().iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            let (neg, abs) = (*c < 0, c.unsigned_abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (i, abs) {
                (0, a) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, a) => write!(f, "{a}t")?,
                (i, 1) => write!(f, "t^{i}")?,
                (i, a) => write!(f, "{a}t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_squared() {
        let t = WittPoly::t(8).unwrap();
        assert_eq!(witt_poly_mul(&t, &t).unwrap(), WittPoly::from_coeffs(&[0, 0, 1], 8).unwrap());
    }

    #[test]
    fn t_times_t2_minus_2() {
        let t = WittPoly::t(8).unwrap();
        let q = WittPoly::from_coeffs(&[-2, 0, 1], 8).unwrap();
        let p = witt_poly_mul(&t, &q).unwrap();
        assert_eq!(p.raw_coefficients(), &[0, 254, 0, 1]);
        assert_eq!(p.to_string(), "t^3 - 2t");
    }

    #[test]
    fn square_of_t2_minus_2() {
        let q = WittPoly::from_coeffs(&[-2, 0, 1], 16).unwrap();
        let p = witt_poly_mul(&q, &q).unwrap();
        assert_eq!(p.signed_coefficients(), vec![4, 0, -4, 0, 1]);
    }

    #[test]
    fn precision_mismatch_is_an_error() {
        let a = WittPoly::t(8).unwrap();
        let b = WittPoly::t(16).unwrap();
        assert_eq!(witt_poly_mul(&a, &b), Err(Error::PrecisionMismatch(8, 16)));
        let x = WittScalar::new(3, 8).unwrap();
        let y = WittScalar::new(3, 9).unwrap();
        assert!(x.add(&y).is_err());
    }

    #[test]
    fn full_width_precision_wraps() {
        let a = WittScalar::new(-1, 64).unwrap();
        assert_eq!(a.mul(&a).unwrap().value(), 1);
        assert_eq!(WittScalar::new(5, 1).unwrap().value(), 1);
        assert!(WittScalar::new(1, 0).is_err());
        assert!(WittScalar::new(1, 65).is_err());
    }

    #[test]
    fn leading_zero_coefficients_are_trimmed() {
        let p = WittPoly::from_coeffs(&[1, 2, 256], 8).unwrap();
        assert_eq!(p.degree(), Some(1));
    }
}
