//! Minimal polynomials of `ζ + ζ⁻¹` for 2-power roots of unity, their product
//! `p_{d+1}`, and the quotient S′ of the τ-fixed part of the cyclic group ring
//! on which `t ↦ σ + σ⁻¹` is checked to be an isomorphism.

use serde::Serialize;

use crate::arith::{F2Poly, WittPoly, WittScalar};
use crate::error::{Error, Result};

pub const PRECISION_ENV: &str = "QUIVERDEF_PRECISION";

/// Default working precision `m` (arithmetic in Z/2^m) for parameter `d`.
pub fn default_precision(d: u32) -> u32 {
    2 * d + 4
}

/// `QUIVERDEF_PRECISION` if set, else [`default_precision`].
pub fn precision_from_env(d: u32) -> Result<u32> {
    match std::env::var(PRECISION_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Parse { pos: 0, msg: format!("{PRECISION_ENV}={s:?} is not an integer") }),
        Err(_) => Ok(default_precision(d)),
    }
}

fn check_d(d: u32) -> Result<()> {
    if (2..=12).contains(&d) {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("d = {d} outside 2..=12")))
    }
}

/// `m_2, ..., m_d` with `m_2 = t` and `m_l = m_{l-1}^2 - 2`.
#[derive(Clone, Debug)]
pub struct MinPolyTower {
    pub d: u32,
    pub precision: u32,
    pub polys: Vec<WittPoly>,
}

impl MinPolyTower {
    pub fn new(d: u32, precision: u32) -> Result<Self> {
        check_d(d)?;
        let two = WittPoly::from_coeffs(&[2], precision)?;
        let mut polys = vec![WittPoly::t(precision)?];
        for _ in 3..=d {
            let prev = polys.last().expect("tower starts with t");
            polys.push(prev.mul(prev)?.sub(&two)?);
        }
        Ok(MinPolyTower { d, precision, polys })
    }

    /// `m_l` for `2 ≤ l ≤ d`.
    pub fn get(&self, l: u32) -> &WittPoly {
        &self.polys[(l - 2) as usize]
    }
}

/// `p_{d+1} = m_2 · m_3 ⋯ m_d`, given `d_plus_1 = d + 1`.
pub fn p_poly(d_plus_1: u32, precision: u32) -> Result<WittPoly> {
    let d = d_plus_1.checked_sub(1).ok_or_else(|| Error::Unsupported("d + 1 must be at least 3".into()))?;
    let tower = MinPolyTower::new(d, precision)?;
    let mut p = WittPoly::one(precision)?;
    for m in &tower.polys {
        p = p.mul(m)?;
    }
    Ok(p)
}

pub fn mod2_reduction(p: &WittPoly) -> F2Poly {
    p.mod2()
}

/// Raw Z/2^m vector arithmetic.
fn wmask(m: u32) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

/// `S′ = (WZ)^τ / (T(σ²), σT(σ²))` for Z cyclic of order `2^d`, with basis
/// `1, σ^j + σ^{-j}` for `1 ≤ j ≤ 2^{d-1} - 2`.
#[derive(Clone, Debug, Serialize)]
pub struct FixedSubringQuotient {
    pub d: u32,
    pub precision: u32,
    /// Basis element `k` is `σ^k + σ^{-k}` (and `1` for `k = 0`).
    pub basis_exponents: Vec<usize>,
    /// `table[i][j]` = coordinates of `b_i b_j`.
    pub table: Vec<Vec<Vec<u64>>>,
    /// Coordinates of `σ + σ⁻¹`.
    pub s: Vec<u64>,
}

impl FixedSubringQuotient {
    pub fn rank(&self) -> usize {
        self.basis_exponents.len()
    }

    fn order(&self) -> usize {
        1 << self.d
    }

    /// Group-ring coordinates of a basis element.
    fn embed(&self, k: usize) -> Vec<u64> {
        let n = self.order();
        let mut v = vec![0u64; n];
        v[k % n] = v[k % n].wrapping_add(1);
        if k != 0 {
            v[(n - k) % n] = v[(n - k) % n].wrapping_add(1);
        }
        v
    }

    /// Reduces a τ-fixed group-ring element to S′ coordinates, subtracting
    /// multiples of `T(σ²)` (unit coefficient at `σ^{n/2}`) and `σT(σ²)`
    /// (unit coefficient at `σ^{n/2-1}`).
    fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let n = self.order();
        let mask = wmask(self.precision);
        let mut v = v.to_vec();
        let c = v[n / 2];
        for k in (0..n).step_by(2) {
            v[k] = v[k].wrapping_sub(c);
        }
        let c = v[n / 2 - 1];
        for k in (1..n).step_by(2) {
            v[k] = v[k].wrapping_sub(c);
        }
        debug_assert!((1..n).all(|k| (v[k] ^ v[n - k]) & mask == 0), "not tau-fixed");
        self.basis_exponents.iter().map(|&k| v[k] & mask).collect()
    }

    pub fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let r = self.rank();
        let mask = wmask(self.precision);
        let mut out = vec![0u64; r];
        for i in 0..r {
            if x[i] == 0 {
                continue;
            }
            for j in 0..r {
                let c = x[i].wrapping_mul(y[j]);
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    *o = o.wrapping_add(c.wrapping_mul(*t));
                }
            }
        }
        out.iter().map(|v| v & mask).collect()
    }

    pub fn one(&self) -> Vec<u64> {
        let mut v = vec![0; self.rank()];
        v[0] = 1;
        v
    }
}

fn convolve(a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len();
    let mut out = vec![0u64; n];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[(i + j) % n] = out[(i + j) % n].wrapping_add(x.wrapping_mul(y));
        }
    }
    out
}

#[allow(non_snake_case)]
pub fn build_S_prime(d: u32, precision: u32) -> Result<FixedSubringQuotient> {
    check_d(d)?;
    WittScalar::new(0, precision)?;
    let n = 1usize << d;
    let mut s = FixedSubringQuotient {
        d,
        precision,
        basis_exponents: (0..=n / 2 - 2).collect(),
        table: Vec::new(),
        s: Vec::new(),
    };
    let r = s.rank();
    let mut table = vec![vec![Vec::new(); r]; r];
    for i in 0..r {
        for j in 0..r {
            let prod = convolve(&s.embed(s.basis_exponents[i]), &s.embed(s.basis_exponents[j]));
            table[i][j] = s.reduce(&prod);
        }
    }
    s.table = table;
    s.s = s.reduce(&s.embed(1));
    Ok(s)
}

/// Witness that `t ↦ σ + σ⁻¹` induces `W[t]/(p_{d+1}) ≅ S′` at precision `2^m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SPrimeWitness {
    pub d: u32,
    pub precision: u32,
    pub rank: usize,
    /// Coordinates of `p_{d+1}(σ + σ⁻¹)` in S′.
    pub p_at_s: Vec<u64>,
    /// Column `j` holds the coordinates of `(σ + σ⁻¹)^j`.
    pub change_of_basis: Vec<Vec<u64>>,
    pub determinant: u64,
    /// 2-adic valuation of the determinant, `precision` when it vanishes.
    pub determinant_valuation: u32,
}

impl SPrimeWitness {
    pub fn evaluation_vanishes(&self) -> bool {
        self.p_at_s.iter().all(|&c| c == 0)
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant_valuation == 0
    }

    pub fn passes(&self) -> bool {
        self.evaluation_vanishes() && self.is_unimodular() && self.rank == (1 << (self.d - 1)) - 1
    }

    /// The same witness read at a lower precision.
    pub fn truncate(&self, precision: u32) -> SPrimeWitness {
        let m = wmask(precision);
        SPrimeWitness {
            d: self.d,
            precision,
            rank: self.rank,
            p_at_s: self.p_at_s.iter().map(|c| c & m).collect(),
            change_of_basis: self.change_of_basis.iter().map(|row| row.iter().map(|c| c & m).collect()).collect(),
            determinant: self.determinant & m,
            determinant_valuation: self.determinant_valuation.min(precision),
        }
    }
}

/// Determinant over Z/2^m and its 2-adic valuation, by elimination with a
/// pivot of least valuation in each column.
pub fn det_mod_2m(matrix: &[Vec<u64>], precision: u32) -> (u64, u32) {
    let mask = wmask(precision);
    let n = matrix.len();
    let mut a: Vec<Vec<u64>> = matrix.iter().map(|r| r.iter().map(|x| x & mask).collect()).collect();
    let val = |x: u64| if x & mask == 0 { precision } else { x.trailing_zeros().min(precision) };
    let mut det = 1u64;
    let mut total_val = 0u32;
    for c in 0..n {
        let Some(p) = (c..n).min_by_key(|&i| val(a[i][c])) else { break };
        if val(a[p][c]) >= precision {
            return (0, precision);
        }
        if p != c {
            a.swap(p, c);
            det = det.wrapping_neg();
        }
        let v = val(a[c][c]);
        total_val += v;
        let unit = a[c][c] >> v;
        let inv = inverse_odd(unit);
        det = det.wrapping_mul(a[c][c]);
        for i in c + 1..n {
            if a[i][c] == 0 {
                continue;
            }
            // a[i][c] = 2^v * q for some q since v is minimal
            let f = (a[i][c] >> v).wrapping_mul(inv);
            for j in c..n {
                let sub = f.wrapping_mul(a[c][j]);
                a[i][j] = a[i][j].wrapping_sub(sub) & mask;
            }
        }
    }
    (det & mask, total_val.min(precision))
}

/// Inverse of an odd number modulo 2^64 (Newton iteration).
fn inverse_odd(u: u64) -> u64 {
    let mut x = u;
    for _ in 0..6 {
        x = x.wrapping_mul(2u64.wrapping_sub(u.wrapping_mul(x)));
    }
    x
}

pub fn verify_s_prime_iso(d: u32, precision: u32) -> Result<SPrimeWitness> {
    let sp = build_S_prime(d, precision)?;
    let p = p_poly(d + 1, precision)?;
    let r = sp.rank();
    let mut powers = vec![sp.one()];
    let deg = p.degree().unwrap_or(0);
    while powers.len() <= deg.max(r) {
        let next = sp.mul(powers.last().expect("nonempty"), &sp.s);
        powers.push(next);
    }
    let mask = wmask(precision);
    let mut p_at_s = vec![0u64; r];
    for (j, c) in p.raw_coefficients().iter().enumerate() {
        for (o, x) in p_at_s.iter_mut().zip(&powers[j]) {
            *o = o.wrapping_add(c.wrapping_mul(*x)) & mask;
        }
    }
    // rows = basis coordinates, columns = powers
    let change_of_basis: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|j| powers[j][i]).collect()).collect();
    let (determinant, determinant_valuation) = det_mod_2m(&change_of_basis, precision);
    Ok(SPrimeWitness { d, precision, rank: r, p_at_s, change_of_basis, determinant, determinant_valuation })
}

/// Everything the `witt` command reports for one `d`.
#[derive(Clone, Debug, Serialize)]
pub struct WittSummary {
    pub d: u32,
    pub precision: u32,
    pub p_coefficients: Vec<String>,
    pub p_display: String,
    pub mod2: String,
    pub s_prime_rank: usize,
    pub s_prime_iso: bool,
    pub determinant_valuation: u32,
}

pub fn witt_summary(d: u32, precision: u32) -> Result<WittSummary> {
    let p = p_poly(d + 1, precision)?;
    let w = verify_s_prime_iso(d, precision)?;
    Ok(WittSummary {
        d,
        precision,
        p_coefficients: p.signed_coefficients().iter().map(|c| c.to_string()).collect(),
        p_display: p.to_string(),
        mod2: mod2_reduction(&p).to_string(),
        s_prime_rank: w.rank,
        s_prime_iso: w.passes(),
        determinant_valuation: w.determinant_valuation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tower_recursion() {
        let t = MinPolyTower::new(4, 16).unwrap();
        assert_eq!(t.get(3).signed_coefficients(), vec![-2, 0, 1]);
        assert_eq!(t.get(4).signed_coefficients(), vec![2, 0, -4, 0, 1]);
    }

    #[test]
    fn determinant_of_small_matrices() {
        assert_eq!(det_mod_2m(&[vec![1, 2], vec![3, 4]], 8), (254, 1));
        assert_eq!(det_mod_2m(&[vec![2, 0], vec![0, 2]], 8), (4, 2));
        assert_eq!(det_mod_2m(&[vec![0, 0], vec![0, 1]], 8), (0, 8));
    }

    #[test]
    fn odd_inverse() {
        for u in [1u64, 3, 5, 12345, u64::MAX] {
            assert_eq!(u.wrapping_mul(inverse_odd(u)), 1);
        }
    }

    #[test]
    fn s_prime_at_d2_is_one_dimensional_and_kills_s() {
        let s = build_S_prime(2, 8).unwrap();
        assert_eq!(s.rank(), 1);
        assert_eq!(s.s, vec![0]);
    }
}
