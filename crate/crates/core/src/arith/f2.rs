//! Bit-packed vectors and matrices over the two-element field.
//!
//! Rows are stored as contiguous runs of `u64` words. Column vectors are
//! acted on from the left (`m * v`), so a matrix of a linear map `V -> W`
//! has `dim W` rows and `dim V` columns.

use std::fmt;

use crate::error::{Error, Result};

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

#[inline]
fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

/// A vector over F2 of fixed length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vec {
    len: usize,
    words: Vec<u64>,
}

impl F2Vec {
    pub fn zeros(len: usize) -> Self {
        F2Vec { len, words: vec![0; words_for(len)] }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = Self::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Parses a string of `0`/`1` characters.
    pub fn from_bit_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for (pos, c) in s.chars().enumerate() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return Err(Error::Parse { pos, msg: format!("expected 0 or 1, found {c:?}") }),
            }
        }
        Ok(Self::from_bits(bits))
    }

    pub(crate) fn from_words(len: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(len));
        F2Vec { len, words }
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
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, b: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if b {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn xor_assign(&mut self, other: &F2Vec) {
        assert_eq!(self.len, other.len, "vector length mismatch");
        xor_into(&mut self.words, &other.words);
    }

    pub fn dot(&self, other: &F2Vec) -> bool {
        assert_eq!(self.len, other.len, "vector length mismatch");
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum::<u32>() % 2 == 1
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + t)
                }
            })
        })
    }

    pub fn to_bit_string(&self) -> String {
        (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }

    /// Concatenation `self ++ other`.
    pub fn concat(&self, other: &F2Vec) -> F2Vec {
        let mut v = F2Vec::zeros(self.len + other.len);
        for i in self.iter_ones() {
            v.set(i, true);
        }
        for i in other.iter_ones() {
            v.set(self.len + i, true);
        }
        v
    }

    pub fn slice(&self, start: usize, len: usize) -> F2Vec {
        let mut v = F2Vec::zeros(len);
        for i in 0..len {
            if self.get(start + i) {
                v.set(i, true);
            }
        }
        v
    }
}

impl fmt::Debug for F2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vec({})", self.to_bit_string())
    }
}

/// A dense bit-packed matrix over F2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        F2Matrix { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Builds a matrix from nested 0/1 rows. Every row must have length `cols`.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R], cols: usize) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has length {}, expected {cols}",
                    r.len()
                )));
            }
            for (j, &b) in r.iter().enumerate() {
                if b & 1 == 1 {
                    m.set(i, j, true);
                }
            }
        }
        Ok(m)
    }

    /// Matrix whose rows are the given vectors.
    pub fn from_row_vecs(rows: &[F2Vec], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row length mismatch");
            m.row_mut(i).copy_from_slice(r.words());
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_col_vecs(cols: &[F2Vec], rows: usize) -> Self {
        Self::from_row_vecs(cols, rows).transpose()
    }

    pub fn from_bit_strings<S: AsRef<str>>(rows: &[S], cols: usize) -> Result<Self> {
        let vecs = rows
            .iter()
            .map(|s| F2Vec::from_bit_str(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        if let Some((i, v)) = vecs.iter().enumerate().find(|(_, v)| v.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row {i} has length {}, expected {cols}",
                v.len()
            )));
        }
        Ok(Self::from_row_vecs(&vecs, cols))
    }

    pub fn to_bit_strings(&self) -> Vec<String> {
        (0..self.rows).map(|i| self.row_vec(i).to_bit_string()).collect()
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        (self.data[i * self.stride + j / 64] >> (j % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let w = &mut self.data[i * self.stride + j / 64];
        let mask = 1u64 << (j % 64);
        if b {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row_vec(&self, i: usize) -> F2Vec {
        F2Vec::from_words(self.cols, self.row(i).to_vec())
    }

    pub fn col_vec(&self, j: usize) -> F2Vec {
        F2Vec::from_bits((0..self.rows).map(|i| self.get(i, j)))
    }

    pub fn row_vecs(&self) -> Vec<F2Vec> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    fn xor_rows(&mut self, dst: usize, src: usize) {
        debug_assert_ne!(dst, src);
        let s = self.stride;
        let (a, b) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * s);
            (&mut lo[dst * s..dst * s + s], &hi[..s])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            (&mut hi[..s], &lo[src * s..src * s + s])
        };
        xor_into(a, b);
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.data.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|w| *w == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for (wi, &w) in self.row(i).iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    let j = wi * 64 + w.trailing_zeros() as usize;
                    w &= w - 1;
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = F2Matrix::zeros(self.rows, other.cols);
        let os = other.stride;
        for i in 0..self.rows {
            let start = i * out.stride;
            for (wi, &w) in self.row(i).iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    let k = wi * 64 + w.trailing_zeros() as usize;
                    w &= w - 1;
                    xor_into(&mut out.data[start..start + out.stride], &other.data[k * os..k * os + os]);
                }
            }
        }
        out
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec(&self, v: &F2Vec) -> F2Vec {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        F2Vec::from_bits((0..self.rows).map(|i| {
            self.row(i).iter().zip(v.words()).map(|(a, b)| (a & b).count_ones()).sum::<u32>() % 2 == 1
        }))
    }

    pub fn add(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sum dimension mismatch");
        let mut out = self.clone();
        xor_into(&mut out.data, &other.data);
        out
    }

    pub fn add_assign(&mut self, other: &F2Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sum dimension mismatch");
        xor_into(&mut self.data, &other.data);
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut out = self.clone();
        out.rows += other.rows;
        out.data.extend_from_slice(&other.data);
        out
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut out = F2Matrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    out.set(i, j, true);
                }
            }
            for j in 0..other.cols {
                if other.get(i, j) {
                    out.set(i, self.cols + j, true);
                }
            }
        }
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &F2Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j));
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> F2Matrix {
        F2Matrix::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j))
    }

    /// Reduced row echelon form in place; returns pivot columns in order.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.swap_rows(r, p);
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_rows(i, r);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row echelon form (zero rows dropped) and its pivot columns.
    pub fn rref(&self) -> (F2Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        m.rows = pivots.len();
        m.data.truncate(m.rows * m.stride);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        // forward elimination only
        let mut m = self.clone();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c)) else {
                continue;
            };
            m.swap_rows(r, p);
            for i in r + 1..m.rows {
                if m.get(i, c) {
                    m.xor_rows(i, r);
                }
            }
            r += 1;
        }
        r
    }

    /// Basis of the right kernel `{v : self * v = 0}`, returned in reduced
    /// echelon form (as rows, sorted by leading position).
    pub fn kernel_basis(&self) -> Vec<F2Vec> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = F2Vec::zeros(self.cols);
            v.set(f, true);
            for (i, &p) in pivots.iter().enumerate() {
                if r.get(i, f) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        canonical_basis(basis, self.cols)
    }

    /// Returns some `x` with `self * x = b`, choosing zero for every free
    /// variable of the reduced echelon form.
    pub fn solve(&self, b: &F2Vec) -> Option<F2Vec> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let mut aug = F2Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    aug.set(i, j, true);
                }
            }
            if b.get(i) {
                aug.set(i, self.cols, true);
            }
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = F2Vec::zeros(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            if r.get(i, self.cols) {
                x.set(p, true);
            }
        }
        Some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Matrix {}x{} [", self.rows, self.cols)?;
        for (i, s) in self.to_bit_strings().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}

/// Reduced echelon basis of the span of `vecs`.
pub fn canonical_basis(vecs: Vec<F2Vec>, len: usize) -> Vec<F2Vec> {
    if vecs.is_empty() {
        return vecs;
    }
    F2Matrix::from_row_vecs(&vecs, len).rref().0.row_vecs()
}

/// Rank and canonical kernel basis of `m`.
pub fn f2_rank_kernel(m: &F2Matrix) -> (usize, Vec<F2Vec>) {
    let kernel = m.kernel_basis();
    (m.cols() - kernel.len(), kernel)
}

/// Solves `m * x = b` over F2; `Ok(None)` when `b` is outside the column space.
pub fn f2_solve(m: &F2Matrix, b: &F2Vec) -> Result<Option<F2Vec>> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side has length {}, matrix has {} rows",
            b.len(),
            m.rows()
        )));
    }
    Ok(m.solve(b))
}

/// A subspace of F2^n held as a reduced echelon basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RowSpace {
    ambient: usize,
    basis: F2Matrix,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn zero(ambient: usize) -> Self {
        RowSpace { ambient, basis: F2Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        RowSpace { ambient, basis: F2Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// Span of the rows of `m`.
    pub fn from_rows(m: &F2Matrix) -> Self {
        let (basis, pivots) = m.rref();
        RowSpace { ambient: m.cols(), basis, pivots }
    }

    pub fn span(vecs: &[F2Vec], ambient: usize) -> Self {
        Self::from_rows(&F2Matrix::from_row_vecs(vecs, ambient))
    }

    /// Column space of `m`.
    pub fn column_space(m: &F2Matrix) -> Self {
        Self::from_rows(&m.transpose())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    pub fn basis(&self) -> &F2Matrix {
        &self.basis
    }

    pub fn basis_vecs(&self) -> Vec<F2Vec> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Reduces `v` modulo the subspace; the result vanishes on pivot columns.
    pub fn reduce(&self, v: &mut F2Vec) {
        for (i, &p) in self.pivots.iter().enumerate() {
            if v.get(p) {
                xor_into(&mut v.words, self.basis.row(i));
            }
        }
    }

    pub fn contains(&self, v: &F2Vec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }

    pub fn contains_space(&self, other: &RowSpace) -> bool {
        other.basis_vecs().iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` (assumed to lie in the subspace) in the echelon basis.
    pub fn coords(&self, v: &F2Vec) -> F2Vec {
        debug_assert!(self.contains(v));
        F2Vec::from_bits(self.pivots.iter().map(|&p| v.get(p)))
    }

    pub fn sum(&self, other: &RowSpace) -> RowSpace {
        assert_eq!(self.ambient, other.ambient);
        RowSpace::from_rows(&self.basis.vstack(&other.basis))
    }

    pub fn intersect(&self, other: &RowSpace) -> RowSpace {
        assert_eq!(self.ambient, other.ambient);
        // x = a*A = b*B  <=>  (a, b) in left kernel of [A; B]
        let stacked = self.basis.vstack(&other.basis);
        let kernel = stacked.transpose().kernel_basis();
        let k = self.dim();
        let vecs: Vec<F2Vec> = kernel
            .iter()
            .map(|c| {
                let mut v = F2Vec::zeros(self.ambient);
                for i in c.iter_ones().filter(|&i| i < k) {
                    xor_into(&mut v.words, self.basis.row(i));
                }
                v
            })
            .collect();
        RowSpace::span(&vecs, self.ambient)
    }

    /// Matrix of the quotient map `F2^n -> F2^n / self`, using the free
    /// columns as quotient coordinates.
    pub fn quotient_projection(&self) -> F2Matrix {
        let free = self.free_columns();
        let mut q = F2Matrix::zeros(free.len(), self.ambient);
        for c in 0..self.ambient {
            let mut e = F2Vec::unit(self.ambient, c);
            self.reduce(&mut e);
            for (qi, &f) in free.iter().enumerate() {
                if e.get(f) {
                    q.set(qi, c, true);
                }
            }
        }
        q
    }

    /// Inclusion matrix (`ambient x dim`) whose columns are the basis vectors.
    pub fn inclusion(&self) -> F2Matrix {
        self.basis.transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_full_rank_and_trivial_kernel() {
        let (rank, ker) = f2_rank_kernel(&F2Matrix::identity(3));
        assert_eq!(rank, 3);
        assert!(ker.is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_standard_basis() {
        let (rank, ker) = f2_rank_kernel(&F2Matrix::zeros(2, 5));
        assert_eq!(rank, 0);
        let expected: Vec<F2Vec> = (0..5).map(|i| F2Vec::unit(5, i)).collect();
        assert_eq!(ker, expected);
    }

    #[test]
    fn repeated_row_has_rank_one() {
        let m = F2Matrix::from_rows(&[[1u8, 1], [1, 1]], 2).unwrap();
        let (rank, ker) = f2_rank_kernel(&m);
        assert_eq!(rank, 1);
        assert_eq!(ker, vec![F2Vec::from_bits([true, true])]);
    }

    #[test]
    fn solve_examples() {
        let b = F2Vec::from_bits([true, false, true]);
        assert_eq!(f2_solve(&F2Matrix::identity(3), &b).unwrap(), Some(b.clone()));
        assert_eq!(f2_solve(&F2Matrix::zeros(3, 3), &b).unwrap(), None);
        let m = F2Matrix::from_rows(&[[1u8, 1]], 2).unwrap();
        let x = f2_solve(&m, &F2Vec::from_bits([true])).unwrap();
        assert_eq!(x, Some(F2Vec::from_bits([true, false])));
        assert!(matches!(f2_solve(&m, &b), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn wide_matrices_cross_word_boundaries() {
        let m = F2Matrix::from_fn(70, 130, |i, j| (i * 7 + j * 3) % 5 == 0 || j == i + 60);
        let t = m.transpose();
        assert_eq!(t.transpose(), m);
        assert_eq!(m.rank(), t.rank());
        for k in m.kernel_basis() {
            assert!(m.mul_vec(&k).is_zero());
        }
    }

    #[test]
    fn rowspace_intersection_and_quotient() {
        let a = RowSpace::span(&[F2Vec::from_bits([true, false, false]), F2Vec::from_bits([false, true, false])], 3);
        let b = RowSpace::span(&[F2Vec::from_bits([false, true, true]), F2Vec::from_bits([true, true, false])], 3);
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&F2Vec::from_bits([true, true, false])));
        let q = a.quotient_projection();
        assert_eq!(q.rows(), 1);
        assert!(q.mul_vec(&F2Vec::from_bits([true, true, false])).is_zero());
        assert!(!q.mul_vec(&F2Vec::from_bits([false, false, true])).is_zero());
    }
}
