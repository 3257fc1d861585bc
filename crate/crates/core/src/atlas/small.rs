//! Tiny F2 matrices (at most 8×8) and a Hom solver over u64 bitmask rows,
//! used by the completeness sweep where every representation has total
//! dimension at most 6.

use crate::arith::F2Matrix;

pub const MAX_SIDE: usize = 8;

/// Row `i` is a bitmask over columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SmallMat {
    pub rows: u8,
    pub cols: u8,
    pub r: [u8; MAX_SIDE],
}

impl SmallMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        debug_assert!(rows <= MAX_SIDE && cols <= MAX_SIDE);
        SmallMat { rows: rows as u8, cols: cols as u8, r: [0; MAX_SIDE] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.r[i] = 1 << i;
        }
        m
    }

    /// Unpacks the low `rows*cols` bits of `bits`, row-major.
    pub fn from_bits(rows: usize, cols: usize, bits: u64) -> Self {
        let mut m = Self::zeros(rows, cols);
        let mask = ((1u16 << cols) - 1) as u64;
        for i in 0..rows {
            m.r[i] = ((bits >> (i * cols)) & mask) as u8;
        }
        m
    }

    /// `[I_rank 0; 0 0]`.
    pub fn rank_normal_form(rows: usize, cols: usize, rank: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rank {
            m.r[i] = 1 << i;
        }
        m
    }

    /// Nilpotent Jordan matrix with the given block sizes; ones sit below the diagonal.
    pub fn nilpotent_jordan(blocks: &[usize]) -> Self {
        let n = blocks.iter().sum();
        let mut m = Self::zeros(n, n);
        let mut start = 0;
        for &b in blocks {
            for k in 1..b {
                m.r[start + k] = 1 << (start + k - 1);
            }
            start += b;
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.r[i] >> j & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.r[..self.rows as usize].iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &SmallMat) -> SmallMat {
        debug_assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows as usize, other.cols as usize);
        for i in 0..self.rows as usize {
            let mut row = self.r[i];
            let mut acc = 0u8;
            while row != 0 {
                let k = row.trailing_zeros() as usize;
                acc ^= other.r[k];
                row &= row - 1;
            }
            out.r[i] = acc;
        }
        out
    }

    pub fn add(&self, other: &SmallMat) -> SmallMat {
        let mut out = *self;
        for i in 0..self.rows as usize {
            out.r[i] ^= other.r[i];
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut rows: Vec<u8> = self.r[..self.rows as usize].to_vec();
        let mut rank = 0;
        for c in 0..self.cols as usize {
            let bit = 1u8 << c;
            if let Some(p) = (rank..rows.len()).find(|&i| rows[i] & bit != 0) {
                rows.swap(rank, p);
                for i in 0..rows.len() {
                    if i != rank && rows[i] & bit != 0 {
                        rows[i] ^= rows[rank];
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows as usize
    }

    pub fn to_f2(&self) -> F2Matrix {
        F2Matrix::from_fn(self.rows as usize, self.cols as usize, |i, j| self.get(i, j))
    }

    pub fn from_f2(m: &F2Matrix) -> Self {
        let mut out = Self::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if m.get(i, j) {
                    out.r[i] |= 1 << j;
                }
            }
        }
        out
    }
}

/// Arrow data shared by all representations in a sweep.
#[derive(Clone, Debug)]
pub struct SmallQuiver {
    /// `(source, target)` per arrow.
    pub arrows: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SmallRep {
    pub dims: [usize; 3],
    pub maps: Vec<SmallMat>,
}

/// Kernel of a system of equations given as u64 bitmask rows over `n ≤ 64` unknowns.
pub fn kernel_u64(mut rows: Vec<u64>, n: usize) -> Vec<u64> {
    debug_assert!(n <= 64);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..n {
        let bit = 1u64 << c;
        if let Some(p) = (rank..rows.len()).find(|&i| rows[i] & bit != 0) {
            rows.swap(rank, p);
            let pr = rows[rank];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && *row & bit != 0 {
                    *row ^= pr;
                }
            }
            pivots.push(c);
            rank += 1;
        }
    }
    let mut basis = Vec::new();
    for f in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = 1u64 << f;
        for (k, &p) in pivots.iter().enumerate() {
            if rows[k] >> f & 1 == 1 {
                v |= 1 << p;
            }
        }
        basis.push(v);
    }
    basis
}

/// Offsets of the blocks `f_v : A_v -> X_v` inside the unknown vector.
fn hom_layout(a: &[usize; 3], x: &[usize; 3]) -> ([usize; 3], usize) {
    let mut off = [0; 3];
    let mut n = 0;
    for v in 0..3 {
        off[v] = n;
        n += a[v] * x[v];
    }
    (off, n)
}

/// Basis of `Hom(a, x)` as bitmasks over the flattened blocks (vertex, then row-major
/// over `x_v × a_v`). Returns `None` when there are more than 64 unknowns.
pub fn hom_basis(q: &SmallQuiver, a: &SmallRep, x: &SmallRep) -> Option<Vec<u64>> {
    let (off, n) = hom_layout(&a.dims, &x.dims);
    if n > 64 {
        return None;
    }
    let var = |v: usize, i: usize, j: usize| off[v] + i * a.dims[v] + j;
    let mut eqs = Vec::new();
    for (k, &(s, t)) in q.arrows.iter().enumerate() {
        let (ma, mx) = (&a.maps[k], &x.maps[k]);
        // x_k f_s + f_t a_k = 0, entry (i, j) with i < x_t, j < a_s
        for i in 0..x.dims[t] {
            for j in 0..a.dims[s] {
                let mut e = 0u64;
                for l in 0..x.dims[s] {
                    if mx.get(i, l) {
                        e ^= 1 << var(s, l, j);
                    }
                }
                for l in 0..a.dims[t] {
                    if ma.get(l, j) {
                        e ^= 1 << var(t, i, l);
                    }
                }
                if e != 0 {
                    eqs.push(e);
                }
            }
        }
    }
    Some(kernel_u64(eqs, n))
}

/// Unpacks a Hom basis vector into the three vertex maps.
pub fn hom_maps(a: &[usize; 3], x: &[usize; 3], v: u64) -> [SmallMat; 3] {
    let (off, _) = hom_layout(a, x);
    std::array::from_fn(|w| {
        let mut m = SmallMat::zeros(x[w], a[w]);
        for i in 0..x[w] {
            for j in 0..a[w] {
                if v >> (off[w] + i * a[w] + j) & 1 == 1 {
                    m.r[i] |= 1 << j;
                }
            }
        }
        m
    })
}

pub fn end_dim(q: &SmallQuiver, x: &SmallRep) -> Option<usize> {
    hom_basis(q, x, x).map(|b| b.len())
}

/// Isomorphism test valid when `a` is a brick: `x ≅ a` iff `Hom(a, x)` is
/// one-dimensional and spanned by an invertible map.
pub fn iso_to_brick(q: &SmallQuiver, brick: &SmallRep, x: &SmallRep) -> bool {
    if brick.dims != x.dims {
        return false;
    }
    match hom_basis(q, brick, x).as_deref() {
        Some([f]) => hom_maps(&brick.dims, &x.dims, *f).iter().all(SmallMat::is_invertible),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_single_equation() {
        // x0 + x1 = 0 over three unknowns
        let k = kernel_u64(vec![0b011], 3);
        assert_eq!(k.len(), 2);
        assert!(k.iter().all(|v| (v & 1) ^ (v >> 1 & 1) == 0));
    }

    #[test]
    fn jordan_blocks_are_nilpotent() {
        let j = SmallMat::nilpotent_jordan(&[3, 1]);
        assert!(!j.mul(&j).is_zero());
        assert!(j.mul(&j).mul(&j).is_zero());
        assert_eq!(j.rank(), 2);
    }

    #[test]
    fn roundtrip_through_f2matrix() {
        let m = SmallMat::from_bits(3, 2, 0b10_01_11);
        assert_eq!(SmallMat::from_f2(&m.to_f2()), m);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn end_of_two_copies_of_a_simple() {
        let q = SmallQuiver { arrows: vec![(1, 0), (0, 1)] };
        let x = SmallRep { dims: [2, 0, 0], maps: vec![SmallMat::zeros(2, 0), SmallMat::zeros(0, 2)] };
        assert_eq!(end_dim(&q, &x), Some(4));
    }
}
