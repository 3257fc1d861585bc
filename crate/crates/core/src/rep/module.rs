//! Finite-dimensional representations of a bound quiver algebra over F2.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::arith::{F2Matrix, F2Vec, RowSpace};
use crate::error::{Error, Result};
use crate::quiver::{BoundQuiverAlgebra, PathWord};
use crate::rep::hom::Presentation;

/// A graded subspace: one subspace of `M_v` per vertex.
pub type Sub = [RowSpace; 3];

/// A representation: a space at each vertex and a `dim target × dim source`
/// matrix per arrow. Cheap to clone.
#[derive(Clone)]
pub struct QuiverRep {
    inner: Arc<RepInner>,
}

struct RepInner {
    algebra: Arc<BoundQuiverAlgebra>,
    dims: [usize; 3],
    maps: Vec<F2Matrix>,
    path_maps: OnceLock<Vec<F2Matrix>>,
    presentation: OnceLock<Arc<Presentation>>,
}

impl QuiverRep {
    /// Builds a representation and checks every relation of the algebra on it.
    pub fn new(algebra: Arc<BoundQuiverAlgebra>, dims: [usize; 3], maps: Vec<F2Matrix>) -> Result<Self> {
        let q = algebra.quiver();
        if maps.len() != q.arrows().len() {
            return Err(Error::DimensionMismatch(format!("{} arrow maps for {} arrows", maps.len(), q.arrows().len())));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::DimensionMismatch(format!(
                    "{} is {}x{}, expected {}x{}",
                    a.name,
                    m.rows(),
                    m.cols(),
                    dims[a.target],
                    dims[a.source]
                )));
            }
        }
        let rep = Self::new_unchecked(algebra, dims, maps);
        rep.check_relations()?;
        Ok(rep)
    }

    /// For representations that satisfy the relations by construction
    /// (projectives, sub- and quotient modules of valid modules).
    pub(crate) fn new_unchecked(algebra: Arc<BoundQuiverAlgebra>, dims: [usize; 3], maps: Vec<F2Matrix>) -> Self {
        QuiverRep {
            inner: Arc::new(RepInner {
                algebra,
                dims,
                maps,
                path_maps: OnceLock::new(),
                presentation: OnceLock::new(),
            }),
        }
    }

    pub fn zero(algebra: Arc<BoundQuiverAlgebra>) -> Self {
        let maps = algebra.quiver().arrows().iter().map(|_| F2Matrix::zeros(0, 0)).collect();
        Self::new_unchecked(algebra, [0; 3], maps)
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.inner.algebra
    }

    pub fn dims(&self) -> [usize; 3] {
        self.inner.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.inner.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.inner.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &F2Matrix {
        &self.inner.maps[arrow]
    }

    pub fn maps(&self) -> &[F2Matrix] {
        &self.inner.maps
    }

    pub fn same_algebra(&self, other: &QuiverRep) -> Result<()> {
        if self.algebra().id() == other.algebra().id() {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub(crate) fn presentation_cell(&self) -> &OnceLock<Arc<Presentation>> {
        &self.inner.presentation
    }

    /// Matrix of a path word, multiplying arrow matrices directly.
    pub fn eval_path(&self, p: &PathWord) -> F2Matrix {
        let mut m = F2Matrix::identity(self.dim(p.source()));
        for &a in p.arrows().iter().rev() {
            m = self.map(a as usize).mul(&m);
        }
        m
    }

    /// Verifies that every generator of the relation ideal acts as zero.
    pub fn check_relations(&self) -> Result<()> {
        let a = self.algebra();
        for g in &a.ideal().generators {
            let (s, t) = (g.terms[0].source(), g.terms[0].target());
            let mut sum = F2Matrix::zeros(self.dim(t), self.dim(s));
            for term in &g.terms {
                sum.add_assign(&self.eval_path(term));
            }
            if !sum.is_zero() {
                let shown: Vec<String> = g.terms.iter().map(|t| t.display(a.quiver())).collect();
                return Err(Error::RelationViolation(format!(
                    "{} does not act as zero ({} {}, d={})",
                    shown.join(" - "),
                    a.family(),
                    a.kind(),
                    a.d()
                )));
            }
        }
        Ok(())
    }

    /// Action of basis path `b` of the algebra, `dim target × dim source`.
    pub fn path_action(&self, b: usize) -> &F2Matrix {
        &self.path_actions()[b]
    }

    fn path_actions(&self) -> &Vec<F2Matrix> {
        self.inner.path_maps.get_or_init(|| {
            let a = self.algebra();
            let mut out: Vec<F2Matrix> = Vec::with_capacity(a.dim());
            for b in 0..a.dim() {
                let m = match a.split_first(b) {
                    None => F2Matrix::identity(self.dim(a.basis()[b].source())),
                    Some((arrow, rest)) => self.map(arrow).mul(&out[rest]),
                };
                out.push(m);
            }
            out
        })
    }

    pub fn full_sub(&self) -> Sub {
        std::array::from_fn(|v| RowSpace::full(self.dim(v)))
    }

    pub fn zero_sub(&self) -> Sub {
        std::array::from_fn(|v| RowSpace::zero(self.dim(v)))
    }

    /// Submodule generated by homogeneous vectors.
    pub fn generated(&self, gens: &[(usize, F2Vec)]) -> Sub {
        let mut basis: [Vec<F2Vec>; 3] = Default::default();
        let mut spaces = self.zero_sub();
        let mut stack: Vec<(usize, F2Vec)> = gens.to_vec();
        while let Some((v, x)) = stack.pop() {
            let mut r = x.clone();
            spaces[v].reduce(&mut r);
            if r.is_zero() {
                continue;
            }
            basis[v].push(x.clone());
            spaces[v] = RowSpace::span(&basis[v], self.dim(v));
            for (a, arrow) in self.algebra().quiver().arrows().iter().enumerate() {
                if arrow.source == v {
                    stack.push((arrow.target, self.map(a).mul_vec(&x)));
                }
            }
        }
        spaces
    }

    /// `rad(S) = Σ_a M_a(S_source(a))` for a submodule `S`.
    pub fn radical_of(&self, sub: &Sub) -> Sub {
        let mut images: [Vec<F2Vec>; 3] = Default::default();
        for (a, arrow) in self.algebra().quiver().arrows().iter().enumerate() {
            for x in sub[arrow.source].basis_vecs() {
                images[arrow.target].push(self.map(a).mul_vec(&x));
            }
        }
        std::array::from_fn(|v| RowSpace::span(&images[v], self.dim(v)))
    }

    pub fn radical(&self) -> Sub {
        self.radical_of(&self.full_sub())
    }

    /// `{x ∈ M : J x ⊆ lower}` for a submodule `lower`.
    pub fn socle_over(&self, lower: &Sub) -> Sub {
        std::array::from_fn(|v| {
            let mut rows = F2Matrix::zeros(0, self.dim(v));
            for (a, arrow) in self.algebra().quiver().arrows().iter().enumerate() {
                if arrow.source == v {
                    let q = lower[arrow.target].quotient_projection();
                    rows = rows.vstack(&q.mul(self.map(a)));
                }
            }
            RowSpace::span(&rows.kernel_basis(), self.dim(v))
        })
    }

    pub fn socle(&self) -> Sub {
        self.socle_over(&self.zero_sub())
    }

    pub fn sub_dims(sub: &Sub) -> [usize; 3] {
        std::array::from_fn(|v| sub[v].dim())
    }

    /// The submodule `sub` as a representation in its echelon basis.
    pub fn submodule(&self, sub: &Sub) -> QuiverRep {
        let q = self.algebra().quiver();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let (s, t) = (&sub[arrow.source], &sub[arrow.target]);
                let cols: Vec<F2Vec> = s
                    .basis_vecs()
                    .iter()
                    .map(|x| {
                        let y = self.map(a).mul_vec(x);
                        debug_assert!(t.contains(&y), "not a submodule");
                        t.coords(&y)
                    })
                    .collect();
                F2Matrix::from_col_vecs(&cols, t.dim())
            })
            .collect();
        QuiverRep::new_unchecked(self.algebra().clone(), Self::sub_dims(sub), maps)
    }

    /// Quotient `M / sub` with the projections `M_v → (M/sub)_v`.
    pub fn quotient(&self, sub: &Sub) -> (QuiverRep, [F2Matrix; 3]) {
        let proj: [F2Matrix; 3] = std::array::from_fn(|v| sub[v].quotient_projection());
        let free: [Vec<usize>; 3] = std::array::from_fn(|v| sub[v].free_columns());
        let q = self.algebra().quiver();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let lift = F2Matrix::from_fn(self.dim(arrow.source), free[arrow.source].len(), |i, j| {
                    free[arrow.source][j] == i
                });
                proj[arrow.target].mul(self.map(a)).mul(&lift)
            })
            .collect();
        let dims = std::array::from_fn(|v| free[v].len());
        (QuiverRep::new_unchecked(self.algebra().clone(), dims, maps), proj)
    }

    pub fn direct_sum(&self, other: &QuiverRep) -> Result<QuiverRep> {
        self.same_algebra(other)?;
        let q = self.algebra().quiver();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let (m, n) = (self.map(a), other.map(a));
                let mut out = F2Matrix::zeros(m.rows() + n.rows(), m.cols() + n.cols());
                out.set_block(0, 0, m);
                out.set_block(m.rows(), m.cols(), n);
                debug_assert_eq!(out.rows(), self.dim(arrow.target) + other.dim(arrow.target));
                out
            })
            .collect();
        let dims = std::array::from_fn(|v| self.dim(v) + other.dim(v));
        Ok(QuiverRep::new_unchecked(self.algebra().clone(), dims, maps))
    }

    /// Re-registers the same data against another algebra, checking its relations.
    pub fn reinterpret(&self, algebra: Arc<BoundQuiverAlgebra>, perm: &[usize]) -> Result<QuiverRep> {
        if algebra.quiver() != self.algebra().quiver() {
            return Err(Error::AlgebraMismatch);
        }
        let maps = (0..self.maps().len()).map(|a| self.map(perm[a]).clone()).collect();
        QuiverRep::new(algebra, self.dims(), maps)
    }
}

impl PartialEq for QuiverRep {
    fn eq(&self, other: &Self) -> bool {
        self.algebra().id() == other.algebra().id() && self.dims() == other.dims() && self.maps() == other.maps()
    }
}

impl Eq for QuiverRep {}

impl fmt::Debug for QuiverRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.algebra();
        let mut s = f.debug_struct("QuiverRep");
        s.field("algebra", &a.id()).field("dims", &self.dims());
        for (arrow, m) in a.quiver().arrows().iter().zip(self.maps()) {
            s.field(arrow.name, m);
        }
        s.finish()
    }
}

/// A module homomorphism given by one matrix per vertex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Morphism {
    pub maps: [F2Matrix; 3],
}

impl Morphism {
    pub fn zero(domain: [usize; 3], codomain: [usize; 3]) -> Self {
        Morphism { maps: std::array::from_fn(|v| F2Matrix::zeros(codomain[v], domain[v])) }
    }

    pub fn identity(dims: [usize; 3]) -> Self {
        Morphism { maps: std::array::from_fn(|v| F2Matrix::identity(dims[v])) }
    }

    pub fn domain_dims(&self) -> [usize; 3] {
        std::array::from_fn(|v| self.maps[v].cols())
    }

    pub fn codomain_dims(&self) -> [usize; 3] {
        std::array::from_fn(|v| self.maps[v].rows())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Morphism) -> Morphism {
        Morphism { maps: std::array::from_fn(|v| self.maps[v].mul(&other.maps[v])) }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism { maps: std::array::from_fn(|v| self.maps[v].add(&other.maps[v])) }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|m| m.is_zero())
    }

    pub fn is_intertwiner(&self, m: &QuiverRep, n: &QuiverRep) -> bool {
        m.algebra().quiver().arrows().iter().enumerate().all(|(a, arrow)| {
            self.maps[arrow.target].mul(m.map(a)) == n.map(a).mul(&self.maps[arrow.source])
        })
    }

    pub fn is_invertible(&self) -> bool {
        self.maps.iter().all(|m| m.is_invertible())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn kernel(&self) -> Sub {
        std::array::from_fn(|v| RowSpace::span(&self.maps[v].kernel_basis(), self.maps[v].cols()))
    }

    pub fn image(&self) -> Sub {
        std::array::from_fn(|v| RowSpace::column_space(&self.maps[v]))
    }

    /// Coordinates ordered by vertex, then row-major.
    pub fn flatten(&self) -> F2Vec {
        let len: usize = self.maps.iter().map(|m| m.rows() * m.cols()).sum();
        let mut out = F2Vec::zeros(len);
        let mut off = 0;
        for m in &self.maps {
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    if m.get(i, j) {
                        out.set(off + i * m.cols() + j, true);
                    }
                }
            }
            off += m.rows() * m.cols();
        }
        out
    }

    pub fn unflatten(v: &F2Vec, domain: [usize; 3], codomain: [usize; 3]) -> Morphism {
        let mut off = 0;
        let maps = std::array::from_fn(|k| {
            let (r, c) = (codomain[k], domain[k]);
            let m = F2Matrix::from_fn(r, c, |i, j| v.get(off + i * c + j));
            off += r * c;
            m
        });
        Morphism { maps }
    }
}
