//! Hom spaces via projective presentations, with a direct intertwiner solver
//! kept as an independent route.

use std::sync::{Arc, OnceLock};

use crate::arith::{canonical_basis, F2Matrix, F2Vec, RowSpace};
use crate::error::{Error, Result};
use crate::rep::module::{Morphism, QuiverRep, Sub};

/// A projective presentation `K ↪ P(M) ↠ M` with `P(M) = ⊕_g P_{tops[g]}`.
#[derive(Debug)]
pub(crate) struct Presentation {
    pub tops: Vec<usize>,
    /// Basis of `P(M)_v` as (generator, algebra basis path).
    pub cover_basis: [Vec<(usize, usize)>; 3],
    pub cover: QuiverRep,
    /// `π_v : P(M)_v → M_v`.
    pub cover_map: Morphism,
    /// `σ_v : M_v → P(M)_v` with `π σ = id`.
    pub section: [F2Matrix; 3],
    pub kernel: Sub,
    /// Generators of `K` modulo `rad K`.
    pub relations: Vec<(usize, F2Vec)>,
}

fn build_presentation(m: &QuiverRep) -> Presentation {
    let alg = m.algebra().clone();
    let q = alg.quiver();
    let rad = m.radical();
    let mut tops = Vec::new();
    let mut top_vecs = Vec::new();
    for v in 0..3 {
        for c in rad[v].free_columns() {
            tops.push(v);
            top_vecs.push(F2Vec::unit(m.dim(v), c));
        }
    }
    // position of each algebra basis path inside e_t Λ e_s
    let mut local = vec![0usize; alg.dim()];
    let mut per_block = [[0usize; 3]; 3];
    for (b, p) in alg.basis().iter().enumerate() {
        local[b] = per_block[p.source()][p.target()];
        per_block[p.source()][p.target()] += 1;
    }
    let mut cover_basis: [Vec<(usize, usize)>; 3] = Default::default();
    let mut offset = vec![[0usize; 3]; tops.len()];
    for (g, &s) in tops.iter().enumerate() {
        for v in 0..3 {
            offset[g][v] = cover_basis[v].len();
            cover_basis[v].extend(alg.paths_between(s, v).into_iter().map(|b| (g, b)));
        }
    }
    let cdims: [usize; 3] = std::array::from_fn(|v| cover_basis[v].len());
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let mut mat = F2Matrix::zeros(cdims[arrow.target], cdims[arrow.source]);
            for (col, &(g, b)) in cover_basis[arrow.source].iter().enumerate() {
                if let Some(c) = alg.arrow_times(a, b) {
                    mat.set(offset[g][arrow.target] + local[c], col, true);
                }
            }
            mat
        })
        .collect();
    let cover = QuiverRep::new_unchecked(alg.clone(), cdims, maps);
    let cover_map = Morphism {
        maps: std::array::from_fn(|v| {
            let cols: Vec<F2Vec> =
                cover_basis[v].iter().map(|&(g, b)| m.path_action(b).mul_vec(&top_vecs[g])).collect();
            F2Matrix::from_col_vecs(&cols, m.dim(v))
        }),
    };
    let section = std::array::from_fn(|v| {
        let pi = &cover_map.maps[v];
        let cols: Vec<F2Vec> = (0..m.dim(v))
            .map(|i| pi.solve(&F2Vec::unit(m.dim(v), i)).expect("projective cover map is surjective"))
            .collect();
        F2Matrix::from_col_vecs(&cols, cdims[v])
    });
    let kernel = cover_map.kernel();
    let rad_k = cover.radical_of(&kernel);
    let mut relations = Vec::new();
    for v in 0..3 {
        let mut span = rad_k[v].clone();
        for x in kernel[v].basis_vecs() {
            if !span.contains(&x) {
                span = span.sum(&RowSpace::span(std::slice::from_ref(&x), cdims[v]));
                relations.push((v, x));
            }
        }
    }
    Presentation { tops, cover_basis, cover, cover_map, section, kernel, relations }
}

pub(crate) fn presentation(m: &QuiverRep) -> Arc<Presentation> {
    m.presentation_cell().get_or_init(|| Arc::new(build_presentation(m))).clone()
}

/// A basis of `Hom(M, N)` in canonical echelon form over the flattened
/// coordinates (vertex, then row-major).
#[derive(Debug)]
pub struct HomSpace {
    domain: QuiverRep,
    codomain: QuiverRep,
    basis: Vec<Morphism>,
    factoring: OnceLock<Result<Vec<Morphism>>>,
}

impl HomSpace {
    pub fn domain(&self) -> &QuiverRep {
        &self.domain
    }

    pub fn codomain(&self) -> &QuiverRep {
        &self.codomain
    }

    pub fn basis(&self) -> &[Morphism] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis of the maps that factor through a projective module: the image
    /// of `Hom(M, P(N))` under composition with the cover `P(N) ↠ N`.
    pub fn projective_factoring(&self) -> Result<&[Morphism]> {
        self.factoring
            .get_or_init(|| {
                if self.codomain.is_zero() || self.domain.is_zero() {
                    return Ok(Vec::new());
                }
                let pres = presentation(&self.codomain);
                let h = hom(&self.domain, &pres.cover)?;
                let imgs: Vec<F2Vec> = h.basis.iter().map(|f| pres.cover_map.compose(f).flatten()).collect();
                let len = flat_len(self.domain.dims(), self.codomain.dims());
                Ok(canonical_basis(imgs, len)
                    .iter()
                    .map(|v| Morphism::unflatten(v, self.domain.dims(), self.codomain.dims()))
                    .collect())
            })
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(|e| e.clone())
    }
}

pub(crate) fn flat_len(domain: [usize; 3], codomain: [usize; 3]) -> usize {
    (0..3).map(|v| domain[v] * codomain[v]).sum()
}

fn canonical_morphisms(homs: Vec<F2Vec>, m: &QuiverRep, n: &QuiverRep) -> Vec<Morphism> {
    canonical_basis(homs, flat_len(m.dims(), n.dims()))
        .iter()
        .map(|v| Morphism::unflatten(v, m.dims(), n.dims()))
        .collect()
}

/// `Hom(M, N)` computed from the projective presentation of `M`: a map is
/// determined by the images of the top generators, subject to the relations.
pub fn hom(m: &QuiverRep, n: &QuiverRep) -> Result<HomSpace> {
    m.same_algebra(n)?;
    let space = |basis| HomSpace { domain: m.clone(), codomain: n.clone(), basis, factoring: OnceLock::new() };
    if m.is_zero() || n.is_zero() {
        return Ok(space(Vec::new()));
    }
    let pres = presentation(m);
    let mut off = Vec::with_capacity(pres.tops.len());
    let mut unknowns = 0;
    for &s in &pres.tops {
        off.push(unknowns);
        unknowns += n.dim(s);
    }
    let mut system = F2Matrix::zeros(0, unknowns);
    for (v, x) in &pres.relations {
        let mut block = F2Matrix::zeros(n.dim(*v), unknowns);
        for pos in x.iter_ones() {
            let (g, b) = pres.cover_basis[*v][pos];
            let act = n.path_action(b);
            for i in 0..act.rows() {
                for j in 0..act.cols() {
                    if act.get(i, j) {
                        block.set(i, off[g] + j, !block.get(i, off[g] + j));
                    }
                }
            }
        }
        system = system.vstack(&block);
    }
    let solutions = system.kernel_basis();
    let homs: Vec<F2Vec> = solutions
        .iter()
        .map(|u| {
            let images: Vec<F2Vec> =
                pres.tops.iter().enumerate().map(|(g, &s)| u.slice(off[g], n.dim(s))).collect();
            Morphism {
                maps: std::array::from_fn(|v| {
                    let cols: Vec<F2Vec> = pres.cover_basis[v]
                        .iter()
                        .map(|&(g, b)| n.path_action(b).mul_vec(&images[g]))
                        .collect();
                    F2Matrix::from_col_vecs(&cols, n.dim(v)).mul(&pres.section[v])
                }),
            }
            .flatten()
        })
        .collect();
    Ok(space(canonical_morphisms(homs, m, n)))
}

/// `Hom(M, N)` by solving `f_t M_a = N_a f_s` for all arrows directly.
pub fn hom_by_intertwiners(m: &QuiverRep, n: &QuiverRep) -> Result<Vec<Morphism>> {
    m.same_algebra(n)?;
    let (dm, dn) = (m.dims(), n.dims());
    let mut off = [0usize; 3];
    for v in 1..3 {
        off[v] = off[v - 1] + dn[v - 1] * dm[v - 1];
    }
    let unknowns = flat_len(dm, dn);
    let var = |v: usize, i: usize, j: usize| off[v] + i * dm[v] + j;
    let mut rows: Vec<F2Vec> = Vec::new();
    for (a, arrow) in m.algebra().quiver().arrows().iter().enumerate() {
        let (s, t) = (arrow.source, arrow.target);
        let (ma, na) = (m.map(a), n.map(a));
        for i in 0..dn[t] {
            for j in 0..dm[s] {
                let mut row = F2Vec::zeros(unknowns);
                for k in 0..dm[t] {
                    if ma.get(k, j) {
                        let x = var(t, i, k);
                        row.set(x, !row.get(x));
                    }
                }
                for k in 0..dn[s] {
                    if na.get(i, k) {
                        let x = var(s, k, j);
                        row.set(x, !row.get(x));
                    }
                }
                if !row.is_zero() {
                    rows.push(row);
                }
            }
        }
    }
    let system = F2Matrix::from_row_vecs(&rows, unknowns);
    Ok(system.kernel_basis().iter().map(|v| Morphism::unflatten(v, dm, dn)).collect())
}

pub fn end_dim(m: &QuiverRep) -> Result<usize> {
    Ok(hom(m, m)?.dim())
}

pub(crate) fn check_nonzero(m: &QuiverRep) -> Result<()> {
    if m.is_zero() {
        Err(Error::ZeroModule)
    } else {
        Ok(())
    }
}
