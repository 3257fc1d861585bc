//! Projective covers, syzygies, stable Hom and Ext¹.

use crate::arith::{F2Matrix, F2Vec, RowSpace};
use crate::error::{Error, Result};
use crate::quiver::{build_algebra, Family, Kind};
use crate::rep::construct::{inflate, projective};
use crate::rep::iso::is_isomorphic;
use crate::rep::hom::{check_nonzero, flat_len, hom, presentation};
use crate::rep::module::{Morphism, QuiverRep};

/// `P(M) ↠ M`, sending the generator of each summand to a top basis vector.
pub fn projective_cover(m: &QuiverRep) -> Result<(QuiverRep, Morphism)> {
    check_nonzero(m)?;
    let pres = presentation(m);
    Ok((pres.cover.clone(), pres.cover_map.clone()))
}

/// Multiplicities of `P_0, P_1, P_2` in the projective cover.
pub fn top_multiplicities(m: &QuiverRep) -> [usize; 3] {
    let pres = presentation(m);
    let mut out = [0; 3];
    for &v in &pres.tops {
        out[v] += 1;
    }
    out
}

/// Kernel of the projective cover; zero for a projective or zero module.
pub fn omega(m: &QuiverRep) -> QuiverRep {
    if m.is_zero() {
        return m.clone();
    }
    let pres = presentation(m);
    pres.cover.submodule(&pres.kernel)
}

pub fn is_projective(m: &QuiverRep) -> bool {
    omega(m).is_zero()
}

/// Injective hull `M ↪ ⊕ P_j`, built from maps `M → P_j` that are
/// independent on the socle. Requires each `P_j` to have simple socle `S_j`.
pub fn injective_hull(m: &QuiverRep) -> Result<(QuiverRep, Morphism)> {
    check_nonzero(m)?;
    let alg = m.algebra().clone();
    let soc = m.socle();
    let mut hull: Option<QuiverRep> = None;
    let mut rows: [Vec<F2Matrix>; 3] = Default::default();
    for j in 0..3 {
        let need = soc[j].dim();
        if need == 0 {
            continue;
        }
        let p = projective(&alg, j);
        let psoc = p.socle();
        if QuiverRep::sub_dims(&psoc) != std::array::from_fn(|v| usize::from(v == j)) {
            return Err(Error::Check(format!("socle of P_{j} is not S_{j}; algebra is not self-injective")));
        }
        let s_j = &psoc[j];
        let homs = hom(m, &p)?;
        let soc_basis = soc[j].basis_vecs();
        let mut chosen: Vec<&Morphism> = Vec::new();
        let mut functionals = RowSpace::zero(need);
        for f in homs.basis() {
            let row = F2Vec::from_bits(soc_basis.iter().map(|x| {
                let y = f.maps[j].mul_vec(x);
                debug_assert!(s_j.contains(&y));
                !y.is_zero()
            }));
            if !functionals.contains(&row) {
                functionals = functionals.sum(&RowSpace::span(&[row], need));
                chosen.push(f);
                if chosen.len() == need {
                    break;
                }
            }
        }
        if chosen.len() < need {
            return Err(Error::Check(format!("no embedding of the socle component at vertex {j}")));
        }
        for f in chosen {
            hull = Some(match hull {
                None => p.clone(),
                Some(h) => h.direct_sum(&p)?,
            });
            for (v, r) in rows.iter_mut().enumerate() {
                r.push(f.maps[v].clone());
            }
        }
    }
    let hull = hull.expect("nonzero module has nonzero socle");
    let iota = Morphism {
        maps: std::array::from_fn(|v| {
            rows[v].iter().fold(F2Matrix::zeros(0, m.dim(v)), |acc, r| acc.vstack(r))
        }),
    };
    debug_assert!(iota.is_intertwiner(m, &hull));
    if !iota.is_injective() {
        return Err(Error::Check("injective hull map is not injective".into()));
    }
    Ok((hull, iota))
}

/// Cokernel of the injective hull; zero for a projective or zero module.
pub fn omega_inv(m: &QuiverRep) -> Result<QuiverRep> {
    if m.is_zero() {
        return Ok(m.clone());
    }
    let (hull, iota) = injective_hull(m)?;
    Ok(hull.quotient(&iota.image()).0)
}

/// Stable Hom: dimension and a basis of a complement of the
/// projective-factoring subspace inside `Hom(M, N)`.
#[derive(Clone, Debug)]
pub struct StableHom {
    pub dim: usize,
    pub hom_dim: usize,
    pub factoring_dim: usize,
    pub coset_basis: Vec<Morphism>,
}

pub fn stable_hom(m: &QuiverRep, n: &QuiverRep) -> Result<StableHom> {
    let h = hom(m, n)?;
    let factoring = h.projective_factoring()?;
    let len = flat_len(m.dims(), n.dims());
    let mut span = RowSpace::span(&factoring.iter().map(|f| f.flatten()).collect::<Vec<_>>(), len);
    let mut coset_basis = Vec::new();
    for f in h.basis() {
        let v = f.flatten();
        if !span.contains(&v) {
            span = span.sum(&RowSpace::span(&[v], len));
            coset_basis.push(f.clone());
        }
    }
    Ok(StableHom { dim: coset_basis.len(), hom_dim: h.dim(), factoring_dim: factoring.len(), coset_basis })
}

pub fn stable_end_dim(m: &QuiverRep) -> Result<usize> {
    Ok(stable_hom(m, m)?.dim)
}

/// `dim Ext¹(M, N) = dim Hom(ΩM, N) − dim Hom(P(M), N) + dim Hom(M, N)`,
/// read off the sequence `0 → Hom(M,N) → Hom(P(M),N) → Hom(ΩM,N) → Ext¹(M,N) → 0`.
pub fn ext1(m: &QuiverRep, n: &QuiverRep) -> Result<usize> {
    m.same_algebra(n)?;
    if m.is_zero() || n.is_zero() {
        return Ok(0);
    }
    let pres = presentation(m);
    let from_cover: usize = pres.tops.iter().map(|&s| n.dim(s)).sum();
    let k = omega(m);
    let restricted = hom(&k, n)?.dim();
    let direct = hom(m, n)?.dim();
    Ok(restricted + direct - from_cover)
}

/// Ext¹ as the stable Hom `Hom(ΩM, N)` modulo projective-factoring maps,
/// valid for self-injective algebras.
pub fn ext1_via_stable(m: &QuiverRep, n: &QuiverRep) -> Result<usize> {
    m.same_algebra(n)?;
    if m.is_zero() || n.is_zero() {
        return Ok(0);
    }
    Ok(stable_hom(&omega(m), n)?.dim)
}

/// Comparison of a projective over Λ with the inflation of the matching
/// projective over Λ̄.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ProjectiveHalving {
    pub vertex: usize,
    pub dim_full: usize,
    pub dim_bar: usize,
    /// The projective cover of the inflated Λ̄-projective is `P_i`.
    pub cover_is_full_projective: bool,
    /// The kernel of `P_i ↠ infl(P̄_i)` is isomorphic to `infl(P̄_i)`.
    pub kernel_is_inflation: bool,
}

impl ProjectiveHalving {
    pub fn holds(&self) -> bool {
        self.dim_full == 2 * self.dim_bar && self.cover_is_full_projective && self.kernel_is_inflation
    }
}

pub fn projective_halving(family: Family, d: u32) -> Result<Vec<ProjectiveHalving>> {
    let full = build_algebra(family, d, Kind::Full)?;
    let bar = build_algebra(family, d, Kind::Bar)?;
    (0..3)
        .map(|i| {
            let p = projective(&full, i);
            let pbar = inflate(&projective(&bar, i))?;
            let (cover, pi) = projective_cover(&pbar)?;
            let kernel = cover.submodule(&pi.kernel());
            Ok(ProjectiveHalving {
                vertex: i,
                dim_full: p.total_dim(),
                dim_bar: pbar.total_dim(),
                cover_is_full_projective: is_isomorphic(&cover, &p)?,
                kernel_is_inflation: is_isomorphic(&kernel, &pbar)?,
            })
        })
        .collect()
}
