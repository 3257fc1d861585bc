//! Bound quiver algebras with a path basis and a monomial multiplication table.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::arith::{F2Matrix, F2Vec};
use crate::error::{Error, Result};
use crate::quiver::family::{expected_projective_loewy_lengths, relation_ideal, Family, Kind, Quiver, RelationIdeal};
use crate::quiver::path::PathWord;
use crate::quiver::rewrite::{RewriteSystem, Word};

const ZERO: u32 = u32::MAX;

/// `kQ/I` for one of the three families, with basis the normal-form paths
/// sorted by (length, arrow order).
#[derive(Debug)]
pub struct BoundQuiverAlgebra {
    family: Family,
    d: u32,
    kind: Kind,
    quiver: Quiver,
    ideal: RelationIdeal,
    rewriter: RewriteSystem,
    basis: Vec<PathWord>,
    index: HashMap<PathWord, usize>,
    /// `left[a][b]` = index of `arrow_a · basis_b`, or `ZERO`.
    left: Vec<Vec<u32>>,
    table: Vec<u32>,
    /// For a nontrivial basis path `a·p'`, the arrow `a` and the index of `p'`.
    split: Vec<Option<(u8, u32)>>,
    loewy_length: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlgebraId {
    pub family: Family,
    pub d: u32,
    pub kind: Kind,
}

impl BoundQuiverAlgebra {
    pub fn id(&self) -> AlgebraId {
        AlgebraId { family: self.family, d: self.d, kind: self.kind }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn ideal(&self) -> &RelationIdeal {
        &self.ideal
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[PathWord] {
        &self.basis
    }

    pub fn basis_index(&self, p: &PathWord) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn loewy_length(&self) -> usize {
        self.loewy_length
    }

    /// Length cap under which the presentation was certified.
    pub fn cap(&self) -> usize {
        self.rewriter.cap()
    }

    /// Number of rules in the completed rewriting system.
    pub fn num_rewrite_rules(&self) -> usize {
        self.rewriter.num_rules()
    }

    /// Index of `e_v`.
    pub fn idempotent(&self, v: usize) -> usize {
        v
    }

    /// `basis_i · basis_j` as a basis index, or `None` for zero.
    pub fn product(&self, i: usize, j: usize) -> Option<usize> {
        let n = self.basis.len();
        let p = self.table[i * n + j];
        (p != ZERO).then_some(p as usize)
    }

    /// `arrow · basis_b`.
    pub fn arrow_times(&self, arrow: usize, b: usize) -> Option<usize> {
        let p = self.left[arrow][b];
        (p != ZERO).then_some(p as usize)
    }

    /// Decomposition `basis_b = arrow · basis_rest` of a nontrivial basis path.
    /// Normal forms are closed under taking factors, so `rest` is again a basis path.
    pub fn split_first(&self, b: usize) -> Option<(usize, usize)> {
        self.split[b].map(|(a, r)| (a as usize, r as usize))
    }

    /// Normal form of an arbitrary path, `None` if it vanishes in the algebra.
    pub fn normal_form(&self, p: &PathWord) -> Option<usize> {
        if p.is_trivial() {
            return Some(p.source());
        }
        let w = self.rewriter.reduce(p.arrows())?;
        self.index.get(&PathWord::from_parts(p.source(), p.target(), w)).copied()
    }

    /// Normal form of the concatenation of two basis words, computed by
    /// rewriting the concatenated word (independent of the table).
    pub fn product_by_rewriting(&self, i: usize, j: usize) -> Option<usize> {
        self.basis[i].compose(&self.basis[j]).and_then(|p| self.normal_form(&p))
    }

    /// Basis indices of `e_target Λ e_source`.
    pub fn paths_between(&self, source: usize, target: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.basis[b].source() == source && self.basis[b].target() == target).collect()
    }

    /// `cartan[i][j] = dim e_j Λ e_i`.
    pub fn cartan(&self) -> [[u32; 3]; 3] {
        let mut c = [[0u32; 3]; 3];
        for p in &self.basis {
            c[p.source()][p.target()] += 1;
        }
        c
    }

    /// Radical depth of a basis element (length of its normal form).
    pub fn depth(&self, b: usize) -> usize {
        self.basis[b].len()
    }

    /// Evaluates a path word as a linear map `target × source` on a
    /// representation given by arrow matrices.
    pub fn eval_path(&self, p: &PathWord, maps: &[F2Matrix], dims: &[usize; 3]) -> F2Matrix {
        let mut m = F2Matrix::identity(dims[p.source()]);
        for &a in p.arrows().iter().rev() {
            m = maps[a as usize].mul(&m);
        }
        m
    }
}

fn word_greater_lex(a: &PathWord, b: &PathWord) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.arrows().cmp(b.arrows())).then_with(|| a.source().cmp(&b.source()))
}

fn rewrite_pairs(ideal: &RelationIdeal) -> Result<Vec<(Word, Option<Word>)>> {
    ideal
        .generators
        .iter()
        .map(|g| match g.terms.as_slice() {
            [u] => Ok((u.arrows().to_vec(), None)),
            [u, v] => Ok((u.arrows().to_vec(), Some(v.arrows().to_vec()))),
            _ => Err(Error::Unsupported("relation with more than two terms".into())),
        })
        .collect()
}

/// Enumerates irreducible words by prepending arrows level by level.
fn normal_forms(q: &Quiver, sys: &RewriteSystem) -> Vec<PathWord> {
    let mut all: Vec<PathWord> = (0..q.num_vertices()).map(PathWord::trivial).collect();
    let mut level = all.clone();
    while !level.is_empty() {
        let mut next = Vec::new();
        for w in &level {
            for (a, arrow) in q.arrows().iter().enumerate() {
                if arrow.source != w.target() || w.len() + 1 >= sys.cap() {
                    continue;
                }
                let mut cand = Vec::with_capacity(w.len() + 1);
                cand.push(a as u8);
                cand.extend_from_slice(w.arrows());
                if !sys.has_prefix_redex(&cand) {
                    next.push(PathWord::from_parts(w.source(), arrow.target, cand));
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all.sort_by(word_greater_lex);
    all
}

fn build_uncached(family: Family, d: u32, kind: Kind) -> Result<BoundQuiverAlgebra> {
    let ideal = relation_ideal(family, d, kind)?;
    let quiver = Quiver::for_family(family);
    let pairs = rewrite_pairs(&ideal)?;
    let expected = *expected_projective_loewy_lengths(family, d)?.iter().max().unwrap_or(&1);
    let hard_limit = 4 * expected;
    let mut cap = expected + 2;
    let (rewriter, basis) = loop {
        let sys = RewriteSystem::complete(pairs.clone(), cap)?;
        let basis = normal_forms(&quiver, &sys);
        let longest = basis.iter().map(|p| p.len()).max().unwrap_or(0);
        if longest + 1 < cap {
            break (sys, basis);
        }
        if cap >= hard_limit {
            return Err(Error::CapExhausted(format!(
                "family {family}, d={d}, {kind}: paths of length {longest} survive at cap {cap}"
            )));
        }
        cap = (cap * 2).min(hard_limit);
    };
    let index: HashMap<PathWord, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let n = basis.len();
    let mut left = vec![vec![ZERO; n]; quiver.arrows().len()];
    for (a, arrow) in quiver.arrows().iter().enumerate() {
        for (b, w) in basis.iter().enumerate() {
            if arrow.source != w.target() {
                continue;
            }
            let mut cand = vec![a as u8];
            cand.extend_from_slice(w.arrows());
            if let Some(nf) = rewriter.reduce(&cand) {
                left[a][b] = index[&PathWord::from_parts(w.source(), arrow.target, nf)] as u32;
            }
        }
    }
    let mut table = vec![ZERO; n * n];
    for (i, p) in basis.iter().enumerate() {
        for (j, q) in basis.iter().enumerate() {
            if p.source() != q.target() {
                continue;
            }
            let mut cur = j as u32;
            for &a in p.arrows().iter().rev() {
                cur = left[a as usize][cur as usize];
                if cur == ZERO {
                    break;
                }
            }
            table[i * n + j] = cur;
        }
    }
    let split = basis
        .iter()
        .map(|p| {
            let (&a, rest) = p.arrows().split_first()?;
            let rest = PathWord::from_parts(p.source(), quiver.arrow(a as usize).source, rest.to_vec());
            Some((a, index[&rest] as u32))
        })
        .collect();
    let loewy_length = basis.iter().map(|p| p.len()).max().unwrap_or(0) + 1;
    Ok(BoundQuiverAlgebra { family, d, kind, quiver, ideal, rewriter, basis, index, left, table, split, loewy_length })
}

/// Builds (or fetches from a process-wide cache) the algebra Λ or Λ̄.
pub fn build_algebra(family: Family, d: u32, kind: Kind) -> Result<Arc<BoundQuiverAlgebra>> {
    static CACHE: OnceLock<Mutex<HashMap<AlgebraId, Arc<BoundQuiverAlgebra>>>> = OnceLock::new();
    let id = AlgebraId { family, d, kind };
    let cache = CACHE.get_or_init(Default::default);
    if let Some(a) = cache.lock().expect("algebra cache poisoned").get(&id) {
        return Ok(a.clone());
    }
    let a = Arc::new(build_uncached(family, d, kind)?);
    Ok(cache.lock().expect("algebra cache poisoned").entry(id).or_insert(a).clone())
}

/// The surjection `π: Λ → Λ̄` along which Λ̄-modules are inflated.
#[derive(Clone, Debug)]
pub struct PiLambdaWitness {
    pub family: Family,
    pub d: u32,
    /// `images[a]` lists the Λ̄ basis paths summing to `π(arrow a)`.
    pub images: Vec<Vec<usize>>,
    /// Basis matrix of π, `dim Λ̄ × dim Λ`.
    pub matrix: F2Matrix,
    pub kernel_dim: usize,
}

impl PiLambdaWitness {
    /// Every arrow is sent to itself.
    pub fn is_identity(&self) -> bool {
        self.images.iter().all(|t| t.len() == 1)
    }

    /// `π(arrow)` rendered as a sum of words.
    pub fn describe(&self, bar: &BoundQuiverAlgebra) -> Vec<String> {
        self.images
            .iter()
            .enumerate()
            .map(|(a, terms)| {
                let rhs: Vec<String> = terms.iter().map(|&b| bar.basis()[b].display(bar.quiver())).collect();
                format!("{} -> {}", bar.quiver().arrow(a).name, rhs.join(" + "))
            })
            .collect()
    }
}

/// Images of the arrows under π. The identity on arrows already kills every
/// relation of Λ, but only these corrected maps have kernel isomorphic to Λ̄
/// on each projective (the family I and III corrections add the longest path
/// of Λ̄ parallel to the arrow, resp. `δβγ`).
fn pi_arrow_images(bar: &BoundQuiverAlgebra) -> Result<Vec<Vec<usize>>> {
    let q = bar.quiver();
    let k2 = 1usize << (bar.d() - 2);
    let single = |w: &str| -> Result<usize> {
        bar.normal_form(&q.word(w)).ok_or_else(|| Error::Surjection(format!("{w} vanishes in the quotient")))
    };
    let repeat = |head: &str, period: &str, k: usize| {
        let mut w = head.to_string();
        for _ in 0..k {
            w.push(' ');
            w.push_str(period);
        }
        w
    };
    let mut images: Vec<Vec<usize>> =
        q.arrows().iter().map(|a| single(a.name).map(|b| vec![b])).collect::<Result<_>>()?;
    let mut correct = |name: &str, w: String| -> Result<()> {
        let a = q.arrow_index(name).expect("arrow of the family");
        images[a].push(single(&w)?);
        Ok(())
    };
    match bar.family() {
        Family::I => {
            correct("gamma", repeat("gamma eta delta", "beta gamma eta delta", k2 - 1))?;
            correct("eta", repeat("beta gamma eta", "delta beta gamma eta", k2 - 1))?;
        }
        Family::II => {}
        Family::III => correct("delta", "delta beta gamma".into())?,
    }
    Ok(images)
}

fn image_of(bar: &BoundQuiverAlgebra, images: &[Vec<usize>], p: &PathWord) -> F2Vec {
    let mut v = F2Vec::unit(bar.dim(), p.source());
    for &a in p.arrows().iter().rev() {
        let mut next = F2Vec::zeros(bar.dim());
        for b in v.iter_ones() {
            for &c in &images[a as usize] {
                if let Some(x) = bar.product(c, b) {
                    next.set(x, !next.get(x));
                }
            }
        }
        v = next;
    }
    v
}

/// Verifies that every generator of I vanishes under π and that π is onto,
/// returning the matrix of π.
pub fn check_pi_lambda(family: Family, d: u32) -> Result<PiLambdaWitness> {
    let full = build_algebra(family, d, Kind::Full)?;
    let bar = build_algebra(family, d, Kind::Bar)?;
    let images = pi_arrow_images(&bar)?;
    let q = full.quiver();
    for g in &full.ideal().generators {
        let mut sum = F2Vec::zeros(bar.dim());
        for t in &g.terms {
            sum.xor_assign(&image_of(&bar, &images, t));
        }
        if !sum.is_zero() {
            return Err(Error::Surjection(format!(
                "{} is not sent to zero",
                g.terms.iter().map(|t| t.display(q)).collect::<Vec<_>>().join(" - ")
            )));
        }
    }
    let cols: Vec<F2Vec> = full.basis().iter().map(|p| image_of(&bar, &images, p)).collect();
    let matrix = F2Matrix::from_col_vecs(&cols, bar.dim());
    let rank = matrix.rank();
    if rank != bar.dim() {
        return Err(Error::Surjection(format!("image has rank {rank}, expected {}", bar.dim())));
    }
    Ok(PiLambdaWitness { family, d, images, kernel_dim: full.dim() - rank, matrix })
}

type PiCache = Mutex<HashMap<(Family, u32), Arc<PiLambdaWitness>>>;

/// Cached [`check_pi_lambda`].
pub fn pi_lambda(family: Family, d: u32) -> Result<Arc<PiLambdaWitness>> {
    static CACHE: OnceLock<PiCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(w) = cache.lock().expect("pi cache poisoned").get(&(family, d)) {
        return Ok(w.clone());
    }
    let w = Arc::new(check_pi_lambda(family, d)?);
    Ok(cache.lock().expect("pi cache poisoned").entry((family, d)).or_insert(w).clone())
}
