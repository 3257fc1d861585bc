//! Exhaustive enumeration of small Λ̄-representations over F2.
//!
//! One arrow per dimension vector is put in normal form (nilpotent Jordan form
//! for the loop, `[I_r 0; 0 0]` otherwise), which meets every isomorphism class.
//! The other arrows are enumerated by backtracking, pruning on each relation as
//! soon as all of its arrows are fixed.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::atlas::entries::atlas;
use crate::atlas::small::{end_dim, iso_to_brick, SmallMat, SmallQuiver, SmallRep};
use crate::error::{Error, Result};
use crate::quiver::{build_algebra, BoundQuiverAlgebra, Family, Kind};
use crate::rep::{radical_series, QuiverRep};

pub const MAX_SWEEP_DIM: usize = 6;

#[derive(Clone, Debug, Serialize)]
pub struct SweepClass {
    pub dims: [usize; 3],
    pub radical_layers: Vec<[usize; 3]>,
    /// Atlas descriptor, or `None` for a brick outside the atlas.
    pub atlas_entry: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub family: Family,
    pub d: u32,
    pub max_total_dim: usize,
    /// Normal-form representations satisfying the relations (not orbits).
    pub reps_enumerated: u64,
    pub brick_reps: u64,
    pub brick_classes: Vec<SweepClass>,
    pub matched: Vec<String>,
    /// Atlas entries within the dimension range that the sweep did not meet.
    pub missing: Vec<String>,
    pub extra: Vec<SweepClass>,
    /// Pairs of distinct brick classes with equal radical layers.
    pub layer_collisions: Vec<(usize, usize)>,
    pub elapsed_ms: u128,
}

impl SweepReport {
    pub fn is_complete(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

struct Rel {
    /// Each term lists arrows in application order.
    terms: Vec<Vec<usize>>,
    source: usize,
    target: usize,
}

fn relations(alg: &BoundQuiverAlgebra) -> Vec<Rel> {
    alg.ideal()
        .generators
        .iter()
        .map(|g| Rel {
            terms: g.terms.iter().map(|p| p.arrows().iter().rev().map(|&a| a as usize).collect()).collect(),
            source: g.terms[0].source(),
            target: g.terms[0].target(),
        })
        .collect()
}

fn holds(rel: &Rel, dims: &[usize; 3], maps: &[SmallMat]) -> bool {
    if dims[rel.source] == 0 || dims[rel.target] == 0 {
        return true;
    }
    let mut sum = SmallMat::zeros(dims[rel.target], dims[rel.source]);
    for term in &rel.terms {
        let mut m = SmallMat::identity(dims[rel.source]);
        for &a in term {
            m = maps[a].mul(&m);
        }
        sum = sum.add(&m);
    }
    sum.is_zero()
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// One unit of parallel work: a dimension vector, a choice for the pinned
/// arrow and a value for the first free arrow.
struct Job {
    dims: [usize; 3],
    fixed: Vec<SmallMat>,
    /// Free arrows still to enumerate, in order.
    free: Vec<usize>,
    /// `checks[k]` = relations that become decidable once `free[..k]` is set;
    /// `checks[0]` is decidable already.
    checks: Vec<Vec<usize>>,
}

fn jobs_for(q: &SmallQuiver, rels: &[Rel], dims: [usize; 3]) -> Vec<Job> {
    let shape = |a: usize| (dims[q.arrows[a].1], dims[q.arrows[a].0]);
    let bits = |a: usize| shape(a).0 * shape(a).1;
    let nonempty: Vec<usize> = (0..q.arrows.len()).filter(|&a| bits(a) > 0).collect();
    let zero_maps: Vec<SmallMat> = (0..q.arrows.len()).map(|a| SmallMat::zeros(shape(a).0, shape(a).1)).collect();

    let loop_arrow = nonempty.iter().copied().find(|&a| q.arrows[a].0 == q.arrows[a].1);
    let pinned = loop_arrow.or_else(|| nonempty.iter().copied().max_by_key(|&a| (bits(a), std::cmp::Reverse(a))));
    let pin_options: Vec<Option<SmallMat>> = match pinned {
        None => vec![None],
        Some(a) if Some(a) == loop_arrow => {
            partitions(shape(a).0, shape(a).0).iter().map(|p| Some(SmallMat::nilpotent_jordan(p))).collect()
        }
        Some(a) => {
            let (r, c) = shape(a);
            (0..=r.min(c)).map(|k| Some(SmallMat::rank_normal_form(r, c, k))).collect()
        }
    };
    let free_all: Vec<usize> = nonempty.iter().copied().filter(|&a| Some(a) != pinned).collect();

    let mut out = Vec::new();
    for pin in pin_options {
        let mut fixed = zero_maps.clone();
        if let (Some(a), Some(m)) = (pinned, pin) {
            fixed[a] = m;
        }
        let mut head_values: Vec<Option<u64>> = vec![None];
        let mut free = free_all.clone();
        if let Some(&first) = free_all.first() {
            head_values = (0..1u64 << bits(first)).map(Some).collect();
            free.remove(0);
        }
        for hv in head_values {
            let mut fx = fixed.clone();
            if let Some(v) = hv {
                let a = free_all[0];
                fx[a] = SmallMat::from_bits(shape(a).0, shape(a).1, v);
            }
            // stage of each relation: index into `free` after which all its arrows are set
            let mut checks = vec![Vec::new(); free.len() + 1];
            for (ri, rel) in rels.iter().enumerate() {
                let stage = rel
                    .terms
                    .iter()
                    .flatten()
                    .map(|a| free.iter().position(|f| f == a).map_or(0, |p| p + 1))
                    .max()
                    .unwrap_or(0);
                checks[stage].push(ri);
            }
            out.push(Job { dims, fixed: fx, free: free.clone(), checks });
        }
    }
    out
}

#[derive(Default)]
struct JobResult {
    reps: u64,
    brick_reps: u64,
    classes: Vec<SmallRep>,
}

fn run_job(q: &SmallQuiver, rels: &[Rel], job: &Job) -> JobResult {
    let mut res = JobResult::default();
    if !job.checks[0].iter().all(|&r| holds(&rels[r], &job.dims, &job.fixed)) {
        return res;
    }
    let mut maps = job.fixed.clone();
    descend(q, rels, job, 0, &mut maps, &mut res);
    res
}

fn descend(q: &SmallQuiver, rels: &[Rel], job: &Job, k: usize, maps: &mut Vec<SmallMat>, res: &mut JobResult) {
    if k == job.free.len() {
        res.reps += 1;
        let rep = SmallRep { dims: job.dims, maps: maps.clone() };
        if end_dim(q, &rep) == Some(1) {
            res.brick_reps += 1;
            if !res.classes.iter().any(|c| iso_to_brick(q, c, &rep)) {
                res.classes.push(rep);
            }
        }
        return;
    }
    let a = job.free[k];
    let (t, s) = (job.dims[q.arrows[a].1], job.dims[q.arrows[a].0]);
    for v in 0..1u64 << (t * s) {
        maps[a] = SmallMat::from_bits(t, s, v);
        if job.checks[k + 1].iter().all(|&r| holds(&rels[r], &job.dims, maps)) {
            descend(q, rels, job, k + 1, maps, res);
        }
    }
}

fn to_small(m: &QuiverRep) -> SmallRep {
    SmallRep { dims: m.dims(), maps: m.maps().iter().map(SmallMat::from_f2).collect() }
}

fn to_rep(alg: &std::sync::Arc<BoundQuiverAlgebra>, s: &SmallRep) -> Result<QuiverRep> {
    QuiverRep::new(alg.clone(), s.dims, s.maps.iter().map(SmallMat::to_f2).collect())
}

/// Enumerates every Λ̄-representation over F2 of total dimension at most
/// `max_total_dim`, keeps those with one-dimensional endomorphism ring, groups
/// them into isomorphism classes and compares the classes with the atlas.
pub fn completeness_sweep(family: Family, d: u32, max_total_dim: usize) -> Result<SweepReport> {
    if max_total_dim > MAX_SWEEP_DIM {
        return Err(Error::Unsupported(format!(
            "completeness sweep is exhaustive only up to total dimension {MAX_SWEEP_DIM}, got {max_total_dim}"
        )));
    }
    let start = Instant::now();
    let alg = build_algebra(family, d, Kind::Bar)?;
    let q = SmallQuiver { arrows: alg.quiver().arrows().iter().map(|a| (a.source, a.target)).collect() };
    let rels = relations(&alg);

    let mut all_dims = Vec::new();
    for total in 1..=max_total_dim {
        for a in 0..=total {
            for b in 0..=total - a {
                all_dims.push([a, b, total - a - b]);
            }
        }
    }
    let jobs: Vec<Job> = all_dims.iter().flat_map(|&dv| jobs_for(&q, &rels, dv)).collect();
    let results: Vec<JobResult> = jobs.par_iter().map(|j| run_job(&q, &rels, j)).collect();

    let mut reps = 0;
    let mut brick_reps = 0;
    let mut classes: Vec<SmallRep> = Vec::new();
    for r in results {
        reps += r.reps;
        brick_reps += r.brick_reps;
        for c in r.classes {
            if !classes.iter().any(|k| iso_to_brick(&q, k, &c)) {
                classes.push(c);
            }
        }
    }

    let entries = atlas(family, d)?;
    let atlas_small: Vec<(String, SmallRep)> =
        entries.iter().map(|e| (e.descriptor.clone(), to_small(&e.rep_bar))).collect();
    let mut brick_classes = Vec::new();
    for c in &classes {
        let layers = radical_series(&to_rep(&alg, c)?);
        let hit = atlas_small.iter().find(|(_, a)| iso_to_brick(&q, a, c)).map(|(n, _)| n.clone());
        brick_classes.push(SweepClass { dims: c.dims, radical_layers: layers, atlas_entry: hit });
    }
    brick_classes.sort_by(|x, y| {
        let key = |c: &SweepClass| (c.dims.iter().sum::<usize>(), c.dims, c.radical_layers.clone());
        key(x).cmp(&key(y))
    });

    let matched: Vec<String> = brick_classes.iter().filter_map(|c| c.atlas_entry.clone()).collect();
    let missing = entries
        .iter()
        .filter(|e| e.rep_bar.total_dim() <= max_total_dim && !matched.contains(&e.descriptor))
        .map(|e| e.descriptor.clone())
        .collect();
    let extra = brick_classes.iter().filter(|c| c.atlas_entry.is_none()).cloned().collect();

    let mut by_layers: BTreeMap<Vec<[usize; 3]>, Vec<usize>> = BTreeMap::new();
    for (i, c) in brick_classes.iter().enumerate() {
        by_layers.entry(c.radical_layers.clone()).or_default().push(i);
    }
    let layer_collisions = by_layers
        .values()
        .flat_map(|v| v.iter().enumerate().flat_map(move |(k, &i)| v[k + 1..].iter().map(move |&j| (i, j))))
        .collect();

    Ok(SweepReport {
        family,
        d,
        max_total_dim,
        reps_enumerated: reps,
        brick_reps,
        brick_classes,
        matched,
        missing,
        extra,
        layer_collisions,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_of_four() {
        assert_eq!(partitions(4, 4).len(), 5);
        assert_eq!(partitions(0, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn a_single_simple_is_one_class() {
        let r = completeness_sweep(Family::I, 2, 1).unwrap();
        assert_eq!(r.reps_enumerated, 3);
        assert_eq!(r.brick_classes.len(), 3);
        assert!(r.is_complete());
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(completeness_sweep(Family::I, 2, 7), Err(Error::Unsupported(_))));
    }
}
