//! Simple, projective and string modules, and inflation along `Λ ↠ Λ̄`.

use std::sync::Arc;

use crate::arith::F2Matrix;
use crate::error::{Error, Result};
use crate::quiver::{build_algebra, parse_word, pi_lambda, BoundQuiverAlgebra, Kind, StringWord};
use crate::rep::module::QuiverRep;

pub fn simple(algebra: &Arc<BoundQuiverAlgebra>, i: usize) -> QuiverRep {
    let dims = std::array::from_fn(|v| usize::from(v == i));
    let maps = algebra.quiver().arrows().iter().map(|a| F2Matrix::zeros(dims[a.target], dims[a.source])).collect();
    QuiverRep::new_unchecked(algebra.clone(), dims, maps)
}

/// `P_i = Λ e_i` with vertex-`j` space `e_j Λ e_i` and left multiplication.
pub fn projective(algebra: &Arc<BoundQuiverAlgebra>, i: usize) -> QuiverRep {
    let spaces: [Vec<usize>; 3] = std::array::from_fn(|j| algebra.paths_between(i, j));
    let mut pos = vec![usize::MAX; algebra.dim()];
    for s in &spaces {
        for (k, &b) in s.iter().enumerate() {
            pos[b] = k;
        }
    }
    let maps = algebra
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let mut m = F2Matrix::zeros(spaces[arrow.target].len(), spaces[arrow.source].len());
            for (col, &b) in spaces[arrow.source].iter().enumerate() {
                if let Some(c) = algebra.arrow_times(a, b) {
                    m.set(pos[c], col, true);
                }
            }
            m
        })
        .collect();
    QuiverRep::new_unchecked(algebra.clone(), std::array::from_fn(|j| spaces[j].len()), maps)
}

/// Builds the string module of Definition-style words: a directed path gives a
/// uniserial module with one basis vector per visited vertex; a two-letter
/// hybrid gives a three-dimensional module with `soc = rad`.
pub fn string_module(algebra: &Arc<BoundQuiverAlgebra>, word: &StringWord) -> Result<QuiverRep> {
    let q = algebra.quiver();
    let mut dims = [0usize; 3];
    let mut place = |v: usize| {
        dims[v] += 1;
        (v, dims[v] - 1)
    };
    // (arrow, from basis vector, to basis vector)
    let mut edges: Vec<(usize, (usize, usize), (usize, usize))> = Vec::new();
    match word {
        StringWord::Direct(p) => {
            let verts = p.vertices(q);
            let slots: Vec<(usize, usize)> = verts.iter().map(|&v| place(v)).collect();
            for (j, &a) in p.arrows().iter().rev().enumerate() {
                edges.push((a as usize, slots[j], slots[j + 1]));
            }
        }
        StringWord::Peak { left, right } => {
            let (l, r) = (q.arrow(*left as usize), q.arrow(*right as usize));
            let x = place(l.source);
            let yr = place(r.target);
            let yl = place(l.target);
            edges.push((*right as usize, x, yr));
            edges.push((*left as usize, x, yl));
        }
        StringWord::Valley { left, right } => {
            let (l, r) = (q.arrow(*left as usize), q.arrow(*right as usize));
            let xr = place(r.source);
            let xl = place(l.source);
            let y = place(r.target);
            edges.push((*right as usize, xr, y));
            edges.push((*left as usize, xl, y));
        }
    }
    let mut maps: Vec<F2Matrix> = q.arrows().iter().map(|a| F2Matrix::zeros(dims[a.target], dims[a.source])).collect();
    for (a, (_, from), (_, to)) in edges {
        maps[a].set(to, from, true);
    }
    QuiverRep::new(algebra.clone(), dims, maps).map_err(|e| match e {
        Error::RelationViolation(msg) => Error::RelationViolation(format!(
            "{} is not a module word (word in second socle / violates relation): {msg}",
            word.display(q)
        )),
        e => e,
    })
}

/// Parses `word` with the path-word grammar and builds its string module.
pub fn string_module_str(algebra: &Arc<BoundQuiverAlgebra>, word: &str) -> Result<QuiverRep> {
    string_module(algebra, &parse_word(algebra.quiver(), word)?)
}

/// Views a Λ̄-module as a Λ-module along `π_Λ`.
pub fn inflate(m: &QuiverRep) -> Result<QuiverRep> {
    let bar = m.algebra();
    if bar.kind() != Kind::Bar {
        return Err(Error::Unsupported("inflation expects a module over the quotient algebra".into()));
    }
    let w = pi_lambda(bar.family(), bar.d())?;
    let full = build_algebra(bar.family(), bar.d(), Kind::Full)?;
    let maps = w
        .images
        .iter()
        .enumerate()
        .map(|(a, terms)| {
            let arrow = full.quiver().arrow(a);
            let mut x = F2Matrix::zeros(m.dim(arrow.target), m.dim(arrow.source));
            for &b in terms {
                x.add_assign(m.path_action(b));
            }
            x
        })
        .collect();
    QuiverRep::new(full, m.dims(), maps)
}
