//! Radical and socle series.

use crate::rep::module::{QuiverRep, Sub};

/// `rad^j M` for `j = 0, 1, ...` down to (and excluding) zero.
pub fn radical_filtration(m: &QuiverRep) -> Vec<Sub> {
    let mut out = Vec::new();
    let mut cur = m.full_sub();
    while QuiverRep::sub_dims(&cur).iter().sum::<usize>() > 0 {
        let next = m.radical_of(&cur);
        out.push(cur);
        cur = next;
    }
    out
}

/// `rad^j M` (the zero submodule once `j` reaches the Loewy length).
pub fn radical_power(m: &QuiverRep, j: usize) -> Sub {
    let mut cur = m.full_sub();
    for _ in 0..j {
        cur = m.radical_of(&cur);
    }
    cur
}

/// Dimension vectors of `rad^j M / rad^{j+1} M`, top layer first.
pub fn radical_series(m: &QuiverRep) -> Vec<[usize; 3]> {
    let f = radical_filtration(m);
    let dims: Vec<[usize; 3]> = f.iter().map(QuiverRep::sub_dims).collect();
    (0..dims.len())
        .map(|j| {
            let below = dims.get(j + 1).copied().unwrap_or([0; 3]);
            std::array::from_fn(|v| dims[j][v] - below[v])
        })
        .collect()
}

/// Dimension vectors of `soc^{j+1} M / soc^j M`, socle first.
pub fn socle_series(m: &QuiverRep) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    let mut cur = m.zero_sub();
    let total = m.total_dim();
    let mut prev = [0usize; 3];
    while prev.iter().sum::<usize>() < total {
        cur = m.socle_over(&cur);
        let d = QuiverRep::sub_dims(&cur);
        out.push(std::array::from_fn(|v| d[v] - prev[v]));
        prev = d;
    }
    out
}

pub fn loewy_length(m: &QuiverRep) -> usize {
    radical_filtration(m).len()
}

pub fn top_dims(m: &QuiverRep) -> [usize; 3] {
    let rad = QuiverRep::sub_dims(&m.radical());
    std::array::from_fn(|v| m.dim(v) - rad[v])
}

pub fn socle_dims(m: &QuiverRep) -> [usize; 3] {
    QuiverRep::sub_dims(&m.socle())
}

/// Every radical layer is a single simple module.
pub fn is_uniserial(m: &QuiverRep) -> bool {
    radical_series(m).iter().all(|l| l.iter().sum::<usize>() == 1)
}

/// Vertex of each layer of a uniserial module, top first.
pub fn uniserial_pattern(m: &QuiverRep) -> Option<Vec<usize>> {
    radical_series(m)
        .iter()
        .map(|l| if l.iter().sum::<usize>() == 1 { l.iter().position(|&x| x == 1) } else { None })
        .collect()
}

/// Diagram-style rendering: one line per radical layer, e.g. `1+2`.
pub fn render_layers(layers: &[[usize; 3]]) -> Vec<String> {
    layers
        .iter()
        .map(|l| {
            let mut parts = Vec::new();
            for (v, &k) in l.iter().enumerate() {
                for _ in 0..k {
                    parts.push(v.to_string());
                }
            }
            if parts.is_empty() {
                "-".to_string()
            } else {
                parts.join("+")
            }
        })
        .collect()
}
