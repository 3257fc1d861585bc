//! The fifteen bricks per family, built over Λ̄ and inflated to Λ.

use serde::Serialize;

use crate::error::Result;
use crate::quiver::{build_algebra, parse_word, Family, Kind, StringWord};
use crate::rep::{
    end_dim, hom, inflate, is_isomorphic, radical_series, stable_hom, string_module, QuiverRep,
};

/// One atlas line: a word and the radical layers of the printed diagram.
#[derive(Clone, Copy, Debug)]
pub struct AtlasSpec {
    pub word: &'static str,
    pub diagram: &'static [&'static [usize]],
}

const fn s(word: &'static str, diagram: &'static [&'static [usize]]) -> AtlasSpec {
    AtlasSpec { word, diagram }
}

const FAMILY_I_III: [AtlasSpec; 15] = [
    s("e0", &[&[0]]),
    s("e1", &[&[1]]),
    s("e2", &[&[2]]),
    s("beta", &[&[1], &[0]]),
    s("gamma", &[&[0], &[1]]),
    s("delta", &[&[0], &[2]]),
    s("eta", &[&[2], &[0]]),
    s("delta*beta", &[&[1], &[0], &[2]]),
    s("gamma*eta", &[&[2], &[0], &[1]]),
    s("delta*beta*gamma", &[&[0], &[1], &[0], &[2]]),
    s("gamma*eta*delta", &[&[0], &[2], &[0], &[1]]),
    s("eta*delta*beta", &[&[1], &[0], &[2], &[0]]),
    s("beta*gamma*eta", &[&[2], &[0], &[1], &[0]]),
    s("gamma*delta^-1", &[&[0], &[1, 2]]),
    s("beta^-1*eta", &[&[1, 2], &[0]]),
];

const FAMILY_II: [AtlasSpec; 15] = [
    s("e0", &[&[0]]),
    s("e1", &[&[1]]),
    s("e2", &[&[2]]),
    s("beta", &[&[0], &[1]]),
    s("gamma", &[&[1], &[0]]),
    s("delta", &[&[1], &[2]]),
    s("eta", &[&[2], &[1]]),
    s("kappa", &[&[0], &[2]]),
    s("lambda", &[&[2], &[0]]),
    s("beta*kappa^-1", &[&[0], &[1, 2]]),
    s("gamma*delta^-1", &[&[1], &[0, 2]]),
    s("lambda*eta^-1", &[&[2], &[0, 1]]),
    s("gamma^-1*lambda", &[&[1, 2], &[0]]),
    s("beta^-1*eta", &[&[0, 2], &[1]]),
    s("kappa^-1*delta", &[&[0, 1], &[2]]),
];

pub fn atlas_specs(family: Family) -> &'static [AtlasSpec; 15] {
    match family {
        Family::I | Family::III => &FAMILY_I_III,
        Family::II => &FAMILY_II,
    }
}

pub fn diagram_dims(diagram: &[&[usize]]) -> Vec<[usize; 3]> {
    diagram
        .iter()
        .map(|layer| {
            let mut d = [0; 3];
            for &v in *layer {
                d[v] += 1;
            }
            d
        })
        .collect()
}

/// A brick over Λ̄ together with its inflation to Λ.
#[derive(Clone, Debug)]
pub struct BrickEntry {
    pub family: Family,
    pub d: u32,
    pub descriptor: String,
    pub word: StringWord,
    pub diagram: Vec<[usize; 3]>,
    pub rep_bar: QuiverRep,
    pub rep_full: QuiverRep,
    pub radical_layers: Vec<[usize; 3]>,
    pub end_dim_bar: usize,
    pub end_dim_full: usize,
    pub stable_end_dim_full: usize,
    pub factoring_dim_full: usize,
    /// The inflation is isomorphic to the string module of the same word over Λ.
    pub matches_full_string: bool,
    pub is_hybrid: bool,
    /// `soc = rad` (checked as equal dimension vectors and containment).
    pub soc_equals_rad: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BrickSummary {
    pub descriptor: String,
    pub dims: [usize; 3],
    pub radical_layers: Vec<[usize; 3]>,
    pub end_dim_bar: usize,
    pub end_dim_full: usize,
    pub stable_end_dim_full: usize,
    pub factoring_dim_full: usize,
    pub matches_diagram: bool,
    pub matches_full_string: bool,
}

impl BrickEntry {
    pub fn dims(&self) -> [usize; 3] {
        self.rep_bar.dims()
    }

    pub fn label(&self) -> String {
        match &self.word {
            StringWord::Direct(p) if p.is_trivial() => format!("S{}", p.source()),
            _ => format!("M_{}", self.descriptor),
        }
    }

    /// Every way in which the entry departs from the expected brick structure.
    pub fn problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        let l = self.label();
        if self.radical_layers != self.diagram {
            out.push(format!("{l}: radical layers {:?} differ from the diagram {:?}", self.radical_layers, self.diagram));
        }
        if self.end_dim_bar != 1 {
            out.push(format!("{l}: End over the quotient has dimension {}", self.end_dim_bar));
        }
        if self.end_dim_full != 1 {
            out.push(format!("{l}: End of the inflation has dimension {}", self.end_dim_full));
        }
        if self.stable_end_dim_full != 1 || self.factoring_dim_full != 0 {
            out.push(format!(
                "{l}: stable End of the inflation has dimension {} (projective-factoring part {})",
                self.stable_end_dim_full, self.factoring_dim_full
            ));
        }
        if !self.matches_full_string {
            out.push(format!("{l}: inflation is not isomorphic to the string module over the full algebra"));
        }
        if self.is_hybrid && !self.soc_equals_rad {
            out.push(format!("{l}: hybrid module with soc != rad"));
        }
        out
    }

    pub fn summary(&self) -> BrickSummary {
        BrickSummary {
            descriptor: self.descriptor.clone(),
            dims: self.dims(),
            radical_layers: self.radical_layers.clone(),
            end_dim_bar: self.end_dim_bar,
            end_dim_full: self.end_dim_full,
            stable_end_dim_full: self.stable_end_dim_full,
            factoring_dim_full: self.factoring_dim_full,
            matches_diagram: self.radical_layers == self.diagram,
            matches_full_string: self.matches_full_string,
        }
    }
}

fn build_entry(family: Family, d: u32, spec: &AtlasSpec) -> Result<BrickEntry> {
    let bar = build_algebra(family, d, Kind::Bar)?;
    let full = build_algebra(family, d, Kind::Full)?;
    let word = parse_word(bar.quiver(), spec.word)?;
    let rep_bar = string_module(&bar, &word)?;
    let rep_full = inflate(&rep_bar)?;
    let full_string = string_module(&full, &word)?;
    let st = stable_hom(&rep_full, &rep_full)?;
    let rad = rep_bar.radical();
    let soc = rep_bar.socle();
    let soc_equals_rad = (0..3).all(|v| soc[v] == rad[v]);
    Ok(BrickEntry {
        family,
        d,
        descriptor: spec.word.to_string(),
        is_hybrid: matches!(word, StringWord::Peak { .. } | StringWord::Valley { .. }),
        word,
        diagram: diagram_dims(spec.diagram),
        radical_layers: radical_series(&rep_bar),
        end_dim_bar: end_dim(&rep_bar)?,
        end_dim_full: hom(&rep_full, &rep_full)?.dim(),
        stable_end_dim_full: st.dim,
        factoring_dim_full: st.factoring_dim,
        matches_full_string: is_isomorphic(&rep_full, &full_string)?,
        soc_equals_rad,
        rep_bar,
        rep_full,
    })
}

/// Builds the fifteen atlas entries for `(family, d)`.
pub fn atlas(family: Family, d: u32) -> Result<Vec<BrickEntry>> {
    family.check_d(d)?;
    atlas_specs(family).iter().map(|spec| build_entry(family, d, spec)).collect()
}
