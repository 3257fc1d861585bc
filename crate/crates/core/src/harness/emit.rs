//! JSON files and text renderings for algebras, modules, atlases and reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::F2Matrix;
use crate::error::{Error, Result};
use crate::quiver::{build_algebra, AlgebraId, BoundQuiverAlgebra, Family, Kind, PathWord};
use crate::rep::{projective, radical_series, render_layers, QuiverRep};

pub const SCHEMA_VERSION: u32 = 1;

fn check_schema(v: u32) -> Result<()> {
    if v == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(Error::Json(format!("schema_version {v}, expected {SCHEMA_VERSION}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectiveSummary {
    pub vertex: usize,
    pub dims: [usize; 3],
    pub radical_layers: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub schema_version: u32,
    pub family: Family,
    pub d: u32,
    pub kind: Kind,
    pub dim: usize,
    pub cartan: [[u32; 3]; 3],
    pub loewy_length: usize,
    pub arrows: Vec<(String, usize, usize)>,
    /// Basis paths as arrow-name lists; a trivial path is `["e<v>"]`.
    pub basis: Vec<Vec<String>>,
    pub projectives: Vec<ProjectiveSummary>,
}

pub fn algebra_file(alg: &std::sync::Arc<BoundQuiverAlgebra>) -> AlgebraFile {
    let q = alg.quiver();
    AlgebraFile {
        schema_version: SCHEMA_VERSION,
        family: alg.family(),
        d: alg.d(),
        kind: alg.kind(),
        dim: alg.dim(),
        cartan: alg.cartan(),
        loewy_length: alg.loewy_length(),
        arrows: q.arrows().iter().map(|a| (a.name.to_string(), a.source, a.target)).collect(),
        basis: alg.basis().iter().map(|p| p.names(q)).collect(),
        projectives: (0..3)
            .map(|i| {
                let p = projective(alg, i);
                ProjectiveSummary { vertex: i, dims: p.dims(), radical_layers: radical_series(&p) }
            })
            .collect(),
    }
}

/// Rebuilds the algebra named in the file and checks that it reproduces the file.
pub fn load_algebra(json: &str) -> Result<std::sync::Arc<BoundQuiverAlgebra>> {
    let f: AlgebraFile = serde_json::from_str(json)?;
    check_schema(f.schema_version)?;
    let alg = build_algebra(f.family, f.d, f.kind)?;
    for names in &f.basis {
        PathWord::from_names(alg.quiver(), names)?;
    }
    if algebra_file(&alg) != f {
        return Err(Error::Check(format!("file does not match the rebuilt algebra {:?}", alg.id())));
    }
    Ok(alg)
}

/// Diagram-style rendering: projectives side by side is impractical for long
/// series, so each projective is a centred column of layers.
pub fn algebra_text(alg: &std::sync::Arc<BoundQuiverAlgebra>) -> String {
    let f = algebra_file(alg);
    let mut out = String::new();
    out.push_str(&format!("family {}, d = {}, kind {}\n", f.family, f.d, f.kind));
    out.push_str(&format!("dim {}, Loewy length {}\n", f.dim, f.loewy_length));
    let rows: Vec<String> =
        f.cartan.iter().map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))).collect();
    out.push_str(&format!("Cartan [{}]\n", rows.join(",")));
    for p in &f.projectives {
        let layers = render_layers(&p.radical_layers);
        let width = layers.iter().map(String::len).max().unwrap_or(1).max(5);
        out.push_str(&format!("\nP{} (dim {}, {} layers)\n", p.vertex, p.dims.iter().sum::<usize>(), layers.len()));
        for l in layers {
            out.push_str(&format!("  {l:^width$}\n"));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleFile {
    pub schema_version: u32,
    pub algebra: AlgebraId,
    pub word: Option<String>,
    pub dims: [usize; 3],
    /// Arrow name to matrix rows as bit strings.
    pub arrows: BTreeMap<String, Vec<String>>,
}

pub fn module_file(m: &QuiverRep, word: Option<&str>) -> ModuleFile {
    let q = m.algebra().quiver();
    ModuleFile {
        schema_version: SCHEMA_VERSION,
        algebra: m.algebra().id(),
        word: word.map(str::to_string),
        dims: m.dims(),
        arrows: q.arrows().iter().enumerate().map(|(a, arrow)| (arrow.name.to_string(), m.map(a).to_bit_strings())).collect(),
    }
}

pub fn load_module(json: &str) -> Result<QuiverRep> {
    let f: ModuleFile = serde_json::from_str(json)?;
    check_schema(f.schema_version)?;
    let alg = build_algebra(f.algebra.family, f.algebra.d, f.algebra.kind)?;
    let q = alg.quiver();
    if f.arrows.len() != q.arrows().len() {
        return Err(Error::DimensionMismatch(format!("{} maps for {} arrows", f.arrows.len(), q.arrows().len())));
    }
    let maps = q
        .arrows()
        .iter()
        .map(|arrow| {
            let rows = f
                .arrows
                .get(arrow.name)
                .ok_or_else(|| Error::Json(format!("missing map for arrow {}", arrow.name)))?;
            let cols = f.dims[arrow.source];
            if rows.len() != f.dims[arrow.target] {
                return Err(Error::DimensionMismatch(format!("map {} has {} rows", arrow.name, rows.len())));
            }
            F2Matrix::from_bit_strings(rows, cols)
        })
        .collect::<Result<Vec<_>>>()?;
    QuiverRep::new(alg, f.dims, maps)
}

/// Wraps any serializable payload with the schema version.
#[derive(Clone, Debug, Serialize)]
pub struct Envelope<'a, T: Serialize> {
    pub schema_version: u32,
    pub kind: &'a str,
    pub data: T,
}

pub fn to_json<T: Serialize>(kind: &str, data: T) -> Result<String> {
    Ok(serde_json::to_string_pretty(&Envelope { schema_version: SCHEMA_VERSION, kind, data })?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::string_module_str;

    #[test]
    fn algebra_roundtrip() {
        let a = build_algebra(Family::II, 2, Kind::Bar).unwrap();
        let json = serde_json::to_string(&algebra_file(&a)).unwrap();
        assert!(json.contains("[\"e0\"]"));
        assert_eq!(load_algebra(&json).unwrap().id(), a.id());
    }

    #[test]
    fn tampered_algebra_file_is_rejected() {
        let a = build_algebra(Family::I, 2, Kind::Bar).unwrap();
        let mut f = algebra_file(&a);
        f.cartan[0][0] += 1;
        assert!(load_algebra(&serde_json::to_string(&f).unwrap()).is_err());
    }

    #[test]
    fn module_roundtrip() {
        let a = build_algebra(Family::I, 3, Kind::Full).unwrap();
        let m = string_module_str(&a, "gamma*delta^-1").unwrap();
        let json = serde_json::to_string(&module_file(&m, Some("gamma*delta^-1"))).unwrap();
        assert_eq!(load_module(&json).unwrap(), m);
    }

    #[test]
    fn bar_cartan_text() {
        let a = build_algebra(Family::I, 2, Kind::Bar).unwrap();
        assert!(algebra_text(&a).contains("Cartan [[4,2,2],[2,2,1],[2,1,2]]"));
    }
}
