//! The three quivers, their relation ideals and decomposition matrices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::path::PathWord;

pub const ARROW_ALPHABET: [&str; 7] = ["alpha", "beta", "gamma", "delta", "eta", "kappa", "lambda"];
pub const NUM_VERTICES: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    I,
    II,
    III,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::I, Family::II, Family::III];

    pub fn min_d(self) -> u32 {
        match self {
            Family::I | Family::II => 2,
            Family::III => 3,
        }
    }

    pub const MAX_D: u32 = 6;

    pub fn check_d(self, d: u32) -> Result<()> {
        if (self.min_d()..=Self::MAX_D).contains(&d) {
            Ok(())
        } else {
            Err(Error::Unsupported(format!(
                "family {self} supports d in {}..={}, got {d}",
                self.min_d(),
                Self::MAX_D
            )))
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::I => "I",
            Family::II => "II",
            Family::III => "III",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" | "1" => Ok(Family::I),
            "II" | "2" => Ok(Family::II),
            "III" | "3" => Ok(Family::III),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown family {s:?}") }),
        }
    }
}

/// Which of the two algebras: Λ = kQ/I (`Full`) or Λ̄ = kQ/Ī (`Bar`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Full,
    Bar,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Full => "full",
            Kind::Bar => "bar",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Kind::Full),
            "bar" => Ok(Kind::Bar),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown algebra kind {s:?}") }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: &'static str,
    pub source: usize,
    pub target: usize,
}

/// A quiver on vertices {0, 1, 2}; arrows are sorted by the Greek alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(mut arrows: Vec<Arrow>) -> Result<Self> {
        arrows.sort_by_key(|a| ARROW_ALPHABET.iter().position(|n| *n == a.name).unwrap_or(usize::MAX));
        for (i, a) in arrows.iter().enumerate() {
            if !ARROW_ALPHABET.contains(&a.name) {
                return Err(Error::Check(format!("arrow name {} not in the alphabet", a.name)));
            }
            if arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::Check(format!("duplicate arrow {}", a.name)));
            }
            if a.source >= NUM_VERTICES || a.target >= NUM_VERTICES {
                return Err(Error::Check(format!("arrow {} has an undeclared endpoint", a.name)));
            }
        }
        Ok(Quiver { arrows })
    }

    pub fn for_family(family: Family) -> Self {
        let a = |name, source, target| Arrow { name, source, target };
        let arrows = match family {
            Family::I => vec![a("beta", 1, 0), a("gamma", 0, 1), a("delta", 0, 2), a("eta", 2, 0)],
            Family::II => vec![
                a("beta", 0, 1),
                a("gamma", 1, 0),
                a("delta", 1, 2),
                a("eta", 2, 1),
                a("kappa", 0, 2),
                a("lambda", 2, 0),
            ],
            Family::III => {
                vec![a("alpha", 1, 1), a("beta", 1, 0), a("gamma", 0, 1), a("delta", 0, 2), a("eta", 2, 0)]
            }
        };
        Quiver::new(arrows).expect("built-in quiver is well formed")
    }

    pub fn num_vertices(&self) -> usize {
        NUM_VERTICES
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Parses a space-separated list of arrow names in composition order.
    pub(crate) fn word(&self, s: &str) -> PathWord {
        let arrows: Vec<u8> = s
            .split_whitespace()
            .map(|n| self.arrow_index(n).unwrap_or_else(|| panic!("unknown arrow {n}")) as u8)
            .collect();
        PathWord::from_arrows(self, arrows).expect("built-in relation word is composable")
    }
}

/// An F2-linear combination of paths sharing source and target.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<PathWord>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationIdeal {
    pub family: Family,
    pub d: u32,
    pub kind: Kind,
    pub generators: Vec<Relation>,
}

fn pow(w: &PathWord, k: usize) -> PathWord {
    let mut arrows = Vec::with_capacity(w.len() * k);
    for _ in 0..k {
        arrows.extend_from_slice(w.arrows());
    }
    PathWord::from_parts(w.source(), w.target(), arrows)
}

fn cat(a: &PathWord, b: &PathWord) -> PathWord {
    a.compose(b).expect("built-in relation word is composable")
}

pub fn relation_ideal(family: Family, d: u32, kind: Kind) -> Result<RelationIdeal> {
    family.check_d(d)?;
    let q = Quiver::for_family(family);
    let w = |s: &str| q.word(s);
    let k1 = (1usize << (d - 1)) - 1;
    let k2 = 1usize << (d - 2);
    let rel = |terms: Vec<PathWord>| Relation { terms };
    let generators = match (family, kind) {
        (Family::I, Kind::Full) => vec![
            rel(vec![w("beta gamma beta"), cat(&w("eta delta beta"), &pow(&w("gamma eta delta beta"), k1))]),
            rel(vec![w("gamma beta gamma"), cat(&w("gamma eta delta"), &pow(&w("beta gamma eta delta"), k1))]),
            rel(vec![w("eta delta eta"), cat(&w("beta gamma eta"), &pow(&w("delta beta gamma eta"), k1))]),
            rel(vec![w("delta eta delta"), cat(&w("delta beta gamma"), &pow(&w("eta delta beta gamma"), k1))]),
            rel(vec![w("delta beta gamma beta")]),
            rel(vec![w("gamma eta delta eta")]),
        ],
        (Family::I, Kind::Bar) => vec![
            rel(vec![w("gamma beta")]),
            rel(vec![w("delta eta")]),
            rel(vec![pow(&w("eta delta beta gamma"), k2), pow(&w("beta gamma eta delta"), k2)]),
        ],
        (Family::II, Kind::Full) => vec![
            rel(vec![w("delta beta"), w("kappa lambda kappa")]),
            rel(vec![w("gamma eta"), w("lambda kappa lambda")]),
            rel(vec![w("lambda delta"), w("gamma beta gamma")]),
            rel(vec![w("eta kappa"), w("beta gamma beta")]),
            rel(vec![w("beta lambda"), cat(&w("eta"), &pow(&w("delta eta"), k1))]),
            rel(vec![w("kappa gamma"), cat(&w("delta"), &pow(&w("eta delta"), k1))]),
            rel(vec![w("delta beta gamma")]),
            rel(vec![w("gamma eta delta")]),
            rel(vec![w("eta kappa lambda")]),
        ],
        (Family::II, Kind::Bar) => vec![
            rel(vec![w("delta beta")]),
            rel(vec![w("lambda delta")]),
            rel(vec![w("beta lambda")]),
            rel(vec![w("kappa gamma")]),
            rel(vec![w("eta kappa")]),
            rel(vec![w("gamma eta")]),
            rel(vec![w("gamma beta"), w("lambda kappa")]),
            rel(vec![w("kappa lambda"), pow(&w("delta eta"), k2)]),
            rel(vec![pow(&w("eta delta"), k2), w("beta gamma")]),
        ],
        (Family::III, Kind::Full) => vec![
            rel(vec![w("beta alpha"), w("eta delta beta gamma eta delta beta")]),
            rel(vec![w("alpha gamma"), w("gamma eta delta beta gamma eta delta")]),
            rel(vec![w("delta eta delta"), w("delta beta gamma eta delta beta gamma")]),
            rel(vec![w("eta delta eta"), w("beta gamma eta delta beta gamma eta")]),
            rel(vec![w("gamma beta"), pow(&w("alpha"), k1)]),
            rel(vec![w("beta alpha alpha")]),
            rel(vec![w("delta eta delta beta")]),
        ],
        (Family::III, Kind::Bar) => vec![
            rel(vec![w("beta alpha")]),
            rel(vec![w("alpha gamma")]),
            rel(vec![w("gamma beta")]),
            rel(vec![w("delta eta")]),
            rel(vec![w("eta delta beta gamma"), w("beta gamma eta delta")]),
            rel(vec![pow(&w("alpha"), k2), w("gamma eta delta beta")]),
        ],
    };
    for g in &generators {
        let (s, t) = (g.terms[0].source(), g.terms[0].target());
        debug_assert!(g.terms.iter().all(|p| p.source() == s && p.target() == t));
    }
    Ok(RelationIdeal { family, d, kind, generators })
}

/// Decomposition matrix with rows χ1..χ6 followed by 2^(d-1)-1 copies of χ7.
pub fn decomposition_matrix(family: Family, d: u32) -> Result<Vec<[u32; 3]>> {
    family.check_d(d)?;
    let (head, seven): ([[u32; 3]; 6], [u32; 3]) = match family {
        Family::I => ([[1, 0, 0], [1, 1, 0], [1, 0, 1], [1, 1, 1], [0, 1, 0], [0, 0, 1]], [2, 1, 1]),
        Family::II => ([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 1, 0], [1, 0, 1]], [0, 1, 1]),
        Family::III => ([[1, 0, 0], [1, 1, 0], [1, 0, 1], [1, 1, 1], [2, 1, 1], [0, 0, 1]], [0, 1, 0]),
    };
    let mut rows = head.to_vec();
    rows.extend(std::iter::repeat_n(seven, (1usize << (d - 1)) - 1));
    Ok(rows)
}

/// Cartan matrix DᵀD of a decomposition matrix.
pub fn cartan_from_decomposition(dm: &[[u32; 3]]) -> [[u32; 3]; 3] {
    let mut c = [[0u32; 3]; 3];
    for row in dm {
        for i in 0..3 {
            for j in 0..3 {
                c[i][j] += row[i] * row[j];
            }
        }
    }
    c
}

/// Radical series lengths of P0, P1, P2 over Λ.
pub fn expected_projective_loewy_lengths(family: Family, d: u32) -> Result<[usize; 3]> {
    family.check_d(d)?;
    Ok(match family {
        Family::I => [(1 << (d + 1)) + 1; 3],
        Family::II => [5, (1 << d) + 1, (1 << d) + 1],
        Family::III => {
            let p1 = if d == 3 { 9 } else { (1 << (d - 1)) + 1 };
            [9, p1, 9]
        }
    })
}
