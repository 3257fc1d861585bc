//! Path words in composition order (rightmost arrow applied first) and the word grammar
//!
//! ```text
//! word := term ("*" term)*
//! term := arrowName ("^-1")?
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::quiver::family::Quiver;

/// A path `ζ_n ⋯ ζ_1`; `arrows[0]` is ζ_n (applied last).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PathWord {
    source: u8,
    target: u8,
    arrows: Vec<u8>,
}

impl PathWord {
    pub fn trivial(vertex: usize) -> Self {
        PathWord { source: vertex as u8, target: vertex as u8, arrows: Vec::new() }
    }

    /// Nonempty arrow sequence; checks composability.
    pub fn from_arrows(q: &Quiver, arrows: Vec<u8>) -> Result<Self> {
        let (Some(&last), Some(&first)) = (arrows.last(), arrows.first()) else {
            return Err(Error::Parse { pos: 0, msg: "empty path".into() });
        };
        for (i, pair) in arrows.windows(2).enumerate() {
            let (a, b) = (q.arrow(pair[0] as usize), q.arrow(pair[1] as usize));
            if a.source != b.target {
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("{} cannot follow {}: {} ends at {}, {} starts at {}", a.name, b.name, b.name, b.target, a.name, a.source),
                });
            }
        }
        Ok(PathWord {
            source: q.arrow(last as usize).source as u8,
            target: q.arrow(first as usize).target as u8,
            arrows,
        })
    }

    pub(crate) fn from_parts(source: usize, target: usize, arrows: Vec<u8>) -> Self {
        PathWord { source: source as u8, target: target as u8, arrows }
    }

    pub fn source(&self) -> usize {
        self.source as usize
    }

    pub fn target(&self) -> usize {
        self.target as usize
    }

    pub fn arrows(&self) -> &[u8] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    /// `self · other`: first `other`, then `self`.
    pub fn compose(&self, other: &PathWord) -> Option<PathWord> {
        if self.source != other.target {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(PathWord { source: other.source, target: self.target, arrows })
    }

    /// Vertices visited in the order the path runs: v_0 = source, ..., v_n = target.
    pub fn vertices(&self, q: &Quiver) -> Vec<usize> {
        let mut v = vec![self.source()];
        for &a in self.arrows.iter().rev() {
            v.push(q.arrow(a as usize).target);
        }
        v
    }

    /// Arrow names in composition order; a trivial path is `["e<i>"]`.
    pub fn names(&self, q: &Quiver) -> Vec<String> {
        if self.is_trivial() {
            return vec![format!("e{}", self.source)];
        }
        self.arrows.iter().map(|&a| q.arrow(a as usize).name.to_string()).collect()
    }

    pub fn from_names<S: AsRef<str>>(q: &Quiver, names: &[S]) -> Result<Self> {
        if let [one] = names {
            if let Some(v) = trivial_name(one.as_ref()) {
                return Ok(PathWord::trivial(v));
            }
        }
        let arrows = names
            .iter()
            .enumerate()
            .map(|(i, n)| {
                q.arrow_index(n.as_ref())
                    .map(|a| a as u8)
                    .ok_or_else(|| Error::Parse { pos: i, msg: format!("unknown arrow {:?}", n.as_ref()) })
            })
            .collect::<Result<Vec<_>>>()?;
        PathWord::from_arrows(q, arrows)
    }

    pub fn display(&self, q: &Quiver) -> String {
        self.names(q).join("*")
    }
}

fn trivial_name(s: &str) -> Option<usize> {
    match s {
        "e0" => Some(0),
        "e1" => Some(1),
        "e2" => Some(2),
        _ => None,
    }
}

/// A word accepted by the string-module constructor.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum StringWord {
    /// A directed path; a trivial path gives a simple module.
    Direct(PathWord),
    /// `ζ2 ζ1⁻¹` with ζ1, ζ2 leaving a common source.
    Peak { left: u8, right: u8 },
    /// `ζ2⁻¹ ζ1` with ζ1, ζ2 entering a common target.
    Valley { left: u8, right: u8 },
}

impl StringWord {
    pub fn display(&self, q: &Quiver) -> String {
        match self {
            StringWord::Direct(p) => p.display(q),
            StringWord::Peak { left, right } => {
                format!("{}*{}^-1", q.arrow(*left as usize).name, q.arrow(*right as usize).name)
            }
            StringWord::Valley { left, right } => {
                format!("{}^-1*{}", q.arrow(*left as usize).name, q.arrow(*right as usize).name)
            }
        }
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}:{:?}", self.source, self.target, self.arrows)
    }
}

struct Term<'a> {
    name: &'a str,
    inverse: bool,
    pos: usize,
}

fn tokenize(s: &str) -> Result<Vec<Term<'_>>> {
    let mut terms = Vec::new();
    let mut offset = 0;
    for raw in s.split('*') {
        let lead = raw.len() - raw.trim_start().len();
        let t = raw.trim();
        let pos = offset + lead;
        if t.is_empty() {
            return Err(Error::Parse { pos, msg: "empty term".into() });
        }
        let (name, inverse) = match t.strip_suffix("^-1") {
            Some(n) => (n.trim_end(), true),
            None => (t, false),
        };
        if let Some(bad) = name.find(|c: char| !c.is_ascii_alphanumeric()) {
            return Err(Error::Parse { pos: pos + bad, msg: format!("unexpected character in term {t:?}") });
        }
        terms.push(Term { name, inverse, pos });
        offset += raw.len() + 1;
    }
    Ok(terms)
}

/// Parses a word in the path-word grammar against `q`. `e0`, `e1`, `e2`
/// stand for the trivial paths.
pub fn parse_word(q: &Quiver, s: &str) -> Result<StringWord> {
    let terms = tokenize(s)?;
    if let [t] = terms.as_slice() {
        if let Some(v) = trivial_name(t.name) {
            if t.inverse {
                return Err(Error::Parse { pos: t.pos, msg: "a trivial path has no inverse".into() });
            }
            return Ok(StringWord::Direct(PathWord::trivial(v)));
        }
    }
    let mut idx = Vec::with_capacity(terms.len());
    for t in &terms {
        let a = q.arrow_index(t.name).ok_or_else(|| Error::Parse {
            pos: t.pos,
            msg: format!("unknown arrow {:?} (arrows: {})", t.name, q.arrows().iter().map(|a| a.name).collect::<Vec<_>>().join(", ")),
        })?;
        idx.push(a as u8);
    }
    let inverses = terms.iter().filter(|t| t.inverse).count();
    if inverses == 0 {
        for i in 0..idx.len() - 1 {
            let (a, b) = (q.arrow(idx[i] as usize), q.arrow(idx[i + 1] as usize));
            if a.source != b.target {
                return Err(Error::Parse {
                    pos: terms[i + 1].pos,
                    msg: format!("{} ends at vertex {} but {} starts at vertex {}", b.name, b.target, a.name, a.source),
                });
            }
        }
        return Ok(StringWord::Direct(PathWord::from_arrows(q, idx)?));
    }
    let first_inv = terms.iter().find(|t| t.inverse).map(|t| t.pos).unwrap_or(0);
    if terms.len() != 2 || inverses != 1 {
        return Err(Error::Parse { pos: first_inv, msg: "\"^-1\" is only allowed in two-term hybrid words".into() });
    }
    let (l, r) = (q.arrow(idx[0] as usize), q.arrow(idx[1] as usize));
    if idx[0] == idx[1] {
        return Err(Error::Parse { pos: terms[1].pos, msg: "hybrid word needs two distinct arrows".into() });
    }
    if terms[1].inverse {
        if l.source != r.source {
            return Err(Error::Parse { pos: terms[1].pos, msg: format!("{} and {} do not share a source", l.name, r.name) });
        }
        Ok(StringWord::Peak { left: idx[0], right: idx[1] })
    } else {
        if l.target != r.target {
            return Err(Error::Parse { pos: terms[1].pos, msg: format!("{} and {} do not share a target", l.name, r.name) });
        }
        Ok(StringWord::Valley { left: idx[0], right: idx[1] })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::family::Family;

    #[test]
    fn composable_words_parse() {
        let q = Quiver::for_family(Family::I);
        let StringWord::Direct(p) = parse_word(&q, "delta*beta").unwrap() else { panic!() };
        assert_eq!((p.source(), p.target(), p.len()), (1, 2, 2));
        assert_eq!(p.vertices(&q), vec![1, 0, 2]);
    }

    #[test]
    fn non_composable_reports_position() {
        let q = Quiver::for_family(Family::I);
        let e = parse_word(&q, "beta*beta").unwrap_err();
        assert_eq!(e, Error::Parse { pos: 5, msg: "beta ends at vertex 0 but beta starts at vertex 1".into() });
    }

    #[test]
    fn hybrids() {
        let q = Quiver::for_family(Family::I);
        assert!(matches!(parse_word(&q, "gamma*delta^-1"), Ok(StringWord::Peak { .. })));
        assert!(matches!(parse_word(&q, "beta^-1*eta"), Ok(StringWord::Valley { .. })));
        assert!(parse_word(&q, "beta^-1").is_err());
        assert!(parse_word(&q, "gamma*beta^-1").is_err());
        assert!(parse_word(&q, "gamma^-1*delta^-1").is_err());
    }

    #[test]
    fn unknown_and_empty_terms() {
        let q = Quiver::for_family(Family::I);
        assert!(matches!(parse_word(&q, "beta*kappa"), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(parse_word(&q, "beta**gamma"), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(parse_word(&q, ""), Err(Error::Parse { pos: 0, .. })));
    }

    #[test]
    fn trivial_names_round_trip() {
        let q = Quiver::for_family(Family::II);
        let p = PathWord::trivial(2);
        assert_eq!(p.names(&q), vec!["e2"]);
        assert_eq!(PathWord::from_names(&q, &p.names(&q)).unwrap(), p);
    }
}
