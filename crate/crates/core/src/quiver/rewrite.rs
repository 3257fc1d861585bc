//! Knuth–Bendix completion for binomial and monomial path relations.
//!
//! A presentation whose generators are all of the form `u - v` or `u` defines a
//! contracted semigroup algebra, so the quotient `kQ/(I + J^cap)` has a basis of
//! irreducible words of a complete rewriting system. Words are oriented towards
//! *longer*, then lexicographically smaller, representatives; every word of
//! length `>= cap` is zero. The normal form of a class is thus its deepest
//! representative, and its length is the radical depth of the class.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

pub(crate) type Word = Vec<u8>;

/// `true` when `u` must be rewritten to `v`.
fn greater(u: &[u8], v: &[u8]) -> bool {
    u.len() < v.len() || (u.len() == v.len() && u > v)
}

#[derive(Clone, Debug)]
pub(crate) struct RewriteSystem {
    cap: usize,
    rules: HashMap<Word, Option<Word>>,
    lens: Vec<usize>,
}

struct Rule {
    lhs: Word,
    rhs: Option<Word>,
    alive: bool,
}

impl RewriteSystem {
    /// Completes the system generated by `pairs` (`(u, Some(v))` for `u = v`,
    /// `(u, None)` for `u = 0`).
    pub fn complete(pairs: Vec<(Word, Option<Word>)>, cap: usize) -> Result<Self> {
        let mut rules: Vec<Rule> = Vec::new();
        let mut live: HashMap<Word, usize> = HashMap::new();
        let mut queue: VecDeque<(Option<Word>, Option<Word>)> =
            pairs.into_iter().map(|(u, v)| (Some(u), v)).collect();
        let mut current = RewriteSystem { cap, rules: HashMap::new(), lens: Vec::new() };

        while let Some((a, b)) = queue.pop_front() {
            let a = a.and_then(|w| current.reduce(&w));
            let b = b.and_then(|w| current.reduce(&w));
            let (lhs, rhs) = match (a, b) {
                (None, None) => continue,
                (Some(a), None) | (None, Some(a)) => (a, None),
                (Some(a), Some(b)) => {
                    if a == b {
                        continue;
                    }
                    if greater(&a, &b) {
                        (a, Some(b))
                    } else {
                        (b, Some(a))
                    }
                }
            };
            if lhs.is_empty() {
                return Err(Error::Check("relation identifies a trivial path".into()));
            }
            // inter-reduce: rules whose left side contains the new one are re-queued
            for r in rules.iter_mut().filter(|r| r.alive) {
                if contains(&r.lhs, &lhs) {
                    r.alive = false;
                    live.remove(&r.lhs);
                    current.remove(&r.lhs);
                    queue.push_back((Some(r.lhs.clone()), r.rhs.clone()));
                }
            }
            let id = rules.len();
            rules.push(Rule { lhs: lhs.clone(), rhs: rhs.clone(), alive: true });
            live.insert(lhs.clone(), id);
            current.insert(lhs.clone(), rhs.clone());

            for (j, r) in rules.iter().enumerate().filter(|(_, r)| r.alive) {
                for (x, y) in critical_pairs(&lhs, &rhs, &r.lhs, &r.rhs, cap) {
                    queue.push_back((x, y));
                }
                if j != id {
                    for (x, y) in critical_pairs(&r.lhs, &r.rhs, &lhs, &rhs, cap) {
                        queue.push_back((x, y));
                    }
                }
            }
        }
        // right sides to normal form
        let keys: Vec<Word> = current.rules.keys().cloned().collect();
        for k in keys {
            let rhs = current.rules[&k].clone().and_then(|w| current.reduce(&w));
            current.rules.insert(k, rhs);
        }
        Ok(current)
    }

    fn insert(&mut self, lhs: Word, rhs: Option<Word>) {
        let rhs = rhs.filter(|w| w.len() < self.cap);
        if let Err(p) = self.lens.binary_search(&lhs.len()) {
            self.lens.insert(p, lhs.len());
        }
        self.rules.insert(lhs, rhs);
    }

    fn remove(&mut self, lhs: &[u8]) {
        self.rules.remove(lhs);
        let l = lhs.len();
        if !self.rules.keys().any(|k| k.len() == l) {
            self.lens.retain(|&x| x != l);
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn num_rules(&self) -> usize {
        self.rules.len()
    }

    fn find_redex(&self, w: &[u8]) -> Option<(usize, usize)> {
        for i in 0..w.len() {
            for &l in &self.lens {
                if i + l > w.len() {
                    break;
                }
                if self.rules.contains_key(&w[i..i + l]) {
                    return Some((i, l));
                }
            }
        }
        None
    }

    /// Normal form of `w`, or `None` if `w` is zero.
    pub fn reduce(&self, w: &[u8]) -> Option<Word> {
        let mut w = w.to_vec();
        loop {
            if w.len() >= self.cap {
                return None;
            }
            let Some((i, l)) = self.find_redex(&w) else {
                return Some(w);
            };
            let rhs = self.rules[&w[i..i + l]].as_ref()?;
            let mut next = Vec::with_capacity(w.len() - l + rhs.len());
            next.extend_from_slice(&w[..i]);
            next.extend_from_slice(rhs);
            next.extend_from_slice(&w[i + l..]);
            w = next;
        }
    }

    /// True when some left side is a prefix of `w`.
    pub fn has_prefix_redex(&self, w: &[u8]) -> bool {
        self.lens.iter().take_while(|&&l| l <= w.len()).any(|&l| self.rules.contains_key(&w[..l]))
    }
}

fn contains(hay: &[u8], needle: &[u8]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

/// Pairs from proper overlaps `lhs1 = x·y`, `lhs2 = y·z` with `y` nonempty.
fn critical_pairs(
    l1: &[u8],
    r1: &Option<Word>,
    l2: &[u8],
    r2: &Option<Word>,
    cap: usize,
) -> Vec<(Option<Word>, Option<Word>)> {
    let mut out = Vec::new();
    for k in 1..l1.len().min(l2.len()) {
        if l1[l1.len() - k..] != l2[..k] {
            continue;
        }
        let total = l1.len() + l2.len() - k;
        if total >= cap {
            continue;
        }
        let z = &l2[k..];
        let x = &l1[..l1.len() - k];
        let a = r1.as_ref().map(|r| [r.as_slice(), z].concat());
        let b = r2.as_ref().map(|r| [x, r.as_slice()].concat());
        out.push((a, b));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commuting_generators_complete() {
        // ba -> ab in a one-vertex free monoid on {a=0, b=1}, cap 4
        let sys = RewriteSystem::complete(vec![(vec![1, 0], Some(vec![0, 1]))], 4).unwrap();
        assert_eq!(sys.reduce(&[1, 1, 0]), Some(vec![0, 1, 1]));
        assert_eq!(sys.reduce(&[1, 0, 1, 0]), None);
    }

    #[test]
    fn shorter_word_rewrites_to_longer() {
        // a = bb, so aa = bbbb which is beyond the cap
        let sys = RewriteSystem::complete(vec![(vec![0], Some(vec![1, 1]))], 4).unwrap();
        assert_eq!(sys.reduce(&[0]), Some(vec![1, 1]));
        assert_eq!(sys.reduce(&[0, 0]), None);
        assert_eq!(sys.reduce(&[0, 1]), Some(vec![1, 1, 1]));
    }
}
