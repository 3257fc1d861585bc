//! Named verification suites; each check is pure and reports pass or fail
//! together with the claim it tests.

use std::ops::RangeInclusive;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::atlas::{atlas, completeness_sweep};
use crate::deform::{classify_all, classify_dihedral, Verdict};
use crate::error::{Error, Result};
use crate::quiver::{
    build_algebra, cartan_from_decomposition, check_pi_lambda, decomposition_matrix,
    expected_projective_loewy_lengths, Family, Kind,
};
use crate::rep::{
    default_seed, end_dim, ext1, ext1_via_stable, hom_by_intertwiners, is_isomorphic, loewy_length, omega,
    omega_inv, projective, projective_halving, simple, stable_end_dim,
};
use crate::witt_rings::{mod2_reduction, p_poly, verify_s_prime_iso, MinPolyTower};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Presentations,
    Homological,
    Atlas,
    Deformation,
    Witt,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "presentations" => Suite::Presentations,
            "homological" => Suite::Homological,
            "atlas" => Suite::Atlas,
            "deformation" => Suite::Deformation,
            "witt" => Suite::Witt,
            "all" => Suite::All,
            _ => return Err(Error::Parse { pos: 0, msg: format!("unknown suite {s:?}") }),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub check_id: String,
    pub claim: &'static str,
    pub status: Status,
    pub elapsed_ms: u128,
    pub detail: String,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Parses `a..b` (inclusive) or a single `d`.
pub fn parse_d_range(s: &str) -> Result<RangeInclusive<u32>> {
    let num = |t: &str, pos: usize| {
        t.trim().parse::<u32>().map_err(|_| Error::Parse { pos, msg: format!("expected an integer, got {t:?}") })
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (lo, hi) = (num(a, 0)?, num(b, a.len() + 2)?);
            if lo > hi {
                return Err(Error::Parse { pos: 0, msg: format!("empty range {s}") });
            }
            Ok(lo..=hi)
        }
        None => num(s, 0).map(|d| d..=d),
    }
}

pub const WITT_MAX_D: u32 = 8;

type CheckFn = Box<dyn Fn() -> Result<String> + Send + Sync>;

struct Check {
    id: String,
    claim: &'static str,
    run: CheckFn,
}

fn check(id: String, claim: &'static str, run: impl Fn() -> Result<String> + Send + Sync + 'static) -> Check {
    Check { id, claim, run: Box::new(run) }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Check(msg()))
    }
}

fn families_in(range: &RangeInclusive<u32>) -> Vec<(Family, u32)> {
    let mut out = Vec::new();
    for f in Family::ALL {
        for d in range.clone() {
            if f.check_d(d).is_ok() {
                out.push((f, d));
            }
        }
    }
    out
}

fn presentation_checks(f: Family, d: u32) -> Vec<Check> {
    let p = format!("presentations/{f}/d{d}");
    vec![
        check(format!("{p}/cartan"), "Cartan matrix equals D^T D; the quotient's is exactly half", move || {
            let full = build_algebra(f, d, Kind::Full)?;
            let bar = build_algebra(f, d, Kind::Bar)?;
            let expected = cartan_from_decomposition(&decomposition_matrix(f, d)?);
            ensure(full.cartan() == expected, || format!("{:?} != {expected:?}", full.cartan()))?;
            let half = expected.map(|r| r.map(|x| x / 2));
            ensure(bar.cartan() == half, || format!("quotient Cartan {:?} != {half:?}", bar.cartan()))?;
            Ok(format!("dim {} / {}", full.dim(), bar.dim()))
        }),
        check(format!("{p}/loewy"), "radical lengths of the projectives", move || {
            let full = build_algebra(f, d, Kind::Full)?;
            let got: Vec<usize> = (0..3).map(|i| loewy_length(&projective(&full, i))).collect();
            let want = expected_projective_loewy_lengths(f, d)?;
            ensure(got == want, || format!("{got:?} != {want:?}"))?;
            Ok(format!("{got:?}"))
        }),
        check(format!("{p}/multiplication"), "multiplication table is associative and matches rewriting", move || {
            let mut n_checked = 0usize;
            for kind in [Kind::Full, Kind::Bar] {
                let a = build_algebra(f, d, kind)?;
                let n = a.dim();
                for i in 0..n {
                    for j in 0..n {
                        ensure(a.product(i, j) == a.product_by_rewriting(i, j), || format!("{i}*{j}"))?;
                    }
                }
                let mul = |x: Option<usize>, y: Option<usize>| x.zip(y).and_then(|(x, y)| a.product(x, y));
                let mut triple = |i: usize, j: usize, k: usize| -> Result<()> {
                    n_checked += 1;
                    let l = mul(mul(Some(i), Some(j)), Some(k));
                    let r = mul(Some(i), mul(Some(j), Some(k)));
                    ensure(l == r, || format!("({i}*{j})*{k} != {i}*({j}*{k})"))
                };
                if n <= 140 {
                    for i in 0..n {
                        for j in 0..n {
                            for k in 0..n {
                                triple(i, j, k)?;
                            }
                        }
                    }
                } else {
                    let mut rng = ChaCha8Rng::seed_from_u64(default_seed());
                    for _ in 0..100_000 {
                        triple(rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n))?;
                    }
                }
            }
            Ok(format!("{n_checked} triples"))
        }),
        check(format!("{p}/surjection"), "arrow map onto the quotient kills every relation", move || {
            let w = check_pi_lambda(f, d)?;
            let full = build_algebra(f, d, Kind::Full)?;
            ensure(2 * w.kernel_dim == full.dim(), || format!("kernel dim {}", w.kernel_dim))?;
            Ok(format!("kernel dim {}", w.kernel_dim))
        }),
        check(format!("{p}/halving"), "P_i is an extension of the inflated quotient projective by itself", move || {
            let rows = projective_halving(f, d)?;
            for r in &rows {
                ensure(r.holds(), || format!("{r:?}"))?;
            }
            Ok(rows.iter().map(|r| format!("{}={}x2", r.dim_full, r.dim_bar)).collect::<Vec<_>>().join(" "))
        }),
    ]
}

fn homological_checks(f: Family, d: u32) -> Vec<Check> {
    let p = format!("homological/{f}/d{d}");
    vec![
        check(format!("{p}/ext-routes"), "Ext^1 by presentation equals stable Hom from the syzygy", move || {
            let full = build_algebra(f, d, Kind::Full)?;
            let simples: Vec<_> = (0..3).map(|i| simple(&full, i)).collect();
            let mut table = Vec::new();
            for m in &simples {
                for n in &simples {
                    let (a, b) = (ext1(m, n)?, ext1_via_stable(m, n)?);
                    ensure(a == b, || format!("{a} != {b}"))?;
                    table.push(a);
                }
            }
            for e in atlas(f, d)? {
                let (a, b) = (ext1(&e.rep_full, &e.rep_full)?, ext1_via_stable(&e.rep_full, &e.rep_full)?);
                ensure(a == b, || format!("{}: {a} != {b}", e.descriptor))?;
            }
            Ok(format!("simples {table:?}"))
        }),
        check(format!("{p}/end-oracle"), "End dimension agrees with brute-force intertwiners", move || {
            for e in atlas(f, d)? {
                if e.rep_full.total_dim() > 8 {
                    continue;
                }
                let (a, b) = (end_dim(&e.rep_full)?, hom_by_intertwiners(&e.rep_full, &e.rep_full)?.len());
                ensure(a == b, || format!("{}: {a} != {b}", e.descriptor))?;
            }
            Ok(String::new())
        }),
        check(format!("{p}/omega"), "syzygy preserves stable End and self-extensions; cosyzygy inverts it", move || {
            for e in atlas(f, d)? {
                let m = &e.rep_full;
                let o = omega(m);
                let (s0, s1) = (stable_end_dim(m)?, stable_end_dim(&o)?);
                let (x0, x1) = (ext1(m, m)?, ext1(&o, &o)?);
                ensure(s0 == s1 && x0 == x1, || format!("{}: stable End {s0}->{s1}, Ext {x0}->{x1}", e.descriptor))?;
                ensure(is_isomorphic(&omega_inv(&o)?, m)?, || format!("{}: cosyzygy of syzygy", e.descriptor))?;
            }
            Ok(String::new())
        }),
    ]
}

/// Families and `d` at which the completeness sweep runs.
pub fn sweep_parameter(f: Family) -> u32 {
    match f {
        Family::I | Family::II => 2,
        Family::III => 3,
    }
}

fn atlas_checks(f: Family, d: u32) -> Vec<Check> {
    let p = format!("atlas/{f}/d{d}");
    let mut out = vec![check(format!("{p}/entries"), "fifteen bricks with End = k over the quotient and stable End = k after inflation", move || {
        let entries = atlas(f, d)?;
        ensure(entries.len() == 15, || format!("{} entries", entries.len()))?;
        let problems: Vec<String> = entries.iter().flat_map(|e| e.problems()).collect();
        ensure(problems.is_empty(), || problems.join("; "))?;
        let mut by_dim = [0usize; 5];
        for e in &entries {
            by_dim[e.rep_bar.total_dim().min(4)] += 1;
        }
        let want = match f {
            Family::II => [0, 3, 6, 6, 0],
            _ => [0, 3, 4, 4, 4],
        };
        ensure(by_dim == want, || format!("dimension profile {by_dim:?}"))?;
        Ok(format!("dimension profile {:?}", &by_dim[1..]))
    })];
    if d == sweep_parameter(f) {
        out.push(check(format!("{p}/sweep"), "no brick of total dimension <= 6 outside the list", move || {
            let r = completeness_sweep(f, d, 6)?;
            ensure(r.is_complete(), || format!("missing {:?}, extra {:?}", r.missing, r.extra))?;
            ensure(r.layer_collisions.is_empty(), || format!("radical layer collisions {:?}", r.layer_collisions))?;
            Ok(format!("{} reps, {} brick classes, {} ms", r.reps_enumerated, r.brick_classes.len(), r.elapsed_ms))
        }));
    }
    out
}

/// Descriptors expected to carry a self-extension over the full algebra.
pub fn expected_jets(f: Family, d: u32) -> Vec<&'static str> {
    if d == 2 {
        return vec![];
    }
    match f {
        Family::I => vec!["delta*beta*gamma", "gamma*eta*delta", "eta*delta*beta", "beta*gamma*eta"],
        Family::II => vec!["delta", "eta"],
        Family::III => vec!["e1"],
    }
}

fn deformation_checks(f: Family, d: u32) -> Vec<Check> {
    let p = format!("deformation/{f}/d{d}");
    let mut out = vec![check(format!("{p}/classify"), "self-extensions exactly at the listed bricks, jet length 2^(d-1)-1", move || {
        let reports = classify_all(f, d)?;
        let want = expected_jets(f, d);
        let r_full = (1usize << (d - 1)) - 1;
        for rep in &reports {
            let jet = want.contains(&rep.descriptor.as_str());
            ensure(rep.ext_self_dim == usize::from(jet), || format!("{}: Ext^1 {}", rep.descriptor, rep.ext_self_dim))?;
            let v = if jet { Verdict::Mod2Jet { r: r_full } } else { Verdict::Mod2Trivial };
            ensure(rep.verdict == v, || format!("{}: {:?}", rep.descriptor, rep.verdict))?;
            if let Some(w) = &rep.witness {
                ensure(w.search_agrees == Some(true), || format!("{}: search disagrees", rep.descriptor))?;
            }
        }
        Ok(format!("{} jets of length {r_full}", want.len()))
    }),
    check(format!("{p}/witt-consistency"), "jet length equals the degree of p_(d+1) mod 2", move || {
        let reports = classify_all(f, d)?;
        let deg = mod2_reduction(&p_poly(d + 1, 32)?).as_monomial();
        let mut jets = 0;
        for rep in &reports {
            if let Verdict::Mod2Jet { r } = rep.verdict {
                ensure(Some(r) == deg, || format!("{}: r = {r}, mod 2 reduction t^{deg:?}", rep.descriptor))?;
                jets += 1;
            }
        }
        ensure(d == 2 || jets > 0, || "no jets to compare".into())?;
        Ok(format!("{jets} jets, t^{}", deg.unwrap_or(0)))
    })];
    if f == Family::III && d >= 4 {
        out.push(check(format!("deformation/quotient/d{d}/classify"), "over the dihedral quotient T1 has jet length 2^(d-2)", move || {
            let reports = classify_dihedral(d)?;
            let t1 = reports.iter().find(|r| r.descriptor == "e1").expect("T1 in atlas");
            ensure(t1.ext_self_dim == 1, || format!("Ext^1(T1,T1) = {}", t1.ext_self_dim))?;
            ensure(t1.verdict == Verdict::Mod2Jet { r: 1 << (d - 2) }, || format!("{:?}", t1.verdict))?;
            let t0 = reports.iter().find(|r| r.descriptor == "e0").expect("T0 in atlas");
            ensure(t0.verdict == Verdict::Mod2Trivial, || format!("T0: {:?}", t0.verdict))?;
            Ok(format!("r = {}", 1 << (d - 2)))
        }));
    }
    out
}

fn witt_checks(d: u32) -> Vec<Check> {
    let p = format!("witt/d{d}");
    vec![
        check(format!("{p}/p-poly"), "p_(d+1) monic of degree 2^(d-1)-1, even lower coefficients, t^(2^(d-1)-1) mod 2", move || {
            let m = 32;
            let tower = MinPolyTower::new(d, m)?;
            for l in 3..=d {
                let prev = tower.get(l - 1);
                let want = prev.mul(prev)?.sub(&crate::arith::WittPoly::from_coeffs(&[2], m)?)?;
                ensure(*tower.get(l) == want, || format!("m_{l} breaks the recursion"))?;
            }
            let pp = p_poly(d + 1, m)?;
            let deg = (1usize << (d - 1)) - 1;
            ensure(pp.degree() == Some(deg) && pp.is_monic(), || format!("degree {:?}", pp.degree()))?;
            let odd = pp.raw_coefficients()[..deg].iter().any(|c| c & 1 == 1);
            ensure(!odd, || "odd non-leading coefficient".into())?;
            ensure(mod2_reduction(&pp).as_monomial() == Some(deg), || format!("mod 2: {}", mod2_reduction(&pp)))?;
            let fixed = match d {
                2 => Some(vec![0, 1]),
                3 => Some(vec![0, -2, 0, 1]),
                _ => None,
            };
            if let Some(c) = fixed {
                ensure(pp.signed_coefficients() == c, || format!("{pp}"))?;
            }
            Ok(pp.to_string())
        }),
        check(format!("{p}/s-prime"), "t -> s+s^-1 is an isomorphism onto S' at 2^8, 2^16, 2^32", move || {
            let ws: Vec<_> = [8, 16, 32].iter().map(|&m| verify_s_prime_iso(d, m)).collect::<Result<_>>()?;
            for w in &ws {
                ensure(w.passes(), || format!("precision {}: {w:?}", w.precision))?;
            }
            ensure(ws[2].truncate(16) == ws[1] && ws[1].truncate(8) == ws[0], || "witnesses disagree across precisions".into())?;
            Ok(format!("rank {}, det valuation {}", ws[0].rank, ws[0].determinant_valuation))
        }),
    ]
}

fn checks_for(suite: Suite, range: &RangeInclusive<u32>) -> Vec<Check> {
    let mut out = Vec::new();
    let pairs = families_in(range);
    let want = |s: Suite| suite == s || suite == Suite::All;
    for &(f, d) in &pairs {
        if want(Suite::Presentations) {
            out.extend(presentation_checks(f, d));
        }
        if want(Suite::Homological) {
            out.extend(homological_checks(f, d));
        }
        if want(Suite::Atlas) {
            out.extend(atlas_checks(f, d));
        }
        if want(Suite::Deformation) {
            out.extend(deformation_checks(f, d));
        }
    }
    if want(Suite::Witt) {
        for d in range.clone().filter(|d| (2..=WITT_MAX_D).contains(d)) {
            out.extend(witt_checks(d));
        }
    }
    out
}

/// Runs a suite over `d ∈ range` on a bounded pool; results are sorted by id.
pub fn run_suite(suite: Suite, range: RangeInclusive<u32>) -> Result<Vec<SuiteResult>> {
    let checks = checks_for(suite, &range);
    if checks.is_empty() {
        return Err(Error::Unsupported(format!("no supported parameters in d = {}..{}", range.start(), range.end())));
    }
    let threads = std::thread::available_parallelism().map_or(4, |n| n.get()).min(8);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Check(format!("worker pool: {e}")))?;
    let mut results: Vec<SuiteResult> = pool.install(|| {
        checks
            .par_iter()
            .map(|c| {
                let start = Instant::now();
                let (status, detail) = match (c.run)() {
                    Ok(d) => (Status::Pass, d),
                    Err(e) => (Status::Fail, e.to_string()),
                };
                SuiteResult { check_id: c.id.clone(), claim: c.claim, status, elapsed_ms: start.elapsed().as_millis(), detail }
            })
            .collect()
    });
    results.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_d_range("2..6").unwrap(), 2..=6);
        assert_eq!(parse_d_range("3").unwrap(), 3..=3);
        assert_eq!(parse_d_range("2..=4").unwrap(), 2..=4);
        assert!(matches!(parse_d_range("x..4"), Err(Error::Parse { .. })));
        assert!(parse_d_range("5..2").is_err());
    }

    #[test]
    fn out_of_range_suite_is_unsupported() {
        assert!(matches!(run_suite(Suite::Atlas, 40..=41), Err(Error::Unsupported(_))));
    }
}
