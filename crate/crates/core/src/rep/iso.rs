//! Isomorphism testing: invariant fingerprints certify "no", an invertible
//! element of the Hom space certifies "yes".

use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rep::hom::hom;
use crate::rep::module::{Morphism, QuiverRep};
use crate::rep::series::{radical_series, socle_series};

pub const DEFAULT_SEED: u64 = 0x5157_4f44;
static SEED: AtomicU64 = AtomicU64::new(DEFAULT_SEED);

/// Seed used by [`is_isomorphic`] and the checks built on it.
pub fn default_seed() -> u64 {
    SEED.load(Ordering::Relaxed)
}

/// Overrides the process-wide seed (the CLI's `--seed`).
pub fn set_default_seed(seed: u64) {
    SEED.store(seed, Ordering::Relaxed);
}
/// Hom spaces up to this dimension are searched exhaustively.
pub const EXHAUSTIVE_HOM_DIM: usize = 20;
const RANDOM_TRIES: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dims: [usize; 3],
    pub radical_layers: Vec<[usize; 3]>,
    pub socle_layers: Vec<[usize; 3]>,
    pub end_dim: usize,
}

pub fn fingerprint(m: &QuiverRep) -> Result<Fingerprint> {
    Ok(Fingerprint {
        dims: m.dims(),
        radical_layers: radical_series(m),
        socle_layers: socle_series(m),
        end_dim: hom(m, m)?.dim(),
    })
}

/// Outcome of an isomorphism search together with how it was decided.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoCertificate {
    Isomorphism(Morphism),
    FingerprintMismatch(&'static str),
    ExhaustedHom { hom_dim: usize },
}

pub fn decide_isomorphism(m: &QuiverRep, n: &QuiverRep, seed: u64) -> Result<IsoCertificate> {
    m.same_algebra(n)?;
    if m.dims() != n.dims() {
        return Ok(IsoCertificate::FingerprintMismatch("dimension vectors"));
    }
    if m.is_zero() {
        return Ok(IsoCertificate::Isomorphism(Morphism::identity(m.dims())));
    }
    if radical_series(m) != radical_series(n) {
        return Ok(IsoCertificate::FingerprintMismatch("radical layers"));
    }
    if socle_series(m) != socle_series(n) {
        return Ok(IsoCertificate::FingerprintMismatch("socle layers"));
    }
    let end = hom(m, m)?.dim();
    if hom(n, n)?.dim() != end {
        return Ok(IsoCertificate::FingerprintMismatch("endomorphism dimensions"));
    }
    let mn = hom(m, n)?;
    if mn.dim() != end {
        return Ok(IsoCertificate::FingerprintMismatch("Hom(M,N) dimension"));
    }
    if hom(n, m)?.dim() != end {
        return Ok(IsoCertificate::FingerprintMismatch("Hom(N,M) dimension"));
    }
    let basis = mn.basis();
    let (dom, cod) = (m.dims(), n.dims());
    let k = basis.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_TRIES.min(1 << k.min(16)) {
        let mut f = Morphism::zero(dom, cod);
        for b in basis {
            if rng.random::<bool>() {
                f = f.add(b);
            }
        }
        if f.is_invertible() {
            return Ok(IsoCertificate::Isomorphism(f));
        }
    }
    if k <= EXHAUSTIVE_HOM_DIM {
        // Gray-code walk over all 2^k combinations
        let mut f = Morphism::zero(dom, cod);
        for step in 1u64..(1u64 << k) {
            f = f.add(&basis[step.trailing_zeros() as usize]);
            if f.is_invertible() {
                return Ok(IsoCertificate::Isomorphism(f));
            }
        }
        return Ok(IsoCertificate::ExhaustedHom { hom_dim: k });
    }
    Err(Error::Uncertified(format!(
        "no invertible map found among {RANDOM_TRIES} samples of a {k}-dimensional Hom space"
    )))
}

pub fn is_isomorphic_seeded(m: &QuiverRep, n: &QuiverRep, seed: u64) -> Result<bool> {
    Ok(matches!(decide_isomorphism(m, n, seed)?, IsoCertificate::Isomorphism(_)))
}

pub fn is_isomorphic(m: &QuiverRep, n: &QuiverRep) -> Result<bool> {
    is_isomorphic_seeded(m, n, default_seed())
}
