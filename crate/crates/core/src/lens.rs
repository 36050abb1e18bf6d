//! Lens space arithmetic.
//!
//! `L(p,q)` is the genus-1 Heegaard manifold obtained by gluing two solid
//! tori so that the meridian of one maps to a `(p,q)`-curve on the other;
//! equivalently the quotient of the unit 3-sphere by
//! `(x,y) ↦ (e^{2πi/p}x, e^{2πiq/p}y)`. The special cases `L(1,0) = S³` and
//! `L(0,1) = S¹×S²` are kept as honest values.
//!
//! Homeomorphism classification identifies `L(p,q)` with `L(p,q')` whenever
//! `q' ≡ ±q^{±1} (mod p)`; [`canonicalize_lens`] closes over that full orbit
//! so connected-sum summand lists deduplicate correctly.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A lens space in canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "(i64, i64)", into = "(i64, i64)")]
pub struct LensSpace {
    p: u64,
    q: u64,
}

impl LensSpace {
    /// Order parameter: `|H₁|` when finite, `0` for `S¹×S²`.
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_sphere(&self) -> bool {
        self.p == 1
    }
}

impl TryFrom<(i64, i64)> for LensSpace {
    type Error = Error;
    fn try_from(value: (i64, i64)) -> Result<Self> {
        canonicalize_lens(value.0, value.1)
    }
}

impl From<LensSpace> for (i64, i64) {
    fn from(l: LensSpace) -> Self {
        (l.p as i64, l.q as i64)
    }
}

impl std::fmt::Display for LensSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.p, self.q) {
            (1, _) => write!(f, "S^3"),
            (0, _) => write!(f, "S^1 x S^2"),
            (2, 1) => write!(f, "RP^3"),
            (p, q) => write!(f, "L_{{{p},{q}}}"),
        }
    }
}

/// Reduce `(p, q)` to the canonical representative of its homeomorphism
/// class: `q` is taken mod `p` and minimized over `q ↦ p−q` and
/// `q ↦ q⁻¹ mod p`, so the result satisfies `0 ≤ q ≤ p/2` for `p ≥ 2`.
///
/// Rejects non-coprime pairs.
pub fn canonicalize_lens(p: i64, q: i64) -> Result<LensSpace> {
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    let p = p.unsigned_abs();
    if p == 0 {
        return Ok(LensSpace { p: 0, q: 1 });
    }
    if p == 1 {
        return Ok(LensSpace { p: 1, q: 0 });
    }
    let q0 = q.rem_euclid(p as i64) as u64;
    let mut best = u64::MAX;
    for cand in [q0, p - q0] {
        let cand = cand % p;
        let inv = mod_inverse(cand, p).expect("unit mod p");
        for c in [cand, inv, (p - inv) % p] {
            best = best.min(c);
        }
    }
    Ok(LensSpace { p, q: best })
}

/// Order of the first homology group; `0` encodes the infinite case
/// (`S¹×S²`).
pub fn h1_order(l: &LensSpace) -> u64 {
    l.p
}

/// Inverse of `a` modulo `m` (for `m ≥ 1`), if `gcd(a, m) = 1`.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let quot = r / new_r;
        (t, new_t) = (new_t, t - quot * new_t);
        (r, new_r) = (new_r, r - quot * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(m as i128) as u64)
}
