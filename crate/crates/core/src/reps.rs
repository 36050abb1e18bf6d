//! Real representation theory of the cyclic group ℤ_m.
//!
//! The irreducible real representations are the trivial character `1⁺`, the
//! sign character `1⁻` (m even), and the two-dimensional rotations
//! `R_{a,m}` for `a ≢ 0, m/2 (mod m)`, with `R_{a,m} ≅ R_{m−a,m}`.
//! Everything here works on symbolic labels; numeric rotation matrices are
//! only ever built inside test oracles.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An irreducible real representation of ℤ_m, in canonical labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RealIrrep {
    /// The trivial character `1⁺`.
    TrivialPlus,
    /// The sign character `1⁻` (exists only for even m).
    SignMinus,
    /// Rotation by `2πa/m`, with `1 ≤ a < m/2`.
    Rotation(u32),
}

impl RealIrrep {
    pub fn dimension(&self) -> u32 {
        match self {
            RealIrrep::Rotation(_) => 2,
            _ => 1,
        }
    }
}

/// A formal sum of irreducibles of ℤ_m with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMultiset {
    modulus: u32,
    counts: BTreeMap<RealIrrep, u32>,
}

impl RepMultiset {
    pub fn empty(modulus: u32) -> Self {
        assert!(modulus >= 1);
        RepMultiset {
            modulus,
            counts: BTreeMap::new(),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn add(&mut self, irrep: RealIrrep, count: u32) {
        if count == 0 {
            return;
        }
        if let RealIrrep::Rotation(a) = irrep {
            debug_assert!(a >= 1 && 2 * a < self.modulus, "non-canonical rotation");
        }
        *self.counts.entry(irrep).or_insert(0) += count;
    }

    pub fn extend(&mut self, other: &RepMultiset) {
        assert_eq!(self.modulus, other.modulus, "mixed moduli");
        for (&irrep, &count) in &other.counts {
            self.add(irrep, count);
        }
    }

    pub fn count(&self, irrep: &RealIrrep) -> u32 {
        self.counts.get(irrep).copied().unwrap_or(0)
    }

    pub fn summands(&self) -> impl Iterator<Item = (&RealIrrep, &u32)> {
        self.counts.iter()
    }

    pub fn total_dimension(&self) -> u32 {
        self.counts
            .iter()
            .map(|(irrep, count)| irrep.dimension() * count)
            .sum()
    }

    /// Character value at the group element `k` (floating point; the exact
    /// content lives in the labels themselves).
    pub fn character(&self, k: u32) -> f64 {
        let m = self.modulus as f64;
        self.counts
            .iter()
            .map(|(irrep, &count)| {
                let chi = match irrep {
                    RealIrrep::TrivialPlus => 1.0,
                    RealIrrep::SignMinus => {
                        if k % 2 == 0 {
                            1.0
                        } else {
                            -1.0
                        }
                    }
                    RealIrrep::Rotation(a) => {
                        2.0 * (2.0 * std::f64::consts::PI * (*a as f64) * (k as f64) / m).cos()
                    }
                };
                count as f64 * chi
            })
            .sum()
    }
}

impl std::fmt::Display for RepMultiset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.counts.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (irrep, &count) in &self.counts {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if count > 1 {
                write!(f, "{count}*")?;
            }
            match irrep {
                RealIrrep::TrivialPlus => write!(f, "1^+")?,
                RealIrrep::SignMinus => write!(f, "1^-")?,
                RealIrrep::Rotation(a) => write!(f, "R_{{{a},{}}}", self.modulus)?,
            }
        }
        Ok(())
    }
}

/// Reduce the two-dimensional rotation with parameter `a` into irreducibles:
/// `a ≡ 0` splits as `1⁺ ⊕ 1⁺`, `a ≡ m/2` (m even) as `1⁻ ⊕ 1⁻`, anything
/// else is the irreducible `R_{a,m}` with `a` normalized into `[1, m/2)`.
pub fn reduce_rotation(a: i64, m: u32) -> RepMultiset {
    assert!(m >= 1, "modulus must be positive");
    let mut out = RepMultiset::empty(m);
    let a = a.rem_euclid(m as i64) as u32;
    if a == 0 {
        out.add(RealIrrep::TrivialPlus, 2);
    } else if m % 2 == 0 && a == m / 2 {
        out.add(RealIrrep::SignMinus, 2);
    } else {
        out.add(RealIrrep::Rotation(a.min(m - a)), 1);
    }
    out
}

/// Decomposition of `R_{b,m} ⊗ S²(1 ⊕ R_{a,m})` into irreducibles:
/// two copies of `R_b` plus `R_{a+b}`, `R_{a−b}`, `R_{2a+b}`, `R_{2a−b}`,
/// each reduced. Total dimension is always 12.
///
/// Requires `gcd(a, m) = 1`.
pub fn decompose_tensor(a: i64, b: i64, m: u32) -> Result<RepMultiset> {
    ensure_unit(a, m)?;
    let mut out = RepMultiset::empty(m);
    for index in [b, b, a + b, a - b, 2 * a + b, 2 * a - b] {
        out.extend(&reduce_rotation(index, m));
    }
    debug_assert_eq!(out.total_dimension(), 12);
    Ok(out)
}

/// One labeled summand of the quadratic-form decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricSummand {
    /// Monomial basis spanning the summand.
    pub span: Vec<String>,
    pub rep: RepMultiset,
}

/// Decomposition of the 6-dimensional space of quadratic forms in `x, y, z`
/// under `1(z) ⊕ R_{a,m}(x, y)`, together with the invariant subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricDecomposition {
    pub summands: Vec<QuadricSummand>,
    /// Monomials spanning the ℤ_m-invariant quadratic forms.
    pub invariants: Vec<String>,
}

/// Decompose the quadratic forms as
/// `1(z²) ⊕ 1(x²+y²) ⊕ R_a(zx, zy) ⊕ R_{2a}(x²−y², 2xy)` and collect the
/// summands whose representation is trivial. Requires `gcd(a, m) = 1`.
pub fn invariant_quadrics(a: i64, m: u32) -> Result<QuadricDecomposition> {
    ensure_unit(a, m)?;
    let trivial = |span: &[&str]| QuadricSummand {
        span: span.iter().map(|s| s.to_string()).collect(),
        rep: {
            let mut r = RepMultiset::empty(m);
            r.add(RealIrrep::TrivialPlus, 1);
            r
        },
    };
    let summands = vec![
        trivial(&["z^2"]),
        trivial(&["x^2+y^2"]),
        QuadricSummand {
            span: vec!["z*x".into(), "z*y".into()],
            rep: reduce_rotation(a, m),
        },
        QuadricSummand {
            span: vec!["x^2-y^2".into(), "2*x*y".into()],
            rep: reduce_rotation(2 * a, m),
        },
    ];
    let mut invariants = Vec::new();
    for s in &summands {
        let all_trivial = s
            .rep
            .summands()
            .all(|(irrep, _)| *irrep == RealIrrep::TrivialPlus);
        if all_trivial {
            invariants.extend(s.span.iter().cloned());
        }
    }
    Ok(QuadricDecomposition {
        summands,
        invariants,
    })
}

/// Shape of the central fiber handed to [`classify_equivariant_conic`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CentralFiberShape {
    /// A smooth conic with real points.
    SmoothRealPoints,
    /// A double line (`z² = 0` after normalization).
    DoubleLine,
    /// A pair of real lines.
    RealLinePair,
}

/// Outcome of the equivariant normal-form classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum EquivariantConicCase {
    /// Smooth central fiber: `z² − x² − y² = 0`, any `m ≥ 2`.
    Smooth { normal_form: String },
    /// Double-line central fiber: `z² + sx² + 2txy − sy² = 0`; possible
    /// only for odd `m` with `b ≡ ±2a (mod m)`.
    DoubleLine { normal_form: String },
    /// No equivariant model without real fixed points exists.
    Impossible { reason: String },
}

/// Classify the equivariant conic-bundle germ with base rotation parameter
/// `b`, fiber rotation parameter `a`, and the given central-fiber shape,
/// under the assumption that nonidentity group elements act with isolated
/// nonreal fixed points only.
///
/// Requires `m ≥ 2` and `gcd(a, m) = gcd(b, m) = 1`.
pub fn classify_equivariant_conic(
    m: u32,
    a: i64,
    b: i64,
    shape: CentralFiberShape,
) -> Result<EquivariantConicCase> {
    if m < 2 {
        return Err(Error::invalid("cyclic group must have order at least 2"));
    }
    ensure_unit(a, m)?;
    ensure_unit(b, m)?;
    Ok(match shape {
        CentralFiberShape::SmoothRealPoints => EquivariantConicCase::Smooth {
            normal_form: "z^2 - x^2 - y^2".to_string(),
        },
        CentralFiberShape::RealLinePair => EquivariantConicCase::Impossible {
            reason: "a real line pair has a real intersection point fixed by the group"
                .to_string(),
        },
        CentralFiberShape::DoubleLine => {
            let mm = m as i64;
            let matches_two_a = (b - 2 * a).rem_euclid(mm) == 0 || (b + 2 * a).rem_euclid(mm) == 0;
            if m % 2 == 0 {
                EquivariantConicCase::Impossible {
                    reason: format!(
                        "a double line needs b ≡ ±2a (mod {m}), which is not a unit for even m"
                    ),
                }
            } else if !matches_two_a {
                EquivariantConicCase::Impossible {
                    reason: format!(
                        "invariant first-order terms exist only for b ≡ ±2a (mod {m})"
                    ),
                }
            } else {
                EquivariantConicCase::DoubleLine {
                    normal_form: "z^2 + s*x^2 + 2*t*x*y - s*y^2".to_string(),
                }
            }
        }
    })
}

fn ensure_unit(a: i64, m: u32) -> Result<()> {
    use num_integer::Integer;
    if m == 0 {
        return Err(Error::invalid("modulus must be positive"));
    }
    if a.gcd(&(m as i64)) != 1 {
        return Err(Error::NotCoprime(a, m as i64));
    }
    Ok(())
}
