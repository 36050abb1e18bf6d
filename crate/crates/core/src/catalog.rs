//! Flat torus quotients and the spherical Hopf model.
//!
//! `GL(2,ℤ)` acts on the torus `T² = ℝ²/ℤ²`; a finite cyclic subgroup
//! `⟨A⟩` of order `m` also rotates an auxiliary circle by `2π/m`, and the
//! diagonal quotient `(T² × S¹)/ℤ_m` is Seifert fibered over `T²/⟨A⟩`.
//! [`torus_quotient_seifert_data`] computes its multiple-fiber
//! multiplicities exactly from the fixed points of the powers of `A`, and
//! [`orbifold_euler_check`] confirms that the four flat examples close up
//! (`χ_orb = 0`).

use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A finite-order integral 2×2 matrix acting on the torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusAction {
    matrix: [[i64; 2]; 2],
    order: u32,
}

const MAX_ORDER: u32 = 12;

impl TorusAction {
    pub fn new(matrix: [[i64; 2]; 2]) -> Result<Self> {
        let det = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
        if det != 1 && det != -1 {
            return Err(Error::invalid(format!(
                "matrix has determinant {det}, expected ±1"
            )));
        }
        let order = matrix_order(&matrix)?;
        Ok(TorusAction { matrix, order })
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.matrix
    }

    pub fn order(&self) -> u32 {
        self.order
    }
}

fn mat_mul(a: &[[i64; 2]; 2], b: &[[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut out = [[0i64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

const IDENTITY: [[i64; 2]; 2] = [[1, 0], [0, 1]];

/// Least `m ≥ 1` with `Aᵐ = I`, searched up to 12.
pub fn matrix_order(a: &[[i64; 2]; 2]) -> Result<u32> {
    let mut power = *a;
    for m in 1..=MAX_ORDER {
        if power == IDENTITY {
            return Ok(m);
        }
        power = mat_mul(&power, a);
    }
    Err(Error::NoFiniteOrder(MAX_ORDER))
}

fn det2(a: &[[i64; 2]; 2]) -> i64 {
    a[0][0] * a[1][1] - a[0][1] * a[1][0]
}

/// Multiplicities of the multiple fibers of `(T² × S¹)/ℤ_m` for the cyclic
/// action generated by `A`, sorted descending.
///
/// Every point of `T²` fixed by some nontrivial power `Aᵏ` has, by
/// Cramer's rule, denominator dividing `det(Aᵏ − I)`; the candidates are
/// enumerated over the lattice `(1/N)ℤ²` with `N` the lcm of those
/// determinants. Each ⟨A⟩-orbit with isotropy of order `j > 1` contributes
/// one fiber of multiplicity `j`. Powers with `det(Aᵏ − I) = 0` but
/// `Aᵏ ≠ I` fix whole circles and fall outside this catalog; they are
/// rejected.
pub fn torus_quotient_seifert_data(action: &TorusAction) -> Result<Vec<u32>> {
    let m = action.order;
    if m < 2 {
        return Err(Error::invalid(
            "quotient data needs an action of order at least 2",
        ));
    }
    let a = action.matrix;

    let mut lcm: i64 = 1;
    let mut power = a;
    for _ in 1..m {
        let shifted = [
            [power[0][0] - 1, power[0][1]],
            [power[1][0], power[1][1] - 1],
        ];
        let d = det2(&shifted);
        if d == 0 {
            // kernel analysis: A^k fixes a positive-dimensional subset
            return Err(Error::invalid(
                "a nontrivial power fixes a circle on the torus; the quotient is not an isolated-fixed-point Seifert example",
            ));
        }
        lcm = num_integer::lcm(lcm, d.abs());
        power = mat_mul(&power, &a);
    }
    let n = lcm as u64;

    // act on (1/N)Z^2 / Z^2 with integer arithmetic
    let act = |x: (u64, u64)| -> (u64, u64) {
        let (p, q) = (x.0 as i64, x.1 as i64);
        (
            (a[0][0] * p + a[0][1] * q).rem_euclid(n as i64) as u64,
            (a[1][0] * p + a[1][1] * q).rem_euclid(n as i64) as u64,
        )
    };
    let mut remaining: std::collections::BTreeSet<(u64, u64)> = (0..n)
        .flat_map(|p| (0..n).map(move |q| (p, q)))
        .collect();
    let mut multiplicities = Vec::new();
    while let Some(&x) = remaining.iter().next() {
        // collect the orbit of x; isotropy order × orbit length = m
        let mut orbit = vec![x];
        let mut y = act(x);
        while y != x {
            orbit.push(y);
            y = act(y);
        }
        for p in &orbit {
            remaining.remove(p);
        }
        let iso = m / orbit.len() as u32;
        if iso > 1 {
            multiplicities.push(iso);
        }
    }
    multiplicities.sort_unstable_by(|a, b| b.cmp(a));
    Ok(multiplicities)
}

/// Orbifold Euler characteristic `2 − Σ(1 − 1/mᵢ)` of a sphere with cone
/// points; zero exactly for the flat examples.
pub fn orbifold_euler_check(multiplicities: &[u32]) -> Result<Rational64> {
    if multiplicities.is_empty() {
        return Err(Error::invalid("need at least one multiplicity"));
    }
    let mut chi = Rational64::from_integer(2);
    for &m in multiplicities {
        if m == 0 {
            return Err(Error::invalid("multiplicities must be positive"));
        }
        chi -= Rational64::one() - Rational64::new(1, m as i64);
    }
    Ok(chi)
}

/// A hard-coded catalog entry for quotients that the torus machinery does
/// not compute.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub description: String,
    pub base: String,
    pub multiplicities: Vec<u32>,
    pub orientable: bool,
}

/// The two `ℤ₂×ℤ₂` quotients of the 3-torus: Seifert fibered over ℝP²
/// with two fibers of multiplicity 2, one orientable and one not.
pub fn rp2_quotient_catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            description: "Z2 x Z2 torus quotient, sign action on the fiber circle".to_string(),
            base: "RP^2".to_string(),
            multiplicities: vec![2, 2],
            orientable: true,
        },
        CatalogEntry {
            description: "Z2 x Z2 torus quotient, trivial action on the fiber circle".to_string(),
            base: "RP^2".to_string(),
            multiplicities: vec![2, 2],
            orientable: false,
        },
    ]
}

/// A point of the round 3-sphere on the Hopf fiber over `s + it`, at fiber
/// angle `theta`: with `r = (1 + s² + t²)^{−1/2}`,
/// `(x₁, x₂, x₃, x₄) = (s·x₃ − t·x₄, s·x₄ + t·x₃, r·cos θ, r·sin θ)`.
pub fn hopf_fiber_point(s: f64, t: f64, theta: f64) -> [f64; 4] {
    let r = 1.0 / (1.0 + s * s + t * t).sqrt();
    let x3 = r * theta.cos();
    let x4 = r * theta.sin();
    [s * x3 - t * x4, s * x4 + t * x3, x3, x4]
}

/// Exact-rational Hopf fiber point. The fiber angle is given by a rational
/// point `(cos, sin)` on the unit circle, and `1 + s² + t²` must be the
/// square of a rational for the radius to stay rational.
pub fn hopf_fiber_point_exact(
    s: &BigRational,
    t: &BigRational,
    cos: &BigRational,
    sin: &BigRational,
) -> Result<[BigRational; 4]> {
    if cos.pow(2) + sin.pow(2) != BigRational::one() {
        return Err(Error::invalid("(cos, sin) must lie on the unit circle"));
    }
    let norm = BigRational::one() + s.pow(2) + t.pow(2);
    let r = rational_sqrt(&(BigRational::one() / norm))
        .ok_or_else(|| Error::invalid("1 + s^2 + t^2 is not a rational square"))?;
    let x3 = &r * cos;
    let x4 = &r * sin;
    Ok([s * &x3 - t * &x4, s * &x4 + t * &x3, x3, x4])
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let num = x.numer().sqrt();
    let den = x.denom().sqrt();
    let candidate = BigRational::new(num, den);
    if &candidate.pow(2) == x {
        Some(candidate)
    } else {
        None
    }
}
