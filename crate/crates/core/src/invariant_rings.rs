//! Invariants of the rotation action on the plane, and circle-cover
//! bookkeeping.
//!
//! The rotation by `2π/n` acting on `ℝ²_{s,t}` has polynomial invariant
//! ring generated by `z = s² + t²` together with
//!
//! ```text
//! x_n = Σ_j (−1)^j C(n, 2j)   t^{2j}   s^{n−2j}
//! y_n = Σ_j (−1)^j C(n, 2j+1) t^{2j+1} s^{n−2j−1}
//! ```
//!
//! (the real and imaginary parts of `(s + it)^n`), subject to the single
//! relation `x_n² + y_n² − zⁿ = 0`. The Gaussian-integer identity
//! `x_n + i·y_n = (s + it)^n` is the exact verification vehicle here;
//! trigonometric substitutions appear only in floating-point smoke tests.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::poly::IntPolynomial;

const VARS: [&str; 2] = ["s", "t"];

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `x_n`: the even-index alternating binomial sum in `s, t`.
pub fn generator_xn(n: u32) -> IntPolynomial {
    assert!(n >= 1, "generator index must be positive");
    let mut p = IntPolynomial::zero(&VARS);
    let mut j = 0;
    while 2 * j <= n {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        p.add_term(vec![n - 2 * j, 2 * j], binomial(n, 2 * j) * sign);
        j += 1;
    }
    p
}

/// `y_n`: the odd-index alternating binomial sum in `s, t`.
pub fn generator_yn(n: u32) -> IntPolynomial {
    assert!(n >= 1, "generator index must be positive");
    let mut p = IntPolynomial::zero(&VARS);
    let mut j = 0;
    while 2 * j + 1 <= n {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        p.add_term(vec![n - 2 * j - 1, 2 * j + 1], binomial(n, 2 * j + 1) * sign);
        j += 1;
    }
    p
}

/// The radius invariant `z = s² + t²`.
pub fn radius_invariant() -> IntPolynomial {
    let s = IntPolynomial::var(&VARS, "s");
    let t = IntPolynomial::var(&VARS, "t");
    s.mul(&s).add(&t.mul(&t))
}

/// Check `x_n² + y_n² − (s² + t²)ⁿ = 0` exactly.
pub fn verify_relation(n: u32) -> bool {
    let x = generator_xn(n);
    let y = generator_yn(n);
    let lhs = x.mul(&x).add(&y.mul(&y));
    lhs.sub(&radius_invariant().pow(n)).is_zero()
}

/// Real/imaginary parts of `(s + it)^n`, expanded over the Gaussian
/// integers. Independent route to `x_n, y_n` used by tests.
pub fn gaussian_power(n: u32) -> (IntPolynomial, IntPolynomial) {
    let s = IntPolynomial::var(&VARS, "s");
    let t = IntPolynomial::var(&VARS, "t");
    // (re, im) representation of a ℤ[i]-coefficient polynomial
    let mut re = IntPolynomial::constant(&VARS, 1);
    let mut im = IntPolynomial::zero(&VARS);
    for _ in 0..n {
        let new_re = re.mul(&s).sub(&im.mul(&t));
        let new_im = re.mul(&t).add(&im.mul(&s));
        re = new_re;
        im = new_im;
    }
    (re, im)
}

/// Label of a finite quotient in the cover tower of the real circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverKind {
    /// The n-sheeted real cover `S¹ → S¹` cut out by `x_d² + y_d² = 1`.
    RealCircle,
    /// Complexified coefficients over the degree-d/2 real cover.
    Complexified,
    /// The conjugate form `−s² − t² = 1`, which has no real points.
    NoRealPoints,
}

/// One level of the cover tower: a quotient label and its total degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverLevel {
    pub kind: CoverKind,
    pub degree: u32,
}

/// Enumerate the finite quotients of the circle's algebraic fundamental
/// group `ẑ + ℤ₂` up to level `n`: for every divisor `d | n` the real
/// d-sheeted cover, and for even `d` two further quotients of the same
/// order (complexified coefficients, and the form without real points).
pub fn cover_degree_tower(n: u32) -> Vec<CoverLevel> {
    assert!(n >= 1);
    let mut out = Vec::new();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        out.push(CoverLevel {
            kind: CoverKind::RealCircle,
            degree: d,
        });
        if d % 2 == 0 {
            out.push(CoverLevel {
                kind: CoverKind::Complexified,
                degree: d,
            });
            out.push(CoverLevel {
                kind: CoverKind::NoRealPoints,
                degree: d,
            });
        }
    }
    out
}
