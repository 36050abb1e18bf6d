//! Real conics, conic families, and Du Val surface germs.
//!
//! A plane conic `q(x,y,z) = 0` is classified over ℝ by the rank and
//! signature of its symmetric matrix, computed by exact rational symmetric
//! Gaussian reduction — no floating point. Families of conics over the
//! `(s,t)`-plane have polynomial matrices; their determinant cuts out the
//! locus of degenerate fibers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::{parse_polynomial, IntPolynomial};
use crate::{Error, Result};

/// Classification of a real conic by rank and definiteness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConicClass {
    /// Rank 3, indefinite: a smooth conic with real points.
    SmoothWithRealPoints,
    /// Rank 3, definite: smooth with empty real locus.
    SmoothEmpty,
    /// Rank 2, indefinite: two distinct real lines.
    TwoRealLines,
    /// Rank 2, definite: two conjugate complex lines (one real point).
    TwoConjugateLines,
    /// Rank 1: a double line.
    DoubleLine,
}

impl ConicClass {
    /// Degenerate fibers are everything except the two smooth classes.
    pub fn is_degenerate(&self) -> bool {
        !matches!(
            self,
            ConicClass::SmoothWithRealPoints | ConicClass::SmoothEmpty
        )
    }
}

/// Local model of a conic-bundle fiber over a surface point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum FiberLocalModel {
    /// `x² + y² − z²`: an honest circle bundle.
    S1Bundle,
    /// `x² + y² + z²`: no real points nearby.
    EmptyFibers,
    /// `x² + y² + tz²`: circles collapsing to points over a boundary curve.
    CollapsedEnd,
    /// `x² − y² + tz²`: circle bundle blown up along a curve.
    BlownUpS1Bundle,
    /// `(x² + y² − z²)/ℤ_m`: a Seifert model of multiplicity `m`, base
    /// rotation parameter `b` coprime to `m`.
    SeifertQuotient { m: u32, b: i64 },
}

impl FiberLocalModel {
    pub fn validate(&self) -> Result<()> {
        if let FiberLocalModel::SeifertQuotient { m, b } = self {
            use num_integer::Integer;
            if *m < 2 {
                return Err(Error::invalid("Seifert quotient needs m >= 2"));
            }
            if b.gcd(&(*m as i64)) != 1 {
                return Err(Error::NotCoprime(*b, *m as i64));
            }
        }
        Ok(())
    }

    /// The conic-bundle local model whose fiber over a point has the given
    /// class: smooth classes give the two bundle models, and the two
    /// rank-2 classes are the curve points of the collapsed-end and
    /// blown-up models. A rank-1 fiber pins no single model (it sits on
    /// the exceptional finite set), so it maps to `None`.
    pub fn for_fiber_class(class: ConicClass) -> Option<FiberLocalModel> {
        match class {
            ConicClass::SmoothWithRealPoints => Some(FiberLocalModel::S1Bundle),
            ConicClass::SmoothEmpty => Some(FiberLocalModel::EmptyFibers),
            ConicClass::TwoConjugateLines => Some(FiberLocalModel::CollapsedEnd),
            ConicClass::TwoRealLines => Some(FiberLocalModel::BlownUpS1Bundle),
            ConicClass::DoubleLine => None,
        }
    }
}

/// A nonzero real quadratic form in three variables, stored as its
/// symmetric 3×3 matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConicForm {
    entries: [[BigRational; 3]; 3],
}

impl ConicForm {
    pub fn new(entries: [[BigRational; 3]; 3]) -> Result<Self> {
        for i in 0..3 {
            for j in 0..3 {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::invalid("conic matrix must be symmetric"));
                }
            }
        }
        if entries.iter().flatten().all(|e| e.is_zero()) {
            return Err(Error::invalid("conic form must not be identically zero"));
        }
        Ok(ConicForm { entries })
    }

    pub fn from_integers(entries: [[i64; 3]; 3]) -> Result<Self> {
        let conv = entries.map(|row| row.map(|v| BigRational::from_integer(BigInt::from(v))));
        ConicForm::new(conv)
    }

    pub fn diagonal(a: i64, b: i64, c: i64) -> Self {
        ConicForm::from_integers([[a, 0, 0], [0, b, 0], [0, 0, c]])
            .expect("diagonal form is symmetric")
    }

    pub fn entries(&self) -> &[[BigRational; 3]; 3] {
        &self.entries
    }

    /// Rank and signature `(positive, negative)` by symmetric Gaussian
    /// reduction with congruence pivoting for zero diagonal entries.
    pub fn signature(&self) -> (usize, usize) {
        let mut m: Vec<Vec<BigRational>> = self
            .entries
            .iter()
            .map(|row| row.to_vec())
            .collect();
        let mut active: Vec<usize> = (0..3).collect();
        let (mut pos, mut neg) = (0usize, 0usize);
        while !active.is_empty() {
            // prefer a nonzero diagonal pivot
            let pivot = active.iter().copied().find(|&i| !m[i][i].is_zero());
            let pivot = match pivot {
                Some(i) => i,
                None => {
                    // all active diagonal entries vanish; create one from a
                    // nonzero off-diagonal pair by adding row+column j to i
                    let Some((i, j)) = active
                        .iter()
                        .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                        .find(|&(i, j)| i < j && !m[i][j].is_zero())
                    else {
                        break; // remaining block is zero
                    };
                    for k in 0..3 {
                        let add = m[j][k].clone();
                        m[i][k] += add;
                    }
                    for row in m.iter_mut() {
                        let add = row[j].clone();
                        row[i] += add;
                    }
                    i
                }
            };
            let d = m[pivot][pivot].clone();
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            active.retain(|&i| i != pivot);
            for &k in &active {
                if m[k][pivot].is_zero() {
                    continue;
                }
                let factor = &m[k][pivot] / &d;
                for col in 0..3 {
                    let sub = &factor * &m[pivot][col];
                    m[k][col] -= sub;
                }
                for row in m.iter_mut() {
                    let sub = &factor * &row[pivot];
                    row[k] -= sub;
                }
            }
        }
        (pos, neg)
    }
}

/// Classify a conic over ℝ by exact rank/signature computation.
pub fn classify_conic(c: &ConicForm) -> ConicClass {
    let (pos, neg) = c.signature();
    match (pos + neg, pos.min(neg)) {
        (3, 0) => ConicClass::SmoothEmpty,
        (3, _) => ConicClass::SmoothWithRealPoints,
        (2, 0) => ConicClass::TwoConjugateLines,
        (2, _) => ConicClass::TwoRealLines,
        (1, _) => ConicClass::DoubleLine,
        _ => unreachable!("zero forms are rejected at construction"),
    }
}

/// A family of conics over the `(s,t)`-plane: a symmetric 3×3 matrix of
/// integer polynomials that is not identically degenerate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConicFamily {
    entries: [[IntPolynomial; 3]; 3],
}

pub const FAMILY_VARS: [&str; 2] = ["s", "t"];

impl ConicFamily {
    pub fn new(entries: [[IntPolynomial; 3]; 3]) -> Result<Self> {
        for i in 0..3 {
            for j in 0..3 {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::invalid("family matrix must be symmetric"));
                }
            }
        }
        let family = ConicFamily { entries };
        if discriminant_polynomial(&family).is_zero() {
            return Err(Error::invalid("family is identically degenerate"));
        }
        Ok(family)
    }

    /// Parse nine polynomial strings in `s, t` (row-major).
    pub fn parse(entries: &[&str; 9]) -> Result<Self> {
        let polys: Vec<IntPolynomial> = entries
            .iter()
            .map(|e| parse_polynomial(e, &FAMILY_VARS))
            .collect::<Result<_>>()?;
        let mut it = polys.into_iter();
        let mut next = || it.next().expect("nine entries");
        let entries = [
            [next(), next(), next()],
            [next(), next(), next()],
            [next(), next(), next()],
        ];
        ConicFamily::new(entries)
    }

    pub fn entries(&self) -> &[[IntPolynomial; 3]; 3] {
        &self.entries
    }
}

/// Determinant of the family matrix, expanded exactly. Vanishes precisely
/// over the degenerate fibers.
pub fn discriminant_polynomial(f: &ConicFamily) -> IntPolynomial {
    let m = &f.entries;
    let minor = |r0: usize, r1: usize, c0: usize, c1: usize| {
        m[r0][c0].mul(&m[r1][c1]).sub(&m[r0][c1].mul(&m[r1][c0]))
    };
    m[0][0]
        .mul(&minor(1, 2, 1, 2))
        .sub(&m[0][1].mul(&minor(1, 2, 0, 2)))
        .add(&m[0][2].mul(&minor(1, 2, 0, 1)))
}

/// Evaluate the family at an exact rational point and classify the fiber.
pub fn classify_family_over_point(
    f: &ConicFamily,
    s0: &BigRational,
    t0: &BigRational,
) -> Result<ConicClass> {
    let point = [s0.clone(), t0.clone()];
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(3);
    for i in 0..3 {
        rows.push((0..3).map(|j| f.entries[i][j].eval(&point)).collect());
    }
    let entries = [
        [rows[0][0].clone(), rows[0][1].clone(), rows[0][2].clone()],
        [rows[1][0].clone(), rows[1][1].clone(), rows[1][2].clone()],
        [rows[2][0].clone(), rows[2][1].clone(), rows[2][2].clone()],
    ];
    Ok(classify_conic(&ConicForm::new(entries)?))
}

/// The nine real Du Val singularity types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum DuValType {
    APlus { n: u32 },
    AMinus { n: u32 },
    APlusPlus { n: u32 },
    DPlus { n: u32 },
    DMinus { n: u32 },
    E6Plus,
    E6Minus,
    E7,
    E8,
}

impl std::fmt::Display for DuValType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DuValType::APlus { n } => write!(f, "A{n}+"),
            DuValType::AMinus { n } => write!(f, "A{n}-"),
            DuValType::APlusPlus { n } => write!(f, "A{n}++"),
            DuValType::DPlus { n } => write!(f, "D{n}+"),
            DuValType::DMinus { n } => write!(f, "D{n}-"),
            DuValType::E6Plus => write!(f, "E6+"),
            DuValType::E6Minus => write!(f, "E6-"),
            DuValType::E7 => write!(f, "E7"),
            DuValType::E8 => write!(f, "E8"),
        }
    }
}

/// Match a normal-form equation against the Du Val table:
///
/// * `x² + y² − z^{n+1}` → `Aₙ⁺` (n ≥ 1)
/// * `x² − y² ± z^{n+1}` → `Aₙ⁻` (n ≥ 1), with `A₁⁻ ≅ A₁⁺`
/// * `x² + y² + z^{n+1}` → `Aₙ⁺⁺`, only for odd `n`
/// * `x² + y²z ± z^{n−1}` → `Dₙ^±` (n ≥ 4)
/// * `x² + y³ ± z⁴` → `E₆^±`; `x² + y³ + yz³` → `E₇`; `x² + y³ + z⁵` → `E₈`
///
/// The input is an equation string in `x, y, z`; anything that is not one
/// of these shapes (including `x² + y² + z^{even}`) is rejected with an
/// explanation.
pub fn duval_classify(pattern: &str) -> Result<DuValType> {
    let p = parse_polynomial(pattern, &["x", "y", "z"])?;
    let terms: Vec<(Vec<u32>, BigInt)> = p.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    if terms.len() != 3 {
        return Err(Error::UnrecognizedNormalForm(format!(
            "expected exactly three monomials, found {}",
            terms.len()
        )));
    }
    let coeff_of = |e: &[u32]| -> Option<BigInt> {
        terms
            .iter()
            .find(|(exps, _)| exps.as_slice() == e)
            .map(|(_, c)| c.clone())
    };
    if coeff_of(&[2, 0, 0]) != Some(BigInt::one()) {
        return Err(Error::UnrecognizedNormalForm(
            "normal forms start with x^2".into(),
        ));
    }

    // A-type: x^2 ± y^2 ± z^k
    if let Some(y_coeff) = coeff_of(&[0, 2, 0]) {
        let z_term = terms
            .iter()
            .find(|(e, _)| e[0] == 0 && e[1] == 0 && e[2] >= 1)
            .ok_or_else(|| Error::UnrecognizedNormalForm("missing z-power term".into()))?;
        let k = z_term.0[2];
        let z_coeff = z_term.1.clone();
        if !(y_coeff.abs().is_one() && z_coeff.abs().is_one()) {
            return Err(Error::UnrecognizedNormalForm(
                "coefficients must be ±1".into(),
            ));
        }
        if k < 2 {
            return Err(Error::UnrecognizedNormalForm(
                "z-exponent must be at least 2".into(),
            ));
        }
        let n = k - 1;
        let y_pos = y_coeff.is_positive();
        let z_pos = z_coeff.is_positive();
        return match (y_pos, z_pos) {
            (true, false) => Ok(DuValType::APlus { n }),
            (true, true) => {
                if n % 2 == 1 {
                    Ok(DuValType::APlusPlus { n })
                } else {
                    Err(Error::UnrecognizedNormalForm(format!(
                        "x^2+y^2+z^{k} needs an even z-exponent (n odd); n = {n} is even"
                    )))
                }
            }
            (false, _) => {
                // either sign of z^k gives the same real germ
                if n == 1 {
                    Ok(DuValType::APlus { n: 1 })
                } else {
                    Ok(DuValType::AMinus { n })
                }
            }
        };
    }

    // D-type: x^2 + y^2 z ± z^{n-1}
    if coeff_of(&[0, 2, 1]) == Some(BigInt::one()) {
        let z_term = terms
            .iter()
            .find(|(e, _)| e[0] == 0 && e[1] == 0 && e[2] >= 1)
            .ok_or_else(|| Error::UnrecognizedNormalForm("missing z-power term".into()))?;
        let k = z_term.0[2];
        let n = k + 1;
        if n < 4 {
            return Err(Error::UnrecognizedNormalForm(
                "D-type needs z-exponent at least 3".into(),
            ));
        }
        if !z_term.1.abs().is_one() {
            return Err(Error::UnrecognizedNormalForm(
                "coefficients must be ±1".into(),
            ));
        }
        return if z_term.1.is_positive() {
            Ok(DuValType::DPlus { n })
        } else {
            Ok(DuValType::DMinus { n })
        };
    }

    // E-types: x^2 + y^3 + {±z^4, y z^3, z^5}
    if coeff_of(&[0, 3, 0]) == Some(BigInt::one()) {
        if let Some(c) = coeff_of(&[0, 0, 4]) {
            if c.abs().is_one() {
                return Ok(if c.is_positive() {
                    DuValType::E6Plus
                } else {
                    DuValType::E6Minus
                });
            }
        }
        if coeff_of(&[0, 1, 3]) == Some(BigInt::one()) {
            return Ok(DuValType::E7);
        }
        if coeff_of(&[0, 0, 5]) == Some(BigInt::one()) {
            return Ok(DuValType::E8);
        }
    }

    Err(Error::UnrecognizedNormalForm(format!(
        "{pattern:?} matches no Du Val normal form"
    )))
}

/// The base singularity produced by the multiplicity-`m` Seifert quotient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientBaseSingularity {
    /// Normal-form equation in `u, v, w`.
    pub equation: String,
    pub duval: DuValType,
    /// Whether the real germ has two local sheets (so the point can be
    /// separating): true exactly when `m` is even.
    pub separating_capable: bool,
}

/// `u² + v² − w^m`, the image of the origin under the degree-`m` quotient.
pub fn seifert_quotient_base_singularity(m: u32) -> Result<QuotientBaseSingularity> {
    if m < 2 {
        return Err(Error::invalid("quotient multiplicity must be at least 2"));
    }
    Ok(QuotientBaseSingularity {
        equation: format!("u^2+v^2-w^{m}"),
        duval: DuValType::APlus { n: m - 1 },
        separating_capable: m % 2 == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rational(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn classify_diagonal_forms() {
        assert_eq!(
            classify_conic(&ConicForm::diagonal(1, 1, -1)),
            ConicClass::SmoothWithRealPoints
        );
        assert_eq!(
            classify_conic(&ConicForm::diagonal(1, 1, 1)),
            ConicClass::SmoothEmpty
        );
        assert_eq!(
            classify_conic(&ConicForm::diagonal(1, 0, 0)),
            ConicClass::DoubleLine
        );
        assert_eq!(
            classify_conic(&ConicForm::diagonal(1, -1, 0)),
            ConicClass::TwoRealLines
        );
        assert_eq!(
            classify_conic(&ConicForm::diagonal(1, 1, 0)),
            ConicClass::TwoConjugateLines
        );
        assert!(ConicForm::from_integers([[0; 3]; 3]).is_err());
    }

    #[test]
    fn zero_diagonal_pivoting() {
        // xy = 0: two real lines, handled through the off-diagonal pivot
        let m = ConicForm::from_integers([[0, 1, 0], [1, 0, 0], [0, 0, 0]]).unwrap();
        assert_eq!(classify_conic(&m), ConicClass::TwoRealLines);
        // xy + z^2
        let m = ConicForm::from_integers([[0, 1, 0], [1, 0, 0], [0, 0, 1]]).unwrap();
        assert_eq!(classify_conic(&m), ConicClass::SmoothWithRealPoints);
    }

    fn random_unimodular(seed: u64) -> [[i64; 3]; 3] {
        // deterministic product of elementary matrices
        let mut m = [[1i64, 0, 0], [0, 1, 0], [0, 0, 1]];
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
        for _ in 0..6 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let i = (state >> 33) as usize % 3;
            let j = ((state >> 21) as usize) % 3;
            let k = ((state >> 7) % 5) as i64 - 2;
            if i == j {
                continue;
            }
            for col in 0..3 {
                m[i][col] += k * m[j][col];
            }
        }
        m
    }

    #[test]
    fn classification_is_congruence_invariant() {
        let forms = [
            ConicForm::diagonal(1, 1, -1),
            ConicForm::diagonal(1, 1, 1),
            ConicForm::diagonal(1, -1, 0),
            ConicForm::diagonal(1, 1, 0),
            ConicForm::diagonal(1, 0, 0),
        ];
        for form in &forms {
            let class = classify_conic(form);
            for trial in 0..20 {
                let a = random_unimodular(trial * 7 + 1);
                // compute aᵀ q a exactly
                let q = form.entries();
                let mut out = [[BigRational::zero(), BigRational::zero(), BigRational::zero()],
                               [BigRational::zero(), BigRational::zero(), BigRational::zero()],
                               [BigRational::zero(), BigRational::zero(), BigRational::zero()]];
                for i in 0..3 {
                    for j in 0..3 {
                        let mut acc = BigRational::zero();
                        for k in 0..3 {
                            for l in 0..3 {
                                acc += BigRational::from_integer(BigInt::from(a[k][i] * a[l][j]))
                                    * &q[k][l];
                            }
                        }
                        out[i][j] = acc;
                    }
                }
                let transformed = ConicForm::new(out).unwrap();
                assert_eq!(classify_conic(&transformed), class, "trial {trial}");
            }
        }
    }

    fn family(entries: [&str; 9]) -> ConicFamily {
        ConicFamily::parse(&entries).unwrap()
    }

    fn collapsed_end() -> ConicFamily {
        family(["1", "0", "0", "0", "1", "0", "0", "0", "t"])
    }

    #[test]
    fn discriminant_examples() {
        let d = discriminant_polynomial(&collapsed_end());
        assert_eq!(d.to_string(), "t");

        // z^2 + s x^2 + 2 t x y - s y^2
        let smooth_total = family(["s", "t", "0", "t", "-s", "0", "0", "0", "1"]);
        let d = discriminant_polynomial(&smooth_total);
        let expected = parse_polynomial("-s^2-t^2", &FAMILY_VARS).unwrap();
        assert_eq!(d, expected);

        let blown_up = family(["1", "0", "0", "0", "-1", "0", "0", "0", "t"]);
        assert_eq!(discriminant_polynomial(&blown_up).to_string(), "-t");
    }

    #[test]
    fn family_classification_examples() {
        let f = collapsed_end();
        let zero = BigRational::zero();
        assert_eq!(
            classify_family_over_point(&f, &zero, &rational(-1, 1)).unwrap(),
            ConicClass::SmoothWithRealPoints
        );
        assert_eq!(
            classify_family_over_point(&f, &zero, &rational(1, 1)).unwrap(),
            ConicClass::SmoothEmpty
        );
        // over the origin the fiber degenerates to the conjugate line pair
        // x^2 + y^2 (rank 2, definite)
        assert_eq!(
            classify_family_over_point(&f, &zero, &zero).unwrap(),
            ConicClass::TwoConjugateLines
        );
    }

    #[test]
    fn family_rejects_identically_degenerate() {
        assert!(ConicFamily::parse(&["0", "0", "0", "0", "0", "0", "0", "0", "1"]).is_err());
        assert!(ConicFamily::parse(&["s", "t", "0", "0", "t", "0", "0", "0", "1"]).is_err());
    }

    proptest! {
        /// The discriminant vanishes at a rational point iff the fiber
        /// there is degenerate.
        #[test]
        fn discriminant_detects_degeneracy(
            sn in -6i64..=6, sd in 1i64..=3,
            tn in -6i64..=6, td in 1i64..=3,
            which in 0usize..4,
        ) {
            let families = [
                collapsed_end(),
                family(["s", "t", "0", "t", "-s", "0", "0", "0", "1"]),
                family(["1", "0", "0", "0", "-1", "0", "0", "0", "t"]),
                family(["s", "0", "0", "0", "1", "0", "0", "0", "t"]),
            ];
            let f = &families[which];
            let s0 = rational(sn, sd);
            let t0 = rational(tn, td);
            let det = discriminant_polynomial(f).eval(&[s0.clone(), t0.clone()]);
            match classify_family_over_point(f, &s0, &t0) {
                Ok(class) => prop_assert_eq!(det.is_zero(), class.is_degenerate()),
                Err(_) => prop_assert!(det.is_zero()), // fiber matrix vanished entirely
            }
        }
    }

    #[test]
    fn duval_table() {
        assert_eq!(
            duval_classify("x^2+y^2-z^3").unwrap(),
            DuValType::APlus { n: 2 }
        );
        assert_eq!(
            duval_classify("x^2-y^2-z^2").unwrap(),
            DuValType::APlus { n: 1 }
        );
        assert_eq!(
            duval_classify("x^2-y^2-z^5").unwrap(),
            DuValType::AMinus { n: 4 }
        );
        assert_eq!(
            duval_classify("x^2+y^2+z^4").unwrap(),
            DuValType::APlusPlus { n: 3 }
        );
        assert!(duval_classify("x^2+y^2+z^3").is_err());
        assert_eq!(
            duval_classify("x^2+y^2*z+z^3").unwrap(),
            DuValType::DPlus { n: 4 }
        );
        assert_eq!(
            duval_classify("x^2+y^2*z-z^5").unwrap(),
            DuValType::DMinus { n: 6 }
        );
        assert!(duval_classify("x^2+y^2*z+z^2").is_err());
        assert_eq!(duval_classify("x^2+y^3+z^4").unwrap(), DuValType::E6Plus);
        assert_eq!(duval_classify("x^2+y^3-z^4").unwrap(), DuValType::E6Minus);
        assert_eq!(duval_classify("x^2+y^3+y*z^3").unwrap(), DuValType::E7);
        assert_eq!(duval_classify("x^2+y^3+z^5").unwrap(), DuValType::E8);
        assert!(duval_classify("x^2+y^2").is_err());
        assert!(duval_classify("x^2+2*y^2-z^3").is_err());
    }

    #[test]
    fn local_models() {
        assert_eq!(
            FiberLocalModel::for_fiber_class(ConicClass::TwoConjugateLines),
            Some(FiberLocalModel::CollapsedEnd)
        );
        assert_eq!(
            FiberLocalModel::for_fiber_class(ConicClass::TwoRealLines),
            Some(FiberLocalModel::BlownUpS1Bundle)
        );
        assert_eq!(FiberLocalModel::for_fiber_class(ConicClass::DoubleLine), None);
        assert!(FiberLocalModel::SeifertQuotient { m: 3, b: 1 }.validate().is_ok());
        assert!(FiberLocalModel::SeifertQuotient { m: 1, b: 1 }.validate().is_err());
        assert!(FiberLocalModel::SeifertQuotient { m: 4, b: 2 }.validate().is_err());
    }

    #[test]
    fn quotient_base_singularities() {
        let q = seifert_quotient_base_singularity(2).unwrap();
        assert_eq!(q.duval, DuValType::APlus { n: 1 });
        assert!(q.separating_capable);

        let q = seifert_quotient_base_singularity(3).unwrap();
        assert_eq!(q.equation, "u^2+v^2-w^3");
        assert_eq!(q.duval, DuValType::APlus { n: 2 });
        assert!(!q.separating_capable);

        let q = seifert_quotient_base_singularity(4).unwrap();
        assert_eq!(q.duval, DuValType::APlus { n: 3 });
        assert!(q.separating_capable);

        assert!(seifert_quotient_base_singularity(1).is_err());

        for m in 2..=12u32 {
            let q = seifert_quotient_base_singularity(m).unwrap();
            // classify the same equation via the x,y,z alphabet
            let renamed = q
                .equation
                .replace('u', "x")
                .replace('v', "y")
                .replace('w', "z");
            assert_eq!(duval_classify(&renamed).unwrap(), DuValType::APlus { n: m - 1 });
        }
    }

    /// Real sheet count of `u² + v² = w^m` near the origin: for even m the
    /// locus is the two cones over `w > 0` and `w < 0`; for odd m only
    /// `w ≥ 0` carries points. Checked by exact sign sampling.
    #[test]
    fn sheet_structure_by_sign_analysis() {
        for m in 2u32..=8 {
            let mut signs = std::collections::BTreeSet::new();
            for wn in [-2i64, -1, 1, 2] {
                let w = rational(wn, 3);
                let rhs = w.pow(m as i32);
                if rhs.is_positive() {
                    signs.insert(wn.signum());
                }
            }
            let expected_sheets = if m % 2 == 0 { 2 } else { 1 };
            assert_eq!(signs.len(), expected_sheets, "m = {m}");
            assert_eq!(
                seifert_quotient_base_singularity(m).unwrap().separating_capable,
                expected_sheets == 2
            );
        }
    }
}
