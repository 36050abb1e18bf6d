//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line. Every tolerance is pinned here, in code.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use conic_topology::assembler::{validate_surface, SingularPoint, SurfaceComponentDescriptor};
use conic_topology::catalog::{orbifold_euler_check, torus_quotient_seifert_data, TorusAction};
use conic_topology::conics::{
    classify_family_over_point, discriminant_polynomial, ConicClass, ConicFamily,
};
use conic_topology::invariant_rings::{gaussian_power, generator_xn, generator_yn, verify_relation};
use conic_topology::poly::parse_polynomial;
use conic_topology::reps::{
    classify_equivariant_conic, decompose_tensor, CentralFiberShape, EquivariantConicCase,
    RealIrrep, RepMultiset,
};
use conic_topology::surgery::{
    canonicalize_slope, decompose, fiber_multiplicity, glue_two_solid_tori, h1_of_manifold_type,
    smith_normal_form, winding_oracle, AbelianGroup, BaseSurface, ManifoldType, SurgeryProblem,
};

fn criterion(
    number: u32,
    name: &str,
    budget: Duration,
    check: impl FnOnce() -> Result<(), String>,
) {
    let start = Instant::now();
    let result = check();
    let elapsed = start.elapsed();
    match &result {
        Ok(()) => println!(
            "ACCEPTANCE {number} ({name}): PASS [{:.3}s]",
            elapsed.as_secs_f64()
        ),
        Err(e) => println!(
            "ACCEPTANCE {number} ({name}): FAIL [{:.3}s] - {e}",
            elapsed.as_secs_f64()
        ),
    }
    if let Err(e) = result {
        panic!("criterion {number} failed: {e}");
    }
    assert!(
        elapsed <= budget,
        "criterion {number} exceeded its runtime budget: {elapsed:?} > {budget:?}"
    );
}

/// Criterion 1 — the invariant-ring identity, exactly, for n = 1..24, and
/// the generators against the Gaussian-integer expansion of (s + it)^n.
#[test]
fn acceptance_1_invariant_ring_identity() {
    criterion(1, "invariant-ring identity", Duration::from_secs(1), || {
        for n in 1..=24u32 {
            if !verify_relation(n) {
                return Err(format!("x_{n}^2 + y_{n}^2 - z^{n} is not zero"));
            }
            let (re, im) = gaussian_power(n);
            if generator_xn(n) != re {
                return Err(format!("x_{n} disagrees with Re (s+it)^{n}"));
            }
            if generator_yn(n) != im {
                return Err(format!("y_{n} disagrees with Im (s+it)^{n}"));
            }
        }
        Ok(())
    });
}

/// Criterion 2 — the four flat torus quotients give exactly the tuples
/// (6,3,2), (4,4,2), (3,3,3), (2,2,2,2), each with orbifold Euler
/// characteristic zero.
#[test]
fn acceptance_2_torus_quotient_data() {
    criterion(2, "torus-quotient Seifert data", Duration::from_secs(1), || {
        let cases: [([[i64; 2]; 2], &[u32]); 4] = [
            ([[0, -1], [1, 1]], &[6, 3, 2]),
            ([[0, -1], [1, 0]], &[4, 4, 2]),
            ([[-1, -1], [1, 0]], &[3, 3, 3]),
            ([[-1, 0], [0, -1]], &[2, 2, 2, 2]),
        ];
        for (matrix, expected) in cases {
            let action = TorusAction::new(matrix).map_err(|e| e.to_string())?;
            let data = torus_quotient_seifert_data(&action).map_err(|e| e.to_string())?;
            if data != expected {
                return Err(format!("{matrix:?}: expected {expected:?}, got {data:?}"));
            }
            let chi = orbifold_euler_check(&data).map_err(|e| e.to_string())?;
            if !chi.is_zero() {
                return Err(format!("{matrix:?}: orbifold Euler characteristic {chi} != 0"));
            }
        }
        Ok(())
    });
}

/// Criterion 3 — fiber multiplicity equals the numeric winding number for
/// every coprime pair with |c|, |d| ≤ 12, at the pinned sampling density.
#[test]
fn acceptance_3_multiplicity_coherence() {
    criterion(3, "multiplicity coherence", Duration::from_secs(5), || {
        for c in -12i64..=12 {
            for d in -12i64..=12 {
                if c.gcd(&d) != 1 {
                    continue;
                }
                let samples = 4 * (c.unsigned_abs() + d.unsigned_abs() + 1);
                let w = winding_oracle(c, d, samples).map_err(|e| e.to_string())?;
                if w != d {
                    return Err(format!("winding of ({c},{d}) is {w}, expected {d}"));
                }
                let slope = canonicalize_slope(c, d).map_err(|e| e.to_string())?;
                if fiber_multiplicity(&slope) != d.unsigned_abs() {
                    return Err(format!(
                        "multiplicity of ({c},{d}) is {}, expected {}",
                        fiber_multiplicity(&slope),
                        d.unsigned_abs()
                    ));
                }
            }
        }
        Ok(())
    });
}

/// Independent homology oracle: presentation matrix assembled directly
/// from the raw gluing data, reduced by Smith normal form.
///
/// Columns: one class per crosscap (nonorientable base), one section class
/// per torus gluing, one boundary class per Klein gluing, one fiber class.
/// Rows: boundary classes sum to zero (crosscaps doubled); a torus gluing
/// of slope (c, d) kills c·σ + d·h; a Klein filling kills its boundary
/// class. Orientable genus contributes 2g free generators.
fn oracle_h1(p: &SurgeryProblem) -> AbelianGroup {
    let crosscaps = if p.base().orientable() {
        0
    } else {
        p.base().genus() as usize
    };
    let r = p.torus_gluings().len();
    let s = p.klein_gluings() as usize;
    let cols = crosscaps + r + s + 1;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();

    let mut surface = vec![BigInt::zero(); cols];
    for c in surface.iter_mut().take(crosscaps) {
        *c = BigInt::from(2);
    }
    for c in surface.iter_mut().take(crosscaps + r + s).skip(crosscaps) {
        *c = BigInt::from(1);
    }
    rows.push(surface);
    for (i, slope) in p.torus_gluings().iter().enumerate() {
        let mut row = vec![BigInt::zero(); cols];
        row[crosscaps + i] = BigInt::from(slope.c());
        row[cols - 1] = BigInt::from(slope.d());
        rows.push(row);
    }
    for j in 0..s {
        let mut row = vec![BigInt::zero(); cols];
        row[crosscaps + r + j] = BigInt::from(1);
        rows.push(row);
    }

    let snf = smith_normal_form(&rows);
    let orders: Vec<u64> = snf
        .factors
        .iter()
        .map(|f| u64::try_from(f).expect("small orders"))
        .collect();
    let extra = if p.base().orientable() {
        2 * p.base().genus() as usize
    } else {
        0
    };
    AbelianGroup::from_parts(&orders, snf.cokernel_rank + extra)
}

fn random_problem(rng: &mut ChaCha8Rng) -> SurgeryProblem {
    loop {
        let orientable = rng.gen_bool(0.7);
        let genus = if orientable {
            rng.gen_range(0..=2u32)
        } else {
            rng.gen_range(1..=2u32)
        };
        let boundary = rng.gen_range(0..=3u32);
        let klein = if boundary > 0 && rng.gen_bool(0.25) {
            rng.gen_range(1..=boundary)
        } else {
            0
        };
        let mut tori = Vec::new();
        for _ in 0..(boundary - klein) {
            // bias toward the section/fiber-killing slopes so the
            // connected-sum branch is exercised well
            let (c, d) = if rng.gen_bool(0.3) {
                if rng.gen_bool(0.5) {
                    (1, 0)
                } else {
                    (0, 1)
                }
            } else {
                loop {
                    let c = rng.gen_range(-8i64..=8);
                    let d = rng.gen_range(-8i64..=8);
                    if c.gcd(&d) == 1 {
                        break (c, d);
                    }
                }
            };
            tori.push((c, d));
        }
        let base = BaseSurface::new(orientable, genus, boundary).expect("valid base");
        if let Ok(p) = SurgeryProblem::new(base, &tori, klein) {
            return p;
        }
    }
}

/// Criterion 4 — first homology of the decomposed manifold type matches
/// the independent presentation-matrix oracle on 50 randomized problems
/// (≤ 3 boundary circles, |slope entries| ≤ 8), plus the tabulated
/// Heegaard gluings.
#[test]
fn acceptance_4_decomposition_vs_homology_oracle() {
    criterion(4, "decomposition vs homology oracle", Duration::from_secs(10), || {
        // tabulated special cases first
        let s3 = h1_of_manifold_type(&glue_two_solid_tori(1, 0).unwrap()).unwrap();
        if !s3.is_trivial() {
            return Err("H1 of the (1,0) Heegaard gluing is not trivial".into());
        }
        let s1xs2 = h1_of_manifold_type(&glue_two_solid_tori(0, 1).unwrap()).unwrap();
        if s1xs2 != AbelianGroup::from_parts(&[], 1) {
            return Err("H1 of the (0,1) Heegaard gluing is not Z".into());
        }
        let rp3 = h1_of_manifold_type(&glue_two_solid_tori(2, 1).unwrap()).unwrap();
        if rp3 != AbelianGroup::from_parts(&[2], 0) {
            return Err("H1 of the (2,1) Heegaard gluing is not Z_2".into());
        }

        let mut rng = ChaCha8Rng::seed_from_u64(20260811);
        let mut connected_sum_cases = 0usize;
        let mut seifert_cases = 0usize;
        for case in 0..50 {
            let p = random_problem(&mut rng);
            let manifold = decompose(&p);
            match &manifold {
                ManifoldType::ConnectedSum { .. } => connected_sum_cases += 1,
                ManifoldType::SeifertFibered { .. } => seifert_cases += 1,
            }
            let via_type = h1_of_manifold_type(&manifold).map_err(|e| e.to_string())?;
            let via_oracle = oracle_h1(&p);
            if via_type != via_oracle {
                return Err(format!(
                    "case {case}: {p:?} decomposed to {manifold} with H1 {via_type}, oracle says {via_oracle}"
                ));
            }
        }
        // the handle-counting rule must have been exercised on at least 20
        // connected-sum cases before it is trusted
        if connected_sum_cases < 20 {
            return Err(format!(
                "only {connected_sum_cases} connected-sum cases generated; need at least 20"
            ));
        }
        if seifert_cases < 5 {
            return Err(format!(
                "only {seifert_cases} Seifert cases generated; generator is skewed"
            ));
        }
        Ok(())
    });
}

/// Numeric character of `R_b ⊗ S²(1 ⊕ R_a)` at group element k, computed
/// from explicit 12×12 matrices (Kronecker product of a 2×2 rotation with
/// the symmetric square of a 3×3 block rotation).
fn numeric_character(a: i64, b: i64, m: u32, k: u32) -> f64 {
    let tau = 2.0 * std::f64::consts::PI * (k as f64) / (m as f64);
    let rot = |angle: f64| [[angle.cos(), angle.sin()], [-angle.sin(), angle.cos()]];
    let rb = rot(b as f64 * tau);
    let ra = rot(a as f64 * tau);
    let mut v = [[0.0f64; 3]; 3];
    v[0][0] = 1.0;
    for i in 0..2 {
        for j in 0..2 {
            v[i + 1][j + 1] = ra[i][j];
        }
    }
    let pairs = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];
    let mut s2 = [[0.0f64; 6]; 6];
    for (col, &(p, q)) in pairs.iter().enumerate() {
        for (row, &(u, w)) in pairs.iter().enumerate() {
            s2[row][col] = if u == w {
                v[u][p] * v[w][q]
            } else {
                v[u][p] * v[w][q] + v[w][p] * v[u][q]
            };
        }
    }
    let mut full = [[0.0f64; 12]; 12];
    for bi in 0..2 {
        for bj in 0..2 {
            for si in 0..6 {
                for sj in 0..6 {
                    full[6 * bi + si][6 * bj + sj] = rb[bi][bj] * s2[si][sj];
                }
            }
        }
    }
    (0..12).map(|i| full[i][i]).sum()
}

fn irrep_character(irrep: &RealIrrep, m: u32, k: u32) -> f64 {
    match irrep {
        RealIrrep::TrivialPlus => 1.0,
        RealIrrep::SignMinus => {
            if k % 2 == 0 {
                1.0
            } else {
                -1.0
            }
        }
        RealIrrep::Rotation(a) => {
            2.0 * (2.0 * std::f64::consts::PI * (*a as f64) * (k as f64) / (m as f64)).cos()
        }
    }
}

fn all_irreps(m: u32) -> Vec<RealIrrep> {
    let mut out = vec![RealIrrep::TrivialPlus];
    if m % 2 == 0 {
        out.push(RealIrrep::SignMinus);
    }
    for a in 1..m {
        if 2 * a < m {
            out.push(RealIrrep::Rotation(a));
        }
    }
    out
}

/// Criterion 5 — symbolic tensor decomposition against numeric character
/// inner products for all m ≤ 12, gcd(a, m) = 1, 0 ≤ b < m, at 1e-9.
#[test]
fn acceptance_5_representation_decomposition() {
    const TOL: f64 = 1e-9;
    criterion(5, "representation decomposition", Duration::from_secs(5), || {
        for m in 1u32..=12 {
            for a in 1..=(m as i64) {
                if a.gcd(&(m as i64)) != 1 {
                    continue;
                }
                for b in 0..(m as i64) {
                    let symbolic: RepMultiset =
                        decompose_tensor(a, b, m).map_err(|e| e.to_string())?;
                    for k in 0..m {
                        let gap = (numeric_character(a, b, m, k) - symbolic.character(k)).abs();
                        if gap > TOL {
                            return Err(format!(
                                "(a={a}, b={b}, m={m}) character gap {gap} at element {k}"
                            ));
                        }
                    }
                    for irrep in all_irreps(m) {
                        // real-character inner products; rotations have
                        // squared norm 2
                        let mut num = 0.0f64;
                        let mut norm = 0.0f64;
                        for k in 0..m {
                            let chi_irrep = irrep_character(&irrep, m, k);
                            num += numeric_character(a, b, m, k) * chi_irrep;
                            norm += chi_irrep * chi_irrep;
                        }
                        let multiplicity = num / norm;
                        let expected = symbolic.count(&irrep) as f64;
                        if (multiplicity - expected).abs() > TOL {
                            return Err(format!(
                                "(a={a}, b={b}, m={m}) {irrep:?}: numeric multiplicity {multiplicity}, symbolic {expected}"
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    });
}

/// Criterion 6 — the five signature classes on the explicit local models
/// and example families, including the exact discriminant of the smooth
/// double-line family.
#[test]
fn acceptance_6_conic_classification() {
    criterion(6, "conic classification", Duration::from_secs(1), || {
        use ConicClass::*;
        let rational =
            |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        let fam = |entries: [&str; 9]| ConicFamily::parse(&entries).map_err(|e| e.to_string());

        // local normal forms
        let s1_bundle = fam(["1", "0", "0", "0", "1", "0", "0", "0", "-1"])?;
        let empty = fam(["1", "0", "0", "0", "1", "0", "0", "0", "1"])?;
        let collapsed = fam(["1", "0", "0", "0", "1", "0", "0", "0", "t"])?;
        let blown_up = fam(["1", "0", "0", "0", "-1", "0", "0", "0", "t"])?;
        // example families over the (s,t)-plane
        let smooth_total = fam(["s", "t", "0", "t", "-s", "0", "0", "0", "1"])?;
        let two_axes = fam(["s", "0", "0", "0", "t", "0", "0", "0", "1"])?;
        let curve_family = fam(["s", "0", "0", "0", "t^2-s^2", "0", "0", "0", "1"])?;
        let no_blowup_family = fam(["s^2", "t", "0", "t", "s^2", "0", "0", "0", "1"])?;

        let disc = discriminant_polynomial(&smooth_total);
        let expected = parse_polynomial("-s^2-t^2", &["s", "t"]).map_err(|e| e.to_string())?;
        if disc != expected {
            return Err(format!("discriminant is {disc}, expected -s^2 - t^2"));
        }

        let cases: Vec<(&str, &ConicFamily, (i64, i64, i64, i64), ConicClass)> = vec![
            ("S1-bundle model", &s1_bundle, (0, 1, 0, 1), SmoothWithRealPoints),
            ("empty model", &empty, (0, 1, 0, 1), SmoothEmpty),
            ("collapsed model, t < 0", &collapsed, (0, 1, -1, 1), SmoothWithRealPoints),
            ("collapsed model, t > 0", &collapsed, (0, 1, 1, 1), SmoothEmpty),
            ("collapsed model, boundary", &collapsed, (0, 1, 0, 1), TwoConjugateLines),
            ("blown-up model, t != 0", &blown_up, (0, 1, 1, 1), SmoothWithRealPoints),
            ("blown-up model, curve", &blown_up, (0, 1, 0, 1), TwoRealLines),
            ("smooth total space, generic", &smooth_total, (1, 1, 0, 1), SmoothWithRealPoints),
            ("smooth total space, generic 2", &smooth_total, (1, 2, -1, 3), SmoothWithRealPoints),
            ("smooth total space, origin", &smooth_total, (0, 1, 0, 1), DoubleLine),
            ("two-axes, positive quadrant", &two_axes, (1, 1, 1, 1), SmoothEmpty),
            ("two-axes, mixed quadrant", &two_axes, (-1, 1, 1, 1), SmoothWithRealPoints),
            ("two-axes, negative quadrant", &two_axes, (-1, 1, -1, 1), SmoothWithRealPoints),
            ("two-axes, collapsed axis", &two_axes, (1, 1, 0, 1), TwoConjugateLines),
            ("two-axes, blown-up axis", &two_axes, (-1, 1, 0, 1), TwoRealLines),
            ("two-axes, origin", &two_axes, (0, 1, 0, 1), DoubleLine),
            ("curve family, empty zone", &curve_family, (1, 1, 2, 1), SmoothEmpty),
            ("curve family, bundle zone", &curve_family, (-1, 1, 0, 1), SmoothWithRealPoints),
            ("curve family, collapsed curve", &curve_family, (1, 1, 1, 1), TwoConjugateLines),
            ("curve family, blown-up curve", &curve_family, (-1, 1, 1, 1), TwoRealLines),
            ("no-blowup family, inside", &no_blowup_family, (0, 1, 1, 1), SmoothWithRealPoints),
            ("no-blowup family, outside", &no_blowup_family, (1, 1, 0, 1), SmoothEmpty),
            ("no-blowup family, boundary", &no_blowup_family, (1, 1, 1, 1), TwoConjugateLines),
            ("no-blowup family, origin", &no_blowup_family, (0, 1, 0, 1), DoubleLine),
        ];
        let mut seen = std::collections::BTreeSet::new();
        for (name, family, (sn, sd, tn, td), expected) in cases {
            let got = classify_family_over_point(family, &rational(sn, sd), &rational(tn, td))
                .map_err(|e| format!("{name}: {e}"))?;
            if got != expected {
                return Err(format!("{name}: got {got:?}, expected {expected:?}"));
            }
            seen.insert(format!("{got:?}"));
        }
        if seen.len() != 5 {
            return Err(format!(
                "expected all five signature classes to appear, saw {seen:?}"
            ));
        }
        Ok(())
    });
}

/// Criterion 7 — the singular-point budget and surface-shape constraints.
#[test]
fn acceptance_7_constraint_validator() {
    criterion(7, "constraint validator", Duration::from_secs(1), || {
        let point = |m: u32| SingularPoint {
            m,
            separating: false,
        };
        let seven = SurfaceComponentDescriptor {
            surface: BaseSurface::sphere(),
            rational_over_c: true,
            points: (0..7).map(|_| point(3)).collect(),
        };
        let v = validate_surface(&seven);
        if !v.iter().any(|v| v.rule == "singular-point-budget") {
            return Err("7 A+ points on a rational component were not flagged".into());
        }

        let genus2 = SurfaceComponentDescriptor {
            surface: BaseSurface::new(true, 2, 0).map_err(|e| e.to_string())?,
            rational_over_c: true,
            points: vec![],
        };
        let v = validate_surface(&genus2);
        if !v.iter().any(|v| v.rule == "surface-type") {
            return Err("an orientable genus-2 rational component was not flagged".into());
        }

        let ten_a1 = SurfaceComponentDescriptor {
            surface: BaseSurface::sphere(),
            rational_over_c: true,
            points: (0..10).map(|_| point(2)).collect(),
        };
        if !validate_surface(&ten_a1).is_empty() {
            return Err("10 nonseparating A1+ points were wrongly flagged".into());
        }
        Ok(())
    });
}

/// Criterion 8 — the equivariant conic normal-form case split.
#[test]
fn acceptance_8_equivariant_normal_forms() {
    criterion(8, "equivariant normal forms", Duration::from_secs(1), || {
        match classify_equivariant_conic(5, 1, 3, CentralFiberShape::SmoothRealPoints)
            .map_err(|e| e.to_string())?
        {
            EquivariantConicCase::Smooth { .. } => {}
            other => return Err(format!("(m=5, a=1, b=3, smooth): got {other:?}")),
        }
        match classify_equivariant_conic(3, 1, 2, CentralFiberShape::DoubleLine)
            .map_err(|e| e.to_string())?
        {
            EquivariantConicCase::DoubleLine { .. } => {}
            other => return Err(format!("(m=3, a=1, b=2, double line): got {other:?}")),
        }
        match classify_equivariant_conic(4, 1, 1, CentralFiberShape::DoubleLine)
            .map_err(|e| e.to_string())?
        {
            EquivariantConicCase::Impossible { .. } => {}
            other => {
                return Err(format!(
                    "(m=4, a=1, b=1, double line) must be impossible, got {other:?}"
                ))
            }
        }
        Ok(())
    });
}
