//! Assembly of fibration descriptors into 3-manifold types.
//!
//! A [`FibrationDescriptor`] records, per connected component of the base
//! surface, the local models of a circle fibration: Seifert quotient
//! points `(m, b)`, boundary curves of collapsed ends, and blown-up curves
//! (which force Klein-bottle fillings and a nonorientable total space).
//! [`assemble`] converts each component into a [`SurgeryProblem`], names
//! the resulting manifold, and validates the constraints a rational base
//! surface imposes on its singular points.

use serde::{Deserialize, Serialize};

use crate::conics::DuValType;
use crate::lens::mod_inverse;
use crate::surgery::{decompose, BaseSurface, ManifoldType, SurgeryProblem};
use crate::{Error, Result};

/// A singular point of type `u² + v² − w^m` on a component of the base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularPoint {
    /// Exponent `m ≥ 2` of the normal form.
    pub m: u32,
    /// Whether the two local sheets (even `m` only) lie on different
    /// global components.
    pub separating: bool,
}

impl SingularPoint {
    pub fn duval(&self) -> DuValType {
        DuValType::APlus { n: self.m - 1 }
    }

    /// Points of type `A₁⁺` (`m = 2`) that are nonseparating are exempt
    /// from the singular-point budget.
    pub fn counts_against_budget(&self) -> bool {
        !(self.m == 2 && !self.separating)
    }
}

/// A connected component of the singular base surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceComponentDescriptor {
    pub surface: BaseSurface,
    pub rational_over_c: bool,
    pub points: Vec<SingularPoint>,
}

/// A structured diagnostic; `rule` identifies the violated constraint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub rule: String,
    pub message: String,
}

impl Violation {
    fn new(rule: &str, message: String) -> Self {
        Violation {
            rule: rule.to_string(),
            message,
        }
    }
}

/// Check the constraints on a component of a rational singular surface:
///
/// 1. an orientable component must be a sphere or a torus,
/// 2. at most 6 singular points besides nonseparating `A₁⁺` points,
/// 3. the separating flag is meaningful only for even exponents.
pub fn validate_surface(d: &SurfaceComponentDescriptor) -> Vec<Violation> {
    let mut out = Vec::new();
    if d.surface.boundary_count() != 0 {
        out.push(Violation::new(
            "closed-surface",
            "component surfaces must be closed".to_string(),
        ));
    }
    if d.rational_over_c && d.surface.orientable() && d.surface.genus() > 1 {
        out.push(Violation::new(
            "surface-type",
            format!(
                "an orientable component of a rational singular surface must be S^2 or T^2, got genus {}",
                d.surface.genus()
            ),
        ));
    }
    if d.rational_over_c {
        let budget = d.points.iter().filter(|p| p.counts_against_budget()).count();
        if budget > 6 {
            out.push(Violation::new(
                "singular-point-budget",
                format!(
                    "component carries {budget} singular points beyond nonseparating A1+ points; at most 6 are possible"
                ),
            ));
        }
    }
    for (i, p) in d.points.iter().enumerate() {
        if p.m < 2 {
            out.push(Violation::new(
                "exponent-range",
                format!("point {i} has exponent {} < 2", p.m),
            ));
        }
        if p.separating && p.m % 2 == 1 {
            out.push(Violation::new(
                "separating-parity",
                format!(
                    "point {i} is marked separating but has odd exponent {}; only u^2+v^2-w^(2k) has two local sheets",
                    p.m
                ),
            ));
        }
    }
    out
}

/// A Seifert quotient point `(m, b)` on a component, with markup recording
/// how the component's region sits against the two local sheets (even `m`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientPoint {
    pub m: u32,
    pub b: i64,
    #[serde(default)]
    pub separating: bool,
    #[serde(default)]
    pub covers_both_sheets: bool,
}

/// One base component with its local fibration data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibrationComponent {
    pub surface: BaseSurface,
    pub rational_over_c: bool,
    #[serde(default)]
    pub collapsed_end_curves: u32,
    #[serde(default)]
    pub blown_up_curves: u32,
    #[serde(default)]
    pub quotient_points: Vec<QuotientPoint>,
}

/// The full fibration picture handed to [`assemble`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibrationDescriptor {
    pub components: Vec<FibrationComponent>,
    pub total_space_orientable: bool,
    /// Connected summands produced upstream of the fibration itself.
    #[serde(default)]
    pub rp3_prefix: u32,
    #[serde(default)]
    pub s1xs2_prefix: u32,
}

/// Result of assembling one component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentAssembly {
    pub manifold: ManifoldType,
    pub violations: Vec<Violation>,
}

/// Assembly of a whole descriptor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssemblyReport {
    pub rp3_prefix: u32,
    pub s1xs2_prefix: u32,
    pub components: Vec<ComponentAssembly>,
    pub notes: Vec<String>,
}

impl AssemblyReport {
    pub fn has_violations(&self) -> bool {
        self.components.iter().any(|c| !c.violations.is_empty())
    }
}

/// Convert every component into a surgery problem and name the result.
///
/// Quotient points `(m, b)` become solid-torus fillings of slope
/// `(b⁻¹ mod m, m)`; collapsed-end curves become `(1, 0)` fillings;
/// blown-up curves become Klein-bottle fillings. A rational component's
/// induced singular points are validated against the at-most-6 budget, and
/// even-exponent points are checked to sit over a single local sheet.
///
/// An orientable total space is incompatible with blown-up curves
/// (rejected), and its summands are reported untwisted.
pub fn assemble(f: &FibrationDescriptor) -> Result<AssemblyReport> {
    let mut components = Vec::with_capacity(f.components.len());
    for (idx, comp) in f.components.iter().enumerate() {
        if f.total_space_orientable && comp.blown_up_curves > 0 {
            return Err(Error::invalid(format!(
                "component {idx}: blown-up curves force a nonorientable total space"
            )));
        }
        if comp.surface.boundary_count() != 0 {
            return Err(Error::invalid(format!(
                "component {idx}: base surface must be closed"
            )));
        }
        let mut tori: Vec<(i64, i64)> = Vec::new();
        for q in &comp.quotient_points {
            if q.m < 2 {
                return Err(Error::invalid(format!(
                    "component {idx}: quotient point multiplicity {} < 2",
                    q.m
                )));
            }
            let b = q.b.rem_euclid(q.m as i64) as u64;
            let c = mod_inverse(b, q.m as u64)
                .ok_or(Error::NotCoprime(q.b, q.m as i64))?;
            tori.push((c as i64, q.m as i64));
        }
        for _ in 0..comp.collapsed_end_curves {
            tori.push((1, 0));
        }
        let boundary = tori.len() as u32 + comp.blown_up_curves;
        let base = BaseSurface::new(
            comp.surface.orientable(),
            comp.surface.genus(),
            boundary,
        )?;
        let problem = SurgeryProblem::new(base, &tori, comp.blown_up_curves)?;
        let mut manifold = decompose(&problem);

        if f.total_space_orientable {
            if let ManifoldType::ConnectedSum {
                lens,
                s1xs2_count,
                twisted_s1xs2_count,
            } = manifold
            {
                manifold = ManifoldType::ConnectedSum {
                    lens,
                    s1xs2_count: s1xs2_count + twisted_s1xs2_count,
                    twisted_s1xs2_count: 0,
                };
            }
        }

        let induced = SurfaceComponentDescriptor {
            surface: comp.surface,
            rational_over_c: comp.rational_over_c,
            points: comp
                .quotient_points
                .iter()
                .map(|q| SingularPoint {
                    m: q.m,
                    separating: q.separating,
                })
                .collect(),
        };
        let mut violations = validate_surface(&induced);
        violations.extend(sheet_violations(idx, comp));
        // A Seifert fibration covers its whole base component, so over a
        // rational base even the A1+ points count: at most 6 multiple
        // fibers are possible.
        if comp.rational_over_c {
            if let ManifoldType::SeifertFibered { fibers, .. } = &manifold {
                if fibers.len() > 6 {
                    violations.push(Violation::new(
                        "multiple-fiber-budget",
                        format!(
                            "component {idx}: Seifert fibration over a rational base with {} multiple fibers; at most 6 are possible",
                            fibers.len()
                        ),
                    ));
                }
            }
        }

        components.push(ComponentAssembly {
            manifold,
            violations,
        });
    }

    let mut notes = Vec::new();
    if !f.total_space_orientable {
        notes.push(
            "nonorientable total space: the summand list is reported without the graph of \
             Seifert pieces along incompressible tori"
                .to_string(),
        );
    }

    Ok(AssemblyReport {
        rp3_prefix: f.rp3_prefix,
        s1xs2_prefix: f.s1xs2_prefix,
        components,
        notes,
    })
}

fn sheet_violations(idx: usize, comp: &FibrationComponent) -> Vec<Violation> {
    let mut out = Vec::new();
    for (pi, q) in comp.quotient_points.iter().enumerate() {
        if q.m % 2 == 0 && q.covers_both_sheets {
            out.push(Violation::new(
                "sheet-coverage",
                format!(
                    "component {idx}, quotient point {pi} (m = {}): the fibration image may meet only one local sheet of an even-exponent singular point, but the region covers both",
                    q.m
                ),
            ));
        }
    }
    out
}

/// Check every even-exponent quotient point against the one-sheet rule.
pub fn over_one_component_check(f: &FibrationDescriptor) -> Vec<Violation> {
    f.components
        .iter()
        .enumerate()
        .flat_map(|(idx, comp)| sheet_violations(idx, comp))
        .collect()
}

/// Effect of a weighted `(1, m)`-blow-up on the real locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlowupTopology {
    /// Even `m`: a small perturbation is a homeomorphism.
    Homeomorphism,
    /// Odd `m`: connected sum with ℝP².
    ConnectSumRp2,
}

/// What a `(1, m)`-blow-up does to the real locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupEffect {
    pub effect: BlowupTopology,
    /// For `m ≥ 2` the blow-up creates a nonseparating singular point.
    pub creates_nonseparating_point: bool,
}

pub fn blowup_effect(m: u32) -> Result<BlowupEffect> {
    if m == 0 {
        return Err(Error::invalid("blow-up weight must be at least 1"));
    }
    Ok(BlowupEffect {
        effect: if m % 2 == 0 {
            BlowupTopology::Homeomorphism
        } else {
            BlowupTopology::ConnectSumRp2
        },
        creates_nonseparating_point: m >= 2,
    })
}
