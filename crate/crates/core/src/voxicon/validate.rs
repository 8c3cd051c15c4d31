//! Voxeme invariant checking. Violations are diagnostics, not errors: the
//! loader accepts any well-formed document and the validator reports one
//! diagnostic per broken invariant.

use crate::geom::Aabb;
use crate::scalar::Real;

use super::types::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagnosticCode {
    NonpositiveDimensions,
    MissingDimensions,
    MissingHead,
    MissingHabitats,
    MissingProgramBody,
    MissingAttributeSpec,
    TopBottomNotOpposite,
    SymmetryDuplicate,
    CavityNotInsideBounds,
    CavityOpeningMismatch,
    HabitatToleranceOutOfRange,
    UnboundSubeventVariable,
    TransitionLacksTest,
}

#[derive(Clone, Debug)]
pub struct Diagnostic {
    pub code: DiagnosticCode,
    pub message: String,
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}: {}", self.code, self.message)
    }
}

/// Subevent call names the compiler expands as composite macros; a
/// transition whose body is such a call terminates through the expansion.
pub const COMPOSITE_MACROS: [&str; 1] = ["stack"];

/// Check every type invariant of a voxeme; empty means all hold.
pub fn validate_voxeme<R: Real>(v: &Voxeme<R>) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let mut push = |code: DiagnosticCode, message: String| out.push(Diagnostic { code, message });

    match v.kind {
        VoxemeKind::Object => {
            if v.head.is_none() {
                push(
                    DiagnosticCode::MissingHead,
                    format!("object voxeme `{}` has no geometry head", v.lemma),
                );
            }
            if v.habitats.is_empty() {
                push(
                    DiagnosticCode::MissingHabitats,
                    format!("object voxeme `{}` has no habitats", v.lemma),
                );
            }
            match v.default_dimensions {
                None => push(
                    DiagnosticCode::MissingDimensions,
                    format!("object voxeme `{}` has no default dimensions", v.lemma),
                ),
                Some(d) => {
                    if d.min_component() <= R::zero() {
                        push(
                            DiagnosticCode::NonpositiveDimensions,
                            format!(
                                "`{}` dimensions must be strictly positive, got {} {} {}",
                                v.lemma, d.x, d.y, d.z
                            ),
                        );
                    }
                }
            }
        }
        VoxemeKind::Program => {
            if v.program.is_none() {
                push(
                    DiagnosticCode::MissingProgramBody,
                    format!("program voxeme `{}` has no program body", v.lemma),
                );
            }
        }
        VoxemeKind::Attribute => {
            if v.attribute.as_ref().map_or(true, |a| a.scale.is_empty()) {
                push(
                    DiagnosticCode::MissingAttributeSpec,
                    format!("attribute voxeme `{}` has no sortal scale", v.lemma),
                );
            }
        }
        VoxemeKind::Relation => {}
    }

    if let Some(head) = &v.head {
        if let (Some(top), Some(bottom)) = (
            head.intrinsic_axes.get(&IntrinsicSide::Top),
            head.intrinsic_axes.get(&IntrinsicSide::Bottom),
        ) {
            if *bottom != top.opposite() {
                push(
                    DiagnosticCode::TopBottomNotOpposite,
                    format!(
                        "`{}`: top {} and bottom {} are not opposite axes",
                        v.lemma,
                        top.name(),
                        bottom.name()
                    ),
                );
            }
        }
    }

    if has_duplicates(&v.symmetry.reflectional) || has_duplicates(&v.symmetry.rotational) {
        push(
            DiagnosticCode::SymmetryDuplicate,
            format!("`{}`: symmetry sets contain duplicates", v.lemma),
        );
    }

    if let Some(c) = &v.concavity {
        if let Some(d) = v.default_dimensions {
            let hull = Aabb::from_center_half(crate::geom::Vec3::zero(), d * R::of(0.5));
            if !cavity_placement_ok(&hull, &c.cavity_extent, c.opens_along) {
                push(
                    DiagnosticCode::CavityNotInsideBounds,
                    format!(
                        "`{}`: cavity must stay strictly inside the hull except \
                         on the face it opens through",
                        v.lemma
                    ),
                );
            }
        }
        if !v.symmetry.rotational.is_empty() && !v.symmetry.rotational_about(c.opens_along.axis) {
            push(
                DiagnosticCode::CavityOpeningMismatch,
                format!(
                    "`{}`: concavity opens along {} but the rotational symmetry \
                     axes do not include it",
                    v.lemma,
                    c.opens_along.name()
                ),
            );
        }
    }

    for h in &v.habitats {
        let tol = match &h.orientation {
            OrientationConstraint::Any => continue,
            OrientationConstraint::Upright { tolerance_deg, .. } => *tolerance_deg,
            OrientationConstraint::Horizontal { tolerance_deg, .. } => *tolerance_deg,
        };
        if tol <= R::zero() || tol >= R::of(90.0) {
            push(
                DiagnosticCode::HabitatToleranceOutOfRange,
                format!(
                    "`{}` habitat `{}`: tolerance must lie in (0, 90) degrees, got {tol}",
                    v.lemma, h.id
                ),
            );
        }
    }

    if let Some(p) = &v.program {
        let mut bound: Vec<&str> = p.args.iter().map(|a| a.name.as_str()).collect();
        bound.extend(p.params.iter().map(|d| d.name.as_str()));
        let mut atoms = Vec::new();
        for s in &p.subevents {
            s.atoms(&mut atoms);
        }
        for atom in atoms {
            if !bound.contains(&atom) {
                push(
                    DiagnosticCode::UnboundSubeventVariable,
                    format!(
                        "`{}`: subevent variable `{atom}` is not bound by any \
                         argument slot or parameter",
                        v.lemma
                    ),
                );
            }
        }
        if p.kind == ProgramKind::Transition && !transition_terminates(p) {
            push(
                DiagnosticCode::TransitionLacksTest,
                format!(
                    "`{}`: transition program has no terminating test subevent",
                    v.lemma
                ),
            );
        }
    }

    out
}

/// Validate every entry; only lemmas with diagnostics are reported.
pub fn validate_voxicon<R: Real>(voxicon: &Voxicon<R>) -> Vec<(String, Vec<Diagnostic>)> {
    voxicon
        .entries
        .values()
        .filter_map(|v| {
            let diags = validate_voxeme(v);
            if diags.is_empty() {
                None
            } else {
                Some((v.lemma.clone(), diags))
            }
        })
        .collect()
}

fn has_duplicates<T: PartialEq>(v: &[T]) -> bool {
    v.iter()
        .enumerate()
        .any(|(i, a)| v[i + 1..].iter().any(|b| a == b))
}

fn cavity_placement_ok<R: Real>(hull: &Aabb<R>, cavity: &Aabb<R>, opens: SignedAxis) -> bool {
    if cavity.is_degenerate() {
        return false;
    }
    let tiny = R::of(1e-9);
    for axis in 0..3 {
        for (is_max_face, cav, hul) in [
            (false, cavity.min.component(axis), hull.min.component(axis)),
            (true, cavity.max.component(axis), hull.max.component(axis)),
        ] {
            let is_opening_face = axis == opens.axis && is_max_face != opens.negative;
            if is_opening_face {
                // Coterminous with the hull face it opens through.
                if (cav - hul).abs() > tiny {
                    return false;
                }
            } else {
                let strictly_inside = if is_max_face {
                    cav < hul - tiny
                } else {
                    cav > hul + tiny
                };
                if !strictly_inside {
                    return false;
                }
            }
        }
    }
    true
}

fn transition_terminates<R: Real>(p: &ProgramBody<R>) -> bool {
    p.subevents.iter().any(|s| match s {
        SubeventExpr::Guarded { .. } => true,
        SubeventExpr::Call { name, .. } => COMPOSITE_MACROS.contains(&name.as_str()),
        SubeventExpr::Atom(_) => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Vec3;

    fn object(lemma: &str) -> Voxeme<f64> {
        let mut v = Voxeme::bare(lemma, VoxemeKind::Object);
        v.head = Some(GeometryHead {
            primitive: Primitive::Box,
            intrinsic_axes: Default::default(),
        });
        v.default_dimensions = Some(Vec3::of(0.1, 0.1, 0.1));
        v.habitats.push(Habitat {
            id: "h".into(),
            orientation: OrientationConstraint::Any,
            support: SupportConstraint::MustRestOnSupport,
        });
        v
    }

    fn codes(v: &Voxeme<f64>) -> Vec<DiagnosticCode> {
        validate_voxeme(v).into_iter().map(|d| d.code).collect()
    }

    #[test]
    fn valid_object_has_no_diagnostics() {
        assert!(codes(&object("ball")).is_empty());
    }

    #[test]
    fn zero_dimension_is_flagged() {
        let mut v = object("ball");
        v.default_dimensions = Some(Vec3::of(0.0, 1.0, 1.0));
        assert_eq!(codes(&v), vec![DiagnosticCode::NonpositiveDimensions]);
    }

    #[test]
    fn object_without_habitats_is_flagged() {
        let mut v = object("ball");
        v.habitats.clear();
        assert_eq!(codes(&v), vec![DiagnosticCode::MissingHabitats]);
    }

    #[test]
    fn rotationally_symmetric_cavity_must_open_along_symmetry_axis() {
        // A Y-symmetric cup whose cavity opens +y is fine; +x is flagged.
        let mut cup = object("cup");
        cup.default_dimensions = Some(Vec3::of(0.12, 0.12, 0.12));
        cup.symmetry.rotational = vec![1];
        cup.concavity = Some(ConcavitySpec {
            opens_along: SignedAxis::POS_Y,
            cavity_extent: Aabb::new(Vec3::of(-0.05, -0.05, -0.05), Vec3::of(0.05, 0.06, 0.05)),
        });
        assert!(codes(&cup).is_empty());
        let c = cup.concavity.as_mut().unwrap();
        c.opens_along = SignedAxis::parse("+x").unwrap();
        assert!(codes(&cup).contains(&DiagnosticCode::CavityOpeningMismatch));
    }

    // One violating fixture per remaining invariant: the validator is
    // exhaustive over the documented diagnostic codes.
    #[test]
    fn every_diagnostic_code_has_a_violating_fixture() {
        let mut fixtures: Vec<(DiagnosticCode, Voxeme<f64>)> = Vec::new();

        let mut v = object("a");
        v.default_dimensions = Some(Vec3::of(-1.0, 1.0, 1.0));
        fixtures.push((DiagnosticCode::NonpositiveDimensions, v));

        let mut v = object("b");
        v.default_dimensions = None;
        fixtures.push((DiagnosticCode::MissingDimensions, v));

        let mut v = object("c");
        v.head = None;
        fixtures.push((DiagnosticCode::MissingHead, v));

        let mut v = object("d");
        v.habitats.clear();
        fixtures.push((DiagnosticCode::MissingHabitats, v));

        let v = Voxeme::bare("e", VoxemeKind::Program);
        fixtures.push((DiagnosticCode::MissingProgramBody, v));

        let v = Voxeme::bare("f", VoxemeKind::Attribute);
        fixtures.push((DiagnosticCode::MissingAttributeSpec, v));

        let mut v = object("g");
        let head = v.head.as_mut().unwrap();
        head.intrinsic_axes
            .insert(IntrinsicSide::Top, SignedAxis::POS_Y);
        head.intrinsic_axes
            .insert(IntrinsicSide::Bottom, SignedAxis::POS_Y);
        fixtures.push((DiagnosticCode::TopBottomNotOpposite, v));

        let mut v = object("h");
        v.symmetry.reflectional = vec![SymPlane::Xy, SymPlane::Xy];
        fixtures.push((DiagnosticCode::SymmetryDuplicate, v));

        let mut v = object("i");
        v.concavity = Some(ConcavitySpec {
            opens_along: SignedAxis::POS_Y,
            // Pokes out through the -x face.
            cavity_extent: Aabb::new(Vec3::of(-0.2, -0.04, -0.04), Vec3::of(0.04, 0.05, 0.04)),
        });
        fixtures.push((DiagnosticCode::CavityNotInsideBounds, v));

        let mut v = object("j");
        v.symmetry.rotational = vec![1];
        v.concavity = Some(ConcavitySpec {
            opens_along: SignedAxis::parse("+x").unwrap(),
            cavity_extent: Aabb::new(Vec3::of(-0.04, -0.04, -0.04), Vec3::of(0.05, 0.04, 0.04)),
        });
        fixtures.push((DiagnosticCode::CavityOpeningMismatch, v));

        let mut v = object("k");
        v.habitats[0].orientation = OrientationConstraint::Upright {
            axis: SignedAxis::POS_Y,
            tolerance_deg: 95.0,
        };
        fixtures.push((DiagnosticCode::HabitatToleranceOutOfRange, v));

        let mut v = Voxeme::bare("l", VoxemeKind::Program);
        v.program = Some(ProgramBody {
            kind: ProgramKind::Process,
            args: vec![],
            params: vec![],
            subevents: vec![SubeventExpr::Atom("ghost".into())],
        });
        fixtures.push((DiagnosticCode::UnboundSubeventVariable, v));

        let mut v = Voxeme::bare("m", VoxemeKind::Program);
        v.program = Some(ProgramBody {
            kind: ProgramKind::Transition,
            args: vec![ArgSlot {
                name: "obj1".into(),
                ty: ArgType::Object,
            }],
            subevents: vec![SubeventExpr::Call {
                name: "move".into(),
                args: vec![SubeventExpr::Atom("obj1".into())],
            }],
            params: vec![],
        });
        fixtures.push((DiagnosticCode::TransitionLacksTest, v));

        for (code, fixture) in fixtures {
            let found = codes(&fixture);
            assert!(
                found.contains(&code),
                "expected {code:?} for fixture `{}`, got {found:?}",
                fixture.lemma
            );
        }
    }
}
