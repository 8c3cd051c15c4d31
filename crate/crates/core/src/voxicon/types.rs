//! The voxeme data model: semantic entries for objects, event programs,
//! attributes, and relations.

use std::collections::BTreeMap;

use crate::geom::{Aabb, Vec3};
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VoxemeKind {
    Object,
    Program,
    Attribute,
    Relation,
}

impl VoxemeKind {
    pub fn name(self) -> &'static str {
        match self {
            VoxemeKind::Object => "object",
            VoxemeKind::Program => "program",
            VoxemeKind::Attribute => "attribute",
            VoxemeKind::Relation => "relation",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Primitive {
    Box,
    CylinderApprox,
    Sheet,
}

impl Primitive {
    pub fn name(self) -> &'static str {
        match self {
            Primitive::Box => "box",
            Primitive::CylinderApprox => "cylinder-approx",
            Primitive::Sheet => "sheet",
        }
    }
}

/// A signed unit axis of the object frame (`+y`, `-z`, ...).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SignedAxis {
    /// 0 = x, 1 = y, 2 = z
    pub axis: usize,
    pub negative: bool,
}

impl SignedAxis {
    pub const POS_Y: SignedAxis = SignedAxis {
        axis: 1,
        negative: false,
    };

    pub fn to_vec<R: Real>(self) -> Vec3<R> {
        let v = match self.axis {
            0 => Vec3::unit_x(),
            1 => Vec3::unit_y(),
            _ => Vec3::unit_z(),
        };
        if self.negative {
            -v
        } else {
            v
        }
    }

    pub fn opposite(self) -> Self {
        Self {
            axis: self.axis,
            negative: !self.negative,
        }
    }

    pub fn name(self) -> &'static str {
        match (self.axis, self.negative) {
            (0, false) => "+x",
            (0, true) => "-x",
            (1, false) => "+y",
            (1, true) => "-y",
            (2, false) => "+z",
            _ => "-z",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        let (negative, axis) = match s.split_at_checked(1)? {
            ("+", rest) => (false, rest),
            ("-", rest) => (true, rest),
            _ => return None,
        };
        let axis = match axis {
            "x" => 0,
            "y" => 1,
            "z" => 2,
            _ => return None,
        };
        Some(Self { axis, negative })
    }
}

/// Which intrinsic side an axis entry names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum IntrinsicSide {
    Top,
    Bottom,
    Front,
    Side,
}

impl IntrinsicSide {
    pub fn name(self) -> &'static str {
        match self {
            IntrinsicSide::Top => "top",
            IntrinsicSide::Bottom => "bottom",
            IntrinsicSide::Front => "front",
            IntrinsicSide::Side => "side",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "top" => Some(IntrinsicSide::Top),
            "bottom" => Some(IntrinsicSide::Bottom),
            "front" => Some(IntrinsicSide::Front),
            "side" => Some(IntrinsicSide::Side),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeometryHead {
    pub primitive: Primitive,
    pub intrinsic_axes: BTreeMap<IntrinsicSide, SignedAxis>,
}

impl GeometryHead {
    pub fn top_axis(&self) -> SignedAxis {
        self.intrinsic_axes
            .get(&IntrinsicSide::Top)
            .copied()
            .unwrap_or(SignedAxis::POS_Y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SymPlane {
    Xy,
    Yz,
    Xz,
}

impl SymPlane {
    pub fn name(self) -> &'static str {
        match self {
            SymPlane::Xy => "xy",
            SymPlane::Yz => "yz",
            SymPlane::Xz => "xz",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "xy" => Some(SymPlane::Xy),
            "yz" => Some(SymPlane::Yz),
            "xz" => Some(SymPlane::Xz),
            _ => None,
        }
    }
}

/// Reflectional planes and rotational axes are kept as written so that the
/// validator can report duplicates instead of silently deduplicating.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SymmetrySpec {
    pub reflectional: Vec<SymPlane>,
    /// Object-frame axis indices (0 = x, 1 = y, 2 = z).
    pub rotational: Vec<usize>,
}

impl SymmetrySpec {
    pub fn rotational_about(&self, axis: usize) -> bool {
        self.rotational.contains(&axis)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConcavitySpec<R> {
    pub opens_along: SignedAxis,
    /// Cavity box in the object frame, meters (before instance scaling).
    pub cavity_extent: Aabb<R>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum OrientationConstraint<R> {
    /// Any orientation is habitable.
    Any,
    /// The given object-frame axis must point along world up within the
    /// tolerance.
    Upright {
        axis: SignedAxis,
        tolerance_deg: R,
    },
    /// The given object-frame axis must lie in the horizontal plane within
    /// the tolerance.
    Horizontal {
        axis: SignedAxis,
        tolerance_deg: R,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SupportConstraint {
    MustRestOnSupport,
    None,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Habitat<R> {
    pub id: String,
    pub orientation: OrientationConstraint<R>,
    pub support: SupportConstraint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AffordanceFlavor {
    Gibsonian,
    Telic,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Affordance {
    pub id: String,
    pub flavor: AffordanceFlavor,
    pub behavior: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProgramKind {
    State,
    Process,
    Transition,
    Assignment,
    Test,
}

impl ProgramKind {
    pub fn name(self) -> &'static str {
        match self {
            ProgramKind::State => "state",
            ProgramKind::Process => "process",
            ProgramKind::Transition => "transition",
            ProgramKind::Assignment => "assignment",
            ProgramKind::Test => "test",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "state" => Some(ProgramKind::State),
            "process" => Some(ProgramKind::Process),
            "transition" => Some(ProgramKind::Transition),
            "assignment" => Some(ProgramKind::Assignment),
            "test" => Some(ProgramKind::Test),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ArgType {
    Agent,
    Object,
    ObjectList,
    /// Relational location slot; the named relation lemma is the canonical
    /// relation and must resolve in the voxicon.
    Relation { default: String },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ArgSlot {
    pub name: String,
    pub ty: ArgType,
}

/// Subevent expression as written in a program entry.
#[derive(Clone, Debug, PartialEq)]
pub enum SubeventExpr {
    Atom(String),
    Call {
        name: String,
        args: Vec<SubeventExpr>,
    },
    /// `guard -> body`: the body fires once the guard condition holds.
    Guarded {
        guard: Box<SubeventExpr>,
        body: Box<SubeventExpr>,
    },
}

impl SubeventExpr {
    /// All leaf variable names mentioned by the expression.
    pub fn atoms<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            SubeventExpr::Atom(s) => out.push(s),
            SubeventExpr::Call { args, .. } => {
                for a in args {
                    a.atoms(out);
                }
            }
            SubeventExpr::Guarded { guard, body } => {
                guard.atoms(out);
                body.atoms(out);
            }
        }
    }

    pub fn render(&self) -> String {
        match self {
            SubeventExpr::Atom(s) => s.clone(),
            SubeventExpr::Call { name, args } => {
                if args.is_empty() {
                    name.clone()
                } else {
                    let inner: Vec<String> = args.iter().map(|a| a.render()).collect();
                    format!("{}({})", name, inner.join(", "))
                }
            }
            SubeventExpr::Guarded { guard, body } => {
                format!("{} -> {}", guard.render(), body.render())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ParamDomain<R> {
    /// Planar angle in degrees, [0, 360).
    Angle,
    /// Length in meters, [min, max].
    Length { min: R, max: R },
    /// 2-D coordinates on a goal surface patch.
    SurfacePoint,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParamDecl<R> {
    pub name: String,
    pub domain: ParamDomain<R>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProgramBody<R> {
    pub kind: ProgramKind,
    pub args: Vec<ArgSlot>,
    pub params: Vec<ParamDecl<R>>,
    pub subevents: Vec<SubeventExpr>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AttributeOrder {
    Min,
    Max,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AttributeSpec {
    /// Name of the sortal scale the adjective orders by.
    pub scale: String,
    pub order: AttributeOrder,
}

/// One lexicon entry.
#[derive(Clone, Debug, PartialEq)]
pub struct Voxeme<R> {
    pub lemma: String,
    pub kind: VoxemeKind,
    pub head: Option<GeometryHead>,
    pub symmetry: SymmetrySpec,
    pub concavity: Option<ConcavitySpec<R>>,
    pub habitats: Vec<Habitat<R>>,
    pub affordances: Vec<Affordance>,
    /// Unscaled object extents in meters, objects only.
    pub default_dimensions: Option<Vec3<R>>,
    pub program: Option<ProgramBody<R>>,
    pub attribute: Option<AttributeSpec>,
}

impl<R: Real> Voxeme<R> {
    pub fn bare(lemma: impl Into<String>, kind: VoxemeKind) -> Self {
        Self {
            lemma: lemma.into(),
            kind,
            head: None,
            symmetry: SymmetrySpec::default(),
            concavity: None,
            habitats: Vec::new(),
            affordances: Vec::new(),
            default_dimensions: None,
            program: None,
            attribute: None,
        }
    }

    /// True when some affordance carries the given behavior label.
    pub fn affords(&self, behavior: &str) -> bool {
        self.affordances.iter().any(|a| a.behavior == behavior)
    }
}

/// The lexicon: lemma -> voxeme, immutable once loaded.
#[derive(Clone, Debug, PartialEq)]
pub struct Voxicon<R> {
    pub entries: BTreeMap<String, Voxeme<R>>,
}

impl<R> Default for Voxicon<R> {
    fn default() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }
}

impl<R: Real> Voxicon<R> {
    pub fn lookup(&self, lemma: &str) -> Option<&Voxeme<R>> {
        self.entries.get(lemma)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn objects(&self) -> impl Iterator<Item = &Voxeme<R>> {
        self.entries
            .values()
            .filter(|v| v.kind == VoxemeKind::Object)
    }

    pub fn programs(&self) -> impl Iterator<Item = &Voxeme<R>> {
        self.entries
            .values()
            .filter(|v| v.kind == VoxemeKind::Program)
    }

    pub fn attributes(&self) -> impl Iterator<Item = &Voxeme<R>> {
        self.entries
            .values()
            .filter(|v| v.kind == VoxemeKind::Attribute)
    }
}
