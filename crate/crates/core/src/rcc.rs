//! RCC8 classification, converse, and composition over region approximations.
//!
//! The eight relations are jointly exhaustive and pairwise disjoint over
//! nonempty closed regions. Boundary contact is metric: surfaces within the
//! contact tolerance count as touching, which is what makes EC, TPP, and EQ
//! reachable for floating-point regions. A box region is classified as its
//! closed solid; carved cavities are a material detail that belongs to the
//! scene's contact queries, not to the connection carrier.
//!
//! Classification has two routes: exact interval arithmetic when both
//! regions are boxes sitting axis-aligned under their current poses, and a
//! shared-lattice voxel comparison for everything else.

use thiserror::Error;

use crate::geom::{Aabb, Vec3, VoxelGrid};
use crate::region::RegionApprox;
use crate::scalar::Real;

/// One of the eight RCC8 base relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rcc8 {
    Dc,
    Ec,
    Po,
    Tpp,
    Ntpp,
    Tppi,
    Ntppi,
    Eq,
}

pub const ALL_RELATIONS: [Rcc8; 8] = [
    Rcc8::Dc,
    Rcc8::Ec,
    Rcc8::Po,
    Rcc8::Tpp,
    Rcc8::Ntpp,
    Rcc8::Tppi,
    Rcc8::Ntppi,
    Rcc8::Eq,
];

impl Rcc8 {
    pub const fn index(self) -> usize {
        match self {
            Rcc8::Dc => 0,
            Rcc8::Ec => 1,
            Rcc8::Po => 2,
            Rcc8::Tpp => 3,
            Rcc8::Ntpp => 4,
            Rcc8::Tppi => 5,
            Rcc8::Ntppi => 6,
            Rcc8::Eq => 7,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Rcc8::Dc => "DC",
            Rcc8::Ec => "EC",
            Rcc8::Po => "PO",
            Rcc8::Tpp => "TPP",
            Rcc8::Ntpp => "NTPP",
            Rcc8::Tppi => "TPPi",
            Rcc8::Ntppi => "NTPPi",
            Rcc8::Eq => "EQ",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        ALL_RELATIONS.into_iter().find(|r| r.name() == s)
    }

    pub const fn converse(self) -> Self {
        match self {
            Rcc8::Tpp => Rcc8::Tppi,
            Rcc8::Tppi => Rcc8::Tpp,
            Rcc8::Ntpp => Rcc8::Ntppi,
            Rcc8::Ntppi => Rcc8::Ntpp,
            r => r,
        }
    }
}

impl std::fmt::Display for Rcc8 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Subset of the eight base relations, as produced by composition.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct RelationSet(u8);

impl RelationSet {
    pub const EMPTY: Self = Self(0);
    pub const FULL: Self = Self(0xff);

    pub const fn singleton(r: Rcc8) -> Self {
        Self(1 << r.index())
    }

    pub const fn of(rels: &[Rcc8]) -> Self {
        let mut bits = 0u8;
        let mut i = 0;
        while i < rels.len() {
            bits |= 1 << rels[i].index();
            i += 1;
        }
        Self(bits)
    }

    pub const fn contains(self, r: Rcc8) -> bool {
        self.0 & (1 << r.index()) != 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn union(self, o: Self) -> Self {
        Self(self.0 | o.0)
    }

    pub fn converse(self) -> Self {
        let mut out = Self::EMPTY;
        for r in self.iter() {
            out = out.union(Self::singleton(r.converse()));
        }
        out
    }

    pub fn iter(self) -> impl Iterator<Item = Rcc8> {
        ALL_RELATIONS.into_iter().filter(move |r| self.contains(*r))
    }

    fn fmt_braced(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for r in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

impl std::fmt::Debug for RelationSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.fmt_braced(f)
    }
}

impl std::fmt::Display for RelationSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.fmt_braced(f)
    }
}

#[derive(Debug, Error)]
pub enum RccError {
    #[error("cannot classify an empty region")]
    EmptyRegion,
}

/// Tolerances for classification.
#[derive(Clone, Copy, Debug)]
pub struct ClassifyParams<R> {
    /// Metric contact tolerance: surfaces within this distance touch.
    pub contact_tolerance: R,
    /// Lattice resolution for the voxel route.
    pub voxel_resolution: R,
    /// Cap on lattice size; the resolution is coarsened to respect it.
    pub max_voxels: usize,
}

impl<R: Real> ClassifyParams<R> {
    pub fn new(contact_tolerance: R, voxel_resolution: R) -> Self {
        Self {
            contact_tolerance,
            voxel_resolution,
            max_voxels: 2_000_000,
        }
    }
}

/// Classify the relation from `a` to `b`. Exactly one relation is returned
/// for any pair of nonempty regions.
pub fn classify<R: Real>(
    a: &RegionApprox<R>,
    b: &RegionApprox<R>,
    params: &ClassifyParams<R>,
) -> Result<Rcc8, RccError> {
    let flags = relation_flags(a, b, params)?;
    Ok(ALL_RELATIONS
        .into_iter()
        .find(|r| flags[r.index()])
        .expect("relation flags are jointly exhaustive"))
}

/// True when `classify(a, b) == r`.
pub fn holds<R: Real>(
    r: Rcc8,
    a: &RegionApprox<R>,
    b: &RegionApprox<R>,
    params: &ClassifyParams<R>,
) -> Result<bool, RccError> {
    Ok(classify(a, b, params)? == r)
}

/// The eight relation predicates evaluated independently; exactly one entry
/// is true for any pair of nonempty regions (indexed by [`Rcc8::index`]).
pub fn relation_flags<R: Real>(
    a: &RegionApprox<R>,
    b: &RegionApprox<R>,
    params: &ClassifyParams<R>,
) -> Result<[bool; 8], RccError> {
    if a.is_empty() || b.is_empty() {
        return Err(RccError::EmptyRegion);
    }
    let eps = params.contact_tolerance;
    // Fast disjointness path before any lattice work.
    if a.world_aabb().distance_to(&b.world_aabb()) > eps {
        let mut flags = [false; 8];
        flags[Rcc8::Dc.index()] = true;
        return Ok(flags);
    }
    let prim = match (a, b) {
        (RegionApprox::Box(oa), RegionApprox::Box(ob))
            if oa.is_axis_aligned(R::of(1e-6)) && ob.is_axis_aligned(R::of(1e-6)) =>
        {
            interval_primitives(&oa.world_aabb(), &ob.world_aabb(), eps)
        }
        _ => voxel_primitives(a, b, params),
    };
    Ok(flags_from_primitives(&prim))
}

/// The boolean primitives every relation is defined from.
struct Primitives {
    contact: bool,
    interiors_overlap: bool,
    a_in_b: bool,
    b_in_a: bool,
    a_strict_in_b: bool,
    b_strict_in_a: bool,
}

fn flags_from_primitives(p: &Primitives) -> [bool; 8] {
    let eq = p.a_in_b && p.b_in_a;
    let mut f = [false; 8];
    f[Rcc8::Eq.index()] = eq;
    f[Rcc8::Ntpp.index()] = !eq && p.a_in_b && p.a_strict_in_b;
    f[Rcc8::Tpp.index()] = !eq && p.a_in_b && !p.a_strict_in_b;
    f[Rcc8::Ntppi.index()] = !eq && !p.a_in_b && p.b_in_a && p.b_strict_in_a;
    f[Rcc8::Tppi.index()] = !eq && !p.a_in_b && p.b_in_a && !p.b_strict_in_a;
    let part = p.a_in_b || p.b_in_a;
    f[Rcc8::Po.index()] = p.interiors_overlap && !part;
    f[Rcc8::Ec.index()] = p.contact && !p.interiors_overlap && !part;
    f[Rcc8::Dc.index()] = !p.contact && !p.interiors_overlap && !part;
    f
}

fn interval_primitives<R: Real>(a: &Aabb<R>, b: &Aabb<R>, eps: R) -> Primitives {
    let interiors_overlap = (0..3).all(|i| a.axis_overlap(b, i) > eps);
    let contains = |outer: &Aabb<R>, inner: &Aabb<R>| {
        (0..3).all(|i| {
            inner.min.component(i) >= outer.min.component(i) - eps
                && inner.max.component(i) <= outer.max.component(i) + eps
        })
    };
    let strict = |outer: &Aabb<R>, inner: &Aabb<R>| {
        (0..3).all(|i| {
            inner.min.component(i) > outer.min.component(i) + eps
                && inner.max.component(i) < outer.max.component(i) - eps
        })
    };
    Primitives {
        contact: a.distance_to(b) <= eps,
        interiors_overlap,
        a_in_b: contains(b, a),
        b_in_a: contains(a, b),
        a_strict_in_b: strict(b, a),
        b_strict_in_a: strict(a, b),
    }
}

fn voxel_primitives<R: Real>(
    a: &RegionApprox<R>,
    b: &RegionApprox<R>,
    params: &ClassifyParams<R>,
) -> Primitives {
    let bounds = a.world_aabb().union(&b.world_aabb());
    let mut res = params.voxel_resolution;
    // Coarsen when the shared lattice would exceed the voxel budget.
    let budget = R::of(params.max_voxels as f64);
    let needed = bounds.volume() / (res * res * res);
    if needed > budget {
        res = (bounds.volume() / budget).powf(R::of(1.0 / 3.0));
    }
    let pad = Vec3::splat(res * R::of(2.0));
    let bounds = Aabb::new(bounds.min - pad, bounds.max + pad);
    let ga = VoxelGrid::sample(&bounds, res, |p| a.contains_point(p));
    let gb = VoxelGrid::sample(&bounds, res, |p| b.contains_point(p));

    let dims = ga.dims;
    let occupied = |g: &VoxelGrid<R>, k: [isize; 3]| -> bool {
        if k.iter()
            .zip(dims.iter())
            .any(|(c, d)| *c < 0 || *c >= *d as isize)
        {
            return false;
        }
        g.get([k[0] as usize, k[1] as usize, k[2] as usize])
    };

    const NEIGHBORS: [(isize, isize, isize); 6] = [
        (1, 0, 0),
        (-1, 0, 0),
        (0, 1, 0),
        (0, -1, 0),
        (0, 0, 1),
        (0, 0, -1),
    ];

    let mut inter = 0usize;
    let mut a_only = 0usize;
    let mut b_only = 0usize;
    let mut a_count = 0usize;
    let mut b_count = 0usize;
    let mut adjacent = false;
    let mut a_touches_b_boundary = false;
    let mut b_touches_a_boundary = false;

    for kz in 0..dims[2] as isize {
        for ky in 0..dims[1] as isize {
            for kx in 0..dims[0] as isize {
                let k = [kx, ky, kz];
                let ia = occupied(&ga, k);
                let ib = occupied(&gb, k);
                if ia {
                    a_count += 1;
                }
                if ib {
                    b_count += 1;
                }
                match (ia, ib) {
                    (true, true) => inter += 1,
                    (true, false) => a_only += 1,
                    (false, true) => b_only += 1,
                    _ => continue,
                }
                for (di, dj, dk) in NEIGHBORS {
                    let n = [kx + di, ky + dj, kz + dk];
                    let na = occupied(&ga, n);
                    let nb = occupied(&gb, n);
                    // Touching across the empty gap between disjoint sets.
                    if ia && nb || ib && na {
                        adjacent = true;
                    }
                    // A voxel of the inner set sitting on the outer set's
                    // boundary layer has a neighbor outside the outer set.
                    if ia && !nb {
                        a_touches_b_boundary = true;
                    }
                    if ib && !na {
                        b_touches_a_boundary = true;
                    }
                }
            }
        }
    }

    let a_in_b = a_count > 0 && a_only == 0;
    let b_in_a = b_count > 0 && b_only == 0;
    Primitives {
        contact: inter > 0 || adjacent,
        interiors_overlap: inter > 0,
        a_in_b,
        b_in_a,
        a_strict_in_b: a_in_b && !a_touches_b_boundary,
        b_strict_in_a: b_in_a && !b_touches_a_boundary,
    }
}

/// Standard RCC8 composition: all relations that may hold between `a` and
/// `c` given `r1(a, b)` and `r2(b, c)`.
pub fn compose(r1: Rcc8, r2: Rcc8) -> RelationSet {
    COMPOSITION[r1.index()][r2.index()]
}

use Rcc8::{Dc as D, Ec as E, Eq as Q, Ntpp as N, Ntppi as NI, Po as P, Tpp as T, Tppi as TI};

macro_rules! rs {
    (*) => {
        RelationSet::FULL
    };
    ($($r:expr),+) => {
        RelationSet::of(&[$($r),+])
    };
}

/// The 8x8 composition table, rows indexed by r1, columns by r2, in the
/// order DC, EC, PO, TPP, NTPP, TPPi, NTPPi, EQ.
static COMPOSITION: [[RelationSet; 8]; 8] = [
    // r1 = DC
    [
        rs!(*),
        rs!(D, E, P, T, N),
        rs!(D, E, P, T, N),
        rs!(D, E, P, T, N),
        rs!(D, E, P, T, N),
        rs!(D),
        rs!(D),
        rs!(D),
    ],
    // r1 = EC
    [
        rs!(D, E, P, TI, NI),
        rs!(D, E, P, T, TI, Q),
        rs!(D, E, P, T, N),
        rs!(E, P, T, N),
        rs!(P, T, N),
        rs!(D, E),
        rs!(D),
        rs!(E),
    ],
    // r1 = PO
    [
        rs!(D, E, P, TI, NI),
        rs!(D, E, P, TI, NI),
        rs!(*),
        rs!(P, T, N),
        rs!(P, T, N),
        rs!(D, E, P, TI, NI),
        rs!(D, E, P, TI, NI),
        rs!(P),
    ],
    // r1 = TPP
    [
        rs!(D),
        rs!(D, E),
        rs!(D, E, P, T, N),
        rs!(T, N),
        rs!(N),
        rs!(D, E, P, T, TI, Q),
        rs!(D, E, P, TI, NI),
        rs!(T),
    ],
    // r1 = NTPP
    [
        rs!(D),
        rs!(D),
        rs!(D, E, P, T, N),
        rs!(N),
        rs!(N),
        rs!(D, E, P, T, N),
        rs!(*),
        rs!(N),
    ],
    // r1 = TPPi
    [
        rs!(D, E, P, TI, NI),
        rs!(E, P, TI, NI),
        rs!(P, TI, NI),
        rs!(P, T, TI, Q),
        rs!(P, T, N),
        rs!(TI, NI),
        rs!(NI),
        rs!(TI),
    ],
    // r1 = NTPPi
    [
        rs!(D, E, P, TI, NI),
        rs!(P, TI, NI),
        rs!(P, TI, NI),
        rs!(P, TI, NI),
        rs!(P, T, N, TI, NI, Q),
        rs!(NI),
        rs!(NI),
        rs!(NI),
    ],
    // r1 = EQ
    [
        rs!(D),
        rs!(E),
        rs!(P),
        rs!(T),
        rs!(N),
        rs!(TI),
        rs!(NI),
        rs!(Q),
    ],
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Obb;

    fn boxr(center: [f64; 3], half: [f64; 3]) -> RegionApprox<f64> {
        RegionApprox::Box(Obb::axis_aligned(
            Vec3::of(center[0], center[1], center[2]),
            Vec3::of(half[0], half[1], half[2]),
        ))
    }

    fn params() -> ClassifyParams<f64> {
        ClassifyParams::new(1e-3, 0.01)
    }

    #[test]
    fn far_apart_boxes_are_dc() {
        let a = boxr([0.0; 3], [0.5; 3]);
        let b = boxr([5.0, 0.0, 0.0], [0.5; 3]);
        assert_eq!(classify(&a, &b, &params()).unwrap(), Rcc8::Dc);
    }

    #[test]
    fn identical_boxes_are_eq() {
        let a = boxr([0.0; 3], [0.5; 3]);
        assert_eq!(classify(&a, &a, &params()).unwrap(), Rcc8::Eq);
    }

    #[test]
    fn face_contact_is_ec() {
        let a = boxr([0.0; 3], [0.5; 3]);
        let b = boxr([1.0, 0.0, 0.0], [0.5; 3]);
        assert_eq!(classify(&a, &b, &params()).unwrap(), Rcc8::Ec);
        // Sub-tolerance penetration still counts as contact, not overlap.
        let c = boxr([1.0 - 5e-4, 0.0, 0.0], [0.5; 3]);
        assert_eq!(classify(&a, &c, &params()).unwrap(), Rcc8::Ec);
    }

    #[test]
    fn nested_boxes_are_proper_parts() {
        let outer = boxr([0.0; 3], [1.0; 3]);
        let deep = boxr([0.0; 3], [0.3; 3]);
        assert_eq!(classify(&deep, &outer, &params()).unwrap(), Rcc8::Ntpp);
        assert_eq!(classify(&outer, &deep, &params()).unwrap(), Rcc8::Ntppi);
        // Sharing a face makes the part tangential.
        let flush = boxr([0.7, 0.0, 0.0], [0.3; 3]);
        assert_eq!(classify(&flush, &outer, &params()).unwrap(), Rcc8::Tpp);
        assert_eq!(classify(&outer, &flush, &params()).unwrap(), Rcc8::Tppi);
    }

    #[test]
    fn crossing_boxes_are_po() {
        let a = boxr([0.0; 3], [0.5; 3]);
        let b = boxr([0.5, 0.0, 0.0], [0.5; 3]);
        assert_eq!(classify(&a, &b, &params()).unwrap(), Rcc8::Po);
    }

    #[test]
    fn empty_region_is_an_error() {
        let a = boxr([0.0; 3], [0.5; 3]);
        let empty = boxr([0.0; 3], [0.0; 3]);
        assert!(classify(&a, &empty, &params()).is_err());
    }

    #[test]
    fn converse_is_an_involution() {
        for r in ALL_RELATIONS {
            assert_eq!(r.converse().converse(), r);
        }
        assert_eq!(Rcc8::Tpp.converse(), Rcc8::Tppi);
        assert_eq!(Rcc8::Eq.converse(), Rcc8::Eq);
    }

    #[test]
    fn composition_identity_row() {
        for r in ALL_RELATIONS {
            assert_eq!(compose(Rcc8::Eq, r), RelationSet::singleton(r));
            assert_eq!(compose(r, Rcc8::Eq), RelationSet::singleton(r));
        }
    }

    #[test]
    fn composition_converse_symmetry() {
        // conv(r1 ; r2) == conv(r2) ; conv(r1), a theorem of relation algebra
        // that catches most transcription slips in the literal table.
        for r1 in ALL_RELATIONS {
            for r2 in ALL_RELATIONS {
                assert_eq!(
                    compose(r1, r2).converse(),
                    compose(r2.converse(), r1.converse()),
                    "converse symmetry broken at ({r1}, {r2})"
                );
            }
        }
    }

    #[test]
    fn ntpp_composition_verified_by_nested_intervals() {
        // Brute force over nested box triples: a NTPP b, b NTPP c must
        // always land in compose(NTPP, NTPP).
        let entry = compose(Rcc8::Ntpp, Rcc8::Ntpp);
        assert_eq!(entry, RelationSet::singleton(Rcc8::Ntpp));
        let p = params();
        for i in 1..5 {
            for j in 1..5 {
                let a = boxr([0.0; 3], [0.1; 3]);
                let b = boxr([0.0; 3], [0.1 + 0.1 * i as f64; 3]);
                let c = boxr([0.0; 3], [0.1 + 0.1 * (i + j) as f64; 3]);
                assert_eq!(classify(&a, &b, &p).unwrap(), Rcc8::Ntpp);
                assert_eq!(classify(&b, &c, &p).unwrap(), Rcc8::Ntpp);
                assert!(entry.contains(classify(&a, &c, &p).unwrap()));
            }
        }
    }

    #[test]
    fn dc_dc_composition_witnesses_all_eight() {
        // For every relation r there is a triple with DC(a,b), DC(b,c) and
        // r(a,c): a remote middle region constrains nothing.
        assert_eq!(compose(Rcc8::Dc, Rcc8::Dc), RelationSet::FULL);
        let p = params();
        let b = boxr([50.0, 0.0, 0.0], [0.5; 3]);
        let witnesses: [(RegionApprox<f64>, RegionApprox<f64>, Rcc8); 8] = [
            (
                boxr([0.0; 3], [0.5; 3]),
                boxr([3.0, 0.0, 0.0], [0.5; 3]),
                Rcc8::Dc,
            ),
            (
                boxr([0.0; 3], [0.5; 3]),
                boxr([1.0, 0.0, 0.0], [0.5; 3]),
                Rcc8::Ec,
            ),
            (
                boxr([0.0; 3], [0.5; 3]),
                boxr([0.5, 0.0, 0.0], [0.5; 3]),
                Rcc8::Po,
            ),
            (
                boxr([0.5, 0.0, 0.0], [0.5; 3]),
                boxr([0.0; 3], [1.0; 3]),
                Rcc8::Tpp,
            ),
            (
                boxr([0.0; 3], [0.5; 3]),
                boxr([0.0; 3], [1.0; 3]),
                Rcc8::Ntpp,
            ),
            (
                boxr([0.0; 3], [1.0; 3]),
                boxr([0.5, 0.0, 0.0], [0.5; 3]),
                Rcc8::Tppi,
            ),
            (
                boxr([0.0; 3], [1.0; 3]),
                boxr([0.0; 3], [0.5; 3]),
                Rcc8::Ntppi,
            ),
            (boxr([0.0; 3], [0.5; 3]), boxr([0.0; 3], [0.5; 3]), Rcc8::Eq),
        ];
        for (a, c, want) in witnesses {
            assert_eq!(classify(&a, &b, &p).unwrap(), Rcc8::Dc);
            assert_eq!(classify(&b, &c, &p).unwrap(), Rcc8::Dc);
            assert_eq!(classify(&a, &c, &p).unwrap(), want);
        }
    }

    #[test]
    fn relation_names_round_trip() {
        for r in ALL_RELATIONS {
            assert_eq!(Rcc8::parse(r.name()), Some(r));
        }
        assert_eq!(Rcc8::parse("XX"), None);
    }

    #[test]
    fn classify_works_in_f32() {
        let a = RegionApprox::Box(Obb::<f32>::axis_aligned(Vec3::zero(), Vec3::splat(0.5)));
        let b = RegionApprox::Box(Obb::<f32>::axis_aligned(
            Vec3::of(5.0, 0.0, 0.0),
            Vec3::splat(0.5),
        ));
        let p = ClassifyParams::new(1e-3f32, 0.01);
        assert_eq!(classify(&a, &b, &p).unwrap(), Rcc8::Dc);
    }
}
