//! The `voxicon/1` document format.
//!
//! Grammar (token-based, `#` comments, newlines insignificant):
//!
//! ```text
//! document   := "voxicon/1" entry*
//! entry      := ("object"|"program"|"attribute"|"relation") LEMMA "{" field* "}"
//! field      := "dimensions" ":" NUM NUM NUM
//!             | "head" ":" ("box"|"cylinder-approx"|"sheet")
//!             | "axes" "{" (SIDE ":" SAXIS)* "}"
//!             | "symmetry" "{" ("reflectional" ":" PLANE*)? ("rotational" ":" AXIS*)? "}"
//!             | "concavity" "{" "opens" ":" SAXIS "extent" ":" NUM*6 "}"
//!             | "habitat" IDENT "{" "orientation" ":" ORIENT "support" ":" SUPPORT "}"
//!             | "affordance" IDENT "{" "flavor" ":" ("gibsonian"|"telic")
//!                                      "behavior" ":" IDENT "}"
//!             | "kind" ":" ("state"|"process"|"transition"|"assignment"|"test")
//!             | "args" "{" (IDENT ":" ARGTYPE)* "}"
//!             | "params" "{" (IDENT ":" DOMAIN)* "}"
//!             | "subevents" "{" SUBEVENT* "}"
//!             | "scale" ":" IDENT
//!             | "order" ":" ("min"|"max")
//! SIDE       := "top"|"bottom"|"front"|"side"
//! SAXIS      := ("+"|"-")("x"|"y"|"z")        # signed object-frame axis
//! PLANE      := "xy"|"yz"|"xz"
//! AXIS       := "x"|"y"|"z"
//! ORIENT     := "any" | ("upright"|"horizontal") "(" SAXIS "," NUM ")"
//! SUPPORT    := "must-rest-on-support" | "none"
//! ARGTYPE    := "agent" | "object" | "object-list" | "relation" "(" LEMMA ")"
//! DOMAIN     := "angle" | "length" "(" NUM "," NUM ")" | "surface-point"
//! SUBEVENT   := CALL | CALL "->" CALL
//! CALL       := IDENT [ "(" SUBEVENT ("," SUBEVENT)* ")" ]
//! ```
//!
//! `concavity.extent` is `min_x min_y min_z  max_x max_y max_z` in object
//! frame meters. The cavity must reach the hull face it opens through and
//! stay strictly inside every other face.

use std::path::Path;

use thiserror::Error;

use crate::geom::{Aabb, Vec3};
use crate::scalar::Real;
use crate::textfmt::{fmt_f64, Cursor, SyntaxError, Token};

use super::types::*;

pub const VOXICON_HEADER: &str = "voxicon/1";

#[derive(Debug, Error)]
pub enum VoxiconError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("duplicate lemma `{0}`")]
    DuplicateLemma(String),
    #[error("dangling cross-reference: `{from}` refers to relation `{to}` which is not in the voxicon")]
    DanglingReference { from: String, to: String },
    #[error("reading voxicon: {0}")]
    Io(#[from] std::io::Error),
}

/// Parse a voxicon document from text. Duplicate lemmas and dangling
/// relation references are load errors; per-entry invariant violations are
/// the validator's business.
pub fn load_voxicon_str<R: Real>(text: &str) -> Result<Voxicon<R>, VoxiconError> {
    let mut cur = Cursor::new(text)?;
    cur.expect_keyword(VOXICON_HEADER)
        .map_err(|e| SyntaxError {
            pos: e.pos,
            msg: format!("missing `{VOXICON_HEADER}` header"),
        })?;
    let mut voxicon = Voxicon::default();
    while !cur.at_end() {
        let voxeme = parse_entry(&mut cur)?;
        if voxicon.entries.contains_key(&voxeme.lemma) {
            return Err(VoxiconError::DuplicateLemma(voxeme.lemma));
        }
        voxicon.entries.insert(voxeme.lemma.clone(), voxeme);
    }
    resolve_references(&voxicon)?;
    Ok(voxicon)
}

pub fn load_voxicon_path<R: Real>(path: impl AsRef<Path>) -> Result<Voxicon<R>, VoxiconError> {
    let text = std::fs::read_to_string(path)?;
    load_voxicon_str(&text)
}

fn resolve_references<R: Real>(voxicon: &Voxicon<R>) -> Result<(), VoxiconError> {
    for v in voxicon.programs() {
        let Some(body) = &v.program else { continue };
        for slot in &body.args {
            if let ArgType::Relation { default } = &slot.ty {
                match voxicon.lookup(default) {
                    Some(target) if target.kind == VoxemeKind::Relation => {}
                    _ => {
                        return Err(VoxiconError::DanglingReference {
                            from: v.lemma.clone(),
                            to: default.clone(),
                        })
                    }
                }
            }
        }
    }
    Ok(())
}

fn parse_entry<R: Real>(cur: &mut Cursor) -> Result<Voxeme<R>, SyntaxError> {
    let kind_word = cur.expect_ident()?;
    let kind = match kind_word.as_str() {
        "object" => VoxemeKind::Object,
        "program" => VoxemeKind::Program,
        "attribute" => VoxemeKind::Attribute,
        "relation" => VoxemeKind::Relation,
        other => return cur.fail(format!("expected entry kind, found `{other}`")),
    };
    let lemma = cur.expect_ident()?;
    let mut voxeme = Voxeme::bare(lemma, kind);
    cur.expect(&Token::LBrace)?;
    while !cur.eat(&Token::RBrace) {
        parse_field(cur, &mut voxeme)?;
    }
    Ok(voxeme)
}

fn parse_field<R: Real>(cur: &mut Cursor, voxeme: &mut Voxeme<R>) -> Result<(), SyntaxError> {
    let field = cur.expect_ident()?;
    match field.as_str() {
        "dimensions" => {
            cur.expect(&Token::Colon)?;
            let x = cur.expect_number()?;
            let y = cur.expect_number()?;
            let z = cur.expect_number()?;
            voxeme.default_dimensions = Some(Vec3::of(x, y, z));
        }
        "head" => {
            cur.expect(&Token::Colon)?;
            let p = cur.expect_ident()?;
            let primitive = match p.as_str() {
                "box" => Primitive::Box,
                "cylinder-approx" => Primitive::CylinderApprox,
                "sheet" => Primitive::Sheet,
                other => return cur.fail(format!("unknown geometry primitive `{other}`")),
            };
            let head = voxeme.head.get_or_insert_with(|| GeometryHead {
                primitive,
                intrinsic_axes: Default::default(),
            });
            head.primitive = primitive;
        }
        "axes" => {
            cur.expect(&Token::LBrace)?;
            let head = voxeme.head.get_or_insert_with(|| GeometryHead {
                primitive: Primitive::Box,
                intrinsic_axes: Default::default(),
            });
            while !cur.eat(&Token::RBrace) {
                let side_word = cur.expect_ident()?;
                let Some(side) = IntrinsicSide::parse(&side_word) else {
                    return cur.fail(format!("unknown intrinsic side `{side_word}`"));
                };
                cur.expect(&Token::Colon)?;
                let axis = parse_signed_axis(cur)?;
                head.intrinsic_axes.insert(side, axis);
            }
        }
        "symmetry" => {
            cur.expect(&Token::LBrace)?;
            while !cur.eat(&Token::RBrace) {
                let which = cur.expect_ident()?;
                cur.expect(&Token::Colon)?;
                match which.as_str() {
                    "reflectional" => {
                        while let Some(Token::Ident(s)) = cur.peek() {
                            let Some(plane) = SymPlane::parse(s) else { break };
                            cur.next();
                            voxeme.symmetry.reflectional.push(plane);
                        }
                    }
                    "rotational" => {
                        while let Some(Token::Ident(s)) = cur.peek() {
                            let axis = match s.as_str() {
                                "x" => 0,
                                "y" => 1,
                                "z" => 2,
                                _ => break,
                            };
                            cur.next();
                            voxeme.symmetry.rotational.push(axis);
                        }
                    }
                    other => return cur.fail(format!("unknown symmetry kind `{other}`")),
                }
            }
        }
        "concavity" => {
            cur.expect(&Token::LBrace)?;
            cur.expect_keyword("opens")?;
            cur.expect(&Token::Colon)?;
            let opens_along = parse_signed_axis(cur)?;
            cur.expect_keyword("extent")?;
            cur.expect(&Token::Colon)?;
            let mut n = [0.0f64; 6];
            for v in &mut n {
                *v = cur.expect_number()?;
            }
            cur.expect(&Token::RBrace)?;
            voxeme.concavity = Some(ConcavitySpec {
                opens_along,
                cavity_extent: Aabb::new(Vec3::of(n[0], n[1], n[2]), Vec3::of(n[3], n[4], n[5])),
            });
        }
        "habitat" => {
            let id = cur.expect_ident()?;
            cur.expect(&Token::LBrace)?;
            cur.expect_keyword("orientation")?;
            cur.expect(&Token::Colon)?;
            let orientation = parse_orientation(cur)?;
            cur.expect_keyword("support")?;
            cur.expect(&Token::Colon)?;
            let support_word = cur.expect_ident()?;
            let support = match support_word.as_str() {
                "must-rest-on-support" => SupportConstraint::MustRestOnSupport,
                "none" => SupportConstraint::None,
                other => return cur.fail(format!("unknown support constraint `{other}`")),
            };
            cur.expect(&Token::RBrace)?;
            voxeme.habitats.push(Habitat {
                id,
                orientation,
                support,
            });
        }
        "affordance" => {
            let id = cur.expect_ident()?;
            cur.expect(&Token::LBrace)?;
            cur.expect_keyword("flavor")?;
            cur.expect(&Token::Colon)?;
            let flavor_word = cur.expect_ident()?;
            let flavor = match flavor_word.as_str() {
                "gibsonian" => AffordanceFlavor::Gibsonian,
                "telic" => AffordanceFlavor::Telic,
                other => return cur.fail(format!("unknown affordance flavor `{other}`")),
            };
            cur.expect_keyword("behavior")?;
            cur.expect(&Token::Colon)?;
            let behavior = cur.expect_ident()?;
            cur.expect(&Token::RBrace)?;
            voxeme.affordances.push(Affordance {
                id,
                flavor,
                behavior,
            });
        }
        "kind" => {
            cur.expect(&Token::Colon)?;
            let k = cur.expect_ident()?;
            let Some(kind) = ProgramKind::parse(&k) else {
                return cur.fail(format!("unknown program kind `{k}`"));
            };
            program_body(voxeme).kind = kind;
        }
        "args" => {
            cur.expect(&Token::LBrace)?;
            let mut args = Vec::new();
            while !cur.eat(&Token::RBrace) {
                let name = cur.expect_ident()?;
                cur.expect(&Token::Colon)?;
                let ty_word = cur.expect_ident()?;
                let ty = match ty_word.as_str() {
                    "agent" => ArgType::Agent,
                    "object" => ArgType::Object,
                    "object-list" => ArgType::ObjectList,
                    "relation" => {
                        cur.expect(&Token::LParen)?;
                        let default = cur.expect_ident()?;
                        cur.expect(&Token::RParen)?;
                        ArgType::Relation { default }
                    }
                    other => return cur.fail(format!("unknown argument type `{other}`")),
                };
                args.push(ArgSlot { name, ty });
            }
            program_body(voxeme).args = args;
        }
        "params" => {
            cur.expect(&Token::LBrace)?;
            let mut params = Vec::new();
            while !cur.eat(&Token::RBrace) {
                let name = cur.expect_ident()?;
                cur.expect(&Token::Colon)?;
                let d = cur.expect_ident()?;
                let domain = match d.as_str() {
                    "angle" => ParamDomain::Angle,
                    "surface-point" => ParamDomain::SurfacePoint,
                    "length" => {
                        cur.expect(&Token::LParen)?;
                        let min = cur.expect_number()?;
                        cur.expect(&Token::Comma)?;
                        let max = cur.expect_number()?;
                        cur.expect(&Token::RParen)?;
                        ParamDomain::Length {
                            min: R::of(min),
                            max: R::of(max),
                        }
                    }
                    other => return cur.fail(format!("unknown parameter domain `{other}`")),
                };
                params.push(ParamDecl { name, domain });
            }
            program_body(voxeme).params = params;
        }
        "subevents" => {
            cur.expect(&Token::LBrace)?;
            let mut subevents = Vec::new();
            while !cur.eat(&Token::RBrace) {
                subevents.push(parse_subevent(cur)?);
            }
            program_body(voxeme).subevents = subevents;
        }
        "scale" => {
            cur.expect(&Token::Colon)?;
            let scale = cur.expect_ident()?;
            let spec = voxeme.attribute.get_or_insert_with(|| AttributeSpec {
                scale: String::new(),
                order: AttributeOrder::Min,
            });
            spec.scale = scale;
        }
        "order" => {
            cur.expect(&Token::Colon)?;
            let o = cur.expect_ident()?;
            let order = match o.as_str() {
                "min" => AttributeOrder::Min,
                "max" => AttributeOrder::Max,
                other => return cur.fail(format!("unknown order `{other}`")),
            };
            let spec = voxeme.attribute.get_or_insert_with(|| AttributeSpec {
                scale: String::new(),
                order,
            });
            spec.order = order;
        }
        other => return cur.fail(format!("unknown field `{other}`")),
    }
    Ok(())
}

fn program_body<R: Real>(voxeme: &mut Voxeme<R>) -> &mut ProgramBody<R> {
    voxeme.program.get_or_insert_with(|| ProgramBody {
        kind: ProgramKind::Transition,
        args: Vec::new(),
        params: Vec::new(),
        subevents: Vec::new(),
    })
}

fn parse_signed_axis(cur: &mut Cursor) -> Result<SignedAxis, SyntaxError> {
    let word = cur.expect_ident()?;
    SignedAxis::parse(&word)
        .ok_or(())
        .or_else(|_| cur.fail(format!("expected signed axis like `+y`, found `{word}`")))
}

fn parse_orientation<R: Real>(cur: &mut Cursor) -> Result<OrientationConstraint<R>, SyntaxError> {
    let word = cur.expect_ident()?;
    match word.as_str() {
        "any" => Ok(OrientationConstraint::Any),
        "upright" | "horizontal" => {
            cur.expect(&Token::LParen)?;
            let axis = parse_signed_axis(cur)?;
            cur.expect(&Token::Comma)?;
            let tol = cur.expect_number()?;
            cur.expect(&Token::RParen)?;
            if word == "upright" {
                Ok(OrientationConstraint::Upright {
                    axis,
                    tolerance_deg: R::of(tol),
                })
            } else {
                Ok(OrientationConstraint::Horizontal {
                    axis,
                    tolerance_deg: R::of(tol),
                })
            }
        }
        other => cur.fail(format!("unknown orientation constraint `{other}`")),
    }
}

fn parse_subevent(cur: &mut Cursor) -> Result<SubeventExpr, SyntaxError> {
    let head = parse_call(cur)?;
    if cur.eat(&Token::Arrow) {
        let body = parse_call(cur)?;
        Ok(SubeventExpr::Guarded {
            guard: Box::new(head),
            body: Box::new(body),
        })
    } else {
        Ok(head)
    }
}

fn parse_call(cur: &mut Cursor) -> Result<SubeventExpr, SyntaxError> {
    let name = cur.expect_ident()?;
    if !cur.eat(&Token::LParen) {
        return Ok(SubeventExpr::Atom(name));
    }
    let mut args = Vec::new();
    if !cur.eat(&Token::RParen) {
        loop {
            args.push(parse_subevent(cur)?);
            if cur.eat(&Token::RParen) {
                break;
            }
            cur.expect(&Token::Comma)?;
        }
    }
    Ok(SubeventExpr::Call { name, args })
}

/// Serialize back to canonical `voxicon/1` text; reparsing yields a
/// structurally equal voxicon.
pub fn serialize_voxicon<R: Real>(voxicon: &Voxicon<R>) -> String {
    let mut out = String::from(VOXICON_HEADER);
    out.push('\n');
    for v in voxicon.entries.values() {
        out.push('\n');
        serialize_voxeme(v, &mut out);
    }
    out
}

fn num<R: Real>(v: R) -> String {
    fmt_f64(v.to_f64x())
}

fn serialize_voxeme<R: Real>(v: &Voxeme<R>, out: &mut String) {
    use std::fmt::Write;
    let _ = writeln!(out, "{} {} {{", v.kind.name(), v.lemma);
    if let Some(d) = v.default_dimensions {
        let _ = writeln!(
            out,
            "  dimensions: {} {} {}",
            num(d.x),
            num(d.y),
            num(d.z)
        );
    }
    if let Some(head) = &v.head {
        let _ = writeln!(out, "  head: {}", head.primitive.name());
        if !head.intrinsic_axes.is_empty() {
            let axes: Vec<String> = head
                .intrinsic_axes
                .iter()
                .map(|(side, axis)| format!("{}: {}", side.name(), axis.name()))
                .collect();
            let _ = writeln!(out, "  axes {{ {} }}", axes.join("  "));
        }
    }
    if !v.symmetry.reflectional.is_empty() || !v.symmetry.rotational.is_empty() {
        let mut parts = Vec::new();
        if !v.symmetry.reflectional.is_empty() {
            let planes: Vec<&str> = v.symmetry.reflectional.iter().map(|p| p.name()).collect();
            parts.push(format!("reflectional: {}", planes.join(" ")));
        }
        if !v.symmetry.rotational.is_empty() {
            let axes: Vec<&str> = v
                .symmetry
                .rotational
                .iter()
                .map(|a| ["x", "y", "z"][*a])
                .collect();
            parts.push(format!("rotational: {}", axes.join(" ")));
        }
        let _ = writeln!(out, "  symmetry {{ {} }}", parts.join("  "));
    }
    if let Some(c) = &v.concavity {
        let _ = writeln!(
            out,
            "  concavity {{ opens: {}  extent: {} {} {}  {} {} {} }}",
            c.opens_along.name(),
            num(c.cavity_extent.min.x),
            num(c.cavity_extent.min.y),
            num(c.cavity_extent.min.z),
            num(c.cavity_extent.max.x),
            num(c.cavity_extent.max.y),
            num(c.cavity_extent.max.z),
        );
    }
    for h in &v.habitats {
        let orientation = match &h.orientation {
            OrientationConstraint::Any => "any".to_string(),
            OrientationConstraint::Upright {
                axis,
                tolerance_deg,
            } => format!("upright({}, {})", axis.name(), num(*tolerance_deg)),
            OrientationConstraint::Horizontal {
                axis,
                tolerance_deg,
            } => format!("horizontal({}, {})", axis.name(), num(*tolerance_deg)),
        };
        let support = match h.support {
            SupportConstraint::MustRestOnSupport => "must-rest-on-support",
            SupportConstraint::None => "none",
        };
        let _ = writeln!(
            out,
            "  habitat {} {{ orientation: {orientation}  support: {support} }}",
            h.id
        );
    }
    for a in &v.affordances {
        let flavor = match a.flavor {
            AffordanceFlavor::Gibsonian => "gibsonian",
            AffordanceFlavor::Telic => "telic",
        };
        let _ = writeln!(
            out,
            "  affordance {} {{ flavor: {flavor}  behavior: {} }}",
            a.id, a.behavior
        );
    }
    if let Some(p) = &v.program {
        let _ = writeln!(out, "  kind: {}", p.kind.name());
        if !p.args.is_empty() {
            let args: Vec<String> = p
                .args
                .iter()
                .map(|s| {
                    let ty = match &s.ty {
                        ArgType::Agent => "agent".to_string(),
                        ArgType::Object => "object".to_string(),
                        ArgType::ObjectList => "object-list".to_string(),
                        ArgType::Relation { default } => format!("relation({default})"),
                    };
                    format!("{}: {}", s.name, ty)
                })
                .collect();
            let _ = writeln!(out, "  args {{ {} }}", args.join("  "));
        }
        if !p.params.is_empty() {
            let params: Vec<String> = p
                .params
                .iter()
                .map(|d| {
                    let domain = match &d.domain {
                        ParamDomain::Angle => "angle".to_string(),
                        ParamDomain::SurfacePoint => "surface-point".to_string(),
                        ParamDomain::Length { min, max } => {
                            format!("length({}, {})", num(*min), num(*max))
                        }
                    };
                    format!("{}: {}", d.name, domain)
                })
                .collect();
            let _ = writeln!(out, "  params {{ {} }}", params.join("  "));
        }
        if !p.subevents.is_empty() {
            let _ = writeln!(out, "  subevents {{");
            for s in &p.subevents {
                let _ = writeln!(out, "    {}", s.render());
            }
            let _ = writeln!(out, "  }}");
        }
    }
    if let Some(a) = &v.attribute {
        let _ = writeln!(out, "  scale: {}", a.scale);
        let order = match a.order {
            AttributeOrder::Min => "min",
            AttributeOrder::Max => "max",
        };
        let _ = writeln!(out, "  order: {order}");
    }
    out.push_str("}\n");
}
