//! The voxicon: lexicon of object, program, attribute, and relation voxemes,
//! its `voxicon/1` file format, and the invariant validator.
//!
//! A loaded [`Voxicon`] is immutable and freely shareable across threads;
//! loading itself is single-threaded.

mod format;
mod types;
mod validate;

pub use format::{load_voxicon_path, load_voxicon_str, serialize_voxicon, VoxiconError, VOXICON_HEADER};
pub use types::*;
pub use validate::{validate_voxeme, validate_voxicon, Diagnostic, DiagnosticCode, COMPOSITE_MACROS};

use crate::scalar::Real;

/// The voxicon text bundled with the engine.
pub const STOCK_VOXICON_TEXT: &str = include_str!("../../assets/stock.voxicon");

/// Parse the bundled stock voxicon. Panics only if the bundled asset is
/// broken, which the test suite rules out.
pub fn stock_voxicon<R: Real>() -> Voxicon<R> {
    load_voxicon_str(STOCK_VOXICON_TEXT).expect("bundled stock voxicon parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stock_voxicon_loads_and_validates_cleanly() {
        let v: Voxicon<f64> = stock_voxicon();
        for lemma in [
            "agent", "ball", "table", "block", "plate", "cup", "knife", "wall", "pencil", "put",
            "stack", "roll", "slide", "move", "turn", "small", "big", "on", "in",
        ] {
            assert!(v.lookup(lemma).is_some(), "stock voxicon lacks `{lemma}`");
        }
        let problems = validate_voxicon(&v);
        assert!(problems.is_empty(), "stock diagnostics: {problems:?}");
    }

    #[test]
    fn lookup_is_exact_and_total() {
        let v: Voxicon<f64> = stock_voxicon();
        assert_eq!(v.lookup("cup").map(|x| x.kind), Some(VoxemeKind::Object));
        assert!(v.lookup("unicorn").is_none());
        assert!(v.lookup("").is_none());
    }

    #[test]
    fn affordance_queries_match_the_lexicon() {
        let v: Voxicon<f64> = stock_voxicon();
        assert!(v.lookup("cup").unwrap().affords("contain"));
        assert!(!v.lookup("wall").unwrap().affords("contain"));
        assert!(!v.lookup("cup").unwrap().affords("fly"));
    }

    #[test]
    fn cup_concavity_opens_up_with_y_symmetry() {
        let v: Voxicon<f64> = stock_voxicon();
        let cup = v.lookup("cup").unwrap();
        let c = cup.concavity.as_ref().unwrap();
        assert_eq!(c.opens_along, SignedAxis::POS_Y);
        assert!(cup.symmetry.rotational_about(1));
        assert!(validate_voxeme(cup).is_empty());
    }

    #[test]
    fn serialize_round_trips_the_stock_voxicon() {
        let v: Voxicon<f64> = stock_voxicon();
        let text = serialize_voxicon(&v);
        let reparsed: Voxicon<f64> = load_voxicon_str(&text).unwrap();
        assert_eq!(v, reparsed);
    }
}
