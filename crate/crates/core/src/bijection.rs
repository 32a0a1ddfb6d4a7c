//! The correspondence between interval posets on `n` minimal elements and
//! dissections of the `(n+1)`-gon: interval `[a, b]` ↔ chord `{a, b+1}`.

use serde::{Deserialize, Serialize};

use crate::perm::ValueInterval;
use crate::polygon::{Chord, Dissection};
use crate::poset::IntervalPoset;

/// Chord of the `(n+1)`-gon carrying the interval `[a, b]`.
pub fn chord_of(v: &ValueInterval) -> Chord {
    Chord::new(v.lo, v.hi + 1)
}

/// Interval carried by the chord `{u, v}`.
pub fn interval_of(c: &Chord) -> ValueInterval {
    ValueInterval::new(c.u, c.v - 1)
}

/// Maps a poset on `n` minimal elements to a dissection of the `(n+1)`-gon.
///
/// Singletons and `[1, n]` land on outer edges; every other interval
/// becomes a diagonal. `n = 1` gives the degenerate 2-gon.
pub fn phi(p: &IntervalPoset) -> Dissection {
    let n = p.n();
    let chords = p.intervals().filter(|v| v.is_proper(n)).map(chord_of);
    Dissection::new(n + 1, chords).expect("proper intervals map to diagonals")
}

/// Reads a dissection of the `m`-gon back as an interval family on
/// `m - 1` minimal elements. No realizability check is made.
pub fn phi_inverse(d: &Dissection) -> IntervalPoset {
    IntervalPoset::from_family(d.m() - 1, d.diagonals().map(interval_of))
}

/// The predicates each correspondence asserts about an image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageClass {
    pub diagonally_framed: bool,
    pub quad_free: bool,
    pub noncrossing: bool,
    pub triangle_free: bool,
}

/// Evaluates the image predicates on `phi(p)`. `None` for `n = 1`, whose
/// image is the degenerate 2-gon.
pub fn classify_image(p: &IntervalPoset) -> Option<ImageClass> {
    if p.n() < 2 {
        return None;
    }
    let d = phi(p);
    Some(ImageClass {
        diagonally_framed: d.is_diagonally_framed(),
        quad_free: d.empty_faces(4).is_empty(),
        noncrossing: d.is_noncrossing(),
        triangle_free: d.empty_faces(3).is_empty(),
    })
}
