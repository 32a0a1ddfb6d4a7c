//! Dissections of convex polygons: crossing/framing/face predicates and
//! exhaustive enumeration of the three dissection classes.
//!
//! Vertices are numbered `1..=m` around the polygon. A dissection stores its
//! diagonals only; the outer edges `{i, i+1}` and `{1, m}` are implicit.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest polygon the bitmask engine supports (54 diagonals fit in a `u64`).
pub const MAX_SUPPORTED_M: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("a polygon needs at least 2 vertices, got {0}")]
    TooFewVertices(u32),
    #[error("{{{u},{v}}} is not a diagonal of the {m}-gon")]
    NotADiagonal { u: u32, v: u32, m: u32 },
    #[error("{m}-gon exceeds the configured cap of {cap} for {class}")]
    CapExceeded {
        m: u32,
        cap: u32,
        class: DissectionClass,
    },
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
}

/// A segment `{u, v}` between two polygon vertices, `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chord {
    pub u: u32,
    pub v: u32,
}

impl Chord {
    /// Normalizes the endpoint order.
    pub fn new(a: u32, b: u32) -> Self {
        Chord {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn is_diagonal(&self, m: u32) -> bool {
        self.v >= self.u + 2 && !(self.u == 1 && self.v == m)
    }

    /// Strict interleaving of endpoints; chords sharing a vertex never cross.
    pub fn crosses(&self, other: &Chord) -> bool {
        (self.u < other.u && other.u < self.v && self.v < other.v)
            || (other.u < self.u && self.u < other.v && other.v < self.v)
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// A convex `m`-gon together with a set of its diagonals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dissection {
    m: u32,
    diagonals: BTreeSet<Chord>,
}

impl Dissection {
    pub fn new(m: u32, chords: impl IntoIterator<Item = Chord>) -> Result<Self, PolygonError> {
        if m < 2 {
            return Err(PolygonError::TooFewVertices(m));
        }
        let mut diagonals = BTreeSet::new();
        for c in chords {
            if c.u == 0 || c.v > m || !c.is_diagonal(m) {
                return Err(PolygonError::NotADiagonal { u: c.u, v: c.v, m });
            }
            diagonals.insert(c);
        }
        Ok(Dissection { m, diagonals })
    }

    /// Convenience constructor from `(u, v)` pairs.
    pub fn from_pairs(m: u32, pairs: &[(u32, u32)]) -> Result<Self, PolygonError> {
        Dissection::new(m, pairs.iter().map(|&(a, b)| Chord::new(a, b)))
    }

    pub fn empty(m: u32) -> Result<Self, PolygonError> {
        Dissection::new(m, [])
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn diagonals(&self) -> impl Iterator<Item = &Chord> + '_ {
        self.diagonals.iter()
    }

    pub fn diagonal_count(&self) -> usize {
        self.diagonals.len()
    }

    pub fn is_outer_edge(&self, c: &Chord) -> bool {
        c.v == c.u + 1 || (c.u == 1 && c.v == self.m)
    }

    /// Present as a stored diagonal or as an implicit outer edge.
    pub fn has_chord(&self, a: u32, b: u32) -> bool {
        let c = Chord::new(a, b);
        a != b && c.v <= self.m && (self.is_outer_edge(&c) || self.diagonals.contains(&c))
    }

    /// Unordered crossing pairs `(p, q)` with `p < q`.
    pub fn crossing_pairs(&self) -> Vec<(Chord, Chord)> {
        let ds: Vec<_> = self.diagonals.iter().copied().collect();
        let mut out = Vec::new();
        for (i, p) in ds.iter().enumerate() {
            for q in &ds[i + 1..] {
                if p.crosses(q) {
                    out.push((*p, *q));
                }
            }
        }
        out
    }

    pub fn is_noncrossing(&self) -> bool {
        self.crossing_pairs().is_empty()
    }

    /// Every crossing pair spans four vertices `x1 < x2 < x3 < x4`; all four
    /// frame chords `{x1,x2}, {x2,x3}, {x3,x4}, {x1,x4}` must be present.
    pub fn is_diagonally_framed(&self) -> bool {
        self.crossing_pairs().iter().all(|(p, q)| {
            let mut xs = [p.u, p.v, q.u, q.v];
            xs.sort_unstable();
            let [a, b, c, d] = xs;
            self.has_chord(a, b)
                && self.has_chord(b, c)
                && self.has_chord(c, d)
                && self.has_chord(a, d)
        })
    }

    /// Ascending `k`-tuples of vertices bounding an undivided face: every side
    /// is present and no other diagonal enters the open convex hull.
    pub fn empty_faces(&self, k: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        if k < 3 || self.m < 3 {
            return out;
        }
        for_each_subset(self.m, k, |tuple| {
            let sides_present = (0..k).all(|i| self.has_chord(tuple[i], tuple[(i + 1) % k]));
            if sides_present
                && self
                    .diagonals
                    .iter()
                    .all(|c| is_side(tuple, c) || !penetrates_hull(tuple, c))
            {
                out.push(tuple.to_vec());
            }
        });
        out
    }

    /// Header `m <m>`, then one `u v` line per diagonal.
    pub fn to_text(&self) -> String {
        let mut out = format!("m {}\n", self.m);
        for c in &self.diagonals {
            let _ = writeln!(out, "{} {}", c.u, c.v);
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self, PolygonError> {
        let mut all = parse_stream(text)?;
        match all.len() {
            1 => Ok(all.pop().unwrap()),
            k => Err(PolygonError::Malformed {
                line: 0,
                reason: format!("expected one dissection, found {k}"),
            }),
        }
    }

    fn sort_key(&self) -> (usize, Vec<Chord>) {
        (
            self.diagonals.len(),
            self.diagonals.iter().copied().collect(),
        )
    }
}

impl fmt::Display for Dissection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-gon {{", self.m)?;
        for (i, c) in self.diagonals.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

/// Records separated by blank lines.
pub fn write_stream(dissections: &[Dissection]) -> String {
    dissections
        .iter()
        .map(Dissection::to_text)
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn parse_stream(text: &str) -> Result<Vec<Dissection>, PolygonError> {
    let mut out = Vec::new();
    let mut current: Option<(u32, Vec<Chord>)> = None;
    let flush = |cur: &mut Option<(u32, Vec<Chord>)>, out: &mut Vec<Dissection>| {
        if let Some((m, chords)) = cur.take() {
            out.push(Dissection::new(m, chords)?);
        }
        Ok::<_, PolygonError>(())
    };
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            flush(&mut current, &mut out)?;
            continue;
        }
        let malformed = |reason: &str| PolygonError::Malformed {
            line: line_no,
            reason: format!("{reason}: {line:?}"),
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match (fields.as_slice(), current.as_mut()) {
            (["m", v], _) => {
                flush(&mut current, &mut out)?;
                let m = v.parse().map_err(|_| malformed("bad vertex count"))?;
                current = Some((m, Vec::new()));
            }
            ([a, b], Some((_, chords))) => {
                let a: u32 = a.parse().map_err(|_| malformed("bad vertex"))?;
                let b: u32 = b.parse().map_err(|_| malformed("bad vertex"))?;
                chords.push(Chord::new(a, b));
            }
            ([_, _], None) => return Err(malformed("chord before \"m <m>\" header")),
            _ => return Err(malformed("expected \"u v\"")),
        }
    }
    flush(&mut current, &mut out)?;
    Ok(out)
}

fn is_side(tuple: &[u32], c: &Chord) -> bool {
    let k = tuple.len();
    (0..k).any(|i| Chord::new(tuple[i], tuple[(i + 1) % k]) == *c)
}

/// Arc test: the chord stays outside the open hull of `tuple` iff both
/// endpoints lie in one closed cyclic arc between consecutive tuple vertices.
fn penetrates_hull(tuple: &[u32], c: &Chord) -> bool {
    let k = tuple.len();
    let in_arc = |i: usize, x: u32| {
        let (a, b) = (tuple[i], tuple[(i + 1) % k]);
        if a < b {
            a <= x && x <= b
        } else {
            x >= a || x <= b
        }
    };
    !(0..k).any(|i| in_arc(i, c.u) && in_arc(i, c.v))
}

/// Calls `f` on every ascending `k`-subset of `1..=m`, in lexicographic order.
fn for_each_subset(m: u32, k: usize, mut f: impl FnMut(&[u32])) {
    if k == 0 || k as u32 > m {
        return;
    }
    let mut t: Vec<u32> = (1..=k as u32).collect();
    loop {
        f(&t);
        let mut i = k;
        while i > 0 && t[i - 1] == m - (k - i) as u32 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        t[i - 1] += 1;
        for j in i..k {
            t[j] = t[j - 1] + 1;
        }
    }
}

/// The three dissection classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DissectionClass {
    /// Diagonally framed, no empty quadrilateral.
    FramedQuadFree,
    /// Non-crossing, no empty quadrilateral.
    NonCrossingQuadFree,
    /// Non-crossing, no empty triangle or quadrilateral.
    NonCrossingTriQuadFree,
}

impl fmt::Display for DissectionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DissectionClass::FramedQuadFree => "framed-quad-free",
            DissectionClass::NonCrossingQuadFree => "noncrossing-quad-free",
            DissectionClass::NonCrossingTriQuadFree => "noncrossing-tri-quad-free",
        })
    }
}

impl DissectionClass {
    /// Membership by the readable predicates. The degenerate 2-gon belongs
    /// to every class.
    pub fn admits(&self, d: &Dissection) -> bool {
        if d.m < 3 {
            return true;
        }
        let quad_free = d.empty_faces(4).is_empty();
        match self {
            DissectionClass::FramedQuadFree => quad_free && d.is_diagonally_framed(),
            DissectionClass::NonCrossingQuadFree => quad_free && d.is_noncrossing(),
            DissectionClass::NonCrossingTriQuadFree => {
                quad_free && d.is_noncrossing() && d.empty_faces(3).is_empty()
            }
        }
    }
}

/// Upper bounds on the polygon size the enumerator accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationCaps {
    pub noncrossing_max_m: u32,
    pub framed_max_m: u32,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        EnumerationCaps {
            noncrossing_max_m: 11,
            framed_max_m: 9,
        }
    }
}

impl EnumerationCaps {
    pub fn check(&self, m: u32, class: DissectionClass) -> Result<(), PolygonError> {
        let cap = match class {
            DissectionClass::FramedQuadFree => self.framed_max_m,
            _ => self.noncrossing_max_m,
        }
        .min(MAX_SUPPORTED_M);
        if m > cap {
            return Err(PolygonError::CapExceeded { m, cap, class });
        }
        if m < 2 {
            return Err(PolygonError::TooFewVertices(m));
        }
        Ok(())
    }
}

/// One requirement of a class, over bitmasks of diagonals.
#[derive(Debug, Clone, Copy)]
enum Constraint {
    /// Two crossing diagonals may not both be present.
    NoCrossing { pair: u64 },
    /// If both crossing diagonals are present, every frame diagonal must be.
    Framed { pair: u64, frame: u64 },
    /// A face with all `sides` present and no `penetrators` present is forbidden.
    NoEmptyFace { sides: u64, penetrators: u64 },
}

impl Constraint {
    fn support(&self) -> u64 {
        match *self {
            Constraint::NoCrossing { pair } => pair,
            Constraint::Framed { pair, frame } => pair | frame,
            Constraint::NoEmptyFace { sides, penetrators } => sides | penetrators,
        }
    }

    /// Certainly violated given the decided-in and decided-out diagonals.
    fn violated(&self, inc: u64, exc: u64) -> bool {
        match *self {
            Constraint::NoCrossing { pair } => inc & pair == pair,
            Constraint::Framed { pair, frame } => inc & pair == pair && exc & frame != 0,
            Constraint::NoEmptyFace { sides, penetrators } => {
                inc & sides == sides && exc & penetrators == penetrators
            }
        }
    }
}

/// Diagonal indexing and precomputed constraint masks for one polygon size.
#[derive(Debug, Clone)]
pub struct PolygonTables {
    m: u32,
    chords: Vec<Chord>,
    crossings: Vec<(usize, usize)>,
    quads: Vec<(u64, u64)>,
    triangles: Vec<(u64, u64)>,
}

impl PolygonTables {
    pub fn new(m: u32) -> Result<Self, PolygonError> {
        if m < 2 {
            return Err(PolygonError::TooFewVertices(m));
        }
        if m > MAX_SUPPORTED_M {
            return Err(PolygonError::CapExceeded {
                m,
                cap: MAX_SUPPORTED_M,
                class: DissectionClass::FramedQuadFree,
            });
        }
        let mut chords = Vec::new();
        for u in 1..=m {
            for v in u + 2..=m {
                let c = Chord { u, v };
                if c.is_diagonal(m) {
                    chords.push(c);
                }
            }
        }
        let mut crossings = Vec::new();
        for i in 0..chords.len() {
            for j in i + 1..chords.len() {
                if chords[i].crosses(&chords[j]) {
                    crossings.push((i, j));
                }
            }
        }
        let mut t = PolygonTables {
            m,
            chords,
            crossings,
            quads: Vec::new(),
            triangles: Vec::new(),
        };
        t.quads = t.face_masks(4);
        t.triangles = t.face_masks(3);
        Ok(t)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Diagonals in lexicographic `(u, v)` order; bit `i` of a mask is `chords()[i]`.
    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn diagonal_count(&self) -> usize {
        self.chords.len()
    }

    fn bit(&self, c: &Chord) -> Option<u64> {
        self.chords.binary_search(c).ok().map(|i| 1u64 << i)
    }

    /// `(sides, penetrators)` for every `k`-tuple; outer-edge sides are omitted
    /// from `sides` because they are always present.
    fn face_masks(&self, k: usize) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        if self.m < 3 {
            return out;
        }
        for_each_subset(self.m, k, |tuple| {
            let mut sides = 0;
            for i in 0..k {
                sides |= self
                    .bit(&Chord::new(tuple[i], tuple[(i + 1) % k]))
                    .unwrap_or(0);
            }
            let penetrators = self
                .chords
                .iter()
                .enumerate()
                .filter(|(_, c)| !is_side(tuple, c) && penetrates_hull(tuple, c))
                .fold(0, |acc, (i, _)| acc | 1u64 << i);
            out.push((sides, penetrators));
        });
        out
    }

    pub fn mask_of(&self, d: &Dissection) -> u64 {
        debug_assert_eq!(d.m, self.m);
        d.diagonals
            .iter()
            .map(|c| self.bit(c).expect("diagonal of this polygon"))
            .fold(0, |a, b| a | b)
    }

    pub fn dissection_of(&self, mask: u64) -> Dissection {
        Dissection {
            m: self.m,
            diagonals: (0..self.chords.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| self.chords[i])
                .collect(),
        }
    }

    fn constraints(&self, class: DissectionClass) -> Vec<Constraint> {
        let pair = |&(i, j): &(usize, usize)| (1u64 << i) | (1u64 << j);
        let mut out: Vec<Constraint> = match class {
            DissectionClass::FramedQuadFree => self
                .crossings
                .iter()
                .map(|ij| {
                    let (p, q) = (self.chords[ij.0], self.chords[ij.1]);
                    let mut xs = [p.u, p.v, q.u, q.v];
                    xs.sort_unstable();
                    let [a, b, c, d] = xs;
                    let frame = [(a, b), (b, c), (c, d), (a, d)]
                        .iter()
                        .filter_map(|&(x, y)| self.bit(&Chord::new(x, y)))
                        .fold(0, |acc, m| acc | m);
                    Constraint::Framed {
                        pair: pair(ij),
                        frame,
                    }
                })
                .collect(),
            _ => self
                .crossings
                .iter()
                .map(|ij| Constraint::NoCrossing { pair: pair(ij) })
                .collect(),
        };
        let face =
            |&(sides, penetrators): &(u64, u64)| Constraint::NoEmptyFace { sides, penetrators };
        out.extend(self.quads.iter().map(face));
        if class == DissectionClass::NonCrossingTriQuadFree {
            out.extend(self.triangles.iter().map(face));
        }
        out
    }

    /// Membership by mask; agrees with [`DissectionClass::admits`].
    pub fn admits(&self, class: DissectionClass, mask: u64) -> bool {
        if self.m < 3 {
            return true;
        }
        let exc = !mask & self.full_mask();
        !self
            .constraints(class)
            .iter()
            .any(|c| c.violated(mask, exc))
    }

    fn full_mask(&self) -> u64 {
        if self.chords.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.chords.len()) - 1
        }
    }
}

/// Three-state (in / out / undecided) search over diagonals in index order.
struct Search {
    constraints: Vec<Constraint>,
    /// Constraint ids whose support contains each diagonal.
    watching: Vec<Vec<usize>>,
    d: usize,
}

impl Search {
    fn new(tables: &PolygonTables, class: DissectionClass) -> Self {
        let constraints = tables.constraints(class);
        let d = tables.diagonal_count();
        let mut watching = vec![Vec::new(); d];
        for (ci, c) in constraints.iter().enumerate() {
            let s = c.support();
            for (k, w) in watching.iter_mut().enumerate() {
                if s >> k & 1 == 1 {
                    w.push(ci);
                }
            }
        }
        Search {
            constraints,
            watching,
            d,
        }
    }

    /// Constraints with empty support are decided before any diagonal is.
    fn root_violated(&self) -> bool {
        self.constraints
            .iter()
            .any(|c| c.support() == 0 && c.violated(0, 0))
    }

    fn prunes(&self, k: usize, inc: u64, exc: u64) -> bool {
        self.watching[k]
            .iter()
            .any(|&ci| self.constraints[ci].violated(inc, exc))
    }

    /// Extends a partial assignment of diagonals `0..k`, out-branch first.
    fn run(&self, k: usize, inc: u64, exc: u64, out: &mut Vec<u64>) {
        if k == self.d {
            out.push(inc);
            return;
        }
        let bit = 1u64 << k;
        if !self.prunes(k, inc, exc | bit) {
            self.run(k + 1, inc, exc | bit, out);
        }
        if !self.prunes(k, inc | bit, exc) {
            self.run(k + 1, inc | bit, exc, out);
        }
    }

    /// Surviving partial assignments of the first `depth` diagonals.
    fn prefixes(&self, depth: usize) -> Vec<(u64, u64)> {
        let mut level = vec![(0u64, 0u64)];
        for k in 0..depth.min(self.d) {
            let bit = 1u64 << k;
            level = level
                .into_iter()
                .flat_map(|(inc, exc)| [(inc, exc | bit), (inc | bit, exc)])
                .filter(|&(inc, exc)| !self.prunes(k, inc, exc))
                .collect();
        }
        level
    }
}

const SPLIT_DEPTH: usize = 8;

/// Masks of every admitted dissection, in search order. Branches below the
/// split depth run on the current rayon pool and are merged in branch order.
pub fn enumerate_masks(tables: &PolygonTables, class: DissectionClass) -> Vec<u64> {
    if tables.m < 3 {
        return vec![0];
    }
    let search = Search::new(tables, class);
    if search.root_violated() {
        return Vec::new();
    }
    let depth = SPLIT_DEPTH.min(search.d);
    search
        .prefixes(depth)
        .into_par_iter()
        .map(|(inc, exc)| {
            let mut out = Vec::new();
            search.run(depth, inc, exc, &mut out);
            out
        })
        .collect::<Vec<_>>()
        .concat()
}

/// Every dissection of the `m`-gon in `class`, each once, ordered by
/// diagonal count and then by the sorted diagonal list.
///
/// `m = 2` yields the single degenerate dissection.
pub fn enumerate_dissections(
    m: u32,
    class: DissectionClass,
    caps: &EnumerationCaps,
) -> Result<Vec<Dissection>, PolygonError> {
    caps.check(m, class)?;
    let tables = PolygonTables::new(m)?;
    let mut out: Vec<Dissection> = enumerate_masks(&tables, class)
        .into_iter()
        .map(|mask| tables.dissection_of(mask))
        .collect();
    out.sort_by_cached_key(Dissection::sort_key);
    Ok(out)
}

pub fn count_dissections(
    m: u32,
    class: DissectionClass,
    caps: &EnumerationCaps,
) -> Result<usize, PolygonError> {
    caps.check(m, class)?;
    let tables = PolygonTables::new(m)?;
    Ok(enumerate_masks(&tables, class).len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(m: u32, pairs: &[(u32, u32)]) -> Dissection {
        Dissection::from_pairs(m, pairs).unwrap()
    }

    const IMAGE_5123647: &[(u32, u32)] = &[(1, 3), (1, 4), (2, 4), (1, 7)];

    #[test]
    fn rejects_non_diagonals() {
        assert!(Dissection::from_pairs(5, &[(1, 2)]).is_err());
        assert!(Dissection::from_pairs(5, &[(1, 5)]).is_err());
        assert!(Dissection::from_pairs(5, &[(2, 6)]).is_err());
        assert_eq!(Dissection::empty(1), Err(PolygonError::TooFewVertices(1)));
        assert!(Dissection::from_pairs(5, &[(3, 1)]).is_ok());
    }

    #[test]
    fn crossing_examples() {
        let sq = d(4, &[(1, 3), (2, 4)]);
        assert_eq!(
            sq.crossing_pairs(),
            vec![(Chord::new(1, 3), Chord::new(2, 4))]
        );
        assert_eq!(
            d(8, IMAGE_5123647).crossing_pairs(),
            vec![(Chord::new(1, 3), Chord::new(2, 4))]
        );
        assert!(d(8, &[(2, 5)]).crossing_pairs().is_empty());
        assert!(d(8, &[]).crossing_pairs().is_empty());
        assert!(!Chord::new(1, 3).crosses(&Chord::new(3, 5)));
        assert!(!Chord::new(1, 5).crosses(&Chord::new(2, 4)));
    }

    #[test]
    fn noncrossing_examples() {
        assert!(!d(4, &[(1, 3), (2, 4)]).is_noncrossing());
        assert!(d(6, &[]).is_noncrossing());
        assert!(d(8, &[(1, 3), (1, 4), (1, 7)]).is_noncrossing());
    }

    #[test]
    fn framing_examples() {
        assert!(!d(8, &[(1, 3), (2, 4)]).is_diagonally_framed());
        assert!(d(8, IMAGE_5123647).is_diagonally_framed());
        assert!(d(8, &[(1, 3), (1, 4), (1, 7)]).is_diagonally_framed());
        // in a square the frame is all outer edges
        assert!(d(4, &[(1, 3), (2, 4)]).is_diagonally_framed());
    }

    #[test]
    fn face_examples() {
        assert_eq!(d(4, &[]).empty_faces(4), vec![vec![1, 2, 3, 4]]);
        let one = d(4, &[(1, 3)]);
        assert!(one.empty_faces(4).is_empty());
        assert_eq!(one.empty_faces(3), vec![vec![1, 2, 3], vec![1, 3, 4]]);
        assert!(d(8, IMAGE_5123647).empty_faces(4).is_empty());
        assert_eq!(d(3, &[]).empty_faces(3), vec![vec![1, 2, 3]]);
        assert!(d(5, &[]).empty_faces(3).is_empty());
        assert_eq!(d(5, &[]).empty_faces(5), vec![vec![1, 2, 3, 4, 5]]);
        // both diagonals of a square split it into four crossing-bounded
        // regions, none of which is a vertex triangle
        assert!(d(4, &[(1, 3), (2, 4)]).empty_faces(3).is_empty());
    }

    #[test]
    fn enumeration_small_cases() {
        let caps = EnumerationCaps::default();
        for class in [
            DissectionClass::FramedQuadFree,
            DissectionClass::NonCrossingQuadFree,
        ] {
            assert_eq!(
                enumerate_dissections(3, class, &caps).unwrap(),
                vec![d(3, &[])]
            );
        }
        assert_eq!(
            enumerate_dissections(4, DissectionClass::FramedQuadFree, &caps).unwrap(),
            vec![d(4, &[(1, 3)]), d(4, &[(2, 4)]), d(4, &[(1, 3), (2, 4)])]
        );
        assert_eq!(
            enumerate_dissections(4, DissectionClass::NonCrossingQuadFree, &caps).unwrap(),
            vec![d(4, &[(1, 3)]), d(4, &[(2, 4)])]
        );
        assert_eq!(
            enumerate_dissections(8, DissectionClass::NonCrossingTriQuadFree, &caps).unwrap(),
            vec![
                d(8, &[]),
                d(8, &[(1, 5)]),
                d(8, &[(2, 6)]),
                d(8, &[(3, 7)]),
                d(8, &[(4, 8)])
            ]
        );
    }

    #[test]
    fn triangle_is_its_own_empty_face() {
        let caps = EnumerationCaps::default();
        assert!(
            enumerate_dissections(3, DissectionClass::NonCrossingTriQuadFree, &caps)
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn degenerate_digon() {
        let caps = EnumerationCaps::default();
        for class in [
            DissectionClass::FramedQuadFree,
            DissectionClass::NonCrossingQuadFree,
            DissectionClass::NonCrossingTriQuadFree,
        ] {
            assert_eq!(
                enumerate_dissections(2, class, &caps).unwrap(),
                vec![d(2, &[])]
            );
        }
    }

    #[test]
    fn caps_are_enforced() {
        let caps = EnumerationCaps::default();
        assert!(matches!(
            count_dissections(10, DissectionClass::FramedQuadFree, &caps),
            Err(PolygonError::CapExceeded { m: 10, cap: 9, .. })
        ));
        assert!(matches!(
            count_dissections(12, DissectionClass::NonCrossingQuadFree, &caps),
            Err(PolygonError::CapExceeded { m: 12, cap: 11, .. })
        ));
        let wide = EnumerationCaps {
            noncrossing_max_m: 40,
            framed_max_m: 40,
        };
        assert!(matches!(
            count_dissections(13, DissectionClass::NonCrossingQuadFree, &wide),
            Err(PolygonError::CapExceeded {
                cap: MAX_SUPPORTED_M,
                ..
            })
        ));
    }

    #[test]
    fn mask_and_readable_membership_agree() {
        for m in 3..=7 {
            let t = PolygonTables::new(m).unwrap();
            for mask in 0..1u64 << t.diagonal_count() {
                let dis = t.dissection_of(mask);
                assert_eq!(t.mask_of(&dis), mask);
                for class in [
                    DissectionClass::FramedQuadFree,
                    DissectionClass::NonCrossingQuadFree,
                    DissectionClass::NonCrossingTriQuadFree,
                ] {
                    assert_eq!(t.admits(class, mask), class.admits(&dis), "{dis} {class}");
                }
            }
        }
    }

    #[test]
    fn text_format() {
        let x = d(8, IMAGE_5123647);
        assert_eq!(x.to_text(), "m 8\n1 3\n1 4\n1 7\n2 4\n");
        assert_eq!(Dissection::parse_text(&x.to_text()).unwrap(), x);
        let stream = write_stream(&[d(4, &[(1, 3)]), d(3, &[]), x.clone()]);
        assert_eq!(
            parse_stream(&stream).unwrap(),
            vec![d(4, &[(1, 3)]), d(3, &[]), x]
        );
        assert!(matches!(
            Dissection::parse_text("1 3\n"),
            Err(PolygonError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            Dissection::parse_text("m 5\n1 2\n"),
            Err(PolygonError::NotADiagonal { .. })
        ));
    }

    #[test]
    fn subsets_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_subset(5, 3, |t| seen.push(t.to_vec()));
        assert_eq!(seen.len(), 10);
        assert_eq!(seen[0], vec![1, 2, 3]);
        assert_eq!(seen[9], vec![3, 4, 5]);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
    }
}
