//! Interval posets: construction, Hasse diagram, classifiers and the text
//! serialization shared by the CLI and the renderers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::perm::{Permutation, ValueInterval};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("{0} is not an element of the poset")]
    ElementNotInPoset(ValueInterval),
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
}

/// The intervals of a permutation ordered by inclusion.
///
/// Identity is the labelled interval set: two posets are equal iff they have
/// the same `n` and the same intervals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalPoset {
    n: u32,
    intervals: BTreeSet<ValueInterval>,
}

/// A cover relation `child ⋖ parent` of the Hasse diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cover {
    pub parent: ValueInterval,
    pub child: ValueInterval,
}

impl IntervalPoset {
    /// The interval poset of `p`.
    pub fn of(p: &Permutation) -> Self {
        IntervalPoset {
            n: p.len(),
            intervals: p.intervals().into_iter().collect(),
        }
    }

    /// Wraps an arbitrary family without checking that any permutation
    /// realizes it. The trivial intervals are always added.
    pub fn from_family(n: u32, family: impl IntoIterator<Item = ValueInterval>) -> Self {
        let mut intervals: BTreeSet<_> = family.into_iter().collect();
        intervals.extend((1..=n).map(ValueInterval::singleton));
        intervals.insert(ValueInterval::new(1, n));
        IntervalPoset { n, intervals }
    }

    /// Number of minimal elements.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn root(&self) -> ValueInterval {
        ValueInterval::new(1, self.n)
    }

    pub fn contains(&self, v: &ValueInterval) -> bool {
        self.intervals.contains(v)
    }

    /// Elements sorted by `(lo, hi)`.
    pub fn intervals(&self) -> impl Iterator<Item = &ValueInterval> + '_ {
        self.intervals.iter()
    }

    /// Direct descendants of `v`, sorted by ascending minimum.
    pub fn hasse_children(&self, v: &ValueInterval) -> Result<Vec<ValueInterval>, PosetError> {
        if !self.contains(v) {
            return Err(PosetError::ElementNotInPoset(*v));
        }
        Ok(children_in(&self.intervals, v))
    }

    /// All cover relations, grouped by parent in `(lo, hi)` order, children
    /// ascending by minimum.
    pub fn hasse_edges(&self) -> Vec<Cover> {
        self.intervals
            .iter()
            .flat_map(|parent| {
                children_in(&self.intervals, parent)
                    .into_iter()
                    .map(move |child| Cover {
                        parent: *parent,
                        child,
                    })
            })
            .collect()
    }

    /// True iff every element other than `[1, n]` has exactly one parent.
    pub fn is_tree(&self) -> bool {
        let mut parents: BTreeMap<ValueInterval, usize> = BTreeMap::new();
        for c in self.hasse_edges() {
            *parents.entry(c.child).or_default() += 1;
        }
        let root = self.root();
        self.intervals
            .iter()
            .filter(|v| **v != root)
            .all(|v| parents.get(v) == Some(&1))
    }

    /// Child count → number of elements having that many direct descendants.
    pub fn children_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for v in &self.intervals {
            *hist
                .entry(children_in(&self.intervals, v).len())
                .or_default() += 1;
        }
        hist
    }

    /// `"n|lo-hi,lo-hi,..."` with pairs sorted by `(lo, hi)`.
    pub fn canonical_key(&self) -> String {
        let mut key = format!("{}|", self.n);
        for (i, v) in self.intervals.iter().enumerate() {
            if i > 0 {
                key.push(',');
            }
            let _ = write!(key, "{}-{}", v.lo, v.hi);
        }
        key
    }

    /// Text form: header `n <n>`, then one `lo hi` line per interval.
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for v in &self.intervals {
            let _ = writeln!(out, "{} {}", v.lo, v.hi);
        }
        out
    }

    /// Inverse of [`IntervalPoset::to_text`]. Blank lines and `#` comments are
    /// skipped; trivial intervals missing from the text are added.
    pub fn parse_text(text: &str) -> Result<Self, PosetError> {
        let (n, family) = parse_family_text(text, None)?;
        let n = n.ok_or(PosetError::Malformed {
            line: 0,
            reason: "missing header \"n <n>\"".into(),
        })?;
        Ok(IntervalPoset::from_family(n, family))
    }
}

/// Parses `lo hi` lines with an optional `n <n>` header. When `n_hint` is
/// given it takes the place of a missing header.
pub fn parse_family_text(
    text: &str,
    n_hint: Option<u32>,
) -> Result<(Option<u32>, BTreeSet<ValueInterval>), PosetError> {
    let mut n = n_hint;
    let mut family = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = |reason: &str| PosetError::Malformed {
            line: line_no,
            reason: format!("{reason}: {line:?}"),
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["n", v] => {
                let v: u32 = v.parse().map_err(|_| malformed("bad size"))?;
                if v == 0 {
                    return Err(malformed("size must be positive"));
                }
                n = Some(v);
            }
            [a, b] => {
                let lo: u32 = a.parse().map_err(|_| malformed("bad bound"))?;
                let hi: u32 = b.parse().map_err(|_| malformed("bad bound"))?;
                if lo == 0 || lo > hi {
                    return Err(malformed("expected 1 <= lo <= hi"));
                }
                family.insert(ValueInterval::new(lo, hi));
            }
            _ => return Err(malformed("expected \"lo hi\"")),
        }
    }
    if let Some(n) = n {
        if let Some(v) = family.iter().find(|v| v.hi > n) {
            return Err(PosetError::Malformed {
                line: 0,
                reason: format!("{v} exceeds n = {n}"),
            });
        }
    }
    Ok((n, family))
}

/// Maximal members of `family` strictly inside `v`, ascending by minimum.
fn children_in(family: &BTreeSet<ValueInterval>, v: &ValueInterval) -> Vec<ValueInterval> {
    let mut below: Vec<ValueInterval> = family
        .iter()
        .filter(|u| u.is_strict_subset_of(v))
        .copied()
        .collect();
    // Anything contained in a non-maximal member is also contained in a
    // maximal one, so checking against kept members suffices.
    below.sort_by_key(|u| std::cmp::Reverse(u.len()));
    let mut kept: Vec<ValueInterval> = Vec::new();
    for u in below {
        if !kept.iter().any(|k| u.is_strict_subset_of(k)) {
            kept.push(u);
        }
    }
    kept.sort();
    kept
}

/// Which derived set was missing from a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetOp {
    Union,
    Intersection,
    LeftMinusRight,
    RightMinusLeft,
}

impl fmt::Display for SetOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SetOp::Union => "I∪J",
            SetOp::Intersection => "I∩J",
            SetOp::LeftMinusRight => "I−J",
            SetOp::RightMinusLeft => "J−I",
        })
    }
}

/// Outcome of [`validate_interval_family`]. `Pass` means "not refuted":
/// the checked conditions are necessary, not sufficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyVerdict {
    Pass,
    OutOfRange(ValueInterval),
    MissingTrivial(ValueInterval),
    Closure {
        left: ValueInterval,
        right: ValueInterval,
        op: SetOp,
        missing: ValueInterval,
    },
    ThreeChildren {
        element: ValueInterval,
        children: Vec<ValueInterval>,
    },
}

impl FamilyVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, FamilyVerdict::Pass)
    }
}

impl fmt::Display for FamilyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyVerdict::Pass => f.write_str("pass (not refuted)"),
            FamilyVerdict::OutOfRange(v) => write!(f, "fail: {v} out of range"),
            FamilyVerdict::MissingTrivial(v) => write!(f, "fail: trivial interval {v} missing"),
            FamilyVerdict::Closure {
                left,
                right,
                op,
                missing,
            } => write!(
                f,
                "fail: closure, I={left}, J={right}, missing {op}={missing}"
            ),
            FamilyVerdict::ThreeChildren { element, children } => {
                write!(f, "fail: {element} has exactly 3 direct descendants:")?;
                for c in children {
                    write!(f, " {c}")?;
                }
                Ok(())
            }
        }
    }
}

/// Checks necessary conditions for `family` to be the interval set of a
/// permutation of order `n`:
///
/// 1. all singletons and `[1, n]` are present;
/// 2. for every properly overlapping pair `I`, `J`, the sets `I∪J`, `I∩J`,
///    `I−J` and `J−I` are present;
/// 3. no element has exactly three direct descendants.
///
/// Returns the first violation found, checking in that order.
pub fn validate_interval_family(family: &BTreeSet<ValueInterval>, n: u32) -> FamilyVerdict {
    if let Some(v) = family.iter().find(|v| v.lo == 0 || v.lo > v.hi || v.hi > n) {
        return FamilyVerdict::OutOfRange(*v);
    }
    let trivial = (1..=n)
        .map(ValueInterval::singleton)
        .chain(std::iter::once(ValueInterval::new(1, n)));
    for t in trivial {
        if !family.contains(&t) {
            return FamilyVerdict::MissingTrivial(t);
        }
    }
    let members: Vec<_> = family.iter().copied().collect();
    for (a, i) in members.iter().enumerate() {
        for j in &members[a + 1..] {
            if !i.properly_overlaps(j) {
                continue;
            }
            // Sorted by (lo, hi): overlapping partners satisfy i.lo < j.lo <= i.hi < j.hi.
            let derived = [
                (SetOp::Union, ValueInterval::new(i.lo, j.hi)),
                (SetOp::Intersection, ValueInterval::new(j.lo, i.hi)),
                (SetOp::LeftMinusRight, ValueInterval::new(i.lo, j.lo - 1)),
                (SetOp::RightMinusLeft, ValueInterval::new(i.hi + 1, j.hi)),
            ];
            for (op, missing) in derived {
                if !family.contains(&missing) {
                    return FamilyVerdict::Closure {
                        left: *i,
                        right: *j,
                        op,
                        missing,
                    };
                }
            }
        }
    }
    for v in family {
        let children = children_in(family, v);
        if children.len() == 3 {
            return FamilyVerdict::ThreeChildren {
                element: *v,
                children,
            };
        }
    }
    FamilyVerdict::Pass
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poset(s: &str) -> IntervalPoset {
        IntervalPoset::of(&s.parse().unwrap())
    }

    fn iv(lo: u32, hi: u32) -> ValueInterval {
        ValueInterval::new(lo, hi)
    }

    fn singletons(n: u32) -> BTreeSet<ValueInterval> {
        (1..=n).map(ValueInterval::singleton).collect()
    }

    #[test]
    fn poset_of_examples() {
        let p = poset("5123647");
        let mut expected = singletons(7);
        expected.extend([iv(1, 2), iv(2, 3), iv(1, 3), iv(1, 6), iv(1, 7)]);
        assert_eq!(p.intervals().copied().collect::<BTreeSet<_>>(), expected);

        let p = poset("2413");
        let mut expected = singletons(4);
        expected.insert(iv(1, 4));
        assert_eq!(p.intervals().copied().collect::<BTreeSet<_>>(), expected);

        assert_eq!(
            poset("1").intervals().copied().collect::<Vec<_>>(),
            vec![iv(1, 1)]
        );
    }

    #[test]
    fn children_follow_the_plane_embedding() {
        let p = poset("5123647");
        assert_eq!(
            p.hasse_children(&iv(1, 6)).unwrap(),
            vec![iv(1, 3), iv(4, 4), iv(5, 5), iv(6, 6)]
        );
        assert_eq!(
            p.hasse_children(&iv(1, 3)).unwrap(),
            vec![iv(1, 2), iv(2, 3)]
        );
        assert_eq!(
            p.hasse_children(&iv(1, 7)).unwrap(),
            vec![iv(1, 6), iv(7, 7)]
        );
        assert!(poset("2413").hasse_children(&iv(3, 3)).unwrap().is_empty());
        assert_eq!(
            p.hasse_children(&iv(2, 4)),
            Err(PosetError::ElementNotInPoset(iv(2, 4)))
        );
    }

    #[test]
    fn tree_detection() {
        assert!(poset("2413").is_tree());
        assert!(!poset("5123647").is_tree());
        assert!(poset("1").is_tree());
        assert!(poset("21").is_tree());
        assert!(!poset("123").is_tree());
        assert!(poset("213").is_tree());
    }

    #[test]
    fn histograms() {
        let h = |s: &str| {
            poset(s)
                .children_histogram()
                .into_iter()
                .collect::<Vec<_>>()
        };
        assert_eq!(h("2413"), vec![(0, 4), (4, 1)]);
        assert_eq!(h("5123647"), vec![(0, 7), (2, 4), (4, 1)]);
        assert_eq!(h("1"), vec![(0, 1)]);
    }

    #[test]
    fn canonical_keys() {
        assert_eq!(poset("2413").canonical_key(), "4|1-1,1-4,2-2,3-3,4-4");
        assert_eq!(poset("1").canonical_key(), "1|1-1");
        assert_eq!(
            poset("5123647").canonical_key(),
            poset("4612357").canonical_key()
        );
        assert_ne!(poset("123").canonical_key(), poset("213").canonical_key());
    }

    #[test]
    fn text_roundtrip() {
        let p = poset("5123647");
        let text = p.to_text();
        assert!(text.starts_with("n 7\n1 1\n1 2\n"));
        assert_eq!(IntervalPoset::parse_text(&text).unwrap(), p);
        assert!(IntervalPoset::parse_text("1 1\n").is_err());
        assert!(matches!(
            IntervalPoset::parse_text("n 3\n1 x\n"),
            Err(PosetError::Malformed { line: 2, .. })
        ));
        assert!(IntervalPoset::parse_text("n 3\n2 5\n").is_err());
    }

    #[test]
    fn validation_closure_failure() {
        let mut fam = singletons(4);
        fam.extend([iv(1, 2), iv(2, 3), iv(1, 4)]);
        assert_eq!(
            validate_interval_family(&fam, 4),
            FamilyVerdict::Closure {
                left: iv(1, 2),
                right: iv(2, 3),
                op: SetOp::Union,
                missing: iv(1, 3)
            }
        );
    }

    #[test]
    fn validation_three_children_failure() {
        let mut fam = singletons(4);
        fam.extend([iv(1, 2), iv(1, 4)]);
        assert_eq!(
            validate_interval_family(&fam, 4),
            FamilyVerdict::ThreeChildren {
                element: iv(1, 4),
                children: vec![iv(1, 2), iv(3, 3), iv(4, 4)]
            }
        );
    }

    #[test]
    fn validation_passes_fig1_family() {
        let p = poset("5123647");
        let fam: BTreeSet<_> = p.intervals().copied().collect();
        assert!(validate_interval_family(&fam, 7).passed());
    }

    #[test]
    fn validation_trivial_and_range() {
        let fam: BTreeSet<_> = singletons(3);
        assert_eq!(
            validate_interval_family(&fam, 3),
            FamilyVerdict::MissingTrivial(iv(1, 3))
        );
        let mut fam = singletons(3);
        fam.insert(iv(1, 3));
        fam.insert(iv(2, 4));
        assert_eq!(
            validate_interval_family(&fam, 3),
            FamilyVerdict::OutOfRange(iv(2, 4))
        );
    }

    #[test]
    fn closure_difference_naming() {
        // I=[1,3], J=[3,4] with [1,2] missing
        let mut fam = singletons(5);
        fam.extend([iv(1, 3), iv(3, 4), iv(1, 4), iv(1, 5)]);
        assert_eq!(
            validate_interval_family(&fam, 5),
            FamilyVerdict::Closure {
                left: iv(1, 3),
                right: iv(3, 4),
                op: SetOp::LeftMinusRight,
                missing: iv(1, 2)
            }
        );
    }
}
