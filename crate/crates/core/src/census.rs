//! Exhaustive verification over the symmetric group: distinct-poset counts,
//! dissection counts, count comparisons, realization, identity checks and
//! b-file cross-checks.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bijection::{classify_image, phi};
use crate::perm::{
    all_intervals, has_sum_interval, is_block_wise_simple_with, is_simple, Permutation, SumParts,
    ValueInterval, ORDER_ONE_IS_BLOCK_WISE_SIMPLE,
};
use crate::polygon::{self, Chord, DissectionClass, EnumerationCaps, PolygonError};
use crate::poset::{validate_interval_family, FamilyVerdict, IntervalPoset};

/// Index `k` of the triangle-and-quadrilateral-free sequence counts order
/// `k + 3`: its first term is order 4, the pentagon.
pub const BLOCKWISE_SEQUENCE_OFFSET: i64 = 3;
/// Index `k` of the quadrilateral-free sequence counts the `(k+2)`-gon, i.e.
/// order `k + 1`.
pub const TREE_SEQUENCE_OFFSET: i64 = 1;
/// Index `k` of the interval-poset sequence is the order itself.
pub const ALL_SEQUENCE_OFFSET: i64 = 0;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("{what} with n = {n} exceeds the configured cap of {cap}")]
    CapExceeded {
        what: &'static str,
        n: u32,
        cap: u32,
    },
    #[error(transparent)]
    Polygon(#[from] PolygonError),
    #[error("malformed b-file line {0}")]
    MalformedLine(usize),
    #[error("n must be at least 1")]
    ZeroOrder,
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

impl CensusError {
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(
            self,
            CensusError::CapExceeded { .. }
                | CensusError::Polygon(PolygonError::CapExceeded { .. })
        )
    }
}

/// Which permutations contribute posets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    All,
    Tree,
    #[serde(rename = "blockwise")]
    BlockwiseSimple,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::All, Family::Tree, Family::BlockwiseSimple];

    /// The dissection class the family is paired with at `m = n + 1`.
    pub fn dissection_class(&self) -> DissectionClass {
        match self {
            Family::All => DissectionClass::FramedQuadFree,
            Family::Tree => DissectionClass::NonCrossingQuadFree,
            Family::BlockwiseSimple => DissectionClass::NonCrossingTriQuadFree,
        }
    }

    pub fn sequence_offset(&self) -> i64 {
        match self {
            Family::All => ALL_SEQUENCE_OFFSET,
            Family::Tree => TREE_SEQUENCE_OFFSET,
            Family::BlockwiseSimple => BLOCKWISE_SEQUENCE_OFFSET,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::All => "all",
            Family::Tree => "tree",
            Family::BlockwiseSimple => "blockwise",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Family::All),
            "tree" => Ok(Family::Tree),
            "blockwise" | "block-wise" => Ok(Family::BlockwiseSimple),
            _ => Err(format!(
                "unknown class {s:?} (expected all, tree or blockwise)"
            )),
        }
    }
}

/// Size limits for the factorial searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusCaps {
    pub all_max_n: u32,
    pub tree_max_n: u32,
    pub blockwise_max_n: u32,
    pub realize_max_n: u32,
    pub identities_max_n: u32,
    pub polygon: EnumerationCaps,
}

impl Default for CensusCaps {
    fn default() -> Self {
        CensusCaps {
            all_max_n: 8,
            tree_max_n: 8,
            blockwise_max_n: 10,
            realize_max_n: 8,
            identities_max_n: 8,
            polygon: EnumerationCaps::default(),
        }
    }
}

impl CensusCaps {
    pub fn family_cap(&self, family: Family) -> u32 {
        match family {
            Family::All => self.all_max_n,
            Family::Tree => self.tree_max_n,
            Family::BlockwiseSimple => self.blockwise_max_n,
        }
    }

    /// Raises every permutation-side cap to at least `n` (and the polygon
    /// caps to `n + 1`).
    pub fn raised_to(mut self, n: u32) -> Self {
        self.all_max_n = self.all_max_n.max(n);
        self.tree_max_n = self.tree_max_n.max(n);
        self.blockwise_max_n = self.blockwise_max_n.max(n);
        self.realize_max_n = self.realize_max_n.max(n);
        self.identities_max_n = self.identities_max_n.max(n);
        self.polygon.noncrossing_max_m = self.polygon.noncrossing_max_m.max(n + 1);
        self.polygon.framed_max_m = self.polygon.framed_max_m.max(n + 1);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusConfig {
    pub caps: CensusCaps,
    /// Worker threads; `None` uses the available parallelism.
    pub threads: Option<usize>,
    pub order_one_block_wise_simple: bool,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            caps: CensusCaps::default(),
            threads: None,
            order_one_block_wise_simple: ORDER_ONE_IS_BLOCK_WISE_SIMPLE,
        }
    }
}

/// Distinct posets of one family and order, each with its lexicographically
/// least witness permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetCensus {
    pub n: u32,
    pub family: Family,
    pub witnesses: BTreeMap<String, Permutation>,
}

impl PosetCensus {
    pub fn count(&self) -> usize {
        self.witnesses.len()
    }

    pub fn posets(&self) -> impl Iterator<Item = IntervalPoset> + '_ {
        self.witnesses.values().map(IntervalPoset::of)
    }
}

/// One row of a [`CensusReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: u32,
    pub class: Family,
    pub dissection_class: DissectionClass,
    pub poset_count: u64,
    pub dissection_count: u64,
    #[serde(rename = "match")]
    pub matches: bool,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conventions {
    /// Polygon size paired with order `n`.
    pub polygon_vertices: String,
    pub order_one_block_wise_simple: bool,
    /// Order-1 block-wise count under the opposite convention.
    pub order_one_alternative_count: u64,
    /// Order of the first term of the block-wise sequence.
    pub blockwise_sequence_first_order: i64,
    /// The `n = 1` image is the 2-gon, counted once in every class.
    pub degenerate_two_gon: String,
}

impl Conventions {
    pub fn new(order_one_block_wise_simple: bool) -> Self {
        Conventions {
            polygon_vertices: "m = n + 1".into(),
            order_one_block_wise_simple,
            order_one_alternative_count: if order_one_block_wise_simple { 0 } else { 1 },
            blockwise_sequence_first_order: 1 + BLOCKWISE_SEQUENCE_OFFSET,
            degenerate_two_gon: "counted once".into(),
        }
    }
}

/// Census rows sorted by `n`, plus the conventions they were computed under.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub rows: Vec<CensusRow>,
    pub conventions: Conventions,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sequence_check: Option<SequenceAlignment>,
}

impl CensusReport {
    /// Every row matches and the sequence check, if any, agrees.
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
            && self.sequence_check.as_ref().is_none_or(|s| s.all_match())
    }

    /// Aligned-column text form.
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "{:>3}  {:<10} {:>12} {:>16}  {:<8} {:>10}\n",
            "n", "class", "poset_count", "dissection_count", "match", "elapsed_ms"
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:>3}  {:<10} {:>12} {:>16}  {:<8} {:>10}",
                r.n,
                r.class.to_string(),
                r.poset_count,
                r.dissection_count,
                if r.matches { "match" } else { "MISMATCH" },
                r.elapsed_ms
            );
        }
        let c = &self.conventions;
        let _ = writeln!(
            out,
            "conventions: {}; order 1 block-wise simple = {} (alternative count {}); \
             block-wise sequence starts at order {}; 2-gon {}",
            c.polygon_vertices,
            c.order_one_block_wise_simple,
            c.order_one_alternative_count,
            c.blockwise_sequence_first_order,
            c.degenerate_two_gon
        );
        if let Some(s) = &self.sequence_check {
            out.push_str(&s.to_table());
        }
        out
    }
}

/// One exhaustive identity check with its first counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub n: u32,
    pub checked: u64,
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={:<2} {:<44} {} ({} checked)",
            self.n,
            self.name,
            if self.passed { "pass" } else { "FAIL" },
            self.checked
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, " counterexample: {c}")?;
        }
        Ok(())
    }
}

/// The Φ-images of a family's posets against the enumerated class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageComparison {
    pub n: u32,
    pub family: Family,
    pub images: usize,
    pub enumerated: usize,
    /// Enumerated dissections that are not the image of any poset.
    pub not_hit: Vec<polygon::Dissection>,
    /// Images that fall outside the enumerated class.
    pub outside: Vec<polygon::Dissection>,
}

impl ImageComparison {
    pub fn equal(&self) -> bool {
        self.not_hit.is_empty() && self.outside.is_empty() && self.images == self.enumerated
    }
}

/// The verification engine. Work runs on a private thread pool; results do
/// not depend on its size.
pub struct Census {
    config: CensusConfig,
    pool: rayon::ThreadPool,
}

impl Census {
    pub fn new(config: CensusConfig) -> Result<Self, CensusError> {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(t) = config.threads {
            builder = builder.num_threads(t);
        }
        let pool = builder
            .build()
            .map_err(|e| CensusError::ThreadPool(e.to_string()))?;
        Ok(Census { config, pool })
    }

    pub fn config(&self) -> &CensusConfig {
        &self.config
    }

    fn check_cap(&self, what: &'static str, n: u32, cap: u32) -> Result<(), CensusError> {
        if n == 0 {
            return Err(CensusError::ZeroOrder);
        }
        if n > cap {
            return Err(CensusError::CapExceeded { what, n, cap });
        }
        Ok(())
    }

    fn admits(&self, family: Family, p: &[u32]) -> bool {
        match family {
            Family::All => true,
            Family::Tree => {
                IntervalPoset::of(&Permutation::from_vec_unchecked(p.to_vec())).is_tree()
            }
            Family::BlockwiseSimple => {
                is_block_wise_simple_with(p, self.config.order_one_block_wise_simple)
            }
        }
    }

    /// Distinct posets over `S_n` whose permutations (or posets) belong to `family`.
    pub fn distinct_posets(&self, n: u32, family: Family) -> Result<PosetCensus, CensusError> {
        self.check_cap("poset census", n, self.config.caps.family_cap(family))?;
        let blocks = self.pool.install(|| {
            fold_permutations(
                n,
                BTreeMap::new,
                |acc: &mut BTreeMap<String, Permutation>, p| {
                    if !self.admits(family, p) {
                        return;
                    }
                    let perm = Permutation::from_vec_unchecked(p.to_vec());
                    let key = IntervalPoset::of(&perm).canonical_key();
                    acc.entry(key).or_insert(perm);
                },
            )
        });
        let mut witnesses = BTreeMap::new();
        // Blocks are in lexicographic order, so the first witness seen is least.
        for block in blocks {
            for (k, p) in block {
                witnesses.entry(k).or_insert(p);
            }
        }
        Ok(PosetCensus {
            n,
            family,
            witnesses,
        })
    }

    pub fn count_dissections(&self, m: u32, class: DissectionClass) -> Result<usize, CensusError> {
        let caps = self.config.caps.polygon;
        Ok(self
            .pool
            .install(|| polygon::count_dissections(m, class, &caps))?)
    }

    pub fn enumerate_dissections(
        &self,
        m: u32,
        class: DissectionClass,
    ) -> Result<Vec<polygon::Dissection>, CensusError> {
        let caps = self.config.caps.polygon;
        Ok(self
            .pool
            .install(|| polygon::enumerate_dissections(m, class, &caps))?)
    }

    /// Poset count against the paired dissection count at `m = n + 1`.
    pub fn compare_counts(&self, n: u32, family: Family) -> Result<CensusRow, CensusError> {
        let start = Instant::now();
        let poset_count = self.distinct_posets(n, family)?.count() as u64;
        let class = family.dissection_class();
        let dissection_count = self.count_dissections(n + 1, class)? as u64;
        Ok(CensusRow {
            n,
            class: family,
            dissection_class: class,
            poset_count,
            dissection_count,
            matches: poset_count == dissection_count,
            elapsed_ms: start.elapsed().as_millis() as u64,
        })
    }

    /// Rows for `min_n..=max_n`.
    pub fn report(
        &self,
        family: Family,
        min_n: u32,
        max_n: u32,
    ) -> Result<CensusReport, CensusError> {
        let rows = (min_n.max(1)..=max_n)
            .map(|n| self.compare_counts(n, family))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CensusReport {
            rows,
            conventions: Conventions::new(self.config.order_one_block_wise_simple),
            sequence_check: None,
        })
    }

    /// Φ-images of the family's posets against the enumerated dissections.
    pub fn compare_images(&self, n: u32, family: Family) -> Result<ImageComparison, CensusError> {
        let census = self.distinct_posets(n, family)?;
        let enumerated = self.enumerate_dissections(n + 1, family.dissection_class())?;
        let images: BTreeSet<Vec<Chord>> = census
            .posets()
            .map(|p| phi(&p).diagonals().copied().collect())
            .collect();
        let enumerated_set: BTreeSet<Vec<Chord>> = enumerated
            .iter()
            .map(|d| d.diagonals().copied().collect())
            .collect();
        let to_dissection = |cs: &Vec<Chord>| {
            polygon::Dissection::new(n + 1, cs.iter().copied()).expect("valid diagonals")
        };
        Ok(ImageComparison {
            n,
            family,
            images: images.len(),
            enumerated: enumerated.len(),
            not_hit: enumerated_set
                .difference(&images)
                .map(to_dissection)
                .collect(),
            outside: images
                .difference(&enumerated_set)
                .map(to_dissection)
                .collect(),
        })
    }

    /// Lexicographically least permutation of order `n` whose interval set
    /// is exactly `family`.
    pub fn realize(
        &self,
        family: &BTreeSet<ValueInterval>,
        n: u32,
    ) -> Result<Option<Permutation>, CensusError> {
        self.check_cap("realize", n, self.config.caps.realize_max_n)?;
        Ok(realize_unbounded(family, n))
    }

    /// Exhaustive structural checks over `S_n`.
    pub fn check_identities(&self, n: u32) -> Result<Vec<CheckResult>, CensusError> {
        self.check_cap("identity check", n, self.config.caps.identities_max_n)?;
        #[derive(Default)]
        struct Acc {
            checked: u64,
            simple_keys: BTreeMap<String, Permutation>,
            closure: Option<String>,
            three: Option<String>,
            tree_sum: Option<String>,
        }
        let blocks = self.pool.install(|| {
            fold_permutations(n, Acc::default, |acc: &mut Acc, p| {
                acc.checked += 1;
                let perm = Permutation::from_vec_unchecked(p.to_vec());
                let poset = IntervalPoset::of(&perm);
                if is_simple(p) && acc.simple_keys.len() < 2 {
                    acc.simple_keys
                        .entry(poset.canonical_key())
                        .or_insert_with(|| perm.clone());
                }
                if acc.closure.is_none() || acc.three.is_none() {
                    let fam: BTreeSet<_> = poset.intervals().copied().collect();
                    match validate_interval_family(&fam, n) {
                        FamilyVerdict::Pass => {}
                        v @ FamilyVerdict::ThreeChildren { .. } => {
                            acc.three.get_or_insert(format!("{perm}: {v}"));
                        }
                        v => {
                            acc.closure.get_or_insert(format!("{perm}: {v}"));
                        }
                    }
                }
                if acc.tree_sum.is_none() {
                    let tree = poset.is_tree();
                    let triple = has_sum_interval(p, SumParts::Three);
                    if tree == triple {
                        acc.tree_sum.get_or_insert(format!(
                            "{perm}: tree = {tree}, triple-sum interval = {triple}"
                        ));
                    }
                }
            })
        });
        let mut checked = 0;
        let mut simple_keys = BTreeMap::new();
        let (mut closure, mut three, mut tree_sum) = (None, None, None);
        for b in blocks {
            checked += b.checked;
            for (k, p) in b.simple_keys {
                simple_keys.entry(k).or_insert(p);
            }
            closure = closure.or(b.closure);
            three = three.or(b.three);
            tree_sum = tree_sum.or(b.tree_sum);
        }
        let simple_cx = (simple_keys.len() > 1).then(|| {
            simple_keys
                .iter()
                .map(|(k, p)| format!("{p} -> {k}"))
                .collect::<Vec<_>>()
                .join("; ")
        });
        let result = |name: &str, cx: Option<String>| CheckResult {
            name: name.to_string(),
            n,
            checked,
            passed: cx.is_none(),
            counterexample: cx,
        };
        Ok(vec![
            result("simple permutations share one poset", simple_cx),
            result("overlap closure (union, meet, differences)", closure),
            result("no element with exactly 3 children", three),
            result("tree iff no triple-sum interval", tree_sum),
        ])
    }

    /// Checks the forward direction of the family's correspondence on every
    /// admitted permutation of order `n`: the image lies in the paired class.
    pub fn check_forward(&self, n: u32, family: Family) -> Result<CheckResult, CensusError> {
        self.check_cap("forward check", n, self.config.caps.family_cap(family))?;
        let name = match family {
            Family::All => "image framed and quad-free",
            Family::Tree => "tree => image non-crossing and quad-free",
            Family::BlockwiseSimple => "block-wise => image non-crossing, tri/quad-free",
        };
        if n < 2 {
            return Ok(CheckResult {
                name: name.into(),
                n,
                checked: 0,
                passed: true,
                counterexample: None,
            });
        }
        let blocks = self.pool.install(|| {
            fold_permutations(
                n,
                || (0u64, HashSet::new(), None::<String>),
                |(checked, seen, cx), p| {
                    if cx.is_some() || !self.admits(family, p) {
                        return;
                    }
                    *checked += 1;
                    let perm = Permutation::from_vec_unchecked(p.to_vec());
                    let poset = IntervalPoset::of(&perm);
                    if !seen.insert(poset.canonical_key()) {
                        return;
                    }
                    let c = classify_image(&poset).expect("n >= 2");
                    let ok = match family {
                        Family::All => c.diagonally_framed && c.quad_free,
                        Family::Tree => c.noncrossing && c.quad_free,
                        Family::BlockwiseSimple => c.noncrossing && c.quad_free && c.triangle_free,
                    };
                    if !ok {
                        *cx = Some(format!("{perm} -> {} ({c:?})", phi(&poset)));
                    }
                },
            )
        });
        let mut checked = 0;
        let mut counterexample = None;
        for (c, _, cx) in blocks {
            checked += c;
            counterexample = counterexample.or(cx);
        }
        Ok(CheckResult {
            name: name.into(),
            n,
            checked,
            passed: counterexample.is_none(),
            counterexample,
        })
    }
}

/// Unbounded factorial search behind [`Census::realize`].
fn realize_unbounded(family: &BTreeSet<ValueInterval>, n: u32) -> Option<Permutation> {
    if n == 0 {
        return None;
    }
    let target: Vec<ValueInterval> = family.iter().copied().collect();
    // Every permutation has exactly n singletons plus [1, n] among its
    // intervals, so families without them are rejected up front.
    let trivial_ok = (1..=n).all(|v| family.contains(&ValueInterval::singleton(v)))
        && family.contains(&ValueInterval::new(1, n));
    if !trivial_ok {
        return None;
    }
    let mut buf: Vec<u32> = (1..=n).collect();
    loop {
        if all_intervals(&buf) == target {
            return Some(Permutation::from_vec_unchecked(buf));
        }
        if !next_permutation(&mut buf) {
            return None;
        }
    }
}

/// Advances `xs` to the next permutation in lexicographic order; returns
/// `false` (leaving `xs` sorted ascending) after the last one.
pub fn next_permutation(xs: &mut [u32]) -> bool {
    let n = xs.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        xs.reverse();
        return false;
    }
    let mut j = n - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Folds every permutation of order `n` into per-block accumulators, blocks
/// keyed by the first two entries and returned in lexicographic order.
/// Within a block permutations are visited lexicographically.
pub fn fold_permutations<T, I, F>(n: u32, init: I, step: F) -> Vec<T>
where
    T: Send,
    I: Fn() -> T + Sync,
    F: Fn(&mut T, &[u32]) + Sync,
{
    let prefix_len = (n as usize).saturating_sub(1).min(2);
    let mut prefixes: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..prefix_len {
        prefixes = prefixes
            .into_iter()
            .flat_map(|p| {
                (1..=n)
                    .filter(|v| !p.contains(v))
                    .map(|v| {
                        let mut q = p.clone();
                        q.push(v);
                        q
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    prefixes
        .into_par_iter()
        .map(|prefix| {
            let mut acc = init();
            let mut buf = prefix.clone();
            buf.extend((1..=n).filter(|v| !prefix.contains(v)));
            loop {
                step(&mut acc, &buf);
                if !next_permutation(&mut buf[prefix_len..]) {
                    break;
                }
            }
            acc
        })
        .collect()
}

/// Parses an OEIS b-file: `index value` lines, `#` comments and blank lines
/// skipped.
pub fn load_bfile(text: &str) -> Result<Vec<(i64, u128)>, CensusError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let parsed = match (fields.next(), fields.next(), fields.next()) {
            (Some(i), Some(v), None) => i.parse::<i64>().ok().zip(v.parse::<u128>().ok()),
            _ => None,
        };
        out.push(parsed.ok_or(CensusError::MalformedLine(idx + 1))?);
    }
    Ok(out)
}

/// One order of a census lined up against a sequence term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlignmentRow {
    pub n: u32,
    pub index: i64,
    pub sequence_value: Option<u128>,
    pub computed: u64,
    /// `None` when the sequence has no term at this index.
    pub matches: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceAlignment {
    /// Order `n` is compared with sequence index `n - offset`.
    pub offset: i64,
    pub rows: Vec<AlignmentRow>,
    /// The raw sequence as loaded.
    pub terms: Vec<(i64, u128)>,
}

impl SequenceAlignment {
    pub fn compared(&self) -> usize {
        self.rows.iter().filter(|r| r.matches.is_some()).count()
    }

    /// At least one term compared and none disagree.
    pub fn all_match(&self) -> bool {
        self.compared() > 0 && self.rows.iter().all(|r| r.matches != Some(false))
    }

    pub fn to_table(&self) -> String {
        let mut out = format!(
            "sequence alignment: order n <-> index n - {}\n{:>3} {:>6} {:>14} {:>14}  status\n",
            self.offset, "n", "index", "sequence", "computed"
        );
        for r in &self.rows {
            let seq = r.sequence_value.map_or("-".to_string(), |v| v.to_string());
            let status = match r.matches {
                Some(true) => "match",
                Some(false) => "MISMATCH",
                None => "absent",
            };
            let _ = writeln!(
                out,
                "{:>3} {:>6} {:>14} {:>14}  {status}",
                r.n, r.index, seq, r.computed
            );
        }
        let raw: Vec<String> = self.terms.iter().map(|(i, v)| format!("{i}:{v}")).collect();
        let _ = writeln!(out, "raw sequence: {}", raw.join(" "));
        out
    }
}

/// Lines up poset counts against sequence terms with `n = index + offset`.
pub fn align_with_sequence(
    rows: &[CensusRow],
    terms: &[(i64, u128)],
    offset: i64,
) -> SequenceAlignment {
    let lookup: BTreeMap<i64, u128> = terms.iter().copied().collect();
    let rows = rows
        .iter()
        .map(|r| {
            let index = r.n as i64 - offset;
            let sequence_value = lookup.get(&index).copied();
            AlignmentRow {
                n: r.n,
                index,
                sequence_value,
                computed: r.poset_count,
                matches: sequence_value.map(|v| v == r.poset_count as u128),
            }
        })
        .collect();
    SequenceAlignment {
        offset,
        rows,
        terms: terms.to_vec(),
    }
}
