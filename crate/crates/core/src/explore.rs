//! Enumeration and sampling of principal submatrices, classified by
//! spectral symmetry.
//!
//! Exhaustive runs walk the `k`-subsets of `{0, …, n-1}` in colexicographic
//! order. The rank range is cut into contiguous chunks that are processed in
//! parallel and concatenated in rank order, so the report never depends on
//! the number of worker threads.
//!
//! Sampled runs draw subsets with xoshiro256** seeded through SplitMix64
//! (`seed_from_u64`). A single subset is drawn with Floyd's algorithm;
//! repeated subsets are rejected so the sample is without replacement. The
//! bounded draw `uniform(m)` discards raw outputs below `2^64 mod m` and
//! returns `r mod m`. Sampled subsets are reported in colex order.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::io;

use num_bigint::BigUint;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;
use rayon::prelude::*;
use thiserror::Error;

use crate::canonical::{canonical_form_sequential, CanonicalForm};
use crate::matrix::{IndexSet, SeidelMatrix};
use crate::paley::ConferenceMatrix;
use crate::spectrum::{char_poly, CharPolynomial};

/// Default bound on `C(n, k)` for exhaustive runs.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// CSV header of persisted reports.
pub const CSV_HEADER: [&str; 5] = ["indices", "k", "symmetric", "charpoly", "canonical_key"];

#[derive(Debug, Error)]
pub enum ExploreError {
    #[error("subset order must be at least 1")]
    ZeroOrder,
    #[error("subset order {k} exceeds matrix order {n}")]
    OrderTooLarge { k: usize, n: usize },
    #[error("C({n},{k}) = {total} subsets exceeds the cap of {cap}")]
    CapExceeded {
        n: usize,
        k: usize,
        total: BigUint,
        cap: u64,
    },
    #[error("sample count must be at least 1")]
    EmptySample,
    #[error("sample of {count} distinct subsets requested, but only C({n},{k}) = {total} exist")]
    SampleTooLarge {
        n: usize,
        k: usize,
        count: u64,
        total: BigUint,
    },
    #[error("could not build worker pool: {0}")]
    ThreadPool(String),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sample { count: u64, seed: u64 },
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exhaustive => f.write_str("exhaustive"),
            Mode::Sample { count, seed } => write!(f, "sample (count {count}, seed {seed})"),
        }
    }
}

/// What to explore and how.
#[derive(Debug, Clone)]
pub struct ExplorationTask {
    source: SeidelMatrix,
    k: usize,
    mode: Mode,
    dedupe: bool,
    cap: u64,
    threads: Option<usize>,
}

impl ExplorationTask {
    /// Exhaustive, no dedupe, default cap.
    pub fn new(source: &ConferenceMatrix, k: usize) -> Self {
        Self::with_any_source(source.matrix().clone(), k)
    }

    /// Like [`ExplorationTask::new`] but without requiring the conference property.
    pub fn with_any_source(source: SeidelMatrix, k: usize) -> Self {
        Self {
            source,
            k,
            mode: Mode::Exhaustive,
            dedupe: false,
            cap: DEFAULT_CAP,
            threads: None,
        }
    }

    pub fn mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn sample(self, count: u64, seed: u64) -> Self {
        self.mode(Mode::Sample { count, seed })
    }

    pub fn dedupe(mut self, on: bool) -> Self {
        self.dedupe = on;
        self
    }

    pub fn cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    /// Worker threads; `None` uses the global pool.
    pub fn threads(mut self, threads: Option<usize>) -> Self {
        self.threads = threads;
        self
    }

    pub fn source(&self) -> &SeidelMatrix {
        &self.source
    }

    pub fn subset_order(&self) -> usize {
        self.k
    }

    fn validate(&self) -> Result<(), ExploreError> {
        let n = self.source.order();
        if self.k == 0 {
            return Err(ExploreError::ZeroOrder);
        }
        if self.k > n {
            return Err(ExploreError::OrderTooLarge { k: self.k, n });
        }
        match self.mode {
            Mode::Exhaustive => {
                let total = binomial_big(n, self.k);
                if total > BigUint::from(self.cap) {
                    return Err(ExploreError::CapExceeded {
                        n,
                        k: self.k,
                        total,
                        cap: self.cap,
                    });
                }
            }
            Mode::Sample { count, .. } => {
                if count == 0 {
                    return Err(ExploreError::EmptySample);
                }
                let total = binomial_big(n, self.k);
                if BigUint::from(count) > total {
                    return Err(ExploreError::SampleTooLarge {
                        n,
                        k: self.k,
                        count,
                        total,
                    });
                }
            }
        }
        Ok(())
    }
}

/// One examined principal submatrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetRecord {
    pub indices: IndexSet,
    pub symmetric: bool,
    pub char_poly: CharPolynomial,
    pub canonical_key: Option<CanonicalForm>,
}

impl SubsetRecord {
    fn csv_fields(&self) -> [String; 5] {
        [
            self.indices.render(),
            self.indices.len().to_string(),
            self.symmetric.to_string(),
            self.char_poly.render().replace(' ', ";"),
            self.canonical_key
                .as_ref()
                .map(CanonicalForm::to_hex)
                .unwrap_or_default(),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Totals {
    pub examined: u64,
    pub symmetric: u64,
    pub asymmetric: u64,
    /// Present only when deduplication was requested.
    pub distinct_classes: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplorationReport {
    pub source_order: usize,
    pub k: usize,
    pub mode: Mode,
    pub records: Vec<SubsetRecord>,
    pub totals: Totals,
}

impl ExplorationReport {
    fn from_records(task: &ExplorationTask, records: Vec<SubsetRecord>) -> Self {
        let symmetric = records.iter().filter(|r| r.symmetric).count() as u64;
        let distinct_classes = task.dedupe.then(|| {
            records
                .iter()
                .filter_map(|r| r.canonical_key.as_ref())
                .collect::<BTreeSet<_>>()
                .len() as u64
        });
        let examined = records.len() as u64;
        Self {
            source_order: task.source.order(),
            k: task.k,
            mode: task.mode,
            totals: Totals {
                examined,
                symmetric,
                asymmetric: examined - symmetric,
                distinct_classes,
            },
            records,
        }
    }

    /// Writes the CSV report: header, then one row per record.
    pub fn write_csv<W: io::Write>(&self, out: W) -> Result<(), ExploreError> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(CSV_HEADER)?;
        for r in &self.records {
            w.write_record(r.csv_fields())?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv output is ascii")
    }

    /// Human-readable summary block, one `key: value` per line, ending with
    /// `<symmetric>/<examined> symmetric`.
    pub fn summary(&self) -> String {
        let t = &self.totals;
        let classes = t
            .distinct_classes
            .map_or_else(|| "n/a".to_string(), |c| c.to_string());
        format!(
            "source order: {}\nsubset order: {}\nmode: {}\nexamined: {}\nsymmetric: {}\n\
             asymmetric: {}\ndistinct classes: {}\n{}/{} symmetric\n",
            self.source_order,
            self.k,
            self.mode,
            t.examined,
            t.symmetric,
            t.asymmetric,
            classes,
            t.symmetric,
            t.examined
        )
    }
}

/// Runs the task. See the module docs for ordering and sampling rules.
pub fn explore(task: &ExplorationTask) -> Result<ExplorationReport, ExploreError> {
    task.validate()?;
    match task.threads {
        None => run(task),
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| ExploreError::ThreadPool(e.to_string()))?
            .install(|| run(task)),
    }
}

fn run(task: &ExplorationTask) -> Result<ExplorationReport, ExploreError> {
    let n = task.source.order();
    let records = match task.mode {
        Mode::Exhaustive => {
            // validate() bounded the total by the cap
            let total = binomial(n, task.k).expect("checked against cap");
            let workers = rayon::current_num_threads() as u64;
            let chunk = total.div_ceil(workers * 8).clamp(1, 1 << 14);
            let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
            let chunks: Vec<Vec<SubsetRecord>> = starts
                .into_par_iter()
                .map(|start| {
                    let len = chunk.min(total - start);
                    let mut subset = unrank_colex(start, n, task.k);
                    let mut out = Vec::with_capacity(len as usize);
                    for step in 0..len {
                        if step > 0 {
                            next_colex(&mut subset, n);
                        }
                        out.push(examine(task, &subset));
                    }
                    out
                })
                .collect();
            chunks.into_iter().flatten().collect()
        }
        Mode::Sample { count, seed } => {
            let subsets = sample_subsets(n, task.k, count, seed);
            subsets.par_iter().map(|s| examine(task, s)).collect()
        }
    };
    Ok(ExplorationReport::from_records(task, records))
}

fn examine(task: &ExplorationTask, subset: &[usize]) -> SubsetRecord {
    let sub = task.source.submatrix_unchecked(subset);
    let char_poly = char_poly(&sub);
    SubsetRecord {
        indices: IndexSet::new(subset.to_vec()).expect("enumerated subsets are sorted"),
        symmetric: char_poly.is_symmetric_spectrum(),
        canonical_key: task.dedupe.then(|| canonical_form_sequential(&sub)),
        char_poly,
    }
}

/// Per-order aggregate produced by [`classify_orders`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSummary {
    pub k: usize,
    pub mode: Mode,
    pub totals: Totals,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub cap: u64,
    /// Subsets drawn for orders where `C(n, k)` exceeds the cap.
    pub sample_count: u64,
    pub seed: u64,
    pub dedupe: bool,
    pub threads: Option<usize>,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            cap: DEFAULT_CAP,
            sample_count: 1000,
            seed: 0,
            dedupe: false,
            threads: None,
        }
    }
}

/// Explores every order `k = 1..=n`, exhaustively where the cap allows and
/// by sampling elsewhere.
pub fn classify_orders(
    source: &SeidelMatrix,
    options: &ClassifyOptions,
) -> Result<Vec<OrderSummary>, ExploreError> {
    let n = source.order();
    (1..=n)
        .map(|k| {
            let total = binomial_big(n, k);
            let mode = if total <= BigUint::from(options.cap) {
                Mode::Exhaustive
            } else {
                Mode::Sample {
                    count: options.sample_count,
                    seed: options.seed,
                }
            };
            let task = ExplorationTask::with_any_source(source.clone(), k)
                .mode(mode)
                .dedupe(options.dedupe)
                .cap(options.cap)
                .threads(options.threads);
            let report = explore(&task)?;
            Ok(OrderSummary {
                k,
                mode,
                totals: report.totals,
            })
        })
        .collect()
}

/// Renders a classification table with one row per order.
pub fn render_classification(rows: &[OrderSummary]) -> String {
    let mut out = String::from("k\texamined\tsymmetric\tasymmetric\tclasses\tmode\n");
    for r in rows {
        let classes = r
            .totals
            .distinct_classes
            .map_or_else(|| "n/a".to_string(), |c| c.to_string());
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\n",
            r.k, r.totals.examined, r.totals.symmetric, r.totals.asymmetric, classes, r.mode
        ));
    }
    out
}

/// `C(n, k)` exactly.
pub fn binomial_big(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// `C(n, k)` if it fits in a `u64`.
pub fn binomial(n: usize, k: usize) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc = C(n, i) <= C(n, k) along the way since k <= n/2
        acc = acc.checked_mul((n - i) as u128)? / (i + 1) as u128;
    }
    u64::try_from(acc).ok()
}

/// The `rank`-th `k`-subset of `{0, …, n-1}` in colex order, where the rank
/// of `c_0 < … < c_{k-1}` is `Σ C(c_i, i + 1)`.
pub fn unrank_colex(mut rank: u64, n: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    let mut upper = n;
    for i in (0..k).rev() {
        // largest c < upper with C(c, i+1) <= rank
        let mut c = i;
        while c + 1 < upper && binomial(c + 1, i + 1).is_some_and(|b| b <= rank) {
            c += 1;
        }
        rank -= binomial(c, i + 1).unwrap_or(0);
        out[i] = c;
        upper = c;
    }
    out
}

/// Colex rank of a sorted subset.
pub fn rank_colex(subset: &[usize]) -> u64 {
    subset
        .iter()
        .enumerate()
        .map(|(i, &c)| binomial(c, i + 1).expect("rank fits in u64"))
        .sum()
}

/// Advances to the colex successor in place. Returns `false` after the last subset.
pub fn next_colex(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    for i in 0..k {
        let limit = if i + 1 < k { subset[i + 1] } else { n };
        if subset[i] + 1 < limit {
            subset[i] += 1;
            for (j, slot) in subset.iter_mut().enumerate().take(i) {
                *slot = j;
            }
            return true;
        }
    }
    false
}

/// The portable generator behind sampled runs.
pub struct SubsetSampler {
    rng: Xoshiro256StarStar,
}

impl SubsetSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: Xoshiro256StarStar::seed_from_u64(seed),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform value in `0..bound` by threshold rejection.
    pub fn uniform(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let r = self.rng.next_u64();
            if r >= threshold {
                return r % bound;
            }
        }
    }

    /// Uniform `k`-subset of `{0, …, n-1}` by Floyd's algorithm, sorted.
    pub fn subset(&mut self, n: usize, k: usize) -> Vec<usize> {
        let mut chosen = BTreeSet::new();
        for j in n - k..n {
            let t = self.uniform(j as u64 + 1) as usize;
            if !chosen.insert(t) {
                chosen.insert(j);
            }
        }
        chosen.into_iter().collect()
    }
}

/// `count` distinct uniform `k`-subsets, in colex order.
pub fn sample_subsets(n: usize, k: usize, count: u64, seed: u64) -> Vec<Vec<usize>> {
    let mut sampler = SubsetSampler::new(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count as usize);
    while (out.len() as u64) < count {
        let s = sampler.subset(n, k);
        if seen.insert(s.clone()) {
            out.push(s);
        }
    }
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}
