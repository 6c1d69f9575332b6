//! Exhaustive enumeration by genus over the semigroup tree.
//!
//! The parent of `H ≠ ℕ₀` is `H ∪ {ℓ_g}`; the children of `H` are the
//! semigroups `H ∖ {x}` for minimal generators `x > ℓ_g`. Every numerical
//! semigroup of genus `g` sits at depth `g`, exactly once.
//!
//! Pruned traversals cut a subtree at the first node failing a predicate.
//! That is exact whenever the predicate's class is closed under the parent
//! map, which holds for the κ-sparse classes.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::classify::Classification;
use crate::error::{Result, SemigroupError};
use crate::ideals::is_arf;
use crate::kappa::{is_kappa_sparse, is_pure_kappa_sparse};
use crate::leaps::LeapProfile;
use crate::semigroup::NumericalSemigroup;

pub const DEFAULT_GENUS_CAP: u32 = 18;

// Depth at which the tree is split into independently walked subtrees.
const SPLIT_DEPTH: u32 = 8;

/// Children in the semigroup tree, sorted by the removed generator.
pub fn children(h: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    h.minimal_generators()
        .into_iter()
        .filter(|&x| x as i64 > h.frobenius())
        .map(|x| {
            h.remove_generator(x)
                .expect("generator above the Frobenius number")
        })
        .collect()
}

/// Depth-first preorder walk of the subtree under `root`, down to
/// `max_genus`, skipping subtrees whose root fails `keep`.
pub struct Descendants<F> {
    stack: Vec<NumericalSemigroup>,
    max_genus: u32,
    keep: F,
}

impl<F: Fn(&NumericalSemigroup) -> bool> Iterator for Descendants<F> {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<Self::Item> {
        let h = self.stack.pop()?;
        if h.genus() < self.max_genus {
            for child in children(&h).into_iter().rev() {
                if (self.keep)(&child) {
                    self.stack.push(child);
                }
            }
        }
        Some(h)
    }
}

pub fn descendants<F>(root: NumericalSemigroup, max_genus: u32, keep: F) -> Descendants<F>
where
    F: Fn(&NumericalSemigroup) -> bool,
{
    let stack = if keep(&root) && root.genus() <= max_genus {
        vec![root]
    } else {
        Vec::new()
    };
    Descendants {
        stack,
        max_genus,
        keep,
    }
}

/// The whole tree down to `max_genus`, in preorder.
pub fn tree(max_genus: u32) -> impl Iterator<Item = NumericalSemigroup> {
    descendants(NumericalSemigroup::trivial(), max_genus, |_| true)
}

/// Streams the genus-`g` members of the subtree-closed class `keep`.
pub fn stream_layer<F>(g: u32, keep: F) -> impl Iterator<Item = NumericalSemigroup>
where
    F: Fn(&NumericalSemigroup) -> bool,
{
    descendants(NumericalSemigroup::trivial(), g, keep).filter(move |h| h.genus() == g)
}

/// Splits the tree at `depth`: nodes above it in preorder, and the roots of
/// the subtrees at that depth in preorder.
fn split<F>(depth: u32, keep: &F) -> (Vec<NumericalSemigroup>, Vec<NumericalSemigroup>)
where
    F: Fn(&NumericalSemigroup) -> bool,
{
    descendants(NumericalSemigroup::trivial(), depth, keep).partition(|h| h.genus() < depth)
}

/// Genus-`g` members of `keep`, walking subtrees in parallel. Output order is
/// the sequential preorder.
fn layer<F>(g: u32, keep: F) -> Vec<NumericalSemigroup>
where
    F: Fn(&NumericalSemigroup) -> bool + Sync,
{
    let (_, roots) = split(g.min(SPLIT_DEPTH), &keep);
    roots
        .into_par_iter()
        .map(|root| {
            descendants(root, g, &keep)
                .filter(|h| h.genus() == g)
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Every numerical semigroup of genus `g`, in tree preorder.
pub fn enumerate_genus(g: u32) -> Vec<NumericalSemigroup> {
    layer(g, |_| true)
}

/// Genus-`g` members of `S_κ`, found by the pruned walk.
pub fn enumerate_kappa_sparse(g: u32, kappa: u32) -> Vec<NumericalSemigroup> {
    if kappa == 0 {
        return Vec::new();
    }
    layer(g, |h| is_kappa_sparse(h, kappa))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    All,
    KappaSparse,
    PureKappaSparse,
    Arf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Emit {
    CountOnly,
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationRequest {
    pub max_genus: u32,
    pub kappa_filter: Option<u32>,
    pub mode: Mode,
    pub emit: Emit,
    pub genus_cap: u32,
}

impl EnumerationRequest {
    pub fn new(max_genus: u32) -> Self {
        EnumerationRequest {
            max_genus,
            kappa_filter: None,
            mode: Mode::All,
            emit: Emit::CountOnly,
            genus_cap: DEFAULT_GENUS_CAP,
        }
    }

    pub fn with_kappa(mut self, kappa: u32) -> Self {
        self.kappa_filter = Some(kappa);
        self
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_emit(mut self, emit: Emit) -> Self {
        self.emit = emit;
        self
    }

    pub fn with_cap(mut self, cap: u32) -> Self {
        self.genus_cap = cap;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_genus > self.genus_cap {
            return Err(SemigroupError::GenusCapExceeded {
                requested: self.max_genus,
                cap: self.genus_cap,
            });
        }
        if self.kappa_filter == Some(0) {
            return Err(SemigroupError::InvalidParameters(
                "kappa must be positive".into(),
            ));
        }
        if matches!(self.mode, Mode::KappaSparse | Mode::PureKappaSparse)
            && self.kappa_filter.is_none()
        {
            return Err(SemigroupError::InvalidParameters(
                "kappa-sparse modes need a kappa".into(),
            ));
        }
        Ok(())
    }

    /// Whether `h` is selected by the request's mode.
    pub fn selects(&self, h: &NumericalSemigroup) -> bool {
        match (self.mode, self.kappa_filter) {
            (Mode::All, _) => true,
            (Mode::Arf, _) => is_arf(h),
            (Mode::KappaSparse, Some(k)) => is_kappa_sparse(h, k),
            (Mode::PureKappaSparse, Some(k)) => is_pure_kappa_sparse(h, k),
            (_, None) => false,
        }
    }

    /// Streams the selected semigroups of genus exactly `max_genus`. The
    /// κ-sparse modes walk the pruned tree.
    pub fn listing(&self) -> Result<Box<dyn Iterator<Item = NumericalSemigroup> + '_>> {
        self.validate()?;
        let g = self.max_genus;
        Ok(match (self.mode, self.kappa_filter) {
            (Mode::KappaSparse | Mode::PureKappaSparse, Some(k)) => Box::new(
                stream_layer(g, move |h| is_kappa_sparse(h, k)).filter(|h| self.selects(h)),
            ),
            _ => Box::new(stream_layer(g, |_| true).filter(|h| self.selects(h))),
        })
    }
}

/// Counts for one genus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub genus: u32,
    pub total: u64,
    pub arf: u64,
    pub sparse: u64,
    /// Present when the request names a κ.
    pub kappa_sparse: Option<u64>,
    pub pure_kappa_sparse: Option<u64>,
    /// Count per hierarchy label, see [`Classification::labels`].
    pub per_class: BTreeMap<String, u64>,
    #[serde(serialize_with = "histogram_as_list")]
    pub profile_histogram: BTreeMap<LeapProfile, u64>,
}

fn histogram_as_list<S: Serializer>(
    hist: &BTreeMap<LeapProfile, u64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        profile: &'a LeapProfile,
        count: u64,
    }
    let mut seq = s.serialize_seq(Some(hist.len()))?;
    for (profile, &count) in hist {
        seq.serialize_element(&Entry { profile, count })?;
    }
    seq.end()
}

impl CensusRow {
    fn empty(genus: u32, kappa: Option<u32>) -> Self {
        CensusRow {
            genus,
            total: 0,
            arf: 0,
            sparse: 0,
            kappa_sparse: kappa.map(|_| 0),
            pure_kappa_sparse: kappa.map(|_| 0),
            per_class: BTreeMap::new(),
            profile_histogram: BTreeMap::new(),
        }
    }

    fn record(&mut self, h: &NumericalSemigroup, kappa: Option<u32>) {
        let class = Classification::of(h);
        self.total += 1;
        self.arf += class.arf as u64;
        self.sparse += class.sparse as u64;
        if let Some(k) = kappa {
            *self.kappa_sparse.as_mut().unwrap() += (class.sparseness_index <= k) as u64;
            *self.pure_kappa_sparse.as_mut().unwrap() += (class.sparseness_index == k) as u64;
        }
        for label in class.labels() {
            *self.per_class.entry(label).or_insert(0) += 1;
        }
        *self.profile_histogram.entry(class.profile).or_insert(0) += 1;
    }

    fn merge(&mut self, other: CensusRow) {
        debug_assert_eq!(self.genus, other.genus);
        self.total += other.total;
        self.arf += other.arf;
        self.sparse += other.sparse;
        if let (Some(a), Some(b)) = (self.kappa_sparse.as_mut(), other.kappa_sparse) {
            *a += b;
        }
        if let (Some(a), Some(b)) = (self.pure_kappa_sparse.as_mut(), other.pure_kappa_sparse) {
            *a += b;
        }
        for (label, n) in other.per_class {
            *self.per_class.entry(label).or_insert(0) += n;
        }
        for (p, n) in other.profile_histogram {
            *self.profile_histogram.entry(p).or_insert(0) += n;
        }
    }

    /// Pure-class count for index κ, read from `per_class`.
    pub fn pure_count(&self, kappa: u32) -> u64 {
        self.per_class
            .get(&format!("pure-{kappa}-sparse"))
            .copied()
            .unwrap_or(0)
    }

    pub const TSV_HEADER: &'static str =
        "genus\ttotal\tarf\tsparse\tkappa_sparse\tpure_kappa_sparse";

    pub fn to_tsv(&self) -> String {
        let opt = |v: Option<u64>| v.map_or_else(|| "-".to_string(), |n| n.to_string());
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.genus,
            self.total,
            self.arf,
            self.sparse,
            opt(self.kappa_sparse),
            opt(self.pure_kappa_sparse)
        )
    }
}

/// One row per genus `0..=max_genus`, counting every semigroup of that genus.
/// The mode only affects [`EnumerationRequest::listing`].
pub fn census(req: &EnumerationRequest) -> Result<Vec<CensusRow>> {
    req.validate()?;
    let kappa = req.kappa_filter;
    let fresh = || -> Vec<CensusRow> {
        (0..=req.max_genus)
            .map(|g| CensusRow::empty(g, kappa))
            .collect()
    };
    let keep = |_: &NumericalSemigroup| true;
    let (shallow, roots) = split(req.max_genus.min(SPLIT_DEPTH), &keep);

    let mut rows = fresh();
    for h in &shallow {
        rows[h.genus() as usize].record(h, kappa);
    }
    let partials: Vec<Vec<CensusRow>> = roots
        .into_par_iter()
        .map(|root| {
            let mut part = fresh();
            for h in descendants(root, req.max_genus, keep) {
                part[h.genus() as usize].record(&h, kappa);
            }
            part
        })
        .collect();
    for part in partials {
        for (row, p) in rows.iter_mut().zip(part) {
            row.merge(p);
        }
    }
    Ok(rows)
}
