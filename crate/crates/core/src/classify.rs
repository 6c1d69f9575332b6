//! Per-semigroup classification in the hierarchy
//! trivial ⊂ ordinary ⊂ Arf ⊂ sparse ⊂ κ-sparse ⊂ (κ+1)-sparse ⊂ …

use serde::Serialize;

use crate::ideals::is_arf;
use crate::kappa::{sparseness_index, SparsenessReport};
use crate::leaps::{is_hyperelliptic, is_sparse, leap_profile, LeapProfile};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub genus: u32,
    pub conductor: u32,
    pub frobenius: i64,
    pub multiplicity: u32,
    pub hyperelliptic: bool,
    pub arf: bool,
    pub sparse: bool,
    pub sparseness_index: u32,
    pub profile: LeapProfile,
}

impl Classification {
    pub fn of(h: &NumericalSemigroup) -> Self {
        Classification {
            genus: h.genus(),
            conductor: h.conductor(),
            frobenius: h.frobenius(),
            multiplicity: h.multiplicity(),
            hyperelliptic: is_hyperelliptic(h),
            arf: is_arf(h),
            sparse: is_sparse(h),
            sparseness_index: sparseness_index(h),
            profile: leap_profile(h),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.genus == 0
    }

    pub fn is_ordinary(&self) -> bool {
        self.conductor == self.genus + 1 || self.is_trivial()
    }

    /// The single κ with `H` pure κ-sparse.
    pub fn pure_class(&self) -> u32 {
        self.sparseness_index
    }

    /// Every class of the hierarchy that contains `H`, innermost first, ending
    /// with its pure class, e.g. `["arf", "sparse", "pure-2-sparse"]`.
    pub fn labels(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.is_trivial() {
            out.push("trivial".to_string());
        }
        if self.is_ordinary() {
            out.push("ordinary".to_string());
        }
        if self.arf {
            out.push("arf".to_string());
        }
        if self.sparse {
            out.push("sparse".to_string());
        }
        out.push(format!("pure-{}-sparse", self.pure_class()));
        out
    }
}

/// Classification plus sparseness report, as emitted by `classify`.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub gaps: Vec<u32>,
    #[serde(flatten)]
    pub classification: Classification,
    pub labels: Vec<String>,
    pub sparseness: SparsenessReport,
}

impl ClassificationReport {
    pub fn new(h: &NumericalSemigroup, kappa_query: Option<u32>) -> Self {
        let classification = Classification::of(h);
        ClassificationReport {
            gaps: h.gaps().to_vec(),
            labels: classification.labels(),
            classification,
            sparseness: SparsenessReport::new(h, kappa_query),
        }
    }
}
