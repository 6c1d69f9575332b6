//! Leaps between consecutive gaps and the counts `v_m` of `m`-leaps.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::semigroup::NumericalSemigroup;

/// Consecutive gaps `(ℓᵢ₋₁, ℓᵢ)`, with `ℓ₀ = −1` as the sentinel for the first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Leap {
    pub lo: i64,
    pub hi: i64,
}

impl Leap {
    /// `m` for an `m`-leap.
    pub fn size(&self) -> u32 {
        (self.hi - self.lo) as u32
    }
}

impl fmt::Display for Leap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

/// The counts `v_m`, stored sparsely: absent `m` means `v_m = 0`.
///
/// Serialises as a JSON object keyed by `m`, e.g. `{"1":2,"2":1,"4":1}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LeapProfile {
    counts: BTreeMap<u32, u32>,
}

impl LeapProfile {
    pub fn from_counts<I: IntoIterator<Item = (u32, u32)>>(counts: I) -> Self {
        LeapProfile {
            counts: counts.into_iter().filter(|&(_, v)| v > 0).collect(),
        }
    }

    /// `v_m`.
    pub fn count(&self, m: u32) -> u32 {
        self.counts.get(&m).copied().unwrap_or(0)
    }

    /// `Σ_m v_m`, which equals the genus for a realisable profile.
    pub fn total(&self) -> u32 {
        self.counts.values().sum()
    }

    /// `Σ_{m ≤ bound} v_m`.
    pub fn total_up_to(&self, bound: u32) -> u32 {
        self.counts.range(..=bound).map(|(_, v)| v).sum()
    }

    /// `Σ_{m ≤ bound} m·v_m`.
    pub fn weighted_up_to(&self, bound: u32) -> i64 {
        self.counts
            .range(..=bound)
            .map(|(&m, &v)| m as i64 * v as i64)
            .sum()
    }

    /// `Σ_m m·v_m`.
    pub fn weighted_total(&self) -> i64 {
        self.weighted_up_to(u32::MAX)
    }

    /// Largest `m` with `v_m ≠ 0`.
    pub fn max_leap(&self) -> Option<u32> {
        self.counts.keys().next_back().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.counts.iter().map(|(&m, &v)| (m, v))
    }
}

impl fmt::Display for LeapProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(m, v)| format!("{m}:{v}")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// All `g` leaps in order; empty for `ℕ₀`.
pub fn leap_set(h: &NumericalSemigroup) -> Vec<Leap> {
    let mut prev = -1i64;
    h.gaps()
        .iter()
        .map(|&l| {
            let leap = Leap {
                lo: prev,
                hi: l as i64,
            };
            prev = l as i64;
            leap
        })
        .collect()
}

pub fn leap_profile(h: &NumericalSemigroup) -> LeapProfile {
    let mut counts = BTreeMap::new();
    for leap in leap_set(h) {
        *counts.entry(leap.size()).or_insert(0) += 1;
    }
    LeapProfile { counts }
}

/// `Σ m·v_m − 1`. Defined for any mapping; only meaningful for profiles of
/// actual semigroups, where it is the Frobenius number.
pub fn frobenius_from_profile(p: &LeapProfile) -> i64 {
    p.weighted_total() - 1
}

/// `2 ∈ H`.
pub fn is_hyperelliptic(h: &NumericalSemigroup) -> bool {
    h.contains(2)
}

/// Every leap has size at most 2. `ℕ₀` counts as sparse.
pub fn is_sparse(h: &NumericalSemigroup) -> bool {
    leap_set(h).iter().all(|l| l.size() <= 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gaps(gs: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_gaps(gs.iter().copied()).unwrap()
    }

    fn leaps(pairs: &[(i64, i64)]) -> Vec<Leap> {
        pairs.iter().map(|&(lo, hi)| Leap { lo, hi }).collect()
    }

    #[test]
    fn leap_sets() {
        assert!(leap_set(&NumericalSemigroup::trivial()).is_empty());
        assert_eq!(leap_set(&gaps(&[1, 3])), leaps(&[(-1, 1), (1, 3)]));
        assert_eq!(
            leap_set(&gaps(&[1, 2, 3, 7])),
            leaps(&[(-1, 1), (1, 2), (2, 3), (3, 7)])
        );
    }

    #[test]
    fn profiles() {
        assert_eq!(
            leap_profile(&NumericalSemigroup::ordinary(5)),
            LeapProfile::from_counts([(1, 4), (2, 1)])
        );
        assert_eq!(
            leap_profile(&gaps(&[1, 3])),
            LeapProfile::from_counts([(2, 2)])
        );
        let p = leap_profile(&gaps(&[1, 2, 3, 7]));
        assert_eq!(p, LeapProfile::from_counts([(1, 2), (2, 1), (4, 1)]));
        assert_eq!(p.count(3), 0);
        assert_eq!(p.max_leap(), Some(4));
        assert_eq!(p.total_up_to(3), 3);
        assert_eq!(p.to_string(), "{1:2,2:1,4:1}");
        assert!(leap_profile(&NumericalSemigroup::trivial()).is_empty());
    }

    #[test]
    fn profile_json_keys_are_leap_sizes() {
        let p = LeapProfile::from_counts([(1, 2), (2, 1), (4, 1)]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"1":2,"2":1,"4":1}"#);
        let back: LeapProfile = serde_json::from_str(r#"{"1":2,"2":1,"4":1}"#).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn frobenius_from_counts() {
        assert_eq!(frobenius_from_profile(&LeapProfile::default()), -1);
        assert_eq!(
            frobenius_from_profile(&LeapProfile::from_counts([(1, 2), (2, 1), (4, 1)])),
            7
        );
        for g in 1..10 {
            assert_eq!(
                frobenius_from_profile(&LeapProfile::from_counts([(2, g)])),
                2 * g as i64 - 1
            );
        }
    }

    #[test]
    fn hyperelliptic_and_sparse() {
        assert!(is_hyperelliptic(&NumericalSemigroup::trivial()));
        assert!(is_hyperelliptic(&gaps(&[1, 3, 5])));
        assert!(!is_hyperelliptic(&NumericalSemigroup::ordinary(3)));

        assert!(is_sparse(&NumericalSemigroup::trivial()));
        assert!(is_sparse(&gaps(&[1, 3])));
        assert!(!is_sparse(&gaps(&[1, 2, 3, 7])));
    }
}
