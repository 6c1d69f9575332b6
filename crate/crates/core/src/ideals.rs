//! Relative ideals of a numerical semigroup, the colon operation `(E − F)`,
//! stability of the ideals `H(nₖ)`, and three Arf decision procedures.

use std::fmt;

use crate::bits::BitSet;
use crate::error::Result;
use crate::semigroup::NumericalSemigroup;

/// A subset of `ℤ` that is bounded below and contains every integer from
/// some point on.
///
/// Kept in normal form: `base` is the least member and `threshold` the least
/// `t` with `[t, ∞) ⊆ E`, so structural equality is set equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RelativeIdeal {
    base: i64,
    threshold: i64,
    // membership over [base, threshold)
    members: BitSet,
}

impl RelativeIdeal {
    /// Builds the set that agrees with `member` on `[lo, hi)`, is empty below
    /// `lo` and full from `hi` on.
    pub fn from_window<F: Fn(i64) -> bool>(lo: i64, hi: i64, member: F) -> Self {
        let hi = hi.max(lo);
        let base = (lo..hi).find(|&z| member(z)).unwrap_or(hi);
        let mut threshold = hi;
        while threshold > base && member(threshold - 1) {
            threshold -= 1;
        }
        let mut members = BitSet::new((threshold - base) as usize);
        for z in base..threshold {
            members.set((z - base) as usize, member(z));
        }
        RelativeIdeal {
            base,
            threshold,
            members,
        }
    }

    /// `H + z`.
    pub fn principal(h: &NumericalSemigroup, z: i64) -> Self {
        Self::from_window(z, z + h.conductor() as i64, |x| h.contains(x - z))
    }

    /// `H` viewed as an ideal of itself.
    pub fn from_semigroup(h: &NumericalSemigroup) -> Self {
        Self::principal(h, 0)
    }

    /// Least member.
    pub fn base(&self) -> i64 {
        self.base
    }

    /// Least `t` with every integer `≥ t` a member.
    pub fn threshold(&self) -> i64 {
        self.threshold
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < self.base {
            false
        } else if z >= self.threshold {
            true
        } else {
            self.members.get((z - self.base) as usize)
        }
    }

    /// Members strictly below the threshold, ascending.
    pub fn finite_part(&self) -> impl Iterator<Item = i64> + '_ {
        self.members.iter_ones().map(move |i| self.base + i as i64)
    }

    pub fn translate(&self, z: i64) -> Self {
        RelativeIdeal {
            base: self.base + z,
            threshold: self.threshold + z,
            members: self.members.clone(),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        let lo = self.base.min(other.base);
        let hi = self.threshold.max(other.threshold);
        (lo..hi).all(|z| !self.contains(z) || other.contains(z))
    }

    /// Checks `E + H ⊆ E`.
    pub fn is_relative_ideal_of(&self, h: &NumericalSemigroup) -> bool {
        let span = self.threshold - self.base;
        self.finite_part().all(|e| {
            (0..span)
                .filter(|&s| h.contains(s))
                .all(|s| self.contains(e + s))
        })
    }

    /// Reads an ideal with least element 0 back as a numerical semigroup,
    /// re-validating closure.
    pub fn to_semigroup(&self) -> Option<Result<NumericalSemigroup>> {
        if self.base != 0 {
            return None;
        }
        let gaps = (0..self.threshold).filter(|&z| !self.contains(z));
        Some(NumericalSemigroup::from_gaps(gaps))
    }
}

impl fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let finite: Vec<i64> = self.finite_part().collect();
        write!(f, "{{{:?} ∪ [{}, ∞)}}", finite, self.threshold)
    }
}

/// `H(nₖ) = {h ∈ H : h ≥ nₖ}`; `H` itself for `k = 0`.
pub fn ideal_at(h: &NumericalSemigroup, k: usize) -> RelativeIdeal {
    let nk = h.element(k) as i64;
    let c = h.conductor() as i64;
    RelativeIdeal::from_window(nk, c.max(nk), |z| h.contains(z))
}

/// `(E − F) = {z ∈ ℤ : F + z ⊆ E}`.
///
/// Only `z` in `[base(E) − base(F), t_E − base(F))` need checking: smaller
/// `z` push `base(F)` below `E`, larger `z` push all of `F` past `t_E`. For a
/// candidate `z` the members `f ≥ t_E − z` land in `E` automatically.
pub fn ideal_difference(e: &RelativeIdeal, f: &RelativeIdeal) -> RelativeIdeal {
    let lo = e.base() - f.base();
    let hi = e.threshold() - f.base();
    RelativeIdeal::from_window(lo, hi, |z| {
        (f.base()..e.threshold() - z)
            .filter(|&y| f.contains(y))
            .all(|y| e.contains(y + z))
    })
}

/// Whether `H(nₖ) = (H(nₖ) − H(nₖ)) + nₖ`.
///
/// A principal generator of `H(nₖ)` over `(H(nₖ) − H(nₖ))` can only be
/// `nₖ`, so this is stability of `H(nₖ)`.
pub fn is_stable(h: &NumericalSemigroup, k: usize) -> bool {
    let e = ideal_at(h, k);
    let d = ideal_difference(&e, &e);
    d.translate(e.base()) == e
}

/// `nᵢ + nⱼ − nₖ ∈ H` for all `0 ≤ k ≤ j ≤ i ≤ c − g`.
pub fn is_arf_definition(h: &NumericalSemigroup) -> bool {
    let n = h.small_elements();
    for (i, &ni) in n.iter().enumerate() {
        for (j, &nj) in n[..=i].iter().enumerate() {
            for &nk in &n[..=j] {
                if !h.contains(ni as i64 + nj as i64 - nk as i64) {
                    return false;
                }
            }
        }
    }
    true
}

/// `2nᵢ − nⱼ ∈ H` for all `0 ≤ j ≤ i ≤ c − g`.
pub fn is_arf_double(h: &NumericalSemigroup) -> bool {
    let n = h.small_elements();
    n.iter().enumerate().all(|(i, &ni)| {
        n[..=i]
            .iter()
            .all(|&nj| h.contains(2 * ni as i64 - nj as i64))
    })
}

/// Every `H(nₖ)` with `1 ≤ k ≤ c − g` is stable. Vacuous for `ℕ₀`.
pub fn is_arf_stable(h: &NumericalSemigroup) -> bool {
    let top = (h.conductor() - h.genus()) as usize;
    (1..=top).all(|k| is_stable(h, k))
}

/// Arf test used by the rest of the crate.
pub fn is_arf(h: &NumericalSemigroup) -> bool {
    is_arf_double(h)
}
