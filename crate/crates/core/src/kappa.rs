//! κ-sparse and pure κ-sparse semigroups.
//!
//! `H` is κ-sparse when every leap has size at most κ. There are four
//! interchangeable tests for κ ≥ 2; each is exposed so they can be checked
//! against each other. The sparseness index is the unique κ for which `H`
//! is pure κ-sparse.

use serde::Serialize;

use crate::error::{Result, SemigroupError};
use crate::leaps::{leap_profile, leap_set, Leap};
use crate::semigroup::NumericalSemigroup;

/// `Σ_{m=1}^{κ} v_m = g`.
pub fn is_kappa_sparse_profile(h: &NumericalSemigroup, kappa: u32) -> bool {
    leap_profile(h).total_up_to(kappa) == h.genus()
}

/// `ℓᵢ − ℓᵢ₋₁ ≤ κ` for every leap.
pub fn is_kappa_sparse_gapdiff(h: &NumericalSemigroup, kappa: u32) -> bool {
    leap_set(h).iter().all(|l| l.size() <= kappa)
}

/// `n_{i+κ−2} − n_{i−1} ≥ κ` for `1 ≤ i ≤ c − g − κ + 2`. Requires κ ≥ 2.
pub fn is_kappa_sparse_nongap(h: &NumericalSemigroup, kappa: u32) -> bool {
    assert!(kappa >= 2, "non-gap spacing test needs kappa >= 2");
    let n = h.small_elements();
    let top = n.len() as i64 - 1; // c − g
    let last_i = top - kappa as i64 + 2;
    let k = kappa as usize;
    (1..=last_i.max(0) as usize).all(|i| n[i + k - 2] - n[i - 1] >= kappa)
}

/// No positive element below the conductor starts a run of κ consecutive
/// members. Requires κ ≥ 2.
pub fn is_kappa_sparse_run(h: &NumericalSemigroup, kappa: u32) -> bool {
    assert!(kappa >= 2, "run test needs kappa >= 2");
    !has_run_below_conductor(h, kappa)
}

/// Some positive `nᵢ < c` has `nᵢ, nᵢ + 1, …, nᵢ + len − 1` all in `H`.
fn has_run_below_conductor(h: &NumericalSemigroup, len: u32) -> bool {
    h.small_elements()
        .into_iter()
        .skip(1)
        .take_while(|&n| n < h.conductor())
        .any(|n| (0..len as i64).all(|s| h.contains(n as i64 + s)))
}

/// Canonical κ-sparse test.
pub fn is_kappa_sparse(h: &NumericalSemigroup, kappa: u32) -> bool {
    is_kappa_sparse_profile(h, kappa)
}

/// κ-sparse with `v_κ ≠ 0`; for κ = 1 this is `H = ℕ₀`.
pub fn is_pure_kappa_sparse(h: &NumericalSemigroup, kappa: u32) -> bool {
    if kappa == 0 {
        return false;
    }
    if kappa == 1 {
        return h.is_trivial();
    }
    let pure = is_kappa_sparse(h, kappa) && leap_profile(h).count(kappa) != 0;
    if kappa >= 3 {
        debug_assert_eq!(pure, is_pure_kappa_sparse_run(h, kappa));
    }
    pure
}

/// κ-sparse and some positive `nᵢ < c` starts a run of κ − 1 members.
/// Agrees with [`is_pure_kappa_sparse`] for κ ≥ 3 only.
pub fn is_pure_kappa_sparse_run(h: &NumericalSemigroup, kappa: u32) -> bool {
    assert!(kappa >= 2, "run criterion needs kappa >= 2");
    is_kappa_sparse(h, kappa) && has_run_below_conductor(h, kappa - 1)
}

/// Largest leap size, or 1 for `ℕ₀`.
pub fn sparseness_index(h: &NumericalSemigroup) -> u32 {
    leap_profile(h).max_leap().unwrap_or(1)
}

/// `{0, a, a + 1, …, a + κ − 2} ∪ {n ≥ 2a}` for κ ≥ 3 and a ≥ κ.
pub fn example_family(a: i64, kappa: i64) -> Result<NumericalSemigroup> {
    if kappa < 3 || a < kappa {
        return Err(SemigroupError::InvalidParameters(format!(
            "need kappa >= 3 and a >= kappa, got a = {a}, kappa = {kappa}"
        )));
    }
    let low = 1..a;
    let high = a + kappa - 1..2 * a;
    NumericalSemigroup::from_gaps(low.chain(high))
}

/// Checks `Σ_{m≤κ} m·v_m = 2g − K + 1` and `Σ_{2≤m≤κ} (m − 1)·v_m = g − K + 1`
/// with `K = 2g − ℓ_g`. Holds exactly when `H` is κ-sparse.
pub fn frobenius_identity_check(h: &NumericalSemigroup, kappa: u32) -> Result<bool> {
    if h.is_trivial() || kappa < 2 {
        return Err(SemigroupError::InvalidParameters(
            "identity check needs positive genus and kappa >= 2".into(),
        ));
    }
    let p = leap_profile(h);
    let g = h.genus() as i64;
    let big_k = 2 * g - h.frobenius();
    let weighted = p.weighted_up_to(kappa);
    let shifted = weighted - p.total_up_to(kappa) as i64;
    Ok(weighted == 2 * g - big_k + 1 && shifted == g - big_k + 1)
}

/// Per-characterisation results for one κ. The non-gap and run tests are
/// only defined for κ ≥ 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KappaChecks {
    pub kappa: u32,
    pub profile: bool,
    pub gap_difference: bool,
    pub nongap_spacing: Option<bool>,
    pub consecutive_run: Option<bool>,
}

impl KappaChecks {
    pub fn evaluate(h: &NumericalSemigroup, kappa: u32) -> Self {
        KappaChecks {
            kappa,
            profile: is_kappa_sparse_profile(h, kappa),
            gap_difference: is_kappa_sparse_gapdiff(h, kappa),
            nongap_spacing: (kappa >= 2).then(|| is_kappa_sparse_nongap(h, kappa)),
            consecutive_run: (kappa >= 2).then(|| is_kappa_sparse_run(h, kappa)),
        }
    }

    pub fn agree(&self) -> bool {
        [
            self.nongap_spacing,
            self.consecutive_run,
            Some(self.gap_difference),
        ]
        .into_iter()
        .flatten()
        .all(|b| b == self.profile)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SparsenessReport {
    pub kappa_index: u32,
    /// A leap of size `kappa_index`; absent for `ℕ₀`.
    pub pure_witness: Option<Leap>,
    pub checks: Option<KappaChecks>,
}

impl SparsenessReport {
    pub fn new(h: &NumericalSemigroup, query: Option<u32>) -> Self {
        let kappa_index = sparseness_index(h);
        SparsenessReport {
            kappa_index,
            pure_witness: leap_set(h).into_iter().find(|l| l.size() == kappa_index),
            checks: query.map(|k| KappaChecks::evaluate(h, k)),
        }
    }
}
