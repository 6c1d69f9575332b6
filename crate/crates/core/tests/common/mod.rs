//! Reference implementations that share no code with the library.

#![allow(dead_code)]

/// All gap sets of genus `g`: every `g`-subset of `[1, 2g − 1]` whose
/// complement in `ℕ₀` is additively closed. Sorted lexicographically.
pub fn brute_force_gap_sets(g: u32) -> Vec<Vec<u32>> {
    if g == 0 {
        return vec![Vec::new()];
    }
    let top = 2 * g - 1;
    let mut out = Vec::new();
    // bit i-1 of `mask` marks i ∈ [1, top] as a gap
    for mask in 0u64..(1u64 << top) {
        if mask.count_ones() != g {
            continue;
        }
        let is_gap = |n: u32| n >= 1 && n <= top && mask >> (n - 1) & 1 == 1;
        let closed =
            (1..=top).all(|x| is_gap(x) || (x..=top - x).all(|y| is_gap(y) || !is_gap(x + y)));
        if closed {
            out.push((1..=top).filter(|&n| is_gap(n)).collect());
        }
    }
    out.sort();
    out
}

/// Membership of `[0, bound]` in the monoid generated by `gens`.
pub fn reachable_sums(gens: &[u32], bound: usize) -> Vec<bool> {
    let mut reach = vec![false; bound + 1];
    reach[0] = true;
    for n in 1..=bound {
        reach[n] = gens
            .iter()
            .any(|&g| (g as usize) <= n && reach[n - g as usize]);
    }
    reach
}

/// Gap set of the monoid generated by `gens`, assuming every gap is below
/// `bound / 2`.
pub fn gaps_from_generators(gens: &[u32], bound: usize) -> Vec<u32> {
    let reach = reachable_sums(gens, bound);
    let last_gap = (0..=bound).rev().find(|&n| !reach[n]);
    match last_gap {
        None => Vec::new(),
        Some(f) => {
            assert!(2 * f < bound, "bound too small for these generators");
            (1..=f).filter(|&n| !reach[n]).map(|n| n as u32).collect()
        }
    }
}

/// Semigroup membership from a gap list.
pub fn member(gaps: &[u32], n: i64) -> bool {
    n >= 0 && !gaps.contains(&(n as u32))
}

/// `{z : F + z ⊆ E}` restricted to `zs`, with `E` and `F` given as
/// predicates that are full from `horizon` on and empty below `-horizon`.
pub fn colon_by_definition(
    e: impl Fn(i64) -> bool,
    f: impl Fn(i64) -> bool,
    horizon: i64,
    zs: std::ops::RangeInclusive<i64>,
) -> Vec<i64> {
    zs.filter(|&z| {
        (-horizon..=horizon + z.abs() + horizon)
            .filter(|&y| f(y))
            .all(|y| e(y + z))
    })
    .collect()
}
