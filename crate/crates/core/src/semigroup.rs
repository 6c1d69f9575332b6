//! Canonical representation of a numerical semigroup and the quantities
//! read directly off its gap set.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::bits::BitSet;
use crate::error::{Result, SemigroupError};

/// Largest conductor the constructors accept unless a different cap is given.
pub const DEFAULT_CONDUCTOR_CAP: u64 = 1_000_000;

/// A numerical semigroup `H ⊆ ℕ₀`, stored by its sorted gap sequence.
///
/// The membership bitset over `[0, c]` is a cache derived from the gaps;
/// equality, ordering and hashing look at the gaps only. Construction is the
/// only place where closure under addition is checked.
#[derive(Clone)]
pub struct NumericalSemigroup {
    gaps: Vec<u32>,
    members: BitSet,
}

impl NumericalSemigroup {
    /// The trivial semigroup `ℕ₀`.
    pub fn trivial() -> Self {
        Self::from_sorted_gaps_unchecked(Vec::new())
    }

    /// The ordinary semigroup `{0} ∪ {n ≥ g + 1}`.
    pub fn ordinary(genus: u32) -> Self {
        Self::from_sorted_gaps_unchecked((1..=genus).collect())
    }

    /// Builds `H` from its set of gaps, rejecting sets whose complement is not
    /// additively closed.
    pub fn from_gaps<I: IntoIterator<Item = i64>>(gaps: I) -> Result<Self> {
        Self::from_gaps_with_cap(gaps, DEFAULT_CONDUCTOR_CAP)
    }

    pub fn from_gaps_with_cap<I: IntoIterator<Item = i64>>(gaps: I, cap: u64) -> Result<Self> {
        let mut sorted = Vec::new();
        for gap in gaps {
            if gap <= 0 {
                return Err(SemigroupError::InvalidGap(gap));
            }
            if gap as u64 >= cap {
                return Err(SemigroupError::ConductorTooLarge { cap });
            }
            sorted.push(gap as u32);
        }
        sorted.sort_unstable();
        sorted.dedup();

        let h = Self::from_sorted_gaps_unchecked(sorted);
        if let Some((x, y)) = h.closure_violation() {
            return Err(SemigroupError::NotASemigroup {
                x: x as u64,
                y: y as u64,
            });
        }
        Ok(h)
    }

    /// Smallest numerical semigroup containing `gens`.
    pub fn from_generators<I: IntoIterator<Item = i64>>(gens: I) -> Result<Self> {
        Self::from_generators_with_cap(gens, DEFAULT_CONDUCTOR_CAP)
    }

    pub fn from_generators_with_cap<I: IntoIterator<Item = i64>>(
        gens: I,
        cap: u64,
    ) -> Result<Self> {
        let mut gens_u = Vec::new();
        for g in gens {
            if g <= 0 {
                return Err(SemigroupError::InvalidGenerator(g));
            }
            gens_u.push(g as u64);
        }
        gens_u.sort_unstable();
        gens_u.dedup();
        if gens_u.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        let gcd = gens_u.iter().fold(0u64, |acc, &g| num_integer::gcd(acc, g));
        if gcd != 1 {
            return Err(SemigroupError::NotCofinite { gcd });
        }

        // Sieve reachable sums until `m` consecutive members appear; from there
        // on everything is reachable by adding the multiplicity.
        let m = gens_u[0] as usize;
        let mut reachable = vec![true];
        let mut run = 1usize;
        let mut n = 0usize;
        while run < m {
            n += 1;
            if (n + 1).saturating_sub(m) as u64 > cap {
                return Err(SemigroupError::ConductorTooLarge { cap });
            }
            let hit = gens_u
                .iter()
                .take_while(|&&g| g as usize <= n)
                .any(|&g| reachable[n - g as usize]);
            reachable.push(hit);
            run = if hit { run + 1 } else { 0 };
        }
        let conductor = n + 1 - m;
        let gaps = (1..conductor)
            .filter(|&i| !reachable[i])
            .map(|i| i as u32)
            .collect();
        Ok(Self::from_sorted_gaps_unchecked(gaps))
    }

    /// Trusted constructor: `gaps` must be strictly increasing, positive and
    /// have an additively closed complement.
    pub(crate) fn from_sorted_gaps_unchecked(gaps: Vec<u32>) -> Self {
        let conductor = gaps.last().map_or(0, |&l| l as usize + 1);
        let mut members = BitSet::new(conductor + 1);
        for n in 0..=conductor {
            members.set(n, true);
        }
        for &l in &gaps {
            members.set(l as usize, false);
        }
        NumericalSemigroup { gaps, members }
    }

    /// First pair of members `(x, y)`, `x ≤ y`, whose sum is a gap.
    pub(crate) fn closure_violation(&self) -> Option<(u32, u32)> {
        for &l in &self.gaps {
            for x in 1..=l / 2 {
                if self.contains(x as i64) && self.contains((l - x) as i64) {
                    return Some((x, l - x));
                }
            }
        }
        None
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn genus(&self) -> u32 {
        self.gaps.len() as u32
    }

    /// Smallest `c` with every integer `≥ c` in `H`; 0 for `ℕ₀`.
    pub fn conductor(&self) -> u32 {
        self.gaps.last().map_or(0, |&l| l + 1)
    }

    /// Largest gap, or −1 for `ℕ₀`.
    pub fn frobenius(&self) -> i64 {
        self.conductor() as i64 - 1
    }

    /// Least positive element `n₁`.
    pub fn multiplicity(&self) -> u32 {
        (1..)
            .find(|&n| self.contains(n as i64))
            .expect("cofinite set has a positive member")
    }

    pub fn is_trivial(&self) -> bool {
        self.gaps.is_empty()
    }

    /// True iff `H = ℕ_g` for its own genus.
    pub fn is_ordinary(&self) -> bool {
        self.conductor() == self.genus() + 1 || self.is_trivial()
    }

    #[inline]
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            false
        } else if n >= self.conductor() as i64 {
            true
        } else {
            self.members.get(n as usize)
        }
    }

    /// Number of elements of `H` in `[0, c]`, i.e. `c − g + 1`.
    pub fn small_element_count(&self) -> usize {
        (self.conductor() - self.genus()) as usize + 1
    }

    /// `n₀ < n₁ < … < n_{c−g} = c`.
    pub fn small_elements(&self) -> Vec<u32> {
        self.members.iter_ones().map(|n| n as u32).collect()
    }

    /// The `i`-th element `nᵢ` of `H` in increasing order.
    pub fn element(&self, i: usize) -> u32 {
        let top = self.small_element_count() - 1;
        if i >= top {
            self.conductor() + (i - top) as u32
        } else {
            self.members.iter_ones().nth(i).expect("index below c - g") as u32
        }
    }

    /// Unique minimal generating set, ascending.
    pub fn minimal_generators(&self) -> Vec<u32> {
        let small: Vec<u32> = self.small_elements().into_iter().skip(1).collect();
        let bound = self.conductor() + self.multiplicity();
        (1..=bound)
            .filter(|&h| self.contains(h as i64))
            .filter(|&h| {
                !small
                    .iter()
                    .take_while(|&&x| 2 * x <= h)
                    .any(|&x| self.contains((h - x) as i64))
            })
            .collect()
    }

    /// `H₁ ∩ H₂`; its gap set is the union of the two gap sets.
    pub fn intersect(&self, other: &Self) -> Self {
        let mut gaps = Vec::with_capacity(self.gaps.len() + other.gaps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.gaps.len() || j < other.gaps.len() {
            let next = match (self.gaps.get(i), other.gaps.get(j)) {
                (Some(&a), Some(&b)) => match a.cmp(&b) {
                    Ordering::Less => {
                        i += 1;
                        a
                    }
                    Ordering::Greater => {
                        j += 1;
                        b
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        a
                    }
                },
                (Some(&a), None) => {
                    i += 1;
                    a
                }
                (None, Some(&b)) => {
                    j += 1;
                    b
                }
                (None, None) => unreachable!(),
            };
            gaps.push(next);
        }
        let h = Self::from_sorted_gaps_unchecked(gaps);
        debug_assert!(h.closure_violation().is_none());
        h
    }

    /// `H ∪ {ℓ_g}`: removes the Frobenius number from the gap set.
    pub fn adjoin_frobenius(&self) -> Result<Self> {
        if self.is_trivial() {
            return Err(SemigroupError::TrivialSemigroup);
        }
        let gaps = self.gaps[..self.gaps.len() - 1].to_vec();
        let h = Self::from_sorted_gaps_unchecked(gaps);
        debug_assert!(h.closure_violation().is_none());
        Ok(h)
    }

    /// `H ∖ {x}` for a minimal generator `x > ℓ_g`. Returns `None` when `x`
    /// is not such a generator.
    pub fn remove_generator(&self, x: u32) -> Option<Self> {
        if (x as i64) <= self.frobenius() || !self.contains(x as i64) {
            return None;
        }
        let is_sum = (1..=x / 2).any(|a| self.contains(a as i64) && self.contains((x - a) as i64));
        if is_sum {
            return None;
        }
        let mut gaps = self.gaps.clone();
        gaps.push(x);
        Some(Self::from_sorted_gaps_unchecked(gaps))
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.gaps == other.gaps
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.gaps.hash(state);
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gaps.cmp(&other.gaps)
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumericalSemigroup")
            .field("gaps", &self.gaps)
            .finish()
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .minimal_generators()
            .iter()
            .map(u32::to_string)
            .collect();
        write!(f, "<{}>", gens.join(","))
    }
}

impl Default for NumericalSemigroup {
    fn default() -> Self {
        Self::trivial()
    }
}
