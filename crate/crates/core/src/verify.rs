//! Machine-checks the structural results about leaps, Arf and κ-sparse
//! semigroups over every semigroup up to a genus bound.

use std::fmt;

use serde::Serialize;

use crate::enumerate::tree;
use crate::ideals::{is_arf_definition, is_arf_double, is_arf_stable};
use crate::io::format_gap_line;
use crate::kappa::{
    example_family, frobenius_identity_check, is_kappa_sparse, is_kappa_sparse_gapdiff,
    is_kappa_sparse_nongap, is_kappa_sparse_run, is_pure_kappa_sparse, is_pure_kappa_sparse_run,
    sparseness_index,
};
use crate::leaps::{frobenius_from_profile, is_hyperelliptic, is_sparse, leap_profile};
use crate::semigroup::NumericalSemigroup;

/// Pairwise intersection closure is checked up to this genus only.
pub const PAIR_GENUS_LIMIT: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub statement: &'static str,
    pub instances: u64,
    pub counterexample: Option<String>,
}

impl CheckResult {
    fn new(name: &'static str, statement: &'static str) -> Self {
        CheckResult {
            name,
            statement,
            instances: 0,
            counterexample: None,
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(detail());
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(
                f,
                "PASS\t{}\t{} instances\t{}",
                self.name, self.instances, self.statement
            ),
            Some(cx) => write!(
                f,
                "FAIL\t{}\t{} instances\t{}\tcounterexample: {}",
                self.name, self.instances, self.statement, cx
            ),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub max_genus: u32,
    pub semigroups: u64,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed())
    }
}

fn show(h: &NumericalSemigroup) -> String {
    format!("gaps {{{}}}", format_gap_line(h))
}

/// Runs every check over all semigroups of genus `≤ max_genus`.
pub fn verify(max_genus: u32) -> VerificationReport {
    let census: Vec<NumericalSemigroup> = tree(max_genus).collect();

    let mut arf = CheckResult::new(
        "arf-equivalence",
        "triple condition = double condition = all H(n_k) stable",
    );
    let mut hyper = CheckResult::new(
        "hyperelliptic-leaps",
        "hyperelliptic <=> v1 = 0, then profile is {2: g}; otherwise no leap exceeds g",
    );
    let mut counts = CheckResult::new(
        "leap-counts",
        "v2 = 0 <=> trivial <=> 1 in H; ordinary <=> (v1, v2) = (g-1, 1)",
    );
    let mut sparse = CheckResult::new(
        "sparse-leaps",
        "sparse <=> v1 + v2 = g; then Frobenius = v1 + 2 v2 - 1; K-form",
    );
    let mut kappa_eq = CheckResult::new(
        "kappa-equivalence",
        "four kappa-sparse tests agree for 2 <= kappa <= g + 2",
    );
    let mut pure_run = CheckResult::new(
        "pure-run",
        "pure kappa-sparse <=> kappa-sparse with a run of kappa-1 members below c (kappa >= 3)",
    );
    let mut frob = CheckResult::new(
        "frobenius-from-leaps",
        "sum m v_m - 1 = Frobenius; identity pair <=> kappa-sparse",
    );
    let mut chain = CheckResult::new(
        "chain-and-partition",
        "S_k within S_(k+1) strictly; each H pure for exactly one kappa",
    );
    let mut inter = CheckResult::new(
        "intersection-closure",
        "H1, H2 in S_k => H1 ∩ H2 in S_k (kappa in 2..=4)",
    );
    let mut adjoin = CheckResult::new(
        "frobenius-adjoin-closure",
        "H in S_k, g > 0 => H ∪ {Frobenius} in S_k",
    );
    let mut arf_sparse = CheckResult::new("arf-implies-sparse", "Arf => sparse");
    let mut family = CheckResult::new(
        "example-family",
        "{a..a+k-2} ∪ N_(2a-1) is the unique pure k-sparse H of genus 2a-k with n1 = a, n_k = 2a",
    );

    for h in &census {
        let g = h.genus();
        let p = leap_profile(h);
        let (v1, v2) = (p.count(1), p.count(2));
        let frobenius = h.frobenius();

        let a = (is_arf_definition(h), is_arf_double(h), is_arf_stable(h));
        arf.check(a.0 == a.1 && a.1 == a.2, || {
            format!("{}: definition/double/stable = {:?}", show(h), a)
        });
        arf_sparse.check(!a.0 || is_sparse(h), || show(h));

        if g > 0 {
            let he = is_hyperelliptic(h);
            let ok = p.total() == g
                && (he == (v1 == 0))
                && (!he || (v2 == g && p.max_leap() == Some(2)))
                && (he || p.max_leap().unwrap() <= g);
            hyper.check(ok, || format!("{}: profile {}", show(h), p));
        }

        let ok = (v2 == 0) == h.is_trivial()
            && (v2 != 0) == !h.contains(1)
            && (g == 0
                || (h.is_ordinary() == (v1 == g - 1 && v2 == 1)
                    && (!h.is_ordinary() || p.max_leap() == Some(2))))
            && (1..=g + 2).all(|k| p.total_up_to(k) <= g);
        counts.check(ok, || format!("{}: profile {}", show(h), p));

        let sp = is_sparse(h);
        let mut ok = sp == (v1 + v2 == g);
        if sp {
            ok &= frobenius == v1 as i64 + 2 * v2 as i64 - 1;
        }
        if g > 0 {
            let big_k = 2 * g as i64 - frobenius;
            ok &= big_k > 0 && sp == (v1 as i64 == big_k - 1 && v2 as i64 == g as i64 - big_k + 1);
        }
        sparse.check(ok, || format!("{}: profile {}", show(h), p));

        if g > 0 {
            for k in 2..=g + 2 {
                let four = [
                    is_kappa_sparse(h, k),
                    is_kappa_sparse_gapdiff(h, k),
                    is_kappa_sparse_nongap(h, k),
                    is_kappa_sparse_run(h, k),
                ];
                kappa_eq.check(four.iter().all(|&b| b == four[0]), || {
                    format!("{}, kappa {}: {:?}", show(h), k, four)
                });
            }
            for k in 3..=g + 2 {
                let (a, b) = (is_pure_kappa_sparse(h, k), is_pure_kappa_sparse_run(h, k));
                pure_run.check(a == b, || {
                    format!("{}, kappa {}: {} vs {}", show(h), k, a, b)
                });
            }
        }

        frob.check(frobenius_from_profile(&p) == frobenius, || {
            format!("{}: profile {} vs Frobenius {}", show(h), p, frobenius)
        });
        for k in 2..=g + 2 {
            if is_kappa_sparse(h, k) {
                frob.check(p.weighted_up_to(k) - 1 == frobenius, || {
                    format!("{}, kappa {}: truncated sum", show(h), k)
                });
            }
            if g > 0 {
                let id = frobenius_identity_check(h, k).expect("g > 0 and kappa >= 2");
                frob.check(id == is_kappa_sparse(h, k), || {
                    format!("{}, kappa {}: identity {}", show(h), k, id)
                });
            }
        }

        let index = sparseness_index(h);
        let searched = (1..).find(|&k| is_kappa_sparse(h, k)).unwrap();
        let pure_for: Vec<u32> = (1..=g + 2)
            .filter(|&k| is_pure_kappa_sparse(h, k))
            .collect();
        let monotone = (1..=g + 2).all(|k| !is_kappa_sparse(h, k) || is_kappa_sparse(h, k + 1));
        let ok = monotone
            && pure_for == [index]
            && searched == index
            && is_kappa_sparse(h, 1) == h.is_trivial()
            && is_kappa_sparse(h, 2) == is_sparse(h);
        chain.check(ok, || {
            format!("{}: index {}, pure for {:?}", show(h), index, pure_for)
        });

        if g > 0 {
            let parent = h.adjoin_frobenius().expect("positive genus");
            for k in 2..=max_genus + 2 {
                if is_kappa_sparse(h, k) {
                    adjoin.check(is_kappa_sparse(&parent, k), || {
                        format!("{}, kappa {}", show(h), k)
                    });
                }
            }
        }
    }

    // Strictness of the chain: a genus-matched witness in S_(k+1) \ S_k.
    for k in 1..=max_genus {
        let witness = if k == 1 {
            NumericalSemigroup::ordinary(1)
        } else {
            example_family(k as i64 + 1, k as i64 + 1).expect("k + 1 >= 3")
        };
        if witness.genus() > max_genus {
            continue;
        }
        chain.check(
            is_kappa_sparse(&witness, k + 1) && !is_kappa_sparse(&witness, k),
            || format!("no strict witness for kappa {k}"),
        );
    }

    let small: Vec<&NumericalSemigroup> = census
        .iter()
        .filter(|h| h.genus() <= PAIR_GENUS_LIMIT)
        .collect();
    for k in 2..=4 {
        let members: Vec<&&NumericalSemigroup> =
            small.iter().filter(|h| is_kappa_sparse(h, k)).collect();
        for (i, a) in members.iter().enumerate() {
            for b in &members[i..] {
                let meet = a.intersect(b);
                inter.check(is_kappa_sparse(&meet, k), || {
                    format!("{} ∩ {}, kappa {}", show(a), show(b), k)
                });
            }
        }
    }

    for k in 3..=max_genus + 2 {
        for a in k as i64..=(max_genus as i64 + k as i64) / 2 {
            let fam = example_family(a, k as i64).expect("valid parameters");
            let g = (2 * a - k as i64) as u32;
            let matches: Vec<&NumericalSemigroup> = census
                .iter()
                .filter(|h| h.genus() == g)
                .filter(|h| h.element(1) as i64 == a && h.element(k as usize) as i64 == 2 * a)
                .filter(|h| is_pure_kappa_sparse(h, k))
                .collect();
            family.check(fam.genus() == g && matches == [&fam], || {
                format!("a {a}, kappa {k}: {} matches", matches.len())
            });
        }
    }

    VerificationReport {
        max_genus,
        semigroups: census.len() as u64,
        checks: vec![
            arf, hyper, counts, sparse, kappa_eq, pure_run, frob, chain, inter, adjoin, arf_sparse,
            family,
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_census_passes() {
        let report = verify(6);
        assert_eq!(report.semigroups, 1 + 1 + 2 + 4 + 7 + 12 + 23);
        for c in &report.checks {
            assert!(c.passed(), "{c}");
            assert!(c.instances > 0, "{} ran no instances", c.name);
        }
    }

    #[test]
    fn failure_rendering() {
        let mut c = CheckResult::new("x", "y");
        c.check(true, || unreachable!());
        c.check(false, || "first".into());
        c.check(false, || "second".into());
        assert_eq!(c.instances, 3);
        assert_eq!(
            c.to_string(),
            "FAIL\tx\t3 instances\ty\tcounterexample: first"
        );
    }
}
