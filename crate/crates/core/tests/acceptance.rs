//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the process
//! exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::brute_force_gap_sets;
use sparsegroup::enumerate::{enumerate_genus, enumerate_kappa_sparse, tree};
use sparsegroup::ideals::{is_arf_definition, is_arf_double, is_arf_stable};
use sparsegroup::kappa::{
    example_family, is_kappa_sparse, is_kappa_sparse_gapdiff, is_kappa_sparse_nongap,
    is_kappa_sparse_profile, is_kappa_sparse_run, is_pure_kappa_sparse, sparseness_index,
};
use sparsegroup::leaps::{frobenius_from_profile, is_hyperelliptic, is_sparse, leap_profile};
use sparsegroup::NumericalSemigroup;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn census(max_genus: u32) -> Vec<NumericalSemigroup> {
    tree(max_genus).collect()
}

fn show(h: &NumericalSemigroup) -> String {
    format!("gaps {:?}", h.gaps())
}

/// Fails with the first offending instance.
fn first_failure<T>(
    items: impl IntoIterator<Item = T>,
    ok: impl Fn(&T) -> Option<String>,
) -> Result<usize, String> {
    let mut n = 0;
    for item in items {
        n += 1;
        if let Some(msg) = ok(&item) {
            return Err(msg);
        }
    }
    Ok(n)
}

fn within(limit: Duration, started: Instant, detail: String) -> Outcome {
    let took = started.elapsed();
    if took < limit {
        Ok(format!("{detail} in {:.2?}", took))
    } else {
        Err(format!(
            "{detail}, but took {:.2?} (limit {:?})",
            took, limit
        ))
    }
}

fn oracle_census() -> Outcome {
    let started = Instant::now();
    let mut counts = Vec::new();
    for g in 0..=7 {
        let tree_count = enumerate_genus(g).len();
        let oracle_count = brute_force_gap_sets(g).len();
        if tree_count != oracle_count {
            return Err(format!(
                "genus {g}: tree {tree_count}, oracle {oracle_count}"
            ));
        }
        counts.push(tree_count);
    }
    within(
        Duration::from_secs(10),
        started,
        format!("counts g=0..7 {counts:?} match oracle"),
    )
}

fn arf_equivalence() -> Outcome {
    let started = Instant::now();
    let n = first_failure(census(10), |h| {
        let r = (is_arf_definition(h), is_arf_double(h), is_arf_stable(h));
        (r.0 != r.1 || r.1 != r.2).then(|| format!("{}: {:?}", show(h), r))
    })?;
    within(
        Duration::from_secs(60),
        started,
        format!("{n} semigroups of genus <= 10, zero disagreements"),
    )
}

fn kappa_equivalence() -> Outcome {
    let mut pairs = 0;
    for h in census(12) {
        let g = h.genus();
        for k in 2..=g + 2 {
            let r = [
                is_kappa_sparse_profile(&h, k),
                is_kappa_sparse_gapdiff(&h, k),
                is_kappa_sparse_nongap(&h, k),
                is_kappa_sparse_run(&h, k),
            ];
            if r.iter().any(|&b| b != r[0]) {
                return Err(format!("{}, kappa {k}: {:?}", show(&h), r));
            }
            pairs += 1;
        }
    }
    Ok(format!(
        "{pairs} (H, kappa) pairs up to genus 12, zero disagreements"
    ))
}

fn frobenius_from_leaps() -> Outcome {
    let hs = census(12);
    if frobenius_from_profile(&leap_profile(&NumericalSemigroup::trivial())) != -1 {
        return Err("trivial semigroup does not give -1".into());
    }
    let n = first_failure(hs, |h| {
        let got = frobenius_from_profile(&leap_profile(h));
        (got != h.frobenius()).then(|| format!("{}: {} vs {}", show(h), got, h.frobenius()))
    })?;
    Ok(format!("{n} semigroups of genus <= 12, exact"))
}

fn leap_biconditionals() -> Outcome {
    let n = first_failure(census(12), |h| {
        let g = h.genus();
        let p = leap_profile(h);
        let (v1, v2) = (p.count(1), p.count(2));
        let fail = |what: &str| Some(format!("{}: {what} (profile {p})", show(h)));
        if g > 0 {
            if is_hyperelliptic(h) != (v1 == 0) {
                return fail("hyperelliptic <=> v1 = 0");
            }
            if is_hyperelliptic(h) && !(v2 == g && p.total() == v2) {
                return fail("hyperelliptic => profile {2: g}");
            }
            if !is_hyperelliptic(h) && p.max_leap().unwrap() > g {
                return fail("non-hyperelliptic => v_(g+m) = 0");
            }
            if h.is_ordinary() != (v1 == g - 1 && v2 == 1) {
                return fail("ordinary <=> (v1, v2) = (g-1, 1)");
            }
            let big_k = 2 * g as i64 - h.frobenius();
            if is_sparse(h) != (v1 as i64 == big_k - 1 && v2 as i64 == g as i64 - big_k + 1) {
                return fail("K-form of the sparse criterion");
            }
        }
        if (v2 == 0) != h.is_trivial() {
            return fail("v2 = 0 <=> trivial");
        }
        if (v2 != 0) != !h.contains(1) {
            return fail("v2 != 0 <=> 1 not in H");
        }
        if is_sparse(h) != (v1 + v2 == g) {
            return fail("sparse <=> v1 + v2 = g");
        }
        if is_sparse(h) && h.frobenius() != v1 as i64 + 2 * v2 as i64 - 1 {
            return fail("sparse => Frobenius = v1 + 2 v2 - 1");
        }
        None
    })?;
    Ok(format!(
        "{n} semigroups of genus <= 12, all biconditionals hold"
    ))
}

fn frobenius_variety() -> Outcome {
    let small = census(8);
    let mut pairs = 0;
    for k in 2..=4 {
        let members: Vec<&NumericalSemigroup> =
            small.iter().filter(|h| is_kappa_sparse(h, k)).collect();
        for a in &members {
            for b in &members {
                if !is_kappa_sparse(&a.intersect(b), k) {
                    return Err(format!("{} ∩ {} leaves S_{k}", show(a), show(b)));
                }
                pairs += 1;
            }
        }
    }
    let mut adjoined = 0;
    for h in census(12).iter().filter(|h| !h.is_trivial()) {
        let parent = h.adjoin_frobenius().map_err(|e| e.to_string())?;
        for k in 2..=h.genus() + 2 {
            if is_kappa_sparse(h, k) {
                if !is_kappa_sparse(&parent, k) {
                    return Err(format!("{} ∪ {{F}} leaves S_{k}", show(h)));
                }
                adjoined += 1;
            }
        }
    }
    Ok(format!(
        "{pairs} intersections (genus <= 8, kappa 2..4) and {adjoined} adjunctions (genus <= 12), zero violations"
    ))
}

fn pruned_equals_filtered() -> Outcome {
    let mut cases = 0;
    for g in 0..=10 {
        let all = enumerate_genus(g);
        for k in 1..=6 {
            let pruned = enumerate_kappa_sparse(g, k);
            let pruned_set: BTreeSet<_> = pruned.iter().cloned().collect();
            if pruned_set.len() != pruned.len() {
                return Err(format!("genus {g}, kappa {k}: duplicates in pruned walk"));
            }
            let filtered: BTreeSet<_> = all
                .iter()
                .filter(|h| is_kappa_sparse(h, k))
                .cloned()
                .collect();
            if pruned_set != filtered {
                return Err(format!(
                    "genus {g}, kappa {k}: pruned {} vs filtered {}",
                    pruned_set.len(),
                    filtered.len()
                ));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} (genus, kappa) cases identical as sets"))
}

fn chain_and_partition() -> Outcome {
    for k in 1..=6u32 {
        let witness = if k == 1 {
            NumericalSemigroup::ordinary(1)
        } else {
            example_family(k as i64 + 1, k as i64 + 1).map_err(|e| e.to_string())?
        };
        if !(is_kappa_sparse(&witness, k + 1) && !is_kappa_sparse(&witness, k)) {
            return Err(format!(
                "witness {} not in S_{} \\ S_{k}",
                show(&witness),
                k + 1
            ));
        }
    }
    for g in 0..=12 {
        let level = enumerate_genus(g);
        let mut by_class = vec![0usize; g as usize + 3];
        for h in &level {
            let pure: Vec<u32> = (1..=g + 2)
                .filter(|&k| is_pure_kappa_sparse(h, k))
                .collect();
            if pure != [sparseness_index(h)] {
                return Err(format!("{} pure for {:?}", show(h), pure));
            }
            by_class[pure[0] as usize] += 1;
        }
        if by_class.iter().sum::<usize>() != level.len() {
            return Err(format!(
                "genus {g}: pure classes do not sum to {}",
                level.len()
            ));
        }
    }
    Ok("strict witnesses for kappa 1..6; pure classes partition genus 0..12".into())
}

fn example_family_uniqueness() -> Outcome {
    let mut checked = 0;
    for k in 3..=6u32 {
        for a in k..=k + 4 {
            let fam = example_family(a as i64, k as i64).map_err(|e| e.to_string())?;
            let g = 2 * a - k;
            if fam.genus() != g || fam.element(1) != a || fam.element(k as usize) != 2 * a {
                return Err(format!(
                    "a {a}, kappa {k}: parameters off for {}",
                    show(&fam)
                ));
            }
            let matches: Vec<NumericalSemigroup> = enumerate_genus(g)
                .into_iter()
                .filter(|h| h.element(1) == a && h.element(k as usize) == 2 * a)
                .filter(|h| is_pure_kappa_sparse(h, k))
                .collect();
            if matches != [fam.clone()] {
                return Err(format!("a {a}, kappa {k}: {} pure matches", matches.len()));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (a, kappa) pairs, unique match each"))
}

fn arf_implies_sparse() -> Outcome {
    let hs = census(10);
    let arf = hs.iter().filter(|h| is_arf_definition(h)).count();
    first_failure(hs.iter().filter(|h| is_arf_definition(h)), |h| {
        (sparseness_index(h) > 2)
            .then(|| format!("{} is Arf with index {}", show(h), sparseness_index(h)))
    })?;
    Ok(format!("{arf} Arf semigroups of genus <= 10, all sparse"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("oracle census", oracle_census),
        ("Arf characterisations agree", arf_equivalence),
        ("kappa-sparse characterisations agree", kappa_equivalence),
        ("Frobenius number from leap profile", frobenius_from_leaps),
        ("leap-count biconditionals", leap_biconditionals),
        ("Frobenius variety closure", frobenius_variety),
        ("pruned walk equals filtered census", pruned_equals_filtered),
        ("strict chain and pure partition", chain_and_partition),
        ("example family uniqueness", example_family_uniqueness),
        ("Arf implies sparse", arf_implies_sparse),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS  criterion {:>2}: {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {:>2}: {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
