use crate::error::{GroupError, Result};
use crate::invariants::{
    commuting_probability, d_pi_from_classes, f_p, g_p, pi_part, smallest_prime_divisor,
    thresholds, ExactRatio, PrimeSet,
};
use crate::structure::{derived_subgroup, is_nilpotent, quotient, HallConstruction};

use super::analysis::Analysis;
use super::report::CheckResult;

/// Turns a computation error into a skipped result.
fn or_skip(base: CheckResult, run: impl FnOnce(CheckResult) -> Result<CheckResult>) -> CheckResult {
    let fallback = base.clone();
    run(base).unwrap_or_else(|e: GroupError| fallback.skipped(e))
}

/// `d_π > 1/p` forces a nilpotent Hall π-subgroup with `|H'| ≤ p`, and
/// `d_π > (p² + p − 1)/p³` forces an abelian one.
pub fn check_main_theorem(a: &Analysis, pi: &PrimeSet) -> CheckResult {
    let base = CheckResult::new("hall-threshold", &a.name, Some(pi));
    or_skip(base, |r| {
        let Some(p) = pi.min() else {
            return Ok(r.vacuous());
        };
        let d = a.d_pi(pi)?;
        let t = thresholds(p);
        let r = r.values(d.clone(), t.nilpotent.clone());
        if d <= t.nilpotent {
            return Ok(r.vacuous());
        }
        let mut failures = Vec::new();
        let mut notes = vec![format!("d_pi = {d} > 1/{p}")];
        if !a.has_nilpotent_hall(pi)? {
            failures.push("no nilpotent Hall subgroup".to_string());
        } else {
            match a.hall(pi)? {
                HallConstruction::Witness(h) => {
                    let derived = derived_subgroup(&h.subgroup)?.order();
                    if derived > p {
                        failures.push(format!("witness has |H'| = {derived} > {p}"));
                    } else {
                        notes.push(format!(
                            "witness of order {} with |H'| = {derived}",
                            h.order()
                        ));
                    }
                }
                HallConstruction::ExistsByLemmaOnly => {
                    notes.push("exists by the pairwise criterion, no witness assembled".into())
                }
                HallConstruction::Absent => failures.push("witness search found none".into()),
            }
        }
        if d > t.abelian {
            notes.push(format!("d_pi > {}", t.abelian));
            if !a.has_abelian_hall(pi)? {
                failures.push("no abelian Hall subgroup".into());
            }
        }
        Ok(r.conclude(failures, notes.join("; ")))
    })
}

/// For a constructed Hall witness `H`: `|H| = |G|_π`, `H` nilpotent, and
/// `d_π(G) ≤ Pr(H)`.
pub fn check_hall_witness(a: &Analysis, pi: &PrimeSet) -> CheckResult {
    let base = CheckResult::new("hall-witness", &a.name, Some(pi));
    or_skip(base, |r| {
        let HallConstruction::Witness(h) = a.hall(pi)? else {
            return Ok(r.vacuous());
        };
        let d = a.d_pi(pi)?;
        let pr = commuting_probability(&h.subgroup)?;
        let r = r.values(d.clone(), pr.clone());
        let mut failures = Vec::new();
        let target = pi_part(a.order(), pi);
        if h.order() != target {
            failures.push(format!("|H| = {} but |G|_pi = {target}", h.order()));
        }
        if !is_nilpotent(&h.subgroup)? {
            failures.push("witness is not nilpotent".into());
        }
        if d > pr {
            failures.push(format!("d_pi = {d} exceeds Pr(H) = {pr}"));
        }
        Ok(r.conclude(failures, format!("|H| = {target}, Pr(H) = {pr}")))
    })
}

/// The commuting-probability statements, with `p` the smallest prime
/// dividing `|G|`.
pub fn check_pr_suite(a: &Analysis) -> Vec<CheckResult> {
    let ids = [
        "pr-nonabelian-bound",
        "pr-derived-bound",
        "pr-small-derived",
        "pr-derived-order-p",
        "pr-large-derived",
    ];
    let Some(p) = smallest_prime_divisor(a.order()) else {
        return ids
            .iter()
            .map(|id| CheckResult::new(id, &a.name, None).skipped("trivial group"))
            .collect();
    };
    match pr_suite(a, p, &ids) {
        Ok(results) => results,
        Err(e) => ids
            .iter()
            .map(|id| CheckResult::new(id, &a.name, None).skipped(&e))
            .collect(),
    }
}

fn pr_suite(a: &Analysis, p: u64, ids: &[&str; 5]) -> Result<Vec<CheckResult>> {
    let pr = a.pr()?;
    let z = a.center()?;
    let derived = a.derived()?.order();
    let index_z = z.index();
    let t = thresholds(p);
    let abelian = a.group.is_abelian();
    // G/Z is never cyclic for nonabelian G, so an index of p² means C_p × C_p.
    let central_quotient_cp2 = !abelian && index_z == p * p;
    let central_quotient_sigma3 = if index_z == 6 {
        let q = quotient(&a.group, z)?;
        !q.is_abelian()
    } else {
        false
    };
    let new = |id: &str| CheckResult::new(id, &a.name, None);
    let mut out = Vec::new();

    // (a)
    let r = new(ids[0]).values(pr.clone(), t.abelian.clone());
    out.push(if abelian {
        r.vacuous()
    } else {
        let mut failures = Vec::new();
        if pr > t.abelian {
            failures.push(format!("Pr = {pr} exceeds {}", t.abelian));
        }
        if (pr == t.abelian) != central_quotient_cp2 {
            failures.push(format!(
                "equality {} but G/Z(G) is{} C{p} x C{p}",
                pr == t.abelian,
                if central_quotient_cp2 { "" } else { " not" }
            ));
        }
        r.conclude(failures, format!("|G:Z(G)| = {index_z}"))
    });

    // (b)
    let bound = g_p(p, derived);
    let r = new(ids[1]).values(pr.clone(), bound.clone());
    let failures = if pr > bound {
        vec![format!("Pr = {pr} exceeds g_{p}({derived}) = {bound}")]
    } else {
        vec![]
    };
    out.push(r.conclude(failures, format!("|G'| = {derived}")));

    // (c)
    let r = new(ids[2]).values(derived, p);
    out.push(if derived > p {
        r.vacuous()
    } else {
        let mut failures = Vec::new();
        if !a.derived()?.subgroup.is_subgroup_of(&z.subgroup) {
            failures.push("G' is not central".into());
        }
        if !a.is_nilpotent()? {
            failures.push("G is not nilpotent".into());
        }
        r.conclude(failures, "G' central, G nilpotent")
    });

    // (d)
    let in_window = pr > t.nilpotent && pr <= t.abelian;
    let r = new(ids[3]).values(pr.clone(), derived);
    let mut failures = Vec::new();
    if in_window != (derived == p) {
        failures.push(format!(
            "Pr = {pr} {} the window but |G'| = {derived}",
            if in_window { "inside" } else { "outside" }
        ));
    }
    if derived == p {
        let exact = ExactRatio::new(1, p) + ExactRatio::new(p - 1, p * index_z);
        if pr != exact {
            failures.push(format!("Pr = {pr} but 1/p + (p-1)/(p|G:Z|) = {exact}"));
        }
    }
    out.push(r.conclude(failures, format!("window test {in_window}")));

    // (e)
    let f = f_p(p);
    let r = new(ids[4]).values(pr.clone(), f.clone());
    out.push(if derived <= p {
        r.vacuous()
    } else {
        let mut failures = Vec::new();
        if pr > f {
            failures.push(format!("Pr = {pr} exceeds f({p}) = {f}"));
        }
        let hits = pr == t.nilpotent;
        let shape = p == 2 && central_quotient_sigma3;
        if hits != shape {
            failures.push(format!(
                "Pr = 1/p is {hits} while (p = 2 and G/Z(G) = Sym(3)) is {shape}"
            ));
        }
        r.conclude(failures, format!("|G'| = {derived} > {p}"))
    });
    Ok(out)
}

/// Structure of Sylow subgroups forced by `d_π > 1/p`.
pub fn check_sylow_suite(a: &Analysis, pi: &PrimeSet) -> Vec<CheckResult> {
    let ids = [
        "sylow-central-quotient",
        "sylow-abelian-above-min",
        "sylow-normalizer-action",
        "sylow-pair-dichotomy",
    ];
    match sylow_suite(a, pi, &ids) {
        Ok(results) => results,
        Err(e) => ids
            .iter()
            .map(|id| CheckResult::new(id, &a.name, Some(pi)).skipped(&e))
            .collect(),
    }
}

fn sylow_suite(a: &Analysis, pi: &PrimeSet, ids: &[&str; 4]) -> Result<Vec<CheckResult>> {
    let new = |id: &str| CheckResult::new(id, &a.name, Some(pi));
    let pi = &pi.restricted_to_divisors_of(a.order());
    let Some(p) = pi.min() else {
        return Ok(ids.iter().map(|id| new(id).vacuous()).collect());
    };
    let d = a.d_pi(pi)?;
    let fires = d > ExactRatio::new(1, p);
    let others: Vec<u64> = pi.primes().iter().copied().filter(|&q| q != p).collect();
    let mut out = Vec::new();

    let r = new(ids[0]).values(d.clone(), ExactRatio::new(1, p));
    out.push(if !fires {
        r.vacuous()
    } else {
        let mut failures = Vec::new();
        for &q in pi.primes() {
            let s = a.sylow_facts(q)?;
            if !s.derived_is_central {
                failures.push(format!("Sylow {q}: Q/Z(Q) nonabelian"));
            }
            if s.derived_order > q {
                failures.push(format!("Sylow {q}: |Q'| = {} > {q}", s.derived_order));
            }
        }
        r.conclude(failures, "Q/Z(Q) abelian and |Q'| <= q for every q")
    });

    let r = new(ids[1]).values(d.clone(), ExactRatio::new(1, p));
    out.push(if !fires || others.is_empty() {
        r.vacuous()
    } else {
        let mut failures = Vec::new();
        for &q in &others {
            if !a.sylow_facts(q)?.is_abelian {
                failures.push(format!("Sylow {q} is nonabelian"));
            }
        }
        r.conclude(failures, "Sylow subgroups above p abelian")
    });

    let r = new(ids[2]).values(d.clone(), ExactRatio::new(1, p));
    out.push(if !fires || others.is_empty() {
        r.vacuous()
    } else {
        let s = a.sylow_facts(p)?;
        let action = s.normalizer_order / s.centralizer_order;
        let mut failures = Vec::new();
        for &q in &others {
            if action % q == 0 {
                failures.push(format!("{q} divides |N(P):C(P)| = {action}"));
            }
        }
        r.conclude(failures, format!("|N(P):C(P)| = {action}"))
    });

    // Applied to each pair {p, q} with its own premise.
    let r = new(ids[3]);
    let mut fired_any = false;
    let mut failures = Vec::new();
    for &q in &others {
        let pair = PrimeSet::new([p, q])?;
        if a.d_pi(&pair)? <= ExactRatio::new(1, p) {
            continue;
        }
        fired_any = true;
        let n = a.sylow_facts(p)?.num_sylow;
        if n % q != 0 && !a.nilpotent_pair(p, q)? {
            failures.push(format!(
                "{q} does not divide n_{p} = {n} and no nilpotent Hall {pair}"
            ));
        }
    }
    out.push(if fired_any {
        r.conclude(failures, "q | n_p or nilpotent Hall {p,q}")
    } else {
        r.vacuous()
    });
    Ok(out)
}

/// `d_π ≤ d_μ` for every `μ ⊆ π`.
pub fn check_dpi_monotone(a: &Analysis, pi: &PrimeSet) -> CheckResult {
    let base = CheckResult::new("dpi-subset-monotone", &a.name, Some(pi));
    or_skip(base, |r| {
        if pi.len() < 2 {
            return Ok(r.vacuous());
        }
        let d = a.d_pi(pi)?;
        let mut failures = Vec::new();
        let mut largest = ExactRatio::zero();
        for mu in pi.subsets() {
            if mu.len() == pi.len() {
                continue;
            }
            let dm = a.d_pi(&mu)?;
            if d > dm {
                failures.push(format!("d_{mu} = {dm} < {d}"));
            }
            if largest < dm {
                largest = dm;
            }
        }
        Ok(r.values(d, largest)
            .conclude(failures, "all proper subsets"))
    })
}

/// `d_π(G) ≤ d_π(N) d_π(G/N)` over the tested normal subgroups.
pub fn check_dpi_normal_product(a: &Analysis, pi: &PrimeSet) -> CheckResult {
    let base = CheckResult::new("dpi-normal-product", &a.name, Some(pi));
    or_skip(base, |r| {
        let (pieces, skipped) = a.normal_pieces()?;
        if pieces.is_empty() {
            return Ok(r.vacuous());
        }
        let d = a.d_pi(pi)?;
        let mut failures = Vec::new();
        let mut tightest: Option<ExactRatio> = None;
        for n in pieces {
            let product = d_pi_from_classes(&n.classes, n.order, pi)
                * d_pi_from_classes(&n.quotient_classes, n.quotient_order, pi);
            if d > product {
                failures.push(format!("{}: product {product} < {d}", n.label));
            }
            if tightest.as_ref().is_none_or(|t| product < *t) {
                tightest = Some(product);
            }
        }
        let labels: Vec<&str> = pieces.iter().map(|n| n.label.as_str()).collect();
        let mut note = format!("normals {}", labels.join(","));
        if !skipped.is_empty() {
            note.push_str(&format!("; quotient too large for {}", skipped.join(",")));
        }
        Ok(r.values(d, tightest.expect("nonempty"))
            .conclude(failures, note))
    })
}
