use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;

use crate::constructions::{load_generators, Atom, CatalogueEntry, GroupExpr};
use crate::error::{GroupError, Result};
use crate::invariants::{
    k_pi_from_classes, k_pi_sl2_torus, pi_part, prime_divisors, thresholds, ExactRatio, PrimeSet,
};
use crate::perm::PermGroup;
use crate::structure::{center, conjugacy_classes, derived_subgroup, quotient, HallConstruction};

use super::analysis::Analysis;
use super::checks::*;
use super::report::{CheckResult, Report, Status};

/// Moduli for the `SL(2, q)` class-count comparison.
pub const TORUS_MODULI: [u64; 6] = [5, 7, 11, 13, 17, 19];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Hall thresholds, witness bound, and the `d_π` inequalities per (G, π).
    Hall,
    /// Commuting-probability statements per group.
    Pr,
    /// Sylow structure forced by large `d_π`.
    Sylow,
    /// Bounds on simple groups.
    Simple,
    /// `SL(2, q)` class counts against maximal tori.
    Torus,
    /// Worked examples with printed values.
    Sharpness,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 7] =
        ["hall", "pr", "sylow", "simple", "torus", "sharpness", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Self::Hall => "hall",
            Self::Pr => "pr",
            Self::Sylow => "sylow",
            Self::Simple => "simple",
            Self::Torus => "torus",
            Self::Sharpness => "sharpness",
            Self::All => "all",
        }
    }

    fn uses_catalogue(self) -> bool {
        matches!(self, Self::Hall | Self::Pr | Self::Sylow | Self::All)
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "hall" => Self::Hall,
            "pr" => Self::Pr,
            "sylow" => Self::Sylow,
            "simple" => Self::Simple,
            "torus" => Self::Torus,
            "sharpness" => Self::Sharpness,
            "all" => Self::All,
            other => {
                return Err(format!(
                    "unknown suite {other:?}; expected one of {}",
                    Self::NAMES.join(", ")
                ))
            }
        })
    }
}

/// A group to run per-group suites on.
#[derive(Clone, Debug)]
pub struct Subject {
    pub name: String,
    pub group: PermGroup,
    pub factors: Vec<PermGroup>,
}

impl Subject {
    pub fn from_expr(expr: &GroupExpr) -> Result<Self> {
        let (group, factors) = expr.build_factors()?;
        Ok(Self {
            name: expr.to_string(),
            group,
            factors,
        })
    }

    pub fn from_entry(entry: &CatalogueEntry) -> Result<Self> {
        Self::from_expr(&entry.expr)
    }
}

/// Every nonempty `π` of primes dividing `order` with `|π| ≤ max_pi`.
pub fn pi_sets(order: u64, max_pi: usize) -> Vec<PrimeSet> {
    PrimeSet::new(prime_divisors(order))
        .expect("prime divisors are prime")
        .subsets_up_to(max_pi)
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect()
}

fn run_subject(subject: &Subject, suite: Suite, max_pi: usize) -> Vec<CheckResult> {
    let a = Analysis::new(
        &subject.name,
        subject.group.clone(),
        subject.factors.clone(),
    );
    let mut out = Vec::new();
    if matches!(suite, Suite::Pr | Suite::All) {
        out.extend(check_pr_suite(&a));
    }
    for pi in pi_sets(a.order(), max_pi) {
        if matches!(suite, Suite::Hall | Suite::All) {
            out.push(check_main_theorem(&a, &pi));
            out.push(check_hall_witness(&a, &pi));
            out.push(check_dpi_monotone(&a, &pi));
            out.push(check_dpi_normal_product(&a, &pi));
        }
        if matches!(suite, Suite::Sylow | Suite::All) {
            out.extend(check_sylow_suite(&a, &pi));
        }
    }
    out
}

/// The per-group suites over `subjects`, in input order.
pub fn sweep_subjects(subjects: &[Subject], suite: Suite, max_pi: usize) -> Vec<CheckResult> {
    subjects
        .par_iter()
        .map(|s| run_subject(s, suite, max_pi))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Main theorem, Pr statements and Sylow statements over every catalogue
/// group and every `π` of at most `max_pi` primes dividing its order.
pub fn sweep(catalogue: &[CatalogueEntry], max_pi: usize) -> Report {
    let mut results = Vec::new();
    let mut subjects = Vec::new();
    for entry in catalogue {
        match Subject::from_entry(entry) {
            Ok(s) => subjects.push(s),
            Err(e) => results.push(CheckResult::new("build", &entry.name, None).skipped(e)),
        }
    }
    results.extend(sweep_subjects(&subjects, Suite::All, max_pi));
    Report::new("sweep", results)
}

fn psl2(q: u64) -> Result<(String, PermGroup)> {
    let sl = Atom::Sl2(q).build()?;
    let z = center(&sl)?;
    Ok((format!("SL2({q})/Z"), quotient(&sl, &z)?))
}

/// `Alt(5..8)` and `PSL(2, q)` for `q ∈ {5, 7, 11, 13}`.
fn simple_groups() -> Vec<Result<(String, PermGroup)>> {
    let mut out: Vec<Result<(String, PermGroup)>> = (5..=8)
        .map(|n| Ok((format!("Alt({n})"), Atom::Alt(n).build()?)))
        .collect();
    out.extend([5, 7, 11, 13].map(psl2));
    out
}

/// Nonabelian simple `S`: `d_π(S) ≤ 1/2` whenever `2 ∈ π`, and for odd
/// `π = {p, q}` with `P/Z(P)` abelian, `d_π(S) ≤ 1/p`.
pub fn check_simple_suite() -> Vec<CheckResult> {
    simple_groups()
        .into_par_iter()
        .map(|built| match built {
            Ok((name, group)) => simple_checks(&name, &group).unwrap_or_else(|e| {
                vec![CheckResult::new("simple-even-bound", &name, None).skipped(e)]
            }),
            Err(e) => vec![CheckResult::new("simple-even-bound", "?", None).skipped(e)],
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn simple_checks(name: &str, group: &PermGroup) -> Result<Vec<CheckResult>> {
    let a = Analysis::new(name, group.clone(), vec![]);
    let mut out = Vec::new();
    let half = ExactRatio::new(1, 2);
    for pi in pi_sets(a.order(), usize::MAX) {
        if !pi.contains(2) {
            continue;
        }
        let d = a.d_pi(&pi)?;
        let failures = if d > half {
            vec![format!("d_pi = {d} > 1/2")]
        } else {
            vec![]
        };
        out.push(
            CheckResult::new("simple-even-bound", name, Some(&pi))
                .values(d, half.clone())
                .conclude(failures, ""),
        );
    }
    let odd = PrimeSet::new(a.primes().into_iter().filter(|&p| p != 2))?;
    for (p, q) in odd.pairs() {
        let pi = PrimeSet::new([p, q])?;
        let d = a.d_pi(&pi)?;
        let bound = ExactRatio::new(1, p);
        let r = CheckResult::new("simple-odd-pair-bound", name, Some(&pi))
            .values(d.clone(), bound.clone());
        let facts = a.sylow_facts(p)?;
        out.push(if !facts.derived_is_central {
            r.vacuous()
        } else {
            let failures = if d > bound {
                vec![format!("d_pi = {d} > 1/{p}")]
            } else {
                vec![]
            };
            r.conclude(failures, "P/Z(P) abelian")
        });
    }
    Ok(out)
}

/// Class counts of `SL(2, q)` against `((q−1)_π + (q+1)_π)/2`, and against
/// `PSL(2, q)` when the center is a π'-group.
pub fn check_torus_formula() -> Vec<CheckResult> {
    TORUS_MODULI
        .into_par_iter()
        .map(|q| {
            torus_checks(q).unwrap_or_else(|e| {
                vec![CheckResult::new("torus-class-count", &format!("SL2({q})"), None).skipped(e)]
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Odd primes dividing `q² − 1`.
pub fn torus_pi_sets(q: u64) -> Vec<PrimeSet> {
    let odd = prime_divisors(q * q - 1)
        .into_iter()
        .filter(|&p| p != 2 && p != q);
    PrimeSet::new(odd)
        .expect("primes")
        .subsets()
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect()
}

fn torus_checks(q: u64) -> Result<Vec<CheckResult>> {
    let sl = Atom::Sl2(q).build()?;
    let name = format!("SL2({q})");
    let classes = conjugacy_classes(&sl)?;
    let z = center(&sl)?;
    let psl = quotient(&sl, &z)?;
    let psl_classes = conjugacy_classes(&psl)?;
    let mut out = Vec::new();
    for pi in torus_pi_sets(q) {
        let k = k_pi_from_classes(&classes, &pi);
        let formula = k_pi_sl2_torus(q, &pi)?;
        let failures = if ExactRatio::integer(k) != formula {
            vec![format!("k_pi = {k} but torus count = {formula}")]
        } else {
            vec![]
        };
        out.push(
            CheckResult::new("torus-class-count", &name, Some(&pi))
                .values(ExactRatio::integer(k), formula)
                .conclude(failures, ""),
        );

        let r = CheckResult::new("torus-center-erasure", &name, Some(&pi));
        let k_psl = k_pi_from_classes(&psl_classes, &pi);
        out.push(if pi_part(z.order(), &pi) != 1 {
            r.vacuous()
        } else {
            let failures = if k != k_psl {
                vec![format!("k_pi(SL2) = {k} but k_pi(PSL2) = {k_psl}")]
            } else {
                vec![]
            };
            r.values(k, k_psl).conclude(failures, "")
        });
    }
    Ok(out)
}

fn analysis_of(text: &str) -> Result<Analysis> {
    let expr: GroupExpr = text
        .parse()
        .map_err(|e| GroupError::InvalidParameters(format!("{e}")))?;
    let s = Subject::from_expr(&expr)?;
    Ok(Analysis::new(s.name, s.group, s.factors))
}

/// The worked examples: printed `d_π` of `Sym(4) × C_5` and `Alt(4) × C_5`,
/// the Frobenius groups `C_q ⋊ C_p` with `q = 2p + 1`, sharpness of the
/// abelian threshold, and a nilpotent Hall subgroup below the threshold.
pub fn check_sharpness_examples() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for text in ["Sym(4) x Cyclic(5)", "Alt(4) x Cyclic(5)"] {
        out.push(printed_value_check(text));
    }
    for (p, q) in [(3u64, 7u64), (5, 11)] {
        out.push(frobenius_check(p, q));
    }
    out.push(abelian_sharpness_check());
    out.push(converse_check());
    out
}

fn skip_on_error(
    id: &str,
    group: &str,
    pi: &PrimeSet,
    run: impl FnOnce() -> Result<CheckResult>,
) -> CheckResult {
    run().unwrap_or_else(|e| CheckResult::new(id, group, Some(pi)).skipped(e))
}

/// The printed value is 1/6; `k_π/|G|_π` gives 1/2, `k_π/|G|` gives 1/6.
fn printed_value_check(text: &str) -> CheckResult {
    let pi = PrimeSet::new([2, 5]).expect("primes");
    skip_on_error("example-direct-product-dpi", text, &pi, || {
        let a = analysis_of(text)?;
        let printed = ExactRatio::new(1, 6);
        let d = a.d_pi(&pi)?;
        let k = a.k_pi(&pi)?;
        let over_order = ExactRatio::new(k, a.order());
        let mut r = CheckResult::new("example-direct-product-dpi", &a.name, Some(&pi))
            .values(d.clone(), printed.clone());
        r.fired = true;
        if d == printed {
            r.status = Status::Verified;
            r.detail = "matches".into();
        } else {
            r.status = Status::PrintedValueMismatch;
            r.detail = format!(
                "k_pi = {k}; k_pi/|G|_pi = {d}; k_pi/|G| = {over_order}{}",
                if over_order == printed {
                    ", which equals the printed value"
                } else {
                    ""
                }
            );
        }
        Ok(r)
    })
}

fn frobenius_check(p: u64, q: u64) -> CheckResult {
    let text = format!("Semidirect({q},{p})");
    let pi = PrimeSet::new([p, q]).expect("primes");
    skip_on_error("example-frobenius", &text, &pi, || {
        let a = analysis_of(&text)?;
        let k = a.k_pi(&pi)?;
        let d = a.d_pi(&pi)?;
        let expected_k = p + (q - 1) / p;
        let expected_d =
            ExactRatio::new(1, 2 * p + 1) * (ExactRatio::one() + ExactRatio::new(2, p));
        let floor = ExactRatio::new(1, 2 * p);
        let mut failures = Vec::new();
        if k != expected_k {
            failures.push(format!("k_pi = {k}, expected {expected_k}"));
        }
        if d != expected_d {
            failures.push(format!("d_pi = {d}, expected {expected_d}"));
        }
        if d <= floor {
            failures.push(format!("d_pi = {d} not above 1/(2p) = {floor}"));
        }
        if a.has_nilpotent_hall(&pi)? {
            failures.push("unexpected nilpotent Hall subgroup".into());
        }
        Ok(CheckResult::new("example-frobenius", &a.name, Some(&pi))
            .values(d, floor)
            .conclude(failures, format!("k_pi = {k}, no nilpotent Hall subgroup")))
    })
}

fn abelian_sharpness_check() -> CheckResult {
    let text = "Extraspecial(3) x Cyclic(5)";
    let pi = PrimeSet::new([3, 5]).expect("primes");
    skip_on_error("example-abelian-threshold", text, &pi, || {
        let a = analysis_of(text)?;
        let d = a.d_pi(&pi)?;
        let t = thresholds(3).abelian;
        let mut failures = Vec::new();
        if d != t {
            failures.push(format!("d_pi = {d}, expected {t}"));
        }
        if a.has_abelian_hall(&pi)? {
            failures.push("unexpected abelian Hall subgroup".into());
        }
        match a.hall(&pi)? {
            HallConstruction::Witness(h) => {
                let derived = derived_subgroup(&h.subgroup)?.order();
                if derived != 3 {
                    failures.push(format!("witness has |H'| = {derived}"));
                }
            }
            _ => failures.push("no nilpotent Hall witness".into()),
        }
        Ok(
            CheckResult::new("example-abelian-threshold", &a.name, Some(&pi))
                .values(d, t)
                .conclude(failures, "equal to the threshold, no abelian Hall subgroup"),
        )
    })
}

fn converse_check() -> CheckResult {
    let text = "Extraspecial(3) x Dihedral(5) x Dihedral(7)";
    let pi = PrimeSet::new([3, 5, 7]).expect("primes");
    skip_on_error("example-converse-fails", text, &pi, || {
        let a = analysis_of(text)?;
        let d = a.d_pi(&pi)?;
        let expected = ExactRatio::new(11, 27) * ExactRatio::new(3, 5) * ExactRatio::new(4, 7);
        let third = ExactRatio::new(1, 3);
        let mut failures = Vec::new();
        if d != expected {
            failures.push(format!("d_pi = {d}, expected {expected}"));
        }
        if d >= third {
            failures.push(format!("d_pi = {d} not below 1/3"));
        }
        if !a.has_nilpotent_hall(&pi)? {
            failures.push("no nilpotent Hall subgroup".into());
        }
        Ok(
            CheckResult::new("example-converse-fails", &a.name, Some(&pi))
                .values(d, third)
                .conclude(failures, "nilpotent Hall subgroup below the threshold"),
        )
    })
}

/// `d_{3,5}(J_1) = 2/5`, run only when a generator file is supplied.
pub fn check_j1(path: Option<&Path>) -> CheckResult {
    let pi = PrimeSet::new([3, 5]).expect("primes");
    let r = CheckResult::new("example-j1", "J1", Some(&pi));
    let Some(path) = path else {
        return r.skipped("no generator file supplied");
    };
    let group = match load_generators(path) {
        Ok(g) => g,
        Err(e) => return r.skipped(e),
    };
    if group.order() != 175_560 {
        return r.skipped(format!("file generates a group of order {}", group.order()));
    }
    match conjugacy_classes(&group) {
        Ok(classes) => {
            let k = k_pi_from_classes(&classes, &pi);
            let d = ExactRatio::new(k, pi_part(group.order(), &pi));
            let printed = ExactRatio::new(2, 5);
            let failures = if d != printed {
                vec![format!("d_pi = {d}")]
            } else {
                vec![]
            };
            r.values(d, printed)
                .conclude(failures, format!("k_pi = {k}"))
        }
        Err(e) => r.skipped(e),
    }
}

/// Runs `suite` over `subjects` (the catalogue when empty) and collects a
/// report. Suites that do not take groups ignore `subjects`.
pub fn run_suite(
    suite: Suite,
    subjects: Option<&[Subject]>,
    max_pi: usize,
    j1: Option<&Path>,
) -> Report {
    let mut results = Vec::new();
    if suite.uses_catalogue() {
        match subjects {
            Some(s) => results.extend(sweep_subjects(s, suite, max_pi)),
            None => {
                let mut subjects = Vec::new();
                for entry in crate::constructions::catalogue() {
                    match Subject::from_entry(&entry) {
                        Ok(s) => subjects.push(s),
                        Err(e) => {
                            results.push(CheckResult::new("build", &entry.name, None).skipped(e))
                        }
                    }
                }
                results.extend(sweep_subjects(&subjects, suite, max_pi));
            }
        }
    }
    if matches!(suite, Suite::Simple | Suite::All) {
        results.extend(check_simple_suite());
    }
    if matches!(suite, Suite::Torus | Suite::All) {
        results.extend(check_torus_formula());
    }
    if matches!(suite, Suite::Sharpness | Suite::All) {
        results.extend(check_sharpness_examples());
        results.push(check_j1(j1));
    }
    Report::new(suite.name(), results)
}
