mod common;

use std::collections::HashSet;

use common::{classes, closure, d_pi_of};
use hallgroup::constructions::{parse_group_expr, Atom, GroupExpr};
use hallgroup::invariants::{d_pi, k_pi, pi_part, prime_divisors, ExactRatio, PrimeSet};
use hallgroup::structure::oracle::SubgroupOracle;
use hallgroup::structure::{
    center, centralizer, conjugacy_classes, construct_nilpotent_hall, derived_subgroup,
    has_nilpotent_hall, is_nilpotent, num_sylow, quotient, sylow,
};
use hallgroup::{PermGroup, Permutation};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

fn perm_triple() -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (1usize..9).prop_flat_map(|n| (perm(n), perm(n), perm(n)))
}

/// A subgroup of `Sym(n)` for `2 ≤ n ≤ max_degree` on one to three random generators.
fn subgroup(max_degree: usize) -> impl Strategy<Value = PermGroup> {
    (2usize..=max_degree).prop_flat_map(|n| {
        prop::collection::vec(perm(n), 1..=3).prop_map(move |gens| PermGroup::new(n, gens).unwrap())
    })
}

fn prime_subset() -> impl Strategy<Value = PrimeSet> {
    prop::sample::subsequence(vec![2u64, 3, 5, 7], 1..=3).prop_map(|v| PrimeSet::new(v).unwrap())
}

fn small_atom() -> impl Strategy<Value = Atom> {
    prop_oneof![
        (2u64..=4).prop_map(Atom::Sym),
        (4u64..=5).prop_map(Atom::Alt),
        (1u64..=12).prop_map(Atom::Cyclic),
        (3u64..=7).prop_map(Atom::Dihedral),
        Just(Atom::Extraspecial(3)),
        Just(Atom::Semidirect(7, 3)),
        Just(Atom::ElemAbelian(2, 2)),
    ]
}

fn any_atom() -> impl Strategy<Value = Atom> {
    prop_oneof![
        any::<u64>().prop_map(Atom::Sym),
        any::<u64>().prop_map(Atom::Alt),
        any::<u64>().prop_map(Atom::Cyclic),
        any::<u64>().prop_map(Atom::Dihedral),
        (any::<u64>(), any::<u64>()).prop_map(|(p, k)| Atom::ElemAbelian(p, k)),
        any::<u64>().prop_map(Atom::Extraspecial),
        any::<u64>().prop_map(Atom::Wreath),
        (any::<u64>(), any::<u64>()).prop_map(|(q, p)| Atom::Semidirect(q, p)),
        any::<u64>().prop_map(Atom::Sl2),
    ]
}

fn element_set(group: &PermGroup) -> HashSet<Permutation> {
    group.elements(u64::MAX).unwrap().into_iter().collect()
}

proptest! {
    #[test]
    fn composition_laws((a, b, c) in perm_triple()) {
        let id = Permutation::identity(a.degree());
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &id, a.clone());
        prop_assert_eq!(&a * &a.inverse(), id.clone());
        prop_assert_eq!((&a * &b).inverse(), &b.inverse() * &a.inverse());
        for i in 0..a.degree() {
            prop_assert_eq!((&a * &b).image(i), b.image(a.image(i)));
        }
        prop_assert_eq!(a.conjugate_by(&b), &(&b.inverse() * &a) * &b);
        prop_assert!(a.pow(a.order()).is_identity());
        prop_assert_eq!(a.commutes_with(&b), &a * &b == &b * &a);
    }

    #[test]
    fn expressions_round_trip(atoms in prop::collection::vec(any_atom(), 1..5)) {
        let expr = GroupExpr::new(atoms).unwrap();
        let printed = expr.to_string();
        prop_assert_eq!(parse_group_expr(&printed).unwrap(), expr);
    }

    #[test]
    fn ratios_and_prime_sets_round_trip(n in 0u64..1000, d in 1u64..1000, set in prime_subset()) {
        let r = ExactRatio::new(n, d);
        let text = r.to_string();
        prop_assert!(text.contains('/'));
        prop_assert_eq!(text.parse::<ExactRatio>().unwrap(), r);
        let list = set.primes().iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        prop_assert_eq!(list.parse::<PrimeSet>().unwrap(), set);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn order_membership_and_lagrange(g in subgroup(6), probe in (2usize..=6).prop_flat_map(perm)) {
        let all = closure(&g);
        prop_assert_eq!(g.order(), all.len() as u64);
        for x in &all {
            prop_assert!(g.contains(x).unwrap());
            prop_assert_eq!(g.order() % x.order(), 0);
        }
        if probe.degree() == g.degree() {
            prop_assert_eq!(g.contains(&probe).unwrap(), all.contains(&probe));
        }
    }

    #[test]
    fn class_equation(g in subgroup(6)) {
        let cls = conjugacy_classes(&g).unwrap();
        prop_assert_eq!(cls.iter().map(|c| c.size).sum::<u64>(), g.order());
        for c in &cls {
            prop_assert_eq!(g.order() % c.size, 0);
            prop_assert_eq!(c.size * centralizer(&g, &c.representative).unwrap().order(), g.order());
        }
        prop_assert_eq!(cls.len(), classes(&closure(&g)).len());
    }

    #[test]
    fn d_pi_is_a_monotone_fraction(g in subgroup(6), set in prime_subset()) {
        let d = d_pi(&g, &set).unwrap();
        prop_assert!(d > ExactRatio::zero() && d <= ExactRatio::one());
        let brute = d_pi_of(&classes(&closure(&g)), g.order(), set.primes());
        prop_assert_eq!(&d, &brute);
        for mu in set.subsets() {
            prop_assert!(d <= d_pi(&g, &mu).unwrap());
        }
    }

    #[test]
    fn sylow_counts_and_conjugacy(g in subgroup(6), shuffle in any::<prop::sample::Index>()) {
        let mut gens = g.generators().to_vec();
        let k = shuffle.index(gens.len());
        gens.rotate_left(k);
        let again = PermGroup::new(g.degree(), gens.into_iter().rev().collect()).unwrap();
        let elements = g.elements(u64::MAX).unwrap();
        for p in prime_divisors(g.order()) {
            let n = num_sylow(&g, p).unwrap();
            prop_assert_eq!(n % p, 1);
            prop_assert_eq!((g.order() / pi_part(g.order(), &PrimeSet::new([p]).unwrap())) % n, 0);
            let a = element_set(&sylow(&g, p).unwrap().subgroup);
            let b = element_set(&sylow(&again, p).unwrap().subgroup);
            let conjugate = elements
                .iter()
                .any(|x| a.iter().all(|y| b.contains(&y.conjugate_by(x))));
            prop_assert!(conjugate, "Sylow {}-subgroups are not conjugate", p);
        }
    }

    #[test]
    fn quotient_orders_multiply(g in subgroup(6)) {
        for n in [center(&g).unwrap(), derived_subgroup(&g).unwrap()] {
            let q = quotient(&g, &n).unwrap();
            prop_assert_eq!(n.order() * q.order(), g.order());
        }
    }

    #[test]
    fn hall_search_matches_oracle(g in subgroup(5), set in prime_subset()) {
        let oracle = SubgroupOracle::new(&g).unwrap();
        let fast = has_nilpotent_hall(&g, &set).unwrap();
        prop_assert_eq!(fast, oracle.has_nilpotent_hall(&set));
        if let Some(h) = construct_nilpotent_hall(&g, &set).unwrap().witness() {
            prop_assert_eq!(h.order(), pi_part(g.order(), &set));
            prop_assert!(is_nilpotent(&h.subgroup).unwrap());
        } else {
            prop_assert!(!fast);
        }
    }

    #[test]
    fn k_pi_multiplies_over_direct_products(a in small_atom(), b in small_atom(), set in prime_subset()) {
        let left = GroupExpr::atom(a.clone()).build().unwrap();
        let right = GroupExpr::atom(b.clone()).build().unwrap();
        let product = GroupExpr::atom(a).times(GroupExpr::atom(b)).build().unwrap();
        prop_assert_eq!(product.order(), left.order() * right.order());
        prop_assert_eq!(product.degree(), left.degree() + right.degree());
        prop_assert_eq!(
            k_pi(&product, &set).unwrap(),
            k_pi(&left, &set).unwrap() * k_pi(&right, &set).unwrap()
        );
        prop_assert_eq!(
            d_pi(&product, &set).unwrap(),
            d_pi(&left, &set).unwrap() * d_pi(&right, &set).unwrap()
        );
    }
}
