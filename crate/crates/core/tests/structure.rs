use hallgroup::constructions::{catalogue, parse_group_expr};
use hallgroup::invariants::{
    commuting_probability, d_pi, k_pi, pi_part, prime_divisors, ExactRatio, PrimeSet,
};
use hallgroup::structure::*;
use hallgroup::{GroupError, PermGroup, Permutation};

fn g(text: &str) -> PermGroup {
    parse_group_expr(text).unwrap().build().unwrap()
}

fn pi(v: &[u64]) -> PrimeSet {
    PrimeSet::new(v.iter().copied()).unwrap()
}

fn cycle(n: usize, c: &[usize]) -> Permutation {
    Permutation::from_cycles(n, &[c.to_vec()]).unwrap()
}

#[test]
fn class_counts() {
    let sizes: Vec<u64> = conjugacy_classes(&g("Sym(3)"))
        .unwrap()
        .iter()
        .map(|c| c.size)
        .collect();
    assert_eq!(sizes, vec![1, 3, 2]);
    assert_eq!(conjugacy_classes(&g("Sym(4)")).unwrap().len(), 5);
    assert_eq!(conjugacy_classes(&g("SL2(5)")).unwrap().len(), 9);
    assert_eq!(conjugacy_classes(&g("SL2(7)")).unwrap().len(), 11);
    assert_eq!(conjugacy_classes(&g("Alt(5)")).unwrap().len(), 5);
}

#[test]
fn class_cap_is_enforced() {
    let err = conjugacy_classes_capped(&g("Sym(6)"), 100).unwrap_err();
    assert_eq!(err, GroupError::OrderExceedsCap(720));
}

#[test]
fn centralizers() {
    let s4 = g("Sym(4)");
    let id = Permutation::identity(4);
    assert_eq!(centralizer(&s4, &id).unwrap().order(), 24);
    assert_eq!(
        centralizer(&s4, &cycle(4, &[0, 1, 2, 3])).unwrap().order(),
        4
    );
    let a4 = g("Alt(4)");
    assert_eq!(
        centralizer(&a4, &cycle(4, &[0, 1])).unwrap_err(),
        GroupError::ElementNotInGroup
    );
    // a noncentral element has a centralizer strictly above the center
    let e27 = g("Extraspecial(3)");
    let z = center(&e27).unwrap().order();
    for x in e27.generators() {
        assert!(centralizer(&e27, x).unwrap().order() > z);
    }
    // later generators need not centralize earlier ones
    assert_eq!(centralizer_of_subgroup(&e27, &e27).unwrap().order(), 3);
    assert_eq!(centralizer_of_subgroup(&s4, &s4).unwrap().order(), 1);
    let d4 = g("Dihedral(4)");
    assert_eq!(centralizer_of_subgroup(&d4, &d4).unwrap().order(), 2);
    let v4 = PermGroup::new(4, vec![cycle(4, &[0, 1]), cycle(4, &[2, 3])]).unwrap();
    assert_eq!(centralizer_of_subgroup(&s4, &v4).unwrap().order(), 4);
}

#[test]
fn centers_and_derived_subgroups() {
    assert_eq!(center(&g("Cyclic(12)")).unwrap().order(), 12);
    assert_eq!(center(&g("Sym(3)")).unwrap().order(), 1);
    assert_eq!(center(&g("Extraspecial(3)")).unwrap().order(), 3);
    assert_eq!(center(&g("SL2(5)")).unwrap().order(), 2);
    assert_eq!(derived_subgroup(&g("Cyclic(30)")).unwrap().order(), 1);
    assert_eq!(derived_subgroup(&g("Sym(3)")).unwrap().order(), 3);
    assert_eq!(derived_subgroup(&g("Extraspecial(3)")).unwrap().order(), 3);
    assert_eq!(derived_subgroup(&g("Sym(4)")).unwrap().order(), 12);
    assert_eq!(derived_subgroup(&g("SL2(5)")).unwrap().order(), 120);
}

#[test]
fn normality() {
    let a5 = g("Alt(5)");
    assert!(is_normal(&a5, &derived_subgroup(&a5).unwrap()));
    assert!(is_normal(&a5, &center(&a5).unwrap()));
    let stab = PermGroup::new(5, vec![cycle(5, &[1, 2, 3]), cycle(5, &[2, 3, 4])]).unwrap();
    assert_eq!(stab.order(), 12);
    assert!(!is_normal(&a5, &SubgroupHandle::new(&a5, stab).unwrap()));
}

#[test]
fn quotients() {
    let s4 = g("Sym(4)");
    let trivial = SubgroupHandle::new(&s4, PermGroup::trivial(4).unwrap()).unwrap();
    assert_eq!(quotient(&s4, &trivial).unwrap().order(), 24);

    let v4 = PermGroup::new(
        4,
        vec![
            Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
            Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap(),
        ],
    )
    .unwrap();
    let s3 = quotient(&s4, &SubgroupHandle::new(&s4, v4).unwrap()).unwrap();
    assert_eq!(s3.order(), 6);
    assert!(!s3.is_abelian());
    assert!(is_sigma3(&s3));

    let sl = g("SL2(5)");
    let psl = quotient(&sl, &center(&sl).unwrap()).unwrap();
    assert_eq!(psl.order(), 60);

    let e27 = g("Extraspecial(3)");
    assert!(is_cp_x_cp(
        &quotient(&e27, &center(&e27).unwrap()).unwrap(),
        3
    ));

    let a5 = g("Alt(5)");
    let stab = PermGroup::new(5, vec![cycle(5, &[1, 2, 3]), cycle(5, &[2, 3, 4])]).unwrap();
    let err = quotient(&a5, &SubgroupHandle::new(&a5, stab).unwrap()).unwrap_err();
    assert_eq!(err, GroupError::NotNormal);
    assert!(matches!(
        quotient_capped(&s4, &trivial, 10),
        Err(GroupError::IndexExceedsCap(24))
    ));
}

#[test]
fn sylow_subgroups() {
    let s4 = g("Sym(4)");
    let p2 = sylow(&s4, 2).unwrap();
    assert_eq!(p2.order(), 8);
    assert!(is_nilpotent(&p2.subgroup).unwrap());
    assert!(!p2.subgroup.is_abelian());

    let a7 = g("Alt(7)");
    let p3 = sylow(&a7, 3).unwrap();
    assert_eq!(p3.order(), 9);
    assert!(is_elementary_abelian(&p3.subgroup, 3));

    let f21 = g("Semidirect(7,3)");
    let p7 = sylow(&f21, 7).unwrap();
    assert_eq!(p7.order(), 7);
    assert!(is_normal(&f21, &p7));
    assert_eq!(num_sylow(&f21, 7).unwrap(), 1);
    assert_eq!(num_sylow(&f21, 3).unwrap(), 7);
    assert_eq!(num_sylow(&s4, 3).unwrap(), 4);
    assert_eq!(num_sylow(&g("Alt(5)"), 5).unwrap(), 6);
    assert_eq!(
        sylow(&s4, 5).unwrap_err(),
        GroupError::PrimeDoesNotDivideOrder {
            prime: 5,
            order: 24
        }
    );
    assert_eq!(sylow(&s4, 4).unwrap_err(), GroupError::NotPrime(4));
}

#[test]
fn normalizers() {
    let s3 = g("Sym(3)");
    let p3 = sylow(&s3, 3).unwrap();
    assert_eq!(normalizer(&s3, &p3).unwrap().order(), 6);
    let s4 = g("Sym(4)");
    let p3 = sylow(&s4, 3).unwrap();
    assert_eq!(normalizer(&s4, &p3).unwrap().index(), 4);
}

#[test]
fn properties() {
    let c9 = g("Cyclic(9)");
    assert!(is_abelian(&c9));
    assert!(!is_elementary_abelian(&c9, 3));
    assert!(!is_cp_x_cp(&c9, 3));
    assert!(is_cp_x_cp(&g("ElemAbelian(3,2)"), 3));
    assert!(!is_nilpotent(&g("Sym(3)")).unwrap());
    assert!(is_nilpotent(&g("Extraspecial(3) x Cyclic(5)")).unwrap());
    assert!(is_nilpotent(&g("Wreath(3)")).unwrap());
    assert!(!is_nilpotent(&g("SL2(5)")).unwrap());
}

#[test]
fn commuting_sylow_pairs() {
    assert!(find_commuting_sylow_pair(&g("Cyclic(15)"), 3, 5)
        .unwrap()
        .is_some());
    assert!(find_commuting_sylow_pair(&g("Semidirect(7,3)"), 3, 7)
        .unwrap()
        .is_none());
    let (p, q) = find_commuting_sylow_pair(&g("Extraspecial(3) x Cyclic(5)"), 3, 5)
        .unwrap()
        .unwrap();
    assert_eq!((p.order(), q.order()), (27, 5));
    assert!(find_commuting_sylow_pair(&g("Sym(4)"), 2, 5).is_err());
}

#[test]
fn hall_decisions() {
    let a5 = g("Alt(5)");
    assert!(has_nilpotent_hall(&a5, &pi(&[5])).unwrap());
    assert!(!has_nilpotent_hall(&a5, &pi(&[3, 5])).unwrap());
    let big = g("Extraspecial(3) x Dihedral(5) x Dihedral(7)");
    assert!(has_nilpotent_hall(&big, &pi(&[3, 5, 7])).unwrap());
    assert!(!has_abelian_hall(&big, &pi(&[3, 5, 7])).unwrap());

    let c105 = g("Cyclic(105)");
    for s in pi(&[3, 5, 7]).subsets() {
        assert!(has_abelian_hall(&c105, &s).unwrap());
    }
    assert!(!has_abelian_hall(&g("Extraspecial(3) x Cyclic(5)"), &pi(&[3, 5])).unwrap());
    assert!(has_abelian_hall(&g("Sym(3)"), &pi(&[3])).unwrap());
    // primes not dividing the order are ignored
    assert!(has_nilpotent_hall(&g("Sym(3)"), &pi(&[3, 7])).unwrap());
}

#[test]
fn hall_witnesses() {
    let h = construct_nilpotent_hall(&g("Cyclic(15)"), &pi(&[3, 5])).unwrap();
    assert_eq!(h.witness().unwrap().order(), 15);
    let none = construct_nilpotent_hall(&g("Semidirect(7,3)"), &pi(&[3, 7])).unwrap();
    assert!(matches!(none, HallConstruction::Absent));
    let s2 = construct_nilpotent_hall(&g("Sym(4)"), &pi(&[2])).unwrap();
    assert_eq!(s2.witness().unwrap().order(), 8);

    let big = g("Extraspecial(3) x Dihedral(5) x Dihedral(7)");
    let w = construct_nilpotent_hall(&big, &pi(&[3, 5, 7])).unwrap();
    let h = w.witness().unwrap();
    assert_eq!(h.order(), 27 * 5 * 7);
    assert!(is_nilpotent(&h.subgroup).unwrap());
    assert_eq!(derived_subgroup(&h.subgroup).unwrap().order(), 3);

    let tight = construct_nilpotent_hall_with_budget(&big, &pi(&[3, 5, 7]), 0).unwrap();
    assert!(matches!(tight, HallConstruction::ExistsByLemmaOnly));
}

#[test]
fn invariant_examples() {
    let f21 = g("Semidirect(7,3)");
    assert_eq!(k_pi(&f21, &pi(&[3, 7])).unwrap(), 5);
    assert_eq!(d_pi(&f21, &pi(&[3, 7])).unwrap(), ExactRatio::new(5, 21));
    assert_eq!(k_pi(&g("Alt(7)"), &pi(&[3])).unwrap(), 3);
    assert_eq!(
        d_pi(&g("Sym(4)"), &pi(&[2])).unwrap(),
        ExactRatio::new(1, 2)
    );
    assert_eq!(
        commuting_probability(&g("Sym(3)")).unwrap(),
        ExactRatio::new(1, 2)
    );
    assert_eq!(
        commuting_probability(&g("Extraspecial(3)")).unwrap(),
        ExactRatio::new(11, 27)
    );
    assert_eq!(
        d_pi(&g("Cyclic(30)"), &pi(&[2, 5])).unwrap(),
        ExactRatio::one()
    );
    let s4 = g("Sym(4)");
    let all = PrimeSet::new(prime_divisors(24)).unwrap();
    assert_eq!(k_pi(&s4, &all).unwrap(), 5);
}

#[test]
fn catalogue_builds_within_budget() {
    for entry in catalogue() {
        let group = entry.expr.build().unwrap();
        assert!(group.order() <= 2_000_000, "{}", entry.name);
        let classes = conjugacy_classes(&group).unwrap();
        let total: u64 = classes.iter().map(|c| c.size).sum();
        assert_eq!(total, group.order(), "{}", entry.name);
        for c in &classes {
            assert_eq!(group.order() % c.size, 0);
        }
    }
}

#[test]
fn construction_properties() {
    for (q, p) in [(7u64, 3u64), (13, 3), (11, 5)] {
        let f = g(&format!("Semidirect({q},{p})"));
        assert_eq!(derived_subgroup(&f).unwrap().order(), q);
        assert_eq!(center(&f).unwrap().order(), 1);
        assert_eq!(num_sylow(&f, q).unwrap(), 1);
    }
    for p in [3u64, 5] {
        let e = g(&format!("Extraspecial({p})"));
        let z = center(&e).unwrap();
        assert_eq!(z.order(), p);
        assert_eq!(derived_subgroup(&e).unwrap().order(), p);
        assert!(is_cp_x_cp(&quotient(&e, &z).unwrap(), p));
    }
    let w = g("Wreath(3)");
    assert_eq!(w.order(), 81);
    assert!(!w.is_abelian());
    let s9 = g("Sym(9)");
    assert_eq!(pi_part(s9.order(), &pi(&[3])), 81);
    for q in [5u64, 7, 11, 13] {
        let sl = g(&format!("SL2({q})"));
        assert_eq!(sl.order(), q * (q - 1) * (q + 1));
        assert_eq!(center(&sl).unwrap().order(), 2);
    }
}
