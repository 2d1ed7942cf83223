use super::*;
use crate::algebra::{factorize, p_part};
use crate::families::{cyclic, psl2, sl2};
use crate::lattice::{enumerate_subgroups, maximal_subgroups};
use crate::testkit::{corpus, named};

#[test]
fn closure_examples() {
    let s3 = close_from_generators(3, &[Perm::parse("(1,2)", 3).unwrap(), Perm::parse("(1,2,3)", 3).unwrap()], 100)
        .unwrap();
    assert_eq!(s3.order(), 6);
    let a5 = close_from_generators(
        5,
        &[Perm::parse("(1,2,3,4,5)", 5).unwrap(), Perm::parse("(3,4,5)", 5).unwrap()],
        100,
    )
    .unwrap();
    assert_eq!(a5.order(), 60);
    assert_eq!(close_from_generators(4, &[], 100).unwrap().order(), 1);
}

#[test]
fn closure_cap_is_a_hard_error() {
    let err = close_from_generators(5, &[Perm::parse("(1,2,3,4,5)", 5).unwrap(), Perm::parse("(1,2)", 5).unwrap()], 50)
        .unwrap_err();
    assert!(matches!(err, Error::ClosureCapExceeded { cap: 50 }));
}

#[test]
fn rule_closure_examples() {
    let c6 = close_from_rule(0u64, |a: &u64, b: &u64| (a + b) % 6, &[1], 100).unwrap();
    assert_eq!(c6.group.order(), 6);
    assert_eq!(c6.elements[0], 0);
    // (v, t)(w, s) = (v + 2^t w, t + s) over GF(7) ⋊ Z/3
    let mul = |&(v, t): &(u64, u64), &(w, s): &(u64, u64)| ((v + 2u64.pow(t as u32) * w) % 7, (t + s) % 3);
    let g = close_from_rule((0u64, 0u64), mul, &[(1, 0), (0, 1)], 100).unwrap();
    assert_eq!(g.group.order(), 21);
    assert_eq!(sl2(3).unwrap().order(), 24);
}

#[test]
fn group_axioms_on_corpus() {
    for (name, g) in corpus() {
        assert!(g.check_associativity_exhaustive(), "{name}");
        for x in g.elements() {
            assert_eq!(g.mul(x, g.identity()), x);
            assert_eq!(g.mul(g.identity(), x), x);
            assert_eq!(g.mul(x, g.inv(x)), g.identity(), "{name}");
            let o = g.element_order(x);
            assert_eq!(g.pow(x, o), 0);
            assert!((1..o).all(|k| g.pow(x, k) != 0));
            assert_eq!(g.order() as u64 % o, 0);
        }
        assert_eq!(g.order() as u64 % g.exponent(), 0);
    }
}

#[test]
fn sampled_associativity_for_large_groups() {
    let g = psl2(11).unwrap();
    assert!(g.check_associativity_sampled(100_000, 7));
}

#[test]
fn exponents_and_primes() {
    assert_eq!(named("C4").exponent(), 4);
    assert_eq!(named("Heis3").exponent(), 3);
    assert_eq!(named("Q8").exponent(), 4);
    assert_eq!(named("A5").pi(), vec![2, 3, 5]);
    assert_eq!(named("C8").pi(), vec![2]);
    assert_eq!(sl2(7).unwrap().pi(), vec![2, 3, 7]);
}

#[test]
fn center_derived_solvable() {
    assert_eq!(named("Q8").center().order(), 2);
    assert_eq!(named("A4").derived_subgroup().order(), 4);
    assert!(!named("A5").is_solvable());
    assert!(named("S4").is_solvable());
    assert_eq!(named("C12").center().order(), 12);
}

#[test]
fn sylow_examples() {
    assert_eq!(named("A4").sylow(2).unwrap().order(), 4);
    assert_eq!(named("S3").sylow(3).unwrap().order(), 3);
    let sl = named("SL(2,3)");
    let p = sl.sylow(2).unwrap();
    assert_eq!(p.order(), 8);
    let q8 = sl.subgroup_as_group(&p).unwrap();
    assert_eq!(q8.exponent(), 4);
    assert_eq!(q8.element_orders().filter(|&o| o == 2).count(), 1);
    assert!(matches!(sl.sylow(5), Err(Error::PrimeDoesNotDivide { p: 5, .. })));
}

#[test]
fn sylow_theorems_on_corpus() {
    for (name, g) in corpus() {
        for p in g.pi() {
            let s = g.sylow(p).unwrap();
            assert_eq!(s.order() as u64, p_part(g.order() as u64, p), "{name}");
            assert!(g.is_subgroup(&s));
            let n_p = g.count_sylow(p).unwrap() as u64;
            assert_eq!(n_p % p, 1, "{name} p={p}");
            assert_eq!((g.order() as u64 / p_part(g.order() as u64, p)) % n_p, 0);
        }
    }
}

#[test]
fn sylow_counts() {
    assert_eq!(named("A4").count_sylow(3).unwrap(), 4);
    assert_eq!(named("C6").count_sylow(3).unwrap(), 1);
    assert_eq!(named("S3").count_sylow(2).unwrap(), 3);
}

#[test]
fn nilpotency() {
    assert!(named("C12").is_nilpotent());
    assert!(!named("A4").is_nilpotent());
    assert!(named("Q8xC3").is_nilpotent());
    for (name, g) in corpus() {
        assert_eq!(g.is_nilpotent(), g.mask_is_nilpotent(&SubgroupMask::full(g.order())), "{name}");
    }
}

#[test]
fn nilpotent_iff_maximal_subgroups_normal() {
    for (name, g) in corpus().into_iter().filter(|(_, g)| g.order() <= 200) {
        let l = enumerate_subgroups(&g, 100_000).unwrap();
        let all_normal = maximal_subgroups(&g, &l).iter().all(|m| g.is_normal(m));
        assert_eq!(g.is_nilpotent(), all_normal, "{name}");
    }
}

#[test]
fn quotients() {
    let sl5 = sl2(5).unwrap();
    let z = sl5.center();
    assert_eq!(sl5.quotient(&z).unwrap().order(), 60);
    let sl7 = sl2(7).unwrap();
    assert_eq!(sl7.quotient(&sl7.center()).unwrap().order(), 168);
    let a4 = named("A4");
    assert_eq!(a4.quotient(&SubgroupMask::full(12)).unwrap().order(), 1);
    let c3 = a4.cyclic_subgroup(a4.elements().find(|&x| a4.element_order(x) == 3).unwrap());
    assert!(matches!(a4.quotient(&c3), Err(Error::NotNormal)));
}

#[test]
fn quotient_orders_divide_representative_orders() {
    for (name, g) in corpus() {
        let z = g.center();
        let q = g.quotient(&z).unwrap();
        assert_eq!(q.order() * z.order(), g.order(), "{name}");
        let mut qo: Vec<u64> = q.element_orders().collect();
        qo.sort_unstable();
        // The image of x has order dividing o(x); compare multisets via
        // counting over cosets.
        let mut by_coset: Vec<u64> = Vec::new();
        let mut seen = SubgroupMask::empty(g.order());
        for x in g.elements() {
            if seen.contains(x) {
                continue;
            }
            let coset: Vec<usize> = z.iter().map(|m| g.mul(x, m)).collect();
            coset.iter().for_each(|&y| {
                seen.insert(y);
            });
            let k = (1..).find(|&k| z.contains(g.pow(x, k))).unwrap();
            assert_eq!(g.element_order(x) % k, 0);
            by_coset.push(k);
        }
        by_coset.sort_unstable();
        assert_eq!(qo, by_coset, "{name}");
    }
}

#[test]
fn subgroups_as_groups() {
    let a4 = named("A4");
    let v4 = a4.sylow(2).unwrap();
    let h = a4.subgroup_as_group(&v4).unwrap();
    assert_eq!((h.order(), h.exponent()), (4, 2));
    let whole = a4.subgroup_as_group(&SubgroupMask::full(12)).unwrap();
    assert_eq!(whole.order(), 12);
    let s3 = named("S3");
    let x = s3.elements().find(|&x| s3.element_order(x) == 3).unwrap();
    let c3 = s3.subgroup_as_group(&s3.cyclic_subgroup(x)).unwrap();
    assert!(c3.is_cyclic() && c3.order() == 3);
    let bad = SubgroupMask::from_indices(6, [0, x]);
    assert!(matches!(s3.subgroup_as_group(&bad), Err(Error::NotClosed)));
}

#[test]
fn conjugacy_classes_partition() {
    for (name, g) in corpus() {
        let classes = g.conjugacy_classes();
        assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), g.order(), "{name}");
        assert!(classes.iter().all(|c| g.order() % c.len() == 0));
        assert_eq!(classes[0], vec![0]);
    }
    assert_eq!(named("A5").conjugacy_classes().len(), 5);
    assert_eq!(named("S4").conjugacy_classes().len(), 5);
}

#[test]
fn elementary_and_cyclic_predicates() {
    assert!(named("E8").is_elementary_abelian());
    assert!(!named("C4").is_elementary_abelian());
    assert!(named("1").is_elementary_abelian());
    assert!(named("C12").is_cyclic());
    assert!(!named("E4").is_cyclic());
    assert!(cyclic(1).unwrap().is_cyclic());
}

#[test]
fn frattini_of_p_groups() {
    let q8 = named("Q8");
    assert_eq!(q8.p_group_frattini(&SubgroupMask::full(8), 2).order(), 2);
    let e8 = named("E8");
    assert_eq!(e8.p_group_frattini(&SubgroupMask::full(8), 2).order(), 1);
    let m27 = named("M27");
    assert_eq!(m27.p_group_frattini(&SubgroupMask::full(27), 3).order(), 3);
}

#[test]
fn factor_orders_consistent() {
    for (_, g) in corpus() {
        let f = factorize(g.order() as u64);
        assert_eq!(f.value(), g.order() as u64);
    }
}
