use num_bigint::BigUint;
use proptest::prelude::*;

use super::*;
use crate::families::{cyclic, direct_product, elementary_abelian};
use crate::lattice::enumerate_subgroups;
use crate::testkit::{corpus, named};
use crate::{Psi, PsiWord};

fn word(g: &FiniteGroup) -> u128 {
    psi_direct::<PsiWord>(g).value
}

#[test]
fn worked_values() {
    assert_eq!(word(&named("S3")), 13);
    assert_eq!(word(&named("D10")), 31);
    assert_eq!(word(&named("A4")), 31);
    assert_eq!(word(&named("Q8")), 27);
    assert_eq!(word(&named("C6")), 21);
    assert_eq!(word(&named("1")), 1);
    assert_eq!(psi_cyclic_prime_power::<PsiWord>(5, 1), 21);
}

#[test]
fn three_methods_agree() {
    for (name, g) in corpus() {
        let d = psi_direct::<Psi>(&g);
        let c = psi_via_classes::<Psi>(&g);
        let z = psi_via_cyclic_subgroups::<Psi>(&g);
        assert_eq!(d.value, c.value, "{name}");
        assert_eq!(d.value, z.value, "{name}");
        assert_eq!(d.method, PsiMethod::Direct);
        assert_eq!(c.method, PsiMethod::Classes);
        assert_eq!(z.method, PsiMethod::CyclicSubgroups);
    }
}

#[test]
fn lower_bound_and_cyclic_maximum() {
    for (name, g) in corpus() {
        let n = g.order() as u128;
        let psi = word(&g);
        assert!(psi >= 2 * n - 1, "{name}");
        assert_eq!(psi == n, n == 1, "{name}");
        let top = psi_cyclic::<PsiWord>(n as u64);
        assert!(psi <= top, "{name}");
        assert_eq!(psi == top, g.is_cyclic(), "{name}");
    }
}

#[test]
fn subgroups_have_smaller_psi() {
    for (name, g) in corpus().into_iter().filter(|(_, g)| g.order() <= 60) {
        let whole = word(&g) as u64;
        let lattice = enumerate_subgroups(&g, 10_000).unwrap();
        for s in lattice.subgroups().iter().filter(|s| s.is_proper()) {
            let h = g.subgroup_as_group(s).unwrap();
            assert_eq!(word(&h) as u64, psi_of_mask(&g, s));
            assert!(psi_of_mask(&g, s) < whole, "{name}");
        }
    }
}

#[test]
fn formula_examples() {
    assert_eq!(psi_cyclic_prime_power::<PsiWord>(2, 2), 11);
    assert_eq!(psi_cyclic_prime_power::<PsiWord>(3, 2), 61);
    assert_eq!(psi_cyclic::<PsiWord>(1), 1);
    assert_eq!(psi_cyclic::<PsiWord>(6), 21);
    assert_eq!(psi_cyclic::<PsiWord>(60), word(&cyclic(60).unwrap()));
    assert_eq!(psi_elementary_abelian::<PsiWord>(2, 2), 7);
    assert_eq!(psi_elementary_abelian::<PsiWord>(7, 1), 43);
    assert_eq!(psi_elementary_abelian::<PsiWord>(7, 1), psi_cyclic_prime_power::<PsiWord>(7, 1));
    assert_eq!(psi_elementary_abelian::<PsiWord>(3, 3), 79);
}

#[test]
fn formulas_match_enumeration() {
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        let mut n = 1;
        while p.pow(n) <= 1024 {
            assert_eq!(psi_cyclic_prime_power::<PsiWord>(p, n), word(&cyclic(p.pow(n)).unwrap()));
            n += 1;
        }
        let mut a = 1;
        while p.pow(a) <= 729 {
            let g = elementary_abelian(p, a).unwrap();
            assert_eq!(psi_elementary_abelian::<PsiWord>(p, a), word(&g), "{p}^{a}");
            a += 1;
        }
    }
}

#[test]
fn products_are_submultiplicative() {
    let small: Vec<_> = corpus().into_iter().filter(|(_, g)| g.order() <= 24).collect();
    for (a, g1) in &small {
        for (b, g2) in &small {
            if g1.order() * g2.order() > 2000 {
                continue;
            }
            let prod = direct_product(g1, g2).unwrap();
            let lhs = word(&prod);
            let rhs = word(g1) * word(g2);
            let coprime = num_integer::gcd(g1.order(), g2.order()) == 1;
            assert!(lhs <= rhs, "{a} x {b}");
            assert_eq!(lhs == rhs, coprime, "{a} x {b}");
        }
    }
}

#[test]
fn lemma_iii_grid() {
    let primes = [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];
    for &p in &primes {
        for &q in primes.iter().filter(|&&q| q != p) {
            for a in 1..=6 {
                for b in 2..=5 {
                    assert!(lemma_2_1_iii::<Psi>(p, q, a, b), "{p} {q} {a} {b}");
                }
            }
        }
    }
    assert!(lemma_2_1_iii::<PsiWord>(2, 3, 1, 2));
    assert!(lemma_2_1_iii::<PsiWord>(3, 2, 2, 3));
    assert!(lemma_2_1_iii::<Psi>(31, 29, 6, 5));
}

#[test]
fn inequality_examples() {
    assert!(!ineq_1::<Psi>(3, 13, 3, 6));
    assert!(ineq_1::<Psi>(2, 5, 4, 5));
    assert!(ineq_1::<Psi>(2, 3, 2, 2));
    assert!(!ineq_2::<Psi>(BigUint::from(27u32), 3, 3));
    assert!(ineq_2::<Psi>(BigUint::from(1u32), 3, 3));
}

#[test]
fn special_two_group_bounds() {
    assert_eq!(special2_bounds::<PsiWord>(3, 2), (15, 27));
    assert_eq!(special2_bounds::<PsiWord>(5, 4), (63, 123));
    // 1 + 2·0 + 4·(2 − 1)
    assert_eq!(special2_bounds::<PsiWord>(1, 1), (3, 5));
    let q8 = word(&named("Q8"));
    let (lo, hi) = special2_bounds::<PsiWord>(3, 2);
    assert!(lo < q8 && q8 <= hi);
}

#[test]
fn word_and_bignum_agree() {
    for (p, q, r, alpha) in [(2, 3, 2, 2), (3, 13, 3, 6), (2, 7, 3, 3), (5, 31, 3, 9)] {
        assert_eq!(ineq_1::<Psi>(p, q, r, alpha), ineq_1::<PsiWord>(p, q, r, alpha));
    }
}

proptest! {
    #[test]
    fn cyclic_formula_is_multiplicative(a in 1u64..200, b in 1u64..200) {
        prop_assume!(num_integer::gcd(a, b) == 1);
        prop_assert_eq!(
            psi_cyclic::<Psi>(a * b),
            psi_cyclic::<Psi>(a) * psi_cyclic::<Psi>(b)
        );
    }

    #[test]
    fn special_bounds_ordered(alpha in 2u32..40, r in 1u32..40) {
        prop_assume!(r <= alpha);
        let (lo, hi) = special2_bounds::<Psi>(alpha, r);
        prop_assert!(lo < hi);
    }
}
