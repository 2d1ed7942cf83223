use std::path::PathBuf;

use super::*;
use crate::classify::is_schmidt;
use crate::psi::{psi_direct, psi_of_mask};
use crate::testkit::corpus;
use crate::{Error, PsiWord, SubgroupMask};

fn psi(g: &FiniteGroup) -> u128 {
    psi_direct::<PsiWord>(g).value
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

#[test]
fn basic_families() {
    let c9 = cyclic(9).unwrap();
    assert_eq!((c9.order(), c9.exponent()), (9, 9));
    let d10 = dihedral(10).unwrap();
    assert_eq!((d10.order(), psi(&d10)), (10, 31));
    let q8 = quaternion(8).unwrap();
    assert_eq!((q8.order(), psi(&q8)), (8, 27));
    assert_eq!(quaternion(32).unwrap().order(), 32);
    assert_eq!(symmetric(5).unwrap().order(), 120);
    assert_eq!(alternating(6).unwrap().order(), 360);
    assert_eq!(elementary_abelian(3, 4).unwrap().order(), 81);
}

#[test]
fn parameter_checks() {
    assert!(matches!(quaternion(12), Err(Error::ParameterOutOfRange(_))));
    assert!(matches!(quaternion(4), Err(Error::ParameterOutOfRange(_))));
    assert!(matches!(symmetric(8), Err(Error::ParameterOutOfRange(_))));
    assert!(matches!(dihedral(7), Err(Error::ParameterOutOfRange(_))));
    assert!(matches!(heisenberg(2), Err(Error::ParameterOutOfRange(_))));
    assert!(matches!(p_group_p(3, 7, Some(5)), Err(Error::BadPowerAutomorphism { p: 7, q: 5 })));
    assert!(matches!(sl2(6), Err(Error::UnsupportedField { .. })));
    assert!(matches!(schmidt_abelian(3, 3, 1), Err(Error::ParameterOutOfRange(_))));
}

#[test]
fn p_groups_of_order_p_cubed() {
    let h3 = heisenberg(3).unwrap();
    assert_eq!((h3.order(), h3.exponent(), h3.is_abelian()), (27, 3, false));
    let h5 = heisenberg(5).unwrap();
    assert_eq!((h5.order(), h5.exponent()), (125, 5));
    let m = modular_p3(3).unwrap();
    assert_eq!((m.order(), m.exponent(), m.is_abelian()), (27, 9, false));
    let d8 = modular_p3(2).unwrap();
    assert_eq!((d8.order(), d8.exponent(), psi(&d8)), (8, 4, psi(&dihedral(8).unwrap())));
}

#[test]
fn p_group_class() {
    let g = p_group_p(3, 7, Some(2)).unwrap();
    assert_eq!(g.order(), 98);
    assert!(!g.is_abelian());
    assert!(g.is_normal(&g.sylow(7).unwrap()));
    let g = p_group_p(2, 5, Some(2)).unwrap();
    assert_eq!((g.order(), psi(&g)), (10, 31));
    assert_eq!(p_group_p(4, 3, Some(2)).unwrap().order(), 54);
    assert_eq!(p_group_p(3, 5, None).unwrap().order(), 125);
    assert_eq!(power_multiplier(7, 2).unwrap(), 6);
    assert_eq!(power_multiplier(7, 3).unwrap(), 2);
}

#[test]
fn p_group_class_structure() {
    for (n, p, q) in [(2, 7, 3), (3, 7, 2), (3, 3, 2), (3, 5, 2), (2, 13, 3), (4, 3, 2)] {
        let g = p_group_p(n, p, Some(q)).unwrap();
        assert!(!g.is_nilpotent());
        let kernel = g.sylow(p).unwrap();
        assert!(g.is_normal(&kernel));
        assert_eq!(kernel.order() as u64, p.pow(n - 1));
        assert!(kernel.iter().all(|h| g.element_order(h) <= p));
        for x in g.elements().filter(|&x| !kernel.contains(x)) {
            let h0 = kernel.iter().find(|&h| h != 0).unwrap();
            let m = (0..p).find(|&m| g.pow(h0, m) == g.conjugate(h0, x)).unwrap();
            assert!(kernel.iter().all(|h| g.conjugate(h, x) == g.pow(h, m)));
        }
    }
}

#[test]
fn schmidt_family() {
    assert_eq!(schmidt_abelian(2, 3, 1).unwrap().order(), 12);
    assert_eq!(schmidt_abelian(2, 7, 1).unwrap().order(), 56);
    assert_eq!(schmidt_abelian(3, 13, 1).unwrap().order(), 351);
    assert_eq!(schmidt_abelian(2, 3, 2).unwrap().order(), 36);
    for (p, q) in [(2, 3), (2, 5), (2, 7), (3, 2), (3, 13), (5, 2), (5, 3), (7, 3)] {
        let g = schmidt_abelian(p, q, 1).unwrap();
        assert!(is_schmidt(&g, 1_000_000).unwrap(), "({p},{q})");
    }
}

#[test]
fn frobenius_sums() {
    assert_eq!(frobenius_sum(2, 3, 3, 1).unwrap().order(), 192);
    assert_eq!(frobenius_sum(2, 7, 2, 1).unwrap().order(), 448);
    let one = frobenius_sum(2, 3, 1, 1).unwrap();
    let s = schmidt_abelian(2, 3, 1).unwrap();
    assert_eq!((one.order(), psi(&one)), (s.order(), psi(&s)));
}

#[test]
fn frobenius_twist_changes_the_group() {
    // In V ⊕ V the invariant subspaces of order 8 are the nine GF(8)-lines;
    // V ⊕ V* has only its two summands.
    let count_normal_8 = |g: &FiniteGroup| {
        let kernel = g.sylow(2).unwrap();
        let elems: Vec<usize> = kernel.iter().filter(|&x| x != 0).collect();
        let mut found: Vec<SubgroupMask> = Vec::new();
        for (i, &a) in elems.iter().enumerate() {
            for &b in &elems[i + 1..] {
                for &c in &elems {
                    let s = g.generated_subgroup(&[a, b, c]);
                    if s.order() == 8 && g.is_normal(&s) && !found.contains(&s) {
                        found.push(s);
                    }
                }
            }
        }
        found.len()
    };
    let plain = frobenius_sum(2, 7, 2, 1).unwrap();
    let twisted = frobenius_sum(2, 7, 2, 3).unwrap();
    assert_eq!(psi(&plain), psi(&twisted));
    assert_eq!(count_normal_8(&plain), 9);
    assert_eq!(count_normal_8(&twisted), 2);
}

#[test]
fn special_linear_groups() {
    for q in SL2_FIELDS {
        let sl = sl2(q).unwrap();
        assert_eq!(sl.order() as u64, q * (q * q - 1), "SL(2,{q})");
        let z = sl.center();
        assert_eq!(z.order() as u64, num_integer::gcd(2, q - 1));
        let psl = psl2(q).unwrap();
        assert_eq!(psl.order() * z.order(), sl.order());
    }
    assert_eq!(sl2(5).unwrap().order(), 120);
    assert_eq!(psl2(7).unwrap().order(), 168);
    let p4 = psl2(4).unwrap();
    let a5 = alternating(5).unwrap();
    assert_eq!((p4.order(), psi(&p4)), (60, psi(&a5)));
    assert_eq!(psi(&psl2(5).unwrap()), psi(&a5));
}

#[test]
fn direct_products() {
    for (a, g1) in corpus().iter().filter(|(_, g)| g.order() <= 12) {
        for (b, g2) in corpus().iter().filter(|(_, g)| g.order() <= 12) {
            let p = direct_product(g1, g2).unwrap();
            assert_eq!(p.order(), g1.order() * g2.order(), "{a} x {b}");
        }
    }
}

#[test]
fn generator_files() {
    assert_eq!(from_file(data("s3.gens")).unwrap().order(), 6);
    assert_eq!(from_file(data("a4.gens")).unwrap().order(), 12);
    assert_eq!(from_file(data("a5.gens")).unwrap().order(), 60);
    assert_eq!(from_generator_text("degree 3\n(1,2,3)\n", 100).unwrap().order(), 3);
    let err = from_generator_text("degree 3\n(1,2\n", 100).unwrap_err();
    assert!(matches!(err, Error::GeneratorFile { line: 2, .. }));
    assert!(matches!(from_file(data("missing.gens")), Err(Error::Io(_))));
}

#[test]
fn recipes_report_their_orders() {
    let recipes = [
        Recipe::Cyclic(9),
        Recipe::Dihedral(10),
        Recipe::Quaternion(8),
        Recipe::Heisenberg(3),
        Recipe::PGroup { n: 3, p: 7, q: Some(2) },
        Recipe::Schmidt { p: 2, q: 7, beta: 1 },
        Recipe::FrobeniusSum { p: 2, q: 3, copies: 2, twist: 1 },
        Recipe::Sl2(5),
        Recipe::Psl2(7),
        Recipe::Product(Box::new(Recipe::Quaternion(8)), Box::new(Recipe::Cyclic(3))),
    ];
    for r in recipes {
        let g = r.build().unwrap();
        assert_eq!(Some(g.order() as u64), r.expected_order(), "{r:?}");
    }
    assert_eq!(Recipe::Cyclic(9477).expected_order(), Some(9477));
}

#[test]
fn product_witnesses_compose() {
    let g = direct_product(&quaternion(8).unwrap(), &cyclic(3).unwrap()).unwrap();
    assert_eq!(psi_of_mask(&g, &SubgroupMask::full(24)) as u128, psi(&g));
}
