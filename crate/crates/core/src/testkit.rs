//! Small named groups shared by unit tests.

use crate::families::*;
use crate::FiniteGroup;

pub fn named(name: &str) -> FiniteGroup {
    corpus().into_iter().find(|(n, _)| n == name).unwrap_or_else(|| panic!("no {name}")).1
}

/// Groups of order ≤ 200 covering every family.
pub fn corpus() -> Vec<(String, FiniteGroup)> {
    let mut out: Vec<(String, FiniteGroup)> = vec![
        ("1".into(), cyclic(1).unwrap()),
        ("C4".into(), cyclic(4).unwrap()),
        ("C6".into(), cyclic(6).unwrap()),
        ("C8".into(), cyclic(8).unwrap()),
        ("C9".into(), cyclic(9).unwrap()),
        ("C12".into(), cyclic(12).unwrap()),
        ("E4".into(), elementary_abelian(2, 2).unwrap()),
        ("E8".into(), elementary_abelian(2, 3).unwrap()),
        ("E9".into(), elementary_abelian(3, 2).unwrap()),
        ("S3".into(), symmetric(3).unwrap()),
        ("D8".into(), dihedral(8).unwrap()),
        ("D10".into(), dihedral(10).unwrap()),
        ("Q8".into(), quaternion(8).unwrap()),
        ("Q16".into(), quaternion(16).unwrap()),
        ("A4".into(), alternating(4).unwrap()),
        ("S4".into(), symmetric(4).unwrap()),
        ("A5".into(), alternating(5).unwrap()),
        ("Heis3".into(), heisenberg(3).unwrap()),
        ("M27".into(), modular_p3(3).unwrap()),
        ("P(2,7,3)".into(), p_group_p(2, 7, Some(3)).unwrap()),
        ("P(3,3,2)".into(), p_group_p(3, 3, Some(2)).unwrap()),
        ("Schmidt(2,3)".into(), schmidt_abelian(2, 3, 1).unwrap()),
        ("Schmidt(2,3,2)".into(), schmidt_abelian(2, 3, 2).unwrap()),
        ("Schmidt(2,7)".into(), schmidt_abelian(2, 7, 1).unwrap()),
        ("Schmidt(3,2)".into(), schmidt_abelian(3, 2, 1).unwrap()),
        ("SL(2,3)".into(), sl2(3).unwrap()),
        ("SL(2,5)".into(), sl2(5).unwrap()),
        ("PSL(2,7)".into(), psl2(7).unwrap()),
    ];
    let q8c3 = direct_product(&quaternion(8).unwrap(), &cyclic(3).unwrap()).unwrap();
    out.push(("Q8xC3".into(), q8c3));
    let s3c2 = direct_product(&symmetric(3).unwrap(), &cyclic(2).unwrap()).unwrap();
    out.push(("S3xC2".into(), s3c2));
    out
}
