use proptest::prelude::*;
use psi_forge::families::Recipe;
use psi_forge::shell::{parse_spec, parse_syntax};

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn leaf() -> impl Strategy<Value = Recipe> {
    let prime = proptest::sample::select(PRIMES.to_vec());
    prop_oneof![
        (1u64..500).prop_map(Recipe::Cyclic),
        (prime.clone(), 1u32..5).prop_map(|(p, k)| Recipe::ElementaryAbelian { p, k }),
        (1u64..50).prop_map(|m| Recipe::Dihedral(2 * m)),
        (3u32..6).prop_map(|k| Recipe::Quaternion(1 << k)),
        (1u32..8).prop_map(Recipe::Symmetric),
        (1u32..8).prop_map(Recipe::Alternating),
        proptest::sample::select(vec![3u64, 5, 7]).prop_map(Recipe::Heisenberg),
        prime.clone().prop_map(Recipe::ModularP3),
        (2u32..5, proptest::sample::select(vec![(3u64, Some(2u64)), (7, Some(3)), (7, Some(2)), (5, None), (13, Some(3))]))
            .prop_map(|(n, (p, q))| Recipe::PGroup { n, p, q }),
        (proptest::sample::select(vec![(2u64, 3u64), (2, 7), (3, 13), (3, 5), (5, 2)]), 1u32..4)
            .prop_map(|((p, q), beta)| Recipe::Schmidt { p, q, beta }),
        (proptest::sample::select(vec![(2u64, 3u64, 1u64), (2, 7, 1), (2, 7, 3), (3, 2, 1)]), 1u32..4)
            .prop_map(|((p, q, twist), copies)| Recipe::FrobeniusSum { p, q, copies, twist }),
        proptest::sample::select(psi_forge::families::SL2_FIELDS.to_vec()).prop_map(Recipe::Sl2),
        proptest::sample::select(psi_forge::families::SL2_FIELDS.to_vec()).prop_map(Recipe::Psl2),
        "[a-z/._ \"\\\\]{1,12}".prop_map(|s| Recipe::File(s.into())),
    ]
}

fn recipe() -> impl Strategy<Value = Recipe> {
    leaf().prop_recursive(3, 8, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| Recipe::Product(Box::new(a), Box::new(b)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]
    #[test]
    fn print_then_parse(r in recipe()) {
        let text = r.to_string();
        prop_assert_eq!(parse_syntax(&text).unwrap(), r.clone());
        prop_assert_eq!(parse_spec(&text).unwrap(), r);
    }

    #[test]
    fn printing_is_a_fixpoint(r in recipe()) {
        let once = r.to_string();
        let twice = parse_syntax(&once).unwrap().to_string();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn garbage_never_panics(s in "[ -~]{0,24}") {
        let _ = parse_spec(&s);
    }
}
