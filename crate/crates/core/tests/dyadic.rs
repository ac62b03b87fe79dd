use airframe_core::Dyadic;
use proptest::prelude::*;

/// Value as a fraction over `2^20`, exact for the inputs generated here.
fn scaled(x: Dyadic) -> i128 {
    (x.numerator() as i128) << (20 - x.exponent())
}

fn arb() -> impl Strategy<Value = Dyadic> {
    (-4096i64..4096, 0u32..12).prop_map(|(n, e)| Dyadic::new(n, e))
}

proptest! {
    #[test]
    fn arithmetic_matches_fractions(x in arb(), y in arb()) {
        prop_assert_eq!(scaled(x + y), scaled(x) + scaled(y));
        prop_assert_eq!(scaled(x - y), scaled(x) - scaled(y));
        prop_assert_eq!(scaled(-x), -scaled(x));
        prop_assert_eq!(x.cmp(&y), scaled(x).cmp(&scaled(y)));
        prop_assert_eq!(scaled(x.half()) * 2, scaled(x));
    }

    #[test]
    fn normalized(x in arb()) {
        prop_assert!(x.exponent() == 0 || x.numerator() % 2 != 0);
    }

    #[test]
    fn text_round_trip(x in arb()) {
        prop_assert_eq!(x.to_string().parse::<Dyadic>().unwrap(), x);
    }
}
