use proptest::prelude::*;
use zx_core::ExactScalar;

fn scalar() -> impl Strategy<Value = ExactScalar> {
    (-50i64..50, -50i64..50, -50i64..50, -50i64..50, 0u32..6)
        .prop_map(|(a, b, c, d, k)| ExactScalar::new(a, b, c, d, k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn commutative_ring(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(x + y, y + x);
        prop_assert_eq!(x * y, y * x);
        prop_assert_eq!((x + y) + z, x + (y + z));
        prop_assert_eq!((x * y) * z, x * (y * z));
        prop_assert_eq!(x * (y + z), x * y + x * z);
        prop_assert_eq!(x - x, ExactScalar::ZERO);
        prop_assert_eq!(x * ExactScalar::ONE, x);
    }

    #[test]
    fn canonical_after_ops(x in scalar(), y in scalar()) {
        for s in [x + y, x * y, -x] {
            let (a, b, c, d, k) = s.parts();
            prop_assert!(k == 0 || [a, b, c, d].iter().any(|v| v % 2 != 0));
            prop_assert_eq!(s.is_zero(), a == 0 && b == 0 && c == 0 && d == 0);
        }
    }

    #[test]
    fn division_inverts_product(x in scalar(), y in scalar()) {
        prop_assume!(!y.is_zero());
        prop_assert_eq!((x * y).checked_div(&y), Some(x));
    }
}

#[test]
fn spec_products() {
    let w = ExactScalar::omega(1);
    assert_eq!(w * w, ExactScalar::I);
    assert_eq!(ExactScalar::INV_SQRT2 * ExactScalar::INV_SQRT2, ExactScalar::HALF);
    let x = ExactScalar::new(0, 0, 15, 0, 3);
    assert_eq!(x * ExactScalar::from_int(2), ExactScalar::new(0, 0, 15, 0, 2));
}
