//! Property tests for the exact-arithmetic invariants.

use braidkit::scalars::{qnum, QRat};
use braidkit::tensors::LinOp;
use proptest::prelude::*;

/// A random rational function from small Laurent polynomials.
fn qrat_strategy() -> impl Strategy<Value = QRat> {
    let coeff = -4i64..=4;
    let poly = prop::collection::vec(coeff, 1..4);
    (poly.clone(), poly, -3i64..=3, -3i64..=3).prop_map(|(num, den, e1, e2)| {
        let build = |cs: &[i64], e: i64| {
            cs.iter().enumerate().fold(QRat::zero(), |acc, (i, &c)| {
                &acc + &(&QRat::from_int(c) * &QRat::q_pow(e + i as i64))
            })
        };
        let n = build(&num, e1);
        let mut d = build(&den, e2);
        if d.is_zero() {
            d = QRat::one();
        }
        &n / &d
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_commutative_and_associative(
        a in qrat_strategy(), b in qrat_strategy(), c in qrat_strategy()
    ) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_distributes(
        a in qrat_strategy(), b in qrat_strategy(), c in qrat_strategy()
    ) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn nonzero_elements_invert(a in qrat_strategy()) {
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inverse().unwrap(), QRat::one());
        }
    }

    #[test]
    fn equality_agrees_with_cross_multiplication(
        a in qrat_strategy(), b in qrat_strategy()
    ) {
        // canonical(a) = canonical(b) iff a d_b - b d_a = 0 as Laurent data
        let cross = &(a.num().mul(b.den())) .sub(&b.num().mul(a.den()));
        prop_assert_eq!(a == b, cross.is_zero());
    }

    #[test]
    fn printer_round_trips(a in qrat_strategy()) {
        let s = a.to_string();
        let back: QRat = s.parse().unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), s);
    }

    #[test]
    fn qnum_antisymmetry(k in -12i64..=12) {
        prop_assert_eq!(qnum(-k), -&qnum(k));
        let d = &QRat::q() - &QRat::q_pow(-1);
        prop_assert_eq!(&qnum(k) * &d, &QRat::q_pow(k) - &QRat::q_pow(-k));
    }

    #[test]
    fn leg_placement_is_multiplicative(
        entries_a in prop::collection::vec(-3i64..=3, 4),
        entries_b in prop::collection::vec(-3i64..=3, 4),
        start in 1usize..=3
    ) {
        let a = LinOp::from_fn(2, 1, |r, c| QRat::from_int(entries_a[r * 2 + c]));
        let b = LinOp::from_fn(2, 1, |r, c| QRat::from_int(entries_b[r * 2 + c]));
        let ab = &a * &b;
        let pa = a.place_on_legs(3, start).unwrap();
        let pb = b.place_on_legs(3, start).unwrap();
        prop_assert_eq!(ab.place_on_legs(3, start).unwrap(), &pa * &pb);
    }

    #[test]
    fn partial_traces_commute(
        entries in prop::collection::vec(-2i64..=2, 64),
    ) {
        let m = LinOp::from_fn(2, 3, |r, c| QRat::from_int(entries[(r * 8 + c) % 64]));
        let first = m.partial_trace(1).unwrap().partial_trace(2).unwrap();
        let second = m.partial_trace(3).unwrap().partial_trace(1).unwrap();
        prop_assert_eq!(first, second);
    }
}

#[test]
fn hecke_structure_specializes_to_the_flip_at_q_one() {
    // entry-wise q -> 1 limits of the standard symmetry's cached data
    // land on the flip's data
    use num_rational::BigRational;
    use num_traits::One;
    let hecke = braidkit::symmetries::Symmetry::standard(2);
    let class = braidkit::symmetries::Symmetry::flip(2);
    let one = BigRational::one();
    let specialize = |m: &LinOp| {
        LinOp::from_fn(m.n(), m.legs(), |r, c| {
            QRat::from_rational(m.get(r, c).eval_at(&one).unwrap())
        })
    };
    assert_eq!(specialize(hecke.r()), *class.r());
    assert_eq!(specialize(hecke.psi()), *class.psi());
    assert_eq!(specialize(hecke.b_op()), *class.b_op());
    assert_eq!(specialize(hecke.c_op()), *class.c_op());
    for k in 1..=2 {
        assert_eq!(
            specialize(&hecke.skew_symmetrizer(k).unwrap()),
            class.skew_symmetrizer(k).unwrap()
        );
    }
}
