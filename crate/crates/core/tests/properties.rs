use hasse_paths::order::{below, join, meet};
use hasse_paths::series::TruncatedSeries;
use hasse_paths::young::{contains, ideal_size, rect_edges, sub_partitions, Partition};
use hasse_paths::{ClassKind, PathWord, Step};
use num_bigint::BigUint;
use num_rational::BigRational;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = BigRational> {
    (-30i64..=30, 1i64..=7).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn series_with(order: usize, head: BigRational) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(rational(), order - 1).prop_map(move |tail| {
        let mut c = vec![head.clone()];
        c.extend(tail);
        TruncatedSeries::from_coeffs(order, c)
    })
}

fn shifted(s: &TruncatedSeries, v: usize) -> TruncatedSeries {
    let mut c = vec![BigRational::default(); v];
    c.extend(s.coeffs().iter().cloned());
    TruncatedSeries::from_coeffs(s.order(), c)
}

fn lattice_class() -> impl Strategy<Value = ClassKind> {
    prop::sample::select(
        ClassKind::ALL
            .into_iter()
            .filter(|k| k.is_lattice())
            .collect::<Vec<_>>(),
    )
}

/// A class, a size and two members of that size.
fn member_pair() -> impl Strategy<Value = (ClassKind, PathWord, PathWord)> {
    (lattice_class(), 0usize..=5).prop_flat_map(|(kind, n)| {
        let words = kind.spec().enumerate(n);
        let pick = prop::sample::select(words);
        (Just(kind), pick.clone(), pick)
    })
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=6, 0..=6).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sqrt_squares_back(s in series_with(16, BigRational::from_integer(1.into()))) {
        let r = s.sqrt().unwrap();
        prop_assert_eq!(r.mul(&r).unwrap(), s);
    }

    #[test]
    fn division_inverts_multiplication(
        a in series_with(16, BigRational::from_integer(2.into())),
        b in series_with(16, BigRational::from_integer((-3).into())),
        v in 0usize..4,
    ) {
        let (a, b) = (shifted(&a, v), shifted(&b, v));
        let q = a.div(&b).unwrap();
        prop_assert_eq!(q.order(), 16 - v);
        let back = q.mul(&b.truncate(16 - v).unwrap()).unwrap();
        prop_assert_eq!(back, a.truncate(16 - v).unwrap());
    }

    #[test]
    fn reflect_is_an_involution(steps in prop::collection::vec(prop::sample::select(Step::ALL.to_vec()), 0..12)) {
        let w = PathWord::new(steps);
        prop_assert_eq!(w.reflect().reflect(), w.clone());
        let negated: Vec<i64> = w.heights().iter().map(|h| -h).collect();
        prop_assert_eq!(w.reflect().heights(), negated);
    }

    #[test]
    fn meet_and_join_bracket_their_arguments((kind, a, b) in member_pair()) {
        let lo = meet(&a, &b, kind).unwrap();
        let hi = join(&a, &b, kind).unwrap();
        for x in [&a, &b] {
            prop_assert!(below(&lo, x, kind).unwrap());
            prop_assert!(below(x, &hi, kind).unwrap());
        }
        prop_assert_eq!(meet(&b, &a, kind).unwrap(), lo.clone());
        prop_assert_eq!(meet(&a, &a, kind).unwrap(), a.clone());
        prop_assert_eq!(below(&a, &b, kind).unwrap(), lo == a);
    }

    #[test]
    fn ideal_size_counts_sub_partitions(lambda in partition()) {
        let subs = sub_partitions(&lambda, 1 << 16).unwrap();
        prop_assert_eq!(ideal_size(&lambda), BigUint::from(subs.len()));
        prop_assert!(subs.iter().all(|mu| contains(mu, &lambda)));
    }

    #[test]
    fn parse_round_trips(lambda in partition()) {
        let text = lambda.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        prop_assert_eq!(Partition::parse(&text).unwrap(), lambda);
    }

    #[test]
    fn rectangle_edges_are_symmetric(m in 1u32..40, n in 1u32..40) {
        prop_assert_eq!(rect_edges(m, n), rect_edges(n, m));
    }
}
