use proptest::prelude::*;
use quiverdef::quiver::{build_algebra, check_pi_lambda, parse_word, Family, Kind, Quiver};
use quiverdef::Error;

fn arrows(f: Family) -> Vec<(&'static str, usize, usize)> {
    Quiver::for_family(f).arrows().iter().map(|a| (a.name, a.source, a.target)).collect()
}

#[test]
fn quivers() {
    assert_eq!(arrows(Family::I), [("beta", 1, 0), ("gamma", 0, 1), ("delta", 0, 2), ("eta", 2, 0)]);
    let mut two = arrows(Family::II);
    two.sort();
    assert_eq!(
        two,
        [("beta", 0, 1), ("delta", 1, 2), ("eta", 2, 1), ("gamma", 1, 0), ("kappa", 0, 2), ("lambda", 2, 0)]
    );
    assert!(arrows(Family::III).contains(&("alpha", 1, 1)));
    assert_eq!(arrows(Family::III).len(), 5);
}

#[test]
fn family_one_d2() {
    let a = build_algebra(Family::I, 2, Kind::Full).unwrap();
    assert_eq!(a.cartan(), [[8, 4, 4], [4, 4, 2], [4, 2, 4]]);
    // Λe_0: basis paths starting at vertex 0
    assert_eq!(a.basis().iter().filter(|p| p.source() == 0).count(), 16);
    let loops_at_0 = a.basis().iter().filter(|p| p.source() == 0 && p.target() == 0).count();
    assert_eq!(loops_at_0, 8);
}

#[test]
fn loewy_lengths() {
    assert_eq!(build_algebra(Family::I, 3, Kind::Full).unwrap().loewy_length(), 17);
    assert_eq!(build_algebra(Family::II, 3, Kind::Full).unwrap().loewy_length(), 9);
    assert_eq!(build_algebra(Family::III, 4, Kind::Full).unwrap().loewy_length(), 9);
}

#[test]
fn quotient_halves_the_dimension() {
    for f in Family::ALL {
        for d in f.min_d()..=4 {
            let full = build_algebra(f, d, Kind::Full).unwrap();
            let bar = build_algebra(f, d, Kind::Bar).unwrap();
            assert_eq!(full.dim(), 2 * bar.dim(), "{f} d={d}");
        }
    }
}

#[test]
fn surjection_onto_quotient() {
    assert_eq!(check_pi_lambda(Family::I, 2).unwrap().kernel_dim, 18);
    assert_eq!(check_pi_lambda(Family::II, 2).unwrap().kernel_dim, 12);
    assert_eq!(check_pi_lambda(Family::III, 3).unwrap().kernel_dim, 19);
}

#[test]
fn unsupported_parameters() {
    assert!(matches!(build_algebra(Family::I, 1, Kind::Full), Err(Error::Unsupported(_))));
    assert!(matches!(build_algebra(Family::III, 2, Kind::Bar), Err(Error::Unsupported(_))));
    assert!(matches!(build_algebra(Family::I, 99, Kind::Full), Err(Error::Unsupported(_))));
}

#[test]
fn rightmost_arrow_acts_first() {
    let q = Quiver::for_family(Family::I);
    // beta: 1 -> 0, delta: 0 -> 2
    assert!(parse_word(&q, "delta*beta").is_ok());
    match parse_word(&q, "beta*delta") {
        Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_word(&q, "kappa"), Err(Error::Parse { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(f in prop::sample::select(Family::ALL.to_vec()), d in 3u32..=4,
                                     kind in prop::sample::select(vec![Kind::Full, Kind::Bar]),
                                     seeds in prop::collection::vec(any::<prop::sample::Index>(), 3)) {
        let a = build_algebra(f, d, kind).unwrap();
        let n = a.dim();
        let (i, j, k) = (seeds[0].index(n), seeds[1].index(n), seeds[2].index(n));
        let m = |x: Option<usize>, y: Option<usize>| x.zip(y).and_then(|(x, y)| a.product(x, y));
        prop_assert_eq!(m(m(Some(i), Some(j)), Some(k)), m(Some(i), m(Some(j), Some(k))));
        prop_assert_eq!(a.product(i, j), a.product_by_rewriting(i, j));
    }
}
