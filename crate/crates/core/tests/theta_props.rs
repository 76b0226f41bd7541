use binv::thetaf2::{
    char_of_subset, e_triple, frobenius_same_orbit, is_balanced, parse_dump, dump, subset_of_char, symplectic_pair,
    F2Subspace, ThetaChar,
};
use proptest::prelude::*;

fn genus() -> impl Strategy<Value = usize> {
    1usize..=6
}

fn char_of_genus(g: usize) -> impl Strategy<Value = ThetaChar> {
    (0u32..1 << g, 0u32..1 << g).prop_map(move |(a, b)| ThetaChar::new(g, a, b))
}

fn chars(n: usize) -> impl Strategy<Value = (usize, Vec<ThetaChar>)> {
    genus().prop_flat_map(move |g| (Just(g), prop::collection::vec(char_of_genus(g), 1..=n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn e_star_is_a_quadratic_form((g, v) in chars(2)) {
        let z = v[0];
        let x = *v.last().unwrap();
        let sign = if symplectic_pair(z, x) == 0 { 1 } else { -1 };
        prop_assert_eq!((z + x).e_star(), z.e_star() * x.e_star() * sign);
        prop_assert_eq!(z.genus(), g);
    }

    #[test]
    fn subset_correspondence_is_bijective((g, v) in chars(1)) {
        let z = v[0];
        let s = subset_of_char(z);
        prop_assert_eq!(s.len() % 2, 0);
        prop_assert!(s.iter().all(|&i| (1..=2 * g + 1).contains(&i)));
        prop_assert_eq!(char_of_subset(&s, g), z);
        let complement: Vec<usize> = (1..=2 * g + 2).filter(|i| !s.contains(i)).collect();
        prop_assert_eq!(char_of_subset(&complement, g), z);
    }

    #[test]
    fn balanced_implies_even((_g, v) in chars(1)) {
        if is_balanced(v[0]) {
            prop_assert!(v[0].is_even());
        }
    }

    #[test]
    fn e_triple_is_symmetric((_g, v) in chars(3)) {
        let (a, b, c) = (v[0], v[v.len() / 2], v[v.len() - 1]);
        prop_assert_eq!(e_triple(a, b, c), e_triple(c, a, b));
        prop_assert_eq!(e_triple(a, b, c), e_triple(b, a, c));
    }

    #[test]
    fn span_is_canonical((g, v) in chars(5), seed in any::<u64>()) {
        let s = F2Subspace::span(g, &v);
        let mut shuffled = v.clone();
        shuffled.rotate_left(seed as usize % v.len());
        shuffled.push(v[0] + v[v.len() - 1]);
        prop_assert_eq!(&F2Subspace::span(g, &shuffled), &s);
        prop_assert!(v.iter().all(|&z| s.contains(z)));
        prop_assert_eq!(s.elements().len(), 1 << s.dim());
        prop_assert!(s.elements().into_iter().all(|z| s.contains(z)));
    }

    #[test]
    fn dump_round_trips((_g, v) in chars(6)) {
        prop_assert_eq!(parse_dump(&dump(&v)).unwrap(), v);
    }

    #[test]
    fn orbit_decision_is_an_equivalence((_g, v) in chars(4), (_h, w) in chars(4)) {
        prop_assert!(frobenius_same_orbit(&v, &v).unwrap());
        if v.len() == w.len() && v[0].genus() == w[0].genus() {
            prop_assert_eq!(frobenius_same_orbit(&v, &w).unwrap(), frobenius_same_orbit(&w, &v).unwrap());
        }
    }
}
