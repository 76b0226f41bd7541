use binv::invariants::{
    delta_pair, membership_sw, nu, perm, star, sum_over, symmetrize, symmetrize_direct, tmap, unstar, Group,
    InvariantForm,
};
use binv::polyring::{Polynomial, VarContext};
use binv::Budget;
use proptest::prelude::*;

fn triple() -> impl Strategy<Value = Vec<usize>> {
    prop::sample::subsequence((1..=6).collect::<Vec<usize>>(), 3)
}

fn product(ts: &[Vec<usize>], r: usize) -> Polynomial {
    ts.iter()
        .fold(Polynomial::one(VarContext::branch(r)), |p, t| p.mul(&delta_pair(t, r)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn witt_map_is_multiplicative(s in triple(), t in triple()) {
        let (p, q) = (delta_pair(&s, 6), delta_pair(&t, 6));
        let lhs = tmap(&p.mul(&q).unwrap(), 3, 3, 8).unwrap();
        let rhs = tmap(&p, 3, 3, 4).unwrap().mul(&tmap(&q, 3, 3, 4).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn valuation_is_additive(s in triple(), t in triple(), r1 in 1usize..6) {
        let (p, q) = (delta_pair(&s, 6), delta_pair(&t, 6));
        let pq = p.mul(&q).unwrap();
        prop_assert_eq!(nu(&pq, r1, 6 - r1).unwrap(), nu(&p, r1, 6 - r1).unwrap() + nu(&q, r1, 6 - r1).unwrap());
    }

    #[test]
    fn star_round_trips_on_forms(ts in prop::collection::vec(triple(), 1..=3)) {
        let w = 2 * ts.len() as u32;
        let f = product(&ts, 6);
        prop_assert!(membership_sw(&f, w, 6));
        let form = InvariantForm::new(f, w).unwrap();
        let back = unstar(&star(&form).unwrap(), w, 6).unwrap();
        prop_assert_eq!(back, form);
    }

    #[test]
    fn coset_symmetrization_matches_direct(ts in prop::collection::vec(triple(), 1..=2)) {
        // average over S_U to get an S_U-invariant input
        let f = sum_over(&product(&ts, 6), &perm::s_u_elements(2), &Budget::unlimited()).unwrap();
        let fast = symmetrize(&f, Group::Full, &Budget::unlimited()).unwrap();
        prop_assert_eq!(fast, symmetrize_direct(&f, &Budget::unlimited()).unwrap());
    }
}
