use nlab_core::hopf::{antipode, coproduct, star};
use nlab_core::necklace::{necklace_element, necklaces_up_to, parse_necklace, Necklace};
use nlab_core::verify::standard_quivers;
use proptest::prelude::*;

fn pool() -> (nlab_core::quiver::Quiver, Vec<Necklace>) {
    let (_, q) = standard_quivers().into_iter().nth(1).expect("two-loop quiver");
    let ns = necklaces_up_to(&q, 4);
    (q, ns)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rotations_give_the_same_necklace(i in any::<prop::sample::Index>(), r in 0usize..8) {
        let (q, ns) = pool();
        let n = &ns[i.index(ns.len())];
        prop_assume!(!n.is_empty());
        let turned = Necklace::new(&q, n.rotation(&q, r % n.len()).word).unwrap();
        prop_assert_eq!(&turned, n);
    }

    #[test]
    fn display_parses_back(i in any::<prop::sample::Index>()) {
        let (q, ns) = pool();
        let n = &ns[i.index(ns.len())];
        prop_assert_eq!(&parse_necklace(&q, &n.display(&q)).unwrap(), n);
    }

    #[test]
    fn star_is_associative(a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>(), c in any::<prop::sample::Index>()) {
        let (q, ns) = pool();
        let small: Vec<&Necklace> = ns.iter().filter(|n| n.len() <= 2).collect();
        let [x, y, z] = [a, b, c].map(|i| necklace_element(small[i.index(small.len())].clone()));
        prop_assert_eq!(star(&q, &star(&q, &x, &y), &z), star(&q, &x, &star(&q, &y, &z)));
    }

    #[test]
    fn antipode_is_an_involution_and_coproduct_is_cocommutative_at_h_zero(i in any::<prop::sample::Index>()) {
        let (q, ns) = pool();
        let x = necklace_element(ns[i.index(ns.len())].clone());
        prop_assert_eq!(antipode(&antipode(&x)), x.clone());
        let d = coproduct(&q, &x);
        let flipped = nlab_core::necklace::flip(&d);
        prop_assert_eq!(nlab_core::necklace::at_h_zero(&d), nlab_core::necklace::at_h_zero(&flipped));
    }
}
