use std::sync::{Arc, OnceLock};

use gradus::arrangement::{count_points, dual_partition, height_partition, Arrangement};
use gradus::ideals::Direction;
use gradus::poly::Poly;
use gradus::weyl::{element_from_inversions, is_biconvex, GradedWeyl, WeylElement};
use gradus::{CartanType, Grading, GradingSpec, Mask, RootSystem};
use proptest::prelude::*;

const TYPES: [&str; 10] = ["A2", "B2", "G2", "A3", "B3", "C3", "A4", "B4", "D4", "F4"];

fn systems() -> &'static Vec<Arc<RootSystem>> {
    static CELL: OnceLock<Vec<Arc<RootSystem>>> = OnceLock::new();
    CELL.get_or_init(|| TYPES.iter().map(|t| Arc::new(RootSystem::build(t.parse::<CartanType>().unwrap()))).collect())
}

fn element(rs: &RootSystem, letters: &[usize]) -> WeylElement {
    let word: Vec<usize> = letters.iter().map(|&l| l % rs.rank()).collect();
    WeylElement::from_word(rs, &word)
}

fn marks_strategy() -> impl Strategy<Value = (usize, Vec<i32>)> {
    (0..TYPES.len()).prop_flat_map(|t| {
        let n = systems()[t].rank();
        (Just(t), prop::collection::vec(0..3i32, n).prop_filter("some mark positive", |m| m.iter().any(|&x| x > 0)))
    })
}

proptest! {
    #[test]
    fn inversion_set_determines_element(t in 0..TYPES.len(), letters in prop::collection::vec(0usize..8, 0..24)) {
        let rs = &systems()[t];
        let w = element(rs, &letters);
        let inv = w.inversion_set(rs);
        prop_assert_eq!(inv.len(), w.length());
        prop_assert!(is_biconvex(rs, inv).is_ok());
        prop_assert_eq!(element_from_inversions(rs, inv).unwrap(), w.clone());
        let word = w.reduced_word(rs);
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(WeylElement::from_word(rs, &word), w);
    }

    #[test]
    fn group_laws(t in 0..TYPES.len(),
                  a in prop::collection::vec(0usize..8, 0..12),
                  b in prop::collection::vec(0usize..8, 0..12),
                  c in prop::collection::vec(0usize..8, 0..12)) {
        let rs = &systems()[t];
        let (x, y, z) = (element(rs, &a), element(rs, &b), element(rs, &c));
        prop_assert_eq!(x.compose(rs, &y).compose(rs, &z), x.compose(rs, &y.compose(rs, &z)));
        prop_assert!(x.compose(rs, &x.inverse(rs)).is_identity());
        prop_assert_eq!(x.inverse(rs).length(), x.length());
        // lengths are subadditive and have the parity of the word
        let xy = x.compose(rs, &y);
        prop_assert!(xy.length() <= x.length() + y.length());
        prop_assert_eq!((xy.length() + x.length() + y.length()) % 2, 0);
    }

    #[test]
    fn grading_spec_round_trips((t, marks) in marks_strategy()) {
        let g = Grading::new(systems()[t].clone(), marks.clone()).unwrap();
        let text = GradingSpec::of(&g).to_string();
        let back: GradingSpec = text.parse().unwrap();
        let rebuilt = back.build().unwrap();
        prop_assert_eq!(rebuilt.marks(), &marks[..]);
        // levels add up
        let rs = g.root_system();
        for k in rs.all_positive().iter() {
            let lvl: i32 = rs.root(k).coords.iter().zip(&marks).map(|(c, m)| c * m).sum();
            prop_assert_eq!(g.level(k), lvl);
        }
    }

    #[test]
    fn ideals_and_antichains_correspond((t, marks) in marks_strategy(), seed in any::<u128>()) {
        let g = Grading::new(systems()[t].clone(), marks).unwrap();
        let Ok(gw) = GradedWeyl::new(g) else { return Ok(()) };
        let poset = gw.poset();
        if poset.is_empty() {
            return Ok(());
        }
        // the lower ideal generated by a random subset
        let random = Mask(seed).intersection(poset.full());
        let ideal = poset.ideal_from_antichain(poset.max_elements(random), Direction::Lower).unwrap();
        prop_assert!(poset.is_lower_ideal(ideal));
        prop_assert!(random.is_subset(ideal));
        let top = poset.max_elements(ideal);
        prop_assert!(poset.is_antichain(top));
        prop_assert_eq!(poset.ideal_from_antichain(top, Direction::Lower).unwrap(), ideal);
        let upper = poset.complement(ideal);
        prop_assert!(poset.is_upper_ideal(upper));
        // w_min and w_max recover the ideal
        let lo = gw.w_min(ideal).unwrap();
        let hi = gw.w_max(ideal).unwrap();
        prop_assert_eq!(gw.tau(&lo).unwrap(), ideal);
        prop_assert_eq!(gw.tau(&hi).unwrap(), ideal);
        prop_assert!(lo.length() <= hi.length());
    }

    #[test]
    fn dual_partition_is_an_involution(counts in prop::collection::vec(1usize..9, 0..10)) {
        let mut p = counts;
        p.sort_unstable_by(|a, b| b.cmp(a));
        let dual = dual_partition(&p);
        prop_assert_eq!(dual.iter().sum::<usize>(), p.iter().sum::<usize>());
        prop_assert_eq!(dual_partition(&dual), p);
    }

    #[test]
    fn height_counts_of_positive_roots_give_exponents(t in 0..TYPES.len()) {
        let rs = &systems()[t];
        let hp = height_partition(rs, rs.all_positive());
        let mut ex = hp.dual.clone();
        ex.sort_unstable();
        prop_assert_eq!(ex, rs.exponents());
    }

    #[test]
    fn polynomial_evaluation_is_a_ring_map(a in prop::collection::vec(-50i128..50, 0..6),
                                           b in prop::collection::vec(-50i128..50, 0..6),
                                           t in -6i128..6) {
        let (p, q) = (Poly::new(a), Poly::new(b));
        prop_assert_eq!((&p * &q).eval(t), p.eval(t) * q.eval(t));
        prop_assert_eq!((&p + &q).eval(t), p.eval(t) + q.eval(t));
        prop_assert_eq!((&p - &q).eval(t), p.eval(t) - q.eval(t));
        if !q.is_zero() && q.leading().abs() == 1 {
            prop_assert_eq!((&p * &q).div_exact(&q), Some(p));
        }
    }

    #[test]
    fn deleting_a_hyperplane_never_lowers_the_count(t in 0..6usize, seed in any::<u128>(), q in prop::sample::select(vec![7u64, 11, 13])) {
        let rs = &systems()[t];
        let roots = Mask(seed).intersection(rs.all_positive());
        let arr = Arrangement::from_roots(rs, roots);
        let base = count_points(&arr, q);
        for k in roots.iter() {
            let smaller = Arrangement::from_roots(rs, roots.difference(Mask::singleton(k)));
            prop_assert!(count_points(&smaller, q) >= base);
        }
    }
}
