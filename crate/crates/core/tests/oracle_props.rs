use proptest::prelude::*;

use tropinv::numkernel::{int, RatFunc, Rational};
use tropinv::oracle::{tree_from_roots, tree_from_roots_with, MetricTree5, Point, RootConfig, Split};
use tropinv::polyalg::Mobius;
use tropinv::ring::Ring;

/// `c + d t^k + e t^(k+j)`: clusters at several depths are likely.
fn point() -> impl Strategy<Value = Point> {
    (-2i64..=2, -2i64..=2, 1i64..=3, -1i64..=1, 1i64..=2).prop_map(|(c, d, k, e, j)| {
        let x = RatFunc::constant(int(c))
            .add_ref(&RatFunc::monomial(int(d), k))
            .add_ref(&RatFunc::monomial(int(e), k + j));
        Point::Finite(x)
    })
}

fn config() -> impl Strategy<Value = RootConfig> {
    (prop::collection::vec(point(), 5), any::<bool>(), 0usize..5)
        .prop_filter_map("repeated root", |(mut pts, inf, marked)| {
            if inf {
                pts[marked] = Point::Infinity;
            }
            RootConfig::new(pts, Some(marked)).ok()
        })
}

fn mobius() -> impl Strategy<Value = Mobius<Rational>> {
    (-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3)
        .prop_filter("singular", |(a, b, c, d)| a * d - b * c != 0)
        .prop_map(|(a, b, c, d)| Mobius::new(int(a), int(b), int(c), int(d)).unwrap())
}

fn relabel(t: &MetricTree5, perm: &[usize]) -> MetricTree5 {
    let splits = t
        .splits
        .iter()
        .map(|s| Split {
            pair: [perm[s.pair[0]], perm[s.pair[1]]],
            length: s.length.clone(),
        })
        .collect();
    MetricTree5::new(splits, t.marked.map(|m| perm[m])).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn four_point_condition_holds(rc in config()) {
        let t = tree_from_roots(&rc).unwrap();
        prop_assert!(t.splits.iter().all(|s| s.length > int(0)));
        prop_assert!(t.marked_type().is_some());
    }

    #[test]
    fn mobius_invariance(rc in config(), moves in prop::collection::vec(mobius(), 5)) {
        let t = tree_from_roots(&rc).unwrap();
        for m in &moves {
            let pts: Vec<Point> = rc.roots().iter().map(|p| p.moved(m)).collect();
            let moved = RootConfig::new(pts, rc.marked()).unwrap();
            prop_assert_eq!(&tree_from_roots(&moved).unwrap(), &t);
        }
    }

    #[test]
    fn finite_making_move_is_irrelevant(rc in config(), c in 5i64..9) {
        let mv = Mobius::new(int(0), int(1), int(1), int(-c)).unwrap();
        prop_assert_eq!(tree_from_roots_with(&rc, &mv).unwrap(), tree_from_roots(&rc).unwrap());
    }

    #[test]
    fn permutation_relabels(rc in config(), perm in Just((0..5).collect::<Vec<usize>>()).prop_shuffle()) {
        // leaf i of rc becomes leaf perm[i]
        let mut pts = vec![Point::Infinity; 5];
        for (i, p) in rc.roots().iter().enumerate() {
            pts[perm[i]] = p.clone();
        }
        let permuted = RootConfig::new(pts, rc.marked().map(|m| perm[m])).unwrap();
        let t = tree_from_roots(&rc).unwrap();
        prop_assert_eq!(tree_from_roots(&permuted).unwrap(), relabel(&t, &perm));
    }

    #[test]
    fn substituting_t_power_scales_lengths(rc in config(), n in 2usize..4) {
        let pts: Vec<Point> = rc
            .roots()
            .iter()
            .map(|p| match p {
                Point::Finite(x) => Point::Finite(x.inflate(n)),
                Point::Infinity => Point::Infinity,
            })
            .collect();
        let t = tree_from_roots(&rc).unwrap();
        let u = tree_from_roots(&RootConfig::new(pts, rc.marked()).unwrap()).unwrap();
        prop_assert_eq!(u.marked_type(), t.marked_type());
        let scaled: Vec<Rational> = t.lengths().iter().map(|l| l * int(n as i64)).collect();
        prop_assert_eq!(u.lengths(), scaled);
    }
}

#[test]
fn twenty_configurations_five_moves() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
    let mut done = 0;
    while done < 20 {
        let pts: Vec<Point> = (0..5)
            .map(|_| {
                let x = RatFunc::constant(int(rng.gen_range(-2..=2)))
                    .add_ref(&RatFunc::monomial(int(rng.gen_range(1..=2)), rng.gen_range(1..=3)));
                Point::Finite(x)
            })
            .collect();
        let Ok(rc) = RootConfig::new(pts, Some(rng.gen_range(0..5))) else { continue };
        let t = tree_from_roots(&rc).unwrap();
        for _ in 0..5 {
            let (a, b, c, d) = loop {
                let e: Vec<i64> = (0..4).map(|_| rng.gen_range(-4..=4)).collect();
                if e[0] * e[3] != e[1] * e[2] {
                    break (e[0], e[1], e[2], e[3]);
                }
            };
            let m = Mobius::new(int(a), int(b), int(c), int(d)).unwrap();
            let moved = RootConfig::new(rc.roots().iter().map(|p| p.moved(&m)).collect(), rc.marked()).unwrap();
            assert_eq!(tree_from_roots(&moved).unwrap(), t);
        }
        done += 1;
    }
}
