//! Metric trees straight from roots, and the universal sample families.
//!
//! Independent of the invariant machinery: nothing here evaluates an
//! invariant.

mod families;
mod tree;

pub use families::{random_sample, Family, FamilySample};
pub use tree::{tree_from_roots, tree_from_roots_with, MarkedType, MetricTree5, Point, RootConfig, Split, Topology};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::{int, rat, Rational, RatFunc};
    use crate::polyalg::Mobius;

    fn p(n: &[i64]) -> Point {
        Point::Finite(RatFunc::from_poly(crate::numkernel::UniPoly::from_ints(n)))
    }

    #[test]
    fn star() {
        let rc = RootConfig::new(vec![p(&[0]), p(&[1]), Point::Infinity, p(&[2]), p(&[3])], Some(2)).unwrap();
        let t = tree_from_roots(&rc).unwrap();
        assert_eq!(t.topology, Topology::Star);
        assert_eq!(t.marked_type(), Some(MarkedType::I));
    }

    #[test]
    fn caterpillar_lengths() {
        // 0, 1, inf, t, 1 + t^2
        let rc = RootConfig::new(vec![p(&[0]), p(&[1]), Point::Infinity, p(&[0, 1]), p(&[1, 0, 1])], Some(2)).unwrap();
        let t = tree_from_roots(&rc).unwrap();
        assert_eq!(t.topology, Topology::Caterpillar);
        assert_eq!(t.splits[0].pair, [0, 3]);
        assert_eq!(t.splits[1].pair, [1, 4]);
        assert_eq!(t.lengths(), vec![int(1), int(2)]);
        assert_eq!(t.marked_type(), Some(MarkedType::III2));
    }

    #[test]
    fn one_split() {
        // 0, 1, inf, t, 2t
        let rc = RootConfig::new(vec![p(&[0]), p(&[1]), Point::Infinity, p(&[0, 1]), p(&[0, 2])], Some(2)).unwrap();
        let t = tree_from_roots(&rc).unwrap();
        assert_eq!(t.topology, Topology::OneSplit);
        assert_eq!(t.splits[0].pair, [1, 2]);
        assert_eq!(t.splits[0].length, int(1));
        assert_eq!(t.marked_type(), Some(MarkedType::II1));
    }

    #[test]
    fn other_moves_agree() {
        let rc = RootConfig::new(vec![p(&[0]), p(&[1]), Point::Infinity, p(&[0, 3]), p(&[0, 0, 0, 5])], Some(2)).unwrap();
        let base = tree_from_roots(&rc).unwrap();
        for c in [7i64, -4, 11] {
            let mv = Mobius {
                a: rat(2, 1),
                b: int(1),
                c: int(1),
                d: int(-c),
            };
            assert_eq!(tree_from_roots_with(&rc, &mv).unwrap(), base);
        }
        assert_eq!(base.lengths(), vec![int(1), int(2)]);
    }

    #[test]
    fn duplicates_rejected() {
        let e = RootConfig::new(vec![p(&[0]), p(&[1]), p(&[0]), p(&[2]), p(&[3])], None);
        assert!(matches!(e, Err(crate::Error::NonSeparable(_))));
        let e = RootConfig::new(vec![p(&[0]), Point::Infinity, Point::Infinity, p(&[2]), p(&[3])], None);
        assert!(e.is_err());
    }

    #[test]
    fn moved_sends_pole_to_infinity() {
        let mv: Mobius<Rational> = Mobius {
            a: int(0),
            b: int(1),
            c: int(1),
            d: int(-2),
        };
        assert_eq!(p(&[2]).moved(&mv), Point::Infinity);
        assert_eq!(Point::Infinity.moved(&mv), p(&[0]));
    }
}
