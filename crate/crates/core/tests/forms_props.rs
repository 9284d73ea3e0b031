use num_bigint::BigInt;
use proptest::prelude::*;

use tropinv::polyalg::{discriminant, BinaryForm, Mobius};
use tropinv::ring::Ring;
use tropinv::transvect::transvectant;

fn form(max_deg: usize) -> impl Strategy<Value = BinaryForm<BigInt>> {
    prop::collection::vec(-7i64..=7, 2..=max_deg + 1)
        .prop_map(|c| BinaryForm::new(c.into_iter().map(BigInt::from).collect()))
}

fn form_of(deg: usize) -> impl Strategy<Value = BinaryForm<BigInt>> {
    prop::collection::vec(-7i64..=7, deg + 1).prop_map(|c| BinaryForm::new(c.into_iter().map(BigInt::from).collect()))
}

fn matrix() -> impl Strategy<Value = Mobius<BigInt>> {
    (-4i64..=4, -4i64..=4, -4i64..=4, -4i64..=4)
        .prop_filter("singular", |(a, b, c, d)| a * d - b * c != 0)
        .prop_map(|(a, b, c, d)| Mobius::new(a.into(), b.into(), c.into(), d.into()).unwrap())
}

fn sl2() -> impl Strategy<Value = Mobius<BigInt>> {
    prop::collection::vec((-3i64..=3, any::<bool>()), 1..5).prop_map(|steps| {
        steps.into_iter().fold(Mobius::identity(), |m, (k, upper)| {
            let (b, c) = if upper { (k, 0) } else { (0, k) };
            m.compose(&Mobius::new(1.into(), b.into(), c.into(), 1.into()).unwrap())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn action_composes(f in form(6), s in matrix(), u in matrix()) {
        prop_assert_eq!(f.act(&s).act(&u), f.act(&s.compose(&u)));
    }

    #[test]
    fn transvectant_equivariance(f in form(6), g in form(6), s in matrix(), r in 0usize..7) {
        let r = r.min(f.degree()).min(g.degree());
        let lhs = transvectant(&f.act(&s), &g.act(&s), r).unwrap();
        let det = s.det().pow_ref(r as u32);
        let rhs = transvectant(&f, &g, r).unwrap().act(&s).scale(&det);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transvectant_unimodular(f in form(6), g in form(6), s in sl2(), r in 0usize..7) {
        let r = r.min(f.degree()).min(g.degree());
        prop_assert!(s.is_unimodular());
        prop_assert_eq!(transvectant(&f.act(&s), &g.act(&s), r).unwrap(), transvectant(&f, &g, r).unwrap().act(&s));
    }

    #[test]
    fn transvectant_bilinear(f in form_of(4), g in form_of(4), h in form_of(3), a in -5i64..=5, r in 0usize..4) {
        let a = BigInt::from(a);
        let lhs = transvectant(&f.scale(&a).add(&g), &h, r).unwrap();
        let rhs = transvectant(&f, &h, r).unwrap().scale(&a).add(&transvectant(&g, &h, r).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transvectant_symmetry(f in form(5), g in form(5), r in 0usize..6) {
        let r = r.min(f.degree()).min(g.degree());
        let sign = if r % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
        prop_assert_eq!(transvectant(&f, &g, r).unwrap(), transvectant(&g, &f, r).unwrap().scale(&sign));
    }

    #[test]
    fn discriminant_weight(n in 2usize..=5, s in matrix(), seed in prop::collection::vec(-5i64..=5, 6)) {
        let f = BinaryForm::new(seed[..=n].iter().map(|&x| BigInt::from(x)).collect());
        prop_assume!(!f.coeff(0).is_zero_elt() || !f.coeff(n).is_zero_elt());
        let w = (n * (n - 1)) as u32;
        prop_assert_eq!(discriminant(&f.act(&s)), discriminant(&f).mul_ref(&s.det().pow_ref(w)));
    }
}

#[test]
fn repeated_root_has_zero_discriminant() {
    let l = BinaryForm::linear(BigInt::from(1), BigInt::from(-3));
    let f = l.mul(&l).mul(&BinaryForm::linear(BigInt::from(2), BigInt::from(1)));
    assert!(discriminant(&f).is_zero_elt());
}
