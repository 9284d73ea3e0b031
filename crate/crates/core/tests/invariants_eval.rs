use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tropinv::invariants::{
    evaluate_fourone, evaluate_fourone_direct, evaluate_quintic, evaluate_quintic_direct, fourone_valuations,
    quintic_valuations, tropicalize, Backend, FourOneInv, QuinticInv,
};
use tropinv::io::parse_list;
use tropinv::numkernel::{int, rat, RatFunc, Rational, UniPoly, Valuation};
use tropinv::polyalg::{BinaryForm, FourOneForm, Mobius};
use tropinv::ring::Ring;

fn quintic(src: &str) -> BinaryForm<RatFunc> {
    BinaryForm::new(parse_list(src).unwrap())
}

fn v(xs: &[i64]) -> Vec<Valuation> {
    xs.iter().map(|&x| Valuation::int(x)).collect()
}

fn rand_poly(rng: &mut ChaCha8Rng, deg: usize, r: i64) -> RatFunc {
    RatFunc::from_poly(UniPoly::from_coeffs((0..=deg).map(|_| int(rng.gen_range(-r..=r))).collect()))
}

/// Separable quintic with roots drawn from small elements of `Q[t]`.
fn rand_quintic(rng: &mut ChaCha8Rng) -> BinaryForm<RatFunc> {
    loop {
        let roots: Vec<RatFunc> = (0..5).map(|_| rand_poly(rng, 1, 4)).collect();
        let distinct = (0..5).all(|i| (0..i).all(|j| roots[i] != roots[j]));
        if distinct {
            return roots.iter().fold(BinaryForm::constant(RatFunc::one()), |acc, r| {
                acc.mul(&BinaryForm::linear(RatFunc::one(), r.neg_ref()))
            });
        }
    }
}

#[test]
fn f2_and_f3_valuations() {
    let f2 = quintic("0, 1, -3 - t^2, 2 + 3*t^2, -2*t^2, 0");
    let f3 = quintic("0, 1, -2 - 3*t, 1 + 4*t + 2*t^2, -t - 2*t^2, 0");
    for f in [f2, f3] {
        let t = Instant::now();
        let s = quintic_valuations(&f, Backend::TAdic).unwrap();
        assert!(t.elapsed().as_secs_f64() < 1.0);
        assert_eq!(s.valuations[..4], v(&[0, 0, 0, 2]));
        assert_eq!(s.get("Delta"), Some(&Valuation::int(4)));
    }
}

#[test]
fn constant_quintic_has_unit_discriminant() {
    let f = quintic("1, 0, -5, 0, 4, 7");
    let s = quintic_valuations(&f, Backend::TAdic).unwrap();
    assert_eq!(s.get("Delta"), Some(&Valuation::int(0)));
}

#[test]
fn table_and_recipes_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    // mostly rational coefficients; the recipes over Q(t) are slow
    for i in 0..50 {
        let deg = if i % 10 == 0 { 1 } else { 0 };
        let f = BinaryForm::new((0..6).map(|_| rand_poly(&mut rng, deg, 5)).collect());
        assert_eq!(evaluate_quintic(&f).unwrap(), evaluate_quintic_direct(&f).unwrap());
    }
    for i in 0..10 {
        let deg = if i % 5 == 0 { 1 } else { 0 };
        let q = BinaryForm::new((0..5).map(|_| rand_poly(&mut rng, deg, 5)).collect());
        let l = BinaryForm::new((0..2).map(|_| rand_poly(&mut rng, deg, 5)).collect());
        let g = FourOneForm::new(q, l).unwrap();
        if let Ok(a) = evaluate_fourone(&g) {
            assert_eq!(a, evaluate_fourone_direct(&g).unwrap());
        }
    }
}

fn rand_move(rng: &mut ChaCha8Rng) -> Mobius<RatFunc> {
    loop {
        let e: Vec<RatFunc> = (0..4)
            .map(|_| {
                let k = rng.gen_range(0..2);
                RatFunc::monomial(int(rng.gen_range(-3..=3)), k)
            })
            .collect();
        if let Ok(m) = Mobius::new(e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone()) {
            return m;
        }
    }
}

fn det_val(m: &Mobius<RatFunc>) -> Rational {
    m.det().val_t().finite().unwrap().clone()
}

#[test]
fn tropical_point_is_gl2_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..10 {
        let f = rand_quintic(&mut rng);
        let base = quintic_valuations(&f, Backend::TAdic).unwrap();
        let canon = tropicalize(&base).canonical();
        for _ in 0..20 {
            let m = rand_move(&mut rng);
            let lam = RatFunc::monomial(rat(rng.gen_range(1..5), 1), rng.gen_range(-1..2));
            let g = f.act(&m).scale(&lam);
            let s = quintic_valuations(&g, Backend::TAdic).unwrap();
            assert_eq!(tropicalize(&s).canonical(), canon);
            // invariants of degree d pick up lambda^d det^(5d/2)
            let (dv, lv) = (det_val(&m), lam.val_t().finite().unwrap().clone());
            for (i, inv) in QuinticInv::ALL.iter().enumerate() {
                let d = int(inv.degree() as i64);
                let shift = &d * &lv + &d * rat(5, 2) * &dv;
                assert_eq!(s.valuations[i], base.valuations[i].shift(&shift), "{}", inv.name());
            }
        }
    }
}

#[test]
fn fourone_weights() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let q = BinaryForm::new(parse_list("1, 0, -1 - t, 0, t").unwrap());
    let g = FourOneForm::new(q, BinaryForm::z()).unwrap();
    let base = fourone_valuations(&g, Backend::TAdic).unwrap();
    for _ in 0..10 {
        let m = rand_move(&mut rng);
        let s = fourone_valuations(&g.act(&m), Backend::TAdic).unwrap();
        for (i, j) in FourOneInv::ALL.iter().enumerate() {
            let (dq, dl) = j.bidegree();
            let w = rat((4 * dq + dl) as i64, 2);
            assert_eq!(s.valuations[i], base.valuations[i].shift(&(w * det_val(&m))), "{}", j.name());
        }
    }
}

#[test]
fn j5_reduces_to_one_on_family_ii1() {
    let lambdas = [("3*t^2", "5*t^2"), ("-t", "2*t"), ("1/2*t^3", "-4*t^3")];
    for (l1, l2) in lambdas {
        let src = format!("0, 1, {l1}, {l2}");
        let r = parse_list(&src).unwrap();
        let q = [&r[0], &r[1], &r[2], &r[3]].iter().fold(BinaryForm::constant(RatFunc::one()), |acc, x| {
            acc.mul(&BinaryForm::linear(RatFunc::one(), x.neg_ref()))
        });
        let g = FourOneForm::new(q, BinaryForm::z()).unwrap();
        let s = fourone_valuations(&g, Backend::TAdic).unwrap();
        assert_eq!(s.get("j5"), Some(&Valuation::int(0)));
        assert_eq!(s.residues[2], Some(int(1)), "{l1}, {l2}");
    }
}

#[test]
fn padic_backend_rejects_t() {
    let f = quintic("0, 1, -3 - t^2, 2 + 3*t^2, -2*t^2, 0");
    assert!(matches!(quintic_valuations(&f, Backend::PAdic(13)), Err(tropinv::Error::Usage(_))));
    let g = quintic("0, 1, -3 - 169, 2 + 3*169, -2*169, 0");
    let s = quintic_valuations(&g, Backend::PAdic(13)).unwrap();
    assert_eq!(s.valuations[..4], v(&[0, 0, 0, 2]));
}
