use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tropinv::classify::{
    classify, conditions, total_length, type_iii_e2_alternative, type_iii_lengths, ClassifierInput, Ext, TreeType,
};
use tropinv::invariants::Backend;
use tropinv::io::parse_list;
use tropinv::numkernel::{int, rat, RatFunc, Rational};
use tropinv::oracle::{random_sample, tree_from_roots, Family, FamilySample, MarkedType};
use tropinv::polyalg::{BinaryForm, Mobius};
use tropinv::verify::draw;

fn quintic(src: &str) -> BinaryForm<RatFunc> {
    BinaryForm::new(parse_list(src).unwrap())
}

#[test]
fn f2_is_type_ii_and_f3_type_iii() {
    let cases = [
        ("0, 1, -3 - t^2, 2 + 3*t^2, -2*t^2, 0", TreeType::II, vec![int(2)]),
        ("0, 1, -2 - 3*t, 1 + 4*t + 2*t^2, -t - 2*t^2, 0", TreeType::III, vec![int(1), int(1)]),
    ];
    for (src, tt, lengths) in cases {
        let t = Instant::now();
        let cin = ClassifierInput::from_quintic(&quintic(src), Backend::TAdic).unwrap();
        let c = classify(&cin).unwrap();
        assert!(t.elapsed().as_secs_f64() < 1.0, "{src}: {:?}", t.elapsed());
        assert_eq!(c.tree_type, tt);
        assert_eq!(c.lengths, lengths);
        assert_eq!(c.marked_type, None);
    }
}

#[test]
fn skeleta_have_genus_three() {
    for f in Family::ALL {
        for i in 0..8 {
            let (fs, _) = draw(21, f, i);
            let c = classify(&ClassifierInput::from_fourone(&fs.form(), Backend::TAdic).unwrap()).unwrap();
            let sk = c.skeleton.unwrap();
            assert_eq!(sk.total_weight() + sk.betti, 3, "{}", f.name());
        }
    }
}

#[test]
fn family_skeleta_match_table() {
    let k = |f, k1, k2, m1: i64, m2: i64| FamilySample::new(f, k1, k2, int(m1), int(m2)).unwrap();
    let cases = [
        (k(Family::I, 0, 0, 2, 3), vec![3], vec![], 0),
        (k(Family::II1, 3, 0, 2, 5), vec![0, 1], vec![int(3)], 2),
        (k(Family::II2, 3, 0, 2, 5), vec![1, 2], vec![int(1)], 0),
        (k(Family::III1, 2, 3, 2, 5), vec![0, 0, 1], vec![int(2), int(1)], 2),
        (k(Family::III2, 2, 3, 2, 5), vec![1, 1, 1], vec![rat(2, 3), int(1)], 0),
    ];
    for (fs, weights, lengths, betti) in cases {
        let c = classify(&ClassifierInput::from_fourone(&fs.form(), Backend::TAdic).unwrap()).unwrap();
        let sk = c.skeleton.unwrap();
        assert_eq!(sk.weights(), weights, "{}", fs.family.name());
        assert_eq!(sk.edge_lengths(), lengths, "{}", fs.family.name());
        assert_eq!(sk.betti, betti);
    }
}

#[test]
fn type_iii_second_edge() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..50 {
        let fam = if i % 2 == 0 { Family::III1 } else { Family::III2 };
        let fs = random_sample(fam, i % 5 == 4, &mut rng);
        let cin = ClassifierInput::from_fourone(&fs.form(), Backend::TAdic).unwrap();
        let v = &cin.quintic.valuations;
        let tree = tree_from_roots(&fs.roots()).unwrap();
        let mut want = tree.lengths();
        want.sort();
        let (e1, e2) = type_iii_lengths(v);
        assert_eq!(e1, Ext::Fin(want[0].clone()));
        assert_eq!(e2, Ext::Fin(want[1].clone()));
        assert_eq!(total_length(v).sub(&e1), e2);
        assert_eq!(type_iii_e2_alternative(v, &e1), Ext::Fin(&want[1] * int(2)));
    }
}

#[test]
fn exactly_one_condition() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for i in 0..40 {
        let fam = Family::ALL[i % 5];
        let fs = random_sample(fam, i % 4 == 0, &mut rng);
        let cin = ClassifierInput::from_fourone(&fs.form(), Backend::TAdic).unwrap();
        assert_eq!(conditions(&cin).unwrap().count(), 1, "{:?}", fs);
    }
}

#[test]
fn lengths_scale_under_t_power() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for fam in [Family::II1, Family::II2, Family::III1, Family::III2] {
        let fs = random_sample(fam, false, &mut rng);
        let base = classify(&ClassifierInput::from_fourone(&fs.form(), Backend::TAdic).unwrap()).unwrap();
        let big = fs.inflated(3);
        let c = classify(&ClassifierInput::from_fourone(&big.form(), Backend::TAdic).unwrap()).unwrap();
        assert_eq!(c.marked_type, base.marked_type);
        let scaled: Vec<Rational> = base.lengths.iter().map(|l| l * int(3)).collect();
        assert_eq!(c.lengths, scaled);
    }
}

#[test]
fn moved_forms_classify_alike() {
    let mut rng = ChaCha8Rng::seed_from_u64(30);
    for fam in Family::ALL {
        let fs = random_sample(fam, false, &mut rng);
        let base = classify(&ClassifierInput::from_fourone(&fs.form(), Backend::TAdic).unwrap()).unwrap();
        for _ in 0..2 {
            let e: Vec<RatFunc> = (0..4).map(|_| RatFunc::constant(int(rng.gen_range(-3..=3)))).collect();
            let Ok(m) = Mobius::new(e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone()) else { continue };
            let moved = fs.form().act(&m);
            let c = classify(&ClassifierInput::from_fourone(&moved, Backend::TAdic).unwrap()).unwrap();
            assert_eq!(c.marked_type, base.marked_type, "{}", fam.name());
            assert_eq!(c.lengths, base.lengths);
        }
    }
}

#[test]
fn padic_marked_types() {
    let cases = [
        // roots 0, 1, 7, 14, inf over Q_7: {0, 7, 14} collide, so {1, inf} is a cherry
        ("1, -22, 119, -98, 0", MarkedType::II1),
        // roots 0, 7, 1, 2, inf: {0, 7} is a cherry away from the mark
        ("1, -10, 23, -14, 0", MarkedType::II2),
    ];
    for (src, want) in cases {
        let q = BinaryForm::new(parse_list(src).unwrap());
        let g = tropinv::polyalg::FourOneForm::new(q, BinaryForm::z()).unwrap();
        let c = classify(&ClassifierInput::from_fourone(&g, Backend::PAdic(7)).unwrap()).unwrap();
        assert_eq!(c.marked_type, Some(want), "{src}");
        assert_eq!(c.lengths, vec![int(1)]);
        assert!(ClassifierInput::from_fourone(&g, Backend::PAdic(3)).is_err());
    }
}
