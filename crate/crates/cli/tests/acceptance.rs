//! One line per acceptance criterion. `XFAIL` marks a criterion that cannot
//! hold as stated; the line still asserts the measured constants, so a
//! change in them turns it into `FAIL`.

use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tropinv::classify::{
    classify, total_length, type_iii_e2_alternative, type_iii_lengths, ClassifierInput, Ext, TreeType,
};
use tropinv::invariants::{quintic_valuations, tropicalize, Backend};
use tropinv::io::parse_list;
use tropinv::numkernel::{int, RatFunc, UniPoly, Valuation};
use tropinv::oracle::{random_sample, tree_from_roots, Family, FamilySample, MarkedType, Point, RootConfig};
use tropinv::polyalg::{BinaryForm, Mobius};
use tropinv::ring::Ring;
use tropinv::selftest;

#[derive(Clone, Copy, PartialEq)]
enum Verdict {
    Pass,
    Xfail,
    Fail,
}

struct Line {
    id: u32,
    verdict: Verdict,
    text: String,
}

fn line(id: u32, ok: bool, text: String) -> Line {
    Line {
        id,
        verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        text,
    }
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tropinv"))
}

fn c1() -> Line {
    let forms = [
        ("f2", "0, 1, -3 - t^2, 2 + 3*t^2, -2*t^2, 0", TreeType::II),
        ("f3", "0, 1, -2 - 3*t, 1 + 4*t + 2*t^2, -t - 2*t^2, 0", TreeType::III),
    ];
    let want: Vec<Valuation> = [0, 0, 0, 2, 4].iter().map(|&x| Valuation::int(x)).collect();
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, src, tt) in forms {
        let f = BinaryForm::new(parse_list(src).unwrap());
        let t = Instant::now();
        let cin = ClassifierInput::from_quintic(&f, Backend::TAdic).unwrap();
        let c = classify(&cin).unwrap();
        let secs = t.elapsed().as_secs_f64();
        let v = &cin.quintic.valuations;
        let got = vec![v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone(), v[4].clone()];
        ok &= got == want && c.tree_type == tt && secs < 1.0;
        parts.push(format!("{name} Type {} in {secs:.2} s", c.tree_type.name()));
    }
    line(1, ok, format!("valuations (0,0,0,2,4) for f2 and f3; {}", parts.join(", ")))
}

fn c2_c3() -> (Line, Line) {
    let t = Instant::now();
    let out = bin().args(["selftest", "--format", "json"]).output().unwrap();
    let secs = t.elapsed().as_secs_f64();
    let rep: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let status = |name: &str| -> (String, String) {
        let c = rep["checks"].as_array().unwrap().iter().find(|c| c["name"] == name).unwrap();
        (c["status"].as_str().unwrap().to_string(), c["detail"].as_str().unwrap().to_string())
    };
    let ratio = selftest::discriminant_ratio().unwrap();
    let h = selftest::h_cubic_constant().unwrap();
    let (hs, _) = status("h-cubic-discriminant");
    let delta_ok = ratio == int(1) && status("discriminant-identity").0 == "pass";
    let universal_ok = status("universal-table").0 == "pass";
    let measured = h == int(selftest::H_CUBIC_MEASURED) && hs == "xfail";
    let l2 = Line {
        id: 2,
        verdict: match (delta_ok && universal_ok && secs < 300.0, measured, h == int(1)) {
            (true, _, true) => Verdict::Pass,
            (true, true, _) => Verdict::Xfail,
            _ => Verdict::Fail,
        },
        text: format!(
            "Delta = c0 I4^2 + c1 I8 is the discriminant (ratio {ratio}); unscaled H(0,0,1,0,a4,a5) = {h} * disc(x^3+a4x+a5), not +1; selftest {secs:.1} s"
        ),
    };
    let mut ok = true;
    let mut xf = false;
    let mut parts = Vec::new();
    for inv in ["I4", "I8", "I12", "I18"] {
        let (s, d) = status(&format!("j-identity-{inv}"));
        match s.as_str() {
            "pass" => parts.push(format!("{inv} holds")),
            "xfail" => {
                xf = true;
                parts.push(format!("{inv} off ({d})"));
            }
            _ => ok = false,
        }
    }
    let l3 = Line {
        id: 3,
        verdict: match (ok, xf) {
            (false, _) => Verdict::Fail,
            (true, true) => Verdict::Xfail,
            (true, false) => Verdict::Pass,
        },
        text: parts.join("; "),
    };
    (l2, l3)
}

fn rand_poly(rng: &mut ChaCha8Rng, deg: usize) -> RatFunc {
    RatFunc::from_poly(UniPoly::from_coeffs((0..=deg).map(|_| int(rng.gen_range(-4..=4))).collect()))
}

fn c4() -> Line {
    let held = selftest::transvectant_equivariance(20, 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut same, mut total) = (0, 0);
    for _ in 0..10 {
        let f = loop {
            let roots: Vec<RatFunc> = (0..5).map(|_| rand_poly(&mut rng, 1)).collect();
            if (0..5).all(|i| (0..i).all(|j| roots[i] != roots[j])) {
                break roots.iter().fold(BinaryForm::constant(RatFunc::one()), |acc, r| {
                    acc.mul(&BinaryForm::linear(RatFunc::one(), r.neg_ref()))
                });
            }
        };
        let canon = tropicalize(&quintic_valuations(&f, Backend::TAdic).unwrap()).canonical();
        let mut moves = 0;
        while moves < 20 {
            let e: Vec<RatFunc> =
                (0..4).map(|_| RatFunc::monomial(int(rng.gen_range(-3..=3)), rng.gen_range(0..2))).collect();
            let Ok(m) = Mobius::new(e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone()) else { continue };
            let lam = RatFunc::monomial(int(rng.gen_range(1..5)), rng.gen_range(-1..2));
            let g = f.act(&m).scale(&lam);
            same += (tropicalize(&quintic_valuations(&g, Backend::TAdic).unwrap()).canonical() == canon) as usize;
            total += 1;
            moves += 1;
        }
    }
    line(
        4,
        held == 20 && same == total,
        format!("transvectants SL2-equivariant {held}/20; canonical tropical point fixed {same}/{total} GL2(Q(t)) moves"),
    )
}

fn c5_c6() -> (Line, Line) {
    let t = Instant::now();
    let out = bin()
        .args(["verify", "--format", "json", "--families", "all", "--samples", "250", "--seed", "1"])
        .output()
        .unwrap();
    let secs = t.elapsed().as_secs_f64();
    let rep: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let fams = rep["families"].as_object().unwrap();
    let sum = |k: &str| fams.values().map(|c| c[k].as_u64().unwrap()).sum::<u64>();
    let (agree, total) = (rep["agree"].as_u64().unwrap(), rep["total"].as_u64().unwrap());
    let (ties, cross, literal) = (sum("ties"), sum("crossovers"), sum("unnormalized_mismatch"));
    let l5 = line(
        5,
        out.status.success() && agree == 1250 && total == 1250 && ties > 0 && cross > 0 && secs < 600.0,
        format!(
            "verify 250/family seed 1: {agree}/{total} agree, {ties} ties, {cross} Type II crossovers, {secs:.1} s (literal Type II term wrong on {literal})"
        ),
    );
    let excl = sum("exclusive");
    let l6 = line(6, excl == total, format!("exactly one type condition on {excl}/{total} samples"));
    (l5, l6)
}

fn c7() -> Line {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut direct, mut twice) = (0, 0);
    for i in 0..50 {
        let fam = if i % 2 == 0 { Family::III1 } else { Family::III2 };
        let fs = random_sample(fam, i % 5 == 4, &mut rng);
        let cin = ClassifierInput::from_fourone(&fs.form(), Backend::TAdic).unwrap();
        let v = &cin.quintic.valuations;
        let mut want = tree_from_roots(&fs.roots()).unwrap().lengths();
        want.sort();
        let (e1, _) = type_iii_lengths(v);
        direct += (total_length(v).sub(&e1) == Ext::Fin(want[1].clone())) as usize;
        twice += (type_iii_e2_alternative(v, &e1) == Ext::Fin(&want[1] * int(2))) as usize;
    }
    line(7, direct == 50 && twice == 50, format!("L(e2) = total - L(e1) matches the oracle {direct}/50; alternative formula gives 2 L(e2) {twice}/50"))
}

fn c8() -> Line {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut ok = 0;
    let n = 100;
    for i in 0..n {
        let fs = random_sample(Family::ALL[i % 5], i % 3 == 0, &mut rng);
        let sk = classify(&ClassifierInput::from_fourone(&fs.form(), Backend::TAdic).unwrap()).unwrap().skeleton.unwrap();
        ok += (sk.total_weight() + sk.betti == 3) as usize;
    }
    let k = |f, k1, k2| FamilySample::new(f, k1, k2, int(2), int(5)).unwrap();
    let table: [(FamilySample, &[u32], u32); 5] = [
        (k(Family::I, 0, 0), &[3], 0),
        (k(Family::II1, 3, 0), &[0, 1], 2),
        (k(Family::II2, 3, 0), &[1, 2], 0),
        (k(Family::III1, 2, 3), &[0, 0, 1], 2),
        (k(Family::III2, 2, 3), &[1, 1, 1], 0),
    ];
    let rows = table
        .iter()
        .filter(|(fs, w, b)| {
            let sk = classify(&ClassifierInput::from_fourone(&fs.form(), Backend::TAdic).unwrap()).unwrap().skeleton.unwrap();
            sk.weights() == *w && sk.betti == *b
        })
        .count();
    line(8, ok == n && rows == 5, format!("weights + b1 = 3 on {ok}/{n} skeleta; family table {rows}/5"))
}

fn c9() -> Line {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut configs, mut same, mut types) = (0, 0, std::collections::BTreeSet::new());
    while configs < 20 {
        let mut pts: Vec<Point> = (0..5)
            .map(|_| {
                Point::Finite(
                    RatFunc::constant(int(rng.gen_range(-2..=2)))
                        .add_ref(&RatFunc::monomial(int(rng.gen_range(1..=2)), rng.gen_range(1..=3))),
                )
            })
            .collect();
        if configs % 4 == 0 {
            pts[4] = Point::Infinity;
        }
        let mut marked = rng.gen_range(0..5);
        if configs == 0 {
            // a caterpillar marked in the middle
            pts = parse_list("0, 1, t, 1 + t^2").unwrap().into_iter().map(Point::Finite).collect();
            pts.push(Point::Infinity);
            marked = 4;
        }
        let Ok(rc) = RootConfig::new(pts, Some(marked)) else { continue };
        let tree = tree_from_roots(&rc).unwrap();
        types.insert(tree.marked_type().map(MarkedType::name).unwrap_or("-"));
        for _ in 0..5 {
            let e: Vec<i64> = loop {
                let e: Vec<i64> = (0..4).map(|_| rng.gen_range(-4..=4)).collect();
                if e[0] * e[3] != e[1] * e[2] {
                    break e;
                }
            };
            let m = Mobius::new(int(e[0]), int(e[1]), int(e[2]), int(e[3])).unwrap();
            let moved = RootConfig::new(rc.roots().iter().map(|p| p.moved(&m)).collect(), rc.marked()).unwrap();
            same += (tree_from_roots(&moved).unwrap() == tree) as usize;
        }
        configs += 1;
    }
    let t: Vec<&str> = types.into_iter().collect();
    line(9, same == 100, format!("oracle tree unchanged under {same}/100 Moebius moves (20 configurations, types {})", t.join(" ")))
}

fn main() {
    let t = Instant::now();
    let (l2, l3) = c2_c3();
    let (l5, l6) = c5_c6();
    let lines = vec![c1(), l2, l3, c4(), l5, l6, c7(), c8(), c9()];
    let mut failed = 0;
    for l in &lines {
        let tag = match l.verdict {
            Verdict::Pass => "PASS ",
            Verdict::Xfail => "XFAIL",
            Verdict::Fail => {
                failed += 1;
                "FAIL "
            }
        };
        println!("{tag} criterion {}: {}", l.id, l.text);
    }
    println!("{} criteria, {failed} failed, {:.1} s", lines.len(), t.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
