use bsgeo::oracle::oracle_britton_pnf;
use bsgeo::{britton_reduce, decompose, equal, t_sequence, BallIndex, Group, Letter, RawWord};

/// All words over the four letters of length at most `n`, shortest first.
fn all_words(n: usize) -> Vec<RawWord> {
    let mut out = vec![RawWord::empty()];
    let mut level = vec![RawWord::empty()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(level.len() * 4);
        for w in &level {
            for l in Letter::ALL {
                let mut x = w.clone();
                x.push(l);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

fn sweep(p: u64, q: u64, radius: usize, wordlen: usize) {
    let g = Group::new(p, q).unwrap();
    let ball = BallIndex::build(g.params(), radius).unwrap();
    for w in all_words(wordlen) {
        let u = w.to_alt();
        let expected = ball.geolen(&u).unwrap();
        let full = g.full_pnf(&u).unwrap();
        assert_eq!(full.geodesic_length, expected, "BS({p},{q}) length of {w}");
        assert_eq!(
            full.flat.len() as u64,
            expected,
            "BS({p},{q}) flat length of {w}"
        );
        assert!(
            equal(&u, &full.flat.to_alt(), g.params()),
            "BS({p},{q}) {w} vs {}",
            full.flat
        );
        assert_eq!(
            t_sequence(&full.flat.to_alt(), g.params()),
            t_sequence(&u, g.params())
        );
        let again = g.full_pnf(&full.flat.to_alt()).unwrap();
        assert_eq!(
            again.britton, full.britton,
            "BS({p},{q}) idempotence on {w}"
        );
        if let Some(n) = britton_reduce(&u, g.params()).as_integer() {
            assert_eq!(
                &g.int_llnf(n),
                ball.llnf(&u).unwrap(),
                "BS({p},{q}) llnf of {w}"
            );
        }
    }
}

#[test]
fn geodesics_bs_1_2() {
    sweep(1, 2, 8, 6);
}

#[test]
fn geodesics_bs_1_3() {
    sweep(1, 3, 8, 6);
}

#[test]
fn geodesics_bs_2_4() {
    sweep(2, 4, 8, 6);
}

#[test]
fn geodesics_bs_2_6() {
    sweep(2, 6, 8, 6);
}

fn pnf_matches_search(p: u64, q: u64) {
    let g = Group::new(p, q).unwrap();
    let ball = BallIndex::build(g.params(), 8).unwrap();
    let mut checked = 0;
    for w in all_words(5) {
        let u = w.to_alt();
        if britton_reduce(&u, g.params()).k() > 4 {
            continue;
        }
        let ours = g.full_pnf(&u).unwrap().britton.into_word();
        let brute = oracle_britton_pnf(&u, &ball, 4, 8).unwrap();
        assert_eq!(ours, brute, "BS({p},{q}) pnf of {w}");
        checked += 1;
    }
    assert!(checked > 1000);
}

#[test]
fn pnf_matches_search_bs_1_2() {
    pnf_matches_search(1, 2);
}

#[test]
fn pnf_matches_search_bs_2_4() {
    pnf_matches_search(2, 4);
}

#[test]
fn hills_in_bs_2_3() {
    let g = Group::new(2, 3).unwrap();
    let ball = BallIndex::build(g.params(), 7).unwrap();
    for w in all_words(5) {
        let u = w.to_alt();
        match g.full_pnf(&u) {
            Ok(full) => assert_eq!(full.geodesic_length, ball.geolen(&u).unwrap(), "{w}"),
            Err(bsgeo::Error::UnsupportedCase { .. }) => {
                assert!(!decompose(&u, g.params()).is_hill(), "{w}");
            }
            Err(e) => panic!("{w}: {e}"),
        }
    }
}

#[test]
#[ignore]
fn deep_sweeps() {
    for (p, q) in [(1, 2), (1, 3), (2, 4), (2, 6), (3, 6), (1, 4)] {
        sweep(p, q, 10, 8);
    }
}

#[test]
#[ignore]
fn deep_pnf_search() {
    for (p, q) in [(1, 2), (2, 4), (1, 3), (2, 6)] {
        let g = Group::new(p, q).unwrap();
        let ball = BallIndex::build(g.params(), 9).unwrap();
        for w in all_words(7) {
            let u = w.to_alt();
            if britton_reduce(&u, g.params()).k() > 5 {
                continue;
            }
            let ours = g.full_pnf(&u).unwrap().britton.into_word();
            let brute = oracle_britton_pnf(&u, &ball, 5, 10).unwrap();
            assert_eq!(ours, brute, "BS({p},{q}) pnf of {w}");
        }
    }
}

#[test]
#[ignore]
fn deep_difficult_split() {
    // a T b t c t d T e T f t climbs to height 1 and ends at 0, so the padded
    // valley has one trailing t and the right part is solved separately.
    for (p, q) in [(2, 4), (2, 6)] {
        let g = Group::new(p, q).unwrap();
        let ball = BallIndex::build(g.params(), 11).unwrap();
        let mut hits = 0;
        let r = || -3i64..=3;
        for a in 0..=1 {
            for b in r() {
                for c in r() {
                    for d in r() {
                        for e in r() {
                            for f in r() {
                                let text = format!("{a}T{b}t{c}t{d}T{e}T{f}t");
                                let u = bsgeo::parse_alt(&text).unwrap();
                                if britton_reduce(&u, g.params()).k() != 6 {
                                    continue;
                                }
                                let Ok(expected) = ball.geolen(&u) else {
                                    continue;
                                };
                                let full = g.full_pnf(&u).unwrap();
                                assert_eq!(full.geodesic_length, expected, "BS({p},{q}) {text}");
                                assert!(equal(&u, full.britton.word(), g.params()));
                                let brute = oracle_britton_pnf(&u, &ball, 6, 8).unwrap();
                                assert_eq!(full.britton.word(), &brute, "BS({p},{q}) {text}");
                                hits += 1;
                            }
                        }
                    }
                }
            }
        }
        assert!(hits > 100, "{hits}");
    }
}
