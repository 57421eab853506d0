use bsgeo::divides::{
    is_standard_valley, pi_residues, to_standard_valley, ValleyFamily, ValleyTree,
};
use bsgeo::horocyclic::llnf_shape_holds;
use bsgeo::{
    britton_reduce, canonical_form, equal, is_britton_reduced, parse_alt, parse_word, t_sequence,
    AltWord, Group, GroupParams, Slope, Theta,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn divides_params() -> impl Strategy<Value = GroupParams> {
    prop::sample::select(vec![
        (1u64, 2u64),
        (1, 3),
        (2, 4),
        (2, 6),
        (3, 6),
        (3, 9),
        (1, 5),
    ])
    .prop_map(|(p, q)| GroupParams::new(p, q).unwrap())
}

fn any_params() -> impl Strategy<Value = GroupParams> {
    prop::sample::select(vec![
        (1u64, 2u64),
        (1, 3),
        (2, 3),
        (2, 5),
        (3, 4),
        (2, 4),
        (3, 7),
    ])
    .prop_map(|(p, q)| GroupParams::new(p, q).unwrap())
}

fn alt_word(max_k: usize, c: i64) -> impl Strategy<Value = AltWord> {
    prop::collection::vec((any::<bool>(), -c..=c), 0..=max_k).prop_flat_map(move |steps| {
        (Just(steps), -c..=c).prop_map(|(steps, a0)| {
            let mut w = AltWord::from_int(a0);
            for (up, a) in steps {
                w.push(if up { Theta::T } else { Theta::TInv }, BigInt::from(a));
            }
            w
        })
    })
}

/// Valleys: heights never above 0 and ending at 0.
fn valley(max_arcs: usize, c: i64) -> impl Strategy<Value = AltWord> {
    prop::collection::vec((any::<bool>(), -c..=c, -c..=c), 0..=max_arcs).prop_map(|steps| {
        let mut w = AltWord::from_int(0);
        let mut depth = 0;
        for (close, a, b) in steps {
            if close && depth > 0 {
                w.push(Theta::T, BigInt::from(a));
                depth -= 1;
            } else {
                w.add_last(&BigInt::from(b));
                w.push(Theta::TInv, BigInt::from(a));
                depth += 1;
            }
        }
        for _ in 0..depth {
            w.push(Theta::T, BigInt::from(1));
        }
        w
    })
}

fn big_int() -> impl Strategy<Value = BigInt> {
    prop_oneof![
        (-200i64..200).prop_map(BigInt::from),
        any::<i64>().prop_map(BigInt::from),
        prop::collection::vec(any::<u32>(), 1..6).prop_map(|d| {
            let sign = if d.len() % 2 == 0 { 1 } else { -1 };
            BigInt::from(num_bigint::BigUint::new(d)) * sign
        }),
    ]
}

proptest! {
    #[test]
    fn notation_round_trips(w in alt_word(8, 40)) {
        prop_assert_eq!(parse_alt(&w.to_string()).unwrap(), w.clone());
        let raw = w.to_raw(10_000).unwrap();
        prop_assert_eq!(parse_word(&raw.to_string()).unwrap(), raw);
    }

    #[test]
    fn involution_is_inverse(w in alt_word(8, 20), params in any_params()) {
        prop_assert_eq!(w.involute().involute(), w.clone());
        prop_assert!(britton_reduce(&w.concat(&w.involute()), &params).is_identity());
    }

    #[test]
    fn reduction_preserves_value(w in alt_word(10, 20), params in any_params()) {
        let r = britton_reduce(&w, &params);
        prop_assert!(is_britton_reduced(&r, &params));
        prop_assert!(equal(&w, &r, &params));
        prop_assert_eq!(canonical_form(&w, &params), canonical_form(&r, &params));
        prop_assert_eq!(t_sequence(&r, &params), r.theta().to_vec());
    }

    #[test]
    fn llnf_shape(n in big_int(), params in any_params()) {
        let g = Group::from_params(params);
        let w = g.int_llnf(&n);
        prop_assert!(llnf_shape_holds(&w, &n, &params), "{} for {}", w, n);
        prop_assert_eq!(g.int_norm(&n), w.len() as u64);
        prop_assert!(equal(&w.to_alt(), &AltWord::from_int(n), &params));
    }

    #[test]
    fn slope_dps_agree(seed in prop::collection::vec(-100i64..100, 1..40), params in any_params()) {
        let q = params.q() as i64;
        let mut coeffs: Vec<i64> = seed.iter().map(|x| x % q).collect();
        coeffs[0] = seed[0] % (2 * q);
        let s = Slope::new(coeffs).unwrap();
        let g = Group::from_params(params);
        prop_assert_eq!(g.slope_llnf_baseline(&s).unwrap(), g.slope_llnf(&s).unwrap());
    }

    #[test]
    fn multiples_of_p_commute_with_valleys(v in valley(8, 12), params in divides_params()) {
        let v = britton_reduce(&v, &params);
        let p = AltWord::from_int(params.p());
        prop_assert_eq!(canonical_form(&p.concat(&v), &params), canonical_form(&v.concat(&p), &params));
    }

    #[test]
    fn standardization_contract(v in valley(8, 30), params in divides_params()) {
        let (sv, gamma) = to_standard_valley(&v, &params).unwrap();
        let mut vg = sv.word().clone();
        vg.add_last(&gamma);
        prop_assert!(equal(&v, &vg, &params));
        prop_assert!(is_standard_valley(sv.word(), &params));
        prop_assert!(is_britton_reduced(&vg, &params));
        // The carry pass agrees with the irreducible form.
        let canon = canonical_form(&v, &params).into_word();
        prop_assert_eq!(canon, vg);
    }

    #[test]
    fn parse_tree_round_trips(v in valley(10, 9)) {
        let t = ValleyTree::parse(&v).unwrap();
        prop_assert_eq!(t.reassemble(), v.clone());
        prop_assert_eq!(t.sink_count(t.root()), v.sink_count());
    }

    #[test]
    fn ranges_and_family(v in valley(7, 30), params in divides_params()) {
        let g = Group::from_params(params);
        let (sv, _) = to_standard_valley(&v, &params).unwrap();
        let fam = ValleyFamily::build(&sv, &g).unwrap();
        let bound = (params.r_valley() * sv.word().sink_count() as u64) as i64;
        for rho in fam.range() {
            prop_assert_eq!(rho % params.p() as i64, 0);
            prop_assert!(rho.abs() <= bound, "{} beyond {}", rho, bound);
            let w = fam.word(rho).unwrap();
            prop_assert!(equal(&w.concat(&AltWord::from_int(rho)), sv.word(), &params));
            prop_assert_eq!(w.theta(), sv.word().theta());
            prop_assert_eq!(g.norm(&w), fam.norm(rho).unwrap());
        }
    }

    #[test]
    fn residues_are_invariant(v in alt_word(8, 20), params in divides_params(), ins in 0usize..9, mu in -3i64..3) {
        // Insert a relator t (μp) T (-μq) somewhere and compare images.
        let r = britton_reduce(&v, &params);
        let at = ins.min(r.k());
        let mut left = AltWord::from_parts(r.alpha()[..=at].to_vec(), r.theta()[..at].to_vec()).unwrap();
        let right = AltWord::from_parts(r.alpha()[at..].to_vec(), r.theta()[at..].to_vec()).unwrap();
        left.add_last(&-&right.alpha()[0]);
        let p = params.p() as i64;
        let q = params.q() as i64;
        let relator = parse_alt(&format!("t{}T{}", mu * p, -mu * q)).unwrap();
        let other = left.concat(&relator).concat(&right);
        prop_assert!(equal(&v, &other, &params));
        prop_assert_eq!(pi_residues(&v, &params).unwrap(), pi_residues(&other, &params).unwrap());
    }

    #[test]
    fn pnf_is_geodesic_and_stable(w in alt_word(6, 15), params in divides_params()) {
        let g = Group::from_params(params);
        let full = g.full_pnf(&w).unwrap();
        prop_assert!(equal(&w, full.britton.word(), &params));
        prop_assert!(equal(&w, &full.flat.to_alt(), &params));
        prop_assert_eq!(full.flat.len() as u64, full.geodesic_length);
        prop_assert!(full.geodesic_length <= g.norm(&britton_reduce(&w, &params)));
        let again = g.full_pnf(full.britton.word()).unwrap();
        prop_assert_eq!(&again.britton, &full.britton);
        let inv = g.geodesic_length(&w.involute()).unwrap();
        prop_assert_eq!(inv, full.geodesic_length);
    }

    #[test]
    fn hills_in_every_group(alphas in prop::collection::vec(-30i64..30, 0..5), core in -60i64..60,
                            betas in prop::collection::vec(-30i64..30, 0..5), params in any_params()) {
        let mut w = AltWord::identity();
        for a in &alphas {
            w.add_last(&BigInt::from(*a));
            w.push_theta(Theta::T);
        }
        w.add_last(&BigInt::from(core));
        for b in &betas {
            w.push(Theta::TInv, BigInt::from(*b));
        }
        let g = Group::from_params(params);
        let reduced = britton_reduce(&w, &params);
        let pnf = g.hill_pnf(&w).unwrap();
        prop_assert!(equal(&w, pnf.word(), &params));
        prop_assert!(pnf.norm() <= g.norm(&reduced));
        prop_assert_eq!(pnf.word().theta(), reduced.theta());
    }
}

#[test]
fn standardization_examples() {
    let p13 = GroupParams::new(1, 3).unwrap();
    let (v, gamma) = to_standard_valley(&parse_alt("5T2t0").unwrap(), &p13).unwrap();
    assert_eq!(v.word(), &parse_alt("T2t").unwrap());
    assert_eq!(gamma, BigInt::from(5));
    let (v, gamma) = to_standard_valley(&parse_alt("7").unwrap(), &p13).unwrap();
    assert!(v.word().is_identity());
    assert_eq!(gamma, BigInt::from(7));
    let g = Group::from_params(p13);
    let fam = ValleyFamily::build(&v, &g).unwrap();
    assert_eq!(fam.range(), vec![0]);
    // T0t is not Britton-reduced; it collapses to the identity first.
    let (sv, gamma) = to_standard_valley(&parse_alt("T0t").unwrap(), &p13).unwrap();
    assert!(sv.word().is_identity());
    assert_eq!(gamma, BigInt::from(0));
}
