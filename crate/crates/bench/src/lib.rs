//! Workload generators shared by the benchmarks and the acceptance suite.

use bsgeo::{britton_reduce, AltWord, GroupParams, Letter, RawWord, Slope, Theta};
use num_bigint::BigInt;
use rand::Rng;

/// A uniformly random word over the four letters with length in `0..=maxlen`.
pub fn random_word(rng: &mut impl Rng, maxlen: usize) -> RawWord {
    let n = rng.gen_range(0..=maxlen);
    RawWord::new((0..n).map(|_| Letter::ALL[rng.gen_range(0..4)]).collect())
}

/// A random valley with about `arcs` arcs, coefficients in `[-c, c]`, Britton-reduced.
pub fn random_valley(rng: &mut impl Rng, params: &GroupParams, arcs: usize, c: i64) -> AltWord {
    let mut w = AltWord::from_int(rng.gen_range(-c..=c));
    let mut depth = 0usize;
    let mut opened = 0usize;
    while opened < arcs || depth > 0 {
        let open = opened < arcs && (depth == 0 || rng.gen_bool(0.5));
        if open {
            w.push(Theta::TInv, BigInt::from(rng.gen_range(-c..=c)));
            depth += 1;
            opened += 1;
        } else {
            w.push(Theta::T, BigInt::from(rng.gen_range(-c..=c)));
            depth -= 1;
        }
    }
    britton_reduce(&w, params)
}

/// A random slope `β₀ T ⋯ T β_ℓ` with `|β₀| < 2q` and `|βᵢ| < q`.
pub fn random_slope(rng: &mut impl Rng, params: &GroupParams, ell: usize) -> Slope {
    let q = params.q() as i64;
    let mut coeffs = vec![rng.gen_range(-(2 * q - 1)..=2 * q - 1)];
    coeffs.extend((0..ell).map(|_| rng.gen_range(-(q - 1)..=q - 1)));
    Slope::new(coeffs).expect("non-empty")
}

/// A valley with `sinks` sinks: that many nested arc stacks of depth `depth`
/// side by side. Coefficients are chosen so no stable letters cancel when
/// `p > 1` divides `q`.
pub fn valley_family_member(params: &GroupParams, sinks: usize, depth: usize) -> AltWord {
    let q = params.q() as i64;
    // β is not a multiple of q, so no T β t pinches; α + β = 3q + 1 is not a
    // multiple of p, so neighbouring sinks stay apart.
    let beta = BigInt::from(if q > 1 { q - 1 } else { 1 });
    let alpha = BigInt::from(2 * q + 2);
    let mut w = AltWord::identity();
    for _ in 0..sinks {
        for _ in 0..depth {
            w.add_last(&alpha);
            w.push_theta(Theta::TInv);
        }
        w.add_last(&beta);
        for _ in 0..depth {
            w.push(Theta::T, beta.clone());
        }
    }
    let reduced = britton_reduce(&w, params);
    debug_assert_eq!(reduced.k(), w.k());
    reduced
}
