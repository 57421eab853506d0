//! Brute-force ground truth from the Cayley graph.
//!
//! A ball of radius `L` is enumerated breadth-first, extending words in
//! length-lexicographical order and keying them by canonical form. The first
//! word that reaches an element is its llnf, and its length is the geodesic
//! length.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use num_bigint::BigInt;

use crate::britton::britton_reduce;
use crate::canonical::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::params::GroupParams;
use crate::pnf::cmp_peak_parts;
use crate::word::{parse_alt, parse_word, AltWord, Letter, RawWord, Theta};

/// Default cap on `4^L`, the number of words a ball of radius `L` may touch.
pub const DEFAULT_WORD_LIMIT: u128 = 100_000_000;

/// All elements within distance `radius` of the identity, with their
/// geodesic length and llnf.
#[derive(Debug, Clone)]
pub struct BallIndex {
    params: GroupParams,
    radius: usize,
    map: HashMap<CanonicalForm, usize>,
    entries: Vec<(CanonicalForm, RawWord)>,
}

impl BallIndex {
    pub fn build(params: &GroupParams, radius: usize) -> Result<Self> {
        Self::build_with_limit(params, radius, DEFAULT_WORD_LIMIT)
    }

    pub fn build_with_limit(params: &GroupParams, radius: usize, limit: u128) -> Result<Self> {
        let words = 4u128.checked_pow(radius as u32).unwrap_or(u128::MAX);
        if words > limit {
            return Err(Error::LimitExceeded(format!(
                "a ball of radius {radius} spans 4^{radius} words, above the limit {limit}"
            )));
        }
        let mut index = BallIndex {
            params: *params,
            radius,
            map: HashMap::new(),
            entries: Vec::new(),
        };
        index.insert(
            canonical_form(&AltWord::identity(), params),
            RawWord::empty(),
        );
        let mut frontier = 0..1;
        for _ in 0..radius {
            let start = index.entries.len();
            for i in frontier {
                for l in Letter::ALL {
                    let (key, word) = &index.entries[i];
                    let mut ext = key.word().clone();
                    match l {
                        Letter::T => ext.push(Theta::T, BigInt::ZERO),
                        Letter::TInv => ext.push(Theta::TInv, BigInt::ZERO),
                        Letter::A => ext.add_last(&BigInt::from(1)),
                        Letter::AInv => ext.add_last(&BigInt::from(-1)),
                    }
                    let next_key = canonical_form(&ext, params);
                    if !index.map.contains_key(&next_key) {
                        let mut w = word.clone();
                        w.push(l);
                        index.insert(next_key, w);
                    }
                }
            }
            frontier = start..index.entries.len();
        }
        Ok(index)
    }

    fn insert(&mut self, key: CanonicalForm, word: RawWord) {
        self.map.insert(key.clone(), self.entries.len());
        self.entries.push((key, word));
    }

    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in the order they were found, which is llnf order.
    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalForm, &RawWord)> {
        self.entries.iter().map(|(k, w)| (k, w))
    }

    pub fn get(&self, key: &CanonicalForm) -> Option<&RawWord> {
        self.map.get(key).map(|&i| &self.entries[i].1)
    }

    pub fn llnf(&self, w: &AltWord) -> Result<&RawWord> {
        self.get(&canonical_form(w, &self.params))
            .ok_or(Error::OutOfBall {
                radius: self.radius,
            })
    }

    pub fn geolen(&self, w: &AltWord) -> Result<u64> {
        self.llnf(w).map(|x| x.len() as u64)
    }

    /// One `canonical<TAB>length<TAB>llnf` line per element.
    pub fn export(&self, mut out: impl Write) -> std::io::Result<()> {
        for (key, word) in &self.entries {
            writeln!(out, "{}\t{}\t{}", key, word.len(), word)?;
        }
        Ok(())
    }

    /// Read a ball written by [`BallIndex::export`]. The radius is taken as
    /// the largest length present.
    pub fn import(params: &GroupParams, input: impl BufRead) -> Result<Self> {
        let mut index = BallIndex {
            params: *params,
            radius: 0,
            map: HashMap::new(),
            entries: Vec::new(),
        };
        for (n, line) in input.lines().enumerate() {
            let line = line.map_err(|e| Error::Precondition(format!("ball file: {e}")))?;
            if line.is_empty() {
                continue;
            }
            let bad = |what: &str| Error::Precondition(format!("ball file line {}: {what}", n + 1));
            let mut cols = line.split('\t');
            let (Some(key), Some(len), Some(word), None) =
                (cols.next(), cols.next(), cols.next(), cols.next())
            else {
                return Err(bad("expected three tab-separated columns"));
            };
            let key = canonical_form(&parse_alt(key)?, params);
            let len: usize = len.parse().map_err(|_| bad("length is not a number"))?;
            let word = parse_word(word)?;
            if word.len() != len {
                return Err(bad("length does not match the word"));
            }
            index.radius = index.radius.max(len);
            index.insert(key, word);
        }
        Ok(index)
    }
}

/// Britton peak normal form of `w` by exhaustive search.
///
/// Every Britton-reduced word equal to `w` has the t-sequence of `w`'s
/// reduction, so only coefficients are enumerated: all positions except the
/// peak range over `[-coeff_max, coeff_max]`, and the peak coefficient is
/// solved for. Norms are looked up in `index`, which must contain `w`.
pub fn oracle_britton_pnf(
    w: &AltWord,
    index: &BallIndex,
    k_max: usize,
    coeff_max: u64,
) -> Result<AltWord> {
    let params = *index.params();
    let reduced = britton_reduce(w, &params);
    let k = reduced.k();
    if k > k_max {
        return Err(Error::LimitExceeded(format!(
            "{k} stable letters, above {k_max}"
        )));
    }
    let budget = index.geolen(w)?;
    let theta = reduced.theta().to_vec();
    let peak = reduced.peak_position();
    let c = coeff_max as i64;
    let small_norms: HashMap<i64, u64> = (-c..=c)
        .filter_map(|a| index.geolen(&AltWord::from_int(a)).ok().map(|n| (a, n)))
        .collect();

    let others: Vec<usize> = (0..=k).filter(|&i| i != peak).collect();
    let mut coeffs = vec![BigInt::ZERO; k + 1];
    let mut best: Option<(u64, AltWord)> = None;

    // DFS over the non-peak slots, pruned by the norm budget.
    fn assign(depth: usize, spent: u64, ctx: &mut Search<'_>) {
        if depth == ctx.others.len() {
            ctx.finish(spent);
            return;
        }
        let slot = ctx.others[depth];
        for a in -ctx.c..=ctx.c {
            let Some(&n) = ctx.small_norms.get(&a) else {
                continue;
            };
            if spent + n > ctx.budget {
                continue;
            }
            ctx.coeffs[slot] = BigInt::from(a);
            assign(depth + 1, spent + n, ctx);
        }
    }

    struct Search<'a> {
        others: &'a [usize],
        small_norms: &'a HashMap<i64, u64>,
        coeffs: &'a mut Vec<BigInt>,
        c: i64,
        budget: u64,
        best: &'a mut Option<(u64, AltWord)>,
        theta: &'a [Theta],
        peak: usize,
        w: &'a AltWord,
        index: &'a BallIndex,
        params: GroupParams,
    }

    impl Search<'_> {
        fn finish(&mut self, spent: u64) {
            let mut left = self.coeffs[..self.peak].to_vec();
            left.push(BigInt::ZERO);
            let u1 =
                AltWord::from_parts(left, self.theta[..self.peak].to_vec()).expect("lengths match");
            let mut right = vec![BigInt::ZERO];
            right.extend_from_slice(&self.coeffs[self.peak + 1..]);
            let u2 = AltWord::from_parts(right, self.theta[self.peak..].to_vec())
                .expect("lengths match");
            let middle = britton_reduce(
                &u1.involute().concat(self.w).concat(&u2.involute()),
                &self.params,
            );
            let Some(x) = middle.as_integer() else { return };
            let Ok(nx) = self.index.geolen(&middle) else {
                return;
            };
            if spent + nx > self.budget {
                return;
            }
            let norm = spent + nx + self.theta.len() as u64;
            let mut all = self.coeffs.clone();
            all[self.peak] = x.clone();
            let cand = AltWord::from_parts(all, self.theta.to_vec()).expect("lengths match");
            if !crate::britton::is_britton_reduced(&cand, &self.params) {
                return;
            }
            let better = match self.best {
                None => true,
                Some((bn, bw)) => {
                    norm < *bn
                        || (norm == *bn
                            && cmp_peak_parts(cand.alpha(), bw.alpha(), self.peak).is_lt())
                }
            };
            if better {
                *self.best = Some((norm, cand));
            }
        }
    }

    let mut ctx = Search {
        others: &others,
        small_norms: &small_norms,
        coeffs: &mut coeffs,
        c,
        budget: budget.saturating_sub(k as u64),
        best: &mut best,
        theta: &theta,
        peak,
        w: &reduced,
        index,
        params,
    };
    assign(0, 0, &mut ctx);
    best.map(|(_, w)| w).ok_or_else(|| {
        Error::LimitExceeded(format!(
            "no equivalent word with coefficients within {coeff_max}"
        ))
    })
}
