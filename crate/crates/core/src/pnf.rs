//! Britton peak normal forms.
//!
//! Among all Britton-reduced words equal to a given element and of minimal
//! norm, the peak normal form takes the one whose part before the peak is
//! least in the symbol order, and then whose reversed, inverted part after
//! the peak is least. All candidates share one t-sequence, so both parts are
//! compared coefficient by coefficient.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::britton::{britton_reduce, Decomposition};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::word::{cmp_delta_seq, AltWord, RawWord, Theta};

type PeelKey = (u32, (u64, bool), u32);

/// A Britton-reduced word in peak normal form, with its peak position and norm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrittonPnf {
    word: AltWord,
    peak: usize,
    norm: u64,
}

impl BrittonPnf {
    pub(crate) fn new(word: AltWord, peak: usize, norm: u64) -> Self {
        BrittonPnf { word, peak, norm }
    }

    pub(crate) fn integer(n: BigInt, g: &Group) -> Self {
        let norm = g.int_norm(&n);
        BrittonPnf::new(AltWord::from_int(n), 0, norm)
    }

    pub fn word(&self) -> &AltWord {
        &self.word
    }

    pub fn into_word(self) -> AltWord {
        self.word
    }

    /// Index of the peak coefficient.
    pub fn peak(&self) -> usize {
        self.peak
    }

    /// Norm of the word, which equals the geodesic length of the element.
    pub fn norm(&self) -> u64 {
        self.norm
    }

    /// Coefficients before the peak.
    pub fn u1(&self) -> &[BigInt] {
        &self.word.alpha()[..self.peak]
    }

    pub fn peak_coeff(&self) -> &BigInt {
        &self.word.alpha()[self.peak]
    }

    /// Coefficients after the peak.
    pub fn u2(&self) -> &[BigInt] {
        &self.word.alpha()[self.peak + 1..]
    }

    /// Replace each coefficient by its llnf.
    pub fn flatten(&self, g: &Group) -> RawWord {
        flatten_pnf(&self.word, g)
    }
}

/// The full result for one input word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullPnf {
    pub britton: BrittonPnf,
    pub flat: RawWord,
    pub geodesic_length: u64,
}

/// `llnf(α₀) θ₁ llnf(α₁) ⋯ θₖ llnf(αₖ)`.
pub fn flatten_pnf(word: &AltWord, g: &Group) -> RawWord {
    let mut out = Vec::new();
    for (i, a) in word.alpha().iter().enumerate() {
        if i > 0 {
            out.push(word.theta()[i - 1].letter());
        }
        out.extend_from_slice(g.int_llnf(a).letters());
    }
    RawWord::new(out)
}

/// Order two Britton-reduced words with a common t-sequence and peak: norm,
/// then the coefficients before the peak, then the negated coefficients
/// after the peak read from the right.
pub fn cmp_pnf(a: &AltWord, b: &AltWord, peak: usize, g: &Group) -> Ordering {
    g.norm(a)
        .cmp(&g.norm(b))
        .then_with(|| cmp_peak_parts(a.alpha(), b.alpha(), peak))
}

/// The symbol-order part of [`cmp_pnf`], without norms.
pub fn cmp_peak_parts(a: &[BigInt], b: &[BigInt], peak: usize) -> Ordering {
    cmp_delta_seq(&a[..peak], &b[..peak])
        .then_with(|| cmp_reversed_negated(&a[peak + 1..], &b[peak + 1..]))
}

fn cmp_reversed_negated(a: &[BigInt], b: &[BigInt]) -> Ordering {
    let na: Vec<BigInt> = a.iter().rev().map(|x| -x).collect();
    let nb: Vec<BigInt> = b.iter().rev().map(|x| -x).collect();
    cmp_delta_seq(&na, &nb)
}

/// Key of a small integer in the symbol order.
pub(crate) fn delta_key(n: i64) -> (u64, bool) {
    (n.unsigned_abs(), n < 0)
}

/// Dense ranks of `keys`, equal keys sharing a rank.
pub(crate) fn dense_ranks<K: Ord>(keys: &[K]) -> Vec<u32> {
    let mut idx: Vec<usize> = (0..keys.len()).collect();
    idx.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut out = vec![0u32; keys.len()];
    let mut cur = 0u32;
    for n in 0..idx.len() {
        if n > 0 && keys[idx[n]] != keys[idx[n - 1]] {
            cur += 1;
        }
        out[idx[n]] = cur;
    }
    out
}

/// Ranks of core results: before-peak parts and reversed after-peak parts, separately.
fn core_ranks(results: &[BrittonPnf]) -> (Vec<u32>, Vec<u32>) {
    let n = results.len();
    let mut order: Vec<usize> = (0..n).collect();
    let rank_by = |order: &mut Vec<usize>, cmp: &dyn Fn(usize, usize) -> Ordering| {
        order.sort_by(|&a, &b| cmp(a, b));
        let mut out = vec![0u32; n];
        let mut cur = 0u32;
        for k in 0..order.len() {
            if k > 0 && cmp(order[k - 1], order[k]) != Ordering::Equal {
                cur += 1;
            }
            out[order[k]] = cur;
        }
        out
    };
    let u1 = rank_by(&mut order, &|a, b| {
        cmp_delta_seq(results[a].u1(), results[b].u1())
    });
    let u2 = rank_by(&mut order, &|a, b| {
        cmp_reversed_negated(results[a].u2(), results[b].u2())
    });
    (u1, u2)
}

#[derive(Clone, Copy)]
enum Peel {
    Left,
    Right,
}

#[derive(Clone, Copy)]
struct Choice {
    gamma: i64,
    next: usize,
}

#[derive(Clone, Copy)]
struct Entry {
    norm: u64,
    u1: u32,
    u2: u32,
    choice: Option<Choice>,
}

fn small(n: &BigInt) -> i64 {
    n.to_i64()
        .expect("flank coefficients are normalized below q")
}

impl Group {
    /// Candidate `(γ, carry)` pairs with `x = μq + γ`, `|γ| < q`, carry `μp`.
    fn flank_steps(&self, x: i64) -> impl Iterator<Item = (i64, i64)> {
        let (p, q) = (self.params().p_i64(), self.params().q_i64());
        let g0 = x.rem_euclid(q);
        [g0, g0 - q]
            .into_iter()
            .filter(move |g| g.abs() < q)
            .map(move |g| (g, (x - g) / q * p))
    }

    /// Peak normal form of a Britton-reduced word `α₁t ⋯ αₖt D Tβ₁ ⋯ Tβₘ`,
    /// given a solver for words `ρ D δ`.
    ///
    /// The flanks are first normalized to coefficients below `q` in absolute
    /// value, pushing carries into `D`. Then every admissible rewriting of
    /// the flanks is explored as a DP over carry pairs, the left flank peeled
    /// outside-in first and the right flank after it, and the core is solved
    /// once per reachable carry pair.
    pub fn peak_wrap_pnf(
        &self,
        u: &AltWord,
        core_solver: &dyn Fn(&AltWord) -> Result<BrittonPnf>,
    ) -> Result<BrittonPnf> {
        let Decomposition {
            alphas,
            core,
            betas,
        } = Decomposition::of_reduced(u);
        if alphas.is_empty() && betas.is_empty() {
            return core_solver(&core);
        }
        let p = BigInt::from(self.params().p());
        let q = BigInt::from(self.params().q());
        let (k, m) = (alphas.len(), betas.len());

        let mut left = Vec::with_capacity(k);
        let mut carry = BigInt::ZERO;
        for a in &alphas {
            let (mu, rem) = (a + &carry).div_rem(&q);
            left.push(small(&rem));
            carry = mu * &p;
        }
        let mut core = core;
        core.add_first(&carry);
        let mut right = vec![0i64; m];
        let mut carry = BigInt::ZERO;
        for j in (0..m).rev() {
            let (mu, rem) = (&betas[j] + &carry).div_rem(&q);
            right[j] = small(&rem);
            carry = mu * &p;
        }
        core.add_last(&carry);
        self.tick((k + m) as u64);

        let peels: Vec<Peel> = std::iter::repeat_n(Peel::Left, k)
            .chain(std::iter::repeat_n(Peel::Right, m))
            .collect();
        let next_left = |s: usize| if s + 1 < k { left[s + 1] } else { 0 };
        let next_right = |j: usize| if j > 0 { right[j - 1] } else { 0 };

        // Forward: reachable carry pairs per level.
        let start = (
            left.first().copied().unwrap_or(0),
            right.last().copied().unwrap_or(0),
        );
        let mut levels: Vec<Vec<(i64, i64)>> = vec![vec![start]];
        for (lvl, peel) in peels.iter().enumerate() {
            let mut seen: HashMap<(i64, i64), usize> = HashMap::new();
            let mut next_states = Vec::new();
            for &(x, y) in &levels[lvl] {
                let succ: Vec<(i64, i64)> = match peel {
                    Peel::Left => self
                        .flank_steps(x)
                        .map(|(_, c)| (next_left(lvl) + c, y))
                        .collect(),
                    Peel::Right => {
                        let j = m - 1 - (lvl - k);
                        self.flank_steps(y)
                            .map(|(_, c)| (x, next_right(j) + c))
                            .collect()
                    }
                };
                for s in succ {
                    seen.entry(s).or_insert_with(|| {
                        next_states.push(s);
                        next_states.len() - 1
                    });
                }
            }
            levels.push(next_states);
        }

        // Base: solve the core for every reachable pair.
        let bottom = levels.last().expect("at least one level");
        let mut cores = Vec::with_capacity(bottom.len());
        for &(x, y) in bottom {
            let mut w = core.clone();
            w.add_first(&BigInt::from(x));
            w.add_last(&BigInt::from(y));
            cores.push(core_solver(&w)?);
        }
        let (r1, r2) = core_ranks(&cores);
        let mut entries: Vec<Entry> = cores
            .iter()
            .enumerate()
            .map(|(i, c)| Entry {
                norm: c.norm(),
                u1: r1[i],
                u2: r2[i],
                choice: None,
            })
            .collect();
        let mut tables: Vec<Vec<Entry>> = vec![Vec::new(); levels.len()];

        // Backward: peel from the innermost flank letter outwards.
        for lvl in (0..peels.len()).rev() {
            let below: HashMap<(i64, i64), usize> = levels[lvl + 1]
                .iter()
                .enumerate()
                .map(|(i, &s)| (s, i))
                .collect();
            let mut cur: Vec<Entry> = Vec::with_capacity(levels[lvl].len());
            let mut keys: Vec<((u64, bool), u32)> = Vec::with_capacity(levels[lvl].len());
            for &(x, y) in &levels[lvl] {
                // Comparison key after the norm, and the key ranking the part this peel extends.
                let mut best: Option<(u64, PeelKey, Choice)> = None;
                let value = match peels[lvl] {
                    Peel::Left => x,
                    Peel::Right => y,
                };
                for (gamma, c) in self.flank_steps(value) {
                    self.tick(1);
                    let target = match peels[lvl] {
                        Peel::Left => (next_left(lvl) + c, y),
                        Peel::Right => (x, next_right(m - 1 - (lvl - k)) + c),
                    };
                    let next = below[&target];
                    let e = &entries[next];
                    let norm = e.norm + 1 + self.int_norm(&BigInt::from(gamma));
                    // Left peels extend the part before the peak at its front; right
                    // peels extend the reversed part after it at its front.
                    let key = match peels[lvl] {
                        Peel::Left => (0, delta_key(gamma), e.u1),
                        Peel::Right => (e.u1, delta_key(-gamma), e.u2),
                    };
                    let tail = match peels[lvl] {
                        Peel::Left => e.u2,
                        Peel::Right => 0,
                    };
                    let better = match &best {
                        None => true,
                        Some((bn, bk, bc)) => {
                            let bt = match peels[lvl] {
                                Peel::Left => entries[bc.next].u2,
                                Peel::Right => 0,
                            };
                            (norm, key, tail) < (*bn, *bk, bt)
                        }
                    };
                    if better {
                        best = Some((norm, key, Choice { gamma, next }));
                    }
                }
                let (norm, _, choice) = best.expect("two residues always give a step");
                let e = &entries[choice.next];
                keys.push(match peels[lvl] {
                    Peel::Left => (delta_key(choice.gamma), e.u1),
                    Peel::Right => (delta_key(-choice.gamma), e.u2),
                });
                cur.push(Entry {
                    norm,
                    u1: e.u1,
                    u2: e.u2,
                    choice: Some(choice),
                });
            }
            let ranks = dense_ranks(&keys);
            for (e, r) in cur.iter_mut().zip(ranks) {
                match peels[lvl] {
                    Peel::Left => e.u1 = r,
                    Peel::Right => e.u2 = r,
                }
            }
            tables[lvl + 1] = std::mem::replace(&mut entries, cur);
        }
        tables[0] = entries;

        // Reconstruct from the top.
        let mut idx = 0usize;
        let mut left_out = Vec::with_capacity(k);
        let mut right_out = Vec::with_capacity(m);
        for (lvl, peel) in peels.iter().enumerate() {
            let choice = tables[lvl][idx]
                .choice
                .expect("inner levels carry a choice");
            match peel {
                Peel::Left => left_out.push(choice.gamma),
                Peel::Right => right_out.push(choice.gamma),
            }
            idx = choice.next;
        }
        let core_pnf = &cores[idx];
        let mut word = AltWord::identity();
        for g in &left_out {
            word.add_last(&BigInt::from(*g));
            word.push_theta(Theta::T);
        }
        word.append(core_pnf.word());
        for g in right_out.iter().rev() {
            word.push(Theta::TInv, BigInt::from(*g));
        }
        Ok(BrittonPnf::new(
            word,
            k + core_pnf.peak(),
            tables[0][0].norm,
        ))
    }

    /// Peak normal form of a hill, in any `BS(p, q)`.
    pub fn hill_pnf(&self, u: &AltWord) -> Result<BrittonPnf> {
        let reduced = britton_reduce(u, self.params());
        if !Decomposition::of_reduced(&reduced).is_hill() {
            return Err(Error::NotAHill);
        }
        self.peak_wrap_pnf(&reduced, &|w: &AltWord| {
            let n = w.as_integer().expect("hill core is an integer").clone();
            Ok(BrittonPnf::integer(n, self))
        })
    }
}
