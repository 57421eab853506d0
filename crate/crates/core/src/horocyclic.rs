//! Length-lexicographical normal forms and norms of integers `a^α`.
//!
//! The pipeline is: greedy extraction of a prefix `t^ℓ` and a short slope
//! `β₀ T β₁ ⋯ T β_ℓ`, then a dynamic program over the carry window
//! `R = [-r, r]` that rewrites the slope into its llnf. Two variants of the
//! DP are provided: a baseline that keeps whole words per row, and a
//! constant-memory variant that keeps short suffixes plus the relative order
//! of the hidden prefixes and emits a back-referenced matrix.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::params::GroupParams;
use crate::word::{AltWord, Letter, RawWord, Theta};

/// A Britton-reduced word `β₀ T β₁ ⋯ T β_ℓ` with small coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Slope {
    coeffs: Vec<i64>,
}

impl Slope {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Precondition(
                "a slope has at least one coefficient".into(),
            ));
        }
        Ok(Slope { coeffs })
    }

    /// Accept an alternating word whose stable letters are all `T` and whose
    /// coefficients fit in `i64`.
    pub fn from_alt(w: &AltWord) -> Result<Self> {
        if w.theta().iter().any(|&t| t != Theta::TInv) {
            return Err(Error::Precondition("a slope uses only the letter T".into()));
        }
        let coeffs = w
            .alpha()
            .iter()
            .map(|a| {
                a.to_i64()
                    .ok_or_else(|| Error::Precondition("slope coefficient too large".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Slope::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Number of `T` letters.
    pub fn ell(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn to_alt(&self) -> AltWord {
        AltWord::from_i64s(&self.coeffs, &vec![Theta::TInv; self.ell()])
    }

    /// `|βᵢ| < q` for `i > 0` and `|β₀| < 2q`.
    pub fn check_bounds(&self, params: &GroupParams) -> Result<()> {
        let q = params.q_i64();
        let ok = self.coeffs[0].abs() < 2 * q && self.coeffs[1..].iter().all(|b| b.abs() < q);
        if ok {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "slope {} needs |β0| < {} and |βi| < {}",
                self.to_alt(),
                2 * q,
                q
            )))
        }
    }
}

/// Split `α` as `t^ℓ · slope`: while `|α| >= 2q`, write `α = qμ + β` with the
/// remainder on the sign side of `α` and continue with `pμ`.
pub fn greedy_slope(alpha: &BigInt, params: &GroupParams) -> (usize, Slope) {
    let neg = alpha.sign() == Sign::Minus;
    let p = BigInt::from(params.p());
    let q = BigInt::from(params.q());
    let two_q = BigInt::from(2 * params.q());
    let mut a = alpha.abs();
    let mut rems = Vec::new();
    while a >= two_q {
        let (mu, beta) = a.div_rem(&q);
        rems.push(beta.to_i64().expect("remainder below q"));
        a = mu * &p;
    }
    let mut coeffs = Vec::with_capacity(rems.len() + 1);
    coeffs.push(a.to_i64().expect("below 2q"));
    coeffs.extend(rems.iter().rev());
    if neg {
        coeffs.iter_mut().for_each(|c| *c = -*c);
    }
    (rems.len(), Slope { coeffs })
}

fn unary(n: i64) -> impl Iterator<Item = Letter> {
    let l = if n < 0 { Letter::AInv } else { Letter::A };
    std::iter::repeat_n(l, n.unsigned_abs() as usize)
}

fn cmp_letters(a: &[Letter], b: &[Letter]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Exhaustive search for llnf of small integers among unary words and words
/// `t X T a^α` with `X` itself such a word. Every geodesic of an integer
/// either is unary or can be rearranged to start with `t`, so this covers
/// the ll-first word.
struct SmallSearch {
    p: i64,
    q: i64,
    memo: HashMap<(i64, i64), Option<Vec<Letter>>>,
}

impl SmallSearch {
    fn new(params: &GroupParams) -> Self {
        SmallSearch {
            p: params.p_i64(),
            q: params.q_i64(),
            memo: HashMap::new(),
        }
    }

    /// The ll-first word for `x` among those of length at most `budget`.
    fn best(&mut self, x: i64, budget: i64) -> Option<Vec<Letter>> {
        if budget < 0 {
            return None;
        }
        if let Some(hit) = self.memo.get(&(x, budget)) {
            return hit.clone();
        }
        let mut best: Option<Vec<Letter>> = None;
        if x.abs() <= budget {
            best = Some(unary(x).collect());
        }
        let inner_budget = budget - 2;
        for alpha in -inner_budget..=inner_budget {
            if (x - alpha).rem_euclid(self.q) != 0 {
                continue;
            }
            let y = (x - alpha) / self.q * self.p;
            if y == 0 {
                // t T is never part of a shortest word.
                continue;
            }
            if let Some(inner) = self.best(y, inner_budget - alpha.abs()) {
                let mut cand = Vec::with_capacity(inner.len() + 2 + alpha.unsigned_abs() as usize);
                cand.push(Letter::T);
                cand.extend_from_slice(&inner);
                cand.push(Letter::TInv);
                cand.extend(unary(alpha));
                if best
                    .as_ref()
                    .is_none_or(|b| cmp_letters(&cand, b) == Ordering::Less)
                {
                    best = Some(cand);
                }
            }
        }
        self.memo.insert((x, budget), best.clone());
        best
    }

    fn llnf(&mut self, x: i64) -> Vec<Letter> {
        self.best(x, x.abs())
            .expect("unary word is always within budget")
    }
}

/// llnf of a small integer by exhaustive search; intended for `|x|` up to a few dozen.
pub fn small_llnf(x: i64, params: &GroupParams) -> RawWord {
    RawWord::new(SmallSearch::new(params).llnf(x))
}

/// llnf(ρ) for every `|ρ| <= r + q`.
#[derive(Debug, Clone)]
pub struct BaseTable {
    bound: i64,
    words: Vec<Vec<Letter>>,
}

impl BaseTable {
    pub fn build(params: &GroupParams) -> Self {
        let bound = (params.r_llnf() + params.q()) as i64;
        let mut search = SmallSearch::new(params);
        let words = (-bound..=bound).map(|x| search.llnf(x)).collect();
        BaseTable { bound, words }
    }

    /// Largest `|ρ|` covered.
    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn get(&self, rho: i64) -> Option<&[Letter]> {
        if rho.abs() > self.bound {
            return None;
        }
        Some(&self.words[(rho + self.bound) as usize])
    }

    pub fn word(&self, rho: i64) -> Option<RawWord> {
        self.get(rho).map(|l| RawWord::new(l.to_vec()))
    }
}

/// One cell of the optimized DP output: the letters cut off in this round and
/// the row of the previous column the minimum came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpCell {
    pub fragment: Vec<Letter>,
    pub back: i64,
}

/// The matrix emitted by the constant-memory slope DP, rows `ρ ∈ [-r, r]` and
/// columns `i = 1..=ℓ`.
#[derive(Debug, Clone)]
pub struct DpMatrix {
    r: i64,
    columns: Vec<Vec<DpCell>>,
    last_row: i64,
}

impl DpMatrix {
    pub fn r(&self) -> i64 {
        self.r
    }

    /// Number of columns `ℓ`.
    pub fn width(&self) -> usize {
        self.columns.len()
    }

    /// Cell `(ρ, i)` with `1 <= i <= ℓ`.
    pub fn cell(&self, rho: i64, i: usize) -> &DpCell {
        &self.columns[i - 1][(rho + self.r) as usize]
    }

    /// Follow back-references from `(ρ, ℓ)` and concatenate the fragments.
    pub fn reconstruct(&self, rho: i64) -> RawWord {
        let mut parts = Vec::with_capacity(self.columns.len());
        let mut row = rho;
        for col in self.columns.iter().rev() {
            let cell = &col[(row + self.r) as usize];
            parts.push(&cell.fragment);
            row = cell.back;
        }
        let mut out = Vec::new();
        for frag in parts.into_iter().rev() {
            out.extend_from_slice(frag);
        }
        RawWord::new(out)
    }

    /// The llnf of the slope the matrix was built for.
    pub fn result(&self) -> RawWord {
        self.reconstruct(self.last_row)
    }

    /// Tab-separated rendering: the first column shows fragments only, later
    /// columns show `fragment, back`.
    pub fn render(&self) -> String {
        let mut s = String::from("ρ");
        for i in 1..=self.width() {
            let _ = write!(s, "\ti = {i}");
        }
        s.push('\n');
        for rho in -self.r..=self.r {
            let _ = write!(s, "{rho}");
            for i in 1..=self.width() {
                let cell = self.cell(rho, i);
                let frag = RawWord::new(cell.fragment.clone()).notation();
                if i == 1 {
                    let _ = write!(s, "\t{frag}");
                } else {
                    let _ = write!(s, "\t{frag}, {}", cell.back);
                }
            }
            s.push('\n');
        }
        s
    }
}

/// Candidate transitions into row `ρ` of the next column: `(ρ', γ)` with
/// `ρ = μq + γ`, `|γ| < q`, `ρ' = β + μp`.
fn transitions(rho: i64, beta: i64, p: i64, q: i64) -> impl Iterator<Item = (i64, i64)> {
    let g0 = rho.rem_euclid(q);
    [g0, g0 - q]
        .into_iter()
        .filter(move |&g| g.abs() < q)
        .map(move |g| (beta + (rho - g) / q * p, g))
}

impl Group {
    fn slope_window(&self, slope: &Slope) -> Result<i64> {
        slope.check_bounds(self.params())?;
        Ok(self.params().r_llnf() as i64)
    }

    /// Baseline slope DP. Column `i` maps `ρ` to llnf(β₀ T ⋯ β_{i-1} T ρ);
    /// column 0 holds llnf(ρ) over the base-table range, later columns cover `[-r, r]`.
    pub fn slope_dp_baseline(&self, slope: &Slope) -> Result<Vec<BTreeMap<i64, RawWord>>> {
        let r = self.slope_window(slope)?;
        let (p, q) = (self.params().p_i64(), self.params().q_i64());
        let base = self.base_table();
        let mut cols: Vec<BTreeMap<i64, RawWord>> = Vec::with_capacity(slope.ell() + 1);
        cols.push(
            (-base.bound()..=base.bound())
                .map(|x| (x, base.word(x).expect("in range")))
                .collect(),
        );
        for i in 0..slope.ell() {
            let beta = slope.coeffs()[i];
            let prev = &cols[i];
            let mut next = BTreeMap::new();
            for rho in -r..=r {
                let mut best: Option<Vec<Letter>> = None;
                for (from, g) in transitions(rho, beta, p, q) {
                    self.tick(1);
                    let Some(w) = prev.get(&from) else { continue };
                    let mut cand = w.letters().to_vec();
                    cand.push(Letter::TInv);
                    cand.extend(unary(g));
                    if best
                        .as_ref()
                        .is_none_or(|b| cmp_letters(&cand, b) == Ordering::Less)
                    {
                        best = Some(cand);
                    }
                }
                let best = best.expect("carry window keeps a predecessor in range");
                next.insert(rho, RawWord::new(best));
            }
            cols.push(next);
        }
        Ok(cols)
    }

    /// llnf of a slope via the baseline DP.
    pub fn slope_llnf_baseline(&self, slope: &Slope) -> Result<RawWord> {
        let cols = self.slope_dp_baseline(slope)?;
        let last = *slope.coeffs().last().expect("non-empty");
        Ok(cols.last().expect("column 0 exists")[&last].clone())
    }

    /// Constant-memory slope DP emitting the back-referenced matrix.
    ///
    /// Requires `ℓ >= 1`; for `ℓ = 0` the answer is a base-table entry.
    pub fn slope_dp_matrix(&self, slope: &Slope) -> Result<DpMatrix> {
        let r = self.slope_window(slope)?;
        if slope.ell() == 0 {
            return Err(Error::Precondition(
                "the matrix needs a slope with at least one T".into(),
            ));
        }
        let (p, q) = (self.params().p_i64(), self.params().q_i64());
        let base = self.base_table();
        // Column 0: empty hidden prefixes, whole words as suffixes.
        let mut lo = -base.bound();
        let mut suffix: Vec<Vec<Letter>> = (-base.bound()..=base.bound())
            .map(|x| base.get(x).expect("in range").to_vec())
            .collect();
        let mut rank: Vec<u32> = vec![0; suffix.len()];
        let width = (2 * r + 1) as usize;
        let ell = slope.ell();
        let mut columns = Vec::with_capacity(ell);
        for i in 0..ell {
            let beta = slope.coeffs()[i];
            let mut chosen: Vec<(i64, Vec<Letter>)> = Vec::with_capacity(width);
            for rho in -r..=r {
                let mut best: Option<(i64, usize, Vec<Letter>)> = None;
                for (from, g) in transitions(rho, beta, p, q) {
                    self.tick(1);
                    let idx = from - lo;
                    if idx < 0 || idx as usize >= suffix.len() {
                        continue;
                    }
                    let idx = idx as usize;
                    let mut tail = suffix[idx].clone();
                    tail.push(Letter::TInv);
                    tail.extend(unary(g));
                    let better = match &best {
                        None => true,
                        Some((_, bidx, btail)) => {
                            tail.len()
                                .cmp(&btail.len())
                                .then(rank[idx].cmp(&rank[*bidx]))
                                .then_with(|| tail.cmp(btail))
                                == Ordering::Less
                        }
                    };
                    if better {
                        best = Some((from, idx, tail));
                    }
                }
                let (from, _, tail) = best.expect("carry window keeps a predecessor in range");
                chosen.push((from, tail));
            }
            let cut = chosen
                .iter()
                .map(|(_, t)| t.len())
                .min()
                .expect("window non-empty");
            let last = i + 1 == ell;
            let mut keys: Vec<(u32, &[Letter], usize)> = chosen
                .iter()
                .enumerate()
                .map(|(j, (from, t))| (rank[(*from - lo) as usize], &t[..cut], j))
                .collect();
            keys.sort();
            let mut new_rank = vec![0u32; width];
            let mut cur = 0u32;
            for n in 0..keys.len() {
                if n > 0 && (keys[n].0, keys[n].1) != (keys[n - 1].0, keys[n - 1].1) {
                    cur += 1;
                }
                new_rank[keys[n].2] = cur;
            }
            let mut col = Vec::with_capacity(width);
            let mut new_suffix = Vec::with_capacity(width);
            for (from, tail) in chosen {
                let (head, rest) = tail.split_at(cut);
                let fragment = if last { tail.clone() } else { head.to_vec() };
                col.push(DpCell {
                    fragment,
                    back: from,
                });
                new_suffix.push(rest.to_vec());
            }
            columns.push(col);
            suffix = new_suffix;
            rank = new_rank;
            lo = -r;
        }
        Ok(DpMatrix {
            r,
            columns,
            last_row: *slope.coeffs().last().expect("non-empty"),
        })
    }

    /// llnf of a slope satisfying the coefficient bounds.
    pub fn slope_llnf(&self, slope: &Slope) -> Result<RawWord> {
        if slope.ell() == 0 {
            slope.check_bounds(self.params())?;
            return Ok(self
                .base_table()
                .word(slope.coeffs()[0])
                .expect("|β0| < 2q is in range"));
        }
        Ok(self.slope_dp_matrix(slope)?.result())
    }

    /// Length of llnf of a slope, by the DP on lengths alone.
    fn slope_norm(&self, slope: &Slope) -> u64 {
        let r = self.params().r_llnf() as i64;
        let (p, q) = (self.params().p_i64(), self.params().q_i64());
        let base = self.base_table();
        if slope.ell() == 0 {
            return base.get(slope.coeffs()[0]).expect("in range").len() as u64;
        }
        let mut lo = -base.bound();
        let mut lens: Vec<u64> = (-base.bound()..=base.bound())
            .map(|x| base.get(x).expect("in range").len() as u64)
            .collect();
        for &beta in &slope.coeffs()[..slope.ell()] {
            let mut next = Vec::with_capacity((2 * r + 1) as usize);
            for rho in -r..=r {
                let mut best = u64::MAX;
                for (from, g) in transitions(rho, beta, p, q) {
                    let idx = from - lo;
                    if idx < 0 || idx as usize >= lens.len() {
                        continue;
                    }
                    best = best.min(lens[idx as usize] + 1 + g.unsigned_abs());
                }
                next.push(best);
            }
            self.tick(next.len() as u64 * 2);
            lens = next;
            lo = -r;
        }
        lens[(*slope.coeffs().last().expect("non-empty") + r) as usize]
    }

    /// llnf of `a^α`: `t^ℓ` followed by the llnf of the greedy slope.
    pub fn int_llnf(&self, alpha: &BigInt) -> RawWord {
        let (ell, slope) = greedy_slope(alpha, self.params());
        self.tick(ell as u64 + 1);
        let tail = self
            .slope_llnf(&slope)
            .expect("greedy slopes satisfy the bounds");
        let mut out = Vec::with_capacity(ell + tail.len());
        out.extend(std::iter::repeat_n(Letter::T, ell));
        out.extend_from_slice(tail.letters());
        RawWord::new(out)
    }

    /// Geodesic length `∥α∥` of `a^α`, memoized.
    pub fn int_norm(&self, alpha: &BigInt) -> u64 {
        self.tick(1);
        let base = self.base_table();
        if let Some(small) = alpha.to_i64().and_then(|a| base.get(a)) {
            return small.len() as u64;
        }
        if let Some(hit) = self.cached_norm(alpha) {
            return hit;
        }
        let (ell, slope) = greedy_slope(alpha, self.params());
        self.tick(ell as u64 + 1);
        let n = ell as u64 + self.slope_norm(&slope);
        self.store_norm(alpha.clone(), n);
        n
    }

    /// `∥u∥ = k + Σ ∥αᵢ∥`.
    pub fn norm(&self, u: &AltWord) -> u64 {
        u.k() as u64 + u.alpha().iter().map(|a| self.int_norm(a)).sum::<u64>()
    }

    /// llnf of a horocyclic word.
    pub fn llnf_horocyclic(&self, w: &AltWord) -> Result<RawWord> {
        let reduced = crate::britton::britton_reduce(w, self.params());
        match reduced.as_integer() {
            Some(n) => Ok(self.int_llnf(n)),
            None => Err(Error::NotHorocyclic {
                stable_letters: reduced.k(),
            }),
        }
    }
}

/// Check the shape `t^k β T α₁ ⋯ T α_k` with `|αᵢ| < q`, `α_k ≡ α (mod q)`,
/// `|β| < 2q`, and `p | β` when `k > 0`, for a claimed llnf of `a^α`.
pub fn llnf_shape_holds(word: &RawWord, alpha: &BigInt, params: &GroupParams) -> bool {
    let ls = word.letters();
    let k = ls.iter().take_while(|&&l| l == Letter::T).count();
    let rest = RawWord::new(ls[k..].to_vec()).to_alt();
    if rest.k() != k || rest.theta().iter().any(|&t| t != Theta::TInv) {
        return false;
    }
    let q = BigInt::from(params.q());
    let p = BigInt::from(params.p());
    let beta = &rest.alpha()[0];
    if beta.abs() >= &q * 2 {
        return false;
    }
    if k == 0 {
        return beta == alpha;
    }
    let tail = &rest.alpha()[1..];
    beta.is_multiple_of(&p)
        && tail.iter().all(|a| a.abs() < q)
        && (tail[k - 1].clone() - alpha).is_multiple_of(&q)
}
