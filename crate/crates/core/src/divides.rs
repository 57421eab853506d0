//! The complete solution for `p | q`.
//!
//! When `p | q`, multiples of `p` commute with every valley. A valley is first
//! brought into standard shape `V γ`, then for every carry `ρ` in a small
//! range a best word `V_ρ` with `V ∼ V_ρ ρ` is computed bottom-up over the
//! valley's parse tree. Difficult words are reduced to valleys by padding
//! with stable letters and splitting at the peak.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::britton::{britton_reduce, residues_mod, Classification, Decomposition};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::params::GroupParams;
use crate::pnf::{delta_key, dense_ranks, BrittonPnf, FullPnf};
use crate::word::{AltWord, Theta};

/// Tie-break after the norm for an arc: (Δα', inner rank, Δβ').
type ArcKey = ((u64, bool), u32, (u64, bool));

fn require_divides(params: &GroupParams) -> Result<()> {
    if params.divides() {
        Ok(())
    } else {
        Err(Error::RequiresDivides {
            p: params.p(),
            q: params.q(),
        })
    }
}

fn is_valley(u: &AltWord) -> bool {
    u.height() == 0 && u.end_height() == 0
}

/// The image of `u` in `(Z/pZ) * {t, T}*`: coefficient residues of the Britton
/// reduction together with its t-sequence.
pub fn pi_residues(u: &AltWord, params: &GroupParams) -> Result<(Vec<u64>, Vec<Theta>)> {
    require_divides(params)?;
    let reduced = britton_reduce(u, params);
    Ok((residues_mod(&reduced, params.p()), reduced.theta().to_vec()))
}

/// A node of a valley parse tree. Children always have smaller indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValleyNode {
    /// The empty valley, a single zero coefficient.
    Zero,
    /// `α T U β t`.
    Arc {
        alpha: BigInt,
        inner: usize,
        beta: BigInt,
    },
    /// `U W`.
    Concat { left: usize, right: usize },
}

/// Parse of a valley `v` as `root · tail`, where `root` is built from arcs
/// `α T U β t` and concatenations and `tail` is the trailing coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValleyTree {
    nodes: Vec<ValleyNode>,
    sinks: Vec<usize>,
    root: usize,
    tail: BigInt,
}

impl ValleyTree {
    pub fn parse(v: &AltWord) -> Result<Self> {
        if !is_valley(v) {
            return Err(Error::NotAValley);
        }
        let mut tree = ValleyTree {
            nodes: Vec::new(),
            sinks: Vec::new(),
            root: 0,
            tail: v.last_coeff().clone(),
        };
        // Each frame holds the opening coefficient of its arc and the arcs
        // completed so far at that depth.
        let mut frames: Vec<(BigInt, Vec<usize>)> = vec![(BigInt::zero(), Vec::new())];
        for (i, th) in v.theta().iter().enumerate() {
            let coeff = v.alpha()[i].clone();
            match th {
                Theta::TInv => frames.push((coeff, Vec::new())),
                Theta::T => {
                    let (alpha, children) = frames.pop().expect("valley heights stay at most 0");
                    let inner = tree.chain(&children);
                    let s = tree.sinks[inner];
                    let id = tree.add(
                        ValleyNode::Arc {
                            alpha,
                            inner,
                            beta: coeff,
                        },
                        s,
                    );
                    frames
                        .last_mut()
                        .expect("valley heights stay at most 0")
                        .1
                        .push(id);
                }
            }
        }
        let (_, top) = frames.pop().expect("top frame");
        debug_assert!(frames.is_empty());
        tree.root = tree.chain(&top);
        Ok(tree)
    }

    fn add(&mut self, node: ValleyNode, sinks: usize) -> usize {
        self.nodes.push(node);
        self.sinks.push(sinks);
        self.nodes.len() - 1
    }

    fn chain(&mut self, children: &[usize]) -> usize {
        let Some((&first, rest)) = children.split_first() else {
            return self.add(ValleyNode::Zero, 1);
        };
        rest.iter().fold(first, |acc, &c| {
            let s = self.sinks[acc] + self.sinks[c];
            self.add(
                ValleyNode::Concat {
                    left: acc,
                    right: c,
                },
                s,
            )
        })
    }

    pub fn nodes(&self) -> &[ValleyNode] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &ValleyNode {
        &self.nodes[id]
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn tail(&self) -> &BigInt {
        &self.tail
    }

    /// Sinks of the subtree at `id`.
    pub fn sink_count(&self, id: usize) -> usize {
        self.sinks[id]
    }

    /// The valley word this tree was parsed from.
    pub fn reassemble(&self) -> AltWord {
        enum Task {
            Visit(usize),
            Close(BigInt),
        }
        let mut out = AltWord::identity();
        let mut stack = vec![Task::Visit(self.root)];
        while let Some(task) = stack.pop() {
            match task {
                Task::Visit(id) => match &self.nodes[id] {
                    ValleyNode::Zero => {}
                    ValleyNode::Arc { alpha, inner, beta } => {
                        out.add_last(alpha);
                        out.push_theta(Theta::TInv);
                        stack.push(Task::Close(beta.clone()));
                        stack.push(Task::Visit(*inner));
                    }
                    ValleyNode::Concat { left, right } => {
                        stack.push(Task::Visit(*right));
                        stack.push(Task::Visit(*left));
                    }
                },
                Task::Close(beta) => {
                    out.add_last(&beta);
                    out.push_theta(Theta::T);
                }
            }
        }
        out.add_last(&self.tail);
        out
    }
}

/// A Britton-reduced valley with trailing coefficient 0, coefficients before
/// `T` in `[0, p)` and before `t` in `[0, q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardValley(AltWord);

impl StandardValley {
    pub fn new(w: AltWord, params: &GroupParams) -> Result<Self> {
        if is_standard_valley(&w, params) {
            Ok(StandardValley(w))
        } else {
            Err(Error::Precondition(format!("{w} is not a standard valley")))
        }
    }

    pub fn word(&self) -> &AltWord {
        &self.0
    }

    pub fn into_word(self) -> AltWord {
        self.0
    }
}

/// The standard-valley predicate, with the `|α| < q` and `|α| < p` bounds.
pub fn is_standard_valley(w: &AltWord, params: &GroupParams) -> bool {
    let p = BigInt::from(params.p());
    let q = BigInt::from(params.q());
    is_valley(w)
        && crate::britton::is_britton_reduced(w, params)
        && w.last_coeff().is_zero()
        && w.theta().iter().enumerate().all(|(i, th)| {
            let a = w.alpha()[i].magnitude();
            match th {
                Theta::TInv => *a < *p.magnitude(),
                Theta::T => *a < *q.magnitude(),
            }
        })
}

/// `v ∼ V γ` with `V` standard.
///
/// Carries are pushed through arcs: the part `μp` of an opening coefficient
/// moves past `T` as `μq` and waits for the matching `t`, where it joins the
/// closing coefficient; the part `νq` of that sum leaves the arc as `νp`.
pub fn to_standard_valley(v: &AltWord, params: &GroupParams) -> Result<(StandardValley, BigInt)> {
    require_divides(params)?;
    let v = britton_reduce(v, params);
    if !is_valley(&v) {
        return Err(Error::NotAValley);
    }
    let p = BigInt::from(params.p());
    let q = BigInt::from(params.q());
    let mut alpha = Vec::with_capacity(v.alpha().len());
    let mut pending: Vec<BigInt> = Vec::new();
    let mut cur = v.alpha()[0].clone();
    for (th, next) in v.theta().iter().zip(&v.alpha()[1..]) {
        match th {
            Theta::TInv => {
                let (mu, rest) = cur.div_mod_floor(&p);
                alpha.push(rest);
                pending.push(mu * &q);
                cur = next.clone();
            }
            Theta::T => {
                let x = cur + pending.pop().expect("valley closes only opened arcs");
                let (nu, rest) = x.div_mod_floor(&q);
                alpha.push(rest);
                cur = next + nu * &p;
            }
        }
    }
    alpha.push(BigInt::zero());
    let w = AltWord::from_parts(alpha, v.theta().to_vec()).expect("lengths match");
    Ok((StandardValley(w), cur))
}

/// Range of carries of a standard valley: all `ρ` for which a family word
/// `V_ρ` exists. Sorted ascending.
pub fn range_of(v: &StandardValley, g: &Group) -> Result<Vec<i64>> {
    Ok(ValleyFamily::build(v, g)?.range())
}

#[derive(Debug, Clone, Copy)]
enum Back {
    Zero,
    Arc { sigma: i64, alpha: i64, beta: i64 },
    Concat { sigma: i64, tau: i64 },
}

#[derive(Debug, Clone, Copy)]
struct FamilyEntry {
    norm: u64,
    rank: u32,
    back: Back,
}

/// Best words `V_ρ` with `V ∼ V_ρ ρ`, one per carry `ρ`, for every subtree
/// of a standard valley.
#[derive(Debug, Clone)]
pub struct ValleyFamily {
    tree: ValleyTree,
    tables: Vec<BTreeMap<i64, FamilyEntry>>,
}

fn small(n: &BigInt) -> i64 {
    n.to_i64()
        .expect("standard valley coefficients are below q")
}

impl ValleyFamily {
    pub fn build(v: &StandardValley, g: &Group) -> Result<Self> {
        require_divides(g.params())?;
        let tree = ValleyTree::parse(v.word())?;
        let (p, q) = (g.params().p_i64(), g.params().q_i64());
        let mut tables: Vec<BTreeMap<i64, FamilyEntry>> = Vec::with_capacity(tree.nodes.len());
        for node in &tree.nodes {
            let table = match node {
                ValleyNode::Zero => BTreeMap::from([(
                    0,
                    FamilyEntry {
                        norm: 0,
                        rank: 0,
                        back: Back::Zero,
                    },
                )]),
                ValleyNode::Arc { alpha, inner, beta } => {
                    let (alpha, beta) = (small(alpha), small(beta));
                    let mut best: BTreeMap<i64, (u64, ArcKey, Back)> = BTreeMap::new();
                    for (&sigma, e) in &tables[*inner] {
                        for eps in [-1i64, 0, 1] {
                            let a = alpha - eps * p;
                            if a.abs() > p {
                                continue;
                            }
                            let x = sigma + eps * q + beta;
                            let b0 = x.rem_euclid(q);
                            for b in [b0, b0 - q] {
                                if b.abs() >= q {
                                    continue;
                                }
                                g.tick(1);
                                let rho = (x - b) / q * p;
                                let norm = e.norm
                                    + 2
                                    + g.int_norm(&BigInt::from(a))
                                    + g.int_norm(&BigInt::from(b));
                                let key = (delta_key(a), e.rank, delta_key(b));
                                let cand = (
                                    norm,
                                    key,
                                    Back::Arc {
                                        sigma,
                                        alpha: a,
                                        beta: b,
                                    },
                                );
                                match best.get(&rho) {
                                    Some(cur) if (cur.0, cur.1) <= (norm, key) => {}
                                    _ => {
                                        best.insert(rho, cand);
                                    }
                                }
                            }
                        }
                    }
                    finish(best)
                }
                ValleyNode::Concat { left, right } => {
                    let mut best: BTreeMap<i64, (u64, (u32, u32), Back)> = BTreeMap::new();
                    for (&sigma, l) in &tables[*left] {
                        for (&tau, r) in &tables[*right] {
                            g.tick(1);
                            let rho = sigma + tau;
                            let norm = l.norm + r.norm;
                            let key = (l.rank, r.rank);
                            match best.get(&rho) {
                                Some(cur) if (cur.0, cur.1) <= (norm, key) => {}
                                _ => {
                                    best.insert(rho, (norm, key, Back::Concat { sigma, tau }));
                                }
                            }
                        }
                    }
                    finish(best)
                }
            };
            tables.push(table);
        }
        Ok(ValleyFamily { tree, tables })
    }

    pub fn tree(&self) -> &ValleyTree {
        &self.tree
    }

    /// Carries available at the root, ascending.
    pub fn range(&self) -> Vec<i64> {
        self.tables[self.tree.root].keys().copied().collect()
    }

    /// Carries available at node `id`, ascending.
    pub fn range_at(&self, id: usize) -> Vec<i64> {
        self.tables[id].keys().copied().collect()
    }

    /// Norm of `V_ρ`.
    pub fn norm(&self, rho: i64) -> Option<u64> {
        self.tables[self.tree.root].get(&rho).map(|e| e.norm)
    }

    /// Order of `V_ρ` among the family words in the symbol order.
    pub fn rank(&self, rho: i64) -> Option<u32> {
        self.tables[self.tree.root].get(&rho).map(|e| e.rank)
    }

    /// The word `V_ρ`, trailing coefficient 0.
    pub fn word(&self, rho: i64) -> Option<AltWord> {
        enum Task {
            Visit(usize, i64),
            Close(i64),
        }
        self.tables[self.tree.root].get(&rho)?;
        let mut out = AltWord::identity();
        let mut stack = vec![Task::Visit(self.tree.root, rho)];
        while let Some(task) = stack.pop() {
            match task {
                Task::Visit(id, rho) => {
                    let entry = self.tables[id][&rho];
                    match (entry.back, &self.tree.nodes[id]) {
                        (Back::Zero, _) => {}
                        (Back::Arc { sigma, alpha, beta }, ValleyNode::Arc { inner, .. }) => {
                            out.add_last(&BigInt::from(alpha));
                            out.push_theta(Theta::TInv);
                            stack.push(Task::Close(beta));
                            stack.push(Task::Visit(*inner, sigma));
                        }
                        (Back::Concat { sigma, tau }, ValleyNode::Concat { left, right }) => {
                            stack.push(Task::Visit(*right, tau));
                            stack.push(Task::Visit(*left, sigma));
                        }
                        _ => unreachable!("back pointer matches node kind"),
                    }
                }
                Task::Close(beta) => {
                    out.add_last(&BigInt::from(beta));
                    out.push_theta(Theta::T);
                }
            }
        }
        Some(out)
    }
}

fn finish<K: Ord + Copy>(best: BTreeMap<i64, (u64, K, Back)>) -> BTreeMap<i64, FamilyEntry> {
    let keys: Vec<K> = best.values().map(|v| v.1).collect();
    let ranks = dense_ranks(&keys);
    best.into_iter()
        .zip(ranks)
        .map(|((rho, (norm, _, back)), rank)| (rho, FamilyEntry { norm, rank, back }))
        .collect()
}

/// `T^n`-style padding: `n` copies of `th` with zero coefficients around them.
fn pad(th: Theta, n: usize) -> AltWord {
    let mut w = AltWord::identity();
    for _ in 0..n {
        w.push_theta(th);
    }
    w
}

/// The leading `n` coefficients and letters removed.
fn drop_front(w: &AltWord, n: usize) -> AltWord {
    AltWord::from_parts(w.alpha()[n..].to_vec(), w.theta()[n..].to_vec()).expect("lengths match")
}

impl Group {
    /// Peak normal form of a valley.
    pub fn valley_pnf(&self, v: &AltWord) -> Result<BrittonPnf> {
        require_divides(self.params())?;
        let v = britton_reduce(v, self.params());
        if !is_valley(&v) {
            return Err(Error::NotAValley);
        }
        if let Some(n) = v.as_integer() {
            return Ok(BrittonPnf::integer(n.clone(), self));
        }
        let (sv, gamma) = to_standard_valley(&v, self.params())?;
        let family = ValleyFamily::build(&sv, self)?;
        let root = &family.tables[family.tree.root];
        let mut best: Option<(u64, u32, i64)> = None;
        for (&rho, e) in root {
            self.tick(1);
            let norm = e.norm + self.int_norm(&(&gamma + rho));
            if best.is_none_or(|b| (norm, e.rank) < (b.0, b.1)) {
                best = Some((norm, e.rank, rho));
            }
        }
        let (norm, _, rho) = best.expect("ranges are never empty");
        let mut word = family.word(rho).expect("rho is in range");
        word.add_last(&(&gamma + rho));
        let k = word.k();
        Ok(BrittonPnf::new(word, k, norm))
    }

    /// Peak normal form of a difficult word, `θ₁ = T` and `θₖ = t`.
    ///
    /// `T^ℓ u t^m` is a valley for `ℓ = height(u)` and `m = ℓ - end_height(u)`.
    /// Its pnf starts with `T^ℓ`. When `m > 0` the part after the peak of `u`
    /// is solved again from the right.
    pub fn difficult_pnf(&self, u: &AltWord) -> Result<BrittonPnf> {
        require_divides(self.params())?;
        let u = britton_reduce(u, self.params());
        if !Classification::of_reduced(&u).difficult {
            return Err(Error::NotDifficult);
        }
        let ell = u.height() as usize;
        let m = (u.height() - u.end_height()) as usize;
        if ell == 0 && m == 0 {
            return self.valley_pnf(&u);
        }
        let mut padded = pad(Theta::TInv, ell);
        padded.append(&u);
        padded.append(&pad(Theta::T, m));
        let outer = self.valley_pnf(&padded)?;
        assert!(
            outer.word().alpha()[..ell].iter().all(Zero::is_zero),
            "valley pnf of a padded difficult word starts with T^{ell}"
        );
        if m == 0 {
            let word = drop_front(outer.word(), ell);
            let k = word.k();
            return Ok(BrittonPnf::new(word, k, outer.norm() - ell as u64));
        }
        let peak = u.peak_position();
        let split = ell + peak;
        let right = drop_front(outer.word(), split);
        let mirrored = self.valley_pnf(&right.involute())?.into_word().involute();
        let keep = mirrored.k() - m;
        assert!(
            mirrored.alpha()[keep + 1..].iter().all(Zero::is_zero),
            "mirrored pnf ends with t^{m}"
        );
        let mut alpha = outer.word().alpha()[ell..split].to_vec();
        let mut theta = outer.word().theta()[ell..split].to_vec();
        alpha.extend_from_slice(&mirrored.alpha()[..=keep]);
        theta.extend_from_slice(&mirrored.theta()[..keep]);
        let word = AltWord::from_parts(alpha, theta).expect("lengths match");
        let norm = self.norm(&word);
        Ok(BrittonPnf::new(word, peak, norm))
    }

    /// Britton peak normal form of any word when the core is an integer or
    /// `p | q`.
    pub fn britton_pnf(&self, w: &AltWord) -> Result<BrittonPnf> {
        let reduced = britton_reduce(w, self.params());
        let d = Decomposition::of_reduced(&reduced);
        if d.is_hill() {
            return self.peak_wrap_pnf(&reduced, &|c: &AltWord| {
                let n = c.as_integer().expect("hill core is an integer").clone();
                Ok(BrittonPnf::integer(n, self))
            });
        }
        if !self.params().divides() {
            return Err(Error::UnsupportedCase {
                p: self.params().p(),
                q: self.params().q(),
            });
        }
        self.peak_wrap_pnf(&reduced, &|c: &AltWord| self.difficult_pnf(c))
    }

    /// Peak normal form, its flattening to a geodesic, and the geodesic length.
    pub fn full_pnf(&self, w: &AltWord) -> Result<FullPnf> {
        let britton = self.britton_pnf(w)?;
        let flat = britton.flatten(self);
        let geodesic_length = britton.norm();
        debug_assert_eq!(flat.len() as u64, geodesic_length);
        Ok(FullPnf {
            britton,
            flat,
            geodesic_length,
        })
    }

    /// Length of a geodesic for `w`.
    pub fn geodesic_length(&self, w: &AltWord) -> Result<u64> {
        Ok(self.britton_pnf(w)?.norm())
    }
}
