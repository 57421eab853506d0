//! The confluent rewriting system for `BS(p, q)`:
//!
//! ```text
//! aA, Aa, tT, Tt -> 1      a^q t -> t a^p     A t -> a^(q-1) t A^p
//!                          a^p T -> T a^q     A T -> a^(p-1) T A^q
//! ```
//!
//! Irreducible words are unique per group element, so they serve as hash keys.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::britton::britton_reduce;
use crate::params::GroupParams;
use crate::word::{AltWord, Letter, RawWord, Theta};

/// The irreducible representative of a group element.
///
/// Every coefficient followed by `t` lies in `[0, q)`, every coefficient
/// followed by `T` lies in `[0, p)`, and no `tT` or `Tt` factor remains.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm(AltWord);

impl CanonicalForm {
    pub fn word(&self) -> &AltWord {
        &self.0
    }

    pub fn into_word(self) -> AltWord {
        self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Compute the irreducible form with one left-to-right carry pass.
pub fn canonical_form(u: &AltWord, params: &GroupParams) -> CanonicalForm {
    let p = BigInt::from(params.p());
    let q = BigInt::from(params.q());
    let mut stack: Vec<(BigInt, Theta)> = Vec::with_capacity(u.k());
    let mut cur = u.alpha()[0].clone();
    for (th, next) in u.theta().iter().zip(&u.alpha()[1..]) {
        let (modulus, carry, undo) = match th {
            Theta::T => (&q, &p, Theta::TInv),
            Theta::TInv => (&p, &q, Theta::T),
        };
        let (mu, beta) = cur.div_mod_floor(modulus);
        let shifted = mu * carry + next;
        match stack.last() {
            Some((_, top)) if *top == undo && beta == BigInt::ZERO => {
                let (below, _) = stack.pop().expect("checked non-empty");
                cur = below + shifted;
            }
            _ => {
                stack.push((beta, *th));
                cur = shifted;
            }
        }
    }
    let mut alpha = Vec::with_capacity(stack.len() + 1);
    let mut theta = Vec::with_capacity(stack.len());
    for (a, th) in stack {
        alpha.push(a);
        theta.push(th);
    }
    alpha.push(cur);
    CanonicalForm(AltWord::from_parts(alpha, theta).expect("lengths match"))
}

/// True iff `u` and `v` denote the same element.
pub fn equal(u: &AltWord, v: &AltWord, params: &GroupParams) -> bool {
    britton_reduce(&u.concat(&v.involute()), params).is_identity()
}

fn run_at(letters: &[Letter], at: usize, len: usize, l: Letter) -> bool {
    at + len <= letters.len() && letters[at..at + len].iter().all(|&x| x == l)
}

/// Positions where a rewriting rule applies, in increasing order.
pub fn bs_redexes(w: &RawWord, params: &GroupParams) -> Vec<usize> {
    let (p, q) = (params.p() as usize, params.q() as usize);
    let ls = w.letters();
    (0..ls.len())
        .filter(|&i| {
            let next = ls.get(i + 1).copied();
            match ls[i] {
                Letter::A => {
                    next == Some(Letter::AInv)
                        || (run_at(ls, i, q, Letter::A) && ls.get(i + q) == Some(&Letter::T))
                        || (run_at(ls, i, p, Letter::A) && ls.get(i + p) == Some(&Letter::TInv))
                }
                Letter::AInv => matches!(next, Some(Letter::A | Letter::T | Letter::TInv)),
                Letter::T => next == Some(Letter::TInv),
                Letter::TInv => next == Some(Letter::T),
            }
        })
        .collect()
}

/// Apply the rule whose left-hand side starts at `at`. Returns `None` if no
/// rule starts there.
pub fn bs_apply(w: &RawWord, at: usize, params: &GroupParams) -> Option<RawWord> {
    use Letter::{AInv, TInv, A, T};
    let (p, q) = (params.p() as usize, params.q() as usize);
    let ls = w.letters();
    let next = ls.get(at + 1).copied();
    let (consumed, replacement): (usize, Vec<Letter>) = match (ls.get(at).copied()?, next) {
        (A, Some(AInv)) | (AInv, Some(A)) | (T, Some(TInv)) | (TInv, Some(T)) => (2, vec![]),
        (A, _) if run_at(ls, at, q, A) && ls.get(at + q) == Some(&T) => (
            q + 1,
            std::iter::once(T)
                .chain(std::iter::repeat_n(A, p))
                .collect(),
        ),
        (A, _) if run_at(ls, at, p, A) && ls.get(at + p) == Some(&TInv) => (
            p + 1,
            std::iter::once(TInv)
                .chain(std::iter::repeat_n(A, q))
                .collect(),
        ),
        (AInv, Some(T)) => (
            2,
            std::iter::repeat_n(A, q - 1)
                .chain(std::iter::once(T))
                .chain(std::iter::repeat_n(AInv, p))
                .collect(),
        ),
        (AInv, Some(TInv)) => (
            2,
            std::iter::repeat_n(A, p - 1)
                .chain(std::iter::once(TInv))
                .chain(std::iter::repeat_n(AInv, q))
                .collect(),
        ),
        _ => return None,
    };
    let mut out = Vec::with_capacity(ls.len() - consumed + replacement.len());
    out.extend_from_slice(&ls[..at]);
    out.extend(replacement);
    out.extend_from_slice(&ls[at + consumed..]);
    Some(RawWord::new(out))
}

/// One leftmost rewriting step, or `None` if `w` is irreducible.
pub fn bs_step(w: &RawWord, params: &GroupParams) -> Option<RawWord> {
    let at = *bs_redexes(w, params).first()?;
    bs_apply(w, at, params)
}
