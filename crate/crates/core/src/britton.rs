//! Britton reduction, t-sequences, structural classification, and the unique
//! split of a reduced word into flanks around a hill or difficult core.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::params::GroupParams;
use crate::word::{AltWord, Theta};

/// Replace every factor `t (μp) T` by `μq` and `T (μq) t` by `μp` until none is left.
///
/// Works as a stack machine, so each stable letter is pushed and popped at
/// most once.
pub fn britton_reduce(u: &AltWord, params: &GroupParams) -> AltWord {
    let p = BigInt::from(params.p());
    let q = BigInt::from(params.q());
    let mut stack: Vec<(BigInt, Theta)> = Vec::with_capacity(u.k());
    let mut cur = u.alpha()[0].clone();
    for (th, next) in u.theta().iter().zip(&u.alpha()[1..]) {
        let pinch = match (stack.last(), th) {
            (Some((_, Theta::T)), Theta::TInv) if cur.is_multiple_of(&p) => Some((&p, &q)),
            (Some((_, Theta::TInv)), Theta::T) if cur.is_multiple_of(&q) => Some((&q, &p)),
            _ => None,
        };
        match pinch {
            Some((div, mul)) => {
                let (below, _) = stack.pop().expect("checked non-empty");
                cur = below + cur / div * mul + next;
            }
            None => {
                stack.push((std::mem::take(&mut cur), *th));
                cur = next.clone();
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
    AltWord::from_parts(alpha, theta).expect("lengths match")
}

pub fn is_britton_reduced(u: &AltWord, params: &GroupParams) -> bool {
    let p = BigInt::from(params.p());
    let q = BigInt::from(params.q());
    u.theta().windows(2).enumerate().all(|(i, w)| {
        let a = &u.alpha()[i + 1];
        match (w[0], w[1]) {
            (Theta::T, Theta::TInv) => !a.is_multiple_of(&p),
            (Theta::TInv, Theta::T) => !a.is_multiple_of(&q),
            _ => true,
        }
    })
}

/// The stable-letter sequence of the Britton reduction; an invariant of the element.
pub fn t_sequence(u: &AltWord, params: &GroupParams) -> Vec<Theta> {
    britton_reduce(u, params).theta().to_vec()
}

pub fn render_t_sequence(ts: &[Theta]) -> String {
    ts.iter().map(|t| t.to_char()).collect()
}

/// The most specific structural label of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Horocyclic,
    Hill,
    Difficult,
    Valley,
    General,
}

impl Label {
    pub fn as_str(self) -> &'static str {
        match self {
            Label::Horocyclic => "horocyclic",
            Label::Hill => "hill",
            Label::Difficult => "difficult",
            Label::Valley => "valley",
            Label::General => "general",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Structural predicates of the Britton reduction.
///
/// The predicates overlap: horocyclic words are hills and valleys, and every
/// valley with stable letters is difficult. `label` picks the first of
/// horocyclic, hill, difficult, valley that holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Classification {
    pub label: Label,
    pub horocyclic: bool,
    pub hill: bool,
    pub valley: bool,
    pub difficult: bool,
}

impl Classification {
    /// Classify an already reduced word.
    pub fn of_reduced(u: &AltWord) -> Classification {
        let ts = u.theta();
        let horocyclic = ts.is_empty();
        let ups = ts.iter().take_while(|&&t| t == Theta::T).count();
        let hill = ts[ups..].iter().all(|&t| t == Theta::TInv);
        let valley = u.height() == 0 && u.end_height() == 0;
        let difficult = ts.first() == Some(&Theta::TInv) && ts.last() == Some(&Theta::T);
        let label = if horocyclic {
            Label::Horocyclic
        } else if hill {
            Label::Hill
        } else if difficult {
            Label::Difficult
        } else if valley {
            Label::Valley
        } else {
            Label::General
        };
        Classification {
            label,
            horocyclic,
            hill,
            valley,
            difficult,
        }
    }

    /// Flags that hold besides the label, leaving out those implied by it.
    pub fn extra_flags(&self) -> Vec<&'static str> {
        if self.horocyclic {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (flag, name) in [
            (self.hill, Label::Hill),
            (self.difficult, Label::Difficult),
            (self.valley, Label::Valley),
        ] {
            if flag && name != self.label {
                out.push(name.as_str());
            }
        }
        out
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)?;
        let extra = self.extra_flags();
        if !extra.is_empty() {
            write!(f, " ({})", extra.join(", "))?;
        }
        Ok(())
    }
}

pub fn classify(u: &AltWord, params: &GroupParams) -> Classification {
    Classification::of_reduced(&britton_reduce(u, params))
}

/// `u = α₁ t ⋯ αₖ t · D · T β₁ ⋯ T βₘ` with the maximal `t`-prefix and `T`-suffix
/// stripped. Both flank sequences are in word order, so `alphas[0]` is the
/// outermost left coefficient and `betas.last()` the outermost right one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub alphas: Vec<BigInt>,
    pub core: AltWord,
    pub betas: Vec<BigInt>,
}

impl Decomposition {
    /// Split a Britton-reduced word.
    pub fn of_reduced(u: &AltWord) -> Decomposition {
        let ts = u.theta();
        let k = ts.iter().take_while(|&&t| t == Theta::T).count();
        let m = ts[k..]
            .iter()
            .rev()
            .take_while(|&&t| t == Theta::TInv)
            .count();
        let n = ts.len();
        let alpha = u.alpha();
        let core = AltWord::from_parts(alpha[k..=n - m].to_vec(), ts[k..n - m].to_vec())
            .expect("slice lengths match");
        Decomposition {
            alphas: alpha[..k].to_vec(),
            core,
            betas: alpha[n - m + 1..].to_vec(),
        }
    }

    pub fn is_hill(&self) -> bool {
        self.core.k() == 0
    }

    pub fn reassemble(&self) -> AltWord {
        let mut out = AltWord::identity();
        for a in &self.alphas {
            out.add_last(a);
            out.push_theta(Theta::T);
        }
        out.append(&self.core);
        for b in &self.betas {
            out.push(Theta::TInv, b.clone());
        }
        out
    }
}

pub fn decompose(u: &AltWord, params: &GroupParams) -> Decomposition {
    Decomposition::of_reduced(&britton_reduce(u, params))
}

/// `(α₀ mod p, …, αₖ mod p)` of a reduced word, with values in `[0, p)`.
pub(crate) fn residues_mod(u: &AltWord, p: u64) -> Vec<u64> {
    let p = BigInt::from(p);
    u.alpha()
        .iter()
        .map(|a| {
            let r = a.mod_floor(&p);
            if r.is_zero() {
                0
            } else {
                r.try_into().expect("residue below p")
            }
        })
        .collect()
}
