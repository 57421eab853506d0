//! Words over `{t, T, a, A}` and their alternating representation.
//!
//! A [`RawWord`] is a plain letter sequence. An [`AltWord`] is the element of
//! `Z * {t,T}*` written as `α₀ θ₁ α₁ ⋯ θₖ αₖ`, with the integers kept in binary.
//! Text notation follows the compact style `7t14T-2tt9T2T23`: an integer `n`
//! stands for `a^n` (or `A^-n` when negative), zero is written as nothing.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Longest letter run `parse_word` will expand.
pub const MAX_EXPANDED_RUN: usize = 1 << 26;
/// Longest run of stable letters accepted through `t^n` / `T^n`.
pub const MAX_STABLE_RUN: usize = 1 << 24;

/// A generator or its inverse. Declaration order is the alphabet order
/// `t < T < a < A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    T,
    TInv,
    A,
    AInv,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::T, Letter::TInv, Letter::A, Letter::AInv];

    pub fn inverse(self) -> Letter {
        match self {
            Letter::T => Letter::TInv,
            Letter::TInv => Letter::T,
            Letter::A => Letter::AInv,
            Letter::AInv => Letter::A,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::T => 't',
            Letter::TInv => 'T',
            Letter::A => 'a',
            Letter::AInv => 'A',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            't' => Some(Letter::T),
            'T' => Some(Letter::TInv),
            'a' => Some(Letter::A),
            'A' => Some(Letter::AInv),
            _ => None,
        }
    }
}

/// A stable letter, `t` or `T = t⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theta {
    T,
    TInv,
}

impl Theta {
    pub fn inverse(self) -> Theta {
        match self {
            Theta::T => Theta::TInv,
            Theta::TInv => Theta::T,
        }
    }

    pub fn letter(self) -> Letter {
        match self {
            Theta::T => Letter::T,
            Theta::TInv => Letter::TInv,
        }
    }

    pub fn to_char(self) -> char {
        self.letter().to_char()
    }

    /// `+1` for `t`, `-1` for `T`.
    pub fn step(self) -> i64 {
        match self {
            Theta::T => 1,
            Theta::TInv => -1,
        }
    }
}

/// A finite sequence of letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RawWord(Vec<Letter>);

impl RawWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        RawWord(letters)
    }

    pub fn empty() -> Self {
        RawWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn extend_from(&mut self, other: &RawWord) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(&self, other: &RawWord) -> RawWord {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        RawWord(v)
    }

    /// Formal inverse: reverse and invert every letter.
    pub fn involute(&self) -> RawWord {
        RawWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Sum adjacent `a`/`A` letters into alternating form.
    pub fn to_alt(&self) -> AltWord {
        let mut b = AltWord::identity();
        for &l in &self.0 {
            match l {
                Letter::A => b.add_last(&BigInt::from(1)),
                Letter::AInv => b.add_last(&BigInt::from(-1)),
                Letter::T => b.push_theta(Theta::T),
                Letter::TInv => b.push_theta(Theta::TInv),
            }
        }
        b
    }

    /// Compact notation of the alternating form, e.g. `t2TTT-1T-2`.
    pub fn notation(&self) -> String {
        self.to_alt().to_string()
    }

    /// Compact notation with a leading run of three or more `t` folded into
    /// `t^k`, e.g. `t^4 2TTT-1T-2`.
    pub fn notation_folded(&self) -> String {
        self.to_alt().notation_folded()
    }
}

impl fmt::Display for RawWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for RawWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

/// An element of `Z * {t,T}*` in the unique alternating form
/// `α₀ θ₁ α₁ ⋯ θₖ αₖ`; always `alpha.len() == theta.len() + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AltWord {
    alpha: Vec<BigInt>,
    theta: Vec<Theta>,
}

impl Default for AltWord {
    fn default() -> Self {
        AltWord::identity()
    }
}

impl AltWord {
    pub fn identity() -> Self {
        AltWord {
            alpha: vec![BigInt::zero()],
            theta: Vec::new(),
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        AltWord {
            alpha: vec![n.into()],
            theta: Vec::new(),
        }
    }

    /// Build from explicit parts. Fails unless `alpha.len() == theta.len() + 1`.
    pub fn from_parts(alpha: Vec<BigInt>, theta: Vec<Theta>) -> Result<Self> {
        if alpha.len() != theta.len() + 1 {
            return Err(Error::Precondition(format!(
                "alternating word needs {} coefficients, got {}",
                theta.len() + 1,
                alpha.len()
            )));
        }
        Ok(AltWord { alpha, theta })
    }

    /// Convenience constructor from small coefficients; panics on a length mismatch.
    pub fn from_i64s(alpha: &[i64], theta: &[Theta]) -> Self {
        AltWord::from_parts(
            alpha.iter().map(|&a| BigInt::from(a)).collect(),
            theta.to_vec(),
        )
        .expect("coefficient count must be one more than the stable-letter count")
    }

    pub fn alpha(&self) -> &[BigInt] {
        &self.alpha
    }

    pub fn theta(&self) -> &[Theta] {
        &self.theta
    }

    pub fn into_parts(self) -> (Vec<BigInt>, Vec<Theta>) {
        (self.alpha, self.theta)
    }

    /// Number of stable letters `k`.
    pub fn k(&self) -> usize {
        self.theta.len()
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.alpha[i]
    }

    /// The integer this word denotes when it has no stable letters.
    pub fn as_integer(&self) -> Option<&BigInt> {
        if self.theta.is_empty() {
            Some(&self.alpha[0])
        } else {
            None
        }
    }

    pub fn is_identity(&self) -> bool {
        self.theta.is_empty() && self.alpha[0].is_zero()
    }

    pub fn last_coeff(&self) -> &BigInt {
        self.alpha.last().expect("alternating word is never empty")
    }

    /// Right-multiply by `a^n`.
    pub fn add_last(&mut self, n: &BigInt) {
        *self
            .alpha
            .last_mut()
            .expect("alternating word is never empty") += n;
    }

    /// Left-multiply by `a^n`.
    pub fn add_first(&mut self, n: &BigInt) {
        self.alpha[0] += n;
    }

    /// Right-multiply by a stable letter.
    pub fn push_theta(&mut self, th: Theta) {
        self.theta.push(th);
        self.alpha.push(BigInt::zero());
    }

    /// Right-multiply by `θ a^n`.
    pub fn push(&mut self, th: Theta, n: BigInt) {
        self.theta.push(th);
        self.alpha.push(n);
    }

    /// Free-product concatenation; the touching coefficients are added.
    pub fn concat(&self, other: &AltWord) -> AltWord {
        let mut out = self.clone();
        out.append(other);
        out
    }

    pub fn append(&mut self, other: &AltWord) {
        self.add_last(&other.alpha[0]);
        self.theta.extend_from_slice(&other.theta);
        self.alpha.extend(other.alpha[1..].iter().cloned());
    }

    /// The formal inverse: reverse, swap `t`/`T`, negate the integers.
    pub fn involute(&self) -> AltWord {
        AltWord {
            alpha: self.alpha.iter().rev().map(|a| -a).collect(),
            theta: self.theta.iter().rev().map(|t| t.inverse()).collect(),
        }
    }

    /// `|u| = k + Σ|αᵢ|`.
    pub fn word_length(&self) -> BigUint {
        let mut n = BigUint::from(self.theta.len());
        for a in &self.alpha {
            n += a.magnitude();
        }
        n
    }

    /// Expand to letters, refusing results longer than `max_len`.
    pub fn to_raw(&self, max_len: usize) -> Result<RawWord> {
        let len = self.word_length();
        if len > BigUint::from(max_len) {
            return Err(Error::ExpansionLimit { limit: max_len });
        }
        let mut out = Vec::with_capacity(len.to_usize().unwrap_or(0));
        for (i, a) in self.alpha.iter().enumerate() {
            if i > 0 {
                out.push(self.theta[i - 1].letter());
            }
            let n = a.magnitude().to_usize().expect("bounded by max_len");
            let l = if a.sign() == Sign::Minus {
                Letter::AInv
            } else {
                Letter::A
            };
            out.extend(std::iter::repeat_n(l, n));
        }
        Ok(RawWord(out))
    }

    /// `h(0) = 0`, `h(i) = h(i-1) ± 1` according to `θᵢ`.
    pub fn height_profile(&self) -> Vec<i64> {
        let mut h = Vec::with_capacity(self.alpha.len());
        let mut cur = 0i64;
        h.push(cur);
        for th in &self.theta {
            cur += th.step();
            h.push(cur);
        }
        h
    }

    /// Maximum of the height profile.
    pub fn height(&self) -> i64 {
        let mut cur = 0i64;
        let mut best = 0i64;
        for th in &self.theta {
            cur += th.step();
            best = best.max(cur);
        }
        best
    }

    /// Height of the last position.
    pub fn end_height(&self) -> i64 {
        self.theta.iter().map(|t| t.step()).sum()
    }

    /// Rightmost position of maximal height.
    pub fn peak_position(&self) -> usize {
        let mut cur = 0i64;
        let mut best = 0i64;
        let mut pos = 0usize;
        for (i, th) in self.theta.iter().enumerate() {
            cur += th.step();
            if cur >= best {
                best = cur;
                pos = i + 1;
            }
        }
        pos
    }

    fn theta_at(&self, i: usize) -> Option<Theta> {
        // θ is 1-indexed: θᵢ sits between αᵢ₋₁ and αᵢ.
        if i == 0 || i > self.theta.len() {
            None
        } else {
            Some(self.theta[i - 1])
        }
    }

    /// Positions `i` with `θᵢ ≠ t` and `θᵢ₊₁ ≠ T`.
    pub fn sink_count(&self) -> usize {
        (0..=self.k())
            .filter(|&i| {
                self.theta_at(i) != Some(Theta::T) && self.theta_at(i + 1) != Some(Theta::TInv)
            })
            .count()
    }

    /// Positions `i` with `θᵢ ≠ T` and `θᵢ₊₁ ≠ t`.
    pub fn peak_count(&self) -> usize {
        (0..=self.k())
            .filter(|&i| {
                self.theta_at(i) != Some(Theta::TInv) && self.theta_at(i + 1) != Some(Theta::T)
            })
            .count()
    }

    /// Compact notation with a leading run of at least three `t` written `t^k`.
    pub fn notation_folded(&self) -> String {
        let run = self
            .theta
            .iter()
            .zip(&self.alpha)
            .take_while(|(th, a)| **th == Theta::T && a.is_zero())
            .count();
        if run < 3 {
            return self.to_string();
        }
        let rest = AltWord {
            alpha: self.alpha[run..].to_vec(),
            theta: self.theta[run..].to_vec(),
        };
        if rest.is_identity() {
            format!("t^{run}")
        } else {
            format!("t^{run} {rest}")
        }
    }
}

impl fmt::Display for AltWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.alpha.iter().enumerate() {
            if i > 0 {
                write!(f, "{}", self.theta[i - 1].to_char())?;
            }
            if !a.is_zero() {
                write!(f, "{a}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for AltWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_alt(s)
    }
}

enum Token {
    Letter(Letter, BigUint),
    Int(BigInt),
}

fn parse_error(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

fn scan_digits(bytes: &[u8], start: usize) -> usize {
    let mut j = start;
    while j < bytes.len() && bytes[j].is_ascii_digit() {
        j += 1;
    }
    j
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if let Some(l) = Letter::from_char(b as char) {
            i += 1;
            if i < bytes.len() && bytes[i] == b'^' {
                let exp_start = i + 1;
                if exp_start < bytes.len() && bytes[exp_start] == b'-' {
                    return Err(parse_error(exp_start, "negative exponent"));
                }
                let end = scan_digits(bytes, exp_start);
                if end == exp_start {
                    return Err(parse_error(exp_start, "expected exponent digits after '^'"));
                }
                let n: BigUint = text[exp_start..end].parse().expect("ascii digits");
                if n.is_zero() {
                    return Err(parse_error(exp_start, "exponent must be positive"));
                }
                tokens.push(Token::Letter(l, n));
                i = end;
            } else {
                tokens.push(Token::Letter(l, BigUint::from(1u8)));
            }
            continue;
        }
        if b == b'-' || b.is_ascii_digit() {
            let digits_start = if b == b'-' { i + 1 } else { i };
            let end = scan_digits(bytes, digits_start);
            if end == digits_start {
                return Err(parse_error(i, "expected digits after '-'"));
            }
            let n: BigInt = text[i..end].parse().expect("signed ascii digits");
            tokens.push(Token::Int(n));
            i = end;
            continue;
        }
        return Err(parse_error(
            i,
            format!(
                "unexpected character {:?}",
                text[i..].chars().next().unwrap()
            ),
        ));
    }
    Ok(tokens)
}

/// Parse the compact word notation directly into alternating form, keeping
/// integers in binary.
pub fn parse_alt(text: &str) -> Result<AltWord> {
    let mut w = AltWord::identity();
    for tok in tokenize(text)? {
        match tok {
            Token::Int(n) => w.add_last(&n),
            Token::Letter(l @ (Letter::A | Letter::AInv), n) => {
                let n = BigInt::from_biguint(Sign::Plus, n);
                w.add_last(&if l == Letter::A { n } else { -n });
            }
            Token::Letter(l, n) => {
                let n = n
                    .to_usize()
                    .filter(|&n| n <= MAX_STABLE_RUN)
                    .ok_or_else(|| Error::LimitExceeded("stable-letter run too long".into()))?;
                let th = if l == Letter::T {
                    Theta::T
                } else {
                    Theta::TInv
                };
                for _ in 0..n {
                    w.push_theta(th);
                }
            }
        }
    }
    Ok(w)
}

/// Parse the compact word notation into the letter sequence it denotes.
pub fn parse_word(text: &str) -> Result<RawWord> {
    let mut out = Vec::new();
    for tok in tokenize(text)? {
        let (l, n) = match tok {
            Token::Letter(l, n) => (l, n),
            Token::Int(n) => {
                let l = if n.sign() == Sign::Minus {
                    Letter::AInv
                } else {
                    Letter::A
                };
                (l, n.magnitude().clone())
            }
        };
        let n = n
            .to_usize()
            .filter(|&n| out.len() + n <= MAX_EXPANDED_RUN)
            .ok_or_else(|| {
                Error::LimitExceeded(format!("word longer than {MAX_EXPANDED_RUN} letters"))
            })?;
        out.extend(std::iter::repeat_n(l, n));
    }
    Ok(RawWord(out))
}

/// Length-lexicographical order with `t < T < a < A`.
pub fn cmp_ll(u: &RawWord, v: &RawWord) -> Ordering {
    u.len()
        .cmp(&v.len())
        .then_with(|| u.letters().cmp(v.letters()))
}

/// Symbol order on integers: smaller absolute value first, and for equal
/// absolute value the nonnegative one first.
pub fn cmp_delta_int(a: &BigInt, b: &BigInt) -> Ordering {
    a.magnitude()
        .cmp(b.magnitude())
        .then_with(|| a.is_negative().cmp(&b.is_negative()))
}

/// Length-lexicographical order on `Z ∪ {t, T}` symbol strings, counting each
/// integer slot as one symbol and ordering symbols `t < T < integers`.
pub fn cmp_delta(u: &AltWord, v: &AltWord) -> Ordering {
    u.k().cmp(&v.k()).then_with(|| {
        for i in 0..u.alpha.len() {
            if i > 0 {
                let o = u.theta[i - 1].cmp(&v.theta[i - 1]);
                if o != Ordering::Equal {
                    return o;
                }
            }
            let o = cmp_delta_int(&u.alpha[i], &v.alpha[i]);
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    })
}

/// Lexicographic comparison of equal-length coefficient slices in the symbol order.
pub fn cmp_delta_seq<'a>(
    a: impl IntoIterator<Item = &'a BigInt>,
    b: impl IntoIterator<Item = &'a BigInt>,
) -> Ordering {
    let mut ia = a.into_iter();
    let mut ib = b.into_iter();
    loop {
        match (ia.next(), ib.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) => {
                let o = cmp_delta_int(x, y);
                if o != Ordering::Equal {
                    return o;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Theta::{TInv as Tt, T as t};

    fn alt(s: &str) -> AltWord {
        parse_alt(s).unwrap()
    }

    #[test]
    fn parses_appendix_word() {
        let w = parse_word("7t14T-2tt9T2T23").unwrap();
        assert_eq!(w.len(), 63);
        assert_eq!(
            w.to_alt(),
            AltWord::from_i64s(&[7, 14, -2, 0, 9, 2, 23], &[t, Tt, t, t, Tt, Tt])
        );
        assert_eq!(w.notation(), "7t14T-2tt9T2T23");
    }

    #[test]
    fn parses_exponents_and_whitespace() {
        let w = parse_word("t^3 5T2T1T1").unwrap();
        assert_eq!(w.to_string(), "tttaaaaaTaaTaTa");
        assert_eq!(parse_word("").unwrap(), RawWord::empty());
        assert_eq!(parse_word("  a^2 A ").unwrap().to_string(), "aaA");
        assert_eq!(parse_word("0").unwrap(), RawWord::empty());
    }

    #[test]
    fn parse_errors_carry_offsets() {
        assert_eq!(
            parse_word("tx").unwrap_err(),
            Error::Parse {
                offset: 1,
                message: "unexpected character 'x'".into()
            }
        );
        assert!(matches!(
            parse_word("t^0"),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(matches!(
            parse_word("a^-2"),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(matches!(
            parse_word("a^"),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(matches!(
            parse_word("3-"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            parse_word("é"),
            Err(Error::Parse { offset: 0, .. })
        ));
    }

    #[test]
    fn to_alt_examples() {
        assert_eq!(
            parse_word("aaAt").unwrap().to_alt(),
            AltWord::from_i64s(&[1, 0], &[t])
        );
        assert_eq!(RawWord::empty().to_alt(), AltWord::identity());
    }

    #[test]
    fn to_raw_examples() {
        let w = AltWord::from_i64s(&[2, -1], &[Tt]);
        assert_eq!(w.to_raw(10).unwrap().to_string(), "aaTA");
        assert_eq!(AltWord::identity().to_raw(0).unwrap(), RawWord::empty());
        assert_eq!(
            AltWord::from_int(1_000_000).to_raw(100),
            Err(Error::ExpansionLimit { limit: 100 })
        );
    }

    #[test]
    fn involute_examples() {
        assert_eq!(alt("1t2").involute(), AltWord::from_i64s(&[-2, -1], &[Tt]));
        assert_eq!(AltWord::identity().involute(), AltWord::identity());
        assert_eq!(
            alt("5T2T1T1").involute(),
            AltWord::from_i64s(&[-1, -1, -2, -5], &[t, t, t])
        );
    }

    #[test]
    fn lengths() {
        assert_eq!(alt("5T2T1T1").word_length(), BigUint::from(12u8));
        assert_eq!(AltWord::identity().word_length(), BigUint::zero());
        assert_eq!(alt("157").word_length(), BigUint::from(157u8));
    }

    #[test]
    fn heights_and_peaks() {
        let w = AltWord::from_i64s(&[0, 0, 0], &[t, Tt]);
        assert_eq!(w.height_profile(), vec![0, 1, 0]);
        assert_eq!(w.height(), 1);
        assert_eq!(alt("7").height_profile(), vec![0]);
        assert_eq!(alt("7").height(), 0);
        let v = alt("1T1t1");
        assert_eq!(v.height_profile(), vec![0, -1, 0]);
        assert_eq!(v.height(), 0);
        assert_eq!(v.peak_position(), 2);
        assert_eq!(alt("7").peak_position(), 0);
        assert_eq!(alt("t5T").peak_position(), 1);
    }

    #[test]
    fn sinks_and_peaks_counts() {
        assert_eq!(alt("9").sink_count(), 1);
        assert_eq!(alt("9").peak_count(), 1);
        assert_eq!(
            AltWord::from_i64s(&[0, 0, 0, 0], &[Tt, t, Tt]).sink_count(),
            2
        );
        assert_eq!(AltWord::from_i64s(&[0, 0], &[t]).sink_count(), 1);
    }

    #[test]
    fn ll_order() {
        let x = parse_word("taTA").unwrap();
        let y = parse_word("AAAA").unwrap();
        assert_eq!(cmp_ll(&x, &y), Ordering::Less);
        let a = parse_word("a").unwrap();
        assert_eq!(cmp_ll(&a, &a), Ordering::Equal);
        assert_eq!(
            cmp_ll(&parse_word("t").unwrap(), &parse_word("aa").unwrap()),
            Ordering::Less
        );
    }

    #[test]
    fn delta_order() {
        assert_eq!(Theta::T.cmp(&Theta::TInv), Ordering::Less);
        assert_eq!(
            cmp_delta_int(&BigInt::from(2), &BigInt::from(-2)),
            Ordering::Less
        );
        assert_eq!(
            cmp_delta_int(&BigInt::from(-1), &BigInt::from(2)),
            Ordering::Less
        );
        assert_eq!(cmp_delta(&alt("1t"), &alt("2")), Ordering::Greater);
        assert_eq!(cmp_delta(&alt("t"), &alt("T")), Ordering::Less);
    }

    #[test]
    fn folded_notation() {
        assert_eq!(
            parse_word("ttttaaTTTATAA").unwrap().notation_folded(),
            "t^4 2TTT-1T-2"
        );
        assert_eq!(parse_word("tt1TT").unwrap().notation_folded(), "tt1TT");
        assert_eq!(parse_word("ttt").unwrap().notation_folded(), "t^3");
        assert_eq!(
            parse_word(&parse_word("ttttaaTTTATAA").unwrap().notation_folded()).unwrap(),
            parse_word("ttttaaTTTATAA").unwrap()
        );
    }
}
