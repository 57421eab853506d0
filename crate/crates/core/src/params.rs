use std::fmt;

use crate::error::{Error, Result};

/// The pair `(p, q)` selecting the group `BS(p, q) = <a, t | t a^p t^-1 = a^q>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupParams {
    p: u64,
    q: u64,
}

impl GroupParams {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 || p >= q {
            return Err(Error::InvalidParams { p, q });
        }
        Ok(GroupParams { p, q })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn q(&self) -> u64 {
        self.q
    }

    /// True iff `p | q`, the case with a complete polynomial-time solution.
    #[inline]
    pub fn divides(&self) -> bool {
        self.q.is_multiple_of(self.p)
    }

    /// Least positive `r` with `r >= p (r + q - 1) / q + q - 1`.
    ///
    /// Bounds the carry window of the slope DP and of the flank DP around a
    /// hill or difficult core.
    pub fn r_llnf(&self) -> u64 {
        least_r(self.p, self.q, self.q - 1, self.q - 1)
    }

    /// Least positive `r` with `r >= p (r + 3q - 2) / q`, the window constant
    /// for valley ranges.
    pub fn r_valley(&self) -> u64 {
        least_r(self.p, self.q, 3 * self.q - 2, 0)
    }

    pub(crate) fn p_i64(&self) -> i64 {
        self.p as i64
    }

    pub(crate) fn q_i64(&self) -> i64 {
        self.q as i64
    }
}

/// Least positive integer `r` with `r >= p (r + c) / q + extra`.
fn least_r(p: u64, q: u64, c: u64, extra: u64) -> u64 {
    // r q >= p (r + c) + extra q  <=>  r (q - p) >= p c + extra q
    let num = p * c + extra * q;
    let den = q - p;
    num.div_ceil(den).max(1)
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BS({},{})", self.p, self.q)
    }
}
