//! Integer intervals with infinite endpoints.

use std::fmt;

/// An integer extended by `-inf` and `+inf`. The derived order is the usual one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtInt {
    NegInf,
    Finite(i64),
    PosInf,
}

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// Translation by a finite amount; infinities are fixed.
    pub fn offset(self, by: i64) -> ExtInt {
        match self {
            ExtInt::Finite(v) => {
                ExtInt::Finite(v.checked_add(by).expect("twist arithmetic overflow"))
            }
            inf => inf,
        }
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => f.write_str("-inf"),
            ExtInt::Finite(v) => write!(f, "{v}"),
            ExtInt::PosInf => f.write_str("+inf"),
        }
    }
}

/// A set `{t : lo <= t <= hi}` of integers. Every empty interval is stored as
/// `[+inf, -inf]`, so equality is set equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwistInterval {
    lo: ExtInt,
    hi: ExtInt,
}

impl TwistInterval {
    pub const EMPTY: TwistInterval = TwistInterval {
        lo: ExtInt::PosInf,
        hi: ExtInt::NegInf,
    };

    pub const ALL: TwistInterval = TwistInterval {
        lo: ExtInt::NegInf,
        hi: ExtInt::PosInf,
    };

    pub fn new(lo: ExtInt, hi: ExtInt) -> Self {
        // A finite set of integers can't have an infinite endpoint on its own
        // side: [+inf, x] and [x, -inf] hold no integers.
        if lo > hi || lo == ExtInt::PosInf || hi == ExtInt::NegInf {
            Self::EMPTY
        } else {
            Self { lo, hi }
        }
    }

    pub fn closed(lo: i64, hi: i64) -> Self {
        Self::new(ExtInt::Finite(lo), ExtInt::Finite(hi))
    }

    pub fn point(t: i64) -> Self {
        Self::closed(t, t)
    }

    pub fn at_least(lo: i64) -> Self {
        Self::new(ExtInt::Finite(lo), ExtInt::PosInf)
    }

    pub fn at_most(hi: i64) -> Self {
        Self::new(ExtInt::NegInf, ExtInt::Finite(hi))
    }

    pub fn lo(&self) -> ExtInt {
        self.lo
    }

    pub fn hi(&self) -> ExtInt {
        self.hi
    }

    pub fn is_empty(&self) -> bool {
        *self == Self::EMPTY
    }

    /// Empty, or both endpoints finite.
    pub fn is_bounded(&self) -> bool {
        self.is_empty() || (self.lo.finite().is_some() && self.hi.finite().is_some())
    }

    pub fn contains(&self, t: i64) -> bool {
        !self.is_empty() && self.lo <= ExtInt::Finite(t) && ExtInt::Finite(t) <= self.hi
    }

    pub fn intersect(&self, other: &TwistInterval) -> TwistInterval {
        Self::new(self.lo.max(other.lo), self.hi.min(other.hi))
    }
}

impl fmt::Display for TwistInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("{}")
        } else if self.lo == self.hi {
            write!(f, "{{{}}}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}
