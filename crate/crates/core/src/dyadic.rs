//! Exact dyadic rationals `n / 2^k`.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::error::Error;

/// A dyadic rational kept in lowest terms: the numerator is odd unless the
/// exponent is zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: i64,
    exp: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, exp: 0 };
    pub const ONE: Dyadic = Dyadic { num: 1, exp: 0 };
    pub const HALF: Dyadic = Dyadic { num: 1, exp: 1 };

    /// `num / 2^exp`, normalised.
    pub fn new(num: i64, exp: u32) -> Dyadic {
        let mut d = Dyadic { num, exp };
        d.normalize();
        d
    }

    pub fn from_int(n: i64) -> Dyadic {
        Dyadic { num: n, exp: 0 }
    }

    fn normalize(&mut self) {
        if self.num == 0 {
            self.exp = 0;
            return;
        }
        let tz = self.num.trailing_zeros().min(self.exp);
        self.num >>= tz;
        self.exp -= tz;
    }

    pub fn numerator(self) -> i64 {
        self.num
    }

    /// Exponent `k` of the reduced denominator `2^k`.
    pub fn exponent(self) -> u32 {
        self.exp
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn half(self) -> Dyadic {
        Dyadic::new(self.num, self.exp + 1)
    }

    pub fn mid(self, other: Dyadic) -> Dyadic {
        (self + other).half()
    }

    /// Multiply by `2^k` (k may be negative).
    pub fn scale_pow2(self, k: i32) -> Dyadic {
        if k >= 0 {
            let k = k as u32;
            if k >= self.exp {
                Dyadic::new(self.num << (k - self.exp), 0)
            } else {
                Dyadic::new(self.num, self.exp - k)
            }
        } else {
            Dyadic::new(self.num, self.exp + (-k) as u32)
        }
    }

    /// Fractional part, in `[0, 1)`.
    pub fn frac(self) -> Dyadic {
        let m = 1i64 << self.exp;
        Dyadic::new(self.num.rem_euclid(m), self.exp)
    }

    pub fn floor(self) -> i64 {
        self.num.div_euclid(1i64 << self.exp)
    }

    /// `log2` of a dyadic that is a power of two.
    pub fn log2_exact(self) -> Option<i32> {
        if self.num <= 0 || self.num & (self.num - 1) != 0 {
            return None;
        }
        Some(self.num.trailing_zeros() as i32 - self.exp as i32)
    }

    /// Slope `(y1 - y0) / (x1 - x0)` when it is a power of two.
    pub fn slope_log2(x0: Dyadic, x1: Dyadic, y0: Dyadic, y1: Dyadic) -> Option<i32> {
        let dx = x1 - x0;
        let dy = y1 - y0;
        if dx.num <= 0 || dy.num <= 0 {
            return None;
        }
        let (a, b) = (dx.num, dy.num);
        if a & (a - 1) != 0 || b & (b - 1) != 0 {
            return None;
        }
        Some(
            (b.trailing_zeros() as i32 - dy.exp as i32) - (a.trailing_zeros() as i32 - dx.exp as i32),
        )
    }

    fn align(a: Dyadic, b: Dyadic) -> (i128, i128, u32) {
        let e = a.exp.max(b.exp);
        ((a.num as i128) << (e - a.exp), (b.num as i128) << (e - b.exp), e)
    }

    fn from_wide(n: i128, mut e: u32) -> Dyadic {
        let mut n = n;
        while e > 0 && n & 1 == 0 && n != 0 {
            n >>= 1;
            e -= 1;
        }
        if n == 0 {
            return Dyadic::ZERO;
        }
        Dyadic { num: i64::try_from(n).expect("dyadic numerator overflow"), exp: e }
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        let (a, b, e) = Dyadic::align(self, rhs);
        Dyadic::from_wide(a + b, e)
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        let (a, b, e) = Dyadic::align(self, rhs);
        Dyadic::from_wide(a - b, e)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { num: -self.num, exp: self.exp }
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Dyadic) -> Ordering {
        let (a, b, _) = Dyadic::align(*self, *other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Dyadic) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Integers print bare; everything else as `n/2^k`.
impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

impl core::str::FromStr for Dyadic {
    type Err = Error;

    /// Accepts `n`, `n/2^k` and `n/d` with `d` a power of two.
    fn from_str(s: &str) -> Result<Dyadic, Error> {
        let bad = || Error::Parse { offset: 0, message: alloc::format!("not a dyadic rational: {s:?}") };
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse::<i64>().map(Dyadic::from_int).map_err(|_| bad()),
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d = d.trim();
                let exp = if let Some(k) = d.strip_prefix("2^") {
                    k.parse::<u32>().map_err(|_| bad())?
                } else {
                    let d: i64 = d.parse().map_err(|_| bad())?;
                    if d <= 0 || d & (d - 1) != 0 {
                        return Err(bad());
                    }
                    d.trailing_zeros()
                };
                if exp > 62 {
                    return Err(bad());
                }
                Ok(Dyadic::new(n, exp))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalises() {
        assert_eq!(Dyadic::new(4, 3), Dyadic::new(1, 1));
        assert_eq!(Dyadic::new(0, 5), Dyadic::ZERO);
        assert_eq!(Dyadic::new(6, 0).exponent(), 0);
    }

    #[test]
    fn arithmetic() {
        let a = Dyadic::new(3, 2);
        let b = Dyadic::new(1, 3);
        assert_eq!(a + b, Dyadic::new(7, 3));
        assert_eq!(a - b, Dyadic::new(5, 3));
        assert_eq!(a.mid(b), Dyadic::new(7, 4));
        assert_eq!(Dyadic::new(7, 2).frac(), Dyadic::new(3, 2));
        assert_eq!(Dyadic::new(-1, 2).frac(), Dyadic::new(3, 2));
        assert!(b < a);
    }

    #[test]
    fn parse_and_print() {
        for s in ["0", "1", "3/2^2", "3/4", "-5/8"] {
            let d: Dyadic = s.parse().unwrap();
            let back: Dyadic = alloc::format!("{d}").parse().unwrap();
            assert_eq!(d, back);
        }
        assert!("1/3".parse::<Dyadic>().is_err());
        assert_eq!(alloc::format!("{}", Dyadic::new(3, 2)), "3/2^2");
    }

    #[test]
    fn slopes() {
        let s = Dyadic::slope_log2(Dyadic::ZERO, Dyadic::new(1, 2), Dyadic::ZERO, Dyadic::HALF);
        assert_eq!(s, Some(1));
        assert_eq!(Dyadic::new(1, 3).log2_exact(), Some(-3));
    }
}
