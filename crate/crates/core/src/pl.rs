//! Piecewise-linear homeomorphisms of `[0,1]` and of the circle `[0,1)`
//! with dyadic breakpoints and power-of-two slopes.

use alloc::vec::Vec;
use core::fmt;

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlKind {
    Interval,
    Circle,
}

/// A map given by points `(x, f(x))`, linear in between.
///
/// Interval maps list `(0,0)` first and `(1,1)` last. Circle maps list
/// inputs in `[0,1)` in increasing order with outputs reduced mod 1.
#[derive(Clone, Debug)]
pub struct PlMap {
    kind: PlKind,
    points: Vec<(Dyadic, Dyadic)>,
}

impl PlMap {
    pub fn new(kind: PlKind, mut points: Vec<(Dyadic, Dyadic)>) -> Result<PlMap> {
        let bad = |m: &str| Err(Error::NotInFamily(alloc::format!("not a dyadic PL map: {m}")));
        points.sort();
        points.dedup();
        if points.windows(2).any(|w| w[0].0 == w[1].0) {
            return bad("two values at one point");
        }
        match kind {
            PlKind::Interval => {
                if points.first() != Some(&(Dyadic::ZERO, Dyadic::ZERO)) || points.last() != Some(&(Dyadic::ONE, Dyadic::ONE)) {
                    return bad("interval maps must fix 0 and 1");
                }
            }
            PlKind::Circle => {
                if points.is_empty() {
                    return bad("no points");
                }
                for p in &mut points {
                    if p.0 < Dyadic::ZERO || p.0 >= Dyadic::ONE {
                        return bad("circle inputs must lie in [0,1)");
                    }
                    p.1 = p.1.frac();
                }
            }
        }
        let f = PlMap { kind, points };
        for i in 0..f.segments() {
            let ((x0, y0), (x1, y1)) = f.segment(i);
            if Dyadic::slope_log2(x0, x1, y0, y1).is_none() {
                return bad("slopes must be positive powers of two");
            }
        }
        Ok(f)
    }

    pub fn identity(kind: PlKind) -> PlMap {
        let points = match kind {
            PlKind::Interval => alloc::vec![(Dyadic::ZERO, Dyadic::ZERO), (Dyadic::ONE, Dyadic::ONE)],
            PlKind::Circle => alloc::vec![(Dyadic::ZERO, Dyadic::ZERO)],
        };
        PlMap { kind, points }
    }

    pub fn kind(&self) -> PlKind {
        self.kind
    }

    /// The defining points, as given.
    pub fn points(&self) -> &[(Dyadic, Dyadic)] {
        &self.points
    }

    fn segments(&self) -> usize {
        match self.kind {
            PlKind::Interval => self.points.len() - 1,
            PlKind::Circle => self.points.len(),
        }
    }

    /// Segment `i` with the end lifted so that both coordinates increase.
    fn segment(&self, i: usize) -> ((Dyadic, Dyadic), (Dyadic, Dyadic)) {
        let a = self.points[i];
        match self.kind {
            PlKind::Interval => (a, self.points[i + 1]),
            PlKind::Circle => {
                let (mut bx, mut by) = self.points[(i + 1) % self.points.len()];
                if i + 1 == self.points.len() {
                    bx = bx + Dyadic::ONE;
                }
                while by <= a.1 {
                    by = by + Dyadic::ONE;
                }
                (a, (bx, by))
            }
        }
    }

    pub fn apply(&self, x: Dyadic) -> Dyadic {
        let x = match self.kind {
            PlKind::Interval => x,
            PlKind::Circle => x.frac(),
        };
        let n = self.segments();
        let i = match self.points.binary_search_by(|p| p.0.cmp(&x)) {
            Ok(i) => return self.points[i].1,
            Err(0) => n - 1,
            Err(i) => i - 1,
        };
        let ((x0, y0), (x1, y1)) = self.segment(i);
        let x = if x < x0 { x + Dyadic::ONE } else { x };
        let k = Dyadic::slope_log2(x0, x1, y0, y1).expect("checked");
        let y = y0 + (x - x0).scale_pow2(k);
        match self.kind {
            PlKind::Interval => y,
            PlKind::Circle => y.frac(),
        }
    }

    pub fn inverse(&self) -> PlMap {
        let mut pts: Vec<_> = self.points.iter().map(|&(x, y)| (y, x)).collect();
        pts.sort();
        PlMap { kind: self.kind, points: pts }
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &PlMap) -> PlMap {
        assert_eq!(self.kind, g.kind, "composing interval and circle maps");
        let gi = g.inverse();
        let mut xs: Vec<Dyadic> = g.points.iter().map(|p| p.0).collect();
        xs.extend(self.points.iter().map(|p| gi.apply(p.0)));
        xs.sort();
        xs.dedup();
        let points = xs.into_iter().map(|x| (x, self.apply(g.apply(x)))).collect();
        PlMap { kind: self.kind, points }
    }

    /// The same map with every non-breakpoint removed.
    pub fn simplified(&self) -> PlMap {
        let n = self.segments();
        let slopes: Vec<i32> = (0..n)
            .map(|i| {
                let ((x0, y0), (x1, y1)) = self.segment(i);
                Dyadic::slope_log2(x0, x1, y0, y1).expect("checked")
            })
            .collect();
        let mut keep = Vec::new();
        match self.kind {
            PlKind::Interval => {
                for (i, &p) in self.points.iter().enumerate() {
                    if i == 0 || i == n || slopes[i - 1] != slopes[i] {
                        keep.push(p);
                    }
                }
            }
            PlKind::Circle => {
                for (i, &p) in self.points.iter().enumerate() {
                    if slopes[(i + n - 1) % n] != slopes[i] {
                        keep.push(p);
                    }
                }
                if keep.is_empty() {
                    keep.push((Dyadic::ZERO, self.apply(Dyadic::ZERO)));
                }
            }
        }
        PlMap { kind: self.kind, points: keep }
    }

    /// Breakpoints of the simplified map.
    pub fn breakpoints(&self) -> Vec<(Dyadic, Dyadic)> {
        self.simplified().points
    }

    pub fn is_identity(&self) -> bool {
        *self == PlMap::identity(self.kind)
    }
}

impl PartialEq for PlMap {
    /// Equality as functions.
    fn eq(&self, other: &PlMap) -> bool {
        self.kind == other.kind && self.simplified().points == other.simplified().points
    }
}

impl Eq for PlMap {}

impl fmt::Display for PlMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (x, y)) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "({x},{y})")?;
        }
        Ok(())
    }
}

/// A point written as two `(numerator, exponent)` pairs.
pub type RawPoint = ((i64, u32), (i64, u32));

/// Shorthand: points from `(num, exp)` pairs.
pub fn points(raw: &[RawPoint]) -> Vec<(Dyadic, Dyadic)> {
    raw.iter().map(|&((a, b), (c, d))| (Dyadic::new(a, b), Dyadic::new(c, d))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x0() -> PlMap {
        PlMap::new(PlKind::Interval, points(&[((0, 0), (0, 0)), ((1, 2), (1, 1)), ((1, 1), (3, 2)), ((1, 0), (1, 0))])).unwrap()
    }

    #[test]
    fn inverse_composes_to_identity() {
        let f = x0();
        assert!(f.compose(&f.inverse()).is_identity());
        assert!(f.inverse().compose(&f).is_identity());
    }

    #[test]
    fn circle_rotation() {
        let r = PlMap::new(PlKind::Circle, points(&[((0, 0), (1, 1)), ((1, 1), (0, 0))])).unwrap();
        assert!(r.compose(&r).is_identity());
        assert_eq!(r.apply(Dyadic::new(3, 2)), Dyadic::new(1, 2));
        assert_eq!(r.breakpoints().len(), 1);
    }

    #[test]
    fn rejects_bad_slopes() {
        assert!(PlMap::new(PlKind::Interval, points(&[((0, 0), (0, 0)), ((1, 2), (3, 2)), ((1, 0), (1, 0))])).is_err());
    }
}
