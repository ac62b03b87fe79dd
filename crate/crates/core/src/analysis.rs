//! Invariants of Airplane rearrangements: extremal derivatives, the
//! abelianization, rigid stabilizers and the subgroup `E`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::airplane::{
    self, geometry, outer_leaf, ray_root, require_airplane, EdgeGeometry, ExtremeId, BL, BR,
};
use crate::diagram::Diagram;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::pl::{PlKind, PlMap};
use crate::replacement::EdgeAddress;
use crate::systems::{BLUE, RED};
use crate::word::GeneratorTable;

/// `log2` of the extremal derivative at `p`: how many times the outermost
/// blue edge of the ray is halved in the image, minus in the source.
/// Zero when the ray is inside a domain cell.
pub fn log2_derivative_at(f: &Diagram, p: &ExtremeId) -> Result<i32> {
    require_airplane(f)?;
    let dom = f.domain();
    Ok(match outer_leaf(&dom, &p.0) {
        None => 0,
        Some(leaf) => {
            let img = &f.pairs()[&leaf].addr;
            airplane::blue_depth(img).expect("blue") as i32 - airplane::blue_depth(&leaf).expect("blue") as i32
        }
    })
}

/// Per-extreme derivatives over the extremes of the reduced domain.
pub fn derivative_table(f: &Diagram) -> Result<BTreeMap<ExtremeId, i32>> {
    require_airplane(f)?;
    let f = f.reduce();
    let dom = f.domain();
    let mut out = BTreeMap::new();
    for p in airplane::extremes(f.system(), &dom) {
        let d = log2_derivative_at(&f, &p)?;
        out.insert(p, d);
    }
    Ok(out)
}

/// `log2 D(f)`, the sum of all extremal derivative exponents.
pub fn log2_global_derivative(f: &Diagram) -> Result<i64> {
    Ok(derivative_table(f)?.values().map(|&d| d as i64).sum())
}

/// Image of `f` in the abelianization `Z`.
pub fn abelianization_image(f: &Diagram) -> Result<i64> {
    log2_global_derivative(f)
}

/// Membership in the commutator subgroup, which is the kernel of `D`.
pub fn is_in_commutator(f: &Diagram) -> Result<bool> {
    Ok(log2_global_derivative(f)? == 0)
}

/// Writes `f = c ∘ ε^k` with `D(c) = 1`, using `ε` from the table.
pub fn semidirect_split(f: &Diagram, gens: &GeneratorTable) -> Result<(Diagram, i64)> {
    let eps = gens.get("e").ok_or_else(|| Error::UnknownGenerator("e".into()))?;
    let unit = log2_global_derivative(eps)?;
    let total = log2_global_derivative(f)?;
    if unit == 0 || total % unit != 0 {
        return Err(Error::NotInFamily("derivative is not a multiple of the derivative of e".into()));
    }
    let k = total / unit;
    let c = f.compose(&eps.pow(-k)?)?;
    Ok((c, k))
}

/// Every extremal derivative is trivial.
pub fn is_in_e(f: &Diagram) -> Result<bool> {
    Ok(derivative_table(f)?.values().all(|&d| d == 0))
}

fn internal_colors(f: &Diagram) -> (bool, bool) {
    let sys = f.system();
    let (mut red, mut blue) = (false, false);
    for e in [f.domain(), f.range()] {
        for a in e.internal_nodes() {
            match sys.color_of(&a) {
                Some(RED) => red = true,
                _ => blue = true,
            }
        }
    }
    (red, blue)
}

/// The reduced diagram has no component besides the central one.
pub fn is_in_rist_central(f: &Diagram) -> Result<bool> {
    require_airplane(f)?;
    Ok(!internal_colors(&f.reduce()).1)
}

/// The reduced diagram has no ray besides the horizontal ones, and the left
/// end of the horizon stays on the left.
pub fn is_in_rist_horizon(f: &Diagram) -> Result<bool> {
    require_airplane(f)?;
    let f = f.reduce();
    if internal_colors(&f).0 {
        return Ok(false);
    }
    let left = airplane::map_extreme(&f, &ExtremeId(EdgeAddress::base(BL)));
    Ok(left.0 == EdgeAddress::base(BL))
}

/// Action on the boundary of the central component, as a circle map.
pub fn induced_boundary_map(f: &Diagram) -> Result<PlMap> {
    if !is_in_rist_central(f)? {
        return Err(Error::NotInFamily("not in the rigid stabilizer of the central component".into()));
    }
    let f = f.reduce();
    let mut pts = Vec::new();
    for (d, img) in f.pairs() {
        if let (EdgeGeometry::Red { from: a, .. }, EdgeGeometry::Red { from: b, .. }) = (geometry(d), geometry(&img.addr)) {
            pts.push((a, b));
        }
    }
    PlMap::new(PlKind::Circle, pts)
}

/// Coordinate on the horizon `[0,1]` of the lower end of a horizontal blue
/// edge: the left ray fills `[0,1/2]` from the outside in, the right ray
/// `[1/2,1]` from the inside out.
pub fn horizon_span(a: &EdgeAddress) -> Option<(Dyadic, Dyadic)> {
    match geometry(a) {
        EdgeGeometry::Blue { ray, lo, hi, .. } if ray.path.is_empty() => {
            let one = Dyadic::ONE;
            Some(if ray.base == BL {
                ((one - hi).half(), (one - lo).half())
            } else {
                debug_assert_eq!(ray.base, BR);
                ((one + lo).half(), (one + hi).half())
            })
        }
        _ => None,
    }
}

/// Action on the horizon, as an interval map.
pub fn induced_horizon_map(f: &Diagram) -> Result<PlMap> {
    if !is_in_rist_horizon(f)? {
        return Err(Error::NotInFamily("not in the rigid stabilizer of the horizon".into()));
    }
    let f = f.reduce();
    let sys = f.system();
    let mut pts = alloc::vec![(Dyadic::ONE, Dyadic::ONE)];
    for (d, img) in f.pairs() {
        if sys.color_of(d) == Some(BLUE) {
            let a = horizon_span(d).expect("horizontal");
            let b = horizon_span(&img.addr).expect("horizontal");
            pts.push((a.0, b.0));
        }
    }
    PlMap::new(PlKind::Interval, pts)
}

/// Ray root of a blue edge, exposed for callers that only have a diagram.
pub fn extreme_of(f: &Diagram, a: &EdgeAddress) -> ExtremeId {
    ExtremeId(ray_root(f.system(), a))
}
