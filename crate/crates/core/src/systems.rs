//! Built-in replacement systems and their generators.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{Diagram, Image};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::pl::{PlKind, PlMap};
use crate::replacement::{graph, EdgeAddress, ReplacementSystem, Rule};
use crate::word::GeneratorTable;

pub const RED: u8 = 0;
pub const BLUE: u8 = 1;

fn colors(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| String::from(*s)).collect()
}

/// The Airplane system.
///
/// Base: the central 2-cycle `rT: R→L`, `rB: L→R` (counterclockwise) with
/// horizontal blue rays `bL: L→farL` and `bR: R→farR`. A red edge becomes
/// two red halves and a blue ray at the midpoint; a blue edge becomes a
/// small red circle between two blue halves.
pub fn airplane() -> Arc<ReplacementSystem> {
    let base = graph(
        &["L", "R", "farL", "farR"],
        &[("bL", 0, 2, BLUE), ("bR", 1, 3, BLUE), ("rT", 1, 0, RED), ("rB", 0, 1, RED)],
    );
    let red = Rule {
        graph: graph(&["vi", "vt", "m", "x"], &[("0", 0, 2, RED), ("1", 2, 1, RED), ("2", 2, 3, BLUE)]),
        initial: 0,
        terminal: 1,
    };
    let blue = Rule {
        graph: graph(
            &["vi", "vt", "p", "q"],
            &[("0", 2, 0, BLUE), ("1", 3, 2, RED), ("2", 2, 3, RED), ("3", 3, 1, BLUE)],
        ),
        initial: 0,
        terminal: 1,
    };
    Arc::new(ReplacementSystem::new("airplane", colors(&["red", "blue"]), base, vec![red, blue]).expect("airplane"))
}

/// The Basilica system: a central 2-cycle `t: 0→1`, `b: 1→0` with a loop at
/// each vertex; every edge becomes a 2-path with a loop at its midpoint.
pub fn basilica() -> Arc<ReplacementSystem> {
    let base = graph(&["0", "1"], &[("t", 0, 1, 0), ("b", 1, 0, 0), ("l", 0, 0, 0), ("r", 1, 1, 0)]);
    let rule = Rule {
        graph: graph(&["vi", "vt", "m"], &[("0", 0, 2, 0), ("1", 2, 1, 0), ("2", 2, 2, 0)]),
        initial: 0,
        terminal: 1,
    };
    Arc::new(ReplacementSystem::new("basilica", colors(&["edge"]), base, vec![rule]).expect("basilica"))
}

/// The unit interval: one edge, split in halves.
pub fn interval() -> Arc<ReplacementSystem> {
    let base = graph(&["0", "1"], &[("e", 0, 1, 0)]);
    let rule = Rule { graph: graph(&["vi", "vt", "m"], &[("0", 0, 2, 0), ("1", 2, 1, 0)]), initial: 0, terminal: 1 };
    Arc::new(ReplacementSystem::new("interval", colors(&["edge"]), base, vec![rule]).expect("interval"))
}

/// The circle: a 2-cycle `a: 0→1` (angles `[0,1/2]`), `b: 1→0`, edges split
/// in halves.
pub fn circle() -> Arc<ReplacementSystem> {
    let base = graph(&["0", "1"], &[("a", 0, 1, 0), ("b", 1, 0, 0)]);
    let rule = Rule { graph: graph(&["vi", "vt", "m"], &[("0", 0, 2, 0), ("1", 2, 1, 0)]), initial: 0, terminal: 1 };
    Arc::new(ReplacementSystem::new("circle", colors(&["edge"]), base, vec![rule]).expect("circle"))
}

/// The circular Airplane: a 6-cycle `k0 … k5` (blue, red, blue, blue, red,
/// blue) traversed counterclockwise from the right tip. Red edges become
/// red-blue-blue-red paths, blue edges blue-red-blue paths.
pub fn circular_airplane() -> Arc<ReplacementSystem> {
    let base = graph(
        &["r", "1", "2", "l", "4", "5"],
        &[
            ("k0", 0, 1, BLUE),
            ("k1", 1, 2, RED),
            ("k2", 2, 3, BLUE),
            ("k3", 3, 4, BLUE),
            ("k4", 4, 5, RED),
            ("k5", 5, 0, BLUE),
        ],
    );
    let red = Rule {
        graph: graph(
            &["vi", "vt", "a", "b", "c"],
            &[("0", 0, 2, RED), ("1", 2, 3, BLUE), ("2", 3, 4, BLUE), ("3", 4, 1, RED)],
        ),
        initial: 0,
        terminal: 1,
    };
    let blue = Rule {
        graph: graph(&["vi", "vt", "a", "b"], &[("0", 0, 2, BLUE), ("1", 2, 3, RED), ("2", 3, 1, BLUE)]),
        initial: 0,
        terminal: 1,
    };
    Arc::new(
        ReplacementSystem::new("circular-airplane", colors(&["red", "blue"]), base, vec![red, blue])
            .expect("circular airplane"),
    )
}

/// An edge written as base edge name and path.
pub type Side<'a> = (&'a str, &'a [u8]);

/// Builds a diagram from `(domain, range, flipped)` triples written as
/// `(base name, path)`.
pub fn diagram_from(
    sys: &Arc<ReplacementSystem>,
    pairs: &[(Side<'_>, Side<'_>, bool)],
) -> Diagram {
    Diagram::new(
        sys.clone(),
        pairs.iter().map(|&((dn, dp), (rn, rp), flipped)| (sys.addr(dn, dp), Image { addr: sys.addr(rn, rp), flipped })),
    )
    .expect("built-in diagram is valid")
}

fn fixed<'a>(names: &[&'a str]) -> Vec<(Side<'a>, Side<'a>, bool)> {
    names.iter().map(|&n| ((n, &[][..]), (n, &[][..]), false)).collect()
}

/// Generators of the Airplane group, named `a b g d e` with the aliases
/// `alpha beta gamma delta epsilon`.
pub fn airplane_generators() -> GeneratorTable {
    let s = airplane();
    let mut t = GeneratorTable::new(s.clone());
    // α: shifts the horizontal line one component to the right
    let alpha = diagram_from(
        &s,
        &[
            (("bL", &[3]), ("bL", &[]), false),
            (("bL", &[1]), ("rB", &[]), false),
            (("bL", &[2]), ("rT", &[]), false),
            (("bL", &[0]), ("bR", &[0]), true),
            (("rT", &[]), ("bR", &[1]), false),
            (("rB", &[]), ("bR", &[2]), false),
            (("bR", &[]), ("bR", &[3]), false),
        ],
    );
    let mut beta_pairs = vec![
        (("rT", &[][..]), ("rT", &[0][..]), false),
        (("rB", &[0]), ("rT", &[1]), false),
        (("rB", &[1]), ("rB", &[]), false),
        (("bL", &[]), ("rT", &[2]), false),
        (("rB", &[2]), ("bL", &[]), false),
    ];
    beta_pairs.extend(fixed(&["bR"]));
    let beta = diagram_from(&s, &beta_pairs);
    let mut gamma_pairs = vec![
        (("rT", &[0][..]), ("rT", &[0, 0][..]), false),
        (("rT", &[1, 0]), ("rT", &[0, 1]), false),
        (("rT", &[1, 1]), ("rT", &[1]), false),
        (("rT", &[2]), ("rT", &[0, 2]), false),
        (("rT", &[1, 2]), ("rT", &[2]), false),
    ];
    gamma_pairs.extend(fixed(&["bL", "bR", "rB"]));
    let gamma = diagram_from(&s, &gamma_pairs);
    let delta = diagram_from(
        &s,
        &[
            (("bL", &[]), ("bR", &[]), false),
            (("bR", &[]), ("bL", &[]), false),
            (("rT", &[]), ("rB", &[]), false),
            (("rB", &[]), ("rT", &[]), false),
        ],
    );
    let mut eps_pairs = vec![
        (("bR", &[0, 3][..]), ("bR", &[0][..]), false),
        (("bR", &[0, 1]), ("bR", &[2]), false),
        (("bR", &[0, 2]), ("bR", &[1]), false),
        (("bR", &[0, 0]), ("bR", &[3, 0]), true),
        (("bR", &[1]), ("bR", &[3, 1]), false),
        (("bR", &[2]), ("bR", &[3, 2]), false),
        (("bR", &[3]), ("bR", &[3, 3]), false),
    ];
    eps_pairs.extend(fixed(&["bL", "rT", "rB"]));
    let epsilon = diagram_from(&s, &eps_pairs);
    t.add(&["a", "alpha"], alpha);
    t.add(&["b", "beta"], beta);
    t.add(&["g", "gamma"], gamma);
    t.add(&["d", "delta"], delta);
    t.add(&["e", "epsilon"], epsilon);
    t
}

/// Generators of the Basilica group, named like their Airplane partners
/// `a b g d`.
pub fn basilica_generators() -> GeneratorTable {
    let s = basilica();
    let mut t = GeneratorTable::new(s.clone());
    let a = diagram_from(
        &s,
        &[
            (("l", &[0]), ("b", &[]), false),
            (("l", &[1]), ("t", &[]), false),
            (("l", &[2]), ("l", &[]), false),
            (("t", &[]), ("r", &[0]), false),
            (("b", &[]), ("r", &[1]), false),
            (("r", &[]), ("r", &[2]), false),
        ],
    );
    let b = diagram_from(
        &s,
        &[
            (("t", &[]), ("t", &[1]), false),
            (("b", &[0]), ("b", &[]), false),
            (("b", &[1]), ("t", &[0]), false),
            (("b", &[2]), ("l", &[]), false),
            (("l", &[]), ("t", &[2]), false),
            (("r", &[]), ("r", &[]), false),
        ],
    );
    let mut g_pairs = vec![
        (("t", &[0, 0][..]), ("t", &[0][..]), false),
        (("t", &[0, 1]), ("t", &[1, 0]), false),
        (("t", &[1]), ("t", &[1, 1]), false),
        (("t", &[0, 2]), ("t", &[2]), false),
        (("t", &[2]), ("t", &[1, 2]), false),
    ];
    g_pairs.extend(fixed(&["b", "l", "r"]));
    let g = diagram_from(&s, &g_pairs);
    let d = diagram_from(
        &s,
        &[
            (("t", &[]), ("b", &[]), false),
            (("b", &[]), ("t", &[]), false),
            (("l", &[]), ("r", &[]), false),
            (("r", &[]), ("l", &[]), false),
        ],
    );
    t.add(&["a"], a);
    t.add(&["b"], b);
    t.add(&["g"], g);
    t.add(&["d"], d);
    t
}

/// Thompson's group F on the interval: `x0`, `x1`.
pub fn interval_generators() -> GeneratorTable {
    let s = interval();
    let mut t = GeneratorTable::new(s.clone());
    t.add(
        &["x0"],
        diagram_from(
            &s,
            &[(("e", &[0, 0]), ("e", &[0]), false), (("e", &[0, 1]), ("e", &[1, 0]), false), (("e", &[1]), ("e", &[1, 1]), false)],
        ),
    );
    t.add(
        &["x1"],
        diagram_from(
            &s,
            &[
                (("e", &[0]), ("e", &[0]), false),
                (("e", &[1, 0, 0]), ("e", &[1, 0]), false),
                (("e", &[1, 0, 1]), ("e", &[1, 1, 0]), false),
                (("e", &[1, 1]), ("e", &[1, 1, 1]), false),
            ],
        ),
    );
    t
}

/// Thompson's group T on the circle: `y0`, `y1`, `y2`.
pub fn circle_generators() -> GeneratorTable {
    let s = circle();
    let mut t = GeneratorTable::new(s.clone());
    t.add(
        &["y0"],
        diagram_from(
            &s,
            &[(("a", &[]), ("a", &[0]), false), (("b", &[0]), ("a", &[1]), false), (("b", &[1]), ("b", &[]), false)],
        ),
    );
    t.add(
        &["y1"],
        diagram_from(
            &s,
            &[
                (("a", &[0]), ("a", &[0, 0]), false),
                (("a", &[1, 0]), ("a", &[0, 1]), false),
                (("a", &[1, 1]), ("a", &[1]), false),
                (("b", &[]), ("b", &[]), false),
            ],
        ),
    );
    t.add(&["y2"], diagram_from(&s, &[(("a", &[]), ("b", &[]), false), (("b", &[]), ("a", &[]), false)]));
    t
}

/// Looks up a built-in system by name.
pub fn builtin(name: &str) -> Option<Arc<ReplacementSystem>> {
    match name {
        "airplane" => Some(airplane()),
        "basilica" => Some(basilica()),
        "interval" => Some(interval()),
        "circle" => Some(circle()),
        "circular-airplane" => Some(circular_airplane()),
        _ => None,
    }
}

/// Generator table of a built-in system, where one exists.
pub fn builtin_generators(name: &str) -> Option<GeneratorTable> {
    match name {
        "airplane" => Some(airplane_generators()),
        "basilica" => Some(basilica_generators()),
        "interval" => Some(interval_generators()),
        "circle" => Some(circle_generators()),
        _ => None,
    }
}

pub const BUILTIN_NAMES: [&str; 5] = ["airplane", "basilica", "interval", "circle", "circular-airplane"];

/// Convenience: an address in a system by base name and path.
pub fn at(sys: &ReplacementSystem, name: &str, path: &[u8]) -> EdgeAddress {
    sys.addr(name, path)
}

fn halving_span(start: (Dyadic, Dyadic), path: &[u8]) -> (Dyadic, Dyadic) {
    let (mut lo, mut hi) = start;
    for &s in path {
        let mid = lo.mid(hi);
        if s == 0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

/// The map of `[0,1]` drawn by a diagram over the interval system.
pub fn interval_map(f: &Diagram) -> Result<PlMap> {
    if f.system().name() != "interval" {
        return Err(Error::NotInFamily("expected an interval diagram".into()));
    }
    let span = |a: &EdgeAddress| halving_span((Dyadic::ZERO, Dyadic::ONE), &a.path);
    let mut pts = vec![(Dyadic::ONE, Dyadic::ONE)];
    pts.extend(f.pairs().iter().map(|(d, i)| (span(d).0, span(&i.addr).0)));
    PlMap::new(PlKind::Interval, pts)
}

/// The map of the circle drawn by a diagram over the circle system.
pub fn circle_map(f: &Diagram) -> Result<PlMap> {
    if f.system().name() != "circle" {
        return Err(Error::NotInFamily("expected a circle diagram".into()));
    }
    let span = |a: &EdgeAddress| {
        let start = if a.base == 0 { (Dyadic::ZERO, Dyadic::HALF) } else { (Dyadic::HALF, Dyadic::ONE) };
        halving_span(start, &a.path)
    };
    PlMap::new(PlKind::Circle, f.pairs().iter().map(|(d, i)| (span(d).0, span(&i.addr).0)).collect())
}
