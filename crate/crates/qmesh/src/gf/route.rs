//! Chooses an engine for a `(class, spec)` pair. All symmetry rewrites happen here.

use std::fmt;
use std::str::FromStr;

use super::closed::{closed_series_0k0l, closed_supported};
use super::{always_matching, never_matching, q123_0k00, q132_akel, q132_ekel};
use crate::error::Error;
use crate::mmp::{distribution, QuadrantSpec, Slot};
use crate::perm::Class;
use crate::series::{IntPoly, TSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    Auto,
    Brute,
    Recurrence,
    Closed,
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(Engine::Auto),
            "brute" => Ok(Engine::Brute),
            "recurrence" => Ok(Engine::Recurrence),
            "closed" => Ok(Engine::Closed),
            other => Err(format!("unknown engine {other:?} (auto, brute, recurrence, closed)")),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Auto => "auto",
            Engine::Brute => "brute",
            Engine::Recurrence => "recurrence",
            Engine::Closed => "closed",
        })
    }
}

/// A computed series with the engine that produced it.
#[derive(Clone, Debug)]
pub struct Routed {
    pub series: TSeries<IntPoly>,
    pub engine: Engine,
    /// Human-readable route, e.g. `q132_akel(1,1,1)`.
    pub via: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Plan {
    Always,
    Never,
    Full(u32, u32, u32),
    Hills(u32, u32),
    UpperLeft(u32),
}

impl Plan {
    fn run(self, trunc: usize) -> TSeries<IntPoly> {
        match self {
            Plan::Always => always_matching(trunc),
            Plan::Never => never_matching(trunc),
            Plan::Full(a, k, l) => q132_akel(a, k, l, trunc),
            Plan::Hills(k, l) => q132_ekel(k, l, trunc),
            Plan::UpperLeft(k) => q123_0k00(k, trunc),
        }
    }

    fn describe(self) -> String {
        match self {
            Plan::Always => "C(tx)".into(),
            Plan::Never => "C(t)".into(),
            Plan::Full(a, k, l) => format!("q132_akel({a},{k},{l})"),
            Plan::Hills(k, l) => format!("q132_ekel({k},{l})"),
            Plan::UpperLeft(k) => format!("q123_0k00({k})"),
        }
    }
}

fn plan(class: Class, spec: &QuadrantSpec) -> Option<Plan> {
    use Slot::{Count, Empty};
    let QuadrantSpec { upper_right: a, upper_left: b, lower_left: c, lower_right: d } = *spec;
    if spec.slots().iter().all(|s| *s == Count(0)) {
        return Some(Plan::Always);
    }
    let (Count(k), Count(l)) = (b, d) else {
        // an empty second or fourth slot is only resolved in the never-matching case
        return match (class, a, c) {
            (Class::Avoid123, Count(x), Count(y)) if x >= 1 && y >= 1 => Some(Plan::Never),
            _ => None,
        };
    };
    match class {
        Class::Avoid132 => match (a, c) {
            (Count(a), Empty) => Some(Plan::Full(a, k, l)),
            (Empty, Empty) => Some(Plan::Hills(k, l)),
            _ => None,
        },
        Class::Avoid123 => match (a, c) {
            (Count(x), Count(y)) if x >= 1 && y >= 1 => Some(Plan::Never),
            (Count(x), Count(0) | Empty) if x >= 1 => Some(Plan::Full(x, k, l)),
            // rotation by reverse-complement: (0|∅, m, k, l) has the series of (k, l, ∅, m)
            (Count(0) | Empty, Count(y)) if y >= 1 => Some(Plan::Full(y, l, k)),
            (Count(0), Count(0)) if l == 0 => Some(Plan::UpperLeft(k)),
            (Count(0), Count(0)) if k == 0 => Some(Plan::UpperLeft(l)),
            _ => None,
        },
    }
}

fn is_frame_shape(class: Class, spec: &QuadrantSpec) -> Option<(u32, u32)> {
    match (class, spec.slots()) {
        (Class::Avoid123, [Slot::Count(0), Slot::Count(k), Slot::Count(0), Slot::Count(l)]) => Some((k, l)),
        _ => None,
    }
}

fn brute(class: Class, spec: &QuadrantSpec, trunc: usize) -> TSeries<IntPoly> {
    TSeries::from_coeffs((0..=trunc).map(|n| distribution(n, class, spec)).collect(), trunc)
}

fn no_engine(class: Class, spec: &QuadrantSpec, engine: Engine, applicable: &[Engine]) -> Error {
    let names: Vec<String> = applicable.iter().map(Engine::to_string).collect();
    Error::NoEngine {
        class: class.to_string(),
        spec: spec.to_string(),
        hint: format!("engine {engine} does not cover it; applicable engines: {}", names.join(", ")),
    }
}

/// Engines able to serve `(class, spec)`, in preference order.
pub fn applicable_engines(class: Class, spec: &QuadrantSpec) -> Vec<Engine> {
    let mut out = Vec::new();
    if let Some((k, l)) = is_frame_shape(class, spec) {
        if closed_supported(k, l) {
            out.push(Engine::Closed);
        }
    }
    if plan(class, spec).is_some() {
        out.push(Engine::Recurrence);
    }
    if !out.is_empty() || is_frame_shape(class, spec).is_some() {
        out.insert(0, Engine::Auto);
    }
    out.push(Engine::Brute);
    out
}

/// Computes `Q^{spec}` over `S_n(class)` for `n <= trunc` with the requested engine.
///
/// `Auto` prefers the closed rows, then a recurrence, and falls back to enumeration
/// only for the `(0,k,0,l)` shape over 123-avoiders, which no recurrence covers.
pub fn compute(class: Class, spec: &QuadrantSpec, trunc: usize, engine: Engine) -> Result<Routed, Error> {
    let frame = is_frame_shape(class, spec);
    let closed = frame.filter(|&(k, l)| closed_supported(k, l));
    match engine {
        Engine::Brute => Ok(Routed { series: brute(class, spec, trunc), engine, via: "enumeration".into() }),
        Engine::Closed => match closed {
            Some((k, l)) => {
                Ok(Routed { series: closed_series_0k0l(k, l, trunc)?, engine, via: format!("closed_0k0l({k},{l})") })
            }
            None => Err(no_engine(class, spec, engine, &applicable_engines(class, spec))),
        },
        Engine::Recurrence => match plan(class, spec) {
            Some(p) => Ok(Routed { series: p.run(trunc), engine, via: p.describe() }),
            None => Err(no_engine(class, spec, engine, &applicable_engines(class, spec))),
        },
        Engine::Auto => {
            if closed.is_some() {
                return compute(class, spec, trunc, Engine::Closed);
            }
            if plan(class, spec).is_some() {
                return compute(class, spec, trunc, Engine::Recurrence);
            }
            if frame.is_some() {
                return compute(class, spec, trunc, Engine::Brute);
            }
            Err(no_engine(class, spec, engine, &applicable_engines(class, spec)))
        }
    }
}

/// `Q^{spec}` over 123-avoiders by the cheapest covering engine.
pub fn transport_123(spec: &QuadrantSpec, trunc: usize) -> Result<TSeries<IntPoly>, Error> {
    compute(Class::Avoid123, spec, trunc, Engine::Auto).map(|r| r.series)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> QuadrantSpec {
        s.parse().unwrap()
    }

    #[test]
    fn routes() {
        let r = compute(Class::Avoid123, &spec("1,1,0,1"), 8, Engine::Auto).unwrap();
        assert_eq!(r.via, "q132_akel(1,1,1)");
        assert_eq!(r.series, q132_akel(1, 1, 1, 8));
        assert_eq!(compute(Class::Avoid123, &spec("0,1,2,0"), 6, Engine::Auto).unwrap().via, "q132_akel(2,0,1)");
        assert_eq!(compute(Class::Avoid123, &spec("0,1,0,1"), 6, Engine::Auto).unwrap().engine, Engine::Closed);
        assert_eq!(compute(Class::Avoid123, &spec("0,3,0,1"), 6, Engine::Auto).unwrap().engine, Engine::Brute);
        assert_eq!(compute(Class::Avoid123, &spec("1,0,1,0"), 6, Engine::Auto).unwrap().via, "C(t)");
        assert!(compute(Class::Avoid132, &spec("0,1,0,0"), 6, Engine::Auto).is_err());
        assert!(compute(Class::Avoid132, &spec("0,1,0,0"), 6, Engine::Closed).is_err());
    }

    #[test]
    fn auto_agrees_with_brute() {
        for s in ["0,1,2,0", "e,1,1,2", "2,0,e,1", "0,0,0,2", "1,1,0,1", "1,e,1,0", "0,2,0,1"] {
            let s = spec(s);
            let auto = transport_123(&s, 8).unwrap();
            assert_eq!(auto, brute(Class::Avoid123, &s, 8), "{s}");
        }
        for s in ["e,2,e,1", "1,2,e,0", "0,0,e,3"] {
            let s = spec(s);
            let auto = compute(Class::Avoid132, &s, 8, Engine::Auto).unwrap().series;
            assert_eq!(auto, brute(Class::Avoid132, &s, 8), "{s}");
        }
    }
}
