//! Generating-function engines for `Q^{(a,b,c,d)}(t, x)`.
//!
//! Engines named `q132_*` compute series over 132-avoiders with an empty third
//! quadrant; `q123_*` work over 123-avoiders. Each result is memoized per
//! `(engine, parameters, truncation)` in a thread-local table.

mod closed;
pub mod printed;
mod route;

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;

use crate::series::{
    catalan, catalan_i, catalan_segment, catalan_series, narayana, solve_quadratic, BiPoly, Coefficient, IntPoly,
    TSeries,
};

pub use closed::{
    closed_coeff_0k0l, closed_series_0k0l, closed_subject, closed_supported, closed_threshold, extremal_coeff,
    ExtremalFamily,
};
pub use route::{applicable_engines, compute, transport_123, Engine, Routed};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Kind {
    Base,
    UpperRightRow,
    UpperLeftRow,
    UpperRightLeft,
    UpperLeftLowerRight,
    Full,
    Hills,
}

type Key = (Kind, [u32; 3], usize);

type BiKey = ([u32; 2], usize);

thread_local! {
    static MEMO: RefCell<HashMap<Key, TSeries<IntPoly>>> = RefCell::new(HashMap::new());
    static MEMO_BI: RefCell<HashMap<BiKey, TSeries<BiPoly>>> = RefCell::new(HashMap::new());
}

fn memo(kind: Kind, params: [u32; 3], trunc: usize, build: impl FnOnce() -> TSeries<IntPoly>) -> TSeries<IntPoly> {
    let key = (kind, params, trunc);
    if let Some(hit) = MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return hit;
    }
    let value = build();
    MEMO.with(|m| m.borrow_mut().insert(key, value.clone()));
    value
}

/// Drops every memoized series on this thread.
pub fn clear_cache() {
    MEMO.with(|m| m.borrow_mut().clear());
    MEMO_BI.with(|m| m.borrow_mut().clear());
}

fn t(trunc: usize) -> TSeries<IntPoly> {
    TSeries::monomial(IntPoly::one(), 1, trunc)
}

fn one(trunc: usize) -> TSeries<IntPoly> {
    TSeries::one(trunc)
}

/// `c · t^k · s`.
fn scaled_shift(c: &BigInt, k: usize, s: &TSeries<IntPoly>) -> TSeries<IntPoly> {
    s.shift(k).scale_int(c)
}

/// Builds a series coefficient by coefficient; `rule(n, lower)` sees coefficients `0..n`.
fn by_coefficients<C: Coefficient>(trunc: usize, mut rule: impl FnMut(usize, &[C]) -> C) -> TSeries<C> {
    let mut coeffs: Vec<C> = Vec::with_capacity(trunc + 1);
    for n in 0..=trunc {
        let c = rule(n, &coeffs);
        coeffs.push(c);
    }
    TSeries::from_coeffs(coeffs, trunc)
}

fn cat_poly(n: i64) -> IntPoly {
    IntPoly::constant(catalan_i(n))
}

/// `Q^{(0,0,∅,0)}`: root of `t·Q² − (1 + t − t·x)·Q + 1 = 0` with `Q(0) = 1`.
pub fn q132_00e0(trunc: usize) -> TSeries<IntPoly> {
    memo(Kind::Base, [0; 3], trunc, || {
        let tt = t(trunc);
        let linear = one(trunc).add(&tt).sub(&tt.scale_by(&IntPoly::x())).neg();
        solve_quadratic(&tt, &linear, &one(trunc), IntPoly::one()).expect("unit linear term")
    })
}

/// `Q^{(k,0,∅,0)}` over 132-avoiders.
pub fn q132_k0e0(k: u32, trunc: usize) -> TSeries<IntPoly> {
    if k == 0 {
        return q132_00e0(trunc);
    }
    memo(Kind::UpperRightRow, [k, 0, 0], trunc, || {
        let prev = q132_k0e0(k - 1, trunc);
        one(trunc).sub(&prev.shift(1)).reciprocal().expect("constant term 1")
    })
}

/// `Q^{(0,k,∅,0)}` over 132-avoiders.
pub fn q132_0ke0(k: u32, trunc: usize) -> TSeries<IntPoly> {
    if k == 0 {
        return q132_00e0(trunc);
    }
    memo(Kind::UpperLeftRow, [k, 0, 0], trunc, || {
        let base = q132_00e0(trunc);
        let mut numerator = one(trunc);
        for i in 1..k {
            let diff = q132_0ke0(k - i, trunc).sub(&base);
            numerator = numerator.add(&scaled_shift(&catalan(u64::from(i) - 1), i as usize, &diff));
        }
        let denominator = one(trunc).sub(&base.shift(1)).reciprocal().expect("constant term 1");
        numerator.mul(&denominator)
    })
}

/// `Q^{(k,l,∅,0)}` over 132-avoiders.
pub fn q132_kle0(k: u32, l: u32, trunc: usize) -> TSeries<IntPoly> {
    if l == 0 {
        return q132_k0e0(k, trunc);
    }
    if k == 0 {
        return q132_0ke0(l, trunc);
    }
    memo(Kind::UpperRightLeft, [k, l, 0], trunc, || {
        let mut out = one(trunc);
        for i in 1..l {
            out = out.add(&scaled_shift(&catalan(u64::from(i) - 1), i as usize, &q132_kle0(k, l - i, trunc)));
        }
        let head = q132_kle0(k - 1, l, trunc).sub(&catalan_segment(0, i64::from(l) - 2, trunc));
        out.add(&head.mul(&q132_k0e0(k, trunc)).shift(1))
    })
}

/// `Q^{(0,k,∅,l)}` over 132-avoiders.
pub fn q132_0kel(k: u32, l: u32, trunc: usize) -> TSeries<IntPoly> {
    if k == 0 {
        return q132_0ke0(l, trunc);
    }
    if l == 0 {
        return q132_0ke0(k, trunc);
    }
    memo(Kind::UpperLeftLowerRight, [k, l, 0], trunc, || {
        let left = q132_0ke0(k, trunc);
        let right = q132_0ke0(l, trunc);
        let narrower: Vec<TSeries<IntPoly>> = (1..k).map(|i| q132_0kel(k - i, l, trunc)).collect();
        let shorter: Vec<TSeries<IntPoly>> = (1..l).map(|j| q132_0kel(k, j, trunc)).collect();
        let (k, l) = (k as usize, l as usize);
        by_coefficients(trunc, |n, lower: &[IntPoly]| {
            if n <= k + l {
                return cat_poly(n as i64);
            }
            let mut acc = IntPoly::zero();
            for i in 1..k {
                acc = acc.add(&narrower[i - 1].coeff(n - i).scale(&catalan_i(i as i64 - 1)));
            }
            for i in k..=n - l {
                acc = acc.add(&left.coeff(i - 1).mul(&right.coeff(n - i)));
            }
            for i in n - l + 1..=n {
                let width = l - (n - i);
                let inner = if width == l { lower[i - 1].clone() } else { shorter[width - 1].coeff(i - 1) };
                acc = acc.add(&inner.scale(&catalan_i((n - i) as i64)));
            }
            acc
        })
    })
}

/// `Q^{(a,k,∅,l)}` over 132-avoiders; equal to `Q^{(a,k,0,l)}` over 123-avoiders when `a >= 1`.
pub fn q132_akel(a: u32, k: u32, l: u32, trunc: usize) -> TSeries<IntPoly> {
    if a == 0 {
        return q132_0kel(k, l, trunc);
    }
    if k == 0 {
        return q132_kle0(a, l, trunc);
    }
    if l == 0 {
        return q132_kle0(a, k, trunc);
    }
    memo(Kind::Full, [a, k, l], trunc, || {
        let head = q132_kle0(a - 1, k, trunc);
        let tail = q132_kle0(a, l, trunc);
        let narrower: Vec<TSeries<IntPoly>> = (1..k).map(|i| q132_akel(a, k - i, l, trunc)).collect();
        let shorter: Vec<TSeries<IntPoly>> = (1..=l).map(|j| q132_akel(a - 1, k, j, trunc)).collect();
        let (a, k, l) = (a as usize, k as usize, l as usize);
        by_coefficients(trunc, |n, _: &[IntPoly]| {
            if n <= a + k + l {
                return cat_poly(n as i64);
            }
            let mut acc = IntPoly::zero();
            for i in 1..k {
                acc = acc.add(&narrower[i - 1].coeff(n - i).scale(&catalan_i(i as i64 - 1)));
            }
            for i in k..=n - l {
                acc = acc.add(&head.coeff(i - 1).mul(&tail.coeff(n - i)));
            }
            for i in n - l + 1..=n {
                let width = l - (n - i);
                acc = acc.add(&shorter[width - 1].coeff(i - 1).scale(&catalan_i((n - i) as i64)));
            }
            acc
        })
    })
}

/// `Q^{(∅,k,∅,l)}` over 132-avoiders.
pub fn q132_ekel(k: u32, l: u32, trunc: usize) -> TSeries<IntPoly> {
    if k == 0 && l > 0 {
        return q132_ekel(l, 0, trunc);
    }
    memo(Kind::Hills, [k, l, 0], trunc, || {
        let cat = catalan_series(trunc);
        if k == 0 {
            let inner = cat.add(&TSeries::constant(IntPoly::from_i64s(&[-1, 1]), trunc));
            return one(trunc).sub(&inner.shift(1)).reciprocal().expect("constant term 1");
        }
        let mut out = one(trunc);
        for i in 1..k {
            out = out.add(&scaled_shift(&catalan(u64::from(i) - 1), i as usize, &q132_ekel(k - i, l, trunc)));
        }
        let head = cat.sub(&catalan_segment(0, i64::from(k) - 2, trunc));
        out.add(&head.mul(&q132_ekel(0, l, trunc)).shift(1))
    })
}

/// Bivariate series over 123-avoiders: `x0` counts peaks (left-to-right minima) matching
/// `MMP(0,k1,0,0)`, `x1` counts the other entries matching `MMP(0,k2,0,0)`.
pub fn q123_bivariate(peak_min: u32, other_min: u32, trunc: usize) -> TSeries<BiPoly> {
    let key = ([peak_min, other_min], trunc);
    if let Some(hit) = MEMO_BI.with(|m| m.borrow().get(&key).cloned()) {
        return hit;
    }
    let value = if peak_min == 0 && other_min == 0 {
        by_coefficients(trunc, |n, _: &[BiPoly]| {
            if n == 0 {
                return BiPoly::one();
            }
            let mut acc = BiPoly::zero();
            for p in 1..=n {
                acc.add_term(p as u32, (n - p) as u32, narayana(n as u64, p as u64));
            }
            acc
        })
    } else {
        // split at the first return: the column block before it, then the rest
        let down = |v: u32, i: usize| v.saturating_sub(i as u32);
        let first = q123_bivariate(down(peak_min, 1), down(other_min, 1), trunc);
        let first_weight = if peak_min == 0 { BiPoly::x0() } else { BiPoly::one() };
        let block = (other_min >= 1).then(|| q123_bivariate(peak_min, other_min - 1, trunc));
        let rests: Vec<TSeries<BiPoly>> =
            (2..=trunc).map(|i| q123_bivariate(down(peak_min, i), down(other_min, i), trunc)).collect();
        by_coefficients(trunc, |n, lower: &[BiPoly]| {
            if n == 0 {
                return BiPoly::one();
            }
            let mut acc = first_weight.mul(&first.coeff(n - 1));
            for i in 2..=n {
                let lead = match &block {
                    Some(b) => b.coeff(i - 1),
                    None => BiPoly::x1().mul(&lower[i - 1]),
                };
                acc = acc.add(&lead.mul(&rests[i - 2].coeff(n - i)));
            }
            acc
        })
    };
    MEMO_BI.with(|m| m.borrow_mut().insert(key, value.clone()));
    value
}

/// `Q^{(0,k,0,0)}` over 123-avoiders.
pub fn q123_0k00(k: u32, trunc: usize) -> TSeries<IntPoly> {
    q123_bivariate(k, k, trunc).map(BiPoly::diagonal)
}

/// `Σ_n C_n t^n`: every entry fails a spec that no avoider can match.
pub fn never_matching(trunc: usize) -> TSeries<IntPoly> {
    catalan_series(trunc)
}

/// `C(tx)`: every entry matches.
pub fn always_matching(trunc: usize) -> TSeries<IntPoly> {
    crate::series::catalan_xt_series(trunc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(s: &TSeries<IntPoly>, n: usize) -> String {
        s.coeff(n).to_string()
    }

    #[test]
    fn base_rows() {
        let q = q132_00e0(6);
        assert_eq!(row(&q, 2), "x+x^2");
        assert_eq!(q.at_x_one()[6], BigInt::from(132));
    }

    #[test]
    fn listed_rows() {
        assert_eq!(row(&q132_0ke0(1, 4), 4), "1+6x+6x^2+x^3");
        assert_eq!(row(&q132_0ke0(5, 9), 9), "429+1817x+1962x^2+612x^3+42x^4");
        assert_eq!(row(&q132_kle0(2, 1, 4), 4), "11+3x");
        assert_eq!(row(&q132_kle0(3, 3, 9), 9), "2801+1506x+507x^2+48x^3");
        assert_eq!(row(&q132_0kel(1, 1, 3), 3), "4+x");
        assert_eq!(row(&q132_0kel(3, 3, 9), 9), "2762+1649x+426x^2+25x^3");
        assert_eq!(row(&q132_akel(1, 1, 1, 4), 4), "10+4x");
        assert_eq!(row(&q132_akel(3, 3, 3, 13), 13), "265047+273660x+163720x^2+38169x^3+2304x^4");
        assert_eq!(row(&q132_ekel(0, 0, 4), 4), "6+4x+3x^2+x^4");
        assert_eq!(row(&q132_ekel(1, 1, 3), 3), "4+x");
        assert_eq!(row(&q123_0k00(1, 4), 4), "9x^2+5x^3");
        assert_eq!(row(&q123_0k00(5, 13), 13), "440x^3+11340x^4+89180x^5+273000x^6+308880x^7+60060x^8");
        assert_eq!(row(&q123_0k00(2, 5), 5), "5x+27x^2+10x^3");
    }

    #[test]
    fn fine_numbers() {
        let q = q132_ekel(0, 0, 9);
        let col: Vec<BigInt> = (1..=9).map(|n| q.coefficient(n, 0)).collect();
        let want: Vec<BigInt> = [0, 1, 2, 6, 18, 57, 186, 622, 2120].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(col, want);
    }

    #[test]
    fn zero_spec_is_all_x() {
        let q = q123_0k00(0, 7);
        for n in 0..=7 {
            assert_eq!(q.coeff(n), IntPoly::monomial(n, catalan(n as u64)));
        }
    }

    #[test]
    fn memo_is_consistent() {
        let a = q132_akel(2, 1, 2, 10);
        clear_cache();
        let b = q132_akel(2, 1, 2, 10);
        assert_eq!(a, b);
        assert_eq!(a.coeff(0), IntPoly::one());
    }
}
