//! Generating-function displays evaluated exactly as printed, for errata comparison.
//!
//! Each function applies one display once, feeding it the verified engine series
//! for every `Q` on its right-hand side, so a divergence is attributable to that
//! display alone.

use super::{q123_bivariate, q132_0ke0, q132_0kel, q132_akel, q132_k0e0, q132_kle0};
use crate::series::{catalan, catalan_segment, BiPoly, IntPoly, TSeries};

fn one(trunc: usize) -> TSeries<IntPoly> {
    TSeries::one(trunc)
}

fn cat_t(i: u32, power: usize, s: &TSeries<IntPoly>) -> TSeries<IntPoly> {
    s.shift(power).scale_int(&catalan(u64::from(i)))
}

fn seg(hi: i64, trunc: usize) -> TSeries<IntPoly> {
    catalan_segment(0, hi, trunc)
}

/// `Q^{(k,l,∅,0)}` display, `k, l >= 1`: the product term carries no factor `t`.
pub fn upper_right_left(k: u32, l: u32, trunc: usize) -> TSeries<IntPoly> {
    let mut out = one(trunc);
    for i in 1..l {
        out = out.add(&cat_t(i - 1, i as usize, &q132_kle0(k, l - i, trunc)));
    }
    let head = q132_kle0(k - 1, l, trunc).sub(&seg(i64::from(l) - 2, trunc));
    out.add(&head.mul(&q132_k0e0(k, trunc)))
}

/// `Q^{(0,k,∅,l)} = Γ_{k,l} / (1 − t)` display, `k, l >= 1`.
pub fn upper_left_lower_right(k: u32, l: u32, trunc: usize) -> TSeries<IntPoly> {
    let (ki, li) = (i64::from(k), i64::from(l));
    let mut gamma = seg(ki + li, trunc).sub(&seg(ki + li - 2, trunc).shift(1));
    for i in 1..k {
        let inner = q132_0kel(k - i, l, trunc).sub(&seg(ki + li - i64::from(i) - 1, trunc));
        gamma = gamma.add(&cat_t(i - 1, i as usize, &inner));
    }
    let left = q132_0ke0(k, trunc).sub(&seg(ki - 2, trunc));
    let right = q132_0ke0(l, trunc).sub(&seg(li - 1, trunc));
    gamma = gamma.add(&left.mul(&right).shift(1));
    for i in 1..l {
        let inner = q132_0kel(k, l - i, trunc).sub(&seg(ki + li - i64::from(i) - 2, trunc));
        gamma = gamma.add(&cat_t(i, i as usize + 1, &inner));
    }
    let denominator = one(trunc).sub(&one(trunc).shift(1)).reciprocal().expect("constant term 1");
    gamma.mul(&denominator)
}

/// `Q^{(a,k,∅,l)}` display, `a, k, l >= 1`.
pub fn full(a: u32, k: u32, l: u32, trunc: usize) -> TSeries<IntPoly> {
    let (ki, li) = (i64::from(k), i64::from(l));
    let mut out = seg(ki + li - 1, trunc);
    for i in 1..k {
        let inner = q132_akel(a, k - i, l, trunc).sub(&seg(ki + li - i64::from(i) - 1, trunc));
        out = out.add(&cat_t(i - 1, i as usize, &inner));
    }
    let head = q132_kle0(a - 1, k, trunc).sub(&seg(ki - 2, trunc));
    let tail = q132_kle0(a, l, trunc).sub(&seg(li - 1, trunc));
    out = out.add(&head.mul(&tail).shift(1));
    for i in 0..l {
        let inner = q132_akel(a - 1, k, l - i, trunc).sub(&seg(ki + li - i64::from(i) - 2, trunc));
        out = out.add(&cat_t(i, i as usize + 1, &inner));
    }
    out
}

fn bi_one(trunc: usize) -> TSeries<BiPoly> {
    TSeries::one(trunc)
}

/// `Σ_{i=lo}^{hi} f(i) t^i` for a coefficient sequence `f`; `f` may return zero.
fn weighted_segment(lo: i64, hi: i64, trunc: usize, f: impl Fn(i64) -> BiPoly) -> TSeries<BiPoly> {
    let mut out = TSeries::zero(trunc);
    let mut i = lo.max(0);
    while i <= hi && (i as usize) <= trunc {
        out.set_coeff(i as usize, f(i));
        i += 1;
    }
    out
}

fn coeff_or_zero(s: &TSeries<BiPoly>, n: i64) -> BiPoly {
    if n < 0 {
        BiPoly::zero()
    } else {
        s.coeff(n as usize)
    }
}

/// Bivariate `(k1; 0)` display, `k1 >= 1`.
pub fn bivariate_peak_row(k1: u32, trunc: usize) -> TSeries<BiPoly> {
    let base = q123_bivariate(0, 0, trunc);
    let base_x0_one = base.map(BiPoly::with_x0_one);
    let x1 = BiPoly::x1();
    let mut inner = bi_one(trunc).add(&q123_bivariate(k1 - 1, 0, trunc).shift(1));
    for i in 2..k1 {
        let term = q123_bivariate(k1 - i, 0, trunc).scale_by(&base_x0_one.coeff(i as usize - 1));
        inner = inner.add(&term.shift(i as usize).scale_by(&x1));
    }
    let tail = weighted_segment(0, i64::from(k1) - 2, trunc, |i| coeff_or_zero(&base_x0_one, i - 1));
    inner = inner.sub(&base.mul(&tail).shift(1).scale_by(&x1));
    let denominator = bi_one(trunc).sub(&base.shift(1).scale_by(&x1)).reciprocal().expect("constant term 1");
    denominator.mul(&inner)
}

/// Bivariate `(0; k2)` display, `k2 >= 1`.
pub fn bivariate_other_row(k2: u32, trunc: usize) -> TSeries<BiPoly> {
    let base = q123_bivariate(0, 0, trunc);
    let base_x1_one = base.map(BiPoly::with_x1_one);
    let prev = q123_bivariate(0, k2 - 1, trunc);
    let mut out = bi_one(trunc).add(&prev.shift(1).scale_by(&BiPoly::x0()));
    for i in 2..k2 {
        let term = q123_bivariate(0, k2 - i, trunc).scale_by(&base_x1_one.coeff(i as usize - 1));
        out = out.add(&term.shift(i as usize));
    }
    let tail = weighted_segment(0, i64::from(k2) - 2, trunc, |i| base_x1_one.coeff(i as usize));
    out.add(&base.mul(&prev.sub(&tail)).shift(1))
}

/// Bivariate `(k1; k2)` displays, `k1, k2 >= 1` (two cases split on `k1 >= k2`).
pub fn bivariate_general(k1: u32, k2: u32, trunc: usize) -> TSeries<BiPoly> {
    let base = q123_bivariate(0, 0, trunc);
    let prev = q123_bivariate(k1, k2 - 1, trunc);
    let mut out = bi_one(trunc);
    let tail;
    if k1 >= k2 {
        let lead = q123_bivariate(0, k2 - 1, trunc);
        let lead_x0_one = lead.map(BiPoly::with_x0_one);
        for i in 1..k1 {
            let rest = q123_bivariate(k1 - i, k2.saturating_sub(i), trunc);
            out = out.add(&rest.scale_by(&lead_x0_one.coeff(i as usize - 1)).shift(i as usize));
        }
        tail = weighted_segment(0, i64::from(k1) - 2, trunc, |i| lead.coeff(i as usize));
    } else {
        let lead = q123_bivariate(k1, 0, trunc);
        let lead_x1_one = lead.map(BiPoly::with_x1_one);
        for i in 1..k2 {
            let rest = q123_bivariate(k1.saturating_sub(i), k2 - i, trunc);
            out = out.add(&rest.scale_by(&lead_x1_one.coeff(i as usize - 1)).shift(i as usize));
        }
        tail = weighted_segment(0, i64::from(k2) - 2, trunc, |i| lead.coeff(i as usize));
    }
    out.add(&base.mul(&prev.sub(&tail)).shift(1))
}
