//! Exact polynomials in `x` (or `x0, x1`) and truncated power series in `t` over them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Ring operations needed by [`TSeries`] coefficients.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &BigInt) -> Self;
    /// Multiplicative inverse when `self` is the constant `1` or `-1`.
    fn unit_inverse(&self) -> Option<Self>;
}

/// Polynomial in `x` with arbitrary-precision integer coefficients.
///
/// Stored densely by exponent with trailing zeros trimmed, so equal polynomials
/// have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn x() -> Self {
        IntPoly::monomial(1, BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPoly::monomial(0, c)
    }

    pub fn monomial(exp: usize, c: impl Into<BigInt>) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c.into();
        IntPoly::from_vec(coeffs)
    }

    /// Builds from coefficients listed by ascending exponent.
    pub fn from_vec(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_vec(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Histogram of exponents: `counts[e]` is the coefficient of `x^e`.
    pub fn from_counts(counts: &[u64]) -> Self {
        IntPoly::from_vec(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^exp`.
    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(exp).cloned().unwrap_or_default()
    }

    /// Coefficient of the highest power of `x`.
    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Nonzero terms as `(exponent, coefficient)` in ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Value at `x = 1`, i.e. the sum of the coefficients.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn coeff_vec(&self) -> &[BigInt] {
        &self.coeffs
    }
}

impl Coefficient for IntPoly {
    fn zero() -> Self {
        IntPoly::zero()
    }
    fn one() -> Self {
        IntPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        IntPoly::from_vec(out)
    }
    fn sub(&self, other: &Self) -> Self {
        Coefficient::add(self, &Coefficient::neg(other))
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_vec(out)
    }
    fn neg(&self) -> Self {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn scale(&self, c: &BigInt) -> Self {
        IntPoly::from_vec(self.coeffs.iter().map(|a| a * c).collect())
    }
    fn unit_inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] if c.abs().is_one() => Some(self.clone()),
            _ => None,
        }
    }
}

macro_rules! ring_ops {
    ($t:ty) => {
        impl Add for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                Coefficient::add(self, rhs)
            }
        }
        impl Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                Coefficient::sub(self, rhs)
            }
        }
        impl Mul for &$t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                Coefficient::mul(self, rhs)
            }
        }
        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                Coefficient::neg(self)
            }
        }
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                Coefficient::add(&self, &rhs)
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                Coefficient::sub(&self, &rhs)
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                Coefficient::mul(&self, &rhs)
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                Coefficient::neg(&self)
            }
        }
    };
}

ring_ops!(IntPoly);

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: &BigInt, monomial: &str) -> fmt::Result {
    let neg = c.is_negative();
    let mag = c.abs();
    if neg {
        write!(f, "-")?;
    } else if !first {
        write!(f, "+")?;
    }
    if monomial.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        write!(f, "{monomial}")
    } else {
        write!(f, "{mag}{monomial}")
    }
}

impl fmt::Display for IntPoly {
    /// Ascending powers: `1+15x+50x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let mono = match e {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            };
            write_term(f, first, c, &mono)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Polynomial in `x0, x1` with arbitrary-precision integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        BiPoly::monomial(0, 0, BigInt::one())
    }

    pub fn x0() -> Self {
        BiPoly::monomial(1, 0, BigInt::one())
    }

    pub fn x1() -> Self {
        BiPoly::monomial(0, 1, BigInt::one())
    }

    pub fn monomial(e0: u32, e1: u32, c: impl Into<BigInt>) -> Self {
        let mut out = BiPoly::zero();
        out.add_term(e0, e1, c.into());
        out
    }

    pub fn add_term(&mut self, e0: u32, e1: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((e0, e1)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(e0, e1));
        }
    }

    pub fn coeff(&self, e0: u32, e1: u32) -> BigInt {
        self.terms.get(&(e0, e1)).cloned().unwrap_or_default()
    }

    /// Nonzero terms as `((e0, e1), coefficient)`, ordered by `(e0, e1)`.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitutes `x0 = 1`, keeping a polynomial in `x1`.
    pub fn with_x0_one(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(_, e1), c) in &self.terms {
            out.add_term(0, e1, c.clone());
        }
        out
    }

    /// Substitutes `x1 = 1`, keeping a polynomial in `x0`.
    pub fn with_x1_one(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(e0, _), c) in &self.terms {
            out.add_term(e0, 0, c.clone());
        }
        out
    }

    /// Substitutes `x0 = x1 = x`.
    pub fn diagonal(&self) -> IntPoly {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (&(e0, e1), c) in &self.terms {
            let e = (e0 + e1) as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            coeffs[e] += c;
        }
        IntPoly::from_vec(coeffs)
    }

    pub fn at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl Coefficient for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn one() -> Self {
        BiPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }
    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, -c);
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = BiPoly::zero();
        for (&(a0, a1), ca) in &self.terms {
            for (&(b0, b1), cb) in &other.terms {
                out.add_term(a0 + b0, a1 + b1, ca * cb);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        BiPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
    fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&(0, 0)) {
                if c.abs().is_one() {
                    return Some(self.clone());
                }
            }
        }
        None
    }
}

ring_ops!(BiPoly);

impl fmt::Display for BiPoly {
    /// Terms ordered by `(e0, e1)`: `x0*x1+x0^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(e0, e1), c) in &self.terms {
            let mut parts = Vec::new();
            for (name, e) in [("x0", e0), ("x1", e1)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            write_term(f, first, c, &parts.join("*"))?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

/// Power series in `t` truncated after `t^trunc`.
///
/// Every stored coefficient is exact; products never read past `trunc`.
#[derive(Clone, PartialEq, Eq)]
pub struct TSeries<C> {
    trunc: usize,
    coeffs: Vec<C>,
}

impl<C: Coefficient> TSeries<C> {
    pub fn zero(trunc: usize) -> Self {
        TSeries { trunc, coeffs: vec![C::zero(); trunc + 1] }
    }

    pub fn one(trunc: usize) -> Self {
        TSeries::constant(C::one(), trunc)
    }

    pub fn constant(c: C, trunc: usize) -> Self {
        let mut s = TSeries::zero(trunc);
        s.coeffs[0] = c;
        s
    }

    /// `c · t^k`, or zero when `k > trunc`.
    pub fn monomial(c: C, k: usize, trunc: usize) -> Self {
        let mut s = TSeries::zero(trunc);
        if k <= trunc {
            s.coeffs[k] = c;
        }
        s
    }

    /// Pads with zeros or drops terms past `trunc`.
    pub fn from_coeffs(mut coeffs: Vec<C>, trunc: usize) -> Self {
        coeffs.resize(trunc + 1, C::zero());
        TSeries { trunc, coeffs }
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `t^n`; zero past the truncation degree.
    pub fn coeff(&self, n: usize) -> C {
        self.coeffs.get(n).cloned().unwrap_or_else(C::zero)
    }

    pub fn set_coeff(&mut self, n: usize, c: C) {
        if n <= self.trunc {
            self.coeffs[n] = c;
        }
    }

    /// Re-truncates at a smaller or larger degree (new tail is zero).
    pub fn truncate(&self, trunc: usize) -> Self {
        TSeries::from_coeffs(self.coeffs.clone(), trunc)
    }

    pub fn add(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let coeffs = (0..=trunc).map(|n| self.coeffs[n].add(&other.coeffs[n])).collect();
        TSeries { trunc, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let coeffs = (0..=trunc).map(|n| self.coeffs[n].sub(&other.coeffs[n])).collect();
        TSeries { trunc, coeffs }
    }

    pub fn neg(&self) -> Self {
        TSeries { trunc: self.trunc, coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let mut coeffs = vec![C::zero(); trunc + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(trunc + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(trunc + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        TSeries { trunc, coeffs }
    }

    /// Multiplies every coefficient by the ring element `c`.
    pub fn scale_by(&self, c: &C) -> Self {
        TSeries { trunc: self.trunc, coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        TSeries { trunc: self.trunc, coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect() }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = TSeries::zero(self.trunc);
        for n in k..=self.trunc {
            out.coeffs[n] = self.coeffs[n - k].clone();
        }
        out
    }

    /// Keeps the terms of degree `<= m` (all of them when `m >= trunc`); `None` gives zero.
    pub fn prefix(&self, m: Option<usize>) -> Self {
        let mut out = TSeries::zero(self.trunc);
        if let Some(m) = m {
            for n in 0..=m.min(self.trunc) {
                out.coeffs[n] = self.coeffs[n].clone();
            }
        }
        out
    }

    /// `1 / self`; the constant term must be `±1`.
    pub fn reciprocal(&self) -> Result<Self, Error> {
        let inv0 = self.coeffs[0]
            .unit_inverse()
            .ok_or_else(|| Error::IllPosed(format!("constant term {} is not a unit", self.coeffs[0])))?;
        let mut out = TSeries::zero(self.trunc);
        out.coeffs[0] = inv0.clone();
        for n in 1..=self.trunc {
            let mut acc = C::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc = acc.add(&self.coeffs[i].mul(&out.coeffs[n - i]));
                }
            }
            out.coeffs[n] = acc.mul(&inv0).neg();
        }
        Ok(out)
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> TSeries<D> {
        TSeries { trunc: self.trunc, coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// One line per power of `t`: `t^0: 1`.
    pub fn render_lines(&self) -> Vec<String> {
        self.coeffs.iter().enumerate().map(|(n, c)| format!("t^{n}: {c}")).collect()
    }
}

impl TSeries<IntPoly> {
    /// Coefficient of `t^n x^k`.
    pub fn coefficient(&self, n: usize, k: usize) -> BigInt {
        self.coeffs.get(n).map(|p| p.coeff(k)).unwrap_or_default()
    }

    /// Values at `x = 1` for each power of `t`.
    pub fn at_x_one(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(IntPoly::at_one).collect()
    }
}

impl<C: Coefficient> fmt::Debug for TSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TSeries[{}](", self.trunc)?;
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                write!(f, "; ")?;
            }
            write!(f, "t^{n}: {c}")?;
        }
        write!(f, ")")
    }
}

impl<C: Coefficient> fmt::Display for TSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_lines().join("\n"))
    }
}

impl<C: Coefficient> Add for &TSeries<C> {
    type Output = TSeries<C>;
    fn add(self, rhs: &TSeries<C>) -> TSeries<C> {
        TSeries::add(self, rhs)
    }
}

impl<C: Coefficient> Sub for &TSeries<C> {
    type Output = TSeries<C>;
    fn sub(self, rhs: &TSeries<C>) -> TSeries<C> {
        TSeries::sub(self, rhs)
    }
}

impl<C: Coefficient> Mul for &TSeries<C> {
    type Output = TSeries<C>;
    fn mul(self, rhs: &TSeries<C>) -> TSeries<C> {
        TSeries::mul(self, rhs)
    }
}

impl<C: Coefficient> Neg for &TSeries<C> {
    type Output = TSeries<C>;
    fn neg(self) -> TSeries<C> {
        TSeries::neg(self)
    }
}

/// Solves `A·F² + B·F + C = 0` for `F` with `F(0) = f0`, one power of `t` at a time.
///
/// At `t^n` the unknown enters linearly with multiplier `2·A_0·F_0 + B_0`, which must be `±1`.
pub fn solve_quadratic<C: Coefficient>(
    a: &TSeries<C>,
    b: &TSeries<C>,
    c: &TSeries<C>,
    f0: C,
) -> Result<TSeries<C>, Error> {
    let trunc = a.trunc().min(b.trunc()).min(c.trunc());
    let (a0, b0) = (a.coeff(0), b.coeff(0));
    let residual0 = a0.mul(&f0).mul(&f0).add(&b0.mul(&f0)).add(&c.coeff(0));
    if !residual0.is_zero() {
        return Err(Error::IllPosed(format!("t^0 residual {residual0} is nonzero for F(0) = {f0}")));
    }
    let lead = a0.mul(&f0).add(&a0.mul(&f0)).add(&b0);
    let lead_inv =
        lead.unit_inverse().ok_or_else(|| Error::IllPosed(format!("linear multiplier {lead} is not a unit")))?;
    let mut f = vec![C::zero(); trunc + 1];
    f[0] = f0;
    // square[m] holds the t^m coefficient of F², complete for m < n
    let mut square = vec![C::zero(); trunc + 1];
    square[0] = f[0].mul(&f[0]);
    for n in 1..=trunc {
        let mut partial_sq = C::zero();
        for j in 1..n {
            partial_sq = partial_sq.add(&f[j].mul(&f[n - j]));
        }
        let mut rest = a0.mul(&partial_sq);
        for i in 1..=n {
            let ai = a.coeff(i);
            if !ai.is_zero() {
                rest = rest.add(&ai.mul(&square[n - i]));
            }
            let bi = b.coeff(i);
            if !bi.is_zero() {
                rest = rest.add(&bi.mul(&f[n - i]));
            }
        }
        rest = rest.add(&c.coeff(n));
        f[n] = rest.mul(&lead_inv).neg();
        square[n] = partial_sq.add(&f[0].mul(&f[n])).add(&f[n].mul(&f[0]));
    }
    Ok(TSeries::from_coeffs(f, trunc))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n, n) / BigInt::from(n + 1)
}

/// Like [`catalan`] but zero for negative indices, which is how shifted formulas use it.
pub fn catalan_i(n: i64) -> BigInt {
    if n < 0 {
        BigInt::zero()
    } else {
        catalan(n as u64)
    }
}

/// `N(n, p) = binom(n, p) · binom(n, p−1) / n`; zero outside `1 <= p <= n`.
pub fn narayana(n: u64, p: u64) -> BigInt {
    if p == 0 || p > n {
        return BigInt::zero();
    }
    let num = binomial(n, p) * binomial(n, p - 1);
    let (q, r) = num.div_rem(&BigInt::from(n));
    debug_assert!(r.is_zero());
    q
}

/// `C(t)` truncated at `t^trunc`.
pub fn catalan_series(trunc: usize) -> TSeries<IntPoly> {
    TSeries::from_coeffs((0..=trunc as u64).map(|n| IntPoly::constant(catalan(n))).collect(), trunc)
}

/// `C(tx)`: coefficient of `t^n` is `C_n x^n`.
pub fn catalan_xt_series(trunc: usize) -> TSeries<IntPoly> {
    TSeries::from_coeffs((0..=trunc).map(|n| IntPoly::monomial(n, catalan(n as u64))).collect(), trunc)
}

/// `Σ_{i=lo}^{hi} C_i t^i`; empty when `hi < lo`.
pub fn catalan_segment(lo: i64, hi: i64, trunc: usize) -> TSeries<IntPoly> {
    let mut out = TSeries::zero(trunc);
    let lo = lo.max(0);
    let mut i = lo;
    while i <= hi && i as usize <= trunc {
        out.set_coeff(i as usize, IntPoly::constant(catalan(i as u64)));
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn catalan_numbers() {
        let got: Vec<BigInt> = (0..10).map(catalan).collect();
        let want: Vec<BigInt> = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862].iter().map(|&v| big(v)).collect();
        assert_eq!(got, want);
        assert_eq!(catalan_series(9).coefficient(9, 0), big(4862));
        assert_eq!(catalan_xt_series(5).coefficient(5, 5), big(42));
    }

    #[test]
    fn catalan_identity() {
        let c = catalan_series(15);
        let rhs = &TSeries::one(15) + &(&c * &c).shift(1);
        assert_eq!(rhs, c);
    }

    #[test]
    fn narayana_rows() {
        let row: Vec<BigInt> = (1..=4).map(|p| narayana(4, p)).collect();
        assert_eq!(row, vec![big(1), big(6), big(6), big(1)]);
        assert_eq!((1..=9).map(|p| narayana(9, p)).sum::<BigInt>(), big(4862));
        assert_eq!(narayana(7, 1), big(1));
        assert_eq!(narayana(4, 0), big(0));
        assert_eq!(narayana(4, 5), big(0));
    }

    #[test]
    fn ring_identities() {
        let s = TSeries::from_coeffs(vec![IntPoly::from_i64s(&[1, 2]), IntPoly::from_i64s(&[0, 0, 3])], 6);
        assert_eq!(&s * &TSeries::one(6), s);
        assert_eq!(&s + &(-&s), TSeries::zero(6));
    }

    #[test]
    fn reciprocal_roundtrip() {
        let s = TSeries::from_coeffs(vec![IntPoly::one(), IntPoly::x(), IntPoly::from_i64s(&[-3, 1])], 10);
        let inv = s.reciprocal().unwrap();
        assert_eq!(&s * &inv, TSeries::one(10));
        assert!(TSeries::constant(IntPoly::constant(2), 3).reciprocal().is_err());
    }

    #[test]
    fn quadratic_linear_case() {
        let n = 12;
        let c = catalan_series(n);
        let f = solve_quadratic(&TSeries::zero(n), &TSeries::one(n), &c.neg(), IntPoly::one()).unwrap();
        assert_eq!(f, c);
    }

    #[test]
    fn quadratic_for_catalan() {
        let n = 12;
        let t = TSeries::monomial(IntPoly::one(), 1, n);
        let f = solve_quadratic(&t, &TSeries::one(n).neg(), &TSeries::one(n), IntPoly::one()).unwrap();
        assert_eq!(f, catalan_series(n));
    }

    #[test]
    fn quadratic_rejects_bad_start() {
        let n = 4;
        let r = solve_quadratic(&TSeries::zero(n), &TSeries::one(n), &TSeries::one(n), IntPoly::one());
        assert!(r.is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(IntPoly::from_i64s(&[1, 15, 50]).to_string(), "1+15x+50x^2");
        assert_eq!(IntPoly::from_i64s(&[0, 0, 0, 28, 14]).to_string(), "28x^3+14x^4");
        assert_eq!(IntPoly::from_i64s(&[1, -1]).to_string(), "1-x");
        assert_eq!(IntPoly::zero().to_string(), "0");
        let b = &BiPoly::x0() * &(&BiPoly::x0() + &BiPoly::x1());
        assert_eq!(b.to_string(), "x0*x1+x0^2");
        assert_eq!(TSeries::<IntPoly>::one(0).render_lines(), vec!["t^0: 1".to_string()]);
    }

    #[test]
    fn bipoly_substitutions() {
        let p = &(&BiPoly::x0() * &BiPoly::x1()) + &BiPoly::monomial(2, 0, 3);
        assert_eq!(p.with_x0_one(), &BiPoly::x1() + &BiPoly::monomial(0, 0, 3));
        assert_eq!(p.with_x1_one(), &BiPoly::x0() + &BiPoly::monomial(2, 0, 3));
        assert_eq!(p.diagonal(), IntPoly::from_i64s(&[0, 0, 4]));
        assert_eq!(p.at_ones(), big(4));
    }

    #[test]
    fn segments() {
        let s = catalan_segment(1, 3, 6);
        assert_eq!(s.at_x_one(), vec![0, 1, 2, 5, 0, 0, 0].into_iter().map(big).collect::<Vec<_>>());
        assert_eq!(catalan_segment(2, 1, 6), TSeries::zero(6));
    }
}
