//! Closed-form coefficients: extremal powers of `x` and the full rows of
//! `Q^{(0,k,0,l)}` over 123-avoiders for small `k, l`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::Error;
use crate::mmp::{distribution, QuadrantSpec, Slot};
use crate::perm::Class;
use crate::series::{binomial, catalan, catalan_i, IntPoly, TSeries};

/// Spec shapes whose top power of `x` has a product formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtremalFamily {
    /// `(0,k,0,l)`: `C_k · C_{n−k−l} · C_l` at `x^{n−k−l}`.
    ZeroKZeroL,
    /// `(0,k,0,0)`: `C_k · C_{n−k}` at `x^{n−k}`.
    ZeroKZeroZero,
    /// `(0,k,∅,l)`: `C_k · C_l` at `x^{n−k−l}`.
    ZeroKEmptyL,
    /// `(0,k,∅,0)`: `C_k` at `x^{n−k}`.
    ZeroKEmptyZero,
    /// `(∅,k,∅,l)`: `C_k · C_l` at `x^{n−k−l}`.
    EmptyKEmptyL,
    /// `(k,l,∅,0)`: ballot number `(k+1)/(k+l+1) · binom(k+2l, l)` at `x^{n−k−l}`.
    KLEmptyZero,
    /// `(k,l,∅,m)` with `k > 0`: product of two ballot numbers at `x^{n−k−l−m}`.
    KLEmptyM,
}

impl ExtremalFamily {
    pub const ALL: [ExtremalFamily; 7] = [
        ExtremalFamily::ZeroKZeroL,
        ExtremalFamily::ZeroKZeroZero,
        ExtremalFamily::ZeroKEmptyL,
        ExtremalFamily::ZeroKEmptyZero,
        ExtremalFamily::EmptyKEmptyL,
        ExtremalFamily::KLEmptyZero,
        ExtremalFamily::KLEmptyM,
    ];

    pub fn subject(self) -> &'static str {
        match self {
            ExtremalFamily::ZeroKZeroL => "thm-4",
            ExtremalFamily::ZeroKZeroZero => "cor-4",
            ExtremalFamily::ZeroKEmptyL => "thm-04",
            ExtremalFamily::ZeroKEmptyZero => "cor-04",
            ExtremalFamily::EmptyKEmptyL => "cor-05",
            ExtremalFamily::KLEmptyZero => "thm-004",
            ExtremalFamily::KLEmptyM => "thm-0004",
        }
    }

    /// Which of `(k, l, m)` the family reads; unused ones must be zero.
    pub fn arity(self) -> usize {
        match self {
            ExtremalFamily::ZeroKZeroZero | ExtremalFamily::ZeroKEmptyZero => 1,
            ExtremalFamily::KLEmptyM => 3,
            _ => 2,
        }
    }

    pub fn spec(self, k: u32, l: u32, m: u32) -> QuadrantSpec {
        use Slot::{Count, Empty};
        match self {
            ExtremalFamily::ZeroKZeroL => QuadrantSpec::counts(0, k, 0, l),
            ExtremalFamily::ZeroKZeroZero => QuadrantSpec::counts(0, k, 0, 0),
            ExtremalFamily::ZeroKEmptyL => QuadrantSpec::new(Count(0), Count(k), Empty, Count(l)),
            ExtremalFamily::ZeroKEmptyZero => QuadrantSpec::new(Count(0), Count(k), Empty, Count(0)),
            ExtremalFamily::EmptyKEmptyL => QuadrantSpec::new(Empty, Count(k), Empty, Count(l)),
            ExtremalFamily::KLEmptyZero => QuadrantSpec::new(Count(k), Count(l), Empty, Count(0)),
            ExtremalFamily::KLEmptyM => QuadrantSpec::new(Count(k), Count(l), Empty, Count(m)),
        }
    }

    /// Sum of the parameters the family actually reads.
    fn weight(self, k: u32, l: u32, m: u32) -> usize {
        (match self.arity() {
            1 => k,
            2 => k + l,
            _ => k + l + m,
        }) as usize
    }

    /// Smallest `n` the formula covers.
    pub fn threshold(self, k: u32, l: u32, m: u32) -> usize {
        self.weight(k, l, m) + 1
    }
}

fn ballot(k: u64, l: u64) -> (BigInt, BigInt) {
    (BigInt::from(k + 1) * binomial(k + 2 * l, l), BigInt::from(k + l + 1))
}

/// `(exponent, coefficient)` of the top power of `x` in `Q_n` for the family.
pub fn extremal_coeff(family: ExtremalFamily, k: u32, l: u32, m: u32, n: usize) -> Result<(usize, BigInt), Error> {
    let regime = |reason: String| Error::Regime { theorem: family.subject().into(), reason };
    if family.arity() < 3 && m != 0 || family.arity() < 2 && l != 0 {
        return Err(regime("parameter not used by this family must be 0".into()));
    }
    if family == ExtremalFamily::KLEmptyM && k == 0 {
        return Err(regime("needs k > 0".into()));
    }
    let threshold = family.threshold(k, l, m);
    if n < threshold {
        return Err(regime(format!("needs n >= {threshold}, got {n}")));
    }
    let exponent = n - family.weight(k, l, m);
    let (k64, l64, m64) = (u64::from(k), u64::from(l), u64::from(m));
    let value = match family {
        ExtremalFamily::ZeroKZeroL => catalan(k64) * catalan((n - (k + l) as usize) as u64) * catalan(l64),
        ExtremalFamily::ZeroKZeroZero => catalan(k64) * catalan((n - k as usize) as u64),
        ExtremalFamily::ZeroKEmptyL | ExtremalFamily::EmptyKEmptyL => catalan(k64) * catalan(l64),
        ExtremalFamily::ZeroKEmptyZero => catalan(k64),
        ExtremalFamily::KLEmptyZero => {
            let (num, den) = ballot(k64, l64);
            exact_div(num, den)
        }
        ExtremalFamily::KLEmptyM => {
            let (n1, d1) = ballot(k64, l64);
            let (n2, d2) = ballot(k64, m64);
            exact_div(n1 * n2, d1 * d2)
        }
    };
    Ok((exponent, value))
}

fn exact_div(num: BigInt, den: BigInt) -> BigInt {
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero(), "{num} not divisible by {den}");
    q
}

/// Pairs `(k, l)` with a closed row, and the first `n` each formula holds for.
const CLOSED_PAIRS: [((u32, u32), usize); 5] = [((1, 0), 2), ((2, 0), 4), ((1, 1), 4), ((2, 1), 5), ((2, 2), 7)];

/// Which stored pair serves `(k, l)`; `(l, k)` gives the same series by reverse-complement.
fn closed_pair(k: u32, l: u32) -> Option<((u32, u32), usize)> {
    CLOSED_PAIRS.iter().find(|(p, _)| *p == (k, l)).or_else(|| CLOSED_PAIRS.iter().find(|(p, _)| *p == (l, k))).copied()
}

pub fn closed_supported(k: u32, l: u32) -> bool {
    closed_pair(k, l).is_some()
}

/// Coefficients of `x^{n−2(k+l)+r}` for `r = 0..=k+l`.
fn closed_row(pair: (u32, u32), n: usize) -> Vec<BigInt> {
    let c = |d: i64| catalan_i(n as i64 - d);
    let nn = BigInt::from(n);
    let lin = |a: i64, b: i64| &nn * a + b;
    let quad = |a: i64, b: i64, c0: i64| &nn * &nn * a + &nn * b + c0;
    match pair {
        (1, 0) => vec![c(0) - c(1), c(1)],
        (2, 0) => vec![c(0) - c(1) * 3 + c(2), (c(1) - c(2)) * 3, c(2) * 2],
        (1, 1) => vec![c(0) - c(1) * 2 + c(2) - 2, c(1) * 2 - c(2) * 2 + 2, c(2)],
        (2, 1) => vec![
            c(0) - c(1) * 4 + c(2) * 4 - c(3) + lin(-2, 6),
            c(1) * 4 - c(2) * 9 + c(3) * 4 + lin(2, -12),
            c(2) * 5 - c(3) * 5 + 6,
            c(3) * 2,
        ],
        (2, 2) => vec![
            c(0) - c(1) * 6 + c(2) * 11 - c(3) * 6 + c(4) + quad(-2, 16, -34),
            c(1) * 6 - c(2) * 24 + c(3) * 24 - c(4) * 6 + quad(2, -28, 80),
            c(2) * 13 - c(3) * 30 + c(4) * 13 + lin(12, -64),
            c(3) * 12 - c(4) * 12 + 18,
            c(4) * 4,
        ],
        _ => unreachable!("pairs come from CLOSED_PAIRS"),
    }
}

/// Coefficient of `t^n x^{n−2(k+l)+r}` in `Q^{(0,k,0,l)}` over 123-avoiders.
pub fn closed_coeff_0k0l(k: u32, l: u32, n: usize, r: usize) -> Result<BigInt, Error> {
    let (pair, threshold) = closed_pair(k, l).ok_or_else(|| Error::Regime {
        theorem: "closed-0k0l".into(),
        reason: format!("no closed form for (k, l) = ({k}, {l})"),
    })?;
    if n < threshold {
        return Err(Error::Regime {
            theorem: closed_subject(k, l).unwrap_or("closed-0k0l").into(),
            reason: format!("needs n >= {threshold}, got {n}"),
        });
    }
    let width = (k + l) as usize;
    if r > width {
        return Err(Error::Regime {
            theorem: "closed-0k0l".into(),
            reason: format!("r = {r} exceeds k + l = {width}"),
        });
    }
    Ok(closed_row(pair, n).swap_remove(r))
}

/// Threshold `n` from which the closed row for `(k, l)` holds.
pub fn closed_threshold(k: u32, l: u32) -> Option<usize> {
    closed_pair(k, l).map(|(_, th)| th)
}

/// Verification subject covering the closed row for `(k, l)`.
pub fn closed_subject(k: u32, l: u32) -> Option<&'static str> {
    closed_pair(k, l).map(|(p, _)| match p {
        (1, 0) => "thm-14",
        (2, 0) => "thm-15",
        (1, 1) => "thm-16",
        (2, 1) => "thm-17",
        _ => "thm-18",
    })
}

/// Full `Q^{(0,k,0,l)}` series over 123-avoiders: closed rows from the threshold on,
/// direct enumeration below it.
pub fn closed_series_0k0l(k: u32, l: u32, trunc: usize) -> Result<TSeries<IntPoly>, Error> {
    let threshold = closed_threshold(k, l).ok_or_else(|| Error::Regime {
        theorem: "closed-0k0l".into(),
        reason: format!("no closed form for (k, l) = ({k}, {l})"),
    })?;
    let spec = QuadrantSpec::counts(0, k, 0, l);
    let width = 2 * (k + l) as usize;
    let coeffs = (0..=trunc)
        .map(|n| {
            if n < threshold {
                return distribution(n, Class::Avoid123, &spec);
            }
            let mut dense = vec![BigInt::zero(); n + 1];
            for (r, v) in closed_row(closed_pair(k, l).unwrap().0, n).into_iter().enumerate() {
                // rows starting at a negative power of x carry 0 there
                if let Some(e) = (n + r).checked_sub(width) {
                    dense[e] = v;
                }
            }
            IntPoly::from_vec(dense)
        })
        .collect();
    Ok(TSeries::from_coeffs(coeffs, trunc))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn listed_closed_values() {
        assert_eq!(closed_coeff_0k0l(1, 0, 5, 1).unwrap(), big(14));
        assert_eq!(closed_coeff_0k0l(2, 2, 8, 0).unwrap(), big(36));
        assert_eq!(closed_coeff_0k0l(1, 1, 5, 1).unwrap(), big(20));
        assert!(closed_coeff_0k0l(3, 0, 8, 0).is_err());
        assert!(closed_coeff_0k0l(2, 2, 6, 0).is_err());
        assert!(closed_coeff_0k0l(1, 1, 6, 3).is_err());
    }

    #[test]
    fn closed_rows_sum_to_catalan() {
        for (pair, th) in CLOSED_PAIRS {
            for n in th..=20 {
                let total: BigInt = closed_row(pair, n).into_iter().sum();
                assert_eq!(total, catalan(n as u64), "{pair:?} n={n}");
            }
        }
    }

    #[test]
    fn extremal_examples() {
        assert_eq!(extremal_coeff(ExtremalFamily::ZeroKZeroL, 1, 1, 0, 5).unwrap(), (3, big(5)));
        assert_eq!(extremal_coeff(ExtremalFamily::KLEmptyZero, 2, 1, 0, 4).unwrap(), (1, big(3)));
        assert_eq!(extremal_coeff(ExtremalFamily::KLEmptyM, 1, 1, 1, 4).unwrap(), (1, big(4)));
        assert!(extremal_coeff(ExtremalFamily::KLEmptyM, 0, 1, 1, 9).is_err());
        assert!(extremal_coeff(ExtremalFamily::ZeroKZeroL, 1, 1, 0, 2).is_err());
    }
}
