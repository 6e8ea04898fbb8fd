//! Quadrant marked mesh patterns: specs, per-position matching, counts and distributions.
//!
//! Relative to the point `(i, σ_i)` the quadrants are numbered counter-clockwise
//! starting north-east: I is right and above, II left and above, III left and
//! below, IV right and below.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::perm::{for_each_avoider, p123, Class, Permutation};
use crate::series::{BiPoly, IntPoly};

/// One coordinate of a quadrant spec.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    /// At least this many points (0 imposes nothing).
    Count(u32),
    /// No points at all.
    Empty,
}

impl Slot {
    pub fn accepts(self, points: u32) -> bool {
        match self {
            Slot::Count(k) => points >= k,
            Slot::Empty => points == 0,
        }
    }

    pub fn count(self) -> Option<u32> {
        match self {
            Slot::Count(k) => Some(k),
            Slot::Empty => None,
        }
    }

    pub fn is_empty_slot(self) -> bool {
        self == Slot::Empty
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slot::Count(k) => write!(f, "{k}"),
            Slot::Empty => f.write_str("e"),
        }
    }
}

impl FromStr for Slot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("e") || s == "∅" {
            return Ok(Slot::Empty);
        }
        s.parse::<u32>().map(Slot::Count).map_err(|_| Error::InvalidSpec {
            input: s.to_string(),
            reason: "each slot must be a nonnegative integer or 'e'".into(),
        })
    }
}

/// `MMP(a, b, c, d)`: one slot per quadrant I–IV.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadrantSpec {
    pub upper_right: Slot,
    pub upper_left: Slot,
    pub lower_left: Slot,
    pub lower_right: Slot,
}

impl QuadrantSpec {
    pub fn new(upper_right: Slot, upper_left: Slot, lower_left: Slot, lower_right: Slot) -> Self {
        QuadrantSpec { upper_right, upper_left, lower_left, lower_right }
    }

    /// All four slots numeric.
    pub fn counts(a: u32, b: u32, c: u32, d: u32) -> Self {
        QuadrantSpec::new(Slot::Count(a), Slot::Count(b), Slot::Count(c), Slot::Count(d))
    }

    pub fn slots(&self) -> [Slot; 4] {
        [self.upper_right, self.upper_left, self.lower_left, self.lower_right]
    }

    pub fn accepts(&self, q: &QuadrantCounts) -> bool {
        self.slots().iter().zip(q.as_array()).all(|(s, c)| s.accepts(c))
    }

    /// `(a,b,c,d) → (c,d,a,b)`, the effect of reverse-complement.
    pub fn rotated(&self) -> Self {
        QuadrantSpec::new(self.lower_left, self.lower_right, self.upper_right, self.upper_left)
    }

    /// `(a,b,c,d) → (a,d,c,b)`, the effect of inverse.
    pub fn transposed(&self) -> Self {
        QuadrantSpec::new(self.upper_right, self.lower_right, self.lower_left, self.upper_left)
    }

    /// Compact tag used in file names, e.g. `00e0`; multi-digit slots are joined with `_`.
    pub fn tag(&self) -> String {
        let parts: Vec<String> = self.slots().iter().map(Slot::to_string).collect();
        if parts.iter().all(|p| p.len() == 1) {
            parts.concat()
        } else {
            parts.join("_")
        }
    }
}

impl fmt::Display for QuadrantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.upper_right, self.upper_left, self.lower_left, self.lower_right)
    }
}

impl FromStr for QuadrantSpec {
    type Err = Error;

    /// Accepts `a,b,c,d` or the compact four-character form `00e0`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let body = s.trim().trim_start_matches("MMP").trim_start_matches('(').trim_end_matches(')');
        let pieces: Vec<String> = if body.contains(',') {
            body.split(',').map(str::to_string).collect()
        } else {
            body.chars().map(|c| c.to_string()).collect()
        };
        if pieces.len() != 4 {
            return Err(Error::InvalidSpec {
                input: s.to_string(),
                reason: format!("expected 4 slots, found {}", pieces.len()),
            });
        }
        let mut slots = [Slot::Empty; 4];
        for (slot, piece) in slots.iter_mut().zip(&pieces) {
            *slot = piece.parse().map_err(|_| Error::InvalidSpec {
                input: s.to_string(),
                reason: format!("slot {piece:?} is neither a nonnegative integer nor 'e'"),
            })?;
        }
        Ok(QuadrantSpec::new(slots[0], slots[1], slots[2], slots[3]))
    }
}

/// Points of `G(σ)` in each quadrant around one position.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct QuadrantCounts {
    pub upper_right: u32,
    pub upper_left: u32,
    pub lower_left: u32,
    pub lower_right: u32,
}

impl QuadrantCounts {
    pub fn as_array(&self) -> [u32; 4] {
        [self.upper_right, self.upper_left, self.lower_left, self.lower_right]
    }

    pub fn total(&self) -> u32 {
        self.as_array().iter().sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatchReport {
    pub quadrant_counts: QuadrantCounts,
    pub matched: bool,
}

fn check_position(sigma: &Permutation, i: usize) -> Result<(), Error> {
    if i == 0 || i > sigma.len() {
        return Err(Error::PositionOutOfRange { position: i, len: sigma.len() });
    }
    Ok(())
}

fn counts_unchecked(sigma: &Permutation, i: usize) -> QuadrantCounts {
    let word = sigma.word();
    let n = word.len() as u32;
    let v = word[i - 1];
    let lower_left = word[..i - 1].iter().filter(|&&w| w < v).count() as u32;
    let upper_left = (i as u32 - 1) - lower_left;
    let lower_right = (v - 1) - lower_left;
    let upper_right = n - i as u32 - lower_right;
    QuadrantCounts { upper_right, upper_left, lower_left, lower_right }
}

/// Quadrant tallies around `(i, σ_i)`, with `i` 1-based.
pub fn quadrants_at(sigma: &Permutation, i: usize) -> Result<QuadrantCounts, Error> {
    check_position(sigma, i)?;
    Ok(counts_unchecked(sigma, i))
}

/// Quadrant tallies for every position, in order.
pub fn all_quadrants(sigma: &Permutation) -> Vec<QuadrantCounts> {
    (1..=sigma.len()).map(|i| counts_unchecked(sigma, i)).collect()
}

pub fn match_report(sigma: &Permutation, i: usize, spec: &QuadrantSpec) -> Result<MatchReport, Error> {
    let quadrant_counts = quadrants_at(sigma, i)?;
    Ok(MatchReport { quadrant_counts, matched: spec.accepts(&quadrant_counts) })
}

pub fn matches_at(sigma: &Permutation, i: usize, spec: &QuadrantSpec) -> Result<bool, Error> {
    Ok(match_report(sigma, i, spec)?.matched)
}

/// Number of positions of `σ` matching `spec`.
pub fn mmp_count(sigma: &Permutation, spec: &QuadrantSpec) -> usize {
    (1..=sigma.len()).filter(|&i| spec.accepts(&counts_unchecked(sigma, i))).count()
}

/// Whether `σ_i` has nothing below and to its left (a left-to-right minimum).
pub fn is_peak(q: &QuadrantCounts) -> bool {
    q.lower_left == 0
}

/// `Σ_{σ ∈ S_n(class)} x^{mmp(σ)}` by direct enumeration.
pub fn distribution(n: usize, class: Class, spec: &QuadrantSpec) -> IntPoly {
    let mut hist = vec![0u64; n + 1];
    for_each_avoider(n, &class.pattern(), |sigma| hist[mmp_count(sigma, spec)] += 1);
    IntPoly::from_counts(&hist)
}

/// As [`distribution`] with the class given by its pattern.
pub fn distribution_for(n: usize, tau: &Permutation, spec: &QuadrantSpec) -> Result<IntPoly, Error> {
    Ok(distribution(n, Class::try_from(tau)?, spec))
}

/// Over `S_n(123)`: `x0` marks peaks matching `MMP(0,k1,0,0)`, `x1` marks non-peaks matching `MMP(0,k2,0,0)`.
pub fn bivariate_distribution(n: usize, peak_min: u32, other_min: u32) -> BiPoly {
    let mut out = BiPoly::zero();
    for_each_avoider(n, &p123(), |sigma| {
        let (mut e0, mut e1) = (0u32, 0u32);
        for q in all_quadrants(sigma) {
            if is_peak(&q) {
                e0 += u32::from(q.upper_left >= peak_min);
            } else {
                e1 += u32::from(q.upper_left >= other_min);
            }
        }
        out.add_term(e0, e1, 1.into());
    });
    out
}

fn require_123(sigma: &Permutation) -> Result<(), Error> {
    if sigma.avoids(&p123()) {
        Ok(())
    } else {
        Err(Error::NotAvoiding { sigma: sigma.to_string(), pattern: "123".into() })
    }
}

/// `(r, s)`: points in the four corner rectangles and in the whole frame made of the
/// top `k` rows, bottom `l` rows, left `k` columns and right `l` columns.
pub fn corner_frame_counts(sigma: &Permutation, k: usize, l: usize) -> Result<(usize, usize), Error> {
    require_123(sigma)?;
    let n = sigma.len();
    let (mut corner, mut frame) = (0, 0);
    for (idx, &v) in sigma.word().iter().enumerate() {
        let (j, v) = (idx + 1, v as usize);
        let in_cols = j <= k || j + l > n;
        let in_rows = v + k > n || v <= l;
        corner += usize::from(in_cols && in_rows);
        frame += usize::from(in_cols || in_rows);
    }
    Ok((corner, frame))
}

/// `mmp^(0,k,0,l)(σ)` for `σ ∈ S_n(123)`: points left after deleting the frame.
pub fn fast_mmp_0k0l(sigma: &Permutation, k: usize, l: usize) -> Result<usize, Error> {
    require_123(sigma)?;
    let n = sigma.len();
    Ok(sigma
        .word()
        .iter()
        .enumerate()
        .filter(|&(idx, &v)| {
            let (j, v) = (idx + 1, v as usize);
            k < j && j + l <= n && l < v && v + k <= n
        })
        .count())
}
