//! Dyck paths below the diagonal of an `n × n` grid and the two bijections
//! from 132- and 123-avoiders.
//!
//! The grid origin is the top-left corner, `D` moves one row down and `R` one
//! column right. Grid row `r` (counted from the top) holds value `n + 1 − r`.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::perm::{p123, p132, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    D,
    R,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DyckPath {
    steps: Vec<Step>,
}

/// A `DR` corner: its column (1-based) and how many diagonals lie between it and the main one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Peak {
    pub column: usize,
    pub diagonal: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathStats {
    /// Columns `i >= 1` at which the path passes through `(i, i)`.
    pub returns: Vec<usize>,
    pub ret: usize,
    pub hills: usize,
    pub peaks: Vec<Peak>,
}

/// `P = D·inner·R·rest`, split at the first return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstReturn {
    pub column: usize,
    pub inner: DyckPath,
    pub rest: DyckPath,
}

impl DyckPath {
    pub fn empty() -> Self {
        DyckPath { steps: Vec::new() }
    }

    /// Validates a step sequence, reporting the first offending step (1-based).
    pub fn new(steps: Vec<Step>) -> Result<Self, Error> {
        let mut height: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            height += if *s == Step::D { 1 } else { -1 };
            if height < 0 {
                return Err(Error::InvalidPath {
                    position: i + 1,
                    reason: "more R than D steps so far (path crosses the diagonal)".into(),
                });
            }
        }
        if height != 0 {
            return Err(Error::InvalidPath {
                position: steps.len(),
                reason: format!("path ends {height} rows below the diagonal"),
            });
        }
        Ok(DyckPath { steps })
    }

    /// `(DR)^n`.
    pub fn sawtooth(n: usize) -> Self {
        DyckPath { steps: (0..n).flat_map(|_| [Step::D, Step::R]).collect() }
    }

    /// `D^n R^n`.
    pub fn pyramid(n: usize) -> Self {
        let mut steps = vec![Step::D; n];
        steps.extend(std::iter::repeat_n(Step::R, n));
        DyckPath { steps }
    }

    /// All paths of semilength `n`, ordered with `D < R`.
    pub fn all(n: usize) -> Vec<DyckPath> {
        fn rec(n: usize, downs: usize, rights: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
            if rights == n {
                out.push(DyckPath { steps: cur.clone() });
                return;
            }
            if downs < n {
                cur.push(Step::D);
                rec(n, downs + 1, rights, cur, out);
                cur.pop();
            }
            if rights < downs {
                cur.push(Step::R);
                rec(n, downs, rights + 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
        out
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Number of `D` steps taken before the `j`-th `R` (1-based), for each column.
    fn depths(&self) -> Vec<usize> {
        let mut depth = 0;
        let mut out = Vec::with_capacity(self.semilength());
        for s in &self.steps {
            match s {
                Step::D => depth += 1,
                Step::R => out.push(depth),
            }
        }
        out
    }

    /// Whether the `j`-th `R` is immediately preceded by a `D`, for each column.
    fn corner_columns(&self) -> Vec<bool> {
        let mut out = Vec::with_capacity(self.semilength());
        for (i, s) in self.steps.iter().enumerate() {
            if *s == Step::R {
                out.push(i > 0 && self.steps[i - 1] == Step::D);
            }
        }
        out
    }

    pub fn stats(&self) -> PathStats {
        let mut returns = Vec::new();
        let mut peaks = Vec::new();
        let mut hills = 0;
        let (mut downs, mut rights) = (0usize, 0usize);
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                Step::D => downs += 1,
                Step::R => {
                    rights += 1;
                    if downs == rights {
                        returns.push(rights);
                    }
                    if i > 0 && self.steps[i - 1] == Step::D {
                        let diagonal = downs - rights;
                        peaks.push(Peak { column: rights, diagonal });
                        if diagonal == 0 {
                            hills += 1;
                        }
                    }
                }
            }
        }
        PathStats { ret: returns.len(), returns, hills, peaks }
    }

    /// `D·P·R`.
    pub fn lift(&self) -> DyckPath {
        let mut steps = Vec::with_capacity(self.steps.len() + 2);
        steps.push(Step::D);
        steps.extend_from_slice(&self.steps);
        steps.push(Step::R);
        DyckPath { steps }
    }

    pub fn first_return_decompose(&self) -> Result<FirstReturn, Error> {
        if self.steps.is_empty() {
            return Err(Error::InvalidPath { position: 0, reason: "the empty path has no first return".into() });
        }
        let mut height = 0i64;
        let mut end = 0;
        for (i, s) in self.steps.iter().enumerate() {
            height += if *s == Step::D { 1 } else { -1 };
            if height == 0 {
                end = i;
                break;
            }
        }
        Ok(FirstReturn {
            column: end.div_ceil(2),
            inner: DyckPath { steps: self.steps[1..end].to_vec() },
            rest: DyckPath { steps: self.steps[end + 1..].to_vec() },
        })
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == Step::D { "D" } else { "R" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({self})")
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let steps = s
            .trim()
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'D' | 'd' => Ok(Step::D),
                'R' | 'r' => Ok(Step::R),
                other => Err(Error::InvalidPath {
                    position: i + 1,
                    reason: format!("unexpected character {other:?}; steps are D and R"),
                }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        DyckPath::new(steps)
    }
}

fn require(sigma: &Permutation, pattern: Permutation) -> Result<(), Error> {
    if sigma.avoids(&pattern) {
        Ok(())
    } else {
        Err(Error::NotAvoiding { sigma: sigma.to_string(), pattern: pattern.to_string() })
    }
}

/// Boundary of the cells lying north-east of some point of `G(σ)`: before column `j`
/// the path descends to the row of the running minimum `min(σ_1..σ_j)`.
fn staircase(sigma: &Permutation) -> DyckPath {
    let n = sigma.len();
    let mut steps = Vec::with_capacity(2 * n);
    let mut depth = 0;
    let mut low = u32::MAX;
    for &v in sigma.word() {
        low = low.min(v);
        let target = n + 1 - low as usize;
        while depth < target {
            steps.push(Step::D);
            depth += 1;
        }
        steps.push(Step::R);
    }
    DyckPath { steps }
}

/// Values at the corners of the staircase; `None` for columns without a corner.
fn corner_values(path: &DyckPath) -> Vec<Option<u32>> {
    let n = path.semilength();
    path.depths()
        .into_iter()
        .zip(path.corner_columns())
        .map(|(depth, corner)| corner.then_some((n + 1 - depth) as u32))
        .collect()
}

/// `S_n(132) → D_n`.
pub fn phi(sigma: &Permutation) -> Result<DyckPath, Error> {
    require(sigma, p132())?;
    Ok(staircase(sigma))
}

/// `D_n → S_n(132)`: corners first, then each remaining column takes the lowest
/// free value above the current minimum.
pub fn phi_inv(path: &DyckPath) -> Permutation {
    let n = path.semilength();
    let corners = corner_values(path);
    let mut used = vec![false; n + 2];
    for v in corners.iter().flatten() {
        used[*v as usize] = true;
    }
    let mut word = Vec::with_capacity(n);
    let mut low = u32::MAX;
    for c in &corners {
        match c {
            Some(v) => {
                low = *v;
                word.push(*v);
            }
            None => {
                let v = (low as usize + 1..=n).find(|&v| !used[v]).expect("free value above the minimum");
                used[v] = true;
                word.push(v as u32);
            }
        }
    }
    Permutation::from_word_unchecked(word)
}

/// `S_n(123) → D_n`, same staircase as [`phi`].
pub fn psi(sigma: &Permutation) -> Result<DyckPath, Error> {
    require(sigma, p123())?;
    Ok(staircase(sigma))
}

/// `D_n → S_n(123)`: corners first, then the free values in decreasing order fill
/// the remaining columns from left to right.
pub fn psi_inv(path: &DyckPath) -> Permutation {
    let n = path.semilength();
    let corners = corner_values(path);
    let mut used = vec![false; n + 1];
    for v in corners.iter().flatten() {
        used[*v as usize] = true;
    }
    let mut free = (1..=n as u32).rev().filter(|&v| !used[v as usize]);
    let word = corners.iter().map(|c| c.unwrap_or_else(|| free.next().expect("free value"))).collect();
    Permutation::from_word_unchecked(word)
}

/// `Ψ⁻¹(lift(Ψ(σ)))` for `σ ∈ S_n(123)`.
pub fn lift_123(sigma: &Permutation) -> Result<Permutation, Error> {
    Ok(psi_inv(&psi(sigma)?.lift()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    const GOLDEN: &str = "DDRDDRRRDDRDRDRRDR";

    #[test]
    fn golden_bijections() {
        assert_eq!(phi(&perm("867943251")).unwrap().to_string(), GOLDEN);
        assert_eq!(phi_inv(&path(GOLDEN)), perm("867943251"));
        assert_eq!(psi(&perm("869743251")).unwrap().to_string(), GOLDEN);
        assert_eq!(psi_inv(&path(GOLDEN)), perm("869743251"));
        assert_eq!(lift_123(&perm("869743251")).unwrap(), perm("8,6,10,9,4,3,2,7,1,5"));
    }

    #[test]
    fn domain_checks() {
        assert!(phi(&perm("132")).is_err());
        assert!(psi(&perm("123")).is_err());
        assert_eq!(phi(&Permutation::empty()).unwrap(), DyckPath::empty());
        assert_eq!(phi_inv(&DyckPath::empty()), Permutation::empty());
        assert_eq!(phi(&Permutation::decreasing(5)).unwrap(), DyckPath::sawtooth(5));
    }

    #[test]
    fn stats_examples() {
        let st = path(GOLDEN).stats();
        assert_eq!(st.returns, vec![4, 8, 9]);
        assert_eq!(st.ret, 3);
        let saw = DyckPath::sawtooth(6).stats();
        assert_eq!((saw.ret, saw.hills), (6, 6));
        let pyr = DyckPath::pyramid(4).stats();
        assert_eq!((pyr.ret, pyr.hills), (1, 0));
    }

    #[test]
    fn validator_positions() {
        match "DRR".parse::<DyckPath>() {
            Err(Error::InvalidPath { position, .. }) => assert_eq!(position, 3),
            other => panic!("{other:?}"),
        }
        match "DDX".parse::<DyckPath>() {
            Err(Error::InvalidPath { position, .. }) => assert_eq!(position, 3),
            other => panic!("{other:?}"),
        }
        assert!("DDR".parse::<DyckPath>().is_err());
    }

    #[test]
    fn lift_and_decompose() {
        assert_eq!(DyckPath::empty().lift().to_string(), "DR");
        let fr = path(GOLDEN).first_return_decompose().unwrap();
        assert_eq!(fr.column, 4);
        assert_eq!(fr.rest.to_string(), "DDRDRDRRDR");
        assert_eq!(fr.inner.to_string(), "DRDDRR");
        let fr = path("DR").first_return_decompose().unwrap();
        assert_eq!((fr.column, fr.rest.semilength()), (1, 0));
        let fr = DyckPath::pyramid(5).first_return_decompose().unwrap();
        assert_eq!((fr.column, fr.rest.semilength()), (5, 0));
        assert!(DyckPath::empty().first_return_decompose().is_err());
    }

    #[test]
    fn path_counts() {
        let sizes: Vec<usize> = (0..8).map(|n| DyckPath::all(n).len()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }
}
