//! Weights in the epsilon-basis with a two-block split.
//!
//! A weight is a rank-m vector of exact half-integers together with a split
//! index k marking the boundary between the first block (positions 1..k) and
//! the second block. The textual form matches the bracket notation used
//! throughout: `[3/2,-1/2|3,2,1]`. Weights are immutable values.

use std::fmt;
use std::str::FromStr;

use crate::halfint::{HalfInt, ParseHalfIntError};
use crate::root::Root;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Weight<T: Scalar = i64> {
    coords: Vec<HalfInt<T>>,
    split: usize,
}

impl<T: Scalar> Weight<T> {
    pub fn new(coords: Vec<HalfInt<T>>, split: usize) -> Self {
        assert!(split <= coords.len(), "split index beyond rank");
        Weight { coords, split }
    }

    /// Builds a weight out of doubled coordinate values.
    pub fn from_twice(twice: &[T], split: usize) -> Self {
        Weight::new(twice.iter().map(|&t| HalfInt::from_twice(t)).collect(), split)
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn split(&self) -> usize {
        self.split
    }

    pub fn coords(&self) -> &[HalfInt<T>] {
        &self.coords
    }

    /// 1-based coordinate access.
    pub fn coord(&self, i: usize) -> HalfInt<T> {
        self.coords[i - 1]
    }

    pub fn first_block(&self) -> &[HalfInt<T>] {
        &self.coords[..self.split]
    }

    pub fn second_block(&self) -> &[HalfInt<T>] {
        &self.coords[self.split..]
    }

    /// Returns the same coordinates under a different split.
    pub fn with_split(&self, split: usize) -> Self {
        Weight::new(self.coords.clone(), split)
    }

    /// Pairing of the weight with the coroot of `beta`: 2(w,b)/(b,b).
    ///
    /// Short roots of B have squared length 1, so `Short(i)` pairs to twice
    /// the i-th coordinate; the long roots pair to a_i -+ a_j.
    pub fn pairing(&self, beta: Root) -> HalfInt<T> {
        debug_assert!(beta.is_valid_for_rank(self.rank()));
        match beta {
            Root::Diff(i, j) => self.coord(i) - self.coord(j),
            Root::Sum(i, j) => self.coord(i) + self.coord(j),
            Root::Short(i) => self.coord(i) + self.coord(i),
        }
    }

    /// Root reflection: equals the weight minus `pairing(beta)` times `beta`.
    pub fn reflect(&self, beta: Root) -> Self {
        debug_assert!(beta.is_valid_for_rank(self.rank()));
        let mut coords = self.coords.clone();
        match beta {
            Root::Diff(i, j) => coords.swap(i - 1, j - 1),
            Root::Sum(i, j) => {
                coords[i - 1] = -self.coord(j);
                coords[j - 1] = -self.coord(i);
            }
            Root::Short(i) => coords[i - 1] = -self.coord(i),
        }
        Weight { coords, split: self.split }
    }

    /// Evaluation on the grading element: the sum of first-block coordinates.
    pub fn grading_eval(&self) -> HalfInt<T> {
        self.first_block().iter().copied().sum()
    }

    /// The dominant representative on the same Weyl orbit: absolute values
    /// of the coordinates sorted in descending order, all signs positive.
    /// The result carries no block structure (split 0).
    pub fn dominant_rep(&self) -> Self {
        let mut coords: Vec<HalfInt<T>> =
            self.coords.iter().map(|c| c.abs()).collect();
        coords.sort_unstable_by(|a, b| b.cmp(a));
        Weight { coords, split: 0 }
    }

    /// True when the weight is non-increasing with all coordinates >= 0.
    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1])
            && self.coords.last().map_or(true, |c| !(-*c).is_positive())
    }

    /// Singular weights annihilate some positive coroot: a zero coordinate
    /// or two coordinates of equal absolute value.
    pub fn is_singular(&self) -> bool {
        let mut abs: Vec<HalfInt<T>> =
            self.coords.iter().map(|c| c.abs()).collect();
        abs.sort_unstable();
        abs.first().map_or(false, |c| c.is_zero())
            || abs.windows(2).any(|w| w[0] == w[1])
    }

    /// Multiset of coordinate absolute values, sorted descending.
    pub fn abs_multiset(&self) -> Vec<HalfInt<T>> {
        self.dominant_rep().coords
    }
}

impl<T: Scalar> fmt::Display for Weight<T> {
    /// Canonical bracket form, e.g. `[3/2,-1/2|3,2,1]`. The bar is printed
    /// only for a proper split; block-free weights print as `[3,2,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (pos, c) in self.coords.iter().enumerate() {
            if pos > 0 && pos != self.split {
                write!(f, ",")?;
            }
            if pos == self.split && pos > 0 {
                write!(f, "|")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl<T: Scalar> fmt::Debug for Weight<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseWeightError {
    #[error("weight must be wrapped in brackets: {0:?}")]
    MissingBrackets(String),
    #[error("weight has more than one block separator: {0:?}")]
    TooManyBlocks(String),
    #[error("empty weight")]
    Empty,
    #[error(transparent)]
    BadToken(#[from] ParseHalfIntError),
}

impl<T: Scalar> FromStr for Weight<T> {
    type Err = ParseWeightError;

    /// Inverse of the canonical printer. `|` separates the blocks; a weight
    /// without a bar parses with split 0.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| ParseWeightError::MissingBrackets(s.to_string()))?;
        let mut blocks = inner.split('|');
        let first = blocks.next().unwrap_or("");
        let second = blocks.next();
        if blocks.next().is_some() {
            return Err(ParseWeightError::TooManyBlocks(s.to_string()));
        }
        let parse_block = |block: &str| -> Result<Vec<HalfInt<T>>, ParseWeightError> {
            if block.is_empty() {
                return Ok(Vec::new());
            }
            block
                .split(',')
                .map(|tok| tok.trim().parse::<HalfInt<T>>().map_err(Into::into))
                .collect()
        };
        let head = parse_block(first)?;
        // a bar-less weight carries no block structure (split 0)
        let (split, mut coords) = match second {
            Some(_) => (head.len(), head),
            None => (0, head),
        };
        if let Some(second) = second {
            coords.extend(parse_block(second)?);
        }
        if coords.is_empty() {
            return Err(ParseWeightError::Empty);
        }
        Ok(Weight::new(coords, split))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type W = Weight<i64>;

    fn w(s: &str) -> W {
        s.parse().unwrap()
    }

    #[test]
    fn pairing_examples() {
        // delta of B_3 pairs to 1 with every simple root
        let delta = w("[5/2,3/2,1/2]");
        assert_eq!(delta.pairing(Root::Diff(1, 2)).to_string(), "1");
        assert_eq!(delta.pairing(Root::Short(3)).to_string(), "1");
        assert_eq!(w("[3/2,1/2]").pairing(Root::Sum(1, 2)).to_string(), "2");
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(
            w("[3/2,-1/2|3,2,1]").reflect(Root::Sum(1, 2)),
            w("[1/2,-3/2|3,2,1]")
        );
        assert_eq!(w("[1/2]").reflect(Root::Short(1)), w("[-1/2]"));
        assert_eq!(
            w("[3/2,1/2]").reflect(Root::Diff(1, 2)),
            w("[1/2,3/2]")
        );
    }

    #[test]
    fn reflect_matches_linear_formula() {
        // s_b(w) = w - pairing(w,b) * b, spot-checked coordinatewise
        let lam = w("[5/2,-3/2,2|1]");
        for beta in crate::root::positive_roots(4) {
            let refl = lam.reflect(beta);
            let c = lam.pairing(beta);
            let mut expect = lam.coords().to_vec();
            match beta {
                Root::Diff(i, j) => {
                    expect[i - 1] -= c;
                    expect[j - 1] += c;
                }
                Root::Sum(i, j) => {
                    expect[i - 1] -= c;
                    expect[j - 1] -= c;
                }
                Root::Short(i) => expect[i - 1] -= c,
            }
            assert_eq!(refl.coords(), expect.as_slice(), "beta={beta}");
        }
    }

    #[test]
    fn grading_eval_sums_first_block() {
        assert_eq!(w("[3/2,1/2|3,2,1]").grading_eval().to_string(), "2");
        let a = w("[5/2,1/2|9/2,7/2,3/2]").grading_eval();
        let b = w("[5/2,-1/2|9/2,7/2,3/2]").grading_eval();
        assert_eq!((a - b).to_string(), "1");
        let c = w("[1/2,-5/2|9/2,7/2,3/2]").grading_eval();
        assert_eq!((b - c).to_string(), "4");
    }

    #[test]
    fn dominant_rep_sorts_absolute_values() {
        assert_eq!(w("[1/2,-3/2|3,2,1]").dominant_rep(), w("[3,2,3/2,1,1/2]"));
        assert_eq!(w("[3/2,1/2|3,2,1]").dominant_rep(), w("[3,2,3/2,1,1/2]"));
        let dom = w("[3,2,3/2,1,1/2]");
        assert_eq!(dom.dominant_rep(), dom);
    }

    #[test]
    fn singularity_detection() {
        assert!(!w("[3,2,3/2,1,1/2]").is_singular());
        assert!(w("[2,1,1]").is_singular());
        assert!(w("[1,0]").is_singular());
        assert!(w("[2,-2]").is_singular());
    }

    #[test]
    fn display_round_trip_on_goldens() {
        for s in [
            "[3/2,-1/2|3,2,1]",
            "[3,2,3/2,1,1/2]",
            "[1/2|1]",
            "[-1/2,-3/2|3,2,1]",
            "[2,1|3/2,1/2]",
        ] {
            assert_eq!(w(s).to_string(), s);
        }
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!("[1/3,1]".parse::<W>().is_err());
        assert!("[1|2|3]".parse::<W>().is_err());
        assert!("1,2".parse::<W>().is_err());
        assert!("[]".parse::<W>().is_err());
        assert!("[1,,2]".parse::<W>().is_err());
    }

    #[test]
    fn split_affects_equality() {
        assert_ne!(w("[3/2|1/2,1]"), w("[3/2,1/2|1]"));
        assert_eq!(w("[3/2,1/2|1]").with_split(1), w("[3/2|1/2,1]"));
    }
}
