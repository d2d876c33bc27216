//! Weights of `sl_n` in epsilon coordinates.
//!
//! A [`Weight`] stores integer numerators over the implicit common
//! denominator `n`, so every element of the weight lattice `P` (and of the
//! half-integral shifts such as `rho` for even `n`) has an exact, hashable
//! representation. Coordinates always sum to zero.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::RootDataError;

/// An element of `P ⊗ Q` for `sl_n`, stored as `coords[i] = num[i] / n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    num: Vec<i64>,
}

impl Weight {
    /// The zero weight of `sl_n`.
    pub fn zero(n: usize) -> Self {
        Weight { num: vec![0; n] }
    }

    /// Build from numerators over the denominator `n = num.len()`.
    ///
    /// The numerators must sum to zero.
    pub fn from_numerators(num: Vec<i64>) -> Result<Self, RootDataError> {
        if num.len() < 2 {
            return Err(RootDataError::InvalidRank(num.len()));
        }
        if num.iter().sum::<i64>() != 0 {
            return Err(RootDataError::NotTraceless);
        }
        Ok(Weight { num })
    }

    /// Build from exact rational epsilon coordinates summing to zero whose
    /// denominators divide `n`.
    pub fn from_rationals(coords: &[Rational64]) -> Result<Self, RootDataError> {
        let n = coords.len() as i64;
        let mut num = Vec::with_capacity(coords.len());
        for c in coords {
            let scaled = *c * Rational64::from_integer(n);
            if !scaled.is_integer() {
                return Err(RootDataError::Denominator(c.to_string()));
            }
            num.push(scaled.to_integer());
        }
        Self::from_numerators(num)
    }

    /// Project a `gl_n` exponent vector to `sl_n` by subtracting the mean.
    pub fn from_gl(parts: &[i64]) -> Self {
        let n = parts.len() as i64;
        let total: i64 = parts.iter().sum();
        Weight {
            num: parts.iter().map(|&p| n * p - total).collect(),
        }
    }

    /// Rank plus one.
    pub fn n(&self) -> usize {
        self.num.len()
    }

    /// Numerators over the common denominator `n`.
    pub fn numerators(&self) -> &[i64] {
        &self.num
    }

    /// Exact epsilon coordinates.
    pub fn coords(&self) -> Vec<Rational64> {
        let n = self.n() as i64;
        self.num.iter().map(|&a| Rational64::new(a, n)).collect()
    }

    /// The `i`-th epsilon coordinate.
    pub fn coord(&self, i: usize) -> Rational64 {
        Rational64::new(self.num[i], self.n() as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|&a| a == 0)
    }

    /// The invariant form `(λ, μ) = Σ λ_i μ_i`.
    pub fn pair(&self, other: &Weight) -> Rational64 {
        let n = self.n() as i64;
        Rational64::new(self.pair_scaled(other), n * n)
    }

    /// `n² (λ, μ)`, an integer.
    pub fn pair_scaled(&self, other: &Weight) -> i64 {
        assert_eq!(self.n(), other.n(), "weights of different rank");
        self.num.iter().zip(&other.num).map(|(a, b)| a * b).sum()
    }

    /// `(λ, λ)`.
    pub fn norm2(&self) -> Rational64 {
        self.pair(self)
    }

    /// Integer multiple.
    pub fn scale(&self, c: i64) -> Weight {
        Weight {
            num: self.num.iter().map(|a| a * c).collect(),
        }
    }

    /// Whether `λ ∈ P`: all coordinate differences are integers.
    pub fn in_weight_lattice(&self) -> bool {
        let n = self.n() as i64;
        self.num
            .windows(2)
            .all(|w| (w[0] - w[1]).is_multiple_of(&n))
    }

    /// Whether `λ ∈ Q`: integer coordinates (summing to zero).
    pub fn in_root_lattice(&self) -> bool {
        let n = self.n() as i64;
        self.num.iter().all(|a| a.is_multiple_of(&n))
    }

    /// Whether `λ ∈ K·Q`.
    pub fn in_scaled_root_lattice(&self, k: i64) -> bool {
        let m = self.n() as i64 * k;
        self.num.iter().all(|a| a.is_multiple_of(&m))
    }

    /// Dominance for `sl_n`: coordinates weakly decreasing.
    ///
    /// Integrality is not checked here; see [`Weight::in_weight_lattice`].
    pub fn is_dominant(&self) -> bool {
        self.num.windows(2).all(|w| w[0] >= w[1])
    }

    /// The dominant element of the `S_n` orbit.
    pub fn dominant_rep(&self) -> Weight {
        let mut num = self.num.clone();
        num.sort_unstable_by(|a, b| b.cmp(a));
        Weight { num }
    }

    /// Permute coordinates: result `i` is `self[perm[i]]`.
    pub fn permuted(&self, perm: &[usize]) -> Weight {
        Weight {
            num: perm.iter().map(|&j| self.num[j]).collect(),
        }
    }

    /// Swap coordinates `i` and `j` (the reflection in `ε_i − ε_j`).
    pub fn swapped(&self, i: usize, j: usize) -> Weight {
        let mut num = self.num.clone();
        num.swap(i, j);
        Weight { num }
    }

    /// `λ ≤ μ` in the dominance order: `μ − λ ∈ Q⁺`.
    pub fn dominated_by(&self, other: &Weight) -> bool {
        let n = self.n() as i64;
        let mut partial = 0i64;
        for (a, b) in other.num.iter().zip(&self.num) {
            let d = a - b;
            if !d.is_multiple_of(&n) {
                return false;
            }
            partial += d;
            if partial < 0 {
                return false;
            }
        }
        partial == 0
    }

    /// `gl_n` lift with last coordinate zero; integral when `λ ∈ P`.
    pub fn to_gl(&self) -> Option<Vec<i64>> {
        let n = self.n() as i64;
        let last = *self.num.last().expect("nonempty weight");
        self.num
            .iter()
            .map(|a| {
                let d = a - last;
                if d.is_multiple_of(&n) {
                    Some(d / n)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Coordinates formatted as reduced `num/den` strings, or plain
    /// integers when the denominator is 1.
    pub fn coord_strings(&self) -> Vec<String> {
        self.coords()
            .iter()
            .map(|c| {
                if c.is_integer() {
                    c.numer().to_string()
                } else {
                    format!("{}/{}", c.numer(), c.denom())
                }
            })
            .collect()
    }

    /// Parse coordinates given as `num/den` or integer strings.
    pub fn parse_coords(items: &[String]) -> Result<Self, RootDataError> {
        let coords = items
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rationals(&coords)
    }
}

/// Parse `a/b` or `a` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational64, RootDataError> {
    let s = s.trim();
    let bad = || RootDataError::Parse(s.to_string());
    match s.split_once('/') {
        Some((a, b)) => {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(Rational64::new(a, b))
        }
        None => Ok(Rational64::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if c.is_integer() {
                write!(f, "{}", c.numer())?;
            } else {
                write!(f, "{}/{}", c.numer(), c.denom())?;
            }
        }
        write!(f, ")")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.n(), rhs.n(), "weights of different rank");
        Weight {
            num: self.num.iter().zip(&rhs.num).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.n(), rhs.n(), "weights of different rank");
        Weight {
            num: self.num.iter().zip(&rhs.num).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            num: self.num.iter().map(|a| -a).collect(),
        }
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coord_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        Weight::parse_coords(&items).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_projection_subtracts_mean() {
        let w = Weight::from_gl(&[2, 0]);
        assert_eq!(w.coords(), vec![Rational64::from(1), Rational64::from(-1)]);
        let w = Weight::from_gl(&[1, 0, 0]);
        assert_eq!(w.coord(0), Rational64::new(2, 3));
        assert_eq!(w.coord(1), Rational64::new(-1, 3));
    }

    #[test]
    fn dominance_uses_partial_sums() {
        let lam = Weight::from_gl(&[2, 0, 0]);
        let mu = Weight::from_gl(&[1, 1, 0]);
        assert!(mu.dominated_by(&lam));
        assert!(!lam.dominated_by(&mu));
        let omega = Weight::from_gl(&[1, 0]);
        assert!(!Weight::zero(2).dominated_by(&omega));
    }

    #[test]
    fn rational_strings_round_trip() {
        let w = Weight::from_gl(&[1, 0, 0]);
        let back = Weight::parse_coords(&w.coord_strings()).unwrap();
        assert_eq!(w, back);
        assert_eq!(w.coord_strings()[0], "2/3");
        let alpha = Weight::from_gl(&[1, -1]);
        assert_eq!(alpha.coord_strings(), vec!["1", "-1"]);
        assert_eq!(Weight::parse_coords(&alpha.coord_strings()).unwrap(), alpha);
    }

    #[test]
    fn rejects_non_traceless() {
        assert!(Weight::from_numerators(vec![1, 0]).is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn lattice_membership() {
        let omega = Weight::from_gl(&[1, 0]);
        assert!(omega.in_weight_lattice());
        assert!(!omega.in_root_lattice());
        assert!(omega.scale(2).in_root_lattice());
        assert_eq!(omega.to_gl(), Some(vec![1, 0]));
    }
}
