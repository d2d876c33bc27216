//! Partitions with exactly `n` (possibly zero) parts: the `gl_n` picture of
//! dominant weights.

use std::fmt;

use root_data::partitions::partitions;
use root_data::Weight;
use serde::{Deserialize, Serialize};

use crate::MacdonaldError;

/// A weakly decreasing sequence of `n` nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    /// Validate and pad with zeros to `n` parts.
    pub fn new(parts: &[i64], n: usize) -> Result<Self, MacdonaldError> {
        if parts.len() > n {
            return Err(MacdonaldError::Domain(format!(
                "partition {parts:?} has more than {n} parts"
            )));
        }
        let mut p = parts.to_vec();
        p.resize(n, 0);
        Self::try_from(p)
    }

    pub fn zero(n: usize) -> Self {
        Partition { parts: vec![0; n] }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    /// `|λ|`.
    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// The `sl_n` weight obtained by subtracting the mean.
    pub fn weight(&self) -> Weight {
        Weight::from_gl(&self.parts)
    }

    /// Dominance order: equal size and `μ ≤ λ` partial sums.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        if self.size() != other.size() || self.n() != other.n() {
            return false;
        }
        let mut a = 0;
        let mut b = 0;
        for (x, y) in self.parts.iter().zip(&other.parts) {
            a += x;
            b += y;
            if a > b {
                return false;
            }
        }
        true
    }

    /// `Σ_i λ_i ρ_i` scaled by two: `Σ_i λ_i (n + 1 − 2i)`.
    pub fn two_rho_pairing(&self) -> i64 {
        let n = self.n() as i64;
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &l)| l * (n - 1 - 2 * i as i64))
            .sum()
    }

    /// All partitions `μ ≤ λ`, with `λ` first and every partition listed
    /// before the ones it dominates.
    pub fn dominated(&self) -> Vec<Partition> {
        let mut out: Vec<Partition> = partitions(self.size(), self.n())
            .into_iter()
            .map(|parts| Partition { parts })
            .filter(|mu| mu.dominated_by(self))
            .collect();
        // The height (λ − μ, ρ) strictly increases along the order.
        out.sort_by(|a, b| {
            let ha = self.two_rho_pairing() - a.two_rho_pairing();
            let hb = self.two_rho_pairing() - b.two_rho_pairing();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        out
    }

    /// All partitions with `n` parts and size at most `max_size`.
    pub fn all_up_to(n: usize, max_size: i64) -> Vec<Partition> {
        (0..=max_size)
            .flat_map(|s| partitions(s, n))
            .map(|parts| Partition { parts })
            .collect()
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = MacdonaldError;

    fn try_from(parts: Vec<i64>) -> Result<Self, Self::Error> {
        if parts.is_empty() {
            return Err(MacdonaldError::Domain("empty partition".into()));
        }
        if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(MacdonaldError::Domain(format!(
                "{parts:?} is not a weakly decreasing sequence of nonnegative integers"
            )));
        }
        Ok(Partition { parts })
    }
}

impl From<Partition> for Vec<i64> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
