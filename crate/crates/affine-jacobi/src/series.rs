//! Level-`K` series `Σ_d p^{d + offset} f_d` truncated at `p`-order `N`.

use std::collections::BTreeMap;

use exact_algebra::{LatticePoly, RatFunc, TermRecord};
use num_rational::Rational64;
use root_data::{parse_rational, Weight};
use serde::{Deserialize, Serialize};

use crate::AffineError;

/// An element of the completed level-`K` group algebra, known through
/// `p`-degree `order` (relative to the global factor `p^offset`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeriesJson", into = "SeriesJson")]
pub struct AffineSeries {
    n: usize,
    level: i64,
    order: i64,
    offset: Rational64,
    layers: BTreeMap<i64, LatticePoly<RatFunc>>,
}

impl AffineSeries {
    pub fn zero(n: usize, level: i64, order: i64) -> Self {
        AffineSeries {
            n,
            level,
            order,
            offset: Rational64::from_integer(0),
            layers: BTreeMap::new(),
        }
    }

    pub fn with_offset(mut self, offset: Rational64) -> Self {
        self.offset = offset;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The level `K`.
    pub fn level(&self) -> i64 {
        self.level
    }

    /// The truncation order `N`: layers above it are unknown.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// The exponent `a` of the global factor `p^a`.
    pub fn offset(&self) -> Rational64 {
        self.offset
    }

    pub fn is_zero(&self) -> bool {
        self.layers.is_empty()
    }

    /// The finite element multiplying `p^{d + offset}`.
    pub fn layer(&self, d: i64) -> LatticePoly<RatFunc> {
        self.layers
            .get(&d)
            .cloned()
            .unwrap_or_else(|| LatticePoly::zero(self.n))
    }

    /// Nonzero layers in increasing degree.
    pub fn layers(&self) -> impl Iterator<Item = (i64, &LatticePoly<RatFunc>)> {
        self.layers.iter().map(|(d, f)| (*d, f))
    }

    /// All terms `(μ, d, c)` of `c e^μ p^{d + offset}`.
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64, &RatFunc)> {
        self.layers
            .iter()
            .flat_map(|(d, f)| f.terms().map(move |(w, c)| (w, *d, c)))
    }

    pub fn coeff(&self, mu: &Weight, d: i64) -> RatFunc {
        self.layers
            .get(&d)
            .map(|f| f.coeff(mu))
            .unwrap_or_else(RatFunc::zero)
    }

    /// Add `c e^μ p^{d + offset}`; terms above the order are dropped.
    pub fn add_term(&mut self, mu: Weight, d: i64, c: RatFunc) {
        if d > self.order || c.is_zero() {
            return;
        }
        let layer = self
            .layers
            .entry(d)
            .or_insert_with(|| LatticePoly::zero(self.n));
        layer.add_term(mu, c);
        if layer.is_empty() {
            self.layers.remove(&d);
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), AffineError> {
        if self.n != other.n || self.level != other.level || self.offset != other.offset {
            return Err(AffineError::Domain(format!(
                "incompatible series (n {} vs {}, level {} vs {}, offset {} vs {})",
                self.n, other.n, self.level, other.level, self.offset, other.offset
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, AffineError> {
        self.check_compatible(other)?;
        let mut out = self.truncate(self.order.min(other.order));
        for (mu, d, c) in other.terms() {
            out.add_term(mu.clone(), d, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AffineError> {
        self.add(&other.scale(&RatFunc::one().neg()))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero(self.n, self.level, self.order).with_offset(self.offset);
        if c.is_zero() {
            return out;
        }
        out.layers = self.layers.iter().map(|(d, f)| (*d, f.scale(c))).collect();
        out
    }

    /// Product; levels and offsets add, and the order is the highest
    /// degree known in both factors.
    pub fn mul(&self, other: &Self) -> Self {
        let lo_a = self.layers.keys().next().copied().unwrap_or(0);
        let lo_b = other.layers.keys().next().copied().unwrap_or(0);
        let order = (self.order + lo_b).min(other.order + lo_a);
        let mut out = Self::zero(self.n, self.level + other.level, order)
            .with_offset(self.offset + other.offset);
        for (da, fa) in &self.layers {
            for (db, fb) in &other.layers {
                if da + db > order {
                    continue;
                }
                let prod = fa.mul(fb);
                for (w, c) in prod.terms() {
                    out.add_term(w.clone(), da + db, c.clone());
                }
            }
        }
        out
    }

    /// Multiply by `p^s`.
    pub fn shift_p(&self, s: i64) -> Self {
        AffineSeries {
            n: self.n,
            level: self.level,
            order: self.order + s,
            offset: self.offset,
            layers: self
                .layers
                .iter()
                .map(|(d, f)| (d + s, f.clone()))
                .collect(),
        }
    }

    /// Multiply by `e^μ` (level unchanged, `μ` finite).
    pub fn shift_weight(&self, mu: &Weight) -> Self {
        AffineSeries {
            layers: self.layers.iter().map(|(d, f)| (*d, f.shift(mu))).collect(),
            ..self.clone()
        }
    }

    /// Drop every layer above `order`.
    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        AffineSeries {
            n: self.n,
            level: self.level,
            order,
            offset: self.offset,
            layers: self
                .layers
                .range(..=order)
                .map(|(d, f)| (*d, f.clone()))
                .collect(),
        }
    }

    /// `Δ̂ = Δ_h − 2K p ∂_p`: `e^μ p^a ↦ ((μ, μ) − 2Ka) e^μ p^a`.
    pub fn laplacian_hat(&self) -> Self {
        let mut out = Self::zero(self.n, self.level, self.order).with_offset(self.offset);
        for (d, f) in &self.layers {
            let a = self.offset + Rational64::from_integer(*d);
            let shift = a * (2 * self.level);
            out.layers.insert(*d, f.diagonal(|w| w.norm2() - shift));
        }
        out.layers.retain(|_, f| !f.is_empty());
        out
    }

    /// Total number of stored terms.
    pub fn len(&self) -> usize {
        self.layers.values().map(|f| f.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct LayerJson {
    pub p: i64,
    pub terms: Vec<TermRecord>,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct SeriesJson {
    pub n: usize,
    #[serde(rename = "K")]
    pub level: i64,
    #[serde(rename = "N")]
    pub order: i64,
    pub offset: String,
    pub layers: Vec<LayerJson>,
}

impl From<AffineSeries> for SeriesJson {
    fn from(s: AffineSeries) -> Self {
        SeriesJson {
            n: s.n,
            level: s.level,
            order: s.order,
            offset: s.offset.to_string(),
            layers: s
                .layers
                .iter()
                .map(|(d, f)| LayerJson {
                    p: *d,
                    terms: f.records(),
                })
                .collect(),
        }
    }
}

impl TryFrom<SeriesJson> for AffineSeries {
    type Error = AffineError;

    fn try_from(js: SeriesJson) -> Result<Self, Self::Error> {
        let offset = parse_rational(&js.offset)?;
        let mut out = AffineSeries::zero(js.n, js.level, js.order).with_offset(offset);
        for layer in js.layers {
            if layer.p > js.order {
                return Err(AffineError::Domain(format!(
                    "layer p^{} lies above the truncation order {}",
                    layer.p, js.order
                )));
            }
            let f = LatticePoly::from_records(js.n, &layer.terms)?;
            for (w, c) in f.terms() {
                out.add_term(w.clone(), layer.p, c.clone());
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> AffineSeries {
        let mut s = AffineSeries::zero(2, 1, 3);
        s.add_term(Weight::zero(2), 0, RatFunc::one());
        s.add_term(Weight::from_gl(&[1, -1]), 1, RatFunc::from_integer(-2));
        s.add_term(Weight::from_gl(&[1, -1]), 4, RatFunc::one());
        s
    }

    #[test]
    fn truncates_on_insert() {
        let s = sample();
        assert_eq!(s.len(), 2);
        assert!(s.coeff(&Weight::from_gl(&[1, -1]), 4).is_zero());
    }

    #[test]
    fn product_order() {
        let s = sample();
        let t = s.shift_p(1);
        let prod = s.mul(&t);
        assert_eq!(prod.order(), 4);
        assert_eq!(prod.level(), 2);
        assert!(prod.coeff(&Weight::zero(2), 1).is_one());
    }

    #[test]
    fn json_round_trip() {
        let s = sample().with_offset(Rational64::new(1, 8));
        let js = serde_json::to_value(&s).unwrap();
        assert_eq!(js["offset"], "1/8");
        assert_eq!(js["K"], 1);
        let back: AffineSeries = serde_json::from_value(js).unwrap();
        assert_eq!(back, s);
    }
}
