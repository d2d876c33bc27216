//! Affine weights `λ̂ = λ + aδ + KΛ₀`.

use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::Weight;

/// An affine weight with finite part `λ`, level `K` and `δ`-coefficient `a`.
///
/// The pairing is `(λ̂, μ̂) = (λ, μ) + K_λ a_μ + K_μ a_λ`, from
/// `(Λ₀, δ) = 1` and `(Λ₀, Λ₀) = (δ, δ) = 0`. The p-degree is `−a`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineWeight {
    pub finite: Weight,
    pub level: i64,
    #[serde(with = "rational_string")]
    pub delta: Rational64,
}

impl AffineWeight {
    pub fn new(finite: Weight, level: i64, delta: Rational64) -> Self {
        AffineWeight {
            finite,
            level,
            delta,
        }
    }

    /// `λ + KΛ₀`.
    pub fn from_finite(finite: Weight, level: i64) -> Self {
        Self::new(finite, level, Rational64::from(0))
    }

    /// The p-degree `−a`.
    pub fn p_degree(&self) -> Rational64 {
        -self.delta
    }

    pub fn pair(&self, other: &AffineWeight) -> Rational64 {
        self.finite.pair(&other.finite)
            + Rational64::from(self.level) * other.delta
            + Rational64::from(other.level) * self.delta
    }

    pub fn add(&self, other: &AffineWeight) -> AffineWeight {
        AffineWeight::new(
            &self.finite + &other.finite,
            self.level + other.level,
            self.delta + other.delta,
        )
    }

    /// `λ̂ + cδ`.
    pub fn shift_delta(&self, c: Rational64) -> AffineWeight {
        AffineWeight::new(self.finite.clone(), self.level, self.delta + c)
    }

    /// Translation by `β ∈ Q∨`:
    /// `λ̂ ↦ λ̂ + Kβ − (⟨λ̂, β⟩ + ½K(β, β))δ`.
    pub fn translate(&self, beta: &Weight) -> AffineWeight {
        let k = self.level;
        let finite = &self.finite + &beta.scale(k);
        let shift = self.finite.pair(beta) + Rational64::new(k, 2) * beta.norm2();
        AffineWeight::new(finite, k, self.delta - shift)
    }

    /// Permutation of the finite part, the finite Weyl group action.
    pub fn permuted(&self, perm: &[usize]) -> AffineWeight {
        AffineWeight::new(self.finite.permuted(perm), self.level, self.delta)
    }
}

impl fmt::Debug for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}δ + {}Λ₀", self.finite, self.delta, self.level)
    }
}

mod rational_string {
    use num_rational::Rational64;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational64, D::Error> {
        let s = String::deserialize(d)?;
        crate::parse_rational(&s).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::RootData;

    #[test]
    fn translation_examples() {
        let rd = RootData::build_a_type(2).unwrap();
        let alpha = rd.positive_roots()[0].clone();
        let lambda0 = AffineWeight::from_finite(Weight::zero(2), 1);
        let t = rd.affine_reflect_translate(&lambda0, &alpha);
        assert_eq!(t, AffineWeight::new(alpha.clone(), 1, Rational64::from(-1)));
        let t2 = rd.affine_reflect_translate(&lambda0, &alpha.scale(2));
        assert_eq!(
            t2,
            AffineWeight::new(alpha.scale(2), 1, Rational64::from(-4))
        );
        assert_eq!(rd.affine_reflect_translate(&t2, &Weight::zero(2)), t2);
    }

    #[test]
    fn serde_fields() {
        let w = AffineWeight::new(Weight::from_gl(&[1, 0]), 2, Rational64::new(1, 8));
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"{"finite":["1/2","-1/2"],"level":2,"delta":"1/8"}"#);
        let back: AffineWeight = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);
    }
}
