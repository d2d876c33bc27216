//! The group algebra of the weight lattice: finite sums `Σ c_μ e^μ`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use root_data::{RootData, Weight};
use serde::{Deserialize, Serialize};

use crate::ring::{Field, Ring};
use crate::{AlgebraError, Poly, RatFunc};

/// A finitely supported map `Weight → C` with no stored zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct LatticePoly<C> {
    n: usize,
    terms: BTreeMap<Weight, C>,
}

/// One term in the JSON form of a [`LatticePoly`] over [`RatFunc`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub weight: Weight,
    pub num: String,
    pub den: String,
}

impl<C: Ring> LatticePoly<C> {
    pub fn zero(n: usize) -> Self {
        LatticePoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(Weight::zero(n), C::one())
    }

    /// `c · e^w`.
    pub fn monomial(w: Weight, c: C) -> Self {
        let mut out = Self::zero(w.n());
        out.add_term(w, c);
        out
    }

    /// `c · 1`.
    pub fn constant(n: usize, c: C) -> Self {
        Self::monomial(Weight::zero(n), c)
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Weight, C)>) -> Self {
        let mut out = Self::zero(n);
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &C)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    pub fn get(&self, w: &Weight) -> Option<&C> {
        self.terms.get(w)
    }

    /// Coefficient of `e^w` (zero if absent).
    pub fn coeff(&self, w: &Weight) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    /// Add `c · e^w` in place.
    pub fn add_term(&mut self, w: Weight, c: C) {
        assert_eq!(w.n(), self.n, "weight of a different rank");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                let s = v.add_ref(&c);
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.neg_ref());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg_ref())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a + b, ca.mul_ref(cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        self.map_coeffs(|x| x.mul_ref(c))
    }

    /// Multiply by `e^w`.
    pub fn shift(&self, w: &Weight) -> Self {
        LatticePoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m + w, c.clone())).collect(),
        }
    }

    /// The bar involution `e^μ ↦ e^{−μ}`, fixing coefficients.
    pub fn bar(&self) -> Self {
        LatticePoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (-m, c.clone())).collect(),
        }
    }

    /// Coefficient of `e^0`.
    pub fn constant_term(&self) -> C {
        self.coeff(&Weight::zero(self.n))
    }

    /// Apply `f` to every coefficient, dropping zeros.
    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> LatticePoly<D> {
        LatticePoly::from_terms(self.n, self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Apply a permutation of coordinates to every weight.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        LatticePoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.permuted(perm), c.clone()))
                .collect(),
        }
    }

    /// Apply the simple reflection swapping coordinates `i` and `i + 1`.
    pub fn reflect(&self, i: usize) -> Self {
        LatticePoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.swapped(i, i + 1), c.clone()))
                .collect(),
        }
    }

    /// Whether the element is invariant under all simple reflections.
    pub fn is_w_invariant(&self) -> bool {
        (0..self.n - 1).all(|i| self.reflect(i) == *self)
    }

    /// Coefficients in the orbit-sum basis, keyed by dominant weight.
    ///
    /// Fails if the element is not `W`-invariant.
    pub fn orbit_coefficients(&self) -> Result<BTreeMap<Weight, C>, AlgebraError> {
        let mut out = BTreeMap::new();
        let mut covered = 0usize;
        for (w, c) in &self.terms {
            let d = w.dominant_rep();
            if self.terms.get(&d) != Some(c) {
                return Err(AlgebraError::NotInvariant(format!("coefficient at {w}")));
            }
            if *w == d {
                covered += orbit_size(&d);
                out.insert(d, c.clone());
            }
        }
        if covered != self.terms.len() {
            return Err(AlgebraError::NotInvariant("incomplete orbit".to_string()));
        }
        Ok(out)
    }

    /// `Σ c_λ m_λ` for a map from dominant weights to coefficients.
    pub fn from_orbit_coefficients(rd: &RootData, coeffs: &BTreeMap<Weight, C>) -> Self {
        let mut out = Self::zero(rd.n());
        for (lam, c) in coeffs {
            for mu in rd.weyl_orbit(lam) {
                out.add_term(mu, c.clone());
            }
        }
        out
    }

    /// Exact quotient by `1 − e^β`, or `None` if it does not divide.
    ///
    /// Along each `β`-string the quotient's coefficients are running sums of
    /// the dividend's; divisibility means each string sums to zero.
    pub fn div_by_one_minus(&self, beta: &Weight) -> Option<Self> {
        let bb = beta.pair_scaled(beta);
        assert!(bb > 0, "cannot divide by 1 - e^0");
        let mut strings: BTreeMap<Weight, BTreeMap<i64, C>> = BTreeMap::new();
        for (mu, c) in &self.terms {
            let t = mu.pair_scaled(beta).div_euclid(bb);
            let base = mu - &beta.scale(t);
            strings.entry(base).or_default().insert(t, c.clone());
        }
        let mut out = Self::zero(self.n);
        for (base, string) in strings {
            let lo = *string.keys().next().expect("nonempty string");
            let hi = *string.keys().next_back().expect("nonempty string");
            let mut running = C::zero();
            for t in lo..=hi {
                if let Some(c) = string.get(&t) {
                    running = running.add_ref(c);
                }
                if t == hi {
                    break;
                }
                out.add_term(&base + &beta.scale(t), running.clone());
            }
            if !running.is_zero() {
                return None;
            }
        }
        Some(out)
    }
}

impl<C: Field> LatticePoly<C> {
    /// Multiply the coefficient of each `e^μ` by the rational `f(μ)`.
    pub fn diagonal(&self, f: impl Fn(&Weight) -> Rational64) -> Self {
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let r = f(w);
            out.add_term(w.clone(), c.mul_ref(&C::from_ratio(*r.numer(), *r.denom())));
        }
        out
    }

    /// The Laplacian `Δ_h e^μ = (μ, μ) e^μ`.
    pub fn laplacian(&self) -> Self {
        self.diagonal(|w| w.norm2())
    }

    /// The derivative `∂_ν e^μ = (ν, μ) e^μ`.
    pub fn derivative(&self, nu: &Weight) -> Self {
        self.diagonal(|w| w.pair(nu))
    }
}

impl LatticePoly<Poly> {
    /// View integer-polynomial coefficients as rational functions with `q`
    /// unit `qden`.
    pub fn to_ratfunc(&self, qden: i64) -> LatticePoly<RatFunc> {
        self.map_coeffs(|c| RatFunc::from_poly(c.clone(), qden))
    }
}

impl LatticePoly<RatFunc> {
    /// Substitute `e^μ ↦ q^{2(μ, ν)}`.
    pub fn evaluate_at_qpower(&self, nu: &Weight) -> RatFunc {
        let nn = (self.n * self.n) as i64;
        let mut acc = RatFunc::zero();
        for (mu, c) in &self.terms {
            let e = 2 * mu.pair_scaled(nu);
            acc = acc.add(&c.mul(&RatFunc::q_pow(e, nn)));
        }
        acc
    }

    /// JSON-friendly list of terms.
    pub fn records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(w, c)| TermRecord {
                weight: w.clone(),
                num: c.num_string(),
                den: c.den_string(),
            })
            .collect()
    }

    /// Rebuild from [`LatticePoly::records`] output.
    pub fn from_records(n: usize, records: &[TermRecord]) -> Result<Self, AlgebraError> {
        let mut out = Self::zero(n);
        for r in records {
            if r.weight.n() != n {
                return Err(AlgebraError::Parse(format!(
                    "weight {} has the wrong rank",
                    r.weight
                )));
            }
            out.add_term(
                r.weight.clone(),
                RatFunc::from_num_den_strings(&r.num, &r.den)?,
            );
        }
        Ok(out)
    }
}

/// Number of distinct permutations of the coordinates of `w`.
fn orbit_size(w: &Weight) -> usize {
    let num = w.numerators();
    let mut size = 1usize;
    let mut seen = 0usize;
    let mut i = 0;
    let mut sorted = num.to_vec();
    sorted.sort_unstable();
    while i < sorted.len() {
        let mut j = i;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        // multiply by binom(seen + run, run)
        for r in 1..=(j - i) {
            size = size * (seen + r) / r;
        }
        seen += j - i;
        i = j;
    }
    size
}

impl<C: Ring> fmt::Debug for LatticePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c:?}*e^{w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(parts: &[i64]) -> Weight {
        Weight::from_gl(parts)
    }

    fn int(c: i64) -> Poly {
        Poly::constant(c)
    }

    #[test]
    fn constant_term_of_delta_times_bar() {
        // (1 - e^α)(1 - e^{-α}) = 2 - e^α - e^{-α}
        let alpha = w(&[1, -1]);
        let one = LatticePoly::<Poly>::one(2);
        let a = one.sub(&LatticePoly::monomial(alpha.clone(), int(1)));
        let prod = a.mul(&a.bar());
        assert_eq!(prod.constant_term(), int(2));
        assert_eq!(prod.len(), 3);
    }

    #[test]
    fn division_by_root_factor() {
        let alpha = w(&[1, -1]);
        let f = LatticePoly::from_terms(2, [(alpha.scale(2), int(1)), (Weight::zero(2), int(-1))]);
        let g = f.div_by_one_minus(&alpha.scale(-1)).unwrap();
        let back = LatticePoly::one(2)
            .sub(&LatticePoly::monomial(alpha.scale(-1), int(1)))
            .mul(&g);
        assert_eq!(back, f);
        assert!(LatticePoly::monomial(alpha.clone(), int(1))
            .div_by_one_minus(&alpha)
            .is_none());
    }

    #[test]
    fn orbit_coefficients_detect_asymmetry() {
        let a = LatticePoly::monomial(w(&[1, 0]), int(1));
        assert!(a.orbit_coefficients().is_err());
        let m = a.add(&LatticePoly::monomial(w(&[0, 1]), int(1)));
        assert_eq!(m.orbit_coefficients().unwrap().len(), 1);
    }

    #[test]
    fn records_round_trip() {
        let c: RatFunc = "(1 - q^2*t^2)/(1 + q^(1/2))".parse().unwrap();
        let f = LatticePoly::monomial(w(&[1, 0, 0]), c);
        let back = LatticePoly::from_records(3, &f.records()).unwrap();
        assert_eq!(back, f);
    }
}
