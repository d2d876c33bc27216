//! Polynomials in `x_1, …, x_n` with integer-polynomial coefficients in
//! `q, t`: the working space of the Macdonald operators.

use std::collections::BTreeMap;

use exact_algebra::Poly;
use root_data::next_permutation;

use crate::{MacdonaldError, Partition};

/// A finitely supported map from exponent vectors to coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct GlPoly {
    n: usize,
    terms: BTreeMap<Vec<i64>, Poly>,
}

impl GlPoly {
    pub fn zero(n: usize) -> Self {
        GlPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The monomial symmetric function `m_λ` in `n` variables.
    pub fn monomial_symmetric(lam: &Partition) -> Self {
        let mut out = Self::zero(lam.n());
        let mut e = lam.parts().to_vec();
        e.sort_unstable();
        loop {
            out.add_term(e.clone(), Poly::one());
            if !next_permutation(&mut e) {
                break;
            }
        }
        out
    }

    pub fn add_term(&mut self, e: Vec<i64>, c: Poly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &GlPoly, c: &Poly) {
        for (e, a) in &other.terms {
            self.add_term(e.clone(), a.mul(c));
        }
    }

    /// Multiply each term `x^a` by `f(a)`.
    pub fn map_terms(&self, f: impl Fn(&[i64]) -> Poly) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.mul(&f(e)));
        }
        out
    }

    /// Multiply by the linear form `a·x_i + b·x_j`.
    pub fn mul_linear(&self, i: usize, a: &Poly, j: usize, b: &Poly) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let mut ei = e.clone();
            ei[i] += 1;
            out.add_term(ei, c.mul(a));
            let mut ej = e.clone();
            ej[j] += 1;
            out.add_term(ej, c.mul(b));
        }
        out
    }

    /// Exact quotient by `x_a − x_b`.
    pub fn div_difference(&self, a: usize, b: usize) -> Result<Self, MacdonaldError> {
        // Key: exponent of x_a first so the largest comes last.
        let mut rem: BTreeMap<(i64, Vec<i64>), Poly> = self
            .terms
            .iter()
            .map(|(e, c)| ((e[a], e.clone()), c.clone()))
            .collect();
        let mut out = Self::zero(self.n);
        while let Some(((ea, e), c)) = rem.pop_last() {
            if ea == 0 {
                return Err(MacdonaldError::Internal(format!(
                    "x{} - x{} does not divide the operator numerator",
                    a + 1,
                    b + 1
                )));
            }
            let mut qe = e.clone();
            qe[a] -= 1;
            // c·x^e = c·x^{qe}·(x_a − x_b) + c·x^{qe}·x_b
            let mut carry = qe.clone();
            carry[b] += 1;
            let key = (carry[a], carry);
            let updated = match rem.remove(&key) {
                Some(v) => v.add(&c),
                None => c.clone(),
            };
            if !updated.is_zero() {
                rem.insert(key, updated);
            }
            out.add_term(qe, c);
        }
        Ok(out)
    }

    /// Coefficients on the monomial symmetric basis; fails unless the
    /// polynomial is symmetric.
    pub fn symmetric_coefficients(&self) -> Result<BTreeMap<Partition, Poly>, MacdonaldError> {
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut sorted = e.clone();
            sorted.sort_unstable_by(|x, y| y.cmp(x));
            if self.terms.get(&sorted) != Some(c) {
                return Err(MacdonaldError::Internal(format!(
                    "operator output is not symmetric at exponent {e:?}"
                )));
            }
            if *e == sorted {
                out.insert(Partition::try_from(sorted)?, c.clone());
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_by_difference() {
        // (x1 - x2)(x1 + x2) / (x1 - x2)
        let one = Poly::one();
        let mut f = GlPoly::zero(2);
        f.add_term(vec![2, 0], one.clone());
        f.add_term(vec![0, 2], one.neg());
        let g = f.div_difference(0, 1).unwrap();
        let mut expect = GlPoly::zero(2);
        expect.add_term(vec![1, 0], one.clone());
        expect.add_term(vec![0, 1], one.clone());
        assert_eq!(g, expect);
        let mut h = GlPoly::zero(2);
        h.add_term(vec![1, 0], one);
        assert!(h.div_difference(0, 1).is_err());
    }

    #[test]
    fn monomial_symmetric_counts() {
        let lam = Partition::new(&[2, 1], 3).unwrap();
        let m = GlPoly::monomial_symmetric(&lam);
        assert_eq!(m.symmetric_coefficients().unwrap().len(), 1);
        assert_eq!(m.terms.len(), 6);
    }
}
