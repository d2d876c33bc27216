//! The modular parameter and series controls shared by every evaluation.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::EllipticError;

/// Default relative cutoff for series and products.
pub const DEFAULT_SERIES_TOLERANCE: f64 = 1e-16;
/// Default cap on the number of terms of any single series.
pub const DEFAULT_MAX_TERMS: usize = 20_000;

/// `τ` in the upper half-plane together with `p = e^{2πiτ}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EllipticContext {
    tau: Complex64,
    p: Complex64,
    series_tolerance: f64,
    max_terms: usize,
}

impl EllipticContext {
    pub fn new(tau: Complex64) -> Result<Self, EllipticError> {
        if !(tau.im > 0.0) || !tau.re.is_finite() || !tau.im.is_finite() {
            return Err(EllipticError::Domain(format!(
                "τ = {tau} is not in the upper half-plane"
            )));
        }
        Ok(EllipticContext {
            tau,
            p: e2pi(tau),
            series_tolerance: DEFAULT_SERIES_TOLERANCE,
            max_terms: DEFAULT_MAX_TERMS,
        })
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.series_tolerance = tol;
        self
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }

    pub fn tau(&self) -> Complex64 {
        self.tau
    }

    pub fn p(&self) -> Complex64 {
        self.p
    }

    pub fn series_tolerance(&self) -> f64 {
        self.series_tolerance
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    /// `p^a = e^{2πiτa}` for real `a`, on the branch fixed by `τ`.
    pub fn p_pow(&self, a: f64) -> Complex64 {
        e2pi(self.tau * a)
    }

    /// Distance from `x` to the nearest point of `ℤ + τℤ`.
    pub fn lattice_distance(&self, x: Complex64) -> f64 {
        let n = (x.im / self.tau.im).round();
        let y = x - self.tau * n;
        let m = y.re.round();
        (y - m).norm()
    }

    pub(crate) fn check_pole(
        &self,
        function: &'static str,
        x: Complex64,
    ) -> Result<(), EllipticError> {
        if self.lattice_distance(x) < POLE_RADIUS {
            return Err(EllipticError::Pole {
                function,
                arg: x.to_string(),
            });
        }
        Ok(())
    }

    /// Sum `term(m)` for `m = start, start + 1, …` until two consecutive
    /// terms fall below the tolerance times the running absolute sum.
    pub(crate) fn sum_series(
        &self,
        what: &'static str,
        start: i64,
        mut term: impl FnMut(i64) -> Complex64,
    ) -> Result<Complex64, EllipticError> {
        let mut sum = Complex64::new(0.0, 0.0);
        let mut magnitude = 0.0;
        let mut quiet = 0;
        for m in (start..).take(self.max_terms) {
            let t = term(m);
            if !t.is_finite() {
                return Err(EllipticError::Convergence(format!(
                    "{what}: non-finite term at m = {m}"
                )));
            }
            sum += t;
            magnitude += t.norm();
            if t.norm() <= self.series_tolerance * magnitude {
                quiet += 1;
                if quiet == 2 {
                    return Ok(sum);
                }
            } else {
                quiet = 0;
            }
        }
        Err(EllipticError::Convergence(format!(
            "{what}: no convergence within {} terms",
            self.max_terms
        )))
    }
}

/// Arguments closer than this to a lattice point are treated as poles.
pub const POLE_RADIUS: f64 = 1e-9;

/// `e^{2πix}`.
pub fn e2pi(x: Complex64) -> Complex64 {
    (Complex64::new(0.0, 2.0 * PI) * x).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_lower_half_plane() {
        assert!(EllipticContext::new(Complex64::new(0.3, 0.0)).is_err());
        assert!(EllipticContext::new(Complex64::new(0.3, -1.0)).is_err());
    }

    #[test]
    fn lattice_distance_reduces() {
        let ctx = EllipticContext::new(Complex64::new(0.25, 0.9)).unwrap();
        let x = Complex64::new(2.0, 0.0) + ctx.tau() * 3.0 + Complex64::new(0.01, 0.0);
        assert!((ctx.lattice_distance(x) - 0.01).abs() < 1e-12);
    }

    #[test]
    fn geometric_series() {
        let ctx = EllipticContext::new(Complex64::new(0.0, 1.0)).unwrap();
        let s = ctx
            .sum_series("geometric", 0, |m| {
                Complex64::new(0.5f64.powi(m as i32), 0.0)
            })
            .unwrap();
        assert!((s.re - 2.0).abs() < 1e-15);
    }
}
