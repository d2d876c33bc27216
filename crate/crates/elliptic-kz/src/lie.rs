//! `sl_n` in symmetric powers of the defining representation, tensor
//! products and their zero-weight subspaces.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::EllipticError;

/// Tolerance for the trace-zero condition on a Cartan vector.
pub const TRACE_TOLERANCE: f64 = 1e-12;

/// The representation `S^m ℂⁿ` of `sl_n`; `m = 1` is the defining one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymRep {
    n: usize,
    degree: usize,
    states: Vec<Vec<usize>>,
    index: BTreeMap<Vec<usize>, usize>,
}

fn compositions(n: usize, total: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(n - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl SymRep {
    pub fn new(n: usize, degree: usize) -> Result<Self, EllipticError> {
        if n < 2 || degree == 0 {
            return Err(EllipticError::Domain(format!(
                "S^{degree} of sl_{n} is not supported"
            )));
        }
        let states = compositions(n, degree);
        let index = states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        Ok(SymRep {
            n,
            degree,
            states,
            index,
        })
    }

    pub fn defining(n: usize) -> Result<Self, EllipticError> {
        Self::new(n, 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.states.len()
    }

    /// Exponent vectors of the monomial basis, the `gl_n` weights.
    pub fn states(&self) -> &[Vec<usize>] {
        &self.states
    }

    /// `E_ab` acting as `x_a ∂_b` on monomials.
    pub fn e(&self, a: usize, b: usize) -> DMatrix<Complex64> {
        let mut m = DMatrix::zeros(self.dim(), self.dim());
        for (j, s) in self.states.iter().enumerate() {
            if s[b] == 0 {
                continue;
            }
            let mut t = s.clone();
            t[b] -= 1;
            t[a] += 1;
            m[(self.index[&t], j)] += Complex64::new(s[b] as f64, 0.0);
        }
        m
    }

    /// A diagonal element `diag(d)` of `gl_n`.
    pub fn diagonal(&self, d: &[Complex64]) -> DMatrix<Complex64> {
        DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
            self.dim(),
            self.states.iter().map(|s| weight_pairing(s, d)),
        ))
    }
}

/// `⟨w, h⟩ = Σ_a w_a h_a` for a `gl_n` weight `w`.
pub fn weight_pairing(w: &[usize], h: &[Complex64]) -> Complex64 {
    w.iter().zip(h).map(|(&e, &x)| x * e as f64).sum()
}

/// Orthonormal basis `x_l` of the diagonal trace-zero matrices for
/// `(x, y) = tr(xy)`: `x_l = diag(1, …, 1, −l, 0, …)/√(l(l+1))`.
pub fn cartan_basis(n: usize) -> Vec<Vec<f64>> {
    (1..n)
        .map(|l| {
            let s = ((l * (l + 1)) as f64).sqrt();
            (0..n)
                .map(|a| match a.cmp(&l) {
                    std::cmp::Ordering::Less => 1.0 / s,
                    std::cmp::Ordering::Equal => -(l as f64) / s,
                    std::cmp::Ordering::Greater => 0.0,
                })
                .collect()
        })
        .collect()
}

/// Check that `h` is a trace-zero vector of length `n`.
pub fn check_cartan(h: &[Complex64], n: usize) -> Result<(), EllipticError> {
    if h.len() != n {
        return Err(EllipticError::Domain(format!(
            "Cartan vector has length {}, expected {n}",
            h.len()
        )));
    }
    let trace: Complex64 = h.iter().sum();
    if trace.norm() > TRACE_TOLERANCE {
        return Err(EllipticError::Domain(format!(
            "Cartan vector has trace {trace}"
        )));
    }
    Ok(())
}

/// `π₁ ⊗ … ⊗ π_N` for symmetric-power representations of one `sl_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSpace {
    n: usize,
    reps: Vec<SymRep>,
    zero: Vec<usize>,
}

impl TensorSpace {
    pub fn new(n: usize, degrees: &[usize]) -> Result<Self, EllipticError> {
        if degrees.is_empty() {
            return Err(EllipticError::Domain("at least one point is needed".into()));
        }
        let reps = degrees
            .iter()
            .map(|&d| SymRep::new(n, d))
            .collect::<Result<Vec<_>, _>>()?;
        let mut space = TensorSpace {
            n,
            reps,
            zero: Vec::new(),
        };
        space.zero = (0..space.dim())
            .filter(|&i| space.is_zero_weight(i))
            .collect();
        Ok(space)
    }

    /// `N` copies of the defining representation.
    pub fn defining(n: usize, points: usize) -> Result<Self, EllipticError> {
        Self::new(n, &vec![1; points])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[SymRep] {
        &self.reps
    }

    pub fn rep_dims(&self) -> Vec<usize> {
        self.reps.iter().map(SymRep::dim).collect()
    }

    pub fn dim(&self) -> usize {
        self.reps.iter().map(SymRep::dim).product()
    }

    /// Per-slot state indices of a full basis index (slot 0 most significant).
    pub fn split(&self, mut i: usize) -> Vec<usize> {
        let mut out = vec![0; self.reps.len()];
        for (slot, rep) in self.reps.iter().enumerate().rev() {
            out[slot] = i % rep.dim();
            i /= rep.dim();
        }
        out
    }

    /// The `gl_n` weight of a slot in a full basis state.
    pub fn slot_weight(&self, i: usize, slot: usize) -> &[usize] {
        let idx = self.split(i)[slot];
        &self.reps[slot].states()[idx]
    }

    fn is_zero_weight(&self, i: usize) -> bool {
        let mut total = vec![0usize; self.n];
        for (slot, idx) in self.split(i).into_iter().enumerate() {
            for (t, e) in total.iter_mut().zip(&self.reps[slot].states()[idx]) {
                *t += e;
            }
        }
        total.iter().all(|&t| t == total[0])
    }

    /// Full basis indices spanning `V[0]`.
    pub fn zero_weight_indices(&self) -> &[usize] {
        &self.zero
    }

    /// `V[0]` as per-slot state indices.
    pub fn zero_weight_basis(&self) -> Vec<Vec<usize>> {
        self.zero.iter().map(|&i| self.split(i)).collect()
    }

    /// `⊗_slot ops[slot]`, with the identity in unlisted slots.
    pub fn embed(&self, ops: &[(usize, &DMatrix<Complex64>)]) -> DMatrix<Complex64> {
        let mut acc = DMatrix::from_element(1, 1, Complex64::new(1.0, 0.0));
        for (slot, rep) in self.reps.iter().enumerate() {
            let factor = match ops.iter().find(|(s, _)| *s == slot) {
                Some((_, m)) => (*m).clone(),
                None => DMatrix::identity(rep.dim(), rep.dim()),
            };
            acc = acc.kronecker(&factor);
        }
        acc
    }

    /// Restrict an operator to `V[0]`, returning the largest entry that maps
    /// `V[0]` out of itself.
    pub fn restrict(&self, m: &DMatrix<Complex64>) -> (DMatrix<Complex64>, f64) {
        let k = self.zero.len();
        let out = DMatrix::from_fn(k, k, |r, c| m[(self.zero[r], self.zero[c])]);
        let mut leak = 0.0f64;
        for &col in &self.zero {
            for row in 0..self.dim() {
                if self.zero.binary_search(&row).is_err() {
                    leak = leak.max(m[(row, col)].norm());
                }
            }
        }
        (out, leak)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sym_square_of_sl2_is_adjoint_sized() {
        let r = SymRep::new(2, 2).unwrap();
        assert_eq!(r.dim(), 3);
        let (e, f) = (r.e(0, 1), r.e(1, 0));
        let h = r.diagonal(&[Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)]);
        let comm = &e * &f - &f * &e;
        assert!((comm - h).norm() < 1e-14);
    }

    #[test]
    fn cartan_basis_is_orthonormal() {
        let b = cartan_basis(4);
        for (i, x) in b.iter().enumerate() {
            assert!(x.iter().sum::<f64>().abs() < 1e-14);
            for (j, y) in b.iter().enumerate() {
                let dot: f64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
                assert!((dot - f64::from(u8::from(i == j))).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn zero_weight_dimensions() {
        assert_eq!(
            TensorSpace::defining(2, 2)
                .unwrap()
                .zero_weight_indices()
                .len(),
            2
        );
        assert_eq!(
            TensorSpace::defining(2, 3)
                .unwrap()
                .zero_weight_indices()
                .len(),
            0
        );
        assert_eq!(
            TensorSpace::new(2, &[1, 1, 2])
                .unwrap()
                .zero_weight_indices()
                .len(),
            4
        );
        assert_eq!(
            TensorSpace::defining(3, 3)
                .unwrap()
                .zero_weight_indices()
                .len(),
            6
        );
        assert_eq!(
            TensorSpace::defining(2, 4)
                .unwrap()
                .zero_weight_indices()
                .len(),
            6
        );
    }
}
