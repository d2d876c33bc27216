//! Root data of type `A_{n-1}` in the epsilon realization.
//!
//! - [`RootData`]: positive and simple roots, `rho`, the highest root and
//!   the dual Coxeter number, with Weyl orbits and the dominance order.
//! - [`Weight`]: exact weights with coordinates over the denominator `n`.
//! - [`AffineWeight`]: `λ + aδ + KΛ₀` with the translation action of `Q∨`.
//! - [`partitions`]: partitions with a bounded number of parts, the `gl_n`
//!   picture of dominant weights.

mod affine;
pub mod partitions;
mod weight;

use num_rational::Rational64;
use thiserror::Error;

pub use affine::AffineWeight;
pub use weight::{parse_rational, Weight};

/// Errors raised by root-data construction and weight validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootDataError {
    #[error("invalid rank: sl_n needs n >= 2, got n = {0}")]
    InvalidRank(usize),
    #[error("weight coordinates must sum to zero")]
    NotTraceless,
    #[error("coordinate {0} has a denominator not dividing n")]
    Denominator(String),
    #[error("cannot parse rational number {0:?}")]
    Parse(String),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("weight {0} is not in the weight lattice")]
    NotIntegral(String),
    #[error("weight has rank {found}, expected {expected}")]
    RankMismatch { expected: usize, found: usize },
}

/// Immutable root data for `sl_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootData {
    n: usize,
    positive_roots: Vec<Weight>,
    root_pairs: Vec<(usize, usize)>,
    simple_roots: Vec<Weight>,
    fundamental_weights: Vec<Weight>,
    rho: Weight,
    theta: Weight,
    dual_coxeter: i64,
}

impl RootData {
    /// Root data of `A_{n-1}` realized in the traceless hyperplane of `R^n`.
    pub fn build_a_type(n: usize) -> Result<Self, RootDataError> {
        if n < 2 {
            return Err(RootDataError::InvalidRank(n));
        }
        let ni = n as i64;
        let eps_diff = |i: usize, j: usize| {
            let mut num = vec![0i64; n];
            num[i] = ni;
            num[j] = -ni;
            Weight::from_numerators(num).expect("root is traceless")
        };
        let mut positive_roots = Vec::new();
        let mut root_pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                positive_roots.push(eps_diff(i, j));
                root_pairs.push((i, j));
            }
        }
        let simple_roots: Vec<Weight> = (0..n - 1).map(|i| eps_diff(i, i + 1)).collect();
        let fundamental_weights = (1..n)
            .map(|k| {
                let parts: Vec<i64> = (0..n).map(|i| i64::from(i < k)).collect();
                Weight::from_gl(&parts)
            })
            .collect();
        // rho_i = (n + 1 - 2i) / 2 for i = 1..n, i.e. numerator n (n + 1 - 2i) / 2.
        let rho_num: Vec<i64> = (1..=ni).map(|i| ni * (ni + 1 - 2 * i) / 2).collect();
        let rho = Weight::from_numerators(rho_num).expect("rho is traceless");
        let theta = eps_diff(0, n - 1);
        let dual_coxeter = ni;
        Ok(RootData {
            n,
            positive_roots,
            root_pairs,
            simple_roots,
            fundamental_weights,
            rho,
            theta,
            dual_coxeter,
        })
    }

    /// `n` for `sl_n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The rank `r = n − 1`.
    pub fn rank(&self) -> usize {
        self.n - 1
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// Index pairs `(i, j)`, `i < j`, with `α = ε_i − ε_j`, aligned with
    /// [`RootData::positive_roots`].
    pub fn root_pairs(&self) -> &[(usize, usize)] {
        &self.root_pairs
    }

    /// All roots, positive ones first.
    pub fn roots(&self) -> Vec<Weight> {
        let mut all = self.positive_roots.clone();
        all.extend(self.positive_roots.iter().map(|a| -a));
        all
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental_weights
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// The highest root `θ = ε_1 − ε_n`.
    pub fn theta(&self) -> &Weight {
        &self.theta
    }

    /// `h∨ = ⟨ρ, θ∨⟩ + 1`.
    pub fn dual_coxeter(&self) -> i64 {
        self.dual_coxeter
    }

    /// `|W| = n!`.
    pub fn weyl_order(&self) -> u64 {
        (1..=self.n as u64).product()
    }

    /// `|R⁺|`.
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Check that a weight has the right rank.
    pub fn check_rank(&self, w: &Weight) -> Result<(), RootDataError> {
        if w.n() != self.n {
            return Err(RootDataError::RankMismatch {
                expected: self.n,
                found: w.n(),
            });
        }
        Ok(())
    }

    /// Check that a weight is an integral dominant weight.
    pub fn check_dominant_integral(&self, w: &Weight) -> Result<(), RootDataError> {
        self.check_rank(w)?;
        if !w.in_weight_lattice() {
            return Err(RootDataError::NotIntegral(w.to_string()));
        }
        if !w.is_dominant() {
            return Err(RootDataError::NotDominant(w.to_string()));
        }
        Ok(())
    }

    /// `Σ_{α∈R⁺} (α, α)`.
    pub fn sum_root_norms(&self) -> Rational64 {
        self.positive_roots.iter().map(|a| a.norm2()).sum()
    }

    /// The `S_n` orbit of `lam`, sorted.
    pub fn weyl_orbit(&self, lam: &Weight) -> Vec<Weight> {
        let mut num: Vec<i64> = lam.numerators().to_vec();
        num.sort_unstable();
        let mut out = Vec::new();
        loop {
            out.push(Weight::from_numerators(num.clone()).expect("permutation keeps trace"));
            if !next_permutation(&mut num) {
                break;
            }
        }
        out
    }

    /// Orbit of a regular weight with the sign of the permutation mapping
    /// `lam` to each element.
    pub fn signed_orbit(&self, lam: &Weight) -> Vec<(Weight, i64)> {
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut out = Vec::new();
        loop {
            let sign = permutation_sign(&perm);
            out.push((lam.permuted(&perm), sign));
            if !next_permutation(&mut perm) {
                break;
            }
        }
        out
    }

    /// All dominant `μ ≤ lam`, sorted by height `(lam − μ, ρ)` ascending
    /// with ties broken by descending coordinates, so `lam` comes first and
    /// every weight precedes the weights it dominates.
    pub fn dominant_below(&self, lam: &Weight) -> Result<Vec<Weight>, RootDataError> {
        self.check_dominant_integral(lam)?;
        let gl = lam.to_gl().expect("integral weight has a gl lift");
        let size: i64 = gl.iter().sum();
        let mut out: Vec<Weight> = partitions::partitions(size, self.n)
            .into_iter()
            .map(|p| Weight::from_gl(&p))
            .filter(|mu| mu.dominated_by(lam))
            .collect();
        let rho = &self.rho;
        out.sort_by(|a, b| {
            let ha = (lam - a).pair_scaled(rho);
            let hb = (lam - b).pair_scaled(rho);
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        Ok(out)
    }

    /// Dominant integral weights of level at most `k`: `(λ, θ) ≤ k`.
    pub fn dominant_of_level(&self, k: i64) -> Vec<Weight> {
        let mut out = Vec::new();
        // gl lift with last part zero: first part equals (λ, θ).
        for first in 0..=k.max(-1) {
            for p in partitions::partitions_bounded(self.n - 1, first) {
                let mut parts = p;
                parts.push(0);
                if parts[0] == first {
                    out.push(Weight::from_gl(&parts));
                }
            }
        }
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    /// The affine Weyl vector `ρ̂ = ρ + h∨Λ₀`.
    pub fn rho_hat(&self) -> AffineWeight {
        AffineWeight::new(self.rho.clone(), self.dual_coxeter, Rational64::from(0))
    }

    /// Translation by `coroot ∈ Q∨ = Q` at level `K` of `w`:
    /// `λ̂ ↦ λ̂ + Kα∨ − (⟨λ̂, α∨⟩ + ½K(α∨, α∨))δ`.
    pub fn affine_reflect_translate(&self, w: &AffineWeight, coroot: &Weight) -> AffineWeight {
        w.translate(coroot)
    }
}

/// Rearrange into the lexicographically next permutation; false at the end.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Sign of a permutation given as an image vector.
pub fn permutation_sign(perm: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
