//! Sparse Laurent polynomials over `ℤ` in the generators `q`, `t`, `k`.
//!
//! Terms are kept sorted by exponent vector (lexicographic, `q` first) with
//! no zero coefficients, so structural equality is mathematical equality.
//! The `q` exponents are plain integers here; their unit (a root of `q`) is
//! tracked by [`crate::RatFunc`].
//!
//! The multivariate GCD is the recursive content / primitive-part Euclid
//! algorithm: pick a main variable, split off contents (recursively, in the
//! remaining variables) and run a primitive pseudo-remainder sequence.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Number of generators.
pub const NVARS: usize = 3;

/// Exponent vector indexed by [`Var`].
pub type Exps = [i64; NVARS];

/// The formal generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q = 0,
    T = 1,
    K = 2,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::Q, Var::T, Var::K];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
            Var::K => "k",
        }
    }
}

/// A Laurent polynomial in `q`, `t`, `k` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Exps, BigInt)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial([0; NVARS], c)
    }

    pub fn monomial(exps: Exps, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: vec![(exps, c)],
        }
    }

    /// The generator `v` to the power `e`.
    pub fn var_pow(v: Var, e: i64) -> Self {
        let mut exps = [0; NVARS];
        exps[v.index()] = e;
        Self::monomial(exps, 1)
    }

    /// Build from arbitrary terms, combining duplicates and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Exps, BigInt)>) -> Self {
        let mut v: Vec<(Exps, BigInt)> = terms.into_iter().collect();
        v.sort_unstable_by_key(|a| a.0);
        let mut out: Vec<(Exps, BigInt)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    fn from_sorted(terms: Vec<(Exps, BigInt)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Exps, BigInt)] {
        &self.terms
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

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == [0; NVARS] && self.terms[0].1.is_one()
    }

    /// The value if this is a constant (including zero).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(e, c)] if *e == [0; NVARS] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Lexicographically largest term.
    pub fn leading(&self) -> Option<&(Exps, BigInt)> {
        self.terms.last()
    }

    /// Whether the generator `v` occurs.
    pub fn contains(&self, v: Var) -> bool {
        self.terms.iter().any(|(e, _)| e[v.index()] != 0)
    }

    /// Componentwise minimum exponents (zero vector for the zero polynomial).
    pub fn min_exps(&self) -> Exps {
        let mut m = match self.terms.first() {
            Some((e, _)) => *e,
            None => return [0; NVARS],
        };
        for (e, _) in &self.terms {
            for i in 0..NVARS {
                m[i] = m[i].min(e[i]);
            }
        }
        m
    }

    /// Componentwise maximum exponents (zero vector for the zero polynomial).
    pub fn max_exps(&self) -> Exps {
        let mut m = match self.terms.first() {
            Some((e, _)) => *e,
            None => return [0; NVARS],
        };
        for (e, _) in &self.terms {
            for i in 0..NVARS {
                m[i] = m[i].max(e[i]);
            }
        }
        m
    }

    /// Multiply by the monomial with exponents `s`.
    pub fn shift(&self, s: Exps) -> Poly {
        if s == [0; NVARS] {
            return self.clone();
        }
        Poly::from_sorted(
            self.terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = *e;
                    for i in 0..NVARS {
                        e2[i] += s[i];
                    }
                    (e2, c.clone())
                })
                .collect(),
        )
    }

    /// Shift so every exponent is nonnegative and some exponent of each
    /// occurring generator is zero.
    pub fn monomial_free(&self) -> Poly {
        let m = self.min_exps();
        self.shift([-m[0], -m[1], -m[2]])
    }

    pub fn neg(&self) -> Poly {
        Poly::from_sorted(self.terms.iter().map(|(e, c)| (*e, -c)).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { other.neg() } else { other.clone() };
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                std::cmp::Ordering::Greater
            } else if j == b.len() {
                std::cmp::Ordering::Less
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly::from_sorted(out)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        let mut acc: BTreeMap<Exps, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                let p = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v += p,
                    None => {
                        acc.insert(e, p);
                    }
                }
            }
        }
        Poly::from_sorted(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Poly::from_sorted(self.terms.iter().map(|(e, a)| (*e, a * c)).collect())
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Positive gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide every coefficient by `c`, which must divide them exactly.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Option<Poly> {
        if c.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.terms.len());
        for (e, a) in &self.terms {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.push((*e, q));
        }
        Some(Poly::from_sorted(out))
    }

    /// Exact division in the Laurent ring; `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.is_monomial() {
            let (de, dc) = &d.terms[0];
            let q = self.div_scalar_exact(dc)?;
            return Some(q.shift([-de[0], -de[1], -de[2]]));
        }
        let ma = self.min_exps();
        let md = d.min_exps();
        let a = self.shift([-ma[0], -ma[1], -ma[2]]);
        let dd = d.shift([-md[0], -md[1], -md[2]]);
        let (lde, ldc) = dd.leading().expect("nonzero divisor").clone();
        let mut rem: BTreeMap<Exps, BigInt> = a.terms.into_iter().collect();
        let mut quot: Vec<(Exps, BigInt)> = Vec::new();
        while let Some((re, rc)) = rem.pop_last() {
            if (0..NVARS).any(|i| re[i] < lde[i]) {
                return None;
            }
            let (qc, r) = rc.div_rem(&ldc);
            if !r.is_zero() {
                return None;
            }
            let qe = [re[0] - lde[0], re[1] - lde[1], re[2] - lde[2]];
            for (e, c) in dd.terms.iter().rev().skip(1) {
                let te = [e[0] + qe[0], e[1] + qe[1], e[2] + qe[2]];
                let prod = c * &qc;
                let entry = rem.entry(te).or_insert_with(BigInt::zero);
                *entry -= prod;
                if entry.is_zero() {
                    rem.remove(&te);
                }
            }
            quot.push((qe, qc));
        }
        quot.reverse();
        Some(Poly::from_sorted(quot).shift([ma[0] - md[0], ma[1] - md[1], ma[2] - md[2]]))
    }

    /// Apply an exponent map termwise and recombine.
    pub fn map_exps(&self, f: impl Fn(Exps) -> Exps) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(e, c)| (f(*e), c.clone())))
    }

    /// Coefficients in `v` as a dense list indexed by degree; the input must
    /// have nonnegative `v`-exponents.
    fn to_univariate(&self, v: Var) -> Vec<Poly> {
        let vi = v.index();
        let deg = self.terms.iter().map(|(e, _)| e[vi]).max().unwrap_or(0);
        let mut buckets: Vec<Vec<(Exps, BigInt)>> = vec![Vec::new(); deg as usize + 1];
        for (e, c) in &self.terms {
            let mut e2 = *e;
            let d = e2[vi];
            debug_assert!(d >= 0);
            e2[vi] = 0;
            buckets[d as usize].push((e2, c.clone()));
        }
        buckets.into_iter().map(Poly::from_terms).collect()
    }

    fn from_univariate(coeffs: &[Poly], v: Var) -> Poly {
        let vi = v.index();
        let mut terms = Vec::new();
        for (d, c) in coeffs.iter().enumerate() {
            for (e, a) in &c.terms {
                let mut e2 = *e;
                e2[vi] = d as i64;
                terms.push((e2, a.clone()));
            }
        }
        Poly::from_terms(terms)
    }

    /// Coefficients of the Taylor expansion at `v = 1` in `s = v − 1`, up to
    /// and including order `order`.
    pub fn taylor_at_one(&self, v: Var, order: usize) -> Vec<Poly> {
        let vi = v.index();
        let mut out = vec![Vec::new(); order + 1];
        for (e, c) in &self.terms {
            let p = e[vi];
            let mut rest = *e;
            rest[vi] = 0;
            // (1 + s)^p = Σ_j binom(p, j) s^j, generalized binomial.
            let mut binom = BigInt::one();
            for (j, slot) in out.iter_mut().enumerate() {
                if j > 0 {
                    binom = binom * BigInt::from(p - j as i64 + 1) / BigInt::from(j as i64);
                }
                if binom.is_zero() {
                    break;
                }
                slot.push((rest, &binom * c));
            }
        }
        out.into_iter().map(Poly::from_terms).collect()
    }

    /// Lowest order and coefficient of the expansion at `v = 1`.
    pub fn leading_at_one(&self, v: Var) -> Option<(usize, Poly)> {
        if self.is_zero() {
            return None;
        }
        let vi = v.index();
        let mut s = [0; NVARS];
        s[vi] = -self.min_exps()[vi];
        let p = self.shift(s);
        let span = p.max_exps()[vi] as usize;
        let coeffs = p.taylor_at_one(v, span);
        coeffs.into_iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    /// Make the leading coefficient positive.
    pub fn sign_normalized(self) -> Poly {
        match self.leading() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self,
        }
    }
}

/// Greatest common divisor in `ℤ[q^±, t^±, k^±]`, normalized to be
/// monomial-free with positive leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monomial_free().sign_normalized();
    }
    if b.is_zero() {
        return a.monomial_free().sign_normalized();
    }
    gcd_proper(&a.monomial_free(), &b.monomial_free())
        .monomial_free()
        .sign_normalized()
}

fn gcd_proper(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::constant(a.content().gcd(&b.content()));
    }
    if a == b {
        return a.clone();
    }
    // Exponent compression: x^g -> x keeps the gcd structure intact.
    let mut factors = [1i64; NVARS];
    let mut compress = false;
    for v in Var::ALL {
        let vi = v.index();
        let mut g = 0i64;
        for (e, _) in a.terms.iter().chain(&b.terms) {
            g = g.gcd(&e[vi]);
        }
        if g > 1 {
            factors[vi] = g;
            compress = true;
        }
    }
    if compress {
        let shrink = |e: Exps| [e[0] / factors[0], e[1] / factors[1], e[2] / factors[2]];
        let grow = |e: Exps| [e[0] * factors[0], e[1] * factors[1], e[2] * factors[2]];
        let g = gcd_proper(&a.map_exps(shrink), &b.map_exps(shrink));
        return g.map_exps(grow);
    }
    let in_a: Vec<Var> = Var::ALL.into_iter().filter(|&v| a.contains(v)).collect();
    let in_b: Vec<Var> = Var::ALL.into_iter().filter(|&v| b.contains(v)).collect();
    if let Some(&v) = in_a.iter().find(|v| !in_b.contains(v)) {
        return gcd_proper(&content_in(a, v), b);
    }
    if let Some(&v) = in_b.iter().find(|v| !in_a.contains(v)) {
        return gcd_proper(a, &content_in(b, v));
    }
    // Both contain exactly the same generators; pick the one of least degree.
    let amax = a.max_exps();
    let bmax = b.max_exps();
    let v = *in_a
        .iter()
        .min_by_key(|v| amax[v.index()].max(bmax[v.index()]))
        .expect("nonconstant polynomial has a generator");
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd_proper(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let g = primitive_prs(pa, pb, v);
    c.mul(&g)
}

/// Content with respect to `v`: gcd of the coefficients in the other
/// generators.
fn content_in(p: &Poly, v: Var) -> Poly {
    let coeffs = p.to_univariate(v);
    let mut g = Poly::zero();
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        g = if g.is_zero() {
            c.monomial_free().sign_normalized()
        } else {
            gcd_proper(&g, &c.monomial_free())
        };
        if g.is_constant() && g.content().is_one() {
            break;
        }
    }
    g.sign_normalized()
}

fn primitive_part_in(p: &Poly, v: Var) -> Poly {
    let c = content_in(p, v);
    p.div_exact(&c).expect("content divides").sign_normalized()
}

/// Primitive pseudo-remainder sequence for two primitive polynomials in `v`.
fn primitive_prs(a: Poly, b: Poly, v: Var) -> Poly {
    let vi = v.index();
    let (mut a, mut b) = if a.max_exps()[vi] >= b.max_exps()[vi] {
        (a, b)
    } else {
        (b, a)
    };
    loop {
        let r = pseudo_remainder(&a, &b, v);
        if r.is_zero() {
            return primitive_part_in(&b, v).monomial_free();
        }
        if r.max_exps()[vi] == 0 {
            return Poly::one();
        }
        a = b;
        b = primitive_part_in(&r, v);
    }
}

fn pseudo_remainder(a: &Poly, b: &Poly, v: Var) -> Poly {
    let bu = b.to_univariate(v);
    let db = bu.len() - 1;
    let lcb = &bu[db];
    let mut r = a.to_univariate(v);
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lcr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = c.mul(lcb);
        }
        for (i, bc) in bu.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&lcr.mul(bc));
        }
        debug_assert!(r[dr].is_zero());
        while matches!(r.last(), Some(c) if c.is_zero()) {
            r.pop();
        }
    }
    Poly::from_univariate(&r, v)
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::text::format_poly(self, 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Poly {
        Poly::var_pow(Var::Q, 1)
    }
    fn t() -> Poly {
        Poly::var_pow(Var::T, 1)
    }

    #[test]
    fn arithmetic_basics() {
        let a = q().add(&Poly::one());
        let b = q().sub(&Poly::one());
        assert_eq!(a.mul(&b), q().pow(2).sub(&Poly::one()));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = q().pow(2).sub(&t().pow(2));
        let d = q().sub(&t());
        assert_eq!(a.div_exact(&d), Some(q().add(&t())));
        assert_eq!(a.div_exact(&q().add(&Poly::constant(3))), None);
        let laurent = Poly::var_pow(Var::Q, -3).mul(&a);
        assert_eq!(
            laurent.div_exact(&d),
            Some(Poly::var_pow(Var::Q, -3).mul(&q().add(&t())))
        );
    }

    #[test]
    fn gcd_bivariate() {
        let common = q().mul(&t()).sub(&Poly::one());
        let a = common.mul(&q().add(&Poly::constant(2)));
        let b = common.mul(&t().pow(3).add(&q()));
        assert_eq!(gcd(&a, &b), common.sign_normalized());
        assert_eq!(
            gcd(&Poly::constant(6), &Poly::constant(-4)),
            Poly::constant(2)
        );
    }

    #[test]
    fn gcd_with_compressed_exponents() {
        // (1 - q^6) and (1 - q^4) share 1 - q^2.
        let a = Poly::one().sub(&q().pow(6));
        let b = Poly::one().sub(&q().pow(4));
        assert_eq!(gcd(&a, &b), q().pow(2).sub(&Poly::one()));
    }

    #[test]
    fn taylor_at_one_handles_negative_powers() {
        // q^-1 = 1 - s + s^2 - ...
        let p = Poly::var_pow(Var::Q, -1);
        let c = p.taylor_at_one(Var::Q, 3);
        let vals: Vec<BigInt> = c.iter().map(|x| x.as_constant().unwrap()).collect();
        assert_eq!(vals, vec![1.into(), (-1).into(), 1.into(), (-1).into()]);
        let (ord, lead) = Poly::one().sub(&q().pow(3)).leading_at_one(Var::Q).unwrap();
        assert_eq!(ord, 1);
        assert_eq!(lead, Poly::constant(-3));
    }
}
