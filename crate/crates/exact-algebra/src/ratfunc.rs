//! Canonical rational functions in `q^{1/d}`, `t` and `k` over `ℚ`.
//!
//! A [`RatFunc`] is `num / den` where both are integer Laurent polynomials
//! and `q`-exponents are counted in units of `1/qden`. The canonical form
//! makes structural equality coincide with equality of functions:
//!
//! * `den` is monomial-free and its lex-smallest term (the constant term
//!   when there is one) has a positive coefficient;
//! * `num` and `den` are coprime over `ℤ` (integer content included);
//! * `qden` is the smallest unit that keeps all `q`-exponents integral.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::poly::{gcd, Exps, Poly, Var};
use crate::text::{format_poly, parse_poly, split_ratfunc};
use crate::AlgebraError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
    qden: i64,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
            qden: 1,
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(c: impl Into<BigInt>) -> Self {
        RatFunc {
            num: Poly::constant(c),
            den: Poly::one(),
            qden: 1,
        }
    }

    /// The rational number `a / b`.
    pub fn from_ratio(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self, AlgebraError> {
        Self::new(Poly::constant(a), Poly::constant(b), 1)
    }

    /// A polynomial whose `q`-exponents are in units of `1/qden`.
    pub fn from_poly(p: Poly, qden: i64) -> Self {
        Self::from_coprime(p, Poly::one(), qden)
    }

    /// `q^{a/b}`.
    pub fn q_pow(a: i64, b: i64) -> Self {
        assert!(b > 0, "q exponent denominator must be positive");
        Self::from_poly(Poly::var_pow(Var::Q, a), b)
    }

    /// `t^e`.
    pub fn t_pow(e: i64) -> Self {
        Self::from_poly(Poly::var_pow(Var::T, e), 1)
    }

    /// The formal parameter `k` (as used for Jack polynomials).
    pub fn k_var() -> Self {
        Self::from_poly(Poly::var_pow(Var::K, 1), 1)
    }

    /// Build and reduce `num / den`.
    pub fn new(num: Poly, den: Poly, qden: i64) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        assert!(qden > 0, "q unit must be positive");
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar_exact(&c).expect("content divides");
            den = den.div_scalar_exact(&c).expect("content divides");
        }
        Ok(Self::from_coprime(num, den, qden))
    }

    /// Normalize a pair already known to be coprime: move the monomial part
    /// of `den` into `num`, fix the sign and shrink the `q` unit.
    fn from_coprime(num: Poly, den: Poly, qden: i64) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let m = den.min_exps();
        let back = [-m[0], -m[1], -m[2]];
        let mut num = num.shift(back);
        let mut den = den.shift(back);
        if den.terms()[0].1.is_negative() {
            num = num.neg();
            den = den.neg();
        }
        let mut g = qden;
        for (e, _) in num.terms().iter().chain(den.terms()) {
            if g == 1 {
                break;
            }
            g = g.gcd(&e[0]);
        }
        if g > 1 {
            let shrink = |e: Exps| [e[0] / g, e[1], e[2]];
            num = num.map_exps(shrink);
            den = den.map_exps(shrink);
        }
        RatFunc {
            num,
            den,
            qden: qden / g,
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    /// The `q` unit: exponents of `num`/`den` count powers of `q^{1/qden}`.
    pub fn qden(&self) -> i64 {
        self.qden
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Whether the denominator is `1`.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a rational number, if it is constant.
    pub fn as_rational(&self) -> Option<(BigInt, BigInt)> {
        Some((self.num.as_constant()?, self.den.as_constant()?))
    }

    /// Whether any of the given generator occurs.
    pub fn contains(&self, v: Var) -> bool {
        self.num.contains(v) || self.den.contains(v)
    }

    /// Rescale both operands to a common `q` unit.
    fn aligned(&self, other: &RatFunc) -> (Poly, Poly, Poly, Poly, i64) {
        let l = self.qden.lcm(&other.qden);
        let up = |p: &Poly, from: i64| {
            let f = l / from;
            if f == 1 {
                p.clone()
            } else {
                p.map_exps(|e| [e[0] * f, e[1], e[2]])
            }
        };
        (
            up(&self.num, self.qden),
            up(&self.den, self.qden),
            up(&other.num, other.qden),
            up(&other.den, other.qden),
            l,
        )
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.combine(other, true)
    }

    fn combine(&self, other: &RatFunc, negate: bool) -> RatFunc {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { other.neg() } else { other.clone() };
        }
        let (a, b, c, d, l) = self.aligned(other);
        let c = if negate { c.neg() } else { c };
        if b == d {
            return Self::new(a.add(&c), b, l).expect("nonzero denominator");
        }
        let g = gcd(&b, &d);
        let (b1, d1) = if g.is_one() {
            (b.clone(), d)
        } else {
            (
                b.div_exact(&g).expect("gcd divides"),
                d.div_exact(&g).expect("gcd divides"),
            )
        };
        let num = a.mul(&d1).add(&c.mul(&b1));
        let den = b.mul(&d1);
        Self::new(num, den, l).expect("nonzero denominator")
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
            qden: self.qden,
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (a, b, c, d, l) = self.aligned(other);
        let cancel = |x: Poly, y: Poly| -> (Poly, Poly) {
            if y.is_one() {
                return (x, y);
            }
            let g = gcd(&x, &y);
            if g.is_one() {
                (x, y)
            } else {
                (
                    x.div_exact(&g).expect("gcd divides"),
                    y.div_exact(&g).expect("gcd divides"),
                )
            }
        };
        let (a, d) = cancel(a, d);
        let (c, b) = cancel(c, b);
        Self::from_coprime(a.mul(&c), b.mul(&d), l)
    }

    pub fn inv(&self) -> Result<RatFunc, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::from_coprime(
            self.den.clone(),
            self.num.clone(),
            self.qden,
        ))
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc, AlgebraError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn scale_int(&self, c: i64) -> RatFunc {
        self.mul(&Self::from_integer(c))
    }

    pub fn pow(&self, e: i64) -> Result<RatFunc, AlgebraError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let m = e.unsigned_abs() as u32;
        Ok(RatFunc {
            num: base.num.pow(m),
            den: base.den.pow(m),
            qden: base.qden,
        })
    }

    /// Substitute `t = q^s` (an integer power of `q`).
    pub fn subs_t_qpow(&self, s: i64) -> Result<RatFunc, AlgebraError> {
        let f = self.qden;
        let map = |p: &Poly| p.map_exps(|e| [e[0] + e[1] * s * f, 0, e[2]]);
        Self::new(map(&self.num), map(&self.den), self.qden)
            .map_err(|_| AlgebraError::Pole(format!("t = q^{s} in {self}")))
    }

    /// Substitute the rational number `a / b` for the generator `v`
    /// (`v` must not be `q`, whose exponents may be fractional).
    pub fn subs_rational(&self, v: Var, a: &BigInt, b: &BigInt) -> Result<RatFunc, AlgebraError> {
        assert!(v != Var::Q, "rational substitution for q is not supported");
        assert!(!b.is_zero(), "zero denominator in substituted value");
        let (num, n_lo, n_hi) = eval_at_ratio(&self.num, v, a, b)?;
        let (den, d_lo, d_hi) = eval_at_ratio(&self.den, v, a, b)?;
        // value = num·a^{n_lo}/b^{n_hi} ÷ (den·a^{d_lo}/b^{d_hi})
        let a_exp = n_lo - d_lo;
        let b_exp = d_hi - n_hi;
        let mut top = num;
        let mut bottom = den;
        let pw = |x: &BigInt, e: i64| Poly::constant(x.pow(e.unsigned_abs() as u32));
        if a_exp >= 0 {
            top = top.mul(&pw(a, a_exp));
        } else {
            bottom = bottom.mul(&pw(a, a_exp));
        }
        if b_exp >= 0 {
            top = top.mul(&pw(b, b_exp));
        } else {
            bottom = bottom.mul(&pw(b, b_exp));
        }
        if bottom.is_zero() {
            return Err(AlgebraError::Pole(format!("{} = {a}/{b}", v.name())));
        }
        Self::new(top, bottom, self.qden)
    }

    /// The limit `q → 1`, computed from the lowest-order terms of the
    /// expansions of numerator and denominator in `q − 1`.
    pub fn limit_q_to_one(&self) -> Result<RatFunc, AlgebraError> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (on, cn) = self.num.leading_at_one(Var::Q).expect("nonzero numerator");
        let (od, cd) = self
            .den
            .leading_at_one(Var::Q)
            .expect("nonzero denominator");
        if on > od {
            return Ok(Self::zero());
        }
        if on < od {
            return Err(AlgebraError::Pole(format!("q = 1 in {self}")));
        }
        Self::new(cn, cd, 1)
    }

    /// Rewrite `f(q, t)` as `g(q', t')` with `q' = q²`, `t' = t²`.
    ///
    /// Fails if `t` occurs to an odd power.
    pub fn to_macdonald_convention(&self) -> Result<RatFunc, AlgebraError> {
        let odd = |p: &Poly| p.terms().iter().any(|(e, _)| e[1] % 2 != 0);
        if odd(&self.num) || odd(&self.den) {
            return Err(AlgebraError::Convention(self.to_string()));
        }
        let halve = |p: &Poly| p.map_exps(|e| [e[0], e[1] / 2, e[2]]);
        Ok(Self::from_coprime(
            halve(&self.num),
            halve(&self.den),
            self.qden * 2,
        ))
    }

    /// Numerical value at real `q`, `t`, `k` (a convenience for spot checks).
    pub fn eval_f64(&self, q: f64, t: f64, k: f64) -> f64 {
        let ev = |p: &Poly| -> f64 {
            p.terms()
                .iter()
                .map(|(e, c)| {
                    let c: f64 = c.to_string().parse().unwrap_or(f64::NAN);
                    c * q.powf(e[0] as f64 / self.qden as f64)
                        * t.powi(e[1] as i32)
                        * k.powi(e[2] as i32)
                })
                .sum()
        };
        ev(&self.num) / ev(&self.den)
    }

    /// Numerator in canonical text form.
    pub fn num_string(&self) -> String {
        format_poly(&self.num, self.qden)
    }

    /// Denominator in canonical text form.
    pub fn den_string(&self) -> String {
        format_poly(&self.den, self.qden)
    }

    /// Rebuild from separately printed numerator and denominator.
    pub fn from_num_den_strings(num: &str, den: &str) -> Result<RatFunc, AlgebraError> {
        let (n, nd) = parse_poly(num)?;
        let (d, dd) = parse_poly(den)?;
        let l = nd.lcm(&dd);
        let up = |p: Poly, from: i64| p.map_exps(|e| [e[0] * (l / from), e[1], e[2]]);
        Self::new(up(n, nd), up(d, dd), l)
    }
}

/// Evaluate `p` at `v = a/b`, returning `(P, lo, hi)` with
/// `p(a/b) = P · a^lo / b^hi` and `P` free of `v`.
fn eval_at_ratio(
    p: &Poly,
    v: Var,
    a: &BigInt,
    b: &BigInt,
) -> Result<(Poly, i64, i64), AlgebraError> {
    let vi = v.index();
    let lo = p.min_exps()[vi];
    let hi = p.max_exps()[vi];
    if lo < 0 && a.is_zero() {
        return Err(AlgebraError::Pole(format!("{} = 0", v.name())));
    }
    let terms = p.terms().iter().map(|(e, c)| {
        let d = e[vi];
        let mut e2 = *e;
        e2[vi] = 0;
        let coeff = c * a.pow((d - lo) as u32) * b.pow((hi - d) as u32);
        (e2, coeff)
    });
    Ok((Poly::from_terms(terms), lo, hi))
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "({})", self.num_string())
        } else {
            write!(f, "({})/({})", self.num_string(), self.den_string())
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for RatFunc {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (num, den) = split_ratfunc(s)?;
        Self::from_num_den_strings(&num, den.as_deref().unwrap_or("1"))
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn cancels_common_factors() {
        let a = rf("(1 - q^2)/(1 - q)");
        assert_eq!(a.add(&RatFunc::zero()), rf("(1 + q)"));
        assert_eq!(a.to_string(), "(1 + q)");
    }

    #[test]
    fn fractional_powers_cancel() {
        let q = RatFunc::q_pow(1, 4);
        let qi = RatFunc::q_pow(-1, 4);
        assert!(q.mul(&qi).is_one());
        assert_eq!(RatFunc::q_pow(2, 4), RatFunc::q_pow(1, 2));
        assert_eq!(RatFunc::q_pow(1, 2).to_string(), "(q^(1/2))");
    }

    #[test]
    fn substitute_t_power() {
        let a = rf("(1 - t^2)/(1 - q^2*t^2)");
        assert_eq!(a.subs_t_qpow(2).unwrap(), rf("(1 - q^4)/(1 - q^6)"));
    }

    #[test]
    fn denominator_sign_and_monomials() {
        let a = rf("(1)/(-q^3 + q^5)");
        assert!(a.denominator().terms()[0].1.is_positive());
        assert_eq!(a.denominator().min_exps(), [0, 0, 0]);
        assert_eq!(a.mul(&rf("(q^5 - q^3)")), RatFunc::one());
    }

    #[test]
    fn integer_content_is_cancelled() {
        let a = RatFunc::new(
            Poly::constant(6).mul(&Poly::var_pow(Var::Q, 1)),
            Poly::constant(4),
            1,
        )
        .unwrap();
        assert_eq!(a.to_string(), "(3*q)/(2)");
    }

    #[test]
    fn limits_at_one() {
        let a = rf("(1 - q^4)/(1 - q^6)");
        assert_eq!(
            a.limit_q_to_one().unwrap(),
            RatFunc::from_ratio(2, 3).unwrap()
        );
        assert!(rf("(1)/(1 - q)").limit_q_to_one().is_err());
        assert!(rf("(1 - q)").limit_q_to_one().unwrap().is_zero());
    }

    #[test]
    fn rational_substitution() {
        let a = rf("(2*k)/(k + 1)");
        let v = a
            .subs_rational(Var::K, &BigInt::from(2), &BigInt::from(1))
            .unwrap();
        assert_eq!(v, RatFunc::from_ratio(4, 3).unwrap());
        let w = rf("(k^(-1))")
            .subs_rational(Var::K, &BigInt::from(1), &BigInt::from(3))
            .unwrap();
        assert_eq!(w, RatFunc::from_integer(3));
        assert!(rf("(1)/(k - 1)")
            .subs_rational(Var::K, &BigInt::from(1), &BigInt::from(1))
            .is_err());
    }

    #[test]
    fn macdonald_convention_halves_exponents() {
        let a = rf("(1 - t^2)/(1 - q^2*t^2)");
        assert_eq!(
            a.to_macdonald_convention().unwrap(),
            rf("(1 - t)/(1 - q*t)")
        );
        assert!(rf("(t)").to_macdonald_convention().is_err());
        assert_eq!(
            rf("(q*t^2)").to_macdonald_convention().unwrap().to_string(),
            "(q^(1/2)*t)"
        );
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(RatFunc::one().div(&RatFunc::zero()).is_err());
        assert!("(1)/(0)".parse::<RatFunc>().is_err());
    }
}
