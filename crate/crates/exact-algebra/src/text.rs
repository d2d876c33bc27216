//! Canonical text form of polynomials and rational functions.
//!
//! Polynomials print as signed sums of terms in ascending exponent order,
//! e.g. `1 - q^2*t^2`. Fractional `q` exponents print reduced in
//! parentheses, `q^(1/2)`, and negative ones as `q^(-2)`. A rational
//! function prints as `(num)` or `(num)/(den)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::{Exps, Poly, Var, NVARS};
use crate::AlgebraError;

/// Format with `q`-exponents measured in units of `1/qden`.
pub fn format_poly(p: &Poly, qden: i64) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().iter().enumerate() {
        let negative = c.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = c.abs();
        let factors = format_monomial(e, qden);
        if factors.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&factors);
        } else {
            out.push_str(&mag.to_string());
            out.push('*');
            out.push_str(&factors);
        }
    }
    out
}

fn format_monomial(e: &Exps, qden: i64) -> String {
    let mut parts = Vec::new();
    for v in Var::ALL {
        let x = e[v.index()];
        if x == 0 {
            continue;
        }
        let (num, den) = if v == Var::Q {
            let g = x.gcd(&qden);
            (x / g, qden / g)
        } else {
            (x, 1)
        };
        let name = v.name();
        parts.push(match (num, den) {
            (1, 1) => name.to_string(),
            (a, 1) if a > 0 => format!("{name}^{a}"),
            (a, 1) => format!("{name}^({a})"),
            (a, b) => format!("{name}^({a}/{b})"),
        });
    }
    parts.join("*")
}

/// A parsed term: coefficient and rational exponents per generator.
struct RawTerm {
    coeff: BigInt,
    exps: [(i64, i64); NVARS],
}

/// Parse a polynomial; returns the polynomial together with the `q` unit
/// (least common denominator of the `q` exponents).
pub fn parse_poly(s: &str) -> Result<(Poly, i64), AlgebraError> {
    let raw = parse_terms(s)?;
    let mut qden = 1i64;
    for t in &raw {
        qden = qden.lcm(&t.exps[0].1);
    }
    let terms = raw.into_iter().map(|t| {
        let mut e = [0i64; NVARS];
        for i in 0..NVARS {
            let (a, b) = t.exps[i];
            e[i] = if i == 0 { a * (qden / b) } else { a };
        }
        (e, t.coeff)
    });
    Ok((Poly::from_terms(terms), qden))
}

fn parse_terms(s: &str) -> Result<Vec<RawTerm>, AlgebraError> {
    let compact: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = |msg: &str| AlgebraError::Parse(format!("{msg} in {s:?}"));
    if compact.is_empty() {
        return Err(bad("empty polynomial"));
    }
    let mut pos = 0usize;
    let mut out = Vec::new();
    while pos < compact.len() {
        let mut sign = BigInt::one();
        if compact[pos] == '+' || compact[pos] == '-' {
            if compact[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
        } else if pos > 0 {
            return Err(bad("expected '+' or '-'"));
        }
        let mut coeff = BigInt::one();
        let mut exps = [(0i64, 1i64); NVARS];
        let mut first = true;
        loop {
            if pos >= compact.len() {
                return Err(bad("dangling operator"));
            }
            let c = compact[pos];
            if c.is_ascii_digit() {
                if !first {
                    return Err(bad("coefficient must lead a term"));
                }
                let start = pos;
                while pos < compact.len() && compact[pos].is_ascii_digit() {
                    pos += 1;
                }
                let digits: String = compact[start..pos].iter().collect();
                coeff = digits.parse().map_err(|_| bad("bad integer"))?;
            } else {
                let v = match c {
                    'q' => Var::Q,
                    't' => Var::T,
                    'k' => Var::K,
                    _ => return Err(bad("unexpected character")),
                };
                pos += 1;
                let mut exp = (1i64, 1i64);
                if pos < compact.len() && compact[pos] == '^' {
                    pos += 1;
                    exp = parse_exponent(&compact, &mut pos).ok_or_else(|| bad("bad exponent"))?;
                }
                if v != Var::Q && exp.1 != 1 {
                    return Err(bad("fractional exponents are only allowed for q"));
                }
                let slot = &mut exps[v.index()];
                let num = slot.0 * exp.1 + exp.0 * slot.1;
                let den = slot.1 * exp.1;
                let g = num.gcd(&den).max(1);
                *slot = (num / g, den / g);
            }
            first = false;
            if pos < compact.len() && compact[pos] == '*' {
                pos += 1;
                continue;
            }
            break;
        }
        if coeff.is_zero() {
            continue;
        }
        out.push(RawTerm {
            coeff: sign * coeff,
            exps,
        });
    }
    Ok(out)
}

fn parse_exponent(c: &[char], pos: &mut usize) -> Option<(i64, i64)> {
    let read_int = |pos: &mut usize| -> Option<i64> {
        let start = *pos;
        if *pos < c.len() && c[*pos] == '-' {
            *pos += 1;
        }
        while *pos < c.len() && c[*pos].is_ascii_digit() {
            *pos += 1;
        }
        c[start..*pos].iter().collect::<String>().parse().ok()
    };
    if *pos < c.len() && c[*pos] == '(' {
        *pos += 1;
        let a = read_int(pos)?;
        let mut b = 1;
        if *pos < c.len() && c[*pos] == '/' {
            *pos += 1;
            b = read_int(pos)?;
        }
        if *pos >= c.len() || c[*pos] != ')' || b <= 0 {
            return None;
        }
        *pos += 1;
        let g = a.gcd(&b).max(1);
        Some((a / g, b / g))
    } else {
        Some((read_int(pos)?, 1))
    }
}

/// Split `(num)/(den)`, `(num)` or a bare polynomial.
pub fn split_ratfunc(s: &str) -> Result<(String, Option<String>), AlgebraError> {
    let s = s.trim();
    let bad = || AlgebraError::Parse(format!("malformed rational function {s:?}"));
    if !s.starts_with('(') {
        return Ok((s.to_string(), None));
    }
    let close = matching_paren(s, 0).ok_or_else(bad)?;
    let num = s[1..close].to_string();
    let rest = s[close + 1..].trim();
    if rest.is_empty() {
        return Ok((num, None));
    }
    let rest = rest.strip_prefix('/').ok_or_else(bad)?.trim();
    if !rest.starts_with('(') {
        return Ok((num, Some(rest.to_string())));
    }
    let close2 = matching_paren(rest, 0).ok_or_else(bad)?;
    if !rest[close2 + 1..].trim().is_empty() {
        return Err(bad());
    }
    Ok((num, Some(rest[1..close2].to_string())))
}

fn matching_paren(s: &str, open: usize) -> Option<usize> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices().skip(open) {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}
