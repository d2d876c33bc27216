//! Integer oracles for the acceptance run.
//!
//! These are computed by counting, with no reference to the algebraic
//! machinery under test, so agreement with it is meaningful.

/// The Kostka number `K_{λμ}`: semistandard tableaux of shape `shape` and
/// content `content`.
///
/// Peels off the cells holding the largest label, which form a horizontal
/// strip, and recurses on the remaining shape.
pub fn kostka(shape: &[i64], content: &[i64]) -> u64 {
    let shape: Vec<i64> = shape.iter().copied().filter(|&p| p > 0).collect();
    let content: Vec<i64> = content.iter().copied().filter(|&c| c > 0).collect();
    if shape.iter().sum::<i64>() != content.iter().sum::<i64>() {
        return 0;
    }
    strip_count(&shape, &content)
}

fn strip_count(shape: &[i64], content: &[i64]) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.is_empty());
    };
    let mut inner = vec![0i64; shape.len()];
    let mut total = 0;
    strips(shape, 0, last, &mut inner, &mut |nu| {
        let nu: Vec<i64> = nu.iter().copied().filter(|&p| p > 0).collect();
        total += strip_count(&nu, rest);
    });
    total
}

/// Every `ν` with `λ_{i+1} ≤ ν_i ≤ λ_i` and `|λ| − |ν| = remaining`.
fn strips(
    shape: &[i64],
    row: usize,
    remaining: i64,
    nu: &mut Vec<i64>,
    visit: &mut dyn FnMut(&[i64]),
) {
    if row == shape.len() {
        if remaining == 0 {
            visit(nu);
        }
        return;
    }
    let floor = shape.get(row + 1).copied().unwrap_or(0);
    for v in floor..=shape[row] {
        let taken = shape[row] - v;
        if taken > remaining {
            continue;
        }
        nu[row] = v;
        strips(shape, row + 1, remaining - taken, nu, visit);
    }
}

/// Coefficients of `∏_{m≥1} (1 − p^m)^{−r}` through `p^order`.
pub fn inverse_euler_power(r: usize, order: usize) -> Vec<i64> {
    let mut c = vec![0i64; order + 1];
    c[0] = 1;
    for _ in 0..r {
        for m in 1..=order {
            for i in m..=order {
                c[i] += c[i - m];
            }
        }
    }
    c
}

/// Every `x ∈ ℤⁿ` with `Σ x = total` and `|x_j| ≤ bound`.
pub fn integer_vectors(n: usize, total: i64, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![-bound; n];
    loop {
        if cur.iter().sum::<i64>() == total {
            out.push(cur.clone());
        }
        let mut i = 0;
        while i < n && cur[i] == bound {
            cur[i] = -bound;
            i += 1;
        }
        if i == n {
            return out;
        }
        cur[i] += 1;
    }
}
