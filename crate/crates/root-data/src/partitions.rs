//! Partitions with a bounded number of parts.

/// All partitions of `size` into at most `parts` parts, each padded with
/// zeros to length `parts`, in reverse lexicographic order.
pub fn partitions(size: i64, parts: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if size < 0 || parts == 0 {
        if size == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut current = Vec::with_capacity(parts);
    fill(size, parts, size, &mut current, &mut out);
    out
}

fn fill(remaining: i64, slots: usize, cap: i64, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if slots == 0 {
        if remaining == 0 {
            out.push(current.clone());
        }
        return;
    }
    let hi = remaining.min(cap);
    for part in (0..=hi).rev() {
        // The remaining slots can absorb at most `part` each.
        if part * (slots as i64) < remaining {
            break;
        }
        current.push(part);
        fill(remaining - part, slots - 1, part, current, out);
        current.pop();
    }
}

/// All weakly decreasing sequences of length `len` with entries in `0..=max`.
pub fn partitions_bounded(len: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    bounded(len, max, &mut current, &mut out);
    out
}

fn bounded(len: usize, cap: i64, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if current.len() == len {
        out.push(current.clone());
        return;
    }
    for part in (0..=cap).rev() {
        current.push(part);
        bounded(len, part, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_partition_numbers() {
        // p(5) = 7; with at most 3 parts: 5, 41, 32, 311, 221.
        assert_eq!(partitions(5, 5).len(), 7);
        assert_eq!(partitions(5, 3).len(), 5);
        assert_eq!(partitions(0, 3), vec![vec![0, 0, 0]]);
        assert!(partitions(-1, 2).is_empty());
    }

    #[test]
    fn bounded_sequences() {
        // Weakly decreasing pairs in {0,1,2}: C(4,2) = 6.
        assert_eq!(partitions_bounded(2, 2).len(), 6);
        assert_eq!(partitions_bounded(0, 3), vec![Vec::<i64>::new()]);
    }
}
