//! Index bounds for sums whose exponents grow quadratically.

use crate::error::{QError, Result};

/// All integers `j` with `quad*j^2 + lin*j <= max_exp`, as an inclusive range.
///
/// The range is empty (`lo > hi`) when no index qualifies. `quad` must be
/// positive, otherwise the exponents are unbounded below.
pub fn quadratic_index_range(quad: i64, lin: i64, max_exp: i64) -> Result<(i64, i64)> {
    if quad <= 0 {
        return Err(QError::UnboundedBelow(format!("exponent {quad}*j^2 + {lin}*j")));
    }
    let f = |j: i64| -> i128 { quad as i128 * (j as i128) * (j as i128) + lin as i128 * j as i128 };
    let (a, b, c) = (quad as f64, lin as f64, max_exp as f64);
    let disc = b * b + 4.0 * a * c;
    if disc < 0.0 {
        // The vertex may still be an integer solution only if disc is ~0.
        let v = (-b / (2.0 * a)).round() as i64;
        return Ok(if f(v) <= max_exp as i128 { (v, v) } else { (1, 0) });
    }
    let r = disc.sqrt();
    let mut lo = ((-b - r) / (2.0 * a)).floor() as i64;
    let mut hi = ((-b + r) / (2.0 * a)).ceil() as i64;
    while f(lo) > max_exp as i128 && lo <= hi {
        lo += 1;
    }
    while lo > i64::MIN && f(lo - 1) <= max_exp as i128 {
        lo -= 1;
    }
    while f(hi) > max_exp as i128 && hi >= lo {
        hi -= 1;
    }
    while hi < i64::MAX && f(hi + 1) <= max_exp as i128 {
        hi += 1;
    }
    Ok((lo, hi))
}

/// Visit every tuple of `dims` non-negative integers whose exponent bound
/// `lower(tuple)` does not exceed `max_exp`.
///
/// `lower` must be non-decreasing in each coordinate on the non-negative
/// orthant; enumeration of a coordinate stops at the first value whose bound
/// (with all later coordinates zero) exceeds `max_exp`. `cap` bounds every
/// coordinate as a safety net.
pub fn for_each_bounded_tuple<F, V>(dims: usize, cap: i64, max_exp: i64, lower: F, mut visit: V)
where
    F: Fn(&[i64]) -> i64,
    V: FnMut(&[i64]),
{
    let mut t = vec![0i64; dims];
    fn rec<F: Fn(&[i64]) -> i64, V: FnMut(&[i64])>(
        k: usize,
        t: &mut Vec<i64>,
        cap: i64,
        max_exp: i64,
        lower: &F,
        visit: &mut V,
    ) {
        if k == t.len() {
            visit(t);
            return;
        }
        for v in 0..=cap {
            t[k] = v;
            if lower(t) > max_exp {
                break;
            }
            rec(k + 1, t, cap, max_exp, lower, visit);
        }
        t[k] = 0;
    }
    if lower(&t) > max_exp {
        return;
    }
    rec(0, &mut t, cap, max_exp, &lower, &mut visit);
}

/// Visit every tuple of `dims` non-negative integers with sum at most `total`.
pub fn for_each_composition_bounded<V: FnMut(&[i64])>(dims: usize, total: i64, mut visit: V) {
    for_each_bounded_tuple(dims, total, total, |t| t.iter().sum(), &mut visit);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_of_square() {
        assert_eq!(quadratic_index_range(1, 0, 4).unwrap(), (-2, 2));
        assert_eq!(quadratic_index_range(1, 0, 3).unwrap(), (-1, 1));
        assert_eq!(quadratic_index_range(3, 1, 0).unwrap(), (0, 0));
        assert_eq!(quadratic_index_range(3, 1, 2).unwrap(), (-1, 0));
        let (lo, hi) = quadratic_index_range(5, 0, -1).unwrap();
        assert!(lo > hi);
        assert!(matches!(quadratic_index_range(0, 1, 5), Err(QError::UnboundedBelow(_))));
    }

    #[test]
    fn range_is_exact_against_scan() {
        for quad in 1..5 {
            for lin in -7..8 {
                for max_exp in -3..40 {
                    let (lo, hi) = quadratic_index_range(quad, lin, max_exp).unwrap();
                    for j in -50i64..=50 {
                        let inside = quad * j * j + lin * j <= max_exp;
                        assert_eq!(inside, lo <= j && j <= hi, "quad={quad} lin={lin} N={max_exp} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn bounded_tuples_match_filter() {
        let mut got = Vec::new();
        for_each_bounded_tuple(
            2,
            10,
            20,
            |t| 2 * t[0] * t[0] + 6 * t[0] * t[1] + 6 * t[1] * t[1],
            |t| got.push(t.to_vec()),
        );
        let mut want = Vec::new();
        for m in 0..=10 {
            for n in 0..=10 {
                if 2 * m * m + 6 * m * n + 6 * n * n <= 20 {
                    want.push(vec![m, n]);
                }
            }
        }
        assert_eq!(got, want);
        let mut count = 0;
        for_each_composition_bounded(3, 4, |_| count += 1);
        assert_eq!(count, 35);
    }
}
