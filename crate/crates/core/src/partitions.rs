//! Brute-force partition enumeration: the combinatorial oracle.
//!
//! Nothing here uses series arithmetic; generating functions are only built
//! from finished counts.

use std::fmt::Write as _;

use crate::error::{QError, Result};
use crate::series::QSeries;

/// A partition as a weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(QError::ParamOutOfRange(format!("{parts:?} is not a partition")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|π|`.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// `#(π)`.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }
}

/// Visit partitions of `n` built largest part first.
///
/// `admit(prev, next)` decides whether `next` may follow `prev` (the previous,
/// larger-or-equal part, `None` for the first part). Output order is the
/// reverse lexicographic order of part sequences, as in (4), (3,1), (2,2), ...
pub fn for_each_partition<A, V>(n: u32, admit: A, mut visit: V)
where
    A: Fn(Option<u32>, u32) -> bool,
    V: FnMut(&[u32]),
{
    fn rec<A: Fn(Option<u32>, u32) -> bool, V: FnMut(&[u32])>(
        rest: u32,
        max_part: u32,
        stack: &mut Vec<u32>,
        admit: &A,
        visit: &mut V,
    ) {
        if rest == 0 {
            visit(stack);
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            if !admit(stack.last().copied(), p) {
                continue;
            }
            stack.push(p);
            rec(rest - p, p, stack, admit, visit);
            stack.pop();
        }
    }
    rec(n, n, &mut Vec::new(), &admit, &mut visit);
}

/// All partitions of `n` satisfying `pred`.
pub fn enumerate<P: Fn(&Partition) -> bool>(n: u32, pred: P) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition(
        n,
        |_, _| true,
        |parts| {
            let p = Partition { parts: parts.to_vec() };
            if pred(&p) {
                out.push(p);
            }
        },
    );
    out
}

fn check_m(m: u32) -> Result<()> {
    if m == 1 || m == 2 {
        Ok(())
    } else {
        Err(QError::ParamOutOfRange(format!("m must be 1 or 2, got {m}")))
    }
}

/// Distinct parts, none congruent to ±m modulo 6.
pub fn count_c(m: u32, n: u32) -> Result<u64> {
    check_m(m)?;
    let banned = |p: u32| p % 6 == m || p % 6 == 6 - m;
    let mut count = 0;
    for_each_partition(n, |prev, p| prev.is_none_or(|q| p < q) && !banned(p), |_| count += 1);
    Ok(count)
}

/// Consecutive parts `larger ≥ smaller` allowed in a Capparelli partition:
/// difference at least 4, or the pair is `{3k, 3k+3}` or `{3k-1, 3k+1}`.
pub fn capparelli_pair_ok(larger: u32, smaller: u32) -> bool {
    if larger < smaller {
        return false;
    }
    match larger - smaller {
        d if d >= 4 => true,
        3 => smaller.is_multiple_of(3),
        2 => smaller % 3 == 2,
        _ => false,
    }
}

/// Same rule stated by residues: difference at least 4, or a difference of 2
/// or 3 whose pair sum is divisible by 3.
pub fn capparelli_pair_ok_mod3(larger: u32, smaller: u32) -> bool {
    if larger < smaller {
        return false;
    }
    let d = larger - smaller;
    d >= 4 || ((d == 2 || d == 3) && (larger + smaller).is_multiple_of(3))
}

/// Capparelli partitions of `n` with no part equal to `m`.
pub fn count_d(m: u32, n: u32) -> Result<u64> {
    check_m(m)?;
    let mut count = 0;
    for_each_partition(n, |prev, p| p != m && prev.is_none_or(|q| capparelli_pair_ok(q, p)), |_| count += 1);
    Ok(count)
}

/// [`count_d`] using the residue form of the pair rule.
pub fn count_d_mod3(m: u32, n: u32) -> Result<u64> {
    check_m(m)?;
    let mut count = 0;
    for_each_partition(n, |prev, p| p != m && prev.is_none_or(|q| capparelli_pair_ok_mod3(q, p)), |_| count += 1);
    Ok(count)
}

/// The three weighted partition theorems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightedTheorem {
    W1,
    W2,
    W3,
}

impl std::str::FromStr for WeightedTheorem {
    type Err = QError;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "W1" => Ok(WeightedTheorem::W1),
            "W2" => Ok(WeightedTheorem::W2),
            "W3" => Ok(WeightedTheorem::W3),
            _ => Err(QError::ParamOutOfRange(format!("unknown weighted theorem `{s}` (W1, W2, W3)"))),
        }
    }
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl WeightedTheorem {
    /// Residue of `#(π)` excluded from the distinct-part side.
    fn excluded_left(self) -> usize {
        match self {
            WeightedTheorem::W1 => 0,
            WeightedTheorem::W2 => 2,
            WeightedTheorem::W3 => 1,
        }
    }

    /// Residue of `#(π)` excluded from the second factor on the right.
    fn excluded_right(self) -> usize {
        match self {
            WeightedTheorem::W1 => 0,
            WeightedTheorem::W2 => 1,
            WeightedTheorem::W3 => 2,
        }
    }

    /// `σ` for W1 (`# ≡ 2`), `σ*` otherwise (`# ≡ 0`).
    fn sigma(self, k: usize) -> usize {
        match self {
            WeightedTheorem::W1 => usize::from(k % 3 == 2),
            _ => usize::from(k.is_multiple_of(3)),
        }
    }

    /// `(-1)^μ` for W1, `(-1)^{μ*}` otherwise.
    fn left_weight(self, k: usize) -> i64 {
        match self {
            WeightedTheorem::W1 => sign(k + self.sigma(k) + 1),
            _ => sign(k + self.sigma(k)),
        }
    }
}

/// Signed totals `(left, right)` over partitions of `n`.
pub fn weighted_sum(th: WeightedTheorem, n: u32) -> (i64, i64) {
    let mut left = 0i64;
    for_each_partition(
        n,
        |prev, p| prev.is_none_or(|q| p < q),
        |parts| {
            let k = parts.len();
            if k % 3 != th.excluded_left() {
                left += th.left_weight(k);
            }
        },
    );
    let mut right = 0i64;
    for a in 0..=n {
        let mut no_multiple_of_3 = 0i64;
        for_each_partition(a, |_, p| p % 3 != 0, |_| no_multiple_of_3 += 1);
        if no_multiple_of_3 == 0 {
            continue;
        }
        let mut signed = 0i64;
        for_each_partition(
            n - a,
            |_, _| true,
            |parts| {
                let k = parts.len();
                if k % 3 != th.excluded_right() {
                    signed += sign(th.sigma(k));
                }
            },
        );
        right += no_multiple_of_3 * signed;
    }
    (left, right)
}

/// `Σ_{n≤N} counter(n) q^n`, truncated at `q^N`.
pub fn gf_from_counts<F: Fn(u32) -> i64>(counter: F, n: u32) -> QSeries {
    let c: Vec<i64> = (0..=n).map(counter).collect();
    QSeries::from_i64s(0, &c).truncate(n as i64)
}

/// CSV of `count_C` and `count_D`; `m = None` gives both classes.
pub fn counts_csv(m: Option<u32>, n_max: u32) -> Result<(String, bool)> {
    let ms: Vec<u32> = match m {
        Some(m) => {
            check_m(m)?;
            vec![m]
        }
        None => vec![1, 2],
    };
    let mut out = String::from("n");
    for m in &ms {
        write!(out, ",C_{m},D_{m}").unwrap();
    }
    out.push_str(",match\n");
    let mut all = true;
    for n in 0..=n_max {
        write!(out, "{n}").unwrap();
        let mut row = true;
        for &m in &ms {
            let (c, d) = (count_c(m, n)?, count_d(m, n)?);
            row &= c == d;
            write!(out, ",{c},{d}").unwrap();
        }
        all &= row;
        writeln!(out, ",{row}").unwrap();
    }
    Ok((out, all))
}

/// CSV of weighted totals for one theorem.
pub fn weighted_csv(th: WeightedTheorem, n_max: u32) -> (String, bool) {
    let mut out = String::from("n,lhs,rhs,match\n");
    let mut all = true;
    for n in 0..=n_max {
        let (l, r) = weighted_sum(th, n);
        all &= l == r;
        writeln!(out, "{n},{l},{r},{}", l == r).unwrap();
    }
    (out, all)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(v: &[Partition]) -> Vec<Vec<u32>> {
        v.iter().map(|p| p.parts().to_vec()).collect()
    }

    #[test]
    fn partitions_of_four() {
        let all = enumerate(4, |_| true);
        assert_eq!(parts(&all), vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
    }

    #[test]
    fn partition_of_zero_is_empty() {
        let all = enumerate(0, |_| true);
        assert_eq!(all, vec![Partition::empty()]);
        assert_eq!(all[0].size(), 0);
        assert_eq!(all[0].num_parts(), 0);
    }

    #[test]
    fn distinct_partitions_of_six() {
        let d = enumerate(6, Partition::is_distinct);
        assert_eq!(parts(&d), vec![vec![6], vec![5, 1], vec![4, 2], vec![3, 2, 1]]);
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![3, 1, 1]).is_ok());
        assert!(Partition::new(vec![1, 3]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_c(1, 0).unwrap(), 1);
        assert_eq!(count_c(1, 6).unwrap(), 2);
        assert_eq!(count_c(2, 1).unwrap(), 1);
        assert_eq!(count_d(1, 0).unwrap(), 1);
        assert_eq!(count_d(1, 6).unwrap(), 2);
        assert!(count_c(3, 4).is_err());
        let c1: Vec<u64> = (0..12).map(|n| count_c(1, n).unwrap()).collect();
        assert_eq!(c1, vec![1, 0, 1, 1, 1, 1, 2, 1, 2, 3, 3, 3]);
        let c2: Vec<u64> = (0..12).map(|n| count_c(2, n).unwrap()).collect();
        assert_eq!(c2, vec![1, 1, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3]);
    }

    #[test]
    fn pair_rules_agree() {
        for a in 1..80 {
            for b in 1..=a {
                assert_eq!(capparelli_pair_ok(a, b), capparelli_pair_ok_mod3(a, b), "{a},{b}");
            }
        }
        assert!(capparelli_pair_ok(6, 3));
        assert!(capparelli_pair_ok(4, 2));
        assert!(!capparelli_pair_ok(5, 3));
        assert!(!capparelli_pair_ok(3, 1));
    }

    #[test]
    fn weighted_worked_example() {
        assert_eq!(weighted_sum(WeightedTheorem::W1, 3), (2, 2));
        assert_eq!(weighted_sum(WeightedTheorem::W1, 0), (0, 0));
        assert_eq!(weighted_sum(WeightedTheorem::W2, 0), (-1, -1));
        assert_eq!(weighted_sum(WeightedTheorem::W3, 0), (-1, -1));
    }

    #[test]
    fn csv_shapes() {
        let (csv, ok) = counts_csv(Some(1), 3).unwrap();
        assert!(ok);
        assert_eq!(csv.lines().next().unwrap(), "n,C_1,D_1,match");
        assert_eq!(csv.lines().nth(1).unwrap(), "0,1,1,true");
        let (csv, _) = counts_csv(None, 0).unwrap();
        assert_eq!(csv.lines().next().unwrap(), "n,C_1,D_1,C_2,D_2,match");
        assert!(counts_csv(Some(3), 3).is_err());
        let (csv, ok) = weighted_csv(WeightedTheorem::W1, 3);
        assert!(ok);
        assert_eq!(csv.lines().nth(4).unwrap(), "3,2,2,true");
    }

    #[test]
    fn gf_of_partition_counts() {
        let g = gf_from_counts(|n| enumerate(n, |_| true).len() as i64, 4);
        assert_eq!(g, QSeries::from_i64s(0, &[1, 1, 2, 3, 5]).truncate(4));
        assert!(gf_from_counts(|_| 0, 7).is_zero());
    }
}
