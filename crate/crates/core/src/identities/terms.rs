//! Building blocks shared by the evaluators: monomials, binomial-kernel
//! sums, truncated summands and multi-index loops.

use crate::bounds::for_each_bounded_tuple;
use crate::error::Result;
use crate::qcombinat::{inv_qfactorial, q_binomial, q_ratio, Length, QFactorial};
use crate::series::QSeries;

pub(crate) fn qpow(e: i64) -> QSeries {
    QSeries::monomial(e, 1)
}

/// `1 + q^e`.
pub(crate) fn one_plus(e: i64) -> QSeries {
    QSeries::one().mul_binomial(e, 1)
}

pub(crate) fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `Σ_{j=lo}^{hi} w(j) [top, L-j]` in base `q^k`, skipping zero weights.
pub(crate) fn kernel_sum<W>(lo: i64, hi: i64, top: i64, l: i64, base: u32, weight: W) -> QSeries
where
    W: Fn(i64) -> QSeries,
{
    let mut acc = QSeries::zero();
    for j in lo..=hi {
        let b = q_binomial(top, l - j, base);
        if b.is_zero() {
            continue;
        }
        let w = weight(j);
        if !w.is_zero() {
            acc += &w * &b;
        }
    }
    acc
}

/// `Σ_{j=lo}^{hi} (j+1 / 3) q^{e(j)} [top, L-j]`.
pub(crate) fn jacobi_kernel<E: Fn(i64) -> i64>(l: i64, top: i64, lo: i64, hi: i64, e: E) -> QSeries {
    kernel_sum(lo, hi, top, l, 1, |j| QSeries::monomial(e(j), crate::qcombinat::jacobi3(j + 1)))
}

/// `q^ex * core * ∏ 1/(q^k;q^k)_len`, known up to `q^n`.
pub(crate) fn series_term(ex: i64, core: &QSeries, inverse: &[QFactorial], n: i64) -> QSeries {
    if ex > n || core.is_zero() {
        return QSeries::zero().truncate(n);
    }
    let m = n - ex;
    let mut t = core.truncate(m);
    for f in inverse {
        if f.len > 0 {
            t = &t * &inv_qfactorial(Length::Finite(f.len), f.base, m);
        }
    }
    t.shift(ex)
}

/// Multiset of `(q^k;q^k)_n` factors, written `f(n, k)`.
pub(crate) fn f(len: i64, base: u32) -> QFactorial {
    QFactorial { len, base }
}

pub(crate) fn ratio(num: &[QFactorial], den: &[QFactorial]) -> Result<QSeries> {
    q_ratio(num, den)
}

/// The partial sums `N_k = n_k + ... + n_f` of a tuple.
pub(crate) fn tails(ns: &[i64]) -> Vec<i64> {
    let mut out = vec![0; ns.len()];
    let mut acc = 0;
    for (i, &v) in ns.iter().enumerate().rev() {
        acc += v;
        out[i] = acc;
    }
    out
}

/// Visit tuples `(n_1..n_f)` whose weighted square sum `c * Σ N_k^2` stays within `n`.
pub(crate) fn for_each_tail_tuple<V: FnMut(&[i64])>(dims: usize, c: i64, n: i64, visit: V) {
    for_each_bounded_tuple(dims, n.max(0), n, |t| c * tails(t).iter().map(|x| x * x).sum::<i64>(), visit);
}
