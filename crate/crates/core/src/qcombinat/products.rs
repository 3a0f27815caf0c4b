//! Theta-type sums and products at monomial specializations `z = q^s`.

use super::{inv_qfactorial, pochhammer, pochhammer_inf, Length, PochSpec};
use crate::bounds::quadratic_index_range;
use crate::error::{QError, Result};
use crate::series::{Comparison, QSeries};

/// Product of infinite Pochhammer symbols, truncated at `q^n`.
pub fn infinite_product(factors: &[PochSpec], n: i64) -> Result<QSeries> {
    // Laurent factors lower the known range of the remaining ones; widen first.
    let slack: i64 = factors.iter().map(laurent_order).sum();
    let m = n - slack;
    let mut acc = QSeries::one().truncate(m);
    for f in factors {
        acc = &acc * &pochhammer_inf(f, m)?;
    }
    Ok(acc.truncate(n))
}

fn laurent_order(f: &PochSpec) -> i64 {
    let k = f.base.max(1) as i64;
    let mut o = 0;
    let mut e = f.shift;
    while e < 0 {
        o += e;
        e += k;
    }
    o
}

fn check_base(base: u32) -> Result<()> {
    if base == 0 {
        Err(QError::UnboundedBelow("base 0 makes every theta exponent linear".into()))
    } else {
        Ok(())
    }
}

/// `Σ_j q^{base j^2 + z_shift j}` truncated at `q^n`.
pub fn jtp_sum(z_shift: i64, base: u32, n: i64) -> Result<QSeries> {
    check_base(base)?;
    let (lo, hi) = quadratic_index_range(base as i64, z_shift, n)?;
    let s: QSeries = (lo..=hi).map(|j| QSeries::monomial(base as i64 * j * j + z_shift * j, 1)).sum();
    Ok(s.truncate(n))
}

/// `(-q^{b+s}, -q^{b-s}, q^{2b}; q^{2b})_∞` truncated at `q^n`.
pub fn jtp_product(z_shift: i64, base: u32, n: i64) -> Result<QSeries> {
    check_base(base)?;
    let b = base as i64;
    infinite_product(
        &[
            PochSpec::infinite(b + z_shift, 2 * base).negate(),
            PochSpec::infinite(b - z_shift, 2 * base).negate(),
            PochSpec::infinite(2 * b, 2 * base),
        ],
        n,
    )
}

/// `Σ_j (-1)^j q^{b j(3j-1)/2 + 3 s j} (1 + q^{s + b j})` truncated at `q^n`.
pub fn quintuple_sum(z_shift: i64, base: u32, n: i64) -> Result<QSeries> {
    check_base(base)?;
    let b = base as i64;
    let s = z_shift;
    let e1 = |j: i64| b * j * (3 * j - 1) / 2 + 3 * s * j;
    let (lo1, hi1) = quadratic_index_range(3 * b, 6 * s - b, 2 * n)?;
    let (lo2, hi2) = quadratic_index_range(3 * b, 6 * s + b, 2 * (n - s))?;
    let mut acc = QSeries::zero();
    for j in lo1.min(lo2)..=hi1.max(hi2) {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        acc += QSeries::monomial(e1(j), sign);
        acc += QSeries::monomial(e1(j) + s + b * j, sign);
    }
    Ok(acc.truncate(n))
}

/// `(q^b, -q^s, -q^{b-s}; q^b)_∞ (q^{b+2s}, q^{b-2s}; q^{2b})_∞` truncated at `q^n`.
pub fn quintuple_product(z_shift: i64, base: u32, n: i64) -> Result<QSeries> {
    check_base(base)?;
    let b = base as i64;
    let s = z_shift;
    infinite_product(
        &[
            PochSpec::infinite(b, base),
            PochSpec::infinite(s, base).negate(),
            PochSpec::infinite(b - s, base).negate(),
            PochSpec::infinite(b + 2 * s, 2 * base),
            PochSpec::infinite(b - 2 * s, 2 * base),
        ],
        n,
    )
}

/// The parameter `a` of the q-binomial theorem: `0` or `q^s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum APower {
    Zero,
    Power(i64),
}

/// Both sides of `Σ (a;q)_n/(q;q)_n z^n = (az;q)_∞/(z;q)_∞` with `z = q^{z_shift}`.
pub fn q_binomial_theorem_sides(a: APower, z_shift: i64, n: i64) -> Result<(QSeries, QSeries)> {
    if z_shift < 1 {
        return Err(QError::ParamOutOfRange(format!("z_shift must be >= 1, got {z_shift}")));
    }
    if let APower::Power(s) = a {
        if s + z_shift < 1 {
            return Err(QError::ParamOutOfRange(format!("a*z = q^{} does not converge", s + z_shift)));
        }
    }
    let max_k = match a {
        APower::Power(s) if s <= 0 => -s,
        _ => n / z_shift,
    };
    let mut lhs = QSeries::zero().truncate(n);
    for k in 0..=max_k.max(0) {
        let num = match a {
            APower::Zero => QSeries::one(),
            APower::Power(s) => pochhammer(&PochSpec::finite(s, 1, k))?,
        }
        .shift(z_shift * k);
        let o = match num.order() {
            Some(o) => o,
            None => continue,
        };
        let inv = inv_qfactorial(Length::Finite(k), 1, n - o.min(0));
        lhs += &num * &inv;
    }
    let mut rhs = match a {
        APower::Zero => QSeries::one().truncate(n),
        APower::Power(s) => pochhammer_inf(&PochSpec::infinite(s + z_shift, 1), n)?,
    };
    let mut e = z_shift;
    while e <= n {
        rhs = rhs.div_one_minus_power_series(e, n)?;
        e += 1;
    }
    Ok((lhs.truncate(n), rhs))
}

/// Sides of a classical identity and their comparison.
#[derive(Clone, Debug)]
pub struct ClassicalCheck {
    pub lhs: QSeries,
    pub rhs: QSeries,
    pub comparison: Comparison,
}

pub fn q_binomial_theorem_check(a: APower, z_shift: i64, n: i64) -> Result<ClassicalCheck> {
    let (lhs, rhs) = q_binomial_theorem_sides(a, z_shift, n)?;
    let comparison = lhs.compare(&rhs);
    Ok(ClassicalCheck { lhs, rhs, comparison })
}
