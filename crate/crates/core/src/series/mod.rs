//! Laurent polynomials and truncated power series in `q` with exact integer
//! coefficients.

mod coeffs;
mod text;

use std::cmp::{max, min};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{QError, Result};
use coeffs::Coeffs;

pub use text::SeriesJson;

/// An exact Laurent polynomial, or a power series known up to `q^N`.
///
/// The representation is canonical: the coefficient vector never starts or
/// ends with a zero, the zero series has offset 0, and no stored exponent
/// exceeds the truncation order. Two values are equal exactly when their
/// fields are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QSeries {
    offset: i64,
    coeffs: Coeffs,
    trunc: Option<i64>,
}

/// How two series were compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum CompareMode {
    Exact,
    /// Agreement is only meaningful up to and including this exponent.
    UpTo(i64),
}

/// First exponent at which two series differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: i64,
    pub left: BigInt,
    pub right: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub mode: CompareMode,
    pub mismatch: Option<Mismatch>,
}

impl Comparison {
    pub fn agrees(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl QSeries {
    fn build(offset: i64, coeffs: Coeffs, trunc: Option<i64>) -> QSeries {
        let mut coeffs = coeffs;
        if let Some(n) = trunc {
            let keep = if n < offset { 0 } else { min(coeffs.len() as i64, n - offset + 1) as usize };
            if keep < coeffs.len() {
                coeffs = coeffs.slice(0, keep);
            }
        }
        match coeffs.support() {
            None => QSeries { offset: 0, coeffs: Coeffs::default(), trunc },
            Some((lo, hi)) => {
                let c = if lo == 0 && hi == coeffs.len() { coeffs } else { coeffs.slice(lo, hi) };
                QSeries { offset: offset + lo as i64, coeffs: c.compact(), trunc }
            }
        }
    }

    pub fn zero() -> QSeries {
        QSeries::default()
    }

    pub fn one() -> QSeries {
        QSeries::monomial(0, 1)
    }

    /// `c * q^e`.
    pub fn monomial(e: i64, c: i64) -> QSeries {
        QSeries::build(e, Coeffs::Small(vec![c]), None)
    }

    pub fn monomial_big(e: i64, c: BigInt) -> QSeries {
        QSeries::build(e, Coeffs::Big(vec![c]), None)
    }

    /// `coeffs[i]` is the coefficient of `q^(offset + i)`.
    pub fn from_i64s(offset: i64, coeffs: &[i64]) -> QSeries {
        QSeries::build(offset, Coeffs::Small(coeffs.to_vec()), None)
    }

    pub fn from_coeffs(offset: i64, coeffs: Vec<BigInt>) -> QSeries {
        QSeries::build(offset, Coeffs::Big(coeffs), None)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> QSeries {
        terms.into_iter().fold(QSeries::zero(), |acc, (e, c)| acc + QSeries::monomial(e, c))
    }

    /// `1 + sign * q^e` with `sign = ±1`.
    pub fn binomial_factor(e: i64, sign: i64) -> QSeries {
        QSeries::one() + QSeries::monomial(e, sign)
    }

    /// Lowest exponent with a non-zero coefficient.
    pub fn order(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.offset)
    }

    /// Highest exponent with a non-zero coefficient.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.offset + self.coeffs.len() as i64 - 1)
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn truncation(&self) -> Option<i64> {
        self.trunc
    }

    pub fn is_exact(&self) -> bool {
        self.trunc.is_none()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of stored coefficients (between order and degree).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `q^e` (zero outside the stored range).
    pub fn coeff(&self, e: i64) -> BigInt {
        match self.index(e) {
            Some(i) => self.coeffs.get(i),
            None => BigInt::zero(),
        }
    }

    pub fn coeff_i64(&self, e: i64) -> Option<i64> {
        match self.index(e) {
            Some(i) => self.coeffs.get_i64(i),
            None => Some(0),
        }
    }

    fn index(&self, e: i64) -> Option<usize> {
        let i = e.checked_sub(self.offset)?;
        (i >= 0 && (i as usize) < self.coeffs.len()).then_some(i as usize)
    }

    /// Stored coefficients, lowest exponent first.
    pub fn coefficients(&self) -> Vec<BigInt> {
        self.coeffs.to_big()
    }

    /// Coefficients of `q^0 ..= q^n`.
    pub fn dense_prefix(&self, n: i64) -> Vec<BigInt> {
        (0..=n).map(|e| self.coeff(e)).collect()
    }

    /// Non-zero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> Vec<(i64, BigInt)> {
        (0..self.coeffs.len())
            .filter(|&i| !self.coeffs.is_zero_at(i))
            .map(|i| (self.offset + i as i64, self.coeffs.get(i)))
            .collect()
    }

    /// Largest coefficient in absolute value.
    pub fn height(&self) -> BigInt {
        coeffs::abs_max(&self.coeffs)
    }

    /// Lower bound on the order of the true series, `None` meaning +∞.
    fn effective_order(&self) -> Option<i64> {
        if self.is_zero() {
            self.trunc.map(|n| n + 1)
        } else {
            Some(self.offset)
        }
    }

    /// Multiply by `q^e`.
    pub fn shift(&self, e: i64) -> QSeries {
        QSeries {
            offset: if self.is_zero() { 0 } else { self.offset + e },
            coeffs: self.coeffs.clone(),
            trunc: self.trunc.map(|n| n + e),
        }
    }

    pub fn scale(&self, k: i64) -> QSeries {
        self.scale_big(&BigInt::from(k))
    }

    pub fn scale_big(&self, k: &BigInt) -> QSeries {
        QSeries::build(self.offset, self.coeffs.scaled(k), self.trunc)
    }

    /// Drop every coefficient above `q^n`; the truncation becomes `min(n, current)`.
    pub fn truncate(&self, n: i64) -> QSeries {
        let t = match self.trunc {
            Some(m) => min(m, n),
            None => n,
        };
        QSeries::build(self.offset, self.coeffs.clone(), Some(t))
    }

    /// Forget the truncation marker. Only meaningful when the caller knows the
    /// stored coefficients are the whole series.
    pub fn into_exact(self) -> QSeries {
        QSeries { trunc: None, ..self }
    }

    /// Replace `q` by `q^k`.
    ///
    /// A truncation order `N` becomes `k*N + k - 1`: unknown coefficients map
    /// to exponents at least `k*(N+1)`, and the gaps in between are known zeros.
    pub fn substitute_q_power(&self, k: u32) -> QSeries {
        assert!(k >= 1, "substitution power must be positive");
        let k = k as i64;
        QSeries::build(self.offset * k, self.coeffs.spread(k as usize), self.trunc.map(|n| n * k + k - 1))
    }

    /// Replace `q` by `1/q`.
    pub fn invert_q(&self) -> Result<QSeries> {
        if self.trunc.is_some() {
            return Err(QError::TruncatedInput);
        }
        match self.degree() {
            None => Ok(QSeries::zero()),
            Some(d) => Ok(QSeries::build(-d, self.coeffs.reversed(), None)),
        }
    }

    /// Multiply by `1 + sign * q^e`.
    pub fn mul_binomial(&self, e: i64, sign: i64) -> QSeries {
        debug_assert!(sign == 1 || sign == -1);
        if self.is_zero() {
            return self.clone();
        }
        let t = self.trunc.map(|n| n + min(0, e));
        let shifted = QSeries { offset: self.offset + e, coeffs: self.coeffs.clone(), trunc: None };
        let sum = if sign > 0 { add_raw(self, &shifted, false) } else { add_raw(self, &shifted, true) };
        match t {
            Some(n) => sum.truncate(n),
            None => sum,
        }
    }

    /// Exact division by `1 - q^t`.
    pub fn div_one_minus_power(&self, t: i64) -> Result<QSeries> {
        if self.trunc.is_some() {
            return Err(QError::ExactRequired);
        }
        if t == 0 {
            return Err(QError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(QSeries::zero());
        }
        if t < 0 {
            // 1 - q^{-d} = -q^{-d} (1 - q^d)
            return Ok(self.shift(-t).div_one_minus_power(-t)?.scale(-1));
        }
        let n = self.coeffs.len();
        let tu = t as usize;
        if n <= tu {
            return Err(QError::NonDivisible(format!("degree span {} below 1 - q^{t}", n - 1)));
        }
        let r = coeffs::stride_prefix_sum(&self.coeffs, tu, n - tu);
        let q = QSeries::build(self.offset, r, None);
        if &q.mul_binomial(t, -1) != self {
            return Err(QError::NonDivisible(format!("remainder modulo 1 - q^{t}")));
        }
        Ok(q)
    }

    /// Power-series division by `1 - q^t` (`t ≥ 1`), known up to `q^n`.
    pub fn div_one_minus_power_series(&self, t: i64, n: i64) -> Result<QSeries> {
        if t < 1 {
            return Err(QError::ParamOutOfRange(format!("series division needs t >= 1, got {t}")));
        }
        let p = self.truncate(n);
        let n = p.trunc.unwrap_or(n);
        if p.is_zero() || n < p.offset {
            return Ok(p);
        }
        let len = (n - p.offset + 1) as usize;
        let r = coeffs::stride_prefix_sum(&p.coeffs, t as usize, len);
        Ok(QSeries::build(p.offset, r, Some(n)))
    }

    /// Exact quotient `self / d` in the Laurent polynomial ring.
    pub fn div_exact(&self, d: &QSeries) -> Result<QSeries> {
        if self.trunc.is_some() || d.trunc.is_some() {
            return Err(QError::ExactRequired);
        }
        if d.is_zero() {
            return Err(QError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(QSeries::zero());
        }
        if d.len() == 1 {
            let c = d.coeffs.get(0);
            let a = self.coeffs.to_big();
            let mut out = Vec::with_capacity(a.len());
            for x in a {
                if !(&x % &c).is_zero() {
                    return Err(QError::NonDivisible("coefficient not divisible by monomial".into()));
                }
                out.push(x / &c);
            }
            return Ok(QSeries::build(self.offset - d.offset, Coeffs::Big(out), None));
        }
        if self.len() < d.len() {
            return Err(QError::NonDivisible("dividend shorter than divisor".into()));
        }
        let a = self.coeffs.to_big();
        let b = d.coeffs.to_big();
        let lead = &b[0];
        let qlen = a.len() - b.len() + 1;
        let mut rem = a;
        let mut quo = vec![BigInt::zero(); qlen];
        for k in 0..qlen {
            if rem[k].is_zero() {
                continue;
            }
            if !(&rem[k] % lead).is_zero() {
                return Err(QError::NonDivisible(format!("leading coefficient at q^{}", self.offset + k as i64)));
            }
            let c = &rem[k] / lead;
            for (i, bi) in b.iter().enumerate() {
                if !bi.is_zero() {
                    rem[k + i] -= &c * bi;
                }
            }
            quo[k] = c;
        }
        if rem.iter().any(|x| !x.is_zero()) {
            return Err(QError::NonDivisible("non-zero remainder".into()));
        }
        Ok(QSeries::build(self.offset - d.offset, Coeffs::Big(quo), None))
    }

    /// Compare coefficientwise; truncated operands compare up to the smaller truncation.
    pub fn compare(&self, other: &QSeries) -> Comparison {
        let limit = match (self.trunc, other.trunc) {
            (None, None) => None,
            (Some(a), None) | (None, Some(a)) => Some(a),
            (Some(a), Some(b)) => Some(min(a, b)),
        };
        let mode = limit.map_or(CompareMode::Exact, CompareMode::UpTo);
        let (x, y) = match limit {
            None => (self.clone(), other.clone()),
            Some(n) => (self.truncate(n).into_exact(), other.truncate(n).into_exact()),
        };
        if x == y {
            return Comparison { mode, mismatch: None };
        }
        let lo = match (x.order(), y.order()) {
            (Some(a), Some(b)) => min(a, b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => 0,
        };
        let hi = max(x.degree().unwrap_or(lo), y.degree().unwrap_or(lo));
        let exponent =
            (lo..=hi).find(|&e| x.coeff(e) != y.coeff(e)).expect("distinct canonical series differ somewhere");
        Comparison { mode, mismatch: Some(Mismatch { exponent, left: x.coeff(exponent), right: y.coeff(exponent) }) }
    }

    /// `true` when [`compare`](Self::compare) finds no mismatch.
    pub fn agrees_with(&self, other: &QSeries) -> bool {
        self.compare(other).agrees()
    }

    pub fn pow(&self, k: u32) -> QSeries {
        (0..k).fold(QSeries::one(), |acc, _| &acc * self)
    }
}

fn add_raw(a: &QSeries, b: &QSeries, negate_b: bool) -> QSeries {
    let trunc = match (a.trunc, b.trunc) {
        (None, None) => None,
        (Some(x), None) | (None, Some(x)) => Some(x),
        (Some(x), Some(y)) => Some(min(x, y)),
    };
    if b.is_zero() {
        return QSeries::build(a.offset, a.coeffs.clone(), trunc);
    }
    if a.is_zero() {
        let c = if negate_b { b.coeffs.negated() } else { b.coeffs.clone() };
        return QSeries::build(b.offset, c, trunc);
    }
    let lo = min(a.offset, b.offset);
    let hi = max(a.degree().unwrap(), b.degree().unwrap());
    let hi = trunc.map_or(hi, |t| min(hi, t));
    if hi < lo {
        return QSeries::build(0, Coeffs::default(), trunc);
    }
    let n = (hi - lo + 1) as usize;
    // Clip each operand to the window before combining.
    let clip = |s: &QSeries| -> (Coeffs, usize) {
        let start = (s.offset - lo) as usize;
        let keep = min(s.coeffs.len(), n.saturating_sub(start));
        (s.coeffs.slice(0, keep), start)
    };
    let (ca, sa) = clip(a);
    let (cb, sb) = clip(b);
    QSeries::build(lo, coeffs::combine(&ca, sa, &cb, sb, n, negate_b), trunc)
}

fn mul_raw(a: &QSeries, b: &QSeries) -> QSeries {
    let bound = |n: Option<i64>, other: Option<i64>| n.map(|n| n + other.map_or(0, |o| min(0, o)));
    let trunc = match (bound(a.trunc, b.effective_order()), bound(b.trunc, a.effective_order())) {
        (None, None) => None,
        (Some(x), None) | (None, Some(x)) => Some(x),
        (Some(x), Some(y)) => Some(min(x, y)),
    };
    if a.is_zero() || b.is_zero() {
        return QSeries::build(0, Coeffs::default(), trunc);
    }
    let off = a.offset + b.offset;
    let full = a.len() + b.len() - 1;
    let len = match trunc {
        Some(t) if t < off => 0,
        Some(t) => min(full as i64, t - off + 1) as usize,
        None => full,
    };
    if len == 0 {
        return QSeries::build(0, Coeffs::default(), trunc);
    }
    QSeries::build(off, coeffs::convolve(&a.coeffs, &b.coeffs, len), trunc)
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, o: &QSeries) -> QSeries {
        add_raw(self, o, false)
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, o: &QSeries) -> QSeries {
        add_raw(self, o, true)
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, o: &QSeries) -> QSeries {
        mul_raw(self, o)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries { offset: self.offset, coeffs: self.coeffs.negated(), trunc: self.trunc }
    }
}

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QSeries {
            type Output = QSeries;
            fn $m(self, o: QSeries) -> QSeries {
                (&self).$m(&o)
            }
        }
        impl $tr<&QSeries> for QSeries {
            type Output = QSeries;
            fn $m(self, o: &QSeries) -> QSeries {
                (&self).$m(o)
            }
        }
        impl $tr<QSeries> for &QSeries {
            type Output = QSeries;
            fn $m(self, o: QSeries) -> QSeries {
                self.$m(&o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&QSeries> for QSeries {
    fn add_assign(&mut self, o: &QSeries) {
        *self = add_raw(self, o, false);
    }
}

impl AddAssign for QSeries {
    fn add_assign(&mut self, o: QSeries) {
        *self += &o;
    }
}

impl SubAssign<&QSeries> for QSeries {
    fn sub_assign(&mut self, o: &QSeries) {
        *self = add_raw(self, o, true);
    }
}

impl SubAssign for QSeries {
    fn sub_assign(&mut self, o: QSeries) {
        *self -= &o;
    }
}

impl std::iter::Sum for QSeries {
    fn sum<I: Iterator<Item = QSeries>>(iter: I) -> QSeries {
        iter.fold(QSeries::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for QSeries {
    fn product<I: Iterator<Item = QSeries>>(iter: I) -> QSeries {
        iter.fold(QSeries::one(), |a, b| a * b)
    }
}

impl From<i64> for QSeries {
    fn from(c: i64) -> QSeries {
        QSeries::monomial(0, c)
    }
}

impl Zero for QSeries {
    fn zero() -> QSeries {
        QSeries::zero()
    }
    fn is_zero(&self) -> bool {
        QSeries::is_zero(self)
    }
}

impl One for QSeries {
    fn one() -> QSeries {
        QSeries::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(offset: i64, c: &[i64]) -> QSeries {
        QSeries::from_i64s(offset, c)
    }

    #[test]
    fn normalization_trims_both_ends() {
        let s = p(-2, &[0, 0, 3, 0, 5, 0]);
        assert_eq!(s.offset(), 0);
        assert_eq!(s.coefficients(), vec![BigInt::from(3), BigInt::from(0), BigInt::from(5)]);
        assert_eq!(p(7, &[0, 0]), QSeries::zero());
        assert_eq!(QSeries::zero().offset(), 0);
    }

    #[test]
    fn add_examples() {
        let x = p(-1, &[4, 0, 2]);
        assert_eq!(QSeries::zero() + &x, x);
        assert_eq!(p(0, &[1, 1]) + p(1, &[1, -1]), p(0, &[1, 2, -1]));
        let t = p(0, &[1, 1]).truncate(1);
        assert_eq!(&t + &QSeries::monomial(2, 1), t);
        assert_eq!((&t + &QSeries::monomial(2, 1)).truncation(), Some(1));
    }

    #[test]
    fn mul_examples() {
        let x = p(3, &[1, -7, 2]);
        assert_eq!(QSeries::one() * &x, x);
        assert_eq!(p(0, &[1, -1]) * p(0, &[1, 1]), p(0, &[1, 0, -1]));
        assert_eq!(QSeries::monomial(-1, 1) * QSeries::monomial(2, 1), QSeries::monomial(1, 1));
    }

    #[test]
    fn mul_with_laurent_factor_lowers_truncation() {
        let a = (QSeries::one() + QSeries::monomial(1, 1) + QSeries::monomial(5, 1)).truncate(5);
        let b = QSeries::monomial(-2, 1) + QSeries::one();
        let c = &a * &b;
        assert_eq!(c.truncation(), Some(3));
        assert_eq!(c, QSeries::from_i64s(-2, &[1, 1, 1, 1, 0, 1]).truncate(3));
    }

    #[test]
    fn div_exact_examples() {
        assert_eq!(p(0, &[1, 0, -1]).div_exact(&p(0, &[1, -1])).unwrap(), p(0, &[1, 1]));
        let x = p(-3, &[2, 5, -1, 7]);
        assert_eq!(x.div_exact(&x).unwrap(), QSeries::one());
        // (q;q)_2 / (q;q)_1 = 1 - q^2
        let qq2 = p(0, &[1, -1]) * p(0, &[1, 0, -1]);
        assert_eq!(qq2.div_exact(&p(0, &[1, -1])).unwrap(), p(0, &[1, 0, -1]));
        assert!(matches!(p(0, &[1, 1]).div_exact(&p(0, &[1, -1])), Err(QError::NonDivisible(_))));
        assert!(matches!(x.div_exact(&QSeries::zero()), Err(QError::DivisionByZero)));
    }

    #[test]
    fn one_minus_power_division() {
        let a = p(2, &[1, 0, 0, -1]);
        assert_eq!(a.div_one_minus_power(3).unwrap(), QSeries::monomial(2, 1));
        assert_eq!(a.div_one_minus_power(1).unwrap(), p(2, &[1, 1, 1]));
        assert!(p(0, &[1, 1]).div_one_minus_power(1).is_err());
        assert_eq!(p(0, &[1, 0, -1]).div_one_minus_power(-2).unwrap(), QSeries::monomial(2, -1));
        let g = QSeries::one().div_one_minus_power_series(1, 4).unwrap();
        assert_eq!(g, p(0, &[1, 1, 1, 1, 1]).truncate(4));
    }

    #[test]
    fn substitute_examples() {
        assert_eq!(p(0, &[1, 1]).substitute_q_power(3), p(0, &[1, 0, 0, 1]));
        assert_eq!(QSeries::monomial(-1, 1).substitute_q_power(2), QSeries::monomial(-2, 1));
        assert_eq!(QSeries::zero().substitute_q_power(5), QSeries::zero());
        assert_eq!(p(0, &[1, 1]).truncate(1).substitute_q_power(3).truncation(), Some(5));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(QSeries::monomial(1, 1).invert_q().unwrap(), QSeries::monomial(-1, 1));
        let x = p(0, &[1, 1, 0, 1]);
        assert_eq!(x.invert_q().unwrap(), p(-3, &[1, 0, 1, 1]));
        assert_eq!(x.invert_q().unwrap().invert_q().unwrap(), x);
        assert_eq!(x.truncate(2).invert_q(), Err(QError::TruncatedInput));
    }

    #[test]
    fn truncate_examples() {
        assert_eq!(p(0, &[1, 1, 0, 0, 0, 1]).truncate(3), p(0, &[1, 1]).truncate(3));
        let z = QSeries::zero().truncate(10);
        assert!(z.is_zero());
        assert_eq!(z.truncation(), Some(10));
        assert_eq!(p(0, &[1, 2, 3]).truncate(1).truncate(5).truncation(), Some(1));
    }

    #[test]
    fn compare_examples() {
        let a = p(0, &[1, 1]);
        assert_eq!(a.compare(&a), Comparison { mode: CompareMode::Exact, mismatch: None });
        let b = p(0, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 1]);
        let c = a.truncate(1).compare(&b);
        assert_eq!(c.mode, CompareMode::UpTo(1));
        assert!(c.agrees());
        let m = QSeries::one().compare(&a).mismatch.unwrap();
        assert_eq!((m.exponent, m.left, m.right), (1, BigInt::from(0), BigInt::from(1)));
    }

    #[test]
    fn big_coefficients_round_trip() {
        let big = BigInt::from(i64::MAX) * BigInt::from(4);
        let s = QSeries::monomial_big(3, big.clone());
        assert_eq!(s.coeff(3), big);
        assert_eq!((&s - &s), QSeries::zero());
        let half = s.div_exact(&QSeries::monomial(0, 4)).unwrap();
        assert_eq!(half, QSeries::monomial(3, i64::MAX));
    }
}
