//! q-special functions: Pochhammer symbols, Gaussian binomials and
//! multinomials, Andrews–Baxter trinomials, Warnaar's S, the mod-3 character.

mod products;

use std::cell::RefCell;
use std::collections::HashMap;

use crate::error::{QError, Result};
use crate::series::QSeries;

pub use products::{
    infinite_product, jtp_product, jtp_sum, q_binomial_theorem_check, q_binomial_theorem_sides, quintuple_product,
    quintuple_sum, APower, ClassicalCheck,
};

/// The Jacobi (Legendre) symbol `(j/3)`.
pub fn jacobi3(j: i64) -> i64 {
    match j.rem_euclid(3) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Length {
    Finite(i64),
    Infinite,
}

/// `(±q^shift; q^base)_length`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PochSpec {
    /// `true` for `(-q^shift; q^base)`.
    pub negated: bool,
    pub shift: i64,
    pub base: u32,
    pub length: Length,
}

impl PochSpec {
    pub fn finite(shift: i64, base: u32, n: i64) -> PochSpec {
        PochSpec { negated: false, shift, base, length: Length::Finite(n) }
    }

    pub fn infinite(shift: i64, base: u32) -> PochSpec {
        PochSpec { negated: false, shift, base, length: Length::Infinite }
    }

    pub fn negate(self) -> PochSpec {
        PochSpec { negated: !self.negated, ..self }
    }

    fn sign(&self) -> i64 {
        if self.negated {
            1
        } else {
            -1
        }
    }

    fn check_factor(&self, e: i64) -> Result<()> {
        if e == 0 && !self.negated {
            Err(QError::ZeroFactor)
        } else {
            Ok(())
        }
    }
}

/// Finite Pochhammer symbol `∏_{i<n} (1 ∓ q^{s+k i})`.
pub fn pochhammer(spec: &PochSpec) -> Result<QSeries> {
    let n = match spec.length {
        Length::Finite(n) if n < 0 => return Err(QError::NegativeLength(n)),
        Length::Finite(n) => n,
        Length::Infinite => return Err(QError::ParamOutOfRange("infinite Pochhammer needs a truncation order".into())),
    };
    let mut acc = QSeries::one();
    for i in 0..n {
        let e = spec.shift + spec.base as i64 * i;
        if e == 0 {
            if spec.negated {
                acc = acc.scale(2);
                continue;
            }
            return Ok(QSeries::zero());
        }
        acc = acc.mul_binomial(e, spec.sign());
    }
    Ok(acc)
}

/// Infinite Pochhammer symbol truncated at `q^n`.
///
/// Factors with non-positive exponents are allowed (there are finitely many);
/// an undamped `(1 - q^0)` factor is rejected.
pub fn pochhammer_inf(spec: &PochSpec, n: i64) -> Result<QSeries> {
    if spec.base == 0 {
        return Err(QError::UnboundedBelow("Pochhammer base must be positive".into()));
    }
    let k = spec.base as i64;
    let mut laurent = QSeries::one();
    let mut order = 0i64;
    let mut i = 0i64;
    while spec.shift + k * i <= 0 {
        let e = spec.shift + k * i;
        spec.check_factor(e)?;
        if e == 0 {
            laurent = laurent.scale(2);
        } else {
            laurent = laurent.mul_binomial(e, spec.sign());
            order += e;
        }
        i += 1;
    }
    let m = n - order;
    let mut rest = QSeries::one().truncate(m);
    loop {
        let e = spec.shift + k * i;
        if e > m {
            break;
        }
        rest = rest.mul_binomial(e, spec.sign());
        i += 1;
    }
    Ok((&laurent * &rest).truncate(n))
}

type RatioKey = (Vec<QFactorial>, Vec<QFactorial>);

thread_local! {
    static BINOMIALS: RefCell<HashMap<(i64, i64, u32), QSeries>> = RefCell::new(HashMap::new());
    static FACTORIALS: RefCell<HashMap<(i64, u32), QSeries>> = RefCell::new(HashMap::new());
    static MULTINOMIALS: RefCell<HashMap<RatioKey, QSeries>> = RefCell::new(HashMap::new());
}

/// `(q^k; q^k)_n`, memoized per thread.
pub fn qfactorial(n: i64, base: u32) -> Result<QSeries> {
    if n < 0 {
        return Err(QError::NegativeLength(n));
    }
    if let Some(v) = FACTORIALS.with(|c| c.borrow().get(&(n, base)).cloned()) {
        return Ok(v);
    }
    let v = pochhammer(&PochSpec::finite(base as i64, base, n))?;
    FACTORIALS.with(|c| c.borrow_mut().insert((n, base), v.clone()));
    Ok(v)
}

/// Gaussian binomial `[top, bottom]` in base `q^k`; zero unless `0 ≤ bottom ≤ top`.
pub fn q_binomial(top: i64, bottom: i64, base: u32) -> QSeries {
    if bottom < 0 || top - bottom < 0 {
        return QSeries::zero();
    }
    let m = bottom.min(top - bottom);
    if m == 0 {
        return QSeries::one();
    }
    let key = (top, m, base);
    if let Some(v) = BINOMIALS.with(|c| c.borrow().get(&key).cloned()) {
        return v;
    }
    let k = base as i64;
    let d = top - m;
    // ∏_{i=1}^{m} (1 - q^{k(d+i)}) / (1 - q^{k i}); every partial quotient is [d+i, i].
    let mut acc = QSeries::one();
    for i in 1..=m {
        acc = acc
            .mul_binomial(k * (d + i), -1)
            .div_one_minus_power(k * i)
            .expect("partial products of a Gaussian binomial are polynomials");
    }
    BINOMIALS.with(|c| c.borrow_mut().insert(key, acc.clone()));
    acc
}

/// `(q^base; q^base)_len` used as a multinomial factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QFactorial {
    pub len: i64,
    pub base: u32,
}

pub fn qf(len: i64, base: u32) -> QFactorial {
    QFactorial { len, base }
}

/// `(q^{k0};q^{k0})_{n0} / ∏ (q^{k};q^{k})_{n}`, exact.
///
/// Returns zero when any length is negative. Fails with `NonDivisible` when
/// the quotient is not a polynomial.
pub fn q_multinomial(top: QFactorial, parts: &[QFactorial]) -> Result<QSeries> {
    q_ratio(&[top], parts)
}

/// `∏ num / ∏ den` over q-factorials, exact, with the same conventions as
/// [`q_multinomial`].
pub fn q_ratio(num: &[QFactorial], den: &[QFactorial]) -> Result<QSeries> {
    if num.iter().chain(den).any(|p| p.len < 0) {
        return Ok(QSeries::zero());
    }
    let norm = |v: &[QFactorial]| {
        let mut v: Vec<QFactorial> = v.iter().copied().filter(|p| p.len > 0).collect();
        v.sort();
        v
    };
    let key = (norm(num), norm(den));
    if let Some(v) = MULTINOMIALS.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(v);
    }
    let mut count: HashMap<i64, i64> = HashMap::new();
    for p in &key.0 {
        for i in 1..=p.len {
            *count.entry(p.base as i64 * i).or_default() += 1;
        }
    }
    for p in &key.1 {
        for i in 1..=p.len {
            *count.entry(p.base as i64 * i).or_default() -= 1;
        }
    }
    let mut exps: Vec<(i64, i64)> = count.into_iter().filter(|&(_, c)| c != 0).collect();
    exps.sort();
    let mut acc = QSeries::one();
    for &(e, c) in &exps {
        for _ in 0..c.max(0) {
            acc = acc.mul_binomial(e, -1);
        }
    }
    for &(e, c) in exps.iter().rev() {
        for _ in 0..(-c).max(0) {
            acc = acc.div_one_minus_power(e)?;
        }
    }
    MULTINOMIALS.with(|c| c.borrow_mut().insert(key, acc.clone()));
    Ok(acc)
}

/// `1 / (q^k; q^k)_n` as a power series known up to `q^max_exp`.
pub fn inv_qfactorial(len: Length, base: u32, max_exp: i64) -> QSeries {
    let k = base as i64;
    let mut acc = QSeries::one().truncate(max_exp);
    let mut i = 1i64;
    while k * i <= max_exp {
        if let Length::Finite(n) = len {
            if i > n {
                break;
            }
        }
        acc = acc.div_one_minus_power_series(k * i, max_exp).expect("positive step");
        i += 1;
    }
    acc
}

/// Andrews–Baxter trinomial `T(L; b, a) = Σ_j q^{j(j+b)} [L, j][L-j, j+a]` in base `q^k`.
pub fn q_trinomial_t(l: i64, b: i64, a: i64, base: u32) -> QSeries {
    let k = base as i64;
    (0..=l.max(-1))
        .map(|j| {
            let t = q_binomial(l - j, j + a, base);
            if t.is_zero() {
                return t;
            }
            (&q_binomial(l, j, base) * &t).shift(k * j * (j + b))
        })
        .sum()
}

/// Warnaar's `S(L, M; a, b) = Σ_n q^{n(n+a)} [M+L-a-2n, M][M-a+b, n][M+a-b, n+a]` in base `q^k`.
pub fn warnaar_s(l: i64, m: i64, a: i64, b: i64, base: u32) -> QSeries {
    let k = base as i64;
    let lo = 0.max(-a);
    let hi = m - a + b;
    (lo..=hi)
        .map(|n| {
            let x = q_binomial(m + l - a - 2 * n, m, base);
            if x.is_zero() {
                return x;
            }
            let y = q_binomial(m + a - b, n + a, base);
            if y.is_zero() {
                return y;
            }
            (&(&x * &q_binomial(m - a + b, n, base)) * &y).shift(k * n * (n + a))
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QSeries {
        QSeries::from_i64s(0, c)
    }

    #[test]
    fn jacobi_values() {
        assert_eq!(jacobi3(0), 0);
        assert_eq!(jacobi3(1), 1);
        assert_eq!(jacobi3(2), -1);
        assert_eq!(jacobi3(-2), 1);
        for j in -30..30 {
            assert_eq!(jacobi3(-j), -jacobi3(j));
            assert_eq!(jacobi3(j + 3), jacobi3(j));
        }
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&PochSpec::finite(1, 1, 0)).unwrap(), QSeries::one());
        assert_eq!(pochhammer(&PochSpec::finite(1, 1, 2)).unwrap(), p(&[1, -1, -1, 1]));
        assert_eq!(pochhammer(&PochSpec::finite(1, 1, -1)), Err(QError::NegativeLength(-1)));
        let inv = inv_qfactorial(Length::Infinite, 1, 4);
        assert_eq!(inv, p(&[1, 1, 2, 3, 5]).truncate(4));
        let direct = pochhammer_inf(&PochSpec::infinite(1, 1), 4).unwrap();
        assert_eq!((&direct * &inv).truncate(4), QSeries::one().truncate(4));
    }

    #[test]
    fn infinite_pochhammer_guards() {
        assert_eq!(pochhammer_inf(&PochSpec::infinite(0, 2), 5), Err(QError::ZeroFactor));
        // (-1; q)_∞ = 2 (-q; q)_∞
        let a = pochhammer_inf(&PochSpec::infinite(0, 1).negate(), 10).unwrap();
        let b = pochhammer_inf(&PochSpec::infinite(1, 1).negate(), 10).unwrap().scale(2);
        assert_eq!(a, b);
        // (q^{-1}; q^2)_∞ = (1 - q^{-1}) (q; q^2)_∞
        let c = pochhammer_inf(&PochSpec::infinite(-1, 2), 10).unwrap();
        let d = pochhammer_inf(&PochSpec::infinite(1, 2), 11).unwrap() * QSeries::binomial_factor(-1, -1);
        assert_eq!(c.truncation(), Some(10));
        assert!(c.agrees_with(&d));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(q_binomial(2, 1, 1), p(&[1, 1]));
        assert_eq!(q_binomial(4, 2, 1), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(3, -1, 1), QSeries::zero());
        assert_eq!(q_binomial(3, 4, 1), QSeries::zero());
        assert_eq!(q_binomial(2, 1, 3), p(&[1, 0, 0, 1]));
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(q_multinomial(qf(2, 1), &[qf(0, 1), qf(1, 1), qf(0, 3)]).unwrap(), p(&[1, 0, -1]));
        assert_eq!(q_multinomial(qf(5, 1), &[qf(-1, 1), qf(2, 1)]).unwrap(), QSeries::zero());
        assert_eq!(q_multinomial(qf(0, 1), &[qf(0, 1), qf(0, 3)]).unwrap(), QSeries::one());
        assert_eq!(q_multinomial(qf(4, 1), &[qf(2, 1), qf(2, 1)]).unwrap(), q_binomial(4, 2, 1));
        assert!(matches!(q_multinomial(qf(1, 1), &[qf(1, 3)]), Err(QError::NonDivisible(_))));
    }

    #[test]
    fn trinomial_examples() {
        assert_eq!(q_trinomial_t(0, 5, 0, 1), QSeries::one());
        assert_eq!(q_trinomial_t(0, 5, 1, 1), QSeries::zero());
        // j=0 term only: [1,0][1,0] = 1
        assert_eq!(q_trinomial_t(1, 0, 0, 1), QSeries::one());
        assert_eq!(q_trinomial_t(3, 0, 4, 1), QSeries::zero());
    }

    #[test]
    fn warnaar_examples() {
        assert_eq!(warnaar_s(0, 0, 0, 0, 1), QSeries::one());
        assert_eq!(warnaar_s(2, 1, 4, 1, 1), QSeries::zero());
    }
}
