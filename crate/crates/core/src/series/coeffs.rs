//! Dense coefficient storage with a machine-word fast path.
//!
//! A vector is kept as `Small` whenever every entry fits in an `i64`, and as
//! `Big` otherwise. Kernels try the word-sized path first and fall back to
//! arbitrary precision when an intermediate could overflow.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Coeffs {
    Small(Vec<i64>),
    Big(Vec<BigInt>),
}

impl Default for Coeffs {
    fn default() -> Self {
        Coeffs::Small(Vec::new())
    }
}

impl Coeffs {
    pub fn len(&self) -> usize {
        match self {
            Coeffs::Small(v) => v.len(),
            Coeffs::Big(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, i: usize) -> BigInt {
        match self {
            Coeffs::Small(v) => BigInt::from(v[i]),
            Coeffs::Big(v) => v[i].clone(),
        }
    }

    pub fn get_i64(&self, i: usize) -> Option<i64> {
        match self {
            Coeffs::Small(v) => Some(v[i]),
            Coeffs::Big(v) => v[i].to_i64(),
        }
    }

    pub fn is_zero_at(&self, i: usize) -> bool {
        match self {
            Coeffs::Small(v) => v[i] == 0,
            Coeffs::Big(v) => v[i].is_zero(),
        }
    }

    pub fn to_big(&self) -> Vec<BigInt> {
        match self {
            Coeffs::Small(v) => v.iter().map(|&c| BigInt::from(c)).collect(),
            Coeffs::Big(v) => v.clone(),
        }
    }

    /// Keep entries `lo..hi`.
    pub fn slice(&self, lo: usize, hi: usize) -> Coeffs {
        match self {
            Coeffs::Small(v) => Coeffs::Small(v[lo..hi].to_vec()),
            Coeffs::Big(v) => Coeffs::Big(v[lo..hi].to_vec()),
        }
    }

    pub fn reversed(&self) -> Coeffs {
        match self {
            Coeffs::Small(v) => Coeffs::Small(v.iter().rev().copied().collect()),
            Coeffs::Big(v) => Coeffs::Big(v.iter().rev().cloned().collect()),
        }
    }

    pub fn negated(&self) -> Coeffs {
        match self {
            Coeffs::Small(v) if v.iter().all(|&c| c != i64::MIN) => Coeffs::Small(v.iter().map(|c| -c).collect()),
            _ => Coeffs::Big(self.to_big().into_iter().map(|c| -c).collect()),
        }
    }

    pub fn scaled(&self, k: &BigInt) -> Coeffs {
        if let (Coeffs::Small(v), Some(k)) = (self, k.to_i64()) {
            let out: Option<Vec<i64>> = v.iter().map(|c| c.checked_mul(k)).collect();
            if let Some(out) = out {
                return Coeffs::Small(out);
            }
        }
        Coeffs::Big(self.to_big().into_iter().map(|c| c * k).collect())
    }

    /// Spread entries so that index `i` moves to `i * k`.
    pub fn spread(&self, k: usize) -> Coeffs {
        let n = if self.is_empty() { 0 } else { (self.len() - 1) * k + 1 };
        match self {
            Coeffs::Small(v) => {
                let mut out = vec![0i64; n];
                for (i, &c) in v.iter().enumerate() {
                    out[i * k] = c;
                }
                Coeffs::Small(out)
            }
            Coeffs::Big(v) => {
                let mut out = vec![BigInt::zero(); n];
                for (i, c) in v.iter().enumerate() {
                    out[i * k] = c.clone();
                }
                Coeffs::Big(out)
            }
        }
    }

    /// Index range `(first, last+1)` of the non-zero entries, if any.
    pub fn support(&self) -> Option<(usize, usize)> {
        let n = self.len();
        let first = (0..n).find(|&i| !self.is_zero_at(i))?;
        let last = (0..n).rev().find(|&i| !self.is_zero_at(i))?;
        Some((first, last + 1))
    }

    /// Demote to `Small` when every entry fits.
    pub fn compact(self) -> Coeffs {
        match self {
            Coeffs::Big(v) => {
                let small: Option<Vec<i64>> = v.iter().map(|c| c.to_i64()).collect();
                match small {
                    Some(s) => Coeffs::Small(s),
                    None => Coeffs::Big(v),
                }
            }
            s => s,
        }
    }

    fn max_abs_small(v: &[i64]) -> u128 {
        v.iter().map(|c| c.unsigned_abs() as u128).max().unwrap_or(0)
    }
}

/// `out[i] = a[i - sa] + sign * b[i - sb]` over a window of length `n`.
pub(crate) fn combine(a: &Coeffs, sa: usize, b: &Coeffs, sb: usize, n: usize, negate_b: bool) -> Coeffs {
    if let (Coeffs::Small(x), Coeffs::Small(y)) = (a, b) {
        let mut out = vec![0i64; n];
        let mut ok = true;
        out[sa..sa + x.len()].copy_from_slice(x);
        for (i, &c) in y.iter().enumerate() {
            let slot = &mut out[sb + i];
            let r = if negate_b { slot.checked_sub(c) } else { slot.checked_add(c) };
            match r {
                Some(r) => *slot = r,
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            return Coeffs::Small(out);
        }
    }
    let mut out = vec![BigInt::zero(); n];
    for (i, c) in a.to_big().into_iter().enumerate() {
        out[sa + i] = c;
    }
    for (i, c) in b.to_big().into_iter().enumerate() {
        if negate_b {
            out[sb + i] -= c;
        } else {
            out[sb + i] += c;
        }
    }
    Coeffs::Big(out)
}

/// Convolution of `a` and `b`, keeping only the first `len` entries.
pub(crate) fn convolve(a: &Coeffs, b: &Coeffs, len: usize) -> Coeffs {
    if let (Coeffs::Small(x), Coeffs::Small(y)) = (a, b) {
        let terms = x.len().min(y.len()) as u128;
        let bound = Coeffs::max_abs_small(x) * Coeffs::max_abs_small(y) * terms;
        if bound <= i64::MAX as u128 {
            return Coeffs::Small(conv_words::<i64>(x, y, len, |c| c));
        }
        if bound <= i128::MAX as u128 {
            let wide = conv_words::<i128>(x, y, len, |c| c as i128);
            let narrow: Option<Vec<i64>> = wide.iter().map(|&c| i64::try_from(c).ok()).collect();
            return match narrow {
                Some(v) => Coeffs::Small(v),
                None => Coeffs::Big(wide.into_iter().map(BigInt::from).collect()),
            };
        }
    }
    let x = a.to_big();
    let y = b.to_big();
    let mut out = vec![BigInt::zero(); len];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() || i >= len {
            continue;
        }
        for (j, yj) in y.iter().take(len - i).enumerate() {
            if !yj.is_zero() {
                out[i + j] += xi * yj;
            }
        }
    }
    Coeffs::Big(out).compact()
}

fn conv_words<T>(x: &[i64], y: &[i64], len: usize, widen: impl Fn(i64) -> T) -> Vec<T>
where
    T: Copy + Default + std::ops::Mul<Output = T> + std::ops::AddAssign,
{
    let mut out = vec![T::default(); len];
    let yw: Vec<T> = y.iter().map(|&c| widen(c)).collect();
    for (i, &xi) in x.iter().enumerate() {
        if xi == 0 || i >= len {
            continue;
        }
        let xi = widen(xi);
        let m = yw.len().min(len - i);
        for (slot, &yj) in out[i..i + m].iter_mut().zip(&yw[..m]) {
            *slot += xi * yj;
        }
    }
    out
}

/// Solve `p = (1 - q^t) * r` for `r` by the running sum `r[k] = p[k] + r[k - t]`.
///
/// Returns the first `len` entries of `r`.
pub(crate) fn stride_prefix_sum(p: &Coeffs, t: usize, len: usize) -> Coeffs {
    if let Coeffs::Small(v) = p {
        let mut out = vec![0i64; len];
        let mut ok = true;
        for k in 0..len {
            let base = if k < v.len() { v[k] } else { 0 };
            let prev = if k >= t { out[k - t] } else { 0 };
            match base.checked_add(prev) {
                Some(s) => out[k] = s,
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            return Coeffs::Small(out);
        }
    }
    let v = p.to_big();
    let mut out: Vec<BigInt> = Vec::with_capacity(len);
    for k in 0..len {
        let mut s = if k < v.len() { v[k].clone() } else { BigInt::zero() };
        if k >= t {
            s += &out[k - t];
        }
        out.push(s);
    }
    Coeffs::Big(out).compact()
}

pub(crate) fn abs_max(c: &Coeffs) -> BigInt {
    match c {
        Coeffs::Small(v) => BigInt::from(Coeffs::max_abs_small(v)),
        Coeffs::Big(v) => v.iter().map(|c| c.abs()).max().unwrap_or_default(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convolution_promotes_on_overflow() {
        let a = Coeffs::Small(vec![i64::MAX, i64::MAX]);
        let b = Coeffs::Small(vec![2, 3]);
        let c = convolve(&a, &b, 3);
        let m = BigInt::from(i64::MAX);
        assert_eq!(c.to_big(), vec![&m * 2, &m * 5, &m * 3]);
        assert!(matches!(c, Coeffs::Big(_)));
    }

    #[test]
    fn wide_accumulator_narrows_back() {
        let a = Coeffs::Small(vec![1 << 40, -(1 << 40)]);
        let b = Coeffs::Small(vec![1 << 20, 1 << 20]);
        let c = convolve(&a, &b, 3);
        assert_eq!(c, Coeffs::Small(vec![1 << 60, 0, -(1 << 60)]));
    }

    #[test]
    fn prefix_sum_inverts_one_minus_power() {
        // (1 - q^2)(1 + q^2 + q^4) = 1 - q^6
        let p = Coeffs::Small(vec![1, 0, 0, 0, 0, 0, -1]);
        assert_eq!(stride_prefix_sum(&p, 2, 5), Coeffs::Small(vec![1, 0, 1, 0, 1]));
    }

    #[test]
    fn compact_demotes() {
        let c = Coeffs::Big(vec![BigInt::from(3), BigInt::from(-4)]).compact();
        assert_eq!(c, Coeffs::Small(vec![3, -4]));
    }
}
