//! The finite Capparelli-type identities: trinomial and binomial forms, the
//! doubly bounded seed, the S-hierarchy, the new polynomial identities with
//! their rewrites and transformations, and the dual identities.

use super::terms::{f, jacobi_kernel, kernel_sum, one_plus, qpow, ratio, sign, tails};
use super::{no_check, param, Axis, IdentityCase, Mode, ParamSpec};
use crate::bounds::for_each_composition_bounded;
use crate::error::Result;
use crate::qcombinat::{jacobi3, q_binomial, q_trinomial_t, warnaar_s};
use crate::series::QSeries;

const L: &[ParamSpec] = &[param("L", 0, Axis::L)];
const M: &[ParamSpec] = &[param("M", 0, Axis::M)];
const LM: &[ParamSpec] = &[param("L", 0, Axis::L), param("M", 0, Axis::M)];
const NU_LM: &[ParamSpec] = &[param("nu", 1, Axis::Nu), param("L", 0, Axis::L), param("M", 0, Axis::M)];
const KL: &[ParamSpec] = &[param("k", 1, Axis::K), param("L", 0, Axis::L)];

fn exact(
    id: &'static str,
    summary: &'static str,
    params: &'static [ParamSpec],
    lhs: super::Evaluator,
    rhs: super::Evaluator,
) -> IdentityCase {
    IdentityCase { id, summary, mode: Mode::ExactPolynomial, params, lhs, rhs, check: no_check }
}

pub(super) fn cases() -> Vec<IdentityCase> {
    vec![
        exact(
            "fin_cap_roundtri_1",
            "binomial double sum = trinomial theta sum",
            L,
            |p| roundtri_lhs_1(p.get("L")?),
            |p| roundtri_rhs_1(p.get("L")?),
        ),
        exact(
            "fin_cap_roundtri_2",
            "companion trinomial identity",
            L,
            |p| roundtri_lhs_2(p.get("L")?),
            |p| roundtri_rhs_2(p.get("L")?),
        ),
        exact(
            "fin_cap_binomial_1",
            "finite first Capparelli identity in base q^3",
            M,
            |p| fin_cap1_binomial_lhs(p.get("M")?),
            |p| fin_cap1_binomial_rhs(p.get("M")?),
        ),
        exact(
            "fin_cap_binomial_2",
            "finite second Capparelli identity in base q^3",
            M,
            |p| fin_cap2_binomial_lhs(p.get("M")?),
            |p| fin_cap2_binomial_rhs(p.get("M")?),
        ),
        exact(
            "fin_cap_binomial_3",
            "finite sum of the two Capparelli products",
            M,
            |p| sum_of_capparellis_lhs(p.get("M")?),
            |p| sum_of_capparellis_rhs(p.get("M")?),
        ),
        exact(
            "seed_identity",
            "doubly bounded seed identity",
            LM,
            |p| seed_lhs(p.get("L")?, p.get("M")?),
            |p| seed_rhs(p.get("L")?, p.get("M")?),
        ),
        exact(
            "s_hierarchy",
            "S-function hierarchy",
            NU_LM,
            |p| s_hierarchy_lhs(p.get("nu")?, p.get("L")?, p.get("M")?),
            |p| s_hierarchy_rhs(p.get("nu")?, p.get("L")?, p.get("M")?),
        ),
        exact(
            "new_fin_cap_1",
            "new finite first Capparelli identity",
            L,
            |p| fin_cap1_lhs(p.get("L")?),
            |p| fin_cap1_rhs(p.get("L")?),
        ),
        exact(
            "new_fin_cap_2",
            "new finite second Capparelli identity",
            L,
            |p| fin_cap2_lhs(p.get("L")?),
            |p| fin_cap2_rhs(p.get("L")?),
        ),
        exact(
            "rhs_rewrite_1_split",
            "first Jacobi sum vs its 3k split",
            L,
            |p| fin_cap1_rhs(p.get("L")?),
            |p| cap1_split(p.get("L")?),
        ),
        exact(
            "rhs_rewrite_1_rational",
            "first Jacobi sum vs its rational form",
            L,
            |p| fin_cap1_rhs(p.get("L")?),
            |p| cap1_rational(p.get("L")?),
        ),
        exact(
            "rhs_rewrite_2_split",
            "second Jacobi sum vs its 3k split",
            L,
            |p| fin_cap2_rhs(p.get("L")?),
            |p| cap2_split(p.get("L")?),
        ),
        exact(
            "rhs_rewrite_2_rational",
            "second Jacobi sum vs its rational form",
            L,
            |p| fin_cap2_rhs(p.get("L")?),
            |p| cap2_rational(p.get("L")?),
        ),
        exact(
            "fin_cap2_rhs_alt",
            "second Jacobi sum with the [2L+1, L-j] kernel",
            L,
            |p| fin_cap2_rhs(p.get("L")?),
            |p| fin_cap2_rhs_odd(p.get("L")?),
        ),
        exact(
            "jacobi_antisymmetry",
            "odd Jacobi-weighted kernel sum vanishes",
            L,
            |p| jacobi_odd_sum(p.get("L")?),
            |_| Ok(QSeries::zero()),
        ),
        exact(
            "k_transform",
            "k-transformation of the Jacobi kernel sum",
            KL,
            |p| k_transform_lhs(p.get("k")?, p.get("L")?),
            |p| k_transform_rhs(p.get("k")?, p.get("L")?),
        ),
        exact(
            "fin_cap1_qbin_alt",
            "q^L times the first identity, shifted kernel",
            L,
            |p| fin_cap1_qbin_alt_lhs(p.get("L")?),
            |p| fin_cap1_qbin_alt_rhs(p.get("L")?),
        ),
        exact(
            "dual_identity_1",
            "dual of the first identity",
            L,
            |p| dual_lhs_1(p.get("L")?),
            |p| dual_rhs_1(p.get("L")?),
        ),
        exact(
            "dual_identity_2",
            "dual of the second identity",
            L,
            |p| dual_lhs_2(p.get("L")?),
            |p| dual_rhs_2(p.get("L")?),
        ),
        exact(
            "dual_construction_lhs_1",
            "q^{L^2} lhs(1/q) reproduces the dual sum",
            L,
            |p| dual_lhs_1(p.get("L")?),
            |p| dualize(fin_cap1_lhs(p.get("L")?)?, p.get("L")?, 0),
        ),
        exact(
            "dual_construction_rhs_1",
            "q^{L^2} rhs(1/q) reproduces the dual kernel sum",
            L,
            |p| dual_rhs_1(p.get("L")?),
            |p| dualize(fin_cap1_rhs(p.get("L")?)?, p.get("L")?, 0),
        ),
        exact(
            "dual_construction_lhs_2",
            "q^{L^2+L} lhs(1/q) reproduces the dual sums",
            L,
            |p| dual_lhs_2(p.get("L")?),
            |p| dualize(fin_cap2_lhs(p.get("L")?)?, p.get("L")?, 1),
        ),
        exact(
            "dual_construction_rhs_2",
            "q^{L^2+L} rhs(1/q) reproduces the dual kernel sum",
            L,
            |p| dual_rhs_2(p.get("L")?),
            |p| dualize(fin_cap2_rhs(p.get("L")?)?, p.get("L")?, 1),
        ),
    ]
}

fn quad(m: i64, n: i64) -> i64 {
    2 * m * m + 6 * m * n + 6 * n * n
}

fn roundtri_lhs_1(l: i64) -> Result<QSeries> {
    let mut acc = QSeries::zero();
    for n in 0..=l / 2 {
        for m in 0..=l - 2 * n {
            let r = l - 2 * n - m;
            let t = &q_binomial(3 * r, m, 1) * &q_binomial(2 * r + n, n, 3);
            acc += t.shift(quad(m, n));
        }
    }
    Ok(acc)
}

pub(super) fn roundtri_rhs_1(l: i64) -> Result<QSeries> {
    Ok((-l - 1..=l + 1).map(|j| q_trinomial_t(l, 2 * j, 2 * j, 3).shift(3 * j * j + j)).sum())
}

fn roundtri_lhs_2(l: i64) -> Result<QSeries> {
    let mut acc = QSeries::zero();
    for n in 0..=l / 2 + 1 {
        for m in 0..=3 * l + 2 {
            let r = l - 2 * n - m;
            let a = &q_binomial(3 * r + 2, m, 1) * &q_binomial(2 * r + n + 1, n, 3);
            acc += a.shift(quad(m, n) + m + 3 * n);
            if r >= 0 {
                let b = &q_binomial(3 * r, m, 1) * &q_binomial(2 * r + n, n, 3);
                acc += b.shift(quad(m, n) + 3 * m + 6 * n + 1);
            }
        }
    }
    Ok(acc)
}

fn roundtri_rhs_2(l: i64) -> Result<QSeries> {
    Ok((-l - 2..=l + 1).map(|j| q_trinomial_t(l + 1, 2 * j + 1, 2 * j + 1, 3).shift(3 * j * j + 2 * j)).sum())
}

/// `(q^3;q^3)_M / ((q;q)_m (q^3;q^3)_n (q^3;q^3)_{M-2n-m})`.
fn binomial_summand(big_m: i64, m: i64, n: i64) -> Result<QSeries> {
    ratio(&[f(big_m, 3)], &[f(m, 1), f(n, 3), f(big_m - 2 * n - m, 3)])
}

fn binomial_double_sum<E: Fn(i64, i64) -> i64>(big_m: i64, e: E) -> Result<QSeries> {
    let mut acc = QSeries::zero();
    for n in 0..=big_m / 2 {
        for m in 0..=big_m - 2 * n {
            acc += binomial_summand(big_m, m, n)?.shift(e(m, n));
        }
    }
    Ok(acc)
}

pub fn fin_cap1_binomial_lhs(big_m: i64) -> Result<QSeries> {
    binomial_double_sum(big_m, quad)
}

pub(super) fn fin_cap1_binomial_rhs(big_m: i64) -> Result<QSeries> {
    Ok(kernel_sum(-big_m, big_m, 2 * big_m, big_m, 3, |j| qpow(3 * j * j + j)))
}

pub fn fin_cap2_binomial_lhs(big_m: i64) -> Result<QSeries> {
    let a = binomial_double_sum(big_m, |m, n| quad(m, n) + m + 3 * n)?;
    let b = binomial_double_sum(big_m, |m, n| quad(m, n) + 3 * m + 6 * n)?;
    Ok(a + b.shift(1))
}

fn fin_cap2_binomial_rhs(big_m: i64) -> Result<QSeries> {
    Ok(kernel_sum(-big_m - 1, big_m, 2 * big_m + 1, big_m, 3, |j| qpow(3 * j * j + 2 * j)))
}

pub fn sum_of_capparellis_lhs(big_m: i64) -> Result<QSeries> {
    let s = binomial_double_sum(big_m, |m, n| quad(m, n) - 2 * m - 3 * n)?;
    Ok(&s * &one_plus(3 * big_m))
}

fn sum_of_capparellis_rhs(big_m: i64) -> Result<QSeries> {
    Ok(kernel_sum(-big_m, big_m, 2 * big_m, big_m, 3, |j| &qpow(3 * j * j - 2 * j) * &one_plus(3 * j)))
}

pub(super) fn seed_lhs(l: i64, big_m: i64) -> Result<QSeries> {
    Ok(seed_lhs_upto(l, big_m, None))
}

/// The seed sum, keeping only terms below `q^{n+1}` when `n` is given.
pub(super) fn seed_lhs_upto(l: i64, big_m: i64, n: Option<i64>) -> QSeries {
    let mut acc = match n {
        Some(n) => QSeries::zero().truncate(n),
        None => QSeries::zero(),
    };
    let cut = |x: QSeries, ex: i64| match n {
        Some(n) => x.truncate(n - ex),
        None => x,
    };
    for i in 0..=l {
        let lead = 3 * i * i / 2;
        if n.is_some_and(|n| lead > n) {
            break;
        }
        let outer = cut(q_binomial(l + big_m - i, l, 3), lead);
        for m in (0..=3 * (l - i)).filter(|m| (i + m) % 2 == 0) {
            let ex = (m * m + 3 * i * i) / 2;
            if n.is_some_and(|n| ex > n) {
                break;
            }
            let t =
                cut(q_binomial(3 * (l - i), m, 1), ex) * cut(q_binomial(2 * (l - i) + (i - m) / 2, 2 * (l - i), 3), ex);
            if t.is_zero() {
                continue;
            }
            acc += (&outer * &t).shift(ex);
        }
    }
    acc
}

fn seed_rhs(l: i64, big_m: i64) -> Result<QSeries> {
    Ok((-big_m..=big_m).map(|j| warnaar_s(l, big_m, 2 * j, j, 3).shift(3 * j * j + j)).sum())
}

fn s_hierarchy_lhs(nu: i64, l: i64, big_m: i64) -> Result<QSeries> {
    let mut acc = QSeries::zero();
    for_each_composition_bounded(nu as usize, l, |ns| {
        let tl = tails(ns);
        let sn: i64 = tl.iter().sum();
        let sn2: i64 = tl.iter().map(|x| x * x).sum();
        let last = ns[ns.len() - 1];
        for i in 0..=l - tl[0] {
            let mut outer = &q_binomial(l + big_m - i, l, 3) * &q_binomial(l - tl[0], i, 3);
            let mut partial = 0;
            for j in 0..ns.len() - 1 {
                partial += tl[j];
                outer = &outer * &q_binomial(i - partial + ns[j], ns[j], 3);
            }
            if outer.is_zero() {
                continue;
            }
            for m in 0..=3 * last {
                let x = i - m - sn;
                if x < 0 {
                    break;
                }
                if x % 2 != 0 {
                    continue;
                }
                let t = &q_binomial(3 * last, m, 1) * &q_binomial(2 * last + x / 2, 2 * last, 3);
                acc += (&outer * &t).shift((m * m + 3 * (i * i + sn2)) / 2);
            }
        }
    });
    Ok(acc)
}

fn s_hierarchy_rhs(nu: i64, l: i64, big_m: i64) -> Result<QSeries> {
    let c = 3 * (nu + 2) * (nu + 1) / 2;
    Ok((-big_m..=big_m).map(|j| warnaar_s(l, big_m, (nu + 2) * j, (nu + 1) * j, 3).shift(c * j * j + j)).sum())
}

/// `(q;q)_L / ((q;q)_{L-3n-2m-d} (q;q)_m (q^3;q^3)_n)`.
fn fin_summand(l: i64, m: i64, n: i64, d: i64) -> Result<QSeries> {
    ratio(&[f(l, 1)], &[f(l - 3 * n - 2 * m - d, 1), f(m, 1), f(n, 3)])
}

fn fin_double_sum<E: Fn(i64, i64) -> i64>(l: i64, d: i64, e: E) -> Result<QSeries> {
    let mut acc = QSeries::zero();
    for n in 0..=(l - d) / 3 {
        for m in 0..=(l - d - 3 * n) / 2 {
            acc += fin_summand(l, m, n, d)?.shift(e(m, n));
        }
    }
    Ok(acc)
}

/// `a_L` as the double sum.
pub fn fin_cap1_lhs(l: i64) -> Result<QSeries> {
    fin_double_sum(l, 0, quad)
}

/// `a_L` as the Jacobi-weighted kernel sum.
pub fn fin_cap1_rhs(l: i64) -> Result<QSeries> {
    Ok(jacobi_kernel(l, 2 * l, -l, l, |j| j * j))
}

/// `S_{1,L}`, the first double sum of the second identity.
pub fn fin_cap2_s1(l: i64) -> Result<QSeries> {
    fin_double_sum(l, 0, |m, n| quad(m, n) + m + 3 * n)
}

/// `S_{2,L}`, the second double sum (prefactor `q` included).
pub fn fin_cap2_s2(l: i64) -> Result<QSeries> {
    if l < 1 {
        return Ok(QSeries::zero());
    }
    fin_double_sum(l, 1, |m, n| quad(m, n) + 3 * m + 6 * n + 1)
}

/// `c_L = S_{1,L} + S_{2,L}`.
pub fn fin_cap2_lhs(l: i64) -> Result<QSeries> {
    Ok(fin_cap2_s1(l)? + fin_cap2_s2(l)?)
}

/// `b_L` as the Jacobi-weighted kernel sum.
pub fn fin_cap2_rhs(l: i64) -> Result<QSeries> {
    Ok(jacobi_kernel(l, 2 * l, -l, l, |j| j * (j + 1)))
}

fn split<A: Fn(i64) -> i64, B: Fn(i64) -> i64>(l: i64, e0: A, e1: B) -> QSeries {
    let r = l / 3 + 1;
    let mut acc = QSeries::zero();
    for k in -r..=r {
        acc += q_binomial(2 * l, l + 3 * k, 1).shift(e0(k));
        acc -= q_binomial(2 * l, l + 3 * k + 1, 1).shift(e1(k));
    }
    acc
}

fn cap1_split(l: i64) -> Result<QSeries> {
    Ok(split(l, |k| 9 * k * k, |k| (3 * k + 1) * (3 * k + 1)))
}

fn cap2_split(l: i64) -> Result<QSeries> {
    Ok(split(l, |k| 3 * k * (3 * k + 1), |k| (3 * k + 1) * (3 * k + 2)))
}

fn delta_term(l: i64, e: i64) -> QSeries {
    if (l - 2).rem_euclid(3) == 0 {
        qpow(e)
    } else {
        QSeries::zero()
    }
}

/// `Σ_j q^{p(j)} c_j(q) [2L, L+3j] / (1 - q^{L+3j+1})`, using
/// `[2L, L+3j] / (1 - q^{L+3j+1}) = [2L+1, L+3j+1] / (1 - q^{2L+1})`.
fn rational_sum<P: Fn(i64) -> i64, C: Fn(i64) -> QSeries>(l: i64, p: P, c: C) -> Result<QSeries> {
    let r = l / 3;
    let mut num = QSeries::zero();
    for j in -r..=r {
        num += (&c(j) * &q_binomial(2 * l + 1, l + 3 * j + 1, 1)).shift(p(j));
    }
    num.div_exact(&QSeries::one().mul_binomial(2 * l + 1, -1))
}

fn cap1_rational(l: i64) -> Result<QSeries> {
    let s = rational_sum(l, |j| 9 * j * j, |j| QSeries::one().mul_binomial(6 * j + 1, -1))?;
    Ok(s - delta_term(l, l * l))
}

fn cap2_rational_numerator(l: i64, j: i64) -> QSeries {
    // 1 - q^{6j+2} - (1-q) q^{L+3j+1}
    QSeries::one() - qpow(6 * j + 2) - QSeries::one().mul_binomial(1, -1).shift(l + 3 * j + 1)
}

fn cap2_rational(l: i64) -> Result<QSeries> {
    let s = rational_sum(l, |j| 3 * j * (3 * j + 1), |j| cap2_rational_numerator(l, j))?;
    Ok(s - delta_term(l, l * (l - 1)))
}

/// The rational form of the second Jacobi sum with the prefactor
/// `q^{3j(3j-1)}` exactly as printed; it disagrees from `L = 3` on.
pub fn cap2_rational_printed(l: i64) -> Result<QSeries> {
    let s = rational_sum(l, |j| 3 * j * (3 * j - 1), |j| cap2_rational_numerator(l, j))?;
    Ok(s - delta_term(l, l * (l - 1)))
}

fn fin_cap2_rhs_odd(l: i64) -> Result<QSeries> {
    Ok(jacobi_kernel(l, 2 * l + 1, -l - 1, l + 1, |j| j * (j + 1)))
}

fn jacobi_odd_sum(l: i64) -> Result<QSeries> {
    Ok(kernel_sum(-l, l, 2 * l, l, 1, |j| QSeries::monomial(j * j, jacobi3(j))))
}

fn k_transform_lhs(k: i64, l: i64) -> Result<QSeries> {
    Ok(jacobi_kernel(l, 2 * l, -l, l, |j| k * j * (j - 1)))
}

fn k_transform_rhs(k: i64, l: i64) -> Result<QSeries> {
    Ok(jacobi_kernel(l, 2 * l, -l, l, |j| k * j * j - (k - 1) * j).shift(l))
}

fn fin_cap1_qbin_alt_lhs(l: i64) -> Result<QSeries> {
    fin_double_sum(l, 0, |m, n| l + quad(m, n))
}

fn fin_cap1_qbin_alt_rhs(l: i64) -> Result<QSeries> {
    Ok(jacobi_kernel(l, 2 * l, -l, l, |j| j * (j - 1)))
}

/// `(q;q)_L / ((q;q)_m (q;q)_n (q^3;q^3)_{(L-n-2m-d)/3})` on the residue class.
fn dual_double_sum<E: Fn(i64, i64) -> i64>(l: i64, d: i64, e: E) -> Result<QSeries> {
    let mut acc = QSeries::zero();
    for m in 0..=(l - d) / 2 {
        for n in 0..=l - d - 2 * m {
            let x = l - d - n - 2 * m;
            if x % 3 != 0 {
                continue;
            }
            let t = ratio(&[f(l, 1)], &[f(m, 1), f(n, 1), f(x / 3, 3)])?;
            acc += t.shift(e(m, n)).scale(sign(m));
        }
    }
    Ok(acc)
}

pub fn dual_lhs_1(l: i64) -> Result<QSeries> {
    dual_double_sum(l, 0, |m, n| m * (m - 1) / 2 + l * n)
}

fn dual_rhs_1(l: i64) -> Result<QSeries> {
    Ok(jacobi_kernel(l, 2 * l, -l, l, |_| 0))
}

pub fn dual_lhs_2(l: i64) -> Result<QSeries> {
    let a = dual_double_sum(l, 0, |m, n| m * (m + 1) / 2 + (l + 1) * n)?;
    if l < 1 {
        return Ok(a);
    }
    let b = dual_double_sum(l, 1, |m, n| m * (m + 1) / 2 + (l + 1) * n)?;
    Ok(a - b)
}

fn dual_rhs_2(l: i64) -> Result<QSeries> {
    Ok(jacobi_kernel(l, 2 * l, -l, l, |j| l - j))
}

/// `q^{L^2 + extra*L} · x(1/q)`.
fn dualize(x: QSeries, l: i64, extra: i64) -> Result<QSeries> {
    Ok(x.invert_q()?.shift(l * l + extra * l))
}
