//! Power-series identities: the analytic Capparelli identities, limits of
//! the finite hierarchies, reductions of the doubly bounded seed and the
//! dual limits. Every side here is compared up to a truncation order `N`.

use super::capparelli::{fin_cap1_binomial_rhs, roundtri_rhs_1, seed_lhs_upto};
use super::hierarchy::{hierarchy_limit_lhs, Family};
use super::terms::{f, for_each_tail_tuple, series_term, sign, tails};
use super::{param, param_default, Axis, IdentityCase, Mode, ParamSpec, Params};
use crate::error::{QError, Result};
use crate::qcombinat::{infinite_product, inv_qfactorial, jacobi3, q_binomial, qfactorial, Length, PochSpec};
use crate::series::QSeries;

const N: ParamSpec = param_default("N", 0, 30, Axis::Trunc);

/// `(q^s; q^k)_∞`.
fn p(s: i64, k: i64) -> PochSpec {
    PochSpec::infinite(s, k as u32)
}

/// `(-q^s; q^k)_∞`.
fn m(s: i64, k: i64) -> PochSpec {
    PochSpec::infinite(s, k as u32).negate()
}

/// `1 / (q^k; q^k)_∞` up to `q^n`.
fn inv_inf(k: u32, n: i64) -> QSeries {
    inv_qfactorial(Length::Infinite, k, n)
}

fn product_over(factors: &[PochSpec], k: u32, n: i64) -> Result<QSeries> {
    Ok(&infinite_product(factors, n)? * &inv_inf(k, n))
}

fn quad(m: i64, n: i64) -> i64 {
    2 * m * m + 6 * m * n + 6 * n * n
}

/// `Σ q^{e(m,n)} / ((q;q)_m (q^3;q^3)_n)` up to `q^n`, for exponents at least `quad(m, n)`.
fn analytic_sum<E: Fn(i64, i64) -> i64>(n: i64, e: E) -> QSeries {
    let mut acc = QSeries::zero().truncate(n);
    for b in 0.. {
        if quad(0, b) > n {
            break;
        }
        for a in 0.. {
            if quad(a, b) > n {
                break;
            }
            acc += series_term(e(a, b), &QSeries::one(), &[f(a, 1), f(b, 3)], n);
        }
    }
    acc
}

pub(super) fn cap_analytic_lhs(which: i64, n: i64) -> Result<QSeries> {
    Ok(match which {
        1 => analytic_sum(n, quad),
        _ => analytic_sum(n, |a, b| quad(a, b) + a + 3 * b) + analytic_sum(n, |a, b| quad(a, b) + 3 * a + 6 * b + 1),
    })
}

pub(super) fn cap_analytic_rhs(which: i64, n: i64) -> Result<QSeries> {
    match which {
        1 => infinite_product(&[m(2, 6), m(4, 6), m(3, 3)], n),
        _ => infinite_product(&[m(1, 6), m(5, 6), m(3, 3)], n),
    }
}

/// The limit `L, M -> ∞` of the S-hierarchy.
pub fn s_hierarchy_limit_lhs(nu: i64, n: i64) -> Result<QSeries> {
    let mut acc = QSeries::zero().truncate(n);
    for_each_tail_tuple(nu as usize, 3, 2 * n, |ns| {
        let tl = tails(ns);
        let sn: i64 = tl.iter().sum();
        let sn2: i64 = tl.iter().map(|x| x * x).sum();
        let last = ns[ns.len() - 1];
        let mut i = 0;
        while 3 * (i * i + sn2) <= 2 * n {
            let mut outer = QSeries::one();
            let mut partial = 0;
            for j in 0..ns.len() - 1 {
                partial += tl[j];
                outer = &outer * &q_binomial(i - partial + ns[j], ns[j], 3);
            }
            if !outer.is_zero() {
                for mm in 0..=3 * last {
                    let x = i - mm - sn;
                    if x < 0 {
                        break;
                    }
                    if x % 2 != 0 {
                        continue;
                    }
                    let ex = (mm * mm + 3 * (i * i + sn2)) / 2;
                    if ex > n {
                        break;
                    }
                    let core = &(&outer * &q_binomial(3 * last, mm, 1)) * &q_binomial(2 * last + x / 2, 2 * last, 3);
                    acc += series_term(ex, &core, &[f(i, 3)], n);
                }
            }
            i += 1;
        }
    });
    Ok(acc)
}

pub(super) fn s_hierarchy_limit_rhs(nu: i64, n: i64) -> Result<QSeries> {
    let c = 3 * (nu + 2) * (nu + 1) / 2;
    product_over(&[p(2 * c, 2 * c), m(c + 1, 2 * c), m(c - 1, 2 * c)], 3, n)
}

/// The product side of the limit of `fam` at depth `f`.
pub fn hierarchy_limit_rhs(fam: Family, f_: i64, n: i64) -> Result<QSeries> {
    let c = f_ + 1;
    match fam {
        Family::Cap1Binomial => product_over(&[p(6 * c, 6 * c), m(3 * f_ + 2, 6 * c), m(3 * f_ + 4, 6 * c)], 3, n),
        Family::Cap2Binomial => product_over(&[p(6 * c, 6 * c), m(1, 6 * c), m(6 * f_ + 5, 6 * c)], 3, n),
        Family::SumOfCapparellis => {
            let a = infinite_product(&[m(3 * f_ + 1, 6 * c), m(3 * f_ + 5, 6 * c)], n)?;
            let b = infinite_product(&[m(3 * f_ + 2, 6 * c), m(3 * f_ + 4, 6 * c)], n)?;
            Ok(&(a + b) * &product_over(&[p(6 * c, 6 * c)], 3, n)?)
        }
        Family::Cap1 => product_over(&[p(c, c), m(3 * c, 3 * c), m(2 * c, 6 * c), m(4 * c, 6 * c)], 1, n),
        Family::Cap2 => product_over(
            &[p(f_ + 2, 6 * c), p(5 * f_ + 4, 6 * c), p(6 * c, 6 * c), p(4 * f_ + 2, 12 * c), p(8 * f_ + 10, 12 * c)],
            1,
            n,
        ),
        Family::Cap2Analogue => product_over(&[p(2 * c, 2 * c), p(2 * c, 12 * c), p(10 * c, 12 * c)], 1, n),
    }
}

/// The product side of the twisted first hierarchy.
pub fn twisted_limit_rhs(f_: i64, s: i64, n: i64) -> Result<QSeries> {
    let c = f_ + 1;
    product_over(
        &[p(c - s, 6 * c), p(5 * c + s, 6 * c), p(6 * c, 6 * c), p(4 * c + 2 * s, 12 * c), p(8 * c - 2 * s, 12 * c)],
        1,
        n,
    )
}

/// `Σ_j (j+1 / 3) q^{(f+1) j^2} / (q;q)_∞`.
fn cap1_theta_over_euler(f_: i64, n: i64) -> QSeries {
    let c = f_ + 1;
    let mut theta = QSeries::zero().truncate(n);
    let mut j = 0;
    while c * j * j <= n {
        theta += QSeries::monomial(c * j * j, jacobi3(j + 1));
        if j > 0 {
            theta += QSeries::monomial(c * j * j, jacobi3(1 - j));
        }
        j += 1;
    }
    &theta * &inv_inf(1, n)
}

/// `Σ_{k ≥ 0} (k+b / 3) q^k / (q;q)_k`.
fn dual_sum(b: i64, n: i64) -> QSeries {
    let mut acc = QSeries::zero().truncate(n);
    for k in 0..=n {
        let c = jacobi3(k + b);
        if c != 0 {
            acc += series_term(k, &QSeries::monomial(0, c), &[f(k, 1)], n);
        }
    }
    acc
}

/// `(q;q)_∞ / (q^3;q^3)_∞`.
fn euler_ratio(n: i64) -> Result<QSeries> {
    product_over(&[p(1, 1)], 3, n)
}

/// `Σ_m sign(m) q^{e(m)} / (q;q)_{d(m)}` for increasing `e`.
fn signed_sum<T: Fn(i64) -> (i64, i64, i64)>(n: i64, term: T) -> QSeries {
    let mut acc = QSeries::zero().truncate(n);
    for mm in 0.. {
        let (e, d, s) = term(mm);
        if e > n {
            break;
        }
        acc += series_term(e, &QSeries::monomial(0, s), &[f(d, 1)], n);
    }
    acc
}

fn dual_limit_lhs(b: i64, n: i64) -> Result<QSeries> {
    let s = match b {
        0 => signed_sum(n, |m| ((3 * m + 1) * (3 * m + 2) / 2, 3 * m + 2, sign(m))),
        1 => signed_sum(n, |m| (3 * m * (3 * m - 1) / 2, 3 * m, sign(m))),
        _ => signed_sum(n, |m| (3 * m * (3 * m + 1) / 2, 3 * m + 1, -sign(m))),
    };
    Ok(&euler_ratio(n)? * &s)
}

fn dual_limit_unified_lhs(b: i64, n: i64) -> Result<QSeries> {
    let s = signed_sum(n, |m| (m * (m + 1) / 2, m, -sign(m) * jacobi3(m - b)));
    Ok(&euler_ratio(n)? * &s)
}

/// `(q^3;q^3)_L` times the doubly bounded seed with `M` large enough to be
/// constant below `q^N`.
fn seed_large_m(l: i64, n: i64) -> Result<QSeries> {
    Ok((&seed_lhs_upto(l, n + l + 1, Some(n)) * &qfactorial(l, 3)?).truncate(n))
}

/// The doubly bounded seed with `L` large enough to be constant below `q^N`.
fn seed_large_l(big_m: i64, n: i64) -> Result<QSeries> {
    Ok(seed_lhs_upto(n + big_m + 1, big_m, Some(n)))
}

fn seed_large_l_rhs(big_m: i64, n: i64) -> Result<QSeries> {
    Ok(&fin_cap1_binomial_rhs(big_m)? * &inv_qfactorial(Length::Finite(big_m), 3, n))
}

fn which_check(p: &Params) -> Result<()> {
    let w = p.get("which")?;
    if w == 1 || w == 2 {
        Ok(())
    } else {
        Err(QError::ParamOutOfRange(format!("which = {w} must be 1 or 2")))
    }
}

fn b_check(p: &Params) -> Result<()> {
    let b = p.get("b")?;
    if (0..=2).contains(&b) {
        Ok(())
    } else {
        Err(QError::ParamOutOfRange(format!("b = {b} must be 0, 1 or 2")))
    }
}

fn twist_check(p: &Params) -> Result<()> {
    let (f_, s) = (p.get("f")?, p.get("s")?);
    if s > f_ {
        Err(QError::ParamOutOfRange(format!("twist s = {s} exceeds f = {f_}")))
    } else {
        Ok(())
    }
}

fn no_check(_: &Params) -> Result<()> {
    Ok(())
}

const WHICH_N: &[ParamSpec] = &[param("which", 1, Axis::Values(&[1, 2])), N];
const NU_N: &[ParamSpec] = &[param("nu", 1, Axis::Nu), N];
const F_N: &[ParamSpec] = &[param("f", 1, Axis::F), N];
const FS_N: &[ParamSpec] = &[param("f", 1, Axis::F), param("s", 0, Axis::S), N];
const B_N: &[ParamSpec] = &[param("b", 0, Axis::Values(&[0, 1, 2])), N];
const L_N: &[ParamSpec] = &[param("L", 0, Axis::L), N];
const M_N: &[ParamSpec] = &[param("M", 0, Axis::M), N];

fn truncated(
    id: &'static str,
    summary: &'static str,
    params: &'static [ParamSpec],
    lhs: super::Evaluator,
    rhs: super::Evaluator,
    check: fn(&Params) -> Result<()>,
) -> IdentityCase {
    IdentityCase { id, summary, mode: Mode::TruncatedSeries, params, lhs, rhs, check }
}

macro_rules! limit_case {
    ($id:expr, $summary:expr, $fam:expr) => {
        truncated(
            $id,
            $summary,
            F_N,
            |p| hierarchy_limit_lhs($fam, p.get("f")?, 0, p.get("N")?),
            |p| hierarchy_limit_rhs($fam, p.get("f")?, p.get("N")?),
            no_check,
        )
    };
}

pub(super) fn cases() -> Vec<IdentityCase> {
    vec![
        truncated(
            "cap_analytic",
            "Capparelli identities as double sums",
            WHICH_N,
            |p| cap_analytic_lhs(p.get("which")?, p.get("N")?),
            |p| cap_analytic_rhs(p.get("which")?, p.get("N")?),
            which_check,
        ),
        truncated(
            "s_hierarchy_limit",
            "limit of the S-hierarchy",
            NU_N,
            |p| s_hierarchy_limit_lhs(p.get("nu")?, p.get("N")?),
            |p| s_hierarchy_limit_rhs(p.get("nu")?, p.get("N")?),
            no_check,
        ),
        limit_case!("hierarchy_cap1_binomial_limit", "limit of the base q^3 first hierarchy", Family::Cap1Binomial),
        limit_case!("hierarchy_cap2_binomial_limit", "limit of the base q^3 second hierarchy", Family::Cap2Binomial),
        limit_case!("hierarchy_sum_of_capparellis", "limit of the sum-of-products hierarchy", Family::SumOfCapparellis),
        limit_case!("hierarchy_cap1", "limit of the first hierarchy", Family::Cap1),
        limit_case!("hierarchy_cap2", "limit of the second hierarchy", Family::Cap2),
        limit_case!("hierarchy_cap2_analogue", "limit of the odd-kernel hierarchy", Family::Cap2Analogue),
        truncated(
            "hierarchy_cap2_corollary",
            "depth-one second hierarchy equals (q^3;q^3)/(q;q)",
            &[N],
            |p| hierarchy_limit_lhs(Family::Cap2, 1, 0, p.get("N")?),
            |p| product_over(&[self::p(3, 3)], 1, p.get("N")?),
            no_check,
        ),
        truncated(
            "hierarchy_cap1_alternate",
            "twisted first hierarchy as a product",
            FS_N,
            |p| hierarchy_limit_lhs(Family::Cap1, p.get("f")?, p.get("s")?, p.get("N")?),
            |p| twisted_limit_rhs(p.get("f")?, p.get("s")?, p.get("N")?),
            twist_check,
        ),
        truncated(
            "hierarchy_cap1_alternate_s0",
            "theta sum over (q;q) equals the first hierarchy product",
            F_N,
            |p| Ok(cap1_theta_over_euler(p.get("f")?, p.get("N")?)),
            |p| hierarchy_limit_rhs(Family::Cap1, p.get("f")?, p.get("N")?),
            no_check,
        ),
        truncated(
            "corollary_transform",
            "S-hierarchy limit equals the base q^3 hierarchy at depth nu(nu+3)/2",
            NU_N,
            |p| s_hierarchy_limit_lhs(p.get("nu")?, p.get("N")?),
            |p| {
                let nu = p.get("nu")?;
                hierarchy_limit_lhs(Family::Cap1Binomial, nu * (nu + 3) / 2, 0, p.get("N")?)
            },
            no_check,
        ),
        truncated(
            "dual_limit",
            "limit of the dual identities",
            B_N,
            |p| dual_limit_lhs(p.get("b")?, p.get("N")?),
            |p| Ok(dual_sum(p.get("b")?, p.get("N")?)),
            b_check,
        ),
        truncated(
            "dual_limit_unified",
            "single-sum form of the dual limits",
            B_N,
            |p| dual_limit_unified_lhs(p.get("b")?, p.get("N")?),
            |p| Ok(dual_sum(p.get("b")?, p.get("N")?)),
            b_check,
        ),
        truncated(
            "seed_reduction_m",
            "(q^3;q^3)_L times the seed with M -> ∞ gives the trinomial theta sum",
            L_N,
            |p| seed_large_m(p.get("L")?, p.get("N")?),
            |p| Ok(roundtri_rhs_1(p.get("L")?)?.truncate(p.get("N")?)),
            no_check,
        ),
        truncated(
            "seed_reduction_l",
            "seed with L -> ∞ gives the base q^3 identity over (q^3;q^3)_M",
            M_N,
            |p| seed_large_l(p.get("M")?, p.get("N")?),
            |p| seed_large_l_rhs(p.get("M")?, p.get("N")?),
            no_check,
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analytic_identities() {
        for w in 1..=2 {
            assert!(cap_analytic_lhs(w, 30).unwrap().agrees_with(&cap_analytic_rhs(w, 30).unwrap()), "which={w}");
        }
    }

    #[test]
    fn first_analytic_coefficients() {
        let s = cap_analytic_lhs(1, 6).unwrap();
        let c: Vec<i64> = (0..=6).map(|e| s.coeff_i64(e).unwrap()).collect();
        assert_eq!(c, vec![1, 0, 1, 1, 1, 1, 2]);
    }

    #[test]
    fn s_hierarchy_limit_small() {
        for nu in 1..=2 {
            let n = 18;
            assert!(s_hierarchy_limit_lhs(nu, n).unwrap().agrees_with(&s_hierarchy_limit_rhs(nu, n).unwrap()));
        }
    }

    #[test]
    fn hierarchy_limits_small() {
        for fam in Family::ALL {
            for f_ in 1..=2 {
                let l = hierarchy_limit_lhs(fam, f_, 0, 20).unwrap();
                let r = hierarchy_limit_rhs(fam, f_, 20).unwrap();
                assert!(l.agrees_with(&r), "{fam} f={f_}");
            }
        }
    }

    #[test]
    fn dual_limits() {
        for b in 0..3 {
            let r = dual_sum(b, 25);
            assert!(dual_limit_lhs(b, 25).unwrap().agrees_with(&r), "b={b}");
            assert!(dual_limit_unified_lhs(b, 25).unwrap().agrees_with(&r), "b={b}");
        }
    }

    #[test]
    fn seed_reductions() {
        for l in 0..3 {
            assert!(seed_large_m(l, 12).unwrap().agrees_with(&roundtri_rhs_1(l).unwrap().truncate(12)));
        }
        for big_m in 0..3 {
            assert!(seed_large_l(big_m, 12).unwrap().agrees_with(&seed_large_l_rhs(big_m, 12).unwrap()));
        }
    }
}
