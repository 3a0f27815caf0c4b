//! Classical identities used as controls: Jacobi triple product, quintuple
//! product, q-binomial theorem, Euler's distinct-parts identity and the
//! limits of Gaussian binomials.

use super::terms::series_term;
use super::{param, param_default, Axis, IdentityCase, Mode, ParamSpec, Params};
use crate::error::{QError, Result};
use crate::qcombinat::{
    infinite_product, inv_qfactorial, jtp_product, jtp_sum, q_binomial, q_binomial_theorem_sides, quintuple_product,
    quintuple_sum, APower, Length, PochSpec, QFactorial,
};
use crate::series::QSeries;

const N: ParamSpec = param_default("N", 0, 30, Axis::Trunc);

const JTP: &[ParamSpec] = &[
    param("z_shift", i64::MIN, Axis::Values(&[-2, -1, 0, 1, 2, 3])),
    param_default("base", 1, 1, Axis::Values(&[1, 2, 3])),
    N,
];
const QBT: &[ParamSpec] =
    &[param("a_shift", i64::MIN, Axis::Values(&[-2, 0, 1, 2])), param("z_shift", 1, Axis::Values(&[1, 2, 3])), N];
const QBT0: &[ParamSpec] = &[param("z_shift", 1, Axis::Values(&[1, 2, 3])), N];
const ONLY_N: &[ParamSpec] = &[N];
const J_N: &[ParamSpec] = &[param("j", 0, Axis::Values(&[0, 1, 2, 3, 5])), N];
const AJ_N: &[ParamSpec] =
    &[param("a", 0, Axis::Values(&[0, 1])), param("j", i64::MIN, Axis::Values(&[-2, -1, 0, 1, 2])), N];

fn base(p: &Params) -> Result<u32> {
    u32::try_from(p.get("base")?).map_err(|_| QError::ParamOutOfRange("base".into()))
}

fn quintuple_check(p: &Params) -> Result<()> {
    quintuple_product(p.get("z_shift")?, base(p)?, 0).map(|_| ())
}

fn qbt_check(p: &Params) -> Result<()> {
    let (a, z) = (p.get("a_shift")?, p.get("z_shift")?);
    if a + z < 1 {
        Err(QError::ParamOutOfRange(format!("a z = q^{} does not converge", a + z)))
    } else {
        Ok(())
    }
}

fn no_check(_: &Params) -> Result<()> {
    Ok(())
}

fn distinct_lhs(n: i64) -> Result<QSeries> {
    infinite_product(&[PochSpec::infinite(1, 1).negate()], n)
}

fn distinct_rhs(n: i64) -> Result<QSeries> {
    let mut acc = QSeries::one().truncate(n);
    let mut e = 1;
    while e <= n {
        acc = acc.div_one_minus_power_series(e, n)?;
        e += 2;
    }
    Ok(acc)
}

/// `[L, j]` at `L = N + j + 1`, which agrees with `1/(q;q)_j` below `q^{N+1}`.
fn binomial_limit_lhs(j: i64, n: i64) -> Result<QSeries> {
    Ok(q_binomial(n + j + 1, j, 1).truncate(n))
}

fn binomial_limit_rhs(j: i64, n: i64) -> Result<QSeries> {
    Ok(series_term(0, &QSeries::one(), &[QFactorial { len: j, base: 1 }], n))
}

/// `[2L+a, L-j]` at `L = N + |j| + 1`, which agrees with `1/(q;q)_∞` below `q^{N+1}`.
fn central_limit_lhs(a: i64, j: i64, n: i64) -> Result<QSeries> {
    let l = n + j.abs() + 1;
    Ok(q_binomial(2 * l + a, l - j, 1).truncate(n))
}

fn t(
    id: &'static str,
    summary: &'static str,
    params: &'static [ParamSpec],
    lhs: super::Evaluator,
    rhs: super::Evaluator,
    check: fn(&Params) -> Result<()>,
) -> IdentityCase {
    IdentityCase { id, summary, mode: Mode::TruncatedSeries, params, lhs, rhs, check }
}

pub(super) fn cases() -> Vec<IdentityCase> {
    vec![
        t(
            "jtp",
            "Jacobi triple product at z = q^s",
            JTP,
            |p| jtp_sum(p.get("z_shift")?, base(p)?, p.get("N")?),
            |p| jtp_product(p.get("z_shift")?, base(p)?, p.get("N")?),
            no_check,
        ),
        t(
            "quintuple",
            "quintuple product at z = q^s",
            JTP,
            |p| quintuple_sum(p.get("z_shift")?, base(p)?, p.get("N")?),
            |p| quintuple_product(p.get("z_shift")?, base(p)?, p.get("N")?),
            quintuple_check,
        ),
        t(
            "q_binomial_theorem",
            "q-binomial theorem with a = q^r, z = q^s",
            QBT,
            |p| Ok(q_binomial_theorem_sides(APower::Power(p.get("a_shift")?), p.get("z_shift")?, p.get("N")?)?.0),
            |p| Ok(q_binomial_theorem_sides(APower::Power(p.get("a_shift")?), p.get("z_shift")?, p.get("N")?)?.1),
            qbt_check,
        ),
        t(
            "q_binomial_theorem_a0",
            "q-binomial theorem with a = 0",
            QBT0,
            |p| Ok(q_binomial_theorem_sides(APower::Zero, p.get("z_shift")?, p.get("N")?)?.0),
            |p| Ok(q_binomial_theorem_sides(APower::Zero, p.get("z_shift")?, p.get("N")?)?.1),
            no_check,
        ),
        t(
            "distinct_parts_gf",
            "(-q;q) equals 1/(q;q^2)",
            ONLY_N,
            |p| distinct_lhs(p.get("N")?),
            |p| distinct_rhs(p.get("N")?),
            no_check,
        ),
        t(
            "binomial_limit",
            "[L, j] tends to 1/(q;q)_j",
            J_N,
            |p| binomial_limit_lhs(p.get("j")?, p.get("N")?),
            |p| binomial_limit_rhs(p.get("j")?, p.get("N")?),
            no_check,
        ),
        t(
            "binomial_limit_central",
            "[2L+a, L-j] tends to 1/(q;q)",
            AJ_N,
            |p| central_limit_lhs(p.get("a")?, p.get("j")?, p.get("N")?),
            |p| Ok(inv_qfactorial(Length::Infinite, 1, p.get("N")?)),
            no_check,
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distinct_parts() {
        let a = distinct_lhs(20).unwrap();
        assert!(a.agrees_with(&distinct_rhs(20).unwrap()));
        assert_eq!(a.coeff_i64(6), Some(4));
    }

    #[test]
    fn binomial_limits() {
        for j in 0..4 {
            assert!(binomial_limit_lhs(j, 15).unwrap().agrees_with(&binomial_limit_rhs(j, 15).unwrap()));
        }
        let inf = inv_qfactorial(Length::Infinite, 1, 15);
        for j in -2..=2 {
            assert!(central_limit_lhs(1, j, 15).unwrap().agrees_with(&inf));
        }
    }

    #[test]
    fn quintuple_check_rejects_zero_factors() {
        let p = Params::new().with("z_shift", 1).with("base", 2).with("N", 5);
        assert_eq!(quintuple_check(&p), Err(QError::ZeroFactor));
        let p = Params::new().with("z_shift", 1).with("base", 3).with("N", 5);
        assert!(quintuple_check(&p).is_ok());
    }
}
