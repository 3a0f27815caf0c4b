//! Multi-sum hierarchies generalising the finite Capparelli identities.
//!
//! Every family shares one summand shape: a core double sum over `(m, n)`
//! carried by a tuple `(n_1..n_f)` with tails `N_k = n_k + ... + n_f`. The
//! finite versions multiply by `(q^k;q^k)_{2L+a} / (q^k;q^k)_{L-N_1}`, the
//! limits drop that factor.

use std::fmt;
use std::str::FromStr;

use super::terms::{f, for_each_tail_tuple, jacobi_kernel, kernel_sum, one_plus, qpow, ratio, series_term, tails};
use super::{no_check, param, Axis, IdentityCase, Mode, ParamSpec, Params};
use crate::bounds::for_each_composition_bounded;
use crate::error::{QError, Result};
use crate::qcombinat::QFactorial;
use crate::series::QSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// First identity in base `q^3`.
    Cap1Binomial,
    /// Second identity in base `q^3`.
    Cap2Binomial,
    /// Sum of the two Capparelli products, base `q^3`.
    SumOfCapparellis,
    /// First identity with an optional twist `s`.
    Cap1,
    Cap2,
    /// Second identity with the odd kernel `[2L+1, L-j]`.
    Cap2Analogue,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Cap1Binomial,
        Family::Cap2Binomial,
        Family::SumOfCapparellis,
        Family::Cap1,
        Family::Cap2,
        Family::Cap2Analogue,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cap1Binomial => "cap1_binomial",
            Family::Cap2Binomial => "cap2_binomial",
            Family::SumOfCapparellis => "sum_of_capparellis",
            Family::Cap1 => "cap1",
            Family::Cap2 => "cap2",
            Family::Cap2Analogue => "cap2_analogue",
        }
    }

    /// Base `k` of the outer factorials.
    pub fn base(self) -> u32 {
        match self {
            Family::Cap1Binomial | Family::Cap2Binomial | Family::SumOfCapparellis => 3,
            _ => 1,
        }
    }

    /// `a` in the kernel `[2L+a, L-j]`.
    pub fn odd(self) -> i64 {
        match self {
            Family::Cap2Binomial | Family::Cap2Analogue => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = QError;
    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|fam| fam.name() == s)
            .ok_or_else(|| QError::Parse(format!("unknown family {s:?}")))
    }
}

/// One summand `q^ex (1 + q^p) num / den / tail`, where `tail` collects the
/// factorials that become truncated inverses in the limit.
struct Term {
    ex: i64,
    plus: Option<i64>,
    num: Vec<QFactorial>,
    den: Vec<QFactorial>,
    tail: Vec<QFactorial>,
}

fn quad(m: i64, n: i64) -> i64 {
    2 * m * m + 6 * m * n + 6 * n * n
}

/// The summands attached to a tuple `ns`, with twist `s` for [`Family::Cap1`].
fn for_each_term<V: FnMut(Term)>(fam: Family, ns: &[i64], s: i64, mut visit: V) {
    let k = fam.base();
    let tl = tails(ns);
    let sn: i64 = tl.iter().sum();
    let sn2: i64 = tl.iter().map(|x| x * x).sum();
    let nf = ns[ns.len() - 1];
    let bottom = f(2 * nf + fam.odd(), k);
    let tail: Vec<QFactorial> = ns[..ns.len() - 1].iter().map(|&x| f(x, k)).chain([bottom]).collect();
    for n in 0..=nf {
        for m in 0..=3 * nf + 1 {
            let e = quad(m, n);
            let term = |ex: i64, plus: Option<i64>, rest: i64| Term {
                ex,
                plus,
                num: vec![f(nf, k)],
                den: vec![f(m, 1), f(n, 3), f(rest, k)],
                tail: tail.clone(),
            };
            match fam {
                Family::Cap1Binomial | Family::Cap2Binomial | Family::SumOfCapparellis => {
                    let rest = nf - 2 * n - m;
                    if rest < 0 {
                        break;
                    }
                    visit(match fam {
                        Family::Cap1Binomial => term(e + 3 * sn2, None, rest),
                        Family::Cap2Binomial => term(e + m + 3 * n + 3 * (sn2 + sn), Some(1 + 2 * m + 3 * n), rest),
                        _ => term(e - 2 * m - 3 * n + 3 * sn2, Some(3 * nf), rest),
                    });
                }
                Family::Cap1 => {
                    let rest = nf - 3 * n - 2 * m;
                    if rest < 0 {
                        break;
                    }
                    let tw: i64 = tl[ns.len() - s as usize..].iter().sum();
                    visit(term(e + sn2 + tw, None, rest));
                }
                Family::Cap2 | Family::Cap2Analogue => {
                    let rest = nf - 3 * n - 2 * m;
                    if rest < 0 {
                        break;
                    }
                    let extra = if fam == Family::Cap2Analogue { sn } else { 0 };
                    visit(term(e + m + 3 * n + sn2 + extra, None, rest));
                    if rest >= 1 {
                        visit(term(1 + e + 3 * m + 6 * n + sn2 + extra, None, rest - 1));
                    }
                }
            }
        }
    }
}

fn check_twist(fam: Family, f: i64, s: i64) -> Result<()> {
    if f < 1 {
        return Err(QError::ParamOutOfRange(format!("f = {f} must be at least 1")));
    }
    if s < 0 || s > f || (s > 0 && fam != Family::Cap1) {
        return Err(QError::ParamOutOfRange(format!("twist s = {s} not allowed for {fam} with f = {f}")));
    }
    Ok(())
}

/// The finite multi-sum of `fam` at depth `f`, twist `s` and bound `L`.
pub fn hierarchy_lhs(fam: Family, f_: i64, s: i64, l: i64) -> Result<QSeries> {
    check_twist(fam, f_, s)?;
    let k = fam.base();
    let top = f(2 * l + fam.odd(), k);
    let mut acc = QSeries::zero();
    let mut err = None;
    for_each_composition_bounded(f_ as usize, l, |ns| {
        if err.is_some() {
            return;
        }
        let n1 = tails(ns)[0];
        for_each_term(fam, ns, s, |t| {
            let mut num = t.num.clone();
            num.push(top);
            let mut den = t.den.clone();
            den.extend(t.tail.iter().copied());
            den.push(f(l - n1, k));
            match ratio(&num, &den) {
                Ok(r) => {
                    let r = match t.plus {
                        Some(p) => &r * &one_plus(p),
                        None => r,
                    };
                    acc += r.shift(t.ex);
                }
                Err(e) => err = Some(e),
            }
        });
    });
    match err {
        Some(e) => Err(e),
        None => Ok(acc),
    }
}

/// The limit `L -> ∞` of [`hierarchy_lhs`], truncated at `q^n`.
pub fn hierarchy_limit_lhs(fam: Family, f_: i64, s: i64, n: i64) -> Result<QSeries> {
    check_twist(fam, f_, s)?;
    let k = fam.base() as i64;
    let mut acc = QSeries::zero().truncate(n);
    let mut err = None;
    for_each_tail_tuple(f_ as usize, k, n, |ns| {
        if err.is_some() {
            return;
        }
        for_each_term(fam, ns, s, |t| {
            if t.ex > n {
                return;
            }
            match ratio(&t.num, &t.den) {
                Ok(core) => {
                    let core = match t.plus {
                        Some(p) => &core * &one_plus(p),
                        None => core,
                    };
                    acc += series_term(t.ex, &core, &t.tail, n);
                }
                Err(e) => err = Some(e),
            }
        });
    });
    match err {
        Some(e) => Err(e),
        None => Ok(acc),
    }
}

/// The theta-kernel side of the finite hierarchy.
pub fn hierarchy_rhs(fam: Family, f_: i64, s: i64, l: i64) -> Result<QSeries> {
    check_twist(fam, f_, s)?;
    let c = f_ + 1;
    Ok(match fam {
        Family::Cap1Binomial => kernel_sum(-l, l, 2 * l, l, 3, |j| qpow(3 * c * j * j + j)),
        Family::Cap2Binomial => kernel_sum(-l - 1, l + 1, 2 * l + 1, l, 3, |j| qpow(3 * c * j * j + (3 * f_ + 2) * j)),
        Family::SumOfCapparellis => {
            kernel_sum(-l - 1, l + 1, 2 * l, l, 3, |j| &qpow(3 * c * j * j - 2 * j) * &one_plus(3 * j))
        }
        Family::Cap1 => jacobi_kernel(l, 2 * l, -l, l, |j| c * j * j - s * j),
        Family::Cap2 => jacobi_kernel(l, 2 * l, -l, l, |j| c * j * j + j),
        Family::Cap2Analogue => jacobi_kernel(l, 2 * l + 1, -l - 1, l + 1, |j| c * (j * j + j)),
    })
}

/// The odd-kernel hierarchy with the printed summation range `-L..L`.
pub fn cap2_analogue_rhs_printed(f_: i64, l: i64) -> Result<QSeries> {
    let c = f_ + 1;
    Ok(jacobi_kernel(l, 2 * l + 1, -l, l, |j| c * (j * j + j)))
}

const FL: &[ParamSpec] = &[param("f", 1, Axis::F), param("L", 0, Axis::L)];
const FSL: &[ParamSpec] = &[param("f", 1, Axis::F), param("s", 0, Axis::S), param("L", 0, Axis::L)];

macro_rules! fin_case {
    ($id:expr, $summary:expr, $fam:expr) => {
        IdentityCase {
            id: $id,
            summary: $summary,
            mode: Mode::ExactPolynomial,
            params: FL,
            lhs: |p| hierarchy_lhs($fam, p.get("f")?, 0, p.get("L")?),
            rhs: |p| hierarchy_rhs($fam, p.get("f")?, 0, p.get("L")?),
            check: no_check,
        }
    };
}

fn twist_check(p: &Params) -> Result<()> {
    check_twist(Family::Cap1, p.get("f")?, p.get("s")?)
}

pub(super) fn cases() -> Vec<IdentityCase> {
    vec![
        fin_case!("hierarchy_fin_cap1_binomial", "depth-f first identity in base q^3", Family::Cap1Binomial),
        fin_case!("hierarchy_fin_cap2_binomial", "depth-f second identity in base q^3", Family::Cap2Binomial),
        fin_case!(
            "hierarchy_fin_sum_of_capparellis",
            "depth-f sum of the Capparelli products",
            Family::SumOfCapparellis
        ),
        fin_case!("hierarchy_fin_cap1", "depth-f new first identity", Family::Cap1),
        fin_case!("hierarchy_fin_cap2", "depth-f new second identity", Family::Cap2),
        fin_case!("hierarchy_fin_cap2_analogue", "depth-f identity with the odd kernel", Family::Cap2Analogue),
        IdentityCase {
            id: "double_fin_hierarchy",
            summary: "depth-f first identity twisted by s",
            mode: Mode::ExactPolynomial,
            params: FSL,
            lhs: |p| hierarchy_lhs(Family::Cap1, p.get("f")?, p.get("s")?, p.get("L")?),
            rhs: |p| hierarchy_rhs(Family::Cap1, p.get("f")?, p.get("s")?, p.get("L")?),
            check: twist_check,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_bound_is_one() {
        for fam in Family::ALL {
            assert_eq!(hierarchy_lhs(fam, 2, 0, 0).unwrap(), hierarchy_rhs(fam, 2, 0, 0).unwrap(), "{fam}");
        }
        assert_eq!(hierarchy_lhs(Family::Cap1, 3, 0, 0).unwrap(), QSeries::one());
    }

    #[test]
    fn all_families_small() {
        for fam in Family::ALL {
            for f_ in 1..=2 {
                for l in 0..4 {
                    assert_eq!(
                        hierarchy_lhs(fam, f_, 0, l).unwrap(),
                        hierarchy_rhs(fam, f_, 0, l).unwrap(),
                        "{fam} f={f_} L={l}"
                    );
                }
            }
        }
    }

    #[test]
    fn twisted_small() {
        for f_ in 1..=2 {
            for s in 0..=f_ {
                for l in 0..4 {
                    assert_eq!(
                        hierarchy_lhs(Family::Cap1, f_, s, l).unwrap(),
                        hierarchy_rhs(Family::Cap1, f_, s, l).unwrap()
                    );
                }
            }
        }
        assert!(hierarchy_lhs(Family::Cap2, 1, 1, 2).is_err());
        assert!(hierarchy_lhs(Family::Cap1, 1, 2, 2).is_err());
    }

    #[test]
    fn printed_range_of_odd_kernel_is_refuted() {
        let l = 1;
        assert_ne!(cap2_analogue_rhs_printed(1, l).unwrap(), hierarchy_lhs(Family::Cap2Analogue, 1, 0, l).unwrap());
    }

    #[test]
    fn family_names_round_trip() {
        for fam in Family::ALL {
            assert_eq!(fam.name().parse::<Family>().unwrap(), fam);
        }
        assert!("nope".parse::<Family>().is_err());
    }
}
