//! Bailey pairs relative to the kernel `[2L+a, L-j]` and the Bailey lemma
//! that generates the multi-sum hierarchies from a seed identity.
//!
//! A pair is `β_L = Σ_j α_j [2L+a, L-j]` in base `q^k`. One application of
//! the lemma sends `α_j` to `q^{k(j^2+aj)} α_j` and `β` to
//! `β'_L = Σ_r q^{k(r^2+ar)} (q^k)_{2L+a} / ((q^k)_{L-r} (q^k)_{2r+a}) β_r`.

use serde::Serialize;

use crate::error::{QError, Result};
use crate::identities::{
    fin_cap1_binomial_lhs, fin_cap1_lhs, fin_cap2_binomial_lhs, fin_cap2_lhs, hierarchy_lhs, param,
    sum_of_capparellis_lhs, Axis, Evaluator, Family, IdentityCase, Mode, ParamSpec, Params,
};
use crate::qcombinat::{jacobi3, q_binomial, q_ratio, QFactorial};
use crate::series::QSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Weight {
    /// `α_j = δ_{j,0}`; the exponent fields are ignored.
    Unit,
    One,
    /// The character `(j+1 / 3)`.
    Jacobi,
}

/// `α_j = w(j) q^{quad j^2 + lin j} (1 + q^{plus j})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Alpha {
    pub weight: Weight,
    pub quad: i64,
    pub lin: i64,
    pub plus: Option<i64>,
    pub base: u32,
    pub a: i64,
}

impl Alpha {
    pub fn unit(base: u32, a: i64) -> Alpha {
        Alpha { weight: Weight::Unit, quad: 0, lin: 0, plus: None, base, a }
    }

    pub fn coeff(&self, j: i64) -> QSeries {
        let w = match self.weight {
            Weight::Unit => return if j == 0 { QSeries::one() } else { QSeries::zero() },
            Weight::One => 1,
            Weight::Jacobi => jacobi3(j + 1),
        };
        let t = QSeries::monomial(self.quad * j * j + self.lin * j, w);
        match self.plus {
            Some(c) => t.mul_binomial(c * j, 1),
            None => t,
        }
    }

    /// `β_L = Σ_{j=-L-a}^{L} α_j [2L+a, L-j]`.
    pub fn beta(&self, l: i64) -> QSeries {
        let mut acc = QSeries::zero();
        for j in -l - self.a..=l {
            let b = q_binomial(2 * l + self.a, l - j, self.base);
            if !b.is_zero() {
                acc += &self.coeff(j) * &b;
            }
        }
        acc
    }

    /// The image of `α` under one application of the lemma.
    pub fn step(&self) -> Alpha {
        let k = self.base as i64;
        Alpha { quad: self.quad + k, lin: self.lin + k * self.a, ..*self }
    }
}

/// `β'_L` for `L = 0..betas.len()` from `β_0, β_1, ...`.
pub fn bailey_transform(betas: &[QSeries], base: u32, a: i64) -> Result<Vec<QSeries>> {
    let k = base as i64;
    let f = |len, base| QFactorial { len, base };
    (0..betas.len() as i64)
        .map(|l| {
            let mut acc = QSeries::zero();
            for (r, b) in betas[..=l as usize].iter().enumerate() {
                let r = r as i64;
                if b.is_zero() {
                    continue;
                }
                let w = q_ratio(&[f(2 * l + a, base)], &[f(l - r, base), f(2 * r + a, base)])?;
                acc += (&w * b).shift(k * (r * r + a * r));
            }
            Ok(acc)
        })
        .collect()
}

/// `Σ_{r=0}^{L} q^{k(r^2+ar)} (q^k)_{2L+a} / ((q^k)_{L-r} (q^k)_{2r+a}) G(r)`.
pub fn bailey_lhs_transform<G: Fn(i64) -> Result<QSeries>>(g: G, a: i64, base: u32, l: i64) -> Result<QSeries> {
    let betas = (0..=l).map(g).collect::<Result<Vec<_>>>()?;
    Ok(bailey_transform(&betas, base, a)?.swap_remove(l as usize))
}

/// First `L <= l_max` where transforming `F_a(α)` differs from `F_a` of the
/// stepped `α`.
pub fn verify_bailey_theorem(alpha: &Alpha, l_max: i64) -> Result<Option<i64>> {
    let chain = Chain::from_lhs(*alpha, l_max, |l| Ok(alpha.beta(l)))?.step()?;
    Ok(chain.first_defect())
}

/// A Bailey pair tabulated as `β_0..β_{L_max}`, with `α` in closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub alpha: Alpha,
    pub betas: Vec<QSeries>,
}

impl Chain {
    pub fn new(alpha: Alpha, betas: Vec<QSeries>) -> Chain {
        Chain { alpha, betas }
    }

    /// Tabulate `β_L` through a closed-form left-hand side.
    pub fn from_lhs<F: Fn(i64) -> Result<QSeries>>(alpha: Alpha, l_max: i64, lhs: F) -> Result<Chain> {
        Ok(Chain { alpha, betas: (0..=l_max).map(lhs).collect::<Result<_>>()? })
    }

    pub fn step(&self) -> Result<Chain> {
        Ok(Chain { alpha: self.alpha.step(), betas: bailey_transform(&self.betas, self.alpha.base, self.alpha.a)? })
    }

    /// Multiply `β_L` by `q^L`; valid when `α_j = w q^{k j^2 - (k-1) j}`, which
    /// the k-transformation turns into `w q^{k j(j-1)}`.
    pub fn k_transform(&self) -> Result<Chain> {
        let al = self.alpha;
        if al.weight != Weight::Jacobi || al.base != 1 || al.a != 0 || al.plus.is_some() || al.lin != 1 - al.quad {
            return Err(QError::ParamOutOfRange(format!(
                "k-transformation needs (j+1/3) q^(k j^2 - (k-1) j), got q^({} j^2 + {} j)",
                al.quad, al.lin
            )));
        }
        let betas = self.betas.iter().enumerate().map(|(l, b)| b.shift(l as i64)).collect();
        Ok(Chain { alpha: Alpha { lin: al.lin - 1, ..al }, betas })
    }

    /// Index of the first `L` where the table differs from `Σ α_j [2L+a, L-j]`.
    pub fn first_defect(&self) -> Option<i64> {
        (0..self.betas.len() as i64).find(|&l| self.betas[l as usize] != self.alpha.beta(l))
    }
}

/// The seed pair of each hierarchy family: the closed form of `α` and the
/// depth-zero double sum.
pub fn seed(fam: Family) -> (Alpha, fn(i64) -> Result<QSeries>) {
    let one = |quad, lin, plus, base, a| Alpha { weight: Weight::One, quad, lin, plus, base, a };
    let jac = |lin, a| Alpha { weight: Weight::Jacobi, quad: 1, lin, plus: None, base: 1, a };
    match fam {
        Family::Cap1Binomial => (one(3, 1, None, 3, 0), fin_cap1_binomial_lhs),
        Family::Cap2Binomial => (one(3, 2, None, 3, 1), fin_cap2_binomial_lhs),
        Family::SumOfCapparellis => (one(3, -2, Some(3), 3, 0), sum_of_capparellis_lhs),
        Family::Cap1 => (jac(0, 0), fin_cap1_lhs),
        Family::Cap2 => (jac(1, 0), fin_cap2_lhs),
        Family::Cap2Analogue => (jac(1, 1), fin_cap2_lhs),
    }
}

/// `β_0..β_{L_max}` after `f` applications of the lemma to the seed of `fam`.
pub fn generate_hierarchy(fam: Family, f: i64, l_max: i64) -> Result<Chain> {
    let (alpha, lhs) = seed(fam);
    let mut chain = Chain::from_lhs(alpha, l_max, lhs)?;
    for _ in 0..f {
        chain = chain.step()?;
    }
    Ok(chain)
}

/// The depth-`f` left-hand side of `fam` at `L`, produced by the lemma.
pub fn generate_hierarchy_lhs(fam: Family, f: i64, l: i64) -> Result<QSeries> {
    Ok(generate_hierarchy(fam, f, l)?.betas.swap_remove(l as usize))
}

/// A named intermediate pair of the twisted chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    pub name: String,
    pub chain: Chain,
}

/// The chain producing the twist-`s` first hierarchy at depth `f`.
///
/// Twist zero applies the lemma `f` times to the first seed. Otherwise the
/// chain starts from `q^L a_L = Σ (j+1/3) q^{j(j-1)} [2L, L-j]` and follows
/// each of the first `s - 1` applications with a k-transformation.
pub fn twisted_chain(f: i64, s: i64, l_max: i64) -> Result<Vec<Checkpoint>> {
    if f < 1 || s < 0 || s > f {
        return Err(QError::ParamOutOfRange(format!("need 0 <= s <= f and f >= 1, got f={f}, s={s}")));
    }
    let mut out = Vec::new();
    let mut chain = if s == 0 {
        let (alpha, lhs) = seed(Family::Cap1);
        Chain::from_lhs(alpha, l_max, lhs)?
    } else {
        let alpha = Alpha { weight: Weight::Jacobi, quad: 1, lin: -1, plus: None, base: 1, a: 0 };
        Chain::from_lhs(alpha, l_max, |l| Ok(fin_cap1_lhs(l)?.shift(l)))?
    };
    out.push(Checkpoint { name: "seed".into(), chain: chain.clone() });
    for i in 1..=f {
        chain = chain.step()?;
        let name = if i == 1 { "first_bailey_application".to_string() } else { format!("bailey_application_{i}") };
        out.push(Checkpoint { name, chain: chain.clone() });
        if i < s {
            chain = chain.k_transform()?;
            out.push(Checkpoint { name: format!("after_k_transform_{}", i + 1), chain: chain.clone() });
        }
    }
    Ok(out)
}

/// The twisted first hierarchy at `L`, produced by [`twisted_chain`].
pub fn twisted_lhs(f: i64, s: i64, l: i64) -> Result<QSeries> {
    let mut cps = twisted_chain(f, s, l)?;
    Ok(cps.pop().expect("chain has a final pair").chain.betas.swap_remove(l as usize))
}

fn family_lhs(fam: Family) -> (Evaluator, Evaluator) {
    macro_rules! pair {
        ($fam:expr) => {
            (
                |p: &Params| generate_hierarchy_lhs($fam, p.get("f")?, p.get("L")?),
                |p: &Params| hierarchy_lhs($fam, p.get("f")?, 0, p.get("L")?),
            )
        };
    }
    match fam {
        Family::Cap1Binomial => pair!(Family::Cap1Binomial),
        Family::Cap2Binomial => pair!(Family::Cap2Binomial),
        Family::SumOfCapparellis => pair!(Family::SumOfCapparellis),
        Family::Cap1 => pair!(Family::Cap1),
        Family::Cap2 => pair!(Family::Cap2),
        Family::Cap2Analogue => pair!(Family::Cap2Analogue),
    }
}

fn lemma_rhs(fam: Family) -> fn(&Params) -> Result<QSeries> {
    macro_rules! rhs {
        ($fam:expr) => {
            |p: &Params| {
                let (alpha, _) = seed($fam);
                let mut a = alpha;
                for _ in 0..p.get("f")? {
                    a = a.step();
                }
                Ok(a.beta(p.get("L")?))
            }
        };
    }
    match fam {
        Family::Cap1Binomial => rhs!(Family::Cap1Binomial),
        Family::Cap2Binomial => rhs!(Family::Cap2Binomial),
        Family::SumOfCapparellis => rhs!(Family::SumOfCapparellis),
        Family::Cap1 => rhs!(Family::Cap1),
        Family::Cap2 => rhs!(Family::Cap2),
        Family::Cap2Analogue => rhs!(Family::Cap2Analogue),
    }
}

const FL: &[ParamSpec] = &[param("f", 0, Axis::F), param("L", 0, Axis::L)];
const FL1: &[ParamSpec] = &[param("f", 1, Axis::F), param("L", 0, Axis::L)];
const FSL: &[ParamSpec] = &[param("f", 1, Axis::F), param("s", 0, Axis::S), param("L", 0, Axis::L)];

fn twist_check(p: &Params) -> Result<()> {
    let (f, s) = (p.get("f")?, p.get("s")?);
    if s > f {
        Err(QError::ParamOutOfRange(format!("twist s = {s} exceeds f = {f}")))
    } else {
        Ok(())
    }
}

fn no_check(_: &Params) -> Result<()> {
    Ok(())
}

const GENERATED_IDS: [(&str, &str); 6] = [
    ("bailey_generated_cap1_binomial", "bailey_lemma_cap1_binomial"),
    ("bailey_generated_cap2_binomial", "bailey_lemma_cap2_binomial"),
    ("bailey_generated_sum_of_capparellis", "bailey_lemma_sum_of_capparellis"),
    ("bailey_generated_cap1", "bailey_lemma_cap1"),
    ("bailey_generated_cap2", "bailey_lemma_cap2"),
    ("bailey_generated_cap2_analogue", "bailey_lemma_cap2_analogue"),
];

/// Registry cases: generated vs printed multi-sums, and generated sums vs
/// the stepped `α` kernel sums.
pub fn cases() -> Vec<IdentityCase> {
    let mut v = Vec::new();
    for (fam, (gen_id, lemma_id)) in Family::ALL.into_iter().zip(GENERATED_IDS) {
        let (gen, printed) = family_lhs(fam);
        v.push(IdentityCase {
            id: gen_id,
            summary: "lemma-generated multi-sum equals the printed multi-sum",
            mode: Mode::ExactPolynomial,
            params: FL1,
            lhs: gen,
            rhs: printed,
            check: no_check,
        });
        v.push(IdentityCase {
            id: lemma_id,
            summary: "lemma-generated multi-sum equals the kernel sum of the stepped alpha",
            mode: Mode::ExactPolynomial,
            params: FL,
            lhs: gen,
            rhs: lemma_rhs(fam),
            check: no_check,
        });
    }
    v.push(IdentityCase {
        id: "bailey_twisted_chain",
        summary: "twisted chain with k-transformations equals the printed twisted multi-sum",
        mode: Mode::ExactPolynomial,
        params: FSL,
        lhs: |p| twisted_lhs(p.get("f")?, p.get("s")?, p.get("L")?),
        rhs: |p| hierarchy_lhs(Family::Cap1, p.get("f")?, p.get("s")?, p.get("L")?),
        check: twist_check,
    });
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_are_bailey_pairs() {
        for fam in Family::ALL {
            let (alpha, lhs) = seed(fam);
            let c = Chain::from_lhs(alpha, 5, lhs).unwrap();
            assert_eq!(c.first_defect(), None, "{fam}");
        }
    }

    #[test]
    fn lemma_preserves_pairs() {
        for fam in Family::ALL {
            let c = generate_hierarchy(fam, 2, 4).unwrap();
            assert_eq!(c.first_defect(), None, "{fam}");
        }
    }

    #[test]
    fn step_updates_exponents() {
        let (a, _) = seed(Family::Cap2Analogue);
        let b = a.step();
        assert_eq!((b.quad, b.lin), (2, 2));
        let (a, _) = seed(Family::Cap1Binomial);
        assert_eq!((a.step().quad, a.step().lin), (6, 1));
    }

    #[test]
    fn twisted_checkpoints() {
        let cps = twisted_chain(2, 2, 4).unwrap();
        let names: Vec<&str> = cps.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["seed", "first_bailey_application", "after_k_transform_2", "bailey_application_2"]);
        let first = &cps[1].chain.alpha;
        assert_eq!((first.quad, first.lin), (2, -1));
        let after = &cps[2].chain.alpha;
        assert_eq!((after.quad, after.lin), (2, -2));
        for cp in &cps {
            assert_eq!(cp.chain.first_defect(), None, "{}", cp.name);
        }
        for l in 0..5 {
            assert_eq!(cps[3].chain.betas[l as usize], hierarchy_lhs(Family::Cap1, 2, 2, l).unwrap());
        }
    }

    #[test]
    fn k_transform_rejects_wrong_shape() {
        let (alpha, lhs) = seed(Family::Cap1Binomial);
        let c = Chain::from_lhs(alpha, 2, lhs).unwrap();
        assert!(c.k_transform().is_err());
        assert!(twisted_chain(1, 2, 3).is_err());
    }

    #[test]
    fn unit_alpha() {
        let u = Alpha::unit(1, 0);
        assert_eq!(u.beta(2), q_binomial(4, 2, 1));
        assert_eq!(u.step().coeff(0), u.coeff(0));
        assert!(u.step().coeff(1).is_zero());
        for base in [1, 3] {
            for a in 0..=1 {
                assert_eq!(verify_bailey_theorem(&Alpha::unit(base, a), 5).unwrap(), None);
            }
        }
    }

    #[test]
    fn transform_of_constant_one() {
        let t = bailey_lhs_transform(|_| Ok(QSeries::one()), 0, 1, 1).unwrap();
        assert_eq!(t, QSeries::from_i64s(0, &[1, 1, -1]));
        let t0 = bailey_lhs_transform(|_| Ok(QSeries::monomial(3, 2)), 1, 3, 0).unwrap();
        assert_eq!(t0, QSeries::monomial(3, 2));
    }

    #[test]
    fn catalog_alphas_satisfy_lemma() {
        for fam in Family::ALL {
            let (alpha, _) = seed(fam);
            assert_eq!(verify_bailey_theorem(&alpha, 6).unwrap(), None, "{fam}");
            assert_eq!(verify_bailey_theorem(&alpha.step(), 4).unwrap(), None, "{fam}");
        }
    }

    #[test]
    fn transform_of_unit_sequence() {
        // β = δ_{L,0} maps to (q)_{2L} / (q)_L
        let betas = vec![QSeries::one(), QSeries::zero(), QSeries::zero()];
        let t = bailey_transform(&betas, 1, 0).unwrap();
        assert_eq!(t[0], QSeries::one());
        assert_eq!(t[1], QSeries::from_i64s(0, &[1, 0, -1]));
    }
}
