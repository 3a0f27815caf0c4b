use proptest::prelude::*;
use qcap::bailey::{generate_hierarchy, seed, twisted_chain, Alpha, Weight};
use qcap::identities::{dual_lhs_1, dual_lhs_2, fin_cap1_lhs, fin_cap1_rhs, fin_cap2_lhs, hierarchy_lhs, Family};
use qcap::partitions::{count_c, count_d, enumerate};
use qcap::qcombinat::{inv_qfactorial, jacobi3, q_binomial, Length};
use qcap::QSeries;

fn laurent() -> impl Strategy<Value = QSeries> {
    prop::collection::vec((-20i64..=20, -1_000_000i64..=1_000_000), 0..12).prop_map(QSeries::from_terms)
}

fn nonzero_laurent() -> impl Strategy<Value = QSeries> {
    laurent().prop_filter("non-zero", |s| !s.is_zero())
}

proptest! {
    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &a), &QSeries::zero());
        prop_assert_eq!(&(&a * &QSeries::one()), &a);
    }

    #[test]
    fn div_exact_inverts_mul(a in laurent(), b in nonzero_laurent()) {
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn invert_q_is_multiplicative(a in laurent(), b in laurent()) {
        let lhs = (&a * &b).invert_q().unwrap();
        let rhs = &a.invert_q().unwrap() * &b.invert_q().unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.invert_q().unwrap().invert_q().unwrap(), a);
    }

    #[test]
    fn normalization_is_canonical(a in laurent(), pad in 0usize..5, b in laurent()) {
        let (lo, hi) = match (a.order(), a.degree()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Ok(()),
        };
        let mut dense = vec![0i64; pad];
        dense.extend((lo..=hi).map(|e| a.coeff_i64(e).unwrap()));
        dense.extend(std::iter::repeat_n(0, pad));
        let rebuilt = QSeries::from_i64s(lo - pad as i64, &dense);
        prop_assert_eq!(&rebuilt, &a);
        prop_assert_eq!(rebuilt.offset(), a.offset());
        prop_assert_eq!(&(&(&a + &b) - &b), &a);
    }

    #[test]
    fn pascal_recurrence(m in 1i64..=15, n in 1i64..=15) {
        let lhs = q_binomial(m + n, m, 1);
        let rhs = q_binomial(m + n - 1, m, 1) + q_binomial(m + n - 1, m - 1, 1).shift(n);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn binomial_shift(l in 1i64..=30, j in 1i64..=30) {
        prop_assume!(j <= l);
        let one = QSeries::one();
        let lhs = &(&one - &QSeries::monomial(j, 1)) * &q_binomial(l, j, 1);
        let rhs = &(&one - &QSeries::monomial(l, 1)) * &q_binomial(l - 1, j - 1, 1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn binomial_duality(m in 0i64..=15, n in 0i64..=15) {
        let b = q_binomial(n + m, m, 1);
        prop_assert_eq!(b.invert_q().unwrap(), b.shift(-m * n));
    }

    #[test]
    fn central_binomial_symmetry(l in 0i64..=15, j in 0i64..=15) {
        prop_assert_eq!(q_binomial(2 * l, l - j, 1), q_binomial(2 * l, l + j, 1));
    }

    #[test]
    fn binomial_limit(j in 0i64..=5, n in 0i64..=20, extra in 1i64..=3) {
        let l = n + j + extra;
        let lhs = q_binomial(l, j, 1).truncate(n);
        let rhs = inv_qfactorial(Length::Finite(j), 1, n);
        prop_assert!(lhs.agrees_with(&rhs));
    }

    #[test]
    fn jacobi3_antisymmetric_and_periodic(j in -1000i64..=1000) {
        prop_assert_eq!(jacobi3(-j), -jacobi3(j));
        prop_assert_eq!(jacobi3(j + 3), jacobi3(j));
        prop_assert!(jacobi3(j).abs() <= 1);
    }

    #[test]
    fn partition_classes_agree(m in 1u32..=2, n in 0u32..=40) {
        prop_assert_eq!(count_c(m, n).unwrap(), count_d(m, n).unwrap());
    }

    #[test]
    fn enumeration_is_complete_and_duplicate_free(n in 0u32..=18) {
        let all = enumerate(n, |_| true);
        let mut sorted = all.clone();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), all.len());
        prop_assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()));
        let gf = inv_qfactorial(Length::Infinite, 1, n as i64);
        prop_assert_eq!(all.len() as i64, gf.coeff_i64(n as i64).unwrap());
    }
}

#[test]
fn new_fin_cap_degree_and_constant_term() {
    for l in 0..=12 {
        for s in [fin_cap1_lhs(l).unwrap(), fin_cap1_rhs(l).unwrap()] {
            assert!(s.degree().unwrap() <= l * l, "L={l}");
            assert_eq!(s.coeff_i64(0), Some(1));
            assert_eq!(s.order(), Some(0));
        }
    }
}

#[test]
fn duality_is_an_involution() {
    for l in 0..=8 {
        let back = dual_lhs_1(l).unwrap().invert_q().unwrap().shift(l * l);
        assert_eq!(back, fin_cap1_lhs(l).unwrap(), "L={l}");
        let back = dual_lhs_2(l).unwrap().invert_q().unwrap().shift(l * l + l);
        assert_eq!(back, fin_cap2_lhs(l).unwrap(), "L={l}");
    }
}

#[test]
fn bailey_exponent_bookkeeping() {
    let (alpha, _) = seed(Family::Cap1);
    assert_eq!((alpha.quad, alpha.lin), (1, 0));
    for f in 1..=3 {
        let chain = generate_hierarchy(Family::Cap1, f, 2).unwrap();
        assert_eq!((chain.alpha.quad, chain.alpha.lin), (f + 1, 0));
        for s in 0..=f {
            let last = twisted_chain(f, s, 2).unwrap().pop().unwrap();
            assert_eq!((last.chain.alpha.quad, last.chain.alpha.lin), (f + 1, -s), "f={f} s={s}");
        }
    }
}

#[test]
fn twisted_chain_matches_printed_sums() {
    for f in 1..=3 {
        for s in 0..=f {
            let cps = twisted_chain(f, s, 4).unwrap();
            let last = &cps.last().unwrap().chain;
            for l in 0..=4 {
                assert_eq!(last.betas[l as usize], hierarchy_lhs(Family::Cap1, f, s, l).unwrap(), "f={f} s={s} L={l}");
            }
        }
    }
}

#[test]
fn every_catalog_alpha_is_a_bailey_pair() {
    let mut alphas: Vec<Alpha> = Family::ALL.iter().map(|&f| seed(f).0).collect();
    for base in [1, 3] {
        for a in [0, 1] {
            alphas.push(Alpha::unit(base, a));
            alphas.push(Alpha { weight: Weight::Jacobi, quad: 1, lin: -1, plus: None, base, a });
        }
    }
    for alpha in alphas {
        for x in [alpha, alpha.step()] {
            assert_eq!(qcap::bailey::verify_bailey_theorem(&x, 6).unwrap(), None, "{x:?}");
        }
    }
}
