//! Linear recurrences with polynomial coefficients satisfied by the finite
//! Capparelli polynomials, and the factor witnesses relating short and long
//! recurrences.
//!
//! A recurrence of order `d` is stored as its residual form
//! `Σ_{lag=0}^{d} c_lag(L) s_{L-lag} = 0`, with coefficients kept exactly as
//! stated (leading factors are never divided out).

use serde::Serialize;

use crate::error::{QError, Result};
use crate::identities::{fin_cap1_lhs, fin_cap1_rhs, fin_cap2_lhs, fin_cap2_rhs, fin_cap2_s1, fin_cap2_s2};
use crate::series::QSeries;

fn q(e: i64) -> QSeries {
    QSeries::monomial(e, 1)
}

/// `1 - q^x`.
fn o(x: i64) -> QSeries {
    QSeries::one() - q(x)
}

fn poly(terms: &[(i64, i64)]) -> QSeries {
    QSeries::from_terms(terms.iter().copied())
}

fn prod(fs: &[QSeries]) -> QSeries {
    fs.iter().fold(QSeries::one(), |acc, f| &acc * f)
}

#[derive(Clone, Copy, Debug)]
pub struct Recurrence {
    pub id: &'static str,
    pub order: usize,
    /// Smallest `L` at which every lag and coefficient is defined.
    pub start: i64,
    pub coeffs: fn(i64) -> Vec<QSeries>,
}

impl Recurrence {
    pub fn coeffs_at(&self, l: i64) -> Vec<QSeries> {
        (self.coeffs)(l)
    }

    /// `Σ c_lag(L) s_{L-lag}` with `s[i]` the value at `L = i`.
    pub fn residual(&self, s: &[QSeries], l: i64) -> QSeries {
        self.coeffs_at(l).iter().enumerate().map(|(lag, c)| c * &s[(l - lag as i64) as usize]).sum()
    }

    /// Extend `s` up to `L = upto` by solving for the lag-0 term.
    pub fn run_forward(&self, initial: &[QSeries], upto: i64) -> Result<Vec<QSeries>> {
        let mut s = initial.to_vec();
        for l in s.len() as i64..=upto {
            if l < self.start {
                return Err(QError::ParamOutOfRange(format!("{} needs values up to L = {}", self.id, self.start - 1)));
            }
            let c = self.coeffs_at(l);
            let rest: QSeries = c[1..].iter().enumerate().map(|(i, ci)| ci * &s[(l - 1 - i as i64) as usize]).sum();
            s.push((-rest).div_exact(&c[0])?);
        }
        Ok(s)
    }
}

fn a_short(l: i64) -> Vec<QSeries> {
    vec![QSeries::one(), -(poly(&[(0, 1), (1, 1)]) - q(2 * l - 1)), q(1) * o(2 * l - 2) * o(2 * l - 3)]
}

fn b_short(l: i64) -> Vec<QSeries> {
    vec![QSeries::one(), -(poly(&[(0, 1), (1, 1)]) - q(2 * l)), q(1) * o(2 * l - 1) * o(2 * l - 2)]
}

/// The order-4 recurrence for `b_L` with the signs as printed.
fn b_long_printed(l: i64) -> Vec<QSeries> {
    let one_q2 = poly(&[(0, 1), (2, 1)]);
    let one_q = poly(&[(0, 1), (1, 1)]);
    let p1 = &one_q2 * (&one_q - q(2 * l - 2));
    let inner = &one_q2 * poly(&[(0, 1), (1, 1), (2, 1)]) - (&one_q * &one_q2).scale(2).shift(2 * l - 3)
        + poly(&[(0, 1), (2, 1), (4, 1)]).shift(4 * l - 7);
    let p2 = -(q(1) * inner);
    let p3 = q(3) * prod(&[one_q2, o(2 * l - 4), o(2 * l - 5), one_q - q(2 * l - 4)]);
    let p4 = -(q(6) * prod(&[o(2 * l - 4), o(2 * l - 5), o(2 * l - 6), o(2 * l - 7)]));
    vec![QSeries::one(), p1, p2, p3, p4]
}

fn b_long(l: i64) -> Vec<QSeries> {
    let mut c = b_long_printed(l);
    for x in c.iter_mut().skip(1) {
        *x = -&*x;
    }
    c
}

fn s1_rec(l: i64) -> Vec<QSeries> {
    vec![
        QSeries::one(),
        -(poly(&[(0, 1), (1, 1), (3, 1)]) - q(l) - q(l + 2)),
        q(1) * o(l - 1) * (poly(&[(0, 1), (2, 1), (3, 1)]) - q(l + 1) - q(2 * l - 1) - q(2 * l - 2)),
        -(q(4) * prod(&[o(l - 1), o(l - 2), o(2 * l - 3), o(2 * l - 4)])),
    ]
}

fn s2_cubic(l: i64) -> QSeries {
    poly(&[(0, 1), (1, 1), (2, 1)]) - q(l - 1) - q(2 * l - 1) - q(2 * l - 2)
}

fn s2_rec(l: i64) -> Vec<QSeries> {
    vec![
        o(l - 1),
        -(o(l) * (poly(&[(0, 1), (1, 1), (2, 1)]) - q(l - 1) - q(l))),
        q(1) * o(l) * o(l - 1) * s2_cubic(l),
        -(q(3) * prod(&[o(l), o(l - 1), o(l - 2), o(2 * l - 3), o(2 * l - 4)])),
    ]
}

/// The `S_2` recurrence as printed: flipped signs and `(1+q^{L-1})` in the lag-2 term.
fn s2_rec_printed(l: i64) -> Vec<QSeries> {
    vec![
        o(l - 1),
        o(l) * (poly(&[(0, 1), (1, 1), (2, 1)]) - q(l - 1) - q(l)),
        -(q(1) * o(l) * (QSeries::one() + q(l - 1)) * s2_cubic(l)),
        q(3) * prod(&[o(l), o(l - 1), o(l - 2), o(2 * l - 3), o(2 * l - 4)]),
    ]
}

fn c_long(l: i64) -> Vec<QSeries> {
    let p5 = poly(&[(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)]);
    let one_q = poly(&[(0, 1), (1, 1)]);
    let one_q2 = poly(&[(0, 1), (2, 1)]);
    let t1 = &p5 - q(2 * l - 1) - q(l) - q(l + 2);
    let t2 = q(1)
        * (&one_q2 * &p5
            - prod(&[one_q.clone(), one_q2.clone(), one_q2.clone()]).shift(l - 1)
            - (&one_q * poly(&[(0, 2), (2, 1)])).shift(2 * l - 2)
            + (&one_q * &one_q).shift(3 * l - 3)
            + q(4 * l - 5));
    let t3 = q(3)
        * o(l - 2)
        * (&one_q2 * &p5
            - one_q2.shift(l)
            - (&one_q * poly(&[(0, 1), (1, 2), (2, 2), (3, 1), (4, 1)])).shift(2 * l - 4)
            - (&one_q * poly(&[(0, 1), (1, -2)])).shift(3 * l - 5)
            + poly(&[(0, 2), (1, 2), (2, 1)]).shift(4 * l - 7)
            - q(5 * l - 7));
    let t4 = q(6)
        * prod(&[o(l - 2), o(2 * l - 6), o(2 * l - 5)])
        * (&p5 - poly(&[(0, 1), (2, 1), (3, 1)]).shift(l - 3) - poly(&[(0, 1), (1, 1), (2, 1)]).shift(2 * l - 5)
            + q(3 * l - 6));
    let t5 = q(10) * prod(&[o(l - 2), o(l - 4), o(2 * l - 5), o(2 * l - 6), o(2 * l - 7), o(2 * l - 8)]);
    vec![QSeries::one(), -t1, t2, -t3, t4, -t5]
}

pub const A_SHORT: Recurrence = Recurrence { id: "a_short", order: 2, start: 2, coeffs: a_short };
pub const B_SHORT: Recurrence = Recurrence { id: "b_short", order: 2, start: 2, coeffs: b_short };
pub const B_LONG: Recurrence = Recurrence { id: "b_long", order: 4, start: 4, coeffs: b_long };
pub const B_LONG_PRINTED: Recurrence = Recurrence { id: "b_long_printed", order: 4, start: 4, coeffs: b_long_printed };
pub const S1_REC: Recurrence = Recurrence { id: "s1", order: 3, start: 3, coeffs: s1_rec };
pub const S2_REC: Recurrence = Recurrence { id: "s2", order: 3, start: 3, coeffs: s2_rec };
pub const S2_REC_PRINTED: Recurrence = Recurrence { id: "s2_printed", order: 3, start: 3, coeffs: s2_rec_printed };
pub const C_LONG: Recurrence = Recurrence { id: "c_long", order: 5, start: 5, coeffs: c_long };

/// The sequences under test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sequence {
    /// Jacobi kernel side of the first identity.
    A,
    /// Double-sum side of the first identity.
    ALhs,
    /// Jacobi kernel side of the second identity.
    B,
    S1,
    S2,
    /// `S_1 + S_2`, the double-sum side of the second identity.
    C,
    /// The constant sequence `1`, a negative control.
    One,
}

impl Sequence {
    pub fn value(self, l: i64) -> Result<QSeries> {
        match self {
            Sequence::A => fin_cap1_rhs(l),
            Sequence::ALhs => fin_cap1_lhs(l),
            Sequence::B => fin_cap2_rhs(l),
            Sequence::S1 => fin_cap2_s1(l),
            Sequence::S2 => fin_cap2_s2(l),
            Sequence::C => fin_cap2_lhs(l),
            Sequence::One => Ok(QSeries::one()),
        }
    }

    pub fn values(self, upto: i64) -> Result<Vec<QSeries>> {
        (0..=upto).map(|l| self.value(l)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecurrenceReport {
    pub recurrence: &'static str,
    pub sequence: Sequence,
    pub from: i64,
    pub to: i64,
    /// First failing `L` and the non-zero residual there, in canonical text.
    pub failure: Option<(i64, String)>,
}

impl RecurrenceReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

pub fn verify_recurrence_on(rec: &Recurrence, seq: Sequence, s: &[QSeries], from: i64, to: i64) -> RecurrenceReport {
    let failure = (from.max(rec.start)..=to).find_map(|l| {
        let r = rec.residual(s, l);
        (!r.is_zero()).then(|| (l, r.canonical_text()))
    });
    RecurrenceReport { recurrence: rec.id, sequence: seq, from: from.max(rec.start), to, failure }
}

pub fn verify_recurrence(rec: &Recurrence, seq: Sequence, from: i64, to: i64) -> Result<RecurrenceReport> {
    let s = seq.values(to)?;
    Ok(verify_recurrence_on(rec, seq, &s, from, to))
}

/// The catalog of recurrence claims, each checked on a window of length at
/// least 8 ending at `to`.
pub fn catalog() -> Vec<(Recurrence, Sequence)> {
    vec![
        (A_SHORT, Sequence::A),
        (A_SHORT, Sequence::ALhs),
        (B_SHORT, Sequence::B),
        (B_LONG, Sequence::B),
        (S1_REC, Sequence::S1),
        (S2_REC, Sequence::S2),
        (C_LONG, Sequence::C),
        (B_SHORT, Sequence::C),
    ]
}

pub fn verify_catalog(to: i64) -> Result<Vec<RecurrenceReport>> {
    let to = to.max(12);
    catalog().into_iter().map(|(rec, seq)| verify_recurrence(&rec, seq, rec.start, to)).collect()
}

/// Claims that must fail: refuted printed forms and non-solutions.
pub fn negative_controls() -> Vec<(Recurrence, Sequence)> {
    vec![
        (A_SHORT, Sequence::One),
        (A_SHORT, Sequence::B),
        (B_SHORT, Sequence::A),
        (B_LONG_PRINTED, Sequence::B),
        (S2_REC_PRINTED, Sequence::S2),
    ]
}

/// `Σ_i w_i(L) r_{L-i}` where `r_L` is the residual of [`B_SHORT`].
#[derive(Clone, Copy, Debug)]
pub struct Witness {
    pub id: &'static str,
    pub weights: fn(i64) -> Vec<QSeries>,
    pub target: Recurrence,
}

impl Witness {
    /// The relation in `s_L` obtained by expanding every `r_{L-i}`.
    pub fn expand(&self, l: i64) -> Vec<QSeries> {
        let w = (self.weights)(l);
        let mut out = vec![QSeries::zero(); w.len() + B_SHORT.order];
        for (i, wi) in w.iter().enumerate() {
            for (lag, c) in B_SHORT.coeffs_at(l - i as i64).iter().enumerate() {
                out[i + lag] += wi * c;
            }
        }
        out
    }

    /// Lags at which the expansion differs from the target recurrence.
    pub fn mismatched_lags(&self, l: i64) -> Vec<usize> {
        let e = self.expand(l);
        let t = self.target.coeffs_at(l);
        (0..e.len().max(t.len()))
            .filter(|&k| e.get(k).cloned().unwrap_or_default() != t.get(k).cloned().unwrap_or_default())
            .collect()
    }
}

fn b_weights(l: i64) -> Vec<QSeries> {
    vec![QSeries::one(), -(q(2) * (poly(&[(0, 1), (1, 1)]) - q(2 * l - 4))), q(5) * o(2 * l - 4) * o(2 * l - 7)]
}

fn c_weights(l: i64) -> Vec<QSeries> {
    vec![
        QSeries::one(),
        -(q(2) * (poly(&[(0, 1), (1, 1), (2, 1)]) - q(l - 2) - q(l) + q(2 * l - 2) - q(2 * l - 3))),
        q(5) * o(l - 2)
            * (poly(&[(0, 1), (1, 1), (2, 1)]) - q(l - 3) - q(2 * l - 4) - q(2 * l - 5) + q(3 * l - 6) - q(3 * l - 7)),
        -(q(9) * prod(&[o(l - 2), o(l - 4), o(2 * l - 5), o(2 * l - 6)])),
    ]
}

/// The `c` witness as printed: `+q^L`, `+q^{2L-3}` in the first weight and `+q^9` in the last.
fn c_weights_printed(l: i64) -> Vec<QSeries> {
    let mut w = c_weights(l);
    w[1] = -(q(2) * (poly(&[(0, 1), (1, 1), (2, 1)]) - q(l - 2) + q(l) + q(2 * l - 2) + q(2 * l - 3)));
    w[3] = -&w[3];
    w
}

pub const B_WITNESS: Witness = Witness { id: "b_witness", weights: b_weights, target: B_LONG };
pub const C_WITNESS: Witness = Witness { id: "c_witness", weights: c_weights, target: C_LONG };
pub const C_WITNESS_PRINTED: Witness = Witness { id: "c_witness_printed", weights: c_weights_printed, target: C_LONG };

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    B,
    C,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub witness: &'static str,
    pub from: i64,
    pub to: i64,
    /// First `L` where `Σ w_i r_{L-i}` is non-zero on the sequence.
    pub relation_failure: Option<i64>,
    /// First `L` where the expansion differs from the target, with the lags.
    pub expansion_failure: Option<(i64, Vec<usize>)>,
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        self.relation_failure.is_none() && self.expansion_failure.is_none()
    }
}

pub fn verify_witness(w: &Witness, seq: Sequence, from: i64, to: i64) -> Result<WitnessReport> {
    let s = seq.values(to)?;
    let nw = (w.weights)(from).len() as i64;
    let from = from.max(B_SHORT.start + nw - 1).max(w.target.start);
    let relation_failure = (from..=to).find(|&l| {
        let ws = (w.weights)(l);
        let total: QSeries = ws.iter().enumerate().map(|(i, wi)| wi * &B_SHORT.residual(&s, l - i as i64)).sum();
        !total.is_zero()
    });
    let expansion_failure = (from..=to).find_map(|l| {
        let lags = w.mismatched_lags(l);
        (!lags.is_empty()).then_some((l, lags))
    });
    Ok(WitnessReport { witness: w.id, from, to, relation_failure, expansion_failure })
}

pub fn verify_factor_witness(which: WitnessKind, from: i64, to: i64) -> Result<WitnessReport> {
    match which {
        WitnessKind::B => verify_witness(&B_WITNESS, Sequence::B, from, to),
        WitnessKind::C => verify_witness(&C_WITNESS, Sequence::C, from, to),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InitialConditionReport {
    pub sequence: Sequence,
    /// Values produced by the short recurrence from the first two terms.
    pub short_route: Vec<String>,
    /// Values produced by the long recurrence from its own initial terms.
    pub long_route: Vec<String>,
    /// Values of the identity itself.
    pub direct: Vec<String>,
    pub agree: bool,
}

/// Run the short recurrence forward from `s_0, s_1` and the long one from
/// its `start` initial values, up to `L = upto`, and compare with the
/// identity's own values.
pub fn initial_condition_argument(seq: Sequence, upto: i64) -> Result<InitialConditionReport> {
    let (short, long) = match seq {
        Sequence::A | Sequence::ALhs => (A_SHORT, None),
        Sequence::B => (B_SHORT, Some(B_LONG)),
        Sequence::C => (B_SHORT, Some(C_LONG)),
        _ => return Err(QError::ParamOutOfRange(format!("no recurrence pair for {seq:?}"))),
    };
    let direct = seq.values(upto)?;
    let short_route = short.run_forward(&direct[..2], upto)?;
    let long_route = match long {
        Some(rec) => {
            let k = (rec.start as usize).min(direct.len());
            rec.run_forward(&direct[..k], upto)?
        }
        None => short_route.clone(),
    };
    let agree = short_route == direct && long_route == direct;
    let text = |v: &[QSeries]| v.iter().map(|x| x.canonical_text()).collect();
    Ok(InitialConditionReport {
        sequence: seq,
        short_route: text(&short_route),
        long_route: text(&long_route),
        direct: text(&direct),
        agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_passes() {
        for r in verify_catalog(12).unwrap() {
            assert!(r.passed(), "{r:?}");
            assert!(r.to - r.from + 1 >= 8);
        }
    }

    #[test]
    fn controls_fail() {
        for (rec, seq) in negative_controls() {
            let r = verify_recurrence(&rec, seq, rec.start, 12).unwrap();
            assert!(!r.passed(), "{} on {seq:?}", rec.id);
        }
        let r = verify_recurrence(&A_SHORT, Sequence::One, 2, 12).unwrap();
        assert_eq!(r.failure.unwrap().0, 2);
    }

    #[test]
    fn printed_s2_passes_nowhere_in_window() {
        let s = Sequence::S2.values(12).unwrap();
        assert!((4..=12).all(|l| !S2_REC_PRINTED.residual(&s, l).is_zero()));
    }

    #[test]
    fn witnesses() {
        assert!(verify_factor_witness(WitnessKind::B, 4, 12).unwrap().passed());
        assert!(verify_factor_witness(WitnessKind::C, 6, 12).unwrap().passed());
        let r = verify_witness(&C_WITNESS_PRINTED, Sequence::C, 6, 12).unwrap();
        assert!(r.expansion_failure.is_some());
    }

    #[test]
    fn perturbed_short_recurrence_is_caught() {
        let w = Witness {
            id: "perturbed",
            weights: |l| {
                let mut w = b_weights(l);
                w[1] = &w[1] + &q(1);
                w
            },
            target: B_LONG,
        };
        assert!(!w.mismatched_lags(8).is_empty());
    }

    #[test]
    fn initial_conditions() {
        for seq in [Sequence::A, Sequence::ALhs, Sequence::B, Sequence::C] {
            let r = initial_condition_argument(seq, 8).unwrap();
            assert!(r.agree, "{seq:?}");
        }
        assert!(initial_condition_argument(Sequence::One, 4).is_err());
    }

    #[test]
    fn run_forward_matches_small_values() {
        let a = A_SHORT.run_forward(&[QSeries::one(), QSeries::one()], 2).unwrap();
        assert_eq!(a[2], QSeries::from_i64s(0, &[1, 0, 1, 0, -1]));
    }
}
