//! Registry of identities with independent left- and right-hand evaluators.
//!
//! Each [`IdentityCase`] names one identity, declares its integer
//! parameters, and compares the two sides either as exact Laurent
//! polynomials or as power series up to a truncation order `N`.

mod capparelli;
mod classical;
mod hierarchy;
mod limits;
mod report;
pub(crate) mod terms;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{QError, Result};
use crate::series::QSeries;

pub use capparelli::{
    cap2_rational_printed, dual_lhs_1, dual_lhs_2, fin_cap1_binomial_lhs, fin_cap1_lhs, fin_cap1_rhs,
    fin_cap2_binomial_lhs, fin_cap2_lhs, fin_cap2_rhs, fin_cap2_s1, fin_cap2_s2, sum_of_capparellis_lhs,
};
pub use hierarchy::{cap2_analogue_rhs_printed, hierarchy_lhs, hierarchy_limit_lhs, hierarchy_rhs, Family};
pub use report::{evaluate, run, MismatchReport, Report, RunSummary, Verdict};

/// Named integer parameters of one identity instance, ordered by name.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Params(BTreeMap<String, i64>);

impl Params {
    pub fn new() -> Params {
        Params::default()
    }

    pub fn with(mut self, name: &str, value: i64) -> Params {
        self.0.insert(name.to_string(), value);
        self
    }

    pub fn set(&mut self, name: &str, value: i64) {
        self.0.insert(name.to_string(), value);
    }

    pub fn get(&self, name: &str) -> Result<i64> {
        self.0.get(name).copied().ok_or_else(|| QError::MissingParam(name.to_string()))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.contains_key(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, i64)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Both sides are exact Laurent polynomials and must be identical.
    ExactPolynomial,
    /// Both sides are power series compared up to `q^N`.
    TruncatedSeries,
}

/// Which configured range a parameter is swept over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    L,
    M,
    F,
    /// `0..=f`, or the single configured value.
    S,
    Nu,
    K,
    Trunc,
    Values(&'static [i64]),
}

#[derive(Clone, Copy, Debug)]
pub struct ParamSpec {
    pub name: &'static str,
    pub min: i64,
    pub default: Option<i64>,
    pub axis: Axis,
}

pub const fn param(name: &'static str, min: i64, axis: Axis) -> ParamSpec {
    ParamSpec { name, min, default: None, axis }
}

pub const fn param_default(name: &'static str, min: i64, default: i64, axis: Axis) -> ParamSpec {
    ParamSpec { name, min, default: Some(default), axis }
}

pub type Evaluator = fn(&Params) -> Result<QSeries>;

pub struct IdentityCase {
    pub id: &'static str,
    pub summary: &'static str,
    pub mode: Mode,
    pub params: &'static [ParamSpec],
    pub lhs: Evaluator,
    pub rhs: Evaluator,
    /// Cross-parameter constraints beyond the per-parameter minimum.
    pub check: fn(&Params) -> Result<()>,
}

impl fmt::Debug for IdentityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityCase").field("id", &self.id).field("mode", &self.mode).finish()
    }
}

pub(crate) fn no_check(_: &Params) -> Result<()> {
    Ok(())
}

/// Parameter ranges for sweeping the registry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridConfig {
    pub l_max: i64,
    pub m_max: i64,
    pub f_max: i64,
    pub s: Option<i64>,
    pub nu_max: i64,
    pub k_max: i64,
    pub trunc: i64,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig { l_max: 8, m_max: 8, f_max: 3, s: None, nu_max: 2, k_max: 4, trunc: 30 }
    }
}

impl IdentityCase {
    /// Fill defaults and check ranges and constraints.
    pub fn resolve(&self, given: &Params) -> Result<Params> {
        let mut p = Params::new();
        for spec in self.params {
            let v = match (given.0.get(spec.name), spec.default) {
                (Some(&v), _) => v,
                (None, Some(d)) => d,
                (None, None) => return Err(QError::MissingParam(spec.name.to_string())),
            };
            if v < spec.min {
                return Err(QError::ParamOutOfRange(format!("{} = {v} is below {}", spec.name, spec.min)));
            }
            p.set(spec.name, v);
        }
        (self.check)(&p)?;
        Ok(p)
    }

    /// Evaluate both sides at resolved parameters.
    pub fn sides(&self, given: &Params) -> Result<(QSeries, QSeries)> {
        let p = self.resolve(given)?;
        let lhs = (self.lhs)(&p)?;
        let rhs = (self.rhs)(&p)?;
        if self.mode == Mode::ExactPolynomial && !(lhs.is_exact() && rhs.is_exact()) {
            return Err(QError::ExactRequired);
        }
        Ok((lhs, rhs))
    }

    /// Every valid parameter combination in the configured ranges.
    pub fn grid(&self, cfg: &GridConfig) -> Vec<Params> {
        let mut out = vec![Params::new()];
        for spec in self.params {
            let mut next = Vec::new();
            for p in &out {
                let values: Vec<i64> = match spec.axis {
                    Axis::L => (0..=cfg.l_max).collect(),
                    Axis::M => (0..=cfg.m_max).collect(),
                    Axis::F => (1..=cfg.f_max).collect(),
                    Axis::S => {
                        let f = p.get("f").unwrap_or(0);
                        match cfg.s {
                            Some(s) if s <= f => vec![s],
                            Some(_) => vec![],
                            None => (0..=f).collect(),
                        }
                    }
                    Axis::Nu => (1..=cfg.nu_max).collect(),
                    Axis::K => (1..=cfg.k_max).collect(),
                    Axis::Trunc => vec![cfg.trunc],
                    Axis::Values(v) => v.to_vec(),
                };
                for v in values.into_iter().filter(|&v| v >= spec.min) {
                    next.push(p.clone().with(spec.name, v));
                }
            }
            out = next;
        }
        out.retain(|p| (self.check)(p).is_ok());
        out
    }
}

fn build_registry() -> Vec<IdentityCase> {
    let mut v = Vec::new();
    v.extend(capparelli::cases());
    v.extend(hierarchy::cases());
    v.extend(limits::cases());
    v.extend(classical::cases());
    v.extend(crate::bailey::cases());
    v
}

/// All registered cases, in a fixed order.
pub fn registry() -> &'static [IdentityCase] {
    static REG: OnceLock<Vec<IdentityCase>> = OnceLock::new();
    REG.get_or_init(build_registry)
}

pub fn find_case(id: &str) -> Result<&'static IdentityCase> {
    registry().iter().find(|c| c.id == id).ok_or_else(|| QError::UnknownCase(id.to_string()))
}

pub fn case_ids() -> Vec<&'static str> {
    registry().iter().map(|c| c.id).collect()
}
