//! The weight-avoidance interval of the boundary motive, computed two
//! independent ways: a closed-form case analysis on the corank, and an
//! aggregation of the per-stratum perverse weight bounds. The two routes must
//! agree field for field; the CLI treats a mismatch as a fatal internal
//! error.
//!
//! The appearing-weight pair rule `{-beta', beta' + 1}` per attained bound
//! `beta'` is a reverse-engineered bridge: it reproduces every appearing
//! weight list of the closed-form case analysis exactly.

use crate::profiles::perverse_bounds;
use crate::weight::{
    classify_weight, kostant_parallel_presentations, HighestWeight, ParallelPresentation,
};
use crate::weyl::Stratum;
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AvoidanceError {
    #[error("InvalidBeta: beta must be >= 1, got {0}")]
    InvalidBeta(i64),
}

/// Whether a weight is asserted to appear unconditionally or only when the
/// two parallel constants have the same parity (the open parity case).
#[derive(Debug, Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Condition {
    Always,
    IfParity,
}

/// A weight asserted to appear in the boundary motive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AppearingWeight {
    pub w: i64,
    pub condition: Condition,
}

/// The avoided interval: everything (the boundary motive is zero), a
/// symmetric interval `(-beta + 1, beta)` with `beta >= 1`, or nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AvoidedInterval {
    All,
    Interval { lo: i64, hi: i64 },
    None,
}

impl AvoidedInterval {
    fn from_beta(beta: i64) -> Self {
        if beta >= 1 {
            AvoidedInterval::Interval {
                lo: -beta + 1,
                hi: beta,
            }
        } else {
            AvoidedInterval::None
        }
    }

    /// Whether every weight in `(-beta + 1)..=beta` is avoided.
    pub fn covers(&self, beta: i64) -> bool {
        match self {
            AvoidedInterval::All => true,
            AvoidedInterval::Interval { lo, hi } => *lo <= -beta + 1 && beta <= *hi,
            AvoidedInterval::None => false,
        }
    }
}

impl Serialize for AvoidedInterval {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            AvoidedInterval::All => serializer.serialize_str("ALL"),
            AvoidedInterval::Interval { lo, hi } => {
                use serde::ser::SerializeStruct;
                let mut st = serializer.serialize_struct("AvoidedInterval", 2)?;
                st.serialize_field("lo", lo)?;
                st.serialize_field("hi", hi)?;
                st.end()
            }
            AvoidedInterval::None => serializer.serialize_none(),
        }
    }
}

/// The full avoidance report for one highest weight.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AvoidanceReport {
    pub lambda: HighestWeight,
    pub corank: u8,
    pub completely_irregular: bool,
    pub presentations: Vec<ParallelPresentation>,
    pub boundary_zero: bool,
    pub avoided_interval: AvoidedInterval,
    pub appearing_weights: Vec<AppearingWeight>,
    pub weights01_present: bool,
    pub intersection_motive_exists: bool,
    pub multi_presentation: bool,
}

impl AvoidanceReport {
    /// The beta of the avoided interval; `None` means the motive is zero and
    /// every interval is avoided.
    pub fn beta(&self) -> Option<i64> {
        match self.avoided_interval {
            AvoidedInterval::All => None,
            AvoidedInterval::Interval { hi, .. } => Some(hi),
            AvoidedInterval::None => Some(0),
        }
    }
}

fn parity_condition_holds(lambda: &HighestWeight) -> bool {
    match (lambda.k1_constant(), lambda.k2_constant()) {
        (Some(kappa1), Some(kappa2)) => (kappa1 - kappa2) % 2 == 0,
        _ => false,
    }
}

fn assemble_report(
    lambda: &HighestWeight,
    boundary_zero: bool,
    beta: i64,
    mut appearing: Vec<AppearingWeight>,
) -> AvoidanceReport {
    let classification = classify_weight(lambda);
    let presentations = kostant_parallel_presentations(lambda);
    appearing.sort_by_key(|a| (a.w, a.condition));
    let avoided_interval = if boundary_zero {
        AvoidedInterval::All
    } else {
        AvoidedInterval::from_beta(beta)
    };
    let parity = parity_condition_holds(lambda);
    let weights01 = appearing
        .iter()
        .any(|a| (a.w == 0 || a.w == 1) && (a.condition == Condition::Always || parity));
    AvoidanceReport {
        lambda: lambda.clone(),
        corank: classification.corank,
        completely_irregular: classification.completely_irregular,
        multi_presentation: presentations.len() > 1,
        presentations,
        boundary_zero,
        avoided_interval,
        appearing_weights: appearing,
        weights01_present: weights01,
        intersection_motive_exists: !weights01,
    }
}

fn appearing_pair(beta: i64, condition: Condition) -> [AppearingWeight; 2] {
    [
        AppearingWeight {
            w: -beta,
            condition,
        },
        AppearingWeight {
            w: beta + 1,
            condition,
        },
    ]
}

/// Closed-form avoidance by case analysis on the corank.
///
/// Not Kostant parallel: the boundary motive is zero. Corank 0: `beta = d1 +
/// d kappa` for the presentation with minimal `d1 = |I1|`. Corank 1 with `k1`
/// not parallel: `beta = d kappa2`. Corank >= 1 with `k1 = kappa1` parallel:
/// `beta = d min(kappa1 - kappa2, kappa2)`, with the Siegel pair appearing
/// under the parity condition.
pub fn closed_form_avoidance(lambda: &HighestWeight) -> AvoidanceReport {
    let d = lambda.d() as i64;
    let presentations = kostant_parallel_presentations(lambda);
    if presentations.is_empty() {
        return assemble_report(lambda, true, 0, Vec::new());
    }
    let corank = classify_weight(lambda).corank;
    let (beta, appearing) = if corank == 0 {
        let kappa = presentations[0].kappa;
        let d1 = presentations
            .iter()
            .map(|p| p.i1.len() as i64)
            .min()
            .unwrap();
        let beta = d1 + d * kappa;
        (beta, appearing_pair(beta, Condition::Always).to_vec())
    } else {
        let kappa2 = lambda.k2()[0];
        match lambda.k1_constant() {
            None => {
                let beta = d * kappa2;
                (beta, appearing_pair(beta, Condition::Always).to_vec())
            }
            Some(kappa1) => {
                let beta = d * (kappa1 - kappa2).min(kappa2);
                let mut appearing = appearing_pair(d * kappa2, Condition::Always).to_vec();
                appearing.extend(appearing_pair(d * (kappa1 - kappa2), Condition::IfParity));
                (beta, appearing)
            }
        }
    };
    assemble_report(lambda, false, beta, appearing)
}

/// Avoidance by aggregation of the per-stratum perverse weight bounds: the
/// interval beta is the minimum of the applicable stratum betas, and each
/// attained bound contributes its appearing pair. Must agree field for field
/// with [`closed_form_avoidance`].
pub fn profile_avoidance(lambda: &HighestWeight) -> AvoidanceReport {
    let siegel = perverse_bounds(lambda, Stratum::Siegel);
    let klingen = perverse_bounds(lambda, Stratum::Klingen);
    let bounds: Vec<_> = [siegel, klingen]
        .into_iter()
        .filter(|b| b.applicable)
        .collect();
    if bounds.is_empty() {
        return assemble_report(lambda, true, 0, Vec::new());
    }
    let beta = bounds.iter().map(|b| b.beta.unwrap()).min().unwrap();
    let mut appearing = Vec::new();
    for bound in &bounds {
        for attained in &bound.attained {
            let beta_attained = attained.degree - attained.weight;
            appearing.extend(appearing_pair(beta_attained, attained.condition));
        }
    }
    assemble_report(lambda, false, beta, appearing)
}

/// Whether the boundary motive avoids weights `(-beta + 1)..=beta`; true for
/// every `beta` when the motive is zero.
pub fn check_avoids(lambda: &HighestWeight, beta: i64) -> Result<bool, AvoidanceError> {
    if beta < 1 {
        return Err(AvoidanceError::InvalidBeta(beta));
    }
    let report = profile_avoidance(lambda);
    Ok(report.boundary_zero || report.avoided_interval.covers(beta))
}

/// Whether the weights 0 and 1 appear in the boundary motive; equivalent to
/// the weight being completely irregular of corank >= 1. Either both of 0 and
/// 1 appear or neither does.
pub fn weights01_present(lambda: &HighestWeight) -> bool {
    closed_form_avoidance(lambda).weights01_present
}
