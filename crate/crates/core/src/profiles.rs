//! Per-degree degeneration profiles along the boundary: Siegel strata,
//! Klingen strata, the cusps of the Hilbert-Blumenthal strata, and the double
//! degeneration of Klingen data at those cusps, plus the perverse weight
//! bounds consumed by the avoidance computation.
//!
//! Profiles report classical cohomological degrees; degrees outside the
//! stated ranges are zero by fiat and not listed. Degrees the statements
//! leave open are reported as `NOT_DETERMINED_BY_PAPER` rather than guessed.
//! Entries never merge summands of equal weight; consumers may aggregate.

use crate::kostant::{decompositions, parallel_condition, KostantDecomposition};
use crate::weight::{kostant_parallel_presentations, HighestWeight};
use crate::weyl::Stratum;
use serde::Serialize;

/// Non-vanishing status of a profile summand.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Zero,
    Nonzero,
    NonzeroIfParity,
    MayBeNonzero,
    NotDeterminedByPaper,
}

/// One Kostant (or cusp) summand contributing to a cohomological degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Summand {
    /// The indexing decomposition, when one exists on this group.
    pub psi: Option<KostantDecomposition>,
    /// `(p, q)` with `p` the arithmetic-group degree and `q` the
    /// unipotent-radical degree, when determined.
    pub source_degrees: Option<(i64, i64)>,
    pub weight: Option<i64>,
    pub status: Status,
}

/// All summand data for one cohomological degree; an empty summand list means
/// the degree vanishes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ProfileEntry {
    pub degree: i64,
    pub summands: Vec<Summand>,
}

impl ProfileEntry {
    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    fn zero(degree: i64) -> Self {
        ProfileEntry {
            degree,
            summands: Vec::new(),
        }
    }

    fn not_determined(degree: i64) -> Self {
        ProfileEntry {
            degree,
            summands: vec![Summand {
                psi: None,
                source_degrees: None,
                weight: None,
                status: Status::NotDeterminedByPaper,
            }],
        }
    }
}

/// The highest weight of a representation of the Hilbert-Blumenthal group
/// `G_1`: `chi((h_s)_s, g)` with all `h_s >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CuspCharacter {
    pub h: Vec<i64>,
    pub g: i64,
}

impl CuspCharacter {
    pub fn new(h: Vec<i64>, g: i64) -> Self {
        assert!(!h.is_empty(), "empty embedding set");
        assert!(
            h.iter().all(|&v| v >= 0),
            "cusp character entries must be non-negative"
        );
        CuspCharacter { h, g }
    }

    pub fn d(&self) -> usize {
        self.h.len()
    }

    pub fn h_constant(&self) -> Option<i64> {
        let first = self.h[0];
        self.h.iter().all(|&v| v == first).then_some(first)
    }
}

/// One summand of the raw unipotent-radical decomposition at a cusp.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CuspSummand {
    pub subset: Vec<usize>,
    pub weight: i64,
}

/// Perverse weight bound for one stratum type: every perverse cohomology
/// object in `degree_range` has weight `<= n - beta`, and the listed bounds
/// are attained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PerverseBoundSet {
    pub stratum: Stratum,
    pub applicable: bool,
    pub degree_range: Option<(i64, i64)>,
    pub beta: Option<i64>,
    pub attained: Vec<AttainedBound>,
}

/// A degree where the stratum bound is attained: weight `degree - beta`
/// appears, always or under the stated parity condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AttainedBound {
    pub degree: i64,
    pub weight: i64,
    pub condition: crate::avoidance::Condition,
}

/// Degeneration profile along the 0-dimensional Siegel strata, classical
/// degrees `0..=6d-2`. Non-vanishing in `[0, 3d)` requires `k1` and `k2`
/// parallel; degrees `[3d, 6d-2]` are not determined.
pub fn siegel_profile(lambda: &HighestWeight) -> Vec<ProfileEntry> {
    let d = lambda.d() as i64;
    let w = lambda.motivic_weight();
    let k1c = lambda.k1_constant();
    let k2c = lambda.k2_constant();

    let mut out = Vec::new();
    for n in 0..=6 * d - 2 {
        if n >= 3 * d {
            out.push(ProfileEntry::not_determined(n));
            continue;
        }
        let entry = match (k1c, k2c) {
            (Some(kappa1), Some(kappa2)) if n < d => {
                if kappa1 == kappa2 {
                    let status = if n == 0 {
                        Status::Nonzero
                    } else {
                        Status::MayBeNonzero
                    };
                    ProfileEntry {
                        degree: n,
                        summands: vec![Summand {
                            psi: Some(KostantDecomposition::uniform(d as usize, 0)),
                            source_degrees: Some((n, 0)),
                            weight: Some(w - 2 * d * kappa1),
                            status,
                        }],
                    }
                } else {
                    ProfileEntry::zero(n)
                }
            }
            (Some(kappa1), Some(kappa2)) if n < 2 * d => {
                let status = if n == d && kappa1 != kappa2 {
                    Status::Nonzero
                } else {
                    Status::MayBeNonzero
                };
                ProfileEntry {
                    degree: n,
                    summands: vec![Summand {
                        psi: Some(KostantDecomposition::uniform(d as usize, 0)),
                        source_degrees: Some((n, 0)),
                        weight: Some(w - d * (kappa1 + kappa2)),
                        status,
                    }],
                }
            }
            (Some(kappa1), Some(kappa2)) => {
                let second_status = if n == 2 * d {
                    Status::Nonzero
                } else {
                    Status::MayBeNonzero
                };
                ProfileEntry {
                    degree: n,
                    summands: vec![
                        Summand {
                            psi: Some(KostantDecomposition::uniform(d as usize, 0)),
                            source_degrees: Some((n, 0)),
                            weight: Some(w - d * (kappa1 + kappa2)),
                            status: Status::MayBeNonzero,
                        },
                        Summand {
                            psi: Some(KostantDecomposition::uniform(d as usize, 1)),
                            source_degrees: Some((n - d, d)),
                            weight: Some(w + 2 * d - d * (kappa1 - kappa2)),
                            status: second_status,
                        },
                    ],
                }
            }
            _ => ProfileEntry::zero(n),
        };
        out.push(entry);
    }
    out
}

/// Degeneration profile along the d-dimensional Klingen strata, classical
/// degrees `0..=4d-1`, aggregating over all qualifying presentations and
/// admissible decompositions; degrees `[3d, 4d-1]` are not determined.
pub fn klingen_profile(lambda: &HighestWeight) -> Vec<ProfileEntry> {
    let d = lambda.d() as i64;
    let w = lambda.motivic_weight();
    let presentations = kostant_parallel_presentations(lambda);

    let mut out = Vec::new();
    for n in 0..=4 * d - 1 {
        if n >= 3 * d {
            out.push(ProfileEntry::not_determined(n));
            continue;
        }
        let mut summands = Vec::new();
        if n < d {
            for p in &presentations {
                let d1 = p.i1.len() as i64;
                if p.i0.is_empty() || n < d1 {
                    continue;
                }
                summands.push(Summand {
                    psi: Some(presentation_decomposition(lambda.d(), &p.i1)),
                    source_degrees: Some((n - d1, d1)),
                    weight: Some(w - d * p.kappa),
                    status: Status::Nonzero,
                });
            }
        } else if n < 2 * d {
            for p in &presentations {
                let d1 = p.i1.len() as i64;
                if p.i1.is_empty() || n > d - 1 + d1 {
                    continue;
                }
                let kappa2 = p.kappa + 1;
                summands.push(Summand {
                    psi: Some(presentation_decomposition(lambda.d(), &p.i1)),
                    source_degrees: Some((n - d1, d1)),
                    weight: Some(w + d - d * kappa2),
                    status: Status::Nonzero,
                });
            }
        } else {
            for (psi, kappa) in upper_admissible(lambda) {
                let d3 = psi.part_size(3) as i64;
                let p = n - 2 * d - d3;
                if !(0..=d - 1).contains(&p) {
                    continue;
                }
                let kappa3 = -kappa - 3;
                summands.push(Summand {
                    psi: Some(psi),
                    source_degrees: Some((p, 2 * d + d3)),
                    weight: Some(w + 3 * d + d * kappa3),
                    status: Status::Nonzero,
                });
            }
        }
        summands.sort_by(|a, b| (&a.psi, a.source_degrees).cmp(&(&b.psi, b.source_degrees)));
        out.push(ProfileEntry {
            degree: n,
            summands,
        });
    }
    out
}

fn presentation_decomposition(d: usize, i1: &[usize]) -> KostantDecomposition {
    let mut levels = vec![0u8; d];
    for &s in i1 {
        levels[s] = 1;
    }
    KostantDecomposition::from_levels(levels)
}

/// Admissible decompositions supported on levels {2, 3} with a non-empty
/// level-2 part, paired with their kappa.
fn upper_admissible(lambda: &HighestWeight) -> Vec<(KostantDecomposition, i64)> {
    let d = lambda.d();
    let mut out = Vec::new();
    for q in 2 * d as i64..=3 * d as i64 {
        for psi in decompositions(d, q) {
            if psi.part_size(0) > 0 || psi.part_size(1) > 0 || psi.part_size(2) == 0 {
                continue;
            }
            if let Some(kappa) = parallel_condition(lambda, &psi, Stratum::Klingen) {
                out.push((psi, kappa));
            }
        }
    }
    out
}

/// The restriction of a highest weight to the maximal torus of the
/// Hilbert-Blumenthal group: `chi(k2, (c + sum(k1 + k2)) / 2)`.
pub fn cusp_restriction(lambda: &HighestWeight) -> CuspCharacter {
    let total: i64 = lambda.k1().iter().chain(lambda.k2()).sum();
    CuspCharacter::new(lambda.k2().to_vec(), (lambda.c() + total) / 2)
}

/// Degeneration profile of the canonical construction of `chi` at the cusps
/// of a Hilbert-Blumenthal variety, classical degrees `0..=2d-1`: non-zero
/// iff `h` is parallel.
pub fn hb_cusp_profile(chi: &CuspCharacter, d: usize) -> Vec<ProfileEntry> {
    assert_eq!(chi.d(), d, "cusp character length must equal d");
    let d = d as i64;
    let mut out = Vec::new();
    for n in 0..=2 * d - 1 {
        let entry = match chi.h_constant() {
            Some(h) => {
                let (source, weight) = if n < d {
                    ((n, 0), -2 * chi.g)
                } else {
                    ((n - d, d), -2 * chi.g + 2 * d + 2 * d * h)
                };
                ProfileEntry {
                    degree: n,
                    summands: vec![Summand {
                        psi: None,
                        source_degrees: Some(source),
                        weight: Some(weight),
                        status: Status::Nonzero,
                    }],
                }
            }
            None => ProfileEntry::zero(n),
        };
        out.push(entry);
    }
    out
}

/// The raw unipotent-radical decomposition at a cusp in degree `q`: one
/// summand per subset `I` of size `q`, of weight `-2g + 2 sum_{s in I}
/// (h_s + 1)`; empty when `q` is outside `[0, d]`.
pub fn hb_cusp_raw_decomposition(chi: &CuspCharacter, q: i64) -> Vec<CuspSummand> {
    let d = chi.d();
    if q < 0 || q > d as i64 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << d) {
        if mask.count_ones() as i64 != q {
            continue;
        }
        let subset: Vec<usize> = (0..d).filter(|s| mask >> s & 1 == 1).collect();
        let weight = -2 * chi.g + 2 * subset.iter().map(|&s| chi.h[s] + 1).sum::<i64>();
        out.push(CuspSummand { subset, weight });
    }
    out.sort_by(|a, b| a.subset.cmp(&b.subset));
    out
}

/// Weights of the double degeneration: Klingen-stratum data, already obtained
/// by degeneration, degenerated again at the cusps of the closure of the
/// Klingen strata. Degrees `m' in 0..=2d-1`; zero unless `k1` and `k2` are
/// both parallel and an admissible upper decomposition exists.
pub fn double_degeneration_profile(lambda: &HighestWeight) -> Vec<ProfileEntry> {
    let d = lambda.d() as i64;
    let w = lambda.motivic_weight();
    let constants = match (lambda.k1_constant(), lambda.k2_constant()) {
        (Some(kappa1), Some(kappa2)) if !upper_admissible(lambda).is_empty() => {
            Some((kappa1, kappa2))
        }
        _ => None,
    };
    let mut out = Vec::new();
    for degree in 0..=2 * d - 1 {
        let entry = match constants {
            Some((kappa1, kappa2)) => {
                let weight = if degree < d {
                    w + 2 * d - d * (kappa1 - kappa2)
                } else {
                    w + 6 * d + d * (kappa1 + kappa2)
                };
                ProfileEntry {
                    degree,
                    summands: vec![Summand {
                        psi: None,
                        source_degrees: None,
                        weight: Some(weight),
                        status: Status::Nonzero,
                    }],
                }
            }
            None => ProfileEntry::zero(degree),
        };
        out.push(entry);
    }
    out
}

/// The perverse weight bound contributed by one stratum type.
///
/// Siegel strata carry a bound only when `k1` and `k2` are both parallel:
/// `beta = d (kappa1 - kappa2)`, attained in perverse degree `w + 2d` under
/// the parity condition. Klingen strata carry a bound exactly when the weight
/// is Kostant parallel: for corank 0 the binding presentation is the one with
/// minimal `|I1|` (each presentation contributes a pure non-zero summand, and
/// direct summands of semisimple objects cannot cancel), otherwise `beta =
/// d kappa2` attained in perverse degree `w + 2d`.
pub fn perverse_bounds(lambda: &HighestWeight, stratum: Stratum) -> PerverseBoundSet {
    let d = lambda.d() as i64;
    let w = lambda.motivic_weight();
    match stratum {
        Stratum::Siegel => match (lambda.k1_constant(), lambda.k2_constant()) {
            (Some(kappa1), Some(kappa2)) => {
                let beta = d * (kappa1 - kappa2);
                PerverseBoundSet {
                    stratum,
                    applicable: true,
                    degree_range: Some((w, w + 3 * d - 1)),
                    beta: Some(beta),
                    attained: vec![AttainedBound {
                        degree: w + 2 * d,
                        weight: w + 2 * d - beta,
                        condition: crate::avoidance::Condition::IfParity,
                    }],
                }
            }
            _ => PerverseBoundSet {
                stratum,
                applicable: false,
                degree_range: None,
                beta: None,
                attained: Vec::new(),
            },
        },
        Stratum::Klingen => {
            let presentations = kostant_parallel_presentations(lambda);
            if presentations.is_empty() {
                return PerverseBoundSet {
                    stratum,
                    applicable: false,
                    degree_range: None,
                    beta: None,
                    attained: Vec::new(),
                };
            }
            let corank = crate::weight::classify_weight(lambda).corank;
            let (beta, attained) = if corank == 0 {
                let kappa = presentations[0].kappa;
                let d1_min = presentations
                    .iter()
                    .map(|p| p.i1.len() as i64)
                    .min()
                    .unwrap();
                (
                    d1_min + d * kappa,
                    AttainedBound {
                        degree: w + d + d1_min,
                        weight: w + d - d * kappa,
                        condition: crate::avoidance::Condition::Always,
                    },
                )
            } else {
                let kappa2 = lambda.k2()[0];
                (
                    d * kappa2,
                    AttainedBound {
                        degree: w + 2 * d,
                        weight: w + 2 * d - d * kappa2,
                        condition: crate::avoidance::Condition::Always,
                    },
                )
            };
            PerverseBoundSet {
                stratum,
                applicable: true,
                degree_range: Some((w + d, w + 3 * d - 1)),
                beta: Some(beta),
                attained: vec![attained],
            }
        }
    }
}
