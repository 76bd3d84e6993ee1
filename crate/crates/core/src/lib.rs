//! Combinatorial degeneration data at the Baily-Borel boundary of genus-2
//! Hilbert-Siegel varieties.
//!
//! Everything is driven by a dominant highest weight of the group
//! `Res_{F|Q} GSp_{4,F}` attached to a totally real field of degree `d`. The
//! crate computes, by exact integer combinatorics:
//!
//! - validation and classification of highest weights ([`weight`]): regularity,
//!   corank, Kostant-parallel presentations;
//! - the Weyl group (a product of `d` copies of the order-8 `C_2` Weyl group),
//!   inversion sets, Kostant sets for the Siegel and Klingen parabolics, and
//!   the dot action ([`weyl`]);
//! - the Kostant summands along both boundary stratum types: `q`-admissible
//!   decompositions, Levi highest weights, and Hodge weights ([`kostant`]);
//! - dimension formulas for the cohomology of free abelian groups acting
//!   through a character, with a Koszul-complex oracle and a numeric check on
//!   real quadratic unit groups ([`cohomology`]);
//! - per-degree degeneration profiles along Siegel strata, Klingen strata,
//!   Hilbert-Blumenthal cusps and the double degeneration, plus perverse
//!   weight bounds ([`profiles`]);
//! - the weight-avoidance interval of the boundary motive, computed two
//!   independent ways and cross-checked, together with the corank criterion
//!   for the existence of the intersection motive ([`avoidance`]).
//!
//! All values are immutable after construction and all operations are pure,
//! so everything can be used concurrently without coordination.

pub mod avoidance;
pub mod cohomology;
pub mod kostant;
pub mod profiles;
pub mod weight;
pub mod weyl;

pub use avoidance::{
    check_avoids, closed_form_avoidance, profile_avoidance, weights01_present, AppearingWeight,
    AvoidanceError, AvoidanceReport, AvoidedInterval, Condition,
};
pub use cohomology::{
    free_abelian_cohomology_dim, koszul_oracle, quadratic_unit_check, unit_action_trivial,
    CharacterAction, CohomologyError,
};
pub use kostant::{
    admissible_decompositions, decomposition_of, decompositions, hodge_weight, levi_weight,
    parallel_condition, KostantDecomposition, KostantError, LeviCharacter,
};
pub use profiles::{
    cusp_restriction, double_degeneration_profile, hb_cusp_profile, hb_cusp_raw_decomposition,
    klingen_profile, perverse_bounds, siegel_profile, AttainedBound, CuspCharacter, CuspSummand,
    PerverseBoundSet, ProfileEntry, Status, Summand,
};
pub use weight::{
    classify_weight, kostant_parallel_presentations, parallel_presentations_raw, HighestWeight,
    ParallelPresentation, WeightClassification, WeightError,
};
pub use weyl::{
    dot_action, enumerate_weyl, enumerate_weyl_with_cap, kostant_set, kostant_set_with_cap,
    DotCharacter, PairMap, Root, Stratum, WeylElement, WeylError, DEFAULT_WEYL_CAP, POSITIVE_ROOTS,
    RHO,
};
