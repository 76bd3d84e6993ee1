//! Kostant summands along the two boundary stratum types: `q`-admissible
//! decompositions of the embedding set, the Levi highest weight and Hodge
//! weight of each summand, and the stratum-specific parallelism conditions.
//!
//! Summand multiplicities are always 1, so the data model has no multiplicity
//! field.

use crate::weight::HighestWeight;
use crate::weyl::{Stratum, WeylElement};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KostantError {
    #[error("DimensionMismatch: decomposition covers {0} embeddings, weight has {1}")]
    DimensionMismatch(usize, usize),
}

/// A 4-part partition `(I0, I1, I2, I3)` of the embedding set, stored as a
/// per-embedding level word; the degree is `q = sum of levels`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KostantDecomposition {
    levels: Vec<u8>,
}

impl KostantDecomposition {
    pub fn from_levels(levels: Vec<u8>) -> Self {
        assert!(!levels.is_empty(), "empty embedding set");
        assert!(levels.iter().all(|&l| l <= 3), "levels must lie in 0..=3");
        KostantDecomposition { levels }
    }

    /// The decomposition placing every embedding at the given level.
    pub fn uniform(d: usize, level: u8) -> Self {
        Self::from_levels(vec![level; d])
    }

    pub fn d(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[u8] {
        &self.levels
    }

    pub fn level_of(&self, embedding: usize) -> u8 {
        self.levels[embedding]
    }

    /// `q = 0*|I0| + 1*|I1| + 2*|I2| + 3*|I3|`.
    pub fn q(&self) -> i64 {
        self.levels.iter().map(|&l| l as i64).sum()
    }

    /// The embeddings at level `i`.
    pub fn part(&self, i: u8) -> Vec<usize> {
        self.levels
            .iter()
            .enumerate()
            .filter(|&(_, &l)| l == i)
            .map(|(s, _)| s)
            .collect()
    }

    pub fn part_size(&self, i: u8) -> usize {
        self.levels.iter().filter(|&&l| l == i).count()
    }
}

impl Serialize for KostantDecomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("KostantDecomposition", 5)?;
        st.serialize_field("i0", &self.part(0))?;
        st.serialize_field("i1", &self.part(1))?;
        st.serialize_field("i2", &self.part(2))?;
        st.serialize_field("i3", &self.part(3))?;
        st.serialize_field("q", &self.q())?;
        st.end()
    }
}

/// The highest weight of a boundary Levi summand, with its Hodge weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeviCharacter {
    pub e1: Vec<i64>,
    pub e2: Vec<i64>,
    pub c: i64,
    pub stratum: Stratum,
    pub psi: KostantDecomposition,
    pub hodge_weight: i64,
}

impl LeviCharacter {
    /// Recomputes the Hodge weight from the Levi coordinates by pairing with
    /// the cocharacter of the stratum's Shimura datum. This is an independent
    /// route from the closed formula used by [`hodge_weight`].
    pub fn pairing_weight(&self) -> i64 {
        match self.stratum {
            Stratum::Siegel => -self.c - self.e1.iter().sum::<i64>() - self.e2.iter().sum::<i64>(),
            Stratum::Klingen => -self.c - self.e1.iter().sum::<i64>(),
        }
    }
}

/// All `q`-admissible decompositions of `{0..d}`, in lexicographic order over
/// level words; empty when `q` is outside `[0, 3d]`.
pub fn decompositions(d: usize, q: i64) -> Vec<KostantDecomposition> {
    assert!(d >= 1);
    if q < 0 || q > 3 * d as i64 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut levels = vec![0u8; d];
    fill(&mut levels, 0, q, &mut out);
    out
}

fn fill(levels: &mut Vec<u8>, s: usize, remaining: i64, out: &mut Vec<KostantDecomposition>) {
    let d = levels.len();
    if s == d {
        if remaining == 0 {
            out.push(KostantDecomposition::from_levels(levels.clone()));
        }
        return;
    }
    let slots_after = (d - s - 1) as i64;
    for level in 0..=3u8 {
        let rest = remaining - level as i64;
        if rest >= 0 && rest <= 3 * slots_after {
            levels[s] = level;
            fill(levels, s + 1, rest, out);
        }
    }
    levels[s] = 0;
}

/// Per-level Levi coordinate rows: the dot-action images `w (lambda+rho) -
/// rho` for the Kostant representatives of each parabolic.
fn levi_entry(stratum: Stratum, level: u8, k1: i64, k2: i64) -> (i64, i64) {
    match (stratum, level) {
        (Stratum::Siegel, 0) => (k1, k2),
        (Stratum::Siegel, 1) => (k1, -k2 - 2),
        (Stratum::Siegel, 2) => (k2 - 1, -k1 - 3),
        (Stratum::Siegel, 3) => (-k2 - 3, -k1 - 3),
        (Stratum::Klingen, 0) => (k1, k2),
        (Stratum::Klingen, 1) => (k2 - 1, k1 + 1),
        (Stratum::Klingen, 2) => (-k2 - 3, k1 + 1),
        (Stratum::Klingen, 3) => (-k1 - 4, k2),
        _ => unreachable!("levels lie in 0..=3"),
    }
}

/// Per-level linear form entering both the Hodge-weight formula and the
/// unit-action triviality condition (the two use the same combinations).
fn stratum_form(stratum: Stratum, level: u8, k1: i64, k2: i64) -> i64 {
    match (stratum, level) {
        (Stratum::Siegel, 0) => k1 + k2,
        (Stratum::Siegel, 1) => k1 - k2 - 2,
        (Stratum::Siegel, 2) => -(k1 - k2 + 4),
        (Stratum::Siegel, 3) => -(k1 + k2 + 6),
        (Stratum::Klingen, 0) => k1,
        (Stratum::Klingen, 1) => k2 - 1,
        (Stratum::Klingen, 2) => -(k2 + 3),
        (Stratum::Klingen, 3) => -(k1 + 4),
        _ => unreachable!("levels lie in 0..=3"),
    }
}

/// The highest weight of the Kostant summand indexed by `psi` along the given
/// stratum type, with its Hodge weight attached.
pub fn levi_weight(
    lambda: &HighestWeight,
    psi: &KostantDecomposition,
    stratum: Stratum,
) -> Result<LeviCharacter, KostantError> {
    if psi.d() != lambda.d() {
        return Err(KostantError::DimensionMismatch(psi.d(), lambda.d()));
    }
    let mut e1 = Vec::with_capacity(lambda.d());
    let mut e2 = Vec::with_capacity(lambda.d());
    for s in 0..lambda.d() {
        let (a, b) = levi_entry(stratum, psi.level_of(s), lambda.k1()[s], lambda.k2()[s]);
        e1.push(a);
        e2.push(b);
    }
    let hodge = hodge_weight(lambda, psi, stratum)?;
    Ok(LeviCharacter {
        e1,
        e2,
        c: lambda.c(),
        stratum,
        psi: psi.clone(),
        hodge_weight: hodge,
    })
}

/// The weight of the pure Hodge structure on the Kostant summand indexed by
/// `psi`: `w(lambda)` minus the sum of the per-embedding stratum forms.
pub fn hodge_weight(
    lambda: &HighestWeight,
    psi: &KostantDecomposition,
    stratum: Stratum,
) -> Result<i64, KostantError> {
    if psi.d() != lambda.d() {
        return Err(KostantError::DimensionMismatch(psi.d(), lambda.d()));
    }
    let bracket: i64 = (0..lambda.d())
        .map(|s| stratum_form(stratum, psi.level_of(s), lambda.k1()[s], lambda.k2()[s]))
        .sum();
    Ok(lambda.motivic_weight() - bracket)
}

/// The unique `kappa` making the unit action on the summand trivial, i.e.
/// making all per-embedding stratum forms equal; `None` when the linear
/// system is inconsistent.
pub fn parallel_condition(
    lambda: &HighestWeight,
    psi: &KostantDecomposition,
    stratum: Stratum,
) -> Option<i64> {
    assert_eq!(
        psi.d(),
        lambda.d(),
        "decomposition/weight dimension mismatch"
    );
    let mut kappa = None;
    for s in 0..lambda.d() {
        let value = stratum_form(stratum, psi.level_of(s), lambda.k1()[s], lambda.k2()[s]);
        match kappa {
            None => kappa = Some(value),
            Some(v) if v != value => return None,
            Some(_) => {}
        }
    }
    kappa
}

/// The `(lambda, m)`-admissible decompositions of degree `q`, each paired
/// with its `kappa`.
pub fn admissible_decompositions(
    lambda: &HighestWeight,
    q: i64,
    stratum: Stratum,
) -> Vec<(KostantDecomposition, i64)> {
    decompositions(lambda.d(), q)
        .into_iter()
        .filter_map(|psi| parallel_condition(lambda, &psi, stratum).map(|kappa| (psi, kappa)))
        .collect()
}

/// The decomposition attached to a Kostant-set element: the level of each
/// embedding is the length of its factor. `None` if some factor has length 4
/// (never the case inside a Kostant set).
pub fn decomposition_of(w: &WeylElement) -> Option<KostantDecomposition> {
    let mut levels = Vec::with_capacity(w.d());
    for len in w.factor_lengths() {
        if len > 3 {
            return None;
        }
        levels.push(len as u8);
    }
    Some(KostantDecomposition::from_levels(levels))
}
