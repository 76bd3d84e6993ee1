//! Highest weights of the group underlying genus-2 Hilbert-Siegel varieties.
//!
//! A weight is a tuple `((k1_s, k2_s)_{s in 0..d}, c)` with `k1_s >= k2_s >= 0`
//! at every embedding and `sum(k1 + k2) == c (mod 2)`. Embeddings are
//! anonymous indices `0..d`; the totally real field itself is never
//! represented.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize};
use thiserror::Error;

/// Validation failures for [`HighestWeight`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    /// The embedding set must be non-empty.
    #[error("EmptyEmbeddingSet: at least one embedding is required")]
    EmptyEmbeddingSet,
    /// `k1` and `k2` must have the same length.
    #[error("LengthMismatch: k1 has {0} entries, k2 has {1}")]
    LengthMismatch(usize, usize),
    /// Dominance requires `k1[s] >= k2[s] >= 0` at every embedding.
    #[error("NotDominant: embedding {0} violates k1 >= k2 >= 0")]
    NotDominant(usize),
    /// `sum(k1 + k2)` and `c` must have the same parity.
    #[error("ParityViolation: sum of entries is {sum}, c is {c}")]
    ParityViolation { sum: i64, c: i64 },
}

/// A dominant highest weight `lambda((k1_s, k2_s)_s, c)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HighestWeight {
    k1: Vec<i64>,
    k2: Vec<i64>,
    c: i64,
}

impl HighestWeight {
    /// Validates and builds a weight. Checks, in order: equal positive
    /// lengths, dominance, parity of `c`.
    pub fn new(k1: Vec<i64>, k2: Vec<i64>, c: i64) -> Result<Self, WeightError> {
        if k1.len() != k2.len() {
            return Err(WeightError::LengthMismatch(k1.len(), k2.len()));
        }
        if k1.is_empty() {
            return Err(WeightError::EmptyEmbeddingSet);
        }
        for (s, (&a, &b)) in k1.iter().zip(&k2).enumerate() {
            if !(a >= b && b >= 0) {
                return Err(WeightError::NotDominant(s));
            }
        }
        let sum: i64 = k1.iter().chain(&k2).sum();
        if (sum - c) % 2 != 0 {
            return Err(WeightError::ParityViolation { sum, c });
        }
        Ok(HighestWeight { k1, k2, c })
    }

    /// Builds a weight with the default central character `c = sum(k1 + k2)`,
    /// which always satisfies the parity constraint. Avoidance results do not
    /// depend on `c`; only profile weights shift with it.
    pub fn with_default_c(k1: Vec<i64>, k2: Vec<i64>) -> Result<Self, WeightError> {
        let c = k1.iter().chain(&k2).sum();
        Self::new(k1, k2, c)
    }

    /// Builds a weight skipping the dominance check. Lengths and parity are
    /// still enforced. Intended for exercising the enumeration machinery on
    /// characters that are not dominant; most operations document their
    /// behaviour only for dominant input.
    pub fn new_unchecked(k1: Vec<i64>, k2: Vec<i64>, c: i64) -> Self {
        assert_eq!(k1.len(), k2.len(), "k1/k2 length mismatch");
        assert!(!k1.is_empty(), "empty embedding set");
        let sum: i64 = k1.iter().chain(&k2).sum();
        assert_eq!((sum - c) % 2, 0, "parity violation");
        HighestWeight { k1, k2, c }
    }

    /// Number of embeddings `d = |I_F|`.
    pub fn d(&self) -> usize {
        self.k1.len()
    }

    pub fn k1(&self) -> &[i64] {
        &self.k1
    }

    pub fn k2(&self) -> &[i64] {
        &self.k2
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    /// The motivic weight `w(lambda) = -c`.
    pub fn motivic_weight(&self) -> i64 {
        -self.c
    }

    /// The constant value of `k1`, if `k1` is parallel.
    pub fn k1_constant(&self) -> Option<i64> {
        constant_value(&self.k1)
    }

    /// The constant value of `k2`, if `k2` is parallel.
    pub fn k2_constant(&self) -> Option<i64> {
        constant_value(&self.k2)
    }
}

fn constant_value(v: &[i64]) -> Option<i64> {
    let first = *v.first()?;
    v.iter().all(|&x| x == first).then_some(first)
}

#[derive(Deserialize)]
struct RawWeight {
    k1: Vec<i64>,
    k2: Vec<i64>,
    #[serde(default)]
    c: Option<i64>,
}

impl<'de> Deserialize<'de> for HighestWeight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawWeight::deserialize(deserializer)?;
        let c = raw.c.unwrap_or_else(|| raw.k1.iter().chain(&raw.k2).sum());
        HighestWeight::new(raw.k1, raw.k2, c).map_err(D::Error::custom)
    }
}

/// Regularity and corank data of a weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightClassification {
    /// `regular_at[s]` iff `k1[s] > k2[s] > 0`.
    pub regular_at: Vec<bool>,
    /// Regular at every embedding.
    pub regular: bool,
    /// Regular at no embedding.
    pub completely_irregular: bool,
    /// 0 if `k2` is not parallel, 1 if `k2` is parallel and `k1 != k2`,
    /// 2 if `k1 = k2` is parallel.
    pub corank: u8,
    /// `w(lambda) = -c`.
    pub motivic_weight: i64,
}

/// Classifies a weight: per-embedding regularity, corank, motivic weight.
pub fn classify_weight(weight: &HighestWeight) -> WeightClassification {
    let regular_at: Vec<bool> = weight
        .k1()
        .iter()
        .zip(weight.k2())
        .map(|(&a, &b)| a > b && b > 0)
        .collect();
    let corank = match weight.k2_constant() {
        None => 0,
        Some(_) if weight.k1() != weight.k2() => 1,
        Some(_) => 2,
    };
    WeightClassification {
        regular: regular_at.iter().all(|&r| r),
        completely_irregular: regular_at.iter().all(|&r| !r),
        regular_at,
        corank,
        motivic_weight: weight.motivic_weight(),
    }
}

/// A presentation of a weight as kappa-Kostant parallel: a partition
/// `I_F = i0 ⊔ i1` with `k1 = kappa` on `i0` and `k2 = kappa + 1` on `i1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ParallelPresentation {
    pub kappa: i64,
    pub i0: Vec<usize>,
    pub i1: Vec<usize>,
}

impl ParallelPresentation {
    /// Checks the type invariants against the weight entries.
    pub fn is_valid_for(&self, k1: &[i64], k2: &[i64]) -> bool {
        let d = k1.len();
        let mut seen = vec![0u8; d];
        for &s in &self.i0 {
            if s >= d || k1[s] != self.kappa {
                return false;
            }
            seen[s] += 1;
        }
        for &s in &self.i1 {
            if s >= d || k2[s] != self.kappa + 1 {
                return false;
            }
            seen[s] += 1;
        }
        if seen.iter().any(|&n| n != 1) {
            return false;
        }
        let kappa_floor = if self.i0.is_empty() { -1 } else { 0 };
        self.kappa >= kappa_floor
    }
}

/// All Kostant-parallel presentations of a weight, sorted by
/// `(kappa, |i0|, i0)`; the empty list means the weight is not Kostant
/// parallel. Multiple presentations are all returned; downstream consumers
/// select per their own rules.
pub fn kostant_parallel_presentations(weight: &HighestWeight) -> Vec<ParallelPresentation> {
    parallel_presentations_raw(weight.k1(), weight.k2())
}

/// Presentation enumeration on raw entry lists. The enumeration itself does
/// not require dominance; for dominant weights the partition for a given
/// kappa is unique.
pub fn parallel_presentations_raw(k1: &[i64], k2: &[i64]) -> Vec<ParallelPresentation> {
    assert_eq!(k1.len(), k2.len());
    let d = k1.len();
    let mut kappas: Vec<i64> = k1
        .iter()
        .copied()
        .chain(k2.iter().map(|&v| v - 1))
        .collect();
    kappas.sort_unstable();
    kappas.dedup();

    let mut out = Vec::new();
    for kappa in kappas {
        let mut i0 = Vec::new();
        let mut i1 = Vec::new();
        assign(kappa, 0, d, k1, k2, &mut i0, &mut i1, &mut out);
    }
    out.retain(|p| p.kappa >= if p.i0.is_empty() { -1 } else { 0 });
    out.sort_by(|a, b| (a.kappa, a.i0.len(), &a.i0).cmp(&(b.kappa, b.i0.len(), &b.i0)));
    out
}

#[allow(clippy::too_many_arguments)]
fn assign(
    kappa: i64,
    s: usize,
    d: usize,
    k1: &[i64],
    k2: &[i64],
    i0: &mut Vec<usize>,
    i1: &mut Vec<usize>,
    out: &mut Vec<ParallelPresentation>,
) {
    if s == d {
        out.push(ParallelPresentation {
            kappa,
            i0: i0.clone(),
            i1: i1.clone(),
        });
        return;
    }
    let mut any = false;
    if k1[s] == kappa {
        any = true;
        i0.push(s);
        assign(kappa, s + 1, d, k1, k2, i0, i1, out);
        i0.pop();
    }
    if k2[s] == kappa + 1 {
        any = true;
        i1.push(s);
        assign(kappa, s + 1, d, k1, k2, i0, i1, out);
        i1.pop();
    }
    let _ = any; // embedding s fits neither side: this kappa dies here
}
