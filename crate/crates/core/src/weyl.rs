//! The Weyl group of the underlying group: a product of `d` copies of the
//! order-8 `C_2` Weyl group, acting by signed permutations on the coordinate
//! pair of each embedding.
//!
//! Per embedding the positive roots are, in `(k1, k2)` coordinates,
//! `(1,-1)`, `(0,2)`, `(1,1)`, `(2,0)` (the two simple roots and their two
//! positive combinations), with half-sum `rho = (2,1)`. Lengths and the
//! Kostant sets are always derived from inversion sets, never from hard-coded
//! word lists.

use crate::weight::HighestWeight;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Per-embedding positive roots in `(k1, k2)` coordinates.
pub const POSITIVE_ROOTS: [(i64, i64); 4] = [(1, -1), (0, 2), (1, 1), (2, 0)];

/// Half-sum of the positive roots per embedding; its `c`-component is 0.
pub const RHO: (i64, i64) = (2, 1);

/// Default cap on the number of enumerated Weyl elements (`8^d`).
pub const DEFAULT_WEYL_CAP: usize = 1 << 21;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("SizeLimit: enumeration of {requested} elements exceeds cap {cap}")]
    SizeLimit { requested: u128, cap: usize },
    #[error("DimensionMismatch: element has {0} factors, weight has {1} embeddings")]
    DimensionMismatch(usize, usize),
}

/// The two conjugacy classes of maximal parabolics, i.e. the two boundary
/// stratum types of the Baily-Borel compactification.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stratum {
    /// 0-dimensional strata; unipotent radical roots `(0,2)`, `(1,1)`, `(2,0)`.
    Siegel,
    /// d-dimensional strata; unipotent radical roots `(1,-1)`, `(1,1)`, `(2,0)`.
    Klingen,
}

impl Stratum {
    /// Positive roots (per embedding) appearing in the Lie algebra of the
    /// unipotent radical of the corresponding parabolic.
    pub fn radical_roots(self) -> [(i64, i64); 3] {
        match self {
            Stratum::Siegel => [(0, 2), (1, 1), (2, 0)],
            Stratum::Klingen => [(1, -1), (1, 1), (2, 0)],
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Stratum::Siegel => 0,
            Stratum::Klingen => 1,
        }
    }
}

impl std::str::FromStr for Stratum {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "siegel" | "0" => Ok(Stratum::Siegel),
            "klingen" | "1" => Ok(Stratum::Klingen),
            other => Err(format!(
                "unknown stratum `{other}` (expected siegel|klingen)"
            )),
        }
    }
}

impl std::fmt::Display for Stratum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Stratum::Siegel => write!(f, "siegel"),
            Stratum::Klingen => write!(f, "klingen"),
        }
    }
}

/// One of the 8 signed-permutation maps on a coordinate pair, encoded as
/// `swap * 4 + neg_first * 2 + neg_second`; code 0 is the identity.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairMap(u8);

impl PairMap {
    pub const COUNT: u8 = 8;

    pub fn from_code(code: u8) -> Self {
        assert!(code < Self::COUNT, "pair map code out of range");
        PairMap(code)
    }

    pub fn code(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = PairMap> {
        (0..Self::COUNT).map(PairMap)
    }

    pub fn identity() -> Self {
        PairMap(0)
    }

    pub fn apply(self, (a, b): (i64, i64)) -> (i64, i64) {
        let (x, y) = if self.0 & 4 != 0 { (b, a) } else { (a, b) };
        (
            if self.0 & 2 != 0 { -x } else { x },
            if self.0 & 1 != 0 { -y } else { y },
        )
    }

    /// `self . first`: apply `first`, then `self`.
    pub fn compose(self, first: PairMap) -> PairMap {
        let e1 = self.apply(first.apply((1, 0)));
        let e2 = self.apply(first.apply((0, 1)));
        Self::from_images(e1, e2)
    }

    pub fn inverse(self) -> PairMap {
        Self::all()
            .find(|m| m.compose(self) == PairMap::identity())
            .expect("every signed permutation has an inverse")
    }

    fn from_images(e1: (i64, i64), e2: (i64, i64)) -> PairMap {
        Self::all()
            .find(|m| m.apply((1, 0)) == e1 && m.apply((0, 1)) == e2)
            .expect("images determine a signed permutation")
    }

    /// Positive roots of this `C_2` copy sent to negative roots by the
    /// inverse map.
    pub fn inversions(self) -> Vec<(i64, i64)> {
        let inv = self.inverse();
        POSITIVE_ROOTS
            .iter()
            .copied()
            .filter(|&root| !is_positive(inv.apply(root)))
            .collect()
    }

    /// Length as cardinality of the inversion set; always in `0..=4`.
    pub fn length(self) -> usize {
        self.inversions().len()
    }

    /// Human-readable form, e.g. `(a,b) -> (b,-a)`.
    pub fn describe(self) -> String {
        let fmt = |neg: bool, v: &str| if neg { format!("-{v}") } else { v.to_string() };
        let (x, y) = if self.0 & 4 != 0 {
            ("b", "a")
        } else {
            ("a", "b")
        };
        format!(
            "(a,b) -> ({},{})",
            fmt(self.0 & 2 != 0, x),
            fmt(self.0 & 1 != 0, y)
        )
    }
}

fn is_positive(coords: (i64, i64)) -> bool {
    POSITIVE_ROOTS.contains(&coords)
}

/// A root of the full group: a `C_2` root in a specific embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Root {
    pub embedding: usize,
    pub coords: (i64, i64),
}

impl Root {
    pub fn positive(&self) -> bool {
        is_positive(self.coords)
    }
}

/// An element of the Weyl group: one signed-permutation factor per embedding,
/// with the total length cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    factors: Vec<PairMap>,
    length: usize,
}

impl WeylElement {
    pub fn new(factors: Vec<PairMap>) -> Self {
        assert!(!factors.is_empty(), "empty factor list");
        let length = factors.iter().map(|f| f.length()).sum();
        WeylElement { factors, length }
    }

    pub fn identity(d: usize) -> Self {
        Self::new(vec![PairMap::identity(); d])
    }

    pub fn d(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[PairMap] {
        &self.factors
    }

    /// `l(w) = |r^+(w)|`; equals the sum of the per-factor lengths.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.factors.iter().all(|f| *f == PairMap::identity())
    }

    pub fn factor_lengths(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.length()).collect()
    }

    /// The inversion set `r^+(w)`: positive roots sent to negative roots by
    /// the inverse element.
    pub fn inversion_set(&self) -> Vec<Root> {
        self.factors
            .iter()
            .enumerate()
            .flat_map(|(s, f)| {
                f.inversions().into_iter().map(move |coords| Root {
                    embedding: s,
                    coords,
                })
            })
            .collect()
    }

    /// `self . first`: apply `first`, then `self`.
    pub fn compose(&self, first: &WeylElement) -> Result<WeylElement, WeylError> {
        if self.d() != first.d() {
            return Err(WeylError::DimensionMismatch(self.d(), first.d()));
        }
        Ok(WeylElement::new(
            self.factors
                .iter()
                .zip(&first.factors)
                .map(|(a, b)| a.compose(*b))
                .collect(),
        ))
    }

    pub fn apply(&self, pairs: &[(i64, i64)]) -> Vec<(i64, i64)> {
        assert_eq!(pairs.len(), self.d());
        self.factors
            .iter()
            .zip(pairs)
            .map(|(f, &p)| f.apply(p))
            .collect()
    }
}

/// A (not necessarily dominant) character produced by the dot action: one
/// integer pair per embedding, plus the unchanged `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DotCharacter {
    pub pairs: Vec<(i64, i64)>,
    pub c: i64,
}

/// All `8^d` Weyl elements with lengths precomputed, in lexicographic order
/// over the per-factor codes.
pub fn enumerate_weyl(d: usize) -> Result<Vec<WeylElement>, WeylError> {
    enumerate_weyl_with_cap(d, DEFAULT_WEYL_CAP)
}

pub fn enumerate_weyl_with_cap(d: usize, cap: usize) -> Result<Vec<WeylElement>, WeylError> {
    assert!(d >= 1, "need at least one embedding");
    let total = (PairMap::COUNT as u128).pow(d as u32);
    if total > cap as u128 {
        return Err(WeylError::SizeLimit {
            requested: total,
            cap,
        });
    }
    let mut out = Vec::with_capacity(total as usize);
    for index in 0..total as usize {
        let mut codes = vec![0u8; d];
        let mut rest = index;
        for s in (0..d).rev() {
            codes[s] = (rest % 8) as u8;
            rest /= 8;
        }
        out.push(WeylElement::new(
            codes.into_iter().map(PairMap::from_code).collect(),
        ));
    }
    Ok(out)
}

/// The Kostant set of the chosen parabolic: elements whose inversion set lies
/// inside the unipotent-radical roots. Derived from the inversion-set
/// definition; contains exactly `4^d` elements.
pub fn kostant_set(d: usize, stratum: Stratum) -> Result<Vec<WeylElement>, WeylError> {
    kostant_set_with_cap(d, stratum, DEFAULT_WEYL_CAP)
}

pub fn kostant_set_with_cap(
    d: usize,
    stratum: Stratum,
    cap: usize,
) -> Result<Vec<WeylElement>, WeylError> {
    let allowed = stratum.radical_roots();
    Ok(enumerate_weyl_with_cap(d, cap)?
        .into_iter()
        .filter(|w| {
            w.inversion_set()
                .iter()
                .all(|root| allowed.contains(&root.coords))
        })
        .collect())
}

/// The dot action `w(lambda + rho) - rho`, computed componentwise with
/// `rho = (2,1)` per embedding; `c` is unchanged since all roots have
/// `c`-component 0.
pub fn dot_action(w: &WeylElement, lambda: &HighestWeight) -> Result<DotCharacter, WeylError> {
    if w.d() != lambda.d() {
        return Err(WeylError::DimensionMismatch(w.d(), lambda.d()));
    }
    let pairs = w
        .factors()
        .iter()
        .zip(lambda.k1().iter().zip(lambda.k2()))
        .map(|(f, (&a, &b))| {
            let (x, y) = f.apply((a + RHO.0, b + RHO.1));
            (x - RHO.0, y - RHO.1)
        })
        .collect();
    Ok(DotCharacter {
        pairs,
        c: lambda.c(),
    })
}
