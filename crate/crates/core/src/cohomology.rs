//! Cohomology of free abelian groups acting through a character.
//!
//! The unit groups showing up along the boundary strata are free abelian of
//! rank `d - 1` and act on each Kostant summand by a character; their
//! cohomology is non-trivial exactly when that action is trivial, and then has
//! binomial dimensions. Two independent oracles back the closed formula: an
//! exact rank computation on the Koszul complex of `Z^r`, and a numeric check
//! on fundamental units of real quadratic fields.

use num::rational::Ratio;
use num::{One, Zero};
use thiserror::Error;

type Q = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("SizeLimit: rank {0} exceeds the oracle bound {1}")]
    SizeLimit(u32, u32),
    #[error("UnsupportedField: no fundamental unit table for m = {0}")]
    UnsupportedField(i64),
}

/// A free abelian group of rank `r` acting on a `dim_v`-dimensional space
/// through the character `t -> prod_s sigma_s(t)^{exponents[s]}` of a unit
/// group with `d` real embeddings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterAction {
    pub rank: u32,
    pub exponents: Vec<i64>,
    pub dim_v: u64,
}

impl CharacterAction {
    pub fn new(rank: u32, exponents: Vec<i64>, dim_v: u64) -> Self {
        assert!(dim_v >= 1, "dim_v must be positive");
        assert!(!exponents.is_empty(), "exponent list must be non-empty");
        CharacterAction {
            rank,
            exponents,
            dim_v,
        }
    }

    /// Triviality of the unit action, by the diagonal criterion.
    pub fn is_trivial(&self) -> bool {
        unit_action_trivial(&self.exponents)
    }

    /// `dim H^s` for this action.
    pub fn cohomology_dim(&self, s: i64) -> u64 {
        free_abelian_cohomology_dim(self.rank, s, self.is_trivial(), self.dim_v)
    }
}

/// A totally positive unit group acts trivially through the character with
/// the given embedding exponents iff the exponent vector is diagonal, i.e.
/// all entries are equal.
pub fn unit_action_trivial(exponents: &[i64]) -> bool {
    assert!(!exponents.is_empty(), "exponent list must be non-empty");
    exponents.windows(2).all(|w| w[0] == w[1])
}

/// `dim H^s(Z^r, V)` for an action through a character: zero unless the
/// action is trivial and `0 <= s <= r`, else `dim V * C(r, s)`.
pub fn free_abelian_cohomology_dim(r: u32, s: i64, trivial: bool, dim_v: u64) -> u64 {
    if !trivial || s < 0 || s > r as i64 {
        return 0;
    }
    dim_v * binomial(r as u64, s as u64)
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Independent oracle for the free-abelian dimension formula: the dimensions
/// of `H^s(Z^r, V)` for `s = 0..=r`, computed by exact rank computation over
/// the rationals on the Koszul complex whose differentials have entries
/// `char_values[i] - 1`.
pub fn koszul_oracle(r: u32, char_values: &[Q], dim_v: u64) -> Result<Vec<u64>, CohomologyError> {
    const MAX_RANK: u32 = 4;
    if r > MAX_RANK {
        return Err(CohomologyError::SizeLimit(r, MAX_RANK));
    }
    assert_eq!(
        char_values.len(),
        r as usize,
        "need one value per generator"
    );
    assert!(dim_v >= 1);

    let r = r as usize;
    let subsets = subsets_by_size(r);
    // differential C^s -> C^{s+1}: d(e_I) = sum_{i not in I} sign * (x_i - 1) e_{I+i}
    let mut ranks = vec![0u64; r + 1]; // rank of d_s, index s in 0..r
    let mut matrices: Vec<Vec<Vec<Q>>> = Vec::new();
    for s in 0..r {
        let rows = subsets[s + 1].len();
        let cols = subsets[s].len();
        let mut m = vec![vec![Q::zero(); cols]; rows];
        for (col, set) in subsets[s].iter().enumerate() {
            for (i, &value) in char_values.iter().enumerate() {
                if set & (1 << i) != 0 {
                    continue;
                }
                let target = set | (1 << i);
                let row = subsets[s + 1].iter().position(|&t| t == target).unwrap();
                let below = (0..i).filter(|j| set & (1 << j) != 0).count();
                let sign = if below % 2 == 0 { Q::one() } else { -Q::one() };
                m[row][col] = sign * (value - Q::one());
            }
        }
        matrices.push(m);
    }
    for s in 0..r {
        debug_assert!(s == 0 || is_zero_product(&matrices[s], &matrices[s - 1]));
        ranks[s] = rank(matrices[s].clone());
    }

    let mut dims = Vec::with_capacity(r + 1);
    for s in 0..=r {
        let dim_c = subsets[s].len() as u64;
        let out_rank = if s < r { ranks[s] } else { 0 };
        let in_rank = if s > 0 { ranks[s - 1] } else { 0 };
        dims.push(dim_v * (dim_c - out_rank - in_rank));
    }
    Ok(dims)
}

fn subsets_by_size(r: usize) -> Vec<Vec<u32>> {
    let mut by_size = vec![Vec::new(); r + 1];
    for mask in 0u32..(1 << r) {
        by_size[mask.count_ones() as usize].push(mask);
    }
    by_size
}

fn is_zero_product(a: &[Vec<Q>], b: &[Vec<Q>]) -> bool {
    let cols = b[0].len();
    a.iter().all(|row| {
        (0..cols).all(|col| {
            row.iter()
                .zip(b)
                .map(|(cell, b_row)| *cell * b_row[col])
                .sum::<Q>()
                .is_zero()
        })
    })
}

fn rank(mut m: Vec<Vec<Q>>) -> u64 {
    if m.is_empty() || m[0].is_empty() {
        return 0;
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0usize;
    let mut pivot_row = 0usize;
    for col in 0..cols {
        let Some(src) = (pivot_row..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, src);
        let inv = m[pivot_row][col].recip();
        for cell in &mut m[pivot_row][col..] {
            *cell *= inv;
        }
        for i in 0..rows {
            if i != pivot_row && !m[i][col].is_zero() {
                let factor = m[i][col];
                let pivot = m[pivot_row].clone();
                for (cell, p) in m[i][col..].iter_mut().zip(&pivot[col..]) {
                    *cell -= factor * *p;
                }
            }
        }
        rank += 1;
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    rank as u64
}

/// Numeric validation of the unit criterion on a real quadratic field
/// `Q(sqrt(m))`: checks whether `|s1(u)|^{n1} * |s2(u)|^{n2} = 1` for the
/// fundamental unit `u`, within tolerance `1e-9`. Supported: m = 2, 3, 5.
pub fn quadratic_unit_check(m: i64, exponents: (i64, i64)) -> Result<bool, CohomologyError> {
    let (u1, u2): (f64, f64) = match m {
        2 => {
            let s = 2f64.sqrt();
            (1.0 + s, s - 1.0) // |1 - sqrt(2)|
        }
        3 => {
            let s = 3f64.sqrt();
            (2.0 + s, 2.0 - s)
        }
        5 => {
            let s = 5f64.sqrt();
            ((1.0 + s) / 2.0, (s - 1.0) / 2.0) // |(1 - sqrt(5))/2|
        }
        other => return Err(CohomologyError::UnsupportedField(other)),
    };
    let (n1, n2) = exponents;
    let product = u1.powi(n1 as i32) * u2.powi(n2 as i32);
    Ok((product - 1.0).abs() < 1e-9)
}
