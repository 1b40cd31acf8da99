//! The quiver region `(6s+1)α² < 1` and the heart generated by
//! `O(−2)[3], O(−1)[2], O[1], O(1)`.

use serde::Serialize;

use crate::chern::ChernCharacter;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::slope::SlicePoint;

/// Multiplicities `(n₋₃, n₋₂, n₋₁, n₀)` of the four generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DimensionVector(pub [u64; 4]);

/// Characters of `O(−2)[3], O(−1)[2], O[1], O(1)` in that order.
pub fn generators() -> [ChernCharacter; 4] {
    [
        ChernCharacter::from_fracs([(-1, 1), (2, 1), (-2, 1), (4, 3)]),
        ChernCharacter::from_fracs([(1, 1), (-1, 1), (1, 2), (-1, 6)]),
        ChernCharacter::from_ints([-1, 0, 0, 0]),
        ChernCharacter::from_fracs([(1, 1), (1, 1), (1, 2), (1, 6)]),
    ]
}

/// Coefficients of `v` in the generator basis, exact.
pub fn generator_coordinates(v: &ChernCharacter) -> [Rational; 4] {
    let gens = generators();
    // Augmented system: row i is ch_i, column j is generator j.
    let mut m: Vec<Vec<Rational>> = (0..4)
        .map(|i| {
            let mut row: Vec<Rational> = gens.iter().map(|g| g[i].clone()).collect();
            row.push(v[i].clone());
            row
        })
        .collect();
    for col in 0..4 {
        let pivot = (col..4)
            .find(|&r| !m[r][col].is_zero())
            .expect("generator characters are linearly independent");
        m.swap(col, pivot);
        let inv = m[col][col].recip().expect("nonzero pivot");
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..4 {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, p) in m[r].iter_mut().zip(pivot_row.iter()).skip(col) {
                    *x -= &(&factor * p);
                }
            }
        }
    }
    [m[0][4].clone(), m[1][4].clone(), m[2][4].clone(), m[3][4].clone()]
}

pub fn dim_vector(v: &ChernCharacter) -> Result<DimensionVector> {
    let coords = generator_coordinates(v);
    let mut n = [0u64; 4];
    for (slot, x) in n.iter_mut().zip(coords.iter()) {
        if !x.is_integer() || x.is_negative() {
            return Err(Error::NotInHeart(format!(
                "{v} has generator coordinates ({}, {}, {}, {})",
                coords[0], coords[1], coords[2], coords[3]
            )));
        }
        *slot = x
            .floor_i64()
            .and_then(|k| u64::try_from(k).ok())
            .ok_or_else(|| Error::NotInHeart(format!("{v} has an oversized coordinate {x}")))?;
    }
    Ok(DimensionVector(n))
}

pub fn chern_from_dims(n: &DimensionVector) -> ChernCharacter {
    let mut out = ChernCharacter::zero();
    for (k, g) in n.0.iter().zip(generators().iter()) {
        let k = Rational::from_bigint((*k).into());
        out = out + (&k * g);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaWeight(pub [Rational; 4]);

impl ThetaWeight {
    pub fn pair(&self, n: &DimensionVector) -> Rational {
        self.0
            .iter()
            .zip(n.0.iter())
            .map(|(t, k)| t * Rational::from_bigint((*k).into()))
            .sum()
    }
}

/// `(8 − 2k, −1 + k, 0, 1 − k)` with `k = (6s+1)α²`.
pub fn theta(p: &SlicePoint) -> ThetaWeight {
    let k = p.monad_parameter();
    ThetaWeight([
        Rational::from_integer(8) - &k * 2,
        &k - 1,
        Rational::zero(),
        Rational::one() - &k,
    ])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    Inside,
    OnMonadWall,
    Outside,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegionVerdict {
    pub region: Region,
    /// `(6s+1)α²`.
    pub monad_parameter: Rational,
    pub dim_vector: Option<DimensionVector>,
    /// `θ·(0,0,0,1)`, the pairing with the forced `O(1)` subcomplex.
    pub forced_sub_pairing: Rational,
    pub message: String,
}

impl RegionVerdict {
    pub fn is_empty_moduli(&self) -> bool {
        self.region == Region::Inside
    }
}

pub const INSIDE_MESSAGE: &str =
    "inside quiver region: wall-free; moduli empty (forced O(1) sub with positive θ-pairing)";
pub const ON_WALL_MESSAGE: &str = "on monad wall; all subcomplex walls coincide here (ch1 = 6·ch3)";
pub const OUTSIDE_MESSAGE: &str = "outside quiver region";

pub fn region_verdict(rank: i64, degree: &Rational, p: &SlicePoint) -> RegionVerdict {
    let k = p.monad_parameter();
    let th = theta(p);
    let forced = th.pair(&DimensionVector([0, 0, 0, 1]));
    let (region, message) = match k.cmp(&Rational::one()) {
        std::cmp::Ordering::Less => (Region::Inside, INSIDE_MESSAGE),
        std::cmp::Ordering::Equal => (Region::OnMonadWall, ON_WALL_MESSAGE),
        std::cmp::Ordering::Greater => (Region::Outside, OUTSIDE_MESSAGE),
    };
    RegionVerdict {
        region,
        monad_parameter: k,
        dim_vector: dim_vector(&ChernCharacter::v(rank, degree)).ok(),
        forced_sub_pairing: forced,
        message: message.to_string(),
    }
}

/// Point-free summary of the innermost chamber for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InnermostChamber {
    pub region: String,
    pub bounding_wall_constant: Rational,
    pub dim_vector: Option<DimensionVector>,
    pub forced_subobject: DimensionVector,
    pub verdict: String,
}

pub fn innermost_chamber(rank: i64, degree: &Rational) -> InnermostChamber {
    InnermostChamber {
        region: "(6s+1)α² < 1".to_string(),
        bounding_wall_constant: Rational::new(1, 6),
        dim_vector: dim_vector(&ChernCharacter::v(rank, degree)).ok(),
        forced_subobject: DimensionVector([0, 0, 0, 1]),
        verdict: "wall-free; moduli empty".to_string(),
    }
}
