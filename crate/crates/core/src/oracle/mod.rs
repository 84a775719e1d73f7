//! Ground-truth dimensions: the corank of the fat-point conditions matrix at
//! random points over a large prime field.
//!
//! General position is realized probabilistically. Each seed draws its own
//! configuration of points and the maximal rank over the seeds is used; seeds
//! that disagree are reported rather than averaged away.

mod field;
mod matrix;
mod monomial;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use field::{PrimeField, MERSENNE_31};
pub use matrix::{conditions_matrix, ConditionsMatrix, ProjectivePoint};
pub use monomial::{derivative_indices, monomial_basis};

use crate::cremona::cremona_system;
use crate::error::{Error, Result};
use crate::system::{binomial, LinearSystem};

/// Default characteristic, `2^31 - 1`.
pub const DEFAULT_PRIME: u64 = MERSENNE_31;
pub const DEFAULT_SEEDS: [u64; 3] = [1, 2, 3];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointMode {
    /// Every point uniform in the affine chart `x_0 = 1`.
    #[default]
    AllRandom,
    /// The first four points are the coordinate vertices, the rest random
    /// with all coordinates nonzero.
    FundamentalPlusRandom,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub prime: u64,
    pub seeds: Vec<u64>,
    pub point_mode: PointMode,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            prime: DEFAULT_PRIME,
            seeds: DEFAULT_SEEDS.to_vec(),
            point_mode: PointMode::AllRandom,
        }
    }
}

impl OracleConfig {
    pub fn with_mode(mut self, mode: PointMode) -> Self {
        self.point_mode = mode;
        self
    }
}

/// Draws `n` pairwise distinct points for one seed.
pub fn sample_points(
    n: usize,
    field: &PrimeField,
    mode: PointMode,
    seed: u64,
) -> Vec<ProjectivePoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = field.modulus();
    let mut out: Vec<ProjectivePoint> = Vec::with_capacity(n);
    if mode == PointMode::FundamentalPlusRandom {
        out.extend((0..n.min(4)).map(ProjectivePoint::vertex));
    }
    while out.len() < n {
        let pt = match mode {
            PointMode::AllRandom => ProjectivePoint::affine(
                rng.gen_range(0..p),
                rng.gen_range(0..p),
                rng.gen_range(0..p),
                field,
            ),
            PointMode::FundamentalPlusRandom => ProjectivePoint::affine(
                rng.gen_range(1..p),
                rng.gen_range(1..p),
                rng.gen_range(1..p),
                field,
            ),
        };
        if !out.contains(&pt) {
            out.push(pt);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    /// `C(d+3, 3) - max rank - 1`; `-1` means empty.
    pub dimension: i64,
    pub rank: usize,
    pub ranks: Vec<usize>,
    pub rows: usize,
    pub cols: usize,
    /// Set when the seeds produced different ranks.
    pub warning: Option<String>,
}

impl OracleReport {
    pub fn seeds_agree(&self) -> bool {
        self.warning.is_none()
    }
}

/// True projective dimension of `l` at general points. Point `i` carries
/// multiplicity `l.mults[i]`; non-positive multiplicities impose nothing and
/// a negative degree gives the empty system.
pub fn oracle_dimension(l: &LinearSystem, config: &OracleConfig) -> Result<OracleReport> {
    if config.seeds.is_empty() {
        return Err(Error::NoSeeds);
    }
    let field = PrimeField::new(config.prime)?;
    let mut ranks = Vec::with_capacity(config.seeds.len());
    let (mut rows, mut cols) = (0, 0);
    for &seed in &config.seeds {
        let points = sample_points(l.num_points(), &field, config.point_mode, seed);
        let m = conditions_matrix(l, &points, config.prime)?;
        rows = m.n_rows;
        cols = m.n_cols;
        ranks.push(m.rank());
    }
    let rank = *ranks.iter().max().expect("at least one seed");
    let warning = if ranks.iter().any(|&r| r != rank) {
        Some(format!("ranks differ across seeds: {ranks:?}"))
    } else {
        None
    };
    Ok(OracleReport {
        dimension: binomial(l.degree + 3, 3) - rank as i64 - 1,
        rank,
        ranks,
        rows,
        cols,
        warning,
    })
}

/// `h^1(L) = dim L - e(L)` for non-empty systems, 0 otherwise.
pub fn oracle_h1(l: &LinearSystem, config: &OracleConfig) -> Result<i64> {
    let dim = oracle_dimension(l, config)?.dimension;
    Ok(if dim >= 0 {
        dim - l.expected_dimension()
    } else {
        0
    })
}

/// With the first four points at the coordinate vertices the transformation
/// is literally `x_i -> 1/x_i`; checks that `L` and its image have the same
/// dimension.
pub fn cremona_equivariance_check(l: &LinearSystem, config: &OracleConfig) -> Result<bool> {
    let cfg = config.clone().with_mode(PointMode::FundamentalPlusRandom);
    let l = l.padded(4);
    let image = cremona_system(&l, [0, 1, 2, 3])?;
    Ok(oracle_dimension(&l, &cfg)?.dimension == oracle_dimension(&image, &cfg)?.dimension)
}
