//! Value types for linear systems, curve classes and divisor classes on the
//! blow-up of P^3 at `r` points, together with the basic numerical
//! functionals (virtual and expected dimension, intersection numbers).
//!
//! Point indices are 0-based throughout the library.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)` for integer `n`, zero whenever `n < k`.
pub fn binomial(n: i64, k: u32) -> i64 {
    if n < k as i64 {
        return 0;
    }
    let mut acc: i64 = 1;
    for i in 0..k as i64 {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `L_3(d, m_1, ..., m_r)`: degree-`d` surfaces with multiplicity at least
/// `m_i` at the `i`-th point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearSystem {
    pub degree: i64,
    pub mults: Vec<i64>,
}

impl LinearSystem {
    pub fn new(degree: i64, mults: impl Into<Vec<i64>>) -> Self {
        LinearSystem {
            degree,
            mults: mults.into(),
        }
    }

    /// The homogeneous system `L_3(d, m^r)`.
    pub fn homogeneous(degree: i64, mult: i64, points: usize) -> Self {
        LinearSystem::new(degree, vec![mult; points])
    }

    pub fn num_points(&self) -> usize {
        self.mults.len()
    }

    /// Canonical form: multiplicities sorted non-increasing, zeros dropped.
    /// Negative entries are kept; the reduction procedure deals with them.
    pub fn normalize(&self) -> LinearSystem {
        let mut mults: Vec<i64> = self.mults.iter().copied().filter(|&m| m != 0).collect();
        mults.sort_unstable_by(|a, b| b.cmp(a));
        LinearSystem {
            degree: self.degree,
            mults,
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.mults.iter().all(|&m| m != 0) && self.mults.windows(2).all(|w| w[0] >= w[1])
    }

    /// `v(L) = C(d+3,3) - sum C(m_i+2,3) - 1`; multiplicities `<= 0` impose
    /// nothing.
    pub fn virtual_dimension(&self) -> Result<i64> {
        if self.degree < 0 {
            return Err(Error::NegativeDegree(self.degree));
        }
        let conditions: i64 = self.mults.iter().map(|&m| binomial(m + 2, 3)).sum();
        Ok(binomial(self.degree + 3, 3) - conditions - 1)
    }

    /// `e(L) = max(v(L), -1)`. A negative degree yields `-1`.
    pub fn expected_dimension(&self) -> i64 {
        match self.virtual_dimension() {
            Ok(v) => v.max(-1),
            Err(_) => -1,
        }
    }

    /// Intersection number `d*delta - sum mu_i m_i` with a curve class that
    /// does not meet the base lines of a Cremona transformation.
    pub fn intersect_curve(&self, curve: &CurveClass) -> Result<i64> {
        if curve.incidences.is_some() {
            return Err(Error::IncidencePresent);
        }
        if curve.mults.len() != self.mults.len() {
            return Err(Error::PointCountMismatch {
                left: self.mults.len(),
                right: curve.mults.len(),
            });
        }
        let dot: i64 = self
            .mults
            .iter()
            .zip(&curve.mults)
            .map(|(m, mu)| m * mu)
            .sum();
        Ok(self.degree * curve.degree - dot)
    }

    /// `t_ij = m_i + m_j - d`, the excess of the system along the line
    /// through points `i` and `j`.
    pub fn line_excess(&self, pair: PointPair) -> i64 {
        self.mults[pair.0] + self.mults[pair.1] - self.degree
    }

    /// Diagnostic only: the plane through points `i, j, k` is a fixed
    /// component when `2d - m_i - m_j - m_k < 0`.
    pub fn has_fixed_plane(&self, i: usize, j: usize, k: usize) -> Result<bool> {
        let idx = [i, j, k];
        check_indices(&idx, self.num_points())?;
        Ok(2 * self.degree - self.mults[i] - self.mults[j] - self.mults[k] < 0)
    }

    pub fn to_divisor(&self) -> DivisorClass {
        DivisorClass::new(self.degree, self.mults.clone())
    }

    /// Zero-padded to at least `n` points.
    pub(crate) fn padded(&self, n: usize) -> LinearSystem {
        let mut mults = self.mults.clone();
        if mults.len() < n {
            mults.resize(n, 0);
        }
        LinearSystem::new(self.degree, mults)
    }
}

pub(crate) fn check_indices(idx: &[usize], points: usize) -> Result<()> {
    for (pos, &i) in idx.iter().enumerate() {
        if i >= points {
            return Err(Error::IndexOutOfRange { index: i, points });
        }
        if idx[..pos].contains(&i) {
            return Err(Error::RepeatedIndex(idx.to_vec()));
        }
    }
    Ok(())
}

/// Unordered pair of point indices, stored with `.0 < .1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointPair(pub usize, pub usize);

impl PointPair {
    pub fn new(i: usize, j: usize) -> Self {
        if i <= j {
            PointPair(i, j)
        } else {
            PointPair(j, i)
        }
    }

    /// All pairs `i < j` among `n` points in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = PointPair> {
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| PointPair(i, j)))
    }

    /// The complementary pair inside `{0, 1, 2, 3}`.
    pub fn complement_in_four(self) -> PointPair {
        let mut rest = (0..4).filter(|&x| x != self.0 && x != self.1);
        PointPair(rest.next().unwrap(), rest.next().unwrap())
    }
}

/// Curve class `l_3(delta, mu_1..mu_r, beta_12..beta_34)`. The optional
/// incidence numbers count intersections with the six lines joining the
/// first four points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveClass {
    pub degree: i64,
    pub mults: Vec<i64>,
    pub incidences: Option<BTreeMap<PointPair, i64>>,
}

impl CurveClass {
    pub fn new(degree: i64, mults: impl Into<Vec<i64>>) -> Self {
        CurveClass {
            degree,
            mults: mults.into(),
            incidences: None,
        }
    }

    /// Missing pairs among the first four points are filled with zero, so a
    /// class with incidence data always carries all six entries.
    pub fn with_incidences(
        degree: i64,
        mults: impl Into<Vec<i64>>,
        mut incidences: BTreeMap<PointPair, i64>,
    ) -> Result<Self> {
        if let Some(p) = incidences.keys().find(|p| p.1 >= 4 || p.0 == p.1) {
            return Err(Error::BadIncidencePair(p.0, p.1));
        }
        for pair in PointPair::all(4) {
            incidences.entry(pair).or_insert(0);
        }
        Ok(CurveClass {
            degree,
            mults: mults.into(),
            incidences: Some(incidences),
        })
    }

    /// The line through points `i` and `j` among `points` points.
    pub fn line_through(pair: PointPair, points: usize) -> Self {
        let mut mults = vec![0; points];
        mults[pair.0] = 1;
        mults[pair.1] = 1;
        CurveClass::new(1, mults)
    }

    pub fn incidence(&self, pair: PointPair) -> i64 {
        self.incidences
            .as_ref()
            .and_then(|m| m.get(&pair).copied())
            .unwrap_or(0)
    }

    /// Multiplicities sorted non-increasing; point count is kept.
    pub fn canonical(&self) -> CurveClass {
        let mut c = self.clone();
        c.mults.sort_unstable_by(|a, b| b.cmp(a));
        c
    }
}

/// Integer coordinates `(a; b_1..b_r)` of the class `aH - sum b_i E_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    pub h_coeff: i64,
    pub e_coeffs: Vec<i64>,
}

impl DivisorClass {
    pub fn new(h_coeff: i64, e_coeffs: impl Into<Vec<i64>>) -> Self {
        DivisorClass {
            h_coeff,
            e_coeffs: e_coeffs.into(),
        }
    }

    /// Canonical class `K = -4H + 2 sum E_i` of the blow-up at `r` points,
    /// i.e. coordinates `(-4; -2, ..., -2)`, so that `L - K = (d+4; m_i+2)`.
    pub fn canonical(points: usize) -> Self {
        DivisorClass::new(-4, vec![-2; points])
    }

    fn zip_with(&self, other: &DivisorClass, f: impl Fn(i64, i64) -> i64) -> Result<Self> {
        if self.e_coeffs.len() != other.e_coeffs.len() {
            return Err(Error::PointCountMismatch {
                left: self.e_coeffs.len(),
                right: other.e_coeffs.len(),
            });
        }
        Ok(DivisorClass {
            h_coeff: f(self.h_coeff, other.h_coeff),
            e_coeffs: self
                .e_coeffs
                .iter()
                .zip(&other.e_coeffs)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &DivisorClass) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &DivisorClass) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }
}

impl From<&LinearSystem> for DivisorClass {
    fn from(l: &LinearSystem) -> Self {
        l.to_divisor()
    }
}

/// Triple intersection on the blow-up: `H^3 = 1`, `E_i^3 = 1` in these
/// coordinates, mixed monomials vanish.
pub fn triple_product(a: &DivisorClass, b: &DivisorClass, c: &DivisorClass) -> Result<i64> {
    let n = a.e_coeffs.len();
    for other in [b, c] {
        if other.e_coeffs.len() != n {
            return Err(Error::PointCountMismatch {
                left: n,
                right: other.e_coeffs.len(),
            });
        }
    }
    let exceptional: i64 = (0..n)
        .map(|i| a.e_coeffs[i] * b.e_coeffs[i] * c.e_coeffs[i])
        .sum();
    Ok(a.h_coeff * b.h_coeff * c.h_coeff - exceptional)
}

/// Formal 1-cycle `sum w_ij l_ij` on the lines joining pairs of points.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LineCycle {
    pub entries: BTreeMap<PointPair, i64>,
}

impl LineCycle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, pair: PointPair) -> i64 {
        self.entries.get(&pair).copied().unwrap_or(0)
    }

    pub fn set(&mut self, pair: PointPair, weight: i64) {
        self.entries.insert(pair, weight);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (PointPair, i64)> + '_ {
        self.entries.iter().map(|(&p, &w)| (p, w))
    }
}

impl fmt::Display for PointPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "l{}{}", self.0 + 1, self.1 + 1)
    }
}
