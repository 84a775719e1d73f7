//! The cubic Cremona transformation based at four points, its action on
//! systems, curve classes and line-augmented sheaves, and the reduction of a
//! system to standard form.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::system::{check_indices, CurveClass, LineCycle, LinearSystem, PointPair};

/// `k = 2d - sum of the four selected multiplicities`.
fn cremona_shift(l: &LinearSystem, idx: &[usize; 4]) -> i64 {
    2 * l.degree - idx.iter().map(|&i| l.mults[i]).sum::<i64>()
}

/// Image of `L` under the Cremona transformation based at the four points
/// `idx`: `d -> d + k`, `m_i -> m_i + k` on the selected points. Systems with
/// fewer than four points are padded with zero multiplicities first. The
/// result is not normalized.
pub fn cremona_system(l: &LinearSystem, idx: [usize; 4]) -> Result<LinearSystem> {
    let l = l.padded(4);
    check_indices(&idx, l.num_points())?;
    let k = cremona_shift(&l, &idx);
    let mut out = l;
    out.degree += k;
    for &i in &idx {
        out.mults[i] += k;
    }
    Ok(out)
}

/// Image of a curve class that meets none of the six base lines:
/// `delta -> delta + 2h`, `mu_i -> mu_i + h` with `h = delta - sum mu_i`.
pub fn cremona_curve(c: &CurveClass, idx: [usize; 4]) -> Result<CurveClass> {
    if c.incidences.is_some() {
        return Err(Error::IncidencePresent);
    }
    check_indices(&idx, c.mults.len())?;
    let h = c.degree - idx.iter().map(|&i| c.mults[i]).sum::<i64>();
    let mut out = c.clone();
    out.degree += 2 * h;
    for &i in &idx {
        out.mults[i] += h;
    }
    Ok(out)
}

/// Action on a curve class with incidence numbers, transformation based at
/// points `0..4`. Missing incidence data counts as zero.
pub fn cremona_curve_full(c: &CurveClass) -> Result<CurveClass> {
    if c.mults.len() < 4 {
        return Err(Error::WrongPointCount {
            expected: 4,
            got: c.mults.len(),
        });
    }
    let mu = &c.mults[..4];
    let beta_sum: i64 = PointPair::all(4).map(|p| c.incidence(p)).sum();
    let mu_sum: i64 = mu.iter().sum();

    let mut out = c.clone();
    out.degree = 3 * c.degree - 2 * mu_sum - beta_sum;
    for (r, &mu_r) in mu.iter().enumerate() {
        let others: i64 = mu_sum - mu_r;
        let avoiding: i64 = PointPair::all(4)
            .filter(|p| p.0 != r && p.1 != r)
            .map(|p| c.incidence(p))
            .sum();
        out.mults[r] = c.degree - others - avoiding;
    }
    if c.incidences.is_some() {
        let swapped: BTreeMap<PointPair, i64> = PointPair::all(4)
            .map(|p| (p, c.incidence(p.complement_in_four())))
            .collect();
        out.incidences = Some(swapped);
    }
    Ok(out)
}

/// Transform of `O(d) (x) I_Z (x) I_W` for four points with multiplicities
/// `m` and the six lines joining them with multiplicities `n`:
/// `s = 2d - sum m_i`, `d' = d + s`, `m'_i = m_i + s`,
/// `n'_ij = d - m_i - m_j + n_hk` with `{h, k}` the complementary pair.
pub fn cremona_with_lines(
    degree: i64,
    mults: [i64; 4],
    lines: &LineCycle,
) -> (i64, [i64; 4], LineCycle) {
    let s = 2 * degree - mults.iter().sum::<i64>();
    let new_mults = mults.map(|m| m + s);
    let mut new_lines = LineCycle::new();
    for p in PointPair::all(4) {
        let n = degree - mults[p.0] - mults[p.1] + lines.get(p.complement_in_four());
        new_lines.set(p, n);
    }
    (degree + s, new_mults, new_lines)
}

/// The two polynomials in `(delta, mu)` left unchanged by [`cremona_curve`]:
/// `2 delta - sum mu_i` and `delta^2 - 2 sum mu_i^2 + 3`. Incidence data is
/// ignored.
pub fn curve_invariants(c: &CurveClass) -> (i64, i64) {
    let linear = 2 * c.degree - c.mults.iter().sum::<i64>();
    let quadratic = c.degree * c.degree - 2 * c.mults.iter().map(|m| m * m).sum::<i64>() + 3;
    (linear, quadratic)
}

/// No Cremona transformation lowers the degree and no multiplicity is
/// negative: `d >= 0`, all `m_i >= 0`, and `2d >= m_1 + m_2 + m_3 + m_4` for
/// the four largest multiplicities.
pub fn is_standard_form(l: &LinearSystem) -> bool {
    if l.degree < 0 || l.mults.iter().any(|&m| m < 0) {
        return false;
    }
    let mut top: Vec<i64> = l.mults.clone();
    top.sort_unstable_by(|a, b| b.cmp(a));
    2 * l.degree >= top.iter().take(4).sum::<i64>()
}

/// One step of the dimension procedure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StepKind {
    /// Cremona transformation based at four points.
    Cremona { indices: [usize; 4] },
    /// Remove `alpha` copies of the exceptional divisor over a point whose
    /// multiplicity became `-alpha`.
    RemoveComponent { index: usize, alpha: i64 },
    /// Remove the quadric through nine points.
    RemoveQuadric { indices: Vec<usize> },
}

impl StepKind {
    /// Arrow label: `(i)` Cremona, `(ii)` fixed component, `(iii)` quadric.
    pub fn label(&self) -> &'static str {
        match self {
            StepKind::Cremona { .. } => "(i)",
            StepKind::RemoveComponent { .. } => "(ii)",
            StepKind::RemoveQuadric { .. } => "(iii)",
        }
    }

    /// Apply this step to `before`, producing the normalized image.
    pub fn apply(&self, before: &LinearSystem) -> Result<LinearSystem> {
        match self {
            StepKind::Cremona { indices } => Ok(cremona_system(before, *indices)?.normalize()),
            StepKind::RemoveComponent { index, alpha } => {
                check_indices(&[*index], before.num_points())?;
                let mut after = before.clone();
                after.mults[*index] += alpha;
                Ok(after.normalize())
            }
            StepKind::RemoveQuadric { indices } => {
                check_indices(indices, before.num_points())?;
                let mut after = before.clone();
                after.degree -= 2;
                for &i in indices {
                    after.mults[i] -= 1;
                }
                Ok(after.normalize())
            }
        }
    }
}

/// A recorded step. `after` is always the normalized image of `before`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    #[serde(flatten)]
    pub kind: StepKind,
    pub before: LinearSystem,
    pub after: LinearSystem,
}

/// Why the procedure declared a system empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EmptyReason {
    NegativeDegree,
    MultiplicityExceedsDegree,
}

/// How a reduction ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Standard,
    Empty(EmptyReason),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub start: LinearSystem,
    pub steps: Vec<ReductionStep>,
    pub final_system: LinearSystem,
    pub outcome: Outcome,
}

impl ReductionTrace {
    pub fn is_empty_system(&self) -> bool {
        matches!(self.outcome, Outcome::Empty(_))
    }

    /// Steps grouped the way they are written by hand: consecutive component
    /// removals collapse into a single `(ii)` arrow.
    pub fn arrows(&self) -> Vec<(&'static str, &LinearSystem)> {
        let mut out: Vec<(&'static str, &LinearSystem)> = Vec::new();
        let mut prev_removal = false;
        for step in &self.steps {
            let removal = matches!(step.kind, StepKind::RemoveComponent { .. });
            if removal && prev_removal {
                out.last_mut().expect("previous arrow").1 = &step.after;
            } else {
                out.push((step.kind.label(), &step.after));
            }
            prev_removal = removal;
        }
        out
    }

    /// Replays every step from `start`; returns the system reached.
    pub fn replay(&self) -> Result<LinearSystem> {
        let mut cur = self.start.clone();
        for step in &self.steps {
            cur = step.kind.apply(&cur)?;
        }
        Ok(cur)
    }
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.start.compact())?;
        for (label, sys) in self.arrows() {
            write!(f, "\n->{label} {}", sys.compact())?;
        }
        if let Outcome::Empty(reason) = self.outcome {
            let why = match reason {
                EmptyReason::NegativeDegree => "negative degree",
                EmptyReason::MultiplicityExceedsDegree => "multiplicity exceeds degree",
            };
            write!(f, "\nempty ({why})")?;
        }
        Ok(())
    }
}

fn emptiness(l: &LinearSystem) -> Option<EmptyReason> {
    if l.degree < 0 {
        Some(EmptyReason::NegativeDegree)
    } else if l.mults.iter().any(|&m| m > l.degree) {
        Some(EmptyReason::MultiplicityExceedsDegree)
    } else {
        None
    }
}

/// Runs the Cremona/removal loop on `cur` in place, appending steps.
pub(crate) fn reduce_in_place(cur: &mut LinearSystem, steps: &mut Vec<ReductionStep>) -> Outcome {
    *cur = cur.normalize();
    loop {
        if let Some(reason) = emptiness(cur) {
            return Outcome::Empty(reason);
        }
        let kind = match cur.mults.last() {
            Some(&m) if m < 0 => StepKind::RemoveComponent {
                index: cur.num_points() - 1,
                alpha: -m,
            },
            _ => {
                let padded = cur.padded(4);
                if cremona_shift(&padded, &[0, 1, 2, 3]) >= 0 {
                    return Outcome::Standard;
                }
                StepKind::Cremona {
                    indices: [0, 1, 2, 3],
                }
            }
        };
        let after = kind.apply(cur).expect("indices in range by construction");
        steps.push(ReductionStep {
            kind,
            before: cur.clone(),
            after: after.clone(),
        });
        *cur = after;
    }
}

/// Applies Cremona transformations on the four largest multiplicities while
/// they lower the degree, removing negative multiplicities as they appear.
/// Ends in standard form or with an emptiness verdict. Terminates because
/// every Cremona step strictly lowers the degree.
pub fn reduce_to_standard(l: &LinearSystem) -> ReductionTrace {
    let start = l.normalize();
    let mut cur = start.clone();
    let mut steps = Vec::new();
    let outcome = reduce_in_place(&mut cur, &mut steps);
    ReductionTrace {
        start,
        steps,
        final_system: cur,
        outcome,
    }
}
