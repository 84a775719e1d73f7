//! The conjecture-driven dimension procedure: quadric removal, corrections
//! from multiple base lines, and speciality verdicts.

use serde::{Deserialize, Serialize};

use crate::cremona::{
    is_standard_form, reduce_in_place, Outcome, ReductionStep, ReductionTrace, StepKind,
};
use crate::error::{Error, Result};
use crate::system::{binomial, triple_product, DivisorClass, LineCycle, LinearSystem, PointPair};

/// `Gamma(L)`: every pair of points whose line has excess `t_ij >= 1`,
/// weighted by `t_ij`.
pub fn gamma_cycle(l: &LinearSystem) -> LineCycle {
    let mut cycle = LineCycle::new();
    for p in PointPair::all(l.num_points()) {
        let t = l.line_excess(p);
        if t >= 1 {
            cycle.set(p, t);
        }
    }
    cycle
}

/// `sum_{t_ij >= 2} C(t_ij + 1, 3)` over all pairs of points.
pub fn speciality_correction(l: &LinearSystem) -> i64 {
    PointPair::all(l.num_points())
        .map(|p| l.line_excess(p))
        .filter(|&t| t >= 2)
        .map(|t| binomial(t + 1, 3))
        .sum()
}

/// Guaranteed excess `C(t+1, 3)` of `dim L - v(L)` contributed by the line
/// through `pair` when `t = m_i + m_j - d >= 2` and `L` is non-empty.
pub fn line_speciality_bound(l: &LinearSystem, pair: PointPair) -> Result<i64> {
    crate::system::check_indices(&[pair.0, pair.1], l.num_points())?;
    let t = l.line_excess(pair);
    if t < 2 {
        return Err(Error::LineExcessTooSmall(t));
    }
    Ok(binomial(t + 1, 3))
}

/// Indices of the nine largest multiplicities (ties broken by position).
fn nine_largest(l: &LinearSystem) -> Result<Vec<usize>> {
    if l.num_points() < 9 {
        return Err(Error::TooFewPointsForQuadric(l.num_points()));
    }
    let mut idx: Vec<usize> = (0..l.num_points()).collect();
    idx.sort_by(|&a, &b| l.mults[b].cmp(&l.mults[a]));
    idx.truncate(9);
    idx.sort_unstable();
    Ok(idx)
}

fn triple_for(l: &LinearSystem, nine: &[usize]) -> i64 {
    let r = l.num_points();
    let mut q = vec![0; r];
    for &i in nine {
        q[i] = 1;
    }
    let q = DivisorClass::new(2, q);
    let lc = l.to_divisor();
    let l_minus_q = lc.sub(&q).expect("same point count");
    let l_minus_k = lc
        .sub(&DivisorClass::canonical(r))
        .expect("same point count");
    triple_product(&q, &l_minus_q, &l_minus_k).expect("same point count")
}

/// `Q (L - Q) (L - K)` for the quadric `Q` through the nine points of largest
/// multiplicity.
pub fn quadric_triple(l: &LinearSystem) -> Result<i64> {
    let nine = nine_largest(l)?;
    Ok(triple_for(l, &nine))
}

/// The quadric removal that applies to `l`, if any: nine points of positive
/// multiplicity with negative triple product.
fn quadric_step(l: &LinearSystem) -> Option<StepKind> {
    let nine = nine_largest(l).ok()?;
    if nine.iter().any(|&i| l.mults[i] < 1) || triple_for(l, &nine) >= 0 {
        return None;
    }
    Some(StepKind::RemoveQuadric { indices: nine })
}

/// Removes quadrics from a standard-form system while the triple product is
/// negative. The loop also stops as soon as a subtraction leaves standard
/// form, which only happens for systems that are in fact empty.
pub fn remove_quadrics(l: &LinearSystem) -> (LinearSystem, Vec<ReductionStep>) {
    let mut cur = l.normalize();
    let mut steps = Vec::new();
    while let Some(kind) = quadric_step(&cur) {
        let after = kind.apply(&cur).expect("indices in range");
        steps.push(ReductionStep {
            kind,
            before: cur.clone(),
            after: after.clone(),
        });
        cur = after;
        if !is_standard_form(&cur) {
            break;
        }
    }
    (cur, steps)
}

/// Result of the dimension procedure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    /// Conjectured projective dimension, `-1` for the empty system.
    pub dimension: i64,
    /// `v + corrections` of the final system before clamping at `-1`;
    /// absent when the reduction proved emptiness.
    pub raw_value: Option<i64>,
    /// The raw value was below `-1` and got clamped.
    pub clamped: bool,
    pub trace: ReductionTrace,
}

/// Reduce to standard form, remove quadrics, then return
/// `v(L) + sum_{t_ij >= 2} C(t_ij + 1, 3)` clamped at `-1`.
///
/// After every quadric removal the reduction loop runs again, so a removal
/// that leaves standard form is followed by further Cremona steps.
pub fn conjectured_dimension(l: &LinearSystem) -> DimensionReport {
    let start = l.normalize();
    let mut cur = start.clone();
    let mut steps = Vec::new();
    let outcome = loop {
        let outcome = reduce_in_place(&mut cur, &mut steps);
        if outcome != Outcome::Standard {
            break outcome;
        }
        match quadric_step(&cur) {
            Some(kind) => {
                let after = kind.apply(&cur).expect("indices in range");
                steps.push(ReductionStep {
                    kind,
                    before: cur.clone(),
                    after: after.clone(),
                });
                cur = after;
            }
            None => break outcome,
        }
    };
    let trace = ReductionTrace {
        start,
        steps,
        final_system: cur,
        outcome,
    };
    if trace.is_empty_system() {
        return DimensionReport {
            dimension: -1,
            raw_value: None,
            clamped: false,
            trace,
        };
    }
    let fin = &trace.final_system;
    let raw =
        fin.virtual_dimension().expect("standard form has d >= 0") + speciality_correction(fin);
    DimensionReport {
        dimension: raw.max(-1),
        raw_value: Some(raw),
        clamped: raw < -1,
        trace,
    }
}

/// `(special, speciality)` with speciality `= dim - e(L)`.
pub fn is_special(l: &LinearSystem) -> (bool, i64) {
    let dim = conjectured_dimension(l).dimension;
    let speciality = dim - l.expected_dimension();
    (dim >= 0 && speciality > 0, speciality)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Empty,
    Special,
    NonSpecial,
    ProcedureRequired,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Empty => "empty",
            Verdict::Special => "special",
            Verdict::NonSpecial => "non_special",
            Verdict::ProcedureRequired => "procedure_required",
        })
    }
}

/// Classification of `L_3(d, m^r)`:
/// empty for `d <= 2m - 1` and `r >= 8`; for `d >= 2m` special exactly when
/// `r = 9` and `2(d+1)^2 < 9m(m+1)`; otherwise the procedure decides.
pub fn classify_homogeneous(d: i64, m: i64, r: usize) -> Verdict {
    if d < 2 * m {
        if r >= 8 {
            Verdict::Empty
        } else {
            Verdict::ProcedureRequired
        }
    } else if r == 9 && 2 * (d + 1) * (d + 1) < 9 * m * (m + 1) {
        Verdict::Special
    } else {
        Verdict::NonSpecial
    }
}

/// Data for `L_3(2r, r^8, r_1, ..., r_n)` with `r = sum r_i`, the system
/// spanned by multiples of quadrics through eight common points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricPencil {
    pub system: LinearSystem,
    /// Always 0: the system is the single divisor `sum r_i Q_i`.
    pub dimension: i64,
    /// `sum (r_i - C(r_i + 2, 3))`.
    pub virtual_dimension: i64,
    pub special: bool,
}

pub fn quadric_pencil_dimension(weights: &[i64]) -> QuadricPencil {
    let r: i64 = weights.iter().sum();
    let mut mults = vec![r; 8];
    mults.extend_from_slice(weights);
    let v: i64 = weights.iter().map(|&ri| ri - binomial(ri + 2, 3)).sum();
    QuadricPencil {
        system: LinearSystem::new(2 * r, mults).normalize(),
        dimension: 0,
        virtual_dimension: v,
        special: v < 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> LinearSystem {
        s.parse().unwrap()
    }

    #[test]
    fn gamma_cycles() {
        let g = gamma_cycle(&sys("6 6 2^4"));
        assert_eq!(g.len(), 4);
        for j in 1..5 {
            assert_eq!(g.get(PointPair(0, j)), 2);
        }
        let g = gamma_cycle(&sys("14 10 6^8"));
        assert_eq!(g.len(), 8);
        assert!(g.iter().all(|(p, t)| p.0 == 0 && t == 2));
        assert!(gamma_cycle(&LinearSystem::homogeneous(3, 1, 7)).is_empty());
    }

    #[test]
    fn corrections() {
        assert_eq!(speciality_correction(&sys("6 6 2^4")), 4);
        assert_eq!(speciality_correction(&sys("14 10 6^8")), 8);
        assert_eq!(speciality_correction(&sys("8 4^9")), 0);
    }

    #[test]
    fn quadric_triples() {
        assert_eq!(quadric_triple(&sys("16 11 7^8")), Ok(-2));
        assert_eq!(quadric_triple(&sys("8 4^9")), Ok(-18));
        assert_eq!(quadric_triple(&sys("2 1^9")), Ok(0));
        assert_eq!(
            quadric_triple(&sys("6 6 2^4")),
            Err(Error::TooFewPointsForQuadric(5))
        );
    }

    #[test]
    fn quadric_removal() {
        let (fin, steps) = remove_quadrics(&sys("16 11 7^8"));
        assert_eq!(fin, sys("14 10 6^8"));
        assert_eq!(steps.len(), 1);

        let (fin, steps) = remove_quadrics(&sys("8 4^9"));
        assert_eq!(fin, sys("2 1^9"));
        let triples: Vec<i64> = steps
            .iter()
            .map(|s| quadric_triple(&s.before).unwrap())
            .collect();
        assert_eq!(triples, [-18, -10, -4]);
        assert_eq!(quadric_triple(&fin), Ok(0));

        let (fin, steps) = remove_quadrics(&sys("6 6 2^4"));
        assert_eq!(fin, sys("6 6 2^4"));
        assert!(steps.is_empty());
    }

    #[test]
    fn dimensions_of_worked_examples() {
        assert_eq!(conjectured_dimension(&sys("7 4^6")).dimension, 3);
        assert_eq!(conjectured_dimension(&sys("12 7^6")).dimension, 0);
        assert_eq!(conjectured_dimension(&sys("10 6^5")).dimension, 15);
        assert_eq!(conjectured_dimension(&sys("16 11 7^8")).dimension, 19);
        assert_eq!(conjectured_dimension(&sys("3 3^3")).dimension, 0);
        assert_eq!(conjectured_dimension(&sys("8 4^9")).dimension, 0);
        assert_eq!(conjectured_dimension(&sys("5 3^8")).dimension, -1);
    }

    #[test]
    fn speciality_verdicts() {
        assert_eq!(is_special(&sys("10 6^5")), (true, 10));
        assert_eq!(is_special(&sys("16 11 7^8")), (true, 9));
        assert_eq!(is_special(&sys("2 1^4")), (false, 0));
        assert_eq!(is_special(&sys("5 3^8")), (false, 0));
    }

    #[test]
    fn line_bounds() {
        assert_eq!(
            line_speciality_bound(&sys("6 6 2^4"), PointPair(0, 1)),
            Ok(1)
        );
        assert_eq!(line_speciality_bound(&sys("4 3 3"), PointPair(0, 1)), Ok(1));
        assert_eq!(line_speciality_bound(&sys("3 3 3"), PointPair(0, 1)), Ok(4));
        assert_eq!(
            line_speciality_bound(&sys("6 2^4"), PointPair(0, 1)),
            Err(Error::LineExcessTooSmall(-2))
        );
    }

    #[test]
    fn naive_correction_overshoots_off_standard_form() {
        let l = sys("3 3^3");
        let naive = l.virtual_dimension().unwrap() + speciality_correction(&l);
        assert_eq!(naive, 1);
        let report = conjectured_dimension(&l);
        assert_eq!(report.dimension, 0);
        assert_eq!(report.trace.final_system, sys("0"));
    }

    #[test]
    fn homogeneous_verdicts() {
        assert_eq!(classify_homogeneous(5, 3, 8), Verdict::Empty);
        assert_eq!(classify_homogeneous(20, 10, 9), Verdict::Special);
        assert_eq!(classify_homogeneous(12, 5, 10), Verdict::NonSpecial);
        assert_eq!(classify_homogeneous(8, 4, 8), Verdict::NonSpecial);
        assert_eq!(classify_homogeneous(5, 3, 6), Verdict::ProcedureRequired);
    }

    #[test]
    fn quadric_pencils() {
        let p = quadric_pencil_dimension(&[1, 1]);
        assert_eq!((p.dimension, p.virtual_dimension, p.special), (0, 0, false));
        assert_eq!(p.system, sys("4 2^8 1^2"));
        let p = quadric_pencil_dimension(&[2]);
        assert_eq!((p.dimension, p.virtual_dimension, p.special), (0, -2, true));
        assert_eq!(p.virtual_dimension, p.system.virtual_dimension().unwrap());
        let p = quadric_pencil_dimension(&[1]);
        assert_eq!((p.dimension, p.virtual_dimension), (0, 0));
        for w in [vec![1, 2], vec![3], vec![1, 1, 1], vec![2, 3, 1]] {
            let p = quadric_pencil_dimension(&w);
            assert_eq!(p.virtual_dimension, p.system.virtual_dimension().unwrap());
        }
    }
}
