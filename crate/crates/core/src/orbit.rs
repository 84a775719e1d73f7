//! Breadth-first enumeration of the images of a line through two of the
//! points under repeated Cremona transformations.

use std::collections::{HashMap, VecDeque};

use crate::cremona::{cremona_curve, curve_invariants};
use crate::system::{CurveClass, PointPair};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitClass {
    /// Canonical representative: multiplicities sorted non-increasing.
    pub class: CurveClass,
    pub invariants: (i64, i64),
    /// Reachable from the line by a path on which every step raises the
    /// degree.
    pub monotone: bool,
    /// BFS distance from the line.
    pub depth: usize,
}

#[derive(Clone, Debug)]
pub struct LineOrbit {
    pub points: usize,
    pub max_degree: i64,
    pub classes: Vec<OrbitClass>,
}

impl LineOrbit {
    pub fn contains(&self, c: &CurveClass) -> bool {
        let canon = c.canonical();
        self.classes.iter().any(|o| o.class == canon)
    }
}

fn quadruples(n: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

/// Closure of the line class `l_3(1, 1^2)` on `points` points under Cremona
/// transformations on every 4-subset. Images with degree above `max_degree`
/// are pruned, as are non-effective images (degree below one or a negative
/// multiplicity, which arise when the line is one of the base lines).
pub fn line_orbit(points: usize, max_degree: i64) -> LineOrbit {
    let mut classes: Vec<OrbitClass> = Vec::new();
    let mut index: HashMap<CurveClass, usize> = HashMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();

    if points < 2 || max_degree < 1 {
        return LineOrbit {
            points,
            max_degree,
            classes,
        };
    }

    let line = CurveClass::line_through(PointPair(0, 1), points).canonical();
    index.insert(line.clone(), 0);
    classes.push(OrbitClass {
        invariants: curve_invariants(&line),
        class: line,
        monotone: true,
        depth: 0,
    });

    let quads = quadruples(points);
    let mut queue = VecDeque::from([0usize]);
    while let Some(cur) = queue.pop_front() {
        let (from, depth) = (classes[cur].class.clone(), classes[cur].depth);
        for q in &quads {
            let img = cremona_curve(&from, *q).expect("plain class with valid indices");
            if img.degree < 1 || img.degree > max_degree || img.mults.iter().any(|&m| m < 0) {
                continue;
            }
            let img = img.canonical();
            let to = match index.get(&img) {
                Some(&i) => i,
                None => {
                    let i = classes.len();
                    index.insert(img.clone(), i);
                    classes.push(OrbitClass {
                        invariants: curve_invariants(&img),
                        class: img,
                        monotone: false,
                        depth: depth + 1,
                    });
                    queue.push_back(i);
                    i
                }
            };
            if to != cur {
                edges.push((cur, to));
            }
        }
    }

    edges.sort_unstable();
    edges.dedup();
    let mut changed = true;
    while changed {
        changed = false;
        for &(a, b) in &edges {
            if classes[a].monotone
                && !classes[b].monotone
                && classes[b].class.degree > classes[a].class.degree
            {
                classes[b].monotone = true;
                changed = true;
            }
        }
    }

    LineOrbit {
        points,
        max_degree,
        classes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_points_reach_the_twisted_cubic() {
        let orbit = line_orbit(6, 3);
        assert!(orbit.contains(&CurveClass::new(3, vec![1; 6])));
        let cubic = orbit.classes.iter().find(|o| o.class.degree == 3).unwrap();
        assert!(cubic.monotone);
        assert_eq!(cubic.depth, 1);
    }

    #[test]
    fn quartic_through_eight_points_is_not_reached() {
        let orbit = line_orbit(8, 4);
        assert!(!orbit.contains(&CurveClass::new(4, vec![1; 8])));
    }

    #[test]
    fn every_member_has_line_invariants() {
        for r in 2..=9 {
            for o in &line_orbit(r, 15).classes {
                assert_eq!(o.invariants, (0, 0), "{}", o.class);
            }
        }
    }

    #[test]
    fn degree_one_cap_yields_only_the_line() {
        let orbit = line_orbit(8, 1);
        assert_eq!(orbit.classes.len(), 1);
        assert_eq!(orbit.classes[0].class.degree, 1);
    }

    #[test]
    fn few_points_stay_trivial() {
        assert_eq!(line_orbit(5, 10).classes.len(), 1);
        assert!(line_orbit(1, 10).classes.is_empty());
    }
}
