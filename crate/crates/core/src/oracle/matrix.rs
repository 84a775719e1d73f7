//! The interpolation matrix of fat-point conditions and its rank over `F_p`.

use strength_reduce::StrengthReducedU64;

use super::field::{Generic, Mersenne31, PrimeField, Reduce, MERSENNE_31};
use super::monomial::{derivative_indices, monomial_basis};
use crate::error::{Error, Result};
use crate::system::LinearSystem;

/// A point of `P^3(F_p)` in normalized coordinates: the first nonzero
/// coordinate (the chart) equals 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: [u64; 4],
    chart: usize,
}

impl ProjectivePoint {
    pub fn new(coords: [u64; 4], field: &PrimeField) -> Option<Self> {
        let p = field.modulus();
        let coords = coords.map(|c| c % p);
        let chart = coords.iter().position(|&c| c != 0)?;
        let inv = field.inv(coords[chart]);
        Some(ProjectivePoint {
            coords: coords.map(|c| field.mul(c, inv)),
            chart,
        })
    }

    /// The affine point `(1 : x : y : z)`.
    pub fn affine(x: u64, y: u64, z: u64, field: &PrimeField) -> Self {
        Self::new([1, x, y, z], field).expect("first coordinate is 1")
    }

    /// The coordinate vertex `e_i`.
    pub fn vertex(i: usize) -> Self {
        let mut coords = [0; 4];
        coords[i] = 1;
        ProjectivePoint { coords, chart: i }
    }

    pub fn coords(&self) -> [u64; 4] {
        self.coords
    }
}

/// Dense row-major matrix over `F_p`. Columns are the degree-`d` monomials
/// in lex-decreasing order; rows come in one block per point, each block
/// listing the partial derivatives of order `< m_i` (taken in the affine
/// chart of the point) by total order then lex-decreasing multi-index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionsMatrix {
    pub prime: u64,
    pub n_rows: usize,
    pub n_cols: usize,
    pub entries: Vec<u64>,
}

/// Builds the conditions imposed by the fat points `points` on degree-`d`
/// forms. Non-positive multiplicities impose nothing; a negative degree gives
/// a matrix without columns.
pub fn conditions_matrix(
    l: &LinearSystem,
    points: &[ProjectivePoint],
    prime: u64,
) -> Result<ConditionsMatrix> {
    let field = PrimeField::new(prime)?;
    if prime < 3 || (l.degree >= 0 && prime <= l.degree as u64) {
        return Err(Error::PrimeTooSmall {
            prime,
            degree: l.degree,
        });
    }
    if points.len() != l.num_points() {
        return Err(Error::WrongPointCount {
            expected: l.num_points(),
            got: points.len(),
        });
    }
    for i in 0..points.len() {
        for j in 0..i {
            if points[i] == points[j] {
                return Err(Error::CoincidentPoints(j, i));
            }
        }
    }

    let basis = monomial_basis(l.degree);
    let n_cols = basis.len();
    let d = l.degree.max(0) as usize;

    // falling[a][k] = a (a-1) ... (a-k+1) mod p
    let mut falling = vec![vec![0u64; d + 1]; d + 1];
    for (a, row) in falling.iter_mut().enumerate() {
        row[0] = 1;
        for k in 1..=a {
            row[k] = field.mul(row[k - 1], (a + 1 - k) as u64);
        }
    }

    let mut entries = Vec::new();
    let mut n_rows = 0;
    for (pt, &m) in points.iter().zip(&l.mults) {
        if m <= 0 || n_cols == 0 {
            continue;
        }
        let vars: Vec<usize> = (0..4).filter(|&v| v != pt.chart).collect();
        let powers: Vec<Vec<u64>> = vars
            .iter()
            .map(|&v| {
                let mut pw = vec![1u64; d + 1];
                for e in 1..=d {
                    pw[e] = field.mul(pw[e - 1], pt.coords[v]);
                }
                pw
            })
            .collect();
        for alpha in derivative_indices(m) {
            for mono in &basis {
                let mut val = 1u64;
                for (slot, &v) in vars.iter().enumerate() {
                    let (a, k) = (mono[v] as usize, alpha[slot] as usize);
                    if a < k {
                        val = 0;
                        break;
                    }
                    val = field.mul(val, field.mul(falling[a][k], powers[slot][a - k]));
                }
                entries.push(val);
            }
            n_rows += 1;
        }
    }
    Ok(ConditionsMatrix {
        prime,
        n_rows,
        n_cols,
        entries,
    })
}

impl ConditionsMatrix {
    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.entries[row * self.n_cols + col]
    }

    /// Rank by Gaussian elimination over `F_p`, pivoting on the first row
    /// with a nonzero entry in the current column.
    pub fn rank(&self) -> usize {
        let mut work = self.entries.clone();
        let field = PrimeField::new(self.prime).expect("validated at construction");
        if self.prime == MERSENNE_31 {
            eliminate(&mut work, self.n_rows, self.n_cols, &field, Mersenne31)
        } else {
            let red = Generic(StrengthReducedU64::new(self.prime));
            eliminate(&mut work, self.n_rows, self.n_cols, &field, red)
        }
    }
}

fn eliminate<R: Reduce>(
    data: &mut [u64],
    rows: usize,
    cols: usize,
    field: &PrimeField,
    red: R,
) -> usize {
    let p = field.modulus();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| data[r * cols + c] != 0) else {
            continue;
        };
        if pivot != rank {
            let (a, b) = data.split_at_mut(pivot * cols);
            a[rank * cols..(rank + 1) * cols].swap_with_slice(&mut b[..cols]);
        }
        let (top, bottom) = data.split_at_mut((rank + 1) * cols);
        let pivot_row = &mut top[rank * cols + c..];
        let inv = field.inv(pivot_row[0]);
        for x in pivot_row.iter_mut() {
            *x = red.reduce(*x * inv);
        }
        let pivot_row = &*pivot_row;
        for row in bottom.chunks_exact_mut(cols) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            let neg = p - f;
            for (x, &y) in row[c..].iter_mut().zip(pivot_row) {
                *x = red.reduce(*x + neg * y);
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u64 = MERSENNE_31;

    fn field() -> PrimeField {
        PrimeField::new(P).unwrap()
    }

    fn sys(s: &str) -> LinearSystem {
        s.parse().unwrap()
    }

    fn pts(n: usize) -> Vec<ProjectivePoint> {
        let f = field();
        (0..n as u64)
            .map(|i| {
                ProjectivePoint::affine(
                    3 + 7 * i * i,
                    11 + 5 * i * i * i,
                    17 + i * 13 + i * i * i * i,
                    &f,
                )
            })
            .collect()
    }

    #[test]
    fn single_simple_point() {
        let m = conditions_matrix(&sys("1 1"), &pts(1), P).unwrap();
        assert_eq!((m.n_rows, m.n_cols), (1, 4));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn nine_points_on_a_unique_quadric() {
        let m = conditions_matrix(&sys("2 1^9"), &pts(9), P).unwrap();
        assert_eq!((m.n_rows, m.n_cols), (9, 10));
        assert_eq!(m.rank(), 9);
    }

    #[test]
    fn row_count_for_seven_four_six() {
        let m = conditions_matrix(&sys("7 4^6"), &pts(6), P).unwrap();
        assert_eq!((m.n_rows, m.n_cols), (120, 120));
    }

    #[test]
    fn derivative_entries() {
        // d = 2, point (1:2:3:5): row for d/dx1 on monomial x0*x1 is 1,
        // on x1^2 is 2*x1 = 4.
        let f = field();
        let pt = ProjectivePoint::affine(2, 3, 5, &f);
        let m = conditions_matrix(&sys("2 2"), &[pt], P).unwrap();
        let basis = monomial_basis(2);
        let col = |e: [u32; 4]| basis.iter().position(|&b| b == e).unwrap();
        assert_eq!(m.get(1, col([1, 1, 0, 0])), 1);
        assert_eq!(m.get(1, col([0, 2, 0, 0])), 4);
        assert_eq!(m.get(0, col([0, 1, 1, 0])), 6);
        assert_eq!(m.get(3, col([0, 0, 1, 1])), 3);
    }

    #[test]
    fn vertex_conditions_kill_monomials() {
        // double point at e_1 kills every monomial with a1 >= d - 1 .. i.e.
        // monomials with a0 + a2 + a3 < 2.
        let m = conditions_matrix(&sys("3 2"), &[ProjectivePoint::vertex(1)], P).unwrap();
        assert_eq!(m.rank(), 4);
    }

    #[test]
    fn rejects_bad_input() {
        let p = pts(2);
        assert_eq!(
            conditions_matrix(&sys("3 1 1"), &[p[0], p[0]], P),
            Err(Error::CoincidentPoints(0, 1))
        );
        assert!(matches!(
            conditions_matrix(&sys("3 1 1"), &p[..1], P),
            Err(Error::WrongPointCount { .. })
        ));
        assert!(matches!(
            conditions_matrix(&sys("7 1 1"), &p, 7),
            Err(Error::PrimeTooSmall { .. })
        ));
        assert_eq!(
            conditions_matrix(&sys("3 1 1"), &p, 21),
            Err(Error::NotPrime(21))
        );
    }

    #[test]
    fn generic_and_mersenne_paths_agree() {
        let l = sys("6 3^5");
        let a = conditions_matrix(&l, &pts(5), P).unwrap().rank();
        let f = PrimeField::new(1_000_003).unwrap();
        let q: Vec<_> = (0..5u64)
            .map(|i| ProjectivePoint::affine(3 + 7 * i * i, 11 + 5 * i * i * i, 17 + 13 * i, &f))
            .collect();
        let b = conditions_matrix(&l, &q, 1_000_003).unwrap().rank();
        assert_eq!(a, b);
    }

    #[test]
    fn rank_of_small_known_matrices() {
        let m = ConditionsMatrix {
            prime: 7,
            n_rows: 3,
            n_cols: 3,
            entries: vec![1, 2, 3, 2, 4, 6, 0, 1, 1],
        };
        assert_eq!(m.rank(), 2);
        let m = ConditionsMatrix {
            prime: 7,
            n_rows: 2,
            n_cols: 2,
            entries: vec![0, 0, 0, 0],
        };
        assert_eq!(m.rank(), 0);
    }
}
