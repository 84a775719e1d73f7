//! Exponent vectors for monomials in four variables.

/// All `(a0, a1, a2, a3)` with `a0 + a1 + a2 + a3 = d`, lexicographically
/// decreasing (graded-lex within the single degree `d`). Empty for `d < 0`.
pub fn monomial_basis(d: i64) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    if d < 0 {
        return out;
    }
    let d = d as u32;
    for a0 in (0..=d).rev() {
        for a1 in (0..=d - a0).rev() {
            for a2 in (0..=d - a0 - a1).rev() {
                out.push([a0, a1, a2, d - a0 - a1 - a2]);
            }
        }
    }
    out
}

/// Derivative multi-indices in three variables of total order `< m`,
/// ordered by total order, then lexicographically decreasing.
pub fn derivative_indices(m: i64) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for order in 0..m.max(0) as u32 {
        for b0 in (0..=order).rev() {
            for b1 in (0..=order - b0).rev() {
                out.push([b0, b1, order - b0 - b1]);
            }
        }
    }
    out
}
