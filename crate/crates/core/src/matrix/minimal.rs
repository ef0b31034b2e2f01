use super::{field, invariant_factors, PolyMatrix};

/// Minimal-basis test: full column rank at every point (all invariant factors
/// equal to one) and column proper. Column degrees are returned regardless.
pub fn is_minimal_basis(k: &PolyMatrix) -> (bool, Vec<i64>) {
    let degrees = k.column_degrees();
    if k.cols() == 0 {
        return (true, degrees);
    }
    let proper = k.rows() >= k.cols()
        && degrees.iter().all(|&d| d >= 0)
        && field::rank(&k.leading_column_matrix()) == k.cols();
    if !proper {
        return (false, degrees);
    }
    let inv = invariant_factors(k);
    let ok = inv.len() == k.cols() && inv.iter().all(|p| p.is_one());
    (ok, degrees)
}
