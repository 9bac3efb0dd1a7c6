use super::{smith_normal_form, Matrix, Scalar};

/// Basis of the integer null space of `a`, as a saturated lattice: every
/// integer kernel vector is an integer combination of the result.
///
/// With `left * a * right` diagonal, the trailing columns of `right`
/// (those hitting zero diagonal entries) span exactly the kernel.
pub fn kernel_basis<T: Scalar>(a: &Matrix<T>) -> Vec<Vec<T>> {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    (rank..a.cols())
        .map(|j| snf.right_transform.column(j))
        .collect()
}

/// Invariant factors of `Z^rows / image(a)`: torsion coefficients greater
/// than one in divisibility order, then one `0` per free summand.
pub fn cokernel_invariants<T: Scalar>(a: &Matrix<T>) -> Vec<T> {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    let mut out: Vec<T> = snf
        .invariant_factors
        .into_iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .collect();
    out.extend((0..a.rows() - rank).map(|_| T::zero()));
    out
}
