use super::{Matrix, Scalar};

/// Smith normal form of an integer matrix.
///
/// `left * a * right` is the rectangular diagonal matrix carrying
/// `invariant_factors`; both transforms are unimodular and each factor
/// divides the next (with zeros trailing).
#[derive(Debug, Clone)]
pub struct SmithDecomposition<T: Scalar> {
    pub invariant_factors: Vec<T>,
    pub left_transform: Matrix<T>,
    pub right_transform: Matrix<T>,
}

impl<T: Scalar> SmithDecomposition<T> {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_zero())
            .count()
    }

    /// The rectangular diagonal matrix the transforms produce.
    pub fn diagonal(&self, rows: usize, cols: usize) -> Matrix<T> {
        let mut d = Matrix::zeros(rows, cols);
        for (i, f) in self.invariant_factors.iter().enumerate() {
            d[(i, i)] = f.clone();
        }
        d
    }
}

/// Computes the Smith normal form by unimodular row/column operations,
/// always pivoting on a smallest-absolute-value nonzero entry to keep
/// intermediate growth down.
pub fn smith_normal_form<T: Scalar>(a: &Matrix<T>) -> SmithDecomposition<T> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut left = Matrix::identity(rows);
    let mut right = Matrix::identity(cols);

    let steps = rows.min(cols);
    for t in 0..steps {
        while let Some((pi, pj)) = min_abs_pivot(&d, t) {
            if pi != t {
                d.swap_rows(t, pi);
                left.swap_rows(t, pi);
            }
            if pj != t {
                d.swap_cols(t, pj);
                right.swap_cols(t, pj);
            }

            let mut clean = true;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -(d[(i, t)].clone() / d[(t, t)].clone());
                d.add_row_multiple(i, t, &q);
                left.add_row_multiple(i, t, &q);
                if !d[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -(d[(t, j)].clone() / d[(t, t)].clone());
                d.add_col_multiple(j, t, &q);
                right.add_col_multiple(j, t, &q);
                if !d[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }

            // Pivot must divide everything that remains; if not, pull the
            // offending row up and keep reducing.
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !d[(i, j)].clone().mod_floor(&d[(t, t)]).is_zero());
            match offender {
                Some((i, _)) => {
                    let one = T::one();
                    d.add_row_multiple(t, i, &one);
                    left.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            left.negate_row(t);
        }
    }

    let invariant_factors = (0..steps).map(|i| d[(i, i)].clone()).collect();
    SmithDecomposition {
        invariant_factors,
        left_transform: left,
        right_transform: right,
    }
}

fn min_abs_pivot<T: Scalar>(d: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let v = d[(i, j)].abs();
            if v.is_zero() {
                continue;
            }
            if v.is_one() {
                return Some((i, j));
            }
            match &best {
                Some((_, _, b)) if *b <= v => {}
                _ => best = Some((i, j, v)),
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}
