use num_rational::Ratio;
use num_traits::{Signed, Zero};

use super::{LinalgError, Matrix, Scalar};

/// Exact inertia of a symmetric integer matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }

    pub fn is_definite(&self) -> bool {
        self.zero == 0 && (self.positive == 0 || self.negative == 0)
    }
}

/// Inertia `(n+, n0, n-)` of a symmetric matrix, by congruence
/// diagonalization over the rationals. A zero-diagonal block with a
/// nonzero off-diagonal entry is first made pivotable by the congruence
/// `e_i <- e_i + e_j`, which keeps everything exact.
pub fn signature_symmetric<T: Scalar>(q: &Matrix<T>) -> Result<Inertia, LinalgError> {
    if let Some((row, col)) = q.symmetry_defect() {
        return Err(LinalgError::NotSymmetric { row, col });
    }
    let n = q.rows();
    let mut a: Vec<Vec<Ratio<T>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Ratio::from_integer(q[(i, j)].clone()))
                .collect()
        })
        .collect();

    let mut inertia = Inertia {
        positive: 0,
        zero: 0,
        negative: 0,
    };
    while !a.is_empty() {
        let sz = a.len();
        let pivot = (0..sz).find(|&i| !a[i][i].is_zero());
        let Some(p) = pivot else {
            let off = (0..sz)
                .flat_map(|i| (i + 1..sz).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].is_zero());
            match off {
                None => {
                    inertia.zero += sz;
                    break;
                }
                Some((i, j)) => {
                    let row_j = a[j].clone();
                    for (x, v) in a[i].iter_mut().zip(row_j) {
                        *x = x.clone() + v;
                    }
                    for row in a.iter_mut() {
                        let v = row[j].clone();
                        row[i] = row[i].clone() + v;
                    }
                    continue;
                }
            }
        };
        let d = a[p][p].clone();
        if d.is_positive() {
            inertia.positive += 1;
        } else {
            inertia.negative += 1;
        }
        let rest: Vec<usize> = (0..sz).filter(|&r| r != p).collect();
        a = rest
            .iter()
            .map(|&r| {
                rest.iter()
                    .map(|&c| a[r][c].clone() - a[r][p].clone() * a[p][c].clone() / d.clone())
                    .collect()
            })
            .collect();
    }
    Ok(inertia)
}
