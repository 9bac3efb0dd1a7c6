//! Compact oriented surfaces with boundary, seen through their first
//! homology lattice, and Dehn twists acting on it as signed transvections.
//!
//! The basis of `H_1` of a genus-`g` surface with `m > 0` boundary
//! components is `a_1, b_1, ..., a_g, b_g, d_1, ..., d_{m-1}` of rank
//! `2g + m - 1`; the `d_j` are boundary-parallel classes lying in the
//! radical of the intersection pairing. Closed surfaces (`m = 0`) have
//! rank `2g`. Only the homological shadow of a mapping class is
//! represented; classes that act alike on homology are indistinguishable
//! here.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::linalg::LinalgError;
use crate::{Int, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error("curve classes live on different surfaces")]
    MismatchedSurfaces,
    #[error("expected a vector of rank {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("curve class must be nonzero")]
    ZeroClass,
    #[error("curve class must be primitive (gcd of coordinates is {gcd})")]
    NonPrimitiveClass { gcd: Int },
    #[error("surface is already closed")]
    AlreadyClosed,
    #[error("matrix does not preserve the intersection pairing")]
    NotSymplectic,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A compact oriented surface, identified by genus and boundary count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Surface {
    genus: usize,
    boundary_components: usize,
}

impl Surface {
    pub fn new(genus: usize, boundary_components: usize) -> Self {
        Surface {
            genus,
            boundary_components,
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn boundary_components(&self) -> usize {
        self.boundary_components
    }

    pub fn is_closed(&self) -> bool {
        self.boundary_components == 0
    }

    /// Rank of the first homology lattice.
    pub fn rank(&self) -> usize {
        2 * self.genus + self.boundary_components.saturating_sub(1)
    }

    /// Euler characteristic of the surface itself.
    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary_components as i64
    }

    /// Label of the `i`-th basis vector: `a1, b1, ..., ag, bg, d1, ...`.
    pub fn basis_label(&self, i: usize) -> String {
        if i < 2 * self.genus {
            let pair = i / 2 + 1;
            if i.is_multiple_of(2) {
                format!("a{pair}")
            } else {
                format!("b{pair}")
            }
        } else {
            format!("d{}", i - 2 * self.genus + 1)
        }
    }

    /// Gram matrix of the skew intersection pairing on the basis.
    pub fn pairing_matrix(&self) -> IntMatrix {
        let n = self.rank();
        let mut j = IntMatrix::zeros(n, n);
        for i in 0..self.genus {
            j[(2 * i, 2 * i + 1)] = Int::one();
            j[(2 * i + 1, 2 * i)] = -Int::one();
        }
        j
    }

    /// Basis curve class, by index.
    pub fn basis_class(&self, i: usize) -> CurveClass {
        let mut coords = vec![Int::zero(); self.rank()];
        coords[i] = Int::one();
        CurveClass::new(*self, coords).expect("basis vector is primitive")
    }

    /// The closed surface of the same genus, with the projection of the
    /// homology lattice that kills the boundary-parallel classes.
    /// Transvections descend through this projection since the killed
    /// classes lie in the radical of the pairing.
    pub fn cap_boundary(&self) -> Result<(Surface, IntMatrix), SurfaceError> {
        if self.is_closed() {
            return Err(SurfaceError::AlreadyClosed);
        }
        let capped = Surface::new(self.genus, 0);
        let mut proj = IntMatrix::zeros(capped.rank(), self.rank());
        for i in 0..capped.rank() {
            proj[(i, i)] = Int::one();
        }
        Ok((capped, proj))
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "surface(g={}, m={})",
            self.genus, self.boundary_components
        )
    }
}

/// A nonzero primitive vector in the first homology of a surface,
/// standing for a nonseparating simple closed curve.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurveClass {
    surface: Surface,
    coords: Vec<Int>,
}

impl CurveClass {
    /// Rejects zero and non-primitive vectors: a non-primitive class is
    /// not realized by a simple closed curve, so normalizing silently
    /// would mask user error.
    pub fn new(surface: Surface, coords: Vec<Int>) -> Result<Self, SurfaceError> {
        if coords.len() != surface.rank() {
            return Err(SurfaceError::RankMismatch {
                expected: surface.rank(),
                got: coords.len(),
            });
        }
        if coords.iter().all(Zero::is_zero) {
            return Err(SurfaceError::ZeroClass);
        }
        let gcd = coords.iter().fold(Int::zero(), |acc, c| acc.gcd(&c.abs()));
        if !gcd.is_one() {
            return Err(SurfaceError::NonPrimitiveClass { gcd });
        }
        Ok(CurveClass { surface, coords })
    }

    pub fn from_i64(surface: Surface, coords: &[i64]) -> Result<Self, SurfaceError> {
        Self::new(surface, coords.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn coords(&self) -> &[Int] {
        &self.coords
    }

    /// A radical (boundary-parallel) class pairs to zero with everything;
    /// twists about it are invisible to every computation in this crate.
    pub fn is_radical(&self) -> bool {
        self.coords[..2 * self.surface.genus()]
            .iter()
            .all(Zero::is_zero)
    }

    pub fn max_abs_coefficient(&self) -> Int {
        self.coords
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(Int::zero)
    }

    /// Renders the class on the basis labels, e.g. `b1 - a1`.
    pub fn describe(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let label = self.surface.basis_label(i);
            if out.is_empty() {
                if *c == Int::one() {
                    out = label;
                } else if *c == -Int::one() {
                    out = format!("-{label}");
                } else {
                    out = format!("{c}*{label}");
                }
            } else {
                let abs = c.abs();
                let op = if c.is_negative() { "-" } else { "+" };
                if abs.is_one() {
                    out = format!("{out} {op} {label}");
                } else {
                    out = format!("{out} {op} {abs}*{label}");
                }
            }
        }
        out
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Algebraic intersection number of two classes on the same surface.
/// Bilinear and skew: `<x,y> = -<y,x>`.
pub fn intersection_pairing(x: &CurveClass, y: &CurveClass) -> Result<Int, SurfaceError> {
    if x.surface != y.surface {
        return Err(SurfaceError::MismatchedSurfaces);
    }
    Ok(pairing_on(&x.surface, x.coords(), y.coords()))
}

/// Pairing of raw coordinate vectors on a surface; callers guarantee rank.
pub(crate) fn pairing_on(surface: &Surface, x: &[Int], y: &[Int]) -> Int {
    let mut acc = Int::zero();
    for i in 0..surface.genus() {
        acc += x[2 * i].clone() * y[2 * i + 1].clone() - x[2 * i + 1].clone() * y[2 * i].clone();
    }
    acc
}

/// An automorphism of the homology lattice induced by a mapping class:
/// preserves the pairing and has determinant +-1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionMatrix {
    surface: Surface,
    matrix: IntMatrix,
}

impl ActionMatrix {
    /// Validates `M^T J M = J` and unimodularity.
    pub fn new(surface: Surface, matrix: IntMatrix) -> Result<Self, SurfaceError> {
        let n = surface.rank();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(SurfaceError::RankMismatch {
                expected: n,
                got: matrix.rows(),
            });
        }
        let j = surface.pairing_matrix();
        if &(&matrix.transpose() * &j) * &matrix != j {
            return Err(SurfaceError::NotSymplectic);
        }
        if !matrix.is_unimodular() {
            return Err(SurfaceError::NotSymplectic);
        }
        Ok(ActionMatrix { surface, matrix })
    }

    pub fn identity(surface: Surface) -> Self {
        ActionMatrix {
            surface,
            matrix: IntMatrix::identity(surface.rank()),
        }
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// Composition `self * rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &ActionMatrix) -> Result<ActionMatrix, SurfaceError> {
        if self.surface != rhs.surface {
            return Err(SurfaceError::MismatchedSurfaces);
        }
        Ok(ActionMatrix {
            surface: self.surface,
            matrix: &self.matrix * &rhs.matrix,
        })
    }

    /// Image of a curve class. Primitivity is preserved because the
    /// matrix is unimodular.
    pub fn map_curve(&self, c: &CurveClass) -> Result<CurveClass, SurfaceError> {
        if c.surface != self.surface {
            return Err(SurfaceError::MismatchedSurfaces);
        }
        let coords = self.matrix.apply(c.coords())?;
        CurveClass::new(self.surface, coords)
    }
}

/// The transvection `x -> x + sign * <x,c> * c` of a signed Dehn twist.
///
/// Twists about radical classes are accepted and act as the identity;
/// [`CurveClass::is_radical`] flags them. A positive and a negative twist
/// about the same class compose to the identity.
pub fn twist_action(c: &CurveClass, sign: i8) -> ActionMatrix {
    debug_assert!(sign == 1 || sign == -1);
    let surface = c.surface;
    let n = surface.rank();
    let mut m = IntMatrix::identity(n);
    // column k of M is e_k + sign * <e_k, c> * c
    let j = surface.pairing_matrix();
    for k in 0..n {
        let e_pair = {
            // <e_k, c> = row k of J times c
            let mut acc = Int::zero();
            for t in 0..n {
                acc += j[(k, t)].clone() * c.coords[t].clone();
            }
            acc
        };
        if e_pair.is_zero() {
            continue;
        }
        for r in 0..n {
            let add = Int::from(sign as i64) * e_pair.clone() * c.coords[r].clone();
            m[(r, k)] = m[(r, k)].clone() + add;
        }
    }
    ActionMatrix { surface, matrix: m }
}
