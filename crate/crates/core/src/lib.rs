//! Exact monodromy calculus for achiral Lefschetz fibrations over the disk.
//!
//! Surfaces are carried by their first homology lattice with the skew
//! intersection pairing; Dehn twists act as signed transvections. Ordered
//! words of signed twists model monodromy factorizations, Hurwitz moves
//! rewrite them, and a deterministic chiral splitting separates a mixed
//! word into a positive word followed by a negative word. On top of that
//! sit the integer invariants (Euler characteristic, first homology,
//! intersection form, signature) of the fibration pieces, of the open
//! books on their boundaries, and of the closed manifold reassembled
//! from a matched positive/negative pair.
//!
//! All arithmetic is exact. The linear-algebra kernels in [`linalg`] are
//! generic over the integer scalar; everything else pins the scalar to
//! arbitrary-precision integers via [`Int`], since both Smith-normal-form
//! pivots and conjugated twist coordinates grow without bound.
//!
//! # Conventions
//!
//! Three conventions fix every sign in this crate and are embedded in all
//! machine-readable output:
//!
//! * **sign**: a positive (right-handed) twist about `c` acts on homology
//!   by `x -> x + <x,c> c`, with `<a_i,b_i> = +1` on the symplectic basis.
//! * **order**: the first letter of a word acts first, so the matrix of
//!   `t_1 t_2 ... t_k` is `M_k ... M_2 M_1`.
//! * **linking**: the presentation matrix of the intersection form has
//!   `-sign_i` on the diagonal and `<c_i, c_j>` above it (`i < j`), with
//!   the lower half zero; it is symmetric once restricted to the second
//!   homology (the kernel of the cycle-class matrix). Under these choices
//!   an all-positive word yields the negative-definite side, e.g. the
//!   rank-8 even form of signature -8 for the ten-twist torus word.

pub mod dsl;
pub mod factorization;
pub mod invariants;
pub mod linalg;
pub mod report;
pub mod surface;

/// Arbitrary-precision integer used by every topology-facing type.
pub type Int = num_bigint::BigInt;

/// Dense matrix over [`Int`].
pub type IntMatrix = linalg::Matrix<Int>;

/// Smith decomposition over [`Int`].
pub type IntSmith = linalg::SmithDecomposition<Int>;

/// Convention fingerprint embedded in every report envelope so results
/// stay comparable across builds.
pub mod conventions {
    pub const SIGN: &str = "positive twist: x -> x + <x,c>*c";
    pub const ORDER: &str = "first letter acts first: word(t1..tk) = M_k*...*M_1";
    pub const LINKING: &str = "L[i][i] = -sign_i; L[i][j] = <c_i,c_j> for i<j, 0 for i>j";
}
