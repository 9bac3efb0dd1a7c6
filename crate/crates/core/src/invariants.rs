//! Integer invariants of fibrations over the disk, of open-book
//! 3-manifolds, and of folded assemblies: Euler characteristic, first
//! homology, intersection form, and signature.
//!
//! No 4-manifold is ever triangulated. Fibration pieces are handled by
//! the standard 2-handlebody computation, the fold by the cokernel of
//! `action - 1` on the page lattice, the closed assembly by
//! Mayer-Vietoris and Novikov additivity.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::factorization::{Factorization, TwistSign};
use crate::linalg::{cokernel_invariants, kernel_basis, signature_symmetric, Inertia};
use crate::surface::{pairing_on, ActionMatrix, Surface, SurfaceError};
use crate::{Int, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("open book page must have boundary")]
    ClosedPage,
    #[error("sides live on different surfaces")]
    MismatchedSurfaces,
    #[error("positive side contains a negative letter at index {index}")]
    ImpureSide { index: usize },
    #[error("boundary open books do not match homologically")]
    NonMatchingSides { defect: IntMatrix },
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

/// An achiral Lefschetz fibration over the disk: regular fiber plus the
/// ordered word of signed vanishing cycles. Allowability (homologically
/// nontrivial cycles) is enforced by the curve classes themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibrationOverDisk {
    word: Factorization,
}

impl FibrationOverDisk {
    pub fn new(word: Factorization) -> Self {
        FibrationOverDisk { word }
    }

    pub fn surface(&self) -> Surface {
        self.word.surface()
    }

    pub fn word(&self) -> &Factorization {
        &self.word
    }

    /// The open book induced on the boundary of the total space.
    pub fn boundary_open_book(&self) -> OpenBook {
        OpenBook {
            page: self.surface(),
            action: self.word.word_action(),
        }
    }
}

/// An open book decomposition of a 3-manifold, seen through the
/// homological monodromy of its page.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenBook {
    page: Surface,
    action: ActionMatrix,
}

impl OpenBook {
    pub fn new(page: Surface, action: ActionMatrix) -> Result<Self, InvariantError> {
        if action.surface() != page {
            return Err(InvariantError::MismatchedSurfaces);
        }
        Ok(OpenBook { page, action })
    }

    pub fn page(&self) -> Surface {
        self.page
    }

    pub fn action(&self) -> &ActionMatrix {
        &self.action
    }
}

/// Handle count: `chi(F) + k` for a fibration with `k` critical points.
pub fn euler_characteristic(f: &FibrationOverDisk) -> i64 {
    f.surface().euler_characteristic() + f.word().len() as i64
}

/// Matrix whose columns are the letters' curve classes.
fn class_matrix(word: &Factorization) -> IntMatrix {
    let n = word.surface().rank();
    let cols: Vec<Vec<Int>> = word
        .letters()
        .iter()
        .map(|l| l.curve.coords().to_vec())
        .collect();
    IntMatrix::from_columns(n, &cols)
}

/// First homology of the total space: the fiber lattice modulo the
/// vanishing-cycle classes, since the space retracts to the fiber with
/// one 2-cell per letter.
pub fn fibration_first_homology(f: &FibrationOverDisk) -> Vec<Int> {
    cokernel_invariants(&class_matrix(f.word()))
}

/// Definiteness class of a symmetric form, read off its inertia.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Definiteness {
    Zero,
    PositiveDefinite,
    NegativeDefinite,
    PositiveSemidefinite,
    NegativeSemidefinite,
    Indefinite,
}

impl Definiteness {
    fn classify(i: &Inertia) -> Self {
        match (i.positive, i.zero, i.negative) {
            (0, 0, 0) => Definiteness::Zero,
            (_, 0, 0) => Definiteness::PositiveDefinite,
            (0, 0, _) => Definiteness::NegativeDefinite,
            (_, _, 0) => Definiteness::PositiveSemidefinite,
            (0, _, _) => Definiteness::NegativeSemidefinite,
            _ => Definiteness::Indefinite,
        }
    }

    pub fn is_definite(&self) -> bool {
        matches!(
            self,
            Definiteness::PositiveDefinite | Definiteness::NegativeDefinite
        )
    }
}

impl fmt::Display for Definiteness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Definiteness::Zero => "zero",
            Definiteness::PositiveDefinite => "positive-definite",
            Definiteness::NegativeDefinite => "negative-definite",
            Definiteness::PositiveSemidefinite => "positive-semidefinite",
            Definiteness::NegativeSemidefinite => "negative-semidefinite",
            Definiteness::Indefinite => "indefinite",
        };
        f.write_str(s)
    }
}

/// The intersection form of a fibration piece, restricted to a saturated
/// basis of its second homology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionForm {
    pub b2: usize,
    pub gram: IntMatrix,
    pub inertia: Inertia,
    pub even: bool,
    pub definiteness: Definiteness,
    pub determinant: Int,
}

impl IntersectionForm {
    pub fn signature(&self) -> i64 {
        self.inertia.signature()
    }
}

/// Intersection form of the total space of a fibration over the disk.
///
/// Second homology is the kernel of the cycle-class matrix; the form is
/// the restriction of the presentation matrix with `-sign_i` on the
/// diagonal and `<c_i, c_j>` strictly above it. The one-sided layout is
/// what makes the restriction symmetric; symmetrizing by copying the
/// upper half below is wrong (it fails the rank-8 even definite check
/// on the ten-twist torus word).
pub fn intersection_form(f: &FibrationOverDisk) -> IntersectionForm {
    let word = f.word();
    let surface = word.surface();
    let k = word.len();
    let mut linking = IntMatrix::zeros(k, k);
    for i in 0..k {
        linking[(i, i)] = match word.letters()[i].sign {
            TwistSign::Positive => -Int::one(),
            TwistSign::Negative => Int::one(),
        };
        for j in (i + 1)..k {
            linking[(i, j)] = pairing_on(
                &surface,
                word.letters()[i].curve.coords(),
                word.letters()[j].curve.coords(),
            );
        }
    }
    let kernel = kernel_basis(&class_matrix(word));
    let basis = IntMatrix::from_columns(k, &kernel);
    let gram = &(&basis.transpose() * &linking) * &basis;
    assert!(
        gram.is_symmetric(),
        "restriction to the kernel must be symmetric"
    );
    let inertia = signature_symmetric(&gram).expect("symmetric by construction");
    let even = (0..gram.rows()).all(|i| gram[(i, i)].is_even());
    let determinant = gram.determinant().expect("gram is square");
    IntersectionForm {
        b2: kernel.len(),
        gram,
        inertia,
        even,
        definiteness: Definiteness::classify(&inertia),
        determinant,
    }
}

/// First homology of the open-book 3-manifold: cokernel of
/// `action - identity` on the page lattice. Rejects closed pages.
pub fn openbook_first_homology(ob: &OpenBook) -> Result<Vec<Int>, InvariantError> {
    if ob.page.is_closed() {
        return Err(InvariantError::ClosedPage);
    }
    let n = ob.page.rank();
    let mut m = ob.action.matrix().clone();
    for i in 0..n {
        m[(i, i)] = m[(i, i)].clone() - Int::one();
    }
    Ok(cokernel_invariants(&m))
}

/// First homology as reported: either the invariant-factor list (`0`
/// encodes a free summand) or explicitly unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomologyClass {
    Known(Vec<Int>),
    Indeterminate,
}

impl HomologyClass {
    pub fn trivial() -> Self {
        HomologyClass::Known(Vec::new())
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, HomologyClass::Known(f) if f.is_empty())
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologyClass::Indeterminate => write!(f, "indeterminate"),
            HomologyClass::Known(factors) => {
                if factors.is_empty() {
                    return write!(f, "0");
                }
                let free = factors.iter().filter(|d| d.is_zero()).count();
                let mut parts: Vec<String> = factors
                    .iter()
                    .filter(|d| !d.is_zero())
                    .map(|d| format!("Z/{d}"))
                    .collect();
                match free {
                    0 => {}
                    1 => parts.push("Z".to_string()),
                    r => parts.push(format!("Z^{r}")),
                }
                write!(f, "{}", parts.join(" + "))
            }
        }
    }
}

/// The integer invariants of one space, with the intersection-form data
/// present when the space is a fibration piece. `framing_blind` marks
/// reports that passed through a surgery whose framing (and hence the
/// twisted/untwisted bundle distinction) is invisible to these numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub euler: i64,
    pub h1: HomologyClass,
    pub signature: i64,
    pub form: Option<IntersectionForm>,
    pub framing_blind: bool,
}

/// Full report for one fibration piece.
pub fn fibration_report(f: &FibrationOverDisk) -> InvariantReport {
    let form = intersection_form(f);
    InvariantReport {
        euler: euler_characteristic(f),
        h1: HomologyClass::Known(fibration_first_homology(f)),
        signature: form.signature(),
        form: Some(form),
        framing_blind: false,
    }
}

/// Homological matching of a positive/negative pair along the common
/// open book; the defect matrix is `action(pos) * action(neg) - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub matched: bool,
    pub defect: IntMatrix,
}

pub fn matches(
    pos: &FibrationOverDisk,
    neg: &FibrationOverDisk,
) -> Result<Matching, InvariantError> {
    if pos.surface() != neg.surface() {
        return Err(InvariantError::MismatchedSurfaces);
    }
    let product = pos
        .word()
        .word_action()
        .compose(&neg.word().word_action())
        .expect("same surface");
    let mut defect = product.matrix().clone();
    for i in 0..defect.rows() {
        defect[(i, i)] = defect[(i, i)].clone() - Int::one();
    }
    Ok(Matching {
        matched: defect.is_zero(),
        defect,
    })
}

/// A folded assembly: a positive fibration and a negative fibration over
/// the same fiber whose boundary open books match homologically. The
/// closed manifold is the union of the two pieces along the fold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldedAssembly {
    positive_side: FibrationOverDisk,
    negative_side: FibrationOverDisk,
}

impl FoldedAssembly {
    pub fn new(
        positive_side: FibrationOverDisk,
        negative_side: FibrationOverDisk,
    ) -> Result<Self, InvariantError> {
        if let Some(index) = positive_side
            .word()
            .letters()
            .iter()
            .position(|l| l.sign != TwistSign::Positive)
        {
            return Err(InvariantError::ImpureSide { index });
        }
        if let Some(index) = negative_side
            .word()
            .letters()
            .iter()
            .position(|l| l.sign != TwistSign::Negative)
        {
            return Err(InvariantError::ImpureSide { index });
        }
        let matching = matches(&positive_side, &negative_side)?;
        if !matching.matched {
            return Err(InvariantError::NonMatchingSides {
                defect: matching.defect,
            });
        }
        Ok(FoldedAssembly {
            positive_side,
            negative_side,
        })
    }

    pub fn positive_side(&self) -> &FibrationOverDisk {
        &self.positive_side
    }

    pub fn negative_side(&self) -> &FibrationOverDisk {
        &self.negative_side
    }

    /// The equatorial open book (taken from the positive side).
    pub fn fold_open_book(&self) -> OpenBook {
        self.positive_side.boundary_open_book()
    }
}

/// Invariants of the closed assembly.
///
/// Euler characteristics add (the fold is a closed 3-manifold), the
/// signature adds by Novikov additivity, and first homology comes from
/// Mayer-Vietoris: generators one page lattice per side, relations each
/// side's vanishing cycles plus the diagonal image of the page lattice.
/// Binding meridians bound fiber caps on both sides and contribute no
/// relations.
pub fn folded_invariants(fa: &FoldedAssembly) -> InvariantReport {
    let pos = fibration_report(fa.positive_side());
    let neg = fibration_report(fa.negative_side());

    let n = fa.positive_side().surface().rank();
    let cp = class_matrix(fa.positive_side().word());
    let cn = class_matrix(fa.negative_side().word());
    let (kp, kn) = (cp.cols(), cn.cols());
    let mut relations = IntMatrix::zeros(2 * n, kp + kn + n);
    for i in 0..n {
        for j in 0..kp {
            relations[(i, j)] = cp[(i, j)].clone();
        }
        for j in 0..kn {
            relations[(n + i, kp + j)] = cn[(i, j)].clone();
        }
        relations[(i, kp + kn + i)] = Int::one();
        relations[(n + i, kp + kn + i)] = -Int::one();
    }

    InvariantReport {
        euler: pos.euler + neg.euler,
        h1: HomologyClass::Known(cokernel_invariants(&relations)),
        signature: pos.signature + neg.signature,
        form: None,
        framing_blind: false,
    }
}

/// Direction of the surgery trading a circle neighborhood for a sphere
/// neighborhood in the fold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurgeryDirection {
    /// `S^1 x D^3 -> D^2 x S^2`: Euler characteristic rises by 2.
    CircleToSphere,
    /// The inverse trade: Euler characteristic drops by 2.
    SphereToCircle,
}

/// Order of the surgered curve's class, when the caller can supply it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurgeredClass {
    InfiniteOrder,
    FiniteOrder,
}

/// Surgery bookkeeping on a report: the Euler characteristic moves by
/// +-2, the signature is unchanged, and first homology is adjusted only
/// when the surgered class is supplied (kills one free summand if it has
/// infinite order, else contributes one). The result is framing-blind:
/// these numbers cannot see which of the two framings was used.
pub fn binding_surgery(
    report: &InvariantReport,
    direction: SurgeryDirection,
    class: Option<SurgeredClass>,
) -> InvariantReport {
    let euler = match direction {
        SurgeryDirection::CircleToSphere => report.euler + 2,
        SurgeryDirection::SphereToCircle => report.euler - 2,
    };
    let h1 = match (class, &report.h1) {
        (None, _) | (_, HomologyClass::Indeterminate) => HomologyClass::Indeterminate,
        (Some(SurgeredClass::InfiniteOrder), HomologyClass::Known(factors)) => {
            let mut out = factors.clone();
            match out.iter().position(|d| d.is_zero()) {
                Some(i) => {
                    out.remove(i);
                    HomologyClass::Known(out)
                }
                None => HomologyClass::Indeterminate,
            }
        }
        (Some(SurgeredClass::FiniteOrder), HomologyClass::Known(factors)) => {
            let mut out = factors.clone();
            out.push(Int::zero());
            HomologyClass::Known(out)
        }
    };
    InvariantReport {
        euler,
        h1,
        signature: report.signature,
        form: None,
        framing_blind: true,
    }
}
