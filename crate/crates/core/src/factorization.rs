//! Ordered words of signed Dehn twists: Hurwitz moves, the chiral
//! splitting of a mixed word into a positive word followed by a negative
//! word, stabilizations, and reversed inverses.
//!
//! A word is read left to right with the first letter acting first, so
//! the induced homology action of `t_1 t_2 ... t_k` is `M_k ... M_2 M_1`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::surface::{twist_action, ActionMatrix, CurveClass, Surface, SurfaceError};
use crate::Int;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("letter {index} lives on a different surface")]
    MixedSurfaces { index: usize },
    #[error("no adjacent pair at position {position} (word length {length})")]
    PositionOutOfRange { position: usize, length: usize },
    #[error("cannot stabilize a closed surface")]
    ClosedSurface,
    #[error("genus stabilization joins two boundary circles and needs m >= 2, got m = {m}")]
    NotEnoughBoundary { m: usize },
    #[error(
        "stabilizing class must cross the new handle generator exactly once \
         (coefficient +-1), got {got}"
    )]
    BadHandleCrossing { got: Int },
    #[error(
        "stabilizing class may only involve the new generator and radical \
         classes; coefficient on {label} is {got}"
    )]
    CrossesOldTopology { label: String, got: Int },
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

/// Sign of a Dehn twist letter: positive twists correspond to Lefschetz
/// handles of framing -1 relative to the fiber, negative twists to +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwistSign {
    Positive,
    Negative,
}

impl TwistSign {
    pub fn as_i8(self) -> i8 {
        match self {
            TwistSign::Positive => 1,
            TwistSign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            TwistSign::Positive => TwistSign::Negative,
            TwistSign::Negative => TwistSign::Positive,
        }
    }
}

/// One letter of a factorization: a signed Dehn twist about a curve class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedTwist {
    pub curve: CurveClass,
    pub sign: TwistSign,
}

impl SignedTwist {
    pub fn positive(curve: CurveClass) -> Self {
        SignedTwist {
            curve,
            sign: TwistSign::Positive,
        }
    }

    pub fn negative(curve: CurveClass) -> Self {
        SignedTwist {
            curve,
            sign: TwistSign::Negative,
        }
    }

    /// Homology action of this letter.
    pub fn action(&self) -> ActionMatrix {
        twist_action(&self.curve, self.sign.as_i8())
    }

    /// Action of the inverse letter.
    pub fn inverse_action(&self) -> ActionMatrix {
        twist_action(&self.curve, -self.sign.as_i8())
    }
}

impl fmt::Display for SignedTwist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            TwistSign::Positive => write!(f, "t[{}]", self.curve.describe()),
            TwistSign::Negative => write!(f, "t[{}]^-1", self.curve.describe()),
        }
    }
}

/// An ordered word of signed Dehn twists over one surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    surface: Surface,
    letters: Vec<SignedTwist>,
}

impl Factorization {
    pub fn new(surface: Surface, letters: Vec<SignedTwist>) -> Result<Self, WordError> {
        for (index, l) in letters.iter().enumerate() {
            if l.curve.surface() != surface {
                return Err(WordError::MixedSurfaces { index });
            }
        }
        Ok(Factorization { surface, letters })
    }

    pub fn empty(surface: Surface) -> Self {
        Factorization {
            surface,
            letters: Vec::new(),
        }
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn letters(&self) -> &[SignedTwist] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn positive_count(&self) -> usize {
        self.letters
            .iter()
            .filter(|l| l.sign == TwistSign::Positive)
            .count()
    }

    pub fn negative_count(&self) -> usize {
        self.len() - self.positive_count()
    }

    pub fn is_all_positive(&self) -> bool {
        self.negative_count() == 0
    }

    pub fn is_all_negative(&self) -> bool {
        self.positive_count() == 0
    }

    /// Any letter whose class is boundary-parallel acts trivially here;
    /// such letters are legal but invisible to every computation.
    pub fn has_radical_letters(&self) -> bool {
        self.letters.iter().any(|l| l.curve.is_radical())
    }

    /// Largest absolute coordinate over all letters, a complexity
    /// diagnostic for conjugation growth.
    pub fn max_abs_coefficient(&self) -> Int {
        self.letters
            .iter()
            .map(|l| l.curve.max_abs_coefficient())
            .max()
            .unwrap_or_else(Int::zero)
    }

    /// Composite homology action; the empty word is the identity.
    pub fn word_action(&self) -> ActionMatrix {
        let mut m = ActionMatrix::identity(self.surface);
        for l in &self.letters {
            m = l.action().compose(&m).expect("same surface");
        }
        m
    }

    /// Concatenation `self` then `tail`.
    pub fn concat(&self, tail: &Factorization) -> Result<Factorization, WordError> {
        if tail.surface != self.surface {
            return Err(WordError::MixedSurfaces { index: 0 });
        }
        let mut letters = self.letters.clone();
        letters.extend(tail.letters.iter().cloned());
        Ok(Factorization {
            surface: self.surface,
            letters,
        })
    }

    /// Elementary Hurwitz move: the letter at `position + 1` slides left
    /// past the letter at `position`, picking up conjugation by the
    /// inverse of that letter's action. The word action is unchanged.
    pub fn hurwitz_left(&self, position: usize) -> Result<Factorization, WordError> {
        if position + 1 >= self.len() {
            return Err(WordError::PositionOutOfRange {
                position,
                length: self.len(),
            });
        }
        let left = &self.letters[position];
        let right = &self.letters[position + 1];
        let moved = SignedTwist {
            curve: left.inverse_action().map_curve(&right.curve)?,
            sign: right.sign,
        };
        let mut letters = self.letters.clone();
        letters[position + 1] = left.clone();
        letters[position] = moved;
        Ok(Factorization {
            surface: self.surface,
            letters,
        })
    }

    /// Inverse of [`hurwitz_left`](Self::hurwitz_left) at the same position.
    pub fn hurwitz_right(&self, position: usize) -> Result<Factorization, WordError> {
        if position + 1 >= self.len() {
            return Err(WordError::PositionOutOfRange {
                position,
                length: self.len(),
            });
        }
        let left = &self.letters[position];
        let right = &self.letters[position + 1];
        let moved = SignedTwist {
            curve: right.action().map_curve(&left.curve)?,
            sign: left.sign,
        };
        let mut letters = self.letters.clone();
        letters[position] = right.clone();
        letters[position + 1] = moved;
        Ok(Factorization {
            surface: self.surface,
            letters,
        })
    }

    /// Reverses the letter order and flips every sign; the action of the
    /// result is the inverse of the action of `self`.
    pub fn reverse_inverse(&self) -> Factorization {
        Factorization {
            surface: self.surface,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| SignedTwist {
                    curve: l.curve.clone(),
                    sign: l.sign.flipped(),
                })
                .collect(),
        }
    }

    /// Appends a stabilizing letter on an enlarged surface; see
    /// [`StabilizationSpec`].
    pub fn stabilize(
        &self,
        sign: TwistSign,
        spec: &StabilizationSpec,
    ) -> Result<Factorization, WordError> {
        if self.surface.is_closed() {
            return Err(WordError::ClosedSurface);
        }
        let (bigger, embed, new_generator) = spec.enlarge(self.surface)?;
        let curve = match spec.curve() {
            Some(coords) => validated_stabilizing_class(bigger, coords, new_generator)?,
            None => bigger.basis_class(new_generator),
        };
        let mut letters: Vec<SignedTwist> = self
            .letters
            .iter()
            .map(|l| {
                let coords = embed.apply(l.curve.coords()).expect("embedding rank");
                Ok(SignedTwist {
                    curve: CurveClass::new(bigger, coords)?,
                    sign: l.sign,
                })
            })
            .collect::<Result<_, WordError>>()?;
        letters.push(SignedTwist { curve, sign });
        Ok(Factorization {
            surface: bigger,
            letters,
        })
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "(empty word)");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// How a stabilization enlarges the page.
///
/// `NewBoundary` attaches the 1-handle with both feet on one boundary
/// circle: `(g, m) -> (g, m+1)`, one new radical generator. `NewGenus`
/// joins the last two boundary circles: `(g, m) -> (g+1, m-1)`, needs
/// `m >= 2`; the last radical class becomes the `b`-partner of the new
/// handle generator. Doing one of each keeps the binding connected.
///
/// `curve`, when given, is the stabilizing class on the enlarged basis.
/// It must cross the new handle generator exactly once and otherwise
/// stay in the radical, so that the action on the old sublattice is
/// preserved after capping the new handle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StabilizationSpec {
    NewBoundary { curve: Option<Vec<Int>> },
    NewGenus { curve: Option<Vec<Int>> },
}

impl StabilizationSpec {
    fn curve(&self) -> Option<&[Int]> {
        match self {
            StabilizationSpec::NewBoundary { curve } | StabilizationSpec::NewGenus { curve } => {
                curve.as_deref()
            }
        }
    }

    /// Returns the enlarged surface, the basis embedding (old coordinates
    /// to new), and the index of the new handle generator.
    fn enlarge(&self, surface: Surface) -> Result<(Surface, crate::IntMatrix, usize), WordError> {
        let g = surface.genus();
        let m = surface.boundary_components();
        let old_rank = surface.rank();
        match self {
            StabilizationSpec::NewBoundary { .. } => {
                let bigger = Surface::new(g, m + 1);
                let mut embed = crate::IntMatrix::zeros(bigger.rank(), old_rank);
                for i in 0..old_rank {
                    embed[(i, i)] = Int::one();
                }
                // new generator: the added radical class, last in the basis
                Ok((bigger, embed, bigger.rank() - 1))
            }
            StabilizationSpec::NewGenus { .. } => {
                if m < 2 {
                    return Err(WordError::NotEnoughBoundary { m });
                }
                let bigger = Surface::new(g + 1, m - 1);
                let mut embed = crate::IntMatrix::zeros(bigger.rank(), old_rank);
                // a/b block keeps its place
                for i in 0..2 * g {
                    embed[(i, i)] = Int::one();
                }
                // d_1 .. d_{m-2} shift past the new handle pair
                for jj in 0..m.saturating_sub(2) {
                    embed[(2 * g + 2 + jj, 2 * g + jj)] = Int::one();
                }
                // the joined circle's class becomes b_{g+1}
                embed[(2 * g + 1, 2 * g + m - 2)] = Int::one();
                // new handle generator: a_{g+1}
                Ok((bigger, embed, 2 * g))
            }
        }
    }
}

fn validated_stabilizing_class(
    surface: Surface,
    coords: &[Int],
    new_generator: usize,
) -> Result<CurveClass, WordError> {
    let class = CurveClass::new(surface, coords.to_vec())?;
    let crossing = &class.coords()[new_generator];
    if !crossing.abs().is_one() {
        return Err(WordError::BadHandleCrossing {
            got: crossing.clone(),
        });
    }
    for (i, c) in class.coords().iter().enumerate() {
        if i == new_generator || c.is_zero() {
            continue;
        }
        let radical = i >= 2 * surface.genus();
        // b_{g+1} pairs only with the new generator, which gets capped
        // along with it, so it is harmless too
        let partner = i == new_generator + 1 && new_generator + 1 < 2 * surface.genus();
        if !radical && !partner {
            return Err(WordError::CrossesOldTopology {
                label: surface.basis_label(i),
                got: c.clone(),
            });
        }
    }
    Ok(class)
}

/// Result of the chiral splitting: a purely positive word followed by a
/// purely negative word, action-equal to the input, with the Hurwitz
/// move certificate that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiralSplit {
    pub positive: Factorization,
    pub negative: Factorization,
    /// Positions of the `hurwitz_left` moves applied, in order. Replaying
    /// them on the input reproduces `positive ++ negative` exactly, so
    /// the split can be checked without trusting the splitter.
    pub certificate: Vec<usize>,
}

impl ChiralSplit {
    /// The sign-sorted word `positive ++ negative`.
    pub fn sorted_word(&self) -> Factorization {
        self.positive
            .concat(&self.negative)
            .expect("split parts share the surface")
    }
}

/// Deterministic chiral splitting: repeatedly finds the leftmost adjacent
/// (negative, positive) pair and applies [`Factorization::hurwitz_left`],
/// bubbling positive letters to the front. Terminates after exactly the
/// number of (negative, positive) inversions, at most `k+ * k-` moves;
/// letter counts per sign and the word action are preserved.
pub fn chiral_split(word: &Factorization) -> ChiralSplit {
    let mut current = word.clone();
    let mut certificate = Vec::new();
    loop {
        let inversion = current
            .letters
            .windows(2)
            .position(|w| w[0].sign == TwistSign::Negative && w[1].sign == TwistSign::Positive);
        match inversion {
            None => break,
            Some(i) => {
                current = current.hurwitz_left(i).expect("position in range");
                certificate.push(i);
            }
        }
    }
    let cut = current.positive_count();
    let positive = Factorization {
        surface: current.surface,
        letters: current.letters[..cut].to_vec(),
    };
    let negative = Factorization {
        surface: current.surface,
        letters: current.letters[cut..].to_vec(),
    };
    ChiralSplit {
        positive,
        negative,
        certificate,
    }
}

/// Replays a move certificate on a word.
pub fn replay_certificate(
    word: &Factorization,
    certificate: &[usize],
) -> Result<Factorization, WordError> {
    let mut current = word.clone();
    for &i in certificate {
        current = current.hurwitz_left(i)?;
    }
    Ok(current)
}
