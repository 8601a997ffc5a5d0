//! Canonical bases and exact arithmetic for the matrix Lie algebras so(n),
//! sl(n) and gl(n).
//!
//! Elements are sparse rational combinations of canonical coordinates:
//! skew pairs B[i,j] = E[i,j] - E[j,i] (i < j) for so(n), and matrix units
//! E[i,j] for sl(n) and gl(n). Diagonal differences C[i,j] = E[i,i] - E[j,j]
//! are accepted as input and expanded into units on construction.

mod closure;
mod vector;

pub use closure::{lie_closure, SubalgebraBasis};
pub use vector::LieVector;

use serde::Serialize;
use std::fmt;

/// Coefficient field: arbitrary-precision rationals, so rank decisions are
/// exact and independent of conditioning.
pub type Coeff = num_rational::BigRational;

/// The three matrix-group families the crate handles.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    So,
    Sl,
    Gl,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::So => "so",
            Family::Sl => "sl",
            Family::Gl => "gl",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One of so(n), sl(n), gl(n) for a fixed n >= 2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Algebra {
    family: Family,
    n: usize,
}

impl Algebra {
    /// Requires n >= 2; smaller sizes have no off-diagonal structure to
    /// reason about.
    pub fn new(family: Family, n: usize) -> Result<Self, LieError> {
        if n < 2 {
            return Err(LieError::DimensionTooSmall { n });
        }
        Ok(Algebra { family, n })
    }

    pub fn so(n: usize) -> Self {
        Algebra::new(Family::So, n).expect("n >= 2")
    }

    pub fn sl(n: usize) -> Self {
        Algebra::new(Family::Sl, n).expect("n >= 2")
    }

    pub fn gl(n: usize) -> Self {
        Algebra::new(Family::Gl, n).expect("n >= 2")
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn n(self) -> usize {
        self.n
    }

    /// Dimension of the algebra as a real vector space: n(n-1)/2, n^2 - 1,
    /// n^2 respectively.
    pub fn dim(self) -> usize {
        let n = self.n;
        match self.family {
            Family::So => n * (n - 1) / 2,
            Family::Sl => n * n - 1,
            Family::Gl => n * n,
        }
    }

    /// Checks an element against the canonical-basis table of this algebra:
    /// so admits only B tags, sl admits off-diagonal E and C tags, gl admits
    /// every E tag plus C tags. Indices must lie in 1..=n.
    pub fn check_element(self, elem: BasisElement) -> Result<(), LieError> {
        let illegal = |e| {
            Err(LieError::IllegalElement {
                algebra: self,
                elem: e,
            })
        };
        let (i, j) = elem.indices();
        if i < 1 || j < 1 || i > self.n || j > self.n {
            return Err(LieError::IndexOutOfRange { elem, n: self.n });
        }
        match (self.family, elem) {
            (Family::So, BasisElement::Skew { .. }) => Ok(()),
            (Family::So, e) => illegal(e),
            (Family::Sl, BasisElement::Unit { i, j }) if i != j => Ok(()),
            (Family::Sl, BasisElement::DiagDiff { .. }) => Ok(()),
            (Family::Sl, e) => illegal(e),
            (Family::Gl, BasisElement::Unit { .. }) => Ok(()),
            (Family::Gl, BasisElement::DiagDiff { .. }) => Ok(()),
            (Family::Gl, e) => illegal(e),
        }
    }

    /// Elements admissible as control directions. Same as `check_element`
    /// except that gl controls are plain units only: a diagonal-difference
    /// control has no place in the gl model, whose controls are single units.
    pub fn check_control(self, elem: BasisElement) -> Result<(), LieError> {
        self.check_element(elem)?;
        if self.family == Family::Gl && matches!(elem, BasisElement::DiagDiff { .. }) {
            return Err(LieError::IllegalElement {
                algebra: self,
                elem,
            });
        }
        Ok(())
    }

    /// Every element admissible as a control direction, in canonical order.
    pub fn control_alphabet(self) -> Vec<BasisElement> {
        let n = self.n;
        let mut out = Vec::new();
        match self.family {
            Family::So => {
                for i in 1..=n {
                    for j in i + 1..=n {
                        out.push(BasisElement::skew(i, j));
                    }
                }
            }
            Family::Sl => {
                for i in 1..=n {
                    for j in 1..=n {
                        if i != j {
                            out.push(BasisElement::unit(i, j));
                        }
                    }
                }
                for i in 1..=n {
                    for j in 1..=n {
                        if i != j {
                            out.push(BasisElement::diag_diff(i, j));
                        }
                    }
                }
            }
            Family::Gl => {
                for i in 1..=n {
                    for j in 1..=n {
                        out.push(BasisElement::unit(i, j));
                    }
                }
            }
        }
        out
    }

    /// A spanning set of canonical elements: all skew pairs for so(n), the
    /// off-diagonal units plus the diagonal-difference chain C[k,k+1] for
    /// sl(n), all units for gl(n). Its closure must reach `dim`.
    pub fn spanning_generators(self) -> Vec<BasisElement> {
        let n = self.n;
        match self.family {
            Family::So | Family::Gl => self.control_alphabet(),
            Family::Sl => {
                let mut out: Vec<_> = (1..=n)
                    .flat_map(|i| {
                        (1..=n)
                            .filter(move |&j| j != i)
                            .map(move |j| BasisElement::unit(i, j))
                    })
                    .collect();
                out.extend((1..n).map(|k| BasisElement::diag_diff(k, k + 1)));
                out
            }
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.n)
    }
}

/// A canonical basis element, before expansion into stored coordinates.
///
/// Stored coordinates of a [`LieVector`] are only ever `Skew` (so) or `Unit`
/// (sl, gl); `DiagDiff` expands to a difference of two diagonal units. The
/// derived order (tag, i, j) is the coordinate order used for echelon
/// pivoting, so it must not be rearranged.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BasisElement {
    /// B[i,j] = E[i,j] - E[j,i] with i < j.
    Skew { i: usize, j: usize },
    /// Matrix unit E[i,j].
    Unit { i: usize, j: usize },
    /// C[i,j] = E[i,i] - E[j,j] with i != j.
    DiagDiff { i: usize, j: usize },
}

impl BasisElement {
    /// Panics unless 1 <= i < j; use `LieVector` arithmetic for reversed
    /// skew pairs (B[j,i] = -B[i,j]).
    pub fn skew(i: usize, j: usize) -> Self {
        assert!(
            i >= 1 && i < j,
            "skew pair needs 1 <= i < j, got ({i}, {j})"
        );
        BasisElement::Skew { i, j }
    }

    pub fn unit(i: usize, j: usize) -> Self {
        assert!(i >= 1 && j >= 1, "unit indices are 1-based, got ({i}, {j})");
        BasisElement::Unit { i, j }
    }

    pub fn diag_diff(i: usize, j: usize) -> Self {
        assert!(
            i >= 1 && j >= 1 && i != j,
            "diagonal difference needs distinct 1-based indices, got ({i}, {j})"
        );
        BasisElement::DiagDiff { i, j }
    }

    pub fn indices(self) -> (usize, usize) {
        match self {
            BasisElement::Skew { i, j }
            | BasisElement::Unit { i, j }
            | BasisElement::DiagDiff { i, j } => (i, j),
        }
    }

    pub fn tag(self) -> char {
        match self {
            BasisElement::Skew { .. } => 'B',
            BasisElement::Unit { .. } => 'E',
            BasisElement::DiagDiff { .. } => 'C',
        }
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = self.indices();
        write!(f, "{}[{},{}]", self.tag(), i, j)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum LieError {
    #[error("algebra dimension must be at least 2, got {n}")]
    DimensionTooSmall { n: usize },
    #[error("element {elem} is not a canonical element of {algebra}")]
    IllegalElement {
        algebra: Algebra,
        elem: BasisElement,
    },
    #[error("element {elem} has an index outside 1..={n}")]
    IndexOutOfRange { elem: BasisElement, n: usize },
    #[error("operands live in different algebras: {left} vs {right}")]
    AlgebraMismatch { left: Algebra, right: Algebra },
}
