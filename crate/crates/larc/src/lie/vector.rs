use super::{Algebra, BasisElement, Coeff, Family, LieError};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A sparse exact element of one algebra.
///
/// Invariants: every stored coordinate is canonical for the algebra (skew
/// pairs for so, units for sl/gl), no coefficient is zero, and sl vectors
/// have zero trace. All constructors and operations preserve these.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieVector {
    algebra: Algebra,
    coeffs: BTreeMap<BasisElement, Coeff>,
}

impl LieVector {
    pub fn zero(algebra: Algebra) -> Self {
        LieVector {
            algebra,
            coeffs: BTreeMap::new(),
        }
    }

    /// The canonical element `elem` with coefficient one. Diagonal
    /// differences expand to E[i,i] - E[j,j].
    pub fn basis(algebra: Algebra, elem: BasisElement) -> Result<Self, LieError> {
        let mut v = LieVector::zero(algebra);
        v.accumulate(elem, &Coeff::one())?;
        Ok(v)
    }

    /// Sums `coeff * elem` over the given terms. Terms may repeat and may
    /// cancel; the result is in normal form.
    pub fn from_terms<I>(algebra: Algebra, terms: I) -> Result<Self, LieError>
    where
        I: IntoIterator<Item = (BasisElement, Coeff)>,
    {
        let mut v = LieVector::zero(algebra);
        for (elem, c) in terms {
            v.accumulate(elem, &c)?;
        }
        Ok(v)
    }

    /// Adds `c * elem` in place, expanding diagonal differences.
    fn accumulate(&mut self, elem: BasisElement, c: &Coeff) -> Result<(), LieError> {
        self.algebra.check_element(elem)?;
        if c.is_zero() {
            return Ok(());
        }
        match elem {
            BasisElement::DiagDiff { i, j } => {
                self.add_coord(BasisElement::unit(i, i), c.clone());
                self.add_coord(BasisElement::unit(j, j), -c.clone());
            }
            coord => self.add_coord(coord, c.clone()),
        }
        Ok(())
    }

    fn add_coord(&mut self, coord: BasisElement, delta: Coeff) {
        if delta.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(coord).or_insert_with(Coeff::zero);
        *entry += delta;
        if entry.is_zero() {
            self.coeffs.remove(&coord);
        }
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of nonzero stored coordinates.
    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, coord: BasisElement) -> Coeff {
        self.coeffs.get(&coord).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Nonzero stored coordinates in canonical order.
    pub fn support(&self) -> impl Iterator<Item = BasisElement> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (BasisElement, &Coeff)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    /// Smallest nonzero coordinate and its coefficient.
    pub(crate) fn pivot(&self) -> Option<(BasisElement, &Coeff)> {
        self.coeffs.iter().next().map(|(k, v)| (*k, v))
    }

    fn check_same_algebra(&self, other: &LieVector) -> Result<(), LieError> {
        if self.algebra != other.algebra {
            return Err(LieError::AlgebraMismatch {
                left: self.algebra,
                right: other.algebra,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &LieVector) -> Result<LieVector, LieError> {
        self.check_same_algebra(other)?;
        let mut out = self.clone();
        for (coord, c) in other.terms() {
            out.add_coord(coord, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LieVector) -> Result<LieVector, LieError> {
        self.check_same_algebra(other)?;
        let mut out = self.clone();
        for (coord, c) in other.terms() {
            out.add_coord(coord, -c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coeff) -> LieVector {
        if c.is_zero() {
            return LieVector::zero(self.algebra);
        }
        let coeffs = self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect();
        LieVector {
            algebra: self.algebra,
            coeffs,
        }
    }

    /// Adds `c` times `other` in place; the workhorse of echelon reduction.
    pub(crate) fn add_scaled(&mut self, other: &LieVector, c: &Coeff) {
        debug_assert_eq!(self.algebra, other.algebra);
        if c.is_zero() {
            return;
        }
        for (coord, v) in other.terms() {
            self.add_coord(coord, v * c);
        }
    }

    /// Sum of diagonal coefficients. Zero for so by construction, an
    /// invariant zero for sl, and meaningful for gl.
    pub fn trace(&self) -> Coeff {
        let mut t = Coeff::zero();
        for (coord, c) in &self.coeffs {
            if let BasisElement::Unit { i, j } = coord {
                if i == j {
                    t += c;
                }
            }
        }
        t
    }

    /// Lie bracket [self, other] = self * other - other * self, computed
    /// through the structure constants of the canonical coordinates rather
    /// than matrix products.
    pub fn bracket(&self, other: &LieVector) -> Result<LieVector, LieError> {
        self.check_same_algebra(other)?;
        let mut out = LieVector::zero(self.algebra);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let w = ca * cb;
                match self.algebra.family() {
                    Family::So => skew_bracket(a, b, &w, &mut out),
                    Family::Sl | Family::Gl => unit_bracket(a, b, &w, &mut out),
                }
            }
        }
        debug_assert!(self.algebra.family() != Family::Sl || out.trace().is_zero());
        Ok(out)
    }
}

/// Adds `w * [B[ij], B[kl]]` to `out`:
/// [B[ij], B[kl]] = d_jk B[il] + d_il B[jk] + d_jl B[ki] + d_ik B[lj],
/// where each term with reversed indices re-normalizes by a sign flip and
/// coincident indices vanish.
fn skew_bracket(a: BasisElement, b: BasisElement, w: &Coeff, out: &mut LieVector) {
    let (BasisElement::Skew { i, j }, BasisElement::Skew { i: k, j: l }) = (a, b) else {
        unreachable!("so vectors store only skew coordinates");
    };
    let mut term = |p: usize, q: usize| {
        if p == q {
            return;
        }
        let (coord, sign) = if p < q {
            (BasisElement::skew(p, q), 1)
        } else {
            (BasisElement::skew(q, p), -1)
        };
        out.add_coord(coord, if sign > 0 { w.clone() } else { -w.clone() });
    };
    if j == k {
        term(i, l);
    }
    if i == l {
        term(j, k);
    }
    if j == l {
        term(k, i);
    }
    if i == k {
        term(l, j);
    }
}

/// Adds `w * [E[ij], E[kl]]` to `out`: [E[ij], E[kl]] = d_jk E[il] - d_li E[kj].
fn unit_bracket(a: BasisElement, b: BasisElement, w: &Coeff, out: &mut LieVector) {
    let (BasisElement::Unit { i, j }, BasisElement::Unit { i: k, j: l }) = (a, b) else {
        unreachable!("sl/gl vectors store only unit coordinates");
    };
    if j == k {
        out.add_coord(BasisElement::unit(i, l), w.clone());
    }
    if l == i {
        out.add_coord(BasisElement::unit(k, j), -w.clone());
    }
}

impl fmt::Display for LieVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (coord, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if mag.is_one() {
                write!(f, "{coord}")?;
            } else {
                write!(f, "{mag}*{coord}")?;
            }
        }
        Ok(())
    }
}
