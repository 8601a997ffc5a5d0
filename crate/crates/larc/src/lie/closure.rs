use super::{Algebra, Coeff, LieError, LieVector};
use num_traits::{One, Zero};

/// A subspace basis in reduced row-echelon form over the canonical
/// coordinate order.
///
/// Invariants: pivot coordinates strictly increase across rows, every pivot
/// coefficient is one, and each pivot coordinate is zero in every other row.
/// The reduced form is the unique normal form of the subspace, so two bases
/// compare equal exactly when they span the same subspace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubalgebraBasis {
    algebra: Algebra,
    rows: Vec<LieVector>,
}

impl SubalgebraBasis {
    pub fn empty(algebra: Algebra) -> Self {
        SubalgebraBasis {
            algebra,
            rows: Vec::new(),
        }
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[LieVector] {
        &self.rows
    }

    fn check_algebra(&self, v: &LieVector) -> Result<(), LieError> {
        if v.algebra() != self.algebra {
            return Err(LieError::AlgebraMismatch {
                left: self.algebra,
                right: v.algebra(),
            });
        }
        Ok(())
    }

    /// The residual of `v` after eliminating every pivot coordinate. Zero
    /// exactly when `v` lies in the span.
    pub fn reduce(&self, v: &LieVector) -> Result<LieVector, LieError> {
        self.check_algebra(v)?;
        let mut r = v.clone();
        // Rows are pivot-sorted and echelon, so one forward pass suffices:
        // eliminating with a row never reintroduces smaller coordinates.
        for row in &self.rows {
            let (p, _) = row.pivot().expect("basis rows are nonzero");
            let c = r.coefficient(p);
            if !c.is_zero() {
                r.add_scaled(row, &-c);
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &LieVector) -> Result<bool, LieError> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Reduces `v` and, if independent, grows the basis. Returns the monic
    /// residual that was added, or None when `v` was already in the span.
    pub fn insert(&mut self, v: &LieVector) -> Result<Option<LieVector>, LieError> {
        let r = self.reduce(v)?;
        if r.is_zero() {
            return Ok(None);
        }
        let (p, lead) = r.pivot().expect("nonzero residual has a pivot");
        let monic = r.scale(&(Coeff::one() / lead));
        // Restore full reduction: clear the new pivot from existing rows.
        for row in &mut self.rows {
            let c = row.coefficient(p);
            if !c.is_zero() {
                row.add_scaled(&monic, &-c);
            }
        }
        let at = self
            .rows
            .partition_point(|row| row.pivot().expect("nonzero").0 < p);
        self.rows.insert(at, monic.clone());
        Ok(Some(monic))
    }
}

/// Smallest Lie subalgebra containing the generators, as a reduced-echelon
/// basis. Zero generators are dropped; an empty list yields dimension zero.
///
/// Each sweep brackets the vectors discovered in the previous sweep against
/// everything discovered so far (one order only, by antisymmetry) and the
/// loop stops at the first sweep that adds nothing, or as soon as the span
/// reaches the full algebra, which no subalgebra can exceed. The bracketed
/// operands are the frozen residuals recorded at insertion time, so on a
/// silent sweep every pair from a spanning set has reduced to zero and the
/// span is closed by bilinearity.
pub fn lie_closure(
    algebra: Algebra,
    generators: &[LieVector],
) -> Result<SubalgebraBasis, LieError> {
    let mut basis = SubalgebraBasis::empty(algebra);
    let mut frozen: Vec<LieVector> = Vec::new();
    for g in generators {
        basis.check_algebra(g)?;
        if let Some(added) = basis.insert(g)? {
            frozen.push(added);
        }
    }
    let full = algebra.dim();
    let mut frontier_start = 0;
    while frontier_start < frozen.len() && basis.dim() < full {
        let sweep_end = frozen.len();
        for i in frontier_start..sweep_end {
            for j in 0..i {
                let w = frozen[i]
                    .bracket(&frozen[j])
                    .expect("frozen rows share the algebra");
                if let Some(added) = basis.insert(&w).expect("frozen rows share the algebra") {
                    frozen.push(added);
                }
            }
            if basis.dim() == full {
                break;
            }
        }
        frontier_start = sweep_end;
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::BasisElement;
    use num_bigint::BigInt;

    fn rat(p: i64) -> Coeff {
        Coeff::from_integer(BigInt::from(p))
    }

    fn b(i: usize, j: usize) -> BasisElement {
        BasisElement::skew(i, j)
    }

    fn e(i: usize, j: usize) -> BasisElement {
        BasisElement::unit(i, j)
    }

    fn basis_vec(a: Algebra, elem: BasisElement) -> LieVector {
        LieVector::basis(a, elem).unwrap()
    }

    #[test]
    fn opposite_units_close_into_the_standard_three_dimensional_algebra() {
        let sl2 = Algebra::sl(2);
        let gens = [basis_vec(sl2, e(1, 2)), basis_vec(sl2, e(2, 1))];
        let basis = lie_closure(sl2, &gens).unwrap();
        assert_eq!(basis.dim(), 3);
        let diag = basis_vec(sl2, BasisElement::diag_diff(1, 2));
        assert!(basis.contains(&diag).unwrap());
    }

    #[test]
    fn single_diagonal_unit_is_outside_the_opposite_pair_closure() {
        let gl2 = Algebra::gl(2);
        let gens = [basis_vec(gl2, e(1, 2)), basis_vec(gl2, e(2, 1))];
        let basis = lie_closure(gl2, &gens).unwrap();
        assert_eq!(basis.dim(), 3);
        assert!(!basis.contains(&basis_vec(gl2, e(1, 1))).unwrap());
    }

    #[test]
    fn empty_and_zero_generators_yield_dimension_zero() {
        let so4 = Algebra::so(4);
        assert_eq!(lie_closure(so4, &[]).unwrap().dim(), 0);
        assert_eq!(lie_closure(so4, &[LieVector::zero(so4)]).unwrap().dim(), 0);
    }

    #[test]
    fn three_cycle_of_units_spans_the_whole_traceless_algebra() {
        let sl3 = Algebra::sl(3);
        let gens = [
            basis_vec(sl3, e(1, 2)),
            basis_vec(sl3, e(2, 3)),
            basis_vec(sl3, e(3, 1)),
        ];
        assert_eq!(lie_closure(sl3, &gens).unwrap().dim(), 8);
    }

    #[test]
    fn full_canonical_basis_is_already_closed() {
        let gl3 = Algebra::gl(3);
        let gens: Vec<_> = gl3
            .spanning_generators()
            .into_iter()
            .map(|el| basis_vec(gl3, el))
            .collect();
        assert_eq!(lie_closure(gl3, &gens).unwrap().dim(), 9);
    }

    #[test]
    fn reduced_echelon_basis_is_canonical_under_generator_permutation() {
        let so5 = Algebra::so(5);
        let gens = vec![
            LieVector::from_terms(so5, [(b(1, 2), rat(1)), (b(2, 3), rat(2))]).unwrap(),
            LieVector::from_terms(so5, [(b(1, 4), rat(-3)), (b(4, 5), rat(1))]).unwrap(),
            basis_vec(so5, b(2, 4)),
        ];
        let forward = lie_closure(so5, &gens).unwrap();
        let mut reversed = gens.clone();
        reversed.reverse();
        let backward = lie_closure(so5, &reversed).unwrap();
        assert_eq!(forward, backward);
    }

    #[test]
    fn insert_keeps_rows_fully_reduced() {
        let so4 = Algebra::so(4);
        let mut basis = SubalgebraBasis::empty(so4);
        let v1 = LieVector::from_terms(so4, [(b(1, 2), rat(2)), (b(1, 3), rat(4))]).unwrap();
        let v2 = LieVector::from_terms(so4, [(b(1, 3), rat(3)), (b(1, 4), rat(3))]).unwrap();
        basis.insert(&v1).unwrap();
        basis.insert(&v2).unwrap();
        assert_eq!(basis.dim(), 2);
        for row in basis.rows() {
            let (p, lead) = row.pivot().unwrap();
            assert!(lead.is_one());
            for other in basis.rows() {
                if other != row {
                    assert!(other.coefficient(p).is_zero());
                }
            }
        }
        // Pivot order is the coordinate order.
        let pivots: Vec<_> = basis.rows().iter().map(|r| r.pivot().unwrap().0).collect();
        assert_eq!(pivots, vec![b(1, 2), b(1, 3)]);
    }

    #[test]
    fn membership_distinguishes_span_from_complement() {
        let so4 = Algebra::so(4);
        let gens = [basis_vec(so4, b(1, 2)), basis_vec(so4, b(2, 3))];
        let basis = lie_closure(so4, &gens).unwrap();
        assert_eq!(basis.dim(), 3);
        assert!(basis.contains(&basis_vec(so4, b(1, 3))).unwrap());
        assert!(!basis.contains(&basis_vec(so4, b(1, 4))).unwrap());
    }
}
