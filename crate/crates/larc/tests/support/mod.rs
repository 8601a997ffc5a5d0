//! Dense-matrix reference implementations used to cross-check the sparse
//! structure-constant arithmetic in the library. Everything here works on
//! literal n x n rational matrices: brackets are XY - YX, and subspace
//! dimensions come from row reduction over the n^2 flattened entries. The
//! only shared vocabulary with the library is the meaning of each basis
//! element as a matrix.

use larc::{Algebra, BasisElement, Coeff, LieVector};
use num_traits::{One, Zero};

pub type Dense = Vec<Vec<Coeff>>;

pub fn zero_matrix(n: usize) -> Dense {
    vec![vec![Coeff::zero(); n]; n]
}

/// Literal matrix for a basis element: B[i,j] = E_ij - E_ji,
/// E[i,j] the unit matrix, C[i,j] = E_ii - E_jj. Indices are 1-based.
pub fn dense_basis(n: usize, e: BasisElement) -> Dense {
    let mut m = zero_matrix(n);
    match e {
        BasisElement::Skew { i, j } => {
            m[i - 1][j - 1] = Coeff::one();
            m[j - 1][i - 1] = -Coeff::one();
        }
        BasisElement::Unit { i, j } => {
            m[i - 1][j - 1] = Coeff::one();
        }
        BasisElement::DiagDiff { i, j } => {
            m[i - 1][i - 1] = Coeff::one();
            m[j - 1][j - 1] = -Coeff::one();
        }
    }
    m
}

pub fn dense_of(v: &LieVector) -> Dense {
    let n = v.algebra().n();
    let mut out = zero_matrix(n);
    for (elem, coeff) in v.terms() {
        let m = dense_basis(n, elem);
        for r in 0..n {
            for c in 0..n {
                if !m[r][c].is_zero() {
                    out[r][c] += &m[r][c] * coeff;
                }
            }
        }
    }
    out
}

pub fn matmul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let mut out = zero_matrix(n);
    for r in 0..n {
        for t in 0..n {
            if a[r][t].is_zero() {
                continue;
            }
            for c in 0..n {
                if !b[t][c].is_zero() {
                    out[r][c] += &a[r][t] * &b[t][c];
                }
            }
        }
    }
    out
}

pub fn commutator(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let ab = matmul(a, b);
    let ba = matmul(b, a);
    let mut out = zero_matrix(n);
    for r in 0..n {
        for c in 0..n {
            out[r][c] = &ab[r][c] - &ba[r][c];
        }
    }
    out
}

fn flatten(m: &Dense) -> Vec<Coeff> {
    m.iter().flat_map(|row| row.iter().cloned()).collect()
}

/// Incremental row-reduced basis over flattened matrices. Returns true when
/// the vector enlarged the span.
pub struct DenseSpan {
    rows: Vec<(usize, Vec<Coeff>)>,
}

impl DenseSpan {
    pub fn new() -> Self {
        DenseSpan { rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, m: &Dense) -> bool {
        let mut v = flatten(m);
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let factor = v[*pivot].clone();
                for (x, r) in v.iter_mut().zip(row.iter()) {
                    *x -= &factor * r;
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = v[pivot].clone();
        for x in v.iter_mut() {
            *x /= &lead;
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let factor = row[pivot].clone();
                for (x, r) in row.iter_mut().zip(v.iter()) {
                    *x -= &factor * r;
                }
            }
        }
        self.rows.push((pivot, v));
        self.rows.sort_by_key(|(p, _)| *p);
        true
    }
}

impl Default for DenseSpan {
    fn default() -> Self {
        Self::new()
    }
}

/// Bracket-closure dimension computed purely on dense matrices: keep a list
/// of spanning matrices, bracket every new arrival against every earlier
/// one, and stop when a full sweep adds nothing.
pub fn dense_closure_dim(generators: &[Dense]) -> usize {
    let mut span = DenseSpan::new();
    let mut mats: Vec<Dense> = Vec::new();
    for g in generators {
        if span.insert(g) {
            mats.push(g.clone());
        }
    }
    let mut frontier = 0;
    while frontier < mats.len() {
        let high = mats.len();
        for i in frontier..high {
            for j in 0..i {
                let c = commutator(&mats[i], &mats[j]);
                if span.insert(&c) {
                    mats.push(c);
                }
            }
        }
        frontier = high;
    }
    span.dim()
}

/// Closure dimension of a system's generators, dense end to end.
pub fn dense_system_closure_dim(sys: &larc::system::BilinearSystem) -> usize {
    let gens: Vec<Dense> = sys.generators().iter().map(dense_of).collect();
    dense_closure_dim(&gens)
}

pub fn dense_eq(a: &Dense, b: &Dense) -> bool {
    a == b
}

/// All canonical basis elements of the algebra, via the control alphabet,
/// which for each family enumerates exactly the canonical spanning set.
pub fn canonical_elements(algebra: Algebra) -> Vec<BasisElement> {
    algebra.control_alphabet()
}
