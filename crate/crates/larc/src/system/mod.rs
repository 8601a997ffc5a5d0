//! The bilinear system model: a drift element plus a set of canonical
//! control directions in one algebra, the interaction graphs read off their
//! sparsity patterns, and the valid-edge decomposition that restricts the
//! drift to the part the controls cannot already reach.

mod parse;

pub use parse::{ParseError, ParseErrorKind};

use crate::graph::{DiGraph, GraphError, UGraph};
use crate::lie::{Algebra, BasisElement, Coeff, Family, LieError, LieVector};
use num_traits::Zero;
use std::fmt::Write as _;

/// Interaction pattern of a system or element: undirected for so, directed
/// for sl and gl.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum InteractionGraph {
    Undirected(UGraph),
    Directed(DiGraph),
}

impl InteractionGraph {
    pub fn undirected(&self) -> Option<&UGraph> {
        match self {
            InteractionGraph::Undirected(g) => Some(g),
            InteractionGraph::Directed(_) => None,
        }
    }

    pub fn directed(&self) -> Option<&DiGraph> {
        match self {
            InteractionGraph::Directed(g) => Some(g),
            InteractionGraph::Undirected(_) => None,
        }
    }

    pub fn union_with(&self, other: &InteractionGraph) -> Result<InteractionGraph, GraphError> {
        match (self, other) {
            (InteractionGraph::Undirected(a), InteractionGraph::Undirected(b)) => {
                Ok(InteractionGraph::Undirected(a.union_with(b)?))
            }
            (InteractionGraph::Directed(a), InteractionGraph::Directed(b)) => {
                Ok(InteractionGraph::Directed(a.union_with(b)?))
            }
            _ => Err(GraphError::KindMismatch),
        }
    }

    pub fn to_dot(&self) -> String {
        match self {
            InteractionGraph::Undirected(g) => g.to_dot(),
            InteractionGraph::Directed(g) => g.to_dot(),
        }
    }

    /// Edge or arc pairs in stored order; undirected pairs come out with
    /// i < j.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        match self {
            InteractionGraph::Undirected(g) => g.edges().collect(),
            InteractionGraph::Directed(g) => g.arcs().collect(),
        }
    }
}

/// Sparsity pattern of an element as a graph on 1..=n: skew coordinates
/// become edges, off-diagonal units become arcs. Diagonal units are dropped;
/// they never couple two distinct states.
pub fn phi(v: &LieVector) -> InteractionGraph {
    let n = v.algebra().n();
    match v.algebra().family() {
        Family::So => {
            let mut g = UGraph::new(n);
            for coord in v.support() {
                let (i, j) = coord.indices();
                g.add_edge(i, j)
                    .expect("stored skew coordinates are in range");
            }
            InteractionGraph::Undirected(g)
        }
        Family::Sl | Family::Gl => {
            let mut g = DiGraph::new(n);
            for coord in v.support() {
                let (i, j) = coord.indices();
                if i != j {
                    g.add_arc(i, j)
                        .expect("stored unit coordinates are in range");
                }
            }
            InteractionGraph::Directed(g)
        }
    }
}

/// Drift restricted to the pairs the control closure does not cover.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValidDecomposition {
    /// Fixpoint of the two-path shortcut step on the control graph (on its
    /// simple shadow for gl).
    pub closure_of_controls: InteractionGraph,
    /// Drift pairs outside the closure; equals the sparsity pattern of
    /// `a_tilde`.
    pub valid: InteractionGraph,
    /// Off-diagonal drift part supported exactly on the valid pairs.
    pub a_tilde: LieVector,
}

impl ValidDecomposition {
    pub fn valid_pairs(&self) -> Vec<(usize, usize)> {
        self.valid.pairs()
    }
}

/// A bilinear system: state evolves under a fixed drift element plus
/// independently scalable canonical control directions, all in one algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilinearSystem {
    algebra: Algebra,
    drift: LieVector,
    controls: Vec<BasisElement>,
}

impl BilinearSystem {
    /// Validates drift and control legality against the algebra and drops
    /// duplicate controls, keeping first occurrences in order.
    pub fn new(
        algebra: Algebra,
        drift: LieVector,
        controls: Vec<BasisElement>,
    ) -> Result<Self, LieError> {
        if drift.algebra() != algebra {
            return Err(LieError::AlgebraMismatch {
                left: algebra,
                right: drift.algebra(),
            });
        }
        let mut deduped: Vec<BasisElement> = Vec::with_capacity(controls.len());
        for c in controls {
            algebra.check_control(c)?;
            if !deduped.contains(&c) {
                deduped.push(c);
            }
        }
        Ok(BilinearSystem {
            algebra,
            drift,
            controls: deduped,
        })
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn drift(&self) -> &LieVector {
        &self.drift
    }

    pub fn controls(&self) -> &[BasisElement] {
        &self.controls
    }

    pub fn is_driftless(&self) -> bool {
        self.drift.is_zero()
    }

    /// Drift and controls as algebra elements, the generator list whose
    /// closure the rank condition inspects. A zero drift contributes
    /// nothing.
    pub fn generators(&self) -> Vec<LieVector> {
        let mut out = Vec::with_capacity(self.controls.len() + 1);
        if !self.drift.is_zero() {
            out.push(self.drift.clone());
        }
        for &c in &self.controls {
            out.push(
                LieVector::basis(self.algebra, c).expect("controls were validated on construction"),
            );
        }
        out
    }

    /// Sparsity pattern of the drift. For so and sl this is `phi(drift)`;
    /// for gl diagonal coordinates additionally appear as self-loops.
    pub fn drift_graph(&self) -> InteractionGraph {
        match self.algebra.family() {
            Family::So | Family::Sl => phi(&self.drift),
            Family::Gl => {
                let mut g = DiGraph::with_self_loops(self.algebra.n());
                for coord in self.drift.support() {
                    let (i, j) = coord.indices();
                    g.add_arc(i, j).expect("stored coordinates are in range");
                }
                InteractionGraph::Directed(g)
            }
        }
    }

    /// Sparsity pattern of the controls: edges for skew controls, arcs for
    /// unit controls, self-loops for diagonal gl controls. Diagonal
    /// differences contribute nothing; they couple no pair of states by
    /// themselves.
    pub fn control_graph(&self) -> InteractionGraph {
        let n = self.algebra.n();
        match self.algebra.family() {
            Family::So => {
                let mut g = UGraph::new(n);
                for &c in &self.controls {
                    let (i, j) = c.indices();
                    g.add_edge(i, j).expect("controls are in range");
                }
                InteractionGraph::Undirected(g)
            }
            Family::Sl => {
                let mut g = DiGraph::new(n);
                for &c in &self.controls {
                    if let BasisElement::Unit { i, j } = c {
                        g.add_arc(i, j).expect("controls are in range");
                    }
                }
                InteractionGraph::Directed(g)
            }
            Family::Gl => {
                let mut g = DiGraph::with_self_loops(n);
                for &c in &self.controls {
                    let (i, j) = c.indices();
                    g.add_arc(i, j).expect("controls are in range");
                }
                InteractionGraph::Directed(g)
            }
        }
    }

    pub fn union_graph(&self) -> InteractionGraph {
        self.drift_graph()
            .union_with(&self.control_graph())
            .expect("drift and control graphs share kind and size")
    }

    /// Splits the drift against the control closure: pairs already inside
    /// the closed control pattern are discarded, the rest form `a_tilde`.
    /// Diagonal structure (gl) never enters; the decomposition lives on
    /// simple patterns.
    pub fn valid_decomposition(&self) -> ValidDecomposition {
        match self.algebra.family() {
            Family::So => {
                let control = self.control_graph();
                let closure = control
                    .undirected()
                    .expect("so control graph is undirected")
                    .transitive_closure();
                let drift_graph = phi(&self.drift);
                let drift_edges = drift_graph
                    .undirected()
                    .expect("so drift graph is undirected");
                let mut valid = UGraph::new(self.algebra.n());
                let mut terms: Vec<(BasisElement, Coeff)> = Vec::new();
                for (i, j) in drift_edges.edges() {
                    if !closure.has_edge(i, j) {
                        valid.add_edge(i, j).expect("drift edges are in range");
                        let coord = BasisElement::skew(i, j);
                        terms.push((coord, self.drift.coefficient(coord)));
                    }
                }
                let a_tilde = LieVector::from_terms(self.algebra, terms)
                    .expect("drift coordinates are legal");
                ValidDecomposition {
                    closure_of_controls: InteractionGraph::Undirected(closure),
                    valid: InteractionGraph::Undirected(valid),
                    a_tilde,
                }
            }
            Family::Sl | Family::Gl => {
                let control = match self.control_graph() {
                    InteractionGraph::Directed(g) => g.simple_shadow(),
                    InteractionGraph::Undirected(_) => {
                        unreachable!("sl/gl control graphs are directed")
                    }
                };
                let closure = control
                    .simple_transitive_closure()
                    .expect("shadow is simple");
                let mut valid = DiGraph::new(self.algebra.n());
                let mut terms: Vec<(BasisElement, Coeff)> = Vec::new();
                for coord in self.drift.support() {
                    let (i, j) = coord.indices();
                    if i != j && !closure.has_arc(i, j) {
                        valid.add_arc(i, j).expect("drift arcs are in range");
                        terms.push((coord, self.drift.coefficient(coord)));
                    }
                }
                let a_tilde = LieVector::from_terms(self.algebra, terms)
                    .expect("drift coordinates are legal");
                ValidDecomposition {
                    closure_of_controls: InteractionGraph::Directed(closure),
                    valid: InteractionGraph::Directed(valid),
                    a_tilde,
                }
            }
        }
    }

    /// Renders the system in the text format `parse` accepts. Diagonal sl
    /// drift is emitted as a chain of C lines via prefix sums, every other
    /// coordinate maps to one line.
    pub fn to_sys_string(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "group {} {}", self.algebra.family(), self.algebra.n());
        match self.algebra.family() {
            Family::So | Family::Gl => {
                for (coord, c) in self.drift.terms() {
                    let (i, j) = coord.indices();
                    let _ = writeln!(s, "drift {} {} {} {}", coord.tag(), i, j, c);
                }
            }
            Family::Sl => {
                for (coord, c) in self.drift.terms() {
                    let (i, j) = coord.indices();
                    if i != j {
                        let _ = writeln!(s, "drift E {i} {j} {c}");
                    }
                }
                // Diagonal (d_1..d_n) with zero sum equals the prefix-sum
                // combination sum_k (d_1 + .. + d_k) C[k,k+1].
                let n = self.algebra.n();
                let mut prefix = Coeff::zero();
                for k in 1..n {
                    prefix += self.drift.coefficient(BasisElement::unit(k, k));
                    if !prefix.is_zero() {
                        let _ = writeln!(s, "drift C {} {} {}", k, k + 1, prefix);
                    }
                }
            }
        }
        for &c in &self.controls {
            let (i, j) = c.indices();
            let _ = writeln!(s, "control {} {} {}", c.tag(), i, j);
        }
        s
    }

    /// Parses the `group`/`drift`/`control` line format; see the crate
    /// README for the grammar.
    pub fn parse(src: &str) -> Result<Self, ParseError> {
        parse::parse_system(src)
    }
}
