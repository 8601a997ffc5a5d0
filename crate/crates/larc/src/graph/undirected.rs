use super::{collect_components, GraphError};
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// Simple undirected graph on nodes 1..=n; edges are stored as ordered pairs
/// (i, j) with i < j.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl UGraph {
    pub fn new(n: usize) -> Self {
        UGraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn with_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = UGraph::new(n);
        for (i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    fn check_node(&self, v: usize) -> Result<(), GraphError> {
        if v < 1 || v > self.n {
            return Err(GraphError::NodeOutOfRange { node: v, n: self.n });
        }
        Ok(())
    }

    /// Inserts {i, j}; order of the endpoints is irrelevant and duplicates
    /// are absorbed. Self-loops are rejected.
    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<(), GraphError> {
        self.check_node(i)?;
        self.check_node(j)?;
        if i == j {
            return Err(GraphError::SelfLoop { node: i });
        }
        self.edges.insert((i.min(j), i.max(j)));
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.edges.contains(&(i.min(j), i.max(j)))
    }

    /// Edges in lexicographic order, each as (i, j) with i < j.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(i, j)| i == v || j == v)
            .count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(i, j)| {
                if i == v {
                    Some(j)
                } else if j == v {
                    Some(i)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Connected components: nodes ascending inside each, components ordered
    /// by smallest member. Isolated nodes are singleton components.
    pub fn components(&self) -> Vec<Vec<usize>> {
        collect_components(self.n, |v| self.neighbors(v))
    }

    pub fn connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    /// One two-path shortcut step: adds {i, k} for every path i - j - k with
    /// i != k, keeping all existing edges.
    pub fn transitive_closure_step(&self) -> UGraph {
        let mut out = self.clone();
        for v in 1..=self.n {
            let nb = self.neighbors(v);
            for (a, &i) in nb.iter().enumerate() {
                for &k in &nb[a + 1..] {
                    out.edges.insert((i, k));
                }
            }
        }
        out
    }

    /// Fixpoint of the shortcut step: every component becomes a clique.
    ///
    /// Convergence takes logarithmically many steps, so failing to settle
    /// within n + 1 sweeps indicates a broken step and panics.
    pub fn transitive_closure(&self) -> UGraph {
        let mut cur = self.clone();
        for _ in 0..=self.n {
            let next = cur.transitive_closure_step();
            if next == cur {
                return cur;
            }
            cur = next;
        }
        panic!("two-path closure failed to stabilize within n + 1 sweeps");
    }

    /// Pair-rewiring closure for distinct non-equal nodes i, j: the new edge
    /// set consists of j's neighborhood transported to i and i's neighborhood
    /// transported to j, dropping would-be self-loops. Existing edges are
    /// replaced, not kept.
    pub fn circumjacent_closure(&self, i: usize, j: usize) -> Result<UGraph, GraphError> {
        self.check_node(i)?;
        self.check_node(j)?;
        if i == j {
            return Err(GraphError::EqualPair { i, j });
        }
        let mut out = UGraph::new(self.n);
        for k in self.neighbors(j) {
            if k != i {
                out.edges.insert((i.min(k), i.max(k)));
            }
        }
        for k in self.neighbors(i) {
            if k != j {
                out.edges.insert((j.min(k), j.max(k)));
            }
        }
        Ok(out)
    }

    pub fn union_with(&self, other: &UGraph) -> Result<UGraph, GraphError> {
        if self.n != other.n {
            return Err(GraphError::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = self.clone();
        out.edges.extend(other.edges.iter().copied());
        Ok(out)
    }

    /// DOT rendering with stable ordering: all nodes first, then edges in
    /// lexicographic order.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph {\n");
        for v in 1..=self.n {
            let _ = writeln!(s, "  {v};");
        }
        for (i, j) in self.edges() {
            let _ = writeln!(s, "  {i} -- {j};");
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components_and_connectivity() {
        let g = UGraph::with_edges(6, [(1, 3), (2, 4), (3, 5), (4, 6)]).unwrap();
        assert_eq!(g.components(), vec![vec![1, 3, 5], vec![2, 4, 6]]);
        assert!(!g.connected());
        let h = UGraph::with_edges(3, [(1, 2), (2, 3)]).unwrap();
        assert!(h.connected());
    }

    #[test]
    fn shortcut_step_adds_two_path_endpoints() {
        let g = UGraph::with_edges(3, [(1, 2), (2, 3)]).unwrap();
        let m = g.transitive_closure_step();
        assert!(m.has_edge(1, 3));
        assert_eq!(m.edge_count(), 3);
    }

    #[test]
    fn closure_fixpoint_turns_components_into_cliques() {
        let g = UGraph::with_edges(6, [(1, 3), (2, 4), (3, 5), (4, 6)]).unwrap();
        let fix = g.transitive_closure();
        let expect =
            UGraph::with_edges(6, [(1, 3), (1, 5), (3, 5), (2, 4), (2, 6), (4, 6)]).unwrap();
        assert_eq!(fix, expect);
        assert!(!fix.is_complete());
        let path = UGraph::with_edges(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(path.transitive_closure().is_complete());
    }

    #[test]
    fn rewiring_closure_replaces_edges() {
        let g = UGraph::with_edges(3, [(2, 3)]).unwrap();
        let h = g.circumjacent_closure(1, 2).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(1, 3)]);
        // The pre-existing edge {2,3} is gone: the operator replaces.
        assert!(!h.has_edge(2, 3));
    }

    #[test]
    fn rewiring_closure_drops_self_pairs() {
        // {i,j} itself in the edge set would transport to loops at i and j.
        let g = UGraph::with_edges(4, [(1, 2), (2, 3), (1, 4)]).unwrap();
        let h = g.circumjacent_closure(1, 2).unwrap();
        let edges: Vec<_> = h.edges().collect();
        assert_eq!(edges, vec![(1, 3), (2, 4)]);
    }

    #[test]
    fn rewiring_closure_rejects_equal_pair() {
        let g = UGraph::new(3);
        assert!(matches!(
            g.circumjacent_closure(2, 2),
            Err(GraphError::EqualPair { .. })
        ));
    }

    #[test]
    fn union_requires_same_node_count() {
        let a = UGraph::new(3);
        let b = UGraph::new(4);
        assert!(matches!(
            a.union_with(&b),
            Err(GraphError::SizeMismatch { .. })
        ));
    }

    #[test]
    fn add_edge_validates_nodes() {
        let mut g = UGraph::new(3);
        assert!(matches!(g.add_edge(1, 1), Err(GraphError::SelfLoop { .. })));
        assert!(matches!(
            g.add_edge(0, 2),
            Err(GraphError::NodeOutOfRange { .. })
        ));
        assert!(matches!(
            g.add_edge(1, 4),
            Err(GraphError::NodeOutOfRange { .. })
        ));
    }

    #[test]
    fn dot_output_is_stable() {
        let g = UGraph::with_edges(3, [(2, 3), (1, 2)]).unwrap();
        assert_eq!(
            g.to_dot(),
            "graph {\n  1;\n  2;\n  3;\n  1 -- 2;\n  2 -- 3;\n}\n"
        );
    }
}
