use super::{GraphError, UGraph};
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// Digraph on nodes 1..=n. Self-loops are data here (they carry the
/// diagonal pattern of gl drift and controls), but a graph constructed with
/// `new` stays simple and rejects them; connectivity notions always ignore
/// loops.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiGraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
    allow_self_loops: bool,
}

impl DiGraph {
    /// A simple digraph: adding a self-loop is an error.
    pub fn new(n: usize) -> Self {
        DiGraph {
            n,
            arcs: BTreeSet::new(),
            allow_self_loops: false,
        }
    }

    /// A digraph that accepts self-loops.
    pub fn with_self_loops(n: usize) -> Self {
        DiGraph {
            n,
            arcs: BTreeSet::new(),
            allow_self_loops: true,
        }
    }

    pub fn with_arcs<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = DiGraph::new(n);
        for (i, j) in arcs {
            g.add_arc(i, j)?;
        }
        Ok(g)
    }

    fn check_node(&self, v: usize) -> Result<(), GraphError> {
        if v < 1 || v > self.n {
            return Err(GraphError::NodeOutOfRange { node: v, n: self.n });
        }
        Ok(())
    }

    pub fn add_arc(&mut self, i: usize, j: usize) -> Result<(), GraphError> {
        self.check_node(i)?;
        self.check_node(j)?;
        if i == j && !self.allow_self_loops {
            return Err(GraphError::SelfLoop { node: i });
        }
        self.arcs.insert((i, j));
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.arcs.contains(&(i, j))
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn is_simple(&self) -> bool {
        !self.arcs.iter().any(|&(i, j)| i == j)
    }

    pub fn has_self_loop(&self) -> bool {
        !self.is_simple()
    }

    pub fn self_loop_count(&self) -> usize {
        self.arcs.iter().filter(|&&(i, j)| i == j).count()
    }

    /// The same arcs minus self-loops, as a simple digraph.
    pub fn simple_shadow(&self) -> DiGraph {
        let arcs = self.arcs.iter().copied().filter(|&(i, j)| i != j).collect();
        DiGraph {
            n: self.n,
            arcs,
            allow_self_loops: false,
        }
    }

    /// Out-neighbors k of v over arcs (v, k), k != v, ascending.
    pub fn out_neighbors(&self, v: usize) -> Vec<usize> {
        self.arcs
            .iter()
            .filter_map(|&(i, j)| (i == v && j != v).then_some(j))
            .collect()
    }

    /// In-neighbors k of v over arcs (k, v), k != v, ascending.
    pub fn in_neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .arcs
            .iter()
            .filter_map(|&(i, j)| (j == v && i != v).then_some(i))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_neighbors(v).len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_neighbors(v).len()
    }

    /// Undirected shadow: {i, j} for every arc (i, j), i != j.
    pub fn undirected_shadow(&self) -> UGraph {
        let mut g = UGraph::new(self.n);
        for (i, j) in self.arcs() {
            if i != j {
                g.add_edge(i, j).expect("arcs are in range");
            }
        }
        g
    }

    /// Weakly connected components, ordered like undirected components.
    pub fn weak_components(&self) -> Vec<Vec<usize>> {
        self.undirected_shadow().components()
    }

    pub fn weakly_connected(&self) -> bool {
        self.weak_components().len() <= 1
    }

    /// Whether every node reaches every other along arcs. Self-loops are
    /// irrelevant; a single node is strongly connected.
    pub fn strongly_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let all: Vec<usize> = (1..=self.n).collect();
        self.strongly_connected_within(&all)
    }

    /// Strong connectivity of the subgraph induced on `nodes`.
    pub fn strongly_connected_within(&self, nodes: &[usize]) -> bool {
        if nodes.len() <= 1 {
            return true;
        }
        let inside = |v: usize| nodes.contains(&v);
        let reach = |forward: bool| -> usize {
            let mut seen: BTreeSet<usize> = BTreeSet::from([nodes[0]]);
            let mut queue = std::collections::VecDeque::from([nodes[0]]);
            while let Some(v) = queue.pop_front() {
                let next = if forward {
                    self.out_neighbors(v)
                } else {
                    self.in_neighbors(v)
                };
                for w in next {
                    if inside(w) && seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            seen.len()
        };
        reach(true) == nodes.len() && reach(false) == nodes.len()
    }

    /// Nontrivially complete as a simple digraph: both arcs between every
    /// pair of distinct nodes.
    pub fn is_simple_complete(&self) -> bool {
        (1..=self.n).all(|i| (1..=self.n).all(|j| i == j || self.has_arc(i, j)))
    }

    /// One directed two-path shortcut step on a simple digraph: adds (i, k)
    /// for every i -> j -> k with i != k, keeping existing arcs. The guard
    /// keeps the result simple, so the step stays inside simple digraphs.
    pub fn simple_transitive_closure_step(&self) -> Result<DiGraph, GraphError> {
        if !self.is_simple() {
            return Err(GraphError::SelfLoopsPresent);
        }
        let mut out = self.clone();
        for &(i, j) in &self.arcs {
            for k in self.out_neighbors(j) {
                if k != i {
                    out.arcs.insert((i, k));
                }
            }
        }
        Ok(out)
    }

    /// Fixpoint of the directed shortcut step: arc (u, v) present exactly
    /// when u != v and a directed path from u to v exists. Nontrivial
    /// strongly connected pieces become complete blocks.
    pub fn simple_transitive_closure(&self) -> Result<DiGraph, GraphError> {
        let mut cur = self.simple_transitive_closure_step()?;
        for _ in 0..=self.n {
            let next = cur.simple_transitive_closure_step()?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
        panic!("directed two-path closure failed to stabilize within n + 1 sweeps");
    }

    /// Directed pair-rewiring closure for an ordered pair (i, j), i != j, on
    /// a simple digraph: j's out-neighborhood transported to i plus i's
    /// in-neighborhood redirected at j, dropping would-be self-loops.
    /// Existing arcs are replaced, not kept.
    pub fn circumjacent_closure(&self, i: usize, j: usize) -> Result<DiGraph, GraphError> {
        self.check_node(i)?;
        self.check_node(j)?;
        if i == j {
            return Err(GraphError::EqualPair { i, j });
        }
        if !self.is_simple() {
            return Err(GraphError::SelfLoopsPresent);
        }
        let mut out = DiGraph::new(self.n);
        for k in self.out_neighbors(j) {
            if k != i {
                out.arcs.insert((i, k));
            }
        }
        for k in self.in_neighbors(i) {
            if k != j {
                out.arcs.insert((k, j));
            }
        }
        Ok(out)
    }

    /// Arc union; the result accepts self-loops when either operand does.
    pub fn union_with(&self, other: &DiGraph) -> Result<DiGraph, GraphError> {
        if self.n != other.n {
            return Err(GraphError::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut arcs = self.arcs.clone();
        arcs.extend(other.arcs.iter().copied());
        Ok(DiGraph {
            n: self.n,
            arcs,
            allow_self_loops: self.allow_self_loops || other.allow_self_loops,
        })
    }

    /// DOT rendering with stable ordering; self-loops print as `i -> i`.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph {\n");
        for v in 1..=self.n {
            let _ = writeln!(s, "  {v};");
        }
        for (i, j) in self.arcs() {
            let _ = writeln!(s, "  {i} -> {j};");
        }
        s.push_str("}\n");
        s
    }
}
