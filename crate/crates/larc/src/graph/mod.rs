//! Interaction graphs on nodes 1..=n and the closure operators that track
//! bracketing on the combinatorial side: the two-path shortcut step, whose
//! fixpoint turns every connected piece into a clique, and the pair-rewiring
//! closure, which replaces the edge set by the neighborhoods transported
//! across one pair.

mod bigraph;
mod directed;
mod undirected;

pub use bigraph::bigraph_reduction_sequence;
pub use directed::DiGraph;
pub use undirected::UGraph;

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum GraphError {
    #[error("node {node} is outside 1..={n}")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("self-loop at node {node} is not allowed here")]
    SelfLoop { node: usize },
    #[error("operation needs two distinct nodes, got ({i}, {j})")]
    EqualPair { i: usize, j: usize },
    #[error("graphs have different node counts: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("cannot combine an undirected graph with a digraph")]
    KindMismatch,
    #[error("operation requires a simple digraph but self-loops are present")]
    SelfLoopsPresent,
    #[error("node sets do not split the graph into two disjoint covering parts")]
    NotAPartition,
    #[error("bi-graph reduction requires both parts to have at least 3 nodes")]
    PartTooSmall,
    #[error("bi-graph reduction requires at least one edge")]
    NoEdges,
    #[error("edge ({i}, {j}) does not cross between the two parts")]
    EdgeInsidePart { i: usize, j: usize },
}

/// Shared component-accumulation order: nodes ascending inside a component,
/// components ordered by smallest member.
pub(crate) fn collect_components(
    n: usize,
    neighbors: impl Fn(usize) -> Vec<usize>,
) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n + 1];
    let mut components = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        let mut comp = vec![start];
        while let Some(v) = queue.pop_front() {
            for w in neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}
