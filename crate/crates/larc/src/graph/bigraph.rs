use super::{GraphError, UGraph};
use std::collections::BTreeSet;

/// For a bi-graph (all edges crossing between the two parts, both parts of
/// size at least 3, at least one edge), produces a sequence of same-part
/// pairs whose successive rewiring closures leave exactly one edge.
///
/// The sequence follows the constructive argument behind the reduction, with
/// smallest-index tie-breaking so the output is deterministic:
///
/// 1. If no node has degree zero, rewire the two smallest nodes of the first
///    part; everything else in that part goes quiet.
/// 2. Rewire the smallest zero-degree node against the smallest busy node of
///    its part; all surviving edges now meet at that node. If more than one
///    survives, two rewirings on the opposite side (its two smallest
///    neighbors, then a fresh node) cut the count to one.
///
/// At most four pairs are emitted; an already-single edge set yields an
/// empty sequence.
pub fn bigraph_reduction_sequence(
    g: &UGraph,
    part_x: &[usize],
    part_y: &[usize],
) -> Result<Vec<(usize, usize)>, GraphError> {
    let xs: BTreeSet<usize> = part_x.iter().copied().collect();
    let ys: BTreeSet<usize> = part_y.iter().copied().collect();
    if xs.len() + ys.len() != g.n()
        || xs.intersection(&ys).next().is_some()
        || xs
            .union(&ys)
            .ne((1..=g.n()).collect::<BTreeSet<_>>().iter())
    {
        return Err(GraphError::NotAPartition);
    }
    if xs.len() < 3 || ys.len() < 3 {
        return Err(GraphError::PartTooSmall);
    }
    if g.edge_count() == 0 {
        return Err(GraphError::NoEdges);
    }
    for (i, j) in g.edges() {
        if xs.contains(&i) == xs.contains(&j) {
            return Err(GraphError::EdgeInsidePart { i, j });
        }
    }

    let mut work = g.clone();
    let mut seq = Vec::new();
    let apply = |work: &mut UGraph, seq: &mut Vec<(usize, usize)>, i: usize, j: usize| {
        *work = work
            .circumjacent_closure(i, j)
            .expect("pair nodes are distinct and in range");
        seq.push((i, j));
    };

    if work.edge_count() == 1 {
        return Ok(seq);
    }

    // Every node busy: quiet most of the first part with one rewiring.
    if (1..=g.n()).all(|v| work.degree(v) > 0) {
        let mut it = xs.iter().copied();
        let a = it.next().expect("|X| >= 3");
        let b = it.next().expect("|X| >= 3");
        apply(&mut work, &mut seq, a, b);
        if work.edge_count() == 1 {
            return Ok(seq);
        }
    }

    // A zero-degree node exists; both parts stay busy while edges remain,
    // because every edge crosses.
    let x1 = (1..=g.n())
        .find(|&v| work.degree(v) == 0)
        .expect("a quiet node exists here");
    let part = if xs.contains(&x1) { &xs } else { &ys };
    let other = if xs.contains(&x1) { &ys } else { &xs };
    let xi = part
        .iter()
        .copied()
        .find(|&v| work.degree(v) > 0)
        .expect("a crossing edge keeps both parts busy");
    apply(&mut work, &mut seq, x1, xi);
    if work.edge_count() == 1 {
        return Ok(seq);
    }

    // All survivors meet at x1 and point into the other part.
    let nbrs = work.neighbors(x1);
    debug_assert!(nbrs.len() >= 2);
    let (y1, y2) = (nbrs[0], nbrs[1]);
    apply(&mut work, &mut seq, y1, y2);
    let y3 = other
        .iter()
        .copied()
        .find(|v| *v != y1 && *v != y2)
        .expect("|other part| >= 3");
    apply(&mut work, &mut seq, y2, y3);
    debug_assert_eq!(work.edge_count(), 1);
    Ok(seq)
}
