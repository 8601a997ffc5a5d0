//! Decision procedures reading controllability and accessibility off the
//! interaction graphs, the exact rank-condition oracle they are checked
//! against, and the dispatcher that runs both and insists they agree.
//!
//! Every verdict is three-valued. A criterion either decides (yes or no,
//! with the guarantee backed by the oracle on demand) or reports that its
//! structural hypotheses do not hold, in which case the graphs alone say
//! nothing either way.

use crate::lie::{lie_closure, Family};
use crate::system::BilinearSystem;
use num_traits::Zero;
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    GuaranteedYes,
    GuaranteedNo,
    HypothesisNotMet,
}

/// What the verdict is about. Drift-free systems and compact state spaces
/// (so) support controllability verdicts; with drift on sl or gl the graph
/// criteria certify accessibility only.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Controllable,
    Accessible,
}

/// Which criterion produced a verdict.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CriterionId {
    /// Drift-free so: connectivity of the control graph.
    SoDriftlessConnectivity,
    /// so with drift: union connectivity under the component-size hypothesis.
    SoUnionConnectivity,
    /// Drift-free sl: strong connectivity of the control graph.
    SlDriftlessStrongConnectivity,
    /// sl with drift: union strong connectivity under component hypotheses.
    SlUnionStrongConnectivity,
    /// Drift-free gl: strong connectivity plus a diagonal control.
    GlDriftlessSelfLoop,
    /// gl with drift: union strong connectivity decided through self-loops
    /// or the drift trace.
    GlUnionTrace,
    /// gl sufficiency path: self-loop with all components strongly
    /// connected, no large-component requirement.
    GlSelfLoopSufficiency,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    DriftPresent,
    ControlConnected,
    ControlDisconnected,
    ControlStronglyConnected,
    ControlNotStronglyConnected,
    UnionConnected,
    UnionDisconnected,
    UnionStronglyConnected,
    UnionNotStronglyConnected,
    ComponentsLargeEnough,
    ComponentTooSmall,
    ComponentsStronglyConnected,
    ComponentNotStronglyConnected,
    HasLargeComponent,
    NoLargeComponent,
    HasSelfLoop,
    NoSelfLoop,
    TraceNonzero,
    TraceZero,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub property: Property,
    pub criterion: CriterionId,
    pub reasons: Vec<Reason>,
}

impl Verdict {
    fn new(
        status: Status,
        property: Property,
        criterion: CriterionId,
        reasons: Vec<Reason>,
    ) -> Self {
        Verdict {
            status,
            property,
            criterion,
            reasons,
        }
    }
}

/// Result of the exact rank computation: the dimension of the Lie closure
/// of drift and controls against the full algebra dimension.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct OracleReport {
    pub dimension: usize,
    pub full_dimension: usize,
    pub holds: bool,
}

/// Brute-force ground truth: closes the generator set under brackets and
/// compares the span against the whole algebra. Exact, pattern-free, and
/// independent of every graph criterion above.
pub fn larc_oracle(sys: &BilinearSystem) -> OracleReport {
    let algebra = sys.algebra();
    let basis =
        lie_closure(algebra, &sys.generators()).expect("generators share the system algebra");
    let dimension = basis.dim();
    let full_dimension = algebra.dim();
    OracleReport {
        dimension,
        full_dimension,
        holds: dimension == full_dimension,
    }
}

/// Drift-free so: controllable exactly when the control graph is connected.
pub fn check_so_driftless(sys: &BilinearSystem) -> Verdict {
    assert_eq!(
        sys.algebra().family(),
        Family::So,
        "checker expects an so system"
    );
    let criterion = CriterionId::SoDriftlessConnectivity;
    if !sys.is_driftless() {
        return Verdict::new(
            Status::HypothesisNotMet,
            Property::Controllable,
            criterion,
            vec![Reason::DriftPresent],
        );
    }
    let control = sys.control_graph();
    let g = control
        .undirected()
        .expect("so control graph is undirected");
    if g.connected() {
        Verdict::new(
            Status::GuaranteedYes,
            Property::Controllable,
            criterion,
            vec![Reason::ControlConnected],
        )
    } else {
        Verdict::new(
            Status::GuaranteedNo,
            Property::Controllable,
            criterion,
            vec![Reason::ControlDisconnected],
        )
    }
}

/// so with drift. A disconnected union is always uncontrollable. Under the
/// hypothesis that every control component has at least three nodes, union
/// connectivity is also sufficient.
pub fn check_so(sys: &BilinearSystem) -> Verdict {
    assert_eq!(
        sys.algebra().family(),
        Family::So,
        "checker expects an so system"
    );
    let criterion = CriterionId::SoUnionConnectivity;
    let union = sys.union_graph();
    let u = union.undirected().expect("so union graph is undirected");
    if !u.connected() {
        return Verdict::new(
            Status::GuaranteedNo,
            Property::Controllable,
            criterion,
            vec![Reason::UnionDisconnected],
        );
    }
    let control = sys.control_graph();
    let comps = control
        .undirected()
        .expect("so control graph is undirected")
        .components();
    if comps.iter().all(|c| c.len() >= 3) {
        Verdict::new(
            Status::GuaranteedYes,
            Property::Controllable,
            criterion,
            vec![Reason::ComponentsLargeEnough, Reason::UnionConnected],
        )
    } else {
        Verdict::new(
            Status::HypothesisNotMet,
            Property::Controllable,
            criterion,
            vec![Reason::ComponentTooSmall],
        )
    }
}

/// Drift-free sl: controllable exactly when the control graph is strongly
/// connected.
pub fn check_sl_driftless(sys: &BilinearSystem) -> Verdict {
    assert_eq!(
        sys.algebra().family(),
        Family::Sl,
        "checker expects an sl system"
    );
    let criterion = CriterionId::SlDriftlessStrongConnectivity;
    if !sys.is_driftless() {
        return Verdict::new(
            Status::HypothesisNotMet,
            Property::Controllable,
            criterion,
            vec![Reason::DriftPresent],
        );
    }
    let control = sys.control_graph();
    let g = control.directed().expect("sl control graph is directed");
    if g.strongly_connected() {
        Verdict::new(
            Status::GuaranteedYes,
            Property::Controllable,
            criterion,
            vec![Reason::ControlStronglyConnected],
        )
    } else {
        Verdict::new(
            Status::GuaranteedNo,
            Property::Controllable,
            criterion,
            vec![Reason::ControlNotStronglyConnected],
        )
    }
}

/// Collects the component-shape facts shared by the sl and gl criteria:
/// every weak component of the (simple) control graph strongly connected
/// with at least two nodes, and whether one has at least three.
struct ComponentShape {
    all_strong_pairs: bool,
    has_large: bool,
    failures: Vec<Reason>,
}

fn component_shape(control: &crate::graph::DiGraph) -> ComponentShape {
    let comps = control.weak_components();
    let mut all_strong_pairs = true;
    let mut has_large = false;
    let mut failures = Vec::new();
    for comp in &comps {
        if comp.len() >= 3 {
            has_large = true;
        }
        if comp.len() < 2 {
            all_strong_pairs = false;
            if !failures.contains(&Reason::ComponentTooSmall) {
                failures.push(Reason::ComponentTooSmall);
            }
        } else if !control.strongly_connected_within(comp) {
            all_strong_pairs = false;
            if !failures.contains(&Reason::ComponentNotStronglyConnected) {
                failures.push(Reason::ComponentNotStronglyConnected);
            }
        }
    }
    if !has_large {
        failures.push(Reason::NoLargeComponent);
    }
    ComponentShape {
        all_strong_pairs,
        has_large,
        failures,
    }
}

/// sl with drift. A union that is not strongly connected is never
/// accessible. Under the component hypotheses (every weak control component
/// strongly connected with >= 2 nodes, at least one with >= 3), union strong
/// connectivity is also sufficient for accessibility.
pub fn check_sl(sys: &BilinearSystem) -> Verdict {
    assert_eq!(
        sys.algebra().family(),
        Family::Sl,
        "checker expects an sl system"
    );
    let criterion = CriterionId::SlUnionStrongConnectivity;
    let union = sys.union_graph();
    let u = union.directed().expect("sl union graph is directed");
    if !u.strongly_connected() {
        return Verdict::new(
            Status::GuaranteedNo,
            Property::Accessible,
            criterion,
            vec![Reason::UnionNotStronglyConnected],
        );
    }
    let control = sys.control_graph();
    let shape = component_shape(control.directed().expect("sl control graph is directed"));
    if shape.all_strong_pairs && shape.has_large {
        Verdict::new(
            Status::GuaranteedYes,
            Property::Accessible,
            criterion,
            vec![
                Reason::ComponentsStronglyConnected,
                Reason::HasLargeComponent,
                Reason::UnionStronglyConnected,
            ],
        )
    } else {
        Verdict::new(
            Status::HypothesisNotMet,
            Property::Accessible,
            criterion,
            shape.failures,
        )
    }
}

/// Drift-free gl: controllable exactly when the control graph is strongly
/// connected apart from self-loops and at least one diagonal control is
/// present. Without a diagonal control the closure stays inside the
/// traceless subalgebra.
pub fn check_gl_driftless(sys: &BilinearSystem) -> Verdict {
    assert_eq!(
        sys.algebra().family(),
        Family::Gl,
        "checker expects a gl system"
    );
    let criterion = CriterionId::GlDriftlessSelfLoop;
    if !sys.is_driftless() {
        return Verdict::new(
            Status::HypothesisNotMet,
            Property::Controllable,
            criterion,
            vec![Reason::DriftPresent],
        );
    }
    let control = sys.control_graph();
    let g = control.directed().expect("gl control graph is directed");
    let strong = g.simple_shadow().strongly_connected();
    let has_loop = g.has_self_loop();
    if strong && has_loop {
        Verdict::new(
            Status::GuaranteedYes,
            Property::Controllable,
            criterion,
            vec![Reason::ControlStronglyConnected, Reason::HasSelfLoop],
        )
    } else {
        let mut reasons = Vec::new();
        if !strong {
            reasons.push(Reason::ControlNotStronglyConnected);
        }
        if !has_loop {
            reasons.push(Reason::NoSelfLoop);
        }
        Verdict::new(
            Status::GuaranteedNo,
            Property::Controllable,
            criterion,
            reasons,
        )
    }
}

/// gl with drift. Self-loops never couple new state pairs, so a union whose
/// simple shadow is not strongly connected is never accessible. Under the
/// component hypotheses the criterion decides: accessible exactly when a
/// diagonal control exists or the drift trace is nonzero (otherwise the
/// closure is trapped in the traceless subalgebra). Without a large
/// component, a diagonal control together with strongly connected
/// components is still sufficient.
pub fn check_gl(sys: &BilinearSystem) -> Verdict {
    assert_eq!(
        sys.algebra().family(),
        Family::Gl,
        "checker expects a gl system"
    );
    let union = sys.union_graph();
    let u = union.directed().expect("gl union graph is directed");
    if !u.simple_shadow().strongly_connected() {
        return Verdict::new(
            Status::GuaranteedNo,
            Property::Accessible,
            CriterionId::GlUnionTrace,
            vec![Reason::UnionNotStronglyConnected],
        );
    }
    let control = sys.control_graph();
    let g = control.directed().expect("gl control graph is directed");
    let has_loop = g.has_self_loop();
    let trace_nonzero = !sys.drift().trace().is_zero();
    let shape = component_shape(&g.simple_shadow());
    if shape.all_strong_pairs && shape.has_large {
        let criterion = CriterionId::GlUnionTrace;
        let base = vec![
            Reason::ComponentsStronglyConnected,
            Reason::HasLargeComponent,
            Reason::UnionStronglyConnected,
        ];
        if has_loop {
            let mut reasons = base;
            reasons.push(Reason::HasSelfLoop);
            Verdict::new(
                Status::GuaranteedYes,
                Property::Accessible,
                criterion,
                reasons,
            )
        } else if trace_nonzero {
            let mut reasons = base;
            reasons.push(Reason::TraceNonzero);
            Verdict::new(
                Status::GuaranteedYes,
                Property::Accessible,
                criterion,
                reasons,
            )
        } else {
            Verdict::new(
                Status::GuaranteedNo,
                Property::Accessible,
                criterion,
                vec![Reason::NoSelfLoop, Reason::TraceZero],
            )
        }
    } else if shape.all_strong_pairs && has_loop {
        Verdict::new(
            Status::GuaranteedYes,
            Property::Accessible,
            CriterionId::GlSelfLoopSufficiency,
            vec![
                Reason::ComponentsStronglyConnected,
                Reason::HasSelfLoop,
                Reason::UnionStronglyConnected,
            ],
        )
    } else {
        let mut reasons = shape.failures;
        if !has_loop {
            reasons.push(Reason::NoSelfLoop);
        }
        Verdict::new(
            Status::HypothesisNotMet,
            Property::Accessible,
            CriterionId::GlUnionTrace,
            reasons,
        )
    }
}

/// A graphical verdict together with the oracle run that backs it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Analysis {
    pub verdict: Verdict,
    pub oracle: Option<OracleReport>,
}

/// A decided verdict contradicted the exact rank computation. This cannot
/// happen with a correct implementation; surfacing it as an error is the
/// cross-validation contract.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
#[error("internal soundness violation: verdict {verdict:?} contradicts oracle {oracle:?}")]
pub struct SoundnessError {
    pub verdict: Verdict,
    pub oracle: OracleReport,
}

/// Routes the system to the checker for its family and drift shape, runs
/// the oracle when requested, and cross-checks any decided verdict against
/// it: guaranteed-yes must have a full-rank closure, guaranteed-no must
/// not.
pub fn analyze(sys: &BilinearSystem, with_oracle: bool) -> Result<Analysis, SoundnessError> {
    let verdict = match (sys.algebra().family(), sys.is_driftless()) {
        (Family::So, true) => check_so_driftless(sys),
        (Family::So, false) => check_so(sys),
        (Family::Sl, true) => check_sl_driftless(sys),
        (Family::Sl, false) => check_sl(sys),
        (Family::Gl, true) => check_gl_driftless(sys),
        (Family::Gl, false) => check_gl(sys),
    };
    let oracle = with_oracle.then(|| larc_oracle(sys));
    if let Some(o) = oracle {
        let consistent = match verdict.status {
            Status::GuaranteedYes => o.holds,
            Status::GuaranteedNo => !o.holds,
            Status::HypothesisNotMet => true,
        };
        if !consistent {
            return Err(SoundnessError { verdict, oracle: o });
        }
    }
    Ok(Analysis { verdict, oracle })
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::GuaranteedYes => "guaranteed-yes",
            Status::GuaranteedNo => "guaranteed-no",
            Status::HypothesisNotMet => "hypothesis-not-met",
        };
        f.write_str(s)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Property::Controllable => "controllable",
            Property::Accessible => "accessible",
        };
        f.write_str(s)
    }
}

impl fmt::Display for CriterionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CriterionId::SoDriftlessConnectivity => "so-driftless-connectivity",
            CriterionId::SoUnionConnectivity => "so-union-connectivity",
            CriterionId::SlDriftlessStrongConnectivity => "sl-driftless-strong-connectivity",
            CriterionId::SlUnionStrongConnectivity => "sl-union-strong-connectivity",
            CriterionId::GlDriftlessSelfLoop => "gl-driftless-self-loop",
            CriterionId::GlUnionTrace => "gl-union-trace",
            CriterionId::GlSelfLoopSufficiency => "gl-self-loop-sufficiency",
        };
        f.write_str(s)
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Reason::DriftPresent => "drift-present",
            Reason::ControlConnected => "control-connected",
            Reason::ControlDisconnected => "control-disconnected",
            Reason::ControlStronglyConnected => "control-strongly-connected",
            Reason::ControlNotStronglyConnected => "control-not-strongly-connected",
            Reason::UnionConnected => "union-connected",
            Reason::UnionDisconnected => "union-disconnected",
            Reason::UnionStronglyConnected => "union-strongly-connected",
            Reason::UnionNotStronglyConnected => "union-not-strongly-connected",
            Reason::ComponentsLargeEnough => "components-large-enough",
            Reason::ComponentTooSmall => "component-too-small",
            Reason::ComponentsStronglyConnected => "components-strongly-connected",
            Reason::ComponentNotStronglyConnected => "component-not-strongly-connected",
            Reason::HasLargeComponent => "has-large-component",
            Reason::NoLargeComponent => "no-large-component",
            Reason::HasSelfLoop => "has-self-loop",
            Reason::NoSelfLoop => "no-self-loop",
            Reason::TraceNonzero => "trace-nonzero",
            Reason::TraceZero => "trace-zero",
        };
        f.write_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{Algebra, BasisElement, Coeff, LieVector};
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

    fn driftless(algebra: Algebra, controls: Vec<BasisElement>) -> BilinearSystem {
        BilinearSystem::new(algebra, LieVector::zero(algebra), controls).unwrap()
    }

    #[test]
    fn so_driftless_connected_controls_are_controllable_and_full_rank() {
        let so4 = Algebra::so(4);
        let sys = driftless(so4, vec![b(1, 2), b(2, 3), b(3, 4)]);
        let v = check_so_driftless(&sys);
        assert_eq!(v.status, Status::GuaranteedYes);
        assert!(larc_oracle(&sys).holds);
        assert!(analyze(&sys, true).is_ok());
    }

    #[test]
    fn so_driftless_disconnected_controls_fail_and_rank_is_deficient() {
        // Two 3-node chains: connected pieces but no global connectivity.
        let so6 = Algebra::so(6);
        let sys = driftless(so6, vec![b(1, 3), b(2, 4), b(3, 5), b(4, 6)]);
        let v = check_so_driftless(&sys);
        assert_eq!(v.status, Status::GuaranteedNo);
        let o = larc_oracle(&sys);
        assert!(!o.holds);
        assert!(o.dimension < 15);
    }

    #[test]
    fn so_driftless_rejects_drift() {
        let so4 = Algebra::so(4);
        let drift = LieVector::basis(so4, b(1, 2)).unwrap();
        let sys = BilinearSystem::new(so4, drift, vec![b(1, 2)]).unwrap();
        let v = check_so_driftless(&sys);
        assert_eq!(v.status, Status::HypothesisNotMet);
        assert_eq!(v.reasons, vec![Reason::DriftPresent]);
    }

    #[test]
    fn so_with_drift_single_edge_union_disconnected_is_no() {
        let so5 = Algebra::so(5);
        let sys = driftless(so5, vec![b(1, 2)]);
        let v = check_so(&sys);
        assert_eq!(v.status, Status::GuaranteedNo);
        assert_eq!(v.reasons, vec![Reason::UnionDisconnected]);
    }

    #[test]
    fn sl_driftless_three_cycle_is_controllable() {
        let sl3 = Algebra::sl(3);
        let sys = driftless(sl3, vec![e(1, 2), e(2, 3), e(3, 1)]);
        let v = check_sl_driftless(&sys);
        assert_eq!(v.status, Status::GuaranteedYes);
        let o = larc_oracle(&sys);
        assert_eq!(o.dimension, 8);
        assert!(o.holds);
    }

    #[test]
    fn sl_driftless_one_way_arcs_are_not_controllable() {
        let sl3 = Algebra::sl(3);
        let sys = driftless(sl3, vec![e(1, 2), e(2, 3)]);
        let v = check_sl_driftless(&sys);
        assert_eq!(v.status, Status::GuaranteedNo);
        assert!(!larc_oracle(&sys).holds);
    }

    #[test]
    fn gl_driftless_needs_strongness_and_a_loop() {
        let gl2 = Algebra::gl(2);
        let full = driftless(gl2, vec![e(1, 2), e(2, 1), e(1, 1)]);
        let v = check_gl_driftless(&full);
        assert_eq!(v.status, Status::GuaranteedYes);
        let o = larc_oracle(&full);
        assert_eq!(o.dimension, 4);
        assert!(o.holds);

        let no_loop = driftless(gl2, vec![e(1, 2), e(2, 1)]);
        let v2 = check_gl_driftless(&no_loop);
        assert_eq!(v2.status, Status::GuaranteedNo);
        assert_eq!(v2.reasons, vec![Reason::NoSelfLoop]);
        assert!(!larc_oracle(&no_loop).holds);

        let loop_only = driftless(gl2, vec![e(1, 1), e(2, 2)]);
        let v3 = check_gl_driftless(&loop_only);
        assert_eq!(v3.status, Status::GuaranteedNo);
        assert_eq!(v3.reasons, vec![Reason::ControlNotStronglyConnected]);
    }

    #[test]
    fn gl_trace_zero_without_loop_is_no_under_hypotheses() {
        // Components {1,2} and {3,4,5} are strongly connected, the union is
        // strongly connected, but the closure cannot leave the traceless
        // part: no diagonal control and zero drift trace.
        let gl5 = Algebra::gl(5);
        let drift = LieVector::from_terms(
            gl5,
            [
                (e(1, 5), rat(2)),
                (e(3, 2), rat(1)),
                (e(1, 1), rat(1)),
                (e(2, 2), rat(-1)),
            ],
        )
        .unwrap();
        let sys = BilinearSystem::new(
            gl5,
            drift,
            vec![e(1, 2), e(2, 1), e(5, 4), e(4, 3), e(3, 5)],
        )
        .unwrap();
        let v = check_gl(&sys);
        assert_eq!(v.status, Status::GuaranteedNo);
        assert_eq!(v.reasons, vec![Reason::NoSelfLoop, Reason::TraceZero]);
        let o = larc_oracle(&sys);
        assert!(!o.holds);
        assert!(analyze(&sys, true).is_ok());
    }

    #[test]
    fn serialization_matches_display_and_is_stable() {
        // The CLI report format leans on both representations agreeing.
        for status in [
            Status::GuaranteedYes,
            Status::GuaranteedNo,
            Status::HypothesisNotMet,
        ] {
            assert_eq!(
                serde_json::to_string(&status).unwrap(),
                format!("\"{status}\"")
            );
        }
        for property in [Property::Controllable, Property::Accessible] {
            assert_eq!(
                serde_json::to_string(&property).unwrap(),
                format!("\"{property}\"")
            );
        }
        for criterion in [
            CriterionId::SoDriftlessConnectivity,
            CriterionId::SoUnionConnectivity,
            CriterionId::SlDriftlessStrongConnectivity,
            CriterionId::SlUnionStrongConnectivity,
            CriterionId::GlDriftlessSelfLoop,
            CriterionId::GlUnionTrace,
            CriterionId::GlSelfLoopSufficiency,
        ] {
            assert_eq!(
                serde_json::to_string(&criterion).unwrap(),
                format!("\"{criterion}\"")
            );
        }
        for reason in [
            Reason::DriftPresent,
            Reason::ControlConnected,
            Reason::ControlDisconnected,
            Reason::ControlStronglyConnected,
            Reason::ControlNotStronglyConnected,
            Reason::UnionConnected,
            Reason::UnionDisconnected,
            Reason::UnionStronglyConnected,
            Reason::UnionNotStronglyConnected,
            Reason::ComponentsLargeEnough,
            Reason::ComponentTooSmall,
            Reason::ComponentsStronglyConnected,
            Reason::ComponentNotStronglyConnected,
            Reason::HasLargeComponent,
            Reason::NoLargeComponent,
            Reason::HasSelfLoop,
            Reason::NoSelfLoop,
            Reason::TraceNonzero,
            Reason::TraceZero,
        ] {
            assert_eq!(
                serde_json::to_string(&reason).unwrap(),
                format!("\"{reason}\"")
            );
        }

        let so4 = Algebra::so(4);
        let sys = driftless(so4, vec![b(1, 2), b(2, 3), b(3, 4)]);
        let analysis = analyze(&sys, true).unwrap();
        assert_eq!(
            serde_json::to_string(&analysis).unwrap(),
            concat!(
                r#"{"verdict":{"status":"guaranteed-yes","property":"controllable","#,
                r#""criterion":"so-driftless-connectivity","reasons":["control-connected"]},"#,
                r#""oracle":{"dimension":6,"full_dimension":6,"holds":true}}"#
            )
        );
    }

    #[test]
    fn analyze_routes_by_family_and_drift() {
        let so4 = Algebra::so(4);
        let driftless_sys = driftless(so4, vec![b(1, 2), b(2, 3), b(3, 4)]);
        let a = analyze(&driftless_sys, false).unwrap();
        assert_eq!(a.verdict.criterion, CriterionId::SoDriftlessConnectivity);
        assert!(a.oracle.is_none());

        let drift = LieVector::basis(so4, b(1, 2)).unwrap();
        let with_drift = BilinearSystem::new(so4, drift, vec![b(1, 2), b(2, 3), b(3, 4)]).unwrap();
        let a2 = analyze(&with_drift, true).unwrap();
        assert_eq!(a2.verdict.criterion, CriterionId::SoUnionConnectivity);
        assert!(a2.oracle.unwrap().holds);
    }
}
