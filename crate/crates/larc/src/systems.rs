//! Bundled sample systems with frozen expected outcomes, used by the CLI
//! self-check command and the acceptance suite. The expectations are data:
//! verdicts from the decision procedures and closure dimensions confirmed
//! by the exact rank computation.

use crate::criteria::{CriterionId, Property, Status};

#[derive(Clone, Copy, Debug)]
pub struct GoldenCase {
    pub name: &'static str,
    pub source: &'static str,
    pub status: Status,
    pub property: Property,
    pub criterion: CriterionId,
    /// Closure dimension of drift plus controls.
    pub dimension: usize,
    pub full_dimension: usize,
}

impl GoldenCase {
    /// Whether the rank condition holds for this case.
    pub fn holds(&self) -> bool {
        self.dimension == self.full_dimension
    }
}

pub fn golden_cases() -> [GoldenCase; 7] {
    [
        GoldenCase {
            name: "ex1",
            source: include_str!("../systems/ex1.sys"),
            status: Status::GuaranteedYes,
            property: Property::Controllable,
            criterion: CriterionId::SoUnionConnectivity,
            dimension: 15,
            full_dimension: 15,
        },
        GoldenCase {
            name: "ex2",
            source: include_str!("../systems/ex2.sys"),
            status: Status::HypothesisNotMet,
            property: Property::Controllable,
            criterion: CriterionId::SoUnionConnectivity,
            dimension: 10,
            full_dimension: 15,
        },
        GoldenCase {
            name: "ex3",
            source: include_str!("../systems/ex3.sys"),
            status: Status::GuaranteedYes,
            property: Property::Accessible,
            criterion: CriterionId::SlUnionStrongConnectivity,
            dimension: 24,
            full_dimension: 24,
        },
        GoldenCase {
            name: "ex4",
            source: include_str!("../systems/ex4.sys"),
            status: Status::HypothesisNotMet,
            property: Property::Accessible,
            criterion: CriterionId::SlUnionStrongConnectivity,
            dimension: 10,
            full_dimension: 15,
        },
        GoldenCase {
            name: "ex5",
            source: include_str!("../systems/ex5.sys"),
            status: Status::GuaranteedYes,
            property: Property::Accessible,
            criterion: CriterionId::GlUnionTrace,
            dimension: 25,
            full_dimension: 25,
        },
        GoldenCase {
            name: "ex6",
            source: include_str!("../systems/ex6.sys"),
            status: Status::GuaranteedYes,
            property: Property::Accessible,
            criterion: CriterionId::GlSelfLoopSufficiency,
            dimension: 16,
            full_dimension: 16,
        },
        GoldenCase {
            name: "ex7",
            source: include_str!("../systems/ex7.sys"),
            status: Status::HypothesisNotMet,
            property: Property::Accessible,
            criterion: CriterionId::GlUnionTrace,
            dimension: 11,
            full_dimension: 16,
        },
    ]
}
