//! Lazily computed facts about one group, shared by the checks so a survey
//! builds each series and δ-set once.

use std::sync::{Arc, OnceLock};

use crate::coprime::{full_lower_fitting_series, DeltaLadder, DeltaSet};
use crate::error::Result;
use crate::group::GroupTable;
use crate::series::{derived_series, is_nilpotent, SeriesReport};
use crate::subgroup::{normal_closure_family, Subgroup};
use crate::sylow::{fitting_height, FittingHeight};

pub struct GroupAnalysis {
    group: GroupTable,
    ladder: DeltaLadder,
    lower_fitting: OnceLock<SeriesReport>,
    derived: OnceLock<SeriesReport>,
    height: OnceLock<FittingHeight>,
    family: OnceLock<Vec<Subgroup>>,
}

impl GroupAnalysis {
    pub fn new(group: &GroupTable) -> Self {
        GroupAnalysis {
            group: group.clone(),
            ladder: DeltaLadder::new(group),
            lower_fitting: OnceLock::new(),
            derived: OnceLock::new(),
            height: OnceLock::new(),
            family: OnceLock::new(),
        }
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn delta(&self, k: usize) -> Arc<DeltaSet> {
        self.ladder.level(k)
    }

    /// The lower Fitting series, run to its fixed point.
    pub fn lower_fitting(&self) -> &SeriesReport {
        self.lower_fitting
            .get_or_init(|| full_lower_fitting_series(&self.group))
    }

    /// `D_k(G)`.
    pub fn d_term(&self, k: usize) -> &Subgroup {
        self.lower_fitting().term(k).expect("a full series is stabilized")
    }

    /// `γ∞(G) = D₁(G)`.
    pub fn residual(&self) -> &Subgroup {
        self.d_term(1)
    }

    pub fn derived(&self) -> &SeriesReport {
        self.derived.get_or_init(|| derived_series(&self.group))
    }

    pub fn is_soluble(&self) -> bool {
        self.derived().last().is_trivial()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.residual().is_trivial()
    }

    pub fn d_term_nilpotent(&self, k: usize) -> bool {
        is_nilpotent(self.d_term(k))
    }

    pub fn fitting_height(&self) -> Result<FittingHeight> {
        if let Some(h) = self.height.get() {
            return Ok(*h);
        }
        let h = fitting_height(&self.group)?;
        Ok(*self.height.get_or_init(|| h))
    }

    /// Normal closures of single elements.
    pub fn normal_family(&self) -> &[Subgroup] {
        self.family.get_or_init(|| normal_closure_family(&self.group))
    }
}
