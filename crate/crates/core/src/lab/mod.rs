//! Computations attached to G2^F: the representation census, the orbit
//! analysis on N-characters, the finite variety Xbar and its permutation
//! character, and the realization of the nilpotent-orbit irreducibles on
//! G2^F/(S,S)^F.

mod census;
mod realize;
mod suite;
mod variety;

pub use census::{
    census_sums, chi_psi, dim_table, dim_table_original, orbit_census, original_deficit,
    stabilizer_of_chi_psi, stabilizer_shape, DimRow, OrbitCensus,
};
pub use realize::{abelianization_character, y_realization, Realization, RealizedCharacter};
pub use suite::{dim_table_report, field_axioms, ring_axioms, run_check, CHECKS};
pub use variety::{
    a_character, action_axioms, burnside_orbit_count, isotypic_lefschetz, k_independence_check,
    lefschetz, part_index, partition_induction_check, perm_character, perm_character_by_induction,
    theorem_decomposition, xbar_a_action, xbar_build, xbar_g_action, xbar_index, ActionAxioms,
    KIndependence, PartitionCheck, TheoremDecomposition, XbarPoint,
};

use std::sync::{Arc, OnceLock};

use crate::chartab::{dixon_table, little_group_table, CharacterTable, DEFAULT_DIXON_BUDGET};
use crate::cyclo::CycCtx;
use crate::error::{Error, Result};
use crate::gf::FieldCtx;
use crate::group::{
    build_g2f, named_subgroup, GroupTable, SubgroupHandle, SubgroupName, DEFAULT_GROUP_BUDGET,
};

/// Resource limits for one run.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    /// Largest |G2^F| enumerated.
    pub group: u64,
    /// Largest group order handed to the Dixon method.
    pub dixon: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            group: DEFAULT_GROUP_BUDGET,
            dixon: DEFAULT_DIXON_BUDGET,
        }
    }
}

/// G2^F for one q, with its character table computed on first use.
pub struct Lab {
    field: Arc<FieldCtx>,
    g2f: Arc<GroupTable>,
    cyc: CycCtx,
    budget: Budget,
    table: OnceLock<CharacterTable>,
}

impl Lab {
    pub fn new(q: u64, budget: Budget) -> Result<Self> {
        let field = Arc::new(FieldCtx::with_order(q)?);
        let g2f = Arc::new(build_g2f(field.clone(), budget.group)?);
        let cyc = CycCtx::new(g2f.exponent());
        Ok(Lab {
            field,
            g2f,
            cyc,
            budget,
            table: OnceLock::new(),
        })
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.g2f
    }

    pub fn cyc(&self) -> &CycCtx {
        &self.cyc
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn subgroup(&self, name: SubgroupName) -> Result<SubgroupHandle> {
        named_subgroup(&self.g2f, name)
    }

    /// The little-group character table (computed once).
    pub fn table(&self) -> Result<&CharacterTable> {
        if let Some(t) = self.table.get() {
            return Ok(t);
        }
        let t = little_group_table(&self.g2f, &self.cyc)?;
        Ok(self.table.get_or_init(|| t))
    }

    /// The Dixon table, with kind labels copied from the little-group table.
    pub fn dixon(&self) -> Result<CharacterTable> {
        let order = self.g2f.order() as u64;
        if order > self.budget.dixon {
            return Err(Error::Budget {
                what: "group order for Dixon",
                size: order,
                limit: self.budget.dixon,
            });
        }
        let mut t = dixon_table(&self.g2f, &self.cyc, self.budget.dixon)?;
        if let Some(lg) = self.table.get() {
            t.adopt_kinds(lg);
        }
        Ok(t)
    }
}
