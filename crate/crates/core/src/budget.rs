//! Enumeration budget for operations that materialize paths, lattice ideals
//! or search nodes. Callers thread one `Budget` through explicitly; the CLI
//! builds it from `BRATTELI_MAX_CELLS`.

use crate::error::{Error, Result};

pub const DEFAULT_MAX_CELLS: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Upper bound on items a single operation may materialize.
    pub max_cells: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_cells: DEFAULT_MAX_CELLS,
        }
    }
}

impl Budget {
    pub fn new(max_cells: u64) -> Self {
        Budget { max_cells }
    }

    /// Adds `amount` to the running counter, failing once the budget is hit.
    pub fn charge(&self, used: &mut u64, amount: u64, what: &str) -> Result<()> {
        let remaining = self.max_cells.saturating_sub(*used);
        if amount > remaining {
            *used = self.max_cells;
            return Err(Error::resource(format!(
                "{what} needs more than {} cells (BRATTELI_MAX_CELLS)",
                self.max_cells
            )));
        }
        *used += amount;
        Ok(())
    }
}
