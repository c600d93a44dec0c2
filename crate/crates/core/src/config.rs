use serde::{Deserialize, Serialize};

/// Size limits for the exponential routines. Exceeding one is reported as
/// [`Error::Budget`](crate::Error::Budget), never silently approximated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    /// Branch-and-bound f(G), α(G). Hard ceiling 64.
    pub exact_n: usize,
    /// Subset-scan cross-check of f(G).
    pub naive_n: usize,
    /// Subset DP oracles for minimum non-cycle count and maximum 2-regular
    /// subgraph.
    pub oracle_n: usize,
}

pub const MASK_CEILING: usize = 64;

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            exact_n: 40,
            naive_n: 20,
            oracle_n: 24,
        }
    }
}
