//! Isomorphism deciders.

use serde::{Deserialize, Serialize};

pub mod apexed;
pub mod blocks;
pub mod cop32k1;
pub mod cotree;
pub mod gem;
pub mod general;

pub use apexed::iso_apexed_cograph;
pub use blocks::iso_via_blocks;
pub use cop32k1::cop32k1_free_iso;
pub use cotree::{cograph_certificate, Certificate, CoNode, CoTree};
pub use gem::gem_free_iso;
pub use general::{general_iso, general_iso_mapping};

/// Answer of a class-specific decider plus how it was reached.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoOutcome {
    pub isomorphic: bool,
    pub algorithm: String,
    /// Some block was decided by the general engine instead of the class
    /// algorithm. The answer is still exact.
    pub fallback: bool,
    pub blocks_tested: usize,
    /// Candidate correspondences `(H2, φ)` tried by the gem decider.
    pub enumerated: u64,
    /// Blocks decided through a compact clique minor.
    pub clique_branch: usize,
}

impl IsoOutcome {
    pub fn new(algorithm: &str) -> Self {
        IsoOutcome {
            isomorphic: false,
            algorithm: algorithm.to_string(),
            fallback: false,
            blocks_tested: 0,
            enumerated: 0,
            clique_branch: 0,
        }
    }
}
