use serde::{Deserialize, Serialize};

/// Resource guards shared by the Groebner engine and the enumerators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Limits {
    /// Maximum number of basis elements during a Buchberger run.
    pub max_basis_elements: usize,
    /// Maximum number of single reduction steps during a Buchberger run.
    pub max_reduction_steps: u64,
    /// Maximum total degree scanned when enumerating standard monomials.
    pub max_layer_degree: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_basis_elements: 50_000,
            max_reduction_steps: 10_000_000,
            max_layer_degree: 200,
        }
    }
}
