//! Exact checks of the identities behind the ground-state construction.
//!
//! Every check returns a [`Report`]. Randomized checks draw exact rationals
//! from a seeded generator, so a report is reproduced by its seed.

pub mod chain;
pub mod golden;
pub mod integrability;
pub mod merge;
pub mod sample;
pub mod solved;

use std::collections::BTreeMap;

pub use integrability::{byb_same_side_experiment, verify_byb, verify_ybe, BybOptions, YbeOptions};
pub use merge::{verify_factorization, verify_merge_identity};
pub use sample::Sampler;
pub use solved::{
    golden_components, verify_eigen, verify_golden, verify_qkz, verify_recurrence, verify_stochasticity,
    verify_structure,
};

/// First failing sample: parameters by name, and the entry that differed.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct Counterexample {
    pub params: BTreeMap<String, String>,
    pub entry: String,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct Report {
    pub identity: String,
    pub seed: u64,
    pub samples: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    /// bound on the total degree of the identity in the sampled parameters
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<u32>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(identity: impl Into<String>, seed: u64, samples: usize) -> Self {
        Report {
            identity: identity.into(),
            seed,
            samples,
            pass: true,
            counterexample: None,
            degree_bound: None,
            notes: Vec::new(),
        }
    }

    /// Record a failure; only the first one is kept.
    pub fn fail(&mut self, params: BTreeMap<String, String>, entry: impl Into<String>) {
        self.pass = false;
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample { params, entry: entry.into() });
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// One line: `identity: pass (n samples, seed s)`.
    pub fn summary(&self) -> String {
        format!(
            "{}: {} ({} samples, seed {})",
            self.identity,
            if self.pass { "pass" } else { "FAIL" },
            self.samples,
            self.seed
        )
    }
}

/// Named parameter list for counterexamples.
pub(crate) fn params<'a>(items: impl IntoIterator<Item = (&'a str, String)>) -> BTreeMap<String, String> {
    items.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}
