//! Instance generators, the counterexample registry and the closure matrix.

pub mod generate;
pub mod matrix;
pub mod registry;

use std::fmt;

pub use generate::{degree_fn, generate, generate_with, laminar_convex_fn, GeneratorConfig, Instance};
pub use matrix::{closure_matrix, fn_table, set_table, CellReport, ClosureCell, ClosureReport, Observed, TrialFailure};
pub use registry::{
    alpha_beta_fn, laminar_example_value, laminar_tree_network, lifted_direct_sum_fn,
    lifted_direct_sum_set, records, run_counterexamples, run_record, Claim, CounterexampleRecord,
    RecordReport,
};

/// The four columns of the closure tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Operation {
    DirectSum,
    Splitting,
    Aggregation,
    NetworkInduction,
}

impl Operation {
    pub const ALL: [Operation; 4] = [
        Operation::DirectSum,
        Operation::Splitting,
        Operation::Aggregation,
        Operation::NetworkInduction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Operation::DirectSum => "direct-sum",
            Operation::Splitting => "splitting",
            Operation::Aggregation => "aggregation",
            Operation::NetworkInduction => "network",
        }
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
