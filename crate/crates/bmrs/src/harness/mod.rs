//! Exhaustive small-instance verification: string enumeration, an
//! independent subsequential-transducer oracle, a fixture registry, and
//! one named suite per correctness result.

pub mod enumerate;
pub mod fixtures;
pub mod suites;
pub mod transducer;

pub use enumerate::{enumerate_strings, string_count, StringEnumerator};
pub use fixtures::{composable_pairs, fixture, machine, registry, Fixture, Registry};
pub use suites::{
    check_equal_transductions, default_bound, run_suite, suite_names, StringFn, SuiteOutcome,
    SuiteReport, SUITES,
};
pub use transducer::{MachineDirection, SubseqTransducer};
