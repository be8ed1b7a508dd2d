//! Verification harness: seeded generators, property suites with negative
//! controls, independent oracles, and classification-data extraction.

mod extract;
mod gen;
mod oracles;
mod report;
mod suites;

pub use extract::{
    extract_full_form, extract_origin_form, extraction_suite, eta_query,
    roundtrip_parameter_sets, FacetOppositeValuation, FullExtraction, OriginExtraction,
    RebuiltFullValuation, RebuiltOriginValuation,
};
pub use gen::{sub_seed, GenConfig, Generator, OriginPolicy};
pub use oracles::{
    projection_by_prism, quad_sign_by_enclosure, sqrt2_enclosure, triangulation_size,
    volume_by_triangulation,
};
pub use report::{CheckReport, ControlOutcome, FailureWitness, SuiteOutcome};
pub use suites::{
    check_contravariance_instance, check_valuation_instance, closed_form_suite,
    contravariance_suite, control_squared_s, control_support_function, dissection_suite,
    hat_simplex, kernel_volume_suite, limit_suite, mixed_classification_data, projection_dual_suite,
    quad_gap_suite, run_named_suite, simplicity_suite, standard_valuations, tensor_suite,
    valuation_suite, FnValuation, SuiteConfig,
};
