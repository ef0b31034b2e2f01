pub mod bases;
pub mod distribute;
pub mod feasibility;
pub mod minor_select;
pub mod prescription;
pub mod realize;
pub mod shape;
pub mod triangular;

pub use feasibility::{check_feasibility, g_sequence, is_majorized_by, partial_sums, Condition, ConditionResult, FeasibilityReport, Verdict};
pub use prescription::{Invariants, PolyData, Prescription, SpanData, Variant};
pub use bases::{build_dual_minimal_bases, build_minimal_basis};
pub use distribute::{distribute_invariant_factors, sa_conditions_hold};
pub use minor_select::{admissible_minor_pairs, brute_force_minor_select, complement_bound, select_nonzero_minor};
pub use realize::{construct, realize_full, realize_rational, realize_span, realize_span_zero_inf, solve_zero_inf, ZeroInfRealization};
pub use shape::shape_degrees;
pub use triangular::{triangular_realization, triangular_realization_with, SearchConfig, DEFAULT_MAX_SEARCH};
