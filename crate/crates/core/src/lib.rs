//! Exact sheaf cohomology of sums of line bundles on products of projective
//! spaces `P^{n_1} x ... x P^{n_s}`.
//!
//! Dimensions come from the Künneth formula and are exact at any size. On top
//! of that the crate decides Castelnuovo-Mumford regularity and the aCM
//! property, builds the factor Koszul complexes, and checks cohomological
//! splitting criteria, reporting every failing `(i, j, t)` and auditing each
//! criterion against its conclusion over all small bundles.
//!
//! ```
//! use multiproj::{LineBundleSum, MultiDegree, sum_cohomology_dim};
//!
//! let e = LineBundleSum::from_degrees(&[2, 2], &[&[-3, -3]]).unwrap();
//! let top = sum_cohomology_dim(&e, &MultiDegree::zero(2), 4).unwrap();
//! assert_eq!(top, 1u32.into());
//! ```

#![allow(clippy::int_plus_one)]

pub mod binomial;
pub mod bundle;
pub mod cli;
pub mod cohomology;
pub mod criteria;
pub mod emit;
pub mod error;
pub mod intervals;
pub mod koszul;
pub mod regularity;

pub use bundle::{LineBundleSum, MultiDegree, Shape, DEGREE_LIMIT};
pub use cohomology::{
    cohomology_table, euler_characteristic, euler_characteristic_alternating, factor_cohomology_dim,
    kunneth_dim, restrict_factor, serre_dual, sum_cohomology_dim, twist, CohomologyTable,
};
pub use criteria::{
    desk_scale_audit, lemma14_check, thm12_conclusion_match, thm12_violations, thm13_conclusion_match,
    thm13_violations, AuditReport, Criterion, ExceptionalSet12, ExceptionalSet13, FormMatch, ViolationReport,
};
pub use emit::{emit_table, Format, Tabular};
pub use error::{Error, Result};
pub use intervals::{nonvanishing_twist_intervals, TwistInterval, TwistIntervalSet};
pub use koszul::{euler_exactness_check, koszul_factor_complex, proposition_iso_dims, Complex};
pub use regularity::{
    acm_closed_form, is_acm, is_globally_generated, is_m_regular, is_zero_regular, regularity_index,
};
