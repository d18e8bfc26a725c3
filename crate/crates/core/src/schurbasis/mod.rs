//! Schur symbols `Sc_lambda` on arbitrary integer vectors, straightening to
//! the partition basis, the substitution `rho^{k,n}`, and the `S` operation
//! with its residue-at-infinity counterpart.

mod expr;
pub(crate) mod kernel;
mod partition;
mod residue;
mod rho;
mod series;
mod sss;

pub use expr::{z, DenFactor, RationalSeriesExpr};
pub use partition::{
    partitions_bounded, partitions_of, partitions_up_to, straighten, straighten_by_rules, IntVector,
    Partition, Straightened,
};
pub use residue::{c_poly_to_schur, jacobi_trudi_c, residue_at_infinity, residue_at_infinity_c};
pub use rho::{apply_rho, rho_kernel_test, schur_to_poly, symmetric_to_schur, RhoEvaluator};
pub use series::{parse_schur, SchurSeries};
pub use sss::sss_expand;
