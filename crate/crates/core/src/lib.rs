//! Exact computations around the restriction of symmetric-group characters to
//! Sylow p-subgroups (p odd): cycle-type distributions, Murnaghan–Nakayama
//! character values, Littlewood–Richardson coefficients, the `Ω_q` operator and
//! the multiplicities `f(λ)` of the trivial character.

pub mod character;
pub mod error;
pub mod limits;
pub mod lr;
pub mod multiplicity;
pub mod omega;
pub mod partition;
pub mod sylow;

pub use character::{degree, mn_character, CharacterEvaluator};
pub use error::{Error, Result};
pub use limits::Limits;
pub use lr::{lr_coefficient, lr_types, YoungRestriction};
pub use multiplicity::{constituent_count, f, MultiplicityReport, SylowMultiplicity};
pub use omega::{omega, residue_decompose};
pub use partition::{enumerate_partitions, parse_partition, partition_count, Partition};
pub use sylow::{distribution, enumeration_oracle, ClassDistribution};
