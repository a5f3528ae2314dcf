//! Exact computations for dynamics of rational maps on the Berkovich
//! projective line over ℚ with a p-adic absolute value.

pub mod berkovich;
pub mod cli;
pub mod crucial_measure;
pub mod dynamics_reports;
pub mod ordres_minresloc;
pub mod rational_map;
pub mod tree_potential;
pub mod valued_field;
