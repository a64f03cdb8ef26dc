//! Exact finite verification of a categorification of U_t(sl(1|1)), its
//! tensor representations, and the DG algebras and bimodules that realize
//! multiplication, comultiplication and the module action.

pub mod bimod;
pub mod cn;
pub mod decat;
pub mod dgmod;
pub mod foundation;
pub mod gf2;
pub mod par;
pub mod presented;
pub mod report;
pub mod rook;
pub mod suites;
pub mod ut_hopf;
pub mod vn_rep;
pub mod zoo;
