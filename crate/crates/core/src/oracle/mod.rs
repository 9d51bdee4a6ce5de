//! Brute-force and simulation checks for the closed forms.

mod program;
mod search;
mod simulate;
mod verify;

pub use program::{solve_program, ProgramSolution};
pub use search::price_search;
pub use simulate::{simulate, SimAtom, SimReport};
pub use verify::{verify_equilibrium, EquilibriumCertificate};
