pub mod algebra;
pub mod coeff;
pub mod constraint;
pub mod exec;
pub mod fock;
pub mod parser;
pub mod relations;
