pub mod code;
pub mod decoder;
pub mod lattice;
pub mod pauli;
pub mod statevector;
pub mod su2;
pub mod cli;
