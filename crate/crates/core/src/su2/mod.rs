//! Truncated SU(2) Kogut-Susskind Hamiltonian at `j_max = 1/2` and the logical Hamiltonians of
//! both codes.
//!
//! Electric-basis labels use bit `l` for link `l` (`1 ⇔ j = 1/2`). Code I logical labels use bit
//! `n` for plaquette `n`. Code II logical labels use bits `2d` and `2d + 1` for the left and
//! right links of dot `d`.

mod hamiltonian;
mod operator;
mod sixj;

use thiserror::Error;

use crate::code::CodeError;

pub use hamiltonian::{
    build_code1_flux_hamiltonian, build_code1_logical_hamiltonian, build_code2_logical_hamiltonian,
    build_ks_hamiltonian, chain_winding, code2_is_physical, code2_link_label, code2_physical_subsector,
    code2_sector_mixing, gauss_project, is_physical, plaquette_element, plaquette_element_exact, split_by_winding,
    MAX_BASIS_BITS,
};
pub use operator::{spectrum_compare, Couplings, OperatorMatrix, SpectrumComparison};
pub use sixj::{sixj, sixj_exact, SixJInput, SqrtRational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Su2Error {
    #[error("negative angular momentum (twice-value {0})")]
    NegativeSpin(i64),
    #[error("basis of {bits} bits exceeds the cap of {max}")]
    TooLarge { bits: usize, max: usize },
    #[error("plaquette element <{bra:b}|P|{ket:b}> has an odd power of i")]
    NotReal { bra: u64, ket: u64 },
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("unsupported: {0}")]
    Unsupported(String),
}
