//! Dense state-vector simulation of encoding circuits and projector-based codespace checks.
//!
//! Qubit 0 is the most significant bit of the basis index: on `n` qubits, basis state
//! `|b_0 b_1 … b_{n-1}⟩` sits at index `Σ b_q 2^{n-1-q}`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::StabilizerCode;
use crate::pauli::{PauliError, PauliString};

/// Largest register the dense simulator accepts.
pub const MAX_QUBITS: usize = 14;

const NORM_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StateError {
    #[error("{n} qubits exceeds the dense simulation cap of {max}")]
    TooManyQubits { n: usize, max: usize },
    #[error("dimension mismatch: {expected} vs {got} qubits")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("qubit {qubit} out of range for {n} qubits")]
    QubitOutOfRange { qubit: usize, n: usize },
    #[error("CNOT control and target are both qubit {0}")]
    ControlIsTarget(usize),
    #[error("gate {0:?} needs a control qubit")]
    MissingControl(GateKind),
    #[error("state norm {0} differs from 1")]
    NotNormalized(f64),
    #[error("expected {expected} amplitudes, got {got}")]
    AmplitudeCount { expected: usize, got: usize },
    #[error("encoder synthesis needs a CSS code: {0}")]
    NotCss(String),
    #[error(transparent)]
    Pauli(#[from] PauliError),
}

fn check_size(n: usize) -> Result<(), StateError> {
    if n > MAX_QUBITS {
        Err(StateError::TooManyQubits { n, max: MAX_QUBITS })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuantumState {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl QuantumState {
    /// `|0…0⟩` on `n` qubits.
    pub fn zero(n: usize) -> Result<Self, StateError> {
        Self::basis(n, 0)
    }

    pub fn basis(n: usize, index: usize) -> Result<Self, StateError> {
        check_size(n)?;
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self { n_qubits: n, amplitudes })
    }

    /// Basis state with qubit `q` set to `bits[q]`.
    pub fn from_bits(bits: &[bool]) -> Result<Self, StateError> {
        let n = bits.len();
        let index = bits.iter().fold(0usize, |acc, &b| (acc << 1) | usize::from(b));
        Self::basis(n, index)
    }

    pub fn from_amplitudes(n: usize, amplitudes: Vec<Complex64>) -> Result<Self, StateError> {
        check_size(n)?;
        if amplitudes.len() != 1 << n {
            return Err(StateError::AmplitudeCount { expected: 1 << n, got: amplitudes.len() });
        }
        let s = Self { n_qubits: n, amplitudes };
        let norm = s.norm();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(StateError::NotNormalized(norm));
        }
        Ok(s)
    }

    /// Normalizes `amplitudes` before building the state.
    pub fn normalized(n: usize, mut amplitudes: Vec<Complex64>) -> Result<Self, StateError> {
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        amplitudes.iter_mut().for_each(|a| *a /= norm);
        Self::from_amplitudes(n, amplitudes)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &QuantumState) -> Result<Complex64, StateError> {
        self.same_size(other)?;
        Ok(self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum())
    }

    /// Largest amplitude difference.
    pub fn distance(&self, other: &QuantumState) -> Result<f64, StateError> {
        self.same_size(other)?;
        Ok(self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max))
    }

    /// `self ⊗ other`, with `self` on the leading qubits.
    pub fn tensor(&self, other: &QuantumState) -> Result<QuantumState, StateError> {
        let n = self.n_qubits + other.n_qubits;
        check_size(n)?;
        let amplitudes =
            self.amplitudes.iter().flat_map(|a| other.amplitudes.iter().map(move |b| a * b)).collect();
        Ok(QuantumState { n_qubits: n, amplitudes })
    }

    /// Places `self` on `positions` of an `n`-qubit register whose other qubits are `|0⟩`.
    pub fn embed(&self, n: usize, positions: &[usize]) -> Result<QuantumState, StateError> {
        check_size(n)?;
        if positions.len() != self.n_qubits {
            return Err(StateError::DimensionMismatch { expected: self.n_qubits, got: positions.len() });
        }
        if let Some(&q) = positions.iter().find(|&&q| q >= n) {
            return Err(StateError::QubitOutOfRange { qubit: q, n });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n];
        let m = self.n_qubits;
        for (i, &a) in self.amplitudes.iter().enumerate() {
            let mut index = 0;
            for (k, &q) in positions.iter().enumerate() {
                if (i >> (m - 1 - k)) & 1 == 1 {
                    index |= 1 << (n - 1 - q);
                }
            }
            amplitudes[index] = a;
        }
        Ok(QuantumState { n_qubits: n, amplitudes })
    }

    fn same_size(&self, other: &QuantumState) -> Result<(), StateError> {
        if self.n_qubits != other.n_qubits {
            return Err(StateError::DimensionMismatch { expected: self.n_qubits, got: other.n_qubits });
        }
        Ok(())
    }

    fn mask(&self, q: usize) -> usize {
        1 << (self.n_qubits - 1 - q)
    }

    fn apply_gate(&mut self, g: &Gate) {
        let t = self.mask(g.target);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        match g.kind {
            GateKind::H => {
                for i in 0..self.amplitudes.len() {
                    if i & t == 0 {
                        let (a, b) = (self.amplitudes[i], self.amplitudes[i | t]);
                        self.amplitudes[i] = (a + b) * s;
                        self.amplitudes[i | t] = (a - b) * s;
                    }
                }
            }
            GateKind::X => {
                for i in 0..self.amplitudes.len() {
                    if i & t == 0 {
                        self.amplitudes.swap(i, i | t);
                    }
                }
            }
            GateKind::Z => {
                for (i, a) in self.amplitudes.iter_mut().enumerate() {
                    if i & t != 0 {
                        *a = -*a;
                    }
                }
            }
            GateKind::Cnot => {
                let c = self.mask(g.control.expect("validated CNOT"));
                for i in 0..self.amplitudes.len() {
                    if i & c != 0 && i & t == 0 {
                        self.amplitudes.swap(i, i | t);
                    }
                }
            }
        }
    }

    /// `P|ψ⟩` for a Pauli string including its phase.
    pub fn apply_pauli(&self, p: &PauliString) -> Result<QuantumState, StateError> {
        if p.n_qubits() != self.n_qubits {
            return Err(StateError::DimensionMismatch { expected: self.n_qubits, got: p.n_qubits() });
        }
        let (mut xmask, mut zmask, mut n_y) = (0usize, 0usize, 0u8);
        for q in 0..self.n_qubits {
            let (x, z) = p.letter(q).bits();
            if x {
                xmask |= self.mask(q);
            }
            if z {
                zmask |= self.mask(q);
            }
            n_y += u8::from(x && z);
        }
        // Y = i·X·Z per qubit, so each basis state picks up i^{k + #Y} (−1)^{b·z}.
        let base = Complex64::i().powu(u32::from((p.phase().exponent() + n_y) % 4));
        let mut out = vec![Complex64::new(0.0, 0.0); self.amplitudes.len()];
        for (i, &a) in self.amplitudes.iter().enumerate() {
            let sign = if (i & zmask).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
            out[i ^ xmask] = a * base * sign;
        }
        Ok(QuantumState { n_qubits: self.n_qubits, amplitudes: out })
    }

    /// `⟨ψ|P|ψ⟩`, real for Hermitian `P`.
    pub fn expectation(&self, p: &PauliString) -> Result<f64, StateError> {
        Ok(self.inner(&self.apply_pauli(p)?)?.re)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GateKind {
    H,
    X,
    Z,
    Cnot,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gate {
    pub kind: GateKind,
    pub target: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub control: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Circuit {
    #[serde(rename = "n")]
    pub n_qubits: usize,
    pub gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n_qubits: usize) -> Self {
        Self { n_qubits, gates: Vec::new() }
    }

    pub fn h(&mut self, target: usize) -> &mut Self {
        self.gates.push(Gate { kind: GateKind::H, target, control: None });
        self
    }

    pub fn x(&mut self, target: usize) -> &mut Self {
        self.gates.push(Gate { kind: GateKind::X, target, control: None });
        self
    }

    pub fn z(&mut self, target: usize) -> &mut Self {
        self.gates.push(Gate { kind: GateKind::Z, target, control: None });
        self
    }

    pub fn cnot(&mut self, control: usize, target: usize) -> &mut Self {
        self.gates.push(Gate { kind: GateKind::Cnot, target, control: Some(control) });
        self
    }

    pub fn validate(&self) -> Result<(), StateError> {
        let n = self.n_qubits;
        for g in &self.gates {
            if g.target >= n {
                return Err(StateError::QubitOutOfRange { qubit: g.target, n });
            }
            match (g.kind, g.control) {
                (GateKind::Cnot, None) => return Err(StateError::MissingControl(g.kind)),
                (_, Some(c)) if c >= n => return Err(StateError::QubitOutOfRange { qubit: c, n }),
                (_, Some(c)) if c == g.target => return Err(StateError::ControlIsTarget(c)),
                _ => {}
            }
        }
        Ok(())
    }

    pub fn run(&self, input: &QuantumState) -> Result<QuantumState, StateError> {
        run(self, input)
    }
}

/// Applies the gates in order.
pub fn run(c: &Circuit, input: &QuantumState) -> Result<QuantumState, StateError> {
    if c.n_qubits != input.n_qubits {
        return Err(StateError::DimensionMismatch { expected: c.n_qubits, got: input.n_qubits });
    }
    c.validate()?;
    let mut state = input.clone();
    for g in &c.gates {
        state.apply_gate(g);
        debug_assert!((state.norm() - 1.0).abs() < 1e-10);
    }
    Ok(state)
}

/// Three-qubit link encoder: `|0⟩ → |α⟩`, `|1⟩ → |β⟩`.
pub fn code1_link_circuit() -> Circuit {
    let mut c = Circuit::new(3);
    c.h(0).cnot(0, 1).cnot(0, 2).h(0).h(1).h(2);
    c
}

fn plus_minus_cat(sign: f64) -> QuantumState {
    let s = 1.0 / 8f64.sqrt();
    let amps = (0..8usize)
        .map(|i| {
            // |+++⟩ has all amplitudes 1/√8; |−−−⟩ has (−1)^{popcount}/√8
            let minus = if i.count_ones() % 2 == 1 { -s } else { s };
            Complex64::new((s + sign * minus) / 2f64.sqrt(), 0.0)
        })
        .collect();
    QuantumState::from_amplitudes(3, amps).expect("normalized cat state")
}

/// `(|+++⟩ + |−−−⟩)/√2`.
pub fn alpha_state() -> QuantumState {
    plus_minus_cat(1.0)
}

/// `(|+++⟩ − |−−−⟩)/√2`.
pub fn beta_state() -> QuantumState {
    plus_minus_cat(-1.0)
}

pub fn encode_code1_link(input: &QuantumState) -> Result<QuantumState, StateError> {
    if input.n_qubits() != 1 {
        return Err(StateError::DimensionMismatch { expected: 1, got: input.n_qubits() });
    }
    run(&code1_link_circuit(), &input.tensor(&QuantumState::zero(2)?)?)
}

/// Encodes a link configuration qubit by qubit: link `l` becomes qubits `3l..3l+3`.
pub fn encode_code1_links(links: &[bool]) -> Result<QuantumState, StateError> {
    check_size(3 * links.len())?;
    let mut state = QuantumState::zero(0)?;
    for &bit in links {
        let link = encode_code1_link(&QuantumState::basis(1, usize::from(bit))?)?;
        state = state.tensor(&link)?;
    }
    Ok(state)
}

/// Four-qubit vertex encoder with the left link on qubit 0 and the right link on qubit 2.
pub fn four_two_two_circuit() -> Circuit {
    let mut c = Circuit::new(4);
    c.cnot(0, 1).cnot(2, 1).h(3).cnot(3, 0).cnot(3, 1).cnot(3, 2);
    c
}

pub fn encode_422(input: &QuantumState) -> Result<QuantumState, StateError> {
    if input.n_qubits() != 2 {
        return Err(StateError::DimensionMismatch { expected: 2, got: input.n_qubits() });
    }
    run(&four_two_two_circuit(), &input.embed(4, &[0, 2])?)
}

/// Standard-form encoder for a CSS code. Returns the circuit and the qubits that take the
/// unencoded input, in logical order.
///
/// The inputs sit on the last `k` standard-form columns. Controlled logical X operators copy
/// them out first, then each X-type row applies a Hadamard to its pivot and fans out CNOTs.
pub fn synthesize_encoder(code: &StabilizerCode) -> Result<(Circuit, Vec<usize>), StateError> {
    let n = code.n_physical;
    let sf = code.generators.standard_form()?;
    let rows = sf.check_matrix.matrix();
    let r = sf.x_rank;
    let k = sf.logical_xs.len();
    let order = &sf.qubit_order;
    let row_x = |i: usize| (0..n).filter(move |&c| rows.row(i).get(c));
    let row_has_z = |i: usize| (n..2 * n).any(|c| rows.row(i).get(c));
    if (0..r).any(row_has_z) {
        return Err(StateError::NotCss("an X-block row carries Z components".into()));
    }
    if let Some(x) = sf.logical_xs.iter().find(|x| !x.is_x_type()) {
        return Err(StateError::NotCss(format!("logical {x} is not X-type")));
    }
    let mut c = Circuit::new(n);
    let inputs: Vec<usize> = (0..k).map(|i| order[n - k + i]).collect();
    for (i, x) in sf.logical_xs.iter().enumerate() {
        for q in x.x_bits().ones().filter(|&q| q != inputs[i]) {
            c.cnot(inputs[i], q);
        }
    }
    for i in 0..r {
        c.h(order[i]);
        for col in row_x(i).filter(|&col| col != i) {
            c.cnot(order[i], order[col]);
        }
    }
    Ok((c, inputs))
}

/// Encodes a two-qubit link state `|q_l q_r⟩` into one twelve-qubit carbon block.
pub fn encode_code2_vertex(code: &StabilizerCode, input: &QuantumState) -> Result<QuantumState, StateError> {
    let (circuit, inputs) = synthesize_encoder(code)?;
    if input.n_qubits() != inputs.len() {
        return Err(StateError::DimensionMismatch { expected: inputs.len(), got: input.n_qubits() });
    }
    run(&circuit, &input.embed(code.n_physical, &inputs)?)
}

/// Dimension of the joint +1 eigenspace, as the trace of `∏(I + S_i)/2` over the computational
/// basis.
pub fn codespace_projector_dim(code: &StabilizerCode) -> Result<usize, StateError> {
    let n = code.n_physical;
    check_size(n)?;
    let gens = code.generators.generators();
    let mut trace = 0.0;
    for b in 0..1usize << n {
        let mut state = QuantumState::basis(n, b)?;
        for g in gens {
            let gs = state.apply_pauli(g)?;
            for (a, x) in state.amplitudes.iter_mut().zip(&gs.amplitudes) {
                *a = (*a + x) * 0.5;
            }
        }
        trace += state.amplitudes[b].re;
    }
    Ok(trace.round() as usize)
}

/// Checks that `logical` acts on `encoded[a]` as `expected` acts on the logical basis state
/// `|a⟩`, for every `a`.
pub fn verify_logical_action(
    encoded: &[QuantumState],
    logical: &PauliString,
    expected: &PauliString,
    tol: f64,
) -> Result<bool, StateError> {
    let k = expected.n_qubits();
    if encoded.len() != 1 << k {
        return Err(StateError::AmplitudeCount { expected: 1 << k, got: encoded.len() });
    }
    for (a, state) in encoded.iter().enumerate() {
        let image = QuantumState::basis(k, a)?.apply_pauli(expected)?;
        let (target, &coeff) =
            image.amplitudes.iter().enumerate().find(|(_, c)| c.norm() > 0.5).expect("Pauli image of a basis state");
        let want = QuantumState { n_qubits: state.n_qubits, amplitudes: encoded[target].amplitudes.iter().map(|x| x * coeff).collect() };
        if state.apply_pauli(logical)?.distance(&want)? > tol {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{build_code1, carbon_code, four_two_two, vertex_block};
    use crate::lattice::{build_chain, Boundary};
    use crate::pauli::Pauli;
    use proptest::prelude::*;

    const TOL: f64 = 1e-12;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn hadamard_on_zero() {
        let mut circ = Circuit::new(1);
        circ.h(0);
        let out = circ.run(&QuantumState::zero(1).unwrap()).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((out.amplitude(0) - c(s, 0.0)).norm() < TOL);
        assert!((out.amplitude(1) - c(s, 0.0)).norm() < TOL);
    }

    #[test]
    fn qubit_zero_is_most_significant() {
        let mut circ = Circuit::new(3);
        circ.x(0);
        let out = circ.run(&QuantumState::zero(3).unwrap()).unwrap();
        assert_eq!(out.amplitude(0b100), c(1.0, 0.0));
    }

    #[test]
    fn link_encoder_outputs_alpha_and_beta() {
        let a = encode_code1_link(&QuantumState::basis(1, 0).unwrap()).unwrap();
        assert!(a.distance(&alpha_state()).unwrap() < TOL);
        let b = encode_code1_link(&QuantumState::basis(1, 1).unwrap()).unwrap();
        assert!(b.distance(&beta_state()).unwrap() < TOL);
        let plus = QuantumState::normalized(1, vec![c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        let out = encode_code1_link(&plus).unwrap();
        let s = 1.0 / 8f64.sqrt();
        assert!(out.amplitudes().iter().all(|a| (a - c(s, 0.0)).norm() < TOL));
    }

    #[test]
    fn z_error_on_beta_gives_table_syndrome() {
        let b = encode_code1_link(&QuantumState::basis(1, 1).unwrap()).unwrap();
        let err = b.apply_pauli(&PauliString::single(3, 1, Pauli::Z)).unwrap();
        assert!(err.inner(&beta_state()).unwrap().norm() < TOL);
        let x01: PauliString = "XXI".parse().unwrap();
        let x12: PauliString = "IXX".parse().unwrap();
        assert!((err.expectation(&x01).unwrap() + 1.0).abs() < TOL);
        assert!((err.expectation(&x12).unwrap() + 1.0).abs() < TOL);
    }

    #[test]
    fn pauli_application_matches_letters() {
        let s = QuantumState::basis(1, 0).unwrap();
        let y = s.apply_pauli(&"Y".parse().unwrap()).unwrap();
        assert_eq!(y.amplitude(1), c(0.0, 1.0));
        let y1 = QuantumState::basis(1, 1).unwrap().apply_pauli(&"Y".parse().unwrap()).unwrap();
        assert_eq!(y1.amplitude(0), c(0.0, -1.0));
        let m = QuantumState::basis(1, 0).unwrap().apply_pauli(&"-iX".parse().unwrap()).unwrap();
        assert_eq!(m.amplitude(1), c(0.0, -1.0));
    }

    #[test]
    fn four_two_two_codewords_match_table() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        // (q_l, q_r) -> the two four-qubit basis states of the codeword
        let cases = [((0, 0), [0b0000, 0b1111]), ((1, 0), [0b1100, 0b0011]), ((1, 1), [0b1010, 0b0101]), ((0, 1), [0b0110, 0b1001])];
        for ((l, r), support) in cases {
            let out = encode_422(&QuantumState::basis(2, 2 * l + r).unwrap()).unwrap();
            let mut want = vec![c(0.0, 0.0); 16];
            for i in support {
                want[i] = c(s, 0.0);
            }
            let want = QuantumState::from_amplitudes(4, want).unwrap();
            assert!(out.distance(&want).unwrap() < TOL, "input {l}{r}");
        }
        let code = four_two_two();
        for a in 0..4 {
            let out = encode_422(&QuantumState::basis(2, a).unwrap()).unwrap();
            for g in code.generators.generators() {
                assert!((out.expectation(g).unwrap() - 1.0).abs() < TOL);
            }
        }
    }

    #[test]
    fn carbon_encoder_is_stabilized_and_maps_logical_basis() {
        let code = carbon_code();
        let (circuit, inputs) = synthesize_encoder(&code).unwrap();
        assert_eq!(inputs, vec![10, 11]);
        assert!(circuit.gates.iter().all(|g| matches!(g.kind, GateKind::H | GateKind::Cnot)));
        let encoded: Vec<QuantumState> =
            (0..4).map(|a| encode_code2_vertex(&code, &QuantumState::basis(2, a).unwrap()).unwrap()).collect();
        for (a, st) in encoded.iter().enumerate() {
            for g in code.generators.generators() {
                assert!((st.expectation(g).unwrap() - 1.0).abs() < TOL);
            }
            let z1 = st.expectation(&code.logical_pairs[0].z).unwrap();
            let z2 = st.expectation(&code.logical_pairs[1].z).unwrap();
            let want = |bit: usize| if bit == 1 { -1.0 } else { 1.0 };
            assert!((z1 - want(a >> 1)).abs() < TOL && (z2 - want(a & 1)).abs() < TOL);
        }
        let x1 = PauliString::single(2, 0, Pauli::X);
        assert!(verify_logical_action(&encoded, &code.logical_pairs[0].x, &x1, TOL).unwrap());
        let z2 = PauliString::single(2, 1, Pauli::Z);
        assert!(verify_logical_action(&encoded, &code.logical_pairs[1].z, &z2, TOL).unwrap());
    }

    #[test]
    fn carbon_vacuum_is_uniform_over_x_orbit() {
        let code = carbon_code();
        let out = encode_code2_vertex(&code, &QuantumState::basis(2, 0).unwrap()).unwrap();
        let support: Vec<f64> = out.amplitudes().iter().filter(|a| a.norm() > 1e-9).map(|a| a.re).collect();
        // five independent X-type generators give an orbit of 32 basis states
        assert_eq!(support.len(), 32);
        assert!(support.iter().all(|&a| (a - 1.0 / 32f64.sqrt()).abs() < TOL));
    }

    #[test]
    fn projector_dimensions() {
        assert_eq!(codespace_projector_dim(&vertex_block()).unwrap(), 4);
        assert_eq!(codespace_projector_dim(&four_two_two()).unwrap(), 4);
        let l = build_chain(1, Boundary::Aperiodic).unwrap();
        assert_eq!(codespace_projector_dim(&build_code1(&l).unwrap()).unwrap(), 2);
    }

    #[test]
    fn size_cap_is_enforced() {
        assert!(matches!(QuantumState::zero(15), Err(StateError::TooManyQubits { .. })));
        let l = build_chain(2, Boundary::Aperiodic).unwrap();
        assert!(codespace_projector_dim(&build_code1(&l).unwrap()).is_err());
    }

    #[test]
    fn circuit_validation_and_json() {
        let mut bad = Circuit::new(2);
        bad.cnot(1, 1);
        assert!(matches!(bad.validate(), Err(StateError::ControlIsTarget(1))));
        let v = serde_json::to_value(code1_link_circuit()).unwrap();
        assert_eq!(v["n"], 3);
        assert_eq!(v["gates"][1], serde_json::json!({"kind": "cnot", "target": 1, "control": 0}));
        assert_eq!(v["gates"][0], serde_json::json!({"kind": "h", "target": 0}));
    }

    #[test]
    fn plaquette_logical_maps_vacuum_to_excited() {
        let l = build_chain(1, Boundary::Aperiodic).unwrap();
        let code = build_code1(&l).unwrap();
        let encoded = vec![encode_code1_links(&[false; 4]).unwrap(), encode_code1_links(&[true; 4]).unwrap()];
        for st in &encoded {
            for g in code.generators.generators() {
                assert!((st.expectation(g).unwrap() - 1.0).abs() < TOL);
            }
        }
        let x = PauliString::single(1, 0, Pauli::X);
        let z = PauliString::single(1, 0, Pauli::Z);
        assert!(verify_logical_action(&encoded, &code.logical_pairs[0].x, &x, TOL).unwrap());
        assert!(verify_logical_action(&encoded, &code.logical_pairs[0].z, &z, TOL).unwrap());
        assert!(!verify_logical_action(&encoded, &code.logical_pairs[0].z, &x, TOL).unwrap());
    }

    fn two_qubit_state() -> impl Strategy<Value = QuantumState> {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 4)
            .prop_filter("nonzero", |v| v.iter().map(|(a, b)| a * a + b * b).sum::<f64>() > 1e-3)
            .prop_map(|v| QuantumState::normalized(2, v.into_iter().map(|(a, b)| c(a, b)).collect()).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn encoders_are_isometries(a in two_qubit_state(), b in two_qubit_state()) {
            let code = carbon_code();
            let before = a.inner(&b).unwrap();
            let ea = encode_code2_vertex(&code, &a).unwrap();
            let eb = encode_code2_vertex(&code, &b).unwrap();
            prop_assert!((ea.inner(&eb).unwrap() - before).norm() < TOL);
            prop_assert!((ea.norm() - 1.0).abs() < TOL);
            let fa = encode_422(&a).unwrap();
            let fb = encode_422(&b).unwrap();
            prop_assert!((fa.inner(&fb).unwrap() - before).norm() < TOL);
        }

        #[test]
        fn link_encoder_is_isometry(x in (-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0)) {
            prop_assume!(x.0.abs() + x.1.abs() + x.2.abs() + x.3.abs() > 1e-3);
            let psi = QuantumState::normalized(1, vec![c(x.0, x.1), c(x.2, x.3)]).unwrap();
            let out = encode_code1_link(&psi).unwrap();
            let want: Vec<Complex64> = alpha_state().amplitudes().iter().zip(beta_state().amplitudes())
                .map(|(a, b)| a * psi.amplitude(0) + b * psi.amplitude(1)).collect();
            let want = QuantumState::from_amplitudes(3, want).unwrap();
            prop_assert!(out.distance(&want).unwrap() < TOL);
        }
    }
}
