use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::gf2::BitVec;
use super::PauliError;

/// Single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    /// Non-identity letters in enumeration order.
    pub const NON_IDENTITY: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// Global phase `i^k` with `k` in 0..4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Phase(u8);

impl Phase {
    pub const PLUS_ONE: Phase = Phase(0);
    pub const PLUS_I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn from_exponent(k: i64) -> Self {
        Phase(k.rem_euclid(4) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn is_real(self) -> bool {
        self.0.is_multiple_of(2)
    }

    pub fn prefix(self) -> &'static str {
        match self.0 {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        }
    }
}

impl std::ops::Mul for Phase {
    type Output = Phase;
    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 4)
    }
}

/// An n-qubit Pauli operator `i^k · σ_0 ⊗ … ⊗ σ_{n-1}` with each `σ` in {I, X, Y, Z}.
///
/// The letters are stored symplectically: `x[q]` is set for X or Y, `z[q]` for Z or Y.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    x: BitVec,
    z: BitVec,
    phase: Phase,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        Self { x: BitVec::zeros(n), z: BitVec::zeros(n), phase: Phase::PLUS_ONE }
    }

    pub fn from_bits(x: BitVec, z: BitVec, phase: Phase) -> Self {
        assert_eq!(x.len(), z.len(), "x and z blocks must have equal length");
        Self { x, z, phase }
    }

    /// Builds a Hermitian Pauli from a symplectic vector `(x ‖ z)` of length 2n.
    pub fn from_symplectic(v: &BitVec) -> Self {
        assert!(v.len().is_multiple_of(2));
        let n = v.len() / 2;
        Self { x: v.slice(0, n), z: v.slice(n, 2 * n), phase: Phase::PLUS_ONE }
    }

    pub fn from_letters(letters: &[Pauli]) -> Self {
        let n = letters.len();
        let mut p = Self::identity(n);
        for (q, &l) in letters.iter().enumerate() {
            p.set(q, l);
        }
        p
    }

    pub fn single(n: usize, qubit: usize, letter: Pauli) -> Self {
        let mut p = Self::identity(n);
        p.set(qubit, letter);
        p
    }

    /// Product of `letter` on every listed qubit.
    pub fn on(n: usize, letter: Pauli, qubits: impl IntoIterator<Item = usize>) -> Self {
        let mut p = Self::identity(n);
        for q in qubits {
            p.set(q, letter);
        }
        p
    }

    pub fn x_on(n: usize, qubits: impl IntoIterator<Item = usize>) -> Self {
        Self::on(n, Pauli::X, qubits)
    }

    pub fn z_on(n: usize, qubits: impl IntoIterator<Item = usize>) -> Self {
        Self::on(n, Pauli::Z, qubits)
    }

    #[inline]
    pub fn n_qubits(&self) -> usize {
        self.x.len()
    }

    pub fn x_bits(&self) -> &BitVec {
        &self.x
    }

    pub fn z_bits(&self) -> &BitVec {
        &self.z
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn with_phase(mut self, phase: Phase) -> Self {
        self.phase = phase;
        self
    }

    pub fn letter(&self, q: usize) -> Pauli {
        Pauli::from_bits(self.x.get(q), self.z.get(q))
    }

    pub fn set(&mut self, q: usize, letter: Pauli) {
        let (x, z) = letter.bits();
        self.x.set(q, x);
        self.z.set(q, z);
    }

    pub fn support(&self) -> BitVec {
        self.x.or(&self.z)
    }

    pub fn weight(&self) -> usize {
        self.support().count_ones()
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn is_hermitian(&self) -> bool {
        self.phase.is_real()
    }

    pub fn is_x_type(&self) -> bool {
        self.z.is_zero()
    }

    pub fn is_z_type(&self) -> bool {
        self.x.is_zero()
    }

    /// Symplectic vector `(x ‖ z)`; the phase is dropped.
    pub fn symplectic(&self) -> BitVec {
        self.x.concat(&self.z)
    }

    fn check_dims(&self, other: &PauliString) -> Result<(), PauliError> {
        if self.n_qubits() != other.n_qubits() {
            return Err(PauliError::DimensionMismatch { left: self.n_qubits(), right: other.n_qubits() });
        }
        Ok(())
    }

    /// Symplectic inner product `x·z' + z·x'` (mod 2); `true` means anticommuting.
    pub fn symplectic_product(&self, other: &PauliString) -> bool {
        (self.x.and_count(&other.z) + self.z.and_count(&other.x)) % 2 == 1
    }

    pub fn commutes_with(&self, other: &PauliString) -> Result<bool, PauliError> {
        self.check_dims(other)?;
        Ok(!self.symplectic_product(other))
    }

    /// Exact product `self · other`.
    pub fn multiply(&self, other: &PauliString) -> Result<PauliString, PauliError> {
        self.check_dims(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &PauliString) -> PauliString {
        // Letter form σ = i^{x·z} X^x Z^z, and X^a Z^b X^c Z^d = (-1)^{b·c} X^{a+c} Z^{b+d}.
        let x = self.x.xor(&other.x);
        let z = self.z.xor(&other.z);
        let k = self.phase.exponent() as i64
            + other.phase.exponent() as i64
            + self.x.and_count(&self.z) as i64
            + other.x.and_count(&other.z) as i64
            + 2 * self.z.and_count(&other.x) as i64
            - x.and_count(&z) as i64;
        PauliString { x, z, phase: Phase::from_exponent(k) }
    }

    pub fn mul_assign_unchecked(&mut self, other: &PauliString) {
        *self = self.mul_unchecked(other);
    }

    /// Tensor product `self ⊗ other`.
    pub fn tensor(&self, other: &PauliString) -> PauliString {
        PauliString {
            x: self.x.concat(&other.x),
            z: self.z.concat(&other.z),
            phase: self.phase * other.phase,
        }
    }

    /// Letters without the phase prefix.
    pub fn letters(&self) -> String {
        (0..self.n_qubits()).map(|q| self.letter(q).as_char()).collect()
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.phase.prefix(), self.letters())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({self})")
    }
}

impl FromStr for PauliString {
    type Err = PauliError;

    /// Parses `[+|-|+i|-i]` followed by letters from {I, X, Y, Z}, e.g. `-iXZI`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (phase, body) = if let Some(rest) = s.strip_prefix("+i") {
            (Phase::PLUS_I, rest)
        } else if let Some(rest) = s.strip_prefix("-i") {
            (Phase::MINUS_I, rest)
        } else if let Some(rest) = s.strip_prefix('+') {
            (Phase::PLUS_ONE, rest)
        } else if let Some(rest) = s.strip_prefix('-') {
            (Phase::MINUS_ONE, rest)
        } else {
            (Phase::PLUS_ONE, s)
        };
        let letters = body
            .chars()
            .map(|c| match c {
                'I' => Ok(Pauli::I),
                'X' => Ok(Pauli::X),
                'Y' => Ok(Pauli::Y),
                'Z' => Ok(Pauli::Z),
                other => Err(PauliError::Parse(format!("unexpected character {other:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PauliString::from_letters(&letters).with_phase(phase))
    }
}

impl Serialize for PauliString {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PauliString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn single_qubit_multiplication_table() {
        let table = [
            ("X", "Y", "+iZ"),
            ("Y", "Z", "+iX"),
            ("Z", "X", "+iY"),
            ("Y", "X", "-iZ"),
            ("Z", "Y", "-iX"),
            ("X", "Z", "-iY"),
            ("X", "X", "+I"),
            ("Y", "Y", "+I"),
            ("Z", "Z", "+I"),
            ("I", "Y", "+Y"),
        ];
        for (a, b, want) in table {
            assert_eq!(p(a).multiply(&p(b)).unwrap(), p(want), "{a}·{b}");
        }
    }

    #[test]
    fn commutation_examples() {
        assert!(!p("XI").commutes_with(&p("ZI")).unwrap());
        assert!(p("XX").commutes_with(&p("ZZ")).unwrap());
        assert!(matches!(
            p("XI").commutes_with(&p("Z")),
            Err(PauliError::DimensionMismatch { left: 2, right: 1 })
        ));
    }

    #[test]
    fn text_round_trip_with_phase() {
        for s in ["-iXZI", "+iYYZ", "-XIZ", "+IIII"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("XZ").to_string(), "+XZ");
        assert!("XQ".parse::<PauliString>().is_err());
    }

    #[test]
    fn weight_and_identity() {
        assert_eq!(p("IXYZI").weight(), 3);
        let id = PauliString::identity(5);
        assert_eq!(id.weight(), 0);
        assert_eq!(id.phase(), Phase::PLUS_ONE);
    }

    fn pauli_strategy(n: usize) -> impl Strategy<Value = PauliString> {
        (prop::collection::vec(0u8..4, n), 0u8..4).prop_map(|(ls, k)| {
            let letters: Vec<Pauli> = ls
                .into_iter()
                .map(|l| [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z][l as usize])
                .collect();
            PauliString::from_letters(&letters).with_phase(Phase::from_exponent(k as i64))
        })
    }

    /// Product computed qubit by qubit from the single-qubit table.
    fn oracle_product(a: &PauliString, b: &PauliString) -> PauliString {
        let mut k = a.phase().exponent() as i64 + b.phase().exponent() as i64;
        let mut letters = Vec::new();
        for q in 0..a.n_qubits() {
            let (la, lb) = (a.letter(q), b.letter(q));
            let (l, e) = match (la, lb) {
                (Pauli::I, l) | (l, Pauli::I) => (l, 0),
                (x, y) if x == y => (Pauli::I, 0),
                (Pauli::X, Pauli::Y) => (Pauli::Z, 1),
                (Pauli::Y, Pauli::Z) => (Pauli::X, 1),
                (Pauli::Z, Pauli::X) => (Pauli::Y, 1),
                (Pauli::Y, Pauli::X) => (Pauli::Z, 3),
                (Pauli::Z, Pauli::Y) => (Pauli::X, 3),
                (Pauli::X, Pauli::Z) => (Pauli::Y, 3),
                _ => unreachable!(),
            };
            k += e;
            letters.push(l);
        }
        PauliString::from_letters(&letters).with_phase(Phase::from_exponent(k))
    }

    proptest! {
        #[test]
        fn product_matches_letterwise_oracle(a in pauli_strategy(70), b in pauli_strategy(70)) {
            prop_assert_eq!(a.multiply(&b).unwrap(), oracle_product(&a, &b));
        }

        #[test]
        fn product_is_associative(a in pauli_strategy(9), b in pauli_strategy(9), c in pauli_strategy(9)) {
            let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
            let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn commutation_is_symmetric_and_matches_reordering(a in pauli_strategy(12), b in pauli_strategy(12)) {
            let ab = a.multiply(&b).unwrap();
            let ba = b.multiply(&a).unwrap();
            let commute = a.commutes_with(&b).unwrap();
            prop_assert_eq!(commute, b.commutes_with(&a).unwrap());
            let expected = if commute { ba.clone() } else { ba.clone().with_phase(ba.phase() * Phase::MINUS_ONE) };
            prop_assert_eq!(ab, expected);
        }

        #[test]
        fn hermitian_paulis_are_involutions(a in pauli_strategy(16)) {
            let h = a.clone().with_phase(Phase::PLUS_ONE);
            prop_assert!(h.multiply(&h).unwrap() == PauliString::identity(16));
        }
    }
}
