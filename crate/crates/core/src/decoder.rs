//! Syndrome extraction and weight-one lookup-table decoding.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::code::StabilizerCode;
use crate::pauli::{for_each_error, BitVec, Pauli, PauliError, PauliString};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecoderError {
    #[error(transparent)]
    Pauli(#[from] PauliError),
    #[error("not correctable: {} and {} share syndrome {} but differ by a logical operator", .0.first, .0.second, .0.syndrome)]
    NotCorrectable(Box<Ambiguity>),
    #[error("syndrome has {got} bits, code has {expected} generators")]
    SyndromeLength { expected: usize, got: usize },
}

/// Two errors with one syndrome whose product lies outside the stabilizer group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ambiguity {
    pub syndrome: Syndrome,
    pub first: PauliString,
    pub second: PauliString,
}

/// One bit per generator, set when the error anticommutes with it (eigenvalue −1).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Syndrome(BitVec);

impl Syndrome {
    pub fn bits(&self) -> &BitVec {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_zero()
    }

    /// Measured eigenvalues: +1 for a satisfied check, −1 for a violated one.
    pub fn eigenvalues(&self) -> Vec<i8> {
        self.0.to_bools().into_iter().map(|b| if b { -1 } else { 1 }).collect()
    }

    pub fn xor(&self, other: &Syndrome) -> Syndrome {
        Syndrome(self.0.xor(&other.0))
    }
}

impl From<BitVec> for Syndrome {
    fn from(bits: BitVec) -> Self {
        Syndrome(bits)
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Syndrome({})", self.0)
    }
}

impl FromStr for Syndrome {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(format!("invalid syndrome character {other:?}")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Syndrome(BitVec::from_bools(&bits)))
    }
}

impl Serialize for Syndrome {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Syndrome {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

pub fn syndrome(code: &StabilizerCode, error: &PauliString) -> Result<Syndrome, PauliError> {
    if error.n_qubits() != code.n_physical {
        return Err(PauliError::DimensionMismatch { left: code.n_physical, right: error.n_qubits() });
    }
    let bits: Vec<bool> = code.generators.generators().iter().map(|g| g.symplectic_product(error)).collect();
    Ok(Syndrome(BitVec::from_bools(&bits)))
}

/// Which single-qubit errors a table is built for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum ErrorModel {
    /// Single-qubit Z errors only.
    ZOnly,
    /// Single-qubit X errors only.
    XOnly,
    /// All single-qubit X, Y and Z errors.
    AllSingle,
}

impl ErrorModel {
    fn admits(self, p: Pauli) -> bool {
        match self {
            ErrorModel::ZOnly => p == Pauli::Z,
            ErrorModel::XOnly => p == Pauli::X,
            ErrorModel::AllSingle => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeRow {
    pub syndrome: Syndrome,
    pub correction: PauliString,
    /// Errors mapped to this syndrome. All of them are equivalent up to a stabilizer.
    pub class: Vec<PauliString>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecodeTable {
    pub model: ErrorModel,
    pub rows: Vec<DecodeRow>,
    #[serde(skip)]
    index: HashMap<Syndrome, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decoded {
    Correction(PauliString),
    /// A nontrivial syndrome that no tabulated error produces.
    DetectedOnly,
}

impl DecodeTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, s: &Syndrome) -> Option<&DecodeRow> {
        self.index.get(s).map(|&i| &self.rows[i])
    }

    /// Rows whose class holds more than one error.
    pub fn degenerate_rows(&self) -> impl Iterator<Item = &DecodeRow> {
        self.rows.iter().filter(|r| r.class.len() > 1)
    }
}

/// Builds the weight-one table: the first row is the trivial syndrome, then one row per new
/// syndrome in enumeration order, with the first error seen as the stored correction.
pub fn build_decode_table(code: &StabilizerCode, model: ErrorModel) -> Result<DecodeTable, DecoderError> {
    let n = code.n_physical;
    let basis = code.generators.basis()?;
    let trivial = Syndrome(BitVec::zeros(code.generators.len()));
    let mut rows = vec![DecodeRow { syndrome: trivial.clone(), correction: PauliString::identity(n), class: Vec::new() }];
    let mut index = HashMap::from([(trivial, 0usize)]);
    let mut failure = None;
    for_each_error(n, 1, |support, letters| {
        if !model.admits(letters[0]) {
            return true;
        }
        let e = PauliString::single(n, support[0], letters[0]);
        let s = syndrome(code, &e).expect("error sized to the code");
        match index.get(&s) {
            Some(&i) => {
                let row: &mut DecodeRow = &mut rows[i];
                if !basis.contains_symplectic(&row.correction.mul_unchecked(&e).symplectic()) {
                    failure = Some(DecoderError::NotCorrectable(Box::new(Ambiguity {
                        syndrome: s,
                        first: row.correction.clone(),
                        second: e,
                    })));
                    return false;
                }
                row.class.push(e);
            }
            None => {
                index.insert(s.clone(), rows.len());
                rows.push(DecodeRow { syndrome: s, correction: e.clone(), class: vec![e] });
            }
        }
        true
    });
    match failure {
        Some(err) => Err(err),
        None => Ok(DecodeTable { model, rows, index }),
    }
}

pub fn decode(table: &DecodeTable, s: &Syndrome) -> Decoded {
    match table.get(s) {
        Some(row) => Decoded::Correction(row.correction.clone()),
        None => Decoded::DetectedOnly,
    }
}

/// Outcome of decoding every single-qubit error of a model and checking the residual.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrectionReport {
    pub errors: usize,
    pub corrected: usize,
    pub failures: Vec<PauliString>,
}

impl CorrectionReport {
    pub fn all_corrected(&self) -> bool {
        self.failures.is_empty() && self.corrected == self.errors
    }
}

/// Decodes every single-qubit error of `model` and checks that correction times error lies in
/// the stabilizer group.
pub fn check_single_qubit_correction(
    code: &StabilizerCode,
    table: &DecodeTable,
    model: ErrorModel,
) -> Result<CorrectionReport, DecoderError> {
    let n = code.n_physical;
    let basis = code.generators.basis()?;
    let mut report = CorrectionReport { errors: 0, corrected: 0, failures: Vec::new() };
    for q in 0..n {
        for letter in Pauli::NON_IDENTITY {
            if !model.admits(letter) {
                continue;
            }
            let e = PauliString::single(n, q, letter);
            report.errors += 1;
            let ok = match decode(table, &syndrome(code, &e)?) {
                Decoded::Correction(c) => basis.contains_symplectic(&c.multiply(&e)?.symplectic()),
                Decoded::DetectedOnly => false,
            };
            if ok {
                report.corrected += 1;
            } else {
                report.failures.push(e);
            }
        }
    }
    Ok(report)
}
