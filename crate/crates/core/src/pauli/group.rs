use serde::{Deserialize, Serialize};

use super::gf2::{BitMatrix, BitVec};
use super::string::{Phase, PauliString};
use super::PauliError;

/// An ordered list of Pauli generators on a fixed number of qubits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    n_qubits: usize,
    generators: Vec<PauliString>,
}

/// Symplectic check matrix in `(x-block | z-block)` convention, one row per generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckMatrix {
    n_qubits: usize,
    rows: BitMatrix,
}

/// Outcome of a stabilizer-group membership query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    /// Not a product of generators, even up to phase.
    Outside,
    /// `p = sign · (product of generators)` with `sign` in {+1, -1}.
    Inside { sign: i8 },
    /// The symplectic part is in the group but the phase is ±i.
    NonHermitian,
}

impl Membership {
    pub fn is_inside(self) -> bool {
        matches!(self, Membership::Inside { .. })
    }
}

/// Reduced basis of the group generated by a [`GeneratorSet`], with exact phases.
#[derive(Clone, Debug)]
pub struct GroupBasis {
    n_qubits: usize,
    /// `(pivot column in the symplectic vector, reduced element)`.
    rows: Vec<(usize, PauliString)>,
}

/// Gottesman standard form of a stabilizer set together with the logical operators read off it.
#[derive(Clone, Debug)]
pub struct StandardForm {
    /// Reduced check matrix in permuted qubit order.
    pub check_matrix: CheckMatrix,
    /// `qubit_order[i]` is the original qubit placed in column `i`.
    pub qubit_order: Vec<usize>,
    /// Rank of the X block.
    pub x_rank: usize,
    /// Rank of the remaining Z block.
    pub z_rank: usize,
    pub logical_xs: Vec<PauliString>,
    pub logical_zs: Vec<PauliString>,
}

impl GeneratorSet {
    pub fn new(n_qubits: usize, generators: Vec<PauliString>) -> Result<Self, PauliError> {
        if let Some(bad) = generators.iter().find(|g| g.n_qubits() != n_qubits) {
            return Err(PauliError::DimensionMismatch { left: n_qubits, right: bad.n_qubits() });
        }
        Ok(Self { n_qubits, generators })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn generators(&self) -> &[PauliString] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn check_matrix(&self) -> CheckMatrix {
        CheckMatrix::from_paulis(self.n_qubits, &self.generators)
    }

    pub fn rank(&self) -> usize {
        self.check_matrix().rank()
    }

    /// Checks that the set generates a valid stabilizer group: Hermitian, pairwise commuting,
    /// and not containing `-I`.
    pub fn validate(&self) -> Result<(), PauliError> {
        for (i, g) in self.generators.iter().enumerate() {
            if !g.is_hermitian() {
                return Err(PauliError::InvalidStabilizer(format!("generator {i} ({g}) is not Hermitian")));
            }
        }
        for i in 0..self.generators.len() {
            for j in i + 1..self.generators.len() {
                if self.generators[i].symplectic_product(&self.generators[j]) {
                    return Err(PauliError::InvalidStabilizer(format!(
                        "generators {i} ({}) and {j} ({}) anticommute",
                        self.generators[i], self.generators[j]
                    )));
                }
            }
        }
        GroupBasis::build(self).map(|_| ())
    }

    pub fn basis(&self) -> Result<GroupBasis, PauliError> {
        GroupBasis::build(self)
    }

    /// Membership of `p` in the generated group (phase reported, not required to match).
    pub fn membership(&self, p: &PauliString) -> Result<Membership, PauliError> {
        if p.n_qubits() != self.n_qubits {
            return Err(PauliError::DimensionMismatch { left: self.n_qubits, right: p.n_qubits() });
        }
        Ok(self.basis()?.membership(p))
    }

    pub fn in_group(&self, p: &PauliString) -> Result<bool, PauliError> {
        Ok(self.membership(p)?.is_inside())
    }

    /// Whether `p` commutes with every generator.
    pub fn commutes_with_all(&self, p: &PauliString) -> bool {
        self.generators.iter().all(|g| !g.symplectic_product(p))
    }

    /// Gottesman standard form and the `k = n - rank` logical pairs it determines.
    pub fn standard_form(&self) -> Result<StandardForm, PauliError> {
        self.validate()?;
        standard_form(self)
    }
}

impl GroupBasis {
    fn build(set: &GeneratorSet) -> Result<Self, PauliError> {
        let n = set.n_qubits;
        let mut pending: Vec<PauliString> = set.generators.clone();
        let mut rows: Vec<(usize, PauliString)> = Vec::new();
        for col in 0..2 * n {
            let has = |p: &PauliString| if col < n { p.x_bits().get(col) } else { p.z_bits().get(col - n) };
            let Some(idx) = pending.iter().position(has) else {
                continue;
            };
            let pivot = pending.swap_remove(idx);
            for p in pending.iter_mut() {
                if has(p) {
                    *p = pivot.mul_unchecked(p);
                }
            }
            for (_, r) in rows.iter_mut() {
                if has(r) {
                    *r = pivot.mul_unchecked(r);
                }
            }
            rows.push((col, pivot));
        }
        // Everything left reduced to a multiple of the identity.
        for p in &pending {
            debug_assert!(p.is_identity());
            if p.phase() != Phase::PLUS_ONE {
                return Err(PauliError::InvalidStabilizer(format!(
                    "the generated group contains {}I",
                    p.phase().prefix()
                )));
            }
        }
        Ok(Self { n_qubits: n, rows })
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn membership(&self, p: &PauliString) -> Membership {
        let n = self.n_qubits;
        let mut acc = PauliString::identity(n);
        let mut rest = p.symplectic();
        for (col, row) in &self.rows {
            if rest.get(*col) {
                acc = acc.mul_unchecked(row);
                rest.xor_assign(&row.symplectic());
            }
        }
        if !rest.is_zero() {
            return Membership::Outside;
        }
        // p = i^d · acc
        let d = (p.phase().exponent() as i64 - acc.phase().exponent() as i64).rem_euclid(4);
        match d {
            0 => Membership::Inside { sign: 1 },
            2 => Membership::Inside { sign: -1 },
            _ => Membership::NonHermitian,
        }
    }

    /// Membership test on a bare symplectic vector (phase ignored).
    pub fn contains_symplectic(&self, v: &BitVec) -> bool {
        let mut rest = v.clone();
        for (col, row) in &self.rows {
            if rest.get(*col) {
                rest.xor_assign(&row.symplectic());
            }
        }
        rest.is_zero()
    }
}

impl CheckMatrix {
    pub fn from_paulis(n_qubits: usize, paulis: &[PauliString]) -> Self {
        let rows = paulis.iter().map(PauliString::symplectic).collect();
        Self { n_qubits, rows: BitMatrix::from_rows(2 * n_qubits, rows) }
    }

    pub fn from_blocks(x_block: &[Vec<u8>], z_block: &[Vec<u8>]) -> Result<Self, PauliError> {
        if x_block.len() != z_block.len() {
            return Err(PauliError::Parse("x_block and z_block have different row counts".into()));
        }
        let n = x_block.first().map_or(0, Vec::len);
        let mut rows = Vec::new();
        for (xr, zr) in x_block.iter().zip(z_block) {
            if xr.len() != n || zr.len() != n {
                return Err(PauliError::Parse("ragged check matrix".into()));
            }
            let bits: Vec<bool> = xr.iter().chain(zr).map(|&b| b != 0).collect();
            rows.push(BitVec::from_bools(&bits));
        }
        Ok(Self { n_qubits: n, rows: BitMatrix::from_rows(2 * n, rows) })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn n_rows(&self) -> usize {
        self.rows.n_rows()
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.rows.rank()
    }

    fn block(&self, offset: usize) -> Vec<Vec<u8>> {
        self.rows
            .rows()
            .iter()
            .map(|r| (0..self.n_qubits).map(|c| r.get(offset + c) as u8).collect())
            .collect()
    }

    pub fn x_block(&self) -> Vec<Vec<u8>> {
        self.block(0)
    }

    pub fn z_block(&self) -> Vec<Vec<u8>> {
        self.block(self.n_qubits)
    }

    /// Symplectic inner product of rows `a` and `b`.
    pub fn row_product(&self, a: usize, b: usize) -> bool {
        let n = self.n_qubits;
        let (ra, rb) = (self.rows.row(a), self.rows.row(b));
        (ra.slice(0, n).and_count(&rb.slice(n, 2 * n)) + ra.slice(n, 2 * n).and_count(&rb.slice(0, n))) % 2 == 1
    }
}

#[derive(Serialize, Deserialize)]
struct CheckMatrixJson {
    x_block: Vec<Vec<u8>>,
    z_block: Vec<Vec<u8>>,
}

impl Serialize for CheckMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CheckMatrixJson { x_block: self.x_block(), z_block: self.z_block() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CheckMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = CheckMatrixJson::deserialize(deserializer)?;
        CheckMatrix::from_blocks(&raw.x_block, &raw.z_block).map_err(serde::de::Error::custom)
    }
}

/// GF(2) rank of a check matrix.
pub fn gf2_rank(m: &CheckMatrix) -> usize {
    m.rank()
}

fn swap_qubits(rows: &mut [PauliString], a: usize, b: usize) {
    if a == b {
        return;
    }
    for r in rows.iter_mut() {
        let (la, lb) = (r.letter(a), r.letter(b));
        r.set(a, lb);
        r.set(b, la);
    }
}

fn standard_form(set: &GeneratorSet) -> Result<StandardForm, PauliError> {
    let n = set.n_qubits;
    // Keep an independent subset of the generators, in their original order.
    let mut rows: Vec<PauliString> = Vec::new();
    let mut seen = BitMatrix::zeros(0, 2 * n);
    for g in &set.generators {
        seen.push_row(g.symplectic());
        if seen.rank() == rows.len() + 1 {
            rows.push(g.clone());
        } else {
            seen = BitMatrix::from_rows(2 * n, rows.iter().map(PauliString::symplectic).collect());
        }
    }
    let m = rows.len();
    let mut order: Vec<usize> = (0..n).collect();

    // X block: bring it to [I A].
    let mut r = 0;
    while r < m {
        let found = (r..n).find_map(|c| (r..m).find(|&i| rows[i].x_bits().get(c)).map(|i| (i, c)));
        let Some((i, c)) = found else { break };
        rows.swap(r, i);
        swap_qubits(&mut rows, r, c);
        order.swap(r, c);
        let pivot = rows[r].clone();
        for (j, row) in rows.iter_mut().enumerate() {
            if j != r && row.x_bits().get(r) {
                *row = pivot.mul_unchecked(row);
            }
        }
        r += 1;
    }

    // Remaining rows are Z-type; bring their Z block to [D I E].
    let mut s = 0;
    while r + s < m {
        let p = r + s;
        let found = (p..n).find_map(|c| (p..m).find(|&i| rows[i].z_bits().get(c)).map(|i| (i, c)));
        let Some((i, c)) = found else { break };
        rows.swap(p, i);
        swap_qubits(&mut rows, p, c);
        order.swap(p, c);
        let pivot = rows[p].clone();
        for (j, row) in rows.iter_mut().enumerate() {
            if j != p && row.z_bits().get(p) {
                *row = pivot.mul_unchecked(row);
            }
        }
        s += 1;
    }
    if r + s != m {
        return Err(PauliError::InvalidStabilizer("dependent generators survived reduction".into()));
    }

    let k = n - r - s;
    let mut logical_xs = Vec::with_capacity(k);
    let mut logical_zs = Vec::with_capacity(k);
    for i in 0..k {
        let col = r + s + i;
        let mut x = BitVec::zeros(n);
        let mut z = BitVec::zeros(n);
        x.set(col, true);
        for j in 0..s {
            // E^T
            if rows[r + j].z_bits().get(col) {
                x.set(r + j, true);
            }
        }
        for (j, row) in rows.iter().enumerate().take(r) {
            // C^T
            if row.z_bits().get(col) {
                z.set(j, true);
            }
        }
        logical_xs.push(PauliString::from_bits(x, z, Phase::PLUS_ONE));

        let mut z = BitVec::zeros(n);
        z.set(col, true);
        for (j, row) in rows.iter().enumerate().take(r) {
            // A2^T
            if row.x_bits().get(col) {
                z.set(j, true);
            }
        }
        logical_zs.push(PauliString::from_bits(BitVec::zeros(n), z, Phase::PLUS_ONE));
    }

    let check_matrix = CheckMatrix::from_paulis(n, &rows);
    let unpermute = |p: &PauliString| {
        let mut out = PauliString::identity(n);
        for (pos, &orig) in order.iter().enumerate() {
            out.set(orig, p.letter(pos));
        }
        out
    };
    let logical_xs: Vec<PauliString> = logical_xs.iter().map(unpermute).collect();
    let logical_zs: Vec<PauliString> = logical_zs.iter().map(unpermute).collect();
    Ok(StandardForm { check_matrix, qubit_order: order, x_rank: r, z_rank: s, logical_xs, logical_zs })
}

/// Finds a Hermitian Pauli `v` with prescribed commutation against each constraint row:
/// `v` anticommutes with `rows[i]` iff `anticommute[i]`. With `z_only`, `v` is restricted to
/// Z-type operators. Free variables are set to zero, so the answer is deterministic.
pub fn solve_commutation(
    n_qubits: usize,
    rows: &[PauliString],
    anticommute: &[bool],
    z_only: bool,
) -> Option<PauliString> {
    assert_eq!(rows.len(), anticommute.len());
    if z_only {
        let m = BitMatrix::from_rows(n_qubits, rows.iter().map(|r| r.x_bits().clone()).collect());
        let z = m.solve(&BitVec::from_bools(anticommute))?;
        Some(PauliString::from_bits(BitVec::zeros(n_qubits), z, Phase::PLUS_ONE))
    } else {
        // <row, v> = row.x · v.z + row.z · v.x, so the coefficient vector is (row.z ‖ row.x).
        let m = BitMatrix::from_rows(
            2 * n_qubits,
            rows.iter().map(|r| r.z_bits().concat(r.x_bits())).collect(),
        );
        let v = m.solve(&BitVec::from_bools(anticommute))?;
        Some(PauliString::from_symplectic(&v))
    }
}
