//! Stabilizer codes built from vertex Gauss-law constraints.
//!
//! Code I repeats every link three times: qubit `3l + s` is slot `s` of link `l`. Each link
//! contributes the X-pair checks on slots `(0,1)` and `(1,2)`, and each vertex contributes Z on all
//! qubits of its incident links.
//!
//! Code II places a twelve-qubit carbon block on every dotted vertex. Qubit `12d + 3(p - 1) + c`
//! holds copy `c` of position `p` in `1..=4` on dot `d`. The block's two logical qubits carry the
//! left and right links of the vertex. The third link is implied by parity.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{Boundary, Lattice, LatticeError, LatticeKind, LinkClass, PlaquetteRole};
use crate::pauli::{distance, BitMatrix, BitVec, DistanceBound, GeneratorSet, PauliError, PauliString};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Pauli(#[from] PauliError),
    #[error("invalid dot assignment: uncovered links {uncovered:?}, doubly covered links {doubly_covered:?}")]
    DotAssignment { uncovered: Vec<usize>, doubly_covered: Vec<usize> },
    #[error("no topological logical: {0}")]
    TopologicalObstruction(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("code invariant violated: {0}")]
    Invariant(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CodeFamily {
    Code1,
    Code2,
    VertexBlock,
    FourTwoTwo,
    Carbon,
}

/// Where a physical qubit lives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum QubitSite {
    Link { link: usize, slot: usize },
    Dot { vertex: usize, position: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogicalPair {
    pub x: PauliString,
    pub z: PauliString,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl std::fmt::Display for CodeParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[[{},{},{}]]", self.n, self.k, self.d)
    }
}

/// Links attached to one dotted vertex. `None` marks a link missing at an open boundary; its
/// logical value is pinned to `j = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DotSlots {
    pub vertex: usize,
    pub slot1: Option<usize>,
    pub slot2: Option<usize>,
    pub implied: Option<usize>,
}

impl DotSlots {
    pub fn links(&self) -> impl Iterator<Item = usize> + '_ {
        [self.slot1, self.slot2, self.implied].into_iter().flatten()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DotAssignment {
    pub dotted: Vec<bool>,
    pub dots: Vec<DotSlots>,
}

impl DotAssignment {
    /// Dots every vertex with even `x + y`: bottom vertices at even chain columns, top vertices
    /// at odd ones, and the matching colour class of the brick-wall honeycomb.
    pub fn auto(l: &Lattice) -> Self {
        let dotted = l.vertices.iter().map(|v| (v.x + v.y).rem_euclid(2) == 0).collect();
        Self::from_dotted(l, dotted)
    }

    /// Slot 1 is the X-class link toward `-x`, slot 2 the X-class link toward `+x`, and the
    /// Y-class link is implied.
    pub fn from_dotted(l: &Lattice, dotted: Vec<bool>) -> Self {
        let stars = l.vertex_stars();
        let dots = (0..l.n_vertices())
            .filter(|&v| dotted[v])
            .map(|v| {
                let mut slots = DotSlots { vertex: v, slot1: None, slot2: None, implied: None };
                for &id in &stars[v].links {
                    let link = &l.links[id];
                    match link.class {
                        LinkClass::X if link.v2 == v => slots.slot1 = Some(id),
                        LinkClass::X => slots.slot2 = Some(id),
                        LinkClass::Y => slots.implied = Some(id),
                    }
                }
                slots
            })
            .collect();
        Self { dotted, dots }
    }

    /// Every link must be represented by exactly one dotted vertex.
    pub fn validate(&self, l: &Lattice) -> Result<(), CodeError> {
        let mut cover = vec![0usize; l.n_links()];
        for d in &self.dots {
            for id in d.links() {
                cover[id] += 1;
            }
        }
        let uncovered: Vec<usize> = (0..cover.len()).filter(|&i| cover[i] == 0).collect();
        let doubly_covered: Vec<usize> = (0..cover.len()).filter(|&i| cover[i] > 1).collect();
        if uncovered.is_empty() && doubly_covered.is_empty() {
            Ok(())
        } else {
            Err(CodeError::DotAssignment { uncovered, doubly_covered })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "CodeFile", try_from = "CodeFile")]
pub struct StabilizerCode {
    pub family: CodeFamily,
    pub n_physical: usize,
    pub generators: GeneratorSet,
    pub logical_pairs: Vec<LogicalPair>,
    pub layout: Vec<QubitSite>,
    pub declared: CodeParams,
    pub dots: Option<DotAssignment>,
}

/// On-disk form of a [`StabilizerCode`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodeFile {
    pub family: CodeFamily,
    pub n: usize,
    pub k: usize,
    pub d_claimed: usize,
    pub generators: Vec<PauliString>,
    pub logicals: Vec<LogicalPair>,
    pub layout: Vec<QubitSite>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dots: Option<DotAssignment>,
}

impl From<StabilizerCode> for CodeFile {
    fn from(c: StabilizerCode) -> Self {
        CodeFile {
            family: c.family,
            n: c.n_physical,
            k: c.declared.k,
            d_claimed: c.declared.d,
            generators: c.generators.generators().to_vec(),
            logicals: c.logical_pairs,
            layout: c.layout,
            dots: c.dots,
        }
    }
}

impl TryFrom<CodeFile> for StabilizerCode {
    type Error = CodeError;

    fn try_from(f: CodeFile) -> Result<Self, CodeError> {
        let code = StabilizerCode {
            family: f.family,
            n_physical: f.n,
            generators: GeneratorSet::new(f.n, f.generators)?,
            logical_pairs: f.logicals,
            layout: f.layout,
            declared: CodeParams { n: f.n, k: f.k, d: f.d_claimed },
            dots: f.dots,
        };
        code.check_invariants()?;
        Ok(code)
    }
}

impl StabilizerCode {
    pub fn k(&self) -> usize {
        self.logical_pairs.len()
    }

    pub fn logical_xs(&self) -> impl Iterator<Item = &PauliString> {
        self.logical_pairs.iter().map(|p| &p.x)
    }

    pub fn logical_zs(&self) -> impl Iterator<Item = &PauliString> {
        self.logical_pairs.iter().map(|p| &p.z)
    }

    /// Generators commute and form a valid group, logicals commute with every generator,
    /// `X̄_i` anticommutes exactly with `Z̄_i`, and `n - rank = k = |pairs|`.
    pub fn check_invariants(&self) -> Result<(), CodeError> {
        let gens = &self.generators;
        if gens.n_qubits() != self.n_physical || self.layout.len() != self.n_physical {
            return Err(CodeError::Invariant("qubit count disagrees with generators or layout".into()));
        }
        gens.validate()?;
        let k = self.n_physical - gens.rank();
        if k != self.logical_pairs.len() || k != self.declared.k {
            return Err(CodeError::Invariant(format!(
                "n - rank = {k}, logical pairs = {}, declared k = {}",
                self.logical_pairs.len(),
                self.declared.k
            )));
        }
        for (i, p) in self.logical_pairs.iter().enumerate() {
            for (name, op) in [("X", &p.x), ("Z", &p.z)] {
                if op.n_qubits() != self.n_physical || !op.is_hermitian() {
                    return Err(CodeError::Invariant(format!("logical {name}{i} is malformed")));
                }
                if !gens.commutes_with_all(op) {
                    return Err(CodeError::Invariant(format!("logical {name}{i} anticommutes with a generator")));
                }
            }
            for (j, q) in self.logical_pairs.iter().enumerate() {
                if p.x.symplectic_product(&q.z) != (i == j) {
                    return Err(CodeError::Invariant(format!("X{i} and Z{j} have the wrong commutation")));
                }
                if p.x.symplectic_product(&q.x) || p.z.symplectic_product(&q.z) {
                    return Err(CodeError::Invariant(format!("logicals {i} and {j} of one type anticommute")));
                }
            }
        }
        Ok(())
    }

    fn finish(self) -> Result<Self, CodeError> {
        self.check_invariants()?;
        Ok(self)
    }
}

fn link_qubits(link: usize) -> [usize; 3] {
    [3 * link, 3 * link + 1, 3 * link + 2]
}

/// Z-parity checks of Code I: Z on every qubit of every link at the vertex.
fn vertex_check(l: &Lattice, n: usize, v: usize) -> PauliString {
    let stars = l.vertex_stars();
    PauliString::z_on(n, stars[v].links.iter().flat_map(|&id| link_qubits(id)))
}

/// Greedily keeps candidates that are independent of `base` and of the ones already kept.
fn extend_independent(n: usize, base: &[PauliString], candidates: Vec<PauliString>, limit: usize) -> Vec<PauliString> {
    let mut m = BitMatrix::from_rows(2 * n, base.iter().map(PauliString::symplectic).collect());
    let mut rank = m.rank();
    let mut kept = Vec::new();
    for c in candidates {
        if kept.len() == limit {
            break;
        }
        m.push_row(c.symplectic());
        let r = m.rank();
        if r > rank {
            rank = r;
            kept.push(c);
        } else {
            m = BitMatrix::from_rows(2 * n, base.iter().chain(&kept).map(PauliString::symplectic).collect());
        }
    }
    kept
}

/// Z-type partners for fixed X-type logicals. Candidates are recombined through the inverse
/// of their commutation matrix; missing ones come from solving the commutation constraints.
fn z_partners(
    gens: &GeneratorSet,
    xs: &[PauliString],
    candidates: Vec<Option<PauliString>>,
) -> Result<Vec<PauliString>, CodeError> {
    let n = gens.n_qubits();
    let k = xs.len();
    let solve = |i: usize| {
        let rows: Vec<PauliString> = gens.generators().iter().chain(xs).cloned().collect();
        let mut pattern = vec![false; gens.len()];
        pattern.extend((0..k).map(|j| j == i));
        crate::pauli::solve_commutation(n, &rows, &pattern, true)
            .ok_or_else(|| CodeError::Invariant(format!("no Z-type partner for logical X{i}")))
    };
    let zs: Vec<PauliString> =
        candidates.into_iter().enumerate().map(|(i, c)| c.map_or_else(|| solve(i), Ok)).collect::<Result<_, _>>()?;

    // columns of the commutation matrix, as rows of its transpose
    let at = BitMatrix::from_rows(
        k,
        (0..k).map(|j| BitVec::from_bools(&zs.iter().map(|z| z.symplectic_product(&xs[j])).collect::<Vec<_>>())).collect(),
    );
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let Some(b) = at.solve(&BitVec::from_indices(k, [i])) else {
            return (0..k).map(solve).collect();
        };
        let mut z = PauliString::identity(n);
        for m in b.ones() {
            z.mul_assign_unchecked(&zs[m]);
        }
        out.push(z);
    }
    Ok(out)
}

/// Code I: three qubits per link, X-pair checks per link and Z parity checks per vertex.
pub fn build_code1(l: &Lattice) -> Result<StabilizerCode, CodeError> {
    l.validate().map_err(CodeError::Invariant)?;
    let n = 3 * l.n_links();
    let mut gens = Vec::with_capacity(2 * l.n_links() + l.n_vertices());
    for link in 0..l.n_links() {
        let [a, b, c] = link_qubits(link);
        gens.push(PauliString::x_on(n, [a, b]));
        gens.push(PauliString::x_on(n, [b, c]));
    }
    let n_checks = match l.boundary {
        Boundary::Aperiodic => l.n_vertices(),
        Boundary::Periodic => l.n_vertices() - 1,
    };
    gens.extend((0..n_checks).map(|v| vertex_check(l, n, v)));
    let generators = GeneratorSet::new(n, gens)?;
    let k = n - generators.rank();

    let plaquette_x =
        |p: &crate::lattice::Plaquette| PauliString::x_on(n, p.links.iter().map(|&id| link_qubits(id)[0]));
    let top_role = match l.kind {
        LatticeKind::Chain => PlaquetteRole::Top,
        LatticeKind::Honeycomb => PlaquetteRole::UpperLeft,
    };

    let mut x_candidates: Vec<PauliString> = l.plaquettes.iter().map(plaquette_x).collect();
    let n_plaquette_candidates = x_candidates.len();
    if l.boundary == Boundary::Periodic {
        match l.kind {
            LatticeKind::Chain => x_candidates.push(bottom_flux(l, n)),
            LatticeKind::Honeycomb => x_candidates.extend(
                l.fundamental_cycles().iter().map(|c| PauliString::x_on(n, c.iter().map(|&id| link_qubits(id)[0]))),
            ),
        }
    }
    let xs = extend_independent(n, generators.generators(), x_candidates.clone(), k);
    if xs.len() != k {
        return Err(CodeError::Invariant(format!("found {} independent logical X of {k}", xs.len())));
    }
    let candidates = xs
        .iter()
        .map(|x| {
            let idx = x_candidates.iter().position(|c| c == x).unwrap();
            (idx < n_plaquette_candidates).then(|| {
                let link = l.plaquettes[idx].link_with_role(top_role).unwrap();
                PauliString::z_on(n, link_qubits(link))
            })
        })
        .collect();
    let zs = z_partners(&generators, &xs, candidates)?;
    let logical_pairs = xs.into_iter().zip(zs).map(|(x, z)| LogicalPair { x, z }).collect();
    let layout = (0..n).map(|q| QubitSite::Link { link: q / 3, slot: q % 3 }).collect();
    StabilizerCode {
        family: CodeFamily::Code1,
        n_physical: n,
        generators,
        logical_pairs,
        layout,
        declared: CodeParams { n, k, d: 3 },
        dots: None,
    }
    .finish()
}

/// X on slot 0 of every bottom link of a chain.
fn bottom_flux(l: &Lattice, n: usize) -> PauliString {
    PauliString::x_on(
        n,
        l.plaquettes.iter().map(|p| link_qubits(p.link_with_role(PlaquetteRole::Bottom).unwrap())[0]),
    )
}

/// The electric-flux string `⊗_n X_b(n)` on the bottom links of a Code I chain, returned only if
/// it is a genuine logical: it must commute with every generator and every plaquette logical and
/// lie outside the stabilizer group.
pub fn topological_logical(code: &StabilizerCode, l: &Lattice) -> Result<PauliString, CodeError> {
    if code.family != CodeFamily::Code1 || l.kind != LatticeKind::Chain || code.n_physical != 3 * l.n_links() {
        return Err(CodeError::Unsupported("topological logical is defined for Code I on a chain".into()));
    }
    let n = code.n_physical;
    let flux = bottom_flux(l, n);
    let offending: Vec<usize> =
        (0..l.n_vertices()).filter(|&v| flux.symplectic_product(&vertex_check(l, n, v))).collect();
    if !offending.is_empty() {
        return Err(CodeError::TopologicalObstruction(format!(
            "the bottom flux string anticommutes with the Z checks at vertices {offending:?}"
        )));
    }
    if !code.generators.commutes_with_all(&flux) {
        return Err(CodeError::Invariant("flux string anticommutes with a generator".into()));
    }
    if code.generators.in_group(&flux)? {
        return Err(CodeError::TopologicalObstruction("flux string is a stabilizer".into()));
    }
    for (i, p) in code.logical_pairs.iter().take(l.n_plaquettes()).enumerate() {
        if flux.symplectic_product(&p.x) || flux.symplectic_product(&p.z) {
            return Err(CodeError::Invariant(format!("flux string anticommutes with plaquette logical {i}")));
        }
    }
    Ok(flux)
}

/// Labels of the twelve carbon-block positions.
pub const CARBON_POSITIONS: [&str; 12] = ["1", "1'", "1''", "2", "2'", "2''", "3", "3'", "3''", "4", "4'", "4''"];

fn carbon_qubit(position: usize, copy: usize) -> usize {
    3 * (position - 1) + copy
}

/// The ten carbon-code generators on qubits `offset..offset + 12` of an `n`-qubit register.
fn carbon_generators(n: usize, offset: usize) -> Vec<PauliString> {
    let q = |p: usize, c: usize| offset + carbon_qubit(p, c);
    let mut gens = Vec::with_capacity(10);
    for c in 0..3 {
        gens.push(PauliString::z_on(n, (1..=4).map(|p| q(p, c))));
    }
    for c in 0..3 {
        gens.push(PauliString::x_on(n, (1..=4).map(|p| q(p, c))));
    }
    gens.push(PauliString::z_on(n, [q(1, 0), q(1, 1), q(1, 2), q(2, 0), q(2, 1), q(2, 2)]));
    gens.push(PauliString::z_on(n, [q(2, 0), q(2, 1), q(2, 2), q(3, 0), q(3, 1), q(3, 2)]));
    gens.push(PauliString::x_on(n, [q(1, 0), q(1, 1), q(2, 1), q(2, 2), q(3, 2), q(3, 0)]));
    gens.push(PauliString::x_on(n, [q(2, 0), q(2, 1), q(3, 1), q(3, 2), q(1, 2), q(1, 0)]));
    gens
}

/// Logical pairs of the carbon block: left-link qubit first, right-link qubit second.
fn carbon_logicals(n: usize, offset: usize) -> [LogicalPair; 2] {
    let q = |p: usize, c: usize| offset + carbon_qubit(p, c);
    [
        LogicalPair {
            x: PauliString::x_on(n, [q(3, 0), q(3, 1), q(4, 0), q(4, 1)]),
            z: PauliString::z_on(n, [q(1, 0), q(1, 1), q(2, 0), q(4, 1)]),
        },
        LogicalPair {
            x: PauliString::x_on(n, [q(3, 0), q(3, 2), q(4, 0), q(4, 2)]),
            z: PauliString::z_on(n, [q(1, 1), q(1, 2), q(2, 1), q(4, 2)]),
        },
    ]
}

/// Code II: one carbon block per dotted vertex, with no checks between blocks.
pub fn build_code2(l: &Lattice, dots: Option<DotAssignment>) -> Result<StabilizerCode, CodeError> {
    l.validate().map_err(CodeError::Invariant)?;
    let dots = dots.unwrap_or_else(|| DotAssignment::auto(l));
    dots.validate(l)?;
    let n = 12 * dots.dots.len();
    let mut gens = Vec::with_capacity(10 * dots.dots.len());
    let mut logical_pairs = Vec::with_capacity(2 * dots.dots.len());
    let mut layout = Vec::with_capacity(n);
    for (d, slots) in dots.dots.iter().enumerate() {
        gens.extend(carbon_generators(n, 12 * d));
        logical_pairs.extend(carbon_logicals(n, 12 * d));
        layout.extend(
            CARBON_POSITIONS.iter().map(|p| QubitSite::Dot { vertex: slots.vertex, position: (*p).to_string() }),
        );
    }
    let k = logical_pairs.len();
    StabilizerCode {
        family: CodeFamily::Code2,
        n_physical: n,
        generators: GeneratorSet::new(n, gens)?,
        logical_pairs,
        layout,
        declared: CodeParams { n, k, d: 4 },
        dots: Some(dots),
    }
    .finish()
}

/// The isolated twelve-qubit carbon block `[[12,2,4]]`.
pub fn carbon_code() -> StabilizerCode {
    let n = 12;
    StabilizerCode {
        family: CodeFamily::Carbon,
        n_physical: n,
        generators: GeneratorSet::new(n, carbon_generators(n, 0)).expect("twelve-qubit generators"),
        logical_pairs: carbon_logicals(n, 0).to_vec(),
        layout: CARBON_POSITIONS.iter().map(|p| QubitSite::Dot { vertex: 0, position: (*p).to_string() }).collect(),
        declared: CodeParams { n, k: 2, d: 4 },
        dots: None,
    }
    .finish()
    .expect("carbon code is consistent")
}

/// Code I restricted to one trivalent vertex: nine qubits, six X pairs and one `Z^{⊗9}`.
/// Logical `i` flips link `2i+1` together with link 2 and is read out on link `2i+1`.
pub fn vertex_block() -> StabilizerCode {
    let n = 9;
    let mut gens = Vec::with_capacity(7);
    for link in 0..3 {
        let [a, b, c] = link_qubits(link);
        gens.push(PauliString::x_on(n, [a, b]));
        gens.push(PauliString::x_on(n, [b, c]));
    }
    gens.push(PauliString::z_on(n, 0..9));
    let logical_pairs = vec![
        LogicalPair { x: PauliString::x_on(n, [0, 3]), z: PauliString::z_on(n, link_qubits(0)) },
        LogicalPair { x: PauliString::x_on(n, [3, 6]), z: PauliString::z_on(n, link_qubits(2)) },
    ];
    StabilizerCode {
        family: CodeFamily::VertexBlock,
        n_physical: n,
        generators: GeneratorSet::new(n, gens).expect("nine-qubit generators"),
        logical_pairs,
        layout: (0..n).map(|q| QubitSite::Link { link: q / 3, slot: q % 3 }).collect(),
        declared: CodeParams { n, k: 2, d: 2 },
        dots: None,
    }
    .finish()
    .expect("vertex block is consistent")
}

/// The four-qubit vertex code `[[4,2,2]]` with logicals reading the left and right links.
pub fn four_two_two() -> StabilizerCode {
    let n = 4;
    let gens = vec![PauliString::z_on(n, 0..4), PauliString::x_on(n, 0..4)];
    let logical_pairs = vec![
        LogicalPair { x: PauliString::x_on(n, [0, 1]), z: PauliString::z_on(n, [0, 3]) },
        LogicalPair { x: PauliString::x_on(n, [1, 2]), z: PauliString::z_on(n, [2, 3]) },
    ];
    StabilizerCode {
        family: CodeFamily::FourTwoTwo,
        n_physical: n,
        generators: GeneratorSet::new(n, gens).expect("four-qubit generators"),
        logical_pairs,
        layout: (1..=4).map(|p| QubitSite::Dot { vertex: 0, position: p.to_string() }).collect(),
        declared: CodeParams { n, k: 2, d: 2 },
        dots: None,
    }
    .finish()
    .expect("[[4,2,2]] is consistent")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParamsReport {
    pub family: CodeFamily,
    pub n: usize,
    pub k: usize,
    pub d_claimed: usize,
    /// Outcome of the exhaustive search, when one was requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance: Option<DistanceBound>,
    /// Independent stabilizers in total and by type.
    pub stabs: usize,
    pub x_stabs: usize,
    pub z_stabs: usize,
    pub mixed_stabs: usize,
    pub generators: usize,
    pub layout: String,
    pub notes: Vec<String>,
}

pub fn code_report(code: &StabilizerCode, distance_search: Option<usize>) -> Result<ParamsReport, CodeError> {
    let n = code.n_physical;
    let rank_of = |pred: &dyn Fn(&PauliString) -> bool| {
        let rows: Vec<PauliString> = code.generators.generators().iter().filter(|g| pred(g)).cloned().collect();
        GeneratorSet::new(n, rows).map(|s| s.rank())
    };
    let x_stabs = rank_of(&|g| g.is_x_type())?;
    let z_stabs = rank_of(&|g| g.is_z_type())?;
    let stabs = code.generators.rank();
    let distance = match distance_search {
        Some(w) => Some(distance(&code.generators, w)?.bound),
        None => None,
    };
    let (layout, notes) = match code.family {
        CodeFamily::Code1 => (format!("3 qubits per link, {} links", n / 3), Vec::new()),
        CodeFamily::Code2 => (
            format!("12 qubits per dotted vertex, {} dotted vertices", n / 12),
            vec![
                "distance is per dotted vertex".to_string(),
                "Gauss-law violations at undotted vertices are logical directions and go undetected".to_string(),
            ],
        ),
        CodeFamily::VertexBlock => ("3 qubits per link, one trivalent vertex".to_string(), Vec::new()),
        CodeFamily::FourTwoTwo => ("4 qubits, one vertex".to_string(), Vec::new()),
        CodeFamily::Carbon => ("12 qubits, one vertex".to_string(), Vec::new()),
    };
    Ok(ParamsReport {
        family: code.family,
        n,
        k: code.k(),
        d_claimed: code.declared.d,
        distance,
        stabs,
        x_stabs,
        z_stabs,
        mixed_stabs: stabs - x_stabs - z_stabs,
        generators: code.generators.len(),
        layout,
        notes,
    })
}
