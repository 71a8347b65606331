use std::sync::OnceLock;

use crate::code::{DotAssignment, DotSlots};
use crate::lattice::{Boundary, Lattice, LatticeKind, PlaquetteRole};

use super::operator::{Couplings, OperatorMatrix};
use super::sixj::{sixj_exact, SixJInput, SqrtRational};
use super::Su2Error;

/// Largest number of links (or logical qubits) a dense basis may span.
pub const MAX_BASIS_BITS: usize = 16;

fn bit(label: u64, i: usize) -> u64 {
    (label >> i) & 1
}

/// Per-corner factor of the plaquette matrix element: the phase as a power of `i` and the
/// magnitude `√((2j+1)(2J+1)) · {j_e j_α j_β; ½ J_β J_α}`.
#[derive(Debug, Clone)]
struct CornerFactor {
    i_power: u32,
    value: SqrtRational,
}

/// All 32 corners for link values in `{0, ½}`, indexed by `je | ja<<1 | jb<<2 | Ja<<3 | Jb<<4`.
fn corner_table() -> &'static [CornerFactor] {
    static TABLE: OnceLock<Vec<CornerFactor>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..32u32)
            .map(|key| {
                let [je, ja, jb, big_a, big_b] = [0, 1, 2, 3, 4].map(|s| i64::from((key >> s) & 1));
                let symbol = SixJInput::from_twice([je, ja, jb, 1, big_b, big_a]).expect("non-negative");
                let dims = SqrtRational {
                    sign: 1,
                    square: num_rational::BigRational::from_integer(((ja + 1) * (big_a + 1)).into()),
                };
                // (−1)^{j+J+j_e} with half-integer exponent written as i^{2(j+J+j_e)}
                CornerFactor { i_power: (ja + big_a + je) as u32, value: dims.mul(&sixj_exact(&symbol)) }
            })
            .collect()
    })
}

/// Cycle data of one plaquette: its links and the external link at each corner.
#[derive(Debug, Clone)]
struct PlaquetteGeometry {
    links: Vec<usize>,
    /// `externals[i]` meets the corner between `links[i]` and `links[i + 1]`.
    externals: Vec<Option<usize>>,
    mask: u64,
}

fn geometry(l: &Lattice) -> Vec<PlaquetteGeometry> {
    let stars = l.vertex_stars();
    l.plaquettes
        .iter()
        .map(|p| {
            let m = p.links.len();
            let externals = (0..m)
                .map(|i| {
                    let v = l.corner(p, i);
                    let (a, b) = (p.links[i], p.links[(i + 1) % m]);
                    stars[v].links.iter().copied().find(|&id| id != a && id != b)
                })
                .collect();
            let mask = p.links.iter().fold(0u64, |acc, &id| acc | 1 << id);
            PlaquetteGeometry { links: p.links.clone(), externals, mask }
        })
        .collect()
}

fn element(g: &PlaquetteGeometry, bra: u64, ket: u64) -> Result<SqrtRational, Su2Error> {
    if (bra ^ ket) & !g.mask != 0 {
        return Ok(SqrtRational::zero());
    }
    let table = corner_table();
    let m = g.links.len();
    let mut i_power = 0;
    let mut value = SqrtRational::one();
    for i in 0..m {
        let (a, b) = (g.links[i], g.links[(i + 1) % m]);
        let je = g.externals[i].map_or(0, |e| bit(ket, e));
        let key = je | bit(ket, a) << 1 | bit(ket, b) << 2 | bit(bra, a) << 3 | bit(bra, b) << 4;
        let f = &table[key as usize];
        i_power += f.i_power;
        value = value.mul(&f.value);
        if value.is_zero() {
            return Ok(value);
        }
    }
    if i_power % 2 == 1 {
        return Err(Su2Error::NotReal { bra, ket });
    }
    if i_power % 4 == 2 {
        value.sign = -value.sign;
    }
    Ok(value)
}

/// Exact `⟨bra|□(p)|ket⟩`. Link `l` is excited (`j = ½`) iff bit `l` of the label is set.
pub fn plaquette_element_exact(l: &Lattice, p: usize, bra: u64, ket: u64) -> Result<SqrtRational, Su2Error> {
    let g = geometry(l);
    element(&g[p], bra, ket)
}

pub fn plaquette_element(l: &Lattice, p: usize, bra: u64, ket: u64) -> Result<f64, Su2Error> {
    plaquette_element_exact(l, p, bra, ket).map(|v| v.to_f64())
}

fn check_bits(bits: usize) -> Result<(), Su2Error> {
    if bits > MAX_BASIS_BITS {
        Err(Su2Error::TooLarge { bits, max: MAX_BASIS_BITS })
    } else {
        Ok(())
    }
}

/// Truncated Kogut-Susskind Hamiltonian on the full electric basis, with basis label `b` at
/// index `b`.
pub fn build_ks_hamiltonian(l: &Lattice, c: Couplings) -> Result<OperatorMatrix, Su2Error> {
    let n_links = l.n_links();
    check_bits(n_links)?;
    let geo = geometry(l);
    let dim = 1u64 << n_links;
    let mut h = OperatorMatrix::new((0..dim).collect(), c);
    for ket in 0..dim {
        h.add(ket as usize, ket as usize, c.link_energy() * f64::from(ket.count_ones()));
        for g in &geo {
            let bra = ket ^ g.mask;
            let v = element(g, bra, ket)?.to_f64();
            h.add(bra as usize, ket as usize, -c.magnetic() * v);
        }
    }
    Ok(h)
}

/// Gauss-law parity mask of each vertex.
fn vertex_masks(l: &Lattice) -> Vec<u64> {
    l.vertex_stars().iter().map(|s| s.links.iter().fold(0u64, |acc, &id| acc | 1 << id)).collect()
}

pub fn is_physical(masks: &[u64], label: u64) -> bool {
    masks.iter().all(|m| (label & m).count_ones().is_multiple_of(2))
}

/// Restriction to states with an even number of excited links at every vertex.
pub fn gauss_project(l: &Lattice, h: &OperatorMatrix) -> OperatorMatrix {
    let masks = vertex_masks(l);
    h.restrict(|b| is_physical(&masks, b))
}

/// Electric flux winding of a periodic-chain state: bottom XOR top excitation of plaquette 0.
pub fn chain_winding(l: &Lattice, label: u64) -> Result<u8, Su2Error> {
    if l.kind != LatticeKind::Chain || l.boundary != Boundary::Periodic {
        return Err(Su2Error::Unsupported("winding sectors exist on periodic chains only".into()));
    }
    let p = &l.plaquettes[0];
    let bottom = p.link_with_role(PlaquetteRole::Bottom).unwrap();
    let top = p.link_with_role(PlaquetteRole::Top).unwrap();
    Ok((bit(label, bottom) ^ bit(label, top)) as u8)
}

/// The physical sector of a periodic chain split by winding `0` and `1`.
pub fn split_by_winding(l: &Lattice, physical: &OperatorMatrix) -> Result<[OperatorMatrix; 2], Su2Error> {
    chain_winding(l, 0)?;
    let w = |b: u64| chain_winding(l, b).unwrap();
    Ok([physical.restrict(|b| w(b) == 0), physical.restrict(|b| w(b) == 1)])
}

/// Plaquette-occupation Hamiltonian of Code I: bit `n` of a label is `1` iff `Z̄(n) = −1`.
/// Open chains take `Z̄(−1) = Z̄(N) = 1`; periodic chains wrap.
pub fn build_code1_logical_hamiltonian(n: usize, boundary: Boundary, c: Couplings) -> Result<OperatorMatrix, Su2Error> {
    check_bits(n)?;
    if n == 0 {
        return Err(Su2Error::Unsupported("at least one plaquette is needed".into()));
    }
    let periodic = boundary == Boundary::Periodic;
    let occ = |label: u64, m: isize| -> u64 {
        if periodic {
            bit(label, m.rem_euclid(n as isize) as usize)
        } else if m < 0 || m >= n as isize {
            0
        } else {
            bit(label, m as usize)
        }
    };
    // (1 + 3Z̄)/4: 1 when empty, −1/2 when excited
    let f = |o: u64| if o == 1 { -0.5 } else { 1.0 };
    let dim = 1u64 << n;
    let mut h = OperatorMatrix::new((0..dim).collect(), c);
    for ket in 0..dim {
        let mut diag = 0.0;
        for m in 0..n as isize {
            diag += 1.5 * c.g2 * occ(ket, m) as f64;
            diag -= 0.75 * c.g2 * (occ(ket, m) * occ(ket, m + 1)) as f64;
            let bra = ket ^ (1 << m);
            h.add(bra as usize, ket as usize, -c.magnetic() * f(occ(ket, m - 1)) * f(occ(ket, m + 1)));
        }
        h.add(ket as usize, ket as usize, diag);
    }
    Ok(h)
}

/// Code I on a periodic chain in the sector carrying one unit of winding flux. With the flux on
/// the bottom links as reference, plaquette occupation toggles bottom and top together, so the
/// electric term counts `N` plus the occupied-boundary verticals and every plaquette coupling
/// is the constant `+1/(a²g²)`.
pub fn build_code1_flux_hamiltonian(n: usize, c: Couplings) -> Result<OperatorMatrix, Su2Error> {
    check_bits(n)?;
    if n < 2 {
        return Err(Su2Error::Unsupported("periodic chains need at least two plaquettes".into()));
    }
    let dim = 1u64 << n;
    let mut h = OperatorMatrix::new((0..dim).collect(), c);
    for ket in 0..dim {
        let verticals: u64 = (0..n).map(|m| bit(ket, m) ^ bit(ket, (m + n - 1) % n)).sum();
        h.add(ket as usize, ket as usize, c.link_energy() * (n as u64 + verticals) as f64);
        for m in 0..n {
            h.add((ket ^ (1 << m)) as usize, ket as usize, c.magnetic() / 2.0);
        }
    }
    Ok(h)
}

/// Which logical value a link carries under a dot assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Owner {
    Slot1(usize),
    Slot2(usize),
    Implied(usize),
}

fn owners(l: &Lattice, dots: &DotAssignment) -> Vec<Owner> {
    let mut out = vec![Owner::Implied(usize::MAX); l.n_links()];
    for (d, s) in dots.dots.iter().enumerate() {
        if let Some(id) = s.slot1 {
            out[id] = Owner::Slot1(d);
        }
        if let Some(id) = s.slot2 {
            out[id] = Owner::Slot2(d);
        }
        if let Some(id) = s.implied {
            out[id] = Owner::Implied(d);
        }
    }
    out
}

fn link_value(owner: Owner, label: u64) -> u64 {
    match owner {
        Owner::Slot1(d) => bit(label, 2 * d),
        Owner::Slot2(d) => bit(label, 2 * d + 1),
        Owner::Implied(d) => bit(label, 2 * d) ^ bit(label, 2 * d + 1),
    }
}

/// Link configuration (as a Kogut-Susskind basis label) encoded by a Code II logical label,
/// where bits `2d` and `2d + 1` hold the left and right link of dot `d`.
pub fn code2_link_label(l: &Lattice, dots: &DotAssignment, label: u64) -> u64 {
    owners(l, dots).iter().enumerate().fold(0u64, |acc, (id, &o)| acc | link_value(o, label) << id)
}

/// Physical Code II logical states: boundary slots at `j = 0`, a dot without its implied link
/// has equal left and right values, and every undotted vertex has even parity.
pub fn code2_is_physical(l: &Lattice, dots: &DotAssignment, label: u64) -> bool {
    let pinned = dots.dots.iter().enumerate().all(|(d, s): (usize, &DotSlots)| {
        (s.slot1.is_some() || bit(label, 2 * d) == 0)
            && (s.slot2.is_some() || bit(label, 2 * d + 1) == 0)
            && (s.implied.is_some() || bit(label, 2 * d) == bit(label, 2 * d + 1))
    });
    if !pinned {
        return false;
    }
    let links = code2_link_label(l, dots, label);
    let masks = vertex_masks(l);
    (0..l.n_vertices()).filter(|&v| !dots.dotted[v]).all(|v| (links & masks[v]).count_ones().is_multiple_of(2))
}

/// `M̄` on one external link: 1 when empty, `1/√2` when excited.
fn m_bar(value: u64) -> f64 {
    if value == 1 {
        std::f64::consts::FRAC_1_SQRT_2
    } else {
        1.0
    }
}

/// Code II logical Hamiltonian: `(3g²/16)(3 − Z̄₁ − Z̄₂ − Z̄₁Z̄₂)` per dot plus, per plaquette,
/// `−2/(a²g²)` times the product of `M̄` over its external links and the logical X flips of the
/// left and right links it contains. The same electric prefactor serves chains and honeycombs
/// since every dot owns three links.
pub fn build_code2_logical_hamiltonian(
    l: &Lattice,
    dots: &DotAssignment,
    c: Couplings,
) -> Result<OperatorMatrix, Su2Error> {
    dots.validate(l)?;
    let n_bits = 2 * dots.dots.len();
    check_bits(n_bits)?;
    let own = owners(l, dots);
    let geo = geometry(l);
    let mut flips = Vec::with_capacity(geo.len());
    for (p, g) in geo.iter().enumerate() {
        let mut mask = 0u64;
        let mut implied = vec![false; dots.dots.len()];
        for &id in &g.links {
            match own[id] {
                Owner::Slot1(d) => mask ^= 1 << (2 * d),
                Owner::Slot2(d) => mask ^= 1 << (2 * d + 1),
                Owner::Implied(d) => implied[d] = true,
            }
        }
        for (d, &imp) in implied.iter().enumerate() {
            if imp != (bit(mask, 2 * d) ^ bit(mask, 2 * d + 1) == 1) {
                return Err(Su2Error::Unsupported(format!("plaquette {p} meets dot {d} inconsistently")));
            }
        }
        flips.push(mask);
    }
    let prefactor = 3.0 * c.g2 / 16.0;
    let dim = 1u64 << n_bits;
    let mut h = OperatorMatrix::new((0..dim).collect(), c);
    h.meta.insert("electric_prefactor_over_g2".into(), 3.0 / 16.0);
    for ket in 0..dim {
        let diag: f64 = (0..dots.dots.len())
            .map(|d| {
                let z1 = 1.0 - 2.0 * bit(ket, 2 * d) as f64;
                let z2 = 1.0 - 2.0 * bit(ket, 2 * d + 1) as f64;
                prefactor * (3.0 - z1 - z2 - z1 * z2)
            })
            .sum();
        h.add(ket as usize, ket as usize, diag);
        for (g, &mask) in geo.iter().zip(&flips) {
            let weight: f64 = g.externals.iter().flatten().map(|&e| m_bar(link_value(own[e], ket))).product();
            h.add((ket ^ mask) as usize, ket as usize, -c.magnetic() * weight);
        }
    }
    Ok(h)
}

/// Restriction of a Code II logical Hamiltonian to its physical states.
pub fn code2_physical_subsector(l: &Lattice, dots: &DotAssignment, h: &OperatorMatrix) -> OperatorMatrix {
    h.restrict(|b| code2_is_physical(l, dots, b))
}

/// Number of nonzero entries coupling a physical and an unphysical Code II state.
pub fn code2_sector_mixing(l: &Lattice, dots: &DotAssignment, h: &OperatorMatrix) -> usize {
    let phys: Vec<bool> = h.basis.iter().map(|&b| code2_is_physical(l, dots, b)).collect();
    h.entries().filter(|&(i, j, _)| phys[i] != phys[j]).count()
}
