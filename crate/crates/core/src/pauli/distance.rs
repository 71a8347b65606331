use serde::Serialize;

use super::gf2::BitVec;
use super::group::GeneratorSet;
use super::string::{Pauli, PauliString};
use super::PauliError;

/// Result of an exhaustive distance search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DistanceBound {
    /// A nontrivial logical of this weight exists and none lighter does.
    Exact { distance: usize },
    /// No nontrivial logical of weight up to `checked` exists.
    GreaterThan { checked: usize },
}

impl DistanceBound {
    pub fn exact(&self) -> Option<usize> {
        match self {
            DistanceBound::Exact { distance } => Some(*distance),
            DistanceBound::GreaterThan { .. } => None,
        }
    }

    /// Lower bound on the distance implied by the search.
    pub fn lower_bound(&self) -> usize {
        match self {
            DistanceBound::Exact { distance } => *distance,
            DistanceBound::GreaterThan { checked } => checked + 1,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DistanceReport {
    pub bound: DistanceBound,
    /// Number of errors of weight strictly below the returned distance (or up to the bound),
    /// all of which were checked.
    pub errors_below: u64,
    /// Total number of errors examined, including the partial last weight.
    pub examined: u64,
    /// Lightest nontrivial logical operator found, if any.
    pub witness: Option<PauliString>,
}

/// Per-qubit syndromes of X, Y and Z, used to evaluate commutation of an error with all
/// generators as an XOR of precomputed vectors.
struct SyndromeTable {
    single: Vec<[BitVec; 3]>,
}

impl SyndromeTable {
    fn new(set: &GeneratorSet) -> Self {
        let n = set.n_qubits();
        let single = (0..n)
            .map(|q| {
                Pauli::NON_IDENTITY.map(|l| {
                    let e = PauliString::single(n, q, l);
                    BitVec::from_bools(&set.generators().iter().map(|g| g.symplectic_product(&e)).collect::<Vec<_>>())
                })
            })
            .collect();
        Self { single }
    }
}

/// Calls `visit` on every Pauli of exactly `weight` on `n` qubits, ordered lexicographically by
/// support and then by letters (X < Y < Z, first qubit most significant). Stops early when
/// `visit` returns `false`.
pub fn for_each_error(n: usize, weight: usize, mut visit: impl FnMut(&[usize], &[Pauli]) -> bool) {
    if weight > n {
        return;
    }
    if weight == 0 {
        visit(&[], &[]);
        return;
    }
    let mut support: Vec<usize> = (0..weight).collect();
    let mut letters = vec![0usize; weight];
    let mut buf = vec![Pauli::X; weight];
    loop {
        letters.iter_mut().for_each(|l| *l = 0);
        loop {
            for (b, &l) in buf.iter_mut().zip(&letters) {
                *b = Pauli::NON_IDENTITY[l];
            }
            if !visit(&support, &buf) {
                return;
            }
            // odometer over letters, last position fastest
            let mut exhausted = true;
            for l in letters.iter_mut().rev() {
                *l += 1;
                if *l < 3 {
                    exhausted = false;
                    break;
                }
                *l = 0;
            }
            if exhausted {
                break;
            }
        }
        // next combination
        let mut i = weight;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if support[i] < n - weight + i {
                support[i] += 1;
                for j in i + 1..weight {
                    support[j] = support[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Minimum weight of a Pauli that commutes with every generator but is not in the group,
/// by exhaustive enumeration up to `max_weight`.
pub fn distance(set: &GeneratorSet, max_weight: usize) -> Result<DistanceReport, PauliError> {
    assert!(max_weight >= 1, "max_weight must be at least 1");
    let basis = set.basis()?;
    let n = set.n_qubits();
    let table = SyndromeTable::new(set);
    let m = set.len();
    let mut examined = 0u64;
    let mut errors_below = 0u64;
    for w in 1..=max_weight.min(n) {
        let mut witness = None;
        let mut count_this_weight = 0u64;
        for_each_error(n, w, |support, letters| {
            count_this_weight += 1;
            let mut syn = BitVec::zeros(m);
            for (&q, &l) in support.iter().zip(letters) {
                syn.xor_assign(&table.single[q][l as usize - 1]);
            }
            if syn.is_zero() {
                let mut e = PauliString::identity(n);
                for (&q, &l) in support.iter().zip(letters) {
                    e.set(q, l);
                }
                if !basis.contains_symplectic(&e.symplectic()) {
                    witness = Some(e);
                    return false;
                }
            }
            true
        });
        examined += count_this_weight;
        if let Some(witness) = witness {
            return Ok(DistanceReport {
                bound: DistanceBound::Exact { distance: w },
                errors_below,
                examined,
                witness: Some(witness),
            });
        }
        errors_below += count_this_weight;
    }
    Ok(DistanceReport {
        bound: DistanceBound::GreaterThan { checked: max_weight.min(n) },
        errors_below,
        examined,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn enumeration_count_and_order() {
        let mut seen = Vec::new();
        for_each_error(3, 2, |s, l| {
            seen.push(format!("{}{}{}{}", s[0], l[0].as_char(), s[1], l[1].as_char()));
            true
        });
        assert_eq!(seen.len(), 3 * 9);
        assert_eq!(&seen[..4], &["0X1X", "0X1Y", "0X1Z", "0Y1X"]);
        assert_eq!(seen.last().unwrap(), "1Z2Z");
        for w in 0..=4 {
            let mut c = 0u64;
            for_each_error(7, w, |_, _| {
                c += 1;
                true
            });
            assert_eq!(c, binomial(7, w as u64) * 3u64.pow(w as u32));
        }
    }

    #[test]
    fn repetition_code_distance() {
        // 3-qubit bit-flip code: Z̄ = Z on one qubit has weight 1.
        let set = GeneratorSet::new(3, vec!["ZZI".parse().unwrap(), "IZZ".parse().unwrap()]).unwrap();
        let r = distance(&set, 3).unwrap();
        assert_eq!(r.bound, DistanceBound::Exact { distance: 1 });
        assert_eq!(r.errors_below, 0);
    }

    #[test]
    fn five_qubit_code_has_distance_three() {
        let set = GeneratorSet::new(
            5,
            ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"].iter().map(|s| s.parse().unwrap()).collect(),
        )
        .unwrap();
        let r = distance(&set, 4).unwrap();
        assert_eq!(r.bound.exact(), Some(3));
        assert_eq!(r.errors_below, 15 + 90);
    }

    #[test]
    fn bound_reported_when_search_exhausted() {
        let set = GeneratorSet::new(
            5,
            ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"].iter().map(|s| s.parse().unwrap()).collect(),
        )
        .unwrap();
        let r = distance(&set, 2).unwrap();
        assert_eq!(r.bound, DistanceBound::GreaterThan { checked: 2 });
        assert_eq!(r.bound.lower_bound(), 3);
    }
}
