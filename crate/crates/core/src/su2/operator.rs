use std::collections::BTreeMap;

use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

/// Gauge coupling squared and lattice spacing.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Couplings {
    pub g2: f64,
    pub a: f64,
}

impl Default for Couplings {
    fn default() -> Self {
        Self { g2: 1.0, a: 1.0 }
    }
}

impl Couplings {
    pub fn new(g2: f64, a: f64) -> Self {
        Self { g2, a }
    }

    /// Electric energy of one `j = 1/2` link: `(g²/2)·j(j+1)`.
    pub fn link_energy(&self) -> f64 {
        self.g2 / 2.0 * 0.75
    }

    /// Magnitude of the plaquette coupling `2/(a²g²)`.
    pub fn magnetic(&self) -> f64 {
        2.0 / (self.a * self.a * self.g2)
    }
}

/// Real symmetric operator on a labelled basis, stored by rows.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OperatorMatrix {
    /// Bit labels of the basis states; their meaning is set by the builder.
    pub basis: Vec<u64>,
    #[serde(skip)]
    rows: Vec<Vec<(usize, f64)>>,
    pub couplings: Couplings,
    pub meta: BTreeMap<String, f64>,
}

impl OperatorMatrix {
    pub fn new(basis: Vec<u64>, couplings: Couplings) -> Self {
        let rows = vec![Vec::new(); basis.len()];
        Self { basis, rows, couplings, meta: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn add(&mut self, i: usize, j: usize, v: f64) {
        if v == 0.0 {
            return;
        }
        match self.rows[i].iter_mut().find(|(c, _)| *c == j) {
            Some((_, x)) => *x += v,
            None => self.rows[i].push((j, v)),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.rows[i].iter().find(|(c, _)| *c == j).map_or(0.0, |&(_, v)| v)
    }

    /// Nonzero entries as `(row, column, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().filter(|(_, v)| *v != 0.0).map(move |&(j, v)| (i, j, v)))
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.dim(), self.dim());
        for (i, j, v) in self.entries() {
            m[(i, j)] += v;
        }
        m
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.entries().all(|(i, j, v)| (self.get(j, i) - v).abs() <= tol)
    }

    /// Keeps the basis states whose label satisfies `keep`, in their current order.
    pub fn restrict(&self, keep: impl Fn(u64) -> bool) -> OperatorMatrix {
        let kept: Vec<usize> = (0..self.dim()).filter(|&i| keep(self.basis[i])).collect();
        let mut position = vec![usize::MAX; self.dim()];
        for (new, &old) in kept.iter().enumerate() {
            position[old] = new;
        }
        let mut out = OperatorMatrix::new(kept.iter().map(|&i| self.basis[i]).collect(), self.couplings);
        out.meta = self.meta.clone();
        for (new, &old) in kept.iter().enumerate() {
            for &(j, v) in &self.rows[old] {
                if position[j] != usize::MAX {
                    out.add(new, position[j], v);
                }
            }
        }
        out
    }

    /// Ascending eigenvalues from a dense symmetric eigensolve.
    pub fn eigenvalues(&self) -> Vec<f64> {
        if self.dim() == 0 {
            return Vec::new();
        }
        let mut ev: Vec<f64> = SymmetricEigen::new(self.to_dense()).eigenvalues.iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumComparison {
    pub dim_a: usize,
    pub dim_b: usize,
    pub eigenvalues_a: Vec<f64>,
    pub eigenvalues_b: Vec<f64>,
    /// Largest eigenvalue difference, or `None` when the dimensions differ.
    pub max_abs_diff: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
}

pub fn spectrum_compare(a: &OperatorMatrix, b: &OperatorMatrix, tol: f64) -> SpectrumComparison {
    let (ea, eb) = (a.eigenvalues(), b.eigenvalues());
    let max_abs_diff =
        (ea.len() == eb.len()).then(|| ea.iter().zip(&eb).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max));
    SpectrumComparison {
        dim_a: a.dim(),
        dim_b: b.dim(),
        pass: max_abs_diff.is_some_and(|d| d <= tol),
        eigenvalues_a: ea,
        eigenvalues_b: eb,
        max_abs_diff,
        tolerance: tol,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_spectrum() {
        let mut m = OperatorMatrix::new(vec![0, 1], Couplings::default());
        m.add(0, 1, -2.0);
        m.add(1, 0, -2.0);
        m.add(1, 1, 1.5);
        assert!(m.is_symmetric(0.0));
        let ev = m.eigenvalues();
        let r = (9.0f64 / 16.0 + 4.0).sqrt();
        assert!((ev[0] - (0.75 - r)).abs() < 1e-12 && (ev[1] - (0.75 + r)).abs() < 1e-12);
    }

    #[test]
    fn restriction_keeps_order_and_entries() {
        let mut m = OperatorMatrix::new(vec![0, 1, 2, 3], Couplings::default());
        m.add(0, 3, 1.0);
        m.add(3, 0, 1.0);
        m.add(1, 2, 5.0);
        let r = m.restrict(|b| b == 0 || b == 3);
        assert_eq!(r.basis, vec![0, 3]);
        assert_eq!(r.get(0, 1), 1.0);
        assert_eq!(r.entries().count(), 2);
    }

    #[test]
    fn dimension_mismatch_fails() {
        let a = OperatorMatrix::new(vec![0], Couplings::default());
        let b = OperatorMatrix::new(vec![0, 1], Couplings::default());
        let c = spectrum_compare(&a, &b, 1e-10);
        assert!(!c.pass && c.max_abs_diff.is_none());
    }
}
