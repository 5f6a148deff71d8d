//! The coordinatized lattice `czlat(π)` of eligible tuples.
//!
//! A tuple `x ∈ {0,…,n}^k` is eligible for `π = ⟨π_12,…,π_1k⟩` when
//! `π_ij(x_i + 1) ≥ x_j + 1` for every `i, j` with `x_i < n`. Eligible tuples
//! are closed under componentwise minimum and contain `⟨n,…,n⟩`, so under the
//! componentwise order they form a lattice whose meet is the minimum.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::lattice::FiniteLattice;
use crate::{PermTuple, PiTable, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EligibleTuple(pub Vec<usize>);

impl EligibleTuple {
    pub fn coords(&self) -> &[usize] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// Componentwise `≤`.
    pub fn leq(&self, other: &EligibleTuple) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Digits concatenated (`020`); comma-separated once a coordinate exceeds 9.
    pub fn label(&self) -> String {
        if self.0.iter().any(|&c| c > 9) {
            self.0.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
        } else {
            self.0.iter().map(|c| c.to_string()).collect()
        }
    }
}

impl fmt::Debug for EligibleTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "⟩")
    }
}

impl fmt::Display for EligibleTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl From<Vec<usize>> for EligibleTuple {
    fn from(v: Vec<usize>) -> Self {
        EligibleTuple(v)
    }
}

/// Eligibility against a precomputed `π_ij` table.
pub fn is_eligible_with(table: &PiTable, x: &[usize]) -> bool {
    let n = table.degree();
    let k = table.k();
    if x.len() != k || x.iter().any(|&c| c > n) {
        return false;
    }
    first_violation(table, x).is_none()
}

/// First `(i, j)` (0-based) with `x_i < n` and `π_ij(x_i + 1) < x_j + 1`.
fn first_violation(table: &PiTable, x: &[usize]) -> Option<(usize, usize)> {
    let n = table.degree();
    let k = table.k();
    for i in 0..k {
        if x[i] >= n {
            continue;
        }
        for j in 0..k {
            // 0-based: π_ij(x_i + 1) - 1 = apply0(x_i)
            if table.get0(i, j).apply0(x[i]) < x[j] {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn is_eligible(pi: &PermTuple, x: &[usize]) -> bool {
    is_eligible_with(&pi.pi_table(), x)
}

/// `czlat(π)`; element `x` of the lattice is `tuples()[x]`.
#[derive(Clone, Debug)]
pub struct CzLattice {
    pi: PermTuple,
    table: PiTable,
    tuples: Vec<EligibleTuple>,
    index: HashMap<EligibleTuple, usize>,
    lattice: FiniteLattice,
}

impl CzLattice {
    pub fn pi(&self) -> &PermTuple {
        &self.pi
    }

    pub fn table(&self) -> &PiTable {
        &self.table
    }

    /// Eligible tuples, sorted by coordinate sum and then lexicographically.
    pub fn tuples(&self) -> &[EligibleTuple] {
        &self.tuples
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn into_lattice(self) -> FiniteLattice {
        self.lattice
    }

    pub fn index_of(&self, x: &EligibleTuple) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn join(&self, x: &EligibleTuple, y: &EligibleTuple) -> EligibleTuple {
        cz_join(&self.table, x, y)
    }
}

/// All eligible tuples: scans `{0,…,n−1}^k` and appends `⟨n,…,n⟩`.
pub fn eligible_tuples(table: &PiTable) -> Vec<EligibleTuple> {
    let n = table.degree();
    let k = table.k();
    let mut out = Vec::new();
    let mut x = vec![0usize; k];
    'scan: loop {
        if first_violation(table, &x).is_none() {
            out.push(EligibleTuple(x.clone()));
        }
        for pos in (0..k).rev() {
            x[pos] += 1;
            if x[pos] < n {
                continue 'scan;
            }
            x[pos] = 0;
        }
        break;
    }
    out.push(EligibleTuple(vec![n; k]));
    out.sort_by(|a, b| {
        let sa: usize = a.0.iter().sum();
        let sb: usize = b.0.iter().sum();
        sa.cmp(&sb).then_with(|| a.cmp(b))
    });
    out
}

pub fn build_czlat(pi: &PermTuple) -> Result<CzLattice> {
    let table = pi.pi_table();
    let tuples = eligible_tuples(&table);
    let labels = tuples.iter().map(EligibleTuple::label).collect();
    let lattice = FiniteLattice::from_fn(tuples.len(), labels, |a, b| tuples[a].leq(&tuples[b]))?;
    let index = tuples
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();
    Ok(CzLattice {
        pi: pi.clone(),
        table,
        tuples,
        index,
        lattice,
    })
}

/// Componentwise minimum.
pub fn cz_meet(x: &EligibleTuple, y: &EligibleTuple) -> EligibleTuple {
    EligibleTuple(x.0.iter().zip(&y.0).map(|(&a, &b)| a.min(b)).collect())
}

/// Least eligible tuple above both arguments.
///
/// Starts from the componentwise maximum and, while some pair `(i, j)` with
/// `z_i < n` violates eligibility, raises `z_i` by one (scanning pairs in
/// lexicographic order and restarting after each step).
pub fn cz_join(table: &PiTable, x: &EligibleTuple, y: &EligibleTuple) -> EligibleTuple {
    let mut z: Vec<usize> = x.0.iter().zip(&y.0).map(|(&a, &b)| a.max(b)).collect();
    while let Some((i, _)) = first_violation(table, &z) {
        z[i] += 1;
    }
    EligibleTuple(z)
}

/// The tuples `⟨π_11(i)−1,…,π_1k(i)−1⟩` for `i = 1,…,n`, in order of `i`.
pub fn mir_formula(pi: &PermTuple) -> Vec<EligibleTuple> {
    let members = pi.all_members();
    (0..pi.degree())
        .map(|i| EligibleTuple(members.iter().map(|p| p.apply0(i)).collect()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fix_b, fix_c};

    fn t(v: &[usize]) -> EligibleTuple {
        EligibleTuple(v.to_vec())
    }

    #[test]
    fn eligibility_examples() {
        let pi = fix_b();
        assert!(is_eligible(&pi, &[0, 2, 0]));
        assert!(!is_eligible(&pi, &[2, 1, 0]));
        // one failing pair: π_21(2) = 2 < x_1 + 1 = 3
        assert_eq!(pi.pi_table().get(2, 1).apply(2), 2);
        assert!(is_eligible(&pi, &[4, 4, 4]));
        assert!(is_eligible(&pi, &[0, 0, 0]));
        assert!(!is_eligible(&pi, &[4, 4, 0]));
        assert!(!is_eligible(&pi, &[0, 0]));
        assert!(!is_eligible(&pi, &[5, 5, 5]));
    }

    #[test]
    fn figure_lattice_has_fifteen_tuples() {
        let cz = build_czlat(&fix_b()).unwrap();
        assert_eq!(cz.tuples().len(), 15);
        assert_eq!(cz.lattice().size(), 15);
        assert!(cz.index_of(&t(&[0, 2, 0])).is_some());
        assert!(cz.index_of(&t(&[1, 1, 1])).is_some());
        assert_eq!(build_czlat(&fix_c()).unwrap().tuples().len(), 15);
    }

    #[test]
    fn identity_pair_gives_diagonal_chain() {
        let pi = PermTuple::identities(2, 2).unwrap();
        assert!(!is_eligible(&pi, &[0, 1]));
        let cz = build_czlat(&pi).unwrap();
        assert_eq!(cz.tuples(), &[t(&[0, 0]), t(&[1, 1]), t(&[2, 2])]);
    }

    #[test]
    fn meets() {
        let x = t(&[1, 2, 0]);
        assert_eq!(cz_meet(&x, &t(&[4, 4, 4])), x);
        assert_eq!(cz_meet(&x, &x), x);
        assert_eq!(cz_meet(&t(&[2, 0, 0]), &t(&[0, 2, 0])), t(&[0, 0, 0]));
    }

    #[test]
    fn joins() {
        let pi = fix_b();
        let table = pi.pi_table();
        let zero = t(&[0, 0, 0]);
        let x = t(&[0, 2, 0]);
        assert_eq!(cz_join(&table, &x, &zero), x);
        assert_eq!(cz_join(&table, &x, &x), x);
        // {1} ∪ {3} = {1,3} ↦ (1,1,0)
        assert!(is_eligible(&pi, &[1, 1, 0]));
        assert_eq!(cz_join(&table, &t(&[1, 0, 0]), &t(&[0, 1, 0])), t(&[1, 1, 0]));
        // (2,1,0) is ineligible; the least eligible tuple above it
        let z = cz_join(&table, &t(&[2, 0, 0]), &t(&[0, 1, 0]));
        assert!(is_eligible_with(&table, z.coords()));
        assert!(t(&[2, 1, 0]).leq(&z));
    }

    #[test]
    fn mir_formula_examples() {
        let mir = mir_formula(&fix_b());
        assert_eq!(mir.len(), 4);
        assert_eq!(mir[1], t(&[1, 1, 1]));
        assert_eq!(mir[0], t(&[0, 3, 2]));
        let ids = mir_formula(&PermTuple::identities(3, 4).unwrap());
        assert_eq!(ids, vec![t(&[0; 4]), t(&[1; 4]), t(&[2; 4])]);
    }

    #[test]
    fn mir_formula_matches_meet_irreducibles_on_figure() {
        let cz = build_czlat(&fix_b()).unwrap();
        let mut brute: Vec<EligibleTuple> = cz
            .lattice()
            .meet_irreducibles()
            .elements()
            .iter()
            .map(|&x| cz.tuples()[x].clone())
            .collect();
        brute.sort();
        let mut formula = mir_formula(&fix_b());
        formula.sort();
        assert_eq!(brute, formula);
    }

    #[test]
    fn labels() {
        assert_eq!(t(&[0, 2, 0]).label(), "020");
        assert_eq!(t(&[10, 2]).label(), "10,2");
    }
}
