//! The union-closure lattice `ejlat(σ)`.
//!
//! Each member `σ_i` of the tuple (with `σ_1 = id`) contributes the chain of
//! prefixes `{σ_i(1),…,σ_i(j)}`, `j = 0,…,n`. The lattice is the closure of
//! all these prefixes under union, ordered by inclusion.

use std::collections::HashSet;

use crate::lattice::FiniteLattice;
use crate::subset::{inclusion_lattice, sort_family, MAX_DEGREE};
use crate::{Error, PermTuple, Result, Subset};

/// Prefix chain of member `index` (1-based); `prefixes[j]` has `j` elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingChain {
    pub index: usize,
    pub prefixes: Vec<Subset>,
}

pub fn generating_chains(sigma: &PermTuple) -> Vec<GeneratingChain> {
    sigma
        .all_members()
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let mut prefixes = Vec::with_capacity(p.degree() + 1);
            let mut acc = Subset::EMPTY;
            prefixes.push(acc);
            for &v in p.images0() {
                acc = acc.insert(v + 1);
                prefixes.push(acc);
            }
            GeneratingChain {
                index: i + 1,
                prefixes,
            }
        })
        .collect()
}

/// `ejlat(σ)` with its set family; element `x` of the lattice is `sets()[x]`.
#[derive(Clone, Debug)]
pub struct EjLattice {
    sigma: PermTuple,
    sets: Vec<Subset>,
    lattice: FiniteLattice,
}

impl EjLattice {
    pub fn sigma(&self) -> &PermTuple {
        &self.sigma
    }

    pub fn degree(&self) -> usize {
        self.sigma.degree()
    }

    /// Members, sorted by cardinality and then by mask.
    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn into_lattice(self) -> FiniteLattice {
        self.lattice
    }

    pub fn index_of(&self, s: Subset) -> Option<usize> {
        let key = (s.len(), s.0);
        self.sets.binary_search_by_key(&key, |x| (x.len(), x.0)).ok()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.index_of(s).is_some()
    }
}

/// Closes `generators` under pairwise union by worklist saturation.
pub fn union_closure(generators: impl IntoIterator<Item = Subset>) -> Vec<Subset> {
    let mut family: Vec<Subset> = Vec::new();
    let mut seen: HashSet<Subset> = HashSet::new();
    let mut work: Vec<Subset> = generators.into_iter().collect();
    while let Some(s) = work.pop() {
        if !seen.insert(s) {
            continue;
        }
        for &t in &family {
            let u = s.union(t);
            if !seen.contains(&u) {
                work.push(u);
            }
        }
        family.push(s);
    }
    sort_family(&mut family);
    family
}

pub fn build_ejlat(sigma: &PermTuple) -> Result<EjLattice> {
    if sigma.degree() > MAX_DEGREE {
        return Err(Error::DegreeTooLarge(sigma.degree()));
    }
    let sets = union_closure(
        generating_chains(sigma)
            .into_iter()
            .flat_map(|c| c.prefixes),
    );
    let labels = sets.iter().map(|s| s.label()).collect();
    let lattice = inclusion_lattice(&sets, labels)?;
    Ok(EjLattice {
        sigma: sigma.clone(),
        sets,
        lattice,
    })
}
