//! Exhaustive census of antimatroids and join-distributive lattices of small
//! length, and realization of each lattice as a union-closure lattice.

use itertools::Itertools;

use crate::antimatroid::SetFamily;
use crate::ej::build_ejlat;
use crate::lattice::FiniteLattice;
use crate::{Error, PermTuple, Permutation, Result, Subset};

/// Largest ground set the census accepts.
pub const MAX_CENSUS_DEGREE: usize = 4;

/// Number of candidate families examined for degree `n`: every family that
/// contains `∅` and `{1,…,n}`.
pub fn candidate_count(n: usize) -> u64 {
    1u64 << ((1usize << n) - 2)
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 || n > MAX_CENSUS_DEGREE {
        return Err(Error::Refused(format!(
            "census degree must be in 1..={MAX_CENSUS_DEGREE}; degree {n} would need 2^(2^{n} - 2) candidate families"
        )));
    }
    Ok(())
}

/// Membership mask over the `2^n` subsets: bit `s` set iff subset `s` is in the family.
fn is_antimatroid_mask(n: usize, fam: u32) -> bool {
    let total = 1usize << n;
    let has = |s: usize| fam >> s & 1 == 1;
    let members: Vec<usize> = (0..total).filter(|&s| has(s)).collect();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if !has(a | b) {
                return false;
            }
        }
    }
    members
        .iter()
        .filter(|&&s| s != 0)
        .all(|&s| (0..n).any(|e| s >> e & 1 == 1 && has(s & !(1 << e))))
}

/// Every antimatroid on `{1,…,n}`, each exactly once, in increasing order of
/// membership mask.
pub fn enumerate_antimatroids(n: usize) -> Result<impl Iterator<Item = SetFamily>> {
    check_degree(n)?;
    let total = 1usize << n;
    let middle = total - 2;
    let forced = 1u32 | 1 << (total - 1);
    Ok((0u32..1 << middle).filter_map(move |bits| {
        let fam = forced | bits << 1;
        is_antimatroid_mask(n, fam).then(|| {
            let sets = (0..total)
                .filter(|&s| fam >> s & 1 == 1)
                .map(|s| Subset(s as u64))
                .collect();
            SetFamily::new(n, sets).expect("mask check agrees with the axioms")
        })
    }))
}

/// One isomorphism class of join-distributive lattices of length `n`.
#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub n: usize,
    pub class_id: usize,
    /// Feasible lattice of the first antimatroid found in this class.
    pub lattice: FiniteLattice,
    pub representative: SetFamily,
    pub join_width: usize,
    /// Number of labeled antimatroids on `{1,…,n}` whose lattice is in this class.
    pub labeled_count: usize,
    pub witness: Option<PermTuple>,
}

impl CensusEntry {
    pub const CSV_HEADER: &'static str = "n,class_id,lattice_size,join_width,labeled_count,witness_sigma";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.n,
            self.class_id,
            self.lattice.size(),
            self.join_width,
            self.labeled_count,
            self.witness.as_ref().map(|w| w.to_string()).unwrap_or_default()
        )
    }
}

type InvariantKey = (usize, usize, Vec<(usize, usize, usize)>);

fn invariant_key(l: &FiniteLattice) -> InvariantKey {
    let mut sig: Vec<_> = (0..l.size())
        .map(|x| (l.height(x), l.lower_covers(x).len(), l.upper_covers(x).len()))
        .collect();
    sig.sort();
    (l.size(), l.length(), sig)
}

/// Groups all antimatroids on `{1,…,n}` by isomorphism of their lattices.
/// Classes are numbered in order of first appearance. Witnesses are left empty;
/// see [`realize_census`].
pub fn census_jd_lattices(n: usize) -> Result<Vec<CensusEntry>> {
    let mut entries: Vec<CensusEntry> = Vec::new();
    let mut keys: Vec<InvariantKey> = Vec::new();
    for fam in enumerate_antimatroids(n)? {
        let lattice = fam.feasible_lattice();
        let key = invariant_key(&lattice);
        let existing = entries
            .iter()
            .zip(&keys)
            .position(|(e, k)| *k == key && e.lattice.is_isomorphic(&lattice).is_some());
        match existing {
            Some(i) => entries[i].labeled_count += 1,
            None => {
                let class_id = entries.len();
                entries.push(CensusEntry {
                    n,
                    class_id,
                    join_width: lattice.join_width(),
                    lattice,
                    representative: fam,
                    labeled_count: 1,
                    witness: None,
                });
                keys.push(key);
            }
        }
    }
    Ok(entries)
}

/// Fills in a realizing tuple for each entry.
pub fn realize_census(entries: &mut [CensusEntry]) -> Result<()> {
    for e in entries {
        e.witness = realize_by_sigma(&e.lattice)?;
    }
    Ok(())
}

/// Searches `σ ∈ S_n^{k−1}`, `k = max(join-width, 2)`, for `ejlat(σ) ≅ L`.
///
/// `L` must be join-distributive. Since `ejlat(σ)` does not depend on the
/// order of `σ_2,…,σ_k`, only non-decreasing tuples of permutations are tried.
pub fn realize_by_sigma(l: &FiniteLattice) -> Result<Option<PermTuple>> {
    if let Some(x) = l.join_distributivity_violation() {
        return Err(Error::Domain(format!(
            "lattice is not join-distributive at {}",
            l.label(x)
        )));
    }
    let n = l.length();
    if n == 0 {
        return Err(Error::Domain("a one-element lattice has no realizing tuple".into()));
    }
    let k = l.join_width().max(2);
    let perms: Vec<Permutation> = (0..n)
        .permutations(n)
        .map(|p| Permutation::from_images(p).expect("itertools yields permutations"))
        .collect();
    for combo in (0..perms.len()).combinations_with_replacement(k - 1) {
        let sigma = PermTuple::new(combo.iter().map(|&i| perms[i].clone()).collect())?;
        let ej = build_ejlat(&sigma)?;
        if ej.sets().len() == l.size() && ej.lattice().is_isomorphic(l).is_some() {
            return Ok(Some(sigma));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::antimatroid::is_antimatroid;
    use crate::fixtures::fix_a;

    fn set(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied())
    }

    /// Brute force over every subset of the powerset, checked with the
    /// general axiom checker.
    fn brute_force_count(n: usize) -> usize {
        let total = 1usize << n;
        (0u64..1 << total)
            .filter(|fam| {
                let sets: Vec<Subset> = (0..total)
                    .filter(|s| fam >> s & 1 == 1)
                    .map(|s| Subset(s as u64))
                    .collect();
                is_antimatroid(n, &sets).is_ok()
            })
            .count()
    }

    #[test]
    fn degree_one_and_two() {
        let one: Vec<_> = enumerate_antimatroids(1).unwrap().collect();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].sets(), &[set(&[]), set(&[1])]);

        let two: Vec<Vec<Subset>> = enumerate_antimatroids(2)
            .unwrap()
            .map(|f| f.sets().to_vec())
            .collect();
        assert_eq!(two.len(), 3);
        assert!(two.contains(&vec![set(&[]), set(&[1]), set(&[1, 2])]));
        assert!(two.contains(&vec![set(&[]), set(&[2]), set(&[1, 2])]));
        assert!(two.contains(&vec![set(&[]), set(&[1]), set(&[2]), set(&[1, 2])]));
    }

    #[test]
    fn mask_enumeration_matches_brute_force() {
        for n in 1..=3 {
            assert_eq!(enumerate_antimatroids(n).unwrap().count(), brute_force_count(n), "n = {n}");
        }
    }

    #[test]
    fn figure_family_is_enumerated() {
        let mut fig: Vec<Subset> = (0..16u64).map(Subset).filter(|&s| s != set(&[2])).collect();
        crate::subset::sort_family(&mut fig);
        assert!(enumerate_antimatroids(4).unwrap().any(|f| f.sets() == fig.as_slice()));
    }

    #[test]
    fn refuses_large_degree() {
        assert!(matches!(enumerate_antimatroids(5), Err(Error::Refused(_))));
        assert!(matches!(census_jd_lattices(0), Err(Error::Refused(_))));
    }

    #[test]
    fn small_censuses() {
        let c1 = census_jd_lattices(1).unwrap();
        assert_eq!(c1.len(), 1);
        assert!(c1[0].lattice.is_isomorphic(&FiniteLattice::chain(2)).is_some());

        let c2 = census_jd_lattices(2).unwrap();
        assert_eq!(c2.len(), 2);
        assert!(c2.iter().any(|e| e.lattice.is_isomorphic(&FiniteLattice::chain(3)).is_some()));
        assert!(c2.iter().any(|e| e.lattice.is_isomorphic(&FiniteLattice::boolean(2)).is_some()));
        assert_eq!(c2.iter().map(|e| e.labeled_count).sum::<usize>(), 3);
    }

    #[test]
    fn realizations() {
        let fig = build_ejlat(&fix_a()).unwrap();
        let w = realize_by_sigma(fig.lattice()).unwrap().expect("figure lattice is realizable");
        assert!(build_ejlat(&w).unwrap().lattice().is_isomorphic(fig.lattice()).is_some());

        let w = realize_by_sigma(&FiniteLattice::chain(4)).unwrap().unwrap();
        assert_eq!(w, PermTuple::identities(3, 2).unwrap());

        assert!(matches!(realize_by_sigma(&FiniteLattice::diamond()), Err(Error::Domain(_))));
    }

    #[test]
    fn csv_row_shape() {
        let mut c = census_jd_lattices(2).unwrap();
        realize_census(&mut c).unwrap();
        assert_eq!(c[0].csv_row(), "2,0,3,1,2,1 2");
    }
}
