//! Antimatroids: union-closed, accessible set families on `{1,…,n}` that
//! contain `∅` and the whole ground set.

use std::fmt;

use crate::ej::build_ejlat;
use crate::lattice::FiniteLattice;
use crate::subset::{inclusion_lattice, sort_family, MAX_DEGREE};
use crate::trajectories::trajectories;
use crate::{Error, PermTuple, Result, Subset};

/// Why a candidate family is not an antimatroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    OutOfRange(Subset),
    MissingEmpty,
    MissingGround,
    NotUnionClosed(Subset, Subset),
    NotAccessible(Subset),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutOfRange(s) => write!(f, "{} is not a subset of the ground set", s.label()),
            Violation::MissingEmpty => write!(f, "the empty set is missing"),
            Violation::MissingGround => write!(f, "the ground set is missing"),
            Violation::NotUnionClosed(a, b) => {
                write!(f, "union of {} and {} is missing", a.label(), b.label())
            }
            Violation::NotAccessible(s) => write!(f, "{} has no removable element", s.label()),
        }
    }
}

/// Checks the antimatroid axioms, naming the first failure.
pub fn is_antimatroid(n: usize, family: &[Subset]) -> std::result::Result<(), Violation> {
    let ground = Subset::full(n);
    if let Some(&s) = family.iter().find(|s| !s.is_subset(ground)) {
        return Err(Violation::OutOfRange(s));
    }
    let has = |s: Subset| family.contains(&s);
    if !has(Subset::EMPTY) {
        return Err(Violation::MissingEmpty);
    }
    if !has(ground) {
        return Err(Violation::MissingGround);
    }
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            if !has(a.union(b)) {
                return Err(Violation::NotUnionClosed(a, b));
            }
        }
    }
    for &s in family {
        if !s.is_empty() && !s.elements().any(|e| has(s.remove(e))) {
            return Err(Violation::NotAccessible(s));
        }
    }
    Ok(())
}

/// A validated antimatroid, sets sorted by cardinality then mask.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: usize,
    feasible: Vec<Subset>,
}

impl SetFamily {
    pub fn new(n: usize, mut feasible: Vec<Subset>) -> Result<Self> {
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(n));
        }
        sort_family(&mut feasible);
        is_antimatroid(n, &feasible).map_err(|v| Error::NotAnAntimatroid(v.to_string()))?;
        Ok(SetFamily { n, feasible })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[Subset] {
        &self.feasible
    }

    pub fn len(&self) -> usize {
        self.feasible.len()
    }

    pub fn is_empty(&self) -> bool {
        self.feasible.is_empty()
    }

    /// Feasible sets ordered by inclusion.
    pub fn feasible_lattice(&self) -> FiniteLattice {
        let labels = self.feasible.iter().map(|s| s.label()).collect();
        inclusion_lattice(&self.feasible, labels).expect("antimatroids are lattices")
    }

    /// Family file: `n` on the first line, then one set per line (`-` is `∅`).
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty family file".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::Parse(format!("invalid degree {header:?}")))?;
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(n));
        }
        let sets = lines
            .map(|l| Subset::parse_line(l, n))
            .collect::<Result<Vec<_>>>()?;
        SetFamily::new(n, sets)
    }

    pub fn to_file_string(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for s in &self.feasible {
            out.push_str(&s.to_line());
            out.push('\n');
        }
        out
    }
}

/// The set family of `ejlat(σ)`, validated as an antimatroid.
pub fn from_ejlat(sigma: &PermTuple) -> Result<SetFamily> {
    let ej = build_ejlat(sigma)?;
    SetFamily::new(sigma.degree(), ej.sets().to_vec())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverLawReport {
    pub pass: bool,
    /// Pairs `(X, Y)` on which "X ≺ Y" and "X ⊂ Y, |Y∖X| = 1" disagree.
    pub mismatches: Vec<(Subset, Subset)>,
}

/// Compares the cover relation with single-element containment.
pub fn check_cover_law(fam: &SetFamily) -> CoverLawReport {
    let l = fam.feasible_lattice();
    let sets = fam.sets();
    let mut mismatches = Vec::new();
    for (a, &x) in sets.iter().enumerate() {
        for (b, &y) in sets.iter().enumerate() {
            let one_step = x.is_subset(y) && y.difference(x).len() == 1;
            if l.is_cover(a, b) != one_step {
                mismatches.push((x, y));
            }
        }
    }
    CoverLawReport {
        pass: mismatches.is_empty(),
        mismatches,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrajectoryLabels {
    /// Ground element removed along each trajectory (in trajectory order);
    /// `None` where the block mixes elements.
    pub labels: Vec<Option<usize>>,
    /// Descriptions of mixed blocks.
    pub mixing: Vec<String>,
}

impl TrajectoryLabels {
    pub fn consistent(&self) -> bool {
        self.mixing.is_empty()
    }
}

/// For each trajectory of the feasible lattice, the element `x` with
/// `X = Y ∖ {x}` on every `[X, Y]` of the trajectory.
pub fn trajectory_labels(fam: &SetFamily) -> TrajectoryLabels {
    let l = fam.feasible_lattice();
    let sets = fam.sets();
    let traj = trajectories(&l);
    let mut labels = Vec::with_capacity(traj.len());
    let mut mixing = Vec::new();
    for (t, block) in traj.blocks().enumerate() {
        let mut removed: Vec<Subset> = block
            .iter()
            .map(|p| sets[p.b].difference(sets[p.a]))
            .collect();
        removed.sort_by_key(|s| s.0);
        removed.dedup();
        match removed[..] {
            [single] if single.len() == 1 => {
                labels.push(single.elements().next());
            }
            _ => {
                labels.push(None);
                mixing.push(format!(
                    "trajectory {t} removes {}",
                    removed.iter().map(|s| s.label()).collect::<Vec<_>>().join(", ")
                ));
            }
        }
    }
    TrajectoryLabels { labels, mixing }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fix_a;

    fn set(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied())
    }

    fn figure_family() -> Vec<Subset> {
        (0..16u64).map(Subset).filter(|&s| s != set(&[2])).collect()
    }

    #[test]
    fn axioms() {
        assert_eq!(is_antimatroid(4, &figure_family()), Ok(()));
        assert_eq!(
            is_antimatroid(2, &[set(&[]), set(&[1, 2])]),
            Err(Violation::NotAccessible(set(&[1, 2])))
        );
        assert_eq!(
            is_antimatroid(2, &[set(&[]), set(&[1]), set(&[2])]),
            Err(Violation::MissingGround)
        );
        assert_eq!(
            is_antimatroid(3, &[set(&[]), set(&[1]), set(&[2]), set(&[1, 2, 3])]),
            Err(Violation::NotUnionClosed(set(&[1]), set(&[2])))
        );
        assert_eq!(is_antimatroid(1, &[set(&[1])]), Err(Violation::MissingEmpty));
        assert_eq!(
            is_antimatroid(1, &[set(&[]), set(&[1]), set(&[2])]),
            Err(Violation::OutOfRange(set(&[2])))
        );
    }

    #[test]
    fn lattices_of_families() {
        let fam = SetFamily::new(4, figure_family()).unwrap();
        let l = fam.feasible_lattice();
        assert_eq!(l.size(), 15);
        assert!(l.is_isomorphic(build_ejlat(&fix_a()).unwrap().lattice()).is_some());

        let chain = SetFamily::new(3, vec![set(&[]), set(&[1]), set(&[1, 2]), set(&[1, 2, 3])]).unwrap();
        assert!(chain.feasible_lattice().is_isomorphic(&FiniteLattice::chain(4)).is_some());

        let b2 = SetFamily::new(2, (0..4u64).map(Subset).collect()).unwrap();
        assert!(b2.feasible_lattice().is_isomorphic(&FiniteLattice::boolean(2)).is_some());
    }

    #[test]
    fn cover_law() {
        assert!(check_cover_law(&SetFamily::new(4, figure_family()).unwrap()).pass);
        assert!(check_cover_law(&SetFamily::new(3, (0..8u64).map(Subset).collect()).unwrap()).pass);
        assert!(matches!(
            SetFamily::new(2, vec![set(&[]), set(&[1, 2])]),
            Err(Error::NotAnAntimatroid(_))
        ));
    }

    #[test]
    fn labels() {
        let tl = trajectory_labels(&SetFamily::new(4, figure_family()).unwrap());
        assert!(tl.consistent());
        let mut l: Vec<usize> = tl.labels.iter().map(|x| x.unwrap()).collect();
        l.sort();
        assert_eq!(l, vec![1, 2, 3, 4]);

        let chain = SetFamily::new(3, vec![set(&[]), set(&[2]), set(&[2, 3]), set(&[1, 2, 3])]).unwrap();
        let tl = trajectory_labels(&chain);
        assert_eq!(tl.labels, vec![Some(2), Some(3), Some(1)]);

        let b2 = SetFamily::new(2, (0..4u64).map(Subset).collect()).unwrap();
        let mut l: Vec<usize> = trajectory_labels(&b2).labels.iter().map(|x| x.unwrap()).collect();
        l.sort();
        assert_eq!(l, vec![1, 2]);
    }

    #[test]
    fn from_ejlat_families() {
        let fam = from_ejlat(&fix_a()).unwrap();
        assert_eq!(fam.len(), 15);
        let chain = from_ejlat(&PermTuple::identities(4, 2).unwrap()).unwrap();
        assert_eq!(chain.sets(), &[set(&[]), set(&[1]), set(&[1, 2]), set(&[1, 2, 3]), set(&[1, 2, 3, 4])]);
    }

    #[test]
    fn family_file_format() {
        let fam = SetFamily::parse("2\n-\n1\n1 2\n").unwrap();
        assert_eq!(fam.len(), 3);
        assert_eq!(SetFamily::parse(&fam.to_file_string()).unwrap(), fam);
        assert!(SetFamily::parse("2\n-\n1 2\n").is_err());
        assert!(SetFamily::parse("2\n-\n3\n").is_err());
    }
}
