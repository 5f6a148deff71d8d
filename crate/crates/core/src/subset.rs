//! Subsets of `{1,…,n}` as bit masks.

use std::fmt;

use crate::lattice::FiniteLattice;
use crate::{Error, Result};

/// Largest ground-set size a [`Subset`] can hold.
pub const MAX_DEGREE: usize = 62;

/// A subset of `{1,…,n}`; bit `i - 1` is set iff `i` is a member.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_DEGREE);
        Subset((1u64 << n) - 1)
    }

    /// From 1-based members.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Subset {
        Subset(elements.into_iter().fold(0, |acc, e| {
            debug_assert!((1..=MAX_DEGREE).contains(&e));
            acc | (1 << (e - 1))
        }))
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=64).contains(&e) && self.0 >> (e - 1) & 1 == 1
    }

    pub fn insert(self, e: usize) -> Subset {
        Subset(self.0 | 1 << (e - 1))
    }

    pub fn remove(self, e: usize) -> Subset {
        Subset(self.0 & !(1 << (e - 1)))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Members in increasing order, 1-based.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |i| self.0 >> i & 1 == 1).map(|i| i + 1)
    }

    /// Label as in a Hasse diagram: members without separators (`134`),
    /// `{}` for the empty set. Members above 9 force comma separation.
    pub fn label(self) -> String {
        if self.is_empty() {
            return "{}".to_string();
        }
        let parts: Vec<String> = self.elements().map(|e| e.to_string()).collect();
        if self.elements().any(|e| e > 9) {
            parts.join(",")
        } else {
            parts.concat()
        }
    }

    /// Parses the family-file line format: sorted space-separated members,
    /// `-` for the empty set.
    pub fn parse_line(line: &str, n: usize) -> Result<Subset> {
        let line = line.trim();
        if line == "-" {
            return Ok(Subset::EMPTY);
        }
        let mut s = Subset::EMPTY;
        for tok in line.split_whitespace() {
            let e: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("invalid set member {tok:?}")))?;
            if e == 0 || e > n {
                return Err(Error::Parse(format!("set member {e} outside 1..={n}")));
            }
            s = s.insert(e);
        }
        Ok(s)
    }

    pub fn to_line(self) -> String {
        if self.is_empty() {
            "-".to_string()
        } else {
            self.elements()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements()).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Deterministic order used for set families: cardinality, then mask value.
pub fn sort_family(sets: &mut Vec<Subset>) {
    sets.sort_by_key(|s| (s.len(), s.0));
    sets.dedup();
}

/// The inclusion order on `sets`, in the given order, as a validated lattice.
pub fn inclusion_lattice(sets: &[Subset], labels: Vec<String>) -> Result<FiniteLattice> {
    FiniteLattice::from_fn(sets.len(), labels, |a, b| sets[a].is_subset(sets[b]))
}
