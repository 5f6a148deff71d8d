//! Permutations of `{1,…,n}` in one-line notation and tuples of them.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A bijection of `{1,…,n}`.
///
/// Stored 0-based: `image[i]` is the image of `i + 1`, minus one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Builds a permutation from its 1-based one-line notation, e.g. `[3, 2, 4, 1]`.
    pub fn from_one_line(values: &[usize]) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::NotAPermutation {
                n,
                detail: "empty image".into(),
            });
        }
        let mut seen = vec![false; n];
        let mut image = Vec::with_capacity(n);
        for &v in values {
            if v == 0 || v > n {
                return Err(Error::NotAPermutation {
                    n,
                    detail: format!("value {v} out of range"),
                });
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::NotAPermutation {
                    n,
                    detail: format!("value {v} repeated"),
                });
            }
            image.push(v - 1);
        }
        Ok(Permutation { image })
    }

    /// Builds a permutation from 0-based images.
    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let one_line: Vec<usize> = image.iter().map(|&v| v + 1).collect();
        Self::from_one_line(&one_line)
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// Image of the 1-based point `x`.
    ///
    /// Panics if `x` is outside `1..=n`.
    pub fn apply(&self, x: usize) -> usize {
        self.image[x - 1] + 1
    }

    /// Image of the 0-based point `i`, 0-based.
    #[inline]
    pub fn apply0(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn images0(&self) -> &[usize] {
        &self.image
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.image.iter().map(|&v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            image: other.image.iter().map(|&g| self.image[g]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.degree()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v] = i;
        }
        Permutation { image }
    }
}

/// Same-degree composition, used where degrees are already known to agree.
fn compose_same(f: &Permutation, g: &Permutation) -> Permutation {
    f.compose(g).expect("degrees checked at construction")
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.image.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses whitespace-separated 1-based images. Cycle notation is rejected.
    fn from_str(s: &str) -> Result<Self> {
        if s.contains('(') || s.contains(')') {
            return Err(Error::Parse(
                "cycle notation is not accepted; use one-line notation".into(),
            ));
        }
        let values = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid integer {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_one_line(&values)
    }
}

/// `⟨γ_2,…,γ_k⟩`: `k − 1` permutations of equal degree, with an implicit
/// identity as member 1.
///
/// The same type holds both a `σ` tuple (for the union-closure construction)
/// and a `π = ⟨π_12,…,π_1k⟩` tuple (for the coordinatized construction).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PermTuple {
    n: usize,
    members: Vec<Permutation>,
}

impl PermTuple {
    /// `members` are members `2,…,k`.
    pub fn new(members: Vec<Permutation>) -> Result<Self> {
        let Some(first) = members.first() else {
            return Err(Error::TooFewChains(1));
        };
        let n = first.degree();
        if let Some(bad) = members.iter().find(|p| p.degree() != n) {
            return Err(Error::DegreeMismatch {
                left: n,
                right: bad.degree(),
            });
        }
        Ok(PermTuple { n, members })
    }

    /// Convenience constructor from 1-based one-line arrays.
    pub fn from_one_line(members: &[&[usize]]) -> Result<Self> {
        let perms = members
            .iter()
            .map(|m| Permutation::from_one_line(m))
            .collect::<Result<Vec<_>>>()?;
        Self::new(perms)
    }

    /// `k − 1` identities of degree `n`.
    pub fn identities(n: usize, k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::TooFewChains(k));
        }
        Self::new(vec![Permutation::identity(n); k - 1])
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Total number of chains, including the implicit identity.
    pub fn k(&self) -> usize {
        self.members.len() + 1
    }

    /// Members `2,…,k`.
    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    /// Member `i` for `i` in `1..=k`; member 1 is the identity.
    pub fn member(&self, i: usize) -> Permutation {
        assert!((1..=self.k()).contains(&i), "member index {i} out of 1..={}", self.k());
        if i == 1 {
            Permutation::identity(self.n)
        } else {
            self.members[i - 2].clone()
        }
    }

    /// All `k` members, identity first.
    pub fn all_members(&self) -> Vec<Permutation> {
        (1..=self.k()).map(|i| self.member(i)).collect()
    }

    /// Componentwise inverse.
    pub fn inverse(&self) -> PermTuple {
        PermTuple {
            n: self.n,
            members: self.members.iter().map(Permutation::inverse).collect(),
        }
    }

    /// Derived table `π_ij = π_1j ∘ π_1i⁻¹`, reading `self` as `⟨π_12,…,π_1k⟩`.
    pub fn pi_table(&self) -> PiTable {
        let firsts = self.all_members();
        let inverses: Vec<Permutation> = firsts.iter().map(Permutation::inverse).collect();
        let k = self.k();
        let mut entries = Vec::with_capacity(k * k);
        for inv_i in &inverses {
            for pi_1j in &firsts {
                entries.push(compose_same(pi_1j, inv_i));
            }
        }
        PiTable {
            n: self.n,
            k,
            entries,
        }
    }

    /// Parses the tuple file format: a header line `n k`, then `k − 1`
    /// permutation lines. Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty permutation tuple file".into()))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("invalid header token {t:?}")))
            })
            .collect::<Result<_>>()?;
        let [n, k] = nums[..] else {
            return Err(Error::Parse(format!(
                "header must be `n k`, got {header:?}"
            )));
        };
        if k < 2 {
            return Err(Error::TooFewChains(k));
        }
        let mut members = Vec::with_capacity(k - 1);
        for line in lines {
            let p: Permutation = line.parse()?;
            if p.degree() != n {
                return Err(Error::DegreeMismatch {
                    left: n,
                    right: p.degree(),
                });
            }
            members.push(p);
        }
        if members.len() != k - 1 {
            return Err(Error::Parse(format!(
                "expected {} permutation lines, found {}",
                k - 1,
                members.len()
            )));
        }
        PermTuple::new(members)
    }

    pub fn to_file_string(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.k());
        for m in &self.members {
            out.push_str(&m.to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for PermTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.members).finish()
    }
}

impl fmt::Display for PermTuple {
    /// Members separated by ` | `, e.g. `3 2 4 1 | 4 2 1 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// The `k × k` table of `π_ij`, 1-based on the outside.
#[derive(Clone, Debug)]
pub struct PiTable {
    n: usize,
    k: usize,
    entries: Vec<Permutation>,
}

impl PiTable {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `π_ij` for `i, j` in `1..=k`.
    pub fn get(&self, i: usize, j: usize) -> &Permutation {
        assert!(i >= 1 && i <= self.k && j >= 1 && j <= self.k);
        &self.entries[(i - 1) * self.k + (j - 1)]
    }

    /// `π_ij` with 0-based `i, j`.
    #[inline]
    pub(crate) fn get0(&self, i: usize, j: usize) -> &Permutation {
        &self.entries[i * self.k + j]
    }
}
