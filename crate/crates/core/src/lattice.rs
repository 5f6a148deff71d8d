//! Finite lattices given by an explicit order relation.
//!
//! A [`FiniteLattice`] is validated once at construction; covers, heights and
//! the full meet and join tables are derived eagerly so that every predicate
//! afterwards is a table lookup.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(m: usize) -> Self {
        Bits(vec![0; m.div_ceil(64)])
    }

    #[inline]
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + bit)
            })
        })
    }
}

/// A covering pair `a ≺ b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimeInterval {
    pub a: usize,
    pub b: usize,
}

impl fmt::Display for PrimeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

#[derive(Clone)]
pub struct FiniteLattice {
    m: usize,
    labels: Vec<String>,
    down: Vec<Bits>,
    up: Vec<Bits>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
    height: Vec<usize>,
    meet_tab: Vec<u32>,
    join_tab: Vec<u32>,
    bottom: usize,
    top: usize,
}

impl fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteLattice")
            .field("m", &self.m)
            .field("labels", &self.labels)
            .field("covers", &self.covers())
            .finish()
    }
}

impl FiniteLattice {
    /// Validates `leq` (an `m × m` relation, `leq[a][b]` meaning `a ≤ b`) as a
    /// lattice order.
    pub fn from_order(m: usize, leq: &[Vec<bool>], labels: Vec<String>) -> Result<Self> {
        if leq.len() != m || leq.iter().any(|row| row.len() != m) {
            return Err(Error::NotAPoset(format!("relation is not {m}×{m}")));
        }
        Self::from_fn(m, labels, |a, b| leq[a][b])
    }

    /// Like [`from_order`](Self::from_order) with the relation given as a predicate.
    pub fn from_fn(m: usize, labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if m == 0 {
            return Err(Error::NotALattice {
                a: 0,
                b: 0,
                missing: "element (empty poset)",
            });
        }
        if labels.len() != m {
            return Err(Error::NotAPoset(format!(
                "{} labels for {m} elements",
                labels.len()
            )));
        }
        let mut down = vec![Bits::new(m); m];
        let mut up = vec![Bits::new(m); m];
        for a in 0..m {
            for b in 0..m {
                if leq(a, b) {
                    down[b].set(a);
                    up[a].set(b);
                }
            }
        }
        for a in 0..m {
            if !down[a].get(a) {
                return Err(Error::NotAPoset(format!("not reflexive at {a}")));
            }
            for b in down[a].iter() {
                if b != a && down[b].get(a) {
                    return Err(Error::NotAPoset(format!(
                        "not antisymmetric: {a} and {b}"
                    )));
                }
                if !down[b].is_subset(&down[a]) {
                    return Err(Error::NotAPoset(format!(
                        "not transitive below {b} <= {a}"
                    )));
                }
            }
        }
        Self::from_closed(m, labels, down, up)
    }

    fn from_closed(m: usize, labels: Vec<String>, down: Vec<Bits>, up: Vec<Bits>) -> Result<Self> {
        let down_size: Vec<usize> = down.iter().map(Bits::count).collect();
        let up_size: Vec<usize> = up.iter().map(Bits::count).collect();

        let mut lower_covers = vec![Vec::new(); m];
        let mut upper_covers = vec![Vec::new(); m];
        for b in 0..m {
            for a in down[b].iter() {
                if a != b && up[a].and(&down[b]).count() == 2 {
                    lower_covers[b].push(a);
                    upper_covers[a].push(b);
                }
            }
        }

        let mut by_size: Vec<usize> = (0..m).collect();
        by_size.sort_by_key(|&x| down_size[x]);
        let mut height = vec![0; m];
        for &x in &by_size {
            height[x] = lower_covers[x]
                .iter()
                .map(|&c| height[c] + 1)
                .max()
                .unwrap_or(0);
        }

        let mut meet_tab = vec![0u32; m * m];
        let mut join_tab = vec![0u32; m * m];
        for a in 0..m {
            for b in a..m {
                let upper = up[a].and(&up[b]);
                let upper_count = upper.count();
                let join = upper
                    .iter()
                    .find(|&g| up_size[g] == upper_count)
                    .ok_or(Error::NotALattice { a, b, missing: "join" })?;
                let lower = down[a].and(&down[b]);
                let lower_count = lower.count();
                let meet = lower
                    .iter()
                    .find(|&g| down_size[g] == lower_count)
                    .ok_or(Error::NotALattice { a, b, missing: "meet" })?;
                meet_tab[a * m + b] = meet as u32;
                meet_tab[b * m + a] = meet as u32;
                join_tab[a * m + b] = join as u32;
                join_tab[b * m + a] = join as u32;
            }
        }
        let bottom = (0..m).find(|&x| up_size[x] == m).expect("lattice has a bottom");
        let top = (0..m).find(|&x| down_size[x] == m).expect("lattice has a top");

        Ok(FiniteLattice {
            m,
            labels,
            down,
            up,
            lower_covers,
            upper_covers,
            height,
            meet_tab,
            join_tab,
            bottom,
            top,
        })
    }

    /// The `len`-element chain `0 < 1 < … < len−1`.
    pub fn chain(len: usize) -> Self {
        let labels = (0..len).map(|i| i.to_string()).collect();
        Self::from_fn(len, labels, |a, b| a <= b).expect("a chain is a lattice")
    }

    /// The Boolean lattice of subsets of a `rank`-element set, indexed by bit mask.
    pub fn boolean(rank: usize) -> Self {
        let m = 1usize << rank;
        let labels = (0..m)
            .map(|x| crate::Subset(x as u64).label())
            .collect();
        Self::from_fn(m, labels, |a, b| a & !b == 0).expect("a powerset is a lattice")
    }

    /// The diamond M₃: `0 < a, b, c < 1`.
    pub fn diamond() -> Self {
        let labels = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
        Self::from_fn(5, labels, |x, y| x == y || x == 0 || y == 4).expect("M3 is a lattice")
    }

    /// The pentagon N₅: `0 < a < c < 1`, `0 < b < 1`.
    pub fn pentagon() -> Self {
        let labels = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
        Self::from_fn(5, labels, |x, y| x == y || x == 0 || y == 4 || (x == 1 && y == 3))
            .expect("N5 is a lattice")
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.m);
        self.labels = labels;
        self
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.down[b].get(a)
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// `a ≺ b`.
    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.upper_covers[a].contains(&b)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet_tab[a * self.m + b] as usize
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join_tab[a * self.m + b] as usize
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    /// Length of the longest chain from the bottom to `x`.
    pub fn height(&self, x: usize) -> usize {
        self.height[x]
    }

    /// All prime intervals, sorted.
    pub fn covers(&self) -> Vec<PrimeInterval> {
        let mut out: Vec<PrimeInterval> = (0..self.m)
            .flat_map(|a| self.upper_covers[a].iter().map(move |&b| PrimeInterval { a, b }))
            .collect();
        out.sort();
        out
    }

    /// Number of covers on a longest maximal chain.
    pub fn length(&self) -> usize {
        self.height[self.top]
    }

    pub fn join_irreducibles(&self) -> ElementSet<'_> {
        ElementSet::new(self, (0..self.m).filter(|&x| self.lower_covers[x].len() == 1).collect())
    }

    pub fn meet_irreducibles(&self) -> ElementSet<'_> {
        ElementSet::new(self, (0..self.m).filter(|&x| self.upper_covers[x].len() == 1).collect())
    }

    /// Size of the largest antichain of join-irreducible elements.
    pub fn join_width(&self) -> usize {
        self.join_irreducibles().width()
    }

    /// Lazily enumerates every maximal chain, bottom to top.
    pub fn maximal_chains(&self) -> MaximalChains<'_> {
        MaximalChains {
            lattice: self,
            stack: vec![(self.bottom, 0)],
            done: false,
        }
    }

    /// First pair `(a, b)` with `a ∧ b ≺ a` but not `b ≺ a ∨ b`.
    pub fn semimodularity_violation(&self) -> Option<(usize, usize)> {
        for a in 0..self.m {
            for b in 0..self.m {
                if self.is_cover(self.meet(a, b), a) && !self.is_cover(b, self.join(a, b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_semimodular(&self) -> bool {
        self.semimodularity_violation().is_none()
    }

    /// First triple with `a ∧ b = a ∧ c` but `a ∧ b ≠ a ∧ (b ∨ c)`.
    pub fn meet_semidistributivity_violation(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.m {
            for b in 0..self.m {
                let ab = self.meet(a, b);
                for c in b + 1..self.m {
                    if self.meet(a, c) == ab && self.meet(a, self.join(b, c)) != ab {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_meet_semidistributive(&self) -> bool {
        self.meet_semidistributivity_violation().is_none()
    }

    /// Join of the upper covers of `x`.
    pub fn upstar(&self, x: usize) -> Result<usize> {
        if x == self.top {
            return Err(Error::Domain(format!(
                "upstar is undefined at the top element {x}"
            )));
        }
        Ok(self.upper_covers[x]
            .iter()
            .fold(x, |acc, &c| self.join(acc, c)))
    }

    fn elements_between(&self, x: usize, y: usize) -> Vec<usize> {
        self.up[x].and(&self.down[y]).iter().collect()
    }

    /// First triple of `elements` violating `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`.
    /// The elements must form a sublattice.
    fn distributivity_violation_in(&self, elements: &[usize]) -> Option<(usize, usize, usize)> {
        for &a in elements {
            for &b in elements {
                for &c in elements {
                    if self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        let all: Vec<usize> = (0..self.m).collect();
        self.distributivity_violation_in(&all).is_none()
    }

    /// First `x ≠ 1` whose interval `[x, x*]` is not distributive.
    pub fn join_distributivity_violation(&self) -> Option<usize> {
        (0..self.m).filter(|&x| x != self.top).find(|&x| {
            let star = self.upstar(x).expect("x is not the top");
            self.distributivity_violation_in(&self.elements_between(x, star))
                .is_some()
        })
    }

    pub fn is_join_distributive(&self) -> bool {
        self.join_distributivity_violation().is_none()
    }

    /// The interval `[x, y]` as a lattice in its own right. Element order
    /// follows the parent's indices; labels are carried over.
    pub fn interval(&self, x: usize, y: usize) -> Result<FiniteLattice> {
        if !self.leq(x, y) {
            return Err(Error::Domain(format!("{x} is not below {y}")));
        }
        let elems = self.elements_between(x, y);
        let labels = elems.iter().map(|&e| self.labels[e].clone()).collect();
        FiniteLattice::from_fn(elems.len(), labels, |a, b| self.leq(elems[a], elems[b]))
    }

    /// A copy with element `i` of the result being element `order[i]` of `self`.
    pub fn reindexed(&self, order: &[usize]) -> Result<FiniteLattice> {
        if order.len() != self.m {
            return Err(Error::Domain("reindexing must be a permutation".into()));
        }
        let mut seen = vec![false; self.m];
        for &o in order {
            if o >= self.m || std::mem::replace(&mut seen[o], true) {
                return Err(Error::Domain("reindexing must be a permutation".into()));
            }
        }
        let labels = order.iter().map(|&o| self.labels[o].clone()).collect();
        FiniteLattice::from_fn(self.m, labels, |a, b| self.leq(order[a], order[b]))
    }

    fn signature(&self, x: usize) -> (usize, usize, usize) {
        (
            self.height[x],
            self.lower_covers[x].len(),
            self.upper_covers[x].len(),
        )
    }

    /// An order isomorphism `f` with `f[x]` the image in `other` of `x`, if any.
    ///
    /// Backtracks bottom-up over candidates with matching
    /// (height, lower-cover count, upper-cover count), smallest index first.
    pub fn is_isomorphic(&self, other: &FiniteLattice) -> Option<Vec<usize>> {
        if self.m != other.m || self.length() != other.length() {
            return None;
        }
        let mut sig_a: Vec<_> = (0..self.m).map(|x| self.signature(x)).collect();
        let mut sig_b: Vec<_> = (0..other.m).map(|x| other.signature(x)).collect();
        let by_sig_b: Vec<Vec<usize>> = {
            let mut classes: Vec<((usize, usize, usize), Vec<usize>)> = Vec::new();
            for y in 0..other.m {
                match classes.iter_mut().find(|(s, _)| *s == sig_b[y]) {
                    Some((_, v)) => v.push(y),
                    None => classes.push((sig_b[y], vec![y])),
                }
            }
            (0..self.m)
                .map(|x| {
                    classes
                        .iter()
                        .find(|(s, _)| *s == sig_a[x])
                        .map(|(_, v)| v.clone())
                        .unwrap_or_default()
                })
                .collect()
        };
        sig_a.sort();
        sig_b.sort();
        if sig_a != sig_b {
            return None;
        }

        let mut order: Vec<usize> = (0..self.m).collect();
        order.sort_by_key(|&x| (self.height[x], by_sig_b[x].len(), x));

        let mut map = vec![usize::MAX; self.m];
        let mut used = vec![false; other.m];
        if self.extend_iso(other, &order, 0, &by_sig_b, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    fn extend_iso(
        &self,
        other: &FiniteLattice,
        order: &[usize],
        depth: usize,
        candidates: &[Vec<usize>],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&x) = order.get(depth) else {
            return true;
        };
        for &y in &candidates[x] {
            if used[y] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&u| {
                let fu = map[u];
                self.leq(u, x) == other.leq(fu, y) && self.leq(x, u) == other.leq(y, fu)
            });
            if !consistent {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if self.extend_iso(other, order, depth + 1, candidates, map, used) {
                return true;
            }
            used[y] = false;
            map[x] = usize::MAX;
        }
        false
    }

    pub fn to_doc(&self) -> LatticeDoc {
        LatticeDoc {
            m: self.m,
            labels: self.labels.clone(),
            covers: self.covers().into_iter().map(|p| [p.a, p.b]).collect(),
        }
    }

    /// Rebuilds the order as the reflexive-transitive closure of the covers.
    pub fn from_doc(doc: &LatticeDoc) -> Result<Self> {
        let m = doc.m;
        if doc.labels.len() != m {
            return Err(Error::Parse(format!(
                "{} labels for m = {m}",
                doc.labels.len()
            )));
        }
        let mut succ = vec![Vec::new(); m];
        for &[a, b] in &doc.covers {
            if a >= m || b >= m {
                return Err(Error::Parse(format!("cover [{a},{b}] out of range")));
            }
            succ[a].push(b);
        }
        let mut up = vec![Bits::new(m); m];
        for (start, reach) in up.iter_mut().enumerate() {
            let mut stack = vec![start];
            reach.set(start);
            while let Some(x) = stack.pop() {
                for &y in &succ[x] {
                    if !reach.get(y) {
                        reach.set(y);
                        stack.push(y);
                    }
                }
            }
        }
        Self::from_fn(m, doc.labels.clone(), |a, b| up[a].get(b))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("lattice document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: LatticeDoc =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_doc(&doc)
    }
}

/// Serialized lattice: element count, labels and 0-based cover pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDoc {
    pub m: usize,
    pub labels: Vec<String>,
    pub covers: Vec<[usize; 2]>,
}

/// A subset of a lattice's elements with the induced order.
#[derive(Clone, Debug)]
pub struct ElementSet<'a> {
    lattice: &'a FiniteLattice,
    elements: Vec<usize>,
}

impl<'a> ElementSet<'a> {
    fn new(lattice: &'a FiniteLattice, elements: Vec<usize>) -> Self {
        ElementSet { lattice, elements }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.contains(&x)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.lattice.leq(a, b)
    }

    pub fn labels(&self) -> Vec<&'a str> {
        self.elements.iter().map(|&x| self.lattice.label(x)).collect()
    }

    /// Largest antichain, by branch and bound over the incomparability graph.
    pub fn width(&self) -> usize {
        let l = self.lattice;
        let n = self.elements.len();
        let incomparable: Vec<Vec<bool>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let (a, b) = (self.elements[i], self.elements[j]);
                        i != j && !l.leq(a, b) && !l.leq(b, a)
                    })
                    .collect()
            })
            .collect();
        let mut best = 0;
        grow_antichain(&incomparable, 0, (0..n).collect(), &mut best);
        best
    }
}

fn grow_antichain(incomparable: &[Vec<bool>], size: usize, candidates: Vec<usize>, best: &mut usize) {
    if size > *best {
        *best = size;
    }
    for (pos, &v) in candidates.iter().enumerate() {
        if size + candidates.len() - pos <= *best {
            return;
        }
        let rest: Vec<usize> = candidates[pos + 1..]
            .iter()
            .copied()
            .filter(|&w| incomparable[v][w])
            .collect();
        grow_antichain(incomparable, size + 1, rest, best);
    }
}

/// Depth-first iterator over maximal chains; see [`FiniteLattice::maximal_chains`].
pub struct MaximalChains<'a> {
    lattice: &'a FiniteLattice,
    // (element, index of the next upper cover to try)
    stack: Vec<(usize, usize)>,
    done: bool,
}

impl Iterator for MaximalChains<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        loop {
            let &(x, next) = self.stack.last()?;
            let covers = self.lattice.upper_covers(x);
            if covers.is_empty() {
                let chain = self.stack.iter().map(|&(e, _)| e).collect();
                self.stack.pop();
                if self.stack.is_empty() {
                    self.done = true;
                }
                return Some(chain);
            }
            if next < covers.len() {
                self.stack.last_mut().unwrap().1 += 1;
                self.stack.push((covers[next], 0));
            } else {
                self.stack.pop();
                if self.stack.is_empty() {
                    self.done = true;
                    return None;
                }
            }
        }
    }
}
