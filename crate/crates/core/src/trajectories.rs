//! Trajectories: classes of prime intervals under the equivalence generated
//! by "opposite sides of a covering square".

use std::fmt;

use serde::Serialize;

use crate::lattice::{FiniteLattice, PrimeInterval};
use crate::{Error, Result};

/// `a ≺ b, a ≺ c, b ≺ d, c ≺ d` with `b ≠ c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoveringSquare {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

/// Every covering square, each reported once with `b < c`.
pub fn covering_squares(l: &FiniteLattice) -> Vec<CoveringSquare> {
    let mut out = Vec::new();
    for a in 0..l.size() {
        let ups = l.upper_covers(a);
        for (i, &b) in ups.iter().enumerate() {
            for &c in &ups[i + 1..] {
                let d = l.join(b, c);
                if l.is_cover(b, d) && l.is_cover(c, d) {
                    let (b, c) = if b < c { (b, c) } else { (c, b) };
                    out.push(CoveringSquare { a, b, c, d });
                }
            }
        }
    }
    out
}

/// `[a,b]` and `[c,d]` are opposite sides of a covering square.
pub fn consecutive(l: &FiniteLattice, p: PrimeInterval, q: PrimeInterval) -> bool {
    let sides = |lo: PrimeInterval, hi: PrimeInterval| {
        lo.b != hi.a && l.is_cover(lo.a, lo.b) && l.is_cover(hi.a, hi.b) && l.is_cover(lo.a, hi.a) && l.is_cover(lo.b, hi.b)
    };
    sides(p, q) || sides(q, p)
}

/// `b ≤ c` or `d ≤ a` for distinct `[a,b]`, `[c,d]`.
pub fn comparable(l: &FiniteLattice, p: PrimeInterval, q: PrimeInterval) -> bool {
    p != q && (l.leq(p.b, q.a) || l.leq(q.b, p.a))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// The partition of `Prim L` into trajectories.
#[derive(Clone, Debug)]
pub struct Trajectories {
    intervals: Vec<PrimeInterval>,
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl Trajectories {
    /// Prime intervals in sorted order; blocks refer to positions in this list.
    pub fn intervals(&self) -> &[PrimeInterval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Trajectory index of the interval `p`.
    pub fn block_of(&self, p: PrimeInterval) -> Option<usize> {
        self.intervals
            .binary_search(&p)
            .ok()
            .map(|pos| self.block_of[pos])
    }

    /// Each trajectory as its list of prime intervals. Blocks are numbered by
    /// their smallest interval.
    pub fn blocks(&self) -> impl Iterator<Item = Vec<PrimeInterval>> + '_ {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&pos| self.intervals[pos]).collect())
    }
}

pub fn trajectories(l: &FiniteLattice) -> Trajectories {
    let intervals = l.covers();
    let pos = |p: PrimeInterval| intervals.binary_search(&p).expect("cover is listed");
    let mut uf = UnionFind::new(intervals.len());
    for sq in covering_squares(l) {
        let ab = pos(PrimeInterval { a: sq.a, b: sq.b });
        let cd = pos(PrimeInterval { a: sq.c, b: sq.d });
        let ac = pos(PrimeInterval { a: sq.a, b: sq.c });
        let bd = pos(PrimeInterval { a: sq.b, b: sq.d });
        uf.union(ab, cd);
        uf.union(ac, bd);
    }
    let mut root_block = vec![usize::MAX; intervals.len()];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut block_of = vec![0; intervals.len()];
    for (i, slot) in block_of.iter_mut().enumerate() {
        let r = uf.find(i);
        if root_block[r] == usize::MAX {
            root_block[r] = blocks.len();
            blocks.push(Vec::new());
        }
        *slot = root_block[r];
        blocks[root_block[r]].push(i);
    }
    Trajectories {
        intervals,
        block_of,
        blocks,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub pass: bool,
    pub witness: Option<String>,
}

impl ConditionReport {
    fn pass() -> Self {
        ConditionReport {
            pass: true,
            witness: None,
        }
    }

    fn fail(witness: String) -> Self {
        ConditionReport {
            pass: false,
            witness: Some(witness),
        }
    }
}

/// Every trajectory meets every maximal chain in exactly one prime interval.
pub fn check_condition_ii(l: &FiniteLattice) -> ConditionReport {
    check_condition_ii_with(l, &trajectories(l))
}

pub fn check_condition_ii_with(l: &FiniteLattice, traj: &Trajectories) -> ConditionReport {
    let mut counts = vec![0usize; traj.len()];
    for chain in l.maximal_chains() {
        counts.iter_mut().for_each(|c| *c = 0);
        for step in chain.windows(2) {
            let p = PrimeInterval { a: step[0], b: step[1] };
            let t = traj.block_of(p).expect("chain steps are covers");
            counts[t] += 1;
            if counts[t] == 2 {
                return ConditionReport::fail(format!(
                    "maximal chain {} meets trajectory {t} at least twice",
                    chain_labels(l, &chain)
                ));
            }
        }
        if let Some(t) = counts.iter().position(|&c| c == 0) {
            return ConditionReport::fail(format!(
                "maximal chain {} misses trajectory {t}",
                chain_labels(l, &chain)
            ));
        }
    }
    ConditionReport::pass()
}

fn chain_labels(l: &FiniteLattice, chain: &[usize]) -> String {
    chain.iter().map(|&x| l.label(x)).collect::<Vec<_>>().join(" ≺ ")
}

/// No trajectory contains two distinct comparable prime intervals.
pub fn check_condition_iii(l: &FiniteLattice) -> ConditionReport {
    check_condition_iii_with(l, &trajectories(l))
}

pub fn check_condition_iii_with(l: &FiniteLattice, traj: &Trajectories) -> ConditionReport {
    for (t, block) in traj.blocks().enumerate() {
        for (i, &p) in block.iter().enumerate() {
            for &q in &block[i + 1..] {
                if comparable(l, p, q) {
                    return ConditionReport::fail(format!(
                        "trajectory {t} contains comparable [{},{}] and [{},{}]",
                        l.label(p.a),
                        l.label(p.b),
                        l.label(q.a),
                        l.label(q.b)
                    ));
                }
            }
        }
    }
    ConditionReport::pass()
}

/// The three equivalent conditions for a semimodular lattice of finite length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub semimodular: bool,
    pub jd: bool,
    pub cond_ii: bool,
    pub cond_iii: bool,
    pub witness: Option<String>,
}

impl CorollaryReport {
    pub fn agree(&self) -> bool {
        self.jd == self.cond_ii && self.cond_ii == self.cond_iii
    }

    pub fn all_hold(&self) -> bool {
        self.jd && self.cond_ii && self.cond_iii
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for CorollaryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "semimodular:                {}", self.semimodular)?;
        writeln!(f, "(i)   join-distributive:    {}", self.jd)?;
        writeln!(f, "(ii)  one step per chain:   {}", self.cond_ii)?;
        writeln!(f, "(iii) no comparable pairs:  {}", self.cond_iii)?;
        if let Some(w) = &self.witness {
            writeln!(f, "witness: {w}")?;
        }
        Ok(())
    }
}

/// Evaluates (i) join-distributivity, (ii) and (iii) on a semimodular lattice.
pub fn corollary_report(l: &FiniteLattice) -> Result<CorollaryReport> {
    if let Some((a, b)) = l.semimodularity_violation() {
        return Err(Error::NotSemimodular { a, b });
    }
    let traj = trajectories(l);
    let jd_violation = l.join_distributivity_violation();
    let ii = check_condition_ii_with(l, &traj);
    let iii = check_condition_iii_with(l, &traj);
    let witness = jd_violation
        .map(|x| format!("[{0}, {0}*] is not distributive", l.label(x)))
        .or_else(|| ii.witness.clone())
        .or_else(|| iii.witness.clone());
    Ok(CorollaryReport {
        semimodular: true,
        jd: jd_violation.is_none(),
        cond_ii: ii.pass,
        cond_iii: iii.pass,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ej::build_ejlat;
    use crate::fixtures::fix_a;

    fn pi(a: usize, b: usize) -> PrimeInterval {
        PrimeInterval { a, b }
    }

    #[test]
    fn consecutiveness() {
        // B₂ by mask: 0, a=1, b=2, 1=3
        let b2 = FiniteLattice::boolean(2);
        assert!(consecutive(&b2, pi(0, 1), pi(2, 3)));
        assert!(consecutive(&b2, pi(2, 3), pi(0, 1)));
        assert!(!consecutive(&b2, pi(0, 1), pi(1, 3)));
        let c = FiniteLattice::chain(4);
        for p in c.covers() {
            for q in c.covers() {
                assert!(!consecutive(&c, p, q));
            }
        }
        let m3 = FiniteLattice::diamond();
        assert!(consecutive(&m3, pi(0, 1), pi(2, 4)));
    }

    #[test]
    fn trajectory_counts() {
        assert_eq!(trajectories(&FiniteLattice::boolean(2)).len(), 2);
        let m3 = trajectories(&FiniteLattice::diamond());
        assert_eq!(m3.len(), 1);
        assert_eq!(m3.blocks().next().unwrap().len(), 6);
        let ej = build_ejlat(&fix_a()).unwrap();
        assert_eq!(trajectories(ej.lattice()).len(), 4);
        assert_eq!(trajectories(&FiniteLattice::chain(5)).len(), 4);
    }

    #[test]
    fn trajectories_partition_the_prime_intervals() {
        let ej = build_ejlat(&fix_a()).unwrap();
        let t = trajectories(ej.lattice());
        let mut all: Vec<PrimeInterval> = t.blocks().flatten().collect();
        all.sort();
        assert_eq!(all, ej.lattice().covers());
    }

    #[test]
    fn comparability() {
        let c = FiniteLattice::chain(3);
        assert!(comparable(&c, pi(0, 1), pi(1, 2)));
        assert!(!comparable(&c, pi(0, 1), pi(0, 1)));
        let b2 = FiniteLattice::boolean(2);
        assert!(!comparable(&b2, pi(0, 1), pi(2, 3)));
        let m3 = FiniteLattice::diamond();
        assert!(comparable(&m3, pi(0, 1), pi(1, 4)));
    }

    #[test]
    fn condition_ii() {
        let ej = build_ejlat(&fix_a()).unwrap();
        assert!(check_condition_ii(ej.lattice()).pass);
        let m3 = check_condition_ii(&FiniteLattice::diamond());
        assert!(!m3.pass);
        assert!(m3.witness.unwrap().contains("twice"));
        assert!(check_condition_ii(&FiniteLattice::chain(6)).pass);
    }

    #[test]
    fn condition_iii() {
        let ej = build_ejlat(&fix_a()).unwrap();
        assert!(check_condition_iii(ej.lattice()).pass);
        let m3 = check_condition_iii(&FiniteLattice::diamond());
        assert!(!m3.pass);
        assert!(check_condition_iii(&FiniteLattice::boolean(2)).pass);
    }

    #[test]
    fn corollary() {
        let ej = build_ejlat(&fix_a()).unwrap();
        let r = corollary_report(ej.lattice()).unwrap();
        assert!(r.all_hold() && r.agree());

        let r = corollary_report(&FiniteLattice::diamond()).unwrap();
        assert!((r.jd, r.cond_ii, r.cond_iii) == (false, false, false));
        assert!(r.agree());

        assert!(corollary_report(&FiniteLattice::boolean(3)).unwrap().all_hold());
        assert!(matches!(
            corollary_report(&FiniteLattice::pentagon()),
            Err(Error::NotSemimodular { .. })
        ));
    }

    #[test]
    fn report_json_shape() {
        let r = corollary_report(&FiniteLattice::chain(2)).unwrap();
        assert_eq!(
            r.to_json(),
            r#"{"semimodular":true,"jd":true,"cond_ii":true,"cond_iii":true,"witness":null}"#
        );
    }
}
