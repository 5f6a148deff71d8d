//! The isomorphism `ejlat(σ) → czlat(σ⁻¹)` sending a set `U` to its vector of
//! prefix depths `⟨U(1),…,U(k)⟩`, where `U(i)` is the largest `j` with
//! `{σ_i(1),…,σ_i(j)} ⊆ U`.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::cz::{build_czlat, is_eligible_with, CzLattice, EligibleTuple};
use crate::ej::{build_ejlat, EjLattice};
use crate::{Error, PermTuple, Result, Subset};

/// `⟨U(1),…,U(k)⟩` for an arbitrary subset `U`.
pub fn prefix_depths(sigma: &PermTuple, u: Subset) -> EligibleTuple {
    EligibleTuple(
        sigma
            .all_members()
            .iter()
            .map(|p| {
                p.images0()
                    .iter()
                    .take_while(|&&v| u.contains(v + 1))
                    .count()
            })
            .collect(),
    )
}

/// Union of the prefixes `{σ_i(1),…,σ_i(x_i)}`.
pub fn prefix_union(sigma: &PermTuple, x: &[usize]) -> Subset {
    sigma
        .all_members()
        .iter()
        .zip(x)
        .fold(Subset::EMPTY, |acc, (p, &depth)| {
            p.images0()[..depth]
                .iter()
                .fold(acc, |s, &v| s.insert(v + 1))
        })
}

/// `φ(U)`; `U` must belong to `ej`.
pub fn phi(ej: &EjLattice, u: Subset) -> Result<EligibleTuple> {
    if !ej.contains(u) {
        return Err(Error::Domain(format!("{} is not in ejlat(σ)", u.label())));
    }
    Ok(prefix_depths(ej.sigma(), u))
}

/// `φ⁻¹(x)`; `x` must be eligible for `σ⁻¹`.
pub fn phi_inverse(sigma: &PermTuple, x: &EligibleTuple) -> Result<Subset> {
    let table = sigma.inverse().pi_table();
    let n = sigma.degree();
    if x.arity() != sigma.k() || x.coords().iter().any(|&c| c > n) || !is_eligible_with(&table, x.coords()) {
        return Err(Error::Domain(format!("{x:?} is not an eligible σ⁻¹-tuple")));
    }
    Ok(prefix_union(sigma, x.coords()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropositionReport {
    pub pass: bool,
    pub violations: Vec<String>,
    #[serde(skip)]
    pub ej_size: usize,
    #[serde(skip)]
    pub cz_size: usize,
}

impl PropositionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for PropositionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "ejlat: {} elements, czlat: {} elements: {}",
            self.ej_size,
            self.cz_size,
            if self.pass { "PASS" } else { "FAIL" }
        )?;
        for v in &self.violations {
            writeln!(f, "  violation: {v}")?;
        }
        Ok(())
    }
}

/// Builds both lattices and checks that `φ` is a bijection, that `φ` and
/// `φ⁻¹` are monotone, and that `φ` carries joins and meets to joins and meets.
pub fn verify_proposition(sigma: &PermTuple) -> Result<PropositionReport> {
    let ej = build_ejlat(sigma)?;
    let cz = build_czlat(&sigma.inverse())?;
    Ok(check_phi(&ej, &cz))
}

/// The checks of [`verify_proposition`] on prebuilt lattices.
pub fn check_phi(ej: &EjLattice, cz: &CzLattice) -> PropositionReport {
    const MAX_LISTED: usize = 20;
    let sigma = ej.sigma();
    let mut violations = Vec::new();
    let mut note = |v: String| {
        if violations.len() < MAX_LISTED {
            violations.push(v);
        }
    };

    if cz.pi() != &sigma.inverse() {
        note("czlat was not built from σ⁻¹".to_string());
    }
    if ej.sets().len() != cz.tuples().len() {
        note(format!(
            "size mismatch: {} sets vs {} eligible tuples",
            ej.sets().len(),
            cz.tuples().len()
        ));
    }

    // φ on every set; image index in cz, if eligible.
    let mut image = Vec::with_capacity(ej.sets().len());
    let mut hit = HashSet::new();
    for &u in ej.sets() {
        let x = prefix_depths(sigma, u);
        match cz.index_of(&x) {
            Some(ix) => {
                if !hit.insert(ix) {
                    note(format!("φ is not injective: {} ↦ {}", u.label(), x.label()));
                }
                image.push(Some(ix));
            }
            None => {
                note(format!("φ({}) = {x:?} is not eligible", u.label()));
                image.push(None);
            }
        }
        if prefix_union(sigma, x.coords()) != u {
            note(format!("{} is not the union of its prefixes {x:?}", u.label()));
        }
    }
    if hit.len() != cz.tuples().len() {
        note(format!(
            "φ is not surjective: {} of {} tuples reached",
            hit.len(),
            cz.tuples().len()
        ));
    }

    for x in cz.tuples() {
        let v = prefix_union(sigma, x.coords());
        if !ej.contains(v) {
            note(format!("φ⁻¹({x:?}) = {} is not in ejlat", v.label()));
        } else if prefix_depths(sigma, v) != *x {
            note(format!("φ(φ⁻¹({x:?})) ≠ {x:?}"));
        }
    }

    let (el, cl) = (ej.lattice(), cz.lattice());
    let m = ej.sets().len();
    for a in 0..m {
        let Some(fa) = image[a] else { continue };
        for b in 0..m {
            let Some(fb) = image[b] else { continue };
            let subset = ej.sets()[a].is_subset(ej.sets()[b]);
            let below = cz.tuples()[fa].leq(&cz.tuples()[fb]);
            if subset != below {
                note(format!(
                    "monotonicity fails on {} ⊆ {}: {subset} vs {below}",
                    ej.sets()[a].label(),
                    ej.sets()[b].label()
                ));
            }
            if image[el.join(a, b)] != Some(cl.join(fa, fb)) {
                note(format!(
                    "join of {} and {} not preserved",
                    ej.sets()[a].label(),
                    ej.sets()[b].label()
                ));
            }
            if image[el.meet(a, b)] != Some(cl.meet(fa, fb)) {
                note(format!(
                    "meet of {} and {} not preserved",
                    ej.sets()[a].label(),
                    ej.sets()[b].label()
                ));
            }
        }
    }

    PropositionReport {
        pass: violations.is_empty(),
        violations,
        ej_size: ej.sets().len(),
        cz_size: cz.tuples().len(),
    }
}

/// `(set label, tuple label)` for every element of `ejlat(σ)`, in lattice order.
pub fn phi_table(ej: &EjLattice) -> Vec<(Subset, EligibleTuple)> {
    ej.sets()
        .iter()
        .map(|&u| (u, prefix_depths(ej.sigma(), u)))
        .collect()
}
