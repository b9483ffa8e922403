//! Advisory syntactic checker for the implication edges.
//!
//! Each Hasse edge of the main lattice is an implication between mode maps.
//! This module tries to rederive every edge from a small calculus of
//! one-way weakening moves on quantifier strings:
//!
//! * `∀x → ∃x` (weakening a universal to an existential),
//! * inserting `∃as` when `as` is absent (the constant sequence witnesses it),
//! * inserting a contiguous `∀cp` or `∀cp ∀cs` block when `cp` is absent
//!   (a supremal-mass comparison dominates any pointwise comparison),
//! * swapping adjacent `∃x ∀y` to `∀y ∃x` (prenex weakening),
//!
//! together with the free both-way move of commuting adjacent same-polarity
//! quantifiers. Edges the calculus cannot reach are flagged as data-only;
//! the transcribed cover data stays authoritative either way.

use super::enumeration::logical_normal_form;
use super::lattice::MAIN_COVERS;
use super::{class_members, ex, fa, ModeClass, ModeDefinition, Polarity, Quantifier, Variable};
use std::collections::{BTreeSet, VecDeque};

/// Result of attempting to rederive one cover edge.
#[derive(Debug, Clone)]
pub struct EdgeDerivation {
    pub from: ModeClass,
    pub to: ModeClass,
    pub derived: bool,
}

fn weakenings(d: &ModeDefinition) -> Vec<ModeDefinition> {
    let qs = d.quantifiers();
    let mut out = Vec::new();
    // universal -> existential
    for (i, q) in qs.iter().enumerate() {
        if q.polarity == Polarity::ForAll {
            let mut next = qs.to_vec();
            next[i] = ex(q.variable);
            if let Ok(nd) = ModeDefinition::new(next) {
                out.push(nd);
            }
        }
    }
    // insert exists-as anywhere
    if !d.contains_variable(Variable::As) && qs.len() < 4 {
        for i in 0..=qs.len() {
            let mut next = qs.to_vec();
            next.insert(i, ex(Variable::As));
            if let Ok(nd) = ModeDefinition::new(next) {
                out.push(nd);
            }
        }
    }
    // replace the supremal comparison: insert a forall-cp or forall-cp forall-cs block
    if !d.contains_variable(Variable::Cp) {
        for i in 0..=qs.len() {
            if qs.len() < 4 {
                let mut next = qs.to_vec();
                next.insert(i, fa(Variable::Cp));
                if let Ok(nd) = ModeDefinition::new(next) {
                    out.push(nd);
                }
            }
            if qs.len() < 3 {
                let mut next = qs.to_vec();
                next.insert(i, fa(Variable::Cs));
                next.insert(i, fa(Variable::Cp));
                if let Ok(nd) = ModeDefinition::new(next) {
                    out.push(nd);
                }
            }
        }
    }
    // adjacent exists-forall swap
    for i in 0..qs.len().saturating_sub(1) {
        if qs[i].polarity == Polarity::Exists && qs[i + 1].polarity == Polarity::ForAll {
            let mut next = qs.to_vec();
            next.swap(i, i + 1);
            if let Ok(nd) = ModeDefinition::new(next) {
                out.push(nd);
            }
        }
    }
    out
}

/// BFS over the weakening calculus, modulo logical normal form.
fn reachable(from: &[ModeDefinition], to: &BTreeSet<ModeDefinition>) -> bool {
    let mut seen: BTreeSet<ModeDefinition> = BTreeSet::new();
    let mut queue: VecDeque<ModeDefinition> = VecDeque::new();
    for d in from {
        let nf = logical_normal_form(d);
        if seen.insert(nf.clone()) {
            queue.push_back(nf);
        }
    }
    while let Some(d) = queue.pop_front() {
        if to.contains(&d) {
            return true;
        }
        // expand from every string logically equivalent to d
        for variant in logical_class_of(&d) {
            for next in weakenings(&variant) {
                let nf = logical_normal_form(&next);
                if seen.insert(nf.clone()) {
                    queue.push_back(nf);
                }
            }
        }
    }
    false
}

/// All strings with the same logical normal form (same-polarity shuffles).
fn logical_class_of(d: &ModeDefinition) -> Vec<ModeDefinition> {
    let target = logical_normal_form(d);
    let mut out = Vec::new();
    permute(&mut d.quantifiers().to_vec(), 0, &mut |qs| {
        if let Ok(cand) = ModeDefinition::new(qs.to_vec()) {
            if logical_normal_form(&cand) == target {
                out.push(cand);
            }
        }
    });
    out.sort();
    out.dedup();
    out
}

fn permute(qs: &mut Vec<Quantifier>, k: usize, f: &mut impl FnMut(&[Quantifier])) {
    if k == qs.len() {
        f(qs);
        return;
    }
    for i in k..qs.len() {
        qs.swap(k, i);
        permute(qs, k + 1, f);
        qs.swap(k, i);
    }
}

/// Attempts to rederive every Hasse cover of the main lattice.
pub fn derive_edges() -> Vec<EdgeDerivation> {
    MAIN_COVERS
        .iter()
        .map(|&(from, to)| {
            let sources = class_members(from);
            let targets: BTreeSet<ModeDefinition> = class_members(to)
                .iter()
                .map(logical_normal_form)
                .collect();
            EdgeDerivation {
                from,
                to,
                derived: reachable(&sources, &targets),
            }
        })
        .collect()
}

/// Soundness guard: the calculus must not prove implications the lattice
/// order denies. Returns offending class pairs, empty when sound.
pub fn undeclared_derivations() -> Vec<(ModeClass, ModeClass)> {
    let lattice = super::build_main_lattice();
    let mut bad = Vec::new();
    for from in ModeClass::ALL {
        for to in ModeClass::ALL {
            if from == to {
                continue;
            }
            let targets: BTreeSet<ModeDefinition> =
                class_members(to).iter().map(logical_normal_form).collect();
            if reachable(&class_members(from), &targets)
                && !lattice.implies(lattice.node_of(from), lattice.node_of(to))
            {
                bad.push((from, to));
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_edges_derivable() {
        for d in derive_edges() {
            assert!(d.derived, "edge {} -> {} should be derivable", d.from, d.to);
        }
    }

    #[test]
    fn calculus_is_sound_against_the_order() {
        assert!(undeclared_derivations().is_empty());
    }
}
