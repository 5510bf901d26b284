//! Weak primary decomposition, the laskerian check and Evans reports.

use std::collections::HashMap;

use crate::algebra::{ElementId, FiniteB1Algebra};
use crate::error::{Error, Result};
use crate::ideal::{
    generated_ideal, ideal_intersect, ideal_sum, maximal_elements, radical, saturation,
    sort_canonical, Ideal,
};
use crate::set::ElementSet;
use crate::spectrum::{divisor_set, is_prime, IdealLattice};

/// One recursion node of [`weak_decompose`]: `ideal` was split along `u·v ∈ ideal`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitStep {
    pub ideal: Ideal,
    pub u: ElementId,
    pub v: ElementId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionResult {
    pub input: Ideal,
    /// Saturated primes, canonical order.
    pub components: Vec<Ideal>,
    pub irredundant: bool,
    pub split_trace: Vec<SplitStep>,
}

impl DecompositionResult {
    pub fn intersection(&self, alg: &FiniteB1Algebra) -> Ideal {
        intersect_all(alg, &self.components)
    }
}

pub(crate) fn intersect_all(alg: &FiniteB1Algebra, family: &[Ideal]) -> Ideal {
    family
        .iter()
        .fold(Ideal::whole(alg), |acc, i| ideal_intersect(&acc, i))
}

/// True when no member contains the intersection of the others.
fn is_irredundant(alg: &FiniteB1Algebra, family: &[Ideal]) -> bool {
    family.len() < 2
        || (0..family.len()).all(|k| {
            let others: Vec<Ideal> = family
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, q)| *q)
                .collect();
            !intersect_all(alg, &others).is_subset(&family[k])
        })
}

fn require_proper(alg: &FiniteB1Algebra, ideal: &Ideal) -> Result<()> {
    if ideal.is_proper(alg) {
        Ok(())
    } else {
        Err(Error::WholeAlgebra)
    }
}

fn require_saturated(alg: &FiniteB1Algebra, ideal: &Ideal) -> Result<()> {
    let extra = saturation(alg, ideal).members().difference(ideal.members());
    match extra.iter().next() {
        None => Ok(()),
        Some(a) => {
            let i = ideal
                .members()
                .iter()
                .find(|&i| alg.add(a, i) == i)
                .expect("saturation witness");
            Err(Error::NotSaturated(
                ideal.format(alg),
                format!(
                    "{0} + {1} = {1} but {0} is missing",
                    alg.name(a),
                    alg.name(i)
                ),
            ))
        }
    }
}

fn require_radical(alg: &FiniteB1Algebra, ideal: &Ideal) -> Result<()> {
    let extra = radical(alg, ideal).members().difference(ideal.members());
    match extra.iter().next() {
        None => Ok(()),
        Some(a) => {
            let n = (1..=alg.order())
                .find(|&n| ideal.contains(alg.pow(a, n)))
                .expect("radical witness");
            Err(Error::NotRadical(
                ideal.format(alg),
                format!("{}^{n} lies in the ideal but {0} does not", alg.name(a)),
            ))
        }
    }
}

/// Smallest `(u, v)` in index order with `u, v ∉ J` and `uv ∈ J`.
fn split_pair(alg: &FiniteB1Algebra, j: &Ideal) -> Option<(ElementId, ElementId)> {
    let outside: Vec<ElementId> = alg.elements().filter(|&e| !j.contains(e)).collect();
    outside.iter().find_map(|&u| {
        outside
            .iter()
            .find(|&&v| j.contains(alg.mul(u, v)))
            .map(|&v| (u, v))
    })
}

/// Writes a saturated radical proper ideal as a finite intersection of
/// saturated primes.
///
/// A non-prime `J` is split along the smallest pair `u, v ∉ J` with `uv ∈ J`
/// into `K = sat(J + Au)` and `L = sat(J + Av)`; then `J = r(K) ∩ r(L)` and
/// both radicals are saturated, radical, proper and strictly larger than `J`,
/// so the recursion terminates.
pub fn weak_decompose(alg: &FiniteB1Algebra, j: &Ideal) -> Result<DecompositionResult> {
    require_proper(alg, j)?;
    require_saturated(alg, j)?;
    require_radical(alg, j)?;

    let mut components = Vec::new();
    let mut trace = Vec::new();
    let mut done: HashMap<ElementSet, ()> = HashMap::new();
    let mut stack = vec![*j];
    while let Some(current) = stack.pop() {
        if done.insert(current.members(), ()).is_some() {
            continue;
        }
        let Some((u, v)) = split_pair(alg, &current) else {
            components.push(current);
            continue;
        };
        trace.push(SplitStep {
            ideal: current,
            u,
            v,
        });
        let grow = |g: ElementId| {
            let k = saturation(
                alg,
                &ideal_sum(
                    alg,
                    &current,
                    &generated_ideal(alg, ElementSet::singleton(g)),
                ),
            );
            radical(alg, &k)
        };
        let (k, l) = (grow(u), grow(v));
        for part in [&k, &l] {
            if !part.is_proper(alg) || part.members() == current.members() {
                return Err(Error::Internal(format!(
                    "split of {{{}}} produced {{{}}}",
                    current.format(alg),
                    part.format(alg)
                )));
            }
            require_saturated(alg, part)
                .map_err(|e| Error::Internal(format!("radical of a saturated ideal: {e}")))?;
        }
        // L first so K is expanded first.
        stack.push(l);
        stack.push(k);
    }
    sort_canonical(&mut components);
    components.dedup();
    let result = DecompositionResult {
        input: *j,
        irredundant: is_irredundant(alg, &components),
        components,
        split_trace: trace,
    };
    if result.intersection(alg) != *j {
        return Err(Error::Internal(format!(
            "components of {{{}}} intersect to {{{}}}",
            j.format(alg),
            result.intersection(alg).format(alg)
        )));
    }
    Ok(result)
}

/// `r(I) = P₁ ∩ … ∩ Pₙ` for a saturated `I` with `r(I)` proper.
/// The result's `input` is `r(I)`.
pub fn radical_decomposition(alg: &FiniteB1Algebra, i: &Ideal) -> Result<DecompositionResult> {
    require_saturated(alg, i)?;
    let r = radical(alg, i);
    require_proper(alg, &r)?;
    weak_decompose(alg, &r)
}

/// Drops components containing the intersection of the remaining ones,
/// largest first.
pub fn minimalize(alg: &FiniteB1Algebra, d: &DecompositionResult) -> DecompositionResult {
    let mut kept = d.components.clone();
    let mut k = kept.len();
    while k > 0 {
        k -= 1;
        if kept.len() < 2 {
            break;
        }
        let others: Vec<Ideal> = kept
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, q)| *q)
            .collect();
        if intersect_all(alg, &others).is_subset(&kept[k]) {
            kept.remove(k);
        }
    }
    DecompositionResult {
        input: d.input,
        components: kept,
        irredundant: true,
        split_trace: d.split_trace.clone(),
    }
}

/// Laskerian verdict, together with the same verdict computed over all
/// (not necessarily saturated) primary ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaskerianReport {
    pub laskerian: bool,
    /// First proper saturated ideal (canonical order) with no decomposition.
    pub witness: Option<Ideal>,
    /// Each decomposable proper saturated ideal with an irredundant family of
    /// saturated primary ideals intersecting to it.
    pub table: Vec<(Ideal, Vec<Ideal>)>,
    pub saturated_primaries: Vec<Ideal>,
    pub unrestricted_laskerian: bool,
    pub unrestricted_witness: Option<Ideal>,
}

/// Closes `generators` under pairwise intersection, remembering for each
/// member one generating family.
fn meet_closure(generators: &[Ideal]) -> HashMap<ElementSet, Vec<Ideal>> {
    let mut family: HashMap<ElementSet, Vec<Ideal>> = HashMap::new();
    let mut order: Vec<ElementSet> = Vec::new();
    for q in generators {
        if family.insert(q.members(), vec![*q]).is_none() {
            order.push(q.members());
        }
    }
    let mut next = 0;
    while next < order.len() {
        let current = order[next];
        next += 1;
        for k in 0..order.len() {
            let meet = current.intersection(order[k]);
            if family.contains_key(&meet) {
                continue;
            }
            let mut parts = family[&current].clone();
            parts.extend(family[&order[k]].iter().copied());
            sort_canonical(&mut parts);
            parts.dedup();
            family.insert(meet, parts);
            order.push(meet);
        }
    }
    family
}

pub fn laskerian_check(lattice: &IdealLattice<'_>) -> LaskerianReport {
    let alg = lattice.algebra();
    let targets = lattice.proper_saturated_ideals();
    let saturated_primaries = lattice.saturated_primary_ideals();
    let restricted = meet_closure(&saturated_primaries);
    let unrestricted = meet_closure(&lattice.primary_ideals());

    let mut table = Vec::new();
    let mut witness = None;
    for t in &targets {
        match restricted.get(&t.members()) {
            Some(parts) => {
                let d = DecompositionResult {
                    input: *t,
                    components: parts.clone(),
                    irredundant: false,
                    split_trace: Vec::new(),
                };
                table.push((*t, minimalize(alg, &d).components));
            }
            None if witness.is_none() => witness = Some(*t),
            None => {}
        }
    }
    let unrestricted_witness = targets
        .iter()
        .find(|t| !unrestricted.contains_key(&t.members()))
        .copied();
    LaskerianReport {
        laskerian: witness.is_none(),
        witness,
        table,
        saturated_primaries,
        unrestricted_laskerian: unrestricted_witness.is_none(),
        unrestricted_witness,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvansReport {
    pub ideal: Ideal,
    /// Maximal `I`-conductors `C_y(I)`, each with its smallest witness `y ∉ I`.
    pub maximal_conductors: Vec<(ElementId, Ideal)>,
    pub divisor_set: ElementSet,
    pub all_prime: bool,
    pub union_equals_divisor_set: bool,
    pub passed: bool,
}

/// Checks that the maximal `I`-conductors are saturated primes whose union is `D_A(I)`.
pub fn evans_report(alg: &FiniteB1Algebra, i: &Ideal) -> Result<EvansReport> {
    require_proper(alg, i)?;
    require_saturated(alg, i)?;
    let mut conductors: Vec<(ElementId, Ideal)> = Vec::new();
    for y in alg.elements().filter(|&y| !i.contains(y)) {
        let c = crate::ideal::conductor(alg, y, i);
        if !conductors.iter().any(|(_, d)| *d == c) {
            conductors.push((y, c));
        }
    }
    let family: Vec<Ideal> = conductors.iter().map(|(_, c)| *c).collect();
    let maximal = maximal_elements(&family);
    let mut maximal_conductors: Vec<(ElementId, Ideal)> = conductors
        .into_iter()
        .filter(|(_, c)| maximal.contains(c))
        .collect();
    maximal_conductors.sort_by(|a, b| a.1.members().canonical_cmp(&b.1.members()));
    let all_prime = maximal_conductors
        .iter()
        .all(|(_, c)| is_prime(alg, c) && crate::ideal::is_saturated(alg, c));
    let union = maximal_conductors
        .iter()
        .fold(ElementSet::EMPTY, |acc, (_, c)| acc.union(c.members()));
    let divisors = divisor_set(alg, i);
    let union_equals_divisor_set = union == divisors;
    Ok(EvansReport {
        ideal: *i,
        maximal_conductors,
        divisor_set: divisors,
        all_prime,
        union_equals_divisor_set,
        passed: all_prime && union_equals_divisor_set,
    })
}
