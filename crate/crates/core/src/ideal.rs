//! Ideals, closure operators and ideal arithmetic.

use std::collections::{HashSet, VecDeque};

use crate::algebra::{ElementId, FiniteB1Algebra};
use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Default ceiling on the algebra order for exhaustive ideal enumeration.
pub const DEFAULT_ENUMERATION_BOUND: usize = 20;

/// Environment variable overriding [`DEFAULT_ENUMERATION_BOUND`].
pub const BOUND_ENV: &str = "B1A_ENUM_BOUND";

/// The configured enumeration bound (`B1A_ENUM_BOUND`, else 20; capped at 64).
pub fn enumeration_bound() -> usize {
    std::env::var(BOUND_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map(|b| b.min(crate::algebra::MAX_ORDER))
        .unwrap_or(DEFAULT_ENUMERATION_BOUND)
}

/// An ideal: contains zero, closed under `+` and under multiplication by any element.
///
/// The member set is only meaningful together with the algebra it was built
/// against; every operation takes that algebra explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ideal(ElementSet);

impl Ideal {
    /// Validates `set` as an ideal of `alg`.
    pub fn new(alg: &FiniteB1Algebra, set: ElementSet) -> Result<Self> {
        match ideal_violation(alg, set) {
            None => Ok(Ideal(set)),
            Some(why) => Err(Error::NotAnIdeal(why)),
        }
    }

    /// Parses comma-separated labels (`0,z,x`) and validates the result.
    pub fn parse(alg: &FiniteB1Algebra, labels: &str) -> Result<Self> {
        let mut set = ElementSet::EMPTY;
        for l in labels.split(',').map(str::trim).filter(|l| !l.is_empty()) {
            let e = alg
                .element(l)
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
            set.insert(e);
        }
        Ideal::new(alg, set)
    }

    pub(crate) fn from_set_unchecked(set: ElementSet) -> Self {
        Ideal(set)
    }

    pub fn zero(_alg: &FiniteB1Algebra) -> Self {
        Ideal(ElementSet::singleton(ElementId::ZERO))
    }

    pub fn whole(alg: &FiniteB1Algebra) -> Self {
        Ideal(alg.all())
    }

    pub fn members(&self) -> ElementSet {
        self.0
    }

    pub fn contains(&self, e: ElementId) -> bool {
        self.0.contains(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.0.is_subset(other.0)
    }

    pub fn is_proper(&self, alg: &FiniteB1Algebra) -> bool {
        !self.contains(alg.one())
    }

    pub fn format(&self, alg: &FiniteB1Algebra) -> String {
        alg.format_set(self.0)
    }
}

/// Describes the first closure condition `set` breaks, if any.
pub fn ideal_violation(alg: &FiniteB1Algebra, set: ElementSet) -> Option<String> {
    if !set.is_subset(alg.all()) {
        return Some("contains indices outside the algebra".into());
    }
    if !set.contains(alg.zero()) {
        return Some(format!("missing zero `{}`", alg.name(alg.zero())));
    }
    for a in set {
        for b in set {
            let s = alg.add(a, b);
            if !set.contains(s) {
                return Some(format!(
                    "not closed under addition: {} + {} = {} is missing",
                    alg.name(a),
                    alg.name(b),
                    alg.name(s)
                ));
            }
        }
        for r in alg.elements() {
            let p = alg.mul(r, a);
            if !set.contains(p) {
                return Some(format!(
                    "not closed under multiplication: {}·{} = {} is missing",
                    alg.name(r),
                    alg.name(a),
                    alg.name(p)
                ));
            }
        }
    }
    None
}

/// Closes `set ∪ {0}` under addition.
fn additive_closure(alg: &FiniteB1Algebra, set: ElementSet) -> ElementSet {
    let mut closed = set.with(alg.zero());
    loop {
        let mut next = closed;
        for a in closed {
            for b in closed {
                next.insert(alg.add(a, b));
            }
        }
        if next == closed {
            return closed;
        }
        closed = next;
    }
}

/// Smallest ideal containing `generators`: finite sums of products `a·s`.
pub fn generated_ideal(alg: &FiniteB1Algebra, generators: ElementSet) -> Ideal {
    let mut products = ElementSet::EMPTY;
    for s in generators {
        for a in alg.elements() {
            products.insert(alg.mul(a, s));
        }
    }
    Ideal(additive_closure(alg, products))
}

/// Down-closure in the natural order: `{a : ∃ i ∈ set, a + i = i}`.
pub(crate) fn down_closure(alg: &FiniteB1Algebra, set: ElementSet) -> ElementSet {
    let mut out = ElementSet::EMPTY;
    for a in alg.elements() {
        if set.iter().any(|i| alg.add(a, i) == i) {
            out.insert(a);
        }
    }
    out
}

/// The saturation `Ī = {a : ∃ i ∈ I, a + i = i}`.
pub fn saturation(alg: &FiniteB1Algebra, ideal: &Ideal) -> Ideal {
    Ideal(down_closure(alg, ideal.0))
}

pub fn is_saturated(alg: &FiniteB1Algebra, ideal: &Ideal) -> bool {
    saturation(alg, ideal) == *ideal
}

/// `r(I) = {a : aⁿ ∈ I for some n ≥ 1}`.
pub fn radical(alg: &FiniteB1Algebra, ideal: &Ideal) -> Ideal {
    let set = alg
        .elements()
        .filter(|&a| alg.some_power_in(a, ideal.0))
        .collect();
    Ideal(set)
}

pub fn is_radical(alg: &FiniteB1Algebra, ideal: &Ideal) -> bool {
    radical(alg, ideal) == *ideal
}

/// `I + J = {i + j}`; already closed since both summands contain zero.
pub fn ideal_sum(alg: &FiniteB1Algebra, i: &Ideal, j: &Ideal) -> Ideal {
    let mut out = ElementSet::EMPTY;
    for a in i.0 {
        for b in j.0 {
            out.insert(alg.add(a, b));
        }
    }
    Ideal(out)
}

pub fn ideal_intersect(i: &Ideal, j: &Ideal) -> Ideal {
    Ideal(i.0.intersection(j.0))
}

/// `I·J`, the ideal generated by all products `ij`.
pub fn ideal_product(alg: &FiniteB1Algebra, i: &Ideal, j: &Ideal) -> Ideal {
    let mut products = ElementSet::EMPTY;
    for a in i.0 {
        for b in j.0 {
            products.insert(alg.mul(a, b));
        }
    }
    generated_ideal(alg, products)
}

/// `Ann(s) = {x : sx = 0}`, always saturated.
pub fn annihilator(alg: &FiniteB1Algebra, s: ElementId) -> Ideal {
    Ideal(
        alg.elements()
            .filter(|&x| alg.mul(s, x) == alg.zero())
            .collect(),
    )
}

/// `Ann(S) = ⋂_{s ∈ S} Ann(s)`; the whole algebra for empty `S`.
pub fn annihilator_set(alg: &FiniteB1Algebra, set: ElementSet) -> Ideal {
    set.iter().fold(Ideal::whole(alg), |acc, s| {
        ideal_intersect(&acc, &annihilator(alg, s))
    })
}

/// The conductor `C_x(J) = {y : xy ∈ J}`.
pub fn conductor(alg: &FiniteB1Algebra, x: ElementId, j: &Ideal) -> Ideal {
    Ideal(
        alg.elements()
            .filter(|&y| j.contains(alg.mul(x, y)))
            .collect(),
    )
}

fn check_bound(alg: &FiniteB1Algebra, bound: usize) -> Result<()> {
    if alg.order() > bound {
        Err(Error::BoundExceeded {
            order: alg.order(),
            bound,
        })
    } else {
        Ok(())
    }
}

/// All ideals of `alg` (including `alg` itself) in canonical order.
///
/// Walks the ideal lattice upward from `{0}` by adding principal ideals: every
/// ideal is the sum of the principal ideals of its members, so the walk
/// reaches all of them.
pub fn enumerate_ideals(alg: &FiniteB1Algebra, bound: usize) -> Result<Vec<Ideal>> {
    check_bound(alg, bound)?;
    let principal: Vec<Ideal> = alg
        .elements()
        .map(|a| generated_ideal(alg, ElementSet::singleton(a)))
        .collect();
    let start = Ideal::zero(alg);
    let mut seen: HashSet<ElementSet> = HashSet::from([start.0]);
    let mut queue = VecDeque::from([start]);
    while let Some(i) = queue.pop_front() {
        for a in alg.elements() {
            if i.contains(a) {
                continue;
            }
            let next = ideal_sum(alg, &i, &principal[a.index()]);
            if seen.insert(next.0) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Ideal> = seen.into_iter().map(Ideal).collect();
    sort_canonical(&mut out);
    Ok(out)
}

pub fn enumerate_saturated_ideals(alg: &FiniteB1Algebra, bound: usize) -> Result<Vec<Ideal>> {
    Ok(enumerate_ideals(alg, bound)?
        .into_iter()
        .filter(|i| is_saturated(alg, i))
        .collect())
}

pub fn sort_canonical(ideals: &mut [Ideal]) {
    ideals.sort_by(|a, b| a.0.canonical_cmp(&b.0));
}

/// Members of `family` not strictly containing another member.
pub fn minimal_elements(family: &[Ideal]) -> Vec<Ideal> {
    family
        .iter()
        .filter(|p| !family.iter().any(|q| q != *p && q.is_subset(p)))
        .copied()
        .collect()
}

/// Members of `family` not strictly contained in another member.
pub fn maximal_elements(family: &[Ideal]) -> Vec<Ideal> {
    family
        .iter()
        .filter(|p| !family.iter().any(|q| q != *p && p.is_subset(q)))
        .copied()
        .collect()
}
