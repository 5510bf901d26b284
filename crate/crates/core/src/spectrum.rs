//! Prime and primary ideals, spectra, zero divisors and associated primes.

use serde::Serialize;

use crate::algebra::{ElementId, FiniteB1Algebra};
use crate::congruence::{bourne_congruence, preimage_ideal, quotient};
use crate::error::Result;
use crate::ideal::{
    annihilator, enumerate_ideals, is_radical, is_saturated, maximal_elements, minimal_elements,
    radical, Ideal,
};
use crate::set::ElementSet;

/// Proper, and `uv ∈ I ⇒ u ∈ I or v ∈ I` over all pairs.
pub fn is_prime(alg: &FiniteB1Algebra, ideal: &Ideal) -> bool {
    if !ideal.is_proper(alg) {
        return false;
    }
    for u in alg.elements().filter(|&u| !ideal.contains(u)) {
        for v in alg.elements().filter(|&v| !ideal.contains(v)) {
            if ideal.contains(alg.mul(u, v)) {
                return false;
            }
        }
    }
    true
}

/// Proper, and `xy ∈ Q ⇒ x ∈ Q or yⁿ ∈ Q` for some `1 ≤ n ≤ order`.
pub fn is_primary(alg: &FiniteB1Algebra, ideal: &Ideal) -> bool {
    if !ideal.is_proper(alg) {
        return false;
    }
    let q = ideal.members();
    for x in alg.elements() {
        if q.contains(x) {
            continue;
        }
        for y in alg.elements() {
            if q.contains(alg.mul(x, y)) && !alg.some_power_in(y, q) {
                return false;
            }
        }
    }
    true
}

/// `D_A`: nonzero `a` with `ab = 0` for some nonzero `b`.
pub fn zero_divisors(alg: &FiniteB1Algebra) -> ElementSet {
    let zero = alg.zero();
    alg.elements()
        .filter(|&a| a != zero)
        .filter(|&a| alg.elements().any(|b| b != zero && alg.mul(a, b) == zero))
        .collect()
}

/// `D_A(I) = {x : xy ∈ I for some y ∉ I}`.
pub fn divisor_set(alg: &FiniteB1Algebra, ideal: &Ideal) -> ElementSet {
    alg.elements()
        .filter(|&x| {
            alg.elements()
                .any(|y| !ideal.contains(y) && ideal.contains(alg.mul(x, y)))
        })
        .collect()
}

/// `Nil(A) = r({0})`.
pub fn nilradical(alg: &FiniteB1Algebra) -> Ideal {
    radical(alg, &Ideal::zero(alg))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdealFlags {
    pub saturated: bool,
    pub radical: bool,
    pub prime: bool,
    pub primary: bool,
}

impl IdealFlags {
    pub fn of(alg: &FiniteB1Algebra, ideal: &Ideal) -> Self {
        IdealFlags {
            saturated: is_saturated(alg, ideal),
            radical: is_radical(alg, ideal),
            prime: is_prime(alg, ideal),
            primary: is_primary(alg, ideal),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifiedIdeal {
    pub ideal: Ideal,
    pub flags: IdealFlags,
}

/// A prime `P = π_x⁻¹(Q)` with `Q` minimal prime in `A / R_{Ann(x)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AssociatedPrime {
    /// Smallest-index `x ≠ 0` the prime is associated to.
    pub witness: ElementId,
    pub prime: Ideal,
}

/// Whether `D_A ∪ {0}` is a finite union of saturated primes, with a
/// smallest such family when it is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Standardness {
    pub standard: bool,
    pub cover: Vec<Ideal>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumResult {
    pub primes: Vec<Ideal>,
    pub saturated_primes: Vec<Ideal>,
    pub min_primes: Vec<Ideal>,
    pub min_saturated_primes: Vec<Ideal>,
    pub max_saturated: Vec<Ideal>,
    pub associated: Vec<AssociatedPrime>,
    pub nilradical: Ideal,
    pub zero_divisors: ElementSet,
    pub standard: Standardness,
}

/// Every ideal of a finite algebra, classified once and kept in canonical order.
#[derive(Clone, Debug)]
pub struct IdealLattice<'a> {
    alg: &'a FiniteB1Algebra,
    bound: usize,
    entries: Vec<ClassifiedIdeal>,
}

impl<'a> IdealLattice<'a> {
    /// Enumerates and classifies; refuses algebras above `bound`.
    pub fn new(alg: &'a FiniteB1Algebra, bound: usize) -> Result<Self> {
        let entries = enumerate_ideals(alg, bound)?
            .into_iter()
            .map(|ideal| ClassifiedIdeal {
                flags: IdealFlags::of(alg, &ideal),
                ideal,
            })
            .collect();
        Ok(IdealLattice {
            alg,
            bound,
            entries,
        })
    }

    pub fn algebra(&self) -> &'a FiniteB1Algebra {
        self.alg
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn entries(&self) -> &[ClassifiedIdeal] {
        &self.entries
    }

    pub fn flags(&self, ideal: &Ideal) -> IdealFlags {
        self.entries
            .iter()
            .find(|e| e.ideal == *ideal)
            .map(|e| e.flags)
            .unwrap_or_else(|| IdealFlags::of(self.alg, ideal))
    }

    fn select(&self, keep: impl Fn(&ClassifiedIdeal) -> bool) -> Vec<Ideal> {
        self.entries
            .iter()
            .filter(|e| keep(e))
            .map(|e| e.ideal)
            .collect()
    }

    pub fn ideals(&self) -> Vec<Ideal> {
        self.select(|_| true)
    }

    pub fn saturated_ideals(&self) -> Vec<Ideal> {
        self.select(|e| e.flags.saturated)
    }

    pub fn proper_saturated_ideals(&self) -> Vec<Ideal> {
        let one = self.alg.one();
        self.select(|e| e.flags.saturated && !e.ideal.contains(one))
    }

    pub fn primes(&self) -> Vec<Ideal> {
        self.select(|e| e.flags.prime)
    }

    pub fn saturated_primes(&self) -> Vec<Ideal> {
        self.select(|e| e.flags.prime && e.flags.saturated)
    }

    pub fn primary_ideals(&self) -> Vec<Ideal> {
        self.select(|e| e.flags.primary)
    }

    pub fn saturated_primary_ideals(&self) -> Vec<Ideal> {
        self.select(|e| e.flags.primary && e.flags.saturated)
    }

    pub fn min_primes(&self) -> Vec<Ideal> {
        minimal_elements(&self.primes())
    }

    pub fn min_saturated_primes(&self) -> Vec<Ideal> {
        minimal_elements(&self.saturated_primes())
    }

    /// Maximal elements among proper saturated ideals.
    pub fn max_saturated(&self) -> Vec<Ideal> {
        maximal_elements(&self.proper_saturated_ideals())
    }

    /// Associated primes, deduplicated, in canonical order of the prime.
    pub fn associated_primes(&self) -> Result<Vec<AssociatedPrime>> {
        let alg = self.alg;
        let mut found: Vec<AssociatedPrime> = Vec::new();
        for x in alg.elements().filter(|&x| x != alg.zero()) {
            let congruence = bourne_congruence(alg, &annihilator(alg, x));
            let q = quotient(alg, &congruence)?;
            let lattice = IdealLattice::new(&q.target, self.bound)?;
            for minimal in lattice.min_primes() {
                let prime = preimage_ideal(&q, &minimal);
                if !found.iter().any(|a| a.prime == prime) {
                    found.push(AssociatedPrime { witness: x, prime });
                }
            }
        }
        found.sort_by(|a, b| a.prime.members().canonical_cmp(&b.prime.members()));
        Ok(found)
    }

    /// Searches unions of saturated primes for `D_A ∪ {0}`.
    ///
    /// Only primes inside the target can take part, and any cover can trade a
    /// prime for a larger candidate, so the search runs over the maximal
    /// candidates and returns the first smallest cover in canonical order.
    pub fn standardness(&self) -> Standardness {
        let target = zero_divisors(self.alg).with(self.alg.zero());
        let not_standard = Standardness {
            standard: false,
            cover: Vec::new(),
        };
        if self.alg.is_trivial() {
            return not_standard;
        }
        let candidates: Vec<Ideal> = self
            .saturated_primes()
            .into_iter()
            .filter(|p| p.members().is_subset(target))
            .collect();
        let candidates = maximal_elements(&candidates);
        let union = |family: &[Ideal]| {
            family
                .iter()
                .fold(ElementSet::EMPTY, |acc, p| acc.union(p.members()))
        };
        if union(&candidates) != target {
            return not_standard;
        }
        for k in 1..=candidates.len() {
            if let Some(cover) = first_combination(&candidates, k, |c| union(c) == target) {
                return Standardness {
                    standard: true,
                    cover,
                };
            }
        }
        unreachable!("the full candidate family covers the target")
    }

    pub fn spectrum(&self) -> Result<SpectrumResult> {
        let mut associated = self.associated_primes()?;
        if self.alg.is_trivial() {
            associated.clear();
        }
        Ok(SpectrumResult {
            primes: self.primes(),
            saturated_primes: self.saturated_primes(),
            min_primes: self.min_primes(),
            min_saturated_primes: self.min_saturated_primes(),
            max_saturated: self.max_saturated(),
            associated,
            nilradical: nilradical(self.alg),
            zero_divisors: zero_divisors(self.alg),
            standard: self.standardness(),
        })
    }
}

/// First `k`-subset of `items` (lexicographic in positions) satisfying `accept`.
pub(crate) fn first_combination<T: Copy>(
    items: &[T],
    k: usize,
    mut accept: impl FnMut(&[T]) -> bool,
) -> Option<Vec<T>> {
    let n = items.len();
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut chosen: Vec<T> = Vec::with_capacity(k);
    loop {
        chosen.clear();
        chosen.extend(idx.iter().map(|&i| items[i]));
        if accept(&chosen) {
            return Some(chosen);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
