//! Bourne congruences and quotient algebras.

use crate::algebra::{ElementId, FiniteB1Algebra};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::set::ElementSet;

/// A partition of the carrier compatible with `+` and `·`.
///
/// Classes are numbered by their smallest member, so the class of zero is 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    class_of: Vec<usize>,
    classes: Vec<ElementSet>,
}

impl Congruence {
    /// Builds a congruence from an equivalence predicate, re-checking that
    /// it is a partition compatible with both operations.
    pub fn from_relation(
        alg: &FiniteB1Algebra,
        related: impl Fn(ElementId, ElementId) -> bool,
    ) -> Result<Self> {
        let mut class_of = vec![usize::MAX; alg.order()];
        let mut classes: Vec<ElementSet> = Vec::new();
        for a in alg.elements() {
            if class_of[a.index()] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let members: ElementSet = alg.elements().filter(|&b| related(a, b)).collect();
            for b in members {
                if class_of[b.index()] != usize::MAX {
                    return Err(Error::Internal(format!(
                        "relation is not transitive at {} ~ {}",
                        alg.name(a),
                        alg.name(b)
                    )));
                }
                class_of[b.index()] = id;
            }
            classes.push(members);
        }
        let c = Congruence { class_of, classes };
        c.verify(alg)?;
        Ok(c)
    }

    /// The discrete congruence: every element in its own class.
    pub fn discrete(alg: &FiniteB1Algebra) -> Self {
        Congruence {
            class_of: (0..alg.order()).collect(),
            classes: alg.elements().map(ElementSet::singleton).collect(),
        }
    }

    fn verify(&self, alg: &FiniteB1Algebra) -> Result<()> {
        for a in alg.elements() {
            for b in self.class_members(a) {
                for c in alg.elements() {
                    for d in self.class_members(c) {
                        if !self.related(alg.add(a, c), alg.add(b, d))
                            || !self.related(alg.mul(a, c), alg.mul(b, d))
                        {
                            return Err(Error::Internal(format!(
                                "congruence incompatible at ({}, {}), ({}, {})",
                                alg.name(a),
                                alg.name(b),
                                alg.name(c),
                                alg.name(d)
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn class_of(&self, e: ElementId) -> usize {
        self.class_of[e.index()]
    }

    pub fn class_members(&self, e: ElementId) -> ElementSet {
        self.classes[self.class_of(e)]
    }

    pub fn classes(&self) -> &[ElementSet] {
        &self.classes
    }

    pub fn related(&self, a: ElementId, b: ElementId) -> bool {
        self.class_of(a) == self.class_of(b)
    }
}

/// `R_I`: `a ~ b` iff `a + w = b + w` for some `w ∈ I`.
pub fn bourne_congruence(alg: &FiniteB1Algebra, ideal: &Ideal) -> Congruence {
    let witnesses = ideal.members();
    Congruence::from_relation(alg, |a, b| {
        witnesses.iter().any(|w| alg.add(a, w) == alg.add(b, w))
    })
    .expect("Bourne relation of an ideal is a congruence")
}

/// The canonical projection `A ↠ A/C`.
#[derive(Clone, Debug)]
pub struct QuotientMap<'a> {
    pub source: &'a FiniteB1Algebra,
    pub target: FiniteB1Algebra,
    projection: Vec<ElementId>,
}

impl QuotientMap<'_> {
    pub fn project(&self, e: ElementId) -> ElementId {
        self.projection[e.index()]
    }

    pub fn projection(&self) -> &[ElementId] {
        &self.projection
    }

    /// `π(I)`; an ideal because `π` is a surjective homomorphism.
    pub fn image_ideal(&self, ideal: &Ideal) -> Ideal {
        Ideal::from_set_unchecked(ideal.members().iter().map(|e| self.project(e)).collect())
    }
}

/// Quotient algebra on the classes of `c`, labelled by `~`-joined member labels.
pub fn quotient<'a>(alg: &'a FiniteB1Algebra, c: &Congruence) -> Result<QuotientMap<'a>> {
    let k = c.classes().len();
    let reps: Vec<ElementId> = c
        .classes()
        .iter()
        .map(|cls| cls.iter().next().expect("classes are non-empty"))
        .collect();
    let mut add = Vec::with_capacity(k * k);
    let mut mul = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            add.push(ElementId::new(c.class_of(alg.add(reps[i], reps[j]))));
            mul.push(ElementId::new(c.class_of(alg.mul(reps[i], reps[j]))));
        }
    }
    // Well-definedness: every pair of representatives gives the same class.
    for a in alg.elements() {
        for b in alg.elements() {
            let (ca, cb) = (c.class_of(a), c.class_of(b));
            if add[ca * k + cb].index() != c.class_of(alg.add(a, b))
                || mul[ca * k + cb].index() != c.class_of(alg.mul(a, b))
            {
                return Err(Error::Internal(format!(
                    "induced operation not well defined at ({}, {})",
                    alg.name(a),
                    alg.name(b)
                )));
            }
        }
    }
    let names = c
        .classes()
        .iter()
        .map(|cls| alg.labels(*cls).join("~"))
        .collect();
    let one = ElementId::new(c.class_of(alg.one()));
    let target = FiniteB1Algebra::from_tables(names, add, mul, one)?;
    let projection = alg
        .elements()
        .map(|e| ElementId::new(c.class_of(e)))
        .collect();
    Ok(QuotientMap {
        source: alg,
        target,
        projection,
    })
}

/// `π⁻¹(J)` for an ideal `J` of the target.
pub fn preimage_ideal(q: &QuotientMap<'_>, j: &Ideal) -> Ideal {
    Ideal::from_set_unchecked(
        q.source
            .elements()
            .filter(|&e| j.contains(q.project(e)))
            .collect(),
    )
}
