//! Exhaustive self-audit: re-checks the structural theorems of the theory on
//! one finite algebra. Every check must pass on every valid finite algebra,
//! so a failure points at an engine defect.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{check_axioms, leq, FiniteB1Algebra};
use crate::congruence::{bourne_congruence, quotient};
use crate::decompose::{
    evans_report, intersect_all, laskerian_check, minimalize, radical_decomposition,
    weak_decompose, LaskerianReport,
};
use crate::ideal::{
    annihilator, conductor, generated_ideal, ideal_intersect, ideal_violation, radical, saturation,
    Ideal,
};
use crate::set::ElementSet;
use crate::spectrum::{divisor_set, is_primary, nilradical, zero_divisors, IdealLattice};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub statement: &'static str,
    pub passed: bool,
    /// Number of instances examined.
    pub instances: usize,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub checks: Vec<CheckResult>,
    pub laskerian: bool,
    pub passed: bool,
}

struct Check {
    name: &'static str,
    statement: &'static str,
    run: fn(&Ctx<'_>) -> Outcome,
}

type Outcome = (usize, Option<String>);

/// Shared, precomputed data for all checks.
struct Ctx<'a> {
    alg: &'a FiniteB1Algebra,
    lattice: &'a IdealLattice<'a>,
    ideals: Vec<Ideal>,
    laskerian: LaskerianReport,
}

impl Ctx<'_> {
    fn f(&self, i: &Ideal) -> String {
        format!("{{{}}}", i.format(self.alg))
    }
}

/// Counts instances and stops at the first failure, keeping its description.
#[derive(Default)]
struct Tally {
    count: usize,
    failure: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.count += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    fn done(self) -> Outcome {
        (self.count, self.failure)
    }
}

const CHECKS: &[Check] = &[
    Check {
        name: "axioms",
        statement: "tables satisfy every B1-algebra axiom",
        run: |c| {
            let a = c.alg;
            let r = check_axioms(a.names(), a.add_table(), a.mul_table(), a.zero(), a.one());
            let n = a.order();
            (n * n * n, r.violations.first().map(|v| format!("{}: {}", v.axiom, v.detail)))
        },
    },
    Check {
        name: "natural-order",
        statement: "a <= b iff a+b=b is a partial order with minimum 0",
        run: |c| {
            let a = c.alg;
            let mut t = Tally::default();
            for x in a.elements() {
                t.check(leq(a, a.zero(), x) && leq(a, x, x), || a.name(x).to_string());
                for y in a.elements() {
                    t.check(!(leq(a, x, y) && leq(a, y, x)) || x == y, || {
                        format!("{} and {}", a.name(x), a.name(y))
                    });
                    for z in a.elements() {
                        t.check(!(leq(a, x, y) && leq(a, y, z)) || leq(a, x, z), || {
                            format!("{} <= {} <= {}", a.name(x), a.name(y), a.name(z))
                        });
                    }
                }
            }
            t.done()
        },
    },
    Check {
        name: "ideal-enumeration",
        statement: "every enumerated set is an ideal and is generated by its members",
        run: |c| {
            let mut t = Tally::default();
            for i in &c.ideals {
                let why = ideal_violation(c.alg, i.members());
                t.check(why.is_none(), || format!("{}: {}", c.f(i), why.clone().unwrap_or_default()));
                t.check(generated_ideal(c.alg, i.members()) == *i, || c.f(i));
            }
            t.done()
        },
    },
    Check {
        name: "saturation-closure",
        statement: "saturation is extensive, monotone and idempotent",
        run: |c| {
            let mut t = Tally::default();
            for i in &c.ideals {
                let s = saturation(c.alg, i);
                t.check(i.is_subset(&s) && saturation(c.alg, &s) == s, || c.f(i));
                t.check(ideal_violation(c.alg, s.members()).is_none(), || c.f(i));
                for j in &c.ideals {
                    if i.is_subset(j) {
                        t.check(s.is_subset(&saturation(c.alg, j)), || {
                            format!("{} in {}", c.f(i), c.f(j))
                        });
                    }
                }
            }
            t.done()
        },
    },
    Check {
        name: "radical-closure",
        statement: "r(I) is an ideal, I in r(I), r(r(I)) = r(I), r is monotone",
        run: |c| {
            let mut t = Tally::default();
            for i in &c.ideals {
                let r = radical(c.alg, i);
                t.check(ideal_violation(c.alg, r.members()).is_none(), || c.f(i));
                t.check(i.is_subset(&r) && radical(c.alg, &r) == r, || c.f(i));
                for j in &c.ideals {
                    if i.is_subset(j) {
                        t.check(r.is_subset(&radical(c.alg, j)), || {
                            format!("{} in {}", c.f(i), c.f(j))
                        });
                    }
                }
            }
            t.done()
        },
    },
    Check {
        name: "radical-of-saturated-meet",
        statement: "r(sat(I∩J)) = r(sat(I)∩sat(J)) = r(sat(I))∩r(sat(J))",
        run: |c| {
            let a = c.alg;
            let mut t = Tally::default();
            for i in &c.ideals {
                for j in &c.ideals {
                    let (si, sj) = (saturation(a, i), saturation(a, j));
                    let lhs = radical(a, &saturation(a, &ideal_intersect(i, j)));
                    let mid = radical(a, &ideal_intersect(&si, &sj));
                    let rhs = ideal_intersect(&radical(a, &si), &radical(a, &sj));
                    t.check(lhs == mid && mid == rhs, || format!("I={}, J={}", c.f(i), c.f(j)));
                }
            }
            t.done()
        },
    },
    Check {
        name: "annihilators-saturated",
        statement: "Ann(s) is a saturated ideal for every s",
        run: |c| {
            let mut t = Tally::default();
            for s in c.alg.elements() {
                let ann = annihilator(c.alg, s);
                t.check(
                    ideal_violation(c.alg, ann.members()).is_none() && saturation(c.alg, &ann) == ann,
                    || c.alg.name(s).to_string(),
                );
            }
            t.done()
        },
    },
    Check {
        name: "conductors-saturated",
        statement: "C_x(J) is saturated when J is, and C_x({0}) = Ann(x)",
        run: |c| {
            let a = c.alg;
            let mut t = Tally::default();
            for x in a.elements() {
                t.check(conductor(a, x, &Ideal::zero(a)) == annihilator(a, x), || {
                    a.name(x).to_string()
                });
                for j in c.lattice.saturated_ideals() {
                    let cj = conductor(a, x, &j);
                    t.check(saturation(a, &cj) == cj, || format!("x={}, J={}", a.name(x), c.f(&j)));
                }
            }
            t.done()
        },
    },
    Check {
        name: "bourne-congruences",
        statement: "R_I is a congruence with zero class sat(I); A/R_I is a B1-algebra",
        run: |c| {
            let a = c.alg;
            let mut t = Tally::default();
            for i in &c.ideals {
                let cong = bourne_congruence(a, i);
                t.check(cong.classes()[0] == saturation(a, i).members(), || c.f(i));
                let q = quotient(a, &cong);
                t.check(q.is_ok(), || c.f(i));
            }
            t.done()
        },
    },
    Check {
        name: "max-saturated-are-prime",
        statement: "Max_s(A) ⊆ Pr_s(A)",
        run: |c| {
            let primes = c.lattice.saturated_primes();
            let mut t = Tally::default();
            for m in c.lattice.max_saturated() {
                t.check(primes.contains(&m), || c.f(&m));
            }
            t.done()
        },
    },
    Check {
        name: "spectrum-containments",
        statement: "MinPr ⊆ Pr, MinPr_s ⊆ Pr_s, every prime contains a minimal prime",
        run: |c| {
            let l = c.lattice;
            let (pr, prs, min, mins) = (
                l.primes(),
                l.saturated_primes(),
                l.min_primes(),
                l.min_saturated_primes(),
            );
            let mut t = Tally::default();
            for p in &min {
                t.check(pr.contains(p), || c.f(p));
            }
            for p in &mins {
                t.check(prs.contains(p), || c.f(p));
            }
            for p in &pr {
                t.check(min.iter().any(|m| m.is_subset(p)), || c.f(p));
            }
            t.done()
        },
    },
    Check {
        name: "minimal-primes-zero-divisors",
        statement: "nonzero members of minimal (saturated) primes are zero-divisors",
        run: |c| {
            let d = zero_divisors(c.alg);
            let mut t = Tally::default();
            for p in c.lattice.min_primes().iter().chain(&c.lattice.min_saturated_primes()) {
                let nonzero = p.members().difference(ElementSet::singleton(c.alg.zero()));
                t.check(nonzero.is_subset(d), || c.f(p));
            }
            t.done()
        },
    },
    Check {
        name: "associated-primes-annihilators",
        statement: "associated primes are saturated, of the form Ann(u) with u ≠ 0, and include MinPr",
        run: |c| {
            let a = c.alg;
            let mut t = Tally::default();
            let ass = match c.lattice.associated_primes() {
                Ok(v) => v,
                Err(e) => return (1, Some(e.to_string())),
            };
            for ap in &ass {
                let p = ap.prime;
                t.check(c.lattice.flags(&p).prime, || format!("{} is not prime", c.f(&p)));
                t.check(saturation(a, &p) == p, || format!("{} is not saturated", c.f(&p)));
                t.check(
                    a.elements().any(|u| u != a.zero() && annihilator(a, u) == p),
                    || format!("{} is no annihilator", c.f(&p)),
                );
            }
            for m in c.lattice.min_primes() {
                t.check(ass.iter().any(|ap| ap.prime == m), || c.f(&m));
            }
            t.done()
        },
    },
    Check {
        name: "minimal-primes-saturated",
        statement: "MinPr(A) = MinPr_s(A)",
        run: |c| {
            let ok = c.lattice.min_primes() == c.lattice.min_saturated_primes();
            (1, (!ok).then(|| "minimal prime sets differ".to_string()))
        },
    },
    Check {
        name: "primary-radical-prime",
        statement: "primes are primary, and r(Q) is prime for primary Q",
        run: |c| {
            let mut t = Tally::default();
            for e in c.lattice.entries() {
                if e.flags.prime {
                    t.check(e.flags.primary, || c.f(&e.ideal));
                }
                if e.flags.primary {
                    let r = radical(c.alg, &e.ideal);
                    t.check(c.lattice.flags(&r).prime, || c.f(&e.ideal));
                }
            }
            t.done()
        },
    },
    Check {
        name: "primary-meet",
        statement: "intersections of P-primary ideals are P-primary",
        run: |c| {
            let a = c.alg;
            let primaries = c.lattice.primary_ideals();
            let mut t = Tally::default();
            for p in c.lattice.primes() {
                let family: Vec<Ideal> = primaries
                    .iter()
                    .filter(|q| radical(a, q) == p)
                    .copied()
                    .collect();
                for q1 in &family {
                    for q2 in &family {
                        let m = ideal_intersect(q1, q2);
                        t.check(is_primary(a, &m) && radical(a, &m) == p, || {
                            format!("{} ∩ {}", c.f(q1), c.f(q2))
                        });
                    }
                }
                if !family.is_empty() {
                    let m = intersect_all(a, &family);
                    t.check(is_primary(a, &m) && radical(a, &m) == p, || {
                        format!("all {}-primary ideals", c.f(&p))
                    });
                }
            }
            t.done()
        },
    },
    Check {
        name: "weak-decomposition",
        statement: "saturated radical proper ideals are finite intersections of saturated primes",
        run: |c| {
            let a = c.alg;
            let mut t = Tally::default();
            for e in c.lattice.entries() {
                let j = e.ideal;
                if !(e.flags.saturated && e.flags.radical && j.is_proper(a)) {
                    continue;
                }
                match weak_decompose(a, &j) {
                    Err(err) => t.check(false, || format!("{}: {err}", c.f(&j))),
                    Ok(d) => {
                        let comps_ok = d.components.iter().all(|p| {
                            let f = c.lattice.flags(p);
                            f.prime && f.saturated
                        });
                        t.check(comps_ok && d.intersection(a) == j, || c.f(&j));
                        t.check(minimalize(a, &d).intersection(a) == j, || c.f(&j));
                        for s in &d.split_trace {
                            t.check(
                                !s.ideal.contains(s.u)
                                    && !s.ideal.contains(s.v)
                                    && s.ideal.contains(a.mul(s.u, s.v)),
                                || format!("trace at {}", c.f(&s.ideal)),
                            );
                        }
                    }
                }
            }
            t.done()
        },
    },
    Check {
        name: "radical-decomposition",
        statement: "r(I) = P1 ∩ … ∩ Pn with saturated primes, for saturated I",
        run: |c| {
            let a = c.alg;
            let mut t = Tally::default();
            for i in c.lattice.saturated_ideals() {
                let r = radical(a, &i);
                if !r.is_proper(a) {
                    continue;
                }
                t.check(saturation(a, &r) == r, || format!("r({}) not saturated", c.f(&i)));
                match radical_decomposition(a, &i) {
                    Ok(d) => t.check(d.intersection(a) == r, || c.f(&i)),
                    Err(err) => t.check(false, || format!("{}: {err}", c.f(&i))),
                }
            }
            t.done()
        },
    },
    Check {
        name: "minimal-primes-finite",
        statement: "MinPr(A) is among the components of r({0}), and equals them once irredundant",
        run: |c| {
            let a = c.alg;
            if !nilradical(a).is_proper(a) {
                return (0, None);
            }
            let d = match radical_decomposition(a, &Ideal::zero(a)) {
                Ok(d) => d,
                Err(e) => return (1, Some(e.to_string())),
            };
            let min = c.lattice.min_primes();
            let mut t = Tally::default();
            for m in &min {
                t.check(d.components.contains(m), || c.f(m));
            }
            t.check(minimalize(a, &d).components == min, || "irredundant components differ".into());
            t.done()
        },
    },
    Check {
        name: "divisor-sets",
        statement: "I ⊆ D_A(I) for proper I, and D_A({0}) = D_A ∪ {0}",
        run: |c| {
            let a = c.alg;
            let mut t = Tally::default();
            for i in c.ideals.iter().filter(|i| i.is_proper(a)) {
                t.check(i.members().is_subset(divisor_set(a, i)), || c.f(i));
            }
            if !a.is_trivial() {
                t.check(
                    divisor_set(a, &Ideal::zero(a)) == zero_divisors(a).with(a.zero()),
                    || "D_A({0})".into(),
                );
            }
            t.done()
        },
    },
    Check {
        name: "evans-property",
        statement: "for saturated proper I, maximal I-conductors are saturated primes with union D_A(I)",
        run: |c| {
            let mut t = Tally::default();
            for i in c.lattice.proper_saturated_ideals() {
                match evans_report(c.alg, &i) {
                    Ok(r) => t.check(r.passed, || c.f(&i)),
                    Err(e) => t.check(false, || format!("{}: {e}", c.f(&i))),
                }
            }
            t.done()
        },
    },
    Check {
        name: "evans-from-laskerian",
        statement: "if laskerian, D_A(I) is the union of the radicals of an irredundant primary decomposition",
        run: |c| {
            let a = c.alg;
            let mut t = Tally::default();
            if !c.laskerian.laskerian {
                return t.done();
            }
            for (i, parts) in &c.laskerian.table {
                let union = parts
                    .iter()
                    .fold(ElementSet::EMPTY, |acc, q| acc.union(radical(a, q).members()));
                t.check(union == divisor_set(a, i), || c.f(i));
            }
            t.done()
        },
    },
    Check {
        name: "standard",
        statement: "D_A ∪ {0} is a finite union of saturated primes",
        run: |c| {
            if c.alg.is_trivial() {
                return (0, None);
            }
            let s = c.lattice.standardness();
            (1, (!s.standard).then(|| "no cover found".to_string()))
        },
    },
];

/// Runs every check; checks execute in parallel on the current rayon pool and
/// are reported in a fixed order.
pub fn audit(lattice: &IdealLattice<'_>) -> AuditReport {
    let alg = lattice.algebra();
    let ctx = Ctx {
        alg,
        lattice,
        ideals: lattice.ideals(),
        laskerian: laskerian_check(lattice),
    };
    let checks: Vec<CheckResult> = CHECKS
        .par_iter()
        .map(|check| {
            let (instances, witness) = (check.run)(&ctx);
            CheckResult {
                name: check.name,
                statement: check.statement,
                passed: witness.is_none(),
                instances,
                witness,
            }
        })
        .collect();
    AuditReport {
        passed: checks.iter().all(|c| c.passed),
        laskerian: ctx.laskerian.laskerian,
        checks,
    }
}
