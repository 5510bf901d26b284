//! Deterministic report payloads with text and JSON renderings.
//!
//! Ideals and element sets are rendered as comma-joined labels in element
//! order (`0,z,x`), which keeps both renderings diff-stable.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{AxiomReport, FiniteB1Algebra};
use crate::audit::{AuditReport, CheckResult};
use crate::decompose::{DecompositionResult, EvansReport, LaskerianReport};
use crate::ideal::Ideal;
use crate::set::ElementSet;
use crate::spectrum::{AssociatedPrime, ClassifiedIdeal, SpectrumResult};

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub command: String,
    pub algebra: String,
    pub engine_version: String,
    pub result: Payload,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Payload {
    Validate(ValidatePayload),
    Ideals(IdealsPayload),
    Spectrum(SpectrumPayload),
    Nil(NilPayload),
    Assoc(AssocPayload),
    Decompose(DecomposePayload),
    Laskerian(LaskerianPayload),
    Evans(EvansPayload),
    Audit(AuditPayload),
    Builtin(BuiltinPayload),
}

fn set_str(alg: &FiniteB1Algebra, s: ElementSet) -> String {
    alg.format_set(s)
}

fn ideal_list(alg: &FiniteB1Algebra, v: &[Ideal]) -> Vec<String> {
    v.iter().map(|i| i.format(alg)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ViolationEntry {
    pub axiom: String,
    pub witness: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidatePayload {
    pub valid: bool,
    pub order: usize,
    pub trivial: bool,
    pub violations: Vec<ViolationEntry>,
}

impl ValidatePayload {
    pub fn valid(alg: &FiniteB1Algebra) -> Self {
        ValidatePayload {
            valid: true,
            order: alg.order(),
            trivial: alg.is_trivial(),
            violations: Vec::new(),
        }
    }

    pub fn invalid(names: &[String], report: &AxiomReport) -> Self {
        ValidatePayload {
            valid: false,
            order: names.len(),
            trivial: false,
            violations: report
                .violations
                .iter()
                .map(|v| ViolationEntry {
                    axiom: v.axiom.name().to_string(),
                    witness: v.witness.iter().map(|e| names[e.index()].clone()).collect(),
                    detail: v.detail.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealEntry {
    pub members: String,
    pub saturated: bool,
    pub radical: bool,
    pub prime: bool,
    pub primary: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealsPayload {
    pub saturated_only: bool,
    pub count: usize,
    pub ideals: Vec<IdealEntry>,
}

impl IdealsPayload {
    pub fn new(alg: &FiniteB1Algebra, entries: &[ClassifiedIdeal], saturated_only: bool) -> Self {
        let ideals: Vec<IdealEntry> = entries
            .iter()
            .filter(|e| !saturated_only || e.flags.saturated)
            .map(|e| IdealEntry {
                members: e.ideal.format(alg),
                saturated: e.flags.saturated,
                radical: e.flags.radical,
                prime: e.flags.prime,
                primary: e.flags.primary,
            })
            .collect();
        IdealsPayload {
            saturated_only,
            count: ideals.len(),
            ideals,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AssociatedEntry {
    pub witness: String,
    pub prime: String,
}

fn associated(alg: &FiniteB1Algebra, v: &[AssociatedPrime]) -> Vec<AssociatedEntry> {
    v.iter()
        .map(|a| AssociatedEntry {
            witness: alg.name(a.witness).to_string(),
            prime: a.prime.format(alg),
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct StandardEntry {
    pub standard: bool,
    pub cover: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumPayload {
    pub primes: Vec<String>,
    pub saturated_primes: Vec<String>,
    pub min_primes: Vec<String>,
    pub min_saturated_primes: Vec<String>,
    pub max_saturated: Vec<String>,
    pub associated: Vec<AssociatedEntry>,
    pub nilradical: String,
    pub zero_divisors: String,
    pub standard: StandardEntry,
}

impl SpectrumPayload {
    pub fn new(alg: &FiniteB1Algebra, s: &SpectrumResult) -> Self {
        SpectrumPayload {
            primes: ideal_list(alg, &s.primes),
            saturated_primes: ideal_list(alg, &s.saturated_primes),
            min_primes: ideal_list(alg, &s.min_primes),
            min_saturated_primes: ideal_list(alg, &s.min_saturated_primes),
            max_saturated: ideal_list(alg, &s.max_saturated),
            associated: associated(alg, &s.associated),
            nilradical: s.nilradical.format(alg),
            zero_divisors: set_str(alg, s.zero_divisors),
            standard: StandardEntry {
                standard: s.standard.standard,
                cover: ideal_list(alg, &s.standard.cover),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NilPayload {
    pub nilradical: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AssocPayload {
    pub associated: Vec<AssociatedEntry>,
}

impl AssocPayload {
    pub fn new(alg: &FiniteB1Algebra, v: &[AssociatedPrime]) -> Self {
        AssocPayload {
            associated: associated(alg, v),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitEntry {
    pub ideal: String,
    pub u: String,
    pub v: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecomposePayload {
    pub input: String,
    pub components: Vec<String>,
    pub irredundant: bool,
    pub split_trace: Vec<SplitEntry>,
}

impl DecomposePayload {
    pub fn new(alg: &FiniteB1Algebra, d: &DecompositionResult) -> Self {
        DecomposePayload {
            input: d.input.format(alg),
            components: ideal_list(alg, &d.components),
            irredundant: d.irredundant,
            split_trace: d
                .split_trace
                .iter()
                .map(|s| SplitEntry {
                    ideal: s.ideal.format(alg),
                    u: alg.name(s.u).to_string(),
                    v: alg.name(s.v).to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableEntry {
    pub ideal: String,
    pub components: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LaskerianPayload {
    pub laskerian: bool,
    pub witness: Option<String>,
    pub saturated_primaries: Vec<String>,
    pub table: Vec<TableEntry>,
    pub unrestricted_laskerian: bool,
    pub unrestricted_witness: Option<String>,
}

impl LaskerianPayload {
    pub fn new(alg: &FiniteB1Algebra, r: &LaskerianReport) -> Self {
        LaskerianPayload {
            laskerian: r.laskerian,
            witness: r.witness.map(|w| w.format(alg)),
            saturated_primaries: ideal_list(alg, &r.saturated_primaries),
            table: r
                .table
                .iter()
                .map(|(i, parts)| TableEntry {
                    ideal: i.format(alg),
                    components: ideal_list(alg, parts),
                })
                .collect(),
            unrestricted_laskerian: r.unrestricted_laskerian,
            unrestricted_witness: r.unrestricted_witness.map(|w| w.format(alg)),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConductorEntry {
    pub witness: String,
    pub conductor: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct EvansEntry {
    pub ideal: String,
    pub maximal_conductors: Vec<ConductorEntry>,
    pub divisor_set: String,
    pub all_prime: bool,
    pub union_equals_divisor_set: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct EvansPayload {
    pub passed: bool,
    pub reports: Vec<EvansEntry>,
}

impl EvansPayload {
    pub fn new(alg: &FiniteB1Algebra, reports: &[EvansReport]) -> Self {
        let reports: Vec<EvansEntry> = reports
            .iter()
            .map(|r| EvansEntry {
                ideal: r.ideal.format(alg),
                maximal_conductors: r
                    .maximal_conductors
                    .iter()
                    .map(|(y, c)| ConductorEntry {
                        witness: alg.name(*y).to_string(),
                        conductor: c.format(alg),
                    })
                    .collect(),
                divisor_set: set_str(alg, r.divisor_set),
                all_prime: r.all_prime,
                union_equals_divisor_set: r.union_equals_divisor_set,
                passed: r.passed,
            })
            .collect();
        EvansPayload {
            passed: reports.iter().all(|r| r.passed),
            reports,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditPayload {
    pub passed: bool,
    pub laskerian: bool,
    pub checks: Vec<CheckResult>,
}

impl From<AuditReport> for AuditPayload {
    fn from(r: AuditReport) -> Self {
        AuditPayload {
            passed: r.passed,
            laskerian: r.laskerian,
            checks: r.checks,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BuiltinPayload {
    pub name: String,
    pub order: usize,
    pub source: String,
}

fn braces(s: &str) -> String {
    format!("{{{s}}}")
}

fn list(out: &mut String, title: &str, items: &[String]) {
    let _ = writeln!(out, "{title} ({}):", items.len());
    for i in items {
        let _ = writeln!(out, "  {}", braces(i));
    }
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Payload::Builtin(b) = &self.result {
            return b.source.clone();
        }
        let _ = writeln!(out, "{} {}", self.command, self.algebra);
        match &self.result {
            Payload::Validate(v) => {
                if v.valid {
                    let _ = writeln!(
                        out,
                        "valid B1-algebra of order {}{}",
                        v.order,
                        if v.trivial { " (trivial)" } else { "" }
                    );
                } else {
                    let _ = writeln!(out, "invalid: {} axiom violation(s)", v.violations.len());
                    for x in &v.violations {
                        let _ = writeln!(out, "  {}: {}", x.axiom, x.detail);
                    }
                }
            }
            Payload::Ideals(p) => {
                let title = if p.saturated_only {
                    "saturated ideals"
                } else {
                    "ideals"
                };
                let _ = writeln!(out, "{title} ({}):", p.count);
                for i in &p.ideals {
                    let mut tags = Vec::new();
                    for (on, tag) in [
                        (i.saturated, "saturated"),
                        (i.radical, "radical"),
                        (i.prime, "prime"),
                        (i.primary, "primary"),
                    ] {
                        if on {
                            tags.push(tag);
                        }
                    }
                    if tags.is_empty() {
                        let _ = writeln!(out, "  {}", braces(&i.members));
                    } else {
                        let _ = writeln!(out, "  {} {}", braces(&i.members), tags.join(" "));
                    }
                }
            }
            Payload::Spectrum(s) => {
                list(&mut out, "primes", &s.primes);
                list(&mut out, "saturated primes", &s.saturated_primes);
                list(&mut out, "minimal primes", &s.min_primes);
                list(
                    &mut out,
                    "minimal saturated primes",
                    &s.min_saturated_primes,
                );
                list(&mut out, "maximal saturated ideals", &s.max_saturated);
                let _ = writeln!(out, "associated primes ({}):", s.associated.len());
                for a in &s.associated {
                    let _ = writeln!(out, "  {} via {}", braces(&a.prime), a.witness);
                }
                let _ = writeln!(out, "nilradical: {}", braces(&s.nilradical));
                let _ = writeln!(out, "zero divisors: {}", braces(&s.zero_divisors));
                let _ = writeln!(out, "standard: {}", s.standard.standard);
                for c in &s.standard.cover {
                    let _ = writeln!(out, "  {}", braces(c));
                }
            }
            Payload::Nil(n) => {
                let _ = writeln!(out, "nilradical: {}", braces(&n.nilradical));
            }
            Payload::Assoc(a) => {
                let _ = writeln!(out, "associated primes ({}):", a.associated.len());
                for e in &a.associated {
                    let _ = writeln!(out, "  {} via {}", braces(&e.prime), e.witness);
                }
            }
            Payload::Decompose(d) => {
                let _ = writeln!(out, "input: {}", braces(&d.input));
                list(&mut out, "components", &d.components);
                let _ = writeln!(out, "irredundant: {}", d.irredundant);
                for s in &d.split_trace {
                    let _ = writeln!(out, "  split {} at {}·{}", braces(&s.ideal), s.u, s.v);
                }
            }
            Payload::Laskerian(l) => {
                let _ = writeln!(out, "laskerian: {}", l.laskerian);
                if let Some(w) = &l.witness {
                    let _ = writeln!(out, "witness: {}", braces(w));
                }
                list(&mut out, "saturated primary ideals", &l.saturated_primaries);
                let _ = writeln!(out, "decompositions ({}):", l.table.len());
                for t in &l.table {
                    let parts: Vec<String> = t.components.iter().map(|c| braces(c)).collect();
                    let _ = writeln!(out, "  {} = {}", braces(&t.ideal), parts.join(" ∩ "));
                }
                let _ = writeln!(
                    out,
                    "laskerian without saturation requirement: {}",
                    l.unrestricted_laskerian
                );
            }
            Payload::Evans(e) => {
                let _ = writeln!(out, "evans property: {}", e.passed);
                for r in &e.reports {
                    let _ = writeln!(
                        out,
                        "  I = {}: D_A(I) = {}, {}",
                        braces(&r.ideal),
                        braces(&r.divisor_set),
                        if r.passed { "pass" } else { "FAIL" }
                    );
                    for c in &r.maximal_conductors {
                        let _ = writeln!(out, "    C_{}(I) = {}", c.witness, braces(&c.conductor));
                    }
                }
            }
            Payload::Audit(a) => {
                for c in &a.checks {
                    let _ = writeln!(
                        out,
                        "  [{}] {} ({} instances)",
                        if c.passed { "pass" } else { "FAIL" },
                        c.name,
                        c.instances
                    );
                    if let Some(w) = &c.witness {
                        let _ = writeln!(out, "         witness: {w}");
                    }
                }
                let _ = writeln!(out, "laskerian: {}", a.laskerian);
                let _ = writeln!(out, "audit: {}", if a.passed { "passed" } else { "FAILED" });
            }
            Payload::Builtin(_) => unreachable!(),
        }
        out
    }
}
