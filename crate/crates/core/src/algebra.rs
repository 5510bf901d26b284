//! Finite B₁-algebras as validated Cayley tables.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Largest supported carrier; element sets are 64-bit masks.
pub const MAX_ORDER: usize = 64;

/// Index of an element in its algebra. Index 0 is always the additive identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(u8);

impl ElementId {
    pub const ZERO: ElementId = ElementId(0);

    pub fn new(index: usize) -> Self {
        debug_assert!(index < MAX_ORDER);
        ElementId(index as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    AddCommutative,
    AddAssociative,
    AddIdempotent,
    AddIdentity,
    MulCommutative,
    MulAssociative,
    MulIdentity,
    MulAbsorbing,
    Distributive,
    CharacteristicOne,
    ZeroIsOne,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::AddCommutative => "add-commutative",
            Axiom::AddAssociative => "add-associative",
            Axiom::AddIdempotent => "add-idempotent",
            Axiom::AddIdentity => "add-identity",
            Axiom::MulCommutative => "mul-commutative",
            Axiom::MulAssociative => "mul-associative",
            Axiom::MulIdentity => "mul-identity",
            Axiom::MulAbsorbing => "mul-absorbing-zero",
            Axiom::Distributive => "distributive",
            Axiom::CharacteristicOne => "characteristic-one",
            Axiom::ZeroIsOne => "zero-distinct-from-one",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One failed axiom instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<ElementId>,
    /// Human-readable rendering using element labels.
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    /// Axioms that failed at least once, in declaration order.
    pub fn failed_axioms(&self) -> Vec<Axiom> {
        let mut v: Vec<Axiom> = self.violations.iter().map(|v| v.axiom).collect();
        v.sort();
        v.dedup();
        v
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            return f.write_str("all axioms hold");
        }
        write!(f, "{} axiom violation(s)", self.violations.len())?;
        for v in &self.violations {
            write!(f, "\n  {}: {}", v.axiom, v.detail)?;
        }
        Ok(())
    }
}

/// Checks every B₁-algebra axiom exhaustively and collects all violations.
pub fn check_axioms(
    names: &[String],
    add: &[ElementId],
    mul: &[ElementId],
    zero: ElementId,
    one: ElementId,
) -> AxiomReport {
    let n = names.len();
    let ad = |a: usize, b: usize| add[a * n + b].index();
    let mu = |a: usize, b: usize| mul[a * n + b].index();
    let nm = |i: usize| names[i].as_str();
    let id = ElementId::new;
    let (z, o) = (zero.index(), one.index());
    let mut violations = Vec::new();
    let mut push = |axiom, witness: Vec<usize>, detail: String| {
        violations.push(Violation {
            axiom,
            witness: witness.into_iter().map(id).collect(),
            detail,
        })
    };

    if z == o && n > 1 {
        push(
            Axiom::ZeroIsOne,
            vec![z],
            format!(
                "zero and one are both `{}` in an algebra of order {n}",
                nm(z)
            ),
        );
    }
    if ad(o, o) != o {
        push(
            Axiom::CharacteristicOne,
            vec![o],
            format!("{0} + {0} = {1}, expected {0}", nm(o), nm(ad(o, o))),
        );
    }
    for a in 0..n {
        if ad(a, a) != a {
            push(
                Axiom::AddIdempotent,
                vec![a],
                format!("{0} + {0} = {1}", nm(a), nm(ad(a, a))),
            );
        }
        // Report the failing side only; commutativity is checked separately.
        let sided = |f: &dyn Fn(usize, usize) -> usize, op: &str, e: usize, want: usize| {
            if f(a, e) != want {
                Some(format!(
                    "{} {op} {} = {}, expected {}",
                    nm(a),
                    nm(e),
                    nm(f(a, e)),
                    nm(want)
                ))
            } else if f(e, a) != want {
                Some(format!(
                    "{} {op} {} = {}, expected {}",
                    nm(e),
                    nm(a),
                    nm(f(e, a)),
                    nm(want)
                ))
            } else {
                None
            }
        };
        if let Some(detail) = sided(&ad, "+", z, a) {
            push(Axiom::AddIdentity, vec![a], detail);
        }
        if let Some(detail) = sided(&mu, "·", o, a) {
            push(Axiom::MulIdentity, vec![a], detail);
        }
        if let Some(detail) = sided(&mu, "·", z, z) {
            push(Axiom::MulAbsorbing, vec![a], detail);
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if ad(a, b) != ad(b, a) {
                push(
                    Axiom::AddCommutative,
                    vec![a, b],
                    format!(
                        "{0} + {1} = {2} but {1} + {0} = {3}",
                        nm(a),
                        nm(b),
                        nm(ad(a, b)),
                        nm(ad(b, a))
                    ),
                );
            }
            if mu(a, b) != mu(b, a) {
                push(
                    Axiom::MulCommutative,
                    vec![a, b],
                    format!(
                        "{0}·{1} = {2} but {1}·{0} = {3}",
                        nm(a),
                        nm(b),
                        nm(mu(a, b)),
                        nm(mu(b, a))
                    ),
                );
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (l, r) = (ad(ad(a, b), c), ad(a, ad(b, c)));
                if l != r {
                    push(
                        Axiom::AddAssociative,
                        vec![a, b, c],
                        format!(
                            "({0} + {1}) + {2} = {3} but {0} + ({1} + {2}) = {4}",
                            nm(a),
                            nm(b),
                            nm(c),
                            nm(l),
                            nm(r)
                        ),
                    );
                }
                let (l, r) = (mu(mu(a, b), c), mu(a, mu(b, c)));
                if l != r {
                    push(
                        Axiom::MulAssociative,
                        vec![a, b, c],
                        format!(
                            "({0}·{1})·{2} = {3} but {0}·({1}·{2}) = {4}",
                            nm(a),
                            nm(b),
                            nm(c),
                            nm(l),
                            nm(r)
                        ),
                    );
                }
                let (l, r) = (mu(a, ad(b, c)), ad(mu(a, b), mu(a, c)));
                if l != r {
                    push(
                        Axiom::Distributive,
                        vec![a, b, c],
                        format!(
                            "{0}·({1} + {2}) = {3} but {0}·{1} + {0}·{2} = {4}",
                            nm(a),
                            nm(b),
                            nm(c),
                            nm(l),
                            nm(r)
                        ),
                    );
                }
                let (l, r) = (mu(ad(b, c), a), ad(mu(b, a), mu(c, a)));
                if l != r {
                    push(
                        Axiom::Distributive,
                        vec![b, c, a],
                        format!(
                            "({1} + {2})·{0} = {3} but {1}·{0} + {2}·{0} = {4}",
                            nm(a),
                            nm(b),
                            nm(c),
                            nm(l),
                            nm(r)
                        ),
                    );
                }
            }
        }
    }
    AxiomReport {
        valid: violations.is_empty(),
        violations,
    }
}

fn valid_label(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(|c| c.is_whitespace() || c == ',' || c == '#')
}

/// A validated, immutable finite B₁-algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteB1Algebra {
    names: Vec<String>,
    add: Vec<ElementId>,
    mul: Vec<ElementId>,
    one: ElementId,
    lookup: HashMap<String, ElementId>,
}

impl fmt::Debug for FiniteB1Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteB1Algebra")
            .field("names", &self.names)
            .field("one", &self.one)
            .finish_non_exhaustive()
    }
}

impl FiniteB1Algebra {
    /// Validates labels, table shapes and axioms. Element 0 is the zero.
    pub fn from_tables(
        names: Vec<String>,
        add: Vec<ElementId>,
        mul: Vec<ElementId>,
        one: ElementId,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        if n > MAX_ORDER {
            return Err(Error::TooLarge(n));
        }
        let mut lookup = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if !valid_label(name) {
                return Err(Error::InvalidLabel(name.clone()));
            }
            if lookup.insert(name.clone(), ElementId::new(i)).is_some() {
                return Err(Error::DuplicateLabel(name.clone()));
            }
        }
        for (table, t) in [("add", &add), ("mul", &mul)] {
            if t.len() != n * n {
                return Err(Error::Dimension {
                    table,
                    detail: format!("expected {} entries, found {}", n * n, t.len()),
                });
            }
            if let Some(bad) = t.iter().find(|e| e.index() >= n) {
                return Err(Error::Dimension {
                    table,
                    detail: format!("entry index {} out of range", bad.index()),
                });
            }
        }
        if one.index() >= n {
            return Err(Error::Dimension {
                table: "one",
                detail: format!("index {} out of range", one.index()),
            });
        }
        let report = check_axioms(&names, &add, &mul, ElementId::ZERO, one);
        if !report.valid {
            return Err(Error::Axioms(report));
        }
        Ok(FiniteB1Algebra {
            names,
            add,
            mul,
            one,
            lookup,
        })
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn zero(&self) -> ElementId {
        ElementId::ZERO
    }

    pub fn one(&self) -> ElementId {
        self.one
    }

    /// Order 1, where zero = one. Spectrum operations return empty results on it.
    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, e: ElementId) -> &str {
        &self.names[e.index()]
    }

    pub fn element(&self, label: &str) -> Option<ElementId> {
        self.lookup.get(label).copied()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.order()).map(ElementId::new)
    }

    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.order())
    }

    #[inline]
    pub fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        self.add[a.index() * self.order() + b.index()]
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.mul[a.index() * self.order() + b.index()]
    }

    /// `a^n` for `n ≥ 0` (`a^0 = 1`).
    pub fn pow(&self, a: ElementId, n: usize) -> ElementId {
        let mut acc = self.one;
        for _ in 0..n {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Whether some power `a^n` with `1 ≤ n ≤ order` lies in `set`. In a finite
    /// monoid the sequence of powers of `a` has entered its cycle by then, so
    /// no higher power can land anywhere new.
    pub fn some_power_in(&self, a: ElementId, set: ElementSet) -> bool {
        let mut p = a;
        for _ in 0..self.order() {
            if set.contains(p) {
                return true;
            }
            p = self.mul(p, a);
        }
        false
    }

    /// Sum of all members of a non-empty set; zero for the empty set.
    pub fn sum(&self, set: ElementSet) -> ElementId {
        set.iter().fold(self.zero(), |acc, e| self.add(acc, e))
    }

    pub fn labels(&self, set: ElementSet) -> Vec<&str> {
        set.iter().map(|e| self.name(e)).collect()
    }

    /// Comma-joined labels in element order, e.g. `0,z,x`.
    pub fn format_set(&self, set: ElementSet) -> String {
        self.labels(set).join(",")
    }

    pub fn add_table(&self) -> &[ElementId] {
        &self.add
    }

    pub fn mul_table(&self) -> &[ElementId] {
        &self.mul
    }

    /// Returns a copy with every element relabelled. Labels must stay distinct.
    pub fn relabel(&self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.order() {
            return Err(Error::Dimension {
                table: "names",
                detail: format!("expected {} labels, found {}", self.order(), names.len()),
            });
        }
        FiniteB1Algebra::from_tables(names, self.add.clone(), self.mul.clone(), self.one)
    }
}

/// Builds an algebra from labelled tables. Row `i`, column `j` is
/// `names[i] ∘ names[j]`. The zero must be the first label.
pub fn build_algebra<N: AsRef<str>, T: AsRef<str>>(
    names: &[N],
    add: &[Vec<T>],
    mul: &[Vec<T>],
    zero: &str,
    one: &str,
) -> Result<FiniteB1Algebra> {
    let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
    let n = names.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    if n > MAX_ORDER {
        return Err(Error::TooLarge(n));
    }
    let mut lookup = HashMap::new();
    for (i, name) in names.iter().enumerate() {
        if !valid_label(name) {
            return Err(Error::InvalidLabel(name.clone()));
        }
        if lookup.insert(name.as_str(), ElementId::new(i)).is_some() {
            return Err(Error::DuplicateLabel(name.clone()));
        }
    }
    let resolve = |s: &str| {
        lookup
            .get(s)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))
    };
    let zero_id = resolve(zero)?;
    if zero_id != ElementId::ZERO {
        return Err(Error::ZeroNotFirst(zero.to_string()));
    }
    let one_id = resolve(one)?;
    let flat = |table: &'static str, rows: &[Vec<T>]| -> Result<Vec<ElementId>> {
        if rows.len() != n {
            return Err(Error::Dimension {
                table,
                detail: format!("expected {n} rows, found {}", rows.len()),
            });
        }
        let mut out = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Dimension {
                    table,
                    detail: format!("row `{}` has {} entries, expected {n}", names[i], row.len()),
                });
            }
            for cell in row {
                out.push(resolve(cell.as_ref())?);
            }
        }
        Ok(out)
    };
    let add = flat("add", add)?;
    let mul = flat("mul", mul)?;
    FiniteB1Algebra::from_tables(names, add, mul, one_id)
}

/// The natural order: `a ≤ b` iff `a + b = b`.
pub fn leq(alg: &FiniteB1Algebra, a: ElementId, b: ElementId) -> bool {
    alg.add(a, b) == b
}

/// Result of [`direct_product`]; `exceeds_bound` warns that ideal enumeration
/// on the product will be refused under the configured bound.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub algebra: FiniteB1Algebra,
    pub exceeds_bound: bool,
}

/// Componentwise product. Element `(i, j)` gets index `i·|B| + j` and label `(a;b)`.
pub fn direct_product(a: &FiniteB1Algebra, b: &FiniteB1Algebra) -> Result<DirectProduct> {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    if n > MAX_ORDER {
        return Err(Error::TooLarge(n));
    }
    let pair = |i: ElementId, j: ElementId| ElementId::new(i.index() * nb + j.index());
    let mut names = Vec::with_capacity(n);
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for i in a.elements() {
        for j in b.elements() {
            names.push(format!("({};{})", a.name(i), b.name(j)));
        }
    }
    for i in a.elements() {
        for j in b.elements() {
            for k in a.elements() {
                for l in b.elements() {
                    add.push(pair(a.add(i, k), b.add(j, l)));
                    mul.push(pair(a.mul(i, k), b.mul(j, l)));
                }
            }
        }
    }
    let algebra = FiniteB1Algebra::from_tables(names, add, mul, pair(a.one(), b.one()))?;
    Ok(DirectProduct {
        exceeds_bound: n > crate::ideal::enumeration_bound(),
        algebra,
    })
}

/// The chain `0 < c1 < … < c(n-2) < 1` with `+ = max` and `· = min`.
pub fn chain_algebra(n: usize) -> Result<FiniteB1Algebra> {
    if n < 2 {
        return Err(Error::ChainTooShort(n));
    }
    if n > MAX_ORDER {
        return Err(Error::TooLarge(n));
    }
    let names: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            i if i == n - 1 => "1".to_string(),
            i => format!("c{i}"),
        })
        .collect();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            add.push(ElementId::new(i.max(j)));
            mul.push(ElementId::new(i.min(j)));
        }
    }
    FiniteB1Algebra::from_tables(names, add, mul, ElementId::new(n - 1))
}

/// The Boolean semifield B₁ = {0, 1}.
pub fn b1() -> FiniteB1Algebra {
    chain_algebra(2).expect("two-element chain is valid")
}

pub fn trivial() -> FiniteB1Algebra {
    FiniteB1Algebra::from_tables(
        vec!["0".into()],
        vec![ElementId::ZERO],
        vec![ElementId::ZERO],
        ElementId::ZERO,
    )
    .expect("one-element algebra is valid")
}

/// Source of the six-element non-laskerian algebra, in `.b1a` format.
pub const EXAMPLE_6_2_SOURCE: &str = include_str!("../algebras/example-6-2.b1a");

/// The six-element algebra `{0, z, x, y, u, 1}`, in that element order.
pub fn example_6_2() -> FiniteB1Algebra {
    crate::format::parse_algebra(EXAMPLE_6_2_SOURCE).expect("shipped example-6-2 tables are valid")
}

/// `B₁^k`; elements are labelled by bit strings, first factor leftmost.
pub fn boolean_power(k: usize) -> Result<FiniteB1Algebra> {
    if k == 0 {
        return Ok(trivial());
    }
    if k > 6 {
        return Err(Error::TooLarge(1 << k));
    }
    let mut acc = b1();
    for _ in 1..k {
        acc = direct_product(&acc, &b1())?.algebra;
    }
    let names = (0..1usize << k).map(|i| format!("{i:0k$b}")).collect();
    acc.relabel(names)
}

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: &[&str] = &["b1", "trivial", "example-6-2", "chain-<n>", "bool-<k>"];

pub fn builtin(name: &str) -> Result<FiniteB1Algebra> {
    let unknown = || Error::UnknownBuiltin(name.to_string());
    match name {
        "b1" => Ok(b1()),
        "trivial" => Ok(trivial()),
        "example-6-2" => Ok(example_6_2()),
        _ => {
            if let Some(n) = name.strip_prefix("chain-") {
                chain_algebra(n.parse().map_err(|_| unknown())?)
            } else if let Some(k) = name.strip_prefix("bool-") {
                boolean_power(k.parse().map_err(|_| unknown())?)
            } else {
                Err(unknown())
            }
        }
    }
}
