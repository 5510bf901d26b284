//! Shared test support: brute-force oracles that read only the Cayley tables,
//! and the deterministic test fleet.

#![allow(dead_code)]

use b1a::algebra::{b1, chain_algebra, example_6_2};
use b1a::{
    bourne_congruence, direct_product, quotient, ElementId, ElementSet, FiniteB1Algebra, Ideal,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn ids(alg: &FiniteB1Algebra) -> Vec<ElementId> {
    alg.elements().collect()
}

pub fn set_of(alg: &FiniteB1Algebra, labels: &str) -> ElementSet {
    labels
        .split(',')
        .filter(|s| !s.is_empty())
        .map(|l| alg.element(l).unwrap_or_else(|| panic!("no label {l}")))
        .collect()
}

pub fn ideal(alg: &FiniteB1Algebra, labels: &str) -> Ideal {
    Ideal::parse(alg, labels).unwrap()
}

// ---------------------------------------------------------------------------
// Oracles. None of these call into the engine beyond the raw table lookups.
// ---------------------------------------------------------------------------

pub fn is_ideal_oracle(alg: &FiniteB1Algebra, s: ElementSet) -> bool {
    if !s.contains(alg.zero()) {
        return false;
    }
    for a in ids(alg) {
        for b in ids(alg) {
            if s.contains(a) && s.contains(b) && !s.contains(alg.add(a, b)) {
                return false;
            }
            if s.contains(b) && !s.contains(alg.mul(a, b)) {
                return false;
            }
        }
    }
    true
}

/// Every ideal, by scanning all `2^n` subsets.
pub fn ideals_by_subset_scan(alg: &FiniteB1Algebra) -> Vec<ElementSet> {
    let n = alg.order();
    let mut out: Vec<ElementSet> = (0u64..1 << n)
        .map(ElementSet::from_bits)
        .filter(|&s| is_ideal_oracle(alg, s))
        .collect();
    out.sort_by(ElementSet::canonical_cmp);
    out
}

pub fn generated_oracle(alg: &FiniteB1Algebra, gens: ElementSet) -> ElementSet {
    ideals_by_subset_scan(alg)
        .into_iter()
        .filter(|i| gens.is_subset(*i))
        .fold(alg.all(), |acc, i| acc.intersection(i))
}

pub fn saturation_oracle(alg: &FiniteB1Algebra, s: ElementSet) -> ElementSet {
    ids(alg)
        .into_iter()
        .filter(|&a| s.iter().any(|i| alg.add(a, i) == i))
        .collect()
}

/// All powers `a^n`, `n ≥ 1`, iterated until the sequence repeats.
pub fn powers_until_cycle(alg: &FiniteB1Algebra, a: ElementId) -> ElementSet {
    let mut seen = ElementSet::EMPTY;
    let mut p = a;
    while seen.insert(p) {
        p = alg.mul(p, a);
    }
    seen
}

pub fn radical_oracle(alg: &FiniteB1Algebra, s: ElementSet) -> ElementSet {
    ids(alg)
        .into_iter()
        .filter(|&a| !powers_until_cycle(alg, a).intersection(s).is_empty())
        .collect()
}

/// Prime iff proper and the complement is multiplicatively closed.
pub fn prime_by_complement(alg: &FiniteB1Algebra, s: ElementSet) -> bool {
    let comp = alg.all().difference(s);
    comp.contains(alg.one())
        && comp
            .iter()
            .all(|a| comp.iter().all(|b| comp.contains(alg.mul(a, b))))
}

/// Primary with the power search running until the cycle closes.
pub fn primary_by_cycle(alg: &FiniteB1Algebra, s: ElementSet) -> bool {
    if s.contains(alg.one()) {
        return false;
    }
    for x in ids(alg) {
        for y in ids(alg) {
            if s.contains(alg.mul(x, y))
                && !s.contains(x)
                && powers_until_cycle(alg, y).intersection(s).is_empty()
            {
                return false;
            }
        }
    }
    true
}

pub fn annihilator_oracle(alg: &FiniteB1Algebra, s: ElementId) -> ElementSet {
    ids(alg)
        .into_iter()
        .filter(|&x| alg.mul(s, x) == alg.zero())
        .collect()
}

pub fn zero_divisors_oracle(alg: &FiniteB1Algebra) -> ElementSet {
    let z = alg.zero();
    let mut d = ElementSet::EMPTY;
    for a in ids(alg) {
        for b in ids(alg) {
            if a != z && b != z && alg.mul(a, b) == z {
                d.insert(a);
            }
        }
    }
    d
}

/// Bourne classes from the triple scan `a + w = b + w`.
pub fn bourne_classes_oracle(alg: &FiniteB1Algebra, i: ElementSet) -> Vec<ElementSet> {
    let mut classes: Vec<ElementSet> = Vec::new();
    for a in ids(alg) {
        let class: ElementSet = ids(alg)
            .into_iter()
            .filter(|&b| i.iter().any(|w| alg.add(a, w) == alg.add(b, w)))
            .collect();
        if !classes.contains(&class) {
            classes.push(class);
        }
    }
    classes
}

pub fn minimal_sets(family: &[ElementSet]) -> Vec<ElementSet> {
    family
        .iter()
        .filter(|p| !family.iter().any(|q| q != *p && q.is_subset(**p)))
        .copied()
        .collect()
}

pub fn maximal_sets(family: &[ElementSet]) -> Vec<ElementSet> {
    family
        .iter()
        .filter(|p| !family.iter().any(|q| q != *p && p.is_subset(*q)))
        .copied()
        .collect()
}

/// Brute-force isomorphism test over all zero-fixing bijections.
pub fn isomorphic(a: &FiniteB1Algebra, b: &FiniteB1Algebra) -> bool {
    fn extend(
        a: &FiniteB1Algebra,
        b: &FiniteB1Algebra,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let k = map.len();
        if k == a.order() {
            let f = |e: ElementId| ElementId::new(map[e.index()]);
            return f(a.one()) == b.one()
                && a.elements().all(|x| {
                    a.elements().all(|y| {
                        f(a.add(x, y)) == b.add(f(x), f(y)) && f(a.mul(x, y)) == b.mul(f(x), f(y))
                    })
                });
        }
        for t in 0..b.order() {
            if !used[t] && (k != 0 || t == 0) {
                used[t] = true;
                map.push(t);
                if extend(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[t] = false;
            }
        }
        false
    }
    a.order() == b.order() && extend(a, b, &mut Vec::new(), &mut vec![false; b.order()])
}

// ---------------------------------------------------------------------------
// Fleet.
// ---------------------------------------------------------------------------

pub struct FleetMember {
    pub name: String,
    pub algebra: FiniteB1Algebra,
}

impl std::fmt::Debug for FleetMember {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}\n{}",
            self.name,
            b1a::format::write_algebra(&self.algebra)
        )
    }
}

/// B1, the six-element example and chains 2..=6.
pub fn base_algebras() -> Vec<FleetMember> {
    let mut v = vec![
        FleetMember {
            name: "b1".into(),
            algebra: b1(),
        },
        FleetMember {
            name: "example-6-2".into(),
            algebra: example_6_2(),
        },
    ];
    for n in 2..=6 {
        v.push(FleetMember {
            name: format!("chain-{n}"),
            algebra: chain_algebra(n).unwrap(),
        });
    }
    v
}

/// Unordered pairwise products of base algebras with order at most 12.
pub fn product_algebras() -> Vec<FleetMember> {
    let base = base_algebras();
    let mut v = Vec::new();
    for i in 0..base.len() {
        for j in i..base.len() {
            let (a, b) = (&base[i], &base[j]);
            if a.algebra.order() * b.algebra.order() <= 12 {
                v.push(FleetMember {
                    name: format!("{}×{}", a.name, b.name),
                    algebra: direct_product(&a.algebra, &b.algebra).unwrap().algebra,
                });
            }
        }
    }
    v
}

/// Random join-semilattice with bottom, as a union-closed family of subsets
/// of a small universe, plus a random commutative multiplication with the
/// required identity and absorbing element. Validity is decided by the
/// engine's axiom check.
fn propose_tables(rng: &mut ChaCha8Rng, n: usize) -> Option<FiniteB1Algebra> {
    let universe = rng.gen_range(2..=4u32);
    let mut family: Vec<u32> = vec![0];
    let mut guard = 0;
    while family.len() < n && guard < 64 {
        guard += 1;
        let s = rng.gen_range(1..1u32 << universe);
        let mut grown = family.clone();
        grown.push(s);
        // close under union
        let mut i = 0;
        while i < grown.len() {
            for j in 0..grown.len() {
                let u = grown[i] | grown[j];
                if !grown.contains(&u) {
                    grown.push(u);
                }
            }
            i += 1;
        }
        if grown.len() <= n {
            family = grown;
        }
    }
    if family.len() != n {
        return None;
    }
    family[1..].shuffle(rng);
    let idx = |s: u32| ElementId::new(family.iter().position(|&t| t == s).unwrap());
    let mut add = Vec::with_capacity(n * n);
    for &a in &family {
        for &b in &family {
            add.push(idx(a | b));
        }
    }
    let one = rng.gen_range(1..n);
    let mut mul = vec![ElementId::ZERO; n * n];
    for a in 0..n {
        for b in a..n {
            let v = if a == 0 || b == 0 {
                0
            } else if a == one {
                b
            } else if b == one {
                a
            } else {
                rng.gen_range(0..n)
            };
            mul[a * n + b] = ElementId::new(v);
            mul[b * n + a] = ElementId::new(v);
        }
    }
    let names = (0..n)
        .map(|i| if i == 0 { "0".into() } else { format!("e{i}") })
        .collect();
    FiniteB1Algebra::from_tables(names, add, mul, ElementId::new(one)).ok()
}

/// Subalgebra generated by `gens` together with 0 and 1.
fn subalgebra(alg: &FiniteB1Algebra, gens: ElementSet) -> FiniteB1Algebra {
    let mut s = gens.with(alg.zero()).with(alg.one());
    loop {
        let mut next = s;
        for a in s {
            for b in s {
                next.insert(alg.add(a, b));
                next.insert(alg.mul(a, b));
            }
        }
        if next == s {
            break;
        }
        s = next;
    }
    let members: Vec<ElementId> = s.iter().collect();
    let pos = |e: ElementId| ElementId::new(members.iter().position(|&m| m == e).unwrap());
    let mut add = Vec::new();
    let mut mul = Vec::new();
    for &a in &members {
        for &b in &members {
            add.push(pos(alg.add(a, b)));
            mul.push(pos(alg.mul(a, b)));
        }
    }
    let names = members.iter().map(|&e| alg.name(e).to_string()).collect();
    FiniteB1Algebra::from_tables(names, add, mul, pos(alg.one())).expect("subalgebras are valid")
}

/// Union-closed family with multiplication defined on join-irreducibles
/// (each product a random common lower bound) and extended by joins; the top
/// is the unit.
fn propose_join_extension(rng: &mut ChaCha8Rng, n: usize) -> Option<FiniteB1Algebra> {
    let universe = rng.gen_range(2..=4u32);
    let mut family: Vec<u32> = vec![0, (1 << universe) - 1];
    let mut guard = 0;
    while family.len() < n && guard < 64 {
        guard += 1;
        let mut grown = family.clone();
        grown.push(rng.gen_range(1..1u32 << universe));
        let mut i = 0;
        while i < grown.len() {
            for j in 0..grown.len() {
                let u = grown[i] | grown[j];
                if !grown.contains(&u) {
                    grown.push(u);
                }
            }
            i += 1;
        }
        if grown.len() <= n {
            family = grown;
        }
    }
    if family.len() != n {
        return None;
    }
    family.sort_by_key(|s| (s.count_ones(), *s));
    let below = |a: u32, b: u32| a & !b == 0;
    let irreducible: Vec<usize> = (1..n)
        .filter(|&k| {
            let a = family[k];
            let join = family
                .iter()
                .filter(|&&b| b != a && below(b, a))
                .fold(0, |acc, b| acc | b);
            join != a
        })
        .collect();
    let mut m = std::collections::HashMap::new();
    for (x, &i) in irreducible.iter().enumerate() {
        for &j in &irreducible[x..] {
            let common: Vec<u32> = family
                .iter()
                .copied()
                .filter(|&c| below(c, family[i]) && below(c, family[j]))
                .collect();
            let v = if i == j && rng.gen_bool(0.6) {
                family[i]
            } else {
                *common.choose(rng).unwrap()
            };
            m.insert((i, j), v);
            m.insert((j, i), v);
        }
    }
    let idx = |s: u32| ElementId::new(family.iter().position(|&t| t == s).unwrap());
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            add.push(idx(family[a] | family[b]));
            let mut p = 0;
            for &i in irreducible.iter().filter(|&&i| below(family[i], family[a])) {
                for &j in irreducible.iter().filter(|&&j| below(family[j], family[b])) {
                    p |= m[&(i, j)];
                }
            }
            if !family.contains(&p) {
                return None;
            }
            mul.push(idx(p));
        }
    }
    let names = (0..n)
        .map(|i| if i == 0 { "0".into() } else { format!("e{i}") })
        .collect();
    FiniteB1Algebra::from_tables(names, add, mul, ElementId::new(n - 1)).ok()
}

/// `count` valid algebras of order 2..=6 drawn by rejection sampling from a
/// mixture of random tables, random subalgebras and random Bourne quotients.
/// Accepted algebras join the pool. Isomorphic repeats are rejected while
/// fresh ones keep turning up.
pub fn random_algebras(count: usize, seed: u64) -> Vec<FleetMember> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<FiniteB1Algebra> =
        product_algebras().into_iter().map(|m| m.algebra).collect();
    pool.push(b1a::builtin("bool-3").unwrap());
    pool.push(b1a::builtin("bool-4").unwrap());
    pool.push(
        direct_product(&example_6_2(), &chain_algebra(3).unwrap())
            .unwrap()
            .algebra,
    );
    let mut out: Vec<FleetMember> = Vec::new();
    let mut attempts = 0usize;
    let mut since_fresh = 0usize;
    while out.len() < count {
        attempts += 1;
        assert!(attempts < 2_000_000, "rejection sampler stalled");
        let candidate = match rng.gen_range(0..4) {
            0 => {
                let n = rng.gen_range(2..=6);
                propose_tables(&mut rng, n)
            }
            1 => {
                let n = rng.gen_range(3..=6);
                propose_join_extension(&mut rng, n)
            }
            2 => {
                let base = pool.choose(&mut rng).unwrap();
                let gens: ElementSet = base.elements().filter(|_| rng.gen_bool(0.25)).collect();
                Some(subalgebra(base, gens))
            }
            _ => {
                let base = pool.choose(&mut rng).unwrap();
                let gens: ElementSet = base.elements().filter(|_| rng.gen_bool(0.2)).collect();
                let i = b1a::generated_ideal(base, gens);
                let q = quotient(base, &bourne_congruence(base, &i)).unwrap();
                Some(q.target)
            }
        };
        let Some(alg) = candidate else { continue };
        if !(2..=6).contains(&alg.order()) {
            continue;
        }
        let fresh = !out.iter().any(|m| isomorphic(&m.algebra, &alg));
        if !fresh && since_fresh < 300 {
            since_fresh += 1;
            continue;
        }
        since_fresh = 0;
        let k = out.len();
        let names = (0..alg.order())
            .map(|i| {
                if i == 0 {
                    "0".to_string()
                } else {
                    format!("r{k}_{i}")
                }
            })
            .collect();
        let alg = alg.relabel(names).unwrap();
        if fresh {
            if let Some(other) = out.choose(&mut rng) {
                if alg.order() * other.algebra.order() <= 24 {
                    pool.push(direct_product(&alg, &other.algebra).unwrap().algebra);
                }
            }
            pool.push(alg.clone());
        }
        out.push(FleetMember {
            name: format!("random-{k}"),
            algebra: alg,
        });
    }
    out
}

pub const FLEET_SEED: u64 = 0x00b1_a19e;

/// The full acceptance fleet.
pub fn fleet() -> Vec<FleetMember> {
    let mut v = base_algebras();
    v.extend(product_algebras());
    v.extend(random_algebras(200, FLEET_SEED));
    v
}
