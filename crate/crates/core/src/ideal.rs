//! Ideals as membership masks, and the ideal-level algebra built on them.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::error::{Result, RingError};
use crate::ring::{Elem, FiniteRing, RingId};

/// An ideal of a [`FiniteRing`], stored as a membership mask over the carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ideal {
    ring: RingId,
    members: FixedBitSet,
}

impl Ideal {
    pub fn ring_id(&self) -> RingId {
        self.ring
    }

    #[inline]
    pub fn contains(&self, a: Elem) -> bool {
        self.members.contains(a.idx())
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    /// An ideal always contains zero; this is here for clippy's sake.
    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones().map(|i| Elem(i as u32))
    }

    /// Sorted element indices, the serialized form of an ideal.
    pub fn to_vec(&self) -> Vec<u32> {
        self.members.ones().map(|i| i as u32).collect()
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_proper_subset(&self, other: &Ideal) -> bool {
        self.is_subset(other) && self != other
    }
}

/// Size first, then the sorted element list.
impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.members.ones().cmp(other.members.ones()))
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for Ideal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.members.ones().map(|i| i as u32))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Product,
    Intersection,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimalityKind {
    Prime,
    Maximal,
    Primary,
}

/// Why a primality test failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PrimalityWitness {
    /// The ideal contains 1.
    Improper,
    /// `a*b` lies in the ideal but the defining implication fails for `(a, b)`.
    Pair { a: Elem, b: Elem },
    /// `I + (a)` is still proper although `a` is outside `I`.
    NotMaximalAt { a: Elem },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Primality {
    pub holds: bool,
    pub witness: Option<PrimalityWitness>,
}

impl Primality {
    fn pass() -> Self {
        Self {
            holds: true,
            witness: None,
        }
    }

    fn fail(w: PrimalityWitness) -> Self {
        Self {
            holds: false,
            witness: Some(w),
        }
    }
}

/// `Ann(a) ⊆ Ann(a^2) ⊆ ...` up to the first repetition.
///
/// `anns[n - 1] = Ann(a^n)`; the last entry is the stable value, reached at
/// exponent `anns.len()`.
#[derive(Clone, Debug)]
pub struct AnnChain {
    pub anns: Vec<Ideal>,
}

impl AnnChain {
    pub fn stable_from(&self) -> usize {
        self.anns.len()
    }

    /// `Ann(a^n)` for any `n >= 1`.
    pub fn at(&self, n: usize) -> &Ideal {
        assert!(n >= 1);
        &self.anns[n.min(self.anns.len()) - 1]
    }

    pub fn stable(&self) -> &Ideal {
        self.anns.last().expect("chain is non-empty")
    }
}

#[derive(Clone, Debug)]
pub struct IdealPower {
    pub ideal: Ideal,
    /// Smallest `k` with `I^k = I^(k+1)`.
    pub stabilizes_at: usize,
}

/// Outcome of testing `R x^n ∩ I = x^n I` for every `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerIntersectionOutcome {
    pub holds: bool,
    /// First `x` for which no exponent works.
    pub failing: Option<Elem>,
    /// Smallest working exponent for each `x` that was checked.
    pub exponents: Vec<(Elem, usize)>,
}

impl FiniteRing {
    fn ideal_unchecked(&self, members: FixedBitSet) -> Ideal {
        Ideal {
            ring: self.id(),
            members,
        }
    }

    /// Validates an arbitrary subset as an ideal.
    pub fn ideal_from_elements(&self, elems: &[Elem]) -> Result<Ideal> {
        let mut mask = FixedBitSet::with_capacity(self.order());
        for &e in elems {
            mask.insert(self.elem(e.0 as u64)?.idx());
        }
        let ideal = self.ideal_unchecked(mask);
        self.validate_ideal(&ideal)?;
        Ok(ideal)
    }

    /// Checks the ideal axioms on the full carrier.
    pub fn validate_ideal(&self, ideal: &Ideal) -> Result<()> {
        if ideal.ring_id() != self.id() {
            return Err(RingError::RingMismatch);
        }
        if !ideal.contains(self.zero()) {
            return Err(RingError::NotAnIdeal("missing zero".into()));
        }
        for a in ideal.elements() {
            if !ideal.contains(self.neg(a)) {
                return Err(RingError::NotAnIdeal(format!(
                    "not closed under negation at {a}"
                )));
            }
            for b in ideal.elements() {
                if !ideal.contains(self.add(a, b)) {
                    return Err(RingError::NotAnIdeal(format!("{a} + {b} escapes")));
                }
            }
            for r in self.elements() {
                if !ideal.contains(self.mul(r, a)) {
                    return Err(RingError::NotAnIdeal(format!("{r} * {a} escapes")));
                }
            }
        }
        Ok(())
    }

    pub fn zero_ideal(&self) -> Ideal {
        self.ideal_unchecked(self.mask_of([self.zero()]))
    }

    pub fn unit_ideal(&self) -> Ideal {
        let mut m = FixedBitSet::with_capacity(self.order());
        m.insert_range(..);
        self.ideal_unchecked(m)
    }

    pub fn is_proper(&self, ideal: &Ideal) -> bool {
        !ideal.contains(self.one())
    }

    /// `Ra`, which is already closed under addition.
    pub fn principal_ideal(&self, a: Elem) -> Ideal {
        self.ideal_unchecked(self.mask_of(self.elements().map(|r| self.mul(r, a))))
    }

    /// Smallest ideal containing `gens`.
    pub fn ideal_from_generators(&self, gens: &[Elem]) -> Ideal {
        gens.iter().fold(self.zero_ideal(), |acc, &g| {
            self.sum(&acc, &self.principal_ideal(g))
        })
    }

    /// Greedy generating set: scan members upward, keep those not yet generated.
    pub fn minimal_generators(&self, ideal: &Ideal) -> Vec<Elem> {
        self.assert_owns(ideal);
        let mut gens = Vec::new();
        let mut cur = self.zero_ideal();
        for a in ideal.elements() {
            if !cur.contains(a) {
                gens.push(a);
                cur = self.sum(&cur, &self.principal_ideal(a));
            }
        }
        gens
    }

    pub fn sum(&self, i: &Ideal, j: &Ideal) -> Ideal {
        self.assert_owns(i);
        self.assert_owns(j);
        if i.is_subset(j) {
            return j.clone();
        }
        if j.is_subset(i) {
            return i.clone();
        }
        let mut out = j.members.clone();
        for x in i.elements() {
            if !out.contains(x.idx()) {
                for y in j.elements() {
                    out.insert(self.add(x, y).idx());
                }
            }
        }
        self.ideal_unchecked(out)
    }

    /// Additive subgroup generated by a set that is already closed under
    /// multiplication by ring elements, hence an ideal.
    fn additive_span(&self, gens: &FixedBitSet) -> Ideal {
        let mut out = self.mask_of([self.zero()]);
        for g in gens.ones().map(|i| Elem(i as u32)) {
            if out.contains(g.idx()) {
                continue;
            }
            let old: Vec<Elem> = out.ones().map(|i| Elem(i as u32)).collect();
            let mut m = g;
            while m != self.zero() {
                for &r in &old {
                    out.insert(self.add(r, m).idx());
                }
                m = self.add(m, g);
            }
        }
        self.ideal_unchecked(out)
    }

    pub fn product(&self, i: &Ideal, j: &Ideal) -> Ideal {
        self.assert_owns(i);
        self.assert_owns(j);
        let mut prods = FixedBitSet::with_capacity(self.order());
        for a in i.elements() {
            for b in j.elements() {
                prods.insert(self.mul(a, b).idx());
            }
        }
        self.additive_span(&prods)
    }

    pub fn intersection(&self, i: &Ideal, j: &Ideal) -> Ideal {
        self.assert_owns(i);
        self.assert_owns(j);
        let mut m = i.members.clone();
        m.intersect_with(&j.members);
        self.ideal_unchecked(m)
    }

    /// Checked entry point for sum, product and intersection.
    pub fn ideal_algebra(&self, i: &Ideal, j: &Ideal, op: IdealOp) -> Result<Ideal> {
        if i.ring_id() != self.id() || j.ring_id() != self.id() {
            return Err(RingError::RingMismatch);
        }
        Ok(match op {
            IdealOp::Sum => self.sum(i, j),
            IdealOp::Product => self.product(i, j),
            IdealOp::Intersection => self.intersection(i, j),
        })
    }

    /// `I^n` by iterated products, plus the index where the powers stabilize.
    pub fn ideal_power(&self, ideal: &Ideal, n: usize) -> IdealPower {
        assert!(n >= 1, "ideal powers start at 1");
        let mut powers = vec![ideal.clone()];
        loop {
            let next = self.product(powers.last().unwrap(), ideal);
            if &next == powers.last().unwrap() {
                break;
            }
            powers.push(next);
        }
        let stabilizes_at = powers.len();
        IdealPower {
            ideal: powers[n.min(stabilizes_at) - 1].clone(),
            stabilizes_at,
        }
    }

    /// `{a : a^k ∈ I for some k >= 1}`.
    pub fn radical(&self, ideal: &Ideal) -> Ideal {
        self.assert_owns(ideal);
        let mask = self.mask_of(self.elements().filter(|&a| {
            ideal.contains(a)
                || self
                    .power_cycle(a)
                    .powers
                    .iter()
                    .any(|&x| ideal.contains(x))
        }));
        self.ideal_unchecked(mask)
    }

    pub fn annihilator(&self, a: Elem) -> Ideal {
        self.ideal_unchecked(
            self.mask_of(self.elements().filter(|&x| self.mul(x, a) == self.zero())),
        )
    }

    pub fn annihilator_of_ideal(&self, ideal: &Ideal) -> Ideal {
        self.assert_owns(ideal);
        self.ideal_unchecked(
            self.mask_of(
                self.elements()
                    .filter(|&x| ideal.elements().all(|a| self.mul(x, a) == self.zero())),
            ),
        )
    }

    /// Computes `Ann(a^n)` for increasing `n` until two consecutive terms agree.
    pub fn ann_chain(&self, a: Elem) -> AnnChain {
        let mut anns = vec![self.annihilator(a)];
        let mut power = a;
        loop {
            power = self.mul(power, a);
            let next = self.annihilator(power);
            if &next == anns.last().unwrap() {
                return AnnChain { anns };
            }
            anns.push(next);
        }
    }

    /// Some `(c, d)` with `c ∈ A`, `d ∈ B`, `c + d = 1`, i.e. `A + B = R`.
    pub fn unit_sum_witness(&self, a: &Ideal, b: &Ideal) -> Option<(Elem, Elem)> {
        a.elements()
            .map(|c| (c, self.one_minus(c)))
            .find(|&(_, d)| b.contains(d))
    }

    /// The complete ideal lattice: principal ideals closed under sums, sorted
    /// by size and then by element list.
    pub fn all_ideals(&self, bound: usize) -> Result<Vec<Ideal>> {
        if self.order() > bound {
            return Err(RingError::OrderTooLarge {
                what: "ideal lattice",
                order: self.order(),
                bound,
            });
        }
        let mut principals: Vec<Ideal> = Vec::new();
        let mut seen: HashSet<Ideal> = HashSet::new();
        for a in self.elements() {
            let p = self.principal_ideal(a);
            if seen.insert(p.clone()) {
                principals.push(p);
            }
        }
        let mut queue: VecDeque<Ideal> = principals.iter().cloned().collect();
        while let Some(i) = queue.pop_front() {
            for p in &principals {
                let s = self.sum(&i, p);
                if !seen.contains(&s) {
                    seen.insert(s.clone());
                    queue.push_back(s);
                }
            }
        }
        let mut all: Vec<Ideal> = seen.into_iter().collect();
        all.sort();
        Ok(all)
    }

    /// Prime, maximal or primary test with the lexicographically smallest
    /// counterexample on failure.
    pub fn primality(&self, ideal: &Ideal, kind: PrimalityKind) -> Primality {
        self.assert_owns(ideal);
        if !self.is_proper(ideal) {
            return Primality::fail(PrimalityWitness::Improper);
        }
        match kind {
            PrimalityKind::Prime => {
                for a in self.elements().filter(|&a| !ideal.contains(a)) {
                    for b in self.elements().filter(|&b| !ideal.contains(b)) {
                        if ideal.contains(self.mul(a, b)) {
                            return Primality::fail(PrimalityWitness::Pair { a, b });
                        }
                    }
                }
                Primality::pass()
            }
            PrimalityKind::Maximal => {
                for a in self.elements().filter(|&a| !ideal.contains(a)) {
                    let s = self.sum(ideal, &self.principal_ideal(a));
                    if self.is_proper(&s) {
                        return Primality::fail(PrimalityWitness::NotMaximalAt { a });
                    }
                }
                Primality::pass()
            }
            PrimalityKind::Primary => {
                let rad = self.radical(ideal);
                for a in self.elements().filter(|&a| !ideal.contains(a)) {
                    for b in self.elements().filter(|&b| !rad.contains(b)) {
                        if ideal.contains(self.mul(a, b)) {
                            return Primality::fail(PrimalityWitness::Pair { a, b });
                        }
                    }
                }
                Primality::pass()
            }
        }
    }

    /// For every `x`, searches `n` up to the power-cycle length of `x` with
    /// `R x^n ∩ I = x^n I`.
    pub fn power_intersection_hypothesis(&self, ideal: &Ideal) -> PowerIntersectionOutcome {
        self.assert_owns(ideal);
        let mut exponents = Vec::with_capacity(self.order());
        for x in self.elements() {
            let cycle = self.power_cycle(x);
            let found = (1..=cycle.len()).find(|&n| {
                let xn = cycle.pow(n);
                let lhs = self.intersection(&self.principal_ideal(xn), ideal);
                let rhs = self.mask_of(ideal.elements().map(|i| self.mul(xn, i)));
                lhs.members == rhs
            });
            match found {
                Some(n) => exponents.push((x, n)),
                None => {
                    return PowerIntersectionOutcome {
                        holds: false,
                        failing: Some(x),
                        exponents,
                    }
                }
            }
        }
        PowerIntersectionOutcome {
            holds: true,
            failing: None,
            exponents,
        }
    }
}
