//! Finite commutative unital rings stored as dense operation tables.
//!
//! Elements are indices `0..N`. Every structured construction (`Z/n`,
//! `F_p[x]/(f)`, products, quotients, localizations) is lowered to a pair of
//! `N x N` tables once, and all later algebra is table lookup.

pub mod iso;
pub mod spec;
mod table;

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Result, RingError};
use crate::ideal::Ideal;

pub use spec::RingSpec;

/// Largest ring order the table builder accepts.
pub const MAX_RING_ORDER: usize = 1024;

/// An element of a [`FiniteRing`], identified by its carrier index.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Identity of a constructed ring; ideals remember it so mixing rings is caught.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingId(u64);

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

/// The element-level operations exposed through [`FiniteRing::apply`].
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Neg,
    Sub,
    Mul,
    Pow(u64),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecialKind {
    Units,
    Idempotents,
    Nilpotents,
    ZeroDivisors,
}

/// The sequence `a, a^2, a^3, ...` up to its first repetition.
///
/// `powers[k - 1] = a^k` for `1 <= k <= cycle_start + period - 1`, all
/// distinct, and `a^(cycle_start + period) = a^cycle_start`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerCycle {
    pub powers: Vec<Elem>,
    pub cycle_start: usize,
    pub period: usize,
}

impl PowerCycle {
    /// `a^k` for `k >= 1`.
    pub fn pow(&self, k: usize) -> Elem {
        assert!(k >= 1, "exponent must be positive");
        if k <= self.powers.len() {
            self.powers[k - 1]
        } else {
            let offset = (k - self.cycle_start) % self.period;
            self.powers[self.cycle_start - 1 + offset]
        }
    }

    /// Number of distinct positive powers.
    pub fn len(&self) -> usize {
        self.powers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn reaches(&self, x: Elem) -> bool {
        self.powers.contains(&x)
    }
}

/// A finite commutative ring with identity, `zero != one`.
#[derive(Clone, Debug)]
pub struct FiniteRing {
    id: RingId,
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: Elem,
    one: Elem,
    spec: RingSpec,
    labels: Vec<String>,
}

impl FiniteRing {
    /// Builds a ring from its row-major tables, checking every ring axiom.
    pub fn from_tables(
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: Elem,
        one: Elem,
        spec: RingSpec,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let n2 = add.len();
        let order = (n2 as f64).sqrt().round() as usize;
        if order * order != n2 || mul.len() != n2 {
            return Err(RingError::NotARing(
                "tables are not square of equal size".into(),
            ));
        }
        if order > MAX_RING_ORDER {
            return Err(RingError::OrderTooLarge {
                what: "ring construction",
                order,
                bound: MAX_RING_ORDER,
            });
        }
        if zero.idx() >= order || one.idx() >= order {
            return Err(RingError::NotARing("identity index out of range".into()));
        }
        if zero == one {
            return Err(RingError::ZeroRing);
        }
        if add.iter().chain(&mul).any(|&v| v as usize >= order) {
            return Err(RingError::NotARing("table entry out of range".into()));
        }
        let labels = match labels {
            Some(l) if l.len() == order => l,
            _ => (0..order).map(|i| i.to_string()).collect(),
        };
        let mut ring = FiniteRing {
            id: RingId(NEXT_RING_ID.fetch_add(1, Ordering::Relaxed)),
            order,
            add,
            mul,
            neg: vec![0; order],
            zero,
            one,
            spec,
            labels,
        };
        ring.check_axioms()?;
        Ok(ring)
    }

    fn check_axioms(&mut self) -> Result<()> {
        let n = self.order;
        let (z, o) = (self.zero.0, self.one.0);
        let fail = |what: &str, args: &[usize]| {
            Err(RingError::NotARing(format!("{what} fails at {args:?}")))
        };
        for a in 0..n {
            if self.add[a * n + z as usize] != a as u32 {
                return fail("additive identity", &[a]);
            }
            if self.mul[a * n + o as usize] != a as u32 {
                return fail("multiplicative identity", &[a]);
            }
            match (0..n).find(|&b| self.add[a * n + b] == z) {
                Some(b) => self.neg[a] = b as u32,
                None => return fail("additive inverse", &[a]),
            }
            for b in 0..a {
                if self.add[a * n + b] != self.add[b * n + a] {
                    return fail("additive commutativity", &[a, b]);
                }
                if self.mul[a * n + b] != self.mul[b * n + a] {
                    return fail("multiplicative commutativity", &[a, b]);
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab_add = self.add[a * n + b] as usize;
                let ab_mul = self.mul[a * n + b] as usize;
                for c in 0..n {
                    let bc_add = self.add[b * n + c] as usize;
                    let bc_mul = self.mul[b * n + c] as usize;
                    if self.add[ab_add * n + c] != self.add[a * n + bc_add] {
                        return fail("additive associativity", &[a, b, c]);
                    }
                    if self.mul[ab_mul * n + c] != self.mul[a * n + bc_mul] {
                        return fail("multiplicative associativity", &[a, b, c]);
                    }
                    let lhs = self.mul[a * n + bc_add];
                    let rhs = self.add[ab_mul * n + self.mul[a * n + c] as usize];
                    if lhs != rhs {
                        return fail("distributivity", &[a, b, c]);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn id(&self) -> RingId {
        self.id
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    /// Human-readable name of an element (residue, polynomial, tuple, coset).
    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a.idx()]
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order as u32).map(Elem)
    }

    pub fn add_table(&self) -> &[u32] {
        &self.add
    }

    pub fn mul_table(&self) -> &[u32] {
        &self.mul
    }

    /// Checked conversion of a raw index into an element of this ring.
    pub fn elem(&self, index: u64) -> Result<Elem> {
        if index < self.order as u64 {
            Ok(Elem(index as u32))
        } else {
            Err(RingError::ForeignElement {
                index,
                order: self.order,
            })
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.add[a.idx() * self.order + b.idx()])
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.mul[a.idx() * self.order + b.idx()])
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.idx()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// `1 - a`, which appears in nearly every purity condition.
    #[inline]
    pub fn one_minus(&self, a: Elem) -> Elem {
        self.sub(self.one, a)
    }

    /// Square-and-multiply over the multiplication table; `pow(a, 0) = 1`.
    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let mut acc = self.one;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Table-driven evaluation with range checks on every argument.
    pub fn apply(&self, op: RingOp, args: &[Elem]) -> Result<Elem> {
        for a in args {
            self.elem(a.0 as u64)?;
        }
        let arity = match op {
            RingOp::Neg | RingOp::Pow(_) => 1,
            _ => 2,
        };
        if args.len() != arity {
            return Err(RingError::NotARing(format!(
                "{op:?} takes {arity} argument(s), got {}",
                args.len()
            )));
        }
        Ok(match op {
            RingOp::Add => self.add(args[0], args[1]),
            RingOp::Sub => self.sub(args[0], args[1]),
            RingOp::Mul => self.mul(args[0], args[1]),
            RingOp::Neg => self.neg(args[0]),
            RingOp::Pow(k) => self.pow(args[0], k),
        })
    }

    /// Iterates powers of `a` until the first repeat; at most `N` steps.
    pub fn power_cycle(&self, a: Elem) -> PowerCycle {
        let mut seen = vec![0usize; self.order];
        let mut powers = Vec::new();
        let mut x = a;
        let mut k = 1;
        loop {
            if seen[x.idx()] != 0 {
                let cycle_start = seen[x.idx()];
                return PowerCycle {
                    period: k - cycle_start,
                    cycle_start,
                    powers,
                };
            }
            seen[x.idx()] = k;
            powers.push(x);
            x = self.mul(x, a);
            k += 1;
        }
    }

    pub fn is_nilpotent(&self, a: Elem) -> bool {
        self.power_cycle(a).reaches(self.zero)
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.elements().any(|b| self.mul(a, b) == self.one)
    }

    pub fn is_idempotent(&self, a: Elem) -> bool {
        self.mul(a, a) == a
    }

    pub fn is_zero_divisor(&self, a: Elem) -> bool {
        a != self.zero
            && self
                .elements()
                .any(|b| b != self.zero && self.mul(a, b) == self.zero)
    }

    /// Exhaustive scan for units, idempotents, nilpotents or zero divisors.
    pub fn special_elements(&self, kind: SpecialKind) -> Vec<Elem> {
        self.elements()
            .filter(|&a| match kind {
                SpecialKind::Units => self.is_unit(a),
                SpecialKind::Idempotents => self.is_idempotent(a),
                SpecialKind::Nilpotents => self.is_nilpotent(a),
                SpecialKind::ZeroDivisors => self.is_zero_divisor(a),
            })
            .collect()
    }

    /// `Q(R)`: every non-zero-divisor of a finite ring is already a unit, so
    /// the total ring of fractions is the ring itself.
    pub fn total_quotient_ring(&self) -> &FiniteRing {
        debug_assert!(self
            .elements()
            .filter(|&a| a != self.zero && !self.is_zero_divisor(a))
            .all(|a| self.is_unit(a)));
        self
    }

    /// Builds `R / I` with the given provenance spec and returns it with the
    /// projection `R -> R/I`. Cosets are numbered by their smallest member.
    pub fn quotient(&self, ideal: &Ideal, spec: RingSpec) -> Result<(FiniteRing, Vec<Elem>)> {
        self.assert_owns(ideal);
        if ideal.contains(self.one) {
            return Err(RingError::ZeroRing);
        }
        let members: Vec<Elem> = ideal.elements().collect();
        let mut rep = vec![0u32; self.order];
        for a in self.elements() {
            rep[a.idx()] = members
                .iter()
                .map(|&i| self.add(a, i).0)
                .min()
                .expect("ideal contains zero");
        }
        let mut reps: Vec<u32> = rep.clone();
        reps.sort_unstable();
        reps.dedup();
        let mut coset_of_rep = vec![u32::MAX; self.order];
        for (k, &r) in reps.iter().enumerate() {
            coset_of_rep[r as usize] = k as u32;
        }
        let projection: Vec<Elem> = rep
            .iter()
            .map(|&r| Elem(coset_of_rep[r as usize]))
            .collect();
        let m = reps.len();
        let mut add = Vec::with_capacity(m * m);
        let mut mul = Vec::with_capacity(m * m);
        for &r in &reps {
            for &s in &reps {
                add.push(projection[self.add(Elem(r), Elem(s)).idx()].0);
                mul.push(projection[self.mul(Elem(r), Elem(s)).idx()].0);
            }
        }
        let labels = reps
            .iter()
            .map(|&r| format!("[{}]", self.labels[r as usize]))
            .collect();
        let ring = FiniteRing::from_tables(
            add,
            mul,
            projection[self.zero.idx()],
            projection[self.one.idx()],
            spec,
            Some(labels),
        )?;
        Ok((ring, projection))
    }

    pub(crate) fn assert_owns(&self, ideal: &Ideal) {
        assert!(
            ideal.ring_id() == self.id,
            "ideal belongs to a different ring"
        );
    }

    pub(crate) fn mask_of(&self, elems: impl IntoIterator<Item = Elem>) -> FixedBitSet {
        let mut m = FixedBitSet::with_capacity(self.order);
        for e in elems {
            m.insert(e.idx());
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zmod(n: u64) -> FiniteRing {
        RingSpec::Zmod(n).build().unwrap()
    }

    #[test]
    fn zmod_arithmetic() {
        let r = zmod(12);
        assert_eq!(r.order(), 12);
        assert_eq!(r.mul(Elem(4), Elem(9)), Elem(0));
        assert_eq!(r.pow(Elem(2), 2), Elem(4));
        assert_eq!(r.pow(Elem(7), 0), Elem(1));
        assert_eq!(r.add(Elem(7), Elem(8)), Elem(3));
        assert_eq!(r.sub(Elem(3), Elem(5)), Elem(10));
    }

    #[test]
    fn apply_rejects_foreign_elements() {
        let r = zmod(12);
        assert_eq!(r.apply(RingOp::Mul, &[Elem(4), Elem(9)]), Ok(Elem(0)));
        assert_eq!(r.apply(RingOp::Pow(2), &[Elem(2)]), Ok(Elem(4)));
        assert!(matches!(
            r.apply(RingOp::Add, &[Elem(12), Elem(1)]),
            Err(RingError::ForeignElement { index: 12, .. })
        ));
    }

    #[test]
    fn special_elements_of_z12() {
        let r = zmod(12);
        let idx = |v: Vec<Elem>| v.into_iter().map(|e| e.0).collect::<Vec<_>>();
        assert_eq!(
            idx(r.special_elements(SpecialKind::Idempotents)),
            [0, 1, 4, 9]
        );
        assert_eq!(idx(r.special_elements(SpecialKind::Nilpotents)), [0, 6]);
        assert_eq!(idx(r.special_elements(SpecialKind::Units)), [1, 5, 7, 11]);
        assert_eq!(
            idx(r.special_elements(SpecialKind::ZeroDivisors)),
            [2, 3, 4, 6, 8, 9, 10]
        );
    }

    #[test]
    fn power_cycle_periodicity() {
        let r = zmod(12);
        let c = r.power_cycle(Elem(2));
        // 2, 4, 8, 4, ...
        assert_eq!(c.powers, vec![Elem(2), Elem(4), Elem(8)]);
        assert_eq!((c.cycle_start, c.period), (2, 2));
        for k in 1..20 {
            assert_eq!(c.pow(k), r.pow(Elem(2), k as u64));
        }
    }

    #[test]
    fn rejects_bad_tables() {
        // Non-associative "multiplication" on Z/3.
        let add: Vec<u32> = (0..9).map(|i| ((i / 3 + i % 3) % 3) as u32).collect();
        let mut mul: Vec<u32> = (0..9).map(|i| ((i / 3) * (i % 3) % 3) as u32).collect();
        mul[2 * 3 + 2] = 2;
        let err = FiniteRing::from_tables(add, mul, Elem(0), Elem(1), RingSpec::Zmod(3), None);
        assert!(matches!(err, Err(RingError::NotARing(_))));
    }

    #[test]
    fn total_quotient_ring_is_identity() {
        let r = zmod(12);
        assert_eq!(r.total_quotient_ring().id(), r.id());
    }
}
