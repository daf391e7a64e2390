//! Brute-force ring isomorphism search for small cross-checks.
//!
//! Candidate images are pruned by element invariants (additive order, power
//! cycle shape, annihilator size) and every partial assignment is closed under
//! the sums and products it forces before branching again.

use super::{Elem, FiniteRing};

/// Largest order attempted; the search is exponential in the worst case.
pub const MAX_ISO_ORDER: usize = 128;

#[derive(Clone, PartialEq, Eq, Debug)]
struct Invariant {
    additive_order: usize,
    cycle_start: usize,
    period: usize,
    nilpotent: bool,
    annihilator_size: usize,
}

fn invariants(r: &FiniteRing) -> Vec<Invariant> {
    r.elements()
        .map(|a| {
            let mut additive_order = 1;
            let mut x = a;
            while x != r.zero() {
                x = r.add(x, a);
                additive_order += 1;
            }
            let cycle = r.power_cycle(a);
            Invariant {
                additive_order,
                cycle_start: cycle.cycle_start,
                period: cycle.period,
                nilpotent: cycle.reaches(r.zero()),
                annihilator_size: r.elements().filter(|&b| r.mul(a, b) == r.zero()).count(),
            }
        })
        .collect()
}

struct Search<'a> {
    from: &'a FiniteRing,
    to: &'a FiniteRing,
    inv_from: Vec<Invariant>,
    inv_to: Vec<Invariant>,
}

impl Search<'_> {
    fn assign(&self, map: &mut [Option<Elem>], used: &mut [bool], a: Elem, img: Elem) -> bool {
        match map[a.idx()] {
            Some(existing) => existing == img,
            None => {
                if used[img.idx()] || self.inv_from[a.idx()] != self.inv_to[img.idx()] {
                    return false;
                }
                map[a.idx()] = Some(img);
                used[img.idx()] = true;
                true
            }
        }
    }

    /// Closes the partial map under forced sums and products.
    fn propagate(&self, map: &mut [Option<Elem>], used: &mut [bool]) -> bool {
        loop {
            let assigned: Vec<(Elem, Elem)> = self
                .from
                .elements()
                .filter_map(|a| map[a.idx()].map(|b| (a, b)))
                .collect();
            let before = assigned.len();
            for (i, &(a, fa)) in assigned.iter().enumerate() {
                for &(b, fb) in &assigned[i..] {
                    if !self.assign(map, used, self.from.add(a, b), self.to.add(fa, fb))
                        || !self.assign(map, used, self.from.mul(a, b), self.to.mul(fa, fb))
                    {
                        return false;
                    }
                }
            }
            if map.iter().filter(|m| m.is_some()).count() == before {
                return true;
            }
        }
    }

    fn extend(&self, map: Vec<Option<Elem>>, used: Vec<bool>) -> Option<Vec<Elem>> {
        let (mut map, mut used) = (map, used);
        if !self.propagate(&mut map, &mut used) {
            return None;
        }
        let Some(next) = map.iter().position(Option::is_none) else {
            return Some(map.into_iter().map(Option::unwrap).collect());
        };
        for img in self.to.elements() {
            let (mut m, mut u) = (map.clone(), used.clone());
            if self.assign(&mut m, &mut u, Elem(next as u32), img) {
                if let Some(found) = self.extend(m, u) {
                    return Some(found);
                }
            }
        }
        None
    }
}

/// Returns `phi` with `phi[a] = image of a` when `from` and `to` are isomorphic.
pub fn find_isomorphism(from: &FiniteRing, to: &FiniteRing) -> Option<Vec<Elem>> {
    if from.order() != to.order() || from.order() > MAX_ISO_ORDER {
        return None;
    }
    let search = Search {
        from,
        to,
        inv_from: invariants(from),
        inv_to: invariants(to),
    };
    let mut map = vec![None; from.order()];
    let mut used = vec![false; to.order()];
    if !search.assign(&mut map, &mut used, from.zero(), to.zero())
        || !search.assign(&mut map, &mut used, from.one(), to.one())
    {
        return None;
    }
    let phi = search.extend(map, used)?;
    debug_assert!(is_isomorphism(from, to, &phi));
    Some(phi)
}

/// Checks that `phi` is a bijective ring homomorphism.
pub fn is_isomorphism(from: &FiniteRing, to: &FiniteRing, phi: &[Elem]) -> bool {
    if phi.len() != from.order() || from.order() != to.order() {
        return false;
    }
    let mut seen = vec![false; to.order()];
    for &b in phi {
        if b.idx() >= to.order() || std::mem::replace(&mut seen[b.idx()], true) {
            return false;
        }
    }
    phi[from.one().idx()] == to.one()
        && from.elements().all(|a| {
            from.elements().all(|b| {
                phi[from.add(a, b).idx()] == to.add(phi[a.idx()], phi[b.idx()])
                    && phi[from.mul(a, b).idx()] == to.mul(phi[a.idx()], phi[b.idx()])
            })
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingSpec;

    #[test]
    fn z4_and_f2x_are_not_isomorphic() {
        let z4 = RingSpec::Zmod(4).build().unwrap();
        let dual = RingSpec::PolyQuot {
            p: 2,
            modulus: vec![0, 0, 1],
        }
        .build()
        .unwrap();
        assert!(find_isomorphism(&z4, &dual).is_none());
    }

    #[test]
    fn f2_squared_two_ways() {
        let a = RingSpec::Product(vec![RingSpec::Zmod(2), RingSpec::Zmod(2)])
            .build()
            .unwrap();
        // x^2 + x = x(x + 1) splits
        let b = RingSpec::PolyQuot {
            p: 2,
            modulus: vec![0, 1, 1],
        }
        .build()
        .unwrap();
        let phi = find_isomorphism(&a, &b).unwrap();
        assert!(is_isomorphism(&a, &b, &phi));
    }
}
