//! The default test catalog of small rings.

use std::collections::HashSet;

use serde::Serialize;

use crate::classifier::Bounds;
use crate::ring::RingSpec;

/// Largest order whose ideals spawn quotient entries.
pub const QUOTIENT_ORDER: usize = 16;

#[derive(Clone, Debug, Serialize)]
pub struct Catalog {
    pub entries: Vec<RingSpec>,
    pub bounds: Bounds,
}

/// Monic polynomials of degree `d` over `F_p`, constant term first, in
/// lexicographic order of the lower coefficients.
fn monic_polys(p: u64, d: usize) -> impl Iterator<Item = Vec<u64>> {
    let count = p.pow(d as u32);
    (0..count).map(move |mut i| {
        let mut f: Vec<u64> = (0..d)
            .map(|_| {
                let c = i % p;
                i /= p;
                c
            })
            .collect();
        f.push(1);
        f
    })
}

/// `Z/n` for `2 <= n <= max_order`; `F_p[x]/(f)` for `p ∈ {2, 3}` and every
/// monic `f` of degree 1 to 3 with `p^deg <= max_order`; every unordered pair
/// of those with product order `<= max_order`; and the quotient of each entry
/// of order `<= 16` by each proper nonzero ideal.
pub fn default_catalog(max_order: usize) -> Catalog {
    let mut base: Vec<(RingSpec, usize)> = (2..=max_order as u64)
        .map(|n| (RingSpec::Zmod(n), n as usize))
        .collect();
    for p in [2u64, 3] {
        for d in 1..=3 {
            let order = p.pow(d as u32) as usize;
            if order > max_order {
                continue;
            }
            base.extend(
                monic_polys(p, d).map(|modulus| (RingSpec::PolyQuot { p, modulus }, order)),
            );
        }
    }

    let mut entries: Vec<(RingSpec, usize)> = base.clone();
    // unordered pairs, later base entry first: product(Z/4, Z/3)
    for (i, (a, oa)) in base.iter().enumerate() {
        for (b, ob) in &base[..=i] {
            if oa * ob <= max_order {
                entries.push((RingSpec::Product(vec![a.clone(), b.clone()]), oa * ob));
            }
        }
    }

    let mut quotients = Vec::new();
    for (spec, order) in &entries {
        if *order > QUOTIENT_ORDER {
            continue;
        }
        let ring = spec.build().expect("catalog entry builds");
        let ideals = ring
            .all_ideals(QUOTIENT_ORDER)
            .expect("within the quotient bound");
        for ideal in ideals {
            if ideal.len() == 1 || !ring.is_proper(&ideal) {
                continue;
            }
            let gens = ring
                .minimal_generators(&ideal)
                .into_iter()
                .map(|e| e.0 as u64)
                .collect();
            quotients.push(RingSpec::Quotient(Box::new(spec.clone()), gens));
        }
    }

    let mut seen = HashSet::new();
    let entries = entries
        .into_iter()
        .map(|(s, _)| s)
        .chain(quotients)
        .filter(|s| seen.insert(s.to_string()))
        .collect();
    Catalog {
        entries,
        bounds: Bounds::default(),
    }
}
