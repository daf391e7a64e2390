//! Universally quantified instances of the structure theorems, checked on one
//! ring at a time.

use serde::Serialize;

use super::npure::{is_npure, is_pure, radical_formula_set, NPureMethod};
use super::rings::{npure_primes, ring_class, Property, RingMethod};
use super::{RingContext, Witness};
use crate::ideal::{Ideal, PrimalityKind};
use crate::ring::{FiniteRing, RingSpec, SpecialKind};
use crate::spectra;

/// Largest order for the power-intersection hypothesis scan.
pub const POWER_SCAN_ORDER: usize = 16;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub id: &'static str,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Witness>,
}

impl TheoremCheck {
    fn pass(id: &'static str) -> Self {
        Self {
            id,
            status: CheckStatus::Pass,
            detail: None,
            counterexample: None,
        }
    }

    fn fail(id: &'static str, w: Witness) -> Self {
        Self {
            id,
            status: CheckStatus::Fail,
            detail: None,
            counterexample: Some(w),
        }
    }

    fn skip(id: &'static str, reason: String) -> Self {
        Self {
            id,
            status: CheckStatus::Skip,
            detail: Some(reason),
            counterexample: None,
        }
    }

    fn from_result(id: &'static str, r: Result<(), Witness>) -> Self {
        match r {
            Ok(()) => Self::pass(id),
            Err(w) => Self::fail(id, w),
        }
    }

    fn detail(mut self, text: impl Into<String>) -> Self {
        self.detail = Some(text.into());
        self
    }
}

/// Value of a property by its first decided method.
fn holds(ctx: &RingContext, p: Property) -> bool {
    p.methods()
        .iter()
        .find_map(|&m| ring_class(ctx, p, m).ok()?.value())
        .expect("some method decides")
}

fn first_ideal(ideals: &[Ideal], bad: impl Fn(&Ideal) -> bool) -> Result<(), Witness> {
    match ideals.iter().find(|i| bad(i)) {
        None => Ok(()),
        Some(i) => Err(Witness::Ideal { ideal: i.clone() }),
    }
}

fn npure(ctx: &RingContext, i: &Ideal) -> bool {
    is_npure(ctx, i, NPureMethod::Def).value
}

pub fn is_squarefree(mut n: u64) -> bool {
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d * d) {
            return false;
        }
        if n.is_multiple_of(d) {
            n /= d;
        }
        d += 1;
    }
    true
}

/// Every check that applies to `ctx`'s ring, in a fixed order.
pub fn verify_theorems(ctx: &RingContext) -> Vec<TheoremCheck> {
    let r = ctx.ring();
    let fam = ctx.family();
    let spec = ctx.spectrum();
    let sampled_note = |c: TheoremCheck, sampled: bool| {
        if sampled {
            c.detail("ideal family sampled above the lattice bound")
        } else {
            c
        }
    };
    let mut out = Vec::new();

    let reduced = holds(ctx, Property::Reduced);
    let mid = holds(ctx, Property::MidRing);
    let gpf = holds(ctx, Property::GpfRing);
    let pf = holds(ctx, Property::PfRing);
    let vnr = holds(ctx, Property::VonNeumannRegular);
    let npure_set: Vec<bool> = fam.ideals.iter().map(|i| npure(ctx, i)).collect();
    let pure_set: Vec<bool> = fam.ideals.iter().map(|i| is_pure(ctx, i).value).collect();

    // N-pure and pure ideals coincide exactly on reduced rings.
    let differ = fam
        .ideals
        .iter()
        .zip(npure_set.iter().zip(&pure_set))
        .find(|(_, (n, p))| n != p)
        .map(|(i, _)| i.clone());
    let c = match (reduced, differ) {
        (true, Some(i)) => {
            TheoremCheck::fail("npure_equals_pure_iff_reduced", Witness::Ideal { ideal: i })
        }
        (false, None) if !fam.sampled => TheoremCheck::fail(
            "npure_equals_pure_iff_reduced",
            Witness::Element {
                a: ctx.nil().elements().nth(1).expect("non-reduced"),
            },
        ),
        _ => TheoremCheck::pass("npure_equals_pure_iff_reduced"),
    };
    out.push(sampled_note(c, fam.sampled));

    let c = first_ideal(&fam.ideals, |i| is_pure(ctx, i).value && !npure(ctx, i));
    out.push(sampled_note(
        TheoremCheck::from_result("pure_implies_npure", c),
        fam.sampled,
    ));

    // Powers of N-pure ideals, up to stabilization.
    let c = first_ideal(&fam.ideals, |i| {
        if !npure(ctx, i) {
            return false;
        }
        let stab = r.ideal_power(i, 1).stabilizes_at;
        (1..=stab + 1).any(|n| !npure(ctx, &r.ideal_power(i, n).ideal))
    });
    out.push(sampled_note(
        TheoremCheck::from_result("npure_powers", c),
        fam.sampled,
    ));

    // Sum, product and intersection of N-pure ideals.
    let np: Vec<&Ideal> = fam
        .ideals
        .iter()
        .zip(&npure_set)
        .filter(|(_, &n)| n)
        .map(|(i, _)| i)
        .collect();
    let mut closure = Ok(());
    'pairs: for (k, &i) in np.iter().enumerate() {
        for &j in &np[k..] {
            for s in [r.sum(i, j), r.product(i, j), r.intersection(i, j)] {
                if !npure(ctx, &s) {
                    closure = Err(Witness::Chain {
                        lower: i.clone(),
                        upper: j.clone(),
                    });
                    break 'pairs;
                }
            }
        }
    }
    out.push(sampled_note(
        TheoremCheck::from_result("npure_closure", closure),
        fam.sampled,
    ));

    // Exactly one pure ideal shares the radical of each N-pure ideal.
    let c = first_ideal(&fam.ideals, |i| {
        npure(ctx, i) && {
            let rad = r.radical(i);
            ctx.pure_ideals()
                .iter()
                .filter(|(_, rj)| *rj == rad)
                .count()
                != 1
        }
    });
    out.push(sampled_note(
        TheoremCheck::from_result("pure_core_unique", c),
        fam.sampled,
    ));

    // {a : ∃n Ann(aⁿ) + I = R} = √I exactly for the N-pure ideals.
    let c = first_ideal(&fam.ideals, |i| {
        let formula = radical_formula_set(ctx, i);
        let equal = &formula == r.radical(i).mask();
        equal != npure(ctx, i)
    });
    out.push(sampled_note(
        TheoremCheck::from_result("radical_formula", c),
        fam.sampled,
    ));

    if r.order() <= POWER_SCAN_ORDER && !fam.sampled {
        let c = first_ideal(&fam.ideals, |i| {
            r.power_intersection_hypothesis(i).holds && !npure(ctx, i)
        });
        out.push(TheoremCheck::from_result(
            "power_intersection_implies_npure",
            c,
        ));
    } else {
        out.push(TheoremCheck::skip(
            "power_intersection_implies_npure",
            format!("order {} exceeds scan bound {POWER_SCAN_ORDER}", r.order()),
        ));
    }

    let prime_note = |c: TheoremCheck| {
        if spec.complete {
            c
        } else {
            c.detail("primes listed from idempotents above the lattice bound")
        }
    };

    // Radical and vanishing set of the localization kernel at minimal primes.
    let c = first_ideal(&spec.minimal, |p| {
        let k = ctx.kernel(p);
        r.radical(k) != *p || spectra::vanishing_set(spec, k) != spectra::vanishing_set(spec, p)
    });
    out.push(prime_note(TheoremCheck::from_result("kernel_radical", c)));

    let c = first_ideal(&spec.minimal, |p| {
        !r.primality(ctx.kernel(p), PrimalityKind::Primary).holds
    });
    out.push(prime_note(TheoremCheck::from_result("kernel_primary", c)));

    let bound = ctx.bounds().spp_order;
    if r.order() > bound || !spec.complete {
        out.push(TheoremCheck::skip(
            "spec_equals_spp_iff_regular",
            format!(
                "order {} exceeds spp bound {bound} or lattice bound",
                r.order()
            ),
        ));
    } else {
        let spp = spectra::pure_spectrum(r, bound).expect("within bound");
        let equal = spp.members == spec.primes;
        out.push(if equal == vnr {
            TheoremCheck::pass("spec_equals_spp_iff_regular")
        } else {
            let stray = spp
                .members
                .iter()
                .find(|p| !spec.primes.contains(p))
                .or_else(|| spec.primes.iter().find(|p| !spp.members.contains(p)));
            match stray {
                Some(i) => TheoremCheck::fail(
                    "spec_equals_spp_iff_regular",
                    Witness::Ideal { ideal: i.clone() },
                ),
                None => TheoremCheck::fail("spec_equals_spp_iff_regular", Witness::None)
                    .detail("spectra agree on a ring that is not regular"),
            }
        });
    }

    let local_mid = first_ideal(&spec.primes, |p| {
        let local = ctx.localization(p);
        !holds(&RingContext::new(local, ctx.bounds()), Property::MidRing)
    });
    out.push(prime_note(TheoremCheck::from_result(
        "mid_localizations_mid",
        if mid { local_mid } else { Ok(()) },
    )));

    let c = if mid {
        first_ideal(&fam.ideals, |i| {
            r.is_proper(i) && is_pure(ctx, i).value && !quotient_is_mid(ctx, i)
        })
    } else {
        Ok(())
    };
    out.push(sampled_note(
        TheoremCheck::from_result("mid_quotient_by_pure", c),
        fam.sampled,
    ));

    if let RingSpec::Product(factors) = r.spec() {
        let factor_mid = factors.iter().all(|f| {
            let fr = f.build().expect("factor of a built product");
            holds(&RingContext::new(&fr, ctx.bounds()), Property::MidRing)
        });
        out.push(if factor_mid == mid {
            TheoremCheck::pass("product_mid_iff_factors_mid")
        } else {
            TheoremCheck::fail("product_mid_iff_factors_mid", Witness::None).detail(format!(
                "product mid = {mid}, all factors mid = {factor_mid}"
            ))
        });
    }

    let mp = holds(ctx, Property::MpRing);
    let primary = holds(ctx, Property::PrimaryRing);
    for (id, antecedent, consequent, what) in [
        ("mid_implies_mp", mid, mp, "mid but not mp"),
        ("gpf_implies_mid", gpf, mid, "gpf but not mid"),
        ("primary_implies_mid", primary, mid, "primary but not mid"),
        ("pf_implies_mid", pf, mid, "pf but not mid"),
    ] {
        out.push(if !antecedent || consequent {
            TheoremCheck::pass(id)
        } else {
            TheoremCheck::fail(id, Witness::None).detail(what)
        });
    }

    let c = if gpf {
        first_ideal(&spec.maximal, |m| {
            !holds(
                &RingContext::new(ctx.localization(m), ctx.bounds()),
                Property::PrimaryRing,
            )
        })
    } else {
        Ok(())
    };
    out.push(TheoremCheck::from_result("gpf_localizations_primary", c));

    let pp = ring_class(ctx, Property::PpRing, RingMethod::Def)
        .ok()
        .and_then(|o| o.value())
        .expect("pp DEF decides");
    let q = r.total_quotient_ring();
    let q_vnr = holds(
        &RingContext::new(q, ctx.bounds()),
        Property::VonNeumannRegular,
    );
    for (id, rhs) in [
        ("pp_iff_mid_and_q_regular", mid && q_vnr),
        ("pp_iff_gpf_and_q_regular", gpf && q_vnr),
    ] {
        out.push(if pp == rhs {
            TheoremCheck::pass(id)
        } else {
            TheoremCheck::fail(id, Witness::None).detail(format!("pp = {pp}, right side = {rhs}"))
        });
    }

    if !spec.complete {
        out.push(TheoremCheck::skip(
            "npure_primes_are_minimal",
            format!(
                "minimal primes need the ideal lattice; order {} exceeds lattice bound {}",
                r.order(),
                ctx.bounds().lattice_order
            ),
        ));
    } else {
        let np = npure_primes(ctx);
        let c = if mid && np != spec.minimal {
            let stray = np
                .iter()
                .find(|p| !spec.minimal.contains(p))
                .or_else(|| spec.minimal.iter().find(|p| !np.contains(p)))
                .expect("lists differ");
            Err(Witness::Ideal {
                ideal: stray.clone(),
            })
        } else {
            Ok(())
        };
        out.push(
            TheoremCheck::from_result("npure_primes_are_minimal", c)
                .detail("one-sided on finite rings: every prime is minimal"),
        );
    }

    if let RingSpec::Zmod(n) = r.spec() {
        let sf = is_squarefree(*n);
        let c = if pf == sf {
            TheoremCheck::pass("zmod_pf_iff_squarefree")
        } else {
            TheoremCheck::fail("zmod_pf_iff_squarefree", Witness::None)
                .detail(format!("Z/{n}: pf = {pf}, squarefree = {sf}"))
        };
        out.push(if sf && *n > 1 && c.status == CheckStatus::Pass {
            c.detail("a literal 'some exponent >= 1' reading would predict not pf here")
        } else {
            c
        });
    }

    out.extend(finite_ring_sanity(ctx, reduced, vnr, pf, mid, gpf, mp));
    out
}

fn quotient_is_mid(ctx: &RingContext, i: &Ideal) -> bool {
    let r = ctx.ring();
    let gens = r
        .minimal_generators(i)
        .into_iter()
        .map(|e| e.0 as u64)
        .collect();
    let spec = RingSpec::Quotient(Box::new(r.spec().clone()), gens);
    let (q, _) = r.quotient(i, spec).expect("proper ideal");
    holds(&RingContext::new(&q, ctx.bounds()), Property::MidRing)
}

fn local_maximal_count(local: &FiniteRing) -> usize {
    spectra::maximal_ideals_via_idempotents(local).len()
}

/// Artinian facts recomputed, not assumed.
fn finite_ring_sanity(
    ctx: &RingContext,
    reduced: bool,
    vnr: bool,
    pf: bool,
    mid: bool,
    gpf: bool,
    mp: bool,
) -> Vec<TheoremCheck> {
    let r = ctx.ring();
    let spec = ctx.spectrum();
    let mut out = Vec::new();

    let idem: Vec<Ideal> = r
        .special_elements(SpecialKind::Idempotents)
        .into_iter()
        .map(|e| r.principal_ideal(e))
        .collect();
    let pure: Vec<Ideal> = ctx.pure_ideals().iter().map(|(i, _)| i.clone()).collect();
    let c = first_ideal(&pure, |i| !idem.contains(i))
        .and_then(|_| first_ideal(&idem, |i| !is_pure(ctx, i).value));
    out.push(TheoremCheck::from_result(
        "pure_ideals_idempotent_generated",
        c,
    ));

    let c = match ctx
        .nil()
        .mask()
        .symmetric_difference(ctx.jacobson().mask())
        .next()
    {
        None => Ok(()),
        Some(i) => Err(Witness::Mismatch {
            a: crate::ring::Elem(i as u32),
        }),
    };
    out.push(TheoremCheck::from_result("nil_equals_jacobson", c));

    let c = if spec.primes != spec.minimal || spec.primes != spec.maximal {
        Err(Witness::None)
    } else {
        first_ideal(&spec.primes, |p| {
            !r.primality(p, PrimalityKind::Maximal).holds
        })
    };
    let c = TheoremCheck::from_result("primes_minimal_maximal", c);
    out.push(if spec.complete {
        c
    } else {
        c.detail("primes listed from idempotents above the lattice bound")
    });

    let c = first_ideal(&spec.maximal, |m| {
        let local = ctx.localization(m);
        local_maximal_count(local) != 1
            || r.radical(ctx.kernel(m)) != *m
            || !holds(
                &RingContext::new(local, ctx.bounds()),
                Property::PrimaryRing,
            )
    });
    out.push(TheoremCheck::from_result("localization_coherent", c));

    let zero_dim = holds(ctx, Property::ZeroDimensional);
    let nj = holds(ctx, Property::NjRing);
    let semiprimitive = holds(ctx, Property::Semiprimitive);
    let facts = [
        ("zero_dimensional", zero_dim),
        ("nj_ring", nj),
        ("mp_ring", mp),
        ("mid_ring", mid),
        ("gpf_ring", gpf),
        ("semiprimitive_iff_reduced", semiprimitive == reduced),
        ("regular_iff_reduced", vnr == reduced),
        ("pf_iff_reduced", pf == reduced),
    ];
    let failing: Vec<&str> = facts
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| *n)
        .collect();
    out.push(if failing.is_empty() {
        TheoremCheck::pass("finite_ring_facts")
    } else {
        TheoremCheck::fail("finite_ring_facts", Witness::None).detail(failing.join(", "))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::Bounds;

    fn checks(spec: RingSpec) -> Vec<TheoremCheck> {
        let r = spec.build().unwrap();
        verify_theorems(&RingContext::new(&r, Bounds::default()))
    }

    fn assert_no_failures(c: &[TheoremCheck]) {
        for t in c {
            assert_ne!(t.status, CheckStatus::Fail, "{t:?}");
        }
    }

    #[test]
    fn squarefree() {
        let sf: Vec<u64> = (2..=20).filter(|&n| is_squarefree(n)).collect();
        assert_eq!(sf, [2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19]);
    }

    #[test]
    fn small_rings_pass() {
        for s in [
            RingSpec::Zmod(12),
            RingSpec::Zmod(6),
            RingSpec::Zmod(4),
            RingSpec::PolyQuot {
                p: 2,
                modulus: vec![0, 0, 1],
            },
            RingSpec::Product(vec![RingSpec::Zmod(4), RingSpec::Zmod(3)]),
        ] {
            assert_no_failures(&checks(s));
        }
    }

    #[test]
    fn zmod_check_only_on_zmod() {
        let ids = |s| checks(s).into_iter().map(|c| c.id).collect::<Vec<_>>();
        assert!(ids(RingSpec::Zmod(8)).contains(&"zmod_pf_iff_squarefree"));
        assert!(!ids(RingSpec::PolyQuot {
            p: 3,
            modulus: vec![1, 1]
        })
        .contains(&"zmod_pf_iff_squarefree"));
    }
}
