//! Every witness a decider emits is re-verified here from the raw operation
//! tables, without the library's ideal or spectrum code.

mod support;

use ringlab_core::classifier::{is_npure, is_pure, ring_class, NPureMethod};
use ringlab_core::ideal::PrimalityWitness;
use ringlab_core::{
    default_catalog, Bounds, FiniteRing, Ideal, Outcome, Property, RingContext, RingMethod,
    Verdict, Witness,
};
use support::raw::Raw;

fn members(i: &Ideal) -> Vec<u32> {
    i.to_vec()
}

fn choices(v: &Verdict) -> Vec<(u32, Option<u32>, Option<usize>)> {
    match &v.witness {
        Witness::Choices { choices } => choices
            .iter()
            .map(|c| (c.a.0, c.b.map(|b| b.0), c.n))
            .collect(),
        w => panic!("{}: expected choices, got {w:?}", v.method),
    }
}

fn decided(ctx: &RingContext, p: Property) -> Option<Verdict> {
    match ring_class(ctx, p, RingMethod::Def).unwrap() {
        Outcome::Decided(v) => Some(v),
        Outcome::Skipped { .. } => None,
    }
}

fn check_ring_witnesses(r: &FiniteRing) {
    let raw = Raw::new(r);
    let ctx = RingContext::new(r, Bounds::default());
    let all: Vec<u32> = (0..raw.n as u32).collect();
    let name = r.spec().to_string();

    let reduced = decided(&ctx, Property::Reduced).unwrap();
    let nonzero_nil = all
        .iter()
        .find(|&&a| a != raw.zero && raw.nilpotent(a))
        .copied();
    assert_eq!(reduced.value, nonzero_nil.is_none(), "{name}");
    if let Witness::Element { a } = reduced.witness {
        assert!(a.0 != raw.zero && raw.nilpotent(a.0), "{name}");
    }

    let vnr = decided(&ctx, Property::VonNeumannRegular).unwrap();
    let vnr_oracle = all
        .iter()
        .all(|&a| all.iter().any(|&b| raw.mul(raw.mul(a, a), b) == a));
    assert_eq!(vnr.value, vnr_oracle, "{name}");
    match &vnr.witness {
        Witness::Element { a } => {
            assert!(
                all.iter().all(|&b| raw.mul(raw.mul(a.0, a.0), b) != a.0),
                "{name}"
            )
        }
        _ => {
            for (a, b, _) in choices(&vnr) {
                assert_eq!(raw.mul(raw.mul(a, a), b.unwrap()), a, "{name}");
            }
        }
    }

    let pf = decided(&ctx, Property::PfRing).unwrap();
    assert_eq!(
        pf.value,
        all.iter().all(|&a| raw.pure(&raw.ann(a))),
        "{name}"
    );
    if let Witness::Annihilator { a, failing } = pf.witness {
        let ann = raw.ann(a.0);
        assert!(ann.contains(&failing.0));
        assert!(
            ann.iter()
                .all(|&b| raw.mul(failing.0, raw.one_minus(b)) != raw.zero),
            "{name}"
        );
    }

    let mid = decided(&ctx, Property::MidRing).unwrap();
    assert_eq!(
        mid.value,
        all.iter().all(|&a| raw.npure(&raw.ann(a))),
        "{name}"
    );

    let gpf = decided(&ctx, Property::GpfRing).unwrap();
    if gpf.value {
        for (a, _, n) in choices(&gpf) {
            assert!(raw.pure(&raw.ann(raw.pow(a, n.unwrap()))), "{name}");
        }
    }

    let idempotents: Vec<u32> = all
        .iter()
        .copied()
        .filter(|&e| raw.mul(e, e) == e)
        .collect();
    let pp = decided(&ctx, Property::PpRing).unwrap();
    let pp_oracle = all
        .iter()
        .all(|&a| idempotents.iter().any(|&e| raw.principal(e) == raw.ann(a)));
    assert_eq!(pp.value, pp_oracle, "{name}");
    match &pp.witness {
        Witness::Element { a } => assert!(idempotents
            .iter()
            .all(|&e| raw.principal(e) != raw.ann(a.0))),
        _ => {
            for (a, e, _) in choices(&pp) {
                let e = e.unwrap();
                assert_eq!(raw.mul(e, e), e, "{name}");
                assert_eq!(raw.principal(e), raw.ann(a), "{name}");
            }
        }
    }

    let primary = decided(&ctx, Property::PrimaryRing).unwrap();
    let primary_oracle = all.iter().all(|&a| {
        a == raw.zero
            || all
                .iter()
                .all(|&b| raw.mul(a, b) != raw.zero || raw.nilpotent(b))
    });
    assert_eq!(primary.value, primary_oracle, "{name}");
    if let Witness::Primality {
        witness: PrimalityWitness::Pair { a, b },
        ..
    } = primary.witness
    {
        assert_eq!(raw.mul(a.0, b.0), raw.zero);
        assert!(a.0 != raw.zero && !raw.nilpotent(b.0), "{name}");
    }

    for ideal in &ctx.family().ideals {
        let i = members(ideal);
        let p = is_pure(&ctx, ideal);
        assert_eq!(p.value, raw.pure(&i), "{name} {i:?}");
        match &p.witness {
            Witness::Element { a } => {
                assert!(i
                    .iter()
                    .all(|&b| raw.mul(a.0, raw.one_minus(b)) != raw.zero))
            }
            _ => {
                for (a, b, _) in choices(&p) {
                    let b = b.unwrap();
                    assert!(i.contains(&b) && raw.mul(a, raw.one_minus(b)) == raw.zero);
                }
            }
        }

        assert!(
            raw.npure(&i),
            "{name}: every ideal of a finite ring is N-pure"
        );
        for m in NPureMethod::ALL {
            let v = is_npure(&ctx, ideal, m);
            assert!(v.value, "{name} {i:?} {}", m.name());
            match m {
                NPureMethod::Def | NPureMethod::ModNil => {
                    for (a, b, _) in choices(&v) {
                        let b = b.unwrap();
                        assert!(i.contains(&b));
                        assert!(
                            raw.nilpotent(raw.mul(a, raw.one_minus(b))),
                            "{name} {}",
                            m.name()
                        );
                    }
                }
                NPureMethod::WitnessPower => {
                    for (a, b, n) in choices(&v) {
                        let b = b.unwrap();
                        assert!(i.contains(&b));
                        assert_eq!(raw.mul(raw.pow(a, n.unwrap()), raw.one_minus(b)), raw.zero);
                    }
                }
                NPureMethod::AnnComplement => {
                    for (a, _, n) in choices(&v) {
                        let ann = raw.ann(raw.pow(a, n.unwrap()));
                        assert!(ann
                            .iter()
                            .any(|&u| i.iter().any(|&x| raw.add(u, x) == raw.one)));
                    }
                }
                NPureMethod::PureCore => {
                    let Witness::Ideal { ideal: j } = &v.witness else {
                        panic!("{:?}", v.witness)
                    };
                    let j = members(j);
                    assert!(raw.pure(&j));
                    assert_eq!(raw.radical(&j), raw.radical(&i), "{name}");
                }
                _ => {}
            }
        }
    }
}

#[test]
fn witnesses_recheck_on_catalog_16() {
    for spec in default_catalog(16).entries {
        let r = spec.build().unwrap();
        check_ring_witnesses(&r);
    }
}

#[test]
fn witnesses_recheck_on_larger_rings() {
    for text in [
        "Z/36",
        "Z/30",
        "product(Z/4, Z/9)",
        "product(GF(2)[x]/(x^3), Z/3)",
    ] {
        let r = ringlab_core::parse_ring_spec(text)
            .unwrap()
            .build()
            .unwrap();
        check_ring_witnesses(&r);
    }
}

#[test]
fn methods_agree_on_catalog_24() {
    let cat = default_catalog(24);
    let doc =
        ringlab_core::verify_catalog(&cat, Bounds::default(), ringlab_core::Execution::default());
    assert!(doc.passed(), "{:#?}", doc.failures);
    assert_eq!(doc.rings.len(), cat.entries.len());
    for rep in &doc.rings {
        for (p, entry) in &rep.properties {
            assert!(entry.consistent, "{} {p}", rep.spec);
            assert!(entry.value.is_some(), "{} {p}", rep.spec);
        }
    }
}
