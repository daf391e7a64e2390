use ringlab_core::{default_catalog, verify_catalog, Bounds, Execution, Outcome};

#[test]
fn catalog_json_is_byte_identical_across_runs_and_modes() {
    let cat = default_catalog(16);
    let bounds = Bounds::default();
    let a = verify_catalog(&cat, bounds, Execution::default()).to_json();
    let b = verify_catalog(&cat, bounds, Execution::default()).to_json();
    let c = verify_catalog(&cat, bounds, Execution::Sequential).to_json();
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn small_lattice_bound_samples_and_names_the_bound() {
    let cat = default_catalog(16);
    let bounds = Bounds {
        lattice_order: 8,
        ..Bounds::default()
    };
    let doc = verify_catalog(&cat, bounds, Execution::Sequential);
    assert!(doc.passed(), "{:#?}", doc.failures);
    let mut skips = 0;
    for rep in doc.rings.iter().filter(|r| r.order > 8) {
        assert_eq!(rep.ideals_sampled, Some(true), "{}", rep.spec);
        for entry in rep.properties.values() {
            for o in &entry.methods {
                if let Outcome::Skipped { reason, .. } = o {
                    assert!(reason.contains('8'), "{reason}");
                    skips += 1;
                }
            }
        }
    }
    assert!(skips > 0);
    assert!(doc.aggregate.skipped >= skips);
}

#[test]
fn top_level_schema() {
    let doc = verify_catalog(
        &default_catalog(6),
        Bounds::default(),
        Execution::Sequential,
    );
    let v: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
    for key in ["version", "rings", "aggregate", "bounds", "failures"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert!(v["rings"].is_array());
    assert_eq!(v["aggregate"]["failed"], 0);
}
