//! Per-ring property matrices and the catalog-wide report document.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::catalog::Catalog;
use crate::classifier::{
    agreement, is_npure, is_pure, npure_primes, ring_class, verify_theorems, Bounds, CheckStatus,
    NPureMethod, Outcome, Property, RingContext, TheoremCheck, Verdict, Witness,
};
use crate::error::Result;
use crate::exec::{map_ordered, Execution};
use crate::ideal::Ideal;
use crate::ring::{FiniteRing, RingSpec};
use crate::spectra::Spectrum;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize)]
pub struct PropertyEntry {
    /// Common value of the decided methods, if any decided.
    pub value: Option<bool>,
    pub consistent: bool,
    pub methods: Vec<Outcome>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealEntry {
    pub ideal: Ideal,
    pub pure: Verdict,
    pub npure: Vec<Verdict>,
    pub consistent: bool,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub run: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Counts {
    fn record(&mut self, status: CheckStatus) {
        match status {
            CheckStatus::Pass => {
                self.run += 1;
                self.passed += 1;
            }
            CheckStatus::Fail => {
                self.run += 1;
                self.failed += 1;
            }
            CheckStatus::Skip => self.skipped += 1,
        }
    }

    fn add(&mut self, other: &Counts) {
        self.run += other.run;
        self.passed += other.passed;
        self.failed += other.failed;
        self.skipped += other.skipped;
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub ring: String,
    pub check: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub spec: RingSpec,
    pub order: usize,
    pub properties: BTreeMap<&'static str, PropertyEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub ideals: Vec<IdealEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideals_sampled: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Spectrum>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub npure_primes: Option<Vec<Ideal>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub theorem_checks: Vec<TheoremCheck>,
    pub counts: Counts,
    #[serde(skip)]
    pub failures: Vec<Failure>,
}

/// What a single-ring report contains.
#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub properties: Vec<Property>,
    pub ideals: bool,
    pub theorems: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self {
            properties: Property::ALL.to_vec(),
            ideals: true,
            theorems: true,
        }
    }
}

fn describe(outcomes: &[Outcome]) -> String {
    outcomes
        .iter()
        .map(|o| match o.value() {
            Some(v) => format!("{}={v}", o.method()),
            None => format!("{}=skipped", o.method()),
        })
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn check_ring(
    ring: &FiniteRing,
    bounds: Bounds,
    opts: &ReportOptions,
) -> Result<PropertyReport> {
    let ctx = RingContext::new(ring, bounds);
    let name = ring.spec().to_string();
    let mut counts = Counts::default();
    let mut failures = Vec::new();

    let mut properties = BTreeMap::new();
    for &p in &opts.properties {
        let methods = p
            .methods()
            .iter()
            .map(|&m| ring_class(&ctx, p, m))
            .collect::<Result<Vec<_>>>()?;
        counts.skipped += methods.iter().filter(|o| o.value().is_none()).count();
        let (consistent, value) = agreement(&methods);
        if consistent {
            counts.record(CheckStatus::Pass);
        } else {
            counts.record(CheckStatus::Fail);
            failures.push(Failure {
                ring: name.clone(),
                check: format!("method agreement: {p}"),
                detail: describe(&methods),
                witness: None,
            });
        }
        properties.insert(
            p.name(),
            PropertyEntry {
                value,
                consistent,
                methods,
            },
        );
    }

    let mut ideals = Vec::new();
    if opts.ideals {
        for i in &ctx.family().ideals {
            let npure: Vec<Verdict> = NPureMethod::ALL
                .iter()
                .map(|&m| is_npure(&ctx, i, m))
                .collect();
            let consistent = npure.iter().all(|v| v.value == npure[0].value);
            if consistent {
                counts.record(CheckStatus::Pass);
            } else {
                counts.record(CheckStatus::Fail);
                failures.push(Failure {
                    ring: name.clone(),
                    check: "method agreement: npure".into(),
                    detail: npure
                        .iter()
                        .map(|v| format!("{}={}", v.method, v.value))
                        .collect::<Vec<_>>()
                        .join(", "),
                    witness: Some(Witness::Ideal { ideal: i.clone() }),
                });
            }
            ideals.push(IdealEntry {
                ideal: i.clone(),
                pure: is_pure(&ctx, i),
                npure,
                consistent,
            });
        }
    }

    let mut theorem_checks = Vec::new();
    if opts.theorems {
        theorem_checks = verify_theorems(&ctx);
        for t in &theorem_checks {
            counts.record(t.status);
            if t.status == CheckStatus::Fail {
                failures.push(Failure {
                    ring: name.clone(),
                    check: t.id.to_string(),
                    detail: t.detail.clone().unwrap_or_default(),
                    witness: t.counterexample.clone(),
                });
            }
        }
    }

    let full = opts.ideals || opts.theorems;
    Ok(PropertyReport {
        spec: ring.spec().clone(),
        order: ring.order(),
        properties,
        ideals_sampled: opts.ideals.then(|| ctx.family().sampled),
        ideals,
        spectrum: full.then(|| ctx.spectrum().clone()),
        npure_primes: full.then(|| npure_primes(&ctx)),
        theorem_checks,
        counts,
        failures,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub version: &'static str,
    pub bounds: Bounds,
    pub rings: Vec<PropertyReport>,
    pub aggregate: Counts,
    pub failures: Vec<Failure>,
}

impl ReportDocument {
    pub fn new(bounds: Bounds, results: Vec<std::result::Result<PropertyReport, Failure>>) -> Self {
        let mut rings = Vec::new();
        let mut aggregate = Counts::default();
        let mut failures = Vec::new();
        for r in results {
            match r {
                Ok(rep) => {
                    aggregate.add(&rep.counts);
                    failures.extend(rep.failures.iter().cloned());
                    rings.push(rep);
                }
                Err(f) => {
                    aggregate.record(CheckStatus::Fail);
                    failures.push(f);
                }
            }
        }
        Self {
            version: VERSION,
            bounds,
            rings,
            aggregate,
            failures,
        }
    }

    pub fn passed(&self) -> bool {
        self.aggregate.failed == 0
    }

    /// Pretty JSON with every object's keys sorted.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
        s.push('\n');
        s
    }
}

/// Runs the full battery on every catalog entry.
#[allow(clippy::result_large_err)]
pub fn verify_catalog(catalog: &Catalog, bounds: Bounds, mode: Execution) -> ReportDocument {
    let opts = ReportOptions::default();
    let results = map_ordered(&catalog.entries, mode, |spec| {
        let fail = |check: &str, e: crate::error::RingError| Failure {
            ring: spec.to_string(),
            check: check.into(),
            detail: e.to_string(),
            witness: None,
        };
        let ring = spec.build().map_err(|e| fail("build", e))?;
        check_ring(&ring, bounds, &opts).map_err(|e| fail("classify", e))
    });
    ReportDocument::new(bounds, results)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::default_catalog;

    #[test]
    fn z12_report() {
        let r = RingSpec::Zmod(12).build().unwrap();
        let rep = check_ring(&r, Bounds::default(), &ReportOptions::default()).unwrap();
        assert_eq!(rep.counts.failed, 0, "{:?}", rep.failures);
        assert_eq!(rep.properties["mid_ring"].value, Some(true));
        assert_eq!(rep.properties["mid_ring"].methods.len(), 10);
        assert_eq!(rep.properties["pf_ring"].value, Some(false));
        assert_eq!(rep.ideals.len(), 6);
    }

    #[test]
    fn aggregate_sums_rings() {
        let cat = default_catalog(6);
        let doc = verify_catalog(&cat, Bounds::default(), Execution::Sequential);
        let mut sum = Counts::default();
        for r in &doc.rings {
            sum.add(&r.counts);
        }
        assert_eq!(sum, doc.aggregate);
        assert!(doc.passed(), "{:?}", doc.failures);
    }

    #[test]
    fn json_is_deterministic_and_sorted() {
        let cat = default_catalog(5);
        let a = verify_catalog(&cat, Bounds::default(), Execution::default()).to_json();
        let b = verify_catalog(&cat, Bounds::default(), Execution::Sequential).to_json();
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(
            keys,
            ["aggregate", "bounds", "failures", "rings", "version"]
        );
    }
}
