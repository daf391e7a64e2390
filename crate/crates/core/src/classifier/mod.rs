//! Independent deciders for every ring and ideal property, one per
//! characterization, returning a verdict with a re-checkable witness.

mod context;
mod npure;
mod rings;
mod theorems;

use std::fmt;

use serde::Serialize;

use crate::ideal::{Ideal, PrimalityWitness};
use crate::ring::Elem;

pub use context::{Bounds, IdealFamily, RingContext};
pub use npure::{is_npure, is_pure, NPureMethod};
pub use rings::{npure_primes, ring_class, Property, RingMethod};
pub use theorems::{verify_theorems, CheckStatus, TheoremCheck};

/// One existential choice: for element `a`, the partner `b` and/or exponent `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Choice {
    pub a: Elem,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<Elem>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

impl Choice {
    pub fn b(a: Elem, b: Elem) -> Self {
        Self {
            a,
            b: Some(b),
            n: None,
        }
    }

    pub fn n(a: Elem, n: usize) -> Self {
        Self {
            a,
            b: None,
            n: Some(n),
        }
    }

    pub fn bn(a: Elem, b: Elem, n: usize) -> Self {
        Self {
            a,
            b: Some(b),
            n: Some(n),
        }
    }
}

/// Evidence attached to a verdict. Existential successes carry their choices;
/// universal failures carry a concrete counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    None,
    /// The condition fails at this element.
    Element {
        a: Elem,
    },
    /// The condition fails at this pair.
    Pair {
        a: Elem,
        b: Elem,
    },
    /// Per-element existential choices.
    Choices {
        choices: Vec<Choice>,
    },
    /// A finite subset with no simultaneous witness.
    Subset {
        elements: Vec<Elem>,
    },
    /// A distinguished ideal (a pure core, a prime outside Spp, ...).
    Ideal {
        ideal: Ideal,
    },
    /// An ideal failing its condition at element `a`.
    IdealElement {
        ideal: Ideal,
        a: Elem,
    },
    /// `Ann(a)` fails its condition at `failing`.
    Annihilator {
        a: Elem,
        failing: Elem,
    },
    /// `a` separates two sets that were supposed to agree.
    Mismatch {
        a: Elem,
    },
    /// `lower ⊊ upper` where no strict inclusion was allowed.
    Chain {
        lower: Ideal,
        upper: Ideal,
    },
    /// A prime containing `count` minimal primes instead of one.
    MinimalCount {
        prime: Ideal,
        count: usize,
    },
    /// A primality test failure on `ideal`.
    Primality {
        ideal: Ideal,
        witness: PrimalityWitness,
    },
    /// A failure inside the localization at `prime`; element indices refer
    /// to the localized ring.
    Localization {
        prime: Ideal,
        inner: Box<Witness>,
    },
    /// Sub-verdicts of a composed characterization.
    Composite {
        parts: Vec<Verdict>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub value: bool,
    pub method: &'static str,
    /// True when a quantifier ran over a sample instead of every ideal/prime.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub sampled: bool,
    pub witness: Witness,
}

impl Verdict {
    pub fn new(method: &'static str, value: bool, witness: Witness) -> Self {
        Self {
            value,
            method,
            sampled: false,
            witness,
        }
    }

    pub fn pass(method: &'static str, witness: Witness) -> Self {
        Self::new(method, true, witness)
    }

    pub fn fail(method: &'static str, witness: Witness) -> Self {
        Self::new(method, false, witness)
    }

    pub fn sampled(mut self, sampled: bool) -> Self {
        self.sampled |= sampled;
        self
    }
}

/// A method either decides or is skipped because a bound was exceeded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Decided(Verdict),
    Skipped {
        method: &'static str,
        reason: String,
    },
}

impl Outcome {
    pub fn value(&self) -> Option<bool> {
        match self {
            Outcome::Decided(v) => Some(v.value),
            Outcome::Skipped { .. } => None,
        }
    }

    pub fn method(&self) -> &'static str {
        match self {
            Outcome::Decided(v) => v.method,
            Outcome::Skipped { method, .. } => method,
        }
    }

    pub fn verdict(&self) -> Option<&Verdict> {
        match self {
            Outcome::Decided(v) => Some(v),
            Outcome::Skipped { .. } => None,
        }
    }
}

impl From<Verdict> for Outcome {
    fn from(v: Verdict) -> Self {
        Outcome::Decided(v)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Decided(v) => {
                write!(f, "{}: {}", v.method, v.value)?;
                if v.sampled {
                    write!(f, " (sampled)")?;
                }
                Ok(())
            }
            Outcome::Skipped { method, reason } => write!(f, "{method}: skipped ({reason})"),
        }
    }
}

/// True when every decided outcome agrees; returns the common value if any.
pub fn agreement(outcomes: &[Outcome]) -> (bool, Option<bool>) {
    let mut values = outcomes.iter().filter_map(Outcome::value);
    match values.next() {
        None => (true, None),
        Some(first) => (values.all(|v| v == first), Some(first)),
    }
}
