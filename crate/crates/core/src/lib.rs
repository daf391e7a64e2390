//! Exact decision procedures for ideal-theoretic ring properties over finite
//! commutative rings, plus Groebner-basis membership certificates over prime
//! fields.

pub mod catalog;
pub mod classifier;
pub mod dsl;
pub mod error;
pub mod exec;
pub mod groebner;
pub mod ideal;
pub mod report;
pub mod ring;
pub mod spectra;

pub use catalog::{default_catalog, Catalog};
pub use classifier::{Bounds, Outcome, Property, RingContext, RingMethod, Verdict, Witness};
pub use dsl::parse_ring_spec;
pub use error::{ParseError, PolyError, Result, RingError};
pub use exec::Execution;
pub use ideal::{Ideal, IdealOp, PrimalityKind};
pub use report::{check_ring, verify_catalog, PropertyReport, ReportDocument, ReportOptions};
pub use ring::{Elem, FiniteRing, RingOp, RingSpec, SpecialKind};
