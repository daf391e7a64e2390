//! Polynomials over prime fields, reduced Groebner bases, ideal and radical
//! membership.

mod buchberger;
mod certificate;
mod order;
mod parse;
mod poly;

pub use buchberger::{buchberger, ideal_member, normal_form, radical_member, GroebnerBasis};
pub use certificate::{example1_certificate, Certificate, Clause, IDEAL_TEXT};
pub use order::{MonomialOrder, OrderKind};
pub use parse::{parse_poly, parse_polys, variables_in};
pub use poly::{Monomial, PolyFp, MAX_CHARACTERISTIC};
