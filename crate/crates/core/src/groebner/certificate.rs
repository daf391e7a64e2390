//! Membership facts in `F_p[x, y, z]` showing that `(x̄, z̄²)` is not primary
//! in `F_p[x, y, z]/(x³ - yz)`.

use serde::Serialize;

use super::buchberger::{buchberger, ideal_member, radical_member};
use super::order::MonomialOrder;
use super::parse::{parse_poly, parse_polys};
use crate::error::PolyError;

pub const IDEAL_TEXT: &str = "x, z^2, x^3 - y*z";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub statement: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub p: u64,
    pub ideal: String,
    /// Reduced lex basis (x > y > z) of the ideal.
    pub basis: Vec<String>,
    pub clauses: Vec<Clause>,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }
}

pub fn example1_certificate(p: u64) -> Result<Certificate, PolyError> {
    const VARS: [char; 3] = ['x', 'y', 'z'];
    let order = MonomialOrder::lex(3);
    let gens = parse_polys(IDEAL_TEXT, p, &VARS)?;
    let gb = buchberger(&gens, &order)?;
    let poly = |t: &str| parse_poly(t, p, &VARS);
    let xz = buchberger(&parse_polys("x, z", p, &VARS)?, &order)?;

    let clauses = vec![
        Clause {
            statement: "y*z in J".into(),
            passed: ideal_member(&poly("y*z")?, &gb)?,
        },
        Clause {
            statement: "z not in J".into(),
            passed: !ideal_member(&poly("z")?, &gb)?,
        },
        Clause {
            statement: "y not in rad(J)".into(),
            passed: !radical_member(&poly("y")?, &gens, &order)?,
        },
        Clause {
            statement: "x^3 - y*z in (x, z)".into(),
            passed: ideal_member(&poly("x^3 - y*z")?, &xz)?,
        },
    ];
    Ok(Certificate {
        p,
        ideal: format!("J = ({IDEAL_TEXT})"),
        basis: gb.to_texts(),
        clauses,
    })
}
