//! Ring constructions and the builder that lowers them to tables.

use std::fmt;

use serde::{Serialize, Serializer};

use super::{table, Elem, FiniteRing, MAX_RING_ORDER};
use crate::error::{Result, RingError};
use crate::ideal::Ideal;
use crate::spectra;

/// Abstract syntax for a finite ring.
///
/// Polynomial moduli are stored as coefficient vectors, constant term first.
/// Generator lists are raw element indices of the inner ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingSpec {
    Zmod(u64),
    PolyQuot { p: u64, modulus: Vec<u64> },
    Product(Vec<RingSpec>),
    Quotient(Box<RingSpec>, Vec<u64>),
    Table(String),
    LocalizeAt(Box<RingSpec>, Vec<u64>),
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn too_large(order: u128) -> RingError {
    RingError::OrderTooLarge {
        what: "ring construction",
        order: order.min(usize::MAX as u128) as usize,
        bound: MAX_RING_ORDER,
    }
}

impl RingSpec {
    /// Lowers the construction to a validated [`FiniteRing`].
    pub fn build(&self) -> Result<FiniteRing> {
        match self {
            RingSpec::Zmod(n) => build_zmod(*n, self.clone()),
            RingSpec::PolyQuot { p, modulus } => build_poly_quot(*p, modulus, self.clone()),
            RingSpec::Product(factors) => {
                if factors.len() < 2 {
                    return Err(RingError::NotARing(
                        "a product needs at least two factors".into(),
                    ));
                }
                let rings = factors
                    .iter()
                    .map(RingSpec::build)
                    .collect::<Result<Vec<_>>>()?;
                build_product(&rings, self.clone())
            }
            RingSpec::Quotient(inner, gens) => {
                let ring = inner.build()?;
                let ideal = generated(&ring, gens)?;
                if ideal.contains(ring.one()) {
                    return Err(RingError::NotAnIdeal(format!(
                        "generators {gens:?} generate the unit ideal of {inner}"
                    )));
                }
                Ok(ring.quotient(&ideal, self.clone())?.0)
            }
            RingSpec::Table(path) => table::read_table(path, self.clone()),
            RingSpec::LocalizeAt(inner, gens) => {
                let ring = inner.build()?;
                let m = generated(&ring, gens)?;
                let verdict = ring.primality(&m, crate::ideal::PrimalityKind::Maximal);
                if !verdict.holds {
                    return Err(RingError::NotMaximal(format!(
                        "ideal generated by {gens:?} in {inner}"
                    )));
                }
                spectra::localize(&ring, &m, self.clone())
            }
        }
    }

    /// Carrier size implied by the construction, when it is determined
    /// without building (quotients and tables need the tables).
    pub fn nominal_order(&self) -> Option<u128> {
        match self {
            RingSpec::Zmod(n) => Some(*n as u128),
            RingSpec::PolyQuot { p, modulus } => {
                let deg = modulus.len().checked_sub(1)? as u32;
                (*p as u128).checked_pow(deg)
            }
            RingSpec::Product(fs) => fs
                .iter()
                .map(RingSpec::nominal_order)
                .try_fold(1u128, |acc, o| acc.checked_mul(o?)),
            _ => None,
        }
    }
}

fn generated(ring: &FiniteRing, gens: &[u64]) -> Result<Ideal> {
    let gens = gens
        .iter()
        .map(|&g| ring.elem(g))
        .collect::<Result<Vec<_>>>()?;
    Ok(ring.ideal_from_generators(&gens))
}

fn build_zmod(n: u64, spec: RingSpec) -> Result<FiniteRing> {
    if n < 2 {
        return Err(RingError::BadModulus(format!(
            "Z/{n}: modulus must be at least 2"
        )));
    }
    if n as usize > MAX_RING_ORDER {
        return Err(too_large(n as u128));
    }
    let n = n as usize;
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            add.push(((a + b) % n) as u32);
            mul.push(((a * b) % n) as u32);
        }
    }
    FiniteRing::from_tables(add, mul, Elem(0), Elem(1), spec, None)
}

/// Reduces coefficients mod `p` and strips zero leading coefficients.
pub(crate) fn normalize_modulus(p: u64, modulus: &[u64]) -> Vec<u64> {
    let mut f: Vec<u64> = modulus.iter().map(|c| c % p).collect();
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn build_poly_quot(p: u64, modulus: &[u64], spec: RingSpec) -> Result<FiniteRing> {
    if !is_prime(p) {
        return Err(RingError::BadModulus(format!("{p} is not prime")));
    }
    let f = normalize_modulus(p, modulus);
    if f.len() < 2 {
        return Err(RingError::BadModulus(
            "modulus polynomial must have degree at least 1".into(),
        ));
    }
    if f[f.len() - 1] != 1 {
        return Err(RingError::NonMonic(poly_text(p, &f)));
    }
    let d = f.len() - 1;
    let order = (p as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    if order > MAX_RING_ORDER as u128 {
        return Err(too_large(order));
    }
    let n = order as usize;
    let p_us = p as usize;
    let decode = |mut i: usize| -> Vec<u64> {
        (0..d)
            .map(|_| {
                let c = (i % p_us) as u64;
                i /= p_us;
                c
            })
            .collect()
    };
    let encode = |c: &[u64]| -> u32 {
        c.iter()
            .rev()
            .fold(0usize, |acc, &x| acc * p_us + x as usize) as u32
    };
    let coeffs: Vec<Vec<u64>> = (0..n).map(decode).collect();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    let mut prod = vec![0u64; 2 * d];
    for a in &coeffs {
        for b in &coeffs {
            let s: Vec<u64> = a.iter().zip(b).map(|(x, y)| (x + y) % p).collect();
            add.push(encode(&s));
            prod.iter_mut().for_each(|c| *c = 0);
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            // x^k = -(f_0 + ... + f_{d-1} x^{d-1}) x^(k-d) for k >= d
            for k in (d..2 * d).rev() {
                let c = prod[k];
                if c != 0 {
                    prod[k] = 0;
                    for (j, fj) in f[..d].iter().enumerate() {
                        let t = (c * fj) % p;
                        prod[k - d + j] = (prod[k - d + j] + p - t) % p;
                    }
                }
            }
            mul.push(encode(&prod[..d]));
        }
    }
    let labels = coeffs.iter().map(|c| poly_text(p, c)).collect();
    FiniteRing::from_tables(add, mul, Elem(0), Elem(1), spec, Some(labels))
}

fn build_product(rings: &[FiniteRing], spec: RingSpec) -> Result<FiniteRing> {
    let order = rings
        .iter()
        .try_fold(1usize, |acc, r| acc.checked_mul(r.order()))
        .filter(|&o| o <= MAX_RING_ORDER)
        .ok_or_else(|| too_large(rings.iter().map(|r| r.order() as u128).product()))?;
    // first factor is the most significant digit
    let digits = |mut i: usize| -> Vec<usize> {
        let mut out = vec![0; rings.len()];
        for (k, r) in rings.iter().enumerate().rev() {
            out[k] = i % r.order();
            i /= r.order();
        }
        out
    };
    let undigits = |d: &[usize]| -> u32 {
        d.iter()
            .zip(rings)
            .fold(0usize, |acc, (&x, r)| acc * r.order() + x) as u32
    };
    let all: Vec<Vec<usize>> = (0..order).map(digits).collect();
    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    let mut buf_a = vec![0usize; rings.len()];
    let mut buf_m = vec![0usize; rings.len()];
    for a in &all {
        for b in &all {
            for (k, r) in rings.iter().enumerate() {
                buf_a[k] = r.add(Elem(a[k] as u32), Elem(b[k] as u32)).idx();
                buf_m[k] = r.mul(Elem(a[k] as u32), Elem(b[k] as u32)).idx();
            }
            add.push(undigits(&buf_a));
            mul.push(undigits(&buf_m));
        }
    }
    let zero: Vec<usize> = rings.iter().map(|r| r.zero().idx()).collect();
    let one: Vec<usize> = rings.iter().map(|r| r.one().idx()).collect();
    let labels = all
        .iter()
        .map(|d| {
            let parts: Vec<&str> = d
                .iter()
                .zip(rings)
                .map(|(&x, r)| r.label(Elem(x as u32)))
                .collect();
            format!("({})", parts.join(", "))
        })
        .collect();
    FiniteRing::from_tables(
        add,
        mul,
        Elem(undigits(&zero)),
        Elem(undigits(&one)),
        spec,
        Some(labels),
    )
}

/// Prints a univariate polynomial over `F_p` (constant term first) in the
/// DSL syntax, highest degree first.
pub fn poly_text(p: u64, coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        let c = c % p;
        if c == 0 {
            continue;
        }
        let var = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        terms.push(match (c, k) {
            (_, 0) => c.to_string(),
            (1, _) => var,
            _ => format!("{c}*{var}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn join_gens(gens: &[u64]) -> String {
    gens.iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zmod(n) => write!(f, "Z/{n}"),
            RingSpec::PolyQuot { p, modulus } => {
                write!(f, "GF({p})[x]/({})", poly_text(*p, modulus))
            }
            RingSpec::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(|s| s.to_string()).collect();
                write!(f, "product({})", parts.join(", "))
            }
            RingSpec::Quotient(inner, gens) => {
                write!(f, "quotient({inner}; {})", join_gens(gens))
            }
            RingSpec::Table(path) => write!(f, "table:{path}"),
            RingSpec::LocalizeAt(inner, gens) => {
                write!(f, "localize({inner}; {})", join_gens(gens))
            }
        }
    }
}

impl Serialize for RingSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
