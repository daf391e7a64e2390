use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::order::MonomialOrder;
use crate::error::PolyError;
use crate::ring::spec::is_prime;

/// Exponent vector, one entry per variable.
pub type Monomial = Vec<u32>;

/// Largest supported characteristic (exclusive).
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

/// Sparse polynomial over `F_p` in single-letter variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyFp {
    p: u64,
    vars: Vec<char>,
    terms: BTreeMap<Monomial, u64>,
}

pub(crate) fn check_prime(p: u64) -> Result<(), PolyError> {
    if p < MAX_CHARACTERISTIC && is_prime(p) {
        Ok(())
    } else {
        Err(PolyError::BadPrime(p))
    }
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut k: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        k >>= 1;
    }
    acc
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

impl PolyFp {
    pub fn zero(p: u64, vars: &[char]) -> Result<Self, PolyError> {
        check_prime(p)?;
        Ok(Self {
            p,
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        })
    }

    pub fn constant(p: u64, vars: &[char], c: i64) -> Result<Self, PolyError> {
        let mut f = Self::zero(p, vars)?;
        f.add_term(vec![0; vars.len()], c.rem_euclid(p as i64) as u64);
        Ok(f)
    }

    pub fn one(p: u64, vars: &[char]) -> Result<Self, PolyError> {
        Self::constant(p, vars, 1)
    }

    /// The variable `name`, which must be in `vars`.
    pub fn var(p: u64, vars: &[char], name: char) -> Result<Self, PolyError> {
        let i = vars
            .iter()
            .position(|&v| v == name)
            .ok_or_else(|| PolyError::ArityMismatch(vars.to_vec(), vec![name]))?;
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(p, vars, e, 1)
    }

    pub fn monomial(p: u64, vars: &[char], exps: Monomial, c: u64) -> Result<Self, PolyError> {
        if exps.len() != vars.len() {
            return Err(PolyError::ArityMismatch(vars.to_vec(), vec![]));
        }
        let mut f = Self::zero(p, vars)?;
        f.add_term(exps, c % p);
        Ok(f)
    }

    /// Builds from `(exponents, coefficient)` pairs, combining like terms.
    pub fn from_terms(
        p: u64,
        vars: &[char],
        terms: impl IntoIterator<Item = (Monomial, u64)>,
    ) -> Result<Self, PolyError> {
        let mut f = Self::zero(p, vars)?;
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(PolyError::ArityMismatch(vars.to_vec(), vec![]));
            }
            f.add_term(e, c % p);
        }
        Ok(f)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn vars(&self) -> &[char] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub(crate) fn add_term(&mut self, e: Monomial, c: u64) {
        if c == 0 {
            return;
        }
        let p = self.p;
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = (*o.get() + c) % p;
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn check_compatible(&self, other: &Self) -> Result<(), PolyError> {
        if self.p != other.p {
            return Err(PolyError::CharMismatch(self.p, other.p));
        }
        if self.vars != other.vars {
            return Err(PolyError::ArityMismatch(
                self.vars.clone(),
                other.vars.clone(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        let mut out = Self {
            p: self.p,
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb % self.p);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.scale(self.p - 1)
    }

    pub fn scale(&self, c: u64) -> Self {
        let c = c % self.p;
        let mut out = self.clone();
        if c == 0 {
            out.terms.clear();
        } else {
            for v in out.terms.values_mut() {
                *v = *v * c % self.p;
            }
        }
        out
    }

    pub(crate) fn add_unchecked(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    /// `self - c * x^shift * g`
    pub(crate) fn sub_shifted(&self, c: u64, shift: &[u32], g: &Self) -> Self {
        let mut out = self.clone();
        let negc = (self.p - c % self.p) % self.p;
        for (e, &cg) in &g.terms {
            let m = e.iter().zip(shift).map(|(x, y)| x + y).collect();
            out.add_term(m, negc * cg % self.p);
        }
        out
    }

    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Monomial, u64)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, &c)| (m, c))
    }

    /// Scaled so the leading coefficient is 1.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(inv_mod(c, self.p)),
        }
    }

    /// Terms sorted by `order`, largest first.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, u64)> {
        let mut t: Vec<(&Monomial, u64)> = self.terms().collect();
        t.sort_by(|a, b| order.cmp(b.0, a.0));
        t
    }

    /// Re-expresses `self` over `vars`, which must contain every variable in use.
    pub fn embed(&self, vars: &[char]) -> Result<Self, PolyError> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v))
            .collect::<Option<_>>()
            .ok_or_else(|| PolyError::ArityMismatch(self.vars.clone(), vars.to_vec()))?;
        let terms = self.terms.iter().map(|(e, &c)| {
            let mut m = vec![0; vars.len()];
            for (i, &k) in e.iter().enumerate() {
                m[map[i]] = k;
            }
            (m, c)
        });
        Self::from_terms(self.p, vars, terms)
    }

    pub fn to_text(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .sorted_terms(order)
            .into_iter()
            .map(|(e, c)| {
                let mut factors: Vec<String> = Vec::new();
                for (v, &k) in self.vars.iter().zip(e) {
                    match k {
                        0 => {}
                        1 => factors.push(v.to_string()),
                        _ => factors.push(format!("{v}^{k}")),
                    }
                }
                if factors.is_empty() {
                    c.to_string()
                } else if c == 1 {
                    factors.join("*")
                } else {
                    format!("{c}*{}", factors.join("*"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for PolyFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&MonomialOrder::lex(self.vars.len())))
    }
}

impl Serialize for PolyFp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
