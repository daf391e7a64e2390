use serde::Serialize;

use super::order::MonomialOrder;
use super::poly::{divides, inv_mod, lcm, Monomial, PolyFp};
use crate::error::PolyError;

/// A reduced Groebner basis: monic, no leading monomial divides another,
/// tails fully reduced, sorted by leading monomial (largest first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroebnerBasis {
    pub generators: Vec<PolyFp>,
    pub order: MonomialOrder,
}

fn lm<'a>(f: &'a PolyFp, order: &MonomialOrder) -> &'a Monomial {
    f.leading(order).expect("nonzero polynomial").0
}

/// Multivariate division remainder of `f` by the ordered list `divisors`.
pub fn normal_form(
    f: &PolyFp,
    divisors: &[PolyFp],
    order: &MonomialOrder,
) -> Result<PolyFp, PolyError> {
    for g in divisors {
        f.check_compatible(g)?;
    }
    let lead: Vec<Option<(Monomial, u64)>> = divisors
        .iter()
        .map(|g| {
            g.leading(order)
                .map(|(m, c)| (m.clone(), inv_mod(c, g.characteristic())))
        })
        .collect();
    let mut rest = f.clone();
    let mut rem = PolyFp::zero(f.characteristic(), f.vars())?;
    while let Some((m, c)) = rest.leading(order).map(|(m, c)| (m.clone(), c)) {
        let hit = lead
            .iter()
            .enumerate()
            .find_map(|(i, l)| l.as_ref().filter(|(lg, _)| divides(lg, &m)).map(|l| (i, l)));
        match hit {
            Some((i, (lg, inv))) => {
                let shift: Monomial = m.iter().zip(lg).map(|(a, b)| a - b).collect();
                rest = rest.sub_shifted(c * inv % f.characteristic(), &shift, &divisors[i]);
            }
            None => {
                rem.add_term(m.clone(), c);
                rest.add_term(m, f.characteristic() - c);
            }
        }
    }
    Ok(rem)
}

fn s_polynomial(f: &PolyFp, g: &PolyFp, order: &MonomialOrder) -> PolyFp {
    let (mf, cf) = f.leading(order).expect("nonzero");
    let (mg, cg) = g.leading(order).expect("nonzero");
    let l = lcm(mf, mg);
    let p = f.characteristic();
    let sf: Monomial = l.iter().zip(mf).map(|(a, b)| a - b).collect();
    let sg: Monomial = l.iter().zip(mg).map(|(a, b)| a - b).collect();
    let zero = PolyFp::zero(p, f.vars()).expect("valid prime");
    // inv(cf) x^sf f - inv(cg) x^sg g
    let a = zero.sub_shifted(p - inv_mod(cf, p), &sf, f);
    a.sub_shifted(inv_mod(cg, p), &sg, g)
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree, ties by pair index) and the coprime-leading-monomial criterion.
pub fn buchberger(gens: &[PolyFp], order: &MonomialOrder) -> Result<GroebnerBasis, PolyError> {
    if let Some(first) = gens.first() {
        for g in gens {
            first.check_compatible(g)?;
        }
        if order.nvars() != first.vars().len() {
            return Err(PolyError::ArityMismatch(first.vars().to_vec(), vec![]));
        }
    }
    let mut basis: Vec<PolyFp> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic(order))
        .collect();
    if let Some(u) = basis.iter().find(|g| g.is_unit()) {
        return Ok(GroebnerBasis {
            generators: vec![u.clone()],
            order: order.clone(),
        });
    }
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while !pairs.is_empty() {
        let degree = |&(i, j): &(usize, usize)| -> u32 {
            lcm(lm(&basis[i], order), lm(&basis[j], order)).iter().sum()
        };
        let pick = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, pr)| (degree(pr), **pr))
            .map(|(k, _)| k)
            .unwrap();
        let (i, j) = pairs.swap_remove(pick);
        let (mi, mj) = (lm(&basis[i], order), lm(&basis[j], order));
        if mi.iter().zip(mj).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let h = normal_form(&s, &basis, order)?;
        if h.is_zero() {
            continue;
        }
        let h = h.monic(order);
        if h.is_unit() {
            return Ok(GroebnerBasis {
                generators: vec![h],
                order: order.clone(),
            });
        }
        let k = basis.len();
        basis.push(h);
        pairs.extend((0..k).map(|i| (i, k)));
    }
    Ok(reduce(basis, order))
}

fn reduce(basis: Vec<PolyFp>, order: &MonomialOrder) -> GroebnerBasis {
    // minimal: drop generators whose leading monomial another one divides;
    // among equal leading monomials keep the first
    let mut minimal: Vec<PolyFp> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let m = lm(g, order);
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            let mh = lm(h, order);
            l != k && divides(mh, m) && (mh != m || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    for k in 0..minimal.len() {
        let others: Vec<PolyFp> = minimal
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != k)
            .map(|(_, g)| g.clone())
            .collect();
        minimal[k] = normal_form(&minimal[k], &others, order)
            .expect("compatible")
            .monic(order);
    }
    minimal.sort_by(|a, b| order.cmp(lm(b, order), lm(a, order)));
    GroebnerBasis {
        generators: minimal,
        order: order.clone(),
    }
}

impl GroebnerBasis {
    pub fn normal_form(&self, f: &PolyFp) -> Result<PolyFp, PolyError> {
        normal_form(f, &self.generators, &self.order)
    }

    pub fn contains_one(&self) -> bool {
        self.generators.iter().any(PolyFp::is_unit)
    }

    /// Every S-polynomial of the basis reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|j| {
            (0..j).all(|i| {
                let s = s_polynomial(&g[i], &g[j], &self.order);
                self.normal_form(&s).map(|r| r.is_zero()).unwrap_or(false)
            })
        })
    }

    /// Monic, minimal, and with every tail reduced.
    pub fn is_reduced(&self) -> bool {
        let o = &self.order;
        self.generators.iter().enumerate().all(|(k, g)| {
            g.leading(o).map(|(_, c)| c == 1).unwrap_or(false)
                && self
                    .generators
                    .iter()
                    .enumerate()
                    .all(|(l, h)| l == k || g.terms().all(|(m, _)| !divides(lm(h, o), m)))
        })
    }

    pub fn to_texts(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|g| g.to_text(&self.order))
            .collect()
    }
}

/// `f ∈ (gb)`, i.e. its normal form vanishes.
pub fn ideal_member(f: &PolyFp, gb: &GroebnerBasis) -> Result<bool, PolyError> {
    Ok(gb.normal_form(f)?.is_zero())
}

/// `f ∈ √(gens)` by the Rabinowitsch trick: adjoin an unused variable `t` and
/// test `1 ∈ (gens, 1 - t f)`.
pub fn radical_member(
    f: &PolyFp,
    gens: &[PolyFp],
    order: &MonomialOrder,
) -> Result<bool, PolyError> {
    for g in gens {
        f.check_compatible(g)?;
    }
    let vars = f.vars();
    let fresh = ('a'..='z')
        .rev()
        .find(|c| !vars.contains(c))
        .ok_or_else(|| PolyError::ArityMismatch(vars.to_vec(), vec![]))?;
    let mut ext = vars.to_vec();
    ext.push(fresh);
    let mut precedence = order.precedence.clone();
    precedence.push(vars.len());
    let ext_order = MonomialOrder::with_precedence(order.kind, precedence);
    let p = f.characteristic();
    let t = PolyFp::var(p, &ext, fresh)?;
    let one = PolyFp::one(p, &ext)?;
    let mut all: Vec<PolyFp> = gens
        .iter()
        .map(|g| g.embed(&ext))
        .collect::<Result<_, _>>()?;
    all.push(one.sub(&t.mul(&f.embed(&ext)?)?)?);
    Ok(buchberger(&all, &ext_order)?.contains_one())
}
