//! Purity and the eight N-purity characterizations of an ideal.

use fixedbitset::FixedBitSet;

use super::{Choice, RingContext, Verdict, Witness};
use crate::ideal::Ideal;
use crate::ring::Elem;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NPureMethod {
    Def,
    WitnessPower,
    AnnComplement,
    RadicalFormula,
    RadicalNpure,
    PureCore,
    ModNil,
    FiniteSubset,
}

impl NPureMethod {
    pub const ALL: [NPureMethod; 8] = [
        NPureMethod::Def,
        NPureMethod::WitnessPower,
        NPureMethod::AnnComplement,
        NPureMethod::RadicalFormula,
        NPureMethod::RadicalNpure,
        NPureMethod::PureCore,
        NPureMethod::ModNil,
        NPureMethod::FiniteSubset,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NPureMethod::Def => "DEF",
            NPureMethod::WitnessPower => "WITNESS_POWER",
            NPureMethod::AnnComplement => "ANN_COMPLEMENT",
            NPureMethod::RadicalFormula => "RADICAL_FORMULA",
            NPureMethod::RadicalNpure => "RADICAL_NPURE",
            NPureMethod::PureCore => "PURE_CORE",
            NPureMethod::ModNil => "MOD_NIL",
            NPureMethod::FiniteSubset => "FINITE_SUBSET",
        }
    }
}

/// `∀a ∈ I ∃b ∈ I: a(1 - b) = 0`, smallest `b` per `a`.
pub fn is_pure(ctx: &RingContext, ideal: &Ideal) -> Verdict {
    const M: &str = "PURE";
    let r = ctx.ring();
    r.assert_owns(ideal);
    let mut choices = Vec::with_capacity(ideal.len());
    for a in ideal.elements() {
        match crate::spectra::purity_witness(r, ideal, a) {
            Some(b) => choices.push(Choice::b(a, b)),
            None => return Verdict::fail(M, Witness::Element { a }),
        }
    }
    Verdict::pass(M, Witness::Choices { choices })
}

pub fn is_npure(ctx: &RingContext, ideal: &Ideal, method: NPureMethod) -> Verdict {
    ctx.ring().assert_owns(ideal);
    match method {
        NPureMethod::Def => def(ctx, ideal),
        NPureMethod::WitnessPower => witness_power(ctx, ideal),
        NPureMethod::AnnComplement => ann_complement(ctx, ideal),
        NPureMethod::RadicalFormula => radical_formula(ctx, ideal),
        NPureMethod::RadicalNpure => {
            let v = def(ctx, &ctx.ring().radical(ideal));
            Verdict {
                method: method.name(),
                ..v
            }
        }
        NPureMethod::PureCore => pure_core(ctx, ideal),
        NPureMethod::ModNil => mod_nil(ctx, ideal),
        NPureMethod::FiniteSubset => finite_subset(ctx, ideal),
    }
}

fn def(ctx: &RingContext, ideal: &Ideal) -> Verdict {
    let m = NPureMethod::Def.name();
    let r = ctx.ring();
    let nil = ctx.nil();
    let mut choices = Vec::with_capacity(ideal.len());
    for a in ideal.elements() {
        match ideal
            .elements()
            .find(|&b| nil.contains(r.mul(a, r.one_minus(b))))
        {
            Some(b) => choices.push(Choice::b(a, b)),
            None => return Verdict::fail(m, Witness::Element { a }),
        }
    }
    Verdict::pass(m, Witness::Choices { choices })
}

/// `aⁿ(1 - b) = 0` with `n` up to the power-cycle length of `a`.
fn witness_power(ctx: &RingContext, ideal: &Ideal) -> Verdict {
    let m = NPureMethod::WitnessPower.name();
    let r = ctx.ring();
    let mut choices = Vec::with_capacity(ideal.len());
    for a in ideal.elements() {
        let cycle = ctx.cycle(a);
        let found = (1..=cycle.len()).find_map(|n| {
            let an = cycle.pow(n);
            ideal
                .elements()
                .find(|&b| r.mul(an, r.one_minus(b)) == r.zero())
                .map(|b| Choice::bn(a, b, n))
        });
        match found {
            Some(c) => choices.push(c),
            None => return Verdict::fail(m, Witness::Element { a }),
        }
    }
    Verdict::pass(m, Witness::Choices { choices })
}

/// `Ann(aᵗ) + I = R` with `t` up to annihilator-chain stabilization.
fn ann_complement(ctx: &RingContext, ideal: &Ideal) -> Verdict {
    let m = NPureMethod::AnnComplement.name();
    let r = ctx.ring();
    let mut choices = Vec::with_capacity(ideal.len());
    for a in ideal.elements() {
        let chain = ctx.chain(a);
        let found = (1..=chain.stable_from()).find(|&t| {
            let s = r.sum(chain.at(t), ideal);
            s.contains(r.one())
        });
        match found {
            Some(t) => choices.push(Choice::n(a, t)),
            None => return Verdict::fail(m, Witness::Element { a }),
        }
    }
    Verdict::pass(m, Witness::Choices { choices })
}

/// `{a : ∃n Ann(aⁿ) + I = R}`, the radical formula's left-hand side.
pub(crate) fn radical_formula_set(ctx: &RingContext, ideal: &Ideal) -> FixedBitSet {
    let r = ctx.ring();
    r.mask_of(r.elements().filter(|&a| {
        let chain = ctx.chain(a);
        (1..=chain.stable_from()).any(|n| r.unit_sum_witness(chain.at(n), ideal).is_some())
    }))
}

/// Set equality of the formula against the classical radical.
fn radical_formula(ctx: &RingContext, ideal: &Ideal) -> Verdict {
    let m = NPureMethod::RadicalFormula.name();
    let r = ctx.ring();
    let formula = radical_formula_set(ctx, ideal);
    let radical = r.radical(ideal);
    match r
        .elements()
        .find(|&a| formula.contains(a.idx()) != radical.contains(a))
    {
        None => Verdict::pass(m, Witness::None),
        Some(a) => Verdict::fail(m, Witness::Mismatch { a }),
    }
}

/// A pure `J` in the ideal family with `√J = √I`.
fn pure_core(ctx: &RingContext, ideal: &Ideal) -> Verdict {
    let m = NPureMethod::PureCore.name();
    let rad = ctx.ring().radical(ideal);
    let sampled = ctx.family().sampled;
    let v = match ctx.pure_ideals().iter().find(|(_, rj)| *rj == rad) {
        Some((j, _)) => Verdict::pass(m, Witness::Ideal { ideal: j.clone() }),
        None => Verdict::fail(m, Witness::None),
    };
    v.sampled(sampled)
}

/// Purity of `(I + 𝔑)/𝔑` in `R/𝔑`; choices are lifted back into `I`.
fn mod_nil(ctx: &RingContext, ideal: &Ideal) -> Verdict {
    let m = NPureMethod::ModNil.name();
    let r = ctx.ring();
    let (q, proj) = ctx.mod_nil();
    let mut lift: Vec<Option<Elem>> = vec![None; q.order()];
    for a in ideal.elements() {
        lift[proj[a.idx()].idx()].get_or_insert(a);
    }
    let image: Vec<Elem> = q.elements().filter(|b| lift[b.idx()].is_some()).collect();
    let mut choices = Vec::with_capacity(ideal.len());
    for a in ideal.elements() {
        let pa = proj[a.idx()];
        match image
            .iter()
            .find(|&&b| q.mul(pa, q.one_minus(b)) == q.zero())
        {
            Some(b) => choices.push(Choice::b(a, lift[b.idx()].unwrap())),
            None => return Verdict::fail(m, Witness::Element { a }),
        }
    }
    debug_assert!(choices
        .iter()
        .all(|c| ctx.nil().contains(r.mul(c.a, r.one_minus(c.b.unwrap())))));
    Verdict::pass(m, Witness::Choices { choices })
}

/// Every subset `{a_1..a_k}` of `I` with `k ≤ 3` has one `b ∈ I` and one `t`
/// with `a_iᵗ = a_iᵗ b` for all `i`.
fn finite_subset(ctx: &RingContext, ideal: &Ideal) -> Verdict {
    let m = NPureMethod::FiniteSubset.name();
    let r = ctx.ring();
    let elems: Vec<Elem> = ideal.elements().collect();
    // Ann(a^t) is constant from the stabilization index on, so good[i] holds
    // every usable b; a simultaneous t is the maximum index over the subset.
    let good: Vec<FixedBitSet> = elems
        .iter()
        .map(|&a| {
            let at = r.pow(a, ctx.chain(a).stable_from() as u64);
            r.mask_of(
                ideal
                    .elements()
                    .filter(|&b| r.mul(at, r.one_minus(b)) == r.zero()),
            )
        })
        .collect();
    let n = elems.len();
    for i in 0..n {
        if good[i].is_clear() {
            return Verdict::fail(
                m,
                Witness::Subset {
                    elements: vec![elems[i]],
                },
            );
        }
        for j in i + 1..n {
            let gij = &good[i] & &good[j];
            if gij.is_clear() {
                return Verdict::fail(
                    m,
                    Witness::Subset {
                        elements: vec![elems[i], elems[j]],
                    },
                );
            }
            for k in j + 1..n {
                if gij.is_disjoint(&good[k]) {
                    return Verdict::fail(
                        m,
                        Witness::Subset {
                            elements: vec![elems[i], elems[j], elems[k]],
                        },
                    );
                }
            }
        }
    }
    Verdict::pass(m, Witness::None)
}
