//! Ring-level properties, each with every characterization implemented as a
//! separate decider.
//!
//! Deciders only call one another where a characterization is itself a
//! composition: the localization methods run a `DEF` decider inside `R_p`,
//! and the `pp` methods combine `mid`/`gpf` with regularity of `Q(R)`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::npure::{is_npure, is_pure, NPureMethod};
use super::{Choice, Outcome, RingContext, Verdict, Witness};
use crate::error::{Result, RingError};
use crate::ideal::{Ideal, PrimalityKind};
use crate::ring::{Elem, SpecialKind};
use crate::spectra;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Reduced,
    Semiprimitive,
    NjRing,
    VonNeumannRegular,
    ZeroDimensional,
    MpRing,
    MidRing,
    PrimaryRing,
    PfRing,
    GpfRing,
    PpRing,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingMethod {
    Def,
    JPure,
    JNpure,
    AllIdealsPure,
    PrincipalPure,
    MaximalPure,
    KerEqMax,
    LocalSemiprimitive,
    Spp,
    AllIdealsNpure,
    PrincipalNpure,
    MaximalNpure,
    RadicalKerMax,
    LocalNjPrimes,
    LocalNjMaximal,
    Dim,
    AnnPowers,
    MinPrimesNpure,
    KerMinNpure,
    KerPrimesNpure,
    AnnSum,
    LocalPrimaryPrimes,
    LocalPrimaryMaximal,
    KerPurePrimes,
    KerPureMin,
    KerNestedEqual,
    KerPrimaryPrimes,
    KerPrimaryMaximal,
    LocalMid,
    MidAndQVnr,
    GpfAndQVnr,
}

impl RingMethod {
    pub fn name(self) -> &'static str {
        use RingMethod::*;
        match self {
            Def => "DEF",
            JPure => "J_PURE",
            JNpure => "J_NPURE",
            AllIdealsPure => "ALL_IDEALS_PURE",
            PrincipalPure => "PRINCIPAL_PURE",
            MaximalPure => "MAXIMAL_PURE",
            KerEqMax => "KER_EQ_MAX",
            LocalSemiprimitive => "LOCAL_SEMIPRIMITIVE",
            Spp => "SPP",
            AllIdealsNpure => "ALL_IDEALS_NPURE",
            PrincipalNpure => "PRINCIPAL_NPURE",
            MaximalNpure => "MAXIMAL_NPURE",
            RadicalKerMax => "RADICAL_KER_MAX",
            LocalNjPrimes => "LOCAL_NJ_PRIMES",
            LocalNjMaximal => "LOCAL_NJ_MAXIMAL",
            Dim => "DIM",
            AnnPowers => "ANN_POWERS",
            MinPrimesNpure => "MIN_PRIMES_NPURE",
            KerMinNpure => "KER_MIN_NPURE",
            KerPrimesNpure => "KER_PRIMES_NPURE",
            AnnSum => "ANN_SUM",
            LocalPrimaryPrimes => "LOCAL_PRIMARY_PRIMES",
            LocalPrimaryMaximal => "LOCAL_PRIMARY_MAXIMAL",
            KerPurePrimes => "KER_PURE_PRIMES",
            KerPureMin => "KER_PURE_MIN",
            KerNestedEqual => "KER_NESTED_EQUAL",
            KerPrimaryPrimes => "KER_PRIMARY_PRIMES",
            KerPrimaryMaximal => "KER_PRIMARY_MAXIMAL",
            LocalMid => "LOCAL_MID",
            MidAndQVnr => "MID_AND_Q_VNR",
            GpfAndQVnr => "GPF_AND_Q_VNR",
        }
    }
}

impl Property {
    pub const ALL: [Property; 11] = [
        Property::Reduced,
        Property::Semiprimitive,
        Property::NjRing,
        Property::VonNeumannRegular,
        Property::ZeroDimensional,
        Property::MpRing,
        Property::MidRing,
        Property::PrimaryRing,
        Property::PfRing,
        Property::GpfRing,
        Property::PpRing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Reduced => "reduced",
            Property::Semiprimitive => "semiprimitive",
            Property::NjRing => "nj_ring",
            Property::VonNeumannRegular => "von_neumann_regular",
            Property::ZeroDimensional => "zero_dimensional",
            Property::MpRing => "mp_ring",
            Property::MidRing => "mid_ring",
            Property::PrimaryRing => "primary_ring",
            Property::PfRing => "pf_ring",
            Property::GpfRing => "gpf_ring",
            Property::PpRing => "pp_ring",
        }
    }

    pub fn methods(self) -> &'static [RingMethod] {
        use RingMethod::*;
        match self {
            Property::Reduced => &[Def],
            Property::Semiprimitive => &[Def, JPure],
            Property::NjRing => &[Def, JNpure],
            Property::VonNeumannRegular => &[
                Def,
                AllIdealsPure,
                PrincipalPure,
                MaximalPure,
                KerEqMax,
                LocalSemiprimitive,
                Spp,
            ],
            Property::ZeroDimensional => &[
                AllIdealsNpure,
                PrincipalNpure,
                MaximalNpure,
                RadicalKerMax,
                LocalNjPrimes,
                LocalNjMaximal,
                Dim,
            ],
            Property::MpRing => &[Def, AnnPowers, MinPrimesNpure, KerMinNpure, KerPrimesNpure],
            Property::MidRing => &[
                Def,
                AnnSum,
                LocalPrimaryPrimes,
                LocalPrimaryMaximal,
                KerPurePrimes,
                KerPureMin,
                KerNestedEqual,
                KerPrimaryPrimes,
                KerPrimaryMaximal,
                LocalMid,
            ],
            Property::PrimaryRing => &[Def],
            Property::PfRing => &[Def],
            Property::GpfRing => &[Def],
            Property::PpRing => &[Def, MidAndQVnr, GpfAndQVnr],
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let p = match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "reduced" => Property::Reduced,
            "semiprimitive" => Property::Semiprimitive,
            "nj" | "nj_ring" => Property::NjRing,
            "vnr" | "von_neumann_regular" => Property::VonNeumannRegular,
            "zero_dim" | "zero_dimensional" => Property::ZeroDimensional,
            "mp" | "mp_ring" => Property::MpRing,
            "mid" | "mid_ring" => Property::MidRing,
            "primary" | "primary_ring" => Property::PrimaryRing,
            "pf" | "pf_ring" => Property::PfRing,
            "gpf" | "gpf_ring" => Property::GpfRing,
            "pp" | "pp_ring" => Property::PpRing,
            other => return Err(format!("unknown property {other:?}")),
        };
        Ok(p)
    }
}

/// Runs one characterization of one property.
pub fn ring_class(ctx: &RingContext, property: Property, method: RingMethod) -> Result<Outcome> {
    let order = ctx.ring().order();
    let bound = ctx.bounds().element_order;
    if order > bound {
        return Err(RingError::OrderTooLarge {
            what: "element-level deciders",
            order,
            bound,
        });
    }
    assert!(
        property.methods().contains(&method),
        "{} is not a method of {property}",
        method.name()
    );
    use Property as P;
    use RingMethod as M;
    let m = method.name();
    let sampled_primes = ctx.spectrum_sampled();
    let spectrum = ctx.spectrum();
    let npure = |i: &Ideal| is_npure(ctx, i, NPureMethod::Def);
    let pure = |i: &Ideal| is_pure(ctx, i);
    let primary = |i: &Ideal| primality_verdict(ctx, i, PrimalityKind::Primary);

    let v = match (property, method) {
        (P::Reduced, M::Def) => reduced_def(ctx),
        (P::Semiprimitive, M::Def) => semiprimitive_def(ctx),
        (P::Semiprimitive, M::JPure) => pure(ctx.jacobson()),
        (P::NjRing, M::Def) => nj_def(ctx),
        (P::NjRing, M::JNpure) => npure(ctx.jacobson()),

        (P::VonNeumannRegular, M::Def) => vnr_def(ctx),
        (P::VonNeumannRegular, M::AllIdealsPure) => {
            let fam = ctx.family();
            each_ideal(&fam.ideals, pure).sampled(fam.sampled)
        }
        (P::VonNeumannRegular, M::PrincipalPure) => each_ideal(ctx.principal_ideals(), pure),
        (P::VonNeumannRegular, M::MaximalPure) => each_ideal(&spectrum.maximal, pure),
        (P::VonNeumannRegular, M::KerEqMax) => {
            each_ideal(&spectrum.maximal, |mx| set_equal(ctx.kernel(mx), mx))
        }
        (P::VonNeumannRegular, M::LocalSemiprimitive) => {
            each_local(ctx, &spectrum.primes, semiprimitive_def).sampled(sampled_primes)
        }
        (P::VonNeumannRegular, M::Spp) => match spp_equals_spec(ctx) {
            Ok(v) => v,
            Err(reason) => return Ok(Outcome::Skipped { method: m, reason }),
        },

        (P::ZeroDimensional, M::AllIdealsNpure) => {
            let fam = ctx.family();
            each_ideal(&fam.ideals, npure).sampled(fam.sampled)
        }
        (P::ZeroDimensional, M::PrincipalNpure) => each_ideal(ctx.principal_ideals(), npure),
        (P::ZeroDimensional, M::MaximalNpure) => each_ideal(&spectrum.maximal, npure),
        (P::ZeroDimensional, M::RadicalKerMax) => each_ideal(&spectrum.maximal, |mx| {
            set_equal(&ctx.ring().radical(ctx.kernel(mx)), mx)
        }),
        (P::ZeroDimensional, M::LocalNjPrimes) => {
            each_local(ctx, &spectrum.primes, nj_def).sampled(sampled_primes)
        }
        (P::ZeroDimensional, M::LocalNjMaximal) => each_local(ctx, &spectrum.maximal, nj_def),
        (P::ZeroDimensional, M::Dim) => {
            if let Some(reason) = needs_lattice(ctx) {
                return Ok(Outcome::Skipped { method: m, reason });
            }
            no_strict_chain(&spectrum.primes)
        }

        (P::MpRing, M::Def) => {
            if let Some(reason) = needs_lattice(ctx) {
                return Ok(Outcome::Skipped { method: m, reason });
            }
            unique_minimal_below(ctx)
        }
        (P::MpRing, M::AnnPowers) => ann_powers(ctx),
        (P::MpRing, M::MinPrimesNpure) => {
            each_ideal(&spectrum.minimal, npure).sampled(sampled_primes)
        }
        (P::MpRing, M::KerMinNpure) => {
            each_kernel(ctx, &spectrum.minimal, npure).sampled(sampled_primes)
        }
        (P::MpRing, M::KerPrimesNpure) => {
            each_kernel(ctx, &spectrum.primes, npure).sampled(sampled_primes)
        }

        (P::MidRing, M::Def) => mid_def(ctx),
        (P::MidRing, M::AnnSum) => ann_sum(ctx),
        (P::MidRing, M::LocalPrimaryPrimes) => {
            each_local(ctx, &spectrum.primes, primary_def).sampled(sampled_primes)
        }
        (P::MidRing, M::LocalPrimaryMaximal) => each_local(ctx, &spectrum.maximal, primary_def),
        (P::MidRing, M::KerPurePrimes) => {
            each_kernel(ctx, &spectrum.primes, pure).sampled(sampled_primes)
        }
        (P::MidRing, M::KerPureMin) => {
            each_kernel(ctx, &spectrum.minimal, pure).sampled(sampled_primes)
        }
        (P::MidRing, M::KerNestedEqual) => nested_kernels(ctx).sampled(sampled_primes),
        (P::MidRing, M::KerPrimaryPrimes) => {
            each_kernel(ctx, &spectrum.primes, primary).sampled(sampled_primes)
        }
        (P::MidRing, M::KerPrimaryMaximal) => each_kernel(ctx, &spectrum.maximal, primary),
        (P::MidRing, M::LocalMid) => each_local(ctx, &spectrum.maximal, mid_def),

        (P::PrimaryRing, M::Def) => primary_def(ctx),
        (P::PfRing, M::Def) => pf_def(ctx),
        (P::GpfRing, M::Def) => gpf_def(ctx),

        (P::PpRing, M::Def) => pp_def(ctx),
        (P::PpRing, M::MidAndQVnr) => with_q_vnr(ctx, mid_def(ctx)),
        (P::PpRing, M::GpfAndQVnr) => with_q_vnr(ctx, gpf_def(ctx)),
        _ => unreachable!("checked above"),
    };
    Ok(Outcome::Decided(Verdict { method: m, ..v }))
}

/// Primes of the spectrum passing the N-purity definition.
pub fn npure_primes(ctx: &RingContext) -> Vec<Ideal> {
    ctx.spectrum()
        .primes
        .iter()
        .filter(|p| is_npure(ctx, p, NPureMethod::Def).value)
        .cloned()
        .collect()
}

fn needs_lattice(ctx: &RingContext) -> Option<String> {
    ctx.spectrum_sampled().then(|| {
        format!(
            "full prime spectrum needs the ideal lattice; order {} exceeds lattice bound {}",
            ctx.ring().order(),
            ctx.bounds().lattice_order
        )
    })
}

fn first_nonzero(ctx: &RingContext, i: &Ideal) -> Option<Elem> {
    i.elements().find(|&a| a != ctx.ring().zero())
}

fn set_equal(found: &Ideal, expected: &Ideal) -> Verdict {
    match found.mask().symmetric_difference(expected.mask()).next() {
        None => Verdict::pass("", Witness::None),
        Some(i) => Verdict::fail("", Witness::Mismatch { a: Elem(i as u32) }),
    }
}

fn primality_verdict(ctx: &RingContext, i: &Ideal, kind: PrimalityKind) -> Verdict {
    let p = ctx.ring().primality(i, kind);
    match p.witness {
        None => Verdict::pass("", Witness::None),
        Some(w) => Verdict::fail(
            "",
            Witness::Primality {
                ideal: i.clone(),
                witness: w,
            },
        ),
    }
}

/// First ideal failing `test`, reported with the element it failed at.
fn each_ideal(ideals: &[Ideal], test: impl Fn(&Ideal) -> Verdict) -> Verdict {
    for i in ideals {
        let v = test(i);
        if !v.value {
            let w = match v.witness {
                Witness::Element { a } | Witness::Mismatch { a } => Witness::IdealElement {
                    ideal: i.clone(),
                    a,
                },
                Witness::Primality { .. } => v.witness,
                _ => Witness::Ideal { ideal: i.clone() },
            };
            return Verdict::fail("", w).sampled(v.sampled);
        }
    }
    Verdict::pass("", Witness::None)
}

fn each_kernel(ctx: &RingContext, primes: &[Ideal], test: impl Fn(&Ideal) -> Verdict) -> Verdict {
    let kernels: Vec<Ideal> = primes.iter().map(|p| ctx.kernel(p).clone()).collect();
    each_ideal(&kernels, test)
}

/// Runs `test` inside each localization `R_p`.
fn each_local(ctx: &RingContext, primes: &[Ideal], test: fn(&RingContext) -> Verdict) -> Verdict {
    for p in primes {
        let local = ctx.localization(p);
        let v = test(&RingContext::new(local, ctx.bounds()));
        if !v.value {
            return Verdict::fail(
                "",
                Witness::Localization {
                    prime: p.clone(),
                    inner: Box::new(v.witness),
                },
            );
        }
    }
    Verdict::pass("", Witness::None)
}

fn reduced_def(ctx: &RingContext) -> Verdict {
    match first_nonzero(ctx, ctx.nil()) {
        None => Verdict::pass("DEF", Witness::None),
        Some(a) => Verdict::fail("DEF", Witness::Element { a }),
    }
}

fn semiprimitive_def(ctx: &RingContext) -> Verdict {
    match first_nonzero(ctx, ctx.jacobson()) {
        None => Verdict::pass("DEF", Witness::None),
        Some(a) => Verdict::fail("DEF", Witness::Element { a }),
    }
}

fn nj_def(ctx: &RingContext) -> Verdict {
    Verdict {
        method: "DEF",
        ..set_equal(ctx.nil(), ctx.jacobson())
    }
}

fn vnr_def(ctx: &RingContext) -> Verdict {
    let r = ctx.ring();
    let mut choices = Vec::with_capacity(r.order());
    for a in r.elements() {
        let a2 = r.mul(a, a);
        match r.elements().find(|&b| r.mul(a2, b) == a) {
            Some(b) => choices.push(Choice::b(a, b)),
            None => return Verdict::fail("DEF", Witness::Element { a }),
        }
    }
    Verdict::pass("DEF", Witness::Choices { choices })
}

fn primary_def(ctx: &RingContext) -> Verdict {
    Verdict {
        method: "DEF",
        ..primality_verdict(ctx, &ctx.ring().zero_ideal(), PrimalityKind::Primary)
    }
}

fn mid_def(ctx: &RingContext) -> Verdict {
    for a in ctx.ring().elements() {
        let v = is_npure(ctx, ctx.annihilator(a), NPureMethod::Def);
        if let Witness::Element { a: failing } = v.witness {
            return Verdict::fail("DEF", Witness::Annihilator { a, failing });
        }
    }
    Verdict::pass("DEF", Witness::None)
}

fn pf_def(ctx: &RingContext) -> Verdict {
    for a in ctx.ring().elements() {
        let v = is_pure(ctx, ctx.annihilator(a));
        if let Witness::Element { a: failing } = v.witness {
            return Verdict::fail("DEF", Witness::Annihilator { a, failing });
        }
    }
    Verdict::pass("DEF", Witness::None)
}

/// Smallest `n` up to chain stabilization with `Ann(aⁿ)` pure.
fn gpf_def(ctx: &RingContext) -> Verdict {
    let r = ctx.ring();
    let mut choices = Vec::with_capacity(r.order());
    for a in r.elements() {
        let chain = ctx.chain(a);
        match (1..=chain.stable_from()).find(|&n| spectra::is_pure(r, chain.at(n))) {
            Some(n) => choices.push(Choice::n(a, n)),
            None => return Verdict::fail("DEF", Witness::Element { a }),
        }
    }
    Verdict::pass("DEF", Witness::Choices { choices })
}

/// `Ann(a) = Re` for an idempotent `e`.
fn pp_def(ctx: &RingContext) -> Verdict {
    let r = ctx.ring();
    let gens: Vec<(Elem, Ideal)> = r
        .special_elements(SpecialKind::Idempotents)
        .into_iter()
        .map(|e| (e, r.principal_ideal(e)))
        .collect();
    let mut choices = Vec::with_capacity(r.order());
    for a in r.elements() {
        let ann = ctx.annihilator(a);
        match gens.iter().find(|(_, re)| re == ann) {
            Some(&(e, _)) => choices.push(Choice::b(a, e)),
            None => return Verdict::fail("DEF", Witness::Element { a }),
        }
    }
    Verdict::pass("DEF", Witness::Choices { choices })
}

fn with_q_vnr(ctx: &RingContext, first: Verdict) -> Verdict {
    let q = ctx.ring().total_quotient_ring();
    let second = vnr_def(&RingContext::new(q, ctx.bounds()));
    let second = Verdict {
        method: "Q_VNR",
        ..second
    };
    let value = first.value && second.value;
    Verdict::new(
        "",
        value,
        Witness::Composite {
            parts: vec![first, second],
        },
    )
}

fn no_strict_chain(primes: &[Ideal]) -> Verdict {
    for p in primes {
        if let Some(q) = primes.iter().find(|q| p.is_proper_subset(q)) {
            return Verdict::fail(
                "",
                Witness::Chain {
                    lower: p.clone(),
                    upper: q.clone(),
                },
            );
        }
    }
    Verdict::pass("", Witness::None)
}

fn unique_minimal_below(ctx: &RingContext) -> Verdict {
    let s = ctx.spectrum();
    for p in &s.primes {
        let count = s.minimal.iter().filter(|q| q.is_subset(p)).count();
        if count != 1 {
            return Verdict::fail(
                "",
                Witness::MinimalCount {
                    prime: p.clone(),
                    count,
                },
            );
        }
    }
    Verdict::pass("", Witness::None)
}

/// `ab = 0 ⇒ ∃n: Ann(aⁿ) + Ann(bⁿ) = R`.
fn ann_powers(ctx: &RingContext) -> Verdict {
    let r = ctx.ring();
    for a in r.elements() {
        for b in r.elements().skip(a.idx()) {
            if r.mul(a, b) != r.zero() {
                continue;
            }
            let (ca, cb) = (ctx.chain(a), ctx.chain(b));
            let top = ca.stable_from().max(cb.stable_from());
            if !(1..=top).any(|n| r.unit_sum_witness(ca.at(n), cb.at(n)).is_some()) {
                return Verdict::fail("", Witness::Pair { a, b });
            }
        }
    }
    Verdict::pass("", Witness::None)
}

/// `ab = 0 ⇒ ∃n: Ann(a) + Ann(bⁿ) = R`.
fn ann_sum(ctx: &RingContext) -> Verdict {
    let r = ctx.ring();
    for a in r.elements() {
        let ann_a = ctx.annihilator(a);
        for b in r.elements().filter(|&b| ann_a.contains(b)) {
            let cb = ctx.chain(b);
            if !(1..=cb.stable_from()).any(|n| r.unit_sum_witness(ann_a, cb.at(n)).is_some()) {
                return Verdict::fail("", Witness::Pair { a, b });
            }
        }
    }
    Verdict::pass("", Witness::None)
}

fn nested_kernels(ctx: &RingContext) -> Verdict {
    let primes = &ctx.spectrum().primes;
    for p in primes {
        for q in primes.iter().filter(|q| p.is_subset(q) && *q != p) {
            if ctx.kernel(p) != ctx.kernel(q) {
                return Verdict::fail(
                    "",
                    Witness::Chain {
                        lower: p.clone(),
                        upper: q.clone(),
                    },
                );
            }
        }
    }
    Verdict::pass("", Witness::None)
}

/// `Spec(R) = Spp(R)`; errors carry the skip reason.
fn spp_equals_spec(ctx: &RingContext) -> std::result::Result<Verdict, String> {
    let order = ctx.ring().order();
    let bound = ctx.bounds().spp_order;
    if order > bound {
        return Err(format!(
            "pure spectrum enumeration: order {order} exceeds spp bound {bound}"
        ));
    }
    if let Some(reason) = needs_lattice(ctx) {
        return Err(reason);
    }
    let spp = spectra::pure_spectrum(ctx.ring(), bound).map_err(|e| e.to_string())?;
    let primes = &ctx.spectrum().primes;
    let stray = spp
        .members
        .iter()
        .find(|p| !primes.contains(p))
        .or_else(|| primes.iter().find(|p| !spp.members.contains(p)));
    Ok(match stray {
        None => Verdict::pass("", Witness::None),
        Some(i) => Verdict::fail("", Witness::Ideal { ideal: i.clone() }),
    })
}
