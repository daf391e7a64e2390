//! Prime, minimal, maximal and pure spectra; localization kernels.

use serde::Serialize;

use crate::error::{Result, RingError};
use crate::ideal::{Ideal, PrimalityKind};
use crate::ring::{Elem, FiniteRing, RingSpec, SpecialKind};

/// `Spec(R)` with its minimal and maximal members.
///
/// `complete` is false when the ring was above the lattice bound: the primes
/// were then obtained from primitive idempotents and only the maximal ideals
/// are known to be listed.
#[derive(Clone, Debug, Serialize)]
pub struct Spectrum {
    pub primes: Vec<Ideal>,
    pub minimal: Vec<Ideal>,
    pub maximal: Vec<Ideal>,
    pub complete: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PureSpectrum {
    pub members: Vec<Ideal>,
}

/// Scans an ideal lattice for primes and classifies them by inclusion.
pub fn spectrum_from_lattice(ring: &FiniteRing, lattice: &[Ideal]) -> Spectrum {
    let primes: Vec<Ideal> = lattice
        .iter()
        .filter(|i| ring.primality(i, PrimalityKind::Prime).holds)
        .cloned()
        .collect();
    let minimal = primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q.is_proper_subset(p)))
        .cloned()
        .collect();
    let maximal = primes
        .iter()
        .filter(|p| !primes.iter().any(|q| p.is_proper_subset(q)))
        .cloned()
        .collect();
    Spectrum {
        primes,
        minimal,
        maximal,
        complete: true,
    }
}

/// Maximal ideals without the lattice: for each primitive idempotent `e`,
/// `{a : ae nilpotent}`. Each candidate is re-verified as maximal.
pub fn maximal_ideals_via_idempotents(ring: &FiniteRing) -> Vec<Ideal> {
    let idem: Vec<Elem> = ring
        .special_elements(SpecialKind::Idempotents)
        .into_iter()
        .filter(|&e| e != ring.zero())
        .collect();
    let primitive = idem
        .iter()
        .copied()
        .filter(|&e| !idem.iter().any(|&f| f != e && ring.mul(e, f) == f));
    let nil = nilradical(ring);
    let mut out: Vec<Ideal> = primitive
        .map(|e| {
            let members: Vec<Elem> = ring
                .elements()
                .filter(|&a| nil.contains(ring.mul(a, e)))
                .collect();
            ring.ideal_from_elements(&members)
                .expect("annihilator-of-idempotent set is an ideal")
        })
        .filter(|m| ring.primality(m, PrimalityKind::Maximal).holds)
        .collect();
    out.sort();
    out.dedup();
    out
}

/// `Spec(R)` by lattice scan when `order <= lattice_bound`, otherwise from
/// primitive idempotents (then `complete = false`).
pub fn spectrum(ring: &FiniteRing, lattice_bound: usize) -> Spectrum {
    match ring.all_ideals(lattice_bound) {
        Ok(lattice) => spectrum_from_lattice(ring, &lattice),
        Err(_) => {
            let maximal = maximal_ideals_via_idempotents(ring);
            Spectrum {
                primes: maximal.clone(),
                minimal: maximal.clone(),
                maximal,
                complete: false,
            }
        }
    }
}

pub fn nilradical(ring: &FiniteRing) -> Ideal {
    let nil = ring.special_elements(SpecialKind::Nilpotents);
    ring.ideal_from_elements(&nil)
        .expect("nilpotents form an ideal")
}

/// Intersection of the maximal ideals of `spec`.
pub fn jacobson_radical(ring: &FiniteRing, spec: &Spectrum) -> Ideal {
    spec.maximal
        .iter()
        .fold(ring.unit_ideal(), |acc, m| ring.intersection(&acc, m))
}

/// `Ker(R -> R_p) = {a : sa = 0 for some s outside p}`.
pub fn ker_pi(ring: &FiniteRing, p: &Ideal) -> Result<Ideal> {
    let verdict = ring.primality(p, PrimalityKind::Prime);
    if !verdict.holds {
        return Err(RingError::NotPrime(format!("{:?}", p.to_vec())));
    }
    Ok(ker_pi_unchecked(ring, p))
}

pub(crate) fn ker_pi_unchecked(ring: &FiniteRing, p: &Ideal) -> Ideal {
    let outside: Vec<Elem> = ring.elements().filter(|&s| !p.contains(s)).collect();
    let members: Vec<Elem> = ring
        .elements()
        .filter(|&a| outside.iter().any(|&s| ring.mul(s, a) == ring.zero()))
        .collect();
    ring.ideal_from_elements(&members)
        .expect("localization kernel is an ideal")
}

/// `V(I)`: the primes of `spec` containing `I`, sorted.
pub fn vanishing_set(spec: &Spectrum, ideal: &Ideal) -> Vec<Ideal> {
    let mut v: Vec<Ideal> = spec
        .primes
        .iter()
        .filter(|p| ideal.is_subset(p))
        .cloned()
        .collect();
    v.sort();
    v
}

/// Smallest `b ∈ I` with `a(1 - b) = 0`.
pub fn purity_witness(ring: &FiniteRing, ideal: &Ideal, a: Elem) -> Option<Elem> {
    ideal
        .elements()
        .find(|&b| ring.mul(a, ring.one_minus(b)) == ring.zero())
}

pub fn is_pure(ring: &FiniteRing, ideal: &Ideal) -> bool {
    ideal
        .elements()
        .all(|a| purity_witness(ring, ideal, a).is_some())
}

/// Members of `family` that pass the element-wise purity test.
pub fn pure_ideals(ring: &FiniteRing, family: &[Ideal]) -> Vec<Ideal> {
    family
        .iter()
        .filter(|i| is_pure(ring, i))
        .cloned()
        .collect()
}

/// Proper ideals `P` such that `IJ ⊆ P` forces `I ⊆ P` or `J ⊆ P` for all
/// pure `I`, `J`. Requires the full lattice.
pub fn pure_spectrum(ring: &FiniteRing, bound: usize) -> Result<PureSpectrum> {
    let lattice = ring.all_ideals(bound)?;
    let pure = pure_ideals(ring, &lattice);
    let products: Vec<(usize, usize, Ideal)> = (0..pure.len())
        .flat_map(|i| (i..pure.len()).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, ring.product(&pure[i], &pure[j])))
        .collect();
    let members = lattice
        .into_iter()
        .filter(|p| ring.is_proper(p))
        .filter(|p| {
            products.iter().all(|(i, j, ij)| {
                !ij.is_subset(p) || pure[*i].is_subset(p) || pure[*j].is_subset(p)
            })
        })
        .collect();
    Ok(PureSpectrum { members })
}

/// `R_p`, realized as `R / Ker π_p`, with the given provenance spec.
pub fn localize(ring: &FiniteRing, p: &Ideal, spec: RingSpec) -> Result<FiniteRing> {
    let kernel = ker_pi(ring, p)?;
    let (local, _) = ring.quotient(&kernel, spec)?;
    let non_units: Vec<Elem> = local.elements().filter(|&a| !local.is_unit(a)).collect();
    let closed = non_units
        .iter()
        .all(|&a| non_units.iter().all(|&b| !local.is_unit(local.add(a, b))));
    if !closed {
        return Err(RingError::NotARing(format!(
            "localization of {} is not local",
            ring.spec()
        )));
    }
    Ok(local)
}

/// `R_p` with a `localize(<spec>; <generators of p>)` provenance.
pub fn localize_at(ring: &FiniteRing, p: &Ideal) -> Result<FiniteRing> {
    let gens = ring
        .minimal_generators(p)
        .into_iter()
        .map(|e| e.0 as u64)
        .collect();
    let spec = RingSpec::LocalizeAt(Box::new(ring.spec().clone()), gens);
    localize(ring, p, spec)
}
