use std::cell::OnceCell;

use serde::Serialize;

use crate::ideal::{AnnChain, Ideal};
use crate::ring::{Elem, FiniteRing, PowerCycle, RingSpec};
use crate::spectra::{self, Spectrum};

/// Order caps for the expensive parts of the battery.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Full ideal lattice (and hence a complete spectrum) up to this order.
    pub lattice_order: usize,
    /// Element-level deciders up to this order.
    pub element_order: usize,
    /// Pure-spectrum enumeration up to this order.
    pub spp_order: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            lattice_order: 64,
            element_order: 200,
            spp_order: 24,
        }
    }
}

/// The ideals an "every ideal" quantifier ranges over.
#[derive(Clone, Debug)]
pub struct IdealFamily {
    pub ideals: Vec<Ideal>,
    /// Principal ideals, `𝔑`, `𝔍` and pairwise principal sums instead of the lattice.
    pub sampled: bool,
}

/// Lazily computed per-ring data shared by all deciders.
pub struct RingContext<'r> {
    ring: &'r FiniteRing,
    bounds: Bounds,
    cycles: OnceCell<Vec<PowerCycle>>,
    chains: OnceCell<Vec<AnnChain>>,
    nil: OnceCell<Ideal>,
    principal: OnceCell<Vec<Ideal>>,
    family: OnceCell<IdealFamily>,
    spectrum: OnceCell<Spectrum>,
    jacobson: OnceCell<Ideal>,
    kernels: OnceCell<Vec<Ideal>>,
    locals: OnceCell<Vec<FiniteRing>>,
    pure: OnceCell<Vec<(Ideal, Ideal)>>,
    mod_nil: OnceCell<(FiniteRing, Vec<Elem>)>,
}

impl<'r> RingContext<'r> {
    pub fn new(ring: &'r FiniteRing, bounds: Bounds) -> Self {
        Self {
            ring,
            bounds,
            cycles: OnceCell::new(),
            chains: OnceCell::new(),
            nil: OnceCell::new(),
            principal: OnceCell::new(),
            family: OnceCell::new(),
            spectrum: OnceCell::new(),
            jacobson: OnceCell::new(),
            kernels: OnceCell::new(),
            locals: OnceCell::new(),
            pure: OnceCell::new(),
            mod_nil: OnceCell::new(),
        }
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    pub fn cycle(&self, a: Elem) -> &PowerCycle {
        &self.cycles.get_or_init(|| {
            self.ring
                .elements()
                .map(|x| self.ring.power_cycle(x))
                .collect()
        })[a.idx()]
    }

    /// `Ann(a) ⊆ Ann(a²) ⊆ ...` up to stabilization.
    pub fn chain(&self, a: Elem) -> &AnnChain {
        &self.chains.get_or_init(|| {
            self.ring
                .elements()
                .map(|x| self.ring.ann_chain(x))
                .collect()
        })[a.idx()]
    }

    pub fn annihilator(&self, a: Elem) -> &Ideal {
        self.chain(a).at(1)
    }

    pub fn nil(&self) -> &Ideal {
        self.nil.get_or_init(|| spectra::nilradical(self.ring))
    }

    /// Distinct principal ideals, sorted.
    pub fn principal_ideals(&self) -> &[Ideal] {
        self.principal.get_or_init(|| {
            let mut v: Vec<Ideal> = self
                .ring
                .elements()
                .map(|a| self.ring.principal_ideal(a))
                .collect();
            v.sort();
            v.dedup();
            v
        })
    }

    pub fn family(&self) -> &IdealFamily {
        self.family
            .get_or_init(|| match self.ring.all_ideals(self.bounds.lattice_order) {
                Ok(ideals) => IdealFamily {
                    ideals,
                    sampled: false,
                },
                Err(_) => {
                    let principal = self.principal_ideals();
                    let mut ideals = principal.to_vec();
                    ideals.push(self.nil().clone());
                    ideals.push(self.jacobson().clone());
                    for (i, a) in principal.iter().enumerate() {
                        for b in &principal[i + 1..] {
                            ideals.push(self.ring.sum(a, b));
                        }
                    }
                    ideals.sort();
                    ideals.dedup();
                    IdealFamily {
                        ideals,
                        sampled: true,
                    }
                }
            })
    }

    pub fn spectrum(&self) -> &Spectrum {
        self.spectrum.get_or_init(|| {
            if self.ring.order() <= self.bounds.lattice_order {
                spectra::spectrum_from_lattice(self.ring, &self.family().ideals)
            } else {
                spectra::spectrum(self.ring, self.bounds.lattice_order)
            }
        })
    }

    /// True when prime quantifiers only ran over the maximal ideals.
    pub fn spectrum_sampled(&self) -> bool {
        !self.spectrum().complete
    }

    pub fn jacobson(&self) -> &Ideal {
        self.jacobson
            .get_or_init(|| spectra::jacobson_radical(self.ring, self.spectrum()))
    }

    fn prime_index(&self, p: &Ideal) -> usize {
        self.spectrum()
            .primes
            .iter()
            .position(|q| q == p)
            .expect("ideal is a listed prime")
    }

    /// `Ker π_p` for a prime of the cached spectrum.
    pub fn kernel(&self, p: &Ideal) -> &Ideal {
        let all = self.kernels.get_or_init(|| {
            self.spectrum()
                .primes
                .iter()
                .map(|p| spectra::ker_pi_unchecked(self.ring, p))
                .collect()
        });
        &all[self.prime_index(p)]
    }

    /// `R_p` for a prime of the cached spectrum.
    pub fn localization(&self, p: &Ideal) -> &FiniteRing {
        let all = self.locals.get_or_init(|| {
            self.spectrum()
                .primes
                .iter()
                .map(|p| {
                    spectra::localize_at(self.ring, p)
                        .expect("localization of a finite ring is local")
                })
                .collect()
        });
        &all[self.prime_index(p)]
    }

    /// Pure members of the ideal family, each paired with its radical.
    pub fn pure_ideals(&self) -> &[(Ideal, Ideal)] {
        self.pure.get_or_init(|| {
            self.family()
                .ideals
                .iter()
                .filter(|i| spectra::is_pure(self.ring, i))
                .map(|i| (i.clone(), self.ring.radical(i)))
                .collect()
        })
    }

    /// `R/𝔑` with the projection.
    pub fn mod_nil(&self) -> &(FiniteRing, Vec<Elem>) {
        self.mod_nil.get_or_init(|| {
            let gens = self
                .ring
                .minimal_generators(self.nil())
                .into_iter()
                .map(|e| e.0 as u64)
                .collect();
            let spec = RingSpec::Quotient(Box::new(self.ring.spec().clone()), gens);
            self.ring
                .quotient(self.nil(), spec)
                .expect("nilradical is proper")
        })
    }
}
