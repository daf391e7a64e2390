//! Table-level ring oracle: every notion recomputed by brute force from the
//! raw addition and multiplication tables.

#![allow(dead_code)]

use ringlab_core::FiniteRing;

/// Table-level view of a ring.
pub struct Raw {
    pub n: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    pub zero: u32,
    pub one: u32,
}

impl Raw {
    pub fn new(r: &FiniteRing) -> Self {
        Self {
            n: r.order(),
            add: r.add_table().to_vec(),
            mul: r.mul_table().to_vec(),
            zero: r.zero().0,
            one: r.one().0,
        }
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.n + b as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.n + b as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        (0..self.n as u32)
            .find(|&b| self.add(a, b) == self.zero)
            .unwrap()
    }

    pub fn one_minus(&self, b: u32) -> u32 {
        self.add(self.one, self.neg(b))
    }

    pub fn pow(&self, a: u32, k: usize) -> u32 {
        (0..k).fold(self.one, |acc, _| self.mul(acc, a))
    }

    pub fn nilpotent(&self, a: u32) -> bool {
        self.pow(a, self.n) == self.zero
    }

    pub fn ann(&self, a: u32) -> Vec<u32> {
        (0..self.n as u32)
            .filter(|&x| self.mul(a, x) == self.zero)
            .collect()
    }

    pub fn pure(&self, i: &[u32]) -> bool {
        i.iter().all(|&a| {
            i.iter()
                .any(|&b| self.mul(a, self.one_minus(b)) == self.zero)
        })
    }

    pub fn npure(&self, i: &[u32]) -> bool {
        i.iter().all(|&a| {
            i.iter()
                .any(|&b| self.nilpotent(self.mul(a, self.one_minus(b))))
        })
    }

    pub fn radical(&self, i: &[u32]) -> Vec<u32> {
        (0..self.n as u32)
            .filter(|&a| (1..=self.n).any(|k| i.contains(&self.pow(a, k))))
            .collect()
    }

    pub fn principal(&self, e: u32) -> Vec<u32> {
        let mut v: Vec<u32> = (0..self.n as u32).map(|x| self.mul(x, e)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// `{a : Ann(a^n) + I = R for some n}`.
    pub fn formula_set(&self, i: &[u32]) -> Vec<u32> {
        (0..self.n as u32)
            .filter(|&a| {
                (1..=self.n).any(|k| {
                    let ann = self.ann(self.pow(a, k));
                    ann.iter()
                        .any(|&u| i.iter().any(|&v| self.add(u, v) == self.one))
                })
            })
            .collect()
    }
}
