//! A deliberately naive Buchberger over `F_p[x, y, z]`, written from scratch
//! as an oracle for the library's reduced bases.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeMap;

pub const VARS: [char; 3] = ['x', 'y', 'z'];

pub type Mono = [u32; 3];
pub type Poly = BTreeMap<Mono, u64>;

#[derive(Copy, Clone)]
pub enum Ord3 {
    Lex,
    GrevLex,
}

pub fn cmp(o: Ord3, a: &Mono, b: &Mono) -> Ordering {
    match o {
        Ord3::Lex => a.cmp(b),
        Ord3::GrevLex => {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            da.cmp(&db).then_with(|| {
                // smaller exponent in the last differing variable is larger
                (0..3)
                    .rev()
                    .find(|&i| a[i] != b[i])
                    .map_or(Ordering::Equal, |i| b[i].cmp(&a[i]))
            })
        }
    }
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn inv(c: u64, p: u64) -> u64 {
    pow_mod(c, p - 2, p)
}

pub fn lead(o: Ord3, f: &Poly) -> (Mono, u64) {
    let (m, c) = f.iter().max_by(|a, b| cmp(o, a.0, b.0)).unwrap();
    (*m, *c)
}

/// `f - c·x^s·g`.
pub fn sub_mul(f: &Poly, c: u64, s: &Mono, g: &Poly, p: u64) -> Poly {
    let mut out = f.clone();
    for (m, gc) in g {
        let mm = [m[0] + s[0], m[1] + s[1], m[2] + s[2]];
        let e = out.entry(mm).or_insert(0);
        *e = (*e + p - c * gc % p) % p;
        if *e == 0 {
            out.remove(&mm);
        }
    }
    out
}

pub fn divides(a: &Mono, b: &Mono) -> bool {
    (0..3).all(|i| a[i] <= b[i])
}

/// Full reduction: repeatedly cancel any term divisible by some leading term.
pub fn reduce(o: Ord3, f: &Poly, gs: &[Poly], p: u64) -> Poly {
    let mut f = f.clone();
    'outer: loop {
        let mut terms: Vec<Mono> = f.keys().copied().collect();
        terms.sort_by(|a, b| cmp(o, b, a));
        for t in terms {
            for g in gs {
                let (lg, cg) = lead(o, g);
                if divides(&lg, &t) {
                    let s = [t[0] - lg[0], t[1] - lg[1], t[2] - lg[2]];
                    let c = f[&t] * inv(cg, p) % p;
                    f = sub_mul(&f, c, &s, g, p);
                    continue 'outer;
                }
            }
        }
        return f;
    }
}

pub fn monic(o: Ord3, f: &Poly, p: u64) -> Poly {
    let c = inv(lead(o, f).1, p);
    f.iter().map(|(m, v)| (*m, v * c % p)).collect()
}

pub fn naive_buchberger(o: Ord3, gens: &[Poly], p: u64) -> Vec<Poly> {
    let mut g: Vec<Poly> = gens.iter().filter(|f| !f.is_empty()).cloned().collect();
    loop {
        let mut added = false;
        let n = g.len();
        for i in 0..n {
            for j in i + 1..n {
                let (mi, ci) = lead(o, &g[i]);
                let (mj, cj) = lead(o, &g[j]);
                let l = [mi[0].max(mj[0]), mi[1].max(mj[1]), mi[2].max(mj[2])];
                let si = [l[0] - mi[0], l[1] - mi[1], l[2] - mi[2]];
                let sj = [l[0] - mj[0], l[1] - mj[1], l[2] - mj[2]];
                let a = sub_mul(&Poly::new(), p - inv(ci, p), &si, &g[i], p);
                let s = sub_mul(&a, inv(cj, p), &sj, &g[j], p);
                let r = reduce(o, &s, &g, p);
                if !r.is_empty() {
                    g.push(r);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    // minimal, then interreduced and monic
    let mut min: Vec<Poly> = Vec::new();
    for (k, f) in g.iter().enumerate() {
        let m = lead(o, f).0;
        let redundant = g.iter().enumerate().any(|(l, h)| {
            let mh = lead(o, h).0;
            l != k && divides(&mh, &m) && (mh != m || l < k)
        });
        if !redundant {
            min.push(f.clone());
        }
    }
    (0..min.len())
        .map(|k| {
            let others: Vec<Poly> = min
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .map(|(_, h)| h.clone())
                .collect();
            monic(o, &reduce(o, &min[k], &others, p), p)
        })
        .collect()
}

/// `x`, `z^2`, `x^3 - y*z` over `F_p`.
pub fn example_ideal(p: u64) -> Vec<Poly> {
    vec![
        Poly::from([([1, 0, 0], 1)]),
        Poly::from([([0, 0, 2], 1)]),
        Poly::from([([3, 0, 0], 1), ([0, 1, 1], p - 1)]),
    ]
}

/// Terms largest first, e.g. `3*x^2*y + z + 4`.
pub fn to_text(o: Ord3, f: &Poly) -> String {
    let mut terms: Vec<(&Mono, &u64)> = f.iter().collect();
    terms.sort_by(|a, b| cmp(o, b.0, a.0));
    let parts: Vec<String> = terms
        .into_iter()
        .map(|(m, c)| {
            let vars: Vec<String> = m
                .iter()
                .zip(VARS)
                .filter(|(e, _)| **e > 0)
                .map(|(e, v)| {
                    if *e == 1 {
                        v.to_string()
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect();
            match (vars.is_empty(), *c) {
                (true, c) => c.to_string(),
                (false, 1) => vars.join("*"),
                (false, c) => format!("{c}*{}", vars.join("*")),
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}
