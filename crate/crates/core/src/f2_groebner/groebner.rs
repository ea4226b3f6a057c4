//! Buchberger's algorithm and normal forms.
//!
//! S-pairs are processed in order of (degree of the lcm, pair index), which
//! makes every run deterministic. Pairs with coprime leading terms and pairs
//! covered by the chain criterion are skipped.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use super::poly::BinaryPoly;
use super::ring::GradedRing;

/// A reduced Gröbner basis, sorted by increasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: GradedRing,
    polys: Vec<BinaryPoly>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn polys(&self) -> &[BinaryPoly] {
        &self.polys
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.polys.iter().any(BinaryPoly::is_one)
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &super::Monomial> {
        self.polys.iter().map(|p| p.leading().expect("non-zero"))
    }

    pub fn normal_form(&self, p: &BinaryPoly) -> BinaryPoly {
        reduce_full(&self.ring, p, &self.polys)
    }

    pub fn contains(&self, p: &BinaryPoly) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn render(&self) -> Vec<String> {
        self.polys.iter().map(|p| p.render(&self.ring)).collect()
    }
}

/// Remainder of `p` after complete reduction by `basis`.
pub(crate) fn reduce_full(ring: &GradedRing, p: &BinaryPoly, basis: &[BinaryPoly]) -> BinaryPoly {
    let mut p = p.clone();
    let mut rem = Vec::new();
    let mut done = 0;
    // `p.terms[..done]` are irreducible and already moved to `rem`
    while done < p.terms.len() {
        let lt = &p.terms[done];
        match basis.iter().find(|g| g.leading().is_some_and(|l| l.divides(lt))) {
            Some(g) => {
                let q = g.leading().expect("non-zero").quotient_of(lt);
                let tail = BinaryPoly {
                    terms: p.terms.split_off(done),
                };
                p.terms.extend(tail.add(ring, &g.mul_monomial(&q)).terms);
            }
            None => {
                rem.push(lt.clone());
                done += 1;
            }
        }
    }
    BinaryPoly { terms: rem }
}

fn s_poly(f: &BinaryPoly, g: &BinaryPoly, ring: &GradedRing) -> BinaryPoly {
    let (lf, lg) = (f.leading().expect("non-zero"), g.leading().expect("non-zero"));
    let l = lf.lcm(lg);
    f.mul_monomial(&lf.quotient_of(&l))
        .add(ring, &g.mul_monomial(&lg.quotient_of(&l)))
}

struct Buchberger<'a> {
    ring: &'a GradedRing,
    basis: Vec<BinaryPoly>,
    queue: BinaryHeap<Reverse<(u32, usize, usize)>>,
    pending: HashSet<(usize, usize)>,
}

impl Buchberger<'_> {
    fn insert(&mut self, h: BinaryPoly) {
        let j = self.basis.len();
        let lh = h.leading().expect("non-zero").clone();
        self.basis.push(h);
        for i in 0..j {
            let l = self.basis[i].leading().expect("non-zero").lcm(&lh);
            self.queue.push(Reverse((self.ring.degree(&l), i, j)));
            self.pending.insert((i, j));
        }
    }

    fn chain_criterion(&self, i: usize, j: usize) -> bool {
        let l = self.basis[i]
            .leading()
            .expect("non-zero")
            .lcm(self.basis[j].leading().expect("non-zero"));
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        (0..self.basis.len()).any(|k| {
            k != i
                && k != j
                && self.basis[k].leading().expect("non-zero").divides(&l)
                && !self.pending.contains(&key(i, k))
                && !self.pending.contains(&key(j, k))
        })
    }

    fn run(mut self) -> Vec<BinaryPoly> {
        while let Some(Reverse((_, i, j))) = self.queue.pop() {
            self.pending.remove(&(i, j));
            let (li, lj) = (
                self.basis[i].leading().expect("non-zero"),
                self.basis[j].leading().expect("non-zero"),
            );
            if li.coprime(lj) || self.chain_criterion(i, j) {
                continue;
            }
            let s = s_poly(&self.basis[i], &self.basis[j], self.ring);
            let h = reduce_full(self.ring, &s, &self.basis);
            if !h.is_zero() {
                self.insert(h);
            }
        }
        self.basis
    }
}

/// Minimal, then fully interreduced.
fn reduce_basis(ring: &GradedRing, mut g: Vec<BinaryPoly>) -> Vec<BinaryPoly> {
    g.sort_by(|a, b| ring.cmp(a.leading().expect("non-zero"), b.leading().expect("non-zero")));
    let mut minimal: Vec<BinaryPoly> = Vec::new();
    for p in g {
        let lp = p.leading().expect("non-zero");
        if !minimal.iter().any(|q| q.leading().expect("non-zero").divides(lp)) {
            minimal.push(p);
        }
    }
    (0..minimal.len())
        .map(|i| {
            let others: Vec<BinaryPoly> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, q)| q.clone())
                .collect();
            reduce_full(ring, &minimal[i], &others)
        })
        .collect()
}

/// The reduced Gröbner basis of the ideal generated by `gens`.
pub fn groebner_basis(ring: &GradedRing, gens: &[BinaryPoly]) -> GroebnerBasis {
    let mut b = Buchberger {
        ring,
        basis: Vec::new(),
        queue: BinaryHeap::new(),
        pending: HashSet::new(),
    };
    for p in gens {
        let h = reduce_full(ring, p, &b.basis);
        if !h.is_zero() {
            b.insert(h);
        }
    }
    let basis = b.run();
    GroebnerBasis {
        ring: ring.clone(),
        polys: reduce_basis(ring, basis),
    }
}

pub fn normal_form(p: &BinaryPoly, gb: &GroebnerBasis) -> BinaryPoly {
    gb.normal_form(p)
}
