//! Degree-by-degree linear algebra over `F₂`, independent of Gröbner bases.
//!
//! For a homogeneous ideal `I = (g_1, …, g_s)`, the degree-`d` part `I_d` is
//! spanned by the products `m·g_i` with `m` a monomial of degree
//! `d - deg g_i`. Ranks of these spans give `dim (P/I)_d`, ideal membership,
//! and annihilator dimensions, up to a fixed degree bound.

use std::collections::HashMap;

use super::poly::BinaryPoly;
use super::ring::{GradedRing, Monomial};
use crate::error::{Error, Result};

/// Row-echelon set of bit vectors; each stored row's lowest set bit is its pivot.
#[derive(Clone, Debug, Default)]
struct Echelon {
    rows: Vec<Vec<u64>>,
    pivots: HashMap<usize, usize>,
}

fn lowest_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

impl Echelon {
    /// Add a row; returns whether it was independent of the previous ones.
    fn insert(&mut self, mut row: Vec<u64>) -> bool {
        loop {
            let Some(c) = lowest_bit(&row) else {
                return false;
            };
            match self.pivots.get(&c) {
                Some(&r) => {
                    for (a, b) in row.iter_mut().zip(&self.rows[r]) {
                        *a ^= b;
                    }
                }
                None => {
                    self.pivots.insert(c, self.rows.len());
                    self.rows.push(row);
                    return true;
                }
            }
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

struct Graded {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    ideal: Echelon,
}

pub struct DegreeOracle {
    ring: GradedRing,
    max_degree: u32,
    parts: Vec<Graded>,
}

fn monomials_of_degree(degrees: &[u32], d: u32) -> Vec<Monomial> {
    fn go(v: usize, left: u32, degrees: &[u32], cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if v == degrees.len() {
            if left == 0 {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        let mut e = 0;
        while e * degrees[v] <= left {
            cur[v] = e as u16;
            go(v + 1, left - e * degrees[v], degrees, cur, out);
            e += 1;
        }
        cur[v] = 0;
    }
    let mut out = Vec::new();
    go(0, d, degrees, &mut vec![0; degrees.len()], &mut out);
    out
}

impl DegreeOracle {
    /// Precompute `I_d` for every `d ≤ max_degree`. Generators must be homogeneous.
    pub fn new(ring: &GradedRing, gens: &[BinaryPoly], max_degree: u32) -> Result<Self> {
        for g in gens {
            if !g.is_homogeneous(ring) {
                return Err(Error::Precondition(format!(
                    "{} is not homogeneous",
                    g.render(ring)
                )));
            }
        }
        let mut parts: Vec<Graded> = (0..=max_degree)
            .map(|d| {
                let monomials = monomials_of_degree(ring.degrees(), d);
                let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
                Graded {
                    monomials,
                    index,
                    ideal: Echelon::default(),
                }
            })
            .collect();
        for g in gens.iter().filter(|g| !g.is_zero()) {
            let e = g.degree(ring).expect("non-zero");
            for d in e..=max_degree {
                let multipliers = parts[(d - e) as usize].monomials.clone();
                for m in &multipliers {
                    let row = Self::row_in(&parts[d as usize], &g.mul_monomial(m));
                    parts[d as usize].ideal.insert(row);
                }
            }
        }
        Ok(DegreeOracle {
            ring: ring.clone(),
            max_degree,
            parts,
        })
    }

    fn row_in(part: &Graded, p: &BinaryPoly) -> Vec<u64> {
        let mut row = vec![0u64; part.monomials.len().div_ceil(64)];
        for m in p.terms() {
            let i = part.index[m];
            row[i / 64] ^= 1 << (i % 64);
        }
        row
    }

    fn check(&self, d: u32) -> Result<()> {
        if d > self.max_degree {
            return Err(Error::OutOfRange(format!(
                "degree {d} beyond the oracle bound {}",
                self.max_degree
            )));
        }
        Ok(())
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn monomial_count(&self, d: u32) -> Result<u64> {
        self.check(d)?;
        Ok(self.parts[d as usize].monomials.len() as u64)
    }

    /// `dim (P/I)_d`.
    pub fn quotient_dim(&self, d: u32) -> Result<u64> {
        self.check(d)?;
        let p = &self.parts[d as usize];
        Ok((p.monomials.len() - p.ideal.rank()) as u64)
    }

    pub fn hilbert(&self) -> Vec<u64> {
        (0..=self.max_degree)
            .map(|d| self.quotient_dim(d).expect("in range"))
            .collect()
    }

    /// Membership, component by component.
    pub fn contains(&self, p: &BinaryPoly) -> Result<bool> {
        let mut by_degree: HashMap<u32, Vec<Monomial>> = HashMap::new();
        for m in p.terms() {
            by_degree.entry(self.ring.degree(m)).or_default().push(m.clone());
        }
        for (d, ms) in by_degree {
            self.check(d)?;
            let part = &self.parts[d as usize];
            let mut ech = part.ideal.clone();
            let row = Self::row_in(part, &BinaryPoly::from_monomials(&self.ring, ms));
            if ech.insert(row) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `dim {g ∈ (P/I)_d : g·f = 0}` for homogeneous `f`.
    pub fn annihilator_dim(&self, f: &BinaryPoly, d: u32) -> Result<u64> {
        if !f.is_homogeneous(&self.ring) {
            return Err(Error::Precondition("f must be homogeneous".into()));
        }
        let Some(e) = f.degree(&self.ring) else {
            return self.quotient_dim(d);
        };
        self.check(d + e)?;
        let target = &self.parts[(d + e) as usize];
        let mut ech = target.ideal.clone();
        let source = &self.parts[d as usize];
        let image = source
            .monomials
            .iter()
            .filter(|m| ech.insert(Self::row_in(target, &f.mul_monomial(m))))
            .count();
        let kernel = source.monomials.len() - image;
        Ok((kernel - source.ideal.rank()) as u64)
    }

    /// Annihilator dimensions for every degree `d` with `d + deg f ≤ max_degree`.
    pub fn annihilator_dims(&self, f: &BinaryPoly) -> Result<Vec<u64>> {
        let e = f.degree(&self.ring).unwrap_or(0);
        (0..=self.max_degree.saturating_sub(e))
            .map(|d| self.annihilator_dim(f, d))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse::parse_polynomial;
    use super::*;

    #[test]
    fn monomial_counts() {
        let r = GradedRing::new([("x", 1), ("y", 1), ("z", 2)]).unwrap();
        let o = DegreeOracle::new(&r, &[], 4).unwrap();
        // x^a y^b z^c, a + b + 2c = d
        assert_eq!(o.hilbert(), vec![1, 2, 4, 6, 9]);
    }

    #[test]
    fn truncated_polynomial_ring() {
        let r = GradedRing::new([("x", 1)]).unwrap();
        let x2 = parse_polynomial(&r, "x^2").unwrap();
        let o = DegreeOracle::new(&r, &[x2], 4).unwrap();
        assert_eq!(o.hilbert(), vec![1, 1, 0, 0, 0]);
        let x = parse_polynomial(&r, "x").unwrap();
        assert_eq!(o.annihilator_dims(&x).unwrap(), vec![0, 1, 0, 0]);
        assert!(o.contains(&parse_polynomial(&r, "x^3").unwrap()).unwrap());
        assert!(!o.contains(&x).unwrap());
    }

    #[test]
    fn rejects_inhomogeneous() {
        let r = GradedRing::new([("x", 1)]).unwrap();
        let p = parse_polynomial(&r, "x + 1").unwrap();
        assert!(DegreeOracle::new(&r, &[p], 3).is_err());
    }
}
