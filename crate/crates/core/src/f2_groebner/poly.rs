use std::cmp::Ordering;

use super::ring::{GradedRing, Monomial};

/// A polynomial over `F₂`: a set of monomials, kept sorted in decreasing
/// order for the ring it was built in.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BinaryPoly {
    pub(crate) terms: Vec<Monomial>,
}

impl BinaryPoly {
    pub fn zero() -> Self {
        BinaryPoly { terms: Vec::new() }
    }

    pub fn one(ring: &GradedRing) -> Self {
        Self::monomial(Monomial::one(ring.nvars()))
    }

    pub fn monomial(m: Monomial) -> Self {
        BinaryPoly { terms: vec![m] }
    }

    pub fn var(ring: &GradedRing, i: usize) -> Self {
        Self::monomial(Monomial::var(ring.nvars(), i))
    }

    /// Sum of the given monomials; repeated monomials cancel in pairs.
    pub fn from_monomials(ring: &GradedRing, mut ms: Vec<Monomial>) -> Self {
        ms.sort_by(|a, b| ring.cmp(b, a));
        let mut terms: Vec<Monomial> = Vec::with_capacity(ms.len());
        for m in ms {
            if terms.last() == Some(&m) {
                terms.pop();
            } else {
                terms.push(m);
            }
        }
        BinaryPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].is_one()
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&Monomial> {
        self.terms.first()
    }

    /// Whether every term has the same weighted degree.
    pub fn is_homogeneous(&self, ring: &GradedRing) -> bool {
        self.terms.windows(2).all(|w| ring.degree(&w[0]) == ring.degree(&w[1]))
    }

    /// Weighted degree of a homogeneous polynomial (`None` for zero).
    pub fn degree(&self, ring: &GradedRing) -> Option<u32> {
        self.terms.iter().map(|m| ring.degree(m)).max()
    }

    pub fn add(&self, ring: &GradedRing, o: &BinaryPoly) -> BinaryPoly {
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match ring.cmp(&a[i], &b[j]) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        BinaryPoly { terms: out }
    }

    /// Multiplication by a monomial preserves the term order.
    pub fn mul_monomial(&self, m: &Monomial) -> BinaryPoly {
        BinaryPoly {
            terms: self.terms.iter().map(|t| t.mul(m)).collect(),
        }
    }

    pub fn mul(&self, ring: &GradedRing, o: &BinaryPoly) -> BinaryPoly {
        let prods = self
            .terms
            .iter()
            .flat_map(|a| o.terms.iter().map(move |b| a.mul(b)))
            .collect();
        BinaryPoly::from_monomials(ring, prods)
    }

    pub fn pow(&self, ring: &GradedRing, e: u32) -> BinaryPoly {
        (0..e).fold(BinaryPoly::one(ring), |acc, _| acc.mul(ring, self))
    }

    /// Re-sort for a ring with a different order or extra variables.
    pub(crate) fn map_into(&self, to: &GradedRing, f: impl Fn(&Monomial) -> Monomial) -> BinaryPoly {
        BinaryPoly::from_monomials(to, self.terms.iter().map(f).collect())
    }

    pub fn render(&self, ring: &GradedRing) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let ts: Vec<String> = self.terms.iter().map(|m| ring.fmt_monomial(m)).collect();
        ts.join(" + ")
    }
}
