//! Colon ideals `(I : f) = {g : g·f ∈ I}`.
//!
//! Computed by elimination. With a new variable `t` ordered above everything
//! else, `t·I + (1+t)·(f)` eliminates to `I ∩ (f)`; dividing those generators
//! by `f` gives generators of `(I : f)`.

use super::groebner::{groebner_basis, GroebnerBasis};
use super::poly::BinaryPoly;
use super::ring::{GradedRing, Monomial};
use crate::error::{Error, Result};

/// `p / f`, failing unless the division is exact.
pub fn exact_quotient(ring: &GradedRing, p: &BinaryPoly, f: &BinaryPoly) -> Result<BinaryPoly> {
    let lf = f
        .leading()
        .ok_or_else(|| Error::Precondition("division by zero".into()))?;
    let mut rest = p.clone();
    let mut quotient = Vec::new();
    while let Some(lt) = rest.leading() {
        if !lf.divides(lt) {
            return Err(Error::InvariantViolation(format!(
                "{} is not divisible by {}",
                p.render(ring),
                f.render(ring)
            )));
        }
        let q = lf.quotient_of(lt);
        rest = rest.add(ring, &f.mul_monomial(&q));
        quotient.push(q);
    }
    Ok(BinaryPoly::from_monomials(ring, quotient))
}

/// Generators of `I ∩ (f)`.
pub fn intersect_principal(ring: &GradedRing, ideal: &[BinaryPoly], f: &BinaryPoly) -> Vec<BinaryPoly> {
    let ext = ring.with_elimination_variable();
    let lift = |m: &Monomial| {
        let mut e = vec![0];
        e.extend_from_slice(m.exponents());
        Monomial(e)
    };
    let t = BinaryPoly::var(&ext, 0);
    let one_plus_t = t.add(&ext, &BinaryPoly::one(&ext));
    let mut gens: Vec<BinaryPoly> = ideal.iter().map(|g| g.map_into(&ext, lift).mul(&ext, &t)).collect();
    gens.push(f.map_into(&ext, lift).mul(&ext, &one_plus_t));
    let gb = groebner_basis(&ext, &gens);
    gb.polys()
        .iter()
        .filter(|p| p.terms().iter().all(|m| m.exponents()[0] == 0))
        .map(|p| p.map_into(ring, |m| Monomial(m.exponents()[1..].to_vec())))
        .collect()
}

/// The annihilator of `f` in `P/I`, as generators reduced modulo `I`.
///
/// An empty list means the annihilator is zero. Generators come from the
/// reduced Gröbner basis of `(I : f)`, so none of them is redundant.
pub fn colon_ideal(ring: &GradedRing, ideal: &[BinaryPoly], f: &BinaryPoly) -> Result<Vec<BinaryPoly>> {
    Ok(colon_with_basis(ring, ideal, f)?.0)
}

/// As [`colon_ideal`], also returning the Gröbner bases of `I` and `(I : f)`.
pub fn colon_with_basis(
    ring: &GradedRing,
    ideal: &[BinaryPoly],
    f: &BinaryPoly,
) -> Result<(Vec<BinaryPoly>, GroebnerBasis, GroebnerBasis)> {
    if f.is_zero() {
        return Err(Error::Precondition("colon by the zero polynomial".into()));
    }
    let gb_i = groebner_basis(ring, ideal);
    let mut gens: Vec<BinaryPoly> = gb_i.polys().to_vec();
    for p in intersect_principal(ring, gb_i.polys(), f) {
        gens.push(exact_quotient(ring, &p, f)?);
    }
    let gb_colon = groebner_basis(ring, &gens);
    let generators = gb_colon
        .polys()
        .iter()
        .map(|g| gb_i.normal_form(g))
        .filter(|g| !g.is_zero())
        .collect();
    Ok((generators, gb_i, gb_colon))
}
