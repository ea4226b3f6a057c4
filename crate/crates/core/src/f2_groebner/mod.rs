//! Graded commutative algebra over `F₂`.
//!
//! Polynomial rings have weighted variables ([`GradedRing`]). Monomials are
//! compared by graded reverse lexicographic order in the ring's variable
//! order, graded by weighted degree by default; [`MonomialOrder::StandardGrevlex`]
//! grades every variable by 1 instead. Gröbner bases are reduced, so they are
//! unique for a fixed ring and order.
//!
//! ```
//! use nilhom::f2_groebner::{colon_ideal, groebner_basis, parse_polynomial, parse_ring};
//!
//! let ring = parse_ring("y1:1, y2:1").unwrap();
//! let p = |s: &str| parse_polynomial(&ring, s).unwrap();
//! let gb = groebner_basis(&ring, &[p("y1 + y2"), p("y1*y2")]);
//! assert_eq!(gb.render(), ["y1 + y2", "y2^2"]);
//!
//! // y1 kills y2 modulo (y1*y2)
//! let ann = colon_ideal(&ring, &[p("y1*y2")], &p("y1")).unwrap();
//! assert_eq!(ann, [p("y2")]);
//! ```

mod colon;
mod groebner;
mod hilbert;
pub mod oracle;
mod parse;
mod poly;
mod ring;

pub use colon::{colon_ideal, colon_with_basis, exact_quotient, intersect_principal};
pub use groebner::{groebner_basis, normal_form, GroebnerBasis};
pub use hilbert::{hilbert_from_basis, HilbertFunction};
pub use oracle::DegreeOracle;
pub use parse::{parse_ideal_file, parse_polynomial, parse_ring, IdealFile};
pub use poly::BinaryPoly;
pub use ring::{GradedRing, Monomial, MonomialOrder};

use crate::error::{Error, Result};

/// `dims[d] = dim (P/I)_d` for `d ≤ max_degree`, by counting standard monomials.
pub fn hilbert_function(ring: &GradedRing, ideal: &[BinaryPoly], max_degree: u32) -> Result<HilbertFunction> {
    if let Some(g) = ideal.iter().find(|g| !g.is_homogeneous(ring)) {
        return Err(Error::Precondition(format!(
            "{} is not homogeneous; the quotient is not graded",
            g.render(ring)
        )));
    }
    Ok(hilbert_from_basis(&groebner_basis(ring, ideal), max_degree))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(r: &GradedRing, s: &[&str]) -> Vec<BinaryPoly> {
        s.iter().map(|p| parse_polynomial(r, p).unwrap()).collect()
    }

    #[test]
    fn hilbert_examples() {
        let r = parse_ring("x:1").unwrap();
        assert_eq!(hilbert_function(&r, &ps(&r, &["x^2"]), 4).unwrap().dims, [1, 1, 0, 0, 0]);

        let r = parse_ring("y1:1, y2:1, y3:1, z:2").unwrap();
        let i = ps(&r, &["y1*y2", "y1*y3", "y2*y3", "y1^2 + y2^2 + y3^2"]);
        assert_eq!(hilbert_function(&r, &i, 8).unwrap().dims, [1, 3, 3, 3, 3, 3, 3, 3, 3]);

        assert!(hilbert_function(&r, &ps(&r, &["y1 + z"]), 3).is_err());
    }

    #[test]
    fn hilbert_matches_oracle_on_random_monomial_ideals() {
        let r = parse_ring("a:1, b:1, c:2").unwrap();
        let cases = [
            vec!["a^2", "b^3", "a*c"],
            vec!["a*b", "c^2"],
            vec!["a^2 + b^2", "a*b", "b*c + a^3"],
            vec!["a^3 + a*c", "b^2*c"],
        ];
        for gens in cases {
            let i = ps(&r, &gens);
            let o = DegreeOracle::new(&r, &i, 9).unwrap();
            assert_eq!(hilbert_function(&r, &i, 9).unwrap().dims, o.hilbert(), "{gens:?}");
        }
    }

    #[test]
    fn colon_matches_oracle() {
        let r = parse_ring("a:1, b:1, c:2").unwrap();
        let i = ps(&r, &["a^2 + b^2", "a*b*c", "c^2 + a^2*c"]);
        for f in ["a", "a + b", "c", "a*b"] {
            let f = parse_polynomial(&r, f).unwrap();
            let (gens, gb_i, gb_colon) = colon_with_basis(&r, &i, &f).unwrap();
            for g in &gens {
                assert!(gb_i.contains(&g.mul(&r, &f)));
            }
            let e = f.degree(&r).unwrap();
            let o = DegreeOracle::new(&r, &i, 8).unwrap();
            let quotient = hilbert_from_basis(&gb_i, 8 - e).dims;
            let colon_quotient = hilbert_from_basis(&gb_colon, 8 - e).dims;
            let ann: Vec<u64> = quotient.iter().zip(&colon_quotient).map(|(a, b)| a - b).collect();
            assert_eq!(ann, o.annihilator_dims(&f).unwrap());
        }
    }
}
