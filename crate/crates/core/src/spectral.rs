//! Pages of the Serre spectral sequence of a central extension by `Z/2`.
//!
//! For `1 → μ₂ → Γ → Γ/μ₂ → 1` with `A = H*(B(Γ/μ₂); F₂)` the `E₂` page is
//! `A[u]` with `u` in fibre degree 1, and everything is driven by the
//! transgression `k = d₂(u)`:
//!
//! * `E₃ = A/(k)[u²] ⊕ u·ann_A(k)[u²]`
//! * when `ann_A(k) = 0`, `d₃(u²) = Sq¹k` and
//!   `E₄ = A'/(Sq¹k)[u⁴] ⊕ u²·ann_{A'}(Sq¹k)[u⁴]` with `A' = A/(k)`.
//!
//! Pages are assembled from Gröbner bases; [`direct_page_dims`] recomputes
//! the same total dimensions by degreewise linear algebra.
//!
//! ```
//! use nilhom::spectral::{e3_page, page_poincare_series, bcom_extension};
//!
//! let page = e3_page(&bcom_extension(3).unwrap()).unwrap();
//! assert!(page.annihilator.is_empty());
//! assert_eq!(page_poincare_series(&page, 6).dims, [1, 3, 3, 3, 3, 3, 3]);
//! ```

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::f2_groebner::{
    colon_with_basis, groebner_basis, hilbert_from_basis, parse_polynomial, BinaryPoly, DegreeOracle,
    GradedRing, GroebnerBasis, HilbertFunction, IdealFile, Monomial, MonomialOrder,
};

/// `Sq¹` extended from generators as a derivation.
///
/// Degree-1 generators satisfy `Sq¹g = g²`; every other generator that
/// appears to an odd power needs an entry in `table`. Even powers contribute
/// nothing, so their generators may be missing from the table.
pub fn sq1(ring: &GradedRing, p: &BinaryPoly, table: &BTreeMap<String, BinaryPoly>) -> Result<BinaryPoly> {
    let mut images: Vec<Option<BinaryPoly>> = vec![None; ring.nvars()];
    for (i, name) in ring.names().iter().enumerate() {
        if ring.degrees()[i] == 1 {
            images[i] = Some(BinaryPoly::var(ring, i).pow(ring, 2));
        } else if let Some(v) = table.get(name) {
            images[i] = Some(v.clone());
        }
    }
    let mut out = BinaryPoly::zero();
    for m in p.terms() {
        for (i, &e) in m.exponents().iter().enumerate() {
            if e % 2 == 0 {
                continue;
            }
            let image = images[i]
                .as_ref()
                .ok_or_else(|| Error::MissingSq1Entry(ring.names()[i].clone()))?;
            let rest = Monomial::var(ring.nvars(), i).quotient_of(m);
            out = out.add(ring, &image.mul_monomial(&rest));
        }
    }
    Ok(out)
}

/// A presented graded `F₂`-algebra `P/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub ring: GradedRing,
    pub relations: Vec<BinaryPoly>,
}

impl Presentation {
    pub fn basis(&self) -> GroebnerBasis {
        groebner_basis(&self.ring, &self.relations)
    }
}

/// Input for the page computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionDatum {
    /// Presentation of `A`.
    pub base: Presentation,
    /// `d₂(u)`, of degree 2.
    pub k: BinaryPoly,
    /// `Sq¹k = d₃(u²)`, of degree 3.
    pub sq1_k: Option<BinaryPoly>,
    /// Candidate for `d₅(u⁴)`, checked to vanish on `A/(k)`.
    pub d5: Option<BinaryPoly>,
}

fn require_degree(ring: &GradedRing, p: &BinaryPoly, d: u32, what: &str) -> Result<()> {
    if p.is_zero() || (p.is_homogeneous(ring) && p.degree(ring) == Some(d)) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{what} = {} is not homogeneous of degree {d}",
            p.render(ring)
        )))
    }
}

impl ExtensionDatum {
    pub fn new(base: Presentation, k: BinaryPoly, sq1_k: Option<BinaryPoly>, d5: Option<BinaryPoly>) -> Result<Self> {
        let ring = &base.ring;
        if let Some(g) = base.relations.iter().find(|g| !g.is_homogeneous(ring)) {
            return Err(Error::Precondition(format!("relation {} is not homogeneous", g.render(ring))));
        }
        require_degree(ring, &k, 2, "k")?;
        if let Some(s) = &sq1_k {
            require_degree(ring, s, 3, "Sq1 k")?;
        }
        if let Some(p) = &d5 {
            require_degree(ring, p, 5, "d5 candidate")?;
        }
        Ok(ExtensionDatum { base, k, sq1_k, d5 })
    }

    pub fn ring(&self) -> &GradedRing {
        &self.base.ring
    }

    /// From an ideal file whose generators present `A`, with labeled lines
    /// `k:` (required), `sq1k:` and `d5:`.
    pub fn from_ideal_file(file: &IdealFile) -> Result<Self> {
        let k = file
            .get("k")
            .cloned()
            .ok_or_else(|| Error::Precondition("ideal file has no `k:` line".into()))?;
        let base = Presentation {
            ring: file.ring.clone(),
            relations: file.generators.clone(),
        };
        Self::new(base, k, file.get("sq1k").cloned(), file.get("d5").cloned())
    }
}

/// One page, as `quotient[u^period] ⊕ u^shift · annihilator[u^period]`.
#[derive(Clone, Debug)]
pub struct PageReport {
    pub page: u8,
    /// Gröbner basis of the ideal presenting the `u⁰` column.
    pub quotient: GroebnerBasis,
    /// Generators of the annihilator, reduced modulo the ideal it lives in.
    /// Empty means zero.
    pub annihilator: Vec<BinaryPoly>,
    pub u_period: u32,
    pub u_shift: u32,
    /// Whether the `d₅` candidate is zero on `A/(k)`, when one was supplied.
    pub d5_vanishes: Option<bool>,
    /// The ring the annihilator is an ideal of, as `P/ambient`.
    ambient: GroebnerBasis,
    /// `ambient : f`; the annihilator is `colon / ambient`.
    colon: GroebnerBasis,
}

impl PageReport {
    /// Dimensions of the annihilator column, before the `u^shift` offset.
    pub fn annihilator_dims(&self, max_degree: u32) -> Vec<u64> {
        let whole = hilbert_from_basis(&self.ambient, max_degree).dims;
        let rest = hilbert_from_basis(&self.colon, max_degree).dims;
        whole.iter().zip(&rest).map(|(a, b)| a - b).collect()
    }

    pub fn quotient_dims(&self, max_degree: u32) -> Vec<u64> {
        hilbert_from_basis(&self.quotient, max_degree).dims
    }
}

fn with_generator(p: &Presentation, extra: &BinaryPoly) -> Vec<BinaryPoly> {
    let mut gens = p.relations.clone();
    gens.push(extra.clone());
    gens
}

/// `E₃ = A/(k)[u²] ⊕ u·ann_A(k)[u²]`.
pub fn e3_page(ext: &ExtensionDatum) -> Result<PageReport> {
    let ring = ext.ring();
    let quotient = groebner_basis(ring, &with_generator(&ext.base, &ext.k));
    let (annihilator, ambient, colon) = if ext.k.is_zero() {
        let gb = ext.base.basis();
        (vec![BinaryPoly::one(ring)], gb, groebner_basis(ring, &[BinaryPoly::one(ring)]))
    } else {
        colon_with_basis(ring, &ext.base.relations, &ext.k)?
    };
    Ok(PageReport {
        page: 3,
        d5_vanishes: None,
        quotient,
        annihilator,
        u_period: 2,
        u_shift: 1,
        ambient,
        colon,
    })
}

/// `E₄ = A'/(Sq¹k)[u⁴] ⊕ u²·ann_{A'}(Sq¹k)[u⁴]` with `A' = A/(k)`.
///
/// Only the case `ann_A(k) = 0` is handled; otherwise `E₃` is not a
/// polynomial ring in `u²` and the error says so.
pub fn e4_page(ext: &ExtensionDatum) -> Result<PageReport> {
    let ring = ext.ring();
    let s = ext
        .sq1_k
        .as_ref()
        .ok_or_else(|| Error::Precondition("E4 needs Sq1 k".into()))?;
    let e3 = e3_page(ext)?;
    if !e3.annihilator.is_empty() {
        return Err(Error::Unsupported(format!(
            "k is a zero divisor (annihilator generated by {}); E3 is not A/(k)[u^2]",
            render_list(ring, &e3.annihilator)
        )));
    }
    let a_prime: Vec<BinaryPoly> = e3.quotient.polys().to_vec();
    let mut gens = a_prime.clone();
    gens.push(s.clone());
    let quotient = groebner_basis(ring, &gens);
    let (annihilator, ambient, colon) = if e3.quotient.contains(s) {
        // d₃ = 0: every class survives
        (vec![BinaryPoly::one(ring)], e3.quotient.clone(), groebner_basis(ring, &[BinaryPoly::one(ring)]))
    } else {
        colon_with_basis(ring, &a_prime, s)?
    };
    let d5_vanishes = ext.d5.as_ref().map(|p| e3.quotient.contains(p));
    Ok(PageReport {
        page: 4,
        quotient,
        annihilator,
        u_period: 4,
        u_shift: 2,
        d5_vanishes,
        ambient,
        colon,
    })
}

/// Total-degree dimensions of a page, with `u` of degree 1:
/// `dims[d] = Σ_{e ≡ 0} quotient[d−e] + Σ_{e ≡ shift} annihilator[d−e]`,
/// congruences mod `u_period`.
pub fn page_poincare_series(report: &PageReport, max_degree: u32) -> HilbertFunction {
    let quot = report.quotient_dims(max_degree);
    let ann = report.annihilator_dims(max_degree);
    let dims = (0..=max_degree as usize)
        .map(|d| {
            let column = |offset: u32, col: &[u64]| -> u64 {
                (offset as usize..=d)
                    .step_by(report.u_period as usize)
                    .map(|e| col[d - e])
                    .sum()
            };
            column(0, &quot) + column(report.u_shift, &ann)
        })
        .collect();
    HilbertFunction { dims }
}

/// Page dimensions from degreewise linear algebra, without Gröbner bases.
///
/// Page 3 is the homology of `d₂(a·uʲ) = j·a·k·uʲ⁻¹` on `A[u]`; page 4 is the
/// homology of `d₃(b·u²ʲ) = j·b·Sq¹k·u²ʲ⁻²` on `A/(k)[u²]`.
pub fn direct_page_dims(ext: &ExtensionDatum, page: u8, max_degree: u32) -> Result<Vec<u64>> {
    let (base, f, step) = match page {
        3 => (ext.base.relations.clone(), ext.k.clone(), 1),
        4 => {
            let s = ext
                .sq1_k
                .clone()
                .ok_or_else(|| Error::Precondition("E4 needs Sq1 k".into()))?;
            (with_generator(&ext.base, &ext.k), s, 2)
        }
        _ => return Err(Error::OutOfRange(format!("page {page}; only 3 and 4 are assembled"))),
    };
    let ring = ext.ring();
    let e = f.degree(ring).unwrap_or(0);
    let source = DegreeOracle::new(ring, &base, max_degree + e)?;
    let mut killed = base.clone();
    killed.push(f.clone());
    let target = DegreeOracle::new(ring, &killed, max_degree)?;
    (0..=max_degree)
        .map(|d| {
            let mut total = 0;
            for j in 0..=d / step {
                let rest = d - j * step;
                total += if j % 2 == 0 {
                    target.quotient_dim(rest)?
                } else {
                    source.annihilator_dim(&f, rest)?
                };
            }
            Ok(total)
        })
        .collect()
}

fn render_list(ring: &GradedRing, ps: &[BinaryPoly]) -> String {
    ps.iter().map(|p| p.render(ring)).collect::<Vec<_>>().join(", ")
}

fn parse_all(ring: &GradedRing, ps: &[&str]) -> Result<Vec<BinaryPoly>> {
    ps.iter().map(|p| parse_polynomial(ring, p)).collect()
}

fn sum_of_squares(ring: &GradedRing, names: &[String]) -> Result<BinaryPoly> {
    let text = names.iter().map(|y| format!("{y}^2")).collect::<Vec<_>>().join(" + ");
    parse_polynomial(ring, &text)
}

/// Base ring `F₂[x1, x2, y1, …, y_m]/(x1², x_a y_i, y_i y_j)` of
/// `Z/2^{n−2} ∗ (Z/2)^{∗m}`, `m = 2^{n−2}`; for `n = 3` just the `y`s.
fn free_product_base(n: u32) -> Result<(Presentation, Vec<String>)> {
    if !(3..=12).contains(&n) {
        return Err(Error::OutOfRange(format!("n = {n}; need 3 ≤ n ≤ 12")));
    }
    let m = if n == 3 { 3 } else { 1usize << (n - 2) };
    let ys: Vec<String> = (1..=m).map(|i| format!("y{i}")).collect();
    let mut vars: Vec<(String, u32)> = Vec::new();
    if n > 3 {
        vars.push(("x1".into(), 1));
        vars.push(("x2".into(), 2));
    }
    vars.extend(ys.iter().map(|y| (y.clone(), 1)));
    let ring = GradedRing::new(vars)?;
    let mut rels = Vec::new();
    if n > 3 {
        rels.push("x1^2".to_string());
        for x in ["x1", "x2"] {
            rels.extend(ys.iter().map(|y| format!("{x}*{y}")));
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            rels.push(format!("{}*{}", ys[i], ys[j]));
        }
    }
    let rels: Vec<&str> = rels.iter().map(String::as_str).collect();
    let relations = parse_all(&ring, &rels)?;
    Ok((Presentation { ring, relations }, ys))
}

/// `H*(B_com Q_{2^n}; F₂)` for `n ≥ 3`.
///
/// `n = 3`: `F₂[y1,y2,y3,z]/(y_i y_j, y1²+y2²+y3²)`. `n ≥ 4`: variables
/// `x1, x2, y1, …, y_{2^{n−2}}, z` with relations `x1², x_a y_i, y_i y_j`
/// and `x2 + Σ y_i²`.
pub fn bcom_presentation(n: u32) -> Result<Presentation> {
    let (base, ys) = free_product_base(n)?;
    let mut vars: Vec<(String, u32)> = base.ring.names().iter().cloned().zip(base.ring.degrees().iter().copied()).collect();
    vars.push(("z".into(), 2));
    let ring = GradedRing::new(vars)?;
    let mut relations: Vec<BinaryPoly> = base
        .relations
        .iter()
        .map(|r| parse_polynomial(&ring, &r.render(&base.ring)))
        .collect::<Result<_>>()?;
    let mut k = sum_of_squares(&ring, &ys)?;
    if n > 3 {
        k = k.add(&ring, &parse_polynomial(&ring, "x2")?);
    }
    relations.push(k);
    Ok(Presentation { ring, relations })
}

/// The extension with total space `B_com Q_{2^n}`: base as in
/// [`bcom_presentation`] without `z`, `k = x2 + Σ y_i²` and `Sq¹x2 = 0`.
pub fn bcom_extension(n: u32) -> Result<ExtensionDatum> {
    let (base, ys) = free_product_base(n)?;
    let ring = base.ring.clone();
    let mut k = sum_of_squares(&ring, &ys)?;
    let mut table = BTreeMap::new();
    if n > 3 {
        k = k.add(&ring, &parse_polynomial(&ring, "x2")?);
        table.insert("x2".to_string(), BinaryPoly::zero());
    }
    let s = sq1(&ring, &k, &table)?;
    ExtensionDatum::new(base, k, Some(s), None)
}

/// The extension for `B(3, Q₁₆)`, in Singular's `dp` order on
/// `(y1, y2, y3, b1, b2, z)`.
pub fn b3q16_extension() -> Result<ExtensionDatum> {
    let ring = GradedRing::new([("y1", 1), ("y2", 1), ("y3", 1), ("b1", 2), ("b2", 2), ("z", 2)])?
        .with_order(MonomialOrder::StandardGrevlex);
    let relations = parse_all(
        &ring,
        &[
            "y1*y2", "y1*y3", "y2*y3", "y3^2", "y2*b1", "y3*b1", "y1*b2", "y3*b2", "b1*b2",
            "b1^2 + y1^2*z", "b2^2 + y2^2*z",
        ],
    )?;
    let p = |s: &str| parse_polynomial(&ring, s);
    let k = p("z + b1 + y1^2 + b2 + y2^2")?;
    let sq1_k = p("y1*z + y1*b1 + y2*z + y2*b2")?;
    let d5 = p("y1*z^2 + y1^3*b1 + y2*z^2 + y2^3*b2")?;
    ExtensionDatum::new(Presentation { ring, relations }, k, Some(sq1_k), Some(d5))
}

/// The three annihilator facts for `B(3, Q₁₆)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct B3q16Check {
    /// Generators of `ann_A(k)`; expected empty.
    pub ann_k: Vec<String>,
    /// Generators of `ann_{A/(k)}(Sq¹k)`; expected `["y3"]`.
    pub ann_sq1k: Vec<String>,
    /// `(y3) ⊆ ann` and `ann ⊆ (y3)` modulo `I + (k)`.
    pub contains_y3: bool,
    pub contained_in_y3: bool,
    /// Normal form of the `d₅` candidate modulo `I + (k)`.
    pub d5_normal_form: String,
    pub passed: bool,
}

pub fn b3q16_check() -> Result<B3q16Check> {
    let ext = b3q16_extension()?;
    let ring = ext.ring();
    let e3 = e3_page(&ext)?;
    let e4 = e4_page(&ext)?;
    let y3 = parse_polynomial(ring, "y3")?;
    let s = ext.sq1_k.as_ref().expect("datum has Sq1 k");
    let a_prime = &e3.quotient;
    let contains_y3 = a_prime.contains(&y3.mul(ring, s));
    let mut y3_ideal = a_prime.polys().to_vec();
    y3_ideal.push(y3);
    let y3_gb = groebner_basis(ring, &y3_ideal);
    let contained_in_y3 = e4.annihilator.iter().all(|g| y3_gb.contains(g));
    let d5_nf = a_prime.normal_form(ext.d5.as_ref().expect("datum has d5"));
    let ann_k: Vec<String> = e3.annihilator.iter().map(|g| g.render(ring)).collect();
    let ann_sq1k: Vec<String> = e4.annihilator.iter().map(|g| g.render(ring)).collect();
    let passed = ann_k.is_empty() && ann_sq1k == ["y3"] && contains_y3 && contained_in_y3 && d5_nf.is_zero();
    Ok(B3q16Check {
        ann_k,
        ann_sq1k,
        contains_y3,
        contained_in_y3,
        d5_normal_form: d5_nf.render(ring),
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2_groebner::{hilbert_function, parse_ring};

    fn table(ring: &GradedRing, entries: &[(&str, &str)]) -> BTreeMap<String, BinaryPoly> {
        entries
            .iter()
            .map(|(k, v)| (k.to_string(), parse_polynomial(ring, v).unwrap()))
            .collect()
    }

    #[test]
    fn sq1_examples() {
        let r = parse_ring("y1:1, y2:1, x2:2, b:2").unwrap();
        let p = |s: &str| parse_polynomial(&r, s).unwrap();
        let t = table(&r, &[("x2", "0")]);
        assert_eq!(sq1(&r, &p("y1"), &t).unwrap(), p("y1^2"));
        assert_eq!(sq1(&r, &p("y1*y2"), &t).unwrap(), p("y1^2*y2 + y1*y2^2"));
        assert_eq!(sq1(&r, &p("x2 + y1^2 + y2^2"), &t).unwrap(), BinaryPoly::zero());
        // b only appears squared
        assert_eq!(sq1(&r, &p("b^2*y1"), &t).unwrap(), p("b^2*y1^2"));
        assert_eq!(sq1(&r, &p("b*y1"), &t), Err(Error::MissingSq1Entry("b".into())));
    }

    #[test]
    fn sq1_squares_to_zero_on_degree_one() {
        let r = parse_ring("a:1, b:1, c:1").unwrap();
        let t = BTreeMap::new();
        for s in ["a*b*c", "a^3*b + c^4", "a*b + b*c + a*c", "a^2*b^3*c"] {
            let p = parse_polynomial(&r, s).unwrap();
            let once = sq1(&r, &p, &t).unwrap();
            assert!(sq1(&r, &once, &t).unwrap().is_zero(), "{s}");
        }
    }

    #[test]
    fn toy_page() {
        let ring = parse_ring("y:1").unwrap();
        let k = parse_polynomial(&ring, "y^2").unwrap();
        let base = Presentation { ring, relations: vec![] };
        let ext = ExtensionDatum::new(base, k, None, None).unwrap();
        let page = e3_page(&ext).unwrap();
        assert!(page.annihilator.is_empty());
        assert_eq!(page.quotient_dims(4), [1, 1, 0, 0, 0]);
        assert_eq!(page_poincare_series(&page, 5).dims, [1, 1, 1, 1, 1, 1]);
        assert!(matches!(e4_page(&ext), Err(Error::Precondition(_))));
    }

    #[test]
    fn zero_k_gives_free_column() {
        let ring = parse_ring("y:1").unwrap();
        let base = Presentation { ring: ring.clone(), relations: vec![parse_polynomial(&ring, "y").unwrap()] };
        let ext = ExtensionDatum::new(base, BinaryPoly::zero(), None, None).unwrap();
        let page = e3_page(&ext).unwrap();
        assert_eq!(page_poincare_series(&page, 5).dims, [1; 6]);
        assert_eq!(direct_page_dims(&ext, 3, 5).unwrap(), [1; 6]);
    }

    #[test]
    fn zero_divisor_is_unsupported() {
        let ring = parse_ring("a:1, b:1").unwrap();
        let p = |s: &str| parse_polynomial(&ring, s).unwrap();
        let base = Presentation { ring: ring.clone(), relations: vec![p("a*b")] };
        let ext = ExtensionDatum::new(base, p("a^2"), Some(p("a^3")), None).unwrap();
        let e3 = e3_page(&ext).unwrap();
        assert_eq!(e3.annihilator, [p("b")]);
        assert_eq!(page_poincare_series(&e3, 6).dims, direct_page_dims(&ext, 3, 6).unwrap());
        assert!(matches!(e4_page(&ext), Err(Error::Unsupported(_))));
    }

    #[test]
    fn datum_degrees_are_checked() {
        let ring = parse_ring("a:1").unwrap();
        let base = Presentation { ring: ring.clone(), relations: vec![] };
        let a = parse_polynomial(&ring, "a").unwrap();
        assert!(ExtensionDatum::new(base, a, None, None).is_err());
    }

    #[test]
    fn bcom_presentations() {
        let p3 = bcom_presentation(3).unwrap();
        assert_eq!(p3.ring.to_string(), "y1:1, y2:1, y3:1, z:2");
        let rendered: Vec<String> = p3.relations.iter().map(|r| r.render(&p3.ring)).collect();
        assert_eq!(rendered, ["y1*y2", "y1*y3", "y2*y3", "y1^2 + y2^2 + y3^2"]);
        let p4 = bcom_presentation(4).unwrap();
        assert_eq!(p4.ring.to_string(), "x1:1, x2:2, y1:1, y2:1, y3:1, y4:1, z:2");
        assert_eq!(p4.relations.len(), 1 + 8 + 6 + 1);
        assert!(bcom_presentation(2).is_err());
    }

    #[test]
    fn bcom_abuts_to_e3() {
        for n in 3..=5 {
            let ext = bcom_extension(n).unwrap();
            assert!(ext.sq1_k.as_ref().unwrap().is_zero());
            let e3 = e3_page(&ext).unwrap();
            assert!(e3.annihilator.is_empty(), "n = {n}");
            let series = page_poincare_series(&e3, 8);
            let p = bcom_presentation(n).unwrap();
            assert_eq!(series, hilbert_function(&p.ring, &p.relations, 8).unwrap(), "n = {n}");
            assert_eq!(series.dims, direct_page_dims(&ext, 3, 8).unwrap());
            // d₃ = 0, so E₄ is E₃ regraded
            let e4 = e4_page(&ext).unwrap();
            assert_eq!(e4.u_period, 4);
            assert_eq!(page_poincare_series(&e4, 8), series);
        }
    }

    #[test]
    fn b3q16_annihilators_reproduced() {
        let c = b3q16_check().unwrap();
        assert!(c.ann_k.is_empty());
        assert_eq!(c.ann_sq1k, ["y3"]);
        assert!(c.contains_y3 && c.contained_in_y3);
        assert_eq!(c.d5_normal_form, "0");
        assert!(c.passed);
    }

    #[test]
    fn b3q16_pages_match_direct_oracle() {
        let ext = b3q16_extension().unwrap();
        let e4 = e4_page(&ext).unwrap();
        assert_eq!(e4.d5_vanishes, Some(true));
        let series = page_poincare_series(&e4, 8);
        assert_eq!(series.dims[..2], [1, 3]);
        assert_eq!(series.dims, direct_page_dims(&ext, 4, 8).unwrap());
        let e3 = e3_page(&ext).unwrap();
        assert_eq!(page_poincare_series(&e3, 8).dims, direct_page_dims(&ext, 3, 8).unwrap());
    }

    #[test]
    fn datum_from_file_matches_builtin() {
        let ext = b3q16_extension().unwrap();
        let mut text = format!("ring: {}\norder: dp\n", ext.ring());
        for r in &ext.base.relations {
            text += &format!("{}\n", r.render(ext.ring()));
        }
        text += &format!("k: {}\n", ext.k.render(ext.ring()));
        text += &format!("sq1k: {}\n", ext.sq1_k.as_ref().unwrap().render(ext.ring()));
        text += &format!("d5: {}\n", ext.d5.as_ref().unwrap().render(ext.ring()));
        let file = crate::f2_groebner::parse_ideal_file(&text).unwrap();
        assert_eq!(ExtensionDatum::from_ideal_file(&file).unwrap(), ext);

        let no_k = crate::f2_groebner::parse_ideal_file("ring: x:1\nx^2\n").unwrap();
        assert!(ExtensionDatum::from_ideal_file(&no_k).is_err());
    }

    #[test]
    fn y3_kills_sq1k_already_in_a() {
        let ext = b3q16_extension().unwrap();
        let ring = ext.ring();
        let ann = crate::f2_groebner::colon_ideal(ring, &ext.base.relations, ext.sq1_k.as_ref().unwrap()).unwrap();
        let rendered: Vec<String> = ann.iter().map(|g| g.render(ring)).collect();
        assert_eq!(rendered, ["y3"]);
    }
}
