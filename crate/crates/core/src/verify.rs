//! End-to-end checks, one per numbered criterion.
//!
//! Each check recomputes its quantities two independent ways (closed formula
//! against enumeration, Gröbner basis against linear algebra) and reports a
//! [`Verdict`]. A check that errors is reported as failed with the error text.

use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::error::Result;
use crate::f2_groebner::{hilbert_from_basis, hilbert_function, BinaryPoly, DegreeOracle};
use crate::hom_count::{
    c_formula, conjugation_orbit_count, gen_formula, gen_tuple_enumeration, k_formula, n_formula,
    so3_component_count, stabilizer_census, stable_summand_counts, su2_component_count, Method, Target,
};
use crate::quat_group::GroupId;
use crate::spectral::{
    b3q16_check, b3q16_extension, bcom_extension, bcom_presentation, direct_page_dims, e3_page, e4_page,
    page_poincare_series, ExtensionDatum,
};
use crate::su2_exact::{binary_octahedral, normalizes, octahedral_extra_generator, quaternion_group_elements};
use crate::subgroups::{generated_subgroup, nil_poset_report, SubgroupDescriptor};

pub const CRITERIA: std::ops::RangeInclusive<u8> = 1..=10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} criterion {:>2} ({}): {} [{:.2?}]",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed
        )
    }
}

/// Collects failures; `passed` iff none were recorded.
#[derive(Default)]
struct Log {
    checked: usize,
    failures: Vec<String>,
}

impl Log {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        let ok = got == want;
        self.check(ok, || format!("{what}: got {got:?}, expected {want:?}"));
    }

    fn finish(self) -> (bool, String) {
        if self.failures.is_empty() {
            (true, format!("{} checks", self.checked))
        } else {
            let shown: Vec<_> = self.failures.iter().take(5).cloned().collect();
            (false, format!("{} of {} checks failed: {}", self.failures.len(), self.checked, shown.join("; ")))
        }
    }
}

pub fn name(id: u8) -> &'static str {
    match id {
        1 => "SU(2) component counts",
        2 => "generating-tuple counts",
        3 => "freeness of conjugation",
        4 => "SO(3) and U(2) counts",
        5 => "stable summands",
        6 => "normalizers of quaternion groups",
        7 => "annihilator computations for B(3,Q16)",
        8 => "Hilbert functions of Bcom",
        9 => "nilpotent poset and amalgam",
        10 => "Groebner bases against linear algebra",
        _ => "unknown",
    }
}

/// Run one criterion. Unknown ids fail.
pub fn run(id: u8) -> Verdict {
    let start = Instant::now();
    let outcome = match id {
        1 => su2_counts(),
        2 => gen_counts(),
        3 => freeness(),
        4 => so3_u2_counts(),
        5 => summands(),
        6 => normalizers(),
        7 => b3q16_annihilators(),
        8 => bcom_hilbert(),
        9 => poset(),
        10 => oracle_equivalence(),
        _ => Ok((false, format!("no criterion {id}"))),
    };
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    let limit = match id {
        1 => Some(Duration::from_secs(60)),
        7 => Some(Duration::from_secs(5)),
        _ => None,
    };
    if let Some(limit) = limit.filter(|&l| elapsed > l) {
        passed = false;
        detail = format!("{detail}; took {elapsed:.2?}, limit {limit:?}");
    }
    Verdict {
        id,
        name: name(id),
        passed,
        detail,
        elapsed,
    }
}

pub fn run_all() -> Vec<Verdict> {
    CRITERIA.map(run).collect()
}

fn su2_counts() -> Result<(bool, String)> {
    let mut log = Log::default();
    for n in 1..=3 {
        for q in 2..=4 {
            let r = su2_component_count(n, q, Method::Both)?;
            log.eq(&format!("C({n},{}) agree", q + 1), r.agree, Some(true));
            log.eq(&format!("C({n},{}) total", q + 1), r.formula_total.as_ref(), Some(&r.total_nonabelian));
        }
    }
    for (n, q, want) in [(2, 2, 1), (2, 3, 7), (3, 2, 14)] {
        log.eq(&format!("C({n},{})", q + 1), c_formula(n, q)?, BigInt::from(want));
    }
    Ok(log.finish())
}

fn gen_counts() -> Result<(bool, String)> {
    let mut log = Log::default();
    for n in 1..=3 {
        for r in 3..=5 {
            log.eq(&format!("Gen({n},Q_2^{r})"), gen_formula(n, r)?, BigInt::from(gen_tuple_enumeration(n, r)?));
        }
    }
    log.eq("Gen(2,Q8)", gen_formula(2, 3)?, BigInt::from(24));
    log.eq("Gen(2,Q16)", gen_formula(2, 4)?, BigInt::from(96));
    Ok(log.finish())
}

fn freeness() -> Result<(bool, String)> {
    let mut log = Log::default();
    for n in 1..=3 {
        for r in 3..=5 {
            // errors out on any tuple with a non-central stabilizer
            let o = conjugation_orbit_count(n, r)?;
            let want = if r == 3 { 24 } else { 1u64 << r };
            log.eq(&format!("orbit size n={n} r={r}"), o.orbit_size, want);
            log.eq(&format!("orbits × size n={n} r={r}"), o.orbits * o.orbit_size, o.generating_tuples);
        }
    }
    Ok(log.finish())
}

fn so3_u2_counts() -> Result<(bool, String)> {
    let mut log = Log::default();
    for n in 2..=4 {
        for q in 2..=4 {
            let r = so3_component_count(n, q, Method::Both)?;
            log.eq(&format!("SO(3) n={n} q={q} agree"), r.agree, Some(true));
        }
    }
    for n in 1..=3 {
        for q in 2..=3 {
            for (is_q8, order) in stabilizer_census(n, q)? {
                let want = if is_q8 { 4 } else { 2 };
                log.check(order == want, || {
                    format!("n={n} q={q}: stabilizer of order {order}, expected {want}")
                });
            }
        }
    }
    Ok(log.finish())
}

fn summands() -> Result<(bool, String)> {
    let mut log = Log::default();
    for k in 1..=3 {
        for q in 2..=4 {
            for target in [Target::Su2, Target::So3] {
                let r = stable_summand_counts(k, q, target, Method::Both)?;
                log.eq(&format!("{target:?} k={k} q={q} agree"), r.agree, Some(true));
            }
        }
    }
    log.eq("K(1,3)", k_formula(1, 2)?, BigInt::from(0));
    log.eq("N(1)", n_formula(1)?, BigInt::from(0));
    Ok(log.finish())
}

fn normalizers() -> Result<(bool, String)> {
    let mut log = Log::default();
    let bo = binary_octahedral()?;
    log.eq("|BO|", bo.len(), 48);
    let closed = bo.iter().all(|a| bo.iter().all(|b| bo.binary_search(&a.mul(b)).is_ok()));
    log.check(closed, || "BO not closed under multiplication".into());
    let q8 = quaternion_group_elements(GroupId::quaternion(3)?)?;
    let q16 = quaternion_group_elements(GroupId::quaternion(4)?)?;
    log.check(bo.iter().all(|g| normalizes(g, &q8)), || "some element of BO does not normalize Q8".into());
    log.check(!normalizes(&octahedral_extra_generator(), &q16), || {
        "the extra generator normalizes Q16".into()
    });
    log.check(q16.iter().all(|g| normalizes(g, &q8)), || "Q16 does not normalize Q8 as quaternions".into());
    for m in 3..=5 {
        let small = GroupId::quaternion(m)?;
        let big = small.parent()?;
        let gens: Vec<_> = small.elements().map(|a| small.embed_into_parent(a)).collect();
        let h = generated_subgroup(big, &gens)?;
        log.eq(&format!("|Q_2^{m}| inside its parent"), h.order(), small.order());
        log.check(big.elements().all(|x| h.is_normalized_by(x)), || {
            format!("Q_2^{} does not normalize Q_2^{m}", m + 1)
        });
    }
    Ok(log.finish())
}

fn b3q16_annihilators() -> Result<(bool, String)> {
    let c = b3q16_check()?;
    let detail = format!(
        "ann(k) = ({}), ann(Sq1 k) in A/(k) = ({}), both inclusions {}, NF(d5) = {}",
        if c.ann_k.is_empty() { "0".to_string() } else { c.ann_k.join(", ") },
        c.ann_sq1k.join(", "),
        c.contains_y3 && c.contained_in_y3,
        c.d5_normal_form
    );
    Ok((c.passed, detail))
}

fn bcom_hilbert() -> Result<(bool, String)> {
    let mut log = Log::default();
    for n in 3..=6 {
        let p = bcom_presentation(n)?;
        let c = (1u64 << (n - 2)) + 1;
        let mut want = vec![c; 13];
        want[0] = 1;
        log.eq(&format!("n={n}"), hilbert_function(&p.ring, &p.relations, 12)?.dims, want);
    }
    Ok(log.finish())
}

fn poset() -> Result<(bool, String)> {
    let mut log = Log::default();
    for q in 2..=5 {
        let g = GroupId::quaternion(q + 1)?;
        for r in 2..=q {
            let p = nil_poset_report(g, r)?;
            let tag = format!("{g} r={r}");
            log.check(p.tree, || format!("{tag}: not a tree"));
            log.eq(&format!("{tag} maximals"), p.maximals.len(), 1 + (1usize << (q + 1 - r)));
            let want = SubgroupDescriptor::Cyclic(r - 1);
            log.check(
                p.intersections.len() == 1 && p.intersections[0].descriptor() == Some(want),
                || format!("{tag}: intersections {:?}", p.intersections.iter().map(|h| h.name()).collect::<Vec<_>>()),
            );
            let pairwise = p.maximals.iter().enumerate().all(|(i, a)| {
                p.maximals[i + 1..].iter().all(|b| a.intersection(b).descriptor() == Some(want))
            });
            log.check(pairwise, || format!("{tag}: some pair of maximals meets elsewhere"));
        }
    }
    let p = nil_poset_report(GroupId::quaternion(4)?, 3)?;
    log.eq("Q16 r=3 amalgam", p.amalgam.as_str(), "Q₈ ∗_{μ₄} Q₈ ∗_{μ₄} μ₈");
    Ok(log.finish())
}

/// Hilbert functions and annihilator dimensions of `base`, `base + (k)` and
/// the annihilators on the pages, by both routes, up to `max_degree`.
fn compare_datum(log: &mut Log, tag: &str, ext: &ExtensionDatum, max_degree: u32) -> Result<()> {
    let ring = ext.ring();
    let base = &ext.base.relations;
    let oracle = DegreeOracle::new(ring, base, max_degree)?;
    log.eq(&format!("{tag} H(A)"), hilbert_from_basis(&ext.base.basis(), max_degree).dims, oracle.hilbert());

    let e3 = e3_page(ext)?;
    log.eq(&format!("{tag} H(A/k)"), e3.quotient_dims(max_degree), {
        let mut gens = base.clone();
        gens.push(ext.k.clone());
        DegreeOracle::new(ring, &gens, max_degree)?.hilbert()
    });
    log.eq(&format!("{tag} ann(k)"), e3.annihilator_dims(max_degree - 2), oracle.annihilator_dims(&ext.k)?);

    if let Some(s) = ext.sq1_k.as_ref().filter(|s| !s.is_zero()) {
        let e4 = e4_page(ext)?;
        let mut gens = base.clone();
        gens.push(ext.k.clone());
        let a_prime = DegreeOracle::new(ring, &gens, max_degree)?;
        log.eq(&format!("{tag} ann_(A/k)(Sq1 k)"), e4.annihilator_dims(max_degree - 3), a_prime.annihilator_dims(s)?);
        gens.push(s.clone());
        log.eq(
            &format!("{tag} H(A/(k, Sq1 k))"),
            e4.quotient_dims(max_degree),
            DegreeOracle::new(ring, &gens, max_degree)?.hilbert(),
        );
    }
    Ok(())
}

fn oracle_equivalence() -> Result<(bool, String)> {
    let mut log = Log::default();
    compare_datum(&mut log, "bcom(4)", &bcom_extension(4)?, 8)?;
    let p = bcom_presentation(4)?;
    log.eq(
        "H(Bcom Q16)",
        hilbert_function(&p.ring, &p.relations, 8)?.dims,
        DegreeOracle::new(&p.ring, &p.relations, 8)?.hilbert(),
    );

    let b = b3q16_extension()?;
    compare_datum(&mut log, "B(3,Q16)", &b, 8)?;
    // annihilator of Sq1 k already in A
    let s: &BinaryPoly = b.sq1_k.as_ref().expect("datum has Sq1 k");
    let (_, gb_a, gb_colon) = crate::f2_groebner::colon_with_basis(b.ring(), &b.base.relations, s)?;
    let gb_dims: Vec<u64> = hilbert_from_basis(&gb_a, 5)
        .dims
        .iter()
        .zip(hilbert_from_basis(&gb_colon, 5).dims)
        .map(|(a, c)| a - c)
        .collect();
    log.eq(
        "B(3,Q16) ann_A(Sq1 k)",
        gb_dims,
        DegreeOracle::new(b.ring(), &b.base.relations, 8)?.annihilator_dims(s)?,
    );

    let e4 = e4_page(&b)?;
    log.eq("E4 Poincaré series", page_poincare_series(&e4, 10).dims, direct_page_dims(&b, 4, 10)?);
    Ok(log.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_criterion_fails() {
        let v = run(11);
        assert!(!v.passed);
        assert!(v.to_string().starts_with("FAIL criterion 11"));
    }

    #[test]
    fn cheap_criteria_pass() {
        for id in [2, 6, 7, 9] {
            let v = run(id);
            assert!(v.passed, "{v}");
        }
    }
}
