//! Counting nilpotent tuples up to conjugation.
//!
//! A non-commuting `n`-tuple in `Q_{2^{q+1}} ⊂ SU(2)` generates a copy of
//! some `Q_{2^{r+1}}`, `2 ≤ r ≤ q`. Tuples generating the standard copy form
//! `Gen(n, Q_{2^{r+1}})`, and their classes under the normalizer `N` (binary
//! octahedral for `Q_8`, `Q_{2^{r+2}}` otherwise) index components.
//!
//! Each count comes from a closed formula ([`formulas`]) and, independently,
//! from enumeration ([`census`]); [`Method::Both`] reports whether they agree.
//!
//! ```
//! use nilhom::hom_count::{conjugation_orbit_count, gen_tuple_count};
//!
//! assert_eq!(gen_tuple_count(2, 4).unwrap(), 96.into());
//! let orbits = conjugation_orbit_count(2, 4).unwrap();
//! assert_eq!((orbits.orbit_size, orbits.orbits), (16, 6));
//! ```

pub mod action;
pub mod census;
pub mod formulas;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub use action::NormalizerAction;
pub use census::{ambient_census, OrbitCensus, MAX_TUPLES};
pub use formulas::{
    c_formula, c_sum, effective_normalizer_order, gen_formula, k_formula, m_formula, m_q_formula,
    n_formula, n_q_formula, su2_orbits_formula,
};

use crate::error::{Error, Result};
use crate::quat_group::{GroupId, QuatElem};
use crate::subgroups::{generated_subgroup, SubgroupDescriptor};
use census::{check_tuple_space, generated_histogram, orbit_census, par_tuples, standardize};
use formulas::{check_n, check_q, divide_pow2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Formula,
    Enumeration,
    Both,
}

impl Method {
    pub fn uses_formula(self) -> bool {
        self != Method::Enumeration
    }

    pub fn uses_enumeration(self) -> bool {
        self != Method::Formula
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Formula => "formula",
            Method::Enumeration => "enumeration",
            Method::Both => "both",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formula" => Ok(Method::Formula),
            "enumeration" => Ok(Method::Enumeration),
            "both" => Ok(Method::Both),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown method `{s}`"),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Su2,
    So3,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Su2 => "su2",
            Target::So3 => "so3",
        })
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "su2" => Ok(Target::Su2),
            "so3" => Ok(Target::So3),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown target `{s}`"),
            }),
        }
    }
}

/// `Some(true)` when at least two values are present and all agree.
fn agreement<T: PartialEq>(values: &[Option<&T>]) -> Option<bool> {
    let present: Vec<&T> = values.iter().flatten().copied().collect();
    (present.len() >= 2).then(|| present.windows(2).all(|w| w[0] == w[1]))
}

/// `|Gen(n, Q_{2^r})|` from the closed formula.
pub fn gen_tuple_count(n: u32, r: u32) -> Result<BigInt> {
    gen_formula(n, r)
}

/// `|Gen(n, Q_{2^r})|` by closing every tuple of `Q_{2^r}^n`.
pub fn gen_tuple_enumeration(n: u32, r: u32) -> Result<u64> {
    check_n(n, 1)?;
    let g = GroupId::quaternion(r)?;
    let (lattice, hist) = generated_histogram(g, n)?;
    Ok(hist[lattice.whole()])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    pub n: u32,
    pub r: u32,
    pub normalizer: String,
    pub normalizer_order: u64,
    /// Size of every orbit, `|N|/2`.
    pub orbit_size: u64,
    pub generating_tuples: u64,
    pub orbits: u64,
}

/// Orbits of `Gen(n, Q_{2^r})` under conjugation by the normalizer.
///
/// Fails with [`Error::FreenessViolation`] if some tuple has a stabilizer
/// larger than the centre.
pub fn conjugation_orbit_count(n: u32, r: u32) -> Result<OrbitReport> {
    check_n(n, 1)?;
    let action = NormalizerAction::for_quaternion(r)?;
    let census = orbit_census(&action, n, |_| true)?;
    Ok(orbit_report(n, r, &action, &census))
}

fn orbit_report(n: u32, r: u32, action: &NormalizerAction, census: &OrbitCensus) -> OrbitReport {
    OrbitReport {
        n,
        r,
        normalizer: action.normalizer().to_string(),
        normalizer_order: action.normalizer_order(),
        orbit_size: action.effective_order() as u64,
        generating_tuples: census.tuples,
        orbits: census.representatives.len() as u64,
    }
}

/// Components of `Hom(Z^n, Q_{2^{q+1}})`-type tuples in `SU(2)`, by class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleClassReport {
    pub n: u32,
    pub q: u32,
    pub method: Method,
    pub abelian_components: u32,
    /// `r ↦` number of components whose tuples generate a `Q_{2^{r+1}}`.
    pub per_r: BTreeMap<u32, BigInt>,
    pub total_nonabelian: BigInt,
    /// `C(n, q+1)` from the closed form, when the formula was used.
    pub formula_total: Option<BigInt>,
    pub agree: Option<bool>,
}

/// Per-`r` counts from the formula, checked against the closed form.
fn su2_formula_per_r(n: u32, q: u32) -> Result<(BTreeMap<u32, BigInt>, BigInt)> {
    let per_r = (2..=q)
        .map(|r| Ok((r, su2_orbits_formula(n, r + 1)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let closed = c_formula(n, q)?;
    let sum: BigInt = per_r.values().sum();
    if sum != closed {
        return Err(Error::InvariantViolation(format!(
            "C({n},{}) closed form {closed} differs from sum {sum}",
            q + 1
        )));
    }
    Ok((per_r, closed))
}

pub fn su2_component_count(n: u32, q: u32, method: Method) -> Result<TupleClassReport> {
    check_n(n, 1)?;
    check_q(q)?;
    let formula = method.uses_formula().then(|| su2_formula_per_r(n, q)).transpose()?;
    let enumerated = method
        .uses_enumeration()
        .then(|| -> Result<BTreeMap<u32, BigInt>> {
            Ok(ambient_census(n, q)?
                .into_iter()
                .map(|(r, c)| (r, BigInt::from(c)))
                .collect())
        })
        .transpose()?;
    let agree = match (&formula, &enumerated) {
        (Some((f, _)), Some(e)) => Some(f == e),
        _ => None,
    };
    let per_r = enumerated
        .or_else(|| formula.as_ref().map(|(f, _)| f.clone()))
        .expect("some method ran");
    Ok(TupleClassReport {
        n,
        q,
        method,
        abelian_components: 1,
        total_nonabelian: per_r.values().sum(),
        per_r,
        formula_total: formula.map(|(_, c)| c),
        agree,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct So3Counts {
    /// `M(n)`: classes generating `Z/2 × Z/2`.
    pub m: BigInt,
    /// `M(n, q)`: classes generating a dihedral group of order `≥ 8`.
    pub m_q: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct So3Report {
    pub n: u32,
    pub q: u32,
    pub method: Method,
    pub formula: Option<So3Counts>,
    /// `SU(2)` counts pushed down the double cover: the `Q_8` part divided by
    /// `2^{n-2}`, the rest by `2^{n-1}`.
    pub covering: So3Counts,
    /// Orbits of generating tuples of `D(r) = Q_{2^{r+1}}/{±I}` under the
    /// `SO(3)` normalizer (octahedral for `r = 2`, `D(r+1)` beyond).
    pub enumeration: Option<So3Counts>,
    pub agree: Option<bool>,
}

fn covering_division(per_r: &BTreeMap<u32, BigInt>, n: u32) -> Result<So3Counts> {
    let q8 = per_r.get(&2).cloned().unwrap_or_default();
    let rest: BigInt = per_r.iter().filter(|(&r, _)| r >= 3).map(|(_, c)| c).sum();
    Ok(So3Counts {
        m: divide_pow2(&q8, n as i64 - 2, "C(n,3) / 2^{n-2}")?,
        m_q: divide_pow2(&rest, n as i64 - 1, "(C(n,q+1) - C(n,3)) / 2^{n-1}")?,
    })
}

fn dihedral_orbits(n: u32, r: u32) -> Result<u64> {
    let action = NormalizerAction::for_dihedral(r)?;
    Ok(orbit_census(&action, n, |_| true)?.representatives.len() as u64)
}

pub fn so3_component_count(n: u32, q: u32, method: Method) -> Result<So3Report> {
    check_n(n, 2)?;
    check_q(q)?;
    let formula = method
        .uses_formula()
        .then(|| -> Result<So3Counts> {
            Ok(So3Counts {
                m: m_formula(n)?,
                m_q: m_q_formula(n, q)?,
            })
        })
        .transpose()?;
    let su2_per_r = if method.uses_enumeration() {
        (2..=q)
            .map(|r| Ok((r, BigInt::from(conjugation_orbit_count(n, r + 1)?.orbits))))
            .collect::<Result<BTreeMap<_, _>>>()?
    } else {
        su2_formula_per_r(n, q)?.0
    };
    let covering = covering_division(&su2_per_r, n)?;
    let enumeration = method
        .uses_enumeration()
        .then(|| -> Result<So3Counts> {
            let mut m_q = BigInt::zero();
            for r in 3..=q {
                m_q += dihedral_orbits(n, r)?;
            }
            Ok(So3Counts {
                m: dihedral_orbits(n, 2)?.into(),
                m_q,
            })
        })
        .transpose()?;
    let agree = agreement(&[formula.as_ref(), Some(&covering), enumeration.as_ref()]);
    Ok(So3Report {
        n,
        q,
        method,
        formula,
        covering,
        enumeration,
        agree,
    })
}

/// Sign vectors `ε ∈ {±1}^n` with `(ε_i x_i)` conjugate to `(x_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerReport {
    pub generated: SubgroupDescriptor,
    pub signs: Vec<Vec<i8>>,
    pub order: usize,
}

pub fn u2_stabilizer(g: GroupId, tuple: &[QuatElem]) -> Result<StabilizerReport> {
    let h = generated_subgroup(g, tuple)?;
    let desc = h
        .descriptor()
        .ok_or_else(|| Error::MismatchedGroup {
            expected: "a quaternion group".into(),
            found: g.to_string(),
        })?;
    let Some((r, target, map)) = standardize(g, desc) else {
        return Err(Error::Precondition(format!(
            "tuple generates the abelian subgroup {desc}"
        )));
    };
    let action = NormalizerAction::for_quaternion(r + 1)?;
    let t: Vec<u8> = tuple.iter().map(|&x| map[g.index_of(x)]).collect();
    let mut report = stabilizer_of(&action, target, &t);
    report.generated = desc;
    Ok(report)
}

fn stabilizer_of(action: &NormalizerAction, target: GroupId, t: &[u8]) -> StabilizerReport {
    let minus = target.minus_one().expect("quaternion");
    let n = t.len();
    let mut signs = Vec::new();
    for mask in 0u32..1 << n {
        let et: Vec<u8> = t
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                if mask >> i & 1 == 1 {
                    target.index_of(target.mul(minus, target.element_at(x as usize))) as u8
                } else {
                    x
                }
            })
            .collect();
        if action.related(t, &et) {
            signs.push((0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect());
        }
    }
    signs.sort();
    StabilizerReport {
        generated: SubgroupDescriptor::QuatLike {
            r: target.m() - 1,
            p: 0,
        },
        order: signs.len(),
        signs,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct U2Counts {
    /// Components of type `(S¹)ⁿ ×_{(Z/2)²} PU(2)`.
    pub klein_stabilizer: BigInt,
    /// Components of type `(S¹)ⁿ ×_{Z/2} PU(2)`.
    pub z2_stabilizer: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct U2Report {
    pub n: u32,
    pub q: u32,
    pub method: Method,
    pub abelian_components: u32,
    pub formula: Option<U2Counts>,
    /// Each `SU(2)` class with sign stabilizer `S` contributes `|S| / 2^n`.
    pub enumeration: Option<U2Counts>,
    pub agree: Option<bool>,
}

pub fn u2_component_count(n: u32, q: u32, method: Method) -> Result<U2Report> {
    check_n(n, 1)?;
    check_q(q)?;
    let formula = method
        .uses_formula()
        .then(|| -> Result<U2Counts> {
            Ok(U2Counts {
                klein_stabilizer: m_formula(n)?,
                z2_stabilizer: m_q_formula(n, q)?,
            })
        })
        .transpose()?;
    let enumeration = method
        .uses_enumeration()
        .then(|| -> Result<U2Counts> {
            let mut klein = BigRational::zero();
            let mut z2 = BigRational::zero();
            let scale = formulas::pow2(-(n as i64));
            for r in 2..=q {
                let action = NormalizerAction::for_quaternion(r + 1)?;
                let census = orbit_census(&action, n, |_| true)?;
                for t in &census.representatives {
                    let s = stabilizer_of(&action, action.group(), t);
                    let share = BigRational::from_integer(s.order.into()) * &scale;
                    let expected = if r == 2 { 4 } else { 2 };
                    if s.order != expected {
                        return Err(Error::InvariantViolation(format!(
                            "sign stabilizer of order {} in Q_2^{}",
                            s.order,
                            r + 1
                        )));
                    }
                    if r == 2 {
                        klein += share;
                    } else {
                        z2 += share;
                    }
                }
            }
            Ok(U2Counts {
                klein_stabilizer: formulas::exact(klein, "U(2) Q8-type count")?,
                z2_stabilizer: formulas::exact(z2, "U(2) count")?,
            })
        })
        .transpose()?;
    let agree = agreement(&[formula.as_ref(), enumeration.as_ref()]);
    Ok(U2Report {
        n,
        q,
        method,
        abelian_components: 1,
        formula,
        enumeration,
        agree,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableSummandReport {
    pub k: u32,
    pub q: u32,
    pub target: Target,
    pub method: Method,
    /// `K(k,q+1)` for `SU(2)`; `N(k)` and `N(k,q)` for `SO(3)`.
    pub formula: Option<BTreeMap<String, BigInt>>,
    pub enumeration: Option<BTreeMap<String, BigInt>>,
    pub agree: Option<bool>,
}

pub const SUMMAND_K: &str = "K(k,q+1)";
pub const SUMMAND_N: &str = "N(k)";
pub const SUMMAND_N_Q: &str = "N(k,q)";

/// Orbits of generating tuples of `Q_{2^r}` avoiding the given elements.
fn avoiding_orbits(k: u32, r: u32, avoid: &[QuatElem]) -> Result<BigInt> {
    let action = NormalizerAction::for_quaternion(r)?;
    let g = action.group();
    let avoid: Vec<u8> = avoid.iter().map(|&a| g.index_of(a) as u8).collect();
    let census = orbit_census(&action, k, |t| t.iter().all(|x| !avoid.contains(x)))?;
    Ok(BigInt::from(census.representatives.len()))
}

fn identity_and_minus(r: u32) -> Result<Vec<QuatElem>> {
    let g = GroupId::quaternion(r)?;
    Ok(vec![g.identity(), g.minus_one().expect("quaternion")])
}

pub fn stable_summand_counts(k: u32, q: u32, target: Target, method: Method) -> Result<StableSummandReport> {
    check_n(k, 1)?;
    check_q(q)?;
    let formula = method
        .uses_formula()
        .then(|| -> Result<BTreeMap<String, BigInt>> {
            Ok(match target {
                Target::Su2 => BTreeMap::from([(SUMMAND_K.to_string(), k_formula(k, q)?)]),
                Target::So3 => BTreeMap::from([
                    (SUMMAND_N.to_string(), n_formula(k)?),
                    (SUMMAND_N_Q.to_string(), n_q_formula(k, q)?),
                ]),
            })
        })
        .transpose()?;
    let enumeration = method
        .uses_enumeration()
        .then(|| -> Result<BTreeMap<String, BigInt>> {
            Ok(match target {
                Target::Su2 => {
                    let mut total = BigInt::zero();
                    for r in 3..=q + 1 {
                        total += avoiding_orbits(k, r, &[QuatElem::IDENTITY])?;
                    }
                    BTreeMap::from([(SUMMAND_K.to_string(), total)])
                }
                Target::So3 => {
                    let q8 = avoiding_orbits(k, 3, &identity_and_minus(3)?)?;
                    let mut rest = BigInt::zero();
                    for r in 3..=q {
                        rest += avoiding_orbits(k, r + 1, &identity_and_minus(r + 1)?)?;
                    }
                    BTreeMap::from([
                        (SUMMAND_N.to_string(), divide_pow2(&q8, k as i64 - 2, "N(k) covering")?),
                        (SUMMAND_N_Q.to_string(), divide_pow2(&rest, k as i64 - 1, "N(k,q) covering")?),
                    ])
                }
            })
        })
        .transpose()?;
    let agree = agreement(&[formula.as_ref(), enumeration.as_ref()]);
    Ok(StableSummandReport {
        k,
        q,
        target,
        method,
        formula,
        enumeration,
        agree,
    })
}

/// `|G|^n = #commuting + Σ_H |Gen(n, H)|` over non-abelian subgroups `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionCheck {
    pub n: u32,
    pub q: u32,
    pub total: BigInt,
    pub commuting: u64,
    /// `(H, tuples generating H, |Gen(n, Q_{|H|})| from the formula)`.
    pub by_subgroup: Vec<(SubgroupDescriptor, u64, BigInt)>,
    pub holds: bool,
}

pub fn partition_identity(n: u32, q: u32) -> Result<PartitionCheck> {
    check_n(n, 1)?;
    check_q(q)?;
    let g = GroupId::quaternion(q + 1)?;
    let (lattice, hist) = generated_histogram(g, n)?;
    let mut commuting = 0;
    let mut by_subgroup = Vec::new();
    for (s, &count) in hist.iter().enumerate() {
        if lattice.is_abelian(s) {
            commuting += count;
            continue;
        }
        let desc = lattice.subgroup(s).descriptor().expect("quaternion ambient");
        let SubgroupDescriptor::QuatLike { r, .. } = desc else {
            unreachable!("non-abelian subgroups are quaternion-like")
        };
        by_subgroup.push((desc, count, gen_formula(n, r + 1)?));
    }
    by_subgroup.sort();
    let total = BigInt::from(g.order()).pow(n);
    let formula_sum: BigInt = by_subgroup.iter().map(|(_, _, f)| f).sum();
    let holds = by_subgroup.iter().all(|(_, c, f)| BigInt::from(*c) == *f)
        && BigInt::from(commuting) + formula_sum == total;
    Ok(PartitionCheck {
        n,
        q,
        total,
        commuting,
        by_subgroup,
        holds,
    })
}

/// Every non-commuting tuple of `Q_{2^{q+1}}^n`, with its sign-stabilizer
/// order and whether it generates a copy of `Q_8`.
pub fn stabilizer_census(n: u32, q: u32) -> Result<Vec<(bool, usize)>> {
    check_n(n, 1)?;
    check_q(q)?;
    let g = GroupId::quaternion(q + 1)?;
    check_tuple_space(g, n)?;
    let lattice = crate::subgroups::SubgroupLattice::new(g)?;
    let prepared: Vec<Option<(u32, GroupId, Vec<u8>)>> = (0..lattice.len())
        .map(|s| {
            if lattice.is_abelian(s) {
                None
            } else {
                standardize(g, lattice.subgroup(s).descriptor()?)
            }
        })
        .collect();
    let actions = (2..=q)
        .map(|r| NormalizerAction::for_quaternion(r + 1))
        .collect::<Result<Vec<_>>>()?;
    let mut out = par_tuples(
        g.order() as usize,
        n as usize,
        Vec::new,
        |acc: &mut Vec<(bool, usize)>, t| {
            let s = census::generated(&lattice, t);
            if let Some((r, target, map)) = &prepared[s] {
                let st: Vec<u8> = t.iter().map(|&x| map[x as usize]).collect();
                let report = stabilizer_of(&actions[*r as usize - 2], *target, &st);
                acc.push((*r == 2, report.order));
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn e(eps: u8, k: u64) -> QuatElem {
        QuatElem::new(eps, k)
    }

    #[test]
    fn gen_counts_agree() {
        assert_eq!(gen_tuple_enumeration(2, 3).unwrap(), 24);
        assert_eq!(gen_tuple_enumeration(1, 3).unwrap(), 0);
        assert_eq!(gen_tuple_enumeration(2, 4).unwrap(), 96);
        for n in 1..=3 {
            for r in 3..=5 {
                assert_eq!(b(gen_tuple_enumeration(n, r).unwrap() as i64), gen_tuple_count(n, r).unwrap());
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let o = conjugation_orbit_count(2, 3).unwrap();
        assert_eq!((o.generating_tuples, o.orbit_size, o.orbits), (24, 24, 1));
        let o = conjugation_orbit_count(2, 4).unwrap();
        assert_eq!((o.generating_tuples, o.orbit_size, o.orbits), (96, 16, 6));
        let o = conjugation_orbit_count(3, 3).unwrap();
        assert_eq!(o.orbits, 14);
    }

    #[test]
    fn su2_examples() {
        let r = su2_component_count(2, 2, Method::Both).unwrap();
        assert_eq!(r.total_nonabelian, b(1));
        let r = su2_component_count(2, 3, Method::Both).unwrap();
        assert_eq!(r.total_nonabelian, b(7));
        assert_eq!(r.per_r, BTreeMap::from([(2, b(1)), (3, b(6))]));
        assert_eq!(r.agree, Some(true));
        let r = su2_component_count(3, 2, Method::Enumeration).unwrap();
        assert_eq!(r.total_nonabelian, b(14));
        assert_eq!(r.agree, None);
        assert!(su2_component_count(0, 2, Method::Formula).is_err());
        assert!(su2_component_count(2, 1, Method::Formula).is_err());
    }

    #[test]
    fn so3_examples() {
        let r = so3_component_count(2, 2, Method::Both).unwrap();
        assert_eq!(r.covering, So3Counts { m: b(1), m_q: b(0) });
        assert_eq!(r.agree, Some(true));
        let r = so3_component_count(2, 3, Method::Both).unwrap();
        assert_eq!(r.enumeration.unwrap().m_q, b(3));
        assert_eq!(r.agree, Some(true));
        assert_eq!(so3_component_count(3, 2, Method::Formula).unwrap().covering.m, b(7));
        assert!(so3_component_count(1, 2, Method::Formula).is_err());
    }

    #[test]
    fn u2_examples() {
        let r = u2_component_count(2, 2, Method::Both).unwrap();
        assert_eq!(r.enumeration.as_ref().unwrap().klein_stabilizer, b(1));
        assert_eq!(r.enumeration.as_ref().unwrap().z2_stabilizer, b(0));
        assert_eq!(r.agree, Some(true));
        let r = u2_component_count(2, 3, Method::Both).unwrap();
        assert_eq!(
            r.enumeration.unwrap(),
            U2Counts {
                klein_stabilizer: b(1),
                z2_stabilizer: b(3)
            }
        );
        let r = u2_component_count(1, 4, Method::Both).unwrap();
        assert_eq!(r.abelian_components, 1);
        assert_eq!(r.formula.unwrap().klein_stabilizer, b(0));
        assert_eq!(r.agree, Some(true));
    }

    #[test]
    fn stabilizer_examples() {
        let q8 = GroupId::quaternion(3).unwrap();
        let q16 = GroupId::quaternion(4).unwrap();
        assert_eq!(u2_stabilizer(q8, &[e(0, 1), e(1, 0)]).unwrap().order, 4);
        let s = u2_stabilizer(q16, &[e(0, 1), e(1, 0)]).unwrap();
        assert_eq!(s.order, 2);
        assert_eq!(s.signs, vec![vec![1, -1], vec![1, 1]]);
        assert!(matches!(
            u2_stabilizer(q16, &[e(0, 2), e(0, 1)]),
            Err(Error::Precondition(_))
        ));
        // a Q8 sitting inside Q16 still has the larger stabilizer
        let s = u2_stabilizer(q16, &[e(0, 2), e(1, 1)]).unwrap();
        assert_eq!(s.generated, SubgroupDescriptor::QuatLike { r: 2, p: 1 });
        assert_eq!(s.order, 4);
    }

    #[test]
    fn summand_examples() {
        let r = stable_summand_counts(2, 2, Target::Su2, Method::Both).unwrap();
        assert_eq!(r.enumeration.as_ref().unwrap()[SUMMAND_K], b(1));
        assert_eq!(r.agree, Some(true));
        let r = stable_summand_counts(1, 2, Target::Su2, Method::Both).unwrap();
        assert_eq!(r.formula.as_ref().unwrap()[SUMMAND_K], b(0));
        assert_eq!(r.agree, Some(true));
        let r = stable_summand_counts(2, 2, Target::So3, Method::Both).unwrap();
        assert_eq!(r.formula.as_ref().unwrap()[SUMMAND_N], b(1));
        assert_eq!(r.agree, Some(true));
    }

    #[test]
    fn partition_identity_small() {
        for n in 1..=3 {
            for q in 2..=3 {
                let p = partition_identity(n, q).unwrap();
                assert!(p.holds, "{p:?}");
            }
        }
    }

    #[test]
    fn method_and_target_parse() {
        assert_eq!("both".parse::<Method>().unwrap(), Method::Both);
        assert_eq!("SO3".parse::<Target>().unwrap(), Target::So3);
        assert!("nope".parse::<Method>().is_err());
        assert_eq!(Method::Enumeration.to_string(), "enumeration");
    }
}
