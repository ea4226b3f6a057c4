//! Brute-force enumeration over tuple spaces.
//!
//! Tuples are element-index vectors in lexicographic `(eps, k)` order. The
//! first coordinate is split across rayon workers and partial results are
//! merged with commutative reducers, so output never depends on scheduling.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use super::action::NormalizerAction;
use crate::error::{Error, Result};
use crate::quat_group::{GroupId, QuatElem};
use crate::subgroups::{SubgroupDescriptor, SubgroupLattice};

/// Largest tuple space any enumeration will walk.
pub const MAX_TUPLES: u128 = 1 << 28;

pub(crate) fn check_tuple_space(g: GroupId, n: u32) -> Result<()> {
    match (g.order() as u128).checked_pow(n) {
        Some(t) if t <= MAX_TUPLES => Ok(()),
        _ => Err(Error::OutOfRange(format!(
            "enumerating {g}^{n} exceeds the limit of {MAX_TUPLES} tuples"
        ))),
    }
}

/// Fold over every `n`-tuple of `0..order`.
pub(crate) fn par_tuples<A, I, S, M>(order: usize, n: usize, init: I, step: S, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    S: Fn(&mut A, &[u8]) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    assert!(n >= 1 && order <= 256);
    (0..order)
        .into_par_iter()
        .map(|first| {
            let mut acc = init();
            let mut t = vec![0u8; n];
            t[0] = first as u8;
            loop {
                step(&mut acc, &t);
                let mut i = n;
                loop {
                    i -= 1;
                    if i == 0 {
                        return acc;
                    }
                    if (t[i] as usize) + 1 < order {
                        t[i] += 1;
                        break;
                    }
                    t[i] = 0;
                }
            }
        })
        .reduce(&init, &merge)
}

pub(crate) fn generated(lattice: &SubgroupLattice, t: &[u8]) -> usize {
    t.iter().fold(lattice.trivial(), |s, &x| lattice.join(s, x as usize))
}

/// Generating tuples of `action.group()` passing `admissible`, split into
/// conjugation orbits. Every orbit must be free.
#[derive(Clone, Debug, Default)]
pub struct OrbitCensus {
    pub tuples: u64,
    /// Lexicographic minimum of each orbit, sorted.
    pub representatives: Vec<Vec<u8>>,
}

pub(crate) fn orbit_census<F>(action: &NormalizerAction, n: u32, admissible: F) -> Result<OrbitCensus>
where
    F: Fn(&[u8]) -> bool + Sync + Send,
{
    let g = action.group();
    check_tuple_space(g, n)?;
    let lattice = SubgroupLattice::new(g)?;
    let whole = lattice.whole();

    type Acc = (u64, Vec<Vec<u8>>, Option<usize>);
    let (tuples, mut representatives, bad_stab) = par_tuples(
        g.order() as usize,
        n as usize,
        || -> Acc { (0, Vec::new(), None) },
        |acc, t| {
            if generated(&lattice, t) != whole || !admissible(t) {
                return;
            }
            acc.0 += 1;
            let (is_min, stab) = action.inspect(t);
            if stab != 1 && acc.2.is_none() {
                acc.2 = Some(stab);
            }
            if is_min {
                acc.1.push(t.to_vec());
            }
        },
        |mut a, b| {
            a.0 += b.0;
            a.1.extend(b.1);
            a.2 = a.2.or(b.2);
            a
        },
    );
    if let Some(stab) = bad_stab {
        let expected = action.effective_order();
        return Err(Error::FreenessViolation {
            expected,
            found: expected / stab,
        });
    }
    representatives.sort();
    Ok(OrbitCensus {
        tuples,
        representatives,
    })
}

/// For a quaternion-type subgroup `μ_{2^r} ∪ wξ^p μ_{2^r}` of `Q_{2^{q+1}}`,
/// the index map onto the standard `Q_{2^{r+1}}`:
/// `ξ^k ↦ ξ^{k/d}`, `wξ^k ↦ wξ^{(k-p)/d}` with `d = 2^{q-r}`.
///
/// This is conjugation by a torus element, so it is an isomorphism onto the
/// standard copy (checked in tests against `T ∪ wT` arithmetic).
pub(crate) fn standardize(ambient: GroupId, desc: SubgroupDescriptor) -> Option<(u32, GroupId, Vec<u8>)> {
    let SubgroupDescriptor::QuatLike { r, p } = desc else {
        return None;
    };
    let target = GroupId::quaternion(r + 1).ok()?;
    let n = ambient.modulus();
    let d = n >> r;
    let map = ambient
        .elements()
        .map(|x| {
            let k = if x.eps == 0 { x.k } else { (x.k + n - p) % n };
            if k % d == 0 {
                let y = QuatElem::new(x.eps, k / d);
                target.index_of(y) as u8
            } else {
                u8::MAX
            }
        })
        .collect();
    Some((r, target, map))
}

/// Distinct conjugacy classes of non-commuting tuples in `Q_{2^{q+1}}^n`,
/// bucketed by the class `r` of the generated `Q_{2^{r+1}}`.
///
/// Each tuple is moved onto the standard `Q_{2^{r+1}}` and reduced to its
/// orbit minimum under the normalizer; distinct minima are counted.
pub fn ambient_census(n: u32, q: u32) -> Result<BTreeMap<u32, u64>> {
    let g = GroupId::quaternion(q + 1)?;
    check_tuple_space(g, n)?;
    let lattice = SubgroupLattice::new(g)?;
    let std_maps: Vec<Option<(u32, Vec<u8>)>> = (0..lattice.len())
        .map(|s| {
            if lattice.is_abelian(s) {
                return None;
            }
            let desc = lattice.subgroup(s).descriptor()?;
            standardize(g, desc).map(|(r, _, m)| (r, m))
        })
        .collect();
    let actions = (2..=q)
        .map(|r| NormalizerAction::for_quaternion(r + 1))
        .collect::<Result<Vec<_>>>()?;

    let buckets = par_tuples(
        g.order() as usize,
        n as usize,
        || vec![HashSet::<Vec<u8>>::new(); q as usize - 1],
        |acc, t| {
            let s = generated(&lattice, t);
            if let Some((r, map)) = &std_maps[s] {
                let i = *r as usize - 2;
                let st: Vec<u8> = t.iter().map(|&x| map[x as usize]).collect();
                acc[i].insert(actions[i].canonical(&st));
            }
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                if x.len() < y.len() {
                    let small = std::mem::replace(x, y);
                    x.extend(small);
                } else {
                    x.extend(y);
                }
            }
            a
        },
    );
    Ok(buckets
        .into_iter()
        .enumerate()
        .map(|(i, b)| (i as u32 + 2, b.len() as u64))
        .collect())
}

/// Tuple counts in `G^n` bucketed by generated subgroup (lattice index).
pub(crate) fn generated_histogram(g: GroupId, n: u32) -> Result<(SubgroupLattice, Vec<u64>)> {
    check_tuple_space(g, n)?;
    let lattice = SubgroupLattice::new(g)?;
    let len = lattice.len();
    let counts = par_tuples(
        g.order() as usize,
        n as usize,
        || vec![0u64; len],
        |acc, t| acc[generated(&lattice, t)] += 1,
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    Ok((lattice, counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::su2_exact::{circle_conjugate, embed_quaternion_group, CircleElem};
    use crate::subgroups::all_subgroups;
    use num_rational::Rational64;

    #[test]
    fn par_tuples_visits_every_tuple_once() {
        let seen = par_tuples(
            5,
            3,
            Vec::new,
            |acc: &mut Vec<Vec<u8>>, t| acc.push(t.to_vec()),
            |mut a, b| {
                a.extend(b);
                a
            },
        );
        assert_eq!(seen.len(), 125);
        let set: HashSet<_> = seen.iter().collect();
        assert_eq!(set.len(), 125);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
    }

    /// The index map agrees with honest conjugation by a torus element of `SU(2)`.
    #[test]
    fn standardization_is_a_torus_conjugation() {
        for m in 3..=6 {
            let g = GroupId::quaternion(m).unwrap();
            for h in all_subgroups(g).unwrap() {
                let Some((_, target, map)) = standardize(g, h.descriptor().unwrap()) else {
                    continue;
                };
                let steps = 4 * g.modulus() as i64;
                let found = (0..steps).any(|j| {
                    let t = CircleElem::torus(Rational64::new(j, steps));
                    h.elements().iter().all(|&x| {
                        let conj = circle_conjugate(&embed_quaternion_group(g, x).unwrap(), &t);
                        let y = target.element_at(map[g.index_of(x)] as usize);
                        conj == embed_quaternion_group(target, y).unwrap()
                    })
                });
                assert!(found, "no torus conjugator for {h} in {g}");
            }
        }
    }

    #[test]
    fn standardized_subgroup_is_whole_target() {
        let g = GroupId::quaternion(5).unwrap();
        for h in all_subgroups(g).unwrap() {
            if let Some((_, target, map)) = standardize(g, h.descriptor().unwrap()) {
                let mut imgs: Vec<u8> = h.elements().iter().map(|&x| map[g.index_of(x)]).collect();
                imgs.sort();
                let all: Vec<u8> = (0..target.order() as u8).collect();
                assert_eq!(imgs, all);
            }
        }
    }

    #[test]
    fn tuple_space_limit() {
        let g = GroupId::quaternion(7).unwrap();
        assert!(check_tuple_space(g, 3).is_ok());
        assert!(check_tuple_space(g, 5).is_err());
    }
}
