//! Conjugation by a normalizer, as permutations of element indices.
//!
//! Only the distinct permutations are kept, so the centre (which acts
//! trivially) is already factored out: the effective group has `|N|/2`
//! elements in every case used here.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::quat_group::{project_to_dihedral, GroupId, QuatElem};
use crate::su2_exact::{binary_octahedral, quaternion_group_elements, ExtQuaternion};
use crate::subgroups::MAX_AMBIENT_ORDER;

#[derive(Clone, Debug)]
pub struct NormalizerAction {
    group: GroupId,
    normalizer: String,
    normalizer_order: u64,
    perms: Vec<Vec<u8>>,
}

fn too_large(g: GroupId) -> Error {
    Error::GroupTooLarge {
        ambient: g.to_string(),
        order: g.order(),
    }
}

impl NormalizerAction {
    fn build(
        group: GroupId,
        normalizer: String,
        normalizer_order: u64,
        perms: impl IntoIterator<Item = Vec<u8>>,
    ) -> Result<Self> {
        let perms: Vec<_> = perms.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if perms.len() as u64 * 2 != normalizer_order {
            return Err(Error::InvariantViolation(format!(
                "{normalizer} induces {} permutations of {group}, expected {}",
                perms.len(),
                normalizer_order / 2
            )));
        }
        Ok(NormalizerAction {
            group,
            normalizer,
            normalizer_order,
            perms,
        })
    }

    /// Conjugation by the `SU(2)` normalizer of `Q_{2^r}`: the binary
    /// octahedral group for `r = 3`, `Q_{2^{r+1}}` for `r ≥ 4`.
    pub fn for_quaternion(r: u32) -> Result<Self> {
        let g = GroupId::quaternion(r)?;
        if g.order() > MAX_AMBIENT_ORDER {
            return Err(too_large(g));
        }
        if r == 3 {
            let elems = quaternion_group_elements(g)?;
            let index: HashMap<&ExtQuaternion, u8> =
                elems.iter().enumerate().map(|(i, x)| (x, i as u8)).collect();
            let mut perms = Vec::new();
            for c in binary_octahedral()? {
                let perm = elems
                    .iter()
                    .map(|x| {
                        index.get(&x.conjugate(&c)).copied().ok_or_else(|| {
                            Error::InvariantViolation(format!("{c} does not normalize Q8"))
                        })
                    })
                    .collect::<Result<Vec<u8>>>()?;
                perms.push(perm);
            }
            return Self::build(g, "binary octahedral".into(), 48, perms);
        }
        Self::by_parent(g)
    }

    /// `Aut(Q_8)` built abstractly: `i ↦ a`, `w ↦ b` for each generating pair
    /// of order-4 elements. Used to cross-check the octahedral action.
    pub fn abstract_q8() -> Result<Self> {
        let g = GroupId::quaternion(3)?;
        let order4: Vec<QuatElem> = g.elements().filter(|&x| g.element_order(x) == 4).collect();
        let mut perms = Vec::new();
        for &a in &order4 {
            for &b in &order4 {
                if b == a || b == g.inv(a) {
                    continue;
                }
                // w^e ξ^k ↦ b^e a^k
                let phi = |x: QuatElem| g.mul(g.pow(b, x.eps as u64), g.pow(a, x.k));
                let hom = g
                    .elements()
                    .all(|x| g.elements().all(|y| phi(g.mul(x, y)) == g.mul(phi(x), phi(y))));
                if hom {
                    perms.push(g.elements().map(|x| g.index_of(phi(x)) as u8).collect());
                }
            }
        }
        if perms.len() != 24 {
            return Err(Error::InvariantViolation(format!(
                "found {} automorphisms of Q8",
                perms.len()
            )));
        }
        // Inner automorphisms come from Q8 itself; the full group plays the
        // role of the 48-element normalizer modulo its centre.
        Self::build(g, "Aut(Q8)".into(), 48, perms)
    }

    /// Conjugation of `D(r) = Q_{2^{r+1}}/{±I}` by its `SO(3)` normalizer:
    /// the octahedral group for `r = 2`, `D(r+1)` for `r ≥ 3`.
    pub fn for_dihedral(r: u32) -> Result<Self> {
        let d = GroupId::dihedral(r)?;
        if d.order() > MAX_AMBIENT_ORDER {
            return Err(too_large(d));
        }
        match r {
            0 | 1 => Err(Error::OutOfRange(format!(
                "{d} is cyclic; no non-abelian tuples"
            ))),
            2 => {
                let q8 = GroupId::quaternion(3)?;
                let bo = Self::for_quaternion(3)?;
                let mut perms = Vec::new();
                for p in &bo.perms {
                    let perm = d
                        .elements()
                        .map(|v| {
                            let lifted = q8.element_at(p[q8.index_of(v)] as usize);
                            let (_, image) = project_to_dihedral(q8, lifted)?;
                            Ok(d.index_of(image) as u8)
                        })
                        .collect::<Result<Vec<u8>>>()?;
                    perms.push(perm);
                }
                // BO / {±1} is the octahedral group of order 24; V4 is its
                // kernel on V4, leaving S3 = 24 / 4 distinct permutations.
                let perms: BTreeSet<Vec<u8>> = perms.into_iter().collect();
                if perms.len() != 6 {
                    return Err(Error::InvariantViolation(format!(
                        "octahedral group induces {} permutations of V4",
                        perms.len()
                    )));
                }
                Ok(NormalizerAction {
                    group: d,
                    normalizer: "octahedral".into(),
                    normalizer_order: 24,
                    perms: perms.into_iter().collect(),
                })
            }
            _ => Self::by_parent(d),
        }
    }

    /// Conjugation by the next group up via `ξ^k ↦ ξ^{2k}`.
    fn by_parent(g: GroupId) -> Result<Self> {
        let parent = g.parent()?;
        let mut perms = Vec::new();
        for c in parent.elements() {
            let perm = g
                .elements()
                .map(|x| {
                    let y = parent.conjugate(g.embed_into_parent(x), c);
                    g.restrict_from_parent(y)
                        .map(|y| g.index_of(y) as u8)
                        .ok_or_else(|| {
                            Error::InvariantViolation(format!("{c} does not normalize {g} in {parent}"))
                        })
                })
                .collect::<Result<Vec<u8>>>()?;
            perms.push(perm);
        }
        Self::build(g, parent.to_string(), parent.order(), perms)
    }

    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn normalizer(&self) -> &str {
        &self.normalizer
    }

    pub fn normalizer_order(&self) -> u64 {
        self.normalizer_order
    }

    /// Number of distinct permutations, the size of every free orbit.
    pub fn effective_order(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Vec<u8>] {
        &self.perms
    }

    /// Whether the tuple is the lexicographic minimum of its orbit, and the
    /// number of permutations fixing it.
    pub fn inspect(&self, t: &[u8]) -> (bool, usize) {
        let mut is_min = true;
        let mut stab = 0;
        for p in &self.perms {
            match t.iter().map(|&x| p[x as usize]).cmp(t.iter().copied()) {
                std::cmp::Ordering::Less => is_min = false,
                std::cmp::Ordering::Equal => stab += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
        (is_min, stab)
    }

    /// Lexicographically smallest tuple in the orbit of `t`.
    pub fn canonical(&self, t: &[u8]) -> Vec<u8> {
        let mut best = t.to_vec();
        for p in &self.perms {
            if t.iter().map(|&x| p[x as usize]).lt(best.iter().copied()) {
                best = t.iter().map(|&x| p[x as usize]).collect();
            }
        }
        best
    }

    /// Whether some permutation maps `a` onto `b`.
    pub fn related(&self, a: &[u8], b: &[u8]) -> bool {
        self.perms
            .iter()
            .any(|p| a.iter().map(|&x| p[x as usize]).eq(b.iter().copied()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octahedral_action_matches_abstract_automorphisms() {
        let bo = NormalizerAction::for_quaternion(3).unwrap();
        let aut = NormalizerAction::abstract_q8().unwrap();
        assert_eq!(bo.effective_order(), 24);
        assert_eq!(bo.perms(), aut.perms());
    }

    #[test]
    fn parent_actions_have_expected_size() {
        for r in 4..=7 {
            let a = NormalizerAction::for_quaternion(r).unwrap();
            assert_eq!(a.effective_order() as u64, 1 << r);
            assert_eq!(a.normalizer_order(), 1 << (r + 1));
        }
        for r in 2..=7 {
            let a = NormalizerAction::for_dihedral(r).unwrap();
            assert_eq!(a.effective_order() as u64, if r == 2 { 6 } else { 1 << r });
        }
        assert!(NormalizerAction::for_quaternion(8).is_err());
        assert!(NormalizerAction::for_dihedral(1).is_err());
    }

    #[test]
    fn permutations_are_automorphisms() {
        for r in 3..=5 {
            let a = NormalizerAction::for_quaternion(r).unwrap();
            let g = a.group();
            for p in a.perms() {
                for x in g.elements() {
                    for y in g.elements() {
                        let img = |z: QuatElem| g.element_at(p[g.index_of(z)] as usize);
                        assert_eq!(img(g.mul(x, y)), g.mul(img(x), img(y)));
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_is_orbit_minimum() {
        let a = NormalizerAction::for_quaternion(4).unwrap();
        let t = [3u8, 9];
        let c = a.canonical(&t);
        assert!(a.related(&t, &c));
        assert_eq!(a.canonical(&c), c);
        assert!(a.inspect(&c).0);
    }
}
