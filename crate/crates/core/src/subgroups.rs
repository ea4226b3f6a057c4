//! Subgroups of a fixed ambient group of order at most 128.
//!
//! A subgroup is a bitmask over the ambient's element indices
//! ([`GroupId::index_of`]); equality is element-set equality. Quaternion
//! subgroups also get a [`SubgroupDescriptor`] following the classification
//! of subgroups of `Q_{2^{q+1}}`:
//!
//! * abelian: `μ_{2^s}` or a pair `{±I, ±wx}`,
//! * non-abelian: `μ_{2^r} ∪ wx·μ_{2^r}` with `x = ξ^p`, `0 ≤ p < 2^{q-r}`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::quat_group::{Family, GroupId, QuatElem};

pub const MAX_AMBIENT_ORDER: u64 = 128;

fn check_ambient(g: GroupId) -> Result<()> {
    if g.order() > MAX_AMBIENT_ORDER {
        return Err(Error::GroupTooLarge {
            ambient: g.to_string(),
            order: g.order(),
        });
    }
    Ok(())
}

fn bit(g: GroupId, a: QuatElem) -> u128 {
    1u128 << g.index_of(a)
}

/// Closure of `gens` under right multiplication, starting from the identity.
fn close(g: GroupId, gens: &[QuatElem]) -> u128 {
    let mut mask = bit(g, QuatElem::IDENTITY);
    let mut stack = vec![QuatElem::IDENTITY];
    while let Some(a) = stack.pop() {
        for &x in gens {
            let b = g.mul(a, x);
            let bb = bit(g, b);
            if mask & bb == 0 {
                mask |= bb;
                stack.push(b);
            }
        }
    }
    mask
}

fn mask_elements(g: GroupId, mask: u128) -> impl Iterator<Item = QuatElem> {
    (0..g.order() as usize)
        .filter(move |&i| mask >> i & 1 == 1)
        .map(move |i| g.element_at(i))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubgroupDescriptor {
    /// `μ_{2^s}`.
    Cyclic(u32),
    /// `{±I, ±wξ^p}`, with `0 ≤ p < 2^{q-1}`.
    Order4WPair(u64),
    /// `μ_{2^r} ∪ wξ^p·μ_{2^r}`, with `r ≥ 2` and `0 ≤ p < 2^{q-r}`.
    QuatLike { r: u32, p: u64 },
}

impl SubgroupDescriptor {
    pub fn order(&self) -> u64 {
        match *self {
            SubgroupDescriptor::Cyclic(s) => 1 << s,
            SubgroupDescriptor::Order4WPair(_) => 4,
            SubgroupDescriptor::QuatLike { r, .. } => 1 << (r + 1),
        }
    }

    pub fn is_abelian(&self) -> bool {
        !matches!(self, SubgroupDescriptor::QuatLike { .. })
    }

    /// Regenerate the element set inside `ambient`.
    pub fn realize(&self, ambient: GroupId) -> Result<Subgroup> {
        if ambient.family() != Family::Quaternion {
            return Err(Error::MismatchedGroup {
                expected: "a quaternion group".into(),
                found: ambient.to_string(),
            });
        }
        check_ambient(ambient)?;
        let n = ambient.modulus();
        let q = ambient.m() - 1;
        let mask = match *self {
            SubgroupDescriptor::Cyclic(s) if s <= q => close(ambient, &[QuatElem::new(0, (n >> s) % n)]),
            SubgroupDescriptor::Order4WPair(p) if p < n / 2 => close(ambient, &[QuatElem::new(1, p)]),
            SubgroupDescriptor::QuatLike { r, p } if (2..=q).contains(&r) && p < n >> r => {
                close(ambient, &[QuatElem::new(0, n >> r), QuatElem::new(1, p)])
            }
            _ => {
                return Err(Error::OutOfRange(format!("{self} does not fit in {ambient}")));
            }
        };
        Ok(Subgroup::from_mask(ambient, mask).with_descriptor(*self))
    }

    /// Isomorphism-type label: `μ₈`, `Z/4`, `Q₁₆`.
    pub fn type_name(&self) -> String {
        match *self {
            SubgroupDescriptor::Cyclic(0) => "1".into(),
            SubgroupDescriptor::Cyclic(s) => format!("μ{}", subscript(1 << s)),
            SubgroupDescriptor::Order4WPair(_) => "Z/4".into(),
            SubgroupDescriptor::QuatLike { r, .. } => format!("Q{}", subscript(1 << (r + 1))),
        }
    }
}

impl fmt::Display for SubgroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SubgroupDescriptor::Cyclic(s) => write!(f, "Cyclic({s})"),
            SubgroupDescriptor::Order4WPair(p) => write!(f, "Order4WPair(x=ξ^{p})"),
            SubgroupDescriptor::QuatLike { r, p } => write!(f, "QuatLike({r}, x=ξ^{p})"),
        }
    }
}

pub fn subscript(n: u64) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

/// An explicit subgroup of `ambient`.
#[derive(Clone, Debug)]
pub struct Subgroup {
    ambient: GroupId,
    mask: u128,
    descriptor: Option<SubgroupDescriptor>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.mask == other.mask
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.mask.hash(state);
    }
}

impl Subgroup {
    fn from_mask(ambient: GroupId, mask: u128) -> Self {
        Subgroup {
            ambient,
            mask,
            descriptor: None,
        }
    }

    fn with_descriptor(mut self, d: SubgroupDescriptor) -> Self {
        self.descriptor = Some(d);
        self
    }

    /// Attach the classification when the ambient is a quaternion group.
    fn classified(self) -> Self {
        match classify_subgroup(&self) {
            Ok(d) => self.with_descriptor(d),
            Err(_) => self,
        }
    }

    pub fn whole(ambient: GroupId) -> Result<Self> {
        check_ambient(ambient)?;
        let mask = if ambient.order() == 128 {
            u128::MAX
        } else {
            (1u128 << ambient.order()) - 1
        };
        Ok(Self::from_mask(ambient, mask).classified())
    }

    pub fn trivial(ambient: GroupId) -> Result<Self> {
        check_ambient(ambient)?;
        Ok(Self::from_mask(ambient, 1).classified())
    }

    pub fn ambient(&self) -> GroupId {
        self.ambient
    }

    pub fn mask(&self) -> u128 {
        self.mask
    }

    pub fn descriptor(&self) -> Option<SubgroupDescriptor> {
        self.descriptor
    }

    pub fn order(&self) -> u64 {
        self.mask.count_ones() as u64
    }

    pub fn is_trivial(&self) -> bool {
        self.mask == 1
    }

    pub fn contains(&self, a: QuatElem) -> bool {
        self.ambient.contains(a) && self.mask & bit(self.ambient, a) != 0
    }

    pub fn elements(&self) -> Vec<QuatElem> {
        mask_elements(self.ambient, self.mask).collect()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.ambient == other.ambient && self.mask & !other.mask == 0
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_mask(self.ambient, self.mask & other.mask).classified()
    }

    pub fn is_abelian(&self) -> bool {
        let els = self.elements();
        els.iter()
            .all(|&a| els.iter().all(|&b| self.ambient.mul(a, b) == self.ambient.mul(b, a)))
    }

    /// Label for posets and amalgam strings.
    pub fn name(&self) -> String {
        match self.descriptor {
            Some(d) => d.type_name(),
            None => format!("H{}", subscript(self.order())),
        }
    }

    /// Whether `g H g⁻¹ = H`.
    pub fn is_normalized_by(&self, g: QuatElem) -> bool {
        mask_elements(self.ambient, self.mask).all(|s| self.contains(self.ambient.conjugate(s, g)))
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.elements().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

/// Smallest subgroup containing every element of `tuple`.
pub fn generated_subgroup(g: GroupId, tuple: &[QuatElem]) -> Result<Subgroup> {
    check_ambient(g)?;
    if tuple.is_empty() {
        return Err(Error::Precondition("empty generating tuple".into()));
    }
    for &a in tuple {
        g.check(a)?;
    }
    Ok(Subgroup::from_mask(g, close(g, tuple)).classified())
}

/// `⟨[a, b] : a ∈ a_set, b ∈ b_set⟩`.
pub fn commutator_subgroup(a_set: &Subgroup, b_set: &Subgroup) -> Subgroup {
    let g = a_set.ambient;
    let mut comms: Vec<QuatElem> = Vec::new();
    let mut seen = 0u128;
    for a in a_set.elements() {
        for b in b_set.elements() {
            let c = g.commutator(a, b);
            if seen & bit(g, c) == 0 {
                seen |= bit(g, c);
                comms.push(c);
            }
        }
    }
    Subgroup::from_mask(g, close(g, &comms)).classified()
}

/// `Γ¹ = H, Γ^{i+1} = [Γ^i, H]`, down to the trivial group, and the nilpotency class.
///
/// Every subgroup here is a 2-group, so the series always terminates.
pub fn lower_central_series(h: &Subgroup) -> (Vec<Subgroup>, u32) {
    let mut series = vec![h.clone()];
    while !series.last().expect("non-empty").is_trivial() {
        let next = commutator_subgroup(series.last().expect("non-empty"), h);
        assert!(
            next.mask != series.last().expect("non-empty").mask,
            "lower central series stalled: group is not nilpotent"
        );
        series.push(next);
    }
    let class = (series.len() - 1) as u32;
    (series, class)
}

pub fn nilpotency_class(h: &Subgroup) -> u32 {
    lower_central_series(h).1
}

/// Classification of a subgroup of a quaternion group.
pub fn classify_subgroup(h: &Subgroup) -> Result<SubgroupDescriptor> {
    let g = h.ambient;
    if g.family() != Family::Quaternion {
        return Err(Error::MismatchedGroup {
            expected: "a quaternion group".into(),
            found: g.to_string(),
        });
    }
    let els = h.elements();
    let torus = els.iter().filter(|a| a.eps == 0).count() as u64;
    let min_w = els.iter().filter(|a| a.eps == 1).map(|a| a.k).min();
    let desc = match min_w {
        None => SubgroupDescriptor::Cyclic(torus.trailing_zeros()),
        Some(p) if torus == 2 => SubgroupDescriptor::Order4WPair(p),
        Some(p) => SubgroupDescriptor::QuatLike {
            r: torus.trailing_zeros(),
            p,
        },
    };
    let realized = desc.realize(g).map_err(|_| {
        Error::InvariantViolation(format!("subgroup {h} of {g} matches no known form"))
    })?;
    if realized.mask != h.mask {
        return Err(Error::InvariantViolation(format!(
            "subgroup {h} of {g} matches no known form"
        )));
    }
    Ok(desc)
}

/// Every subgroup of `g`, together with the table `join[s][x] = ⟨H_s, x⟩`.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    ambient: GroupId,
    masks: Vec<u128>,
    index: HashMap<u128, usize>,
    join: Vec<Vec<u32>>,
    abelian: Vec<bool>,
}

impl SubgroupLattice {
    pub fn new(g: GroupId) -> Result<Self> {
        check_ambient(g)?;
        let order = g.order() as usize;
        let mut masks = vec![1u128];
        let mut gens: Vec<Vec<QuatElem>> = vec![vec![]];
        let mut index = HashMap::from([(1u128, 0usize)]);
        let mut join: Vec<Vec<u32>> = Vec::new();
        let mut i = 0;
        while i < masks.len() {
            let mut row = vec![0u32; order];
            for (x, slot) in row.iter_mut().enumerate() {
                if masks[i] >> x & 1 == 1 {
                    *slot = i as u32;
                    continue;
                }
                let mut gs = gens[i].clone();
                gs.push(g.element_at(x));
                let m = close(g, &gs);
                let j = *index.entry(m).or_insert_with(|| {
                    masks.push(m);
                    gens.push(gs);
                    masks.len() - 1
                });
                *slot = j as u32;
            }
            join.push(row);
            i += 1;
        }
        let abelian = masks
            .iter()
            .map(|&m| Subgroup::from_mask(g, m).is_abelian())
            .collect();
        Ok(SubgroupLattice {
            ambient: g,
            masks,
            index,
            join,
            abelian,
        })
    }

    pub fn ambient(&self) -> GroupId {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    /// Index of the trivial subgroup.
    pub fn trivial(&self) -> usize {
        0
    }

    pub fn whole(&self) -> usize {
        let full = Subgroup::whole(self.ambient).expect("checked").mask;
        self.index[&full]
    }

    /// `⟨H_s, x⟩` by element index.
    #[inline]
    pub fn join(&self, s: usize, x: usize) -> usize {
        self.join[s][x] as usize
    }

    /// Index of the subgroup generated by the given element indices.
    pub fn generated(&self, xs: &[usize]) -> usize {
        xs.iter().fold(0, |s, &x| self.join(s, x))
    }

    pub fn is_abelian(&self, s: usize) -> bool {
        self.abelian[s]
    }

    pub fn order(&self, s: usize) -> u64 {
        self.masks[s].count_ones() as u64
    }

    pub fn subgroup(&self, s: usize) -> Subgroup {
        Subgroup::from_mask(self.ambient, self.masks[s]).classified()
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        self.index.get(&h.mask).copied()
    }

    /// All subgroups sorted by order, then by element set.
    pub fn subgroups(&self) -> Vec<Subgroup> {
        let mut v: Vec<_> = (0..self.len()).map(|s| self.subgroup(s)).collect();
        v.sort_by_key(|h| (h.order(), h.elements()));
        v
    }
}

pub fn all_subgroups(g: GroupId) -> Result<Vec<Subgroup>> {
    Ok(SubgroupLattice::new(g)?.subgroups())
}

/// Maximal elements of `family` under inclusion, in input order.
fn maximal_among(family: &[Subgroup]) -> Vec<Subgroup> {
    family
        .iter()
        .filter(|h| {
            !family
                .iter()
                .any(|k| k.mask != h.mask && h.is_subgroup_of(k))
        })
        .cloned()
        .collect()
}

/// The maximal proper subgroups.
pub fn maximal_subgroups(g: GroupId) -> Result<Vec<Subgroup>> {
    let all = all_subgroups(g)?;
    let proper: Vec<_> = all.into_iter().filter(|h| h.order() < g.order()).collect();
    Ok(maximal_among(&proper))
}

fn quaternion_q(g: GroupId) -> Result<u32> {
    if g.family() != Family::Quaternion {
        return Err(Error::MismatchedGroup {
            expected: "a quaternion group".into(),
            found: g.to_string(),
        });
    }
    Ok(g.m() - 1)
}

/// Maximal subgroups of nilpotency class `< r` in `Q_{2^{q+1}}`, `2 ≤ r ≤ q`.
pub fn maximal_nilclass_subgroups(g: GroupId, r: u32) -> Result<Vec<Subgroup>> {
    let q = quaternion_q(g)?;
    if r < 2 || r > q {
        return Err(Error::OutOfRange(format!(
            "class bound r = {r} must satisfy 2 <= r <= {q} for {g}"
        )));
    }
    let small: Vec<_> = all_subgroups(g)?
        .into_iter()
        .filter(|h| nilpotency_class(h) < r)
        .collect();
    Ok(maximal_among(&small))
}

/// `{x ∈ ambient : x H x⁻¹ = H}`.
pub fn normalizer_in_ambient(ambient: GroupId, h: &Subgroup) -> Result<Subgroup> {
    if h.ambient != ambient {
        return Err(Error::MismatchedGroup {
            expected: ambient.to_string(),
            found: h.ambient.to_string(),
        });
    }
    let mask = ambient
        .elements()
        .filter(|&x| h.is_normalized_by(x))
        .fold(0u128, |m, x| m | bit(ambient, x));
    Ok(Subgroup::from_mask(ambient, mask).classified())
}

/// The poset `P_r(G)` of maximal class-`< r` subgroups and their pairwise intersections.
#[derive(Clone, Debug)]
pub struct NilPoset {
    pub ambient: GroupId,
    pub r: u32,
    pub maximals: Vec<Subgroup>,
    pub intersections: Vec<Subgroup>,
    /// Hasse edges `(lower, upper)` over `nodes()` indices.
    pub edges: Vec<(usize, usize)>,
    pub tree: bool,
    pub amalgam: String,
}

impl NilPoset {
    /// Maximals first, then intersections.
    pub fn nodes(&self) -> Vec<&Subgroup> {
        self.maximals.iter().chain(&self.intersections).collect()
    }
}

pub fn nil_poset_report(g: GroupId, r: u32) -> Result<NilPoset> {
    let mut maximals = maximal_nilclass_subgroups(g, r)?;
    // quaternion-type pieces first, the cyclic torus factor last
    maximals.sort_by_key(|h| {
        let cyclic_torus = matches!(h.descriptor(), Some(SubgroupDescriptor::Cyclic(_)));
        (cyclic_torus, h.elements())
    });

    let mut intersections: Vec<Subgroup> = Vec::new();
    for (i, a) in maximals.iter().enumerate() {
        for b in &maximals[i + 1..] {
            let c = a.intersection(b);
            if !maximals.contains(&c) && !intersections.contains(&c) {
                intersections.push(c);
            }
        }
    }
    intersections.sort_by_key(|h| (h.order(), h.elements()));

    let nodes: Vec<&Subgroup> = maximals.iter().chain(&intersections).collect();
    let strictly_below = |a: &Subgroup, b: &Subgroup| a.mask != b.mask && a.is_subgroup_of(b);
    let mut edges = Vec::new();
    for (i, a) in nodes.iter().enumerate() {
        for (j, b) in nodes.iter().enumerate() {
            if strictly_below(a, b)
                && !nodes
                    .iter()
                    .any(|c| strictly_below(a, c) && strictly_below(c, b))
            {
                edges.push((i, j));
            }
        }
    }
    let tree = is_tree(nodes.len(), &edges);

    let mut amalgam = maximals[0].name();
    for w in maximals.windows(2) {
        let over = w[0].intersection(&w[1]);
        amalgam.push_str(&format!(" ∗_{{{}}} {}", over.name(), w[1].name()));
    }

    Ok(NilPoset {
        ambient: g,
        r,
        maximals,
        intersections,
        edges,
        tree,
        amalgam,
    })
}

/// Connected with `|E| = |V| - 1`, treating edges as undirected.
fn is_tree(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 || edges.len() != n - 1 {
        return false;
    }
    let mut adj = vec![vec![]; n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = HashSet::from([0usize]);
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if seen.insert(u) {
                stack.push(u);
            }
        }
    }
    seen.len() == n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(m: u32) -> GroupId {
        GroupId::quaternion(m).unwrap()
    }

    fn e(eps: u8, k: u64) -> QuatElem {
        QuatElem::new(eps, k)
    }

    fn mu(g: GroupId, s: u32) -> Subgroup {
        SubgroupDescriptor::Cyclic(s).realize(g).unwrap()
    }

    #[test]
    fn generated_examples() {
        let h = generated_subgroup(q(3), &[e(0, 1)]).unwrap();
        assert_eq!(h.order(), 4);
        assert_eq!(h, mu(q(3), 2));
        assert_eq!(
            generated_subgroup(q(3), &[e(0, 1), e(1, 0)]).unwrap(),
            Subgroup::whole(q(3)).unwrap()
        );
        assert_eq!(
            generated_subgroup(q(4), &[e(1, 0), e(1, 1)]).unwrap(),
            Subgroup::whole(q(4)).unwrap()
        );
        assert!(generated_subgroup(q(3), &[]).is_err());
    }

    #[test]
    fn lower_central_series_examples() {
        let (s, class) = lower_central_series(&Subgroup::whole(q(4)).unwrap());
        assert_eq!(class, 3);
        let expect = [Subgroup::whole(q(4)).unwrap(), mu(q(4), 2), mu(q(4), 1), mu(q(4), 0)];
        assert_eq!(s, expect);

        let (s, class) = lower_central_series(&Subgroup::whole(q(3)).unwrap());
        assert_eq!(class, 2);
        assert_eq!(s, [Subgroup::whole(q(3)).unwrap(), mu(q(3), 1), mu(q(3), 0)]);

        let (s, class) = lower_central_series(&mu(q(4), 3));
        assert_eq!(class, 1);
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn lower_central_series_matches_torus_formula() {
        // Γ^{r+1}(Q_{2^{q+1}}) = μ_{2^{q-r}}
        for m in 3..=6 {
            let qq = m - 1;
            let (s, class) = lower_central_series(&Subgroup::whole(q(m)).unwrap());
            assert_eq!(class, qq);
            for r in 1..=qq {
                assert_eq!(s[r as usize], mu(q(m), qq - r));
            }
        }
    }

    #[test]
    fn commutators_generate_derived_subgroup() {
        for m in 3..=6 {
            let whole = Subgroup::whole(q(m)).unwrap();
            assert_eq!(commutator_subgroup(&whole, &whole), mu(q(m), m - 2));
        }
    }

    #[test]
    fn classify_examples() {
        let h = generated_subgroup(q(3), &[e(1, 0)]).unwrap();
        assert_eq!(h.order(), 4);
        assert_eq!(classify_subgroup(&h).unwrap(), SubgroupDescriptor::Order4WPair(0));
        assert_eq!(classify_subgroup(&mu(q(4), 3)).unwrap(), SubgroupDescriptor::Cyclic(3));
        let h = generated_subgroup(q(4), &[e(0, 2), e(1, 1)]).unwrap();
        assert_eq!(classify_subgroup(&h).unwrap(), SubgroupDescriptor::QuatLike { r: 2, p: 1 });
        assert!(classify_subgroup(&Subgroup::whole(GroupId::dihedral(3).unwrap()).unwrap()).is_err());
    }

    #[test]
    fn every_subgroup_classified_and_regenerated() {
        for m in 3..=5 {
            let g = q(m);
            let qq = m - 1;
            let all = all_subgroups(g).unwrap();
            // μ_{2^s} for s ≤ q, 2^{q-1} pairs, 2^{q-r} copies of each QuatLike r
            let expected = (qq as u64 + 1) + (1 << (qq - 1)) + (2..=qq).map(|r| 1u64 << (qq - r)).sum::<u64>();
            assert_eq!(all.len() as u64, expected);
            let mut seen = HashSet::new();
            for h in &all {
                let d = classify_subgroup(h).unwrap();
                assert!(seen.insert(d));
                assert_eq!(&d.realize(g).unwrap(), h);
                assert_eq!(d.is_abelian(), h.is_abelian());
            }
        }
    }

    #[test]
    fn maximal_subgroups_examples() {
        let m8 = maximal_subgroups(q(3)).unwrap();
        assert_eq!(m8.len(), 3);
        assert!(m8.iter().all(|h| h.order() == 4 && h.is_abelian()));

        let m16 = maximal_subgroups(q(4)).unwrap();
        let mut descs: Vec<_> = m16.iter().map(|h| h.descriptor().unwrap()).collect();
        descs.sort();
        assert_eq!(
            descs,
            [
                SubgroupDescriptor::Cyclic(3),
                SubgroupDescriptor::QuatLike { r: 2, p: 0 },
                SubgroupDescriptor::QuatLike { r: 2, p: 1 },
            ]
        );
        for m in 3..=7 {
            let ms = maximal_subgroups(q(m)).unwrap();
            assert_eq!(ms.len(), 3);
            let centre = mu(q(m), m - 2);
            for (i, a) in ms.iter().enumerate() {
                for b in &ms[i + 1..] {
                    assert_eq!(a.intersection(b), centre);
                }
            }
        }
    }

    #[test]
    fn maximal_nilclass_examples() {
        let ms = maximal_nilclass_subgroups(q(4), 3).unwrap();
        assert_eq!(ms.len(), 3);
        assert_eq!(ms.iter().filter(|h| h.order() == 8 && !h.is_abelian()).count(), 2);
        assert!(ms.contains(&mu(q(4), 3)));

        let ms = maximal_nilclass_subgroups(q(3), 2).unwrap();
        assert_eq!(ms.len(), 3);
        assert!(ms.iter().all(|h| h.order() == 4 && h.is_abelian()));

        let ms = maximal_nilclass_subgroups(q(5), 2).unwrap();
        assert_eq!(ms.len(), 9);
        assert!(ms.contains(&mu(q(5), 4)));
        assert_eq!(ms.iter().filter(|h| h.order() == 4).count(), 8);

        assert!(maximal_nilclass_subgroups(q(4), 4).is_err());
        assert!(maximal_nilclass_subgroups(q(4), 1).is_err());
    }

    #[test]
    fn normalizer_examples() {
        let q16_in_q32 = generated_subgroup(q(5), &[e(0, 2), e(1, 0)]).unwrap();
        assert_eq!(
            normalizer_in_ambient(q(5), &q16_in_q32).unwrap(),
            Subgroup::whole(q(5)).unwrap()
        );
        assert_eq!(
            normalizer_in_ambient(q(4), &mu(q(4), 3)).unwrap(),
            Subgroup::whole(q(4)).unwrap()
        );
        let pair = generated_subgroup(q(3), &[e(1, 0)]).unwrap();
        assert_eq!(
            normalizer_in_ambient(q(3), &pair).unwrap(),
            Subgroup::whole(q(3)).unwrap()
        );
        for h in all_subgroups(q(5)).unwrap() {
            let n = normalizer_in_ambient(q(5), &h).unwrap();
            assert!(h.is_subgroup_of(&n));
            assert_eq!(close(q(5), &n.elements()), n.mask());
        }
    }

    #[test]
    fn poset_examples() {
        let p = nil_poset_report(q(4), 3).unwrap();
        assert!(p.tree);
        assert_eq!(p.amalgam, "Q₈ ∗_{μ₄} Q₈ ∗_{μ₄} μ₈");
        assert_eq!(p.intersections, vec![mu(q(4), 2)]);

        let p = nil_poset_report(q(3), 2).unwrap();
        assert!(p.tree);
        assert_eq!(p.maximals.len(), 3);
        assert_eq!(p.intersections, vec![mu(q(3), 1)]);
        assert_eq!(p.edges.len(), 3);
        assert_eq!(p.amalgam, "Z/4 ∗_{μ₂} Z/4 ∗_{μ₂} μ₄");
    }

    #[test]
    fn poset_shape_for_all_small_groups() {
        for m in 3..=6 {
            let qq = m - 1;
            for r in 2..=qq {
                let p = nil_poset_report(q(m), r).unwrap();
                assert_eq!(p.maximals.len() as u64, 1 + (1u64 << (qq + 1 - r)));
                assert!(p.tree);
                assert_eq!(p.intersections, vec![mu(q(m), r - 1)]);
            }
        }
    }

    #[test]
    fn lattice_join_matches_closure() {
        let g = q(4);
        let lat = SubgroupLattice::new(g).unwrap();
        assert_eq!(lat.len(), all_subgroups(g).unwrap().len());
        for a in g.elements() {
            for b in g.elements() {
                let s = lat.generated(&[g.index_of(a), g.index_of(b)]);
                assert_eq!(lat.subgroup(s), generated_subgroup(g, &[a, b]).unwrap());
            }
        }
        assert_eq!(lat.subgroup(lat.whole()).order(), 16);
    }

    #[test]
    fn subscripts() {
        assert_eq!(subscript(16), "₁₆");
        assert_eq!(SubgroupDescriptor::QuatLike { r: 3, p: 0 }.type_name(), "Q₁₆");
    }
}
