//! Generalized quaternion groups, cyclic 2-groups and dihedral quotients.
//!
//! Elements are stored as `w^eps · ξ^k` with `ξ = ξ_{2^{m-1}}` and `k` reduced
//! modulo the torus order, so structural equality is group equality. The
//! multiplication rule is `ξ^k w = w ξ^{-k}` together with `w² = -I` in
//! `Q_{2^m}` and `w² = 1` in the dihedral group `D_{2^m} = Q_{2^{m+1}} / {±I}`.
//!
//! ```
//! use nilhom::quat_group::{GroupId, QuatElem};
//!
//! let q8 = GroupId::quaternion(3).unwrap();
//! let xi = QuatElem::new(0, 1);
//! let w = QuatElem::new(1, 0);
//! assert_eq!(q8.mul(xi, w), QuatElem::new(1, 3));
//! assert_eq!(q8.commutator(xi, w), q8.minus_one().unwrap());
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported `log₂(order)`; keeps `k` and indices inside `u64`.
pub const MAX_LOG_ORDER: u32 = 62;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Quaternion,
    Cyclic,
    Dihedral,
}

/// One of the groups `Q_{2^m}`, `C_{2^m} = μ_{2^m}` or `D_{2^m}`, all of order `2^m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupId {
    family: Family,
    m: u32,
}

/// The element `w^eps · ξ^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuatElem {
    pub eps: u8,
    pub k: u64,
}

impl QuatElem {
    pub const IDENTITY: QuatElem = QuatElem { eps: 0, k: 0 };

    pub const fn new(eps: u8, k: u64) -> Self {
        QuatElem { eps, k }
    }

    pub fn is_torus(self) -> bool {
        self.eps == 0
    }
}

impl GroupId {
    pub fn new(family: Family, m: u32) -> Result<Self> {
        let min = match family {
            Family::Quaternion => 3,
            Family::Cyclic | Family::Dihedral => 1,
        };
        if m < min || m > MAX_LOG_ORDER {
            return Err(Error::OutOfRange(format!(
                "{family:?} groups need {min} <= m <= {MAX_LOG_ORDER}, got m = {m}"
            )));
        }
        Ok(GroupId { family, m })
    }

    pub fn quaternion(m: u32) -> Result<Self> {
        Self::new(Family::Quaternion, m)
    }

    pub fn cyclic(m: u32) -> Result<Self> {
        Self::new(Family::Cyclic, m)
    }

    pub fn dihedral(m: u32) -> Result<Self> {
        Self::new(Family::Dihedral, m)
    }

    pub fn family(self) -> Family {
        self.family
    }

    /// `log₂` of the order.
    pub fn m(self) -> u32 {
        self.m
    }

    pub fn order(self) -> u64 {
        1 << self.m
    }

    /// Order of the torus part `μ`; the range of `k`.
    pub fn modulus(self) -> u64 {
        match self.family {
            Family::Cyclic => 1 << self.m,
            Family::Quaternion | Family::Dihedral => 1 << (self.m - 1),
        }
    }

    pub fn identity(self) -> QuatElem {
        QuatElem::IDENTITY
    }

    /// The element `w`, absent from cyclic groups.
    pub fn w(self) -> Option<QuatElem> {
        match self.family {
            Family::Cyclic => None,
            _ => Some(QuatElem::new(1, 0)),
        }
    }

    /// `-I`, which exists only in the quaternion family.
    pub fn minus_one(self) -> Option<QuatElem> {
        match self.family {
            Family::Quaternion => Some(QuatElem::new(0, self.modulus() / 2)),
            _ => None,
        }
    }

    pub fn contains(self, a: QuatElem) -> bool {
        let eps_ok = match self.family {
            Family::Cyclic => a.eps == 0,
            _ => a.eps <= 1,
        };
        eps_ok && a.k < self.modulus()
    }

    pub fn check(self, a: QuatElem) -> Result<QuatElem> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::InvalidElement {
                group: self.to_string(),
                elem: a.to_string(),
            })
        }
    }

    /// Position of `a` in the lexicographic `(eps, k)` order.
    pub fn index_of(self, a: QuatElem) -> usize {
        (a.eps as u64 * self.modulus() + a.k) as usize
    }

    pub fn element_at(self, idx: usize) -> QuatElem {
        let n = self.modulus();
        let idx = idx as u64;
        QuatElem::new((idx / n) as u8, idx % n)
    }

    /// All elements in lexicographic `(eps, k)` order.
    pub fn elements(self) -> impl Iterator<Item = QuatElem> {
        (0..self.order() as usize).map(move |i| self.element_at(i))
    }

    /// `w²` expressed as a torus exponent.
    fn w_squared(self) -> u64 {
        match self.family {
            Family::Quaternion => self.modulus() / 2,
            Family::Dihedral | Family::Cyclic => 0,
        }
    }

    /// Group product without membership checks.
    pub fn mul(self, a: QuatElem, b: QuatElem) -> QuatElem {
        debug_assert!(self.contains(a) && self.contains(b));
        let n = self.modulus();
        if b.eps == 0 {
            QuatElem::new(a.eps, (a.k + b.k) % n)
        } else {
            // w^a ξ^j · w ξ^l = w^a w ξ^{l-j}
            let k = (b.k + n - a.k) % n;
            if a.eps == 0 {
                QuatElem::new(1, k)
            } else {
                QuatElem::new(0, (k + self.w_squared()) % n)
            }
        }
    }

    pub fn inv(self, a: QuatElem) -> QuatElem {
        let n = self.modulus();
        if a.eps == 0 {
            QuatElem::new(0, (n - a.k) % n)
        } else {
            // (wξ^k)(wξ^j) = w² ξ^{j-k} = 1  =>  j = k - w²
            QuatElem::new(1, (a.k + n - self.w_squared()) % n)
        }
    }

    pub fn commutator(self, a: QuatElem, b: QuatElem) -> QuatElem {
        let ab = self.mul(a, b);
        let ab_ainv = self.mul(ab, self.inv(a));
        self.mul(ab_ainv, self.inv(b))
    }

    /// `by · x · by⁻¹`.
    pub fn conjugate(self, x: QuatElem, by: QuatElem) -> QuatElem {
        self.mul(self.mul(by, x), self.inv(by))
    }

    pub fn pow(self, a: QuatElem, mut e: u64) -> QuatElem {
        let mut acc = QuatElem::IDENTITY;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(self, a: QuatElem) -> u64 {
        let mut x = a;
        let mut ord = 1;
        while x != QuatElem::IDENTITY {
            x = self.mul(x, a);
            ord += 1;
        }
        ord
    }

    /// The image of `Q_{2^m}` under `ξ^k ↦ ξ^{2k}` inside `Q_{2^{m+1}}`
    /// (same family, one step up).
    pub fn embed_into_parent(self, a: QuatElem) -> QuatElem {
        match self.family {
            Family::Cyclic => QuatElem::new(0, a.k * 2),
            _ => QuatElem::new(a.eps, a.k * 2),
        }
    }

    /// Inverse of [`GroupId::embed_into_parent`]; `None` if `a` is not in the image.
    pub fn restrict_from_parent(self, a: QuatElem) -> Option<QuatElem> {
        if a.k % 2 == 1 || (self.family == Family::Cyclic && a.eps == 1) {
            return None;
        }
        Some(QuatElem::new(a.eps, a.k / 2))
    }

    pub fn parent(self) -> Result<GroupId> {
        GroupId::new(self.family, self.m + 1)
    }
}

/// Checked product.
pub fn element_product(g: GroupId, a: QuatElem, b: QuatElem) -> Result<QuatElem> {
    Ok(g.mul(g.check(a)?, g.check(b)?))
}

pub fn element_inverse(g: GroupId, a: QuatElem) -> Result<QuatElem> {
    Ok(g.inv(g.check(a)?))
}

/// `aba⁻¹b⁻¹`; always lands in the torus part.
pub fn commutator(g: GroupId, a: QuatElem, b: QuatElem) -> Result<QuatElem> {
    Ok(g.commutator(g.check(a)?, g.check(b)?))
}

/// The quotient map `Q_{2^m} → D_{2^{m-1}} = Q_{2^m}/{±I}`.
pub fn project_to_dihedral(g: GroupId, a: QuatElem) -> Result<(GroupId, QuatElem)> {
    if g.family != Family::Quaternion {
        return Err(Error::MismatchedGroup {
            expected: "a quaternion group".into(),
            found: g.to_string(),
        });
    }
    let a = g.check(a)?;
    let d = GroupId::dihedral(g.m - 1)?;
    Ok((d, QuatElem::new(a.eps, a.k % d.modulus())))
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Quaternion => "Q",
            Family::Cyclic => "C",
            Family::Dihedral => "D",
        })
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}2^{}", self.family, self.m)
    }
}

impl fmt::Display for QuatElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.eps, self.k)
    }
}

impl FromStr for GroupId {
    type Err = Error;

    /// Accepts `Q2^4` as well as the order form `Q16`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |msg: &str| Error::Parse {
            pos: 0,
            msg: format!("{msg} in group id `{s}` (expected e.g. Q2^4, C2^3, D2^3 or Q16)"),
        };
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('Q') => Family::Quaternion,
            Some('C') => Family::Cyclic,
            Some('D') => Family::Dihedral,
            _ => return Err(bad("unknown family")),
        };
        let rest = chars.as_str();
        let m = if let Some(exp) = rest.strip_prefix("2^") {
            exp.parse::<u32>().map_err(|_| bad("bad exponent"))?
        } else {
            let order: u64 = rest.parse().map_err(|_| bad("bad order"))?;
            if order < 2 || !order.is_power_of_two() {
                return Err(bad("order is not a power of two"));
            }
            order.trailing_zeros()
        };
        GroupId::new(family, m)
    }
}

impl FromStr for QuatElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let err = || Error::Parse {
            pos: 0,
            msg: format!("expected `e:k` with e in {{0,1}}, got `{s}`"),
        };
        let (e, k) = s.split_once(':').ok_or_else(err)?;
        let eps: u8 = e.trim().parse().map_err(|_| err())?;
        if eps > 1 {
            return Err(err());
        }
        let k: u64 = k.trim().parse().map_err(|_| err())?;
        Ok(QuatElem::new(eps, k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(m: u32) -> GroupId {
        GroupId::quaternion(m).unwrap()
    }

    #[test]
    fn q8_products() {
        let g = q(3);
        assert_eq!(g.mul(QuatElem::new(0, 1), QuatElem::new(0, 3)), QuatElem::new(0, 0));
        assert_eq!(g.mul(QuatElem::new(1, 0), QuatElem::new(1, 0)), QuatElem::new(0, 2));
        assert_eq!(g.mul(QuatElem::new(0, 1), QuatElem::new(1, 0)), QuatElem::new(1, 3));
    }

    #[test]
    fn q8_inverses() {
        let g = q(3);
        assert_eq!(g.inv(QuatElem::new(0, 1)), QuatElem::new(0, 3));
        assert_eq!(g.inv(QuatElem::new(1, 0)), QuatElem::new(1, 2));
        assert_eq!(g.mul(QuatElem::new(1, 0), QuatElem::new(1, 2)), QuatElem::IDENTITY);
        assert_eq!(g.inv(QuatElem::IDENTITY), QuatElem::IDENTITY);
    }

    #[test]
    fn q8_commutators() {
        let g = q(3);
        let c = |a, b| commutator(g, a, b).unwrap();
        assert_eq!(c(QuatElem::new(0, 1), QuatElem::new(0, 3)), QuatElem::new(0, 0));
        assert_eq!(c(QuatElem::new(0, 1), QuatElem::new(1, 0)), QuatElem::new(0, 2));
        assert_eq!(c(QuatElem::new(1, 0), QuatElem::new(1, 1)), QuatElem::new(0, 2));
    }

    #[test]
    fn dihedral_projection() {
        let g = q(3);
        let p = |k: QuatElem| project_to_dihedral(g, k).unwrap();
        let d = GroupId::dihedral(2).unwrap();
        assert_eq!(p(QuatElem::new(0, 2)), (d, QuatElem::new(0, 0)));
        assert_eq!(p(QuatElem::new(1, 1)), (d, QuatElem::new(1, 1)));
        assert_eq!(p(QuatElem::new(0, 3)), (d, QuatElem::new(0, 1)));
    }

    #[test]
    fn group_axioms_exhaustive() {
        for fam in [Family::Quaternion, Family::Dihedral, Family::Cyclic] {
            for m in 1..=6 {
                let Ok(g) = GroupId::new(fam, m) else { continue };
                let els: Vec<_> = g.elements().collect();
                assert_eq!(els.len() as u64, g.order());
                for &a in &els {
                    assert_eq!(g.mul(a, g.inv(a)), QuatElem::IDENTITY);
                    assert_eq!(g.mul(QuatElem::IDENTITY, a), a);
                    assert_eq!(g.mul(a, QuatElem::IDENTITY), a);
                    for &b in &els {
                        assert!(g.commutator(a, b).is_torus());
                        let ab = g.mul(a, b);
                        for &c in &els {
                            assert_eq!(g.mul(ab, c), g.mul(a, g.mul(b, c)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn projection_is_homomorphism() {
        for m in 3..=6 {
            let g = q(m);
            let d = GroupId::dihedral(m - 1).unwrap();
            for a in g.elements() {
                for b in g.elements() {
                    let (_, pab) = project_to_dihedral(g, g.mul(a, b)).unwrap();
                    let (_, pa) = project_to_dihedral(g, a).unwrap();
                    let (_, pb) = project_to_dihedral(g, b).unwrap();
                    assert_eq!(pab, d.mul(pa, pb));
                }
            }
            let kernel: Vec<_> = g
                .elements()
                .filter(|&a| project_to_dihedral(g, a).unwrap().1 == QuatElem::IDENTITY)
                .collect();
            assert_eq!(kernel, vec![QuatElem::IDENTITY, g.minus_one().unwrap()]);
        }
    }

    #[test]
    fn parent_embedding_is_homomorphism() {
        for m in 3..=5 {
            let g = q(m);
            let p = g.parent().unwrap();
            for a in g.elements() {
                assert_eq!(g.restrict_from_parent(g.embed_into_parent(a)), Some(a));
                for b in g.elements() {
                    assert_eq!(
                        g.embed_into_parent(g.mul(a, b)),
                        p.mul(g.embed_into_parent(a), g.embed_into_parent(b))
                    );
                }
            }
        }
    }

    #[test]
    fn invalid_elements_rejected() {
        let g = q(3);
        assert!(element_product(g, QuatElem::new(0, 4), QuatElem::IDENTITY).is_err());
        assert!(element_inverse(GroupId::cyclic(2).unwrap(), QuatElem::new(1, 0)).is_err());
        assert!(project_to_dihedral(GroupId::cyclic(3).unwrap(), QuatElem::IDENTITY).is_err());
        assert!(GroupId::quaternion(2).is_err());
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("Q2^4".parse::<GroupId>().unwrap(), q(4));
        assert_eq!("Q16".parse::<GroupId>().unwrap(), q(4));
        assert_eq!("D2^3".parse::<GroupId>().unwrap(), GroupId::dihedral(3).unwrap());
        assert_eq!("C8".parse::<GroupId>().unwrap().to_string(), "C2^3");
        assert!("Q12".parse::<GroupId>().is_err());
        assert!("X2^3".parse::<GroupId>().is_err());
        assert_eq!("1:3".parse::<QuatElem>().unwrap(), QuatElem::new(1, 3));
        assert_eq!(QuatElem::new(1, 3).to_string(), "1:3");
        assert!("2:0".parse::<QuatElem>().is_err());
    }
}
