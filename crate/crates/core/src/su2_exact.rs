//! Exact arithmetic inside `SU(2)`.
//!
//! Two carriers are used. [`CircleElem`] covers the normalizer `T ∪ wT` of the
//! maximal torus, storing `w^f · diag(e^{2πiθ}, e^{-2πiθ})` with a rational
//! angle `θ ∈ [0, 1)`. [`ExtQuaternion`] is a unit quaternion with
//! coefficients in `Q(√2)`, enough to hold the 48 elements of the binary
//! octahedral group, which leaves `T ∪ wT`.
//!
//! Matrices are identified with quaternions by
//! `a + bi + cj + dk ↦ [[a+bi, c+di], [-c+di, a-bi]]`, so `ξ_n ↦ cos(2π/n) + i sin(2π/n)`
//! and `w = [[0,-1],[1,0]] ↦ -j`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quat_group::{Family, GroupId, QuatElem};

fn frac(x: Rational64) -> Rational64 {
    let f = x - x.floor();
    debug_assert!(f >= Rational64::zero() && f < Rational64::one());
    f
}

/// `w^wflag · diag(e^{2πiθ}, e^{-2πiθ})` with `θ` reduced into `[0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircleElem {
    wflag: bool,
    theta: Rational64,
}

impl CircleElem {
    pub fn new(wflag: bool, theta: Rational64) -> Self {
        CircleElem { wflag, theta: frac(theta) }
    }

    pub fn torus(theta: Rational64) -> Self {
        Self::new(false, theta)
    }

    pub fn identity() -> Self {
        Self::torus(Rational64::zero())
    }

    pub fn minus_one() -> Self {
        Self::torus(Rational64::new(1, 2))
    }

    pub fn wflag(&self) -> bool {
        self.wflag
    }

    pub fn theta(&self) -> Rational64 {
        self.theta
    }

    pub fn inverse(&self) -> Self {
        if self.wflag {
            // (wx)^{-1} = x̄ w̄ = x̄ (-w) = w x (-1)
            Self::new(true, self.theta + Rational64::new(1, 2))
        } else {
            Self::torus(-self.theta)
        }
    }

    /// The inverse of [`embed_quaternion_group`]: `None` if `self ∉ Q_{2^m}`.
    pub fn to_quat_elem(&self, g: GroupId) -> Option<QuatElem> {
        if g.family() != Family::Quaternion {
            return None;
        }
        let scaled = self.theta * Rational64::from_integer(g.modulus() as i64);
        scaled
            .is_integer()
            .then(|| QuatElem::new(self.wflag as u8, scaled.to_integer() as u64))
    }
}

/// Product in `SU(2)` using `x w = w x̄` and `w² = -I`.
pub fn circle_product(a: &CircleElem, b: &CircleElem) -> CircleElem {
    if !b.wflag {
        CircleElem::new(a.wflag, a.theta + b.theta)
    } else if !a.wflag {
        CircleElem::new(true, b.theta - a.theta)
    } else {
        CircleElem::torus(b.theta - a.theta + Rational64::new(1, 2))
    }
}

/// `[a, b] = a b a⁻¹ b⁻¹`, always in `T`.
pub fn circle_commutator(a: &CircleElem, b: &CircleElem) -> CircleElem {
    let ab = circle_product(a, b);
    circle_product(&circle_product(&ab, &a.inverse()), &b.inverse())
}

/// `by · x · by⁻¹`.
pub fn circle_conjugate(x: &CircleElem, by: &CircleElem) -> CircleElem {
    circle_product(&circle_product(by, x), &by.inverse())
}

/// `(eps, k) ↦ (eps, k / 2^{m-1})`.
pub fn embed_quaternion_group(g: GroupId, a: QuatElem) -> Result<CircleElem> {
    if g.family() != Family::Quaternion {
        return Err(Error::MismatchedGroup {
            expected: "a quaternion group".into(),
            found: g.to_string(),
        });
    }
    let a = g.check(a)?;
    Ok(CircleElem::new(
        a.eps == 1,
        Rational64::new(a.k as i64, g.modulus() as i64),
    ))
}

impl fmt::Display for CircleElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "w^{} * angle {}/{}",
            self.wflag as u8,
            self.theta.numer(),
            self.theta.denom()
        )
    }
}

/// `p + q√2` with rational `p`, `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QSqrt2 {
    pub p: Rational64,
    pub q: Rational64,
}

impl QSqrt2 {
    pub fn new(p: Rational64, q: Rational64) -> Self {
        QSqrt2 { p, q }
    }

    pub fn rational(p: Rational64) -> Self {
        Self::new(p, Rational64::zero())
    }

    pub fn zero() -> Self {
        Self::rational(Rational64::zero())
    }

    pub fn one() -> Self {
        Self::rational(Rational64::one())
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// `√2 / 2`.
    pub fn half_sqrt2() -> Self {
        Self::new(Rational64::zero(), Rational64::new(1, 2))
    }
}

impl Add for QSqrt2 {
    type Output = QSqrt2;
    fn add(self, o: QSqrt2) -> QSqrt2 {
        QSqrt2::new(self.p + o.p, self.q + o.q)
    }
}

impl Sub for QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, o: QSqrt2) -> QSqrt2 {
        QSqrt2::new(self.p - o.p, self.q - o.q)
    }
}

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2::new(-self.p, -self.q)
    }
}

impl Mul for QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, o: QSqrt2) -> QSqrt2 {
        let two = Rational64::from_integer(2);
        QSqrt2::new(self.p * o.p + two * self.q * o.q, self.p * o.q + self.q * o.p)
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Quaternion `a + bi + cj + dk` over `Q(√2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtQuaternion {
    pub a: QSqrt2,
    pub b: QSqrt2,
    pub c: QSqrt2,
    pub d: QSqrt2,
}

impl ExtQuaternion {
    pub fn new(a: QSqrt2, b: QSqrt2, c: QSqrt2, d: QSqrt2) -> Self {
        ExtQuaternion { a, b, c, d }
    }

    pub fn identity() -> Self {
        let z = QSqrt2::zero();
        Self::new(QSqrt2::one(), z, z, z)
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.a, -self.b, -self.c, -self.d)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a, -self.b, -self.c, -self.d)
    }

    pub fn norm_squared(&self) -> QSqrt2 {
        self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d
    }

    pub fn is_unit(&self) -> bool {
        self.norm_squared() == QSqrt2::one()
    }

    /// Inverse of a unit quaternion.
    pub fn unit_inverse(&self) -> Self {
        debug_assert!(self.is_unit());
        self.conj()
    }

    pub fn conjugate(&self, by: &ExtQuaternion) -> ExtQuaternion {
        by.mul(self).mul(&by.unit_inverse())
    }

    pub fn mul(&self, o: &ExtQuaternion) -> ExtQuaternion {
        let (a1, b1, c1, d1) = (self.a, self.b, self.c, self.d);
        let (a2, b2, c2, d2) = (o.a, o.b, o.c, o.d);
        ExtQuaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }

    /// Exact image of a [`CircleElem`] whose angle is a multiple of `1/8`.
    pub fn from_circle(x: &CircleElem) -> Result<Self> {
        let eighths = x.theta * Rational64::from_integer(8);
        if !eighths.is_integer() {
            return Err(Error::Unsupported(format!(
                "angle {} has no cosine in Q(√2)",
                x.theta
            )));
        }
        let j = eighths.to_integer().mod_floor(&8);
        let (cos, sin) = cos_sin_eighths(j);
        let z = QSqrt2::zero();
        Ok(if x.wflag {
            // w x = (-j)(cos + i sin) = -cos j + sin k
            ExtQuaternion::new(z, z, -cos, sin)
        } else {
            ExtQuaternion::new(cos, sin, z, z)
        })
    }
}

fn cos_sin_eighths(j: i64) -> (QSqrt2, QSqrt2) {
    let one = QSqrt2::one();
    let zero = QSqrt2::zero();
    let h = QSqrt2::half_sqrt2();
    match j {
        0 => (one, zero),
        1 => (h, h),
        2 => (zero, one),
        3 => (-h, h),
        4 => (-one, zero),
        5 => (-h, -h),
        6 => (zero, -one),
        7 => (h, -h),
        _ => unreachable!("j is reduced mod 8"),
    }
}

impl fmt::Display for ExtQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.a, self.b, self.c, self.d)
    }
}

/// `½(1+i, -1+i; 1+i, 1-i)`, the generator of the binary octahedral group outside `Q_16`.
pub fn octahedral_extra_generator() -> ExtQuaternion {
    let h = QSqrt2::rational(Rational64::new(1, 2));
    ExtQuaternion::new(h, h, -h, h)
}

/// The elements of `Q_{2^m}` as quaternions, in [`GroupId::elements`] order.
/// Only `m ∈ {3, 4}` fit in `Q(√2)`.
pub fn quaternion_group_elements(g: GroupId) -> Result<Vec<ExtQuaternion>> {
    if g.family() != Family::Quaternion || g.m() > 4 {
        return Err(Error::Unsupported(format!(
            "{g} is not exactly representable over Q(√2)"
        )));
    }
    g.elements()
        .map(|a| ExtQuaternion::from_circle(&embed_quaternion_group(g, a)?))
        .collect()
}

/// Closure of `{ξ_8, w, ½(1+i, -1+i; 1+i, 1-i)}` under multiplication.
///
/// Returned sorted. The result has 48 elements; anything else means an
/// arithmetic bug, reported as [`Error::InvariantViolation`].
pub fn binary_octahedral() -> Result<Vec<ExtQuaternion>> {
    let xi8 = ExtQuaternion::from_circle(&CircleElem::torus(Rational64::new(1, 8)))?;
    let w = ExtQuaternion::from_circle(&CircleElem::new(true, Rational64::zero()))?;
    let gens = [xi8, w, octahedral_extra_generator()];

    let mut seen: HashSet<ExtQuaternion> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(ExtQuaternion::identity());
    queue.push_back(ExtQuaternion::identity());
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = x.mul(g);
            if seen.insert(y) {
                if seen.len() > 48 {
                    return Err(Error::InvariantViolation(
                        "binary octahedral closure exceeded 48 elements".into(),
                    ));
                }
                queue.push_back(y);
            }
        }
    }
    if seen.len() != 48 {
        return Err(Error::InvariantViolation(format!(
            "binary octahedral closure has {} elements",
            seen.len()
        )));
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Whether `g s g⁻¹ ∈ sub` for every `s ∈ sub`.
pub fn normalizes(g: &ExtQuaternion, sub: &[ExtQuaternion]) -> bool {
    let set: HashSet<&ExtQuaternion> = sub.iter().collect();
    sub.iter().all(|s| set.contains(&s.conjugate(g)))
}
