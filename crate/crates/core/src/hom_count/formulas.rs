//! Closed-form counts, evaluated exactly.
//!
//! Several formulas carry denominators (3, 8, 12, 24, `2^{n-2}` at `n = 1`),
//! so they are evaluated in [`BigRational`] and converted back with an
//! integrality check.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// `2^e` for any integer `e`.
pub(crate) fn pow2(e: i64) -> BigRational {
    let p = BigRational::from_integer(BigInt::one() << e.unsigned_abs());
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

fn pow(base: i64, e: u32) -> BigRational {
    BigRational::from_integer(BigInt::from(base).pow(e))
}

/// Convert, failing with [`Error::NonIntegral`] on a fractional value.
pub(crate) fn exact(x: BigRational, what: &str) -> Result<BigInt> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::NonIntegral(format!("{what} = {x}")))
    }
}

pub(crate) fn check_n(n: u32, min: u32) -> Result<()> {
    if n < min {
        return Err(Error::OutOfRange(format!("arity n = {n} must be at least {min}")));
    }
    Ok(())
}

pub(crate) fn check_q(q: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::OutOfRange(format!("q = {q} must be at least 2")));
    }
    Ok(())
}

/// `|Gen(n, Q_{2^r})| = 2^{(r-2)n+1}(2^n-1)(2^{n-1}-1)`.
pub fn gen_formula(n: u32, r: u32) -> Result<BigInt> {
    check_n(n, 1)?;
    if r < 3 {
        return Err(Error::OutOfRange(format!("Q_2^{r} needs r >= 3")));
    }
    let v = pow2(((r - 2) * n + 1) as i64) * (pow2(n as i64) - int(1)) * (pow2(n as i64 - 1) - int(1));
    exact(v, "Gen(n, Q)")
}

/// Half the order of the normalizer of `Q_{2^r}` in `SU(2)`: 24 for `Q_8`, `2^r` beyond.
pub fn effective_normalizer_order(r: u32) -> u64 {
    if r == 3 {
        24
    } else {
        1 << r
    }
}

/// Number of `PU(2)`-components of tuples generating a copy of `Q_{2^r}`.
pub fn su2_orbits_formula(n: u32, r: u32) -> Result<BigInt> {
    let g = BigRational::from_integer(gen_formula(n, r)?);
    exact(g / int(effective_normalizer_order(r) as i64), "Gen / (|N|/2)")
}

/// `C(n, q+1)` in closed form.
pub fn c_formula(n: u32, q: u32) -> Result<BigInt> {
    check_n(n, 1)?;
    check_q(q)?;
    let n_ = n as i64;
    let a = pow2(n_ - 2) * (pow2(n_) - int(1)) * (pow2(n_ - 1) - int(1)) / int(3);
    let b = (pow2(n_) - int(1)) * (pow2((q as i64 - 2) * (n_ - 1)) - int(1)) * pow2(2 * n_ - 3);
    exact(a + b, "C(n, q+1)")
}

/// `C(n, q+1)` as the sum of per-`r` orbit counts.
pub fn c_sum(n: u32, q: u32) -> Result<BigInt> {
    check_q(q)?;
    (3..=q + 1).map(|r| su2_orbits_formula(n, r)).sum()
}

/// `M(n) = (2^n-1)(2^{n-1}-1)/3`.
pub fn m_formula(n: u32) -> Result<BigInt> {
    check_n(n, 1)?;
    let n_ = n as i64;
    exact((pow2(n_) - int(1)) * (pow2(n_ - 1) - int(1)) / int(3), "M(n)")
}

/// `M(n, q) = (2^n-1)(2^{(q-2)(n-1)}-1)2^{n-2}`.
pub fn m_q_formula(n: u32, q: u32) -> Result<BigInt> {
    check_n(n, 1)?;
    check_q(q)?;
    let n_ = n as i64;
    let v = (pow2(n_) - int(1)) * (pow2((q as i64 - 2) * (n_ - 1)) - int(1)) * pow2(n_ - 2);
    exact(v, "M(n, q)")
}

/// `(2^r-1)^n - 3(2^{r-1}-1)^n + 2(2^{r-2}-1)^n`: identity-free generating
/// tuples of `Q_{2^r}`, `r ≥ 4`.
fn identity_free_bracket(n: u32, r: u32) -> BigRational {
    let t = |e: u32| pow((1i64 << e) - 1, n);
    t(r) - int(3) * t(r - 1) + int(2) * t(r - 2)
}

/// `K(n, q+1)`, the number of non-abelian stable summands for `SU(2)`.
pub fn k_formula(n: u32, q: u32) -> Result<BigInt> {
    check_n(n, 1)?;
    check_q(q)?;
    let mut v = pow(7, n) / int(24) - pow(3, n) / int(8) + int(1) / int(12);
    for r in 4..=q + 1 {
        v += identity_free_bracket(n, r) * pow2(-(r as i64));
    }
    exact(v, "K(n, q+1)")
}

/// `N(n) = (3^{n-1}-1)/2`.
pub fn n_formula(n: u32) -> Result<BigInt> {
    check_n(n, 1)?;
    exact((pow(3, n - 1) - int(1)) / int(2), "N(n)")
}

/// `N(n, q) = Σ_{r=3}^{q} [(2^r-1)^n - 3(2^{r-1}-1)^n + 2(2^{r-2}-1)^n] / 2^r`.
pub fn n_q_formula(n: u32, q: u32) -> Result<BigInt> {
    check_n(n, 1)?;
    check_q(q)?;
    let v = (3..=q).fold(BigRational::zero(), |acc, r| {
        acc + identity_free_bracket(n, r) * pow2(-(r as i64))
    });
    exact(v, "N(n, q)")
}

/// Divide exactly by `2^e`, `e` possibly negative.
pub(crate) fn divide_pow2(x: &BigInt, e: i64, what: &str) -> Result<BigInt> {
    exact(BigRational::from_integer(x.clone()) * pow2(-e), what)
}
