use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector over the ring's variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub(crate) Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self | o`.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        Monomial(o.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn coprime(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(&a, &b)| a == 0 || b == 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic, graded by the variables' degrees.
    #[default]
    WeightedGrevlex,
    /// Graded reverse lexicographic with every variable of degree 1
    /// (the convention of Singular's `dp`).
    StandardGrevlex,
}

/// Variables with positive integer degrees, in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRing {
    names: Vec<String>,
    degrees: Vec<u32>,
    order: MonomialOrder,
    /// The first `elim` variables form a block that is compared first.
    elim: usize,
}

fn valid_name(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl GradedRing {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, u32)>) -> Result<Self> {
        let (names, degrees): (Vec<String>, Vec<u32>) =
            vars.into_iter().map(|(n, d)| (n.into(), d)).unzip();
        let mut seen = HashMap::new();
        for (i, (name, &d)) in names.iter().zip(&degrees).enumerate() {
            if !valid_name(name) {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("`{name}` is not a variable name"),
                });
            }
            if d == 0 {
                return Err(Error::OutOfRange(format!("variable {name} has degree 0")));
            }
            if seen.insert(name.clone(), i).is_some() {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("variable {name} declared twice"),
                });
            }
        }
        if names.len() > u16::MAX as usize {
            return Err(Error::OutOfRange("too many variables".into()));
        }
        Ok(GradedRing {
            names,
            degrees,
            order: MonomialOrder::default(),
            elim: 0,
        })
    }

    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        self.order = order;
        self
    }

    /// A copy with a new variable `t` of degree 0 in front, under an order
    /// that eliminates it.
    pub(crate) fn with_elimination_variable(&self) -> Self {
        let mut names = vec!["_t".to_string()];
        names.extend(self.names.iter().cloned());
        let mut degrees = vec![0];
        degrees.extend(&self.degrees);
        GradedRing {
            names,
            degrees,
            order: self.order,
            elim: 1,
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Weighted degree.
    pub fn degree(&self, m: &Monomial) -> u32 {
        m.0.iter().zip(&self.degrees).map(|(&e, &d)| e as u32 * d).sum()
    }

    fn order_degree(&self, m: &Monomial) -> u32 {
        match self.order {
            MonomialOrder::WeightedGrevlex => self.degree(m),
            MonomialOrder::StandardGrevlex => m.0[self.elim..].iter().map(|&e| e as u32).sum(),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let block = |m: &Monomial| m.0[..self.elim].iter().map(|&e| e as u32).sum::<u32>();
        block(a)
            .cmp(&block(b))
            .then_with(|| self.order_degree(a).cmp(&self.order_degree(b)))
            .then_with(|| {
                // reverse lexicographic: the last differing exponent decides, smaller wins
                for (x, y) in a.0.iter().zip(&b.0).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            })
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (name, &e) in self.names.iter().zip(&m.0) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = self
            .names
            .iter()
            .zip(&self.degrees)
            .map(|(n, d)| format!("{n}:{d}"))
            .collect();
        write!(f, "{}", vars.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn grevlex_examples() {
        let r = GradedRing::new([("x", 1), ("y", 1), ("z", 1)]).unwrap();
        // x^2 > xy > y^2 > xz > yz > z^2
        let seq = [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[1, 0, 1]), m(&[0, 1, 1]), m(&[0, 0, 2])];
        for w in seq.windows(2) {
            assert_eq!(r.cmp(&w[0], &w[1]), Ordering::Greater);
        }
        assert_eq!(r.cmp(&m(&[0, 0, 1]), &m(&[2, 0, 0])), Ordering::Less);
    }

    #[test]
    fn weights_change_the_order() {
        let r = GradedRing::new([("y", 1), ("z", 2)]).unwrap();
        let y3 = m(&[3, 0]);
        let z = m(&[0, 1]);
        assert_eq!(r.cmp(&y3, &z), Ordering::Greater);
        assert_eq!(r.degree(&y3), 3);
        let y2 = m(&[2, 0]);
        assert_eq!(r.cmp(&y2, &z), Ordering::Greater);
        let r = r.with_order(MonomialOrder::StandardGrevlex);
        assert_eq!(r.cmp(&y2, &z), Ordering::Greater);
        assert_eq!(r.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn elimination_block_dominates() {
        let r = GradedRing::new([("x", 1)]).unwrap().with_elimination_variable();
        assert_eq!(r.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn ring_validation() {
        assert!(GradedRing::new([("x", 1), ("x", 2)]).is_err());
        assert!(GradedRing::new([("x", 0)]).is_err());
        assert!(GradedRing::new([("1x", 1)]).is_err());
        let r = GradedRing::new([("y1", 1), ("b1", 2)]).unwrap();
        assert_eq!(r.to_string(), "y1:1, b1:2");
        assert!(matches!(r.index_of("q"), Err(Error::UnknownVariable(_))));
    }
}
