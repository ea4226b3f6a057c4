//! Block structure of nil-2 tuples of monomial unitary matrices.
//!
//! For a diagonal `D`, the coarsest partition `a(D)` groups equal entries; the
//! centralizer of `D` is the block group `U(a(D))`. In a nil-2 tuple every
//! commutator is central, so each `x_k` lives in `U(a)` for the infimum `a` of
//! the commutator partitions. A permutation then makes the blocks consecutive.
//!
//! Indices are 1-based throughout, matching matrix notation.
//!
//! ```
//! use nilhom::um_blocks::{coarsest_partition, SetPartition};
//! use num_rational::Rational64;
//!
//! let d = [Rational64::new(1, 4), Rational64::new(1, 4), Rational64::new(0, 1)];
//! let p = coarsest_partition(&d);
//! assert_eq!(p, SetPartition::new(3, vec![vec![1, 2], vec![3]]).unwrap());
//! assert_eq!(p.to_string(), "{{1,2},{3}}");
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};

fn frac(x: Rational64) -> Rational64 {
    x - x.floor()
}

/// A partition of `{1..m}`; parts sorted, and ordered by their smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetPartition {
    m: usize,
    parts: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(m: usize, mut parts: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; m];
        for part in &mut parts {
            if part.is_empty() {
                return Err(Error::Precondition("empty part".into()));
            }
            part.sort_unstable();
            for &i in part.iter() {
                if i == 0 || i > m || std::mem::replace(&mut seen[i - 1], true) {
                    return Err(Error::Precondition(format!(
                        "{i} is out of range or repeated in a partition of 1..{m}"
                    )));
                }
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::Precondition(format!("{} is not covered", i + 1)));
        }
        parts.sort();
        Ok(SetPartition { m, parts })
    }

    /// The single part `{1..m}`.
    pub fn whole(m: usize) -> Self {
        let parts = if m == 0 { vec![] } else { vec![(1..=m).collect()] };
        SetPartition { m, parts }
    }

    /// Partition by equal labels.
    fn from_labels<K: Ord>(labels: impl IntoIterator<Item = K>) -> Self {
        let mut groups: BTreeMap<K, Vec<usize>> = BTreeMap::new();
        let mut m = 0;
        for (i, k) in labels.into_iter().enumerate() {
            groups.entry(k).or_default().push(i + 1);
            m = i + 1;
        }
        let mut parts: Vec<_> = groups.into_values().collect();
        parts.sort();
        SetPartition { m, parts }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    /// Index of the part containing `i`.
    pub fn part_of(&self, i: usize) -> usize {
        self.parts
            .iter()
            .position(|p| p.contains(&i))
            .expect("element of 1..m")
    }

    /// Whether every part of `self` lies inside a part of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        self.m == other.m
            && self
                .parts
                .iter()
                .all(|p| p.iter().all(|&i| other.part_of(i) == other.part_of(p[0])))
    }

    /// Common refinement.
    pub fn meet(&self, other: &SetPartition) -> Result<SetPartition> {
        if self.m != other.m {
            return Err(Error::Precondition(format!(
                "partitions of 1..{} and 1..{}",
                self.m, other.m
            )));
        }
        Ok(SetPartition::from_labels(
            (1..=self.m).map(|i| (self.part_of(i), other.part_of(i))),
        ))
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, part) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            let items: Vec<String> = part.iter().map(|i| i.to_string()).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        write!(f, "}}")
    }
}

/// `i` and `j` share a part iff `d_i ≡ d_j` modulo 1.
pub fn coarsest_partition(d: &[Rational64]) -> SetPartition {
    SetPartition::from_labels(d.iter().map(|&x| frac(x)))
}

/// Coarsest common refinement of a non-empty list.
pub fn partition_infimum(ps: &[SetPartition]) -> Result<SetPartition> {
    let (first, rest) = ps
        .split_first()
        .ok_or_else(|| Error::Precondition("infimum of no partitions".into()))?;
    rest.iter().try_fold(first.clone(), |acc, p| acc.meet(p))
}

/// A permutation of `{1..m}`, stored as its list of images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &i in &images {
            if i == 0 || i > m || std::mem::replace(&mut seen[i - 1], true) {
                return Err(Error::Precondition(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(m: usize) -> Self {
        Permutation((1..=m).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (j, &i) in self.0.iter().enumerate() {
            inv[i - 1] = j + 1;
        }
        Permutation(inv)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation(other.0.iter().map(|&i| self.apply(i)).collect())
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i8 {
        let m = self.len();
        let mut seen = vec![false; m];
        let mut cycles = 0;
        for start in 0..m {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.0[j] - 1;
            }
        }
        if (m - cycles) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// A permutation sending every part onto a run of consecutive integers.
///
/// Parts are laid out by decreasing size, ties broken by smallest element,
/// each part keeping its internal order. With `require_even`, an odd result is
/// fixed by swapping two images inside a part of size at least 2; if every
/// part is a singleton the layout is the identity, which is already even.
pub fn consecutivizing_permutation(p: &SetPartition, require_even: bool) -> Permutation {
    let mut order: Vec<&Vec<usize>> = p.parts.iter().collect();
    order.sort_by_key(|part| (std::cmp::Reverse(part.len()), part[0]));
    let mut images = vec![0; p.m];
    let mut next = 1;
    for part in &order {
        for &i in part.iter() {
            images[i - 1] = next;
            next += 1;
        }
    }
    if require_even && Permutation(images.clone()).sign() < 0 {
        if let Some(part) = order.iter().find(|part| part.len() >= 2) {
            images.swap(part[0] - 1, part[1] - 1);
        }
    }
    Permutation(images)
}

/// `Σ_j e^{2πiθ_j} E_{σ(j), j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialUnitary {
    perm: Permutation,
    phases: Vec<Rational64>,
}

impl MonomialUnitary {
    pub fn new(perm: Permutation, phases: Vec<Rational64>) -> Result<Self> {
        if perm.len() != phases.len() {
            return Err(Error::Precondition(format!(
                "{} phases for a permutation of {} points",
                phases.len(),
                perm.len()
            )));
        }
        Ok(MonomialUnitary {
            perm,
            phases: phases.into_iter().map(frac).collect(),
        })
    }

    pub fn diagonal(phases: Vec<Rational64>) -> Self {
        let m = phases.len();
        MonomialUnitary::new(Permutation::identity(m), phases).expect("sizes match")
    }

    pub fn permutation_matrix(perm: Permutation) -> Self {
        let m = perm.len();
        MonomialUnitary::new(perm, vec![Rational64::zero(); m]).expect("sizes match")
    }

    pub fn identity(m: usize) -> Self {
        Self::diagonal(vec![Rational64::zero(); m])
    }

    pub fn m(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn phases(&self) -> &[Rational64] {
        &self.phases
    }

    pub fn is_diagonal(&self) -> bool {
        self.perm == Permutation::identity(self.m())
    }

    pub fn mul(&self, other: &MonomialUnitary) -> MonomialUnitary {
        // (AB) e_j = e^{2πi(θB_j + θA_{σB(j)})} e_{σA σB (j)}
        let phases = (1..=self.m())
            .map(|j| other.phases[j - 1] + self.phases[other.perm.apply(j) - 1])
            .collect();
        MonomialUnitary::new(self.perm.compose(&other.perm), phases).expect("sizes match")
    }

    pub fn inverse(&self) -> MonomialUnitary {
        let mut phases = vec![Rational64::zero(); self.m()];
        for j in 1..=self.m() {
            phases[self.perm.apply(j) - 1] = -self.phases[j - 1];
        }
        MonomialUnitary::new(self.perm.inverse(), phases).expect("sizes match")
    }

    /// `x y x⁻¹ y⁻¹`.
    pub fn commutator(&self, other: &MonomialUnitary) -> MonomialUnitary {
        self.mul(other).mul(&self.inverse()).mul(&other.inverse())
    }

    /// `c x c⁻¹`.
    pub fn conjugate_by(&self, c: &MonomialUnitary) -> MonomialUnitary {
        c.mul(self).mul(&c.inverse())
    }

    /// Whether the matrix lies in `U(p)`, i.e. maps every part onto itself.
    pub fn is_block_supported(&self, p: &SetPartition) -> bool {
        (1..=self.m()).all(|j| p.part_of(self.perm.apply(j)) == p.part_of(j))
    }
}

impl fmt::Display for MonomialUnitary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let phases: Vec<String> = self.phases.iter().map(|t| t.to_string()).collect();
        write!(f, "({:?}, [{}])", self.perm.0, phases.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockNormalForm {
    pub partition: SetPartition,
    pub permutation: Permutation,
    pub tuple: Vec<MonomialUnitary>,
}

/// Align a nil-2 tuple of monomial unitaries to consecutive diagonal blocks.
pub fn nil2_block_normalize(tuple: &[MonomialUnitary], require_even: bool) -> Result<BlockNormalForm> {
    let m = tuple
        .first()
        .map(MonomialUnitary::m)
        .ok_or_else(|| Error::Precondition("empty tuple".into()))?;
    if tuple.iter().any(|x| x.m() != m) {
        return Err(Error::Precondition("matrices of different sizes".into()));
    }
    let mut partition = SetPartition::whole(m);
    for (i, x) in tuple.iter().enumerate() {
        for y in &tuple[i + 1..] {
            let c = x.commutator(y);
            if !c.is_diagonal() {
                return Err(Error::Precondition(format!("commutator {c} is not diagonal")));
            }
            if tuple.iter().any(|z| c.commutator(z) != MonomialUnitary::identity(m)) {
                return Err(Error::Precondition(format!(
                    "commutator {c} is not central; tuple is not nil-2"
                )));
            }
            partition = partition.meet(&coarsest_partition(&c.phases))?;
        }
    }
    if let Some(x) = tuple.iter().find(|x| !x.is_block_supported(&partition)) {
        return Err(Error::InvariantViolation(format!(
            "{x} is not supported on the blocks {partition}"
        )));
    }
    let permutation = consecutivizing_permutation(&partition, require_even);
    let p = MonomialUnitary::permutation_matrix(permutation.clone());
    Ok(BlockNormalForm {
        partition,
        tuple: tuple.iter().map(|x| x.conjugate_by(&p)).collect(),
        permutation,
    })
}
