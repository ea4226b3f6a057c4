use super::groebner::GroebnerBasis;
use super::ring::Monomial;

/// `dims[d] = dim_{F₂} (P/I)_d` for `0 ≤ d ≤ D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertFunction {
    pub dims: Vec<u64>,
}

impl HilbertFunction {
    pub fn max_degree(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }
}

/// Count standard monomials (those outside the leading-term ideal) by
/// weighted degree. Valid for ideals homogeneous in the weighted grading.
///
/// Divisibility is inherited by multiples, so the search stops at the first
/// non-standard monomial along each branch.
pub fn hilbert_from_basis(gb: &GroebnerBasis, max_degree: u32) -> HilbertFunction {
    let ring = gb.ring();
    let leads: Vec<&Monomial> = gb.leading_monomials().collect();
    let mut dims = vec![0u64; max_degree as usize + 1];

    fn walk(
        start: usize,
        m: &mut Monomial,
        deg: u32,
        degrees: &[u32],
        leads: &[&Monomial],
        dims: &mut [u64],
    ) {
        if leads.iter().any(|l| l.divides(m)) {
            return;
        }
        dims[deg as usize] += 1;
        for v in start..degrees.len() {
            let d = deg + degrees[v];
            if d as usize >= dims.len() {
                continue;
            }
            m.0[v] += 1;
            walk(v, m, d, degrees, leads, dims);
            m.0[v] -= 1;
        }
    }

    let mut m = Monomial::one(ring.nvars());
    walk(0, &mut m, 0, ring.degrees(), &leads, &mut dims);
    HilbertFunction { dims }
}
