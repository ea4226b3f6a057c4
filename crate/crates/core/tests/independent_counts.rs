//! Orbit counts recomputed without the permutation machinery: tuples are
//! conjugated directly, as unit quaternions for `Q8` and by group
//! multiplication for `Q16 ⊂ Q32`.

use std::collections::{BTreeSet, HashSet};

use nilhom::hom_count::{conjugation_orbit_count, gen_formula, su2_orbits_formula};
use nilhom::quat_group::{GroupId, QuatElem};
use nilhom::su2_exact::{binary_octahedral, quaternion_group_elements, ExtQuaternion};

fn tuples<T: Clone>(elems: &[T], n: usize) -> Vec<Vec<T>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                elems.iter().map(move |e| {
                    let mut t = t.clone();
                    t.push(e.clone());
                    t
                })
            })
            .collect();
    }
    out
}

fn closure_size<T: Clone + Eq + std::hash::Hash>(gens: &[T], one: T, mul: impl Fn(&T, &T) -> T) -> usize {
    let mut seen = HashSet::from([one.clone()]);
    let mut frontier = vec![one];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = mul(&x, g);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.len()
}

#[test]
fn q8_orbits_under_binary_octahedral_matrices() {
    let q8 = quaternion_group_elements(GroupId::quaternion(3).unwrap()).unwrap();
    let bo = binary_octahedral().unwrap();
    for n in 1..=4 {
        let generating: Vec<Vec<ExtQuaternion>> = tuples(&q8, n)
            .into_iter()
            .filter(|t| closure_size(t, ExtQuaternion::identity(), |a, b| a.mul(b)) == 8)
            .collect();
        assert_eq!(gen_formula(n as u32, 3).unwrap(), generating.len().into(), "n = {n}");

        let canonical = |t: &[ExtQuaternion]| -> Vec<ExtQuaternion> {
            bo.iter()
                .map(|g| t.iter().map(|x| x.conjugate(g)).collect::<Vec<_>>())
                .min()
                .unwrap()
        };
        let orbits: BTreeSet<Vec<ExtQuaternion>> = generating.iter().map(|t| canonical(t)).collect();
        assert_eq!(su2_orbits_formula(n as u32, 3).unwrap(), orbits.len().into(), "n = {n}");
        if n >= 2 {
            assert_eq!(conjugation_orbit_count(n as u32, 3).unwrap().orbits, orbits.len() as u64);
        }

        // sign changes that stay in the orbit: always a Klein four-group
        for t in generating.iter().take(50) {
            let c = canonical(t);
            let stabilizer = (0..1u32 << n)
                .filter(|mask| {
                    let signed: Vec<ExtQuaternion> = t
                        .iter()
                        .enumerate()
                        .map(|(i, x)| if mask >> i & 1 == 1 { x.neg() } else { *x })
                        .collect();
                    canonical(&signed) == c
                })
                .count();
            assert_eq!(stabilizer, 4);
        }
    }
}

#[test]
fn q16_orbits_under_q32() {
    let q16 = GroupId::quaternion(4).unwrap();
    let q32 = q16.parent().unwrap();
    let inside: Vec<QuatElem> = q16.elements().map(|a| q16.embed_into_parent(a)).collect();
    let conjugators: Vec<QuatElem> = q32.elements().collect();
    for n in 1..=3 {
        let generating: Vec<Vec<QuatElem>> = tuples(&inside, n)
            .into_iter()
            .filter(|t| closure_size(t, q32.identity(), |a, b| q32.mul(*a, *b)) == 16)
            .collect();
        assert_eq!(gen_formula(n as u32, 4).unwrap(), generating.len().into());
        let orbits: BTreeSet<Vec<(u8, u64)>> = generating
            .iter()
            .map(|t| {
                conjugators
                    .iter()
                    .map(|&g| {
                        t.iter()
                            .map(|&x| {
                                let y = q32.conjugate(x, g);
                                let i = q32.index_of(y);
                                (u8::from(i >= q32.modulus() as usize), i as u64)
                            })
                            .collect::<Vec<_>>()
                    })
                    .min()
                    .unwrap()
            })
            .collect();
        assert_eq!(su2_orbits_formula(n as u32, 4).unwrap(), orbits.len().into(), "n = {n}");
    }
}

#[test]
fn small_values() {
    use nilhom::hom_count::{c_formula, k_formula, n_formula};
    // C(n, q+1) for (n, q+1) = (2,3), (2,4), (3,3)
    assert_eq!(c_formula(2, 2).unwrap(), 1.into());
    assert_eq!(c_formula(2, 3).unwrap(), 7.into());
    assert_eq!(c_formula(3, 2).unwrap(), 14.into());
    assert_eq!(k_formula(1, 2).unwrap(), 0.into());
    assert_eq!(n_formula(1).unwrap(), 0.into());
}
