//! The Nakayama correspondence between projectives and injectives: labeled
//! injective sums, and the functor sending `P_i` to `I_i` applied to explicit
//! morphisms between projective sums. This is the workhorse behind both the
//! AR translate and the Serre functor.

use crate::linalg::Matrix;
use crate::quiver::{Path, Quiver};
use crate::repcat::structure::ProjSum;
use crate::repcat::{RepMorphism, Representation};
use num_traits::Zero;

/// A direct sum of indecomposable injectives with a labeled basis: the basis
/// at vertex `v` is the list of pairs `(summand, path)` where `path` runs
/// from `v` to the summand's head (the space is the dual of the path span).
#[derive(Debug, Clone)]
pub struct InjSum {
    pub heads: Vec<usize>,
    pub basis: Vec<Vec<(usize, Path)>>,
    pub rep: Representation,
}

impl InjSum {
    pub fn new(q: &Quiver, heads: Vec<usize>) -> InjSum {
        let nv = q.vertex_count();
        let mut basis: Vec<Vec<(usize, Path)>> = vec![Vec::new(); nv];
        for (s, &h) in heads.iter().enumerate() {
            for v in 1..=nv {
                for p in q.paths_between(v, h) {
                    basis[v - 1].push((s, p));
                }
            }
        }
        let dims: Vec<usize> = basis.iter().map(|b| b.len()).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(aidx, a)| {
                let src = &basis[a.source - 1]; // paths source -> head
                let dst = &basis[a.target - 1]; // paths target -> head
                let mut m = Matrix::zero(dst.len(), src.len());
                // dual of precomposition: entry is 1 when the source path is
                // the arrow followed by the target path
                for (r, (t, pr)) in dst.iter().enumerate() {
                    let mut composed = vec![aidx];
                    composed.extend_from_slice(&pr.arrows);
                    if let Some(c) = src
                        .iter()
                        .position(|(s2, ps)| s2 == t && ps.arrows == composed)
                    {
                        m[(r, c)] = crate::linalg::scalar(1);
                    }
                }
                m
            })
            .collect();
        let rep = Representation::new(q, dims, maps).expect("injective sum is well formed");
        InjSum { heads, basis, rep }
    }
}

/// Apply the Nakayama functor to a morphism `g: a.rep -> b.rep` between
/// labeled projective sums, producing the corresponding morphism between the
/// injective sums on the same heads.
///
/// A component `P_h -> P_k` is a linear combination of paths `k -> h`; the
/// functor sends the path `p: k -> h` to the map `I_h -> I_k` given, at each
/// vertex `v`, by the transpose of "compose with p" between path spaces.
pub fn nakayama_morphism(q: &Quiver, a: &ProjSum, b: &ProjSum, g: &RepMorphism) -> RepMorphism {
    let na = InjSum::new(q, a.heads.clone());
    let nb = InjSum::new(q, b.heads.clone());
    let nv = q.vertex_count();
    let mut mats: Vec<Matrix> = (0..nv)
        .map(|v| Matrix::zero(nb.basis[v].len(), na.basis[v].len()))
        .collect();

    for (s, &h) in a.heads.iter().enumerate() {
        let (gen_vertex, gen_idx) = a.gen_coord(s);
        debug_assert_eq!(gen_vertex, h);
        // read the component paths of g out of the generator column
        let col = g.mats[h - 1].column(gen_idx);
        for (row, (t, qpath)) in b.basis[h - 1].iter().enumerate() {
            let coeff = col[row].clone();
            if coeff.is_zero() {
                continue;
            }
            // qpath runs from heads_b[t] to h; it induces I_h -> I_k with
            // k = heads_b[t]
            for v in 0..nv {
                for (r, (t2, rpath)) in nb.basis[v].iter().enumerate() {
                    if t2 != t {
                        continue;
                    }
                    // rpath: v -> heads_b[t]; composed: v -> h
                    let composed = rpath.then(qpath);
                    for (c, (s2, ppath)) in na.basis[v].iter().enumerate() {
                        if s2 == &s && ppath.arrows == composed.arrows {
                            let v2 = &mats[v][(r, c)] + &coeff;
                            mats[v][(r, c)] = v2;
                        }
                    }
                }
            }
        }
    }
    RepMorphism { mats }
}

/// The injective sums corresponding to a projective sum's heads.
pub fn nakayama_object(q: &Quiver, a: &ProjSum) -> InjSum {
    InjSum::new(q, a.heads.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcat::structure::minimal_presentation;
    use crate::repcat::{interval_rep, Interval};

    #[test]
    fn injective_sum_matches_injective_rep() {
        let q = Quiver::linear_a(3);
        for i in 1..=3 {
            let single = InjSum::new(&q, vec![i]);
            let reference = q.injective_rep(i).unwrap();
            assert_eq!(single.rep.dims(), reference.dims());
        }
    }

    #[test]
    fn nakayama_preserves_morphism_validity() {
        let q = Quiver::linear_a(3);
        let m = interval_rep(&q, Interval { lo: 1, hi: 2 });
        let pres = minimal_presentation(&q, &m);
        let nd = nakayama_morphism(&q, &pres.p1, &pres.p0, &pres.d);
        let na = nakayama_object(&q, &pres.p1);
        let nb = nakayama_object(&q, &pres.p0);
        assert!(nd.is_valid(&q, &na.rep, &nb.rep));
    }

    #[test]
    fn nakayama_of_identity_is_identity() {
        let q = Quiver::linear_a(3);
        let ps = ProjSum::new(&q, vec![1, 3]);
        let id = RepMorphism::identity(&ps.rep);
        let nid = nakayama_morphism(&q, &ps, &ps, &id);
        let ni = nakayama_object(&q, &ps);
        assert_eq!(nid, RepMorphism::identity(&ni.rep));
    }

    #[test]
    fn nakayama_is_functorial_on_a_composite() {
        let q = Quiver::linear_a(3);
        let a = ProjSum::new(&q, vec![3]);
        let b = ProjSum::new(&q, vec![2]);
        let c = ProjSum::new(&q, vec![1]);
        // inclusions P_3 -> P_2 -> P_1
        let f = crate::repcat::hom_basis(&q, &a.rep, &b.rep).pop().unwrap();
        let g = crate::repcat::hom_basis(&q, &b.rep, &c.rep).pop().unwrap();
        let gf = g.compose(&f);
        let lhs = nakayama_morphism(&q, &a, &c, &gf);
        let rhs = nakayama_morphism(&q, &b, &c, &g)
            .compose(&nakayama_morphism(&q, &a, &b, &f));
        assert_eq!(lhs, rhs);
    }
}
