//! Structural constructions on representations: labeled direct sums of
//! projectives, projective covers, kernels and cokernels realized as explicit
//! representations, and minimal projective presentations.

use crate::linalg::{self, Matrix, Scalar};
use crate::quiver::{Path, Quiver};
use crate::repcat::{RepMorphism, Representation};
use num_traits::Zero;

/// A direct sum of indecomposable projectives with a labeled basis: the basis
/// of the vertex space at `v` is the list of pairs `(summand, path)` with
/// `path` running from the summand's head vertex to `v`. The generator of
/// summand `s` is the trivial path at its head.
#[derive(Debug, Clone)]
pub struct ProjSum {
    pub heads: Vec<usize>,
    /// per vertex (0-based), the ordered basis labels
    pub basis: Vec<Vec<(usize, Path)>>,
    pub rep: Representation,
}

impl ProjSum {
    pub fn new(q: &Quiver, heads: Vec<usize>) -> ProjSum {
        let nv = q.vertex_count();
        let mut basis: Vec<Vec<(usize, Path)>> = vec![Vec::new(); nv];
        for (s, &h) in heads.iter().enumerate() {
            for p in q.paths_from(h) {
                basis[p.target - 1].push((s, p));
            }
        }
        let dims: Vec<usize> = basis.iter().map(|b| b.len()).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(aidx, a)| {
                let src = &basis[a.source - 1];
                let dst = &basis[a.target - 1];
                let mut m = Matrix::zero(dst.len(), src.len());
                for (c, (s, p)) in src.iter().enumerate() {
                    let mut arrows = p.arrows.clone();
                    arrows.push(aidx);
                    let r = dst
                        .iter()
                        .position(|(t, pt)| t == s && pt.arrows == arrows)
                        .expect("extended path must exist in the basis");
                    m[(r, c)] = linalg::scalar(1);
                }
                m
            })
            .collect();
        let rep = Representation::new(q, dims, maps).expect("projective sum is well formed");
        ProjSum { heads, basis, rep }
    }

    pub fn summands(&self) -> usize {
        self.heads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heads.is_empty()
    }

    /// Basis index of the generator of summand `s` inside the vertex space at
    /// its head.
    pub fn gen_coord(&self, s: usize) -> (usize, usize) {
        let head = self.heads[s];
        let idx = self.basis[head - 1]
            .iter()
            .position(|(t, p)| *t == s && p.is_trivial())
            .expect("generator label must exist");
        (head, idx)
    }

    /// The morphism `self.rep -> target` determined by generator images;
    /// `gen_images[s]` is a coordinate vector in `target` at the head of `s`.
    pub fn morphism_from_gens(
        &self,
        target: &Representation,
        gen_images: &[Vec<Scalar>],
    ) -> RepMorphism {
        assert_eq!(gen_images.len(), self.heads.len());
        let nv = self.basis.len();
        let mats = (0..nv)
            .map(|v| {
                let labels = &self.basis[v];
                let mut m = Matrix::zero(target.dims()[v], labels.len());
                for (c, (s, p)) in labels.iter().enumerate() {
                    let action = target.path_action(p);
                    let col = action.mul_vec(&gen_images[*s]);
                    m.set_column(c, &col);
                }
                m
            })
            .collect();
        RepMorphism { mats }
    }
}

/// The radical of a representation: at each vertex, the span of the images of
/// the incoming arrow maps. Returned as one column-basis matrix per vertex.
pub fn radical_columns(q: &Quiver, m: &Representation) -> Vec<Matrix> {
    let nv = q.vertex_count();
    (0..nv)
        .map(|v| {
            let mut cols: Vec<Vec<Scalar>> = Vec::new();
            for (aidx, a) in q.arrows().iter().enumerate() {
                if a.target - 1 == v {
                    let ma = m.map(aidx);
                    for c in 0..ma.cols() {
                        cols.push(ma.column(c));
                    }
                }
            }
            Matrix::from_columns(m.dims()[v], &cols)
        })
        .collect()
}

/// A projective cover: a labeled projective sum with a surjection onto `m`.
#[derive(Debug, Clone)]
pub struct Cover {
    pub proj: ProjSum,
    pub map: RepMorphism,
}

/// Minimal projective cover, built by lifting a basis of the top `m / rad m`.
pub fn projective_cover(q: &Quiver, m: &Representation) -> Cover {
    let rad = radical_columns(q, m);
    let mut heads = Vec::new();
    let mut gens: Vec<Vec<Scalar>> = Vec::new();
    for v in 1..=q.vertex_count() {
        let dim = m.dims()[v - 1];
        let chosen = linalg::extend_to_basis(&rad[v - 1], &Matrix::identity(dim));
        for c in chosen {
            heads.push(v);
            let mut e = vec![Scalar::zero(); dim];
            e[c] = linalg::scalar(1);
            gens.push(e);
        }
    }
    let proj = ProjSum::new(q, heads);
    let map = proj.morphism_from_gens(m, &gens);
    // Nakayama's lemma: lifting a basis of the top gives a surjection.
    for v in 1..=q.vertex_count() {
        assert_eq!(
            linalg::rank(map.at(v)),
            m.dims()[v - 1],
            "projective cover must be surjective"
        );
    }
    Cover { proj, map }
}

/// A subrepresentation realized on its own coordinates, with the inclusion.
#[derive(Debug, Clone)]
pub struct SubRep {
    pub rep: Representation,
    pub incl: RepMorphism,
}

/// The kernel of a morphism `f: src -> dst`, as an explicit subrepresentation
/// of `src`.
pub fn kernel_subrep(q: &Quiver, f: &RepMorphism, src: &Representation) -> SubRep {
    let nv = q.vertex_count();
    let bases: Vec<Matrix> = (0..nv).map(|v| linalg::kernel_basis(&f.mats[v])).collect();
    let dims: Vec<usize> = bases.iter().map(|b| b.cols()).collect();
    let maps: Vec<Matrix> = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(aidx, a)| {
            let s = a.source - 1;
            let t = a.target - 1;
            let image = src.map(aidx).mul(&bases[s]);
            // the kernel is a subrepresentation, so this solve must succeed
            linalg::solve_matrix(&bases[t], &image)
                .expect("kernel must be closed under the arrow action")
        })
        .collect();
    let rep = Representation::new(q, dims, maps).expect("kernel representation is well formed");
    let incl = RepMorphism { mats: bases };
    SubRep { rep, incl }
}

/// A quotient representation with the projection from `dst`.
#[derive(Debug, Clone)]
pub struct QuotRep {
    pub rep: Representation,
    pub proj: RepMorphism,
}

/// The cokernel of `f: src -> dst`, realized on complement coordinates.
pub fn cokernel_rep(q: &Quiver, f: &RepMorphism, dst: &Representation) -> QuotRep {
    let nv = q.vertex_count();
    let mut proj_mats = Vec::new();
    let mut incl_mats = Vec::new();
    for v in 0..nv {
        let dim = dst.dims()[v];
        let image = &f.mats[v];
        let chosen = linalg::extend_to_basis(image, &Matrix::identity(dim));
        let comp = Matrix::from_columns(
            dim,
            &chosen
                .iter()
                .map(|&c| {
                    let mut e = vec![Scalar::zero(); dim];
                    e[c] = linalg::scalar(1);
                    e
                })
                .collect::<Vec<_>>(),
        );
        // projection: express each standard basis vector modulo the image in
        // the complement coordinates
        let joined = image.hcat(&comp);
        let sol = linalg::solve_matrix(&joined, &Matrix::identity(dim))
            .expect("image and complement span the space");
        let mut p = Matrix::zero(comp.cols(), dim);
        for r in 0..comp.cols() {
            for c in 0..dim {
                p[(r, c)] = sol[(image.cols() + r, c)].clone();
            }
        }
        proj_mats.push(p);
        incl_mats.push(comp);
    }
    let dims: Vec<usize> = incl_mats.iter().map(|m| m.cols()).collect();
    let maps: Vec<Matrix> = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(aidx, a)| {
            let s = a.source - 1;
            let t = a.target - 1;
            proj_mats[t].mul(&dst.map(aidx).mul(&incl_mats[s]))
        })
        .collect();
    let rep = Representation::new(q, dims, maps).expect("cokernel representation is well formed");
    QuotRep { rep, proj: RepMorphism { mats: proj_mats } }
}

/// A minimal projective presentation `0 -> p1 -> p0 -> m -> 0` (two terms
/// suffice: path algebras of acyclic quivers are hereditary, so the kernel of
/// a cover is projective).
#[derive(Debug, Clone)]
pub struct Presentation {
    pub p1: ProjSum,
    pub p0: ProjSum,
    /// `p1.rep -> p0.rep`, injective
    pub d: RepMorphism,
    /// `p0.rep -> m`, the cover
    pub cover: RepMorphism,
}

pub fn minimal_presentation(q: &Quiver, m: &Representation) -> Presentation {
    let Cover { proj: p0, map: cover } = projective_cover(q, m);
    let kernel = kernel_subrep(q, &cover, &p0.rep);
    // express the kernel as a labeled projective sum via its own cover, which
    // must be an isomorphism
    let Cover { proj: p1, map: iso } = projective_cover(q, &kernel.rep);
    for v in 1..=q.vertex_count() {
        assert_eq!(
            iso.at(v).rows(),
            iso.at(v).cols(),
            "kernel of a cover must be projective (hereditary algebra)"
        );
    }
    let d = kernel.incl.compose(&iso);
    Presentation { p1, p0, d, cover }
}
