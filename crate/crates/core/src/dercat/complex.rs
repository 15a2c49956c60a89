//! Two-term complexes and chain maps modulo homotopy.
//!
//! A complex has a `sub` term in relative position 1 and a `quot` term in
//! position 0, with an injective differential; single-term complexes carry an
//! empty sub term. Chain maps out of a projective-termed complex are
//! parameterized by generator images, which keeps every solve small: a map is
//! stored as one coordinate vector per source summand and aligned block.

use crate::linalg::{self, Matrix, Scalar};
use crate::quiver::Quiver;
use crate::repcat::nakayama::{nakayama_morphism, InjSum};
use crate::repcat::structure::ProjSum;
use crate::repcat::{RepMorphism, Representation};
use num_traits::Zero;

/// A term of a complex: a labeled projective or injective sum.
#[derive(Debug, Clone)]
pub enum Term {
    Proj(ProjSum),
    Inj(InjSum),
}

impl Term {
    pub fn rep(&self) -> &Representation {
        match self {
            Term::Proj(p) => &p.rep,
            Term::Inj(i) => &i.rep,
        }
    }

    pub fn proj(&self) -> &ProjSum {
        match self {
            Term::Proj(p) => p,
            Term::Inj(_) => panic!("expected a projective term"),
        }
    }

    pub fn summand_heads(&self) -> &[usize] {
        match self {
            Term::Proj(p) => &p.heads,
            Term::Inj(i) => &i.heads,
        }
    }
}

/// Minimal two-term complex; `d: sub -> quot`.
#[derive(Debug, Clone)]
pub struct Complex2 {
    pub sub: Term,
    pub quot: Term,
    pub d: RepMorphism,
}

impl Complex2 {
    fn part(&self, p: Part) -> &Term {
        match p {
            Part::Sub => &self.sub,
            Part::Quot => &self.quot,
        }
    }
}

/// Which term of a two-term complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Part {
    Sub,
    Quot,
}

/// The aligned (source part, destination part) pairs for a given relative
/// shift `rel = dst offset - src offset`. Outside `|rel| <= 1` no terms
/// align and every chain map is zero.
pub fn aligned(rel: i64) -> &'static [(Part, Part)] {
    match rel {
        0 => &[(Part::Sub, Part::Sub), (Part::Quot, Part::Quot)],
        1 => &[(Part::Sub, Part::Quot)],
        -1 => &[(Part::Quot, Part::Sub)],
        _ => &[],
    }
}

/// One aligned block of a chain map: per source summand `s`, the image of its
/// generator as a coordinate vector in the destination term at the head of
/// `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub src_part: Part,
    pub dst_part: Part,
    pub params: Vec<Vec<Scalar>>,
}

/// A chain map between canonical realizations, at relative shift `rel`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMap {
    pub rel: i64,
    pub blocks: Vec<Block>,
}

impl ChainMap {
    pub fn empty(rel: i64) -> ChainMap {
        ChainMap { rel, blocks: Vec::new() }
    }

    pub fn zero(src: &Complex2, dst: &Complex2, rel: i64) -> ChainMap {
        let blocks = aligned(rel)
            .iter()
            .map(|&(sp, dp)| {
                let heads = src.part(sp).summand_heads();
                let params = heads
                    .iter()
                    .map(|&h| vec![Scalar::zero(); dst.part(dp).rep().dims()[h - 1]])
                    .collect();
                Block { src_part: sp, dst_part: dp, params }
            })
            .collect();
        ChainMap { rel, blocks }
    }

    pub fn add(&self, other: &ChainMap) -> ChainMap {
        assert_eq!(self.rel, other.rel, "cannot add chain maps at different shifts");
        let blocks = self
            .blocks
            .iter()
            .zip(other.blocks.iter())
            .map(|(a, b)| {
                assert_eq!((a.src_part, a.dst_part), (b.src_part, b.dst_part));
                let params = a
                    .params
                    .iter()
                    .zip(b.params.iter())
                    .map(|(x, y)| x.iter().zip(y.iter()).map(|(u, v)| u + v).collect())
                    .collect();
                Block { src_part: a.src_part, dst_part: a.dst_part, params }
            })
            .collect();
        ChainMap { rel: self.rel, blocks }
    }

    pub fn scale(&self, c: &Scalar) -> ChainMap {
        let blocks = self
            .blocks
            .iter()
            .map(|b| Block {
                src_part: b.src_part,
                dst_part: b.dst_part,
                params: b.params.iter().map(|p| p.iter().map(|x| x * c).collect()).collect(),
            })
            .collect();
        ChainMap { rel: self.rel, blocks }
    }

    /// All parameters, concatenated in canonical block/summand order.
    pub fn flatten(&self) -> Vec<Scalar> {
        let mut out = Vec::new();
        for b in &self.blocks {
            for p in &b.params {
                out.extend(p.iter().cloned());
            }
        }
        out
    }

    fn block_mut(&mut self, sp: Part, dp: Part) -> &mut Block {
        self.blocks
            .iter_mut()
            .find(|b| b.src_part == sp && b.dst_part == dp)
            .expect("block must be aligned for this shift")
    }

    /// Materialize one block as a full morphism of representations.
    pub fn block_morphism(&self, src: &Complex2, dst: &Complex2, sp: Part, dp: Part) -> RepMorphism {
        let block = self
            .blocks
            .iter()
            .find(|b| b.src_part == sp && b.dst_part == dp)
            .expect("requested block is not aligned");
        src.part(sp).proj().morphism_from_gens(dst.part(dp).rep(), &block.params)
    }
}

/// Evaluate the morphism determined by generator images on an arbitrary
/// vector `w` in the source projective sum at `vertex` (coordinates over the
/// labeled basis).
fn eval_from_gens(
    src: &ProjSum,
    dst_rep: &Representation,
    params: &[Vec<Scalar>],
    vertex: usize,
    w: &[Scalar],
) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); dst_rep.dims()[vertex - 1]];
    for (idx, (s, path)) in src.basis[vertex - 1].iter().enumerate() {
        if w[idx].is_zero() {
            continue;
        }
        let action = dst_rep.path_action(path);
        let col = action.mul_vec(&params[*s]);
        for (o, c) in out.iter_mut().zip(col.iter()) {
            *o += &w[idx] * c;
        }
    }
    out
}

/// The identity chain map on a projective-termed complex.
pub fn identity_chain_map(c: &Complex2) -> ChainMap {
    let mut id = ChainMap::zero(c, c, 0);
    for &(sp, _) in aligned(0) {
        let ps = c.part(sp).proj();
        let block = id.block_mut(sp, sp);
        for s in 0..ps.summands() {
            let (head, idx) = ps.gen_coord(s);
            let mut v = vec![Scalar::zero(); ps.rep.dims()[head - 1]];
            v[idx] = linalg::scalar(1);
            block.params[s] = v;
        }
    }
    id
}

/// The space of chain maps modulo homotopy between two complexes at a given
/// relative shift. The source must have projective terms; the destination can
/// be any explicit complex.
pub struct MapSpace {
    pub rel: i64,
    flat_len: usize,
    chain_basis: Vec<ChainMap>,
    homotopy_flat: Matrix,
    class_idx: Vec<usize>,
}

impl MapSpace {
    pub fn class_dim(&self) -> usize {
        self.class_idx.len()
    }

    /// A representative chain map of the i-th basis class.
    pub fn class_rep(&self, i: usize) -> ChainMap {
        self.chain_basis[self.class_idx[i]].clone()
    }

    pub fn chain_dim(&self) -> usize {
        self.chain_basis.len()
    }

    pub fn chain_rep(&self, i: usize) -> ChainMap {
        self.chain_basis[i].clone()
    }

    pub fn flat_len(&self) -> usize {
        self.flat_len
    }

    pub fn homotopy_flat(&self) -> &Matrix {
        &self.homotopy_flat
    }

    /// Coordinates of a chain map's homotopy class in the class basis.
    pub fn class_coords(&self, f: &ChainMap) -> Vec<Scalar> {
        assert_eq!(f.rel, self.rel, "shift mismatch");
        let flat = f.flatten();
        assert_eq!(flat.len(), self.flat_len, "flattened length mismatch");
        if self.class_idx.is_empty() {
            return Vec::new();
        }
        let class_cols: Vec<Vec<Scalar>> =
            self.class_idx.iter().map(|&i| self.chain_basis[i].flatten()).collect();
        let mut sys = Matrix::from_columns(self.flat_len, &class_cols);
        sys = sys.hcat(&self.homotopy_flat);
        let sol = linalg::solve(&sys, &flat)
            .expect("a chain map must lie in the span of classes and homotopies");
        sol[..self.class_idx.len()].to_vec()
    }

    /// The chain map `sum coords[i] * class_rep(i)`.
    pub fn from_coords(&self, src: &Complex2, dst: &Complex2, coords: &[Scalar]) -> ChainMap {
        assert_eq!(coords.len(), self.class_dim());
        let mut acc = ChainMap::zero(src, dst, self.rel);
        for (i, c) in coords.iter().enumerate() {
            acc = acc.add(&self.class_rep(i).scale(c));
        }
        acc
    }
}

/// Decode a flat parameter vector into a chain map.
fn unflatten(src: &Complex2, dst: &Complex2, rel: i64, flat: &[Scalar]) -> ChainMap {
    let mut cm = ChainMap::zero(src, dst, rel);
    let mut pos = 0;
    for b in &mut cm.blocks {
        for p in &mut b.params {
            let len = p.len();
            p.clone_from_slice(&flat[pos..pos + len]);
            pos += len;
        }
    }
    assert_eq!(pos, flat.len());
    cm
}

/// The chain-map constraint residual; zero iff the parameters form a chain
/// map. Probing this on unit vectors assembles the linear system.
fn constraint_residual(src: &Complex2, dst: &Complex2, cm: &ChainMap) -> Vec<Scalar> {
    let mut out = Vec::new();
    match cm.rel {
        0 => {
            // d_dst . f_sub = f_quot . d_src evaluated on sub generators
            let sub = src.sub.proj();
            let quot = src.quot.proj();
            let f_sub = &cm.blocks[0].params;
            let f_quot = &cm.blocks[1].params;
            for s in 0..sub.summands() {
                let (h, idx) = sub.gen_coord(s);
                let lhs = dst.d.at(h).mul_vec(&f_sub[s]);
                let dcol = src.d.at(h).column(idx);
                let rhs = eval_from_gens(quot, dst.quot.rep(), f_quot, h, &dcol);
                out.extend(lhs.iter().zip(rhs.iter()).map(|(a, b)| a - b));
            }
        }
        -1 => {
            // c . d_src = 0 and d_dst . c = 0
            let sub = src.sub.proj();
            let quot = src.quot.proj();
            let c = &cm.blocks[0].params;
            for s in 0..sub.summands() {
                let (h, idx) = sub.gen_coord(s);
                let dcol = src.d.at(h).column(idx);
                out.extend(eval_from_gens(quot, dst.sub.rep(), c, h, &dcol));
            }
            for t in 0..quot.summands() {
                let h = quot.heads[t];
                out.extend(dst.d.at(h).mul_vec(&c[t]));
            }
        }
        _ => {}
    }
    out
}

/// Flattened parameters of the boundary chain map of a homotopy. Homotopies
/// are parameterized by generator images of degree +1 maps.
fn homotopy_boundaries(src: &Complex2, dst: &Complex2, rel: i64) -> Vec<Vec<Scalar>> {
    let mut out = Vec::new();
    match rel {
        0 => {
            // h: quot(src) -> sub(dst); boundary = (h d_src, d_dst h)
            let quot = src.quot.proj();
            let sub = src.sub.proj();
            for t in 0..quot.summands() {
                let ht = quot.heads[t];
                let dim = dst.sub.rep().dims()[ht - 1];
                for k in 0..dim {
                    let mut eta: Vec<Vec<Scalar>> = (0..quot.summands())
                        .map(|u| vec![Scalar::zero(); dst.sub.rep().dims()[quot.heads[u] - 1]])
                        .collect();
                    eta[t][k] = linalg::scalar(1);
                    let mut boundary = ChainMap::zero(src, dst, 0);
                    for s in 0..sub.summands() {
                        let (h, idx) = sub.gen_coord(s);
                        let dcol = src.d.at(h).column(idx);
                        boundary.blocks[0].params[s] =
                            eval_from_gens(quot, dst.sub.rep(), &eta, h, &dcol);
                    }
                    for u in 0..quot.summands() {
                        let h = quot.heads[u];
                        boundary.blocks[1].params[u] = dst.d.at(h).mul_vec(&eta[u]);
                    }
                    out.push(boundary.flatten());
                }
            }
        }
        1 => {
            // c ~ h d_src + d_dst h' with h: quot(src) -> quot(dst),
            // h': sub(src) -> sub(dst)
            let quot = src.quot.proj();
            let sub = src.sub.proj();
            for t in 0..quot.summands() {
                let ht = quot.heads[t];
                let dim = dst.quot.rep().dims()[ht - 1];
                for k in 0..dim {
                    let mut eta: Vec<Vec<Scalar>> = (0..quot.summands())
                        .map(|u| vec![Scalar::zero(); dst.quot.rep().dims()[quot.heads[u] - 1]])
                        .collect();
                    eta[t][k] = linalg::scalar(1);
                    let mut boundary = ChainMap::zero(src, dst, 1);
                    for s in 0..sub.summands() {
                        let (h, idx) = sub.gen_coord(s);
                        let dcol = src.d.at(h).column(idx);
                        boundary.blocks[0].params[s] =
                            eval_from_gens(quot, dst.quot.rep(), &eta, h, &dcol);
                    }
                    out.push(boundary.flatten());
                }
            }
            for s in 0..sub.summands() {
                let hs = sub.heads[s];
                let dim = dst.sub.rep().dims()[hs - 1];
                for k in 0..dim {
                    let mut boundary = ChainMap::zero(src, dst, 1);
                    let mut v = vec![Scalar::zero(); dim];
                    v[k] = linalg::scalar(1);
                    boundary.blocks[0].params[s] = dst.d.at(hs).mul_vec(&v);
                    out.push(boundary.flatten());
                }
            }
        }
        _ => {}
    }
    out
}

/// Compute the space of chain maps modulo homotopy from `src` to `dst` at
/// relative shift `rel`.
pub fn map_space(_q: &Quiver, src: &Complex2, dst: &Complex2, rel: i64) -> MapSpace {
    let zero = ChainMap::zero(src, dst, rel);
    let flat_len = zero.flatten().len();

    // assemble constraints by probing unit parameter vectors
    let chain_basis: Vec<ChainMap> = if flat_len == 0 {
        Vec::new()
    } else {
        let mut probe_cols = Vec::new();
        let mut residual_len = 0;
        for i in 0..flat_len {
            let mut flat = vec![Scalar::zero(); flat_len];
            flat[i] = linalg::scalar(1);
            let cm = unflatten(src, dst, rel, &flat);
            let r = constraint_residual(src, dst, &cm);
            residual_len = r.len();
            probe_cols.push(r);
        }
        let sys = Matrix::from_columns(residual_len, &probe_cols);
        let kernel = linalg::kernel_basis(&sys);
        (0..kernel.cols())
            .map(|c| unflatten(src, dst, rel, &kernel.column(c)))
            .collect()
    };

    let boundaries = homotopy_boundaries(src, dst, rel);
    let boundary_mat = Matrix::from_columns(flat_len, &boundaries);
    let keep = linalg::extend_to_basis(&Matrix::zero(flat_len, 0), &boundary_mat);
    let homotopy_flat = Matrix::from_columns(
        flat_len,
        &keep.iter().map(|&c| boundary_mat.column(c)).collect::<Vec<_>>(),
    );

    // pick chain basis elements extending the homotopy span: their classes
    // form a basis of the quotient
    let chain_flat = Matrix::from_columns(
        flat_len,
        &chain_basis.iter().map(|c| c.flatten()).collect::<Vec<_>>(),
    );
    let class_idx = linalg::extend_to_basis(&homotopy_flat, &chain_flat);

    MapSpace { rel, flat_len, chain_basis, homotopy_flat, class_idx }
}

/// Composition of chain maps `g . f` where `f: src -> mid` and
/// `g: mid -> dst`; the middle complex must have projective terms.
pub fn compose(
    _q: &Quiver,
    src: &Complex2,
    mid: &Complex2,
    dst: &Complex2,
    f: &ChainMap,
    g: &ChainMap,
) -> ChainMap {
    let mut out = ChainMap::zero(src, dst, f.rel + g.rel);
    for fb in &f.blocks {
        for gb in &g.blocks {
            if gb.src_part != fb.dst_part {
                continue;
            }
            let mid_part = mid.part(fb.dst_part).proj();
            let dst_rep = dst.part(gb.dst_part).rep();
            let heads = src.part(fb.src_part).summand_heads().to_vec();
            let vals: Vec<Vec<Scalar>> = (0..heads.len())
                .map(|s| eval_from_gens(mid_part, dst_rep, &gb.params, heads[s], &fb.params[s]))
                .collect();
            let block = out.block_mut(fb.src_part, gb.dst_part);
            for (s, v) in vals.into_iter().enumerate() {
                for (acc, x) in block.params[s].iter_mut().zip(v.iter()) {
                    *acc += x;
                }
            }
        }
    }
    out
}

/// A chain map materialized as full term-to-term morphisms (used for the
/// termwise Nakayama image, whose source terms are injective).
#[derive(Debug, Clone)]
pub struct FullChainMap {
    pub rel: i64,
    pub blocks: Vec<(Part, Part, RepMorphism)>,
}

/// Termwise Nakayama image of a chain map between projective-termed
/// complexes.
pub fn nakayama_chain_map(
    q: &Quiver,
    src: &Complex2,
    dst: &Complex2,
    f: &ChainMap,
) -> FullChainMap {
    let blocks = f
        .blocks
        .iter()
        .map(|b| {
            let full = src
                .part(b.src_part)
                .proj()
                .morphism_from_gens(dst.part(b.dst_part).rep(), &b.params);
            let nu = nakayama_morphism(q, src.part(b.src_part).proj(), dst.part(b.dst_part).proj(), &full);
            (b.src_part, b.dst_part, nu)
        })
        .collect();
    FullChainMap { rel: f.rel, blocks }
}

/// Left-compose a full chain map `full: mid -> dst` with `f: src -> mid`.
pub fn compose_full_left(
    src: &Complex2,
    dst: &Complex2,
    full: &FullChainMap,
    f: &ChainMap,
) -> ChainMap {
    let mut out = ChainMap::zero(src, dst, f.rel + full.rel);
    for fb in &f.blocks {
        for (mp, dp, morph) in &full.blocks {
            if *mp != fb.dst_part {
                continue;
            }
            let heads = src.part(fb.src_part).summand_heads().to_vec();
            let vals: Vec<Vec<Scalar>> = (0..heads.len())
                .map(|s| morph.at(heads[s]).mul_vec(&fb.params[s]))
                .collect();
            let block = out.block_mut(fb.src_part, *dp);
            for (s, v) in vals.into_iter().enumerate() {
                for (acc, x) in block.params[s].iter_mut().zip(v.iter()) {
                    *acc += x;
                }
            }
        }
    }
    out
}
